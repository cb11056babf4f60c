use std::fmt;

use super::{PolyVector, Polynomial};
use crate::ring::Coefficient;

/// Text rendering of polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RenderStyle {
    /// `0.375*y*z - 0.125*y^3*z`
    #[default]
    Ascii,
    /// `0.375yz - 0.125y³z`
    Unicode,
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
const SUBSCRIPTS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

fn digits(n: usize, table: &[char; 10]) -> String {
    n.to_string()
        .bytes()
        .map(|b| table[usize::from(b - b'0')])
        .collect()
}

/// `x, y, z` up to three dimensions, `x1 … xd` (or `x₁ … x_d`) beyond.
fn variable_name(dim: usize, axis: usize, style: RenderStyle) -> String {
    if dim <= 3 {
        return ["x", "y", "z"][axis].to_string();
    }
    match style {
        RenderStyle::Ascii => format!("x{}", axis + 1),
        RenderStyle::Unicode => format!("x{}", digits(axis + 1, &SUBSCRIPTS)),
    }
}

impl<T: Coefficient> Polynomial<T> {
    /// Terms in graded-lexicographic order joined by ` + ` / ` - `.
    pub fn render(&self, style: RenderStyle) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (key, c)) in self.terms().enumerate() {
            let factors: Vec<String> = key
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(axis, &e)| {
                    let name = variable_name(self.dim(), axis, style);
                    match (e, style) {
                        (1, _) => name,
                        (_, RenderStyle::Ascii) => format!("{name}^{e}"),
                        (_, RenderStyle::Unicode) => format!("{name}{}", digits(e as usize, &SUPERSCRIPTS)),
                    }
                })
                .collect();
            let sep = match style {
                RenderStyle::Ascii => "*",
                RenderStyle::Unicode => "",
            };
            let monomial = factors.join(sep);

            let (negative, literal) = c.signed_literal();
            let literal = if c.literal_needs_parens() {
                format!("({literal})")
            } else {
                literal
            };
            let term = if monomial.is_empty() {
                literal
            } else if literal == "1" {
                monomial
            } else {
                format!("{literal}{sep}{monomial}")
            };

            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&term);
        }
        out
    }
}

impl<T: Coefficient> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(RenderStyle::Ascii))
    }
}

impl<T: Coefficient> PolyVector<T> {
    pub fn render(&self, style: RenderStyle) -> String {
        let parts: Vec<String> = self.components().iter().map(|p| p.render(style)).collect();
        format!("({})", parts.join(", "))
    }
}

impl<T: Coefficient> fmt::Display for PolyVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(RenderStyle::Ascii))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Complex, Interval, Rational};

    #[test]
    fn reference_style_rendering() {
        let p = Polynomial::from_terms(
            3,
            [([2u32, 3, 1], 0.25), ([0, 1, 1], 0.375), ([0, 3, 1], -0.125), ([2, 1, 1], -0.375)],
        )
        .unwrap();
        assert_eq!(
            p.render(RenderStyle::Ascii),
            "0.375*y*z - 0.125*y^3*z - 0.375*x^2*y*z + 0.25*x^2*y^3*z"
        );
        assert_eq!(p.render(RenderStyle::Unicode), "0.375yz - 0.125y³z - 0.375x²yz + 0.25x²y³z");
    }

    #[test]
    fn unit_and_negative_leading_coefficients() {
        let p = Polynomial::from_terms(2, [([0u32, 0], -1.0), ([2, 0], 0.5), ([1, 1], 1.0)]).unwrap();
        assert_eq!(p.to_string(), "-1 + x*y + 0.5*x^2");
        let q = Polynomial::from_terms(2, [([0u32, 1], -1.0)]).unwrap();
        assert_eq!(q.to_string(), "-y");
        assert_eq!(Polynomial::<f64>::zero(2).to_string(), "0");
    }

    #[test]
    fn rational_complex_and_interval_coefficients() {
        let r = Polynomial::monomial(&[0, 1, 1], Rational::new(3.into(), 8.into()));
        assert_eq!(r.to_string(), "3/8*y*z");
        let z = Polynomial::monomial(&[2, 1, 0], Complex::new(0.0, -1.0));
        assert_eq!(z.to_string(), "-i*x^2*y");
        let w = Polynomial::from_terms(1, [([0u32], Complex::new(-1.0, 0.0)), ([1], Complex::new(0.5, -2.0))]).unwrap();
        assert_eq!(w.to_string(), "-1 + (0.5-2i)*x");
        let i = Polynomial::monomial(&[1, 0], Interval::new(-2.0, -1.0).unwrap());
        assert_eq!(i.to_string(), "-[1,2]*x");
    }

    #[test]
    fn high_dimensional_names() {
        let p = Polynomial::monomial(&[0, 0, 0, 12], 2.0);
        assert_eq!(p.render(RenderStyle::Ascii), "2*x4^12");
        assert_eq!(p.render(RenderStyle::Unicode), "2x₄¹²");
    }
}
