use std::collections::BTreeMap;
use std::fmt::Write as _;

use polysol::ring::Mode;
use polysol::verify::ResidualReport;
use polysol::{Coefficient, Field, PolyVector, Polynomial, RenderStyle, Solution};
use serde::{Deserialize, Serialize};

use crate::problem::{PdeTag, ProblemFile, TermSpec};
use crate::{Options, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Named fields, each a list of components given as term lists.
pub type TermMap = BTreeMap<String, Vec<Vec<TermSpec>>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionDocument {
    pub pde: PdeTag,
    pub mode: String,
    pub dim: usize,
    pub solution: TermMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationDocument>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationDocument {
    pub exact_zero: bool,
    pub satisfied: bool,
    pub max_coeff_magnitude: f64,
    pub residual: Vec<Vec<TermSpec>>,
    /// Side conditions such as `div_u`, rendered as ASCII polynomials.
    #[serde(default)]
    pub constraints: BTreeMap<String, String>,
}

fn terms<T: Coefficient>(p: &Polynomial<T>) -> Vec<TermSpec> {
    p.terms()
        .map(|(m, c)| TermSpec {
            exp: m.exponents().to_vec(),
            coef: c.to_literal(),
        })
        .collect()
}

fn vector_terms<T: Coefficient>(v: &PolyVector<T>) -> Vec<Vec<TermSpec>> {
    v.components().iter().map(terms).collect()
}

fn field_terms<T: Coefficient>(f: &Field<T>) -> Vec<Vec<TermSpec>> {
    f.components().iter().map(terms).collect()
}

fn solution_terms<T: Coefficient>(solution: &Solution<T>) -> TermMap {
    let mut map = TermMap::new();
    match solution {
        Solution::Scalar(p) => {
            map.insert("u".into(), vec![terms(p)]);
        }
        Solution::Vector(v) => {
            map.insert("u".into(), vector_terms(v));
        }
        Solution::Stokes { u, p } => {
            map.insert("u".into(), vector_terms(u));
            map.insert("p".into(), vec![terms(p)]);
        }
        Solution::Maxwell { e, h, potentials } => {
            map.insert("E".into(), vector_terms(e));
            map.insert("H".into(), vector_terms(h));
            if let Some((a, phi)) = potentials {
                map.insert("A".into(), vector_terms(a));
                map.insert("phi".into(), vec![terms(phi)]);
            }
        }
    }
    map
}

fn solution_lines<T: Coefficient>(solution: &Solution<T>, style: RenderStyle) -> Vec<String> {
    match solution {
        Solution::Scalar(p) => vec![p.render(style)],
        Solution::Vector(v) => vec![v.render(style)],
        Solution::Stokes { u, p } => vec![format!("u = {}", u.render(style)), format!("p = {}", p.render(style))],
        Solution::Maxwell { e, h, .. } => vec![format!("E = {}", e.render(style)), format!("H = {}", h.render(style))],
    }
}

fn verdict<T: Coefficient>(report: &ResidualReport<T>) -> String {
    if report.exact_zero {
        "verified: residual is exactly zero".to_string()
    } else if report.is_satisfied() {
        format!("verified: max residual coefficient {:e}", report.max_coeff_magnitude)
    } else {
        format!("verification FAILED: max residual coefficient {:e}", report.max_coeff_magnitude)
    }
}

pub(crate) fn render<T: Coefficient>(
    problem: &ProblemFile,
    mode: Mode,
    solution: &Solution<T>,
    report: Option<&ResidualReport<T>>,
    options: &Options,
) -> Outcome {
    let verified = report.map(ResidualReport::is_satisfied);
    let output = match options.format {
        OutputFormat::Text => {
            let mut out = String::new();
            for line in solution_lines(solution, options.style) {
                writeln!(out, "{line}").unwrap();
            }
            if let Some(report) = report {
                writeln!(out, "residual = {}", report.residual.render(options.style)).unwrap();
                for (name, field) in &report.constraint_residuals {
                    writeln!(out, "{name} = {}", field.render(options.style)).unwrap();
                }
                writeln!(out, "{}", verdict(report)).unwrap();
            }
            out
        }
        OutputFormat::Json => {
            let document = SolutionDocument {
                pde: problem.pde,
                mode: mode.as_str().to_string(),
                dim: problem.dim,
                solution: solution_terms(solution),
                verification: report.map(|r| VerificationDocument {
                    exact_zero: r.exact_zero,
                    satisfied: r.is_satisfied(),
                    max_coeff_magnitude: r.max_coeff_magnitude,
                    residual: field_terms(&r.residual),
                    constraints: r
                        .constraint_residuals
                        .iter()
                        .map(|(name, f)| (name.clone(), f.render(RenderStyle::Ascii)))
                        .collect(),
                }),
            };
            let mut out = serde_json::to_string(&document).expect("solution documents serialize");
            out.push('\n');
            out
        }
    };
    Outcome { output, verified }
}
