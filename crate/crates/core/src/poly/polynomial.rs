use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};


use super::{MultiIndex, PolyError, PolyVector};
use crate::ring::{Coefficient, RingError};

/// Total degree of a polynomial. The zero polynomial has degree `-∞`, which
/// orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(n) => Some(n),
        }
    }
}

/// Sparse multivariate polynomial in `dim` variables with coefficients in `T`.
///
/// Terms are kept in a map from [`MultiIndex`] to coefficient, iterated in
/// graded-lexicographic order. The map never stores a coefficient for which
/// `Zero::is_zero` holds.
#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<T> {
    dim: usize,
    terms: BTreeMap<MultiIndex, T>,
}

/// Product of falling factorials `Π e_i (e_i - 1) ⋯ (e_i - k_i + 1)`.
pub(crate) fn falling_factorial(exponent: u32, count: u32) -> u128 {
    (0..count).map(|j| u128::from(exponent - j)).product()
}

fn accumulate<T: Coefficient>(terms: &mut BTreeMap<MultiIndex, T>, key: MultiIndex, value: T) {
    match terms.entry(key) {
        Entry::Vacant(slot) => {
            slot.insert(value);
        }
        Entry::Occupied(mut slot) => {
            let sum = slot.get().clone() + value;
            *slot.get_mut() = sum;
        }
    }
}

impl<T: Coefficient> Polynomial<T> {
    pub fn zero(dim: usize) -> Self {
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: T) -> Self {
        Self::from_map(dim, BTreeMap::from([(MultiIndex::zeros(dim), c)]))
    }

    /// The coordinate function `x_axis`.
    pub fn variable(dim: usize, axis: usize) -> Result<Self, PolyError> {
        if axis >= dim {
            return Err(PolyError::AxisOutOfRange { axis, dim });
        }
        Ok(Self::from_map(dim, BTreeMap::from([(MultiIndex::unit(dim, axis), T::one())])))
    }

    /// Single term `c · x^exponents`; the dimension is the exponent length.
    pub fn monomial(exponents: &[u32], c: T) -> Self {
        Self::from_map(exponents.len(), BTreeMap::from([(MultiIndex::new(exponents), c)]))
    }

    /// Build from `(exponents, coefficient)` pairs. Repeated exponents are summed.
    pub fn from_terms<I, K>(dim: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (K, T)>,
        K: Into<MultiIndex>,
    {
        let mut map = BTreeMap::new();
        for (key, c) in terms {
            let key = key.into();
            if key.dim() != dim {
                return Err(PolyError::ExponentLength {
                    expected: dim,
                    found: key.dim(),
                });
            }
            accumulate(&mut map, key, c);
        }
        Ok(Self::from_map(dim, map))
    }

    fn from_map(dim: usize, mut terms: BTreeMap<MultiIndex, T>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Polynomial { dim, terms }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Terms in graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &T)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Option<&T> {
        self.terms.get(&MultiIndex::new(exponents))
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(MultiIndex::order)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// `Some(n)` if every term has total degree `n`. The zero polynomial is
    /// not assigned a degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut orders = self.terms.keys().map(MultiIndex::order);
        let first = orders.next()?;
        orders.all(|o| o == first).then_some(first)
    }

    pub fn map_coefficients<U: Coefficient>(&self, mut f: impl FnMut(&T) -> U) -> Polynomial<U> {
        Polynomial::from_map(
            self.dim,
            self.terms.iter().map(|(k, c)| (k.clone(), f(c))).collect(),
        )
    }

    pub fn try_map_coefficients<U: Coefficient, E>(
        &self,
        mut f: impl FnMut(&T) -> Result<U, E>,
    ) -> Result<Polynomial<U>, E> {
        let mut map = BTreeMap::new();
        for (k, c) in &self.terms {
            map.insert(k.clone(), f(c)?);
        }
        Ok(Polynomial::from_map(self.dim, map))
    }

    fn check_dim(&self, other: &Self) -> Result<(), PolyError> {
        if self.dim != other.dim {
            return Err(PolyError::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_dim(other)?;
        let mut map = self.terms.clone();
        for (k, c) in &other.terms {
            accumulate(&mut map, k.clone(), c.clone());
        }
        Ok(Self::from_map(self.dim, map))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_dim(other)?;
        let mut map = self.terms.clone();
        for (k, c) in &other.terms {
            accumulate(&mut map, k.clone(), -c.clone());
        }
        Ok(Self::from_map(self.dim, map))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_dim(other)?;
        let mut map = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                accumulate(&mut map, a.product(b), ca.clone() * cb.clone());
            }
        }
        Ok(Self::from_map(self.dim, map))
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map_coefficients(|x| x.clone() * c.clone())
    }

    /// Divide every coefficient by `c`.
    pub fn try_div_scalar(&self, c: &T) -> Result<Self, RingError> {
        if c.contains_zero() {
            // Surface the ring's own error (plain zero vs interval containing zero).
            c.try_recip()?;
        }
        self.try_map_coefficients(|x| x.try_div(c))
    }

    /// `self^n` by repeated multiplication.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(self.dim, T::one());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `∂^order p / ∂x_axis^order` (0-based axis).
    pub fn partial_derivative(&self, axis: usize, order: u32) -> Result<Self, PolyError> {
        if axis >= self.dim {
            return Err(PolyError::AxisOutOfRange { axis, dim: self.dim });
        }
        let mut map = BTreeMap::new();
        for (k, c) in &self.terms {
            let e = k.get(axis);
            if e < order {
                continue;
            }
            accumulate(
                &mut map,
                k.with_axis(axis, e - order),
                c.mul_u128(falling_factorial(e, order)),
            );
        }
        Ok(Self::from_map(self.dim, map))
    }

    /// `Δ^iterations p` with `Δ = Σ ∂_i²`. Zero iterations return `p`.
    pub fn laplacian(&self, iterations: u32) -> Self {
        let mut p = self.clone();
        for _ in 0..iterations {
            if p.is_zero() {
                break;
            }
            p = p.laplacian_once();
        }
        p
    }

    fn laplacian_once(&self) -> Self {
        let mut map = BTreeMap::new();
        for (k, c) in &self.terms {
            for axis in 0..self.dim {
                let e = k.get(axis);
                if e >= 2 {
                    accumulate(
                        &mut map,
                        k.with_axis(axis, e - 2),
                        c.mul_u128(u128::from(e) * u128::from(e - 1)),
                    );
                }
            }
        }
        Self::from_map(self.dim, map)
    }

    /// Iterated Laplacians `[p, Δp, Δ²p, …]` up to the last nonzero one.
    /// Empty for the zero polynomial.
    pub fn laplacian_chain(&self) -> Vec<Self> {
        let mut chain = Vec::new();
        let mut p = self.clone();
        while !p.is_zero() {
            let next = p.laplacian_once();
            chain.push(p);
            p = next;
        }
        chain
    }

    /// Smallest `m` with `Δ^{m+1} p = 0`; `None` for the zero polynomial.
    pub fn nilpotency_index(&self) -> Option<u32> {
        let len = self.laplacian_chain().len();
        (len > 0).then(|| len as u32 - 1)
    }

    pub fn gradient(&self) -> PolyVector<T> {
        let components = (0..self.dim)
            .map(|axis| self.partial_derivative(axis, 1).expect("axis in range"))
            .collect();
        PolyVector::from_components_unchecked(components)
    }

    /// Parts `(n, h_n)` with `h_n` holding exactly the terms of total degree
    /// `n`, ascending in `n`. Degrees without terms are omitted.
    pub fn homogeneous_decomposition(&self) -> Vec<(u32, Self)> {
        let mut parts: Vec<(u32, Self)> = Vec::new();
        for (k, c) in &self.terms {
            let n = k.order();
            match parts.last_mut() {
                Some((last, part)) if *last == n => {
                    part.terms.insert(k.clone(), c.clone());
                }
                _ => parts.push((n, Self::from_map(self.dim, BTreeMap::from([(k.clone(), c.clone())])))),
            }
        }
        parts
    }

    /// `Σ c_α point^α`, summed in graded-lexicographic term order.
    pub fn evaluate(&self, point: &[T]) -> Result<T, PolyError> {
        if point.len() != self.dim {
            return Err(PolyError::PointLength {
                expected: self.dim,
                found: point.len(),
            });
        }
        let mut sum = T::zero();
        for (k, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(k.exponents()) {
                for _ in 0..e {
                    term = term * x.clone();
                }
            }
            sum = sum + term;
        }
        Ok(sum)
    }

    /// Coefficient of the constant term (zero if absent).
    pub fn constant_term(&self) -> T {
        self.terms
            .get(&MultiIndex::zeros(self.dim))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// Largest coefficient magnitude; 0 for the zero polynomial.
    pub fn max_coefficient_magnitude(&self) -> f64 {
        self.terms.values().map(Coefficient::magnitude).fold(0.0, f64::max)
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $fallible:ident) => {
        /// # Panics
        ///
        /// Panics if the operands have different dimensions.
        impl<T: Coefficient> $trait<&Polynomial<T>> for &Polynomial<T> {
            type Output = Polynomial<T>;

            fn $method(self, rhs: &Polynomial<T>) -> Polynomial<T> {
                match self.$fallible(rhs) {
                    Ok(p) => p,
                    Err(e) => panic!("{e}"),
                }
            }
        }

        impl<T: Coefficient> $trait<Polynomial<T>> for Polynomial<T> {
            type Output = Polynomial<T>;

            fn $method(self, rhs: Polynomial<T>) -> Polynomial<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

binary_op!(Add, add, try_add);
binary_op!(Sub, sub, try_sub);
binary_op!(Mul, mul, try_mul);

impl<T: Coefficient> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        self.map_coefficients(|c| -c.clone())
    }
}

impl<T: Coefficient> Neg for Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rational;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn rp(dim: usize, terms: &[(&[u32], i64)]) -> Polynomial<Rational> {
        Polynomial::from_terms(dim, terms.iter().map(|(e, c)| (*e, q(*c, 1)))).unwrap()
    }

    fn x2y3z() -> Polynomial<Rational> {
        rp(3, &[(&[2, 3, 1], 1)])
    }

    #[test]
    fn additive_inverse_is_empty() {
        let p = rp(2, &[(&[2, 0], 1)]);
        let z = &p + &(-&p);
        assert!(z.is_zero());
        assert_eq!(z.len(), 0);
        assert_eq!(z.degree(), Degree::NegInfinity);
    }

    #[test]
    fn difference_of_squares() {
        let a = rp(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = rp(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(&a * &b, rp(2, &[(&[2, 0], 1), (&[0, 2], -1)]));
    }

    #[test]
    fn scale_by_quarter() {
        let p = x2y3z().scale(&q(1, 4));
        assert_eq!(p.coefficient(&[2, 3, 1]), Some(&q(1, 4)));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = rp(2, &[(&[1, 0], 1)]);
        let b = rp(3, &[(&[1, 0, 0], 1)]);
        assert_eq!(a.try_add(&b), Err(PolyError::DimensionMismatch { left: 2, right: 3 }));
        assert!(a.try_mul(&b).is_err());
        assert!(a.try_sub(&b).is_err());
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn operator_panics_on_mismatch() {
        let _ = rp(2, &[(&[1, 0], 1)]) + rp(3, &[(&[1, 0, 0], 1)]);
    }

    #[test]
    fn exponent_length_checked() {
        let r = Polynomial::from_terms(3, [(&[2u32, 3][..], q(1, 1))]);
        assert_eq!(r, Err(PolyError::ExponentLength { expected: 3, found: 2 }));
    }

    #[test]
    fn power_rule() {
        let d = x2y3z().partial_derivative(0, 1).unwrap();
        assert_eq!(d, rp(3, &[(&[1, 3, 1], 2)]));
        let absent = rp(3, &[(&[2, 1, 0], 1)]).partial_derivative(2, 1).unwrap();
        assert!(absent.is_zero());
        let y4 = rp(2, &[(&[0, 4], 1)]).partial_derivative(1, 2).unwrap();
        assert_eq!(y4, rp(2, &[(&[0, 2], 12)]));
        assert_eq!(
            x2y3z().partial_derivative(3, 1),
            Err(PolyError::AxisOutOfRange { axis: 3, dim: 3 })
        );
    }

    #[test]
    fn laplacian_examples() {
        assert_eq!(x2y3z().laplacian(1), rp(3, &[(&[0, 3, 1], 2), (&[2, 1, 1], 6)]));
        assert_eq!(x2y3z().laplacian(2), rp(3, &[(&[0, 1, 1], 24)]));
        assert!(rp(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], 1)]).laplacian(1).is_zero());
        assert_eq!(x2y3z().nilpotency_index(), Some(2));
        assert_eq!(Polynomial::<Rational>::zero(3).nilpotency_index(), None);
    }

    #[test]
    fn decomposition_examples() {
        let p = rp(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[1, 0], 1), (&[0, 0], 3)]);
        let parts = p.homogeneous_decomposition();
        assert_eq!(
            parts,
            vec![
                (0, rp(2, &[(&[0, 0], 3)])),
                (1, rp(2, &[(&[1, 0], 1)])),
                (2, rp(2, &[(&[2, 0], 1), (&[1, 1], 1)])),
            ]
        );
        assert_eq!(x2y3z().homogeneous_decomposition(), vec![(6, x2y3z())]);
        assert!(Polynomial::<Rational>::zero(2).homogeneous_decomposition().is_empty());
    }

    #[test]
    fn evaluation() {
        let p = rp(2, &[(&[2, 0], 1), (&[0, 1], -1)]);
        assert_eq!(p.evaluate(&[q(2, 1), q(1, 1)]).unwrap(), q(3, 1));
        assert_eq!(Polynomial::<Rational>::zero(2).evaluate(&[q(5, 1), q(7, 1)]).unwrap(), q(0, 1));
        let term = Polynomial::monomial(&[2, 3, 1], 0.25f64);
        assert_eq!(term.evaluate(&[1.0, 1.0, 1.0]).unwrap(), 0.25);
        assert!(p.evaluate(&[q(1, 1)]).is_err());
    }

    #[test]
    fn degree_and_homogeneity() {
        assert_eq!(x2y3z().degree(), Degree::Finite(6));
        assert_eq!(x2y3z().homogeneous_degree(), Some(6));
        assert_eq!(rp(2, &[(&[1, 0], 1), (&[0, 0], 1)]).homogeneous_degree(), None);
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn zero_coefficients_are_pruned_on_construction() {
        let p = Polynomial::from_terms(1, [([1u32], 0.0f64), ([2], 1.0), ([2], -1.0)]).unwrap();
        assert!(p.is_zero());
    }
}
