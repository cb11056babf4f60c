use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Exponent tuple of a monomial `x_1^a_1 ⋯ x_d^a_d`.
///
/// Ordered graded-lexicographically: by total degree first, then
/// lexicographically by exponents. That order is the canonical iteration and
/// printing order of [`Polynomial`](super::Polynomial).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(SmallVec<[u32; 4]>);

impl MultiIndex {
    pub fn new(exponents: &[u32]) -> Self {
        MultiIndex(SmallVec::from_slice(exponents))
    }

    pub fn zeros(dim: usize) -> Self {
        MultiIndex(SmallVec::from_elem(0, dim))
    }

    /// The exponent of the single variable `axis`.
    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut m = Self::zeros(dim);
        m.0[axis] = 1;
        m
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Total degree `|α|`.
    pub fn order(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, axis: usize) -> u32 {
        self.0[axis]
    }

    /// Exponents of the monomial product.
    pub fn product(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` componentwise, if `other ≤ self` in every component.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<SmallVec<_>>>()
            .map(MultiIndex)
    }

    pub(crate) fn with_axis(&self, axis: usize, value: u32) -> MultiIndex {
        let mut m = self.clone();
        m.0[axis] = value;
        m
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl From<&[u32]> for MultiIndex {
    fn from(exponents: &[u32]) -> Self {
        MultiIndex::new(exponents)
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents.into())
    }
}

impl<const N: usize> From<[u32; N]> for MultiIndex {
    fn from(exponents: [u32; N]) -> Self {
        MultiIndex::new(&exponents)
    }
}
