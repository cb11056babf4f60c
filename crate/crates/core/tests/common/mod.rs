#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

use polysol::laplace::AnisotropyMatrix;
use polysol::{Complex, PolyVector, Polynomial, Rational};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| q(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (prop_oneof![-20i64..=-1, 1i64..=20], 1i64..=9).prop_map(|(n, d)| q(n, d))
}

pub fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=20, 1i64..=9).prop_map(|(n, d)| q(n, d))
}

/// Exponent vector of total degree at most `max_degree`.
pub fn exponents(dim: usize, max_degree: u32) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0..=max_degree, dim).prop_map(move |mut e| {
        while e.iter().sum::<u32>() > max_degree {
            let i = (0..e.len()).max_by_key(|&i| e[i]).unwrap();
            e[i] -= 1;
        }
        e
    })
}

pub fn poly_with<T: std::fmt::Debug + Clone + 'static>(
    dim: usize,
    max_degree: u32,
    max_terms: usize,
    coeff: impl Strategy<Value = T> + 'static,
) -> impl Strategy<Value = Vec<(Vec<u32>, T)>> {
    proptest::collection::vec((exponents(dim, max_degree), coeff), 0..=max_terms)
}

pub fn rational_poly(dim: usize, max_degree: u32, max_terms: usize) -> impl Strategy<Value = Polynomial<Rational>> {
    poly_with(dim, max_degree, max_terms, rational())
        .prop_map(move |terms| Polynomial::from_terms(dim, terms).unwrap())
}

pub fn rational_vector(
    dim: usize,
    count: usize,
    max_degree: u32,
    max_terms: usize,
) -> impl Strategy<Value = PolyVector<Rational>> {
    proptest::collection::vec(rational_poly(dim, max_degree, max_terms), count)
        .prop_map(|c| PolyVector::new(c).unwrap())
}

pub fn complex_rational_poly(
    dim: usize,
    max_degree: u32,
    max_terms: usize,
) -> impl Strategy<Value = Polynomial<Complex<Rational>>> {
    poly_with(dim, max_degree, max_terms, (rational(), rational()))
        .prop_map(move |terms| {
            Polynomial::from_terms(dim, terms.into_iter().map(|(e, (re, im))| (e, Complex::new(re, im)))).unwrap()
        })
}

pub fn double_poly(dim: usize, max_degree: u32, max_terms: usize) -> impl Strategy<Value = Polynomial<f64>> {
    poly_with(dim, max_degree, max_terms, -8i32..=8)
        .prop_map(move |terms| {
            Polynomial::from_terms(dim, terms.into_iter().map(|(e, c)| (e, f64::from(c) / 4.0))).unwrap()
        })
}

/// `LᵀL + I` with a small integer lower-triangular `L`.
pub fn spd_matrix(dim: usize) -> impl Strategy<Value = AnisotropyMatrix<Rational>> {
    proptest::collection::vec(-3i64..=3, dim * dim).prop_map(move |l| {
        let lower = |i: usize, j: usize| if j <= i { l[i * dim + j] } else { 0 };
        let entries = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        let s: i64 = (0..dim).map(|k| lower(k, i) * lower(k, j)).sum();
                        q(s + i64::from(i == j), 1)
                    })
                    .collect()
            })
            .collect();
        AnisotropyMatrix::new(entries).unwrap()
    })
}

/// Deterministic stream of samples from a strategy.
pub struct Sampler {
    runner: TestRunner,
}

impl Sampler {
    pub fn new() -> Self {
        Sampler {
            runner: TestRunner::deterministic(),
        }
    }

    pub fn draw<S: Strategy>(&mut self, strategy: &S) -> S::Value {
        strategy.new_tree(&mut self.runner).unwrap().current()
    }
}

/// Copy of `p` with the coefficient of its `index`-th term replaced.
pub fn with_coefficient<T: polysol::Coefficient>(p: &Polynomial<T>, index: usize, f: impl Fn(&T) -> T) -> Polynomial<T> {
    let terms = p
        .terms()
        .enumerate()
        .map(|(i, (m, c))| (m.clone(), if i == index { f(c) } else { c.clone() }));
    Polynomial::from_terms(p.dim(), terms).unwrap()
}
