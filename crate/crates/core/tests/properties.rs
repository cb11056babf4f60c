mod common;

use common::*;
use num_traits::{One, Zero};
use polysol::helmholtz::*;
use polysol::laplace::*;
use polysol::ring::{promote, Scalar};
use polysol::{Coefficient, Complex, Degree, Interval, MultiIndex, PdoSpec, PolyVector, Polynomial, Rational};
use proptest::prelude::*;

fn euler_operator(h: &Polynomial<Rational>) -> Polynomial<Rational> {
    (0..h.dim()).fold(Polynomial::zero(h.dim()), |acc, i| {
        let xi = Polynomial::variable(h.dim(), i).unwrap();
        &acc + &(&xi * &h.partial_derivative(i, 1).unwrap())
    })
}

fn to_interval(p: &Polynomial<Rational>) -> Polynomial<Interval> {
    p.map_coefficients(Interval::enclose)
}

fn encloses(inner: &Polynomial<Rational>, outer: &Polynomial<Interval>) -> bool {
    inner.terms().all(|(m, c)| {
        outer
            .coefficient(m.exponents())
            .is_some_and(|iv| iv.contains_rational(c))
    }) && outer
        .terms()
        .all(|(m, iv)| inner.coefficient(m.exponents()).is_some() || iv.contains(0.0))
}

fn vector_degree<T: Coefficient>(v: &PolyVector<T>) -> Degree {
    v.components().iter().map(Polynomial::degree).max().unwrap_or(Degree::NegInfinity)
}

fn bounded_by(d: Degree, base: Degree, extra: u32) -> bool {
    match (d, base) {
        (Degree::NegInfinity, _) => true,
        (Degree::Finite(_), Degree::NegInfinity) => false,
        (Degree::Finite(a), Degree::Finite(b)) => a <= b + extra,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_laws(p in rational_poly(3, 4, 5), r in rational_poly(3, 4, 5), s in rational_poly(3, 4, 5)) {
        prop_assert_eq!(&(&p + &r) + &s, &p + &(&r + &s));
        prop_assert_eq!(&p + &r, &r + &p);
        prop_assert_eq!(&(&p * &r) * &s, &p * &(&r * &s));
        prop_assert_eq!(&p * &r, &r * &p);
        prop_assert_eq!(&p * &(&r + &s), &(&p * &r) + &(&p * &s));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &Polynomial::constant(3, Rational::one()), p.clone());
    }

    #[test]
    fn no_stored_zeros(p in rational_poly(2, 5, 6), r in rational_poly(2, 5, 6)) {
        for out in [&p + &r, &p - &r, &p * &r, p.laplacian(1), p.partial_derivative(1, 2).unwrap()] {
            prop_assert!(out.terms().all(|(_, c)| !c.is_zero()));
            let rebuilt = Polynomial::from_terms(2, out.terms().map(|(m, c)| (m.clone(), c.clone()))).unwrap();
            prop_assert_eq!(rebuilt, out);
        }
    }

    #[test]
    fn leibniz(p in rational_poly(3, 4, 4), r in rational_poly(3, 4, 4), axis in 0usize..3) {
        let lhs = (&p * &r).partial_derivative(axis, 1).unwrap();
        let rhs = &(&p * &r.partial_derivative(axis, 1).unwrap()) + &(&r * &p.partial_derivative(axis, 1).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn laplacian_nilpotency(p in rational_poly(3, 9, 5)) {
        if let Some(n) = p.degree().finite() {
            prop_assert!(p.laplacian(n / 2 + 1).is_zero());
            let m = p.nilpotency_index().unwrap();
            prop_assert!(m <= n / 2);
            prop_assert!(!p.laplacian(m).is_zero());
        }
    }

    #[test]
    fn euler_identity_and_round_trip(p in rational_poly(3, 7, 6)) {
        let parts = p.homogeneous_decomposition();
        let mut sum = Polynomial::zero(3);
        for (n, h) in &parts {
            prop_assert_eq!(h.homogeneous_degree(), Some(*n));
            prop_assert_eq!(euler_operator(h), h.scale(&q(i64::from(*n), 1)));
            sum = &sum + h;
        }
        prop_assert_eq!(sum, p);
    }

    #[test]
    fn laplacian_symbol_matches(p in rational_poly(3, 7, 6)) {
        prop_assert_eq!(PdoSpec::laplacian(3).apply(&p).unwrap(), p.laplacian(1));
    }

    #[test]
    fn rational_cross_multiplication(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
        prop_assert_eq!(q(a, b) + q(c, d), q(a * d + c * b, b * d));
    }

    #[test]
    fn promotion_coherence(a in rational(), b in rational()) {
        let (sa, sb) = (Scalar::Rational(a.clone()), Scalar::Rational(b.clone()));
        let sum = Scalar::Rational(&a + &b);
        let prod = Scalar::Rational(&a * &b);

        let r = |s: &Scalar| promote::<Rational>(s).unwrap();
        prop_assert_eq!(r(&sa) + r(&sb), r(&sum));
        prop_assert_eq!(r(&sa) * r(&sb), r(&prod));

        let c = |s: &Scalar| promote::<Complex<Rational>>(s).unwrap();
        prop_assert_eq!(c(&sa) * c(&sb), c(&prod));

        let f = |s: &Scalar| promote::<f64>(s).unwrap();
        let exact = f(&sum);
        prop_assert!((f(&sa) + f(&sb) - exact).abs() <= 4.0 * f64::EPSILON * exact.abs().max(1.0));

        let i = |s: &Scalar| promote::<Interval>(s).unwrap();
        prop_assert!((i(&sa) + i(&sb)).contains_rational(&(&a + &b)));
        prop_assert!((i(&sa) * i(&sb)).contains_rational(&(&a * &b)));
    }

    #[test]
    fn interval_solves_enclose_rational(f in rational_poly(3, 6, 4), k in nonzero_rational()) {
        let exact = solve_helmholtz(&f, &HelmholtzParams { k: k.clone() }).unwrap();
        let enclosed = solve_helmholtz(&to_interval(&f), &HelmholtzParams { k: Interval::enclose(&k) }).unwrap();
        prop_assert!(encloses(&exact, &enclosed));

        let exact = solve_poisson(&f).unwrap();
        let enclosed = solve_poisson(&to_interval(&f)).unwrap();
        prop_assert!(encloses(&exact, &enclosed));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn helmholtz_linearity_and_degree(
        f in rational_poly(3, 8, 4),
        g in rational_poly(3, 8, 4),
        a in rational(),
        b in rational(),
        k in nonzero_rational(),
    ) {
        let params = HelmholtzParams { k };
        let solve = |p: &Polynomial<Rational>| solve_helmholtz(p, &params).unwrap();
        let combo = &f.scale(&a) + &g.scale(&b);
        prop_assert_eq!(solve(&combo), &solve(&f).scale(&a) + &solve(&g).scale(&b));
        prop_assert_eq!(solve(&f).degree(), f.degree());
    }

    #[test]
    fn laplace_family_linearity(f in rational_poly(2, 8, 4), g in rational_poly(2, 8, 4), a in rational(), b in rational()) {
        let combo = &f.scale(&a) + &g.scale(&b);
        let poisson = |p: &Polynomial<Rational>| solve_poisson(p).unwrap();
        prop_assert_eq!(poisson(&combo), &poisson(&f).scale(&a) + &poisson(&g).scale(&b));
        for method in [BilaplaceMethod::Iterated, BilaplaceMethod::Direct] {
            let bl = |p: &Polynomial<Rational>| solve_bilaplace(p, method).unwrap();
            prop_assert_eq!(bl(&combo), &bl(&f).scale(&a) + &bl(&g).scale(&b));
        }
    }

    #[test]
    fn laplace_family_degree_bounds(f in rational_vector(3, 3, 7, 4), nu in prop_oneof![Just(q(1, 3)), Just(q(1, 4))]) {
        let fd = vector_degree(&f);
        let scalar = f.component(0);
        prop_assert!(bounded_by(solve_poisson(scalar).unwrap().degree(), scalar.degree(), 2));
        for method in [BilaplaceMethod::Iterated, BilaplaceMethod::Direct] {
            prop_assert!(bounded_by(solve_bilaplace(scalar, method).unwrap().degree(), scalar.degree(), 4));
        }
        let u = solve_elastostatics(&f, &ElastostaticsParams { nu, mu: q(1, 1) }).unwrap();
        prop_assert!(bounded_by(vector_degree(&u), fd, 2));
        let sol = solve_stokes(&f, &StokesParams { mu: q(5, 3) }).unwrap();
        prop_assert!(bounded_by(vector_degree(&sol.u), fd, 2));
        prop_assert!(bounded_by(sol.p.degree(), fd, 1));
        prop_assert!(sol.u.divergence().unwrap().is_zero());
    }

    #[test]
    fn homogeneous_poisson_output(f in rational_poly(3, 8, 5)) {
        for (n, h) in f.homogeneous_decomposition() {
            let u = solve_poisson_homogeneous(&h).unwrap();
            prop_assert!(u.terms().all(|(m, _)| m.order() == n + 2));
            prop_assert_eq!(u.laplacian(1), h);
        }
    }

    #[test]
    fn identity_anisotropy_reduces_to_poisson(f in rational_poly(3, 8, 5)) {
        let a = AnisotropyMatrix::identity(3);
        prop_assert_eq!(solve_anisotropic_poisson(&f, &a).unwrap(), solve_poisson(&f).unwrap());
    }

    #[test]
    fn bilaplace_methods_differ_by_biharmonic(f in rational_poly(3, 8, 5)) {
        let it = solve_bilaplace(&f, BilaplaceMethod::Iterated).unwrap();
        let di = solve_bilaplace(&f, BilaplaceMethod::Direct).unwrap();
        prop_assert!((&it - &di).laplacian(2).is_zero());
    }

    #[test]
    fn zeroth_order_laplacian_is_helmholtz(f in rational_poly(3, 8, 5), k in nonzero_rational()) {
        let helm = solve_helmholtz(&f, &HelmholtzParams { k: k.clone() }).unwrap();
        let zo = solve_zeroth_order(&f, &ZerothOrderParams { alpha: &k * &k, op: PdoSpec::laplacian(3) }).unwrap();
        prop_assert_eq!(helm, zo);
    }

    #[test]
    fn maxwell_degrees_and_gauge(
        j in proptest::collection::vec(complex_rational_poly(3, 6, 3), 3),
        mu in positive_rational(),
        omega in positive_rational(),
    ) {
        let j = PolyVector::new(j).unwrap();
        let c = |x: Rational| Complex::new(x, Rational::zero());
        let params = MaxwellParams { eps: c(q(1, 1)), mu: c(mu), omega: c(omega) };
        let sol = solve_maxwell(&j, &params, None).unwrap();
        let n = vector_degree(&j);
        prop_assert!(bounded_by(vector_degree(&sol.e), n, 0));
        match n {
            Degree::Finite(n) if n >= 1 => prop_assert!(bounded_by(vector_degree(&sol.h), Degree::Finite(n - 1), 0)),
            _ => prop_assert!(sol.h.is_zero()),
        }
        let i_omega = Complex::new(Rational::zero(), params.omega.re.clone());
        let gauge = &sol.a.divergence().unwrap() - &sol.phi.scale(&(i_omega * params.eps.clone() * params.mu.clone()));
        prop_assert!(gauge.is_zero());
    }
}

#[test]
fn multi_index_graded_lex() {
    let mut keys: Vec<MultiIndex> = vec![[2u32, 3, 1].into(), [0, 1, 1].into(), [2, 1, 1].into(), [0, 3, 1].into()];
    keys.sort();
    let expected: Vec<MultiIndex> = vec![[0u32, 1, 1].into(), [0, 3, 1].into(), [2, 1, 1].into(), [2, 3, 1].into()];
    assert_eq!(keys, expected);
}
