use std::collections::BTreeMap;

use polysol_cli::{parse_problem, MethodTag, PdeTag, ProblemFile, TermSpec};
use proptest::prelude::*;

fn literal() -> impl Strategy<Value = String> {
    prop_oneof![
        (-20i64..20, 1i64..9).prop_map(|(n, d)| format!("{n}/{d}")),
        (-20i64..20).prop_map(|n| n.to_string()),
        (-99i64..99).prop_map(|n| format!("{}", n as f64 / 8.0)),
        (-5i64..5, -5i64..5).prop_map(|(a, b)| format!("{a}{b:+}i")),
        Just("pi".to_string()),
        Just("[0.1,0.2]".to_string()),
    ]
}

fn terms(dim: usize) -> impl Strategy<Value = Vec<TermSpec>> {
    proptest::collection::vec(
        (proptest::collection::vec(0u32..5, dim), literal()).prop_map(|(exp, coef)| TermSpec { exp, coef }),
        0..4,
    )
}

fn problem() -> impl Strategy<Value = ProblemFile> {
    (1usize..4, proptest::sample::select(PdeTag::ALL.to_vec()), any::<bool>()).prop_flat_map(|(dim, pde, with_mode)| {
        let components = if pde.is_vector() { dim } else { 1 };
        let params: BTreeMap<String, String> = pde
            .parameters()
            .iter()
            .map(|(name, default)| (name.to_string(), default.unwrap_or("3/4").to_string()))
            .collect();
        let matrix: Vec<Vec<String>> = (0..dim)
            .map(|r| (0..dim).map(|c| if r == c { "2".into() } else { "0".into() }).collect())
            .collect();
        (
            proptest::collection::vec(terms(dim), components),
            terms(dim),
            proptest::option::of(terms(dim)),
        )
            .prop_map(move |(rhs, operator, charge)| ProblemFile {
                dim,
                pde,
                params: params.clone(),
                rhs,
                mode: with_mode.then_some(polysol::ring::Mode::ComplexRational),
                operator: (pde == PdeTag::ZerothOrder).then_some(operator),
                matrices: match pde {
                    PdeTag::AnisotropicPoisson => Some(vec![matrix.clone()]),
                    PdeTag::FactorizedAnisotropic => Some(vec![matrix.clone(), matrix.clone()]),
                    _ => None,
                },
                charge: if pde == PdeTag::Maxwell { charge } else { None },
                method: (pde == PdeTag::Bilaplace).then_some(MethodTag::Direct),
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn problem_files_round_trip(p in problem()) {
        let text = p.to_json();
        let parsed = parse_problem(text.as_bytes()).unwrap();
        prop_assert_eq!(&parsed, &p);
        prop_assert_eq!(parsed.to_json(), text);
    }
}
