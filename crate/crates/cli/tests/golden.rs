use std::fs;
use std::path::PathBuf;

use polysol::RenderStyle;
use polysol_cli::{parse_problem, parse_solution, solve_problem, verify_solution, Options, OutputFormat};

const CASES: [&str; 5] = [
    "helmholtz_double",
    "helmholtz_rational",
    "helmholtz_interval",
    "stokes_rational",
    "maxwell_complex",
];

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn solve_text(case: &str, style: RenderStyle) -> String {
    let problem = parse_problem(golden(&format!("{case}.json")).as_bytes()).unwrap();
    let options = Options { style, ..Options::default() };
    let outcome = solve_problem(&problem, &options).unwrap();
    assert_eq!(outcome.exit_code(), 0);
    outcome.output
}

#[test]
fn text_goldens() {
    for case in CASES {
        assert_eq!(solve_text(case, RenderStyle::Ascii), golden(&format!("{case}.txt")), "{case} ascii");
        assert_eq!(
            solve_text(case, RenderStyle::Unicode),
            golden(&format!("{case}.unicode.txt")),
            "{case} unicode"
        );
    }
}

#[test]
fn helmholtz_double_line() {
    assert_eq!(
        solve_text("helmholtz_double", RenderStyle::Ascii).trim_end(),
        "0.375*y*z - 0.125*y^3*z - 0.375*x^2*y*z + 0.25*x^2*y^3*z"
    );
}

#[test]
fn stokes_json_with_verification() {
    let problem = parse_problem(golden("stokes_rational.json").as_bytes()).unwrap();
    let options = Options {
        verify: true,
        format: OutputFormat::Json,
        ..Options::default()
    };
    let outcome = solve_problem(&problem, &options).unwrap();
    assert_eq!(outcome.output, golden("stokes_rational.verify.json"));
    let document = parse_solution(outcome.output.as_bytes()).unwrap();
    let report = document.verification.unwrap();
    assert!(report.exact_zero && report.satisfied);
    assert_eq!(report.constraints["div_u"], "0");
}

#[test]
fn every_case_verifies_from_its_own_json() {
    for case in CASES {
        let problem = parse_problem(golden(&format!("{case}.json")).as_bytes()).unwrap();
        let json = Options {
            format: OutputFormat::Json,
            ..Options::default()
        };
        let written = solve_problem(&problem, &json).unwrap().output;
        let document = parse_solution(written.as_bytes()).unwrap();
        let outcome = verify_solution(&problem, &document, &json).unwrap();
        assert_eq!(outcome.verified, Some(true), "{case}");
        // interval bounds are re-read with outward rounding and may widen
        if document.mode != "interval" {
            let checked = parse_solution(outcome.output.as_bytes()).unwrap();
            assert_eq!(checked.solution, document.solution);
        }
    }
}

#[test]
fn output_is_deterministic() {
    for case in CASES {
        assert_eq!(solve_text(case, RenderStyle::Ascii), solve_text(case, RenderStyle::Ascii));
    }
}
