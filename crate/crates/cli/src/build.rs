use polysol::helmholtz::{ElastodynamicsParams, HelmholtzParams, MaxwellParams, ZerothOrderParams};
use polysol::laplace::{AnisotropyMatrix, BilaplaceMethod, ElastostaticsParams, StokesParams};
use polysol::ring::promote;
use polysol::{Coefficient, Field, PdeSpec, PdoSpec, PolyVector, Polynomial, Solution};

use crate::output::SolutionDocument;
use crate::problem::{literal, MethodTag, PdeTag, ProblemFile, TermSpec};
use crate::CliError;

fn parse_error(path: impl Into<String>, message: impl std::fmt::Display) -> CliError {
    CliError::Parse {
        path: path.into(),
        message: message.to_string(),
    }
}

fn scalar<T: Coefficient>(path: &str, text: &str) -> Result<T, CliError> {
    promote::<T>(&literal(path, text)?).map_err(|e| parse_error(path, e))
}

pub(crate) fn poly<T: Coefficient>(path: &str, dim: usize, terms: &[TermSpec]) -> Result<Polynomial<T>, CliError> {
    let mut pairs = Vec::with_capacity(terms.len());
    for (i, t) in terms.iter().enumerate() {
        if t.exp.len() != dim {
            return Err(parse_error(
                format!("{path}[{i}].exp"),
                format!("expected {dim} exponents, got {}", t.exp.len()),
            ));
        }
        pairs.push((t.exp.clone(), scalar::<T>(&format!("{path}[{i}].coef"), &t.coef)?));
    }
    Polynomial::from_terms(dim, pairs).map_err(|e| parse_error(path, e))
}

fn components<T: Coefficient>(
    path: &str,
    dim: usize,
    count: usize,
    lists: &[Vec<TermSpec>],
) -> Result<Vec<Polynomial<T>>, CliError> {
    if lists.len() != count {
        return Err(parse_error(path, format!("expected {count} component(s), got {}", lists.len())));
    }
    lists
        .iter()
        .enumerate()
        .map(|(c, terms)| poly(&format!("{path}[{c}]"), dim, terms))
        .collect()
}

fn param<T: Coefficient>(problem: &ProblemFile, name: &str) -> Result<T, CliError> {
    let path = format!("params.{name}");
    if let Some(text) = problem.params.get(name) {
        return scalar(&path, text);
    }
    match problem.pde.parameters().iter().find(|(n, _)| *n == name) {
        Some((_, Some(default))) => scalar(&path, default),
        _ => Err(parse_error(path, "missing required parameter")),
    }
}

fn matrices<T: Coefficient>(problem: &ProblemFile) -> Result<Vec<AnisotropyMatrix<T>>, CliError> {
    let Some(list) = &problem.matrices else {
        return Err(parse_error("matrices", format!("{} needs conductivity matrices", problem.pde)));
    };
    list.iter()
        .enumerate()
        .map(|(m, rows)| {
            let entries = rows
                .iter()
                .enumerate()
                .map(|(r, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(c, e)| scalar::<T>(&format!("matrices[{m}][{r}][{c}]"), e))
                        .collect::<Result<Vec<T>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let a = AnisotropyMatrix::new(entries)?;
            if a.dim() != problem.dim {
                return Err(parse_error(
                    format!("matrices[{m}]"),
                    format!("expected a {0}x{0} matrix, got {1}x{1}", problem.dim, a.dim()),
                ));
            }
            Ok(a)
        })
        .collect()
}

/// Problem data promoted into the ring `T`.
pub(crate) fn problem<T: Coefficient>(problem: &ProblemFile) -> Result<(PdeSpec<T>, Field<T>), CliError> {
    problem.validate()?;
    let dim = problem.dim;
    let p = |name: &str| param::<T>(problem, name);
    let spec = match problem.pde {
        PdeTag::Helmholtz => PdeSpec::Helmholtz(HelmholtzParams { k: p("k")? }),
        PdeTag::ZerothOrder => {
            let terms = problem.operator.as_deref().unwrap_or_default();
            PdeSpec::ZerothOrder(ZerothOrderParams {
                alpha: p("alpha")?,
                op: PdoSpec::new(poly("operator", dim, terms)?),
            })
        }
        PdeTag::Elastodynamics => PdeSpec::Elastodynamics(ElastodynamicsParams {
            rho_mass: p("rho_mass")?,
            mu: p("mu")?,
            nu: p("nu")?,
            omega: p("omega")?,
        }),
        PdeTag::Maxwell => PdeSpec::Maxwell {
            params: MaxwellParams {
                eps: p("eps")?,
                mu: p("mu")?,
                omega: p("omega")?,
            },
            rho: problem.charge.as_deref().map(|t| poly("charge", dim, t)).transpose()?,
        },
        PdeTag::Poisson => PdeSpec::Poisson,
        PdeTag::Bilaplace => PdeSpec::Bilaplace(match problem.method.unwrap_or_default() {
            MethodTag::Iterated => BilaplaceMethod::Iterated,
            MethodTag::Direct => BilaplaceMethod::Direct,
        }),
        PdeTag::Elastostatics => PdeSpec::Elastostatics(ElastostaticsParams {
            nu: p("nu")?,
            mu: p("mu")?,
        }),
        PdeTag::Stokes => PdeSpec::Stokes(StokesParams { mu: p("mu")? }),
        PdeTag::AnisotropicPoisson => {
            PdeSpec::AnisotropicPoisson(matrices(problem)?.pop().expect("validated single matrix"))
        }
        PdeTag::FactorizedAnisotropic => PdeSpec::FactorizedAnisotropic(matrices(problem)?),
    };
    let rhs = if problem.pde.is_vector() {
        Field::Vector(PolyVector::new(components("rhs", dim, dim, &problem.rhs)?).map_err(|e| parse_error("rhs", e))?)
    } else {
        Field::Scalar(components("rhs", dim, 1, &problem.rhs)?.remove(0))
    };
    Ok((spec, rhs))
}

/// Candidate solution read back from a solution document.
pub(crate) fn solution<T: Coefficient>(
    problem: &ProblemFile,
    document: &SolutionDocument,
) -> Result<Solution<T>, CliError> {
    let dim = problem.dim;
    let expected: &[&str] = match problem.pde {
        PdeTag::Stokes => &["p", "u"],
        PdeTag::Maxwell => &["A", "E", "H", "phi"],
        _ => &["u"],
    };
    if let Some(key) = document.solution.keys().find(|k| !expected.contains(&k.as_str())) {
        return Err(parse_error(format!("solution.{key}"), "unexpected field"));
    }
    let field = |key: &str, count: usize| -> Result<Vec<Polynomial<T>>, CliError> {
        let path = format!("solution.{key}");
        let lists = document
            .solution
            .get(key)
            .ok_or_else(|| parse_error(&path, "missing field"))?;
        components(&path, dim, count, lists)
    };
    let vector = |key: &str| -> Result<PolyVector<T>, CliError> {
        PolyVector::new(field(key, dim)?).map_err(|e| parse_error(format!("solution.{key}"), e))
    };
    Ok(match problem.pde {
        PdeTag::Stokes => Solution::Stokes {
            u: vector("u")?,
            p: field("p", 1)?.remove(0),
        },
        PdeTag::Maxwell => {
            let has_a = document.solution.contains_key("A");
            let has_phi = document.solution.contains_key("phi");
            let potentials = match (has_a, has_phi) {
                (true, true) => Some((vector("A")?, field("phi", 1)?.remove(0))),
                (false, false) => None,
                _ => return Err(parse_error("solution", "potentials A and phi must be given together")),
            };
            Solution::Maxwell {
                e: vector("E")?,
                h: vector("H")?,
                potentials,
            }
        }
        tag if tag.is_vector() => Solution::Vector(vector("u")?),
        _ => Solution::Scalar(field("u", 1)?.remove(0)),
    })
}
