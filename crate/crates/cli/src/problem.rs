use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use polysol::ring::{parse_literal, Mode, Scalar};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::CliError;

/// PDE family tag of a problem file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PdeTag {
    Helmholtz,
    ZerothOrder,
    Elastodynamics,
    Maxwell,
    Poisson,
    Bilaplace,
    Elastostatics,
    Stokes,
    AnisotropicPoisson,
    FactorizedAnisotropic,
}

impl PdeTag {
    pub const ALL: [PdeTag; 10] = [
        PdeTag::Helmholtz,
        PdeTag::ZerothOrder,
        PdeTag::Elastodynamics,
        PdeTag::Maxwell,
        PdeTag::Poisson,
        PdeTag::Bilaplace,
        PdeTag::Elastostatics,
        PdeTag::Stokes,
        PdeTag::AnisotropicPoisson,
        PdeTag::FactorizedAnisotropic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PdeTag::Helmholtz => "helmholtz",
            PdeTag::ZerothOrder => "zeroth-order",
            PdeTag::Elastodynamics => "elastodynamics",
            PdeTag::Maxwell => "maxwell",
            PdeTag::Poisson => "poisson",
            PdeTag::Bilaplace => "bilaplace",
            PdeTag::Elastostatics => "elastostatics",
            PdeTag::Stokes => "stokes",
            PdeTag::AnisotropicPoisson => "anisotropic-poisson",
            PdeTag::FactorizedAnisotropic => "factorized-anisotropic",
        }
    }

    pub fn is_vector(self) -> bool {
        matches!(
            self,
            PdeTag::Elastodynamics | PdeTag::Maxwell | PdeTag::Elastostatics | PdeTag::Stokes
        )
    }

    /// Accepted parameter names with their defaults (`None` = required).
    pub fn parameters(self) -> &'static [(&'static str, Option<&'static str>)] {
        match self {
            PdeTag::Helmholtz => &[("k", None)],
            PdeTag::ZerothOrder => &[("alpha", None)],
            PdeTag::Elastodynamics => &[("rho_mass", None), ("mu", None), ("nu", None), ("omega", None)],
            PdeTag::Maxwell => &[("eps", Some("1")), ("mu", Some("1")), ("omega", Some("1"))],
            PdeTag::Elastostatics => &[("nu", None), ("mu", Some("1"))],
            PdeTag::Stokes => &[("mu", None)],
            PdeTag::Poisson | PdeTag::Bilaplace | PdeTag::AnisotropicPoisson | PdeTag::FactorizedAnisotropic => &[],
        }
    }
}

impl fmt::Display for PdeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodTag {
    #[default]
    Iterated,
    Direct,
}

/// One monomial `coef * x^exp`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub exp: Vec<u32>,
    pub coef: String,
}

/// A problem file.
///
/// Besides the core fields, `operator` gives the symbol of `B(ξ)` for
/// `zeroth-order`, `matrices` the conductivity matrices for the anisotropic
/// families, `charge` an explicit charge density for `maxwell` and `method`
/// the bilaplace variant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub dim: usize,
    pub pde: PdeTag,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
    pub rhs: Vec<Vec<TermSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "mode_name")]
    pub mode: Option<Mode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator: Option<Vec<TermSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub charge: Option<Vec<TermSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<MethodTag>,
}

mod mode_name {
    use super::*;

    pub fn serialize<S: Serializer>(mode: &Option<Mode>, s: S) -> Result<S::Ok, S::Error> {
        match mode {
            Some(m) => s.serialize_str(m.as_str()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Mode>, D::Error> {
        let name = String::deserialize(d)?;
        Mode::from_str(&name).map(Some).map_err(serde::de::Error::custom)
    }
}

fn parse_error(path: impl Into<String>, message: impl fmt::Display) -> CliError {
    CliError::Parse {
        path: path.into(),
        message: message.to_string(),
    }
}

pub(crate) fn literal(path: &str, text: &str) -> Result<Scalar, CliError> {
    parse_literal(text).map_err(|e| parse_error(path, e))
}

pub(crate) fn check_terms(path: &str, dim: usize, terms: &[TermSpec]) -> Result<(), CliError> {
    for (i, t) in terms.iter().enumerate() {
        if t.exp.len() != dim {
            return Err(parse_error(
                format!("{path}[{i}].exp"),
                format!("expected {dim} exponents, got {}", t.exp.len()),
            ));
        }
        literal(&format!("{path}[{i}].coef"), &t.coef)?;
    }
    Ok(())
}

impl ProblemFile {
    /// Ring requested by the file, `double` when absent.
    pub fn mode(&self) -> Mode {
        self.mode.unwrap_or(Mode::Double)
    }

    /// Structural checks that do not depend on the coefficient ring.
    pub fn validate(&self) -> Result<(), CliError> {
        if self.dim == 0 {
            return Err(parse_error("dim", "dimension must be at least 1"));
        }
        let expected = if self.pde.is_vector() { self.dim } else { 1 };
        if self.rhs.len() != expected {
            return Err(parse_error(
                "rhs",
                format!("{} expects {expected} component(s), got {}", self.pde, self.rhs.len()),
            ));
        }
        for (c, terms) in self.rhs.iter().enumerate() {
            check_terms(&format!("rhs[{c}]"), self.dim, terms)?;
        }

        let allowed = self.pde.parameters();
        for (name, value) in &self.params {
            if !allowed.iter().any(|(n, _)| n == name) {
                let names: Vec<_> = allowed.iter().map(|(n, _)| *n).collect();
                return Err(parse_error(
                    format!("params.{name}"),
                    format!("unknown parameter for {} (accepted: {names:?})", self.pde),
                ));
            }
            literal(&format!("params.{name}"), value)?;
        }
        for (name, default) in allowed {
            if default.is_none() && !self.params.contains_key(*name) {
                return Err(parse_error(format!("params.{name}"), "missing required parameter"));
            }
        }

        let extra = |field: &str, used_by: &[PdeTag]| -> Result<(), CliError> {
            if !used_by.contains(&self.pde) {
                return Err(parse_error(field, format!("not used by {}", self.pde)));
            }
            Ok(())
        };
        match &self.operator {
            Some(terms) => {
                extra("operator", &[PdeTag::ZerothOrder])?;
                check_terms("operator", self.dim, terms)?;
            }
            None if self.pde == PdeTag::ZerothOrder => {
                return Err(parse_error("operator", "zeroth-order needs the operator symbol"))
            }
            None => {}
        }
        match &self.matrices {
            Some(matrices) => {
                extra("matrices", &[PdeTag::AnisotropicPoisson, PdeTag::FactorizedAnisotropic])?;
                if self.pde == PdeTag::AnisotropicPoisson && matrices.len() != 1 {
                    return Err(parse_error("matrices", "anisotropic-poisson takes exactly one matrix"));
                }
                for (m, rows) in matrices.iter().enumerate() {
                    for (r, row) in rows.iter().enumerate() {
                        for (c, entry) in row.iter().enumerate() {
                            literal(&format!("matrices[{m}][{r}][{c}]"), entry)?;
                        }
                    }
                }
            }
            None if matches!(self.pde, PdeTag::AnisotropicPoisson | PdeTag::FactorizedAnisotropic) => {
                return Err(parse_error("matrices", format!("{} needs conductivity matrices", self.pde)))
            }
            None => {}
        }
        if let Some(terms) = &self.charge {
            extra("charge", &[PdeTag::Maxwell])?;
            check_terms("charge", self.dim, terms)?;
        }
        if self.method.is_some() {
            extra("method", &[PdeTag::Bilaplace])?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem files serialize")
    }
}

/// Parse and validate a problem file.
pub fn parse_problem(text: &[u8]) -> Result<ProblemFile, CliError> {
    let de = &mut serde_json::Deserializer::from_slice(text);
    let problem: ProblemFile = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        let path = if path == "." { "document".to_string() } else { path };
        parse_error(path, inner)
    })?;
    problem.validate()?;
    Ok(problem)
}
