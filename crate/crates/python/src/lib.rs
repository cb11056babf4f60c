//! Python bindings: an exact-or-floating `Polynomial` type and `solve`.

use std::collections::BTreeMap;

use polysol::ring::{parse_literal, promote, Mode};
use polysol::{Coefficient, Complex, Interval, Polynomial, Rational, RenderStyle};
use polysol_cli::{
    parse_problem, parse_solution, solve_problem, CliError, MethodTag, Options, OutputFormat, PdeTag, ProblemFile,
    TermSpec,
};
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyComplex, PyDict, PyFloat, PyList, PyTuple};

#[derive(Debug, Clone, PartialEq)]
enum AnyPoly {
    Double(Polynomial<f64>),
    Rational(Polynomial<Rational>),
    Interval(Polynomial<Interval>),
    Complex(Polynomial<Complex<f64>>),
    ComplexRational(Polynomial<Complex<Rational>>),
}

macro_rules! each {
    ($value:expr, $p:ident => $body:expr) => {
        match $value {
            AnyPoly::Double($p) => $body,
            AnyPoly::Rational($p) => $body,
            AnyPoly::Interval($p) => $body,
            AnyPoly::Complex($p) => $body,
            AnyPoly::ComplexRational($p) => $body,
        }
    };
}

macro_rules! each_into {
    ($value:expr, $p:ident => $body:expr) => {
        match $value {
            AnyPoly::Double($p) => AnyPoly::Double($body),
            AnyPoly::Rational($p) => AnyPoly::Rational($body),
            AnyPoly::Interval($p) => AnyPoly::Interval($body),
            AnyPoly::Complex($p) => AnyPoly::Complex($body),
            AnyPoly::ComplexRational($p) => AnyPoly::ComplexRational($body),
        }
    };
}

macro_rules! each_pair {
    ($a:expr, $b:expr, ($x:ident, $y:ident) => $body:expr) => {
        match ($a, $b) {
            (AnyPoly::Double($x), AnyPoly::Double($y)) => AnyPoly::Double($body),
            (AnyPoly::Rational($x), AnyPoly::Rational($y)) => AnyPoly::Rational($body),
            (AnyPoly::Interval($x), AnyPoly::Interval($y)) => AnyPoly::Interval($body),
            (AnyPoly::Complex($x), AnyPoly::Complex($y)) => AnyPoly::Complex($body),
            (AnyPoly::ComplexRational($x), AnyPoly::ComplexRational($y)) => AnyPoly::ComplexRational($body),
            _ => unreachable!("operands converted to a common mode"),
        }
    };
}

trait Wrap: Coefficient {
    fn wrap(p: Polynomial<Self>) -> AnyPoly;
}

macro_rules! wrap {
    ($t:ty, $variant:ident) => {
        impl Wrap for $t {
            fn wrap(p: Polynomial<Self>) -> AnyPoly {
                AnyPoly::$variant(p)
            }
        }
    };
}

wrap!(f64, Double);
wrap!(Rational, Rational);
wrap!(Interval, Interval);
wrap!(Complex<f64>, Complex);
wrap!(Complex<Rational>, ComplexRational);

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn cli_error(e: CliError) -> PyErr {
    match e {
        CliError::Solve(s) => PyArithmeticError::new_err(s.to_string()),
        other => value_error(other),
    }
}

fn build<T: Coefficient>(dim: usize, terms: &[TermSpec]) -> PyResult<Polynomial<T>> {
    let mut pairs = Vec::with_capacity(terms.len());
    for t in terms {
        let scalar = parse_literal(&t.coef).map_err(value_error)?;
        pairs.push((t.exp.clone(), promote::<T>(&scalar).map_err(value_error)?));
    }
    Polynomial::from_terms(dim, pairs).map_err(value_error)
}

impl AnyPoly {
    fn from_terms(dim: usize, terms: &[TermSpec], mode: Mode) -> PyResult<Self> {
        Ok(match mode {
            Mode::Double => AnyPoly::Double(build(dim, terms)?),
            Mode::Rational | Mode::RationalBig => AnyPoly::Rational(build(dim, terms)?),
            Mode::Interval => AnyPoly::Interval(build(dim, terms)?),
            Mode::Complex => AnyPoly::Complex(build(dim, terms)?),
            Mode::ComplexRational => AnyPoly::ComplexRational(build(dim, terms)?),
        })
    }

    fn dim(&self) -> usize {
        each!(self, p => p.dim())
    }

    fn terms(&self) -> Vec<TermSpec> {
        each!(self, p => p
            .terms()
            .map(|(m, c)| TermSpec { exp: m.exponents().to_vec(), coef: c.to_literal() })
            .collect())
    }
}

/// Literal for a Python coefficient: int, float, complex, str or anything
/// whose `str()` is a literal (e.g. `fractions.Fraction`).
fn coefficient_literal(value: &Bound<'_, PyAny>) -> PyResult<String> {
    if let Ok(z) = value.cast::<PyComplex>() {
        let (re, im) = (z.real(), z.imag());
        if !re.is_finite() || !im.is_finite() {
            return Err(value_error("non-finite coefficient"));
        }
        return Ok(format!("{re}{}{}i", if im < 0.0 { '-' } else { '+' }, im.abs()));
    }
    if let Ok(x) = value.cast::<PyFloat>() {
        let x = x.value();
        if !x.is_finite() {
            return Err(value_error("non-finite coefficient"));
        }
        return Ok(format!("{x}"));
    }
    Ok(value.str()?.to_string())
}

fn parse_mode(mode: &str) -> PyResult<Mode> {
    mode.parse().map_err(value_error)
}

/// Sparse multivariate polynomial over a selectable coefficient ring.
///
/// ```python
/// p = Polynomial(3, {(2, 3, 1): 1}, mode="rational")
/// ```
#[pyclass(name = "Polynomial", module = "pypolysol", frozen, skip_from_py_object)]
#[derive(Debug, Clone)]
struct PyPolynomial {
    mode: Mode,
    inner: AnyPoly,
}

impl PyPolynomial {
    fn new_inner(mode: Mode, inner: AnyPoly) -> Self {
        PyPolynomial { mode, inner }
    }

    fn in_mode(&self, mode: Mode) -> PyResult<AnyPoly> {
        AnyPoly::from_terms(self.inner.dim(), &self.inner.terms(), mode)
    }

    fn coerce(&self, other: &Bound<'_, PyAny>) -> PyResult<AnyPoly> {
        if let Ok(p) = other.cast::<PyPolynomial>() {
            let p = p.get();
            if p.inner.dim() != self.inner.dim() {
                return Err(value_error(format!(
                    "dimension mismatch: {} vs {}",
                    self.inner.dim(),
                    p.inner.dim()
                )));
            }
            return if p.mode == self.mode { Ok(p.inner.clone()) } else { p.in_mode(self.mode) };
        }
        let literal = coefficient_literal(other)?;
        let term = TermSpec {
            exp: vec![0; self.inner.dim()],
            coef: literal,
        };
        AnyPoly::from_terms(self.inner.dim(), &[term], self.mode)
    }
}

#[pymethods]
impl PyPolynomial {
    #[new]
    #[pyo3(signature = (dim, terms=None, mode="double"))]
    fn new(dim: usize, terms: Option<&Bound<'_, PyDict>>, mode: &str) -> PyResult<Self> {
        let mode = parse_mode(mode)?;
        let mut specs = Vec::new();
        if let Some(terms) = terms {
            for (key, value) in terms.iter() {
                let exp: Vec<u32> = key.extract()?;
                specs.push(TermSpec {
                    exp,
                    coef: coefficient_literal(&value)?,
                });
            }
        }
        Ok(Self::new_inner(mode, AnyPoly::from_terms(dim, &specs, mode)?))
    }

    /// The coordinate function `x_axis`.
    #[staticmethod]
    #[pyo3(signature = (dim, axis, mode="double"))]
    fn variable(dim: usize, axis: usize, mode: &str) -> PyResult<Self> {
        if axis >= dim {
            return Err(value_error(format!("axis {axis} out of range for dimension {dim}")));
        }
        let mut exp = vec![0; dim];
        exp[axis] = 1;
        let mode = parse_mode(mode)?;
        let term = TermSpec { exp, coef: "1".into() };
        Ok(Self::new_inner(mode, AnyPoly::from_terms(dim, &[term], mode)?))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn mode(&self) -> &'static str {
        self.mode.as_str()
    }

    /// Total degree, `None` for the zero polynomial.
    #[getter]
    fn degree(&self) -> Option<u32> {
        each!(&self.inner, p => p.degree().finite())
    }

    fn is_zero(&self) -> bool {
        each!(&self.inner, p => p.is_zero())
    }

    /// `(exponents, literal)` pairs in graded-lex order.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let items = self
            .inner
            .terms()
            .into_iter()
            .map(|t| PyTuple::new(py, t.exp).map(|e| (e, t.coef)))
            .collect::<PyResult<Vec<_>>>()?;
        PyList::new(py, items)
    }

    /// Same polynomial promoted into another ring.
    fn to_mode(&self, mode: &str) -> PyResult<Self> {
        let mode = parse_mode(mode)?;
        Ok(Self::new_inner(mode, self.in_mode(mode)?))
    }

    fn derivative(&self, axis: usize, order: u32) -> PyResult<Self> {
        let inner = each_into!(&self.inner, p => p.partial_derivative(axis, order).map_err(value_error)?);
        Ok(Self::new_inner(self.mode, inner))
    }

    #[pyo3(signature = (times=1))]
    fn laplacian(&self, times: u32) -> Self {
        Self::new_inner(self.mode, each_into!(&self.inner, p => p.laplacian(times)))
    }

    /// Homogeneous parts keyed by degree.
    fn homogeneous_parts(&self) -> BTreeMap<u32, Self> {
        let mode = self.mode;
        each!(&self.inner, p => p
            .homogeneous_decomposition()
            .into_iter()
            .map(|(n, h)| (n, Self::new_inner(mode, Wrap::wrap(h))))
            .collect())
    }

    #[pyo3(signature = (unicode=false))]
    fn render(&self, unicode: bool) -> String {
        let style = if unicode { RenderStyle::Unicode } else { RenderStyle::Ascii };
        each!(&self.inner, p => p.render(style))
    }

    fn __str__(&self) -> String {
        self.render(false)
    }

    fn __repr__(&self) -> String {
        format!("Polynomial<{}>({})", self.mode, self.render(false))
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        self.coerce(other).is_ok_and(|o| o == self.inner)
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        let other = self.coerce(other)?;
        Ok(Self::new_inner(self.mode, each_pair!(&self.inner, &other, (a, b) => a + b)))
    }

    fn __radd__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__add__(other)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        let other = self.coerce(other)?;
        Ok(Self::new_inner(self.mode, each_pair!(&self.inner, &other, (a, b) => a - b)))
    }

    fn __rsub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        let other = self.coerce(other)?;
        Ok(Self::new_inner(self.mode, each_pair!(&other, &self.inner, (a, b) => a - b)))
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        let other = self.coerce(other)?;
        Ok(Self::new_inner(self.mode, each_pair!(&self.inner, &other, (a, b) => a * b)))
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__mul__(other)
    }

    fn __neg__(&self) -> Self {
        Self::new_inner(self.mode, each_into!(&self.inner, p => -p))
    }
}

fn term_lists(field: &Bound<'_, PyAny>, dim: usize) -> PyResult<Vec<Vec<TermSpec>>> {
    let polys: Vec<Bound<'_, PyPolynomial>> = if let Ok(p) = field.cast::<PyPolynomial>() {
        vec![p.clone()]
    } else {
        field.extract()?
    };
    polys
        .iter()
        .map(|p| {
            let p = p.get();
            if p.inner.dim() != dim {
                return Err(value_error(format!("expected dimension {dim}, got {}", p.inner.dim())));
            }
            Ok(p.inner.terms())
        })
        .collect()
}

fn polynomial_mode(field: &Bound<'_, PyAny>) -> Option<Mode> {
    if let Ok(p) = field.cast::<PyPolynomial>() {
        return Some(p.get().mode);
    }
    let list: Vec<Bound<'_, PyPolynomial>> = field.extract().ok()?;
    list.first().map(|p| p.get().mode)
}

/// Solve a PDE for a polynomial right-hand side.
///
/// `rhs` is a `Polynomial` for scalar families and a list of them for vector
/// families. Parameters are keyword arguments (`k`, `alpha`, `nu`, `mu`, ...)
/// given as numbers or literal strings. The result maps field names (`u`,
/// `p`, `E`, `H`, `A`, `phi`) to polynomials or lists of polynomials, plus a
/// `verification` entry when `verify` is set.
#[pyfunction]
#[pyo3(signature = (pde, rhs, mode=None, verify=false, operator=None, matrices=None, charge=None, method=None, **params))]
#[allow(clippy::too_many_arguments)]
fn solve<'py>(
    py: Python<'py>,
    pde: &str,
    rhs: &Bound<'py, PyAny>,
    mode: Option<&str>,
    verify: bool,
    operator: Option<&Bound<'py, PyPolynomial>>,
    matrices: Option<Vec<Vec<Vec<Bound<'py, PyAny>>>>>,
    charge: Option<&Bound<'py, PyPolynomial>>,
    method: Option<&str>,
    params: Option<&Bound<'py, PyDict>>,
) -> PyResult<Bound<'py, PyDict>> {
    let tag: PdeTag = serde_json::from_value(serde_json::Value::String(pde.to_string())).map_err(value_error)?;
    let mode = match mode {
        Some(m) => parse_mode(m)?,
        None => polynomial_mode(rhs).unwrap_or(Mode::Double),
    };
    let dim = if let Ok(p) = rhs.cast::<PyPolynomial>() {
        p.get().inner.dim()
    } else {
        let first: Vec<Bound<'py, PyPolynomial>> = rhs.extract()?;
        first.first().ok_or_else(|| value_error("rhs has no components"))?.get().inner.dim()
    };

    let mut param_map = BTreeMap::new();
    if let Some(params) = params {
        for (key, value) in params.iter() {
            param_map.insert(key.extract::<String>()?, coefficient_literal(&value)?);
        }
    }
    let matrices = matrices
        .map(|list| {
            list.iter()
                .map(|rows| {
                    rows.iter()
                        .map(|row| row.iter().map(coefficient_literal).collect::<PyResult<Vec<_>>>())
                        .collect::<PyResult<Vec<_>>>()
                })
                .collect::<PyResult<Vec<_>>>()
        })
        .transpose()?;
    let method = method
        .map(|m| serde_json::from_value::<MethodTag>(serde_json::Value::String(m.to_string())))
        .transpose()
        .map_err(value_error)?;

    let problem = ProblemFile {
        dim,
        pde: tag,
        params: param_map,
        rhs: term_lists(rhs, dim)?,
        mode: Some(mode),
        operator: operator.map(|p| p.get().inner.terms()),
        matrices,
        charge: charge.map(|p| p.get().inner.terms()),
        method,
    };
    let problem = parse_problem(problem.to_json().as_bytes()).map_err(cli_error)?;
    let options = Options {
        verify,
        format: OutputFormat::Json,
        ..Options::default()
    };
    let outcome = solve_problem(&problem, &options).map_err(cli_error)?;
    let document = parse_solution(outcome.output.as_bytes()).map_err(cli_error)?;
    let solved_mode = parse_mode(&document.mode)?;

    let out = PyDict::new(py);
    for (name, components) in &document.solution {
        let polys = components
            .iter()
            .map(|terms| Ok(PyPolynomial::new_inner(solved_mode, AnyPoly::from_terms(dim, terms, solved_mode)?)))
            .collect::<PyResult<Vec<_>>>()?;
        let scalar_field = name == "p" || name == "phi" || !tag.is_vector();
        if scalar_field {
            out.set_item(name, polys.into_iter().next().expect("one component"))?;
        } else {
            out.set_item(name, polys)?;
        }
    }
    if let Some(report) = document.verification {
        let v = PyDict::new(py);
        v.set_item("exact_zero", report.exact_zero)?;
        v.set_item("satisfied", report.satisfied)?;
        v.set_item("max_coeff_magnitude", report.max_coeff_magnitude)?;
        v.set_item("constraints", report.constraints)?;
        out.set_item("verification", v)?;
    }
    Ok(out)
}

/// Solve a JSON problem file; returns the JSON solution document.
#[pyfunction]
#[pyo3(signature = (problem, verify=false, mode=None))]
fn solve_json(problem: &str, verify: bool, mode: Option<&str>) -> PyResult<String> {
    let problem = parse_problem(problem.as_bytes()).map_err(cli_error)?;
    let options = Options {
        mode: mode.map(parse_mode).transpose()?,
        verify,
        format: OutputFormat::Json,
        ..Options::default()
    };
    Ok(solve_problem(&problem, &options).map_err(cli_error)?.output)
}

#[pymodule]
fn pypolysol(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(solve_json, m)?)?;
    m.add("MODES", Mode::ALL.iter().map(|m| m.as_str()).collect::<Vec<_>>())?;
    Ok(())
}
