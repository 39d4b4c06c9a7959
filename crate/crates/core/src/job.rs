//! Jobs, reports and exit codes shared by the command-line tool.
//!
//! A [`JobSpec`] names a command, its generators and options; [`run`] turns
//! it into a [`Report`]. Reports serialize to JSON with every rational written
//! as an exact `"p/q"` string.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::expr::{parse_characteristic, parse_op_list, parse_series, parse_series_list, Expr};
use crate::inverse::{self, InverseSystem};
use crate::linalg::QMatrix;
use crate::semigroup::{saturation_from_characteristic, NumericalSemigroup};
use crate::series::{DiffOp, Series};
use crate::subalgebra::{self, AlgebraInput, ClosureConfig, Staircase};
use crate::Rational;

pub const SCHEMA_VERSION: &str = "branchdual.report/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INFINITE_CODIMENSION: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_NOT_ALGEBRA_FORMING: i32 = 4;
pub const EXIT_PRECISION: i32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Analyze,
    InverseSystem,
    CheckAf,
    Annihilate,
    Filtration,
    Derivations,
    Gorenstein,
    Semigroup,
    Saturation,
    Transport,
    BlowupChain,
    Canonical,
    Verify,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::InverseSystem => "inverse-system",
            Command::CheckAf => "check-af",
            Command::Annihilate => "annihilate",
            Command::Filtration => "filtration",
            Command::Derivations => "derivations",
            Command::Gorenstein => "gorenstein",
            Command::Semigroup => "semigroup",
            Command::Saturation => "saturation",
            Command::Transport => "transport",
            Command::BlowupChain => "blowup-chain",
            Command::Canonical => "canonical",
            Command::Verify => "verify",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobOptions {
    /// Working-precision ceiling for closures.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trunc: Option<usize>,
    /// Basis of `V`, one operator in `u` per entry.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub v: Vec<String>,
    /// Reparametrization `h` for `transport`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    /// Characteristic `"e0;b1,b2,…"` for `saturation`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<String>,
    /// Size `c` of the truncation used by `transport` when no algebra is given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conductor: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: Command,
    #[serde(default)]
    pub generators: Vec<String>,
    #[serde(default)]
    pub options: JobOptions,
}

/// One entry of a golden corpus: a job plus a partial expected report.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenCase {
    #[serde(default)]
    pub name: Option<String>,
    pub command: Command,
    #[serde(default)]
    pub generators: Vec<String>,
    #[serde(default)]
    pub options: JobOptions,
    #[serde(default)]
    pub expect: Value,
    #[serde(default)]
    pub exit_code: i32,
}

/// Parses a job file: a single job object or an array of jobs.
pub fn parse_jobs(text: &str) -> Result<Vec<JobSpec>> {
    let value: Value = serde_json::from_str(text).map_err(json_error)?;
    match value {
        Value::Array(items) => items
            .into_iter()
            .map(|v| serde_json::from_value(v).map_err(json_error))
            .collect(),
        v => Ok(vec![serde_json::from_value(v).map_err(json_error)?]),
    }
}

/// Parses a golden file: a single case or an array of cases.
pub fn parse_golden(text: &str) -> Result<Vec<GoldenCase>> {
    let value: Value = serde_json::from_str(text).map_err(json_error)?;
    match value {
        Value::Array(items) => items
            .into_iter()
            .map(|v| serde_json::from_value(v).map_err(json_error))
            .collect(),
        v => Ok(vec![serde_json::from_value(v).map_err(json_error)?]),
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        pos: e.column(),
        msg: format!("line {}: {e}", e.line()),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Invariants {
    pub delta: usize,
    pub conductor: usize,
    pub e0: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e1: Option<usize>,
    pub mu: usize,
    pub gaps: Vec<usize>,
    /// Values in `[0, c + e0)`.
    pub semigroup_window: Vec<usize>,
    pub semigroup_generators: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub embedding_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gorenstein_by_c: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert1: Option<Vec<usize>>,
}

impl Invariants {
    fn of(s: &Staircase) -> Invariants {
        Invariants {
            delta: s.delta(),
            conductor: s.conductor(),
            e0: s.e0(),
            mu: 2 * s.delta(),
            gaps: s.gaps().to_vec(),
            semigroup_window: s.value_window(s.conductor() + s.e0()),
            semigroup_generators: s.semigroup_generators(),
            ..Invariants::default()
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Diagnostics {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub work_trunc: Option<usize>,
    pub ceiling: usize,
    pub elapsed_us: u64,
}

/// Outcome of a job. Optional sections are omitted when not computed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub status: &'static str,
    pub exit_code: i32,
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<Invariants>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inverse_system: Option<Vec<Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filtration: Option<Vec<Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificates: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    pub diagnostics: Diagnostics,
}

impl Report {
    fn new(job: &JobSpec, config: &ClosureConfig) -> Report {
        Report {
            schema: SCHEMA_VERSION,
            command: job.command.name().to_string(),
            status: "ok",
            exit_code: EXIT_OK,
            generators: job.generators.clone(),
            invariants: None,
            inverse_system: None,
            filtration: None,
            certificates: None,
            result: None,
            error: None,
            diagnostics: Diagnostics {
                ceiling: config.ceiling,
                ..Diagnostics::default()
            },
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Plain-text rendering for terminals.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.command, self.status);
        if let Some(e) = &self.error {
            out += &format!("error ({}): {}\n", e.kind, e.message);
        }
        if let Some(inv) = &self.invariants {
            out += &format!(
                "delta = {}, conductor = {}, e0 = {}, mu = {}\n",
                inv.delta, inv.conductor, inv.e0, inv.mu
            );
            if let Some(e1) = inv.e1 {
                out += &format!("e1 = {e1}\n");
            }
            out += &format!("gaps = {:?}\n", inv.gaps);
            out += &format!("semigroup generators = {:?}\n", inv.semigroup_generators);
        }
        if let Some(v) = &self.inverse_system {
            out += &format!("inverse system ({}):\n", v.len());
            for g in v {
                out += &format!("  {}\n", g["text"].as_str().unwrap_or(""));
            }
        }
        if let Some(f) = &self.filtration {
            out += "filtration:\n";
            for step in f {
                out += &format!(
                    "  adjoin t^{}: delta {}, cutting element {}\n",
                    step["gap_exponent"],
                    step["delta"],
                    plain(&step["cutting_element"])
                );
            }
        }
        for block in [&self.certificates, &self.result].into_iter().flatten() {
            write_plain(&mut out, block, 0);
        }
        out
    }
}

/// One-line rendering: expressions by their text, short lists inline.
fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(o) if o.get("text").is_some_and(Value::is_string) => plain(&o["text"]),
        Value::Object(o) => {
            let items: Vec<String> = o
                .iter()
                .map(|(k, x)| match x {
                    Value::Object(inner) if !inner.contains_key("text") => {
                        format!("{k}: {{{}}}", plain(x))
                    }
                    _ => format!("{k}: {}", plain(x)),
                })
                .collect();
            items.join(", ")
        }
        Value::Array(a) => {
            let items: Vec<String> = a.iter().map(plain).collect();
            format!("[{}]", items.join(", "))
        }
        other => other.to_string(),
    }
}

fn is_leaf(v: &Value) -> bool {
    match v {
        Value::Object(o) => {
            o.get("text").is_some_and(Value::is_string)
                || (o.values().all(|x| !x.is_object() && !x.is_array()) && plain(v).len() <= 80)
        }
        Value::Array(a) => {
            a.iter().all(|x| !x.is_object() || x.get("text").is_some()) && plain(v).len() <= 100
        }
        _ => true,
    }
}

fn write_plain(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                if is_leaf(x) {
                    *out += &format!("{pad}{k}: {}\n", plain(x));
                } else {
                    *out += &format!("{pad}{k}:\n");
                    write_plain(out, x, depth + 1);
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                if is_leaf(x)
                    || (x.is_object() && x.as_object().unwrap().values().all(is_leaf))
                        && plain(x).len() <= 100
                {
                    *out += &format!("{pad}- {}\n", plain(x));
                } else {
                    *out += &format!("{pad}-\n");
                    write_plain(out, x, depth + 1);
                }
            }
        }
        other => *out += &format!("{pad}{}\n", plain(other)),
    }
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InfiniteCodimension { .. } => EXIT_INFINITE_CODIMENSION,
        Error::Parse { .. } | Error::MixedVariables => EXIT_PARSE,
        Error::NotAlgebraForming(_) => EXIT_NOT_ALGEBRA_FORMING,
        Error::PrecisionExhausted { .. } => EXIT_PRECISION,
        _ => EXIT_FAILURE,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DimensionMismatch { .. } => "dimension-mismatch",
        Error::InsufficientPrecision { .. } => "insufficient-precision",
        Error::NonUnitDivisor => "non-unit-divisor",
        Error::NonzeroConstantSubstitution => "nonzero-constant-substitution",
        Error::NotUniformizer { .. } => "not-uniformizer",
        Error::InfiniteCodimension { .. } => "infinite-codimension",
        Error::PrecisionExhausted { .. } => "precision-exhausted",
        Error::NotAlgebraForming(_) => "not-algebra-forming",
        Error::ConstantTermInV { .. } => "constant-term-in-v",
        Error::NonCoprime { .. } => "non-coprime",
        Error::InvalidCharacteristic(_) => "invalid-characteristic",
        Error::Parse { .. } => "parse",
        Error::MixedVariables => "mixed-variables",
        Error::InvalidInput(_) => "invalid-input",
        Error::NotContained(_) => "not-contained",
        Error::CodimensionNotOne { .. } => "codimension-not-one",
        Error::NothingToBlowUp => "nothing-to-blow-up",
        Error::Inconsistent(_) => "inconsistent",
    }
}

/// Report for a job that could not be parsed at all.
pub fn error_report(command: &str, e: &Error) -> Report {
    let mut r = Report::new(
        &JobSpec {
            command: Command::Analyze,
            generators: Vec::new(),
            options: JobOptions::default(),
        },
        &ClosureConfig::default(),
    );
    r.command = command.to_string();
    r.fail(e);
    r
}

impl Report {
    fn fail(&mut self, e: &Error) {
        self.status = "error";
        self.exit_code = exit_code(e);
        self.error = Some(ErrorInfo {
            kind: error_kind(e).to_string(),
            message: e.to_string(),
            position: match e {
                Error::Parse { pos, .. } => Some(*pos),
                _ => None,
            },
        });
        if let Error::NotAlgebraForming(cert) = e {
            self.certificates = Some(af_json(cert));
        }
        if let Error::PrecisionExhausted { needed, .. } = e {
            self.result = Some(json!({ "required_trunc": needed }));
        }
    }
}

pub fn rational_string(x: &Rational) -> String {
    x.to_string()
}

fn coeff_map<'a>(it: impl Iterator<Item = (usize, &'a Rational)>) -> BTreeMap<String, String> {
    it.filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(k, c)| (k.to_string(), rational_string(c)))
        .collect()
}

pub fn series_json(s: &Series) -> Value {
    json!({
        "text": s.to_string(),
        "coefficients": coeff_map(s.coeffs().iter().enumerate()),
        "precision": s.precision(),
    })
}

pub fn op_json(g: &DiffOp) -> Value {
    json!({
        "text": g.to_string(),
        "coefficients": coeff_map(g.coeffs().iter().enumerate()),
    })
}

fn matrix_json(m: &QMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| {
                Value::Array(
                    r.iter()
                        .map(|x| Value::String(rational_string(x)))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn staircase_json(s: &Staircase) -> Value {
    json!({
        "delta": s.delta(),
        "conductor": s.conductor(),
        "values": s.values(),
        "gaps": s.gaps(),
        "basis": s.basis().iter().map(series_json).collect::<Vec<_>>(),
        "generators": s.algebra_generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    })
}

fn af_json(cert: &inverse::AfCertificate) -> Value {
    json!({
        "algebra_forming": cert.verdict,
        "witness": cert.witness.as_ref().map(series_json),
    })
}

fn inverse_json(v: &InverseSystem) -> Vec<Value> {
    v.basis().iter().map(op_json).collect()
}

fn algebra(job: &JobSpec) -> Result<AlgebraInput> {
    if job.generators.is_empty() {
        return Err(Error::InvalidInput(format!(
            "command {} needs generators",
            job.command.name()
        )));
    }
    let mut gens = Vec::new();
    for g in &job.generators {
        gens.extend(parse_series_list(g)?);
    }
    AlgebraInput::new(gens, job.generators.join(", "))
}

fn ops(job: &JobSpec) -> Result<Vec<DiffOp>> {
    let mut out = Vec::new();
    for v in &job.options.v {
        out.extend(parse_op_list(v)?);
    }
    Ok(out)
}

/// Generators given as plain exponents (`4, 6, 9`) or monomials (`t^4`).
fn exponent_list(job: &JobSpec) -> Result<Option<Vec<usize>>> {
    let mut out = Vec::new();
    for text in &job.generators {
        for s in parse_series_list(text)? {
            let nonzero: Vec<(usize, &Rational)> = s
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .collect();
            let one = Rational::from_integer(1.into());
            match nonzero.as_slice() {
                [(0, c)] if s.is_exact() && c.is_integer() && c.numer() > &0.into() => {
                    let a = c
                        .to_integer()
                        .try_into()
                        .map_err(|_| Error::InvalidInput(format!("exponent {c} is too large")))?;
                    out.push(a);
                }
                [(k, c)] if s.is_exact() && *k > 0 && **c == one => out.push(*k),
                _ => return Ok(None),
            }
        }
    }
    Ok(Some(out))
}

fn semigroup_of(
    job: &JobSpec,
    config: &ClosureConfig,
) -> Result<(NumericalSemigroup, Option<Staircase>)> {
    if job.generators.is_empty() {
        return Err(Error::InvalidInput(
            "semigroup commands need generators".into(),
        ));
    }
    if let Some(exps) = exponent_list(job)? {
        return Ok((NumericalSemigroup::from_generators(&exps)?, None));
    }
    let s = subalgebra::closure(&algebra(job)?, config)?;
    Ok((
        NumericalSemigroup::from_generators(&s.semigroup_generators())?,
        Some(s),
    ))
}

fn dispatch(job: &JobSpec, config: &ClosureConfig, r: &mut Report) -> Result<()> {
    match job.command {
        Command::Analyze => {
            let s = subalgebra::closure(&algebra(job)?, config)?;
            r.diagnostics.work_trunc = Some(s.work_trunc());
            let rep = subalgebra::invariants_report(&s)?;
            r.invariants = Some(Invariants {
                e1: Some(rep.e1),
                embedding_dim: Some(rep.embedding_dim),
                gorenstein_by_c: Some(rep.gorenstein_by_c),
                hilbert: Some(rep.hilbert),
                hilbert1: Some(rep.hilbert1),
                ..Invariants::of(&s)
            });
            r.result = Some(json!({ "staircase": staircase_json(&s) }));
        }
        Command::InverseSystem => {
            let a = algebra(job)?;
            let s = subalgebra::closure(&a, config)?;
            r.diagnostics.work_trunc = Some(s.work_trunc());
            r.invariants = Some(Invariants::of(&s));
            r.inverse_system = Some(inverse_json(&inverse::inverse_system(&a, &s)?));
        }
        Command::CheckAf => {
            let a = algebra(job)?;
            let s = subalgebra::closure(&a, config)?;
            let v = ops(job)?;
            r.diagnostics.work_trunc = Some(s.work_trunc());
            let cert = inverse::is_algebra_forming(&v, &s, &a)?;
            r.certificates = Some(af_json(&cert));
            if !cert.verdict {
                r.exit_code = EXIT_NOT_ALGEBRA_FORMING;
            }
        }
        Command::Annihilate => {
            let s = subalgebra::closure(&algebra(job)?, config)?;
            let v = ops(job)?;
            r.diagnostics.work_trunc = Some(s.work_trunc());
            let c = inverse::annihilator(&v, &s)?;
            r.invariants = Some(Invariants::of(&c));
            r.result = Some(json!({ "annihilator": staircase_json(&c) }));
        }
        Command::Filtration => {
            let f = inverse::standard_filtration(&algebra(job)?, config)?;
            r.filtration = Some(
                f.steps
                    .iter()
                    .map(|st| {
                        json!({
                            "gap_exponent": st.gap_exponent,
                            "delta": st.new_algebra.delta(),
                            "conductor": st.new_algebra.conductor(),
                            "generators": st.new_algebra.algebra_generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                            "cutting_element": series_json(&st.cutting_element),
                            "derivation": op_json(&st.derivation),
                        })
                    })
                    .collect(),
            );
        }
        Command::Derivations => {
            let s = subalgebra::closure(&algebra(job)?, config)?;
            let v = ops(job)?;
            r.invariants = Some(Invariants::of(&s));
            if v.is_empty() {
                let d = inverse::derivation_space(&s);
                r.result = Some(json!({
                    "dimension": d.dim(),
                    "basis": inverse_json(&d),
                }));
            } else {
                let checks: Vec<Value> = v
                    .iter()
                    .map(|g| json!({ "operator": op_json(g), "is_derivation": inverse::is_derivation(g, &s) }))
                    .collect();
                r.result = Some(json!({ "checks": checks }));
            }
        }
        Command::Gorenstein => {
            let (d, s) = semigroup_of(job, config)?;
            let g = d.gorenstein_check();
            r.result = Some(json!({
                "semigroup_generators": d.generators(),
                "conductor": d.conductor(),
                "delta": d.genus(),
                "symmetric": g.symmetric,
                "c_equals_2delta": g.c_equals_2delta,
                "palindromic_inverse": g.palindromic_inverse,
                "gorenstein": g.all(),
            }));
            if let Some(s) = s {
                r.invariants = Some(Invariants::of(&s));
            }
        }
        Command::Semigroup => {
            let (d, _) = semigroup_of(job, config)?;
            r.result = Some(json!({
                "generators": d.generators(),
                "gaps": d.gaps(),
                "conductor": d.conductor(),
                "genus": d.genus(),
                "frobenius": d.frobenius(),
                "symmetric": d.is_symmetric(),
            }));
            r.inverse_system = Some(inverse_json(&d.monomial_inverse_system()));
        }
        Command::Saturation => {
            let text =
                job.options.characteristic.as_deref().ok_or_else(|| {
                    Error::InvalidInput("saturation needs a characteristic".into())
                })?;
            let ch = parse_characteristic(text)?;
            let sat = saturation_from_characteristic(&ch)?;
            r.result = Some(json!({
                "e0": ch.e0,
                "betas": ch.betas,
                "n": ch.n,
                "m": ch.m,
                "exponents": sat.exponents,
                "generators": sat.semigroup.generators(),
                "conductor": sat.semigroup.conductor(),
                "gaps": sat.semigroup.gaps(),
            }));
        }
        Command::Transport => {
            let text = job
                .options
                .h
                .as_deref()
                .ok_or_else(|| Error::InvalidInput("transport needs h".into()))?;
            let h = parse_series(text)?;
            let (v2, c) = if job.generators.is_empty() {
                let v = ops(job)?;
                let deg = v
                    .iter()
                    .filter_map(DiffOp::degree)
                    .max()
                    .map_or(0, |d| d + 1);
                let c = job.options.conductor.unwrap_or(deg).max(deg);
                (InverseSystem::from_ops(&v, c), c)
            } else {
                let a = algebra(job)?;
                let s = subalgebra::closure(&a, config)?;
                r.invariants = Some(Invariants::of(&s));
                (inverse::inverse_system(&a, &s)?, s.conductor())
            };
            let (m, pulled) = inverse::transport_dual(&h, c, &v2)?;
            let (_, pushed) = inverse::pushforward_dual(&h, c, &v2)?;
            r.inverse_system = Some(inverse_json(&v2));
            r.result = Some(json!({
                "c": c,
                "matrix": matrix_json(&m),
                "pullback": inverse_json(&pulled),
                "pullback_annihilator": staircase_json(&inverse::annihilator_in_gamma(&pulled)),
                "pushforward": inverse_json(&pushed),
                "pushforward_annihilator": staircase_json(&inverse::annihilator_in_gamma(&pushed)),
            }));
        }
        Command::BlowupChain => {
            let chain = subalgebra::blowup_chain(&algebra(job)?, config)?;
            r.result = Some(json!({
                "multiplicities": chain.multiplicities(),
                "e1": chain.e1s(),
                "steps": chain.steps,
                "delta_check": chain.delta_check,
            }));
        }
        Command::Canonical => {
            let a = algebra(job)?;
            let s = subalgebra::closure(&a, config)?;
            let v = inverse::inverse_system(&a, &s)?;
            r.invariants = Some(Invariants::of(&s));
            r.inverse_system = Some(inverse_json(&v));
            let reps: Vec<Value> = v
                .basis()
                .iter()
                .map(|g| {
                    let p = inverse::rosenlicht(g, s.conductor())?;
                    let terms: BTreeMap<String, String> = p
                        .terms()
                        .into_iter()
                        .map(|(e, c)| (e.to_string(), rational_string(&c)))
                        .collect();
                    Ok(json!({ "operator": g.to_string(), "laurent": terms }))
                })
                .collect::<Result<_>>()?;
            r.result = Some(json!({ "representatives": reps }));
        }
        Command::Verify => {
            let a = algebra(job)?;
            let ok = inverse::verify_duality(&a, config)?;
            r.result = Some(json!({ "duality_verified": ok }));
            if !ok {
                r.exit_code = EXIT_FAILURE;
            }
        }
    }
    Ok(())
}

/// Runs a job. Errors are folded into the report and its exit code.
pub fn run(job: &JobSpec) -> Report {
    let config = ClosureConfig {
        ceiling: job.options.trunc.unwrap_or(subalgebra::DEFAULT_CEILING),
    };
    let start = Instant::now();
    let mut r = Report::new(job, &config);
    if let Err(e) = dispatch(job, &config, &mut r) {
        r.fail(&e);
    }
    if r.exit_code != EXIT_OK && r.error.is_none() {
        r.status = "negative";
    }
    r.diagnostics.elapsed_us = start.elapsed().as_micros() as u64;
    r
}

/// `expected ⊆ actual`: every key of an expected object must match, arrays
/// must have the same length and match element by element, scalars must be
/// equal. `null` expects nothing.
pub fn json_subset(expected: &Value, actual: &Value) -> bool {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => e
            .iter()
            .all(|(k, v)| a.get(k).is_some_and(|w| json_subset(v, w))),
        (Value::Array(e), Value::Array(a)) => {
            e.len() == a.len() && e.iter().zip(a).all(|(v, w)| json_subset(v, w))
        }
        (Value::Null, _) => true,
        _ => expected == actual,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GoldenOutcome {
    pub file: String,
    pub name: String,
    pub passed: bool,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Runs every `*.json` golden file in `dir`.
pub fn run_golden(dir: &Path) -> Result<Vec<GoldenOutcome>> {
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let mut out = Vec::new();
    for path in files {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        let file = path
            .file_name()
            .map(|f| f.to_string_lossy().into_owned())
            .unwrap_or_default();
        for (i, case) in parse_golden(&text)?.into_iter().enumerate() {
            let job = JobSpec {
                command: case.command,
                generators: case.generators.clone(),
                options: case.options.clone(),
            };
            let report = run(&job);
            let actual = report.to_json();
            let exit_ok = report.exit_code == case.exit_code;
            let body_ok = json_subset(&case.expect, &actual);
            out.push(GoldenOutcome {
                file: file.clone(),
                name: case.name.unwrap_or_else(|| format!("#{i}")),
                passed: exit_ok && body_ok,
                exit_code: report.exit_code,
                detail: (!(exit_ok && body_ok)).then(|| {
                    format!(
                        "expected exit {} got {}; report {}",
                        case.exit_code,
                        report.exit_code,
                        serde_json::to_string(&actual).unwrap_or_default()
                    )
                }),
            });
        }
    }
    Ok(out)
}

/// Parses any single expression; used by fuzzing and the CLI `parse` helper.
pub fn describe_expression(text: &str) -> Result<Value> {
    Ok(match crate::expr::parse_expression(text)? {
        Expr::Series(s) => json!({ "series": series_json(&s) }),
        Expr::Op(g) => json!({ "operator": op_json(&g) }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn job(command: Command, gens: &[&str]) -> JobSpec {
        JobSpec {
            command,
            generators: gens.iter().map(|s| s.to_string()).collect(),
            options: JobOptions::default(),
        }
    }

    #[test]
    fn analyze_toy() {
        let r = run(&job(Command::Analyze, &["t^3+t^4, t^5"]));
        assert_eq!(r.exit_code, 0);
        let inv = r.invariants.unwrap();
        assert_eq!((inv.delta, inv.conductor, inv.mu), (4, 8, 8));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&job(Command::Analyze, &["t^2+t^3"])).exit_code, 2);
        assert_eq!(run(&job(Command::Analyze, &["t^2 + 3/0 t^3"])).exit_code, 3);
        let mut j = job(Command::Annihilate, &["t"]);
        j.options.v = vec!["u^2".into()];
        let r = run(&j);
        assert_eq!(r.exit_code, 4);
        assert!(r.certificates.is_some());
        let r = run(&job(Command::Analyze, &["t^3+t^4+O(t^6), t^5"]));
        assert_eq!(r.exit_code, 5);
    }

    #[test]
    fn parse_job_files() {
        let jobs = parse_jobs(
            r#"{"generators": ["t^3+t^4","t^5"], "command": "analyze", "options": {"trunc": 64}}"#,
        )
        .unwrap();
        assert_eq!(jobs[0].options.trunc, Some(64));
        let jobs = parse_jobs(r#"[{"command": "semigroup", "generators": ["4,6,9"]}, {"command": "verify", "generators": ["t^2,t^3"]}]"#).unwrap();
        assert_eq!(jobs.len(), 2);
        assert!(matches!(parse_jobs("{"), Err(Error::Parse { .. })));
        assert!(parse_jobs(r#"{"command": "nope"}"#).is_err());
        assert!(parse_jobs(r#"{"command": "analyze", "bogus": 1}"#).is_err());
    }

    #[test]
    fn subset_matching() {
        let a = json!({"x": 1, "y": {"z": [1, 2], "w": "a"}});
        assert!(json_subset(&json!({"y": {"z": [1, 2]}}), &a));
        assert!(!json_subset(&json!({"y": {"z": [1]}}), &a));
        assert!(json_subset(&Value::Null, &a));
        assert!(json_subset(&json!({"y": {"z": [null, 2]}}), &a));
        let b = json!({"l": [{"p": 1, "q": 2}, {"p": 3}]});
        assert!(json_subset(&json!({"l": [{"q": 2}, {}]}), &b));
        assert!(!json_subset(&json!({"l": [{"q": 2}]}), &b));
    }
}
