//! JSON (de)serialization of the engine's values with scalar-as-string
//! encoding, shared by all subcommands.

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use webcat::congruence::{CanonicalBlock, CanonicalForm};
use webcat::diagram::{Category, LayeredDiagram};
use webcat::error::ScalarError;
use webcat::fiber::{FiberSpec, Tensor3};
use webcat::linalg::LinearMap;
use webcat::scalar::{ComplexValue, FieldElement, Scalar};
use webcat::solutions::{EnumerationOutput, SolutionConstraint, SolutionFamily};
use webcat::trilinear::{Count, TrilinearInvariants};

#[derive(Debug)]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub location: String,
}

impl CliError {
    pub fn new(code: &str, message: impl ToString, location: &str) -> Self {
        CliError {
            code: code.to_string(),
            message: message.to_string(),
            location: location.to_string(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "code": self.code,
            "message": self.message,
            "location": self.location,
        })
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn bad(code: &str, msg: impl ToString, loc: &str) -> CliError {
    CliError::new(code, msg, loc)
}

/// The two evaluation modes with their chosen value of `q`.
#[derive(Clone, Debug)]
pub enum Mode {
    Exact,
    Numeric(ComplexValue),
}

pub fn parse_mode(mode: &str, q: &str) -> CliResult<Mode> {
    match mode {
        "exact" => {
            if q != "generic" {
                return Err(bad("usage", "exact mode requires --q generic", "--q"));
            }
            Ok(Mode::Exact)
        }
        "numeric" => {
            let qv = ComplexValue::parse(q)
                .ok_or_else(|| bad("parse", format!("cannot parse q: {}", q), "--q"))?;
            Ok(Mode::Numeric(qv))
        }
        other => Err(bad("usage", format!("unknown mode {}", other), "--mode")),
    }
}

// ---- scalar encoding ----

pub fn field_to_string(x: &FieldElement) -> String {
    x.to_string()
}

pub fn complex_to_string(x: &ComplexValue) -> String {
    x.to_string()
}

pub fn parse_field(s: &str) -> CliResult<FieldElement> {
    FieldElement::parse(s).map_err(|e: ScalarError| bad("parse", e, s))
}

// ---- matrices ----

pub fn matrix_to_json_exact(m: &LinearMap<FieldElement>) -> Value {
    matrix_to_json_with(m, field_to_string)
}

pub fn matrix_to_json_numeric(m: &LinearMap<ComplexValue>) -> Value {
    matrix_to_json_with(m, complex_to_string)
}

fn matrix_to_json_with<S: Scalar>(m: &LinearMap<S>, f: impl Fn(&S) -> String) -> Value {
    let entries: Vec<Value> = m
        .entries()
        .map(|(&(i, j), s)| json!([i, j, f(s)]))
        .collect();
    json!({"rows": m.rows, "cols": m.cols, "entries": entries})
}

/// Accepts either dense `[["a", ...], ...]` or sparse
/// `{"rows": r, "cols": c, "entries": [[i, j, "v"], ...]}`.
pub fn matrix_from_json<S: Scalar>(
    v: &Value,
    parse: &dyn Fn(&str) -> CliResult<S>,
) -> CliResult<LinearMap<S>> {
    if let Some(rows) = v.as_array() {
        let r = rows.len();
        let c = rows
            .first()
            .and_then(|x| x.as_array())
            .map(|x| x.len())
            .unwrap_or(0);
        let mut m = LinearMap::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            let row = row
                .as_array()
                .ok_or_else(|| bad("parse", "matrix row is not an array", "M"))?;
            for (j, cell) in row.iter().enumerate() {
                m.set(i, j, parse_scalar_value(cell, parse)?);
            }
        }
        return Ok(m);
    }
    let rows = v["rows"]
        .as_u64()
        .ok_or_else(|| bad("parse", "matrix needs rows", "M"))? as usize;
    let cols = v["cols"]
        .as_u64()
        .ok_or_else(|| bad("parse", "matrix needs cols", "M"))? as usize;
    let mut m = LinearMap::zero(rows, cols);
    for e in v["entries"]
        .as_array()
        .ok_or_else(|| bad("parse", "matrix needs entries", "M"))?
    {
        let t = e
            .as_array()
            .filter(|t| t.len() == 3)
            .ok_or_else(|| bad("parse", "entry must be [i, j, value]", "M"))?;
        let i = t[0].as_u64().unwrap_or(u64::MAX) as usize;
        let j = t[1].as_u64().unwrap_or(u64::MAX) as usize;
        m.set(i, j, parse_scalar_value(&t[2], parse)?);
    }
    Ok(m)
}

fn parse_scalar_value<S: Scalar>(v: &Value, parse: &dyn Fn(&str) -> CliResult<S>) -> CliResult<S> {
    match v {
        Value::String(s) => parse(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(S::from_i64(i))
            } else {
                parse(&n.to_string())
            }
        }
        other => Err(bad("parse", format!("cannot parse scalar {}", other), "")),
    }
}

// ---- tensors ----

pub fn tensor_from_json<S: Scalar>(
    v: &Value,
    parse: &dyn Fn(&str) -> CliResult<S>,
) -> CliResult<Tensor3<S>> {
    let dims = v["dims"]
        .as_array()
        .filter(|d| d.len() == 3)
        .ok_or_else(|| bad("parse", "tensor needs dims [l, m, n]", "T"))?;
    let d = (
        dims[0].as_u64().unwrap_or(0) as usize,
        dims[1].as_u64().unwrap_or(0) as usize,
        dims[2].as_u64().unwrap_or(0) as usize,
    );
    let mut t = Tensor3::zero(d);
    for e in v["entries"]
        .as_array()
        .ok_or_else(|| bad("parse", "tensor needs entries", "T"))?
    {
        let a = e
            .as_array()
            .filter(|t| t.len() == 4)
            .ok_or_else(|| bad("parse", "entry must be [i, j, k, value]", "T"))?;
        t.set(
            a[0].as_u64().unwrap_or(u64::MAX) as usize,
            a[1].as_u64().unwrap_or(u64::MAX) as usize,
            a[2].as_u64().unwrap_or(u64::MAX) as usize,
            parse_scalar_value(&a[3], parse)?,
        );
    }
    Ok(t)
}

pub fn rational_tensor_from_json(v: &Value) -> CliResult<Tensor3<BigRational>> {
    tensor_from_json(v, &|s: &str| {
        let f = parse_field(s)?;
        if !f.den().is_one()
            || f.num().max_exp().unwrap_or(0) != 0
            || f.num().min_exp().unwrap_or(0) != 0
        {
            return Err(bad(
                "parse",
                "trilinear tensors must have rational entries",
                s,
            ));
        }
        Ok(f.num().coeff(0))
    })
}

// ---- diagrams ----

pub fn diagram_from_json(v: &Value) -> CliResult<LayeredDiagram> {
    let d: LayeredDiagram =
        serde_json::from_value(v.clone()).map_err(|e| bad("parse", e, "diagram"))?;
    Ok(d)
}

// ---- fiber specs ----

pub enum SpecJson {
    Exact(FiberSpec<FieldElement>),
    Numeric(FiberSpec<ComplexValue>),
}

pub fn spec_from_json(v: &Value, mode: &Mode, eps: f64) -> CliResult<SpecJson> {
    if v.as_str() == Some("standard") {
        return Err(bad(
            "usage",
            "\"standard\" spec needs a category; use {\"spec\": \"standard\", \"category\": ...}",
            "spec",
        ));
    }
    let category: Category = serde_json::from_value(v["category"].clone())
        .map_err(|e| bad("parse", e, "spec.category"))?;
    if v["spec"].as_str() == Some("standard") || v.get("M").is_none() {
        return standard_spec(category, mode, eps);
    }
    let n = v["n"]
        .as_u64()
        .ok_or_else(|| bad("parse", "spec needs n", "spec.n"))? as usize;
    match mode {
        Mode::Exact => {
            let m = matrix_from_json(&v["M"], &parse_field)?;
            let spec = build_exact(category, n, m, v)?;
            Ok(SpecJson::Exact(spec))
        }
        Mode::Numeric(q) => {
            let vq = q.sqrt();
            let parse = |s: &str| -> CliResult<ComplexValue> {
                if let Some(c) = ComplexValue::parse(s) {
                    return Ok(c);
                }
                let f = parse_field(s)?;
                f.specialize(vq, 1e-12).map_err(|e| bad("pole", e, s))
            };
            let m = matrix_from_json(&v["M"], &parse)?;
            let spec = build_numeric(category, n, m, v, *q, eps, &parse)?;
            Ok(SpecJson::Numeric(spec))
        }
    }
}

pub fn standard_spec(category: Category, mode: &Mode, eps: f64) -> CliResult<SpecJson> {
    use webcat::fiber::{
        gl2_standard_bilinear, gl2_standard_triple, sl2_standard, sym2_standard_pair,
        sym2_standard_pair_numeric,
    };
    match mode {
        Mode::Exact => {
            let v = FieldElement::v();
            let spec = match category {
                Category::Sl2 => sl2_standard(v),
                Category::Gl2 => gl2_standard_triple(2, gl2_standard_bilinear(&v), v, eps),
                Category::So3 => sym2_standard_pair(v),
            }
            .map_err(|e| bad("fiber", e, "spec"))?;
            Ok(SpecJson::Exact(spec.with_eps(eps)))
        }
        Mode::Numeric(q) => {
            let vq = q.sqrt();
            let spec = match category {
                Category::Sl2 => sl2_standard(vq),
                Category::Gl2 => gl2_standard_triple(2, gl2_standard_bilinear(&vq), vq, eps),
                Category::So3 => sym2_standard_pair_numeric(*q, eps),
            }
            .map_err(|e| bad("fiber", e, "spec"))?;
            Ok(SpecJson::Numeric(spec.with_eps(eps)))
        }
    }
}

fn build_exact(
    category: Category,
    n: usize,
    m: LinearMap<FieldElement>,
    v: &Value,
) -> CliResult<FiberSpec<FieldElement>> {
    let var = FieldElement::v();
    let spec = match category {
        Category::Sl2 => FiberSpec::sl2(n, m, var),
        Category::Gl2 => {
            let p = v["P"].as_i64().unwrap_or(1);
            let t = tensor_from_json(&v["T"], &parse_field)?;
            FiberSpec::gl2(n, m, p, t, var)
        }
        Category::So3 => {
            let t = tensor_from_json(&v["T"], &parse_field)?;
            let scale = match v.get("scale_sq") {
                Some(Value::String(s)) => Some(parse_field(s)?),
                _ => None,
            };
            FiberSpec::so3(n, m, t, var, scale)
        }
    };
    spec.map_err(|e| bad("fiber", e, "spec"))
}

fn build_numeric(
    category: Category,
    n: usize,
    m: LinearMap<ComplexValue>,
    v: &Value,
    q: ComplexValue,
    eps: f64,
    parse: &dyn Fn(&str) -> CliResult<ComplexValue>,
) -> CliResult<FiberSpec<ComplexValue>> {
    let vq = q.sqrt();
    let spec = match category {
        Category::Sl2 => FiberSpec::sl2(n, m, vq),
        Category::Gl2 => {
            let p = v["P"].as_i64().unwrap_or(1);
            let t = tensor_from_json(&v["T"], parse)?;
            FiberSpec::gl2(n, m, p, t, vq)
        }
        Category::So3 => {
            let mut t = tensor_from_json(&v["T"], parse)?;
            // an s-scaled exact tensor divides back out numerically
            if let Some(Value::String(sq)) = v.get("scale_sq") {
                let s2 = parse_field(sq)?
                    .specialize(vq, 1e-12)
                    .map_err(|e| bad("pole", e, sq))?;
                let s = s2.sqrt();
                if s.abs() <= eps {
                    return Err(bad("fiber", "scale_sq vanishes at this q", "scale_sq"));
                }
                t = t.scale(&s.recip());
            }
            FiberSpec::so3(n, m, t, vq, None)
        }
    };
    spec.map(|s| s.with_eps(eps))
        .map_err(|e| bad("fiber", e, "spec"))
}

// ---- canonical forms ----

pub fn canonical_to_json<S: Scalar>(f: &CanonicalForm<S>, fmt: impl Fn(&S) -> String) -> Value {
    let blocks: Vec<Value> = f
        .blocks
        .iter()
        .map(|b| match b {
            CanonicalBlock::Gamma { j } => json!({"kind": "Gamma", "j": j}),
            CanonicalBlock::H { k, lambda } => {
                json!({"kind": "H", "k": k, "lambda": fmt(lambda)})
            }
            CanonicalBlock::HQuad { k, trace } => {
                json!({"kind": "H", "k": k, "lambda_plus_inverse": fmt(trace)})
            }
            CanonicalBlock::JordanZero { i } => json!({"kind": "JordanZero", "i": i}),
        })
        .collect();
    json!({"blocks": blocks})
}

// ---- solution families ----

pub fn families_to_json(out: &EnumerationOutput) -> Value {
    match out {
        EnumerationOutput::Exact(fams) => Value::Array(
            fams.iter()
                .map(|f| family_to_json(f, field_to_string))
                .collect(),
        ),
        EnumerationOutput::Rational(fams) => Value::Array(
            fams.iter()
                .map(|f| family_to_json(f, |r: &BigRational| r.to_string()))
                .collect(),
        ),
        EnumerationOutput::Numeric(fams) => Value::Array(
            fams.iter()
                .map(|f| family_to_json(f, complex_to_string))
                .collect(),
        ),
    }
}

fn family_to_json<S: Scalar>(f: &SolutionFamily<S>, fmt: impl Fn(&S) -> String) -> Value {
    let mut m = Map::new();
    m.insert(
        "structure".into(),
        json!({
            "gamma_sizes": f.structure.gamma_sizes,
            "h_half_sizes": f.structure.h_half_sizes,
        }),
    );
    let constraint = match &f.constraint {
        SolutionConstraint::GammaOnly => json!({"kind": "gamma_only"}),
        SolutionConstraint::ExplicitLambdas { k, linear_coeff } => json!({
            "kind": "explicit_lambda",
            "quadratic": {
                "a": k.to_string(),
                "b": fmt(linear_coeff),
                "c": k.to_string(),
            },
        }),
        SolutionConstraint::ParametricFamily {
            free_half_sizes,
            last_k,
            base_shift,
        } => json!({
            "kind": "parametric",
            "free_parameters": free_half_sizes.len(),
            "free_half_sizes": free_half_sizes,
            "last_quadratic": {
                "a": last_k.to_string(),
                "b_base": fmt(base_shift),
                "b_mu_terms": free_half_sizes,
                "c": last_k.to_string(),
            },
        }),
    };
    m.insert("constraint".into(), constraint);
    Value::Object(m)
}

// ---- trilinear ----

pub fn invariants_to_json(inv: &TrilinearInvariants) -> Value {
    let counts: Vec<Value> = inv
        .counts
        .iter()
        .map(|c| match c {
            Count::Finite(n) => json!(n),
            Count::Infinite => json!("inf"),
        })
        .collect();
    let types: Vec<Value> = inv
        .types
        .iter()
        .map(|t| match &t.j {
            Some(j) if t.tag == 9 => json!({"tag": t.tag, "j": j.to_string()}),
            _ => json!({"tag": t.tag}),
        })
        .collect();
    json!({"counts": counts, "types": types})
}
