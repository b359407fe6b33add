//! `webcat`: command-line surface over the web-category engine with stable
//! JSON input and output.

mod json;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use json::{CliError, CliResult, Mode, SpecJson};
use webcat::diagram::{
    enumerate_matchings, enumerate_planar_partitions, gl2_basis, Category, ObjectWord, StrandLabel,
};
use webcat::fiber::{check_all_relations, faithfulness_check, flip_test};
use webcat::scalar::{ComplexValue, QMode, DEFAULT_EPS};
use webcat::solutions::{enumerate_solutions, existence_witness_exact, existence_witness_numeric};
use webcat::trilinear;

#[derive(Parser)]
#[command(
    name = "webcat",
    version,
    about = "Exact evaluation and classification for SL2/GL2/SO3 web categories",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Web category
    #[arg(long, value_parser = ["sl2", "gl2", "so3"])]
    category: Option<String>,
    /// Evaluation mode
    #[arg(long, default_value = "exact", value_parser = ["exact", "numeric"])]
    mode: String,
    /// q as "generic" or a complex number "a+bi"
    #[arg(long, default_value = "generic")]
    q: String,
    /// Numeric tolerance (overrides WEBCAT_EPS)
    #[arg(long)]
    eps: Option<f64>,
    /// Input file (JSON)
    #[arg(long = "in")]
    input: Option<String>,
    /// Output file; stdout when omitted
    #[arg(long = "out")]
    output: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a diagram under a fiber spec
    Eval(CommonOpts),
    /// Check every defining relation of the category under a spec
    Relations(CommonOpts),
    /// Enumerate the diagram basis of Hom(k, l)
    Basis {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = false)]
        count_only: bool,
    },
    /// tr(M^T M^-1) of a matrix
    Trace(CommonOpts),
    /// Congruence canonical form of a matrix
    Canonical(CommonOpts),
    /// Congruence test of two matrices
    Congruent {
        #[command(flatten)]
        common: CommonOpts,
        a: String,
        b: String,
    },
    /// Enumerate trace-equation solution families up to congruence
    Enumerate {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        n: usize,
    },
    /// An explicit matrix witnessing solvability at dimension n
    Witness {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        n: usize,
    },
    /// Classify the slice cubics and rank-one counts of a 3x3x3 tensor
    TrilinearClassify {
        #[command(flatten)]
        common: CommonOpts,
        file: String,
    },
    /// Invariant-based equivalence test of two 3x3x3 tensors
    TrilinearEquiv {
        #[command(flatten)]
        common: CommonOpts,
        a: String,
        b: String,
    },
    /// Does the positive crossing act as the flip?
    FlipTest(CommonOpts),
    /// Linear independence of the basis images of Hom(k, l)
    Faithful {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(64);
        }
    };
    let (out_path, result) = run(cli.command);
    match result {
        Ok(v) => {
            let text = serde_json::to_string_pretty(&v).expect("serializable");
            match out_path {
                Some(p) => {
                    if fs::write(&p, text + "\n").is_err() {
                        eprintln!("cannot write {}", p);
                        return ExitCode::from(2);
                    }
                }
                None => println!("{}", text),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            println!("{}", serde_json::to_string_pretty(&e.to_json()).unwrap());
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> (Option<String>, CliResult<Value>) {
    let common = match &cmd {
        Command::Eval(c)
        | Command::Relations(c)
        | Command::Trace(c)
        | Command::Canonical(c)
        | Command::FlipTest(c) => c.clone(),
        Command::Basis { common, .. }
        | Command::Congruent { common, .. }
        | Command::Enumerate { common, .. }
        | Command::Witness { common, .. }
        | Command::TrilinearClassify { common, .. }
        | Command::TrilinearEquiv { common, .. }
        | Command::Faithful { common, .. } => common.clone(),
    };
    let out = common.output.clone();
    (out, dispatch(cmd, common))
}

fn eps_of(common: &CommonOpts) -> f64 {
    common
        .eps
        .or_else(|| {
            std::env::var("WEBCAT_EPS")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(DEFAULT_EPS)
}

fn category_of(common: &CommonOpts) -> CliResult<Category> {
    match common.category.as_deref() {
        Some("sl2") => Ok(Category::Sl2),
        Some("gl2") => Ok(Category::Gl2),
        Some("so3") => Ok(Category::So3),
        _ => Err(CliError::new(
            "usage",
            "--category is required",
            "--category",
        )),
    }
}

fn read_json(path: &Option<String>) -> CliResult<Value> {
    let p = path
        .as_ref()
        .ok_or_else(|| CliError::new("usage", "--in FILE is required", "--in"))?;
    read_json_path(p)
}

fn read_json_path(p: &str) -> CliResult<Value> {
    let text =
        fs::read_to_string(p).map_err(|e| CliError::new("io", format!("{}: {}", p, e), p))?;
    serde_json::from_str(&text).map_err(|e| CliError::new("parse", e, p))
}

fn load_spec(common: &CommonOpts, input: &Value) -> CliResult<SpecJson> {
    let mode = json::parse_mode(&common.mode, &common.q)?;
    let eps = eps_of(common);
    if input["spec"].is_object() {
        return json::spec_from_json(&input["spec"], &mode, eps);
    }
    if input["spec"].as_str() == Some("standard")
        || (input.get("M").is_none() && input["category"].is_string())
        || (input.get("M").is_none() && common.category.is_some())
    {
        let cat = match input.get("category") {
            Some(c) if c.is_string() => serde_json::from_value(c.clone())
                .map_err(|e| CliError::new("parse", e, "category"))?,
            _ => category_of(common)?,
        };
        return json::standard_spec(cat, &mode, eps);
    }
    json::spec_from_json(input, &mode, eps)
}

fn dispatch(cmd: Command, _common: CommonOpts) -> CliResult<Value> {
    match cmd {
        Command::Eval(ref c) => {
            let input = read_json(&c.input)?;
            let spec = load_spec(c, &input)?;
            let dv = if input.get("diagram").is_some() {
                input["diagram"].clone()
            } else {
                input.clone()
            };
            let d = json::diagram_from_json(&dv)?;
            match spec {
                SpecJson::Exact(s) => {
                    let m = s
                        .evaluate(&d)
                        .map_err(|e| CliError::new("eval", e, "diagram"))?;
                    Ok(json::matrix_to_json_exact(&m))
                }
                SpecJson::Numeric(s) => {
                    let m = s
                        .evaluate(&d)
                        .map_err(|e| CliError::new("eval", e, "diagram"))?;
                    Ok(json::matrix_to_json_numeric(&m))
                }
            }
        }
        Command::Relations(ref c) => {
            let input = match &c.input {
                Some(_) => read_json(&c.input)?,
                None => json!({"spec": "standard"}),
            };
            let spec = load_spec(c, &input)?;
            let report = match spec {
                SpecJson::Exact(s) => check_all_relations(&s),
                SpecJson::Numeric(s) => check_all_relations(&s),
            };
            let rels: Vec<Value> = report
                .results
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "pass": r.pass,
                        "max_abs_residual": if r.max_abs_residual.is_finite() {
                            json!(r.max_abs_residual)
                        } else {
                            json!("exact-mismatch")
                        },
                    })
                })
                .collect();
            Ok(json!({"all_pass": report.all_pass(), "relations": rels}))
        }
        Command::Basis {
            ref common,
            k,
            l,
            count_only,
        } => {
            let cat = category_of(common)?;
            let count = match cat {
                Category::Sl2 | Category::Gl2 => enumerate_matchings(k, l).len(),
                Category::So3 => enumerate_planar_partitions(k, l).len(),
            };
            if count_only {
                return Ok(json!({"count": count}));
            }
            let diagrams: Vec<Value> = match cat {
                Category::Sl2 => enumerate_matchings(k, l)
                    .iter()
                    .map(|m| {
                        serde_json::to_value(webcat::diagram::matching_to_diagram(cat, m)).unwrap()
                    })
                    .collect(),
                Category::So3 => enumerate_planar_partitions(k, l)
                    .iter()
                    .map(|p| {
                        serde_json::to_value(webcat::diagram::partition_to_diagram(p)).unwrap()
                    })
                    .collect(),
                Category::Gl2 => {
                    let alt = |len: usize| {
                        ObjectWord::new(
                            Category::Gl2,
                            (0..len)
                                .map(|i| {
                                    if i % 2 == 0 {
                                        StrandLabel::X
                                    } else {
                                        StrandLabel::Y
                                    }
                                })
                                .collect(),
                        )
                        .expect("legal word")
                    };
                    gl2_basis(&alt(k), &alt(l))
                        .map_err(|e| CliError::new("diagram", e, "basis"))?
                        .iter()
                        .map(|d| serde_json::to_value(d).unwrap())
                        .collect()
                }
            };
            Ok(json!({"count": count, "diagrams": diagrams}))
        }
        Command::Trace(ref c) => {
            let input = read_json(&c.input)?;
            let mval = if input.get("M").is_some() {
                input["M"].clone()
            } else {
                input.clone()
            };
            match json::parse_mode(&c.mode, &c.q)? {
                Mode::Exact => {
                    let m = json::matrix_from_json(&mval, &json::parse_field)?;
                    let tr = webcat::congruence::quantum_trace(&m, 0.0)
                        .map_err(|e| CliError::new("congruence", e, "M"))?;
                    Ok(json!({"trace": json::field_to_string(&tr)}))
                }
                Mode::Numeric(q) => {
                    let parse = numeric_parser(q);
                    let m = json::matrix_from_json(&mval, &parse)?;
                    let tr = webcat::congruence::quantum_trace(&m, eps_of(c))
                        .map_err(|e| CliError::new("congruence", e, "M"))?;
                    Ok(json!({"trace": json::complex_to_string(&tr)}))
                }
            }
        }
        Command::Canonical(ref c) => {
            let input = read_json(&c.input)?;
            let mval = if input.get("M").is_some() {
                input["M"].clone()
            } else {
                input.clone()
            };
            canonical_json(c, &mval)
        }
        Command::Congruent {
            ref common,
            ref a,
            ref b,
        } => {
            let va = read_json_path(a)?;
            let vb = read_json_path(b)?;
            match json::parse_mode(&common.mode, &common.q)? {
                Mode::Exact => {
                    let ma = rational_matrix(&va)?;
                    let mb = rational_matrix(&vb)?;
                    let ans = webcat::congruence::congruent_rational(&ma, &mb)
                        .map_err(|e| CliError::new("congruence", e, a))?;
                    Ok(json!({"congruent": ans}))
                }
                Mode::Numeric(q) => {
                    let parse = numeric_parser(q);
                    let ma = json::matrix_from_json(&va, &parse)?;
                    let mb = json::matrix_from_json(&vb, &parse)?;
                    let ans = webcat::congruence::congruent_numeric(&ma, &mb, eps_of(common))
                        .map_err(|e| CliError::new("congruence", e, a))?;
                    Ok(json!({"congruent": ans}))
                }
            }
        }
        Command::Enumerate { ref common, n } => {
            let cat = category_of(common)?;
            let qmode = qmode_of(common)?;
            let fams = enumerate_solutions(cat, n, &qmode)
                .map_err(|e| CliError::new("solutions", e, "--q"))?;
            Ok(json!({"families": json::families_to_json(&fams)}))
        }
        Command::Witness { ref common, n } => {
            let cat = category_of(common)?;
            match json::parse_mode(&common.mode, &common.q)? {
                Mode::Exact => {
                    let m = existence_witness_exact(cat, n)
                        .map_err(|e| CliError::new("solutions", e, "--n"))?;
                    Ok(json!({"witness": json::matrix_to_json_exact(&m)}))
                }
                Mode::Numeric(q) => {
                    let m = existence_witness_numeric(cat, n, q)
                        .map_err(|e| CliError::new("solutions", e, "--n"))?;
                    Ok(json!({"witness": json::matrix_to_json_numeric(&m)}))
                }
            }
        }
        Command::TrilinearClassify { ref file, .. } => {
            let v = read_json_path(file)?;
            let tv = if v.get("T").is_some() {
                v["T"].clone()
            } else {
                v
            };
            let t = json::rational_tensor_from_json(&tv)?;
            let inv = trilinear::invariants(&t).map_err(|e| CliError::new("trilinear", e, file))?;
            Ok(json::invariants_to_json(&inv))
        }
        Command::TrilinearEquiv { ref a, ref b, .. } => {
            let load = |p: &str| -> CliResult<_> {
                let v = read_json_path(p)?;
                let tv = if v.get("T").is_some() {
                    v["T"].clone()
                } else {
                    v
                };
                json::rational_tensor_from_json(&tv)
            };
            let ta = load(a)?;
            let tb = load(b)?;
            match trilinear::equivalent(&ta, &tb) {
                Ok(ans) => Ok(json!({"equivalent": ans})),
                Err(webcat::error::TrilinearError::Inconclusive) => {
                    Ok(json!({"equivalent": "inconclusive"}))
                }
                Err(e) => Err(CliError::new("trilinear", e, a)),
            }
        }
        Command::FlipTest(ref c) => {
            let input = match &c.input {
                Some(_) => read_json(&c.input)?,
                None => json!({"spec": "standard"}),
            };
            let spec = load_spec(c, &input)?;
            let ans = match spec {
                SpecJson::Exact(s) => flip_test(&s),
                SpecJson::Numeric(s) => flip_test(&s),
            }
            .map_err(|e| CliError::new("fiber", e, "spec"))?;
            Ok(json!({"flip": ans}))
        }
        Command::Faithful { ref common, k, l } => {
            let input = match &common.input {
                Some(_) => read_json(&common.input)?,
                None => json!({"spec": "standard"}),
            };
            let spec = load_spec(common, &input)?;
            let ans = match spec {
                SpecJson::Exact(s) => faithfulness_check(&s, k, l),
                SpecJson::Numeric(s) => faithfulness_check(&s, k, l),
            }
            .map_err(|e| CliError::new("fiber", e, "spec"))?;
            Ok(json!({"faithful": ans}))
        }
    }
}

fn numeric_parser(q: ComplexValue) -> impl Fn(&str) -> CliResult<ComplexValue> {
    let vq = q.sqrt();
    move |s: &str| {
        if let Some(cv) = ComplexValue::parse(s) {
            return Ok(cv);
        }
        json::parse_field(s)?
            .specialize(vq, 1e-12)
            .map_err(|e| CliError::new("pole", e, s))
    }
}

fn qmode_of(common: &CommonOpts) -> CliResult<QMode> {
    if common.q == "generic" {
        return Ok(QMode::Generic);
    }
    // exact rational q when it parses as a plain rational
    if !common.q.contains('i') && !common.q.contains('v') {
        if let Ok(f) = webcat::scalar::FieldElement::parse(&common.q) {
            if f.den().is_one() && f.num().max_exp().unwrap_or(0) == 0 {
                return Ok(QMode::Rational(f.num().coeff(0)));
            }
        }
    }
    let q = ComplexValue::parse(&common.q)
        .ok_or_else(|| CliError::new("parse", format!("cannot parse q: {}", common.q), "--q"))?;
    Ok(QMode::Numeric(q))
}

fn rational_matrix(v: &Value) -> CliResult<webcat::linalg::LinearMap<num_rational::BigRational>> {
    json::matrix_from_json(v, &|s: &str| {
        let f = json::parse_field(s)?;
        if f.den().is_one()
            && f.num().max_exp().unwrap_or(0) == 0
            && f.num().min_exp().unwrap_or(0) == 0
        {
            Ok(f.num().coeff(0))
        } else {
            Err(CliError::new(
                "usage",
                "exact congruence needs rational entries; use numeric mode",
                s,
            ))
        }
    })
}

fn canonical_json(c: &CommonOpts, mval: &Value) -> CliResult<Value> {
    match json::parse_mode(&c.mode, &c.q)? {
        Mode::Exact => {
            if let Ok(m) = rational_matrix(mval) {
                let f = webcat::congruence::canonical_form_rational(&m)
                    .map_err(|e| CliError::new("congruence", e, "M"))?;
                return Ok(json::canonical_to_json(&f, |r| r.to_string()));
            }
            let m = json::matrix_from_json(mval, &json::parse_field)?;
            let f = webcat::congruence::canonical_form_symbolic(&m)
                .map_err(|e| CliError::new("congruence", e, "M"))?;
            Ok(json::canonical_to_json(&f, json::field_to_string))
        }
        Mode::Numeric(q) => {
            let parse = numeric_parser(q);
            let m = json::matrix_from_json(mval, &parse)?;
            let f = webcat::congruence::canonical_form_numeric(&m, eps_of(c))
                .map_err(|e| CliError::new("congruence", e, "M"))?;
            Ok(json::canonical_to_json(&f, |l| {
                json::complex_to_string(&webcat::congruence::display_lambda(*l))
            }))
        }
    }
}
