//! Verification of the defining relations of each web category under a
//! fiber spec, and the trace condition driving the classification.

use super::FiberSpec;
use crate::diagram::{Category, GeneratorName, LayeredDiagram, ObjectWord, StrandLabel};
use crate::error::FiberError;
use crate::linalg::LinearMap;
use crate::scalar::quantum::{q2_plus_q2inv, trace_target_in};
use crate::scalar::Scalar;
use GeneratorName::*;

#[derive(Clone, Debug)]
pub struct RelationResult {
    pub name: String,
    pub pass: bool,
    pub max_abs_residual: f64,
}

#[derive(Clone, Debug)]
pub struct RelationReport {
    pub results: Vec<RelationResult>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn failed(&self) -> Vec<&RelationResult> {
        self.results.iter().filter(|r| !r.pass).collect()
    }
}

#[derive(Clone, Debug)]
pub struct TraceReport<S: Scalar> {
    pub pass: bool,
    pub computed: S,
    pub target: S,
}

/// `tr(M^T M^-1) = sum m_ij n_ij`.
pub fn quantum_trace_of<S: Scalar>(m: &LinearMap<S>, m_inv: &LinearMap<S>) -> S {
    let mut tr = S::zero();
    for (&(i, j), s) in m.entries() {
        tr = tr.add(&s.mul(&m_inv.get(i, j)));
    }
    tr
}

/// Check `tr(M^T M^-1)` against the category target `-[2]` / `[2]` / `[3]`.
pub fn check_trace_condition<S: Scalar>(spec: &FiberSpec<S>) -> TraceReport<S> {
    let computed = quantum_trace_of(&spec.m, &spec.m_inv);
    let target = trace_target_in(spec.category, &spec.v);
    TraceReport {
        pass: computed.approx_eq(&target, spec.eps),
        computed,
        target,
    }
}

/// A linear combination of layered diagrams over a common signature.
struct Side<S: Scalar> {
    terms: Vec<(S, LayeredDiagram)>,
}

impl<S: Scalar> Side<S> {
    fn one(d: LayeredDiagram) -> Self {
        Side {
            terms: vec![(S::one(), d)],
        }
    }

    fn scalar(c: S, d: LayeredDiagram) -> Self {
        Side {
            terms: vec![(c, d)],
        }
    }

    fn plus(mut self, c: S, d: LayeredDiagram) -> Self {
        self.terms.push((c, d));
        self
    }
}

fn eval_side<S: Scalar>(spec: &FiberSpec<S>, side: &Side<S>) -> Result<LinearMap<S>, FiberError> {
    let mut acc: Option<LinearMap<S>> = None;
    for (c, d) in &side.terms {
        let m = spec.evaluate(d)?.scale(c);
        acc = Some(match acc {
            None => m,
            Some(a) => a.add(&m),
        });
    }
    acc.ok_or_else(|| FiberError::MissingData("empty relation side".into()))
}

fn diag(
    cat: Category,
    labels: Vec<StrandLabel>,
    layers: Vec<(usize, GeneratorName)>,
) -> LayeredDiagram {
    LayeredDiagram::new(ObjectWord::new(cat, labels).expect("legal labels"), layers)
}

fn xs(cat: Category, k: usize, layers: Vec<(usize, GeneratorName)>) -> LayeredDiagram {
    LayeredDiagram::new(ObjectWord::x_power(cat, k), layers)
}

/// Evaluate both sides of every defining relation and report pass/fail per
/// relation. Errors during evaluation mark the relation failed.
pub fn check_all_relations<S: Scalar>(spec: &FiberSpec<S>) -> RelationReport {
    let mut checks: Vec<(String, Side<S>, Side<S>)> = Vec::new();
    let cat = spec.category;

    match cat {
        Category::Sl2 | Category::So3 => {
            checks.push((
                "zigzag_left".into(),
                Side::one(xs(cat, 1, vec![(1, Cup), (0, Cap)])),
                Side::one(xs(cat, 1, vec![])),
            ));
            checks.push((
                "zigzag_right".into(),
                Side::one(xs(cat, 1, vec![(0, Cup), (1, Cap)])),
                Side::one(xs(cat, 1, vec![])),
            ));
            let circle = xs(cat, 0, vec![(0, Cup), (0, Cap)]);
            let empty = xs(cat, 0, vec![]);
            let target = trace_target_in(cat, &spec.v);
            checks.push((
                "circle".into(),
                Side::one(circle),
                Side::scalar(target, empty.clone()),
            ));
            if cat == Category::So3 {
                // Monogons: two adjacent legs of the vertex closed by a
                // cup (or cap for the coform) vanish identically.
                for (name, d) in [
                    ("monogon_legs12", xs(cat, 1, vec![(0, Cup), (0, Tup)])),
                    ("monogon_legs23", xs(cat, 1, vec![(1, Cup), (0, Tup)])),
                    ("comonogon_legs12", xs(cat, 0, vec![(0, Tdown), (0, Cap)])),
                    ("comonogon_legs23", xs(cat, 0, vec![(0, Tdown), (1, Cap)])),
                ] {
                    checks.push((
                        name.into(),
                        Side::one(d.clone()),
                        Side::scalar(S::zero(), d),
                    ));
                }
                // theta = -[3]
                let theta = xs(cat, 0, vec![(0, Tdown), (0, Tup)]);
                let m3 = trace_target_in(Category::So3, &spec.v).neg();
                checks.push((
                    "theta".into(),
                    Side::one(theta),
                    Side::scalar(m3, empty.clone()),
                ));
                // H = I + 1/(q^2+q^-2) id - 1/(q^2+q^-2) turnback
                let q22 = q2_plus_q2inv(&spec.v);
                if let Ok(c) = S::one().div(&q22) {
                    let h = xs(cat, 2, vec![(0, Tdown), (2, Cap), (3, Cup), (1, Tup)]);
                    let i = xs(cat, 2, vec![(2, Cup), (0, Tup), (0, Tdown), (2, Cap)]);
                    let id2 = xs(cat, 2, vec![]);
                    let turn = xs(cat, 2, vec![(0, Cap), (0, Cup)]);
                    checks.push((
                        "h_eq_i".into(),
                        Side::one(h),
                        Side::one(i).plus(c.clone(), id2).plus(c.neg(), turn),
                    ));
                }
            }
        }
        Category::Gl2 => {
            use StrandLabel::*;
            checks.push((
                "zigzag_x_unprimed".into(),
                Side::one(diag(cat, vec![X], vec![(1, Cup), (0, Cap)])),
                Side::one(diag(cat, vec![X], vec![])),
            ));
            checks.push((
                "zigzag_x_primed".into(),
                Side::one(diag(cat, vec![X], vec![(0, CupPrime), (1, CapPrime)])),
                Side::one(diag(cat, vec![X], vec![])),
            ));
            checks.push((
                "zigzag_y_unprimed".into(),
                Side::one(diag(cat, vec![Y], vec![(0, Cup), (1, Cap)])),
                Side::one(diag(cat, vec![Y], vec![])),
            ));
            checks.push((
                "zigzag_y_primed".into(),
                Side::one(diag(cat, vec![Y], vec![(1, CupPrime), (0, CapPrime)])),
                Side::one(diag(cat, vec![Y], vec![])),
            ));
            checks.push((
                "zigzag_p".into(),
                Side::one(diag(cat, vec![P], vec![(1, PCup), (0, PCap)])),
                Side::one(diag(cat, vec![P], vec![])),
            ));
            checks.push((
                "zigzag_q".into(),
                Side::one(diag(cat, vec![Q], vec![(0, PCup), (1, PCap)])),
                Side::one(diag(cat, vec![Q], vec![])),
            ));
            let two = trace_target_in(Category::Gl2, &spec.v);
            let empty = diag(cat, vec![], vec![]);
            checks.push((
                "circle_cw".into(),
                Side::one(diag(cat, vec![], vec![(0, Cup), (0, CapPrime)])),
                Side::scalar(two.clone(), empty.clone()),
            ));
            checks.push((
                "circle_ccw".into(),
                Side::one(diag(cat, vec![], vec![(0, CupPrime), (0, Cap)])),
                Side::scalar(two.clone(), empty.clone()),
            ));
            checks.push((
                "phantom_circle_cw".into(),
                Side::one(diag(cat, vec![], vec![(0, PCup), (0, PCapPrime)])),
                Side::one(empty.clone()),
            ));
            checks.push((
                "phantom_circle_ccw".into(),
                Side::one(diag(cat, vec![], vec![(0, PCupPrime), (0, PCap)])),
                Side::one(empty.clone()),
            ));
            checks.push((
                "h_eq_i_mixed_left".into(),
                Side::one(diag(
                    cat,
                    vec![X, Q],
                    vec![(2, CupPrime), (0, Tup), (0, Tdown), (2, Cap)],
                )),
                Side::one(diag(cat, vec![X, Q], vec![])),
            ));
            checks.push((
                "h_eq_i_mixed_right".into(),
                Side::one(diag(
                    cat,
                    vec![Q, X],
                    vec![(0, Cup), (1, Tup), (1, Tdown), (0, CapPrime)],
                )),
                Side::one(diag(cat, vec![Q, X], vec![])),
            ));
            checks.push((
                "vertical_eq_horizontal".into(),
                Side::one(diag(cat, vec![P, Q], vec![(0, PCap), (0, PCupPrime)])),
                Side::one(diag(cat, vec![P, Q], vec![])),
            ));
            checks.push((
                "trilinear_evaluation".into(),
                Side::one(diag(cat, vec![], vec![(0, Tdown), (0, Tup)])),
                Side::scalar(two, empty),
            ));
        }
    }

    let mut results = Vec::new();
    for (name, lhs, rhs) in checks {
        let outcome = eval_side(spec, &lhs).and_then(|l| eval_side(spec, &rhs).map(|r| (l, r)));
        let result = match outcome {
            Ok((l, r)) => {
                let diff = l.sub(&r);
                RelationResult {
                    name,
                    pass: diff.is_zero(spec.eps),
                    max_abs_residual: diff.max_residual(),
                }
            }
            Err(_) => RelationResult {
                name,
                pass: false,
                max_abs_residual: f64::INFINITY,
            },
        };
        results.push(result);
    }
    RelationReport { results }
}
