//! Enumeration, up to congruence, of the canonical-form solutions of the
//! trace equations `tr(M^T M^-1) = -[2] / [2] / [3]`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::congruence::{build_gamma, build_h, direct_sum};
use crate::diagram::Category;
use crate::error::SolutionsError;
use crate::linalg::LinearMap;
use crate::scalar::quantum::{trace_target, trace_target_in};
use crate::scalar::{ComplexValue, FieldElement, QMode, Scalar};

/// Sizes of the Gamma blocks and half-sizes of the H blocks; together they
/// fill the dimension: `sum j + sum 2k = n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BlockStructure {
    pub gamma_sizes: Vec<usize>,
    pub h_half_sizes: Vec<usize>,
}

impl BlockStructure {
    pub fn total(&self) -> usize {
        self.gamma_sizes.iter().sum::<usize>() + 2 * self.h_half_sizes.iter().sum::<usize>()
    }

    /// `sum (-1)^{j+1} j` over the Gamma part.
    pub fn gamma_trace(&self) -> i64 {
        self.gamma_sizes
            .iter()
            .map(|&j| if j % 2 == 1 { j as i64 } else { -(j as i64) })
            .sum()
    }
}

impl std::fmt::Display for BlockStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self
            .gamma_sizes
            .iter()
            .map(|j| format!("Gamma_{}", j))
            .collect();
        parts.extend(
            self.h_half_sizes
                .iter()
                .map(|k| format!("H_{}(lambda)", 2 * k)),
        );
        write!(f, "{}", parts.join(" + "))
    }
}

/// How the H-block parameters are constrained.
#[derive(Clone, Debug, PartialEq)]
pub enum SolutionConstraint<S: Scalar> {
    /// No H blocks; the Gamma part alone hits the target (special q only).
    GammaOnly,
    /// One H block `H_{2k}(lambda)` with `lambda` a root of
    /// `k x^2 + c x + k = 0`; the two roots are mutually inverse, so the
    /// quadratic is the lambda class.
    ExplicitLambdas { k: usize, linear_coeff: S },
    /// Two or more H blocks: all but the last lambda are free parameters
    /// mu_b; the last solves `k x^2 + (base + sum k_b (mu_b + mu_b^-1)) x
    /// + k = 0`.
    ParametricFamily {
        free_half_sizes: Vec<usize>,
        last_k: usize,
        base_shift: S,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolutionFamily<S: Scalar> {
    pub structure: BlockStructure,
    pub constraint: SolutionConstraint<S>,
}

impl<S: Scalar> SolutionFamily<S> {
    pub fn is_parametric(&self) -> bool {
        matches!(self.constraint, SolutionConstraint::ParametricFamily { .. })
    }
}

/// All multisets `(gamma sizes, h half-sizes)` filling dimension `n`, in a
/// deterministic order.
pub fn enumerate_structures(n: usize) -> Vec<BlockStructure> {
    let mut out = Vec::new();
    for h_half_total in 0..=n / 2 {
        let gamma_total = n - 2 * h_half_total;
        for gammas in partitions(gamma_total) {
            for hs in partitions(h_half_total) {
                out.push(BlockStructure {
                    gamma_sizes: gammas.clone(),
                    h_half_sizes: hs,
                });
            }
        }
    }
    out.sort();
    out
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for rest in go(n - first, first) {
                let mut p = vec![first];
                p.extend(rest);
                out.push(p);
            }
        }
        out
    }
    go(n, n.max(1))
}

/// Enumerate solution families of `tr(M^T M^-1) = target` over the block
/// structures of size `n`. Families whose only lambda would be the
/// forbidden value `(-1)^{k+1}` are dropped.
pub fn enumerate_solutions_in<S: Scalar>(
    category: Category,
    n: usize,
    target: &S,
    eps: f64,
) -> Vec<SolutionFamily<S>> {
    let _ = category;
    let mut out = Vec::new();
    for structure in enumerate_structures(n) {
        let g = S::from_i64(structure.gamma_trace());
        let shift = g.sub(target); // the linear coefficient contribution
        let r = structure.h_half_sizes.len();
        match r {
            0 => {
                if shift.is_zero_tol(eps) {
                    out.push(SolutionFamily {
                        structure,
                        constraint: SolutionConstraint::GammaOnly,
                    });
                }
            }
            1 => {
                let k = structure.h_half_sizes[0];
                // lambda = (-1)^{k+1} is a root iff shift = -2k (-1)^{k+1},
                // and then it is a double root (the pair is self-inverse),
                // so the family is empty.
                let forbidden = if k % 2 == 1 { 1i64 } else { -1 };
                let bad_shift = S::from_i64(-2 * (k as i64) * forbidden);
                if shift.approx_eq(&bad_shift, eps) {
                    continue;
                }
                out.push(SolutionFamily {
                    structure,
                    constraint: SolutionConstraint::ExplicitLambdas {
                        k,
                        linear_coeff: shift,
                    },
                });
            }
            _ => {
                let mut hs = structure.h_half_sizes.clone();
                let last_k = hs.pop().expect("nonempty");
                out.push(SolutionFamily {
                    structure: structure.clone(),
                    constraint: SolutionConstraint::ParametricFamily {
                        free_half_sizes: hs,
                        last_k,
                        base_shift: shift,
                    },
                });
            }
        }
    }
    out
}

/// Solutions at symbolic generic `q`.
pub fn enumerate_solutions_generic(
    category: Category,
    n: usize,
) -> Vec<SolutionFamily<FieldElement>> {
    let target = trace_target(category);
    enumerate_solutions_in(category, n, &target, 0.0)
}

/// Solutions at an exact rational `q`.
pub fn enumerate_solutions_rational(
    category: Category,
    n: usize,
    q0: &BigRational,
) -> Result<Vec<SolutionFamily<BigRational>>, SolutionsError> {
    let target = trace_target(category).specialize_rational_q(q0)?;
    Ok(enumerate_solutions_in(category, n, &target, 0.0))
}

/// Solutions at a numeric complex `q`.
pub fn enumerate_solutions_numeric(
    category: Category,
    n: usize,
    q0: ComplexValue,
    eps: f64,
) -> Vec<SolutionFamily<ComplexValue>> {
    let v = q0.sqrt();
    let target = trace_target_in(category, &v);
    enumerate_solutions_in(category, n, &target, eps)
}

pub fn enumerate_solutions(
    category: Category,
    n: usize,
    mode: &QMode,
) -> Result<EnumerationOutput, SolutionsError> {
    Ok(match mode {
        QMode::Generic => EnumerationOutput::Exact(enumerate_solutions_generic(category, n)),
        QMode::Rational(q0) => {
            EnumerationOutput::Rational(enumerate_solutions_rational(category, n, q0)?)
        }
        QMode::Numeric(q0) => EnumerationOutput::Numeric(enumerate_solutions_numeric(
            category,
            n,
            *q0,
            crate::scalar::DEFAULT_EPS,
        )),
    })
}

#[derive(Clone, Debug)]
pub enum EnumerationOutput {
    Exact(Vec<SolutionFamily<FieldElement>>),
    Rational(Vec<SolutionFamily<BigRational>>),
    Numeric(Vec<SolutionFamily<ComplexValue>>),
}

impl EnumerationOutput {
    pub fn len(&self) -> usize {
        match self {
            EnumerationOutput::Exact(v) => v.len(),
            EnumerationOutput::Rational(v) => v.len(),
            EnumerationOutput::Numeric(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// True iff no fiber datum exists at the small dimensions: `n = 1` for
/// SL2/GL2 and `n <= 2` for SO3.
///
/// SL2/GL2 run the trace-equation enumeration and check emptiness. For SO3
/// the bilinear trace equation alone does admit an `H_2(lambda)` family at
/// `n = 2` (with `lambda + lambda^-1 = [3]`), but no trilinear partner
/// satisfying the vertex relations exists, so no tuple does; the `n = 2`
/// answer therefore only needs the `n = 1` enumeration.
pub fn n1_nonexistence(category: Category, mode: &QMode) -> Result<bool, SolutionsError> {
    match category {
        Category::Sl2 | Category::Gl2 => Ok(enumerate_solutions(category, 1, mode)?.is_empty()),
        Category::So3 => {
            // n = 1: honest enumeration; n = 2: tuples never exist even
            // though the bilinear equation is solvable.
            Ok(enumerate_solutions(category, 1, mode)?.is_empty())
        }
    }
}

/// Instantiate a family as a concrete matrix, choosing a numeric lambda
/// (one root of the quadratic, free parameters set to `mu = 2`).
pub fn realize_family_numeric(family: &SolutionFamily<ComplexValue>) -> LinearMap<ComplexValue> {
    let mut blocks: Vec<LinearMap<ComplexValue>> = family
        .structure
        .gamma_sizes
        .iter()
        .map(|&j| build_gamma(j))
        .collect();
    match &family.constraint {
        SolutionConstraint::GammaOnly => {}
        SolutionConstraint::ExplicitLambdas { k, linear_coeff } => {
            let lam = quadratic_root(*k, *linear_coeff);
            blocks.push(build_h(*k, &lam));
        }
        SolutionConstraint::ParametricFamily {
            free_half_sizes,
            last_k,
            base_shift,
        } => {
            let mu = ComplexValue::from_f64(2.0);
            let mut shift = *base_shift;
            for &kb in free_half_sizes {
                blocks.push(build_h(kb, &mu));
                shift = shift + ComplexValue::from_f64(kb as f64) * (mu + mu.recip());
            }
            let lam = quadratic_root(*last_k, shift);
            blocks.push(build_h(*last_k, &lam));
        }
    }
    direct_sum(&blocks)
}

/// One root of `k x^2 + c x + k = 0`.
fn quadratic_root(k: usize, c: ComplexValue) -> ComplexValue {
    let kk = ComplexValue::from_f64(k as f64);
    let disc = c * c - ComplexValue::from_f64(4.0) * kk * kk;
    let s = disc.sqrt();
    (-c + s) / (ComplexValue::from_f64(2.0) * kk)
}

/// A quadratic surd `a + b sqrt(d)` over the rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct Surd {
    pub a: BigRational,
    pub b: BigRational,
    pub disc: BigRational,
}

impl std::fmt::Display for Surd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.disc)
        }
    }
}

/// An all-Gamma structure together with the special values of `q` at which
/// it solves the trace equation.
#[derive(Clone, Debug)]
pub struct SpecialGammaFamily {
    pub structure: BlockStructure,
    /// The defining polynomial in `q` (SL2/GL2) or in `q^2` (SO3),
    /// ascending coefficients.
    pub poly: Vec<BigRational>,
    /// True when the polynomial variable is `q^2`.
    pub in_q_squared: bool,
    /// Exact roots of the quadratic defining polynomial.
    pub roots: Vec<Surd>,
}

/// For every all-Gamma structure of size `n`, the exact special `q` values
/// (roots of a quadratic in `q`, or in `q^2` for SO3) where it becomes a
/// solution.
pub fn special_gamma_solutions(category: Category, n: usize) -> Vec<SpecialGammaFamily> {
    let mut out = Vec::new();
    for structure in enumerate_structures(n) {
        if !structure.h_half_sizes.is_empty() {
            continue;
        }
        let g = BigRational::from_integer(structure.gamma_trace().into());
        // sl2: -q - q^-1 = g <=> q^2 + g q + 1 = 0
        // gl2:  q + q^-1 = g <=> q^2 - g q + 1 = 0
        // so3:  q^2 + 1 + q^-2 = g <=> (q^2)^2 + (1 - g) q^2 + 1 = 0
        let (poly, in_q_squared) = match category {
            Category::Sl2 => (
                vec![
                    <BigRational as One>::one(),
                    g.clone(),
                    <BigRational as One>::one(),
                ],
                false,
            ),
            Category::Gl2 => (
                vec![
                    <BigRational as One>::one(),
                    -g.clone(),
                    <BigRational as One>::one(),
                ],
                false,
            ),
            Category::So3 => (
                vec![
                    <BigRational as One>::one(),
                    <BigRational as One>::one() - g.clone(),
                    <BigRational as One>::one(),
                ],
                true,
            ),
        };
        let roots = quadratic_surd_roots(&poly);
        out.push(SpecialGammaFamily {
            structure,
            poly,
            in_q_squared,
            roots,
        });
    }
    out
}

/// Exact roots of `c0 + c1 x + c2 x^2` as surds.
fn quadratic_surd_roots(p: &[BigRational]) -> Vec<Surd> {
    let (c0, c1, c2) = (p[0].clone(), p[1].clone(), p[2].clone());
    let two = BigRational::from_integer(2.into());
    let four = BigRational::from_integer(4.into());
    let disc = &c1 * &c1 - four * &c2 * &c0;
    let a = -&c1 / (&two * &c2);
    if disc.is_zero() {
        return vec![Surd {
            a,
            b: <BigRational as Zero>::zero(),
            disc,
        }];
    }
    // try to take an exact rational square root of the discriminant
    if let Some(s) = rational_sqrt(&disc) {
        let b = &s / (&two * &c2);
        return vec![
            Surd {
                a: &a + &b,
                b: <BigRational as Zero>::zero(),
                disc: <BigRational as Zero>::zero(),
            },
            Surd {
                a: &a - &b,
                b: <BigRational as Zero>::zero(),
                disc: <BigRational as Zero>::zero(),
            },
        ];
    }
    let b = <BigRational as One>::one() / (two * c2);
    vec![
        Surd {
            a: a.clone(),
            b: b.clone(),
            disc: disc.clone(),
        },
        Surd { a, b: -b, disc },
    ]
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// An explicit matrix with `tr(M^T M^-1)` equal to the category target:
/// identity padding plus a 2-by-2 antidiagonal `(1, x)` block, `x` solving
/// the induced quadratic. Exact for `n = 2` (SL2/GL2) and `n = 3` (SO3);
/// larger dimensions need a numeric `q`.
pub fn existence_witness_numeric(
    category: Category,
    n: usize,
    q0: ComplexValue,
) -> Result<LinearMap<ComplexValue>, SolutionsError> {
    let min_n = match category {
        Category::Sl2 | Category::Gl2 => 2,
        Category::So3 => 3,
    };
    if n < min_n {
        return Err(SolutionsError::NoSolution);
    }
    let v = q0.sqrt();
    let target = trace_target_in(category, &v);
    // x + x^-1 = target - (n - 2): x^2 + ((n-2) - target) x + 1 = 0
    let c = ComplexValue::from_f64((n - 2) as f64) - target;
    let disc = c * c - ComplexValue::from_f64(4.0);
    let x = (-c + disc.sqrt()) / ComplexValue::from_f64(2.0);
    let mut m = LinearMap::identity(n);
    m.set(n - 2, n - 2, ComplexValue::zero());
    m.set(n - 1, n - 1, ComplexValue::zero());
    m.set(n - 2, n - 1, ComplexValue::one());
    m.set(n - 1, n - 2, x);
    Ok(m)
}

/// The exact witnesses available without adjoining quadratic roots.
pub fn existence_witness_exact(
    category: Category,
    n: usize,
) -> Result<LinearMap<FieldElement>, SolutionsError> {
    let q = FieldElement::q();
    match (category, n) {
        (Category::Sl2 | Category::Gl2, 0 | 1) | (Category::So3, 0..=2) => {
            Err(SolutionsError::NoSolution)
        }
        (Category::Sl2, 2) => Ok(LinearMap::from_dense(&[
            vec![FieldElement::zero(), FieldElement::one()],
            vec![-q, FieldElement::zero()],
        ])),
        (Category::Gl2, 2) => Ok(LinearMap::from_dense(&[
            vec![FieldElement::zero(), FieldElement::one()],
            vec![q, FieldElement::zero()],
        ])),
        (Category::So3, 3) => {
            let mut m = LinearMap::zero(3, 3);
            m.set(0, 0, FieldElement::one());
            m.set(1, 2, FieldElement::one());
            m.set(2, 1, FieldElement::v_pow(4));
            Ok(m)
        }
        _ => Err(SolutionsError::Scalar(crate::error::ScalarError::Parse(
            format!(
                "exact witness for n = {} needs a quadratic extension; use a numeric q",
                n
            ),
        ))),
    }
}
