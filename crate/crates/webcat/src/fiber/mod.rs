//! Fiber 2-representations: linear data attached to the generators of a web
//! category, and evaluation of arbitrary layered diagrams under it.

mod analysis;
mod relations;
mod standard;

pub use analysis::{basis_diagrams, bent_maps, crossing_matrix, faithfulness_check, flip_test};
pub use relations::{
    check_all_relations, check_trace_condition, RelationReport, RelationResult, TraceReport,
};
pub use standard::{
    gl2_standard_bilinear, gl2_standard_triple, sl2_standard, so3_standard_bilinear,
    sym2_standard_pair, sym2_standard_pair_numeric,
};

use std::collections::BTreeMap;

use crate::diagram::{Category, GeneratorName, LayeredDiagram, StrandLabel};
use crate::error::{FiberError, LinalgError};
use crate::linalg::LinearMap;
use crate::scalar::{ComplexValue, Scalar, DEFAULT_EPS};

/// An `l x m x n` array, stored sparsely.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor3<S: Scalar> {
    pub dims: (usize, usize, usize),
    entries: BTreeMap<(usize, usize, usize), S>,
}

impl<S: Scalar> Tensor3<S> {
    pub fn zero(dims: (usize, usize, usize)) -> Self {
        Tensor3 {
            dims,
            entries: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, s: S) {
        assert!(i < self.dims.0 && j < self.dims.1 && k < self.dims.2);
        if s.is_zero_tol(0.0) {
            self.entries.remove(&(i, j, k));
        } else {
            self.entries.insert((i, j, k), s);
        }
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> S {
        self.entries
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &S)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut t = Tensor3::zero(self.dims);
        for (&(i, j, k), s) in &self.entries {
            t.set(i, j, k, s.mul(c));
        }
        t
    }

    /// Apply invertible changes of basis `(A, B, C)` to the three slots:
    /// `t'_{abc} = sum_{ijk} t_{ijk} A_{ia} B_{jb} C_{kc}`.
    pub fn congruence(&self, a: &LinearMap<S>, b: &LinearMap<S>, c: &LinearMap<S>) -> Self {
        let mut t = Tensor3::zero(self.dims);
        for ai in 0..self.dims.0 {
            for bj in 0..self.dims.1 {
                for ck in 0..self.dims.2 {
                    let mut acc = S::zero();
                    for (&(i, j, k), s) in &self.entries {
                        acc = acc.add(&s.mul(&a.get(i, ai)).mul(&b.get(j, bj)).mul(&c.get(k, ck)));
                    }
                    t.set(ai, bj, ck, acc);
                }
            }
        }
        t
    }
}

/// The linear data of a rank-one 2-representation.
///
/// The cap matrix `M` determines the cup as the reshape of `M^-1`; GL2
/// phantom caps and cups are all multiplication by the sign `p_sign`; the
/// trilinear coform is derived from `tensor` (rotation for SO3, the snake
/// solution for GL2).
#[derive(Clone, Debug)]
pub struct FiberSpec<S: Scalar> {
    pub category: Category,
    pub n: usize,
    /// Value of `v = q^{1/2}` in the scalar field.
    pub v: S,
    pub m: LinearMap<S>,
    pub m_inv: LinearMap<S>,
    pub p_sign: Option<i64>,
    pub tensor: Option<Tensor3<S>>,
    /// When the stored tensor is `s * T_true`, this holds `s^2`; evaluation
    /// divides even trivalent degrees back out.
    pub t_scale_sq: Option<S>,
    pub eps: f64,
    pub dim_cap: usize,
}

pub const DEFAULT_DIM_CAP: usize = 1_000_000;

impl<S: Scalar> FiberSpec<S> {
    pub fn sl2(n: usize, m: LinearMap<S>, v: S) -> Result<Self, FiberError> {
        let m_inv = invert(&m)?;
        Ok(FiberSpec {
            category: Category::Sl2,
            n,
            v,
            m,
            m_inv,
            p_sign: None,
            tensor: None,
            t_scale_sq: None,
            eps: DEFAULT_EPS,
            dim_cap: DEFAULT_DIM_CAP,
        })
    }

    pub fn gl2(
        n: usize,
        m: LinearMap<S>,
        p_sign: i64,
        tensor: Tensor3<S>,
        v: S,
    ) -> Result<Self, FiberError> {
        assert!(p_sign == 1 || p_sign == -1, "P must be +1 or -1");
        assert_eq!(tensor.dims, (n, 1, n), "gl2 tensor must be n x 1 x n");
        let m_inv = invert(&m)?;
        Ok(FiberSpec {
            category: Category::Gl2,
            n,
            v,
            m,
            m_inv,
            p_sign: Some(p_sign),
            tensor: Some(tensor),
            t_scale_sq: None,
            eps: DEFAULT_EPS,
            dim_cap: DEFAULT_DIM_CAP,
        })
    }

    pub fn so3(
        n: usize,
        m: LinearMap<S>,
        tensor: Tensor3<S>,
        v: S,
        t_scale_sq: Option<S>,
    ) -> Result<Self, FiberError> {
        assert_eq!(tensor.dims, (n, n, n), "so3 tensor must be n x n x n");
        let q22 = crate::scalar::quantum::q2_plus_q2inv(&v);
        if q22.is_zero_tol(if S::is_exact() { 0.0 } else { DEFAULT_EPS }) {
            return Err(FiberError::UndefinedAtQ);
        }
        let m_inv = invert(&m)?;
        Ok(FiberSpec {
            category: Category::So3,
            n,
            v,
            m,
            m_inv,
            p_sign: None,
            tensor: Some(tensor),
            t_scale_sq: None,
            eps: DEFAULT_EPS,
            dim_cap: DEFAULT_DIM_CAP,
        })
        .map(|mut s| {
            s.t_scale_sq = t_scale_sq;
            s
        })
    }

    pub fn with_eps(mut self, eps: f64) -> Self {
        self.eps = eps;
        self
    }

    pub fn q(&self) -> S {
        self.v.mul(&self.v)
    }

    fn p_value(&self) -> S {
        S::from_i64(self.p_sign.unwrap_or(1))
    }

    /// Dimension of the space a strand label maps to.
    pub fn label_dim(&self, label: StrandLabel) -> usize {
        match label.kind() {
            crate::diagram::StrandKind::Usual => self.n,
            crate::diagram::StrandKind::Phantom => 1,
        }
    }

    fn word_dim(&self, word: &[StrandLabel]) -> usize {
        word.iter().map(|&l| self.label_dim(l)).product()
    }

    /// The trilinear form as a row vector over the tensor's flattened
    /// index, plus its middle dimension.
    fn tup_image(&self) -> Result<LinearMap<S>, FiberError> {
        let t = self
            .tensor
            .as_ref()
            .ok_or_else(|| FiberError::MissingData("tensor".into()))?;
        let (l, m, n) = t.dims;
        let mut map = LinearMap::zero(1, l * m * n);
        for (&(i, j, k), s) in t.entries() {
            map.set(0, (i * m + j) * n + k, s.clone());
        }
        Ok(map)
    }

    /// The derived trilinear coform entries.
    pub fn tdown_tensor(&self) -> Result<Tensor3<S>, FiberError> {
        let t = self
            .tensor
            .as_ref()
            .ok_or_else(|| FiberError::MissingData("tensor".into()))?;
        match self.category {
            Category::So3 => {
                // Plane rotation of the trivalent vertex: bend all three
                // legs with the cup. t'_{abc} = sum t_{ijk} n_{ka} n_{jb} n_{ic}.
                let n = self.n;
                let mut out = Tensor3::zero((n, n, n));
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            let mut acc = S::zero();
                            for (&(i, j, k), s) in t.entries() {
                                acc = acc.add(
                                    &s.mul(&self.m_inv.get(k, a))
                                        .mul(&self.m_inv.get(j, b))
                                        .mul(&self.m_inv.get(i, c)),
                                );
                            }
                            out.set(a, b, c, acc);
                        }
                    }
                }
                Ok(out)
            }
            Category::Gl2 => {
                // Forced by the mixed H=I relation: T' = T^{-T} M^T M^{-1}
                // as n x n matrices; the zero tensor stays zero.
                if t.is_zero() {
                    return Ok(Tensor3::zero((self.n, 1, self.n)));
                }
                let mut tm = LinearMap::zero(self.n, self.n);
                for (&(i, _, k), s) in t.entries() {
                    tm.set(i, k, s.clone());
                }
                let t_inv_t = invert(&tm)?.transpose();
                let down = t_inv_t.mul_mat(&self.m.transpose()).mul_mat(&self.m_inv);
                let mut out = Tensor3::zero((self.n, 1, self.n));
                for (&(a, c), s) in down.entries() {
                    out.set(a, 0, c, s.clone());
                }
                Ok(out)
            }
            Category::Sl2 => Err(FiberError::MissingData("sl2 has no trilinear form".into())),
        }
    }

    fn tdown_image(&self) -> Result<LinearMap<S>, FiberError> {
        let t = self.tdown_tensor()?;
        let (l, m, n) = t.dims;
        let mut map = LinearMap::zero(l * m * n, 1);
        for (&(i, j, k), s) in t.entries() {
            map.set((i * m + j) * n + k, 0, s.clone());
        }
        Ok(map)
    }

    fn cap_image(&self) -> LinearMap<S> {
        let n = self.n;
        let mut map = LinearMap::zero(1, n * n);
        for (&(i, j), s) in self.m.entries() {
            map.set(0, i * n + j, s.clone());
        }
        map
    }

    fn cup_image(&self) -> LinearMap<S> {
        let n = self.n;
        let mut map = LinearMap::zero(n * n, 1);
        for (&(i, j), s) in self.m_inv.entries() {
            map.set(i * n + j, 0, s.clone());
        }
        map
    }

    /// The turnback `cup  o  cap` on two usual strands.
    fn turnback(&self) -> LinearMap<S> {
        self.cup_image().mul_mat(&self.cap_image())
    }

    /// H-shaped double vertex `(id (x) T_l) o (T^l (x) id)` on two usual
    /// strands (SO3).
    fn h_shape(&self) -> Result<LinearMap<S>, FiberError> {
        let (t_l, t_up) = bent_maps_impl(self)?;
        let n = self.n;
        let id = LinearMap::identity(n);
        let lhs = id.kron(&t_l).mul_mat(&t_up.kron(&id));
        Ok(lhs)
    }

    /// Image of a generator as a matrix; crossings are macro-expanded into
    /// their planar linear combinations.
    pub fn generator_image(&self, gen: GeneratorName) -> Result<LinearMap<S>, FiberError> {
        use GeneratorName::*;
        if !gen.legal_for(self.category) {
            return Err(FiberError::WrongCategory(
                format!("{:?}", gen),
                self.category,
            ));
        }
        let n = self.n;
        match gen {
            Cap | CapPrime => Ok(self.cap_image()),
            Cup | CupPrime => Ok(self.cup_image()),
            PCap | PCup | PCapPrime | PCupPrime => {
                Ok(LinearMap::from_entries(1, 1, [((0, 0), self.p_value())]))
            }
            Tup => self.tup_image(),
            Tdown => self.tdown_image(),
            MixedCross => Ok(LinearMap::identity(n)),
            CrossPos | CrossNeg => match self.category {
                Category::Sl2 => {
                    let id = LinearMap::identity(n * n);
                    let e = self.turnback();
                    let v = self.v.clone();
                    let vinv = S::one().div(&v)?;
                    let (a, b) = if gen == CrossPos {
                        (v, vinv)
                    } else {
                        (vinv, v)
                    };
                    Ok(id.scale(&a).add(&e.scale(&b)))
                }
                Category::So3 => {
                    let q = self.q();
                    let q2 = q.mul(&q);
                    let q2inv = S::one().div(&q2)?;
                    let id = LinearMap::identity(n * n);
                    let e = self.turnback();
                    let h = self.h_shape()?;
                    // The stored tensor may be s-scaled; H carries s^2, so
                    // the crossing coefficient q^2 + q^-2 divides by it.
                    let q22 = q2.add(&q2inv);
                    let hcoef = match &self.t_scale_sq {
                        Some(s2) => q22.div(s2)?,
                        None => q22,
                    };
                    let (ca, cb) = if gen == CrossPos {
                        (q2.sub(&S::one()), q2inv)
                    } else {
                        (q2inv.sub(&S::one()), q2)
                    };
                    Ok(id.scale(&ca).add(&e.scale(&cb)).add(&h.scale(&hcoef)))
                }
                Category::Gl2 => {
                    // oriented X-over-X crossing: v id - v^-1 (split o merge).
                    // The phantom bigon evaluates to +[2], so Reidemeister II
                    // forces the minus sign on the vertex-resolved term.
                    let t = self.tup_image()?;
                    let td = self.tdown_image()?;
                    let p = self.p_value();
                    // merge: X X -> P is p * T (with the middle index trivial)
                    let merge = t.scale(&p);
                    let split = td.scale(&p);
                    let v = self.v.clone();
                    let vinv = S::one().div(&v)?;
                    let (a, b) = if gen == CrossPos {
                        (v, vinv.neg())
                    } else {
                        (vinv, v.neg())
                    };
                    let id = LinearMap::identity(n * n);
                    Ok(id.scale(&a).add(&split.mul_mat(&merge).scale(&b)))
                }
            },
        }
    }

    /// Evaluate a layered diagram to the matrix of the associated linear
    /// map, multiplying Kronecker-padded layer images bottom to top.
    ///
    /// When an s-scaled tensor is stored, results of even trivalent degree
    /// are normalized back to the true value; odd degrees stay s-scaled.
    pub fn evaluate(&self, d: &LayeredDiagram) -> Result<LinearMap<S>, FiberError> {
        if d.category != self.category {
            return Err(FiberError::WrongCategory("diagram".into(), self.category));
        }
        let trace = d.word_trace()?;
        let mut current = LinearMap::identity(self.word_dim(&trace[0]));
        if current.rows > self.dim_cap {
            return Err(FiberError::DimensionCap(current.rows, self.dim_cap));
        }
        for (idx, layer) in d.layers.iter().enumerate() {
            let word_in = &trace[idx];
            let word_out = &trace[idx + 1];
            let out_dim = self.word_dim(word_out);
            if out_dim > self.dim_cap {
                return Err(FiberError::DimensionCap(out_dim, self.dim_cap));
            }
            let image = match layer.generator {
                GeneratorName::MixedCross => {
                    // polymorphic: identity reshape on (n, 1) or (1, n)
                    let a = self.label_dim(word_in[layer.offset]);
                    let b = self.label_dim(word_in[layer.offset + 1]);
                    LinearMap::identity(a * b)
                }
                g => self.generator_image(g)?,
            };
            let arity_in = match layer.generator {
                GeneratorName::MixedCross => 2,
                g => g.template(self.category).map(|(d, _)| d.len()).unwrap_or(0),
            };
            let left_dim = self.word_dim(&word_in[..layer.offset]);
            let right_dim = self.word_dim(&word_in[layer.offset + arity_in..]);
            let padded = LinearMap::identity(left_dim)
                .kron(&image)
                .kron(&LinearMap::identity(right_dim));
            current = padded.mul_mat(&current);
        }
        if let Some(s2) = &self.t_scale_sq {
            let deg = d.trivalent_degree();
            if deg >= 2 && deg % 2 == 0 {
                let mut denom = S::one();
                for _ in 0..deg / 2 {
                    denom = denom.mul(s2);
                }
                let inv = S::one().div(&denom)?;
                current = current.scale(&inv);
            }
        }
        Ok(current)
    }
}

fn invert<S: Scalar>(m: &LinearMap<S>) -> Result<LinearMap<S>, FiberError> {
    m.inverse(DEFAULT_EPS).map_err(|e| match e {
        LinalgError::SingularMatrix => FiberError::SingularMatrix,
        other => FiberError::Linalg(other),
    })
}

/// The sideways trilinear maps: `T_l` merges two strands into one, `T_up`
/// splits one into two. For GL2 the middle leg is the phantom line.
fn bent_maps_impl<S: Scalar>(
    spec: &FiberSpec<S>,
) -> Result<(LinearMap<S>, LinearMap<S>), FiberError> {
    let t = spec
        .tensor
        .as_ref()
        .ok_or_else(|| FiberError::MissingData("tensor".into()))?;
    let (l, mid, _n) = t.dims;
    let n = spec.n;
    // T_l: C^l (x) C^mid -> C^n, (i, j) column -> sum_k t_{ijk} n_{kl'}
    let mut t_l = LinearMap::zero(n, l * mid);
    for (&(i, j, k), s) in t.entries() {
        for lp in 0..n {
            let c = spec.m_inv.get(k, lp);
            if c.is_zero_tol(0.0) {
                continue;
            }
            let cur: S = t_l.get(lp, i * mid + j);
            t_l.set(lp, i * mid + j, cur.add(&s.mul(&c)));
        }
    }
    // T_up: C^n -> C^l (x) C^mid, row (a, b) -> sum_d t'_{abd} m_{dc}
    let td = spec.tdown_tensor()?;
    let mut t_up = LinearMap::zero(l * mid, n);
    for (&(a, b, d), s) in td.entries() {
        for c in 0..n {
            let mc = spec.m.get(d, c);
            if mc.is_zero_tol(0.0) {
                continue;
            }
            let cur: S = t_up.get(a * mid + b, c);
            t_up.set(a * mid + b, c, cur.add(&s.mul(&mc)));
        }
    }
    Ok((t_l, t_up))
}

/// Convenience: numeric v from a complex q (principal square root).
pub fn v_from_q(q: ComplexValue) -> ComplexValue {
    q.sqrt()
}
