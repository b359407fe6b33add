//! Congruence canonical forms of nonsingular complex matrices: the block
//! types Gamma_j, H_2k(lambda), J_i(0), the cosquare reduction, and the
//! trace statistic tr(M^T M^-1).

mod jordan;

pub use jordan::durand_kerner;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::CongruenceError;
use crate::linalg::LinearMap;
use crate::scalar::{ComplexValue, FieldElement, Scalar};

/// One canonical congruence block.
#[derive(Clone, Debug, PartialEq)]
pub enum CanonicalBlock<S: Scalar> {
    /// Gamma_j, contributing (-1)^{j+1} j to the trace statistic.
    Gamma { j: usize },
    /// H_{2k}(lambda) with lambda excluded from {0, (-1)^{k+1}}, determined
    /// up to lambda <-> lambda^{-1}; contributes k (lambda + lambda^{-1}).
    H { k: usize, lambda: S },
    /// H-block whose lambda pair are conjugate irrational roots; only the
    /// invariant trace t = lambda + lambda^{-1} is stored (exact mode).
    HQuad { k: usize, trace: S },
    /// Degenerate Jordan block (never produced for invertible input).
    JordanZero { i: usize },
}

impl<S: Scalar> CanonicalBlock<S> {
    pub fn size(&self) -> usize {
        match self {
            CanonicalBlock::Gamma { j } => *j,
            CanonicalBlock::H { k, .. } | CanonicalBlock::HQuad { k, .. } => 2 * k,
            CanonicalBlock::JordanZero { i } => *i,
        }
    }

    /// The lambda-class invariant `lambda + lambda^{-1}` for H blocks.
    pub fn h_trace(&self) -> Option<S> {
        match self {
            CanonicalBlock::H { lambda, .. } => {
                let inv = S::one().div(lambda).ok()?;
                Some(lambda.add(&inv))
            }
            CanonicalBlock::HQuad { trace, .. } => Some(trace.clone()),
            _ => None,
        }
    }
}

/// A multiset of canonical blocks; total size equals the matrix dimension.
#[derive(Clone, Debug)]
pub struct CanonicalForm<S: Scalar> {
    pub blocks: Vec<CanonicalBlock<S>>,
}

impl<S: Scalar> CanonicalForm<S> {
    pub fn total_size(&self) -> usize {
        self.blocks.iter().map(|b| b.size()).sum()
    }

    /// Multiset equality, with H-block lambdas compared up to inversion
    /// (via the trace invariant) and within `eps` for numeric scalars.
    pub fn equivalent(&self, other: &Self, eps: f64) -> bool {
        if self.blocks.len() != other.blocks.len() {
            return false;
        }
        let mut used = vec![false; other.blocks.len()];
        'outer: for a in &self.blocks {
            for (i, b) in other.blocks.iter().enumerate() {
                if used[i] {
                    continue;
                }
                if blocks_match(a, b, eps) {
                    used[i] = true;
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }
}

fn blocks_match<S: Scalar>(a: &CanonicalBlock<S>, b: &CanonicalBlock<S>, eps: f64) -> bool {
    use CanonicalBlock::*;
    match (a, b) {
        (Gamma { j: j1 }, Gamma { j: j2 }) => j1 == j2,
        (JordanZero { i: i1 }, JordanZero { i: i2 }) => i1 == i2,
        (H { k: k1, .. } | HQuad { k: k1, .. }, H { k: k2, .. } | HQuad { k: k2, .. }) => {
            k1 == k2
                && match (a.h_trace(), b.h_trace()) {
                    (Some(t1), Some(t2)) => t1.approx_eq(&t2, 10.0 * eps),
                    _ => false,
                }
        }
        _ => false,
    }
}

/// The literal matrix `Gamma_j` with entries on the antidiagonal and its
/// upper neighbor, alternating signs, normalized so `Gamma_1 = (1)` and
/// `Gamma_2 = [[0, -1], [1, 1]]`.
pub fn build_gamma<S: Scalar>(j: usize) -> LinearMap<S> {
    let n = j;
    let mut m = LinearMap::zero(n, n);
    for r in 0..n {
        let sign = if (n - 1 - r) % 2 == 0 {
            S::one()
        } else {
            S::one().neg()
        };
        m.set(r, n - 1 - r, sign.clone());
        if n - r < n {
            m.set(r, n - r, sign);
        }
    }
    m
}

/// `H_{2k}(lambda) = [[0, I_k], [J_k(lambda), 0]]`.
pub fn build_h<S: Scalar>(k: usize, lambda: &S) -> LinearMap<S> {
    let mut m = LinearMap::zero(2 * k, 2 * k);
    for i in 0..k {
        m.set(i, k + i, S::one());
    }
    let j = build_jordan(k, lambda);
    for (&(r, c), s) in j.entries() {
        m.set(k + r, c, s.clone());
    }
    m
}

/// Upper-triangular Jordan block `J_n(lambda)`.
pub fn build_jordan<S: Scalar>(n: usize, lambda: &S) -> LinearMap<S> {
    let mut m = LinearMap::zero(n, n);
    for i in 0..n {
        m.set(i, i, lambda.clone());
        if i + 1 < n {
            m.set(i, i + 1, S::one());
        }
    }
    m
}

/// Direct sum of square matrices.
pub fn direct_sum<S: Scalar>(blocks: &[LinearMap<S>]) -> LinearMap<S> {
    let n: usize = blocks.iter().map(|b| b.rows).sum();
    let mut m = LinearMap::zero(n, n);
    let mut off = 0;
    for b in blocks {
        for (&(i, j), s) in b.entries() {
            m.set(off + i, off + j, s.clone());
        }
        off += b.rows;
    }
    m
}

/// Realize a canonical form as its literal block-diagonal matrix.
pub fn realize_form<S: Scalar>(form: &CanonicalForm<S>) -> Result<LinearMap<S>, CongruenceError> {
    let mut mats = Vec::new();
    for b in &form.blocks {
        match b {
            CanonicalBlock::Gamma { j } => mats.push(build_gamma(*j)),
            CanonicalBlock::H { k, lambda } => mats.push(build_h(*k, lambda)),
            CanonicalBlock::HQuad { .. } => {
                return Err(CongruenceError::ExactUnsupported(
                    "cannot realize a surd lambda exactly".into(),
                ))
            }
            CanonicalBlock::JordanZero { i } => mats.push(build_jordan(*i, &S::zero())),
        }
    }
    Ok(direct_sum(&mats))
}

/// `tr(M^T M^-1) = sum m_ij n_ij`; errors on singular input.
pub fn quantum_trace<S: Scalar>(m: &LinearMap<S>, eps: f64) -> Result<S, CongruenceError> {
    let inv = m
        .inverse(eps)
        .map_err(|_| CongruenceError::SingularMatrix)?;
    let mut tr = S::zero();
    for (&(i, j), s) in m.entries() {
        tr = tr.add(&s.mul(&inv.get(i, j)));
    }
    Ok(tr)
}

/// The cosquare `M^-T M`; its similarity class controls the congruence
/// class of a nonsingular matrix.
pub fn cosquare<S: Scalar>(m: &LinearMap<S>, eps: f64) -> Result<LinearMap<S>, CongruenceError> {
    let inv = m
        .inverse(eps)
        .map_err(|_| CongruenceError::SingularMatrix)?;
    Ok(inv.transpose().mul_mat(m))
}

/// Characteristic polynomial by the Faddeev-LeVerrier recurrence; the
/// result is `x^n + c_{n-1} x^{n-1} + ... + c_0` returned as
/// `[c_0, ..., c_{n-1}, 1]`.
pub fn char_poly<S: Scalar>(a: &LinearMap<S>) -> Vec<S> {
    let n = a.rows;
    let mut coeffs = vec![S::zero(); n + 1];
    coeffs[n] = S::one();
    let mut m = LinearMap::<S>::zero(n, n);
    let mut c = S::one();
    for k in 1..=n {
        // M_k = A (M_{k-1} + c_{k-1} I)
        let shifted = m.add(&LinearMap::identity(n).scale(&c));
        m = a.mul_mat(&shifted);
        let mut tr = S::zero();
        for i in 0..n {
            tr = tr.add(&m.get(i, i));
        }
        c = tr.neg().div(&S::from_i64(k as i64)).expect("k nonzero");
        coeffs[n - k] = c.clone();
    }
    coeffs
}

/// The Weyr-characteristic block sizes of an eigenvalue: sizes of the
/// Jordan blocks of `c` at `lambda`, computed from ranks of powers of
/// `(C - lambda I)`.
fn jordan_sizes_at<S: Scalar>(
    c: &LinearMap<S>,
    lambda: &S,
    mult: usize,
    rank_eps: f64,
) -> Vec<usize> {
    let n = c.rows;
    let shifted = c.sub(&LinearMap::identity(n).scale(lambda));
    jordan_sizes_from_ranks(&shifted, mult, rank_eps)
}

/// Jordan sizes of the eigenvalue-0 part of `p`, given that its algebraic
/// multiplicity is `mult`. Ranks of powers are clamped with the theoretical
/// bounds `n - mult <= rank(p^k) <= rank(p^{k-1})` and `rank(p^mult) =
/// n - mult`, which suppresses numeric noise floors.
fn jordan_sizes_from_ranks<S: Scalar>(p: &LinearMap<S>, mult: usize, eps: f64) -> Vec<usize> {
    let n = p.rows;
    let floor = n - mult;
    let base = p.magnitude_scale().max(1.0);
    let mut ranks = vec![n];
    let mut pow = LinearMap::identity(n);
    let mut abs_tol = eps;
    for k in 1..=mult {
        let prev = *ranks.last().unwrap();
        if k == mult || prev == floor {
            ranks.push(floor);
            break;
        }
        pow = pow.mul_mat(p);
        abs_tol *= base;
        // the rank strictly decreases until it reaches the floor
        let computed = if eps == 0.0 {
            pow.rank(0.0)
        } else {
            pow.rank_jordan(floor, prev - 1, abs_tol)
        };
        let r = computed.min(prev - 1).max(floor);
        ranks.push(r);
        if r == floor {
            break;
        }
    }
    sizes_from_rank_sequence(&ranks)
}

fn sizes_from_rank_sequence(ranks: &[usize]) -> Vec<usize> {
    let mut sizes = Vec::new();
    for s in 1..ranks.len() {
        let ge_s = ranks[s - 1] - ranks[s];
        let ge_s1 = if s + 1 < ranks.len() {
            ranks[s] - ranks[s + 1]
        } else {
            0
        };
        let exactly_s = ge_s.saturating_sub(ge_s1);
        for _ in 0..exactly_s {
            sizes.push(s);
        }
    }
    sizes.sort_unstable();
    sizes.reverse();
    sizes
}

/// Jordan sizes read from exact rank drops of powers of `p` at eigenvalue
/// 0, without a known multiplicity (exact scalars only).
fn jordan_sizes_of_nilpotent_part<S: Scalar>(p: &LinearMap<S>, eps: f64) -> Vec<usize> {
    let n = p.rows;
    let mut ranks = vec![n];
    let mut pow = LinearMap::identity(n);
    for _ in 0..n {
        pow = pow.mul_mat(p);
        let r = if eps == 0.0 {
            pow.rank(0.0)
        } else {
            pow.rank_jordan(0, pow.rows, eps * p.magnitude_scale().max(1.0))
        };
        let prev = *ranks.last().unwrap();
        ranks.push(r.min(prev));
        if r >= prev || r == 0 {
            break;
        }
    }
    sizes_from_rank_sequence(&ranks)
}

/// Assemble canonical blocks from the Jordan structure of the cosquare,
/// given one representative per eigenvalue class.
fn assemble<S: Scalar>(
    cos: &LinearMap<S>,
    classes: &[(S, usize)],
    rank_eps: f64,
    pair_tol: f64,
) -> Result<Vec<CanonicalBlock<S>>, CongruenceError> {
    let mut blocks = Vec::new();
    let one = S::one();
    let minus_one = one.neg();

    #[derive(Debug)]
    struct Unpaired<S> {
        lambda: S,
        mult: usize,
    }
    let mut leftovers: Vec<Unpaired<S>> = Vec::new();

    for (lam, mult) in classes {
        if lam.approx_eq(&one, pair_tol) || lam.approx_eq(&minus_one, pair_tol) {
            let sizes = jordan_sizes_at(cos, lam, *mult, rank_eps);
            let sign_is_plus = lam.approx_eq(&one, pair_tol);
            // J_s(+-1): matching parity gives Gamma_s, the rest pair up
            // into H_{2s}(+-1).
            let mut to_pair: Vec<usize> = Vec::new();
            for s in sizes {
                let gamma_sign_plus = s % 2 == 1; // (-1)^{s+1} = +1 iff s odd
                if gamma_sign_plus == sign_is_plus {
                    blocks.push(CanonicalBlock::Gamma { j: s });
                } else {
                    to_pair.push(s);
                }
            }
            to_pair.sort_unstable();
            let mut i = 0;
            while i + 1 < to_pair.len() {
                if to_pair[i] == to_pair[i + 1] {
                    blocks.push(CanonicalBlock::H {
                        k: to_pair[i],
                        lambda: if sign_is_plus {
                            one.clone()
                        } else {
                            minus_one.clone()
                        },
                    });
                    i += 2;
                } else {
                    return Err(CongruenceError::UnpairedEigenvalues(format!(
                        "odd count of size-{} blocks at eigenvalue {}",
                        to_pair[i], lam
                    )));
                }
            }
            if i < to_pair.len() {
                return Err(CongruenceError::UnpairedEigenvalues(format!(
                    "odd count of size-{} blocks at eigenvalue {}",
                    to_pair[i], lam
                )));
            }
        } else {
            leftovers.push(Unpaired {
                lambda: lam.clone(),
                mult: *mult,
            });
        }
    }

    // Pair remaining classes lambda <-> lambda^{-1}. The Jordan sizes of a
    // pair are computed jointly from (C - lambda I)(C - mu I), which treats
    // the two conjugate defective structures symmetrically.
    let mut used = vec![false; leftovers.len()];
    for i in 0..leftovers.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let li = leftovers[i].lambda.clone();
        let li_inv = S::one()
            .div(&li)
            .map_err(|_| CongruenceError::UnpairedEigenvalues("zero eigenvalue".into()))?;
        let mut partner = None;
        for j in i + 1..leftovers.len() {
            if used[j] {
                continue;
            }
            if leftovers[j].lambda.approx_eq(&li_inv, pair_tol) {
                partner = Some(j);
                break;
            }
        }
        let j = partner.ok_or_else(|| {
            CongruenceError::UnpairedEigenvalues(format!(
                "no inverse partner for eigenvalue {}",
                li
            ))
        })?;
        used[j] = true;
        let n = cos.rows;
        let mu = leftovers[j].lambda.clone();
        let g = cos
            .sub(&LinearMap::identity(n).scale(&li))
            .mul_mat(&cos.sub(&LinearMap::identity(n).scale(&mu)));
        let joint = jordan_sizes_from_ranks(&g, leftovers[i].mult + leftovers[j].mult, rank_eps);
        // every size must occur an even number of times, one per conjugate
        let lam = normalize_lambda(&li, &mu);
        let mut idx = 0;
        while idx < joint.len() {
            if idx + 1 >= joint.len() || joint[idx] != joint[idx + 1] {
                return Err(CongruenceError::UnpairedEigenvalues(format!(
                    "odd count of size-{} blocks in the pair at {}",
                    joint[idx], li
                )));
            }
            blocks.push(CanonicalBlock::H {
                k: joint[idx],
                lambda: lam.clone(),
            });
            idx += 2;
        }
    }

    blocks.sort_by_key(|b| (block_order(b), b.size()));
    Ok(blocks)
}

fn block_order<S: Scalar>(b: &CanonicalBlock<S>) -> u8 {
    match b {
        CanonicalBlock::Gamma { .. } => 0,
        CanonicalBlock::H { .. } => 1,
        CanonicalBlock::HQuad { .. } => 2,
        CanonicalBlock::JordanZero { .. } => 3,
    }
}

/// Choose the representative with |lambda| >= 1, ties by argument in [0, pi].
fn normalize_lambda<S: Scalar>(a: &S, b: &S) -> S {
    let pa = a.pivot_size();
    let pb = b.pivot_size();
    if (pa - pb).abs() > f64::EPSILON * 16.0 * pa.max(pb) {
        return if pa >= pb { a.clone() } else { b.clone() };
    }
    // equal magnitude: deterministic choice by display string; positive
    // powers of v sort above negative ones, so -q is preferred to -q^-1.
    if format!("{}", a) >= format!("{}", b) {
        a.clone()
    } else {
        b.clone()
    }
}

/// Numeric canonical form: eigenvalues of the cosquare by Durand-Kerner,
/// clustered with gap threshold `1e3 * eps`, Weyr characteristics from
/// numeric ranks. Defective eigenvalues scatter char-poly roots beyond the
/// base gap, so the threshold escalates by decades (up to 1e-3) until the
/// block structure is consistent.
pub fn canonical_form_numeric(
    m: &LinearMap<ComplexValue>,
    eps: f64,
) -> Result<CanonicalForm<ComplexValue>, CongruenceError> {
    let cos = cosquare(m, eps)?;
    let cp = char_poly(&cos);
    let roots = durand_kerner(&cp)?;
    let mut tol = 1e3 * eps;
    let mut last_err = CongruenceError::UnpairedEigenvalues("no attempt made".into());
    while tol <= 1e-2 {
        match numeric_attempt(&cos, &roots, tol) {
            Ok(form) if form.total_size() == m.rows => return Ok(form),
            Ok(_) => {
                last_err = CongruenceError::UnpairedEigenvalues(
                    "block sizes inconsistent with the dimension".into(),
                );
            }
            Err(e) => last_err = e,
        }
        tol *= 10.0;
    }
    Err(last_err)
}

fn numeric_attempt(
    cos: &LinearMap<ComplexValue>,
    roots: &[ComplexValue],
    tol: f64,
) -> Result<CanonicalForm<ComplexValue>, CongruenceError> {
    let mut classes: Vec<(ComplexValue, usize)> = Vec::new();
    'outer: for &r in roots {
        // plus and minus one are the structurally special values; snap
        // them before free clustering
        for special in [ComplexValue::one(), -ComplexValue::one()] {
            if r.approx_eq(&special, tol) {
                match classes.iter_mut().find(|(c, _)| *c == special) {
                    Some((_, count)) => *count += 1,
                    None => classes.push((special, 1)),
                }
                continue 'outer;
            }
        }
        for (c, count) in classes.iter_mut() {
            if c.approx_eq(&r, tol) {
                // running mean keeps clusters stable
                let n = *count as f64;
                *c =
                    ComplexValue::new((c.re * n + r.re) / (n + 1.0), (c.im * n + r.im) / (n + 1.0));
                *count += 1;
                continue 'outer;
            }
        }
        classes.push((r, 1));
    }
    let blocks = assemble(cos, &classes, tol, tol)?;
    Ok(CanonicalForm { blocks })
}

fn normalize_lambda_num(a: ComplexValue) -> ComplexValue {
    let inv = a.recip();
    if a.abs() > inv.abs() + 1e-12 {
        a
    } else if inv.abs() > a.abs() + 1e-12 {
        inv
    } else if a.arg() >= 0.0 {
        a
    } else {
        inv
    }
}

/// Exact canonical form over the rationals; the cosquare's characteristic
/// polynomial must factor over Q into linear factors and irreducible
/// quadratics `x^2 - t x + 1` (conjugate inverse pairs).
pub fn canonical_form_rational(
    m: &LinearMap<BigRational>,
) -> Result<CanonicalForm<BigRational>, CongruenceError> {
    let cos = cosquare(m, 0.0)?;
    let cp = char_poly(&cos);
    let (rational_roots, remainder) = rational_roots_with_deflation(&cp);
    let mut blocks = assemble(&cos, &rational_roots, 0.0, 0.0)?;
    // remainder: product of irreducible quadratics
    let mut rem = remainder;
    while poly_degree(&rem) >= 2 {
        if poly_degree(&rem) == 2 {
            let c0 = rem[0].clone() / rem[2].clone();
            let c1 = rem[1].clone() / rem[2].clone();
            if !c0.is_one() {
                return Err(CongruenceError::ExactUnsupported(
                    "quadratic factor is not an inverse pair".into(),
                ));
            }
            let t = -c1; // lambda + lambda^{-1}
                         // sizes from ranks of g(C)^p where g(x) = x^2 - t x + 1
            let n = cos.rows;
            let g = cos
                .mul_mat(&cos)
                .sub(&cos.scale(&t))
                .add(&LinearMap::identity(n));
            let sizes = jordan_sizes_of_nilpotent_part(&g, 0.0);
            // each Jordan size appears once for lambda and once for its
            // conjugate; g-ranks see the pair as one
            for s in sizes {
                blocks.push(CanonicalBlock::HQuad {
                    k: s,
                    trace: t.clone(),
                });
            }
            rem = vec![<BigRational as One>::one()];
        } else {
            return Err(CongruenceError::ExactUnsupported(format!(
                "characteristic polynomial has an unfactored degree-{} part",
                poly_degree(&rem)
            )));
        }
    }
    blocks.sort_by_key(|b| (block_order(b), b.size()));
    let form = CanonicalForm { blocks };
    if form.total_size() != m.rows {
        return Err(CongruenceError::ExactUnsupported(
            "block sizes do not add up; eigenvalue structure unsupported".into(),
        ));
    }
    Ok(form)
}

/// Exact canonical form over Q(v), supported when the cosquare is
/// triangular so its eigenvalues can be read off the diagonal.
pub fn canonical_form_symbolic(
    m: &LinearMap<FieldElement>,
) -> Result<CanonicalForm<FieldElement>, CongruenceError> {
    let cos = cosquare(m, 0.0)?;
    let n = cos.rows;
    let lower_zero = cos.entries().all(|(&(i, j), _)| i <= j);
    let upper_zero = cos.entries().all(|(&(i, j), _)| i >= j);
    if !lower_zero && !upper_zero {
        return Err(CongruenceError::ExactUnsupported(
            "symbolic canonical form needs a triangular cosquare".into(),
        ));
    }
    let mut reps: Vec<(FieldElement, usize)> = Vec::new();
    for i in 0..n {
        let d = cos.get(i, i);
        match reps.iter_mut().find(|(r, _)| *r == d) {
            Some((_, m)) => *m += 1,
            None => reps.push((d, 1)),
        }
    }
    let blocks = assemble(&cos, &reps, 0.0, 0.0)?;
    Ok(CanonicalForm { blocks })
}

/// Congruence test: equal canonical forms of the cosquares.
pub fn congruent_numeric(
    a: &LinearMap<ComplexValue>,
    b: &LinearMap<ComplexValue>,
    eps: f64,
) -> Result<bool, CongruenceError> {
    if a.rows != b.rows {
        return Ok(false);
    }
    let fa = canonical_form_numeric(a, eps)?;
    let fb = canonical_form_numeric(b, eps)?;
    Ok(fa.equivalent(&fb, eps))
}

pub fn congruent_rational(
    a: &LinearMap<BigRational>,
    b: &LinearMap<BigRational>,
) -> Result<bool, CongruenceError> {
    if a.rows != b.rows {
        return Ok(false);
    }
    let fa = canonical_form_rational(a)?;
    let fb = canonical_form_rational(b)?;
    Ok(fa.equivalent(&fb, 0.0))
}

fn poly_degree(p: &[BigRational]) -> usize {
    p.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

/// Find all rational roots with multiplicity by candidate testing and
/// deflation; returns the roots and the deflated remainder.
fn rational_roots_with_deflation(
    p: &[BigRational],
) -> (Vec<(BigRational, usize)>, Vec<BigRational>) {
    let mut poly: Vec<BigRational> = p.to_vec();
    while poly.len() > 1 && poly.last().unwrap().is_zero() {
        poly.pop();
    }
    let mut roots: Vec<(BigRational, usize)> = Vec::new();
    loop {
        if poly_degree(&poly) == 0 {
            break;
        }
        match find_rational_root(&poly) {
            Some(r) => {
                let mut mult = 0;
                while eval_poly(&poly, &r).is_zero() && poly_degree(&poly) > 0 {
                    poly = deflate(&poly, &r);
                    mult += 1;
                }
                roots.push((r, mult));
            }
            None => break,
        }
    }
    (roots, poly)
}

fn eval_poly(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = <BigRational as Zero>::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn deflate(p: &[BigRational], r: &BigRational) -> Vec<BigRational> {
    // synthetic division by (x - r)
    let d = poly_degree(p);
    let mut out = vec![<BigRational as Zero>::zero(); d];
    let mut carry = <BigRational as Zero>::zero();
    for i in (0..=d).rev() {
        let v = &p[i] + &carry * r;
        if i > 0 {
            out[i - 1] = v.clone();
        }
        carry = v;
    }
    out
}

fn find_rational_root(p: &[BigRational]) -> Option<BigRational> {
    use num_bigint::BigInt;
    let d = poly_degree(p);
    // clear denominators
    let mut lcm = BigInt::one();
    for c in &p[..=d] {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = p[..=d]
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let a0 = ints.iter().find(|c| !c.is_zero())?.clone();
    // if constant term zero, 0 is a root
    if ints[0].is_zero() {
        return Some(<BigRational as Zero>::zero());
    }
    let an = ints[d].clone();
    let p_divs = divisors_small(&a0.abs());
    let q_divs = divisors_small(&an.abs());
    for pd in &p_divs {
        for qd in &q_divs {
            for sign in [1i64, -1] {
                let cand = BigRational::new(pd * BigInt::from(sign), qd.clone());
                if eval_poly(p, &cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn divisors_small(n: &num_bigint::BigInt) -> Vec<num_bigint::BigInt> {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    // candidate divisors up to a practical bound; classification inputs are
    // small integers
    let mut out = Vec::new();
    if let Some(v) = n.to_u64() {
        let mut d = 1u64;
        while d * d <= v {
            if v % d == 0 {
                out.push(BigInt::from(d));
                out.push(BigInt::from(v / d));
            }
            d += 1;
            if d > 1_000_000 {
                break;
            }
        }
    } else {
        out.push(BigInt::one());
        out.push(n.clone());
    }
    out.sort();
    out.dedup();
    out
}

/// Normalized display form of a numeric H-block lambda.
pub fn display_lambda(l: ComplexValue) -> ComplexValue {
    normalize_lambda_num(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn q_rat(m: &LinearMap<BigRational>) -> BigRational {
        quantum_trace(m, 0.0).unwrap()
    }

    #[test]
    fn gamma_blocks_match_the_small_cases() {
        let g1 = build_gamma::<BigRational>(1);
        assert_eq!(g1.get(0, 0), rat(1, 1));
        let g2 = build_gamma::<BigRational>(2);
        assert_eq!(
            g2.to_dense(),
            vec![vec![rat(0, 1), rat(-1, 1)], vec![rat(1, 1), rat(1, 1)],]
        );
    }

    #[test]
    fn gamma_trace_formula() {
        // tr(Gamma_j^T Gamma_j^-1) = (-1)^{j+1} j for j = 1..6
        for j in 1..=6usize {
            let g = build_gamma::<BigRational>(j);
            let expect = if j % 2 == 1 {
                rat(j as i64, 1)
            } else {
                rat(-(j as i64), 1)
            };
            assert_eq!(q_rat(&g), expect, "j = {}", j);
        }
    }

    #[test]
    fn h_block_trace_formula() {
        // tr = k (lambda + lambda^-1)
        for k in 1..=3usize {
            let lam = rat(3, 1);
            let h = build_h(k, &lam);
            let expect = rat(k as i64, 1) * (rat(3, 1) + rat(1, 3));
            assert_eq!(q_rat(&h), expect);
        }
    }

    #[test]
    fn trace_is_additive_over_direct_sums() {
        let a = build_gamma::<BigRational>(1);
        let b = build_h(1, &rat(5, 2));
        let s = direct_sum(&[a.clone(), b.clone()]);
        assert_eq!(q_rat(&s), q_rat(&a) + q_rat(&b));
    }

    #[test]
    fn cosquare_of_identity_and_h2() {
        let id3 = LinearMap::<BigRational>::identity(3);
        assert_eq!(cosquare(&id3, 0.0).unwrap(), id3);
        // cosquare(H_2(lambda)) has eigenvalues {lambda, lambda^-1}:
        // oracle by characteristic polynomial
        let h = build_h(1, &rat(3, 1));
        let c = cosquare(&h, 0.0).unwrap();
        let cp = char_poly(&c);
        // x^2 - (3 + 1/3) x + 1
        assert_eq!(cp[0], rat(1, 1));
        assert_eq!(cp[1], -(rat(3, 1) + rat(1, 3)));
    }

    #[test]
    fn cosquare_of_gamma2_is_a_jordan_block_at_minus_one() {
        // oracle: rank(C + I) = 1 and rank((C + I)^2) = 0
        let g = build_gamma::<BigRational>(2);
        let c = cosquare(&g, 0.0).unwrap();
        let shifted = c.add(&LinearMap::identity(2));
        assert_eq!(shifted.rank(0.0), 1);
        assert_eq!(shifted.mul_mat(&shifted).rank(0.0), 0);
    }

    #[test]
    fn canonical_form_of_single_blocks() {
        // every built block is its own canonical form
        let g3 = build_gamma::<BigRational>(3);
        let f = canonical_form_rational(&g3).unwrap();
        assert_eq!(f.blocks, vec![CanonicalBlock::Gamma { j: 3 }]);

        let h = build_h(1, &rat(3, 1));
        let f = canonical_form_rational(&h).unwrap();
        assert_eq!(f.blocks.len(), 1);
        assert!(matches!(f.blocks[0], CanonicalBlock::H { k: 1, .. }));
        assert_eq!(f.blocks[0].h_trace().unwrap(), rat(3, 1) + rat(1, 3));
    }

    #[test]
    fn symmetric_matrices_are_sums_of_gamma1() {
        let id2 = LinearMap::<BigRational>::identity(2);
        let f = canonical_form_rational(&id2).unwrap();
        assert_eq!(
            f.blocks,
            vec![
                CanonicalBlock::Gamma { j: 1 },
                CanonicalBlock::Gamma { j: 1 }
            ]
        );
    }

    #[test]
    fn congruence_invariance_rational() {
        // canonical_form(P^T A P) = canonical_form(A)
        let a = direct_sum(&[build_gamma::<BigRational>(1), build_h(1, &rat(2, 1))]);
        let p = LinearMap::from_dense(&[
            vec![rat(1, 1), rat(2, 1), rat(0, 1)],
            vec![rat(-1, 2), rat(1, 1), rat(3, 1)],
            vec![rat(0, 1), rat(1, 3), rat(1, 1)],
        ]);
        let conj = p.transpose().mul_mat(&a).mul_mat(&p);
        assert!(congruent_rational(&a, &conj).unwrap());
        assert!(!congruent_rational(&a, &LinearMap::identity(3)).unwrap());
    }

    #[test]
    fn gamma2_not_congruent_to_identity() {
        let g2 = build_gamma::<BigRational>(2);
        assert!(!congruent_rational(&g2, &LinearMap::identity(2)).unwrap());
        assert!(congruent_rational(&g2, &g2).unwrap());
    }

    #[test]
    fn singular_input_is_rejected() {
        let z = LinearMap::<BigRational>::zero(2, 2);
        assert!(matches!(
            quantum_trace(&z, 0.0),
            Err(CongruenceError::SingularMatrix)
        ));
        assert!(matches!(
            canonical_form_rational(&z),
            Err(CongruenceError::SingularMatrix)
        ));
    }
}
