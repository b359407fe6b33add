//! Exact counting of rank-one points of tensor slices over the complex
//! projective plane, by chart decomposition and elimination, with a finite
//! field brute-force oracle for cross-checking.

use std::rc::Rc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::poly::{BPoly, ExtPoly, QPoly};
use super::{slice_matrix, Axis};
use crate::error::TrilinearError;
use crate::fiber::Tensor3;

fn r0() -> BigRational {
    <BigRational as Zero>::zero()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Count {
    Finite(u64),
    Infinite,
}

impl std::fmt::Display for Count {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{}", n),
            Count::Infinite => write!(f, "inf"),
        }
    }
}

/// A linear form in `(a1, a2, a3)`.
type Lin = [BigRational; 3];

/// A quadratic form in `(a1, a2, a3)`, sparse by exponent triple.
#[derive(Clone, Debug)]
struct Quad {
    terms: Vec<((u8, u8, u8), BigRational)>,
}

impl Quad {
    fn from_minor(a: &Lin, b: &Lin, c: &Lin, d: &Lin) -> Self {
        // a*d - b*c as forms
        let mut terms = std::collections::BTreeMap::new();
        let mut add = |e: (u8, u8, u8), v: BigRational| {
            if v.is_zero() {
                return;
            }
            let slot = terms.entry(e).or_insert_with(r0);
            *slot += v;
            if slot.is_zero() {
                terms.remove(&e);
            }
        };
        for i in 0..3 {
            for j in 0..3 {
                let mut e = (0u8, 0u8, 0u8);
                match i {
                    0 => e.0 += 1,
                    1 => e.1 += 1,
                    _ => e.2 += 1,
                }
                match j {
                    0 => e.0 += 1,
                    1 => e.1 += 1,
                    _ => e.2 += 1,
                }
                add(e, &a[i] * &d[j]);
                add(e, -(&b[i] * &c[j]));
            }
        }
        Quad {
            terms: terms.into_iter().collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Dehomogenize at `a3 = 1` into Q[u][v] with `u = a1`, `v = a2`.
    fn chart_a(&self) -> BPoly {
        let mut coeffs: Vec<QPoly> = Vec::new();
        for (&(e1, e2, _e3), c) in self.terms.iter().map(|(e, c)| (e, c)) {
            let dv = e2 as usize;
            while coeffs.len() <= dv {
                coeffs.push(QPoly::zero());
            }
            let mut mono = vec![r0(); e1 as usize + 1];
            mono[e1 as usize] = c.clone();
            coeffs[dv] = coeffs[dv].add(&QPoly::new(mono));
        }
        BPoly::new(coeffs)
    }

    /// Dehomogenize at `a3 = 0, a2 = 1` into Q[a1].
    fn chart_b(&self) -> QPoly {
        let mut mono = vec![r0(); 3];
        for (&(e1, _e2, e3), c) in self.terms.iter().map(|(e, c)| (e, c)) {
            if e3 != 0 {
                continue;
            }
            mono[e1 as usize] += c;
        }
        QPoly::new(mono)
    }

    fn eval(&self, p: &[BigRational; 3]) -> BigRational {
        let mut acc = r0();
        for (&(e1, e2, e3), c) in self.terms.iter().map(|(e, c)| (e, c)) {
            let mut t = c.clone();
            for _ in 0..e1 {
                t *= &p[0];
            }
            for _ in 0..e2 {
                t *= &p[1];
            }
            for _ in 0..e3 {
                t *= &p[2];
            }
            acc += t;
        }
        acc
    }

    /// Shear substitution `a1 -> a1 + s a2`.
    fn shear(&self, s: i64) -> Quad {
        let sr = BigRational::from_integer(s.into());
        let mut out = std::collections::BTreeMap::new();
        let mut add = |e: (u8, u8, u8), v: BigRational| {
            if v.is_zero() {
                return;
            }
            let slot = out.entry(e).or_insert_with(r0);
            *slot += v;
            if slot.is_zero() {
                out.remove(&e);
            }
        };
        for (&(e1, e2, e3), c) in self.terms.iter().map(|(e, c)| (e, c)) {
            // (u + s v)^{e1} v^{e2}
            for k in 0..=e1 {
                let binom = match (e1, k) {
                    (2, 1) => 2i64,
                    _ => 1,
                };
                let mut coeff = c * BigRational::from_integer(binom.into());
                for _ in 0..(e1 - k) {
                    coeff *= &sr;
                }
                add((k, e2 + (e1 - k), e3), coeff);
            }
        }
        Quad {
            terms: out.into_iter().collect(),
        }
    }
}

fn lin_chart_a(l: &Lin) -> BPoly {
    // l1 u + l2 v + l3 at a3 = 1
    BPoly::new(vec![
        QPoly::new(vec![l[2].clone(), l[0].clone()]),
        QPoly::new(vec![l[1].clone()]),
    ])
}

fn lin_chart_b(l: &Lin) -> QPoly {
    QPoly::new(vec![l[1].clone(), l[0].clone()])
}

fn lin_shear(l: &Lin, s: i64) -> Lin {
    let sr = BigRational::from_integer(s.into());
    [l[0].clone(), &l[1] + &l[0] * sr, l[2].clone()]
}

/// The number of points of the projective plane where the slice along the
/// given axis has rank exactly one; `Infinite` when the locus is
/// positive-dimensional.
pub fn rank_one_count(t: &Tensor3<BigRational>, axis: Axis) -> Result<Count, TrilinearError> {
    let m = slice_matrix(t, axis)?;
    let entries: Vec<Lin> = m.iter().flatten().cloned().collect();
    let mut minors: Vec<Quad> = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            for k in 0..3 {
                for l in k + 1..3 {
                    minors.push(Quad::from_minor(&m[i][k], &m[i][l], &m[j][k], &m[j][l]));
                }
            }
        }
    }

    let mut total: u64 = 0;

    // stratum C: the point (1, 0, 0)
    {
        let p = [<BigRational as One>::one(), r0(), r0()];
        let in_v = minors.iter().all(|q| q.eval(&p).is_zero());
        let in_l = entries.iter().all(|e| e[0].is_zero());
        if in_v && !in_l {
            total += 1;
        }
    }

    // stratum B: a3 = 0, a2 = 1
    {
        let ps: Vec<QPoly> = minors
            .iter()
            .map(|q| q.chart_b())
            .filter(|p| !p.is_zero())
            .collect();
        let es: Vec<QPoly> = entries
            .iter()
            .map(lin_chart_b)
            .filter(|p| !p.is_zero())
            .collect();
        let all_minors_zero = minors.iter().all(|q| q.chart_b().is_zero());
        if all_minors_zero {
            if !es.is_empty() {
                return Ok(Count::Infinite);
            }
            // slice vanishes on the whole line: contributes nothing
        } else {
            let mut g = QPoly::zero();
            for p in &ps {
                g = g.gcd(p);
            }
            if g.degree() >= 1 {
                let sfg = g.squarefree_part();
                let v_count = sfg.degree();
                let in_l = if es.is_empty() {
                    // whole line is rank 0
                    v_count
                } else {
                    let mut he = QPoly::zero();
                    for e in &es {
                        he = he.gcd(e);
                    }
                    sfg.gcd(&he).degree()
                };
                total += (v_count - in_l) as u64;
            }
        }
    }

    // stratum A: a3 = 1
    match chart_a_count(&minors, &entries, 0)? {
        Count::Infinite => return Ok(Count::Infinite),
        Count::Finite(n) => total += n,
    }

    Ok(Count::Finite(total))
}

fn chart_a_count(
    minors: &[Quad],
    entries: &[Lin],
    shear_depth: i64,
) -> Result<Count, TrilinearError> {
    let ps_all: Vec<BPoly> = minors.iter().map(|q| q.chart_a()).collect();
    let es_all: Vec<BPoly> = entries.iter().map(lin_chart_a).collect();
    let ps: Vec<BPoly> = ps_all.iter().filter(|p| !p.is_zero()).cloned().collect();
    let es: Vec<BPoly> = es_all.iter().filter(|p| !p.is_zero()).cloned().collect();

    if ps.is_empty() {
        // rank <= 1 on the whole chart
        if es.is_empty() {
            return Ok(Count::Finite(0));
        }
        return Ok(Count::Infinite);
    }

    // saturate away positive-dimensional components that consist of rank-0
    // points
    let mut sat = ps.clone();
    loop {
        let mut g = BPoly::zero();
        for p in &sat {
            g = g.gcd(p);
        }
        if g.is_zero() || (g.deg_v() == 0 && g.c[0].degree() == 0) {
            break;
        }
        // the component V(g) must lie inside the rank-0 locus
        for e in &es_all {
            if e.is_zero() {
                continue;
            }
            if bdiv_exact(e, &g).is_none() {
                return Ok(Count::Infinite);
            }
        }
        sat = sat
            .iter()
            .map(|p| bdiv_exact(p, &g).expect("gcd divides"))
            .collect();
        sat.retain(|p| !(p.deg_v() == 0 && !p.is_zero() && p.c[0].degree() == 0));
        if sat.is_empty() {
            // everything was supported on rank-0 lines
            return Ok(Count::Finite(0));
        }
    }
    if sat
        .iter()
        .any(|p| p.deg_v() == 0 && !p.is_zero() && p.c[0].degree() == 0)
    {
        // a nonzero constant in the saturated system: no isolated points
        return Ok(Count::Finite(0));
    }

    // candidate u-values: pure-u constraints join the gcd directly, the
    // rest are eliminated by pairwise resultants in v
    let u_only: Vec<QPoly> = sat
        .iter()
        .filter(|p| p.deg_v() == 0)
        .map(|p| p.c[0].clone())
        .collect();
    let v_pos: Vec<BPoly> = sat.iter().filter(|p| p.deg_v() >= 1).cloned().collect();
    let mut res: Vec<QPoly> = u_only;
    for i in 0..v_pos.len() {
        for j in i + 1..v_pos.len() {
            let r = v_pos[i].resultant_v(&v_pos[j]);
            if !r.is_zero() {
                res.push(r);
            }
        }
    }
    if res.is_empty() && v_pos.len() >= 2 {
        // combinations fallback
        'outer: for c in 1..=3i64 {
            for i in 0..v_pos.len() {
                for j in 0..v_pos.len() {
                    if i == j {
                        continue;
                    }
                    let combo = badd(&v_pos[i], &bscale(&v_pos[j], c));
                    for k in 0..v_pos.len() {
                        if k == i || k == j {
                            continue;
                        }
                        let r = combo.resultant_v(&v_pos[k]);
                        if !r.is_zero() {
                            res.push(r);
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    if res.is_empty() {
        // deterministic shear and retry
        if shear_depth >= 6 {
            return Err(TrilinearError::EliminationFailed);
        }
        let s = shear_depth + 1;
        let minors_s: Vec<Quad> = minors.iter().map(|q| q.shear(s)).collect();
        let entries_s: Vec<Lin> = entries.iter().map(|l| lin_shear(l, s)).collect();
        return chart_a_count(&minors_s, &entries_s, s);
    }
    let mut r_all = QPoly::zero();
    for r in &res {
        r_all = r_all.gcd(r);
    }
    if r_all.is_zero() || r_all.degree() == 0 {
        return Ok(Count::Finite(0));
    }
    let sf = r_all.squarefree_part();
    let factors = sf.factor().ok_or(TrilinearError::EliminationFailed)?;

    let mut count: u64 = 0;
    for (m, _) in factors {
        if m.degree() == 0 {
            continue;
        }
        let modulus = Rc::new(m.monic());
        // fiber gcd over the original minors
        let mut h = ExtPoly::zero();
        for p in &ps {
            let red = ExtPoly::from_bpoly(p, &modulus);
            h = h.gcd(&red);
        }
        if h.is_zero() {
            // a vertical line inside the rank <= 1 locus that escaped
            // saturation
            return Err(TrilinearError::EliminationFailed);
        }
        let fiber = h.squarefree_degree();
        if fiber == 0 {
            continue;
        }
        // subtract fiber points that are rank 0
        let mut all_entries_zero = true;
        let mut he = ExtPoly::zero();
        for e in &es {
            let red = ExtPoly::from_bpoly(e, &modulus);
            if !red.is_zero() {
                all_entries_zero = false;
                he = he.gcd(&red);
            }
        }
        let in_l = if all_entries_zero {
            fiber
        } else if he.is_zero() {
            0
        } else {
            h.gcd(&he).squarefree_degree()
        };
        count += (modulus.degree() * (fiber - in_l)) as u64;
    }
    Ok(Count::Finite(count))
}

fn badd(a: &BPoly, b: &BPoly) -> BPoly {
    let n = a.c.len().max(b.c.len());
    let mut c = vec![QPoly::zero(); n];
    for (i, x) in a.c.iter().enumerate() {
        c[i] = c[i].add(x);
    }
    for (i, x) in b.c.iter().enumerate() {
        c[i] = c[i].add(x);
    }
    BPoly::new(c)
}

fn bscale(a: &BPoly, s: i64) -> BPoly {
    let r = BigRational::from_integer(s.into());
    BPoly::new(a.c.iter().map(|x| x.scale(&r)).collect())
}

/// Exact division in Q[u, v]; `None` if `g` does not divide `p`.
fn bdiv_exact(p: &BPoly, g: &BPoly) -> Option<BPoly> {
    if p.is_zero() {
        return Some(BPoly::zero());
    }
    if g.is_zero() {
        return None;
    }
    if g.deg_v() == 0 {
        // divide every coefficient by the u-polynomial
        let d = &g.c[0];
        let mut out = Vec::new();
        for c in &p.c {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        return Some(BPoly::new(out));
    }
    // long division in v over the rational function field Q(u)
    let dd = g.deg_v();
    let mut rem: Vec<RatQ> = p.c.iter().map(|c| RatQ::from_poly(c.clone())).collect();
    let mut quot: Vec<RatQ> = vec![RatQ::zero(); p.c.len()];
    let lead = RatQ::from_poly(g.c[dd].clone());
    loop {
        let da = match rem.iter().rposition(|x| !x.is_zero()) {
            Some(d) => d,
            None => break,
        };
        if da < dd {
            return None;
        }
        let f = rem[da].div(&lead);
        quot[da - dd] = f.clone();
        for i in 0..=dd {
            let t = RatQ::from_poly(g.c[i].clone()).mul(&f);
            rem[da - dd + i] = rem[da - dd + i].sub(&t);
        }
    }
    let mut out = Vec::new();
    for q in quot {
        out.push(q.to_poly()?);
    }
    Some(BPoly::new(out))
}

/// A rational function in `u`, reduced.
#[derive(Clone, Debug)]
struct RatQ {
    num: QPoly,
    den: QPoly,
}

impl RatQ {
    fn zero() -> Self {
        RatQ {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    fn from_poly(p: QPoly) -> Self {
        RatQ {
            num: p,
            den: QPoly::one(),
        }
    }

    fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let g = self.num.gcd(&self.den);
        if g.degree() >= 1 {
            self.num = self.num.div_rem(&g).0;
            self.den = self.den.div_rem(&g).0;
        }
        let l = self.den.lead();
        if !l.is_one() {
            self.num = self.num.scale(&l.recip());
            self.den = self.den.scale(&l.recip());
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn sub(&self, o: &Self) -> Self {
        RatQ {
            num: self.num.mul(&o.den).sub(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
        .reduce()
    }

    fn mul(&self, o: &Self) -> Self {
        RatQ {
            num: self.num.mul(&o.num),
            den: self.den.mul(&o.den),
        }
        .reduce()
    }

    fn div(&self, o: &Self) -> Self {
        RatQ {
            num: self.num.mul(&o.den),
            den: self.den.mul(&o.num),
        }
        .reduce()
    }

    fn to_poly(self) -> Option<QPoly> {
        let r = self.reduce();
        if r.den.degree() == 0 {
            Some(r.num.scale(&r.den.lead().recip()))
        } else {
            None
        }
    }
}

/// Brute-force count of rank-one slice points over the projective plane of
/// a prime field; agrees with the complex count for all but finitely many
/// primes when the count is finite.
pub fn count_rank_one_mod_p(t: &Tensor3<BigRational>, axis: Axis, p: u64) -> u64 {
    let m = slice_matrix(t, axis).expect("3x3x3 tensor");
    // integer residues of the linear forms
    let to_mod = |r: &BigRational| -> u64 {
        let num = r.numer().mod_floor(&BigInt::from(p)).to_u64().unwrap();
        let den = r.denom().mod_floor(&BigInt::from(p)).to_u64().unwrap();
        assert!(den != 0, "prime divides a denominator");
        num * mod_inv(den, p) % p
    };
    let forms: Vec<[u64; 3]> = m
        .iter()
        .flatten()
        .map(|l| [to_mod(&l[0]), to_mod(&l[1]), to_mod(&l[2])])
        .collect();
    let mut count = 0u64;
    let mut slice = [0u64; 9];
    let mut reps: Vec<[u64; 3]> = Vec::new();
    // representatives (1, b, c), (0, 1, c), (0, 0, 1)
    for b in 0..p {
        for c in 0..p {
            reps.push([1, b, c]);
        }
    }
    for c in 0..p {
        reps.push([0, 1, c]);
    }
    reps.push([0, 0, 1]);
    for a in reps {
        for (i, f) in forms.iter().enumerate() {
            slice[i] = (f[0] * a[0] + f[1] * a[1] + f[2] * a[2]) % p;
        }
        if rank3_mod_p(&slice, p) == 1 {
            count += 1;
        }
    }
    count
}

fn rank3_mod_p(s: &[u64; 9], p: u64) -> u32 {
    if s.iter().all(|&x| x == 0) {
        return 0;
    }
    // all 2x2 minors zero <=> rank <= 1
    for i in 0..3 {
        for j in i + 1..3 {
            for k in 0..3 {
                for l in k + 1..3 {
                    let det = (s[3 * i + k] * s[3 * j + l] + p * p
                        - s[3 * i + l] % p * (s[3 * j + k] % p) % p)
                        % p;
                    if det % p != 0 {
                        return 2; // at least 2; enough for the rank-1 test
                    }
                }
            }
        }
    }
    1
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

use num_integer::Integer;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::trilinear::{diagonal_tensor, veronese_cuboid};

    #[test]
    fn diagonal_tensor_has_three_rank_one_points() {
        for axis in super::super::AXES {
            assert_eq!(
                rank_one_count(&diagonal_tensor(), axis).unwrap(),
                Count::Finite(3)
            );
        }
    }

    #[test]
    fn veronese_cuboid_has_none() {
        for axis in super::super::AXES {
            assert_eq!(
                rank_one_count(&veronese_cuboid(), axis).unwrap(),
                Count::Finite(0)
            );
        }
    }

    #[test]
    fn single_entry_tensor_is_infinite_along_x() {
        let mut t = Tensor3::zero((3, 3, 3));
        t.set(0, 0, 0, rat(1, 1));
        assert_eq!(rank_one_count(&t, Axis::X).unwrap(), Count::Infinite);
    }

    #[test]
    fn finite_field_oracle_agrees_on_the_diagonal_tensor() {
        let t = diagonal_tensor();
        assert_eq!(count_rank_one_mod_p(&t, Axis::X, 101), 3);
        assert_eq!(count_rank_one_mod_p(&t, Axis::Y, 101), 3);
        let v = veronese_cuboid();
        assert_eq!(count_rank_one_mod_p(&v, Axis::Z, 101), 0);
    }

    #[test]
    fn oracle_matches_exact_count_on_sparse_tensors() {
        // deterministic sparse samples
        let mut seed = 0xabcdef01u64;
        let mut rnd = move || {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (seed >> 33) as i64 % 5 - 2
        };
        for case in 0..6 {
            let mut t = Tensor3::zero((3, 3, 3));
            for _ in 0..4 + case % 3 {
                let (i, j, k) = (
                    (rnd().rem_euclid(3)) as usize,
                    (rnd().rem_euclid(3)) as usize,
                    (rnd().rem_euclid(3)) as usize,
                );
                let val = rnd();
                if val != 0 {
                    t.set(i, j, k, rat(val, 1));
                }
            }
            for axis in super::super::AXES {
                let exact = rank_one_count(&t, axis).unwrap();
                if let Count::Finite(n) = exact {
                    let fp = count_rank_one_mod_p(&t, axis, 101);
                    assert_eq!(fp, n, "case {} axis {:?}", case, axis);
                }
            }
        }
    }
}
