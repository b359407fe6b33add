//! Ternary cubics and their projective classification into the ten types.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::aronhold::{discriminant, j_invariant};
use crate::error::TrilinearError;
use crate::linalg::LinearMap;

fn r0() -> BigRational {
    <BigRational as Zero>::zero()
}

fn r1() -> BigRational {
    <BigRational as One>::one()
}

/// A small exact trivariate polynomial, used for the cubic manipulations.
#[derive(Clone, PartialEq, Debug)]
pub struct TriPoly {
    pub terms: BTreeMap<(u32, u32, u32), BigRational>,
}

impl TriPoly {
    pub fn zero() -> Self {
        TriPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(r: BigRational) -> Self {
        let mut t = Self::zero();
        t.insert((0, 0, 0), r);
        t
    }

    pub fn linear(a: BigRational, b: BigRational, c: BigRational) -> Self {
        let mut t = Self::zero();
        t.insert((1, 0, 0), a);
        t.insert((0, 1, 0), b);
        t.insert((0, 0, 1), c);
        t
    }

    pub fn insert(&mut self, e: (u32, u32, u32), c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(r0);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut t = self.clone();
        for (e, c) in &o.terms {
            t.insert(*e, c.clone());
        }
        t
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-r1()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut t = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                t.insert((e1.0 + e2.0, e1.1 + e2.1, e1.2 + e2.2), c1 * c2);
            }
        }
        t
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        TriPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }

    pub fn partial(&self, var: usize) -> Self {
        let mut t = Self::zero();
        for (&(a, b, c), coef) in &self.terms {
            let (e, k) = match var {
                0 => ((a.wrapping_sub(1), b, c), a),
                1 => ((a, b.wrapping_sub(1), c), b),
                _ => ((a, b, c.wrapping_sub(1)), c),
            };
            if k > 0 {
                t.insert(e, coef * BigRational::from_integer((k as i64).into()));
            }
        }
        t
    }

    /// Substitute each variable by a linear form (rows of `l`).
    pub fn substitute_linear(&self, l: &[[BigRational; 3]; 3]) -> Self {
        let forms: Vec<TriPoly> = l
            .iter()
            .map(|row| TriPoly::linear(row[0].clone(), row[1].clone(), row[2].clone()))
            .collect();
        let mut out = Self::zero();
        for (&(a, b, c), coef) in &self.terms {
            let mut term = TriPoly::constant(coef.clone());
            for _ in 0..a {
                term = term.mul(&forms[0]);
            }
            for _ in 0..b {
                term = term.mul(&forms[1]);
            }
            for _ in 0..c {
                term = term.mul(&forms[2]);
            }
            out = out.add(&term);
        }
        out
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational, z: &BigRational) -> BigRational {
        let mut acc = r0();
        for (&(a, b, c), coef) in &self.terms {
            let mut t = coef.clone();
            for _ in 0..a {
                t *= x;
            }
            for _ in 0..b {
                t *= y;
            }
            for _ in 0..c {
                t *= z;
            }
            acc += t;
        }
        acc
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|&(a, b, c)| a + b + c)
            .max()
            .unwrap_or(0)
    }

    /// Exact division by a linear form; `None` if it does not divide.
    pub fn div_linear(&self, l: &[BigRational; 3]) -> Option<Self> {
        // main variable: first index with nonzero coefficient in l
        let main = (0..3).find(|&i| !l[i].is_zero())?;
        let lc = l[main].clone();
        let mut rem = self.clone();
        let mut quot = TriPoly::zero();
        loop {
            // highest main-degree term
            let lead = rem
                .terms
                .iter()
                .max_by_key(|(&(a, b, c), _)| match main {
                    0 => (a, b, c),
                    1 => (b, a, c),
                    _ => (c, a, b),
                })
                .map(|(e, c)| (*e, c.clone()));
            let (e, c) = match lead {
                Some(x) => x,
                None => break,
            };
            let deg_main = match main {
                0 => e.0,
                1 => e.1,
                _ => e.2,
            };
            if deg_main == 0 {
                break;
            }
            let mut qe = e;
            match main {
                0 => qe.0 -= 1,
                1 => qe.1 -= 1,
                _ => qe.2 -= 1,
            }
            let qc = &c / &lc;
            let mut qterm = TriPoly::zero();
            qterm.insert(qe, qc);
            quot = quot.add(&qterm);
            let lpoly = TriPoly::linear(l[0].clone(), l[1].clone(), l[2].clone());
            rem = rem.sub(&qterm.mul(&lpoly));
        }
        if rem.is_zero() {
            Some(quot)
        } else {
            None
        }
    }
}

/// A homogeneous cubic in x, y, z with rational coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct TernaryCubic {
    pub f: TriPoly,
}

/// Fixed monomial order for the 10 coefficients.
pub const CUBIC_MONOMIALS: [(u32, u32, u32); 10] = [
    (3, 0, 0),
    (2, 1, 0),
    (2, 0, 1),
    (1, 2, 0),
    (1, 1, 1),
    (1, 0, 2),
    (0, 3, 0),
    (0, 2, 1),
    (0, 1, 2),
    (0, 0, 3),
];

impl TernaryCubic {
    pub fn from_coeffs(c: &[BigRational; 10]) -> Self {
        let mut f = TriPoly::zero();
        for (i, e) in CUBIC_MONOMIALS.iter().enumerate() {
            f.insert(*e, c[i].clone());
        }
        TernaryCubic { f }
    }

    pub fn from_tri(f: &TriPoly) -> Result<Self, TrilinearError> {
        for &(a, b, c) in f.terms.keys() {
            if a + b + c != 3 {
                return Err(TrilinearError::BadDims);
            }
        }
        Ok(TernaryCubic { f: f.clone() })
    }

    pub fn coeffs(&self) -> [BigRational; 10] {
        let mut out: [BigRational; 10] = Default::default();
        for (i, e) in CUBIC_MONOMIALS.iter().enumerate() {
            out[i] = self.f.terms.get(e).cloned().unwrap_or_else(r0);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero()
    }
}

/// One of the ten projective types; smooth cubics carry their j-invariant.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicType {
    pub tag: u8,
    pub j: Option<BigRational>,
}

impl CubicType {
    fn plain(tag: u8) -> Self {
        CubicType { tag, j: None }
    }
}

/// Classify a ternary cubic into the ten projective types:
/// 1: x^3, 2: x^2 y, 3: xy(x-y), 4: xyz, 5: z(x^2+yz), 6: x(x^2+yz),
/// 7: x^3 - y^2 z, 8: x^3 + y^3 - xyz, 9: elliptic, 10: zero.
pub fn classify_cubic(cubic: &TernaryCubic) -> CubicType {
    let f = &cubic.f;
    if f.is_zero() {
        return CubicType::plain(10);
    }
    // extract rational linear factors
    let mut rest = f.clone();
    let mut lines: Vec<[BigRational; 3]> = Vec::new();
    while rest.total_degree() >= 1 {
        match find_linear_factor(&rest) {
            Some(l) => {
                rest = rest.div_linear(&l).expect("verified factor");
                lines.push(l);
            }
            None => break,
        }
    }
    let rest_deg = rest.total_degree();
    match (lines.len(), rest_deg) {
        (3, 0) => {
            let distinct = distinct_lines(&lines);
            match distinct.len() {
                1 => CubicType::plain(1),
                2 => CubicType::plain(2),
                _ => {
                    if concurrent(&distinct[0], &distinct[1], &distinct[2]) {
                        CubicType::plain(3)
                    } else {
                        CubicType::plain(4)
                    }
                }
            }
        }
        (1, 2) => {
            // line times a conic with no rational linear factor
            let l = &lines[0];
            let b = conic_matrix(&rest);
            match b.rank(0.0) {
                3 => {
                    if line_tangent_to_conic(l, &rest) {
                        CubicType::plain(5)
                    } else {
                        CubicType::plain(6)
                    }
                }
                2 => {
                    // pair of conjugate lines crossing at the rational
                    // kernel point
                    let p = kernel_point(&b);
                    let through =
                        l[0].clone() * &p[0] + l[1].clone() * &p[1] + l[2].clone() * &p[2];
                    if through.is_zero() {
                        CubicType::plain(3)
                    } else {
                        CubicType::plain(4)
                    }
                }
                _ => {
                    // rank 1 would mean a rational double line, which the
                    // factor search would have found
                    CubicType::plain(2)
                }
            }
        }
        (0, 3) => {
            // irreducible over Q
            let disc = discriminant(cubic);
            if !disc.is_zero() {
                return CubicType {
                    tag: 9,
                    j: Some(j_invariant(cubic)),
                };
            }
            let h = hessian(f);
            if h.is_zero() {
                // a cone: three concurrent conjugate lines
                return CubicType::plain(3);
            }
            if proportional(&h, f) {
                // a conjugate triangle
                return CubicType::plain(4);
            }
            // unique singular point, necessarily rational
            match singular_point(f) {
                Some(p) => {
                    if tangent_cone_is_double_line(f, &p) {
                        CubicType::plain(7)
                    } else {
                        CubicType::plain(8)
                    }
                }
                None => CubicType {
                    tag: 9,
                    j: Some(j_invariant(cubic)),
                },
            }
        }
        _ => {
            // (2, 1) and similar cannot occur: a degree-1 remainder would
            // itself be a linear factor
            unreachable!("impossible factor split {} + {}", lines.len(), rest_deg)
        }
    }
}

fn distinct_lines(lines: &[[BigRational; 3]]) -> Vec<[BigRational; 3]> {
    let mut out: Vec<[BigRational; 3]> = Vec::new();
    for l in lines {
        let n = normalize_line(l);
        if !out.iter().any(|m| *m == n) {
            out.push(n);
        }
    }
    out
}

fn normalize_line(l: &[BigRational; 3]) -> [BigRational; 3] {
    let lead = l.iter().find(|c| !c.is_zero()).cloned().unwrap_or_else(r1);
    [&l[0] / &lead, &l[1] / &lead, &l[2] / &lead]
}

fn concurrent(a: &[BigRational; 3], b: &[BigRational; 3], c: &[BigRational; 3]) -> bool {
    let det = &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0]);
    det.is_zero()
}

fn conic_matrix(g: &TriPoly) -> LinearMap<BigRational> {
    let two = BigRational::from_integer(2.into());
    let get = |e: (u32, u32, u32)| g.terms.get(&e).cloned().unwrap_or_else(r0);
    let mut b = LinearMap::zero(3, 3);
    b.set(0, 0, get((2, 0, 0)));
    b.set(1, 1, get((0, 2, 0)));
    b.set(2, 2, get((0, 0, 2)));
    let xy = get((1, 1, 0)) / &two;
    let xz = get((1, 0, 1)) / &two;
    let yz = get((0, 1, 1)) / &two;
    b.set(0, 1, xy.clone());
    b.set(1, 0, xy);
    b.set(0, 2, xz.clone());
    b.set(2, 0, xz);
    b.set(1, 2, yz.clone());
    b.set(2, 1, yz);
    b
}

fn kernel_point(b: &LinearMap<BigRational>) -> [BigRational; 3] {
    // rank-2 symmetric 3x3: kernel from cross products of two independent
    // rows
    let rows: Vec<[BigRational; 3]> = (0..3)
        .map(|i| [b.get(i, 0), b.get(i, 1), b.get(i, 2)])
        .collect();
    for i in 0..3 {
        for j in i + 1..3 {
            let c = cross(&rows[i], &rows[j]);
            if c.iter().any(|x| !x.is_zero()) {
                return c;
            }
        }
    }
    // rank <= 1: any kernel vector
    [r1(), r0(), r0()]
}

fn cross(a: &[BigRational; 3], b: &[BigRational; 3]) -> [BigRational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn line_tangent_to_conic(l: &[BigRational; 3], g: &TriPoly) -> bool {
    // two independent points on the line
    let (p, q) = points_on_line(l);
    // g(s p + t q) = A s^2 + B s t + C t^2
    let a = eval3(g, &p);
    let c = eval3(g, &q);
    let mid = [&p[0] + &q[0], &p[1] + &q[1], &p[2] + &q[2]];
    let m = eval3(g, &mid);
    let b = &m - &a - &c;
    let four = BigRational::from_integer(4.into());
    (&b * &b - four * &a * &c).is_zero()
}

fn points_on_line(l: &[BigRational; 3]) -> ([BigRational; 3], [BigRational; 3]) {
    // solutions of l . p = 0
    let mut pts = Vec::new();
    let basis = [[r1(), r0(), r0()], [r0(), r1(), r0()], [r0(), r0(), r1()]];
    // cross products of l with the basis give points on the line
    for e in &basis {
        let c = cross(l, e);
        if c.iter().any(|x| !x.is_zero()) && !pts.contains(&c) {
            pts.push(c);
        }
        if pts.len() == 2 {
            break;
        }
    }
    // ensure independence
    let p = pts[0].clone();
    let q = pts
        .into_iter()
        .skip(1)
        .find(|q| cross(&p, q).iter().any(|x| !x.is_zero()))
        .expect("a line contains two independent points");
    (p, q)
}

fn eval3(g: &TriPoly, p: &[BigRational; 3]) -> BigRational {
    g.eval(&p[0], &p[1], &p[2])
}

pub(crate) fn hessian(f: &TriPoly) -> TriPoly {
    let d: Vec<Vec<TriPoly>> = (0..3)
        .map(|i| (0..3).map(|j| f.partial(i).partial(j)).collect())
        .collect();
    let mut det = TriPoly::zero();
    let perms: [((usize, usize, usize), i64); 6] = [
        ((0, 1, 2), 1),
        ((1, 2, 0), 1),
        ((2, 0, 1), 1),
        ((0, 2, 1), -1),
        ((2, 1, 0), -1),
        ((1, 0, 2), -1),
    ];
    for ((p0, p1, p2), sign) in perms {
        let prod = d[0][p0].mul(&d[1][p1]).mul(&d[2][p2]);
        det = det.add(&prod.scale(&BigRational::from_integer(sign.into())));
    }
    det
}

fn proportional(a: &TriPoly, b: &TriPoly) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    let (e, c) = a.terms.iter().next().expect("nonzero");
    let d = match b.terms.get(e) {
        Some(d) => d,
        None => return false,
    };
    let ratio = c / d;
    b.scale(&ratio) == *a
}

/// The unique rational singular point of an irreducible singular cubic.
fn singular_point(f: &TriPoly) -> Option<[BigRational; 3]> {
    let fx = f.partial(0);
    let fy = f.partial(1);
    let fz = f.partial(2);
    let parts = [fx, fy, fz];
    // chart z = 1 via resultants in y, then y = 1 with z = 0, then (1,0,0)
    if let Some(p) = singular_in_chart(&parts, 2) {
        return Some(p);
    }
    if let Some(p) = singular_in_chart(&parts, 1) {
        return Some(p);
    }
    if let Some(p) = singular_in_chart(&parts, 0) {
        return Some(p);
    }
    None
}

/// Search for a rational common zero with coordinate `chart` set to 1.
fn singular_in_chart(parts: &[TriPoly; 3], chart: usize) -> Option<[BigRational; 3]> {
    use super::poly::{BPoly, QPoly};
    // remaining variables in order
    let vars: Vec<usize> = (0..3).filter(|&v| v != chart).collect();
    let to_bpoly = |g: &TriPoly| -> BPoly {
        // u = vars[0], v = vars[1]
        let mut coeffs: Vec<QPoly> = Vec::new();
        for (&e, c) in &g.terms {
            let exps = [e.0 as usize, e.1 as usize, e.2 as usize];
            let du = exps[vars[0]];
            let dv = exps[vars[1]];
            while coeffs.len() <= dv {
                coeffs.push(QPoly::zero());
            }
            let mut mono = vec![r0(); du + 1];
            mono[du] = c.clone();
            coeffs[dv] = coeffs[dv].add(&QPoly::new(mono));
        }
        BPoly::new(coeffs)
    };
    let ps: Vec<BPoly> = parts.iter().map(to_bpoly).collect();
    // candidate u-values from pairwise resultants
    let mut res_polys: Vec<QPoly> = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            if ps[i].is_zero() || ps[j].is_zero() {
                continue;
            }
            let r = ps[i].resultant_v(&ps[j]);
            if !r.is_zero() {
                res_polys.push(r);
            }
        }
    }
    let mut g = QPoly::zero();
    for r in &res_polys {
        g = g.gcd(r);
    }
    let candidates: Vec<BigRational> = if g.is_zero() || g.degree() == 0 {
        // fall back to scanning rational roots of any single nonzero
        // projection
        let mut c = Vec::new();
        for p in &ps {
            if p.deg_v() == 0 && !p.is_zero() {
                let (roots, _) = p.c[0].rational_roots();
                c.extend(roots.into_iter().map(|(r, _)| r));
            }
        }
        c
    } else {
        g.rational_roots().0.into_iter().map(|(r, _)| r).collect()
    };
    for u0 in candidates {
        // common rational v-roots
        let mut fiber = QPoly::zero();
        for p in &ps {
            fiber = fiber.gcd(&p.eval_u(&u0));
        }
        if fiber.is_zero() {
            continue;
        }
        for (v0, _) in fiber.rational_roots().0 {
            let mut pt = [r0(), r0(), r0()];
            pt[chart] = r1();
            pt[vars[0]] = u0.clone();
            pt[vars[1]] = v0;
            if parts.iter().all(|p| eval3(p, &pt).is_zero()) {
                return Some(pt);
            }
        }
    }
    None
}

/// True iff the degree-2 tangent cone at the singular point is a double
/// line (cusp) rather than two distinct lines (node).
fn tangent_cone_is_double_line(f: &TriPoly, p: &[BigRational; 3]) -> bool {
    // translate p to (0, 0, 1)-style origin: choose a chart where the
    // point has a nonzero coordinate and substitute x -> x + p x', etc.
    let chart = (0..3).find(|&i| !p[i].is_zero()).expect("projective point");
    // linear substitution sending the origin of the chart to p: new vars
    // (x0', x1') in the remaining slots, chart variable stays.
    let mut sub: [[BigRational; 3]; 3] = Default::default();
    let others: Vec<usize> = (0..3).filter(|&i| i != chart).collect();
    // row i of sub = expression of old variable i in new variables
    for (newv, &old) in others.iter().enumerate() {
        sub[old][newv] = r1();
        sub[old][2] = p[old].clone() / p[chart].clone();
    }
    sub[chart][2] = r1();
    let g = f.substitute_linear(&sub);
    // lowest homogeneous part in the first two new variables at z' = 1
    let mut quad = TriPoly::zero();
    let mut has_lower = false;
    for (&(a, b, c), coef) in &g.terms {
        let local_deg = a + b;
        let _ = c;
        if local_deg < 2 && !coef.is_zero() {
            has_lower = true;
        }
        if local_deg == 2 {
            quad.insert((a, b, 0), coef.clone());
        }
    }
    debug_assert!(!has_lower, "point is not singular");
    // binary quadratic A x^2 + B xy + C y^2
    let get = |e: (u32, u32, u32)| quad.terms.get(&e).cloned().unwrap_or_else(r0);
    let a = get((2, 0, 0));
    let b = get((1, 1, 0));
    let c = get((0, 2, 0));
    let four = BigRational::from_integer(4.into());
    (&b * &b - four * &a * &c).is_zero()
}

/// Find one rational linear factor of a form, if any.
fn find_linear_factor(f: &TriPoly) -> Option<[BigRational; 3]> {
    use super::poly::QPoly;
    if f.is_zero() {
        return None;
    }
    // shape (0, 0, 1): z | f
    if f.terms.keys().all(|&(_, _, c)| c >= 1) {
        return Some([r0(), r0(), r1()]);
    }
    // shape (0, 1, g): substitute y = -g z; coefficients are polynomials
    // in g indexed by the (x, z) profile
    {
        let mut coef_polys: BTreeMap<(u32, u32), QPoly> = BTreeMap::new();
        for (&(a, b, c), coef) in &f.terms {
            // x^a (-g z)^b z^c -> x^a z^{b+c} * (-g)^b
            let mut mono = vec![r0(); b as usize + 1];
            let sign = if b % 2 == 0 {
                coef.clone()
            } else {
                -coef.clone()
            };
            mono[b as usize] = sign;
            let entry = coef_polys.entry((a, b + c)).or_insert_with(QPoly::zero);
            *entry = entry.add(&QPoly::new(mono));
        }
        let mut g = QPoly::zero();
        for p in coef_polys.values() {
            g = g.gcd(p);
        }
        if !g.is_zero() && g.degree() >= 1 {
            for (r, _) in g.rational_roots().0 {
                let cand = [r0(), r1(), r.clone()];
                if f.div_linear(&cand).is_some() {
                    return Some(cand);
                }
            }
        }
    }
    // shape (1, b, g): x = -b y - g z; the top y-coefficient pins b
    {
        let d = f.total_degree();
        // coefficient of y^d after substitution: f(-b, 1, 0)
        let mut yb = QPoly::zero();
        for (&(a, b, c), coef) in &f.terms {
            if c != 0 {
                continue;
            }
            // x^a y^b with x -> -t: (-t)^a contributes to y^{a+b}
            if a + b == d {
                let mut mono = vec![r0(); a as usize + 1];
                mono[a as usize] = if a % 2 == 0 {
                    coef.clone()
                } else {
                    -coef.clone()
                };
                yb = yb.add(&QPoly::new(mono));
            }
        }
        let beta_candidates: Vec<BigRational> = if yb.is_zero() {
            // every beta kills the y^3 coefficient; search a few small ones
            // is not exhaustive, so instead handle via the (0,1,g) shapes
            vec![]
        } else {
            yb.rational_roots().0.into_iter().map(|(r, _)| r).collect()
        };
        for beta in beta_candidates {
            // with x = -beta y - g z, coefficients are polynomials in g
            let mut coef_polys: BTreeMap<(u32, u32), QPoly> = BTreeMap::new();
            for (&(a, b, c), coef) in &f.terms {
                // (-beta y - g z)^a y^b z^c: expand binomially
                for k in 0..=a {
                    // choose k factors of (-g z), a - k of (-beta y)
                    let binom = BigRational::from_integer(binomial(a, k).into());
                    let beta_pow = pow_rat(&-beta.clone(), a - k);
                    let coeff = coef * binom * beta_pow;
                    let mut mono = vec![r0(); k as usize + 1];
                    mono[k as usize] = if k % 2 == 0 { coeff } else { -coeff };
                    let key = (b + (a - k), c + k);
                    let entry = coef_polys.entry(key).or_insert_with(QPoly::zero);
                    *entry = entry.add(&QPoly::new(mono));
                }
            }
            let mut g = QPoly::zero();
            for p in coef_polys.values() {
                g = g.gcd(p);
            }
            if g.is_zero() {
                // identically zero for every g: f divisible by infinitely
                // many lines, impossible for nonzero f
                continue;
            }
            if g.degree() >= 1 {
                for (r, _) in g.rational_roots().0 {
                    let cand = [r1(), beta.clone(), r];
                    if f.div_linear(&cand).is_some() {
                        return Some(cand);
                    }
                }
            }
        }
    }
    None
}

fn binomial(n: u32, k: u32) -> i64 {
    let mut r = 1i64;
    for i in 0..k {
        r = r * (n - i) as i64 / (i + 1) as i64;
    }
    r
}

fn pow_rat(x: &BigRational, n: u32) -> BigRational {
    let mut acc = r1();
    for _ in 0..n {
        acc *= x;
    }
    acc
}
