//! Exact polynomial machinery for the trilinear classification: univariate
//! and bivariate rationals, resultants, small factorization, and quotient
//! fields `Q[x]/(m)`.

use std::rc::Rc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn r0() -> BigRational {
    <BigRational as Zero>::zero()
}

fn r1() -> BigRational {
    <BigRational as One>::one()
}

/// Univariate polynomial over Q, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct QPoly {
    pub c: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().map(|x| x.is_zero()).unwrap_or(false) {
            c.pop();
        }
        QPoly { c }
    }

    pub fn zero() -> Self {
        QPoly { c: vec![] }
    }

    pub fn one() -> Self {
        QPoly { c: vec![r1()] }
    }

    pub fn constant(r: BigRational) -> Self {
        Self::new(vec![r])
    }

    pub fn x() -> Self {
        QPoly {
            c: vec![r0(), r1()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lead(&self) -> BigRational {
        self.c.last().cloned().unwrap_or_else(r0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead();
        QPoly::new(self.c.iter().map(|x| x / &l).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let mut c = vec![r0(); n];
        for (i, x) in self.c.iter().enumerate() {
            c[i] += x;
        }
        for (i, x) in o.c.iter().enumerate() {
            c[i] += x;
        }
        QPoly::new(c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        QPoly {
            c: self.c.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![r0(); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            for (j, y) in o.c.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        QPoly::new(c)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        QPoly::new(self.c.iter().map(|x| x * r).collect())
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.c.clone();
        let dd = d.degree();
        let lead = d.lead();
        let mut quot = vec![r0(); self.c.len().max(1)];
        while rem
            .iter()
            .rposition(|x| !x.is_zero())
            .map(|p| p >= dd && rem.len() > dd)
            .unwrap_or(false)
        {
            let da = rem.iter().rposition(|x| !x.is_zero()).unwrap();
            if da < dd {
                break;
            }
            let f = &rem[da] / &lead;
            quot[da - dd] = f.clone();
            for i in 0..=dd {
                let t = &d.c[i] * &f;
                rem[da - dd + i] -= t;
            }
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Self::zero();
        }
        QPoly::new(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, x)| x * BigRational::from_integer((i as i64 + 1).into()))
                .collect(),
        )
    }

    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() || self.degree() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = r0();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// All rational roots with multiplicity, plus the root-free quotient.
    pub fn rational_roots(&self) -> (Vec<(BigRational, usize)>, QPoly) {
        let mut poly = self.clone();
        let mut roots = Vec::new();
        loop {
            if poly.degree() == 0 || poly.is_zero() {
                break;
            }
            match find_rational_root(&poly) {
                Some(r) => {
                    let mut mult = 0;
                    while !poly.is_zero() && poly.eval(&r).is_zero() && poly.degree() > 0 {
                        let lin = QPoly::new(vec![-r.clone(), r1()]);
                        poly = poly.div_rem(&lin).0;
                        mult += 1;
                    }
                    roots.push((r, mult));
                }
                None => break,
            }
        }
        (roots, poly)
    }

    /// Factor into monic irreducible factors over Q with multiplicity.
    /// Supports only what the trilinear classification needs: after rational
    /// roots, leftover degrees up to 4 (quadratic-pair splitting through the
    /// resolvent cubic).
    pub fn factor(&self) -> Option<Vec<(QPoly, usize)>> {
        if self.is_zero() {
            return None;
        }
        let mut out: Vec<(QPoly, usize)> = Vec::new();
        let (roots, mut rest) = self.rational_roots();
        for (r, m) in roots {
            out.push((QPoly::new(vec![-r, r1()]), m));
        }
        rest = rest.monic();
        while rest.degree() >= 2 {
            let piece = match rest.degree() {
                2 | 3 => rest.clone(), // no rational roots => irreducible
                4 => match split_quartic(&rest) {
                    Some((a, _b)) => a,
                    None => rest.clone(),
                },
                _ => return None,
            };
            let mut m = 0;
            loop {
                let (q, r) = rest.div_rem(&piece);
                if r.is_zero() {
                    rest = q;
                    m += 1;
                } else {
                    break;
                }
            }
            out.push((piece, m));
        }
        // merge duplicates
        let mut merged: Vec<(QPoly, usize)> = Vec::new();
        'outer: for (p, m) in out {
            for (q, mm) in merged.iter_mut() {
                if *q == p {
                    *mm += m;
                    continue 'outer;
                }
            }
            merged.push((p, m));
        }
        merged.sort_by(|a, b| {
            (a.0.degree(), format!("{:?}", a.0.c)).cmp(&(b.0.degree(), format!("{:?}", b.0.c)))
        });
        Some(merged)
    }
}

/// Try to split a monic rational-root-free quartic into two monic
/// quadratics over Q using the resolvent cubic.
fn split_quartic(f: &QPoly) -> Option<(QPoly, QPoly)> {
    let f = f.monic();
    let p = f.c[3].clone();
    let q = f.c[2].clone();
    let r = f.c[1].clone();
    let s = f.c[0].clone();
    // resolvent cubic for x^4 + p x^3 + q x^2 + r x + s:
    // z^3 - q z^2 + (p r - 4 s) z - (p^2 s - 4 q s + r^2)
    let res = QPoly::new(vec![
        -(&p * &p * &s - BigRational::from_integer(4.into()) * &q * &s + &r * &r),
        &p * &r - BigRational::from_integer(4.into()) * &s,
        -q.clone(),
        r1(),
    ]);
    let (zs, _) = res.rational_roots();
    for (z, _) in zs {
        // with z = b + d: a + c = p, ac = q - z, bd = s, ad + bc = r
        // a, c are roots of t^2 - p t + (q - z)
        let disc = &p * &p - BigRational::from_integer(4.into()) * (&q - &z);
        if let Some(sq) = rational_sqrt(&disc) {
            let two = BigRational::from_integer(2.into());
            let a = (&p + &sq) / &two;
            let cc = (&p - &sq) / &two;
            // b + d = z, b d = s, with a d + b c = r fixing the split
            let disc2 = &z * &z - BigRational::from_integer(4.into()) * &s;
            if let Some(sq2) = rational_sqrt(&disc2) {
                for sign in [r1(), -r1()] {
                    let b = (&z + &sign * &sq2) / &two;
                    let d = (&z - &sign * &sq2) / &two;
                    if &a * &d + &b * &cc == r {
                        let f1 = QPoly::new(vec![b, a.clone(), r1()]);
                        let f2 = QPoly::new(vec![d, cc.clone(), r1()]);
                        if f.div_rem(&f1.mul(&f2)).1.is_zero() {
                            return Some((f1, f2));
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
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

fn find_rational_root(p: &QPoly) -> Option<BigRational> {
    let d = p.degree();
    if p.is_zero() || d == 0 {
        return None;
    }
    let mut lcm = BigInt::one();
    for c in &p.c {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = p.c.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    if ints[0].is_zero() {
        return Some(r0());
    }
    let a0 = ints[0].clone();
    let an = ints[d].clone();
    for pd in divisors(&a0.abs()) {
        for qd in divisors(&an.abs()) {
            for sign in [1i64, -1] {
                let cand = BigRational::new(&pd * BigInt::from(sign), qd.clone());
                if p.eval(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    use num_traits::ToPrimitive;
    let mut out = Vec::new();
    if let Some(v) = n.to_u64() {
        let mut d = 1u64;
        while d.saturating_mul(d) <= v {
            if v % d == 0 {
                out.push(BigInt::from(d));
                out.push(BigInt::from(v / d));
            }
            d += 1;
            if d > 2_000_000 {
                break;
            }
        }
    }
    if out.is_empty() {
        out.push(BigInt::one());
        out.push(n.clone());
    }
    out.sort();
    out.dedup();
    out
}

// ---- bivariate polynomials as Q[u][v] ----

/// Polynomial in `v` with coefficients in Q[u].
#[derive(Clone, PartialEq, Debug)]
pub struct BPoly {
    /// coefficient of v^i
    pub c: Vec<QPoly>,
}

impl BPoly {
    pub fn new(mut c: Vec<QPoly>) -> Self {
        while c.last().map(|x| x.is_zero()).unwrap_or(false) {
            c.pop();
        }
        BPoly { c }
    }

    pub fn zero() -> Self {
        BPoly { c: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg_v(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![QPoly::zero(); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            for (j, y) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].add(&x.mul(y));
            }
        }
        BPoly::new(c)
    }

    pub fn content(&self) -> QPoly {
        let mut g = QPoly::zero();
        for x in &self.c {
            g = g.gcd(x);
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        let cont = self.content();
        if cont.is_zero() || cont.degree() == 0 {
            return self.clone();
        }
        BPoly::new(self.c.iter().map(|x| x.div_rem(&cont).0).collect())
    }

    /// Pseudo-remainder of `self` by `d` in (Q[u])[v].
    pub fn prem(&self, d: &Self) -> Self {
        assert!(!d.is_zero());
        let mut r = self.clone();
        let dd = d.deg_v();
        let lead = d.c[dd].clone();
        while !r.is_zero() && r.deg_v() >= dd {
            let rd = r.deg_v();
            let rl = r.c[rd].clone();
            // r = lead * r - rl * v^{rd-dd} * d
            let mut c = vec![QPoly::zero(); r.c.len()];
            for (i, x) in r.c.iter().enumerate() {
                c[i] = x.mul(&lead);
            }
            for (i, x) in d.c.iter().enumerate() {
                c[rd - dd + i] = c[rd - dd + i].sub(&x.mul(&rl));
            }
            let next = BPoly::new(c);
            debug_assert!(next.is_zero() || next.deg_v() < rd);
            r = next;
        }
        r
    }

    /// Gcd in Q(u)[v] made primitive in Q[u][v], times the content gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let cont = self.content().gcd(&o.content());
        let mut a = self.primitive_part();
        let mut b = o.primitive_part();
        if a.deg_v() < b.deg_v() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b).primitive_part();
            a = b;
            b = r;
        }
        let prim = a.primitive_part();
        BPoly::new(prim.c.iter().map(|x| x.mul(&cont)).collect()).normalize()
    }

    fn normalize(&self) -> Self {
        // make the leading coefficient monic-ish for determinism
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.c.last().unwrap().lead();
        if lead.is_zero() || lead.is_one() {
            return self.clone();
        }
        BPoly::new(self.c.iter().map(|x| x.scale(&lead.recip())).collect())
    }

    /// Resultant with respect to `v` (Sylvester determinant over Q[u] by
    /// fraction-free Gaussian elimination is overkill at these sizes; we use
    /// cofactor expansion).
    pub fn resultant_v(&self, o: &Self) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let m = self.deg_v();
        let n = o.deg_v();
        if m == 0 {
            return self.c[0].pow(n);
        }
        if n == 0 {
            return o.c[0].pow(m);
        }
        let size = m + n;
        let mut mat = vec![vec![QPoly::zero(); size]; size];
        for row in 0..n {
            for (i, coef) in self.c.iter().enumerate() {
                mat[row][row + m - i] = coef.clone();
            }
        }
        for row in 0..m {
            for (i, coef) in o.c.iter().enumerate() {
                mat[n + row][row + n - i] = coef.clone();
            }
        }
        det_qpoly(mat)
    }

    pub fn eval_u(&self, u: &BigRational) -> QPoly {
        QPoly::new(self.c.iter().map(|x| x.eval(u)).collect())
    }
}

fn det_qpoly(m: Vec<Vec<QPoly>>) -> QPoly {
    let n = m.len();
    if n == 0 {
        return QPoly::one();
    }
    // cofactor expansion; n <= 8 at our sizes
    fn go(m: &[Vec<QPoly>], cols: &mut Vec<usize>, row: usize) -> QPoly {
        if row == m.len() {
            return QPoly::one();
        }
        let mut acc = QPoly::zero();
        let active: Vec<usize> = cols.clone();
        for (pos, &c) in active.iter().enumerate() {
            let entry = &m[row][c];
            if entry.is_zero() {
                continue;
            }
            cols.remove(pos);
            let sub = go(m, cols, row + 1);
            cols.insert(pos, c);
            let term = entry.mul(&sub);
            if pos % 2 == 0 {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
        }
        acc
    }
    let mut cols: Vec<usize> = (0..n).collect();
    go(&m, &mut cols, 0)
}

// ---- quotient field Q[x]/(m) ----

/// Element of `Q[x]/(m)` for an irreducible modulus `m`.
#[derive(Clone, PartialEq, Debug)]
pub struct ExtElem {
    pub c: Vec<BigRational>, // length deg(m)
    pub modulus: Rc<QPoly>,
}

impl ExtElem {
    pub fn from_poly(p: &QPoly, modulus: &Rc<QPoly>) -> Self {
        let r = p.rem(modulus);
        let mut c = r.c.clone();
        c.resize(modulus.degree(), r0());
        ExtElem {
            c,
            modulus: modulus.clone(),
        }
    }

    pub fn zero(modulus: &Rc<QPoly>) -> Self {
        ExtElem {
            c: vec![r0(); modulus.degree()],
            modulus: modulus.clone(),
        }
    }

    pub fn one(modulus: &Rc<QPoly>) -> Self {
        Self::from_poly(&QPoly::one(), modulus)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    fn poly(&self) -> QPoly {
        QPoly::new(self.c.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_poly(&self.poly().add(&o.poly()), &self.modulus)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_poly(&self.poly().sub(&o.poly()), &self.modulus)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::from_poly(&self.poly().mul(&o.poly()), &self.modulus)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // extended Euclid: a * self + b * m = gcd = const
        let (g, a, _) = ext_gcd(&self.poly(), &self.modulus);
        if g.degree() != 0 || g.is_zero() {
            return None; // modulus not irreducible or element not a unit
        }
        let inv = a.scale(&g.c[0].recip());
        Some(Self::from_poly(&inv, &self.modulus))
    }
}

fn ext_gcd(a: &QPoly, b: &QPoly) -> (QPoly, QPoly, QPoly) {
    if b.is_zero() {
        return (a.clone(), QPoly::one(), QPoly::zero());
    }
    let (q, r) = a.div_rem(b);
    let (g, x, y) = ext_gcd(b, &r);
    // g = x b + y r = x b + y (a - q b) = y a + (x - y q) b
    let new_x = y.clone();
    let new_y = x.sub(&y.mul(&q));
    (g, new_x, new_y)
}

/// Polynomial in one variable over the quotient field.
#[derive(Clone, PartialEq, Debug)]
pub struct ExtPoly {
    pub c: Vec<ExtElem>,
}

impl ExtPoly {
    pub fn new(mut c: Vec<ExtElem>) -> Self {
        while c.last().map(|x| x.is_zero()).unwrap_or(false) {
            c.pop();
        }
        ExtPoly { c }
    }

    pub fn zero() -> Self {
        ExtPoly { c: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    /// Reduce a bivariate polynomial mod the modulus of `u`.
    pub fn from_bpoly(b: &BPoly, modulus: &Rc<QPoly>) -> Self {
        ExtPoly::new(b.c.iter().map(|q| ExtElem::from_poly(q, modulus)).collect())
    }

    pub fn rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero());
        let dd = d.degree();
        let lead_inv = d.c[dd].inverse().expect("leading coefficient invertible");
        let mut r = self.c.clone();
        loop {
            let da = match r.iter().rposition(|x| !x.is_zero()) {
                Some(p) => p,
                None => break,
            };
            if da < dd {
                break;
            }
            let f = r[da].mul(&lead_inv);
            for i in 0..=dd {
                let t = d.c[i].mul(&f);
                r[da - dd + i] = r[da - dd + i].sub(&t);
            }
        }
        ExtPoly::new(r)
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        // monic normalization
        if a.is_zero() {
            return a;
        }
        let inv = a.c[a.degree()].inverse().expect("unit");
        ExtPoly::new(a.c.iter().map(|x| x.mul(&inv)).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Self::zero();
        }
        let modulus = self.c[0].modulus.clone();
        ExtPoly::new(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, x)| {
                    let k = ExtElem::from_poly(
                        &QPoly::constant(BigRational::from_integer((i as i64 + 1).into())),
                        &modulus,
                    );
                    x.mul(&k)
                })
                .collect(),
        )
    }

    pub fn squarefree_degree(&self) -> usize {
        if self.is_zero() || self.degree() == 0 {
            return 0;
        }
        let g = self.gcd(&self.derivative());
        self.degree() - g.degree()
    }
}
