//! The degree-4 and degree-6 invariants of ternary cubics, computed as
//! epsilon-tensor contractions and calibrated on the Weierstrass family
//! `y^2 z = x^3 + a x z^2 + b z^3`, whose invariants are proportional to
//! `a` and `b`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cubic::{TernaryCubic, TriPoly};

const PERMS: [([usize; 3], i64); 6] = [
    ([0, 1, 2], 1),
    ([1, 2, 0], 1),
    ([2, 0, 1], 1),
    ([0, 2, 1], -1),
    ([2, 1, 0], -1),
    ([1, 0, 2], -1),
];

/// Bracket monomial for the degree-4 invariant: (abc)(abd)(acd)(bcd).
const S_BRACKETS: [[usize; 3]; 4] = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];

/// Bracket monomial for the degree-6 invariant:
/// (abc)(abd)(aef)(bef)(cde)(cdf).
const T_BRACKETS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 1, 3],
    [0, 4, 5],
    [1, 4, 5],
    [2, 3, 4],
    [2, 3, 5],
];

/// Alternative degree-6 bracket (the hexagon), used if the first pattern
/// degenerates: (abc)(bcd)(cde)(def)(efa)(fab).
const T_BRACKETS_ALT: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 2, 3],
    [2, 3, 4],
    [3, 4, 5],
    [4, 5, 0],
    [5, 0, 1],
];

/// The (scaled) symmetric coefficient tensor of `6 f` as integers: for `f
/// = sum c_m m`, the entries are `F_iii = 6 c`, `F_iij = 2 c`, `F_ijk = c`.
fn sym_tensor_int(cubic: &TernaryCubic) -> ([[[BigInt; 3]; 3]; 3], BigInt) {
    // clear denominators first; the returned scale is irrelevant to the
    // zero test and to j
    let coeffs = cubic.coeffs();
    let mut lcm = BigInt::one();
    for c in &coeffs {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut f: [[[BigInt; 3]; 3]; 3] = Default::default();
    for (idx, &(a, b, c)) in super::cubic::CUBIC_MONOMIALS.iter().enumerate() {
        let coeff = &ints[idx];
        if coeff.is_zero() {
            continue;
        }
        // exponent vector -> index multiset
        let mut vars = Vec::new();
        for _ in 0..a {
            vars.push(0usize);
        }
        for _ in 0..b {
            vars.push(1);
        }
        for _ in 0..c {
            vars.push(2);
        }
        // multiplicity of the multiset as ordered triples
        let mult: i64 = match (a, b, c) {
            (3, 0, 0) | (0, 3, 0) | (0, 0, 3) => 1,
            (1, 1, 1) => 6,
            _ => 3,
        };
        let per_entry = coeff * BigInt::from(6 / mult);
        // assign to every permutation of the index multiset
        let mut seen = std::collections::BTreeSet::new();
        permute3(&vars, &mut |i, j, k| {
            if seen.insert((i, j, k)) {
                f[i][j][k] = per_entry.clone();
            }
        });
    }
    (f, lcm)
}

fn permute3(vars: &[usize], emit: &mut dyn FnMut(usize, usize, usize)) {
    let v = vars;
    for (p, _) in PERMS {
        emit(v[p[0]], v[p[1]], v[p[2]]);
    }
}

fn bracket_eval(f: &[[[BigInt; 3]; 3]; 3], brackets: &[[usize; 3]]) -> BigInt {
    let nb = brackets.len();
    let nsym = brackets.iter().flatten().max().unwrap() + 1;
    // occurrences of each symbol as (bracket, slot)
    let mut occ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nsym];
    for (b, br) in brackets.iter().enumerate() {
        for (s, &sym) in br.iter().enumerate() {
            occ[sym].push((b, s));
        }
    }
    debug_assert!(occ.iter().all(|o| o.len() == 3));
    let mut total = BigInt::zero();
    let mut choice = vec![0usize; nb];
    loop {
        // evaluate this assignment
        let mut sign = 1i64;
        for (b, &c) in choice.iter().enumerate() {
            let _ = b;
            sign *= PERMS[c].1;
        }
        let mut term = BigInt::from(sign);
        let mut zero = false;
        for o in &occ {
            let idx: Vec<usize> = o.iter().map(|&(b, s)| PERMS[choice[b]].0[s]).collect();
            let entry = &f[idx[0]][idx[1]][idx[2]];
            if entry.is_zero() {
                zero = true;
                break;
            }
            term *= entry;
        }
        if !zero {
            total += term;
        }
        // next choice
        let mut i = 0;
        loop {
            if i == nb {
                return total;
            }
            choice[i] += 1;
            if choice[i] < 6 {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn weierstrass(a: i64, b: i64) -> TernaryCubic {
    // x^3 + a x z^2 + b z^3 - y^2 z
    let mut f = TriPoly::zero();
    let big = |x: i64| BigRational::from_integer(x.into());
    f.insert((3, 0, 0), big(1));
    f.insert((1, 0, 2), big(a));
    f.insert((0, 0, 3), big(b));
    f.insert((0, 2, 1), big(-1));
    TernaryCubic::from_tri(&f).unwrap()
}

struct Calibration {
    alpha: BigRational,
    beta: BigRational,
    use_alt_t: bool,
}

static CALIBRATION: OnceLock<Calibration> = OnceLock::new();

fn calibration() -> &'static Calibration {
    CALIBRATION.get_or_init(|| {
        let s_raw = |c: &TernaryCubic| {
            let (f, _) = sym_tensor_int(c);
            bracket_eval(&f, &S_BRACKETS)
        };
        let t_raw = |c: &TernaryCubic, alt: bool| {
            let (f, _) = sym_tensor_int(c);
            bracket_eval(&f, if alt { &T_BRACKETS_ALT } else { &T_BRACKETS })
        };
        let alpha_int = s_raw(&weierstrass(1, 0));
        assert!(!alpha_int.is_zero(), "degree-4 bracket degenerated");
        assert!(
            s_raw(&weierstrass(0, 1)).is_zero(),
            "degree-4 invariant must not see b"
        );
        // linearity sanity: S(a=2) = 2 S(a=1)
        assert_eq!(s_raw(&weierstrass(2, 0)), &alpha_int * BigInt::from(2));

        let mut use_alt_t = false;
        let mut beta_int = t_raw(&weierstrass(0, 1), false);
        if beta_int.is_zero() {
            use_alt_t = true;
            beta_int = t_raw(&weierstrass(0, 1), true);
        }
        assert!(!beta_int.is_zero(), "degree-6 bracket degenerated");
        assert!(
            t_raw(&weierstrass(1, 0), use_alt_t).is_zero(),
            "degree-6 invariant must not see a"
        );
        assert_eq!(
            t_raw(&weierstrass(0, 2), use_alt_t),
            &beta_int * BigInt::from(2)
        );
        Calibration {
            alpha: BigRational::from_integer(alpha_int),
            beta: BigRational::from_integer(beta_int),
            use_alt_t,
        }
    })
}

/// Normalized Aronhold-type invariants `(S, T)`: on the Weierstrass curve
/// `y^2 z = x^3 + a x z^2 + b z^3` they evaluate to exactly `(a, b)`.
/// They scale as `S(lambda f) = lambda^4 S(f)`, `T(lambda f) = lambda^6
/// T(f)` up to the internal integer normalization, so only scale-invariant
/// combinations (the discriminant zero test and j) are exposed alongside.
pub fn aronhold_st(cubic: &TernaryCubic) -> (BigRational, BigRational) {
    let cal = calibration();
    let (f, _) = sym_tensor_int(cubic);
    let s = BigRational::from_integer(bracket_eval(&f, &S_BRACKETS)) / &cal.alpha;
    let t = BigRational::from_integer(bracket_eval(
        &f,
        if cal.use_alt_t {
            &T_BRACKETS_ALT
        } else {
            &T_BRACKETS
        },
    )) / &cal.beta;
    (s, t)
}

/// `4 S^3 + 27 T^2`, proportional to the discriminant: zero exactly on the
/// singular cubics.
pub fn discriminant(cubic: &TernaryCubic) -> BigRational {
    let (s, t) = aronhold_st(cubic);
    let four = BigRational::from_integer(4.into());
    let twenty_seven = BigRational::from_integer(27.into());
    four * &s * &s * &s + twenty_seven * &t * &t
}

/// The j-invariant of a smooth cubic: `1728 * 4 S^3 / (4 S^3 + 27 T^2)`.
pub fn j_invariant(cubic: &TernaryCubic) -> BigRational {
    let (s, t) = aronhold_st(cubic);
    let four = BigRational::from_integer(4.into());
    let twenty_seven = BigRational::from_integer(27.into());
    let s3 = four * &s * &s * &s;
    let den = &s3 + twenty_seven * &t * &t;
    assert!(!den.is_zero(), "j-invariant of a singular cubic");
    BigRational::from_integer(1728.into()) * s3 / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weierstrass_invariants_are_exactly_a_and_b() {
        for (a, b) in [(1i64, 0i64), (0, 1), (2, 5), (-3, 2), (7, -11)] {
            let (s, t) = aronhold_st(&weierstrass(a, b));
            assert_eq!(
                s,
                BigRational::from_integer(a.into()),
                "S at ({}, {})",
                a,
                b
            );
            assert_eq!(
                t,
                BigRational::from_integer(b.into()),
                "T at ({}, {})",
                a,
                b
            );
        }
    }

    #[test]
    fn j_matches_the_weierstrass_formula() {
        // j = 1728 * 4 a^3 / (4 a^3 + 27 b^2)
        for (a, b) in [(1i64, 1i64), (-2, 3), (5, -1), (1, 0)] {
            let expect = BigRational::from_integer((1728 * 4 * a * a * a).into())
                / BigRational::from_integer((4 * a * a * a + 27 * b * b).into());
            assert_eq!(j_invariant(&weierstrass(a, b)), expect);
        }
        // cuspidal / nodal members are singular
        assert!(discriminant(&weierstrass(0, 0)).is_zero());
        assert!(discriminant(&weierstrass(-3, 2)).is_zero());
        assert!(!discriminant(&weierstrass(1, 1)).is_zero());
    }

    #[test]
    fn j_is_a_projective_invariant() {
        use num_traits::One;
        let w = weierstrass(2, 3);
        let big = |x: i64| BigRational::from_integer(x.into());
        let l = [
            [big(1), big(1), big(0)],
            [big(0), big(1), big(2)],
            [big(1), big(0), big(1)],
        ];
        let g = TernaryCubic::from_tri(&w.f.substitute_linear(&l)).unwrap();
        assert_eq!(j_invariant(&g), j_invariant(&w));
        // and under scaling
        let h = TernaryCubic::from_tri(&w.f.scale(&BigRational::new(3.into(), 7.into()))).unwrap();
        let _ = BigRational::one();
        assert_eq!(j_invariant(&h), j_invariant(&w));
    }
}
