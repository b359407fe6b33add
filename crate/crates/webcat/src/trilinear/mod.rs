//! Invariants and classification of ternary trilinear forms: slice cubics,
//! projective types of ternary cubics, and exact rank-one point counts.

mod aronhold;
mod count;
mod cubic;
pub mod poly;

pub use aronhold::{aronhold_st, discriminant, j_invariant};
pub use count::{count_rank_one_mod_p, rank_one_count, Count};
pub use cubic::{classify_cubic, CubicType, TernaryCubic, TriPoly};

use num_rational::BigRational;

use crate::error::TrilinearError;
use crate::fiber::Tensor3;

/// The slice axis: which tensor slot is contracted against the variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

pub const AXES: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

/// The symbolic 3x3 slice matrix: entry `(i, j)` is a linear form in the
/// three slice variables, stored as its coefficient vector.
pub fn slice_matrix(
    t: &Tensor3<BigRational>,
    axis: Axis,
) -> Result<Vec<Vec<[BigRational; 3]>>, TrilinearError> {
    if t.dims != (3, 3, 3) {
        return Err(TrilinearError::BadDims);
    }
    let zero = || <BigRational as num_traits::Zero>::zero();
    let mut m = vec![vec![[zero(), zero(), zero()]; 3]; 3];
    for (&(a, b, c), s) in t.entries() {
        let (h, i, j) = match axis {
            Axis::X => (a, b, c),
            Axis::Y => (b, a, c),
            Axis::Z => (c, a, b),
        };
        m[i][j][h] += s;
    }
    Ok(m)
}

/// Determinant of the slice matrix, expanded as a ternary cubic in the
/// slice variables.
pub fn slice_cubic(t: &Tensor3<BigRational>, axis: Axis) -> Result<TernaryCubic, TrilinearError> {
    let m = slice_matrix(t, axis)?;
    let lin = |e: &[BigRational; 3]| TriPoly::linear(e[0].clone(), e[1].clone(), e[2].clone());
    let mut det = TriPoly::zero();
    // 3x3 determinant by the Leibniz formula
    let perms: [((usize, usize, usize), i64); 6] = [
        ((0, 1, 2), 1),
        ((1, 2, 0), 1),
        ((2, 0, 1), 1),
        ((0, 2, 1), -1),
        ((2, 1, 0), -1),
        ((1, 0, 2), -1),
    ];
    for ((p0, p1, p2), sign) in perms {
        let prod = lin(&m[0][p0]).mul(&lin(&m[1][p1])).mul(&lin(&m[2][p2]));
        let signed = prod.scale(&BigRational::from_integer(sign.into()));
        det = det.add(&signed);
    }
    TernaryCubic::from_tri(&det)
}

/// The `(counts, types)` classification data of a 3x3x3 tensor.
#[derive(Clone, Debug, PartialEq)]
pub struct TrilinearInvariants {
    pub counts: [Count; 3],
    pub types: [CubicType; 3],
}

pub fn invariants(t: &Tensor3<BigRational>) -> Result<TrilinearInvariants, TrilinearError> {
    let mut counts = Vec::with_capacity(3);
    let mut types = Vec::with_capacity(3);
    for axis in AXES {
        counts.push(rank_one_count(t, axis)?);
        types.push(classify_cubic(&slice_cubic(t, axis)?));
    }
    Ok(TrilinearInvariants {
        counts: [counts[0].clone(), counts[1].clone(), counts[2].clone()],
        types: [types[0].clone(), types[1].clone(), types[2].clone()],
    })
}

/// Tensor equivalence by the invariant data: some simultaneous axis
/// permutation must match counts and types, with j-invariant equality
/// required for type-9 pairs. A successful match that rests on type-9
/// pairs is reported as inconclusive rather than asserted.
pub fn equivalent(
    t: &Tensor3<BigRational>,
    u: &Tensor3<BigRational>,
) -> Result<bool, TrilinearError> {
    let it = invariants(t)?;
    let iu = invariants(u)?;
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut matched_via_nine = false;
    for p in perms {
        let mut ok = true;
        let mut has_nine = false;
        for i in 0..3 {
            if it.counts[i] != iu.counts[p[i]] {
                ok = false;
                break;
            }
            let (a, b) = (&it.types[i], &iu.types[p[i]]);
            if a.tag != b.tag {
                ok = false;
                break;
            }
            if a.tag == 9 {
                if a.j != b.j {
                    ok = false;
                    break;
                }
                has_nine = true;
            }
        }
        if ok {
            if has_nine {
                matched_via_nine = true;
            } else {
                return Ok(true);
            }
        }
    }
    if matched_via_nine {
        return Err(TrilinearError::Inconclusive);
    }
    Ok(false)
}

/// The Veronese cuboid: the alternating tensor whose slices are
/// antisymmetric (`t_123 = -1, t_132 = 1, t_213 = -1, t_231 = 1,
/// t_321 = -1, t_312 = 1`).
pub fn veronese_cuboid() -> Tensor3<BigRational> {
    let one = <BigRational as num_traits::One>::one();
    let mut t = Tensor3::zero((3, 3, 3));
    t.set(0, 1, 2, -one.clone());
    t.set(0, 2, 1, one.clone());
    t.set(1, 0, 2, -one.clone());
    t.set(1, 2, 0, one.clone());
    t.set(2, 1, 0, -one.clone());
    t.set(2, 0, 1, one);
    t
}

/// The diagonal tensor `t_111 = t_222 = t_333 = 1`.
pub fn diagonal_tensor() -> Tensor3<BigRational> {
    let one = <BigRational as num_traits::One>::one();
    let mut t = Tensor3::zero((3, 3, 3));
    t.set(0, 0, 0, one.clone());
    t.set(1, 1, 1, one.clone());
    t.set(2, 2, 2, one);
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn diagonal_slice_is_the_coordinate_triangle() {
        let t = diagonal_tensor();
        let m = slice_matrix(&t, Axis::X).unwrap();
        // diag(x1, x2, x3)
        for i in 0..3 {
            for j in 0..3 {
                for h in 0..3 {
                    let expect = if i == j && j == h {
                        rat(1, 1)
                    } else {
                        rat(0, 1)
                    };
                    assert_eq!(m[i][j][h], expect);
                }
            }
        }
        let c = slice_cubic(&t, Axis::X).unwrap();
        assert_eq!(classify_cubic(&c).tag, 4); // xyz
    }

    #[test]
    fn veronese_slices_vanish_identically() {
        let t = veronese_cuboid();
        // the x-slices are antisymmetric matrices of linear forms
        let m = slice_matrix(&t, Axis::X).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for h in 0..3 {
                    assert_eq!(m[i][j][h], -m[j][i][h].clone());
                }
            }
        }
        // and all three slice determinants are identically zero
        for axis in AXES {
            let c = slice_cubic(&t, axis).unwrap();
            assert!(c.is_zero(), "slice determinant must vanish");
            assert_eq!(classify_cubic(&c).tag, 10);
        }
    }

    #[test]
    fn single_entry_tensor_has_zero_cubic() {
        let mut t = Tensor3::zero((3, 3, 3));
        t.set(0, 0, 0, rat(1, 1));
        let c = slice_cubic(&t, Axis::X).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn invariants_of_the_named_tensors() {
        let d = invariants(&diagonal_tensor()).unwrap();
        assert_eq!(
            d.counts,
            [Count::Finite(3), Count::Finite(3), Count::Finite(3)]
        );
        assert!(d.types.iter().all(|t| t.tag == 4));

        let v = invariants(&veronese_cuboid()).unwrap();
        assert_eq!(
            v.counts,
            [Count::Finite(0), Count::Finite(0), Count::Finite(0)]
        );
        assert!(v.types.iter().all(|t| t.tag == 10));
    }

    #[test]
    fn diagonal_not_equivalent_to_veronese() {
        assert_eq!(
            equivalent(&diagonal_tensor(), &veronese_cuboid()),
            Ok(false)
        );
        assert_eq!(equivalent(&diagonal_tensor(), &diagonal_tensor()), Ok(true));
    }

    #[test]
    fn equivalence_is_congruence_invariant() {
        use crate::linalg::LinearMap;
        let t = diagonal_tensor();
        let a = LinearMap::from_dense(&[
            vec![rat(1, 1), rat(2, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1), rat(1, 2)],
            vec![rat(3, 1), rat(0, 1), rat(1, 1)],
        ]);
        let b = LinearMap::from_dense(&[
            vec![rat(1, 1), rat(0, 1), rat(1, 1)],
            vec![rat(1, 1), rat(1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(2, 1), rat(1, 1)],
        ]);
        let c = LinearMap::from_dense(&[
            vec![rat(2, 1), rat(1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1), rat(0, 1)],
            vec![rat(1, 1), rat(0, 1), rat(1, 1)],
        ]);
        let tt = t.congruence(&a, &b, &c);
        assert_eq!(equivalent(&t, &tt), Ok(true));
    }
}
