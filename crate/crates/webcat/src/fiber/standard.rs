//! The distinguished fiber specs: the SL2 standard solution, the GL2
//! standard triple, and the SO3 pair obtained from the symmetric-square
//! embedding.

use super::{FiberSpec, Tensor3};
use crate::diagram::Category;
use crate::error::FiberError;
use crate::linalg::LinearMap;
use crate::scalar::quantum::{q2_plus_q2inv, trace_target_in};
use crate::scalar::{ComplexValue, Scalar};

/// `S(1) = [[0, 1], [-q, 0]]`, the standard SL2 solution.
pub fn sl2_standard<S: Scalar>(v: S) -> Result<FiberSpec<S>, FiberError> {
    let q = v.mul(&v);
    let m = LinearMap::from_dense(&[vec![S::zero(), S::one()], vec![q.neg(), S::zero()]]);
    FiberSpec::sl2(2, m, v)
}

/// `[[0, 1], [q, 0]]`, a bilinear solution of `tr(M^T M^-1) = [2]`.
pub fn gl2_standard_bilinear<S: Scalar>(v: &S) -> LinearMap<S> {
    let q = v.mul(v);
    LinearMap::from_dense(&[vec![S::zero(), S::one()], vec![q, S::zero()]])
}

/// `[[1,0,0],[0,0,1],[0,q^2,0]]`, the SO3 bilinear solution of
/// `tr(M^T M^-1) = [3]` (standard up to permutation).
pub fn so3_standard_bilinear<S: Scalar>(v: &S) -> LinearMap<S> {
    let q = v.mul(v);
    let q2 = q.mul(&q);
    let mut m = LinearMap::zero(3, 3);
    m.set(0, 0, S::one());
    m.set(1, 2, S::one());
    m.set(2, 1, q2);
    m
}

/// Build the GL2 triple `(M, +1, T)` with `T(v_i (x) 1 (x) v_k) = M(cap)(v_i (x) v_k)`.
///
/// Requires `tr(M^T M^-1) = [2]`.
pub fn gl2_standard_triple<S: Scalar>(
    n: usize,
    m: LinearMap<S>,
    v: S,
    eps: f64,
) -> Result<FiberSpec<S>, FiberError> {
    let m_inv = m.inverse(eps).map_err(|_| FiberError::SingularMatrix)?;
    let mut tr = S::zero();
    for (&(i, j), s) in m.entries() {
        tr = tr.add(&s.mul(&m_inv.get(i, j)));
    }
    let target = trace_target_in(Category::Gl2, &v);
    if !tr.approx_eq(&target, eps) {
        return Err(FiberError::TraceConditionFailed);
    }
    let mut t = Tensor3::zero((n, 1, n));
    for (&(i, k), s) in m.entries() {
        t.set(i, 0, k, s.clone());
    }
    FiberSpec::gl2(n, m, 1, t, v)
}

/// The exploded cap matrix on `Sym^2 C^2` in the basis
/// `{v1v1, v1v2, v2v2}`, normalized so the cup is the reshape of its
/// inverse: `M = [[0, 0, q^2 [2]], [0, -1, 0], [[2], 0, 0]]`.
fn sym2_cap<S: Scalar>(v: &S) -> LinearMap<S> {
    let q = v.mul(v);
    let qinv = S::one().div(&q).expect("v nonzero");
    let two = q.add(&qinv); // [2]
    let q2 = q.mul(&q);
    let mut m = LinearMap::zero(3, 3);
    m.set(0, 2, q2.mul(&two));
    m.set(1, 1, S::one().neg());
    m.set(2, 0, two);
    m
}

/// The `s`-scaled trilinear form of the symmetric-square pair: the image of
/// the trivalent vertex is `(1/s) * T_tilde` with
/// `s^2 = (q^2 + q^-2) [2]^2`, and this returns `T_tilde`.
fn sym2_tensor_scaled<S: Scalar>(v: &S) -> Tensor3<S> {
    let q = v.mul(v);
    let qinv = S::one().div(&q).expect("v nonzero");
    let two = q.add(&qinv); // [2]
    let two_sq = two.mul(&two);
    let q2 = q.mul(&q);
    let q2inv = qinv.mul(&qinv);
    let q3 = q2.mul(&q);
    let mut t = Tensor3::zero((3, 3, 3));
    // Derived by exploding the three 2-labeled legs into 1-labeled caps:
    // inner chain cap(a2 b1) cap(b2 c1) and the outer wrap cap(a1 c2).
    t.set(0, 1, 2, q3.mul(&two_sq).neg());
    t.set(0, 2, 1, q.mul(&two_sq));
    t.set(1, 0, 2, q.mul(&two_sq));
    t.set(1, 1, 1, q2.sub(&q2inv));
    t.set(1, 2, 0, q.mul(&two_sq).neg());
    t.set(2, 0, 1, q.mul(&two_sq).neg());
    t.set(2, 1, 0, qinv.mul(&two_sq));
    t
}

/// The SO3 standard pair in the exact, `s^2`-homogeneous form: the stored
/// tensor is `s * T` and the spec records `s^2 = (q^2 + q^-2) [2]^2`, so
/// all even-degree evaluations come out exactly in `Q(v)`.
pub fn sym2_standard_pair<S: Scalar>(v: S) -> Result<FiberSpec<S>, FiberError> {
    let m = sym2_cap(&v);
    let t = sym2_tensor_scaled(&v);
    let q = v.mul(&v);
    let qinv = S::one().div(&q)?;
    let two = q.add(&qinv);
    let scale_sq = q2_plus_q2inv(&v).mul(&two).mul(&two);
    FiberSpec::so3(3, m, t, v, Some(scale_sq))
}

/// Numeric SO3 standard pair at a complex `q`: the tensor is divided by
/// the principal square root `s`, so no scale bookkeeping remains.
pub fn sym2_standard_pair_numeric(
    q: ComplexValue,
    eps: f64,
) -> Result<FiberSpec<ComplexValue>, FiberError> {
    let v = q.sqrt();
    let m = sym2_cap(&v);
    let two = q + q.recip();
    let s2 = (q * q + (q * q).recip()) * two * two;
    if s2.abs() <= eps {
        return Err(FiberError::UndefinedAtQ);
    }
    let s = s2.sqrt();
    let t = sym2_tensor_scaled(&v).scale(&s.recip());
    Ok(FiberSpec::so3(3, m, t, v, None)?.with_eps(eps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fiber::relations::quantum_trace_of;
    use crate::scalar::quantum::trace_target;
    use crate::scalar::FieldElement;

    #[test]
    fn sym2_cap_has_so3_trace() {
        let spec = sym2_standard_pair(FieldElement::v()).unwrap();
        let tr = quantum_trace_of(&spec.m, &spec.m_inv);
        assert_eq!(tr, trace_target(Category::So3));
    }

    #[test]
    fn sl2_standard_has_sl2_trace() {
        let spec = sl2_standard(FieldElement::v()).unwrap();
        let tr = quantum_trace_of(&spec.m, &spec.m_inv);
        assert_eq!(tr, trace_target(Category::Sl2));
    }

    #[test]
    fn gl2_triple_rejects_bad_trace() {
        let v = FieldElement::v();
        let id = LinearMap::identity(2);
        assert!(matches!(
            gl2_standard_triple(2, id, v, 1e-9),
            Err(FiberError::TraceConditionFailed)
        ));
    }
}
