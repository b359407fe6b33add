//! Quantum integers and the scalar targets of the three web categories.

use super::field::FieldElement;
use super::Scalar;
use crate::diagram::Category;

/// The quantum integer `[k] = (q^k - q^-k)/(q - q^-1)`, expressed in `v`
/// (`q = v^2`), with `[-k] = -[k]` and `[0] = 0`.
pub fn quantum_integer(k: i64) -> FieldElement {
    let sign = if k < 0 {
        FieldElement::from_i64(-1)
    } else {
        FieldElement::one()
    };
    let k = k.unsigned_abs() as i64;
    // [k] = q^{k-1} + q^{k-3} + ... + q^{1-k}
    let mut acc = FieldElement::zero();
    let mut e = -(k - 1);
    while e <= k - 1 {
        acc = &acc + &FieldElement::v_pow(2 * e);
        e += 2;
    }
    &sign * &acc
}

/// The circle value `tr(M^T M^-1)` each category's fiber data must hit:
/// `-[2]` for SL2, `[2]` for GL2 and `[3]` for SO3.
pub fn trace_target(category: Category) -> FieldElement {
    match category {
        Category::Sl2 => -quantum_integer(2),
        Category::Gl2 => quantum_integer(2),
        Category::So3 => quantum_integer(3),
    }
}

/// Same target expressed in an arbitrary scalar via the value of `v`.
pub fn trace_target_in<S: Scalar>(category: Category, v: &S) -> S {
    let q = v.mul(v);
    let qi = S::one().div(&q).expect("v nonzero");
    let two = q.add(&qi);
    match category {
        Category::Sl2 => two.neg(),
        Category::Gl2 => two,
        Category::So3 => {
            // [3] = q^2 + 1 + q^-2
            let q2 = q.mul(&q);
            let q2i = qi.mul(&qi);
            q2.add(&S::one()).add(&q2i)
        }
    }
}

/// `q^2 + q^-2` in an arbitrary scalar; the SO3 category is undefined when
/// this vanishes.
pub fn q2_plus_q2inv<S: Scalar>(v: &S) -> S {
    let q = v.mul(v);
    let q2 = q.mul(&q);
    let q2i = S::one().div(&q2).expect("v nonzero");
    q2.add(&q2i)
}
