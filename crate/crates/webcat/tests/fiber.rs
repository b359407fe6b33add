//! Evaluation and relation checks for the fiber specs of all three
//! categories.

use webcat::diagram::{Category, GeneratorName::*, LayeredDiagram, ObjectWord};
use webcat::fiber::*;
use webcat::linalg::LinearMap;
use webcat::scalar::{quantum_integer, ComplexValue, FieldElement};

fn xs(
    cat: Category,
    k: usize,
    layers: Vec<(usize, webcat::diagram::GeneratorName)>,
) -> LayeredDiagram {
    LayeredDiagram::new(ObjectWord::x_power(cat, k), layers)
}

#[test]
fn sl2_circle_is_minus_two() {
    let spec = sl2_standard(FieldElement::v()).unwrap();
    let circle = xs(Category::Sl2, 0, vec![(0, Cup), (0, Cap)]);
    let val = spec.evaluate(&circle).unwrap();
    assert_eq!(val.get(0, 0), -quantum_integer(2));
}

#[test]
fn sl2_standard_cap_row() {
    // cap matrix of S(1) is the 1x4 row (0, 1, -q, 0)
    let spec = sl2_standard(FieldElement::v()).unwrap();
    let cap = spec.generator_image(Cap).unwrap();
    assert_eq!(cap.rows, 1);
    assert_eq!(cap.cols, 4);
    assert_eq!(cap.get(0, 1), FieldElement::one());
    assert_eq!(cap.get(0, 2), -FieldElement::q());
    assert!(cap.get(0, 0).is_zero() && cap.get(0, 3).is_zero());
}

#[test]
fn so3_monogon_and_theta() {
    let spec = sym2_standard_pair(FieldElement::v()).unwrap();
    let monogon = xs(Category::So3, 1, vec![(0, Cup), (0, Tup)]);
    assert!(spec.evaluate(&monogon).unwrap().is_zero(0.0));
    let theta = xs(Category::So3, 0, vec![(0, Tdown), (0, Tup)]);
    assert_eq!(
        spec.evaluate(&theta).unwrap().get(0, 0),
        -quantum_integer(3)
    );
}

#[test]
fn all_standard_specs_pass_their_relations_exactly() {
    let sl2 = sl2_standard(FieldElement::v()).unwrap();
    assert!(check_all_relations(&sl2).all_pass());
    let so3 = sym2_standard_pair(FieldElement::v()).unwrap();
    assert!(check_all_relations(&so3).all_pass());
    let v = FieldElement::v();
    let gl2 = gl2_standard_triple(2, gl2_standard_bilinear(&v), v, 1e-9).unwrap();
    assert!(check_all_relations(&gl2).all_pass());
}

#[test]
fn standard_specs_pass_their_relations_numerically() {
    let q = ComplexValue::new(1.15, -0.4);
    let vq = q.sqrt();
    let sl2 = sl2_standard(vq).unwrap();
    assert!(check_all_relations(&sl2).all_pass());
    let gl2 = gl2_standard_triple(2, gl2_standard_bilinear(&vq), vq, 1e-9).unwrap();
    assert!(check_all_relations(&gl2).all_pass());
    // a larger GL2 triple: n = 3 with the padded bilinear solution
    let w = webcat::solutions::existence_witness_numeric(Category::Gl2, 3, q).unwrap();
    let gl2_big = gl2_standard_triple(3, w, vq, 1e-9).unwrap();
    assert!(check_all_relations(&gl2_big).all_pass());
}

#[test]
fn trace_conditions_of_the_standard_specs() {
    let sl2 = sl2_standard(FieldElement::v()).unwrap();
    let r = check_trace_condition(&sl2);
    assert!(r.pass);
    assert_eq!(r.computed, -quantum_integer(2));

    // identity matrix fails at generic q but passes at q = -1
    let id = LinearMap::identity(2);
    let generic = FiberSpec::sl2(2, id.clone(), FieldElement::v()).unwrap();
    assert!(!check_trace_condition(&generic).pass);
    let qm1 = ComplexValue::new(-1.0, 0.0);
    let vm1 = qm1.sqrt();
    let idc = LinearMap::<ComplexValue>::identity(2);
    let numeric = FiberSpec::sl2(2, idc, vm1).unwrap();
    assert!(check_trace_condition(&numeric).pass);
}

#[test]
fn sl2_spec_with_identity_fails_circle_at_generic_q() {
    let id = LinearMap::<FieldElement>::identity(2);
    let spec = FiberSpec::sl2(2, id, FieldElement::v()).unwrap();
    let report = check_all_relations(&spec);
    let circle = report.results.iter().find(|r| r.name == "circle").unwrap();
    assert!(!circle.pass);
    // zigzags still hold for any invertible M
    assert!(report
        .results
        .iter()
        .filter(|r| r.name.starts_with("zigzag"))
        .all(|r| r.pass));
}

#[test]
fn evaluation_is_functorial() {
    let spec = sl2_standard(FieldElement::v()).unwrap();
    let cup = xs(Category::Sl2, 0, vec![(0, Cup)]);
    let cap = xs(Category::Sl2, 2, vec![(0, Cap)]);
    let circle = cup.then(&cap).unwrap();
    let lhs = spec.evaluate(&circle).unwrap();
    let rhs = spec
        .evaluate(&cap)
        .unwrap()
        .mul_mat(&spec.evaluate(&cup).unwrap());
    assert_eq!(lhs, rhs);

    let t = cup.tensor(&cap).unwrap();
    let lhs = spec.evaluate(&t).unwrap();
    let rhs = spec
        .evaluate(&cup)
        .unwrap()
        .kron(&spec.evaluate(&cap).unwrap());
    assert_eq!(lhs, rhs);
}

#[test]
fn gl2_bent_maps_are_mutually_inverse() {
    let v = FieldElement::v();
    let spec = gl2_standard_triple(2, gl2_standard_bilinear(&v), v, 1e-9).unwrap();
    let (t_l, t_up) = bent_maps(&spec).unwrap();
    assert_eq!(t_up.mul_mat(&t_l), LinearMap::identity(2));
}

#[test]
fn zero_tensor_has_zero_bent_maps() {
    let v = FieldElement::v();
    let spec =
        FiberSpec::gl2(2, gl2_standard_bilinear(&v), 1, Tensor3::zero((2, 1, 2)), v).unwrap();
    let (t_l, t_up) = bent_maps(&spec).unwrap();
    assert!(t_l.is_zero(0.0));
    assert!(t_up.is_zero(0.0));
}

#[test]
fn so3_h_equals_i_operator_identity_exact() {
    // (id (x) T_l) o (T^l (x) id) = T^l T_l + c id - c cup cap, exactly in
    // the s^2-homogeneous formulation
    let spec = sym2_standard_pair(FieldElement::v()).unwrap();
    let report = check_all_relations(&spec);
    let h = report.results.iter().find(|r| r.name == "h_eq_i").unwrap();
    assert!(h.pass);
}

#[test]
fn flip_test_standard_q_one_only() {
    // q = 1, n = 2, standard: the crossing is the flip
    let spec1 = sl2_standard(ComplexValue::one()).unwrap();
    assert!(flip_test(&spec1).unwrap());
    // generic sample: not the flip
    let spec2 = sl2_standard(ComplexValue::new(1.2, 0.4).sqrt()).unwrap();
    assert!(!flip_test(&spec2).unwrap());
    // q = -1: not the flip
    let spec3 = sl2_standard(ComplexValue::new(-1.0, 0.0).sqrt()).unwrap();
    assert!(!flip_test(&spec3).unwrap());
    // flip implies involution
    let c = crossing_matrix(&spec1).unwrap();
    assert!(c.mul_mat(&c).approx_eq(&LinearMap::identity(4), 1e-9));
}

#[test]
fn braid_relations_numeric() {
    // Reidemeister II and Yang-Baxter at generic samples
    let samples = [
        ComplexValue::new(1.3, 0.4),
        ComplexValue::new(0.8, -0.2),
        ComplexValue::new(2.1, 0.05),
        ComplexValue::new(0.6, 0.9),
        ComplexValue::new(1.05, -0.65),
    ];
    for q in samples {
        let sl2 = sl2_standard(q.sqrt()).unwrap();
        braid_checks(&sl2, 2, 1e-8);
        let so3 = sym2_standard_pair_numeric(q, 1e-9).unwrap();
        braid_checks(&so3, 3, 1e-7);
    }
}

fn braid_checks(spec: &FiberSpec<ComplexValue>, n: usize, eps: f64) {
    let pos = spec.generator_image(CrossPos).unwrap();
    let neg = spec.generator_image(CrossNeg).unwrap();
    let id = LinearMap::identity(n * n);
    assert!(pos.mul_mat(&neg).approx_eq(&id, eps), "R2 failed");
    let idn = LinearMap::identity(n);
    let a = pos.kron(&idn);
    let b = idn.kron(&pos);
    let lhs = a.mul_mat(&b).mul_mat(&a);
    let rhs = b.mul_mat(&a).mul_mat(&b);
    assert!(lhs.approx_eq(&rhs, eps), "Yang-Baxter failed");
}

#[test]
fn faithfulness_small_cases() {
    let sl2 = sl2_standard(FieldElement::v()).unwrap();
    // single identity diagram at (1, 1)
    assert!(faithfulness_check(&sl2, 1, 1).unwrap());
    // 5 matchings at (3, 3), exact rank over Q(v)
    assert!(faithfulness_check(&sl2, 3, 3).unwrap());
}

#[test]
fn so3_faithfulness_at_3_3() {
    let so3 = sym2_standard_pair(FieldElement::v()).unwrap();
    assert!(faithfulness_check(&so3, 3, 3).unwrap());
}

#[test]
fn isotopy_invariance_of_evaluation() {
    // two presentations of the identity strand evaluate equally
    let spec = sym2_standard_pair(FieldElement::v()).unwrap();
    let plain = xs(Category::So3, 1, vec![]);
    let zig = xs(Category::So3, 1, vec![(1, Cup), (0, Cap)]);
    let zag = xs(Category::So3, 1, vec![(0, Cup), (1, Cap)]);
    let a = spec.evaluate(&plain).unwrap();
    assert_eq!(a, spec.evaluate(&zig).unwrap());
    assert_eq!(a, spec.evaluate(&zag).unwrap());
}

#[test]
fn dimension_cap_is_enforced() {
    let mut spec = sl2_standard(FieldElement::v()).unwrap();
    spec.dim_cap = 8;
    let wide = xs(Category::Sl2, 4, vec![]);
    assert!(matches!(
        spec.evaluate(&wide),
        Err(webcat::error::FiberError::DimensionCap(16, 8))
    ));
}

#[test]
fn so3_spec_is_undefined_at_the_eighth_root() {
    // q = e^{i pi / 4} makes q^2 + q^-2 vanish
    let q = ComplexValue::new(
        (std::f64::consts::PI / 4.0).cos(),
        (std::f64::consts::PI / 4.0).sin(),
    );
    assert!(matches!(
        sym2_standard_pair_numeric(q, 1e-9),
        Err(webcat::error::FiberError::UndefinedAtQ)
    ));
}

#[test]
fn gl2_crossing_reidemeister_two() {
    let v = ComplexValue::new(1.7, 0.3).sqrt();
    let spec = gl2_standard_triple(2, gl2_standard_bilinear(&v), v, 1e-9).unwrap();
    let pos = spec.generator_image(CrossPos).unwrap();
    let neg = spec.generator_image(CrossNeg).unwrap();
    assert!(pos.mul_mat(&neg).approx_eq(&LinearMap::identity(4), 1e-8));
}
