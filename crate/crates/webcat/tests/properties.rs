//! Property suites from the module invariants: congruence invariance of
//! the trilinear data, slice transformation behavior, canonical forms of
//! literal blocks, and quantum-integer identities.

use num_rational::BigRational;
use webcat::congruence::*;
use webcat::fiber::Tensor3;
use webcat::linalg::LinearMap;
use webcat::scalar::{quantum_integer, rat, FieldElement};

use webcat::trilinear::{self, classify_cubic, Count, TernaryCubic, TriPoly, AXES};

struct Lcg(u64);

impl Lcg {
    fn next_i64(&mut self, lo: i64, hi: i64) -> i64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        lo + ((self.0 >> 33) as i64).rem_euclid(hi - lo + 1)
    }
}

fn random_invertible(rng: &mut Lcg) -> LinearMap<BigRational> {
    loop {
        let mut m = LinearMap::zero(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                m.set(i, j, rat(rng.next_i64(-3, 3), 1));
            }
        }
        if m.inverse(0.0).is_ok() {
            return m;
        }
    }
}

#[test]
fn trilinear_invariants_are_congruence_invariant() {
    let mut single = Tensor3::zero((3, 3, 3));
    single.set(0, 0, 0, rat(1, 1));
    let tensors = [
        trilinear::diagonal_tensor(),
        trilinear::veronese_cuboid(),
        single,
    ];
    let mut rng = Lcg(0x0dd5_eed5);
    for t in &tensors {
        let base = trilinear::invariants(t).unwrap();
        // 25 random invertible triples split over the three tensors
        for _ in 0..9 {
            let (a, b, c) = (
                random_invertible(&mut rng),
                random_invertible(&mut rng),
                random_invertible(&mut rng),
            );
            let moved = t.congruence(&a, &b, &c);
            let inv = trilinear::invariants(&moved).unwrap();
            assert_eq!(inv, base, "invariants moved under congruence");
        }
    }
}

#[test]
fn slice_cubic_transforms_by_substitution_in_the_x_slot() {
    // changing basis in the x slot substitutes linearly into the slice
    // cubic (up to a scalar), so the classification is unchanged
    let t = trilinear::diagonal_tensor();
    let mut rng = Lcg(0xbead_5eed);
    for _ in 0..5 {
        let a = random_invertible(&mut rng);
        let id = LinearMap::identity(3);
        let moved = t.congruence(&a, &id, &id);
        let c0 = trilinear::slice_cubic(&t, trilinear::Axis::X).unwrap();
        let c1 = trilinear::slice_cubic(&moved, trilinear::Axis::X).unwrap();
        assert_eq!(classify_cubic(&c0).tag, classify_cubic(&c1).tag);
        // and the substituted cubic matches the moved slice directly
        let rows: [[BigRational; 3]; 3] = [
            [a.get(0, 0), a.get(0, 1), a.get(0, 2)],
            [a.get(1, 0), a.get(1, 1), a.get(1, 2)],
            [a.get(2, 0), a.get(2, 1), a.get(2, 2)],
        ];
        let substituted = c1.f.substitute_linear(&rows);
        // moved slice in the new coordinates equals the original up to the
        // same classification
        let back = TernaryCubic::from_tri(&substituted).unwrap();
        assert_eq!(classify_cubic(&back).tag, classify_cubic(&c0).tag);
    }
}

#[test]
fn equivalence_of_smooth_slices_is_inconclusive() {
    // a tensor whose slice cubics are smooth: matched type-9 pairs with
    // equal j are flagged, not asserted
    // twisted circulant slice: det = a1^3 + mu a2^3 + a3^3 - (2 + mu)
    // a1 a2 a3, smooth for the first suitable mu
    let build = |mu: i64| {
        let mut t = Tensor3::zero((3, 3, 3));
        t.set(0, 0, 0, rat(1, 1));
        t.set(1, 0, 1, rat(1, 1));
        t.set(2, 0, 2, rat(1, 1));
        t.set(2, 1, 0, rat(1, 1));
        t.set(0, 1, 1, rat(1, 1));
        t.set(1, 1, 2, rat(1, 1));
        t.set(1, 2, 0, rat(mu, 1));
        t.set(2, 2, 1, rat(1, 1));
        t.set(0, 2, 2, rat(1, 1));
        t
    };
    let t = (2..=5)
        .map(build)
        .find(|t| classify_cubic(&trilinear::slice_cubic(t, trilinear::Axis::X).unwrap()).tag == 9)
        .expect("a smooth twisted circulant exists");
    let c = trilinear::slice_cubic(&t, trilinear::Axis::X).unwrap();
    let ty = classify_cubic(&c);
    assert_eq!(ty.tag, 9, "slice was meant to be smooth, got {:?}", ty);
    match trilinear::equivalent(&t, &t) {
        Err(webcat::error::TrilinearError::Inconclusive) => {}
        other => panic!("expected the inconclusive flag, got {:?}", other),
    }
}

#[test]
fn rank_one_count_agrees_with_both_primes_on_structured_tensors() {
    for t in [trilinear::diagonal_tensor()] {
        for axis in AXES {
            let exact = trilinear::rank_one_count(&t, axis).unwrap();
            if let Count::Finite(n) = exact {
                assert_eq!(trilinear::count_rank_one_mod_p(&t, axis, 101), n);
            }
        }
    }
}

/// The large-prime oracle pass; slow in debug builds, so opt in with
/// `cargo test -- --ignored`.
#[test]
#[ignore]
fn rank_one_count_agrees_at_the_larger_prime() {
    let t = trilinear::diagonal_tensor();
    assert_eq!(
        trilinear::count_rank_one_mod_p(&t, trilinear::Axis::X, 10007),
        3
    );
    let v = trilinear::veronese_cuboid();
    assert_eq!(
        trilinear::count_rank_one_mod_p(&v, trilinear::Axis::X, 10007),
        0
    );
}

#[test]
fn canonical_form_of_every_built_block_is_itself() {
    // Gamma_j for j = 1..5
    for j in 1..=5usize {
        let f = canonical_form_rational(&build_gamma(j)).unwrap();
        assert_eq!(f.blocks, vec![CanonicalBlock::Gamma { j }]);
    }
    // H_{2k}(lambda) with admissible rational lambda
    for (k, lam) in [(1usize, rat(3, 1)), (2, rat(2, 1)), (1, rat(-5, 2))] {
        let f = canonical_form_rational(&build_h(k, &lam)).unwrap();
        assert_eq!(f.blocks.len(), 1);
        match &f.blocks[0] {
            CanonicalBlock::H { k: kk, lambda } => {
                assert_eq!(*kk, k);
                let t = lambda + &lam.recip() * rat(0, 1) + lambda.recip();
                assert_eq!(t, &lam + lam.recip());
            }
            other => panic!("unexpected block {:?}", other),
        }
    }
}

#[test]
fn symbolic_canonical_form_of_the_standard_solution() {
    // S(x) = [[0, x], [-q x, 0]] has cosquare diag(-q, -q^-1), and the
    // canonical form is H_2(-q) for every nonzero rational x
    for x in [rat(1, 1), rat(3, 2), rat(-2, 1)] {
        let xf = FieldElement::from_rational(x);
        let m = LinearMap::from_dense(&[
            vec![FieldElement::zero(), xf.clone()],
            vec![-(&FieldElement::q() * &xf), FieldElement::zero()],
        ]);
        let f = canonical_form_symbolic(&m).unwrap();
        assert_eq!(f.blocks.len(), 1);
        let trace = f.blocks[0].h_trace().expect("an H block");
        assert_eq!(trace, -quantum_integer(2));
    }
    // and S(1) is literally H_2(-q)
    let s1 = LinearMap::from_dense(&[
        vec![FieldElement::zero(), FieldElement::one()],
        vec![-FieldElement::q(), FieldElement::zero()],
    ]);
    assert_eq!(s1, build_h(1, &(-FieldElement::q())));
}

#[test]
fn distinct_solution_families_are_pairwise_noncongruent() {
    use webcat::congruence::{canonical_form_numeric, congruent_numeric};
    use webcat::diagram::Category;
    use webcat::scalar::ComplexValue;
    use webcat::solutions::{enumerate_solutions_numeric, realize_family_numeric};
    let q = ComplexValue::new(1.25, 0.45);
    for n in [2usize, 3, 4] {
        let fams = enumerate_solutions_numeric(Category::Sl2, n, q, 1e-9);
        let mats: Vec<_> = fams.iter().map(realize_family_numeric).collect();
        for m in &mats {
            assert!(canonical_form_numeric(m, 1e-9).is_ok());
        }
        for i in 0..mats.len() {
            for j in i + 1..mats.len() {
                assert!(
                    !congruent_numeric(&mats[i], &mats[j], 1e-9).unwrap(),
                    "families {:?} and {:?} collided",
                    fams[i].structure,
                    fams[j].structure
                );
            }
        }
    }
}

#[test]
fn both_standard_solutions_share_a_canonical_form() {
    // S(x) and S(x)' = [[0, x], [-q^-1 x, 0]] are congruent: their lambda
    // classes -q and -q^-1 coincide up to inversion
    let s1 = LinearMap::from_dense(&[
        vec![FieldElement::zero(), FieldElement::one()],
        vec![-FieldElement::q(), FieldElement::zero()],
    ]);
    let s1p = LinearMap::from_dense(&[
        vec![FieldElement::zero(), FieldElement::one()],
        vec![
            -FieldElement::one() / FieldElement::q(),
            FieldElement::zero(),
        ],
    ]);
    let fa = canonical_form_symbolic(&s1).unwrap();
    let fb = canonical_form_symbolic(&s1p).unwrap();
    assert!(fa.equivalent(&fb, 0.0));
}

#[test]
fn quantum_integer_identities() {
    // [2]^2 = [3] + 1, expanded as Laurent polynomials
    let two = quantum_integer(2);
    let lhs = &two * &two;
    let rhs = &quantum_integer(3) + &FieldElement::one();
    assert_eq!(lhs, rhs);
}

#[test]
fn so3_crossings_are_inverse_exactly_with_the_scaled_tensor() {
    use webcat::diagram::GeneratorName::{CrossNeg, CrossPos};
    use webcat::fiber::sym2_standard_pair;
    let spec = sym2_standard_pair(FieldElement::v()).unwrap();
    let pos = spec.generator_image(CrossPos).unwrap();
    let neg = spec.generator_image(CrossNeg).unwrap();
    assert_eq!(pos.mul_mat(&neg), LinearMap::identity(9));
}

#[test]
fn so3_n3_solution_family_is_h2_of_q_squared() {
    use webcat::diagram::Category;
    use webcat::solutions::{enumerate_solutions_generic, SolutionConstraint};
    let fams = enumerate_solutions_generic(Category::So3, 3);
    assert_eq!(fams.len(), 1);
    assert_eq!(fams[0].structure.gamma_sizes, vec![1]);
    assert_eq!(fams[0].structure.h_half_sizes, vec![1]);
    match &fams[0].constraint {
        SolutionConstraint::ExplicitLambdas { k: 1, linear_coeff } => {
            // lambda^2 + (1 - [3]) lambda + 1 = (lambda - q^2)(lambda - q^-2)
            let expect = &FieldElement::one() - &quantum_integer(3);
            assert_eq!(*linear_coeff, expect);
        }
        other => panic!("unexpected constraint {:?}", other),
    }
}

#[test]
fn equivalence_sees_axis_permutations() {
    // permuting the three tensor slots permutes the invariants; the
    // simultaneous-permutation matching finds it
    let mut t = Tensor3::zero((3, 3, 3));
    // diagonal tensor plus an extra entry to break symmetry between axes
    t.set(0, 0, 0, rat(1, 1));
    t.set(1, 1, 1, rat(1, 1));
    t.set(2, 2, 2, rat(1, 1));
    t.set(0, 1, 2, rat(1, 1));
    let mut swapped = Tensor3::zero((3, 3, 3));
    for (&(i, j, k), v) in t.entries() {
        swapped.set(j, i, k, v.clone());
    }
    assert_eq!(trilinear::equivalent(&t, &swapped), Ok(true));
}

#[test]
fn exact_canonical_form_rejects_unfactorable_cosquares() {
    // a matrix whose cosquare has an irreducible cubic characteristic
    // factor with non-inverse-paired roots is out of exact scope
    use webcat::linalg::LinearMap;
    // companion-style matrix of x^3 - x - 3 twisted into a cosquare via
    // M = upper triangular with a generic tail; search a small seed space
    // for one that trips the unsupported path
    let mut hit = false;
    for a in 1..6i64 {
        let m = LinearMap::from_dense(&[
            vec![rat(1, 1), rat(a, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1), rat(a + 1, 1)],
            vec![rat(a, 1), rat(0, 1), rat(1, 1)],
        ]);
        match canonical_form_rational(&m) {
            Err(webcat::error::CongruenceError::ExactUnsupported(_)) => {
                hit = true;
                break;
            }
            Err(webcat::error::CongruenceError::UnpairedEigenvalues(_)) => {
                hit = true;
                break;
            }
            _ => {}
        }
    }
    assert!(hit, "expected some cosquare outside the exact fragment");
}
