use webcat::congruence::*;
use webcat::linalg::LinearMap;
use webcat::scalar::ComplexValue;

fn s1(q: ComplexValue) -> LinearMap<ComplexValue> {
    LinearMap::from_dense(&[
        vec![ComplexValue::zero(), ComplexValue::one()],
        vec![-q, ComplexValue::zero()],
    ])
}

#[test]
fn standard_solution_is_h2_of_minus_q() {
    // canonical_form(S(x)) = {H_2(-q)} for generic numeric q, any x != 0
    let samples = [
        ComplexValue::new(1.3, 0.7),
        ComplexValue::new(0.4, -1.1),
        ComplexValue::new(2.0, 0.1),
        ComplexValue::new(-0.8, 0.5),
        ComplexValue::new(0.9, 1.9),
    ];
    for q in samples {
        let f = canonical_form_numeric(&s1(q), 1e-9).unwrap();
        assert_eq!(f.blocks.len(), 1, "q = {}", q);
        match &f.blocks[0] {
            CanonicalBlock::H { k: 1, lambda } => {
                let t = *lambda + lambda.recip();
                let expect = -q + (-q).recip();
                assert!(t.approx_eq(&expect, 1e-8), "q = {}: {} vs {}", q, t, expect);
            }
            other => panic!("expected an H block, got {:?}", other),
        }
        // scaled copies are congruent: S(x) ~ S(1)
        let sx = s1(q).scale(&ComplexValue::new(1.7, -0.3));
        assert!(congruent_numeric(&s1(q), &sx, 1e-9).unwrap());
    }
}

#[test]
fn random_congruence_invariance_numeric() {
    // P^T A P has the same canonical form for random invertible P
    let mut seed = 0x12345678u64;
    let mut rnd = move || {
        seed = seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((seed >> 33) as f64 / (1u64 << 31) as f64) * 10.0 - 5.0
    };
    let a = {
        let g3 = build_gamma::<ComplexValue>(3);
        g3
    };
    let fa = canonical_form_numeric(&a, 1e-9).unwrap();
    for _ in 0..20 {
        let p = loop {
            let cand = LinearMap::from_dense(&[
                vec![
                    ComplexValue::from_f64(rnd()),
                    ComplexValue::from_f64(rnd()),
                    ComplexValue::from_f64(rnd()),
                ],
                vec![
                    ComplexValue::from_f64(rnd()),
                    ComplexValue::from_f64(rnd()),
                    ComplexValue::from_f64(rnd()),
                ],
                vec![
                    ComplexValue::from_f64(rnd()),
                    ComplexValue::from_f64(rnd()),
                    ComplexValue::from_f64(rnd()),
                ],
            ]);
            if cand.inverse(1e-9).is_ok() {
                break cand;
            }
        };
        let conj = p.transpose().mul_mat(&a).mul_mat(&p);
        let fc = canonical_form_numeric(&conj, 1e-9).unwrap();
        assert!(
            fa.equivalent(&fc, 1e-7),
            "Gamma_3 congruence class not preserved"
        );
    }
}
