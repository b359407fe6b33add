//! Complex polynomial root finding for the numeric Jordan analysis.

use crate::error::CongruenceError;
use crate::scalar::ComplexValue;

/// All roots of a complex polynomial `c_0 + c_1 x + ... + c_n x^n` by the
/// Durand-Kerner (Weierstrass) iteration.
pub fn durand_kerner(coeffs: &[ComplexValue]) -> Result<Vec<ComplexValue>, CongruenceError> {
    let deg = coeffs.iter().rposition(|c| c.abs() > 0.0).unwrap_or(0);
    if deg == 0 {
        return Ok(vec![]);
    }
    let lead = coeffs[deg];
    let monic: Vec<ComplexValue> = coeffs[..=deg].iter().map(|c| *c / lead).collect();
    let eval = |x: ComplexValue| {
        let mut acc = ComplexValue::zero();
        for c in monic.iter().rev() {
            acc = acc * x + *c;
        }
        acc
    };
    // scale-aware starting points on a spiral
    let radius = 1.0 + monic[..deg].iter().map(|c| c.abs()).fold(0.0_f64, f64::max);
    let mut roots: Vec<ComplexValue> = (0..deg)
        .map(|i| {
            let theta = 2.0 * std::f64::consts::PI * (i as f64) / (deg as f64) + 0.4;
            ComplexValue::new(radius * 0.7 * theta.cos(), radius * 0.7 * theta.sin())
        })
        .collect();
    let mut converged = false;
    for _ in 0..500 {
        let mut max_step = 0.0_f64;
        for i in 0..deg {
            let mut denom = ComplexValue::one();
            for j in 0..deg {
                if i != j {
                    denom = denom * (roots[i] - roots[j]);
                }
            }
            if denom.abs() < 1e-300 {
                // perturb coincident iterates
                roots[i] = roots[i] + ComplexValue::new(1e-8, 1e-8);
                continue;
            }
            let step = eval(roots[i]) / denom;
            roots[i] = roots[i] - step;
            max_step = max_step.max(step.abs());
        }
        if max_step < 1e-14 * radius.max(1.0) {
            converged = true;
            break;
        }
    }
    if !converged {
        // one more tolerance band before giving up
        let residual: f64 = roots.iter().map(|&r| eval(r).abs()).fold(0.0, f64::max);
        if residual > 1e-8 {
            return Err(CongruenceError::UnpairedEigenvalues(
                "eigenvalue iteration did not converge".into(),
            ));
        }
    }
    Ok(roots)
}
