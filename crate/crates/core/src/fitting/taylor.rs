// SPDX-License-Identifier: Apache-2.0

use crate::error::{Error, Result};
use crate::model::{bsim_leakage, BsimParams, Line};
use crate::units::Temperature;

/// Central-difference step used for the tangent slope, kelvin.
pub fn taylor_step(t_ref: f64) -> f64 {
    (1e-6 * t_ref).max(1e-3)
}

/// Tangent line of the reference leakage at `t_ref`.
///
/// The slope is a central finite difference, so any reference expression
/// works without a hand-derived derivative. The line passes exactly through
/// `(t_ref, P(t_ref))`.
pub fn taylor_linearize_bsim(p: &BsimParams, t_ref: Temperature) -> Result<Line> {
    let t = t_ref.kelvin();
    let h = taylor_step(t);
    let below = Temperature::from_kelvin(t - h).map_err(|_| {
        Error::domain(format!(
            "cannot linearize at {t} K: difference stencil leaves the positive axis"
        ))
    })?;
    let above = Temperature::from_kelvin(t + h)?;
    let slope = (bsim_leakage(above, p) - bsim_leakage(below, p)) / (2.0 * h);
    Ok(Line::through(t, bsim_leakage(t_ref, p), slope))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::BsimInputs;
    use crate::units::BOLTZMANN_OVER_CHARGE;

    fn k(v: f64) -> Temperature {
        Temperature::from_kelvin(v).unwrap()
    }

    #[test]
    fn exact_at_reference() {
        let p = BsimParams::default();
        for t in [313.15, 318.15, 353.15] {
            let l = taylor_linearize_bsim(&p, k(t)).unwrap();
            assert_eq!(l.eval(k(t)), p.leakage(k(t)));
        }
    }

    #[test]
    fn step_halving_agrees() {
        let p = BsimParams::default();
        for t in [313.15, 318.15, 353.15] {
            let l = taylor_linearize_bsim(&p, k(t)).unwrap();
            let h = taylor_step(t) / 2.0;
            let fd = (p.leakage(k(t + h)) - p.leakage(k(t - h))) / (2.0 * h);
            assert!(((l.slope() - fd) / fd).abs() < 1e-6);
        }
    }

    #[test]
    fn matches_symbolic_derivative() {
        // Without threshold drift:
        //   P  = C·v²·E·B, v = kT/q, E = exp(a/v), B = 1 − exp(−b/v)
        //   dP/dT = C·(k/q)·E·[(2v − a)·B − b·exp(−b/v)]
        let p = BsimParams::new(BsimInputs {
            vth_temp_coeff: 0.0,
            ..Default::default()
        })
        .unwrap();
        let i = p.inputs();
        let a = (i.v_gs - i.vth0 - i.v_off) / i.eta;
        let b = i.v_ds;
        let t = 330.0;
        let v = BOLTZMANN_OVER_CHARGE * t;
        let e = (a / v).exp();
        let bracket = 1.0 - (-b / v).exp();
        let exact = p.norm_constant()
            * BOLTZMANN_OVER_CHARGE
            * e
            * ((2.0 * v - a) * bracket - b * (-b / v).exp());
        let l = taylor_linearize_bsim(&p, k(t)).unwrap();
        assert!(((l.slope() - exact) / exact).abs() < 1e-6);
    }

    #[test]
    fn tiny_reference_is_rejected() {
        let p = BsimParams::default();
        assert!(matches!(
            taylor_linearize_bsim(&p, k(5e-4)),
            Err(Error::Domain(_))
        ));
    }
}
