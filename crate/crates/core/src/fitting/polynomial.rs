// SPDX-License-Identifier: Apache-2.0

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::fitting::{check_samples, SamplePoint};
use crate::model::PolynomialModel;

/// Least-squares polynomial of the given degree.
///
/// The sample range is mapped onto `[−1, 1]` before building the
/// Vandermonde matrix, and the model keeps that transform so evaluation
/// reproduces the fitted values. Solved by Householder QR.
pub fn poly_fit(samples: &[SamplePoint], degree: usize) -> Result<PolynomialModel> {
    if degree == 0 {
        return Err(Error::domain("polynomial degree must be at least 1"));
    }
    check_samples(
        samples,
        degree + 1,
        &format!("degree-{degree} polynomial fit"),
    )?;

    let (lo, hi) = samples
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| {
            (lo.min(s.t), hi.max(s.t))
        });
    let center = 0.5 * (lo + hi);
    let scale = 0.5 * (hi - lo);

    let n = degree + 1;
    let a = DMatrix::from_fn(samples.len(), n, |r, c| {
        ((samples[r].t - center) / scale).powi(c as i32)
    });
    let b = DVector::from_iterator(samples.len(), samples.iter().map(|s| s.p));

    let qr = a.qr();
    let qtb = qr.q().transpose() * b;
    let coeffs = qr
        .r()
        .solve_upper_triangular(&qtb)
        .ok_or_else(|| Error::degenerate("polynomial design matrix is rank deficient"))?;

    PolynomialModel::with_transform(coeffs.iter().copied().collect(), center, scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fitting::training_sse;
    use crate::units::Temperature;

    fn k(v: f64) -> Temperature {
        Temperature::from_kelvin(v).unwrap()
    }

    fn cubic(t: f64) -> f64 {
        let x = t - 320.0;
        0.1 + 2e-3 * x - 4e-5 * x * x + 3e-7 * x * x * x
    }

    #[test]
    fn recovers_exact_cubic() {
        let s: Vec<_> = (0..41)
            .map(|i| {
                let t = 300.0 + i as f64;
                SamplePoint::new(t, cubic(t)).unwrap()
            })
            .collect();
        let m = poly_fit(&s, 3).unwrap();
        for s in &s {
            assert!((m.eval(k(s.t)) - s.p).abs() / s.p.abs() < 1e-10);
        }
        // coefficients in the fitted variable x = (T − 320)/20
        let c = m.coefficients();
        let expect = [0.1, 2e-3 * 20.0, -4e-5 * 400.0, 3e-7 * 8000.0];
        for (a, b) in c.iter().zip(expect) {
            assert!((a - b).abs() < 1e-12, "{c:?}");
        }
    }

    #[test]
    fn interpolates_minimal_sample() {
        let s: Vec<_> = [300.0, 305.0, 317.0, 330.0, 342.0]
            .iter()
            .map(|&t| SamplePoint::new(t, (t / 40.0).sin()).unwrap())
            .collect();
        let m = poly_fit(&s, 4).unwrap();
        for s in &s {
            assert!((m.eval(k(s.t)) - s.p).abs() < 1e-12);
        }
    }

    #[test]
    fn insufficient_samples() {
        let s: Vec<_> = [300.0, 310.0, 310.0, 320.0]
            .iter()
            .map(|&t| SamplePoint::new(t, 1.0).unwrap())
            .collect();
        assert!(matches!(poly_fit(&s, 3), Err(Error::Degenerate(_))));
        assert!(poly_fit(&s, 2).is_ok());
        assert!(poly_fit(&s, 0).is_err());
    }

    #[test]
    fn nested_degrees_do_not_increase_sse() {
        let s: Vec<_> = (0..60)
            .map(|i| {
                let t = 313.15 + 0.7 * i as f64;
                SamplePoint::new(t, (0.04 * (t - 318.15)).exp() * 0.1).unwrap()
            })
            .collect();
        let mut prev = f64::INFINITY;
        for d in 1..=5 {
            let m = poly_fit(&s, d).unwrap();
            let e = training_sse(&s, |t| m.eval(t));
            assert!(e <= prev * (1.0 + 1e-9), "degree {d}: {e} > {prev}");
            prev = e;
        }
    }
}
