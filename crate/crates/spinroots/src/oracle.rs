//! Independent classical root finder, used only for cross-checking the
//! measurement pipeline.
//!
//! Aberth-Ehrlich simultaneous iteration finds all complex roots at once,
//! which the real-rootedness verdict check needs; deflation-based methods
//! would accumulate error and miss the complex pairs.

use num::complex::Complex64;
use thiserror::Error;

use crate::poly::Polynomial;

pub const MAX_ITERATIONS: usize = 500;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("root finding did not converge")]
    Unconverged,
    #[error("input must have degree >= 1")]
    DegreeTooSmall,
}

/// All complex roots with per-root residuals.
#[derive(Debug, Clone)]
pub struct RootSet {
    /// Sorted by (real part, imaginary part).
    pub roots: Vec<Complex64>,
    /// `|P(root)|` per root, same order.
    pub residuals: Vec<f64>,
    pub converged: bool,
    pub iterations: usize,
}

/// Either every root is real (within tolerance) or a complex pair exists.
#[derive(Debug, Clone, PartialEq)]
pub enum RealRootVerdict {
    AllReal(Vec<f64>),
    ComplexPresent,
}

fn evaluate_complex(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Find all roots of a monic-normalizable polynomial by simultaneous
/// iteration. Starts from a circle of radius `1 + max |p_n|` (the Cauchy
/// bound for the monic input) with deterministic angular perturbations;
/// stops when the largest correction falls below `1e-13 * radius`.
/// Non-convergence is reported through `converged`, never silently.
pub fn find_roots(p: &Polynomial<f64>) -> Result<RootSet, OracleError> {
    let degree = p
        .degree()
        .filter(|&d| d >= 1)
        .ok_or(OracleError::DegreeTooSmall)?;
    let monic = p.monic_normalize().expect("degree >= 1");
    let coeffs = monic.coeffs().to_vec();
    let deriv: Vec<f64> = monic.derivative().expect("degree >= 1").coeffs().to_vec();

    let radius = 1.0 + coeffs[..degree].iter().fold(0.0f64, |m, c| m.max(c.abs()));

    // symmetry-breaking start: evenly spaced angles with a fixed offset and
    // a small per-root shear
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle =
                2.0 * std::f64::consts::PI * k as f64 / degree as f64 + 0.4 + 1e-3 * k as f64;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    let tolerance = 1e-13 * radius;
    let mut converged = false;
    let mut iterations = 0;
    for iter in 1..=MAX_ITERATIONS {
        iterations = iter;
        let mut max_correction = 0.0f64;
        for k in 0..degree {
            let pk = evaluate_complex(&coeffs, z[k]);
            let dk = evaluate_complex(&deriv, z[k]);
            if pk.norm() == 0.0 {
                continue;
            }
            let newton = if dk.norm() == 0.0 {
                // sitting on a critical point: nudge off it
                Complex64::new(tolerance.max(1e-300), tolerance.max(1e-300))
            } else {
                pk / dk
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for j in 0..degree {
                if j != k {
                    let diff = z[k] - z[j];
                    if diff.norm() > 0.0 {
                        repulsion += 1.0 / diff;
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let correction = if denom.norm() == 0.0 {
                newton
            } else {
                newton / denom
            };
            z[k] -= correction;
            max_correction = max_correction.max(correction.norm());
        }
        if !max_correction.is_finite() {
            break;
        }
        if max_correction <= tolerance {
            converged = true;
            break;
        }
    }

    let mut roots = z;
    roots.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let residuals: Vec<f64> = roots
        .iter()
        .map(|&r| evaluate_complex(&coeffs, r).norm())
        .collect();
    Ok(RootSet {
        roots,
        residuals,
        converged,
        iterations,
    })
}

/// Project near-real roots onto the real axis, or report that a genuinely
/// complex root is present. A root counts as real when
/// `|Im| <= tol * (1 + |Re|)`.
pub fn real_roots_only(rs: &RootSet, tol: f64) -> Result<RealRootVerdict, OracleError> {
    if !rs.converged {
        return Err(OracleError::Unconverged);
    }
    let mut reals = Vec::with_capacity(rs.roots.len());
    for r in &rs.roots {
        if r.im.abs() <= tol * (1.0 + r.re.abs()) {
            reals.push(r.re);
        } else {
            return Ok(RealRootVerdict::ComplexPresent);
        }
    }
    reals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(RealRootVerdict::AllReal(reals))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(actual: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(actual.len(), expected.len());
        for (a, e) in actual.iter().zip(expected) {
            assert!((a - e).abs() < tol, "{a} vs {e}");
        }
    }

    #[test]
    fn factored_quadratic() {
        let rs = find_roots(&Polynomial::new(vec![-1.0, 0.0, 1.0])).unwrap();
        assert!(rs.converged);
        assert!(rs.residuals.iter().all(|&r| r <= 1e-12));
        match real_roots_only(&rs, 1e-8).unwrap() {
            RealRootVerdict::AllReal(roots) => assert_close(&roots, &[-1.0, 1.0], 1e-12),
            v => panic!("unexpected verdict {v:?}"),
        }
    }

    #[test]
    fn factored_cubic() {
        let rs = find_roots(&Polynomial::new(vec![-6.0, 11.0, -6.0, 1.0])).unwrap();
        assert!(rs.converged);
        match real_roots_only(&rs, 1e-8).unwrap() {
            RealRootVerdict::AllReal(roots) => assert_close(&roots, &[1.0, 2.0, 3.0], 1e-10),
            v => panic!("unexpected verdict {v:?}"),
        }
    }

    #[test]
    fn imaginary_pair() {
        let rs = find_roots(&Polynomial::new(vec![1.0, 0.0, 1.0])).unwrap();
        assert!(rs.converged);
        let ims: Vec<f64> = rs.roots.iter().map(|r| r.im).collect();
        assert!((ims[0] + 1.0).abs() < 1e-10 || (ims[0] - 1.0).abs() < 1e-10);
        assert_eq!(
            real_roots_only(&rs, 1e-8).unwrap(),
            RealRootVerdict::ComplexPresent
        );
    }

    #[test]
    fn repeated_root_projects_to_double_real() {
        let rs = find_roots(&Polynomial::new(vec![1.0, -2.0, 1.0])).unwrap();
        assert!(rs.converged);
        match real_roots_only(&rs, 1e-5).unwrap() {
            RealRootVerdict::AllReal(roots) => assert_close(&roots, &[1.0, 1.0], 1e-5),
            v => panic!("unexpected verdict {v:?}"),
        }
    }

    #[test]
    fn non_monic_input_is_normalized() {
        let rs = find_roots(&Polynomial::new(vec![-2.0, 0.0, 2.0])).unwrap();
        match real_roots_only(&rs, 1e-8).unwrap() {
            RealRootVerdict::AllReal(roots) => assert_close(&roots, &[-1.0, 1.0], 1e-10),
            v => panic!("unexpected verdict {v:?}"),
        }
    }

    #[test]
    fn unconverged_input_rejected_by_projection() {
        let rs = RootSet {
            roots: vec![],
            residuals: vec![],
            converged: false,
            iterations: MAX_ITERATIONS,
        };
        assert_eq!(
            real_roots_only(&rs, 1e-8).unwrap_err(),
            OracleError::Unconverged
        );
    }

    #[test]
    fn constant_rejected() {
        assert_eq!(
            find_roots(&Polynomial::new(vec![5.0])).unwrap_err(),
            OracleError::DegreeTooSmall
        );
    }

    #[test]
    fn residual_certificate_on_random_factored_polys() {
        use rand::Rng;
        let mut rng = crate::rng::substream(2024, 0);
        for trial in 0..50 {
            let degree = rng.gen_range(2..=12);
            let roots: Vec<f64> = (0..degree).map(|_| rng.gen_range(-5.0..5.0)).collect();
            let p = Polynomial::from_roots(&roots);
            let rs = find_roots(&p).unwrap();
            assert!(rs.converged, "trial {trial}");
            let scale = 1e-9 * (1.0 + p.max_coeff_magnitude()) * degree as f64;
            for r in &rs.residuals {
                assert!(*r <= scale, "trial {trial}: residual {r} > {scale}");
            }
        }
    }
}
