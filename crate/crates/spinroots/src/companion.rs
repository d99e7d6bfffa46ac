//! Hermitean tridiagonal companion matrices via a modified Euclidean
//! algorithm.
//!
//! For a monic degree-N polynomial with only real zeros, repeated division
//! with negated remainders produces N quotient constants `q_k(0)` and N-1
//! nonnegative numbers `d_k`; the real symmetric tridiagonal matrix with
//! diagonal `-q_k(0)` and off-diagonal `sqrt(d_k)` then has the polynomial
//! as its characteristic polynomial. A negative `d_k` certifies that not
//! all zeros are real.

use thiserror::Error;

use crate::poly::Polynomial;
use crate::scalar::Coeff;

#[derive(Debug, Error, PartialEq)]
pub enum MeaError {
    /// Some `d_k < 0`: the input cannot have real zeros only.
    #[error("d_{step} = {value} is negative: not all zeros are real")]
    NegativeD { step: usize, value: f64 },
    /// A quotient of degree != 1 appeared before termination; the input is
    /// outside the supported class (the chain degree dropped by more than
    /// one). Reported, never guessed around.
    #[error("quotient at step {step} has degree {quotient_degree}, expected 1")]
    DegreeAnomaly { step: usize, quotient_degree: usize },
    #[error("chain input must be monic (normalize first)")]
    NotMonic,
    #[error("chain input must have degree >= 1")]
    DegreeTooSmall,
}

/// Full trace of the division chain: polynomials `P_1..P_{N+1}`, the
/// quotient constants `q_k(0)`, the subdiagonal numbers `d_k`, and which
/// steps took the zero-remainder branch.
#[derive(Debug, Clone)]
pub struct MeaChain<C: Coeff> {
    pub chain_polys: Vec<Polynomial<C>>,
    pub quotient_constants: Vec<C>,
    pub subdiagonal_numbers: Vec<C>,
    pub degenerate_flags: Vec<bool>,
    /// Steps where a slightly negative `d_k` was clamped to zero
    /// (float mode only; scale-relative tolerance).
    pub clamped_steps: Vec<usize>,
}

impl<C: Coeff> MeaChain<C> {
    pub fn degree(&self) -> usize {
        self.quotient_constants.len()
    }
}

/// Run the division chain on a monic polynomial.
///
/// `zero_tol` is the coefficient-zero threshold: exactly zero in rational
/// mode, scale-relative in float mode (see [`Coeff::zero_threshold`]).
pub fn run_mea<C: Coeff>(p: &Polynomial<C>, zero_tol: &C) -> Result<MeaChain<C>, MeaError> {
    if !p.is_monic() {
        return Err(MeaError::NotMonic);
    }
    let n = p
        .degree()
        .filter(|&d| d >= 1)
        .ok_or(MeaError::DegreeTooSmall)?;

    let p2 = p
        .derivative()
        .expect("degree >= 1 has a derivative")
        .scale(&(C::one() / C::from_integer(n as i64)));

    let mut chain_polys = vec![p.clone(), p2];
    let mut quotient_constants = Vec::with_capacity(n);
    let mut subdiagonal_numbers = Vec::with_capacity(n.saturating_sub(1));
    let mut degenerate_flags = Vec::new();
    let mut clamped_steps = Vec::new();

    let mut step = 1usize;
    loop {
        let current = &chain_polys[step - 1];
        let next = &chain_polys[step];

        if next.degree() == Some(0) {
            // termination: P_{k+1} = 1 (monic constant), q_k = P_k
            let q = current.clone();
            let qdeg = q.degree().unwrap_or(0);
            if qdeg != 1 {
                return Err(MeaError::DegreeAnomaly {
                    step,
                    quotient_degree: qdeg,
                });
            }
            quotient_constants.push(q.coeff(0));
            break;
        }

        let division = current
            .divide_negated(next)
            .expect("chain polynomials are nonzero");
        let qdeg = division.quotient.degree().unwrap_or(0);
        if qdeg != 1 {
            return Err(MeaError::DegreeAnomaly {
                step,
                quotient_degree: qdeg,
            });
        }
        quotient_constants.push(division.quotient.coeff(0));

        // A leading coefficient in [-tol, 0) would be a spurious negative d
        // caused by rounding of repeated roots: trim it and warn instead.
        let (remainder, dropped_negative) = trim_leading(&division.negated_remainder, zero_tol);
        if dropped_negative {
            clamped_steps.push(step);
        }
        let (d, successor, degenerate) = if remainder.is_zero() {
            (C::zero(), monic_derivative(next), true)
        } else {
            let d = remainder.leading().unwrap().clone();
            if d < C::zero() {
                return Err(MeaError::NegativeD {
                    step,
                    value: d.to_float(),
                });
            }
            let successor = remainder.scale(&(C::one() / d.clone()));
            (d, successor, false)
        };
        subdiagonal_numbers.push(d);
        degenerate_flags.push(degenerate);
        chain_polys.push(successor);
        step += 1;
    }

    Ok(MeaChain {
        chain_polys,
        quotient_constants,
        subdiagonal_numbers,
        degenerate_flags,
        clamped_steps,
    })
}

fn monic_derivative<C: Coeff>(p: &Polynomial<C>) -> Polynomial<C> {
    p.derivative()
        .expect("chain polynomial has degree >= 1")
        .monic_normalize()
        .expect("derivative of a monic polynomial is nonzero")
}

/// Strip leading coefficients with `|c| <= tol`; the flag reports whether a
/// strictly negative one was dropped.
fn trim_leading<C: Coeff>(p: &Polynomial<C>, tol: &C) -> (Polynomial<C>, bool) {
    let mut coeffs = p.coeffs().to_vec();
    let mut dropped_negative = false;
    while let Some(last) = coeffs.last() {
        if last.abs() <= *tol {
            dropped_negative |= *last < C::zero();
            coeffs.pop();
        } else {
            break;
        }
    }
    (Polynomial::new(coeffs), dropped_negative)
}

/// Real symmetric tridiagonal matrix stored as diagonal and off-diagonal
/// vectors; off-diagonal entries are nonnegative by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalSymmetric {
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
}

impl TridiagonalSymmetric {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Self {
        assert!(!diag.is_empty(), "matrix must have dimension >= 1");
        assert_eq!(
            offdiag.len() + 1,
            diag.len(),
            "off-diagonal length mismatch"
        );
        TridiagonalSymmetric { diag, offdiag }
    }

    pub fn dimension(&self) -> usize {
        self.diag.len()
    }

    /// Row-sum eigenvalue enclosure: every eigenvalue has magnitude at most
    /// `max_k (|diag_k| + adjacent off-diagonal magnitudes)`.
    pub fn gershgorin_bound(&self) -> f64 {
        let n = self.dimension();
        (0..n)
            .map(|k| {
                let left = if k > 0 {
                    self.offdiag[k - 1].abs()
                } else {
                    0.0
                };
                let right = if k + 1 < n {
                    self.offdiag[k].abs()
                } else {
                    0.0
                };
                self.diag[k].abs() + left + right
            })
            .fold(0.0, f64::max)
    }

    /// Monic characteristic polynomial value `(-1)^N det(C - x E)` by the
    /// three-term leading-minor recurrence
    /// `D_k = (diag_k - x) D_{k-1} - offdiag_{k-1}^2 D_{k-2}`.
    pub fn char_poly_eval(&self, x: f64) -> f64 {
        let n = self.dimension();
        let mut prev = 1.0; // D_0
        let mut cur = self.diag[0] - x; // D_1
        for k in 1..n {
            let e = self.offdiag[k - 1];
            let next = (self.diag[k] - x) * cur - e * e * prev;
            prev = cur;
            cur = next;
        }
        if n.is_multiple_of(2) {
            cur
        } else {
            -cur
        }
    }

    /// Number of eigenvalues strictly below `x`, counted as sign changes of
    /// the same leading-minor recurrence (a Sturm sequence). Rescales the
    /// running pair to dodge overflow; zeros inherit the previous sign.
    pub fn sturm_count_below(&self, x: f64) -> usize {
        let n = self.dimension();
        let mut changes = 0usize;
        let mut prev_sign = 1i8; // sign of D_0 = 1
        let mut prev = 1.0f64;
        let mut cur = self.diag[0] - x;
        let mut cur_sign = sign_or(cur, prev_sign);
        if cur_sign != prev_sign {
            changes += 1;
        }
        for k in 1..n {
            let e = self.offdiag[k - 1];
            let next = (self.diag[k] - x) * cur - e * e * prev;
            prev = cur;
            cur = next;
            let mag = prev.abs().max(cur.abs());
            if mag > 1e150 || (mag < 1e-150 && mag > 0.0) {
                prev /= mag;
                cur /= mag;
            }
            let next_sign = sign_or(cur, cur_sign);
            prev_sign = cur_sign;
            cur_sign = next_sign;
            if cur_sign != prev_sign {
                changes += 1;
            }
        }
        changes
    }
}

fn sign_or(v: f64, fallback: i8) -> i8 {
    if v > 0.0 {
        1
    } else if v < 0.0 {
        -1
    } else {
        fallback
    }
}

/// Build the companion matrix from a completed chain: diagonal `-q_k(0)`,
/// off-diagonal `sqrt(d_k)`. Square roots are taken in floating point even
/// when the chain is rational.
pub fn build_companion<C: Coeff>(chain: &MeaChain<C>) -> TridiagonalSymmetric {
    let diag = chain
        .quotient_constants
        .iter()
        .map(|q0| -q0.to_float() + 0.0) // +0.0 turns -0.0 into 0.0
        .collect();
    let offdiag = chain
        .subdiagonal_numbers
        .iter()
        .map(|d| d.to_float().max(0.0).sqrt())
        .collect();
    TridiagonalSymmetric::new(diag, offdiag)
}

/// Companion matrix in non-hermitean (Frobenius) form: unit superdiagonal,
/// negated low-order coefficients in the last row.
#[derive(Debug, Clone, PartialEq)]
pub struct FrobeniusCompanion {
    /// `p_0 .. p_{N-1}` of the monic input.
    pub coeffs: Vec<f64>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FrobeniusError {
    #[error("input must be monic")]
    NotMonic,
    #[error("input must have degree >= 1")]
    DegreeTooSmall,
}

impl FrobeniusCompanion {
    pub fn dimension(&self) -> usize {
        self.coeffs.len()
    }

    /// Dense realization: superdiagonal ones, last row `-p_0 .. -p_{N-1}`.
    pub fn dense(&self) -> Vec<Vec<f64>> {
        let n = self.dimension();
        let mut m = vec![vec![0.0; n]; n];
        for i in 0..n.saturating_sub(1) {
            m[i][i + 1] = 1.0;
        }
        for (j, c) in self.coeffs.iter().enumerate() {
            m[n - 1][j] = -c;
        }
        m
    }

    /// Residual of the eigen-action on the Vandermonde vector
    /// `(1, z, .., z^{N-1})`: zero exactly when `z` is a zero of the
    /// polynomial. Used to cross-check root candidates against the
    /// companion structure.
    pub fn eigen_action_residual(&self, z: num::complex::Complex64) -> f64 {
        let n = self.dimension();
        let v: Vec<num::complex::Complex64> = (0..n).map(|k| z.powu(k as u32)).collect();
        let mut worst = 0.0f64;
        let mut scale = 0.0f64;
        for (i, row) in self.dense().iter().enumerate() {
            let acted: num::complex::Complex64 = row.iter().zip(&v).map(|(&a, &x)| a * x).sum();
            let expected = z * v[i];
            worst = worst.max((acted - expected).norm());
            scale = scale.max(expected.norm());
        }
        worst / (1.0 + scale)
    }
}

pub fn build_frobenius<C: Coeff>(p: &Polynomial<C>) -> Result<FrobeniusCompanion, FrobeniusError> {
    if !p.is_monic() {
        return Err(FrobeniusError::NotMonic);
    }
    let n = p
        .degree()
        .filter(|&d| d >= 1)
        .ok_or(FrobeniusError::DegreeTooSmall)?;
    Ok(FrobeniusCompanion {
        coeffs: (0..n).map(|k| p.coeff(k).to_float()).collect(),
    })
}
