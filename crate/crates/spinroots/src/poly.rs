//! Dense real polynomials with the division sign convention used by the
//! companion-matrix chain: `dividend = quotient * divisor - negated_remainder`.
//!
//! Coefficients are stored in ascending powers (`coeffs[n]` multiplies `x^n`)
//! and the leading stored coefficient is nonzero unless the polynomial is
//! identically zero.

use std::fmt;

use num::rational::BigRational;
use thiserror::Error;

use crate::scalar::Coeff;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("derivative of a degree-0 polynomial")]
    ConstantDerivative,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
}

/// Dense univariate polynomial over one coefficient mode.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<C: Coeff> {
    coeffs: Vec<C>,
}

/// Quotient and negated remainder of one polynomial division:
/// `dividend = quotient * divisor - negated_remainder`.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisionResult<C: Coeff> {
    pub quotient: Polynomial<C>,
    pub negated_remainder: Polynomial<C>,
}

impl<C: Coeff> Polynomial<C> {
    /// Build from ascending-power coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<C>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![C::one()],
        }
    }

    /// The monomial `x`.
    pub fn identity() -> Self {
        Polynomial {
            coeffs: vec![C::zero(), C::one()],
        }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// Expand the monic product over linear factors `(x - r)`.
    pub fn from_roots(roots: &[C]) -> Self {
        let mut p = Self::one();
        for r in roots {
            let factor = Polynomial::new(vec![-r.clone(), C::one()]);
            p = p.mul(&factor);
        }
        p
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `x^n` (zero beyond the stored degree).
    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the trimmed polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map(|c| *c == C::one()).unwrap_or(false)
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    /// Drop every coefficient with `|c| <= tol`, then trim. With `tol = 0`
    /// this only removes exact zeros (the rational-mode behaviour).
    pub fn truncated(&self, tol: &C) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .map(|c| {
                    if c.abs() <= *tol {
                        C::zero()
                    } else {
                        c.clone()
                    }
                })
                .collect(),
        )
    }

    /// Largest coefficient magnitude as a float, 0 for the zero polynomial.
    pub fn max_coeff_magnitude(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.abs().to_float())
            .fold(0.0, f64::max)
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Formal derivative. Degree-0 (and zero) input is a domain error.
    pub fn derivative(&self) -> Result<Self, PolyError> {
        match self.degree() {
            None => Err(PolyError::ZeroPolynomial),
            Some(0) => Err(PolyError::ConstantDerivative),
            Some(_) => Ok(Polynomial::new(
                self.coeffs
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(n, c)| C::from_integer(n as i64) * c.clone())
                    .collect(),
            )),
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic_normalize(&self) -> Result<Self, PolyError> {
        let lead = self.leading().ok_or(PolyError::ZeroPolynomial)?.clone();
        Ok(self.scale(&(C::one() / lead)))
    }

    /// Division with the chain's sign convention:
    /// `self = q * divisor - r`, `deg r < deg divisor`.
    ///
    /// `r` is the negation of the textbook remainder.
    pub fn divide_negated(&self, divisor: &Self) -> Result<DivisionResult<C>, PolyError> {
        let ddeg = divisor.degree().ok_or(PolyError::ZeroDivisor)?;
        let dlead = divisor.leading().unwrap().clone();

        let mut rem = self.coeffs.clone();
        let mut quotient = vec![C::zero(); (self.coeffs.len()).saturating_sub(ddeg)];
        while rem.len() > ddeg {
            let k = rem.len() - 1 - ddeg;
            let factor = rem.last().unwrap().clone() / dlead.clone();
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let updated = rem[k + i].clone() - factor.clone() * dc.clone();
                rem[k + i] = updated;
            }
            rem.pop();
            quotient[k] = factor;
        }
        let textbook_remainder = Polynomial::new(rem);
        Ok(DivisionResult {
            quotient: Polynomial::new(quotient),
            negated_remainder: textbook_remainder.neg(),
        })
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, factor: &C) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .map(|c| c.clone() * factor.clone())
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let updated = out[i + j].clone() + a.clone() * b.clone();
                out[i + j] = updated;
            }
        }
        Polynomial::new(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..exp {
            out = out.mul(self);
        }
        out
    }
}

impl Polynomial<BigRational> {
    /// Lossy conversion into float mode.
    pub fn to_float_poly(&self) -> Polynomial<f64> {
        Polynomial::new(self.coeffs().iter().map(|c| c.to_float()).collect())
    }
}

impl<C: Coeff> fmt::Display for Polynomial<C> {
    /// Descending-power form that the expression parser accepts back,
    /// e.g. `x^3 - 6*x^2 + 11*x - 6` or `2/3*x - 4/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one();
            match (n, unit_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match n {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{n}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn rpoly(coeffs: &[(i64, i64)]) -> Polynomial<BigRational> {
        Polynomial::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = Polynomial::new(vec![1.0, 2.0, 0.0, 0.0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.coeffs(), &[1.0, 2.0]);
        assert!(Polynomial::<f64>::new(vec![0.0, 0.0]).is_zero());
    }

    #[test]
    fn evaluates_by_horner() {
        // x^2 - 1 at 2 -> 3; cubic at its root 1 -> 0; constant term at 0.
        let p = Polynomial::new(vec![-1.0, 0.0, 1.0]);
        assert_eq!(p.evaluate(&2.0), 3.0);
        let cubic = Polynomial::new(vec![-6.0, 11.0, -6.0, 1.0]);
        assert_eq!(cubic.evaluate(&1.0), 0.0);
        assert_eq!(cubic.evaluate(&0.0), -6.0);
    }

    #[test]
    fn derivative_cases() {
        let p = Polynomial::new(vec![-1.0, 0.0, 1.0]);
        assert_eq!(p.derivative().unwrap().coeffs(), &[0.0, 2.0]);
        let cubic = Polynomial::new(vec![-6.0, 11.0, -6.0, 1.0]);
        assert_eq!(cubic.derivative().unwrap().coeffs(), &[11.0, -12.0, 3.0]);
        let constant = Polynomial::new(vec![5.0]);
        assert_eq!(constant.derivative(), Err(PolyError::ConstantDerivative));
    }

    #[test]
    fn monic_normalize_cases() {
        let p = Polynomial::new(vec![-2.0, 0.0, 2.0]);
        assert_eq!(p.monic_normalize().unwrap().coeffs(), &[-1.0, 0.0, 1.0]);
        let monic = Polynomial::new(vec![-6.0, 11.0, -6.0, 1.0]);
        assert_eq!(monic.monic_normalize().unwrap(), monic);
        assert_eq!(
            Polynomial::<f64>::zero().monic_normalize(),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn divide_negated_sign_convention() {
        // x^2 - 1 = x * x - 1  =>  q = x, r = 1
        let p = rpoly(&[(-1, 1), (0, 1), (1, 1)]);
        let x = rpoly(&[(0, 1), (1, 1)]);
        let d = p.divide_negated(&x).unwrap();
        assert_eq!(d.quotient, x);
        assert_eq!(d.negated_remainder, rpoly(&[(1, 1)]));

        // x^2 + 1 = x * x - (-1)  =>  q = x, r = -1
        let p = rpoly(&[(1, 1), (0, 1), (1, 1)]);
        let d = p.divide_negated(&x).unwrap();
        assert_eq!(d.quotient, x);
        assert_eq!(d.negated_remainder, rpoly(&[(-1, 1)]));
    }

    #[test]
    fn divide_negated_chain_step() {
        // One chain division: cubic by x^2 - 4x + 11/3 gives q = x - 2,
        // r = (2/3)x - 4/3. Checked by re-multiplication below.
        let cubic = rpoly(&[(-6, 1), (11, 1), (-6, 1), (1, 1)]);
        let divisor = rpoly(&[(11, 3), (-4, 1), (1, 1)]);
        let d = cubic.divide_negated(&divisor).unwrap();
        assert_eq!(d.quotient, rpoly(&[(-2, 1), (1, 1)]));
        assert_eq!(d.negated_remainder, rpoly(&[(-4, 3), (2, 3)]));
        let rebuilt = d.quotient.mul(&divisor).sub(&d.negated_remainder);
        assert_eq!(rebuilt, cubic);
    }

    #[test]
    fn divide_by_zero_rejected() {
        let p = rpoly(&[(1, 1), (1, 1)]);
        assert_eq!(
            p.divide_negated(&Polynomial::zero()),
            Err(PolyError::ZeroDivisor)
        );
    }

    #[test]
    fn from_roots_expands() {
        let p = Polynomial::from_roots(&[1.0, 2.0, 3.0]);
        assert_eq!(p.coeffs(), &[-6.0, 11.0, -6.0, 1.0]);
        assert_eq!(Polynomial::<f64>::from_roots(&[]).coeffs(), &[1.0]);
        assert_eq!(
            Polynomial::from_roots(&[1.0, 1.0]).coeffs(),
            &[1.0, -2.0, 1.0]
        );
    }

    #[test]
    fn truncates_small_coefficients() {
        let p = Polynomial::new(vec![1.0, 1e-15, 2.0]);
        let t = p.truncated(&1e-12);
        assert_eq!(t.coeffs(), &[1.0, 0.0, 2.0]);
        // exact mode: tolerance zero removes nothing that is not exactly zero
        let q = rpoly(&[(1, 1_000_000_000), (1, 1)]);
        assert_eq!(q.truncated(&rat(0, 1)), q);
    }

    #[test]
    fn displays_parseable_text() {
        let cubic = rpoly(&[(-6, 1), (11, 1), (-6, 1), (1, 1)]);
        assert_eq!(cubic.to_string(), "x^3 - 6*x^2 + 11*x - 6");
        let r = rpoly(&[(-4, 3), (2, 3)]);
        assert_eq!(r.to_string(), "2/3*x - 4/3");
        assert_eq!(Polynomial::<f64>::zero().to_string(), "0");
        let neg = rpoly(&[(0, 1), (-1, 1)]);
        assert_eq!(neg.to_string(), "-x");
    }
}
