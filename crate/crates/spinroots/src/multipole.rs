//! Spin observables in a multipole operator basis.
//!
//! For an N-dimensional spin space (spin quantum number s = (N-1)/2) this
//! module builds the three spin component matrices, an orthonormal basis of
//! N^2 hermitean multipole operators (identity plus symmetrized products of
//! spin components, Gram-Schmidt orthonormalized under the inner product
//! `(1/N) tr(A B)`), and the expansion of a real symmetric matrix over that
//! basis. The expansion identifies the matrix with a measurable spin
//! observable.

use std::collections::HashMap;

use num::complex::Complex64;
use thiserror::Error;

use crate::cmatrix::CMatrix;
use crate::companion::TridiagonalSymmetric;

/// Candidates whose residual norm after projection falls below this are
/// linearly dependent on the basis built so far and are discarded.
pub const DEPENDENT_RESIDUAL: f64 = 1e-10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MultipoleError {
    #[error("spin dimension must be >= 1")]
    ZeroDimension,
    #[error("basis incomplete: {found} of {wanted} elements after exhausting candidates")]
    IncompleteBasis { found: usize, wanted: usize },
    #[error("dimension mismatch: matrix is {matrix}, basis is {basis}")]
    DimensionMismatch { matrix: usize, basis: usize },
}

/// The three spin component matrices for one spin, `hbar = 1`.
#[derive(Debug, Clone)]
pub struct SpinTriple {
    pub sx: CMatrix,
    pub sy: CMatrix,
    pub sz: CMatrix,
    pub dimension: usize,
    /// Spin quantum number `(dimension - 1) / 2`.
    pub spin: f64,
}

/// Standard angular momentum matrices in the descending-m eigenbasis of
/// `sz`: `sz = diag(s, s-1, .., -s)`, ladder elements
/// `sqrt(s(s+1) - m(m+1))`.
pub fn spin_matrices(n: usize) -> Result<SpinTriple, MultipoleError> {
    if n == 0 {
        return Err(MultipoleError::ZeroDimension);
    }
    let s = (n as f64 - 1.0) / 2.0;
    let mut sz = CMatrix::zeros(n);
    for i in 0..n {
        sz[(i, i)] = Complex64::new(s - i as f64, 0.0);
    }
    let mut raising = CMatrix::zeros(n);
    for j in 1..n {
        let m = s - j as f64;
        let amp = (s * (s + 1.0) - m * (m + 1.0)).sqrt();
        raising[(j - 1, j)] = Complex64::new(amp, 0.0);
    }
    let mut sx = CMatrix::zeros(n);
    let mut sy = CMatrix::zeros(n);
    for j in 1..n {
        let amp = raising[(j - 1, j)];
        sx[(j - 1, j)] = amp / 2.0;
        sx[(j, j - 1)] = amp / 2.0;
        sy[(j - 1, j)] = amp / Complex64::new(0.0, 2.0);
        sy[(j, j - 1)] = -amp / Complex64::new(0.0, 2.0);
    }
    Ok(SpinTriple {
        sx,
        sy,
        sz,
        dimension: n,
        spin: s,
    })
}

/// Orthonormal hermitean basis of the full operator space: `N^2` matrices,
/// the first one the identity, the rest traceless. `provenance` records the
/// spin-component word each element was orthonormalized from (`"I"` for the
/// identity, then `"x"`, `"y"`, `"z"`, `"xx"`, ..).
#[derive(Debug, Clone)]
pub struct MultipoleBasis {
    pub elements: Vec<CMatrix>,
    pub provenance: Vec<String>,
    pub dimension: usize,
}

impl MultipoleBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Largest deviation of the Gram matrix from the identity.
    pub fn gram_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for (i, a) in self.elements.iter().enumerate() {
            for (j, b) in self.elements.iter().enumerate() {
                let g = a.trace_dot(b);
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((g - Complex64::new(target, 0.0)).norm());
            }
        }
        worst
    }
}

/// Multiset of spin-component letters, counted as (x, y, z) powers.
type Word = (usize, usize, usize);

fn word_string(w: Word) -> String {
    let mut s = String::new();
    s.extend(std::iter::repeat_n('x', w.0));
    s.extend(std::iter::repeat_n('y', w.1));
    s.extend(std::iter::repeat_n('z', w.2));
    s
}

/// Symmetrized product over all orderings of the word, computed by the
/// recursion `Sym(w) = (1/|w|) sum_letter count_letter * S_letter * Sym(w - letter)`
/// with memoization over multisets.
fn symmetrized_product(
    spins: &SpinTriple,
    word: Word,
    memo: &mut HashMap<Word, CMatrix>,
) -> CMatrix {
    if let Some(m) = memo.get(&word) {
        return m.clone();
    }
    let (nx, ny, nz) = word;
    let degree = nx + ny + nz;
    let result = if degree == 0 {
        CMatrix::identity(spins.dimension)
    } else {
        let mut acc = CMatrix::zeros(spins.dimension);
        if nx > 0 {
            let rest = symmetrized_product(spins, (nx - 1, ny, nz), memo);
            acc.add_scaled(Complex64::new(nx as f64, 0.0), &spins.sx.mul(&rest));
        }
        if ny > 0 {
            let rest = symmetrized_product(spins, (nx, ny - 1, nz), memo);
            acc.add_scaled(Complex64::new(ny as f64, 0.0), &spins.sy.mul(&rest));
        }
        if nz > 0 {
            let rest = symmetrized_product(spins, (nx, ny, nz - 1), memo);
            acc.add_scaled(Complex64::new(nz as f64, 0.0), &spins.sz.mul(&rest));
        }
        acc.scale(Complex64::new(1.0 / degree as f64, 0.0));
        acc
    };
    memo.insert(word, result.clone());
    result
}

/// Words of one degree in lexicographic order (`xx`, `xy`, `xz`, `yy`, ..).
fn words_of_degree(degree: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for nx in (0..=degree).rev() {
        for ny in (0..=degree - nx).rev() {
            out.push((nx, ny, degree - nx - ny));
        }
    }
    out
}

/// Build the multipole basis by stabilized Gram-Schmidt over symmetrized
/// spin-component products, ordered by (total degree, lexicographic word).
pub fn build_multipole_basis(spins: &SpinTriple) -> Result<MultipoleBasis, MultipoleError> {
    let n = spins.dimension;
    let wanted = n * n;
    let mut elements: Vec<CMatrix> = vec![CMatrix::identity(n)];
    let mut provenance = vec!["I".to_string()];
    let mut memo = HashMap::new();

    let max_degree = n.saturating_sub(1); // 2s
    'outer: for degree in 1..=max_degree {
        for word in words_of_degree(degree) {
            if elements.len() == wanted {
                break 'outer;
            }
            let mut cand = symmetrized_product(spins, word, &mut memo);
            cand.hermitize();
            let norm = cand.trace_dot(&cand).re.sqrt();
            if norm == 0.0 {
                continue;
            }
            cand.scale(Complex64::new(1.0 / norm, 0.0));

            project_out(&mut cand, &elements);
            let residual = cand.trace_dot(&cand).re.sqrt();
            if residual < DEPENDENT_RESIDUAL {
                continue;
            }
            cand.scale(Complex64::new(1.0 / residual, 0.0));
            // second pass keeps the Gram matrix at machine precision
            project_out(&mut cand, &elements);
            let renorm = cand.trace_dot(&cand).re.sqrt();
            cand.scale(Complex64::new(1.0 / renorm, 0.0));
            cand.hermitize();
            elements.push(cand);
            provenance.push(word_string(word));
        }
    }

    if elements.len() != wanted {
        return Err(MultipoleError::IncompleteBasis {
            found: elements.len(),
            wanted,
        });
    }
    Ok(MultipoleBasis {
        elements,
        provenance,
        dimension: n,
    })
}

/// Subtract the projection onto every basis element. Projection
/// coefficients of hermitean matrices are real; using the real part keeps
/// the candidate exactly hermitean.
fn project_out(cand: &mut CMatrix, elements: &[CMatrix]) {
    for t in elements {
        let coef = t.trace_dot(cand).re;
        cand.add_scaled(Complex64::new(-coef, 0.0), t);
    }
}

/// Real expansion coefficients of a matrix over a multipole basis.
#[derive(Debug, Clone)]
pub struct MultipoleExpansion<'b> {
    pub coefficients: Vec<f64>,
    /// Largest imaginary part dropped when taking the real coefficients.
    pub max_imag_residue: f64,
    pub basis: &'b MultipoleBasis,
}

/// Expand a dense hermitean matrix: `c_nu = (1/N) tr(C T_nu)`.
pub fn expand_matrix<'b>(
    dense: &CMatrix,
    basis: &'b MultipoleBasis,
) -> Result<MultipoleExpansion<'b>, MultipoleError> {
    if dense.dimension() != basis.dimension {
        return Err(MultipoleError::DimensionMismatch {
            matrix: dense.dimension(),
            basis: basis.dimension,
        });
    }
    let mut coefficients = Vec::with_capacity(basis.len());
    let mut max_imag = 0.0f64;
    for t in &basis.elements {
        let c = dense.trace_dot(t);
        max_imag = max_imag.max(c.im.abs());
        coefficients.push(c.re);
    }
    Ok(MultipoleExpansion {
        coefficients,
        max_imag_residue: max_imag,
        basis,
    })
}

/// Expand a tridiagonal companion matrix over the basis.
pub fn expand<'b>(
    matrix: &TridiagonalSymmetric,
    basis: &'b MultipoleBasis,
) -> Result<MultipoleExpansion<'b>, MultipoleError> {
    expand_matrix(
        &CMatrix::from_tridiagonal(&matrix.diag, &matrix.offdiag),
        basis,
    )
}

impl MultipoleExpansion<'_> {
    /// `sum_nu c_nu T_nu`; equals the expanded matrix up to rounding.
    pub fn reconstruct(&self) -> CMatrix {
        let mut acc = CMatrix::zeros(self.basis.dimension);
        for (c, t) in self.coefficients.iter().zip(&self.basis.elements) {
            acc.add_scaled(Complex64::new(*c, 0.0), t);
        }
        acc
    }

    /// Parseval residual: `|sum c_nu^2 - (1/N) tr(C^2)|` relative to the
    /// norm, for the reconstructed matrix.
    pub fn parseval_residual(&self, dense: &CMatrix) -> f64 {
        let coeff_sum: f64 = self.coefficients.iter().map(|c| c * c).sum();
        let trace_sq = dense.trace_dot(dense).re;
        (coeff_sum - trace_sq).abs() / trace_sq.abs().max(1e-300)
    }
}
