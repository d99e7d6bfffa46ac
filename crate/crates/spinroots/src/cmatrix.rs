//! Minimal dense complex matrices, flat row-major. Dimensions here are tiny
//! (the spin space of one particle), so no sparsity or blocking.

use num::complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Dense realization of a real symmetric tridiagonal matrix.
    pub fn from_tridiagonal(diag: &[f64], offdiag: &[f64]) -> Self {
        let n = diag.len();
        assert_eq!(offdiag.len() + 1, n);
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(diag[i], 0.0);
        }
        for i in 0..n - 1 {
            m[(i, i + 1)] = Complex64::new(offdiag[i], 0.0);
            m[(i + 1, i)] = Complex64::new(offdiag[i], 0.0);
        }
        m
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// `self + factor * other`, in place.
    pub fn add_scaled(&mut self, factor: Complex64, other: &Self) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += factor * b;
        }
    }

    pub fn scale(&mut self, factor: Complex64) {
        for a in self.data.iter_mut() {
            *a *= factor;
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    /// Trace inner product `(1/N) tr(A B)` via `sum_ij A_ij B_ji`.
    pub fn trace_dot(&self, other: &Self) -> Complex64 {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                acc += self[(i, j)] * other[(j, i)];
            }
        }
        acc / n as f64
    }

    /// Replace by `(A + A^dagger)/2`. For matrices that are hermitean up to
    /// rounding this removes the anti-hermitean noise exactly.
    pub fn hermitize(&mut self) {
        let n = self.n;
        for i in 0..n {
            for j in i..n {
                let avg = (self[(i, j)] + self[(j, i)].conj()) / 2.0;
                self[(i, j)] = avg;
                self[(j, i)] = avg.conj();
            }
        }
    }

    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_entry_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.n, other.n);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_entry_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}
