//! Interpret a companion matrix as a spin observable: spin component
//! matrices for s = (N-1)/2, the orthonormal multipole basis, and the real
//! expansion coefficients that identify the observable.

use num::rational::BigRational;
use num::traits::Zero;
use spinroots::cmatrix::CMatrix;
use spinroots::companion::{build_companion, run_mea};
use spinroots::multipole::{build_multipole_basis, expand, spin_matrices};
use spinroots::parse::parse;

fn main() {
    let p = parse("(x-1)*(x-2)*(x-3)").unwrap();
    let matrix = build_companion(&run_mea(&p, &BigRational::zero()).unwrap());
    let n = matrix.dimension();

    let spins = spin_matrices(n).unwrap();
    println!("spin quantum number s = {} (dimension {n})", spins.spin);
    println!(
        "sz diagonal: {:?}",
        (0..n).map(|i| spins.sz[(i, i)].re).collect::<Vec<_>>()
    );

    let basis = build_multipole_basis(&spins).unwrap();
    println!(
        "multipole basis: {} hermitean elements, words {:?}",
        basis.len(),
        basis.provenance
    );
    println!("gram defect: {:.3e}", basis.gram_defect());

    let expansion = expand(&matrix, &basis).unwrap();
    println!("expansion coefficients (dropping zeros):");
    for (c, word) in expansion.coefficients.iter().zip(&basis.provenance) {
        if c.abs() > 1e-12 {
            println!("  c[{word}] = {c}");
        }
    }

    let dense = CMatrix::from_tridiagonal(&matrix.diag, &matrix.offdiag);
    let back = expansion.reconstruct();
    println!(
        "reconstruction residual: {:.3e} (Frobenius-relative)",
        back.max_entry_diff(&dense) / dense.frobenius_norm()
    );
    println!(
        "parseval residual: {:.3e}",
        expansion.parseval_residual(&dense)
    );
}
