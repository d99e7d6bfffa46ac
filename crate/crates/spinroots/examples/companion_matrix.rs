//! Build the hermitean tridiagonal companion matrix of a polynomial with
//! the modified Euclidean division chain, and confirm the characteristic
//! polynomial identity at sample points.

use num::rational::BigRational;
use num::traits::Zero;
use spinroots::companion::{build_companion, run_mea};
use spinroots::parse::parse;

fn main() {
    let p = parse("(x-1)*(x-2)*(x-3)").unwrap();
    println!("input: {p}");

    let chain = run_mea(&p, &BigRational::zero()).unwrap();
    println!("chain polynomials:");
    for (k, pk) in chain.chain_polys.iter().enumerate() {
        println!("  P_{} = {pk}", k + 1);
    }
    println!(
        "quotient constants q_k(0): {:?}",
        strings(&chain.quotient_constants)
    );
    println!(
        "subdiagonal numbers d_k:   {:?}",
        strings(&chain.subdiagonal_numbers)
    );

    let matrix = build_companion(&chain);
    println!("companion matrix:");
    println!("  diag    = {:?}", matrix.diag);
    println!("  offdiag = {:?}  (sqrt of d_k)", matrix.offdiag);

    // (-1)^N det(C - x E) reproduces the polynomial
    let float_p = p.to_float_poly();
    println!("characteristic identity:");
    for x in [-1.0, 0.0, 0.5, 1.0, 2.5, 4.0] {
        let lhs = matrix.char_poly_eval(x);
        let rhs = float_p.evaluate(&x);
        println!("  x = {x:4}: charpoly = {lhs:12.6}, p(x) = {rhs:12.6}");
    }

    // a repeated root takes the zero-remainder branch and yields a scaled
    // identity block
    let squared = parse("(x-1)^2").unwrap();
    let chain = run_mea(&squared, &BigRational::zero()).unwrap();
    let matrix = build_companion(&chain);
    println!(
        "(x-1)^2: d = {:?}, diag = {:?}, offdiag = {:?}, degenerate steps = {:?}",
        strings(&chain.subdiagonal_numbers),
        matrix.diag,
        matrix.offdiag,
        chain.degenerate_flags,
    );
}

fn strings(values: &[BigRational]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}
