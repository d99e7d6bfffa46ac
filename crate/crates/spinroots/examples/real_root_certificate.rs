//! The division chain doubles as a real-rootedness certificate: a negative
//! d_k proves the polynomial has a complex zero. Cross-checked here against
//! the independent Aberth-Ehrlich root finder.

use num::rational::BigRational;
use num::traits::Zero;
use spinroots::companion::{run_mea, MeaError};
use spinroots::oracle::{find_roots, real_roots_only, RealRootVerdict};
use spinroots::parse::parse;

fn main() {
    for text in [
        "x^2 - 1",
        "x^2 + 1",
        "(x-1)*(x-2)*(x-3)",
        "x^3 - x^2 + x - 1",
        "x^4 - x^2 + 1",
    ] {
        let p = parse(text).unwrap();
        let chain_verdict = match run_mea(&p, &BigRational::zero()) {
            Ok(chain) => format!(
                "all zeros real (d = {:?})",
                chain
                    .subdiagonal_numbers
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
            ),
            Err(MeaError::NegativeD { step, value }) => {
                format!("NOT all zeros real (d_{step} = {value})")
            }
            Err(e) => format!("outside supported class ({e})"),
        };

        let oracle = find_roots(&p.to_float_poly()).unwrap();
        let oracle_verdict = match real_roots_only(&oracle, 1e-8).unwrap() {
            RealRootVerdict::AllReal(roots) => format!("all real: {roots:?}"),
            RealRootVerdict::ComplexPresent => "complex roots present".to_string(),
        };

        println!("{text}");
        println!("  chain : {chain_verdict}");
        println!("  oracle: {oracle_verdict}");
    }
}
