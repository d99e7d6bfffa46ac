//! Sequential quantum search: repeat single measurements on the maximally
//! mixed state until every zero has shown up, then reconstruct the
//! polynomial from the outcomes.

use num::rational::BigRational;
use num::traits::Zero;
use spinroots::companion::{build_companion, run_mea};
use spinroots::measure::{default_max_shots, eigenvalues_tridiagonal, run_search};
use spinroots::parse::parse;
use spinroots::rng::substream;

fn main() {
    let p = parse("(x+2)*(x-1)*(x-2)*(x-4)").unwrap();
    println!("input: {p}");

    let matrix = build_companion(&run_mea(&p, &BigRational::zero()).unwrap());
    let spectrum = eigenvalues_tridiagonal(&matrix, 1e-12);
    println!(
        "spectrum (the subbeam deflections): {:?}",
        spectrum.lines.iter().map(|l| l.value).collect::<Vec<_>>()
    );

    let seed = 2026;
    let budget = default_max_shots(spectrum.dimension());
    let float_p = p.to_float_poly();
    let (result, record) = run_search(
        &spectrum,
        &float_p,
        budget,
        1e-6 * (1.0 + spectrum.enclosure),
        seed,
        &mut substream(seed, 0),
    );

    println!("shot trace (budget {budget}):");
    for shot in &record.shots {
        println!("  shot {:2} -> {:+.12}", shot.shot_index, shot.outcome);
    }
    println!(
        "complete after {} shots: zeros {:?}",
        result.shots_used, result.distinct_outcomes
    );
    println!("reconstructed product: {}", result.reconstructed_poly);
    println!("max |p(zero)| residual: {:.3e}", result.max_residual);
}
