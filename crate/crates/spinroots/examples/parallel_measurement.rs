//! The parallel experiment: M independent apparatuses measure the same
//! observable on the product of maximally mixed states, producing (with
//! high probability) every zero at one go.

use num::rational::BigRational;
use num::traits::Zero;
use spinroots::companion::{build_companion, run_mea};
use spinroots::measure::{collect_result, eigenvalues_tridiagonal, run_parallel};
use spinroots::parse::parse;

fn main() {
    let p = parse("(x-1)*(x-2)*(x-3)").unwrap();
    let matrix = build_companion(&run_mea(&p, &BigRational::zero()).unwrap());
    let spectrum = eigenvalues_tridiagonal(&matrix, 1e-12);
    let float_p = p.to_float_poly();

    let m = 20;
    let record = run_parallel(&spectrum, m, 99);
    println!("{m} apparatuses, one shot each:");
    for shot in &record.shots {
        println!(
            "  apparatus {:2} -> {:+.6}",
            shot.apparatus_id, shot.outcome
        );
    }

    let outcomes: Vec<f64> = record.shots.iter().map(|s| s.outcome).collect();
    let result = collect_result(&spectrum, &float_p, &outcomes, 1e-6, outcomes.len());
    println!(
        "zeros found at one go: {:?} (complete: {})",
        result.distinct_outcomes, result.complete
    );

    // how often does one go find everything? theory by inclusion-exclusion:
    // 1 - 3 (2/3)^m + 3 (1/3)^m for three distinct zeros
    let n = 3.0f64;
    let theory = 1.0 - n * (1.0 - 1.0 / n).powi(m as i32) + n * (1.0 / n).powi(m as i32);
    let trials = 10_000;
    let hits = (0..trials)
        .filter(|&trial| {
            let record = run_parallel(&spectrum, m, 1000 + trial as u64);
            let outcomes: Vec<f64> = record.shots.iter().map(|s| s.outcome).collect();
            collect_result(&spectrum, &float_p, &outcomes, 1e-6, outcomes.len()).complete
        })
        .count();
    println!(
        "all-zeros frequency over {trials} trials: {:.4} (theory {:.4})",
        hits as f64 / trials as f64,
        theory
    );
}
