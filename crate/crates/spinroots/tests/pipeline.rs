//! Cross-module invariants of the full pipeline, on seeded random corpora.

mod corpus;

use num::rational::BigRational;
use num::traits::Zero;
use spinroots::cli::{
    cmd_companion, cmd_measure, cmd_multipole, cmd_verify, ExperimentConfig, OutputFormat,
    PolySource, EXIT_NOT_REAL, EXIT_OK, EXIT_USAGE,
};
use spinroots::cmatrix::CMatrix;
use spinroots::companion::{build_companion, run_mea};
use spinroots::measure::{
    eigenvalues_tridiagonal, measure_once, reconstruct_product, MixedState, Spectrum,
};
use spinroots::multipole::{build_multipole_basis, expand_matrix, spin_matrices};
use spinroots::oracle::{find_roots, real_roots_only, RealRootVerdict};
use spinroots::poly::Polynomial;
use spinroots::rng::substream;

use corpus::{max_root_magnitude, real_rooted};

#[test]
fn gershgorin_contains_the_spectrum() {
    let mut rng = substream(1001, 0);
    for i in 0..50 {
        let degree = 2 + (i % 11);
        let (_, p) = real_rooted(&mut rng, degree);
        let matrix = build_companion(&run_mea(&p, &BigRational::zero()).unwrap());
        let bound = matrix.gershgorin_bound();
        let spec = eigenvalues_tridiagonal(&matrix, 1e-12);
        for ev in &spec.eigenvalues {
            assert!(
                ev.abs() <= bound + 1e-9 * (1.0 + bound),
                "eigenvalue {ev} outside Gershgorin bound {bound}"
            );
        }
    }
}

#[test]
fn translation_shifts_the_diagonal_exactly() {
    let mut rng = substream(1002, 0);
    for i in 0..20 {
        let degree = 2 + (i % 8);
        let (roots, p) = real_rooted(&mut rng, degree);
        let shift = corpus::grid_value(&mut rng, -3000, 3000);
        let shifted_roots: Vec<BigRational> =
            roots.iter().map(|r| r.clone() + shift.clone()).collect();
        let shifted = Polynomial::from_roots(&shifted_roots);

        let chain = run_mea(&p, &BigRational::zero()).unwrap();
        let shifted_chain = run_mea(&shifted, &BigRational::zero()).unwrap();

        // subdiagonal data is translation invariant, exactly
        assert_eq!(chain.subdiagonal_numbers, shifted_chain.subdiagonal_numbers);
        // diagonal entries -q_k(0) all move by +shift, exactly
        for (q, qs) in chain
            .quotient_constants
            .iter()
            .zip(&shifted_chain.quotient_constants)
        {
            assert_eq!(-qs.clone(), -q.clone() + shift.clone());
        }
    }
}

#[test]
fn spectrum_agrees_with_the_oracle() {
    let mut rng = substream(1003, 0);
    for i in 0..50 {
        let degree = 2 + (i % 11);
        let (_, p) = real_rooted(&mut rng, degree);
        let spec = eigenvalues_tridiagonal(
            &build_companion(&run_mea(&p, &BigRational::zero()).unwrap()),
            1e-12,
        );
        let rs = find_roots(&p.to_float_poly()).unwrap();
        assert!(rs.converged);
        let roots = match real_roots_only(&rs, 1e-8).unwrap() {
            RealRootVerdict::AllReal(roots) => roots,
            RealRootVerdict::ComplexPresent => panic!("real-rooted corpus"),
        };
        let max_root = roots.iter().fold(0.0f64, |m, r| m.max(r.abs()));
        let tol = 1e-8 * (1.0 + max_root);
        assert_eq!(spec.eigenvalues.len(), roots.len());
        for (ev, root) in spec.eigenvalues.iter().zip(&roots) {
            assert!(
                (ev - root).abs() <= tol,
                "poly {i}: eigenvalue {ev} vs oracle root {root}"
            );
        }
    }
}

#[test]
fn product_round_trip_on_low_degree_corpus() {
    let mut rng = substream(1004, 0);
    for i in 0..60 {
        let degree = 2 + (i % 7); // up to 8
        let (_, p) = real_rooted(&mut rng, degree);
        let spec = eigenvalues_tridiagonal(
            &build_companion(&run_mea(&p, &BigRational::zero()).unwrap()),
            1e-12,
        );
        let rebuilt = reconstruct_product(&spec.eigenvalues);
        let monic = p.to_float_poly();
        for (k, c) in monic.coeffs().iter().enumerate() {
            assert!(
                (rebuilt.coeff(k) - c).abs() <= 1e-6,
                "poly {i}: coefficient {k}: {} vs {c}",
                rebuilt.coeff(k)
            );
        }
    }
}

#[test]
fn apparatus_substreams_are_uncorrelated() {
    let spec = Spectrum::from_values(&[1.0, 2.0, 3.0], 0.0);
    let state = MixedState::new(3);
    let shots = 10_000;
    let seqs: Vec<Vec<f64>> = (0..4u64)
        .map(|id| {
            let mut rng = substream(902, id);
            (0..shots)
                .map(|_| measure_once(&spec, &state, &mut rng).unwrap())
                .collect()
        })
        .collect();
    for i in 0..seqs.len() {
        for j in i + 1..seqs.len() {
            let r = correlation(&seqs[i], &seqs[j]);
            assert!(
                r.abs() <= 0.02,
                "apparatus pair ({i},{j}): |correlation| {r} > 0.02"
            );
        }
    }
}

fn correlation(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len() as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let cov: f64 = a.iter().zip(b).map(|(x, y)| (x - ma) * (y - mb)).sum();
    let va: f64 = a.iter().map(|x| (x - ma).powi(2)).sum();
    let vb: f64 = b.iter().map(|y| (y - mb).powi(2)).sum();
    cov / (va * vb).sqrt()
}

#[test]
fn expansion_coefficients_of_real_symmetric_matrices_are_real() {
    let mut rng = substream(1006, 0);
    use rand::Rng;
    for n in 2..=8usize {
        let basis = build_multipole_basis(&spin_matrices(n).unwrap()).unwrap();
        let mut m = CMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let v: f64 = rng.gen_range(-3.0..3.0);
                m[(i, j)] = num::complex::Complex64::new(v, 0.0);
                m[(j, i)] = num::complex::Complex64::new(v, 0.0);
            }
        }
        let e = expand_matrix(&m, &basis).unwrap();
        assert!(e.max_imag_residue <= 1e-12, "n={n}: {}", e.max_imag_residue);
    }
}

#[test]
fn float_chain_tracks_the_exact_chain() {
    let mut rng = substream(1007, 0);
    for i in 0..30 {
        let degree = 2 + (i % 5); // well-conditioned range
        let (_, p) = real_rooted(&mut rng, degree);
        let exact = run_mea(&p, &BigRational::zero()).unwrap();
        let fp = p.to_float_poly();
        let tol = 1e-12 * fp.max_coeff_magnitude().max(1.0);
        let float = run_mea(&fp, &tol).unwrap();
        assert_eq!(
            exact.subdiagonal_numbers.len(),
            float.subdiagonal_numbers.len()
        );
        use num::traits::ToPrimitive;
        for (de, df) in exact
            .subdiagonal_numbers
            .iter()
            .zip(&float.subdiagonal_numbers)
        {
            let de = de.to_f64().unwrap();
            assert!(
                (de - df).abs() <= 1e-6 * (1.0 + de.abs()),
                "poly {i}: d {de} vs {df}"
            );
        }
        for (qe, qf) in exact
            .quotient_constants
            .iter()
            .zip(&float.quotient_constants)
        {
            let qe = qe.to_f64().unwrap();
            assert!(
                (qe - qf).abs() <= 1e-6 * (1.0 + qe.abs()),
                "poly {i}: q0 {qe} vs {qf}"
            );
        }
    }
}

#[test]
fn exit_code_contract() {
    let ok = ExperimentConfig::new(PolySource::Coefficients("1,-6,11,-6".into()));
    assert_eq!(cmd_companion(&ok).exit_code, EXIT_OK);
    assert_eq!(cmd_verify(&ok).exit_code, EXIT_OK);

    let complex = ExperimentConfig::new(PolySource::Expression("x^2+1".into()));
    assert_eq!(cmd_companion(&complex).exit_code, EXIT_NOT_REAL);
    assert_eq!(cmd_verify(&complex).exit_code, EXIT_NOT_REAL);

    let garbage = ExperimentConfig::new(PolySource::Expression("x^2 +".into()));
    assert_eq!(cmd_companion(&garbage).exit_code, EXIT_USAGE);
}

#[test]
fn json_reports_round_trip_through_a_generic_parser() {
    let mut config = ExperimentConfig::new(PolySource::Coefficients("1,-6,11,-6".into()));
    config.seed = 5;
    config.format = OutputFormat::Json;
    for (name, out) in [
        ("companion", cmd_companion(&config)),
        ("measure", cmd_measure(&config)),
        ("multipole", cmd_multipole(&config)),
        ("verify", cmd_verify(&config)),
    ] {
        let value: serde_json::Value =
            serde_json::from_str(&out.body).unwrap_or_else(|e| panic!("{name}: {e}"));
        // re-serialization loses nothing the parser kept
        let again: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&value).unwrap()).unwrap();
        assert_eq!(value, again, "{name}");
    }
}

#[test]
fn measure_histogram_counts_every_shot() {
    let mut config = ExperimentConfig::new(PolySource::Coefficients("1,-6,11,-6".into()));
    config.seed = 31;
    config.parallel_m = 50;
    config.format = OutputFormat::Json;
    let v: serde_json::Value = serde_json::from_str(&cmd_measure(&config).body).unwrap();
    let total: u64 = v["histogram"]
        .as_array()
        .unwrap()
        .iter()
        .map(|bin| bin["count"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 50);
    assert_eq!(v["shots"], 50);
    // every histogram value is a spectrum member
    let spectrum: Vec<f64> = v["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["value"].as_f64().unwrap())
        .collect();
    for bin in v["histogram"].as_array().unwrap() {
        let val = bin["value"].as_f64().unwrap();
        assert!(spectrum.contains(&val));
    }
}

#[test]
fn default_mode_is_rational_and_certifies_exactly() {
    // 1/3 is not a float; the exact chain must treat (x-1/3)^2 as degenerate
    let config = ExperimentConfig::new(PolySource::Expression("(x-1/3)^2".into()));
    let out = cmd_companion(&config);
    assert_eq!(out.exit_code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out.body).unwrap();
    assert_eq!(v["chain"]["flags"], serde_json::json!([true]));
    assert_eq!(v["chain"]["d_exact"], serde_json::json!(["0"]));
}

#[test]
fn worked_quartic_search_finds_grid_roots() {
    let mut rng = substream(1009, 0);
    let (roots, p) = real_rooted(&mut rng, 6);
    let spec = eigenvalues_tridiagonal(
        &build_companion(&run_mea(&p, &BigRational::zero()).unwrap()),
        1e-12,
    );
    let float_p = p.to_float_poly();
    let cluster = 1e-6 * (1.0 + spec.enclosure);
    let (result, record) = spinroots::measure::run_search(
        &spec,
        &float_p,
        400,
        cluster,
        1009,
        &mut substream(1009, 1),
    );
    assert!(result.complete);
    assert_eq!(record.shots.len(), result.shots_used);
    let expect = max_root_magnitude(&roots);
    let tol = 1e-8 * (1.0 + expect);
    for (found, root) in result.distinct_outcomes.iter().zip(&roots) {
        use num::traits::ToPrimitive;
        assert!((found - root.to_f64().unwrap()).abs() <= tol);
    }
}
