//! Simulated generalized Stern-Gerlach measurements.
//!
//! The eigensolver (Sturm bisection on the shared three-term recurrence)
//! stands in for the physical beam-splitting apparatus: it supplies the
//! exact outcome values. Measurements on the maximally mixed state then
//! sample those values by the Born rule, each eigenvalue weighted by
//! multiplicity/N. Collection protocols cover the sequential search with a
//! stopping rule and the parallel many-apparatus experiment.

use rand::Rng;
use thiserror::Error;

use crate::companion::TridiagonalSymmetric;
use crate::poly::Polynomial;
use crate::rng::substream;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MeasureError {
    #[error("spectrum dimension {spectrum} does not match state dimension {state}")]
    DimensionMismatch { spectrum: usize, state: usize },
}

/// One distinct eigenvalue with its multiplicity and certified enclosure
/// half-width.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralLine {
    pub value: f64,
    pub multiplicity: usize,
    pub bracket_radius: f64,
}

/// Full eigenvalue list of a symmetric tridiagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// All N eigenvalues, ascending, repeated by multiplicity.
    pub eigenvalues: Vec<f64>,
    /// Distinct values after clustering, ascending.
    pub lines: Vec<SpectralLine>,
    /// Spectral enclosure of the source matrix (Gershgorin bound).
    pub enclosure: f64,
}

impl Spectrum {
    /// Group plain values into a spectrum; values closer than `cluster_tol`
    /// fall into one line. Intended for tests and synthetic experiments.
    pub fn from_values(values: &[f64], cluster_tol: f64) -> Self {
        let mut sorted = values.to_vec();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut lines: Vec<SpectralLine> = Vec::new();
        for &v in &sorted {
            match lines.last_mut() {
                Some(line) if (v - line.value).abs() <= cluster_tol => line.multiplicity += 1,
                _ => lines.push(SpectralLine {
                    value: v,
                    multiplicity: 1,
                    bracket_radius: 0.0,
                }),
            }
        }
        let eigenvalues = flatten(&lines);
        let enclosure = sorted.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        Spectrum {
            eigenvalues,
            lines,
            enclosure,
        }
    }

    pub fn dimension(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn distinct_count(&self) -> usize {
        self.lines.len()
    }

    /// The line closest to `value`, if within `tol`.
    pub fn line_near(&self, value: f64, tol: f64) -> Option<&SpectralLine> {
        self.lines
            .iter()
            .min_by(|a, b| {
                (a.value - value)
                    .abs()
                    .partial_cmp(&(b.value - value).abs())
                    .unwrap()
            })
            .filter(|line| (line.value - value).abs() <= tol)
    }
}

fn flatten(lines: &[SpectralLine]) -> Vec<f64> {
    lines
        .iter()
        .flat_map(|l| std::iter::repeat_n(l.value, l.multiplicity))
        .collect()
}

/// All eigenvalues of a symmetric tridiagonal matrix by Sturm bisection.
///
/// Each eigenvalue is bracketed to width `tol * (1 + Gershgorin bound)`;
/// degenerate eigenvalues show up as Sturm count jumps of two or more
/// across one final bracket.
pub fn eigenvalues_tridiagonal(m: &TridiagonalSymmetric, tol: f64) -> Spectrum {
    assert!(tol > 0.0, "bisection tolerance must be positive");
    let n = m.dimension();
    let bound = m.gershgorin_bound();
    let width = tol * (1.0 + bound);
    let lo = -bound - width;
    let hi = bound + width;

    let mut lines = Vec::new();
    // worklist of intervals [lo, hi) with their strict-below counts;
    // pushing the right half first keeps the output ascending
    let mut work = vec![(lo, hi, 0usize, n)];
    while let Some((a, b, c_a, c_b)) = work.pop() {
        let inside = c_b - c_a;
        if inside == 0 {
            continue;
        }
        if b - a <= width {
            lines.push(SpectralLine {
                value: 0.5 * (a + b),
                multiplicity: inside,
                bracket_radius: 0.5 * (b - a),
            });
            continue;
        }
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            // interval is at float resolution; emit rather than stall
            lines.push(SpectralLine {
                value: mid,
                multiplicity: inside,
                bracket_radius: 0.5 * (b - a),
            });
            continue;
        }
        let c_mid = m.sturm_count_below(mid).clamp(c_a, c_b);
        work.push((mid, b, c_mid, c_b));
        work.push((a, mid, c_a, c_mid));
    }

    Spectrum {
        eigenvalues: flatten(&lines),
        lines,
        enclosure: bound,
    }
}

/// The homogeneous mixture `rho_0 = I/N`; stored implicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MixedState {
    pub dimension: usize,
}

impl MixedState {
    pub fn new(dimension: usize) -> Self {
        MixedState { dimension }
    }
}

/// One projective measurement of the observable on the mixed state: each
/// eigenvalue occurs with probability `multiplicity / N`, so every
/// nondegenerate outcome has probability `1/N`.
pub fn measure_once<R: Rng>(
    spec: &Spectrum,
    state: &MixedState,
    rng: &mut R,
) -> Result<f64, MeasureError> {
    if spec.dimension() != state.dimension {
        return Err(MeasureError::DimensionMismatch {
            spectrum: spec.dimension(),
            state: state.dimension,
        });
    }
    let idx = rng.gen_range(0..spec.dimension());
    Ok(spec.eigenvalues[idx])
}

/// One recorded shot: which apparatus fired, in which repetition, and the
/// eigenvalue it output.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Shot {
    pub shot_index: usize,
    pub apparatus_id: usize,
    pub outcome: f64,
}

/// How a record was produced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RunConfig {
    Sequential { max_shots: usize, cluster_tol: f64 },
    Parallel { apparatus_count: usize },
}

/// Trace of simulated shots, reproducible from the stored seed.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementRecord {
    pub shots: Vec<Shot>,
    pub seed: u64,
    pub config: RunConfig,
}

/// Outcome of a collection run.
#[derive(Debug, Clone)]
pub struct SearchResult {
    /// Distinct outcome values found, ascending.
    pub distinct_outcomes: Vec<f64>,
    pub shots_used: usize,
    /// Whether every distinct spectrum value was observed.
    pub complete: bool,
    /// Monic product over the found values, each repeated by its spectrum
    /// multiplicity.
    pub reconstructed_poly: Polynomial<f64>,
    /// Largest `|P(outcome)|` over the found values, for the source
    /// polynomial `P` supplied to the run.
    pub max_residual: f64,
}

/// Default shot budget for a dimension-N search.
pub fn default_max_shots(n: usize) -> usize {
    let n_f = n as f64;
    (n_f * (n_f.ln() + 10.0)).ceil() as usize
}

/// Cluster outcomes and summarize them against the spectrum and the source
/// polynomial.
pub fn collect_result(
    spec: &Spectrum,
    source: &Polynomial<f64>,
    outcomes: &[f64],
    cluster_tol: f64,
    shots_used: usize,
) -> SearchResult {
    let mut distinct: Vec<f64> = Vec::new();
    for &v in outcomes {
        if !distinct.iter().any(|&d| (d - v).abs() <= cluster_tol) {
            distinct.push(v);
        }
    }
    distinct.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let complete = distinct.len() == spec.distinct_count();

    let mut roots = Vec::new();
    for &v in &distinct {
        let mult = spec
            .line_near(v, cluster_tol.max(f64::EPSILON))
            .map(|l| l.multiplicity)
            .unwrap_or(1);
        roots.extend(std::iter::repeat_n(v, mult));
    }
    let reconstructed_poly = reconstruct_product(&roots);
    let max_residual = distinct
        .iter()
        .map(|&v| source.evaluate(&v).abs())
        .fold(0.0, f64::max);

    SearchResult {
        distinct_outcomes: distinct,
        shots_used,
        complete,
        reconstructed_poly,
        max_residual,
    }
}

/// Sequential search: repeat single-shot measurements until every distinct
/// spectrum value has appeared or the shot budget runs out. An exhausted
/// budget is not an error; it is reported as `complete = false`.
pub fn run_search<R: Rng>(
    spec: &Spectrum,
    source: &Polynomial<f64>,
    max_shots: usize,
    cluster_tol: f64,
    seed: u64,
    rng: &mut R,
) -> (SearchResult, MeasurementRecord) {
    let state = MixedState::new(spec.dimension());
    let mut shots = Vec::new();
    let mut outcomes = Vec::new();
    let mut distinct: Vec<f64> = Vec::new();
    for shot_index in 0..max_shots {
        let outcome = measure_once(spec, &state, rng).expect("state matches spectrum");
        shots.push(Shot {
            shot_index,
            apparatus_id: 0,
            outcome,
        });
        outcomes.push(outcome);
        if !distinct.iter().any(|&d| (d - outcome).abs() <= cluster_tol) {
            distinct.push(outcome);
        }
        if distinct.len() == spec.distinct_count() {
            break;
        }
    }
    let shots_used = shots.len();
    let result = collect_result(spec, source, &outcomes, cluster_tol, shots_used);
    let record = MeasurementRecord {
        shots,
        seed,
        config: RunConfig::Sequential {
            max_shots,
            cluster_tol,
        },
    };
    (result, record)
}

/// Parallel experiment: `m` independent apparatuses, one shot each, every
/// apparatus on its own substream of the root seed. The record is a pure
/// function of `(spec, m, seed)` whatever the execution order.
pub fn run_parallel(spec: &Spectrum, m: usize, seed: u64) -> MeasurementRecord {
    let state = MixedState::new(spec.dimension());
    let shots = (0..m)
        .map(|apparatus_id| {
            let mut rng = substream(seed, apparatus_id as u64);
            let outcome = measure_once(spec, &state, &mut rng).expect("state matches spectrum");
            Shot {
                shot_index: 0,
                apparatus_id,
                outcome,
            }
        })
        .collect();
    MeasurementRecord {
        shots,
        seed,
        config: RunConfig::Parallel { apparatus_count: m },
    }
}

/// Expand the monic product over linear factors `(x - root)`.
pub fn reconstruct_product(roots: &[f64]) -> Polynomial<f64> {
    Polynomial::from_roots(roots)
}
