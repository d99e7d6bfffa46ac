//! Real zeros of real polynomials, found by simulating the quantum way:
//! turn the polynomial into a hermitean observable of a single spin, then
//! measure.
//!
//! The pipeline has four stages, mirrored by the module layout:
//!
//! 1. [`poly`] / [`parse`] - dense polynomial arithmetic (exact rational or
//!    `f64`) and an expression parser.
//! 2. [`companion`] - a modified Euclidean division chain that yields a real
//!    symmetric tridiagonal companion matrix whose eigenvalues are the
//!    zeros, and certifies along the way whether all zeros are real.
//! 3. [`multipole`] - the matrix reinterpreted as a spin-`(N-1)/2`
//!    observable: spin component matrices and an orthonormal hermitean
//!    multipole basis with real expansion coefficients.
//! 4. [`measure`] - simulated generalized Stern-Gerlach shots on the
//!    maximally mixed state: Born-rule sampling of the spectrum, sequential
//!    search with a stopping rule, and the many-apparatus parallel
//!    experiment that can produce every zero at one go.
//!
//! [`oracle`] holds an independent Aberth-Ehrlich root finder used only for
//! cross-checks, and [`cli`] the report layer behind the `spinroots`
//! binary.
//!
//! # Quick start
//!
//! ```
//! use num::rational::BigRational;
//! use num::traits::Zero;
//! use spinroots::companion::{build_companion, run_mea};
//! use spinroots::measure::{eigenvalues_tridiagonal, run_search};
//! use spinroots::parse::parse;
//! use spinroots::rng::substream;
//!
//! let p = parse("(x-1)*(x-2)*(x-3)").unwrap();
//! let chain = run_mea(&p, &BigRational::zero()).unwrap();
//! let matrix = build_companion(&chain);
//! let spectrum = eigenvalues_tridiagonal(&matrix, 1e-12);
//!
//! let float_p = p.to_float_poly();
//! let (result, _record) =
//!     run_search(&spectrum, &float_p, 100, 1e-6, 7, &mut substream(7, 0));
//! assert!(result.complete);
//! assert_eq!(result.distinct_outcomes.len(), 3);
//! ```
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --example parse_and_divide      # polynomial core, sign conventions
//! cargo run --example companion_matrix      # division chain and tridiagonal matrix
//! cargo run --example real_root_certificate # negative-d verdict vs the oracle
//! cargo run --example spin_observable       # spin matrices and multipole expansion
//! cargo run --example stern_gerlach_search  # sequential measurement search
//! cargo run --example parallel_measurement  # all zeros at one go
//! cargo run --example full_verification     # the whole invariant battery
//! ```
//!
//! The `spinroots` binary exposes the same pipeline as subcommands
//! (`companion`, `measure`, `multipole`, `verify`); see the README.

pub mod cli;
pub mod cmatrix;
pub mod companion;
pub mod measure;
pub mod multipole;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod rng;
pub mod scalar;

pub use companion::{build_companion, run_mea, MeaChain, TridiagonalSymmetric};
pub use measure::{eigenvalues_tridiagonal, measure_once, run_parallel, run_search, Spectrum};
pub use multipole::{build_multipole_basis, spin_matrices, MultipoleBasis};
pub use oracle::find_roots;
pub use parse::parse;
pub use poly::Polynomial;
