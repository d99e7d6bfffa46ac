#![allow(dead_code)]

//! Shared random corpora: exact-rational polynomials with prescribed root
//! structure. Roots live on a 1/1000 grid so chains run exactly and sample
//! points (denominator 19) can never collide with a root.

use num::bigint::BigInt;
use num::rational::BigRational;
use rand::Rng;
use spinroots::poly::Polynomial;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Uniform grid value `k/1000` with `k` in `[lo, hi]` (inclusive, millis).
pub fn grid_value<R: Rng>(rng: &mut R, lo_millis: i64, hi_millis: i64) -> BigRational {
    rat(rng.gen_range(lo_millis..=hi_millis), 1000)
}

/// Monic polynomial with `degree` distinct real roots uniform on the grid
/// in [-5, 5]. Returns the roots (ascending) and the expanded polynomial.
pub fn real_rooted<R: Rng>(
    rng: &mut R,
    degree: usize,
) -> (Vec<BigRational>, Polynomial<BigRational>) {
    let mut millis = Vec::with_capacity(degree);
    while millis.len() < degree {
        let m = rng.gen_range(-5000i64..=5000);
        if !millis.contains(&m) {
            millis.push(m);
        }
    }
    millis.sort_unstable();
    let roots: Vec<BigRational> = millis.into_iter().map(|m| rat(m, 1000)).collect();
    let p = Polynomial::from_roots(&roots);
    (roots, p)
}

/// Monic polynomial of the given degree (>= 2) with exactly one
/// complex-conjugate quadratic factor `x^2 - 2u x + (u^2 + v^2)` whose
/// discriminant `-4 v^2` is at most -0.1, the rest real linear factors.
pub fn with_complex_pair<R: Rng>(rng: &mut R, degree: usize) -> Polynomial<BigRational> {
    assert!(degree >= 2);
    let (_, mut p) = if degree > 2 {
        real_rooted(rng, degree - 2)
    } else {
        (Vec::new(), Polynomial::one())
    };
    let u = grid_value(rng, -5000, 5000);
    let v = grid_value(rng, 200, 5000); // v >= 0.2 so disc <= -0.16
    let quad = Polynomial::new(vec![
        u.clone() * u.clone() + v.clone() * v,
        rat(-2, 1) * u,
        rat(1, 1),
    ]);
    p = p.mul(&quad);
    p
}

/// Largest root magnitude as a float.
pub fn max_root_magnitude(roots: &[BigRational]) -> f64 {
    use num::traits::{Signed, ToPrimitive};
    roots
        .iter()
        .map(|r| r.abs().to_f64().unwrap())
        .fold(0.0f64, f64::max)
}
