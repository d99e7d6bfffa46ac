//! Polynomial core walkthrough: parsing, evaluation, and the division sign
//! convention `dividend = quotient * divisor - negated_remainder` that the
//! companion chain is built on.

use num::bigint::BigInt;
use num::rational::BigRational;
use spinroots::parse::parse;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn main() {
    let p = parse("(x-1)*(x-2)*(x-3)").unwrap();
    println!("parsed and expanded: {p}");
    println!("ascending coefficients: {:?}", p.coeffs());

    for x in [0i64, 1, 2, 3, 4] {
        let v = p.evaluate(&rat(x, 1));
        println!("p({x}) = {v}");
    }

    let dp = p.derivative().unwrap();
    println!("derivative: {dp}");

    // one chain-style division: note the NEGATED remainder
    let divisor = parse("x^2 - 4x + 11/3").unwrap();
    let result = p.divide_negated(&divisor).unwrap();
    println!("dividing by {divisor}:");
    println!("  quotient          q = {}", result.quotient);
    println!("  negated remainder r = {}", result.negated_remainder);

    let rebuilt = result.quotient.mul(&divisor).sub(&result.negated_remainder);
    println!(
        "  q * divisor - r  == {rebuilt}  (exact round trip: {})",
        rebuilt == p
    );

    match parse("x^2 + y") {
        Err(e) => println!("two variables rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
