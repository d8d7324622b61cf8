//! Exact arithmetic in the integer Laurent ring.
//!
//! ```text
//! cargo run --example laurent_arithmetic
//! ```

use cluster_core::{Error, LaurentPoly};
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() -> Result<(), Error> {
    let a = LaurentPoly::parse("x1 + x2^-1", 2)?;
    let b = LaurentPoly::parse("x1*x2 + 1", 2)?;
    let prod = &a * &b;
    println!("({a}) * ({b}) = {prod}");
    println!("divided back: {}", prod.exact_div(&b)?);

    let num = LaurentPoly::parse("x1 + x2", 2)?;
    let den = LaurentPoly::parse("x1 + 1", 2)?;
    match num.exact_div(&den) {
        Err(e) => println!("({num}) / ({den}): {e}"),
        Ok(q) => println!("unexpected quotient {q}"),
    }

    let big = a.pow(12);
    println!("(x1 + 1/x2)^12 has {} terms", big.num_terms());
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let at = big.eval(&[half.clone(), half])?;
    println!("value at x1 = x2 = 1/2: {at}");
    Ok(())
}
