//! Arbitrary-precision rational scalars and their string form.
//!
//! Rationals are serialized as `"p/q"` (or just `"p"` when the denominator
//! is one); no floats appear anywhere in the exact pipeline.

use num::bigint::Sign;
use num::integer::Roots;
use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// The scalar field of the whole crate. `num::BigRational` keeps the
/// denominator positive and the fraction reduced, which matches the
/// invariants we need.
pub type Rat = BigRational;

/// Shorthand for a rational from machine integers.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer rational.
pub fn rint(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`. Whitespace is not accepted.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = |_| Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(bad)?;
            Ok(Rat::from(n))
        }
        Some((p, q)) => {
            let n: BigInt = p.parse().map_err(bad)?;
            let d: BigInt = q.parse().map_err(bad)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn rat_to_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Exact square root when `x` is the square of a rational, `None` otherwise.
/// The returned root is nonnegative.
pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rat::zero());
    }
    let sn = int_sqrt_exact(x.numer())?;
    let sd = int_sqrt_exact(x.denom())?;
    Some(Rat::new(sn, sd))
}

fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Lossy conversion for the float-mode verifier fallbacks.
pub fn rat_to_f64(x: &Rat) -> f64 {
    num::ToPrimitive::to_f64(x).expect("rational out of f64 range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "-7", "3/4", "-22/7", "100000000000000000000/3"] {
            let x = parse_rat(s).unwrap();
            assert_eq!(rat_to_string(&x), s);
        }
        // non-canonical inputs are reduced
        assert_eq!(rat_to_string(&parse_rat("4/6").unwrap()), "2/3");
        assert_eq!(rat_to_string(&parse_rat("3/-6").unwrap()), "-1/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a").is_err());
    }

    #[test]
    fn sqrt_detects_perfect_squares() {
        assert_eq!(rat_sqrt(&rat(25, 4)), Some(rat(5, 2)));
        assert_eq!(rat_sqrt(&rat(2, 1)), None);
        assert_eq!(rat_sqrt(&rat(0, 1)), Some(Rat::zero()));
        assert_eq!(rat_sqrt(&rat(-4, 1)), None);
        assert_eq!(rat_sqrt(&rat(34, 1)), None);
    }
}
