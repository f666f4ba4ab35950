//! Arbitrary-precision rationals and their `p/q` text form.
//!
//! All exact data in the library (step weights, walk counts, series
//! coefficients) lives in `Rat`. Serialization uses the `p/q` string format
//! so reports and caches stay exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

/// Build `n/d` from machine integers.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parse `"p/q"` or `"p"` with optional sign. The denominator must be nonzero.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Usage(format!("invalid rational {s:?}")))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Usage(format!("invalid rational {s:?}")))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Usage(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(n, d))
}

/// Render as `"p/q"`, or just `"p"` for integers. Inverse of [`parse_rat`].
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_positive(r: &Rat) -> bool {
    r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render_round_trip() {
        for s in ["3/4", "-7/2", "5", "0", "-12"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(rat_to_string(&r), s);
        }
        // normalization: reduced form, positive denominator
        assert_eq!(rat_to_string(&parse_rat("6/8").unwrap()), "3/4");
        assert_eq!(rat_to_string(&parse_rat("1/-2").unwrap()), "-1/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
