//! Exact rational scalars.
//!
//! The base ring is fixed to the rational field: span computations need a
//! field and all coefficients that occur in practice (1/2, 3, ...) live in
//! it. Rationals are rendered as `p` or `p/q` strings in every external
//! format.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The scalar type used throughout the crate.
pub type Q = BigRational;

/// Integer as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `n/d` as a rational. Panics on a zero denominator.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Renders `3`, `-1/2`, ... (no spaces, denominator omitted when 1).
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses the output of [`format_q`]: an optional sign, digits, and an
/// optional `/denominator` part.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Q::new(n, d))
}

/// Formats a signed coefficient in front of a factor, as used by the
/// relation printers: `""`, `"-"`, `"3 "`, `"-1/2 "`.
pub fn coeff_prefix(x: &Q) -> String {
    if x.is_one() {
        String::new()
    } else if (-x.clone()).is_one() {
        "-".to_string()
    } else if x.is_negative() {
        format!("-{} ", format_q(&x.abs()))
    } else {
        format!("{} ", format_q(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_format_round_trip() {
        for s in ["0", "3", "-3", "1/2", "-7/3"] {
            let x = parse_q(s).unwrap();
            assert_eq!(format_q(&x), s);
        }
        assert_eq!(parse_q("4/2").map(|x| format_q(&x)).as_deref(), Some("2"));
        assert!(parse_q("1/0").is_none());
        assert!(parse_q("x").is_none());
    }
}
