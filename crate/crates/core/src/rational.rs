//! Exact rational scalars.
//!
//! `Rational` is a reduced fraction of arbitrary-precision integers with a
//! positive denominator; `num_rational::BigRational` maintains exactly those
//! invariants, so it is used directly rather than wrapped.  The canonical
//! text form is `p` for integers and `p/q` otherwise, which is what both
//! `Display` and `FromStr` of `BigRational` produce and accept.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_zero(r: &Rational) -> bool {
    r.numer().is_zero()
}

pub fn is_one(r: &Rational) -> bool {
    r.is_integer() && r.numer().is_one()
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn to_string(r: &Rational) -> String {
    r.to_string()
}

/// Parses `p` or `p/q`. Whitespace is not accepted.
pub fn parse(s: &str) -> Result<Rational, ParseRationalError> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| ParseRationalError)?;
    let den: BigInt = den.parse().map_err(|_| ParseRationalError)?;
    if den.is_zero() {
        return Err(ParseRationalError);
    }
    Ok(Rational::new(num, den))
}

/// Reduces an integer-valued rational modulo a small positive modulus.
///
/// Returns `None` when the denominator is not invertible mod `m` (for the
/// integer matrices this crate produces the denominator is always 1).
pub fn to_mod(r: &Rational, m: u64) -> Option<u64> {
    let mi = BigInt::from(m);
    let num = r.numer().mod_floor_euclid(&mi);
    let den = r.denom().mod_floor_euclid(&mi);
    let den_inv = mod_inverse(den, m)?;
    Some((num * den_inv % m as i128) as u64)
}

fn mod_inverse(a: i128, m: u64) -> Option<i128> {
    let m = m as i128;
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m, a.rem_euclid(m));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(m))
}

trait ModFloorEuclid {
    fn mod_floor_euclid(&self, m: &BigInt) -> i128;
}

impl ModFloorEuclid for BigInt {
    fn mod_floor_euclid(&self, m: &BigInt) -> i128 {
        use num_traits::ToPrimitive;
        let r = ((self % m) + m) % m;
        r.to_i128().expect("modulus fits in i128")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseRationalError;

impl core::fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "invalid rational literal (expected `p` or `p/q`)")
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ParseRationalError {}

/// True when `r` is a nonnegative integer.
pub fn is_nonneg_integer(r: &Rational) -> bool {
    r.is_integer() && !r.numer().is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(to_string(&rat(4, 6)), "2/3");
        assert_eq!(to_string(&rat(-4, -6)), "2/3");
        assert_eq!(to_string(&rat(4, -6)), "-2/3");
        assert_eq!(to_string(&rat(6, 3)), "2");
        assert_eq!(to_string(&rat(0, 5)), "0");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-7", "2/3", "-11/13"] {
            assert_eq!(to_string(&parse(s).unwrap()), s);
        }
        assert!(parse("").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("a/b").is_err());
        assert!(parse("1 / 2").is_err());
    }

    #[test]
    fn modular_reduction() {
        assert_eq!(to_mod(&rat_int(-1), 3), Some(2));
        assert_eq!(to_mod(&rat_int(7), 3), Some(1));
        assert_eq!(to_mod(&rat(1, 2), 3), Some(2)); // 2^{-1} = 2 mod 3
        assert_eq!(to_mod(&rat(1, 3), 3), None);
    }
}
