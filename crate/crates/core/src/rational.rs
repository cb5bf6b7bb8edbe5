//! Exact rationals and their decimal rendering.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational in canonical form (gcd 1, positive denominator).
pub type ExactRational = BigRational;

pub fn from_ints(numer: i64, denom: i64) -> ExactRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn from_big(numer: BigInt, denom: BigUint) -> ExactRational {
    BigRational::new(numer, BigInt::from(denom))
}

/// Nearest `f64`.
pub fn to_f64(x: &ExactRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `"num/den"` form.
pub fn to_fraction_string(x: &ExactRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), e as usize)
}

/// Integer nearest to `num/den` (den > 0), ties to even.
fn round_half_even(num: &BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_mod_floor(den);
    let twice = &r * 2u32;
    match twice.cmp(den) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1u32,
        std::cmp::Ordering::Equal => {
            if q.is_even() {
                q
            } else {
                q + 1u32
            }
        }
    }
}

fn insert_point(digits: BigInt, places: u32) -> String {
    let neg = digits.is_negative();
    let mut s = digits.abs().to_string();
    if places > 0 {
        let p = places as usize;
        if s.len() <= p {
            s = format!("{}{}", "0".repeat(p + 1 - s.len()), s);
        }
        s.insert(s.len() - p, '.');
    }
    if neg {
        s.insert(0, '-');
    }
    s
}

/// Decimal with exactly `places` digits after the point, round-half-even.
pub fn to_fixed(x: &ExactRational, places: u32) -> String {
    let scaled = x.numer() * pow10(places);
    insert_point(round_half_even(&scaled, x.denom()), places)
}

/// Decimal with `sig` significant digits, round-half-even. Large or tiny
/// magnitudes switch to scientific notation.
pub fn to_significant(x: &ExactRational, sig: u32) -> String {
    assert!(sig >= 1);
    if x.is_zero() {
        return "0".to_string();
    }
    let abs = x.abs();
    // exponent e such that 10^e <= |x| < 10^(e+1)
    let mut e: i64 = (abs.numer().bits() as i64 - abs.denom().bits() as i64) * 30103 / 100000;
    let ten = BigRational::from_integer(BigInt::from(10u32));
    let pow = |k: i64| -> BigRational {
        if k >= 0 {
            num_traits::pow(ten.clone(), k as usize)
        } else {
            BigRational::one() / num_traits::pow(ten.clone(), (-k) as usize)
        }
    };
    while pow(e) > abs {
        e -= 1;
    }
    while pow(e + 1) <= abs {
        e += 1;
    }
    // scale so that sig digits land left of the point
    let shift = sig as i64 - 1 - e;
    let scaled = x * pow(shift);
    let mut digits = round_half_even(scaled.numer(), scaled.denom());
    if digits.abs() >= pow10(sig) {
        // rounding carried into a new digit
        e += 1;
        digits = round_half_even(&digits, &BigInt::from(10u32));
    }
    let shift = sig as i64 - 1 - e;
    if (-6..=20).contains(&e) {
        if shift >= 0 {
            let s = insert_point(digits, shift as u32);
            trim_zeros(s)
        } else {
            (digits * pow10((-shift) as u32)).to_string()
        }
    } else {
        let mantissa = trim_zeros(insert_point(digits, sig - 1));
        format!("{mantissa}e{e}")
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}
