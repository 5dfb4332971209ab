//! Arbitrary-precision rational scalars and small helpers used everywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number. `num-rational` keeps the invariants we need:
/// reduced to lowest terms, denominator positive.
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

/// Canonical text form: `p` when the denominator is 1, else `p/q`.
pub fn rat_text(r: &Rat) -> String {
    r.to_string()
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    s.trim().parse::<Rat>().ok()
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64()
        .unwrap_or_else(|| r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN))
}

/// n! as a rational.
pub fn factorial(n: u32) -> Rat {
    let mut acc = BigInt::one();
    for k in 2..=n as u64 {
        acc *= BigInt::from(k);
    }
    Rat::from_integer(acc)
}

/// Binomial coefficient C(n, k) as a rational; zero when k > n.
pub fn binomial(n: u32, k: u32) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from((n - i) as u64);
        den *= BigInt::from((i + 1) as u64);
    }
    Rat::new(num, den)
}

pub fn is_nonneg(r: &Rat) -> bool {
    !r.is_negative()
}

pub fn is_nonneg_integer(r: &Rat) -> bool {
    r.is_integer() && !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 2), rat_int(10));
        assert_eq!(binomial(4, 0), rat_int(1));
        assert_eq!(binomial(3, 5), rat_int(0));
    }

    #[test]
    fn rat_round_trip() {
        let r = rat(-6, 4);
        assert_eq!(rat_text(&r), "-3/2");
        assert_eq!(parse_rat("-3/2").unwrap(), r);
        assert_eq!(rat_text(&rat_int(7)), "7");
    }
}
