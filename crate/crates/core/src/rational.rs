//! Exact rational scalars shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn q_zero() -> Q {
    Q::zero()
}

pub fn q_one() -> Q {
    Q::one()
}

/// Canonical text form, `"n"` or `"n/d"`.
pub fn q_to_string(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn q_parse(s: &str) -> Result<Q> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad rational `{s}`")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Q::new(parse_int(n)?, d))
        }
        None => Ok(Q::from_integer(parse_int(s)?)),
    }
}

pub fn q_to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Exact square root of a nonnegative rational, if it exists.
pub fn q_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Q::new(n, d))
    } else {
        None
    }
}

/// `base^exp` for an integer exponent (negative allowed for nonzero base).
pub fn q_pow(base: &Q, exp: i64) -> Result<Q> {
    if exp < 0 {
        if base.is_zero() {
            return Err(Error::Pole("zero raised to a negative power".into()));
        }
        return Ok(num_traits::pow(base.recip(), (-exp) as usize));
    }
    Ok(num_traits::pow(base.clone(), exp as usize))
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(q_parse("3/6").unwrap(), q_frac(1, 2));
        assert_eq!(q_to_string(&q_frac(-4, 2)), "-2");
        assert_eq!(q_to_string(&q_frac(3, -9)), "-1/3");
        assert!(q_parse("1/0").is_err());
        assert!(q_parse("x").is_err());
    }

    #[test]
    fn square_roots() {
        assert_eq!(q_sqrt(&q_frac(9, 4)), Some(q_frac(3, 2)));
        assert_eq!(q_sqrt(&q_int(2)), None);
        assert_eq!(q_sqrt(&q_int(-1)), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
