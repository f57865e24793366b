//! Arbitrary-precision rationals and the small helpers used everywhere else.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders `n` or `n/d`.
pub fn render(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `int ['/' posint]`.
pub fn parse(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = |msg: &str| Error::Parse {
        line: 1,
        column: 1,
        message: format!("{msg}: `{t}`"),
    };
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let numer: BigInt = n.parse().map_err(|_| bad("invalid integer"))?;
    match d {
        None => Ok(Rational::from_integer(numer)),
        Some(d) => {
            let denom: BigInt = d.parse().map_err(|_| bad("invalid denominator"))?;
            if !denom.is_positive() {
                return Err(bad("denominator must be positive"));
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// A small random rational `n/d` with `|n| <= span`, `1 <= d <= 3`.
pub fn random_small<R: Rng + ?Sized>(rng: &mut R, span: i64) -> Rational {
    let n = rng.gen_range(-span..=span);
    let d = rng.gen_range(1..=3);
    frac(n, d)
}

/// A random nonzero rational.
pub fn random_nonzero<R: Rng + ?Sized>(rng: &mut R, span: i64) -> Rational {
    loop {
        let q = random_small(rng, span);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn pow(q: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= q;
    }
    acc
}

pub fn powi(q: &Rational, e: i64) -> Result<Rational> {
    if e >= 0 {
        Ok(pow(q, e as u32))
    } else if q.is_zero() {
        Err(Error::Singular)
    } else {
        Ok(pow(&q.recip(), (-e) as u32))
    }
}

pub fn factorial(n: u32) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * int(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        assert_eq!(parse("3/2").unwrap(), frac(3, 2));
        assert_eq!(parse("-4").unwrap(), int(-4));
        assert_eq!(parse(" 6/4 ").unwrap(), frac(3, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("1/-2").is_err());
        assert!(parse("x").is_err());
        assert_eq!(render(&frac(-3, 2)), "-3/2");
        assert_eq!(render(&int(7)), "7");
    }

    #[test]
    fn powers() {
        assert_eq!(powi(&frac(1, 2), -3).unwrap(), int(8));
        assert_eq!(factorial(4), int(24));
        assert!(powi(&int(0), -1).is_err());
    }
}
