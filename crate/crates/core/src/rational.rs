//! Exact rational arithmetic for interval grades.
//!
//! Interval PCMs need bit-exact definedness of bounded addition, so grades
//! are stored as reduced fractions with a positive denominator and never as
//! floating point.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RationalError {
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("rational arithmetic overflow")]
    Overflow,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// A rational number in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Rational, RationalError> {
        Self::reduce(num as i128, den as i128)
    }

    pub fn from_int(n: i64) -> Rational {
        Rational { num: n, den: 1 }
    }

    fn reduce(num: i128, den: i128) -> Result<Rational, RationalError> {
        if den == 0 {
            return Err(RationalError::ZeroDenominator);
        }
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den);
        let (num, den) = if g == 0 { (0, 1) } else { (sign * num / g, sign * den / g) };
        let num = i64::try_from(num).map_err(|_| RationalError::Overflow)?;
        let den = i64::try_from(den).map_err(|_| RationalError::Overflow)?;
        Ok(Rational { num, den })
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn add(&self, other: &Rational) -> Result<Rational, RationalError> {
        let num = self.num as i128 * other.den as i128 + other.num as i128 * self.den as i128;
        let den = self.den as i128 * other.den as i128;
        Self::reduce(num, den)
    }

    pub fn sub(&self, other: &Rational) -> Result<Rational, RationalError> {
        let num = self.num as i128 * other.den as i128 - other.num as i128 * self.den as i128;
        let den = self.den as i128 * other.den as i128;
        Self::reduce(num, den)
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Rational {
    type Err = RationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_int = |t: &str| t.parse::<i64>().map_err(|_| RationalError::Parse(s.to_string()));
        match s.split_once('/') {
            Some((p, q)) => Rational::new(parse_int(p)?, parse_int(q)?),
            None => Ok(Rational::from_int(parse_int(s)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let r = Rational::new(6, -4).unwrap();
        assert_eq!((r.numerator(), r.denominator()), (-3, 2));
        assert_eq!(r.to_string(), "-3/2");
    }

    #[test]
    fn parses_both_forms() {
        assert_eq!("3/6".parse::<Rational>().unwrap(), Rational::new(1, 2).unwrap());
        assert_eq!("2".parse::<Rational>().unwrap(), Rational::from_int(2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    proptest! {
        #[test]
        fn add_commutes(a in -50i64..50, b in 1i64..12, c in -50i64..50, d in 1i64..12) {
            let x = Rational::new(a, b).unwrap();
            let y = Rational::new(c, d).unwrap();
            prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
        }

        #[test]
        fn add_associates(a in -20i64..20, b in 1i64..12, c in -20i64..20, d in 1i64..12, e in -20i64..20, g in 1i64..12) {
            let x = Rational::new(a, b).unwrap();
            let y = Rational::new(c, d).unwrap();
            let z = Rational::new(e, g).unwrap();
            prop_assert_eq!(
                x.add(&y).unwrap().add(&z).unwrap(),
                x.add(&y.add(&z).unwrap()).unwrap()
            );
        }

        #[test]
        fn sub_then_add_roundtrips(a in -50i64..50, b in 1i64..12, c in -50i64..50, d in 1i64..12) {
            let x = Rational::new(a, b).unwrap();
            let y = Rational::new(c, d).unwrap();
            prop_assert_eq!(x.sub(&y).unwrap().add(&y).unwrap(), x);
        }
    }
}
