use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lp::{int, Rational};

/// The edge bound `slope·n + intercept`; a graph satisfies the density
/// hypothesis when `m < slope·n + intercept`, compared exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Threshold {
    pub slope: Rational,
    pub intercept: Rational,
}

impl Threshold {
    pub fn new(slope: Rational, intercept: Rational) -> Self {
        Threshold { slope, intercept }
    }

    pub fn bound(&self, n: usize) -> Rational {
        &self.slope * int(n as i64) + &self.intercept
    }

    /// `m < bound(n)`.
    pub fn admits(&self, m: usize, n: usize) -> bool {
        int(m as i64) < self.bound(n)
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*n", self.slope)?;
        if self.intercept < Rational::zero() {
            write!(f, "{}", self.intercept)
        } else {
            write!(f, "+{}", self.intercept)
        }
    }
}

/// Parses linear expressions in `n` such as `11/5n-18/5`, `11/5*n-18/5`,
/// `3n-6` or `-n+7/3`.
impl FromStr for Threshold {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadThreshold(s.to_string());
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(bad());
        }
        let mut slope = Rational::zero();
        let mut intercept = Rational::zero();
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let (coef_text, has_n) = match term.strip_suffix('n') {
                Some(c) => (c.strip_suffix('*').unwrap_or(c), true),
                None => (term, false),
            };
            let coef = if coef_text.is_empty() {
                if !has_n {
                    return Err(bad());
                }
                int(1)
            } else {
                parse_rational(coef_text).ok_or_else(bad)?
            };
            let coef = if negative { -coef } else { coef };
            if has_n {
                slope += coef;
            } else {
                intercept += coef;
            }
        }
        Ok(Threshold { slope, intercept })
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    if num.is_empty() || !num.bytes().all(|b| b.is_ascii_digit()) || !den.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num.parse().ok()?, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::rat;

    #[test]
    fn grammar() {
        let t: Threshold = "11/5n-18/5".parse().unwrap();
        assert_eq!(t, Threshold::new(rat(11, 5), rat(-18, 5)));
        assert_eq!("11/5*n-18/5".parse::<Threshold>().unwrap(), t);
        assert_eq!("3n-6".parse::<Threshold>().unwrap(), Threshold::new(int(3), int(-6)));
        assert_eq!(
            "7/3*n - 7/3".parse::<Threshold>().unwrap(),
            Threshold::new(rat(7, 3), rat(-7, 3))
        );
        assert_eq!("-n+5".parse::<Threshold>().unwrap(), Threshold::new(int(-1), int(5)));
        for bad in ["", "n*", "3x", "1/0n", "--n", "2n-", "/3n"] {
            assert!(bad.parse::<Threshold>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn strict_comparison() {
        let t: Threshold = "11/5n-18/5".parse().unwrap();
        // n = 6: bound 48/5 = 9.6; n = 7: 59/5 = 11.8
        assert!(t.admits(9, 6) && !t.admits(10, 6));
        assert!(t.admits(11, 7) && !t.admits(12, 7));
        assert!(!t.admits(6, 4));
        let c1: Threshold = "3n-6".parse().unwrap();
        assert!(!c1.admits(12, 6));
    }
}
