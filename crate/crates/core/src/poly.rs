//! Integer Laurent polynomials in `t`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficients keyed by exponent; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "BTreeMap<String, i64>", try_from = "BTreeMap<String, i64>")]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(c: i64, exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, exp);
        p
    }

    pub fn from_coeffs(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(c, e);
        }
        p
    }

    pub fn add_term(&mut self, c: i64, exp: i32) {
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    /// Value at `t = -1`.
    pub fn at_minus_one(&self) -> i64 {
        self.terms().map(|(e, c)| if e.rem_euclid(2) == 0 { c } else { -c }).sum()
    }

    pub fn at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// `p(1/t)`.
    pub fn invert(&self) -> Self {
        Self::from_coeffs(self.terms().map(|(e, c)| (-e, c)))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c > 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_coeffs(self.terms().map(|(e, c)| (e, c * k)))
    }

    /// Reduced polynomial `p` with `self = t + p(t) + p(1/t)`.
    pub fn reduce(&self) -> Result<LaurentPoly> {
        let violation = || Error::DualityViolation(self.to_string());
        let p0 = self.coeff(0);
        if p0 % 2 != 0 {
            return Err(violation());
        }
        let mut p = Self::constant(p0 / 2);
        for (e, c) in self.terms().filter(|&(e, _)| e > 0) {
            p.add_term(c - i64::from(e == 1), e);
        }
        if !p.is_nonnegative() || Self::from_reduced(&p) != *self {
            return Err(violation());
        }
        Ok(p)
    }

    /// `t + p(t) + p(1/t)`.
    pub fn from_reduced(p: &LaurentPoly) -> LaurentPoly {
        let mut out = p + &p.invert();
        out.add_term(1, 1);
        out
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(c, e);
        }
        out
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &rhs.scale(-1)
    }
}

impl Ord for LaurentPoly {
    /// Degree first, then coefficients from the top exponent down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.max_exp().cmp(&other.max_exp()).then_with(|| {
            let a = self.coeffs.iter().rev().map(|(&e, &c)| (e, c));
            let b = other.coeffs.iter().rev().map(|(&e, &c)| (e, c));
            a.cmp(b)
        })
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LaurentPoly {
    /// Increasing exponent order, e.g. `t^-1 + 4 + 2t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    f.write_str("t")?;
                    if e != 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts sums of terms `c`, `c t`, `ct`, `c t^k`, `t^-k` with `+` or `-`
    /// between them; whitespace is insignificant.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidArgument(format!("polynomial `{s}`: {msg}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut out = LaurentPoly::zero();
        let bytes = compact.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            } else if i > 0 {
                return Err(bad("expected `+` or `-`"));
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: Option<i64> =
                if i > start { Some(compact[start..i].parse().map_err(|_| bad("coefficient overflow"))?) } else { None };
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
            }
            let mut exp = 0;
            if i < bytes.len() && bytes[i] == b't' {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let estart = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = compact[estart..i].parse().map_err(|_| bad("bad exponent"))?;
                }
            } else if coeff.is_none() {
                return Err(bad("expected a term"));
            }
            out.add_term(sign * coeff.unwrap_or(1), exp);
        }
        Ok(out)
    }
}

impl From<LaurentPoly> for BTreeMap<String, i64> {
    fn from(p: LaurentPoly) -> Self {
        p.coeffs.into_iter().map(|(e, c)| (e.to_string(), c)).collect()
    }
}

impl TryFrom<BTreeMap<String, i64>> for LaurentPoly {
    type Error = String;
    fn try_from(m: BTreeMap<String, i64>) -> std::result::Result<Self, String> {
        let mut p = LaurentPoly::zero();
        for (k, c) in m {
            let e: i32 = k.parse().map_err(|_| format!("bad exponent key `{k}`"))?;
            p.add_term(c, e);
        }
        Ok(p)
    }
}
