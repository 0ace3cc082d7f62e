//! Sparse Laurent polynomials in `q` with arbitrary-precision integer
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `Σ c_e q^e`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(One::is_one)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, factor: &LaurentPoly, other: &LaurentPoly) {
        for (e1, c1) in &factor.coeffs {
            for (e2, c2) in &other.coeffs {
                self.add_term(e1 + e2, c1 * c2);
            }
        }
    }

    pub fn scalar_mul(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplication by `q^shift`.
    pub fn shift(&self, shift: i64) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// `q ↦ q^{-1}`.
    pub fn bar(&self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// `f'(1) = Σ e·c_e`.
    pub fn derivative_at_one(&self) -> BigInt {
        self.coeffs.iter().map(|(e, c)| c * BigInt::from(*e)).sum()
    }

    /// Whether every coefficient is nonnegative and every exponent too.
    pub fn in_natural_polys(&self) -> bool {
        self.coeffs.iter().all(|(e, c)| *e >= 0 && !c.is_negative())
    }

    /// Given `f` with `f(q) = -f(q^{-1})`, returns the unique `p ∈ qZ[q]`
    /// with `p(q) - p(q^{-1}) = f`.
    pub fn antisym_positive_part(&self) -> Result<LaurentPoly> {
        if self.coeff(0) != BigInt::zero() || !(self + &self.bar()).coeffs.is_empty() {
            return Err(Error::NotAntisymmetric(self.to_string()));
        }
        Ok(LaurentPoly {
            coeffs: self.coeffs.range(1..).map(|(e, c)| (*e, c.clone())).collect(),
        })
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.coeffs.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        out.add_scaled(self, rhs);
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// Ascending exponents, `c q^e` with the exponent always written and the
/// constant term as a bare integer; unit coefficients are omitted.
/// Example: `-q^-1 + 2 + q^3`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.coeffs.iter().enumerate() {
            let magnitude = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *e == 0 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "q^{e}")?;
            } else {
                write!(f, "{magnitude}q^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the output of `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid Laurent polynomial {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // split into signed terms; a '-' right after '^' belongs to an exponent
        let mut terms = Vec::new();
        let mut current = String::new();
        let mut prev = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !current.is_empty() && prev != Some('^') {
                terms.push(std::mem::take(&mut current));
            }
            current.push(ch);
            prev = Some(ch);
        }
        terms.push(current);

        let mut poly = LaurentPoly::zero();
        for term in terms {
            let (negative, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term.as_str()),
            };
            let (coeff, exp) = match body.split_once("q^") {
                Some((c, e)) => {
                    let c = if c.is_empty() {
                        BigInt::one()
                    } else {
                        c.parse::<BigInt>().map_err(|_| bad())?
                    };
                    (c, e.parse::<i64>().map_err(|_| bad())?)
                }
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0),
            };
            poly.add_term(exp, if negative { -coeff } else { coeff });
        }
        Ok(poly)
    }
}

/// `(q^{2i} - q^{-2i}) / (q + q^{-1}) = Σ_{j=0}^{2i-1} (-1)^j q^{2i-1-2j}`.
pub fn even_quotient(i: i64) -> LaurentPoly {
    LaurentPoly::from_terms((0..2 * i).map(|j| (2 * i - 1 - 2 * j, if j % 2 == 0 { 1 } else { -1 })))
}

/// `(q^{2i+1} + q^{-2i-1}) / (q + q^{-1}) = Σ_{j=0}^{2i} (-1)^j q^{2i-2j}`.
pub fn odd_quotient(i: i64) -> LaurentPoly {
    LaurentPoly::from_terms((0..=2 * i).map(|j| (2 * i - 2 * j, if j % 2 == 0 { 1 } else { -1 })))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> LaurentPoly {
        LaurentPoly::q_pow(e)
    }

    #[test]
    fn arithmetic_examples() {
        let lhs = &(q(1) + q(-1)) * &(q(1) - q(-1));
        assert_eq!(lhs, q(2) - q(-2));
        let f = q(3) + LaurentPoly::constant(5);
        assert_eq!(&f + &LaurentPoly::zero(), f);
        let g = q(1) - LaurentPoly::one();
        assert_eq!(&g * &g, q(2) - LaurentPoly::constant(2) * q(1) + LaurentPoly::one());
        assert_eq!(f.scalar_mul(&BigInt::from(-2)), -(q(3) + q(3)) - LaurentPoly::constant(10));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(q(2).bar(), q(-2));
        assert_eq!((LaurentPoly::one() + q(1)).bar(), LaurentPoly::one() + q(-1));
        let f = LaurentPoly::from_terms([(3, 2), (-1, -7), (0, 1)]);
        assert_eq!(f.bar().bar(), f);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(q(2).derivative_at_one(), BigInt::from(2));
        assert_eq!(q(-1).derivative_at_one(), BigInt::from(-1));
        assert_eq!(LaurentPoly::constant(9).derivative_at_one(), BigInt::zero());
    }

    #[test]
    fn antisym_examples() {
        assert_eq!((q(2) - q(-2)).antisym_positive_part().unwrap(), q(2));
        let f = LaurentPoly::from_terms([(1, 3), (-1, -3)]);
        assert_eq!(f.antisym_positive_part().unwrap(), LaurentPoly::monomial(3, 1));
        assert!(matches!(
            (q(1) + LaurentPoly::one()).antisym_positive_part(),
            Err(Error::NotAntisymmetric(_))
        ));
        assert!((q(1) + q(-1)).antisym_positive_part().is_err());
    }

    #[test]
    fn quotient_expansions_multiply_back() {
        let denom = q(1) + q(-1);
        for i in 0..6 {
            assert_eq!(&even_quotient(i) * &denom, q(2 * i) - q(-2 * i), "even {i}");
            assert_eq!(&odd_quotient(i) * &denom, q(2 * i + 1) + q(-2 * i - 1), "odd {i}");
        }
    }

    #[test]
    fn display_and_parse() {
        let f = LaurentPoly::from_terms([(-1, -1), (0, 2), (3, 1)]);
        assert_eq!(f.to_string(), "-q^-1 + 2 + q^3");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::monomial(-3, 1).to_string(), "-3q^1");
        assert_eq!(LaurentPoly::from_terms([(2, 1), (4, -5)]).to_string(), "q^2 - 5q^4");
        for s in ["-q^-1 + 2 + q^3", "0", "-3q^1", "q^2 - 5q^4", "7", "-2q^-3 - q^-1"] {
            assert_eq!(s.parse::<LaurentPoly>().unwrap().to_string(), s);
        }
        assert!("q^".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
    }
}
