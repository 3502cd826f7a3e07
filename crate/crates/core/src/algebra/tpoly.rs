use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::CatalyticPoly;
use super::series::TruncSeries;
use crate::error::{Error, Result};

/// Polynomial in `t` whose coefficients are catalytic polynomials. Used for
/// the coefficients of polynomial relations, where nothing is truncated.
///
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TPoly {
    arity: usize,
    coeffs: Vec<CatalyticPoly>,
}

impl TPoly {
    pub fn zero(arity: usize) -> Self {
        TPoly {
            arity,
            coeffs: Vec::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigRational::one())
    }

    pub fn constant(arity: usize, c: BigRational) -> Self {
        Self::from_coeffs(arity, vec![CatalyticPoly::constant(arity, c)])
    }

    /// The monomial `t`.
    pub fn t(arity: usize) -> Self {
        Self::from_coeffs(
            arity,
            vec![CatalyticPoly::zero(arity), CatalyticPoly::one(arity)],
        )
    }

    /// The catalytic variable `i` (0-based).
    pub fn var(arity: usize, i: usize) -> Self {
        Self::from_coeffs(arity, vec![CatalyticPoly::var(arity, i)])
    }

    pub fn from_coeffs(arity: usize, coeffs: Vec<CatalyticPoly>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.arity() == arity));
        let mut p = TPoly { arity, coeffs };
        p.trim();
        p
    }

    /// Univariate polynomial from integer coefficients of `t^0, t^1, ...`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            0,
            coeffs
                .iter()
                .map(|&c| CatalyticPoly::constant(0, super::rat(c)))
                .collect(),
        )
    }

    pub fn from_rationals(coeffs: Vec<BigRational>) -> Self {
        Self::from_coeffs(
            0,
            coeffs
                .into_iter()
                .map(|c| CatalyticPoly::constant(0, c))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(CatalyticPoly::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `t`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Least power of `t` present; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeffs(&self) -> &[CatalyticPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> CatalyticPoly {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| CatalyticPoly::zero(self.arity))
    }

    /// Scalar coefficient of `t^k` for a univariate polynomial.
    pub fn scalar_coeff(&self, k: usize) -> BigRational {
        self.coeff(k)
            .as_scalar()
            .expect("univariate polynomial coefficient")
    }

    pub fn scalar_coeffs(&self) -> Vec<BigRational> {
        (0..self.coeffs.len())
            .map(|k| self.scalar_coeff(k))
            .collect()
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::from_coeffs(
            self.arity,
            (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect(),
        ))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.arity));
        }
        let mut out =
            vec![CatalyticPoly::zero(self.arity); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_product(a, b);
            }
        }
        Ok(Self::from_coeffs(self.arity, out))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.arity, self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.arity);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![CatalyticPoly::zero(self.arity); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(self.arity, coeffs)
    }

    /// Divides by `t^k`, which must divide exactly.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::Usage(format!(
                "polynomial is not divisible by t^{k}"
            )));
        }
        Ok(Self::from_coeffs(
            self.arity,
            self.coeffs.iter().skip(k).cloned().collect(),
        ))
    }

    pub fn eval_at(&self, point: &[BigRational]) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.eval(point).map(|v| CatalyticPoly::constant(0, v)))
            .collect::<Result<_>>()?;
        Ok(Self::from_coeffs(0, coeffs))
    }

    pub fn eval_at_integers(&self, point: &[i64]) -> Result<Self> {
        let pt: Vec<BigRational> = point.iter().map(|&v| super::rat(v)).collect();
        self.eval_at(&pt)
    }

    /// The polynomial viewed as a series truncated at `order`.
    pub fn to_series(&self, order: usize) -> TruncSeries {
        TruncSeries::from_coeffs(self.arity, order, self.coeffs.clone())
            .expect("coefficients share the polynomial's arity")
    }

    fn require_univariate(&self) -> Result<()> {
        if self.arity != 0 {
            return Err(Error::Usage(
                "operation needs a univariate polynomial in t".into(),
            ));
        }
        Ok(())
    }

    /// Leading scalar coefficient of a nonzero univariate polynomial.
    pub fn leading_coeff(&self) -> Option<BigRational> {
        self.coeffs.last().and_then(CatalyticPoly::as_scalar)
    }

    /// Euclidean division over the rationals (univariate only).
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.require_univariate()?;
        divisor.require_univariate()?;
        let dlead = divisor.leading_coeff().ok_or(Error::Singular)?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.scalar_coeffs();
        if rem.len() <= ddeg {
            return Ok((Self::zero(0), self.clone()));
        }
        let dcoeffs = divisor.scalar_coeffs();
        let mut quot = vec![BigRational::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + ddeg] / &dlead;
            if q.is_zero() {
                continue;
            }
            for (j, d) in dcoeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        rem.truncate(ddeg);
        Ok((Self::from_rationals(quot), Self::from_rationals(rem)))
    }

    /// Monic greatest common divisor over the rationals (univariate only).
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.require_univariate()?;
        other.require_univariate()?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(match a.leading_coeff() {
            Some(lc) => a.scale(&lc.recip()),
            None => a,
        })
    }

    /// Least common multiple of the denominators of a univariate polynomial.
    pub(crate) fn denominator_lcm(&self) -> BigInt {
        self.scalar_coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Gcd of the numerators of a univariate polynomial.
    pub(crate) fn numerator_gcd(&self) -> BigInt {
        self.scalar_coeffs()
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()))
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: Self) -> TPoly {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: Self) -> TPoly {
        self.try_add(&-rhs).expect("polynomial subtraction")
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: Self) -> TPoly {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly::from_coeffs(self.arity, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for TPoly {
    /// Univariate polynomials print as `256*t^8 - 1024*t^7 + ... + 1`;
    /// catalytic coefficients are parenthesised.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, p) in self.coeffs.iter().enumerate().rev() {
            if p.is_zero() {
                continue;
            }
            let tpow = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            match p.as_scalar() {
                Some(c) => {
                    let sep = match (first, c.is_negative()) {
                        (true, true) => "-",
                        (true, false) => "",
                        (false, true) => " - ",
                        (false, false) => " + ",
                    };
                    let abs = c.abs();
                    match (abs.is_one(), tpow.is_empty()) {
                        (true, false) => write!(f, "{sep}{tpow}")?,
                        (_, true) => write!(f, "{sep}{abs}")?,
                        _ => write!(f, "{sep}{abs}*{tpow}")?,
                    }
                }
                None => {
                    let sep = if first { "" } else { " + " };
                    if tpow.is_empty() {
                        write!(f, "{sep}({p})")?;
                    } else {
                        write!(f, "{sep}({p})*{tpow}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_power() {
        // (2t - 1)^2 = 4t^2 - 4t + 1
        let p = TPoly::from_ints(&[-1, 2]).pow(2);
        assert_eq!(p, TPoly::from_ints(&[1, -4, 4]));
        assert_eq!(p.to_string(), "4*t^2 - 4*t + 1");
    }

    #[test]
    fn gcd_extracts_common_factor() {
        let common = TPoly::from_ints(&[1, -2]);
        let a = &common * &TPoly::from_ints(&[0, 0, 1]);
        let b = &common * &TPoly::from_ints(&[3, 1]);
        let g = a.gcd(&b).unwrap();
        // monic version of 1 - 2t
        assert_eq!(g, common.scale(&crate::algebra::ratio(-1, 2)));
    }

    #[test]
    fn division_remainder() {
        let (q, r) = TPoly::from_ints(&[1, 0, 1])
            .div_rem(&TPoly::from_ints(&[1, 1]))
            .unwrap();
        assert_eq!(q, TPoly::from_ints(&[-1, 1]));
        assert_eq!(r, TPoly::from_ints(&[2]));
    }

    #[test]
    fn valuation_and_degree() {
        let p = TPoly::from_ints(&[0, 0, 3, 1]);
        assert_eq!(p.valuation(), Some(2));
        assert_eq!(p.degree(), Some(3));
        assert_eq!(TPoly::zero(0).degree(), None);
    }
}
