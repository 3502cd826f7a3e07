use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub const MAX_ARITY: usize = 3;

/// Exponent vector; slots at or beyond the owning polynomial's arity are zero.
pub type Exponents = [u32; MAX_ARITY];

/// Sparse polynomial in up to three catalytic variables with rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CatalyticPoly {
    arity: usize,
    terms: BTreeMap<Exponents, BigRational>,
}

impl CatalyticPoly {
    pub fn zero(arity: usize) -> Self {
        assert!(arity <= MAX_ARITY, "arity {arity} exceeds {MAX_ARITY}");
        CatalyticPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigRational::one())
    }

    pub fn constant(arity: usize, c: BigRational) -> Self {
        let mut p = Self::zero(arity);
        p.add_term([0; MAX_ARITY], c);
        p
    }

    /// `c * x^exps`. `exps.len()` fixes the arity.
    pub fn monomial(exps: &[u32], c: BigRational) -> Result<Self> {
        if exps.len() > MAX_ARITY {
            return Err(Error::UnsupportedArity(exps.len()));
        }
        let mut p = Self::zero(exps.len());
        p.add_term(pad(exps), c);
        Ok(p)
    }

    /// The `i`-th catalytic variable (0-based) as a polynomial.
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(
            i < arity,
            "variable index {i} out of range for arity {arity}"
        );
        let mut e = [0; MAX_ARITY];
        e[i] = 1;
        let mut p = Self::zero(arity);
        p.add_term(e, BigRational::one());
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms
            .get(&pad(exps))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Largest total degree among stored monomials, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The value if this polynomial has no catalytic content.
    pub fn as_scalar(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&[0; MAX_ARITY]).cloned(),
            _ => None,
        }
    }

    /// Accumulates `c * x^exps`, pruning a cancelled coefficient.
    pub fn add_term(&mut self, exps: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        debug_assert!(exps[self.arity..].iter().all(|&e| e == 0));
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
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
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(add_exps(ea, eb), ca * cb);
            }
        }
        Ok(out)
    }

    /// `self += a * b` without intermediate allocation.
    pub(crate) fn add_product(&mut self, a: &Self, b: &Self) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                self.add_term(add_exps(ea, eb), ca * cb);
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        CatalyticPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.arity);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates every variable at the given point.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: point.len(),
            });
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (x, &k) in point.iter().zip(e.iter()) {
                v *= num_traits::pow(x.clone(), k as usize);
            }
            acc += v;
        }
        Ok(acc)
    }
}

pub(crate) fn pad(exps: &[u32]) -> Exponents {
    let mut e = [0; MAX_ARITY];
    e[..exps.len()].copy_from_slice(exps);
    e
}

fn add_exps(a: &Exponents, b: &Exponents) -> Exponents {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

impl Add for &CatalyticPoly {
    type Output = CatalyticPoly;
    fn add(self, rhs: Self) -> CatalyticPoly {
        self.try_add(rhs).expect("catalytic polynomial addition")
    }
}

impl Sub for &CatalyticPoly {
    type Output = CatalyticPoly;
    fn sub(self, rhs: Self) -> CatalyticPoly {
        self.try_sub(rhs).expect("catalytic polynomial subtraction")
    }
}

impl Mul for &CatalyticPoly {
    type Output = CatalyticPoly;
    fn mul(self, rhs: Self) -> CatalyticPoly {
        self.try_mul(rhs)
            .expect("catalytic polynomial multiplication")
    }
}

impl Neg for &CatalyticPoly {
    type Output = CatalyticPoly;
    fn neg(self) -> CatalyticPoly {
        CatalyticPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl fmt::Display for CatalyticPoly {
    /// Highest total degree first, e.g. `x1^2 - 3*x2 + 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = super::var_names(self.arity);
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then(b.cmp(a))
        });
        for (i, (e, c)) in ordered.into_iter().enumerate() {
            let mono: Vec<String> = names
                .iter()
                .zip(e.iter())
                .filter(|(_, &k)| k > 0)
                .map(|(n, &k)| {
                    if k == 1 {
                        n.clone()
                    } else {
                        format!("{n}^{k}")
                    }
                })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn x(i: usize) -> CatalyticPoly {
        CatalyticPoly::var(3, i)
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(0) + &x(1)) * &(&x(0) - &x(1));
        let expected = &x(0).pow(2) - &x(1).pow(2);
        assert_eq!(p, expected);
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn multiplying_by_zero_empties() {
        let p = &x(0) + &x(2);
        assert!((&p * &CatalyticPoly::zero(3)).is_zero());
    }

    #[test]
    fn cancellation_prunes() {
        let a = CatalyticPoly::monomial(&[1], rat(2)).unwrap();
        let b = CatalyticPoly::monomial(&[1], rat(-2)).unwrap();
        let s = &a + &b;
        assert!(s.is_zero());
        assert_eq!(s.terms().count(), 0);
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = CatalyticPoly::one(1);
        let b = CatalyticPoly::one(3);
        assert_eq!(
            a.try_mul(&b),
            Err(Error::ArityMismatch {
                expected: 1,
                found: 3
            })
        );
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn eval_symmetric_difference() {
        let p = &CatalyticPoly::var(2, 0) - &CatalyticPoly::var(2, 1);
        assert_eq!(p.eval(&[rat(3), rat(3)]).unwrap(), rat(0));
    }

    #[test]
    fn display_orders_by_degree() {
        let p = &(&x(0).pow(2) - &x(1).scale(&rat(3))) + &CatalyticPoly::constant(3, rat(1));
        assert_eq!(p.to_string(), "x1^2 - 3*x2 + 1");
    }
}
