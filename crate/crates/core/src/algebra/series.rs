use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{pad, CatalyticPoly, Exponents, MAX_ARITY};
use crate::error::{Error, Result};

/// Power series in `t` truncated at `order` (inclusive), whose `t^k`
/// coefficient is a [`CatalyticPoly`] of a fixed arity.
///
/// Arity 0 is a plain series in `t` with rational coefficients; the umbral
/// pipelines use arity 1 (`x`) and arity 3 (`x1, x2, x3`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    order: usize,
    arity: usize,
    coeffs: Vec<CatalyticPoly>,
}

impl TruncSeries {
    pub fn zero(arity: usize, order: usize) -> Self {
        TruncSeries {
            order,
            arity,
            coeffs: vec![CatalyticPoly::zero(arity); order + 1],
        }
    }

    pub fn one(arity: usize, order: usize) -> Self {
        Self::constant(arity, BigRational::one(), order)
    }

    pub fn constant(arity: usize, c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(arity, order);
        s.coeffs[0] = CatalyticPoly::constant(arity, c);
        s
    }

    /// `c * t^t_degree * x^exps`, dropped entirely if `t_degree > order`.
    pub fn monomial(c: BigRational, t_degree: usize, exps: &[u32], order: usize) -> Result<Self> {
        if exps.len() > MAX_ARITY {
            return Err(Error::UnsupportedArity(exps.len()));
        }
        let mut s = Self::zero(exps.len(), order);
        s.add_term(t_degree, pad(exps), c);
        Ok(s)
    }

    /// Builds a series from its leading coefficients; missing ones are zero and
    /// extra ones beyond `order` are discarded.
    pub fn from_coeffs(arity: usize, order: usize, coeffs: Vec<CatalyticPoly>) -> Result<Self> {
        let mut s = Self::zero(arity, order);
        for (k, c) in coeffs.into_iter().enumerate().take(order + 1) {
            if c.arity() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: c.arity(),
                });
            }
            s.coeffs[k] = c;
        }
        Ok(s)
    }

    /// Arity-0 series from scalar coefficients of `t^0, t^1, ...`.
    pub fn from_scalars<I>(order: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = BigRational>,
    {
        let mut s = Self::zero(0, order);
        for (k, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[k] = CatalyticPoly::constant(0, c);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn coeff(&self, k: usize) -> &CatalyticPoly {
        assert!(
            k <= self.order,
            "t^{k} lies beyond truncation order {}",
            self.order
        );
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[CatalyticPoly] {
        &self.coeffs
    }

    /// The `t^k` coefficient of a series without catalytic content.
    pub fn scalar_coeff(&self, k: usize) -> BigRational {
        self.coeff(k)
            .as_scalar()
            .unwrap_or_else(|| panic!("t^{k} coefficient is not a scalar"))
    }

    /// Scalar coefficients `t^0..=t^order`; panics on catalytic content.
    pub fn scalar_coeffs(&self) -> Vec<BigRational> {
        (0..=self.order).map(|k| self.scalar_coeff(k)).collect()
    }

    /// Accumulates `c * t^k * x^exps`; terms beyond the order are truncated.
    pub fn add_term(&mut self, k: usize, exps: Exponents, c: BigRational) {
        if k <= self.order {
            self.coeffs[k].add_term(exps, c);
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncSeries {
            order,
            arity: self.arity,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Least `k` with a nonzero `t^k` coefficient.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CatalyticPoly::is_zero)
    }

    /// Number of stored monomials across all `t`-degrees.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().map(CatalyticPoly::len).sum()
    }

    /// Iterates `(t_degree, exponents, coefficient)` over every stored term.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Exponents, &BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .flat_map(|(k, p)| p.terms().map(move |(e, c)| (k, e, c)))
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
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] + &other.coeffs[k])
            .collect();
        Ok(TruncSeries {
            order,
            arity: self.arity,
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Cauchy product truncated at the smaller of the two orders.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let order = self.order.min(other.order);
        let mut out = Self::zero(self.arity, order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j].add_product(&self.coeffs[i], &other.coeffs[j]);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncSeries {
            order: self.order,
            arity: self.arity,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Multiplies every coefficient by a catalytic polynomial.
    pub fn mul_poly(&self, p: &CatalyticPoly) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.try_mul(p))
            .collect::<Result<_>>()?;
        Ok(TruncSeries {
            order: self.order,
            arity: self.arity,
            coeffs,
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.arity, self.order);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by `t^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut out = Self::zero(self.arity, self.order);
        for i in 0..=self.order {
            if i + k > self.order {
                break;
            }
            out.coeffs[i + k] = self.coeffs[i].clone();
        }
        out
    }

    /// Divides by `t^k`; the order drops by `k`. Fails unless the first `k`
    /// coefficients vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order {
            return Err(Error::Usage(format!(
                "cannot divide a series of order {} by t^{k}",
                self.order
            )));
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::Usage(format!("series is not divisible by t^{k}")));
        }
        Ok(TruncSeries {
            order: self.order - k,
            arity: self.arity,
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// `sum_{k >= 0} (c * t^t_degree * x^exps)^k` truncated at `order`.
    pub fn geom(c: BigRational, t_degree: usize, exps: &[u32], order: usize) -> Result<Self> {
        if t_degree == 0 {
            return Err(Error::NonConvergent);
        }
        if exps.len() > MAX_ARITY {
            return Err(Error::UnsupportedArity(exps.len()));
        }
        let base = pad(exps);
        let mut out = Self::zero(exps.len(), order);
        let mut coeff = BigRational::one();
        for k in 0..=order / t_degree {
            let e = [base[0] * k as u32, base[1] * k as u32, base[2] * k as u32];
            out.add_term(k * t_degree, e, coeff.clone());
            coeff *= &c;
        }
        Ok(out)
    }

    /// Multiplicative inverse; the constant term must be a nonzero scalar.
    pub fn invert(&self) -> Result<Self> {
        let c0 = match self.coeffs[0].as_scalar() {
            Some(c) if !c.is_zero() => c,
            _ => return Err(Error::Singular),
        };
        let inv_c0 = c0.recip();
        let mut out = Self::zero(self.arity, self.order);
        out.coeffs[0] = CatalyticPoly::constant(self.arity, inv_c0.clone());
        for k in 1..=self.order {
            let mut acc = CatalyticPoly::zero(self.arity);
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc.add_product(&self.coeffs[j], &out.coeffs[k - j]);
            }
            out.coeffs[k] = acc.scale(&-inv_c0.clone());
        }
        Ok(out)
    }

    /// Square root on the branch with constant term `+1`.
    pub fn sqrt(&self) -> Result<Self> {
        match self.coeffs[0].as_scalar() {
            Some(c) if c.is_one() => {}
            _ => {
                return Err(Error::UnsupportedBranch(
                    "square root needs constant term exactly 1".into(),
                ))
            }
        }
        let half = BigRational::new(1.into(), 2.into());
        let mut out = Self::zero(self.arity, self.order);
        out.coeffs[0] = CatalyticPoly::one(self.arity);
        for k in 1..=self.order {
            // s_k = 2 r_k + sum_{j=1}^{k-1} r_j r_{k-j}
            let mut acc = self.coeffs[k].clone();
            let mut cross = CatalyticPoly::zero(self.arity);
            for j in 1..k {
                cross.add_product(&out.coeffs[j], &out.coeffs[k - j]);
            }
            acc = &acc - &cross;
            out.coeffs[k] = acc.scale(&half);
        }
        Ok(out)
    }

    /// Applies a variable substitution; images carrying `t` raise the degree
    /// and anything pushed past the order is discarded.
    pub fn substitute(&self, sub: &Substitution) -> Result<Self> {
        if sub.images.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: sub.images.len(),
            });
        }
        let mut out = Self::zero(sub.target_arity, self.order);
        for (k, e, c) in self.terms() {
            let mut t_deg = k;
            let mut coeff = c.clone();
            let mut exps = [0u32; MAX_ARITY];
            for (img, &power) in sub.images.iter().zip(e.iter()) {
                if power == 0 {
                    continue;
                }
                match img {
                    Image::Scalar(v) => coeff *= num_traits::pow(v.clone(), power as usize),
                    Image::Monomial {
                        coeff: m,
                        t_degree,
                        var,
                        power: vp,
                    } => {
                        coeff *= num_traits::pow(m.clone(), power as usize);
                        t_deg += t_degree * power as usize;
                        if let Some(j) = var {
                            exps[*j] += vp * power;
                        }
                    }
                }
            }
            if t_deg <= self.order {
                out.add_term(t_deg, exps, coeff);
            }
        }
        Ok(out)
    }

    /// Evaluates every catalytic variable at a rational point, giving a plain
    /// series in `t`.
    pub fn eval_at(&self, point: &[BigRational]) -> Result<Self> {
        let images = point.iter().cloned().map(Image::Scalar).collect();
        self.substitute(&Substitution::new(0, images)?)
    }

    pub fn eval_at_integers(&self, point: &[i64]) -> Result<Self> {
        let pt: Vec<BigRational> = point.iter().map(|&v| super::rat(v)).collect();
        self.eval_at(&pt)
    }

    /// All catalytic variables set to 1.
    pub fn specialize_to_one(&self) -> Self {
        let ones = vec![1i64; self.arity];
        self.eval_at_integers(&ones)
            .expect("point has the series' arity")
    }

    /// Every `t^k` coefficient must have total catalytic degree at most `k`.
    pub fn check_width_bound(&self) -> Result<()> {
        for (k, p) in self.coeffs.iter().enumerate() {
            if let Some(d) = p.total_degree() {
                if d as usize > k {
                    return Err(Error::WidthBound {
                        t_degree: k,
                        degree: d,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Image of one catalytic variable under [`TruncSeries::substitute`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Image {
    Scalar(BigRational),
    /// `coeff * t^t_degree * y_var^power`, where `y` are the target variables.
    Monomial {
        coeff: BigRational,
        t_degree: usize,
        var: Option<usize>,
        power: u32,
    },
}

impl Image {
    /// The target variable `y_i` itself.
    pub fn var(i: usize) -> Self {
        Image::Monomial {
            coeff: BigRational::one(),
            t_degree: 0,
            var: Some(i),
            power: 1,
        }
    }

    /// `t * y_i`.
    pub fn t_times_var(i: usize) -> Self {
        Image::Monomial {
            coeff: BigRational::one(),
            t_degree: 1,
            var: Some(i),
            power: 1,
        }
    }

    pub fn integer(v: i64) -> Self {
        Image::Scalar(super::rat(v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    target_arity: usize,
    images: Vec<Image>,
}

impl Substitution {
    pub fn new(target_arity: usize, images: Vec<Image>) -> Result<Self> {
        if target_arity > MAX_ARITY {
            return Err(Error::UnsupportedArity(target_arity));
        }
        for img in &images {
            if let Image::Monomial { var: Some(j), .. } = img {
                if *j >= target_arity {
                    return Err(Error::Usage(format!(
                        "substitution targets variable {j} but target arity is {target_arity}"
                    )));
                }
            }
        }
        Ok(Substitution {
            target_arity,
            images,
        })
    }

    pub fn identity(arity: usize) -> Self {
        Substitution {
            target_arity: arity,
            images: (0..arity).map(Image::var).collect(),
        }
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: Self) -> TruncSeries {
        self.try_add(rhs).expect("series addition")
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: Self) -> TruncSeries {
        self.try_sub(rhs).expect("series subtraction")
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: Self) -> TruncSeries {
        self.try_mul(rhs).expect("series multiplication")
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            order: self.order,
            arity: self.arity,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let tpow = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if let Some(c) = p.as_scalar() {
                let sep = if first {
                    if c.is_negative() {
                        "-"
                    } else {
                        ""
                    }
                } else if c.is_negative() {
                    " - "
                } else {
                    " + "
                };
                let abs = c.abs();
                match (abs.is_one(), tpow.is_empty()) {
                    (true, false) => write!(f, "{sep}{tpow}")?,
                    (_, true) => write!(f, "{sep}{abs}")?,
                    _ => write!(f, "{sep}{abs}*{tpow}")?,
                }
            } else {
                let sep = if first { "" } else { " + " };
                if tpow.is_empty() {
                    write!(f, "{sep}({p})")?;
                } else {
                    write!(f, "{sep}({p})*{tpow}")?;
                }
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn scalars(s: &TruncSeries) -> Vec<i64> {
        s.scalar_coeffs()
            .iter()
            .map(|c| c.to_integer().try_into().unwrap())
            .collect()
    }

    fn t_poly(order: usize, coeffs: &[i64]) -> TruncSeries {
        TruncSeries::from_scalars(order, coeffs.iter().map(|&c| rat(c)))
    }

    #[test]
    fn geometric_expansions() {
        let g = TruncSeries::geom(rat(1), 1, &[1], 4).unwrap();
        for k in 0..=4 {
            assert_eq!(
                g.coeff(k),
                &CatalyticPoly::monomial(&[k as u32], rat(1)).unwrap()
            );
        }
        assert_eq!(
            scalars(&TruncSeries::geom(rat(2), 1, &[], 3).unwrap()),
            [1, 2, 4, 8]
        );
        assert_eq!(
            scalars(&TruncSeries::geom(rat(1), 2, &[], 5).unwrap()),
            [1, 0, 1, 0, 1, 0]
        );
    }

    #[test]
    fn geometric_rejects_constant_monomial() {
        assert_eq!(
            TruncSeries::geom(rat(1), 0, &[1], 4),
            Err(Error::NonConvergent)
        );
    }

    #[test]
    fn square_of_t_over_one_minus_two_t() {
        let g = TruncSeries::geom(rat(2), 1, &[], 4).unwrap().shift_up(1);
        assert_eq!(scalars(&(&g * &g)), [0, 0, 1, 4, 12]);
    }

    #[test]
    fn multiplicative_identity_and_negation() {
        let s = TruncSeries::geom(rat(1), 1, &[2], 6).unwrap();
        assert_eq!(&s * &TruncSeries::one(1, 6), s);
        assert!((&s + &s.scale(&rat(-1))).is_zero());
    }

    #[test]
    fn product_order_is_minimum() {
        let a = TruncSeries::one(0, 3);
        let b = TruncSeries::one(0, 7);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!((&a + &b).order(), 3);
    }

    #[test]
    fn invert_one_minus_two_t() {
        let s = t_poly(4, &[1, -2]);
        assert_eq!(scalars(&s.invert().unwrap()), [1, 2, 4, 8, 16]);
        assert_eq!(
            TruncSeries::one(0, 3).invert().unwrap(),
            TruncSeries::one(0, 3)
        );
    }

    #[test]
    fn invert_with_catalytic_content() {
        // 1 - t - x t
        let mut s = TruncSeries::one(1, 2);
        s.add_term(1, [0; 3], rat(-1));
        s.add_term(1, [1, 0, 0], rat(-1));
        let inv = s.invert().unwrap();
        let one_plus_x = &CatalyticPoly::one(1) + &CatalyticPoly::var(1, 0);
        assert_eq!(inv.coeff(1), &one_plus_x);
        assert_eq!(inv.coeff(2), &one_plus_x.pow(2));
        assert_eq!(&s * &inv, TruncSeries::one(1, 2));
    }

    #[test]
    fn invert_rejects_singular_constant() {
        assert_eq!(t_poly(3, &[0, 1]).invert(), Err(Error::Singular));
        let mut s = TruncSeries::one(1, 3);
        s.add_term(0, [1, 0, 0], rat(1));
        assert_eq!(s.invert(), Err(Error::Singular));
    }

    #[test]
    fn sqrt_of_one_minus_four_t_squared() {
        let s = t_poly(6, &[1, 0, -4]);
        let r = s.sqrt().unwrap();
        assert_eq!(scalars(&r), [1, 0, -2, 0, -2, 0, -4]);
        assert_eq!(&r * &r, s);
        assert_eq!(
            TruncSeries::one(0, 4).sqrt().unwrap(),
            TruncSeries::one(0, 4)
        );
    }

    #[test]
    fn catalan_from_sqrt() {
        let r = t_poly(8, &[1, 0, -4]).sqrt().unwrap();
        let half = crate::algebra::ratio(1, 2);
        let c = (&TruncSeries::one(0, 8) - &r).scale(&half);
        assert_eq!(scalars(&c), [0, 0, 1, 0, 1, 0, 2, 0, 5]);
    }

    #[test]
    fn sqrt_rejects_other_constants() {
        assert!(matches!(
            t_poly(3, &[4, 1]).sqrt(),
            Err(Error::UnsupportedBranch(_))
        ));
    }

    #[test]
    fn close_wicket_substitution_on_monomial() {
        let s = TruncSeries::monomial(rat(1), 3, &[1, 1, 1], 8).unwrap();
        let sub = Substitution::new(1, vec![Image::var(0), Image::t_times_var(0), Image::var(0)])
            .unwrap();
        let out = s.substitute(&sub).unwrap();
        assert_eq!(out, TruncSeries::monomial(rat(1), 4, &[3], 8).unwrap());
    }

    #[test]
    fn identity_substitution() {
        let s = TruncSeries::geom(rat(3), 1, &[1, 2, 0], 5).unwrap();
        assert_eq!(s.substitute(&Substitution::identity(3)).unwrap(), s);
    }

    #[test]
    fn substitution_truncates_raised_degrees() {
        let s = TruncSeries::monomial(rat(1), 2, &[0, 5, 0], 4).unwrap();
        let sub = Substitution::new(1, vec![Image::var(0), Image::t_times_var(0), Image::var(0)])
            .unwrap();
        assert!(s.substitute(&sub).unwrap().is_zero());
    }

    #[test]
    fn eval_at_points() {
        let s = TruncSeries::monomial(rat(1), 2, &[1, 1, 1], 4).unwrap();
        assert_eq!(
            scalars(&s.eval_at_integers(&[1, 1, 1]).unwrap()),
            [0, 0, 1, 0, 0]
        );
        let mut d = TruncSeries::zero(2, 1);
        d.add_term(0, [1, 0, 0], rat(1));
        d.add_term(0, [0, 1, 0], rat(-1));
        assert!(d.eval_at_integers(&[3, 3]).unwrap().is_zero());
    }

    #[test]
    fn width_bound_detects_overwide_terms() {
        let ok = TruncSeries::monomial(rat(1), 3, &[1, 1, 1], 5).unwrap();
        assert!(ok.check_width_bound().is_ok());
        let bad = TruncSeries::monomial(rat(1), 2, &[1, 1, 1], 5).unwrap();
        assert_eq!(
            bad.check_width_bound(),
            Err(Error::WidthBound {
                t_degree: 2,
                degree: 3
            })
        );
    }

    #[test]
    fn shift_round_trip() {
        let s = t_poly(5, &[1, 2, 3]);
        let up = s.shift_up(2);
        assert_eq!(scalars(&up), [0, 0, 1, 2, 3, 0]);
        assert_eq!(up.shift_down(2).unwrap(), s.truncate(3));
        assert!(s.shift_down(1).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(
            t_poly(3, &[1, -2, 0, 5]).to_string(),
            "1 - 2*t + 5*t^3 + O(t^4)"
        );
    }
}
