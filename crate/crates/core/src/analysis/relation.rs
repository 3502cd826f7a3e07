use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{rat, TPoly, TruncSeries};
use crate::error::{Error, Result};
use crate::umbral::Target;

/// `A*G^2 + B*G + C = 0` with `A, B, C` polynomials in `t` over the
/// catalytic variables. `A = 0` is representable so that fitted linear
/// relations can be reported; solving requires `A != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticRelation {
    a: TPoly,
    b: TPoly,
    c: TPoly,
}

impl QuadraticRelation {
    pub fn new(a: TPoly, b: TPoly, c: TPoly) -> Result<Self> {
        for p in [&b, &c] {
            if p.arity() != a.arity() {
                return Err(Error::ArityMismatch {
                    expected: a.arity(),
                    found: p.arity(),
                });
            }
        }
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegenerateRelation);
        }
        Ok(QuadraticRelation { a, b, c })
    }

    /// `B*G + C = 0`.
    pub fn linear(b: TPoly, c: TPoly) -> Result<Self> {
        Self::new(TPoly::zero(b.arity()), b, c)
    }

    pub fn a(&self) -> &TPoly {
        &self.a
    }

    pub fn b(&self) -> &TPoly {
        &self.b
    }

    pub fn c(&self) -> &TPoly {
        &self.c
    }

    pub fn arity(&self) -> usize {
        self.a.arity()
    }

    /// True when the quadratic coefficient vanishes.
    pub fn is_effectively_linear(&self) -> bool {
        self.a.is_zero()
    }

    /// t-degrees of `A`, `B`, `C` (`None` for a zero polynomial).
    pub fn degrees(&self) -> [Option<usize>; 3] {
        [self.a.degree(), self.b.degree(), self.c.degree()]
    }

    /// `A*G^2 + B*G + C`, truncated at the order of `g`.
    pub fn residual(&self, g: &TruncSeries) -> Result<TruncSeries> {
        let n = g.order();
        let ga = self.a.to_series(n).try_mul(&g.try_mul(g)?)?;
        let gb = self.b.to_series(n).try_mul(g)?;
        ga.try_add(&gb)?.try_add(&self.c.to_series(n))
    }

    /// The relation with every catalytic variable replaced by an integer.
    pub fn eval_at_integers(&self, point: &[i64]) -> Result<Self> {
        if point.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: point.len(),
            });
        }
        Ok(QuadraticRelation {
            a: self.a.eval_at_integers(point)?,
            b: self.b.eval_at_integers(point)?,
            c: self.c.eval_at_integers(point)?,
        })
    }

    /// `B^2 - 4AC`.
    pub fn discriminant(&self) -> TPoly {
        let four_ac = (&self.a * &self.c).scale(&rat(4));
        &(&self.b * &self.b) - &four_ac
    }

    /// Canonical representative of a univariate relation: the common
    /// polynomial factor of `A, B, C` removed, integer coefficients with
    /// content 1, and the lowest-degree coefficient of `A` (of `B` when `A`
    /// vanishes) positive.
    pub fn canonical(&self) -> Result<Self> {
        if self.arity() != 0 {
            return Err(Error::Usage(
                "canonical form needs a univariate relation".into(),
            ));
        }
        let mut common = TPoly::zero(0);
        for p in [&self.a, &self.b, &self.c] {
            if !p.is_zero() {
                common = common.gcd(p)?;
            }
        }
        let divide = |p: &TPoly| -> Result<TPoly> {
            let (q, r) = p.div_rem(&common)?;
            debug_assert!(r.is_zero());
            Ok(q)
        };
        let (a, b, c) = (divide(&self.a)?, divide(&self.b)?, divide(&self.c)?);
        let den = [&a, &b, &c]
            .iter()
            .fold(BigInt::one(), |acc, p| acc.lcm(&p.denominator_lcm()));
        let (a, b, c) = (
            a.scale(&BigRational::from_integer(den.clone())),
            b.scale(&BigRational::from_integer(den.clone())),
            c.scale(&BigRational::from_integer(den)),
        );
        let content = [&a, &b, &c]
            .iter()
            .fold(BigInt::zero(), |acc, p| acc.gcd(&p.numerator_gcd()));
        let pilot = if a.is_zero() { &b } else { &a };
        let lowest = pilot.scalar_coeff(pilot.valuation().expect("nonzero"));
        let mut unit = BigRational::from_integer(content).recip();
        if lowest.is_negative() {
            unit = -unit;
        }
        Ok(QuadraticRelation {
            a: a.scale(&unit),
            b: b.scale(&unit),
            c: c.scale(&unit),
        })
    }
}

impl fmt::Display for QuadraticRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.a.is_zero() {
            parts.push(format!("({})*G^2", self.a));
        }
        if !self.b.is_zero() {
            parts.push(format!("({})*G", self.b));
        }
        if !self.c.is_zero() {
            parts.push(format!("({})", self.c));
        }
        write!(f, "{} = 0", parts.join(" + "))
    }
}

/// The relations established for the three families, plain and refined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KnownRelation {
    /// Gated diagrams with all catalytic variables at 1.
    Gated,
    /// Gated diagrams in `x1, x2, x3` (left post, gap, right post widths).
    GatedRefined,
    /// Wicketed diagrams with `x = 1`.
    Wicketed,
    /// Wicketed diagrams in the top width `x`.
    WicketedRefined,
    /// Plain diagrams in the top width `x`: `(1 - t - x*t) F = x*t^2`.
    FerrersRational,
}

impl KnownRelation {
    pub const ALL: [KnownRelation; 5] = [
        KnownRelation::Gated,
        KnownRelation::GatedRefined,
        KnownRelation::Wicketed,
        KnownRelation::WicketedRefined,
        KnownRelation::FerrersRational,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            KnownRelation::Gated => "punceq",
            KnownRelation::GatedRefined => "punceq123",
            KnownRelation::Wicketed => "fdfpeq",
            KnownRelation::WicketedRefined => "fdfpeq1",
            KnownRelation::FerrersRational => "F-rational",
        }
    }

    fn aliases(self) -> &'static [&'static str] {
        match self {
            KnownRelation::Gated => &["gated"],
            KnownRelation::GatedRefined => &["gated-refined"],
            KnownRelation::Wicketed => &["wicketed"],
            KnownRelation::WicketedRefined => &["wicketed-refined"],
            KnownRelation::FerrersRational => &["ferrers", "ferrers-rational"],
        }
    }

    /// Family whose series the relation describes.
    pub fn target(self) -> Target {
        match self {
            KnownRelation::Gated | KnownRelation::GatedRefined => Target::Gated,
            KnownRelation::Wicketed | KnownRelation::WicketedRefined => Target::Wicketed,
            KnownRelation::FerrersRational => Target::Ferrers,
        }
    }

    /// Number of catalytic variables the relation keeps.
    pub fn arity(self) -> usize {
        match self {
            KnownRelation::Gated | KnownRelation::Wicketed => 0,
            KnownRelation::GatedRefined => 3,
            KnownRelation::WicketedRefined | KnownRelation::FerrersRational => 1,
        }
    }

    pub fn relation(self) -> QuadraticRelation {
        match self {
            KnownRelation::Gated => gated(),
            KnownRelation::GatedRefined => gated_refined(),
            KnownRelation::Wicketed => wicketed(),
            KnownRelation::WicketedRefined => wicketed_refined(),
            KnownRelation::FerrersRational => ferrers_rational(),
        }
    }
}

impl fmt::Display for KnownRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KnownRelation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        KnownRelation::ALL
            .into_iter()
            .find(|r| r.name() == s || r.aliases().contains(&s))
            .ok_or_else(|| {
                let names: Vec<_> = KnownRelation::ALL.iter().map(|r| r.name()).collect();
                Error::Usage(format!(
                    "unknown relation '{s}'; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// Small expression kit for writing relation coefficients.
struct Kit {
    arity: usize,
}

impl Kit {
    fn t(&self) -> TPoly {
        TPoly::t(self.arity)
    }

    fn x(&self, i: usize) -> TPoly {
        TPoly::var(self.arity, i)
    }

    fn n(&self, v: i64) -> TPoly {
        TPoly::constant(self.arity, rat(v))
    }

    fn tx(&self, i: usize) -> TPoly {
        &self.t() * &self.x(i)
    }

    fn tpow(&self, k: usize) -> TPoly {
        self.t().pow(k as u32)
    }

    fn sum(&self, terms: &[TPoly]) -> TPoly {
        terms.iter().fold(self.n(0), |acc, p| &acc + p)
    }

    fn product(&self, factors: &[TPoly]) -> TPoly {
        factors.iter().fold(self.n(1), |acc, p| &acc * p)
    }
}

fn gated() -> QuadraticRelation {
    let k = Kit { arity: 0 };
    let t = k.t();
    let one_minus_2t = &k.n(1) - &t.scale(&rat(2));
    let q = k.sum(&[k.n(1), t.scale(&rat(-3)), k.tpow(2)]);
    let a = k.product(&[k.tpow(2), one_minus_2t.pow(4), q.clone()]);
    let b = k.product(&[k.tpow(4), q, one_minus_2t.pow(2)]);
    let c = -&k.tpow(10);
    QuadraticRelation::new(a, b, c).expect("well formed")
}

fn gated_refined() -> QuadraticRelation {
    let k = Kit { arity: 3 };
    let t = k.t();
    let (x1, x2, x3) = (k.x(0), k.x(1), k.x(2));
    let lead = k.sum(&[
        x2.clone(),
        -&x3,
        &(&x3 * &(&x3 - &x2)) * &t,
        &x3 * &k.tpow(2),
    ]);
    let one_minus_x1t_t = k.sum(&[k.n(1), -&k.tx(0), -&t]);
    let one_minus_x3t_t = k.sum(&[k.n(1), -&k.tx(2), -&t]);
    let one_plus = k.sum(&[k.n(1), -&k.tx(2), t.clone()]);
    let mid = k.sum(&[k.n(1), -&k.tx(1), t.scale(&rat(-2)), k.tpow(2)]);
    let x123 = k.product(&[x1, x2, x3]);
    let a = k.product(&[
        lead,
        one_minus_x1t_t.pow(2),
        mid.clone(),
        one_minus_x3t_t.pow(2),
    ]);
    let b = k.product(&[
        k.tpow(4),
        x123.clone(),
        mid,
        one_plus,
        one_minus_x3t_t,
        one_minus_x1t_t,
    ]);
    let c = -&(&k.tpow(10) * &x123.pow(2));
    QuadraticRelation::new(a, b, c).expect("well formed")
}

fn wicketed() -> QuadraticRelation {
    let k = Kit { arity: 0 };
    let two_t_minus_1 = &k.t().scale(&rat(2)) - &k.n(1);
    let a = two_t_minus_1.pow(8);
    let b = -&(&k.tpow(6) * &two_t_minus_1.pow(4));
    let c = k.tpow(14);
    QuadraticRelation::new(a, b, c).expect("well formed")
}

fn wicketed_refined() -> QuadraticRelation {
    let k = Kit { arity: 1 };
    let t = k.t();
    let x = k.x(0);
    let t2 = k.tpow(2);
    let xt = k.tx(0);
    let xt2 = &x * &t2;
    let f1 = k.sum(&[xt.clone(), t.clone(), k.n(-1)]);
    let f2 = k.sum(&[xt2.clone(), -&t2, t.scale(&rat(2)), k.n(-1)]);
    let f3 = k.sum(&[xt2, -&t2, -&xt, -&t, k.n(1)]);
    let f4 = k.sum(&[xt, -&t, k.n(-1)]);
    let a = k.product(&[f1.pow(6), f2.clone(), f3]);
    let b = -&k.product(&[k.tpow(6), x.pow(2), f1.pow(3), f4, f2]);
    let c = -&(&k.tpow(14) * &x.pow(5));
    QuadraticRelation::new(a, b, c).expect("well formed")
}

fn ferrers_rational() -> QuadraticRelation {
    let k = Kit { arity: 1 };
    let b = k.sum(&[k.n(1), -&k.t(), -&k.tx(0)]);
    let c = -&(&k.x(0) * &k.tpow(2));
    QuadraticRelation::linear(b, c).expect("well formed")
}
