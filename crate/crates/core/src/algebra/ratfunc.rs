//! Rational functions in `t`, kept unreduced.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::laurent::LaurentPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// `numerator / denominator`. Not reduced to lowest terms; equality is
/// decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    numerator: LaurentPoly,
    denominator: LaurentPoly,
}

impl RationalFunction {
    pub fn new(numerator: LaurentPoly, denominator: LaurentPoly) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Self {
            numerator,
            denominator,
        })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            numerator: p,
            denominator: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            numerator: self.numerator.scale(c),
            denominator: self.denominator.clone(),
        }
    }

    pub fn shift(&self, k: i64) -> Self {
        Self {
            numerator: self.numerator.shift(k),
            denominator: self.denominator.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.denominator.clone(), self.numerator.clone())
    }

    /// The Laurent polynomial this equals, when the division is exact.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.numerator.div_exact(&self.denominator)
    }

    /// `f(1/t)`.
    pub fn invert_variable(&self) -> Self {
        Self {
            numerator: self.numerator.invert_variable(),
            denominator: self.denominator.invert_variable(),
        }
    }

    /// Laurent expansion around `t = 0`, through the `t^max` term.
    pub fn expand(&self, max: i64) -> LaurentPoly {
        let dmin = self.denominator.min_exp().unwrap();
        let d = self.denominator.shift(-dmin);
        let n = self.numerator.shift(-dmin);
        let Some(nmin) = n.min_exp() else {
            return LaurentPoly::zero();
        };
        if max < nmin {
            return LaurentPoly::zero();
        }
        let inv = d
            .series_inverse((max - nmin) as usize)
            .expect("shifted denominator has nonzero constant term");
        (&n * &inv).truncate(max)
    }

    /// Exact value at `t = 1` after cancelling common `(1 - t)` factors.
    pub fn limit_at_one(&self) -> Result<Rational> {
        let f = LaurentPoly::one_minus_t_pow(1);
        let mut n = self.numerator.clone();
        let mut d = self.denominator.clone();
        while d.value_at_one() == Rational::from_integer(0.into()) {
            d = d
                .div_exact(&f)
                .ok_or(Error::ExactDivisionFailed("denominator by (1 - t)"))?;
            n = n
                .div_exact(&f)
                .ok_or(Error::Inconsistent("limit at t = 1 diverges".into()))?;
        }
        Ok(n.value_at_one() / d.value_at_one())
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl Eq for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.to_laurent() {
            write!(f, "{p}")
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.denominator == rhs.denominator {
            return RationalFunction {
                numerator: &self.numerator + &rhs.numerator,
                denominator: self.denominator.clone(),
            };
        }
        RationalFunction {
            numerator: &(&self.numerator * &rhs.denominator)
                + &(&rhs.numerator * &self.denominator),
            denominator: &self.denominator * &rhs.denominator,
        }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction {
            numerator: &self.numerator * &rhs.numerator,
            denominator: &self.denominator * &rhs.denominator,
        }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn p(start: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(start, c)
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let a = RationalFunction::new(p(0, &[1, 1]), p(0, &[1, 0, -1])).unwrap();
        let b = RationalFunction::new(p(0, &[1]), p(0, &[1, -1])).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, RationalFunction::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFunction::new(p(0, &[1]), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn expansion_of_invariant_series() {
        let f = RationalFunction::new(
            LaurentPoly::one(),
            &LaurentPoly::one_minus_t_pow(2) * &LaurentPoly::one_minus_t_pow(3),
        )
        .unwrap();
        let e = f.expand(7);
        assert_eq!(e.dense(0, 7), [1, 0, 1, 1, 1, 1, 2, 1].map(int).to_vec());
    }

    #[test]
    fn limit_cancels_common_factors() {
        // (1 - t^3)^2 / (1 - t)^2 -> 9
        let f = RationalFunction::new(
            LaurentPoly::one_minus_t_pow(3).pow(2),
            LaurentPoly::one_minus_t_pow(1).pow(2),
        )
        .unwrap();
        assert_eq!(f.limit_at_one().unwrap(), int(9));
    }
}
