//! Scalars depending on the reflection parameters `c_s` (short roots) and
//! `c_l` (long roots).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{rational, MultiPoly, Rational};
use crate::error::{Error, Result};
use crate::root_system::LengthClass;

const NAMES: [&str; 2] = ["c_s", "c_l"];

/// Polynomial in `c_s`, `c_l` with rational coefficients. Simply-laced
/// types only ever mention `c_s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamScalar(MultiPoly);

impl ParamScalar {
    pub fn zero() -> Self {
        Self(MultiPoly::zero(2))
    }

    pub fn one() -> Self {
        Self(MultiPoly::one(2))
    }

    pub fn constant(c: Rational) -> Self {
        Self(MultiPoly::constant(2, c))
    }

    pub fn int(c: i64) -> Self {
        Self::constant(rational::int(c))
    }

    /// The parameter attached to roots of the given class.
    pub fn param(class: LengthClass) -> Self {
        match class {
            LengthClass::Short => Self(MultiPoly::var(2, 0)),
            LengthClass::Long => Self(MultiPoly::var(2, 1)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.0.as_constant()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self(self.0.scale(k))
    }

    pub fn add_scaled(&mut self, other: &ParamScalar, k: &Rational) {
        self.0.add_scaled(&other.0, k);
    }

    /// Substitutes numeric parameter values.
    pub fn eval(&self, c: &Params) -> Rational {
        self.0.eval(&[c.short.clone(), c.long.clone()])
    }

    /// Whether the long-root parameter appears.
    pub fn mentions_long(&self) -> bool {
        self.0.terms().any(|(m, _)| m[1] > 0)
    }

    /// Coefficient of `c_s^a c_l^b`.
    pub fn coeff(&self, a: u32, b: u32) -> Rational {
        self.0.coeff(&[a, b])
    }

    pub fn as_poly(&self) -> &MultiPoly {
        &self.0
    }

    /// Writes `c` for `c_s` when `simply_laced`.
    pub fn display(&self, simply_laced: bool) -> String {
        if simply_laced {
            self.0.fmt_with(&["c", "c_l"])
        } else {
            self.0.fmt_with(&NAMES)
        }
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.fmt_with(&NAMES))
    }
}

impl Add for &ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: &ParamScalar) -> ParamScalar {
        ParamScalar(&self.0 + &rhs.0)
    }
}

impl Sub for &ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: &ParamScalar) -> ParamScalar {
        ParamScalar(&self.0 - &rhs.0)
    }
}

impl Mul for &ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: &ParamScalar) -> ParamScalar {
        ParamScalar(&self.0 * &rhs.0)
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar(-&self.0)
    }
}

/// Numeric values of `c` on short and long roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub short: Rational,
    pub long: Rational,
}

impl Params {
    pub fn new(short: Rational, long: Rational) -> Self {
        Self { short, long }
    }

    pub fn uniform(c: Rational) -> Self {
        Self {
            short: c.clone(),
            long: c,
        }
    }

    /// `c = (1 + m h)/h` on every root.
    pub fn shifted(m: i64, h: u32) -> Self {
        Self::uniform(rational::rat(1 + m * h as i64, h as i64))
    }

    pub fn get(&self, class: LengthClass) -> &Rational {
        match class {
            LengthClass::Short => &self.short,
            LengthClass::Long => &self.long,
        }
    }

    /// Parses `"p/q"` (both classes) or `"p/q,r/s"` (short, long).
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        match parts.as_slice() {
            [c] => Ok(Self::uniform(rational::parse(c)?)),
            [a, b] => Ok(Self::new(rational::parse(a)?, rational::parse(b)?)),
            _ => Err(Error::InvalidArgument(alloc::format!(
                "expected one or two comma-separated rationals, got {s:?}"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn arithmetic_and_eval() {
        let cs = ParamScalar::param(LengthClass::Short);
        let cl = ParamScalar::param(LengthClass::Long);
        let e = &(&cs * &cl) + &ParamScalar::int(3);
        let p = Params::new(rational::rat(1, 2), rational::int(4));
        assert_eq!(e.eval(&p), rational::int(5));
        assert!(e.mentions_long());
        assert_eq!(e.to_string(), "c_s*c_l + 3");
        assert_eq!(cs.display(true), "c");
    }

    #[test]
    fn parse_params() {
        let p = Params::parse("1/4,1/2").unwrap();
        assert_eq!(p.short, rational::rat(1, 4));
        assert_eq!(p.long, rational::rat(1, 2));
        assert_eq!(Params::parse("3/2").unwrap(), Params::shifted(1, 2));
        assert!(Params::parse("1,2,3").is_err());
    }
}
