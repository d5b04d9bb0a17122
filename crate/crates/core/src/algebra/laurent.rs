//! Sparse Laurent polynomials in the grading variable `t`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{self, Rational};

/// `Σ c_k t^k` with `k ∈ ℤ`. Zero coefficients are never stored, and
/// iteration is in ascending exponent order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rational::one())
    }

    pub fn monomial(exp: i64, coeff: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// `t^exp`.
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(exp, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    /// `c_0 t^start + c_1 t^{start+1} + …`.
    pub fn from_ints(start: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(start + i as i64, rational::int(c));
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `1 + t + … + t^top`.
    pub fn geometric(top: u32) -> Self {
        Self::from_terms((0..=top as i64).map(|e| (e, Rational::one())))
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: i64) -> Self {
        let mut p = Self::one();
        p.add_term(k, -Rational::one());
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Ascending `(exponent, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, v)| (e + k, v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `t ↦ t^k` (`k` may be negative).
    pub fn substitute_power(&self, k: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, v)| (e * k, v.clone()))
                .collect(),
        }
    }

    /// `f(1/t)`.
    pub fn invert_variable(&self) -> Self {
        self.substitute_power(-1)
    }

    /// Evaluate at a rational point. Panics on `v = 0` with negative exponents.
    pub fn eval(&self, v: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.coeffs {
            let term = if *e >= 0 {
                num_traits::pow(v.clone(), *e as usize)
            } else {
                assert!(!v.is_zero(), "negative power of zero");
                num_traits::pow(v.recip(), (-e) as usize)
            };
            acc += c * term;
        }
        acc
    }

    pub fn value_at_one(&self) -> Rational {
        self.coeffs.values().fold(Rational::zero(), |a, c| a + c)
    }

    /// Drops every term of exponent greater than `max`.
    pub fn truncate(&self, max: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .range(..=max)
                .map(|(e, v)| (*e, v.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / d` when it is a Laurent polynomial, else `None`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        let dmin = d.min_exp()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let amin = self.min_exp().unwrap();
        let d = d.shift(-dmin);
        let dtop = d.max_exp().unwrap();
        let lead = d.coeff(dtop);
        let mut rem = self.shift(-amin);
        let mut q = Self::zero();
        while let Some(top) = rem.max_exp() {
            if top < dtop {
                return None;
            }
            let c = rem.coeff(top) / &lead;
            let k = top - dtop;
            rem = &rem - &d.shift(k).scale(&c);
            q.add_term(k, c);
        }
        Some(q.shift(amin - dmin))
    }

    /// Power-series inverse up to `t^trunc` for a polynomial with nonzero
    /// constant term and no negative exponents.
    pub fn series_inverse(&self, trunc: usize) -> Option<LaurentPoly> {
        if self.min_exp()? < 0 {
            return None;
        }
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return None;
        }
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(trunc + 1);
        for k in 0..=trunc {
            let mut s = if k == 0 {
                Rational::one()
            } else {
                Rational::zero()
            };
            if k > 0 {
                for (e, c) in self.coeffs.range(1..=k as i64) {
                    s -= c * &out[k - *e as usize];
                }
            }
            out.push(s * &inv0);
        }
        Some(Self::from_terms(
            out.into_iter().enumerate().map(|(i, c)| (i as i64, c)),
        ))
    }

    /// Number of times `(1 - t)` divides this polynomial.
    pub fn multiplicity_at_one(&self) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let f = Self::one_minus_t_pow(1);
        let mut p = self.clone();
        let mut k = 0;
        while p.value_at_one().is_zero() {
            p = p.div_exact(&f).expect("root at 1 implies divisibility");
            k += 1;
        }
        k
    }

    /// Sorted `(exponent, numerator, denominator)` triples.
    pub fn to_triples(&self) -> Vec<(i64, String, String)> {
        use alloc::string::ToString;
        self.coeffs
            .iter()
            .map(|(e, c)| (*e, c.numer().to_string(), c.denom().to_string()))
            .collect()
    }

    /// `[t^start, …, t^end]` coefficients.
    pub fn dense(&self, start: i64, end: i64) -> Vec<Rational> {
        (start..=end).map(|e| self.coeff(e)).collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let unit = mag.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{}", rational::display(&mag))?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{}*t", rational::display(&mag))?,
                (e, true) => write!(f, "t^{e}")?,
                (e, false) => write!(f, "{}*t^{e}", rational::display(&mag))?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};
    use proptest::prelude::*;

    fn poly(start: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(start, c)
    }

    #[test]
    fn difference_of_squares() {
        let p = &poly(0, &[1, 1]) * &poly(0, &[1, -1]);
        assert_eq!(p, poly(0, &[1, 0, -1]));
    }

    #[test]
    fn shifted_geometric_sum() {
        let p = LaurentPoly::geometric(2).shift(-1);
        assert_eq!(p, poly(-1, &[1, 1, 1]));
    }

    #[test]
    fn square_of_cubic_geometric() {
        let p = LaurentPoly::geometric(3).pow(2);
        assert_eq!(p.coeff(3), int(4));
        assert_eq!(p.dense(0, 6), [1, 2, 3, 4, 3, 2, 1].map(int).to_vec());
    }

    #[test]
    fn exact_division() {
        let a = poly(0, &[1, 0, 0, -1]);
        let q = a.div_exact(&poly(0, &[1, -1])).unwrap();
        assert_eq!(q, poly(0, &[1, 1, 1]));
        assert!(a.div_exact(&poly(0, &[1, 1])).is_none());
        let l = poly(-2, &[1, 0, -1]);
        assert_eq!(l.div_exact(&poly(1, &[1, 1])).unwrap(), poly(-3, &[1, -1]));
    }

    #[test]
    fn series_inverse_of_one_minus_t_squared() {
        let inv = LaurentPoly::one_minus_t_pow(2).series_inverse(6).unwrap();
        assert_eq!(inv, poly(0, &[1, 0, 1, 0, 1, 0, 1]));
    }

    #[test]
    fn multiplicity_at_one() {
        let p = &LaurentPoly::one_minus_t_pow(1).pow(2) * &poly(0, &[1, 1]);
        assert_eq!(p.multiplicity_at_one(), 2);
    }

    #[test]
    fn display_is_readable() {
        let p = poly(-1, &[1, -2, 1]);
        assert_eq!(alloc::format!("{p}"), "t^-1 - 2 + t");
        let q = LaurentPoly::monomial(2, rat(1, 3));
        assert_eq!(alloc::format!("{q}"), "1/3*t^2");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        (-3i64..3, proptest::collection::vec(-5i64..5, 0..6)).prop_map(|(s, c)| poly(s, &c))
    }

    proptest! {
        #[test]
        fn evaluation_is_additive_and_multiplicative(f in arb_poly(), g in arb_poly(), n in 1i64..6, d in 1i64..6) {
            let v = rat(n, d);
            prop_assert_eq!((&f + &g).eval(&v), f.eval(&v) + g.eval(&v));
            prop_assert_eq!((&f * &g).eval(&v), f.eval(&v) * g.eval(&v));
        }

        #[test]
        fn product_divides_back(f in arb_poly(), g in arb_poly()) {
            prop_assume!(!g.is_zero());
            let fg = &f * &g;
            prop_assert_eq!(fg.div_exact(&g).unwrap(), f);
        }
    }
}
