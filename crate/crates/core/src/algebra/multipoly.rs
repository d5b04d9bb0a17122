//! Sparse multivariate polynomials with rational coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{self, Rational};

/// Exponent vector; its length is the number of variables.
pub type Monomial = Vec<u32>;

/// `Σ c_m x^m` over a fixed, ordered set of `nvars` indeterminates.
/// Variable names are supplied at display time.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exps: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// `Σ coeffs[i] x_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Rational> {
        self.terms
    }

    pub fn coeff(&self, m: &[u32]) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.nvars])
    }

    /// The constant value, if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &MultiPoly, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Multiply by the monomial `x^m`.
    pub fn mul_monomial(&self, m: &[u32]) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn mul_var(&self, i: usize) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[i] += 1;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `∂/∂x_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if m[i] > 0 {
                let mut e = m.clone();
                e[i] -= 1;
                out.add_term(e, c * Rational::from_integer(m[i].into()));
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(m) {
                if e > 0 {
                    term *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitutes `x_i ↦ images[i]`. All images share one variable count.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, |p| p.nvars);
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|p| vec![MultiPoly::one(p.nvars)])
            .collect();
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        out
    }

    /// Exact quotient by a linear form `Σ a_j x_j`, or `None` when the
    /// division leaves a remainder.
    pub fn div_linear_exact(&self, lin: &MultiPoly) -> Option<MultiPoly> {
        let (pivot, lead) = lin.terms.iter().find_map(|(m, c)| {
            (m.iter().sum::<u32>() == 1)
                .then(|| (m.iter().position(|&e| e == 1).unwrap(), c.clone()))
        })?;
        let mut rem = self.clone();
        let mut q = MultiPoly::zero(self.nvars);
        while !rem.is_zero() {
            let (m, c) = rem
                .terms
                .iter()
                .max_by(|a, b| a.0[pivot].cmp(&b.0[pivot]).then(b.0.cmp(a.0)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .unwrap();
            if m[pivot] == 0 {
                return None;
            }
            let mut qm = m;
            qm[pivot] -= 1;
            let qc = c / &lead;
            for (lm, lc) in &lin.terms {
                let e: Monomial = qm.iter().zip(lm).map(|(a, b)| a + b).collect();
                rem.add_term(e, -(lc * &qc));
            }
            q.add_term(qm, qc);
        }
        Some(q)
    }

    /// Renders with the given variable names.
    pub fn fmt_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (j, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[j].into()),
                    _ => factors.push(alloc::format!("{}^{}", names[j], e)),
                }
            }
            if factors.is_empty() {
                s.push_str(&rational::display(&mag));
            } else {
                if !mag.is_one() {
                    s.push_str(&rational::display(&mag));
                    s.push('*');
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

/// All exponent vectors of total degree `d` in `nvars` variables, in
/// lexicographic order with the first variable's power decreasing.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Monomial, out: &mut Vec<Monomial>) {
        if n == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n - 1, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(nvars, d, &mut Vec::with_capacity(nvars), &mut out);
    out
}

/// Number of monomials of degree `d` in `n` variables.
pub fn count_monomials(n: usize, d: u32) -> u128 {
    if n == 0 {
        return u128::from(d == 0);
    }
    let mut acc: u128 = 1;
    for i in 1..n as u128 {
        acc = acc * (d as u128 + i) / i;
    }
    acc
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};
    use proptest::prelude::*;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(2, i)
    }

    #[test]
    fn commutative_product() {
        assert_eq!(&x(0) * &x(1), &x(1) * &x(0));
    }

    #[test]
    fn derivative_and_eval() {
        let f = &(&x(0) * &x(0)) * &x(1);
        assert_eq!(f.derivative(0), (&x(0) * &x(1)).scale(&int(2)));
        assert_eq!(f.eval(&[int(2), rat(1, 2)]), int(2));
    }

    #[test]
    fn substitution_by_linear_forms() {
        // x0 -> x0 + x1, x1 -> -x1 applied to x0*x1
        let f = &x(0) * &x(1);
        let g = f.substitute(&[&x(0) + &x(1), -&x(1)]);
        assert_eq!(g, -&(&(&x(0) * &x(1)) + &(&x(1) * &x(1))));
    }

    #[test]
    fn division_by_linear_form() {
        let lin = &x(0) - &x(1);
        let f = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        assert_eq!(f.div_linear_exact(&lin).unwrap(), &x(0) + &x(1));
        assert!(x(0).div_linear_exact(&lin).is_none());
    }

    #[test]
    fn monomial_enumeration() {
        let m = monomials_of_degree(2, 2);
        assert_eq!(m, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(
            monomials_of_degree(3, 4).len() as u128,
            count_monomials(3, 4)
        );
        assert_eq!(count_monomials(4, 3), 20);
    }

    #[test]
    fn display_names() {
        let f = &x(0).scale(&int(2)) - &(&x(1) * &x(1));
        assert_eq!(f.fmt_with(&["a", "b"]), "2*a - b^2");
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec((0u32..3, 0u32..3, -4i64..4), 0..5).prop_map(|ts| {
            let mut p = MultiPoly::zero(2);
            for (a, b, c) in ts {
                p.add_term(vec![a, b], int(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn linear_division_inverts_multiplication(f in arb_poly(), a in -3i64..3, b in 1i64..3) {
            let lin = MultiPoly::linear(&[int(a), int(b)]);
            let g = &f * &lin;
            prop_assert_eq!(g.div_linear_exact(&lin).unwrap(), f);
        }
    }
}
