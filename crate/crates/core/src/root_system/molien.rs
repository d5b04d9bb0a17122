//! Molien series `|W|⁻¹ Σ_w 1/det(1 - t·w)` and recovery of the invariant
//! degrees from it.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::group::WeylGroup;
use crate::algebra::{rational, LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Power series of the invariant ring through `t^truncation`.
pub fn molien_series(group: &WeylGroup, truncation: usize) -> LaurentPoly {
    // elements sharing det(1 - tw) contribute identical series
    let mut classes: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for w in group.elements() {
        *classes.entry(w.char_coeffs()).or_default() += 1;
    }
    let mut total = LaurentPoly::zero();
    for (coeffs, count) in classes {
        let inv = LaurentPoly::from_ints(0, &coeffs)
            .series_inverse(truncation)
            .expect("det(1 - tw) has constant term 1");
        total = &total + &inv.scale(&rational::int(count as i64));
    }
    total.scale(&Rational::new(1.into(), (group.order() as i64).into()))
}

/// Greedy factor stripping: the lowest remaining nonzero coefficient at
/// `t^d` says how many factors `1/(1 - t^d)` remain.
pub fn degrees_from_series(
    series: &LaurentPoly,
    rank: usize,
    truncation: usize,
) -> Result<Vec<u32>> {
    let unresolved = |found| Error::DegreesUnresolved {
        truncation,
        found,
        expected: rank,
    };
    let mut s = series.truncate(truncation as i64);
    if s.coeff(0) != rational::one() {
        return Err(unresolved(0));
    }
    let mut degrees = Vec::new();
    for d in 1..=truncation as i64 {
        let c = s.coeff(d);
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() || c.is_negative() {
            return Err(Error::Inconsistent(alloc::format!(
                "series coefficient {} at t^{d} is not a nonnegative integer",
                rational::display(&c)
            )));
        }
        let k = rational::to_i64(&c).unwrap();
        for _ in 0..k {
            degrees.push(d as u32);
            s = (&s * &LaurentPoly::one_minus_t_pow(d)).truncate(truncation as i64);
        }
        if degrees.len() > rank {
            return Err(Error::Inconsistent("more degrees than the rank".into()));
        }
    }
    if degrees.len() != rank {
        return Err(unresolved(degrees.len()));
    }
    Ok(degrees)
}

/// Degrees of the basic invariants read off the Molien series.
pub fn molien_degrees(group: &WeylGroup, truncation: usize) -> Result<Vec<u32>> {
    let s = molien_series(group, truncation);
    degrees_from_series(&s, group.dim(), truncation)
}
