//! Hilbert series: the invariant ring, sign-isotypic parts of standard
//! modules at `c = (1 + m h)/h`, their alternating sum, and the series of
//! `L_c(triv)` at `c = (1 + h)/h`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{rational, LaurentPoly, RationalFunction};
use crate::character::{
    char_poly_classes, coinvariant_graded_character, degree_product, elementary_symmetric,
};
use crate::error::{Error, Result};
use crate::report::Check;
use crate::root_system::{RootSystemData, WeylGroup};

/// A computed series together with the identities checked on it.
#[derive(Clone, Debug)]
pub struct SeriesReport {
    pub label: String,
    pub series: RationalFunction,
    pub checks: Vec<Check>,
}

impl SeriesReport {
    pub fn pass(&self) -> bool {
        crate::report::all_pass(&self.checks)
    }
}

/// `p = ∏ (1 - t^{d_i})⁻¹`.
pub fn invariant_series_p(rs: &RootSystemData) -> RationalFunction {
    RationalFunction::new(LaurentPoly::one(), degree_product(&rs.degrees)).expect("nonzero product")
}

fn check_m(m: i64) -> Result<()> {
    if m < 1 {
        return Err(Error::InvalidArgument(format!(
            "m must be positive, got {m}"
        )));
    }
    Ok(())
}

/// Series of `e_ε M_c(h_{n-i})`:
/// `t^{-mN + (n-i)(mh+1)} p e_i(t^{e_1}, …, t^{e_n})`.
pub fn sign_isotypic_standard_series(
    rs: &RootSystemData,
    i: usize,
    m: i64,
) -> Result<RationalFunction> {
    check_m(m)?;
    if i > rs.rank {
        return Err(Error::InvalidArgument(format!(
            "index {i} exceeds rank {}",
            rs.rank
        )));
    }
    let n = rs.rank as i64;
    let big_n = rs.num_positive() as i64;
    let h = rs.coxeter_number as i64;
    let shift = -m * big_n + (n - i as i64) * (m * h + 1);
    let num = elementary_symmetric(&rs.exponents, i).shift(shift);
    RationalFunction::new(num, degree_product(&rs.degrees))
}

/// The same series indexed by the exterior degree `k` of `τ = h_k`.
pub fn sign_isotypic_by_exterior_degree(
    rs: &RootSystemData,
    k: usize,
    m: i64,
) -> Result<RationalFunction> {
    if k > rs.rank {
        return Err(Error::InvalidArgument(format!(
            "exterior degree {k} exceeds rank {}",
            rs.rank
        )));
    }
    sign_isotypic_standard_series(rs, rs.rank - k, m)
}

/// Independent evaluation of the series of `e_ε M_c(h_k)` as the group
/// average `|W|⁻¹ Σ_w ε(w) χ_{h_k}(w) t^{k(mh+1) - mN} / det(1 - t w)`.
pub fn sign_isotypic_series_by_average(
    rs: &RootSystemData,
    group: &WeylGroup,
    k: usize,
    m: i64,
) -> Result<RationalFunction> {
    check_m(m)?;
    let n = rs.rank;
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "exterior degree {k} exceeds rank {n}"
        )));
    }
    // multiply through by ∏(1 - t^d) so every summand is a polynomial
    let mut avg = LaurentPoly::zero();
    for (coeffs, (count, rep)) in char_poly_classes(group) {
        let sign = if n % 2 == 0 { coeffs[n] } else { -coeffs[n] };
        let chi = if k % 2 == 0 { coeffs[k] } else { -coeffs[k] };
        let weight = sign * chi * count as i64;
        if weight != 0 {
            let ch = coinvariant_graded_character(rs, &group.elements()[rep])?;
            avg = &avg + &ch.scale(&rational::int(weight));
        }
    }
    let avg = avg.scale(&rational::rat(1, group.order() as i64));
    let h = rs.coxeter_number as i64;
    let low = k as i64 * (m * h + 1) - m * rs.num_positive() as i64;
    RationalFunction::new(avg.shift(low), degree_product(&rs.degrees))
}

fn sorted(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    v
}

fn exponent_checks(rs: &RootSystemData) -> Vec<Check> {
    let h = rs.coxeter_number;
    let dual = sorted(rs.exponents.iter().map(|e| h + 1 - e).collect());
    alloc::vec![
        Check::equal(
            "sum of exponents",
            "sum of the exponents equals the number of positive roots",
            &(rs.num_positive() as u32),
            &rs.exponents.iter().sum::<u32>(),
        ),
        Check::equal(
            "exponent duality",
            "multiset {h+1-e_k} equals the multiset of degrees",
            &format!("{:?}", rs.degrees),
            &format!("{dual:?}"),
        ),
    ]
}

/// `Σ_i (-1)^i p(e_ε M_c(h_i), t)` for `m = 1`, which must equal `1`, plus
/// the two facts about exponents the identity rests on.
pub fn alternating_sum_check(rs: &RootSystemData) -> Result<SeriesReport> {
    let mut total = RationalFunction::zero();
    for k in 0..=rs.rank {
        let s = sign_isotypic_by_exterior_degree(rs, k, 1)?;
        total = if k % 2 == 0 { &total + &s } else { &total - &s };
    }
    let mut checks = alloc::vec![Check::equal(
        "alternating sum",
        "alternating sum over k of the sign-isotypic series of M_c(h_k) at c=(1+h)/h equals 1",
        &RationalFunction::one(),
        &total,
    )];
    checks.extend(exponent_checks(rs));
    Ok(SeriesReport {
        label: format!("alternating sum {}", rs.name()),
        series: total,
        checks,
    })
}

/// For general `m` the alternating sum has the closed form
/// `p t^{N - mN} ∏_k (1 - t^{mh+1-e_k})`; optionally also compares every
/// summand against the group average.
pub fn alternating_sum_shape_check(
    rs: &RootSystemData,
    m: i64,
    group: Option<&WeylGroup>,
) -> Result<SeriesReport> {
    check_m(m)?;
    let big_n = rs.num_positive() as i64;
    let h = rs.coxeter_number as i64;
    let mut total = RationalFunction::zero();
    let mut checks = Vec::new();
    for k in 0..=rs.rank {
        let s = sign_isotypic_by_exterior_degree(rs, k, m)?;
        if let Some(g) = group {
            let avg = sign_isotypic_series_by_average(rs, g, k, m)?;
            checks.push(Check::equal(
                format!("group average k={k}"),
                "closed form of the sign-isotypic series equals the group average",
                &avg,
                &s,
            ));
        }
        total = if k % 2 == 0 { &total + &s } else { &total - &s };
    }
    let closed_num = rs
        .exponents
        .iter()
        .fold(LaurentPoly::t_pow(big_n - m * big_n), |acc, &e| {
            &acc * &LaurentPoly::one_minus_t_pow(m * h + 1 - e as i64)
        });
    let closed = RationalFunction::new(closed_num, degree_product(&rs.degrees))?;
    checks.push(Check::equal(
        format!("alternating sum shape m={m}"),
        "alternating sum equals p t^(N-mN) prod_k (1 - t^(mh+1-e_k))",
        &closed,
        &total,
    ));
    Ok(SeriesReport {
        label: format!("alternating sum {} m={m}", rs.name()),
        series: total,
        checks,
    })
}

/// `t^{-N} (1 + t + ⋯ + t^h)^n`.
pub fn hilbert_l(rs: &RootSystemData) -> LaurentPoly {
    LaurentPoly::geometric(rs.coxeter_number)
        .pow(rs.rank as u32)
        .shift(-(rs.num_positive() as i64))
}

/// `Σ_i (-1)^i C(n,i) t^{-N + (h+1) i} / (1 - t)^n`.
pub fn hilbert_l_alternating(rs: &RootSystemData) -> RationalFunction {
    let n = rs.rank as i64;
    let big_n = rs.num_positive() as i64;
    let h = rs.coxeter_number as i64;
    let mut num = LaurentPoly::zero();
    for i in 0..=n {
        let b = rational::binomial(n, i);
        let b = if i % 2 == 0 { b } else { -b };
        num.add_term(
            -big_n + (h + 1) * i,
            crate::algebra::Rational::from_integer(b),
        );
    }
    let den = LaurentPoly::one_minus_t_pow(1).pow(n as u32);
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// Identities satisfied by [`hilbert_l`].
pub fn hilbert_l_checks(rs: &RootSystemData) -> Vec<Check> {
    let l = hilbert_l(rs);
    let big_n = rs.num_positive() as i64;
    let total = rational::int((rs.coxeter_number as i64 + 1).pow(rs.rank as u32));
    alloc::vec![
        Check::equal(
            "binomial form",
            "t^-N (1+...+t^h)^n equals sum_i (-1)^i C(n,i) t^(-N+(h+1)i) / (1-t)^n",
            &hilbert_l_alternating(rs),
            &RationalFunction::from_poly(l.clone()),
        ),
        Check::equal(
            "value at 1",
            "value at t=1 equals (h+1)^n",
            &total,
            &l.value_at_one(),
        ),
        Check::equal(
            "palindromic",
            "series is invariant under t -> 1/t",
            &l,
            &l.invert_variable(),
        ),
        Check::equal(
            "top degree",
            "highest exponent is N",
            &big_n,
            &l.max_exp().unwrap_or(i64::MIN),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{
        build_root_system, build_with_group, TypeLabel, DEFAULT_GROUP_BUDGET,
    };

    fn rf(n: LaurentPoly, d: LaurentPoly) -> RationalFunction {
        RationalFunction::new(n, d).unwrap()
    }

    fn one_minus(ks: &[i64]) -> LaurentPoly {
        ks.iter().fold(LaurentPoly::one(), |a, &k| {
            &a * &LaurentPoly::one_minus_t_pow(k)
        })
    }

    #[test]
    fn p_examples() {
        for (l, n, ds) in [
            (TypeLabel::A, 1, &[2][..]),
            (TypeLabel::A, 2, &[2, 3][..]),
            (TypeLabel::B, 2, &[2, 4][..]),
        ] {
            let rs = build_root_system(l, n).unwrap();
            assert_eq!(
                invariant_series_p(&rs),
                rf(LaurentPoly::one(), one_minus(ds))
            );
        }
    }

    #[test]
    fn p_matches_molien() {
        let (rs, g) = build_with_group(TypeLabel::B, 3, DEFAULT_GROUP_BUDGET).unwrap();
        let mol = crate::root_system::molien_series(&g.unwrap(), 20);
        assert_eq!(invariant_series_p(&rs).expand(20), mol);
    }

    #[test]
    fn sign_isotypic_examples() {
        let a1 = build_root_system(TypeLabel::A, 1).unwrap();
        let p = one_minus(&[2]);
        // τ = h_1: t^{-1 + 3} p
        assert_eq!(
            sign_isotypic_standard_series(&a1, 0, 1).unwrap(),
            rf(LaurentPoly::t_pow(2), p.clone())
        );
        // τ = h_0: t^{-1} p t^{e_1}
        assert_eq!(
            sign_isotypic_standard_series(&a1, 1, 1).unwrap(),
            rf(LaurentPoly::one(), p)
        );
        let b3 = build_root_system(TypeLabel::B, 3).unwrap();
        for m in 1..=3 {
            let p = invariant_series_p(&b3);
            let got = sign_isotypic_standard_series(&b3, 0, m).unwrap();
            let want =
                &p * &RationalFunction::from_poly(LaurentPoly::t_pow(-9 * m + 3 * (6 * m + 1)));
            assert_eq!(got, want);
            // i = n: the single full product t^{Σe} = t^N
            let got = sign_isotypic_standard_series(&b3, 3, m).unwrap();
            let want = &p * &RationalFunction::from_poly(LaurentPoly::t_pow(9 - 9 * m));
            assert_eq!(got, want);
        }
    }

    #[test]
    fn closed_form_matches_group_average() {
        for (l, n) in [
            (TypeLabel::A, 1),
            (TypeLabel::A, 3),
            (TypeLabel::B, 2),
            (TypeLabel::G, 2),
        ] {
            let (rs, g) = build_with_group(l, n, DEFAULT_GROUP_BUDGET).unwrap();
            let g = g.unwrap();
            for m in 1..=3 {
                for k in 0..=n {
                    assert_eq!(
                        sign_isotypic_by_exterior_degree(&rs, k, m).unwrap(),
                        sign_isotypic_series_by_average(&rs, &g, k, m).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn alternating_sum_is_one() {
        for (l, n) in [
            (TypeLabel::A, 1),
            (TypeLabel::B, 2),
            (TypeLabel::F, 4),
            (TypeLabel::E, 7),
        ] {
            let rs = build_root_system(l, n).unwrap();
            let r = alternating_sum_check(&rs).unwrap();
            assert!(r.pass(), "{:?}", r.checks);
            assert_eq!(r.series, RationalFunction::one());
        }
    }

    #[test]
    fn shape_for_larger_m() {
        let (rs, g) = build_with_group(TypeLabel::C, 3, DEFAULT_GROUP_BUDGET).unwrap();
        for m in [2, 3] {
            assert!(alternating_sum_shape_check(&rs, m, g.as_ref())
                .unwrap()
                .pass());
        }
        assert!(alternating_sum_shape_check(&rs, 0, None).is_err());
    }

    #[test]
    fn hilbert_examples() {
        let a1 = build_root_system(TypeLabel::A, 1).unwrap();
        assert_eq!(hilbert_l(&a1), LaurentPoly::from_ints(-1, &[1, 1, 1]));
        let a2 = build_root_system(TypeLabel::A, 2).unwrap();
        assert_eq!(
            hilbert_l(&a2),
            LaurentPoly::from_ints(-3, &[1, 2, 3, 4, 3, 2, 1])
        );
        let g2 = build_root_system(TypeLabel::G, 2).unwrap();
        assert_eq!(hilbert_l(&g2).value_at_one(), rational::int(49));
        for rs in [a1, a2, g2] {
            assert!(crate::report::all_pass(&hilbert_l_checks(&rs)));
        }
    }
}
