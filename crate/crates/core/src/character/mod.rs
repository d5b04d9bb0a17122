//! Characters of exterior powers of the reflection representation, the
//! scalars `κ_c`, graded characters of standard modules and of `L_c(triv)`,
//! and the permutation character on `Q/mQ`.

pub mod param;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

pub use param::{ParamScalar, Params};

use crate::algebra::{rational, smith_normal_form, LaurentPoly, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::root_system::{GroupElement, RootSystemData, WeylGroup};

/// Trace of `w` on `∧^k h`, i.e. `(-1)^k [t^k] det(1 - t w)`.
pub fn exterior_character(w: &GroupElement, k: usize) -> i64 {
    exterior_from_coeffs(&w.char_coeffs(), k)
}

fn exterior_from_coeffs(coeffs: &[i64], k: usize) -> i64 {
    match coeffs.get(k) {
        Some(&c) if k % 2 == 0 => c,
        Some(&c) => -c,
        None => 0,
    }
}

/// A representation of `W`, given either as an exterior power of `h` or by
/// its dimension and its values on the reflections `s_α`, `α ∈ R_+`.
#[derive(Clone, Debug)]
pub enum Tau {
    Exterior(usize),
    Values {
        dim: i64,
        reflection_values: Vec<i64>,
    },
}

/// `Σ_{α∈R_+} c_α`.
pub fn sum_c(rs: &RootSystemData) -> ParamScalar {
    let mut s = ParamScalar::zero();
    for i in 0..rs.num_positive() {
        s = &s + &ParamScalar::param(rs.length_class(i));
    }
    s
}

/// `κ_c(τ) = (1/dim τ) Σ_{α∈R_+} c_α (dim τ - χ_τ(s_α))`.
pub fn kappa(rs: &RootSystemData, tau: &Tau) -> Result<ParamScalar> {
    let (dim, values): (i64, Vec<i64>) = match tau {
        Tau::Exterior(k) => {
            if *k > rs.rank {
                return Err(Error::InvalidArgument(alloc::format!(
                    "exterior degree {k} exceeds rank {}",
                    rs.rank
                )));
            }
            let dim = rational::binomial(rs.rank as i64, *k as i64)
                .to_i64()
                .unwrap();
            let vals = rs
                .reflections()
                .iter()
                .map(|s| exterior_character(s, *k))
                .collect();
            (dim, vals)
        }
        Tau::Values {
            dim,
            reflection_values,
        } => {
            if reflection_values.len() != rs.num_positive() || *dim <= 0 {
                return Err(Error::DimensionMismatch(
                    "one character value per positive root",
                ));
            }
            (*dim, reflection_values.clone())
        }
    };
    let mut acc = ParamScalar::zero();
    for (i, v) in values.iter().enumerate() {
        acc.add_scaled(
            &ParamScalar::param(rs.length_class(i)),
            &rational::int(dim - v),
        );
    }
    Ok(acc.scale(&rational::rat(1, dim)))
}

/// `n/2 + κ_c(h_k) - Σ c_α`, the eigenvalue of `h` on the lowest piece of
/// `M_c(h_k)`.
pub fn lowest_h_eigenvalue(rs: &RootSystemData, k: usize) -> Result<ParamScalar> {
    let base = ParamScalar::constant(rational::rat(rs.rank as i64, 2));
    Ok(&(&base + &kappa(rs, &Tau::Exterior(k))?) - &sum_c(rs))
}

/// Exponent attached to the lowest piece of `M_c(h_k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    /// `t^{κ_c(h_k)}`; `M_c(triv)` starts in degree 0.
    Kappa,
    /// `t^{n/2 + κ_c(h_k) - Σc_α}`; at `c = (1+h)/h` this is
    /// `t^{k(1+h) - N}` and `M_c(triv)` starts in degree `-N`.
    Eigenvalue,
}

fn integral_exponent(v: &Rational, what: &str) -> Result<i64> {
    rational::to_i64(v).ok_or_else(|| {
        Error::UnsupportedParameter(alloc::format!(
            "{what} = {} is not an integer",
            rational::display(v)
        ))
    })
}

/// `t^e χ_{h_k}(w) / det(1 - t w)` with `e` chosen by `grading`.
pub fn graded_char_standard(
    rs: &RootSystemData,
    k: usize,
    w: &GroupElement,
    c: &Params,
    grading: Grading,
) -> Result<RationalFunction> {
    let e = match grading {
        Grading::Kappa => integral_exponent(&kappa(rs, &Tau::Exterior(k))?.eval(c), "kappa")?,
        Grading::Eigenvalue => {
            integral_exponent(&lowest_h_eigenvalue(rs, k)?.eval(c), "lowest eigenvalue")?
        }
    };
    let num = LaurentPoly::monomial(e, rational::int(exterior_character(w, k)));
    RationalFunction::new(num, w.char_poly())
}

/// `t^{-N} det(1 - t^{h+1} w) / det(1 - t w)`.
pub fn graded_char_l(rs: &RootSystemData, w: &GroupElement) -> RationalFunction {
    let d = w.char_poly();
    let num = d
        .substitute_power(rs.coxeter_number as i64 + 1)
        .shift(-(rs.num_positive() as i64));
    RationalFunction::new(num, d).expect("det(1 - tw) is nonzero")
}

/// `Σ_k (-1)^k` of the standard characters in the eigenvalue grading at
/// `c = (1+h)/h`.
pub fn alternating_standard_sum(rs: &RootSystemData, w: &GroupElement) -> Result<RationalFunction> {
    let c = Params::shifted(1, rs.coxeter_number);
    let mut acc = RationalFunction::zero();
    for k in 0..=rs.rank {
        let term = graded_char_standard(rs, k, w, &c, Grading::Eigenvalue)?;
        acc = if k % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    Ok(acc)
}

/// `dim ker(1 - w)`.
pub fn fixed_dimension(w: &GroupElement) -> usize {
    w.char_poly().multiplicity_at_one()
}

/// Exact limit of `ch_L(w, t)` at `t = 1`; equals `(h+1)^{dim ker(1-w)}`.
pub fn char_l_at_1(rs: &RootSystemData, w: &GroupElement) -> Result<u128> {
    let v = graded_char_l(rs, w).limit_at_one()?;
    if !rational::is_nonneg_integer(&v) {
        return Err(Error::Inconsistent(alloc::format!(
            "limit {} is not a nonnegative integer",
            rational::display(&v)
        )));
    }
    v.numer()
        .to_u128()
        .ok_or_else(|| Error::Inconsistent("limit too large".into()))
}

/// The value `h^{dim ker(1-w)}` as printed in the closed formula for the
/// ungraded character; reported next to [`char_l_at_1`].
pub fn char_l_at_1_printed(rs: &RootSystemData, w: &GroupElement) -> u128 {
    (rs.coxeter_number as u128).pow(fixed_dimension(w) as u32)
}

/// `#{v ∈ (Z/m)^n : w v ≡ v}` via the Smith form of `w - 1`.
pub fn perm_char_q_mod(w: &GroupElement, m: u64) -> u128 {
    let snf = smith_normal_form(&w.minus_identity());
    let m = m as i128;
    snf.divisors
        .iter()
        .map(|d| if d.is_zero() { m } else { d.gcd(&m) } as u128)
        .product()
}

/// `∏(1 - t^{d_k}) / det(1 - t w)`, a polynomial.
pub fn coinvariant_graded_character(rs: &RootSystemData, w: &GroupElement) -> Result<LaurentPoly> {
    let num = degree_product(&rs.degrees);
    num.div_exact(&w.char_poly())
        .ok_or(Error::ExactDivisionFailed(
            "invariant degrees by det(1 - tw)",
        ))
}

/// `∏_k (1 - t^{d_k})`.
pub fn degree_product(degrees: &[u32]) -> LaurentPoly {
    degrees.iter().fold(LaurentPoly::one(), |acc, &d| {
        &acc * &LaurentPoly::one_minus_t_pow(d as i64)
    })
}

/// `e_i(t^{e_1}, …, t^{e_n})`, with `e_0 = 1`.
pub fn elementary_symmetric(exponents: &[u32], i: usize) -> LaurentPoly {
    // coefficient of u^i in ∏ (1 + u t^{e_j})
    let mut layers: Vec<LaurentPoly> = alloc::vec![LaurentPoly::one()];
    for &e in exponents {
        let mut next = layers.clone();
        next.push(LaurentPoly::zero());
        for j in 0..layers.len() {
            next[j + 1] = &next[j + 1] + &layers[j].shift(e as i64);
        }
        layers = next;
    }
    layers.get(i).cloned().unwrap_or_else(LaurentPoly::zero)
}

/// Elements grouped by `det(1 - t w)`; every class function in this module
/// other than [`perm_char_q_mod`] depends only on that polynomial.
pub fn char_poly_classes(group: &WeylGroup) -> BTreeMap<Vec<i64>, (u64, usize)> {
    let mut m: BTreeMap<Vec<i64>, (u64, usize)> = BTreeMap::new();
    for (i, w) in group.elements().iter().enumerate() {
        m.entry(w.char_coeffs()).or_insert((0, i)).0 += 1;
    }
    m
}

/// `|W|⁻¹ Σ_w χ_L(w) χ_{h_k}(w)`, the multiplicity of `h_k` in `L` at
/// `t = 1`. Characters of Weyl groups are real, so `χ(w⁻¹) = χ(w)`.
pub fn multiplicity_in_l(rs: &RootSystemData, group: &WeylGroup, k: usize) -> Result<Rational> {
    let mut acc = Rational::zero();
    for (coeffs, (count, rep)) in char_poly_classes(group) {
        let chi = exterior_from_coeffs(&coeffs, k);
        let l = char_l_at_1(rs, &group.elements()[rep])?;
        acc += rational::int(chi * count as i64) * Rational::from_integer(l.into());
    }
    Ok(acc / rational::int(group.order() as i64))
}

/// `|W|⁻¹ Σ_w χ_{h_k}(w) · ch_{coinv}(w, t)`, the graded multiplicity of
/// `h_k` in the coinvariant algebra.
pub fn exterior_isotypic_coinvariant_series(
    rs: &RootSystemData,
    group: &WeylGroup,
    k: usize,
) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::zero();
    for (coeffs, (count, rep)) in char_poly_classes(group) {
        let chi = exterior_from_coeffs(&coeffs, k) * count as i64;
        if chi != 0 {
            let ch = coinvariant_graded_character(rs, &group.elements()[rep])?;
            acc = &acc + &ch.scale(&rational::int(chi));
        }
    }
    Ok(acc.scale(&rational::rat(1, group.order() as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{build_with_group, TypeLabel, DEFAULT_GROUP_BUDGET};

    fn setup(l: TypeLabel, n: usize) -> (RootSystemData, WeylGroup) {
        let (rs, g) = build_with_group(l, n, DEFAULT_GROUP_BUDGET).unwrap();
        (rs, g.unwrap())
    }

    fn rf(n: LaurentPoly, d: LaurentPoly) -> RationalFunction {
        RationalFunction::new(n, d).unwrap()
    }

    #[test]
    fn exterior_examples() {
        let (rs, g) = setup(TypeLabel::B, 3);
        let n = rs.rank as i64;
        for w in g.elements() {
            assert_eq!(exterior_character(w, 0), 1);
        }
        for s in rs.reflections() {
            assert_eq!(exterior_character(s, rs.rank), -1);
            for k in 0..=rs.rank as i64 {
                let expect = rational::binomial(n - 1, k) - rational::binomial(n - 1, k - 1);
                assert_eq!(
                    rational::int(exterior_character(s, k as usize)),
                    Rational::from_integer(expect)
                );
            }
        }
    }

    #[test]
    fn kappa_examples() {
        let (b2, _) = setup(TypeLabel::B, 2);
        let c = Params::uniform(rational::int(1));
        assert_eq!(
            kappa(&b2, &Tau::Exterior(1)).unwrap().eval(&c),
            rational::int(4)
        );
        assert!(kappa(&b2, &Tau::Exterior(0)).unwrap().is_zero());
        for (l, n) in [(TypeLabel::A, 3), (TypeLabel::G, 2), (TypeLabel::D, 4)] {
            let (rs, _) = setup(l, n);
            let c = Params::uniform(rational::rat(2, 7));
            for k in 0..=n {
                let got = kappa(&rs, &Tau::Exterior(k)).unwrap().eval(&c);
                let want = rational::rat(2 * rs.coxeter_number as i64 * k as i64, 7);
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn kappa_from_explicit_values() {
        let (b2, _) = setup(TypeLabel::B, 2);
        let vals = b2
            .reflections()
            .iter()
            .map(|s| exterior_character(s, 1))
            .collect();
        let a = kappa(
            &b2,
            &Tau::Values {
                dim: 2,
                reflection_values: vals,
            },
        )
        .unwrap();
        assert_eq!(a, kappa(&b2, &Tau::Exterior(1)).unwrap());
    }

    #[test]
    fn lowest_eigenvalue_examples() {
        let (a2, _) = setup(TypeLabel::A, 2);
        let c0 = Params::uniform(rational::zero());
        assert_eq!(
            lowest_h_eigenvalue(&a2, 0).unwrap().eval(&c0),
            rational::int(1)
        );
        let c = Params::shifted(1, 3);
        assert_eq!(
            lowest_h_eigenvalue(&a2, 0).unwrap().eval(&c),
            rational::int(-3)
        );
        assert_eq!(
            lowest_h_eigenvalue(&a2, 2).unwrap().eval(&c),
            rational::int(2 * 4 - 3)
        );
    }

    #[test]
    fn standard_character_examples() {
        let (a1, g1) = setup(TypeLabel::A, 1);
        let c = Params::shifted(1, 2);
        let id = &g1.elements()[0];
        let m0 = graded_char_standard(&a1, 0, id, &c, Grading::Kappa).unwrap();
        assert_eq!(
            m0,
            rf(LaurentPoly::one(), LaurentPoly::from_ints(0, &[1, -1]))
        );
        let m1 = graded_char_standard(&a1, 1, id, &c, Grading::Kappa).unwrap();
        assert_eq!(
            m1,
            rf(LaurentPoly::t_pow(3), LaurentPoly::from_ints(0, &[1, -1]))
        );
        let bad = Params::uniform(rational::rat(1, 3));
        assert!(matches!(
            graded_char_standard(&a1, 1, id, &bad, Grading::Kappa),
            Err(Error::UnsupportedParameter(_))
        ));

        let (b2, _) = setup(TypeLabel::B, 2);
        let c = Params::shifted(1, 4);
        let s = &b2.reflections()[0];
        let got = graded_char_standard(&b2, 2, s, &c, Grading::Kappa).unwrap();
        assert_eq!(
            got,
            rf(LaurentPoly::monomial(10, rational::int(-1)), s.char_poly())
        );
    }

    #[test]
    fn l_character_examples() {
        let (a1, g) = setup(TypeLabel::A, 1);
        let minus = &g.elements()[1];
        let ch = graded_char_l(&a1, minus);
        assert_eq!(
            ch.to_laurent().unwrap(),
            LaurentPoly::from_ints(-1, &[1, -1, 1])
        );
        let (a2, g2) = setup(TypeLabel::A, 2);
        let id = graded_char_l(&a2, &g2.elements()[0]).to_laurent().unwrap();
        assert_eq!(id, LaurentPoly::geometric(3).pow(2).shift(-3));
    }

    #[test]
    fn limits_and_fixed_points() {
        let (b2, g) = setup(TypeLabel::B, 2);
        let minus = g.elements().iter().find(|w| w.trace() == -2).unwrap();
        assert_eq!(char_l_at_1(&b2, minus).unwrap(), 1);
        assert_eq!(perm_char_q_mod(minus, 5), 1);
        assert_eq!(char_l_at_1(&b2, &g.elements()[0]).unwrap(), 25);
        assert_eq!(char_l_at_1_printed(&b2, &g.elements()[0]), 16);
        let (a2, _) = setup(TypeLabel::A, 2);
        let cox = crate::root_system::coxeter_element(&a2);
        assert_eq!(char_l_at_1(&a2, &cox).unwrap(), 1);
        let (_, g1) = setup(TypeLabel::A, 1);
        assert_eq!(perm_char_q_mod(&g1.elements()[1], 3), 1);
        assert_eq!(perm_char_q_mod(&GroupElement::identity(3), 4), 64);
    }

    #[test]
    fn brute_force_fixed_points_agree() {
        let (_, g) = setup(TypeLabel::G, 2);
        for w in g.elements() {
            for m in [2u64, 3, 6, 7] {
                let mut count = 0;
                for a in 0..m as i64 {
                    for b in 0..m as i64 {
                        let v = w.apply(&[a, b]);
                        if (v[0] - a).rem_euclid(m as i64) == 0
                            && (v[1] - b).rem_euclid(m as i64) == 0
                        {
                            count += 1;
                        }
                    }
                }
                assert_eq!(perm_char_q_mod(w, m), count);
            }
        }
    }

    #[test]
    fn coinvariant_examples() {
        let (a1, g1) = setup(TypeLabel::A, 1);
        assert_eq!(
            coinvariant_graded_character(&a1, &g1.elements()[0]).unwrap(),
            LaurentPoly::from_ints(0, &[1, 1])
        );
        let (a2, g2) = setup(TypeLabel::A, 2);
        let id = coinvariant_graded_character(&a2, &g2.elements()[0]).unwrap();
        assert_eq!(id, LaurentPoly::from_ints(0, &[1, 2, 2, 1]));
        let (f4, g4) = setup(TypeLabel::F, 4);
        let v = coinvariant_graded_character(&f4, &g4.elements()[0])
            .unwrap()
            .value_at_one();
        assert_eq!(v, rational::int(1152));
    }

    #[test]
    fn alternating_sum_matches_l() {
        for (l, n) in [(TypeLabel::A, 2), (TypeLabel::B, 3), (TypeLabel::G, 2)] {
            let (rs, g) = setup(l, n);
            for w in g.elements() {
                assert_eq!(
                    alternating_standard_sum(&rs, w).unwrap(),
                    graded_char_l(&rs, w)
                );
            }
        }
    }

    #[test]
    fn palindromy() {
        let (rs, g) = setup(TypeLabel::B, 3);
        for w in g.elements() {
            let lhs = graded_char_l(&rs, w).invert_variable();
            assert_eq!(lhs, graded_char_l(&rs, &rs.inverse(w)));
        }
    }

    #[test]
    fn solomon_and_multiplicities() {
        for (l, n) in [(TypeLabel::A, 3), (TypeLabel::B, 2), (TypeLabel::G, 2)] {
            let (rs, g) = setup(l, n);
            for k in 0..=n {
                let got = exterior_isotypic_coinvariant_series(&rs, &g, k).unwrap();
                assert_eq!(got, elementary_symmetric(&rs.exponents, k));
                let m = multiplicity_in_l(&rs, &g, k).unwrap();
                assert!(rational::is_nonneg_integer(&m));
            }
        }
    }

    #[test]
    fn elementary_symmetric_small() {
        let e = [1, 3];
        assert_eq!(elementary_symmetric(&e, 0), LaurentPoly::one());
        assert_eq!(
            elementary_symmetric(&e, 1),
            LaurentPoly::from_ints(1, &[1, 0, 1])
        );
        assert_eq!(elementary_symmetric(&e, 2), LaurentPoly::t_pow(4));
        assert!(elementary_symmetric(&e, 3).is_zero());
    }
}
