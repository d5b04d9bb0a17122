//! The triple `x², h, y²` and the `h`-eigenvalues on `M_c(triv)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::pbw::{linear_words, HcElement, Letter, PbwKey, Rewriter, Word};
use crate::algebra::{monomials_of_degree, rational};
use crate::character::{sum_c, ParamScalar};
use crate::error::Result;
use crate::report::Check;
use crate::root_system::{GroupElement, RootSystemData};

/// Structure constants with `[h, x²] = a x²`, `[h, y²] = b y²`,
/// `[x², y²] = γ h`, or `None` where the bracket is not proportional.
#[derive(Clone, Debug)]
pub struct Sl2Report {
    pub a: Option<ParamScalar>,
    pub b: Option<ParamScalar>,
    pub gamma: Option<ParamScalar>,
    pub checks: Vec<Check>,
}

impl Sl2Report {
    pub fn pass(&self) -> bool {
        crate::report::all_pass(&self.checks)
    }
}

fn quadratic(
    n: usize,
    coeffs: impl Fn(usize, usize) -> crate::algebra::Rational,
    letter: fn(usize) -> Letter,
) -> Vec<(ParamScalar, Word)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = coeffs(i, j);
            if c != rational::zero() {
                out.push((ParamScalar::constant(c), vec![letter(i), letter(j)]));
            }
        }
    }
    out
}

/// `x² = Σ (B⁻¹)_ij x_i x_j`, `y² = Σ B_ij y_i y_j` and
/// `h = ½ Σ (x_i y_i + y_i x_i)`, all in normal form.
pub fn sl2_triple(rs: &RootSystemData, rw: &Rewriter) -> Result<(HcElement, HcElement, HcElement)> {
    let n = rs.rank;
    let binv = rs.gram_inverse();
    let x2 = rw.normal_form_sum(&quadratic(n, |i, j| binv.get(i, j).clone(), Letter::X))?;
    let y2 = rw.normal_form_sum(&quadratic(
        n,
        |i, j| rational::int(rs.gram()[i][j]),
        Letter::Y,
    ))?;
    let half = ParamScalar::constant(rational::rat(1, 2));
    let mut hw = Vec::new();
    for i in 0..n {
        hw.push((half.clone(), vec![Letter::X(i), Letter::Y(i)]));
        hw.push((half.clone(), vec![Letter::Y(i), Letter::X(i)]));
    }
    let h = rw.normal_form_sum(&hw)?;
    Ok((x2, h, y2))
}

fn show(p: &Option<ParamScalar>, simply_laced: bool) -> String {
    match p {
        Some(v) => v.display(simply_laced),
        None => "not proportional".into(),
    }
}

/// Checks that `x², h, y²` span a Lie algebra isomorphic to `sl_2` with
/// structure constants free of `c`.
pub fn sl2_closure_check(rs: &RootSystemData) -> Result<Sl2Report> {
    let rw = Rewriter::new(rs, 4);
    let (x2, h, y2) = sl2_triple(rs, &rw)?;
    let sl = rs.is_simply_laced();
    let a = rw.bracket(&h, &x2)?.ratio_to(&x2);
    let b = rw.bracket(&h, &y2)?.ratio_to(&y2);
    let gamma = rw.bracket(&x2, &y2)?.ratio_to(&h);

    // h = Σ x_i y_i + n/2 - Σ c_α s_α
    let n = rs.rank;
    let mut expected_h = HcElement::zero(n);
    for i in 0..n {
        let mut x = vec![0; n];
        let mut y = vec![0; n];
        x[i] = 1;
        y[i] = 1;
        expected_h.add_term(
            PbwKey {
                x,
                w: GroupElement::identity(n),
                y,
            },
            ParamScalar::one(),
        );
    }
    expected_h.add_term(
        PbwKey {
            x: vec![0; n],
            w: GroupElement::identity(n),
            y: vec![0; n],
        },
        ParamScalar::constant(rational::rat(n as i64, 2)),
    );
    for i in 0..rs.num_positive() {
        expected_h.add_term(
            PbwKey {
                x: vec![0; n],
                w: rs.reflection(i).clone(),
                y: vec![0; n],
            },
            -&ParamScalar::param(rs.length_class(i)),
        );
    }

    let constant = |p: &Option<ParamScalar>| p.as_ref().and_then(|v| v.as_constant());
    let (ca, cb, cg) = (constant(&a), constant(&b), constant(&gamma));
    let zero = rational::zero();
    let checks = vec![
        Check::holds(
            "h normal form",
            "h equals sum x_i y_i + n/2 - sum over R+ of c_a s_a",
            h == expected_h,
            "sum x_i y_i + n/2 - sum c_a s_a",
            format!("{} terms", h.num_terms()),
        ),
        Check::holds(
            "[h,x2] proportional",
            "[h, x^2] is a multiple of x^2",
            a.is_some(),
            "a x^2",
            show(&a, sl),
        ),
        Check::holds(
            "[h,y2] proportional",
            "[h, y^2] is a multiple of y^2",
            b.is_some(),
            "b y^2",
            show(&b, sl),
        ),
        Check::holds(
            "[x2,y2] proportional",
            "[x^2, y^2] is a multiple of h",
            gamma.is_some(),
            "gamma h",
            show(&gamma, sl),
        ),
        Check::holds(
            "constants independent of c",
            "structure constants do not involve the parameters",
            ca.is_some() && cb.is_some() && cg.is_some(),
            "rational constants",
            format!(
                "a={}, b={}, gamma={}",
                show(&a, sl),
                show(&b, sl),
                show(&gamma, sl)
            ),
        ),
        Check::holds(
            "sl2 consistency",
            "a = -b, a != 0 and gamma != 0, so rescaling gives the sl2 relations",
            matches!((&ca, &cb, &cg), (Some(x), Some(y), Some(g)) if *x == -y.clone() && *x != zero && *g != zero),
            "a = -b != 0, gamma != 0",
            format!(
                "a={}, b={}, gamma={}",
                show(&a, sl),
                show(&b, sl),
                show(&gamma, sl)
            ),
        ),
    ];
    Ok(Sl2Report {
        a,
        b,
        gamma,
        checks,
    })
}

/// For every monomial `f` of degree `m ≤ max_degree`, `h·(f ⊗ 1)` in
/// `M_c(triv)` equals `(m + n/2 - Σ c_α) f`, symbolically in `c`.
pub fn h_grading_check(rs: &RootSystemData, max_degree: u32) -> Result<Vec<Check>> {
    let n = rs.rank;
    let rw = Rewriter::new(rs, max_degree as usize + 2);
    let half = ParamScalar::constant(rational::rat(1, 2));
    let total_c = sum_c(rs);
    let mut checks = Vec::new();
    for m in 0..=max_degree {
        let mut ok = true;
        for mono in monomials_of_degree(n, m) {
            let mut fword: Word = Vec::new();
            for (i, &e) in mono.iter().enumerate() {
                fword.extend(core::iter::repeat_n(Letter::X(i), e as usize));
            }
            let mut words = Vec::new();
            for i in 0..n {
                for pair in [[Letter::X(i), Letter::Y(i)], [Letter::Y(i), Letter::X(i)]] {
                    let mut w = pair.to_vec();
                    w.extend(fword.iter().cloned());
                    words.push((half.clone(), w));
                }
            }
            let got = rw.normal_form_sum(&words)?.on_trivial_generator();
            let scalar =
                &ParamScalar::constant(rational::rat(2 * m as i64 + n as i64, 2)) - &total_c;
            let mut want = alloc::collections::BTreeMap::new();
            if !scalar.is_zero() {
                want.insert(mono.clone(), scalar);
            }
            ok &= got == want;
        }
        checks.push(Check::holds(
            format!("h eigenvalue degree {m}"),
            "h acts on degree-m polynomials in M_c(triv) by m + n/2 - sum c_a",
            ok,
            "m + n/2 - sum c_a",
            if ok { "m + n/2 - sum c_a" } else { "mismatch" },
        ));
    }
    let _ = linear_words;
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{build_root_system, TypeLabel};

    #[test]
    fn sl2_constants() {
        for (l, n) in [(TypeLabel::A, 1), (TypeLabel::A, 2), (TypeLabel::B, 2)] {
            let rs = build_root_system(l, n).unwrap();
            let r = sl2_closure_check(&rs).unwrap();
            assert!(r.pass(), "{:?}", r.checks);
            assert_eq!(r.a.unwrap().as_constant().unwrap(), rational::int(2));
            assert_eq!(r.b.unwrap().as_constant().unwrap(), rational::int(-2));
            assert_eq!(r.gamma.unwrap().as_constant().unwrap(), rational::int(-4));
        }
    }

    #[test]
    fn h_grading() {
        for (l, n, d) in [
            (TypeLabel::A, 1, 3),
            (TypeLabel::B, 2, 2),
            (TypeLabel::G, 2, 2),
        ] {
            let rs = build_root_system(l, n).unwrap();
            let checks = h_grading_check(&rs, d).unwrap();
            assert!(crate::report::all_pass(&checks), "{checks:?}");
        }
    }
}
