//! The commutators `[y_i, x_j]` of types `B_n` and `C_n` rewritten in the
//! orthonormal coordinates `x_i = ε_i`, with each reflection labelled by
//! its root in those coordinates.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use super::commutator_general;
use crate::algebra::{rational, ExactMatrix, Rational};
use crate::character::ParamScalar;
use crate::error::{Error, Result};
use crate::root_system::{build_root_system, LengthClass, TypeLabel};

/// `[y_i, x_j]` as a map from reflection labels (`"1"` for the identity,
/// `"x1+x2"`, `"x1-x2"`, `"x1"`) to coefficients.
pub type LabelledElement = BTreeMap<String, ParamScalar>;

#[derive(Clone, Debug)]
pub struct TypeBDisplay {
    pub label: TypeLabel,
    pub rank: usize,
    pub entries: Vec<Vec<LabelledElement>>,
}

/// Columns are the `ε`-coordinates of the simple roots.
fn epsilon_matrix(label: TypeLabel, n: usize) -> Vec<Vec<i64>> {
    let mut p = vec![vec![0i64; n]; n];
    for a in 0..n - 1 {
        p[a][a] = 1;
        p[a + 1][a] = -1;
    }
    p[n - 1][n - 1] = if label == TypeLabel::C { 2 } else { 1 };
    p
}

fn root_label(eps: &[i64]) -> String {
    let g = eps.iter().fold(0i64, |g, &v| g.gcd(&v));
    let sign = eps.iter().find(|&&v| v != 0).map_or(1, |v| v.signum());
    let mut s = String::new();
    for (i, &v) in eps.iter().enumerate() {
        let v = v * sign / g;
        if v == 0 {
            continue;
        }
        if !s.is_empty() || v < 0 {
            s.push(if v < 0 { '-' } else { '+' });
        }
        if v.abs() != 1 {
            s += &format!("{}", v.abs());
        }
        s += &format!("x{}", i + 1);
    }
    s
}

/// Computes the display for `B_n` or `C_n`.
pub fn type_b_commutator_display(label: TypeLabel, n: usize) -> Result<TypeBDisplay> {
    if !matches!(label, TypeLabel::B | TypeLabel::C) || n < 2 {
        return Err(Error::InvalidArgument(format!(
            "display needs B_n or C_n with n >= 2, got {label}{n}"
        )));
    }
    let rs = build_root_system(label, n)?;
    let p = epsilon_matrix(label, n);
    let q = ExactMatrix::from_rows(
        p.iter()
            .map(|r| r.iter().map(|&v| rational::int(v)).collect())
            .collect(),
    )?
    .inverse()?;
    let labels: BTreeMap<_, _> = rs
        .positive_roots()
        .iter()
        .enumerate()
        .map(|(a, root)| {
            let eps: Vec<i64> = (0..n)
                .map(|i| (0..n).map(|k| p[i][k] * root[k]).sum())
                .collect();
            (rs.reflection(a).clone(), root_label(&eps))
        })
        .collect();
    let mut entries = Vec::with_capacity(n);
    for i in 0..n {
        let y: Vec<Rational> = (0..n).map(|a| rational::int(p[i][a])).collect();
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let x: Vec<Rational> = (0..n).map(|b| q.get(b, j).clone()).collect();
            let e = commutator_general(&rs, &y, &x);
            let mut out = LabelledElement::new();
            for (w, c) in e.terms() {
                let key = if w.is_identity() {
                    "1".into()
                } else {
                    labels[w].clone()
                };
                out.insert(key, c.clone());
            }
            row.push(out);
        }
        entries.push(row);
    }
    Ok(TypeBDisplay {
        label,
        rank: n,
        entries,
    })
}

/// The expected display: `δ_ij - c_s Σ_{t≠i}(s_{x_i+x_t} + s_{x_i-x_t}) -
/// 2 c_l s_{x_i}` on the diagonal and `-c_s s_{x_i+x_j} + c_s s_{x_i-x_j}`
/// off it, where `c_s` goes with `x_i ± x_j` and `c_l` with `x_i`.
/// `swap` exchanges the two parameters.
pub fn expected_display(n: usize, swap: bool) -> Vec<Vec<LabelledElement>> {
    let (pm, single) = if swap {
        (LengthClass::Long, LengthClass::Short)
    } else {
        (LengthClass::Short, LengthClass::Long)
    };
    let pair = |i: usize, j: usize, plus: bool| {
        let (a, b) = (i.min(j), i.max(j));
        format!("x{}{}x{}", a + 1, if plus { '+' } else { '-' }, b + 1)
    };
    let cs = ParamScalar::param(pm);
    let cl = ParamScalar::param(single);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = LabelledElement::new();
                    if i == j {
                        e.insert("1".into(), ParamScalar::one());
                        for t in (0..n).filter(|&t| t != i) {
                            e.insert(pair(i, t, true), -&cs);
                            e.insert(pair(i, t, false), -&cs);
                        }
                        e.insert(format!("x{}", i + 1), cl.scale(&rational::int(-2)));
                    } else {
                        e.insert(pair(i, j, true), -&cs);
                        // s_{x_i - x_j} = s_{x_j - x_i}; the sign comes from ⟨α∨, x_j⟩
                        e.insert(pair(i, j, false), cs.clone());
                    }
                    e
                })
                .collect()
        })
        .collect()
}

impl TypeBDisplay {
    pub fn matches(&self, swap: bool) -> bool {
        self.entries == expected_display(self.rank, swap)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                out += &format!("[y{}, x{}] = {}\n", i + 1, j + 1, render_element(e));
            }
        }
        out
    }
}

pub fn render_element(e: &LabelledElement) -> String {
    if e.is_empty() {
        return "0".into();
    }
    let mut parts = Vec::new();
    if let Some(c) = e.get("1") {
        parts.push(format!("({c})"));
    }
    for (k, c) in e.iter().filter(|(k, _)| *k != "1") {
        parts.push(format!("({c}) s[{k}]"));
    }
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(root_label(&[1, -1, 0]), "x1-x2");
        assert_eq!(root_label(&[0, 2, 0]), "x2");
        assert_eq!(root_label(&[-1, -1]), "x1+x2");
    }

    #[test]
    fn c_matches_and_b_matches_swapped() {
        for n in [2, 3] {
            let c = type_b_commutator_display(TypeLabel::C, n).unwrap();
            assert!(c.matches(false), "{}", c.render());
            let b = type_b_commutator_display(TypeLabel::B, n).unwrap();
            assert!(b.matches(true), "{}", b.render());
            assert!(!b.matches(false));
        }
    }

    #[test]
    fn rejects_other_types() {
        assert!(type_b_commutator_display(TypeLabel::A, 3).is_err());
    }
}
