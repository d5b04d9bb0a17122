//! Bigraded dimensions of `D_W = C[h ⊕ h*] / ⟨C[h ⊕ h*]^W_+⟩`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{Cell, DiagonalLab};
use crate::algebra::{rational, LaurentPoly, RowSpace, SparseVec};
use crate::cherednik::contravariant::coinvariant_coefficients;
use crate::error::{Error, Result};
use crate::report::Check;
use crate::root_system::RootSystemData;
use crate::series::hilbert_l;

/// Largest number of monomials allowed in one bidegree.
pub const DEFAULT_CELL_BUDGET: usize = 50_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedTable {
    pub dims: BTreeMap<(u32, u32), u128>,
    pub bounds: (u32, u32),
    /// Total degree of an antidiagonal that vanished entirely inside the
    /// bounds; every cell beyond it is zero as well.
    pub certified_degree: Option<u32>,
}

impl BigradedTable {
    pub fn get(&self, a: u32, b: u32) -> u128 {
        self.dims.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.dims.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.dims
            .iter()
            .all(|(&(a, b), &v)| a > self.bounds.1 || b > self.bounds.0 || self.get(b, a) == v)
    }

    /// Collapses to the grading `deg x = 1`, `deg y = -1`.
    pub fn z_graded(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (&(a, b), &v) in &self.dims {
            p.add_term(a as i64 - b as i64, rational::int(v as i64));
        }
        p
    }

    /// Dimensions of the `(a, 0)` column.
    pub fn x_column(&self) -> Vec<u128> {
        let mut col: Vec<u128> = (0..=self.bounds.0).map(|a| self.get(a, 0)).collect();
        while col.last() == Some(&0) {
            col.pop();
        }
        col
    }
}

fn shift(from: &Cell, to: &Cell, v: &SparseVec, var: usize) -> SparseVec {
    v.iter()
        .map(|(i, c)| {
            let mut m = from.monomials[*i].clone();
            m[var] += 1;
            (
                to.position(&m)
                    .expect("shifted monomial lies in the next cell"),
                c.clone(),
            )
        })
        .collect()
}

/// Computes `dim D_W` in every bidegree of the box `[0, A] × [0, B]`, one
/// total degree at a time, stopping at the first antidiagonal that is
/// entirely zero.
pub fn diagonal_coinvariant_dims(lab: &DiagonalLab, bounds: (u32, u32)) -> Result<BigradedTable> {
    let n = lab.rank();
    let (max_a, max_b) = bounds;
    let mut dims = BTreeMap::new();
    let mut prev: BTreeMap<(u32, u32), (Cell, Vec<SparseVec>)> = BTreeMap::new();
    let mut certified_degree = None;
    for d in 0..=max_a + max_b {
        let mut cur = BTreeMap::new();
        let mut all_zero = true;
        for a in d.saturating_sub(max_b)..=d.min(max_a) {
            let b = d - a;
            let cell = lab.cell(a, b)?;
            let mut space = RowSpace::new();
            if d > 0 {
                for i in 0..n {
                    if let Some((pc, basis)) = a.checked_sub(1).and_then(|pa| prev.get(&(pa, b))) {
                        for v in basis {
                            space.insert(shift(pc, &cell, v, i));
                        }
                    }
                    if let Some((pc, basis)) = b.checked_sub(1).and_then(|pb| prev.get(&(a, pb))) {
                        for v in basis {
                            space.insert(shift(pc, &cell, v, n + i));
                        }
                    }
                }
                if space.rank() < cell.len() {
                    for g in lab.invariant_space_basis(a, b)? {
                        space.insert(cell.to_vec(g.poly())?);
                    }
                }
            }
            let dim = (cell.len() - space.rank()) as u128;
            if dim > 0 {
                all_zero = false;
                dims.insert((a, b), dim);
            }
            cur.insert((a, b), (cell, space.into_basis()));
        }
        if d > 0 && all_zero && d <= max_a.min(max_b) {
            certified_degree = Some(d);
            break;
        }
        prev = cur;
    }
    Ok(BigradedTable {
        dims,
        bounds,
        certified_degree,
    })
}

/// Structural checks on a table: completeness, `x ↔ y` symmetry and the
/// classical coinvariant algebra in the `(a, 0)` column.
pub fn table_checks(rs: &RootSystemData, table: &BigradedTable) -> Vec<Check> {
    let expected_col = coinvariant_coefficients(&rs.exponents);
    vec![
        Check::holds(
            "zero frame",
            "some antidiagonal inside the bounds vanishes, so the table is complete",
            table.certified_degree.is_some(),
            "vanishing antidiagonal",
            match table.certified_degree {
                Some(d) => format!("total degree {d}"),
                None => "none within bounds".into(),
            },
        ),
        Check::holds(
            "symmetry",
            "dim D_W(a,b) = dim D_W(b,a)",
            table.is_symmetric(),
            "symmetric",
            if table.is_symmetric() {
                "symmetric"
            } else {
                "asymmetric"
            },
        ),
        Check::holds(
            "x column",
            "the (a,0) column is the classical coinvariant algebra, prod (1+...+t^e_k)",
            table.x_column() == expected_col,
            format!("{expected_col:?}"),
            format!("{:?}", table.x_column()),
        ),
    ]
}

#[derive(Clone, Debug)]
pub struct DwComparison {
    pub dw: LaurentPoly,
    pub rw: LaurentPoly,
    pub equal: bool,
    /// Degrees where `D_W` is strictly larger than `R_W`.
    pub strict_degrees: Vec<i64>,
    pub checks: Vec<Check>,
}

impl DwComparison {
    pub fn pass(&self) -> bool {
        crate::report::all_pass(&self.checks)
    }
}

/// Compares the `Z`-graded series of `D_W` with that of `R_W`, i.e. the
/// Hilbert series of `L_c(triv)`.
pub fn compare_dw_rw(rs: &RootSystemData, table: &BigradedTable) -> Result<DwComparison> {
    if table.certified_degree.is_none() {
        return Err(Error::IncompleteTable {
            a: table.bounds.0 as usize,
            b: table.bounds.1 as usize,
        });
    }
    let dw = table.z_graded();
    let rw = hilbert_l(rs);
    let lo = dw.min_exp().unwrap_or(0).min(rw.min_exp().unwrap_or(0));
    let hi = dw.max_exp().unwrap_or(0).max(rw.max_exp().unwrap_or(0));
    let mut dominated = true;
    let mut strict_degrees = Vec::new();
    for e in lo..=hi {
        let (x, y) = (dw.coeff(e), rw.coeff(e));
        if x < y {
            dominated = false;
        } else if x > y {
            strict_degrees.push(e);
        }
    }
    let equal = dw == rw;
    let checks = vec![
        Check::holds(
            "domination",
            "every coefficient of the D_W series is at least the R_W coefficient",
            dominated,
            format!("{rw}"),
            format!("{dw}"),
        ),
        Check::holds(
            "totals",
            "dim D_W >= (h+1)^n",
            dw.value_at_one() >= rw.value_at_one(),
            format!("{}", rw.value_at_one()),
            format!("{}", dw.value_at_one()),
        ),
    ];
    Ok(DwComparison {
        dw,
        rw,
        equal,
        strict_degrees,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coinvariant::DiagonalLab;
    use crate::root_system::{build_with_group, TypeLabel, DEFAULT_GROUP_BUDGET};

    fn table(l: TypeLabel, n: usize) -> (RootSystemData, BigradedTable) {
        let (rs, g) = build_with_group(l, n, DEFAULT_GROUP_BUDGET).unwrap();
        let g = g.unwrap();
        let lab = DiagonalLab::new(&rs, &g);
        let bound = n as u32 * rs.coxeter_number;
        let t = diagonal_coinvariant_dims(&lab, (bound, bound)).unwrap();
        (rs, t)
    }

    #[test]
    fn a1_table() {
        let (rs, t) = table(TypeLabel::A, 1);
        let want: BTreeMap<_, _> = [((0, 0), 1), ((1, 0), 1), ((0, 1), 1)]
            .into_iter()
            .collect();
        assert_eq!(t.dims, want);
        assert_eq!(t.certified_degree, Some(2));
        let cmp = compare_dw_rw(&rs, &t).unwrap();
        assert!(cmp.equal && cmp.pass());
        assert!(crate::report::all_pass(&table_checks(&rs, &t)));
    }

    #[test]
    fn a2_total_is_sixteen() {
        let (rs, t) = table(TypeLabel::A, 2);
        assert_eq!(t.total(), 16);
        assert!(crate::report::all_pass(&table_checks(&rs, &t)));
        assert!(compare_dw_rw(&rs, &t).unwrap().equal);
    }

    #[test]
    fn incomplete_when_box_too_small() {
        let (rs, g) = build_with_group(TypeLabel::A, 2, DEFAULT_GROUP_BUDGET).unwrap();
        let g = g.unwrap();
        let lab = DiagonalLab::new(&rs, &g);
        let t = diagonal_coinvariant_dims(&lab, (1, 1)).unwrap();
        assert!(t.certified_degree.is_none());
        assert!(matches!(
            compare_dw_rw(&rs, &t),
            Err(Error::IncompleteTable { .. })
        ));
    }
}
