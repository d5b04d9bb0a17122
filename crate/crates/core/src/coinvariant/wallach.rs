//! Do `C[h]^W`, `C[h*]^W` and their iterated Poisson brackets generate all
//! diagonal invariants? Checked cell by cell up to a total degree.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::{poisson_bracket, BiPoly, Cell, DiagonalLab};
use crate::algebra::RowSpace;
use crate::error::Result;
use crate::report::Check;

#[derive(Clone, Debug)]
pub struct WallachReport {
    /// `(a, b) -> (dim generated, dim invariants)`.
    pub cells: BTreeMap<(u32, u32), (usize, usize)>,
    pub checks: Vec<Check>,
}

impl WallachReport {
    pub fn pass(&self) -> bool {
        crate::report::all_pass(&self.checks)
    }
}

struct Span {
    cell: Cell,
    space: RowSpace,
    elements: Vec<BiPoly>,
}

impl Span {
    fn insert(&mut self, f: BiPoly) -> Result<bool> {
        let added = self.space.insert(self.cell.to_vec(f.poly())?);
        if added {
            self.elements.push(f);
        }
        Ok(added)
    }
}

fn span_for<'m>(
    lab: &DiagonalLab,
    map: &'m mut BTreeMap<(u32, u32), Span>,
    a: u32,
    b: u32,
) -> Result<&'m mut Span> {
    match map.entry((a, b)) {
        Entry::Occupied(o) => Ok(o.into_mut()),
        Entry::Vacant(v) => {
            let cell = lab.cell(a, b)?;
            Ok(v.insert(Span {
                cell,
                space: RowSpace::new(),
                elements: Vec::new(),
            }))
        }
    }
}

pub fn wallach_spot_check(lab: &DiagonalLab, max_total_degree: u32) -> Result<WallachReport> {
    let top = max_total_degree;
    let mut lie: BTreeMap<(u32, u32), Span> = BTreeMap::new();
    let mut work: Vec<BiPoly> = Vec::new();
    for d in 1..=top {
        for (a, b) in [(d, 0), (0, d)] {
            for g in lab.invariant_space_basis(a, b)? {
                if span_for(lab, &mut lie, a, b)?.insert(g.clone())? {
                    work.push(g);
                }
            }
        }
    }
    while let Some(f) = work.pop() {
        let others: Vec<BiPoly> = lie
            .values()
            .flat_map(|s| s.elements.iter().cloned())
            .collect();
        for g in others {
            let br = poisson_bracket(&f, &g);
            let Some((a, b)) = br.bidegree() else {
                continue;
            };
            if a + b > top || a + b == 0 {
                continue;
            }
            if span_for(lab, &mut lie, a, b)?.insert(br.clone())? {
                work.push(br);
            }
        }
    }

    let mut generated: BTreeMap<(u32, u32), Span> = BTreeMap::new();
    let mut cells = BTreeMap::new();
    let mut all_ok = true;
    for d in 1..=top {
        for a in 0..=d {
            let b = d - a;
            let mut new_elems: Vec<BiPoly> = lie
                .get(&(a, b))
                .map(|s| s.elements.clone())
                .unwrap_or_default();
            for ((ga, gb), gs) in &generated {
                let (Some(la), Some(lb)) = (a.checked_sub(*ga), b.checked_sub(*gb)) else {
                    continue;
                };
                if la + lb == 0 {
                    continue;
                }
                if let Some(ls) = lie.get(&(la, lb)) {
                    for f in &gs.elements {
                        for g in &ls.elements {
                            new_elems.push(f * g);
                        }
                    }
                }
            }
            let inv = lab.invariant_space_basis(a, b)?.len();
            let span = span_for(lab, &mut generated, a, b)?;
            for f in new_elems {
                if span.space.rank() == inv {
                    break;
                }
                span.insert(f)?;
            }
            let got = span.space.rank();
            all_ok &= got == inv;
            cells.insert((a, b), (got, inv));
        }
    }
    let short: Vec<_> = cells
        .iter()
        .filter(|(_, (g, i))| g != i)
        .map(|(k, _)| *k)
        .collect();
    let checks = alloc::vec![Check::holds(
        "invariants generated",
        "C[h]^W, C[h*]^W and their iterated Poisson brackets span every bidegree of the diagonal invariants",
        all_ok,
        format!("all cells with a+b <= {top}"),
        if short.is_empty() { "all cells".into() } else { format!("short in {short:?}") },
    )];
    Ok(WallachReport { cells, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{build_with_group, TypeLabel, DEFAULT_GROUP_BUDGET};

    #[test]
    fn small_ranks() {
        for (l, n, d) in [
            (TypeLabel::A, 1, 4),
            (TypeLabel::A, 2, 4),
            (TypeLabel::B, 2, 4),
        ] {
            let (rs, g) = build_with_group(l, n, DEFAULT_GROUP_BUDGET).unwrap();
            let g = g.unwrap();
            let lab = DiagonalLab::new(&rs, &g);
            let r = wallach_spot_check(&lab, d).unwrap();
            assert!(r.pass(), "{l}{n}: {:?}", r.cells);
        }
    }
}
