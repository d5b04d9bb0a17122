//! The contravariant form `B(f, g) = (g(T) f)(0)` on `C[h]` and the
//! graded dimensions of its quotient `L_c(triv)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::dunkl::{act, DunklContext};
use super::{index_of, monomials};
use crate::algebra::{rational, ExactMatrix, Monomial, MultiPoly, Rational};
use crate::character::Params;
use crate::error::{Error, Result};
use crate::report::Check;
use crate::root_system::{RootSystemData, WeylGroup};

struct Level {
    basis: Vec<Monomial>,
    /// `gram[q][p] = (T^q x^p)(0)`.
    gram: Vec<Vec<Rational>>,
}

/// Gram matrices of the contravariant form, built degree by degree.
pub struct ContravariantForm<'a> {
    ctx: DunklContext<'a>,
    levels: Vec<Level>,
    cap: u32,
}

impl<'a> ContravariantForm<'a> {
    pub fn new(rs: &'a RootSystemData, c: Params) -> Self {
        let n = rs.rank;
        let cap = n as u32 * rs.coxeter_number;
        Self {
            ctx: DunklContext::new(rs, c),
            levels: vec![Level {
                basis: vec![vec![0; n]],
                gram: vec![vec![rational::one()]],
            }],
            cap,
        }
    }

    pub fn degree_cap(&self) -> u32 {
        self.cap
    }

    pub fn context(&self) -> &DunklContext<'a> {
        &self.ctx
    }

    fn ensure(&mut self, d: u32) -> Result<()> {
        if d > self.cap {
            return Err(Error::DegreeBudgetExceeded {
                requested: d as usize,
                limit: self.cap as usize,
            });
        }
        let n = self.ctx.rank();
        while self.levels.len() <= d as usize {
            let deg = self.levels.len() as u32;
            let prev = &self.levels[deg as usize - 1];
            let prev_index = index_of(&prev.basis);
            let basis = monomials(n, deg);
            // T_i x^p expanded in the degree below, for every i.
            let mut images: Vec<Vec<Vec<(usize, Rational)>>> = Vec::with_capacity(n);
            for i in 0..n {
                let mut col = Vec::with_capacity(basis.len());
                for p in &basis {
                    let img = self
                        .ctx
                        .apply(i, &MultiPoly::monomial(p.clone(), rational::one()))?;
                    col.push(
                        img.terms()
                            .map(|(m, c)| (prev_index[m], c.clone()))
                            .collect(),
                    );
                }
                images.push(col);
            }
            let mut gram = Vec::with_capacity(basis.len());
            for q in &basis {
                let i = q.iter().position(|&e| e > 0).expect("positive degree");
                let mut lower = q.clone();
                lower[i] -= 1;
                let row_below = &prev.gram[prev_index[&lower]];
                let row = images[i]
                    .iter()
                    .map(|img| img.iter().map(|(r, c)| &row_below[*r] * c).sum())
                    .collect();
                gram.push(row);
            }
            self.levels.push(Level { basis, gram });
        }
        Ok(())
    }

    pub fn basis(&mut self, d: u32) -> Result<&[Monomial]> {
        self.ensure(d)?;
        Ok(&self.levels[d as usize].basis)
    }

    /// `rank B_d = dim L_c(triv)_d`.
    pub fn rank(&mut self, d: u32) -> Result<usize> {
        self.ensure(d)?;
        let m = ExactMatrix::from_rows(self.levels[d as usize].gram.clone())?;
        Ok(m.rank())
    }

    /// Image of a homogeneous degree-`d` polynomial in `L_c(triv)_d`, as the
    /// vector of pairings against all degree-`d` monomials.
    pub fn image(&mut self, d: u32, f: &MultiPoly) -> Result<Vec<Rational>> {
        self.ensure(d)?;
        let level = &self.levels[d as usize];
        let idx = index_of(&level.basis);
        let mut v = vec![rational::zero(); level.basis.len()];
        for (m, c) in f.terms() {
            let p = *idx.get(m).ok_or(Error::DimensionMismatch(
                "polynomial is not homogeneous of this degree",
            ))?;
            for (q, row) in level.gram.iter().enumerate() {
                v[q] += &row[p] * c;
            }
        }
        Ok(v)
    }

    /// Dimension of the span of the images of `fs` in `L_c(triv)_d`.
    pub fn image_rank(&mut self, d: u32, fs: &[MultiPoly]) -> Result<usize> {
        if fs.is_empty() {
            return Ok(0);
        }
        let rows = fs
            .iter()
            .map(|f| self.image(d, f))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix::from_rows(rows)?.rank())
    }
}

/// Ranks of the contravariant form in degrees `0..=max_degree`.
pub fn contravariant_ranks(rs: &RootSystemData, c: &Params, max_degree: u32) -> Result<Vec<usize>> {
    let mut form = ContravariantForm::new(rs, c.clone());
    (0..=max_degree).map(|d| form.rank(d)).collect()
}

/// Coefficients of `∏_k (1 + t + ⋯ + t^{e_k})`.
pub fn coinvariant_coefficients(exponents: &[u32]) -> Vec<u128> {
    let mut coeffs = vec![1u128];
    for &e in exponents {
        let mut next = vec![0u128; coeffs.len() + e as usize];
        for (i, c) in coeffs.iter().enumerate() {
            for j in 0..=e as usize {
                next[i + j] += c;
            }
        }
        coeffs = next;
    }
    coeffs
}

#[derive(Clone, Debug)]
pub struct CoinvariantImageReport {
    /// Dimension of the sign-isotypic part of `L_N`.
    pub sign_rank: usize,
    /// Graded dimensions of `C[h]·v_ε`, starting in degree `N`.
    pub ranks: Vec<usize>,
    pub expected: Vec<u128>,
    pub checks: Vec<Check>,
}

impl CoinvariantImageReport {
    pub fn pass(&self) -> bool {
        crate::report::all_pass(&self.checks)
    }
}

/// At `c = (1+h)/h`: the sign vector of `L_c(triv)` sits in degree `N`, is
/// unique up to scalar, and generates a copy of the coinvariant algebra.
pub fn coinvariant_image_check(
    rs: &RootSystemData,
    group: &WeylGroup,
) -> Result<CoinvariantImageReport> {
    let n = rs.rank;
    let big_n = rs.num_positive() as u32;
    let mut form = ContravariantForm::new(rs, Params::shifted(1, rs.coxeter_number));

    let antisym: Vec<MultiPoly> = monomials(n, big_n)
        .into_iter()
        .map(|m| {
            let f = MultiPoly::monomial(m, rational::one());
            let mut out = MultiPoly::zero(n);
            for w in group.elements() {
                out.add_scaled(&act(w, &f), &rational::int(w.determinant()));
            }
            out
        })
        .filter(|f| !f.is_zero())
        .collect();
    let sign_rank = form.image_rank(big_n, &antisym)?;

    let mut delta = MultiPoly::one(n);
    for root in rs.positive_roots() {
        delta = &delta
            * &MultiPoly::linear(&root.iter().map(|&k| rational::int(k)).collect::<Vec<_>>());
    }
    let delta_image = form.image(big_n, &delta)?;
    let delta_nonzero = delta_image.iter().any(|v| *v != rational::zero());

    let mut ranks = Vec::with_capacity(big_n as usize + 1);
    for k in 0..=big_n {
        let fs: Vec<MultiPoly> = monomials(n, k)
            .into_iter()
            .map(|m| delta.mul_monomial(&m))
            .collect();
        ranks.push(form.image_rank(big_n + k, &fs)?);
    }
    while ranks.last() == Some(&0) {
        ranks.pop();
    }
    let expected = coinvariant_coefficients(&rs.exponents);
    let got: Vec<u128> = ranks.iter().map(|&r| r as u128).collect();
    let total: u128 = got.iter().sum();

    let checks = vec![
        Check::equal(
            "sign vector unique",
            "the sign-isotypic part of L in degree N is one-dimensional",
            &1usize,
            &sign_rank,
        ),
        Check::holds(
            "discriminant survives",
            "the product of positive roots is nonzero in L",
            delta_nonzero,
            "nonzero",
            if delta_nonzero { "nonzero" } else { "zero" },
        ),
        Check::holds(
            "coinvariant series",
            "C[h] applied to the sign vector has series prod (1 + t + ... + t^e_k)",
            got == expected,
            format!("{expected:?}"),
            format!("{got:?}"),
        ),
        Check::equal(
            "coinvariant dimension",
            "total dimension equals |W|",
            &(group.order() as u128),
            &total,
        ),
    ];
    Ok(CoinvariantImageReport {
        sign_rank,
        ranks,
        expected,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{build_with_group, TypeLabel, DEFAULT_GROUP_BUDGET};

    #[test]
    fn a1_ranks() {
        let (rs, _) = build_with_group(TypeLabel::A, 1, DEFAULT_GROUP_BUDGET).unwrap();
        let ranks = contravariant_ranks(&rs, &Params::uniform(rational::rat(3, 2)), 2).unwrap();
        assert_eq!(ranks, vec![1, 1, 1]);
        // generic c: nothing degenerates
        assert_eq!(
            contravariant_ranks(&rs, &Params::uniform(rational::rat(1, 3)), 2).unwrap(),
            vec![1, 1, 1]
        );
    }

    #[test]
    fn a2_ranks_match_power_series() {
        let (rs, _) = build_with_group(TypeLabel::A, 2, DEFAULT_GROUP_BUDGET).unwrap();
        let ranks = contravariant_ranks(&rs, &Params::uniform(rational::rat(4, 3)), 6).unwrap();
        assert_eq!(ranks, vec![1, 2, 3, 4, 3, 2, 1]);
    }

    #[test]
    fn degree_cap() {
        let (rs, _) = build_with_group(TypeLabel::A, 1, DEFAULT_GROUP_BUDGET).unwrap();
        let mut f = ContravariantForm::new(&rs, Params::uniform(rational::rat(3, 2)));
        assert!(matches!(f.rank(3), Err(Error::DegreeBudgetExceeded { .. })));
    }

    #[test]
    fn coinvariant_images() {
        for (l, n, order) in [
            (TypeLabel::A, 1, 2u128),
            (TypeLabel::A, 2, 6),
            (TypeLabel::B, 2, 8),
        ] {
            let (rs, g) = build_with_group(l, n, DEFAULT_GROUP_BUDGET).unwrap();
            let r = coinvariant_image_check(&rs, &g.unwrap()).unwrap();
            assert!(r.pass(), "{:?}", r.checks);
            assert_eq!(r.ranks.iter().map(|&x| x as u128).sum::<u128>(), order);
        }
    }

    #[test]
    fn coinvariant_coefficient_product() {
        assert_eq!(coinvariant_coefficients(&[1, 2]), vec![1, 2, 2, 1]);
    }
}
