//! Dense exact matrices: fraction-free rank and determinant, and the
//! characteristic polynomial in the `det(1 - t·M)` convention.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows"));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Self {
            rows,
            cols,
            data: entries
                .iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * k).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(Rational::is_integer)
    }

    /// Integer entries, if every entry is an integer.
    pub fn to_integer_rows(&self) -> Option<Vec<Vec<BigInt>>> {
        if !self.is_integral() {
            return None;
        }
        Some(
            (0..self.rows)
                .map(|r| self.row(r).iter().map(|v| v.numer().clone()).collect())
                .collect(),
        )
    }

    /// Each row scaled by the lcm of its denominators; row scaling does not
    /// change rank and changes the determinant by a known factor.
    fn cleared_rows(&self) -> (Vec<Vec<BigInt>>, Rational) {
        let mut factor = Rational::one();
        let rows = (0..self.rows)
            .map(|r| {
                let l = self
                    .row(r)
                    .iter()
                    .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                factor *= Rational::from_integer(l.clone());
                self.row(r)
                    .iter()
                    .map(|v| v.numer() * (&l / v.denom()))
                    .collect()
            })
            .collect();
        (rows, factor)
    }

    /// Rank over ℚ.
    pub fn rank(&self) -> usize {
        let (mut m, _) = self.cleared_rows();
        bareiss(&mut m, self.cols).0
    }

    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let (mut m, factor) = self.cleared_rows();
        let (rank, det) = bareiss(&mut m, self.cols);
        if rank < self.rows {
            return Ok(Rational::zero());
        }
        Ok(Rational::from_integer(det) / factor)
    }

    /// `det(1 - t·M)`.
    pub fn char_poly(&self) -> Result<LaurentPoly> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let rows: Vec<Vec<Rational>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let c = berkowitz(&rows);
        Ok(LaurentPoly::from_terms(
            c.into_iter().enumerate().map(|(k, v)| (k as i64, v)),
        ))
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch("matrix product"));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let v = out.get(r, c) + a * rhs.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Inverse by Gauss–Jordan elimination over ℚ.
    pub fn inverse(&self) -> Result<ExactMatrix> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut inv: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        if r == c {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or_else(|| Error::InvalidArgument("singular matrix".into()))?;
            a.swap(col, piv);
            inv.swap(col, piv);
            let p = a[col][col].recip();
            for c in 0..n {
                a[col][c] = &a[col][c] * &p;
                inv[col][c] = &inv[col][c] * &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..n {
                        let av = &a[r][c] - &f * &a[col][c];
                        a[r][c] = av;
                        let iv = &inv[r][c] - &f * &inv[col][c];
                        inv[r][c] = iv;
                    }
                }
            }
        }
        ExactMatrix::from_rows(inv)
    }
}

/// Fraction-free elimination with row pivoting. Returns the rank and, for a
/// full-rank square input, the determinant.
pub fn bareiss(m: &mut [Vec<BigInt>], cols: usize) -> (usize, BigInt) {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if piv != rank {
            m.swap(piv, rank);
            sign = -sign;
        }
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    let det = if rank == rows && rows == cols && rows > 0 {
        sign * &m[rows - 1][cols - 1]
    } else if rows == 0 && cols == 0 {
        BigInt::one()
    } else {
        BigInt::zero()
    };
    (rank, det)
}

/// Coefficients `[1, c_1, …, c_n]` of `det(1 - t·A)` by the division-free
/// Berkowitz algorithm. Works over any commutative ring.
pub fn berkowitz<T>(a: &[Vec<T>]) -> Vec<T>
where
    T: Clone + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>,
{
    let n = a.len();
    // vector of det(λ - A_r) coefficients, highest power first
    let mut v: Vec<T> = vec![T::one()];
    for r in 0..n {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, ...
        let mut col: Vec<T> = Vec::with_capacity(r + 2);
        col.push(T::one());
        col.push(-a[r][r].clone());
        let mut w: Vec<T> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let rc = (0..r).fold(T::zero(), |acc, j| acc + a[r][j].clone() * w[j].clone());
            col.push(-rc);
            w = (0..r)
                .map(|i| (0..r).fold(T::zero(), |acc, j| acc + a[i][j].clone() * w[j].clone()))
                .collect();
        }
        let mut next: Vec<T> = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut s = T::zero();
            for j in 0..=i.min(r) {
                if i - j < col.len() && j < v.len() {
                    s = s + col[i - j].clone() * v[j].clone();
                }
            }
            next.push(s);
        }
        v = next;
    }
    // det(1 - tA) = t^n det(1/t - A): same coefficient list read low-to-high
    v
}

/// Elementary divisors `d_1 | d_2 | …` (length `min(rows, cols)`, zeros
/// last) and rank of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm<T> {
    pub divisors: Vec<T>,
    pub rank: usize,
}

pub fn smith_normal_form<T>(entries: &[Vec<T>]) -> SmithForm<T>
where
    T: Clone + Integer + Signed,
{
    let rows = entries.len();
    let cols = entries.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<T>> = entries.to_vec();
    let k = rows.min(cols);
    for t in 0..k {
        loop {
            // smallest nonzero |entry| in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..cols {
                    if !m[r][c].is_zero()
                        && best.is_none_or(|(br, bc)| m[r][c].abs() < m[br][bc].abs())
                    {
                        best = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = best else {
                break;
            };
            m.swap(t, pr);
            for row in m.iter_mut() {
                row.swap(t, pc);
            }
            let mut clean = true;
            for r in t + 1..rows {
                if !m[r][t].is_zero() {
                    let q = m[r][t].div_floor(&m[t][t]);
                    for c in t..cols {
                        let v = m[r][c].clone() - q.clone() * m[t][c].clone();
                        m[r][c] = v;
                    }
                    clean &= m[r][t].is_zero();
                }
            }
            for c in t + 1..cols {
                if !m[t][c].is_zero() {
                    let q = m[t][c].div_floor(&m[t][t]);
                    for r in t..rows {
                        let v = m[r][c].clone() - q.clone() * m[r][t].clone();
                        m[r][c] = v;
                    }
                    clean &= m[t][c].is_zero();
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row t and retry
            let piv = m[t][t].clone();
            let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !m[r][c].is_multiple_of(&piv)));
            match bad {
                Some(r) => {
                    for c in t..cols {
                        let v = m[t][c].clone() + m[r][c].clone();
                        m[t][c] = v;
                    }
                }
                None => break,
            }
        }
    }
    let divisors: Vec<T> = (0..k).map(|i| m[i][i].abs()).collect();
    let rank = divisors.iter().filter(|d| !d.is_zero()).count();
    SmithForm { divisors, rank }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn char_poly_examples() {
        let id = ExactMatrix::identity(2);
        assert_eq!(
            id.char_poly().unwrap(),
            LaurentPoly::from_ints(0, &[1, -2, 1])
        );
        let neg = id.scale(&int(-1));
        assert_eq!(
            neg.char_poly().unwrap(),
            LaurentPoly::from_ints(0, &[1, 2, 1])
        );
        let rot = ExactMatrix::from_ints(2, 2, &[0, -1, 1, -1]);
        assert_eq!(
            rot.char_poly().unwrap(),
            LaurentPoly::from_ints(0, &[1, 1, 1])
        );
        assert!(ExactMatrix::zeros(2, 3).char_poly().is_err());
    }

    #[test]
    fn snf_examples() {
        let s = smith_normal_form(&[vec![2i64, 0], vec![0, 3]]);
        assert_eq!(s.divisors, vec![1, 6]);
        let z = smith_normal_form(&[vec![0i64, 0], vec![0, 0]]);
        assert_eq!((z.divisors, z.rank), (vec![0, 0], 0));
        let d = smith_normal_form(&[vec![2i64, 0], vec![0, 0]]);
        assert_eq!((d.divisors, d.rank), (vec![2, 0], 1));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(ExactMatrix::identity(4).rank(), 4);
        let outer = ExactMatrix::from_ints(3, 3, &[1, 2, 3, 2, 4, 6, -1, -2, -3]);
        assert_eq!(outer.rank(), 1);
        assert_eq!(ExactMatrix::from_ints(4, 4, &[1; 16]).rank(), 1);
        let frac =
            ExactMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![int(3), int(2)]]).unwrap();
        assert_eq!(frac.rank(), 1);
    }

    #[test]
    fn determinant_and_inverse() {
        let m =
            ExactMatrix::from_rows(vec![vec![rat(1, 2), int(1)], vec![int(3), int(4)]]).unwrap();
        assert_eq!(m.determinant().unwrap(), int(-1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), ExactMatrix::identity(2));
    }

    fn arb_int_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        proptest::collection::vec(proptest::collection::vec(-6i64..6, n), n)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn snf_divisibility_and_determinant(m in (1usize..5).prop_flat_map(arb_int_matrix)) {
            let s = smith_normal_form(&m);
            for w in s.divisors.windows(2) {
                prop_assert!(w[1] == 0 || (w[0] != 0 && w[1] % w[0] == 0));
            }
            let n = m.len();
            let flat: Vec<i64> = m.iter().flatten().copied().collect();
            let em = ExactMatrix::from_ints(n, n, &flat);
            let det = em.determinant().unwrap();
            let prod: i64 = s.divisors.iter().product();
            prop_assert_eq!(det.abs(), int(prod));
            prop_assert_eq!(s.rank, em.rank());
        }

        #[test]
        fn char_poly_constant_and_top(m in (1usize..5).prop_flat_map(arb_int_matrix)) {
            let n = m.len();
            let flat: Vec<i64> = m.iter().flatten().copied().collect();
            let em = ExactMatrix::from_ints(n, n, &flat);
            let cp = em.char_poly().unwrap();
            prop_assert_eq!(cp.coeff(0), int(1));
            let sign = if n % 2 == 0 { int(1) } else { int(-1) };
            prop_assert_eq!(cp.coeff(n as i64), sign * em.determinant().unwrap());
        }
    }
}
