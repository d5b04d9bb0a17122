//! Weyl types and their integer Gram matrices in the simple-root basis.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLabel {
    pub fn as_char(self) -> char {
        match self {
            TypeLabel::A => 'A',
            TypeLabel::B => 'B',
            TypeLabel::C => 'C',
            TypeLabel::D => 'D',
            TypeLabel::E => 'E',
            TypeLabel::F => 'F',
            TypeLabel::G => 'G',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => TypeLabel::A,
            'B' => TypeLabel::B,
            'C' => TypeLabel::C,
            'D' => TypeLabel::D,
            'E' => TypeLabel::E,
            'F' => TypeLabel::F,
            'G' => TypeLabel::G,
            _ => return None,
        })
    }

    /// Rejects pairs that do not name an irreducible Weyl group.
    pub fn validate(self, rank: usize) -> Result<()> {
        let reason = match self {
            TypeLabel::A if rank < 1 => "type A needs rank at least 1",
            TypeLabel::B | TypeLabel::C if rank < 2 => "types B and C need rank at least 2",
            TypeLabel::D if rank < 4 => "type D needs rank at least 4",
            TypeLabel::E if !(6..=8).contains(&rank) => "type E exists only in ranks 6, 7, 8",
            TypeLabel::F if rank != 4 => "type F exists only in rank 4",
            TypeLabel::G if rank != 2 => "type G exists only in rank 2",
            _ if rank > 64 => "rank above 64 is not supported",
            _ => return Ok(()),
        };
        Err(Error::InvalidType {
            label: self.as_char(),
            rank,
            reason,
        })
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => TypeLabel::from_char(c)
                .ok_or_else(|| Error::InvalidArgument(alloc::format!("unknown Weyl type {s:?}"))),
            _ => Err(Error::InvalidArgument(alloc::format!(
                "unknown Weyl type {s:?}"
            ))),
        }
    }
}

/// Symmetric Gram matrix `(α_i, α_j)` scaled so short roots have squared
/// length 2. Numbering follows Bourbaki.
pub fn gram_matrix(label: TypeLabel, n: usize) -> Result<Vec<Vec<i64>>> {
    label.validate(n)?;
    let mut g = vec![vec![0i64; n]; n];
    let edge = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match label {
        TypeLabel::A => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 1..n {
                edge(&mut g, i - 1, i, -1);
            }
        }
        TypeLabel::B => {
            for i in 0..n - 1 {
                g[i][i] = 4;
            }
            g[n - 1][n - 1] = 2;
            for i in 1..n {
                edge(&mut g, i - 1, i, -2);
            }
        }
        TypeLabel::C => {
            for i in 0..n - 1 {
                g[i][i] = 2;
            }
            g[n - 1][n - 1] = 4;
            for i in 1..n - 1 {
                edge(&mut g, i - 1, i, -1);
            }
            edge(&mut g, n - 2, n - 1, -2);
        }
        TypeLabel::D => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 1..n - 1 {
                edge(&mut g, i - 1, i, -1);
            }
            edge(&mut g, n - 3, n - 1, -1);
        }
        TypeLabel::E => {
            for i in 0..n {
                g[i][i] = 2;
            }
            edge(&mut g, 0, 2, -1);
            edge(&mut g, 1, 3, -1);
            for i in 3..n {
                edge(&mut g, i - 1, i, -1);
            }
        }
        TypeLabel::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            edge(&mut g, 0, 1, -2);
            edge(&mut g, 1, 2, -2);
            edge(&mut g, 2, 3, -1);
        }
        TypeLabel::G => {
            g[0][0] = 2;
            g[1][1] = 6;
            edge(&mut g, 0, 1, -3);
        }
    }
    Ok(g)
}

/// `a_ij = 2(α_i, α_j)/(α_i, α_i)`.
pub fn cartan_from_gram(gram: &[Vec<i64>]) -> Vec<Vec<i64>> {
    gram.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|&b| {
                    debug_assert_eq!((2 * b) % gram[i][i], 0);
                    2 * b / gram[i][i]
                })
                .collect()
        })
        .collect()
}

/// Exponents from standard tables, kept only to cross-check the computed
/// ones.
pub fn reference_exponents(label: TypeLabel, n: usize) -> Vec<u32> {
    let n32 = n as u32;
    let mut e: Vec<u32> = match label {
        TypeLabel::A => (1..=n32).collect(),
        TypeLabel::B | TypeLabel::C => (1..=n32).map(|i| 2 * i - 1).collect(),
        TypeLabel::D => {
            let mut v: Vec<u32> = (1..n32).map(|i| 2 * i - 1).collect();
            v.push(n32 - 1);
            v
        }
        TypeLabel::E => match n {
            6 => vec![1, 4, 5, 7, 8, 11],
            7 => vec![1, 5, 7, 9, 11, 13, 17],
            _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
        },
        TypeLabel::F => vec![1, 5, 7, 11],
        TypeLabel::G => vec![1, 5],
    };
    e.sort_unstable();
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invalid_pairs_rejected() {
        assert!(gram_matrix(TypeLabel::D, 3).is_err());
        assert!(gram_matrix(TypeLabel::E, 5).is_err());
        assert!(gram_matrix(TypeLabel::G, 3).is_err());
        assert!(gram_matrix(TypeLabel::B, 1).is_err());
        assert!(gram_matrix(TypeLabel::A, 0).is_err());
    }

    #[test]
    fn cartan_entries() {
        let b2 = cartan_from_gram(&gram_matrix(TypeLabel::B, 2).unwrap());
        assert_eq!(b2, vec![vec![2, -1], vec![-2, 2]]);
        let g2 = cartan_from_gram(&gram_matrix(TypeLabel::G, 2).unwrap());
        assert_eq!(g2, vec![vec![2, -3], vec![-1, 2]]);
        let e6 = cartan_from_gram(&gram_matrix(TypeLabel::E, 6).unwrap());
        assert_eq!(e6[1][3], -1);
        assert_eq!(e6[1][2], 0);
    }

    #[test]
    fn parse_labels() {
        assert_eq!("b".parse::<TypeLabel>().unwrap(), TypeLabel::B);
        assert!("H".parse::<TypeLabel>().is_err());
        assert!("AB".parse::<TypeLabel>().is_err());
    }
}
