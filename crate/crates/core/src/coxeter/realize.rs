//! Faithful realizations used to enumerate a finite Coxeter group.
//!
//! Rank two is handled by alternating-word normal forms for any bond label.
//! Higher rank needs a crystallographic Cartan matrix, and each element is
//! stored as the permutation it induces on the (finite) root system.

use std::collections::HashMap;
use std::hash::Hash;

use super::matrix::CoxeterMatrix;
use crate::error::{Error, Result};

/// Output of a breadth-first enumeration from the identity: right
/// multiplication table and BFS depth (which is the Coxeter length).
pub(crate) struct Enumeration {
    pub right: Vec<Vec<u32>>,
    pub length: Vec<u32>,
}

pub(crate) fn enumerate(matrix: &CoxeterMatrix, cap: usize) -> Result<Enumeration> {
    let rank = matrix.rank();
    if rank == 2 {
        let m = matrix.m(0, 1);
        if 2 * m as usize > cap {
            return Err(Error::GroupTooLarge { cap });
        }
        return Ok(
            bfs(DihedralWord::IDENTITY, 2, cap, |w, s| w.mul_right(s, m))
                .expect("dihedral group fits the cap"),
        );
    }
    for s in 0..rank {
        for t in s + 1..rank {
            let m = matrix.m(s, t);
            if rank >= 3 && ![2, 3, 4, 6].contains(&m) {
                return Err(Error::UnsupportedBond {
                    label: m,
                    pair: (s, t),
                    rank,
                });
            }
        }
    }
    let roots = RootSystem::new(matrix, cap)?;
    let identity: Vec<u16> = (0..roots.len() as u16).collect();
    bfs(identity, rank, cap, |w, s| roots.mul_right(w, s)).ok_or(Error::GroupTooLarge { cap })
}

fn bfs<S: Clone + Eq + Hash>(
    identity: S,
    rank: usize,
    cap: usize,
    mul: impl Fn(&S, usize) -> S,
) -> Option<Enumeration> {
    let mut index: HashMap<S, u32> = HashMap::new();
    let mut states = vec![identity.clone()];
    let mut length = vec![0];
    index.insert(identity, 0);
    let mut right: Vec<Vec<u32>> = Vec::new();
    let mut head = 0;
    while head < states.len() {
        let w = states[head].clone();
        let mut row = Vec::with_capacity(rank);
        for s in 0..rank {
            let ws = mul(&w, s);
            let id = match index.get(&ws) {
                Some(&id) => id,
                None => {
                    if states.len() >= cap {
                        return None;
                    }
                    let id = states.len() as u32;
                    index.insert(ws.clone(), id);
                    states.push(ws);
                    length.push(length[head] + 1);
                    id
                }
            };
            row.push(id);
        }
        right.push(row);
        head += 1;
    }
    Some(Enumeration { right, length })
}

/// `first` alternating with the other generator, `len` letters; the longest
/// element is normalized to start with generator 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct DihedralWord {
    first: u8,
    len: u32,
}

impl DihedralWord {
    const IDENTITY: Self = Self { first: 0, len: 0 };

    fn normalize(first: u8, len: u32, m: u32) -> Self {
        if len == 0 || len == m {
            Self { first: 0, len }
        } else {
            Self { first, len }
        }
    }

    fn last(&self) -> u8 {
        if self.len % 2 == 1 {
            self.first
        } else {
            1 - self.first
        }
    }

    fn mul_right(&self, s: usize, m: u32) -> Self {
        let s = s as u8;
        if self.len == 0 {
            return Self::normalize(s, 1, m);
        }
        if self.len == m {
            // pick the spelling of the longest element that ends in s
            let first = if m % 2 == 1 { s } else { 1 - s };
            return Self::normalize(first, m - 1, m);
        }
        if self.last() == s {
            Self::normalize(self.first, self.len - 1, m)
        } else {
            Self::normalize(self.first, self.len + 1, m)
        }
    }
}

/// Finite root system of a crystallographic Cartan matrix, with each simple
/// reflection recorded as a permutation of the roots.
struct RootSystem {
    gens: Vec<Vec<u16>>,
}

impl RootSystem {
    fn new(matrix: &CoxeterMatrix, cap: usize) -> Result<Self> {
        let n = matrix.rank();
        // a[i][j] = <alpha_j, alpha_i^vee>; products a_ij * a_ji = 4 cos^2(pi/m)
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            for j in i + 1..n {
                let (x, y) = match matrix.m(i, j) {
                    2 => (0, 0),
                    3 => (-1, -1),
                    4 => (-1, -2),
                    6 => (-1, -3),
                    _ => unreachable!("checked by the caller"),
                };
                a[i][j] = x;
                a[j][i] = y;
            }
        }
        let reflect = |beta: &[i64], i: usize| -> Vec<i64> {
            let pairing: i64 = (0..n).map(|j| beta[j] * a[i][j]).sum();
            let mut out = beta.to_vec();
            out[i] -= pairing;
            out
        };
        let mut positive: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut seen: HashMap<Vec<i64>, usize> = positive
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, r)| (r, k))
            .collect();
        let mut head = 0;
        while head < positive.len() {
            for i in 0..n {
                let r = reflect(&positive[head], i);
                if r.iter().all(|&c| c >= 0) && !seen.contains_key(&r) {
                    if positive.len() >= cap.min(u16::MAX as usize / 2) {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    seen.insert(r.clone(), positive.len());
                    positive.push(r);
                }
            }
            head += 1;
        }
        let np = positive.len();
        let mut all = positive.clone();
        all.extend(
            positive
                .iter()
                .map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()),
        );
        let index: HashMap<&Vec<i64>, u16> =
            all.iter().enumerate().map(|(k, r)| (r, k as u16)).collect();
        debug_assert_eq!(index.len(), 2 * np);
        let gens = (0..n)
            .map(|i| all.iter().map(|r| index[&reflect(r, i)]).collect())
            .collect();
        Ok(Self { gens })
    }

    fn len(&self) -> usize {
        self.gens[0].len()
    }

    fn mul_right(&self, w: &[u16], s: usize) -> Vec<u16> {
        // (w s)(alpha) = w(s(alpha))
        self.gens[s].iter().map(|&k| w[k as usize]).collect()
    }
}
