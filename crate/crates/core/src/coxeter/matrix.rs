use std::fmt;

use crate::error::{Error, Result};

/// A Coxeter matrix `m_st`: symmetric, ones on the diagonal, `>= 2` elsewhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<u32>,
}

impl CoxeterMatrix {
    /// Builds a matrix from a full row-major `rank x rank` table.
    pub fn new(rank: usize, entries: Vec<u32>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidMatrix("rank must be positive".into()));
        }
        if rank > 64 {
            return Err(Error::InvalidMatrix(
                "rank above 64 is not supported".into(),
            ));
        }
        if entries.len() != rank * rank {
            return Err(Error::InvalidMatrix(format!(
                "expected {} entries, got {}",
                rank * rank,
                entries.len()
            )));
        }
        for i in 0..rank {
            if entries[i * rank + i] != 1 {
                return Err(Error::InvalidMatrix(format!(
                    "diagonal entry {} is not 1",
                    i + 1
                )));
            }
            for j in 0..rank {
                let m = entries[i * rank + j];
                if m != entries[j * rank + i] {
                    return Err(Error::InvalidMatrix("matrix is not symmetric".into()));
                }
                if i != j && m < 2 {
                    return Err(Error::InvalidMatrix(format!(
                        "off-diagonal entry m(s{},s{}) = {m} is below 2",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self { rank, entries })
    }

    /// Builds a matrix from the strictly upper-triangular bond labels listed
    /// row by row (`m_12, m_13, ..., m_1n, m_23, ...`).
    pub fn from_upper(rank: usize, upper: &[u32]) -> Result<Self> {
        let expected = rank * rank.saturating_sub(1) / 2;
        if upper.len() != expected {
            return Err(Error::InvalidMatrix(format!(
                "rank {rank} needs {expected} bond labels, got {}",
                upper.len()
            )));
        }
        let mut entries = vec![1; rank * rank];
        let mut it = upper.iter();
        for i in 0..rank {
            for j in i + 1..rank {
                let m = *it.next().unwrap();
                entries[i * rank + j] = m;
                entries[j * rank + i] = m;
            }
        }
        Self::new(rank, entries)
    }

    /// Parses the matrix file format: whitespace-separated integers, the
    /// rank first, then the upper-triangular bond labels.
    pub fn parse_file_contents(text: &str) -> Result<Self> {
        let nums = text
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let (&rank, rest) = nums
            .split_first()
            .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        Self::from_upper(rank as usize, rest)
    }

    /// Expands a named type such as `A3`, `B3`, `D4`, `I2(7)` or `A1xA1`.
    /// Generators are numbered in Dynkin order, components concatenated.
    pub fn from_name(name: &str) -> Result<Self> {
        let blocks = name
            .split(['x', 'X', '×'])
            .map(|c| component(c.trim()))
            .collect::<Result<Vec<_>>>()?;
        let rank: usize = blocks.iter().map(|b| b.rank).sum();
        let mut entries = vec![2; rank * rank];
        let mut offset = 0;
        for b in &blocks {
            for i in 0..b.rank {
                for j in 0..b.rank {
                    entries[(offset + i) * rank + offset + j] = b.m(i, j);
                }
            }
            offset += b.rank;
        }
        for i in 0..rank {
            entries[i * rank + i] = 1;
        }
        Self::new(rank, entries)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn m(&self, s: usize, t: usize) -> u32 {
        self.entries[s * self.rank + t]
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rank {
            let row: Vec<String> = (0..self.rank).map(|j| self.m(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

fn chain(n: usize, bonds: &[(usize, usize, u32)]) -> Result<CoxeterMatrix> {
    let mut entries = vec![2; n * n];
    for i in 0..n {
        entries[i * n + i] = 1;
    }
    for &(a, b, m) in bonds {
        entries[a * n + b] = m;
        entries[b * n + a] = m;
    }
    CoxeterMatrix::new(n, entries)
}

fn component(name: &str) -> Result<CoxeterMatrix> {
    let bad = || Error::Parse(format!("unknown Coxeter type {name:?}"));
    if let Some(rest) = name.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
        let m: u32 = rest.parse().map_err(|_| bad())?;
        if m < 2 {
            return Err(bad());
        }
        return chain(2, &[(0, 1, m)]);
    }
    let mut chars = name.chars();
    let family = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
    let n: usize = chars.as_str().parse().map_err(|_| bad())?;
    let path = |n: usize| {
        (0..n.saturating_sub(1))
            .map(|i| (i, i + 1, 3))
            .collect::<Vec<_>>()
    };
    match (family, n) {
        ('A', n) if n >= 1 => chain(n, &path(n)),
        ('B' | 'C', n) if n >= 2 => {
            let mut bonds = path(n);
            bonds.last_mut().unwrap().2 = 4;
            chain(n, &bonds)
        }
        ('D', n) if n >= 4 => {
            let mut bonds = path(n - 1);
            bonds.push((n - 3, n - 1, 3));
            chain(n, &bonds)
        }
        ('E', 6..=8) => {
            // Bourbaki: 1-3-4-5-..., with 2 attached to 4
            let mut bonds = vec![(0, 2, 3), (1, 3, 3)];
            bonds.extend((2..n - 1).map(|i| (i, i + 1, 3)));
            chain(n, &bonds)
        }
        ('F', 4) => chain(4, &[(0, 1, 3), (1, 2, 4), (2, 3, 3)]),
        ('G', 2) => chain(2, &[(0, 1, 6)]),
        ('H', 3) => chain(3, &[(0, 1, 5), (1, 2, 3)]),
        ('H', 4) => chain(4, &[(0, 1, 5), (1, 2, 3), (2, 3, 3)]),
        _ => Err(bad()),
    }
}
