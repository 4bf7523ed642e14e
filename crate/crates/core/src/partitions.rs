//! Integer partitions and bipartitions.
//!
//! Parts are stored weakly increasing. Bipartitions `(alpha, beta)` label the
//! irreducible representations of the Weyl group of type `B_n`, `n = |alpha| + |beta|`.
//!
//! Enumeration order: partitions are listed lexicographically on their
//! increasing part sequences; bipartitions by `|alpha|` ascending, then
//! `alpha`, then `beta`, each in partition order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("part {0:?} is not a positive integer")]
    BadPart(String),
    #[error("parts must be weakly increasing")]
    NotIncreasing,
    #[error("bipartition needs exactly one '|' separator")]
    MissingSeparator,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn from_parts(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable();
        Self(parts)
    }

    /// Builds a partition from a weakly increasing sequence of positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if let Some(&p) = parts.iter().find(|&&p| p == 0) {
            return Err(PartitionError::BadPart(p.to_string()));
        }
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(PartitionError::NotIncreasing);
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    pub fn multiplicity(&self, value: u32) -> usize {
        self.0.iter().filter(|&&p| p == value).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<u32>()
                    .ok()
                    .filter(|&p| p > 0)
                    .ok_or_else(|| PartitionError::BadPart(t.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub alpha: Partition,
    pub beta: Partition,
}

impl Bipartition {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        Self { alpha, beta }
    }

    pub fn size(&self) -> u64 {
        self.alpha.size() + self.beta.size()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.alpha, self.beta)
    }
}

impl FromStr for Bipartition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once('|').ok_or(PartitionError::MissingSeparator)?;
        if b.contains('|') {
            return Err(PartitionError::MissingSeparator);
        }
        Ok(Self::new(a.parse()?, b.parse()?))
    }
}

/// All partitions of `n`; empty for negative `n`.
pub fn enumerate_partitions(n: i64) -> Vec<Partition> {
    fn extend(remaining: u32, min: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for p in min..=remaining {
            // the remaining sum after p must be 0 or at least p
            let rest = remaining - p;
            if rest != 0 && rest < p {
                continue;
            }
            current.push(p);
            extend(rest, p, current, out);
            current.pop();
        }
    }
    if n < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    extend(n as u32, 1, &mut Vec::new(), &mut out);
    out
}

/// All bipartitions of `n`; empty for negative `n`.
pub fn enumerate_bipartitions(n: i64) -> Vec<Bipartition> {
    if n < 0 {
        return Vec::new();
    }
    let tables: Vec<Vec<Partition>> = (0..=n).map(enumerate_partitions).collect();
    let mut out = Vec::new();
    for k in 0..=n as usize {
        for alpha in &tables[k] {
            for beta in &tables[n as usize - k] {
                out.push(Bipartition::new(alpha.clone(), beta.clone()));
            }
        }
    }
    out
}

fn partition_table(n: usize) -> Vec<u64> {
    // p(k) for k <= n, by adding allowed part sizes one at a time
    let mut table = vec![0u64; n + 1];
    table[0] = 1;
    for part in 1..=n {
        for k in part..=n {
            table[k] += table[k - part];
        }
    }
    table
}

/// The number of partitions of `n`.
pub fn count_p(n: i64) -> u64 {
    if n < 0 {
        return 0;
    }
    partition_table(n as usize)[n as usize]
}

/// The number of bipartitions of `n`, i.e. `|Irr W(B_n)|`.
pub fn count_p2(n: i64) -> u64 {
    if n < 0 {
        return 0;
    }
    let n = n as usize;
    let p = partition_table(n);
    (0..=n).map(|k| p[k] * p[n - k]).sum()
}
