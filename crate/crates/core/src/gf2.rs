//! Exact linear algebra over GF(2) for spaces presented by "identify" and
//! "kill" relations on a finite set of generators.
//!
//! Every space handled here is a quotient of the free space on its
//! generators by relations of the form `s_i = s_j` or `s_i = 0`, so the
//! surviving identification classes form a basis. Spaces may additionally be
//! flagged as taken modulo the all-ones vector; their elements are then
//! stored as canonical coset representatives over the full basis.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use petgraph::unionfind::UnionFind;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf2Error {
    #[error("generator index {index} out of range for {count} generators")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("invalid bit character {0:?} (expected '0' or '1')")]
    BadBit(char),
    #[error("character has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
}

/// A vector over GF(2). Ordering is lexicographic with `0 < 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    bits: Vec<bool>,
}

impl BitVector {
    pub const fn empty() -> Self {
        Self { bits: Vec::new() }
    }

    pub fn zeros(len: usize) -> Self {
        Self {
            bits: vec![false; len],
        }
    }

    pub fn ones(len: usize) -> Self {
        Self {
            bits: vec![true; len],
        }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// The vector of length `len` whose bits spell `value` in binary,
    /// most-significant first.
    pub fn from_index(value: u64, len: usize) -> Self {
        let bits = (0..len)
            .map(|i| (value >> (len - 1 - i)) & 1 == 1)
            .collect();
        Self { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|b| !b)
    }

    /// Coordinatewise sum. Panics if lengths differ.
    pub fn add(&self, other: &BitVector) -> BitVector {
        assert_eq!(self.len(), other.len(), "adding vectors of unequal length");
        BitVector {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    pub fn complement(&self) -> BitVector {
        BitVector {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitVector {
    type Err = Gf2Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Gf2Error::BadBit(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BitVector::from_bits)
    }
}

/// Returns the canonical representative of `v` modulo the all-ones vector
/// when `quotient_by_all_ones` is set (the lexicographically smaller of
/// `v` and its complement), and `v` itself otherwise.
pub fn canonicalize_coset(v: &BitVector, quotient_by_all_ones: bool) -> BitVector {
    if !quotient_by_all_ones {
        return v.clone();
    }
    let flipped = v.complement();
    if flipped < *v {
        flipped
    } else {
        v.clone()
    }
}

/// An F2 space presented by generators `0..generator_count` subject to
/// identifications `s_i = s_j` and kills `s_i = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentedSpace {
    generator_count: usize,
    identifications: BTreeSet<(usize, usize)>,
    kills: BTreeSet<usize>,
    /// All identification classes, each sorted, ordered by least member.
    classes: Vec<Vec<usize>>,
    killed: Vec<bool>,
    quotient_by_all_ones: bool,
}

impl PresentedSpace {
    pub fn build(
        generator_count: usize,
        identifications: impl IntoIterator<Item = (usize, usize)>,
        kills: impl IntoIterator<Item = usize>,
        quotient_by_all_ones: bool,
    ) -> Result<Self, Gf2Error> {
        let check = |index: usize| {
            if index < generator_count {
                Ok(index)
            } else {
                Err(Gf2Error::IndexOutOfRange {
                    index,
                    count: generator_count,
                })
            }
        };
        let identifications = identifications
            .into_iter()
            .map(|(i, j)| Ok((check(i.min(j))?, check(i.max(j))?)))
            .collect::<Result<BTreeSet<_>, Gf2Error>>()?;
        let kills = kills
            .into_iter()
            .map(check)
            .collect::<Result<BTreeSet<_>, _>>()?;

        let mut uf = UnionFind::<usize>::new(generator_count);
        for &(i, j) in &identifications {
            uf.union(i, j);
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of_root = vec![usize::MAX; generator_count];
        for g in 0..generator_count {
            let root = uf.find(g);
            if class_of_root[root] == usize::MAX {
                class_of_root[root] = classes.len();
                classes.push(Vec::new());
            }
            classes[class_of_root[root]].push(g);
        }
        let killed = classes
            .iter()
            .map(|class| class.iter().any(|g| kills.contains(g)))
            .collect();

        Ok(Self {
            generator_count,
            identifications,
            kills,
            classes,
            killed,
            quotient_by_all_ones,
        })
    }

    /// The free space on `count` generators.
    pub fn free(count: usize, quotient_by_all_ones: bool) -> Self {
        Self::build(count, [], [], quotient_by_all_ones).expect("no relations to check")
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn identifications(&self) -> &BTreeSet<(usize, usize)> {
        &self.identifications
    }

    pub fn kills(&self) -> &BTreeSet<usize> {
        &self.kills
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn is_quotient(&self) -> bool {
        self.quotient_by_all_ones
    }

    /// Surviving classes, ordered by least generator index.
    pub fn canonical_basis(&self) -> Vec<&[usize]> {
        self.classes
            .iter()
            .zip(&self.killed)
            .filter(|(_, &k)| !k)
            .map(|(c, _)| c.as_slice())
            .collect()
    }

    pub fn basis_len(&self) -> usize {
        self.killed.iter().filter(|k| !**k).count()
    }

    pub fn dimension(&self) -> usize {
        let b = self.basis_len();
        if self.quotient_by_all_ones {
            b.saturating_sub(1)
        } else {
            b
        }
    }

    /// Number of characters, `2^dimension`.
    pub fn order(&self) -> u64 {
        1u64 << self.dimension()
    }

    /// All characters as bit-vectors over the canonical basis, in
    /// lexicographic order. For a quotient-flagged space the vectors are the
    /// canonical coset representatives.
    pub fn characters(&self) -> Vec<BitVector> {
        let len = self.basis_len();
        assert!(len < 64, "space too large to enumerate");
        (0..1u64 << len)
            .map(|i| BitVector::from_index(i, len))
            .filter(|v| !self.quotient_by_all_ones || canonicalize_coset(v, true) == *v)
            .collect()
    }

    /// Checks that `v` has the right length and, for quotient spaces, brings
    /// it to canonical form.
    pub fn normalize_character(&self, v: &BitVector) -> Result<BitVector, Gf2Error> {
        if v.len() != self.basis_len() {
            return Err(Gf2Error::LengthMismatch {
                expected: self.basis_len(),
                found: v.len(),
            });
        }
        Ok(canonicalize_coset(v, self.quotient_by_all_ones))
    }
}
