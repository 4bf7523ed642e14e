//! Symbols `(A;B)` with gap parameter `rho` and lower bound `s` on the
//! second row, their shift equivalence, the staircase bijection with
//! bipartitions, and similarity classes with their interval structure.
//!
//! A symbol is stored as a concrete representative. Two representatives are
//! shift equivalent when one is obtained from the other by repeatedly
//! prepending `0` to `A` and `s` to `B` while adding `rho` to every old entry.
//! The normal form of a class is its shortest representative.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::gf2::{canonicalize_coset, BitVector, PresentedSpace};
use crate::partitions::{enumerate_bipartitions, Bipartition, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Row {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("row {row:?} violates the gap condition at position {index} (consecutive entries must differ by at least rho)")]
    GapViolation { row: Row, index: usize },
    #[error("entry {value} at position {index} of row B is below the bound s = {s}")]
    BoundViolation { index: usize, value: u32, s: u32 },
    #[error("entry sum does not yield an integral rank")]
    NonIntegralRank,
    #[error("symbols of sizes {0} and {1} cannot be brought to a common size")]
    ParityMismatch(usize, usize),
    #[error("invalid symbol family: {0}")]
    InvalidFamily(&'static str),
    #[error("cannot parse symbol {0:?}")]
    Parse(String),
    #[error("defect {0} is not in the family's defect set")]
    NotInFamily(i64),
    #[error("symbol {0} is not a member of this similarity class")]
    NotInClass(String),
    #[error("vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
}

/// An ordered pair of rows `(a_1, ..., a_m; b_1, ..., b_m')`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    a: Vec<u32>,
    b: Vec<u32>,
}

impl Symbol {
    pub fn new(a: Vec<u32>, b: Vec<u32>) -> Self {
        Self { a, b }
    }

    pub fn row_a(&self) -> &[u32] {
        &self.a
    }

    pub fn row_b(&self) -> &[u32] {
        &self.b
    }

    pub fn defect(&self) -> i64 {
        self.a.len() as i64 - self.b.len() as i64
    }

    /// Total number of entries `m + m'`.
    pub fn size(&self) -> usize {
        self.a.len() + self.b.len()
    }

    fn entry_sum(&self) -> i64 {
        self.a.iter().chain(&self.b).map(|&x| x as i64).sum()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |row: &[u32]| row.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", join(&self.a), join(&self.b))
    }
}

impl FromStr for Symbol {
    type Err = SymbolError;

    /// Accepts `(0,4;2)`, `(1;)` and `(1;∅)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || SymbolError::Parse(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(err)?;
        let (a, b) = inner.split_once(';').ok_or_else(err)?;
        let row = |t: &str| -> Result<Vec<u32>, SymbolError> {
            let t = t.trim();
            if t.is_empty() || t == "∅" {
                return Ok(Vec::new());
            }
            t.split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| err()))
                .collect()
        };
        Ok(Symbol::new(row(a)?, row(b)?))
    }
}

/// The gap `rho` and row-B bound `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SymbolParams {
    pub rho: u32,
    pub s: u32,
}

impl SymbolParams {
    pub const fn new(rho: u32, s: u32) -> Self {
        Self { rho, s }
    }

    /// `n_{rho,s,d}`: the rank of the pure staircase of defect `d`.
    pub fn base_rank(&self, d: i64) -> i64 {
        let (rho, s) = (self.rho as i64, self.s as i64);
        if d.rem_euclid(2) == 0 {
            rho * d * d / 4 - s * d / 2
        } else {
            rho * (d - 1) * (d + 1) / 4 - s * (d - 1) / 2
        }
    }

    /// Checks the gap and bound conditions and recovers `(n, d)` from the
    /// entry sum.
    pub fn validate(&self, sym: &Symbol) -> Result<(i64, i64), SymbolError> {
        for (row, entries) in [(Row::A, &sym.a), (Row::B, &sym.b)] {
            if let Some(i) = (1..entries.len())
                .find(|&i| (entries[i] as i64) - (entries[i - 1] as i64) < self.rho as i64)
            {
                return Err(SymbolError::GapViolation { row, index: i });
            }
        }
        if let Some((index, &value)) = sym.b.iter().enumerate().find(|(_, &b)| b < self.s) {
            return Err(SymbolError::BoundViolation {
                index,
                value,
                s: self.s,
            });
        }
        let d = sym.defect();
        let size = sym.size() as i64;
        let (rho, s) = (self.rho as i64, self.s as i64);
        let (quad, lin) = if d.rem_euclid(2) == 0 {
            (rho * size * (size - 2), s * size)
        } else {
            (rho * (size - 1) * (size - 1), s * (size - 1))
        };
        if quad % 4 != 0 || lin % 2 != 0 {
            return Err(SymbolError::NonIntegralRank);
        }
        Ok((sym.entry_sum() - quad / 4 - lin / 2, d))
    }

    pub fn shift(&self, sym: &Symbol) -> Symbol {
        let a = std::iter::once(0)
            .chain(sym.a.iter().map(|x| x + self.rho))
            .collect();
        let b = std::iter::once(self.s)
            .chain(sym.b.iter().map(|x| x + self.rho))
            .collect();
        Symbol::new(a, b)
    }

    /// Inverse of [`shift`](Self::shift), if `sym` is a shifted symbol.
    pub fn unshift(&self, sym: &Symbol) -> Option<Symbol> {
        if sym.a.first() != Some(&0) || sym.b.first() != Some(&self.s) {
            return None;
        }
        let back = |row: &[u32]| -> Option<Vec<u32>> {
            row[1..].iter().map(|x| x.checked_sub(self.rho)).collect()
        };
        Some(Symbol::new(back(&sym.a)?, back(&sym.b)?))
    }

    pub fn normal_form(&self, sym: &Symbol) -> Symbol {
        let mut cur = sym.clone();
        while let Some(prev) = self.unshift(&cur) {
            cur = prev;
        }
        cur
    }

    /// Shifts `sym` until it has `size` entries in total.
    pub fn shift_to_size(&self, sym: &Symbol, size: usize) -> Option<Symbol> {
        if sym.size() > size || !(size - sym.size()).is_multiple_of(2) {
            return None;
        }
        let mut cur = sym.clone();
        while cur.size() < size {
            cur = self.shift(&cur);
        }
        Some(cur)
    }

    /// Pads `bp` with zeros to rows of lengths `m, m'` with `m - m' = d`
    /// (as short as possible) and adds the staircase
    /// `(0, rho, 2 rho, ...; s, s + rho, ...)`. The result is a normal form.
    pub fn staircase_to_symbol(&self, d: i64, bp: &Bipartition) -> Symbol {
        let la = bp.alpha.len() as i64;
        let lb = bp.beta.len() as i64;
        let m = la.max(lb + d).max(0);
        let m_prime = m - d;
        let pad = |parts: &[u32], len: i64, offset: u32| -> Vec<u32> {
            let zeros = (len as usize) - parts.len();
            std::iter::repeat_n(0, zeros)
                .chain(parts.iter().copied())
                .enumerate()
                .map(|(i, c)| c + offset + i as u32 * self.rho)
                .collect()
        };
        Symbol::new(
            pad(bp.alpha.parts(), m, 0),
            pad(bp.beta.parts(), m_prime, self.s),
        )
    }

    /// Subtracts the staircase from `sym` and strips zero parts, giving the
    /// defect and the bipartition of `n - n_{rho,s,d}`.
    pub fn staircase_from_symbol(&self, sym: &Symbol) -> Result<(i64, Bipartition), SymbolError> {
        let (_, d) = self.validate(sym)?;
        let strip = |row: &[u32], offset: u32| -> Vec<u32> {
            row.iter()
                .enumerate()
                .map(|(i, &x)| x - offset - i as u32 * self.rho)
                .collect()
        };
        let alpha = Partition::from_parts(strip(&sym.a, 0));
        let beta = Partition::from_parts(strip(&sym.b, self.s));
        Ok((d, Bipartition::new(alpha, beta)))
    }

    /// Normal forms of all symbols of rank `n` and defect `d`, in
    /// bipartition order.
    pub fn enumerate(&self, n: i64, d: i64) -> Vec<Symbol> {
        enumerate_bipartitions(n - self.base_rank(d))
            .iter()
            .map(|bp| self.staircase_to_symbol(d, bp))
            .collect()
    }
}

/// The admissible defects of a symbol family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DefectSet {
    Even,
    Odd,
    OddPositive,
}

impl DefectSet {
    pub fn contains(self, d: i64) -> bool {
        match self {
            DefectSet::Even => d.rem_euclid(2) == 0,
            DefectSet::Odd => d.rem_euclid(2) == 1,
            DefectSet::OddPositive => d > 0 && d % 2 == 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DefectSet::Even => "even",
            DefectSet::Odd => "odd",
            DefectSet::OddPositive => "odd-positive",
        }
    }
}

impl FromStr for DefectSet {
    type Err = SymbolError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "even" => Ok(DefectSet::Even),
            "odd" => Ok(DefectSet::Odd),
            "odd-positive" => Ok(DefectSet::OddPositive),
            _ => Err(SymbolError::InvalidFamily(
                "defects must be even, odd or odd-positive",
            )),
        }
    }
}

/// A family `X^s_{n,E}` of symbols with `rho > s`: the union over `d` in `E`
/// of the symbols of defect `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Family {
    #[serde(flatten)]
    pub params: SymbolParams,
    pub defects: DefectSet,
}

impl Family {
    pub fn new(rho: u32, s: u32, defects: DefectSet) -> Result<Self, SymbolError> {
        if rho <= s {
            return Err(SymbolError::InvalidFamily("similarity needs rho > s"));
        }
        match (s, defects) {
            (0, DefectSet::OddPositive) => {}
            (0, _) => {
                return Err(SymbolError::InvalidFamily(
                    "for s = 0 the defect set must be odd-positive",
                ))
            }
            (_, DefectSet::OddPositive) => {
                return Err(SymbolError::InvalidFamily(
                    "for s > 0 the defect set must be even or odd",
                ))
            }
            _ => {}
        }
        Ok(Self {
            params: SymbolParams::new(rho, s),
            defects,
        })
    }

    /// Defects in `E` contributing to rank `n`, ascending.
    pub fn defects_for(&self, n: i64) -> Vec<i64> {
        // beyond this bound the staircase rank exceeds n
        let bound = 2 * (n.max(0) + self.params.s as i64) + 4;
        (-bound..=bound)
            .filter(|&d| self.defects.contains(d) && self.params.base_rank(d) <= n)
            .collect()
    }

    pub fn enumerate(&self, n: i64) -> Vec<Symbol> {
        self.defects_for(n)
            .into_iter()
            .flat_map(|d| self.params.enumerate(n, d))
            .collect()
    }

    pub fn contains(&self, sym: &Symbol) -> Result<bool, SymbolError> {
        let (_, d) = self.params.validate(sym)?;
        Ok(self.defects.contains(d))
    }

    /// Union multiset and intersection of the rows, after shifting to `size`.
    fn key_at(&self, sym: &Symbol, size: usize) -> Option<(Vec<u32>, Vec<u32>)> {
        let shifted = self.params.shift_to_size(sym, size)?;
        Some(union_and_intersection(&shifted))
    }

    pub fn similar(&self, x: &Symbol, y: &Symbol) -> Result<bool, SymbolError> {
        self.params.validate(x)?;
        self.params.validate(y)?;
        let (x, y) = (self.params.normal_form(x), self.params.normal_form(y));
        if x.size() % 2 != y.size() % 2 {
            return Err(SymbolError::ParityMismatch(x.size(), y.size()));
        }
        let size = x.size().max(y.size());
        Ok(self.key_at(&x, size) == self.key_at(&y, size))
    }

    /// Partitions the family of rank `n` into similarity classes, in order
    /// of first appearance in [`enumerate`](Self::enumerate).
    pub fn similarity_classes(&self, n: i64) -> Result<Vec<SimilarityClass>, SymbolError> {
        let mut seen = HashSet::new();
        let mut classes = Vec::new();
        for sym in self.enumerate(n) {
            if seen.contains(&sym) {
                continue;
            }
            let class = SimilarityClass::of(*self, &sym)?;
            seen.extend(class.members().iter().cloned());
            classes.push(class);
        }
        Ok(classes)
    }
}

fn union_and_intersection(sym: &Symbol) -> (Vec<u32>, Vec<u32>) {
    let mut union: Vec<u32> = sym.a.iter().chain(&sym.b).copied().collect();
    union.sort_unstable();
    let a: BTreeSet<u32> = sym.a.iter().copied().collect();
    let inter = sym.b.iter().copied().filter(|x| a.contains(x)).collect();
    (union, inter)
}

/// A maximal run of `(A ∪ B) - (A ∩ B)` with consecutive gaps below `rho`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub entries: Vec<u32>,
    pub proper: bool,
}

fn intervals_of(params: SymbolParams, sym: &Symbol) -> Vec<Interval> {
    let a: BTreeSet<u32> = sym.a.iter().copied().collect();
    let b: BTreeSet<u32> = sym.b.iter().copied().collect();
    let diff: Vec<u32> = a.symmetric_difference(&b).copied().collect();
    let mut runs: Vec<Vec<u32>> = Vec::new();
    for x in diff {
        match runs.last_mut() {
            Some(run) if x - run.last().unwrap() < params.rho => run.push(x),
            _ => runs.push(vec![x]),
        }
    }
    runs.into_iter()
        .map(|entries| {
            let proper = entries.iter().all(|&x| x >= params.s);
            Interval { entries, proper }
        })
        .collect()
}

/// A similarity class of symbols, laid out at the common size of its
/// members.
///
/// Each member is identified with a bit-vector over the proper intervals
/// (in increasing order): bit `i` is `1` iff the least entry of the `i`-th
/// proper interval lies in row B. Inside an interval the entries alternate
/// between the rows; in an improper interval the entry below `s` sits in
/// row A. For `s = 0` vectors are taken modulo the all-ones vector and the
/// member of each coset with positive defect is chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimilarityClass {
    family: Family,
    rank: i64,
    size: usize,
    union: Vec<u32>,
    intersection: Vec<u32>,
    intervals: Vec<Interval>,
    space: PresentedSpace,
    members: Vec<Symbol>,
}

impl SimilarityClass {
    /// The similarity class of `sym` within `family`.
    pub fn of(family: Family, sym: &Symbol) -> Result<Self, SymbolError> {
        let params = family.params;
        let (rank, d) = params.validate(sym)?;
        if !family.defects.contains(d) {
            return Err(SymbolError::NotInFamily(d));
        }
        let nf = params.normal_form(sym);
        let mut class = Self::laid_out(family, rank, &nf);
        let members: Vec<Symbol> = class
            .space
            .characters()
            .iter()
            .map(|v| class.assign(v))
            .collect();
        let size = members.iter().map(Symbol::size).max().unwrap_or(0);
        if size != class.size {
            let rep = params
                .shift_to_size(&nf, size)
                .expect("member sizes share parity");
            class = Self::laid_out(family, rank, &rep);
        }
        class.members = class
            .space
            .characters()
            .iter()
            .map(|v| class.assign(v))
            .collect();
        Ok(class)
    }

    fn laid_out(family: Family, rank: i64, rep: &Symbol) -> Self {
        let (union, intersection) = union_and_intersection(rep);
        let intervals = intervals_of(family.params, rep);
        let proper = intervals.iter().filter(|i| i.proper).count();
        Self {
            family,
            rank,
            size: rep.size(),
            union,
            intersection,
            intervals,
            space: PresentedSpace::free(proper, family.params.s == 0),
            members: Vec::new(),
        }
    }

    /// Builds the member with proper-interval bits `v`, in normal form.
    fn assign(&self, v: &BitVector) -> Symbol {
        let raw = self.rows_for(v);
        let raw = if self.family.defects.contains(raw.defect()) {
            raw
        } else {
            // only reachable for s = 0, where flipping every bit negates d
            self.rows_for(&v.complement())
        };
        self.family.params.normal_form(&raw)
    }

    fn rows_for(&self, v: &BitVector) -> Symbol {
        let s = self.family.params.s;
        let mut a: Vec<u32> = self.intersection.clone();
        let mut b: Vec<u32> = self.intersection.clone();
        let mut bit = v.bits().iter();
        for interval in &self.intervals {
            // parity of positions that go to row B
            let b_parity = if interval.proper {
                if *bit.next().expect("vector covers every proper interval") {
                    0
                } else {
                    1
                }
            } else {
                let anchor = interval.entries.iter().position(|&x| x < s).unwrap_or(0);
                (anchor + 1) % 2
            };
            for (i, &x) in interval.entries.iter().enumerate() {
                if i % 2 == b_parity {
                    b.push(x);
                } else {
                    a.push(x);
                }
            }
        }
        a.sort_unstable();
        b.sort_unstable();
        Symbol::new(a, b)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    /// The common total size `m + m'` at which the class is laid out.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn union(&self) -> &[u32] {
        &self.union
    }

    pub fn intersection(&self) -> &[u32] {
        &self.intersection
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn proper_interval_count(&self) -> usize {
        self.space.basis_len()
    }

    /// `V_c`, as a free space on the proper intervals (quotiented by the
    /// all-ones vector when `s = 0`).
    pub fn space(&self) -> &PresentedSpace {
        &self.space
    }

    pub fn dimension(&self) -> usize {
        self.space.dimension()
    }

    /// Members in normal form, listed in the order of their vectors.
    pub fn members(&self) -> &[Symbol] {
        &self.members
    }

    pub fn contains(&self, sym: &Symbol) -> bool {
        self.class_vector(sym).is_ok()
    }

    pub fn class_vector(&self, member: &Symbol) -> Result<BitVector, SymbolError> {
        let params = self.family.params;
        let not_in = || SymbolError::NotInClass(member.to_string());
        let (_, d) = params.validate(member)?;
        if !self.family.defects.contains(d) {
            return Err(not_in());
        }
        let laid = params
            .shift_to_size(&params.normal_form(member), self.size)
            .ok_or_else(not_in)?;
        if union_and_intersection(&laid) != (self.union.clone(), self.intersection.clone()) {
            return Err(not_in());
        }
        let b_rows: BTreeSet<u32> = laid.b.iter().copied().collect();
        let bits = self
            .intervals
            .iter()
            .filter(|i| i.proper)
            .map(|i| b_rows.contains(&i.entries[0]))
            .collect();
        Ok(canonicalize_coset(
            &BitVector::from_bits(bits),
            self.space.is_quotient(),
        ))
    }

    pub fn class_member(&self, v: &BitVector) -> Result<Symbol, SymbolError> {
        if v.len() != self.space.basis_len() {
            return Err(SymbolError::LengthMismatch {
                expected: self.space.basis_len(),
                found: v.len(),
            });
        }
        Ok(self.assign(&canonicalize_coset(v, self.space.is_quotient())))
    }

    pub fn to_record(&self) -> ClassRecord {
        ClassRecord {
            params: self.family,
            n: self.rank,
            members: self.members.iter().map(Symbol::to_string).collect(),
            intervals: self.intervals.clone(),
            dim: self.dimension(),
        }
    }
}

/// JSON view of a similarity class.
#[derive(Debug, Clone, Serialize)]
pub struct ClassRecord {
    pub params: Family,
    pub n: i64,
    pub members: Vec<String>,
    pub intervals: Vec<Interval>,
    pub dim: usize,
}
