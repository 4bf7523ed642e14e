//! Marked partitions `(lambda, delta)` parametrizing unipotent classes of
//! disconnected classical groups in characteristic 2, their `c`-sequences
//! and their F2 spaces.
//!
//! Three kinds are supported:
//!
//! - [`Kind::V`]: an odd number of parts summing to `2n`, at most one zero,
//!   singleton blocks even (symplectic groups);
//! - [`Kind::VPrime`]: kind `V` with all parts positive (outer classes of
//!   even orthogonal groups);
//! - [`Kind::VDoublePrime`]: positive parts summing to `N`, singleton blocks
//!   odd (outer classes of general linear groups).
//!
//! Text form: blocks in brackets, single-digit parts run together, e.g.
//! `(11)(2)(44)` for `lambda = 1,1,2,4,4` with blocks `{1,2}{3}{4,5}`. A
//! block holding a part above 9 lists its parts separated by commas, with a
//! trailing comma for a singleton: `(10,10)(12,)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::gf2::PresentedSpace;
use crate::partitions::enumerate_partitions;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    V,
    VPrime,
    VDoublePrime,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MarkedError {
    #[error("blocks must cover the part indices in order, as singletons or adjacent pairs")]
    BadBlockShape,
    #[error("parts must be weakly increasing")]
    NotIncreasing,
    #[error("singleton block {{{index}}} has part {value} of the wrong parity")]
    ParityViolation { index: usize, value: u32 },
    #[error("pair block {{{index},{}}} joins unequal parts", index + 1)]
    PairMismatch { index: usize },
    #[error("part value {0} occurs both as a singleton block and in a pair block")]
    SingletonPairClash(u32),
    #[error("too many zero parts")]
    ZeroCount,
    #[error("kind V partitions need an odd number of parts, found {0}")]
    PartCountParity(usize),
    #[error("parts sum to {found}, expected {expected}")]
    SumMismatch { expected: u64, found: u64 },
    #[error("cannot parse marked partition {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    Single(usize),
    /// Covers indices `i` and `i + 1`.
    Pair(usize),
}

impl Block {
    fn start(self) -> usize {
        match self {
            Block::Single(i) | Block::Pair(i) => i,
        }
    }

    fn len(self) -> usize {
        match self {
            Block::Single(_) => 1,
            Block::Pair(_) => 2,
        }
    }
}

/// A weakly increasing sequence of parts together with a block structure.
/// Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedPartition {
    parts: Vec<u32>,
    blocks: Vec<Block>,
}

impl MarkedPartition {
    pub fn new(parts: Vec<u32>, blocks: Vec<Block>) -> Self {
        Self { parts, blocks }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn is_singleton(&self, i: usize) -> bool {
        self.blocks.contains(&Block::Single(i))
    }

    fn shape_ok(&self) -> bool {
        let mut next = 0;
        for b in &self.blocks {
            if b.start() != next {
                return false;
            }
            next += b.len();
        }
        next == self.parts.len()
    }
}

impl fmt::Display for MarkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            let vals = &self.parts[b.start()..b.start() + b.len()];
            f.write_str("(")?;
            if vals.iter().all(|&v| v < 10) {
                for v in vals {
                    write!(f, "{v}")?;
                }
            } else if let [v] = vals {
                write!(f, "{v},")?;
            } else {
                write!(f, "{},{}", vals[0], vals[1])?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for MarkedPartition {
    type Err = MarkedError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || MarkedError::Parse(s.to_string());
        let mut parts = Vec::new();
        let mut blocks = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(err)?;
            let close = body.find(')').ok_or_else(err)?;
            let content = body[..close].trim();
            rest = body[close + 1..].trim_start();
            let vals: Vec<u32> = if content.contains(',') {
                content
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse().map_err(|_| err()))
                    .collect::<Result<_, _>>()?
            } else {
                content
                    .chars()
                    .map(|c| c.to_digit(10).ok_or_else(err))
                    .collect::<Result<_, _>>()?
            };
            let start = parts.len();
            match vals.len() {
                1 => blocks.push(Block::Single(start)),
                2 if vals[0] == vals[1] => blocks.push(Block::Pair(start)),
                2 => return Err(MarkedError::PairMismatch { index: start }),
                _ => return Err(MarkedError::BadBlockShape),
            }
            parts.extend(vals);
        }
        Ok(Self { parts, blocks })
    }
}

fn singleton_parity(kind: Kind) -> u32 {
    match kind {
        Kind::V | Kind::VPrime => 0,
        Kind::VDoublePrime => 1,
    }
}

/// Checks every condition of `kind` and that the parts sum to `total`.
pub fn validate_marked(kind: Kind, total: u64, mp: &MarkedPartition) -> Result<(), MarkedError> {
    if !mp.shape_ok() {
        return Err(MarkedError::BadBlockShape);
    }
    if mp.parts.windows(2).any(|w| w[0] > w[1]) {
        return Err(MarkedError::NotIncreasing);
    }
    let zeros = mp.parts.iter().filter(|&&p| p == 0).count();
    let max_zeros = if kind == Kind::V { 1 } else { 0 };
    if zeros > max_zeros {
        return Err(MarkedError::ZeroCount);
    }
    if matches!(kind, Kind::V | Kind::VPrime) && mp.parts.len().is_multiple_of(2) {
        return Err(MarkedError::PartCountParity(mp.parts.len()));
    }
    if mp.total() != total {
        return Err(MarkedError::SumMismatch {
            expected: total,
            found: mp.total(),
        });
    }
    let parity = singleton_parity(kind);
    let mut singles = Vec::new();
    let mut pairs = Vec::new();
    for &b in &mp.blocks {
        match b {
            Block::Single(i) => {
                if mp.parts[i] % 2 != parity {
                    return Err(MarkedError::ParityViolation {
                        index: i,
                        value: mp.parts[i],
                    });
                }
                singles.push(mp.parts[i]);
            }
            Block::Pair(i) => {
                if mp.parts[i] != mp.parts[i + 1] {
                    return Err(MarkedError::PairMismatch { index: i });
                }
                pairs.push(mp.parts[i]);
            }
        }
    }
    if let Some(&v) = singles.iter().find(|v| pairs.contains(v)) {
        return Err(MarkedError::SingletonPairClash(v));
    }
    Ok(())
}

/// All valid marked partitions of `total` for `kind`.
///
/// Equal parts are contiguous and a value cannot be used both as a singleton
/// and in a pair, so each distinct value is either split entirely into
/// singletons or entirely into pairs.
pub fn enumerate_marked(kind: Kind, total: u64) -> Vec<MarkedPartition> {
    let parity = singleton_parity(kind);
    let mut out = Vec::new();
    for p in enumerate_partitions(total as i64) {
        let mut parts = p.parts().to_vec();
        match kind {
            Kind::V if parts.len() % 2 == 0 => parts.insert(0, 0),
            Kind::V | Kind::VPrime if parts.len() % 2 == 0 => continue,
            _ => {}
        }
        let mut runs: BTreeMap<u32, usize> = BTreeMap::new();
        for &x in &parts {
            *runs.entry(x).or_default() += 1;
        }
        // per distinct value: may it be singletons, may it be pairs
        let options: Vec<(u32, usize, bool, bool)> = runs
            .iter()
            .map(|(&v, &mult)| (v, mult, v % 2 == parity, mult % 2 == 0))
            .collect();
        if options.iter().any(|&(_, _, single, pair)| !single && !pair) {
            continue;
        }
        let free: Vec<usize> = (0..options.len())
            .filter(|&i| options[i].2 && options[i].3)
            .collect();
        for mask in 0u64..(1u64 << free.len()) {
            let mut blocks = Vec::new();
            let mut index = 0;
            for (k, &(_, mult, single, _)) in options.iter().enumerate() {
                let as_pairs = match free.iter().position(|&f| f == k) {
                    Some(bit) => mask >> bit & 1 == 1,
                    None => !single,
                };
                if as_pairs {
                    for j in 0..mult / 2 {
                        blocks.push(Block::Pair(index + 2 * j));
                    }
                } else {
                    for j in 0..mult {
                        blocks.push(Block::Single(index + j));
                    }
                }
                index += mult;
            }
            out.push(MarkedPartition::new(parts.clone(), blocks));
        }
    }
    out
}

/// The `c`, `c'` or `c''` sequence of a valid marked partition.
pub fn c_sequence(kind: Kind, mp: &MarkedPartition) -> Vec<u32> {
    // kind V'' uses the kind V formulas with every part lowered by one
    let value = |i: usize| -> u32 {
        match kind {
            Kind::VDoublePrime => mp.parts[i] - 1,
            _ => mp.parts[i],
        }
    };
    let mut c = vec![0u32; mp.parts.len()];
    for &b in &mp.blocks {
        match b {
            Block::Single(i) => c[i] = value(i) / 2 + 2 * i as u32,
            Block::Pair(i) => {
                let l = value(i);
                if l % 2 == 1 {
                    c[i] = l.div_ceil(2) + 2 * i as u32;
                    c[i + 1] = c[i] + 1;
                } else {
                    c[i] = (l + 2) / 2 + 2 * i as u32;
                    c[i + 1] = c[i];
                }
            }
        }
    }
    if kind == Kind::VPrime {
        for x in &mut c {
            *x -= 1;
        }
    }
    c
}

/// The F2 space attached to a marked partition, with the part indices
/// carrying its generators.
///
/// For [`Kind::VPrime`] this is the space on the full generator set with no
/// kill relation, flagged as a quotient by the all-ones vector; its
/// characters are the characters of the subspace spanned by the pairwise
/// sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ASpace {
    pub space: PresentedSpace,
    pub generator_positions: Vec<usize>,
}

pub fn a_space(kind: Kind, mp: &MarkedPartition) -> ASpace {
    let lam = &mp.parts;
    let gen_parity = match kind {
        Kind::V | Kind::VPrime => 1,
        Kind::VDoublePrime => 0,
    };
    let positions: Vec<usize> = (0..lam.len())
        .filter(|&i| mp.is_singleton(i) || lam[i] % 2 == gen_parity)
        .collect();
    // parity of parts linked by a difference of 2
    let step_parity = match kind {
        Kind::V | Kind::VPrime => 0,
        Kind::VDoublePrime => 1,
    };
    let mut ids = Vec::new();
    for (x, &i) in positions.iter().enumerate() {
        for (y, &j) in positions.iter().enumerate().skip(x + 1) {
            let (li, lj) = (lam[i], lam[j]);
            let linked = li == lj
                || li.abs_diff(lj) == 1
                || (li % 2 == step_parity && lj % 2 == step_parity && li.abs_diff(lj) == 2);
            if linked {
                ids.push((x, y));
            }
        }
    }
    let kills: Vec<usize> = positions
        .iter()
        .enumerate()
        .filter(|(_, &i)| match kind {
            Kind::V => lam[i] <= 2,
            Kind::VPrime => false,
            Kind::VDoublePrime => lam[i] == 1,
        })
        .map(|(x, _)| x)
        .collect();
    let space = PresentedSpace::build(positions.len(), ids, kills, kind == Kind::VPrime)
        .expect("generator indices are in range");
    ASpace {
        space,
        generator_positions: positions,
    }
}
