//! Closed formula for the generalized Springer correspondence of
//! `Spin_n` (characteristic not 2) on the pairs whose central character is
//! nontrivial on the kernel of `Spin_n -> SO_n`.
//!
//! These pairs are indexed by `X_n`, the partitions of `n` in which every
//! even part has even multiplicity and every odd part occurs at most once.
//! Each part is rewritten into a marked entry according to its residue mod 4
//! and the running signed count `t_i` of earlier odd parts; the `a`-marked
//! and `b`-marked entries then form the bipartition.

use serde::Serialize;
use thiserror::Error;

use crate::partitions::{count_p2, enumerate_partitions, Bipartition, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpinError {
    #[error("partition {partition} is not in X_n: {reason}")]
    NotInXn {
        partition: String,
        reason: &'static str,
    },
    #[error("({n}, {t}, {bipartition}) is not in the image")]
    NotInImage { n: u64, t: i64, bipartition: String },
}

/// A member of `X_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinPartition(Partition);

impl SpinPartition {
    pub fn new(p: Partition) -> Result<Self, SpinError> {
        let fail = |reason| SpinError::NotInXn {
            partition: p.to_string(),
            reason,
        };
        let parts = p.parts();
        let mut i = 0;
        while i < parts.len() {
            let v = parts[i];
            let run = parts[i..].iter().take_while(|&&x| x == v).count();
            if v.is_multiple_of(2) && run % 2 == 1 {
                return Err(fail("an even part has odd multiplicity"));
            }
            if v % 2 == 1 && run > 1 {
                return Err(fail("an odd part is repeated"));
            }
            i += run;
        }
        Ok(Self(p))
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn n(&self) -> u64 {
        self.0.size()
    }
}

/// `0` for even `s`, `(-1)^((s-1)/2)` for odd `s`.
pub fn d_of(s: i64) -> i64 {
    match s.rem_euclid(4) {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mark {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MarkedEntry {
    pub value: i64,
    pub mark: Mark,
    /// 0-based index of the part it came from.
    pub source_index: usize,
}

/// Enumerates `X_n` in partition order.
pub fn enumerate_xn(n: i64) -> Vec<SpinPartition> {
    enumerate_partitions(n)
        .into_iter()
        .filter_map(|p| SpinPartition::new(p).ok())
        .collect()
}

/// `t = sum_i d(lambda_i)`.
pub fn total_t(lambda: &SpinPartition) -> i64 {
    lambda.0.parts().iter().map(|&p| d_of(p as i64)).sum()
}

/// Rewrites every part of `lambda` into a marked entry.
pub fn modify(lambda: &SpinPartition) -> Vec<MarkedEntry> {
    let parts = lambda.0.parts();
    let mut out = Vec::with_capacity(parts.len());
    let mut t = 0i64;
    let mut i = 0;
    while i < parts.len() {
        let e = parts[i] as i64;
        match e.rem_euclid(4) {
            1 => out.push(MarkedEntry {
                value: (e - 1) / 4 - t,
                mark: Mark::A,
                source_index: i,
            }),
            3 => out.push(MarkedEntry {
                value: (e - 3) / 4 + t,
                mark: Mark::B,
                source_index: i,
            }),
            r => {
                // a run of equal even parts, alternately marked a, b
                let run = parts[i..].iter().take_while(|&&x| x as i64 == e).count();
                let (a_val, b_val) = if r == 0 {
                    (e / 4 - t, e / 4 + t)
                } else {
                    ((e + 2) / 4 - t, (e - 2) / 4 + t)
                };
                for k in 0..run {
                    let (value, mark) = if k % 2 == 0 {
                        (a_val, Mark::A)
                    } else {
                        (b_val, Mark::B)
                    };
                    out.push(MarkedEntry {
                        value,
                        mark,
                        source_index: i + k,
                    });
                }
                i += run;
                continue;
            }
        }
        t += d_of(e);
        i += 1;
    }
    out
}

/// The value of the correspondence on `lambda`: the block `t` and a
/// bipartition of `(n - 2t^2 + t)/4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinLabel {
    pub t: i64,
    pub bipartition: Bipartition,
}

/// Weyl rank of block `t` for `Spin_n`, if it is a non-negative integer.
pub fn spin_weyl_rank(n: u64, t: i64) -> Option<i64> {
    let num = n as i64 - 2 * t * t + t;
    (num >= 0 && num % 4 == 0).then_some(num / 4)
}

pub fn spin_springer(lambda: &SpinPartition) -> SpinLabel {
    let entries = modify(lambda);
    let collect = |mark: Mark| -> Partition {
        Partition::from_parts(
            entries
                .iter()
                .filter(|e| e.mark == mark)
                .map(|e| e.value as u32)
                .collect(),
        )
    };
    let (alpha, beta) = (collect(Mark::A), collect(Mark::B));
    let t = total_t(lambda);
    let bipartition = if t >= 1 {
        Bipartition::new(alpha, beta)
    } else {
        Bipartition::new(beta, alpha)
    };
    SpinLabel { t, bipartition }
}

pub fn spin_springer_inverse(n: u64, label: &SpinLabel) -> Result<SpinPartition, SpinError> {
    enumerate_xn(n as i64)
        .into_iter()
        .find(|l| spin_springer(l) == *label)
        .ok_or_else(|| SpinError::NotInImage {
            n,
            t: label.t,
            bipartition: label.bipartition.to_string(),
        })
}

/// The blocks `t ≡ n (mod 4)` with non-negative Weyl rank.
pub fn spin_blocks(n: u64) -> Vec<i64> {
    // 2t^2 - t <= n bounds |t| by sqrt(n) + 1
    let bound = (n as f64).sqrt() as i64 + 2;
    (-bound..=bound)
        .filter(|&t| spin_weyl_rank(n, t).is_some())
        .collect()
}

/// `sum_t p2((n - 2t^2 + t)/4)`, the size of the target of the correspondence.
pub fn spin_target_count(n: u64) -> u64 {
    spin_blocks(n)
        .into_iter()
        .map(|t| count_p2(spin_weyl_rank(n, t).unwrap()))
        .sum()
}

/// JSON view of one value of the correspondence.
#[derive(Debug, Clone, Serialize)]
pub struct SpinRecord {
    pub n: u64,
    pub partition: String,
    pub t: i64,
    pub alpha: String,
    pub beta: String,
    pub bipartition: String,
    pub weyl_rank: u64,
}

impl SpinRecord {
    pub fn new(lambda: &SpinPartition, label: &SpinLabel) -> Self {
        Self {
            n: lambda.n(),
            partition: lambda.partition().to_string(),
            t: label.t,
            alpha: label.bipartition.alpha.to_string(),
            beta: label.bipartition.beta.to_string(),
            bipartition: label.bipartition.to_string(),
            weyl_rank: label.bipartition.size(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SpinPartition {
        SpinPartition::new(s.parse().unwrap()).unwrap()
    }

    fn label(t: i64, bp: &str) -> SpinLabel {
        SpinLabel {
            t,
            bipartition: bp.parse().unwrap(),
        }
    }

    fn entry(value: i64, mark: Mark, source_index: usize) -> MarkedEntry {
        MarkedEntry {
            value,
            mark,
            source_index,
        }
    }

    #[test]
    fn d_values() {
        assert_eq!(d_of(4), 0);
        assert_eq!(d_of(1), 1);
        assert_eq!(d_of(3), -1);
        assert_eq!(d_of(5), 1);
        assert_eq!(d_of(7), -1);
    }

    #[test]
    fn xn_membership() {
        assert_eq!(enumerate_xn(3), vec![sp("3")]);
        assert_eq!(enumerate_xn(4), vec![sp("1,3"), sp("2,2")]);
        assert_eq!(enumerate_xn(0), vec![sp("")]);
        assert!(SpinPartition::new("1,1".parse().unwrap()).is_err());
        assert!(SpinPartition::new("2".parse().unwrap()).is_err());
    }

    #[test]
    fn modification_rules() {
        assert_eq!(modify(&sp("3")), vec![entry(0, Mark::B, 0)]);
        assert_eq!(
            modify(&sp("1,3")),
            vec![entry(0, Mark::A, 0), entry(1, Mark::B, 1)]
        );
        assert_eq!(
            modify(&sp("2,2")),
            vec![entry(1, Mark::A, 0), entry(0, Mark::B, 1)]
        );
        // t = d(1) = 1 before the run of fours
        assert_eq!(
            modify(&sp("1,4,4")),
            vec![
                entry(0, Mark::A, 0),
                entry(0, Mark::A, 1),
                entry(2, Mark::B, 2)
            ]
        );
    }

    #[test]
    fn correspondence_examples() {
        assert_eq!(spin_springer(&sp("3")), label(-1, "|"));
        assert_eq!(spin_springer(&sp("1,3")), label(0, "1|"));
        assert_eq!(spin_springer(&sp("2,2")), label(0, "|1"));
        assert_eq!(spin_springer_inverse(3, &label(-1, "|")), Ok(sp("3")));
        assert_eq!(spin_springer_inverse(4, &label(0, "1|")), Ok(sp("1,3")));
        assert_eq!(spin_springer_inverse(4, &label(0, "|1")), Ok(sp("2,2")));
        assert!(spin_springer_inverse(4, &label(4, "|")).is_err());
    }

    #[test]
    fn target_counts_small() {
        assert_eq!(spin_target_count(0), 1);
        assert_eq!(spin_target_count(2), 0);
        assert_eq!(spin_target_count(4), 2);
        for n in 0..=12 {
            assert_eq!(enumerate_xn(n as i64).len() as u64, spin_target_count(n));
        }
    }
}
