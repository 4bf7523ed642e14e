//! Reference implementations used only by the tests. None of them call the
//! library's enumeration, shift, or counting code.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

/// A symbol as two plain rows.
pub type Rows = (Vec<u32>, Vec<u32>);

pub fn render(rows: &Rows) -> String {
    let join = |r: &[u32]| r.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    format!("({};{})", join(&rows.0), join(&rows.1))
}

/// `n_{rho,s,d}` straight from its defining formula.
pub fn base_rank(rho: i64, s: i64, d: i64) -> i64 {
    if d % 2 == 0 {
        rho * d * d / 4 - s * d / 2
    } else {
        rho * (d - 1) * (d + 1) / 4 - s * (d - 1) / 2
    }
}

/// The rank of a row pair, or `None` if the gap, bound, or integrality
/// conditions fail.
pub fn rank(rho: i64, s: i64, rows: &Rows) -> Option<i64> {
    let gaps = |r: &[u32]| r.windows(2).all(|w| w[1] as i64 - w[0] as i64 >= rho);
    if !gaps(&rows.0) || !gaps(&rows.1) || rows.1.iter().any(|&b| (b as i64) < s) {
        return None;
    }
    let total: i64 = rows.0.iter().chain(&rows.1).map(|&x| x as i64).sum();
    let size = (rows.0.len() + rows.1.len()) as i64;
    let d = rows.0.len() as i64 - rows.1.len() as i64;
    let (num, den) = if d % 2 == 0 {
        (4 * total - rho * size * (size - 2) - 2 * s * size, 4)
    } else {
        (
            4 * total - rho * (size - 1) * (size - 1) - 2 * s * (size - 1),
            4,
        )
    };
    (num % den == 0).then_some(num / den)
}

fn is_reduced(s: u32, rows: &Rows) -> bool {
    !(rows.0.first() == Some(&0) && rows.1.first() == Some(&s))
}

/// Extends `a` and then `b` entry by entry, never letting the cheapest
/// completion exceed `remaining`, and keeps the pairs whose sum is exact.
#[allow(clippy::too_many_arguments)]
fn fill(
    rho: u32,
    s: u32,
    ma: usize,
    mb: usize,
    remaining: i64,
    a: &mut Vec<u32>,
    b: &mut Vec<u32>,
    out: &mut Vec<Rows>,
) {
    let cheapest = |len: usize, x: i64| {
        let len = len as i64;
        len * x + rho as i64 * len * (len - 1) / 2
    };
    if a.len() < ma {
        let mut x = a.last().map_or(0, |&v| v + rho);
        while x as i64 + cheapest(ma - a.len() - 1, (x + rho) as i64) + cheapest(mb, s as i64)
            <= remaining
        {
            a.push(x);
            fill(rho, s, ma, mb, remaining - x as i64, a, b, out);
            a.pop();
            x += 1;
        }
    } else if b.len() < mb {
        let mut x = b.last().map_or(s, |&v| v + rho);
        while x as i64 + cheapest(mb - b.len() - 1, (x + rho) as i64) <= remaining {
            b.push(x);
            fill(rho, s, ma, mb, remaining - x as i64, a, b, out);
            b.pop();
            x += 1;
        }
    } else if remaining == 0 {
        out.push((a.clone(), b.clone()));
    }
}

/// All reduced symbols of rank `n` and defect `d`: every pair of rows with
/// the right sizes and the entry sum that rank `n` forces, filtered by
/// [`rank`].
pub fn brute_symbols(rho: u32, s: u32, n: i64, d: i64) -> BTreeSet<Rows> {
    let mut found = BTreeSet::new();
    let excess = n - base_rank(rho as i64, s as i64, d);
    if excess < 0 {
        return found;
    }
    let mut mb = (-d).max(0);
    // two sizes past the point where every reduced symbol is too expensive
    while (mb + d).min(mb) <= excess + 2 {
        let ma = mb + d;
        let size = ma + mb;
        let (rho_i, s_i) = (rho as i64, s as i64);
        let total = if d % 2 == 0 {
            n + (rho_i * size * (size - 2) + 2 * s_i * size) / 4
        } else {
            n + (rho_i * (size - 1) * (size - 1) + 2 * s_i * (size - 1)) / 4
        };
        let mut out = Vec::new();
        fill(
            rho,
            s,
            ma as usize,
            mb as usize,
            total,
            &mut Vec::new(),
            &mut Vec::new(),
            &mut out,
        );
        for rows in out {
            if rank(rho_i, s_i, &rows) == Some(n) && is_reduced(s, &rows) {
                found.insert(rows);
            }
        }
        mb += 1;
    }
    found
}

fn shift(rho: u32, s: u32, rows: &Rows) -> Rows {
    let mut a = vec![0];
    a.extend(rows.0.iter().map(|x| x + rho));
    let mut b = vec![s];
    b.extend(rows.1.iter().map(|x| x + rho));
    (a, b)
}

/// Multisets `A ∪ B` and `A ∩ B` after shifting to `size` entries.
fn union_and_meet(rho: u32, s: u32, rows: &Rows, size: usize) -> (Vec<u32>, Vec<u32>) {
    let mut r = rows.clone();
    while r.0.len() + r.1.len() < size {
        r = shift(rho, s, &r);
    }
    let mut union: Vec<u32> = r.0.iter().chain(&r.1).copied().collect();
    union.sort();
    let meet: Vec<u32> = r.0.iter().filter(|x| r.1.contains(x)).copied().collect();
    (union, meet)
}

/// Similarity classes by direct comparison of unions and intersections.
pub fn brute_classes(rho: u32, s: u32, symbols: &BTreeSet<Rows>) -> BTreeSet<BTreeSet<Rows>> {
    let size = symbols
        .iter()
        .map(|r| r.0.len() + r.1.len())
        .max()
        .unwrap_or(0)
        + 2;
    let mut groups: BTreeMap<(Vec<u32>, Vec<u32>), BTreeSet<Rows>> = BTreeMap::new();
    for r in symbols {
        let size = size + (size + r.0.len() + r.1.len()) % 2;
        groups
            .entry(union_and_meet(rho, s, r, size))
            .or_default()
            .insert(r.clone());
    }
    groups.into_values().collect()
}

/// `p(n)` by counting partitions with parts at most `k`.
pub fn partitions(n: i64) -> u64 {
    fn go(n: i64, k: i64) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=k.min(n)).map(|p| go(n - p, p)).sum()
    }
    if n < 0 {
        0
    } else {
        go(n, n)
    }
}

/// `p(n)` by Euler's pentagonal recurrence, for larger `n`.
pub fn partitions_pentagonal(n: usize) -> Vec<u64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[m] += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                p[m] += sign * p[m - g2];
            }
            k += 1;
        }
    }
    p.into_iter().map(|x| x as u64).collect()
}

pub fn bipartitions(n: i64) -> u64 {
    (0..=n.max(-1))
        .map(|k| partitions(k) * partitions(n - k))
        .sum()
}
