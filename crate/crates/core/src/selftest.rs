//! Invariant suites run by `springer selftest`.
//!
//! Each check recomputes a property from scratch and reports a single
//! pass/fail line. The direct symbol enumerator here searches rows entry by
//! entry and never goes through the staircase map.

use std::collections::BTreeSet;
use std::fmt;

use crate::counting::{
    census_a, census_d, cuspidal_from_correspondence, cuspidal_predicate, group_case,
    sporadic_checks, CensusFamily,
};
use crate::partitions::{count_p, count_p2, enumerate_bipartitions};
use crate::spin::{
    enumerate_xn, modify, spin_springer, spin_springer_inverse, spin_target_count, spin_weyl_rank,
    total_t, Mark,
};
use crate::springer::{cuspidal_datum, CaseFamily, GroupCase, SpringerTable};
use crate::symbols::{DefectSet, Family, Symbol, SymbolParams};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

fn check(name: &str, failures: Vec<String>, ok_detail: String) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            ok_detail
        } else {
            let shown: Vec<_> = failures.iter().take(5).cloned().collect();
            format!("{} failure(s); first: {}", failures.len(), shown.join("; "))
        },
    }
}

/// Normal-form symbols of rank `n` and defect `d`, found by a bounded
/// search over rows. A normal form with both rows non-empty has `a_1 > 0`
/// or `b_1 > s`, which costs at least `min(m, m')` above the staircase, so
/// `min(m, m') <= n - n_{rho,s,d}` bounds the sizes searched.
pub fn direct_enumerate(params: SymbolParams, n: i64, d: i64) -> Vec<Symbol> {
    let excess = n - params.base_rank(d);
    if excess < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut m_prime = (-d).max(0);
    loop {
        let m = m_prime + d;
        if m.min(m_prime) > excess {
            break;
        }
        let size = m + m_prime;
        let (rho, s) = (params.rho as i64, params.s as i64);
        let target = if d.rem_euclid(2) == 0 {
            n + rho * size * (size - 2) / 4 + s * size / 2
        } else {
            n + rho * (size - 1) * (size - 1) / 4 + s * (size - 1) / 2
        };
        let mut a = Vec::new();
        fill_rows(
            params,
            m as usize,
            m_prime as usize,
            target,
            &mut a,
            &mut Vec::new(),
            &mut out,
        );
        m_prime += 1;
    }
    out.retain(|sym| params.unshift(sym).is_none());
    out.sort();
    out
}

fn min_row_sum(len: usize, start: i64, rho: i64) -> i64 {
    let len = len as i64;
    len * start + rho * len * (len - 1) / 2
}

fn fill_rows(
    params: SymbolParams,
    m: usize,
    m_prime: usize,
    remaining: i64,
    a: &mut Vec<u32>,
    b: &mut Vec<u32>,
    out: &mut Vec<Symbol>,
) {
    let rho = params.rho as i64;
    let s = params.s as i64;
    if a.len() < m {
        let lo = a.last().map_or(0, |&x| x as i64 + rho);
        let left_a = m - a.len() - 1;
        let mut x = lo;
        loop {
            let need = x + min_row_sum(left_a, x + rho, rho) + min_row_sum(m_prime, s, rho);
            if need > remaining {
                break;
            }
            a.push(x as u32);
            fill_rows(params, m, m_prime, remaining - x, a, b, out);
            a.pop();
            x += 1;
        }
        return;
    }
    if b.len() < m_prime {
        let lo = b.last().map_or(s, |&x| x as i64 + rho);
        let left_b = m_prime - b.len() - 1;
        let mut x = lo;
        loop {
            if x + min_row_sum(left_b, x + rho, rho) > remaining {
                break;
            }
            b.push(x as u32);
            fill_rows(params, m, m_prime, remaining - x, a, b, out);
            b.pop();
            x += 1;
        }
        return;
    }
    if remaining == 0 {
        out.push(Symbol::new(a.clone(), b.clone()));
    }
}

pub fn check_enumeration(max_n: i64) -> CheckResult {
    let mut failures = Vec::new();
    let mut cases = 0;
    for rho in [0, 4] {
        for s in [0, 1, 2] {
            let params = SymbolParams::new(rho, s);
            for n in 0..=max_n {
                for d in -7..=7 {
                    cases += 1;
                    let mut staircase = params.enumerate(n, d);
                    staircase.sort();
                    if staircase != direct_enumerate(params, n, d) {
                        failures.push(format!("rho={rho} s={s} n={n} d={d}"));
                    }
                    if staircase.len() as u64 != count_p2(n - params.base_rank(d)) {
                        failures.push(format!("count rho={rho} s={s} n={n} d={d}"));
                    }
                }
            }
        }
    }
    check(
        "symbol enumeration",
        failures,
        format!("{cases} (rho, s, n, d) cases agree with direct search and p2"),
    )
}

fn families() -> Vec<Family> {
    let mut out = Vec::new();
    for (s, sets) in [
        (0, vec![DefectSet::OddPositive]),
        (1, vec![DefectSet::Even, DefectSet::Odd]),
        (2, vec![DefectSet::Even, DefectSet::Odd]),
    ] {
        for defects in sets {
            out.push(Family::new(4, s, defects).expect("valid family"));
        }
    }
    out
}

pub fn check_similarity(max_n: i64) -> CheckResult {
    let mut failures = Vec::new();
    let mut classes_seen = 0;
    for family in families() {
        for n in 0..=max_n {
            let symbols: BTreeSet<Symbol> = family.enumerate(n).into_iter().collect();
            let classes = match family.similarity_classes(n) {
                Ok(c) => c,
                Err(e) => {
                    failures.push(format!("{family:?} n={n}: {e}"));
                    continue;
                }
            };
            let mut covered = BTreeSet::new();
            for class in &classes {
                classes_seen += 1;
                let members = class.members();
                if members.len() as u64 != class.space().order() {
                    failures.push(format!("class size {} n={n}", members[0]));
                }
                for (v, sym) in class.space().characters().iter().zip(members) {
                    if class.class_vector(sym).as_ref() != Ok(v) {
                        failures.push(format!("vector round trip {sym}"));
                    }
                    if family.params.validate(sym).map(|r| r.0) != Ok(n) {
                        failures.push(format!("rank of {sym}"));
                    }
                    if !covered.insert(sym.clone()) {
                        failures.push(format!("{sym} in two classes"));
                    }
                }
            }
            if covered != symbols {
                failures.push(format!("classes do not partition {family:?} n={n}"));
            }
        }
    }
    check(
        "similarity classes",
        failures,
        format!("{classes_seen} classes: sizes 2^dim, vectors bijective, families partitioned"),
    )
}

pub fn check_correspondences(max_n: u32) -> CheckResult {
    let mut failures = Vec::new();
    let mut pairs = 0;
    for family in CaseFamily::ALL {
        for n in 0..=max_n {
            let case = GroupCase::new(family, n);
            let table = match SpringerTable::build(case) {
                Ok(t) => t,
                Err(e) => {
                    failures.push(format!("{family} n={n}: {e}"));
                    continue;
                }
            };
            pairs += table.len();
            let mut labels = BTreeSet::new();
            for row in table.rows() {
                labels.insert(row.label.clone());
                match table.inverse(&row.label) {
                    Ok(back) if back == row => {}
                    _ => failures.push(format!("{family} n={n}: inverse of {}", row.class)),
                }
            }
            let mut expected = BTreeSet::new();
            for d in case.blocks() {
                for bp in enumerate_bipartitions(case.weyl_rank(d)) {
                    expected.insert(crate::springer::SpringerLabel {
                        defect: d,
                        bipartition: bp,
                    });
                }
            }
            if labels != expected || labels.len() != table.len() {
                failures.push(format!("{family} n={n}: image is not the target"));
            }
        }
    }
    check(
        "char-2 correspondences",
        failures,
        format!("{pairs} pairs over four cases map bijectively onto their targets"),
    )
}

pub fn check_counting(max_m: u64) -> CheckResult {
    let mut failures = Vec::new();
    for m in 0..=40 {
        let r = census_a(m);
        if r.formula_count != count_p(m as i64) {
            failures.push(format!("type A identity at m={m}"));
        }
        if m <= max_m && !r.agree {
            failures.push(format!("type A enumeration at m={m}"));
        }
    }
    for m in 0..=max_m.min(crate::counting::D_ENUMERATION_LIMIT) {
        if !census_d(m).agree {
            failures.push(format!("type D at m={m}"));
        }
    }
    for r in sporadic_checks() {
        if !r.agree {
            failures.push(format!("{}", r.family));
        }
    }
    check("class counts", failures, "identities hold".to_string())
}

pub fn check_cuspidal(max_m: u64) -> CheckResult {
    let mut failures = Vec::new();
    for (family, lo) in [(CensusFamily::A, 3), (CensusFamily::D, 4)] {
        for m in lo..=max_m {
            let predicted = cuspidal_predicate(family, m) == 1;
            match cuspidal_from_correspondence(family, m) {
                Ok(Some(found)) if found == predicted => {}
                other => failures.push(format!("{family} m={m}: {other:?}")),
            }
            if predicted {
                let case = group_case(family, m).expect("A and D have cases");
                match cuspidal_datum(case) {
                    Ok(Some((mp, _))) if cuspidal_shape_ok(family, mp.parts()) => {}
                    other => failures.push(format!("{family} m={m} shape: {other:?}")),
                }
            }
        }
    }
    check("cuspidal pairs", failures, format!("sizes up to {max_m}"))
}

/// Parts `3,7,11,...` or `1,5,9,...` (type A), or `2,6,10,...` with an odd
/// number of parts (type D).
pub fn cuspidal_shape_ok(family: CensusFamily, parts: &[u32]) -> bool {
    let progression = |first: u32| {
        parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p == first + 4 * i as u32)
    };
    match family {
        CensusFamily::A => !parts.is_empty() && (progression(3) || progression(1)),
        CensusFamily::D => parts.len() % 2 == 1 && progression(2),
        _ => false,
    }
}

pub fn check_spin(max_n: u64) -> CheckResult {
    let mut failures = Vec::new();
    for n in 0..=max_n {
        let xs = enumerate_xn(n as i64);
        if xs.len() as u64 != spin_target_count(n) {
            failures.push(format!("n={n}: |X_n| differs from the target size"));
        }
        let mut labels = BTreeSet::new();
        for lambda in &xs {
            let entries = modify(lambda);
            for mark in [Mark::A, Mark::B] {
                let vals: Vec<i64> = entries
                    .iter()
                    .filter(|e| e.mark == mark)
                    .map(|e| e.value)
                    .collect();
                if vals.iter().any(|&v| v < 0) || vals.windows(2).any(|w| w[0] > w[1]) {
                    failures.push(format!("{}: {mark:?} entries", lambda.partition()));
                }
            }
            let t = total_t(lambda);
            let sum: i64 = entries.iter().map(|e| e.value).sum();
            if Some(sum) != spin_weyl_rank(n, t) || (t - n as i64).rem_euclid(4) != 0 {
                failures.push(format!("{}: sum identity", lambda.partition()));
            }
            let label = spin_springer(lambda);
            if spin_springer_inverse(n, &label).as_ref() != Ok(lambda) {
                failures.push(format!("{}: inverse", lambda.partition()));
            }
            labels.insert(label);
        }
        if labels.len() != xs.len() {
            failures.push(format!("n={n}: not injective"));
        }
    }
    check("spin correspondence", failures, format!("n up to {max_n}"))
}

/// Runs every suite; correspondence sizes are capped so that the run stays
/// interactive.
pub fn run_all(max_n: u32) -> Vec<CheckResult> {
    vec![
        check_enumeration(max_n as i64),
        check_similarity(max_n as i64),
        check_correspondences(max_n.min(10)),
        check_counting(max_n as u64),
        check_cuspidal((max_n as u64).max(13)),
        check_spin((2 * max_n as u64).max(20)),
    ]
}
