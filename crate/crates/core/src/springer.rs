//! Explicit generalized Springer correspondences for the four families of
//! (possibly disconnected) classical groups in characteristic 2:
//!
//! | case        | group component          | marked partitions | symbols               |
//! |-------------|--------------------------|-------------------|-----------------------|
//! | `sp`        | `Sp_2n`                  | `V_2n`            | `rho=4, s=2`, odd `d` |
//! | `o-outer`   | `O_2n - SO_2n`           | `V'_2n`           | `rho=4, s=0`, `d > 0` odd, rank `n-1` |
//! | `a-odd`     | outer part of `GL_{2n+1}`| `V''_{2n+1}`      | `rho=4, s=1`, odd `d` |
//! | `a-even`    | outer part of `GL_2n`    | `V''_2n`          | `rho=4, s=1`, even `d`|
//!
//! A pair `(mp, chi)` is sent to a symbol by interleaving the `c`-sequence of
//! `mp` into the two rows, taking the similarity class of the result and
//! transporting `chi` along the order-preserving identification of the
//! canonical basis of the A-space with the proper intervals of the class.
//! Subtracting the staircase then gives the label `(d, bipartition)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::gf2::{BitVector, Gf2Error};
use crate::partitions::{count_p2, Bipartition};
use crate::symbols::{DefectSet, Family, SimilarityClass, Symbol, SymbolError};
use crate::unipotent::{
    a_space, c_sequence, enumerate_marked, validate_marked, Kind, MarkedError, MarkedPartition,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpringerError {
    #[error(transparent)]
    Marked(#[from] MarkedError),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error("invalid character: {0}")]
    InvalidCharacter(#[from] Gf2Error),
    #[error("A-space of {class} has {basis} basis elements but its symbol class has {intervals} proper intervals")]
    BasisCountMismatch {
        class: String,
        basis: usize,
        intervals: usize,
    },
    #[error("symbol {symbol} has rank {found}, expected {expected}")]
    RankMismatch {
        symbol: String,
        expected: i64,
        found: i64,
    },
    #[error("{0} is not in the image of the correspondence")]
    NotInImage(String),
    #[error("two pairs map to the same symbol {0}")]
    NotInjective(String),
    #[error("unknown case {0:?} (expected sp, o-outer, a-odd or a-even)")]
    UnknownCase(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseFamily {
    Sp,
    OOuter,
    AOdd,
    AEven,
}

impl CaseFamily {
    pub const ALL: [CaseFamily; 4] = [
        CaseFamily::Sp,
        CaseFamily::OOuter,
        CaseFamily::AOdd,
        CaseFamily::AEven,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseFamily::Sp => "sp",
            CaseFamily::OOuter => "o-outer",
            CaseFamily::AOdd => "a-odd",
            CaseFamily::AEven => "a-even",
        }
    }
}

impl fmt::Display for CaseFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseFamily {
    type Err = SpringerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseFamily::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| SpringerError::UnknownCase(s.to_string()))
    }
}

/// One of the four families at size parameter `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GroupCase {
    pub family: CaseFamily,
    pub n: u32,
}

impl GroupCase {
    pub fn new(family: CaseFamily, n: u32) -> Self {
        Self { family, n }
    }

    pub fn kind(&self) -> Kind {
        match self.family {
            CaseFamily::Sp => Kind::V,
            CaseFamily::OOuter => Kind::VPrime,
            CaseFamily::AOdd | CaseFamily::AEven => Kind::VDoublePrime,
        }
    }

    /// The sum of the parts of the marked partitions.
    pub fn total(&self) -> u64 {
        match self.family {
            CaseFamily::AOdd => 2 * self.n as u64 + 1,
            _ => 2 * self.n as u64,
        }
    }

    pub fn symbol_family(&self) -> Family {
        let (s, defects) = match self.family {
            CaseFamily::Sp => (2, DefectSet::Odd),
            CaseFamily::OOuter => (0, DefectSet::OddPositive),
            CaseFamily::AOdd => (1, DefectSet::Odd),
            CaseFamily::AEven => (1, DefectSet::Even),
        };
        Family::new(4, s, defects).expect("fixed families are valid")
    }

    pub fn symbol_rank(&self) -> i64 {
        match self.family {
            CaseFamily::OOuter => self.n as i64 - 1,
            _ => self.n as i64,
        }
    }

    /// Weyl rank of block `d`: `n_sym - n_{rho,s,d}`.
    pub fn weyl_rank(&self, d: i64) -> i64 {
        self.symbol_rank() - self.symbol_family().params.base_rank(d)
    }

    pub fn marked_partitions(&self) -> Vec<MarkedPartition> {
        enumerate_marked(self.kind(), self.total())
    }

    /// The defects whose blocks are non-empty.
    pub fn blocks(&self) -> Vec<i64> {
        self.symbol_family().defects_for(self.symbol_rank())
    }

    /// Size of the target `⊔_d Irr W_{weyl_rank(d)}`.
    pub fn target_count(&self) -> u64 {
        self.blocks()
            .into_iter()
            .map(|d| count_p2(self.weyl_rank(d)))
            .sum()
    }
}

/// A block `d` of the correspondence together with a bipartition naming an
/// irreducible representation of the Weyl group of that block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpringerLabel {
    pub defect: i64,
    pub bipartition: Bipartition,
}

/// The symbol interleaving the `c`-sequence of `mp`:
/// `(c_1, c_3, c_5, ...; c_2, c_4, ...)`.
pub fn interleaved_symbol(case: GroupCase, mp: &MarkedPartition) -> Symbol {
    let c = c_sequence(case.kind(), mp);
    let a = c.iter().step_by(2).copied().collect();
    let b = c.iter().skip(1).step_by(2).copied().collect();
    Symbol::new(a, b)
}

/// The similarity class receiving `mp`, checked against the rank of the
/// case and the size of the A-space basis.
pub fn target_class(
    case: GroupCase,
    mp: &MarkedPartition,
) -> Result<SimilarityClass, SpringerError> {
    validate_marked(case.kind(), case.total(), mp)?;
    let sym = interleaved_symbol(case, mp);
    let family = case.symbol_family();
    let (rank, _) = family.params.validate(&sym)?;
    if rank != case.symbol_rank() {
        return Err(SpringerError::RankMismatch {
            symbol: sym.to_string(),
            expected: case.symbol_rank(),
            found: rank,
        });
    }
    let class = SimilarityClass::of(family, &sym)?;
    let basis = a_space(case.kind(), mp).space.basis_len();
    if basis != class.proper_interval_count() {
        return Err(SpringerError::BasisCountMismatch {
            class: mp.to_string(),
            basis,
            intervals: class.proper_interval_count(),
        });
    }
    Ok(class)
}

pub fn to_symbol(
    case: GroupCase,
    mp: &MarkedPartition,
    chi: &BitVector,
) -> Result<Symbol, SpringerError> {
    let class = target_class(case, mp)?;
    let space = a_space(case.kind(), mp).space;
    let chi = space.normalize_character(chi)?;
    // i-th basis element of the A-space goes to the i-th proper interval
    Ok(class.class_member(&chi)?)
}

/// Reads a character of the A-space of `mp`. `ε` names the trivial
/// character. On a quotient space the leading coordinate may be left out,
/// in which case it is taken to be 0.
pub fn parse_character(
    case: GroupCase,
    mp: &MarkedPartition,
    text: &str,
) -> Result<BitVector, SpringerError> {
    validate_marked(case.kind(), case.total(), mp)?;
    let space = a_space(case.kind(), mp).space;
    let text = text.trim();
    if text == "ε" {
        return Ok(BitVector::zeros(space.basis_len()));
    }
    let mut v: BitVector = text.parse()?;
    if space.is_quotient() && v.len() + 1 == space.basis_len() {
        let mut bits = vec![false];
        bits.extend_from_slice(v.bits());
        v = BitVector::from_bits(bits);
    }
    Ok(space.normalize_character(&v)?)
}

pub fn springer_map(
    case: GroupCase,
    mp: &MarkedPartition,
    chi: &BitVector,
) -> Result<SpringerLabel, SpringerError> {
    let sym = to_symbol(case, mp, chi)?;
    label_of(case, &sym)
}

fn label_of(case: GroupCase, sym: &Symbol) -> Result<SpringerLabel, SpringerError> {
    let (defect, bipartition) = case.symbol_family().params.staircase_from_symbol(sym)?;
    Ok(SpringerLabel {
        defect,
        bipartition,
    })
}

/// The symbol named by a label, checking that the label lies in the target.
pub fn label_symbol(case: GroupCase, label: &SpringerLabel) -> Result<Symbol, SpringerError> {
    let family = case.symbol_family();
    let not_in = || SpringerError::NotInImage(format!("({}, {})", label.defect, label.bipartition));
    if !family.defects.contains(label.defect)
        || label.bipartition.size() as i64 != case.weyl_rank(label.defect)
    {
        return Err(not_in());
    }
    Ok(family
        .params
        .staircase_to_symbol(label.defect, &label.bipartition))
}

/// One entry of the correspondence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mapping {
    pub class: MarkedPartition,
    pub chi: BitVector,
    pub symbol: Symbol,
    pub label: SpringerLabel,
}

/// The whole correspondence for one case, indexed both ways.
///
/// Building the table evaluates the forward map on every pair and fails if
/// two pairs collide, so a built table is injective by construction.
#[derive(Debug, Clone)]
pub struct SpringerTable {
    case: GroupCase,
    rows: Vec<Mapping>,
    by_symbol: HashMap<Symbol, usize>,
}

impl SpringerTable {
    pub fn build(case: GroupCase) -> Result<Self, SpringerError> {
        let mut rows = Vec::new();
        let mut by_symbol = HashMap::new();
        for mp in case.marked_partitions() {
            let class = target_class(case, &mp)?;
            let space = a_space(case.kind(), &mp).space;
            for chi in space.characters() {
                let symbol = class.class_member(&chi)?;
                let label = label_of(case, &symbol)?;
                if by_symbol.insert(symbol.clone(), rows.len()).is_some() {
                    return Err(SpringerError::NotInjective(symbol.to_string()));
                }
                rows.push(Mapping {
                    class: mp.clone(),
                    chi,
                    symbol,
                    label,
                });
            }
        }
        Ok(Self {
            case,
            rows,
            by_symbol,
        })
    }

    pub fn case(&self) -> GroupCase {
        self.case
    }

    pub fn rows(&self) -> &[Mapping] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn from_symbol(&self, sym: &Symbol) -> Result<&Mapping, SpringerError> {
        let family = self.case.symbol_family();
        let (rank, d) = family.params.validate(sym)?;
        if rank != self.case.symbol_rank() || !family.defects.contains(d) {
            return Err(SpringerError::NotInImage(sym.to_string()));
        }
        let nf = family.params.normal_form(sym);
        self.by_symbol
            .get(&nf)
            .map(|&i| &self.rows[i])
            .ok_or_else(|| SpringerError::NotInImage(sym.to_string()))
    }

    pub fn inverse(&self, label: &SpringerLabel) -> Result<&Mapping, SpringerError> {
        let sym = label_symbol(self.case, label)?;
        self.from_symbol(&sym)
    }
}

pub fn from_symbol(
    case: GroupCase,
    sym: &Symbol,
) -> Result<(MarkedPartition, BitVector), SpringerError> {
    let table = SpringerTable::build(case)?;
    let m = table.from_symbol(sym)?;
    Ok((m.class.clone(), m.chi.clone()))
}

pub fn springer_inverse(
    case: GroupCase,
    label: &SpringerLabel,
) -> Result<(MarkedPartition, BitVector), SpringerError> {
    let table = SpringerTable::build(case)?;
    let m = table.inverse(label)?;
    Ok((m.class.clone(), m.chi.clone()))
}

/// The pair sent to the only element of a block with trivial Weyl group,
/// if such a block exists.
pub fn cuspidal_datum(
    case: GroupCase,
) -> Result<Option<(MarkedPartition, BitVector)>, SpringerError> {
    let Some(d) = case.blocks().into_iter().find(|&d| case.weyl_rank(d) == 0) else {
        return Ok(None);
    };
    let label = SpringerLabel {
        defect: d,
        bipartition: Bipartition::default(),
    };
    springer_inverse(case, &label).map(Some)
}

/// JSON view of one mapping.
#[derive(Debug, Clone, Serialize)]
pub struct MappingRecord {
    pub case: CaseFamily,
    pub n: u32,
    pub class: String,
    #[serde(rename = "char")]
    pub chi: String,
    pub symbol: String,
    pub defect: i64,
    pub bipartition: String,
}

impl Mapping {
    pub fn to_record(&self, case: GroupCase) -> MappingRecord {
        MappingRecord {
            case: case.family,
            n: case.n,
            class: self.class.to_string(),
            chi: self.chi.to_string(),
            symbol: self.symbol.to_string(),
            defect: self.label.defect,
            bipartition: self.label.bipartition.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> MarkedPartition {
        s.parse().unwrap()
    }

    fn sym(s: &str) -> Symbol {
        s.parse().unwrap()
    }

    fn label(d: i64, bp: &str) -> SpringerLabel {
        SpringerLabel {
            defect: d,
            bipartition: bp.parse().unwrap(),
        }
    }

    const EMPTY: BitVector = BitVector::empty();

    #[test]
    fn forward_examples() {
        let sp1 = GroupCase::new(CaseFamily::Sp, 1);
        assert_eq!(to_symbol(sp1, &mp("(2)"), &EMPTY), Ok(sym("(1;)")));
        assert_eq!(to_symbol(sp1, &mp("(0)(11)"), &EMPTY), Ok(sym("(0,4;3)")));
        let o2 = GroupCase::new(CaseFamily::OOuter, 2);
        // the only character of A' is trivial; over the basis of the ambient space it reads "0"
        let zero = BitVector::zeros(1);
        assert_eq!(to_symbol(o2, &mp("(11)(2)"), &zero), Ok(sym("(0,4;1)")));

        assert_eq!(springer_map(sp1, &mp("(2)"), &EMPTY), Ok(label(1, "1|")));
        assert_eq!(
            springer_map(sp1, &mp("(0)(11)"), &EMPTY),
            Ok(label(1, "|1"))
        );
        let o1 = GroupCase::new(CaseFamily::OOuter, 1);
        assert_eq!(springer_map(o1, &mp("(2)"), &zero), Ok(label(1, "|")));
    }

    #[test]
    fn inverse_examples() {
        let sp1 = GroupCase::new(CaseFamily::Sp, 1);
        assert_eq!(from_symbol(sp1, &sym("(1;)")), Ok((mp("(2)"), EMPTY)));
        assert_eq!(
            from_symbol(sp1, &sym("(0,4;3)")),
            Ok((mp("(0)(11)"), EMPTY))
        );
        let o1 = GroupCase::new(CaseFamily::OOuter, 1);
        assert_eq!(
            from_symbol(o1, &sym("(0;)")),
            Ok((mp("(2)"), BitVector::zeros(1)))
        );
        assert!(matches!(
            from_symbol(sp1, &sym("(2;)")),
            Err(SpringerError::NotInImage(_))
        ));
        assert!(matches!(
            springer_inverse(sp1, &label(3, "|")),
            Err(SpringerError::NotInImage(_))
        ));
    }

    #[test]
    fn bad_inputs() {
        let sp1 = GroupCase::new(CaseFamily::Sp, 1);
        assert!(matches!(
            to_symbol(sp1, &mp("(4)"), &EMPTY),
            Err(SpringerError::Marked(MarkedError::SumMismatch { .. }))
        ));
        assert!(matches!(
            to_symbol(sp1, &mp("(2)"), &BitVector::zeros(1)),
            Err(SpringerError::InvalidCharacter(_))
        ));
        assert_eq!("o-outer".parse(), Ok(CaseFamily::OOuter));
        assert!("so".parse::<CaseFamily>().is_err());
    }

    #[test]
    fn cuspidal_examples() {
        let a3 = GroupCase::new(CaseFamily::AOdd, 1);
        let (m, _) = cuspidal_datum(a3).unwrap().unwrap();
        assert_eq!(m.parts(), &[3]);
        let o18 = GroupCase::new(CaseFamily::OOuter, 9);
        let (m, _) = cuspidal_datum(o18).unwrap().unwrap();
        assert_eq!(m.parts(), &[2, 6, 10]);
        // Sp_4: the block d = -1 has Weyl rank 2 - (1 + 1) = 0
        let sp2 = GroupCase::new(CaseFamily::Sp, 2);
        assert!(cuspidal_datum(sp2).unwrap().is_some());
        assert!(cuspidal_datum(GroupCase::new(CaseFamily::Sp, 3))
            .unwrap()
            .is_none());
    }

    #[test]
    fn table_sizes_match_targets() {
        for family in CaseFamily::ALL {
            for n in 0..=6 {
                let case = GroupCase::new(family, n);
                let table = SpringerTable::build(case).unwrap();
                assert_eq!(table.len() as u64, case.target_count(), "{family} n={n}");
            }
        }
    }
}
