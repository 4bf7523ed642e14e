//! C ABI over `springer-core`.
//!
//! Every fallible call returns a [`SpringerStatus`]. Results come back as
//! NUL-terminated JSON strings owned by the caller, to be released with
//! [`springer_string_free`]. After a failure, [`springer_last_error`] gives
//! a description valid until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use springer_core::counting::{census_a, census_d, sporadic_checks};
use springer_core::partitions::{Bipartition, Partition};
use springer_core::spin::{spin_springer, SpinError, SpinPartition, SpinRecord};
use springer_core::springer::{
    parse_character, springer_map, to_symbol, CaseFamily, GroupCase, Mapping, SpringerError,
    SpringerLabel, SpringerTable,
};
use springer_core::symbols::{DefectSet, Family};
use springer_core::unipotent::MarkedPartition;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpringerStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Text that does not parse, or an object violating its defining conditions.
    InvalidInput = 3,
    /// Well-formed input outside the image of the correspondence.
    NotInImage = 4,
    OutOfRange = 5,
    Internal = 6,
}

/// A built correspondence table for one case.
pub struct SpringerTableHandle {
    table: SpringerTable,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl ToString) {
    let text = CString::new(msg.to_string().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

struct Failure(SpringerStatus, String);

impl From<SpringerError> for Failure {
    fn from(e: SpringerError) -> Self {
        let status = match e {
            SpringerError::NotInImage(_) => SpringerStatus::NotInImage,
            SpringerError::NotInjective(_)
            | SpringerError::BasisCountMismatch { .. }
            | SpringerError::RankMismatch { .. } => SpringerStatus::Internal,
            _ => SpringerStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

impl From<SpinError> for Failure {
    fn from(e: SpinError) -> Self {
        let status = match e {
            SpinError::NotInXn { .. } => SpringerStatus::InvalidInput,
            SpinError::NotInImage { .. } => SpringerStatus::NotInImage,
        };
        Failure(status, e.to_string())
    }
}

fn invalid(msg: impl ToString) -> Failure {
    Failure(SpringerStatus::InvalidInput, msg.to_string())
}

/// Runs `body`, converting its outcome into a status and recording errors.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> SpringerStatus {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(body)) {
        Ok(Ok(())) => SpringerStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SpringerStatus::Internal
        }
    }
}

/// # Safety
/// `p` is null or a NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(
            SpringerStatus::NullPointer,
            "null string argument".into(),
        ));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(SpringerStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

/// # Safety
/// `out` is null or writable.
unsafe fn write_json(out: *mut *mut c_char, json: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(
            SpringerStatus::NullPointer,
            "null output pointer".into(),
        ));
    }
    let s = CString::new(json).map_err(|e| Failure(SpringerStatus::Internal, e.to_string()))?;
    *out = s.into_raw();
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string(value).map_err(|e| Failure(SpringerStatus::Internal, e.to_string()))
}

/// # Safety
/// `handle` is null or came from [`springer_table_new`] and was not freed.
unsafe fn table<'a>(
    handle: *const SpringerTableHandle,
) -> Result<&'a SpringerTableHandle, Failure> {
    handle
        .as_ref()
        .ok_or_else(|| Failure(SpringerStatus::NullPointer, "null table handle".into()))
}

/// Description of the last failure on this thread. The pointer stays valid
/// until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn springer_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` is null or a string produced by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn springer_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the correspondence for `case_name` (`sp`, `o-outer`, `a-odd`,
/// `a-even`) at size `n`.
///
/// # Safety
/// `case_name` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn springer_table_new(
    case_name: *const c_char,
    n: u32,
    out: *mut *mut SpringerTableHandle,
) -> SpringerStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure(
                SpringerStatus::NullPointer,
                "null output pointer".into(),
            ));
        }
        let family: CaseFamily = read_str(case_name)?.parse()?;
        let table = SpringerTable::build(GroupCase::new(family, n))?;
        *out = Box::into_raw(Box::new(SpringerTableHandle { table }));
        Ok(())
    })
}

/// # Safety
/// `handle` is null or came from [`springer_table_new`] and was not freed.
#[no_mangle]
pub unsafe extern "C" fn springer_table_free(handle: *mut SpringerTableHandle) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of pairs in the table, 0 for a null handle.
///
/// # Safety
/// `handle` is null or a live table.
#[no_mangle]
pub unsafe extern "C" fn springer_table_len(handle: *const SpringerTableHandle) -> usize {
    handle.as_ref().map_or(0, |h| h.table.len())
}

/// JSON record of row `index`.
///
/// # Safety
/// `handle` is a live table; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn springer_table_record_json(
    handle: *const SpringerTableHandle,
    index: usize,
    out: *mut *mut c_char,
) -> SpringerStatus {
    guard(|| {
        let h = table(handle)?;
        let row = h.table.rows().get(index).ok_or_else(|| {
            Failure(
                SpringerStatus::OutOfRange,
                format!("row {index} of {}", h.table.len()),
            )
        })?;
        write_json(out, to_json(&row.to_record(h.table.case()))?)
    })
}

/// Image of a pair given as class text such as `(11)(2)(44)` and a
/// character bit string.
///
/// # Safety
/// `handle` is a live table; `class` and `chi` are NUL-terminated strings;
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn springer_table_map(
    handle: *const SpringerTableHandle,
    class: *const c_char,
    chi: *const c_char,
    out: *mut *mut c_char,
) -> SpringerStatus {
    guard(|| {
        let h = table(handle)?;
        let case = h.table.case();
        let mp: MarkedPartition = read_str(class)?.parse().map_err(invalid)?;
        let chi = parse_character(case, &mp, read_str(chi)?)?;
        let mapping = Mapping {
            symbol: to_symbol(case, &mp, &chi)?,
            label: springer_map(case, &mp, &chi)?,
            class: mp,
            chi,
        };
        write_json(out, to_json(&mapping.to_record(case))?)
    })
}

/// Pair sent to block `defect` and bipartition text such as `1,1|2`.
///
/// # Safety
/// `handle` is a live table; `bipartition` is a NUL-terminated string;
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn springer_table_inverse(
    handle: *const SpringerTableHandle,
    defect: i64,
    bipartition: *const c_char,
    out: *mut *mut c_char,
) -> SpringerStatus {
    guard(|| {
        let h = table(handle)?;
        let bp: Bipartition = read_str(bipartition)?.parse().map_err(invalid)?;
        let row = h.table.inverse(&SpringerLabel {
            defect,
            bipartition: bp,
        })?;
        write_json(out, to_json(&row.to_record(h.table.case()))?)
    })
}

/// The Spin correspondence on a partition of `n` given as `1,3`.
///
/// # Safety
/// `partition` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn springer_spin_map(
    n: u64,
    partition: *const c_char,
    out: *mut *mut c_char,
) -> SpringerStatus {
    guard(|| {
        let p: Partition = read_str(partition)?.parse().map_err(invalid)?;
        if p.size() != n {
            return Err(invalid(format!(
                "partition {p} has size {}, expected {n}",
                p.size()
            )));
        }
        let lambda = SpinPartition::new(p)?;
        write_json(
            out,
            to_json(&SpinRecord::new(&lambda, &spin_springer(&lambda)))?,
        )
    })
}

/// Similarity classes of the symbols of rank `n`, as a JSON array.
/// `defects` is `even`, `odd` or `odd-positive`.
///
/// # Safety
/// `defects` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn springer_symbol_classes_json(
    rho: u32,
    s: u32,
    n: i64,
    defects: *const c_char,
    out: *mut *mut c_char,
) -> SpringerStatus {
    guard(|| {
        let defects: DefectSet = read_str(defects)?.parse().map_err(invalid)?;
        let family = Family::new(rho, s, defects).map_err(invalid)?;
        let classes = family.similarity_classes(n).map_err(invalid)?;
        let records: Vec<_> = classes.iter().map(|c| c.to_record()).collect();
        write_json(out, to_json(&records)?)
    })
}

/// Class-count reports as a JSON array. `family` is `a`, `d` or `sporadic`;
/// `m` is ignored for `sporadic`.
///
/// # Safety
/// `family` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn springer_count_json(
    family: *const c_char,
    m: u64,
    out: *mut *mut c_char,
) -> SpringerStatus {
    guard(|| {
        let reports = match read_str(family)? {
            "a" => vec![census_a(m)],
            "d" => vec![census_d(m)],
            "sporadic" => sporadic_checks(),
            other => {
                return Err(invalid(format!(
                    "unknown family {other:?} (expected a, d or sporadic)"
                )))
            }
        };
        write_json(out, to_json(&reports)?)
    })
}

/// Version string of this library, statically allocated.
#[no_mangle]
pub extern "C" fn springer_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}
