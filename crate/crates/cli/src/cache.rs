//! On-disk cache of KL tables, one JSON file per Cartan type and rank.
//!
//! The header pins the format version, the group and the polynomial
//! normalization. Any mismatch, and any checksum failure, is an error: the
//! cache is never silently regenerated.

use std::fs;
use std::path::{Path, PathBuf};

use cellkit::{CartanType, Element, Error, KlTable, Poly, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const FORMAT_VERSION: u32 = 1;
pub const NORMALIZATION: &str = "selfdual-v";

/// `(y, w, [(exponent, coefficient)])` with words in normal form and
/// coefficients as decimal strings.
type Record = (String, String, Vec<(i32, String)>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub format_version: u32,
    pub cartan_type: String,
    pub rank: usize,
    pub normalization: String,
}

impl Header {
    pub fn new(ty: CartanType, rank: usize) -> Self {
        Header {
            format_version: FORMAT_VERSION,
            cartan_type: ty.to_string(),
            rank,
            normalization: NORMALIZATION.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    header: Header,
    checksum: String,
    /// Nonzero `p(y,w)`, ordered canonically by `w` and then by `y`.
    records: Vec<Record>,
}

/// Summary of a cache file.
#[derive(Clone, Debug, Serialize)]
pub struct CacheInfo {
    pub path: PathBuf,
    pub header: Header,
    pub columns: usize,
    pub entries: usize,
    pub checksum: String,
}

pub fn cache_path(dir: &Path, ty: CartanType, rank: usize) -> PathBuf {
    dir.join(format!("kl-{ty}{rank}.json"))
}

fn checksum(records: &[Record]) -> Result<String> {
    let bytes = serde_json::to_vec(records)?;
    Ok(hex::encode(Sha256::digest(&bytes)))
}

fn rewarm_hint(path: &Path) -> String {
    format!(
        "delete {} and run `cellkit cache warm` again",
        path.display()
    )
}

/// Computes every column and writes the cache file.
pub fn warm(table: &KlTable<i64>, dir: &Path) -> Result<CacheInfo> {
    let sys = table.system();
    table.precompute_all();
    let records: Vec<Record> = sys
        .elements()
        .flat_map(|w| {
            table.column(w).entries.iter().map(move |(y, p)| {
                (
                    sys.word(*y),
                    sys.word(w),
                    p.terms().map(|(d, c)| (d, c.to_string())).collect(),
                )
            })
        })
        .collect();
    let file = CacheFile {
        header: Header::new(sys.cartan_type(), sys.rank()),
        checksum: checksum(&records)?,
        records,
    };
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, sys.cartan_type(), sys.rank());
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_vec(&file)?)?;
    fs::rename(&tmp, &path)?;
    Ok(info_of(path, &file))
}

fn info_of(path: PathBuf, file: &CacheFile) -> CacheInfo {
    CacheInfo {
        path,
        header: file.header.clone(),
        columns: file
            .records
            .iter()
            .map(|r| &r.1)
            .collect::<std::collections::BTreeSet<_>>()
            .len(),
        entries: file.records.len(),
        checksum: file.checksum.clone(),
    }
}

fn read(path: &Path, expected: &Header) -> Result<CacheFile> {
    let bytes = fs::read(path)?;
    let file: CacheFile = serde_json::from_slice(&bytes).map_err(|e| {
        Error::Cache(format!(
            "{} is unreadable ({e}); {}",
            path.display(),
            rewarm_hint(path)
        ))
    })?;
    if &file.header != expected {
        return Err(Error::Cache(format!(
            "{} has header {:?}, expected {:?}; {}",
            path.display(),
            file.header,
            expected,
            rewarm_hint(path)
        )));
    }
    if checksum(&file.records)? != file.checksum {
        return Err(Error::Cache(format!(
            "checksum mismatch in {}; {}",
            path.display(),
            rewarm_hint(path)
        )));
    }
    Ok(file)
}

/// Reads and validates the cache file for `ty` and `rank`.
pub fn inspect(dir: &Path, ty: CartanType, rank: usize) -> Result<CacheInfo> {
    let path = cache_path(dir, ty, rank);
    let file = read(&path, &Header::new(ty, rank))?;
    Ok(info_of(path, &file))
}

/// Installs the cached columns into `table`. Returns `false` when there is no
/// cache file for this group.
pub fn load(table: &KlTable<i64>, dir: &Path) -> Result<bool> {
    let sys = table.system();
    let path = cache_path(dir, sys.cartan_type(), sys.rank());
    if !path.exists() {
        return Ok(false);
    }
    let file = read(&path, &Header::new(sys.cartan_type(), sys.rank()))?;
    let corrupt = |what: String| {
        Error::Cache(format!(
            "{}: {what}; {}",
            path.display(),
            rewarm_hint(&path)
        ))
    };
    let mut columns: Vec<Vec<(Element, Poly)>> = vec![Vec::new(); sys.order()];
    for (y, w, terms) in file.records {
        let (y, w) = match (sys.parse(&y), sys.parse(&w)) {
            (Ok(y), Ok(w)) if y <= w => (y, w),
            _ => return Err(corrupt(format!("bad record ({y}, {w})"))),
        };
        let terms = terms
            .into_iter()
            .map(|(d, c)| c.parse::<i64>().map(|c| (d, c)))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| corrupt(format!("bad coefficient ({e})")))?;
        columns[w.index()].push((y, Poly::from_terms(terms)));
    }
    for (w, mut entries) in sys.elements().zip(columns) {
        entries.sort_by_key(|e| e.0);
        if entries.last().map(|e| e.0) != Some(w) {
            return Err(corrupt(format!("column {} is incomplete", sys.word(w))));
        }
        table.install_column(w, entries);
    }
    Ok(true)
}

/// Recomputes the table from scratch and compares it with the cache file.
/// Returns the number of columns checked.
pub fn verify(fresh: &KlTable<i64>, dir: &Path) -> Result<usize> {
    let sys = fresh.system();
    let cached = KlTable::<i64>::new(fresh.system_arc());
    if !load(&cached, dir)? {
        let path = cache_path(dir, sys.cartan_type(), sys.rank());
        return Err(Error::Cache(format!(
            "no cache file at {}; run `cellkit cache warm`",
            path.display()
        )));
    }
    fresh.precompute_all();
    for w in sys.elements() {
        if fresh.column(w).entries != cached.column(w).entries {
            return Err(Error::Cache(format!(
                "cached column for {} differs from a fresh computation; {}",
                sys.word(w),
                rewarm_hint(&cache_path(dir, sys.cartan_type(), sys.rank()))
            )));
        }
    }
    Ok(sys.order())
}
