//! `SGAT` binary cache for [`SigmaTable`].
//!
//! Layout, all little-endian:
//!
//! | offset | size | field                     |
//! |--------|------|---------------------------|
//! | 0      | 4    | magic `b"SGAT"`           |
//! | 4      | 4    | format version (`u32`)    |
//! | 8      | 8    | `α` (`f64`)               |
//! | 16     | 8    | `n_max` (`u64`)           |
//! | 24     | 8·n  | `σ_α(1..=n_max)` (`f64`)  |
//!
//! Prefix sums are not stored; they are rebuilt on load.

use std::io::{Read, Write};
use std::path::Path;

use super::{Alpha, SigmaTable};
use crate::error::{CacheError, LabError, Result};

pub const CACHE_MAGIC: [u8; 4] = *b"SGAT";
pub const CACHE_VERSION: u32 = 1;
const HEADER_LEN: u64 = 24;

/// Serialize a table into any writer.
pub fn write_cache<W: Write>(table: &SigmaTable, mut out: W) -> Result<()> {
    let mut header = Vec::with_capacity(HEADER_LEN as usize);
    header.extend_from_slice(&CACHE_MAGIC);
    header.extend_from_slice(&CACHE_VERSION.to_le_bytes());
    header.extend_from_slice(&table.alpha().value().to_le_bytes());
    header.extend_from_slice(&table.n_max().to_le_bytes());
    out.write_all(&header)?;
    let mut buf = Vec::with_capacity(8 * 8192);
    for chunk in table.values().chunks(8192) {
        buf.clear();
        for v in chunk {
            buf.extend_from_slice(&v.to_le_bytes());
        }
        out.write_all(&buf)?;
    }
    out.flush()?;
    Ok(())
}

/// Deserialize a table. When `expected_alpha` is given, a cache built for a
/// different exponent is rejected.
pub fn read_cache<R: Read>(mut input: R, expected_alpha: Option<Alpha>) -> Result<SigmaTable> {
    let mut bytes = Vec::new();
    input.read_to_end(&mut bytes)?;
    let found = bytes.len() as u64;
    if found < HEADER_LEN {
        if found >= 4 && bytes[..4] != CACHE_MAGIC {
            return Err(CacheError::BadMagic(bytes[..4].try_into().unwrap()).into());
        }
        return Err(CacheError::Truncated {
            expected: HEADER_LEN,
            found,
        }
        .into());
    }
    let magic: [u8; 4] = bytes[0..4].try_into().unwrap();
    if magic != CACHE_MAGIC {
        return Err(CacheError::BadMagic(magic).into());
    }
    let version = u32::from_le_bytes(bytes[4..8].try_into().unwrap());
    if version != CACHE_VERSION {
        return Err(CacheError::UnsupportedVersion(version).into());
    }
    let stored = f64::from_le_bytes(bytes[8..16].try_into().unwrap());
    let alpha = Alpha::new(stored)
        .map_err(|_| CacheError::Corrupt(format!("stored alpha {stored} outside (0, 1)")))?;
    if let Some(req) = expected_alpha {
        if req.value().to_bits() != stored.to_bits() {
            return Err(CacheError::AlphaMismatch {
                stored,
                requested: req.value(),
            }
            .into());
        }
    }
    let n_max = u64::from_le_bytes(bytes[16..24].try_into().unwrap());
    let expected = n_max
        .checked_mul(8)
        .and_then(|b| b.checked_add(HEADER_LEN))
        .ok_or_else(|| CacheError::Corrupt(format!("n_max {n_max} overflows")))?;
    if found < expected {
        return Err(CacheError::Truncated { expected, found }.into());
    }
    if found > expected {
        return Err(CacheError::TrailingBytes { expected, found }.into());
    }
    let values: Vec<f64> = bytes[HEADER_LEN as usize..]
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
        .collect();
    SigmaTable::from_values(alpha, values).map_err(|e| match e {
        LabError::Domain(msg) => CacheError::Corrupt(msg).into(),
        other => other,
    })
}

/// FNV-1a over the little-endian bytes of the stored values.
pub fn value_checksum(table: &SigmaTable) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for v in table.values() {
        for b in v.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

impl SigmaTable {
    /// Write via a temporary file in the same directory, renamed into place.
    pub fn write_to_path(&self, path: &Path) -> Result<()> {
        let dir = match path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p,
            _ => Path::new("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        write_cache(self, std::io::BufWriter::new(tmp.as_file_mut()))?;
        tmp.as_file().sync_all()?;
        tmp.persist(path).map_err(|e| e.error)?;
        Ok(())
    }

    pub fn read_from_path(path: &Path, expected_alpha: Option<Alpha>) -> Result<SigmaTable> {
        let file = std::fs::File::open(path)?;
        read_cache(std::io::BufReader::new(file), expected_alpha)
    }
}
