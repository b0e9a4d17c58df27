//! On-disk cache of acting matrices, one JSON file per (a, r, k) triple.
//! Writes go through a temp file and an atomic rename so concurrent runs
//! never observe a torn file.

use crate::error::Result;
use crate::symplectic::SymplecticMatrix;
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    a: u32,
    r: u32,
    k: usize,
    matrix: Vec<Vec<u32>>,
}

fn file_path(dir: &Path, a: u32, r: u32, k: usize) -> PathBuf {
    dir.join(format!("acting-a{a}-r{r}-k{k}.json"))
}

pub fn load(dir: &Path, a: u32, r: u32, k: usize) -> Result<Option<SymplecticMatrix>> {
    let path = file_path(dir, a, r, k);
    let raw = match std::fs::read_to_string(&path) {
        Ok(s) => s,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let entry: CacheEntry = match serde_json::from_str(&raw) {
        Ok(e) => e,
        Err(_) => return Ok(None), // corrupt entry: recompute
    };
    if (entry.a, entry.r, entry.k) != (a, r, k) {
        return Ok(None);
    }
    let n = 2 * k;
    if entry.matrix.len() != n || entry.matrix.iter().any(|row| row.len() != n) {
        return Ok(None);
    }
    Ok(Some(SymplecticMatrix {
        r,
        k,
        entries: entry.matrix.into_iter().flatten().collect(),
    }))
}

pub fn store(dir: &Path, a: u32, m: &SymplecticMatrix) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let n = m.dim();
    let rows: Vec<Vec<u32>> = (0..n)
        .map(|i| m.entries[i * n..(i + 1) * n].to_vec())
        .collect();
    let entry = CacheEntry {
        a,
        r: m.r,
        k: m.k,
        matrix: rows,
    };
    let path = file_path(dir, a, m.r, m.k);
    let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
    std::fs::write(&tmp, serde_json::to_string(&entry)?)?;
    std::fs::rename(&tmp, &path)?;
    Ok(())
}
