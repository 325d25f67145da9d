//! Optional ray coordinates and an orthogonality check against the table.
//!
//! File format: one record per line, `id c1 c2 ... c8` with integer
//! components. Blank lines and text after `#` are ignored. Exactly 40
//! records with ids 1..=40, no zero vectors.

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::ids::{BasisId, RayId, BASIS_SIZE, NUM_RAYS};
use crate::tables::BasisTable;

pub type RayVector = [i64; BASIS_SIZE];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayVectorFile {
    vectors: [RayVector; NUM_RAYS],
}

impl RayVectorFile {
    pub fn vector(&self, r: RayId) -> &RayVector {
        &self.vectors[r.index()]
    }

    pub fn set_vector(&mut self, r: RayId, v: RayVector) {
        self.vectors[r.index()] = v;
    }
}

pub fn parse_ray_vectors(text: &str) -> Result<RayVectorFile> {
    let mut vectors: [Option<RayVector>; NUM_RAYS] = [None; NUM_RAYS];
    let mut records = 0;
    let mut last_line = 0;
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |reason: String| Error::RayFile { line, reason };
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != BASIS_SIZE + 1 {
            return Err(err(format!("expected id and {BASIS_SIZE} components, found {} fields", fields.len())));
        }
        let id: u8 = fields[0].parse().map_err(|_| err(format!("bad ray id `{}`", fields[0])))?;
        let ray = RayId::new(id).map_err(|e| err(e.to_string()))?;
        let mut v = [0i64; BASIS_SIZE];
        for (slot, f) in v.iter_mut().zip(&fields[1..]) {
            *slot = f.parse().map_err(|_| err(format!("bad component `{f}`")))?;
        }
        if v.iter().all(|&c| c == 0) {
            return Err(err(format!("ray {id} is the zero vector")));
        }
        if vectors[ray.index()].replace(v).is_some() {
            return Err(err(format!("ray {id} listed twice")));
        }
        records += 1;
    }
    if records != NUM_RAYS {
        return Err(Error::RayFile {
            line: last_line,
            reason: format!("expected {NUM_RAYS} records, found {records}"),
        });
    }
    Ok(RayVectorFile { vectors: vectors.map(|v| v.expect("all 40 ids seen")) })
}

pub fn read_ray_vectors(path: impl AsRef<Path>) -> Result<RayVectorFile> {
    parse_ray_vectors(&std::fs::read_to_string(path)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub basis: BasisId,
    pub first: RayId,
    pub second: RayId,
    pub dot: i64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "basis {}: rays {} and {} have inner product {}",
            self.basis.get(),
            self.first.get(),
            self.second.get(),
            self.dot
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub pairs_checked: usize,
    pub violations: Vec<Violation>,
}

impl OrthogonalityReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn dot(a: &RayVector, b: &RayVector) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Checks the 28 ray pairs of each of the 25 bases for zero inner product.
pub fn validate_ray_vectors(table: &BasisTable, file: &RayVectorFile) -> OrthogonalityReport {
    let mut pairs_checked = 0;
    let mut violations = Vec::new();
    for basis in BasisId::all() {
        let rays: Vec<RayId> = table.rays(basis).iter().collect();
        for (i, &a) in rays.iter().enumerate() {
            for &b in &rays[i + 1..] {
                pairs_checked += 1;
                let d = dot(file.vector(a), file.vector(b));
                if d != 0 {
                    violations.push(Violation { basis, first: a, second: b, dot: d });
                }
            }
        }
    }
    OrthogonalityReport { pairs_checked, violations }
}
