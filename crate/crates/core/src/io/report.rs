//! Text and JSON renderings for the CLI.

use std::fmt::Write;

use serde::Serialize;

use crate::ids::{BasisId, NUM_PURE};
use crate::tables::{BasisKind, BasisTable, GammaTable};
use crate::verifier::ParityCertificate;

#[derive(Serialize)]
struct BasisRow {
    id: u8,
    kind: BasisKind,
    rays: Vec<u8>,
}

#[derive(Serialize)]
struct GammaRow {
    pb: u8,
    slot: u8,
    rays: Vec<u8>,
}

#[derive(Serialize)]
struct Tables {
    bases: Vec<BasisRow>,
    gammas: Vec<GammaRow>,
}

pub fn tables_json(table: &BasisTable, gammas: &GammaTable) -> String {
    let tables = Tables {
        bases: BasisId::all()
            .map(|b| BasisRow { id: b.get(), kind: table.kind(b), rays: table.rays(b).to_vec() })
            .collect(),
        gammas: gammas
            .iter()
            .map(|g| GammaRow { pb: g.index.pb(), slot: g.index.slot(), rays: g.rays.to_vec() })
            .collect(),
    };
    serde_json::to_string_pretty(&tables).expect("tables serialize")
}

fn join(v: &[u8], width: usize) -> String {
    v.iter().map(|x| format!("{x:>width$}")).collect::<Vec<_>>().join(" ")
}

pub fn tables_text(table: &BasisTable, gammas: &GammaTable) -> String {
    let mut out = String::from("Bases\n");
    for b in BasisId::all() {
        let kind = if b.is_pure() { "PB" } else { "HB" };
        let _ = writeln!(out, "{:>3}  {kind}  {}", b.get(), join(&table.rays(b).to_vec(), 2));
    }
    out.push_str("\nGamma sets\n  j");
    for pb in 1..=NUM_PURE {
        let _ = write!(out, "  {:<11}", format!("PB{pb}"));
    }
    out = out.trim_end().to_string();
    out.push('\n');
    for slot in 0..8 {
        let _ = write!(out, "{:>3}", slot + 1);
        for pb in 1..=NUM_PURE as u8 {
            let g = gammas.in_pure(pb)[slot];
            let _ = write!(out, "  {}", join(&g.rays.to_vec(), 2));
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct CertificateJson {
    bases: Vec<u8>,
    basis_count: usize,
    valid: bool,
    signature: Option<String>,
    multiplicities: Vec<u8>,
}

pub fn certificate_json(c: &ParityCertificate) -> String {
    let j = CertificateJson {
        bases: c.bases.to_vec(),
        basis_count: c.bases.len(),
        valid: c.valid,
        signature: c.signature.map(|s| s.to_string()),
        multiplicities: c.multiplicities.as_array().to_vec(),
    };
    serde_json::to_string(&j).expect("certificate serializes")
}

pub fn certificate_text(c: &ParityCertificate) -> String {
    let odd: Vec<u8> = c.multiplicities.iter().filter(|&(_, m)| m % 2 == 1).map(|(r, _)| r.get()).collect();
    let mut out = String::new();
    let _ = writeln!(out, "bases: {}", join(&c.bases.to_vec(), 1));
    let parity = if c.bases.len() % 2 == 1 { "odd" } else { "even" };
    let _ = writeln!(out, "basis count: {} ({parity})", c.bases.len());
    if odd.is_empty() {
        out.push_str("rays with odd multiplicity: none\n");
    } else {
        let _ = writeln!(out, "rays with odd multiplicity: {}", join(&odd, 1));
    }
    let _ = writeln!(out, "valid: {}", c.valid);
    if let Some(s) = c.signature {
        let _ = writeln!(out, "signature: {s}");
    }
    out
}
