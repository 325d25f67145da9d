use std::collections::BTreeSet;
use std::fmt::Write;

use crate::ids::{BasisId, RayId};
use crate::tables::BasisTable;

/// Ray pairs that share at least one basis, `(a, b)` with `a < b`.
pub fn orthogonality_edges(table: &BasisTable) -> BTreeSet<(RayId, RayId)> {
    let mut edges = BTreeSet::new();
    for b in BasisId::all() {
        let rays: Vec<RayId> = table.rays(b).iter().collect();
        for (i, &a) in rays.iter().enumerate() {
            for &c in &rays[i + 1..] {
                edges.insert((a, c));
            }
        }
    }
    edges
}

/// Graphviz rendering of the 40-node orthogonality graph.
pub fn orthogonality_dot(table: &BasisTable) -> String {
    let mut out = String::from("graph orthogonality {\n");
    for r in RayId::all() {
        let _ = writeln!(out, "  r{};", r.get());
    }
    for (a, b) in orthogonality_edges(table) {
        let _ = writeln!(out, "  r{} -- r{};", a.get(), b.get());
    }
    out.push_str("}\n");
    out
}
