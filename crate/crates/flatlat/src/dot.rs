//! Graphviz DOT output of the cover relation (Hasse diagram), drawn bottom
//! to top. The output is byte-stable: node lines in element index order,
//! then edge lines in cover order.

use crate::order::semilattice::FiniteJoinSemilattice;

pub fn emit_dot(s: &FiniteJoinSemilattice) -> String {
    let esc = |name: &str| name.replace('\\', "\\\\").replace('"', "\\\"");
    let mut out = String::from("digraph {\n  rankdir=BT;\n");
    for name in s.names() {
        out.push_str("  \"");
        out.push_str(&esc(name));
        out.push_str("\";\n");
    }
    for &(lo, hi) in s.covers() {
        out.push_str("  \"");
        out.push_str(&esc(s.name(lo)));
        out.push_str("\" -> \"");
        out.push_str(&esc(s.name(hi)));
        out.push_str("\";\n");
    }
    out.push_str("}\n");
    out
}
