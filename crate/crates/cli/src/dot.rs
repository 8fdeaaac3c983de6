use std::fmt::Write;

use combdyn::{over_rotation_number, pattern_entropy, ForcingPoset};

/// Hasse diagram of the forcing order: an edge `a -> b` for each cover,
/// `a` forcing `b`.
pub fn poset_to_dot(poset: &ForcingPoset) -> String {
    let mut out = String::from("digraph forcing {\n    node [shape=box];\n");
    for (i, p) in poset.patterns.iter().enumerate() {
        let rho = over_rotation_number(p).map(|r| r.to_string()).unwrap_or_else(|_| "-".into());
        let _ = writeln!(
            out,
            "    n{i} [label=\"[{}]\\nperiod {}\\nentropy {:.4}\\nover-rotation {}\"];",
            p,
            p.period(),
            pattern_entropy(p),
            rho
        );
    }
    for (a, b) in &poset.covers {
        let _ = writeln!(out, "    n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}
