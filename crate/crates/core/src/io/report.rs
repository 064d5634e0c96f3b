use std::fmt::Write;

use crate::engine::EhrhartResult;

/// Human-readable report. Residues run `0..p` and terms by descending
/// degree, so the output is stable enough for golden tests.
pub fn render_pretty(r: &EhrhartResult) -> String {
    let mut out = String::new();
    writeln!(out, "dimension {} in R^{}", r.dim, r.ambient_dim).unwrap();
    let idx: Vec<String> = r
        .i_indices
        .iter()
        .enumerate()
        .map(|(i, s)| format!("s_{i} = {s}"))
        .collect();
    writeln!(out, "i-indices: {}", idx.join(", ")).unwrap();
    if let Some(v) = &r.volume {
        writeln!(out, "volume: {v}").unwrap();
    }
    writeln!(out).unwrap();
    writeln!(out, "L(t):\n{}", r.qp).unwrap();
    writeln!(out).unwrap();
    writeln!(out, "interior L°(t):\n{}", r.interior_qp).unwrap();
    out
}
