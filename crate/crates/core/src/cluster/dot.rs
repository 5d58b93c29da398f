use std::fmt::Write;

use super::matrix::ExchangeMatrix;

/// Graphviz rendering; `b_ij > 0` becomes `b_ij` parallel arrows `i -> j`.
pub fn to_dot(name: &str, b: &ExchangeMatrix, labels: &[String]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph \"{}\" {{", name.replace('"', "'"));
    for l in labels {
        let _ = writeln!(s, "  \"{l}\";");
    }
    for i in 0..b.n() {
        for j in 0..b.n() {
            for _ in 0..b.get(i, j).max(0) {
                let _ = writeln!(s, "  \"{}\" -> \"{}\";", labels[i], labels[j]);
            }
        }
    }
    s.push_str("}\n");
    s
}
