use std::fmt::Write;

use super::ValuedQuiver;

/// Graphviz description; dotted nu arrows are left out when nu is the
/// identity unless `show_nu` is set.
pub fn emit_dot(q: &ValuedQuiver, show_nu: bool) -> String {
    let mut s = String::from("digraph mckay {\n  node [shape=circle];\n");
    for (i, v) in q.vertices.iter().enumerate() {
        let mut label = v.label.clone();
        if v.is_omega && !v.is_r {
            label.push_str(" = omega");
        }
        let shape = if v.is_r { ", shape=doublecircle" } else { "" };
        let _ = writeln!(s, "  v{i} [label=\"{label}\"{shape}];");
    }
    for a in &q.arrows {
        if (a.d, a.d_prime) == (1, 1) {
            let _ = writeln!(s, "  v{} -> v{};", a.src, a.dst);
        } else {
            let _ = writeln!(s, "  v{} -> v{} [label=\"({},{})\"];", a.src, a.dst, a.d, a.d_prime);
        }
    }
    if show_nu || !q.nu_is_identity() {
        for &i in &q.dotted {
            let _ = writeln!(s, "  v{} -> v{} [style=dashed];", i, q.nu[i]);
        }
    }
    s.push_str("}\n");
    s
}
