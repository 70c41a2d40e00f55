//! Text, JSON, and LaTeX rendering of computed results.

use serde_json::json;
use socle_core::category::{GradedMultiset, InjectiveLabel, SimpleLabel};
use socle_core::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Latex,
}

fn partition_latex(p: &Partition) -> String {
    if p.is_empty() {
        "\\emptyset".to_string()
    } else {
        let parts: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

fn label_latex(l: &SimpleLabel) -> String {
    let mut slots: Vec<String> = l.lambdas.iter().map(partition_latex).collect();
    slots.push(partition_latex(&l.mu));
    slots.push(partition_latex(&l.nu));
    format!("V_{{{}}}", slots.join(","))
}

pub fn label_json(l: &SimpleLabel) -> serde_json::Value {
    json!({
        "lambdas": l.lambdas.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
        "mu": l.mu.parts().to_vec(),
        "nu": l.nu.parts().to_vec(),
    })
}

/// Layers ascending in q, one line per layer.
pub fn socle_text(label: &InjectiveLabel, layers: &GradedMultiset) -> String {
    let mut out = format!("socle filtration of {label}\n");
    for (q, layer) in layers.iter() {
        let mut pieces = Vec::new();
        for (s, &m) in layer {
            if m == 1 {
                pieces.push(format!("{s}"));
            } else {
                pieces.push(format!("{m}*{s}"));
            }
        }
        out.push_str(&format!("usoc^{q}: {}\n", pieces.join(" + ")));
    }
    out
}

pub fn socle_json(t: usize, label: &InjectiveLabel, layers: &GradedMultiset) -> serde_json::Value {
    json!({
        "t": t,
        "label": label_json(label.socle()),
        "layers": layers.iter().map(|(q, layer)| {
            json!({
                "q": q,
                "constituents": layer.iter().map(|(s, m)| {
                    json!({"label": label_json(s), "mult": m})
                }).collect::<Vec<_>>(),
            })
        }).collect::<Vec<_>>(),
    })
}

/// LaTeX array with usoc^q displayed at level q from the bottom, layers
/// separated by horizontal rules.
pub fn socle_latex(layers: &GradedMultiset) -> String {
    let mut rows: Vec<String> = Vec::new();
    for (_, layer) in layers.iter() {
        let mut pieces = Vec::new();
        for (s, &m) in layer {
            if m == 1 {
                pieces.push(label_latex(s));
            } else {
                pieces.push(format!("{m}\\,{}", label_latex(s)));
            }
        }
        rows.push(pieces.join(" \\oplus "));
    }
    rows.reverse(); // top layer first, socle at the bottom
    let mut out = String::from("\\begin{array}{c}\n");
    out.push_str(&rows.join("\n\\\\\\hline\n"));
    out.push_str("\n\\end{array}\n");
    out
}
