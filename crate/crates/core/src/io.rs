//! Canonical JSON and Graphviz output.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::coding::CodingTree;
use crate::error::{Error, Result};
use crate::seqtree::{BinSeq, LevelTree};

/// Pretty JSON with keys sorted at every depth and a trailing newline.
/// Floating-point numbers are rejected so output stays byte-stable.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).map_err(|e| Error::Parse(e.to_string()))?;
    if has_float(&v) {
        return Err(Error::InvalidParameter("canonical JSON carries no floats".into()));
    }
    // serde_json's default map is ordered by key.
    let mut out = serde_json::to_string_pretty(&v).map_err(|e| Error::Parse(e.to_string()))?;
    out.push('\n');
    Ok(out)
}

fn has_float(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_f64(),
        Value::Array(a) => a.iter().any(has_float),
        Value::Object(m) => m.values().any(has_float),
        _ => false,
    }
}

fn node_id(t: &BinSeq) -> String {
    format!("\"n{t}\"")
}

fn node_label(t: &BinSeq) -> String {
    if t.is_empty() {
        "ε".to_string()
    } else {
        t.to_string()
    }
}

/// Each node of `tree` drawn below its longest proper initial segment in
/// the tree.
fn write_edges(out: &mut String, tree: &LevelTree) {
    for n in 1..tree.height() {
        let parent_len = tree.levels()[n - 1];
        for t in tree.level(n) {
            let _ = writeln!(out, "  {} -> {};", node_id(&t.prefix(parent_len)), node_id(t));
        }
    }
}

pub fn level_tree_to_dot(tree: &LevelTree) -> String {
    let mut out = String::from("digraph tree {\n  node [shape=circle];\n");
    for t in tree.nodes() {
        let _ = writeln!(out, "  {} [label=\"{}\"];", node_id(t), node_label(t));
    }
    write_edges(&mut out, tree);
    out.push_str("}\n");
    out
}

/// Coding nodes are filled black, pseudo-coding nodes gray.
pub fn coding_tree_to_dot(tree: &CodingTree) -> String {
    let mut out = String::from("digraph coding_tree {\n  node [shape=circle];\n");
    for t in tree.tree().nodes() {
        let style = match tree.coding_index_of(t) {
            Some(i) if i < 0 => format!(", style=filled, fillcolor=gray, xlabel=\"c{i}\""),
            Some(i) => format!(", style=filled, fillcolor=black, fontcolor=white, xlabel=\"c{i}\""),
            None => String::new(),
        };
        let _ = writeln!(out, "  {} [label=\"{}\"{style}];", node_id(t), node_label(t));
    }
    write_edges(&mut out, tree.tree());
    out.push_str("}\n");
    out
}
