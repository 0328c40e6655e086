//! JSON and DOT renderings of an orbit graph.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::automata::CanonicalDfa;
use crate::error::{Error, Result};
use crate::orbit::{describe_orbit_word, render_orbit_word, Mode, OrbitGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionTable {
    pub states: usize,
    pub start: usize,
    pub accepting: Vec<usize>,
    /// `transitions[q][c]` is the successor of state `q` on the `c`-th letter.
    pub transitions: Vec<Vec<usize>>,
}

impl From<&CanonicalDfa> for TransitionTable {
    fn from(dfa: &CanonicalDfa) -> Self {
        let k = dfa.alphabet().len();
        let n = dfa.state_count();
        TransitionTable {
            states: n,
            start: 0,
            accepting: (0..n).filter(|&q| dfa.is_accepting(q)).collect(),
            transitions: (0..n)
                .map(|q| (0..k).map(|c| dfa.next(q, c)).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeFlags {
    pub open: bool,
    pub closed: bool,
    pub clopen: bool,
    pub contains_epsilon: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocumentNode {
    pub id: usize,
    /// Shortest operator word, e.g. `+⊕-`; empty for the input language.
    pub role: String,
    pub description: String,
    /// `B`/`C` in positive mode, `E`/`F` in Kleene mode.
    pub family: String,
    pub flags: NodeFlags,
    pub table: TransitionTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocumentEdge {
    pub from: usize,
    pub op: String,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDocument {
    pub mode: Mode,
    pub input: String,
    pub alphabet: String,
    pub case: String,
    /// `{"B": .., "A": ..}` or `{"E": .., "D": ..}`.
    pub sizes: BTreeMap<String, usize>,
    pub nodes: Vec<DocumentNode>,
    pub edges: Vec<DocumentEdge>,
}

fn family_letters(mode: Mode) -> (&'static str, &'static str) {
    match mode {
        Mode::Positive => ("B", "C"),
        Mode::Kleene => ("E", "F"),
    }
}

impl OrbitDocument {
    pub fn new(input: &str, case: &str, graph: &OrbitGraph) -> Self {
        let mode = graph.mode;
        let (inner, outer) = family_letters(mode);
        let (family_name, orbit_name) = mode.family_names();
        let nodes = graph
            .nodes
            .iter()
            .enumerate()
            .map(|(id, node)| DocumentNode {
                id,
                role: render_orbit_word(&node.word, mode),
                description: describe_orbit_word(&node.word, mode),
                family: if node.in_family { inner } else { outer }.to_string(),
                flags: NodeFlags {
                    open: node.flags.open,
                    closed: node.flags.closed,
                    clopen: node.flags.clopen(),
                    contains_epsilon: node.flags.contains_epsilon,
                },
                table: TransitionTable::from(node.lang.canonical()),
            })
            .collect();
        let edges = graph
            .edges
            .iter()
            .map(|e| DocumentEdge {
                from: e.from,
                op: e.op.symbol(mode).to_string(),
                to: e.to,
            })
            .collect();
        OrbitDocument {
            mode,
            input: input.to_string(),
            alphabet: graph.root().alphabet().to_string(),
            case: case.to_string(),
            sizes: BTreeMap::from([
                (family_name.to_string(), graph.summary.family),
                (orbit_name.to_string(), graph.summary.total),
            ]),
            nodes,
            edges,
        }
    }

    /// Dense ids, existing edge endpoints, and sizes that match the node
    /// counts with the orbit exactly twice the family.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvariantViolation(msg));
        if let Some(node) = self.nodes.iter().enumerate().find(|(i, n)| n.id != *i) {
            return fail(format!("node id {} at position {}", node.1.id, node.0));
        }
        if let Some(e) = self
            .edges
            .iter()
            .find(|e| e.from >= self.nodes.len() || e.to >= self.nodes.len())
        {
            return fail(format!("edge {} -> {} leaves the graph", e.from, e.to));
        }
        let (family_name, orbit_name) = self.mode.family_names();
        let (inner, _) = family_letters(self.mode);
        let family = self.nodes.iter().filter(|n| n.family == inner).count();
        let expected = BTreeMap::from([
            (family_name.to_string(), family),
            (orbit_name.to_string(), self.nodes.len()),
        ]);
        if self.sizes != expected {
            return fail(format!(
                "sizes {:?} but nodes give {:?}",
                self.sizes, expected
            ));
        }
        if self.nodes.len() != 2 * family {
            return fail(format!(
                "{} nodes is not twice the family size {family}",
                self.nodes.len()
            ));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document is always serializable")
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_dot(&self) -> String {
        let (family_name, orbit_name) = self.mode.family_names();
        let mut out = String::new();
        writeln!(out, "digraph orbit {{").unwrap();
        writeln!(
            out,
            "  label=\"{} over {{{}}}, {} mode, case {}, |{}|={}, |{}|={}\";",
            escape(&self.input),
            escape(&self.alphabet),
            self.mode,
            self.case,
            family_name,
            self.sizes[family_name],
            orbit_name,
            self.sizes[orbit_name],
        )
        .unwrap();
        writeln!(out, "  node [shape=box];").unwrap();
        for node in &self.nodes {
            let mut tags = Vec::new();
            if node.flags.clopen {
                tags.push("clopen");
            } else if node.flags.open {
                tags.push("open");
            } else if node.flags.closed {
                tags.push("closed");
            }
            if node.flags.contains_epsilon {
                tags.push("ε");
            }
            writeln!(
                out,
                "  n{} [label=\"{}\\n{}{}\"];",
                node.id,
                escape(&node.description),
                node.family,
                tags.iter().map(|t| format!(" {t}")).collect::<String>(),
            )
            .unwrap();
        }
        for e in &self.edges {
            writeln!(
                out,
                "  n{} -> n{} [label=\"{}\"];",
                e.from,
                e.to,
                escape(&e.op)
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn escape(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}
