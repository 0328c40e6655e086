//! Orbits of a language under closure, interior and complement.
//!
//! In positive mode the closure is `+` and the interior `⊕`; the orbit under
//! `{+, -}` is A(L), the part reachable by `{+, ⊕}` alone is B(L), and the
//! complements of B(L) form C(L). Kleene mode uses `*` and `⊛` and produces
//! D(L), E(L) and F(L) in the same way.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lang::{Lang, LangOp};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Positive,
    Kleene,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Positive => "positive",
            Mode::Kleene => "kleene",
        }
    }

    pub fn closure(self) -> LangOp {
        match self {
            Mode::Positive => LangOp::Plus,
            Mode::Kleene => LangOp::Star,
        }
    }

    pub fn interior(self) -> LangOp {
        match self {
            Mode::Positive => LangOp::PositiveInterior,
            Mode::Kleene => LangOp::KleeneInterior,
        }
    }

    /// Largest possible orbit under closure and complement: 10 or 14.
    pub fn orbit_bound(self) -> usize {
        match self {
            Mode::Positive => 10,
            Mode::Kleene => 14,
        }
    }

    /// Largest possible family under closure and interior: 5 or 7.
    pub fn family_bound(self) -> usize {
        self.orbit_bound() / 2
    }

    /// Names of the (closure+interior, closure+complement) families.
    pub fn family_names(self) -> (&'static str, &'static str) {
        match self {
            Mode::Positive => ("B", "A"),
            Mode::Kleene => ("E", "D"),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "positive" => Ok(Mode::Positive),
            "kleene" => Ok(Mode::Kleene),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

/// Mode-relative operator. The derived order is the tie-break order used
/// for shortest operator words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitOp {
    Complement,
    Closure,
    Interior,
}

impl OrbitOp {
    pub const ALL: [OrbitOp; 3] = [OrbitOp::Complement, OrbitOp::Closure, OrbitOp::Interior];

    pub fn lang_op(self, mode: Mode) -> LangOp {
        match self {
            OrbitOp::Complement => LangOp::Complement,
            OrbitOp::Closure => mode.closure(),
            OrbitOp::Interior => mode.interior(),
        }
    }

    pub fn symbol(self, mode: Mode) -> char {
        self.lang_op(mode).symbol()
    }
}

pub fn render_orbit_word(word: &[OrbitOp], mode: Mode) -> String {
    word.iter().map(|op| op.symbol(mode)).collect()
}

/// `L` or `L^{word}`.
pub fn describe_orbit_word(word: &[OrbitOp], mode: Mode) -> String {
    if word.is_empty() {
        "L".to_string()
    } else {
        format!("L^{{{}}}", render_orbit_word(word, mode))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub open: bool,
    pub closed: bool,
    pub contains_epsilon: bool,
}

impl Flags {
    pub fn of(lang: &Lang) -> Result<Flags> {
        Ok(Flags {
            open: lang.is_open()?,
            closed: lang.is_closed()?,
            contains_epsilon: lang.contains_epsilon(),
        })
    }

    pub fn clopen(&self) -> bool {
        self.open && self.closed
    }
}

#[derive(Debug, Clone)]
pub struct OrbitNode {
    pub lang: Lang,
    /// Shortest operator word reaching this node, least in `OrbitOp` order.
    pub word: Vec<OrbitOp>,
    /// Reached by a word with an even number of complements: the node
    /// belongs to B(L) (or E(L)) rather than its complement family.
    pub in_family: bool,
    pub flags: Flags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitEdge {
    pub from: usize,
    pub op: OrbitOp,
    pub to: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitSummary {
    /// |B(L)| or |E(L)|.
    pub family: usize,
    /// |A(L)| or |D(L)|.
    pub total: usize,
}

#[derive(Debug, Clone)]
pub struct OrbitGraph {
    pub mode: Mode,
    /// Node 0 is the generating language.
    pub nodes: Vec<OrbitNode>,
    /// Sorted by source node, then operator.
    pub edges: Vec<OrbitEdge>,
    pub summary: OrbitSummary,
}

impl OrbitGraph {
    pub fn root(&self) -> &Lang {
        &self.nodes[0].lang
    }

    pub fn index_of(&self, lang: &Lang) -> Option<usize> {
        self.nodes.iter().position(|n| &n.lang == lang)
    }

    pub fn family(&self) -> impl Iterator<Item = &OrbitNode> {
        self.nodes.iter().filter(|n| n.in_family)
    }

    pub fn complement_family(&self) -> impl Iterator<Item = &OrbitNode> {
        self.nodes.iter().filter(|n| !n.in_family)
    }

    pub fn target(&self, from: usize, op: OrbitOp) -> Option<usize> {
        self.edges
            .binary_search_by(|e| (e.from, e.op).cmp(&(from, op)))
            .ok()
            .map(|i| self.edges[i].to)
    }

    /// Every operator applied to every node lands back in the graph.
    pub fn is_closed_under_ops(&self) -> Result<bool> {
        let langs: HashSet<&Lang> = self.nodes.iter().map(|n| &n.lang).collect();
        for node in &self.nodes {
            for op in OrbitOp::ALL {
                if !langs.contains(&node.lang.apply(op.lang_op(self.mode))?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Breadth-first orbit under complement, closure and interior. Since the
/// interior is complement-closure-complement, this is exactly the orbit
/// under closure and complement.
pub fn generate_orbit(lang: &Lang, mode: Mode) -> Result<OrbitGraph> {
    let bound = mode.orbit_bound();
    let mut index: HashMap<Lang, usize> = HashMap::new();
    let mut nodes: Vec<OrbitNode> = Vec::new();
    let mut edges = Vec::new();
    index.insert(lang.clone(), 0);
    nodes.push(OrbitNode {
        lang: lang.clone(),
        word: Vec::new(),
        in_family: true,
        flags: Flags::of(lang)?,
    });
    let mut cursor = 0;
    while cursor < nodes.len() {
        let from = cursor;
        cursor += 1;
        for op in OrbitOp::ALL {
            let image = nodes[from].lang.apply(op.lang_op(mode))?;
            let parity = nodes[from].in_family ^ (op == OrbitOp::Complement);
            let to = match index.get(&image) {
                Some(&to) => {
                    if nodes[to].in_family != parity {
                        return Err(Error::InvariantViolation(format!(
                            "{} reached with both complement parities",
                            describe_orbit_word(&nodes[to].word, mode)
                        )));
                    }
                    to
                }
                None => {
                    if nodes.len() == bound {
                        return Err(Error::BoundViolation {
                            mode: mode.name(),
                            found: bound + 1,
                            bound,
                        });
                    }
                    let mut word = nodes[from].word.clone();
                    word.push(op);
                    let to = nodes.len();
                    index.insert(image.clone(), to);
                    nodes.push(OrbitNode {
                        flags: Flags::of(&image)?,
                        lang: image,
                        word,
                        in_family: parity,
                    });
                    to
                }
            };
            edges.push(OrbitEdge { from, op, to });
        }
    }
    let family = nodes.iter().filter(|n| n.in_family).count();
    Ok(OrbitGraph {
        mode,
        summary: OrbitSummary {
            family,
            total: nodes.len(),
        },
        nodes,
        edges,
    })
}

/// A(L): orbit under positive closure and complement.
pub fn generate_a(lang: &Lang) -> Result<OrbitGraph> {
    generate_orbit(lang, Mode::Positive)
}

/// D(L): orbit under Kleene closure and complement.
pub fn generate_d(lang: &Lang) -> Result<OrbitGraph> {
    generate_orbit(lang, Mode::Kleene)
}

/// Fixpoint of the mode's closure and interior starting at `lang`, in
/// breadth-first discovery order.
pub fn generate_family(lang: &Lang, mode: Mode) -> Result<Vec<Lang>> {
    let bound = mode.family_bound();
    let mut seen: HashSet<Lang> = HashSet::from([lang.clone()]);
    let mut found = vec![lang.clone()];
    let mut cursor = 0;
    while cursor < found.len() {
        let current = found[cursor].clone();
        cursor += 1;
        for op in [mode.closure(), mode.interior()] {
            let image = current.apply(op)?;
            if seen.insert(image.clone()) {
                if found.len() == bound {
                    return Err(Error::BoundViolation {
                        mode: mode.name(),
                        found: bound + 1,
                        bound,
                    });
                }
                found.push(image);
            }
        }
    }
    Ok(found)
}

/// B(L).
pub fn generate_b(lang: &Lang) -> Result<Vec<Lang>> {
    generate_family(lang, Mode::Positive)
}

/// E(L).
pub fn generate_e(lang: &Lang) -> Result<Vec<Lang>> {
    generate_family(lang, Mode::Kleene)
}

fn apply_repeated(lang: &Lang, pattern: &[LangOp]) -> Result<Lang> {
    lang.apply_word(pattern)
}

/// `L^{c-c-c-c} = L^{c-c}` for the mode's closure `c`.
pub fn verify_kuratowski_identity(lang: &Lang, mode: Mode) -> Result<bool> {
    let c = mode.closure();
    let n = LangOp::Complement;
    let long = apply_repeated(lang, &[c, n, c, n, c, n, c])?;
    let short = apply_repeated(lang, &[c, n, c])?;
    Ok(long == short)
}

/// `L^{c-c-c} = L^{c-c-}`. Holds for positive closure; the Kleene closure
/// fails it, e.g. on `L = {a}`.
pub fn verify_compact_identity(lang: &Lang, mode: Mode) -> Result<bool> {
    let c = mode.closure();
    let n = LangOp::Complement;
    let long = apply_repeated(lang, &[c, n, c, n, c])?;
    let short = apply_repeated(lang, &[c, n, c, n])?;
    Ok(long == short)
}

/// Checks that `M ↦ φ(M)`, the one of `M ∪ {ε}`, `M \ {ε}` lying in B(L),
/// sends `M*` to `φ(M)+` and `M⊛` to `φ(M)⊕` for every `M` in E(L).
pub fn verify_phi(lang: &Lang) -> Result<bool> {
    let b: HashSet<Lang> = generate_b(lang)?.into_iter().collect();
    let phi = |m: &Lang| -> Result<Lang> {
        [m.add_epsilon(), m.remove_epsilon()]
            .into_iter()
            .find(|candidate| b.contains(candidate))
            .ok_or_else(|| Error::PhiUndefined(format!("{} states", m.state_count())))
    };
    for m in generate_e(lang)? {
        let image = phi(&m)?;
        if phi(&m.star_closure()?)? != image.plus_closure()? {
            return Ok(false);
        }
        if phi(&m.kleene_interior()?)? != image.positive_interior()? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// E(L) rebuilt from B(L) for a language that is neither open nor closed:
/// `{L}`, plus `M ∪ {ε}` for closed `M ∈ B(L)`, plus `M \ {ε}` for open
/// `M ∈ B(L)`.
pub fn kleene_family_from_positive(lang: &Lang) -> Result<HashSet<Lang>> {
    let flags = Flags::of(lang)?;
    if flags.open || flags.closed {
        return Err(Error::InvariantViolation(
            "reconstruction needs a language that is neither open nor closed".into(),
        ));
    }
    let mut out = HashSet::from([lang.clone()]);
    for m in generate_b(lang)? {
        let f = Flags::of(&m)?;
        if f.closed {
            out.insert(m.add_epsilon());
        }
        if f.open {
            out.insert(m.remove_epsilon());
        }
    }
    Ok(out)
}
