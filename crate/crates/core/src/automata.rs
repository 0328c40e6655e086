//! Finite automata: Thompson compilation, subset construction, Hopcroft
//! minimization and canonical numbering.
//!
//! Every language in the crate is identified by its [`CanonicalDfa`]: a
//! minimal complete DFA whose states are numbered in breadth-first order
//! from the start state, letters explored in alphabet order. Two languages
//! are equal iff their canonical automata are equal as values.

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::regex::{Alphabet, Regex};

pub type StateId = usize;

pub const DEFAULT_STATE_CAP: usize = 1_000_000;

/// Environment variable overriding [`DEFAULT_STATE_CAP`].
pub const STATE_CAP_ENV: &str = "KLANG_STATE_CAP";

/// The subset-construction cap, read once from `KLANG_STATE_CAP`.
pub fn state_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(STATE_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_STATE_CAP)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Epsilon,
    Letter(usize),
}

/// Nondeterministic automaton with ε-moves.
#[derive(Debug, Clone)]
pub struct Nfa {
    alphabet: Alphabet,
    edges: Vec<Vec<(Label, StateId)>>,
    start: StateId,
    accepting: Vec<bool>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet) -> Self {
        Nfa {
            alphabet,
            edges: Vec::new(),
            start: 0,
            accepting: Vec::new(),
        }
    }

    pub fn add_state(&mut self, accepting: bool) -> StateId {
        self.edges.push(Vec::new());
        self.accepting.push(accepting);
        self.edges.len() - 1
    }

    pub fn add_edge(&mut self, from: StateId, label: Label, to: StateId) {
        debug_assert!(from < self.edges.len() && to < self.edges.len());
        if let Label::Letter(i) = label {
            debug_assert!(i < self.alphabet.len());
        }
        self.edges[from].push((label, to));
    }

    pub fn set_start(&mut self, start: StateId) {
        self.start = start;
    }

    pub fn set_accepting(&mut self, state: StateId, accepting: bool) {
        self.accepting[state] = accepting;
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.edges.len()
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn is_accepting(&self, state: StateId) -> bool {
        self.accepting[state]
    }

    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Label, StateId)> + '_ {
        self.edges
            .iter()
            .enumerate()
            .flat_map(|(from, out)| out.iter().map(move |&(l, to)| (from, l, to)))
    }

    /// Copies the states and transitions of `dfa` into this automaton and
    /// returns the id offset of the copy. Accepting flags are copied too.
    pub fn embed_dfa(&mut self, dfa: &Dfa) -> StateId {
        let offset = self.state_count();
        for q in 0..dfa.state_count() {
            self.add_state(dfa.is_accepting(q));
        }
        for q in 0..dfa.state_count() {
            for c in 0..dfa.alphabet().len() {
                self.add_edge(offset + q, Label::Letter(c), offset + dfa.next(q, c));
            }
        }
        offset
    }

    pub fn from_dfa(dfa: &Dfa) -> Self {
        let mut nfa = Nfa::new(dfa.alphabet().clone());
        let offset = nfa.embed_dfa(dfa);
        nfa.set_start(offset + dfa.start());
        nfa
    }

    fn epsilon_closure(&self, set: &mut Vec<StateId>, seen: &mut [bool]) {
        let mut stack: Vec<StateId> = set.clone();
        while let Some(q) = stack.pop() {
            for &(label, to) in &self.edges[q] {
                if label == Label::Epsilon && !seen[to] {
                    seen[to] = true;
                    set.push(to);
                    stack.push(to);
                }
            }
        }
    }
}

/// Thompson construction. The result has a single accepting state.
pub fn compile(ast: &Regex, alphabet: &Alphabet) -> Result<Nfa> {
    ast.check_alphabet(alphabet)?;
    let mut nfa = Nfa::new(alphabet.clone());
    let (start, accept) = fragment(ast, &mut nfa);
    nfa.set_start(start);
    nfa.set_accepting(accept, true);
    Ok(nfa)
}

fn fragment(ast: &Regex, nfa: &mut Nfa) -> (StateId, StateId) {
    let s = nfa.add_state(false);
    let f = nfa.add_state(false);
    match ast {
        Regex::EmptySet => {}
        Regex::Epsilon => nfa.add_edge(s, Label::Epsilon, f),
        Regex::Symbol(c) => {
            let idx = nfa.alphabet.index_of(*c).expect("checked by compile");
            nfa.add_edge(s, Label::Letter(idx), f);
        }
        Regex::Union(l, r) => {
            let (ls, lf) = fragment(l, nfa);
            let (rs, rf) = fragment(r, nfa);
            nfa.add_edge(s, Label::Epsilon, ls);
            nfa.add_edge(s, Label::Epsilon, rs);
            nfa.add_edge(lf, Label::Epsilon, f);
            nfa.add_edge(rf, Label::Epsilon, f);
        }
        Regex::Concat(l, r) => {
            let (ls, lf) = fragment(l, nfa);
            let (rs, rf) = fragment(r, nfa);
            nfa.add_edge(s, Label::Epsilon, ls);
            nfa.add_edge(lf, Label::Epsilon, rs);
            nfa.add_edge(rf, Label::Epsilon, f);
        }
        Regex::Star(x) => {
            let (xs, xf) = fragment(x, nfa);
            nfa.add_edge(s, Label::Epsilon, xs);
            nfa.add_edge(s, Label::Epsilon, f);
            nfa.add_edge(xf, Label::Epsilon, xs);
            nfa.add_edge(xf, Label::Epsilon, f);
        }
        Regex::Plus(x) => {
            // no s -> f bypass: ε is accepted only through x
            let (xs, xf) = fragment(x, nfa);
            nfa.add_edge(s, Label::Epsilon, xs);
            nfa.add_edge(xf, Label::Epsilon, xs);
            nfa.add_edge(xf, Label::Epsilon, f);
        }
    }
    (s, f)
}

/// Complete deterministic automaton.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dfa {
    alphabet: Alphabet,
    /// Row-major: `next[q * |Σ| + c]`.
    next: Vec<StateId>,
    start: StateId,
    accepting: Vec<bool>,
}

impl Dfa {
    /// Validates totality and bounds of the transition table.
    pub fn new(
        alphabet: Alphabet,
        next: Vec<StateId>,
        start: StateId,
        accepting: Vec<bool>,
    ) -> Result<Self> {
        let n = accepting.len();
        if n == 0 || start >= n {
            return Err(Error::InvariantViolation(
                "DFA needs at least one state and a valid start".into(),
            ));
        }
        if next.len() != n * alphabet.len() || next.iter().any(|&t| t >= n) {
            return Err(Error::InvariantViolation(
                "DFA transition table is not total".into(),
            ));
        }
        Ok(Dfa {
            alphabet,
            next,
            start,
            accepting,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn next(&self, state: StateId, letter: usize) -> StateId {
        self.next[state * self.alphabet.len() + letter]
    }

    pub fn is_accepting(&self, state: StateId) -> bool {
        self.accepting[state]
    }

    pub fn accepting(&self) -> &[bool] {
        &self.accepting
    }

    pub fn run(&self, word: &[usize]) -> StateId {
        word.iter().fold(self.start, |q, &c| self.next(q, c))
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        self.accepting[self.run(word)]
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        Ok(self.accepts_indices(&self.alphabet.encode(word)?))
    }

    /// Same automaton with every accepting flag flipped.
    pub fn flip(&self) -> Dfa {
        Dfa {
            accepting: self.accepting.iter().map(|a| !a).collect(),
            ..self.clone()
        }
    }

    /// Same automaton with a fresh start state whose acceptance is `accept_empty`.
    /// Toggles exactly the empty word.
    pub fn with_start_acceptance(&self, accept_empty: bool) -> Dfa {
        let k = self.alphabet.len();
        let fresh = self.state_count();
        let mut next = self.next.clone();
        next.extend_from_slice(&self.next[self.start * k..(self.start + 1) * k]);
        let mut accepting = self.accepting.clone();
        accepting.push(accept_empty);
        Dfa {
            alphabet: self.alphabet.clone(),
            next,
            start: fresh,
            accepting,
        }
    }

    /// Reachable product automaton; `combine` decides acceptance of pairs.
    pub fn product(&self, other: &Dfa, combine: impl Fn(bool, bool) -> bool) -> Result<Dfa> {
        check_same_alphabet(&self.alphabet, &other.alphabet)?;
        let k = self.alphabet.len();
        let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let mut queue = VecDeque::new();
        let mut next = Vec::new();
        let mut accepting = Vec::new();
        let root = (self.start, other.start);
        index.insert(root, 0);
        queue.push_back(root);
        while let Some((p, q)) = queue.pop_front() {
            accepting.push(combine(self.accepting[p], other.accepting[q]));
            for c in 0..k {
                let pair = (self.next(p, c), other.next(q, c));
                let id = match index.get(&pair) {
                    Some(&id) => id,
                    None => {
                        let id = index.len();
                        index.insert(pair, id);
                        queue.push_back(pair);
                        id
                    }
                };
                next.push(id);
            }
        }
        Ok(Dfa {
            alphabet: self.alphabet.clone(),
            next,
            start: 0,
            accepting,
        })
    }

    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        let mut stack = vec![self.start];
        seen[self.start] = true;
        while let Some(q) = stack.pop() {
            for c in 0..self.alphabet.len() {
                let t = self.next(q, c);
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// States from which some accepting state is reachable.
    pub fn live_states(&self) -> Vec<bool> {
        let k = self.alphabet.len();
        let n = self.state_count();
        let mut preds = vec![Vec::new(); n];
        for q in 0..n {
            for c in 0..k {
                preds[self.next(q, c)].push(q);
            }
        }
        let mut live = self.accepting.clone();
        let mut stack: Vec<StateId> = (0..n).filter(|&q| live[q]).collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        live
    }
}

pub(crate) fn check_same_alphabet(a: &Alphabet, b: &Alphabet) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch {
            left: a.to_string(),
            right: b.to_string(),
        })
    }
}

/// Subset construction with the configured [`state_cap`].
pub fn determinize(nfa: &Nfa) -> Result<Dfa> {
    determinize_with_cap(nfa, state_cap())
}

pub fn determinize_with_cap(nfa: &Nfa, cap: usize) -> Result<Dfa> {
    let k = nfa.alphabet.len();
    let n = nfa.state_count();
    let mut seen = vec![false; n];

    let closure_of = |mut set: Vec<StateId>, seen: &mut Vec<bool>| -> Vec<StateId> {
        seen.iter_mut().for_each(|s| *s = false);
        set.retain(|&q| !std::mem::replace(&mut seen[q], true));
        nfa.epsilon_closure(&mut set, seen);
        set.sort_unstable();
        set
    };

    let start = closure_of(vec![nfa.start], &mut seen);
    let mut index: HashMap<Vec<StateId>, StateId> = HashMap::new();
    let mut subsets: Vec<Vec<StateId>> = Vec::new();
    index.insert(start.clone(), 0);
    subsets.push(start);
    let mut next = Vec::new();
    let mut accepting = Vec::new();
    let mut cursor = 0;
    while cursor < subsets.len() {
        let current = subsets[cursor].clone();
        cursor += 1;
        accepting.push(current.iter().any(|&q| nfa.accepting[q]));
        for c in 0..k {
            let step: Vec<StateId> = current
                .iter()
                .flat_map(|&q| nfa.edges[q].iter())
                .filter(|(label, _)| *label == Label::Letter(c))
                .map(|&(_, to)| to)
                .collect();
            let target = closure_of(step, &mut seen);
            let id = match index.get(&target) {
                Some(&id) => id,
                None => {
                    if subsets.len() >= cap {
                        return Err(Error::StateBlowup { cap });
                    }
                    let id = subsets.len();
                    index.insert(target.clone(), id);
                    subsets.push(target);
                    id
                }
            };
            next.push(id);
        }
    }
    Ok(Dfa {
        alphabet: nfa.alphabet.clone(),
        next,
        start: 0,
        accepting,
    })
}

/// Minimal complete DFA with breadth-first canonical numbering; start is state 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalDfa(Dfa);

impl CanonicalDfa {
    pub fn as_dfa(&self) -> &Dfa {
        &self.0
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.0.alphabet()
    }

    pub fn state_count(&self) -> usize {
        self.0.state_count()
    }

    pub fn next(&self, state: StateId, letter: usize) -> StateId {
        self.0.next(state, letter)
    }

    pub fn is_accepting(&self, state: StateId) -> bool {
        self.0.is_accepting(state)
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        self.0.accepts(word)
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        self.0.accepts_indices(word)
    }

    /// In a minimal automaton every state is reachable, so emptiness is
    /// the absence of accepting states.
    pub fn is_empty(&self) -> bool {
        !self.0.accepting.iter().any(|&a| a)
    }

    pub fn contains_epsilon(&self) -> bool {
        self.0.accepting[0]
    }

    /// Complement of a canonical automaton stays canonical: flipping
    /// acceptance preserves both minimality and the BFS numbering.
    pub fn complement(&self) -> CanonicalDfa {
        CanonicalDfa(self.0.flip())
    }
}

pub fn minimize(dfa: &Dfa) -> CanonicalDfa {
    let k = dfa.alphabet.len();
    let reachable = dfa.reachable();
    let states: Vec<StateId> = (0..dfa.state_count()).filter(|&q| reachable[q]).collect();

    let block_of = hopcroft(dfa, &states);

    // Breadth-first renumbering of blocks from the start block.
    let block_count = block_of
        .iter()
        .filter_map(|b| *b)
        .max()
        .map_or(0, |m| m + 1);
    let mut representative = vec![usize::MAX; block_count];
    for &q in &states {
        let b = block_of[q].expect("reachable");
        if representative[b] == usize::MAX {
            representative[b] = q;
        }
    }
    let mut canon = vec![usize::MAX; block_count];
    let mut order = Vec::with_capacity(block_count);
    let start_block = block_of[dfa.start].expect("start reachable");
    canon[start_block] = 0;
    order.push(start_block);
    let mut cursor = 0;
    while cursor < order.len() {
        let b = order[cursor];
        cursor += 1;
        let q = representative[b];
        for c in 0..k {
            let t = block_of[dfa.next(q, c)].expect("successor of reachable state");
            if canon[t] == usize::MAX {
                canon[t] = order.len();
                order.push(t);
            }
        }
    }
    let mut next = Vec::with_capacity(order.len() * k);
    let mut accepting = Vec::with_capacity(order.len());
    for &b in &order {
        let q = representative[b];
        accepting.push(dfa.accepting[q]);
        for c in 0..k {
            next.push(canon[block_of[dfa.next(q, c)].unwrap()]);
        }
    }
    CanonicalDfa(Dfa {
        alphabet: dfa.alphabet.clone(),
        next,
        start: 0,
        accepting,
    })
}

/// Hopcroft partition refinement restricted to `states`. Returns the block
/// index of every listed state (`None` for states outside the list).
fn hopcroft(dfa: &Dfa, states: &[StateId]) -> Vec<Option<usize>> {
    let k = dfa.alphabet.len();
    let n = dfa.state_count();
    let mut inverse: Vec<Vec<Vec<StateId>>> = vec![vec![Vec::new(); n]; k];
    for &q in states {
        for (c, inv) in inverse.iter_mut().enumerate() {
            inv[dfa.next(q, c)].push(q);
        }
    }

    let mut block_of: Vec<Option<usize>> = vec![None; n];
    let mut blocks: Vec<Vec<StateId>> = Vec::new();
    let (acc, rej): (Vec<StateId>, Vec<StateId>) = states.iter().partition(|&&q| dfa.accepting[q]);
    for part in [acc, rej] {
        if !part.is_empty() {
            for &q in &part {
                block_of[q] = Some(blocks.len());
            }
            blocks.push(part);
        }
    }

    let mut in_work = vec![false; blocks.len()];
    let mut work: Vec<usize> = Vec::new();
    if blocks.len() == 2 {
        let smaller = if blocks[0].len() <= blocks[1].len() {
            0
        } else {
            1
        };
        work.push(smaller);
        in_work[smaller] = true;
    }

    let mut in_preimage = vec![false; n];
    let mut preimage: Vec<StateId> = Vec::new();
    let mut hit_count: Vec<usize> = vec![0; blocks.len()];
    let mut hits: Vec<usize> = Vec::new();
    while let Some(splitter) = work.pop() {
        in_work[splitter] = false;
        let members = blocks[splitter].clone();
        for inv in &inverse {
            preimage.clear();
            for &t in &members {
                for &p in &inv[t] {
                    if !in_preimage[p] {
                        in_preimage[p] = true;
                        preimage.push(p);
                    }
                }
            }
            hits.clear();
            for &p in &preimage {
                let b = block_of[p].unwrap();
                if hit_count[b] == 0 {
                    hits.push(b);
                }
                hit_count[b] += 1;
            }
            for &b in &hits {
                let count = std::mem::take(&mut hit_count[b]);
                if count == blocks[b].len() {
                    continue;
                }
                let (inside, outside): (Vec<StateId>, Vec<StateId>) =
                    blocks[b].iter().partition(|&&q| in_preimage[q]);
                let fresh = blocks.len();
                for &q in &inside {
                    block_of[q] = Some(fresh);
                }
                let inside_len = inside.len();
                blocks[b] = outside;
                blocks.push(inside);
                in_work.push(false);
                hit_count.push(0);
                if in_work[b] {
                    in_work[fresh] = true;
                    work.push(fresh);
                } else {
                    let smaller = if inside_len <= blocks[b].len() {
                        fresh
                    } else {
                        b
                    };
                    in_work[smaller] = true;
                    work.push(smaller);
                }
            }
            for &p in &preimage {
                in_preimage[p] = false;
            }
        }
    }
    block_of
}

/// Language equality of two canonical automata.
pub fn equivalent(a: &CanonicalDfa, b: &CanonicalDfa) -> Result<bool> {
    check_same_alphabet(a.alphabet(), b.alphabet())?;
    Ok(a == b)
}

pub fn accepts(d: &CanonicalDfa, word: &str) -> Result<bool> {
    d.accepts(word)
}

pub fn is_empty(d: &CanonicalDfa) -> bool {
    d.is_empty()
}

pub fn contains_epsilon(d: &CanonicalDfa) -> bool {
    d.contains_epsilon()
}

/// Compile, determinize and minimize in one step.
pub fn canonical_from_regex(ast: &Regex, alphabet: &Alphabet) -> Result<CanonicalDfa> {
    Ok(minimize(&determinize(&compile(ast, alphabet)?)?))
}
