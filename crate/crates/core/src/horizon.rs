//! Brute-force languages truncated to words of length at most `n`.
//!
//! For a word of length `l ≤ n`, membership in `L+`, `L*`, the complement
//! and both interiors depends only on words of length at most `l`, because
//! every factor of a concatenation is no longer than the whole. Every
//! operator therefore has an exact truncated counterpart here, computed by
//! enumeration and independent of the automata layer.

use std::fmt;

use crate::error::{Error, Result};
use crate::lang::{Lang, LangOp};
use crate::regex::Alphabet;

/// Upper limit on |Σ^{≤n}| accepted by the oracle.
pub const MAX_WORDS: usize = 1 << 22;

/// Words of length at most `horizon`, indexed in shortlex order.
#[derive(Debug, Clone, PartialEq, Eq)]
struct WordSpace {
    k: usize,
    horizon: usize,
    /// `offsets[l]` is the index of the first word of length `l`.
    offsets: Vec<usize>,
    /// `powers[i] = k^i`.
    powers: Vec<usize>,
}

impl WordSpace {
    fn new(k: usize, horizon: usize) -> Result<Self> {
        let mut offsets = vec![0usize];
        let mut powers = vec![1usize];
        for l in 0..=horizon {
            let end = offsets[l]
                .checked_add(powers[l])
                .filter(|&e| e <= MAX_WORDS)
                .ok_or_else(|| Error::InvariantViolation(format!("horizon {horizon} too large")))?;
            offsets.push(end);
            powers.push(powers[l].saturating_mul(k));
        }
        Ok(WordSpace {
            k,
            horizon,
            offsets,
            powers,
        })
    }

    fn len(&self) -> usize {
        self.offsets[self.horizon + 1]
    }

    fn id(&self, word: &[usize]) -> usize {
        let value = word.iter().fold(0, |acc, &c| acc * self.k + c);
        self.offsets[word.len()] + value
    }

    fn length_of(&self, id: usize) -> usize {
        self.offsets.partition_point(|&o| o <= id) - 1
    }

    fn word(&self, id: usize) -> Vec<usize> {
        let l = self.length_of(id);
        let mut value = id - self.offsets[l];
        let mut out = vec![0; l];
        for slot in out.iter_mut().rev() {
            *slot = value % self.k;
            value /= self.k;
        }
        out
    }

    /// Ids of `u` and `v` where `u` is the first `i` letters of word `id`.
    fn split(&self, id: usize, i: usize) -> (usize, usize) {
        let l = self.length_of(id);
        let value = id - self.offsets[l];
        let tail = self.powers[l - i];
        (
            self.offsets[i] + value / tail,
            self.offsets[l - i] + value % tail,
        )
    }

    fn concat(&self, u: usize, v: usize) -> Option<usize> {
        let (lu, lv) = (self.length_of(u), self.length_of(v));
        if lu + lv > self.horizon {
            return None;
        }
        let value = (u - self.offsets[lu]) * self.powers[lv] + (v - self.offsets[lv]);
        Some(self.offsets[lu + lv] + value)
    }
}

/// A language restricted to Σ^{≤n}.
#[derive(Clone, PartialEq, Eq)]
pub struct HorizonLang {
    alphabet: Alphabet,
    space: WordSpace,
    members: Vec<bool>,
}

impl HorizonLang {
    pub fn empty(alphabet: &Alphabet, horizon: usize) -> Result<Self> {
        let space = WordSpace::new(alphabet.len(), horizon)?;
        Ok(HorizonLang {
            alphabet: alphabet.clone(),
            members: vec![false; space.len()],
            space,
        })
    }

    pub fn from_words<'a>(
        alphabet: &Alphabet,
        horizon: usize,
        words: impl IntoIterator<Item = &'a str>,
    ) -> Result<Self> {
        let mut out = HorizonLang::empty(alphabet, horizon)?;
        for w in words {
            let encoded = alphabet.encode(w)?;
            if encoded.len() > horizon {
                return Err(Error::InvariantViolation(format!(
                    "word {w:?} is longer than the horizon {horizon}"
                )));
            }
            let id = out.space.id(&encoded);
            out.members[id] = true;
        }
        Ok(out)
    }

    /// Membership bitmap over shortlex word indices.
    pub fn from_bits(alphabet: &Alphabet, horizon: usize, bits: Vec<bool>) -> Result<Self> {
        let out = HorizonLang::empty(alphabet, horizon)?;
        if bits.len() != out.members.len() {
            return Err(Error::InvariantViolation("bitmap length mismatch".into()));
        }
        Ok(HorizonLang {
            members: bits,
            ..out
        })
    }

    /// `{w : |w| ≤ n, w ∈ L}` by running the automaton on every word.
    pub fn from_lang(lang: &Lang, horizon: usize) -> Result<Self> {
        let mut out = HorizonLang::empty(lang.alphabet(), horizon)?;
        let dfa = lang.canonical();
        // state after each word, filled in shortlex order from the prefix
        let mut state = vec![0usize; out.members.len()];
        for id in 0..out.members.len() {
            if id > 0 {
                let l = out.space.length_of(id);
                let (prefix, last) = out.space.split(id, l - 1);
                let letter = last - out.space.offsets[1];
                state[id] = dfa.next(state[prefix], letter);
            }
            out.members[id] = dfa.is_accepting(state[id]);
        }
        Ok(out)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn horizon(&self) -> usize {
        self.space.horizon
    }

    pub fn bits(&self) -> &[bool] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&m| m)
    }

    pub fn contains(&self, word: &str) -> bool {
        match self.alphabet.encode(word) {
            Ok(w) if w.len() <= self.space.horizon => self.members[self.space.id(&w)],
            _ => false,
        }
    }

    /// Members in shortlex order.
    pub fn members(&self) -> Vec<String> {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(id, _)| self.alphabet.decode(&self.space.word(id)))
            .collect()
    }

    pub fn complement_h(&self) -> HorizonLang {
        HorizonLang {
            members: self.members.iter().map(|m| !m).collect(),
            ..self.clone()
        }
    }

    /// Least superset closed under concatenation within the horizon.
    pub fn plus_h(&self) -> HorizonLang {
        let mut out = self.members.clone();
        // shortlex order: both halves of a split are decided before the word
        for id in 1..out.len() {
            if out[id] {
                continue;
            }
            let l = self.space.length_of(id);
            out[id] = (1..l).any(|i| {
                let (u, v) = self.space.split(id, i);
                out[u] && out[v]
            });
        }
        HorizonLang {
            members: out,
            ..self.clone()
        }
    }

    pub fn star_h(&self) -> HorizonLang {
        let mut out = self.plus_h();
        out.members[0] = true;
        out
    }

    pub fn interior_h(&self) -> HorizonLang {
        self.complement_h().plus_h().complement_h()
    }

    pub fn kleene_interior_h(&self) -> HorizonLang {
        self.complement_h().star_h().complement_h()
    }

    pub fn apply(&self, op: LangOp) -> HorizonLang {
        match op {
            LangOp::Complement => self.complement_h(),
            LangOp::Plus => self.plus_h(),
            LangOp::Star => self.star_h(),
            LangOp::PositiveInterior => self.interior_h(),
            LangOp::KleeneInterior => self.kleene_interior_h(),
        }
    }

    pub fn apply_word(&self, word: &[LangOp]) -> HorizonLang {
        word.iter().fold(self.clone(), |acc, &op| acc.apply(op))
    }

    pub fn is_subset(&self, other: &HorizonLang) -> bool {
        self.members
            .iter()
            .zip(&other.members)
            .all(|(&a, &b)| !a || b)
    }

    /// First pair `u, v` (shortlex in `u`, then `v`) of members whose
    /// concatenation fits the horizon but is not a member.
    pub fn semigroup_witness(&self) -> Option<(String, String)> {
        let n = self.members.len();
        for u in (0..n).filter(|&u| self.members[u]) {
            for v in (0..n).filter(|&v| self.members[v]) {
                match self.space.concat(u, v) {
                    Some(w) if !self.members[w] => {
                        return Some((
                            self.alphabet.decode(&self.space.word(u)),
                            self.alphabet.decode(&self.space.word(v)),
                        ))
                    }
                    Some(_) => {}
                    // longer v only makes uv longer
                    None => break,
                }
            }
        }
        None
    }

    /// First member `w = uv` with both `u` and `v` outside the language.
    pub fn split_witness(&self) -> Option<(String, String)> {
        for id in (0..self.members.len()).filter(|&id| self.members[id]) {
            let l = self.space.length_of(id);
            for i in 1..l {
                let (u, v) = self.space.split(id, i);
                if !self.members[u] && !self.members[v] {
                    return Some((
                        self.alphabet.decode(&self.space.word(u)),
                        self.alphabet.decode(&self.space.word(v)),
                    ));
                }
            }
        }
        None
    }
}

impl fmt::Debug for HorizonLang {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self
            .members()
            .into_iter()
            .map(|w| if w.is_empty() { "@".into() } else { w })
            .collect();
        write!(
            f,
            "HorizonLang(n={}, {{{}}})",
            self.horizon(),
            words.join(",")
        )
    }
}

/// Compares `L^{word}` computed on automata with the same word applied to
/// the truncation of `L`.
pub fn cross_validate(word: &[LangOp], lang: &Lang, horizon: usize) -> Result<bool> {
    let exact = HorizonLang::from_lang(&lang.apply_word(word)?, horizon)?;
    let truncated = HorizonLang::from_lang(lang, horizon)?.apply_word(word);
    Ok(exact == truncated)
}

/// Cross-validates every operator word over `ops` of length at most
/// `max_len`, sharing prefixes. Returns the first failing word.
pub fn cross_validate_all(
    lang: &Lang,
    ops: &[LangOp],
    max_len: usize,
    horizon: usize,
) -> Result<Option<Vec<LangOp>>> {
    fn walk(
        exact: &Lang,
        truncated: &HorizonLang,
        ops: &[LangOp],
        remaining: usize,
        horizon: usize,
        word: &mut Vec<LangOp>,
    ) -> Result<Option<Vec<LangOp>>> {
        if HorizonLang::from_lang(exact, horizon)? != *truncated {
            return Ok(Some(word.clone()));
        }
        if remaining == 0 {
            return Ok(None);
        }
        for &op in ops {
            word.push(op);
            let found = walk(
                &exact.apply(op)?,
                &truncated.apply(op),
                ops,
                remaining - 1,
                horizon,
                word,
            )?;
            word.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
    let truncated = HorizonLang::from_lang(lang, horizon)?;
    walk(lang, &truncated, ops, max_len, horizon, &mut Vec::new())
}

/// `{w : |w|_1 < k·|w|_2 + offset}` where `|w|_i` counts letters of `w`
/// in `first` (resp. `second`). With `offset = 0` this is clopen for every
/// `k`; a positive offset generally breaks closedness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateLang {
    pub alphabet: Alphabet,
    pub first: Vec<char>,
    pub second: Vec<char>,
    pub k: u32,
    pub offset: u32,
}

impl PredicateLang {
    pub fn new(alphabet: &Alphabet, first: &[char], second: &[char], k: u32) -> Result<Self> {
        for &c in first.iter().chain(second) {
            if !alphabet.contains(c) {
                return Err(Error::UnknownSymbol {
                    symbol: c,
                    position: 0,
                });
            }
        }
        Ok(PredicateLang {
            alphabet: alphabet.clone(),
            first: first.to_vec(),
            second: second.to_vec(),
            k,
            offset: 0,
        })
    }

    pub fn with_offset(mut self, offset: u32) -> Self {
        self.offset = offset;
        self
    }

    pub fn holds(&self, word: &str) -> bool {
        let count = |set: &[char]| word.chars().filter(|c| set.contains(c)).count() as u64;
        count(&self.first) < u64::from(self.k) * count(&self.second) + u64::from(self.offset)
    }

    pub fn to_horizon(&self, horizon: usize) -> Result<HorizonLang> {
        let mut out = HorizonLang::empty(&self.alphabet, horizon)?;
        for id in 0..out.members.len() {
            let word = self.alphabet.decode(&out.space.word(id));
            out.members[id] = self.holds(&word);
        }
        Ok(out)
    }
}

impl fmt::Display for PredicateLang {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = |s: &[char]| s.iter().collect::<String>();
        write!(
            f,
            "|w|_{{{}}} < {}·|w|_{{{}}}",
            set(&self.first),
            self.k,
            set(&self.second)
        )?;
        if self.offset > 0 {
            write!(f, " + {}", self.offset)?;
        }
        Ok(())
    }
}

/// A concatenation `uv` that leaves the language (`in_language = true`)
/// or its complement (`in_language = false`) although `u` and `v` are in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitWitness {
    pub in_language: bool,
    pub u: String,
    pub v: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClopenCheck {
    Clopen,
    Violation(SplitWitness),
}

impl ClopenCheck {
    pub fn is_clopen(&self) -> bool {
        matches!(self, ClopenCheck::Clopen)
    }
}

/// Both the predicate language and its complement must be closed under
/// concatenation within Σ^{≤n}.
pub fn check_clopen_predicate(predicate: &PredicateLang, horizon: usize) -> Result<ClopenCheck> {
    let lang = predicate.to_horizon(horizon)?;
    if let Some((u, v)) = lang.semigroup_witness() {
        return Ok(ClopenCheck::Violation(SplitWitness {
            in_language: true,
            u,
            v,
        }));
    }
    if let Some((u, v)) = lang.complement_h().semigroup_witness() {
        return Ok(ClopenCheck::Violation(SplitWitness {
            in_language: false,
            u,
            v,
        }));
    }
    Ok(ClopenCheck::Clopen)
}

/// Outcome of the exhaustive subset-lattice checks at one horizon.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LatticeReport {
    pub subsets: usize,
    pub closed_subsets: usize,
    pub open_subsets: usize,
    /// Subsets whose truncated closure differs from the intersection of
    /// all closed supersets.
    pub closure_failures: Vec<u64>,
    /// Subsets whose truncated interior differs from the union of all open
    /// subsets.
    pub interior_failures: Vec<u64>,
    /// Subsets where "interior fixpoint" and "no bad split" disagree.
    pub split_failures: Vec<u64>,
}

impl LatticeReport {
    pub fn passed(&self) -> bool {
        self.closure_failures.is_empty()
            && self.interior_failures.is_empty()
            && self.split_failures.is_empty()
    }
}

/// Enumerates every subset `X` of Σ^{≤n} and checks that `plus_h(X)` is the
/// intersection of all concatenation-closed supersets, that `interior_h(X)`
/// is the union of all split-open subsets, and that `X` is an interior
/// fixpoint exactly when no member splits into two non-members.
///
/// Limited to |Σ^{≤n}| ≤ 20 (2^20 subsets).
pub fn lattice_check(alphabet: &Alphabet, horizon: usize) -> Result<LatticeReport> {
    let space = WordSpace::new(alphabet.len(), horizon)?;
    let n = space.len();
    if n > 20 {
        return Err(Error::InvariantViolation(format!(
            "{n} words is too many for subset enumeration"
        )));
    }
    // (u, v, uv) for non-empty u, v
    let mut triples = Vec::new();
    for u in 1..n {
        for v in 1..n {
            if let Some(w) = space.concat(u, v) {
                triples.push((u, v, w));
            }
        }
    }
    let bit = |i: usize| 1u64 << i;
    let has = |m: u64, i: usize| m & bit(i) != 0;
    let total = 1u64 << n;
    let closed: Vec<bool> = (0..total)
        .map(|m| {
            triples
                .iter()
                .all(|&(u, v, w)| !(has(m, u) && has(m, v)) || has(m, w))
        })
        .collect();
    let open: Vec<bool> = (0..total)
        .map(|m| {
            triples
                .iter()
                .all(|&(u, v, w)| !has(m, w) || has(m, u) || has(m, v))
        })
        .collect();

    let full = total - 1;
    let mut report = LatticeReport {
        subsets: total as usize,
        closed_subsets: closed.iter().filter(|&&c| c).count(),
        open_subsets: open.iter().filter(|&&o| o).count(),
        ..LatticeReport::default()
    };
    for x in 0..total {
        let bits: Vec<bool> = (0..n).map(|i| has(x, i)).collect();
        let h = HorizonLang::from_bits(alphabet, horizon, bits)?;
        let to_mask = |l: &HorizonLang| {
            l.members
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &m)| if m { acc | bit(i) } else { acc })
        };

        // intersection of closed supersets: walk supersets of x
        let mut meet = full;
        let free = full & !x;
        let mut extra = free;
        loop {
            let s = x | extra;
            if closed[s as usize] {
                meet &= s;
            }
            if extra == 0 {
                break;
            }
            extra = (extra - 1) & free;
        }
        if to_mask(&h.plus_h()) != meet {
            report.closure_failures.push(x);
        }

        // union of open subsets: walk submasks of x
        let mut join = 0u64;
        let mut sub = x;
        loop {
            if open[sub as usize] {
                join |= sub;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & x;
        }
        let interior = h.interior_h();
        if to_mask(&interior) != join {
            report.interior_failures.push(x);
        }

        if (interior == h) != h.split_witness().is_none() {
            report.split_failures.push(x);
        }
    }
    Ok(report)
}

/// [`lattice_check`] for horizons whose full subset lattice is too large.
///
/// Words of the top length `n` are never a proper factor of another word in
/// Σ^{≤n}, so a subset splits into a lower part over Σ^{<n} and a top layer.
/// Every lower part is enumerated; each is paired with the empty and full
/// top layers, every singleton and every co-singleton. The expected closure
/// and interior are still taken over the whole lattice: the lower part by
/// walking all closed supersets (open subsets), the top layer by combining
/// the products (resp. safe top words) of each of those lower sets.
///
/// Limited to |Σ^{<n}| ≤ 20 and |Σ^{≤n}| ≤ 64.
pub fn lattice_check_layered(alphabet: &Alphabet, horizon: usize) -> Result<LatticeReport> {
    if horizon == 0 {
        return lattice_check(alphabet, 0);
    }
    let space = WordSpace::new(alphabet.len(), horizon)?;
    let n = space.len();
    let low_n = space.offsets[horizon];
    if low_n > 20 || n > 64 {
        return Err(Error::InvariantViolation(format!(
            "{n} words is too many for layered enumeration"
        )));
    }
    let top_n = n - low_n;
    let bit = |i: usize| 1u64 << i;
    let has = |m: u64, i: usize| m & bit(i) != 0;

    let mut low_triples = Vec::new();
    for u in 1..low_n {
        for v in 1..low_n {
            if let Some(w) = space.concat(u, v).filter(|&w| w < low_n) {
                low_triples.push((u, v, w));
            }
        }
    }
    // the non-trivial splits of each top word, all into lower words
    let top_splits: Vec<Vec<(usize, usize)>> = (low_n..n)
        .map(|t| (1..horizon).map(|i| space.split(t, i)).collect())
        .collect();

    let total = 1u64 << low_n;
    let closed: Vec<bool> = (0..total)
        .map(|m| {
            low_triples
                .iter()
                .all(|&(u, v, w)| !(has(m, u) && has(m, v)) || has(m, w))
        })
        .collect();
    let open: Vec<bool> = (0..total)
        .map(|m| {
            low_triples
                .iter()
                .all(|&(u, v, w)| !has(m, w) || has(m, u) || has(m, v))
        })
        .collect();
    // top words forced by a lower set, and top words that may stay in an open set
    let products = |m: u64| {
        top_splits
            .iter()
            .enumerate()
            .fold(0u64, |acc, (t, splits)| {
                if splits.iter().any(|&(u, v)| has(m, u) && has(m, v)) {
                    acc | bit(t)
                } else {
                    acc
                }
            })
    };
    let safe = |m: u64| {
        top_splits
            .iter()
            .enumerate()
            .fold(0u64, |acc, (t, splits)| {
                if splits.iter().all(|&(u, v)| has(m, u) || has(m, v)) {
                    acc | bit(t)
                } else {
                    acc
                }
            })
    };

    let full_top = bit(top_n) - 1;
    let mut layers = vec![0, full_top];
    for t in 0..top_n {
        layers.push(bit(t));
        layers.push(full_top & !bit(t));
    }

    let full_low = total - 1;
    let mut report = LatticeReport {
        closed_subsets: closed.iter().filter(|&&c| c).count(),
        open_subsets: open.iter().filter(|&&o| o).count(),
        ..LatticeReport::default()
    };
    for x in 0..total {
        let (mut meet, mut meet_products) = (full_low, full_top);
        let free = full_low & !x;
        let mut extra = free;
        loop {
            let s = x | extra;
            if closed[s as usize] {
                meet &= s;
                meet_products &= products(s);
            }
            if extra == 0 {
                break;
            }
            extra = (extra - 1) & free;
        }
        let (mut join, mut join_safe) = (0u64, 0u64);
        let mut sub = x;
        loop {
            if open[sub as usize] {
                join |= sub;
                join_safe |= safe(sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & x;
        }

        for &top in &layers {
            let mask = x | (top << low_n);
            let bits: Vec<bool> = (0..n).map(|i| has(mask, i)).collect();
            let h = HorizonLang::from_bits(alphabet, horizon, bits)?;
            let to_mask = |l: &HorizonLang| {
                l.members
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, &m)| if m { acc | bit(i) } else { acc })
            };
            report.subsets += 1;
            let expected_closure = meet | ((top | meet_products) << low_n);
            if to_mask(&h.plus_h()) != expected_closure {
                report.closure_failures.push(mask);
            }
            let expected_interior = join | ((top & join_safe) << low_n);
            let interior = h.interior_h();
            if to_mask(&interior) != expected_interior {
                report.interior_failures.push(mask);
            }
            if (interior == h) != h.split_witness().is_none() {
                report.split_failures.push(mask);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha(s: &str) -> Alphabet {
        Alphabet::new(s).unwrap()
    }

    fn lang(text: &str, alphabet: &str) -> Lang {
        Lang::parse(text, &alpha(alphabet)).unwrap()
    }

    fn words(h: &HorizonLang) -> Vec<String> {
        h.members()
    }

    #[test]
    fn word_space_indexing() {
        let s = WordSpace::new(2, 3).unwrap();
        assert_eq!(s.len(), 15);
        assert_eq!(s.id(&[]), 0);
        assert_eq!(s.id(&[1, 0]), 5);
        assert_eq!(s.word(5), vec![1, 0]);
        assert_eq!(s.split(s.id(&[0, 1, 1]), 1), (s.id(&[0]), s.id(&[1, 1])));
        assert_eq!(s.concat(s.id(&[1]), s.id(&[0, 1])), Some(s.id(&[1, 0, 1])));
        assert_eq!(s.concat(s.id(&[1, 1]), s.id(&[0, 1])), None);
        let unary = WordSpace::new(1, 4).unwrap();
        assert_eq!(unary.len(), 5);
        assert_eq!(unary.split(4, 1), (1, 3));
        assert!(WordSpace::new(2, 40).is_err());
    }

    #[test]
    fn truncation_of_automata() {
        assert_eq!(
            words(&HorizonLang::from_lang(&lang("a+", "a"), 3).unwrap()),
            ["a", "aa", "aaa"]
        );
        assert!(HorizonLang::from_lang(&lang("#", "a"), 5)
            .unwrap()
            .is_empty());
        assert_eq!(
            words(&HorizonLang::from_lang(&lang("a*", "a"), 0).unwrap()),
            [""]
        );
        let h = HorizonLang::from_lang(&lang("a(a|b)*b", "ab"), 3).unwrap();
        assert_eq!(words(&h), ["ab", "aab", "abb"]);
    }

    #[test]
    fn truncated_plus() {
        let a = alpha("a");
        let x = HorizonLang::from_words(&a, 5, ["aa", "aaa"]).unwrap();
        assert_eq!(words(&x.plus_h()), ["aa", "aaa", "aaaa", "aaaaa"]);
        assert!(HorizonLang::empty(&a, 4).unwrap().plus_h().is_empty());
        let x = HorizonLang::from_words(&a, 6, ["a", "aaaa"]).unwrap();
        assert_eq!(x.plus_h().len(), 6);
        assert!(!x.plus_h().contains(""));
    }

    #[test]
    fn truncated_complement_interior_star() {
        let a = alpha("a");
        let x = HorizonLang::from_words(&a, 6, ["aa"]).unwrap();
        assert!(x.interior_h().is_empty());
        assert_eq!(x.complement_h().complement_h(), x);
        assert_eq!(words(&HorizonLang::empty(&a, 3).unwrap().star_h()), [""]);
        let x = HorizonLang::from_words(&a, 8, ["a", "aaaa"]).unwrap();
        assert_eq!(words(&x.interior_h()), ["a"]);
    }

    #[test]
    fn cross_validation_examples() {
        let l = lang("a|ab|bb", "ab");
        assert!(cross_validate(&crate::lang::parse_op_word("+-+").unwrap(), &l, 8).unwrap());
        let l = lang("a|aaaa", "a");
        assert!(cross_validate(&[LangOp::PositiveInterior], &l, 8).unwrap());
        let r = crate::regex::random_regex(42, 4, &alpha("ab"));
        let l = Lang::from_regex(&r, &alpha("ab")).unwrap();
        assert!(cross_validate(&crate::lang::parse_op_word("*-*-*").unwrap(), &l, 6).unwrap());
    }

    #[test]
    fn cross_validate_all_words() {
        let l = lang("a|abaa", "ab");
        let ops = [LangOp::Plus, LangOp::PositiveInterior, LangOp::Complement];
        assert_eq!(cross_validate_all(&l, &ops, 3, 6).unwrap(), None);
    }

    #[test]
    fn example_one_predicates_are_clopen() {
        let ab = alpha("ab");
        let p = PredicateLang::new(&ab, &['a'], &['b'], 2).unwrap();
        assert!(check_clopen_predicate(&p, 6).unwrap().is_clopen());
        let p = PredicateLang::new(&ab, &['a', 'b'], &['a'], 0).unwrap();
        assert!(p.to_horizon(6).unwrap().is_empty());
        assert!(check_clopen_predicate(&p, 6).unwrap().is_clopen());
    }

    #[test]
    fn non_strict_variant_is_still_clopen() {
        // |w|_a ≤ |w|_b is |w|_a < |w|_b + 1, additive on both sides
        let p = PredicateLang::new(&alpha("ab"), &['a'], &['b'], 1)
            .unwrap()
            .with_offset(1);
        assert!(check_clopen_predicate(&p, 6).unwrap().is_clopen());
    }

    #[test]
    fn witness_is_reported() {
        let p = PredicateLang::new(&alpha("ab"), &['a'], &['b'], 1)
            .unwrap()
            .with_offset(2);
        let check = check_clopen_predicate(&p, 4).unwrap();
        assert_eq!(
            check,
            ClopenCheck::Violation(SplitWitness {
                in_language: true,
                u: "a".into(),
                v: "a".into()
            })
        );
    }

    #[test]
    fn small_lattices() {
        for (letters, n) in [("a", 4), ("ab", 2)] {
            let r = lattice_check(&alpha(letters), n).unwrap();
            assert!(r.passed(), "{letters} {n}: {r:?}");
        }
    }

    #[test]
    fn layered_lattice_check_agrees_with_full_enumeration() {
        for (a, n) in [("a", 3), ("ab", 2), ("ab", 3)] {
            let full = lattice_check(&alpha(a), n).unwrap();
            let layered = lattice_check_layered(&alpha(a), n).unwrap();
            assert!(full.passed() && layered.passed(), "{a} {n}");
        }
    }
}
