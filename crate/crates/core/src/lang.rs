//! Operators on regular languages: complement, positive and Kleene
//! closure, the two interiors, and the open/closed predicates.
//!
//! Open and closed always mean the positive sense: `L` is closed when
//! `L = L+` and open when `L` equals its positive interior `L^{-+-}`.

use std::fmt;

use crate::automata::{self, CanonicalDfa, Dfa, Label, Nfa};
use crate::error::{Error, Result};
use crate::regex::{parse_regex, Alphabet, Regex};

/// A regular language, identified by its canonical automaton.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lang {
    canonical: CanonicalDfa,
}

impl From<CanonicalDfa> for Lang {
    fn from(canonical: CanonicalDfa) -> Self {
        Lang { canonical }
    }
}

impl Lang {
    pub fn from_regex(ast: &Regex, alphabet: &Alphabet) -> Result<Lang> {
        automata::canonical_from_regex(ast, alphabet).map(Lang::from)
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Lang> {
        Lang::from_regex(&parse_regex(text, alphabet)?, alphabet)
    }

    pub fn from_dfa(dfa: &Dfa) -> Lang {
        automata::minimize(dfa).into()
    }

    fn from_nfa(nfa: &Nfa) -> Result<Lang> {
        Ok(Lang::from_dfa(&automata::determinize(nfa)?))
    }

    pub fn empty(alphabet: &Alphabet) -> Lang {
        let dfa = Dfa::new(alphabet.clone(), vec![0; alphabet.len()], 0, vec![false])
            .expect("single-state automaton is total");
        Lang::from_dfa(&dfa)
    }

    /// Σ*.
    pub fn universal(alphabet: &Alphabet) -> Lang {
        Lang::empty(alphabet).complement()
    }

    /// {ε}.
    pub fn epsilon(alphabet: &Alphabet) -> Lang {
        Lang::empty(alphabet).add_epsilon()
    }

    pub fn canonical(&self) -> &CanonicalDfa {
        &self.canonical
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.canonical.alphabet()
    }

    pub fn state_count(&self) -> usize {
        self.canonical.state_count()
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        self.canonical.accepts(word)
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }

    pub fn contains_epsilon(&self) -> bool {
        self.canonical.contains_epsilon()
    }

    pub fn complement(&self) -> Lang {
        self.canonical.complement().into()
    }

    /// Positive closure `L+`. Every accepting state gets an ε-move to a
    /// non-accepting copy of the start state, so ε is accepted iff `ε ∈ L`.
    pub fn plus_closure(&self) -> Result<Lang> {
        let dfa = self.canonical.as_dfa();
        let mut nfa = Nfa::from_dfa(dfa);
        let restart = nfa.add_state(false);
        for c in 0..dfa.alphabet().len() {
            nfa.add_edge(restart, Label::Letter(c), dfa.next(dfa.start(), c));
        }
        for q in 0..dfa.state_count() {
            if dfa.is_accepting(q) {
                nfa.add_edge(q, Label::Epsilon, restart);
            }
        }
        Lang::from_nfa(&nfa)
    }

    /// Kleene closure `L* = L+ ∪ {ε}`.
    pub fn star_closure(&self) -> Result<Lang> {
        Ok(self.plus_closure()?.add_epsilon())
    }

    /// `L^{-+-}`.
    pub fn positive_interior(&self) -> Result<Lang> {
        Ok(self.complement().plus_closure()?.complement())
    }

    /// `L^{-*-}`.
    pub fn kleene_interior(&self) -> Result<Lang> {
        Ok(self.complement().star_closure()?.complement())
    }

    pub fn concatenate(&self, other: &Lang) -> Result<Lang> {
        automata::check_same_alphabet(self.alphabet(), other.alphabet())?;
        let left = self.canonical.as_dfa();
        let right = other.canonical.as_dfa();
        let mut nfa = Nfa::new(self.alphabet().clone());
        let l = nfa.embed_dfa(left);
        let r = nfa.embed_dfa(right);
        for q in 0..left.state_count() {
            if left.is_accepting(q) {
                nfa.set_accepting(l + q, false);
                nfa.add_edge(l + q, Label::Epsilon, r + right.start());
            }
        }
        nfa.set_start(l + left.start());
        Lang::from_nfa(&nfa)
    }

    fn combine(&self, other: &Lang, op: impl Fn(bool, bool) -> bool) -> Result<Lang> {
        let product = self
            .canonical
            .as_dfa()
            .product(other.canonical.as_dfa(), op)?;
        Ok(Lang::from_dfa(&product))
    }

    pub fn union(&self, other: &Lang) -> Result<Lang> {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Lang) -> Result<Lang> {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &Lang) -> Result<Lang> {
        self.combine(other, |a, b| a && !b)
    }

    pub fn is_subset(&self, other: &Lang) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    pub fn is_proper_subset(&self, other: &Lang) -> Result<bool> {
        Ok(self.is_subset(other)? && self != other)
    }

    pub fn add_epsilon(&self) -> Lang {
        Lang::from_dfa(&self.canonical.as_dfa().with_start_acceptance(true))
    }

    pub fn remove_epsilon(&self) -> Lang {
        Lang::from_dfa(&self.canonical.as_dfa().with_start_acceptance(false))
    }

    /// `L = L+`.
    pub fn is_closed(&self) -> Result<bool> {
        Ok(*self == self.plus_closure()?)
    }

    /// `LL ⊆ L`: the semigroup characterization of closedness.
    pub fn is_closed_semigroup_check(&self) -> Result<bool> {
        self.concatenate(self)?.is_subset(self)
    }

    /// `L` equals its positive interior.
    pub fn is_open(&self) -> Result<bool> {
        Ok(*self == self.positive_interior()?)
    }

    /// No word of `L` splits as `uv` with both `u` and `v` outside `L`.
    pub fn is_open_split_check(&self) -> Result<bool> {
        let outside = self.complement();
        Ok(self
            .intersection(&outside.concatenate(&outside)?)?
            .is_empty())
    }

    pub fn is_clopen(&self) -> Result<bool> {
        Ok(self.is_open()? && self.is_closed()?)
    }

    /// `L` together with every non-empty prefix of a word in `L`.
    pub fn prefix_closure(&self) -> Lang {
        let dfa = self.canonical.as_dfa();
        let live = dfa.live_states();
        // fresh start keeps ε membership unchanged while every state
        // reached after at least one letter accepts iff it is live
        let relabeled = Dfa::new(
            dfa.alphabet().clone(),
            (0..dfa.state_count())
                .flat_map(|q| (0..dfa.alphabet().len()).map(move |c| dfa.next(q, c)))
                .collect(),
            dfa.start(),
            live,
        )
        .expect("same shape as a total automaton")
        .with_start_acceptance(self.contains_epsilon());
        Lang::from_dfa(&relabeled)
    }

    /// `L` together with every non-empty suffix of a word in `L`.
    pub fn suffix_closure(&self) -> Result<Lang> {
        let dfa = self.canonical.as_dfa();
        let mut nfa = Nfa::new(self.alphabet().clone());
        let offset = nfa.embed_dfa(dfa);
        let entry = nfa.add_state(false);
        for q in 0..dfa.state_count() {
            nfa.add_edge(entry, Label::Epsilon, offset + q);
        }
        nfa.set_start(entry);
        let suffixes = Lang::from_nfa(&nfa)?;
        suffixes.remove_epsilon().union(self)
    }

    /// `Σ* L`.
    pub fn left_ideal(&self) -> Result<Lang> {
        Lang::universal(self.alphabet()).concatenate(self)
    }

    /// `L Σ*`.
    pub fn right_ideal(&self) -> Result<Lang> {
        self.concatenate(&Lang::universal(self.alphabet()))
    }

    /// `Σ* L Σ*`.
    pub fn two_sided_ideal(&self) -> Result<Lang> {
        self.left_ideal()?
            .concatenate(&Lang::universal(self.alphabet()))
    }

    pub fn apply(&self, op: LangOp) -> Result<Lang> {
        match op {
            LangOp::Complement => Ok(self.complement()),
            LangOp::Plus => self.plus_closure(),
            LangOp::Star => self.star_closure(),
            LangOp::PositiveInterior => self.positive_interior(),
            LangOp::KleeneInterior => self.kleene_interior(),
        }
    }

    /// Applies `word` left to right, so `[Plus, Complement]` yields `L^{+-}`.
    pub fn apply_word(&self, word: &[LangOp]) -> Result<Lang> {
        word.iter().try_fold(self.clone(), |acc, &op| acc.apply(op))
    }
}

/// Checks `M` open with `L ⊆ M ⊆ L+`. A positive answer forces `L+` to be
/// clopen; if it is not, an [`Error::InvariantViolation`] is returned.
pub fn sandwich_check(l: &Lang, m: &Lang) -> Result<bool> {
    automata::check_same_alphabet(l.alphabet(), m.alphabet())?;
    let plus = l.plus_closure()?;
    let holds = m.is_open()? && l.is_subset(m)? && m.is_subset(&plus)?;
    if holds && !plus.is_clopen()? {
        return Err(Error::InvariantViolation(
            "open language between L and L+ but L+ is not clopen".into(),
        ));
    }
    Ok(holds)
}

/// Single operator applied to a language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LangOp {
    Complement,
    Plus,
    Star,
    PositiveInterior,
    KleeneInterior,
}

impl LangOp {
    pub const ALL: [LangOp; 5] = [
        LangOp::Complement,
        LangOp::Plus,
        LangOp::Star,
        LangOp::PositiveInterior,
        LangOp::KleeneInterior,
    ];

    pub fn symbol(self) -> char {
        match self {
            LangOp::Complement => '-',
            LangOp::Plus => '+',
            LangOp::Star => '*',
            LangOp::PositiveInterior => '⊕',
            LangOp::KleeneInterior => '⊛',
        }
    }

    pub fn from_symbol(c: char) -> Option<LangOp> {
        match c {
            '-' | '−' => Some(LangOp::Complement),
            '+' => Some(LangOp::Plus),
            '*' => Some(LangOp::Star),
            '⊕' => Some(LangOp::PositiveInterior),
            '⊛' => Some(LangOp::KleeneInterior),
            _ => None,
        }
    }
}

impl fmt::Display for LangOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Parses an operator word such as `"+-+"` or `"*−⊛"`.
pub fn parse_op_word(text: &str) -> Result<Vec<LangOp>> {
    text.chars()
        .enumerate()
        .map(|(position, c)| {
            LangOp::from_symbol(c).ok_or(Error::Syntax {
                position,
                expected: "one of - + * ⊕ ⊛".into(),
            })
        })
        .collect()
}

pub fn render_op_word(word: &[LangOp]) -> String {
    word.iter().map(|op| op.symbol()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lang(text: &str, alphabet: &str) -> Lang {
        Lang::parse(text, &Alphabet::new(alphabet).unwrap()).unwrap()
    }

    #[test]
    fn complement_examples() {
        assert!(lang("a*", "a").complement().is_empty());
        assert_eq!(lang("a", "a").complement(), lang("@|aaa*", "a"));
        let l = lang("a(b|a)*b|@", "ab");
        assert_eq!(l.complement().complement(), l);
    }

    #[test]
    fn plus_closure_examples() {
        assert!(lang("aa|aaa", "a")
            .plus_closure()
            .unwrap()
            .accepts("aaaaa")
            .unwrap());
        assert!(lang("#", "a").plus_closure().unwrap().is_empty());
        assert_eq!(lang("a+", "a").plus_closure().unwrap(), lang("a+", "a"));
        assert_eq!(lang("a|aaaa", "a").plus_closure().unwrap(), lang("a+", "a"));
        assert!(!lang("ab", "ab").plus_closure().unwrap().contains_epsilon());
        assert!(lang("ab|@", "ab")
            .plus_closure()
            .unwrap()
            .contains_epsilon());
    }

    #[test]
    fn star_closure_examples() {
        assert_eq!(lang("#", "a").star_closure().unwrap(), lang("@", "a"));
        assert_eq!(lang("a", "a").star_closure().unwrap(), lang("a*", "a"));
    }

    #[test]
    fn interior_examples() {
        assert!(lang("aa", "a").positive_interior().unwrap().is_empty());
        assert_eq!(
            lang("a|aaaa", "a").positive_interior().unwrap(),
            lang("a", "a")
        );
        let all = Lang::universal(&Alphabet::new("ab").unwrap());
        assert_eq!(all.positive_interior().unwrap(), all);
        assert_eq!(lang("a*", "a").kleene_interior().unwrap(), lang("a+", "a"));
        assert!(lang("#", "a").kleene_interior().unwrap().is_empty());
    }

    #[test]
    fn boolean_and_epsilon_operations() {
        assert_eq!(
            lang("a", "a").concatenate(&lang("a", "a")).unwrap(),
            lang("aa", "a")
        );
        assert_eq!(lang("a+", "a").add_epsilon(), lang("a*", "a"));
        assert_eq!(lang("a*", "a").remove_epsilon(), lang("a+", "a"));
        assert_eq!(
            lang("a*", "a").intersection(&lang("(aa)*", "a")).unwrap(),
            lang("(aa)*", "a")
        );
        assert_eq!(
            lang("a", "a").union(&lang("aa", "a")).unwrap(),
            lang("a|aa", "a")
        );
        assert!(matches!(
            lang("a", "a").union(&lang("a", "ab")),
            Err(Error::AlphabetMismatch { .. })
        ));
        assert!(matches!(
            lang("a", "a").concatenate(&lang("a", "ab")),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn closedness_examples() {
        for (text, alpha, closed) in [("aaa*", "a", true), ("a", "a", false), ("#", "a", true)] {
            let l = lang(text, alpha);
            assert_eq!(l.is_closed().unwrap(), closed, "{text}");
            assert_eq!(l.is_closed_semigroup_check().unwrap(), closed, "{text}");
        }
        assert!(!lang("aa", "a").is_closed_semigroup_check().unwrap());
        assert!(!lang("a|bb", "ab").is_closed_semigroup_check().unwrap());
        assert!(lang("ab", "ab")
            .left_ideal()
            .unwrap()
            .is_closed_semigroup_check()
            .unwrap());
    }

    #[test]
    fn openness_examples() {
        assert!(lang("a", "a").is_open().unwrap());
        assert!(!lang("aa", "a").is_open().unwrap());
        assert!(Lang::universal(&Alphabet::new("a").unwrap())
            .is_open()
            .unwrap());
        assert!(!lang("aa", "a").is_open_split_check().unwrap());
        assert!(!lang("a|abaa", "ab").is_open_split_check().unwrap());
        assert!(lang("abba", "ab")
            .prefix_closure()
            .is_open_split_check()
            .unwrap());
    }

    #[test]
    fn clopen_examples() {
        assert!(lang("a*", "a").is_clopen().unwrap());
        assert!(!lang("a", "a").is_clopen().unwrap());
        let l = lang("a|ab|bb", "ab");
        assert!(l
            .positive_interior()
            .unwrap()
            .plus_closure()
            .unwrap()
            .is_clopen()
            .unwrap());
    }

    #[test]
    fn prefix_and_suffix_closures() {
        assert_eq!(lang("ab", "ab").prefix_closure(), lang("a|ab", "ab"));
        assert_eq!(
            lang("ab", "ab").suffix_closure().unwrap(),
            lang("b|ab", "ab")
        );
        assert_eq!(lang("ab|@", "ab").prefix_closure(), lang("@|a|ab", "ab"));
        assert_eq!(lang("#", "ab").prefix_closure(), lang("#", "ab"));
        assert_eq!(
            lang("ab*", "ab").suffix_closure().unwrap(),
            lang("ab*|b+", "ab")
        );
    }

    #[test]
    fn ideals() {
        assert_eq!(
            lang("a", "ab").right_ideal().unwrap(),
            lang("a(a|b)*", "ab")
        );
        assert_eq!(lang("a", "ab").left_ideal().unwrap(), lang("(a|b)*a", "ab"));
        assert!(lang("#", "ab").left_ideal().unwrap().is_empty());
        let t = lang("ba", "ab").two_sided_ideal().unwrap();
        assert_eq!(t, lang("(a|b)*ba(a|b)*", "ab"));
        assert!(t.is_closed().unwrap());
    }

    #[test]
    fn sandwich() {
        assert!(sandwich_check(&lang("a|aaaa", "a"), &lang("a+", "a")).unwrap());
        assert!(lang("a+", "a").is_clopen().unwrap());
        assert!(!sandwich_check(&lang("aa", "a"), &lang("aa", "a")).unwrap());
        let l = lang("a|ab|bb", "ab");
        let plus = l.plus_closure().unwrap();
        assert_eq!(
            sandwich_check(&l, &plus).unwrap(),
            plus.is_clopen().unwrap()
        );
    }

    #[test]
    fn non_topological_union() {
        let a = Alphabet::new("a").unwrap();
        let left = lang("(aa)+", "a").union(&lang("(aaa)+", "a")).unwrap();
        let right = Lang::parse("aa|aaa", &a).unwrap().plus_closure().unwrap();
        assert!(left.is_proper_subset(&right).unwrap());
        assert!(right.accepts("aaaaa").unwrap() && !left.accepts("aaaaa").unwrap());
    }

    #[test]
    fn op_words() {
        let w = parse_op_word("+−⊕*-⊛").unwrap();
        assert_eq!(render_op_word(&w), "+-⊕*-⊛");
        assert!(parse_op_word("+x").is_err());
        let l = lang("a", "a");
        assert_eq!(
            l.apply_word(&parse_op_word("*-*-*").unwrap()).unwrap(),
            lang("a*", "a")
        );
        assert_eq!(
            l.apply_word(&parse_op_word("*-*-").unwrap()).unwrap(),
            lang("a+", "a")
        );
    }
}
