//! Reference classification tables: one example language per case with the
//! expected family and orbit sizes, plus the known misprints in the
//! published tables.

use crate::classify::{KleeneCase, PositiveCase};
use crate::error::Result;
use crate::lang::Lang;
use crate::orbit::Mode;
use crate::regex::Alphabet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Example {
    pub regex: &'static str,
    pub alphabet: &'static str,
    /// The example is the complement of `regex`.
    pub complemented: bool,
}

impl Example {
    const fn of(regex: &'static str, alphabet: &'static str) -> Self {
        Example {
            regex,
            alphabet,
            complemented: false,
        }
    }

    const fn complement_of(regex: &'static str, alphabet: &'static str) -> Self {
        Example {
            regex,
            alphabet,
            complemented: true,
        }
    }

    pub fn lang(&self) -> Result<Lang> {
        let l = Lang::parse(self.regex, &Alphabet::new(self.alphabet)?)?;
        Ok(if self.complemented { l.complement() } else { l })
    }

    pub fn describe(&self) -> String {
        if self.complemented {
            format!("complement of {} over {{{}}}", self.regex, self.alphabet)
        } else {
            format!("{} over {{{}}}", self.regex, self.alphabet)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositiveRow {
    pub case: PositiveCase,
    pub example: Example,
    pub family: usize,
    pub orbit: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KleeneRow {
    pub case: KleeneCase,
    pub example: Example,
    pub family: usize,
    pub orbit: usize,
}

pub const POSITIVE_TABLE: [PositiveRow; 9] = [
    positive(PositiveCase::C1, Example::of("a*", "a"), 1),
    positive(PositiveCase::C2, Example::of("a", "a"), 2),
    positive(PositiveCase::C3, Example::of("aaa*", "a"), 2),
    positive(PositiveCase::C4, Example::of("a|aaaa", "a"), 3),
    positive(PositiveCase::C5, Example::of("aa", "a"), 3),
    positive(PositiveCase::C6, Example::of("a|abaa", "ab"), 4),
    positive(PositiveCase::C7, Example::complement_of("a|abaa", "ab"), 4),
    positive(PositiveCase::C8, Example::of("a|bb", "ab"), 4),
    positive(PositiveCase::C9, Example::of("a|ab|bb", "ab"), 5),
];

const fn positive(case: PositiveCase, example: Example, family: usize) -> PositiveRow {
    PositiveRow {
        case,
        example,
        family,
        orbit: 2 * family,
    }
}

pub const KLEENE_TABLE: [KleeneRow; 12] = [
    kleene(KleeneCase::C1a, Example::of("a*", "a"), 2),
    kleene(KleeneCase::C1b, Example::of("a+", "a"), 2),
    kleene(KleeneCase::C2a, Example::of("a", "a"), 3),
    kleene(KleeneCase::C2b, Example::of("a|@", "a"), 4),
    kleene(KleeneCase::C3a, Example::of("aaa*|@", "a"), 3),
    kleene(KleeneCase::C3b, Example::of("aaa*", "a"), 4),
    kleene(KleeneCase::C4, Example::of("a|aaaa", "a"), 4),
    kleene(KleeneCase::C5, Example::of("aa", "a"), 4),
    kleene(KleeneCase::C6, Example::of("a|abaa", "ab"), 6),
    kleene(KleeneCase::C7, Example::complement_of("a|abaa", "ab"), 6),
    kleene(KleeneCase::C8, Example::of("a|bb", "ab"), 5),
    kleene(KleeneCase::C9, Example::of("a|ab|bb", "ab"), 7),
];

const fn kleene(case: KleeneCase, example: Example, family: usize) -> KleeneRow {
    KleeneRow {
        case,
        example,
        family,
        orbit: 2 * family,
    }
}

/// The published case (4) example, which is in fact open.
pub const PRINTED_CASE4_EXAMPLE: Example = Example::of("a|aaa", "a");

/// A row of the published Kleene table whose example or sizes disagree with
/// direct computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrintedKleeneRow {
    pub label: &'static str,
    pub example: Example,
    pub printed_family: usize,
    pub printed_orbit: usize,
}

pub const PRINTED_KLEENE_ROWS: [PrintedKleeneRow; 4] = [
    PrintedKleeneRow {
        label: "2a",
        example: Example::of("a|@", "a"),
        printed_family: 3,
        printed_orbit: 6,
    },
    PrintedKleeneRow {
        label: "2b",
        example: Example::of("a", "a"),
        printed_family: 4,
        printed_orbit: 8,
    },
    PrintedKleeneRow {
        label: "3a",
        example: Example::of("aaa*", "a"),
        printed_family: 3,
        printed_orbit: 6,
    },
    PrintedKleeneRow {
        label: "3b",
        example: Example::of("aaa*|@", "a"),
        printed_family: 4,
        printed_orbit: 8,
    },
];

pub const CASE4_NOTE: &str = "note: the published case table gives a|aaa as its case (4) example, \
but {a, aaa} is open (every split of aaa has a factor in the language), so it falls in case (2); \
a|aaaa witnesses case (4)";

pub const KLEENE_EPSILON_NOTE: &str =
    "note: sub-cases follow the convention (2a) open with ε ∉ L, \
(2b) open with ε ∈ L, (3a) closed with ε ∈ L, (3b) closed with ε ∉ L; the published table pairs \
these ε-conditions with swapped sizes, the sizes printed here are computed";

/// Notes to print alongside a classification.
pub fn notes_for(lang: &Lang, mode: Mode, label: &str) -> Vec<String> {
    let mut notes = Vec::new();
    if mode == Mode::Positive && lang.alphabet().contains('a') {
        if let Ok(printed) = Lang::parse(PRINTED_CASE4_EXAMPLE.regex, lang.alphabet()) {
            if &printed == lang {
                notes.push(CASE4_NOTE.to_string());
            }
        }
    }
    if mode == Mode::Kleene && ["(2a)", "(2b)", "(3a)", "(3b)"].contains(&label) {
        notes.push(KLEENE_EPSILON_NOTE.to_string());
    }
    notes
}
