//! Classification of a language by the algebra it generates: nine cases
//! under positive closure, twelve under Kleene closure.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lang::Lang;
use crate::orbit::{generate_family, generate_orbit, Mode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PositiveCase {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
}

impl PositiveCase {
    pub const ALL: [PositiveCase; 9] = [
        PositiveCase::C1,
        PositiveCase::C2,
        PositiveCase::C3,
        PositiveCase::C4,
        PositiveCase::C5,
        PositiveCase::C6,
        PositiveCase::C7,
        PositiveCase::C8,
        PositiveCase::C9,
    ];

    pub fn number(self) -> usize {
        self as usize + 1
    }

    /// (|B(L)|, |A(L)|).
    pub fn sizes(self) -> (usize, usize) {
        let b = match self {
            PositiveCase::C1 => 1,
            PositiveCase::C2 | PositiveCase::C3 => 2,
            PositiveCase::C4 | PositiveCase::C5 => 3,
            PositiveCase::C6 | PositiveCase::C7 | PositiveCase::C8 => 4,
            PositiveCase::C9 => 5,
        };
        (b, 2 * b)
    }

    /// The case of the complement language.
    pub fn dual(self) -> PositiveCase {
        match self {
            PositiveCase::C2 => PositiveCase::C3,
            PositiveCase::C3 => PositiveCase::C2,
            PositiveCase::C4 => PositiveCase::C5,
            PositiveCase::C5 => PositiveCase::C4,
            PositiveCase::C6 => PositiveCase::C7,
            PositiveCase::C7 => PositiveCase::C6,
            other => other,
        }
    }
}

pub fn dual_of(case: PositiveCase) -> PositiveCase {
    case.dual()
}

impl fmt::Display for PositiveCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.number())
    }
}

/// Kleene cases. Sub-cases of (1)–(3) split on ε: (1a) ε ∈ L, (1b) ε ∉ L;
/// (2a) open with ε ∉ L, (2b) open with ε ∈ L; (3a) closed with ε ∈ L,
/// (3b) closed with ε ∉ L.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KleeneCase {
    C1a,
    C1b,
    C2a,
    C2b,
    C3a,
    C3b,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
}

impl KleeneCase {
    pub const ALL: [KleeneCase; 12] = [
        KleeneCase::C1a,
        KleeneCase::C1b,
        KleeneCase::C2a,
        KleeneCase::C2b,
        KleeneCase::C3a,
        KleeneCase::C3b,
        KleeneCase::C4,
        KleeneCase::C5,
        KleeneCase::C6,
        KleeneCase::C7,
        KleeneCase::C8,
        KleeneCase::C9,
    ];

    pub fn label(self) -> &'static str {
        match self {
            KleeneCase::C1a => "1a",
            KleeneCase::C1b => "1b",
            KleeneCase::C2a => "2a",
            KleeneCase::C2b => "2b",
            KleeneCase::C3a => "3a",
            KleeneCase::C3b => "3b",
            KleeneCase::C4 => "4",
            KleeneCase::C5 => "5",
            KleeneCase::C6 => "6",
            KleeneCase::C7 => "7",
            KleeneCase::C8 => "8",
            KleeneCase::C9 => "9",
        }
    }

    /// (|E(L)|, |D(L)|).
    pub fn sizes(self) -> (usize, usize) {
        let e = match self {
            KleeneCase::C1a | KleeneCase::C1b => 2,
            KleeneCase::C2a | KleeneCase::C3a => 3,
            KleeneCase::C2b | KleeneCase::C3b => 4,
            KleeneCase::C4 | KleeneCase::C5 => 4,
            KleeneCase::C6 | KleeneCase::C7 => 6,
            KleeneCase::C8 => 5,
            KleeneCase::C9 => 7,
        };
        (e, 2 * e)
    }

    /// The positive case this Kleene case refines.
    pub fn positive(self) -> PositiveCase {
        match self {
            KleeneCase::C1a | KleeneCase::C1b => PositiveCase::C1,
            KleeneCase::C2a | KleeneCase::C2b => PositiveCase::C2,
            KleeneCase::C3a | KleeneCase::C3b => PositiveCase::C3,
            KleeneCase::C4 => PositiveCase::C4,
            KleeneCase::C5 => PositiveCase::C5,
            KleeneCase::C6 => PositiveCase::C6,
            KleeneCase::C7 => PositiveCase::C7,
            KleeneCase::C8 => PositiveCase::C8,
            KleeneCase::C9 => PositiveCase::C9,
        }
    }

    pub fn refine(case: PositiveCase, contains_epsilon: bool) -> KleeneCase {
        match (case, contains_epsilon) {
            (PositiveCase::C1, true) => KleeneCase::C1a,
            (PositiveCase::C1, false) => KleeneCase::C1b,
            (PositiveCase::C2, false) => KleeneCase::C2a,
            (PositiveCase::C2, true) => KleeneCase::C2b,
            (PositiveCase::C3, true) => KleeneCase::C3a,
            (PositiveCase::C3, false) => KleeneCase::C3b,
            (PositiveCase::C4, _) => KleeneCase::C4,
            (PositiveCase::C5, _) => KleeneCase::C5,
            (PositiveCase::C6, _) => KleeneCase::C6,
            (PositiveCase::C7, _) => KleeneCase::C7,
            (PositiveCase::C8, _) => KleeneCase::C8,
            (PositiveCase::C9, _) => KleeneCase::C9,
        }
    }
}

impl fmt::Display for KleeneCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

/// Everything the decision tree looks at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateBundle {
    pub open: bool,
    pub closed: bool,
    pub plus_clopen: bool,
    pub interior_clopen: bool,
    pub plus_open: bool,
    pub interior_closed: bool,
    /// `L^{⊕+} = L^+`.
    pub eq_int_plus: bool,
    /// `L^{+⊕} = L^⊕`.
    pub eq_plus_int: bool,
    /// `L^{+⊕} = L^{⊕+}`.
    pub eq_mixed: bool,
    pub contains_epsilon: bool,
}

pub fn predicates(lang: &Lang) -> Result<PredicateBundle> {
    let plus = lang.plus_closure()?;
    let interior = lang.positive_interior()?;
    let plus_interior = plus.positive_interior()?;
    let interior_plus = interior.plus_closure()?;
    let plus_open = plus.is_open()?;
    let interior_closed = interior.is_closed()?;
    Ok(PredicateBundle {
        open: *lang == interior,
        closed: *lang == plus,
        // closures are always closed and interiors always open
        plus_clopen: plus_open,
        interior_clopen: interior_closed,
        plus_open,
        interior_closed,
        eq_int_plus: interior_plus == plus,
        eq_plus_int: plus_interior == interior,
        eq_mixed: plus_interior == interior_plus,
        contains_epsilon: lang.contains_epsilon(),
    })
}

/// The decision tree over the predicate bundle, without any orbit checks.
pub fn decide_positive(p: &PredicateBundle) -> Result<PositiveCase> {
    Ok(match (p.open, p.closed) {
        (true, true) => PositiveCase::C1,
        (true, false) => PositiveCase::C2,
        (false, true) => PositiveCase::C3,
        (false, false) => match (p.plus_clopen, p.interior_clopen) {
            (true, true) => {
                return Err(Error::Unclassifiable(
                    "L+ and L⊕ both clopen but L neither open nor closed".into(),
                ))
            }
            (true, false) if p.eq_int_plus => PositiveCase::C4,
            (true, false) => PositiveCase::C6,
            (false, true) if p.eq_plus_int => PositiveCase::C5,
            (false, true) => PositiveCase::C7,
            (false, false) if p.eq_mixed => PositiveCase::C8,
            (false, false) => PositiveCase::C9,
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositiveClassification {
    pub case: PositiveCase,
    pub predicates: PredicateBundle,
    /// Measured |B(L)|.
    pub family_size: usize,
    /// Measured |A(L)|.
    pub orbit_size: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KleeneClassification {
    pub case: KleeneCase,
    pub predicates: PredicateBundle,
    /// Measured |E(L)|.
    pub family_size: usize,
    /// Measured |D(L)|.
    pub orbit_size: usize,
}

fn measured(lang: &Lang, mode: Mode) -> Result<(usize, usize)> {
    let family = generate_family(lang, mode)?.len();
    let orbit = generate_orbit(lang, mode)?.summary.total;
    Ok((family, orbit))
}

fn mismatch(label: String, expected: (usize, usize), found: (usize, usize)) -> Error {
    Error::Unclassifiable(format!(
        "case {label} predicts sizes {expected:?} but the orbit has {found:?}"
    ))
}

/// Classifies by the decision tree, then checks the case against the
/// measured sizes of B(L) and A(L).
pub fn classify_positive(lang: &Lang) -> Result<PositiveClassification> {
    let predicates = predicates(lang)?;
    let case = decide_positive(&predicates)?;
    let found = measured(lang, Mode::Positive)?;
    if found != case.sizes() {
        return Err(mismatch(case.to_string(), case.sizes(), found));
    }
    Ok(PositiveClassification {
        case,
        predicates,
        family_size: found.0,
        orbit_size: found.1,
    })
}

/// Kleene classification, checked against the measured sizes of E(L) and D(L).
pub fn classify_kleene(lang: &Lang) -> Result<KleeneClassification> {
    let predicates = predicates(lang)?;
    let case = KleeneCase::refine(decide_positive(&predicates)?, predicates.contains_epsilon);
    let found = measured(lang, Mode::Kleene)?;
    if found != case.sizes() {
        return Err(mismatch(case.to_string(), case.sizes(), found));
    }
    Ok(KleeneClassification {
        case,
        predicates,
        family_size: found.0,
        orbit_size: found.1,
    })
}

/// Case label and measured sizes for either mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub mode: Mode,
    pub label: String,
    pub predicates: PredicateBundle,
    pub family_size: usize,
    pub orbit_size: usize,
}

pub fn classify(lang: &Lang, mode: Mode) -> Result<Classification> {
    Ok(match mode {
        Mode::Positive => {
            let c = classify_positive(lang)?;
            Classification {
                mode,
                label: c.case.to_string(),
                predicates: c.predicates,
                family_size: c.family_size,
                orbit_size: c.orbit_size,
            }
        }
        Mode::Kleene => {
            let c = classify_kleene(lang)?;
            Classification {
                mode,
                label: c.case.to_string(),
                predicates: c.predicates,
                family_size: c.family_size,
                orbit_size: c.orbit_size,
            }
        }
    })
}
