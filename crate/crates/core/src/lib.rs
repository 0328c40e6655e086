//! Regular languages under complement and positive or Kleene closure.
//!
//! A language is held as a canonical minimal DFA ([`Lang`]), so equality of
//! values is equality of languages. From a language the crate generates the
//! orbit of all languages reachable by complement, closure and interior,
//! classifies it into one of nine positive (twelve Kleene) cases, and checks
//! the results against a bounded-length set oracle ([`horizon`]).
//!
//! ```
//! use klang_core::{classify_positive, Alphabet, Lang, PositiveCase};
//!
//! let sigma = Alphabet::new("ab").unwrap();
//! let l = Lang::parse("a|ab|bb", &sigma).unwrap();
//! let c = classify_positive(&l).unwrap();
//! assert_eq!(c.case, PositiveCase::C9);
//! assert_eq!((c.family_size, c.orbit_size), (5, 10));
//! ```

pub mod automata;
pub mod classify;
pub mod error;
pub mod export;
pub mod horizon;
pub mod lang;
pub mod orbit;
pub mod regex;
pub mod tables;
pub mod verify;

pub use automata::{canonical_from_regex, compile, determinize, minimize, CanonicalDfa, Dfa, Nfa};
pub use classify::{
    classify, classify_kleene, classify_positive, dual_of, predicates, Classification, KleeneCase,
    KleeneClassification, PositiveCase, PositiveClassification, PredicateBundle,
};
pub use error::{Error, Result};
pub use export::OrbitDocument;
pub use horizon::{HorizonLang, PredicateLang};
pub use lang::{parse_op_word, render_op_word, Lang, LangOp};
pub use orbit::{generate_orbit, Flags, Mode, OrbitGraph, OrbitOp};
pub use regex::{parse_regex, random_regex, render_regex, Alphabet, Regex};
pub use verify::{run_suite, Suite, SuiteReport, VerifyConfig};
