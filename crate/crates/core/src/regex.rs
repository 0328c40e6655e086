//! Regular expressions over an explicit finite alphabet.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term ('|' term)*
//! term   := factor+
//! factor := base ('*' | '+')*
//! base   := letter | '@' | '#' | '(' expr ')'
//! ```
//!
//! `@` denotes the empty word and `#` the empty language.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

const RESERVED: &[char] = &['@', '#', '|', '*', '+', '(', ')'];

/// Ordered set of distinct letters. Cloning is cheap.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    letters: Arc<[char]>,
}

impl Alphabet {
    /// Builds an alphabet from the characters of `letters`, sorted.
    pub fn new(letters: &str) -> Result<Self> {
        let mut chars: Vec<char> = letters.chars().collect();
        if chars.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet must be non-empty".into()));
        }
        if let Some(&c) = chars
            .iter()
            .find(|c| c.is_whitespace() || RESERVED.contains(c))
        {
            return Err(Error::InvalidAlphabet(format!("{c:?} is reserved")));
        }
        chars.sort_unstable();
        if let Some(w) = chars.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidAlphabet(format!(
                "duplicate letter {:?}",
                w[0]
            )));
        }
        Ok(Alphabet {
            letters: chars.into(),
        })
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.letters.binary_search(&c).ok()
    }

    pub fn letter(&self, index: usize) -> char {
        self.letters[index]
    }

    pub fn contains(&self, c: char) -> bool {
        self.index_of(c).is_some()
    }

    /// Maps a word to letter indices.
    pub fn encode(&self, word: &str) -> Result<Vec<usize>> {
        word.chars()
            .enumerate()
            .map(|(position, symbol)| {
                self.index_of(symbol)
                    .ok_or(Error::UnknownSymbol { symbol, position })
            })
            .collect()
    }

    pub fn decode(&self, word: &[usize]) -> String {
        word.iter().map(|&i| self.letters[i]).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Regex {
    EmptySet,
    Epsilon,
    Symbol(char),
    Union(Box<Regex>, Box<Regex>),
    Concat(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
    Plus(Box<Regex>),
}

impl Regex {
    pub fn union(left: Regex, right: Regex) -> Regex {
        Regex::Union(Box::new(left), Box::new(right))
    }

    pub fn concat(left: Regex, right: Regex) -> Regex {
        Regex::Concat(Box::new(left), Box::new(right))
    }

    pub fn star(inner: Regex) -> Regex {
        Regex::Star(Box::new(inner))
    }

    pub fn plus(inner: Regex) -> Regex {
        Regex::Plus(Box::new(inner))
    }

    pub fn depth(&self) -> usize {
        match self {
            Regex::EmptySet | Regex::Epsilon | Regex::Symbol(_) => 1,
            Regex::Union(l, r) | Regex::Concat(l, r) => 1 + l.depth().max(r.depth()),
            Regex::Star(x) | Regex::Plus(x) => 1 + x.depth(),
        }
    }

    /// Every literal in the tree, in left-to-right order.
    pub fn symbols(&self) -> Vec<char> {
        fn walk(r: &Regex, out: &mut Vec<char>) {
            match r {
                Regex::EmptySet | Regex::Epsilon => {}
                Regex::Symbol(c) => out.push(*c),
                Regex::Union(l, r) | Regex::Concat(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
                Regex::Star(x) | Regex::Plus(x) => walk(x, out),
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    /// Checks that every literal belongs to `alphabet`.
    pub fn check_alphabet(&self, alphabet: &Alphabet) -> Result<()> {
        match self.symbols().into_iter().find(|c| !alphabet.contains(*c)) {
            Some(symbol) => Err(Error::UnknownSymbol {
                symbol,
                position: 0,
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_regex(self))
    }
}

pub fn parse_regex(text: &str, alphabet: &Alphabet) -> Result<Regex> {
    let tokens: Vec<(usize, char)> = text
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.chars().count(),
        alphabet,
    };
    let ast = parser.expr()?;
    match parser.peek() {
        None => Ok(ast),
        Some((position, _)) => Err(Error::Syntax {
            position,
            expected: "'|', '*', '+', a letter, '@', '#', '(' or end of input".into(),
        }),
    }
}

struct Parser<'a> {
    tokens: Vec<(usize, char)>,
    pos: usize,
    end: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<(usize, char)> {
        self.tokens.get(self.pos).copied()
    }

    fn position(&self) -> usize {
        self.peek().map_or(self.end, |(p, _)| p)
    }

    fn starts_base(c: char) -> bool {
        !matches!(c, '|' | '*' | '+' | ')')
    }

    fn expr(&mut self) -> Result<Regex> {
        let mut acc = self.term()?;
        while let Some((_, '|')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = Regex::union(acc, rhs);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Regex> {
        let mut acc = self.factor()?;
        while let Some((_, c)) = self.peek() {
            if !Self::starts_base(c) {
                break;
            }
            let rhs = self.factor()?;
            acc = Regex::concat(acc, rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Regex> {
        let mut acc = self.base()?;
        while let Some((_, c)) = self.peek() {
            acc = match c {
                '*' => Regex::star(acc),
                '+' => Regex::plus(acc),
                _ => break,
            };
            self.pos += 1;
        }
        Ok(acc)
    }

    fn base(&mut self) -> Result<Regex> {
        let position = self.position();
        let Some((_, c)) = self.peek() else {
            return Err(Error::Syntax {
                position,
                expected: "a letter, '@', '#' or '('".into(),
            });
        };
        match c {
            '@' => {
                self.pos += 1;
                Ok(Regex::Epsilon)
            }
            '#' => {
                self.pos += 1;
                Ok(Regex::EmptySet)
            }
            '(' => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some((_, ')')) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(Error::Syntax {
                        position: self.position(),
                        expected: "')'".into(),
                    }),
                }
            }
            '|' | '*' | '+' | ')' => Err(Error::Syntax {
                position,
                expected: "a letter, '@', '#' or '('".into(),
            }),
            letter => {
                if !self.alphabet.contains(letter) {
                    return Err(Error::UnknownSymbol {
                        symbol: letter,
                        position,
                    });
                }
                self.pos += 1;
                Ok(Regex::Symbol(letter))
            }
        }
    }
}

/// Renders with the fewest parentheses that re-parse to the same tree.
pub fn render_regex(ast: &Regex) -> String {
    let mut out = String::new();
    render_into(ast, &mut out);
    out
}

fn render_into(ast: &Regex, out: &mut String) {
    fn wrapped(ast: &Regex, parens: bool, out: &mut String) {
        if parens {
            out.push('(');
            render_into(ast, out);
            out.push(')');
        } else {
            render_into(ast, out);
        }
    }
    match ast {
        Regex::EmptySet => out.push('#'),
        Regex::Epsilon => out.push('@'),
        Regex::Symbol(c) => out.push(*c),
        Regex::Union(l, r) => {
            wrapped(l, false, out);
            out.push('|');
            wrapped(r, matches!(**r, Regex::Union(..)), out);
        }
        Regex::Concat(l, r) => {
            wrapped(l, matches!(**l, Regex::Union(..)), out);
            wrapped(r, matches!(**r, Regex::Union(..) | Regex::Concat(..)), out);
        }
        Regex::Star(x) | Regex::Plus(x) => {
            wrapped(x, matches!(**x, Regex::Union(..) | Regex::Concat(..)), out);
            out.push(if matches!(ast, Regex::Star(_)) {
                '*'
            } else {
                '+'
            });
        }
    }
}

/// Seeded random expression of depth at most `max_depth` (a leaf has depth 1).
///
/// Below the root a node is a leaf with probability 3/10. Leaves are `#` or
/// `@` with probability 1/16 each, otherwise a uniform letter. Internal nodes
/// are union, concatenation, star and plus with weights 3, 4, 1, 1; star and
/// plus are kept rare because they quickly saturate to Σ* or Σ+.
pub fn random_regex(seed: u64, max_depth: usize, alphabet: &Alphabet) -> Regex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_node(&mut rng, max_depth.max(1), true, alphabet)
}

fn random_node(rng: &mut ChaCha8Rng, depth: usize, root: bool, alphabet: &Alphabet) -> Regex {
    if depth <= 1 || (!root && rng.gen_bool(0.3)) {
        return match rng.gen_range(0..16u32) {
            0 => Regex::EmptySet,
            1 => Regex::Epsilon,
            _ => Regex::Symbol(alphabet.letter(rng.gen_range(0..alphabet.len()))),
        };
    }
    let kind = rng.gen_range(0..9u32);
    let mut child = || random_node(rng, depth - 1, false, alphabet);
    match kind {
        0..=2 => Regex::union(child(), child()),
        3..=6 => Regex::concat(child(), child()),
        7 => Regex::star(child()),
        _ => Regex::plus(child()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new("ab").unwrap()
    }

    fn sym(c: char) -> Regex {
        Regex::Symbol(c)
    }

    #[test]
    fn alphabet_is_sorted_and_validated() {
        let a = Alphabet::new("ba").unwrap();
        assert_eq!(a.letters(), &['a', 'b']);
        assert!(Alphabet::new("").is_err());
        assert!(Alphabet::new("aa").is_err());
        assert!(Alphabet::new("a@").is_err());
        assert!(Alphabet::new("a b").is_err());
    }

    #[test]
    fn parses_union_of_concats() {
        let a = Alphabet::new("a").unwrap();
        let ast = parse_regex("a|aaa", &a).unwrap();
        let aaa = Regex::concat(Regex::concat(sym('a'), sym('a')), sym('a'));
        assert_eq!(ast, Regex::union(sym('a'), aaa));
    }

    #[test]
    fn parses_reserved_tokens() {
        let a = Alphabet::new("a").unwrap();
        assert_eq!(parse_regex("#", &a).unwrap(), Regex::EmptySet);
        assert_eq!(parse_regex("@", &a).unwrap(), Regex::Epsilon);
        assert_eq!(
            parse_regex("(a|b)*", &ab()).unwrap(),
            Regex::star(Regex::union(sym('a'), sym('b')))
        );
    }

    #[test]
    fn postfix_operators_stack() {
        let ast = parse_regex(" a + * ", &ab()).unwrap();
        assert_eq!(ast, Regex::star(Regex::plus(sym('a'))));
    }

    #[test]
    fn reports_syntax_errors_with_position() {
        let err = parse_regex("a|", &ab()).unwrap_err();
        assert!(matches!(err, Error::Syntax { position: 2, .. }), "{err:?}");
        let err = parse_regex("(ab", &ab()).unwrap_err();
        assert!(matches!(err, Error::Syntax { position: 3, .. }), "{err:?}");
        let err = parse_regex("ab)", &ab()).unwrap_err();
        assert!(matches!(err, Error::Syntax { position: 2, .. }), "{err:?}");
        let err = parse_regex("*a", &ab()).unwrap_err();
        assert!(matches!(err, Error::Syntax { position: 0, .. }), "{err:?}");
        let err = parse_regex("", &ab()).unwrap_err();
        assert!(matches!(err, Error::Syntax { position: 0, .. }), "{err:?}");
    }

    #[test]
    fn rejects_letters_outside_alphabet() {
        let err = parse_regex("a|c", &ab()).unwrap_err();
        assert_eq!(
            err,
            Error::UnknownSymbol {
                symbol: 'c',
                position: 2
            }
        );
    }

    #[test]
    fn renders_minimal_parentheses() {
        assert_eq!(
            render_regex(&Regex::union(sym('a'), Regex::concat(sym('a'), sym('b')))),
            "a|ab"
        );
        assert_eq!(render_regex(&Regex::EmptySet), "#");
        assert_eq!(render_regex(&Regex::plus(sym('a'))), "a+");
        assert_eq!(
            render_regex(&Regex::concat(sym('a'), Regex::concat(sym('b'), sym('a')))),
            "a(ba)"
        );
        assert_eq!(
            render_regex(&Regex::union(Regex::union(sym('a'), sym('b')), sym('a'))),
            "a|b|a"
        );
        assert_eq!(
            render_regex(&Regex::star(Regex::concat(sym('a'), sym('b')))),
            "(ab)*"
        );
    }

    #[test]
    fn random_regex_is_deterministic_and_bounded() {
        let t1 = random_regex(7, 3, &ab());
        let t2 = random_regex(7, 3, &ab());
        assert_eq!(t1, t2);
        assert!(t1.depth() <= 3);
        let distinct = (0..20u64)
            .map(|s| random_regex(s, 3, &ab()))
            .collect::<std::collections::HashSet<_>>();
        assert!(distinct.len() > 5);
    }

    #[test]
    fn random_regex_output_is_pinned() {
        let rendered: Vec<String> = [1, 2, 3]
            .iter()
            .map(|&s| render_regex(&random_regex(s, 5, &ab())))
            .collect();
        assert_eq!(rendered, ["bb", "a|(@|(b*|#b))", "a*+"]);
    }

    #[test]
    fn random_regex_reaches_every_variant() {
        let mut seen = [false; 7];
        for seed in 0..500 {
            fn mark(r: &Regex, seen: &mut [bool; 7]) {
                let idx = match r {
                    Regex::EmptySet => 0,
                    Regex::Epsilon => 1,
                    Regex::Symbol(_) => 2,
                    Regex::Union(left, right) => {
                        mark(left, seen);
                        mark(right, seen);
                        3
                    }
                    Regex::Concat(left, right) => {
                        mark(left, seen);
                        mark(right, seen);
                        4
                    }
                    Regex::Star(x) => {
                        mark(x, seen);
                        5
                    }
                    Regex::Plus(x) => {
                        mark(x, seen);
                        6
                    }
                };
                seen[idx] = true;
            }
            mark(&random_regex(seed, 4, &ab()), &mut seen);
        }
        assert!(seen.iter().all(|&s| s), "{seen:?}");
    }
}
