//! Property suites run over seeded random languages and the reference
//! tables. Each suite returns a report with one line per check; a failing
//! instance records the seed and alphabet needed to replay it.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;

use crate::classify::{classify_kleene, classify_positive, dual_of, PositiveCase};
use crate::error::Result;
use crate::horizon::{
    check_clopen_predicate, cross_validate_all, lattice_check, lattice_check_layered, ClopenCheck,
    PredicateLang,
};
use crate::lang::{render_op_word, sandwich_check, Lang, LangOp};
use crate::orbit::{
    generate_b, generate_e, generate_family, generate_orbit, kleene_family_from_positive,
    verify_compact_identity, verify_kuratowski_identity, verify_phi, Flags, Mode,
};
use crate::regex::{random_regex, render_regex, Alphabet};
use crate::tables::{
    CASE4_NOTE, KLEENE_TABLE, POSITIVE_TABLE, PRINTED_CASE4_EXAMPLE, PRINTED_KLEENE_ROWS,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Axioms,
    Table1,
    Table2,
    Equations,
    Lemma1,
    Unary,
    Oracle,
    Example1,
    Examples,
    Orbits,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Axioms,
        Suite::Table1,
        Suite::Table2,
        Suite::Equations,
        Suite::Lemma1,
        Suite::Unary,
        Suite::Oracle,
        Suite::Example1,
        Suite::Examples,
        Suite::Orbits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Table1 => "table1",
            Suite::Table2 => "table2",
            Suite::Equations => "equations",
            Suite::Lemma1 => "lemma1",
            Suite::Unary => "unary",
            Suite::Oracle => "oracle",
            Suite::Example1 => "example1",
            Suite::Examples => "examples",
            Suite::Orbits => "orbits",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub samples: usize,
    pub seed: u64,
    pub horizon: usize,
    /// Depth bound for random expressions.
    pub depth: usize,
    pub alphabets: Vec<Alphabet>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            samples: 1000,
            seed: 1,
            horizon: 8,
            depth: 5,
            alphabets: vec![
                Alphabet::new("a").expect("valid"),
                Alphabet::new("ab").expect("valid"),
            ],
        }
    }
}

impl VerifyConfig {
    fn sample_seeds(&self) -> Vec<(Alphabet, u64)> {
        self.alphabets
            .iter()
            .flat_map(|a| (0..self.samples as u64).map(move |i| (a.clone(), self.seed + i)))
            .collect()
    }
}

/// Seeded random language with a description of it. Odd seeds take the
/// complement of the expression, so dual cases are sampled as often as
/// their counterparts.
pub fn sample_lang(alphabet: &Alphabet, seed: u64, depth: usize) -> Result<(String, Lang)> {
    let ast = random_regex(seed, depth, alphabet);
    let lang = Lang::from_regex(&ast, alphabet)?;
    Ok(if seed % 2 == 1 {
        (
            format!("complement of {}", render_regex(&ast)),
            lang.complement(),
        )
    } else {
        (render_regex(&ast), lang)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub seed: Option<u64>,
    pub alphabet: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            let ok = check.instances - check.failures.len().min(check.instances);
            out.push_str(&format!(
                "{} {}: {}/{}\n",
                if check.passed() { "PASS" } else { "FAIL" },
                check.name,
                ok,
                check.instances
            ));
            for f in &check.failures {
                match f.seed {
                    Some(seed) => out.push_str(&format!(
                        "    replay: --seed {seed} --alphabet {} ({})\n",
                        f.alphabet, f.detail
                    )),
                    None => out.push_str(&format!("    {}: {}\n", f.alphabet, f.detail)),
                }
            }
        }
        for note in &self.notes {
            out.push_str(note);
            out.push('\n');
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        out.push_str(&format!(
            "suite {}: {}/{} checks passed\n",
            self.suite,
            passed,
            self.checks.len()
        ));
        out
    }
}

/// Outcome of one instance: `Ok(())` or a failure description.
type Outcome = std::result::Result<(), String>;

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

fn flatten(r: Result<Outcome>) -> Outcome {
    r.unwrap_or_else(|e| Err(format!("error: {e}")))
}

/// Runs `f` on every sampled language, in parallel, keeping seed order.
fn sampled(
    name: &str,
    cfg: &VerifyConfig,
    f: impl Fn(&Lang, &Alphabet, u64) -> Result<Outcome> + Sync,
) -> Check {
    let seeds = cfg.sample_seeds();
    let failures: Vec<Failure> = seeds
        .par_iter()
        .filter_map(|(alphabet, seed)| {
            let outcome = sample_lang(alphabet, *seed, cfg.depth).map(|(text, l)| {
                flatten(f(&l, alphabet, *seed)).map_err(|d| format!("{text}: {d}"))
            });
            match flatten(outcome) {
                Ok(()) => None,
                Err(detail) => Some(Failure {
                    seed: Some(*seed),
                    alphabet: alphabet.to_string(),
                    detail,
                }),
            }
        })
        .collect();
    Check {
        name: name.to_string(),
        instances: seeds.len(),
        failures,
    }
}

/// Runs `f` on a fixed list of named instances.
fn canned<T: Sync>(
    name: &str,
    items: &[T],
    label: impl Fn(&T) -> String + Sync,
    f: impl Fn(&T) -> Result<Outcome> + Sync,
) -> Check {
    let failures = items
        .par_iter()
        .filter_map(|item| match flatten(f(item)) {
            Ok(()) => None,
            Err(detail) => Some(Failure {
                seed: None,
                alphabet: label(item),
                detail,
            }),
        })
        .collect();
    Check {
        name: name.to_string(),
        instances: items.len(),
        failures,
    }
}

/// A second language drawn from a disjoint seed stream.
fn partner(alphabet: &Alphabet, seed: u64, depth: usize) -> Result<Lang> {
    Ok(sample_lang(alphabet, seed.wrapping_add(0x9e37_79b9), depth)?.1)
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let (checks, notes) = match suite {
        Suite::Axioms => (axioms(cfg), Vec::new()),
        Suite::Table1 => table1(),
        Suite::Table2 => table2(),
        Suite::Equations => (equations(cfg), Vec::new()),
        Suite::Lemma1 => (lemma1(cfg), Vec::new()),
        Suite::Unary => unary(cfg)?,
        Suite::Oracle => (oracle(cfg), Vec::new()),
        Suite::Example1 => (example1(cfg), Vec::new()),
        Suite::Examples => (examples(cfg), Vec::new()),
        Suite::Orbits => orbits(cfg)?,
    };
    Ok(SuiteReport {
        suite,
        checks,
        notes,
    })
}

fn axioms(cfg: &VerifyConfig) -> Vec<Check> {
    let d = cfg.depth;
    vec![
        sampled(
            "closures are extensive, isotone and idempotent",
            cfg,
            |l, a, s| {
                let m = l.union(&partner(a, s, d)?)?;
                for op in [LangOp::Plus, LangOp::Star] {
                    let c = l.apply(op)?;
                    if !l.is_subset(&c)? {
                        return Ok(Err(format!("L ⊄ L^{op}")));
                    }
                    if c.apply(op)? != c {
                        return Ok(Err(format!("L^{op}{op} ≠ L^{op}")));
                    }
                    if !c.is_subset(&m.apply(op)?)? {
                        return Ok(Err(format!("L ⊆ M but L^{op} ⊄ M^{op}")));
                    }
                }
                Ok(Ok(()))
            },
        ),
        sampled(
            "interiors are intensive, isotone and idempotent",
            cfg,
            |l, a, s| {
                let m = l.intersection(&partner(a, s, d)?)?;
                for op in [LangOp::PositiveInterior, LangOp::KleeneInterior] {
                    let i = l.apply(op)?;
                    if !i.is_subset(l)? {
                        return Ok(Err(format!("L^{op} ⊄ L")));
                    }
                    if i.apply(op)? != i {
                        return Ok(Err(format!("L^{op}{op} ≠ L^{op}")));
                    }
                    if !m.apply(op)?.is_subset(&i)? {
                        return Ok(Err(format!("M ⊆ L but M^{op} ⊄ L^{op}")));
                    }
                }
                Ok(Ok(()))
            },
        ),
        sampled("closure and interior are dual", cfg, |l, _, _| {
            let i = l.positive_interior()?;
            Ok(
                ensure(i.complement() == l.complement().plus_closure()?, || {
                    "complement of L⊕ ≠ (L^-)+".into()
                })
                .and(ensure(
                    l.star_closure()? == l.plus_closure()?.add_epsilon(),
                    || "L* ≠ L+ ∪ {ε}".into(),
                ))
                .and(ensure(l.kleene_interior()? == i.remove_epsilon(), || {
                    "L⊛ ≠ L⊕ \\ {ε}".into()
                })),
            )
        }),
        sampled("open iff no split into two non-members", cfg, |l, _, _| {
            let (a, b) = (l.is_open()?, l.is_open_split_check()?);
            Ok(ensure(a == b, || {
                format!("fixpoint says {a}, split check says {b}")
            }))
        }),
        sampled("closed iff closed under concatenation", cfg, |l, _, _| {
            let (a, b) = (l.is_closed()?, l.is_closed_semigroup_check()?);
            Ok(ensure(a == b, || {
                format!("fixpoint says {a}, semigroup check says {b}")
            }))
        }),
        sampled("positive closure preserves openness", cfg, |l, _, _| {
            Ok(ensure(
                !l.is_open()? || l.plus_closure()?.is_open()?,
                || "L open but L+ not open".into(),
            ))
        }),
        sampled("L^{+⊕} and L^{⊕+} are clopen", cfg, |l, _, _| {
            let pi = l.plus_closure()?.positive_interior()?;
            let ip = l.positive_interior()?.plus_closure()?;
            Ok(ensure(pi.is_clopen()? && ip.is_clopen()?, || {
                "mixed closure-interior not clopen".into()
            })
            .and(ensure(
                !l.is_open()? || l.plus_closure()?.is_clopen()?,
                || "L open but L+ not clopen".into(),
            ))
            .and(ensure(
                !l.is_closed()? || l.positive_interior()?.is_clopen()?,
                || "L closed but L⊕ not clopen".into(),
            )))
        }),
        sampled(
            "positive and Kleene closedness correspond via ε",
            cfg,
            |l, _, _| {
                let closed = l.is_closed()?;
                let with = l.add_epsilon();
                let kleene_closed = with.star_closure()? == with;
                let open = l.is_open()?;
                let without = l.remove_epsilon();
                let kleene_open = without.kleene_interior()? == without;
                Ok(ensure(closed == kleene_closed, || {
                    format!("closed={closed} but L ∪ {{ε}} Kleene-closed={kleene_closed}")
                })
                .and(ensure(open == kleene_open, || {
                    format!("open={open} but L \\ {{ε}} Kleene-open={kleene_open}")
                })))
            },
        ),
        sampled("union and intersection laws", cfg, |l, a, s| {
            let m = partner(a, s, d)?;
            let (lp, mp) = (l.plus_closure()?, m.plus_closure()?);
            let (li, mi) = (l.positive_interior()?, m.positive_interior()?);
            let union_plus = l.union(&m)?.plus_closure()?;
            let inter = l.intersection(&m)?;
            Ok(ensure(union_plus == lp.union(&mp)?.plus_closure()?, || {
                "(L∪M)+ ≠ (L+ ∪ M+)+".into()
            })
            .and(ensure(
                inter.plus_closure()?.is_subset(&lp.intersection(&mp)?)?,
                || "(L∩M)+ ⊄ L+ ∩ M+".into(),
            ))
            .and(ensure(
                inter.positive_interior()? == li.intersection(&mi)?.positive_interior()?,
                || "(L∩M)⊕ ≠ (L⊕ ∩ M⊕)⊕".into(),
            ))
            .and(ensure(
                li.union(&mi)?
                    .is_subset(&l.union(&m)?.positive_interior()?)?,
                || "L⊕ ∪ M⊕ ⊄ (L∪M)⊕".into(),
            )))
        }),
        sampled(
            "closed sets meet to closed, open sets join to open",
            cfg,
            |l, a, s| {
                let m = partner(a, s, d)?;
                let (lc, mc) = (l.plus_closure()?, m.plus_closure()?);
                let (lo, mo) = (l.positive_interior()?, m.positive_interior()?);
                Ok(ensure(lc.intersection(&mc)?.is_closed()?, || {
                    "L+ ∩ M+ not closed".into()
                })
                .and(ensure(lo.union(&mo)?.is_open()?, || {
                    "L⊕ ∪ M⊕ not open".into()
                })))
            },
        ),
        sampled("open sandwich forces clopen closure", cfg, |l, a, s| {
            let plus = l.plus_closure()?;
            let expected = plus.is_clopen()?;
            if sandwich_check(l, &plus)? != expected {
                return Ok(Err("M = L+ sandwich disagrees with L+ clopen".into()));
            }
            // a candidate between L and L+: L ∪ (M ∩ L+)
            let m = l.union(&partner(a, s, d)?.intersection(&plus)?)?;
            sandwich_check(l, &m)?;
            Ok(Ok(()))
        }),
    ]
}

fn table1() -> (Vec<Check>, Vec<String>) {
    let mut checks = vec![canned(
        "rows classify with the listed sizes",
        &POSITIVE_TABLE,
        |row| format!("case {} {}", row.case, row.example.describe()),
        |row| {
            let c = classify_positive(&row.example.lang()?)?;
            Ok(ensure(
                c.case == row.case && (c.family_size, c.orbit_size) == (row.family, row.orbit),
                || {
                    format!(
                        "got case {} with |B|={}, |A|={}",
                        c.case, c.family_size, c.orbit_size
                    )
                },
            ))
        },
    )];
    checks.push(canned(
        "complements classify as the dual case",
        &POSITIVE_TABLE,
        |row| format!("case {}", row.case),
        |row| {
            let c = classify_positive(&row.example.lang()?.complement())?;
            Ok(ensure(c.case == dual_of(row.case), || {
                format!("complement is case {}", c.case)
            }))
        },
    ));
    checks.push(canned(
        "printed case (4) example a|aaa is open (case (2))",
        &[PRINTED_CASE4_EXAMPLE],
        |e| e.describe(),
        |e| {
            let c = classify_positive(&e.lang()?)?;
            Ok(ensure(c.case == PositiveCase::C2, || {
                format!("got {}", c.case)
            }))
        },
    ));
    (checks, vec![CASE4_NOTE.to_string()])
}

fn table2() -> (Vec<Check>, Vec<String>) {
    let checks = vec![
        canned(
            "rows classify with the listed sizes",
            &KLEENE_TABLE,
            |row| format!("case {} {}", row.case, row.example.describe()),
            |row| {
                let c = classify_kleene(&row.example.lang()?)?;
                Ok(ensure(
                    c.case == row.case && (c.family_size, c.orbit_size) == (row.family, row.orbit),
                    || {
                        format!(
                            "got case {} with |E|={}, |D|={}",
                            c.case, c.family_size, c.orbit_size
                        )
                    },
                ))
            },
        ),
        canned(
            "Kleene case refines the positive case",
            &KLEENE_TABLE,
            |row| format!("case {}", row.case),
            |row| {
                let l = row.example.lang()?;
                let (k, p) = (classify_kleene(&l)?, classify_positive(&l)?);
                Ok(ensure(k.case.positive() == p.case, || {
                    format!("Kleene {} vs positive {}", k.case, p.case)
                }))
            },
        ),
    ];
    let mut notes = Vec::new();
    for printed in PRINTED_KLEENE_ROWS {
        let computed = printed.example.lang().and_then(|l| classify_kleene(&l));
        notes.push(match computed {
            Ok(c) => format!(
                "table discrepancy: published row ({}) lists {} with |E|={}, |D|={}; computed case {} with |E|={}, |D|={}",
                printed.label,
                printed.example.regex,
                printed.printed_family,
                printed.printed_orbit,
                c.case,
                c.family_size,
                c.orbit_size
            ),
            Err(e) => format!("table discrepancy row ({}): {e}", printed.label),
        });
    }
    (checks, notes)
}

fn equations(cfg: &VerifyConfig) -> Vec<Check> {
    vec![
        sampled("c-c-c-c = c-c for positive closure", cfg, |l, _, _| {
            Ok(ensure(
                verify_kuratowski_identity(l, Mode::Positive)?,
                || "fails".into(),
            ))
        }),
        sampled("c-c-c-c = c-c for Kleene closure", cfg, |l, _, _| {
            Ok(ensure(verify_kuratowski_identity(l, Mode::Kleene)?, || {
                "fails".into()
            }))
        }),
        sampled("c-c-c = c-c- for positive closure", cfg, |l, _, _| {
            Ok(ensure(verify_compact_identity(l, Mode::Positive)?, || {
                "fails".into()
            }))
        }),
        canned(
            "Kleene closure violates c-c-c = c-c- on {a}",
            &["a"],
            |t| format!("{t} over {{a}}"),
            |t| {
                let l = Lang::parse(t, &Alphabet::new("a")?)?;
                let star_word = |w: &str| l.apply_word(&crate::lang::parse_op_word(w)?);
                let long = star_word("*-*-*")?;
                let short = star_word("*-*-")?;
                let a = Alphabet::new("a")?;
                Ok(ensure(
                    !verify_compact_identity(&l, Mode::Kleene)?
                        && long == Lang::parse("a*", &a)?
                        && short == Lang::parse("a+", &a)?,
                    || "expected a^{*-*-*} = a* and a^{*-*-} = a+".into(),
                ))
            },
        ),
    ]
}

fn lemma1(cfg: &VerifyConfig) -> Vec<Check> {
    vec![
        sampled(
            "clopen L+ and L⊕ force L open or closed",
            cfg,
            |l, _, _| {
                let both = l.plus_closure()?.is_clopen()? && l.positive_interior()?.is_clopen()?;
                Ok(ensure(!both || l.is_open()? || l.is_closed()?, || {
                    "counterexample".into()
                }))
            },
        ),
        sampled(
            "E(L) rebuilt from B(L) when L is neither open nor closed",
            cfg,
            |l, _, _| {
                let f = Flags::of(l)?;
                if f.open || f.closed {
                    return Ok(Ok(()));
                }
                let e: HashSet<Lang> = generate_e(l)?.into_iter().collect();
                Ok(ensure(e == kleene_family_from_positive(l)?, || {
                    "reconstruction differs".into()
                }))
            },
        ),
    ]
}

fn unary(cfg: &VerifyConfig) -> Result<(Vec<Check>, Vec<String>)> {
    let unary_cfg = VerifyConfig {
        alphabets: vec![Alphabet::new("a")?],
        ..cfg.clone()
    };
    let mut checks = vec![sampled(
        "unary orbits have at most 6 languages and cases (1)-(5)",
        &unary_cfg,
        |l, _, _| {
            let c = classify_positive(l)?;
            Ok(ensure(
                c.orbit_size <= 6 && c.case <= PositiveCase::C5,
                || format!("|A|={} case {}", c.orbit_size, c.case),
            ))
        },
    )];
    checks.push(canned(
        "unary witness reaches 6",
        &["a|aaaa", "aa"],
        |t| format!("{t} over {{a}}"),
        |t| {
            let c = classify_positive(&Lang::parse(t, &Alphabet::new("a")?)?)?;
            Ok(ensure(c.orbit_size == 6, || {
                format!("|A|={}", c.orbit_size)
            }))
        },
    ));
    Ok((checks, Vec::new()))
}

fn oracle(cfg: &VerifyConfig) -> Vec<Check> {
    let positive = [LangOp::Complement, LangOp::Plus, LangOp::PositiveInterior];
    let kleene = [LangOp::Complement, LangOp::Star, LangOp::KleeneInterior];
    let mut checks = Vec::new();
    for (name, ops) in [
        (
            "automata agree with truncation on words over {-,+,⊕}",
            positive,
        ),
        (
            "automata agree with truncation on words over {-,*,⊛}",
            kleene,
        ),
    ] {
        checks.push(sampled(name, cfg, |l, _, _| {
            Ok(match cross_validate_all(l, &ops, 5, cfg.horizon)? {
                None => Ok(()),
                Some(word) => Err(format!("word {} disagrees", render_op_word(&word))),
            })
        }));
    }
    let lattices: Vec<(String, usize)> = [("a", 4), ("ab", 0), ("ab", 1), ("ab", 2), ("ab", 3)]
        .iter()
        .map(|&(a, n)| (a.to_string(), n))
        .collect();
    checks.push(canned(
        "truncated closure/interior match the subset lattice",
        &lattices,
        |(a, n)| format!("Σ={{{a}}} n={n}"),
        |(a, n)| {
            let r = lattice_check(&Alphabet::new(a)?, *n)?;
            Ok(ensure(r.passed(), || format!("{r:?}")))
        },
    ));
    checks.push(canned(
        "layered lattice check at Σ={a,b}, n=4",
        &["ab"],
        |a| format!("Σ={{{a}}} n=4"),
        |a| {
            let r = lattice_check_layered(&Alphabet::new(a)?, 4)?;
            Ok(ensure(r.passed(), || {
                format!(
                    "{} closure, {} interior, {} split failures",
                    r.closure_failures.len(),
                    r.interior_failures.len(),
                    r.split_failures.len()
                )
            }))
        },
    ));
    checks
}

/// Every choice of Σ1, Σ2 ⊆ {a,b} and k ∈ {0,1,2,3}.
pub fn example1_instances() -> Vec<(Vec<char>, Vec<char>, u32)> {
    let subsets: [&[char]; 4] = [&[], &['a'], &['b'], &['a', 'b']];
    let mut out = Vec::new();
    for first in subsets {
        for second in subsets {
            for k in 0..4 {
                out.push((first.to_vec(), second.to_vec(), k));
            }
        }
    }
    out
}

fn example1(cfg: &VerifyConfig) -> Vec<Check> {
    let horizon = cfg.horizon.min(6);
    vec![
        canned(
            "|w|_1 < k|w|_2 is clopen",
            &example1_instances(),
            |(f, s, k)| format!("Σ1={f:?} Σ2={s:?} k={k} n={horizon}"),
            |(f, s, k)| {
                let p = PredicateLang::new(&Alphabet::new("ab")?, f, s, *k)?;
                let check = check_clopen_predicate(&p, horizon)?;
                Ok(ensure(check.is_clopen(), || format!("{check:?}")))
            },
        ),
        canned(
            "|w|_a < |w|_b + 2 is not closed: a, a ∈ L but aa ∉ L",
            &[2u32],
            |offset| format!("offset {offset}"),
            |&offset| {
                let p = PredicateLang::new(&Alphabet::new("ab")?, &['a'], &['b'], 1)?
                    .with_offset(offset);
                Ok(match check_clopen_predicate(&p, 4)? {
                    ClopenCheck::Violation(w) if w.u == "a" && w.v == "a" && w.in_language => {
                        Ok(())
                    }
                    other => Err(format!("{other:?}")),
                })
            },
        ),
    ]
}

fn examples(cfg: &VerifyConfig) -> Vec<Check> {
    vec![
        sampled("prefix and suffix closures are open", cfg, |l, _, _| {
            let p = l.prefix_closure();
            let s = l.suffix_closure()?;
            Ok(ensure(p.is_open()? && p.is_open_split_check()?, || {
                "prefix closure not open".into()
            })
            .and(ensure(s.is_open()? && s.is_open_split_check()?, || {
                "suffix closure not open".into()
            })))
        }),
        sampled(
            "left, right and two-sided ideals are closed",
            cfg,
            |l, _, _| {
                for (name, ideal) in [
                    ("left", l.left_ideal()?),
                    ("right", l.right_ideal()?),
                    ("two-sided", l.two_sided_ideal()?),
                ] {
                    if !(ideal.is_closed()? && ideal.is_closed_semigroup_check()?) {
                        return Ok(Err(format!("{name} ideal not closed")));
                    }
                }
                Ok(Ok(()))
            },
        ),
        canned(
            "(aa)+ ∪ (aaa)+ is a proper subset of (aa|aaa)+",
            &["a"],
            |a| format!("Σ={{{a}}}"),
            |a| {
                let a = Alphabet::new(a)?;
                let left = Lang::parse("(aa)+", &a)?.union(&Lang::parse("(aaa)+", &a)?)?;
                let right = Lang::parse("aa|aaa", &a)?.plus_closure()?;
                Ok(ensure(
                    left.is_proper_subset(&right)?
                        && right.accepts("aaaaa")?
                        && !left.accepts("aaaaa")?,
                    || "not a proper subset".into(),
                ))
            },
        ),
    ]
}

fn orbits(cfg: &VerifyConfig) -> Result<(Vec<Check>, Vec<String>)> {
    let mut checks = Vec::new();
    for mode in [Mode::Positive, Mode::Kleene] {
        let (fam, orb) = mode.family_names();
        checks.push(sampled(
            &format!(
                "{mode} orbit within bound {}, |{orb}| = 2|{fam}|, closed under ops",
                mode.orbit_bound()
            ),
            cfg,
            move |l, _, _| {
                let g = generate_orbit(l, mode)?;
                let family = generate_family(l, mode)?;
                let family_set: HashSet<&Lang> = family.iter().collect();
                let marked: HashSet<&Lang> = g.family().map(|n| &n.lang).collect();
                Ok(ensure(g.summary.total <= mode.orbit_bound(), || {
                    format!("|{orb}|={}", g.summary.total)
                })
                .and(ensure(g.summary.total == 2 * family.len(), || {
                    format!("|{orb}|={} |{fam}|={}", g.summary.total, family.len())
                }))
                .and(ensure(family_set == marked, || {
                    "even-parity nodes differ from the closure-interior family".into()
                }))
                .and(ensure(g.is_closed_under_ops()?, || {
                    "orbit not closed".into()
                })))
            },
        ));
    }
    checks.push(sampled(
        "L⊕ lies in every member of B(L)",
        cfg,
        |l, _, _| {
            let i = l.positive_interior()?;
            for m in generate_b(l)? {
                if !i.is_subset(&m)? {
                    return Ok(Err("L⊕ ⊄ M".into()));
                }
            }
            Ok(Ok(()))
        },
    ));
    checks.push(sampled(
        "complement classifies as the dual case",
        cfg,
        |l, _, _| {
            let (c, d) = (classify_positive(l)?, classify_positive(&l.complement())?);
            Ok(ensure(d.case == dual_of(c.case), || {
                format!("{} vs complement {}", c.case, d.case)
            }))
        },
    ));
    checks.push(sampled(
        "Kleene case refines positive case",
        cfg,
        |l, _, _| {
            let (k, p) = (classify_kleene(l)?, classify_positive(l)?);
            Ok(ensure(k.case.positive() == p.case, || {
                format!("Kleene {} vs positive {}", k.case, p.case)
            }))
        },
    ));
    checks.push(sampled(
        "phi commutes with closure and interior",
        cfg,
        |l, _, _| Ok(ensure(verify_phi(l)?, || "phi fails".into())),
    ));
    checks.push(canned(
        "bounds 10 and 14 are reached",
        &[("a|ab|bb", "ab")],
        |(t, a)| format!("{t} over {{{a}}}"),
        |(t, a)| {
            let l = Lang::parse(t, &Alphabet::new(a)?)?;
            let (pa, kd) = (
                generate_orbit(&l, Mode::Positive)?,
                generate_orbit(&l, Mode::Kleene)?,
            );
            Ok(ensure(
                pa.summary.total == 10 && kd.summary.total == 14,
                || format!("|A|={} |D|={}", pa.summary.total, kd.summary.total),
            ))
        },
    ));
    Ok((checks, Vec::new()))
}
