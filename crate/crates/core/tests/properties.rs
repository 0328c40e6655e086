use std::collections::{BTreeSet, HashMap, VecDeque};

use klang_core::export::TransitionTable;
use klang_core::horizon::HorizonLang;
use klang_core::{
    minimize, parse_regex, random_regex, render_regex, Alphabet, Dfa, Lang, Mode, OrbitDocument,
    Regex,
};
use proptest::prelude::*;

/// End positions reachable by matching `r` from any of `starts`.
fn ends(r: &Regex, w: &[char], starts: &BTreeSet<usize>) -> BTreeSet<usize> {
    match r {
        Regex::EmptySet => BTreeSet::new(),
        Regex::Epsilon => starts.clone(),
        Regex::Symbol(c) => starts
            .iter()
            .filter(|&&i| w.get(i) == Some(c))
            .map(|i| i + 1)
            .collect(),
        Regex::Union(a, b) => {
            let mut out = ends(a, w, starts);
            out.extend(ends(b, w, starts));
            out
        }
        Regex::Concat(a, b) => ends(b, w, &ends(a, w, starts)),
        Regex::Star(a) => {
            let mut out = starts.clone();
            out.extend(ends(&Regex::Plus(a.clone()), w, starts));
            out
        }
        Regex::Plus(a) => {
            let mut out = BTreeSet::new();
            let mut frontier = ends(a, w, starts);
            while !frontier.is_subset(&out) {
                out.extend(frontier.iter().copied());
                frontier = ends(a, w, &frontier);
            }
            out
        }
    }
}

fn interpret(r: &Regex, word: &str) -> bool {
    let w: Vec<char> = word.chars().collect();
    ends(r, &w, &BTreeSet::from([0])).contains(&w.len())
}

fn words_upto(alphabet: &Alphabet, n: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|w| alphabet.letters().iter().map(move |c| format!("{w}{c}")))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Moore partition refinement of the reachable part, renumbered breadth-first.
fn moore_table(dfa: &Dfa) -> TransitionTable {
    let k = dfa.alphabet().len();
    let mut reach = vec![dfa.start()];
    let mut seen = vec![false; dfa.state_count()];
    seen[dfa.start()] = true;
    let mut i = 0;
    while i < reach.len() {
        for c in 0..k {
            let t = dfa.next(reach[i], c);
            if !seen[t] {
                seen[t] = true;
                reach.push(t);
            }
        }
        i += 1;
    }
    let mut class: HashMap<usize, usize> = reach
        .iter()
        .map(|&q| (q, dfa.is_accepting(q) as usize))
        .collect();
    loop {
        let mut ids: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let refined: HashMap<usize, usize> = reach
            .iter()
            .map(|&q| {
                let sig = (class[&q], (0..k).map(|c| class[&dfa.next(q, c)]).collect());
                let fresh = ids.len();
                (q, *ids.entry(sig).or_insert(fresh))
            })
            .collect();
        let before: BTreeSet<usize> = class.values().copied().collect();
        let after: BTreeSet<usize> = refined.values().copied().collect();
        class = refined;
        if before.len() == after.len() {
            break;
        }
    }
    // pick a representative per class and number classes breadth-first
    let rep: HashMap<usize, usize> = reach.iter().rev().map(|&q| (class[&q], q)).collect();
    let mut number: HashMap<usize, usize> = HashMap::from([(class[&dfa.start()], 0)]);
    let mut queue = VecDeque::from([class[&dfa.start()]]);
    let mut order = Vec::new();
    while let Some(cl) = queue.pop_front() {
        order.push(cl);
        for c in 0..k {
            let t = class[&dfa.next(rep[&cl], c)];
            if !number.contains_key(&t) {
                number.insert(t, number.len());
                queue.push_back(t);
            }
        }
    }
    TransitionTable {
        states: order.len(),
        start: 0,
        accepting: order
            .iter()
            .enumerate()
            .filter(|(_, cl)| dfa.is_accepting(rep[cl]))
            .map(|(i, _)| i)
            .collect(),
        transitions: order
            .iter()
            .map(|cl| {
                (0..k)
                    .map(|c| number[&class[&dfa.next(rep[cl], c)]])
                    .collect()
            })
            .collect(),
    }
}

fn arb_alphabet() -> impl Strategy<Value = Alphabet> {
    prop_oneof![Just("a"), Just("ab"), Just("abc")].prop_map(|a| Alphabet::new(a).unwrap())
}

fn arb_dfa() -> impl Strategy<Value = Dfa> {
    dfa_upto(8)
}

fn arb_small_dfa() -> impl Strategy<Value = Dfa> {
    // one fixed alphabet and few states, so equal languages actually occur
    dfa_upto(6).prop_filter("binary alphabet", |d| d.alphabet().len() == 2)
}

fn dfa_upto(max_states: usize) -> impl Strategy<Value = Dfa> {
    (arb_alphabet(), 1..=max_states).prop_flat_map(|(alphabet, n)| {
        let k = alphabet.len();
        (
            proptest::collection::vec(0..n, n * k),
            0..n,
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(next, start, accepting)| {
                Dfa::new(alphabet.clone(), next, start, accepting).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rendering_parses_back_to_the_same_tree(seed in any::<u64>(), depth in 1usize..7, alphabet in arb_alphabet()) {
        let ast = random_regex(seed, depth, &alphabet);
        let text = render_regex(&ast);
        prop_assert_eq!(parse_regex(&text, &alphabet).unwrap(), ast);
    }

    #[test]
    fn minimization_matches_moore_refinement(dfa in arb_dfa()) {
        let canonical = minimize(&dfa);
        prop_assert_eq!(TransitionTable::from(&canonical), moore_table(&dfa));
    }

    #[test]
    fn canonical_form_decides_equality(a in arb_small_dfa(), b in arb_small_dfa()) {
        prop_assume!(a.alphabet() == b.alphabet());
        let (la, lb) = (Lang::from_dfa(&a), Lang::from_dfa(&b));
        // inequivalent automata with n and m states differ on a word of length < n + m - 1
        let agree = HorizonLang::from_lang(&la, 10).unwrap() == HorizonLang::from_lang(&lb, 10).unwrap();
        prop_assert_eq!(la == lb, agree);
    }

    #[test]
    fn complement_is_an_involution(seed in any::<u64>(), alphabet in arb_alphabet()) {
        let l = Lang::from_regex(&random_regex(seed, 5, &alphabet), &alphabet).unwrap();
        prop_assert_eq!(l.complement().complement(), l.clone());
        prop_assert!(l.intersection(&l.complement()).unwrap().is_empty());
        prop_assert_eq!(l.union(&l.complement()).unwrap(), Lang::universal(&alphabet));
    }

    #[test]
    fn horizon_truncation_matches_membership(seed in any::<u64>(), alphabet in arb_alphabet()) {
        let l = Lang::from_regex(&random_regex(seed, 5, &alphabet), &alphabet).unwrap();
        let h = HorizonLang::from_lang(&l, 5).unwrap();
        for w in words_upto(&alphabet, 5) {
            prop_assert_eq!(h.contains(&w), l.accepts(&w).unwrap());
        }
    }

    #[test]
    fn orbit_documents_round_trip(seed in any::<u64>(), kleene in any::<bool>()) {
        let alphabet = Alphabet::new("ab").unwrap();
        let ast = random_regex(seed, 5, &alphabet);
        let l = Lang::from_regex(&ast, &alphabet).unwrap();
        let mode = if kleene { Mode::Kleene } else { Mode::Positive };
        let label = klang_core::classify(&l, mode).unwrap().label;
        let doc = OrbitDocument::new(&render_regex(&ast), &label, &klang_core::generate_orbit(&l, mode).unwrap());
        doc.validate().unwrap();
        prop_assert_eq!(OrbitDocument::from_json(&doc.to_json()).unwrap(), doc);
    }
}

#[test]
fn automata_agree_with_the_tree_interpreter() {
    for alphabet in [Alphabet::new("a").unwrap(), Alphabet::new("ab").unwrap()] {
        let words = words_upto(&alphabet, 8);
        for seed in 0..1000 {
            let ast = random_regex(seed, 5, &alphabet);
            let l = Lang::from_regex(&ast, &alphabet).unwrap();
            for w in &words {
                assert_eq!(
                    l.accepts(w).unwrap(),
                    interpret(&ast, w),
                    "seed {seed}, {} on {w:?}",
                    render_regex(&ast)
                );
            }
        }
    }
}

#[test]
fn interpreter_sanity() {
    let a = Alphabet::new("ab").unwrap();
    let r = parse_regex("(a|b)*abb", &a).unwrap();
    assert!(interpret(&r, "babb"));
    assert!(!interpret(&r, "abab"));
    assert!(interpret(&parse_regex("@", &a).unwrap(), ""));
    assert!(!interpret(&parse_regex("#*b", &a).unwrap(), ""));
    assert!(interpret(&parse_regex("#*b", &a).unwrap(), "b"));
}
