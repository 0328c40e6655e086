//! Fixed inputs shared by the benchmarks.

use klang_core::{random_regex, render_regex, Alphabet, Lang};

/// Seeded random languages over `alphabet`, with their expression text.
pub fn corpus(alphabet: &str, count: u64, depth: usize) -> Vec<(String, Lang)> {
    let sigma = Alphabet::new(alphabet).expect("benchmark alphabet");
    (0..count)
        .map(|seed| {
            let ast = random_regex(seed, depth, &sigma);
            let lang = Lang::from_regex(&ast, &sigma).expect("benchmark language");
            (render_regex(&ast), lang)
        })
        .collect()
}

/// The (a|b)*a(a|b)^{n} family, whose DFA has 2^{n+1} states.
pub fn nth_from_end(n: usize) -> String {
    format!("(a|b)*a{}", "(a|b)".repeat(n))
}
