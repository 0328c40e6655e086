use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use klang_core::tables::notes_for;
use klang_core::{
    classify, generate_orbit, run_suite, Alphabet, Error, Lang, Mode, OrbitDocument,
    PredicateBundle, Suite, VerifyConfig,
};

#[derive(Parser)]
#[command(
    name = "klang",
    version,
    about = "Closure-complement orbits of regular languages"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a language and print its predicate bundle.
    Classify {
        regex: String,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Print the orbit graph of a language.
    Orbit {
        regex: String,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Run verification suites over seeded random languages.
    Verify {
        /// Suites to run; all when omitted.
        suites: Vec<String>,
        /// Restrict sampling to one alphabet (default: both {a} and {a,b}).
        #[arg(long)]
        alphabet: Option<String>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        horizon: usize,
    },
    /// Test whether a word belongs to a language; exit status 0 if it does.
    Member {
        regex: String,
        word: String,
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(clap::Args)]
struct InputArgs {
    #[arg(long)]
    alphabet: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Positive)]
    mode: ModeArg,
    /// Use the complement of the expression's language.
    #[arg(long)]
    complement: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Positive,
    Kleene,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Positive => Mode::Positive,
            ModeArg::Kleene => Mode::Kleene,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

/// Input problems (bad expression or alphabet) exit with 2, everything else with 1.
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. } | Error::UnknownSymbol { .. } | Error::InvalidAlphabet(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("klang: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("klang: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load(regex: &str, input: &InputArgs) -> Result<(Lang, String), Failure> {
    let alphabet = Alphabet::new(&input.alphabet)?;
    let lang = Lang::parse(regex, &alphabet).map_err(|e| match e {
        Error::Syntax { position, .. } | Error::UnknownSymbol { position, .. } => {
            let caret = " ".repeat(position);
            Failure::Usage(format!("{e}\n  {regex}\n  {caret}^"))
        }
        other => other.into(),
    })?;
    if input.complement {
        Ok((lang.complement(), format!("complement of {regex}")))
    } else {
        Ok((lang, regex.to_string()))
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Classify { regex, input } => {
            let (lang, _) = load(&regex, &input)?;
            let mode = Mode::from(input.mode);
            let c = classify(&lang, mode)?;
            let (family, orbit) = mode.family_names();
            println!(
                "case {}, |{family}|={}, |{orbit}|={}",
                c.label, c.family_size, c.orbit_size
            );
            print_predicates(&c.predicates);
            for note in notes_for(&lang, mode, &c.label) {
                println!("{note}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Orbit {
            regex,
            input,
            format,
        } => {
            let (lang, description) = load(&regex, &input)?;
            let mode = Mode::from(input.mode);
            let c = classify(&lang, mode)?;
            let doc = OrbitDocument::new(&description, &c.label, &generate_orbit(&lang, mode)?);
            doc.validate()?;
            match format {
                Format::Dot => print!("{}", doc.to_dot()),
                Format::Json => println!("{}", doc.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Member { regex, word, input } => {
            let (lang, _) = load(&regex, &input)?;
            let member = lang.accepts(&word).map_err(|e| match e {
                Error::UnknownSymbol { symbol, .. } => Failure::Usage(format!(
                    "word contains {symbol:?}, which is not in the alphabet"
                )),
                other => other.into(),
            })?;
            println!("{member}");
            Ok(if member {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Verify {
            suites,
            alphabet,
            samples,
            seed,
            horizon,
        } => {
            let suites = if suites.is_empty() {
                Suite::ALL.to_vec()
            } else {
                suites
                    .iter()
                    .map(|s| s.parse::<Suite>().map_err(Failure::Usage))
                    .collect::<Result<_, _>>()?
            };
            let mut cfg = VerifyConfig {
                samples,
                seed,
                horizon,
                ..VerifyConfig::default()
            };
            if let Some(a) = alphabet {
                cfg.alphabets = vec![Alphabet::new(&a)?];
            }
            let mut all_passed = true;
            for suite in suites {
                let report = run_suite(suite, &cfg)?;
                all_passed &= report.passed();
                print!("{}", report.render());
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn print_predicates(p: &PredicateBundle) {
    let rows = [
        ("open", p.open),
        ("closed", p.closed),
        ("L+ clopen", p.plus_clopen),
        ("L⊕ clopen", p.interior_clopen),
        ("L+ open", p.plus_open),
        ("L⊕ closed", p.interior_closed),
        ("L⊕+ = L+", p.eq_int_plus),
        ("L+⊕ = L⊕", p.eq_plus_int),
        ("L+⊕ = L⊕+", p.eq_mixed),
        ("ε ∈ L", p.contains_epsilon),
    ];
    for (name, value) in rows {
        println!("  {name}: {value}");
    }
}
