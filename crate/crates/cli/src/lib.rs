//! Command-line driver for the `synchro` library.
//!
//! Every subcommand parses its inputs, calls one library analysis and renders
//! the result as a [`VerdictReport`], either as a table or as JSON.

use std::ffi::OsString;
use std::fs::{self, OpenOptions};
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use synchro::budget::{DEFAULT_MAX_EXHAUSTIVE_STATES, DEFAULT_MAX_NODES, DEFAULT_MAX_STATES};
use synchro::extension::{
    check_local_extension, extension_radius, extension_radius_sampled, is_extendable, run_ea,
    shortest_extension_word, EaInput,
};
use synchro::families::{CarpiAutomaton, Constraints, FamilySpec};
use synchro::format::{parse_automaton, parse_state_set, serialize};
use synchro::fuzz::fuzz_radius;
use synchro::ratio::{floor_times, parse_rational};
use synchro::report::{
    set_names, set_value, word_value, ConjectureId, Mode, Verdict, VerdictReport, Witness,
};
use synchro::reset::{greedy_compress, shortest_reset_word};
use synchro::transitivity::{
    independent_from_synch, is_balanced, min_independent_length, search_balanced_collection,
    synch_via_independent,
};
use synchro::verify::{verify_proposition, PropositionItem};
use synchro::{Automaton, Budget, Error, Rational, StateSet, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONJECTURE_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "synchro",
    version,
    about = "Analyses of synchronizing automata"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Emit the JSON report instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Exit with status 1 when a conjecture is reported as failing.
    #[arg(long, global = true)]
    expect_holds: bool,
    /// Largest automaton for power-set searches.
    #[arg(long, global = true, env = "SYNCHRO_MAX_STATES", default_value_t = DEFAULT_MAX_STATES)]
    max_states: usize,
    /// Largest automaton for analyses that enumerate every subset.
    #[arg(long, global = true, env = "SYNCHRO_MAX_EXHAUSTIVE_STATES", default_value_t = DEFAULT_MAX_EXHAUSTIVE_STATES)]
    max_exhaustive_states: usize,
    /// Visited-node cap of a single search.
    #[arg(long, global = true, env = "SYNCHRO_NODE_BUDGET", default_value_t = DEFAULT_MAX_NODES)]
    node_budget: usize,
    /// Wall-clock limit in seconds.
    #[arg(long, global = true, env = "SYNCHRO_TIME_BUDGET")]
    time_budget: Option<f64>,
}

impl GlobalArgs {
    fn budget(&self) -> Result<Budget, Error> {
        let mut budget = Budget {
            max_states: self.max_states,
            max_exhaustive_states: self.max_exhaustive_states,
            max_nodes: self.node_budget,
            ..Budget::default()
        };
        if let Some(secs) = self.time_budget {
            let limit = Duration::try_from_secs_f64(secs)
                .map_err(|_| Error::Input(format!("invalid time budget {secs}")))?;
            budget = budget.with_time_limit(limit);
        }
        Ok(budget)
    }
}

#[derive(Args, Debug, Clone)]
struct Source {
    /// Family spec: cerny:N, carpi:M,K or random:N,SIGMA,SEED.
    #[arg(long, conflicts_with = "file")]
    family: Option<FamilySpec>,
    /// DFA text file, or `-` for standard input.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Constraints for random families: synchronizing, strongly-connected.
    #[arg(long, value_delimiter = ',')]
    require: Vec<Requirement>,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
enum Requirement {
    Synchronizing,
    StronglyConnected,
}

struct Loaded {
    automaton: Automaton,
    family: Option<String>,
}

impl Source {
    fn load(&self) -> Result<Loaded, Error> {
        match (&self.family, &self.file) {
            (Some(spec), _) => {
                let mut constraints = Constraints::default();
                for r in &self.require {
                    match r {
                        Requirement::Synchronizing => constraints.synchronizing = true,
                        Requirement::StronglyConnected => constraints.strongly_connected = true,
                    }
                }
                Ok(Loaded {
                    automaton: spec.build_with(constraints)?,
                    family: Some(spec.to_string()),
                })
            }
            (None, Some(path)) => {
                let text = if path.as_os_str() == "-" {
                    let mut s = String::new();
                    io::stdin()
                        .read_to_string(&mut s)
                        .map_err(|e| Error::Input(format!("reading standard input: {e}")))?;
                    s
                } else {
                    fs::read_to_string(path)
                        .map_err(|e| Error::Input(format!("reading {}: {e}", path.display())))?
                };
                Ok(Loaded {
                    automaton: parse_automaton(&text)?,
                    family: None,
                })
            }
            (None, None) => Err(Error::Input("either --family or --file is required".into())),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print an automaton in the DFA text format.
    Gen {
        #[command(flatten)]
        source: Source,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structural summary of an automaton.
    Info {
        #[command(flatten)]
        source: Source,
    },
    /// Shortest reset word by power-set search.
    Reset {
        #[command(flatten)]
        source: Source,
    },
    /// Greedy compress collection built from shortest shrinking words.
    Compress {
        #[command(flatten)]
        source: Source,
    },
    /// Shortest extension word of a set.
    Extend {
        #[command(flatten)]
        source: Source,
        /// The set to extend, e.g. `q0,s1` or `0..2`.
        #[arg(long)]
        set: String,
        /// Ambient set C_e; all states by default.
        #[arg(long)]
        ce: Option<String>,
        /// Only decide extendability within this many letters.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Expansion Algorithm from C_s to C_e.
    Ea {
        #[command(flatten)]
        source: Source,
        #[arg(long, requires = "vs")]
        cs: Option<String>,
        #[arg(long)]
        vs: Option<String>,
        /// Defaults to all states.
        #[arg(long)]
        ce: Option<String>,
        /// Defaults to the empty word.
        #[arg(long)]
        ve: Option<String>,
        /// Also check the local extension conditions for this `k`.
        #[arg(long)]
        local_k: Option<String>,
    },
    /// Largest shortest-extension-word length over subsets of C_e.
    Radius {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        ce: Option<String>,
        /// Decide the `cn`-Extension property for this `c`.
        #[arg(long)]
        c: Option<String>,
        /// Sample this many subsets instead of enumerating all of them.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Independent collections.
    Independent {
        #[command(flatten)]
        source: Source,
        /// Search for the least length of an independent collection.
        #[arg(long)]
        min_len: Option<usize>,
    },
    /// Balanced collection search for one set, or for every proper subset of C_e.
    Balanced {
        #[command(flatten)]
        source: Source,
        #[arg(long, required_unless_present = "all_subsets_of")]
        set: Option<String>,
        /// Check every non-empty proper subset of this set.
        #[arg(long, conflicts_with = "set")]
        all_subsets_of: Option<String>,
        /// Word length limit; `--k` sets it to the largest length below `k·n`.
        #[arg(long, conflicts_with = "k")]
        max_len: Option<usize>,
        #[arg(long)]
        k: Option<String>,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Rebuild a refutation carried by the A(m,k) family.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Extension radius of seeded random automata.
    Fuzz {
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        sigma: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Append one JSON line per automaton to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graphviz rendering.
    Dot {
        #[command(flatten)]
        source: Source,
        /// States to highlight; `cb` selects C_b on family automata.
        #[arg(long)]
        highlight: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyTarget {
    Prop1 {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        item: u8,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        c: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
}

enum Output {
    Reports(Vec<VerdictReport>),
    Text(String),
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = cli
        .global
        .budget()
        .and_then(|budget| execute(&cli, &budget));
    match result {
        Ok(Output::Text(text)) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Ok(Output::Reports(reports)) => {
            for r in &reports {
                debug_assert!(r.check_invariants().is_ok());
                let text = if cli.global.json {
                    r.to_json() + "\n"
                } else {
                    r.to_table()
                };
                let _ = out.write_all(text.as_bytes());
            }
            let fails = reports.iter().any(|r| r.verdict == Some(Verdict::Fails));
            let budget_hit = reports
                .iter()
                .any(|r| r.measured.contains_key("budget_note"));
            if cli.global.expect_holds && fails {
                EXIT_CONJECTURE_FAILS
            } else if budget_hit {
                EXIT_BUDGET
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_budget() {
                EXIT_BUDGET
            } else {
                EXIT_INPUT
            }
        }
    }
}

fn set_or_all(a: &Automaton, text: Option<&str>) -> Result<StateSet, Error> {
    text.map_or_else(|| Ok(a.all_states()), |t| parse_state_set(a, t))
}

fn parse_word(a: &Automaton, text: &str) -> Result<Word, Error> {
    let w: Word = text.parse()?;
    a.check_word(&w)?;
    Ok(w)
}

fn words_value(words: &[Word]) -> serde_json::Value {
    json!(words.iter().map(Word::to_letters).collect::<Vec<_>>())
}

fn execute(cli: &Cli, budget: &Budget) -> Result<Output, Error> {
    let report =
        |name: &str, l: &Loaded| VerdictReport::new(name, &l.automaton, l.family.clone(), budget);
    let one = |r: VerdictReport| Ok(Output::Reports(vec![r]));
    match &cli.command {
        Command::Gen { source, out } => {
            let l = source.load()?;
            let text = serialize(&l.automaton);
            match out {
                Some(path) => {
                    fs::write(path, &text)
                        .map_err(|e| Error::Input(format!("writing {}: {e}", path.display())))?;
                    Ok(Output::Text(String::new()))
                }
                None => Ok(Output::Text(text)),
            }
        }
        Command::Info { source } => {
            let l = source.load()?;
            let a = &l.automaton;
            let mut r = report("info", &l);
            r.measure("synchronizing", a.is_synchronizing());
            r.measure("strongly_connected", a.is_strongly_connected());
            r.measure(
                "circular_letters",
                words_value(
                    &a.circular_letters()
                        .into_iter()
                        .map(Word::letter)
                        .collect::<Vec<_>>(),
                ),
            );
            if let Ok(c) = CarpiAutomaton::recognize(a) {
                r.measure("carpi_parameters", json!({"m": c.m(), "k": c.k()}));
                r.measure("c_b", set_value(a, &c.c_b()));
            }
            one(r)
        }
        Command::Reset { source } => {
            let l = source.load()?;
            let mut r = report("reset", &l);
            match shortest_reset_word(&l.automaton, budget)? {
                Some(w) => {
                    r.measure("length", w.len());
                    r.measure("word", word_value(&w));
                }
                None => r.measure("synchronizing", false),
            }
            one(r)
        }
        Command::Compress { source } => {
            let l = source.load()?;
            let trace = greedy_compress(&l.automaton, budget)?;
            let mut r = report("compress", &l);
            r.measure("words", words_value(&trace.words));
            r.measure("cardinalities", json!(trace.cardinalities));
            r.measure("size", trace.size());
            r.measure("length", trace.length());
            r.measure("reset_word", word_value(&trace.concatenation()));
            one(r)
        }
        Command::Extend {
            source,
            set,
            ce,
            max_len,
        } => {
            let l = source.load()?;
            let a = &l.automaton;
            let s = parse_state_set(a, set)?;
            let c_e = set_or_all(a, ce.as_deref())?;
            let mut r = report("extend", &l).param("set", set_names(a, &s).join(","));
            r = r.param("c_e", set_names(a, &c_e).join(","));
            match max_len {
                Some(len) => {
                    r = r.param("max_len", len);
                    r.measure("extendable", is_extendable(a, &s, &c_e, *len, budget)?);
                }
                None => match shortest_extension_word(a, &s, &c_e, budget)? {
                    Some(w) => {
                        r.measure("length", w.len());
                        r.measure("word", word_value(&w));
                        r.measure(
                            "extended",
                            set_value(a, &a.preimage(&s, &w)?.intersection(&c_e)),
                        );
                    }
                    None => r.measure("extendable", false),
                },
            }
            one(r)
        }
        Command::Ea {
            source,
            cs,
            vs,
            ce,
            ve,
            local_k,
        } => {
            let l = source.load()?;
            let a = &l.automaton;
            let input = match (cs, vs) {
                (Some(cs), Some(vs)) => EaInput {
                    c_s: parse_state_set(a, cs)?,
                    c_e: set_or_all(a, ce.as_deref())?,
                    v_s: parse_word(a, vs)?,
                    v_e: ve
                        .as_deref()
                        .map_or_else(|| Ok(Word::empty()), |t| parse_word(a, t))?,
                },
                _ => EaInput::from_merging_letter(a)?,
            };
            let mut reports = Vec::new();
            let mut r = report("ea", &l)
                .param("c_s", set_names(a, &input.c_s).join(","))
                .param("v_s", input.v_s.to_letters())
                .param("c_e", set_names(a, &input.c_e).join(","))
                .param("v_e", input.v_e.to_letters());
            let trace = run_ea(a, &input, budget)?;
            r.measure("word", word_value(&trace.word));
            r.measure("length", trace.word.len());
            r.measure(
                "steps",
                json!(trace
                    .steps
                    .iter()
                    .map(|s| json!({
                        "before": set_value(a, &s.before),
                        "word": word_value(&s.word),
                        "after": set_value(a, &s.after),
                    }))
                    .collect::<Vec<_>>()),
            );
            reports.push(r);
            if let Some(k) = local_k {
                let k = parse_rational(k)?;
                let check = check_local_extension(a, &input, k, budget)?;
                let mut r = report("local-extension", &l).param("k", k);
                r.conjecture = Some(ConjectureId::LocalExtension);
                r.measure(
                    "conditions",
                    serde_json::to_value(&check.conditions).expect("serializable"),
                );
                r.measure("subsets_checked", check.subsets_checked);
                r.measure("length_bound", check.length_bound);
                r.measure("max_extension_length", json!(check.max_extension_length));
                r.measure("implied_bound", check.implied_bound.to_string());
                if check.passes() {
                    r.verdict = Some(Verdict::Holds);
                    r.search_bound = Some(format!(
                        "all {} non-empty proper subsets of C_e",
                        check.subsets_checked
                    ));
                } else {
                    r.verdict = Some(Verdict::Fails);
                    let failed: Vec<_> = check
                        .conditions
                        .iter()
                        .filter(|c| !c.holds)
                        .map(|c| format!("{}: {}", c.name, c.detail))
                        .collect();
                    r.witness = Some(Witness {
                        set: check.failing_subset.as_ref().map(|s| set_names(a, s)),
                        claim: if failed.is_empty() {
                            format!(
                                "this subset is not {}-extendable in C_e",
                                check.length_bound
                            )
                        } else {
                            format!("side conditions fail: {}", failed.join("; "))
                        },
                        ..Witness::default()
                    });
                }
                reports.push(r);
            }
            Ok(Output::Reports(reports))
        }
        Command::Radius {
            source,
            ce,
            c,
            sample,
            seed,
            workers,
        } => {
            let l = source.load()?;
            let a = &l.automaton;
            let c_e = set_or_all(a, ce.as_deref())?;
            let c = c.as_deref().map(parse_rational).transpose()?;
            let radius = match sample {
                Some(samples) => extension_radius_sampled(a, &c_e, *samples, *seed, budget)?,
                None => extension_radius(a, &c_e, *workers, budget)?,
            };
            let mut r = report("radius", &l).param("c_e", set_names(a, &c_e).join(","));
            r.mode = if radius.exhaustive {
                Mode::Exhaustive
            } else {
                Mode::Sampling
            };
            r.measure("radius", json!(radius.length));
            r.measure("witness", set_value(a, &radius.witness));
            r.measure("subsets", radius.subsets);
            if let Some(c) = c {
                let bound = floor_times(c, a.n());
                r = r.param("c", c);
                r.conjecture = Some(if c == Rational::from_integer(1) {
                    ConjectureId::Extension
                } else {
                    ConjectureId::CnExtension
                });
                r.measure("length_bound", bound);
                if !radius.within(bound) {
                    r.verdict = Some(Verdict::Fails);
                    r.witness = Some(Witness {
                        set: Some(set_names(a, &radius.witness)),
                        claim: format!("no word of length <= {bound} extends this set in C_e"),
                        ..Witness::default()
                    });
                } else if radius.exhaustive {
                    r.verdict = Some(Verdict::Holds);
                    r.search_bound = Some(format!(
                        "all {} non-empty proper subsets of C_e",
                        radius.subsets
                    ));
                } else {
                    r.verdict = Some(Verdict::InconclusiveWithinBudget);
                }
            }
            one(r)
        }
        Command::Independent { source, min_len } => {
            let l = source.load()?;
            let a = &l.automaton;
            let mut r = report("independent", &l);
            match min_len {
                Some(max_len) => {
                    r = r.param("max_len", max_len);
                    match min_independent_length(a, *max_len, budget)? {
                        Some(found) => {
                            r.measure("min_length", found.length);
                            r.measure("collection", words_value(found.witness.words()));
                            r.measure("transformations", found.transformations);
                        }
                        None => r.measure("min_length", json!(null)),
                    }
                }
                None => {
                    let u = shortest_reset_word(a, budget)?.ok_or(Error::NotSynchronizing)?;
                    let w = independent_from_synch(a, &u)?;
                    r.measure("reset_word", word_value(&u));
                    r.measure("collection", words_value(w.words()));
                    r.measure("length", w.length());
                    let synch = synch_via_independent(a, &w, budget)?;
                    r.measure("expansion_word", word_value(&synch));
                    r.measure("expansion_length", synch.len());
                    r.measure(
                        "expansion_bound",
                        (a.n() - 2) * (a.n() + w.length() - 1) + 1,
                    );
                }
            }
            one(r)
        }
        Command::Balanced {
            source,
            set,
            all_subsets_of,
            max_len,
            k,
            max_size,
        } => {
            let l = source.load()?;
            let a = &l.automaton;
            let n = a.n();
            let k = k.as_deref().map(parse_rational).transpose()?;
            let max_len = match (max_len, k) {
                (Some(len), _) => *len,
                // |v| < k·n
                (None, Some(k)) => {
                    let kn = k * Rational::from_integer(n as u64);
                    (kn.ceil().to_integer() as usize).saturating_sub(1)
                }
                (None, None) => n,
            };
            let max_size = max_size.unwrap_or(2 * n);
            let mut r = report("balanced", &l)
                .param("max_len", max_len)
                .param("max_size", max_size);
            if let Some(k) = k {
                r = r.param("k", k);
            }
            match (set, all_subsets_of) {
                (Some(set), _) => {
                    let s = parse_state_set(a, set)?;
                    r = r.param("set", set_names(a, &s).join(","));
                    match search_balanced_collection(a, &s, max_len, max_size, budget)? {
                        Some(v) => {
                            debug_assert!(is_balanced(a, &s, &v)?);
                            r.measure("collection", words_value(v.words()));
                        }
                        None => r.measure("collection", "none found within bounds"),
                    }
                }
                (None, Some(c_e)) => {
                    let c_e = parse_state_set(a, c_e)?;
                    budget.check_exhaustive(c_e.len(), "local balanced check")?;
                    r = r.param("c_e", set_names(a, &c_e).join(","));
                    r.conjecture = Some(ConjectureId::LocalBalanced);
                    let members = c_e.to_vec();
                    let mut missing = Vec::new();
                    let mut checked = 0usize;
                    for mask in 1u64..(1u64 << members.len()) - 1 {
                        let s = StateSet::from_states(
                            n,
                            (0..members.len())
                                .filter(|i| mask >> i & 1 == 1)
                                .map(|i| members[i]),
                        )?;
                        checked += 1;
                        if search_balanced_collection(a, &s, max_len, max_size, budget)?.is_none() {
                            missing.push(json!(set_names(a, &s)));
                        }
                    }
                    r.measure("subsets_checked", checked);
                    r.measure("subsets_without_collection", json!(missing));
                    if missing.is_empty() {
                        r.verdict = Some(Verdict::Holds);
                        r.search_bound = Some(format!(
                            "a balanced collection was found for each of the {checked} non-empty proper subsets"
                        ));
                    } else {
                        r.verdict = Some(Verdict::InconclusiveWithinBudget);
                        r.mode = Mode::Bounded;
                    }
                }
                (None, None) => unreachable!("clap requires one of --set and --all-subsets-of"),
            }
            one(r)
        }
        Command::Verify {
            target: VerifyTarget::Prop1 { item, n, c, m, k },
        } => {
            let missing = |flag: &str| Error::Input(format!("item {item} needs --{flag}"));
            let item = match item {
                1 => PropositionItem::Extension {
                    n: n.ok_or_else(|| missing("n"))?,
                },
                2 => PropositionItem::CnExtension {
                    n: n.ok_or_else(|| missing("n"))?,
                    c: parse_rational(c.as_deref().ok_or_else(|| missing("c"))?)?,
                },
                _ => PropositionItem::KnBalanced {
                    m: m.ok_or_else(|| missing("m"))?,
                    k: k.ok_or_else(|| missing("k"))?,
                },
            };
            Ok(Output::Reports(verify_proposition(item, budget)?))
        }
        Command::Fuzz {
            count,
            n,
            sigma,
            seed,
            out,
        } => {
            let mut sink = match out {
                Some(path) => Some(
                    OpenOptions::new()
                        .create(true)
                        .append(true)
                        .open(path)
                        .map_err(|e| Error::Input(format!("opening {}: {e}", path.display())))?,
                ),
                None => None,
            };
            let summary = fuzz_radius(*n, *sigma, *count, *seed, budget, |record| {
                if let Some(file) = sink.as_mut() {
                    let line = serde_json::to_string(record).expect("serializable");
                    writeln!(file, "{line}")
                        .map_err(|e| Error::Input(format!("writing fuzz record: {e}")))?;
                }
                Ok(())
            })?;
            let placeholder = Automaton::new(*sigma, vec![vec![0; *sigma]])?;
            let mut r = VerdictReport::new(
                "fuzz",
                &placeholder,
                Some(format!("random:{n},{sigma},{seed}+i")),
                budget,
            )
            .param("count", count)
            .param("n", n)
            .param("sigma", sigma)
            .param("seed", seed);
            r.subject.states = *n;
            r.subject.fingerprint = String::new();
            r.measure("radius_distribution", json!(summary.distribution));
            r.measure(
                "counterexamples",
                serde_json::to_value(&summary.counterexamples).expect("serializable"),
            );
            one(r)
        }
        Command::Dot { source, highlight } => {
            let l = source.load()?;
            let a = &l.automaton;
            let hl = match highlight.as_deref() {
                Some("cb") | Some("C_b") => Some(CarpiAutomaton::recognize(a)?.c_b()),
                Some(t) => Some(parse_state_set(a, t)?),
                None => None,
            };
            Ok(Output::Text(synchro::dot::export_dot(a, hl.as_ref())))
        }
    }
}
