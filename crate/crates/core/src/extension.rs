//! Extension words and the Expansion Algorithm.
//!
//! An extension word for `S` in `C_e` is a word `u` with
//! `|S.u⁻¹ ∩ C_e| > |S ∩ C_e|`. Shortest ones are found by a backward
//! search over preimages, prepending one letter per level.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::automaton::Automaton;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::ratio::{floor_times, Rational};
use crate::search::{bfs, Direction};
use crate::stateset::StateSet;
use crate::word::Word;

fn check_pair(a: &Automaton, s: &StateSet, c_e: &StateSet) -> Result<()> {
    a.check_set(s)?;
    a.check_set(c_e)
}

/// Shortest `u` with `|s.u⁻¹ ∩ c_e| > |s ∩ c_e|`, or `None` if no word
/// grows the intersection.
pub fn shortest_extension_word(
    a: &Automaton,
    s: &StateSet,
    c_e: &StateSet,
    budget: &Budget,
) -> Result<Option<Word>> {
    extension_search(a, s, c_e, None, budget)
}

fn extension_search(
    a: &Automaton,
    s: &StateSet,
    c_e: &StateSet,
    max_len: Option<usize>,
    budget: &Budget,
) -> Result<Option<Word>> {
    check_pair(a, s, c_e)?;
    let base = s.intersection_len(c_e);
    if base == c_e.len() {
        return Err(Error::Contract(format!(
            "{s} already covers the target set {c_e}"
        )));
    }
    budget.check_states(a.n(), "extension word search")?;
    let found = bfs(
        a,
        s,
        Direction::Backward,
        max_len,
        budget,
        "extension word search",
        |t| t.intersection_len(c_e) > base,
    )?;
    Ok(found.map(|f| f.word))
}

/// Whether some word of length at most `max_len` is an extension word for
/// `s` in `c_e`.
pub fn is_extendable(
    a: &Automaton,
    s: &StateSet,
    c_e: &StateSet,
    max_len: usize,
    budget: &Budget,
) -> Result<bool> {
    check_pair(a, s, c_e)?;
    if c_e.is_subset(s) {
        return Ok(false);
    }
    Ok(extension_search(a, s, c_e, Some(max_len), budget)?.is_some())
}

/// Input of the Expansion Algorithm: `Q.v_e = C_e ⊇ C_s` and `|C_s.v_s| = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EaInput {
    pub c_s: StateSet,
    pub c_e: StateSet,
    pub v_s: Word,
    pub v_e: Word,
}

impl EaInput {
    /// `C_s` is the first pair (in letter, then state order) merged by a
    /// single letter `v_s`; `C_e = Q` and `v_e` is empty.
    pub fn from_merging_letter(a: &Automaton) -> Result<EaInput> {
        let n = a.n();
        let (x, p, q) = (0..a.sigma())
            .flat_map(|x| (0..n).flat_map(move |p| (p + 1..n).map(move |q| (x, p, q))))
            .find(|&(x, p, q)| a.step(p, x) == a.step(q, x))
            .ok_or_else(|| Error::Input("no letter merges a pair of states".into()))?;
        Ok(EaInput {
            c_s: StateSet::from_states(n, [p, q])?,
            c_e: a.all_states(),
            v_s: Word::letter(x),
            v_e: Word::empty(),
        })
    }

    pub fn validate(&self, a: &Automaton) -> Result<()> {
        check_pair(a, &self.c_s, &self.c_e)?;
        a.check_word(&self.v_s)?;
        a.check_word(&self.v_e)?;
        let reached = a.image(&a.all_states(), &self.v_e)?;
        if reached != self.c_e {
            return Err(Error::Input(format!(
                "Q.v_e = {reached} differs from C_e = {}",
                self.c_e
            )));
        }
        if !self.c_s.is_subset(&self.c_e) {
            return Err(Error::Input(format!(
                "C_s = {} is not contained in C_e = {}",
                self.c_s, self.c_e
            )));
        }
        let merged = a.image(&self.c_s, &self.v_s)?;
        if merged.len() != 1 {
            return Err(Error::Input(format!(
                "C_s.v_s = {merged} is not a singleton"
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EaStep {
    #[serde(serialize_with = "crate::report::ser_set")]
    pub before: StateSet,
    pub word: Word,
    #[serde(serialize_with = "crate::report::ser_set")]
    pub after: StateSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EaTrace {
    pub steps: Vec<EaStep>,
    /// `v_e · u_k ⋯ u₁ · v_s`.
    pub word: Word,
}

impl EaTrace {
    pub fn max_step_length(&self) -> usize {
        self.steps.iter().map(|s| s.word.len()).max().unwrap_or(0)
    }
}

/// Runs the Expansion Algorithm, returning every step and the final
/// synchronizing word.
pub fn run_ea(a: &Automaton, input: &EaInput, budget: &Budget) -> Result<EaTrace> {
    expand(a, input, None, budget)
}

/// Expansion with every step's search limited to `cap` letters; a step
/// that finds nothing reports [`Error::ExpansionFailure`].
pub(crate) fn expand(
    a: &Automaton,
    input: &EaInput,
    cap: Option<usize>,
    budget: &Budget,
) -> Result<EaTrace> {
    input.validate(a)?;
    let c_e = &input.c_e;
    let mut s = input.c_s.clone();
    let mut v = input.v_s.clone();
    let mut steps = Vec::new();
    while s.intersection_len(c_e) < c_e.len() {
        budget.check_interrupt()?;
        let u =
            extension_search(a, &s, c_e, cap, budget)?.ok_or_else(|| Error::ExpansionFailure {
                stuck: s.clone(),
                synchronizing: a.is_synchronizing(),
                strongly_connected: a.is_strongly_connected(),
            })?;
        let after = a.preimage(&s, &u)?;
        v = u.concat(&v);
        steps.push(EaStep {
            before: std::mem::replace(&mut s, after.clone()),
            word: u,
            after,
        });
    }
    let word = input.v_e.concat(&v);
    let image = a.image(&a.all_states(), &word)?;
    if image.len() != 1 {
        return Err(Error::Contract(format!(
            "expansion produced {word}, which maps Q onto {image}"
        )));
    }
    Ok(EaTrace { steps, word })
}

/// Largest shortest-extension-word length over the examined subsets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Radius {
    /// `None` when the witness admits no extension word at all.
    pub length: Option<usize>,
    #[serde(serialize_with = "crate::report::ser_set")]
    pub witness: StateSet,
    pub subsets: usize,
    /// `false` for sampling mode, whose value is only a lower bound.
    pub exhaustive: bool,
}

impl Radius {
    /// Whether every examined subset is `bound`-extendable.
    pub fn within(&self, bound: usize) -> bool {
        self.length.is_some_and(|l| l <= bound)
    }
}

/// `None` (unreachable) ranks above every finite length.
fn rank(len: Option<usize>) -> usize {
    len.unwrap_or(usize::MAX)
}

fn better(candidate: &(Option<usize>, StateSet), best: &Option<(Option<usize>, StateSet)>) -> bool {
    match best {
        None => true,
        Some((len, set)) => match rank(candidate.0).cmp(&rank(*len)) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => candidate.1 < *set,
        },
    }
}

/// Maximum over every `S` with `∅ ≠ S ∩ c_e ⊊ c_e` of the shortest extension
/// word length, with the least maximizing set as witness.
///
/// Subsets are visited in Gray-code order so that `|S ∩ c_e|` changes by one
/// per step. With `workers > 1` the code sequence is split into contiguous
/// chunks searched on scoped threads.
pub fn extension_radius(
    a: &Automaton,
    c_e: &StateSet,
    workers: usize,
    budget: &Budget,
) -> Result<Radius> {
    a.check_set(c_e)?;
    let n = a.n();
    budget.check_exhaustive(n, "extension radius")?;
    if n >= 64 {
        return Err(Error::Budget("extension radius: n must be below 64".into()));
    }
    if c_e.len() < 2 {
        return Err(Error::Input(format!(
            "{c_e} has no subset S with a non-empty proper intersection"
        )));
    }
    let total: u64 = 1 << n;
    let workers = (workers.max(1) as u64).min(total);
    let chunk = total.div_ceil(workers);
    let ranges: Vec<(u64, u64)> = (0..workers)
        .map(|w| (w * chunk, ((w + 1) * chunk).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect();

    let results: Vec<Result<ChunkResult>> = if ranges.len() == 1 {
        vec![radius_chunk(a, c_e, ranges[0], budget)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .iter()
                .map(|&r| scope.spawn(move || radius_chunk(a, c_e, r, budget)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("radius worker panicked"))
                .collect()
        })
    };

    let mut best = None;
    let mut subsets = 0;
    for r in results {
        let (local, count) = r?;
        subsets += count;
        if let Some(candidate) = local {
            if better(&candidate, &best) {
                best = Some(candidate);
            }
        }
    }
    let (length, witness) = best.expect("c_e has at least two states");
    Ok(Radius {
        length,
        witness,
        subsets,
        exhaustive: true,
    })
}

type ChunkResult = (Option<(Option<usize>, StateSet)>, usize);

fn radius_chunk(
    a: &Automaton,
    c_e: &StateSet,
    (lo, hi): (u64, u64),
    budget: &Budget,
) -> Result<ChunkResult> {
    let n = a.n();
    let target = c_e.len();
    let mut s = StateSet::from_mask(n, lo ^ (lo >> 1))?;
    let mut inside = s.intersection_len(c_e);
    let mut best = None;
    let mut count = 0;
    for i in lo..hi {
        if i > lo {
            let bit = i.trailing_zeros() as usize;
            s.toggle(bit);
            if c_e.contains(bit) {
                if s.contains(bit) {
                    inside += 1;
                } else {
                    inside -= 1;
                }
            }
        }
        if inside == 0 || inside == target {
            continue;
        }
        count += 1;
        let len = shortest_extension_word(a, &s, c_e, budget)?.map(|w| w.len());
        let candidate = (len, s.clone());
        if better(&candidate, &best) {
            best = Some(candidate);
        }
    }
    Ok((best, count))
}

/// Radius over `samples` random eligible subsets; a lower bound only.
pub fn extension_radius_sampled(
    a: &Automaton,
    c_e: &StateSet,
    samples: usize,
    seed: u64,
    budget: &Budget,
) -> Result<Radius> {
    a.check_set(c_e)?;
    if c_e.len() < 2 {
        return Err(Error::Input(format!(
            "{c_e} has no subset S with a non-empty proper intersection"
        )));
    }
    let n = a.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = None;
    let mut drawn = 0;
    while drawn < samples {
        budget.check_interrupt()?;
        let mut s = StateSet::empty(n);
        for q in 0..n {
            if rng.gen_bool(0.5) {
                s.insert(q);
            }
        }
        let inside = s.intersection_len(c_e);
        if inside == 0 || inside == c_e.len() {
            continue;
        }
        drawn += 1;
        let len = shortest_extension_word(a, &s, c_e, budget)?.map(|w| w.len());
        let candidate = (len, s);
        if better(&candidate, &best) {
            best = Some(candidate);
        }
    }
    let (length, witness) = best.ok_or_else(|| Error::Input("no samples requested".into()))?;
    Ok(Radius {
        length,
        witness,
        subsets: samples,
        exhaustive: false,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SideCondition {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

/// Outcome of checking the local form of the `kn`-Extension property for a
/// given expansion input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalExtensionReport {
    #[serde(serialize_with = "crate::report::ser_ratio")]
    pub k: Rational,
    /// `⌊k·n⌋`, the admissible extension word length.
    pub length_bound: usize,
    pub conditions: Vec<SideCondition>,
    /// Number of non-empty proper subsets of `C_e` examined.
    pub subsets_checked: usize,
    /// Largest shortest extension word length among them; `None` if one of
    /// them cannot be extended at all.
    pub max_extension_length: Option<usize>,
    /// The least subset that is not `kn`-extendable in `C_e`, if any.
    #[serde(serialize_with = "crate::report::ser_opt_set")]
    pub failing_subset: Option<StateSet>,
    /// `k(n−1)²`, the reset length implied when everything holds.
    #[serde(serialize_with = "crate::report::ser_ratio")]
    pub implied_bound: Rational,
}

impl LocalExtensionReport {
    pub fn side_conditions_hold(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }

    pub fn subsets_extendable(&self) -> bool {
        self.failing_subset.is_none()
    }

    pub fn passes(&self) -> bool {
        self.side_conditions_hold() && self.subsets_extendable()
    }
}

/// Checks every side condition of the local `kn`-Extension property and
/// then whether each non-empty proper subset of `C_e` is `kn`-extendable in
/// `C_e`. Failed conditions are reported, not raised.
pub fn check_local_extension(
    a: &Automaton,
    input: &EaInput,
    k: Rational,
    budget: &Budget,
) -> Result<LocalExtensionReport> {
    check_pair(a, &input.c_s, &input.c_e)?;
    a.check_word(&input.v_s)?;
    a.check_word(&input.v_e)?;
    let n = a.n();
    let c_s = &input.c_s;
    let c_e = &input.c_e;
    let kn = k * Rational::from_integer(n as u64);
    let length_bound = floor_times(k, n);
    let mut conditions = Vec::new();

    let merged = a.image(c_s, &input.v_s)?;
    conditions.push(SideCondition {
        name: "C_s.v_s is a singleton",
        holds: merged.len() == 1,
        detail: format!("C_s.v_s = {merged}"),
    });
    conditions.push(SideCondition {
        name: "C_s is contained in C_e",
        holds: c_s.is_subset(c_e),
        detail: format!("C_s = {c_s}, C_e = {c_e}"),
    });
    // |v_s| ≤ k + kn(|C_s| − 2); for |C_s| < 2 the right side is k − kn.
    let vs_len = Rational::from_integer(input.v_s.len() as u64);
    let vs_holds = if c_s.len() >= 2 {
        vs_len <= k + kn * Rational::from_integer((c_s.len() - 2) as u64)
    } else {
        vs_len + kn <= k
    };
    conditions.push(SideCondition {
        name: "|v_s| <= k + kn(|C_s| - 2)",
        holds: vs_holds,
        detail: format!(
            "|v_s| = {}, |C_s| = {}, kn = {kn}",
            input.v_s.len(),
            c_s.len()
        ),
    });
    let pulled = a.preimage(c_e, &input.v_e)?;
    conditions.push(SideCondition {
        name: "C_e.v_e^-1 = Q",
        holds: pulled.is_full(),
        detail: format!("C_e.v_e^-1 = {pulled}"),
    });
    let ve_bound = kn * Rational::from_integer((n - c_e.len()) as u64);
    conditions.push(SideCondition {
        name: "|v_e| <= kn(n - |C_e|)",
        holds: Rational::from_integer(input.v_e.len() as u64) <= ve_bound,
        detail: format!("|v_e| = {}, bound = {ve_bound}", input.v_e.len()),
    });

    let members = c_e.to_vec();
    budget.check_exhaustive(members.len(), "local extension check")?;
    let mut failing: Option<StateSet> = None;
    let mut max_len = Some(0);
    let mut checked = 0;
    for mask in 1u64..(1u64 << members.len()) - 1 {
        let s = StateSet::from_states(
            n,
            members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &q)| q),
        )?;
        checked += 1;
        let len = shortest_extension_word(a, &s, c_e, budget)?.map(|w| w.len());
        max_len = match (max_len, len) {
            (Some(m), Some(l)) => Some(m.max(l)),
            _ => None,
        };
        if !len.is_some_and(|l| l <= length_bound) && failing.as_ref().is_none_or(|f| s < *f) {
            failing = Some(s);
        }
    }

    let sq = Rational::from_integer(((n - 1) * (n - 1)) as u64);
    Ok(LocalExtensionReport {
        k,
        length_bound,
        conditions,
        subsets_checked: checked,
        max_extension_length: max_len,
        failing_subset: failing,
        implied_bound: k * sq,
    })
}
