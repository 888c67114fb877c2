//! Seeded search for automata whose extension radius exceeds `n`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::automaton::Automaton;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::extension::extension_radius;
use crate::families::{random_automaton, Constraints, DEFAULT_MAX_ATTEMPTS};
use crate::format::{fingerprint, serialize};
use crate::stateset::StateSet;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzRecord {
    pub index: usize,
    pub seed: u64,
    pub fingerprint: String,
    pub dfa: String,
    /// `None` when some subset has no extension word at all.
    pub radius: Option<usize>,
    pub witness: Vec<usize>,
    /// Radius above `n`, confirmed by word enumeration.
    pub counterexample: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub samples: usize,
    /// Radius value to number of automata; unextendable subsets count under
    /// `"none"`.
    pub distribution: BTreeMap<String, usize>,
    pub counterexamples: Vec<FuzzRecord>,
}

/// Confirms, by trying every word of length at most `max_len`, that none
/// grows `s`. Independent of the preimage search used for the radius.
pub fn no_extension_up_to(
    a: &Automaton,
    s: &StateSet,
    max_len: usize,
    budget: &Budget,
) -> Result<bool> {
    let sigma = a.sigma() as u128;
    let total: u128 = (0..=max_len as u32).map(|l| sigma.pow(l)).sum();
    if total > budget.max_nodes as u128 {
        return Err(Error::Budget(format!(
            "word enumeration up to length {max_len} needs {total} words"
        )));
    }
    let size = s.len();
    let mut word = Vec::with_capacity(max_len);
    for len in 0..=max_len {
        let count = a.sigma().pow(len as u32);
        for mut code in 0..count {
            word.clear();
            for _ in 0..len {
                word.push(code % a.sigma());
                code /= a.sigma();
            }
            if a.preimage(s, &Word::new(word.clone()))?.len() > size {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Samples `count` synchronizing, strongly connected automata and records
/// each one's extension radius. `on_record` sees every record as soon as it
/// is computed.
pub fn fuzz_radius(
    n: usize,
    sigma: usize,
    count: usize,
    seed: u64,
    budget: &Budget,
    mut on_record: impl FnMut(&FuzzRecord) -> Result<()>,
) -> Result<FuzzSummary> {
    let mut summary = FuzzSummary {
        samples: count,
        ..FuzzSummary::default()
    };
    for index in 0..count {
        let sample_seed = seed.wrapping_add(index as u64);
        let a = random_automaton(
            n,
            sigma,
            sample_seed,
            Constraints::both(),
            DEFAULT_MAX_ATTEMPTS,
        )?;
        let radius = extension_radius(&a, &a.all_states(), 1, budget)?;
        let key = radius
            .length
            .map_or_else(|| "none".to_string(), |l| l.to_string());
        *summary.distribution.entry(key).or_default() += 1;
        let counterexample =
            !radius.within(n) && no_extension_up_to(&a, &radius.witness, n, budget)?;
        let record = FuzzRecord {
            index,
            seed: sample_seed,
            fingerprint: fingerprint(&a),
            dfa: serialize(&a),
            radius: radius.length,
            witness: radius.witness.to_vec(),
            counterexample,
        };
        on_record(&record)?;
        if counterexample {
            summary.counterexamples.push(record);
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::carpi_family;

    #[test]
    fn oracle_confirms_b4() {
        let c = carpi_family(2, 1).unwrap();
        let budget = Budget::default();
        assert!(no_extension_up_to(c.automaton(), &c.c_b(), 4, &budget).unwrap());
        assert!(!no_extension_up_to(c.automaton(), &c.c_b(), 5, &budget).unwrap());
    }

    #[test]
    fn small_fuzz_run_is_deterministic() {
        let run = || fuzz_radius(4, 2, 10, 3, &Budget::default(), |_| Ok(())).unwrap();
        let first = run();
        assert_eq!(first, run());
        assert_eq!(first.distribution.values().sum::<usize>(), 10);
    }
}
