//! Reset words: the exact shortest one by power-set search, and a greedy
//! compress collection that shrinks `Q` one step at a time.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::automaton::{Automaton, State};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::search::{bfs, Direction};
use crate::word::Word;

/// Shortest word `w` with `|Q.w| = 1`, or `None` when the automaton is not
/// synchronizing.
pub fn shortest_reset_word(a: &Automaton, budget: &Budget) -> Result<Option<Word>> {
    if !a.is_synchronizing() {
        return Ok(None);
    }
    budget.check_states(a.n(), "shortest reset word")?;
    let found = bfs(
        a,
        &a.all_states(),
        Direction::Forward,
        None,
        budget,
        "shortest reset word",
        |s| s.len() == 1,
    )?;
    Ok(found.map(|f| f.word))
}

/// A compress collection `v₁..v_m` with `|Q| > |Q.v₁| > … > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompressTrace {
    pub words: Vec<Word>,
    /// `|Q|, |Q.v₁|, …, 1`; one entry longer than `words`.
    pub cardinalities: Vec<usize>,
}

impl CompressTrace {
    pub fn size(&self) -> usize {
        self.words.len()
    }

    /// Longest word of the collection.
    pub fn length(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn concatenation(&self) -> Word {
        self.words
            .iter()
            .fold(Word::empty(), |acc, w| acc.concat(w))
    }
}

/// Repeatedly applies a shortest word that strictly shrinks the current image.
pub fn greedy_compress(a: &Automaton, budget: &Budget) -> Result<CompressTrace> {
    if !a.is_synchronizing() {
        return Err(Error::NotSynchronizing);
    }
    let n = a.n();
    let mut current = a.all_states();
    let mut trace = CompressTrace {
        words: Vec::new(),
        cardinalities: vec![n],
    };
    while current.len() > 1 {
        let size = current.len();
        let found = bfs(
            a,
            &current,
            Direction::Forward,
            None,
            budget,
            "greedy compress step",
            |s| s.len() < size,
        )?
        .ok_or_else(|| Error::Contract(format!("no word compresses {current}")))?;
        trace.words.push(found.word);
        trace.cardinalities.push(found.set.len());
        current = found.set;
    }
    let total = trace.concatenation().len();
    assert!(
        total <= n * n * n.saturating_sub(1) / 2,
        "greedy compress produced {total} letters for {n} states"
    );
    Ok(trace)
}

/// Shortest word merging `p` and `q`, by search on unordered state pairs.
pub fn pair_merge_word(a: &Automaton, p: State, q: State) -> Result<Option<Word>> {
    a.check_state(p)?;
    a.check_state(q)?;
    let key = |p: State, q: State| if p <= q { (p, q) } else { (q, p) };
    let start = key(p, q);
    if start.0 == start.1 {
        return Ok(Some(Word::empty()));
    }
    let mut parent: HashMap<(State, State), ((State, State), usize)> = HashMap::new();
    let mut queue = VecDeque::from([start]);
    parent.insert(start, (start, usize::MAX));
    while let Some(pair) = queue.pop_front() {
        for x in 0..a.sigma() {
            let next = key(a.step(pair.0, x), a.step(pair.1, x));
            if parent.contains_key(&next) {
                continue;
            }
            parent.insert(next, (pair, x));
            if next.0 == next.1 {
                let mut letters = Vec::new();
                let mut cur = next;
                while cur != start {
                    let (prev, x) = parent[&cur];
                    letters.push(x);
                    cur = prev;
                }
                letters.reverse();
                return Ok(Some(Word::new(letters)));
            }
            queue.push_back(next);
        }
    }
    Ok(None)
}
