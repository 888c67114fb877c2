//! Complete deterministic automata and the action of words on states.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::stateset::StateSet;
use crate::word::{Letter, Word};

pub type State = usize;

/// A complete DFA `⟨Q, Σ, δ⟩` with `Q = {0..n}` and `Σ = {0..sigma}`.
///
/// Values are immutable once built; every table entry is a valid state.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Automaton {
    n: usize,
    sigma: usize,
    delta: Vec<State>,
    names: Option<Vec<String>>,
}

impl Automaton {
    /// Builds an automaton from one row of `sigma` targets per state.
    pub fn new(sigma: usize, rows: Vec<Vec<State>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Input("an automaton needs at least one state".into()));
        }
        if sigma == 0 {
            return Err(Error::Input(
                "an automaton needs at least one letter".into(),
            ));
        }
        let mut delta = Vec::with_capacity(n * sigma);
        for (q, row) in rows.into_iter().enumerate() {
            if row.len() != sigma {
                return Err(Error::Input(format!(
                    "state {q} has {} transitions, expected {sigma}",
                    row.len()
                )));
            }
            for &t in &row {
                if t >= n {
                    return Err(Error::StateOutOfRange { state: t, n });
                }
            }
            delta.extend(row);
        }
        Ok(Automaton {
            n,
            sigma,
            delta,
            names: None,
        })
    }

    pub fn from_fn(n: usize, sigma: usize, f: impl Fn(State, Letter) -> State) -> Result<Self> {
        let rows = (0..n)
            .map(|q| (0..sigma).map(|x| f(q, x)).collect())
            .collect();
        Self::new(sigma, rows)
    }

    /// Attaches display names; they must be distinct, non-empty and free of
    /// whitespace, `#` and `,`.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::Input(format!(
                "{} names given for {} states",
                names.len(),
                self.n
            )));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty()
                || name.contains(|c: char| c.is_whitespace() || c == '#' || c == ',')
                || name.contains("..")
            {
                return Err(Error::Input(format!("invalid state name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::Input(format!("duplicate state name {name:?}")));
            }
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn state_name(&self, q: State) -> String {
        match &self.names {
            Some(names) => names[q].clone(),
            None => q.to_string(),
        }
    }

    /// Resolves a state by display name, falling back to a decimal index.
    pub fn state_index(&self, token: &str) -> Option<State> {
        if let Some(names) = &self.names {
            if let Some(i) = names.iter().position(|s| s == token) {
                return Some(i);
            }
        }
        token.parse().ok().filter(|&q| q < self.n)
    }

    /// `δ(q, x)` for indices already known to be valid.
    #[inline]
    pub fn step(&self, q: State, x: Letter) -> State {
        self.delta[q * self.sigma + x]
    }

    pub fn row(&self, q: State) -> &[State] {
        &self.delta[q * self.sigma..(q + 1) * self.sigma]
    }

    pub fn check_state(&self, q: State) -> Result<()> {
        if q >= self.n {
            return Err(Error::StateOutOfRange {
                state: q,
                n: self.n,
            });
        }
        Ok(())
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        w.validate(self.sigma)
    }

    pub fn check_set(&self, s: &StateSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::UniverseMismatch {
                expected: self.n,
                got: s.universe(),
            });
        }
        Ok(())
    }

    pub fn all_states(&self) -> StateSet {
        StateSet::full(self.n)
    }

    pub fn apply(&self, q: State, w: &Word) -> Result<State> {
        self.check_state(q)?;
        self.check_word(w)?;
        Ok(self.run(q, w.letters()))
    }

    pub(crate) fn run(&self, q: State, letters: &[Letter]) -> State {
        letters.iter().fold(q, |p, &x| self.step(p, x))
    }

    /// `s.w = { δ(q, w) : q ∈ s }`.
    pub fn image(&self, s: &StateSet, w: &Word) -> Result<StateSet> {
        self.check_set(s)?;
        self.check_word(w)?;
        Ok(w.letters()
            .iter()
            .fold(s.clone(), |acc, &x| self.image_letter(&acc, x)))
    }

    /// `s.w⁻¹ = { q : δ(q, w) ∈ s }`, processing letters right to left.
    pub fn preimage(&self, s: &StateSet, w: &Word) -> Result<StateSet> {
        self.check_set(s)?;
        self.check_word(w)?;
        Ok(w.letters()
            .iter()
            .rev()
            .fold(s.clone(), |acc, &x| self.preimage_letter(&acc, x)))
    }

    pub fn image_letter(&self, s: &StateSet, x: Letter) -> StateSet {
        let mut out = StateSet::empty(self.n);
        for q in s {
            out.insert(self.step(q, x));
        }
        out
    }

    pub fn preimage_letter(&self, s: &StateSet, x: Letter) -> StateSet {
        let mut out = StateSet::empty(self.n);
        for q in 0..self.n {
            if s.contains(self.step(q, x)) {
                out.insert(q);
            }
        }
        out
    }

    /// The transformation `q ↦ δ(q, w)` as a table.
    pub fn transformation(&self, w: &Word) -> Result<Vec<State>> {
        self.check_word(w)?;
        Ok((0..self.n).map(|q| self.run(q, w.letters())).collect())
    }

    /// `inverse[x][q]` lists the states sent to `q` by letter `x`.
    pub fn inverse(&self) -> Vec<Vec<Vec<State>>> {
        let mut inv = vec![vec![Vec::new(); self.n]; self.sigma];
        for q in 0..self.n {
            for (x, targets) in inv.iter_mut().enumerate() {
                targets[self.step(q, x)].push(q);
            }
        }
        inv
    }

    /// Every pair of states can be merged by some word.
    pub fn is_synchronizing(&self) -> bool {
        let n = self.n;
        let inv = self.inverse();
        let index = |p: State, q: State| p * n + q;
        let mut merged = vec![false; n * n];
        let mut queue: VecDeque<(State, State)> = (0..n).map(|q| (q, q)).collect();
        let mut count = 0;
        while let Some((r, t)) = queue.pop_front() {
            for pre in &inv {
                for &p in &pre[r] {
                    for &q in &pre[t] {
                        let (p, q) = (p.min(q), p.max(q));
                        if p < q && !merged[index(p, q)] {
                            merged[index(p, q)] = true;
                            count += 1;
                            queue.push_back((p, q));
                        }
                    }
                }
            }
        }
        count == n * (n - 1) / 2
    }

    pub fn is_strongly_connected(&self) -> bool {
        let forward = self.reachable_from(0, |q| self.row(q).to_vec());
        if forward.len() != self.n {
            return false;
        }
        let inv = self.inverse();
        let backward =
            self.reachable_from(0, |q| inv.iter().flat_map(|pre| pre[q].clone()).collect());
        backward.len() == self.n
    }

    fn reachable_from(&self, start: State, next: impl Fn(State) -> Vec<State>) -> StateSet {
        let mut seen = StateSet::empty(self.n);
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(q) = queue.pop_front() {
            for p in next(q) {
                if !seen.contains(p) {
                    seen.insert(p);
                    queue.push_back(p);
                }
            }
        }
        seen
    }

    /// Shortest words from `p` to every state in the underlying digraph,
    /// letters tried in ascending order; `None` where unreachable.
    pub fn paths_from(&self, p: State) -> Vec<Option<Word>> {
        let mut paths: Vec<Option<Word>> = vec![None; self.n];
        paths[p] = Some(Word::empty());
        let mut queue = VecDeque::from([p]);
        while let Some(q) = queue.pop_front() {
            let here = paths[q].clone().unwrap_or_default();
            for x in 0..self.sigma {
                let t = self.step(q, x);
                if paths[t].is_none() {
                    let mut w = here.clone();
                    w.push(x);
                    paths[t] = Some(w);
                    queue.push_back(t);
                }
            }
        }
        paths
    }

    /// Letters acting as a single cycle through all states.
    pub fn circular_letters(&self) -> Vec<Letter> {
        (0..self.sigma)
            .filter(|&x| {
                let mut q = 0;
                for i in 1..=self.n {
                    q = self.step(q, x);
                    if q == 0 {
                        return i == self.n;
                    }
                }
                false
            })
            .collect()
    }
}
