//! Independent and balanced word collections.
//!
//! A collection `W = (w₁..w_n)` is independent when for every ordered pair
//! of states `(s, t)` some `wᵢ` sends `s` to `t`. A collection `V` is
//! balanced for `S` when `Σᵢ [S.vᵢ⁻¹] = m·|S|/n · [Q]`. All such identities
//! are checked over the integers as `coordinate·n = m·|S|`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::automaton::{Automaton, State};
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::extension::{expand, EaInput};
use crate::stateset::StateSet;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WordCollection(Vec<Word>);

impl WordCollection {
    pub fn new(words: Vec<Word>) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::Input(
                "a word collection needs at least one word".into(),
            ));
        }
        Ok(WordCollection(words))
    }

    pub fn words(&self) -> &[Word] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    /// `L = max |wᵢ|`.
    pub fn length(&self) -> usize {
        self.0.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn validate(&self, a: &Automaton) -> Result<()> {
        self.0.iter().try_for_each(|w| a.check_word(w))
    }

    /// `(λ, a, a², …)`: the first `count` powers of one letter.
    pub fn powers(letter: usize, count: usize) -> Result<Self> {
        Self::new((0..count).map(|i| Word::letter(letter).pow(i)).collect())
    }
}

impl fmt::Display for WordCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}

/// Per-state counts, such as `Σᵢ [S.vᵢ⁻¹]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityVector(Vec<u64>);

impl MultiplicityVector {
    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// The common value when all entries agree.
    pub fn constant(&self) -> Option<u64> {
        let first = *self.0.first()?;
        self.0.iter().all(|&c| c == first).then_some(first)
    }
}

/// Every `s` reaches every `t` through some word of `w`, for any size of `w`.
pub fn is_covering(a: &Automaton, w: &WordCollection) -> Result<bool> {
    w.validate(a)?;
    let n = a.n();
    let images: Vec<Vec<State>> = w
        .words()
        .iter()
        .map(|word| a.transformation(word))
        .collect::<Result<_>>()?;
    Ok((0..n).all(|s| {
        let mut hit = StateSet::empty(n);
        for t in &images {
            hit.insert(t[s]);
        }
        hit.is_full()
    }))
}

/// Independence of a collection of exactly `n` words.
pub fn is_independent(a: &Automaton, w: &WordCollection) -> Result<bool> {
    if w.size() != a.n() {
        return Err(Error::Input(format!(
            "an independent collection has exactly {} words, got {}",
            a.n(),
            w.size()
        )));
    }
    is_covering(a, w)
}

/// `wᵢ = u·zᵢ` where `Q.u = {p}` and `zᵢ` is a shortest path word from `p`
/// to state `i`; the result is independent with length at most `|u| + n − 1`.
pub fn independent_from_synch(a: &Automaton, u: &Word) -> Result<WordCollection> {
    let image = a.image(&a.all_states(), u)?;
    if image.len() != 1 {
        return Err(Error::Input(format!(
            "{u} does not synchronize the automaton"
        )));
    }
    if !a.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let p = image.first().expect("singleton");
    let words = a
        .paths_from(p)
        .into_iter()
        .map(|z| u.concat(&z.expect("strongly connected")))
        .collect();
    WordCollection::new(words)
}

/// `Σᵢ [s.vᵢ⁻¹]`.
pub fn preimage_sum(a: &Automaton, s: &StateSet, v: &WordCollection) -> Result<MultiplicityVector> {
    a.check_set(s)?;
    v.validate(a)?;
    let mut counts = vec![0u64; a.n()];
    for w in v.words() {
        for q in &a.preimage(s, w)? {
            counts[q] += 1;
        }
    }
    Ok(MultiplicityVector(counts))
}

/// Whether `Σᵢ [s.vᵢ⁻¹] = m·|s|/n·[Q]`, decided in integers.
pub fn is_balanced(a: &Automaton, s: &StateSet, v: &WordCollection) -> Result<bool> {
    a.check_set(s)?;
    v.validate(a)?;
    let n = a.n() as u64;
    let total = v.size() as u64 * s.len() as u64;
    if !total.is_multiple_of(n) {
        return Ok(false);
    }
    let sum = preimage_sum(a, s, v)?;
    Ok(sum.entries().iter().all(|&c| c * n == total))
}

/// `Σᵢ [s.wᵢ⁻¹]` for an independent `w`. The result is expected to be the
/// constant vector `|s|`; callers check this rather than it being assumed.
pub fn balanced_witness_from_independent(
    a: &Automaton,
    s: &StateSet,
    w: &WordCollection,
) -> Result<MultiplicityVector> {
    if !is_independent(a, w)? {
        return Err(Error::Input(format!("{w} is not independent")));
    }
    preimage_sum(a, s, w)
}

/// Distinct preimages `s.u⁻¹` over words of length at most `max_len`, each
/// with the first word found for it.
fn preimage_family(
    a: &Automaton,
    s: &StateSet,
    max_len: usize,
    meter: &mut Meter<'_>,
) -> Result<Vec<(StateSet, Word)>> {
    let mut seen: HashSet<StateSet> = HashSet::from([s.clone()]);
    let mut family = vec![(s.clone(), Word::empty())];
    let mut frontier = 0;
    for _ in 0..max_len {
        let end = family.len();
        for i in frontier..end {
            for x in 0..a.sigma() {
                let set = a.preimage_letter(&family[i].0, x);
                if seen.insert(set.clone()) {
                    meter.charge()?;
                    let word = Word::letter(x).concat(&family[i].1);
                    family.push((set, word));
                }
            }
        }
        if family.len() == end {
            break;
        }
        frontier = end;
    }
    Ok(family)
}

struct CoverSearch<'a> {
    sets: &'a [Vec<State>],
    max_set: usize,
    pad: bool,
    meter: Meter<'a>,
    failed: HashSet<(Vec<u32>, usize)>,
}

impl CoverSearch<'_> {
    /// Chooses `slots` sets (with repetition) so that state `q` is covered
    /// exactly `need[q]` times; remaining slots may take the empty preimage
    /// when `pad` is set.
    fn solve(&mut self, need: &mut [u32], slots: usize, chosen: &mut Vec<usize>) -> Result<bool> {
        self.meter.charge()?;
        let remaining: usize = need.iter().map(|&c| c as usize).sum();
        if remaining == 0 {
            return Ok(slots == 0 || self.pad);
        }
        if slots == 0
            || remaining > slots * self.max_set
            || need.iter().any(|&c| c as usize > slots)
        {
            return Ok(false);
        }
        let key = (need.to_vec(), slots);
        if self.failed.contains(&key) {
            return Ok(false);
        }
        let usable = |set: &Vec<State>, need: &[u32]| set.iter().all(|&q| need[q] > 0);
        // Most constrained state: fewest usable sets through it.
        let mut best: Option<(usize, State)> = None;
        for (q, &c) in need.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let options = self
                .sets
                .iter()
                .filter(|set| set.contains(&q) && usable(set, need))
                .count();
            if best.is_none_or(|(count, _)| options < count) {
                best = Some((options, q));
            }
        }
        let (options, q) = best.expect("some state still needs cover");
        if options > 0 {
            for (j, set) in self.sets.iter().enumerate() {
                if !set.contains(&q) || !usable(set, need) {
                    continue;
                }
                set.iter().for_each(|&p| need[p] -= 1);
                chosen.push(j);
                let ok = self.solve(need, slots - 1, chosen)?;
                if ok {
                    return Ok(true);
                }
                chosen.pop();
                set.iter().for_each(|&p| need[p] += 1);
            }
        }
        self.failed.insert(key);
        Ok(false)
    }
}

/// Searches for a balanced collection for `s` with at most `max_size` words,
/// each of length at most `max_len`. `None` only means nothing was found
/// within these bounds.
pub fn search_balanced_collection(
    a: &Automaton,
    s: &StateSet,
    max_len: usize,
    max_size: usize,
    budget: &Budget,
) -> Result<Option<WordCollection>> {
    a.check_set(s)?;
    if s.is_empty() || s.is_full() {
        return Err(Error::Input(format!(
            "balanced collections concern non-empty proper subsets, got {s}"
        )));
    }
    let n = a.n();
    let mut meter = budget.meter("balanced collection search");
    let family = preimage_family(a, s, max_len, &mut meter)?;
    let pad_word = family
        .iter()
        .find(|(set, _)| set.is_empty())
        .map(|(_, w)| w.clone());
    let (sets, words): (Vec<Vec<State>>, Vec<Word>) = family
        .into_iter()
        .filter(|(set, _)| !set.is_empty())
        .map(|(set, w)| (set.to_vec(), w))
        .unzip();
    let max_set = sets.iter().map(Vec::len).max().unwrap_or(0);
    let mut search = CoverSearch {
        sets: &sets,
        max_set,
        pad: pad_word.is_some(),
        meter,
        failed: HashSet::new(),
    };
    for size in 1..=max_size {
        if !(size * s.len()).is_multiple_of(n) {
            continue;
        }
        let per_state = (size * s.len() / n) as u32;
        let mut need = vec![per_state; n];
        let mut chosen = Vec::new();
        match search.solve(&mut need, size, &mut chosen) {
            Ok(true) => {
                let mut out: Vec<Word> = chosen.iter().map(|&j| words[j].clone()).collect();
                if let Some(pad) = &pad_word {
                    out.resize(size, pad.clone());
                }
                return WordCollection::new(out).map(Some);
            }
            Ok(false) => {}
            Err(Error::Budget(msg)) => {
                return Err(Error::Budget(format!(
                    "{msg}; sizes below {size} were searched completely"
                )))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinIndependent {
    /// Least `L` admitting an independent collection of length `L`.
    pub length: usize,
    pub witness: WordCollection,
    /// Distinct transformations induced by words of length at most `length`.
    pub transformations: usize,
}

/// Least `L ≤ max_len` such that some independent collection uses only
/// words of length at most `L`.
///
/// Words are enumerated level by level and deduplicated by the
/// transformation they induce, keeping the shortest representative. Each
/// level then solves the exact cover whose items are the `n²` ordered pairs
/// `(s, t)` and whose options are transformations `f`, covering `(s, f(s))`
/// for every `s`.
pub fn min_independent_length(
    a: &Automaton,
    max_len: usize,
    budget: &Budget,
) -> Result<Option<MinIndependent>> {
    let n = a.n();
    let mut meter = budget.meter("transformation enumeration");
    let identity: Vec<State> = (0..n).collect();
    let mut reps: HashMap<Vec<State>, Word> = HashMap::from([(identity.clone(), Word::empty())]);
    let mut levels: Vec<Vec<Vec<State>>> = vec![vec![identity]];
    for level in 0..=max_len {
        if level > 0 {
            let mut next = Vec::new();
            for f in &levels[level - 1] {
                let word = reps[f].clone();
                for x in 0..a.sigma() {
                    let g: Vec<State> = f.iter().map(|&q| a.step(q, x)).collect();
                    if !reps.contains_key(&g) {
                        meter.charge()?;
                        let mut w = word.clone();
                        w.push(x);
                        reps.insert(g.clone(), w);
                        next.push(g);
                    }
                }
            }
            let grew = !next.is_empty();
            levels.push(next);
            if !grew {
                // The monoid is exhausted; later levels add nothing.
                return Ok(None);
            }
        }
        let options: Vec<&Vec<State>> = levels.iter().flatten().collect();
        if let Some(chosen) = exact_cover(n, &options, budget)? {
            let words = chosen.iter().map(|&i| reps[options[i]].clone()).collect();
            return Ok(Some(MinIndependent {
                length: level,
                witness: WordCollection::new(words)?,
                transformations: options.len(),
            }));
        }
    }
    Ok(None)
}

fn exact_cover(n: usize, options: &[&Vec<State>], budget: &Budget) -> Result<Option<Vec<usize>>> {
    // Cheap necessary condition: every pair is covered by some option.
    let mut reachable = vec![false; n * n];
    for f in options {
        for (s, &t) in f.iter().enumerate() {
            reachable[s * n + t] = true;
        }
    }
    if reachable.iter().any(|&r| !r) {
        return Ok(None);
    }
    let mut covered = vec![false; n * n];
    let mut chosen = Vec::new();
    let mut meter = budget.meter("independent collection exact cover");
    if cover_step(n, options, &mut covered, &mut chosen, &mut meter)? {
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

fn cover_step(
    n: usize,
    options: &[&Vec<State>],
    covered: &mut [bool],
    chosen: &mut Vec<usize>,
    meter: &mut Meter<'_>,
) -> Result<bool> {
    meter.charge()?;
    if chosen.len() == n {
        return Ok(true);
    }
    let available: Vec<usize> = (0..options.len())
        .filter(|&i| {
            options[i]
                .iter()
                .enumerate()
                .all(|(s, &t)| !covered[s * n + t])
        })
        .collect();
    let mut counts = vec![0usize; n * n];
    for &i in &available {
        for (s, &t) in options[i].iter().enumerate() {
            counts[s * n + t] += 1;
        }
    }
    // Most constrained uncovered pair.
    let item = (0..n * n)
        .filter(|&i| !covered[i])
        .min_by_key(|&i| counts[i])
        .expect("fewer than n options chosen leaves pairs uncovered");
    if counts[item] == 0 {
        return Ok(false);
    }
    let (s, t) = (item / n, item % n);
    for &i in &available {
        if options[i][s] != t {
            continue;
        }
        for (p, &q) in options[i].iter().enumerate() {
            covered[p * n + q] = true;
        }
        chosen.push(i);
        if cover_step(n, options, covered, chosen, meter)? {
            return Ok(true);
        }
        chosen.pop();
        for (p, &q) in options[i].iter().enumerate() {
            covered[p * n + q] = false;
        }
    }
    Ok(false)
}

/// Expansion from a letter-merged pair with `C_e = Q`, each step limited to
/// `n + L_W − 1` letters. The result has length at most
/// `(n − 2)(n + L_W − 1) + 1`. A step exceeding the limit is reported as
/// [`Error::Anomaly`].
pub fn synch_via_independent(a: &Automaton, w: &WordCollection, budget: &Budget) -> Result<Word> {
    if !is_independent(a, w)? {
        return Err(Error::Input(format!("{w} is not independent")));
    }
    if !a.is_synchronizing() {
        return Err(Error::NotSynchronizing);
    }
    if !a.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let n = a.n();
    if n == 1 {
        return Ok(Word::empty());
    }
    let cap = n + w.length() - 1;
    let input = EaInput::from_merging_letter(a)?;
    let trace = match expand(a, &input, Some(cap), budget) {
        Err(Error::ExpansionFailure { stuck, .. }) => return Err(Error::Anomaly { stuck, cap }),
        other => other?,
    };
    let bound = (n - 2) * cap + 1;
    if trace.word.len() > bound {
        return Err(Error::Contract(format!(
            "word of length {} exceeds (n-2)(n+L-1)+1 = {bound}",
            trace.word.len()
        )));
    }
    Ok(trace.word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{carpi_family, cerny, random_automaton, Constraints};
    use crate::reset::shortest_reset_word;

    fn set(n: usize, states: &[usize]) -> StateSet {
        StateSet::from_states(n, states.iter().copied()).unwrap()
    }

    fn circular4() -> WordCollection {
        WordCollection::powers(0, 4).unwrap()
    }

    #[test]
    fn circular_collection_is_independent() {
        let a = cerny(4).unwrap();
        assert!(is_independent(&a, &circular4()).unwrap());
        let lambdas = WordCollection::new(vec![Word::empty(); 4]).unwrap();
        assert!(!is_independent(&a, &lambdas).unwrap());
        let short = WordCollection::powers(0, 3).unwrap();
        assert!(matches!(is_independent(&a, &short), Err(Error::Input(_))));
        assert!(!is_covering(&a, &short).unwrap());
    }

    #[test]
    fn construction_from_reset_word() {
        let a = cerny(4).unwrap();
        let u = shortest_reset_word(&a, &Budget::default())
            .unwrap()
            .unwrap();
        let w = independent_from_synch(&a, &u).unwrap();
        assert!(is_independent(&a, &w).unwrap());
        assert!(w.length() <= 12);

        let c = carpi_family(3, 1).unwrap();
        let a = c.automaton();
        let u = shortest_reset_word(a, &Budget::default()).unwrap().unwrap();
        let w = independent_from_synch(a, &u).unwrap();
        assert!(is_independent(a, &w).unwrap());
        assert!(w.length() <= 15);

        let one = Automaton::new(1, vec![vec![0]]).unwrap();
        let w = independent_from_synch(&one, &Word::empty()).unwrap();
        assert_eq!(w.words(), &[Word::empty()]);

        assert!(independent_from_synch(&cerny(4).unwrap(), &"a".parse().unwrap()).is_err());
    }

    #[test]
    fn balanced_examples() {
        let a = cerny(4).unwrap();
        assert!(is_balanced(&a, &set(4, &[0]), &circular4()).unwrap());
        assert!(is_balanced(&a, &set(4, &[0, 1]), &circular4()).unwrap());
        let sum = preimage_sum(&a, &set(4, &[0, 1]), &circular4()).unwrap();
        assert_eq!(sum.entries(), &[2, 2, 2, 2]);
        let lambda = WordCollection::new(vec![Word::empty()]).unwrap();
        for s in [&[0][..], &[1, 2], &[0, 1, 3]] {
            assert!(!is_balanced(&a, &set(4, s), &lambda).unwrap());
        }
    }

    #[test]
    fn divisibility_guard() {
        let a = cerny(4).unwrap();
        // m·|s| = 3 is not a multiple of 4.
        let v = WordCollection::powers(0, 3).unwrap();
        assert!(!is_balanced(&a, &set(4, &[0]), &v).unwrap());
    }

    #[test]
    fn preimage_sum_identity_on_circular_collection() {
        let a = cerny(4).unwrap();
        let v = balanced_witness_from_independent(&a, &set(4, &[0, 2]), &circular4()).unwrap();
        assert_eq!(v.entries(), &[2, 2, 2, 2]);
        let v = balanced_witness_from_independent(&a, &a.all_states(), &circular4()).unwrap();
        assert_eq!(v.constant(), Some(4));
        let lambdas = WordCollection::new(vec![Word::empty(); 4]).unwrap();
        assert!(balanced_witness_from_independent(&a, &set(4, &[0]), &lambdas).is_err());
    }

    #[test]
    fn balanced_search_finds_circular_collection() {
        let a = cerny(4).unwrap();
        let s = set(4, &[0]);
        let v = search_balanced_collection(&a, &s, 3, 4, &Budget::default())
            .unwrap()
            .unwrap();
        assert!(is_balanced(&a, &s, &v).unwrap());
        assert!(v.size() <= 4 && v.length() <= 3);
        assert!(search_balanced_collection(&a, &a.all_states(), 3, 4, &Budget::default()).is_err());
    }

    /// Tries every multiset of distinct preimages of words up to `max_len`.
    fn brute_balanced_exists(a: &Automaton, s: &StateSet, max_len: usize, max_size: usize) -> bool {
        let mut vectors: Vec<Vec<usize>> = Vec::new();
        let mut frontier = vec![Vec::<usize>::new()];
        for _ in 0..=max_len {
            let mut next = Vec::new();
            for letters in frontier {
                let v: Vec<usize> = (0..a.n())
                    .map(|p| usize::from(s.contains(letters.iter().fold(p, |q, &x| a.step(q, x)))))
                    .collect();
                if !vectors.contains(&v) {
                    vectors.push(v);
                }
                for x in 0..a.sigma() {
                    let mut longer = letters.clone();
                    longer.push(x);
                    next.push(longer);
                }
            }
            frontier = next;
        }
        fn go(
            vectors: &[Vec<usize>],
            from: usize,
            sum: &mut Vec<usize>,
            used: usize,
            max: usize,
            s_len: usize,
        ) -> bool {
            if used > 0 && sum.iter().all(|&c| c * sum.len() == used * s_len) {
                return true;
            }
            if used == max {
                return false;
            }
            for j in from..vectors.len() {
                for (c, v) in sum.iter_mut().zip(&vectors[j]) {
                    *c += v;
                }
                let found = go(vectors, j, sum, used + 1, max, s_len);
                for (c, v) in sum.iter_mut().zip(&vectors[j]) {
                    *c -= v;
                }
                if found {
                    return true;
                }
            }
            false
        }
        go(&vectors, 0, &mut vec![0; a.n()], 0, max_size, s.len())
    }

    #[test]
    fn balanced_search_agrees_with_brute_force_on_a21() {
        let c = carpi_family(2, 1).unwrap();
        let a = c.automaton();
        let budget = Budget::default();
        for mask in 1u32..15 {
            let s = set(
                4,
                &(0..4).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>(),
            );
            for max_len in 0..=4 {
                let found = search_balanced_collection(a, &s, max_len, 6, &budget).unwrap();
                assert_eq!(
                    found.is_some(),
                    brute_balanced_exists(a, &s, max_len, 6),
                    "{s} len {max_len}"
                );
                if let Some(v) = found {
                    assert!(is_balanced(a, &s, &v).unwrap());
                    assert!(v.length() <= max_len && v.size() <= 6);
                }
            }
        }
    }

    #[test]
    fn min_independent_cerny4() {
        let a = cerny(4).unwrap();
        let r = min_independent_length(&a, 6, &Budget::default())
            .unwrap()
            .unwrap();
        assert!(r.length <= 3);
        assert!(is_independent(&a, &r.witness).unwrap());
        assert_eq!(r.witness.length(), r.length);
        let one = Automaton::new(2, vec![vec![0, 0]]).unwrap();
        assert_eq!(
            min_independent_length(&one, 3, &Budget::default())
                .unwrap()
                .unwrap()
                .length,
            0
        );
    }

    /// Independent collections of length at most `len`, by trying every
    /// n-multiset of words directly.
    fn brute_independent_exists(a: &Automaton, len: usize) -> bool {
        let mut words = vec![Word::empty()];
        let mut frontier = vec![Word::empty()];
        for _ in 0..len {
            let mut next = Vec::new();
            for w in &frontier {
                for x in 0..a.sigma() {
                    let mut v = w.clone();
                    v.push(x);
                    next.push(v);
                }
            }
            words.extend(next.iter().cloned());
            frontier = next;
        }
        let n = a.n();
        fn rec(
            a: &Automaton,
            words: &[Word],
            start: usize,
            pick: &mut Vec<Word>,
            n: usize,
        ) -> bool {
            if pick.len() == n {
                return is_independent(a, &WordCollection::new(pick.clone()).unwrap()).unwrap();
            }
            for i in start..words.len() {
                pick.push(words[i].clone());
                if rec(a, words, i, pick, n) {
                    return true;
                }
                pick.pop();
            }
            false
        }
        rec(a, &words, 0, &mut Vec::new(), n)
    }

    #[test]
    fn min_independent_matches_brute_force_on_small_automata() {
        let c = carpi_family(2, 1).unwrap();
        let r = min_independent_length(c.automaton(), 8, &Budget::default())
            .unwrap()
            .unwrap();
        assert!(is_independent(c.automaton(), &r.witness).unwrap());
        assert!(brute_independent_exists(c.automaton(), r.length));
        assert!(!brute_independent_exists(c.automaton(), r.length - 1));

        for seed in 0..5 {
            let a = random_automaton(3, 2, seed, Constraints::both(), 1000).unwrap();
            let r = min_independent_length(&a, 6, &Budget::default())
                .unwrap()
                .unwrap();
            assert!(brute_independent_exists(&a, r.length));
            if r.length > 0 {
                assert!(!brute_independent_exists(&a, r.length - 1));
            }
        }
    }

    #[test]
    fn synch_via_circular_collection() {
        let a = cerny(4).unwrap();
        let w = synch_via_independent(&a, &circular4(), &Budget::default()).unwrap();
        assert!(w.len() <= 13);
        assert_eq!(a.image(&a.all_states(), &w).unwrap().len(), 1);

        let two = cerny(2).unwrap();
        let w = synch_via_independent(
            &two,
            &WordCollection::powers(0, 2).unwrap(),
            &Budget::default(),
        )
        .unwrap();
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn synch_via_constructed_collection_on_a31() {
        let c = carpi_family(3, 1).unwrap();
        let a = c.automaton();
        let u = shortest_reset_word(a, &Budget::default()).unwrap().unwrap();
        let w = independent_from_synch(a, &u).unwrap();
        let v = synch_via_independent(a, &w, &Budget::default()).unwrap();
        assert!(v.len() <= 3 * (5 + w.length() - 1) + 1);
        assert!(v.len() >= 11);
        assert_eq!(a.image(&a.all_states(), &v).unwrap().len(), 1);
    }
}
