use proptest::prelude::*;

use synchro::extension::{run_ea, shortest_extension_word, EaInput};
use synchro::families::{carpi_family, random_automaton, Constraints, DEFAULT_MAX_ATTEMPTS};
use synchro::format::{parse_automaton, serialize};
use synchro::reset::shortest_reset_word;
use synchro::transitivity::{independent_from_synch, preimage_sum};
use synchro::{Automaton, Budget, StateSet, Word};

fn automaton(max_n: usize, max_sigma: usize) -> impl Strategy<Value = Automaton> {
    (1..=max_n, 1..=max_sigma).prop_flat_map(|(n, sigma)| {
        prop::collection::vec(prop::collection::vec(0..n, sigma), n)
            .prop_map(move |rows| Automaton::new(sigma, rows).unwrap())
    })
}

fn word(sigma: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..sigma, 0..=max_len).prop_map(Word::new)
}

fn with_word(max_n: usize, max_sigma: usize) -> impl Strategy<Value = (Automaton, Word)> {
    automaton(max_n, max_sigma).prop_flat_map(|a| {
        let sigma = a.sigma();
        (Just(a), word(sigma, 8))
    })
}

fn with_set_and_words(
    max_n: usize,
) -> impl Strategy<Value = (Automaton, StateSet, StateSet, Word, Word)> {
    automaton(max_n, 3).prop_flat_map(|a| {
        let (n, sigma) = (a.n(), a.sigma());
        let set = prop::collection::vec(any::<bool>(), n)
            .prop_map(move |bits| StateSet::from_states(n, (0..n).filter(|&q| bits[q])).unwrap());
        (Just(a), set.clone(), set, word(sigma, 6), word(sigma, 6))
    })
}

/// Subset-BFS oracle: Q can be shrunk to a singleton.
fn reaches_singleton(a: &Automaton) -> bool {
    let mut seen = vec![a.all_states()];
    let mut queue = vec![a.all_states()];
    while let Some(s) = queue.pop() {
        if s.len() <= 1 {
            return true;
        }
        for x in 0..a.sigma() {
            let t = a.image_letter(&s, x);
            if !seen.contains(&t) {
                seen.push(t.clone());
                queue.push(t);
            }
        }
    }
    false
}

fn seeded_corpus() -> impl Strategy<Value = Automaton> {
    (2usize..=8, any::<u64>()).prop_map(|(n, seed)| {
        random_automaton(n, 2, seed, Constraints::both(), DEFAULT_MAX_ATTEMPTS).unwrap()
    })
}

proptest! {
    #[test]
    fn empty_word_acts_as_identity((a, s, _, _, _) in with_set_and_words(8)) {
        prop_assert_eq!(a.image(&s, &Word::empty()).unwrap(), s.clone());
        prop_assert_eq!(a.preimage(&s, &Word::empty()).unwrap(), s);
    }

    #[test]
    fn actions_compose((a, s, _, u, v) in with_set_and_words(8)) {
        let uv = u.concat(&v);
        prop_assert_eq!(
            a.image(&s, &uv).unwrap(),
            a.image(&a.image(&s, &u).unwrap(), &v).unwrap()
        );
        prop_assert_eq!(
            a.preimage(&s, &uv).unwrap(),
            a.preimage(&a.preimage(&s, &v).unwrap(), &u).unwrap()
        );
    }

    #[test]
    fn singleton_preimages_partition_q((a, w) in with_word(10, 3)) {
        let n = a.n();
        let mut union = StateSet::empty(n);
        for q in 0..n {
            let pre = a.preimage(&StateSet::singleton(n, q).unwrap(), &w).unwrap();
            prop_assert_eq!(pre.intersection_len(&union), 0);
            union.union_with(&pre);
        }
        prop_assert!(union.is_full());
    }

    #[test]
    fn preimage_is_monotone((a, s, t, w, _) in with_set_and_words(8)) {
        let u = s.union(&t);
        prop_assert!(a.preimage(&s, &w).unwrap().is_subset(&a.preimage(&u, &w).unwrap()));
        prop_assert!(a.image(&s, &w).unwrap().is_subset(&a.image(&u, &w).unwrap()));
    }

    #[test]
    fn image_never_grows((a, s, _, w, _) in with_set_and_words(8)) {
        prop_assert!(a.image(&s, &w).unwrap().len() <= s.len());
    }

    #[test]
    fn preimage_of_image_contains_set((a, s, _, w, _) in with_set_and_words(8)) {
        let back = a.preimage(&a.image(&s, &w).unwrap(), &w).unwrap();
        prop_assert!(s.is_subset(&back));
    }

    #[test]
    fn synchronizing_agrees_with_subset_search(a in automaton(7, 3)) {
        prop_assert_eq!(a.is_synchronizing(), reaches_singleton(&a));
    }

    #[test]
    fn reset_word_resets(a in automaton(7, 2)) {
        match shortest_reset_word(&a, &Budget::default()).unwrap() {
            Some(w) => prop_assert_eq!(a.image(&a.all_states(), &w).unwrap().len(), 1),
            None => prop_assert!(!a.is_synchronizing()),
        }
    }

    #[test]
    fn format_round_trips(a in automaton(9, 4)) {
        let text = serialize(&a);
        let back = parse_automaton(&text).unwrap();
        prop_assert_eq!(serialize(&back), text);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn independent_collections_balance_every_subset(a in seeded_corpus(), mask in any::<u64>()) {
        let n = a.n();
        let u = shortest_reset_word(&a, &Budget::default()).unwrap().unwrap();
        let w = independent_from_synch(&a, &u).unwrap();
        let s = StateSet::from_states(n, (0..n).filter(|q| mask >> q & 1 == 1)).unwrap();
        let sum = preimage_sum(&a, &s, &w).unwrap();
        prop_assert!(sum.entries().iter().all(|&c| c == s.len() as u64));
    }

    #[test]
    fn expansion_synchronizes_with_growing_steps(a in seeded_corpus()) {
        let input = EaInput::from_merging_letter(&a).unwrap();
        let trace = run_ea(&a, &input, &Budget::default()).unwrap();
        prop_assert_eq!(a.image(&a.all_states(), &trace.word).unwrap().len(), 1);
        prop_assert!(trace.steps.len() <= a.n() - 2);
        for step in &trace.steps {
            prop_assert!(step.after.len() > step.before.len());
        }
    }

    #[test]
    fn extension_words_are_minimal(a in seeded_corpus(), mask in any::<u64>()) {
        let n = a.n();
        let s = StateSet::from_states(n, (0..n).filter(|q| mask >> q & 1 == 1)).unwrap();
        prop_assume!(!s.is_empty() && !s.is_full());
        let q = a.all_states();
        let w = shortest_extension_word(&a, &s, &q, &Budget::default()).unwrap();
        let w = w.expect("strongly connected synchronizing automata extend every proper subset");
        prop_assert!(a.preimage(&s, &w).unwrap().len() > s.len());
        // No shorter word extends s.
        for len in 0..w.len() {
            for code in 0..(1usize << len) {
                let v = Word::new((0..len).map(|i| code >> i & 1).collect());
                prop_assert!(a.preimage(&s, &v).unwrap().len() <= s.len());
            }
        }
    }
}

#[test]
fn preimage_can_grow_on_a21() {
    let c = carpi_family(2, 1).unwrap();
    let a = c.automaton();
    let s = StateSet::from_states(4, [c.q(1)]).unwrap();
    let pre = a.preimage(&s, &"a".parse().unwrap()).unwrap();
    assert_eq!(pre, StateSet::from_states(4, [c.q(0)]).unwrap());
    let s = StateSet::from_states(4, [c.q(2)]).unwrap();
    let pre = a.preimage(&s, &"a".parse().unwrap()).unwrap();
    assert_eq!(pre, StateSet::from_states(4, [c.q(1), c.s(1)]).unwrap());
}

#[test]
fn family_instances_are_strongly_connected() {
    for (m, k) in [(2, 1), (3, 1), (3, 2)] {
        let a = carpi_family(m, k).unwrap().into_automaton();
        assert!(a.is_strongly_connected() && a.is_synchronizing());
        assert_eq!(a.n(), m + k + 1);
    }
}

#[test]
fn extension_trace_of_c_b() {
    let budget = Budget::default();
    for (m, k) in [(2, 1), (3, 1), (4, 2), (5, 3)] {
        let c = carpi_family(m, k).unwrap();
        let a = c.automaton();
        let n = a.n();
        let c_b = c.c_b();
        let letter_a: Word = "a".parse().unwrap();
        let s1 = a.preimage(&c_b, &letter_a).unwrap();
        assert_eq!(s1, StateSet::from_states(n, [c.q(m)]).unwrap());
        let s_m = a.preimage(&c_b, &letter_a.pow(m)).unwrap();
        let expected: Vec<_> = std::iter::once(c.q(1))
            .chain((1..=k).map(|j| c.s(j)))
            .collect();
        assert_eq!(s_m, StateSet::from_states(n, expected).unwrap());
        let after_b = a.preimage(&s_m, &"b".parse().unwrap()).unwrap();
        let expected: Vec<_> = [c.q(0), c.q(1)]
            .into_iter()
            .chain((1..k).map(|j| c.s(j)))
            .collect();
        assert_eq!(after_b, StateSet::from_states(n, expected).unwrap());
        if k == 1 {
            let w = shortest_extension_word(a, &c_b, &a.all_states(), &budget)
                .unwrap()
                .unwrap();
            assert_eq!(
                w,
                letter_a
                    .pow(m)
                    .concat(&"b".parse().unwrap())
                    .concat(&letter_a.pow(m))
            );
        }
    }
}

#[test]
fn carpi_reset_lengths() {
    for m in 2..=5 {
        for k in 1..=2 {
            let a = carpi_family(m, k).unwrap().into_automaton();
            let w = shortest_reset_word(&a, &Budget::default())
                .unwrap()
                .unwrap();
            assert_eq!(w.len(), m * m + 2, "A({m},{k})");
        }
    }
}

#[test]
fn synchronizing_agrees_with_subset_search_on_500_seeds() {
    for seed in 0..500 {
        let a = random_automaton(6, 2, seed, Constraints::default(), DEFAULT_MAX_ATTEMPTS).unwrap();
        assert_eq!(a.is_synchronizing(), reaches_singleton(&a), "seed {seed}");
    }
}
