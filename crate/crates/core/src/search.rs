//! Breadth-first search over state sets, forward (images) and backward
//! (preimages). Letters are expanded in ascending order and the first node
//! satisfying the goal wins, which makes every returned word reproducible.

use std::collections::HashSet;

use crate::automaton::Automaton;
use crate::budget::Budget;
use crate::error::Result;
use crate::stateset::StateSet;
use crate::word::{Letter, Word};

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Direction {
    /// Node `T` with word `u` has children `T.x` for words `u·x`.
    Forward,
    /// Node `T` with word `u` has children `T.x⁻¹` for words `x·u`.
    Backward,
}

struct Node {
    set: StateSet,
    parent: usize,
    letter: Letter,
    depth: usize,
}

pub(crate) struct Found {
    pub word: Word,
    pub set: StateSet,
}

pub(crate) fn bfs(
    a: &Automaton,
    start: &StateSet,
    direction: Direction,
    max_depth: Option<usize>,
    budget: &Budget,
    what: &'static str,
    goal: impl Fn(&StateSet) -> bool,
) -> Result<Option<Found>> {
    if goal(start) {
        return Ok(Some(Found {
            word: Word::empty(),
            set: start.clone(),
        }));
    }
    let mut meter = budget.meter(what);
    meter.charge()?;
    let mut seen: HashSet<StateSet> = HashSet::new();
    seen.insert(start.clone());
    let mut nodes = vec![Node {
        set: start.clone(),
        parent: usize::MAX,
        letter: 0,
        depth: 0,
    }];
    let mut head = 0;
    while head < nodes.len() {
        let depth = nodes[head].depth;
        if max_depth.is_some_and(|d| depth >= d) {
            // Nodes are stored in depth order, so nothing shallower remains.
            break;
        }
        for x in 0..a.sigma() {
            let child = match direction {
                Direction::Forward => a.image_letter(&nodes[head].set, x),
                Direction::Backward => a.preimage_letter(&nodes[head].set, x),
            };
            if seen.contains(&child) {
                continue;
            }
            meter.charge()?;
            let done = goal(&child);
            seen.insert(child.clone());
            nodes.push(Node {
                set: child,
                parent: head,
                letter: x,
                depth: depth + 1,
            });
            if done {
                let last = nodes.len() - 1;
                return Ok(Some(Found {
                    word: trace_word(&nodes, last, direction),
                    set: nodes[last].set.clone(),
                }));
            }
        }
        head += 1;
    }
    Ok(None)
}

fn trace_word(nodes: &[Node], mut i: usize, direction: Direction) -> Word {
    let mut letters = Vec::with_capacity(nodes[i].depth);
    while nodes[i].parent != usize::MAX {
        letters.push(nodes[i].letter);
        i = nodes[i].parent;
    }
    // The chain runs leaf to root: the leaf letter was appended last going
    // forward, and prepended last going backward.
    if direction == Direction::Forward {
        letters.reverse();
    }
    Word::new(letters)
}
