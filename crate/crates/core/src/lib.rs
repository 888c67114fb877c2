//! Analysis of synchronizing automata.
//!
//! The crate computes reset words (exact and greedy), extension words and the
//! Expansion Algorithm, independent and balanced word collections, and
//! rebuilds the counterexamples carried by the `A(m,k)` family.
//!
//! ```
//! use synchro::{families::cerny, reset::shortest_reset_word, Budget};
//!
//! let a = cerny(4).unwrap();
//! let w = shortest_reset_word(&a, &Budget::default()).unwrap().unwrap();
//! assert_eq!(w.len(), 9);
//! ```

pub mod automaton;
pub mod budget;
pub mod dot;
pub mod error;
pub mod extension;
pub mod families;
pub mod format;
pub mod fuzz;
pub mod ratio;
pub mod report;
pub mod reset;
mod search;
pub mod stateset;
pub mod transitivity;
pub mod verify;
pub mod word;

pub use automaton::{Automaton, State};
pub use budget::Budget;
pub use error::{Error, Result};
pub use ratio::Rational;
pub use stateset::StateSet;
pub use word::{Letter, Word};
