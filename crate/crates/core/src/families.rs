//! Generators: the Černý series, the two-letter family `A(m,k)` with slow
//! extension, and seeded random automata.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::automaton::{Automaton, State};
use crate::error::{Error, Result};
use crate::stateset::StateSet;

pub const LETTER_A: usize = 0;
pub const LETTER_B: usize = 1;

/// The Černý automaton `C_n`: `a` rotates `i ↦ i+1 mod n`, `b` sends `0` to
/// `1` and fixes everything else.
pub fn cerny(n: usize) -> Result<Automaton> {
    if n < 2 {
        return Err(Error::Unsupported(format!("cerny needs n >= 2, got {n}")));
    }
    Automaton::from_fn(n, 2, |q, x| match x {
        LETTER_A => (q + 1) % n,
        _ if q == 0 => 1,
        _ => q,
    })
}

/// `A(m,k)` together with the indexing of its two kinds of states.
///
/// States `q₀..q_m` are indices `0..=m`; `s₁..s_k` are indices `m+1..=m+k`.
/// Letter `a` walks the cycle `q₀ → q₁ → … → q_m → q₀` and sends every `sⱼ`
/// to `q₂`; letter `b` walks the cycle `q₀ → s₁ → … → s_k → q₀` and fixes
/// `q₁..q_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarpiAutomaton {
    m: usize,
    k: usize,
    automaton: Automaton,
}

pub fn carpi_family(m: usize, k: usize) -> Result<CarpiAutomaton> {
    CarpiAutomaton::new(m, k)
}

impl CarpiAutomaton {
    pub fn new(m: usize, k: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::Unsupported(format!(
                "A(m,k) needs m >= 2 so that q2 exists, got m = {m}"
            )));
        }
        if k < 1 {
            return Err(Error::Unsupported(format!(
                "A(m,k) needs k >= 1, got k = {k}"
            )));
        }
        let n = m + k + 1;
        let a = Automaton::from_fn(n, 2, |q, x| match (x, q) {
            (LETTER_A, q) if q < m => q + 1,
            (LETTER_A, q) if q == m => 0,
            (LETTER_A, _) => 2,
            (_, 0) => m + 1,
            (_, q) if q == m + k => 0,
            (_, q) if q > m => q + 1,
            (_, q) => q,
        })?;
        let names = (0..=m)
            .map(|i| format!("q{i}"))
            .chain((1..=k).map(|j| format!("s{j}")))
            .collect();
        Ok(CarpiAutomaton {
            m,
            k,
            automaton: a.with_names(names)?,
        })
    }

    /// Identifies `a` as `A(m,k)` for some split of its states, comparing
    /// transition tables only.
    pub fn recognize(a: &Automaton) -> Result<Self> {
        let n = a.n();
        for m in 2..n {
            let candidate = Self::new(m, n - m - 1)?;
            let same = (0..n).all(|q| a.row(q) == candidate.automaton.row(q));
            if a.sigma() == 2 && same {
                return Ok(candidate);
            }
        }
        Err(Error::Input(
            "automaton is not a member of the A(m,k) family".into(),
        ))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.m + self.k + 1
    }

    pub fn automaton(&self) -> &Automaton {
        &self.automaton
    }

    pub fn into_automaton(self) -> Automaton {
        self.automaton
    }

    pub fn q(&self, i: usize) -> State {
        assert!(i <= self.m);
        i
    }

    pub fn s(&self, j: usize) -> State {
        assert!((1..=self.k).contains(&j));
        self.m + j
    }

    /// `C_b = {q₀, s₁, …, s_k}`, the states moved by `b`.
    pub fn c_b(&self) -> StateSet {
        let mut s = StateSet::empty(self.n());
        s.insert(0);
        for j in 1..=self.k {
            s.insert(self.s(j));
        }
        s
    }

    /// `{q₀, …, q_m}`.
    pub fn q_chain(&self) -> StateSet {
        StateSet::from_states(self.n(), 0..=self.m).expect("chain indices are in range")
    }

    /// Whether `s.b⁻¹ ≠ s`.
    pub fn unstable_by_b(&self, s: &StateSet) -> Result<bool> {
        self.automaton.check_set(s)?;
        Ok(self.automaton.preimage_letter(s, LETTER_B) != *s)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Constraints {
    pub synchronizing: bool,
    pub strongly_connected: bool,
}

impl Constraints {
    pub fn both() -> Self {
        Constraints {
            synchronizing: true,
            strongly_connected: true,
        }
    }

    pub fn admits(&self, a: &Automaton) -> bool {
        (!self.strongly_connected || a.is_strongly_connected())
            && (!self.synchronizing || a.is_synchronizing())
    }
}

pub const DEFAULT_MAX_ATTEMPTS: usize = 100_000;

/// Uniformly random transition table, redrawn until it satisfies
/// `constraints`. The same seed always yields the same automaton.
pub fn random_automaton(
    n: usize,
    sigma: usize,
    seed: u64,
    constraints: Constraints,
    max_attempts: usize,
) -> Result<Automaton> {
    if n == 0 || sigma == 0 {
        return Err(Error::Input(
            "random automata need n >= 1 and sigma >= 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_attempts {
        let rows = (0..n)
            .map(|_| (0..sigma).map(|_| rng.gen_range(0..n)).collect())
            .collect();
        let a = Automaton::new(sigma, rows)?;
        if constraints.admits(&a) {
            return Ok(a);
        }
    }
    Err(Error::Budget(format!(
        "no automaton with {n} states and {sigma} letters satisfied the constraints \
         in {max_attempts} attempts"
    )))
}

/// Family addresses as written on the command line: `cerny:N`,
/// `carpi:M,K`, `random:N,SIGMA,SEED`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FamilySpec {
    Cerny { n: usize },
    Carpi { m: usize, k: usize },
    Random { n: usize, sigma: usize, seed: u64 },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Automaton> {
        self.build_with(Constraints::default())
    }

    /// Constraints only affect the random family.
    pub fn build_with(&self, constraints: Constraints) -> Result<Automaton> {
        match *self {
            FamilySpec::Cerny { n } => cerny(n),
            FamilySpec::Carpi { m, k } => Ok(carpi_family(m, k)?.into_automaton()),
            FamilySpec::Random { n, sigma, seed } => {
                random_automaton(n, sigma, seed, constraints, DEFAULT_MAX_ATTEMPTS)
            }
        }
    }

    pub fn state_count(&self) -> usize {
        match *self {
            FamilySpec::Cerny { n } | FamilySpec::Random { n, .. } => n,
            FamilySpec::Carpi { m, k } => m + k + 1,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cerny { n } => write!(f, "cerny:{n}"),
            FamilySpec::Carpi { m, k } => write!(f, "carpi:{m},{k}"),
            FamilySpec::Random { n, sigma, seed } => write!(f, "random:{n},{sigma},{seed}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| Error::Input(format!("family spec {s:?} lacks ':'")))?;
        let nums: Vec<u64> = args
            .split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| Error::Input(format!("bad number {t:?} in family spec {s:?}")))
            })
            .collect::<Result<_>>()?;
        let positive = |v: u64| {
            if v == 0 {
                Err(Error::Input(format!(
                    "family parameters must be positive in {s:?}"
                )))
            } else {
                Ok(v as usize)
            }
        };
        match (kind, nums.as_slice()) {
            ("cerny", &[n]) => Ok(FamilySpec::Cerny { n: positive(n)? }),
            ("carpi", &[m, k]) => Ok(FamilySpec::Carpi {
                m: positive(m)?,
                k: positive(k)?,
            }),
            ("random", &[n, sigma, seed]) => Ok(FamilySpec::Random {
                n: positive(n)?,
                sigma: positive(sigma)?,
                seed,
            }),
            _ => Err(Error::Input(format!(
                "unknown family spec {s:?}; expected cerny:N, carpi:M,K or random:N,SIGMA,SEED"
            ))),
        }
    }
}
