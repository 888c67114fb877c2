//! JSON verdict reports.
//!
//! The schema lives in `schema/verdict.schema.json` at the repository root.
//! Words are letter strings, sets are sorted lists of state names.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Value};

use crate::automaton::Automaton;
use crate::budget::{Budget, BudgetSummary};
use crate::error::{Error, Result};
use crate::format::fingerprint;
use crate::ratio::Rational;
use crate::stateset::StateSet;
use crate::word::Word;

pub const SCHEMA_ID: &str = "synchro-verdict/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConjectureId {
    Extension,
    CnExtension,
    KnBalanced,
    KnIndependent,
    LocalExtension,
    LocalBalanced,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    InconclusiveWithinBudget,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::InconclusiveWithinBudget => "inconclusive-within-budget",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exhaustive,
    Sampling,
    Bounded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subject {
    pub fingerprint: String,
    pub family: Option<String>,
    pub states: usize,
    pub letters: usize,
}

impl Subject {
    pub fn of(a: &Automaton, family: Option<String>) -> Self {
        Subject {
            fingerprint: fingerprint(a),
            family,
            states: a.n(),
            letters: a.sigma(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub words: Option<Vec<String>>,
    /// What the witness demonstrates.
    pub claim: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub schema: String,
    pub analysis: String,
    pub subject: Subject,
    pub conjecture: Option<ConjectureId>,
    pub parameters: BTreeMap<String, String>,
    pub measured: BTreeMap<String, Value>,
    pub witness: Option<Witness>,
    pub verdict: Option<Verdict>,
    pub mode: Mode,
    /// Bound covered by an exhaustive search backing a `holds` verdict.
    pub search_bound: Option<String>,
    pub budget: BudgetSummary,
}

impl VerdictReport {
    pub fn new(analysis: &str, a: &Automaton, family: Option<String>, budget: &Budget) -> Self {
        VerdictReport {
            schema: SCHEMA_ID.into(),
            analysis: analysis.into(),
            subject: Subject::of(a, family),
            conjecture: None,
            parameters: BTreeMap::new(),
            measured: BTreeMap::new(),
            witness: None,
            verdict: None,
            mode: Mode::Exhaustive,
            search_bound: None,
            budget: budget.summary(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.into(), value.to_string());
        self
    }

    pub fn measure(&mut self, key: &str, value: impl Into<Value>) {
        self.measured.insert(key.into(), value.into());
    }

    /// Rejects reports that break the reporting rules: a `fails` verdict
    /// needs a witness, an exhaustive `holds` needs its search bound, and
    /// sampling never yields `holds`.
    pub fn check_invariants(&self) -> Result<()> {
        if self.verdict.is_some() && self.conjecture.is_none() {
            return Err(Error::Contract("verdict without a conjecture".into()));
        }
        match self.verdict {
            Some(Verdict::Fails) if self.witness.is_none() => {
                Err(Error::Contract("a failing verdict needs a witness".into()))
            }
            Some(Verdict::Holds) if self.mode == Mode::Sampling => Err(Error::Contract(
                "sampling cannot establish a holding verdict".into(),
            )),
            Some(Verdict::Holds)
                if self.mode == Mode::Exhaustive && self.search_bound.is_none() =>
            {
                Err(Error::Contract(
                    "an exhaustive holding verdict needs its search bound".into(),
                ))
            }
            _ => Ok(()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Plain-text rendering for terminals.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let mut row = |k: &str, v: &str| out.push_str(&format!("{k:<22} {v}\n"));
        row("analysis", &self.analysis);
        row(
            "automaton",
            &format!(
                "{} states, {} letters, {}{}",
                self.subject.states,
                self.subject.letters,
                self.subject.fingerprint,
                self.subject
                    .family
                    .as_ref()
                    .map(|f| format!(" ({f})"))
                    .unwrap_or_default()
            ),
        );
        for (k, v) in &self.parameters {
            row(k, v);
        }
        for (k, v) in &self.measured {
            let text = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            row(k, &text);
        }
        if let Some(w) = &self.witness {
            if let Some(set) = &w.set {
                row("witness set", &format!("{{{}}}", set.join(",")));
            }
            if let Some(word) = &w.word {
                row("witness word", if word.is_empty() { "λ" } else { word });
            }
            if let Some(words) = &w.words {
                row("witness words", &words.join(" "));
            }
            row("witness claim", &w.claim);
        }
        if let (Some(c), Some(v)) = (self.conjecture, self.verdict) {
            let c = serde_json::to_value(c).expect("enum serializes");
            row("conjecture", c.as_str().unwrap_or_default());
            row("verdict", &v.to_string());
        }
        out
    }
}

pub fn set_names(a: &Automaton, s: &StateSet) -> Vec<String> {
    s.iter().map(|q| a.state_name(q)).collect()
}

pub fn set_value(a: &Automaton, s: &StateSet) -> Value {
    json!(set_names(a, s))
}

pub fn word_value(w: &Word) -> Value {
    json!(w.to_letters())
}

pub(crate) fn ser_set<S: Serializer>(s: &StateSet, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(s.iter())
}

pub(crate) fn ser_opt_set<S: Serializer>(
    s: &Option<StateSet>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    match s {
        Some(s) => ser.collect_seq(s.iter()),
        None => ser.serialize_none(),
    }
}

pub(crate) fn ser_ratio<S: Serializer>(
    r: &Rational,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_str(r)
}
