//! Verifiers that rebuild the refutations carried by the `A(m,k)` family.
//!
//! * Item 1: on `B_n = A(n−2, 1)` the set `C_b` needs an extension word of
//!   length `2n − 3 > n`, so not every proper subset is `n`-extendable.
//! * Item 2: the same length exceeds `c·n` once `n > 3/(2 − c)`.
//! * Item 3: on `A(m,k)`, measures the shortest word growing `C_b` to
//!   `k + 1` chain states and compares it with `k(m+1) + m` and `k·n`. The
//!   verdict is a failure only when that length exceeds `k·n`.

use serde_json::json;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::extension::{extension_radius, shortest_extension_word};
use crate::families::{carpi_family, CarpiAutomaton, LETTER_A, LETTER_B};
use crate::ratio::{floor_times, Rational};
use crate::report::{
    set_names, set_value, word_value, ConjectureId, Mode, Verdict, VerdictReport, Witness,
};
use crate::search::{bfs, Direction};
use crate::transitivity::search_balanced_collection;
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PropositionItem {
    /// Extension conjecture on `B_n`.
    Extension { n: usize },
    /// `cn`-Extension conjecture on `B_n`.
    CnExtension { n: usize, c: Rational },
    /// `kn`-Balanced and `kn`-Independent-Set conjectures on `A(m,k)`.
    KnBalanced { m: usize, k: usize },
}

/// `a^m b a^m`.
pub fn slow_extension_word(m: usize) -> Word {
    let am = Word::letter(LETTER_A).pow(m);
    am.concat(&Word::letter(LETTER_B)).concat(&am)
}

/// `(a^m b)^k a^m`.
pub fn slow_chain_word(m: usize, k: usize) -> Word {
    let am = Word::letter(LETTER_A).pow(m);
    am.concat(&Word::letter(LETTER_B)).pow(k).concat(&am)
}

pub fn verify_proposition(item: PropositionItem, budget: &Budget) -> Result<Vec<VerdictReport>> {
    match item {
        PropositionItem::Extension { n } => {
            check_series_n(n)?;
            extension_item(
                n,
                Rational::from_integer(1),
                ConjectureId::Extension,
                budget,
            )
            .map(|r| vec![r])
        }
        PropositionItem::CnExtension { n, c } => {
            check_series_n(n)?;
            if c >= Rational::from_integer(2) || c == Rational::from_integer(0) {
                return Err(Error::Unsupported(format!(
                    "item 2 needs 0 < c < 2, got {c}"
                )));
            }
            extension_item(n, c, ConjectureId::CnExtension, budget).map(|r| vec![r])
        }
        PropositionItem::KnBalanced { m, k } => balanced_item(m, k, budget),
    }
}

fn check_series_n(n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::Unsupported(format!(
            "B_n = A(n-2,1) needs n >= 4, got {n}"
        )));
    }
    Ok(())
}

fn extension_item(
    n: usize,
    c: Rational,
    conjecture: ConjectureId,
    budget: &Budget,
) -> Result<VerdictReport> {
    let family = carpi_family(n - 2, 1)?;
    let a = family.automaton();
    let q = a.all_states();
    let c_b = family.c_b();
    let bound = floor_times(c, n);

    let mut report = VerdictReport::new(
        match conjecture {
            ConjectureId::Extension => "extension-refutation",
            _ => "cn-extension-refutation",
        },
        a,
        Some(format!("carpi:{},1", n - 2)),
        budget,
    )
    .param("n", n)
    .param("c", c);
    report.conjecture = Some(conjecture);
    report.measure("length_bound", bound);

    let shortest = shortest_extension_word(a, &c_b, &q, budget)?
        .ok_or_else(|| Error::Contract("C_b has no extension word in B_n".into()))?;
    let closed_form = slow_extension_word(n - 2);
    let closed_form_extends = a.preimage(&c_b, &closed_form)?.len() > c_b.len();
    report.measure("shortest_extension_length", shortest.len());
    report.measure("shortest_extension_word", word_value(&shortest));
    report.measure("expected_length_2n_minus_3", 2 * n - 3);
    report.measure("closed_form_word", word_value(&closed_form));
    report.measure("closed_form_extends", closed_form_extends);
    report.measure(
        "closed_form_confirmed",
        closed_form_extends && shortest.len() == 2 * n - 3 && shortest == closed_form,
    );
    report.measure(
        "threshold_3_over_2_minus_c",
        json!((Rational::from_integer(3) / (Rational::from_integer(2) - c)).to_string()),
    );

    if shortest.len() > bound {
        report.verdict = Some(Verdict::Fails);
        report.witness = Some(Witness {
            set: Some(set_names(a, &c_b)),
            word: Some(shortest.to_letters()),
            words: None,
            claim: format!(
                "no word of length <= {bound} extends C_b; the shortest extension word has length {}",
                shortest.len()
            ),
        });
        return Ok(report);
    }

    // C_b alone does not refute at this size; decide from every subset.
    match extension_radius(a, &q, 1, budget) {
        Ok(radius) => {
            report.measure("radius", json!(radius.length));
            report.measure("radius_witness", set_value(a, &radius.witness));
            if radius.within(bound) {
                report.verdict = Some(Verdict::Holds);
                report.search_bound = Some(format!(
                    "all {} proper non-empty subsets, shortest extension words found by complete search",
                    radius.subsets
                ));
            } else {
                report.verdict = Some(Verdict::Fails);
                report.witness = Some(Witness {
                    set: Some(set_names(a, &radius.witness)),
                    word: None,
                    words: None,
                    claim: format!("no word of length <= {bound} extends this set"),
                });
            }
        }
        Err(Error::Budget(msg)) => {
            report.verdict = Some(Verdict::InconclusiveWithinBudget);
            report.mode = Mode::Bounded;
            report.measure("budget_note", msg);
        }
        Err(e) => return Err(e),
    }
    Ok(report)
}

/// Shortest `v` with `|C_b.v⁻¹ ∩ {q₀..q_m}| ≥ k + 1`.
pub fn slow_chain_length(family: &CarpiAutomaton, budget: &Budget) -> Result<Option<Word>> {
    let a = family.automaton();
    budget.check_states(a.n(), "chain growth search")?;
    let chain = family.q_chain();
    let target = family.k() + 1;
    Ok(bfs(
        a,
        &family.c_b(),
        Direction::Backward,
        None,
        budget,
        "chain growth search",
        |t| t.intersection_len(&chain) >= target,
    )?
    .map(|f| f.word))
}

fn balanced_item(m: usize, k: usize, budget: &Budget) -> Result<Vec<VerdictReport>> {
    let family = carpi_family(m, k)?;
    let a = family.automaton();
    let n = family.n();
    let c_b = family.c_b();
    let chain = family.q_chain();
    let kn = k * n;

    let shortest = slow_chain_length(&family, budget)?
        .ok_or_else(|| Error::Contract("C_b never reaches k+1 chain states".into()))?;
    let closed_form = slow_chain_word(m, k);
    let closed_form_reaches = a.preimage(&c_b, &closed_form)?.intersection_len(&chain) > k;
    let lower = k * (m + 1) + m;
    let balanced = match search_balanced_collection(a, &c_b, kn, 2 * n, budget) {
        Ok(Some(v)) => json!(v.words().iter().map(Word::to_letters).collect::<Vec<_>>()),
        Ok(None) => json!(format!("none found with at most {} words", 2 * n)),
        Err(Error::Budget(msg)) => json!(format!("search stopped: {msg}")),
        Err(e) => return Err(e),
    };

    let mut reports = Vec::new();
    for conjecture in [ConjectureId::KnBalanced, ConjectureId::KnIndependent] {
        let mut report = VerdictReport::new(
            "kn-balanced-refutation",
            a,
            Some(format!("carpi:{m},{k}")),
            budget,
        )
        .param("m", m)
        .param("k", k);
        report.conjecture = Some(conjecture);
        report.measure("kn", kn);
        report.measure("shortest_chain_growth_length", shortest.len());
        report.measure("shortest_chain_growth_word", word_value(&shortest));
        report.measure("lower_bound_k_m_plus_1_plus_m", lower);
        report.measure("closed_form_word", word_value(&closed_form));
        report.measure("closed_form_reaches_k_plus_1", closed_form_reaches);
        report.measure(
            "lower_bound_confirmed",
            shortest.len() >= lower && closed_form_reaches,
        );
        report.measure("balanced_collection_for_c_b_within_kn", balanced.clone());
        if shortest.len() > kn {
            report.verdict = Some(Verdict::Fails);
            let claim = match conjecture {
                ConjectureId::KnBalanced => format!(
                    "every balanced collection for C_b contains a word v with \
                     |C_b.v^-1 ∩ q-chain| >= {}, and the shortest such word has length {} > kn = {kn}",
                    k + 1,
                    shortest.len()
                ),
                _ => format!(
                    "an independent collection shorter than kn = {kn} would be a balanced \
                     collection for C_b shorter than kn, which needs a word of length {}",
                    shortest.len()
                ),
            };
            report.witness = Some(Witness {
                set: Some(set_names(a, &c_b)),
                word: Some(shortest.to_letters()),
                words: None,
                claim,
            });
        } else {
            report.verdict = Some(Verdict::InconclusiveWithinBudget);
            report.mode = Mode::Bounded;
        }
        reports.push(report);
    }
    Ok(reports)
}
