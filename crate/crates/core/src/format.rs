//! The `dfa 1` text format and the state-set syntax used on the command line.
//!
//! ```text
//! dfa 1          # magic and version
//! 4 2            # states, letters
//! 1 1            # one row of targets per state
//! 2 1
//! 3 2
//! 0 3
//! names:         # optional; one "index label" line per state
//! 0 q0
//! ...
//! ```
//!
//! `#` starts a comment anywhere. [`serialize`] emits the canonical form:
//! no comments, single spaces, one trailing newline.

use sha2::{Digest, Sha256};

use crate::automaton::{Automaton, State};
use crate::error::{Error, Result};
use crate::stateset::StateSet;

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn lex(text: &str) -> Vec<Line<'_>> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, c) in body.char_indices().chain([(body.len(), ' ')]) {
            match (c.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &body[s..pos],
                        column: body[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            lines.push(Line {
                number: i + 1,
                tokens,
            });
        }
    }
    lines
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn number(tok: &Token<'_>, line: usize, what: &str) -> Result<usize> {
    tok.text.parse().map_err(|_| {
        syntax(
            line,
            tok.column,
            format!("expected {what}, found {:?}", tok.text),
        )
    })
}

pub fn parse_automaton(text: &str) -> Result<Automaton> {
    let lines = lex(text);
    let mut it = lines.iter();
    let eof_line = text.lines().count() + 1;

    let header = it
        .next()
        .ok_or_else(|| syntax(1, 1, "empty input; expected header 'dfa 1'"))?;
    match header.tokens.as_slice() {
        [magic, version] if magic.text == "dfa" => {
            if version.text != "1" {
                return Err(syntax(
                    header.number,
                    version.column,
                    format!("unsupported format version {:?}", version.text),
                ));
            }
        }
        _ => {
            return Err(syntax(
                header.number,
                header.tokens[0].column,
                "expected header 'dfa 1'",
            ))
        }
    }

    let dims = it
        .next()
        .ok_or_else(|| syntax(eof_line, 1, "missing 'states letters' line"))?;
    let (n, sigma) = match dims.tokens.as_slice() {
        [n, s] => (
            number(n, dims.number, "a state count")?,
            number(s, dims.number, "an alphabet size")?,
        ),
        _ => {
            return Err(syntax(
                dims.number,
                dims.tokens[0].column,
                "expected 'states letters'",
            ))
        }
    };
    if n == 0 || sigma == 0 {
        return Err(syntax(
            dims.number,
            1,
            "state count and alphabet size must be positive",
        ));
    }

    let mut rows = Vec::with_capacity(n);
    for q in 0..n {
        let line = it.next().ok_or_else(|| {
            syntax(
                eof_line,
                1,
                format!("expected {n} transition rows, found {q}"),
            )
        })?;
        if line.tokens.len() != sigma {
            let column = line
                .tokens
                .last()
                .map(|t| t.column + t.text.chars().count())
                .unwrap_or(1);
            let message = if line.tokens.len() < sigma {
                format!(
                    "incomplete row for state {q}: expected {sigma} entries, found {}",
                    line.tokens.len()
                )
            } else {
                format!(
                    "row for state {q} has {} entries, expected {sigma}",
                    line.tokens.len()
                )
            };
            return Err(syntax(line.number, column, message));
        }
        let mut row = Vec::with_capacity(sigma);
        for tok in &line.tokens {
            let t = number(tok, line.number, "a state index")?;
            if t >= n {
                return Err(syntax(
                    line.number,
                    tok.column,
                    format!("state index {t} out of range for {n} states"),
                ));
            }
            row.push(t);
        }
        rows.push(row);
    }
    let automaton = Automaton::new(sigma, rows)?;

    let Some(names_line) = it.next() else {
        return Ok(automaton);
    };
    if names_line.tokens.len() != 1 || names_line.tokens[0].text != "names:" {
        return Err(syntax(
            names_line.number,
            names_line.tokens[0].column,
            "unexpected content after the transition rows",
        ));
    }
    let mut names: Vec<Option<String>> = vec![None; n];
    for line in it {
        let [index, label] = line.tokens.as_slice() else {
            return Err(syntax(
                line.number,
                line.tokens[0].column,
                "expected 'index label'",
            ));
        };
        let q = number(index, line.number, "a state index")?;
        if q >= n {
            return Err(syntax(
                line.number,
                index.column,
                format!("state index {q} out of range for {n} states"),
            ));
        }
        if names[q].is_some() {
            return Err(syntax(
                line.number,
                index.column,
                format!("state {q} named twice"),
            ));
        }
        names[q] = Some(label.text.to_string());
    }
    let names: Vec<String> = names
        .into_iter()
        .enumerate()
        .map(|(q, name)| name.ok_or_else(|| syntax(eof_line, 1, format!("state {q} has no name"))))
        .collect::<Result<_>>()?;
    automaton.with_names(names)
}

fn table_text(a: &Automaton) -> String {
    let mut out = format!("dfa 1\n{} {}\n", a.n(), a.sigma());
    for q in 0..a.n() {
        let row: Vec<String> = a.row(q).iter().map(|t| t.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Canonical text of `a`.
pub fn serialize(a: &Automaton) -> String {
    let mut out = table_text(a);
    if let Some(names) = a.names() {
        out.push_str("names:\n");
        for (q, name) in names.iter().enumerate() {
            out.push_str(&format!("{q} {name}\n"));
        }
    }
    out
}

pub fn canonicalize(text: &str) -> Result<String> {
    parse_automaton(text).map(|a| serialize(&a))
}

/// First 16 hex digits of the SHA-256 of the transition table (names
/// excluded).
pub fn fingerprint(a: &Automaton) -> String {
    let digest = Sha256::digest(table_text(a).as_bytes());
    hex::encode(&digest[..8])
}

fn resolve(a: &Automaton, token: &str) -> Result<State> {
    a.state_index(token)
        .ok_or_else(|| Error::Input(format!("unknown state {token:?}")))
}

/// Parses `q0..q3`, `q0,q2`, `{0,1}`, `Q` (all states) or `{}` (empty).
/// Ranges follow state index order and include both ends.
pub fn parse_state_set(a: &Automaton, text: &str) -> Result<StateSet> {
    let body = text.trim();
    let body = body
        .strip_prefix('{')
        .and_then(|b| b.strip_suffix('}'))
        .unwrap_or(body)
        .trim();
    if body == "Q" || body == "all" {
        return Ok(a.all_states());
    }
    let mut set = StateSet::empty(a.n());
    if body.is_empty() {
        return Ok(set);
    }
    for item in body.split(',') {
        let item = item.trim();
        if let Some((lo, hi)) = item.split_once("..") {
            let (lo, hi) = (resolve(a, lo.trim())?, resolve(a, hi.trim())?);
            if lo > hi {
                return Err(Error::Input(format!("empty range {item:?}")));
            }
            (lo..=hi).for_each(|q| set.insert(q));
        } else {
            set.insert(resolve(a, item)?);
        }
    }
    Ok(set)
}
