//! Plain-text game, map and pair files.
//!
//! ```text
//! # a comment
//! game example
//! a : b c
//! b :
//! c : b
//! ```
//!
//! Identifiers match `[A-Za-z0-9_()-]+`. A state declared twice is an error;
//! a name that only appears as a successor is a terminal state.

use std::collections::BTreeSet;

use hylo_core::{Game, State, UncheckedGame};

use crate::error::{HyloError, Result};

pub fn is_identifier(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '(' | ')' | '-'))
}

fn parse_err(line: usize, message: impl Into<String>) -> HyloError {
    HyloError::Parse {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn identifier(line: usize, word: &str) -> Result<String> {
    if is_identifier(word) {
        Ok(word.to_string())
    } else {
        Err(parse_err(line, format!("`{word}` is not an identifier")))
    }
}

/// Parses and validates a game file.
pub fn parse_game(text: &str) -> Result<Game> {
    let mut name = None;
    let mut decls: Vec<(String, Vec<String>)> = Vec::new();
    let mut seen = BTreeSet::new();
    for (line, content) in content_lines(text) {
        let Some((lhs, rhs)) = content.split_once(':') else {
            match content.strip_prefix("game") {
                Some(rest) if rest.starts_with(char::is_whitespace) => {
                    if name.is_some() {
                        return Err(parse_err(line, "second `game` header"));
                    }
                    if !decls.is_empty() {
                        return Err(parse_err(line, "`game` header after state declarations"));
                    }
                    name = Some(rest.trim().to_string());
                    continue;
                }
                _ => return Err(parse_err(line, "expected `state : successors`")),
            }
        };
        let state = identifier(line, lhs.trim())?;
        if !seen.insert(state.clone()) {
            return Err(parse_err(line, format!("state `{state}` declared twice")));
        }
        let succ = rhs
            .split_whitespace()
            .map(|w| identifier(line, w))
            .collect::<Result<Vec<_>>>()?;
        decls.push((state, succ));
    }
    let game = UncheckedGame::from_declarations(name.unwrap_or_else(|| "game".into()), decls)?;
    Ok(game.validate()?)
}

/// Display names usable in a game file: the game's own names when they are
/// distinct identifiers, else `s0, s1, …`.
pub fn file_names(game: &Game) -> Vec<String> {
    let names = game.state_names();
    let distinct = names.iter().collect::<BTreeSet<_>>().len() == names.len();
    if distinct && names.iter().all(|n| is_identifier(n)) {
        names.to_vec()
    } else {
        (0..game.len()).map(|i| format!("s{i}")).collect()
    }
}

/// Writes a game file, one declaration per state in index order.
pub fn emit_game(game: &Game) -> String {
    let names = file_names(game);
    let mut out = format!("game {}\n", game.name().replace(['\n', '#'], " "));
    for x in game.states() {
        out.push_str(&names[x]);
        out.push_str(" :");
        for &o in game.options(x) {
            out.push(' ');
            out.push_str(&names[o]);
        }
        out.push('\n');
    }
    out
}

/// Lines holding exactly two identifiers, resolved against two games.
fn parse_name_pairs(text: &str, left: &Game, right: &Game) -> Result<Vec<(State, State)>> {
    let mut out = Vec::new();
    for (line, content) in content_lines(text) {
        let words: Vec<&str> = content.split_whitespace().collect();
        let [a, b] = words[..] else {
            return Err(parse_err(line, "expected two state names"));
        };
        let lookup = |g: &Game, n: &str| {
            g.state_by_name(n)
                .ok_or_else(|| parse_err(line, format!("no state `{n}` in {}", g.name())))
        };
        out.push((lookup(left, a)?, lookup(right, b)?));
    }
    Ok(out)
}

/// A map file: `source_state target_state` per line, total on the source.
pub fn parse_map(text: &str, source: &Game, target: &Game) -> Result<Vec<State>> {
    let mut map = vec![None; source.len()];
    for (x, y) in parse_name_pairs(text, source, target)? {
        if map[x].replace(y).is_some_and(|old| old != y) {
            return Err(HyloError::Failed(format!(
                "state `{}` is mapped twice",
                source.state_name(x)
            )));
        }
    }
    map.iter()
        .enumerate()
        .map(|(x, y)| {
            y.ok_or_else(|| {
                HyloError::Failed(format!("state `{}` is not mapped", source.state_name(x)))
            })
        })
        .collect()
}

/// A pairs file: two states of the same game per line.
pub fn parse_pairs(text: &str, game: &Game) -> Result<Vec<(State, State)>> {
    parse_name_pairs(text, game, game)
}
