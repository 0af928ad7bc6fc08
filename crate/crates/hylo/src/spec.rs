//! Game specifiers: a file path or a built-in generator.

use std::fs;
use std::str::FromStr;

use hylo_core::hfs::TerminalGame;
use hylo_core::rules::{reachable_fragment, BinaryExponent, Elm, Nim, Subtraction};
use hylo_core::{Game, HfsArena};
use num_bigint::BigUint;

use crate::error::{HyloError, Result};
use crate::format::parse_game;

/// Largest fragment a generator may expand to.
pub const GENERATOR_BUDGET: usize = 200_000;
/// Largest star generator.
pub const MAX_STAR: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GameSpecifier {
    File(String),
    /// Multi-heap nim from the given heaps.
    Nim(Vec<u64>),
    /// Subtraction game from `start` with the allowed amounts.
    Sub { start: u64, moves: Vec<u64> },
    Elm(u64),
    BinExp(u64),
    Star(usize),
    /// The set with this Ackermann code, as a game.
    Code(BigUint),
}

fn usage(spec: &str, why: &str) -> HyloError {
    HyloError::Usage(format!("bad game specifier `{spec}`: {why}"))
}

fn numbers<T: FromStr>(spec: &str, list: &str) -> Result<Vec<T>> {
    list.split(',')
        .map(|n| n.trim().parse().map_err(|_| usage(spec, "expected comma-separated naturals")))
        .collect()
}

fn number<T: FromStr>(spec: &str, n: &str) -> Result<T> {
    n.trim().parse().map_err(|_| usage(spec, "expected a natural"))
}

impl FromStr for GameSpecifier {
    type Err = HyloError;

    fn from_str(s: &str) -> Result<Self> {
        let Some((kind, rest)) = s.split_once(':') else {
            return Ok(GameSpecifier::File(s.to_string()));
        };
        Ok(match kind {
            "nim" => GameSpecifier::Nim(numbers(s, rest)?),
            "sub" => {
                let (start, moves) = rest
                    .split_once(':')
                    .ok_or_else(|| usage(s, "expected sub:<n>:<s1>,<s2>,…"))?;
                let moves: Vec<u64> = numbers(s, moves)?;
                if moves.contains(&0) {
                    return Err(usage(s, "subtracting 0 is not a move"));
                }
                GameSpecifier::Sub {
                    start: number(s, start)?,
                    moves,
                }
            }
            "elm" => GameSpecifier::Elm(number(s, rest)?),
            "binexp" => GameSpecifier::BinExp(number(s, rest)?),
            "star" => {
                let n = number(s, rest)?;
                if n > MAX_STAR {
                    return Err(usage(s, "star size above 64"));
                }
                GameSpecifier::Star(n)
            }
            "code" => GameSpecifier::Code(number(s, rest)?),
            _ => GameSpecifier::File(s.to_string()),
        })
    }
}

impl GameSpecifier {
    pub fn load(&self) -> Result<Game> {
        let budget = GENERATOR_BUDGET;
        Ok(match self {
            GameSpecifier::File(path) => {
                let text = fs::read_to_string(path).map_err(|source| HyloError::Io {
                    path: path.clone(),
                    source,
                })?;
                parse_game(&text)?
            }
            GameSpecifier::Nim(heaps) => reachable_fragment(&Nim, heaps.clone(), budget)?.game,
            GameSpecifier::Sub { start, moves } => {
                let rule = Subtraction {
                    moves: moves.clone(),
                };
                reachable_fragment(&rule, *start, budget)?.game
            }
            GameSpecifier::Elm(n) => reachable_fragment(&Elm, *n, budget)?.game,
            GameSpecifier::BinExp(n) => reachable_fragment(&BinaryExponent, *n, budget)?.game,
            GameSpecifier::Star(n) => Game::star(*n),
            GameSpecifier::Code(n) => {
                let mut arena = HfsArena::new();
                let z = arena.ackermann_decode(n);
                reachable_fragment(&TerminalGame(&arena), z, budget)?
                    .game
                    .renamed(format!("code({n})"))
            }
        })
    }
}

/// Parses and loads a specifier in one step.
pub fn load_game(spec: &str) -> Result<Game> {
    spec.parse::<GameSpecifier>()?.load()
}
