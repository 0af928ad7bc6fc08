//! A text play loop against an engine that always moves to a P-state when it
//! can.

use std::io::{self, BufRead, Write};

use hylo_core::values::{grundy, outcome};
use hylo_core::{Game, Outcome, State};

/// The engine's reply from `x`: the first P-option in option order, else the
/// first option. `None` at a terminal state.
pub fn engine_move(game: &Game, outcomes: &[Outcome], x: State) -> Option<State> {
    let opts = game.options(x);
    opts.iter()
        .copied()
        .find(|&o| outcomes[o] == Outcome::P)
        .or_else(|| opts.first().copied())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winner {
    Human,
    Engine,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlayReport {
    /// States visited, starting with the start state.
    pub transcript: Vec<State>,
    /// `None` when input ended before the game did.
    pub winner: Option<Winner>,
}

/// Plays from `start` with the human to move first. The human answers each
/// prompt with an option index; anything else is re-prompted.
pub fn run_play_loop<R: BufRead, W: Write>(
    game: &Game,
    start: State,
    input: R,
    mut output: W,
) -> io::Result<PlayReport> {
    let out = outcome(game);
    let gr = grundy(game);
    let describe = |x: State| format!("{} [{}, grundy {}]", game.state_name(x), out[x], gr[x]);
    let mut transcript = vec![start];
    let mut lines = input.lines();
    let mut x = start;
    loop {
        writeln!(output, "position {}", describe(x))?;
        if game.is_terminal(x) {
            writeln!(output, "you have no move: the engine wins")?;
            return Ok(PlayReport {
                transcript,
                winner: Some(Winner::Engine),
            });
        }
        let opts = game.options(x);
        for (i, &o) in opts.iter().enumerate() {
            writeln!(output, "  {i}: {}", describe(o))?;
        }
        let choice = loop {
            write!(output, "your move> ")?;
            output.flush()?;
            let Some(line) = lines.next() else {
                writeln!(output)?;
                writeln!(output, "input ended")?;
                return Ok(PlayReport {
                    transcript,
                    winner: None,
                });
            };
            match line?.trim().parse::<usize>() {
                Ok(i) if i < opts.len() => break opts[i],
                _ => writeln!(output, "enter an option index from 0 to {}", opts.len() - 1)?,
            }
        };
        transcript.push(choice);
        x = choice;
        match engine_move(game, &out, x) {
            None => {
                writeln!(output, "position {}", describe(x))?;
                writeln!(output, "the engine has no move: you win")?;
                return Ok(PlayReport {
                    transcript,
                    winner: Some(Winner::Human),
                });
            }
            Some(reply) => {
                writeln!(output, "engine moves to {}", describe(reply))?;
                transcript.push(reply);
                x = reply;
            }
        }
    }
}
