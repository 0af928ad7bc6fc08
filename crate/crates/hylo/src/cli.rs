//! Command-line interface.

use std::fs;
use std::io::{self, Write};

use clap::{Parser, Subcommand};
use hylo_core::bouton::{bouton_approximation_with, BoutonOptions};
use hylo_core::sums::{game_sum, SumKind};
use hylo_core::universal::{count_homs, product, quotient_coequalizer, DEFAULT_PRODUCT_BUDGET};
use hylo_core::values::{hylo_eval, Builtin};
use hylo_core::{AckermannGuard, Game, GameMorphism, HfsArena};
use num_bigint::BigUint;

use crate::dot::export_dot;
use crate::error::{HyloError, Result};
use crate::format::{emit_game, file_names, parse_map, parse_pairs};
use crate::play::run_play_loop;
use crate::spec::load_game;
use crate::verify;

/// Environment variable overriding the Ackermann bit budget.
pub const DEPTH_GUARD_VAR: &str = "HYLO_DEPTH_GUARD";

const GAME_HELP: &str = "a game file, or nim:<a>,<b>,… | sub:<n>:<s1>,… | elm:<n> | binexp:<n> | star:<n> | code:<N>";

#[derive(Debug, Parser)]
#[command(name = "hylo", version, about = "Impartial games, their values, sums and Bouton monoids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a game and print its evaluation order.
    Check {
        #[arg(help = GAME_HELP)]
        game: String,
    },
    /// Evaluate a value algebra on every state.
    Value {
        #[arg(help = GAME_HELP)]
        game: String,
        /// mex|grundy, np|outcome, empty|end, xem|birthday, mnp|misere, remoteness, bin
        #[arg(long, default_value = "grundy")]
        alg: String,
    },
    /// Reduce every state into the hereditarily finite sets.
    Xi {
        #[arg(help = GAME_HELP)]
        game: String,
    },
    /// Decode an Ackermann code.
    Code { n: BigUint },
    /// Print the sum of two games as a game file.
    Sum {
        left: String,
        right: String,
        /// conway, selective or conjunctive
        #[arg(long, default_value = "conway")]
        kind: String,
    },
    /// Check a map file (`source target` per line) as a game morphism.
    Morphism {
        source: String,
        target: String,
        #[arg(long)]
        map: String,
    },
    /// Print the product of two games as a game file.
    Product {
        left: String,
        right: String,
        #[arg(long, default_value_t = DEFAULT_PRODUCT_BUDGET)]
        budget: usize,
    },
    /// Count game morphisms.
    Homcount {
        source: String,
        target: String,
        #[arg(long, default_value_t = 1_000_000)]
        limit: usize,
    },
    /// Divide a game by the equivalence generated by a pairs file.
    Quotient {
        #[arg(help = GAME_HELP)]
        game: String,
        #[arg(long)]
        pairs: String,
    },
    /// Approximate the Bouton monoid of a sum and a value.
    Bouton {
        #[arg(long, default_value = "conway")]
        kind: String,
        #[arg(long, default_value = "outcome")]
        alg: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        d: usize,
        /// Also use contexts on both sides.
        #[arg(long)]
        two_sided: bool,
    },
    /// Run a property suite, or `all`.
    Verify { suite: String },
    /// Export Graphviz, optionally annotated with a value.
    Dot {
        #[arg(help = GAME_HELP)]
        game: String,
        #[arg(long)]
        alg: Option<String>,
    },
    /// Play against the engine from a named state.
    Play {
        #[arg(help = GAME_HELP)]
        game: String,
        #[arg(long)]
        start: String,
    },
}

pub fn depth_guard() -> Result<AckermannGuard> {
    match std::env::var(DEPTH_GUARD_VAR) {
        Err(_) => Ok(AckermannGuard::default()),
        Ok(v) => v
            .trim()
            .parse()
            .map(|max_bits| AckermannGuard { max_bits })
            .map_err(|_| HyloError::Usage(format!("{DEPTH_GUARD_VAR} must be a natural, got `{v}`"))),
    }
}

fn algebra(name: &str) -> Result<Builtin> {
    Builtin::from_name(name, depth_guard()?).map_err(|e| HyloError::Usage(e.to_string()))
}

fn sum_kind(name: &str) -> Result<SumKind> {
    SumKind::from_name(name).ok_or_else(|| {
        HyloError::Usage(format!("unknown sum `{name}`, expected conway, selective or conjunctive"))
    })
}

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|source| HyloError::Io {
        path: path.to_string(),
        source,
    })
}

fn io_err(source: io::Error) -> HyloError {
    HyloError::Io {
        path: "<stdout>".into(),
        source,
    }
}

fn code_text(arena: &HfsArena, z: hylo_core::HfsId, guard: AckermannGuard) -> String {
    arena
        .ackermann_encode(z, guard)
        .map_or_else(|_| "-".into(), |c| c.to_string())
}

pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<()> {
    macro_rules! say {
        ($($t:tt)*) => { writeln!(out, $($t)*).map_err(io_err)? };
    }
    match cli.command {
        Command::Check { game } => {
            let g = load_game(&game)?;
            say!("ok: {} has {} states and {} moves", g.name(), g.len(), g.edge_count());
            let order: Vec<&str> = g.order().iter().map(|&x| g.state_name(x)).collect();
            say!("order: {}", order.join(" "));
        }
        Command::Value { game, alg } => {
            let g = load_game(&game)?;
            let values = hylo_eval(&g, &algebra(&alg)?)?;
            for x in g.states() {
                say!("{}\t{}", g.state_name(x), values[x]);
            }
        }
        Command::Xi { game } => {
            let g = load_game(&game)?;
            let guard = depth_guard()?;
            let mut arena = HfsArena::new();
            let xi = arena.xi_reduce(&g);
            for x in g.states() {
                say!("{}\t{}\t{}", g.state_name(x), arena.render(xi[x]), code_text(&arena, xi[x], guard));
            }
        }
        Command::Code { n } => {
            let guard = depth_guard()?;
            let mut arena = HfsArena::new();
            let z = arena.ackermann_decode(&n);
            say!("{}", arena.render(z));
            say!("birthday {}", arena.birthday(z));
            let kids: Vec<String> = arena.children(z).iter().map(|&c| code_text(&arena, c, guard)).collect();
            say!("members {}", kids.join(" "));
        }
        Command::Sum { left, right, kind } => {
            let kind = sum_kind(&kind)?;
            let s = game_sum(kind, &load_game(&left)?, &load_game(&right)?);
            write!(out, "{}", emit_game(&s)).map_err(io_err)?;
        }
        Command::Morphism { source, target, map } => {
            let (s, t) = (load_game(&source)?, load_game(&target)?);
            let map = parse_map(&read(&map)?, &s, &t)?;
            let f = GameMorphism::check(map, &s, &t)?;
            say!("ok: morphism {} -> {}", s.name(), t.name());
            let image: Vec<&str> = f.image(&t).iter().map(|y| t.state_name(y)).collect();
            say!("image: {}", image.join(" "));
            say!("injective {} surjective {}", f.is_injective(), f.is_surjective());
        }
        Command::Product { left, right, budget } => {
            let (x, y) = (load_game(&left)?, load_game(&right)?);
            let p = product(&x, &y, budget)?;
            write!(out, "{}", emit_game(&p.game)).map_err(io_err)?;
            let profile: Vec<String> = p.option_profile().iter().map(|(k, v)| format!("{k}:{v}")).collect();
            say!("# {} states; states by option count {}", p.game.len(), profile.join(" "));
        }
        Command::Homcount { source, target, limit } => {
            say!("{}", count_homs(&load_game(&source)?, &load_game(&target)?, limit)?);
        }
        Command::Quotient { game, pairs } => {
            let g = load_game(&game)?;
            let pairs = parse_pairs(&read(&pairs)?, &g)?;
            let q = quotient_coequalizer(&g, &pairs)?;
            write!(out, "{}", emit_game(&q.quotient)).map_err(io_err)?;
            let names = file_names(&q.quotient);
            for x in g.states() {
                say!("# {} -> {}", g.state_name(x), names[q.class_map[x]]);
            }
        }
        Command::Bouton { kind, alg, k, d, two_sided } => {
            let options = BoutonOptions {
                two_sided,
                ..BoutonOptions::default()
            };
            let b = bouton_approximation_with(sum_kind(&kind)?, algebra(&alg)?, k, d, options)?;
            let guard = depth_guard()?;
            say!("{} classes over {} sets, {} contexts", b.class_count(), b.universe.len(), b.contexts.len());
            for (c, members) in b.classes.iter().enumerate() {
                let codes: Vec<String> = members.iter().map(|&z| code_text(b.arena(), z, guard)).collect();
                say!("class {c}: value {} members {}", b.a[c], codes.join(" "));
            }
            say!("table:");
            for row in &b.table {
                let cells: Vec<String> = row.iter().map(usize::to_string).collect();
                say!("  {}", cells.join(" "));
            }
            if !b.stable {
                let (x, y) = b.witness.expect("unstable approximations carry a witness");
                return Err(HyloError::Failed(format!(
                    "unstable: product of codes {} and {} leaves the table; raise k or d",
                    code_text(b.arena(), x, guard),
                    code_text(b.arena(), y, guard)
                )));
            }
            say!("stable");
        }
        Command::Verify { suite } => {
            let reports = verify::run(&suite).ok_or_else(|| {
                HyloError::Usage(format!(
                    "unknown suite `{suite}`, expected all or one of: {}",
                    verify::suite_names().join(", ")
                ))
            })?;
            let mut failed = 0;
            for r in &reports {
                let tag = if r.passed { "PASS" } else { "FAIL" };
                say!("{tag} {} ({} ms): {}", r.name, r.millis, r.detail);
                failed += usize::from(!r.passed);
            }
            if failed > 0 {
                return Err(HyloError::Failed(format!("{failed} suite(s) failed")));
            }
        }
        Command::Dot { game, alg } => {
            let g = load_game(&game)?;
            let values = alg.map(|a| hylo_eval(&g, &algebra(&a)?).map_err(HyloError::from)).transpose()?;
            write!(out, "{}", export_dot(&g, values.as_deref())).map_err(io_err)?;
        }
        Command::Play { game, start } => {
            let g = load_game(&game)?;
            let s = start_state(&g, &start)?;
            let stdin = io::stdin();
            run_play_loop(&g, s, stdin.lock(), out).map_err(io_err)?;
        }
    }
    Ok(())
}

fn start_state(g: &Game, name: &str) -> Result<usize> {
    g.state_by_name(name)
        .ok_or_else(|| HyloError::Usage(format!("no state `{name}` in {}", g.name())))
}
