//! Impartial games as well-founded graphs.
//!
//! Game values such as Grundy numbers, outcomes and remoteness are all
//! hylomorphisms: a step algebra on finite sets, folded over a game in
//! topological order ([`values`]). Every game reduces onto the game of
//! hereditarily finite sets ([`hfs`]), which carries the monoidal sums of
//! [`sums`] as binary operations. [`bouton`] quotients those operations by a
//! target value to recover structures like the nim-sum, and [`universal`]
//! computes limits and colimits of finite games.
#![no_std]

extern crate alloc;

pub mod bouton;
pub mod error;
pub mod game;
pub mod hfs;
pub mod rules;
pub mod sums;
pub mod universal;
pub mod values;

pub use error::{AlgebraError, BoutonError, GameError, HfsError, MonoidError};
pub use game::{Game, GameMorphism, State, StateSet, Subgame, UncheckedGame};
pub use hfs::{AckermannGuard, HfsArena, HfsId, LabeledHfsArena, LhfsId};
pub use values::{Algebra, Outcome, Remoteness, Value};
