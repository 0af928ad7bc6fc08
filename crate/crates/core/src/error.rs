use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors raised while building, validating or relating games.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GameError {
    /// A state name was declared twice.
    DuplicateState(String),
    /// A state index outside `0..len`.
    StateOutOfRange { state: usize, len: usize },
    /// The option relation has a directed cycle. The witness starts and ends at
    /// the same state, e.g. `[v, v]` for a self-loop.
    NotWellFounded { cycle: Vec<usize> },
    /// Breadth-first expansion of a rule game passed its state budget.
    BudgetExceeded { budget: usize },
    /// An assignment that is not total on the source states.
    NotTotal { expected: usize, found: usize },
    /// `x -> x'` but `f(x) -/-> f(x')`.
    GraphCondition { from: usize, to: usize },
    /// `f(x) -> y` has no lift `x -> x'` with `f(x') = y`.
    PathLifting { state: usize, target_option: usize },
    /// Two morphisms expected to share source and target do not.
    SourceMismatch,
    /// A state set that was required to be downward closed is not.
    NotSubgame { state: usize, option: usize },
}

impl fmt::Display for GameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameError::DuplicateState(name) => write!(f, "state `{name}` declared twice"),
            GameError::StateOutOfRange { state, len } => {
                write!(f, "state {state} out of range for a game with {len} states")
            }
            GameError::NotWellFounded { cycle } => {
                write!(f, "option relation is not well-founded, cycle {cycle:?}")
            }
            GameError::BudgetExceeded { budget } => {
                write!(f, "state budget of {budget} exceeded")
            }
            GameError::NotTotal { expected, found } => {
                write!(f, "assignment covers {found} states, expected {expected}")
            }
            GameError::GraphCondition { from, to } => write!(
                f,
                "graph condition fails on edge {from} -> {to}: image is not an edge"
            ),
            GameError::PathLifting {
                state,
                target_option,
            } => write!(
                f,
                "path lifting fails at state {state}: target option {target_option} has no lift"
            ),
            GameError::SourceMismatch => write!(f, "morphisms do not share source and target"),
            GameError::NotSubgame { state, option } => write!(
                f,
                "not downward closed: {state} is a member but its option {option} is not"
            ),
        }
    }
}

impl core::error::Error for GameError {}

/// Errors from hereditarily finite set operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HfsError {
    /// An Ackermann code would need more bits than the configured budget.
    DepthGuard { max_bits: u64 },
    /// `enumerate_universe` was asked for a birthday bound above 4.
    SizeGuard { bound: usize },
    /// A label outside the declared alphabet.
    UnknownLabel(usize),
}

impl fmt::Display for HfsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HfsError::DepthGuard { max_bits } => {
                write!(f, "Ackermann code exceeds the bit budget of {max_bits}")
            }
            HfsError::SizeGuard { bound } => write!(
                f,
                "universe of birthday <= {bound} is too large to enumerate (limit is 4)"
            ),
            HfsError::UnknownLabel(label) => write!(f, "label {label} is not in the alphabet"),
        }
    }
}

impl core::error::Error for HfsError {}

/// Errors from evaluating value algebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// An input value was not drawn from the algebra's carrier.
    CarrierMismatch {
        algebra: &'static str,
        expected: &'static str,
        found: &'static str,
    },
    /// The `bin` algebra ran into the Ackermann bit budget.
    DepthGuard { max_bits: u64 },
    /// No built-in algebra with this name.
    UnknownAlgebra(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::CarrierMismatch {
                algebra,
                expected,
                found,
            } => write!(
                f,
                "algebra `{algebra}` expects {expected} values, got a {found} value"
            ),
            AlgebraError::DepthGuard { max_bits } => {
                write!(f, "binary code exceeds the bit budget of {max_bits}")
            }
            AlgebraError::UnknownAlgebra(name) => write!(f, "unknown algebra `{name}`"),
        }
    }
}

impl core::error::Error for AlgebraError {}

/// Errors from finite monoid tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonoidError {
    /// Row `row` does not have one entry per element.
    NotSquare { row: usize, len: usize },
    /// `a * b` names an element outside the monoid.
    EntryOutOfRange { a: usize, b: usize, value: usize },
    /// `(a * b) * c ≠ a * (b * c)`.
    NotAssociative { a: usize, b: usize, c: usize },
    /// The declared unit fails `u * m = m = m * u` at `element`.
    NotUnit { unit: usize, element: usize },
    /// A value map whose length differs from the monoid size.
    ValueLength { expected: usize, found: usize },
}

impl fmt::Display for MonoidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidError::NotSquare { row, len } => {
                write!(f, "table row {row} has {len} entries, expected one per element")
            }
            MonoidError::EntryOutOfRange { a, b, value } => {
                write!(f, "{a} * {b} = {value} is not an element")
            }
            MonoidError::NotAssociative { a, b, c } => {
                write!(f, "associativity fails on ({a}, {b}, {c})")
            }
            MonoidError::NotUnit { unit, element } => {
                write!(f, "{unit} is not a unit: fails at element {element}")
            }
            MonoidError::ValueLength { expected, found } => {
                write!(f, "value map has {found} entries, expected {expected}")
            }
        }
    }
}

impl core::error::Error for MonoidError {}

/// Errors from Bouton approximations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoutonError {
    /// A birthday bound above the configured maximum.
    Guard { k: usize, d: usize, max: usize },
    /// No class carries the signature of this set; raise `k` or `d`.
    UnknownSignature { code: String },
    /// A product of class representatives has no class; raise `k` or `d`.
    Unstable { left: usize, right: usize },
    Algebra(AlgebraError),
    Hfs(HfsError),
}

impl fmt::Display for BoutonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoutonError::Guard { k, d, max } => write!(
                f,
                "bounds k = {k}, d = {d} exceed the guard of {max}"
            ),
            BoutonError::UnknownSignature { code } => write!(
                f,
                "the set with code {code} matches no class signature; raise k or d"
            ),
            BoutonError::Unstable { left, right } => write!(
                f,
                "product of class representatives {left} and {right} matches no class; raise k or d"
            ),
            BoutonError::Algebra(e) => write!(f, "{e}"),
            BoutonError::Hfs(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for BoutonError {}

impl From<AlgebraError> for BoutonError {
    fn from(e: AlgebraError) -> Self {
        BoutonError::Algebra(e)
    }
}

impl From<HfsError> for BoutonError {
    fn from(e: HfsError) -> Self {
        BoutonError::Hfs(e)
    }
}
