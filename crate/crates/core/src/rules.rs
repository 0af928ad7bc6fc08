//! Lazily presented games and their finite reachable fragments.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::GameError;
use crate::game::{Game, State, UncheckedGame};

/// A game given by a move rule on canonical tokens.
///
/// `expand` must be deterministic: equal tokens yield equal option sets.
pub trait RuleGame {
    type Token: Ord + Clone;

    fn expand(&self, token: &Self::Token) -> Vec<Self::Token>;

    /// Display name of a token, used as the state name in fragments.
    fn token_name(&self, token: &Self::Token) -> String;

    fn description(&self) -> String;
}

/// A finite fragment of a rule game together with its state/token table.
#[derive(Debug, Clone)]
pub struct Fragment<T> {
    pub game: Game,
    pub tokens: Vec<T>,
    index: BTreeMap<T, State>,
}

impl<T: Ord> Fragment<T> {
    pub fn state_of(&self, token: &T) -> Option<State> {
        self.index.get(token).copied()
    }

    pub fn token(&self, x: State) -> &T {
        &self.tokens[x]
    }
}

/// Breadth-first closure of `start` under the rule's moves, validated as a game.
///
/// The start token is state 0; further states are numbered in discovery order.
/// Fails with [`GameError::BudgetExceeded`] once more than `max_states` tokens
/// are discovered (so `max_states == 0` always fails).
pub fn reachable_fragment<R: RuleGame>(
    rule: &R,
    start: R::Token,
    max_states: usize,
) -> Result<Fragment<R::Token>, GameError> {
    let budget_err = GameError::BudgetExceeded { budget: max_states };
    if max_states == 0 {
        return Err(budget_err);
    }
    let mut index = BTreeMap::new();
    let mut tokens = Vec::new();
    let mut options: Vec<Vec<State>> = Vec::new();
    let mut queue = VecDeque::new();

    index.insert(start.clone(), 0);
    tokens.push(start);
    options.push(Vec::new());
    queue.push_back(0);

    while let Some(x) = queue.pop_front() {
        let mut opts = Vec::new();
        for next in rule.expand(&tokens[x]) {
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    if tokens.len() == max_states {
                        return Err(budget_err);
                    }
                    let id = tokens.len();
                    index.insert(next.clone(), id);
                    tokens.push(next);
                    options.push(Vec::new());
                    queue.push_back(id);
                    id
                }
            };
            opts.push(id);
        }
        options[x] = opts;
    }

    let names = tokens.iter().map(|t| rule.token_name(t)).collect();
    let game = UncheckedGame::with_names(rule.description(), names, options)?.validate()?;
    Ok(Fragment {
        game,
        tokens,
        index,
    })
}

/// Multi-heap nim: a move lowers exactly one heap.
#[derive(Debug, Clone, Copy, Default)]
pub struct Nim;

impl RuleGame for Nim {
    type Token = Vec<u64>;

    fn expand(&self, heaps: &Vec<u64>) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        for (i, &h) in heaps.iter().enumerate() {
            for smaller in 0..h {
                let mut next = heaps.clone();
                next[i] = smaller;
                out.push(next);
            }
        }
        out
    }

    fn token_name(&self, heaps: &Vec<u64>) -> String {
        match heaps.as_slice() {
            [h] => h.to_string(),
            _ => {
                let parts: Vec<String> = heaps.iter().map(u64::to_string).collect();
                alloc::format!("({})", parts.join("-"))
            }
        }
    }

    fn description(&self) -> String {
        "nim".into()
    }
}

/// Subtraction nim: from `n` remove any allowed amount not exceeding `n`.
#[derive(Debug, Clone)]
pub struct Subtraction {
    pub moves: Vec<u64>,
}

impl RuleGame for Subtraction {
    type Token = u64;

    fn expand(&self, &n: &u64) -> Vec<u64> {
        self.moves.iter().filter(|&&s| s <= n).map(|&s| n - s).collect()
    }

    fn token_name(&self, n: &u64) -> String {
        n.to_string()
    }

    fn description(&self) -> String {
        let parts: Vec<String> = self.moves.iter().map(u64::to_string).collect();
        alloc::format!("subtraction({})", parts.join(","))
    }
}

/// The one-option game `n -> n - 1` (pulling petals off a daisy).
#[derive(Debug, Clone, Copy, Default)]
pub struct Elm;

impl RuleGame for Elm {
    type Token = u64;

    fn expand(&self, &n: &u64) -> Vec<u64> {
        if n == 0 {
            Vec::new()
        } else {
            alloc::vec![n - 1]
        }
    }

    fn token_name(&self, n: &u64) -> String {
        n.to_string()
    }

    fn description(&self) -> String {
        "elm".into()
    }
}

/// `n -> m` iff `2^m` appears in the binary expansion of `n`.
#[derive(Debug, Clone, Copy, Default)]
pub struct BinaryExponent;

impl RuleGame for BinaryExponent {
    type Token = u64;

    fn expand(&self, &n: &u64) -> Vec<u64> {
        (0..64).filter(|&b| n >> b & 1 == 1).collect()
    }

    fn token_name(&self, n: &u64) -> String {
        n.to_string()
    }

    fn description(&self) -> String {
        "binexp".into()
    }
}
