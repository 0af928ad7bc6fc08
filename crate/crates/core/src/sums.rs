//! Monoidal sums of games and their miniature monoids on hereditarily finite sets.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::game::{Game, State};
use crate::hfs::{HfsArena, HfsId};
use crate::values::mex;

/// The built-in sums. In each, the underlying state set of `X ∗ Y` is `X × Y`.
///
/// * Conway: move in exactly one component.
/// * Selective: move in at least one component.
/// * Conjunctive: move in every component. This sum has no unit game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SumKind {
    Conway,
    Selective,
    Conjunctive,
}

impl SumKind {
    pub const ALL: [SumKind; 3] = [SumKind::Conway, SumKind::Selective, SumKind::Conjunctive];

    pub fn unital(self) -> bool {
        !matches!(self, SumKind::Conjunctive)
    }

    pub fn commutative(self) -> bool {
        true
    }

    pub fn name(self) -> &'static str {
        match self {
            SumKind::Conway => "conway",
            SumKind::Selective => "selective",
            SumKind::Conjunctive => "conjunctive",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "conway" | "+" => Some(SumKind::Conway),
            "selective" | "or" => Some(SumKind::Selective),
            "conjunctive" | "and" => Some(SumKind::Conjunctive),
            _ => None,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            SumKind::Conway => "+",
            SumKind::Selective => "∨",
            SumKind::Conjunctive => "∧",
        }
    }
}

impl fmt::Display for SumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// State index of the pair `(x, y)` in a sum with `y_len` states on the right.
pub fn pair_index(x: State, y: State, y_len: usize) -> State {
    x * y_len + y
}

/// The sum `X ∗ Y` on pair states, indexed row-major by `x`.
///
/// State `(x, y)` is named `(name_x)(name_y)`.
pub fn game_sum(kind: SumKind, x: &Game, y: &Game) -> Game {
    let ny = y.len();
    let mut names = Vec::with_capacity(x.len() * ny);
    let mut options = Vec::with_capacity(x.len() * ny);
    for a in x.states() {
        for b in y.states() {
            names.push(alloc::format!("({})({})", x.state_name(a), y.state_name(b)));
            let mut opts = Vec::new();
            if kind != SumKind::Conjunctive {
                opts.extend(x.options(a).iter().map(|&a2| pair_index(a2, b, ny)));
                opts.extend(y.options(b).iter().map(|&b2| pair_index(a, b2, ny)));
            }
            if kind != SumKind::Conway {
                for &a2 in x.options(a) {
                    opts.extend(y.options(b).iter().map(|&b2| pair_index(a2, b2, ny)));
                }
            }
            options.push(opts);
        }
    }
    let name = alloc::format!("{} {} {}", x.name(), kind.symbol(), y.name());
    Game::with_names(name, names, options).expect("sums of games are games")
}

/// Digit-wise exclusive or.
pub fn nim_sum(m: u64, n: u64) -> u64 {
    m ^ n
}

/// The miniature monoid of a sum: the induced binary operation on
/// hereditarily finite sets, memoized per pair of ids.
///
/// * `A + B = {a + B | a ∈ A} ∪ {A + b | b ∈ B}`
/// * `A ∨ B = {a ∨ B | a ∈ A} ∪ {a ∨ b | a ∈ A, b ∈ B} ∪ {A ∨ b | b ∈ B}`
/// * `A ∧ B = {a ∧ b | a ∈ A, b ∈ B}`
#[derive(Debug, Clone)]
pub struct MiniatureMonoid {
    kind: SumKind,
    memo: BTreeMap<(HfsId, HfsId), HfsId>,
}

impl MiniatureMonoid {
    pub fn new(kind: SumKind) -> Self {
        MiniatureMonoid {
            kind,
            memo: BTreeMap::new(),
        }
    }

    pub fn kind(&self) -> SumKind {
        self.kind
    }

    /// The unit `∅` (image of the one-point game) for unital sums.
    pub fn unit(&self) -> Option<HfsId> {
        self.kind.unital().then_some(HfsId::EMPTY)
    }

    pub fn product(&mut self, arena: &mut HfsArena, a: HfsId, b: HfsId) -> HfsId {
        let key = if self.kind.commutative() && b < a {
            (b, a)
        } else {
            (a, b)
        };
        if let Some(&r) = self.memo.get(&key) {
            return r;
        }
        let left: Vec<HfsId> = arena.children(a).to_vec();
        let right: Vec<HfsId> = arena.children(b).to_vec();
        let mut members = Vec::new();
        if self.kind != SumKind::Conjunctive {
            for &a2 in &left {
                members.push(self.product(arena, a2, b));
            }
            for &b2 in &right {
                members.push(self.product(arena, a, b2));
            }
        }
        if self.kind != SumKind::Conway {
            for &a2 in &left {
                for &b2 in &right {
                    members.push(self.product(arena, a2, b2));
                }
            }
        }
        let r = arena.intern(members);
        self.memo.insert(key, r);
        r
    }
}

/// `hfs_sum` without a persistent memo table.
pub fn hfs_sum(arena: &mut HfsArena, kind: SumKind, a: HfsId, b: HfsId) -> HfsId {
    MiniatureMonoid::new(kind).product(arena, a, b)
}

/// `n ⊕ S = {n ⊕ s | s ∈ S}`.
fn shift(n: u64, set: &[u64]) -> impl Iterator<Item = u64> + '_ {
    set.iter().map(move |&s| n ^ s)
}

/// Both sides of `mex(S) ⊕ mex(T) = mex(S ⊕ mex(T) ∪ mex(S) ⊕ T)`.
pub fn rota_baxter_sides(s: &[u64], t: &[u64]) -> (u64, u64) {
    let ms = mex(s.iter().copied());
    let mt = mex(t.iter().copied());
    let lhs = ms ^ mt;
    let rhs = mex(shift(mt, s).chain(shift(ms, t)));
    (lhs, rhs)
}

pub fn rota_baxter_check(s: &[u64], t: &[u64]) -> bool {
    let (lhs, rhs) = rota_baxter_sides(s, t);
    lhs == rhs
}
