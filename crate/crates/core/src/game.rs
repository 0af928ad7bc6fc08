//! Games as well-founded, finitely branching directed graphs.
//!
//! States are dense indices `0..n`. Each state carries a sorted, duplicate-free
//! option list. An [`UncheckedGame`] is only structurally valid; calling
//! [`UncheckedGame::validate`] checks well-foundedness (acyclicity, for a finite
//! graph) and produces a [`Game`] carrying a topological evaluation order in
//! which every option comes before the states that move to it.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::GameError;

/// Index of a state inside one game.
pub type State = usize;

/// A structurally valid game graph whose well-foundedness has not been checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UncheckedGame {
    name: String,
    names: Vec<String>,
    options: Vec<Vec<State>>,
}

impl UncheckedGame {
    /// Builds a game from per-state option lists. Options are sorted and
    /// deduplicated; states are named by their index.
    pub fn from_options(
        name: impl Into<String>,
        options: Vec<Vec<State>>,
    ) -> Result<Self, GameError> {
        let names = (0..options.len()).map(|i| i.to_string()).collect();
        Self::with_names(name, names, options)
    }

    /// Like [`from_options`](Self::from_options) with explicit display names.
    pub fn with_names(
        name: impl Into<String>,
        names: Vec<String>,
        mut options: Vec<Vec<State>>,
    ) -> Result<Self, GameError> {
        let len = options.len();
        assert_eq!(names.len(), len, "one display name per state");
        for opts in &mut options {
            if let Some(&bad) = opts.iter().find(|&&o| o >= len) {
                return Err(GameError::StateOutOfRange { state: bad, len });
            }
            opts.sort_unstable();
            opts.dedup();
        }
        Ok(UncheckedGame {
            name: name.into(),
            names,
            options,
        })
    }

    /// Builds a game from `(state, successors)` declarations.
    ///
    /// Declared states get indices in declaration order; names that only occur
    /// as successors become terminal states, indexed after all declared states
    /// in order of first appearance.
    pub fn from_declarations<I, N, S>(name: impl Into<String>, decls: I) -> Result<Self, GameError>
    where
        I: IntoIterator<Item = (N, S)>,
        N: AsRef<str>,
        S: IntoIterator,
        S::Item: AsRef<str>,
    {
        let decls: Vec<(String, Vec<String>)> = decls
            .into_iter()
            .map(|(n, succ)| {
                (
                    n.as_ref().to_string(),
                    succ.into_iter().map(|s| s.as_ref().to_string()).collect(),
                )
            })
            .collect();

        let mut index: BTreeMap<String, State> = BTreeMap::new();
        let mut names = Vec::new();
        for (n, _) in &decls {
            if index.insert(n.clone(), names.len()).is_some() {
                return Err(GameError::DuplicateState(n.clone()));
            }
            names.push(n.clone());
        }
        for (_, succ) in &decls {
            for s in succ {
                if !index.contains_key(s) {
                    index.insert(s.clone(), names.len());
                    names.push(s.clone());
                }
            }
        }
        let mut options = vec![Vec::new(); names.len()];
        for (i, (_, succ)) in decls.iter().enumerate() {
            options[i] = succ.iter().map(|s| index[s]).collect();
        }
        Self::with_names(name, names, options)
    }

    pub fn len(&self) -> usize {
        self.options.len()
    }

    pub fn is_empty(&self) -> bool {
        self.options.is_empty()
    }

    pub fn options(&self, x: State) -> &[State] {
        &self.options[x]
    }

    /// Checks that the option relation has no directed cycle.
    ///
    /// On success the returned [`Game`] carries a post-order of a depth-first
    /// search started from every state in ascending index order, visiting
    /// options in ascending order. That order lists options before their
    /// predecessors.
    pub fn validate(self) -> Result<Game, GameError> {
        const WHITE: u8 = 0;
        const GRAY: u8 = 1;
        const BLACK: u8 = 2;

        let n = self.options.len();
        let mut color = vec![WHITE; n];
        let mut order = Vec::with_capacity(n);
        // (state, next option position)
        let mut stack: Vec<(State, usize)> = Vec::new();

        for root in 0..n {
            if color[root] != WHITE {
                continue;
            }
            color[root] = GRAY;
            stack.push((root, 0));
            while let Some(top) = stack.last_mut() {
                let x = top.0;
                if let Some(&next) = self.options[x].get(top.1) {
                    top.1 += 1;
                    match color[next] {
                        WHITE => {
                            color[next] = GRAY;
                            stack.push((next, 0));
                        }
                        GRAY => {
                            let start = stack.iter().position(|&(s, _)| s == next).unwrap();
                            let mut cycle: Vec<State> =
                                stack[start..].iter().map(|&(s, _)| s).collect();
                            cycle.push(next);
                            return Err(GameError::NotWellFounded { cycle });
                        }
                        _ => {}
                    }
                } else {
                    color[x] = BLACK;
                    order.push(x);
                    stack.pop();
                }
            }
        }

        let mut position = vec![0; n];
        for (i, &x) in order.iter().enumerate() {
            position[x] = i;
        }
        Ok(Game {
            name: self.name,
            names: self.names,
            options: self.options,
            order,
            position,
        })
    }
}

/// A validated game: finite, finitely branching and well-founded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    name: String,
    names: Vec<String>,
    options: Vec<Vec<State>>,
    order: Vec<State>,
    position: Vec<usize>,
}

impl Game {
    /// Convenience for `UncheckedGame::from_options(..)?.validate()`.
    pub fn from_options(name: impl Into<String>, options: Vec<Vec<State>>) -> Result<Self, GameError> {
        UncheckedGame::from_options(name, options)?.validate()
    }

    /// Convenience for `UncheckedGame::with_names(..)?.validate()`.
    pub fn with_names(
        name: impl Into<String>,
        names: Vec<String>,
        options: Vec<Vec<State>>,
    ) -> Result<Self, GameError> {
        UncheckedGame::with_names(name, names, options)?.validate()
    }

    /// The empty game with no states.
    pub fn empty() -> Self {
        Self::from_options("empty", Vec::new()).expect("empty game is well-founded")
    }

    /// The chain `n -> n-1 -> ... -> 0`; state `i` is named `i`.
    pub fn chain(n: usize) -> Self {
        let options = (0..=n)
            .map(|i| if i == 0 { Vec::new() } else { vec![i - 1] })
            .collect();
        Self::from_options(alloc::format!("chain({n})"), options).expect("chains are well-founded")
    }

    /// The star game with a top state `s` (index 0) and `n` terminal states
    /// `l1..ln` (indices `1..=n`).
    pub fn star(n: usize) -> Self {
        let mut names = vec!["s".to_string()];
        names.extend((1..=n).map(|i| alloc::format!("l{i}")));
        let mut options = vec![(1..=n).collect::<Vec<_>>()];
        options.extend((0..n).map(|_| Vec::new()));
        Self::with_names(alloc::format!("S{n}"), names, options).expect("stars are well-founded")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.options.len()
    }

    pub fn is_empty(&self) -> bool {
        self.options.is_empty()
    }

    pub fn states(&self) -> core::ops::Range<State> {
        0..self.options.len()
    }

    pub fn options(&self, x: State) -> &[State] {
        &self.options[x]
    }

    pub fn has_move(&self, x: State, y: State) -> bool {
        self.options[x].binary_search(&y).is_ok()
    }

    pub fn is_terminal(&self, x: State) -> bool {
        self.options[x].is_empty()
    }

    pub fn state_name(&self, x: State) -> &str {
        &self.names[x]
    }

    pub fn state_names(&self) -> &[String] {
        &self.names
    }

    pub fn state_by_name(&self, name: &str) -> Option<State> {
        self.names.iter().position(|n| n == name)
    }

    /// Topological evaluation order: every option precedes its predecessors.
    pub fn order(&self) -> &[State] {
        &self.order
    }

    /// Position of `x` in [`order`](Self::order).
    pub fn order_position(&self, x: State) -> usize {
        self.position[x]
    }

    pub fn edges(&self) -> impl Iterator<Item = (State, State)> + '_ {
        self.options
            .iter()
            .enumerate()
            .flat_map(|(x, opts)| opts.iter().map(move |&y| (x, y)))
    }

    pub fn edge_count(&self) -> usize {
        self.options.iter().map(Vec::len).sum()
    }

    /// Renames the game, keeping states and options.
    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// All states `y` with `x ⪰ y`, i.e. reachable from `x` by zero or more moves.
    pub fn descendants(&self, x: State) -> StateSet {
        let mut seen = StateSet::empty(self.len());
        let mut stack = vec![x];
        seen.insert(x);
        while let Some(s) = stack.pop() {
            for &o in &self.options[s] {
                if seen.insert(o) {
                    stack.push(o);
                }
            }
        }
        seen
    }

    /// `x ⪰ y`: a play of zero or more moves leads from `x` to `y`.
    pub fn accessible(&self, x: State, y: State) -> bool {
        if x == y {
            return true;
        }
        // Nothing after y in the evaluation order can be reached from y, and x
        // can only reach states before itself.
        if self.position[y] > self.position[x] {
            return false;
        }
        self.descendants(x).contains(y)
    }

    /// Whether `set` is downward closed under moves.
    pub fn is_subgame(&self, set: &StateSet) -> bool {
        self.subgame_violation(set).is_none()
    }

    fn subgame_violation(&self, set: &StateSet) -> Option<(State, State)> {
        set.iter()
            .find_map(|x| self.options[x].iter().find(|&&o| !set.contains(o)).map(|&o| (x, o)))
    }

    /// Wraps `set` as a [`Subgame`] if it is downward closed.
    pub fn subgame(&self, set: StateSet) -> Result<Subgame, GameError> {
        assert_eq!(set.universe(), self.len());
        match self.subgame_violation(&set) {
            Some((state, option)) => Err(GameError::NotSubgame { state, option }),
            None => Ok(Subgame(set)),
        }
    }

    /// The least subgame containing `set`: `{x | ∃s∈set, s ⪰ x}`.
    pub fn generated_subgame(&self, set: &StateSet) -> Subgame {
        let mut members = set.clone();
        let mut stack: Vec<State> = set.iter().collect();
        while let Some(s) = stack.pop() {
            for &o in &self.options[s] {
                if members.insert(o) {
                    stack.push(o);
                }
            }
        }
        Subgame(members)
    }

    /// The greatest subgame contained in `set`: `{x | ∀y, x ⪰ y ⇒ y ∈ set}`.
    pub fn cogenerated_subgame(&self, set: &StateSet) -> Subgame {
        let mut members = StateSet::empty(self.len());
        for &x in &self.order {
            if set.contains(x) && self.options[x].iter().all(|&o| members.contains(o)) {
                members.insert(x);
            }
        }
        Subgame(members)
    }

    /// The game induced on a subgame, with states renumbered in ascending
    /// order, together with the inclusion morphism into `self`.
    pub fn restrict(&self, sub: &Subgame) -> (Game, GameMorphism) {
        let members: Vec<State> = sub.iter().collect();
        let mut new_index = vec![usize::MAX; self.len()];
        for (i, &x) in members.iter().enumerate() {
            new_index[x] = i;
        }
        let names = members.iter().map(|&x| self.names[x].clone()).collect();
        let options = members
            .iter()
            .map(|&x| self.options[x].iter().map(|&o| new_index[o]).collect())
            .collect();
        let game = Game::with_names(self.name.clone(), names, options)
            .expect("a subgame of a game is a game");
        let inclusion = GameMorphism {
            map: members,
            target_len: self.len(),
        };
        (game, inclusion)
    }
}

/// A set of states of one game, stored as a membership bitmap.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet {
    bits: Vec<bool>,
}

impl StateSet {
    pub fn empty(universe: usize) -> Self {
        StateSet {
            bits: vec![false; universe],
        }
    }

    pub fn full(universe: usize) -> Self {
        StateSet {
            bits: vec![true; universe],
        }
    }

    /// Panics if a state is outside `0..universe`.
    pub fn from_states(universe: usize, states: impl IntoIterator<Item = State>) -> Self {
        let mut set = Self::empty(universe);
        for s in states {
            set.insert(s);
        }
        set
    }

    /// The subset of `0..universe` whose bit is set in `mask`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        Self::from_states(universe, (0..universe).filter(|&i| mask >> i & 1 == 1))
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, x: State) -> bool {
        self.bits[x]
    }

    /// Returns `true` if `x` was not yet a member.
    pub fn insert(&mut self, x: State) -> bool {
        !core::mem::replace(&mut self.bits[x], true)
    }

    pub fn remove(&mut self, x: State) -> bool {
        core::mem::replace(&mut self.bits[x], false)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    pub fn iter(&self) -> impl Iterator<Item = State> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }
}

/// A downward-closed set of states.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgame(StateSet);

impl Subgame {
    pub fn members(&self) -> &StateSet {
        &self.0
    }

    pub fn into_members(self) -> StateSet {
        self.0
    }

    pub fn contains(&self, x: State) -> bool {
        self.0.contains(x)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = State> + '_ {
        self.0.iter()
    }
}

/// A game morphism: a total map on states satisfying the graph condition and
/// path lifting, i.e. `f[θ(x)] = θ(f(x))` for every state `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GameMorphism {
    map: Vec<State>,
    target_len: usize,
}

impl GameMorphism {
    /// Checks both morphism conditions. The first failing condition is
    /// reported, scanning states in ascending order and checking the graph
    /// condition of a state before its path lifting.
    pub fn check(map: Vec<State>, source: &Game, target: &Game) -> Result<Self, GameError> {
        if map.len() != source.len() {
            return Err(GameError::NotTotal {
                expected: source.len(),
                found: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.len()) {
            return Err(GameError::StateOutOfRange {
                state: bad,
                len: target.len(),
            });
        }
        for x in source.states() {
            let fx = map[x];
            for &o in source.options(x) {
                if !target.has_move(fx, map[o]) {
                    return Err(GameError::GraphCondition { from: x, to: o });
                }
            }
            for &y in target.options(fx) {
                if !source.options(x).iter().any(|&o| map[o] == y) {
                    return Err(GameError::PathLifting {
                        state: x,
                        target_option: y,
                    });
                }
            }
        }
        Ok(GameMorphism {
            map,
            target_len: target.len(),
        })
    }

    pub fn identity(game: &Game) -> Self {
        GameMorphism {
            map: game.states().collect(),
            target_len: game.len(),
        }
    }

    /// Builds a morphism without checking. Callers guarantee both conditions.
    pub(crate) fn new_unchecked(map: Vec<State>, target_len: usize) -> Self {
        GameMorphism { map, target_len }
    }

    pub fn apply(&self, x: State) -> State {
        self.map[x]
    }

    pub fn map(&self) -> &[State] {
        &self.map
    }

    pub fn source_len(&self) -> usize {
        self.map.len()
    }

    pub fn target_len(&self) -> usize {
        self.target_len
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GameMorphism) -> GameMorphism {
        assert_eq!(self.target_len, other.source_len());
        GameMorphism {
            map: self.map.iter().map(|&y| other.map[y]).collect(),
            target_len: other.target_len,
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.target_len];
        self.map.iter().all(|&y| !core::mem::replace(&mut hit[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        self.image_set().len() == self.target_len
    }

    fn image_set(&self) -> StateSet {
        StateSet::from_states(self.target_len, self.map.iter().copied())
    }

    /// The set-image of the morphism, which is a subgame of the target.
    pub fn image(&self, target: &Game) -> Subgame {
        let set = self.image_set();
        debug_assert!(target.is_subgame(&set), "image of a game morphism is a subgame");
        Subgame(set)
    }

    /// `f⁻¹(sub)`, a subgame of the source.
    pub fn inverse_image(&self, source: &Game, sub: &Subgame) -> Subgame {
        let set = StateSet::from_states(
            self.map.len(),
            self.map
                .iter()
                .enumerate()
                .filter_map(|(x, &y)| sub.contains(y).then_some(x)),
        );
        debug_assert!(source.is_subgame(&set), "preimage of a subgame is a subgame");
        Subgame(set)
    }

    /// Factors `self` as a surjection onto its image followed by the image
    /// inclusion.
    pub fn epi_mono(&self, target: &Game) -> EpiMono {
        let image = self.image(target);
        let (image_game, inclusion) = target.restrict(&image);
        let mut new_index = vec![usize::MAX; self.target_len];
        for (i, &y) in inclusion.map.iter().enumerate() {
            new_index[y] = i;
        }
        let surjection = GameMorphism {
            map: self.map.iter().map(|&y| new_index[y]).collect(),
            target_len: image_game.len(),
        };
        EpiMono {
            image,
            image_game,
            surjection,
            inclusion,
        }
    }
}

/// The epi-mono factorization `f = inclusion ∘ surjection`.
#[derive(Debug, Clone)]
pub struct EpiMono {
    pub image: Subgame,
    pub image_game: Game,
    pub surjection: GameMorphism,
    pub inclusion: GameMorphism,
}
