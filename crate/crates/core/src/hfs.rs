//! Hereditarily finite sets, canonically interned.
//!
//! A set is stored as the strictly increasing list of its members' ids, so two
//! ids of one arena are equal exactly when the sets are equal. Members are
//! interned before the sets containing them, hence every child id is smaller
//! than its parent's id. Read as a game whose moves are `x -> y ⟺ y ∈ x`, the
//! arena is (a finite piece of) the terminal game: every game maps into it by
//! [`HfsArena::xi_reduce`].
//!
//! Ids are local to the arena that produced them.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::HfsError;
use crate::game::{Game, StateSet};
use crate::rules::RuleGame;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HfsId(u32);

impl HfsId {
    /// The empty set, interned first in every arena.
    pub const EMPTY: HfsId = HfsId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Self {
        HfsId(u32::try_from(i).expect("arena exceeds u32 ids"))
    }
}

/// Bit budget for Ackermann codes.
///
/// A set's code has `1 + max(child code)` bits, so a set is encodable when every
/// child code is below `max_bits`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AckermannGuard {
    pub max_bits: u64,
}

impl Default for AckermannGuard {
    fn default() -> Self {
        AckermannGuard { max_bits: 1 << 20 }
    }
}

/// Largest birthday bound `enumerate_universe` accepts.
pub const MAX_UNIVERSE_BOUND: usize = 4;

#[derive(Debug, Clone)]
pub struct HfsArena {
    nodes: Vec<Box<[HfsId]>>,
    birthdays: Vec<u32>,
    index: BTreeMap<Box<[HfsId]>, HfsId>,
    /// Decoded sets for codes below 64, filled on demand.
    exponents: [Option<HfsId>; 64],
}

impl Default for HfsArena {
    fn default() -> Self {
        Self::new()
    }
}

impl HfsArena {
    pub fn new() -> Self {
        let mut arena = HfsArena {
            nodes: Vec::new(),
            birthdays: Vec::new(),
            index: BTreeMap::new(),
            exponents: [None; 64],
        };
        let empty = arena.intern([]);
        debug_assert_eq!(empty, HfsId::EMPTY);
        arena
    }

    /// Number of interned sets.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Interns the set with the given members; duplicates are ignored.
    ///
    /// Panics if a member id does not belong to this arena.
    pub fn intern(&mut self, children: impl IntoIterator<Item = HfsId>) -> HfsId {
        let mut kids: Vec<HfsId> = children.into_iter().collect();
        kids.sort_unstable();
        kids.dedup();
        if let Some(&last) = kids.last() {
            assert!(last.index() < self.nodes.len(), "member {last:?} is not in this arena");
        }
        if let Some(&id) = self.index.get(kids.as_slice()) {
            return id;
        }
        let kids = kids.into_boxed_slice();
        let id = HfsId(u32::try_from(self.nodes.len()).expect("arena exceeds u32 ids"));
        let birthday = kids
            .iter()
            .map(|c| self.birthdays[c.index()] + 1)
            .max()
            .unwrap_or(0);
        self.nodes.push(kids.clone());
        self.birthdays.push(birthday);
        self.index.insert(kids, id);
        id
    }

    /// Looks up a set without interning it.
    pub fn get(&self, children: &[HfsId]) -> Option<HfsId> {
        let mut kids = children.to_vec();
        kids.sort_unstable();
        kids.dedup();
        self.index.get(kids.as_slice()).copied()
    }

    pub fn children(&self, id: HfsId) -> &[HfsId] {
        &self.nodes[id.index()]
    }

    /// `member ∈ set`, equivalently the move `set -> member` of the terminal game.
    pub fn contains(&self, set: HfsId, member: HfsId) -> bool {
        self.children(set).binary_search(&member).is_ok()
    }

    /// Length of the longest play from `id`: 0 for ∅, else 1 + max over members.
    pub fn birthday(&self, id: HfsId) -> u32 {
        self.birthdays[id.index()]
    }

    /// `vn(0) = ∅`, `vn(n) = {vn(0), …, vn(n-1)}`.
    pub fn von_neumann(&mut self, n: usize) -> HfsId {
        let mut members = Vec::with_capacity(n);
        for _ in 0..n {
            let next = self.intern(members.iter().copied());
            members.push(next);
        }
        self.intern(members)
    }

    /// The Ackermann code `Σ_{c ∈ id} 2^code(c)`.
    pub fn ackermann_encode(&self, id: HfsId, guard: AckermannGuard) -> Result<BigUint, HfsError> {
        if let Some(code) = self.small_code(id) {
            // Member codes are below their set's code, so the top exponent
            // bounds every exponent below it.
            if code == 0 || 63 - u64::from(code.leading_zeros()) < guard.max_bits {
                return Ok(BigUint::from(code));
            }
            return Err(HfsError::DepthGuard {
                max_bits: guard.max_bits,
            });
        }
        let mut memo = BTreeMap::new();
        self.encode_memo(id, guard, &mut memo)
    }

    /// The code of `id` when it fits in 64 bits.
    fn small_code(&self, id: HfsId) -> Option<u64> {
        let mut code = 0u64;
        for &child in self.children(id) {
            let exponent = self.small_code(child)?;
            if exponent >= 64 {
                return None;
            }
            code |= 1 << exponent;
        }
        Some(code)
    }

    /// Encodes several sets sharing one memo table.
    pub fn ackermann_encode_all(
        &self,
        ids: &[HfsId],
        guard: AckermannGuard,
    ) -> Result<Vec<BigUint>, HfsError> {
        let mut memo = BTreeMap::new();
        ids.iter().map(|&id| self.encode_memo(id, guard, &mut memo)).collect()
    }

    fn encode_memo(
        &self,
        id: HfsId,
        guard: AckermannGuard,
        memo: &mut BTreeMap<HfsId, BigUint>,
    ) -> Result<BigUint, HfsError> {
        if let Some(code) = memo.get(&id) {
            return Ok(code.clone());
        }
        let mut code = BigUint::zero();
        for &child in self.children(id) {
            let exponent = self.encode_memo(child, guard, memo)?;
            let bit = exponent
                .to_u64()
                .filter(|&b| b < guard.max_bits)
                .ok_or(HfsError::DepthGuard {
                    max_bits: guard.max_bits,
                })?;
            code.set_bit(bit, true);
        }
        memo.insert(id, code.clone());
        Ok(code)
    }

    /// The set whose members are the decoded binary exponents of `n`.
    pub fn ackermann_decode(&mut self, n: &BigUint) -> HfsId {
        let mut members = Vec::new();
        for (word, digit) in n.iter_u64_digits().enumerate() {
            let mut rest = digit;
            while rest != 0 {
                let bit = rest.trailing_zeros() as u64;
                rest &= rest - 1;
                members.push(self.ackermann_decode_u64(word as u64 * 64 + bit));
            }
        }
        self.intern(members)
    }

    pub fn ackermann_decode_u64(&mut self, n: u64) -> HfsId {
        let mut members = Vec::new();
        let mut rest = n;
        while rest != 0 {
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let member = match self.exponents[bit] {
                Some(id) => id,
                None => {
                    let id = self.ackermann_decode_u64(bit as u64);
                    self.exponents[bit] = Some(id);
                    id
                }
            };
            members.push(member);
        }
        self.intern(members)
    }

    /// All sets of birthday at most `bound`, sorted by id.
    ///
    /// Sizes are 1, 2, 4, 16 and 65536 for bounds 0 through 4; larger bounds
    /// are refused.
    pub fn enumerate_universe(&mut self, bound: usize) -> Result<Vec<HfsId>, HfsError> {
        if bound > MAX_UNIVERSE_BOUND {
            return Err(HfsError::SizeGuard { bound });
        }
        let mut level = alloc::vec![HfsId::EMPTY];
        for _ in 0..bound {
            let width = level.len();
            let mut next = Vec::with_capacity(1 << width);
            for mask in 0u64..(1 << width) {
                let members = (0..width).filter(|&i| mask >> i & 1 == 1).map(|i| level[i]);
                next.push(self.intern(members));
            }
            next.sort_unstable();
            level = next;
        }
        Ok(level)
    }

    /// The reduction map into the terminal game: `ξ(x) = {ξ(x') | x -> x'}`.
    pub fn xi_reduce(&mut self, game: &Game) -> Vec<HfsId> {
        let mut xi = alloc::vec![HfsId::EMPTY; game.len()];
        for &x in game.order() {
            let members: Vec<HfsId> = game.options(x).iter().map(|&o| xi[o]).collect();
            xi[x] = self.intern(members);
        }
        xi
    }

    /// Nested-brace rendering, `{}` for ∅ and `{{}}` for {∅}.
    pub fn render(&self, id: HfsId) -> String {
        let mut out = String::new();
        self.render_into(id, &mut out);
        out
    }

    fn render_into(&self, id: HfsId, out: &mut String) {
        out.push('{');
        for (i, &c) in self.children(id).iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            self.render_into(c, out);
        }
        out.push('}');
    }
}

/// The arena viewed as the terminal game, for building reachable fragments.
#[derive(Debug, Clone, Copy)]
pub struct TerminalGame<'a>(pub &'a HfsArena);

impl RuleGame for TerminalGame<'_> {
    type Token = HfsId;

    fn expand(&self, id: &HfsId) -> Vec<HfsId> {
        self.0.children(*id).to_vec()
    }

    fn token_name(&self, id: &HfsId) -> String {
        alloc::format!("h{}", id.index())
    }

    fn description(&self) -> String {
        "terminal".into()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LhfsId(u32);

impl LhfsId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Self {
        LhfsId(u32::try_from(i).expect("arena exceeds u32 ids"))
    }
}

/// Label of a false node in a truth-labeled arena.
pub const BOTTOM: usize = 0;
/// Label of a true node in a truth-labeled arena.
pub const TOP: usize = 1;

/// Hereditarily finite sets whose nodes carry a label from `0..alphabet_len`.
#[derive(Debug, Clone)]
pub struct LabeledHfsArena {
    alphabet_len: usize,
    nodes: Vec<(Box<[LhfsId]>, usize)>,
    index: BTreeMap<(Box<[LhfsId]>, usize), LhfsId>,
}

impl LabeledHfsArena {
    pub fn new(alphabet_len: usize) -> Self {
        LabeledHfsArena {
            alphabet_len,
            nodes: Vec::new(),
            index: BTreeMap::new(),
        }
    }

    /// An arena over the alphabet {[`BOTTOM`], [`TOP`]}.
    pub fn truth_values() -> Self {
        Self::new(2)
    }

    pub fn alphabet_len(&self) -> usize {
        self.alphabet_len
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn intern(
        &mut self,
        children: impl IntoIterator<Item = LhfsId>,
        label: usize,
    ) -> Result<LhfsId, HfsError> {
        if label >= self.alphabet_len {
            return Err(HfsError::UnknownLabel(label));
        }
        let mut kids: Vec<LhfsId> = children.into_iter().collect();
        kids.sort_unstable();
        kids.dedup();
        if let Some(&last) = kids.last() {
            assert!(last.index() < self.nodes.len(), "member {last:?} is not in this arena");
        }
        let key = (kids.into_boxed_slice(), label);
        if let Some(&id) = self.index.get(&key) {
            return Ok(id);
        }
        let id = LhfsId(u32::try_from(self.nodes.len()).expect("arena exceeds u32 ids"));
        self.nodes.push(key.clone());
        self.index.insert(key, id);
        Ok(id)
    }

    pub fn get(&self, children: &[LhfsId], label: usize) -> Option<LhfsId> {
        let mut kids = children.to_vec();
        kids.sort_unstable();
        kids.dedup();
        self.index.get(&(kids.into_boxed_slice(), label)).copied()
    }

    pub fn children(&self, id: LhfsId) -> &[LhfsId] {
        &self.nodes[id.index()].0
    }

    pub fn label(&self, id: LhfsId) -> usize {
        self.nodes[id.index()].1
    }

    /// Whether every `TOP` node below and including `id` has only `TOP` members.
    pub fn is_truth_closed(&self, id: LhfsId) -> bool {
        let mut memo = BTreeMap::new();
        self.truth_closed_memo(id, &mut memo)
    }

    fn truth_closed_memo(&self, id: LhfsId, memo: &mut BTreeMap<LhfsId, bool>) -> bool {
        if let Some(&v) = memo.get(&id) {
            return v;
        }
        let kids = self.children(id);
        let local = self.label(id) != TOP || kids.iter().all(|&c| self.label(c) == TOP);
        let v = local && kids.iter().all(|&c| self.truth_closed_memo(c, memo));
        memo.insert(id, v);
        v
    }
}

/// `χ_S(x) = ({χ_S(x') | x -> x'}, x ∈ S)` in a truth-labeled arena.
pub fn characteristic_map(
    arena: &mut LabeledHfsArena,
    game: &Game,
    set: &StateSet,
) -> Vec<LhfsId> {
    assert!(arena.alphabet_len() >= 2, "characteristic maps need truth labels");
    let mut chi: Vec<Option<LhfsId>> = alloc::vec![None; game.len()];
    for &x in game.order() {
        let kids: Vec<LhfsId> = game
            .options(x)
            .iter()
            .map(|&o| chi[o].expect("options are evaluated first"))
            .collect();
        let label = if set.contains(x) { TOP } else { BOTTOM };
        chi[x] = Some(arena.intern(kids, label).expect("truth labels are in the alphabet"));
    }
    chi.into_iter().map(|c| c.unwrap()).collect()
}
