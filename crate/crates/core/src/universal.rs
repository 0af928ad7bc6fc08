//! Limits and colimits of finite games, morphism enumeration and isomorphism.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::GameError;
use crate::game::{Game, GameMorphism, State, StateSet, Subgame};
use crate::hfs::{HfsArena, LabeledHfsArena, LhfsId};

/// Default cap on candidate child sets examined by [`product`].
pub const DEFAULT_PRODUCT_BUDGET: usize = 1_000_000;

/// The equalizer of two parallel morphisms `f, g : X -> Y`:
/// `{x | ∀x' ⪯ x, f(x') = g(x')}`.
pub fn equalizer(
    source: &Game,
    f: &GameMorphism,
    g: &GameMorphism,
) -> Result<Subgame, GameError> {
    if f.source_len() != source.len()
        || g.source_len() != source.len()
        || f.target_len() != g.target_len()
    {
        return Err(GameError::SourceMismatch);
    }
    let agree = StateSet::from_states(
        source.len(),
        source.states().filter(|&x| f.apply(x) == g.apply(x)),
    );
    Ok(source.cogenerated_subgame(&agree))
}

/// A disjoint union with its two injections.
#[derive(Debug, Clone)]
pub struct Coproduct {
    pub game: Game,
    pub left: GameMorphism,
    pub right: GameMorphism,
}

/// `X + Y`: the states of `X` (named `L(x)`) followed by those of `Y` (`R(y)`).
pub fn coproduct(x: &Game, y: &Game) -> Coproduct {
    let offset = x.len();
    let mut names: Vec<String> = x.states().map(|s| alloc::format!("L({})", x.state_name(s))).collect();
    names.extend(y.states().map(|s| alloc::format!("R({})", y.state_name(s))));
    let mut options: Vec<Vec<State>> = x.states().map(|s| x.options(s).to_vec()).collect();
    options.extend(y.states().map(|s| y.options(s).iter().map(|&o| o + offset).collect()));
    let name = alloc::format!("{} + {}", x.name(), y.name());
    let game = Game::with_names(name, names, options).expect("disjoint unions of games are games");
    let total = game.len();
    Coproduct {
        left: GameMorphism::new_unchecked(x.states().collect(), total),
        right: GameMorphism::new_unchecked(y.states().map(|s| s + offset).collect(), total),
        game,
    }
}

/// A game divided by an equivalence relation on its states.
#[derive(Debug, Clone)]
pub struct QuotientGame {
    /// Class of every source state.
    pub class_map: Vec<State>,
    pub quotient: Game,
}

impl QuotientGame {
    /// The class map as a game morphism, if it is one. It always satisfies the
    /// graph condition; path lifting holds when the relation is the kernel of a
    /// game morphism.
    pub fn projection(&self, source: &Game) -> Result<GameMorphism, GameError> {
        GameMorphism::check(self.class_map.clone(), source, &self.quotient)
    }

    pub fn class_count(&self) -> usize {
        self.quotient.len()
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Divides `game` by the equivalence relation generated by `pairs`.
///
/// Classes are numbered by their least member and named after it. The
/// options of a class are the classes of all options of its members. Fails
/// if the induced relation has a cycle.
pub fn quotient_coequalizer(
    game: &Game,
    pairs: &[(State, State)],
) -> Result<QuotientGame, GameError> {
    let n = game.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for &(a, b) in pairs {
        for s in [a, b] {
            if s >= n {
                return Err(GameError::StateOutOfRange { state: s, len: n });
            }
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            parent[hi] = lo;
        }
    }
    let mut class_of_root = alloc::vec![usize::MAX; n];
    let mut class_map = Vec::with_capacity(n);
    let mut names = Vec::new();
    for x in 0..n {
        let r = find(&mut parent, x);
        if class_of_root[r] == usize::MAX {
            class_of_root[r] = names.len();
            names.push(String::from(game.state_name(x)));
        }
        class_map.push(class_of_root[r]);
    }
    let mut options = alloc::vec![Vec::new(); names.len()];
    for x in 0..n {
        options[class_map[x]].extend(game.options(x).iter().map(|&o| class_map[o]));
    }
    let name = alloc::format!("{}/~", game.name());
    let quotient = Game::with_names(name, names, options)?;
    Ok(QuotientGame {
        class_map,
        quotient,
    })
}

/// The binary product `X × Y` with its projections.
///
/// States are labeled nodes `(S, (x, y))` where the children `S` have
/// `x`-labels exactly `θ(x)` and `y`-labels exactly `θ(y)`.
#[derive(Debug, Clone)]
pub struct ProductGame {
    pub game: Game,
    /// Label pair of every state.
    pub labels: Vec<(State, State)>,
    pub left: GameMorphism,
    pub right: GameMorphism,
    arena: LabeledHfsArena,
    right_len: usize,
}

impl ProductGame {
    fn label_index(&self, x: State, y: State) -> usize {
        x * self.right_len + y
    }

    /// The state with the given children and label pair, if admitted.
    pub fn node(&self, children: &[State], x: State, y: State) -> Option<State> {
        let kids: Vec<LhfsId> = children.iter().map(|&c| LhfsId::from_index(c)).collect();
        self.arena.get(&kids, self.label_index(x, y)).map(LhfsId::index)
    }

    /// The unique morphism `⟨f, g⟩ : W -> X × Y` with `left ∘ ⟨f, g⟩ = f` and
    /// `right ∘ ⟨f, g⟩ = g`.
    pub fn pairing(
        &self,
        w: &Game,
        f: &GameMorphism,
        g: &GameMorphism,
    ) -> Result<GameMorphism, GameError> {
        if f.source_len() != w.len()
            || g.source_len() != w.len()
            || f.target_len() != self.left.target_len()
            || g.target_len() != self.right.target_len()
        {
            return Err(GameError::SourceMismatch);
        }
        let mut map = alloc::vec![0; w.len()];
        for &s in w.order() {
            let kids: Vec<State> = w.options(s).iter().map(|&o| map[o]).collect();
            map[s] = self
                .node(&kids, f.apply(s), g.apply(s))
                .expect("pairs of morphisms land on admitted nodes");
        }
        Ok(GameMorphism::new_unchecked(map, self.game.len()))
    }

    /// Number of states with each option count.
    pub fn option_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for s in self.game.states() {
            *profile.entry(self.game.options(s).len()).or_insert(0) += 1;
        }
        profile
    }
}

/// Builds `X × Y` bottom-up. Fails once more than `budget` candidate child
/// sets would be examined, or more than `budget` nodes admitted.
pub fn product(x: &Game, y: &Game, budget: usize) -> Result<ProductGame, GameError> {
    let over = GameError::BudgetExceeded { budget };
    let (nx, ny) = (x.len(), y.len());
    let mut arena = LabeledHfsArena::new((nx * ny).max(1));
    let mut labels: Vec<(State, State)> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    let mut by_label: Vec<Vec<LhfsId>> = alloc::vec![Vec::new(); nx * ny];
    let mut candidates = 0usize;

    let mut pairs: Vec<(State, State)> = Vec::with_capacity(nx * ny);
    for &a in x.order() {
        for &b in y.order() {
            pairs.push((a, b));
        }
    }
    for (a, b) in pairs {
        let (ta, tb) = (x.options(a), y.options(b));
        let mut admitted: Vec<Vec<LhfsId>> = Vec::new();
        if ta.is_empty() && tb.is_empty() {
            admitted.push(Vec::new());
        } else if !ta.is_empty() && !tb.is_empty() {
            let pool: Vec<LhfsId> = ta
                .iter()
                .flat_map(|&a2| tb.iter().map(move |&b2| (a2, b2)))
                .flat_map(|(a2, b2)| by_label[a2 * ny + b2].iter().copied())
                .collect();
            if pool.len() >= usize::BITS as usize - 1 {
                return Err(over);
            }
            let subsets = 1usize << pool.len();
            candidates = candidates.saturating_add(subsets);
            if candidates > budget {
                return Err(over);
            }
            for mask in 1..subsets {
                let kids: Vec<LhfsId> = (0..pool.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| pool[i])
                    .collect();
                let covers = |side: &[State], pick: fn((State, State)) -> State| {
                    let mut seen: Vec<State> = kids.iter().map(|k| pick(labels[k.index()])).collect();
                    seen.sort_unstable();
                    seen.dedup();
                    seen == side
                };
                if covers(ta, |p| p.0) && covers(tb, |p| p.1) {
                    admitted.push(kids);
                }
            }
        }
        for (k, kids) in admitted.into_iter().enumerate() {
            if labels.len() == budget {
                return Err(over);
            }
            let id = arena
                .intern(kids, a * ny + b)
                .expect("label pairs are in the alphabet");
            debug_assert_eq!(id.index(), labels.len());
            labels.push((a, b));
            names.push(alloc::format!("({})({})-{k}", x.state_name(a), y.state_name(b)));
            by_label[a * ny + b].push(id);
        }
    }

    let options = (0..labels.len())
        .map(|s| arena.children(LhfsId::from_index(s)).iter().map(|c| c.index()).collect())
        .collect();
    let name = alloc::format!("{} × {}", x.name(), y.name());
    let game = Game::with_names(name, names, options).expect("products of games are games");
    let left = GameMorphism::check(labels.iter().map(|p| p.0).collect(), &game, x)
        .expect("the left projection is a morphism");
    let right = GameMorphism::check(labels.iter().map(|p| p.1).collect(), &game, y)
        .expect("the right projection is a morphism");
    Ok(ProductGame {
        game,
        labels,
        left,
        right,
        arena,
        right_len: ny,
    })
}

/// Every morphism `X -> Y`, sorted lexicographically by map.
///
/// Fails once more than `limit` morphisms are found.
pub fn enumerate_homs(x: &Game, y: &Game, limit: usize) -> Result<Vec<GameMorphism>, GameError> {
    let mut out = Vec::new();
    let mut by_options: BTreeMap<&[State], Vec<State>> = BTreeMap::new();
    for s in y.states() {
        by_options.entry(y.options(s)).or_default().push(s);
    }
    let mut map = alloc::vec![usize::MAX; x.len()];
    homs_from(x, y, &by_options, 0, &mut map, limit, &mut out)?;
    out.sort_unstable_by(|a, b| a.map().cmp(b.map()));
    Ok(out)
}

fn homs_from(
    x: &Game,
    y: &Game,
    by_options: &BTreeMap<&[State], Vec<State>>,
    depth: usize,
    map: &mut Vec<State>,
    limit: usize,
    out: &mut Vec<GameMorphism>,
) -> Result<(), GameError> {
    if depth == x.len() {
        if out.len() == limit {
            return Err(GameError::BudgetExceeded { budget: limit });
        }
        out.push(GameMorphism::new_unchecked(map.clone(), y.len()));
        return Ok(());
    }
    let s = x.order()[depth];
    let mut image: Vec<State> = x.options(s).iter().map(|&o| map[o]).collect();
    image.sort_unstable();
    image.dedup();
    if let Some(cands) = by_options.get(image.as_slice()) {
        for &t in cands {
            map[s] = t;
            homs_from(x, y, by_options, depth + 1, map, limit, out)?;
        }
    }
    map[s] = usize::MAX;
    Ok(())
}

/// `|Hom(X, Y)|`, failing past `limit`.
pub fn count_homs(x: &Game, y: &Game, limit: usize) -> Result<usize, GameError> {
    enumerate_homs(x, y, limit).map(|v| v.len())
}

/// Colours invariant under isomorphism: the reduction into the terminal
/// game, refined by the multiset of predecessor colours until stable.
fn iso_colours(x: &Game, y: &Game) -> (Vec<usize>, Vec<usize>) {
    let mut arena = HfsArena::new();
    let xi_x = arena.xi_reduce(x);
    let xi_y = arena.xi_reduce(y);
    let mut cx: Vec<usize> = xi_x.iter().map(|h| h.index()).collect();
    let mut cy: Vec<usize> = xi_y.iter().map(|h| h.index()).collect();
    let distinct = |c: &[usize], d: &[usize]| {
        let mut all: Vec<usize> = c.iter().chain(d).copied().collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    };
    loop {
        let before = distinct(&cx, &cy);
        let signature = |g: &Game, c: &[usize]| -> Vec<(usize, Vec<usize>)> {
            let mut parents: Vec<Vec<usize>> = alloc::vec![Vec::new(); g.len()];
            for (p, o) in g.edges() {
                parents[o].push(c[p]);
            }
            parents
                .into_iter()
                .enumerate()
                .map(|(s, mut ps)| {
                    ps.sort_unstable();
                    (c[s], ps)
                })
                .collect()
        };
        let sx = signature(x, &cx);
        let sy = signature(y, &cy);
        let mut table: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for sig in sx.iter().chain(&sy) {
            let next = table.len();
            table.entry(sig).or_insert(next);
        }
        let nx: Vec<usize> = sx.iter().map(|s| table[s]).collect();
        let ny: Vec<usize> = sy.iter().map(|s| table[s]).collect();
        let after = distinct(&nx, &ny);
        cx = nx;
        cy = ny;
        if after == before {
            return (cx, cy);
        }
    }
}

/// An isomorphism `X -> Y` if one exists.
pub fn are_isomorphic(x: &Game, y: &Game) -> Option<GameMorphism> {
    if x.len() != y.len() || x.edge_count() != y.edge_count() {
        return None;
    }
    let (cx, cy) = iso_colours(x, y);
    let mut hx = cx.clone();
    let mut hy = cy.clone();
    hx.sort_unstable();
    hy.sort_unstable();
    if hx != hy {
        return None;
    }
    let mut map = alloc::vec![usize::MAX; x.len()];
    let mut used = alloc::vec![false; y.len()];
    if iso_from(x, y, &cx, &cy, 0, &mut map, &mut used) {
        Some(GameMorphism::new_unchecked(map, y.len()))
    } else {
        None
    }
}

fn iso_from(
    x: &Game,
    y: &Game,
    cx: &[usize],
    cy: &[usize],
    depth: usize,
    map: &mut Vec<State>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == x.len() {
        return true;
    }
    let s = x.order()[depth];
    let mut image: Vec<State> = x.options(s).iter().map(|&o| map[o]).collect();
    image.sort_unstable();
    for t in y.states() {
        if used[t] || cy[t] != cx[s] || y.options(t) != image.as_slice() {
            continue;
        }
        map[s] = t;
        used[t] = true;
        if iso_from(x, y, cx, cy, depth + 1, map, used) {
            return true;
        }
        used[t] = false;
    }
    map[s] = usize::MAX;
    false
}
