//! Minimum monoid factorizations and finite approximations of Bouton monoids.
//!
//! A value `v` on a monoid `M` factors as `a ∘ q` through the quotient of `M`
//! by its syntactic congruence `m ~ m' ⟺ ∀a,b. v(amb) = v(am'b)`. For the
//! miniature monoid of a sum on hereditarily finite sets the quotient is
//! infinite in principle; [`BoutonApproximation`] computes it on the sets of
//! birthday at most `k`, testing against contexts of birthday at most `d`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{BoutonError, MonoidError};
use crate::game::Game;
use crate::hfs::{AckermannGuard, HfsArena, HfsId};
use crate::sums::{MiniatureMonoid, SumKind};
use crate::values::{Algebra, HfsValues};

/// A finite monoid, or a semigroup when `unit` is `None`, given by its table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    n: usize,
    table: Vec<usize>,
    unit: Option<usize>,
}

impl FiniteMonoid {
    /// Checks squareness, closure, associativity and the unit laws.
    pub fn new(rows: Vec<Vec<usize>>, unit: Option<usize>) -> Result<Self, MonoidError> {
        let n = rows.len();
        let mut table = Vec::with_capacity(n * n);
        for (row, entries) in rows.into_iter().enumerate() {
            if entries.len() != n {
                return Err(MonoidError::NotSquare {
                    row,
                    len: entries.len(),
                });
            }
            for (b, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(MonoidError::EntryOutOfRange { a: row, b, value });
                }
            }
            table.extend(entries);
        }
        let m = FiniteMonoid { n, table, unit };
        for a in 0..n {
            for b in 0..n {
                let ab = m.mul(a, b);
                for c in 0..n {
                    if m.mul(ab, c) != m.mul(a, m.mul(b, c)) {
                        return Err(MonoidError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        if let Some(u) = unit {
            if u >= n {
                return Err(MonoidError::EntryOutOfRange {
                    a: u,
                    b: u,
                    value: u,
                });
            }
            if let Some(element) = (0..n).find(|&e| m.mul(u, e) != e || m.mul(e, u) != e) {
                return Err(MonoidError::NotUnit { unit: u, element });
            }
        }
        Ok(m)
    }

    /// The additive group `ℤ/n`.
    pub fn cyclic(n: usize) -> Self {
        let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(rows, (n > 0).then_some(0)).expect("ℤ/n is a monoid")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n.max(1)).take(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// `v = a ∘ q` with `q` the quotient by the syntactic congruence of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimumFactorization<V> {
    /// Members of each class, ascending; classes are ordered by least member.
    pub classes: Vec<Vec<usize>>,
    pub q: Vec<usize>,
    pub quotient: FiniteMonoid,
    pub a: Vec<V>,
}

/// Numbers the blocks of `key` by least element.
fn renumber<K: Ord>(key: &[K]) -> Vec<usize> {
    let mut ids: BTreeMap<&K, usize> = BTreeMap::new();
    key.iter()
        .map(|k| {
            let next = ids.len();
            *ids.entry(k).or_insert(next)
        })
        .collect()
}

/// The coarsest congruence on `m` on whose classes `f` is constant, by
/// partition refinement from the kernel of `f`.
pub fn syntactic_factorization<V: Ord + Clone>(
    m: &FiniteMonoid,
    f: &[V],
) -> Result<MinimumFactorization<V>, MonoidError> {
    let n = m.len();
    if f.len() != n {
        return Err(MonoidError::ValueLength {
            expected: n,
            found: f.len(),
        });
    }
    let mut q = renumber(f);
    loop {
        let keys: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
            .map(|x| {
                let left = (0..n).map(|c| q[m.mul(c, x)]).collect();
                let right = (0..n).map(|c| q[m.mul(x, c)]).collect();
                (q[x], left, right)
            })
            .collect();
        let next = renumber(&keys);
        let done = next.iter().max() == q.iter().max();
        q = next;
        if done {
            break;
        }
    }
    let count = q.iter().max().map_or(0, |&c| c + 1);
    let mut classes = alloc::vec![Vec::new(); count];
    for (x, &c) in q.iter().enumerate() {
        classes[c].push(x);
    }
    let rows = classes
        .iter()
        .map(|ci| classes.iter().map(|cj| q[m.mul(ci[0], cj[0])]).collect())
        .collect();
    let quotient = FiniteMonoid::new(rows, m.unit().map(|u| q[u]))
        .expect("quotients of monoids by congruences are monoids");
    let a = classes.iter().map(|c| f[c[0]].clone()).collect();
    Ok(MinimumFactorization {
        classes,
        q,
        quotient,
        a,
    })
}

/// Largest birthday bound accepted by default.
pub const DEFAULT_BOUND_GUARD: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoutonOptions {
    pub max_bound: usize,
    /// Add the coordinates `v(c₁ ∗ z ∗ c₂)` to every signature.
    pub two_sided: bool,
}

impl Default for BoutonOptions {
    fn default() -> Self {
        BoutonOptions {
            max_bound: DEFAULT_BOUND_GUARD,
            two_sided: false,
        }
    }
}

/// The quotient of the miniature monoid of `kind` by a value `v`, computed on
/// the universe of birthday `≤ k` with contexts of birthday `≤ d`.
///
/// The signature of `z` is `v(z)` followed by `v(c ∗ z)` for each context
/// `c`. Classes are distinct signatures, ordered by the Ackermann code of their
/// least member.
#[derive(Debug, Clone)]
pub struct BoutonApproximation<A: Algebra> {
    pub kind: SumKind,
    pub k: usize,
    pub d: usize,
    pub universe: Vec<HfsId>,
    pub contexts: Vec<HfsId>,
    /// Members of each class, by ascending Ackermann code.
    pub classes: Vec<Vec<HfsId>>,
    pub signatures: Vec<Vec<A::Carrier>>,
    pub table: Vec<Vec<usize>>,
    /// Value of each class, the first signature coordinate.
    pub a: Vec<A::Carrier>,
    pub stable: bool,
    /// A pair `(x, y)` of the universe with `x ∗ y` outside
    /// `table[class x][class y]`, when the approximation is unstable.
    pub witness: Option<(HfsId, HfsId)>,
    two_sided: bool,
    arena: HfsArena,
    monoid: MiniatureMonoid,
    values: HfsValues<A>,
    lookup: BTreeMap<Vec<A::Carrier>, usize>,
}

pub fn bouton_approximation<A: Algebra>(
    kind: SumKind,
    alg: A,
    k: usize,
    d: usize,
) -> Result<BoutonApproximation<A>, BoutonError> {
    bouton_approximation_with(kind, alg, k, d, BoutonOptions::default())
}

pub fn bouton_approximation_with<A: Algebra>(
    kind: SumKind,
    alg: A,
    k: usize,
    d: usize,
    options: BoutonOptions,
) -> Result<BoutonApproximation<A>, BoutonError> {
    if k > options.max_bound || d > options.max_bound {
        return Err(BoutonError::Guard {
            k,
            d,
            max: options.max_bound,
        });
    }
    let mut arena = HfsArena::new();
    let mut universe = arena.enumerate_universe(k)?;
    let contexts = arena.enumerate_universe(d)?;
    let guard = AckermannGuard::default();
    let mut codes: BTreeMap<HfsId, BigUint> = BTreeMap::new();
    for &z in &universe {
        codes.insert(z, arena.ackermann_encode(z, guard)?);
    }
    universe.sort_by(|x, y| codes[x].cmp(&codes[y]));

    let mut approx = BoutonApproximation {
        kind,
        k,
        d,
        universe,
        contexts,
        classes: Vec::new(),
        signatures: Vec::new(),
        table: Vec::new(),
        a: Vec::new(),
        stable: true,
        witness: None,
        two_sided: options.two_sided,
        arena,
        monoid: MiniatureMonoid::new(kind),
        values: HfsValues::new(alg),
        lookup: BTreeMap::new(),
    };

    // The universe is sorted by code, so classes appear in order of their
    // least member.
    let mut member_class = Vec::with_capacity(approx.universe.len());
    for i in 0..approx.universe.len() {
        let z = approx.universe[i];
        let sig = approx.signature(z)?;
        let class = match approx.lookup.get(&sig) {
            Some(&c) => c,
            None => {
                let c = approx.classes.len();
                approx.lookup.insert(sig.clone(), c);
                approx.a.push(sig[0].clone());
                approx.signatures.push(sig);
                approx.classes.push(Vec::new());
                c
            }
        };
        approx.classes[class].push(z);
        member_class.push(class);
    }

    let count = approx.classes.len();
    let mut table = alloc::vec![alloc::vec![0; count]; count];
    for i in 0..count {
        for j in 0..count {
            let (x, y) = (approx.classes[i][0], approx.classes[j][0]);
            let p = approx.product(x, y);
            table[i][j] = match approx.classify(p) {
                Ok(c) => c,
                Err(BoutonError::UnknownSignature { .. }) => {
                    return Err(BoutonError::Unstable { left: i, right: j })
                }
                Err(e) => return Err(e),
            };
        }
    }
    approx.table = table;

    'sweep: for i in 0..approx.universe.len() {
        for j in 0..approx.universe.len() {
            let (x, y) = (approx.universe[i], approx.universe[j]);
            let p = approx.product(x, y);
            let expected = approx.table[member_class[i]][member_class[j]];
            if approx.classify(p).ok() != Some(expected) {
                approx.stable = false;
                approx.witness = Some((x, y));
                break 'sweep;
            }
        }
    }
    Ok(approx)
}

impl<A: Algebra> BoutonApproximation<A> {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn arena(&self) -> &HfsArena {
        &self.arena
    }

    /// Mutable access for building sets to classify. Existing ids stay valid.
    pub fn arena_mut(&mut self) -> &mut HfsArena {
        &mut self.arena
    }

    /// `x ∗ y` in the miniature monoid.
    pub fn product(&mut self, x: HfsId, y: HfsId) -> HfsId {
        self.monoid.product(&mut self.arena, x, y)
    }

    pub fn value(&mut self, z: HfsId) -> Result<A::Carrier, BoutonError> {
        Ok(self.values.value(&self.arena, z)?)
    }

    pub fn signature(&mut self, z: HfsId) -> Result<Vec<A::Carrier>, BoutonError> {
        let mut sig = alloc::vec![self.value(z)?];
        for i in 0..self.contexts.len() {
            let c = self.contexts[i];
            let cz = self.product(c, z);
            sig.push(self.value(cz)?);
        }
        if self.two_sided {
            for i in 0..self.contexts.len() {
                for j in 0..self.contexts.len() {
                    let (c1, c2) = (self.contexts[i], self.contexts[j]);
                    let cz = self.product(c1, z);
                    let czc = self.product(cz, c2);
                    sig.push(self.value(czc)?);
                }
            }
        }
        Ok(sig)
    }

    /// The class whose signature equals that of `z`, which need not lie in
    /// the universe.
    pub fn classify(&mut self, z: HfsId) -> Result<usize, BoutonError> {
        let sig = self.signature(z)?;
        match self.lookup.get(&sig) {
            Some(&c) => Ok(c),
            None => Err(BoutonError::UnknownSignature {
                code: match self.arena.ackermann_encode(z, AckermannGuard::default()) {
                    Ok(code) => code.to_string(),
                    Err(_) => String::from("(beyond the bit budget)"),
                },
            }),
        }
    }

    /// The class of every state of `game`, through its reduction into the
    /// terminal game.
    pub fn game_classes(&mut self, game: &Game) -> Result<Vec<usize>, BoutonError> {
        let xi = self.arena.xi_reduce(game);
        xi.into_iter().map(|z| self.classify(z)).collect()
    }

    /// The class table as a finite monoid (a semigroup for non-unital sums).
    pub fn monoid(&mut self) -> Result<FiniteMonoid, MonoidError> {
        let unit = match self.monoid.unit() {
            Some(u) => self.classify(u).ok(),
            None => None,
        };
        FiniteMonoid::new(self.table.clone(), unit)
    }
}
