//! Game values as step algebras over finite sets, and the hylomorphism that
//! evaluates them.
//!
//! A value algebra turns the finite *set* of values of a state's options into
//! the value of the state. [`hylo_eval`] runs that step once per state in the
//! game's topological order. Inputs reach `step` sorted and deduplicated.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::AlgebraError;
use crate::game::Game;
use crate::hfs::{AckermannGuard, HfsArena, HfsId};

/// A finitary set algebra: a carrier and a step function on finite sets of it.
pub trait Algebra {
    type Carrier: Clone + Ord;

    fn name(&self) -> &str;

    /// `inputs` is sorted ascending without duplicates.
    fn step(&self, inputs: &[Self::Carrier]) -> Result<Self::Carrier, AlgebraError>;
}

/// Outcome of a state: `N` if the player to move wins, `P` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Outcome {
    N,
    P,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::N => "N",
            Outcome::P => "P",
        })
    }
}

/// Remoteness `P_{2k}` / `N_{2k+1}`; the parity of the index is the outcome.
/// Ordered by index: `P_0 < N_1 < P_2 < …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Remoteness(pub u64);

impl Remoteness {
    pub fn index(self) -> u64 {
        self.0
    }

    pub fn outcome(self) -> Outcome {
        if self.0 % 2 == 0 {
            Outcome::P
        } else {
            Outcome::N
        }
    }
}

impl fmt::Display for Remoteness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.outcome(), self.0)
    }
}

/// Minimum excluded natural.
pub fn mex(set: impl IntoIterator<Item = u64>) -> u64 {
    let mut v: Vec<u64> = set.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v.iter()
        .enumerate()
        .find(|&(i, &x)| x != i as u64)
        .map_or(v.len() as u64, |(i, _)| i as u64)
}

/// Least natural strictly above every member: 0 for ∅, else max + 1.
pub fn xem(set: impl IntoIterator<Item = u64>) -> u64 {
    set.into_iter().max().map_or(0, |m| m + 1)
}

/// `{0, …, n-1}`, the set whose `mex` and `xem` are both `n`.
pub fn nu(n: u64) -> Vec<u64> {
    (0..n).collect()
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Mex;

impl Algebra for Mex {
    type Carrier = u64;
    fn name(&self) -> &str {
        "mex"
    }
    fn step(&self, inputs: &[u64]) -> Result<u64, AlgebraError> {
        Ok(mex(inputs.iter().copied()))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Xem;

impl Algebra for Xem {
    type Carrier = u64;
    fn name(&self) -> &str {
        "xem"
    }
    fn step(&self, inputs: &[u64]) -> Result<u64, AlgebraError> {
        Ok(xem(inputs.iter().copied()))
    }
}

/// Normal-play outcome: `P` iff no option is `P`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Np;

impl Algebra for Np {
    type Carrier = Outcome;
    fn name(&self) -> &str {
        "np"
    }
    fn step(&self, inputs: &[Outcome]) -> Result<Outcome, AlgebraError> {
        Ok(if inputs.contains(&Outcome::P) {
            Outcome::N
        } else {
            Outcome::P
        })
    }
}

/// Whether the game has ended: true iff there are no options.
#[derive(Debug, Clone, Copy, Default)]
pub struct Empty;

impl Algebra for Empty {
    type Carrier = bool;
    fn name(&self) -> &str {
        "empty"
    }
    fn step(&self, inputs: &[bool]) -> Result<bool, AlgebraError> {
        Ok(inputs.is_empty())
    }
}

/// Misère outcome: `P` iff the option set is exactly `{N}`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Mnp;

impl Algebra for Mnp {
    type Carrier = Outcome;
    fn name(&self) -> &str {
        "mnp"
    }
    fn step(&self, inputs: &[Outcome]) -> Result<Outcome, AlgebraError> {
        Ok(if inputs == [Outcome::N] {
            Outcome::P
        } else {
            Outcome::N
        })
    }
}

/// Remoteness: `N_{min{n | P_n ∈ S}+1}` if some option is a `P`, otherwise
/// `P_{xem{n | N_n ∈ S}}`.
#[derive(Debug, Clone, Copy, Default)]
pub struct RemotenessAlg;

impl Algebra for RemotenessAlg {
    type Carrier = Remoteness;
    fn name(&self) -> &str {
        "remoteness"
    }
    fn step(&self, inputs: &[Remoteness]) -> Result<Remoteness, AlgebraError> {
        let fastest_win = inputs
            .iter()
            .filter(|r| r.outcome() == Outcome::P)
            .map(|r| r.0)
            .min();
        Ok(match fastest_win {
            Some(n) => Remoteness(n + 1),
            None => Remoteness(xem(inputs.iter().map(|r| r.0))),
        })
    }
}

/// Binary expression `S ↦ Σ_{s∈S} 2^s`, bounded by an Ackermann bit budget.
#[derive(Debug, Clone, Copy, Default)]
pub struct Bin {
    pub guard: AckermannGuard,
}

impl Algebra for Bin {
    type Carrier = BigUint;
    fn name(&self) -> &str {
        "bin"
    }
    fn step(&self, inputs: &[BigUint]) -> Result<BigUint, AlgebraError> {
        let mut out = BigUint::default();
        for s in inputs {
            let bit = s
                .to_u64()
                .filter(|&b| b < self.guard.max_bits)
                .ok_or(AlgebraError::DepthGuard {
                    max_bits: self.guard.max_bits,
                })?;
            out.set_bit(bit, true);
        }
        Ok(out)
    }
}

/// A carrier value of any built-in algebra, for name-driven evaluation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Nat(u64),
    Outcome(Outcome),
    Bool(bool),
    Remoteness(Remoteness),
    Big(BigUint),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Nat(_) => "natural",
            Value::Outcome(_) => "outcome",
            Value::Bool(_) => "boolean",
            Value::Remoteness(_) => "remoteness",
            Value::Big(_) => "big natural",
        }
    }

    /// The normal-play outcome carried by this value, when it determines one.
    pub fn as_outcome(&self) -> Option<Outcome> {
        match self {
            Value::Outcome(o) => Some(*o),
            Value::Remoteness(r) => Some(r.outcome()),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Nat(n) => write!(f, "{n}"),
            Value::Outcome(o) => write!(f, "{o}"),
            Value::Bool(true) => f.write_str("T"),
            Value::Bool(false) => f.write_str("F"),
            Value::Remoteness(r) => write!(f, "{r}"),
            Value::Big(n) => write!(f, "{n}"),
        }
    }
}

/// The built-in algebras, selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Mex,
    Np,
    Empty,
    Xem,
    Mnp,
    Remoteness,
    Bin(AckermannGuard),
}

impl Builtin {
    /// The six algebras of the standard game values, without `bin`.
    pub const STANDARD: [Builtin; 6] = [
        Builtin::Mex,
        Builtin::Np,
        Builtin::Empty,
        Builtin::Xem,
        Builtin::Mnp,
        Builtin::Remoteness,
    ];

    /// Accepts algebra names and the game value they induce: `mex`/`grundy`,
    /// `np`/`outcome`, `empty`/`end`, `xem`/`birthday`, `mnp`/`misere`,
    /// `remoteness`, `bin`.
    pub fn from_name(name: &str, guard: AckermannGuard) -> Result<Self, AlgebraError> {
        Ok(match name {
            "mex" | "grundy" => Builtin::Mex,
            "np" | "outcome" => Builtin::Np,
            "empty" | "end" => Builtin::Empty,
            "xem" | "birthday" => Builtin::Xem,
            "mnp" | "misere" => Builtin::Mnp,
            "remoteness" => Builtin::Remoteness,
            "bin" => Builtin::Bin(guard),
            other => return Err(AlgebraError::UnknownAlgebra(String::from(other))),
        })
    }

    fn carrier_name(self) -> &'static str {
        match self {
            Builtin::Mex | Builtin::Xem => "natural",
            Builtin::Np | Builtin::Mnp => "outcome",
            Builtin::Empty => "boolean",
            Builtin::Remoteness => "remoteness",
            Builtin::Bin(_) => "big natural",
        }
    }

    fn mismatch(self, found: &Value) -> AlgebraError {
        AlgebraError::CarrierMismatch {
            algebra: self.static_name(),
            expected: self.carrier_name(),
            found: found.kind(),
        }
    }

    fn static_name(self) -> &'static str {
        match self {
            Builtin::Mex => "mex",
            Builtin::Np => "np",
            Builtin::Empty => "empty",
            Builtin::Xem => "xem",
            Builtin::Mnp => "mnp",
            Builtin::Remoteness => "remoteness",
            Builtin::Bin(_) => "bin",
        }
    }
}

fn unwrap_all<T>(
    alg: Builtin,
    inputs: &[Value],
    pick: impl Fn(&Value) -> Option<T>,
) -> Result<Vec<T>, AlgebraError> {
    inputs
        .iter()
        .map(|v| pick(v).ok_or_else(|| alg.mismatch(v)))
        .collect()
}

impl Algebra for Builtin {
    type Carrier = Value;

    fn name(&self) -> &str {
        self.static_name()
    }

    fn step(&self, inputs: &[Value]) -> Result<Value, AlgebraError> {
        let alg = *self;
        let nat = |v: &Value| match v {
            Value::Nat(n) => Some(*n),
            _ => None,
        };
        let outcome = |v: &Value| match v {
            Value::Outcome(o) => Some(*o),
            _ => None,
        };
        // Typed inputs stay sorted and duplicate-free: each carrier embeds
        // into `Value` monotonically.
        Ok(match alg {
            Builtin::Mex => Value::Nat(Mex.step(&unwrap_all(alg, inputs, nat)?)?),
            Builtin::Xem => Value::Nat(Xem.step(&unwrap_all(alg, inputs, nat)?)?),
            Builtin::Np => Value::Outcome(Np.step(&unwrap_all(alg, inputs, outcome)?)?),
            Builtin::Mnp => Value::Outcome(Mnp.step(&unwrap_all(alg, inputs, outcome)?)?),
            Builtin::Empty => {
                let b = unwrap_all(alg, inputs, |v| match v {
                    Value::Bool(b) => Some(*b),
                    _ => None,
                })?;
                Value::Bool(Empty.step(&b)?)
            }
            Builtin::Remoteness => {
                let r = unwrap_all(alg, inputs, |v| match v {
                    Value::Remoteness(r) => Some(*r),
                    _ => None,
                })?;
                Value::Remoteness(RemotenessAlg.step(&r)?)
            }
            Builtin::Bin(guard) => {
                let b = unwrap_all(alg, inputs, |v| match v {
                    Value::Big(n) => Some(n.clone()),
                    _ => None,
                })?;
                Value::Big(Bin { guard }.step(&b)?)
            }
        })
    }
}

/// Applies one algebra step to an arbitrary collection of carrier values,
/// collapsing duplicates first.
pub fn algebra_step<A: Algebra>(
    alg: &A,
    inputs: impl IntoIterator<Item = A::Carrier>,
) -> Result<A::Carrier, AlgebraError> {
    let mut set: Vec<A::Carrier> = inputs.into_iter().collect();
    set.sort();
    set.dedup();
    alg.step(&set)
}

/// The hylomorphism of `alg` on `game`: `v(x) = step({v(x') | x -> x'})`,
/// evaluated once per state in topological order.
pub fn hylo_eval<A: Algebra>(game: &Game, alg: &A) -> Result<Vec<A::Carrier>, AlgebraError> {
    let mut values: Vec<Option<A::Carrier>> = alloc::vec![None; game.len()];
    let mut inputs = Vec::new();
    for &x in game.order() {
        inputs.clear();
        inputs.extend(
            game.options(x)
                .iter()
                .map(|&o| values[o].clone().expect("options are evaluated first")),
        );
        inputs.sort();
        inputs.dedup();
        values[x] = Some(alg.step(&inputs)?);
    }
    Ok(values.into_iter().map(Option::unwrap).collect())
}

pub fn grundy(game: &Game) -> Vec<u64> {
    hylo_eval(game, &Mex).expect("mex is total")
}

pub fn outcome(game: &Game) -> Vec<Outcome> {
    hylo_eval(game, &Np).expect("np is total")
}

pub fn birthday(game: &Game) -> Vec<u64> {
    hylo_eval(game, &Xem).expect("xem is total")
}

pub fn remoteness(game: &Game) -> Vec<Remoteness> {
    hylo_eval(game, &RemotenessAlg).expect("remoteness is total")
}

/// Algebra values of hereditarily finite sets, cached per arena id.
///
/// Members precede their sets in an arena, so values are filled in id order.
#[derive(Debug, Clone)]
pub struct HfsValues<A: Algebra> {
    alg: A,
    values: Vec<A::Carrier>,
}

impl<A: Algebra> HfsValues<A> {
    pub fn new(alg: A) -> Self {
        HfsValues {
            alg,
            values: Vec::new(),
        }
    }

    pub fn algebra(&self) -> &A {
        &self.alg
    }

    pub fn value(&mut self, arena: &HfsArena, id: HfsId) -> Result<A::Carrier, AlgebraError> {
        let mut inputs = Vec::new();
        while self.values.len() <= id.index() {
            let next = HfsId::from_index(self.values.len());
            inputs.clear();
            inputs.extend(arena.children(next).iter().map(|c| self.values[c.index()].clone()));
            inputs.sort();
            inputs.dedup();
            let v = self.alg.step(&inputs)?;
            self.values.push(v);
        }
        Ok(self.values[id.index()].clone())
    }
}

/// Verdict of [`check_algebra_hom`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomVerdict<C> {
    Holds,
    /// A sample set `S` with `h(stepA(S)) ≠ stepB(h[S])`.
    Counterexample(Vec<C>),
}

impl<C> HomVerdict<C> {
    pub fn holds(&self) -> bool {
        matches!(self, HomVerdict::Holds)
    }
}

/// Checks the algebra homomorphism square `h ∘ stepA = stepB ∘ h[-]` on every
/// sample set, reporting the first failing sample.
pub fn check_algebra_hom<A, B, H>(
    h: H,
    source: &A,
    target: &B,
    samples: &[Vec<A::Carrier>],
) -> Result<HomVerdict<A::Carrier>, AlgebraError>
where
    A: Algebra,
    B: Algebra,
    H: Fn(&A::Carrier) -> B::Carrier,
{
    for sample in samples {
        let lhs = h(&algebra_step(source, sample.iter().cloned())?);
        let rhs = algebra_step(target, sample.iter().map(&h))?;
        if lhs != rhs {
            return Ok(HomVerdict::Counterexample(sample.clone()));
        }
    }
    Ok(HomVerdict::Holds)
}

/// All subsets of `0..n` as sorted vectors, in bitmask order.
pub fn subsets_below(n: u64) -> Vec<Vec<u64>> {
    (0u64..1 << n)
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
        .collect()
}
