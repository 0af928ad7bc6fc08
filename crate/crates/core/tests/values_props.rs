mod common;

use common::{random_cover, random_game, rng};
use hylo_core::rules::{reachable_fragment, Elm, Nim};
use hylo_core::values::{
    birthday, grundy, hylo_eval, mex, outcome, remoteness, xem, Builtin, Empty,
};
use hylo_core::{Algebra, Game, Outcome, Value};

fn naive(g: &Game, x: usize, alg: &Builtin) -> Value {
    let mut inputs: Vec<Value> = g.options(x).iter().map(|&o| naive(g, o, alg)).collect();
    inputs.sort();
    inputs.dedup();
    alg.step(&inputs).unwrap()
}

fn leaf_value(alg: &Builtin) -> Value {
    alg.step(&[]).unwrap()
}

#[test]
fn memoized_equals_naive_recursion() {
    let mut r = rng(21);
    for i in 0..100 {
        let n = 1 + i % 12;
        let g = random_game(&mut r, n, 0.3);
        for alg in Builtin::STANDARD {
            let memo = hylo_eval(&g, &alg).unwrap();
            for x in g.states() {
                assert_eq!(memo[x], naive(&g, x, &alg));
            }
        }
    }
}

#[test]
fn values_are_stable_under_morphisms() {
    let mut r = rng(22);
    for _ in 0..50 {
        let y = random_game(&mut r, 5, 0.4);
        let (x, f) = random_cover(&mut r, &y);
        for alg in Builtin::STANDARD {
            let vx = hylo_eval(&x, &alg).unwrap();
            let vy = hylo_eval(&y, &alg).unwrap();
            for s in x.states() {
                assert_eq!(vy[f.apply(s)], vx[s]);
            }
        }
    }
}

#[test]
fn derived_values_agree() {
    let mut r = rng(23);
    for _ in 0..50 {
        let g = random_game(&mut r, 12, 0.3);
        let (gr, out, b, rem) = (grundy(&g), outcome(&g), birthday(&g), remoteness(&g));
        let end = hylo_eval(&g, &Empty).unwrap();
        for x in g.states() {
            assert_eq!(out[x], if gr[x] > 0 { Outcome::N } else { Outcome::P });
            assert_eq!(end[x], b[x] == 0);
            assert_eq!(out[x], rem[x].outcome());
        }
    }
    assert_eq!(leaf_value(&Builtin::Empty), Value::Bool(true));
}

#[test]
fn galois_laws() {
    for mask in 0u32..256 {
        let s: Vec<u64> = (0..8).filter(|&i| mask >> i & 1 == 1).collect();
        for n in 0..=16u64 {
            let below = |x: u64| s.contains(&x);
            assert_eq!(n <= mex(s.iter().copied()), (0..n).all(below));
            assert_eq!(xem(s.iter().copied()) <= n, s.iter().all(|&x| x < n));
        }
    }
}

#[test]
fn section_identities() {
    let heap = reachable_fragment(&Nim, vec![50], 100).unwrap();
    let (g, b) = (grundy(&heap.game), birthday(&heap.game));
    for x in heap.game.states() {
        assert_eq!(g[x], heap.token(x)[0]);
        assert_eq!(b[x], heap.token(x)[0]);
    }
    let elm = reachable_fragment(&Elm, 50, 100).unwrap();
    let rem = remoteness(&elm.game);
    for x in elm.game.states() {
        assert_eq!(rem[x].index(), *elm.token(x));
    }
}
