#![allow(dead_code)]

use hylo_core::{Game, GameMorphism, State};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random acyclic game on `n` states with edge probability `p`, states
/// shuffled so that index order is not a topological order.
pub fn random_game(rng: &mut TestRng, n: usize, p: f64) -> Game {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut options = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..i {
            if rng.gen_bool(p) {
                options[perm[i]].push(perm[j]);
            }
        }
    }
    Game::from_options("random", options).unwrap()
}

/// A random game whose longest play has at most `depth` moves.
pub fn random_layered_game(rng: &mut TestRng, n: usize, depth: usize, p: f64) -> Game {
    let layer: Vec<usize> = (0..n).map(|i| if i == 0 { 0 } else { rng.gen_range(0..=depth) }).collect();
    let mut options = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if layer[j] < layer[i] && rng.gen_bool(p) {
                options[i].push(j);
            }
        }
    }
    Game::from_options("layered", options).unwrap()
}

/// A game `X` with a morphism onto `target`: every state of the target is
/// copied once or twice, and every copy of `y` picks a nonempty set of copies
/// of each option of `y`.
pub fn random_cover(rng: &mut TestRng, target: &Game) -> (Game, GameMorphism) {
    let mut copies: Vec<Vec<State>> = vec![Vec::new(); target.len()];
    let mut options: Vec<Vec<State>> = Vec::new();
    let mut map = Vec::new();
    for &y in target.order() {
        for _ in 0..rng.gen_range(1..=2) {
            let mut opts = Vec::new();
            for &o in target.options(y) {
                let pool = &copies[o];
                let first = rng.gen_range(0..pool.len());
                opts.push(pool[first]);
                for &c in pool {
                    if rng.gen_bool(0.5) {
                        opts.push(c);
                    }
                }
            }
            copies[y].push(options.len());
            options.push(opts);
            map.push(y);
        }
    }
    let source = Game::from_options("cover", options).unwrap();
    let f = GameMorphism::check(map, &source, target).unwrap();
    (source, f)
}

/// All maps `0..n -> 0..m`, as vectors.
pub fn all_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..m).map(move |y| {
                    let mut w = v.clone();
                    w.push(y);
                    w
                })
            })
            .collect();
    }
    out
}

/// All morphisms `X -> Y` by checking every map.
pub fn brute_homs(x: &Game, y: &Game) -> Vec<GameMorphism> {
    all_maps(x.len(), y.len())
        .into_iter()
        .filter_map(|m| GameMorphism::check(m, x, y).ok())
        .collect()
}

/// Small fixed games: stars, chains, nim heaps and a diamond.
pub fn small_suite() -> Vec<Game> {
    let mut out = vec![Game::empty()];
    for n in 0..=4 {
        out.push(Game::star(n));
        out.push(Game::chain(n));
    }
    out.push(Game::from_options("diamond", vec![vec![1, 2], vec![3], vec![3], vec![]]).unwrap());
    out.push(Game::from_options("heap3", vec![vec![], vec![0], vec![0, 1], vec![0, 1, 2]]).unwrap());
    out.push(Game::from_options("forest", vec![vec![1], vec![], vec![3], vec![], vec![]]).unwrap());
    out
}
