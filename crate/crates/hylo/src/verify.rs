//! Property suites runnable from the command line.

use std::time::Instant;

use hylo_core::bouton::{bouton_approximation, syntactic_factorization, FiniteMonoid};
use hylo_core::hfs::characteristic_map;
use hylo_core::rules::{reachable_fragment, Elm, Nim};
use hylo_core::sums::{game_sum, pair_index, rota_baxter_check, SumKind};
use hylo_core::universal::{count_homs, product, quotient_coequalizer, DEFAULT_PRODUCT_BUDGET};
use hylo_core::values::{birthday, grundy, hylo_eval, mex, outcome, remoteness, xem, Builtin};
use hylo_core::{
    AckermannGuard, Algebra, Game, HfsArena, LabeledHfsArena, Outcome, StateSet, Value,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

type Check = fn() -> Result<String, String>;

pub const SUITES: [(&str, Check); 13] = [
    ("bouton-theorem", bouton_theorem),
    ("nim-sum", nim_sum_rule),
    ("bouton", bouton_tables),
    ("ackermann", ackermann),
    ("stirling", stirling),
    ("product", product_s2_s3),
    ("non-topos", non_topos),
    ("galois", galois),
    ("rota-baxter", rota_baxter),
    ("classifier", classifier),
    ("hylo", hylo_vs_naive),
    ("syntactic", syntactic),
    ("sections", sections),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Runs the named suite, or every suite for `all`. `None` for unknown names.
pub fn run(name: &str) -> Option<Vec<SuiteReport>> {
    let selected: Vec<_> = SUITES
        .iter()
        .filter(|(n, _)| name == "all" || *n == name)
        .collect();
    if selected.is_empty() {
        return None;
    }
    Some(
        selected
            .into_iter()
            .map(|(n, check)| {
                let t = Instant::now();
                let result = check();
                let millis = t.elapsed().as_millis();
                let (passed, detail) = match result {
                    Ok(d) => (true, d),
                    Err(d) => (false, d),
                };
                SuiteReport {
                    name: n,
                    passed,
                    detail,
                    millis,
                }
            })
            .collect(),
    )
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bouton_theorem() -> Result<String, String> {
    let frag = reachable_fragment(&Nim, vec![6, 6, 6], 1000).map_err(|e| e.to_string())?;
    let out = outcome(&frag.game);
    for x in frag.game.states() {
        let h = frag.token(x);
        let p = h[0] ^ h[1] ^ h[2] == 0;
        ensure((out[x] == Outcome::P) == p, || format!("position {h:?}"))?;
    }
    Ok(format!("{} positions", frag.game.len()))
}

/// A random game whose longest play has at most `depth` moves.
fn layered_game(rng: &mut ChaCha8Rng, n: usize, depth: usize) -> Game {
    let layer: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=depth)).collect();
    let options = (0..n)
        .map(|i| (0..n).filter(|&j| layer[j] < layer[i] && rng.gen_bool(0.25)).collect())
        .collect();
    Game::from_options("random", options).expect("layers forbid cycles")
}

fn nim_sum_rule() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..200 {
        let x = layered_game(&mut rng, 1 + i % 30, 5);
        let y = layered_game(&mut rng, 30 - i % 30, 5);
        let s = game_sum(SumKind::Conway, &x, &y);
        let (gs, gx, gy) = (grundy(&s), grundy(&x), grundy(&y));
        for a in x.states() {
            for b in y.states() {
                ensure(gs[pair_index(a, b, y.len())] == gx[a] ^ gy[b], || {
                    format!("pair {i}, state ({a},{b})")
                })?;
            }
        }
    }
    Ok("200 pairs".into())
}

fn bouton_tables() -> Result<String, String> {
    let err = |e: hylo_core::BoutonError| e.to_string();
    let mut c = bouton_approximation(SumKind::Conway, Builtin::Np, 3, 3).map_err(err)?;
    ensure(c.stable && c.class_count() == 4, || "conway: not 4 stable classes".into())?;
    for m in 0..4 {
        let z = c.arena_mut().von_neumann(m);
        ensure(c.classify(z).map_err(err)? == m, || format!("conway: class of vn({m})"))?;
        for n in 0..4 {
            ensure(c.table[m][n] == m ^ n, || "conway: table is not xor".into())?;
        }
    }
    let s = bouton_approximation(SumKind::Selective, Builtin::Np, 3, 3).map_err(err)?;
    ensure(s.stable && s.table == [[0, 1], [1, 1]], || "selective: table".into())?;
    let j = bouton_approximation(SumKind::Conjunctive, Builtin::Np, 3, 3).map_err(err)?;
    let mins = (0..4).all(|a| (0..4).all(|b| j.table[a][b] == a.min(b)));
    ensure(j.stable && j.class_count() == 4 && mins, || "conjunctive: table".into())?;
    Ok("conway 4, selective 2, conjunctive 4 classes".into())
}

fn ackermann() -> Result<String, String> {
    let mut arena = HfsArena::new();
    let guard = AckermannGuard::default();
    for n in 0u64..1 << 16 {
        let z = arena.ackermann_decode_u64(n);
        let code = arena.ackermann_encode(z, guard).map_err(|e| e.to_string())?;
        ensure(code == BigUint::from(n), || format!("round trip of {n}"))?;
    }
    let z = arena.ackermann_decode_u64(10000);
    let mut kids: Vec<BigUint> = arena
        .children(z)
        .iter()
        .map(|&c| arena.ackermann_encode(c, guard).unwrap())
        .collect();
    kids.sort();
    let expected: Vec<BigUint> = [4u32, 8, 9, 10, 13].map(BigUint::from).to_vec();
    ensure(kids == expected, || "children of 10000".into())?;
    Ok("65536 codes".into())
}

fn stirling() -> Result<String, String> {
    let mut s = [[0u64; 5]; 7];
    s[0][0] = 1;
    for n in 1..=6 {
        for k in 1..=4 {
            s[n][k] = k as u64 * s[n - 1][k] + s[n - 1][k - 1];
        }
    }
    for n in 1..=6 {
        for k in 0..=4 {
            let homs = count_homs(&Game::star(n), &Game::star(k), 100_000).map_err(|e| e.to_string())?;
            let fact: u64 = (1..=k as u64).product();
            ensure(homs as u64 == fact * s[n][k], || format!("n={n} k={k}: {homs}"))?;
        }
    }
    Ok("n ≤ 6, k ≤ 4".into())
}

fn product_s2_s3() -> Result<String, String> {
    let (x, y) = (Game::star(2), Game::star(3));
    let p = product(&x, &y, DEFAULT_PRODUCT_BUDGET).map_err(|e| e.to_string())?;
    let profile: Vec<usize> = p.option_profile().into_values().collect();
    ensure(p.game.len() == 31 && profile == [6, 6, 12, 6, 1], || format!("profile {profile:?}"))?;
    let mut probes = vec![Game::star(1), Game::star(2), Game::star(3)];
    probes.extend((0..=4).map(Game::chain));
    for w in &probes {
        let c = |t: &Game| count_homs(w, t, 100_000).map_err(|e| e.to_string());
        ensure(c(&p.game)? == c(&x)? * c(&y)?, || format!("hom count from {}", w.name()))?;
    }
    Ok("31 states, 6/6/12/6/1".into())
}

fn non_topos() -> Result<String, String> {
    let s2 = Game::star(2);
    let p = product(&s2, &s2, DEFAULT_PRODUCT_BUDGET).map_err(|e| e.to_string())?;
    let sigma = [0, 2, 1];
    let mut image = vec![0; p.game.len()];
    for &z in p.game.order() {
        let kids: Vec<usize> = p.game.options(z).iter().map(|&c| image[c]).collect();
        let (a, b) = p.labels[z];
        image[z] = p.node(&kids, a, sigma[b]).ok_or("swap leaves the product")?;
    }
    let pairs: Vec<_> = (0..p.game.len()).map(|z| (z, image[z])).collect();
    let q = quotient_coequalizer(&p.game, &pairs).map_err(|e| e.to_string())?;
    let s1 = quotient_coequalizer(&s2, &[(1, 2)]).map_err(|e| e.to_string())?.quotient;
    let p21 = product(&s2, &s1, DEFAULT_PRODUCT_BUDGET).map_err(|e| e.to_string())?;
    ensure(q.class_count() == 6 && p21.game.len() == 3, || {
        format!("{} vs {}", q.class_count(), p21.game.len())
    })?;
    Ok("6 vs 3".into())
}

fn galois() -> Result<String, String> {
    for mask in 0u32..256 {
        let s: Vec<u64> = (0..8).filter(|&i| mask >> i & 1 == 1).collect();
        for n in 0..=16u64 {
            ensure((n <= mex(s.iter().copied())) == (0..n).all(|i| s.contains(&i)), || {
                format!("mex, n={n}, S={s:?}")
            })?;
            ensure((xem(s.iter().copied()) <= n) == s.iter().all(|&i| i < n), || {
                format!("xem, n={n}, S={s:?}")
            })?;
        }
    }
    Ok("n ≤ 16, S ⊆ {0..7}".into())
}

fn rota_baxter() -> Result<String, String> {
    let sets: Vec<Vec<u64>> = (0u32..128)
        .map(|m| (0..7).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    for s in &sets {
        for t in &sets {
            ensure(rota_baxter_check(s, t), || format!("S={s:?} T={t:?}"))?;
        }
    }
    Ok("16384 pairs".into())
}

fn classifier() -> Result<String, String> {
    let mut suite = vec![Game::empty()];
    for n in 0..=5 {
        suite.push(Game::star(n));
        suite.push(Game::chain(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..10 {
        suite.push(layered_game(&mut rng, 6, 3));
    }
    let mut omega = LabeledHfsArena::truth_values();
    for g in &suite {
        for mask in 0u64..1 << g.len() {
            let s = StateSet::from_mask(g.len(), mask);
            let chi = characteristic_map(&mut omega, g, &s);
            let closed = chi.iter().all(|&c| omega.is_truth_closed(c));
            ensure(closed == g.is_subgame(&s), || format!("{} mask {mask:b}", g.name()))?;
        }
    }
    Ok(format!("{} games", suite.len()))
}

fn naive(g: &Game, x: usize, alg: &Builtin) -> Result<Value, String> {
    let mut inputs = g
        .options(x)
        .iter()
        .map(|&o| naive(g, o, alg))
        .collect::<Result<Vec<_>, _>>()?;
    inputs.sort();
    inputs.dedup();
    alg.step(&inputs).map_err(|e| e.to_string())
}

fn hylo_vs_naive() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for i in 0..100 {
        let g = layered_game(&mut rng, 1 + i % 12, 6);
        for alg in Builtin::STANDARD {
            let memo = hylo_eval(&g, &alg).map_err(|e| e.to_string())?;
            for x in g.states() {
                ensure(memo[x] == naive(&g, x, &alg)?, || format!("game {i}, {}", alg.name()))?;
            }
        }
    }
    Ok("100 games, 6 algebras".into())
}

fn syntactic() -> Result<String, String> {
    let f = syntactic_factorization(&FiniteMonoid::cyclic(4), &[0, 1, 0, 1]).map_err(|e| e.to_string())?;
    ensure(f.quotient == FiniteMonoid::cyclic(2), || "ℤ/4 parity".into())?;
    let f = syntactic_factorization(&FiniteMonoid::cyclic(4), &[1, 0, 0, 0]).map_err(|e| e.to_string())?;
    ensure(f.classes.len() == 4, || "ℤ/4 zero test".into())?;
    Ok("ℤ/4 examples".into())
}

fn sections() -> Result<String, String> {
    let heap = reachable_fragment(&Nim, vec![50], 100).map_err(|e| e.to_string())?;
    let (g, b) = (grundy(&heap.game), birthday(&heap.game));
    for x in heap.game.states() {
        let n = heap.token(x)[0];
        ensure(g[x] == n && b[x] == n, || format!("heap {n}"))?;
    }
    let elm = reachable_fragment(&Elm, 50, 100).map_err(|e| e.to_string())?;
    let r = remoteness(&elm.game);
    for x in elm.game.states() {
        ensure(r[x].index() == *elm.token(x), || format!("elm {}", elm.token(x)))?;
    }
    Ok("heaps and elm ≤ 50".into())
}
