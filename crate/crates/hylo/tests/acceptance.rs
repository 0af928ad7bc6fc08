//! Acceptance criteria, one line each. Every check compares the library
//! against an oracle written here from first principles.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hylo_core::bouton::{bouton_approximation, syntactic_factorization, FiniteMonoid};
use hylo_core::hfs::characteristic_map;
use hylo_core::rules::{reachable_fragment, Elm, Nim};
use hylo_core::sums::{game_sum, pair_index, rota_baxter_sides, SumKind};
use hylo_core::universal::{count_homs, product, quotient_coequalizer, DEFAULT_PRODUCT_BUDGET};
use hylo_core::values::{birthday, grundy, hylo_eval, mex, outcome, remoteness, xem, Builtin};
use hylo_core::{
    AckermannGuard, Game, HfsArena, HfsId, LabeledHfsArena, Outcome, Remoteness, StateSet, Value,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;

struct Criterion {
    title: &'static str,
    limit: Option<Duration>,
    check: fn() -> Verdict,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn show<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

// ---------------------------------------------------------------- oracles

fn naive_mex(set: &BTreeSet<u64>) -> u64 {
    (0..).find(|n| !set.contains(n)).unwrap()
}

/// Grundy values by memoized recursion over the option lists.
fn oracle_grundy(g: &Game) -> Vec<u64> {
    fn go(g: &Game, x: usize, memo: &mut Vec<Option<u64>>) -> u64 {
        if let Some(v) = memo[x] {
            return v;
        }
        let opts: BTreeSet<u64> = g.options(x).iter().map(|&o| go(g, o, memo)).collect();
        let v = naive_mex(&opts);
        memo[x] = Some(v);
        v
    }
    let mut memo = vec![None; g.len()];
    (0..g.len()).map(|x| go(g, x, &mut memo)).collect()
}

/// Longest play from each state.
fn oracle_birthday(g: &Game) -> Vec<u64> {
    fn go(g: &Game, x: usize) -> u64 {
        g.options(x).iter().map(|&o| 1 + go(g, o)).max().unwrap_or(0)
    }
    (0..g.len()).map(|x| go(g, x)).collect()
}

/// Steinhaus remoteness from the list of option remotenesses.
fn remoteness_rule(opts: &[u64]) -> u64 {
    if opts.is_empty() {
        0
    } else if let Some(m) = opts.iter().filter(|r| *r % 2 == 0).min() {
        m + 1
    } else {
        opts.iter().max().unwrap() + 1
    }
}

fn layered_game(rng: &mut ChaCha8Rng, n: usize, depth: usize) -> Game {
    let layer: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=depth)).collect();
    let options = (0..n)
        .map(|i| (0..n).filter(|&j| layer[j] < layer[i] && rng.gen_bool(0.3)).collect())
        .collect();
    Game::from_options("random", options).expect("layers forbid cycles")
}

/// Morphisms by exhausting every map and checking both conditions directly.
fn brute_homs(x: &Game, y: &Game) -> usize {
    let (n, m) = (x.len(), y.len());
    if n == 0 {
        return 1;
    }
    if m == 0 {
        return 0;
    }
    let mut map = vec![0usize; n];
    let mut count = 0;
    loop {
        let ok = (0..n).all(|s| {
            let graph = x.options(s).iter().all(|&o| y.has_move(map[s], map[o]));
            let lifts = y
                .options(map[s])
                .iter()
                .all(|&t| x.options(s).iter().any(|&o| map[o] == t));
            graph && lifts
        });
        count += usize::from(ok);
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            map[i] += 1;
            if map[i] < m {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

// ---------------------------------------------------------------- criteria

fn c01_bouton_theorem() -> Verdict {
    // Outcome of (a, b, c) by direct recursion on heap triples.
    let mut memo: HashMap<[u64; 3], bool> = HashMap::new();
    fn p_position(h: [u64; 3], memo: &mut HashMap<[u64; 3], bool>) -> bool {
        if let Some(&v) = memo.get(&h) {
            return v;
        }
        let mut p = true;
        for i in 0..3 {
            for smaller in 0..h[i] {
                let mut next = h;
                next[i] = smaller;
                if p_position(next, memo) {
                    p = false;
                }
            }
        }
        memo.insert(h, p);
        p
    }
    let frag = reachable_fragment(&Nim, vec![6, 6, 6], 1000).map_err(show)?;
    ensure(frag.game.len() == 343, || format!("{} positions", frag.game.len()))?;
    let out = outcome(&frag.game);
    for x in frag.game.states() {
        let h = frag.token(x);
        let xor_zero = h[0] ^ h[1] ^ h[2] == 0;
        let oracle = p_position([h[0], h[1], h[2]], &mut memo);
        ensure(oracle == xor_zero && (out[x] == Outcome::P) == xor_zero, || format!("{h:?}"))?;
    }
    Ok("343 positions".into())
}

fn c02_nim_sum() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB0);
    for i in 0..200 {
        let (nx, ny) = (rng.gen_range(1..=30), rng.gen_range(1..=30));
        let x = layered_game(&mut rng, nx, 5);
        let y = layered_game(&mut rng, ny, 5);
        for g in [&x, &y] {
            ensure(oracle_birthday(g).iter().all(|&b| b <= 5), || "birthday above 5".into())?;
        }
        let (gx, gy) = (oracle_grundy(&x), oracle_grundy(&y));
        let s = game_sum(SumKind::Conway, &x, &y);
        let gs = grundy(&s);
        // Grundy of the pair game, computed without the sum construction.
        let mut pair = vec![vec![0u64; y.len()]; x.len()];
        for &a in x.order() {
            for &b in y.order() {
                let opts: BTreeSet<u64> = x
                    .options(a)
                    .iter()
                    .map(|&a2| pair[a2][b])
                    .chain(y.options(b).iter().map(|&b2| pair[a][b2]))
                    .collect();
                pair[a][b] = naive_mex(&opts);
            }
        }
        for a in x.states() {
            for b in y.states() {
                let lib = gs[pair_index(a, b, y.len())];
                ensure(lib == gx[a] ^ gy[b] && pair[a][b] == lib, || {
                    format!("pair {i}, state ({a},{b})")
                })?;
            }
        }
    }
    Ok("200 pairs".into())
}

fn arena_grundy(arena: &HfsArena, z: HfsId, memo: &mut HashMap<HfsId, u64>) -> u64 {
    if let Some(&v) = memo.get(&z) {
        return v;
    }
    let opts: BTreeSet<u64> = arena.children(z).iter().map(|&c| arena_grundy(arena, c, memo)).collect();
    let v = naive_mex(&opts);
    memo.insert(z, v);
    v
}

fn arena_remoteness(arena: &HfsArena, z: HfsId, memo: &mut HashMap<HfsId, u64>) -> u64 {
    if let Some(&v) = memo.get(&z) {
        return v;
    }
    let opts: Vec<u64> = arena.children(z).iter().map(|&c| arena_remoteness(arena, c, memo)).collect();
    let v = remoteness_rule(&opts);
    memo.insert(z, v);
    v
}

fn c03_bouton_conway() -> Verdict {
    let mut b = bouton_approximation(SumKind::Conway, Builtin::Np, 3, 3).map_err(show)?;
    ensure(b.stable, || "not stable".into())?;
    ensure(b.class_count() == 4, || format!("{} classes", b.class_count()))?;
    for m in 0..4 {
        let z = b.arena_mut().von_neumann(m);
        let c = b.classify(z).map_err(show)?;
        ensure(c == m, || format!("vn({m}) in class {c}"))?;
    }
    let mut memo = HashMap::new();
    for (c, members) in b.classes.iter().enumerate() {
        for &z in members {
            ensure(arena_grundy(b.arena(), z, &mut memo) == c as u64, || format!("class {c}"))?;
        }
    }
    for i in 0..4 {
        for j in 0..4 {
            ensure(b.table[i][j] == i ^ j, || format!("table[{i}][{j}]"))?;
        }
    }
    for (c, v) in b.a.iter().enumerate() {
        ensure((*v == Value::Outcome(Outcome::P)) == (c == 0), || format!("a({c}) = {v}"))?;
    }
    Ok("4 classes, xor table".into())
}

fn c04_bouton_selective() -> Verdict {
    let b = bouton_approximation(SumKind::Selective, Builtin::Np, 3, 3).map_err(show)?;
    ensure(b.stable, || "not stable".into())?;
    ensure(b.class_count() == 2, || format!("{} classes", b.class_count()))?;
    let outcome_of = |c: usize| b.a[c].as_outcome().expect("outcome values");
    ensure(outcome_of(0) != outcome_of(1), || "both classes share a value".into())?;
    for i in 0..2 {
        for j in 0..2 {
            // N < P: the sum is P only when both parts are.
            let want = outcome_of(i).min(outcome_of(j));
            ensure(outcome_of(b.table[i][j]) == want, || format!("table[{i}][{j}]"))?;
        }
    }
    Ok("2 classes, min under N<P".into())
}

fn c05_bouton_conjunctive() -> Verdict {
    let b = bouton_approximation(SumKind::Conjunctive, Builtin::Np, 3, 3).map_err(show)?;
    ensure(b.stable, || "not stable".into())?;
    ensure(b.class_count() == 4, || format!("{} classes", b.class_count()))?;
    let mut memo = HashMap::new();
    let mut index = Vec::new();
    for (c, members) in b.classes.iter().enumerate() {
        let rs: BTreeSet<u64> = members.iter().map(|&z| arena_remoteness(b.arena(), z, &mut memo)).collect();
        ensure(rs.len() == 1, || format!("class {c} mixes remoteness {rs:?}"))?;
        index.push(*rs.first().unwrap());
    }
    ensure(index == [0, 1, 2, 3], || format!("classes ordered by remoteness {index:?}"))?;
    for (c, v) in b.a.iter().enumerate() {
        ensure(v.as_outcome() == Some(Remoteness(c as u64).outcome()), || format!("a({c})"))?;
    }
    for i in 0..4 {
        for j in 0..4 {
            ensure(b.table[i][j] == i.min(j), || format!("table[{i}][{j}]"))?;
        }
    }
    Ok("P0 < N1 < P2 < N3, min table".into())
}

fn c06_ackermann() -> Verdict {
    let mut arena = HfsArena::new();
    let guard = AckermannGuard::default();
    // Codes below 2^16 have members below 16, so u64 arithmetic suffices.
    fn oracle_code(arena: &HfsArena, z: HfsId) -> u64 {
        arena.children(z).iter().map(|&c| 1u64 << oracle_code(arena, c)).sum()
    }
    for n in 0u64..1 << 16 {
        let z = arena.ackermann_decode_u64(n);
        let code = arena.ackermann_encode(z, guard).map_err(show)?;
        ensure(code == BigUint::from(n) && oracle_code(&arena, z) == n, || format!("code {n}"))?;
    }
    let z = arena.ackermann_decode(&BigUint::from(10000u32));
    let kids: BTreeSet<u64> = arena.children(z).iter().map(|&c| oracle_code(&arena, c)).collect();
    ensure(kids == BTreeSet::from([4, 8, 9, 10, 13]), || format!("children of 10000: {kids:?}"))?;
    Ok("65536 round trips".into())
}

fn c07_stirling() -> Verdict {
    let mut s = [[0u64; 5]; 7];
    s[0][0] = 1;
    for n in 1..=6 {
        for k in 1..=4 {
            s[n][k] = k as u64 * s[n - 1][k] + s[n - 1][k - 1];
        }
    }
    for n in 1..=6 {
        for k in 0..=4 {
            let homs = count_homs(&Game::star(n), &Game::star(k), 100_000).map_err(show)?;
            let fact: u64 = (1..=k as u64).product();
            ensure(homs as u64 == fact * s[n][k], || format!("n={n} k={k}: {homs}"))?;
            if n <= 4 {
                ensure(homs == brute_homs(&Game::star(n), &Game::star(k)), || {
                    format!("brute force n={n} k={k}")
                })?;
            }
        }
    }
    // The one-state game maps onto any terminal state, so n = 0 differs.
    for k in 0..=4 {
        let homs = count_homs(&Game::star(0), &Game::star(k), 100).map_err(show)?;
        ensure(homs == k.max(1), || format!("n=0 k={k}: {homs}"))?;
    }
    Ok("1 ≤ n ≤ 6, k ≤ 4; n = 0 counted separately".into())
}

fn c08_product() -> Verdict {
    let (x, y) = (Game::star(2), Game::star(3));
    let p = product(&x, &y, DEFAULT_PRODUCT_BUDGET).map_err(show)?;
    ensure(p.game.len() == 31, || format!("{} states", p.game.len()))?;
    let mut profile: BTreeMap<usize, usize> = BTreeMap::new();
    for z in p.game.states() {
        *profile.entry(p.game.options(z).len()).or_default() += 1;
    }
    let widths: Vec<usize> = [6, 5, 4, 3].iter().map(|k| profile.get(k).copied().unwrap_or(0)).collect();
    ensure(widths == [1, 6, 12, 6] && profile.get(&0) == Some(&6), || format!("{profile:?}"))?;
    let mut probes = vec![Game::star(1), Game::star(2), Game::star(3)];
    probes.extend((0..=4).map(Game::chain));
    for w in &probes {
        let into_p = count_homs(w, &p.game, 100_000).map_err(show)?;
        ensure(into_p == brute_homs(w, &x) * brute_homs(w, &y), || format!("from {}", w.name()))?;
    }
    Ok("31 states, widths 1/6/12/6".into())
}

fn c09_non_topos() -> Verdict {
    let s2 = Game::star(2);
    let p = product(&s2, &s2, DEFAULT_PRODUCT_BUDGET).map_err(show)?;
    // Swap the two leaves of the second factor.
    let sigma = [0, 2, 1];
    let mut swap = vec![0; p.game.len()];
    for &z in p.game.order() {
        let kids: Vec<usize> = p.game.options(z).iter().map(|&c| swap[c]).collect();
        let (a, b) = p.labels[z];
        swap[z] = p.node(&kids, a, sigma[b]).ok_or("swap leaves the product")?;
    }
    let pairs: Vec<_> = (0..p.game.len()).map(|z| (z, swap[z])).collect();
    let q = quotient_coequalizer(&p.game, &pairs).map_err(show)?;
    let fold = quotient_coequalizer(&s2, &[(1, 2)]).map_err(show)?;
    let s1 = &fold.quotient;
    ensure(s1.len() == 2 && s1.edge_count() == 1, || "S2 / swap is not S1".into())?;
    let p21 = product(&s2, s1, DEFAULT_PRODUCT_BUDGET).map_err(show)?;
    ensure(q.class_count() == 6, || format!("quotient has {} states", q.class_count()))?;
    ensure(p21.game.len() == 3, || format!("S2×S1 has {} states", p21.game.len()))?;
    // The comparison map induced by id × (S2 -> S1).
    let to_s1 = fold.projection(&s2).map_err(show)?;
    let phi = p21.pairing(&p.game, &p.left, &p.right.then(&to_s1)).map_err(show)?;
    let mut induced: BTreeMap<usize, usize> = BTreeMap::new();
    for z in p.game.states() {
        let prev = induced.insert(q.class_map[z], phi.apply(z));
        ensure(prev.is_none_or(|v| v == phi.apply(z)), || "comparison not constant on classes".into())?;
    }
    let image: BTreeSet<usize> = induced.values().copied().collect();
    ensure(image.len() == 3 && induced.len() == 6, || "comparison shape".into())?;
    Ok("6 states vs 3, comparison onto but not injective".into())
}

fn c10_galois() -> Verdict {
    for mask in 0u32..256 {
        let s: Vec<u64> = (0..8).filter(|&i| mask >> i & 1 == 1).collect();
        let set: BTreeSet<u64> = s.iter().copied().collect();
        let m = mex(s.iter().copied());
        let x = xem(s.iter().copied());
        ensure(m == naive_mex(&set), || format!("mex {s:?}"))?;
        ensure(x == set.last().map_or(0, |v| v + 1), || format!("xem {s:?}"))?;
        for n in 0..=16u64 {
            ensure((n <= m) == (0..n).all(|i| set.contains(&i)), || format!("mex, n={n}, {s:?}"))?;
            ensure((x <= n) == set.iter().all(|&i| i < n), || format!("xem, n={n}, {s:?}"))?;
        }
    }
    Ok("n ≤ 16, S ⊆ {0..7}".into())
}

fn c11_rota_baxter() -> Verdict {
    let sets: Vec<BTreeSet<u64>> = (0u32..128)
        .map(|m| (0..7).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    for s in &sets {
        for t in &sets {
            let (ms, mt) = (naive_mex(s), naive_mex(t));
            let mixed: BTreeSet<u64> = s.iter().map(|&v| v ^ mt).chain(t.iter().map(|&v| v ^ ms)).collect();
            let sv: Vec<u64> = s.iter().copied().collect();
            let tv: Vec<u64> = t.iter().copied().collect();
            let (lhs, rhs) = rota_baxter_sides(&sv, &tv);
            ensure(lhs == ms ^ mt && rhs == naive_mex(&mixed) && lhs == rhs, || {
                format!("S={s:?} T={t:?}")
            })?;
        }
    }
    Ok("16384 pairs".into())
}

fn c12_classifier() -> Verdict {
    let mut suite = vec![Game::empty()];
    for n in 0..=5 {
        suite.push(Game::star(n));
        suite.push(Game::chain(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xC1);
    for _ in 0..20 {
        suite.push(layered_game(&mut rng, 6, 3));
    }
    let mut omega = LabeledHfsArena::truth_values();
    let mut subsets = 0;
    for g in &suite {
        for mask in 0u64..1 << g.len() {
            let s = StateSet::from_mask(g.len(), mask);
            let closed = (0..g.len())
                .filter(|&x| mask >> x & 1 == 1)
                .all(|x| g.options(x).iter().all(|&o| mask >> o & 1 == 1));
            let chi = characteristic_map(&mut omega, g, &s);
            let truth_closed = chi.iter().all(|&c| omega.is_truth_closed(c));
            ensure(closed == truth_closed && closed == g.is_subgame(&s), || {
                format!("{} mask {mask:b}", g.name())
            })?;
            subsets += 1;
        }
    }
    Ok(format!("{} games, {subsets} subsets", suite.len()))
}

/// Each built-in value by plain recursion, from its game-theoretic meaning.
fn oracle_value(g: &Game, x: usize, alg: Builtin) -> Value {
    let opts: Vec<Value> = g.options(x).iter().map(|&o| oracle_value(g, o, alg)).collect();
    let outcomes = || opts.iter().map(|v| v.as_outcome().unwrap());
    let nats = || {
        opts.iter().map(|v| match v {
            Value::Nat(n) => *n,
            _ => unreachable!(),
        })
    };
    match alg {
        Builtin::Mex => Value::Nat(naive_mex(&nats().collect())),
        Builtin::Xem => Value::Nat(nats().map(|n| n + 1).max().unwrap_or(0)),
        Builtin::Empty => Value::Bool(opts.is_empty()),
        Builtin::Np => Value::Outcome(if outcomes().any(|o| o == Outcome::P) {
            Outcome::N
        } else {
            Outcome::P
        }),
        // Misère: the player unable to move wins.
        Builtin::Mnp => Value::Outcome(if !opts.is_empty() && outcomes().all(|o| o == Outcome::N) {
            Outcome::P
        } else {
            Outcome::N
        }),
        Builtin::Remoteness => {
            let rs: Vec<u64> = opts
                .iter()
                .map(|v| match v {
                    Value::Remoteness(r) => r.index(),
                    _ => unreachable!(),
                })
                .collect();
            Value::Remoteness(Remoteness(remoteness_rule(&rs)))
        }
        Builtin::Bin(_) => unreachable!("not a standard value"),
    }
}

fn c13_hylo() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC13);
    for i in 0..100 {
        let n = rng.gen_range(1..=12);
        let g = layered_game(&mut rng, n, 6);
        for alg in Builtin::STANDARD {
            let memo = hylo_eval(&g, &alg).map_err(show)?;
            for x in g.states() {
                ensure(memo[x] == oracle_value(&g, x, alg), || format!("game {i}, {alg:?}, state {x}"))?;
            }
        }
    }
    Ok("100 games, 6 algebras".into())
}

/// A random transformation monoid on four points with at most eight elements.
fn random_monoid(rng: &mut ChaCha8Rng) -> Vec<[u8; 4]> {
    loop {
        let id = [0u8, 1, 2, 3];
        let gens: Vec<[u8; 4]> = (0..rng.gen_range(1..=2))
            .map(|_| std::array::from_fn(|_| rng.gen_range(0..4)))
            .collect();
        let mut elems = vec![id];
        let mut i = 0;
        while i < elems.len() && elems.len() <= 8 {
            for g in &gens {
                let next: [u8; 4] = std::array::from_fn(|p| g[elems[i][p] as usize]);
                if !elems.contains(&next) {
                    elems.push(next);
                }
            }
            i += 1;
        }
        if elems.len() <= 8 {
            return elems;
        }
    }
}

fn c14_syntactic() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC14);
    for i in 0..50 {
        let elems = random_monoid(&mut rng);
        let n = elems.len();
        let index = |t: [u8; 4]| elems.iter().position(|&e| e == t).unwrap();
        // a * b applies a first, then b.
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| index(std::array::from_fn(|p| elems[b][elems[a][p] as usize]))).collect())
            .collect();
        let m = FiniteMonoid::new(rows.clone(), Some(0)).map_err(show)?;
        let f: Vec<u8> = (0..n).map(|_| rng.gen_range(0..3)).collect();
        let fact = syntactic_factorization(&m, &f).map_err(show)?;
        for x in 0..n {
            for y in 0..n {
                let brute = (0..n).all(|a| (0..n).all(|b| f[rows[rows[a][x]][b]] == f[rows[rows[a][y]][b]]));
                ensure(brute == (fact.q[x] == fact.q[y]), || format!("monoid {i}: {x} ~ {y}"))?;
            }
        }
    }
    let z4 = syntactic_factorization(&FiniteMonoid::cyclic(4), &[0, 1, 0, 1]).map_err(show)?;
    let z2 = [[0, 1], [1, 0]];
    let table_ok = (0..2).all(|a| (0..2).all(|b| z4.quotient.mul(a, b) == z2[a][b]));
    ensure(z4.classes.len() == 2 && table_ok, || "ℤ/4 parity".into())?;
    Ok("50 monoids; ℤ/4 parity gives ℤ/2".into())
}

fn c15_sections() -> Verdict {
    let heap = reachable_fragment(&Nim, vec![50], 100).map_err(show)?;
    let (g, b) = (grundy(&heap.game), birthday(&heap.game));
    for x in heap.game.states() {
        let n = heap.token(x)[0];
        ensure(g[x] == n && b[x] == n, || format!("heap {n}"))?;
    }
    let elm = reachable_fragment(&Elm, 50, 100).map_err(show)?;
    let r = remoteness(&elm.game);
    for x in elm.game.states() {
        ensure(r[x].index() == *elm.token(x), || format!("elm {}", elm.token(x)))?;
    }
    Ok("heaps and elm up to 50".into())
}

const CRITERIA: [Criterion; 15] = [
    Criterion { title: "3-heap nim P-positions are exactly xor 0", limit: Some(Duration::from_secs(1)), check: c01_bouton_theorem },
    Criterion { title: "grundy of a Conway sum is the xor", limit: Some(Duration::from_secs(10)), check: c02_nim_sum },
    Criterion { title: "Bouton table, conway sum, outcome", limit: Some(Duration::from_secs(5)), check: c03_bouton_conway },
    Criterion { title: "Bouton table, selective sum, outcome", limit: None, check: c04_bouton_selective },
    Criterion { title: "Bouton table, conjunctive sum, outcome", limit: None, check: c05_bouton_conjunctive },
    Criterion { title: "Ackermann coding is a bijection", limit: Some(Duration::from_secs(5)), check: c06_ackermann },
    Criterion { title: "star hom counts are surjection counts", limit: Some(Duration::from_secs(10)), check: c07_stirling },
    Criterion { title: "product of stars and its universal property", limit: None, check: c08_product },
    Criterion { title: "quotient of a product is not the product of quotients", limit: None, check: c09_non_topos },
    Criterion { title: "Galois laws of mex and xem", limit: None, check: c10_galois },
    Criterion { title: "Rota-Baxter identity for mex", limit: Some(Duration::from_secs(5)), check: c11_rota_baxter },
    Criterion { title: "subgames are the truth-closed characteristic maps", limit: None, check: c12_classifier },
    Criterion { title: "memoized evaluation equals plain recursion", limit: None, check: c13_hylo },
    Criterion { title: "syntactic congruence by refinement", limit: None, check: c14_syntactic },
    Criterion { title: "grundy, birthday and remoteness sections", limit: None, check: c15_sections },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for (i, c) in CRITERIA.iter().enumerate() {
        let t = Instant::now();
        let result = (c.check)();
        let elapsed = t.elapsed();
        let verdict = match (result, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:?}, limit {limit:?}")),
            (r, _) => r,
        };
        let ms = elapsed.as_millis();
        match verdict {
            Ok(detail) => println!("PASS criterion {}: {} ({detail}; {ms} ms)", i + 1, c.title),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {} ({why}; {ms} ms)", i + 1, c.title);
            }
        }
    }
    println!("{} of {} criteria pass", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
