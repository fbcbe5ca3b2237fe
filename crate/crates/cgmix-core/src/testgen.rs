//! Deterministic random-instance generators for the test suites.
//!
//! Everything here is seeded; two runs with the same seed produce identical
//! instances. The generators deliberately favor small value universes so
//! that cost ties (and therefore tie-breaking code paths) occur often.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::game::{CostFunction, Game, MatroidSpace, Player, Resource, StrategySpace};
use crate::matroid::{Matroid, MatroidKind};
use crate::{rat, Rational};

/// The RNG used by all generators.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random preference value in `[0, 1]` with a small denominator.
pub fn random_alpha(rng: &mut ChaCha8Rng) -> Rational {
    let denom = rng.gen_range(1..=4i128);
    let numer = rng.gen_range(0..=denom);
    rat(numer, denom)
}

/// Non-negative rational weights with small numerators and denominators.
pub fn random_weights(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len)
        .map(|_| rat(rng.gen_range(0..=20), rng.gen_range(1..=4)))
        .collect()
}

/// A random uniform, partition, or graphic matroid with `1..=max_ground`
/// elements and rank at least 1.
pub fn random_matroid(rng: &mut ChaCha8Rng, max_ground: usize) -> Matroid {
    let ground = rng.gen_range(1..=max_ground.max(1));
    match rng.gen_range(0..3) {
        0 => {
            let rank = rng.gen_range(1..=ground);
            Matroid::new(ground, MatroidKind::Uniform { rank }).unwrap()
        }
        1 => {
            // Random partition with at least one usable block.
            let mut blocks: Vec<Vec<usize>> = Vec::new();
            let mut current: Vec<usize> = Vec::new();
            for e in 0..ground {
                current.push(e);
                if rng.gen_bool(0.5) {
                    blocks.push(core::mem::take(&mut current));
                }
            }
            if !current.is_empty() {
                blocks.push(current);
            }
            let mut ranks: Vec<usize> = blocks
                .iter()
                .map(|b| rng.gen_range(0..=b.len()))
                .collect();
            if ranks.iter().all(|&r| r == 0) {
                ranks[0] = 1;
            }
            Matroid::new(ground, MatroidKind::Partition { blocks, ranks }).unwrap()
        }
        _ => {
            // Connected multigraph: a random tree plus extra edges.
            let vertices = rng.gen_range(2..=(ground + 1).min(5));
            let mut edges: Vec<(usize, usize)> = Vec::with_capacity(ground);
            for v in 1..vertices {
                edges.push((rng.gen_range(0..v), v));
            }
            while edges.len() < ground {
                let u = rng.gen_range(0..vertices);
                let v = rng.gen_range(0..vertices);
                if u != v {
                    edges.push((u.min(v), u.max(v)));
                }
            }
            Matroid::new(ground, MatroidKind::Graphic { vertices, edges }).unwrap()
        }
    }
}

/// How preference values are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaMode {
    /// Independent random values.
    Free,
    /// One shared random value.
    Uniform,
    /// Each player 0 or 1.
    Pure,
}

/// How bottleneck curves relate to latency curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CostMode {
    /// Independent random non-decreasing tables.
    Free,
    /// `bottleneck = latency` on every resource.
    Equal,
    /// `bottleneck = f(latency)` for one random non-decreasing map `f`.
    MonotoneDependence,
}

fn random_monotone_values(rng: &mut ChaCha8Rng, n: usize, max_start: i128) -> Vec<i128> {
    let mut v = rng.gen_range(0..=max_start);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push(v);
        v += rng.gen_range(0..=3);
    }
    out
}

fn resources_for(rng: &mut ChaCha8Rng, m: usize, n: usize, costs: CostMode) -> Vec<Resource> {
    // Latency values come from a small integer universe so that distinct
    // resources often share values.
    let latency_tables: Vec<Vec<i128>> =
        (0..m).map(|_| random_monotone_values(rng, n, 4)).collect();
    // One non-decreasing map over the whole latency universe, for the
    // monotone-dependence mode.
    let max_latency = latency_tables
        .iter()
        .flatten()
        .copied()
        .max()
        .unwrap_or(0);
    let f = random_monotone_values(rng, max_latency as usize + 1, 3);
    (0..m)
        .map(|r| {
            let lat = &latency_tables[r];
            let bot: Vec<i128> = match costs {
                CostMode::Free => random_monotone_values(rng, n, 4),
                CostMode::Equal => lat.clone(),
                CostMode::MonotoneDependence => {
                    lat.iter().map(|&v| f[v as usize]).collect()
                }
            };
            Resource {
                name: format!("r{r}"),
                latency: CostFunction::Table(lat.iter().map(|&v| rat(v, 1)).collect()),
                bottleneck: CostFunction::Table(bot.iter().map(|&v| rat(v, 1)).collect()),
            }
        })
        .collect()
}

fn alphas_for(rng: &mut ChaCha8Rng, n: usize, mode: AlphaMode) -> Vec<Rational> {
    match mode {
        AlphaMode::Free => (0..n).map(|_| random_alpha(rng)).collect(),
        AlphaMode::Uniform => {
            let alpha = random_alpha(rng);
            vec![alpha; n]
        }
        AlphaMode::Pure => (0..n)
            .map(|_| rat(i128::from(rng.gen_bool(0.5)), 1))
            .collect(),
    }
}

/// A random singleton game: `2..=4` players, `2..=5` resources, each player
/// choosing among a random nonempty set of single resources.
pub fn random_singleton_game(rng: &mut ChaCha8Rng, alphas: AlphaMode, costs: CostMode) -> Game {
    let n = rng.gen_range(2..=4);
    let m = rng.gen_range(2..=5);
    let resources = resources_for(rng, m, n, costs);
    let alpha_values = alphas_for(rng, n, alphas);
    let players = alpha_values
        .into_iter()
        .map(|alpha| {
            let mut allowed: Vec<usize> = (0..m).filter(|_| rng.gen_bool(0.6)).collect();
            if allowed.is_empty() {
                allowed.push(rng.gen_range(0..m));
            }
            Player {
                alpha,
                space: StrategySpace::Explicit(allowed.into_iter().map(|r| vec![r]).collect()),
            }
        })
        .collect();
    Game::new(resources, players).unwrap()
}

/// A random matroid game: every player's strategy space is a random matroid
/// over a random ground subset of the resources.
pub fn random_matroid_game(
    rng: &mut ChaCha8Rng,
    alphas: AlphaMode,
    costs: CostMode,
    max_players: usize,
    max_resources: usize,
    max_ground: usize,
) -> Game {
    let n = rng.gen_range(2..=max_players.max(2));
    let m = rng.gen_range(2..=max_resources.max(2));
    let resources = resources_for(rng, m, n, costs);
    let alpha_values = alphas_for(rng, n, alphas);
    let players = alpha_values
        .into_iter()
        .map(|alpha| {
            let ground_size = rng.gen_range(1..=m.min(max_ground));
            let mut ground: Vec<usize> = (0..m).collect();
            for i in (1..ground.len()).rev() {
                ground.swap(i, rng.gen_range(0..=i));
            }
            ground.truncate(ground_size);
            ground.sort_unstable();
            let matroid = random_matroid(rng, ground.len());
            let ground = ground[..matroid.ground_size()].to_vec();
            Player {
                alpha,
                space: StrategySpace::Matroid(MatroidSpace { ground, matroid }),
            }
        })
        .collect();
    Game::new(resources, players).unwrap()
}

/// A random game with small explicit strategy spaces (used for exhaustive
/// deviation checks).
pub fn random_explicit_game(rng: &mut ChaCha8Rng, alphas: AlphaMode, costs: CostMode) -> Game {
    let n = rng.gen_range(2..=3);
    let m = rng.gen_range(3..=5);
    let resources = resources_for(rng, m, n, costs);
    let alpha_values = alphas_for(rng, n, alphas);
    let players = alpha_values
        .into_iter()
        .map(|alpha| {
            let count = rng.gen_range(2..=3);
            let mut strategies: Vec<Vec<usize>> = Vec::new();
            while strategies.len() < count {
                let size = rng.gen_range(1..=3.min(m));
                let mut set: Vec<usize> = Vec::new();
                while set.len() < size {
                    let r = rng.gen_range(0..m);
                    if !set.contains(&r) {
                        set.push(r);
                    }
                }
                set.sort_unstable();
                if !strategies.contains(&set) {
                    strategies.push(set);
                }
            }
            Player {
                alpha,
                space: StrategySpace::Explicit(strategies),
            }
        })
        .collect();
    Game::new(resources, players).unwrap()
}
