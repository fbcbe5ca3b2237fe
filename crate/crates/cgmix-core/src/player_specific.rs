//! Internal solver for player-specific congestion games with sum objectives.
//!
//! The specialized equilibrium routes all reduce to the same shape: every
//! player pays the *sum* of a player-specific per-resource cost over her
//! strategy, with singleton or matroid strategy spaces. Equilibria are
//! computed by sequential insertion (each newcomer takes a greedy best
//! response) followed by best-response settling among the players inserted so
//! far.
//!
//! Plain round-robin settling can cycle in these games, so the settle phase
//! falls back to seeded randomized player selection when the deterministic
//! pass exhausts its step budget; the games are weakly acyclic, so randomized
//! settling succeeds with overwhelming probability well inside the budget.
//! Only after all fallback attempts fail is an internal error reported,
//! signalling an implementation bug rather than nonexistence.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::game::{Game, ResourceSet, State, StrategySpace};
use crate::{Error, Rational, Result};

/// Player-specific per-resource cost tables: `table[i][r][x-1]` is what
/// player `i` pays for resource `r` at congestion `x`, or `None` where the
/// underlying cost table does not cover `x`.
pub(crate) struct PsCosts {
    table: Vec<Vec<Vec<Option<Rational>>>>,
}

fn build_tables<F>(game: &Game, mut per_player: F) -> PsCosts
where
    F: FnMut(usize, usize, usize) -> Option<Rational>,
{
    let n = game.n_players().max(1);
    let table = (0..game.n_players())
        .map(|i| {
            (0..game.n_resources())
                .map(|r| (1..=n).map(|x| per_player(i, r, x)).collect())
                .collect()
        })
        .collect();
    PsCosts { table }
}

/// `alpha_i * latency + (1 - alpha_i) * bottleneck` per resource.
pub(crate) fn mixed_costs(game: &Game) -> PsCosts {
    let one = Rational::from_integer(1);
    build_tables(game, |i, r, x| {
        let alpha = game.players()[i].alpha;
        let res = &game.resources()[r];
        Some(alpha * res.latency.eval(x)? + (one - alpha) * res.bottleneck.eval(x)?)
    })
}

/// Latency for players with `alpha = 1`, bottleneck for players with
/// `alpha = 0`. Sum-minimizing a bottleneck player's basis also minimizes
/// her true maximum, which is what makes this reduction sound.
pub(crate) fn pure_preference_costs(game: &Game) -> PsCosts {
    build_tables(game, |i, r, x| {
        let res = &game.resources()[r];
        if game.players()[i].alpha == Rational::from_integer(1) {
            res.latency.eval(x)
        } else {
            res.bottleneck.eval(x)
        }
    })
}

/// Latency for everyone: the classic congestion game over the latency
/// curves, whose equilibria carry over to the mixed game under a monotone
/// dependence.
pub(crate) fn latency_costs(game: &Game) -> PsCosts {
    build_tables(game, |_, r, x| game.resources()[r].latency.eval(x))
}

impl PsCosts {
    fn at(&self, game: &Game, i: usize, r: usize, x: usize) -> Result<Rational> {
        self.table[i][r]
            .get(x - 1)
            .copied()
            .flatten()
            .ok_or_else(|| Error::CongestionBeyondTable {
                resource: game.resource_name(r).into(),
                congestion: x,
                len: self.table[i][r].len(),
            })
    }
}

struct Engine<'g> {
    game: &'g Game,
    costs: &'g PsCosts,
    /// Sorted explicit candidate lists; empty for matroid players served by
    /// greedy.
    candidates: Vec<Option<Vec<ResourceSet>>>,
}

impl<'g> Engine<'g> {
    fn new(game: &'g Game, costs: &'g PsCosts) -> Result<Engine<'g>> {
        let mut candidates = Vec::with_capacity(game.n_players());
        for player in game.players() {
            match &player.space {
                StrategySpace::Explicit(_) => {
                    let mut list = game.strategy_list(0, player)?;
                    list.sort();
                    candidates.push(Some(list));
                }
                StrategySpace::Matroid(_) => candidates.push(None),
            }
        }
        Ok(Engine {
            game,
            costs,
            candidates,
        })
    }

    fn counts_of(&self, choices: &[ResourceSet], counts: &mut Vec<u32>) {
        counts.clear();
        counts.resize(self.game.n_resources(), 0);
        for set in choices {
            for &r in set {
                counts[r] += 1;
            }
        }
    }

    /// Cost player `i` would pay per resource `r` after deviating onto it.
    fn entry_weight(
        &self,
        i: usize,
        r: usize,
        counts: &[u32],
        current: &[usize],
    ) -> Result<Rational> {
        let holds = current.binary_search(&r).is_ok();
        let x = counts[r] as usize + usize::from(!holds);
        self.costs.at(self.game, i, r, x)
    }

    fn sum_cost(
        &self,
        i: usize,
        set: &[usize],
        counts: &[u32],
        current: &[usize],
    ) -> Result<Rational> {
        let mut total = Rational::from_integer(0);
        for &r in set {
            total += self.entry_weight(i, r, counts, current)?;
        }
        Ok(total)
    }

    /// Lazy best response of player `i` in the player-specific sum game.
    fn best_response(
        &self,
        i: usize,
        counts: &[u32],
        current: &[usize],
    ) -> Result<(Rational, ResourceSet)> {
        match (&self.candidates[i], &self.game.players()[i].space) {
            (Some(list), _) => {
                let mut best: Option<(Rational, usize, &ResourceSet)> = None;
                for cand in list {
                    let cost = self.sum_cost(i, cand, counts, current)?;
                    let overlap = crate::dynamics::sorted_intersection_size(cand, current);
                    let better = match &best {
                        None => true,
                        Some((c, o, _)) => cost < *c || (cost == *c && overlap > *o),
                    };
                    if better {
                        best = Some((cost, overlap, cand));
                    }
                }
                let (cost, _, set) = best.ok_or(Error::InternalSolverFailure {
                    detail: "player has no strategies",
                })?;
                Ok((cost, set.clone()))
            }
            (None, StrategySpace::Matroid(space)) => {
                let weights: Vec<Rational> = space
                    .ground
                    .iter()
                    .map(|&r| self.entry_weight(i, r, counts, current))
                    .collect::<Result<_>>()?;
                let in_current: Vec<bool> = space
                    .ground
                    .iter()
                    .map(|r| current.binary_search(r).is_ok())
                    .collect();
                let basis = space
                    .matroid
                    .greedy_min_basis_preferring(&weights, |p| in_current[p])?;
                let cost = basis.iter().map(|&p| weights[p]).sum();
                Ok((cost, space.to_resources(&basis)))
            }
            (None, StrategySpace::Explicit(_)) => unreachable!("explicit lists are cached"),
        }
    }

    /// One settling pass: repeatedly move an improving player to her lazy
    /// best response until no one improves or the budget runs out. Returns
    /// true on convergence.
    fn settle<FnPick>(
        &self,
        choices: &mut [ResourceSet],
        budget: usize,
        mut pick: FnPick,
    ) -> Result<bool>
    where
        FnPick: FnMut(&[(usize, Rational, ResourceSet)]) -> usize,
    {
        let mut counts: Vec<u32> = Vec::new();
        for _ in 0..budget {
            self.counts_of(choices, &mut counts);
            let mut improving: Vec<(usize, Rational, ResourceSet)> = Vec::new();
            for (i, current) in choices.iter().enumerate() {
                let cur_cost = self.sum_cost(i, current, &counts, current)?;
                let (best_cost, best_set) = self.best_response(i, &counts, current)?;
                if best_cost < cur_cost {
                    improving.push((i, best_cost, best_set));
                }
            }
            if improving.is_empty() {
                return Ok(true);
            }
            let k = pick(&improving);
            let (mover, _, to) = improving.swap_remove(k);
            choices[mover] = to;
        }
        Ok(false)
    }
}

const SETTLE_FALLBACK_ATTEMPTS: u64 = 24;

/// Computes a pure Nash equilibrium of the player-specific sum game given by
/// `costs` over the strategy spaces of `game`, by sequential insertion with
/// best-response settling.
pub(crate) fn solve_player_specific(game: &Game, costs: &PsCosts) -> Result<State> {
    let engine = Engine::new(game, costs)?;
    let n = game.n_players();
    let m = game.n_resources().max(1);
    let mut choices: Vec<ResourceSet> = Vec::with_capacity(n);
    let mut counts: Vec<u32> = Vec::new();

    for k in 0..n {
        engine.counts_of(&choices, &mut counts);
        let (_, entry) = engine.best_response(k, &counts, &[])?;
        choices.push(entry);

        let budget = 2 * (k + 1) * (k + 1) * m * m + 16;
        // Deterministic pass first: lowest improving player moves.
        if engine.settle(&mut choices, budget, |_| 0)? {
            continue;
        }
        // Weak acyclicity guarantees an improving path exists; find one by
        // randomizing the mover selection.
        let snapshot = choices.clone();
        let mut settled = false;
        for seed in 0..SETTLE_FALLBACK_ATTEMPTS {
            choices.clone_from(&snapshot);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            if engine.settle(&mut choices, budget, |improving| {
                rng.gen_range(0..improving.len())
            })? {
                settled = true;
                break;
            }
        }
        if !settled {
            return Err(Error::InternalSolverFailure {
                detail: "player-specific settling exceeded every step budget",
            });
        }
    }
    Ok(State::new(choices))
}
