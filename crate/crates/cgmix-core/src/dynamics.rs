//! Improvement dynamics: better/best/lazy responses, schedulers, cycle
//! detection, a weak-acyclicity probe, and the rank-indexed potential.
//!
//! Best responses for matroid strategy spaces are computed by basis
//! enumeration while the ground set is small, and otherwise by greedy routes
//! that are exact in three situations:
//!
//! * `alpha = 1`: the cost is a plain weight sum, the textbook greedy case;
//! * `alpha = 0`: a minimum-weight-sum basis also minimizes the maximum
//!   element weight, so the bottleneck optimum is the greedy value; the lazy
//!   variant then maximizes overlap among the bases attaining it;
//! * monotone dependence between latency and bottleneck values: minimizing
//!   the latency sum simultaneously minimizes the bottleneck maximum, hence
//!   the full mixed cost.
//!
//! Everything is deterministic: ties break toward the current strategy
//! (laziness), then lexicographically; randomized scheduling is fully
//! determined by its seed.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::game::{Evaluator, ExpandedSpace, Game, ResourceSet, State, StrategySpace};
use crate::matroid::DEFAULT_BASIS_ENUMERATION_CAP;
use crate::rational::format_rational;
use crate::{Error, Rational, Result};

/// How a scheduled player moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveRule {
    /// First strictly improving strategy in lexicographic order.
    BetterResponse,
    /// A cost-minimizing strategy (lexicographically first among them).
    BestResponse,
    /// A cost-minimizing strategy with maximal overlap with the current one;
    /// equals the current strategy whenever that is already optimal.
    LazyBestResponse,
}

/// Which improving player moves next.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheduler {
    /// Cyclic scan starting after the previous mover.
    RoundRobin,
    /// Uniformly random among improving players; fully determined by `seed`.
    Random { seed: u64 },
    /// The player with the largest multiplicative improvement factor.
    MaxGain,
}

/// One improvement step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    /// Moving player, 0-based.
    pub mover: usize,
    pub from: ResourceSet,
    pub to: ResourceSet,
    pub cost_before: Rational,
    pub cost_after: Rational,
}

/// How a dynamics run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// No player can strictly improve: the final state is a pure Nash
    /// equilibrium.
    Converged,
    /// The state reached after the last step was seen before; `start` is the
    /// index of its first visit (0 = the initial state).
    Cycle { start: usize },
    /// The step budget ran out first.
    StepCap,
}

/// A recorded improvement sequence. Every step strictly decreases the
/// mover's exact cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynamicsTrace {
    pub start: State,
    pub steps: Vec<Step>,
    pub verdict: Verdict,
}

impl DynamicsTrace {
    /// All visited states: the start state followed by the state after each
    /// step.
    pub fn states(&self) -> Vec<State> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut current = self.start.clone();
        out.push(current.clone());
        for step in &self.steps {
            current = current.with_choice(step.mover, step.to.clone());
            out.push(current.clone());
        }
        out
    }

    /// The state after the last step.
    pub fn final_state(&self) -> State {
        let mut current = self.start.clone();
        for step in &self.steps {
            current = current.with_choice(step.mover, step.to.clone());
        }
        current
    }

    /// Line-oriented export: one `step=...` line per step, then a
    /// `verdict=...` line.
    pub fn render(&self, game: &Game) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        for (k, step) in self.steps.iter().enumerate() {
            let _ = writeln!(
                out,
                "step={} player={} from={} to={} cost_before={} cost_after={}",
                k + 1,
                step.mover + 1,
                game.format_set(&step.from),
                game.format_set(&step.to),
                format_rational(&step.cost_before),
                format_rational(&step.cost_after),
            );
        }
        let verdict = match self.verdict {
            Verdict::Converged => String::from("converged"),
            Verdict::Cycle { start } => alloc::format!("cycle@{start}"),
            Verdict::StepCap => String::from("step_cap"),
        };
        let _ = writeln!(out, "verdict={verdict}");
        out
    }
}

/// Parameters for [`run_dynamics`].
#[derive(Debug, Clone, Copy)]
pub struct DynamicsConfig {
    pub rule: MoveRule,
    pub scheduler: Scheduler,
    pub max_steps: usize,
}

impl DynamicsConfig {
    pub fn new(rule: MoveRule, scheduler: Scheduler, max_steps: usize) -> Self {
        DynamicsConfig {
            rule,
            scheduler,
            max_steps,
        }
    }
}

/// Per-player strategy oracle: either an explicit candidate list or a
/// greedy-only matroid view for ground sets above the enumeration cap.
enum SpaceOracle {
    Enumerated(Vec<ResourceSet>),
    GreedyOnly,
}

/// Shared machinery for response computation over one game.
pub(crate) struct Responder<'g> {
    game: &'g Game,
    pub eval: Evaluator,
    spaces: Vec<SpaceOracle>,
    monotone: bool,
}

/// A strictly improving move for one player.
#[derive(Debug, Clone)]
pub(crate) struct Improvement {
    pub to: ResourceSet,
    pub cost_before: Rational,
    pub cost_after: Rational,
}

impl<'g> Responder<'g> {
    pub fn new(game: &'g Game) -> Responder<'g> {
        let spaces = game
            .players()
            .iter()
            .map(|player| match &player.space {
                StrategySpace::Explicit(_) => SpaceOracle::Enumerated(
                    game.strategy_list(0, player).expect("explicit list"),
                ),
                StrategySpace::Matroid(space) => {
                    if space.ground.len() <= DEFAULT_BASIS_ENUMERATION_CAP {
                        let bases = space
                            .matroid
                            .enumerate_bases(DEFAULT_BASIS_ENUMERATION_CAP)
                            .expect("ground within cap");
                        let mut list: Vec<ResourceSet> =
                            bases.iter().map(|b| space.to_resources(b)).collect();
                        list.sort();
                        list.dedup();
                        SpaceOracle::Enumerated(list)
                    } else {
                        SpaceOracle::GreedyOnly
                    }
                }
            })
            .collect();
        Responder {
            game,
            eval: Evaluator::new(game),
            spaces,
            monotone: game.flags().has_monotone_dependence,
        }
    }

    fn greedy_weights(
        &self,
        ground: &[usize],
        counts: &[u32],
        current: &[usize],
        bottleneck: bool,
    ) -> Result<Vec<Rational>> {
        ground
            .iter()
            .map(|&r| {
                let holds = current.binary_search(&r).is_ok();
                let x = counts[r] as usize + usize::from(!holds);
                if bottleneck {
                    self.eval.bottleneck(r, x)
                } else {
                    self.eval.latency(r, x)
                }
            })
            .collect()
    }

    /// The canonical best response of player `i` via a greedy matroid route,
    /// or an intractability error when no route applies.
    fn greedy_best(
        &self,
        i: usize,
        counts: &[u32],
        current: &[usize],
        lazy: bool,
    ) -> Result<ResourceSet> {
        let player = &self.game.players()[i];
        let space = match &player.space {
            StrategySpace::Matroid(space) => space,
            StrategySpace::Explicit(_) => unreachable!("explicit spaces are enumerated"),
        };
        let alpha = player.alpha;
        let one = Rational::from_integer(1);
        let in_current: Vec<bool> = space
            .ground
            .iter()
            .map(|r| current.binary_search(r).is_ok())
            .collect();
        let prefer = |p: usize| lazy && in_current[p];
        let basis = if alpha.is_zero() {
            // Bottleneck objective: the greedy minimum-sum basis attains the
            // minimum possible maximum weight; restricted to elements at or
            // below that value any basis is optimal, so take the one with
            // the largest overlap.
            let weights = self.greedy_weights(&space.ground, counts, current, true)?;
            let min_basis = space.matroid.greedy_min_basis(&weights)?;
            let cap = min_basis
                .iter()
                .map(|&p| weights[p])
                .max()
                .unwrap_or_else(Rational::zero);
            space
                .matroid
                .greedy_restricted_basis(&weights, prefer, |p| weights[p] <= cap)?
                .ok_or(Error::InternalSolverFailure {
                    detail: "bottleneck-restricted ground lost the basis",
                })?
        } else if alpha == one || self.monotone {
            let weights = self.greedy_weights(&space.ground, counts, current, false)?;
            space.matroid.greedy_min_basis_preferring(&weights, prefer)?
        } else {
            return Err(Error::IntractableBestResponse { player: i + 1 });
        };
        Ok(space.to_resources(&basis))
    }

    /// Minimum achievable deviation cost for player `i`, together with the
    /// canonical strategy attaining it.
    pub fn min_cost(
        &self,
        i: usize,
        counts: &[u32],
        current: &[usize],
    ) -> Result<(Rational, ResourceSet)> {
        match &self.spaces[i] {
            SpaceOracle::Enumerated(candidates) => {
                let mut best: Option<(Rational, &ResourceSet)> = None;
                for cand in candidates {
                    let cost = self.eval.deviation_cost(i, cand, counts, current)?;
                    match &best {
                        Some((b, _)) if *b <= cost => {}
                        _ => best = Some((cost, cand)),
                    }
                }
                let (cost, set) = best.ok_or(Error::InternalSolverFailure {
                    detail: "player has no strategies",
                })?;
                Ok((cost, set.clone()))
            }
            SpaceOracle::GreedyOnly => {
                let set = self.greedy_best(i, counts, current, false)?;
                let cost = self.eval.deviation_cost(i, &set, counts, current)?;
                Ok((cost, set))
            }
        }
    }

    /// All cost-minimizing strategies (for enumerable spaces), or the
    /// canonical greedy minimizer as a one-element representative set.
    pub fn best_responses(
        &self,
        i: usize,
        counts: &[u32],
        current: &[usize],
    ) -> Result<Vec<ResourceSet>> {
        match &self.spaces[i] {
            SpaceOracle::Enumerated(candidates) => {
                let mut best: Option<Rational> = None;
                let mut out: Vec<ResourceSet> = Vec::new();
                for cand in candidates {
                    let cost = self.eval.deviation_cost(i, cand, counts, current)?;
                    match &best {
                        Some(b) if cost > *b => {}
                        Some(b) if cost == *b => out.push(cand.clone()),
                        _ => {
                            best = Some(cost);
                            out.clear();
                            out.push(cand.clone());
                        }
                    }
                }
                if out.is_empty() {
                    return Err(Error::InternalSolverFailure {
                        detail: "player has no strategies",
                    });
                }
                Ok(out)
            }
            SpaceOracle::GreedyOnly => Ok(vec![self.greedy_best(i, counts, current, false)?]),
        }
    }

    /// The lazy best response: maximal overlap with `current` among the cost
    /// minimizers, ties broken lexicographically; equals `current` whenever
    /// `current` is itself a best response.
    pub fn lazy_best(&self, i: usize, counts: &[u32], current: &[usize]) -> Result<ResourceSet> {
        match &self.spaces[i] {
            SpaceOracle::Enumerated(_) => {
                let minimizers = self.best_responses(i, counts, current)?;
                let mut best: Option<(usize, &ResourceSet)> = None;
                for cand in &minimizers {
                    let overlap = sorted_intersection_size(cand, current);
                    match &best {
                        Some((o, _)) if *o >= overlap => {}
                        _ => best = Some((overlap, cand)),
                    }
                }
                Ok(best.expect("nonempty minimizer set").1.clone())
            }
            SpaceOracle::GreedyOnly => self.greedy_best(i, counts, current, true),
        }
    }

    /// The rule's move for player `i`, if it strictly improves her cost.
    pub fn improving_move(
        &self,
        i: usize,
        counts: &[u32],
        current: &[usize],
        rule: MoveRule,
    ) -> Result<Option<Improvement>> {
        let cost_before = self.eval.mixed_cost(i, current, counts)?;
        let (cost_after, to) = match rule {
            MoveRule::BetterResponse => match &self.spaces[i] {
                SpaceOracle::Enumerated(candidates) => {
                    let mut found = None;
                    for cand in candidates {
                        let cost = self.eval.deviation_cost(i, cand, counts, current)?;
                        if cost < cost_before {
                            found = Some((cost, cand.clone()));
                            break;
                        }
                    }
                    match found {
                        Some(x) => x,
                        None => return Ok(None),
                    }
                }
                SpaceOracle::GreedyOnly => self.min_cost(i, counts, current)?,
            },
            MoveRule::BestResponse => self.min_cost(i, counts, current)?,
            MoveRule::LazyBestResponse => {
                let set = self.lazy_best(i, counts, current)?;
                let cost = self.eval.deviation_cost(i, &set, counts, current)?;
                (cost, set)
            }
        };
        if cost_after < cost_before {
            Ok(Some(Improvement {
                to,
                cost_before,
                cost_after,
            }))
        } else {
            Ok(None)
        }
    }
}

pub(crate) fn sorted_intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// All strategies minimizing player `i`'s cost against the rest of `state`.
///
/// Explicit spaces are scanned in full; matroid spaces are enumerated while
/// the ground set is within the cap and otherwise served by a greedy route
/// (then a single representative minimizer is returned). With no greedy
/// route applicable the search is rejected as intractable.
pub fn best_responses(game: &Game, state: &State, i: usize) -> Result<Vec<ResourceSet>> {
    game.check_state(state)?;
    let responder = Responder::new(game);
    let mut counts = Vec::new();
    responder.eval.counts_into(state.choices(), &mut counts);
    responder.best_responses(i, &counts, state.choice(i))
}

/// The best response maximizing overlap with the current strategy.
pub fn lazy_best_response(game: &Game, state: &State, i: usize) -> Result<ResourceSet> {
    game.check_state(state)?;
    let responder = Responder::new(game);
    let mut counts = Vec::new();
    responder.eval.counts_into(state.choices(), &mut counts);
    responder.lazy_best(i, &counts, state.choice(i))
}

/// Runs improvement dynamics from `start` until no player improves, a state
/// repeats, or the step budget is exhausted.
pub fn run_dynamics(game: &Game, start: &State, config: &DynamicsConfig) -> Result<DynamicsTrace> {
    game.check_state(start)?;
    let responder = Responder::new(game);
    let n = game.n_players();
    let mut choices: Vec<ResourceSet> = start.choices().to_vec();
    let mut counts: Vec<u32> = Vec::new();
    let mut visited: BTreeMap<Vec<ResourceSet>, usize> = BTreeMap::new();
    visited.insert(choices.clone(), 0);
    let mut steps: Vec<Step> = Vec::new();
    let mut last_mover: usize = n.saturating_sub(1);
    let mut rng = match config.scheduler {
        Scheduler::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };

    loop {
        responder.eval.counts_into(&choices, &mut counts);
        let picked: Option<(usize, Improvement)> = match config.scheduler {
            Scheduler::RoundRobin => {
                let mut found = None;
                for k in 1..=n {
                    let i = (last_mover + k) % n;
                    if let Some(imp) =
                        responder.improving_move(i, &counts, &choices[i], config.rule)?
                    {
                        found = Some((i, imp));
                        break;
                    }
                }
                found
            }
            Scheduler::Random { .. } | Scheduler::MaxGain => {
                let mut movers: Vec<(usize, Improvement)> = Vec::new();
                for (i, choice) in choices.iter().enumerate() {
                    if let Some(imp) = responder.improving_move(i, &counts, choice, config.rule)? {
                        movers.push((i, imp));
                    }
                }
                if movers.is_empty() {
                    None
                } else if let Some(rng) = rng.as_mut() {
                    let k = rng.gen_range(0..movers.len());
                    Some(movers.swap_remove(k))
                } else {
                    // Largest multiplicative improvement; ties go to the
                    // lowest player index. A zero after-cost dominates.
                    let mut best = 0;
                    for k in 1..movers.len() {
                        if gain_exceeds(&movers[k].1, &movers[best].1) {
                            best = k;
                        }
                    }
                    Some(movers.swap_remove(best))
                }
            }
        };

        let Some((mover, imp)) = picked else {
            return Ok(DynamicsTrace {
                start: start.clone(),
                steps,
                verdict: Verdict::Converged,
            });
        };
        if steps.len() >= config.max_steps {
            return Ok(DynamicsTrace {
                start: start.clone(),
                steps,
                verdict: Verdict::StepCap,
            });
        }
        let from = core::mem::replace(&mut choices[mover], imp.to.clone());
        steps.push(Step {
            mover,
            from,
            to: imp.to,
            cost_before: imp.cost_before,
            cost_after: imp.cost_after,
        });
        last_mover = mover;
        if let Some(&first) = visited.get(&choices) {
            return Ok(DynamicsTrace {
                start: start.clone(),
                steps,
                verdict: Verdict::Cycle { start: first },
            });
        }
        visited.insert(choices.clone(), steps.len());
    }
}

/// True iff `a` improves by a strictly larger factor than `b`.
fn gain_exceeds(a: &Improvement, b: &Improvement) -> bool {
    match (a.cost_after.is_zero(), b.cost_after.is_zero()) {
        (true, true) => false,
        (true, false) => true,
        (false, true) => false,
        (false, false) => a.cost_before * b.cost_after > b.cost_before * a.cost_after,
    }
}

/// Probe parameters for [`weakly_acyclic_probe`].
#[derive(Debug, Clone, Copy)]
pub struct ProbeConfig {
    /// Exhaustive search is used while the total state count stays within
    /// this cap.
    pub bfs_cap: u128,
    /// Randomized-restart budget used above the cap.
    pub restarts: u32,
    /// Step budget per randomized restart.
    pub restart_steps: usize,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig {
            bfs_cap: 1_000_000,
            restarts: 64,
            restart_steps: 10_000,
        }
    }
}

/// Outcome of [`weakly_acyclic_probe`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeOutcome {
    /// A best-response improvement path from the start to a pure Nash
    /// equilibrium: `states[0]` is the start, the last state is the
    /// equilibrium, and `movers[k]` moved between states `k` and `k+1`.
    Path {
        states: Vec<State>,
        movers: Vec<usize>,
    },
    /// Exhaustive search proved that no best-response path from the start
    /// reaches a pure Nash equilibrium.
    NoPneReachable { explored: u128 },
    /// The randomized budget was exhausted without finding a path. Not a
    /// proof of absence.
    NotFound,
}

/// Searches for some best-response improvement path from `start` to a pure
/// Nash equilibrium: breadth-first over the best-response state graph while
/// the state space is within the cap, randomized restarts otherwise.
pub fn weakly_acyclic_probe(
    game: &Game,
    start: &State,
    config: &ProbeConfig,
) -> Result<ProbeOutcome> {
    game.check_state(start)?;
    match game.expanded_space(config.bfs_cap) {
        Ok(space) => bfs_probe(game, start, &space),
        Err(Error::CapExceeded { .. }) => restart_probe(game, start, config),
        Err(other) => Err(other),
    }
}

fn bfs_probe(game: &Game, start: &State, space: &ExpandedSpace) -> Result<ProbeOutcome> {
    let responder = Responder::new(game);
    let start_idx = space.indices_of(start).ok_or(Error::InternalSolverFailure {
        detail: "start state missing from expanded space",
    })?;
    // visited state -> (parent state, mover); parent is None for the start.
    let mut visited: BTreeMap<Vec<usize>, Option<(Vec<usize>, usize)>> = BTreeMap::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    visited.insert(start_idx.clone(), None);
    queue.push_back(start_idx);
    let mut counts: Vec<u32> = Vec::new();

    while let Some(node) = queue.pop_front() {
        let choices: Vec<ResourceSet> = node
            .iter()
            .enumerate()
            .map(|(i, &s)| space.strategies(i)[s].clone())
            .collect();
        responder.eval.counts_into(&choices, &mut counts);
        let mut any_improvement = false;
        for i in 0..game.n_players() {
            let cur_cost = responder.eval.mixed_cost(i, &choices[i], &counts)?;
            let best = responder.best_responses(i, &counts, &choices[i])?;
            let best_cost = responder
                .eval
                .deviation_cost(i, &best[0], &counts, &choices[i])?;
            if best_cost >= cur_cost {
                continue;
            }
            any_improvement = true;
            for response in best {
                let s = space
                    .strategies(i)
                    .iter()
                    .position(|c| *c == response)
                    .ok_or(Error::InternalSolverFailure {
                        detail: "best response missing from expanded space",
                    })?;
                let mut next = node.clone();
                next[i] = s;
                if !visited.contains_key(&next) {
                    visited.insert(next.clone(), Some((node.clone(), i)));
                    queue.push_back(next);
                }
            }
        }
        if !any_improvement {
            // Equilibrium found: walk parents back to the start.
            let mut rev_states = vec![space.state_of(&node)];
            let mut rev_movers = Vec::new();
            let mut cursor = node;
            while let Some(Some((parent, mover))) = visited.get(&cursor) {
                rev_movers.push(*mover);
                rev_states.push(space.state_of(parent));
                cursor = parent.clone();
            }
            rev_states.reverse();
            rev_movers.reverse();
            return Ok(ProbeOutcome::Path {
                states: rev_states,
                movers: rev_movers,
            });
        }
    }
    Ok(ProbeOutcome::NoPneReachable {
        explored: visited.len() as u128,
    })
}

fn restart_probe(game: &Game, start: &State, config: &ProbeConfig) -> Result<ProbeOutcome> {
    for seed in 0..config.restarts {
        let trace = run_dynamics(
            game,
            start,
            &DynamicsConfig::new(
                MoveRule::BestResponse,
                Scheduler::Random { seed: seed as u64 },
                config.restart_steps,
            ),
        )?;
        if trace.verdict == Verdict::Converged {
            let states = trace.states();
            let movers = trace.steps.iter().map(|s| s.mover).collect();
            return Ok(ProbeOutcome::Path { states, movers });
        }
    }
    Ok(ProbeOutcome::NotFound)
}

/// The rank-indexed potential: enumerate all latency values that can occur,
/// in increasing order with equal values sharing one position (dense
/// ranking), and sum the position of `latency(r, x)` over every resource `r`
/// and congestion level `x` up to the resource's current congestion.
///
/// Valid (strictly decreasing along lazy best-response steps) for matroid
/// games whose cost functions have a monotone dependence; both flags are
/// checked.
pub fn rank_potential(game: &Game, state: &State) -> Result<u64> {
    if !game.flags().is_matroid {
        return Err(Error::FlagNotSatisfied { flag: "is_matroid" });
    }
    if !game.flags().has_monotone_dependence {
        return Err(Error::FlagNotSatisfied {
            flag: "has_monotone_dependence",
        });
    }
    let profile = game.congestion(state)?;
    let eval = Evaluator::new(game);
    let ranks = latency_ranks(game, &eval)?;
    let mut potential: u64 = 0;
    for r in 0..game.n_resources() {
        for x in 1..=profile.count(r) as usize {
            potential += ranks.rank_of(eval.latency(r, x)?);
        }
    }
    Ok(potential)
}

pub(crate) struct LatencyRanks {
    sorted: Vec<Rational>,
}

impl LatencyRanks {
    /// 1-based dense rank of a latency value.
    pub fn rank_of(&self, value: Rational) -> u64 {
        (self.sorted.binary_search(&value).expect("known latency value") + 1) as u64
    }
}

pub(crate) fn latency_ranks(game: &Game, eval: &Evaluator) -> Result<LatencyRanks> {
    let n = game.n_players().max(1);
    let mut values = Vec::with_capacity(game.n_resources() * n);
    for r in 0..game.n_resources() {
        for x in 1..=n {
            values.push(eval.latency(r, x)?);
        }
    }
    values.sort();
    values.dedup();
    Ok(LatencyRanks { sorted: values })
}
