//! Equilibrium computation and certification.
//!
//! * [`certify`] measures how far a state is from equilibrium: the worst,
//!   over players, of current cost divided by best achievable deviation cost
//!   (a state is a pure Nash equilibrium iff that factor is at most 1).
//! * [`enumerate_pne`] lists all equilibria of enumerable games exactly.
//! * [`solve_singleton`], [`solve_pure_preferences`] and
//!   [`solve_monotone_dependence`] are the polynomial-time routes; each
//!   reduces the game to a player-specific congestion game with sum
//!   objectives and solves that by insertion dynamics.
//! * [`approx_solve`] finds beta-approximate equilibria by descending an
//!   approximate potential function (or through the player-specific matroid
//!   route) and certifies the result.
//!
//! All comparisons are exact; the square-root approximation target is
//! certified through squared rational comparisons, so no irrational
//! arithmetic enters the crate.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::dynamics::{self, DynamicsConfig, MoveRule, Responder, Scheduler, Verdict};
use crate::game::{Evaluator, ExpandedSpace, Game, ResourceSet, State};
use crate::player_specific;
use crate::rational::format_rational;
use crate::{Error, Rational, Result};

/// Default cap on the number of states considered by exhaustive operations.
pub const DEFAULT_STATE_CAP: u128 = 10_000_000;

/// An exact approximation factor, possibly infinite (a player whose best
/// deviation is free while her current cost is not).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaValue {
    Finite(Rational),
    Infinite,
}

impl BetaValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, BetaValue::Finite(_))
    }

    pub fn as_finite(&self) -> Option<Rational> {
        match self {
            BetaValue::Finite(v) => Some(*v),
            BetaValue::Infinite => None,
        }
    }
}

impl PartialOrd for BetaValue {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BetaValue {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        use BetaValue::*;
        match (self, other) {
            (Infinite, Infinite) => core::cmp::Ordering::Equal,
            (Infinite, Finite(_)) => core::cmp::Ordering::Greater,
            (Finite(_), Infinite) => core::cmp::Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl core::fmt::Display for BetaValue {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BetaValue::Finite(v) => write!(f, "{}", format_rational(v)),
            BetaValue::Infinite => write!(f, "inf"),
        }
    }
}

/// The approximation target a certificate is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaRequest {
    /// Pass iff `beta_achieved <= value`.
    Value(Rational),
    /// Pass iff `beta_achieved^2 <= of` — the square-root target evaluated
    /// without irrational arithmetic.
    SqrtOf(Rational),
}

impl BetaRequest {
    fn passes(&self, achieved: &BetaValue) -> bool {
        match (self, achieved) {
            (_, BetaValue::Infinite) => false,
            (BetaRequest::Value(beta), BetaValue::Finite(b)) => b <= beta,
            (BetaRequest::SqrtOf(of), BetaValue::Finite(b)) => *b * *b <= *of,
        }
    }
}

impl core::fmt::Display for BetaRequest {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BetaRequest::Value(v) => write!(f, "{}", format_rational(v)),
            BetaRequest::SqrtOf(v) => write!(f, "sqrt({})", format_rational(v)),
        }
    }
}

/// How close a state is to a pure Nash equilibrium, with the binding player
/// and her most attractive deviation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub state: State,
    /// `max_i current_cost_i / min_deviation_cost_i`, with `0/0 = 1` and
    /// `positive/0 = inf`. At most 1 iff the state is a pure Nash
    /// equilibrium.
    pub beta_achieved: BetaValue,
    /// Binding player (0-based) and her cheapest deviation; `None` only for
    /// games without players.
    pub worst: Option<(usize, ResourceSet)>,
    /// The target this certificate was checked against.
    pub requested: BetaRequest,
    pub pass: bool,
}

impl Certificate {
    /// True iff the state is an exact pure Nash equilibrium.
    pub fn is_pne(&self) -> bool {
        match &self.beta_achieved {
            BetaValue::Finite(b) => *b <= Rational::from_integer(1),
            BetaValue::Infinite => false,
        }
    }

    /// One-line export, e.g.
    /// `beta_achieved=28/15 worst_player=2 worst_deviation=r4+r5 pass=false`.
    pub fn render(&self, game: &Game) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        let _ = write!(out, "beta_achieved={}", self.beta_achieved);
        match &self.worst {
            Some((player, deviation)) => {
                let _ = write!(
                    out,
                    " worst_player={} worst_deviation={}",
                    player + 1,
                    game.format_set(deviation)
                );
            }
            None => {
                let _ = write!(out, " worst_player=- worst_deviation=-");
            }
        }
        let _ = write!(out, " pass={}", self.pass);
        out
    }
}

fn ratio_of(current: Rational, best: Rational) -> BetaValue {
    if best.is_zero() {
        if current.is_zero() {
            BetaValue::Finite(Rational::from_integer(1))
        } else {
            BetaValue::Infinite
        }
    } else {
        BetaValue::Finite(current / best)
    }
}

pub(crate) fn certify_against(
    game: &Game,
    state: &State,
    requested: BetaRequest,
) -> Result<Certificate> {
    game.check_state(state)?;
    let responder = Responder::new(game);
    let mut counts = Vec::new();
    responder.eval.counts_into(state.choices(), &mut counts);
    let mut beta = BetaValue::Finite(Rational::from_integer(1));
    let mut worst: Option<(usize, ResourceSet)> = None;
    for i in 0..game.n_players() {
        let current = state.choice(i);
        let cur_cost = responder.eval.mixed_cost(i, current, &counts)?;
        let (best_cost, best_dev) = responder.min_cost(i, &counts, current)?;
        let ratio = ratio_of(cur_cost, best_cost);
        if worst.is_none() || ratio > beta {
            beta = ratio;
            worst = Some((i, best_dev));
        }
    }
    let pass = requested.passes(&beta);
    Ok(Certificate {
        state: state.clone(),
        beta_achieved: beta,
        worst,
        requested,
        pass,
    })
}

/// Certifies `state` against a multiplicative approximation factor
/// `beta >= 1`: computes the exact worst improvement ratio over all players
/// and deviations and reports pass/fail.
pub fn certify(game: &Game, state: &State, beta: Rational) -> Result<Certificate> {
    if beta < Rational::from_integer(1) {
        return Err(Error::BetaBelowOne);
    }
    certify_against(game, state, BetaRequest::Value(beta))
}

/// Reusable per-thread context for sweeping a fully expanded state space:
/// equilibrium tests and beta values by state index. Congestion scratch is
/// reused across calls, so sweeping millions of states allocates nothing per
/// state.
pub struct SweepContext<'g> {
    game: &'g Game,
    space: &'g ExpandedSpace,
    eval: Evaluator,
    counts: Vec<u32>,
    indices: Vec<usize>,
}

impl<'g> SweepContext<'g> {
    pub fn new(game: &'g Game, space: &'g ExpandedSpace) -> SweepContext<'g> {
        SweepContext {
            game,
            space,
            eval: Evaluator::new(game),
            counts: Vec::new(),
            indices: Vec::new(),
        }
    }

    fn load(&mut self, index: u128) {
        self.space.decode(index, &mut self.indices);
        self.counts.clear();
        self.counts.resize(self.game.n_resources(), 0);
        for (i, &s) in self.indices.iter().enumerate() {
            for &r in &self.space.strategies(i)[s] {
                self.counts[r] += 1;
            }
        }
    }

    /// True iff the state at `index` admits no strictly improving deviation.
    pub fn is_pne_at(&mut self, index: u128) -> Result<bool> {
        self.load(index);
        for i in 0..self.game.n_players() {
            let list = self.space.strategies(i);
            let current = &list[self.indices[i]];
            let cur_cost = self.eval.mixed_cost(i, current, &self.counts)?;
            for (s, cand) in list.iter().enumerate() {
                if s == self.indices[i] {
                    continue;
                }
                if self.eval.deviation_cost(i, cand, &self.counts, current)? < cur_cost {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Exact `beta_achieved` of the state at `index`.
    pub fn beta_at(&mut self, index: u128) -> Result<BetaValue> {
        self.load(index);
        let mut beta = BetaValue::Finite(Rational::from_integer(1));
        for i in 0..self.game.n_players() {
            let list = self.space.strategies(i);
            let current = &list[self.indices[i]];
            let cur_cost = self.eval.mixed_cost(i, current, &self.counts)?;
            let mut best = cur_cost;
            for (s, cand) in list.iter().enumerate() {
                if s == self.indices[i] {
                    continue;
                }
                let cost = self.eval.deviation_cost(i, cand, &self.counts, current)?;
                if cost < best {
                    best = cost;
                }
            }
            let ratio = ratio_of(cur_cost, best);
            if ratio > beta {
                beta = ratio;
            }
        }
        Ok(beta)
    }

    /// The state at `index`.
    pub fn state(&self, index: u128) -> State {
        self.space.state(index)
    }
}

/// All pure Nash equilibria, in lexicographic state order.
///
/// The product of (expanded) strategy-list sizes must stay within `cap`;
/// matroid spaces are expanded through basis enumeration.
pub fn enumerate_pne(game: &Game, cap: u128) -> Result<Vec<State>> {
    let space = game.expanded_space(cap)?;
    let mut ctx = SweepContext::new(game, &space);
    let mut out = Vec::new();
    for index in 0..space.count() {
        if ctx.is_pne_at(index)? {
            out.push(space.state(index));
        }
    }
    Ok(out)
}

/// Report of [`check_monotone_dependence`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneReport {
    pub holds: bool,
    /// Two (latency, bottleneck) value pairs that no single non-decreasing
    /// map can produce. `None` when `holds`, or when the check failed for a
    /// different reason (cost tables not covering the player count).
    pub witness: Option<crate::game::DependenceWitness>,
}

/// Decides whether one non-decreasing map sends every latency value to the
/// corresponding bottleneck value, across all resources and congestions up
/// to the player count.
pub fn check_monotone_dependence(game: &Game) -> MonotoneReport {
    MonotoneReport {
        holds: game.flags().has_monotone_dependence,
        witness: crate::game::monotone_dependence_witness(game, game.n_players()),
    }
}

fn require_flag(ok: bool, flag: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::FlagNotSatisfied { flag })
    }
}

fn certified_pne(game: &Game, state: State) -> Result<State> {
    debug_assert!(
        certify(game, &state, Rational::from_integer(1))?.pass,
        "specialized solver returned a non-equilibrium state"
    );
    Ok(state)
}

/// Equilibrium of a singleton game through its player-specific reduction:
/// each player's cost on a lone resource is
/// `alpha * latency + (1 - alpha) * bottleneck`, a player-specific singleton
/// congestion game solved by insertion dynamics.
pub fn solve_singleton(game: &Game) -> Result<State> {
    require_flag(game.flags().is_singleton, "is_singleton")?;
    let costs = player_specific::mixed_costs(game);
    certified_pne(game, player_specific::solve_player_specific(game, &costs)?)
}

/// Equilibrium of a matroid game whose players all have `alpha` 0 or 1:
/// latency players keep their objective, bottleneck players are treated as
/// minimizing the *sum* of bottleneck costs (sound because a minimum-sum
/// basis also minimizes the maximum), and the resulting player-specific
/// matroid game is solved by insertion dynamics.
pub fn solve_pure_preferences(game: &Game) -> Result<State> {
    require_flag(game.flags().is_matroid, "is_matroid")?;
    require_flag(game.flags().has_pure_preferences, "has_pure_preferences")?;
    let costs = player_specific::pure_preference_costs(game);
    certified_pne(game, player_specific::solve_player_specific(game, &costs)?)
}

/// Equilibrium of a matroid game with monotonically dependent cost curves:
/// solve the classic congestion game over the latency curves alone; under
/// the dependence, minimizing the latency sum also minimizes the bottleneck
/// maximum, so the result is an equilibrium of the mixed game.
pub fn solve_monotone_dependence(game: &Game) -> Result<State> {
    require_flag(game.flags().is_matroid, "is_matroid")?;
    require_flag(
        game.flags().has_monotone_dependence,
        "has_monotone_dependence",
    )?;
    let costs = player_specific::latency_costs(game);
    certified_pne(game, player_specific::solve_player_specific(game, &costs)?)
}

/// Strategy selection for [`solve`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    /// First applicable specialized solver, enumeration as fallback.
    Auto,
    Enumerate,
    Singleton,
    PurePreferences,
    MonotoneDependence,
}

/// Outcome of [`solve`].
#[derive(Debug, Clone)]
pub enum SolveOutcome {
    /// An equilibrium, with its certificate and the route that produced it.
    Found {
        state: State,
        certificate: Certificate,
        method: &'static str,
    },
    /// Exhaustive enumeration proved that no pure Nash equilibrium exists.
    ProvenEmpty,
    /// Neither a specialized route applied nor enumeration fit the cap.
    Inconclusive { reason: String },
}

/// Computes a pure Nash equilibrium, proves nonexistence, or reports that
/// the game is out of reach for the chosen method and cap.
pub fn solve(game: &Game, method: SolveMethod, cap: u128) -> Result<SolveOutcome> {
    let found = |state: State, method: &'static str| -> Result<SolveOutcome> {
        let certificate = certify(game, &state, Rational::from_integer(1))?;
        Ok(SolveOutcome::Found {
            state,
            certificate,
            method,
        })
    };
    match method {
        SolveMethod::Singleton => found(solve_singleton(game)?, "singleton"),
        SolveMethod::PurePreferences => found(solve_pure_preferences(game)?, "pure-pref"),
        SolveMethod::MonotoneDependence => found(solve_monotone_dependence(game)?, "monotone"),
        SolveMethod::Enumerate => match first_pne(game, cap) {
            Ok(Some(state)) => found(state, "enumerate"),
            Ok(None) => Ok(SolveOutcome::ProvenEmpty),
            Err(Error::CapExceeded { required, cap }) => Ok(SolveOutcome::Inconclusive {
                reason: alloc::format!(
                    "state space of {required} states exceeds the cap of {cap}"
                ),
            }),
            Err(other) => Err(other),
        },
        SolveMethod::Auto => {
            let flags = game.flags();
            if flags.is_singleton {
                found(solve_singleton(game)?, "singleton")
            } else if flags.is_matroid && flags.has_pure_preferences {
                found(solve_pure_preferences(game)?, "pure-pref")
            } else if flags.is_matroid && flags.has_monotone_dependence {
                found(solve_monotone_dependence(game)?, "monotone")
            } else {
                solve(game, SolveMethod::Enumerate, cap)
            }
        }
    }
}

fn first_pne(game: &Game, cap: u128) -> Result<Option<State>> {
    let space = game.expanded_space(cap)?;
    let mut ctx = SweepContext::new(game, &space);
    for index in 0..space.count() {
        if ctx.is_pne_at(index)? {
            return Ok(Some(space.state(index)));
        }
    }
    Ok(None)
}

/// The approximate potential functions with provable descent guarantees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PotentialKind {
    /// `sum_r sum_{i<=n_r} (alpha*latency_r(i) + (1-alpha)*bottleneck_r(i))`;
    /// needs alpha-uniform players; beta target `d`.
    Mixed,
    /// `sum_r sum_{i<=n_r} latency_r(i)^2`; needs equal cost curves; beta
    /// target `sqrt(d)`.
    Square,
    /// `sum_r sum_{i<=n_r} latency_r(i)`; needs equal cost curves and
    /// alpha-uniform players; beta target `d / (alpha*(d-1) + 1)`.
    Sum,
    /// The rank-indexed potential of [`dynamics::rank_potential`]; needs a
    /// matroid game with monotone dependence and yields an exact equilibrium
    /// through lazy best responses.
    Rank,
}

/// Route selection for [`approx_solve`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApproxMethod {
    /// Solve the player-specific reduction of a matroid game and certify the
    /// result at `d` (the largest strategy size).
    MatroidRoute,
    /// Descend the given potential by beta-improvement steps until none
    /// remains.
    Potential(PotentialKind),
}

/// Result of [`approx_solve`]: the certificate of the final state, the
/// number of improvement steps performed, and the beta target implied by the
/// method.
#[derive(Debug, Clone)]
pub struct ApproxReport {
    pub certificate: Certificate,
    pub steps: usize,
    pub target: BetaRequest,
}

/// Evaluates one of the potential functions at a state (flag preconditions
/// checked).
pub fn evaluate_potential(game: &Game, kind: PotentialKind, state: &State) -> Result<Rational> {
    let profile = game.congestion(state)?;
    let eval = Evaluator::new(game);
    match kind {
        PotentialKind::Mixed => {
            require_flag(game.flags().is_alpha_uniform, "is_alpha_uniform")?;
            let alpha = game
                .players()
                .first()
                .map(|p| p.alpha)
                .unwrap_or_else(|| Rational::from_integer(1));
            let complement = Rational::from_integer(1) - alpha;
            let mut total = Rational::zero();
            for r in 0..game.n_resources() {
                for x in 1..=profile.count(r) as usize {
                    total += alpha * eval.latency(r, x)? + complement * eval.bottleneck(r, x)?;
                }
            }
            Ok(total)
        }
        PotentialKind::Square => {
            require_flag(game.has_equal_cost_functions(), "equal_cost_functions")?;
            let mut total = Rational::zero();
            for r in 0..game.n_resources() {
                for x in 1..=profile.count(r) as usize {
                    let l = eval.latency(r, x)?;
                    total += l * l;
                }
            }
            Ok(total)
        }
        PotentialKind::Sum => {
            require_flag(game.has_equal_cost_functions(), "equal_cost_functions")?;
            require_flag(game.flags().is_alpha_uniform, "is_alpha_uniform")?;
            let mut total = Rational::zero();
            for r in 0..game.n_resources() {
                for x in 1..=profile.count(r) as usize {
                    total += eval.latency(r, x)?;
                }
            }
            Ok(total)
        }
        PotentialKind::Rank => Ok(Rational::from_integer(
            dynamics::rank_potential(game, state)? as i128,
        )),
    }
}

/// Largest strategy cardinality, at least 1.
fn strategy_degree(game: &Game) -> Rational {
    Rational::from_integer(game.max_strategy_size().max(1) as i128)
}

/// The beta target a method guarantees on a given game.
pub fn beta_target(game: &Game, method: ApproxMethod) -> Result<BetaRequest> {
    let d = strategy_degree(game);
    let one = Rational::from_integer(1);
    match method {
        ApproxMethod::MatroidRoute => {
            require_flag(game.flags().is_matroid, "is_matroid")?;
            Ok(BetaRequest::Value(d))
        }
        ApproxMethod::Potential(PotentialKind::Mixed) => {
            require_flag(game.flags().is_alpha_uniform, "is_alpha_uniform")?;
            Ok(BetaRequest::Value(d))
        }
        ApproxMethod::Potential(PotentialKind::Square) => {
            require_flag(game.has_equal_cost_functions(), "equal_cost_functions")?;
            Ok(BetaRequest::SqrtOf(d))
        }
        ApproxMethod::Potential(PotentialKind::Sum) => {
            require_flag(game.has_equal_cost_functions(), "equal_cost_functions")?;
            require_flag(game.flags().is_alpha_uniform, "is_alpha_uniform")?;
            let alpha = game
                .players()
                .first()
                .map(|p| p.alpha)
                .unwrap_or(one);
            Ok(BetaRequest::Value(d / (alpha * (d - one) + one)))
        }
        ApproxMethod::Potential(PotentialKind::Rank) => {
            require_flag(game.flags().is_matroid, "is_matroid")?;
            require_flag(
                game.flags().has_monotone_dependence,
                "has_monotone_dependence",
            )?;
            Ok(BetaRequest::Value(one))
        }
    }
}

/// Finds a beta-approximate pure Nash equilibrium.
///
/// Potential routes start from `start` (default: the lexicographically first
/// state) and repeatedly apply the first beta-improvement step found
/// (players round-robin, deviations lexicographic) until none exists; the
/// potential strictly decreases along these steps, so termination is
/// guaranteed. The matroid route solves the player-specific reduction
/// instead. The returned certificate is checked against the method's beta
/// target and always passes.
pub fn approx_solve(
    game: &Game,
    method: ApproxMethod,
    start: Option<&State>,
    cap: u128,
) -> Result<ApproxReport> {
    let target = beta_target(game, method)?;
    match method {
        ApproxMethod::MatroidRoute => {
            let costs = player_specific::mixed_costs(game);
            let state = player_specific::solve_player_specific(game, &costs)?;
            let certificate = certify_against(game, &state, target)?;
            Ok(ApproxReport {
                certificate,
                steps: 0,
                target,
            })
        }
        ApproxMethod::Potential(PotentialKind::Rank) => {
            let state = match start {
                Some(s) => s.clone(),
                None => game.expanded_space(cap)?.state(0),
            };
            let n = game.n_players();
            let m = game.n_resources();
            let budget = 2 * n * n * m * m + 8;
            let trace = dynamics::run_dynamics(
                game,
                &state,
                &DynamicsConfig::new(MoveRule::LazyBestResponse, Scheduler::RoundRobin, budget),
            )?;
            if trace.verdict != Verdict::Converged {
                return Err(Error::InternalSolverFailure {
                    detail: "lazy dynamics failed to converge within the potential bound",
                });
            }
            let final_state = trace.final_state();
            let certificate = certify_against(game, &final_state, target)?;
            Ok(ApproxReport {
                certificate,
                steps: trace.steps.len(),
                target,
            })
        }
        ApproxMethod::Potential(kind) => potential_descent(game, kind, target, start, cap),
    }
}

fn potential_descent(
    game: &Game,
    kind: PotentialKind,
    target: BetaRequest,
    start: Option<&State>,
    cap: u128,
) -> Result<ApproxReport> {
    let space = game.expanded_space(cap)?;
    let eval = Evaluator::new(game);
    let n = game.n_players();
    let mut indices: Vec<usize> = match start {
        Some(state) => {
            game.check_state(state)?;
            space
                .indices_of(state)
                .ok_or(Error::InternalSolverFailure {
                    detail: "start state missing from expanded space",
                })?
        }
        None => vec![0; n],
    };
    let mut counts: Vec<u32> = Vec::new();
    let mut steps: usize = 0;
    let mut last_mover = n.saturating_sub(1);
    // The potential strictly decreases along qualifying steps, so the number
    // of steps is bounded by the number of distinct states.
    let step_limit = space.count().saturating_add(8).min(usize::MAX as u128) as usize;
    #[cfg(debug_assertions)]
    let mut last_potential = evaluate_potential(game, kind, &space.state_of(&indices))?;

    'descend: loop {
        counts.clear();
        counts.resize(game.n_resources(), 0);
        for (i, &s) in indices.iter().enumerate() {
            for &r in &space.strategies(i)[s] {
                counts[r] += 1;
            }
        }
        for offset in 1..=n {
            let i = (last_mover + offset) % n;
            let list = space.strategies(i);
            let current = &list[indices[i]];
            let cur_cost = eval.mixed_cost(i, current, &counts)?;
            for (s, cand) in list.iter().enumerate() {
                if s == indices[i] {
                    continue;
                }
                let dev_cost = eval.deviation_cost(i, cand, &counts, current)?;
                let qualifies = match target {
                    BetaRequest::Value(beta) => cur_cost > beta * dev_cost,
                    BetaRequest::SqrtOf(of) => cur_cost * cur_cost > of * dev_cost * dev_cost,
                };
                if qualifies {
                    indices[i] = s;
                    last_mover = i;
                    steps += 1;
                    if steps > step_limit {
                        return Err(Error::InternalSolverFailure {
                            detail: "potential descent exceeded the state-count bound",
                        });
                    }
                    #[cfg(debug_assertions)]
                    {
                        let now = evaluate_potential(game, kind, &space.state_of(&indices))?;
                        debug_assert!(
                            now < last_potential,
                            "beta-improvement step failed to decrease the potential"
                        );
                        last_potential = now;
                    }
                    continue 'descend;
                }
            }
        }
        break;
    }

    let final_state = space.state_of(&indices);
    let certificate = certify_against(game, &final_state, target)?;
    debug_assert!(certificate.pass);
    Ok(ApproxReport {
        certificate,
        steps,
        target,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{CostFunction, MatroidSpace, Player, Resource, StrategySpace};
    use crate::matroid::{Matroid, MatroidKind};
    use crate::rat;

    fn table(values: &[i128]) -> CostFunction {
        CostFunction::Table(values.iter().map(|&v| rat(v, 1)).collect())
    }

    fn resource(name: &str, latency: CostFunction, bottleneck: CostFunction) -> Resource {
        Resource {
            name: name.into(),
            latency,
            bottleneck,
        }
    }

    fn explicit(alpha: Rational, strategies: Vec<ResourceSet>) -> Player {
        Player {
            alpha,
            space: StrategySpace::Explicit(strategies),
        }
    }

    fn two_resource_game() -> Game {
        Game::new(
            vec![
                resource("a", table(&[1, 5]), table(&[1, 5])),
                resource("b", table(&[2, 3]), table(&[2, 3])),
            ],
            vec![
                explicit(rat(1, 1), vec![vec![0], vec![1]]),
                explicit(rat(1, 1), vec![vec![0], vec![1]]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn enumerate_finds_the_two_splits() {
        let game = two_resource_game();
        let pne = enumerate_pne(&game, DEFAULT_STATE_CAP).unwrap();
        assert_eq!(
            pne,
            vec![
                State::new(vec![vec![0], vec![1]]),
                State::new(vec![vec![1], vec![0]]),
            ]
        );
    }

    #[test]
    fn certificates_report_the_binding_player() {
        let game = two_resource_game();
        // Both players on `a`: each pays 5, could pay 2 by moving to `b`.
        let state = State::new(vec![vec![0], vec![0]]);
        let cert = certify(&game, &state, rat(1, 1)).unwrap();
        assert_eq!(cert.beta_achieved, BetaValue::Finite(rat(5, 2)));
        assert!(!cert.pass);
        assert!(!cert.is_pne());
        let (worst_player, deviation) = cert.worst.clone().unwrap();
        assert_eq!(worst_player, 0);
        assert_eq!(deviation, vec![1]);
        // Certification is monotone in beta.
        assert!(certify(&game, &state, rat(5, 2)).unwrap().pass);
        assert!(certify(&game, &state, rat(3, 1)).unwrap().pass);
        assert!(!certify(&game, &state, rat(2, 1)).unwrap().pass);
    }

    #[test]
    fn certify_rejects_beta_below_one() {
        let game = two_resource_game();
        let state = State::new(vec![vec![0], vec![1]]);
        assert!(matches!(
            certify(&game, &state, rat(1, 2)),
            Err(Error::BetaBelowOne)
        ));
    }

    #[test]
    fn zero_cost_conventions() {
        // Current cost 0 with best deviation 0: ratio 1. Positive cost with
        // free deviation: infinite.
        let game = Game::new(
            vec![
                resource("free", table(&[0, 0]), table(&[0, 0])),
                resource("paid", table(&[3, 3]), table(&[3, 3])),
            ],
            vec![explicit(rat(1, 1), vec![vec![0], vec![1]])],
        )
        .unwrap();
        let on_free = State::new(vec![vec![0]]);
        let cert = certify(&game, &on_free, rat(1, 1)).unwrap();
        assert_eq!(cert.beta_achieved, BetaValue::Finite(rat(1, 1)));
        assert!(cert.pass);
        let on_paid = State::new(vec![vec![1]]);
        let cert = certify(&game, &on_paid, rat(100, 1)).unwrap();
        assert_eq!(cert.beta_achieved, BetaValue::Infinite);
        assert!(!cert.pass);
    }

    #[test]
    fn singleton_solver_matches_enumeration() {
        let game = two_resource_game();
        let state = solve_singleton(&game).unwrap();
        let all = enumerate_pne(&game, DEFAULT_STATE_CAP).unwrap();
        assert!(all.contains(&state));
    }

    #[test]
    fn one_player_takes_min_cost_resource() {
        let game = Game::new(
            vec![
                resource("a", table(&[4]), table(&[4])),
                resource("b", table(&[2]), table(&[2])),
            ],
            vec![explicit(rat(1, 2), vec![vec![0], vec![1]])],
        )
        .unwrap();
        let state = solve_singleton(&game).unwrap();
        assert_eq!(state.choice(0), &vec![1]);
    }

    #[test]
    fn solver_preconditions_are_enforced() {
        let game = Game::new(
            vec![
                resource("a", table(&[1, 2]), table(&[1, 2])),
                resource("b", table(&[1, 2]), table(&[1, 2])),
            ],
            vec![
                explicit(rat(1, 2), vec![vec![0, 1]]),
                explicit(rat(1, 2), vec![vec![0]]),
            ],
        )
        .unwrap();
        assert!(matches!(
            solve_singleton(&game),
            Err(Error::FlagNotSatisfied { flag: "is_singleton" })
        ));
    }

    #[test]
    fn monotone_dependence_report_has_witness() {
        let game = Game::new(
            vec![resource("a", table(&[1, 1]), table(&[3, 4]))],
            vec![
                explicit(rat(1, 2), vec![vec![0]]),
                explicit(rat(1, 2), vec![vec![0]]),
            ],
        )
        .unwrap();
        let report = check_monotone_dependence(&game);
        assert!(!report.holds);
        let ((l1, e1), (l2, e2)) = report.witness.unwrap();
        assert_eq!(l1, l2);
        assert_ne!(e1, e2);
    }

    #[test]
    fn matroid_game_solvers_agree_with_enumeration() {
        // Uniform rank-2 matroid over three resources, two players, e = l.
        let make_matroid =
            || Matroid::new(3, MatroidKind::Uniform { rank: 2 }).unwrap();
        let game = Game::new(
            vec![
                resource("a", table(&[1, 5]), table(&[1, 5])),
                resource("b", table(&[2, 3]), table(&[2, 3])),
                resource("c", table(&[4, 9]), table(&[4, 9])),
            ],
            vec![
                Player {
                    alpha: rat(1, 1),
                    space: StrategySpace::Matroid(MatroidSpace {
                        ground: vec![0, 1, 2],
                        matroid: make_matroid(),
                    }),
                },
                Player {
                    alpha: rat(0, 1),
                    space: StrategySpace::Matroid(MatroidSpace {
                        ground: vec![0, 1, 2],
                        matroid: make_matroid(),
                    }),
                },
            ],
        )
        .unwrap();
        let all = enumerate_pne(&game, DEFAULT_STATE_CAP).unwrap();
        assert!(!all.is_empty());
        let pp = solve_pure_preferences(&game).unwrap();
        assert!(all.contains(&pp));
        let md = solve_monotone_dependence(&game).unwrap();
        assert!(all.contains(&md));
    }

    #[test]
    fn solve_auto_picks_specialized_route() {
        let game = two_resource_game();
        match solve(&game, SolveMethod::Auto, DEFAULT_STATE_CAP).unwrap() {
            SolveOutcome::Found {
                certificate,
                method,
                ..
            } => {
                assert_eq!(method, "singleton");
                assert!(certificate.pass);
            }
            other => panic!("expected equilibrium, got {other:?}"),
        }
    }

    #[test]
    fn solve_reports_cap_exhaustion() {
        let game = two_resource_game();
        match solve(&game, SolveMethod::Enumerate, 1).unwrap() {
            SolveOutcome::Inconclusive { reason } => {
                assert!(reason.contains("cap"), "{reason}");
            }
            other => panic!("expected inconclusive, got {other:?}"),
        }
    }

    #[test]
    fn d_equal_one_collapses_every_target_to_exact() {
        let game = two_resource_game();
        for method in [
            ApproxMethod::MatroidRoute,
            ApproxMethod::Potential(PotentialKind::Mixed),
            ApproxMethod::Potential(PotentialKind::Sum),
            ApproxMethod::Potential(PotentialKind::Rank),
        ] {
            let report = approx_solve(&game, method, None, DEFAULT_STATE_CAP).unwrap();
            assert!(report.certificate.pass, "{method:?}");
            assert!(report.certificate.is_pne(), "{method:?}");
        }
        let report = approx_solve(
            &game,
            ApproxMethod::Potential(PotentialKind::Square),
            None,
            DEFAULT_STATE_CAP,
        )
        .unwrap();
        assert!(report.certificate.pass);
        assert!(report.certificate.is_pne());
    }

    #[test]
    fn approx_applicability_is_checked() {
        // Non-uniform alphas: the mixed potential does not apply.
        let game = Game::new(
            vec![
                resource("a", table(&[1, 2]), table(&[5, 6])),
                resource("b", table(&[1, 2]), table(&[5, 6])),
            ],
            vec![
                explicit(rat(1, 1), vec![vec![0], vec![1]]),
                explicit(rat(1, 3), vec![vec![0], vec![1]]),
            ],
        )
        .unwrap();
        assert!(matches!(
            approx_solve(
                &game,
                ApproxMethod::Potential(PotentialKind::Mixed),
                None,
                DEFAULT_STATE_CAP
            ),
            Err(Error::FlagNotSatisfied {
                flag: "is_alpha_uniform"
            })
        ));
        // Unequal cost curves: square potential does not apply.
        assert!(matches!(
            approx_solve(
                &game,
                ApproxMethod::Potential(PotentialKind::Square),
                None,
                DEFAULT_STATE_CAP
            ),
            Err(Error::FlagNotSatisfied {
                flag: "equal_cost_functions"
            })
        ));
    }

    #[test]
    fn potential_descent_certifies_at_target() {
        // Two players with 2-resource strategies, alpha-uniform, e = l.
        let game = Game::new(
            vec![
                resource("a", table(&[2, 4]), table(&[2, 4])),
                resource("b", table(&[3, 6]), table(&[3, 6])),
                resource("c", table(&[1, 8]), table(&[1, 8])),
            ],
            vec![
                explicit(rat(1, 2), vec![vec![0, 1], vec![1, 2]]),
                explicit(rat(1, 2), vec![vec![0, 2], vec![0, 1]]),
            ],
        )
        .unwrap();
        for kind in [PotentialKind::Mixed, PotentialKind::Square, PotentialKind::Sum] {
            let report = approx_solve(
                &game,
                ApproxMethod::Potential(kind),
                None,
                DEFAULT_STATE_CAP,
            )
            .unwrap();
            assert!(report.certificate.pass, "{kind:?}");
        }
    }

    #[test]
    fn beta_values_order_with_infinity_on_top() {
        let one = BetaValue::Finite(rat(1, 1));
        let three = BetaValue::Finite(rat(3, 1));
        assert!(one < three);
        assert!(three < BetaValue::Infinite);
        assert_eq!(
            BetaValue::Infinite.cmp(&BetaValue::Infinite),
            core::cmp::Ordering::Equal
        );
    }
}
