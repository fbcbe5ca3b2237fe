//! Game representation, states, and exact cost evaluation.
//!
//! A [`Game`] couples resources (each with a latency and a bottleneck cost
//! curve) with players (each with a preference value `alpha` and a strategy
//! space). A [`State`] picks one strategy per player; costs are evaluated
//! exactly in rational arithmetic from the induced [`CongestionProfile`].
//!
//! Games are immutable after construction and safe to share across threads;
//! every operation here is a pure function of its inputs. Construction only
//! rejects structurally unusable input (dangling resource indices, malformed
//! matroids); semantic invariants (monotone cost tables, nonempty strategies,
//! preference values in `[0,1]`, ...) are reported by [`Game::validate`] as
//! data rather than faults, so that diagnostic tooling can load and inspect
//! broken instances.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::matroid::{Matroid, DEFAULT_BASIS_ENUMERATION_CAP};
use crate::rational::{format_rational, is_cost_value};
use crate::{Error, Rational, Result};

/// Dense index of a resource within a game.
pub type ResourceId = usize;

/// A set of resources, kept sorted. Canonical sets are duplicate-free;
/// duplicates can only enter through raw strategy input and are reported by
/// [`Game::validate`].
pub type ResourceSet = Vec<ResourceId>;

/// A non-decreasing, non-negative map from congestion (1-based) to cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CostFunction {
    /// `a * x + b`.
    Linear { a: Rational, b: Rational },
    /// Explicit values for congestion `1..=values.len()`. Congestion beyond
    /// the table is an error, not an extension: mis-sized instances should
    /// fail loudly.
    Table(Vec<Rational>),
}

impl CostFunction {
    /// Cost at congestion `x >= 1`, or `None` beyond a table.
    pub fn eval(&self, x: usize) -> Option<Rational> {
        match self {
            CostFunction::Linear { a, b } => {
                Some(*a * Rational::from_integer(x as i128) + *b)
            }
            CostFunction::Table(values) => values.get(x.checked_sub(1)?).copied(),
        }
    }

    /// Constant zero cost function.
    pub fn zero() -> CostFunction {
        CostFunction::Linear {
            a: Rational::zero(),
            b: Rational::zero(),
        }
    }

    /// `a * x`.
    pub fn scaled(a: Rational) -> CostFunction {
        CostFunction::Linear {
            a,
            b: Rational::zero(),
        }
    }
}

/// A named resource with its two cost curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resource {
    pub name: String,
    pub latency: CostFunction,
    pub bottleneck: CostFunction,
}

/// A player's strategy space: an explicit list of resource sets, or the
/// bases of a matroid over a subset of the game's resources.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrategySpace {
    Explicit(Vec<ResourceSet>),
    Matroid(MatroidSpace),
}

/// Matroid strategy space. The matroid is defined over positions
/// `0..ground.len()`; `ground[p]` maps position `p` to a resource.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidSpace {
    pub ground: Vec<ResourceId>,
    pub matroid: Matroid,
}

impl MatroidSpace {
    /// Translates a basis given as ground positions into a resource set.
    pub fn to_resources(&self, positions: &[usize]) -> ResourceSet {
        let mut set: ResourceSet = positions.iter().map(|&p| self.ground[p]).collect();
        set.sort_unstable();
        set
    }

    /// Translates a sorted resource set into sorted ground positions, if all
    /// members belong to the ground set.
    pub fn to_positions(&self, set: &[ResourceId]) -> Option<Vec<usize>> {
        let mut positions = Vec::with_capacity(set.len());
        for r in set {
            positions.push(self.ground.iter().position(|g| g == r)?);
        }
        positions.sort_unstable();
        Some(positions)
    }
}

/// A player: preference value and strategy space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Player {
    /// Weight of the latency sum in the player's cost; `1 - alpha` weighs the
    /// bottleneck maximum.
    pub alpha: Rational,
    pub space: StrategySpace,
}

/// Structural properties derived from game content (never trusted from
/// input).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GameFlags {
    /// Every strategy of every player has exactly one resource.
    pub is_singleton: bool,
    /// Every strategy space forms the bases of a matroid. Explicit spaces are
    /// recognized by checking the basis-exchange property (up to the ground
    /// cap; larger explicit spaces are conservatively treated as non-matroid).
    pub is_matroid: bool,
    /// Every `alpha` is 0 or 1.
    pub has_pure_preferences: bool,
    /// All players share one `alpha`.
    pub is_alpha_uniform: bool,
    /// One non-decreasing map sends every latency value to the corresponding
    /// bottleneck value across all resources and congestions.
    pub has_monotone_dependence: bool,
}

/// A congestion game with mixed objectives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    resources: Vec<Resource>,
    players: Vec<Player>,
    flags: GameFlags,
    by_name: BTreeMap<String, ResourceId>,
}

/// One chosen strategy per player, stored as canonical (sorted,
/// duplicate-free) resource sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct State {
    choices: Vec<ResourceSet>,
}

impl State {
    /// Builds a state from per-player resource sets (canonicalized).
    pub fn new(choices: Vec<ResourceSet>) -> State {
        State {
            choices: choices.into_iter().map(canonical_set).collect(),
        }
    }

    /// Builds a state from per-player strategy indices: positions in the
    /// player's explicit strategy list, or in the lexicographic basis
    /// enumeration for matroid players.
    pub fn from_indices(game: &Game, indices: &[usize]) -> Result<State> {
        if indices.len() != game.players.len() {
            return Err(Error::StateArity {
                expected: game.players.len(),
                got: indices.len(),
            });
        }
        let mut choices = Vec::with_capacity(indices.len());
        for (i, (player, &idx)) in game.players.iter().zip(indices).enumerate() {
            let list = game.strategy_list(i, player)?;
            let set = list.get(idx).ok_or(Error::StrategyIndexOutOfRange {
                player: i + 1,
                index: idx,
                count: list.len(),
            })?;
            choices.push(set.clone());
        }
        Ok(State { choices })
    }

    pub fn choices(&self) -> &[ResourceSet] {
        &self.choices
    }

    /// The strategy chosen by player `i` (0-based).
    pub fn choice(&self, i: usize) -> &ResourceSet {
        &self.choices[i]
    }

    /// A copy with player `i` switched to `set`.
    pub fn with_choice(&self, i: usize, set: ResourceSet) -> State {
        let mut choices = self.choices.clone();
        choices[i] = canonical_set(set);
        State { choices }
    }
}

/// Congestion counts per resource for one state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongestionProfile {
    counts: Vec<u32>,
}

impl CongestionProfile {
    pub fn count(&self, r: ResourceId) -> u32 {
        self.counts[r]
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Sum of all counts; equals the total size of all chosen strategies.
    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }
}

/// One broken invariant, as data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Offending player (1-based), when applicable.
    pub player: Option<usize>,
    /// Offending resource name, when applicable.
    pub resource: Option<String>,
    /// Short rule identifier, e.g. `non-monotone-cost`.
    pub rule: &'static str,
    pub detail: String,
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "[{}]", self.rule)?;
        if let Some(p) = self.player {
            write!(f, " player {p}")?;
        }
        if let Some(r) = &self.resource {
            write!(f, " resource `{r}`")?;
        }
        write!(f, ": {}", self.detail)
    }
}

impl Game {
    /// Builds a game, rejecting structurally unusable input: duplicate
    /// resource names, strategy or ground entries referring to resources that
    /// do not exist, and malformed matroids. Semantic invariants are left to
    /// [`Game::validate`].
    pub fn new(resources: Vec<Resource>, players: Vec<Player>) -> Result<Game> {
        let mut by_name = BTreeMap::new();
        for (r, resource) in resources.iter().enumerate() {
            if by_name.insert(resource.name.clone(), r).is_some() {
                return Err(Error::MalformedMatroid {
                    reason: format!("duplicate resource name `{}`", resource.name),
                });
            }
        }
        let m = resources.len();
        let mut players = players;
        for player in &mut players {
            match &mut player.space {
                StrategySpace::Explicit(strategies) => {
                    for set in strategies.iter_mut() {
                        set.sort_unstable();
                        if let Some(&r) = set.iter().find(|&&r| r >= m) {
                            return Err(Error::ResourceOutOfRange { index: r, count: m });
                        }
                    }
                }
                StrategySpace::Matroid(space) => {
                    if let Some(&r) = space.ground.iter().find(|&&r| r >= m) {
                        return Err(Error::ResourceOutOfRange { index: r, count: m });
                    }
                    if space.matroid.ground_size() != space.ground.len() {
                        return Err(Error::MalformedMatroid {
                            reason: format!(
                                "matroid over {} elements but ground lists {} resources",
                                space.matroid.ground_size(),
                                space.ground.len()
                            ),
                        });
                    }
                }
            }
        }
        let mut game = Game {
            resources,
            players,
            flags: GameFlags::default(),
            by_name,
        };
        game.flags = game.derive_flags();
        Ok(game)
    }

    pub fn resources(&self) -> &[Resource] {
        &self.resources
    }

    pub fn players(&self) -> &[Player] {
        &self.players
    }

    pub fn n_players(&self) -> usize {
        self.players.len()
    }

    pub fn n_resources(&self) -> usize {
        self.resources.len()
    }

    pub fn flags(&self) -> GameFlags {
        self.flags
    }

    pub fn resource_index(&self, name: &str) -> Option<ResourceId> {
        self.by_name.get(name).copied()
    }

    pub fn resource_name(&self, r: ResourceId) -> &str {
        &self.resources[r].name
    }

    /// Renders a resource set as `r4+r5`.
    pub fn format_set(&self, set: &[ResourceId]) -> String {
        if set.is_empty() {
            return "-".to_string();
        }
        let mut out = String::new();
        for (k, &r) in set.iter().enumerate() {
            if k > 0 {
                out.push('+');
            }
            out.push_str(self.resource_name(r));
        }
        out
    }

    /// True iff some player has `alpha = 0` (pure bottleneck objective).
    pub fn has_zero_alpha_player(&self) -> bool {
        self.players.iter().any(|p| p.alpha.is_zero())
    }

    /// True iff latency and bottleneck cost curves agree on every resource
    /// for every congestion up to the player count.
    pub fn has_equal_cost_functions(&self) -> bool {
        let n = self.n_players();
        self.resources.iter().all(|res| {
            (1..=n).all(|x| match (res.latency.eval(x), res.bottleneck.eval(x)) {
                (Some(l), Some(e)) => l == e,
                _ => false,
            })
        })
    }

    /// Largest strategy cardinality over all players and strategies.
    pub fn max_strategy_size(&self) -> usize {
        self.players
            .iter()
            .map(|p| match &p.space {
                StrategySpace::Explicit(list) => {
                    list.iter().map(canonical_len).max().unwrap_or(0)
                }
                StrategySpace::Matroid(space) => space.matroid.rank(),
            })
            .max()
            .unwrap_or(0)
    }

    /// Checks every type invariant and returns the violations found; an empty
    /// list means the game is well-formed.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.n_players();
        for res in &self.resources {
            for (curve, label) in [(&res.latency, "latency"), (&res.bottleneck, "bottleneck")] {
                match curve {
                    CostFunction::Linear { a, b } => {
                        if !is_cost_value(a) || !is_cost_value(b) {
                            out.push(Violation {
                                player: None,
                                resource: Some(res.name.clone()),
                                rule: "negative-cost",
                                detail: format!(
                                    "{label} cost {}x+{} takes negative values",
                                    format_rational(a),
                                    format_rational(b)
                                ),
                            });
                        }
                    }
                    CostFunction::Table(values) => {
                        if values.is_empty() {
                            out.push(Violation {
                                player: None,
                                resource: Some(res.name.clone()),
                                rule: "empty-table",
                                detail: format!("{label} table has no entries"),
                            });
                        }
                        if values.iter().any(|v| !is_cost_value(v)) {
                            out.push(Violation {
                                player: None,
                                resource: Some(res.name.clone()),
                                rule: "negative-cost",
                                detail: format!("{label} table contains a negative value"),
                            });
                        }
                        if values.windows(2).any(|w| w[0] > w[1]) {
                            out.push(Violation {
                                player: None,
                                resource: Some(res.name.clone()),
                                rule: "non-monotone-cost",
                                detail: format!("{label} table is not non-decreasing"),
                            });
                        }
                        if values.len() < n {
                            out.push(Violation {
                                player: None,
                                resource: Some(res.name.clone()),
                                rule: "table-too-short",
                                detail: format!(
                                    "{label} table has {} entries for {} players",
                                    values.len(),
                                    n
                                ),
                            });
                        }
                    }
                }
            }
        }
        for (i, player) in self.players.iter().enumerate() {
            let id = i + 1;
            if player.alpha < Rational::zero() || player.alpha > Rational::from_integer(1) {
                out.push(Violation {
                    player: Some(id),
                    resource: None,
                    rule: "alpha-out-of-range",
                    detail: format!("alpha = {}", format_rational(&player.alpha)),
                });
            }
            match &player.space {
                StrategySpace::Explicit(list) => {
                    if list.is_empty() {
                        out.push(Violation {
                            player: Some(id),
                            resource: None,
                            rule: "empty-strategy-space",
                            detail: "explicit strategy list is empty".into(),
                        });
                    }
                    let mut seen: Vec<ResourceSet> = Vec::new();
                    for set in list {
                        if set.is_empty() {
                            out.push(Violation {
                                player: Some(id),
                                resource: None,
                                rule: "empty-strategy",
                                detail: "a strategy allocates no resources".into(),
                            });
                        }
                        if set.windows(2).any(|w| w[0] == w[1]) {
                            out.push(Violation {
                                player: Some(id),
                                resource: None,
                                rule: "duplicate-resource-in-strategy",
                                detail: format!(
                                    "strategy {} repeats a resource",
                                    self.format_set(set)
                                ),
                            });
                        }
                        let canon = canonical_set(set.clone());
                        if seen.contains(&canon) {
                            out.push(Violation {
                                player: Some(id),
                                resource: None,
                                rule: "duplicate-strategy",
                                detail: format!(
                                    "strategy {} listed twice",
                                    self.format_set(&canon)
                                ),
                            });
                        }
                        seen.push(canon);
                    }
                }
                StrategySpace::Matroid(space) => {
                    if space.matroid.rank() == 0 {
                        out.push(Violation {
                            player: Some(id),
                            resource: None,
                            rule: "empty-strategy",
                            detail: "matroid of rank 0: the only basis is empty".into(),
                        });
                    }
                    let mut ground = space.ground.clone();
                    ground.sort_unstable();
                    if ground.windows(2).any(|w| w[0] == w[1]) {
                        out.push(Violation {
                            player: Some(id),
                            resource: None,
                            rule: "duplicate-resource-in-ground",
                            detail: "matroid ground lists a resource twice".into(),
                        });
                    }
                }
            }
        }
        out
    }

    /// Canonical strategy list of player `i`: explicit strategies
    /// (deduplicated, in input order) or matroid bases in lexicographic
    /// enumeration order. This is the order state CSV indices refer to.
    pub fn player_strategies(&self, i: usize) -> Result<Vec<ResourceSet>> {
        self.strategy_list(i, &self.players[i])
    }

    /// Canonical strategy list of a player: explicit strategies
    /// (deduplicated, in input order) or enumerated matroid bases.
    pub(crate) fn strategy_list(&self, _i: usize, player: &Player) -> Result<Vec<ResourceSet>> {
        match &player.space {
            StrategySpace::Explicit(list) => {
                let mut out: Vec<ResourceSet> = Vec::with_capacity(list.len());
                for set in list {
                    let canon = canonical_set(set.clone());
                    if !out.contains(&canon) {
                        out.push(canon);
                    }
                }
                Ok(out)
            }
            StrategySpace::Matroid(space) => {
                let bases = space.matroid.enumerate_bases(DEFAULT_BASIS_ENUMERATION_CAP)?;
                Ok(bases.iter().map(|b| space.to_resources(b)).collect())
            }
        }
    }

    /// Verifies that `state` has one valid strategy per player.
    pub fn check_state(&self, state: &State) -> Result<()> {
        if state.choices.len() != self.players.len() {
            return Err(Error::StateArity {
                expected: self.players.len(),
                got: state.choices.len(),
            });
        }
        for (i, (player, choice)) in self.players.iter().zip(&state.choices).enumerate() {
            if let Some(&r) = choice.iter().find(|&&r| r >= self.resources.len()) {
                return Err(Error::ResourceOutOfRange {
                    index: r,
                    count: self.resources.len(),
                });
            }
            match &player.space {
                StrategySpace::Explicit(list) => {
                    if !list.iter().any(|s| &canonical_set(s.clone()) == choice) {
                        return Err(Error::ChoiceNotInSpace { player: i + 1 });
                    }
                }
                StrategySpace::Matroid(space) => {
                    let positions = space
                        .to_positions(choice)
                        .ok_or(Error::ChoiceNotABasis { player: i + 1 })?;
                    if positions.len() != choice.len()
                        || !space.matroid.is_basis(&positions)?
                    {
                        return Err(Error::ChoiceNotABasis { player: i + 1 });
                    }
                }
            }
        }
        Ok(())
    }

    /// Congestion profile of a valid state: `count(r)` is the number of
    /// players whose chosen strategy contains `r`.
    pub fn congestion(&self, state: &State) -> Result<CongestionProfile> {
        self.check_state(state)?;
        let mut counts = vec![0u32; self.resources.len()];
        for choice in &state.choices {
            for &r in choice {
                counts[r] += 1;
            }
        }
        Ok(CongestionProfile { counts })
    }

    /// Exact cost of player `i` (0-based) in `state`:
    /// `alpha * latency_sum + (1 - alpha) * bottleneck_max`.
    pub fn player_cost(&self, state: &State, i: usize) -> Result<Rational> {
        let profile = self.congestion(state)?;
        let eval = Evaluator::new(self);
        eval.mixed_cost(i, &state.choices[i], profile.counts())
    }

    /// Sum of latency costs over player `i`'s allocated resources.
    pub fn latency_sum(&self, state: &State, i: usize) -> Result<Rational> {
        let profile = self.congestion(state)?;
        let eval = Evaluator::new(self);
        eval.latency_sum(&state.choices[i], profile.counts())
    }

    /// Maximum bottleneck cost over player `i`'s allocated resources.
    pub fn bottleneck_max(&self, state: &State, i: usize) -> Result<Rational> {
        let profile = self.congestion(state)?;
        let eval = Evaluator::new(self);
        eval.bottleneck_max(&state.choices[i], profile.counts())
    }

    /// Expands every strategy space into an explicit list and checks that the
    /// product of list sizes stays within `cap`.
    pub fn expanded_space(&self, cap: u128) -> Result<ExpandedSpace> {
        let mut strategies = Vec::with_capacity(self.players.len());
        let mut count: u128 = 1;
        for (i, player) in self.players.iter().enumerate() {
            let mut list = self.strategy_list(i, player)?;
            list.sort();
            count = count.saturating_mul(list.len() as u128);
            strategies.push(list);
        }
        if count > cap {
            return Err(Error::CapExceeded {
                required: count,
                cap,
            });
        }
        Ok(ExpandedSpace { strategies, count })
    }

    fn derive_flags(&self) -> GameFlags {
        let n = self.n_players();
        let is_singleton = self.players.iter().all(|p| match &p.space {
            StrategySpace::Explicit(list) => {
                !list.is_empty() && list.iter().all(|s| canonical_len(s) == 1)
            }
            StrategySpace::Matroid(space) => space.matroid.rank() == 1,
        });
        let is_matroid = self.players.iter().all(|p| match &p.space {
            StrategySpace::Matroid(_) => true,
            StrategySpace::Explicit(list) => explicit_space_is_matroid(list),
        });
        let has_pure_preferences = self
            .players
            .iter()
            .all(|p| p.alpha.is_zero() || p.alpha == Rational::from_integer(1));
        let is_alpha_uniform = self
            .players
            .windows(2)
            .all(|w| w[0].alpha == w[1].alpha);
        let has_monotone_dependence = monotone_dependence_witness(self, n).is_none()
            && self.all_tables_cover(n);
        GameFlags {
            is_singleton,
            is_matroid,
            has_pure_preferences,
            is_alpha_uniform,
            has_monotone_dependence,
        }
    }

    fn all_tables_cover(&self, n: usize) -> bool {
        self.resources.iter().all(|res| {
            res.latency.eval(n.max(1)).is_some() && res.bottleneck.eval(n.max(1)).is_some()
        })
    }
}

/// A violating pair of (latency, bottleneck) value pairs: two congestion
/// points whose latency/bottleneck values cannot come from one non-decreasing
/// map.
pub type DependenceWitness = ((Rational, Rational), (Rational, Rational));

/// Searches all `(latency, bottleneck)` value pairs for a witness that no
/// single non-decreasing map explains them. `None` means the dependence is
/// monotone.
pub(crate) fn monotone_dependence_witness(game: &Game, n: usize) -> Option<DependenceWitness> {
    let mut pairs: Vec<(Rational, Rational)> = Vec::new();
    for res in game.resources() {
        for x in 1..=n.max(1) {
            let l = res.latency.eval(x)?;
            let e = res.bottleneck.eval(x)?;
            pairs.push((l, e));
        }
    }
    pairs.sort();
    pairs.dedup();
    for w in pairs.windows(2) {
        let ((l1, e1), (l2, e2)) = (w[0], w[1]);
        if l1 == l2 && e1 != e2 {
            return Some(((l1, e1), (l2, e2)));
        }
        if l1 < l2 && e1 > e2 {
            return Some(((l1, e1), (l2, e2)));
        }
    }
    None
}

/// True iff an explicit strategy list forms the bases of a matroid, verified
/// through the basis-exchange property. Lists whose ground set exceeds the
/// exchange-check cap are conservatively rejected.
fn explicit_space_is_matroid(list: &[ResourceSet]) -> bool {
    if list.is_empty() {
        return false;
    }
    let mut canon: Vec<ResourceSet> = list.iter().map(|s| canonical_set(s.clone())).collect();
    canon.sort();
    canon.dedup();
    let size = canon[0].len();
    if size == 0 || canon.iter().any(|s| s.len() != size) {
        return false;
    }
    let mut ground: Vec<ResourceId> = canon.iter().flatten().copied().collect();
    ground.sort_unstable();
    ground.dedup();
    if ground.len() > crate::matroid::EXCHANGE_CHECK_CAP {
        return false;
    }
    let as_positions: Vec<Vec<usize>> = canon
        .iter()
        .map(|s| {
            s.iter()
                .map(|r| ground.binary_search(r).unwrap())
                .collect()
        })
        .collect();
    Matroid::new(
        ground.len(),
        crate::matroid::MatroidKind::ExplicitBases(as_positions),
    )
    .is_ok()
}

/// Every strategy space expanded to an explicit list, with the total state
/// count. Strategy lists are sorted lexicographically, so state index 0 is
/// the lexicographically first state.
#[derive(Debug, Clone)]
pub struct ExpandedSpace {
    strategies: Vec<Vec<ResourceSet>>,
    count: u128,
}

impl ExpandedSpace {
    pub fn count(&self) -> u128 {
        self.count
    }

    pub fn per_player(&self) -> &[Vec<ResourceSet>] {
        &self.strategies
    }

    pub fn strategies(&self, i: usize) -> &[ResourceSet] {
        &self.strategies[i]
    }

    /// Decodes a state index into per-player strategy indices (mixed radix,
    /// last player fastest).
    pub fn decode(&self, index: u128, out: &mut Vec<usize>) {
        out.clear();
        out.resize(self.strategies.len(), 0);
        let mut rest = index;
        for i in (0..self.strategies.len()).rev() {
            let len = self.strategies[i].len() as u128;
            out[i] = (rest % len) as usize;
            rest /= len;
        }
    }

    /// The state at `index`.
    pub fn state(&self, index: u128) -> State {
        let mut idxs = Vec::new();
        self.decode(index, &mut idxs);
        State {
            choices: idxs
                .iter()
                .enumerate()
                .map(|(i, &s)| self.strategies[i][s].clone())
                .collect(),
        }
    }

    /// Builds a state from per-player positions in the expanded lists.
    pub fn state_of(&self, indices: &[usize]) -> State {
        State {
            choices: indices
                .iter()
                .enumerate()
                .map(|(i, &s)| self.strategies[i][s].clone())
                .collect(),
        }
    }

    /// Finds the expanded indices of a state's choices.
    pub fn indices_of(&self, state: &State) -> Option<Vec<usize>> {
        state
            .choices
            .iter()
            .enumerate()
            .map(|(i, c)| self.strategies[i].iter().position(|s| s == c))
            .collect()
    }
}

pub(crate) fn canonical_set(mut set: ResourceSet) -> ResourceSet {
    set.sort_unstable();
    set.dedup();
    set
}

fn canonical_len(set: &ResourceSet) -> usize {
    // Sets are stored sorted; count distinct entries.
    let mut len = 0;
    let mut last: Option<ResourceId> = None;
    for &r in set {
        if last != Some(r) {
            len += 1;
            last = Some(r);
        }
    }
    len
}

/// Precomputed cost tables for fast repeated evaluation.
///
/// Entries are `None` where a table does not cover the congestion; touching
/// such an entry yields [`Error::CongestionBeyondTable`].
pub(crate) struct Evaluator {
    pub alpha: Vec<Rational>,
    pub complement: Vec<Rational>,
    lat: Vec<Vec<Option<Rational>>>,
    bot: Vec<Vec<Option<Rational>>>,
    names: Vec<String>,
}

impl Evaluator {
    pub fn new(game: &Game) -> Evaluator {
        let n = game.n_players().max(1);
        let lat = game
            .resources
            .iter()
            .map(|res| (1..=n).map(|x| res.latency.eval(x)).collect())
            .collect();
        let bot = game
            .resources
            .iter()
            .map(|res| (1..=n).map(|x| res.bottleneck.eval(x)).collect())
            .collect();
        Evaluator {
            alpha: game.players.iter().map(|p| p.alpha).collect(),
            complement: game
                .players
                .iter()
                .map(|p| Rational::from_integer(1) - p.alpha)
                .collect(),
            lat,
            bot,
            names: game.resources.iter().map(|r| r.name.clone()).collect(),
        }
    }

    fn beyond(&self, r: ResourceId, x: usize) -> Error {
        Error::CongestionBeyondTable {
            resource: self.names[r].clone(),
            congestion: x,
            len: self.lat[r].len(),
        }
    }

    #[inline]
    pub fn latency(&self, r: ResourceId, x: usize) -> Result<Rational> {
        self.lat[r]
            .get(x - 1)
            .copied()
            .flatten()
            .ok_or_else(|| self.beyond(r, x))
    }

    #[inline]
    pub fn bottleneck(&self, r: ResourceId, x: usize) -> Result<Rational> {
        self.bot[r]
            .get(x - 1)
            .copied()
            .flatten()
            .ok_or_else(|| self.beyond(r, x))
    }

    /// Fills `counts` with the congestion profile of `choices`.
    pub fn counts_into(&self, choices: &[ResourceSet], counts: &mut Vec<u32>) {
        counts.clear();
        counts.resize(self.lat.len(), 0);
        for choice in choices {
            let mut last = usize::MAX;
            for &r in choice {
                if r != last {
                    counts[r] += 1;
                    last = r;
                }
            }
        }
    }

    pub fn latency_sum(&self, set: &[ResourceId], counts: &[u32]) -> Result<Rational> {
        let mut sum = Rational::zero();
        let mut last = usize::MAX;
        for &r in set {
            if r == last {
                continue;
            }
            last = r;
            sum += self.latency(r, counts[r] as usize)?;
        }
        Ok(sum)
    }

    pub fn bottleneck_max(&self, set: &[ResourceId], counts: &[u32]) -> Result<Rational> {
        let mut max = Rational::zero();
        let mut last = usize::MAX;
        for &r in set {
            if r == last {
                continue;
            }
            last = r;
            let v = self.bottleneck(r, counts[r] as usize)?;
            if v > max {
                max = v;
            }
        }
        Ok(max)
    }

    /// Mixed cost of player `i` holding `set` under the given congestion.
    pub fn mixed_cost(&self, i: usize, set: &[ResourceId], counts: &[u32]) -> Result<Rational> {
        let mut sum = Rational::zero();
        let mut max = Rational::zero();
        let mut last = usize::MAX;
        for &r in set {
            if r == last {
                continue;
            }
            last = r;
            let x = counts[r] as usize;
            sum += self.latency(r, x)?;
            let e = self.bottleneck(r, x)?;
            if e > max {
                max = e;
            }
        }
        Ok(self.alpha[i] * sum + self.complement[i] * max)
    }

    /// Mixed cost of player `i` if she deviated to `set` while `counts` is
    /// the profile of the current state in which she holds `current`
    /// (sorted): resources she does not currently use gain one unit of
    /// congestion.
    pub fn deviation_cost(
        &self,
        i: usize,
        set: &[ResourceId],
        counts: &[u32],
        current: &[ResourceId],
    ) -> Result<Rational> {
        let mut sum = Rational::zero();
        let mut max = Rational::zero();
        let mut cur = current.iter().copied().peekable();
        let mut last = usize::MAX;
        for &r in set {
            if r == last {
                continue;
            }
            last = r;
            while let Some(&c) = cur.peek() {
                if c < r {
                    cur.next();
                } else {
                    break;
                }
            }
            let stays = cur.peek() == Some(&r);
            let x = counts[r] as usize + if stays { 0 } else { 1 };
            sum += self.latency(r, x)?;
            let e = self.bottleneck(r, x)?;
            if e > max {
                max = e;
            }
        }
        Ok(self.alpha[i] * sum + self.complement[i] * max)
    }
}
