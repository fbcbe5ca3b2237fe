//! A library of named game instances with known equilibrium behavior, plus a
//! reduction from Independent Set.
//!
//! The `thm*` names match the CLI's `gadget` subcommand:
//!
//! * [`thm2`] — a two-player matroid game with uniform preferences and linear
//!   costs that has no pure Nash equilibrium; [`thm2_restricted`] is its
//!   four-state core, on which best-response dynamics run in a cycle.
//! * [`thm4a`] / [`thm4b`] — non-matroid two-player games with equal latency
//!   and bottleneck curves (pure preferences resp. uniform preferences)
//!   without pure equilibria.
//! * [`thm5`] — a three-player singleton game with pure preferences whose
//!   best-response dynamics cycle through six states even though two pure
//!   equilibria exist.
//! * [`thm7`] — a ten-player game with linear costs in which some player can
//!   always improve by a factor of 3; no beta-approximate equilibrium exists
//!   for beta below 3.
//! * [`is_reduction`] — maps an Independent Set instance to a matroid game
//!   intended to have a pure Nash equilibrium exactly when an independent
//!   set of the requested size exists. The mapping is implemented exactly as
//!   specified; see the note on [`is_reduction`] about small instances where
//!   the intended equivalence provably fails.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::game::{
    CostFunction, Game, MatroidSpace, Player, Resource, ResourceSet, StrategySpace,
};
use crate::matroid::{Matroid, MatroidKind};
use crate::{rat, Error, Rational, Result};

fn lin(a: i128, b: i128) -> CostFunction {
    CostFunction::Linear {
        a: rat(a, 1),
        b: rat(b, 1),
    }
}

fn tab(values: &[i128]) -> CostFunction {
    CostFunction::Table(values.iter().map(|&v| rat(v, 1)).collect())
}

fn res(name: &str, latency: CostFunction, bottleneck: CostFunction) -> Resource {
    Resource {
        name: name.into(),
        latency,
        bottleneck,
    }
}

fn uniform_space(ground: Vec<usize>, rank: usize) -> StrategySpace {
    let matroid = Matroid::new(ground.len(), MatroidKind::Uniform { rank })
        .expect("valid uniform matroid");
    StrategySpace::Matroid(MatroidSpace { ground, matroid })
}

fn explicit_player(alpha: Rational, strategies: Vec<ResourceSet>) -> Player {
    Player {
        alpha,
        space: StrategySpace::Explicit(strategies),
    }
}

/// Resources `r1..r7` shared by [`thm2`] and [`is_reduction`]; `r7`'s
/// bottleneck slope differs between the two.
fn seven_resources(r7_bottleneck_slope: i128) -> Vec<Resource> {
    vec![
        res("r1", lin(0, 0), lin(200, 0)),
        res("r2", lin(0, 0), lin(200, 0)),
        res("r3", lin(0, 0), lin(200, 0)),
        res("r4", lin(20, 0), lin(50, 0)),
        res("r5", lin(20, 0), lin(50, 0)),
        res("r6", lin(8, 0), lin(80, 0)),
        res("r7", lin(0, 0), lin(r7_bottleneck_slope, 0)),
    ]
}

/// Two players with preference 1/2 on seven resources; player 1 picks any
/// three of `r1..r6`, player 2 any two of `r4..r7`. No state is a pure Nash
/// equilibrium.
pub fn thm2() -> Game {
    Game::new(
        seven_resources(160),
        vec![
            Player {
                alpha: rat(1, 2),
                space: uniform_space(vec![0, 1, 2, 3, 4, 5], 3),
            },
            Player {
                alpha: rat(1, 2),
                space: uniform_space(vec![3, 4, 5, 6], 2),
            },
        ],
    )
    .expect("gadget construction")
}

/// The four-state core of [`thm2`]: both players restricted to the two
/// strategies that can ever be best responses. Best-response dynamics cycle
/// through all four states.
pub fn thm2_restricted() -> Game {
    Game::new(
        seven_resources(160),
        vec![
            explicit_player(rat(1, 2), vec![vec![0, 1, 2], vec![3, 4, 5]]),
            explicit_player(rat(1, 2), vec![vec![3, 4], vec![5, 6]]),
        ],
    )
    .expect("gadget construction")
}

/// Two players with pure preferences (bottleneck vs. latency) on six
/// resources with equal linear cost curves; no pure Nash equilibrium.
pub fn thm4a() -> Game {
    let slopes = [6, 2, 2, 2, 4, 3];
    let resources = slopes
        .iter()
        .enumerate()
        .map(|(i, &a)| res(&format!("r{}", i + 1), lin(a, 0), lin(a, 0)))
        .collect();
    Game::new(
        resources,
        vec![
            explicit_player(rat(0, 1), vec![vec![0], vec![1, 2, 3, 4]]),
            explicit_player(rat(1, 1), vec![vec![1, 2, 3], vec![4, 5]]),
        ],
    )
    .expect("gadget construction")
}

/// Two players with preference 1/2 on five resources with equal cost curves;
/// every state shares exactly one resource and no state is a pure Nash
/// equilibrium.
pub fn thm4b() -> Game {
    let resources = vec![
        res("r1", lin(32, 0), lin(32, 0)),
        res("r2", lin(14, 0), lin(14, 0)),
        res("r3", lin(14, 0), lin(14, 0)),
        res("r4", lin(12, 8), lin(12, 8)),
        res("r5", lin(12, 8), lin(12, 8)),
    ];
    Game::new(
        resources,
        vec![
            explicit_player(rat(1, 2), vec![vec![0, 1, 3], vec![0, 2, 4]]),
            explicit_player(rat(1, 2), vec![vec![1, 4], vec![2, 3]]),
        ],
    )
    .expect("gadget construction")
}

/// Three singleton players with pure preferences on three resources.
/// Best-response dynamics from the all-shared start run in a six-state
/// cycle; the two pure equilibria are never reached by it.
///
/// `r1` is only ever used by the two latency players, so its bottleneck
/// curve is irrelevant and set to zero; the tables carry a third entry
/// (repeating the second) purely so that every table covers the player
/// count, and those entries are never read either, since no resource is
/// available to all three players.
pub fn thm5() -> Game {
    let resources = vec![
        res("r1", tab(&[2, 5, 5]), tab(&[0, 0, 0])),
        res("r2", tab(&[3, 4, 4]), tab(&[1, 4, 4])),
        res("r3", tab(&[1, 6, 6]), tab(&[2, 3, 3])),
    ];
    Game::new(
        resources,
        vec![
            explicit_player(rat(1, 1), vec![vec![0], vec![1]]),
            explicit_player(rat(1, 1), vec![vec![0], vec![2]]),
            explicit_player(rat(0, 1), vec![vec![1], vec![2]]),
        ],
    )
    .expect("gadget construction")
}

const THM7_GROUP_ONE: [usize; 4] = [1, 2, 3, 4];
const THM7_GROUP_TWO: [usize; 4] = [7, 8, 9, 10];

fn thm7_pairs(group: &[usize; 4]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            out.push((group[a], group[b]));
        }
    }
    out
}

/// Ten players, linear costs. Eight "personal" players (1-4 and 7-10, all
/// latency-driven) each choose between two personal resources; two
/// bottleneck players (5 and 6) each cover one personal resource of every
/// personal player plus one "pair" resource per group of four. In every
/// state some player can improve her cost by a factor of 3, so no
/// beta-approximate pure Nash equilibrium exists for beta below 3.
pub fn thm7() -> Game {
    let mut resources: Vec<Resource> = Vec::new();
    let mut ids: alloc::collections::BTreeMap<String, usize> = alloc::collections::BTreeMap::new();
    let add = |resources: &mut Vec<Resource>,
               ids: &mut alloc::collections::BTreeMap<String, usize>,
               resource: Resource| {
        ids.insert(resource.name.clone(), resources.len());
        resources.push(resource);
    };

    for &i in THM7_GROUP_ONE.iter().chain(&THM7_GROUP_TWO) {
        for side in 1..=2 {
            // Personal resources: latency x, no bottleneck cost.
            add(
                &mut resources,
                &mut ids,
                res(&format!("own_{i}_{side}"), lin(1, 0), lin(0, 0)),
            );
        }
    }
    for group in [&THM7_GROUP_ONE, &THM7_GROUP_TWO] {
        for &(a, b) in &thm7_pairs(group) {
            for owner in [5, 6] {
                for side in 1..=2 {
                    // Pair resources: bottleneck x, no latency cost.
                    add(
                        &mut resources,
                        &mut ids,
                        res(
                            &format!("pair_{a}_{b}_{owner}_{side}"),
                            lin(0, 0),
                            lin(1, 0),
                        ),
                    );
                }
            }
        }
    }

    let id = |ids: &alloc::collections::BTreeMap<String, usize>, name: String| -> usize {
        *ids.get(&name).expect("known resource")
    };

    let mut players: Vec<Player> = Vec::new();
    for player_id in 1..=10usize {
        if player_id == 5 || player_id == 6 {
            // A coverage player allocates, per group, all four personal
            // resources of one side plus one freely chosen pair resource of
            // the opposite side. Player 5 covers the same side in both
            // groups; player 6 covers opposite sides.
            let mut strategies: Vec<ResourceSet> = Vec::new();
            for side in 1..=2usize {
                let (g1_side, g2_side) = if player_id == 5 {
                    (side, side)
                } else {
                    (side, 3 - side)
                };
                for &(a1, b1) in &thm7_pairs(&THM7_GROUP_ONE) {
                    for &(a2, b2) in &thm7_pairs(&THM7_GROUP_TWO) {
                        let mut set: ResourceSet = Vec::with_capacity(10);
                        for &i in &THM7_GROUP_ONE {
                            set.push(id(&ids, format!("own_{i}_{g1_side}")));
                        }
                        for &i in &THM7_GROUP_TWO {
                            set.push(id(&ids, format!("own_{i}_{g2_side}")));
                        }
                        set.push(id(
                            &ids,
                            format!("pair_{a1}_{b1}_{player_id}_{}", 3 - g1_side),
                        ));
                        set.push(id(
                            &ids,
                            format!("pair_{a2}_{b2}_{player_id}_{}", 3 - g2_side),
                        ));
                        strategies.push(set);
                    }
                }
            }
            players.push(explicit_player(rat(0, 1), strategies));
        } else {
            let group = if player_id <= 4 {
                &THM7_GROUP_ONE
            } else {
                &THM7_GROUP_TWO
            };
            let mut strategies: Vec<ResourceSet> = Vec::new();
            for side in 1..=2usize {
                let mut set: ResourceSet = vec![id(&ids, format!("own_{player_id}_{side}"))];
                for &(a, b) in &thm7_pairs(group) {
                    if a == player_id || b == player_id {
                        for owner in [5, 6] {
                            set.push(id(&ids, format!("pair_{a}_{b}_{owner}_{side}")));
                        }
                    }
                }
                strategies.push(set);
            }
            players.push(explicit_player(rat(1, 1), strategies));
        }
    }
    Game::new(resources, players).expect("gadget construction")
}

/// An Independent Set instance: does `(vertices, edges)` contain an
/// independent set of at least `k` vertices?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphInstance {
    pub vertices: usize,
    /// Undirected edges as vertex index pairs.
    pub edges: Vec<(usize, usize)>,
    /// Requested independent-set size.
    pub k: usize,
}

impl GraphInstance {
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertices];
        for &(u, v) in &self.edges {
            if u < self.vertices {
                deg[u] += 1;
            }
            if v < self.vertices {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Rejects anything that is not a simple undirected graph meeting the
    /// reduction's requirements: maximum degree at least 2 and no isolated
    /// vertices (an isolated vertex would get an empty strategy set).
    pub fn validate(&self) -> Result<()> {
        let reject = |reason: String| Err(Error::BadGraph { reason });
        if self.vertices == 0 {
            return reject("graph has no vertices".into());
        }
        let mut seen: Vec<(usize, usize)> = Vec::new();
        for &(u, v) in &self.edges {
            if u >= self.vertices || v >= self.vertices {
                return reject(format!("edge ({u},{v}) endpoint out of range"));
            }
            if u == v {
                return reject(format!("self-loop at vertex {u}"));
            }
            let key = (u.min(v), u.max(v));
            if seen.contains(&key) {
                return reject(format!("duplicate edge ({},{})", key.0, key.1));
            }
            seen.push(key);
        }
        let deg = self.degrees();
        let max_degree = deg.iter().copied().max().unwrap_or(0);
        if max_degree < 2 {
            return reject(format!("maximum degree {max_degree} is below 2"));
        }
        if let Some(v) = deg.iter().position(|&d| d == 0) {
            return reject(format!(
                "vertex {v} is isolated; the reduction would give it an empty strategy"
            ));
        }
        Ok(())
    }
}

/// Builds the Independent Set reduction game: one uniform-matroid player per
/// vertex (choosing `degree(v)` resources among her edge resources, her
/// alternative `q` resources and the connection resource `rc`), a connection
/// player choosing between `rc` and `r7`, and the two players of [`thm2`]
/// (with `r7`'s bottleneck slope lowered to 80, which gives their subgame a
/// pure equilibrium while `r7` is otherwise unused).
///
/// The connection resource is free up to total congestion
/// `vertices - k + 1` and expensive above, exactly as specified. Note that
/// on some small instances with low-degree vertices this literal
/// construction provably does *not* satisfy the intended "equilibrium iff
/// independent set of size k" equivalence (a vertex player can pad a shared
/// edge with the free `rc` slot, which beats her `q`-route by 1/2); the
/// equivalence test suite reports every such instance rather than patching
/// the construction.
pub fn is_reduction(graph: &GraphInstance) -> Result<Game> {
    graph.validate()?;
    let n = graph.vertices;
    let k = graph.k;
    let deg = graph.degrees();
    let n_players = n + 3;

    let mut resources: Vec<Resource> = Vec::new();
    let mut ids: alloc::collections::BTreeMap<String, usize> = alloc::collections::BTreeMap::new();

    let mut sorted_edges: Vec<(usize, usize)> = graph
        .edges
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    sorted_edges.sort_unstable();
    for &(u, v) in &sorted_edges {
        ids.insert(format!("e{u}_{v}"), resources.len());
        resources.push(res(&format!("e{u}_{v}"), lin(1000, 0), lin(0, 0)));
    }
    for (i, &d) in deg.iter().enumerate() {
        for j in 1..d {
            ids.insert(format!("q{i}_{j}"), resources.len());
            resources.push(res(
                &format!("q{i}_{j}"),
                lin(0, 0),
                lin(0, 1000 * d as i128 + 1),
            ));
        }
    }
    // Free up to total congestion n - k + 1, expensive above.
    let threshold = n as i128 - k as i128 + 1;
    let rc_values: Vec<i128> = (1..=n_players as i128)
        .map(|x| if x <= threshold { 0 } else { 1000 })
        .collect();
    ids.insert("rc".into(), resources.len());
    resources.push(res("rc", lin(0, 0), tab(&rc_values)));
    let base = resources.len();
    resources.extend(seven_resources(80));

    let mut players: Vec<Player> = Vec::new();
    for v in 0..n {
        let mut ground: Vec<usize> = Vec::new();
        for &(a, b) in &sorted_edges {
            if a == v || b == v {
                ground.push(ids[&format!("e{a}_{b}")]);
            }
        }
        for j in 1..deg[v] {
            ground.push(ids[&format!("q{v}_{j}")]);
        }
        ground.push(ids["rc"]);
        players.push(Player {
            alpha: rat(1, 2),
            space: uniform_space(ground, deg[v]),
        });
    }
    players.push(explicit_player(
        rat(1, 2),
        vec![vec![ids["rc"]], vec![base + 6]],
    ));
    players.push(Player {
        alpha: rat(1, 2),
        space: uniform_space((base..base + 6).collect(), 3),
    });
    players.push(Player {
        alpha: rat(1, 2),
        space: uniform_space((base + 3..base + 7).collect(), 2),
    });

    Game::new(resources, players)
}
