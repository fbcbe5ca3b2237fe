//! The game document: a JSON schema mirroring [`cgmix_core::game::Game`].
//!
//! Resources are a name-to-definition map; players carry either an explicit
//! `strategies` list or a `matroid` description. Parsing orders resources by
//! name, so parse → serialize → parse reproduces the game exactly.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use cgmix_core::game::{
    CostFunction, Game, MatroidSpace, Player, Resource, StrategySpace,
};
use cgmix_core::matroid::{Matroid, MatroidKind};
use cgmix_core::rational::{format_rational, parse_rational};
use cgmix_core::Rational;

/// A rational that serializes as `"p/q"` (or `"p"`) and deserializes from a
/// JSON string or number, exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalText(pub Rational);

impl Serialize for RationalText {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for RationalText {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        let text = match &value {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Number(n) => n.to_string(),
            other => {
                return Err(serde::de::Error::custom(format!(
                    "expected a rational as string or number, got {other}"
                )))
            }
        };
        parse_rational(&text)
            .map(RationalText)
            .map_err(|_| serde::de::Error::custom(format!("cannot parse rational `{text}`")))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CostDoc {
    Linear { a: RationalText, b: RationalText },
    Table { values: Vec<RationalText> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ResourceDoc {
    pub latency: CostDoc,
    pub bottleneck: CostDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub u: usize,
    pub v: usize,
    pub resource: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MatroidDoc {
    Uniform {
        ground: Vec<String>,
        rank: usize,
    },
    Partition {
        blocks: Vec<Vec<String>>,
        ranks: Vec<usize>,
    },
    Graphic {
        vertices: usize,
        edges: Vec<EdgeDoc>,
    },
    Explicit {
        bases: Vec<Vec<String>>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlayerDoc {
    pub alpha: RationalText,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strategies: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matroid: Option<MatroidDoc>,
}

/// The on-disk game representation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GameDocument {
    pub players: Vec<PlayerDoc>,
    pub resources: BTreeMap<String, ResourceDoc>,
}

impl GameDocument {
    pub fn from_json(text: &str) -> Result<GameDocument> {
        serde_json::from_str(text).context("cannot parse game document")
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("document serialization");
        out.push('\n');
        out
    }

    /// Builds the in-memory game. Resources are indexed in name order.
    pub fn to_game(&self) -> Result<Game> {
        let names: Vec<String> = self.resources.keys().cloned().collect();
        let index = |name: &str| -> Result<usize> {
            names
                .binary_search_by(|n| n.as_str().cmp(name))
                .map_err(|_| anyhow!("unknown resource `{name}`"))
        };
        let cost = |doc: &CostDoc| -> CostFunction {
            match doc {
                CostDoc::Linear { a, b } => CostFunction::Linear { a: a.0, b: b.0 },
                CostDoc::Table { values } => {
                    CostFunction::Table(values.iter().map(|v| v.0).collect())
                }
            }
        };
        let resources: Vec<Resource> = self
            .resources
            .iter()
            .map(|(name, doc)| Resource {
                name: name.clone(),
                latency: cost(&doc.latency),
                bottleneck: cost(&doc.bottleneck),
            })
            .collect();

        let mut players = Vec::with_capacity(self.players.len());
        for (p, doc) in self.players.iter().enumerate() {
            let space = match (&doc.strategies, &doc.matroid) {
                (Some(strategies), None) => {
                    let mut sets = Vec::with_capacity(strategies.len());
                    for strategy in strategies {
                        let mut set = Vec::with_capacity(strategy.len());
                        for name in strategy {
                            set.push(index(name).with_context(|| format!("player {}", p + 1))?);
                        }
                        sets.push(set);
                    }
                    StrategySpace::Explicit(sets)
                }
                (None, Some(matroid)) => {
                    StrategySpace::Matroid(build_matroid_space(matroid, &index, p)?)
                }
                (Some(_), Some(_)) => {
                    bail!("player {}: give either `strategies` or `matroid`, not both", p + 1)
                }
                (None, None) => {
                    bail!("player {}: missing `strategies` or `matroid`", p + 1)
                }
            };
            players.push(Player {
                alpha: doc.alpha.0,
                space,
            });
        }
        Game::new(resources, players).map_err(|e| anyhow!("{e}"))
    }

    /// Document form of a game (resource map keys are the resource names).
    pub fn from_game(game: &Game) -> GameDocument {
        let cost = |f: &CostFunction| -> CostDoc {
            match f {
                CostFunction::Linear { a, b } => CostDoc::Linear {
                    a: RationalText(*a),
                    b: RationalText(*b),
                },
                CostFunction::Table(values) => CostDoc::Table {
                    values: values.iter().map(|v| RationalText(*v)).collect(),
                },
            }
        };
        let name = |r: usize| game.resource_name(r).to_string();
        let resources: BTreeMap<String, ResourceDoc> = game
            .resources()
            .iter()
            .map(|res| {
                (
                    res.name.clone(),
                    ResourceDoc {
                        latency: cost(&res.latency),
                        bottleneck: cost(&res.bottleneck),
                    },
                )
            })
            .collect();
        let players = game
            .players()
            .iter()
            .map(|player| {
                let (strategies, matroid) = match &player.space {
                    StrategySpace::Explicit(sets) => (
                        Some(
                            sets.iter()
                                .map(|s| s.iter().map(|&r| name(r)).collect())
                                .collect(),
                        ),
                        None,
                    ),
                    StrategySpace::Matroid(space) => {
                        (None, Some(matroid_doc(space, &name)))
                    }
                };
                PlayerDoc {
                    alpha: RationalText(player.alpha),
                    strategies,
                    matroid,
                }
            })
            .collect();
        GameDocument { players, resources }
    }
}

fn build_matroid_space<F>(doc: &MatroidDoc, index: &F, player: usize) -> Result<MatroidSpace>
where
    F: Fn(&str) -> Result<usize>,
{
    let resolve = |names: &[String]| -> Result<Vec<usize>> {
        names
            .iter()
            .map(|n| index(n).with_context(|| format!("player {}", player + 1)))
            .collect()
    };
    let (ground, kind) = match doc {
        MatroidDoc::Uniform { ground, rank } => {
            (resolve(ground)?, MatroidKind::Uniform { rank: *rank })
        }
        MatroidDoc::Partition { blocks, ranks } => {
            let mut ground = Vec::new();
            let mut position_blocks = Vec::with_capacity(blocks.len());
            for block in blocks {
                let ids = resolve(block)?;
                position_blocks.push((ground.len()..ground.len() + ids.len()).collect());
                ground.extend(ids);
            }
            (
                ground,
                MatroidKind::Partition {
                    blocks: position_blocks,
                    ranks: ranks.clone(),
                },
            )
        }
        MatroidDoc::Graphic { vertices, edges } => {
            let ground = edges
                .iter()
                .map(|e| index(&e.resource).with_context(|| format!("player {}", player + 1)))
                .collect::<Result<Vec<usize>>>()?;
            (
                ground,
                MatroidKind::Graphic {
                    vertices: *vertices,
                    edges: edges.iter().map(|e| (e.u, e.v)).collect(),
                },
            )
        }
        MatroidDoc::Explicit { bases } => {
            let mut ground: Vec<usize> = Vec::new();
            let resolved: Vec<Vec<usize>> = bases
                .iter()
                .map(|b| resolve(b))
                .collect::<Result<_>>()?;
            for basis in &resolved {
                for &r in basis {
                    if !ground.contains(&r) {
                        ground.push(r);
                    }
                }
            }
            ground.sort_unstable();
            let positions: Vec<Vec<usize>> = resolved
                .iter()
                .map(|basis| {
                    let mut p: Vec<usize> = basis
                        .iter()
                        .map(|r| ground.binary_search(r).expect("member of ground"))
                        .collect();
                    p.sort_unstable();
                    p
                })
                .collect();
            (ground, MatroidKind::ExplicitBases(positions))
        }
    };
    let matroid = Matroid::new(ground.len(), kind).map_err(|e| anyhow!("{e}"))?;
    Ok(MatroidSpace { ground, matroid })
}

fn matroid_doc<F>(space: &MatroidSpace, name: &F) -> MatroidDoc
where
    F: Fn(usize) -> String,
{
    let ground_names: Vec<String> = space.ground.iter().map(|&r| name(r)).collect();
    match space.matroid.kind() {
        MatroidKind::Uniform { rank } => MatroidDoc::Uniform {
            ground: ground_names,
            rank: *rank,
        },
        MatroidKind::Partition { blocks, ranks } => MatroidDoc::Partition {
            blocks: blocks
                .iter()
                .map(|b| b.iter().map(|&p| ground_names[p].clone()).collect())
                .collect(),
            ranks: ranks.clone(),
        },
        MatroidKind::Graphic { vertices, edges } => MatroidDoc::Graphic {
            vertices: *vertices,
            edges: edges
                .iter()
                .enumerate()
                .map(|(e, &(u, v))| EdgeDoc {
                    u,
                    v,
                    resource: ground_names[e].clone(),
                })
                .collect(),
        },
        MatroidKind::ExplicitBases(bases) => MatroidDoc::Explicit {
            bases: bases
                .iter()
                .map(|b| b.iter().map(|&p| ground_names[p].clone()).collect())
                .collect(),
        },
    }
}

/// Reads and builds a game from a JSON file.
pub fn load_game(path: &std::path::Path) -> Result<Game> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    GameDocument::from_json(&text)?.to_game()
}
