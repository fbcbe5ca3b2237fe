//! Text helpers: state CSV parsing/formatting and graph edge lists.
//!
//! A state CSV has one token per player: either a 0-based index into the
//! player's strategy list (explicit strategies in document order, matroid
//! bases in lexicographic enumeration order) or a `+`-joined resource list,
//! optionally quoted, e.g. `0,"r4+r5",1`.

use anyhow::{anyhow, bail, Context, Result};

use cgmix_core::game::{Game, ResourceSet, State};

fn split_csv(input: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut quoted = false;
    for c in input.chars() {
        match c {
            '"' | '\u{201c}' | '\u{201d}' => quoted = !quoted,
            ',' if !quoted => tokens.push(core::mem::take(&mut current)),
            _ => current.push(c),
        }
    }
    tokens.push(current);
    tokens
}

/// Parses a state CSV against a game.
pub fn parse_state_csv(game: &Game, input: &str) -> Result<State> {
    let tokens = split_csv(input);
    if tokens.len() != game.n_players() {
        bail!(
            "state has {} entries but the game has {} players",
            tokens.len(),
            game.n_players()
        );
    }
    let mut choices: Vec<ResourceSet> = Vec::with_capacity(tokens.len());
    for (i, raw) in tokens.iter().enumerate() {
        let token = raw.trim();
        if token.is_empty() {
            bail!("player {}: empty state entry", i + 1);
        }
        if token.bytes().all(|b| b.is_ascii_digit()) {
            let idx: usize = token.parse().unwrap();
            let list = game
                .player_strategies(i)
                .map_err(|e| anyhow!("player {}: {e}", i + 1))?;
            let set = list.get(idx).ok_or_else(|| {
                anyhow!(
                    "player {}: strategy index {idx} out of range ({} strategies)",
                    i + 1,
                    list.len()
                )
            })?;
            choices.push(set.clone());
        } else {
            let mut set = ResourceSet::new();
            for name in token.split('+') {
                let name = name.trim();
                let r = game
                    .resource_index(name)
                    .ok_or_else(|| anyhow!("player {}: unknown resource `{name}`", i + 1))?;
                set.push(r);
            }
            choices.push(set);
        }
    }
    let state = State::new(choices);
    game.check_state(&state).map_err(|e| anyhow!("{e}"))?;
    Ok(state)
}

/// Formats a state as CSV: indices for explicit players, quoted resource
/// lists for matroid players. The output parses back to the same state.
pub fn format_state_csv(game: &Game, state: &State) -> String {
    let mut out = String::new();
    for i in 0..game.n_players() {
        if i > 0 {
            out.push(',');
        }
        let choice = state.choice(i);
        match &game.players()[i].space {
            cgmix_core::game::StrategySpace::Explicit(_) => {
                let list = game.player_strategies(i).expect("explicit list");
                match list.iter().position(|s| s == choice) {
                    Some(idx) => out.push_str(&idx.to_string()),
                    None => {
                        out.push('"');
                        out.push_str(&game.format_set(choice));
                        out.push('"');
                    }
                }
            }
            cgmix_core::game::StrategySpace::Matroid(_) => {
                out.push('"');
                out.push_str(&game.format_set(choice));
                out.push('"');
            }
        }
    }
    out
}

/// Parses an edge-list graph: one `u v` pair per line; blank lines and
/// `#`-comments are ignored. The vertex count is the largest endpoint + 1.
pub fn parse_edge_list(input: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut edges = Vec::new();
    let mut vertices = 0usize;
    for (lineno, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let parse = |part: Option<&str>| -> Result<usize> {
            part.ok_or_else(|| anyhow!("line {}: expected `u v`", lineno + 1))?
                .parse()
                .with_context(|| format!("line {}: expected `u v`", lineno + 1))
        };
        let u = parse(parts.next())?;
        let v = parse(parts.next())?;
        if parts.next().is_some() {
            bail!("line {}: expected exactly two endpoints", lineno + 1);
        }
        vertices = vertices.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    Ok((vertices, edges))
}
