//! The `cgmix` command-line tool: validate, solve, simulate, and certify
//! congestion games with mixed objectives.
//!
//! Exit codes are part of the contract:
//!
//! * `validate`: 0 well-formed, 1 violations found
//! * `solve`: 0 equilibrium found, 2 proven nonexistent, 3 inconclusive
//! * `dynamics`: 0 converged, 4 cycle, 5 step cap
//! * `certify`: 0 pass, 1 fail
//! * `approx`, `gadget`: 0 on success
//! * any usage or data error: 64

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};

use cgmix::document::{load_game, GameDocument};
use cgmix::textio::{format_state_csv, parse_edge_list, parse_state_csv};
use cgmix_core::dynamics::{
    run_dynamics, DynamicsConfig, MoveRule, Scheduler, Verdict,
};
use cgmix_core::equilibrium::{
    approx_solve, certify, solve, ApproxMethod, PotentialKind, SolveMethod, SolveOutcome,
};
use cgmix_core::game::{Game, State, StrategySpace};
use cgmix_core::gadgets::{self, GraphInstance};
use cgmix_core::rational::parse_rational;

#[derive(Parser)]
#[command(
    name = "cgmix",
    version,
    about = "Congestion games with mixed latency/bottleneck objectives"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a game file against all structural invariants.
    Validate { file: PathBuf },
    /// Compute a pure Nash equilibrium or prove there is none.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// State cap for exhaustive enumeration.
        #[arg(long, default_value_t = 10_000_000)]
        cap: u128,
    },
    /// Run improvement dynamics and print the trace.
    Dynamics {
        file: PathBuf,
        /// Start state CSV (e.g. `0,"r4+r5"`), or `random`.
        #[arg(long, default_value = "random")]
        start: String,
        #[arg(long, value_enum, default_value_t = RuleArg::Auto)]
        rule: RuleArg,
        #[arg(long, value_enum, default_value_t = SchedArg::Rr)]
        sched: SchedArg,
        /// Seed for `--start random` and `--sched random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
    },
    /// Certify a state against an approximation factor.
    Certify {
        file: PathBuf,
        /// State CSV, e.g. `0,"r4+r5",1`.
        #[arg(long)]
        state: String,
        /// Approximation factor (rational, at least 1).
        #[arg(long, default_value = "1")]
        beta: String,
    },
    /// Find a beta-approximate equilibrium via a potential or the matroid
    /// route.
    Approx {
        file: PathBuf,
        #[arg(long, value_enum)]
        potential: PotentialArg,
        #[arg(long, default_value_t = 10_000_000)]
        cap: u128,
    },
    /// Write a named game instance (or the Independent Set reduction) to a
    /// file.
    Gadget {
        #[arg(value_enum)]
        name: GadgetArg,
        #[arg(short, long)]
        output: PathBuf,
        /// Edge-list file (`u v` per line); is-reduction only.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Requested independent-set size; is-reduction only.
        #[arg(short, long)]
        k: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Enumerate,
    Singleton,
    #[value(name = "pure-pref")]
    PurePref,
    Monotone,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Auto,
    Better,
    Best,
    Lazy,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchedArg {
    Rr,
    Random,
    Maxgain,
}

#[derive(Clone, Copy, ValueEnum)]
enum PotentialArg {
    Mixed,
    Square,
    Sum,
    Matroid,
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetArg {
    Thm2,
    #[value(name = "thm2-restricted")]
    Thm2Restricted,
    Thm4a,
    Thm4b,
    Thm5,
    Thm7,
    #[value(name = "is-reduction")]
    IsReduction,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            return ExitCode::from(64);
        }
        Err(e) => {
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(64)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Solve { file, method, cap } => cmd_solve(&file, method, cap),
        Command::Dynamics {
            file,
            start,
            rule,
            sched,
            seed,
            max_steps,
        } => cmd_dynamics(&file, &start, rule, sched, seed, max_steps),
        Command::Certify { file, state, beta } => cmd_certify(&file, &state, &beta),
        Command::Approx {
            file,
            potential,
            cap,
        } => cmd_approx(&file, potential, cap),
        Command::Gadget {
            name,
            output,
            graph,
            k,
        } => cmd_gadget(name, &output, graph.as_deref(), k),
    }
}

fn cmd_validate(file: &Path) -> Result<u8> {
    let text = std::fs::read_to_string(file)
        .with_context(|| format!("cannot read {}", file.display()))?;
    let game = match GameDocument::from_json(&text).and_then(|doc| doc.to_game()) {
        Ok(game) => game,
        Err(e) => {
            println!("invalid: {e:#}");
            return Ok(1);
        }
    };
    let violations = game.validate();
    for v in &violations {
        println!("{v}");
    }
    for (i, player) in game.players().iter().enumerate() {
        if let StrategySpace::Matroid(space) = &player.space {
            if !space.matroid.exchange_verified() {
                println!(
                    "warning: player {} basis list accepted unverified \
                     (ground set above the exchange-check cap)",
                    i + 1
                );
            }
        }
    }
    if violations.is_empty() {
        println!("ok");
        Ok(0)
    } else {
        Ok(1)
    }
}

fn cmd_solve(file: &Path, method: MethodArg, cap: u128) -> Result<u8> {
    let game = load_game(file)?;
    let method = match method {
        MethodArg::Auto => SolveMethod::Auto,
        MethodArg::Enumerate => SolveMethod::Enumerate,
        MethodArg::Singleton => SolveMethod::Singleton,
        MethodArg::PurePref => SolveMethod::PurePreferences,
        MethodArg::Monotone => SolveMethod::MonotoneDependence,
    };
    match solve(&game, method, cap).map_err(|e| anyhow!("{e}"))? {
        SolveOutcome::Found {
            state,
            certificate,
            method,
        } => {
            println!("method={method}");
            println!("state={}", format_state_csv(&game, &state));
            println!("{}", certificate.render(&game));
            Ok(0)
        }
        SolveOutcome::ProvenEmpty => {
            println!("no pure Nash equilibrium (proven by exhaustive enumeration)");
            Ok(2)
        }
        SolveOutcome::Inconclusive { reason } => {
            println!("inconclusive: {reason}");
            Ok(3)
        }
    }
}

fn random_state(game: &Game, seed: u64) -> Result<State> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut indices = Vec::with_capacity(game.n_players());
    for i in 0..game.n_players() {
        let len = game.player_strategies(i).map_err(|e| anyhow!("{e}"))?.len();
        if len == 0 {
            bail!("player {} has no strategies", i + 1);
        }
        indices.push(rng.gen_range(0..len));
    }
    State::from_indices(game, &indices).map_err(|e| anyhow!("{e}"))
}

fn cmd_dynamics(
    file: &Path,
    start: &str,
    rule: RuleArg,
    sched: SchedArg,
    seed: u64,
    max_steps: usize,
) -> Result<u8> {
    let game = load_game(file)?;
    let state = if start == "random" {
        random_state(&game, seed)?
    } else {
        parse_state_csv(&game, start)?
    };
    let rule = match rule {
        RuleArg::Better => MoveRule::BetterResponse,
        RuleArg::Best => MoveRule::BestResponse,
        RuleArg::Lazy => MoveRule::LazyBestResponse,
        RuleArg::Auto => {
            if game.has_zero_alpha_player() {
                MoveRule::LazyBestResponse
            } else {
                MoveRule::BestResponse
            }
        }
    };
    if game.has_zero_alpha_player() && rule != MoveRule::LazyBestResponse {
        eprintln!(
            "note: game has pure-bottleneck players; lazy best responses \
             (--rule lazy) are the recommended move rule"
        );
    }
    let scheduler = match sched {
        SchedArg::Rr => Scheduler::RoundRobin,
        SchedArg::Random => Scheduler::Random { seed },
        SchedArg::Maxgain => Scheduler::MaxGain,
    };
    let trace = run_dynamics(&game, &state, &DynamicsConfig::new(rule, scheduler, max_steps))
        .map_err(|e| anyhow!("{e}"))?;
    print!("{}", trace.render(&game));
    Ok(match trace.verdict {
        Verdict::Converged => 0,
        Verdict::Cycle { .. } => 4,
        Verdict::StepCap => 5,
    })
}

fn cmd_certify(file: &Path, state: &str, beta: &str) -> Result<u8> {
    let game = load_game(file)?;
    let state = parse_state_csv(&game, state)?;
    let beta = parse_rational(beta).map_err(|e| anyhow!("{e}"))?;
    let certificate = certify(&game, &state, beta).map_err(|e| anyhow!("{e}"))?;
    println!("{}", certificate.render(&game));
    Ok(if certificate.pass { 0 } else { 1 })
}

fn cmd_approx(file: &Path, potential: PotentialArg, cap: u128) -> Result<u8> {
    let game = load_game(file)?;
    let method = match potential {
        PotentialArg::Mixed => ApproxMethod::Potential(PotentialKind::Mixed),
        PotentialArg::Square => ApproxMethod::Potential(PotentialKind::Square),
        PotentialArg::Sum => ApproxMethod::Potential(PotentialKind::Sum),
        PotentialArg::Matroid => ApproxMethod::MatroidRoute,
    };
    let report = approx_solve(&game, method, None, cap).map_err(|e| anyhow!("{e}"))?;
    println!("target={} steps={}", report.target, report.steps);
    println!(
        "state={}",
        format_state_csv(&game, &report.certificate.state)
    );
    println!("{}", report.certificate.render(&game));
    Ok(0)
}

fn cmd_gadget(name: GadgetArg, output: &Path, graph: Option<&Path>, k: Option<usize>) -> Result<u8> {
    let game = match name {
        GadgetArg::Thm2 => gadgets::thm2(),
        GadgetArg::Thm2Restricted => gadgets::thm2_restricted(),
        GadgetArg::Thm4a => gadgets::thm4a(),
        GadgetArg::Thm4b => gadgets::thm4b(),
        GadgetArg::Thm5 => gadgets::thm5(),
        GadgetArg::Thm7 => gadgets::thm7(),
        GadgetArg::IsReduction => {
            let graph_path =
                graph.ok_or_else(|| anyhow!("is-reduction requires --graph <edge-list file>"))?;
            let k = k.ok_or_else(|| anyhow!("is-reduction requires -k <size>"))?;
            let text = std::fs::read_to_string(graph_path)
                .with_context(|| format!("cannot read {}", graph_path.display()))?;
            let (vertices, edges) = parse_edge_list(&text)?;
            let instance = GraphInstance { vertices, edges, k };
            gadgets::is_reduction(&instance).map_err(|e| anyhow!("{e}"))?
        }
    };
    if matches!(name, GadgetArg::IsReduction) {
        // fall through: game already built
    } else if graph.is_some() || k.is_some() {
        bail!("--graph and -k only apply to is-reduction");
    }
    let doc = GameDocument::from_game(&game);
    std::fs::write(output, doc.to_json())
        .with_context(|| format!("cannot write {}", output.display()))?;
    Ok(0)
}
