//! Command-line front end. [`run`] parses arguments and writes results to the
//! given streams so it can be driven from tests.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::faces::{
    descriptors, extreme_rays, permutohedral_subgraph, run_harness, theorem_report,
};
use crate::games::Game;
use crate::ground::GroundSet;
use crate::json;
use crate::permutograph::{to_dot, Enumeration};
use crate::relations::{
    all_posets, all_preposets, all_total_preposets, hasse, linear_extensions, poset_dimension,
    Relation,
};
use crate::setsystems::{all_topologies, downsets_of, ordered_partition_count, relation_of_system};
use crate::worked;

#[derive(Debug, Parser)]
#[command(
    name = "supermodular",
    version,
    about = "Faces of the supermodular cone and their combinatorial descriptors"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the descriptor bundle of a game.
    Convert {
        #[arg(long)]
        game: PathBuf,
    },
    /// Evaluate every face-inclusion condition for the pair (game, game-b).
    Compare {
        #[arg(long)]
        game: PathBuf,
        #[arg(long = "game-b")]
        game_b: PathBuf,
    },
    /// Run the randomized agreement harness.
    Verify {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Defaults to 500 at n ≤ 3 and 200 above.
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        force: bool,
    },
    /// Count posets, preposets, topologies and ordered partitions.
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Enumerate the extreme rays of the standardized supermodular cone.
    Rays {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        force: bool,
    },
    /// Linear extensions, dimension and Hasse diagram of a poset.
    Poset {
        /// JSON relation with a "ground" field; defaults to the six-element crown.
        #[arg(long)]
        relation: Option<PathBuf>,
    },
    /// Recompute the built-in worked examples.
    Examples,
    /// Export the permutohedral subgraph of a game.
    Graph {
        #[arg(long)]
        game: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
}

/// Exit code for a library error: 3 for guards, 1 for failed internal checks, 2 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Guard { .. } => 3,
        Error::Inconsistent(_) | Error::Overflow(_) => 1,
        _ => 2,
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Invalid(format!("{}: malformed JSON: {e}", path.display())))
}

fn load_game(path: &Path) -> Result<(GroundSet, Game)> {
    json::game_from_json(&read_json(path)?)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// Runs one invocation; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&config.command, err) {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(cmd: &Command, err: &mut dyn Write) -> Result<(String, i32)> {
    match cmd {
        Command::Convert { game } => {
            let (ground, g) = load_game(game)?;
            Ok((pretty(&json::bundle_to_json(&ground, &descriptors(&g)?)), 0))
        }
        Command::Compare { game, game_b } => {
            let (ga_ground, ga) = load_game(game)?;
            let (gb_ground, gb) = load_game(game_b)?;
            if ga_ground != gb_ground {
                return Err(Error::Invalid(
                    "the two games use different ground labels".into(),
                ));
            }
            Ok((pretty(&json::report_to_json(&theorem_report(&ga, &gb)?)), 0))
        }
        Command::Verify {
            n,
            seed,
            trials,
            force,
        } => {
            let trials = trials.unwrap_or(if *n <= 3 { 500 } else { 200 });
            let results = run_harness(*n, trials, *seed, *force)?;
            let bad: Vec<Value> = results
                .iter()
                .filter(|t| !t.report.agreement)
                .map(|t| json!({ "seed": t.seed, "report": json::report_to_json(&t.report) }))
                .collect();
            let included = results.iter().filter(|t| t.report.ii).count();
            let _ = writeln!(
                err,
                "checked {trials} pairs at n={n}, {} disagreements",
                bad.len()
            );
            let code = if bad.is_empty() { 0 } else { 1 };
            let v = json!({
                "n": n,
                "seed": seed,
                "trials": trials,
                "included": included,
                "agreeing": trials - bad.len(),
                "disagreements": bad,
            });
            Ok((pretty(&v), code))
        }
        Command::Count { n } => Ok((pretty(&counts(*n)?), 0)),
        Command::Rays { n, force } => {
            let rays = extreme_rays(*n, *force)?;
            let ground = GroundSet::letters(*n)?;
            let v = json!({
                "n": n,
                "count": rays.len(),
                "rays": rays.iter().map(|r| json::game_to_json(&ground, r)).collect::<Vec<_>>(),
            });
            Ok((pretty(&v), 0))
        }
        Command::Poset { relation } => {
            let (ground, t) = match relation {
                Some(path) => {
                    let v = read_json(path)?;
                    let ground = json::ground_from_json(
                        v.get("ground")
                            .ok_or_else(|| Error::Invalid("missing field \"ground\"".into()))?,
                    )?;
                    let t = json::relation_from_json(&ground, &v)?;
                    (ground, t)
                }
                None => (GroundSet::letters(6)?, worked::crown_poset()),
            };
            Ok((pretty(&poset_report(&ground, &t)?), 0))
        }
        Command::Examples => {
            let checks = worked::replay()?;
            let mut text = String::new();
            let mut failed = 0;
            for c in &checks {
                if c.passed() {
                    text.push_str(&format!("PASS {}: {}\n", c.name, c.actual));
                } else {
                    failed += 1;
                    text.push_str(&format!(
                        "FAIL {}: expected {}, got {}\n",
                        c.name, c.expected, c.actual
                    ));
                }
            }
            text.push_str(&format!(
                "{}/{} checks passed\n",
                checks.len() - failed,
                checks.len()
            ));
            Ok((text, if failed == 0 { 0 } else { 1 }))
        }
        Command::Graph { game, format } => {
            let (ground, g) = load_game(game)?;
            let edges = permutohedral_subgraph(&g)?;
            let text = match format {
                Format::Dot => to_dot(&ground, &edges)?,
                Format::Json => pretty(&json!({
                    "ground": json::ground_to_json(&ground),
                    "nodes": Enumeration::all(ground.len())?
                        .iter()
                        .map(|p| json::enumeration_to_json(&ground, p))
                        .collect::<Vec<_>>(),
                    "edges": edges
                        .iter()
                        .map(|(p, q)| json!([json::enumeration_to_json(&ground, p), json::enumeration_to_json(&ground, q)]))
                        .collect::<Vec<_>>(),
                })),
            };
            Ok((text, 0))
        }
    }
}

/// Counts for `count --n`, with cross-checks between relations and set systems.
pub fn counts(n: usize) -> Result<Value> {
    let posets = all_posets(n)?;
    let preposets = all_preposets(n)?;
    let topologies = all_topologies(n)?;
    let totals = all_total_preposets(n)?;
    if preposets.len() != topologies.len() {
        return Err(Error::Inconsistent(
            "preposet and topology counts differ".into(),
        ));
    }
    if preposets
        .iter()
        .any(|t| relation_of_system(&downsets_of(t)) != *t)
    {
        return Err(Error::Inconsistent("down-set round trip failed".into()));
    }
    if totals.len() as u128 != ordered_partition_count(n) {
        return Err(Error::Inconsistent(
            "total preposets do not match ordered partitions".into(),
        ));
    }
    Ok(json!({
        "n": n,
        "posets": posets.len(),
        "preposets": preposets.len(),
        "topologies": topologies.len(),
        "ordered_partitions": totals.len(),
    }))
}

fn poset_report(ground: &GroundSet, t: &Relation) -> Result<Value> {
    let ext = linear_extensions(t)?;
    let dim = poset_dimension(t)?;
    let h = hasse(t)?;
    Ok(json!({
        "ground": json::ground_to_json(ground),
        "relation": json::relation_to_json(ground, t),
        "linear_extensions": json::enum_set_to_json(ground, &ext),
        "count": ext.len(),
        "dimension": dim,
        "hasse": h.off_diagonal_pairs()
            .into_iter()
            .map(|(u, v)| json!([ground.label(u), ground.label(v)]))
            .collect::<Vec<_>>(),
    }))
}
