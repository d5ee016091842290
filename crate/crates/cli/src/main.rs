use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ewgame::bank::{run_bank_experiment, sign_of, BankAction};
use ewgame::classifier::{check_prediction, classify, Agreement};
use ewgame::dynamics::{
    construct_oscillation_identical, construct_oscillation_opposite, simulate_from, write_trajectory_csv, DynState,
    SimOptions,
};
use ewgame::equilibria::{
    ce_is_borderline, ce_margins_bruteforce, ce_margins_closed_form, ce_membership_bruteforce,
    ce_membership_closed_form,
};
use ewgame_cli::campaigns::{self, oscillation_residual};
use ewgame_cli::config::{self, BankConfig, CeConfig, GameSource, InitSource, RunConfig, SweepConfig};
use serde::de::DeserializeOwned;
use serde_json::json;

#[derive(Parser)]
#[command(name = "ewgame", version, about = "Exponential-weights dynamics on 2x2 symmetric games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Identical,
    Opposite,
}

#[derive(Subcommand)]
enum Command {
    /// Predict the limit of a run from the sign pattern.
    Classify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        eta: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Simulate one run and report its limit.
    Simulate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        eta: Option<f64>,
        #[arg(long)]
        horizon: Option<u64>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Run a seeded sweep and compare every run with its prediction.
    Sweep {
        #[arg(long, conflicts_with = "random")]
        config: Option<PathBuf>,
        /// Random games on [-1, 1] with random initial states.
        #[arg(long, requires = "seed")]
        random: bool,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        eta: Option<f64>,
        #[arg(long)]
        horizon: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Run on one thread.
        #[arg(long)]
        serial: bool,
    },
    /// Compare closed-form and brute-force correlated-equilibrium membership.
    VerifyCe {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a period-2 oscillation and measure it.
    Oscillate {
        #[arg(long)]
        a: f64,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[arg(long, default_value_t = 1000)]
        steps: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the two-bank lending experiment.
    Bank {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        eta: Option<f64>,
        #[arg(long)]
        horizon: Option<u64>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Run all acceptance campaigns.
    VerifyAll {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A bad config: reported with its schema, exit code 2.
#[derive(Debug)]
struct Usage {
    message: String,
    schema: &'static str,
}

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}\nexpected schema: {}", self.message, self.schema)
    }
}

impl std::error::Error for Usage {}

fn usage(message: impl Into<String>, schema: &'static str) -> anyhow::Error {
    Usage { message: message.into(), schema }.into()
}

fn load<T: DeserializeOwned>(path: &Path, schema: &'static str) -> Result<T> {
    config::load(path).map_err(|e| usage(format!("{e:#}"), schema))
}

fn write_json(out: Option<&Path>, name: &str, value: &serde_json::Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    print!("{text}");
    if let Some(dir) = out {
        fs::create_dir_all(dir)?;
        fs::write(dir.join(name), &text).with_context(|| format!("writing {}", dir.join(name).display()))?;
    }
    Ok(())
}

fn status(failed: bool) -> ExitCode {
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run_config(path: &Path, eta: Option<f64>, horizon: Option<u64>) -> Result<(RunConfig, ewgame::SymmetricGame, DynState)> {
    let mut cfg: RunConfig = load(path, config::RUN_SCHEMA)?;
    if let Some(e) = eta {
        cfg.eta = e;
    }
    if horizon.is_some() {
        cfg.horizon = horizon;
    }
    let game = cfg.game.to_game().map_err(|e| usage(format!("{e:#}"), config::RUN_SCHEMA))?;
    game.ensure_nondegenerate().map_err(|e| usage(e.to_string(), config::RUN_SCHEMA))?;
    let (s1, s2) = cfg.strategies().map_err(|e| usage(format!("{e:#}"), config::RUN_SCHEMA))?;
    let init = DynState::from_strategies(&game, &s1, &s2).map_err(|e| usage(e.to_string(), config::RUN_SCHEMA))?;
    if !(cfg.eta > 0.0 && cfg.eta.is_finite()) {
        return Err(usage(format!("eta must be positive, got {}", cfg.eta), config::RUN_SCHEMA));
    }
    Ok((cfg, game, init))
}

fn execute(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Classify { config, eta, out } => {
            let (cfg, game, init) = run_config(&config, eta, None)?;
            let pred = classify(&game, &init, cfg.eta)?;
            write_json(out.as_deref(), "prediction.json", &serde_json::to_value(&pred)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Simulate { config, out, eta, horizon, format } => {
            let (cfg, game, init) = run_config(&config, eta, horizon)?;
            let pred = classify(&game, &init, cfg.eta)?;
            let opts = SimOptions { allow_degenerate_init: true, ..SimOptions::default() };
            let traj = simulate_from(&game, init, cfg.eta, cfg.horizon(), &opts, |_| {})?;
            let agreement = check_prediction(&pred, &traj.verdict);
            if let Some(dir) = &out {
                fs::create_dir_all(dir)?;
                match format {
                    Format::Csv => {
                        let f = fs::File::create(dir.join("trajectory.csv"))?;
                        let mut w = BufWriter::new(f);
                        write_trajectory_csv(&traj, &mut w)?;
                        w.flush()?;
                    }
                    Format::Json => fs::write(dir.join("trajectory.json"), serde_json::to_string(&traj)? + "\n")?,
                }
            }
            let summary = json!({
                "game": cfg.game,
                "eps": game.eps(),
                "eta": cfg.eta,
                "horizon": cfg.horizon(),
                "row": pred.effective_row(),
                "prediction": pred,
                "verdict": traj.verdict.kind.to_string(),
                "verdict_detail": traj.verdict,
                "agreement": agreement,
                "steps": traj.steps(),
                "flip_counts": traj.flip_counts,
                "final_u": traj.final_state.u,
            });
            write_json(out.as_deref(), "summary.json", &summary)?;
            Ok(status(agreement == Agreement::Mismatch))
        }
        Command::Sweep { config, random, seed, count, eta, horizon, out, serial } => {
            let mut cfg = match (config, random) {
                (Some(path), _) => load::<SweepConfig>(&path, config::SWEEP_SCHEMA)?,
                (None, true) => {
                    let seed = seed.ok_or_else(|| usage("--random needs --seed", config::SWEEP_SCHEMA))?;
                    SweepConfig {
                        games: GameSource::Random { seed, count, range: [-1.0, 1.0] },
                        init: InitSource::Random { seed },
                        etas: vec![0.1, 1.0],
                        horizon: ewgame::dynamics::DEFAULT_HORIZON,
                        out: None,
                    }
                }
                (None, false) => return Err(usage("sweep needs --config or --random", config::SWEEP_SCHEMA)),
            };
            if let Some(e) = eta {
                cfg.etas = vec![e];
            }
            if let Some(h) = horizon {
                cfg.horizon = h;
            }
            cfg.validate().map_err(|e| usage(format!("{e:#}"), config::SWEEP_SCHEMA))?;
            let out = out.or_else(|| cfg.out.clone().map(PathBuf::from));
            let report = ewgame_cli::sweep::run_sweep(&cfg, out.as_deref(), !serial)?;
            let summary = json!({
                "generator": report.generator,
                "total_runs": report.total_runs,
                "mismatches": report.mismatches,
                "bound_violations": report.bound_violations,
                "aggregate": report.aggregate,
            });
            println!("{}", serde_json::to_string_pretty(&summary)?);
            Ok(status(report.failed()))
        }
        Command::VerifyCe { config, out } => {
            let cfg: CeConfig = load(&config, config::CE_SCHEMA)?;
            let game = cfg.game.to_game().map_err(|e| usage(format!("{e:#}"), config::CE_SCHEMA))?;
            let nu = cfg.joint().map_err(|e| usage(format!("{e:#}"), config::CE_SCHEMA))?;
            let closed = ce_membership_closed_form(&game, &nu)?;
            let brute = ce_membership_bruteforce(&game, &nu);
            let borderline = ce_is_borderline(&game, &nu)?;
            let agree = closed == brute;
            let report = json!({
                "eps": game.eps(),
                "nu": nu.nu,
                "closed_form": closed,
                "closed_form_margins": ce_margins_closed_form(&game, &nu)?,
                "bruteforce": brute,
                "bruteforce_margins": ce_margins_bruteforce(&game, &nu),
                "borderline": borderline,
                "agree": agree,
            });
            write_json(out.as_deref(), "ce_report.json", &report)?;
            Ok(status(!agree && !borderline))
        }
        Command::Oscillate { a, mode, steps, out } => {
            let modes = match mode {
                Some(m) => vec![m],
                None => vec![Mode::Identical, Mode::Opposite],
            };
            let mut reports = Vec::new();
            let mut failed = false;
            for m in modes {
                let c = match m {
                    Mode::Identical => construct_oscillation_identical(a),
                    Mode::Opposite => construct_oscillation_opposite(a),
                }
                .map_err(|e| usage(e.to_string(), "--a X with X >= 1e-8"))?;
                let (residual, movement) = oscillation_residual(&c.game, c.init, c.eta, steps);
                let eta_gamma = c.eta * c.game.gamma();
                let pass = residual < 1e-9 && movement > 0.1 && eta_gamma > 8.0;
                failed |= !pass;
                reports.push(json!({
                    "mode": match m { Mode::Identical => "identical", Mode::Opposite => "opposite" },
                    "a": a,
                    "game": config::GameRecord::from(c.game),
                    "eps": c.game.eps(),
                    "eta": c.eta,
                    "init_u": c.init.u,
                    "eta_gamma": eta_gamma,
                    "steps": steps,
                    "residual": residual,
                    "min_step_movement": movement,
                    "pass": pass,
                }));
            }
            write_json(out.as_deref(), "oscillation.json", &serde_json::Value::Array(reports))?;
            Ok(status(failed))
        }
        Command::Bank { config, out, eta, horizon, format } => {
            let mut cfg: BankConfig = load(&config, config::BANK_SCHEMA)?;
            if let Some(e) = eta {
                cfg.eta = e;
            }
            if let Some(h) = horizon {
                cfg.horizon = h;
            }
            let game = cfg.game().map_err(|e| usage(format!("{e:#}"), config::BANK_SCHEMA))?;
            let run = run_bank_experiment(&game, cfg.init1, cfg.init2, cfg.eta, cfg.horizon)
                .map_err(|e| usage(e.to_string(), config::BANK_SCHEMA))?;
            let g2 = run.reduced_game;
            if let Some(dir) = &out {
                fs::create_dir_all(dir)?;
                match format {
                    Format::Csv => {
                        let mut w = BufWriter::new(fs::File::create(dir.join("weights.csv"))?);
                        let labels: Vec<String> = (1..=2)
                            .flat_map(|b| BankAction::ALL.map(|a| format!("bank{b}_{}", a.label().trim_matches(['(', ')']).replace(',', "_"))))
                            .collect();
                        writeln!(w, "t,{}", labels.join(","))?;
                        for r in &run.records {
                            let cells: Vec<String> =
                                r.bank1.iter().chain(r.bank2.iter()).map(|x| format!("{x:.16e}")).collect();
                            writeln!(w, "{},{}", r.t, cells.join(","))?;
                        }
                        w.flush()?;
                    }
                    Format::Json => fs::write(dir.join("weights.json"), serde_json::to_string(&run.records)? + "\n")?,
                }
            }
            let summary = json!({
                "params": game.params,
                "utility_matrix": game.utility_matrix(),
                "dominance": game.dominance_check(),
                "reduced_game": config::GameRecord::from(g2),
                "eps": g2.eps(),
                "signs": (sign_of(g2.eps1()), sign_of(g2.eps2())),
                "limit": (run.limit.0.label(), run.limit.1.label()),
                "final_weights": run.final_weights,
                "max_non_limit_weight": run.max_non_limit_weight,
                "max_dominated_weight": run.max_dominated_weight,
                "reduced_verdict": run.reduced_verdict.kind.to_string(),
                "consistent": run.consistent,
            });
            write_json(out.as_deref(), "summary.json", &summary)?;
            Ok(status(!run.consistent))
        }
        Command::VerifyAll { out } => {
            let mut results = Vec::new();
            for f in [
                campaigns::criterion_1,
                campaigns::criterion_2,
                campaigns::criterion_3,
                campaigns::criterion_4,
                campaigns::criterion_5,
                campaigns::criterion_6,
                campaigns::criterion_7,
                campaigns::criterion_8,
                campaigns::criterion_9,
                campaigns::criterion_10,
            ] {
                let r = f();
                println!("{r}");
                results.push(r);
            }
            let failed = results.iter().any(|r| !r.pass);
            if let Some(dir) = out {
                fs::create_dir_all(&dir)?;
                fs::write(dir.join("acceptance.json"), serde_json::to_string_pretty(&results)? + "\n")?;
            }
            Ok(status(failed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            if let Some(u) = e.downcast_ref::<Usage>() {
                eprintln!("error: {u}");
                ExitCode::from(2)
            } else {
                eprintln!("error: {:#}", anyhow!(e));
                ExitCode::from(1)
            }
        }
    }
}
