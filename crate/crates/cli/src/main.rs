use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use galmag::{io, Caps};
use galmag_cli::battery::{self, Grid};
use galmag_cli::input::{expect_inputs, split_inputs};
use galmag_cli::report::{ChainReport, DecompositionReport, ModelReport, WeakReport};
use galmag_cli::{CmdResult, Failure, EXIT_OK, EXIT_VERIFY};
use serde::Serialize;

/// Cluster magnification invariants of finite extension models.
#[derive(Parser)]
#[command(name = "galmag", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Emit one JSON object instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Largest group enumerated element by element.
    #[arg(long, global = true, default_value_t = Caps::default().elements)]
    element_cap: usize,
    /// Largest group whose normal subgroup lattice is computed.
    #[arg(long, global = true, default_value_t = Caps::default().lattice)]
    lattice_cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, primitivity, witnesses and chains of one model.
    Report {
        /// Model file or family spec, e.g. `family=semidirect r=2 s=3`.
        #[arg(required = true, num_args = 1..)]
        model: Vec<String>,
    },
    /// Descending and ascending chains of one model.
    Chains {
        #[arg(required = true, num_args = 1..)]
        model: Vec<String>,
    },
    /// Direct-product decompositions of the model's group.
    Decompose {
        #[arg(required = true, num_args = 1..)]
        model: Vec<String>,
    },
    /// Run the verification battery.
    VerifyPaper {
        #[arg(long, value_enum, default_value = "default")]
        grid: Grid,
    },
    /// Report on the product of two models.
    Product {
        /// Two models, one after the other.
        #[arg(required = true, num_args = 1..)]
        models: Vec<String>,
    },
    /// Weak magnification of the first model over the second.
    Weak {
        #[arg(required = true, num_args = 1..)]
        models: Vec<String>,
    },
    /// Print a model in file form.
    Export {
        #[arg(required = true, num_args = 1..)]
        model: Vec<String>,
    },
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce(&T) -> String) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("reports serialize")
        );
    } else {
        print!("{}", text(value));
    }
}

fn run(cli: Cli) -> CmdResult<u8> {
    let caps = Caps {
        elements: cli.global.element_cap,
        lattice: cli.global.lattice_cap,
    };
    let json = cli.global.json;
    match cli.command {
        Command::Report { model } => {
            let input = expect_inputs(&model, 1)?.remove(0);
            let m = input.load(caps)?;
            emit(
                json,
                &ModelReport::build(&input.label(), &m)?,
                ModelReport::render,
            );
        }
        Command::Chains { model } => {
            let input = expect_inputs(&model, 1)?.remove(0);
            let m = input.load(caps)?;
            emit(
                json,
                &ChainReport::build(&input.label(), &m)?,
                ChainReport::render,
            );
        }
        Command::Decompose { model } => {
            let input = expect_inputs(&model, 1)?.remove(0);
            let m = input.load(caps)?;
            emit(
                json,
                &DecompositionReport::build(&input.label(), m.group())?,
                DecompositionReport::render,
            );
        }
        Command::VerifyPaper { grid } => {
            let rows = battery::run(grid, caps);
            let ok = rows.iter().all(|r| r.pass);
            #[derive(Serialize)]
            struct Battery {
                grid: Grid,
                pass: bool,
                rows: Vec<battery::VerificationRow>,
            }
            let out = Battery {
                grid,
                pass: ok,
                rows,
            };
            emit(json, &out, |b| battery::render(&b.rows));
            return Ok(if ok { EXIT_OK } else { EXIT_VERIFY });
        }
        Command::Product { models } => {
            let inputs = expect_inputs(&models, 2)?;
            let (l, j) = (inputs[0].load(caps)?, inputs[1].load(caps)?);
            let label = format!("{} x {}", inputs[0].label(), inputs[1].label());
            emit(
                json,
                &ModelReport::build(&label, &l.product(&j)?)?,
                ModelReport::render,
            );
        }
        Command::Weak { models } => {
            let inputs = expect_inputs(&models, 2)?;
            let (m, l) = (inputs[0].load(caps)?, inputs[1].load(caps)?);
            let report = WeakReport::build((&inputs[0].label(), &m), (&inputs[1].label(), &l))?;
            emit(json, &report, WeakReport::render);
        }
        Command::Export { model } => {
            let inputs = split_inputs(&model)?;
            if inputs.len() != 1 {
                return Err(Failure::parse("expected one model input"));
            }
            let m = inputs[0].load(caps)?;
            print!("{}", io::write_model(&m));
        }
    }
    Ok(EXIT_OK)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("galmag: {f}");
            ExitCode::from(f.code)
        }
    }
}
