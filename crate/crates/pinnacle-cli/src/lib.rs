//! Library backing the `pinnacle` binary; exposed so integration tests can
//! drive the commands and the benchmark harness directly.

pub mod args;
pub mod bench;
pub mod commands;
pub mod report;

use std::io::Write;

use args::{Cli, Command};

pub fn run(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<()> {
    match &cli.command {
        Command::Count {
            n,
            pinnacles,
            method,
        } => commands::cmd_count(out, cli.format, *n, &pinnacles.0, *method),
        Command::Generate {
            n,
            pinnacles,
            method,
            sorted,
        } => commands::cmd_generate(out, cli.format, *n, &pinnacles.0, *method, *sorted),
        Command::Orbits { n, pinnacles } => {
            commands::cmd_orbits(out, cli.format, *n, &pinnacles.0)
        }
        Command::ValeSets { n, pinnacles } => {
            commands::cmd_vale_sets(out, cli.format, *n, &pinnacles.0)
        }
        Command::Act {
            perm, x, classic, ..
        } => commands::cmd_act(out, cli.format, perm, *x, *classic),
        Command::Bench {
            n,
            pinnacles,
            all,
            runs,
        } => bench::cmd_bench(
            out,
            cli.format,
            *n,
            pinnacles.as_ref().map(|p| p.0.as_slice()),
            *all,
            *runs,
        ),
    }
}
