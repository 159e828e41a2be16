//! Command-line front end for the fragmentation pipeline.

mod fetch;
mod run;
mod selftest;
mod svg;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "textfrag",
    version,
    about = "Fragment plain text into preferred-length microdocuments using \
             lexical-cohesion similarity and dynamic programming",
    args_conflicts_with_subcommands = true,
    subcommand_negates_reqs = true
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    #[command(flatten)]
    run: run::RunArgs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the dynamic program against the exhaustive oracle on seeded
    /// random instances
    SelfTest(selftest::SelfTestArgs),
    /// Download a plain-text corpus and split it into section files
    FetchCorpus(fetch::FetchArgs),
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Some(Command::SelfTest(args)) => selftest::self_test(&args),
        Some(Command::FetchCorpus(args)) => fetch::fetch_corpus(&args),
        None => run::run(&cli.run),
    };
    if let Err(err) = outcome {
        eprintln!("textfrag: {err:#}");
        std::process::exit(1);
    }
}
