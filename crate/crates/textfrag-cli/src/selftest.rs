//! The `self-test` subcommand: the optimality guarantee as a user-visible
//! check.

use anyhow::{bail, Result};
use clap::Args;

use textfrag::evaluation::selftest;

#[derive(Args, Debug)]
pub struct SelfTestArgs {
    /// RNG seed for the instance generator
    #[arg(long, default_value_t = 42)]
    pub seed: u64,

    /// Number of random instances
    #[arg(long, default_value_t = 500)]
    pub cases: usize,
}

pub fn self_test(args: &SelfTestArgs) -> Result<()> {
    println!("self-test: seed={} cases={}", args.seed, args.cases);
    let report = selftest::run(args.seed, args.cases);

    for failure in &report.optimality_failures {
        println!("optimality failure (case {}): {}", failure.case, failure.detail);
    }
    for mismatch in &report.pruning_mismatches {
        println!("pruning mismatch (case {}): {}", mismatch.case, mismatch.detail);
    }
    for divergence in &report.verbatim_divergences {
        println!(
            "verbatim pruning divergence (case {}): {}",
            divergence.case, divergence.detail
        );
    }

    println!(
        "optimality: {}/{} ok",
        report.cases - report.optimality_failures.len(),
        report.cases
    );
    println!(
        "pruning safe==off: {}/{} ok",
        report.cases - report.pruning_mismatches.len(),
        report.cases
    );
    println!(
        "verbatim divergences: {}",
        report.verbatim_divergences.len()
    );

    if !report.passed() {
        bail!("self-test failed");
    }
    println!("PASS");
    Ok(())
}
