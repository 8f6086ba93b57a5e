//! Times all solvers with a watchdog and prints the CSV report.

use std::time::Duration;

use pariton::bench::{rngame, run_bench, write_csv, GenSpec};
use pariton::solve::Algorithm;

fn main() {
    let games: Vec<_> = [500, 1000, 2000]
        .into_iter()
        .map(|n| (format!("rand{n}"), rngame(&GenSpec::standard(n, 1)).expect("valid spec")))
        .collect();
    let records = run_bench(&games, &Algorithm::ALL, Duration::from_secs(10), Some(Algorithm::Zielonka));
    write_csv(std::io::stdout(), &records, true).expect("stdout");
}
