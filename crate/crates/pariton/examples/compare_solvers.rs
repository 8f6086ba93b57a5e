//! Runs every solver on the same games and compares partitions and call counts.

use pariton::bench::{rngame, GenSpec};
use pariton::solve::Algorithm;

fn main() {
    for seed in 0..5 {
        let game = rngame(&GenSpec::standard(150, seed)).expect("valid spec");
        let reference = Algorithm::Zielonka.solve(&game);
        let mut row = format!("seed {seed}:");
        for algo in Algorithm::ALL {
            let res = algo.solve(&game);
            assert!(res.same_partition(&reference));
            row.push_str(&format!(" {algo}={}", res.stats.nontrivial_sol_calls));
        }
        println!("{row}");
    }
}
