//! Solves a seeded random game with the hybrid solver and prints the winning regions.

use pariton::bench::{rngame, GenSpec};
use pariton::hpp_solve;

fn main() {
    let game = rngame(&GenSpec::standard(40, 7)).expect("valid spec");
    let res = hpp_solve(&game);
    println!("even wins {:?}", res.w0.to_vec());
    println!("odd wins  {:?}", res.w1.to_vec());
    println!("{} nontrivial calls, {} promotions", res.stats.nontrivial_sol_calls, res.stats.promotions);
}
