//! Checks the solvers against exhaustive strategy enumeration on tiny games.

use pariton::bench::{rngame, GenSpec};
use pariton::brute_force_solve;
use pariton::solve::Algorithm;

fn main() {
    let mut checked = 0;
    for seed in 0..200 {
        let spec = GenSpec { n: 1 + (seed % 7) as usize, max_prio: 3, min_deg: 1, max_deg: 2, seed };
        let game = rngame(&spec).expect("valid spec");
        let truth = brute_force_solve(&game).expect("tiny game");
        for algo in Algorithm::ALL {
            if let Some(v) = algo.solve(&game).first_difference(&truth) {
                panic!("{algo} is wrong at position {v} of seed {seed}");
            }
        }
        checked += 1;
    }
    println!("{checked} games agree with brute force");
}
