//! Compares measured hybrid call counts with the quasi-polynomial call bound.

use pariton::bench::{rngame, GenSpec};
use pariton::{hpp_solve, qp_call_bound};

fn main() {
    for n in [10, 50, 200, 1000] {
        let game = rngame(&GenSpec::standard(n, 3)).expect("valid spec");
        let calls = hpp_solve(&game).stats.nontrivial_sol_calls;
        let bound = qp_call_bound(n as u64, game.priority_count() as u64);
        println!("n={n:5} h={:4} calls={calls:4} bound has {} digits", game.priority_count(), bound.to_string().len());
    }
}
