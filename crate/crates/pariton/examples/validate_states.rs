//! Runs the state validators on every intermediate state of the promotion solvers.

use pariton::bench::{rngame, GenSpec};
use pariton::oracle::ValidatingObserver;
use pariton::solve::{Algorithm, Cancel};

fn main() {
    for algo in [Algorithm::Rpp, Algorithm::Parys, Algorithm::Hpp] {
        let mut states = 0;
        let mut violations = 0;
        for seed in 0..50 {
            let game = rngame(&GenSpec::standard(60, seed)).expect("valid spec");
            let mut v = ValidatingObserver::new();
            algo.solve_with(&game, &mut v, &Cancel::new()).expect("not cancelled");
            states += v.states;
            violations += v.violations.len() + v.dominion_violations.len();
        }
        println!("{algo}: {states} states, {violations} violations");
    }
}
