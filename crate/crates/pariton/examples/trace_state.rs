//! Prints every intermediate state of a small solve.

use pariton::bench::{gen_family, Family};
use pariton::solve::{Algorithm, Cancel, Tracer};

fn main() {
    let game = gen_family(Family::Ladder, 2).expect("positive size");
    let mut tracer = Tracer::default();
    Algorithm::Hpp.solve_with(&game, &mut tracer, &Cancel::new()).expect("not cancelled");
    print!("{}", tracer.text);
}
