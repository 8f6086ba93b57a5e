//! Writes a random game and the structured families in PGSolver format.

use pariton::bench::{gen_family, rngame, Family, GenSpec};
use pariton::write_pgsolver;

fn main() {
    let spec = GenSpec { n: 6, max_prio: 3, min_deg: 1, max_deg: 2, seed: 42 };
    print!("{}", write_pgsolver(&rngame(&spec).expect("valid spec")));
    for family in [Family::Ladder, Family::Clique] {
        println!("# {family}(3)");
        print!("{}", write_pgsolver(&gen_family(family, 3).expect("positive size")));
    }
}
