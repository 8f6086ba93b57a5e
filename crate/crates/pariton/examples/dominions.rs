//! Enumerates the dominions of a tiny game and checks them and their attractors.

use pariton::bench::{gen_family, Family};
use pariton::oracle::{dominions, is_dominion};
use pariton::Player;

fn main() {
    let game = gen_family(Family::Clique, 3).expect("positive size");
    for alpha in Player::BOTH {
        for d in dominions(&game, alpha) {
            let closed = is_dominion(&game, &game.attractor(alpha, &d), alpha);
            println!("player {alpha}: dominion {:?}, attractor is a dominion: {closed}", d.to_vec());
        }
    }
}
