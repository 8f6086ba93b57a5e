//! State operations shared by the promotion-based solvers.

use std::collections::HashMap;

use crate::game::{attract, ParityGame, Player, PositionSet};
use crate::region::{ExtPriority, Layer, Layers, Snapshot, order_less};

pub(crate) fn local_positions(layers: &Layers, p: ExtPriority) -> Vec<usize> {
    layers.r.at_most(p).collect()
}

pub(crate) fn in_local(layers: &Layers, p: ExtPriority, w: usize) -> bool {
    matches!(layers.r.get(w), Some(q) if q.rank() <= p.rank())
}

pub(crate) fn snapshot(layers: &Layers, n: usize, p: ExtPriority) -> Snapshot {
    Snapshot { local: PositionSet::from_positions(n, layers.r.at_most(p)), priority: p }
}

/// Whether the state at `p` is strictly below `before` in the progress order.
pub(crate) fn progressed(layers: &Layers, n: usize, p: ExtPriority, before: &Snapshot) -> bool {
    order_less(&snapshot(layers, n, p), before)
}

/// R ← atr^α(R) inside the local area; returns the number of added positions.
pub(crate) fn attract_region(game: &ParityGame, layers: &mut Layers, p: ExtPriority) -> usize {
    let alpha = p.parity().expect("current priority");
    let seeds: Vec<usize> = layers.r.preimage(p).collect();
    let mut reached = PositionSet::from_positions(game.len(), seeds.iter().copied());
    let mut moves = Vec::new();
    let added = {
        let view: &Layers = layers;
        attract(
            game,
            alpha,
            seeds,
            &mut reached,
            |v| in_local(view, p, v),
            |v| game.successors(v).iter().filter(|&&w| in_local(view, p, w)).count(),
            |v, w| moves.push((v, w)),
        )
    };
    if !added.is_empty() {
        layers.assign_attracted(game, &added, &moves, p);
    }
    added.len()
}

/// Restricted attractor atr^β(B, F) for a base and a drawing set given by predicates.
///
/// `from` lists the positions of F. Full-game moves are used.
pub(crate) fn attract_towards(
    game: &ParityGame,
    player: Player,
    from: &[usize],
    in_from: impl Fn(usize) -> bool,
    in_base: impl Fn(usize) -> bool,
) -> (Vec<usize>, Vec<(usize, usize)>) {
    let mut taken = PositionSet::new(game.len());
    let mut counters: HashMap<usize, usize> = HashMap::new();
    let mut queue = Vec::new();
    let mut moves = Vec::new();
    for &v in from {
        if game.owner(v) == player {
            if let Some(&w) = game.successors(v).iter().find(|&&w| in_base(w)) {
                taken.insert(v);
                queue.push(v);
                moves.push((v, w));
            }
        } else {
            let outside = game.successors(v).iter().filter(|&&w| !in_base(w)).count();
            if outside == 0 {
                taken.insert(v);
                queue.push(v);
            } else {
                counters.insert(v, outside);
            }
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let w = queue[head];
        head += 1;
        for &v in game.predecessors(w) {
            if taken.contains(v) || !in_from(v) {
                continue;
            }
            let take = if game.owner(v) == player {
                moves.push((v, w));
                true
            } else {
                match counters.get_mut(&v) {
                    Some(left) => {
                        *left -= 1;
                        *left == 0
                    }
                    None => false,
                }
            };
            if take {
                taken.insert(v);
                queue.push(v);
            }
        }
    }
    (queue, moves)
}

/// Least level above `p` on the side of `player`, with the map holding it.
///
/// With `include_u`, values of `u` counting for that side are considered too.
pub(crate) fn least_level_above(
    layers: &Layers,
    player: Player,
    p: ExtPriority,
    include_u: bool,
) -> Option<(ExtPriority, Layer)> {
    let from_r = layers
        .r
        .range()
        .find(|q| q.rank() > p.rank() && q.parity() == Some(player))
        .map(|q| (q, Layer::Region));
    let from_u = if include_u {
        layers
            .u
            .range()
            .find(|q| q.rank() > p.rank() && q.parity() == Some(player.opponent()))
            .map(|q| (q, Layer::Undetermined))
    } else {
        None
    };
    match (from_r, from_u) {
        (Some(a), Some(b)) => {
            if b.0.at_least(a.0) {
                Some(a)
            } else {
                Some(b)
            }
        }
        (a, b) => a.or(b),
    }
}
