//! The exponential recursive priority promotion solver.

use crate::game::{ParityGame, Player, Strategy};
use crate::ops::{attract_region, attract_towards, in_local, least_level_above, local_positions};
use crate::region::{ExtPriority, Layers, StateView};
use crate::solve::{Cancel, CallStats, Frame, Interrupted, Observer, Point, Silent, SolveResult};

/// Solves `game`, returning the partition (r⁻¹(⊤₀), r⁻¹(⊤₁)).
pub fn rpp_solve(game: &ParityGame) -> SolveResult {
    rpp_solve_with(game, &mut Silent, &Cancel::new()).expect("no cancellation requested")
}

pub fn rpp_solve_with<O: Observer>(
    game: &ParityGame,
    observer: &mut O,
    cancel: &Cancel,
) -> Result<SolveResult, Interrupted> {
    let mut run = Rpp { game, layers: Layers::initial(game), observer, cancel, stats: CallStats::default() };
    let top = game.max_priority_overall().map_or(ExtPriority::Bot, ExtPriority::Nat);
    run.sol(top)?;
    Ok(run.finish())
}

struct Rpp<'a, O> {
    game: &'a ParityGame,
    layers: Layers,
    observer: &'a mut O,
    cancel: &'a Cancel,
    stats: CallStats,
}

impl<O: Observer> Rpp<'_, O> {
    fn observe(&mut self, point: Point, p: ExtPriority) {
        let view = StateView::new(self.game, &self.layers, p);
        let frame = Frame { caller: ExtPriority::Top0, bounds: None, total: true };
        self.observer.observe(point, &view, &frame);
    }

    fn view(&self, p: ExtPriority) -> StateView<'_> {
        StateView::new(self.game, &self.layers, p)
    }

    fn sol(&mut self, p: ExtPriority) -> Result<(), Interrupted> {
        loop {
            if p == ExtPriority::Bot || self.layers.r.at_most(p).next().is_none() {
                return Ok(());
            }
            self.cancel.check()?;
            self.stats.nontrivial_sol_calls += 1;
            self.observe(Point::Enter, p);
            attract_region(self.game, &mut self.layers, p);
            self.observe(Point::Region, p);
            if self.view(p).is_open() {
                let next = self.layers.r.max_below(p).unwrap_or(ExtPriority::Bot);
                self.sol(next)?;
                self.observe(Point::Fold, p);
            }
            if self.view(p).can_promote() {
                self.prm(p);
            } else {
                self.max(p);
            }
        }
    }

    fn prm(&mut self, p: ExtPriority) {
        let alpha = p.parity().expect("current priority");
        let region = self.view(p).region();
        let q = self.view(p).bep(alpha.opponent(), &region, &self.layers.r);
        debug_assert!(q.rank() > p.rank(), "promotion must raise the region");
        debug_assert_eq!(q.parity(), Some(alpha), "promotion keeps the region's parity");
        let members = region.to_vec();
        self.layers.promote_region(self.game, &members, q);
        self.stats.promotions += 1;
        self.observe(Point::Promote, p);
    }

    fn max(&mut self, p: ExtPriority) {
        let alpha = p.parity().expect("current priority");
        for beta in [alpha, alpha.opponent()] {
            let Some((q, _)) = least_level_above(&self.layers, beta, p, false) else { continue };
            let from = local_positions(&self.layers, p);
            let layers = &self.layers;
            let (added, moves) = attract_towards(
                self.game,
                beta,
                &from,
                |v| in_local(layers, p, v),
                |w| matches!(layers.r.get(w), Some(x) if x.rank() > p.rank() && x.parity() == Some(beta)),
            );
            if !added.is_empty() {
                self.layers.assign_attracted(self.game, &added, &moves, q);
            }
        }
        let rest = local_positions(&self.layers, p);
        self.layers.reset(self.game, &rest);
        self.stats.max_ops += 1;
        self.observe(Point::Maximise, p);
    }

    fn finish(self) -> SolveResult {
        let n = self.game.len();
        let w0 = self.layers.r.preimage_set(ExtPriority::Top0);
        let w1 = self.layers.r.preimage_set(ExtPriority::Top1);
        debug_assert_eq!(w0.len() + w1.len(), n, "every position ends in a dominion");
        SolveResult {
            dominion_witness0: restrict_witness(self.game, &self.layers.witness, Player::Even, &w0),
            dominion_witness1: restrict_witness(self.game, &self.layers.witness, Player::Odd, &w1),
            w0,
            w1,
            stats: self.stats,
        }
    }
}

/// The part of `witness` on the positions of `set` owned by `player`.
pub(crate) fn restrict_witness(
    game: &ParityGame,
    witness: &Strategy,
    player: Player,
    set: &crate::game::PositionSet,
) -> Strategy {
    let mut out = Strategy::new(game.len());
    for v in set.iter() {
        if game.owner(v) == player {
            if let Some(w) = witness.get(v) {
                out.set(v, w);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::PositionSet;

    fn single(prio: u32, owner: Player) -> ParityGame {
        ParityGame::new(vec![prio], vec![owner], vec![vec![0]]).unwrap()
    }

    #[test]
    fn even_self_loop() {
        let res = rpp_solve(&single(0, Player::Even));
        assert_eq!(res.w0.to_vec(), vec![0]);
        assert!(res.w1.is_empty());
    }

    #[test]
    fn odd_self_loop_is_one_promotion() {
        let res = rpp_solve(&single(1, Player::Even));
        assert_eq!(res.w1.to_vec(), vec![0]);
        assert_eq!(res.stats.promotions, 1);
    }

    #[test]
    fn pair_won_by_even() {
        let g = ParityGame::new(vec![0, 1], vec![Player::Even, Player::Odd], vec![vec![0, 1], vec![0]]).unwrap();
        let res = rpp_solve(&g);
        assert_eq!(res.w0, PositionSet::full(2));
        assert_eq!(res.dominion_witness0.get(0), Some(0));
    }

    #[test]
    fn empty_game() {
        let g = ParityGame::new(vec![], vec![], vec![]).unwrap();
        let res = rpp_solve(&g);
        assert!(res.w0.is_empty() && res.w1.is_empty());
    }
}
