//! The hybrid quasi-polynomial solver: promotions inside a bounded-precision recursion.

use num_bigint::BigUint;

use crate::game::{ParityGame, Player};
use crate::ops::{
    attract_region, attract_towards, in_local, least_level_above, local_positions, progressed, snapshot,
};
use crate::region::{ExtPriority, Layer, Layers, StateView};
use crate::rpp::restrict_witness;
use crate::solve::{Cancel, CallStats, Frame, Interrupted, Observer, Point, Silent, SolveResult};

/// Solves `game` at full precision.
pub fn hpp_solve(game: &ParityGame) -> SolveResult {
    hpp_solve_with(game, &mut Silent, &Cancel::new()).expect("no cancellation requested")
}

pub fn hpp_solve_with<O: Observer>(
    game: &ParityGame,
    observer: &mut O,
    cancel: &Cancel,
) -> Result<SolveResult, Interrupted> {
    let n = game.len() as u64;
    let mut run = Hybrid { game, layers: Layers::initial(game), observer, cancel, stats: CallStats::default() };
    let top = game.max_priority_overall().map_or(ExtPriority::Bot, ExtPriority::Nat);
    run.sol(Call { p: top, c: ExtPriority::Top0, b: (n, n) })?;
    Ok(extract(game, &run.layers, run.stats))
}

/// W₁ = r⁻¹(⊤₁) ∪ u⁻¹(⊤₀) and W₀ its complement.
pub(crate) fn extract(game: &ParityGame, layers: &Layers, stats: CallStats) -> SolveResult {
    let mut w1 = layers.r.preimage_set(ExtPriority::Top1);
    w1.union_with(&layers.u.preimage_set(ExtPriority::Top0));
    let w0 = w1.complement();
    let d0 = layers.r.preimage_set(ExtPriority::Top0);
    let d1 = layers.r.preimage_set(ExtPriority::Top1);
    SolveResult {
        dominion_witness0: restrict_witness(game, &layers.witness, Player::Even, &d0),
        dominion_witness1: restrict_witness(game, &layers.witness, Player::Odd, &d1),
        w0,
        w1,
        stats,
    }
}

/// Precision bounds after halving the opponent's one.
pub fn half_bounds(alpha: Player, b: (u64, u64)) -> (u64, u64) {
    let a = alpha.index() as u64;
    (b.0 / (1 + a), b.1 / (2 - a))
}

/// n^l · C(h+l, l) − 1 with l = 2⌊log₂ n⌋ + 1.
pub fn qp_call_bound(n: u64, h: u64) -> BigUint {
    assert!(n >= 1, "the bound needs at least one position");
    let l = 2 * (63 - n.leading_zeros() as u64) + 1;
    let mut binom = BigUint::from(1u32);
    for i in 1..=l {
        binom = binom * BigUint::from(h + i) / BigUint::from(i);
    }
    BigUint::from(n).pow(l as u32) * binom - BigUint::from(1u32)
}

/// The per-call part of a hybrid state: current priority, caller priority and bounds.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Call {
    pub p: ExtPriority,
    pub c: ExtPriority,
    pub b: (u64, u64),
}

impl Call {
    fn alpha(&self) -> Player {
        self.p.parity().expect("current priority")
    }

    fn trivial(&self) -> bool {
        self.p == ExtPriority::Bot || self.b.0 == 0 || self.b.1 == 0
    }

    fn child(&self, layers: &Layers, b: (u64, u64)) -> Call {
        Call { p: layers.r.max_below(self.p).unwrap_or(ExtPriority::Bot), c: self.p, b }
    }
}

struct Hybrid<'a, O> {
    game: &'a ParityGame,
    layers: Layers,
    observer: &'a mut O,
    cancel: &'a Cancel,
    stats: CallStats,
}

impl<O: Observer> Hybrid<'_, O> {
    fn observe(&mut self, point: Point, s: Call) {
        let view = StateView::new(self.game, &self.layers, s.p);
        let frame = Frame { caller: s.c, bounds: Some(s.b), total: false };
        self.observer.observe(point, &view, &frame);
    }

    fn closed(&self, s: Call) -> bool {
        StateView::new(self.game, &self.layers, s.p).is_closed()
    }

    /// Promotes when sound, otherwise maximises; on a closed state either step makes progress.
    fn settle(&mut self, s: Call) {
        if StateView::new(self.game, &self.layers, s.p).can_promote() {
            self.prm(s);
        } else {
            self.max(s);
        }
    }

    fn sol(&mut self, s: Call) -> Result<(), Interrupted> {
        if s.trivial() {
            return Ok(());
        }
        self.cancel.check()?;
        self.stats.nontrivial_sol_calls += 1;
        self.observe(Point::Enter, s);
        self.hsol(s)?;
        let n = self.game.len();
        let before = snapshot(&self.layers, n, s.p);
        self.sol(s.child(&self.layers, s.b))?;
        self.observe(Point::Fold, s);
        self.settle(s);
        if !progressed(&self.layers, n, s.p, &before) {
            attract_region(self.game, &mut self.layers, s.p);
            if self.closed(s) {
                self.settle(s);
            }
        }
        if progressed(&self.layers, n, s.p, &before) {
            self.hsol(s)?;
        }
        self.und(s);
        Ok(())
    }

    fn hsol(&mut self, s: Call) -> Result<(), Interrupted> {
        let n = self.game.len();
        loop {
            self.stats.hsol_iterations += 1;
            attract_region(self.game, &mut self.layers, s.p);
            self.observe(Point::Region, s);
            if self.closed(s) {
                self.settle(s);
                continue;
            }
            let before = snapshot(&self.layers, n, s.p);
            self.sol(s.child(&self.layers, half_bounds(s.alpha(), s.b)))?;
            self.observe(Point::Fold, s);
            if self.closed(s) {
                self.settle(s);
                continue;
            }
            self.max(s);
            if progressed(&self.layers, n, s.p, &before) {
                continue;
            }
            attract_region(self.game, &mut self.layers, s.p);
            if self.closed(s) {
                self.settle(s);
                continue;
            }
            return Ok(());
        }
    }

    fn prm(&mut self, s: Call) {
        let alpha = s.alpha();
        let view = StateView::new(self.game, &self.layers, s.p);
        let region = view.region();
        let pr = view.bep(alpha.opponent(), &region, &self.layers.r);
        let pu = view.bep(alpha.opponent(), &region, &self.layers.u);
        debug_assert_eq!(pr.parity(), Some(alpha), "region escapes keep the region's parity");
        let members = region.to_vec();
        if pu.at_least(pr) {
            self.layers.promote_region(self.game, &members, pr);
        } else {
            self.layers.move_to_undetermined(self.game, &members, pu);
        }
        self.stats.promotions += 1;
        self.observe(Point::Promote, s);
    }

    fn max(&mut self, s: Call) {
        let p = s.p;
        let alpha = s.alpha();
        let mut changed = false;
        for beta in [alpha, alpha.opponent()] {
            let with_u = beta != alpha;
            changed |= self.absorb_top(beta, p, with_u);
            let Some((q, layer)) = least_level_above(&self.layers, beta, p, true) else { continue };
            let from = self.drawing_set(p, with_u);
            let layers = &self.layers;
            let (added, moves) = attract_towards(
                self.game,
                beta,
                &from,
                |v| in_local(layers, p, v) || (with_u && layers.u.get(v) == Some(p)),
                |w| layers.on_side(w, beta, ExtPriority::Bot) && !in_local(layers, p, w) && layers.u.get(w) != Some(p),
            );
            changed |= self.assign(&added, &moves, q, layer);
        }
        let opp = alpha.opponent();
        let from = local_positions(&self.layers, p);
        let layers = &self.layers;
        let (added, _) = attract_towards(
            self.game,
            opp,
            &from,
            |v| in_local(layers, p, v),
            |w| layers.on_side(w, opp, ExtPriority::Bot) && !in_local(layers, p, w),
        );
        changed |= self.assign(&added, &[], p, Layer::Undetermined);
        if changed {
            let rest = local_positions(&self.layers, p);
            self.layers.reset(self.game, &rest);
        }
        self.stats.max_ops += 1;
        self.observe(Point::Maximise, s);
    }

    /// Positions of L_s, plus U_s when drawing for the opponent.
    fn drawing_set(&self, p: ExtPriority, with_u: bool) -> Vec<usize> {
        let mut from = local_positions(&self.layers, p);
        if with_u {
            from.extend(self.layers.u.preimage(p));
        }
        from
    }

    /// Merges positions that `beta` forces into r⁻¹(⊤_β) into that dominion.
    fn absorb_top(&mut self, beta: Player, p: ExtPriority, with_u: bool) -> bool {
        let top = ExtPriority::top(beta);
        if self.layers.r.preimage_len(top) == 0 {
            return false;
        }
        let from = self.drawing_set(p, with_u);
        let layers = &self.layers;
        let (added, moves) = attract_towards(
            self.game,
            beta,
            &from,
            |v| in_local(layers, p, v) || (with_u && layers.u.get(v) == Some(p)),
            |w| layers.r.get(w) == Some(top),
        );
        self.assign(&added, &moves, top, Layer::Region)
    }

    fn assign(&mut self, added: &[usize], moves: &[(usize, usize)], q: ExtPriority, layer: Layer) -> bool {
        if added.is_empty() {
            return false;
        }
        match layer {
            Layer::Region => self.layers.assign_attracted(self.game, added, moves, q),
            Layer::Undetermined => self.layers.move_to_undetermined(self.game, added, q),
        }
        true
    }

    fn und(&mut self, s: Call) {
        let undetermined: Vec<usize> = self.layers.u.preimage(s.p).collect();
        if s.c.parity() == Some(s.alpha()) {
            self.layers.move_to_undetermined(self.game, &undetermined, s.c);
        } else {
            let local = local_positions(&self.layers, s.p);
            self.layers.move_to_undetermined(self.game, &local, s.c);
            self.layers.reset(self.game, &undetermined);
        }
        self.observe(Point::Return, s);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::PositionSet;

    fn single(prio: u32) -> ParityGame {
        ParityGame::new(vec![prio], vec![Player::Even], vec![vec![0]]).unwrap()
    }

    #[test]
    fn half_arithmetic() {
        assert_eq!(half_bounds(Player::Even, (8, 8)), (8, 4));
        assert_eq!(half_bounds(Player::Odd, (5, 5)), (2, 5));
    }

    #[test]
    fn call_bound_values() {
        assert_eq!(qp_call_bound(1, 1), BigUint::from(1u32));
        assert_eq!(qp_call_bound(4, 2), BigUint::from(21503u32));
    }

    #[test]
    fn self_loops() {
        let even = hpp_solve(&single(0));
        assert_eq!(even.w0.to_vec(), vec![0]);
        assert_eq!(even.stats.nontrivial_sol_calls, 1);
        let odd = hpp_solve(&single(1));
        assert_eq!(odd.w1.to_vec(), vec![0]);
    }

    #[test]
    fn pair_won_by_even_within_bound() {
        let g = ParityGame::new(vec![0, 1], vec![Player::Even, Player::Odd], vec![vec![0, 1], vec![0]]).unwrap();
        let res = hpp_solve(&g);
        assert_eq!(res.w0, PositionSet::full(2));
        assert!(BigUint::from(res.stats.nontrivial_sol_calls) <= qp_call_bound(2, 2));
    }

    #[test]
    fn zero_bound_is_trivial() {
        let g = single(0);
        let mut run = Hybrid {
            game: &g,
            layers: Layers::initial(&g),
            observer: &mut Silent,
            cancel: &Cancel::new(),
            stats: CallStats::default(),
        };
        run.sol(Call { p: ExtPriority::Nat(0), c: ExtPriority::Top0, b: (1, 0) }).unwrap();
        assert_eq!(run.stats.nontrivial_sol_calls, 0);
        assert_eq!(run.layers.r.get(0), Some(ExtPriority::Nat(0)));
    }
}
