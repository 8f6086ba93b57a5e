//! Parys' quasi-polynomial recursion expressed over the same layered state, without promotions.

use crate::game::ParityGame;
use crate::hpp::{extract, half_bounds, Call};
use crate::ops::{attract_region, attract_towards, in_local, local_positions, progressed, snapshot};
use crate::region::{ExtPriority, Layers, StateView};
use crate::solve::{Cancel, CallStats, Frame, Interrupted, Observer, Point, Silent, SolveResult};

pub fn parys_solve(game: &ParityGame) -> SolveResult {
    parys_solve_with(game, &mut Silent, &Cancel::new()).expect("no cancellation requested")
}

pub fn parys_solve_with<O: Observer>(
    game: &ParityGame,
    observer: &mut O,
    cancel: &Cancel,
) -> Result<SolveResult, Interrupted> {
    let n = game.len() as u64;
    let mut run = Parys { game, layers: Layers::initial(game), observer, cancel, stats: CallStats::default() };
    let top = game.max_priority_overall().map_or(ExtPriority::Bot, ExtPriority::Nat);
    run.sol(Call { p: top, c: ExtPriority::Top0, b: (n, n) })?;
    Ok(extract(game, &run.layers, run.stats))
}

struct Parys<'a, O> {
    game: &'a ParityGame,
    layers: Layers,
    observer: &'a mut O,
    cancel: &'a Cancel,
    stats: CallStats,
}

impl<O: Observer> Parys<'_, O> {
    fn observe(&mut self, point: Point, s: Call) {
        let view = StateView::new(self.game, &self.layers, s.p);
        let frame = Frame { caller: s.c, bounds: Some(s.b), total: false };
        self.observer.observe(point, &view, &frame);
    }

    fn child(&self, s: Call, b: (u64, u64)) -> Call {
        Call { p: self.layers.r.max_below(s.p).unwrap_or(ExtPriority::Bot), c: s.p, b }
    }

    fn sol(&mut self, s: Call) -> Result<(), Interrupted> {
        if s.p == ExtPriority::Bot || s.b.0 == 0 || s.b.1 == 0 {
            return Ok(());
        }
        self.cancel.check()?;
        self.stats.nontrivial_sol_calls += 1;
        self.observe(Point::Enter, s);
        self.hsol(s)?;
        let n = self.game.len();
        let before = snapshot(&self.layers, n, s.p);
        self.sol(self.child(s, s.b))?;
        self.observe(Point::Fold, s);
        self.max(s);
        if progressed(&self.layers, n, s.p, &before) {
            self.hsol(s)?;
        }
        self.und(s);
        Ok(())
    }

    fn hsol(&mut self, s: Call) -> Result<(), Interrupted> {
        let n = self.game.len();
        let alpha = s.p.parity().expect("current priority");
        loop {
            self.stats.hsol_iterations += 1;
            attract_region(self.game, &mut self.layers, s.p);
            self.observe(Point::Region, s);
            let before = snapshot(&self.layers, n, s.p);
            self.sol(self.child(s, half_bounds(alpha, s.b)))?;
            self.observe(Point::Fold, s);
            self.max(s);
            if !progressed(&self.layers, n, s.p, &before) {
                return Ok(());
            }
        }
    }

    /// Closes U_s under the opponent's attractor.
    fn max(&mut self, s: Call) {
        let p = s.p;
        let opp = p.parity().expect("current priority").opponent();
        let from = local_positions(&self.layers, p);
        let layers = &self.layers;
        let (added, _) = attract_towards(
            self.game,
            opp,
            &from,
            |v| in_local(layers, p, v),
            |w| layers.on_side(w, opp, ExtPriority::Bot) && !in_local(layers, p, w),
        );
        if !added.is_empty() {
            self.layers.move_to_undetermined(self.game, &added, p);
            let rest = local_positions(&self.layers, p);
            self.layers.reset(self.game, &rest);
        }
        self.stats.max_ops += 1;
        self.observe(Point::Maximise, s);
    }

    fn und(&mut self, s: Call) {
        let alpha = s.p.parity().expect("current priority");
        let undetermined: Vec<usize> = self.layers.u.preimage(s.p).collect();
        if s.c.parity() == Some(alpha) {
            self.layers.move_to_undetermined(self.game, &undetermined, s.c);
        } else {
            let local = local_positions(&self.layers, s.p);
            self.layers.move_to_undetermined(self.game, &local, s.c);
            self.layers.reset(self.game, &undetermined);
        }
        self.observe(Point::Return, s);
    }
}
