//! Reference solvers and validators for every structural contract of the promotion solvers.

use std::fmt;

use thiserror::Error;

use crate::game::{ParityGame, Player, PositionSet, Strategy};
use crate::region::{ExtPriority, Layers, StateView};
use crate::solve::{Cancel, Frame, Interrupted, Observer, Point, SolveResult};

/// Classic recursive solver, peeling the attractor of the highest priority.
pub fn zielonka_solve(game: &ParityGame) -> SolveResult {
    zielonka_solve_with(game, &Cancel::new()).expect("no cancellation requested")
}

pub fn zielonka_solve_with(game: &ParityGame, cancel: &Cancel) -> Result<SolveResult, Interrupted> {
    let (_, w1) = zielonka(game, game.all_positions(), cancel)?;
    Ok(SolveResult::from_w1(game, w1))
}

fn zielonka(game: &ParityGame, mask: PositionSet, cancel: &Cancel) -> Result<(PositionSet, PositionSet), Interrupted> {
    cancel.check()?;
    let sub = game.subgame(&mask);
    let Some(d) = sub.max_priority() else {
        return Ok((game.empty_set(), game.empty_set()));
    };
    let alpha = Player::of_priority(d);
    let top = sub.attractor(alpha, &sub.with_priority(d));
    let (w0, w1) = zielonka(game, mask.difference(&top), cancel)?;
    let lost = if alpha == Player::Even { &w1 } else { &w0 };
    if lost.is_empty() {
        return Ok(pair(alpha, mask, game.empty_set()));
    }
    let taken = sub.attractor(alpha.opponent(), lost);
    let (w0, w1) = zielonka(game, mask.difference(&taken), cancel)?;
    let (mine, mut theirs) = if alpha == Player::Even { (w0, w1) } else { (w1, w0) };
    theirs.union_with(&taken);
    Ok(pair(alpha, mine, theirs))
}

fn pair(alpha: Player, mine: PositionSet, theirs: PositionSet) -> (PositionSet, PositionSet) {
    match alpha {
        Player::Even => (mine, theirs),
        Player::Odd => (theirs, mine),
    }
}

pub const BRUTE_FORCE_CAP: usize = 10;
pub const BRUTE_FORCE_STRATEGY_CAP: u64 = 1 << 22;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BruteForceError {
    #[error("game has {positions} positions, brute force is capped at {cap}")]
    TooManyPositions { positions: usize, cap: usize },
    #[error("game has {count} memoryless strategies for player 0, more than {cap}")]
    TooManyStrategies { count: u64, cap: u64 },
}

/// Enumerates the memoryless strategies of player 0 and keeps the positions one of them wins.
pub fn brute_force_solve(game: &ParityGame) -> Result<SolveResult, BruteForceError> {
    let n = game.len();
    if n > BRUTE_FORCE_CAP {
        return Err(BruteForceError::TooManyPositions { positions: n, cap: BRUTE_FORCE_CAP });
    }
    let even: Vec<usize> = game.positions().filter(|&v| game.owner(v) == Player::Even).collect();
    let mut count: u64 = 1;
    for &v in &even {
        count = count.saturating_mul(game.successors(v).len() as u64);
    }
    if count > BRUTE_FORCE_STRATEGY_CAP {
        return Err(BruteForceError::TooManyStrategies { count, cap: BRUTE_FORCE_STRATEGY_CAP });
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut won: u64 = 0;
    let mut choice = vec![0usize; even.len()];
    loop {
        let mut adj = vec![0u64; n];
        for v in game.positions() {
            for &w in game.successors(v) {
                adj[v] |= 1 << w;
            }
        }
        for (i, &v) in even.iter().enumerate() {
            adj[v] = 1 << game.successors(v)[choice[i]];
        }
        won |= full & !losing_for_even(game, &adj);
        if won == full || !advance(&mut choice, |i| game.successors(even[i]).len()) {
            break;
        }
    }
    let w1 = PositionSet::from_positions(n, (0..n).filter(|&v| won & (1 << v) == 0));
    Ok(SolveResult::from_w1(game, w1))
}

fn advance(choice: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for i in 0..choice.len() {
        choice[i] += 1;
        if choice[i] < radix(i) {
            return true;
        }
        choice[i] = 0;
    }
    false
}

/// Positions from which some cycle with odd maximum is reachable in the one-player graph `adj`.
fn losing_for_even(game: &ParityGame, adj: &[u64]) -> u64 {
    let n = adj.len();
    let mut odd_cycle: u64 = 0;
    let mut odd: Vec<u32> = game.positions().map(|v| game.priority(v)).filter(|p| p % 2 == 1).collect();
    odd.sort_unstable();
    odd.dedup();
    for k in odd {
        let keep: u64 = (0..n).filter(|&v| game.priority(v) <= k).fold(0, |m, v| m | 1 << v);
        let sub: Vec<u64> = (0..n).map(|v| if keep & (1 << v) != 0 { adj[v] & keep } else { 0 }).collect();
        let reach = closure(&sub);
        for v in 0..n {
            if game.priority(v) == k && reach[v] & (1 << v) != 0 {
                odd_cycle |= 1 << v;
            }
        }
    }
    let reach = closure(adj);
    (0..n).filter(|&v| reach[v] & odd_cycle != 0).fold(0, |m, v| m | 1 << v)
}

/// Reachability in one or more steps.
fn closure(adj: &[u64]) -> Vec<u64> {
    let mut reach = adj.to_vec();
    for k in 0..adj.len() {
        for v in 0..adj.len() {
            if reach[v] & (1 << k) != 0 {
                reach[v] |= reach[k];
            }
        }
    }
    reach
}

/// One broken rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub positions: Vec<usize>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} at {:?}", self.rule, self.message, self.positions)
    }
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    fn push(&mut self, rule: &'static str, positions: Vec<usize>, message: impl Into<String>) {
        self.violations.push(Violation { rule, positions, message: message.into() });
    }

    pub fn has_rule(&self, rule: &str) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }
}

/// Every cycle inside `q` has a maximum of parity `player`, with `player` following `witness`.
///
/// Positions of `player` without a witness move keep all their moves inside `q`.
pub fn check_quasi_dominion(game: &ParityGame, q: &PositionSet, player: Player, witness: &Strategy) -> ValidationReport {
    let mut report = ValidationReport::default();
    let nodes = q.to_vec();
    let mut edges: Vec<Vec<usize>> = vec![Vec::new(); game.len()];
    for &v in &nodes {
        if game.owner(v) == player {
            if let Some(w) = witness.get(v) {
                if !game.successors(v).contains(&w) {
                    report.push("witness-edge", vec![v, w], "witness move is not a move of the game");
                    continue;
                }
                if q.contains(w) {
                    edges[v].push(w);
                }
                continue;
            }
        }
        edges[v].extend(game.successors(v).iter().copied().filter(|&w| q.contains(w)));
    }
    let mut work = vec![nodes];
    while let Some(part) = work.pop() {
        let member = PositionSet::from_positions(game.len(), part.iter().copied());
        for comp in sccs(&part, |v| edges[v].iter().copied().filter(|&w| member.contains(w))) {
            let cyclic = comp.len() > 1 || edges[comp[0]].contains(&comp[0]);
            if !cyclic {
                continue;
            }
            let top = comp.iter().map(|&v| game.priority(v)).max().expect("nonempty component");
            if Player::of_priority(top) != player {
                let at: Vec<usize> = comp.iter().copied().filter(|&v| game.priority(v) == top).collect();
                report.push("cycle-parity", at, format!("a cycle with maximum {top} is won by {}", player.opponent()));
                continue;
            }
            let rest: Vec<usize> = comp.into_iter().filter(|&v| game.priority(v) != top).collect();
            if !rest.is_empty() {
                work.push(rest);
            }
        }
    }
    report
}

/// Strongly connected components of the graph over `nodes`, by an iterative Tarjan walk.
fn sccs<I: Iterator<Item = usize>>(nodes: &[usize], succ: impl Fn(usize) -> I) -> Vec<Vec<usize>> {
    use std::collections::HashMap;
    let mut index: HashMap<usize, usize> = HashMap::new();
    let mut low: HashMap<usize, usize> = HashMap::new();
    let mut on_stack: HashMap<usize, bool> = HashMap::new();
    let mut stack = Vec::new();
    let mut out = Vec::new();
    let mut counter = 0;
    for &root in nodes {
        if index.contains_key(&root) {
            continue;
        }
        let mut call: Vec<(usize, Vec<usize>, usize)> = Vec::new();
        index.insert(root, counter);
        low.insert(root, counter);
        counter += 1;
        stack.push(root);
        on_stack.insert(root, true);
        call.push((root, succ(root).collect(), 0));
        while let Some(frame) = call.last_mut() {
            let v = frame.0;
            if frame.2 < frame.1.len() {
                let w = frame.1[frame.2];
                frame.2 += 1;
                if !index.contains_key(&w) {
                    index.insert(w, counter);
                    low.insert(w, counter);
                    counter += 1;
                    stack.push(w);
                    on_stack.insert(w, true);
                    call.push((w, succ(w).collect(), 0));
                } else if on_stack.get(&w).copied().unwrap_or(false) {
                    let m = low[&v].min(index[&w]);
                    low.insert(v, m);
                }
                continue;
            }
            call.pop();
            if let Some(parent) = call.last() {
                let m = low[&parent.0].min(low[&v]);
                low.insert(parent.0, m);
            }
            if low[&v] == index[&v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack.insert(w, false);
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                out.push(comp);
            }
        }
    }
    out
}

/// Quasi-dominion check plus closure: the witness and every opponent move stay inside `d`.
pub fn check_dominion(game: &ParityGame, d: &PositionSet, player: Player, witness: &Strategy) -> ValidationReport {
    let mut report = check_quasi_dominion(game, d, player, witness);
    for v in d.iter() {
        if game.owner(v) == player {
            match witness.get(v) {
                Some(w) if d.contains(w) => {}
                Some(w) => report.push("closure", vec![v, w], "witness leaves the set"),
                None => report.push("closure", vec![v], "no witness move"),
            }
        } else if let Some(&w) = game.successors(v).iter().find(|&&w| !d.contains(w)) {
            report.push("closure", vec![v, w], format!("{} can leave the set", player.opponent()));
        }
    }
    report
}

/// Existence check of a quasi dominion: `player` wins every play staying in `q` from every position of `q`.
pub fn is_quasi_dominion(game: &ParityGame, q: &PositionSet, player: Player) -> bool {
    closure_game_won(game, q, player, |_| true)
}

/// Existence check of a `q`-region of `player`: a quasi dominion with priorities at most `q` whose
/// escapes, counted under the witness, all have priority `q`.
pub fn is_region(game: &ParityGame, r: &PositionSet, player: Player, q: u32) -> bool {
    r.iter().all(|v| game.priority(v) <= q)
        && game.escape(player.opponent(), r).iter().all(|v| game.priority(v) == q)
        && closure_game_won(game, r, player, |v| game.priority(v) == q)
}

/// Solves `set` with every exit redirected to a sink. Exits from positions where `may_leave` holds
/// reach a sink won by `player`; the other exits reach a sink won by the opponent.
fn closure_game_won(game: &ParityGame, set: &PositionSet, player: Player, may_leave: impl Fn(usize) -> bool) -> bool {
    if set.is_empty() {
        return true;
    }
    let keep = set.to_vec();
    let good = keep.len();
    let bad = good + 1;
    let mut index = vec![usize::MAX; game.len()];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    let mut priority: Vec<u32> = keep.iter().map(|&v| game.priority(v)).collect();
    let mut owner: Vec<Player> = keep.iter().map(|&v| game.owner(v)).collect();
    let mut moves: Vec<Vec<usize>> = keep
        .iter()
        .map(|&v| {
            let exit = if may_leave(v) { good } else { bad };
            game.successors(v).iter().map(|&w| if set.contains(w) { index[w] } else { exit }).collect()
        })
        .collect();
    for (sink, winner) in [(good, player), (bad, player.opponent())] {
        priority.push(winner.index() as u32);
        owner.push(winner);
        moves.push(vec![sink]);
    }
    let g = ParityGame::new(priority, owner, moves).expect("well-formed closure game");
    let res = zielonka_solve(&g);
    (0..good).all(|i| res.winner(i) == player)
}

/// Existence check of a dominion: closed for the opponent and won by `player` inside.
pub fn is_dominion(game: &ParityGame, d: &PositionSet, player: Player) -> bool {
    if d.is_empty() {
        return false;
    }
    for v in d.iter() {
        let succ = game.successors(v);
        let closed =
            if game.owner(v) == player { succ.iter().any(|&w| d.contains(w)) } else { succ.iter().all(|&w| d.contains(w)) };
        if !closed {
            return false;
        }
    }
    let (sub, _) = game.induced(d).expect("closed sets induce a sink-free game");
    zielonka_solve(&sub).winning(player).len() == sub.len()
}

/// All dominions of `player`, by subset enumeration. Only for games of at most [`BRUTE_FORCE_CAP`] positions.
pub fn dominions(game: &ParityGame, player: Player) -> Vec<PositionSet> {
    assert!(game.len() <= BRUTE_FORCE_CAP, "subset enumeration is capped");
    let n = game.len();
    (1u32..(1 << n))
        .map(|m| PositionSet::from_positions(n, (0..n).filter(|&v| m & (1 << v) != 0)))
        .filter(|d| is_dominion(game, d, player))
        .collect()
}

/// Def.-2 style check: every value of `r` and `u` is at least the native priority.
pub fn check_monotone(game: &ParityGame, layers: &Layers) -> ValidationReport {
    let mut report = ValidationReport::default();
    for (name, f) in [("r", &layers.r), ("u", &layers.u)] {
        for (q, bucket) in f.buckets() {
            let bad: Vec<usize> = bucket.iter().copied().filter(|&v| q.rank() < ExtPriority::Nat(game.priority(v)).rank()).collect();
            if !bad.is_empty() {
                report.push("monotone", bad, format!("{name} value {q} below the native priority"));
            }
        }
    }
    report
}

/// Region-function conditions over `r`, with side sets taken across both maps.
///
/// Condition 2: escapes of H^{α,q} carry their own priority, at least q and of parity α.
/// Condition 1: an α-position whose witness leaves H^{α,q} has no move inside it, and
/// H_r^α is a quasi α-dominion under the witness.
pub fn check_region_function(game: &ParityGame, layers: &Layers) -> ValidationReport {
    let mut report = ValidationReport::default();
    for alpha in Player::BOTH {
        let opp = alpha.opponent();
        let levels: Vec<ExtPriority> = layers.r.range().filter(|q| q.parity() == Some(alpha)).collect();
        for &q in &levels {
            let inside = |w: usize| layers.on_side(w, alpha, q);
            let mut bad = Vec::new();
            for (level, bucket) in layers.r.buckets() {
                if level.parity() != Some(alpha) || !level.at_least(q) {
                    continue;
                }
                for &v in bucket {
                    if !game.can_escape(opp, v, inside) {
                        continue;
                    }
                    let native = game.priority(v);
                    if ExtPriority::Nat(native).rank() < q.rank() || Player::of_priority(native) != alpha {
                        bad.push(v);
                    }
                }
            }
            if !bad.is_empty() {
                report.push("region-escape", bad, format!("escape of H^({alpha},{q}) below {q} or of the wrong parity"));
            }
        }
        let side = layers.r.side_set(alpha);
        let mut missing = Vec::new();
        let mut leaking = Vec::new();
        for v in side.iter().filter(|&v| game.owner(v) == alpha) {
            let level = layers.r.get(v).expect("side of r");
            let Some(w) = layers.witness.get(v) else {
                missing.push(v);
                continue;
            };
            for &q in levels.iter().filter(|q| level.at_least(**q)) {
                let inside = |x: usize| layers.on_side(x, alpha, q);
                if !inside(w) && game.successors(v).iter().any(|&x| inside(x)) {
                    leaking.push(v);
                    break;
                }
            }
        }
        if !missing.is_empty() {
            report.push("region-witness", missing, format!("{alpha} position of H_r^{alpha} without a witness"));
        }
        if !leaking.is_empty() {
            report.push("region-leak", leaking, "witness leaves a side set it could stay in");
        }
        report.merge(check_quasi_dominion(game, &side, alpha, &layers.witness));
    }
    report
}

/// Def.-4 totality: every position carries an `r` value.
pub fn check_total(game: &ParityGame, layers: &Layers) -> ValidationReport {
    let mut report = ValidationReport::default();
    let missing: Vec<usize> = game.positions().filter(|&v| !layers.r.contains(v)).collect();
    if !missing.is_empty() {
        report.push("total", missing, "position outside dom(r)");
    }
    report
}

/// Clauses (a), (b) and (c) of a hybrid state with current priority `view.priority` and caller `frame.caller`.
pub fn check_hybrid_state(game: &ParityGame, view: &StateView<'_>, frame: &Frame) -> ValidationReport {
    let mut report = ValidationReport::default();
    let layers = view.layers;
    let p = view.priority;
    let c = frame.caller;
    let both: Vec<usize> = game.positions().filter(|&v| layers.r.contains(v) && layers.u.contains(v)).collect();
    let neither: Vec<usize> = game.positions().filter(|&v| !layers.r.contains(v) && !layers.u.contains(v)).collect();
    if !both.is_empty() {
        report.push("hybrid-a", both, "position in both maps");
    }
    if !neither.is_empty() {
        report.push("hybrid-a", neither, "position in neither map");
    }
    if p.rank() >= c.rank() {
        report.push("hybrid-a", vec![], format!("current priority {p} not below caller {c}"));
    }
    let between: Vec<usize> = game
        .positions()
        .filter(|&v| {
            let value = layers.r.get(v).or(layers.u.get(v));
            matches!(value, Some(q) if q.rank() > p.rank() && q.rank() < c.rank())
        })
        .collect();
    if !between.is_empty() {
        report.push("hybrid-a", between, format!("value strictly between {p} and {c}"));
    }
    if layers.u.preimage_len(ExtPriority::Top1) > 0 {
        report.push("hybrid-b", layers.u.preimage(ExtPriority::Top1).collect(), "u maps to top 1");
    }
    let low: Vec<usize> = layers.u.buckets().filter(|(q, _)| q.rank() < p.rank()).flat_map(|(_, b)| b.iter().copied()).collect();
    if !low.is_empty() {
        report.push("hybrid-b", low, format!("u value below {p}"));
    }
    if c != ExtPriority::Top0 && layers.u.preimage_len(ExtPriority::Top0) > 0 {
        report.push("hybrid-b", layers.u.preimage(ExtPriority::Top0).collect(), "u maps to top 0 below the outermost call");
    }
    let mut levels: Vec<ExtPriority> = layers.r.range().chain(layers.u.range()).filter(|q| q.rank() >= p.rank()).collect();
    levels.push(p);
    levels.sort_by_key(|q| q.rank());
    levels.dedup();
    for alpha in Player::BOTH {
        let opp = alpha.opponent();
        for &q in &levels {
            let bad: Vec<usize> = layers
                .u
                .buckets()
                .filter(|(level, _)| level.parity() == Some(opp) && level.at_least(q))
                .flat_map(|(_, b)| b.iter().copied())
                .filter(|&w| game.can_escape(opp, w, |x| layers.on_side(x, alpha, q)))
                .collect();
            if !bad.is_empty() {
                report.push("hybrid-c", bad, format!("{opp} escapes H_s^({alpha},{q}) from u"));
            }
        }
    }
    report
}

/// Runs every applicable validator on each reported state and keeps the violations.
#[derive(Default)]
pub struct ValidatingObserver {
    pub states: u64,
    pub violations: Vec<(Point, Violation)>,
    /// Violations of the dominion check on the top sets, kept separately.
    pub dominion_violations: Vec<(Point, Violation)>,
}

impl ValidatingObserver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty() && self.dominion_violations.is_empty()
    }
}

impl Observer for ValidatingObserver {
    fn observe(&mut self, point: Point, view: &StateView<'_>, frame: &Frame) {
        self.states += 1;
        let game = view.game;
        let mut report = check_monotone(game, view.layers);
        report.merge(check_region_function(game, view.layers));
        if frame.total {
            report.merge(check_total(game, view.layers));
        }
        if frame.bounds.is_some() {
            report.merge(check_hybrid_state(game, view, frame));
        }
        self.violations.extend(report.violations.into_iter().map(|v| (point, v)));
        for alpha in Player::BOTH {
            let d = view.layers.r.preimage_set(ExtPriority::top(alpha));
            if d.is_empty() {
                continue;
            }
            let report = check_dominion(game, &d, alpha, &view.layers.witness);
            self.dominion_violations.extend(report.violations.into_iter().map(|v| (point, v)));
        }
    }
}
