//! Promotion functions, side sets and the shared solver state.
//!
//! A solver state keeps two partial maps over positions: `r` for regions and
//! `u` for positions whose winner is still undetermined. Positions of `u` with
//! a value of parity β count on the side of the opponent of β.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::game::{ParityGame, Player, PositionSet, Strategy};

/// A priority extended with a bottom element and one top per player.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtPriority {
    Bot,
    Nat(u32),
    Top0,
    Top1,
}

impl ExtPriority {
    pub fn top(player: Player) -> ExtPriority {
        match player {
            Player::Even => ExtPriority::Top0,
            Player::Odd => ExtPriority::Top1,
        }
    }

    /// Player favoured by this value; `None` for bottom.
    pub fn parity(self) -> Option<Player> {
        match self {
            ExtPriority::Bot => None,
            ExtPriority::Nat(k) => Some(Player::of_priority(k)),
            ExtPriority::Top0 => Some(Player::Even),
            ExtPriority::Top1 => Some(Player::Odd),
        }
    }

    pub fn is_top(self) -> bool {
        matches!(self, ExtPriority::Top0 | ExtPriority::Top1)
    }

    pub fn nat(self) -> Option<u32> {
        match self {
            ExtPriority::Nat(k) => Some(k),
            _ => None,
        }
    }

    /// Total storage key; places `Top0` below `Top1`.
    pub fn rank(self) -> u64 {
        match self {
            ExtPriority::Bot => 0,
            ExtPriority::Nat(k) => k as u64 + 1,
            ExtPriority::Top0 => u64::MAX - 1,
            ExtPriority::Top1 => u64::MAX,
        }
    }

    pub fn from_rank(rank: u64) -> ExtPriority {
        match rank {
            0 => ExtPriority::Bot,
            u64::MAX => ExtPriority::Top1,
            r if r == u64::MAX - 1 => ExtPriority::Top0,
            r => ExtPriority::Nat((r - 1) as u32),
        }
    }

    /// `self ≥ q`, where the two tops are treated as equal.
    pub fn at_least(self, q: ExtPriority) -> bool {
        match (self.is_top(), q.is_top()) {
            (true, _) => true,
            (false, true) => false,
            (false, false) => self.rank() >= q.rank(),
        }
    }
}

impl PartialOrd for ExtPriority {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        use ExtPriority::*;
        match (self, other) {
            (Top0, Top1) | (Top1, Top0) => {
                debug_assert!(false, "the two top values are incomparable");
                None
            }
            _ => Some(self.rank().cmp(&other.rank())),
        }
    }
}

impl fmt::Display for ExtPriority {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtPriority::Bot => write!(f, "⊥"),
            ExtPriority::Nat(k) => write!(f, "{k}"),
            ExtPriority::Top0 => write!(f, "⊤0"),
            ExtPriority::Top1 => write!(f, "⊤1"),
        }
    }
}

/// A relation used to restrict a promotion function.
#[derive(Clone, Debug)]
pub enum Restriction {
    Less(ExtPriority),
    AtMost(ExtPriority),
    AtLeast(ExtPriority),
    Greater(ExtPriority),
    Parity(Player),
    All(Vec<Restriction>),
}

impl Restriction {
    pub fn holds(&self, value: ExtPriority) -> bool {
        match self {
            Restriction::Less(q) => !value.at_least(*q),
            Restriction::AtMost(q) => q.at_least(value),
            Restriction::AtLeast(q) => value.at_least(*q),
            Restriction::Greater(q) => value.at_least(*q) && !q.at_least(value),
            Restriction::Parity(p) => value.parity() == Some(*p),
            Restriction::All(parts) => parts.iter().all(|r| r.holds(value)),
        }
    }
}

/// A partial map from positions to extended priorities, bucketed by value.
#[derive(Clone, PartialEq, Eq)]
pub struct PromotionFunction {
    values: Vec<Option<ExtPriority>>,
    buckets: BTreeMap<u64, BTreeSet<usize>>,
}

impl PromotionFunction {
    pub fn empty(capacity: usize) -> Self {
        PromotionFunction { values: vec![None; capacity], buckets: BTreeMap::new() }
    }

    /// The map `pr` sending every position to its own priority.
    pub fn priorities(game: &ParityGame) -> Self {
        let mut f = PromotionFunction::empty(game.len());
        for v in game.positions() {
            f.set(v, ExtPriority::Nat(game.priority(v)));
        }
        f
    }

    pub fn from_values(values: Vec<Option<ExtPriority>>) -> Self {
        let mut f = PromotionFunction::empty(values.len());
        for (v, q) in values.into_iter().enumerate() {
            if let Some(q) = q {
                f.set(v, q);
            }
        }
        f
    }

    pub fn capacity(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, v: usize) -> Option<ExtPriority> {
        self.values[v]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.values[v].is_some()
    }

    pub fn set(&mut self, v: usize, q: ExtPriority) {
        if let Some(old) = self.values[v] {
            if old == q {
                return;
            }
            self.detach(v, old);
        }
        self.values[v] = Some(q);
        self.buckets.entry(q.rank()).or_default().insert(v);
    }

    pub fn remove(&mut self, v: usize) -> Option<ExtPriority> {
        let old = self.values[v].take()?;
        self.detach(v, old);
        Some(old)
    }

    fn detach(&mut self, v: usize, old: ExtPriority) {
        let key = old.rank();
        let bucket = self.buckets.get_mut(&key).expect("bucket of a stored value");
        bucket.remove(&v);
        if bucket.is_empty() {
            self.buckets.remove(&key);
        }
    }

    pub fn domain(&self) -> PositionSet {
        PositionSet::from_positions(self.capacity(), self.buckets.values().flatten().copied())
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.is_empty()
    }

    /// Occupied values in ascending storage order.
    pub fn range(&self) -> impl DoubleEndedIterator<Item = ExtPriority> + '_ {
        self.buckets.keys().map(|&k| ExtPriority::from_rank(k))
    }

    /// f⁻¹(q) in ascending order.
    pub fn preimage(&self, q: ExtPriority) -> impl Iterator<Item = usize> + '_ {
        self.buckets.get(&q.rank()).into_iter().flatten().copied()
    }

    pub fn preimage_set(&self, q: ExtPriority) -> PositionSet {
        PositionSet::from_positions(self.capacity(), self.preimage(q))
    }

    pub fn preimage_len(&self, q: ExtPriority) -> usize {
        self.buckets.get(&q.rank()).map_or(0, BTreeSet::len)
    }

    /// Positions with a value at most `q` (by storage rank).
    pub fn at_most(&self, q: ExtPriority) -> impl Iterator<Item = usize> + '_ {
        self.buckets.range(..=q.rank()).flat_map(|(_, b)| b.iter().copied())
    }

    /// Largest occupied value strictly below `q`.
    pub fn max_below(&self, q: ExtPriority) -> Option<ExtPriority> {
        self.buckets.range(..q.rank()).next_back().map(|(&k, _)| ExtPriority::from_rank(k))
    }

    pub fn restrict(&self, rel: &Restriction) -> PromotionFunction {
        let mut out = PromotionFunction::empty(self.capacity());
        for (&k, bucket) in &self.buckets {
            let q = ExtPriority::from_rank(k);
            if rel.holds(q) {
                for &v in bucket {
                    out.set(v, q);
                }
            }
        }
        out
    }

    /// H_f^α: positions whose value has parity α.
    pub fn side_set(&self, player: Player) -> PositionSet {
        self.side_set_from(player, ExtPriority::Bot)
    }

    /// H_f^{α,q}: positions whose value has parity α and is at least `q`.
    pub fn side_set_from(&self, player: Player, q: ExtPriority) -> PositionSet {
        let mut out = PositionSet::new(self.capacity());
        for (&k, bucket) in &self.buckets {
            let value = ExtPriority::from_rank(k);
            if value.parity() == Some(player) && value.at_least(q) {
                for &v in bucket {
                    out.insert(v);
                }
            }
        }
        out
    }

    pub fn buckets(&self) -> impl DoubleEndedIterator<Item = (ExtPriority, &BTreeSet<usize>)> + '_ {
        self.buckets.iter().map(|(&k, b)| (ExtPriority::from_rank(k), b))
    }
}

impl fmt::Debug for PromotionFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (q, b) in self.buckets() {
            m.entry(&q.to_string(), b);
        }
        m.finish()
    }
}

/// The part of a state that the progress order looks at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snapshot {
    pub local: PositionSet,
    pub priority: ExtPriority,
}

/// `a ≺ b`: the local area strictly shrank, or stayed equal while the priority dropped.
pub fn order_less(a: &Snapshot, b: &Snapshot) -> bool {
    if a.local == b.local {
        return a.priority.rank() < b.priority.rank();
    }
    a.local.is_subset(&b.local)
}

/// Which map a position is stored in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layer {
    Region,
    Undetermined,
}

/// The two maps of a solver state plus the witness strategy of the regions.
///
/// The witness gives, for every position of `r` owned by the player its value
/// favours, a move that keeps plays inside that player's side.
#[derive(Clone, Debug)]
pub struct Layers {
    pub r: PromotionFunction,
    pub u: PromotionFunction,
    pub witness: Strategy,
}

impl Layers {
    pub fn initial(game: &ParityGame) -> Self {
        let mut layers = Layers {
            r: PromotionFunction::priorities(game),
            u: PromotionFunction::empty(game.len()),
            witness: Strategy::new(game.len()),
        };
        for v in game.positions() {
            layers.refresh_native(game, v);
        }
        layers
    }

    /// Side and level of a position: `r` values count for their own parity, `u` values for the opposite one.
    pub fn side(&self, w: usize) -> Option<(Player, ExtPriority)> {
        if let Some(q) = self.r.get(w) {
            return q.parity().map(|p| (p, q));
        }
        if let Some(q) = self.u.get(w) {
            return q.parity().map(|p| (p.opponent(), q));
        }
        None
    }

    /// Membership in H_s^{β,q}.
    pub fn on_side(&self, w: usize, player: Player, q: ExtPriority) -> bool {
        matches!(self.side(w), Some((b, level)) if b == player && level.at_least(q))
    }

    pub fn is_native(&self, game: &ParityGame, v: usize) -> bool {
        self.r.get(v) == Some(ExtPriority::Nat(game.priority(v)))
    }

    /// Recomputes the witness of a position still carrying its own priority.
    fn refresh_native(&mut self, game: &ParityGame, v: usize) {
        let Some((side, _)) = self.side(v) else { return };
        if game.owner(v) != side || !self.is_native(game, v) {
            return;
        }
        let mut best: Option<(u64, usize)> = None;
        for &w in game.successors(v) {
            if let Some((b, level)) = self.side(w) {
                if b == side && best.is_none_or(|(k, _)| level.rank() > k) {
                    best = Some((level.rank(), w));
                }
            }
        }
        let choice = best.map_or(game.successors(v)[0], |(_, w)| w);
        self.witness.set(v, choice);
    }

    /// Refreshes native witnesses of `changed` positions and of their predecessors.
    fn refresh_around(&mut self, game: &ParityGame, changed: &[usize]) {
        for &z in changed {
            self.refresh_native(game, z);
            for &v in game.predecessors(z) {
                self.refresh_native(game, v);
            }
        }
    }

    /// Puts positions attracted to a region into `r` at `q`, taking the attracting moves as witnesses.
    pub fn assign_attracted(&mut self, game: &ParityGame, added: &[usize], moves: &[(usize, usize)], q: ExtPriority) {
        for &v in added {
            self.u.remove(v);
            self.r.set(v, q);
        }
        for &(v, w) in moves {
            self.witness.set(v, w);
        }
        self.refresh_around(game, added);
    }

    /// Raises the region `set` to `q` in `r`.
    pub fn promote_region(&mut self, game: &ParityGame, set: &[usize], q: ExtPriority) {
        let Some(player) = q.parity() else { return };
        let members: PositionSet = PositionSet::from_positions(game.len(), set.iter().copied());
        for &v in set {
            self.r.set(v, q);
        }
        for &v in set {
            if game.owner(v) != player {
                continue;
            }
            if self.witness.get(v).is_some_and(|w| members.contains(w) || self.on_side(w, player, q)) {
                continue;
            }
            let up = game.successors(v).iter().find(|&&w| !members.contains(w) && self.on_side(w, player, q));
            if let Some(&w) = up.or_else(|| game.successors(v).iter().find(|&&w| members.contains(w))) {
                self.witness.set(v, w);
                continue;
            }
            let mut best: Option<(u64, usize)> = None;
            for &w in game.successors(v) {
                if let Some((b, level)) = self.side(w) {
                    if b == player && best.is_none_or(|(k, _)| level.rank() < k) {
                        best = Some((level.rank(), w));
                    }
                }
            }
            if let Some((_, w)) = best {
                self.witness.set(v, w);
            }
        }
        self.refresh_around(game, set);
    }

    /// Moves `set` out of `r` into `u` at `q`.
    pub fn move_to_undetermined(&mut self, game: &ParityGame, set: &[usize], q: ExtPriority) {
        for &v in set {
            self.r.remove(v);
            self.u.set(v, q);
            self.witness.unset(v);
        }
        self.refresh_around(game, set);
    }

    /// Resets `set` to the original priorities in `r`.
    pub fn reset(&mut self, game: &ParityGame, set: &[usize]) {
        for &v in set {
            self.u.remove(v);
            self.r.set(v, ExtPriority::Nat(game.priority(v)));
        }
        self.refresh_around(game, set);
    }

    pub fn layer(&self, v: usize) -> Option<Layer> {
        if self.r.contains(v) {
            Some(Layer::Region)
        } else if self.u.contains(v) {
            Some(Layer::Undetermined)
        } else {
            None
        }
    }

    /// One line per bucket, highest first: `q: {positions} [r|u]`.
    pub fn dump(&self) -> String {
        let mut lines: Vec<(u64, String)> = Vec::new();
        for (tag, f) in [("r", &self.r), ("u", &self.u)] {
            for (q, bucket) in f.buckets() {
                let list: Vec<String> = bucket.iter().map(usize::to_string).collect();
                lines.push((q.rank(), format!("{q}: {{{}}} [{tag}]", list.join(", "))));
            }
        }
        lines.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
        let mut out = String::new();
        for (_, l) in lines {
            out.push_str(&l);
            out.push('\n');
        }
        out
    }
}

/// A read-only view of a state at a given current priority.
#[derive(Clone, Copy)]
pub struct StateView<'a> {
    pub game: &'a ParityGame,
    pub layers: &'a Layers,
    pub priority: ExtPriority,
}

impl<'a> StateView<'a> {
    pub fn new(game: &'a ParityGame, layers: &'a Layers, priority: ExtPriority) -> Self {
        StateView { game, layers, priority }
    }

    /// α_s, the player favoured by the current priority.
    pub fn player(&self) -> Player {
        self.priority.parity().expect("a state with a current priority")
    }

    pub fn in_local(&self, w: usize) -> bool {
        matches!(self.layers.r.get(w), Some(q) if q.rank() <= self.priority.rank())
    }

    /// L_s = dom r^{≤p}.
    pub fn local_area(&self) -> PositionSet {
        PositionSet::from_positions(self.game.len(), self.layers.r.at_most(self.priority))
    }

    /// R_s = r⁻¹(p).
    pub fn region(&self) -> PositionSet {
        self.layers.r.preimage_set(self.priority)
    }

    /// U_s = u⁻¹(p).
    pub fn undetermined(&self) -> PositionSet {
        self.layers.u.preimage_set(self.priority)
    }

    pub fn snapshot(&self) -> Snapshot {
        Snapshot { local: self.local_area(), priority: self.priority }
    }

    /// H_s^{β,q} = H_r^{β,q} ∪ H_u^{opponent(β),q}.
    pub fn hybrid_side_set(&self, player: Player, q: ExtPriority) -> PositionSet {
        PositionSet::from_positions(self.game.len(), self.game.positions().filter(|&w| self.layers.on_side(w, player, q)))
    }

    /// Whether the opponent can leave H_s^{α,p} from the region.
    pub fn is_open(&self) -> bool {
        let alpha = self.player();
        let p = self.priority;
        self.layers.r.preimage_len(p) == 0
            || self
                .layers
                .r
                .preimage(p)
                .any(|v| self.game.can_escape(alpha.opponent(), v, |w| self.layers.on_side(w, alpha, p)))
    }

    pub fn is_closed(&self) -> bool {
        !self.is_open()
    }

    /// Closed, and every position of the current player in R has a move inside R.
    ///
    /// Only then does every escape from R belong to the opponent, so that bep measures it.
    pub fn can_promote(&self) -> bool {
        let alpha = self.player();
        let p = self.priority;
        self.is_closed()
            && self
                .layers
                .r
                .preimage(p)
                .filter(|&v| self.game.owner(v) == alpha)
                .all(|v| self.game.successors(v).iter().any(|&w| self.layers.r.get(w) == Some(p)))
    }

    /// Best escape priority for `opponent` leaving `set`, measured in `f`.
    pub fn bep(&self, opponent: Player, set: &PositionSet, f: &PromotionFunction) -> ExtPriority {
        bep(self.game, opponent, set, f)
    }

    fn attracted_into(&self, player: Player, base: &PositionSet, within: &PositionSet) -> bool {
        !self.game.attractor_within(player, base, within).is_empty()
    }

    /// H_s^β \ L_s is β-maximal with respect to L_s, for both players.
    pub fn is_maximal(&self) -> bool {
        Player::BOTH.iter().all(|&b| self.is_maximal_for(b))
    }

    pub fn is_maximal_for(&self, player: Player) -> bool {
        let local = self.local_area();
        let base = self.hybrid_side_set(player, ExtPriority::Bot).difference(&local);
        !self.attracted_into(player, &base, &local)
    }

    /// Whether R_s equals its α-attractor inside the local area.
    pub fn region_is_maximal(&self) -> bool {
        let local = self.local_area();
        let region = self.region();
        self.game.subgame(&local).attractor(self.player(), &region) == region
    }

    pub fn is_strongly_maximal(&self) -> bool {
        if !self.is_maximal() || !self.region_is_maximal() {
            return false;
        }
        let opp = self.player().opponent();
        let within = self.local_area().union(&self.undetermined());
        let base = self.hybrid_side_set(opp, ExtPriority::Bot).difference(&within);
        !self.attracted_into(opp, &base, &within)
    }

    pub fn is_promotable(&self) -> bool {
        self.is_closed() && self.is_maximal_for(self.player().opponent()) && self.region_is_maximal()
    }
}

/// bep(ᾱ, R, f): least f-value reached by a move leaving R from esc^ᾱ(R) into dom f,
/// or the top of α when no such move exists.
pub fn bep(game: &ParityGame, opponent: Player, set: &PositionSet, f: &PromotionFunction) -> ExtPriority {
    let mut best: Option<ExtPriority> = None;
    for v in set.iter() {
        if !game.can_escape(opponent, v, |w| set.contains(w)) {
            continue;
        }
        for &w in game.successors(v) {
            if set.contains(w) {
                continue;
            }
            if let Some(q) = f.get(w) {
                best = Some(match best {
                    None => q,
                    Some(b) if q.rank() < b.rank() => q,
                    Some(b) => b,
                });
            }
        }
    }
    best.unwrap_or(ExtPriority::top(opponent.opponent()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExtPriority::*;

    // a b c d e f g h
    fn f1() -> PromotionFunction {
        PromotionFunction::from_values(vec![
            Some(Nat(0)),
            Some(Nat(7)),
            Some(Nat(1)),
            Some(Nat(6)),
            Some(Nat(3)),
            Some(Nat(6)),
            Some(Top0),
            Some(Nat(6)),
        ])
    }

    fn set(vs: &[usize]) -> PositionSet {
        PositionSet::from_positions(8, vs.iter().copied())
    }

    #[test]
    fn parity_of_tops() {
        assert_eq!(Top0.parity(), Some(Player::Even));
        assert_eq!(Top1.parity(), Some(Player::Odd));
        assert_eq!(Bot.parity(), None);
    }

    #[test]
    fn order_of_extended_priorities() {
        assert!(Bot < Nat(0));
        assert!(Nat(3) < Nat(4));
        assert!(Nat(1000) < Top0);
        assert!(Nat(1000) < Top1);
        assert!(Top1.at_least(Top0));
        assert!(!Nat(4).at_least(Top0));
    }

    #[test]
    fn f1_side_sets() {
        let f = f1();
        assert_eq!(f.side_set(Player::Even), set(&[0, 3, 5, 6, 7]));
        assert_eq!(f.side_set(Player::Odd), set(&[1, 2, 4]));
        assert_eq!(f.side_set_from(Player::Even, Nat(4)), set(&[3, 5, 6, 7]));
        assert_eq!(f.side_set_from(Player::Odd, Nat(4)), set(&[1]));
    }

    #[test]
    fn f1_local_area_region_and_next() {
        let f = f1();
        let local = PositionSet::from_positions(8, f.at_most(Nat(3)));
        assert_eq!(local, set(&[0, 2, 4]));
        assert_eq!(f.preimage_set(Nat(3)), set(&[4]));
        assert_eq!(f.max_below(Nat(3)), Some(Nat(1)));
        assert_eq!(f.max_below(Nat(0)), None);
    }

    #[test]
    fn f1_restrictions() {
        let f = f1();
        let low_even = f.restrict(&Restriction::All(vec![
            Restriction::Less(Nat(6)),
            Restriction::Parity(Player::Even),
        ]));
        assert_eq!(low_even.domain(), set(&[0]));
        assert_eq!(f.restrict(&Restriction::Greater(Nat(6))).domain(), set(&[1, 6]));
        assert_eq!(f.restrict(&Restriction::AtLeast(Nat(6))).domain(), set(&[1, 3, 5, 6, 7]));
        assert_eq!(f.restrict(&Restriction::AtMost(Nat(1))).domain(), set(&[0, 2]));
    }

    #[test]
    fn order_less_cases() {
        let a = Snapshot { local: set(&[0]), priority: Nat(5) };
        let b = Snapshot { local: set(&[0, 1]), priority: Nat(2) };
        assert!(order_less(&a, &b));
        assert!(!order_less(&b, &a));
        let c = Snapshot { local: set(&[0]), priority: Nat(3) };
        assert!(order_less(&c, &a));
        assert!(!order_less(&a, &a));
        let d = Snapshot { local: set(&[1]), priority: Nat(0) };
        assert!(!order_less(&d, &a));
    }

    #[test]
    fn bucket_bookkeeping() {
        let mut f = f1();
        f.set(3, Nat(7));
        assert_eq!(f.preimage(Nat(6)).collect::<Vec<_>>(), vec![5, 7]);
        assert_eq!(f.preimage(Nat(7)).collect::<Vec<_>>(), vec![1, 3]);
        f.remove(1);
        f.remove(3);
        assert_eq!(f.range().collect::<Vec<_>>(), vec![Nat(0), Nat(1), Nat(3), Nat(6), Top0]);
    }

    #[test]
    fn empty_region_is_open() {
        let g = ParityGame::new(vec![1], vec![Player::Odd], vec![vec![0]]).unwrap();
        let layers = Layers::initial(&g);
        let view = StateView::new(&g, &layers, Nat(0));
        assert!(view.region().is_empty());
        assert!(view.is_open());
    }

    #[test]
    fn self_loop_region_closed_with_top_bep() {
        let g = ParityGame::new(vec![2], vec![Player::Odd], vec![vec![0]]).unwrap();
        let layers = Layers::initial(&g);
        let view = StateView::new(&g, &layers, Nat(2));
        assert!(view.is_closed());
        assert!(view.is_promotable());
        assert_eq!(view.bep(Player::Odd, &view.region(), &layers.r), Top0);
    }

    #[test]
    fn dump_lists_buckets() {
        let g = ParityGame::new(vec![2, 1], vec![Player::Odd, Player::Even], vec![vec![1], vec![0]]).unwrap();
        let mut layers = Layers::initial(&g);
        layers.move_to_undetermined(&g, &[1], Nat(3));
        assert_eq!(layers.dump(), "3: {1} [u]\n2: {0} [r]\n");
    }
}
