//! Game arenas, position sets, attractors and the PGSolver text format.

use std::collections::HashMap;
use std::fmt;

use bitvec::prelude::*;
use thiserror::Error;

/// One of the two players. `Even` is player 0, `Odd` is player 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Even,
    Odd,
}

impl Player {
    pub const BOTH: [Player; 2] = [Player::Even, Player::Odd];

    pub fn opponent(self) -> Player {
        match self {
            Player::Even => Player::Odd,
            Player::Odd => Player::Even,
        }
    }

    /// The player favoured by a priority of the given parity.
    pub fn of_priority(p: u32) -> Player {
        if p.is_multiple_of(2) {
            Player::Even
        } else {
            Player::Odd
        }
    }

    pub fn index(self) -> usize {
        match self {
            Player::Even => 0,
            Player::Odd => 1,
        }
    }

    pub fn from_index(i: usize) -> Option<Player> {
        match i {
            0 => Some(Player::Even),
            1 => Some(Player::Odd),
            _ => None,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// A set of positions over a fixed universe `0..capacity`.
///
/// Iteration is always in ascending position order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PositionSet {
    bits: BitVec,
}

impl PositionSet {
    pub fn new(capacity: usize) -> Self {
        PositionSet { bits: bitvec![0; capacity] }
    }

    pub fn full(capacity: usize) -> Self {
        PositionSet { bits: bitvec![1; capacity] }
    }

    pub fn from_positions(capacity: usize, positions: impl IntoIterator<Item = usize>) -> Self {
        let mut set = PositionSet::new(capacity);
        for v in positions {
            set.insert(v);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.not_any()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.get(v).map(|b| *b).unwrap_or(false)
    }

    /// Inserts `v`, returning whether it was absent.
    pub fn insert(&mut self, v: usize) -> bool {
        let was = self.bits[v];
        self.bits.set(v, true);
        !was
    }

    /// Removes `v`, returning whether it was present.
    pub fn remove(&mut self, v: usize) -> bool {
        let was = self.bits[v];
        self.bits.set(v, false);
        was
    }

    pub fn clear(&mut self) {
        self.bits.fill(false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.first_one()
    }

    pub fn union_with(&mut self, other: &PositionSet) {
        self.bits |= &other.bits;
    }

    pub fn intersect_with(&mut self, other: &PositionSet) {
        self.bits &= &other.bits;
    }

    pub fn difference_with(&mut self, other: &PositionSet) {
        for v in other.iter() {
            self.bits.set(v, false);
        }
    }

    pub fn union(&self, other: &PositionSet) -> PositionSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &PositionSet) -> PositionSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &PositionSet) -> PositionSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn complement(&self) -> PositionSet {
        PositionSet { bits: !self.bits.clone() }
    }

    pub fn is_subset(&self, other: &PositionSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &PositionSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for PositionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A partial positional strategy: at most one chosen successor per position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strategy {
    choice: Vec<Option<usize>>,
}

impl Strategy {
    pub fn new(capacity: usize) -> Self {
        Strategy { choice: vec![None; capacity] }
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.choice[v]
    }

    pub fn set(&mut self, v: usize, w: usize) {
        self.choice[v] = Some(w);
    }

    pub fn unset(&mut self, v: usize) {
        self.choice[v] = None;
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.choice.iter().enumerate().filter_map(|(v, c)| c.map(|_| v))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GameError {
    #[error("position {0} has no successors")]
    EmptySuccessors(usize),
    #[error("position {position} has a move to unknown position {successor}")]
    DanglingSuccessor { position: usize, successor: usize },
    #[error("priority, owner and move vectors have different lengths")]
    LengthMismatch,
}

/// A finite parity game arena where every position has at least one move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityGame {
    priority: Vec<u32>,
    owner: Vec<Player>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    names: Vec<Option<String>>,
    ids: Vec<usize>,
}

impl ParityGame {
    /// Builds a game; successor lists are sorted and deduplicated.
    pub fn new(priority: Vec<u32>, owner: Vec<Player>, moves: Vec<Vec<usize>>) -> Result<Self, GameError> {
        let n = priority.len();
        if owner.len() != n || moves.len() != n {
            return Err(GameError::LengthMismatch);
        }
        let mut succ = moves;
        let mut pred = vec![Vec::new(); n];
        for (v, list) in succ.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if list.is_empty() {
                return Err(GameError::EmptySuccessors(v));
            }
            for &w in list.iter() {
                if w >= n {
                    return Err(GameError::DanglingSuccessor { position: v, successor: w });
                }
                pred[w].push(v);
            }
        }
        Ok(ParityGame {
            priority,
            owner,
            succ,
            pred,
            names: vec![None; n],
            ids: (0..n).collect(),
        })
    }

    pub fn with_names(mut self, names: Vec<Option<String>>) -> Self {
        assert_eq!(names.len(), self.len());
        self.names = names;
        self
    }

    pub fn with_ids(mut self, ids: Vec<usize>) -> Self {
        assert_eq!(ids.len(), self.len());
        self.ids = ids;
        self
    }

    pub fn len(&self) -> usize {
        self.priority.len()
    }

    pub fn is_empty(&self) -> bool {
        self.priority.is_empty()
    }

    pub fn positions(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn priority(&self, v: usize) -> u32 {
        self.priority[v]
    }

    pub fn owner(&self, v: usize) -> Player {
        self.owner[v]
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn predecessors(&self, v: usize) -> &[usize] {
        &self.pred[v]
    }

    pub fn name(&self, v: usize) -> Option<&str> {
        self.names[v].as_deref()
    }

    /// Identifier the position had in its source file.
    pub fn id(&self, v: usize) -> usize {
        self.ids[v]
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn empty_set(&self) -> PositionSet {
        PositionSet::new(self.len())
    }

    pub fn all_positions(&self) -> PositionSet {
        PositionSet::full(self.len())
    }

    /// Highest priority occurring in `set`, or `None` when it is empty.
    pub fn max_priority(&self, set: &PositionSet) -> Option<u32> {
        set.iter().map(|v| self.priority[v]).max()
    }

    pub fn max_priority_overall(&self) -> Option<u32> {
        self.priority.iter().copied().max()
    }

    /// Number of distinct priorities in the game.
    pub fn priority_count(&self) -> usize {
        let mut ps = self.priority.clone();
        ps.sort_unstable();
        ps.dedup();
        ps.len()
    }

    /// pre^α(V): positions where `player` can force the next move into `target`.
    pub fn pre(&self, player: Player, target: &PositionSet) -> PositionSet {
        let mut out = self.empty_set();
        for v in self.positions() {
            let mut succ = self.succ[v].iter();
            let hit = if self.owner[v] == player {
                succ.any(|&w| target.contains(w))
            } else {
                succ.all(|&w| target.contains(w))
            };
            if hit {
                out.insert(v);
            }
        }
        out
    }

    /// atr^α(V): `target` together with every position from which `player` forces a visit to it.
    pub fn attractor(&self, player: Player, target: &PositionSet) -> PositionSet {
        self.attractor_with_strategy(player, target).0
    }

    /// Same as [`ParityGame::attractor`], also returning the attracting moves of `player`.
    pub fn attractor_with_strategy(&self, player: Player, target: &PositionSet) -> (PositionSet, Vec<(usize, usize)>) {
        let mut inside = target.clone();
        let mut moves = Vec::new();
        attract(
            self,
            player,
            target.iter().collect(),
            &mut inside,
            |_| true,
            |v| self.succ[v].len(),
            |v, w| moves.push((v, w)),
        );
        (inside, moves)
    }

    /// Restricted attractor atr^α(V, X): the least Y with Y = pre^α(V ∪ Y) ∩ X.
    pub fn attractor_within(&self, player: Player, target: &PositionSet, within: &PositionSet) -> PositionSet {
        self.attractor_within_with_strategy(player, target, within).0
    }

    pub fn attractor_within_with_strategy(
        &self,
        player: Player,
        target: &PositionSet,
        within: &PositionSet,
    ) -> (PositionSet, Vec<(usize, usize)>) {
        let mut reached = target.clone();
        let mut moves = Vec::new();
        let mut found = self.empty_set();
        {
            let record = |v: usize, w: usize| {
                moves.push((v, w));
            };
            let added = attract(
                self,
                player,
                target.iter().collect(),
                &mut reached,
                |v| within.contains(v),
                |v| self.succ[v].len(),
                record,
            );
            for v in added {
                found.insert(v);
            }
        }
        // Target positions inside X belong to the fixpoint only if they satisfy pre themselves.
        for v in target.intersection(within).iter() {
            let mut succ = self.succ[v].iter();
            let hit = if self.owner[v] == player {
                succ.any(|&w| reached.contains(w))
            } else {
                succ.all(|&w| reached.contains(w))
            };
            if hit {
                found.insert(v);
                if self.owner[v] == player {
                    let w = *self.succ[v].iter().find(|&&w| reached.contains(w)).unwrap();
                    moves.push((v, w));
                }
            }
        }
        (found, moves)
    }

    /// esc^α(V) = pre^α(Ps \ V) ∩ V: positions of `set` from which `player` can leave it.
    pub fn escape(&self, player: Player, set: &PositionSet) -> PositionSet {
        let mut out = self.empty_set();
        for v in set.iter() {
            if self.can_escape(player, v, |w| set.contains(w)) {
                out.insert(v);
            }
        }
        out
    }

    /// Whether `player` can leave the set given by `inside` from position `v`.
    pub fn can_escape(&self, player: Player, v: usize, inside: impl Fn(usize) -> bool) -> bool {
        if self.owner[v] == player {
            self.succ[v].iter().any(|&w| !inside(w))
        } else {
            self.succ[v].iter().all(|&w| !inside(w))
        }
    }

    pub fn subgame<'a>(&'a self, mask: &'a PositionSet) -> Subgame<'a> {
        Subgame { game: self, mask }
    }

    /// Copies the subgame induced by `mask` into a fresh game with dense ids.
    ///
    /// Returns `None` if some position of the mask has no move inside it.
    pub fn induced(&self, mask: &PositionSet) -> Option<(ParityGame, Vec<usize>)> {
        let keep: Vec<usize> = mask.to_vec();
        let mut index = HashMap::new();
        for (i, &v) in keep.iter().enumerate() {
            index.insert(v, i);
        }
        let mut moves = Vec::with_capacity(keep.len());
        for &v in &keep {
            let list: Vec<usize> = self.succ[v].iter().filter_map(|w| index.get(w).copied()).collect();
            if list.is_empty() {
                return None;
            }
            moves.push(list);
        }
        let game = ParityGame::new(
            keep.iter().map(|&v| self.priority[v]).collect(),
            keep.iter().map(|&v| self.owner[v]).collect(),
            moves,
        )
        .ok()?;
        Some((game, keep))
    }
}

/// A read-only view of the positions of a game selected by a mask.
#[derive(Clone, Copy)]
pub struct Subgame<'a> {
    game: &'a ParityGame,
    mask: &'a PositionSet,
}

impl<'a> Subgame<'a> {
    pub fn game(&self) -> &'a ParityGame {
        self.game
    }

    pub fn mask(&self) -> &'a PositionSet {
        self.mask
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask.contains(v)
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + 'a {
        let mask = self.mask;
        self.game.succ[v].iter().copied().filter(move |&w| mask.contains(w))
    }

    pub fn max_priority(&self) -> Option<u32> {
        self.game.max_priority(self.mask)
    }

    pub fn with_priority(&self, p: u32) -> PositionSet {
        PositionSet::from_positions(self.game.len(), self.mask.iter().filter(|&v| self.game.priority[v] == p))
    }

    /// Attractor computed inside the subgame: moves leaving the mask are ignored.
    pub fn attractor(&self, player: Player, target: &PositionSet) -> PositionSet {
        self.attractor_with_strategy(player, target).0
    }

    pub fn attractor_with_strategy(&self, player: Player, target: &PositionSet) -> (PositionSet, Vec<(usize, usize)>) {
        let mut inside = target.intersection(self.mask);
        let mut moves = Vec::new();
        let mask = self.mask;
        let game = self.game;
        attract(
            game,
            player,
            inside.iter().collect(),
            &mut inside,
            |v| mask.contains(v),
            |v| game.succ[v].iter().filter(|&&w| mask.contains(w)).count(),
            |v, w| moves.push((v, w)),
        );
        (inside, moves)
    }
}

/// Worklist attractor shared by every variant.
///
/// `reached` starts with the sources marked; positions satisfying `candidate`
/// are added once `player` can force a move into `reached`. `need` gives the
/// number of opponent moves that must be covered. Returns the added positions
/// in insertion order and reports each attracting move of `player`.
pub(crate) fn attract(
    game: &ParityGame,
    player: Player,
    sources: Vec<usize>,
    reached: &mut PositionSet,
    candidate: impl Fn(usize) -> bool,
    need: impl Fn(usize) -> usize,
    mut record: impl FnMut(usize, usize),
) -> Vec<usize> {
    let mut counters: HashMap<usize, usize> = HashMap::new();
    let mut queue = sources;
    let mut added = Vec::new();
    let mut head = 0;
    while head < queue.len() {
        let w = queue[head];
        head += 1;
        for &v in game.predecessors(w) {
            if reached.contains(v) || !candidate(v) {
                continue;
            }
            let take = if game.owner(v) == player {
                record(v, w);
                true
            } else {
                let left = counters.entry(v).or_insert_with(|| need(v));
                *left -= 1;
                *left == 0
            };
            if take {
                reached.insert(v);
                added.push(v);
                queue.push(v);
            }
        }
    }
    added
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: owner must be 0 or 1, found {found}")]
    BadOwner { line: usize, found: String },
    #[error("line {line}: position {id} has an empty successor list")]
    EmptySuccessors { line: usize, id: usize },
    #[error("line {line}: position {id} moves to undeclared position {successor}")]
    DanglingSuccessor { line: usize, id: usize, successor: usize },
    #[error("line {line}: position {id} declared twice")]
    DuplicateId { line: usize, id: usize },
}

struct Statement {
    line: usize,
    text: String,
    name: Option<String>,
}

fn split_statements(input: &str) -> Result<Vec<Statement>, ParseError> {
    let mut out = Vec::new();
    let mut text = String::new();
    let mut name: Option<String> = None;
    let mut start_line = 1;
    let mut line = 1;
    let mut chars = input.chars().peekable();
    let mut blank = true;
    while let Some(ch) = chars.next() {
        match ch {
            '%' => {
                for c in chars.by_ref() {
                    if c == '\n' {
                        line += 1;
                        break;
                    }
                }
            }
            '"' => {
                let quote_line = line;
                let mut s = String::new();
                loop {
                    match chars.next() {
                        Some('"') => break,
                        Some(c) => {
                            if c == '\n' {
                                line += 1;
                            }
                            s.push(c);
                        }
                        None => {
                            return Err(ParseError::Syntax { line: quote_line, message: "unterminated name".into() })
                        }
                    }
                }
                if name.is_some() {
                    return Err(ParseError::Syntax { line, message: "more than one name".into() });
                }
                name = Some(s);
                text.push(' ');
            }
            ';' => {
                if !blank || name.is_some() {
                    out.push(Statement { line: start_line, text: std::mem::take(&mut text), name: name.take() });
                }
                text.clear();
                blank = true;
            }
            c => {
                if c == '\n' {
                    line += 1;
                }
                if blank && !c.is_whitespace() {
                    blank = false;
                    start_line = line;
                }
                text.push(c);
            }
        }
    }
    if !blank {
        return Err(ParseError::Syntax { line: start_line, message: "missing ';'".into() });
    }
    Ok(out)
}

fn parse_number(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse::<usize>()
        .map_err(|_| ParseError::Syntax { line, message: format!("expected {what}, found '{token}'") })
}

/// Parses a game in PGSolver format. Sparse identifiers are remapped to `0..n` in ascending order.
pub fn parse_pgsolver(input: &str) -> Result<ParityGame, ParseError> {
    struct Raw {
        line: usize,
        id: usize,
        priority: u32,
        owner: Player,
        succ: Vec<usize>,
        name: Option<String>,
    }
    let mut raws: Vec<Raw> = Vec::new();
    for (k, st) in split_statements(input)?.into_iter().enumerate() {
        let line = st.line;
        let tokens: Vec<&str> = st.text.split_whitespace().collect();
        if k == 0 && st.name.is_none() && matches!(tokens.first(), Some(&"parity")) {
            if tokens.len() != 2 {
                return Err(ParseError::Syntax { line, message: "malformed parity header".into() });
            }
            parse_number(line, tokens[1], "a number")?;
            continue;
        }
        if st.name.is_none() && matches!(tokens.first(), Some(&"start")) {
            continue;
        }
        if tokens.len() < 3 {
            return Err(ParseError::Syntax { line, message: "expected 'id priority owner successors'".into() });
        }
        let id = parse_number(line, tokens[0], "a position id")?;
        let priority = tokens[1]
            .parse::<u32>()
            .map_err(|_| ParseError::Syntax { line, message: format!("expected a priority, found '{}'", tokens[1]) })?;
        let owner = match tokens[2] {
            "0" => Player::Even,
            "1" => Player::Odd,
            other => return Err(ParseError::BadOwner { line, found: other.to_string() }),
        };
        let rest: String = tokens[3..].concat();
        if rest.is_empty() {
            return Err(ParseError::EmptySuccessors { line, id });
        }
        let mut succ = Vec::new();
        for part in rest.split(',') {
            if part.is_empty() {
                return Err(ParseError::Syntax { line, message: "empty successor entry".into() });
            }
            succ.push(parse_number(line, part, "a successor id")?);
        }
        raws.push(Raw { line, id, priority, owner, succ, name: st.name });
    }
    raws.sort_by_key(|r| r.id);
    let mut index = HashMap::new();
    for (i, r) in raws.iter().enumerate() {
        if index.insert(r.id, i).is_some() {
            return Err(ParseError::DuplicateId { line: r.line, id: r.id });
        }
    }
    let mut moves = Vec::with_capacity(raws.len());
    for r in &raws {
        let mut list = Vec::with_capacity(r.succ.len());
        for s in &r.succ {
            match index.get(s) {
                Some(&i) => list.push(i),
                None => return Err(ParseError::DanglingSuccessor { line: r.line, id: r.id, successor: *s }),
            }
        }
        moves.push(list);
    }
    let game = ParityGame::new(
        raws.iter().map(|r| r.priority).collect(),
        raws.iter().map(|r| r.owner).collect(),
        moves,
    )
    .expect("validated above");
    Ok(game
        .with_names(raws.iter_mut().map(|r| r.name.take()).collect())
        .with_ids(raws.iter().map(|r| r.id).collect()))
}

/// Writes a game in canonical PGSolver form, using the original identifiers.
pub fn write_pgsolver(game: &ParityGame) -> String {
    let mut out = String::new();
    let top = game.positions().map(|v| game.id(v)).max().unwrap_or(0);
    out.push_str(&format!("parity {top};\n"));
    for v in game.positions() {
        let succ: Vec<String> = game.successors(v).iter().map(|&w| game.id(w).to_string()).collect();
        out.push_str(&format!("{} {} {} {}", game.id(v), game.priority(v), game.owner(v), succ.join(",")));
        if let Some(name) = game.name(v) {
            out.push_str(&format!(" \"{name}\""));
        }
        out.push_str(";\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair() -> ParityGame {
        ParityGame::new(vec![0, 1], vec![Player::Even, Player::Odd], vec![vec![0, 1], vec![0]]).unwrap()
    }

    fn set(g: &ParityGame, vs: &[usize]) -> PositionSet {
        PositionSet::from_positions(g.len(), vs.iter().copied())
    }

    #[test]
    fn opponent_flips() {
        assert_eq!(Player::Even.opponent(), Player::Odd);
        assert_eq!(Player::Odd.opponent().opponent(), Player::Odd);
    }

    #[test]
    fn pair_pre() {
        let g = pair();
        assert_eq!(g.pre(Player::Even, &set(&g, &[0])), set(&g, &[0, 1]));
        assert!(g.pre(Player::Odd, &set(&g, &[1])).is_empty());
    }

    #[test]
    fn pair_attractors() {
        let g = pair();
        assert_eq!(g.attractor(Player::Even, &set(&g, &[0])), set(&g, &[0, 1]));
        assert_eq!(g.attractor(Player::Odd, &set(&g, &[1])), set(&g, &[1]));
    }

    #[test]
    fn pair_escapes() {
        let g = pair();
        assert_eq!(g.escape(Player::Even, &set(&g, &[0])), set(&g, &[0]));
        assert_eq!(g.escape(Player::Odd, &set(&g, &[1])), set(&g, &[1]));
    }

    #[test]
    fn pair_subgame_keeps_self_loop() {
        let g = pair();
        let mask = set(&g, &[0]);
        let sub = g.subgame(&mask);
        assert_eq!(sub.successors(0).collect::<Vec<_>>(), vec![0]);
        let (induced, keep) = g.induced(&mask).unwrap();
        assert_eq!(keep, vec![0]);
        assert_eq!(induced.successors(0), &[0]);
    }

    #[test]
    fn max_priority_of_empty_is_none() {
        let g = pair();
        assert_eq!(g.max_priority(&g.empty_set()), None);
        assert_eq!(g.max_priority(&g.all_positions()), Some(1));
    }

    #[test]
    fn restricted_attractor_excludes_target_outside() {
        let g = pair();
        let got = g.attractor_within(Player::Even, &set(&g, &[0]), &set(&g, &[1]));
        assert_eq!(got, set(&g, &[1]));
    }

    #[test]
    fn constructor_rejects_bad_moves() {
        assert_eq!(
            ParityGame::new(vec![0], vec![Player::Even], vec![vec![]]),
            Err(GameError::EmptySuccessors(0))
        );
        assert!(matches!(
            ParityGame::new(vec![0], vec![Player::Even], vec![vec![3]]),
            Err(GameError::DanglingSuccessor { .. })
        ));
    }

    #[test]
    fn moves_sorted_and_deduplicated() {
        let g = ParityGame::new(vec![0, 0], vec![Player::Even; 2], vec![vec![1, 0, 1], vec![0]]).unwrap();
        assert_eq!(g.successors(0), &[0, 1]);
    }

    #[test]
    fn canonical_single_position() {
        let g = parse_pgsolver("parity 0;\n0 0 0 0;\n").unwrap();
        assert_eq!(write_pgsolver(&g), "parity 0;\n0 0 0 0;\n");
    }

    #[test]
    fn parse_without_header_with_comments_and_names() {
        let text = "% a comment\n 5 2 1 9, 5 \"left\";\n9 3 0 5;\n";
        let g = parse_pgsolver(text).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.id(0), 5);
        assert_eq!(g.id(1), 9);
        assert_eq!(g.successors(0), &[0, 1]);
        assert_eq!(g.name(0), Some("left"));
        assert_eq!(g.owner(0), Player::Odd);
        let again = parse_pgsolver(&write_pgsolver(&g)).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn parse_errors_carry_lines() {
        assert!(matches!(parse_pgsolver("0 0 2 0;"), Err(ParseError::BadOwner { line: 1, .. })));
        assert!(matches!(parse_pgsolver("parity 1;\n0 0 0 ;"), Err(ParseError::EmptySuccessors { line: 2, id: 0 })));
        assert!(matches!(
            parse_pgsolver("0 0 0 1;\n"),
            Err(ParseError::DanglingSuccessor { line: 1, id: 0, successor: 1 })
        ));
        assert!(matches!(parse_pgsolver("0 x 0 0;"), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse_pgsolver("0 0 0 0"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_pgsolver("0 0 0 0;\n0 1 1 0;"), Err(ParseError::DuplicateId { line: 2, id: 0 })));
    }

    #[test]
    fn set_iteration_ascends() {
        let s = PositionSet::from_positions(10, [7, 2, 5]);
        assert_eq!(s.to_vec(), vec![2, 5, 7]);
        assert_eq!(format!("{s:?}"), "{2, 5, 7}");
    }
}
