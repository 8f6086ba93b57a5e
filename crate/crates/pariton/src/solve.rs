//! Result types, observation hooks and cancellation shared by every solver.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use thiserror::Error;

use crate::game::{ParityGame, Player, PositionSet, Strategy};
use crate::region::{ExtPriority, StateView};

/// Counters collected during a solve.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CallStats {
    /// Calls of `sol` that did not return immediately.
    pub nontrivial_sol_calls: u64,
    pub hsol_iterations: u64,
    pub promotions: u64,
    pub max_ops: u64,
}

/// A winner partition plus witnesses for the dominions found by promotion.
#[derive(Clone, Debug)]
pub struct SolveResult {
    pub w0: PositionSet,
    pub w1: PositionSet,
    pub dominion_witness0: Strategy,
    pub dominion_witness1: Strategy,
    pub stats: CallStats,
}

impl SolveResult {
    pub fn from_w1(game: &ParityGame, w1: PositionSet) -> Self {
        SolveResult {
            w0: w1.complement(),
            w1,
            dominion_witness0: Strategy::new(game.len()),
            dominion_witness1: Strategy::new(game.len()),
            stats: CallStats::default(),
        }
    }

    pub fn winning(&self, player: Player) -> &PositionSet {
        match player {
            Player::Even => &self.w0,
            Player::Odd => &self.w1,
        }
    }

    pub fn winner(&self, v: usize) -> Player {
        if self.w1.contains(v) {
            Player::Odd
        } else {
            Player::Even
        }
    }

    pub fn same_partition(&self, other: &SolveResult) -> bool {
        self.w0 == other.w0 && self.w1 == other.w1
    }

    /// First position on which two results disagree.
    pub fn first_difference(&self, other: &SolveResult) -> Option<usize> {
        (0..self.w0.capacity()).find(|&v| self.winner(v) != other.winner(v))
    }
}

/// Returned when a solve is stopped through its [`Cancel`] token.
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("solve interrupted")]
pub struct Interrupted;

/// Cooperative cancellation flag, checked at every recursive call.
#[derive(Clone, Debug, Default)]
pub struct Cancel(Arc<AtomicBool>);

impl Cancel {
    pub fn new() -> Self {
        Cancel::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }

    pub fn check(&self) -> Result<(), Interrupted> {
        if self.is_cancelled() {
            Err(Interrupted)
        } else {
            Ok(())
        }
    }
}

/// Where in a solver a state is reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Point {
    Enter,
    Region,
    Promote,
    Maximise,
    Fold,
    Return,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Point::Enter => "enter",
            Point::Region => "region",
            Point::Promote => "promote",
            Point::Maximise => "max",
            Point::Fold => "fold",
            Point::Return => "return",
        };
        f.write_str(s)
    }
}

/// Call-level data accompanying a reported state.
#[derive(Clone, Copy, Debug)]
pub struct Frame {
    /// Priority of the calling level; `Top0` at the outermost call.
    pub caller: ExtPriority,
    /// Precision bounds of the hybrid solvers.
    pub bounds: Option<(u64, u64)>,
    /// Whether the state is expected to keep every position in `r`.
    pub total: bool,
}

/// Receives every intermediate state. The default methods do nothing.
pub trait Observer {
    fn observe(&mut self, _point: Point, _view: &StateView<'_>, _frame: &Frame) {}
}

/// Observer that ignores everything.
pub struct Silent;

impl Observer for Silent {}

/// Observer that records a textual dump of every reported state.
#[derive(Default)]
pub struct Tracer {
    pub text: String,
}

impl Observer for Tracer {
    fn observe(&mut self, point: Point, view: &StateView<'_>, frame: &Frame) {
        self.text.push_str(&format!("# {point} p={} c={}", view.priority, frame.caller));
        if let Some((b0, b1)) = frame.bounds {
            self.text.push_str(&format!(" b=({b0},{b1})"));
        }
        self.text.push('\n');
        self.text.push_str(&view.layers.dump());
    }
}

/// The solvers available through the CLI and the benchmark harness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Hpp,
    Rpp,
    Parys,
    Zielonka,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Algorithm::Hpp, Algorithm::Rpp, Algorithm::Parys, Algorithm::Zielonka];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Hpp => "hpp",
            Algorithm::Rpp => "rpp",
            Algorithm::Parys => "parys",
            Algorithm::Zielonka => "zlk",
        }
    }

    pub fn solve(self, game: &ParityGame) -> SolveResult {
        self.solve_with(game, &mut Silent, &Cancel::new()).expect("no cancellation requested")
    }

    pub fn solve_with<O: Observer>(
        self,
        game: &ParityGame,
        observer: &mut O,
        cancel: &Cancel,
    ) -> Result<SolveResult, Interrupted> {
        match self {
            Algorithm::Hpp => crate::hpp::hpp_solve_with(game, observer, cancel),
            Algorithm::Rpp => crate::rpp::rpp_solve_with(game, observer, cancel),
            Algorithm::Parys => crate::parys::parys_solve_with(game, observer, cancel),
            Algorithm::Zielonka => crate::oracle::zielonka_solve_with(game, cancel),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error)]
#[error("unknown algorithm '{0}' (expected hpp, rpp, parys or zlk)")]
pub struct UnknownAlgorithm(pub String);

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "hpp" => Ok(Algorithm::Hpp),
            "rpp" => Ok(Algorithm::Rpp),
            "parys" => Ok(Algorithm::Parys),
            "zlk" | "zielonka" => Ok(Algorithm::Zielonka),
            other => Err(UnknownAlgorithm(other.to_string())),
        }
    }
}
