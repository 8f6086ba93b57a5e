//! Seeded game generators, synthetic families and a watchdog benchmark harness.

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::sync::mpsc;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::game::{ParityGame, Player};
use crate::solve::{Algorithm, Cancel, Silent, SolveResult};

/// Parameters of a random game in the style of PGSolver's `rngame`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    pub max_prio: u32,
    pub min_deg: usize,
    pub max_deg: usize,
    pub seed: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("a game needs at least one position")]
    Empty,
    #[error("degree range {0}..={1} is invalid")]
    Degrees(usize, usize),
    #[error("unknown family '{0}' (expected ladder or clique)")]
    UnknownFamily(String),
    #[error("family size must be at least 1")]
    ZeroSize,
}

impl GenSpec {
    /// The `rngame n n/4 2 10` configuration.
    pub fn standard(n: usize, seed: u64) -> Self {
        GenSpec { n, max_prio: (n / 4) as u32, min_deg: 2, max_deg: 10, seed }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.n == 0 {
            return Err(GenError::Empty);
        }
        if self.min_deg == 0 || self.min_deg > self.max_deg {
            return Err(GenError::Degrees(self.min_deg, self.max_deg));
        }
        Ok(())
    }
}

/// Draws a game from ChaCha8 seeded with `spec.seed`.
///
/// Per position, in order: priority, owner, out-degree, then the successors as a
/// uniform sample without repetition. Degrees are clamped to `n`.
pub fn rngame(spec: &GenSpec) -> Result<ParityGame, GenError> {
    spec.validate()?;
    let n = spec.n;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let lo = spec.min_deg.min(n);
    let hi = spec.max_deg.min(n);
    let mut priority = Vec::with_capacity(n);
    let mut owner = Vec::with_capacity(n);
    let mut moves = Vec::with_capacity(n);
    for _ in 0..n {
        priority.push(rng.gen_range(0..=spec.max_prio));
        owner.push(if rng.gen_bool(0.5) { Player::Odd } else { Player::Even });
        let d = rng.gen_range(lo..=hi);
        moves.push(sample(&mut rng, n, d).into_vec());
    }
    Ok(ParityGame::new(priority, owner, moves).expect("generated games are well formed"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Ladder,
    Clique,
}

impl FromStr for Family {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ladder" => Ok(Family::Ladder),
            "clique" => Ok(Family::Clique),
            other => Err(GenError::UnknownFamily(other.to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Ladder => "ladder",
            Family::Clique => "clique",
        })
    }
}

/// Structured instances.
///
/// `ladder(k)` has rungs 2i (priority 2i, even) and 2i+1 (priority 2i+1, odd); each
/// position moves to its rung partner and to the same side of the next rung, wrapping around.
/// `clique(k)` connects k positions completely, position i having priority i and owner i mod 2.
pub fn gen_family(family: Family, k: usize) -> Result<ParityGame, GenError> {
    if k == 0 {
        return Err(GenError::ZeroSize);
    }
    let (priority, moves): (Vec<u32>, Vec<Vec<usize>>) = match family {
        Family::Ladder => {
            let n = 2 * k;
            (0..n)
                .map(|v| {
                    let up = (v + 2) % n;
                    let mut succ = vec![v ^ 1];
                    if up != v {
                        succ.push(up);
                    }
                    (v as u32, succ)
                })
                .unzip()
        }
        Family::Clique => (0..k).map(|v| (v as u32, (0..k).collect())).unzip(),
    };
    let owner = priority.iter().map(|&p| Player::of_priority(p)).collect();
    Ok(ParityGame::new(priority, owner, moves).expect("family instances are well formed"))
}

/// Every game with `n` positions, priorities up to `max_prio` and between 1 and `max_deg` successors.
///
/// Games are produced in a fixed mixed-radix order over (priority, owner, successor set) per position.
pub fn exhaustive_games(n: usize, max_prio: u32, max_deg: usize) -> impl Iterator<Item = ParityGame> {
    let mut succ_sets: Vec<Vec<usize>> = (1u32..(1 << n))
        .filter(|m| (m.count_ones() as usize) <= max_deg)
        .map(|m| (0..n).filter(|&v| m & (1 << v) != 0).collect())
        .collect();
    succ_sets.sort();
    let per = (max_prio as usize + 1) * 2 * succ_sets.len();
    let total = if n == 0 { 0 } else { per.pow(n as u32) };
    (0..total).map(move |mut code| {
        let mut priority = Vec::with_capacity(n);
        let mut owner = Vec::with_capacity(n);
        let mut moves = Vec::with_capacity(n);
        for _ in 0..n {
            let digit = code % per;
            code /= per;
            priority.push((digit % (max_prio as usize + 1)) as u32);
            let rest = digit / (max_prio as usize + 1);
            owner.push(Player::from_index(rest % 2).expect("binary digit"));
            moves.push(succ_sets[rest / 2].clone());
        }
        ParityGame::new(priority, owner, moves).expect("enumerated games are well formed")
    })
}

/// One (game, algorithm) measurement.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub game: String,
    pub algo: Algorithm,
    pub n: usize,
    pub priorities: usize,
    pub time_ms: f64,
    pub timed_out: bool,
    /// Agreement with the reference partition; `None` when either side did not finish.
    pub agreed: Option<bool>,
}

pub const CSV_HEADER: [&str; 7] = ["game", "algo", "n", "priorities", "time_ms", "timed_out", "agreed"];

/// Stack size of solver threads; the recursive solvers go as deep as the number of priorities.
pub(crate) const SOLVER_STACK: usize = 256 << 20;

/// Runs `algo` on a separate thread, cancelling it once `timeout` has elapsed.
pub fn solve_with_timeout(game: &ParityGame, algo: Algorithm, timeout: Duration) -> (Option<SolveResult>, Duration) {
    let cancel = Cancel::new();
    let (tx, rx) = mpsc::channel();
    let start = Instant::now();
    let outcome = std::thread::scope(|scope| {
        let worker_cancel = cancel.clone();
        std::thread::Builder::new()
            .stack_size(SOLVER_STACK)
            .spawn_scoped(scope, move || {
                let res = algo.solve_with(game, &mut Silent, &worker_cancel).ok();
                let _ = tx.send((res, start.elapsed()));
            })
            .expect("spawn solver thread");
        match rx.recv_timeout(timeout) {
            Ok(done) => done,
            Err(_) => {
                cancel.cancel();
                (None, start.elapsed())
            }
        }
    });
    outcome
}

/// Measures every algorithm on every game. The reference, when given, runs first on each game.
pub fn run_bench(
    games: &[(String, ParityGame)],
    algos: &[Algorithm],
    timeout: Duration,
    reference: Option<Algorithm>,
) -> Vec<BenchRecord> {
    let mut records = Vec::with_capacity(games.len() * algos.len());
    for (name, game) in games {
        let mut order: Vec<Algorithm> = algos.to_vec();
        if let Some(r) = reference {
            if let Some(i) = order.iter().position(|&a| a == r) {
                order.remove(i);
                order.insert(0, r);
            }
        }
        let mut baseline: Option<SolveResult> = None;
        let mut rows = Vec::with_capacity(order.len());
        for algo in order {
            let (res, elapsed) = solve_with_timeout(game, algo, timeout);
            let timed_out = res.is_none();
            let agreed = match (&res, &baseline) {
                (Some(r), Some(b)) => Some(r.same_partition(b)),
                (Some(_), None) if Some(algo) == reference => Some(true),
                _ => None,
            };
            if Some(algo) == reference {
                baseline = res;
            }
            rows.push(BenchRecord {
                game: name.clone(),
                algo,
                n: game.len(),
                priorities: game.priority_count(),
                time_ms: elapsed.as_secs_f64() * 1000.0,
                timed_out,
                agreed,
            });
        }
        rows.sort_by_key(|r| algos.iter().position(|&a| a == r.algo));
        records.extend(rows);
    }
    records
}

/// Writes the records as CSV rows, with the header when `header` is set.
pub fn write_csv<W: Write>(out: W, records: &[BenchRecord], header: bool) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    if header {
        w.write_record(CSV_HEADER)?;
    }
    for r in records {
        let agreed = r.agreed.map_or(String::new(), |a| a.to_string());
        w.write_record([
            r.game.clone(),
            r.algo.name().to_string(),
            r.n.to_string(),
            r.priorities.to_string(),
            format!("{:.3}", r.time_ms),
            r.timed_out.to_string(),
            agreed,
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::write_pgsolver;

    #[test]
    fn generator_is_deterministic() {
        let spec = GenSpec::standard(50, 7);
        assert_eq!(write_pgsolver(&rngame(&spec).unwrap()), write_pgsolver(&rngame(&spec).unwrap()));
    }

    #[test]
    fn single_position_is_a_self_loop() {
        let g = rngame(&GenSpec { n: 1, max_prio: 3, min_deg: 1, max_deg: 10, seed: 0 }).unwrap();
        assert_eq!(g.successors(0), &[0]);
    }

    #[test]
    fn rejects_bad_specs() {
        assert_eq!(rngame(&GenSpec { n: 0, ..GenSpec::standard(1, 0) }).unwrap_err(), GenError::Empty);
        assert_eq!(
            rngame(&GenSpec { min_deg: 3, max_deg: 2, ..GenSpec::standard(5, 0) }).unwrap_err(),
            GenError::Degrees(3, 2)
        );
    }

    #[test]
    fn families() {
        let l = gen_family(Family::Ladder, 1).unwrap();
        assert_eq!(l.successors(0), &[1]);
        assert_eq!(l.successors(1), &[0]);
        let c = gen_family(Family::Clique, 2).unwrap();
        assert_eq!(c.successors(0), &[0, 1]);
        assert_eq!(c.successors(1), &[0, 1]);
        assert!("star".parse::<Family>().is_err());
    }

    #[test]
    fn exhaustive_counts() {
        assert_eq!(exhaustive_games(1, 3, 2).count(), 8);
        assert_eq!(exhaustive_games(2, 3, 2).count(), 576);
        assert_eq!(exhaustive_games(3, 3, 2).count(), 48usize.pow(3));
    }

    #[test]
    fn csv_columns() {
        let rec = BenchRecord {
            game: "g".into(),
            algo: Algorithm::Hpp,
            n: 3,
            priorities: 2,
            time_ms: 1.5,
            timed_out: true,
            agreed: None,
        };
        let mut buf = Vec::new();
        write_csv(&mut buf, &[rec], true).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "game,algo,n,priorities,time_ms,timed_out,agreed\ng,hpp,3,2,1.500,true,\n");
    }
}
