//! Parity game solvers built on priority promotion.
//!
//! [`rpp`] is the exponential recursive priority promotion solver, [`parys`] a
//! promotion-free quasi-polynomial recursion on the same state, and [`hpp`] the
//! hybrid of both. [`oracle`] holds the reference solvers and state validators,
//! [`bench`] the generators and the benchmark harness.

pub mod bench;
pub mod cli;
pub mod game;
pub mod hpp;
pub mod oracle;
pub mod parys;
pub mod region;
pub mod rpp;
pub mod solve;

mod ops;

pub use game::{parse_pgsolver, write_pgsolver, ParityGame, Player, PositionSet, Strategy};
pub use hpp::{hpp_solve, qp_call_bound};
pub use oracle::{brute_force_solve, zielonka_solve};
pub use parys::parys_solve;
pub use rpp::rpp_solve;
pub use solve::{Algorithm, CallStats, SolveResult};
