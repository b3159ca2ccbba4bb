//! Exact solvers for bilateral assignment markets.
//!
//! Three workflows share one rational-arithmetic core:
//!
//! - [`assignment`]: max/min-weight perfect assignment (Hungarian algorithm)
//!   with a brute-force oracle;
//! - [`permutation_game`]: the 2n-player game over matching situations, its
//!   ideal point, minimax-regret compromise set and Nash-equilibrium checks;
//! - [`bargaining`]: a two-union bimatrix game, maximin threat point, feasible
//!   hull, Pareto frontier and the Nash arbitration solution.
//!
//! [`io`] holds the file formats, reports and command implementations used by
//! the `labor-match` binary.

pub mod assignment;
pub mod bargaining;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod matching;
pub mod matrix;
pub mod permutation_game;
pub mod rational;

pub use error::{Error, Result};
pub use matching::{all_matchings, Matching, MAX_ENUMERATION_SIZE};
pub use matrix::{GameInstance, UtilityMatrix};
pub use rational::Rational;
