//! Optimal perfect assignment.
//!
//! [`solve_hungarian`] runs the O(n³) shortest-augmenting-path form of the
//! Hungarian algorithm over exact rationals. [`solve_bruteforce`] enumerates
//! every permutation and serves as its oracle. Both return the
//! lexicographically smallest optimal matching, so their outputs agree
//! exactly, not just in value.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matching::{all_matchings, Matching};
use crate::matrix::UtilityMatrix;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentResult {
    pub matching: Matching,
    pub total_value: Rational,
    pub objective: Objective,
}

/// Minimum-cost assignment of rows to columns for a square cost matrix.
/// Returns `assign[row] = col`.
fn hungarian_min(cost: &[Vec<Rational>]) -> Vec<usize> {
    let n = cost.len();
    // 1-based with a sentinel column 0, following the classic potentials layout.
    let mut u = vec![Rational::ZERO; n + 1];
    let mut v = vec![Rational::ZERO; n + 1];
    let mut row_of_col = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];

    for row in 1..=n {
        row_of_col[0] = row;
        let mut col0 = 0usize;
        let mut min_slack: Vec<Option<Rational>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[col0] = true;
            let r0 = row_of_col[col0];
            let mut delta: Option<Rational> = None;
            let mut col1 = 0usize;
            for col in 1..=n {
                if used[col] {
                    continue;
                }
                let reduced = cost[r0 - 1][col - 1] - u[r0] - v[col];
                if min_slack[col].is_none_or(|m| reduced < m) {
                    min_slack[col] = Some(reduced);
                    way[col] = col0;
                }
                let slack = min_slack[col].expect("set above");
                if delta.is_none_or(|d| slack < d) {
                    delta = Some(slack);
                    col1 = col;
                }
            }
            let delta = delta.expect("an unused column remains while augmenting");
            for col in 0..=n {
                if used[col] {
                    u[row_of_col[col]] += delta;
                    v[col] -= delta;
                } else if let Some(m) = min_slack[col].as_mut() {
                    *m -= delta;
                }
            }
            col0 = col1;
            if row_of_col[col0] == 0 {
                break;
            }
        }
        loop {
            let col1 = way[col0];
            row_of_col[col0] = row_of_col[col1];
            col0 = col1;
            if col0 == 0 {
                break;
            }
        }
    }

    let mut assign = vec![0usize; n];
    for col in 1..=n {
        assign[row_of_col[col] - 1] = col - 1;
    }
    assign
}

fn min_cost_value(cost: &[Vec<Rational>]) -> Rational {
    if cost.is_empty() {
        return Rational::ZERO;
    }
    hungarian_min(cost)
        .iter()
        .enumerate()
        .map(|(i, &j)| cost[i][j])
        .sum()
}

/// Lexicographically smallest minimum-cost assignment.
///
/// Fixes rows in order: row i takes the smallest free column j such that
/// `cost[i][j]` plus the optimum of the remaining subproblem still equals the
/// overall optimum.
fn lex_smallest_min(cost: &[Vec<Rational>]) -> (Vec<usize>, Rational) {
    let n = cost.len();
    let optimum = min_cost_value(cost);
    let mut remaining = optimum;
    let mut free_cols: Vec<usize> = (0..n).collect();
    let mut image = Vec::with_capacity(n);

    for row in 0..n {
        let pick = free_cols
            .iter()
            .position(|&col| {
                let rest: Vec<Vec<Rational>> = (row + 1..n)
                    .map(|r| {
                        free_cols
                            .iter()
                            .filter(|&&c| c != col)
                            .map(|&c| cost[r][c])
                            .collect()
                    })
                    .collect();
                cost[row][col] + min_cost_value(&rest) == remaining
            })
            .expect("some column extends an optimal assignment");
        let col = free_cols.remove(pick);
        remaining -= cost[row][col];
        image.push(col);
    }
    (image, optimum)
}

/// Converts to a minimization problem: Maximize uses `max(M) - m_ij`.
fn cost_matrix(matrix: &UtilityMatrix, objective: Objective) -> Vec<Vec<Rational>> {
    match objective {
        Objective::Minimize => matrix.rows().to_vec(),
        Objective::Maximize => {
            let top = matrix.max_entry();
            matrix
                .rows()
                .iter()
                .map(|r| r.iter().map(|&v| top - v).collect())
                .collect()
        }
    }
}

pub fn solve_hungarian(matrix: &UtilityMatrix, objective: Objective) -> AssignmentResult {
    let cost = cost_matrix(matrix, objective);
    let (image, _) = lex_smallest_min(&cost);
    let matching = Matching::from_image(image).expect("solver returns a permutation");
    let total_value = matrix.value_of(&matching).expect("sizes agree");
    AssignmentResult {
        matching,
        total_value,
        objective,
    }
}

/// Exhaustive search; refuses n above [`crate::MAX_ENUMERATION_SIZE`].
pub fn solve_bruteforce(matrix: &UtilityMatrix, objective: Objective) -> Result<AssignmentResult> {
    let mut best: Option<(Matching, Rational)> = None;
    // all_matchings is lexicographic, so keeping only strict improvements
    // yields the lexicographically smallest optimum.
    for m in all_matchings(matrix.n())? {
        let value = matrix.value_of(&m)?;
        let better = match &best {
            None => true,
            Some((_, b)) => match objective {
                Objective::Maximize => value > *b,
                Objective::Minimize => value < *b,
            },
        };
        if better {
            best = Some((m, value));
        }
    }
    let (matching, total_value) = best.expect("at least one matching");
    Ok(AssignmentResult {
        matching,
        total_value,
        objective,
    })
}

/// Workers whose enterprise under `x` differs from the enterprise that picks
/// them under `y_on_jobs` (indexed job → worker).
pub fn compare_assignments(x: &Matching, y_on_jobs: &Matching) -> Result<Vec<usize>> {
    if x.len() != y_on_jobs.len() {
        return Err(Error::DimensionMismatch(format!(
            "worker assignment has size {} but job distribution has size {}",
            x.len(),
            y_on_jobs.len()
        )));
    }
    let y = y_on_jobs.inverse();
    Ok((0..x.len()).filter(|&i| x.get(i) != y.get(i)).collect())
}
