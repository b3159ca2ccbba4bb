use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matching::Matching;
use crate::rational::Rational;

/// Square n×n grid of utilities with row and column labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UtilityMatrix {
    entries: Vec<Vec<Rational>>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

impl UtilityMatrix {
    /// Builds a matrix with default labels `r1..rn` / `c1..cn`.
    pub fn new(entries: Vec<Vec<Rational>>) -> Result<Self> {
        let n = entries.len();
        let rows = (1..=n).map(|i| format!("r{i}")).collect();
        let cols = (1..=n).map(|j| format!("c{j}")).collect();
        Self::with_labels(entries, rows, cols)
    }

    pub fn with_labels(
        entries: Vec<Vec<Rational>>,
        row_labels: Vec<String>,
        col_labels: Vec<String>,
    ) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("matrix must have at least one row".into()));
        }
        if let Some((i, row)) = entries.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::InvalidMatrix(format!(
                "matrix is not square: row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if row_labels.len() != n || col_labels.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} row labels and {} column labels for a {n}x{n} matrix",
                row_labels.len(),
                col_labels.len()
            )));
        }
        Ok(UtilityMatrix {
            entries,
            row_labels,
            col_labels,
        })
    }

    pub fn from_integers<const N: usize>(rows: [[i64; N]; N]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from(v)).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn max_entry(&self) -> Rational {
        self.entries
            .iter()
            .flatten()
            .copied()
            .max()
            .expect("matrix is nonempty")
    }

    /// Applies `f` to every entry, keeping the labels.
    pub fn map(&self, f: impl Fn(Rational) -> Rational) -> UtilityMatrix {
        UtilityMatrix {
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|&v| f(v)).collect())
                .collect(),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
        }
    }

    /// Σ_i entries[i][m(i)].
    pub fn value_of(&self, m: &Matching) -> Result<Rational> {
        if m.len() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "matching of size {} on a {}x{} matrix",
                m.len(),
                self.n(),
                self.n()
            )));
        }
        Ok(m.image()
            .iter()
            .enumerate()
            .map(|(i, &j)| self.entries[i][j])
            .sum())
    }
}

/// A bilateral market: `A[i][j]` is worker i's utility for enterprise j,
/// `B[j][i]` is enterprise j's utility for worker i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameInstance {
    worker_utilities: UtilityMatrix,
    enterprise_utilities: UtilityMatrix,
}

impl GameInstance {
    pub fn new(worker_utilities: UtilityMatrix, enterprise_utilities: UtilityMatrix) -> Result<Self> {
        if worker_utilities.n() != enterprise_utilities.n() {
            return Err(Error::DimensionMismatch(format!(
                "worker matrix is {0}x{0} but enterprise matrix is {1}x{1}",
                worker_utilities.n(),
                enterprise_utilities.n()
            )));
        }
        Ok(GameInstance {
            worker_utilities,
            enterprise_utilities,
        })
    }

    pub fn n(&self) -> usize {
        self.worker_utilities.n()
    }

    pub fn worker_utilities(&self) -> &UtilityMatrix {
        &self.worker_utilities
    }

    pub fn enterprise_utilities(&self) -> &UtilityMatrix {
        &self.enterprise_utilities
    }

    /// Worker i's utility when matched to enterprise j.
    pub fn worker_payoff(&self, worker: usize, enterprise: usize) -> Rational {
        self.worker_utilities.get(worker, enterprise)
    }

    /// Enterprise j's utility when matched to worker i.
    pub fn enterprise_payoff(&self, enterprise: usize, worker: usize) -> Rational {
        self.enterprise_utilities.get(enterprise, worker)
    }
}
