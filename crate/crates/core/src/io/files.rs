//! Input file schemas.
//!
//! Both formats are JSON. Numbers may be integers, exact decimals, or
//! `"p/q"` strings; all are read as exact rationals.

use serde::{Deserialize, Serialize};

use crate::bargaining::{BimatrixGame, Point};
use crate::error::{Error, Result};
use crate::matrix::{GameInstance, UtilityMatrix};
use crate::rational::Rational;

/// A square market. `A` is worker-row × enterprise-column; `B` is
/// enterprise-row × worker-column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MarketFile {
    pub workers: Vec<String>,
    pub enterprises: Vec<String>,
    #[serde(rename = "A")]
    pub a: Vec<Vec<Rational>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimatrixFile {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub payoffs: Vec<Vec<[Rational; 2]>>,
}

fn from_json<T: for<'de> Deserialize<'de>>(bytes: &[u8], what: &str) -> Result<T> {
    serde_json::from_slice(bytes).map_err(|e| {
        use serde_json::error::Category;
        match e.classify() {
            Category::Data => Error::Schema(format!("{what}: {e}")),
            _ => Error::Parse(format!("{what}: {e}")),
        }
    })
}

fn check_grid(name: &str, grid: &[Vec<Rational>], rows: usize, cols: usize) -> Result<()> {
    if grid.len() != rows {
        return Err(Error::Schema(format!("{name} has {} rows, expected {rows}", grid.len())));
    }
    if let Some((i, r)) = grid.iter().enumerate().find(|(_, r)| r.len() != cols) {
        return Err(Error::Schema(format!(
            "{name} row {i} has {} entries, expected {cols}",
            r.len()
        )));
    }
    Ok(())
}

impl MarketFile {
    pub fn n(&self) -> usize {
        self.workers.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.workers.len();
        if n == 0 || self.a.is_empty() {
            return Err(Error::Schema("market must have at least one worker".into()));
        }
        if self.enterprises.len() != n {
            return Err(Error::Schema(format!(
                "{n} workers but {} enterprises",
                self.enterprises.len()
            )));
        }
        check_grid("A", &self.a, n, n)?;
        check_grid("B", &self.b, n, n)
    }

    pub fn worker_matrix(&self) -> UtilityMatrix {
        UtilityMatrix::with_labels(self.a.clone(), self.workers.clone(), self.enterprises.clone())
            .expect("validated market")
    }

    pub fn enterprise_matrix(&self) -> UtilityMatrix {
        UtilityMatrix::with_labels(self.b.clone(), self.enterprises.clone(), self.workers.clone())
            .expect("validated market")
    }

    pub fn instance(&self) -> GameInstance {
        GameInstance::new(self.worker_matrix(), self.enterprise_matrix()).expect("validated market")
    }

    pub fn from_instance(instance: &GameInstance) -> MarketFile {
        let a = instance.worker_utilities();
        MarketFile {
            workers: a.row_labels().to_vec(),
            enterprises: a.col_labels().to_vec(),
            a: a.rows().to_vec(),
            b: instance.enterprise_utilities().rows().to_vec(),
        }
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("market serializes")
    }
}

impl BimatrixFile {
    pub fn validate(&self) -> Result<()> {
        let (rows, cols) = (self.row_labels.len(), self.col_labels.len());
        if rows == 0 || cols == 0 {
            return Err(Error::Schema("bimatrix game needs at least one row and column".into()));
        }
        if self.payoffs.len() != rows {
            return Err(Error::Schema(format!(
                "payoffs has {} rows, expected {rows}",
                self.payoffs.len()
            )));
        }
        if let Some((i, r)) = self.payoffs.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::Schema(format!(
                "payoffs row {i} has {} entries, expected {cols}",
                r.len()
            )));
        }
        Ok(())
    }

    pub fn game(&self) -> BimatrixGame {
        BimatrixGame::new(
            self.payoffs
                .iter()
                .map(|r| r.iter().map(|&pair| Point::from(pair)).collect())
                .collect(),
        )
        .expect("validated bimatrix file")
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("bimatrix serializes")
    }
}

pub fn parse_market(bytes: &[u8]) -> Result<MarketFile> {
    let market: MarketFile = from_json(bytes, "market file")?;
    market.validate()?;
    Ok(market)
}

pub fn parse_bimatrix(bytes: &[u8]) -> Result<BimatrixFile> {
    let file: BimatrixFile = from_json(bytes, "bimatrix file")?;
    file.validate()?;
    Ok(file)
}
