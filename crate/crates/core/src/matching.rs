//! Perfect matchings between n workers and n enterprises.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest n for which [`all_matchings`] will enumerate (8! = 40320).
pub const MAX_ENUMERATION_SIZE: usize = 8;

/// A permutation: worker `i` is matched to enterprise `image[i]`.
///
/// Indices are 0-based; `Display` renders the 1-based enterprise labels
/// (`h1 h3 h2`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Matching {
    image: Vec<usize>,
}

impl Matching {
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &j in &image {
            if j >= n || seen[j] {
                return Err(Error::NotAPermutation { n, image });
            }
            seen[j] = true;
        }
        Ok(Matching { image })
    }

    pub fn identity(n: usize) -> Self {
        Matching {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Enterprise matched to worker `i`.
    pub fn get(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn inverse(&self) -> Matching {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.image.iter().enumerate() {
            inv[j] = i;
        }
        Matching { image: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Matching) -> Result<Matching> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose matchings of size {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(Matching {
            image: other.image.iter().map(|&i| self.image[i]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// 0/1 assignment grid with `grid[i][image[i]] = 1`.
    pub fn to_grid(&self) -> Vec<Vec<u8>> {
        let n = self.len();
        self.image
            .iter()
            .map(|&j| (0..n).map(|c| u8::from(c == j)).collect())
            .collect()
    }

    /// Inverse of [`Matching::to_grid`]; rejects grids that are not permutation matrices.
    pub fn from_grid(grid: &[Vec<u8>]) -> Result<Matching> {
        let n = grid.len();
        let mut image = Vec::with_capacity(n);
        for (i, row) in grid.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "assignment grid row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            let ones: Vec<usize> = row.iter().positions(|&v| v != 0).collect();
            if ones.len() != 1 || row[ones[0]] != 1 {
                return Err(Error::NotAPermutation {
                    n,
                    image: ones,
                });
            }
            image.push(ones[0]);
        }
        Matching::from_image(image)
    }
}

impl TryFrom<Vec<usize>> for Matching {
    type Error = Error;
    fn try_from(image: Vec<usize>) -> Result<Self> {
        Matching::from_image(image)
    }
}

impl From<Matching> for Vec<usize> {
    fn from(m: Matching) -> Self {
        m.image
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.image)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self.image.iter().map(|j| format!("h{}", j + 1)).join(" ");
        write!(f, "({labels})")
    }
}

/// All n! matchings of size `n`, in lexicographic order of their images.
pub fn all_matchings(n: usize) -> Result<Vec<Matching>> {
    if n == 0 {
        return Err(Error::InvalidMatrix("market size must be at least 1".into()));
    }
    if n > MAX_ENUMERATION_SIZE {
        return Err(Error::SizeTooLarge {
            n,
            cap: MAX_ENUMERATION_SIZE,
        });
    }
    Ok((0..n)
        .permutations(n)
        .map(|image| Matching { image })
        .collect())
}
