//! The 2n-player matching game.
//!
//! Players `0..n` are workers; player `n + k` is the enterprise-side player
//! keyed by worker `k`, paid `B[p(k)][k]` by whichever enterprise is matched
//! to worker k in situation p. Situations are restricted to the n! perfect
//! matchings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matching::{all_matchings, Matching};
use crate::matrix::GameInstance;
use crate::rational::Rational;

/// Largest market for which [`enumerate_equilibria`] runs.
pub const MAX_EQUILIBRIUM_SIZE: usize = 5;

/// One payoff per player, workers first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PayoffProfile(pub Vec<Rational>);

impl PayoffProfile {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Situation {
    pub matching: Matching,
    pub payoffs: PayoffProfile,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SituationTable {
    instance: GameInstance,
    rows: Vec<Situation>,
}

impl SituationTable {
    pub fn instance(&self) -> &GameInstance {
        &self.instance
    }

    /// Rows in lexicographic order of the matching image.
    pub fn rows(&self) -> &[Situation] {
        &self.rows
    }

    pub fn players(&self) -> usize {
        2 * self.instance.n()
    }

    pub fn row_of(&self, m: &Matching) -> Option<&Situation> {
        self.rows.iter().find(|s| &s.matching == m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealPoint {
    pub values: PayoffProfile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegretRow {
    pub matching: Matching,
    pub regrets: PayoffProfile,
    pub max_regret: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompromiseResult {
    pub optimal_regret: Rational,
    pub members: Vec<Matching>,
    pub regret_table: Vec<RegretRow>,
}

/// Payoff profile of a matching: `A[i][p(i)]` for workers, then `B[p(k)][k]`.
pub fn situation_payoffs(instance: &GameInstance, p: &Matching) -> PayoffProfile {
    let n = instance.n();
    let workers = (0..n).map(|i| instance.worker_payoff(i, p.get(i)));
    let enterprises = (0..n).map(|k| instance.enterprise_payoff(p.get(k), k));
    PayoffProfile(workers.chain(enterprises).collect())
}

pub fn build_table(instance: &GameInstance) -> Result<SituationTable> {
    let rows = all_matchings(instance.n())?
        .into_iter()
        .map(|matching| {
            let payoffs = situation_payoffs(instance, &matching);
            Situation { matching, payoffs }
        })
        .collect();
    Ok(SituationTable {
        instance: instance.clone(),
        rows,
    })
}

pub fn ideal_point(table: &SituationTable) -> IdealPoint {
    let players = table.players();
    let values = (0..players)
        .map(|i| {
            table
                .rows
                .iter()
                .map(|s| s.payoffs.0[i])
                .max()
                .expect("table has at least one row")
        })
        .collect();
    IdealPoint {
        values: PayoffProfile(values),
    }
}

fn regrets(ideal: &IdealPoint, payoffs: &PayoffProfile) -> PayoffProfile {
    PayoffProfile(
        ideal
            .values
            .0
            .iter()
            .zip(&payoffs.0)
            .map(|(m, h)| *m - *h)
            .collect(),
    )
}

/// Minimax-regret situations: argmin over rows of `max_i (M_i - H_i)`.
pub fn compromise_set(table: &SituationTable) -> CompromiseResult {
    let ideal = ideal_point(table);
    let regret_table: Vec<RegretRow> = table
        .rows
        .iter()
        .map(|s| {
            let regrets = regrets(&ideal, &s.payoffs);
            let max_regret = *regrets.0.iter().max().expect("at least two players");
            RegretRow {
                matching: s.matching.clone(),
                regrets,
                max_regret,
            }
        })
        .collect();
    let optimal_regret = regret_table
        .iter()
        .map(|r| r.max_regret)
        .min()
        .expect("table has at least one row");
    let members = regret_table
        .iter()
        .filter(|r| r.max_regret == optimal_regret)
        .map(|r| r.matching.clone())
        .collect();
    CompromiseResult {
        optimal_regret,
        members,
        regret_table,
    }
}

/// The player with the largest regret at `m` (lowest index on ties) and the
/// payoff that player actually receives there.
pub fn least_satisfied(table: &SituationTable, m: &Matching) -> Result<(usize, Rational)> {
    let row = table
        .row_of(m)
        .ok_or_else(|| Error::MatchingNotInTable(m.image().to_vec()))?;
    let ideal = ideal_point(table);
    let r = regrets(&ideal, &row.payoffs);
    let mut worst = 0;
    for (i, v) in r.0.iter().enumerate() {
        if *v > r.0[worst] {
            worst = i;
        }
    }
    Ok((worst, row.payoffs.0[worst]))
}

/// Raw strategies: each worker names an enterprise, each enterprise a worker.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StrategyProfile {
    pub workers: Vec<usize>,
    pub enterprises: Vec<usize>,
}

impl StrategyProfile {
    /// The consistent profile realizing `m`.
    pub fn from_matching(m: &Matching) -> Self {
        StrategyProfile {
            workers: m.image().to_vec(),
            enterprises: m.inverse().image().to_vec(),
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        if self.workers.len() != n || self.enterprises.len() != n {
            return Err(Error::MalformedProfile(format!(
                "expected {n} worker and {n} enterprise choices, got {} and {}",
                self.workers.len(),
                self.enterprises.len()
            )));
        }
        if let Some(&c) = self.workers.iter().chain(&self.enterprises).find(|&&c| c >= n) {
            return Err(Error::MalformedProfile(format!("choice {c} out of range 0..{n}")));
        }
        Ok(())
    }

    /// The matching this profile realizes, if worker choices form a bijection
    /// and every enterprise names the worker that named it.
    pub fn consistent_matching(&self) -> Option<Matching> {
        let m = Matching::from_image(self.workers.clone()).ok()?;
        (0..m.len())
            .all(|i| self.enterprises[m.get(i)] == i)
            .then_some(m)
    }

    /// Payoff of strategic agent `player`: worker `i < n` or enterprise
    /// `j = player - n`. Inconsistent profiles pay zero to everyone.
    pub fn payoff(&self, instance: &GameInstance, player: usize) -> Rational {
        let n = instance.n();
        match self.consistent_matching() {
            None => Rational::ZERO,
            Some(m) if player < n => instance.worker_payoff(player, m.get(player)),
            Some(_) => {
                let j = player - n;
                instance.enterprise_payoff(j, self.enterprises[j])
            }
        }
    }

    fn with_choice(&self, player: usize, choice: usize, n: usize) -> StrategyProfile {
        let mut next = self.clone();
        if player < n {
            next.workers[player] = choice;
        } else {
            next.enterprises[player - n] = choice;
        }
        next
    }

    fn choice(&self, player: usize, n: usize) -> usize {
        if player < n {
            self.workers[player]
        } else {
            self.enterprises[player - n]
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum NashVerdict {
    Equilibrium,
    /// `player` (workers `0..n`, enterprise j as `n + j`) strictly gains by
    /// switching to `better_strategy`.
    Deviation {
        player: usize,
        better_strategy: usize,
        gain: Rational,
    },
}

/// Checks every unilateral deviation; reports the first strictly profitable
/// one in (player, strategy) order.
pub fn verify_nash(instance: &GameInstance, profile: &StrategyProfile) -> Result<NashVerdict> {
    let n = instance.n();
    profile.validate(n)?;
    for player in 0..2 * n {
        let current = profile.payoff(instance, player);
        let own = profile.choice(player, n);
        for alt in (0..n).filter(|&c| c != own) {
            let deviated = profile.with_choice(player, alt, n).payoff(instance, player);
            if deviated > current {
                return Ok(NashVerdict::Deviation {
                    player,
                    better_strategy: alt,
                    gain: deviated - current,
                });
            }
        }
    }
    Ok(NashVerdict::Equilibrium)
}

/// All consistent profiles (one per matching, lexicographic) that are equilibria.
pub fn enumerate_equilibria(instance: &GameInstance) -> Result<Vec<StrategyProfile>> {
    let n = instance.n();
    if n > MAX_EQUILIBRIUM_SIZE {
        return Err(Error::SizeTooLarge {
            n,
            cap: MAX_EQUILIBRIUM_SIZE,
        });
    }
    let mut out = Vec::new();
    for m in all_matchings(n)? {
        let profile = StrategyProfile::from_matching(&m);
        if verify_nash(instance, &profile)? == NashVerdict::Equilibrium {
            out.push(profile);
        }
    }
    Ok(out)
}
