//! Two-player bargaining over a bimatrix game.
//!
//! The threat point is each player's maximin value in mixed strategies; the
//! feasible set is the convex hull of the pure-outcome payoff pairs (joint
//! randomization); the Nash arbitration solution maximizes the product of
//! gains over the threat point along the Pareto frontier. Everything is exact.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A payoff pair `(K_1, K_2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[Rational; 2]", into = "[Rational; 2]")]
pub struct Point {
    pub v1: Rational,
    pub v2: Rational,
}

impl Point {
    pub fn new(v1: impl Into<Rational>, v2: impl Into<Rational>) -> Self {
        Point {
            v1: v1.into(),
            v2: v2.into(),
        }
    }

    /// Weakly better in both coordinates.
    pub fn weakly_dominates(&self, other: &Point) -> bool {
        self.v1 >= other.v1 && self.v2 >= other.v2
    }

    /// Pareto dominance: weakly better in both, strictly in one.
    pub fn dominates(&self, other: &Point) -> bool {
        self.weakly_dominates(other) && self != other
    }

    pub fn swapped(&self) -> Point {
        Point {
            v1: self.v2,
            v2: self.v1,
        }
    }

    fn lerp(&self, to: &Point, t: Rational) -> Point {
        Point {
            v1: self.v1 + t * (to.v1 - self.v1),
            v2: self.v2 + t * (to.v2 - self.v2),
        }
    }
}

impl From<[Rational; 2]> for Point {
    fn from([v1, v2]: [Rational; 2]) -> Self {
        Point { v1, v2 }
    }
}

impl From<Point> for [Rational; 2] {
    fn from(p: Point) -> Self {
        [p.v1, p.v2]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    One,
    Two,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BimatrixGame {
    payoffs: Vec<Vec<Point>>,
}

impl BimatrixGame {
    pub fn new(payoffs: Vec<Vec<Point>>) -> Result<Self> {
        let cols = payoffs.first().map_or(0, Vec::len);
        if payoffs.is_empty() || cols == 0 {
            return Err(Error::InvalidMatrix("bimatrix game needs at least one outcome".into()));
        }
        if payoffs.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidMatrix("bimatrix rows have different lengths".into()));
        }
        Ok(BimatrixGame { payoffs })
    }

    pub fn from_integers(rows: &[Vec<(i64, i64)>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&(a, b)| Point::new(a, b)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.payoffs.len()
    }

    pub fn cols(&self) -> usize {
        self.payoffs[0].len()
    }

    pub fn payoff(&self, row: usize, col: usize) -> Point {
        self.payoffs[row][col]
    }

    pub fn outcomes(&self) -> impl Iterator<Item = Point> + '_ {
        self.payoffs.iter().flatten().copied()
    }

    /// Exchanges the roles of the players: the new row player is the old
    /// column player, and each payoff pair is swapped.
    pub fn swap_players(&self) -> BimatrixGame {
        let payoffs = (0..self.cols())
            .map(|c| (0..self.rows()).map(|r| self.payoffs[r][c].swapped()).collect())
            .collect();
        BimatrixGame { payoffs }
    }

    /// Applies `f` to one player's payoffs.
    pub fn map_player(&self, player: Player, f: impl Fn(Rational) -> Rational) -> BimatrixGame {
        let payoffs = self
            .payoffs
            .iter()
            .map(|r| {
                r.iter()
                    .map(|p| match player {
                        Player::One => Point { v1: f(p.v1), v2: p.v2 },
                        Player::Two => Point { v1: p.v1, v2: f(p.v2) },
                    })
                    .collect()
            })
            .collect();
        BimatrixGame { payoffs }
    }

    /// The player's own payoff, indexed (own strategy, opponent strategy).
    fn own_matrix(&self, player: Player) -> Vec<Vec<Rational>> {
        match player {
            Player::One => self
                .payoffs
                .iter()
                .map(|r| r.iter().map(|p| p.v1).collect())
                .collect(),
            Player::Two => (0..self.cols())
                .map(|c| (0..self.rows()).map(|r| self.payoffs[r][c].v2).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MixedStrategy {
    weights: Vec<Rational>,
}

impl MixedStrategy {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty()
            || weights.iter().any(Rational::is_negative)
            || weights.iter().sum::<Rational>() != Rational::ONE
        {
            return Err(Error::InvalidMatrix(format!(
                "not a probability vector: {weights:?}"
            )));
        }
        Ok(MixedStrategy { weights })
    }

    /// `(xi, 1 - xi)`.
    fn binary(xi: Rational) -> Self {
        MixedStrategy {
            weights: vec![xi, Rational::ONE - xi],
        }
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn is_pure(&self) -> bool {
        self.weights.contains(&Rational::ONE)
    }
}

/// The threat point, with the maximin strategies that secure it when known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisagreementPoint {
    pub v1: Rational,
    pub v2: Rational,
    pub x0: Option<MixedStrategy>,
    pub y0: Option<MixedStrategy>,
}

impl DisagreementPoint {
    /// A caller-supplied threat point with no strategies attached.
    pub fn fixed(v1: impl Into<Rational>, v2: impl Into<Rational>) -> Self {
        DisagreementPoint {
            v1: v1.into(),
            v2: v2.into(),
            x0: None,
            y0: None,
        }
    }

    pub fn point(&self) -> Point {
        Point {
            v1: self.v1,
            v2: self.v2,
        }
    }
}

/// Frontier piece from `from` (higher v2) to `to` (higher v1). A lone
/// Pareto point is a segment with `from == to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub from: Point,
    pub to: Point,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BargainingOutcome {
    pub feasible_hull: Vec<Point>,
    pub pareto_frontier: Vec<Segment>,
    pub disagreement: DisagreementPoint,
    pub solution: Point,
    pub nash_product: Rational,
}

/// Maximin mixed strategy of `player` in a 2×2 game and its guaranteed value.
///
/// The guaranteed payoff `min(f_1(ξ), f_2(ξ))` is concave and piecewise
/// linear in ξ, so its maximum sits at ξ = 1, ξ = 0, or where the two lines
/// cross. Pure strategies are checked first so that a saddle point yields a
/// degenerate strategy.
pub fn maximin_2x2(game: &BimatrixGame, player: Player) -> Result<(MixedStrategy, Rational)> {
    if game.rows() != 2 || game.cols() != 2 {
        return Err(Error::NotTwoByTwo {
            rows: game.rows(),
            cols: game.cols(),
        });
    }
    let k = game.own_matrix(player);
    let guaranteed = |xi: Rational| {
        let against = |c: usize| xi * k[0][c] + (Rational::ONE - xi) * k[1][c];
        against(0).min(against(1))
    };

    let mut candidates = vec![Rational::ONE, Rational::ZERO];
    let denom = k[0][0] - k[0][1] - k[1][0] + k[1][1];
    if !denom.is_zero() {
        let xi = (k[1][1] - k[1][0]) / denom;
        if xi >= Rational::ZERO && xi <= Rational::ONE {
            candidates.push(xi);
        }
    }
    let mut best = candidates[0];
    let mut best_value = guaranteed(best);
    for &xi in &candidates[1..] {
        let v = guaranteed(xi);
        if v > best_value {
            best = xi;
            best_value = v;
        }
    }
    Ok((MixedStrategy::binary(best), best_value))
}

fn cross(o: &Point, a: &Point, b: &Point) -> Rational {
    (a.v1 - o.v1) * (b.v2 - o.v2) - (a.v2 - o.v2) * (b.v1 - o.v1)
}

/// Convex hull of all outcome pairs, counterclockwise from the
/// lexicographically smallest point, collinear points dropped.
pub fn feasible_hull(game: &BimatrixGame) -> Vec<Point> {
    let mut pts: Vec<Point> = game.outcomes().collect();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }

    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= Rational::ZERO {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= Rational::ZERO {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// The Pareto-optimal part of the hull boundary, ordered from the end with
/// the highest v2 to the end with the highest v1.
pub fn pareto_frontier(hull: &[Point]) -> Vec<Segment> {
    if hull.is_empty() {
        return Vec::new();
    }
    let by = |key: fn(&Point) -> (Rational, Rational)| {
        (0..hull.len())
            .max_by(|&a, &b| key(&hull[a]).cmp(&key(&hull[b])))
            .expect("hull is nonempty")
    };
    // Counterclockwise, the boundary runs from the rightmost (then highest)
    // vertex up and left to the highest (then rightmost) vertex; every edge
    // on that stretch has dv1 < 0 and dv2 > 0.
    let right = by(|p| (p.v1, p.v2));
    let top = by(|p| (p.v2, p.v1));
    if right == top {
        let p = hull[right];
        return vec![Segment { from: p, to: p }];
    }
    let mut chain = vec![right];
    let mut i = right;
    while i != top {
        i = (i + 1) % hull.len();
        chain.push(i);
    }
    chain
        .windows(2)
        .rev()
        .map(|w| Segment {
            from: hull[w[1]],
            to: hull[w[0]],
        })
        .collect()
}

/// Whether `p` lies inside or on the boundary of the counterclockwise hull.
pub fn hull_contains(hull: &[Point], p: &Point) -> bool {
    match hull.len() {
        0 => false,
        1 => hull[0] == *p,
        2 => {
            let (a, b) = (&hull[0], &hull[1]);
            cross(a, b, p).is_zero()
                && p.v1 >= a.v1.min(b.v1)
                && p.v1 <= a.v1.max(b.v1)
                && p.v2 >= a.v2.min(b.v2)
                && p.v2 <= a.v2.max(b.v2)
        }
        n => (0..n).all(|i| cross(&hull[i], &hull[(i + 1) % n], p) >= Rational::ZERO),
    }
}

fn nash_product(p: &Point, d: &Point) -> Rational {
    (p.v1 - d.v1) * (p.v2 - d.v2)
}

/// Range of t in [0, 1] where `a + t·delta >= bound`, or None if empty.
fn clip(lo: Rational, hi: Rational, a: Rational, delta: Rational, bound: Rational) -> Option<(Rational, Rational)> {
    let (mut lo, mut hi) = (lo, hi);
    match delta.cmp(&Rational::ZERO) {
        Ordering::Equal => {
            if a < bound {
                return None;
            }
        }
        Ordering::Greater => lo = lo.max((bound - a) / delta),
        Ordering::Less => hi = hi.min((bound - a) / delta),
    }
    (lo <= hi).then_some((lo, hi))
}

/// Best point of one frontier segment restricted to `v >= d`.
fn best_on_segment(seg: &Segment, d: &Point) -> Option<(Point, Rational)> {
    let (a1, a2) = (seg.from.v1, seg.from.v2);
    let delta1 = seg.to.v1 - a1;
    let delta2 = seg.to.v2 - a2;
    let (lo, hi) = clip(Rational::ZERO, Rational::ONE, a1, delta1, d.v1)?;
    let (lo, hi) = clip(lo, hi, a2, delta2, d.v2)?;

    // f(t) = (g1 + t·δ1)(g2 + t·δ2) with g = from − d; concave when δ1·δ2 < 0.
    let g1 = a1 - d.v1;
    let g2 = a2 - d.v2;
    let curvature = delta1 * delta2;
    let t = if curvature < Rational::ZERO {
        let vertex = -(delta1 * g2 + delta2 * g1) / (Rational::from(2) * curvature);
        vertex.max(lo).min(hi)
    } else {
        // degenerate piece: f is linear or constant, so an endpoint wins
        let at = |t| nash_product(&seg.from.lerp(&seg.to, t), d);
        if at(hi) > at(lo) { hi } else { lo }
    };
    let p = seg.from.lerp(&seg.to, t);
    Some((p, nash_product(&p, d)))
}

/// Whether some point of the hull (boundary included) is `>= d` in both
/// coordinates, i.e. `d` lies in the hull extended downward by free disposal.
pub fn weakly_dominated_by_hull(hull: &[Point], d: &Point) -> bool {
    let n = hull.len();
    (0..n).any(|i| {
        let (a, b) = (hull[i], hull[(i + 1) % n]);
        clip(Rational::ZERO, Rational::ONE, a.v1, b.v1 - a.v1, d.v1)
            .and_then(|(lo, hi)| clip(lo, hi, a.v2, b.v2 - a.v2, d.v2))
            .is_some()
    })
}

/// Nash arbitration solution for a given threat point.
///
/// The threat point itself need not be feasible (a maximin pair usually is
/// not a payoff any outcome delivers); it must only be weakly dominated by
/// some feasible point.
pub fn nash_solution(game: &BimatrixGame, disagreement: DisagreementPoint) -> Result<BargainingOutcome> {
    let hull = feasible_hull(game);
    let d = disagreement.point();
    if !weakly_dominated_by_hull(&hull, &d) {
        return Err(Error::DisagreementOutsideHull(d.v1, d.v2));
    }
    let frontier = pareto_frontier(&hull);
    let mut best: Option<(Point, Rational)> = None;
    for seg in &frontier {
        if let Some((p, prod)) = best_on_segment(seg, &d) {
            if best.as_ref().is_none_or(|(_, b)| prod > *b) {
                best = Some((p, prod));
            }
        }
    }
    let (solution, nash_product) = best.ok_or(Error::EmptyIndividuallyRationalRegion)?;
    Ok(BargainingOutcome {
        feasible_hull: hull,
        pareto_frontier: frontier,
        disagreement,
        solution,
        nash_product,
    })
}

/// Maximin threat point for both players, then the Nash solution.
pub fn bargain(game: &BimatrixGame) -> Result<BargainingOutcome> {
    let (x0, v1) = maximin_2x2(game, Player::One)?;
    let (y0, v2) = maximin_2x2(game, Player::Two)?;
    nash_solution(
        game,
        DisagreementPoint {
            v1,
            v2,
            x0: Some(x0),
            y0: Some(y0),
        },
    )
}

/// Where the rays from `d` parallel to the axes leave the feasible set:
/// `(c, e)` = (highest hull point straight above d, rightmost hull point
/// straight to the right of d). Display helper; the solver does not need them.
pub fn negotiation_corners(hull: &[Point], d: &Point) -> Option<(Point, Point)> {
    let up = ray_exit(hull, d, |p| p.v1, |p| p.v2)?;
    let right = ray_exit(hull, d, |p| p.v2, |p| p.v1)?;
    Some((up, right))
}

/// Farthest boundary point with `fixed(p) == fixed(d)` and `along(p) >= along(d)`.
fn ray_exit(
    hull: &[Point],
    d: &Point,
    fixed: fn(&Point) -> Rational,
    along: fn(&Point) -> Rational,
) -> Option<Point> {
    let n = hull.len();
    let mut best: Option<Point> = None;
    for i in 0..n {
        let (a, b) = (hull[i], hull[(i + 1) % n]);
        let hits: Vec<Point> = if fixed(&a) == fixed(&b) {
            if fixed(&a) == fixed(d) { vec![a, b] } else { vec![] }
        } else {
            let t = (fixed(d) - fixed(&a)) / (fixed(&b) - fixed(&a));
            if t >= Rational::ZERO && t <= Rational::ONE {
                vec![a.lerp(&b, t)]
            } else {
                vec![]
            }
        };
        for p in hits {
            if along(&p) >= along(d) && best.is_none_or(|q| along(&p) > along(&q)) {
                best = Some(p);
            }
        }
    }
    best
}
