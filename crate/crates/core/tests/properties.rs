//! Property tests against independent oracles.

use labor_match::bargaining::{
    bargain, feasible_hull, hull_contains, maximin_2x2, pareto_frontier, BimatrixGame, Player,
    Point, Segment,
};
use labor_match::permutation_game::{
    build_table, compromise_set, enumerate_equilibria, ideal_point, verify_nash, NashVerdict,
    StrategyProfile,
};
use labor_match::{all_matchings, GameInstance, Rational, UtilityMatrix};
use proptest::prelude::*;

fn q(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

fn matrix(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = UtilityMatrix> {
    proptest::collection::vec(proptest::collection::vec(lo..=hi, n), n).prop_map(|rows| {
        UtilityMatrix::new(
            rows.into_iter()
                .map(|r| r.into_iter().map(Rational::from).collect())
                .collect(),
        )
        .unwrap()
    })
}

fn instance(sizes: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = GameInstance> {
    sizes.prop_flat_map(|n| {
        (matrix(n, 0, 100), matrix(n, 0, 100)).prop_map(|(a, b)| GameInstance::new(a, b).unwrap())
    })
}

fn game_2x2() -> impl Strategy<Value = BimatrixGame> {
    proptest::collection::vec((0i64..=10, 0i64..=10), 4).prop_map(|v| {
        BimatrixGame::from_integers(&[vec![v[0], v[1]], vec![v[2], v[3]]]).unwrap()
    })
}

/// Max-regret per situation by a direct scan, sharing no code with the solver.
fn brute_compromise(inst: &GameInstance) -> (Rational, Vec<Vec<usize>>) {
    let n = inst.n();
    let a = inst.worker_utilities();
    let b = inst.enterprise_utilities();
    let perms = all_matchings(n).unwrap();
    let profiles: Vec<Vec<Rational>> = perms
        .iter()
        .map(|p| {
            let img = p.image();
            let mut v: Vec<Rational> = (0..n).map(|i| a.get(i, img[i])).collect();
            v.extend((0..n).map(|k| b.get(img[k], k)));
            v
        })
        .collect();
    let ideal: Vec<Rational> = (0..2 * n)
        .map(|i| profiles.iter().map(|p| p[i]).max().unwrap())
        .collect();
    let worst: Vec<Rational> = profiles
        .iter()
        .map(|p| (0..2 * n).map(|i| ideal[i] - p[i]).max().unwrap())
        .collect();
    let best = *worst.iter().min().unwrap();
    let members = perms
        .iter()
        .zip(&worst)
        .filter(|(_, w)| **w == best)
        .map(|(p, _)| p.image().to_vec())
        .collect();
    (best, members)
}

fn on_segment(p: &Point, s: &Segment) -> bool {
    let cross = (s.to.v1 - s.from.v1) * (p.v2 - s.from.v2) - (s.to.v2 - s.from.v2) * (p.v1 - s.from.v1);
    cross.is_zero()
        && p.v1 >= s.from.v1.min(s.to.v1)
        && p.v1 <= s.from.v1.max(s.to.v1)
        && p.v2 >= s.from.v2.min(s.to.v2)
        && p.v2 <= s.from.v2.max(s.to.v2)
}

/// Some point of `s` is >= `v` in both coordinates.
fn segment_reaches(s: &Segment, v: &Point) -> bool {
    // v1(t) = a1 + t·d1 >= v1 and v2(t) = a2 + t·d2 >= v2 over t in [0, 1]
    let mut lo = Rational::ZERO;
    let mut hi = Rational::ONE;
    for (a, b, bound) in [(s.from.v1, s.to.v1, v.v1), (s.from.v2, s.to.v2, v.v2)] {
        let delta = b - a;
        if delta.is_zero() {
            if a < bound {
                return false;
            }
        } else if delta > Rational::ZERO {
            lo = lo.max((bound - a) / delta);
        } else {
            hi = hi.min((bound - a) / delta);
        }
    }
    lo <= hi
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn table_is_complete(inst in instance(1..=6)) {
        let table = build_table(&inst).unwrap();
        let fact: usize = (1..=inst.n()).product();
        prop_assert_eq!(table.rows().len(), fact);
    }

    #[test]
    fn ideal_point_is_attained_and_never_exceeded(inst in instance(2..=4)) {
        let table = build_table(&inst).unwrap();
        let ideal = ideal_point(&table);
        for (i, m) in ideal.values.values().iter().enumerate() {
            prop_assert!(table.rows().iter().all(|r| r.payoffs.values()[i] <= *m));
            prop_assert!(table.rows().iter().any(|r| r.payoffs.values()[i] == *m));
        }
    }

    #[test]
    fn compromise_matches_full_scan(inst in instance(2..=4)) {
        let c = compromise_set(&build_table(&inst).unwrap());
        let (regret, members) = brute_compromise(&inst);
        prop_assert_eq!(c.optimal_regret, regret);
        let got: Vec<Vec<usize>> = c.members.iter().map(|m| m.image().to_vec()).collect();
        prop_assert_eq!(got, members);
        for row in &c.regret_table {
            prop_assert!(row.regrets.values().iter().all(|r| !r.is_negative()));
        }
    }

    #[test]
    fn shifting_all_utilities_keeps_the_compromise(inst in instance(2..=4), c in -20i64..=20) {
        let shift = |m: &UtilityMatrix| m.map(|v| v + Rational::from(c));
        let moved = GameInstance::new(shift(inst.worker_utilities()), shift(inst.enterprise_utilities())).unwrap();
        let t0 = build_table(&inst).unwrap();
        let t1 = build_table(&moved).unwrap();
        let m0 = ideal_point(&t0).values;
        let m1 = ideal_point(&t1).values;
        for (x, y) in m0.values().iter().zip(m1.values()) {
            prop_assert_eq!(*x + Rational::from(c), *y);
        }
        let c0 = compromise_set(&t0);
        let c1 = compromise_set(&t1);
        prop_assert_eq!(c0.members, c1.members);
        prop_assert_eq!(c0.optimal_regret, c1.optimal_regret);
    }

    #[test]
    fn consistent_profiles_are_equilibria(inst in instance(2..=3)) {
        let eq = enumerate_equilibria(&inst).unwrap();
        let fact: usize = (1..=inst.n()).product();
        prop_assert_eq!(eq.len(), fact);
    }

    #[test]
    fn maximin_beats_every_grid_strategy(g in game_2x2(), two in any::<bool>()) {
        let player = if two { Player::Two } else { Player::One };
        let (strategy, value) = maximin_2x2(&g, player).unwrap();
        // own payoff indexed (own strategy, opponent strategy)
        let k = |own: usize, opp: usize| match player {
            Player::One => g.payoff(own, opp).v1,
            Player::Two => g.payoff(opp, own).v2,
        };
        let guaranteed = |xi: Rational| {
            (0..2).map(|c| xi * k(0, c) + (Rational::ONE - xi) * k(1, c)).min().unwrap()
        };
        prop_assert_eq!(guaranteed(strategy.weights()[0]), value);
        let mut grid_best = guaranteed(Rational::ZERO);
        for s in 0..=100 {
            let v = guaranteed(q(s, 100));
            prop_assert!(value >= v);
            grid_best = grid_best.max(v);
        }
        let slope = (0..2).map(|c| (k(0, c) - k(1, c)).abs()).max().unwrap();
        prop_assert!(value - grid_best <= slope * q(1, 100));
    }

    #[test]
    fn hull_contains_every_outcome(g in game_2x2()) {
        let hull = feasible_hull(&g);
        let outcomes: Vec<Point> = g.outcomes().collect();
        for p in &outcomes {
            prop_assert!(hull_contains(&hull, p));
        }
        for v in &hull {
            prop_assert!(outcomes.contains(v));
        }
    }

    #[test]
    fn frontier_is_pareto_sound(g in game_2x2()) {
        let hull = feasible_hull(&g);
        let frontier = pareto_frontier(&hull);
        let on_frontier = |p: &Point| frontier.iter().any(|s| on_segment(p, s));
        for s in &frontier {
            for p in [s.from, s.to] {
                prop_assert!(!hull.iter().any(|h| h.dominates(&p)));
            }
        }
        for v in hull.iter().filter(|v| !on_frontier(v)) {
            let covered = frontier.iter().any(|s| segment_reaches(s, v));
            prop_assert!(covered, "vertex {:?} not dominated by the frontier", v);
        }
    }

    #[test]
    fn nash_solution_axioms(g in game_2x2(), lambda in 1i128..=5, lambda_den in 1i128..=3, mu in -5i128..=5) {
        let out = bargain(&g).unwrap();
        let d = out.disagreement.point();
        prop_assert!(out.solution.weakly_dominates(&d));
        prop_assert!(out.pareto_frontier.iter().any(|s| on_segment(&out.solution, s)));
        prop_assert_eq!(out.nash_product, (out.solution.v1 - d.v1) * (out.solution.v2 - d.v2));

        let swapped = bargain(&g.swap_players()).unwrap();
        prop_assert_eq!(swapped.solution, out.solution.swapped());

        let scale = q(lambda, lambda_den);
        let shift = Rational::from(mu);
        for player in [Player::One, Player::Two] {
            let moved = bargain(&g.map_player(player, |v| scale * v + shift)).unwrap();
            let expected = match player {
                Player::One => Point { v1: scale * out.solution.v1 + shift, v2: out.solution.v2 },
                Player::Two => Point { v1: out.solution.v1, v2: scale * out.solution.v2 + shift },
            };
            prop_assert_eq!(moved.solution, expected);
        }

        for s in &out.pareto_frontier {
            for k in 0..=1000 {
                let t = q(k, 1000);
                let p = Point {
                    v1: s.from.v1 + t * (s.to.v1 - s.from.v1),
                    v2: s.from.v2 + t * (s.to.v2 - s.from.v2),
                };
                if p.weakly_dominates(&d) {
                    prop_assert!(out.nash_product >= (p.v1 - d.v1) * (p.v2 - d.v2));
                }
            }
        }
    }
}

#[test]
fn crowded_profile_is_not_an_equilibrium_when_a_deviation_pays() {
    let a = UtilityMatrix::from_integers([[1, 2], [3, 4]]).unwrap();
    let b = UtilityMatrix::from_integers([[1, 1], [1, 1]]).unwrap();
    let inst = GameInstance::new(a, b).unwrap();
    let crowded = StrategyProfile { workers: vec![0, 0], enterprises: vec![0, 1] };
    assert!(matches!(verify_nash(&inst, &crowded).unwrap(), NashVerdict::Deviation { .. }));
}
