//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Every reference value is exact (tolerance zero) unless the criterion
//! names a grid resolution.

use std::path::PathBuf;
use std::process::{Command, ExitCode};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use labor_match::assignment::{solve_bruteforce, solve_hungarian, Objective};
use labor_match::bargaining::{
    bargain, feasible_hull, maximin_2x2, pareto_frontier, BimatrixGame, Player, Point, Segment,
};
use labor_match::fixtures;
use labor_match::io::{Payload, Report};
use labor_match::permutation_game::{
    build_table, compromise_set, enumerate_equilibria, ideal_point, least_satisfied,
};
use labor_match::{GameInstance, Matching, Rational, UtilityMatrix};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from(x)).collect()
}

fn m(image: &[usize]) -> Matching {
    Matching::from_image(image.to_vec()).unwrap()
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> UtilityMatrix {
    UtilityMatrix::new(
        (0..n)
            .map(|_| (0..n).map(|_| Rational::from(rng.gen_range(0i64..=100))).collect())
            .collect(),
    )
    .unwrap()
}

fn random_game(rng: &mut ChaCha8Rng) -> BimatrixGame {
    let mut cell = || (rng.gen_range(0i64..=10), rng.gen_range(0i64..=10));
    let rows = vec![vec![cell(), cell()], vec![cell(), cell()]];
    BimatrixGame::from_integers(&rows).unwrap()
}

fn c1_payoff_table() -> Check {
    let table = build_table(&fixtures::situation_game()).map_err(|e| e.to_string())?;
    let mut bad = Vec::new();
    for (k, (sub, printed)) in fixtures::SUBSTITUTIONS.iter().zip(&fixtures::SITUATION_PAYOFFS).enumerate() {
        let row = table.row_of(&m(sub)).ok_or(format!("p_{} missing", k + 1))?;
        for (player, (got, want)) in row.payoffs.values().iter().zip(ints(printed)).enumerate() {
            if *got != want {
                bad.push(format!("p_{} player {}: computed {got}, printed {want}", k + 1, player + 1));
            }
        }
    }
    ensure(bad.is_empty(), || format!("{} of 36 cells differ: {}", bad.len(), bad.join("; ")))?;
    Ok("all 36 cells match".into())
}

fn c2_ideal_point() -> Check {
    let table = build_table(&fixtures::situation_game()).map_err(|e| e.to_string())?;
    let ideal = ideal_point(&table);
    ensure(ideal.values.values() == ints(&fixtures::SITUATION_IDEAL).as_slice(), || {
        format!("M = {:?}", ideal.values.values())
    })?;
    Ok("M = (94, 86, 54, 94, 85, 38)".into())
}

fn c3_compromise() -> Check {
    let table = build_table(&fixtures::situation_game()).map_err(|e| e.to_string())?;
    let c = compromise_set(&table);
    ensure(c.members == vec![m(&[0, 2, 1])], || format!("C_H = {:?}", c.members))?;
    ensure(c.optimal_regret == Rational::from(41), || format!("regret {}", c.optimal_regret))?;
    let (player, payoff) = least_satisfied(&table, &m(&[0, 2, 1])).map_err(|e| e.to_string())?;
    ensure(player == 2 && payoff == Rational::from(13), || {
        format!("least satisfied player {} gets {payoff}", player + 1)
    })?;
    Ok("C_H = {[0,2,1]}, regret 41, worker 3 guaranteed 13".into())
}

fn c4_nash_universality() -> Check {
    let eq = enumerate_equilibria(&fixtures::situation_game()).map_err(|e| e.to_string())?;
    ensure(eq.len() == 6, || format!("{} equilibria on the fixture", eq.len()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for trial in 0..50 {
        let n = rng.gen_range(2..=3);
        let inst = GameInstance::new(random_matrix(&mut rng, n), random_matrix(&mut rng, n)).unwrap();
        let eq = enumerate_equilibria(&inst).map_err(|e| e.to_string())?;
        let fact: usize = (1..=n).product();
        ensure(eq.len() == fact, || format!("trial {trial}: {} of {fact} situations", eq.len()))?;
    }
    Ok("fixture: 6 of 6; 50 random instances: every situation".into())
}

fn c5_workers_assignment() -> Check {
    let a = UtilityMatrix::from_integers(fixtures::ASSIGNMENT_A).unwrap();
    let r = solve_hungarian(&a, Objective::Maximize);
    ensure(r.total_value == Rational::from(78) && r.matching == m(&[0, 2, 1]), || {
        format!("total {} with {:?}", r.total_value, r.matching)
    })?;
    Ok("total 78, matching [0,2,1]".into())
}

fn c6_enterprises_assignment() -> Check {
    let b = UtilityMatrix::from_integers(fixtures::ASSIGNMENT_B).unwrap();
    let r = solve_hungarian(&b, Objective::Maximize);
    let oracle = solve_bruteforce(&b, Objective::Maximize).map_err(|e| e.to_string())?;
    ensure(r.total_value == Rational::from(50), || format!("solver total {}", r.total_value))?;
    ensure(oracle.total_value == r.total_value, || format!("oracle total {}", oracle.total_value))?;
    let published = b.value_of(&fixtures::published_y()).map_err(|e| e.to_string())?;
    ensure(published == Rational::from(fixtures::PUBLISHED_Y_VALUE), || {
        format!("published Y evaluates to {published}")
    })?;
    Ok("solver 50 = oracle 50; published Y evaluates to 48 (suboptimal)".into())
}

fn c7_maximin() -> Check {
    let g = fixtures::union_game();
    let (x0, v1) = maximin_2x2(&g, Player::One).map_err(|e| e.to_string())?;
    let (y0, v2) = maximin_2x2(&g, Player::Two).map_err(|e| e.to_string())?;
    ensure(x0.weights() == [q(1, 4), q(3, 4)], || format!("x0 = {:?}", x0.weights()))?;
    ensure(y0.weights() == [q(3, 4), q(1, 4)], || format!("y0 = {:?}", y0.weights()))?;
    ensure(v1 == q(3, 2) && v2 == q(3, 2), || format!("d = ({v1}, {v2})"))?;
    Ok("x0 = (1/4, 3/4), y0 = (3/4, 1/4), d = (3/2, 3/2)".into())
}

fn c8_arbitration() -> Check {
    let g = fixtures::union_game();
    let out = bargain(&g).map_err(|e| e.to_string())?;
    let hull = [Point::new(0, 0), Point::new(6, 2), Point::new(2, 6)];
    ensure(out.feasible_hull == hull, || format!("hull {:?}", out.feasible_hull))?;
    let seg = Segment { from: Point::new(2, 6), to: Point::new(6, 2) };
    ensure(out.pareto_frontier == [seg], || format!("frontier {:?}", out.pareto_frontier))?;
    ensure(out.solution == Point::new(4, 4), || format!("solution {:?}", out.solution))?;
    Ok("hull {(0,0),(6,2),(2,6)}, frontier (2,6)-(6,2), solution (4,4)".into())
}

fn c9_oracle_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for trial in 0..500 {
        let n = rng.gen_range(2..=7);
        let a = random_matrix(&mut rng, n);
        for obj in [Objective::Maximize, Objective::Minimize] {
            let fast = solve_hungarian(&a, obj).total_value;
            let slow = solve_bruteforce(&a, obj).map_err(|e| e.to_string())?.total_value;
            ensure(fast == slow, || format!("trial {trial} {obj:?}: hungarian {fast}, brute force {slow}"))?;
        }
    }
    Ok("500 matrices, n in 2..=7, both objectives, 0 failures".into())
}

fn on_segment(p: &Point, s: &Segment) -> bool {
    let cross = (s.to.v1 - s.from.v1) * (p.v2 - s.from.v2) - (s.to.v2 - s.from.v2) * (p.v1 - s.from.v1);
    cross.is_zero()
        && p.v1 >= s.from.v1.min(s.to.v1)
        && p.v1 <= s.from.v1.max(s.to.v1)
        && p.v2 >= s.from.v2.min(s.to.v2)
        && p.v2 <= s.from.v2.max(s.to.v2)
}

fn c10_bargaining_axioms() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for trial in 0..100 {
        let g = random_game(&mut rng);
        let fail = |what: &str| format!("trial {trial} ({what}) on {g:?}");
        let out = bargain(&g).map_err(|e| format!("{}: {e}", fail("solve")))?;
        let s = out.solution;
        let d = out.disagreement.point();

        let swapped = bargain(&g.swap_players()).map_err(|e| e.to_string())?;
        ensure(swapped.solution == s.swapped(), || fail("symmetry"))?;

        let scale = q(rng.gen_range(1..=6), rng.gen_range(1..=4));
        let shift = Rational::from(rng.gen_range(-10i64..=10));
        let moved = bargain(&g.map_player(Player::One, |v| scale * v + shift)).map_err(|e| e.to_string())?;
        ensure(moved.solution == Point { v1: scale * s.v1 + shift, v2: s.v2 }, || fail("affine, player 1"))?;
        let moved = bargain(&g.map_player(Player::Two, |v| scale * v + shift)).map_err(|e| e.to_string())?;
        ensure(moved.solution == Point { v1: s.v1, v2: scale * s.v2 + shift }, || fail("affine, player 2"))?;

        let frontier = pareto_frontier(&feasible_hull(&g));
        ensure(frontier.iter().any(|seg| on_segment(&s, seg)), || fail("pareto"))?;
        ensure(s.weakly_dominates(&d), || fail("individual rationality"))?;

        for seg in &frontier {
            for k in 0..=1000 {
                let t = q(k, 1000);
                let p = Point {
                    v1: seg.from.v1 + t * (seg.to.v1 - seg.from.v1),
                    v2: seg.from.v2 + t * (seg.to.v2 - seg.from.v2),
                };
                if p.weakly_dominates(&d) {
                    let prod = (p.v1 - d.v1) * (p.v2 - d.v2);
                    ensure(out.nash_product >= prod, || fail("grid product oracle"))?;
                }
            }
        }
    }
    Ok("100 games: symmetry, affine covariance, Pareto, grid oracle at 1/1000, 0 failures".into())
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn c11_cli_round_trip() -> Check {
    let out = Command::new(env!("CARGO_BIN_EXE_labor-match"))
        .arg("--output")
        .arg("machine")
        .arg("pipeline")
        .arg("--market")
        .arg(fixture("assignment_market.json"))
        .arg("--union-game")
        .arg(fixture("union_game.json"))
        .arg("--game-market")
        .arg(fixture("situation_market.json"))
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("exit status {:?}", out.status.code()))?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let report = Report::parse(&text).map_err(|e| e.to_string())?;
    ensure(report.render(labor_match::io::RenderMode::Machine) == text, || "re-render differs".into())?;
    let Payload::Pipeline(p) = report.payload else {
        return Err("not a pipeline report".into());
    };

    let game = p.situation_game.ok_or("situation game missing")?;
    let table = build_table(&fixtures::situation_game()).map_err(|e| e.to_string())?;
    ensure(game.table == table.rows(), || "situation table differs from the library's".into())?;
    ensure(game.ideal_point.values() == ints(&fixtures::SITUATION_IDEAL).as_slice(), || "ideal point".into())?;
    ensure(game.compromise.members == vec![m(&[0, 2, 1])], || "compromise set".into())?;
    ensure(game.compromise.optimal_regret == Rational::from(41), || "regret".into())?;
    ensure(
        game.least_satisfied.len() == 1
            && game.least_satisfied[0].player == 2
            && game.least_satisfied[0].payoff == Rational::from(13),
        || "least satisfied".into(),
    )?;
    ensure(game.equilibrium.equilibria.len() == 6, || "equilibria".into())?;

    ensure(p.workers.total_value == Rational::from(78) && p.workers.matching == m(&[0, 2, 1]), || "workers".into())?;
    ensure(p.enterprises.total_value == Rational::from(50), || "enterprises".into())?;
    ensure(!p.mismatch.is_empty(), || "mismatch should be nonempty".into())?;

    let b = &p.bargaining.outcome;
    let (x0, y0) = (b.disagreement.x0.as_ref(), b.disagreement.y0.as_ref());
    ensure(x0.map(|x| x.weights().to_vec()) == Some(vec![q(1, 4), q(3, 4)]), || "x0".into())?;
    ensure(y0.map(|y| y.weights().to_vec()) == Some(vec![q(3, 4), q(1, 4)]), || "y0".into())?;
    ensure(b.disagreement.point() == Point { v1: q(3, 2), v2: q(3, 2) }, || "d".into())?;
    ensure(b.feasible_hull == [Point::new(0, 0), Point::new(6, 2), Point::new(2, 6)], || "hull".into())?;
    ensure(b.solution == Point::new(4, 4), || "solution".into())?;
    Ok("exit 0; report re-parses exactly; values of criteria 1-8 recovered".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("C1  payoff table reproduces printed rows", c1_payoff_table),
        ("C2  ideal point", c2_ideal_point),
        ("C3  compromise set", c3_compromise),
        ("C4  Nash universality", c4_nash_universality),
        ("C5  workers' assignment", c5_workers_assignment),
        ("C6  enterprises' assignment", c6_enterprises_assignment),
        ("C7  maximin strategies", c7_maximin),
        ("C8  Nash arbitration", c8_arbitration),
        ("C9  Hungarian vs brute force", c9_oracle_equivalence),
        ("C10 bargaining axioms", c10_bargaining_axioms),
        ("C11 CLI pipeline round trip", c11_cli_round_trip),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
