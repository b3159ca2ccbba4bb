use crate::assignment::{compare_assignments, solve_hungarian, Objective};
use crate::bargaining::{bargain, feasible_hull, negotiation_corners, nash_solution, DisagreementPoint};
use crate::error::Result;
use crate::fixtures;
use crate::matching::all_matchings;
use crate::matrix::UtilityMatrix;
use crate::permutation_game::{
    build_table, compromise_set, ideal_point, least_satisfied, verify_nash, NashVerdict,
    StrategyProfile,
};
use crate::rational::Rational;

use super::files::{BimatrixFile, MarketFile};
use super::report::{
    AssignReport, BargainReport, EquilibriumSummary, GameReport, LeastSatisfied, Payload,
    PipelineReport, Report, Side,
};

fn is_fixture<const N: usize>(grid: &[Vec<Rational>], fixture: &[[i64; N]; N]) -> bool {
    grid.len() == N
        && grid
            .iter()
            .zip(fixture)
            .all(|(r, f)| r.len() == N && r.iter().zip(f).all(|(a, &b)| *a == Rational::from(b)))
}

fn situation_notes(market: &MarketFile) -> Vec<String> {
    if !(is_fixture(&market.a, &fixtures::SITUATION_A) && is_fixture(&market.b, &fixtures::SITUATION_B)) {
        return Vec::new();
    }
    vec![
        "reference worker matrix is displayed with a_11 = 75, but its payoff table, ideal point \
         and compromise set all use 76; 76 is used here"
            .into(),
        "reference payoff table lists 94 for player 4 in situation (h3 h1 h2); B gives 59 there \
         (ideal point and compromise set are unaffected)"
            .into(),
    ]
}

fn assignment_notes(market: &MarketFile, side: Side) -> Vec<String> {
    if side == Side::Enterprises && is_fixture(&market.b, &fixtures::ASSIGNMENT_B) {
        vec![format!(
            "reference solution distributes jobs as {:?} (job -> worker) for a total of {}; \
             that is not optimal, the optimum here is strictly larger",
            fixtures::PUBLISHED_Y,
            fixtures::PUBLISHED_Y_VALUE
        )]
    } else {
        Vec::new()
    }
}

fn assign_report(matrix: &UtilityMatrix, side: Side, objective: Objective) -> AssignReport {
    let result = solve_hungarian(matrix, objective);
    let pairs = result
        .matching
        .image()
        .iter()
        .enumerate()
        .map(|(i, &j)| (matrix.row_labels()[i].clone(), matrix.col_labels()[j].clone()))
        .collect();
    AssignReport {
        side,
        objective,
        assignment_grid: result.matching.to_grid(),
        matching: result.matching,
        total_value: result.total_value,
        pairs,
    }
}

/// Optimal assignment for one side of the market: A for workers, B for
/// enterprises.
pub fn cmd_assign(market: &MarketFile, side: Side, objective: Objective) -> Result<Report> {
    market.validate()?;
    let matrix = match side {
        Side::Workers => market.worker_matrix(),
        Side::Enterprises => market.enterprise_matrix(),
    };
    let mut report = Report::new(Payload::Assign(assign_report(&matrix, side, objective)));
    report.fixture_notes = assignment_notes(market, side);
    Ok(report)
}

fn game_report(market: &MarketFile) -> Result<GameReport> {
    let instance = market.instance();
    let table = build_table(&instance)?;
    let ideal = ideal_point(&table);
    let compromise = compromise_set(&table);
    let least = compromise
        .members
        .iter()
        .map(|m| {
            let (player, payoff) = least_satisfied(&table, m)?;
            Ok(LeastSatisfied {
                matching: m.clone(),
                player,
                payoff,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut equilibria = Vec::new();
    let mut deviations = Vec::new();
    let situations = all_matchings(instance.n())?;
    for m in &situations {
        match verify_nash(&instance, &StrategyProfile::from_matching(m))? {
            NashVerdict::Equilibrium => equilibria.push(m.clone()),
            v => deviations.push((m.clone(), v)),
        }
    }

    let players = market
        .workers
        .iter()
        .cloned()
        .chain(market.workers.iter().map(|w| format!("employer({w})")))
        .collect();
    Ok(GameReport {
        n: instance.n(),
        players,
        table: table.rows().to_vec(),
        ideal_point: ideal.values,
        compromise,
        least_satisfied: least,
        equilibrium: EquilibriumSummary {
            situations_checked: situations.len(),
            equilibria,
            deviations,
        },
    })
}

/// Situation table, ideal point, compromise set and equilibrium check.
pub fn cmd_game(market: &MarketFile) -> Result<Report> {
    market.validate()?;
    let mut report = Report::new(Payload::Game(game_report(market)?));
    report.fixture_notes = situation_notes(market);
    Ok(report)
}

fn bargain_report(file: &BimatrixFile, disagreement: Option<(Rational, Rational)>) -> Result<BargainReport> {
    file.validate()?;
    let game = file.game();
    let outcome = match disagreement {
        Some((v1, v2)) => nash_solution(&game, DisagreementPoint::fixed(v1, v2))?,
        None => bargain(&game)?,
    };
    let corners = negotiation_corners(&feasible_hull(&game), &outcome.disagreement.point());
    Ok(BargainReport {
        row_labels: file.row_labels.clone(),
        col_labels: file.col_labels.clone(),
        outcome,
        negotiation_corners: corners,
    })
}

/// Nash arbitration; the threat point is the maximin pair unless overridden.
pub fn cmd_bargain(file: &BimatrixFile, disagreement: Option<(Rational, Rational)>) -> Result<Report> {
    Ok(Report::new(Payload::Bargain(bargain_report(file, disagreement)?)))
}

/// Both one-sided assignments, their mismatch, optionally the situation game
/// on a second market, then the union negotiation.
pub fn cmd_pipeline(
    market: &MarketFile,
    union_game: &BimatrixFile,
    situation_market: Option<&MarketFile>,
) -> Result<Report> {
    market.validate()?;
    union_game.validate()?;
    if let Some(s) = situation_market {
        s.validate()?;
    }

    let workers = assign_report(&market.worker_matrix(), Side::Workers, Objective::Maximize);
    let enterprises = assign_report(&market.enterprise_matrix(), Side::Enterprises, Objective::Maximize);
    let mismatch = compare_assignments(&workers.matching, &enterprises.matching)?;
    let situation_game = situation_market.map(game_report).transpose()?;
    let bargaining = bargain_report(union_game, None)?;

    let mut notes = assignment_notes(market, Side::Enterprises);
    if is_fixture(&market.b, &fixtures::ASSIGNMENT_B) {
        let published = compare_assignments(&workers.matching, &fixtures::published_y())?;
        notes.push(format!(
            "against the reference job distribution, {} of {} appointments differ",
            published.len(),
            workers.matching.len()
        ));
    }
    if let Some(s) = situation_market {
        notes.extend(situation_notes(s));
    }

    let mut report = Report::new(Payload::Pipeline(PipelineReport {
        workers,
        enterprises,
        mismatch,
        situation_game,
        bargaining,
    }));
    report.fixture_notes = notes;
    Ok(report)
}
