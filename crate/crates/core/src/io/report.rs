//! Command reports and their two renderings.
//!
//! The machine-readable form is pretty-printed JSON whose field names are
//! stable; rationals appear as integers or `"p/q"` strings, never floats.
//! The text form is for people and may show decimal approximations.

use std::fmt::Write as _;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::assignment::Objective;
use crate::bargaining::{BargainingOutcome, Point};
use crate::error::{Error, Result};
use crate::matching::Matching;
use crate::permutation_game::{CompromiseResult, NashVerdict, PayoffProfile, Situation};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Workers,
    Enterprises,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum RenderMode {
    #[default]
    Text,
    Machine,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub payload: Payload,
    /// Known discrepancies between reference inputs and their published solutions.
    pub fixture_notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum Payload {
    Assign(AssignReport),
    Game(GameReport),
    Bargain(BargainReport),
    Pipeline(PipelineReport),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignReport {
    pub side: Side,
    pub objective: Objective,
    /// Row index → column index of the solved matrix.
    pub matching: Matching,
    pub total_value: Rational,
    pub assignment_grid: Vec<Vec<u8>>,
    /// `(row label, column label)` for every assigned pair.
    pub pairs: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeastSatisfied {
    pub matching: Matching,
    pub player: usize,
    pub payoff: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquilibriumSummary {
    pub situations_checked: usize,
    pub equilibria: Vec<Matching>,
    pub deviations: Vec<(Matching, NashVerdict)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameReport {
    pub n: usize,
    /// Worker names followed by the enterprise-side players keyed by worker.
    pub players: Vec<String>,
    pub table: Vec<Situation>,
    pub ideal_point: PayoffProfile,
    pub compromise: CompromiseResult,
    pub least_satisfied: Vec<LeastSatisfied>,
    pub equilibrium: EquilibriumSummary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BargainReport {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub outcome: BargainingOutcome,
    /// Where the axis-parallel rays from the threat point leave the feasible set.
    pub negotiation_corners: Option<(Point, Point)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub workers: AssignReport,
    pub enterprises: AssignReport,
    /// Workers whose optimal enterprise differs from the one that optimally picks them.
    pub mismatch: Vec<usize>,
    pub situation_game: Option<GameReport>,
    pub bargaining: BargainReport,
}

impl Report {
    pub fn new(payload: Payload) -> Self {
        Report {
            payload,
            fixture_notes: Vec::new(),
        }
    }

    pub fn render(&self, mode: RenderMode) -> String {
        match mode {
            RenderMode::Machine => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            RenderMode::Text => render_text(self),
        }
    }

    pub fn parse(text: &str) -> Result<Report> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("report: {e}")))
    }
}

fn approx(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        format!("{r} (~{:.4})", r.to_f64())
    }
}

fn point(p: &Point) -> String {
    format!("({}, {})", p.v1, p.v2)
}

fn one_based(indices: &[usize]) -> String {
    indices.iter().map(|i| (i + 1).to_string()).join(", ")
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    match &report.payload {
        Payload::Assign(a) => text_assign(&mut out, a),
        Payload::Game(g) => text_game(&mut out, g),
        Payload::Bargain(b) => text_bargain(&mut out, b),
        Payload::Pipeline(p) => {
            let _ = writeln!(out, "== Step 1: independent optimal assignments ==");
            text_assign(&mut out, &p.workers);
            out.push('\n');
            text_assign(&mut out, &p.enterprises);
            out.push('\n');
            if p.mismatch.is_empty() {
                let _ = writeln!(out, "Both sides agree on every appointment.");
            } else {
                let _ = writeln!(
                    out,
                    "{} of {} appointments do not coincide (workers {}).",
                    p.mismatch.len(),
                    p.workers.matching.len(),
                    one_based(&p.mismatch)
                );
            }
            if let Some(g) = &p.situation_game {
                let _ = writeln!(out, "\n== Step 2: situation game ==");
                text_game(&mut out, g);
            }
            let _ = writeln!(out, "\n== Step 3: union negotiation ==");
            text_bargain(&mut out, &p.bargaining);
        }
    }
    if !report.fixture_notes.is_empty() {
        let _ = writeln!(out, "\nNotes:");
        for n in &report.fixture_notes {
            let _ = writeln!(out, "  - {n}");
        }
    }
    out
}

fn text_assign(out: &mut String, a: &AssignReport) {
    let side = match a.side {
        Side::Workers => "workers to enterprises",
        Side::Enterprises => "enterprises to workers",
    };
    let goal = match a.objective {
        Objective::Maximize => "maximum",
        Objective::Minimize => "minimum",
    };
    let _ = writeln!(out, "Assignment of {side} ({goal} total)");
    for row in &a.assignment_grid {
        let _ = writeln!(out, "  [{}]", row.iter().join(" "));
    }
    for (r, c) in &a.pairs {
        let _ = writeln!(out, "  {r} -> {c}");
    }
    let _ = writeln!(out, "  total = {}", approx(&a.total_value));
}

fn text_game(out: &mut String, g: &GameReport) {
    let _ = writeln!(out, "Situations ({}), players: {}", g.table.len(), g.players.join(" "));
    for (k, s) in g.table.iter().enumerate() {
        let _ = writeln!(
            out,
            "  x{:<3} {}  H = ({})",
            k + 1,
            s.matching,
            s.payoffs.values().iter().join(", ")
        );
    }
    let _ = writeln!(out, "Ideal point M = ({})", g.ideal_point.values().iter().join(", "));
    let _ = writeln!(
        out,
        "Compromise set (max regret {}): {}",
        approx(&g.compromise.optimal_regret),
        g.compromise.members.iter().join(", ")
    );
    for l in &g.least_satisfied {
        let _ = writeln!(
            out,
            "  at {}: least satisfied player {} ({}) receives {}",
            l.matching,
            l.player + 1,
            g.players.get(l.player).map_or("?", String::as_str),
            approx(&l.payoff)
        );
    }
    let e = &g.equilibrium;
    let _ = writeln!(
        out,
        "Nash equilibria: {} of {} situations",
        e.equilibria.len(),
        e.situations_checked
    );
    for (m, v) in &e.deviations {
        if let NashVerdict::Deviation { player, better_strategy, gain } = v {
            let _ = writeln!(
                out,
                "  {m}: player {} gains {} by choosing {}",
                player + 1,
                approx(gain),
                better_strategy + 1
            );
        }
    }
}

fn text_bargain(out: &mut String, b: &BargainReport) {
    let o = &b.outcome;
    let d = &o.disagreement;
    if let (Some(x0), Some(y0)) = (&d.x0, &d.y0) {
        let _ = writeln!(out, "Maximin strategies: x0 = ({}), y0 = ({})", x0.weights().iter().join(", "), y0.weights().iter().join(", "));
    }
    let _ = writeln!(out, "Disagreement point d = ({}, {})", approx(&d.v1), approx(&d.v2));
    let _ = writeln!(out, "Feasible hull: {}", o.feasible_hull.iter().map(point).join(" "));
    let _ = writeln!(
        out,
        "Pareto frontier: {}",
        o.pareto_frontier
            .iter()
            .map(|s| format!("{}-{}", point(&s.from), point(&s.to)))
            .join(", ")
    );
    if let Some((c, e)) = &b.negotiation_corners {
        let _ = writeln!(out, "Negotiation set corners: c = {}, e = {}", point(c), point(e));
    }
    let _ = writeln!(
        out,
        "Nash solution: ({}, {}), product of gains {}",
        approx(&o.solution.v1),
        approx(&o.solution.v2),
        approx(&o.nash_product)
    );
}
