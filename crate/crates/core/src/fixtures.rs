//! Reference instances for the three workflows, plus the published solutions
//! that do not survive exact recomputation.
//!
//! The same data ships as JSON under `fixtures/` for the CLI.

use crate::bargaining::BimatrixGame;
use crate::matching::Matching;
use crate::matrix::{GameInstance, UtilityMatrix};

/// Worker utilities of the six-player situation game. Entry (1,1) is 76:
/// the displayed source matrix shows 75, but every derived value (payoff
/// table, ideal point, compromise set) uses 76.
pub const SITUATION_A: [[i64; 3]; 3] = [[76, 22, 94], [33, 41, 86], [45, 13, 54]];

/// Enterprise utilities, enterprise rows × worker columns.
pub const SITUATION_B: [[i64; 3]; 3] = [[94, 71, 17], [30, 32, 18], [59, 85, 38]];

/// The six substitutions p_1..p_6 in their published order (0-based images).
/// p_4 is not printed; `[2, 0, 1]` is recovered from its payoff row.
pub const SUBSTITUTIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 0, 2],
    [2, 1, 0],
    [2, 0, 1],
    [0, 2, 1],
    [1, 2, 0],
];

/// Published payoff table, one row per entry of [`SUBSTITUTIONS`].
pub const SITUATION_PAYOFFS: [[i64; 6]; 6] = [
    [76, 41, 54, 94, 32, 38],
    [22, 33, 54, 30, 71, 38],
    [94, 41, 45, 59, 32, 17],
    [94, 33, 13, 94, 71, 18],
    [76, 86, 13, 94, 85, 18],
    [22, 86, 45, 30, 85, 17],
];

pub const SITUATION_IDEAL: [i64; 6] = [94, 86, 54, 94, 85, 38];

/// Workers' efficiency matrix of the two-sided assignment problem.
pub const ASSIGNMENT_A: [[i64; 3]; 3] = [[40, 20, 10], [15, 12, 8], [32, 30, 18]];

/// Jobs' efficiency matrix (job rows × worker columns).
pub const ASSIGNMENT_B: [[i64; 3]; 3] = [[9, 14, 21], [11, 7, 5], [8, 16, 25]];

/// Published job distribution Y (job → worker). Suboptimal: it scores 48,
/// while `[1, 0, 2]` scores 50.
pub const PUBLISHED_Y: [usize; 3] = [2, 0, 1];
pub const PUBLISHED_Y_VALUE: i64 = 48;

/// The two-union bimatrix game.
pub const UNION_GAME: [[(i64, i64); 2]; 2] = [[(6, 2), (0, 0)], [(0, 0), (2, 6)]];

pub fn situation_game() -> GameInstance {
    GameInstance::new(
        labelled(SITUATION_A, "s", "h"),
        labelled(SITUATION_B, "h", "s"),
    )
    .expect("fixture is well-formed")
}

pub fn assignment_market() -> GameInstance {
    GameInstance::new(
        labelled(ASSIGNMENT_A, "s", "h"),
        labelled(ASSIGNMENT_B, "h", "s"),
    )
    .expect("fixture is well-formed")
}

pub fn published_y() -> Matching {
    Matching::from_image(PUBLISHED_Y.to_vec()).expect("fixture is a permutation")
}

pub fn union_game() -> BimatrixGame {
    BimatrixGame::from_integers(&UNION_GAME.map(|r| r.to_vec()))
        .expect("fixture is well-formed")
}

fn labelled(rows: [[i64; 3]; 3], row_prefix: &str, col_prefix: &str) -> UtilityMatrix {
    let m = UtilityMatrix::from_integers(rows).expect("fixture is square");
    UtilityMatrix::with_labels(
        m.rows().to_vec(),
        (1..=3).map(|i| format!("{row_prefix}{i}")).collect(),
        (1..=3).map(|i| format!("{col_prefix}{i}")).collect(),
    )
    .expect("labels match")
}
