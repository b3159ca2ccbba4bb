//! File formats, reports, and the commands behind the CLI.

mod commands;
mod files;
mod report;

pub use commands::{cmd_assign, cmd_bargain, cmd_game, cmd_pipeline};
pub use files::{parse_bimatrix, parse_market, BimatrixFile, MarketFile};
pub use report::{
    AssignReport, BargainReport, EquilibriumSummary, GameReport, LeastSatisfied, Payload,
    PipelineReport, RenderMode, Report, Side,
};
