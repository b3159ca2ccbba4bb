use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use labor_match::assignment::Objective;
use labor_match::io::{
    cmd_assign, cmd_bargain, cmd_game, cmd_pipeline, parse_bimatrix, parse_market, BimatrixFile,
    MarketFile, RenderMode, Report, Side,
};
use labor_match::{Error, Rational, Result};

#[derive(Parser)]
#[command(name = "labor-match", version, about = "Exact solvers for two-sided assignment markets")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = RenderMode::Text)]
    output: RenderMode,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Optimal assignment for one side of the market.
    Assign {
        #[arg(long)]
        market: PathBuf,
        #[arg(long, value_enum)]
        side: Side,
        /// Minimize the total instead of maximizing it.
        #[arg(long)]
        minimize: bool,
    },
    /// Situation table, ideal point, compromise set and Nash equilibria.
    Game {
        #[arg(long)]
        market: PathBuf,
    },
    /// Maximin threat point and Nash arbitration for a bimatrix game.
    Bargain {
        #[arg(long)]
        game: PathBuf,
        /// Use this threat point instead of the maximin values.
        #[arg(long, num_args = 2, value_names = ["V1", "V2"], allow_negative_numbers = true)]
        disagreement: Option<Vec<Rational>>,
    },
    /// Both assignments, their mismatch, then the union negotiation.
    Pipeline {
        #[arg(long)]
        market: PathBuf,
        #[arg(long)]
        union_game: PathBuf,
        /// Also analyse the situation game on this market.
        #[arg(long)]
        game_market: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_market(path: &Path) -> Result<MarketFile> {
    parse_market(&read(path)?)
}

fn load_bimatrix(path: &Path) -> Result<BimatrixFile> {
    parse_bimatrix(&read(path)?)
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Assign { market, side, minimize } => {
            let objective = if *minimize { Objective::Minimize } else { Objective::Maximize };
            cmd_assign(&load_market(market)?, *side, objective)
        }
        Command::Game { market } => cmd_game(&load_market(market)?),
        Command::Bargain { game, disagreement } => {
            let d = disagreement.as_ref().map(|v| (v[0], v[1]));
            cmd_bargain(&load_bimatrix(game)?, d)
        }
        Command::Pipeline { market, union_game, game_market } => {
            // parse everything before solving anything
            let market = load_market(market)?;
            let union_game = load_bimatrix(union_game)?;
            let situation = game_market.as_deref().map(load_market).transpose()?;
            cmd_pipeline(&market, &union_game, situation.as_ref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|report| {
        let text = report.render(cli.output);
        match &cli.out {
            Some(path) => fs::write(path, text).map_err(Error::from),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
