//! One function per subcommand, each returning its output table.

use std::path::Path;

use capgame::bimatrix::ctf_mixed;
use capgame::game::welfare_levels;
use capgame::json::parse_game;
use capgame::mgmg::{self, summarize, MgmgParams, MgmgStrategy};
use capgame::verify::{Oracle, VerificationReport};
use capgame::{CapabilityGame, Rational};

use crate::table::{Cell, OutputTable, RenderOptions};
use crate::{CliError, Command, GameCommand, MgmgCommand, Mode, ScaleArgs, Settings};

/// What a command produced: a table, possibly carrying verification
/// verdicts, or a raw verification report.
#[derive(Debug)]
pub enum Outcome {
    Table { table: OutputTable, all_matched: bool },
    Report(Box<VerificationReport>),
}

impl Outcome {
    fn plain(table: OutputTable) -> Self {
        Outcome::Table { table, all_matched: true }
    }

    pub fn all_matched(&self) -> bool {
        match self {
            Outcome::Table { all_matched, .. } => *all_matched,
            Outcome::Report(r) => r.matched,
        }
    }

    /// Reports are always JSON, whatever the requested format.
    pub fn render(&self, opts: RenderOptions) -> String {
        match self {
            Outcome::Table { table, .. } => table.render(opts),
            Outcome::Report(r) => {
                let mut s = serde_json::to_string_pretty(r).expect("plain data serializes");
                s.push('\n');
                s
            }
        }
    }
}

pub fn dispatch(command: &Command, settings: Settings) -> Result<Outcome, CliError> {
    let oracle = Oracle::new(settings.scale_limit);
    match command {
        Command::Mgmg(MgmgCommand::Ctf(a)) => {
            let (table, all_matched) = cmd_mgmg_ctf(&a.scale, a.ca_max, a.cb_max, a.verify.then_some(oracle))?;
            Ok(Outcome::Table { table, all_matched })
        }
        Command::Mgmg(MgmgCommand::Equilibrium(a)) => {
            Ok(Outcome::plain(cmd_mgmg_equilibrium(&a.scale, a.ca, a.cb, a.t)?))
        }
        Command::Mgmg(MgmgCommand::Layout(a)) => Ok(Outcome::plain(cmd_mgmg_layout(a.m)?)),
        Command::Mgmg(MgmgCommand::Verify(a)) => {
            let params = params(&a.scale, a.ca, a.cb)?;
            Ok(Outcome::Report(Box::new(oracle.verify_theorem(&params)?)))
        }
        Command::Game(GameCommand::Ctf(a)) => Ok(Outcome::plain(cmd_game_ctf(&read_game(&a.file)?, a.mode)?)),
        Command::Game(GameCommand::CapabilityPositive(a)) => {
            Ok(Outcome::plain(cmd_game_capability_positive(&read_game(&a.file)?)?))
        }
    }
}

fn params(s: &ScaleArgs, ca: usize, cb: usize) -> Result<MgmgParams, CliError> {
    Ok(MgmgParams::new(s.m, s.rho.clone(), s.mu.clone(), ca, cb)?)
}

pub fn read_game(path: &Path) -> Result<CapabilityGame, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })?;
    Ok(parse_game(&text)?)
}

/// Closed-form payoff sets for every `(C_A, C_B)` in the grid; with an
/// oracle, a `match` column and whether every row matched.
pub fn cmd_mgmg_ctf(
    scale: &ScaleArgs,
    ca_max: usize,
    cb_max: usize,
    oracle: Option<Oracle>,
) -> Result<(OutputTable, bool), CliError> {
    let mut header = vec!["C_A", "C_B", "payoffs"];
    if oracle.is_some() {
        header.push("match");
    }
    let mut table = OutputTable::new(header);
    let mut all = true;
    for ca in 1..=ca_max {
        for cb in 1..=cb_max {
            let p = params(scale, ca, cb)?;
            let mut row: Vec<Cell> = vec![ca.into(), cb.into(), mgmg::theorem_payoffs(&p)?.into()];
            if let Some(o) = &oracle {
                let matched = o.verify_theorem(&p)?.matched;
                all &= matched;
                row.push(matched.into());
            }
            table.push(row);
        }
    }
    Ok((table, all))
}

fn positions(v: &[usize]) -> Cell {
    Cell::Text(v.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
}

pub fn cmd_mgmg_equilibrium(scale: &ScaleArgs, ca: usize, cb: usize, t: u8) -> Result<OutputTable, CliError> {
    let p = params(scale, ca, cb)?;
    let (a, b) = mgmg::build_pure_equilibrium(&p, t)?;
    let (ua, ub) = mgmg::payoff(&a, &b, &p)?;
    let mut table = OutputTable::new(["player", "strategy", "seg", "gold", "mine", "udp", "ddp", "payoff"]);
    let mut row = |name: &str, f: &MgmgStrategy, u: Rational| {
        let s = summarize(f);
        table.push(vec![
            name.into(),
            f.to_string().into(),
            s.seg.into(),
            s.n_gold.into(),
            s.n_mine.into(),
            positions(&s.udp),
            positions(&s.ddp),
            u.into(),
        ]);
    };
    row("A", &a, ua);
    row("B", &b, ub);
    Ok(table)
}

pub fn cmd_mgmg_layout(m: usize) -> Result<OutputTable, CliError> {
    let mut table = OutputTable::new(["index", "line", "type"]);
    for r in mgmg::layout(m)? {
        table.push(vec![r.index.into(), Cell::Int(r.line.into()), r.kind.to_string().into()]);
    }
    Ok(table)
}

/// One row per capability profile; mixed mode adds a degeneracy flag.
pub fn cmd_game_ctf(game: &CapabilityGame, mode: Mode) -> Result<OutputTable, CliError> {
    let mut table = match mode {
        Mode::Pure => OutputTable::new(["capability", "payoffs"]),
        Mode::Mixed => OutputTable::new(["capability", "payoffs", "degenerate"]),
    };
    for c in game.capability_profiles() {
        let row = match mode {
            Mode::Pure => vec![c.to_string().into(), game.ctf_pure(&c)?.into()],
            Mode::Mixed => {
                let ctf = ctf_mixed(game, &c)?;
                vec![c.to_string().into(), ctf.payoffs.into(), ctf.degenerate.into()]
            }
        };
        table.push(row);
    }
    Ok(table)
}

/// One row per shared level `b` with its welfare set; the verdict is
/// repeated on every row to keep the table rectangular.
pub fn cmd_game_capability_positive(game: &CapabilityGame) -> Result<OutputTable, CliError> {
    let w = welfare_levels(game)?;
    let verdict = w.verdict.to_string();
    let mut table = OutputTable::new(["level", "welfare", "verdict"]);
    for (b, level) in w.levels.into_iter().enumerate() {
        table.push(vec![(b + 1).into(), Cell::Values(level), verdict.clone().into()]);
    }
    Ok(table)
}
