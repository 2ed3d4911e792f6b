//! Command-line front end.
//!
//! Exit status: 0 on success (for `verify`, only when the schedule is
//! stable; for `compare`, only when a matching exists), 1 for a negative
//! verdict, 2 for usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::binpoly::BinPoly;
use crate::error::Error;
use crate::fano::{FanoPlane, NodeLineAssignment};
use crate::galois_skc::{build_galois_skc, TeamMap};
use crate::gf2k::FieldCtx;
use crate::schedule::Schedule;
use crate::verifier::{check_stability, compare_schedules, random_schedule};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

const MIN_PLAYERS: u32 = 4;
const MAX_PLAYERS: u32 = 1024;

#[derive(Parser, Debug)]
#[command(
    name = "skc",
    version,
    about = "Generate and verify stable serial knockout competitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a stable schedule.
    Generate {
        #[arg(long)]
        players: u32,
        #[arg(long, value_enum, default_value_t = Method::Galois)]
        method: Method,
        /// Irreducible modulus, hex bit string (0xB is X^3+X+1).
        #[arg(long)]
        modulus: Option<String>,
        /// `identity` or `paper8`.
        #[arg(long)]
        team_map: Option<String>,
        /// Node-line assignment file (fano method only).
        #[arg(long)]
        assignment: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a schedule file for stability.
    Verify {
        file: PathBuf,
        /// Write the full report as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Match the tournaments of two schedules.
    Compare { left: PathBuf, right: PathBuf },
    /// List every valid node-line assignment of the Fano plane.
    FanoEnumerate,
    /// Emit n-1 uniformly random seedings.
    Random {
        #[arg(long)]
        players: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Galois,
    Fano,
}

#[derive(Debug)]
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn fail<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failure(msg.into()))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<u8> {
    match command {
        Command::Generate {
            players,
            method,
            modulus,
            team_map,
            assignment,
            out: dest,
        } => {
            let schedule = generate(players, method, modulus, team_map, assignment)?;
            emit(&schedule.render(), dest.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Verify { file, report } => verify(&file, report.as_deref(), out, err),
        Command::Compare { left, right } => {
            let a = load_schedule(&left)?;
            let b = load_schedule(&right)?;
            match compare_schedules(&a, &b)? {
                Some(m) => {
                    for (i, j) in m.iter().enumerate() {
                        writeln!(out, "{} -> {}", i + 1, j + 1).map_err(io_failure)?;
                    }
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "no matching").map_err(io_failure)?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::FanoEnumerate => {
            let plane = FanoPlane::canonical();
            let all = plane.enumerate_assignments();
            let mut text = format!("# {} assignments\n", all.len());
            for (i, a) in all.iter().enumerate() {
                text.push_str(&format!("\n# assignment {}\n{a}", i + 1));
            }
            emit(&text, None, out)?;
            Ok(EXIT_OK)
        }
        Command::Random {
            players,
            seed,
            out: dest,
        } => {
            let k = rounds_for(players)?;
            emit(&random_schedule(k, seed)?.render(), dest.as_deref(), out)?;
            Ok(EXIT_OK)
        }
    }
}

fn rounds_for(players: u32) -> CliResult<u32> {
    if !players.is_power_of_two() || !(MIN_PLAYERS..=MAX_PLAYERS).contains(&players) {
        return fail(format!(
            "--players must be a power of two between {MIN_PLAYERS} and {MAX_PLAYERS}, got {players}"
        ));
    }
    Ok(players.trailing_zeros())
}

fn generate(
    players: u32,
    method: Method,
    modulus: Option<String>,
    team_map: Option<String>,
    assignment: Option<PathBuf>,
) -> CliResult<Schedule> {
    let k = rounds_for(players)?;
    match method {
        Method::Fano => {
            if players != 8 {
                return fail("the fano method only supports --players 8");
            }
            if modulus.is_some() || team_map.is_some() {
                return fail("--modulus and --team-map cannot be combined with --method fano");
            }
            let plane = FanoPlane::canonical();
            let assignment = match assignment {
                Some(path) => read(&path)?
                    .parse::<NodeLineAssignment>()
                    .map_err(|e| Failure(format!("{}: {e}", path.display())))?,
                None => NodeLineAssignment::standard(),
            };
            Ok(plane.build_skc(&assignment)?)
        }
        Method::Galois => {
            if assignment.is_some() {
                return fail("--assignment requires --method fano");
            }
            let ctx = match modulus {
                Some(text) => {
                    let poly: BinPoly = text.parse()?;
                    if poly.degree() != Some(k) {
                        return fail(format!(
                            "modulus {poly} has degree {}, but {players} players need degree {k}",
                            poly.degree().map_or("-inf".to_string(), |d| d.to_string())
                        ));
                    }
                    if !poly.is_irreducible()? {
                        return fail(format!(
                            "modulus {poly} ({}) is reducible over Z2; pick an irreducible polynomial",
                            poly.to_hex()
                        ));
                    }
                    FieldCtx::new(poly)?
                }
                None => FieldCtx::with_default_modulus(k)?,
            };
            let map = TeamMap::named(team_map.as_deref().unwrap_or("identity"), k)?;
            Ok(build_galois_skc(&ctx, &map)?)
        }
    }
}

fn verify(
    file: &Path,
    report_path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<u8> {
    let schedule = load_schedule(file)?;
    if !schedule.is_skc_sized() {
        writeln!(
            err,
            "warning: {} tournaments on {} players (an SKC has {}); checking the set as given",
            schedule.len(),
            schedule.players(),
            schedule.players() - 1
        )
        .map_err(io_failure)?;
    }
    let report = check_stability(&schedule)?;
    write!(out, "{}", report.summary()).map_err(io_failure)?;
    if let Some(path) = report_path {
        let json = serde_json::to_string_pretty(&report.to_document())
            .map_err(|e| Failure(format!("serialising report: {e}")))?;
        fs::write(path, json + "\n").map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    }
    Ok(if report.is_stable() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_schedule(path: &Path) -> CliResult<Schedule> {
    Schedule::parse(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn emit(text: &str, dest: Option<&Path>, out: &mut dyn Write) -> CliResult<()> {
    match dest {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))
        }
        None => out.write_all(text.as_bytes()).map_err(io_failure),
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure(format!("write failed: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("skc").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn seeding_lines(text: &str) -> Vec<&str> {
        text.lines()
            .filter(|l| !l.starts_with('#') && !l.is_empty())
            .collect()
    }

    #[test]
    fn generate_reference_labels() {
        let (code, out, _) = call(&[
            "generate",
            "--players",
            "8",
            "--modulus",
            "0xB",
            "--team-map",
            "paper8",
        ]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(
            seeding_lines(&out),
            [
                "0145-2367",
                "0426-5173",
                "0563-7214",
                "0257-6431",
                "0312-4756",
                "0671-3542",
                "0734-1625"
            ]
        );
        assert!(out.contains("# modulus = 0xb"));
    }

    #[test]
    fn generate_validation() {
        for bad in [
            vec!["generate", "--players", "12"],
            vec!["generate", "--players", "2"],
            vec!["generate", "--players", "2048"],
            vec!["generate", "--players", "8", "--modulus", "0x9"],
            vec!["generate", "--players", "16", "--modulus", "0xB"],
            vec!["generate", "--players", "16", "--team-map", "paper8"],
            vec!["generate", "--players", "16", "--method", "fano"],
            vec![
                "generate",
                "--players",
                "8",
                "--method",
                "fano",
                "--modulus",
                "0xB",
            ],
            vec!["generate", "--players", "8", "--assignment", "x.txt"],
        ] {
            let (code, _, err) = call(&bad);
            assert_eq!(code, EXIT_ERROR, "{bad:?}");
            assert!(err.starts_with("error:"), "{bad:?}: {err}");
        }
        let (_, _, err) = call(&["generate", "--players", "8", "--modulus", "0x9"]);
        assert!(err.contains("reducible"));
    }

    #[test]
    fn generate_fano_default() {
        let (code, out, _) = call(&["generate", "--players", "8", "--method", "fano"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(seeding_lines(&out)[0], "0145-2367");
        assert_eq!(seeding_lines(&out).len(), 7);
    }

    #[test]
    fn enumerate_lists_all() {
        let (code, out, _) = call(&["fano-enumerate"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("# 24 assignments\n"));
        assert_eq!(out.matches("# assignment ").count(), 24);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[]).0, EXIT_ERROR);
        assert_eq!(call(&["bogus"]).0, EXIT_ERROR);
        assert_eq!(call(&["random", "--players", "8"]).0, EXIT_ERROR);
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("fano-enumerate"));
    }
}
