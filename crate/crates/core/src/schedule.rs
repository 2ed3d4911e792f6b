//! Ordered collections of seedings and their plain-text file format.
//!
//! A schedule file holds one seeding per line. Lines starting with `#` are
//! comments; comments of the form `# key = value` at the top of the file are
//! read back as metadata (`k`, `modulus`, `team-map`, `method`).

use std::fmt::Write as _;

use crate::binpoly::BinPoly;
use crate::bracket::Seeding;
use crate::error::{Error, Result};

/// Where a schedule came from. Purely informational: it never affects
/// verification.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Provenance {
    pub method: Option<String>,
    pub modulus: Option<BinPoly>,
    pub team_map: Option<String>,
    /// Multiplier used for each tournament of a field-built schedule.
    pub multipliers: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schedule {
    rounds: u32,
    seedings: Vec<Seeding>,
    provenance: Provenance,
}

impl Schedule {
    /// Any non-empty list of seedings over the same players. Use
    /// [`Schedule::is_skc_sized`] to check for exactly n-1 tournaments.
    pub fn new(seedings: Vec<Seeding>) -> Result<Self> {
        let first = seedings.first().ok_or(Error::EmptySchedule)?;
        let n = first.players();
        if let Some(bad) = seedings.iter().find(|s| s.players() != n) {
            return Err(Error::SizeMismatch {
                left: n,
                right: bad.players(),
            });
        }
        Ok(Schedule {
            rounds: first.rounds(),
            seedings,
            provenance: Provenance::default(),
        })
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    pub fn rounds(&self) -> u32 {
        self.rounds
    }

    pub fn players(&self) -> usize {
        1 << self.rounds
    }

    pub fn seedings(&self) -> &[Seeding] {
        &self.seedings
    }

    pub fn len(&self) -> usize {
        self.seedings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seedings.is_empty()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Exactly n-1 tournaments.
    pub fn is_skc_sized(&self) -> bool {
        self.seedings.len() == self.players() - 1
    }

    /// The same tournaments in a different order; `order[i]` is the index of
    /// the seeding placed at position `i`.
    pub fn reordered(&self, order: &[usize]) -> Schedule {
        Schedule {
            rounds: self.rounds,
            seedings: order.iter().map(|&i| self.seedings[i].clone()).collect(),
            provenance: self.provenance.clone(),
        }
    }

    /// Applies one player relabelling to every seeding.
    pub fn relabel(&self, perm: &[u32]) -> Result<Schedule> {
        let seedings = self
            .seedings
            .iter()
            .map(|s| s.relabel(perm))
            .collect::<Result<Vec<_>>>()?;
        Ok(Schedule {
            rounds: self.rounds,
            seedings,
            provenance: Provenance::default(),
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let p = &self.provenance;
        writeln!(out, "# k = {}", self.rounds).unwrap();
        if let Some(m) = &p.method {
            writeln!(out, "# method = {m}").unwrap();
        }
        if let Some(m) = p.modulus {
            writeln!(out, "# modulus = {}", m.to_hex()).unwrap();
        }
        if let Some(t) = &p.team_map {
            writeln!(out, "# team-map = {t}").unwrap();
        }
        if let Some(z) = &p.multipliers {
            let z: Vec<String> = z.iter().map(|z| z.to_string()).collect();
            writeln!(out, "# multipliers = {}", z.join(",")).unwrap();
        }
        for s in &self.seedings {
            writeln!(out, "{s}").unwrap();
        }
        out
    }

    /// Parses a schedule file. Errors carry the 1-based line number and, for
    /// malformed seedings, the column.
    pub fn parse(text: &str) -> Result<Schedule> {
        let mut seedings = Vec::new();
        let mut provenance = Provenance::default();
        let mut declared_k = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some((key, value)) = comment.split_once('=') {
                    let value = value.trim();
                    match key.trim() {
                        "k" => {
                            declared_k = Some(value.parse::<u32>().map_err(|_| {
                                Error::Format(format!("bad k {value:?}")).at_line(line_no)
                            })?)
                        }
                        "method" => provenance.method = Some(value.to_string()),
                        "modulus" => {
                            provenance.modulus =
                                Some(value.parse().map_err(|e: Error| e.at_line(line_no))?)
                        }
                        "team-map" => provenance.team_map = Some(value.to_string()),
                        "multipliers" => {
                            let z = value
                                .split(',')
                                .map(|t| t.trim().parse::<u32>())
                                .collect::<std::result::Result<Vec<_>, _>>()
                                .map_err(|_| {
                                    Error::Format(format!("bad multipliers {value:?}"))
                                        .at_line(line_no)
                                })?;
                            provenance.multipliers = Some(z);
                        }
                        _ => {}
                    }
                }
                continue;
            }
            // Report columns relative to the raw line.
            let indent = raw.len() - raw.trim_start().len();
            let seeding = Seeding::parse(line).map_err(|e| match e {
                Error::SeedingParse { column, reason } => Error::SeedingParse {
                    column: column + indent,
                    reason,
                }
                .at_line(line_no),
                other => other.at_line(line_no),
            })?;
            if let Some(first) = seedings.first() {
                let first: &Seeding = first;
                if first.players() != seeding.players() {
                    return Err(Error::SizeMismatch {
                        left: first.players(),
                        right: seeding.players(),
                    }
                    .at_line(line_no));
                }
            }
            seedings.push(seeding);
        }
        let schedule = Schedule::new(seedings)?.with_provenance(provenance);
        if let Some(k) = declared_k {
            if k != schedule.rounds {
                return Err(Error::Format(format!(
                    "header declares k = {k} but seedings have {} rounds",
                    schedule.rounds
                )));
            }
        }
        Ok(schedule)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_checks() {
        assert_eq!(Schedule::new(vec![]), Err(Error::EmptySchedule));
        let a: Seeding = "0145-2367".parse().unwrap();
        let b: Seeding = "0123".parse().unwrap();
        assert!(matches!(
            Schedule::new(vec![a.clone(), b]),
            Err(Error::SizeMismatch { left: 8, right: 4 })
        ));
        let s = Schedule::new(vec![a; 7]).unwrap();
        assert!(s.is_skc_sized());
        assert_eq!(s.players(), 8);
    }

    #[test]
    fn parse_reports_line_and_column() {
        let text = "# k = 3\n0145-2367\n  0145-2337\n";
        match Schedule::parse(text) {
            Err(Error::Line { line, source }) => {
                assert_eq!(line, 3);
                assert!(matches!(*source, Error::SeedingParse { column: 10, .. }));
            }
            other => panic!("unexpected {other:?}"),
        }
        let mixed = "0145-2367\n0123\n";
        assert!(matches!(
            Schedule::parse(mixed),
            Err(Error::Line { line: 2, .. })
        ));
        assert!(matches!(
            Schedule::parse("# k = 2\n0145-2367\n"),
            Err(Error::Format(_))
        ));
        assert_eq!(Schedule::parse("# nothing\n\n"), Err(Error::EmptySchedule));
    }

    #[test]
    fn render_round_trips_with_metadata() {
        let s = Schedule::new(vec![
            "0145-2367".parse().unwrap(),
            "0426-5173".parse().unwrap(),
        ])
        .unwrap()
        .with_provenance(Provenance {
            method: Some("galois".into()),
            modulus: Some("X^3+X+1".parse().unwrap()),
            team_map: Some("paper8".into()),
            multipliers: Some(vec![1, 2]),
        });
        let text = s.render();
        assert!(text.contains("# modulus = 0xb"));
        assert_eq!(Schedule::parse(&text).unwrap(), s);
    }
}
