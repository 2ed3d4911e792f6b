//! Brute-force stability checking.
//!
//! The checker knows nothing about how a schedule was built. It counts, for
//! every unordered pair of players and every round, the tournaments in which
//! the pair can meet in that round, and then compares counts across pairs.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bracket::{leaf_round, Player, Seeding};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::schedule::{Provenance, Schedule};

/// Witnesses kept per round. Totals are always exact.
pub const MAX_WITNESSES_PER_ROUND: usize = 8;

/// A pair whose count in `round` differs from the expected common count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub round: u32,
    pub pair: (Player, Player),
    pub observed: u32,
    pub expected: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    rounds: u32,
    players: usize,
    tournaments: usize,
    /// Pair-major: pairs `(x, y)` with `x < y` in lexicographic order, then
    /// one count per round.
    counts: Vec<u32>,
    c_values: Vec<Option<u32>>,
    violations: Vec<Violation>,
    violation_totals: Vec<usize>,
}

impl StabilityReport {
    pub fn rounds(&self) -> u32 {
        self.rounds
    }

    pub fn players(&self) -> usize {
        self.players
    }

    pub fn tournaments(&self) -> usize {
        self.tournaments
    }

    pub fn is_skc_sized(&self) -> bool {
        self.tournaments == self.players - 1
    }

    /// Stable in every round.
    pub fn is_stable(&self) -> bool {
        self.c_values.iter().all(Option::is_some)
    }

    /// Rounds (1-based) in which all pairs share a count.
    pub fn stable_rounds(&self) -> Vec<u32> {
        (1..=self.rounds)
            .filter(|&i| self.c_values[i as usize - 1].is_some())
            .collect()
    }

    /// Common count per round, `None` where the round is unstable.
    pub fn c_values(&self) -> &[Option<u32>] {
        &self.c_values
    }

    /// n-1 tournaments with c_i = 2^(i-1) in every round.
    pub fn has_skc_counts(&self) -> bool {
        self.is_skc_sized()
            && self
                .c_values
                .iter()
                .enumerate()
                .all(|(i, c)| *c == Some(1 << i))
    }

    /// Up to [`MAX_WITNESSES_PER_ROUND`] violations per round.
    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// Number of violating pairs in each round.
    pub fn violation_totals(&self) -> &[usize] {
        &self.violation_totals
    }

    fn pair_index(&self, x: Player, y: Player) -> usize {
        let (x, y) = (x.min(y) as usize, x.max(y) as usize);
        let n = self.players;
        x * (2 * n - x - 1) / 2 + (y - x - 1)
    }

    /// Counts over rounds `1..=k` for one pair.
    pub fn pair_counts(&self, x: Player, y: Player) -> Result<&[u32]> {
        for p in [x, y] {
            if p as usize >= self.players {
                return Err(Error::UnknownPlayer {
                    player: p,
                    players: self.players,
                });
            }
        }
        if x == y {
            return Err(Error::SamePlayer);
        }
        let k = self.rounds as usize;
        let i = self.pair_index(x, y) * k;
        Ok(&self.counts[i..i + k])
    }

    pub fn count(&self, x: Player, y: Player, round: u32) -> Result<u32> {
        if round == 0 || round > self.rounds {
            return Err(Error::RoundOutOfRange {
                round,
                rounds: self.rounds,
            });
        }
        Ok(self.pair_counts(x, y)?[round as usize - 1])
    }

    /// `(pair, counts)` for every unordered pair in lexicographic order.
    pub fn iter_pairs(&self) -> impl Iterator<Item = ((Player, Player), &[u32])> + '_ {
        let n = self.players as Player;
        let pairs = (0..n).flat_map(move |x| (x + 1..n).map(move |y| (x, y)));
        pairs.zip(self.counts.chunks(self.rounds as usize))
    }

    /// Short human-readable verdict, one line when stable.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        if self.is_stable() {
            let c: Vec<String> = self
                .c_values
                .iter()
                .map(|c| c.unwrap().to_string())
                .collect();
            write!(out, "stable, c = {}", c.join(",")).unwrap();
            if self.is_skc_sized() && !self.has_skc_counts() {
                // cannot happen for n-1 tournaments, but say so if it does
                out.push_str(" (counts differ from 2^(i-1))");
            }
            out.push('\n');
            return out;
        }
        writeln!(out, "unstable").unwrap();
        for i in 1..=self.rounds {
            let total = self.violation_totals[i as usize - 1];
            match self.c_values[i as usize - 1] {
                Some(c) => writeln!(out, "  round {i}: stable, c = {c}").unwrap(),
                None => {
                    writeln!(out, "  round {i}: {total} pair(s) off the expected count").unwrap();
                    for v in self.violations.iter().filter(|v| v.round == i) {
                        writeln!(
                            out,
                            "    pair ({},{}): count {} (expected {})",
                            v.pair.0, v.pair.1, v.observed, v.expected
                        )
                        .unwrap();
                    }
                }
            }
        }
        out
    }

    /// Structured form for downstream tools. `counts[j]` holds the per-round
    /// counts of `pairs[j]`.
    pub fn to_document(&self) -> ReportDocument {
        ReportDocument {
            players: self.players,
            rounds: self.rounds,
            tournaments: self.tournaments,
            stable: self.is_stable(),
            skc_sized: self.is_skc_sized(),
            skc_counts: self.has_skc_counts(),
            stable_rounds: self.stable_rounds(),
            c_values: self.c_values.clone(),
            violation_totals: self.violation_totals.clone(),
            violations: self.violations.clone(),
            pairs: self.iter_pairs().map(|(p, _)| [p.0, p.1]).collect(),
            counts: self.iter_pairs().map(|(_, c)| c.to_vec()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub players: usize,
    pub rounds: u32,
    pub tournaments: usize,
    pub stable: bool,
    pub skc_sized: bool,
    pub skc_counts: bool,
    pub stable_rounds: Vec<u32>,
    pub c_values: Vec<Option<u32>>,
    pub violation_totals: Vec<usize>,
    pub violations: Vec<Violation>,
    pub pairs: Vec<[Player; 2]>,
    pub counts: Vec<Vec<u32>>,
}

pub fn check_stability(schedule: &Schedule) -> Result<StabilityReport> {
    check_stability_with(schedule, Execution::default())
}

/// Counts every pair in every tournament. Work is split by the first player
/// of each pair.
pub fn check_stability_with(schedule: &Schedule, exec: Execution) -> Result<StabilityReport> {
    if schedule.is_empty() {
        return Err(Error::EmptySchedule);
    }
    let n = schedule.players();
    let k = schedule.rounds() as usize;
    if let Some(bad) = schedule.seedings().iter().find(|s| s.players() != n) {
        return Err(Error::SizeMismatch {
            left: n,
            right: bad.players(),
        });
    }
    let positions: Vec<&[u32]> = schedule.seedings().iter().map(Seeding::positions).collect();

    let rows = exec.map_range(n, |x| {
        let mut row = vec![0u32; (n - 1 - x) * k];
        for pos in &positions {
            let px = pos[x];
            for (j, &py) in pos[x + 1..].iter().enumerate() {
                row[j * k + leaf_round(px, py) as usize - 1] += 1;
            }
        }
        row
    });
    let counts = rows.concat();
    Ok(summarise(schedule, counts))
}

fn summarise(schedule: &Schedule, counts: Vec<u32>) -> StabilityReport {
    let n = schedule.players();
    let k = schedule.rounds() as usize;
    let tournaments = schedule.len();
    let skc_sized = tournaments == n - 1;

    let mut c_values = Vec::with_capacity(k);
    let mut violations = Vec::new();
    let mut violation_totals = Vec::with_capacity(k);
    for r in 0..k {
        let column = counts.iter().skip(r).step_by(k);
        let expected = if skc_sized {
            1u32 << r
        } else {
            mode(column.clone())
        };
        let first = counts[r];
        let uniform = column.clone().all(|&c| c == first);
        c_values.push(uniform.then_some(first));

        let mut total = 0;
        let pairs = (0..n as Player).flat_map(|x| (x + 1..n as Player).map(move |y| (x, y)));
        for (pair, &observed) in pairs.zip(column) {
            if observed != expected {
                total += 1;
                if total <= MAX_WITNESSES_PER_ROUND {
                    violations.push(Violation {
                        round: r as u32 + 1,
                        pair,
                        observed,
                        expected,
                    });
                }
            }
        }
        violation_totals.push(total);
    }
    StabilityReport {
        rounds: k as u32,
        players: n,
        tournaments,
        counts,
        c_values,
        violations,
        violation_totals,
    }
}

/// Most frequent value, smallest on ties.
fn mode<'a, I: Iterator<Item = &'a u32>>(values: I) -> u32 {
    let mut freq: HashMap<u32, usize> = HashMap::new();
    for &v in values {
        *freq.entry(v).or_default() += 1;
    }
    freq.into_iter()
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
        .map(|(v, _)| v)
        .unwrap_or(0)
}

/// Verifies many schedules, one worker per schedule.
pub fn check_many(schedules: &[Schedule], exec: Execution) -> Vec<Result<StabilityReport>> {
    exec.map_slice(schedules, |s| {
        check_stability_with(s, Execution::Sequential)
    })
}

/// n-1 uniformly shuffled seedings drawn from ChaCha8 seeded with `seed`.
pub fn random_schedule(rounds: u32, seed: u64) -> Result<Schedule> {
    if !(1..=16).contains(&rounds) {
        return Err(Error::RoundsOutOfRange(rounds));
    }
    let n = 1u32 << rounds;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seedings = (1..n)
        .map(|_| {
            let mut order: Vec<Player> = (0..n).collect();
            order.shuffle(&mut rng);
            Seeding::new(order)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Schedule::new(seedings)?.with_provenance(Provenance {
        method: Some(format!("random seed={seed}")),
        ..Provenance::default()
    }))
}

/// A bijection `m` with `a[i]` and `b[m[i]]` the same tournament for all `i`,
/// if one exists. Same-tournament is an equivalence, so matching within
/// classes of identical round profiles is exact.
pub fn compare_schedules(a: &Schedule, b: &Schedule) -> Result<Option<Vec<usize>>> {
    compare_schedules_with(a, b, Execution::default())
}

pub fn compare_schedules_with(
    a: &Schedule,
    b: &Schedule,
    exec: Execution,
) -> Result<Option<Vec<usize>>> {
    if a.players() != b.players() {
        return Err(Error::SizeMismatch {
            left: a.players(),
            right: b.players(),
        });
    }
    if a.len() != b.len() {
        return Ok(None);
    }
    let profiles_a = exec.map_slice(a.seedings(), Seeding::round_profile);
    let profiles_b = exec.map_slice(b.seedings(), Seeding::round_profile);
    let mut classes: HashMap<Vec<u8>, VecDeque<usize>> = HashMap::new();
    for (j, p) in profiles_b.into_iter().enumerate() {
        classes.entry(p).or_default().push_back(j);
    }
    let mut matching = Vec::with_capacity(a.len());
    for p in &profiles_a {
        match classes.get_mut(p).and_then(VecDeque::pop_front) {
            Some(j) => matching.push(j),
            None => return Ok(None),
        }
    }
    Ok(Some(matching))
}
