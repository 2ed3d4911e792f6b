//! The eight-player construction from the Fano plane.
//!
//! Player 0 sits outside the plane and players 1..=7 are its nodes. A node
//! `x` together with a line `ℓ` through it yields one seeding: 0 meets `x` in
//! round 1, the other two nodes of `ℓ` meet each other in round 1 within
//! player 0's half, and each of the two remaining lines through `x`
//! contributes its two non-`x` nodes as a first-round pair in the other half.
//! Choosing the node-line pairs as a system of distinct representatives gives
//! a stable competition of seven tournaments.

use std::fmt;
use std::str::FromStr;

use crate::bracket::{Player, Seeding};
use crate::error::{Error, Result};
use crate::schedule::{Provenance, Schedule};

pub const NODES: u32 = 7;

/// Three distinct nodes, stored ascending.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line([Player; 3]);

impl Line {
    pub fn new(a: Player, b: Player, c: Player) -> Result<Self> {
        let mut nodes = [a, b, c];
        nodes.sort_unstable();
        if nodes[0] == 0 || nodes[2] > NODES || nodes[0] == nodes[1] || nodes[1] == nodes[2] {
            return Err(Error::InvalidPlane(format!(
                "{{{a},{b},{c}}} is not three distinct nodes in 1..=7"
            )));
        }
        Ok(Line(nodes))
    }

    pub fn nodes(&self) -> [Player; 3] {
        self.0
    }

    pub fn contains(&self, x: Player) -> bool {
        self.0.contains(&x)
    }

    /// The two nodes other than `x`, ascending. `x` must lie on the line.
    fn others(&self, x: Player) -> [Player; 2] {
        let mut it = self.0.iter().copied().filter(|&y| y != x);
        [it.next().unwrap(), it.next().unwrap()]
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Line{self}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanoPlane {
    lines: [Line; 7],
}

impl FanoPlane {
    /// Checks the incidence axioms: every pair of nodes on exactly one line,
    /// every node on exactly three.
    pub fn new(lines: [Line; 7]) -> Result<Self> {
        for x in 1..=NODES {
            for y in x + 1..=NODES {
                let count = lines
                    .iter()
                    .filter(|l| l.contains(x) && l.contains(y))
                    .count();
                if count != 1 {
                    return Err(Error::InvalidPlane(format!(
                        "nodes {x} and {y} share {count} lines"
                    )));
                }
            }
            let through = lines.iter().filter(|l| l.contains(x)).count();
            if through != 3 {
                return Err(Error::InvalidPlane(format!(
                    "node {x} is on {through} lines"
                )));
            }
        }
        Ok(FanoPlane { lines })
    }

    /// The labelling whose lines are {1,4,5}, {2,4,6}, {1,2,3}, {3,5,6},
    /// {2,5,7}, {3,4,7} and {1,6,7}.
    pub fn canonical() -> Self {
        let l = |a, b, c| Line::new(a, b, c).unwrap();
        FanoPlane::new([
            l(1, 4, 5),
            l(2, 4, 6),
            l(1, 2, 3),
            l(3, 5, 6),
            l(2, 5, 7),
            l(3, 4, 7),
            l(1, 6, 7),
        ])
        .expect("canonical plane satisfies the axioms")
    }

    pub fn lines(&self) -> &[Line; 7] {
        &self.lines
    }

    pub fn has_line(&self, line: &Line) -> bool {
        self.lines.contains(line)
    }

    /// Lines through `x`, ascending.
    pub fn lines_through(&self, x: Player) -> Vec<Line> {
        let mut out: Vec<Line> = self
            .lines
            .iter()
            .copied()
            .filter(|l| l.contains(x))
            .collect();
        out.sort_unstable();
        out
    }

    /// The unique line through two distinct nodes.
    pub fn line_through(&self, x: Player, y: Player) -> Option<Line> {
        if x == y {
            return None;
        }
        self.lines
            .iter()
            .copied()
            .find(|l| l.contains(x) && l.contains(y))
    }

    /// The seeding arising from node `x` and line `line`.
    ///
    /// Free choices (order inside a first-round pair, which remaining line
    /// fills positions 4-5) go to the smaller player first.
    pub fn seeding_from_pair(&self, x: Player, line: &Line) -> Result<Seeding> {
        if !self.has_line(line) {
            return Err(Error::InvalidAssignment(format!(
                "{line} is not a line of the plane"
            )));
        }
        if !line.contains(x) {
            return Err(Error::NodeNotOnLine {
                node: x,
                line: line.to_string(),
            });
        }
        let [a, b] = line.others(x);
        let mut rest: Vec<[Player; 2]> = self
            .lines_through(x)
            .into_iter()
            .filter(|l| l != line)
            .map(|l| l.others(x))
            .collect();
        rest.sort_unstable();
        let mut order = vec![0, x, a, b];
        for pair in rest {
            order.extend(pair);
        }
        Seeding::new(order)
    }

    /// Every bijection between nodes and lines with each node on its line,
    /// listed with nodes in ascending order.
    pub fn enumerate_assignments(&self) -> Vec<NodeLineAssignment> {
        fn extend(
            plane: &FanoPlane,
            node: Player,
            used: &mut [bool; 7],
            current: &mut Vec<(Player, Line)>,
            out: &mut Vec<NodeLineAssignment>,
        ) {
            if node > NODES {
                out.push(NodeLineAssignment {
                    pairs: current.clone(),
                });
                return;
            }
            for (i, line) in plane.lines.iter().enumerate() {
                if !used[i] && line.contains(node) {
                    used[i] = true;
                    current.push((node, *line));
                    extend(plane, node + 1, used, current, out);
                    current.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        extend(self, 1, &mut [false; 7], &mut Vec::new(), &mut out);
        out
    }

    /// Seven tournaments, one per node-line pair, in assignment order.
    pub fn build_skc(&self, assignment: &NodeLineAssignment) -> Result<Schedule> {
        assignment.validate(self)?;
        let seedings = assignment
            .pairs
            .iter()
            .map(|(x, l)| self.seeding_from_pair(*x, l))
            .collect::<Result<Vec<_>>>()?;
        Ok(Schedule::new(seedings)?.with_provenance(Provenance {
            method: Some("fano".into()),
            ..Provenance::default()
        }))
    }
}

/// An ordered list of (node, line) pairs, one tournament each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeLineAssignment {
    pairs: Vec<(Player, Line)>,
}

impl NodeLineAssignment {
    pub fn new(pairs: Vec<(Player, Line)>) -> Self {
        NodeLineAssignment { pairs }
    }

    /// Nodes 1, 4, 2, 3, 5, 7, 6 on the canonical plane's lines in listed order.
    pub fn standard() -> Self {
        let plane = FanoPlane::canonical();
        let nodes = [1, 4, 2, 3, 5, 7, 6];
        NodeLineAssignment {
            pairs: nodes
                .iter()
                .copied()
                .zip(plane.lines.iter().copied())
                .collect(),
        }
    }

    pub fn pairs(&self) -> &[(Player, Line)] {
        &self.pairs
    }

    /// Every node once, every line of `plane` once, each node on its line.
    pub fn validate(&self, plane: &FanoPlane) -> Result<()> {
        if self.pairs.len() != NODES as usize {
            return Err(Error::InvalidAssignment(format!(
                "expected 7 pairs, found {}",
                self.pairs.len()
            )));
        }
        let mut nodes_seen = [false; 8];
        let mut lines_seen = [false; 7];
        for (x, line) in &self.pairs {
            if !(1..=NODES).contains(x) {
                return Err(Error::InvalidAssignment(format!("{x} is not a node")));
            }
            if std::mem::replace(&mut nodes_seen[*x as usize], true) {
                return Err(Error::InvalidAssignment(format!("node {x} is used twice")));
            }
            let idx = plane.lines.iter().position(|l| l == line).ok_or_else(|| {
                Error::InvalidAssignment(format!("{line} is not a line of the plane"))
            })?;
            if std::mem::replace(&mut lines_seen[idx], true) {
                return Err(Error::InvalidAssignment(format!(
                    "line {line} is used twice"
                )));
            }
            if !line.contains(*x) {
                return Err(Error::NodeNotOnLine {
                    node: *x,
                    line: line.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Seven `node: a,b,c` lines.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for NodeLineAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, l) in &self.pairs {
            let [a, b, c] = l.nodes();
            writeln!(f, "{x}: {a},{b},{c}")?;
        }
        Ok(())
    }
}

impl FromStr for NodeLineAssignment {
    type Err = Error;

    /// Reads `node: a,b,c` lines; blank lines and `#` comments are skipped.
    fn from_str(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad =
                || Error::Format(format!("expected `node: a,b,c`, found {line:?}")).at_line(i + 1);
            let (node, rest) = line.split_once(':').ok_or_else(bad)?;
            let node: Player = node.trim().parse().map_err(|_| bad())?;
            let nodes = rest
                .split(',')
                .map(|t| t.trim().parse::<Player>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad())?;
            let [a, b, c] = nodes[..] else {
                return Err(bad());
            };
            let l = Line::new(a, b, c).map_err(|e| e.at_line(i + 1))?;
            pairs.push((node, l));
        }
        Ok(NodeLineAssignment { pairs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(a: Player, b: Player, c: Player) -> Line {
        Line::new(a, b, c).unwrap()
    }

    #[test]
    fn canonical_plane_incidence() {
        let plane = FanoPlane::canonical();
        assert_eq!(plane.line_through(4, 5), Some(line(1, 4, 5)));
        assert_eq!(
            plane.lines_through(1),
            vec![line(1, 2, 3), line(1, 4, 5), line(1, 6, 7)]
        );
        let mut covered = 0;
        for x in 1..=7 {
            for y in x + 1..=7 {
                assert_eq!(
                    plane
                        .lines()
                        .iter()
                        .filter(|l| l.contains(x) && l.contains(y))
                        .count(),
                    1
                );
                covered += 1;
            }
        }
        assert_eq!(covered, 21);
    }

    #[test]
    fn invalid_planes() {
        let mut lines = *FanoPlane::canonical().lines();
        lines[0] = line(1, 4, 6);
        assert!(matches!(FanoPlane::new(lines), Err(Error::InvalidPlane(_))));
        assert!(Line::new(0, 1, 2).is_err());
        assert!(Line::new(1, 1, 2).is_err());
        assert!(Line::new(1, 2, 8).is_err());
    }

    #[test]
    fn seedings_from_pairs() {
        let plane = FanoPlane::canonical();
        assert_eq!(
            plane
                .seeding_from_pair(1, &line(1, 4, 5))
                .unwrap()
                .to_string(),
            "0145-2367"
        );
        assert_eq!(
            plane
                .seeding_from_pair(4, &line(2, 4, 6))
                .unwrap()
                .to_string(),
            "0426-1537"
        );
        assert!(matches!(
            plane.seeding_from_pair(3, &line(1, 4, 5)),
            Err(Error::NodeNotOnLine { node: 3, .. })
        ));
        assert!(plane.seeding_from_pair(1, &line(1, 2, 4)).is_err());
    }

    #[test]
    fn node_line_properties_for_every_pair() {
        let plane = FanoPlane::canonical();
        let mut checked = 0;
        for l in plane.lines() {
            for x in l.nodes() {
                let t = plane.seeding_from_pair(x, l).unwrap();
                for y in 1..=7 {
                    let r = t.meeting_round(0, y).unwrap();
                    assert_eq!(r == 1, y == x);
                    assert_eq!(r == 2, l.contains(y) && y != x);
                    assert_eq!(r == 3, !l.contains(y));
                }
                for a in 1..=7 {
                    for b in a + 1..=7 {
                        let through = plane.line_through(a, b).unwrap();
                        let y = through
                            .nodes()
                            .into_iter()
                            .find(|&y| y != a && y != b)
                            .unwrap();
                        assert_eq!(
                            t.meeting_round(a, b).unwrap(),
                            t.meeting_round(0, y).unwrap()
                        );
                    }
                }
                checked += 1;
            }
        }
        assert_eq!(checked, 21);
    }

    #[test]
    fn assignment_validation() {
        let plane = FanoPlane::canonical();
        NodeLineAssignment::standard().validate(&plane).unwrap();

        let mut pairs = NodeLineAssignment::standard().pairs().to_vec();
        pairs[1].1 = pairs[0].1;
        pairs[1].0 = 5;
        pairs[6].0 = 4;
        let reused = NodeLineAssignment::new(pairs);
        assert!(matches!(
            plane.build_skc(&reused),
            Err(Error::InvalidAssignment(_))
        ));

        let mut pairs = NodeLineAssignment::standard().pairs().to_vec();
        pairs.swap(0, 1);
        pairs[0].0 = 1;
        pairs[1].0 = 4;
        assert!(matches!(
            plane.build_skc(&NodeLineAssignment::new(pairs)),
            Err(Error::NodeNotOnLine { .. })
        ));
        assert!(plane.build_skc(&NodeLineAssignment::new(vec![])).is_err());
    }

    /// Permanent of the node-line incidence matrix by summing over all 7!
    /// permutations.
    fn incidence_permanent(plane: &FanoPlane) -> usize {
        fn permutations(items: Vec<usize>) -> Vec<Vec<usize>> {
            if items.is_empty() {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for i in 0..items.len() {
                let mut rest = items.clone();
                let head = rest.remove(i);
                for mut tail in permutations(rest) {
                    tail.insert(0, head);
                    out.push(tail);
                }
            }
            out
        }
        permutations((0..7).collect())
            .into_iter()
            .filter(|p| {
                p.iter()
                    .enumerate()
                    .all(|(node, &l)| plane.lines()[l].contains(node as Player + 1))
            })
            .count()
    }

    #[test]
    fn enumeration_matches_permanent() {
        let plane = FanoPlane::canonical();
        let all = plane.enumerate_assignments();
        assert_eq!(all.len(), incidence_permanent(&plane));
        assert_eq!(all.len(), 24);
        for a in &all {
            a.validate(&plane).unwrap();
        }
        let mut standard = NodeLineAssignment::standard().pairs().to_vec();
        standard.sort_unstable();
        assert!(all.iter().any(|a| a.pairs() == standard.as_slice()));
    }

    #[test]
    fn assignment_text_round_trip() {
        let a = NodeLineAssignment::standard();
        let text = a.render();
        assert!(text.starts_with("1: 1,4,5\n4: 2,4,6\n"));
        assert_eq!(text.parse::<NodeLineAssignment>().unwrap(), a);
        assert!("1 1,4,5".parse::<NodeLineAssignment>().is_err());
        assert!("1: 1,4".parse::<NodeLineAssignment>().is_err());
    }
}
