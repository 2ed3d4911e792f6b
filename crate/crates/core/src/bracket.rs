//! Balanced knockout tournaments, represented by their seedings.
//!
//! Leaf positions are numbered `0..n` left to right. Two leaves `p` and `p'`
//! first share a subtree in round `1 + msb(p ^ p')`, which is therefore the
//! round in which the players seeded there can meet.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Player = u32;

/// Character alphabet for compact seedings (n <= 32).
pub const ALPHABET: &[u8; 32] = b"0123456789abcdefghijklmnopqrstuv";

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Seeding {
    rounds: u32,
    order: Vec<Player>,
    position: Vec<u32>,
}

impl Seeding {
    /// `order[p]` is the player at leaf `p`. The length must be a power of
    /// two no smaller than 2 and the entries a permutation of `0..len`.
    pub fn new(order: Vec<Player>) -> Result<Self> {
        let n = order.len();
        if n < 2 || !n.is_power_of_two() || n > u32::MAX as usize {
            return Err(Error::SeedingSize(n));
        }
        let mut position = vec![u32::MAX; n];
        for (p, &x) in order.iter().enumerate() {
            let slot = position.get_mut(x as usize).ok_or(Error::UnknownPlayer {
                player: x,
                players: n,
            })?;
            if *slot != u32::MAX {
                return Err(Error::DuplicatePlayer { player: x });
            }
            *slot = p as u32;
        }
        Ok(Seeding {
            rounds: n.trailing_zeros(),
            order,
            position,
        })
    }

    pub fn identity(rounds: u32) -> Self {
        Seeding::new((0..1u32 << rounds).collect()).expect("identity is a permutation")
    }

    /// Number of rounds k.
    pub fn rounds(&self) -> u32 {
        self.rounds
    }

    pub fn players(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[Player] {
        &self.order
    }

    /// Leaf position of every player, indexed by player.
    pub fn positions(&self) -> &[u32] {
        &self.position
    }

    fn check_player(&self, x: Player) -> Result<()> {
        if (x as usize) < self.order.len() {
            Ok(())
        } else {
            Err(Error::UnknownPlayer {
                player: x,
                players: self.order.len(),
            })
        }
    }

    /// v_T(x, x'): the round in which `x` and `other` can meet.
    pub fn meeting_round(&self, x: Player, other: Player) -> Result<u32> {
        self.check_player(x)?;
        self.check_player(other)?;
        if x == other {
            return Err(Error::SamePlayer);
        }
        Ok(self.round_unchecked(x, other))
    }

    #[inline]
    pub(crate) fn round_unchecked(&self, x: Player, other: Player) -> u32 {
        leaf_round(self.position[x as usize], self.position[other as usize])
    }

    /// Everyone `x` can meet in round `round`, ascending. Always 2^(round-1)
    /// players: the other half of `x`'s round-`round` subtree.
    pub fn round_opponents(&self, x: Player, round: u32) -> Result<Vec<Player>> {
        self.check_player(x)?;
        if round == 0 || round > self.rounds {
            return Err(Error::RoundOutOfRange {
                round,
                rounds: self.rounds,
            });
        }
        let half = 1usize << (round - 1);
        let start = (self.position[x as usize] as usize ^ half) & !(half - 1);
        let mut out = self.order[start..start + half].to_vec();
        out.sort_unstable();
        Ok(out)
    }

    /// Applies `perm` (with `perm[x]` the new label of `x`) to every leaf.
    pub fn relabel(&self, perm: &[Player]) -> Result<Seeding> {
        let n = self.order.len();
        if perm.len() != n {
            return Err(Error::NotBijective(n));
        }
        let order = self.order.iter().map(|&x| perm[x as usize]).collect();
        Seeding::new(order).map_err(|_| Error::NotBijective(n))
    }

    /// True iff every pair of players meets in the same round in both.
    pub fn same_tournament(&self, other: &Seeding) -> Result<bool> {
        if self.players() != other.players() {
            return Err(Error::SizeMismatch {
                left: self.players(),
                right: other.players(),
            });
        }
        let n = self.players() as Player;
        for x in 0..n {
            for y in x + 1..n {
                if self.round_unchecked(x, y) != other.round_unchecked(x, y) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Meeting round of every pair `x < y`, in lexicographic pair order. Two
    /// seedings are the same tournament exactly when their profiles agree.
    pub fn round_profile(&self) -> Vec<u8> {
        let n = self.players() as Player;
        let mut out = Vec::with_capacity(self.players() * (self.players() - 1) / 2);
        for x in 0..n {
            for y in x + 1..n {
                out.push(self.round_unchecked(x, y) as u8);
            }
        }
        out
    }

    /// Parses a single seeding. Character form (`0145-2367`) is used when the
    /// text has no commas; hyphens are ignored there. Otherwise the text is a
    /// comma-separated list of decimal players.
    pub fn parse(text: &str) -> Result<Seeding> {
        let text = text.trim();
        let order = if text.contains(',') {
            parse_decimal(text)?
        } else {
            parse_chars(text)?
        };
        // Re-run validation so that positions can be reported.
        match Seeding::new(order.iter().map(|&(x, _)| x).collect()) {
            Ok(s) => Ok(s),
            Err(Error::DuplicatePlayer { player }) => {
                let column = order
                    .iter()
                    .filter(|&&(x, _)| x == player)
                    .nth(1)
                    .unwrap()
                    .1;
                Err(Error::SeedingParse {
                    column,
                    reason: format!(
                        "player {} appears twice",
                        render_player(player, order.len())
                    ),
                })
            }
            Err(Error::UnknownPlayer { player, players }) => {
                let column = order.iter().find(|&&(x, _)| x == player).unwrap().1;
                Err(Error::SeedingParse {
                    column,
                    reason: format!("player {player} is out of range for {players} players"),
                })
            }
            Err(e) => Err(Error::SeedingParse {
                column: 1,
                reason: e.to_string(),
            }),
        }
    }
}

#[inline]
pub(crate) fn leaf_round(p: u32, q: u32) -> u32 {
    32 - (p ^ q).leading_zeros()
}

fn render_player(x: Player, n: usize) -> String {
    if n <= ALPHABET.len() {
        (ALPHABET[x as usize] as char).to_string()
    } else {
        x.to_string()
    }
}

/// Players paired with their 1-based column in the input.
fn parse_chars(text: &str) -> Result<Vec<(Player, usize)>> {
    let mut out = Vec::new();
    for (i, c) in text.chars().enumerate() {
        if c == '-' {
            continue;
        }
        let x = ALPHABET
            .iter()
            .position(|&a| a as char == c)
            .ok_or_else(|| Error::SeedingParse {
                column: i + 1,
                reason: format!("unexpected character {c:?}"),
            })?;
        out.push((x as Player, i + 1));
    }
    Ok(out)
}

fn parse_decimal(text: &str) -> Result<Vec<(Player, usize)>> {
    let mut out = Vec::new();
    let mut column = 1;
    for token in text.split(',') {
        let lead = token.len() - token.trim_start().len();
        let x = token
            .trim()
            .parse::<Player>()
            .map_err(|_| Error::SeedingParse {
                column: column + lead,
                reason: format!("expected a player number, found {:?}", token.trim()),
            })?;
        out.push((x, column + lead));
        column += token.chars().count() + 1;
    }
    Ok(out)
}

impl fmt::Display for Seeding {
    /// Character form with a hyphen after every four players for up to 32
    /// players, comma-separated decimals beyond that.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.players() <= ALPHABET.len() {
            for (i, &x) in self.order.iter().enumerate() {
                if i > 0 && i % 4 == 0 {
                    f.write_str("-")?;
                }
                write!(f, "{}", ALPHABET[x as usize] as char)?;
            }
            Ok(())
        } else {
            let tokens: Vec<String> = self.order.iter().map(|x| x.to_string()).collect();
            f.write_str(&tokens.join(","))
        }
    }
}

impl fmt::Debug for Seeding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Seeding({self})")
    }
}

impl FromStr for Seeding {
    type Err = Error;
    fn from_str(s: &str) -> Result<Seeding> {
        Seeding::parse(s)
    }
}
