//! Stable competitions for any n = 2^k from the field GF(2^k).
//!
//! Players are field elements. The base tournament seeds element `p` at
//! leaf `p`, so two players meet in round `1 + d(x - y)`. Multiplying every
//! player by a nonzero `z` gives tournament `T(z)`, and the family over all
//! nonzero `z` is stable.

use std::fmt;

use crate::bracket::{Player, Seeding};
use crate::error::{Error, Result};
use crate::gf2k::{FieldCtx, FieldElem};
use crate::schedule::{Provenance, Schedule};

/// Bijection from field elements (by bit pattern) to player labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TeamMap {
    name: Option<String>,
    to_player: Vec<Player>,
}

impl TeamMap {
    pub fn identity(k: u32) -> Self {
        TeamMap {
            name: Some("identity".into()),
            to_player: (0..1u32 << k).collect(),
        }
    }

    /// 0, 1, α, α+1, α², α²+1, α²+α, α²+α+1 → 0, 1, 4, 5, 2, 3, 6, 7.
    pub fn paper8() -> Self {
        TeamMap {
            name: Some("paper8".into()),
            to_player: vec![0, 1, 4, 5, 2, 3, 6, 7],
        }
    }

    pub fn from_players(to_player: Vec<Player>) -> Result<Self> {
        let n = to_player.len();
        let mut seen = vec![false; n];
        for &p in &to_player {
            match seen.get_mut(p as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(Error::NotBijective(n)),
            }
        }
        Ok(TeamMap {
            name: None,
            to_player,
        })
    }

    /// Preset by name: `identity` (any k) or `paper8` (k = 3 only).
    pub fn named(name: &str, k: u32) -> Result<Self> {
        match name {
            "identity" => Ok(TeamMap::identity(k)),
            "paper8" if k == 3 => Ok(TeamMap::paper8()),
            "paper8" => Err(Error::Format(format!(
                "team map paper8 needs 8 players, not {}",
                1u64 << k
            ))),
            other => Err(Error::Format(format!("unknown team map {other:?}"))),
        }
    }

    pub fn len(&self) -> usize {
        self.to_player.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_player.is_empty()
    }

    pub fn player(&self, x: &FieldElem) -> Player {
        self.to_player[x.bits() as usize]
    }

    /// Label recorded in schedule headers: the preset name or the explicit list.
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for TeamMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => f.write_str(n),
            None => {
                let p: Vec<String> = self.to_player.iter().map(|p| p.to_string()).collect();
                f.write_str(&p.join(","))
            }
        }
    }
}

fn check_map(ctx: &FieldCtx, map: &TeamMap) -> Result<()> {
    if map.len() != ctx.order() {
        return Err(Error::SizeMismatch {
            left: ctx.order(),
            right: map.len(),
        });
    }
    Ok(())
}

/// Element with bits `p` at leaf `p`, identity labels.
pub fn base_tournament(ctx: &FieldCtx) -> Seeding {
    let order = ctx.all_elements().iter().map(|x| x.bits()).collect();
    Seeding::new(order).expect("field elements form a permutation")
}

/// T(z): leaf `p` holds `map(z · e_p)` where `e_p` is the `p`-th element.
pub fn tournament_z(ctx: &FieldCtx, z: &FieldElem, map: &TeamMap) -> Result<Seeding> {
    if z.ctx() != ctx {
        return Err(Error::ContextMismatch);
    }
    if z.is_zero() {
        return Err(Error::ZeroMultiplier);
    }
    check_map(ctx, map)?;
    let order = ctx
        .all_elements()
        .iter()
        .map(|x| z.mul(x).map(|zx| map.player(&zx)))
        .collect::<Result<Vec<_>>>()?;
    Seeding::new(order)
}

/// The 2^k - 1 tournaments T(z), nonzero `z` ascending.
pub fn build_galois_skc(ctx: &FieldCtx, map: &TeamMap) -> Result<Schedule> {
    check_map(ctx, map)?;
    let zs = ctx.nonzero_elements();
    let seedings = zs
        .iter()
        .map(|z| tournament_z(ctx, z, map))
        .collect::<Result<Vec<_>>>()?;
    Ok(Schedule::new(seedings)?.with_provenance(Provenance {
        method: Some("galois".into()),
        modulus: Some(ctx.modulus()),
        team_map: Some(map.label()),
        multipliers: Some(zs.iter().map(|z| z.bits()).collect()),
    }))
}

/// Multiplication table over all elements as bit patterns, rows and columns
/// in ascending bit order.
pub fn multiplication_table(ctx: &FieldCtx) -> Vec<Vec<u32>> {
    let elems = ctx.all_elements();
    elems
        .iter()
        .map(|a| elems.iter().map(|b| a.mul(b).unwrap().bits()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8() -> FieldCtx {
        FieldCtx::new("0xB".parse().unwrap()).unwrap()
    }

    #[test]
    fn base_tournament_layout() {
        let f = gf8();
        let t = base_tournament(&f);
        assert_eq!(t.order(), &[0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(t.meeting_round(0, 1).unwrap(), 1);
        // 1 and α²+α differ by α²+α+1, degree 2
        assert_eq!(t.meeting_round(1, 6).unwrap(), 3);
    }

    #[test]
    fn tournaments_with_reference_labels() {
        let f = gf8();
        let map = TeamMap::paper8();
        let t = |z| {
            tournament_z(&f, &f.elem(z).unwrap(), &map)
                .unwrap()
                .to_string()
        };
        assert_eq!(t(1), "0145-2367");
        assert_eq!(t(2), "0426-5173");
        assert_eq!(t(7), "0734-1625");
        assert_eq!(
            tournament_z(&f, &f.zero(), &map),
            Err(Error::ZeroMultiplier)
        );
    }

    #[test]
    fn map_size_must_match_field() {
        let f = gf8();
        assert!(build_galois_skc(&f, &TeamMap::identity(4)).is_err());
        assert!(TeamMap::named("paper8", 4).is_err());
        assert!(TeamMap::named("bogus", 3).is_err());
        assert_eq!(
            TeamMap::from_players(vec![0, 1, 1, 2]),
            Err(Error::NotBijective(4))
        );
        assert_eq!(
            TeamMap::from_players(vec![3, 1, 0, 2]).unwrap().to_string(),
            "3,1,0,2"
        );
    }

    #[test]
    fn four_player_schedule_counts() {
        let f = FieldCtx::with_default_modulus(2).unwrap();
        let s = build_galois_skc(&f, &TeamMap::identity(2)).unwrap();
        assert_eq!(s.len(), 3);
        // every pair: one round-1 meeting and two final meetings
        for x in 0..4 {
            for y in x + 1..4 {
                let r1 = s
                    .seedings()
                    .iter()
                    .filter(|t| t.meeting_round(x, y).unwrap() == 1)
                    .count();
                let r2 = s
                    .seedings()
                    .iter()
                    .filter(|t| t.meeting_round(x, y).unwrap() == 2)
                    .count();
                assert_eq!((r1, r2), (1, 2));
            }
        }
    }

    #[test]
    fn translation_and_degree_identities() {
        for k in 2..=5 {
            let f = FieldCtx::with_default_modulus(k).unwrap();
            let map = TeamMap::identity(k);
            for z in f.nonzero_elements() {
                let t = tournament_z(&f, &z, &map).unwrap();
                let zinv = z.inv().unwrap();
                for x in f.all_elements() {
                    for y in f.all_elements() {
                        if x == y {
                            continue;
                        }
                        let diff = x.add(&y).unwrap();
                        let v = t.meeting_round(x.bits(), y.bits()).unwrap();
                        assert_eq!(v, t.meeting_round(0, diff.bits()).unwrap());
                        assert_eq!(v, 1 + zinv.mul(&diff).unwrap().degree().unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn provenance_is_recorded() {
        let s = build_galois_skc(&gf8(), &TeamMap::paper8()).unwrap();
        let p = s.provenance();
        assert_eq!(p.method.as_deref(), Some("galois"));
        assert_eq!(p.team_map.as_deref(), Some("paper8"));
        assert_eq!(p.multipliers.as_deref(), Some(&[1, 2, 3, 4, 5, 6, 7][..]));
    }
}
