//! Stable serial knockout competitions.
//!
//! A serial knockout competition runs n - 1 balanced knockout tournaments on
//! the same n = 2^k players. It is stable when every pair of players can meet
//! in round i of exactly 2^(i-1) of the tournaments, for every round i.
//!
//! This crate builds such schedules two ways, from the Fano plane for eight
//! players ([`fano`]) and from the field GF(2^k) for any k ([`galois_skc`]),
//! and checks arbitrary schedules by brute force ([`verifier`]).
//!
//! ```
//! use skc_core::{build_galois_skc, check_stability, FieldCtx, TeamMap};
//!
//! let field = FieldCtx::with_default_modulus(4).unwrap();
//! let schedule = build_galois_skc(&field, &TeamMap::identity(4)).unwrap();
//! let report = check_stability(&schedule).unwrap();
//! assert!(report.is_stable());
//! assert_eq!(report.c_values(), &[Some(1), Some(2), Some(4), Some(8)]);
//! ```

pub mod binpoly;
pub mod bracket;
pub mod cli;
pub mod error;
pub mod exec;
pub mod fano;
pub mod galois_skc;
pub mod gf2k;
pub mod schedule;
pub mod verifier;

pub use binpoly::{default_modulus, BinPoly};
pub use bracket::{Player, Seeding};
pub use error::{Error, Result};
pub use exec::Execution;
pub use fano::{FanoPlane, Line, NodeLineAssignment};
pub use galois_skc::{
    base_tournament, build_galois_skc, multiplication_table, tournament_z, TeamMap,
};
pub use gf2k::{FieldCtx, FieldElem};
pub use schedule::{Provenance, Schedule};
pub use verifier::{
    check_many, check_stability, check_stability_with, compare_schedules, compare_schedules_with,
    random_schedule, StabilityReport, Violation,
};
