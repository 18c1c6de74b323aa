//! Partition calculus for nilpotent orbits of classical Lie algebras.
//!
//! The crate computes the combinatorics attached to parameter shapes of the
//! quasi-split classical groups: transpose and dominance on integer
//! partitions, parity-constrained collapse and expansion, the same-type and
//! Barbasch-Vogan duality maps, orbit dimensions, the odd/even endoscopic
//! split with its dimension identities, and the transfer criteria that
//! decide when the constructed candidate partition reaches the dual image.
//! The [`survey`] module drives exhaustive verification campaigns over all
//! shapes up to a rank bound and persists counterexamples as JSONL reports.

// parity conditions read better spelled out
#![allow(clippy::manual_is_multiple_of)]

pub mod arthur;
pub mod classical;
pub mod duality;
pub mod error;
pub mod partition;
pub mod survey;

pub use arthur::{ArthurShape, CriterionReport, EndoscopicSplit, ParityCase, Summand};
pub use classical::{Family, FamilyKind};
pub use duality::{GroupFamily, GroupType};
pub use error::{Error, Result};
pub use partition::{enumerate_partitions, Partition, Relation};
pub use survey::{CampaignConfig, CampaignSummary, CheckKind, SurveyRecord};
