use std::path::PathBuf;

use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("negative value {0} is not a valid partition part")]
    InvalidPart(i64),

    #[error("partition totals differ: {left} vs {right}")]
    TotalMismatch { left: u64, right: u64 },

    #[error("the empty partition has no smallest part")]
    EmptyPartition,

    #[error("enumeration bound exceeded: {n} > {bound} (raise ORBITCALC_MAX_N to override)")]
    BoundExceeded { n: u64, bound: u64 },

    #[error("no {family} partition below {partition}")]
    NoTypePartition { partition: String, family: String },

    #[error("no special {family} partition above {partition}")]
    NoSpecialAbove { partition: String, family: String },

    #[error("{partition} is not a {family} partition")]
    NotTypePartition { partition: String, family: String },

    #[error("derived partition {partition} is not a {family} partition")]
    NotDualTypePartition { partition: String, family: String },

    #[error("summand ({a},{b}) is invalid: both entries must be positive")]
    InvalidSummand { a: u64, b: u64 },

    #[error("endoscopic sector sum {sum} has impossible parity for {group}")]
    ParityViolation { sum: u64, group: String },

    #[error("dominance extremum is not unique: {first} and {second} are incomparable {side} elements for {family}")]
    ExtremumNotUnique {
        first: String,
        second: String,
        side: &'static str,
        family: String,
    },

    #[error("invalid partition literal: {0}")]
    InvalidLiteral(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("campaign directory {path} holds a manifest for a different configuration; use a fresh directory")]
    CampaignConfigMismatch { path: PathBuf },
}

pub type Result<T> = std::result::Result<T, Error>;
