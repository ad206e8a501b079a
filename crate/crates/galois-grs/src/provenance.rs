//! Derivation records: where a code came from and every transform applied,
//! with explicit zero-indexed coordinate sets so a third party can replay
//! the chain bit-exactly.

use serde::{Deserialize, Serialize};

/// How the root code of a derivation chain was produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Root {
    /// Built by one of the construction families.
    Construction {
        family: String,
        p: u64,
        h: u32,
        e: u32,
        k: usize,
        extended: bool,
        /// Family parameters in declaration order (t | x1,x2,r1 | m,r).
        params: Vec<u64>,
    },
    /// Materialized from an explicit locator/multiplier specification.
    GrsManual {
        k: usize,
        extended: bool,
        locators: Vec<i64>,
        multipliers: Vec<i64>,
    },
    /// Imported from a file or built from a raw generator matrix.
    AdHoc { label: String },
}

/// One transform in a derivation chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Step {
    Shorten { e: u32, t: Vec<usize> },
    Puncture { e: u32, t: Vec<usize> },
    /// Puncture without a hull-tracking coordinate choice. A dimension drop
    /// means |t| reached the minimum distance, which the record keeps
    /// visible because the hull-tracking transforms require |t| < d.
    PunctureRaw { t: Vec<usize>, dimension_preserved: bool },
    ShortenRaw { t: Vec<usize> },
    GaloisDual { e: u32 },
    DecomposePart { e: u32, s: usize, part: u8 },
}

/// Provenance chain attached to every produced code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationRecord {
    pub root: Root,
    #[serde(default)]
    pub steps: Vec<Step>,
    /// True when the root is (extended) GRS, hence MDS by construction, and
    /// every subsequent step provably preserves the MDS property.
    pub mds_by_construction: bool,
}

impl DerivationRecord {
    pub fn ad_hoc(label: &str) -> DerivationRecord {
        DerivationRecord {
            root: Root::AdHoc {
                label: label.to_string(),
            },
            steps: Vec::new(),
            mds_by_construction: false,
        }
    }

    pub fn with_step(&self, step: Step, keeps_mds: bool) -> DerivationRecord {
        let mut out = self.clone();
        out.steps.push(step);
        out.mds_by_construction &= keeps_mds;
        out
    }
}
