//! Quaternary distance-4 perfect codes.
//!
//! # Overview
//!
//! For every quaternary length `n = 2^(2*r1+r2)` there is a perfect code
//! over Z4 with minimum Lee distance 4, cut out by a check matrix whose
//! columns run over all vectors with a leading 1, then `r1` arbitrary
//! quaternary digits, then `r2` digits restricted to {0, 2}. The binary
//! images of these codes under the digitwise Gray map are extended perfect
//! binary codes, and for a fixed binary length `2^k` (k >= 4) the parameter
//! choices `2*r1 + r2 + 1 = k` yield pairwise inequivalent images, told apart
//! by the GF(2) rank of their span.
//!
//! This crate builds the family matrices, enumerates and verifies the codes,
//! computes image ranks and dual invariants, reduces arbitrary perfect check
//! matrices to the family representative by a recorded column-sign-and-
//! permutation transcript, and combines codes of coprime-free lengths via a
//! row/column-sum product construction.
//!
//! # Modules
//!
//! * [`words`] - packed quaternary and binary words, Gray map, Lee weight
//! * [`linalg`] - matrices over Z4, Howell canonical form, kernels
//! * [`codes`] - codes as kernel objects: enumeration, weights, duals
//! * [`analysis`] - GF(2) rank, dual bases, classification by length
//! * [`canonical`] - reduction to the family representative
//! * [`product`] - the row/column-sum product construction
//!
//! # Example
//!
//! ```
//! use z4perfect::codes::QuaternaryCode;
//! use z4perfect::Limits;
//!
//! let limits = Limits::default();
//! let code = QuaternaryCode::family(1, 1, &limits).unwrap();
//! assert_eq!(code.len(), 8);
//! assert_eq!(code.cardinality(), Some(2048));
//! assert_eq!(code.min_lee_weight(&limits).unwrap(), Some(4));
//! ```

pub mod analysis;
pub mod canonical;
pub mod codes;
pub mod error;
pub mod linalg;
mod packed;
pub mod product;
pub mod words;

pub use error::{Error, Result};

use serde::Serialize;

/// Resource caps for operations whose cost grows with the code, not the
/// input text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of codewords an exhaustive enumeration may visit.
    pub max_enumeration: u128,
    /// Largest number of columns a constructed matrix may have.
    pub max_columns: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enumeration: 1 << 27,
            max_columns: 1 << 20,
        }
    }
}

impl Limits {
    /// Default limits, with the enumeration cap overridden by the
    /// `Z4PERFECT_ENUM_CAP` environment variable when set to a decimal count.
    pub fn from_env() -> std::result::Result<Self, String> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var("Z4PERFECT_ENUM_CAP") {
            match raw.trim().parse::<u128>() {
                Ok(cap) => limits.max_enumeration = cap,
                Err(_) => {
                    return Err(format!(
                        "Z4PERFECT_ENUM_CAP must be a decimal codeword count, got {raw:?}"
                    ))
                }
            }
        }
        Ok(limits)
    }

    /// Whether a code with `log2_size` codewords may be enumerated.
    pub fn allows_enumeration(&self, log2_size: u32) -> bool {
        if log2_size >= 128 {
            return false;
        }
        (1u128 << log2_size) <= self.max_enumeration
    }
}

/// How a reported fact was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    /// Every codeword was visited.
    #[serde(rename = "exhaustive")]
    Exhaustive,
    /// A shape argument on the check matrix, with no enumeration.
    #[serde(rename = "structural")]
    Structural,
    /// The span-generator shortcut, validated against exhaustive enumeration
    /// on every family member small enough to enumerate.
    #[serde(rename = "shortcut-validated")]
    ShortcutValidated,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Exhaustive => "exhaustive",
            Method::Structural => "structural",
            Method::ShortcutValidated => "shortcut-validated",
        };
        f.write_str(s)
    }
}
