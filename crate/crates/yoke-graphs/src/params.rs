//! Graph parameters and size accounting.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default ceiling on explicit vertex enumeration (2^22).
pub const DEFAULT_VERTEX_CAP: u64 = 1 << 22;

/// Default ceiling for the brute-force automorphism search.
pub const DEFAULT_BRUTE_FORCE_CAP: u64 = 4096;

/// Which of the two vertex alphabets a graph uses: binary middle entries
/// (yoke) or middle entries in {-1, 0, 1} (dyoke).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Yoke,
    DYoke,
}

impl Kind {
    pub fn middle_min(self) -> i64 {
        match self {
            Kind::Yoke => 0,
            Kind::DYoke => -1,
        }
    }

    pub fn middle_max(self) -> i64 {
        1
    }

    /// Number of values a middle entry can take.
    pub fn radix(self) -> u64 {
        match self {
            Kind::Yoke => 2,
            Kind::DYoke => 3,
        }
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Kind::Yoke => write!(f, "yoke"),
            Kind::DYoke => write!(f, "dyoke"),
        }
    }
}

/// Parameters (n, m): bucket modulus n >= 1 and number of middle entries m >= 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphParams {
    pub n: u64,
    pub m: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SizeError {
    #[error("n must be >= 1")]
    ZeroModulus,
    #[error("vertex count {count} exceeds cap {cap}")]
    TooLarge { count: u64, cap: u64 },
    #[error("vertex count overflows u64")]
    Overflow,
}

impl GraphParams {
    pub fn new(n: u64, m: u64) -> Result<Self, SizeError> {
        if n == 0 {
            return Err(SizeError::ZeroModulus);
        }
        Ok(GraphParams { n, m })
    }

    /// Total number of vertices: n * 2^m for yoke, n * 3^m for dyoke.
    pub fn vertex_count(&self, kind: Kind) -> Result<u64, SizeError> {
        let mut count: u64 = self.n;
        for _ in 0..self.m {
            count = count.checked_mul(kind.radix()).ok_or(SizeError::Overflow)?;
        }
        Ok(count)
    }

    /// Vertex count, checked against an enumeration cap.
    pub fn vertex_count_capped(&self, kind: Kind, cap: u64) -> Result<u64, SizeError> {
        let count = self.vertex_count(kind)?;
        if count > cap {
            return Err(SizeError::TooLarge { count, cap });
        }
        Ok(count)
    }

    /// Entries per vertex (m + 2: two buckets flanking m middle entries).
    pub fn len(&self) -> usize {
        self.m as usize + 2
    }

    /// Reduce an integer to the canonical bucket representative in [0, n-1].
    pub fn reduce(&self, x: i64) -> i64 {
        x.rem_euclid(self.n as i64)
    }
}

impl std::fmt::Display for GraphParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.n, self.m)
    }
}
