use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported resolution; table entries are stored as `u8`.
pub const MAX_SCALE: usize = 254;

/// The finite chain `L_n = {0, 1/n, ..., 1}`, handled through the indices `0..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct ChainScale(usize);

impl ChainScale {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_SCALE {
            return Err(Error::InvalidScale { n, max: MAX_SCALE });
        }
        Ok(ChainScale(n))
    }

    /// The top index `n`.
    #[inline]
    pub fn n(self) -> usize {
        self.0
    }

    /// Number of chain points, `n + 1`.
    #[inline]
    pub fn size(self) -> usize {
        self.0 + 1
    }

    #[inline]
    pub fn top(self) -> usize {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i <= self.0
    }

    pub fn check(self, i: usize) -> Result<usize> {
        if self.contains(i) {
            Ok(i)
        } else {
            Err(Error::IndexOutOfRange { index: i, n: self.0 })
        }
    }

    /// Order-reversing involution `i -> n - i`.
    #[inline]
    pub fn reverse(self, i: usize) -> usize {
        self.0 - i
    }

    pub fn indices(self) -> std::ops::RangeInclusive<usize> {
        0..=self.0
    }
}

impl TryFrom<usize> for ChainScale {
    type Error = Error;

    fn try_from(n: usize) -> Result<Self> {
        ChainScale::new(n)
    }
}

impl From<ChainScale> for usize {
    fn from(s: ChainScale) -> usize {
        s.0
    }
}

impl std::fmt::Display for ChainScale {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "L_{}", self.0)
    }
}
