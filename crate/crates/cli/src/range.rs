use std::fmt;
use std::str::FromStr;

use crate::CliError;

/// Largest conductor accepted by `verify`.
pub const MAX_VERIFY_CONDUCTOR: u64 = 500;

/// Inclusive conductor interval written `a:b`. `a > b` denotes an empty
/// range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConductorRange {
    pub start: u64,
    pub end: u64,
}

impl ConductorRange {
    pub fn new(start: u64, end: u64) -> Self {
        Self { start, end }
    }

    pub fn is_empty(&self) -> bool {
        self.start > self.end
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + Clone {
        self.start..=self.end
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            (self.end - self.start + 1) as usize
        }
    }
}

impl fmt::Display for ConductorRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.start == self.end {
            write!(f, "n={}", self.start)
        } else {
            write!(f, "n={}..{}", self.start, self.end)
        }
    }
}

impl FromStr for ConductorRange {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CliError::Usage(format!("invalid range '{s}', expected a:b"));
        let (a, b) = s.split_once(':').ok_or_else(bad)?;
        let start: u64 = a.trim().parse().map_err(|_| bad())?;
        let end: u64 = b.trim().parse().map_err(|_| bad())?;
        if start == 0 {
            return Err(CliError::Usage("conductors start at 1".into()));
        }
        Ok(Self { start, end })
    }
}
