use core::fmt;

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    /// Conjunction: any failure wins, then any inconclusive result.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => Verdict::Inconclusive,
            _ => Verdict::Pass,
        }
    }

    pub fn all<I: IntoIterator<Item = Verdict>>(iter: I) -> Verdict {
        iter.into_iter().fold(Verdict::Pass, Verdict::and)
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Size limits for operations that materialize graphs or enumerate cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of graph vertices an explicit realization may have.
    pub vertices: u64,
    /// Maximum number of candidate cells an enumeration may visit.
    pub cells: u64,
}

impl Budget {
    pub const DEFAULT_VERTICES: u64 = 1_000_000;
    pub const DEFAULT_CELLS: u64 = 10_000_000;

    pub fn unlimited() -> Self {
        Budget { vertices: u64::MAX, cells: u64::MAX }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget { vertices: Self::DEFAULT_VERTICES, cells: Self::DEFAULT_CELLS }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjunction_prefers_failure() {
        assert_eq!(Verdict::Pass.and(Verdict::Inconclusive), Verdict::Inconclusive);
        assert_eq!(Verdict::Inconclusive.and(Verdict::Fail), Verdict::Fail);
        assert_eq!(Verdict::all([Verdict::Pass, Verdict::Pass]), Verdict::Pass);
        assert_eq!(Verdict::all([]), Verdict::Pass);
    }
}
