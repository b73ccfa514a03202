//! Hard-instance generators: constraint cover to flat set cover, and
//! multidimensional matching to constraint cover, each with forward and
//! backward solution maps.

pub mod cc;
pub mod mdm;

use std::fmt;

use serde::Serialize;

/// Which condition a rejected solution broke.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Check {
    /// Wrong lengths, out-of-range or repeated indices.
    Shape,
    /// `|K1| = dk` and `∪K1 = K0`.
    PointI,
    /// `|K2| = k` and `∪K2 = K1`.
    PointII,
    /// Every 1-constraint satisfied by `K0` is in `K1`.
    PointIII,
    /// Each block has exactly one all-ones row.
    Claim1,
    /// `K1` is exactly the zero-row constraints plus the decoded tuple constraints.
    Claim2,
    /// The decoded tuples lie in `S`, are pairwise orthogonal, and `K2` agrees.
    Claim3,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::Shape => "shape",
            Check::PointI => "point (i)",
            Check::PointII => "point (ii)",
            Check::PointIII => "point (iii)",
            Check::Claim1 => "claim 1",
            Check::Claim2 => "claim 2",
            Check::Claim3 => "claim 3",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: Check,
    pub detail: String,
}

impl Violation {
    pub(crate) fn new(check: Check, detail: impl Into<String>) -> Self {
        Self { check, detail: detail.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

impl std::error::Error for Violation {}
