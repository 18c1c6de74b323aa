//! Duality maps between dual-side and group-side partitions.
//!
//! A [`GroupType`] fixes one of the quasi-split classical groups `Sp(2n)`,
//! `SO(2n+1)` or `SO(2n)` (the latter with an optional, never inspected,
//! square-class label). Partitions on the dual side live in the dual family
//! (B, C, D respectively); [`eta`] carries them to special group-side
//! partitions by transpose, a one-box modification where the totals demand
//! one, and a collapse.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classical::{self, Family, FamilyKind};
use crate::error::{Error, Result};
use crate::partition::{Partition, Relation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupFamily {
    Sp,
    SOodd,
    SOeven,
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupFamily::Sp => "sp",
            GroupFamily::SOodd => "so-odd",
            GroupFamily::SOeven => "so-even",
        };
        f.write_str(s)
    }
}

impl FromStr for GroupFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sp" => Ok(GroupFamily::Sp),
            "so-odd" | "soodd" => Ok(GroupFamily::SOodd),
            "so-even" | "soeven" => Ok(GroupFamily::SOeven),
            _ => Err(Error::InvalidLiteral(format!("unknown group family {s:?}"))),
        }
    }
}

/// A quasi-split classical group at fixed rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupType {
    pub family: GroupFamily,
    pub n: u64,
    /// Square-class label for `SO(2n)`; carried verbatim, never inspected.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
}

impl GroupType {
    pub fn new(family: GroupFamily, n: u64) -> Self {
        GroupType {
            family,
            n,
            alpha: None,
        }
    }

    pub fn with_alpha(family: GroupFamily, n: u64, alpha: Option<String>) -> Self {
        GroupType { family, n, alpha }
    }

    /// Total `N` of dual-side partitions.
    pub fn dual_total(&self) -> u64 {
        match self.family {
            GroupFamily::Sp => 2 * self.n + 1,
            GroupFamily::SOodd | GroupFamily::SOeven => 2 * self.n,
        }
    }

    /// Total `M` of group-side partitions.
    pub fn group_total(&self) -> u64 {
        match self.family {
            GroupFamily::Sp | GroupFamily::SOeven => 2 * self.n,
            GroupFamily::SOodd => 2 * self.n + 1,
        }
    }

    /// Family of partitions on the dual side.
    pub fn dual_family(&self) -> Family {
        match self.family {
            GroupFamily::Sp => Family::new(FamilyKind::B, self.n),
            GroupFamily::SOodd => Family::new(FamilyKind::C, self.n),
            GroupFamily::SOeven => Family::new(FamilyKind::D, self.n),
        }
    }

    /// Family of partitions on the group side.
    pub fn group_family(&self) -> Family {
        match self.family {
            GroupFamily::Sp => Family::new(FamilyKind::C, self.n),
            GroupFamily::SOodd => Family::new(FamilyKind::B, self.n),
            GroupFamily::SOeven => Family::new(FamilyKind::D, self.n),
        }
    }

    /// The regular group-side partition: `[2n]`, `[2n+1]` or `[2n-1 1]`.
    pub fn regular_group_partition(&self) -> Partition {
        self.group_family().regular_partition()
    }

    pub fn dim_group_algebra(&self) -> u64 {
        self.group_family().algebra_dim()
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            GroupFamily::Sp => write!(f, "sp({})", 2 * self.n)?,
            GroupFamily::SOodd => write!(f, "so({})", 2 * self.n + 1)?,
            GroupFamily::SOeven => write!(f, "so({})", 2 * self.n)?,
        }
        if let Some(alpha) = &self.alpha {
            write!(f, "[{alpha}]")?;
        }
        Ok(())
    }
}

fn require_dual_type(p: &Partition, g: &GroupType) -> Result<()> {
    let f = g.dual_family();
    if !classical::is_type(p, f) {
        return Err(Error::NotTypePartition {
            partition: p.to_string(),
            family: f.to_string(),
        });
    }
    Ok(())
}

/// Barbasch-Vogan duality from dual-side to group-side partitions.
///
/// `Sp(2n)`: collapse of the decremented transpose into C. `SO(2n+1)`:
/// collapse of the incremented transpose into B. `SO(2n)`: collapse of the
/// transpose into D. The result is special in the group-side family.
pub fn eta(p: &Partition, g: &GroupType) -> Result<Partition> {
    require_dual_type(p, g)?;
    let t = p.transpose();
    match g.family {
        GroupFamily::Sp => classical::collapse(&t.decrement_min()?, g.group_family()),
        GroupFamily::SOodd => classical::collapse(&t.increment_max(), g.group_family()),
        GroupFamily::SOeven => classical::collapse(&t, g.group_family()),
    }
}

/// Wavefront partition of the `GL(N)` member attached to a dual-side
/// partition: simply the transpose.
pub fn gl_wavefront(p: &Partition) -> Partition {
    p.transpose()
}

/// Upper bound for the twisted (bitorsor) wavefront partitions: collapse of
/// the transpose into the dual family for the orthogonal groups, and the
/// group-side collapse of the decremented transpose (which equals [`eta`])
/// for `Sp(2n)`.
pub fn bitorsor_bound(p: &Partition, g: &GroupType) -> Result<Partition> {
    require_dual_type(p, g)?;
    match g.family {
        GroupFamily::Sp => eta(p, g),
        GroupFamily::SOodd | GroupFamily::SOeven => {
            classical::collapse(&p.transpose(), g.dual_family())
        }
    }
}

/// Classifies a group-side partition `q` against `eta(p, g)`: `Equal`
/// certifies the conjectured maximum, `Greater` and `Incomparable` flag the
/// two exclusion regimes, `Less` sits under the bound.
pub fn jiang_classify(q: &Partition, g: &GroupType, p: &Partition) -> Result<Relation> {
    if q.total() != g.group_total() {
        return Err(Error::TotalMismatch {
            left: q.total(),
            right: g.group_total(),
        });
    }
    q.compare(&eta(p, g)?)
}
