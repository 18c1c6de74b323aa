//! Parameter shapes: the combinatorial residue `(a_i, b_i)` of a local
//! parameter, the odd/even endoscopic split, the dimension identities, and
//! the transfer-criterion checks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classical::{self, Family, FamilyKind};
use crate::duality::{self, GroupFamily, GroupType};
use crate::error::{Error, Result};
use crate::partition::{Partition, Relation};

/// One summand: `a` copies of the part `b` in the derived partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub a: u64,
    pub b: u64,
}

impl<'de> Deserialize<'de> for Summand {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Named { a: u64, b: u64 },
            Pair([u64; 2]),
        }
        Ok(match Repr::deserialize(d)? {
            Repr::Named { a, b } => Summand { a, b },
            Repr::Pair([a, b]) => Summand { a, b },
        })
    }
}

/// A validated parameter shape: a group together with summands sorted by
/// part descending. Summands with equal part stay distinct here and merge
/// in the derived partition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArthurShape {
    group: GroupType,
    summands: Vec<Summand>,
    partition: Partition,
}

/// Sufficient parity conditions under which the transfer criterion is
/// guaranteed to hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ParityCase {
    #[serde(rename = "sp-i")]
    SpI,
    #[serde(rename = "sp-ii")]
    SpII,
    #[serde(rename = "so-odd-i")]
    SoOddI,
    #[serde(rename = "so-odd-ii")]
    SoOddII,
    #[serde(rename = "so-even-uniform")]
    SoEvenUniform,
}

impl fmt::Display for ParityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ParityCase::SpI => "sp-i",
            ParityCase::SpII => "sp-ii",
            ParityCase::SoOddI => "so-odd-i",
            ParityCase::SoOddII => "so-odd-ii",
            ParityCase::SoEvenUniform => "so-even-uniform",
        };
        f.write_str(s)
    }
}

/// Decomposition of a shape into its odd-part and even-part sectors, with
/// the ranks and dual-side families of the induced endoscopic factors.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EndoscopicSplit {
    pub odd_indices: Vec<usize>,
    pub even_indices: Vec<usize>,
    pub n1: u64,
    pub n2: u64,
    pub odd_summands: Vec<Summand>,
    pub even_summands: Vec<Summand>,
    pub odd_partition: Partition,
    pub even_partition: Partition,
    pub dual_family_odd: Family,
    pub dual_family_even: Family,
}

/// Everything the survey records about one shape.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CriterionReport {
    pub group: GroupType,
    pub summands: Vec<Summand>,
    pub partition: Partition,
    pub eta: Partition,
    pub candidate: Partition,
    pub p1: Partition,
    pub n_star: u64,
    pub criterion_lhs: Partition,
    pub criterion_rhs: Partition,
    pub criterion_holds: bool,
    pub oriequ_holds: bool,
    pub parity_case: Option<ParityCase>,
    pub prop45_relation: Relation,
    pub lemma31: (i64, i64),
    pub lemma32: (i64, i64),
    pub tempered: bool,
}

impl ArthurShape {
    /// Validates and normalizes a shape given as `(a, b)` pairs.
    pub fn new<I>(group: GroupType, summands: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut summands: Vec<Summand> = summands
            .into_iter()
            .map(|(a, b)| {
                if a == 0 || b == 0 {
                    Err(Error::InvalidSummand { a, b })
                } else {
                    Ok(Summand { a, b })
                }
            })
            .collect::<Result<_>>()?;
        summands.sort_by_key(|s| std::cmp::Reverse(s.b));
        let total: u64 = summands.iter().map(|s| s.a * s.b).sum();
        if total != group.dual_total() {
            return Err(Error::TotalMismatch {
                left: total,
                right: group.dual_total(),
            });
        }
        let parts: Vec<u64> = summands
            .iter()
            .flat_map(|s| std::iter::repeat_n(s.b, s.a as usize))
            .collect();
        let partition = Partition::from_unsorted(parts);
        let dual = group.dual_family();
        if !classical::is_type(&partition, dual) {
            return Err(Error::NotDualTypePartition {
                partition: partition.to_string(),
                family: dual.to_string(),
            });
        }
        Ok(ArthurShape {
            group,
            summands,
            partition,
        })
    }

    pub fn group(&self) -> &GroupType {
        &self.group
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    /// The derived partition `[b_1^{a_1} ... b_r^{a_r}]` on the dual side.
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// All parts equal to one.
    pub fn is_tempered(&self) -> bool {
        self.summands.iter().all(|s| s.b == 1)
    }

    pub fn eta(&self) -> Result<Partition> {
        duality::eta(&self.partition, &self.group)
    }

    /// Transpose of the halved-part list `[(b_i/2)^{a_i}]`.
    pub fn p1(&self) -> Partition {
        let halves: Vec<u64> = self
            .summands
            .iter()
            .flat_map(|s| std::iter::repeat_n(s.b / 2, s.a as usize))
            .collect();
        Partition::from_unsorted(halves).transpose()
    }

    /// Half the number of odd parts, rounded down.
    pub fn n_star(&self) -> u64 {
        let odd_count: u64 = self
            .summands
            .iter()
            .filter(|s| s.b % 2 == 1)
            .map(|s| s.a)
            .sum();
        odd_count / 2
    }

    /// The raw joined partition before expansion. Synthesized parts that
    /// come out non-positive are dropped; in the even orthogonal case the
    /// pair `(2n*-1, 1)` is dropped together when `n* = 0` so the total
    /// stays at the group-side size.
    pub fn candidate_raw(&self) -> Partition {
        let p1 = self.p1();
        let ns = self.n_star();
        match self.group.family {
            GroupFamily::Sp => {
                let extra = Partition::row(2 * ns);
                Partition::join([&p1, &p1, &extra])
            }
            GroupFamily::SOodd => {
                let extra = Partition::row(2 * ns + 1);
                Partition::join([&p1, &p1, &extra])
            }
            GroupFamily::SOeven => {
                if ns == 0 {
                    Partition::join([&p1, &p1])
                } else {
                    let long = Partition::row(2 * ns - 1);
                    let one = Partition::row(1);
                    Partition::join([&p1, &p1, &long, &one])
                }
            }
        }
    }

    /// Group-side expansion of [`candidate_raw`](Self::candidate_raw): the
    /// smallest special group-side partition above the raw join.
    pub fn candidate(&self) -> Result<Partition> {
        classical::expansion(&self.candidate_raw(), self.group.group_family())
    }

    /// Splits the summands into odd-part and even-part sectors.
    pub fn endoscopic_split(&self) -> Result<EndoscopicSplit> {
        let mut odd_indices = Vec::new();
        let mut even_indices = Vec::new();
        for (i, s) in self.summands.iter().enumerate() {
            if s.b % 2 == 1 {
                odd_indices.push(i);
            } else {
                even_indices.push(i);
            }
        }
        let sector = |indices: &[usize]| -> (Vec<Summand>, Partition, u64) {
            let summands: Vec<Summand> = indices.iter().map(|&i| self.summands[i]).collect();
            let parts: Vec<u64> = summands
                .iter()
                .flat_map(|s| std::iter::repeat_n(s.b, s.a as usize))
                .collect();
            let sum: u64 = summands.iter().map(|s| s.a * s.b).sum();
            (summands, Partition::from_unsorted(parts), sum)
        };
        let (odd_summands, odd_partition, odd_sum) = sector(&odd_indices);
        let (even_summands, even_partition, even_sum) = sector(&even_indices);

        let n1 = match self.group.family {
            GroupFamily::Sp => {
                if odd_sum % 2 == 0 {
                    return Err(Error::ParityViolation {
                        sum: odd_sum,
                        group: self.group.to_string(),
                    });
                }
                (odd_sum - 1) / 2
            }
            GroupFamily::SOodd | GroupFamily::SOeven => {
                if odd_sum % 2 == 1 {
                    return Err(Error::ParityViolation {
                        sum: odd_sum,
                        group: self.group.to_string(),
                    });
                }
                odd_sum / 2
            }
        };
        debug_assert_eq!(even_sum % 2, 0, "even sector sum is a multiple of two");
        let n2 = even_sum / 2;
        debug_assert_eq!(n1 + n2, self.group.n);

        let (dual_family_odd, dual_family_even) = match self.group.family {
            GroupFamily::Sp => (
                Family::new(FamilyKind::B, n1),
                Family::new(FamilyKind::D, n2),
            ),
            GroupFamily::SOodd => (
                Family::new(FamilyKind::C, n1),
                Family::new(FamilyKind::C, n2),
            ),
            GroupFamily::SOeven => (
                Family::new(FamilyKind::D, n1),
                Family::new(FamilyKind::D, n2),
            ),
        };
        Ok(EndoscopicSplit {
            odd_indices,
            even_indices,
            n1,
            n2,
            odd_summands,
            even_summands,
            odd_partition,
            even_partition,
            dual_family_odd,
            dual_family_even,
        })
    }

    /// Both sides of the codimension identity: the group-side codimension of
    /// the dual image against the endoscopic factors' codimensions of the
    /// collapsed sector transposes.
    pub fn check_lemma31(&self) -> Result<(i64, i64)> {
        let split = self.endoscopic_split()?;
        let gf = self.group.group_family();
        let eta = self.eta()?;
        let lhs = self.group.dim_group_algebra() as i64 - classical::orbit_dim(&eta, gf)? as i64;

        let sector_dim = |pi: &Partition, fam: Family| -> Result<u64> {
            let collapsed = classical::collapse(&pi.transpose(), fam)?;
            classical::orbit_dim(&collapsed, fam)
        };
        let rhs = split.dual_family_odd.algebra_dim() as i64
            + split.dual_family_even.algebra_dim() as i64
            - sector_dim(&split.odd_partition, split.dual_family_odd)? as i64
            - sector_dim(&split.even_partition, split.dual_family_even)? as i64;
        Ok((lhs, rhs))
    }

    /// For symplectic groups the first endoscopic factor admits a second
    /// reading: the dual image of the odd sector inside `sp(2n1)` instead of
    /// the collapsed transpose inside `so(2n1+1)`. Returns both dimensions;
    /// they agree by the rank-`n1` instance of the second identity.
    pub fn lemma31_sp_first_factor(&self) -> Result<Option<(u64, u64)>> {
        if self.group.family != GroupFamily::Sp {
            return Ok(None);
        }
        let split = self.endoscopic_split()?;
        let uniform = {
            let collapsed =
                classical::collapse(&split.odd_partition.transpose(), split.dual_family_odd)?;
            classical::orbit_dim(&collapsed, split.dual_family_odd)?
        };
        let sub_group = GroupType::new(GroupFamily::Sp, split.n1);
        let alternate = {
            let eta1 = duality::eta(&split.odd_partition, &sub_group)?;
            classical::orbit_dim(&eta1, sub_group.group_family())?
        };
        Ok(Some((uniform, alternate)))
    }

    /// Both sides of the dimension identity equating the group-side dual
    /// image with the dual-side collapse of the transpose.
    pub fn check_lemma32(&self) -> Result<(i64, i64)> {
        let lhs = classical::orbit_dim(&self.eta()?, self.group.group_family())? as i64;
        let collapsed = classical::collapse(&self.partition.transpose(), self.group.dual_family())?;
        let rhs = classical::orbit_dim(&collapsed, self.group.dual_family())? as i64;
        Ok((lhs, rhs))
    }

    /// Both sides of the family's transfer criterion.
    ///
    /// Symplectic: collapse of the raw-join transpose against the collapse
    /// of the decremented partition. Odd orthogonal: the same with the
    /// incremented partition. Even orthogonal: the expanded candidate
    /// against the collapse of the transpose (the dual image itself).
    pub fn criterion_sides(&self) -> Result<(Partition, Partition)> {
        let raw = self.candidate_raw();
        match self.group.family {
            GroupFamily::Sp => {
                let f = self.group.group_family();
                let lhs = classical::collapse(&raw.transpose(), f)?;
                let rhs = classical::collapse(&self.partition.decrement_min()?, f)?;
                Ok((lhs, rhs))
            }
            GroupFamily::SOodd => {
                let f = self.group.group_family();
                let lhs = classical::collapse(&raw.transpose(), f)?;
                let rhs = classical::collapse(&self.partition.increment_max(), f)?;
                Ok((lhs, rhs))
            }
            GroupFamily::SOeven => {
                let lhs = self.candidate()?;
                let rhs = self.eta()?;
                Ok((lhs, rhs))
            }
        }
    }

    /// Which sufficient parity condition, if any, the merged part profile
    /// matches. Read off the merged normal form `[b_1^{a_1} ... b_r^{a_r}]`
    /// with distinct descending `b_i`.
    pub fn parity_case(&self) -> Option<ParityCase> {
        let runs = self.partition.runs();
        if runs.is_empty() {
            return None;
        }
        let all_odd = runs.iter().all(|&(b, _)| b % 2 == 1);
        let all_even = runs.iter().all(|&(b, _)| b % 2 == 0);
        match self.group.family {
            GroupFamily::Sp => {
                let (b_last, a_last) = *runs.last().expect("nonempty");
                if b_last == 1 && a_last == 1 && runs[..runs.len() - 1].iter().all(|&(b, _)| b % 2 == 0)
                {
                    Some(ParityCase::SpI)
                } else if all_odd {
                    Some(ParityCase::SpII)
                } else {
                    None
                }
            }
            GroupFamily::SOodd => {
                let (b_first, a_first) = runs[0];
                if b_first % 2 == 0 && a_first == 1 && runs[1..].iter().all(|&(b, _)| b % 2 == 1) {
                    Some(ParityCase::SoOddI)
                } else if all_even {
                    Some(ParityCase::SoOddII)
                } else {
                    None
                }
            }
            GroupFamily::SOeven => {
                if all_odd || all_even {
                    Some(ParityCase::SoEvenUniform)
                } else {
                    None
                }
            }
        }
    }

    /// The near-tempered profile `a_1 = 1`, `b_1 = 3 / 2 / 3` by family,
    /// every other part equal to one.
    pub fn packet_pattern(&self) -> bool {
        let runs = self.partition.runs();
        let want_b1 = match self.group.family {
            GroupFamily::Sp | GroupFamily::SOeven => 3,
            GroupFamily::SOodd => 2,
        };
        match runs.as_slice() {
            [(b1, 1)] => *b1 == want_b1,
            [(b1, 1), (1, _)] => *b1 == want_b1,
            _ => false,
        }
    }

    /// Runs every check and assembles the per-shape report.
    pub fn check_criterion(&self) -> Result<CriterionReport> {
        let eta = self.eta()?;
        let candidate = self.candidate()?;
        let (criterion_lhs, criterion_rhs) = self.criterion_sides()?;
        let criterion_holds = criterion_lhs == criterion_rhs;
        let oriequ_holds = candidate == eta;
        let prop45_relation = candidate.compare(&eta)?;
        Ok(CriterionReport {
            group: self.group.clone(),
            summands: self.summands.clone(),
            partition: self.partition.clone(),
            eta,
            candidate,
            p1: self.p1(),
            n_star: self.n_star(),
            criterion_lhs,
            criterion_rhs,
            criterion_holds,
            oriequ_holds,
            parity_case: self.parity_case(),
            prop45_relation,
            lemma31: self.check_lemma31()?,
            lemma32: self.check_lemma32()?,
            tempered: self.is_tempered(),
        })
    }
}

impl fmt::Display for ArthurShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.group, self.partition)
    }
}

/// Parses the shape literal `"3^3,2^2"`: comma- or space-separated `b^a`
/// tokens, `b` the part and `a` its multiplicity (default one).
pub fn parse_param(s: &str) -> Result<Vec<(u64, u64)>> {
    let mut out = Vec::new();
    for token in s.split(|c: char| c == ',' || c.is_whitespace()) {
        if token.is_empty() {
            continue;
        }
        let (b, a) = match token.split_once('^') {
            Some((b, a)) => (b, a),
            None => (token, "1"),
        };
        let b: u64 = b
            .parse()
            .map_err(|_| Error::InvalidLiteral(format!("bad summand token {token:?}")))?;
        let a: u64 = a
            .parse()
            .map_err(|_| Error::InvalidLiteral(format!("bad summand token {token:?}")))?;
        out.push((a, b));
    }
    Ok(out)
}
