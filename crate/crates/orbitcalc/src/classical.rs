//! Parity-constrained partitions for the classical families B, C, D.
//!
//! A partition labels a nilpotent orbit of `so(2n+1)` (family B), `sp(2n)`
//! (family C) or `so(2n)` (family D) exactly when its total matches the
//! family and the parity condition holds: even parts occur with even
//! multiplicity for B and D, odd parts with even multiplicity for C.
//!
//! The two closure operators of the theory live here. The *collapse* of a
//! partition is the largest family partition below it in dominance; the
//! *expansion* is the smallest special family partition above it. The
//! normative definition of both is the brute-force dominance extremum over
//! the full enumeration. Collapse additionally ships a fast iterative repair
//! that is checked against the extremum (see [`collapse_extremum`]); the
//! survey's `oracle` check and the test suite keep the two routes honest.
//!
//! *Special* partitions are the fixed points of the square of the same-type
//! duality map [`dual_ls`] (collapse of the transpose). The map itself
//! satisfies `d^3 = d`, reverses dominance, and has exactly the special
//! partitions as its image.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// The three classical families at fixed rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyKind {
    B,
    C,
    D,
}

/// A classical family with its rank: `B:n ~ so(2n+1)`, `C:n ~ sp(2n)`,
/// `D:n ~ so(2n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Family {
    pub kind: FamilyKind,
    pub rank: u64,
}

impl Family {
    pub fn new(kind: FamilyKind, rank: u64) -> Self {
        Family { kind, rank }
    }

    /// Total of the partitions the family acts on.
    pub fn total(&self) -> u64 {
        match self.kind {
            FamilyKind::B => 2 * self.rank + 1,
            FamilyKind::C | FamilyKind::D => 2 * self.rank,
        }
    }

    /// Dimension of the ambient Lie algebra.
    pub fn algebra_dim(&self) -> u64 {
        let n = self.rank;
        match self.kind {
            // dim so(2n+1) = dim sp(2n) = n(2n+1)
            FamilyKind::B | FamilyKind::C => n * (2 * n + 1),
            FamilyKind::D => n * (2 * n).saturating_sub(1),
        }
    }

    /// The regular (principal) partition of the family.
    pub fn regular_partition(&self) -> Partition {
        let n = self.rank;
        match self.kind {
            FamilyKind::B => Partition::row(2 * n + 1),
            FamilyKind::C => Partition::row(2 * n),
            FamilyKind::D => {
                if n == 0 {
                    Partition::empty()
                } else {
                    Partition::from_unsorted(vec![2 * n - 1, 1])
                }
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}:{}", self.kind, self.rank)
    }
}

/// Accepts `B:2`, `c:3`, `D:7` as well as `so5`, `sp6`, `so8` (parity of the
/// total picks B versus D).
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::InvalidLiteral(format!("unknown family {s:?}"));
        if let Some((letter, rank)) = t.split_once(':') {
            let rank: u64 = rank.trim().parse().map_err(|_| bad())?;
            let kind = match letter.trim() {
                "B" | "b" => FamilyKind::B,
                "C" | "c" => FamilyKind::C,
                "D" | "d" => FamilyKind::D,
                _ => return Err(bad()),
            };
            return Ok(Family::new(kind, rank));
        }
        let lower = t.to_ascii_lowercase();
        if let Some(total) = lower.strip_prefix("so") {
            let total: u64 = total.parse().map_err(|_| bad())?;
            return Ok(if total % 2 == 1 {
                Family::new(FamilyKind::B, total / 2)
            } else {
                Family::new(FamilyKind::D, total / 2)
            });
        }
        if let Some(total) = lower.strip_prefix("sp") {
            let total: u64 = total.parse().map_err(|_| bad())?;
            if total % 2 == 1 {
                return Err(bad());
            }
            return Ok(Family::new(FamilyKind::C, total / 2));
        }
        Err(bad())
    }
}

fn parity_ok(p: &Partition, kind: FamilyKind) -> bool {
    p.runs().iter().all(|&(value, mult)| match kind {
        FamilyKind::B | FamilyKind::D => value % 2 == 1 || mult % 2 == 0,
        FamilyKind::C => value % 2 == 0 || mult % 2 == 0,
    })
}

/// Does `p` label a nilpotent orbit of the family?
pub fn is_type(p: &Partition, f: Family) -> bool {
    p.total() == f.total() && parity_ok(p, f.kind)
}

/// All parts even. For family D such partitions label two distinct orbits;
/// the crate works at partition level and only reports the flag.
pub fn is_very_even(p: &Partition) -> bool {
    !p.is_empty() && p.parts().iter().all(|&v| v % 2 == 0)
}

fn check_total(p: &Partition, f: Family) -> Result<()> {
    if p.total() != f.total() {
        return Err(Error::TotalMismatch {
            left: p.total(),
            right: f.total(),
        });
    }
    Ok(())
}

fn require_type(p: &Partition, f: Family) -> Result<()> {
    if !is_type(p, f) {
        return Err(Error::NotTypePartition {
            partition: p.to_string(),
            family: f.to_string(),
        });
    }
    Ok(())
}

/// Largest part of the wrong parity occurring with odd multiplicity.
fn largest_violation(parts: &[u64], kind: FamilyKind) -> Option<u64> {
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        let mut j = i;
        while j < parts.len() && parts[j] == v {
            j += 1;
        }
        let mult = (j - i) as u64;
        let wrong_parity = match kind {
            FamilyKind::B | FamilyKind::D => v % 2 == 0,
            FamilyKind::C => v % 2 == 1,
        };
        if wrong_parity && mult % 2 == 1 {
            return Some(v);
        }
        i = j;
    }
    None
}

/// Family collapse: the largest family partition `<= p` in dominance.
///
/// Implemented by iterative repair: take the largest part of the wrong
/// parity with odd multiplicity, move one box from its last row down to the
/// first row that accepts it. Each step lowers the partition without losing
/// any family partition below it, so the fixed point is the dominance
/// maximum. [`collapse_extremum`] is the normative brute-force definition.
pub fn collapse(p: &Partition, f: Family) -> Result<Partition> {
    check_total(p, f)?;
    let mut parts = p.parts().to_vec();
    while let Some(v) = largest_violation(&parts, f.kind) {
        let i = parts.iter().rposition(|&x| x == v).expect("violating part present");
        parts[i] -= 1;
        let mut j = i + 1;
        while j < parts.len() && parts[j] + 1 > parts[j - 1] {
            j += 1;
        }
        if j == parts.len() {
            parts.push(1);
        } else {
            parts[j] += 1;
        }
        if parts[i] == 0 {
            parts.remove(i);
        }
    }
    let out = Partition::from_unsorted(parts);
    debug_assert!(is_type(&out, f));
    debug_assert!(out.leq(p).unwrap());
    Ok(out)
}

/// Brute-force collapse: dominance maximum of the family partitions `<= p`,
/// computed from the full enumeration. Normative reference for [`collapse`].
pub fn collapse_extremum(p: &Partition, f: Family) -> Result<Partition> {
    check_total(p, f)?;
    let candidates: Vec<Partition> = enumerate_partitions(p.total())?
        .filter(|q| parity_ok(q, f.kind) && q.leq(p).unwrap())
        .collect();
    extremum(candidates, true, f).ok_or_else(|| Error::NoTypePartition {
        partition: p.to_string(),
        family: f.to_string(),
    })?
}

/// Family expansion: the smallest special family partition `>= p` in
/// dominance. This is the normative brute-force extremum; there is nothing
/// to optimize at the scales the crate targets.
///
/// On family partitions the minimum always exists and is unique. Off the
/// family domain two corner cases exist and surface as errors: the special
/// set above `p` can be empty (`[2n]` for family D admits no orthogonal
/// partition above it) and it can have two incomparable minimal elements
/// (`[4 2 1 1]` for `D:4` sits under both `[4 4]` and `[5 1 1 1]`).
pub fn expansion(p: &Partition, f: Family) -> Result<Partition> {
    check_total(p, f)?;
    let candidates: Vec<Partition> = enumerate_partitions(p.total())?
        .filter(|q| {
            is_type(q, f) && is_special_unchecked(q, f) && p.leq(q).unwrap()
        })
        .collect();
    extremum(candidates, false, f).ok_or_else(|| Error::NoSpecialAbove {
        partition: p.to_string(),
        family: f.to_string(),
    })?
}

/// Verified dominance extremum of a candidate set: scan for a maximal (or
/// minimal) element, then confirm it is comparable to every candidate.
/// `None` for an empty set, an error when the extremum is not unique.
fn extremum(
    candidates: Vec<Partition>,
    maximum: bool,
    f: Family,
) -> Option<Result<Partition>> {
    let mut iter = candidates.iter();
    let mut best = iter.next()?;
    for c in iter {
        let rel = c.compare(best).expect("equal totals");
        let wins = if maximum {
            rel == crate::partition::Relation::Greater
        } else {
            rel == crate::partition::Relation::Less
        };
        if wins {
            best = c;
        }
    }
    for c in &candidates {
        let ok = if maximum {
            c.leq(best).expect("equal totals")
        } else {
            best.leq(c).expect("equal totals")
        };
        if !ok {
            return Some(Err(Error::ExtremumNotUnique {
                first: best.to_string(),
                second: c.to_string(),
                side: if maximum { "maximal" } else { "minimal" },
                family: f.to_string(),
            }));
        }
    }
    Some(Ok(best.clone()))
}

/// Same-type duality: collapse of the transpose. Defined on family
/// partitions; order-reversing, `d^3 = d`, image = special partitions.
pub fn dual_ls(p: &Partition, f: Family) -> Result<Partition> {
    require_type(p, f)?;
    collapse(&p.transpose(), f)
}

fn is_special_unchecked(p: &Partition, f: Family) -> bool {
    let d = collapse(&p.transpose(), f).expect("total preserved by transpose");
    let dd = collapse(&d.transpose(), f).expect("total preserved by transpose");
    dd == *p
}

/// A family partition is special when it is fixed by the squared duality.
pub fn is_special(p: &Partition, f: Family) -> Result<bool> {
    require_type(p, f)?;
    Ok(is_special_unchecked(p, f))
}

/// Dimension of the nilpotent orbit labelled by `p` in the family's algebra.
///
/// With `t` the transpose of `p` and `N` the total:
/// `so(N)` gives `(N^2 - N - sum t_i^2 + #odd parts)/2`, `sp(2n)` gives
/// `(4n^2 + 2n - sum t_i^2 - #odd parts)/2`. Always even for family
/// partitions.
pub fn orbit_dim(p: &Partition, f: Family) -> Result<u64> {
    require_type(p, f)?;
    let n_total = p.total() as i64;
    let sq: i64 = p.transpose().parts().iter().map(|&t| (t * t) as i64).sum();
    let odd = p.odd_part_count() as i64;
    let twice = match f.kind {
        FamilyKind::B | FamilyKind::D => n_total * n_total - n_total - sq + odd,
        FamilyKind::C => n_total * n_total + n_total - sq - odd,
    };
    debug_assert!(twice >= 0 && twice % 2 == 0, "orbit dimension must be an integer");
    let dim = (twice / 2) as u64;
    debug_assert!(dim % 2 == 0, "orbit dimension must be even");
    Ok(dim)
}

/// Dimension of the `gl(N)` orbit of `p`: `N^2 - sum t_i^2`.
pub fn orbit_dim_gl(p: &Partition) -> u64 {
    let n = p.total();
    let sq: u64 = p.transpose().parts().iter().map(|&t| t * t).sum();
    n * n - sq
}

/// All family partitions of `n`, in enumeration order. `n` must equal the
/// family total.
pub fn enumerate_type(n: u64, f: Family) -> Result<impl Iterator<Item = Partition>> {
    if n != f.total() {
        return Err(Error::TotalMismatch {
            left: n,
            right: f.total(),
        });
    }
    Ok(enumerate_partitions(n)?.filter(move |q| parity_ok(q, f.kind)))
}

/// All special family partitions of `n`, in enumeration order.
pub fn enumerate_special(n: u64, f: Family) -> Result<impl Iterator<Item = Partition>> {
    Ok(enumerate_type(n, f)?.filter(move |q| is_special_unchecked(q, f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Relation;

    fn p(lit: &str) -> Partition {
        lit.parse().unwrap()
    }

    fn fam(lit: &str) -> Family {
        lit.parse().unwrap()
    }

    #[test]
    fn family_parsing_and_totals() {
        assert_eq!(fam("B:2"), Family::new(FamilyKind::B, 2));
        assert_eq!(fam("so5"), Family::new(FamilyKind::B, 2));
        assert_eq!(fam("sp12"), Family::new(FamilyKind::C, 6));
        assert_eq!(fam("so12"), Family::new(FamilyKind::D, 6));
        assert_eq!(fam("B:2").total(), 5);
        assert_eq!(fam("C:6").total(), 12);
        assert_eq!(fam("D:6").total(), 12);
        assert!("sp7".parse::<Family>().is_err());
        assert!("E:8".parse::<Family>().is_err());
        assert_eq!(fam("C:6").to_string(), "C:6");
    }

    #[test]
    fn type_membership() {
        assert!(is_type(&p("[5 5 2]"), fam("C:6")));
        assert!(!is_type(&p("[6 3 1]"), fam("D:5")));
        assert!(is_type(&Partition::column(5), fam("B:2")));
        assert!(!is_type(&p("[3 1]"), fam("C:2")));
        assert!(!is_type(&p("[2 1 1]"), fam("D:2")));
        // total mismatch alone disqualifies
        assert!(!is_type(&p("[2 2]"), fam("C:3")));
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(collapse(&p("[5 1]"), fam("C:3")).unwrap(), p("[4 2]"));
        assert_eq!(collapse(&p("[6 3]"), fam("B:4")).unwrap(), p("[5 3 1]"));
        assert_eq!(collapse(&p("[3 1 1]"), fam("B:2")).unwrap(), p("[3 1 1]"));
        assert_eq!(collapse(&p("[2 1 1]"), fam("D:2")).unwrap(), p("[1^4]"));
        assert!(matches!(
            collapse(&p("[5 1]"), fam("C:4")),
            Err(Error::TotalMismatch { .. })
        ));
    }

    #[test]
    fn collapse_agrees_with_extremum() {
        for n in 0..=14u64 {
            let families: Vec<Family> = if n % 2 == 1 {
                vec![Family::new(FamilyKind::B, n / 2)]
            } else {
                vec![
                    Family::new(FamilyKind::C, n / 2),
                    Family::new(FamilyKind::D, n / 2),
                ]
            };
            for f in families {
                for q in enumerate_partitions(n).unwrap() {
                    let fast = collapse(&q, f).unwrap();
                    let brute = collapse_extremum(&q, f).unwrap();
                    assert_eq!(fast, brute, "collapse mismatch at {q} for {f}");
                    assert_eq!(collapse(&fast, f).unwrap(), fast, "collapse not idempotent");
                    assert_eq!(is_type(&q, f), fast == q);
                }
            }
        }
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(expansion(&p("[2 2 1]"), fam("B:2")).unwrap(), p("[3 1 1]"));
        assert_eq!(expansion(&p("[5 5 3]"), fam("B:6")).unwrap(), p("[5 5 3]"));
        assert_eq!(expansion(&p("[4]"), fam("C:2")).unwrap(), p("[4]"));
        // the row [2n] admits no orthogonal partition above it
        assert!(matches!(
            expansion(&p("[4]"), fam("D:2")),
            Err(Error::NoSpecialAbove { .. })
        ));
    }

    #[test]
    fn dual_ls_examples() {
        assert_eq!(dual_ls(&p("[2 2 1]"), fam("B:2")).unwrap(), p("[3 1 1]"));
        assert_eq!(
            dual_ls(&p("[5 5 3 1]"), fam("D:7")).unwrap(),
            p("[3^4 1 1]")
        );
        assert_eq!(dual_ls(&Partition::column(8), fam("C:4")).unwrap(), p("[8]"));
        assert!(matches!(
            dual_ls(&p("[3 1]"), fam("C:2")),
            Err(Error::NotTypePartition { .. })
        ));
    }

    #[test]
    fn specialness_examples() {
        assert!(!is_special(&p("[2 2 1]"), fam("B:2")).unwrap());
        assert!(is_special(&p("[3 1 1]"), fam("B:2")).unwrap());
        assert!(is_special(&p("[2 2]"), fam("C:2")).unwrap());
        assert!(!is_special(&p("[2 1 1]"), fam("C:2")).unwrap());
    }

    #[test]
    fn duality_laws_small() {
        for n in 0..=12u64 {
            let families: Vec<Family> = if n % 2 == 1 {
                vec![Family::new(FamilyKind::B, n / 2)]
            } else {
                vec![
                    Family::new(FamilyKind::C, n / 2),
                    Family::new(FamilyKind::D, n / 2),
                ]
            };
            for f in families {
                let types: Vec<Partition> = enumerate_type(n, f).unwrap().collect();
                for q in &types {
                    let d1 = dual_ls(q, f).unwrap();
                    let d2 = dual_ls(&d1, f).unwrap();
                    let d3 = dual_ls(&d2, f).unwrap();
                    assert_eq!(d3, d1, "d^3 = d fails at {q} for {f}");
                    assert!(is_special(&d1, f).unwrap(), "image must be special");
                    assert_eq!(is_special(q, f).unwrap(), d2 == *q);
                }
            }
        }
    }

    #[test]
    fn expansion_is_least_special_above() {
        for n in 0..=12u64 {
            let families: Vec<Family> = if n % 2 == 1 {
                vec![Family::new(FamilyKind::B, n / 2)]
            } else {
                vec![
                    Family::new(FamilyKind::C, n / 2),
                    Family::new(FamilyKind::D, n / 2),
                ]
            };
            for f in families {
                let specials: Vec<Partition> = enumerate_special(n, f).unwrap().collect();
                for q in enumerate_partitions(n).unwrap() {
                    let above: Vec<Partition> = specials
                        .iter()
                        .filter(|s| q.leq(s).unwrap())
                        .cloned()
                        .collect();
                    let minimal: Vec<&Partition> = above
                        .iter()
                        .filter(|s| above.iter().all(|t| t == *s || !t.leq(s).unwrap()))
                        .collect();
                    match expansion(&q, f) {
                        Ok(e) => {
                            assert_eq!(minimal.len(), 1, "unique minimum expected at {q}");
                            assert_eq!(&e, minimal[0]);
                            assert!(is_special(&e, f).unwrap());
                            assert!(q.leq(&e).unwrap());
                        }
                        Err(Error::NoSpecialAbove { .. }) => {
                            assert!(above.is_empty(), "special set above {q} is nonempty");
                        }
                        Err(Error::ExtremumNotUnique { .. }) => {
                            assert!(minimal.len() >= 2, "no real tie above {q}");
                            // ties never occur on the family domain
                            assert!(!is_type(&q, f), "tie on family partition {q}");
                        }
                        Err(e) => panic!("unexpected error {e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn expansion_tie_off_domain() {
        let q = p("[4 2 1 1]");
        let f = fam("D:4");
        assert!(!is_type(&q, f));
        assert!(matches!(
            expansion(&q, f),
            Err(Error::ExtremumNotUnique { .. })
        ));
        // both [4 4] and [5 1 1 1] are minimal specials above it
        for s in ["[4 4]", "[5 1 1 1]"] {
            let s = p(s);
            assert!(is_special(&s, f).unwrap());
            assert!(q.leq(&s).unwrap());
        }
        assert_eq!(
            p("[4 4]").compare(&p("[5 1 1 1]")).unwrap(),
            Relation::Incomparable
        );
    }

    #[test]
    fn transpose_parity_characterizations() {
        // special C partitions are exactly those with C-parity transpose;
        // for a D partition a D-parity transpose forces both parities, but
        // not conversely ([1 1] carries both parities, its transpose [2]
        // fails D-parity)
        for n in (0..=14u64).step_by(2) {
            let c = Family::new(FamilyKind::C, n / 2);
            for q in enumerate_type(n, c).unwrap() {
                let special = is_special(&q, c).unwrap();
                let tp = q.transpose();
                assert_eq!(special, parity_ok(&tp, FamilyKind::C), "C char at {q}");
            }
            let d = Family::new(FamilyKind::D, n / 2);
            for q in enumerate_type(n, d).unwrap() {
                if parity_ok(&q.transpose(), FamilyKind::D) {
                    assert!(
                        parity_ok(&q, FamilyKind::C) && parity_ok(&q, FamilyKind::D),
                        "D char at {q}"
                    );
                }
            }
        }
        for counterexample in ["[1 1]", "[3 3 1 1]", "[1^8]"] {
            let q = p(counterexample);
            assert!(parity_ok(&q, FamilyKind::C) && parity_ok(&q, FamilyKind::D));
            assert!(!parity_ok(&q.transpose(), FamilyKind::D));
        }
    }

    #[test]
    fn orbit_dimensions() {
        assert_eq!(orbit_dim(&Partition::column(5), fam("B:2")).unwrap(), 0);
        assert_eq!(orbit_dim(&p("[3 1 1]"), fam("B:2")).unwrap(), 6);
        assert_eq!(orbit_dim(&p("[2 2]"), fam("C:2")).unwrap(), 6);
        assert_eq!(orbit_dim_gl(&Partition::column(7)), 0);
        assert_eq!(orbit_dim_gl(&p("[2 1]")), 4);
        for n in 1..=12u64 {
            let b = Family::new(FamilyKind::B, n);
            let c = Family::new(FamilyKind::C, n);
            let d = Family::new(FamilyKind::D, n);
            assert_eq!(orbit_dim(&b.regular_partition(), b).unwrap(), 2 * n * n);
            assert_eq!(orbit_dim(&c.regular_partition(), c).unwrap(), 2 * n * n);
            assert_eq!(
                orbit_dim(&d.regular_partition(), d).unwrap(),
                2 * n * n - 2 * n
            );
            assert_eq!(b.algebra_dim() - n, 2 * n * n);
            assert_eq!(c.algebra_dim() - n, 2 * n * n);
            assert_eq!(d.algebra_dim() - n, 2 * n * n - 2 * n);
        }
        assert!(matches!(
            orbit_dim(&p("[3 1]"), fam("C:2")),
            Err(Error::NotTypePartition { .. })
        ));
    }

    #[test]
    fn enumerate_type_and_special() {
        let c2: Vec<Partition> = enumerate_type(4, fam("C:2")).unwrap().collect();
        assert_eq!(c2, vec![p("[4]"), p("[2 2]"), p("[2 1 1]"), p("[1^4]")]);
        let b2: Vec<Partition> = enumerate_type(5, fam("B:2")).unwrap().collect();
        assert_eq!(b2, vec![p("[5]"), p("[3 1 1]"), p("[2 2 1]"), p("[1^5]")]);
        let b2s: Vec<Partition> = enumerate_special(5, fam("B:2")).unwrap().collect();
        assert_eq!(b2s, vec![p("[5]"), p("[3 1 1]"), p("[1^5]")]);
        assert!(matches!(
            enumerate_type(4, fam("C:3")),
            Err(Error::TotalMismatch { .. })
        ));
    }

    #[test]
    fn dual_is_order_reversing() {
        for n in [8u64, 9, 11, 12] {
            let families: Vec<Family> = if n % 2 == 1 {
                vec![Family::new(FamilyKind::B, n / 2)]
            } else {
                vec![
                    Family::new(FamilyKind::C, n / 2),
                    Family::new(FamilyKind::D, n / 2),
                ]
            };
            for f in families {
                let types: Vec<Partition> = enumerate_type(n, f).unwrap().collect();
                for a in &types {
                    for b in &types {
                        if a.leq(b).unwrap() {
                            let da = dual_ls(a, f).unwrap();
                            let db = dual_ls(b, f).unwrap();
                            assert!(db.leq(&da).unwrap(), "order reversal fails {a} {b}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn very_even_flag() {
        assert!(is_very_even(&p("[4 2 2]")));
        assert!(!is_very_even(&p("[4 3 1]")));
        assert!(!is_very_even(&Partition::empty()));
    }

    #[test]
    fn dim_monotone_under_dominance() {
        for n in [9u64, 10] {
            let families: Vec<Family> = if n % 2 == 1 {
                vec![Family::new(FamilyKind::B, n / 2)]
            } else {
                vec![
                    Family::new(FamilyKind::C, n / 2),
                    Family::new(FamilyKind::D, n / 2),
                ]
            };
            for f in families {
                let types: Vec<Partition> = enumerate_type(n, f).unwrap().collect();
                for a in &types {
                    for b in &types {
                        if a.leq(b).unwrap() {
                            assert!(orbit_dim(a, f).unwrap() <= orbit_dim(b, f).unwrap());
                        }
                    }
                }
            }
        }
    }
}
