//! Property-based invariants on randomly chosen partitions.

use proptest::prelude::*;

use orbitcalc::classical::{self, Family, FamilyKind};
use orbitcalc::partition::{enumerate_partitions, Partition, Relation};

fn arb_parts() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0i64..=9, 0..12)
}

/// A uniformly indexed partition of exact total `n`.
fn partition_of(n: u64) -> impl Strategy<Value = Partition> {
    let count = enumerate_partitions(n).unwrap().count();
    (0..count).prop_map(move |i| enumerate_partitions(n).unwrap().nth(i).unwrap())
}

fn family_with_partition() -> impl Strategy<Value = (Family, Partition)> {
    (1u64..=8, 0usize..3).prop_flat_map(|(rank, k)| {
        let kind = [FamilyKind::B, FamilyKind::C, FamilyKind::D][k];
        let f = Family::new(kind, rank);
        partition_of(f.total()).prop_map(move |p| (f, p))
    })
}

proptest! {
    #[test]
    fn transpose_is_involutive(parts in arb_parts()) {
        let p = Partition::new(parts).unwrap();
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(p.transpose().total(), p.total());
    }

    #[test]
    fn literal_round_trips(parts in arb_parts()) {
        let p = Partition::new(parts).unwrap();
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn join_totals_add_and_commute(a in arb_parts(), b in arb_parts()) {
        let pa = Partition::new(a).unwrap();
        let pb = Partition::new(b).unwrap();
        let ab = Partition::join([&pa, &pb]);
        prop_assert_eq!(ab.total(), pa.total() + pb.total());
        prop_assert_eq!(ab, Partition::join([&pb, &pa]));
    }

    #[test]
    fn one_box_moves_total_by_one(parts in arb_parts()) {
        let p = Partition::new(parts).unwrap();
        prop_assert_eq!(p.increment_max().total(), p.total() + 1);
        if !p.is_empty() {
            prop_assert_eq!(p.decrement_min().unwrap().total(), p.total() - 1);
        }
    }

    #[test]
    fn transpose_reverses_dominance(n in 2u64..=14, seed in any::<prop::sample::Index>()) {
        let all: Vec<Partition> = enumerate_partitions(n).unwrap().collect();
        let a = &all[seed.index(all.len())];
        for b in &all {
            let fwd = a.compare(b).unwrap();
            let rev = b.transpose().compare(&a.transpose()).unwrap();
            prop_assert_eq!(fwd == Relation::Less, rev == Relation::Less);
            prop_assert_eq!(fwd == Relation::Equal, rev == Relation::Equal);
        }
    }

    #[test]
    fn collapse_is_a_lower_closure((f, p) in family_with_partition()) {
        let c = classical::collapse(&p, f).unwrap();
        prop_assert!(classical::is_type(&c, f));
        prop_assert!(c.leq(&p).unwrap());
        prop_assert_eq!(classical::collapse(&c, f).unwrap(), c.clone());
        prop_assert_eq!(classical::is_type(&p, f), c == p);
    }

    #[test]
    fn expansion_is_an_upper_closure_on_specials((f, p) in family_with_partition()) {
        if let Ok(e) = classical::expansion(&p, f) {
            prop_assert!(classical::is_special(&e, f).unwrap());
            prop_assert!(p.leq(&e).unwrap());
            prop_assert_eq!(classical::expansion(&e, f).unwrap(), e.clone());
        }
    }

    #[test]
    fn duality_stabilizes_after_one_step((f, p) in family_with_partition()) {
        prop_assume!(classical::is_type(&p, f));
        let d1 = classical::dual_ls(&p, f).unwrap();
        let d2 = classical::dual_ls(&d1, f).unwrap();
        let d3 = classical::dual_ls(&d2, f).unwrap();
        prop_assert_eq!(d3, d1.clone());
        prop_assert!(classical::is_special(&d1, f).unwrap());
    }
}
