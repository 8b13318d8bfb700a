//! Randomized checks of structural invariants.

mod support;

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use fusion_forge::cohomology::{dpr_transgression, Cocycle2, Cocycle3};
use fusion_forge::equivariant::{build_category, BuildOptions, RepresentativeChoice};
use fusion_forge::group::{
    catalog, centralizer, conjugacy_classes, diagonal_orbits, double_cosets, FiniteGroup, GroupAction, Subgroup,
};
use fusion_forge::ring::{isomorphic_as_based_rings, FusionRing};
use fusion_forge::root_of_unity;
use support::corpus::{self, Case};

fn groups() -> &'static [FiniteGroup] {
    static CELL: OnceLock<Vec<FiniteGroup>> = OnceLock::new();
    CELL.get_or_init(|| catalog::all_up_to(12).into_iter().map(|n| n.group).collect())
}

fn cases() -> &'static [Case] {
    static CELL: OnceLock<Vec<Case>> = OnceLock::new();
    CELL.get_or_init(corpus::small_corpus)
}

fn subgroups(g: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    Subgroup::all(g.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn orbit_sizes_add_up(gi in 0usize..100, xi in 0usize..100, ai in 0usize..100) {
        let small: Vec<&FiniteGroup> = groups().iter().filter(|g| g.order() <= 8).collect();
        let g = small[gi % small.len()];
        let x = small[xi % small.len()];
        let acts = corpus::actions(g, x);
        let table = acts[ai % acts.len()].clone();
        let action = GroupAction::new(Arc::new(g.clone()), x.order(), table).unwrap();
        let total: usize = action
            .orbits()
            .iter()
            .map(|o| action.orbit_and_stabilizer(o[0]).1.index())
            .sum();
        prop_assert_eq!(total, x.order());
    }

    #[test]
    fn diagonal_orbits_match_double_cosets(gi in 0usize..100, yi in 0usize..1000, zi in 0usize..1000) {
        let g = Arc::new(groups()[gi % groups().len()].clone());
        let subs = subgroups(&g);
        let (gy, gz) = (&subs[yi % subs.len()], &subs[zi % subs.len()]);
        let orbits = diagonal_orbits(&Subgroup::full(g.clone()), gy, gz);
        let dc = double_cosets(gy, gz);
        prop_assert_eq!(orbits.len(), dc.len());
        let hit: BTreeSet<usize> = orbits
            .iter()
            .map(|o| dc.index_of(g.mul(g.inv(o.representative.0), o.representative.1)))
            .collect();
        prop_assert_eq!(hit.len(), dc.len());
        for o in &orbits {
            prop_assert_eq!(o.pairs.len() * o.stabilizer.order(), g.order());
        }
    }

    #[test]
    fn classes_and_centralizers(gi in 0usize..100) {
        let g = Arc::new(groups()[gi % groups().len()].clone());
        let classes = conjugacy_classes(&g);
        let mut by_action = GroupAction::conjugation(g.clone()).orbits();
        by_action.sort();
        let mut sorted = classes.clone();
        sorted.sort();
        prop_assert_eq!(sorted, by_action);
        for c in &classes {
            prop_assert_eq!(c.len() * centralizer(&g, c[0]).order(), g.order());
        }
    }

    #[test]
    fn conjugation_of_factor_sets_composes(gi in 0usize..100, hi in 0usize..1000, t in 0usize..24, u in 0usize..24, seed in any::<u64>()) {
        let g = Arc::new(groups()[gi % groups().len()].clone());
        let subs = subgroups(&g);
        let h = subs[hi % subs.len()].clone();
        let (t, u) = (t % g.order(), u % g.order());
        let f: Vec<_> = (0..g.order()).map(|i| if i == 0 { root_of_unity(0, 1) } else { root_of_unity((seed >> (i % 60)) as i64 % 6, 6) }).collect();
        let alpha = Cocycle2::coboundary(h, |x| f[x]);
        prop_assert!(alpha.validate(1e-9).passed());
        let twice = alpha.conjugate(t).conjugate(u);
        let once = alpha.conjugate(g.mul(u, t));
        prop_assert!(twice.max_deviation(&once) < 1e-12);
        prop_assert!(alpha.conjugate(t).conjugate(g.inv(t)).max_deviation(&alpha) < 1e-12);
    }

    #[test]
    fn transgressed_data_validates(gi in 0usize..100, seed in any::<u64>()) {
        let small: Vec<&FiniteGroup> = groups().iter().filter(|g| g.order() <= 8).collect();
        let g = Arc::new(small[gi % small.len()].clone());
        let n = g.order();
        let beta = |a: usize, b: usize| {
            if a == 0 || b == 0 { root_of_unity(0, 1) } else { root_of_unity((seed.rotate_left((a * n + b) as u32) % 12) as i64, 12) }
        };
        let base = match corpus::cyclic_quotient(&g) {
            Some((k, phi)) => corpus::pulled_back_omega(&g, k, &phi, 1),
            None => Cocycle3::trivial(g.clone()),
        };
        let omega = base.product(&Cocycle3::coboundary(g.clone(), beta)).unwrap();
        prop_assert!(omega.validate(1e-9).passed());
        let data = dpr_transgression(&omega, 1e-9).unwrap().into_action_data();
        prop_assert!(data.validate(1e-9).passed());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn category_invariants(ci in 0usize..100_000, seed in any::<u64>()) {
        let case = &cases()[ci % cases().len()];
        let cat = build_category((*case.data).clone(), &BuildOptions { seed, ..BuildOptions::default() }).unwrap();
        let ring = cat.fusion_table().unwrap();
        prop_assert_eq!(cat.global_dimension(), (cat.group().order() * cat.gamma().order()) as u64);
        let report = ring.verify(false);
        prop_assert!(report.passed(), "{}: {}", case.name, report);
        let unit = ring.unit();
        for i in 0..ring.rank() {
            for j in 0..ring.rank() {
                prop_assert_eq!(ring.n(i, j, unit), u64::from(j == ring.dual(i)));
            }
        }
        let o = BuildOptions { seed: seed ^ 1, representatives: RepresentativeChoice::Seeded(seed), ..BuildOptions::default() };
        let again = build_category((*case.data).clone(), &o).unwrap().fusion_table().unwrap();
        prop_assert!(isomorphic_as_based_rings(&again, &ring).unwrap().is_some(), "{}", case.name);
    }

    #[test]
    fn relabelled_rings_are_isomorphic(gi in 0usize..100, perm_seed in any::<u64>()) {
        let g = &groups()[gi % groups().len()];
        let ring = FusionRing::group_ring(g);
        let r = ring.rank();
        let mut perm: Vec<usize> = (0..r).collect();
        let mut s = perm_seed;
        for i in (1..r).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let other = ring.relabel(&perm);
        let found = isomorphic_as_based_rings(&ring, &other).unwrap();
        prop_assert!(found.is_some());
        prop_assert!(other.verify(g.is_abelian()).passed());
    }

    #[test]
    fn single_entry_mutations_are_flagged(ci in 0usize..100_000, i in 0usize..64, j in 0usize..64, k in 0usize..64, up in any::<bool>()) {
        let case = &cases()[ci % cases().len()];
        let ring = build_category((*case.data).clone(), &BuildOptions::default()).unwrap().fusion_table().unwrap();
        let r = ring.rank();
        let (i, j, k) = (i % r, j % r, k % r);
        let v = ring.n(i, j, k);
        let m = if up || v == 0 { v + 1 } else { v - 1 };
        prop_assert!(!ring.with_entry(i, j, k, m).verify(false).passed());
    }
}
