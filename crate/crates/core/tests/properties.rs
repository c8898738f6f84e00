//! Randomised invariants over small posets.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use posetcon::boolean::{
    boolean_complementation, check_reflexive_compatible_is_boolean_congruence, is_boolean_congruence,
};
use posetcon::checks::{run_checks, Suite};
use posetcon::congruence::{
    class_interval_bounds, is_strong_filter, kernel, quotient_poset, DEFAULT_BRUTE_FORCE_LIMIT,
};
use posetcon::heyting::{check_reflexive_compatible_is_congruence, is_star_congruence, star_table};
use posetcon::random::{random_boolean_poset, random_bounded_poset, random_poset, random_subset};
use posetcon::text::{emit_poset, format_classes, parse_classes, parse_poset};
use posetcon::{
    dot, enumerate_congruences, enumerate_congruences_bruteforce, is_congruence, ConFamily, Poset, Relation,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn any_poset() -> impl Strategy<Value = Poset> {
    (any::<u64>(), 1usize..=7, 0.1f64..0.9).prop_map(|(seed, n, d)| random_poset(&mut rng(seed), n, d))
}

fn bounded_poset() -> impl Strategy<Value = Poset> {
    (any::<u64>(), 0usize..=6, 0.1f64..0.8).prop_map(|(seed, n, d)| random_bounded_poset(&mut rng(seed), n, d))
}

fn boolean_poset() -> impl Strategy<Value = Poset> {
    (any::<u64>(), 1usize..=3).prop_map(|(seed, k)| random_boolean_poset(&mut rng(seed), k))
}

/// A family member with a few extra pairs, reflexive by construction.
fn perturbed_member(p: &Poset, family: &ConFamily, seed: u64) -> Relation {
    let mut r = rng(seed);
    let mut rel = if family.is_empty() {
        Relation::diagonal(p.len())
    } else {
        family.get(r.gen_range(0..family.len())).to_relation()
    };
    for _ in 0..r.gen_range(0..3) {
        let (x, y) = (r.gen_range(0..p.len()), r.gen_range(0..p.len()));
        rel.insert(x, y);
    }
    rel
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn interval_search_matches_bruteforce(p in any_poset()) {
        let fast = enumerate_congruences(&p);
        let slow = enumerate_congruences_bruteforce(&p, DEFAULT_BRUTE_FORCE_LIMIT).unwrap();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn bounded_posets_have_trivial_congruences(p in bounded_poset()) {
        let family = enumerate_congruences(&p);
        prop_assert!(family.members().iter().any(|m| m.is_delta()));
        prop_assert!(family.members().iter().any(|m| m.is_nabla()));
        prop_assert!(family.get(0).is_delta());
    }

    #[test]
    fn congruence_classes_are_intervals(p in any_poset()) {
        for theta in enumerate_congruences(&p).members() {
            prop_assert!(is_congruence(&p, theta));
            for x in 0..p.len() {
                let (lo, hi) = class_interval_bounds(&p, theta, x).unwrap();
                prop_assert_eq!(p.interval(lo, hi), theta.class(x));
            }
        }
    }

    #[test]
    fn cones_form_a_galois_connection(p in any_poset(), seed in any::<u64>()) {
        let a = random_subset(&mut rng(seed), &p);
        let b = a.union(random_subset(&mut rng(seed ^ 1), &p));
        prop_assert!(a.is_subset(p.lower_cone(p.upper_cone(a))));
        prop_assert!(a.is_subset(p.upper_cone(p.lower_cone(a))));
        prop_assert_eq!(p.upper_cone(p.lower_cone(p.upper_cone(a))), p.upper_cone(a));
        prop_assert!(p.lower_cone(b).is_subset(p.lower_cone(a)));
        prop_assert!(p.upper_cone(b).is_subset(p.upper_cone(a)));
        prop_assert!(p.max_l(a).is_subset(p.lower_cone(a)));
        prop_assert!(p.min_u(a).is_subset(p.upper_cone(a)));
    }

    #[test]
    fn kernels_are_strong_filters(p in bounded_poset()) {
        for theta in enumerate_congruences(&p).members() {
            prop_assert!(is_strong_filter(&p, kernel(&p, theta).unwrap()));
        }
    }

    #[test]
    fn quotients_embed(p in bounded_poset()) {
        for theta in enumerate_congruences(&p).members() {
            let q = quotient_poset(&p, theta).unwrap();
            prop_assert_eq!(q.poset.len(), theta.num_classes());
            prop_assert!(q.greatest_order_agrees(&p));
        }
    }

    #[test]
    fn family_meets_and_joins_are_bounds(p in bounded_poset()) {
        let family = enumerate_congruences(&p);
        for i in 0..family.len() {
            for j in 0..family.len() {
                if let Some(m) = family.meet(i, j) {
                    prop_assert!(family.leq(m, i) && family.leq(m, j));
                }
                if let Some(m) = family.join(i, j) {
                    prop_assert!(family.leq(i, m) && family.leq(j, m));
                }
            }
        }
    }

    #[test]
    fn check_suite_passes(p in bounded_poset()) {
        let report = run_checks("random", &p, Suite::All);
        prop_assert!(report.all_passed(), "{}", report);
    }

    #[test]
    fn check_suite_passes_without_bounds(p in any_poset()) {
        let report = run_checks("random", &p, Suite::All);
        prop_assert!(report.all_passed(), "{}", report);
    }

    #[test]
    fn compatible_reflexive_relations_are_star_congruences(p in bounded_poset(), seed in any::<u64>()) {
        if let Some(star) = star_table(&p) {
            let family = enumerate_congruences(&p);
            let r = perturbed_member(&p, &family, seed);
            let verdict = check_reflexive_compatible_is_congruence(&p, &star, &r).unwrap();
            prop_assert!(verdict.consistent());
            if verdict.hypothesis_holds() {
                let theta = posetcon::EquivRelation::from_relation(&r).unwrap();
                prop_assert!(is_star_congruence(&p, &star, &theta));
            }
        }
    }

    #[test]
    fn boolean_posets_check_out(p in boolean_poset(), seed in any::<u64>()) {
        let comp = boolean_complementation(&p).unwrap();
        let family = enumerate_congruences(&p);
        let r = perturbed_member(&p, &family, seed);
        let verdict = check_reflexive_compatible_is_boolean_congruence(&p, &comp, &r).unwrap();
        prop_assert!(verdict.consistent());
        if verdict.hypothesis_holds() {
            let theta = posetcon::EquivRelation::from_relation(&r).unwrap();
            prop_assert!(is_boolean_congruence(&p, &comp, &theta));
        }
        let report = run_checks("boolean", &p, Suite::Boolean);
        prop_assert!(report.all_passed(), "{}", report);
    }

    #[test]
    fn text_round_trip(p in any_poset()) {
        let doc = parse_poset(&emit_poset("rt", &p)).unwrap();
        let q = doc.poset;
        prop_assert_eq!(q.labels(), p.labels());
        for i in 0..p.len() {
            for j in 0..p.len() {
                prop_assert_eq!(q.leq(i, j), p.leq(i, j));
            }
        }
    }

    #[test]
    fn class_lists_round_trip(p in bounded_poset()) {
        for theta in enumerate_congruences(&p).members() {
            prop_assert_eq!(&parse_classes(&p, &format_classes(&p, theta)).unwrap(), theta);
        }
    }

    #[test]
    fn hasse_dot_has_one_edge_per_cover(p in any_poset()) {
        let text = dot::poset_dot("p", &p);
        prop_assert_eq!(text.matches("->").count(), p.hasse_edges().len());
        prop_assert_eq!(text, dot::poset_dot("p", &p));
    }
}
