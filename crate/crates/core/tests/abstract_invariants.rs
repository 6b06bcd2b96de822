//! Structural invariants checked on randomly chosen groups.

use centra_core::centralizers::{
    cent_profile, cent_set, center, centralizer_elem, delta, is_ca_group, max_noncommuting_set, two_cent,
    two_cent_naive,
};
use centra_core::constructions::{direct_product, parse_spec};
use centra_core::isomorphism::{find_isomorphism, fingerprint};
use centra_core::todd_coxeter::{presented_group, Presentation};
use centra_core::{CentProfile, Group, GroupSpec};
use proptest::prelude::*;

fn small_spec() -> impl Strategy<Value = String> {
    prop_oneof![
        (2usize..13).prop_map(|n| format!("C({n})")),
        (3usize..13).prop_map(|n| format!("D({})", 2 * n)),
        (2usize..7).prop_map(|n| format!("T({n})")),
        (2usize..4).prop_map(|n| format!("SD({n})")),
        (1usize..4).prop_map(|n| format!("V({n})")),
        (1usize..4, 1usize..7).prop_map(|(n, m)| format!("U({n},{m})")),
        (3usize..5).prop_map(|n| format!("S({n})")),
        Just("A(4)".to_string()),
        (1usize..5).prop_map(|k| format!("EA(2,{k})")),
        (3usize..10).prop_map(|n| format!("Hol({n})")),
        Just("R".to_string()),
        Just("G21".to_string()),
        Just("Heis(3)".to_string()),
    ]
}

fn build(spec: &str) -> Group {
    parse_spec(spec).unwrap().build().unwrap()
}

/// The same group with its non-identity elements shuffled.
fn relabel(g: &Group, seed: u64) -> (Group, Vec<usize>) {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm[1..].shuffle(&mut rng);
    let mut table = vec![vec![0; g.order()]; g.order()];
    for a in g.elements() {
        for b in g.elements() {
            table[perm[a]][perm[b]] = perm[g.mul(a, b)];
        }
    }
    (Group::from_cayley_table(table).unwrap(), perm)
}

fn same_invariants(a: &CentProfile, b: &CentProfile) -> bool {
    let mut b = b.clone();
    b.group_spec = a.group_spec.clone();
    *a == b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fast_two_cent_matches_enumeration(spec in small_spec()) {
        let g = build(&spec);
        prop_assert_eq!(two_cent(&g).unwrap(), two_cent_naive(&g).unwrap());
    }

    #[test]
    fn centralizer_sets_nest(spec in small_spec()) {
        let g = build(&spec);
        let cent = cent_set(&g);
        let two = two_cent(&g).unwrap();
        let z = center(&g);
        if g.is_abelian() {
            prop_assert_eq!(cent.len(), 1);
            prop_assert_eq!(two.len(), 1);
        } else if z.len() > 1 {
            prop_assert!(cent.is_subset(&two) && cent.len() < two.len());
            prop_assert!(!cent.contains(&z));
        } else {
            prop_assert!(cent.len() <= two.len());
            prop_assert!(!two.contains(&g.full_set()));
        }
        for c in &two {
            prop_assert!(g.is_subgroup(c));
            prop_assert!(z.is_subset(c));
        }
    }

    #[test]
    fn centralizers_are_subgroups_containing_the_element(spec in small_spec(), pick in any::<prop::sample::Index>()) {
        let g = build(&spec);
        let x = pick.index(g.order());
        let c = centralizer_elem(&g, x);
        prop_assert!(g.is_subgroup(&c));
        prop_assert!(c.contains(x));
        prop_assert_eq!(c.is_full(), center(&g).contains(x));
    }

    #[test]
    fn profile_survives_relabeling(spec in small_spec(), seed in any::<u64>()) {
        let g = build(&spec);
        let (h, perm) = relabel(&g, seed);
        let a = cent_profile(&g, &spec).unwrap();
        let b = cent_profile(&h, "relabeled").unwrap();
        prop_assert!(same_invariants(&a, &b), "{:?} vs {:?}", a, b);
        prop_assert_eq!(fingerprint(&g), fingerprint(&h));
        let map = find_isomorphism(&g, &h).expect("relabeling is an isomorphism");
        for x in g.elements() {
            for y in g.elements() {
                prop_assert_eq!(map[g.mul(x, y)], h.mul(map[x], map[y]));
            }
        }
        prop_assert_eq!(h.mul(perm[1 % g.order()], 0), perm[1 % g.order()]);
    }

    #[test]
    fn ca_biconditional(spec in small_spec()) {
        let g = build(&spec);
        prop_assume!(!g.is_abelian());
        let p = cent_profile(&g, &spec).unwrap();
        let (r, witness) = max_noncommuting_set(&g).unwrap();
        prop_assert_eq!(Some(r), p.r);
        let w: Vec<usize> = witness.iter().collect();
        for (i, &a) in w.iter().enumerate() {
            for &b in &w[i + 1..] {
                prop_assert!(!g.commute(a, b));
            }
        }
        let target = r + 1 + usize::from(p.center_order > 1);
        prop_assert_eq!(is_ca_group(&g), p.n_2cent == target);
        prop_assert_eq!(is_ca_group(&g), p.n_cent == r + 1);
        if p.is_ca {
            prop_assert_eq!(p.n_2cent, p.n_cent + usize::from(p.center_order > 1));
        }
    }

    #[test]
    fn product_counts(a in small_spec(), b in small_spec()) {
        let (h, k) = (build(&a), build(&b));
        prop_assume!(h.order() * k.order() <= 200);
        let prod = direct_product(&h, &k).unwrap();
        prop_assert_eq!(cent_set(&prod).len(), cent_set(&h).len() * cent_set(&k).len());
        let (th, tk) = (two_cent(&h).unwrap().len(), two_cent(&k).unwrap().len());
        let (dh, dk) = (usize::from(delta(&h)), usize::from(delta(&k)));
        prop_assert_eq!(two_cent_naive(&prod).unwrap().len(), th * tk + dk * th + dh * tk);
        prop_assert_eq!(delta(&prod), delta(&h) * delta(&k));
    }

    #[test]
    fn spec_text_round_trips(spec in small_spec()) {
        let parsed: GroupSpec = spec.parse().unwrap();
        prop_assert_eq!(parsed.to_string(), spec.clone());
        prop_assert_eq!(parsed.expected_order(), Some(build(&spec).order()));
    }

    #[test]
    fn profile_json_round_trips(spec in small_spec()) {
        let p = cent_profile(&build(&spec), &spec).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        let back: CentProfile = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(p, back);
    }

    #[test]
    fn dihedral_presentations(n in 3usize..30) {
        let pres = Presentation::parse(&["a", "b"], &[&format!("a^{n}"), "b^2", "a b a b"], Some(2 * n)).unwrap();
        let g = presented_group(&pres).unwrap();
        let dihedral = build(&format!("D({})", 2 * n));
        prop_assert!(find_isomorphism(&g, &dihedral).is_some());
    }
}
