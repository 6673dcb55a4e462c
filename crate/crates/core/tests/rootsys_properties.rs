use isoform_core::linalg::{int, Vector};
use isoform_core::rootsys::{
    build_root_system, canonicalize, cartan_integer, classify_simple_roots, reflect, root_count_closed_form,
    CartanType, Series,
};
use proptest::prelude::*;

fn all_types_up_to(max_rank: usize) -> Vec<CartanType> {
    let mut out = Vec::new();
    for series in [
        Series::A,
        Series::B,
        Series::C,
        Series::D,
        Series::E,
        Series::F,
        Series::G,
    ] {
        for rank in 1..=max_rank {
            let t = CartanType::new(series, rank);
            if t.is_admissible() {
                out.push(t);
            }
        }
    }
    out
}

#[test]
fn closure_counts_match_closed_forms() {
    for t in all_types_up_to(8) {
        let rs = build_root_system(&[t]).unwrap();
        assert_eq!(rs.roots().len(), root_count_closed_form(t).unwrap(), "{t}");
    }
}

#[test]
fn every_irreducible_system_satisfies_the_axioms() {
    for t in all_types_up_to(8) {
        build_root_system(&[t])
            .unwrap()
            .validate()
            .unwrap_or_else(|e| panic!("{t}: {e}"));
    }
}

#[test]
fn classification_round_trips() {
    for t in all_types_up_to(8) {
        let rs = build_root_system(&[t]).unwrap();
        assert_eq!(classify_simple_roots(rs.simple_roots()).unwrap(), t.canonical(), "{t}");
    }
}

#[test]
fn positive_roots_are_half() {
    for t in all_types_up_to(6) {
        let rs = build_root_system(&[t]).unwrap();
        assert_eq!(2 * rs.positive_roots().len(), rs.roots().len(), "{t}");
    }
}

fn cartan_type() -> impl Strategy<Value = CartanType> {
    prop::sample::select(all_types_up_to(5))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sums_round_trip(types in prop::collection::vec(cartan_type(), 1..=3)) {
        prop_assume!(types.iter().map(|t| t.rank).sum::<usize>() <= 8);
        let rs = build_root_system(&types).unwrap();
        prop_assert_eq!(classify_simple_roots(rs.simple_roots()).unwrap(), canonicalize(&types));
        let expected: usize = types.iter().map(|&t| root_count_closed_form(t).unwrap()).sum();
        prop_assert_eq!(rs.roots().len(), expected);
    }

    #[test]
    fn reflections_are_involutive_isometries(
        t in cartan_type(),
        coords in prop::collection::vec(-6i64..=6, 9),
        pick in any::<prop::sample::Index>(),
    ) {
        let rs = build_root_system(&[t]).unwrap();
        let roots: Vec<&Vector> = rs.roots().iter().collect();
        let alpha = roots[pick.index(roots.len())];
        let x = Vector::from_halves(&coords[..rs.ambient_dim()]);
        let once = reflect(&x, alpha).unwrap();
        prop_assert_eq!(reflect(&once, alpha).unwrap(), x.clone());
        prop_assert_eq!(once.norm2(), x.norm2());
        prop_assert_eq!(reflect(alpha, alpha).unwrap(), -alpha);
    }

    #[test]
    fn root_pairs_are_integral_and_closed(t in cartan_type(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let rs = build_root_system(&[t]).unwrap();
        let roots: Vec<&Vector> = rs.roots().iter().collect();
        let (a, b) = (roots[i.index(roots.len())], roots[j.index(roots.len())]);
        let c = cartan_integer(a, b).unwrap();
        prop_assert!((-3..=3).contains(&c) || a == b || a == &-b);
        prop_assert!(rs.contains(&reflect(b, a).unwrap()));
        prop_assert!(!rs.contains(&a.scale(int(2))));
    }
}
