use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use isoform_core::catalog::{Catalog, Parity, SymmetricPairEntry};
use isoform_core::diagram::fold;
use isoform_core::involution::PairCase;
use isoform_core::linalg::{coordinates, int, Vector};
use isoform_core::rootsys::{cartan_integer, reflect, CartanType, Series};
use isoform_core::weyl::weyl_order_bfs;
use isoform_core::{build_restricted, Error, InvolutionName};

use Series::*;

/// Every catalog template instantiated at up to three admissible values of
/// each parameter.
fn catalog_entries() -> Vec<SymmetricPairEntry> {
    let catalog = Catalog::embedded();
    let mut out = Vec::new();
    for t in catalog.templates() {
        let mut combos: Vec<BTreeMap<String, i64>> = vec![BTreeMap::new()];
        for (name, range) in &t.params {
            let values: Vec<i64> = (range.min..range.min + 6)
                .filter(|v| match range.parity {
                    Some(Parity::Even) => v % 2 == 0,
                    Some(Parity::Odd) => v % 2 != 0,
                    None => true,
                })
                .take(3)
                .collect();
            combos = combos
                .into_iter()
                .flat_map(|c| {
                    values.iter().map(move |&v| {
                        let mut c = c.clone();
                        c.insert(name.clone(), v);
                        c
                    })
                })
                .collect();
        }
        for params in combos {
            out.push(catalog.instantiate(&t.label, &params).unwrap());
        }
    }
    out
}

#[test]
fn axiom_suite_on_every_catalog_involution() {
    for entry in catalog_entries() {
        let name = entry.display_name();
        let inv = entry.involution().unwrap();
        inv.check_isometry().unwrap();
        let rrs = build_restricted(&inv).unwrap_or_else(|e| panic!("{name}: {e}"));
        let roots = rrs.roots();

        for b in roots {
            assert!(!b.is_zero(), "{name}");
            assert!(roots.contains(&-b), "{name}: ±{b}");
            for c in roots {
                cartan_integer(b, c).unwrap_or_else(|e| panic!("{name}: {e}"));
                assert!(roots.contains(&reflect(c, b).unwrap()), "{name}: s_{b}({c})");
            }
            let coeffs = coordinates(rrs.simple_roots(), b).unwrap();
            assert!(coeffs.iter().all(|c| c.is_integer()), "{name}: {b}");
            assert!(
                coeffs.iter().all(|c| !c.is_negative()) || coeffs.iter().all(|c| !c.is_positive()),
                "{name}: {b} has mixed signs"
            );
        }

        let mut has_minus1 = false;
        for alpha in inv.base().roots() {
            let hk = inv.restrict_root(alpha).unwrap();
            let hp = inv.t_p_part(alpha);
            assert_eq!(hk, inv.restrict_root(&inv.apply(alpha)).unwrap(), "{name}");
            let case = inv.pair_case(alpha).unwrap_or_else(|e| panic!("{name}: {e}"));
            let ratio = match case {
                PairCase::Fixed => 0,
                PairCase::Orthogonal => 1,
                PairCase::Minus1 => {
                    has_minus1 = true;
                    3
                }
            };
            assert_eq!(hp.norm2(), hk.norm2() * int(ratio), "{name}: {alpha}");
        }
        assert_eq!(has_minus1, rrs.is_nonreduced(), "{name}");
    }
}

#[test]
fn torus_split_matches_catalog_ranks() {
    for entry in catalog_entries() {
        let split = entry.involution().unwrap().split_torus();
        assert_eq!(split.dim_k() as u32, entry.rank_k, "{}", entry.display_name());
        assert_eq!(split.dim_k() + split.dim_p(), entry.rank_g as usize);
        for k in &split.t_k_basis {
            for p in &split.t_p_basis {
                assert!(k.dot(p).is_zero());
            }
        }
    }
}

#[test]
fn compartment_counts_cross_checked() {
    for entry in catalog_entries() {
        let name = entry.display_name();
        let rrs = build_restricted(&entry.involution().unwrap()).unwrap();
        let total = rrs.total_compartments();
        // large groups are covered by the oracle tests
        if total > 5000 {
            continue;
        }
        match weyl_order_bfs(rrs.reduced()) {
            Ok(w) => assert_eq!(w.value, total, "{name}"),
            Err(Error::OracleTooLarge(_)) => continue,
            Err(e) => panic!("{name}: {e}"),
        }
        assert_eq!(rrs.chamber_count_by_orbit(100_000).unwrap(), total, "{name}");
    }
}

#[test]
fn fold_table() {
    let folded = |s: Series, n: usize, inv: InvolutionName| fold(&[CartanType::new(s, n)], inv).unwrap();
    // A_{2m-1} → C_m, with C2 written as B2
    let f = folded(A, 3, InvolutionName::Flip);
    assert_eq!(
        (f.kprime_type.clone(), f.nonreduced),
        (vec![CartanType::new(B, 2)], false)
    );
    let f = folded(A, 5, InvolutionName::Flip);
    assert_eq!(
        (f.kprime_type.clone(), f.nonreduced),
        (vec![CartanType::new(C, 3)], false)
    );
    // A_{2m} → BC_m with reduced B_m, B1 written as A1
    let f = folded(A, 2, InvolutionName::Flip);
    assert_eq!(
        (f.kprime_type.clone(), f.nonreduced),
        (vec![CartanType::new(A, 1)], true)
    );
    let f = folded(A, 4, InvolutionName::Flip);
    assert_eq!(
        (f.kprime_type.clone(), f.nonreduced),
        (vec![CartanType::new(B, 2)], true)
    );
    // D_n → B_{n-1}
    for n in 3..=5 {
        let f = folded(D, n, InvolutionName::ForkSwap);
        assert_eq!(f.kprime_type, vec![CartanType::new(B, n - 1)], "D{n}");
        assert!(!f.nonreduced);
    }
    let f = folded(E, 6, InvolutionName::Flip);
    assert_eq!(f.kprime_type, vec![CartanType::new(F, 4)]);
    assert_eq!(f.total_compartments, 1152);
}

#[test]
fn folded_a3_matches_hand_computation() {
    let f = fold(&[CartanType::new(A, 3)], InvolutionName::Flip).unwrap();
    let simple: Vec<Vector> = f
        .folded
        .nodes
        .iter()
        .map(|n| Vector::new(n.coords.iter().map(|c| c.parse().unwrap()).collect()))
        .collect();
    assert_eq!(simple[0], Vector::from_halves(&[1, -1, 1, -1]));
    assert_eq!(simple[1], Vector::from_ints(&[0, 1, -1, 0]));
    assert_eq!(f.restricted_root_count, 8);
}
