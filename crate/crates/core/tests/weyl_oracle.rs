use isoform_core::rootsys::{build_root_system, CartanType, Series};
use isoform_core::weyl::{weyl_order_bfs, weyl_order_closed_form, Method};
use isoform_core::Error;

use Series::*;

fn t(s: Series, n: usize) -> CartanType {
    CartanType::new(s, n)
}

fn bfs(types: &[CartanType]) -> u64 {
    let w = weyl_order_bfs(&build_root_system(types).unwrap()).unwrap();
    assert_eq!(w.method, Method::Bfs);
    w.value
}

#[test]
fn bfs_agrees_with_table_up_to_rank_four() {
    for series in [A, B, C, D, F, G] {
        for rank in 1..=4 {
            let ty = t(series, rank);
            if !ty.is_admissible() {
                continue;
            }
            assert_eq!(bfs(&[ty]), weyl_order_closed_form(&[ty]).unwrap().value, "{ty}");
        }
    }
}

#[test]
fn bfs_agrees_on_larger_types() {
    assert_eq!(bfs(&[t(A, 5)]), 720);
    assert_eq!(bfs(&[t(D, 5)]), 1920);
    assert_eq!(bfs(&[t(E, 6)]), 51_840);
}

#[test]
fn orders_are_multiplicative() {
    let small = [t(A, 1), t(A, 2), t(B, 2), t(G, 2)];
    for &a in &small {
        for &b in &small {
            assert_eq!(bfs(&[a, b]), bfs(&[a]) * bfs(&[b]), "{a}+{b}");
        }
    }
}

#[test]
fn guard_rejects_e7_and_e8() {
    for rank in [7, 8] {
        let rs = build_root_system(&[t(E, rank)]).unwrap();
        assert!(matches!(weyl_order_bfs(&rs), Err(Error::OracleTooLarge(_))));
    }
}
