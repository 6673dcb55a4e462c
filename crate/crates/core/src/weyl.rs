//! Weyl group orders: closed-form table and a brute-force group closure.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, as_integer};
use crate::rootsys::{reflect, CartanType, RootSystem, Series};

/// Largest group the brute-force closure is allowed to enumerate.
pub const BFS_ORDER_LIMIT: u64 = 1_000_000;
/// Largest rank the brute-force closure accepts.
pub const BFS_RANK_LIMIT: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Bfs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylOrder {
    pub value: u64,
    pub method: Method,
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// |W| of one irreducible factor. B1 and C1 are accepted here (both have
/// Weyl group of order 2) since they occur as factors of symmetric subgroups
/// like so(3) ⊕ so(5).
fn irreducible_order(t: CartanType) -> Result<u64> {
    let n = t.rank as u64;
    let ok = match t.series {
        Series::B | Series::C => n >= 1,
        _ => t.is_admissible(),
    };
    if !ok {
        return Err(Error::UnsupportedType(t));
    }
    Ok(match t.series {
        Series::A => factorial(n + 1),
        Series::B | Series::C => (1u64 << n) * factorial(n),
        Series::D => (1u64 << (n - 1)) * factorial(n),
        Series::E => [51_840, 2_903_040, 696_729_600][t.rank - 6],
        Series::F => 1152,
        Series::G => 12,
    })
}

pub fn weyl_order_closed_form(components: &[CartanType]) -> Result<WeylOrder> {
    let mut value: u64 = 1;
    for &t in components {
        value = value
            .checked_mul(irreducible_order(t)?)
            .ok_or_else(|| Error::OracleTooLarge("Weyl order overflows u64".into()))?;
    }
    Ok(WeylOrder {
        value,
        method: Method::ClosedForm,
    })
}

/// Integer matrices of the simple reflections in the basis of simple roots.
///
/// Entries are computed exactly over the rationals and must come out
/// integral, which holds for any crystallographic system.
pub fn simple_reflection_matrices(rs: &RootSystem) -> Result<Vec<Vec<i64>>> {
    let simple = rs.simple_roots();
    let n = simple.len();
    simple
        .iter()
        .map(|alpha| {
            let mut m = vec![0i64; n * n];
            for (j, beta) in simple.iter().enumerate() {
                let image = reflect(beta, alpha)?;
                let coords = linalg::coordinates(simple, &image)
                    .ok_or_else(|| Error::Linear("reflected root left the simple span".into()))?;
                for (i, c) in coords.iter().enumerate() {
                    m[i * n + j] =
                        as_integer(c).ok_or_else(|| Error::Linear(format!("non-integral reflection entry {c}")))?;
                }
            }
            Ok(m)
        })
        .collect()
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += x * b[k * n + j];
            }
        }
    }
    out
}

/// Enumerates the group generated by the simple reflections breadth first
/// and returns its order.
pub fn weyl_order_bfs(rs: &RootSystem) -> Result<WeylOrder> {
    let n = rs.rank();
    if n > BFS_RANK_LIMIT {
        return Err(Error::OracleTooLarge(format!(
            "rank {n} exceeds the limit of {BFS_RANK_LIMIT}"
        )));
    }
    let predicted = weyl_order_closed_form(rs.components())?.value;
    if predicted > BFS_ORDER_LIMIT {
        return Err(Error::OracleTooLarge(format!(
            "predicted order {predicted} exceeds {BFS_ORDER_LIMIT}"
        )));
    }
    if n == 0 {
        return Ok(WeylOrder {
            value: 1,
            method: Method::Bfs,
        });
    }
    let gens = simple_reflection_matrices(rs)?;
    let identity: Vec<i64> = (0..n * n).map(|k| i64::from(k % (n + 1) == 0)).collect();

    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for s in &gens {
                let h = mat_mul(g, s, n);
                if !seen.contains(&h) {
                    if seen.len() as u64 >= BFS_ORDER_LIMIT {
                        return Err(Error::OracleTooLarge("closure exceeded the order limit".into()));
                    }
                    seen.insert(h.clone());
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    Ok(WeylOrder {
        value: seen.len() as u64,
        method: Method::Bfs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;
    use Series::*;

    fn t(s: Series, n: usize) -> CartanType {
        CartanType::new(s, n)
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(weyl_order_closed_form(&[t(C, 4)]).unwrap().value, 384);
        assert_eq!(weyl_order_closed_form(&[t(F, 4)]).unwrap().value, 1152);
        assert_eq!(weyl_order_closed_form(&[t(D, 2)]).unwrap().value, 4);
        assert_eq!(weyl_order_closed_form(&[t(B, 1), t(B, 2)]).unwrap().value, 16);
        assert_eq!(weyl_order_closed_form(&[]).unwrap().value, 1);
        assert_eq!(weyl_order_closed_form(&[t(E, 8)]).unwrap().value, 696_729_600);
        assert!(weyl_order_closed_form(&[t(E, 5)]).is_err());
        assert!(weyl_order_closed_form(&[t(D, 1)]).is_err());
    }

    #[test]
    fn bfs_small() {
        let bfs = |ty: &[CartanType]| weyl_order_bfs(&build_root_system(ty).unwrap()).unwrap().value;
        assert_eq!(bfs(&[t(A, 1)]), 2);
        assert_eq!(bfs(&[t(A, 2)]), 6);
        assert_eq!(bfs(&[t(D, 2)]), 4);
        assert_eq!(bfs(&[t(B, 2), t(A, 1)]), 16);
        assert_eq!(bfs(&[t(G, 2)]), 12);
    }

    #[test]
    fn bfs_guard() {
        let e7 = build_root_system(&[t(E, 7)]).unwrap();
        assert!(matches!(weyl_order_bfs(&e7), Err(Error::OracleTooLarge(_))));
        let a6 = build_root_system(&[t(A, 3), t(A, 3)]).unwrap();
        assert!(matches!(weyl_order_bfs(&a6), Ok(w) if w.value == 576));
    }
}
