//! Restriction of a root system to the σ-fixed part of the torus.
//!
//! Every axiom of a (possibly nonreduced) root system is checked on the
//! restricted set when it is built. Nonreduced components (type BC) are kept
//! as "reduced type plus flag": the Weyl group of BC_n equals that of B_n.

use std::collections::{BTreeSet, VecDeque};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::involution::{DiagramInvolution, TorusSplit};
use crate::linalg::{self, as_integer, int, rat, Vector};
use crate::rootsys::{cartan_integer, component_labels, reflect, CartanType, RootSystem};
use crate::weyl::weyl_order_closed_form;

#[derive(Clone, Debug)]
pub struct RestrictedRootSystem {
    carrier: TorusSplit,
    restricted_roots: BTreeSet<Vector>,
    restricted_simple: Vec<Vector>,
    nonreduced_components: BTreeSet<usize>,
    reduced: RootSystem,
    kprime_type: Vec<CartanType>,
}

/// Integer coordinates of one restricted root in the restricted simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityRow {
    pub root: Vec<String>,
    pub coefficients: Vec<i64>,
    pub positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    pub rows: Vec<PositivityRow>,
}

impl PositivityReport {
    pub fn coefficients_of(&self, root: &Vector) -> Option<&[i64]> {
        let key = root.to_strings();
        self.rows
            .iter()
            .find(|r| r.root == key)
            .map(|r| r.coefficients.as_slice())
    }
}

fn axiom(msg: String) -> Error {
    Error::AxiomViolation(msg)
}

pub fn build_restricted(inv: &DiagramInvolution) -> Result<RestrictedRootSystem> {
    let base = inv.base();
    let carrier = inv.split_torus();

    let mut restricted_roots = BTreeSet::new();
    for alpha in base.roots() {
        restricted_roots.insert(inv.restrict_root(alpha)?);
    }

    let mut restricted_simple: Vec<Vector> = Vec::new();
    for orbit in inv.orbits() {
        let h = inv.restrict_root(&base.simple_roots()[orbit[0]])?;
        if !restricted_simple.contains(&h) {
            restricted_simple.push(h);
        }
    }

    // symmetry, span and integrality
    for b in &restricted_roots {
        if b.is_zero() {
            return Err(axiom("zero among restricted roots".into()));
        }
        if !restricted_roots.contains(&-b) {
            return Err(axiom(format!("{b} restricted but not its negative")));
        }
        if linalg::coordinates(&carrier.t_k_basis, b).is_none() {
            return Err(axiom(format!("{b} does not lie in t_k")));
        }
        for c in &restricted_roots {
            cartan_integer(b, c).map_err(|e| axiom(format!("pair ({b}, {c}): {e}")))?;
            if !restricted_roots.contains(&reflect(c, b)?) {
                return Err(axiom(format!("reflection of {c} in {b} leaves the set")));
            }
        }
    }
    if restricted_simple.len() != carrier.dim_k() || linalg::rank(&restricted_simple) != carrier.dim_k() {
        return Err(axiom(format!(
            "{} restricted simple roots for dim t_k = {}",
            restricted_simple.len(),
            carrier.dim_k()
        )));
    }

    let reduced_set: BTreeSet<Vector> = restricted_roots
        .iter()
        .filter(|b| !restricted_roots.contains(&b.scale(rat(1, 2))))
        .cloned()
        .collect();
    let reduced = RootSystem::from_simple_roots(restricted_simple.clone(), base.ambient_dim())
        .map_err(|e| axiom(format!("restricted simple roots: {e}")))?;
    if reduced.roots() != &reduced_set {
        return Err(axiom(format!(
            "reduced restricted set has {} elements, the system generated by the restricted simple roots has {}",
            reduced_set.len(),
            reduced.roots().len()
        )));
    }
    reduced.validate().map_err(|e| axiom(e.to_string()))?;

    let labels = component_labels(&restricted_simple);
    let mut nonreduced_components = BTreeSet::new();
    for b in &restricted_roots {
        if restricted_roots.contains(&b.scale(int(2))) {
            let coords = linalg::coordinates(&restricted_simple, b).expect("checked in span");
            let i = coords.iter().position(|c| !c.is_zero()).expect("nonzero root");
            nonreduced_components.insert(labels[i]);
        }
    }

    let kprime_type = reduced.components().to_vec();
    let rrs = RestrictedRootSystem {
        carrier,
        restricted_roots,
        restricted_simple,
        nonreduced_components,
        reduced,
        kprime_type,
    };
    rrs.check_simple_positivity()?;
    Ok(rrs)
}

impl RestrictedRootSystem {
    pub fn carrier(&self) -> &TorusSplit {
        &self.carrier
    }

    pub fn roots(&self) -> &BTreeSet<Vector> {
        &self.restricted_roots
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.restricted_simple
    }

    pub fn nonreduced_components(&self) -> &BTreeSet<usize> {
        &self.nonreduced_components
    }

    pub fn is_nonreduced(&self) -> bool {
        !self.nonreduced_components.is_empty()
    }

    pub fn reduced(&self) -> &RootSystem {
        &self.reduced
    }

    pub fn kprime_type(&self) -> &[CartanType] {
        &self.kprime_type
    }

    /// Number of chambers cut out by the restricted roots, i.e. compartments
    /// of t_k. Reduced and nonreduced systems share their Weyl group.
    pub fn total_compartments(&self) -> u64 {
        weyl_order_closed_form(&self.kprime_type)
            .expect("classified types are admissible")
            .value
    }

    /// Expresses every restricted root in the restricted simple roots and
    /// requires integer coefficients of a single sign.
    pub fn check_simple_positivity(&self) -> Result<PositivityReport> {
        let mut rows = Vec::with_capacity(self.restricted_roots.len());
        for b in &self.restricted_roots {
            let coords = linalg::coordinates(&self.restricted_simple, b)
                .ok_or_else(|| Error::PositivityViolation(format!("{b} outside the simple span")))?;
            let coefficients = coords
                .iter()
                .map(|c| as_integer(c).ok_or_else(|| Error::PositivityViolation(format!("{b} has coefficient {c}"))))
                .collect::<Result<Vec<i64>>>()?;
            let positive = coords.iter().all(|c| !c.is_negative());
            let negative = coords.iter().all(|c| !c.is_positive());
            if !positive && !negative {
                return Err(Error::PositivityViolation(format!(
                    "{b} has mixed-sign coefficients {coefficients:?}"
                )));
            }
            rows.push(PositivityRow {
                root: b.to_strings(),
                coefficients,
                positive,
            });
        }
        Ok(PositivityReport { rows })
    }

    /// Counts chambers of the restricted arrangement directly: the orbit of a
    /// regular point under reflections in all restricted roots.
    pub fn chamber_count_by_orbit(&self, limit: usize) -> Result<u64> {
        let regular = self.regular_point()?;
        let mut seen = BTreeSet::from([regular.clone()]);
        let mut queue = VecDeque::from([regular]);
        while let Some(v) = queue.pop_front() {
            for b in &self.restricted_roots {
                let w = reflect(&v, b)?;
                if !seen.contains(&w) {
                    if seen.len() >= limit {
                        return Err(Error::OracleTooLarge(format!("more than {limit} chambers")));
                    }
                    seen.insert(w.clone());
                    queue.push_back(w);
                }
            }
        }
        Ok(seen.len() as u64)
    }

    /// The point of t_k pairing to 1 with every restricted simple root.
    fn regular_point(&self) -> Result<Vector> {
        let simple = &self.restricted_simple;
        let dim = self.reduced.ambient_dim();
        if simple.is_empty() {
            return Ok(Vector::zero(dim));
        }
        let k = simple.len();
        let mut gram = linalg::Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                gram[(i, j)] = simple[i].dot(&simple[j]);
            }
        }
        let ones = Vector::new(vec![int(1); k]);
        let c = gram.inverse()?.apply(&ones);
        let mut v = Vector::zero(dim);
        for (ci, s) in c.coords().iter().zip(simple) {
            v = &v + &s.scale(*ci);
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::{make_involution, named_permutation, InvolutionName};
    use crate::rootsys::{build_root_system, Series::*};

    fn restricted(ty: &[CartanType], name: InvolutionName) -> RestrictedRootSystem {
        let rs = build_root_system(ty).unwrap();
        let inv = make_involution(&rs, named_permutation(ty, name).unwrap()).unwrap();
        build_restricted(&inv).unwrap()
    }

    #[test]
    fn a3_flip_folds_to_b2() {
        let r = restricted(&[CartanType::new(A, 3)], InvolutionName::Flip);
        assert_eq!(r.roots().len(), 8);
        assert_eq!(r.kprime_type(), &[CartanType::new(B, 2)]);
        assert!(!r.is_nonreduced());
        assert_eq!(r.total_compartments(), 8);
        let s = r.simple_roots();
        let report = r.check_simple_positivity().unwrap();
        let top = &s[0].scale(int(2)) + &s[1];
        assert_eq!(report.coefficients_of(&top), Some(&[2, 1][..]));
        assert_eq!(report.coefficients_of(&s[1]), Some(&[0, 1][..]));
    }

    #[test]
    fn a2_flip_is_bc1() {
        let r = restricted(&[CartanType::new(A, 2)], InvolutionName::Flip);
        let beta = r.simple_roots()[0].clone();
        let two = beta.scale(int(2));
        let expected: BTreeSet<Vector> = [beta.clone(), -&beta, two.clone(), -&two].into();
        assert_eq!(r.roots(), &expected);
        assert!(r.is_nonreduced());
        assert_eq!(r.kprime_type(), &[CartanType::new(A, 1)]);
        assert_eq!(r.reduced().roots().len(), 2);
        let report = r.check_simple_positivity().unwrap();
        assert_eq!(report.coefficients_of(&two), Some(&[2][..]));
    }

    #[test]
    fn identity_restriction_is_the_base() {
        let ty = [CartanType::new(G, 2)];
        let r = restricted(&ty, InvolutionName::Identity);
        assert_eq!(r.roots(), build_root_system(&ty).unwrap().roots());
        assert_eq!(r.kprime_type(), &ty);
        assert_eq!(r.total_compartments(), 12);
    }

    #[test]
    fn exceptional_and_fork_folds() {
        let d4 = restricted(&[CartanType::new(D, 4)], InvolutionName::ForkSwap);
        assert_eq!(d4.kprime_type(), &[CartanType::new(B, 3)]);
        let e6 = restricted(&[CartanType::new(E, 6)], InvolutionName::Flip);
        assert_eq!(e6.kprime_type(), &[CartanType::new(F, 4)]);
        assert_eq!(e6.total_compartments(), 1152);
    }

    #[test]
    fn orbit_count_matches_weyl_order() {
        let r = restricted(&[CartanType::new(A, 4)], InvolutionName::Flip);
        assert_eq!(r.kprime_type(), &[CartanType::new(B, 2)]);
        assert_eq!(r.chamber_count_by_orbit(10_000).unwrap(), 8);
        assert!(r.chamber_count_by_orbit(3).is_err());
    }
}
