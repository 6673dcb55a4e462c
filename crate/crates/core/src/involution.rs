//! Involutions of a root system that permute a fixed set of simple roots.
//!
//! The involution of the symmetric pair, restricted to the maximal torus, is
//! carried entirely by how it permutes the simple roots of a σ-stable chamber.
//! Its linear extension is the unique isometry that realizes the permutation
//! on the root span and is the identity on the orthogonal complement.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, int, rat, Matrix, Vector};
use crate::rootsys::{cartan_integer, CartanType, RootSystem, Series};

/// Named diagram involutions understood by the catalog and the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InvolutionName {
    Identity,
    /// i ↔ n+1−i on A_n, and the unique nontrivial automorphism of E6.
    Flip,
    /// α_{n−1} ↔ α_n on D_n.
    ForkSwap,
    /// Exchange of two identical simple factors.
    FactorSwap,
}

impl FromStr for InvolutionName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identity" => Ok(InvolutionName::Identity),
            "flip" => Ok(InvolutionName::Flip),
            "fork-swap" => Ok(InvolutionName::ForkSwap),
            "factor-swap" => Ok(InvolutionName::FactorSwap),
            other => Err(Error::Params(format!(
                "unknown involution {other:?} (expected identity, flip, fork-swap, factor-swap)"
            ))),
        }
    }
}

impl fmt::Display for InvolutionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvolutionName::Identity => "identity",
            InvolutionName::Flip => "flip",
            InvolutionName::ForkSwap => "fork-swap",
            InvolutionName::FactorSwap => "factor-swap",
        })
    }
}

/// The permutation of simple-root indices (0-based, in the simple-root order
/// of [`crate::rootsys::build_root_system`]) for a named involution.
pub fn named_permutation(components: &[CartanType], name: InvolutionName) -> Result<Vec<usize>> {
    let rank: usize = components.iter().map(|t| t.rank).sum();
    let unsupported = || {
        Error::Params(format!(
            "involution {name} is not defined on {}",
            crate::rootsys::format_types(components)
        ))
    };
    let mut perm: Vec<usize> = (0..rank).collect();
    match name {
        InvolutionName::Identity => {}
        InvolutionName::Flip => match components {
            [t] if t.series == Series::A => perm.reverse(),
            [t] if t.series == Series::E && t.rank == 6 => perm = vec![5, 1, 4, 3, 2, 0],
            _ => return Err(unsupported()),
        },
        InvolutionName::ForkSwap => match components {
            [t] if t.series == Series::D && t.rank >= 2 => perm.swap(rank - 2, rank - 1),
            _ => return Err(unsupported()),
        },
        InvolutionName::FactorSwap => match components {
            [a, b] if a == b => {
                let r = a.rank;
                perm = (r..2 * r).chain(0..r).collect();
            }
            _ => return Err(unsupported()),
        },
    }
    Ok(perm)
}

#[derive(Clone, Debug)]
pub struct DiagramInvolution {
    base: RootSystem,
    perm: Vec<usize>,
    ambient_map: Matrix,
}

pub fn make_involution(rs: &RootSystem, perm: Vec<usize>) -> Result<DiagramInvolution> {
    let n = rs.rank();
    if perm.len() != n {
        return Err(Error::NotInvolutive(format!(
            "permutation has {} entries for rank {n}",
            perm.len()
        )));
    }
    let mut hit = vec![false; n];
    for &p in &perm {
        if p >= n || std::mem::replace(&mut hit[p], true) {
            return Err(Error::NotInvolutive(format!("{perm:?} is not a permutation")));
        }
    }
    if let Some(i) = (0..n).find(|&i| perm[perm[i]] != i) {
        return Err(Error::NotInvolutive(format!(
            "{} ↦ {} ↦ {}",
            i + 1,
            perm[i] + 1,
            perm[perm[i]] + 1
        )));
    }

    let simple = rs.simple_roots();
    for i in 0..n {
        for j in 0..n {
            let before = cartan_integer(&simple[i], &simple[j])?;
            let after = cartan_integer(&simple[perm[i]], &simple[perm[j]])?;
            if before != after {
                return Err(Error::NotDiagramAutomorphism(format!(
                    "Cartan integer ({}, {}) is {before} but ({}, {}) is {after}",
                    i + 1,
                    j + 1,
                    perm[i] + 1,
                    perm[j] + 1
                )));
            }
            if simple[i].dot(&simple[j]) != simple[perm[i]].dot(&simple[perm[j]]) {
                return Err(Error::NotDiagramAutomorphism(format!(
                    "permutation does not preserve the inner product of simple roots {} and {}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }

    let dim = rs.ambient_dim();
    let complement = linalg::orthogonal_complement(simple, dim);
    let mut source: Vec<Vector> = simple.to_vec();
    source.extend(complement.iter().cloned());
    let mut target: Vec<Vector> = perm.iter().map(|&p| simple[p].clone()).collect();
    target.extend(complement);
    let ambient_map = &Matrix::from_columns(&target) * &Matrix::from_columns(&source).inverse()?;

    if &ambient_map * &ambient_map != Matrix::identity(dim) {
        return Err(Error::NotInvolutive(
            "ambient map does not square to the identity".into(),
        ));
    }
    Ok(DiagramInvolution {
        base: rs.clone(),
        perm,
        ambient_map,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairCase {
    /// σ(α) = α.
    Fixed,
    /// ⟨α, σα⟩ = 0, and the t_k and t_p parts of α have equal length.
    Orthogonal,
    /// 2⟨α, σα⟩/|α|² = −1, α + σα is a root and |H^p|² = 3|H^k|².
    Minus1,
}

/// Basis of the ±1 eigenspaces of σ inside the root span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusSplit {
    pub t_k_basis: Vec<Vector>,
    pub t_p_basis: Vec<Vector>,
}

impl TorusSplit {
    pub fn dim_k(&self) -> usize {
        self.t_k_basis.len()
    }

    pub fn dim_p(&self) -> usize {
        self.t_p_basis.len()
    }
}

impl DiagramInvolution {
    pub fn base(&self) -> &RootSystem {
        &self.base
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn ambient_map(&self) -> &Matrix {
        &self.ambient_map
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.ambient_map.apply(v)
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Orbits of the permutation, each listed with its smaller index first.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        (0..self.perm.len())
            .filter(|&i| self.perm[i] >= i)
            .map(|i| {
                if self.perm[i] == i {
                    vec![i]
                } else {
                    vec![i, self.perm[i]]
                }
            })
            .collect()
    }

    /// Splits the root span into σ-eigenspaces. Fixed simple roots and sums
    /// over swapped pairs span t_k; differences over swapped pairs span t_p.
    pub fn split_torus(&self) -> TorusSplit {
        let simple = self.base.simple_roots();
        let mut t_k_basis = Vec::new();
        let mut t_p_basis = Vec::new();
        for orbit in self.orbits() {
            match orbit.as_slice() {
                [i] => t_k_basis.push(simple[*i].clone()),
                [i, j] => {
                    t_k_basis.push(&simple[*i] + &simple[*j]);
                    t_p_basis.push(&simple[*i] - &simple[*j]);
                }
                _ => unreachable!("orbits of an involution have size 1 or 2"),
            }
        }
        TorusSplit { t_k_basis, t_p_basis }
    }

    /// The vector representing α restricted to t_k, i.e. ½(α + σα).
    pub fn restrict_root(&self, alpha: &Vector) -> Result<Vector> {
        if !self.base.contains(alpha) {
            return Err(Error::NotARoot(alpha.to_string()));
        }
        let h = (alpha + &self.apply(alpha)).scale(rat(1, 2));
        if h.is_zero() {
            return Err(Error::RootVanishes(alpha.to_string()));
        }
        Ok(h)
    }

    /// Component of α in t_p, i.e. ½(α − σα).
    pub fn t_p_part(&self, alpha: &Vector) -> Vector {
        (alpha - &self.apply(alpha)).scale(rat(1, 2))
    }

    /// Which of the possible relative positions α and σα are in, with the
    /// accompanying length identities checked.
    pub fn pair_case(&self, alpha: &Vector) -> Result<PairCase> {
        if !self.base.contains(alpha) {
            return Err(Error::NotARoot(alpha.to_string()));
        }
        let image = self.apply(alpha);
        if &image == alpha {
            return Ok(PairCase::Fixed);
        }
        let hk = self.restrict_root(alpha)?.norm2();
        let hp = self.t_p_part(alpha).norm2();
        if alpha.dot(&image) == int(0) {
            return if hp == hk {
                Ok(PairCase::Orthogonal)
            } else {
                Err(Error::LemmaViolation(format!(
                    "{alpha} orthogonal to its image but |H^p|² = {hp} ≠ |H^k|² = {hk}"
                )))
            };
        }
        let c = cartan_integer(alpha, &image)?;
        if c != -1 {
            return Err(Error::LemmaViolation(format!("2⟨α, σα⟩/|α|² = {c} for α = {alpha}")));
        }
        if hp != int(3) * hk {
            return Err(Error::LemmaViolation(format!(
                "|H^p|² = {hp} is not 3·|H^k|² = 3·{hk} for α = {alpha}"
            )));
        }
        if !self.base.contains(&(alpha + &image)) {
            return Err(Error::LemmaViolation(format!("α + σα is not a root for α = {alpha}")));
        }
        Ok(PairCase::Minus1)
    }

    /// Checks that σ is an isometric involution permuting the roots.
    pub fn check_isometry(&self) -> Result<()> {
        let dim = self.base.ambient_dim();
        let m = &self.ambient_map;
        if m * m != Matrix::identity(dim) {
            return Err(Error::NotInvolutive(
                "ambient map does not square to the identity".into(),
            ));
        }
        if &m.transpose() * m != Matrix::identity(dim) {
            return Err(Error::NotDiagramAutomorphism("ambient map is not orthogonal".into()));
        }
        for r in self.base.roots() {
            if !self.base.contains(&self.apply(r)) {
                return Err(Error::NotDiagramAutomorphism(format!("σ({r}) is not a root")));
            }
        }
        Ok(())
    }
}
