//! Dynkin diagrams of simple-root sets and the fold of a diagram under an
//! involution, with Graphviz DOT rendering.

use std::fmt::Write;

use serde::Serialize;

use crate::error::Result;
use crate::involution::{make_involution, named_permutation, InvolutionName};
use crate::linalg::{fmt_rat, Vector};
use crate::restricted::build_restricted;
use crate::rootsys::{build_root_system, cartan_matrix, classify_simple_roots, CartanType};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Node {
    /// 1-based position in the simple-root list.
    pub index: usize,
    pub coords: Vec<String>,
    pub squared_length: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bond {
    pub from: usize,
    pub to: usize,
    /// 1, 2 or 3 lines.
    pub multiplicity: i64,
    /// For multiple bonds, the node the arrow points at (the shorter root).
    pub short_end: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagram {
    pub types: Vec<CartanType>,
    pub nodes: Vec<Node>,
    pub bonds: Vec<Bond>,
}

impl Diagram {
    pub fn from_simple_roots(simple: &[Vector]) -> Result<Self> {
        let types = classify_simple_roots(simple)?;
        let a = cartan_matrix(simple)?;
        let nodes = simple
            .iter()
            .enumerate()
            .map(|(i, v)| Node {
                index: i + 1,
                coords: v.to_strings(),
                squared_length: fmt_rat(&v.norm2()),
            })
            .collect();
        let mut bonds = Vec::new();
        for i in 0..simple.len() {
            for j in i + 1..simple.len() {
                let multiplicity = a[i][j] * a[j][i];
                if multiplicity == 0 {
                    continue;
                }
                let (li, lj) = (simple[i].norm2(), simple[j].norm2());
                let short_end = match li.cmp(&lj) {
                    std::cmp::Ordering::Less => Some(i + 1),
                    std::cmp::Ordering::Greater => Some(j + 1),
                    std::cmp::Ordering::Equal => None,
                };
                bonds.push(Bond {
                    from: i + 1,
                    to: j + 1,
                    multiplicity,
                    short_end,
                });
            }
        }
        Ok(Diagram { types, nodes, bonds })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoldResult {
    pub source_type: Vec<CartanType>,
    pub involution: InvolutionName,
    /// 1-based image of each simple root.
    pub permutation: Vec<usize>,
    pub source: Diagram,
    pub folded: Diagram,
    pub kprime_type: Vec<CartanType>,
    pub nonreduced: bool,
    pub restricted_root_count: usize,
    pub total_compartments: u64,
    pub dim_t_k: usize,
    pub dim_t_p: usize,
}

/// Restricts the root system of `source_type` along the named involution.
pub fn fold(source_type: &[CartanType], name: InvolutionName) -> Result<FoldResult> {
    let rs = build_root_system(source_type)?;
    let perm = named_permutation(source_type, name)?;
    let inv = make_involution(&rs, perm)?;
    let rrs = build_restricted(&inv)?;
    let split = inv.split_torus();
    Ok(FoldResult {
        source_type: source_type.to_vec(),
        involution: name,
        permutation: inv.perm().iter().map(|p| p + 1).collect(),
        source: Diagram::from_simple_roots(rs.simple_roots())?,
        folded: Diagram::from_simple_roots(rrs.simple_roots())?,
        kprime_type: rrs.kprime_type().to_vec(),
        nonreduced: rrs.is_nonreduced(),
        restricted_root_count: rrs.roots().len(),
        total_compartments: rrs.total_compartments(),
        dim_t_k: split.dim_k(),
        dim_t_p: split.dim_p(),
    })
}

impl FoldResult {
    /// Name of the folded type, `BC` for nonreduced results.
    pub fn folded_name(&self) -> String {
        let base = crate::rootsys::format_types(&self.kprime_type);
        if self.nonreduced {
            format!("{base} (nonreduced, BC)")
        } else {
            base
        }
    }

    /// Two clusters, source and folded diagram, with the involution drawn as
    /// dashed arcs between swapped nodes. Multiple bonds carry their
    /// multiplicity as a label and an arrowhead toward the shorter root.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let src = crate::rootsys::format_types(&self.source_type);
        writeln!(out, "graph fold {{").unwrap();
        writeln!(out, "  rankdir=LR;").unwrap();
        writeln!(out, "  node [shape=circle, width=0.3, fixedsize=true, label=\"\"];").unwrap();
        write_cluster(
            &mut out,
            "source",
            &format!("{src}, {}", self.involution),
            "s",
            &self.source,
        );
        for (i, &p) in self.permutation.iter().enumerate() {
            if p > i + 1 {
                writeln!(
                    out,
                    "  s{} -- s{} [style=dashed, constraint=false, color=gray];",
                    i + 1,
                    p
                )
                .unwrap();
            }
        }
        write_cluster(&mut out, "folded", &self.folded_name(), "f", &self.folded);
        writeln!(out, "}}").unwrap();
        out
    }
}

fn write_cluster(out: &mut String, name: &str, title: &str, prefix: &str, d: &Diagram) {
    writeln!(out, "  subgraph cluster_{name} {{").unwrap();
    writeln!(out, "    label=\"{title}\";").unwrap();
    for n in &d.nodes {
        writeln!(out, "    {prefix}{} [xlabel=\"{}\"];", n.index, n.index).unwrap();
    }
    for b in &d.bonds {
        let mut attrs = vec![];
        if b.multiplicity > 1 {
            attrs.push(format!("label=\"{}\"", b.multiplicity));
            attrs.push(format!("penwidth={}", b.multiplicity));
        }
        if let Some(s) = b.short_end {
            attrs.push(format!("dir={}", if s == b.to { "forward" } else { "back" }));
        }
        let attrs = if attrs.is_empty() {
            String::new()
        } else {
            format!(" [{}]", attrs.join(", "))
        };
        writeln!(out, "    {prefix}{} -- {prefix}{}{attrs};", b.from, b.to).unwrap();
    }
    writeln!(out, "  }}").unwrap();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Series::*;

    #[test]
    fn a3_flip_fold() {
        let f = fold(&[CartanType::new(A, 3)], InvolutionName::Flip).unwrap();
        assert_eq!(f.kprime_type, vec![CartanType::new(B, 2)]);
        assert_eq!(f.permutation, vec![3, 2, 1]);
        assert_eq!(f.folded.bonds.len(), 1);
        assert_eq!(f.folded.bonds[0].multiplicity, 2);
        assert_eq!(f.folded_name(), "B2");
        let dot = f.to_dot();
        assert!(dot.starts_with("graph fold {"));
        assert!(dot.contains("s1 -- s3 [style=dashed"));
        assert!(dot.contains("label=\"2\""));
    }

    #[test]
    fn a4_flip_is_nonreduced() {
        let f = fold(&[CartanType::new(A, 4)], InvolutionName::Flip).unwrap();
        assert!(f.nonreduced);
        assert_eq!(f.kprime_type, vec![CartanType::new(B, 2)]);
        assert_eq!(f.folded_name(), "B2 (nonreduced, BC)");
    }

    #[test]
    fn invalid_folds() {
        assert!(fold(&[CartanType::new(B, 3)], InvolutionName::Flip).is_err());
        assert!(fold(&[CartanType::new(E, 7)], InvolutionName::Flip).is_err());
    }
}
