//! Reduced crystallographic root systems in exact rational coordinates.
//!
//! Root systems are built from the standard (Bourbaki) simple roots of each
//! irreducible factor, placed in mutually orthogonal coordinate blocks. The
//! full root set is never tabulated: it is generated as the closure of the
//! simple roots under simple reflections.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, as_integer, fmt_rat, int, Vector};

/// Closure is aborted beyond this many roots; E8 has 240.
const MAX_ROOTS: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Series::A,
            "B" => Series::B,
            "C" => Series::C,
            "D" => Series::D,
            "E" => Series::E,
            "F" => Series::F,
            "G" => Series::G,
            other => return Err(Error::Params(format!("unknown series {other:?}"))),
        })
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A Cartan–Killing type such as `B3` or `E6`. Serialized as `["B", 3]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(Series, usize)", into = "(Series, usize)")]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl From<(Series, usize)> for CartanType {
    fn from((series, rank): (Series, usize)) -> Self {
        CartanType { series, rank }
    }
}

impl From<CartanType> for (Series, usize) {
    fn from(t: CartanType) -> Self {
        (t.series, t.rank)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl CartanType {
    pub const fn new(series: Series, rank: usize) -> Self {
        CartanType { series, rank }
    }

    /// Types with a standard realization: A n≥1, B/C n≥2, D n≥2, E 6–8, F4, G2.
    pub fn is_admissible(&self) -> bool {
        let n = self.rank;
        match self.series {
            Series::A => n >= 1,
            Series::B | Series::C | Series::D => n >= 2,
            Series::E => (6..=8).contains(&n),
            Series::F => n == 4,
            Series::G => n == 2,
        }
    }

    pub fn check(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::UnsupportedType(*self))
        }
    }

    /// Canonical name under the low-rank coincidences B2 = C2, D3 = A3 and
    /// D2 = A1 ⊕ A1.
    pub fn canonical(&self) -> Vec<CartanType> {
        match (self.series, self.rank) {
            (Series::C, 2) => vec![CartanType::new(Series::B, 2)],
            (Series::D, 3) => vec![CartanType::new(Series::A, 3)],
            (Series::D, 2) => vec![CartanType::new(Series::A, 1); 2],
            _ => vec![*self],
        }
    }
}

pub fn canonicalize(types: &[CartanType]) -> Vec<CartanType> {
    types.iter().flat_map(CartanType::canonical).collect()
}

pub fn format_types(types: &[CartanType]) -> String {
    if types.is_empty() {
        return "0".to_string();
    }
    types.iter().map(ToString::to_string).collect::<Vec<_>>().join("+")
}

/// Standard simple roots of an irreducible type, in their own coordinate
/// space. Returns the ambient dimension and the roots in Bourbaki order.
pub fn standard_simple_roots(t: CartanType) -> Result<(usize, Vec<Vector>)> {
    t.check()?;
    let n = t.rank;
    let diff = |dim: usize, i: usize, j: usize| {
        let mut v = Vector::zero(dim);
        v[i] = int(1);
        v[j] = int(-1);
        v
    };
    Ok(match t.series {
        Series::A => (n + 1, (0..n).map(|i| diff(n + 1, i, i + 1)).collect()),
        Series::B | Series::C | Series::D => {
            let mut roots: Vec<Vector> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut last = Vector::zero(n);
            match t.series {
                Series::B => last[n - 1] = int(1),
                Series::C => last[n - 1] = int(2),
                _ => {
                    last[n - 2] = int(1);
                    last[n - 1] = int(1);
                }
            }
            roots.push(last);
            (n, roots)
        }
        Series::E => {
            let mut roots = vec![
                Vector::from_halves(&[1, -1, -1, -1, -1, -1, -1, 1]),
                Vector::from_ints(&[1, 1, 0, 0, 0, 0, 0, 0]),
            ];
            roots.extend((0..6).map(|i| diff(8, i + 1, i)));
            roots.truncate(n);
            (8, roots)
        }
        Series::F => (
            4,
            vec![
                Vector::from_ints(&[0, 1, -1, 0]),
                Vector::from_ints(&[0, 0, 1, -1]),
                Vector::from_ints(&[0, 0, 0, 1]),
                Vector::from_halves(&[1, -1, -1, -1]),
            ],
        ),
        Series::G => (3, vec![Vector::from_ints(&[1, -1, 0]), Vector::from_ints(&[-2, 1, 1])]),
    })
}

/// `2⟨beta, alpha⟩ / ⟨alpha, alpha⟩`, required to be an integer.
pub fn cartan_integer(alpha: &Vector, beta: &Vector) -> Result<i64> {
    if alpha.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let value = int(2) * beta.dot(alpha) / alpha.norm2();
    as_integer(&value).ok_or_else(|| Error::NotCartanIntegral(fmt_rat(&value)))
}

/// Reflection of `x` in the hyperplane orthogonal to `alpha`.
pub fn reflect(x: &Vector, alpha: &Vector) -> Result<Vector> {
    if alpha.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let coeff = int(2) * x.dot(alpha) / alpha.norm2();
    Ok(x - &alpha.scale(coeff))
}

/// Closure of `±seeds` under the reflections in `generators`.
pub(crate) fn reflection_closure(seeds: &[Vector], generators: &[Vector], limit: usize) -> Result<BTreeSet<Vector>> {
    let mut seen: BTreeSet<Vector> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for s in seeds {
        for v in [s.clone(), -s] {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    while let Some(v) = queue.pop_front() {
        for g in generators {
            let w = reflect(&v, g)?;
            if !seen.contains(&w) {
                if seen.len() >= limit {
                    return Err(Error::NotDynkin(format!("reflection closure exceeded {limit} vectors")));
                }
                seen.insert(w.clone());
                queue.push_back(w);
            }
        }
    }
    Ok(seen)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    ambient_dim: usize,
    simple_roots: Vec<Vector>,
    roots: BTreeSet<Vector>,
    components: Vec<CartanType>,
}

/// Orthogonal direct sum of standard realizations, roots by reflection closure.
pub fn build_root_system(components: &[CartanType]) -> Result<RootSystem> {
    let mut blocks = Vec::with_capacity(components.len());
    for &t in components {
        blocks.push(standard_simple_roots(t)?);
    }
    let ambient_dim: usize = blocks.iter().map(|(d, _)| d).sum::<usize>().max(1);
    let mut simple_roots = Vec::new();
    let mut offset = 0;
    for (dim, roots) in &blocks {
        simple_roots.extend(roots.iter().map(|r| r.embed(ambient_dim, offset)));
        offset += dim;
    }
    let roots = reflection_closure(&simple_roots, &simple_roots, MAX_ROOTS)?;
    Ok(RootSystem {
        ambient_dim,
        simple_roots,
        roots,
        components: components.to_vec(),
    })
}

impl RootSystem {
    /// Root system generated by arbitrary simple roots. The simple roots are
    /// classified first, so malformed input is rejected before closure.
    pub fn from_simple_roots(simple_roots: Vec<Vector>, ambient_dim: usize) -> Result<Self> {
        if simple_roots.iter().any(|r| r.dim() != ambient_dim) {
            return Err(Error::Linear("simple root of wrong dimension".into()));
        }
        let components = classify_simple_roots(&simple_roots)?;
        let roots = reflection_closure(&simple_roots, &simple_roots, MAX_ROOTS)?;
        Ok(RootSystem {
            ambient_dim,
            simple_roots,
            roots,
            components,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple_roots
    }

    pub fn roots(&self) -> &BTreeSet<Vector> {
        &self.roots
    }

    pub fn components(&self) -> &[CartanType] {
        &self.components
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.roots.contains(v)
    }

    /// Coordinates of `v` in the basis of simple roots.
    pub fn simple_coordinates(&self, v: &Vector) -> Option<Vec<linalg::Rat>> {
        linalg::coordinates(&self.simple_roots, v)
    }

    pub fn positive_roots(&self) -> Vec<&Vector> {
        self.roots
            .iter()
            .filter(|r| {
                self.simple_coordinates(r)
                    .is_some_and(|c| c.iter().all(linalg::is_nonnegative))
            })
            .collect()
    }

    /// `cartan_matrix()[i][j] = 2⟨α_j, α_i⟩ / ⟨α_i, α_i⟩`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        cartan_matrix(&self.simple_roots).expect("simple roots of a root system are integral")
    }

    /// Re-checks every root-system axiom on the stored data.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::NotDynkin(msg));
        for a in &self.roots {
            if a.is_zero() {
                return fail("zero vector in root set".into());
            }
            if !self.roots.contains(&-a) {
                return fail(format!("{a} present but not its negative"));
            }
            if self.roots.contains(&a.scale(int(2))) {
                return fail(format!("2·{a} is a root; system is not reduced"));
            }
            let coords = self
                .simple_coordinates(a)
                .ok_or_else(|| Error::NotDynkin(format!("{a} outside the simple span")))?;
            let pos = coords.iter().all(|c| !c.is_negative());
            let neg = coords.iter().all(|c| !c.is_positive());
            if !(pos || neg) || coords.iter().any(|c| !c.is_integer()) {
                return fail(format!("{a} is not a one-signed integer combination"));
            }
            for b in &self.roots {
                cartan_integer(a, b)?;
                if !self.roots.contains(&reflect(b, a)?) {
                    return fail(format!("reflection of {b} in {a} leaves the root set"));
                }
            }
        }
        Ok(())
    }
}

pub fn cartan_matrix(simple: &[Vector]) -> Result<Vec<Vec<i64>>> {
    simple
        .iter()
        .map(|a| simple.iter().map(|b| cartan_integer(a, b)).collect())
        .collect()
}

/// Connected components of the diagram of `simple`: for each simple root,
/// the index of its component, numbered in order of lowest member.
pub fn component_labels(simple: &[Vector]) -> Vec<usize> {
    let n = simple.len();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = next;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if label[j] == usize::MAX && !simple[i].dot(&simple[j]).is_zero() {
                    label[j] = next;
                    stack.push(j);
                }
            }
        }
        next += 1;
    }
    label
}

/// Reads the Cartan–Killing type off a set of simple roots.
///
/// Components are listed in order of their lowest-indexed simple root.
pub fn classify_simple_roots(simple: &[Vector]) -> Result<Vec<CartanType>> {
    let n = simple.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if simple.iter().any(Vector::is_zero) {
        return Err(Error::ZeroRoot);
    }
    if linalg::rank(simple) != n {
        return Err(Error::NotDynkin("simple roots are linearly dependent".into()));
    }
    let a = cartan_matrix(simple)?;
    for (i, row) in a.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if i == j {
                continue;
            }
            let y = a[j][i];
            if x > 0 || (x == 0) != (y == 0) || x * y > 3 {
                return Err(Error::NotDynkin(format!(
                    "Cartan entries ({x}, {y}) between nodes {} and {}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }

    let labels = component_labels(simple);
    let count = labels.iter().max().map_or(0, |m| m + 1);
    let mut out = Vec::with_capacity(count);
    for c in 0..count {
        let comp: Vec<usize> = (0..n).filter(|&i| labels[i] == c).collect();
        out.push(classify_connected(&comp, &a, simple)?);
    }
    Ok(out)
}

fn classify_connected(nodes: &[usize], a: &[Vec<i64>], simple: &[Vector]) -> Result<CartanType> {
    let n = nodes.len();
    let bond = |i: usize, j: usize| a[i][j] * a[j][i];
    let neighbours = |i: usize| -> Vec<usize> { nodes.iter().copied().filter(|&j| j != i && a[i][j] != 0).collect() };
    let edges: Vec<(usize, usize, i64)> = nodes
        .iter()
        .flat_map(|&i| nodes.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| i < j && a[i][j] != 0)
        .map(|(i, j)| (i, j, bond(i, j)))
        .collect();
    if edges.len() != n - 1 {
        return Err(Error::NotDynkin("diagram contains a cycle".into()));
    }
    if n == 1 {
        return Ok(CartanType::new(Series::A, 1));
    }
    let triple = edges.iter().filter(|e| e.2 == 3).count();
    let double = edges.iter().filter(|e| e.2 == 2).count();
    let max_degree = nodes.iter().map(|&i| neighbours(i).len()).max().unwrap_or(0);

    if triple > 0 {
        return if n == 2 {
            Ok(CartanType::new(Series::G, 2))
        } else {
            Err(Error::NotDynkin("triple bond in a diagram of rank > 2".into()))
        };
    }

    if double > 0 {
        if double > 1 || max_degree > 2 {
            return Err(Error::NotDynkin("multiply-laced diagram is not a path".into()));
        }
        let path = walk_path(nodes, &neighbours);
        let k = (0..n - 1)
            .find(|&k| bond(path[k], path[k + 1]) == 2)
            .expect("double bond present");
        if n == 2 {
            return Ok(CartanType::new(Series::B, 2));
        }
        if n == 4 && k == 1 {
            return Ok(CartanType::new(Series::F, 4));
        }
        let (end, inner) = if k == n - 2 {
            (path[n - 1], path[n - 2])
        } else if k == 0 {
            (path[0], path[1])
        } else {
            return Err(Error::NotDynkin("double bond in the interior of a path".into()));
        };
        let series = if simple[end].norm2() < simple[inner].norm2() {
            Series::B
        } else {
            Series::C
        };
        return Ok(CartanType::new(series, n));
    }

    match max_degree {
        0..=2 => Ok(CartanType::new(Series::A, n)),
        3 => {
            let branch: Vec<usize> = nodes.iter().copied().filter(|&i| neighbours(i).len() == 3).collect();
            if branch.len() != 1 {
                return Err(Error::NotDynkin("more than one branch node".into()));
            }
            let centre = branch[0];
            let mut arms: Vec<usize> = neighbours(centre)
                .into_iter()
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (centre, start, 1);
                    loop {
                        let next: Vec<usize> = neighbours(cur).into_iter().filter(|&x| x != prev).collect();
                        match next.as_slice() {
                            [] => break len,
                            [x] => {
                                prev = cur;
                                cur = *x;
                                len += 1;
                            }
                            _ => break usize::MAX,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Ok(CartanType::new(Series::D, n)),
                [1, 2, 2] => Ok(CartanType::new(Series::E, 6)),
                [1, 2, 3] => Ok(CartanType::new(Series::E, 7)),
                [1, 2, 4] => Ok(CartanType::new(Series::E, 8)),
                _ => Err(Error::NotDynkin(format!("branched diagram with arms {arms:?}"))),
            }
        }
        d => Err(Error::NotDynkin(format!("node of degree {d}"))),
    }
}

fn walk_path(nodes: &[usize], neighbours: &dyn Fn(usize) -> Vec<usize>) -> Vec<usize> {
    let start = nodes
        .iter()
        .copied()
        .find(|&i| neighbours(i).len() <= 1)
        .expect("a path has an endpoint");
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = neighbours(cur).into_iter().find(|&x| x != prev) {
        path.push(next);
        prev = cur;
        cur = next;
    }
    path
}

/// |roots| by closed form, used to cross-check the closure.
pub fn root_count_closed_form(t: CartanType) -> Result<usize> {
    t.check()?;
    let n = t.rank;
    Ok(match t.series {
        Series::A => n * (n + 1),
        Series::B | Series::C => 2 * n * n,
        Series::D => 2 * n * (n - 1),
        Series::E => [72, 126, 240][n - 6],
        Series::F => 48,
        Series::G => 12,
    })
}

/// Whether simple root `i` is strictly shorter than simple root `j`.
pub fn is_shorter(simple: &[Vector], i: usize, j: usize) -> bool {
    simple[i].norm2() < simple[j].norm2()
}
