//! Table of symmetric pairs at the Lie-algebra level.
//!
//! Entries are templates read from a JSON document (an embedded default, or a
//! user-supplied file). A template names the root-system type of g, the
//! diagram involution that carries σ on the torus, the type of the symmetric
//! subalgebra k, and how dim H*(G/K) is obtained. Ranks may be integer
//! expressions in the template's parameters. See `docs/catalog.md` for the
//! full format.

mod expr;

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involution::{make_involution, named_permutation, DiagramInvolution, InvolutionName};
use crate::rootsys::{build_root_system, CartanType, RootSystem, Series};
use crate::weyl::weyl_order_closed_form;

pub use expr::eval as eval_expr;

pub const EMBEDDED_CATALOG: &str = include_str!("../../data/catalog.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    EqualRank,
    SplitRank,
    OuterNonsplit,
    #[serde(rename = "group_type_II")]
    GroupTypeII,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::EqualRank => "equal_rank",
            Regime::SplitRank => "split_rank",
            Regime::OuterNonsplit => "outer_nonsplit",
            Regime::GroupTypeII => "group_type_II",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamRange {
    pub min: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<Parity>,
}

impl ParamRange {
    fn admits(&self, v: i64) -> bool {
        v >= self.min
            && self.max.is_none_or(|m| v <= m)
            && match self.parity {
                None => true,
                Some(Parity::Even) => v % 2 == 0,
                Some(Parity::Odd) => v % 2 != 0,
            }
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.max {
            Some(m) => write!(f, "{}..={}", self.min, m)?,
            None => write!(f, ">= {}", self.min)?,
        }
        if let Some(p) = self.parity {
            write!(f, ", {}", if p == Parity::Even { "even" } else { "odd" })?;
        }
        Ok(())
    }
}

/// A rank given either as a literal or as an expression in the parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RankExpr {
    Int(i64),
    Expr(String),
}

impl RankExpr {
    fn eval(&self, vars: &BTreeMap<String, i64>) -> Result<i64> {
        match self {
            RankExpr::Int(v) => Ok(*v),
            RankExpr::Expr(s) => expr::eval(s, vars),
        }
    }
}

/// One object of the catalog document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryTemplate {
    pub label: String,
    #[serde(default)]
    pub params: BTreeMap<String, ParamRange>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub derived: BTreeMap<String, String>,
    pub g_type: Vec<(Series, RankExpr)>,
    pub involution: InvolutionName,
    pub k_type: Vec<(Series, RankExpr)>,
    pub rank_k: RankExpr,
    pub rank_space: RankExpr,
    pub regime: Regime,
    #[serde(rename = "dim_M_formula")]
    pub dim_m_formula: String,
    pub provenance: String,
}

/// How dim H*(G/K) is obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DimFormula {
    /// |W(g)| / |W(k)|.
    EqualRankQuotient,
    /// 2^(rank G/K).
    SplitRankPower,
    /// 2^m for the parameter or derived variable `m`.
    TwoPowM,
    /// 2 · binom(p+q, p).
    TwoBinom,
    Const(u64),
}

impl DimFormula {
    pub fn parse(tag: &str) -> Result<Self> {
        Ok(match tag {
            "equal_rank_quotient" => DimFormula::EqualRankQuotient,
            "split_rank_power" => DimFormula::SplitRankPower,
            "two_pow_m" => DimFormula::TwoPowM,
            "two_binom" => DimFormula::TwoBinom,
            other => match other.strip_prefix("const:").map(str::parse::<u64>) {
                Some(Ok(v)) if v > 0 => DimFormula::Const(v),
                _ => return Err(Error::UnknownFormula(other.to_string())),
            },
        })
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// A fully instantiated catalog row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetricPairEntry {
    pub label: String,
    pub params: BTreeMap<String, i64>,
    #[serde(skip)]
    pub vars: BTreeMap<String, i64>,
    pub g_type: Vec<CartanType>,
    pub involution: InvolutionName,
    pub k_type: Vec<CartanType>,
    pub k_weyl_order: u64,
    pub rank_g: u32,
    pub rank_k: u32,
    pub rank_space: u32,
    pub regime: Regime,
    #[serde(rename = "dim_M_formula")]
    pub dim_m_formula: String,
    #[serde(rename = "dim_M")]
    pub dim_m: u64,
    pub provenance: String,
}

impl SymmetricPairEntry {
    /// `AI(n=4)`, `EI`, `BDI-odd(p=1,q=2)`.
    pub fn display_name(&self) -> String {
        if self.params.is_empty() {
            self.label.clone()
        } else {
            format!("{}({})", self.label, self.params_string())
        }
    }

    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn root_system(&self) -> Result<RootSystem> {
        build_root_system(&self.g_type)
    }

    pub fn involution(&self) -> Result<DiagramInvolution> {
        let rs = self.root_system()?;
        make_involution(&rs, named_permutation(&self.g_type, self.involution)?)
    }

    /// Evaluates the dim H*(M) formula of this entry.
    pub fn evaluate_dim_formula(&self) -> Result<u64> {
        let inconsistent = |m: String| Error::CatalogInconsistency(format!("{}: {m}", self.display_name()));
        Ok(match DimFormula::parse(&self.dim_m_formula)? {
            DimFormula::EqualRankQuotient => {
                let wg = weyl_order_closed_form(&self.g_type)?.value;
                if wg % self.k_weyl_order != 0 {
                    return Err(inconsistent(format!(
                        "|W(g)| = {wg} not divisible by |W(k)| = {}",
                        self.k_weyl_order
                    )));
                }
                wg / self.k_weyl_order
            }
            DimFormula::SplitRankPower => 1u64 << self.rank_space,
            DimFormula::TwoPowM => {
                let m = *self
                    .vars
                    .get("m")
                    .ok_or_else(|| inconsistent("two_pow_m needs a variable m".into()))?;
                1u64 << u32::try_from(m).map_err(|_| inconsistent(format!("m = {m}")))?
            }
            DimFormula::TwoBinom => {
                let get = |k: &str| {
                    self.vars
                        .get(k)
                        .and_then(|&v| u64::try_from(v).ok())
                        .ok_or_else(|| inconsistent(format!("two_binom needs parameter {k}")))
                };
                let (p, q) = (get("p")?, get("q")?);
                2 * binomial(p + q, p)
            }
            DimFormula::Const(v) => v,
        })
    }
}

/// Parameters of the fixed verification suite, in output order.
pub fn suite_members() -> Vec<(&'static str, Vec<(&'static str, i64)>)> {
    let mut out: Vec<(&'static str, Vec<(&'static str, i64)>)> = Vec::new();
    for n in 3..=7 {
        out.push(("AI", vec![("n", n)]));
    }
    for (p, q) in [(1, 1), (1, 2), (2, 2)] {
        out.push(("BDI-odd", vec![("p", p), ("q", q)]));
    }
    out.push(("EI", vec![]));
    for n in 2..=3 {
        out.push(("AII", vec![("n", n)]));
    }
    out.push(("EIV", vec![]));
    for g in ["TypeII-A1", "TypeII-A2", "TypeII-B2", "TypeII-G2"] {
        out.push((g, vec![]));
    }
    out.push(("CI", vec![("n", 2)]));
    out.push(("CI", vec![("n", 3)]));
    out.push(("DIII", vec![("n", 3)]));
    out.push(("G", vec![]));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    templates: Vec<EntryTemplate>,
}

impl Catalog {
    pub fn embedded() -> Self {
        Self::from_json(EMBEDDED_CATALOG).expect("embedded catalog parses")
    }

    pub fn from_json(src: &str) -> Result<Self> {
        let templates: Vec<EntryTemplate> =
            serde_json::from_str(src).map_err(|e| Error::CatalogFormat(e.to_string()))?;
        for t in &templates {
            DimFormula::parse(&t.dim_m_formula)?;
        }
        Ok(Catalog { templates })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let src =
            std::fs::read_to_string(path).map_err(|e| Error::CatalogFormat(format!("{}: {e}", path.display())))?;
        Self::from_json(&src)
    }

    pub fn templates(&self) -> &[EntryTemplate] {
        &self.templates
    }

    /// Distinct labels in document order.
    pub fn labels(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for t in &self.templates {
            if !out.contains(&t.label.as_str()) {
                out.push(&t.label);
            }
        }
        out
    }

    pub fn instantiate(&self, label: &str, params: &BTreeMap<String, i64>) -> Result<SymmetricPairEntry> {
        let candidates: Vec<&EntryTemplate> = self.templates.iter().filter(|t| t.label == label).collect();
        if candidates.is_empty() {
            return Err(Error::UnknownLabel(label.to_string()));
        }
        let matching = candidates.iter().find(|t| {
            t.params.len() == params.len()
                && t.params
                    .iter()
                    .all(|(k, range)| params.get(k).is_some_and(|&v| range.admits(v)))
        });
        let Some(template) = matching else {
            let expected: Vec<String> = candidates
                .iter()
                .map(|t| {
                    if t.params.is_empty() {
                        "no parameters".to_string()
                    } else {
                        t.params
                            .iter()
                            .map(|(k, r)| format!("{k} {r}"))
                            .collect::<Vec<_>>()
                            .join(", ")
                    }
                })
                .collect();
            return Err(Error::Params(format!(
                "{label} takes {}; got {{{}}}",
                expected.join(" or "),
                params
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(",")
            )));
        };
        instantiate_template(template, params)
    }

    pub fn enumerate_suite(&self) -> Result<Vec<SymmetricPairEntry>> {
        suite_members()
            .into_iter()
            .map(|(label, ps)| {
                let params = ps.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
                self.instantiate(label, &params)
            })
            .collect()
    }
}

impl Default for Catalog {
    fn default() -> Self {
        Self::embedded()
    }
}

fn instantiate_template(t: &EntryTemplate, params: &BTreeMap<String, i64>) -> Result<SymmetricPairEntry> {
    let name = if params.is_empty() {
        t.label.clone()
    } else {
        format!(
            "{}({})",
            t.label,
            params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(",")
        )
    };
    let inconsistent = |m: String| Error::CatalogInconsistency(format!("{name}: {m}"));

    let mut vars = params.clone();
    for (k, src) in &t.derived {
        let v = expr::eval(src, &vars)?;
        vars.insert(k.clone(), v);
    }
    let types = |spec: &[(Series, RankExpr)]| -> Result<Vec<CartanType>> {
        let mut out = Vec::new();
        for (series, rank) in spec {
            let r = rank.eval(&vars)?;
            if r < 0 {
                return Err(inconsistent(format!("negative rank {r} for series {series}")));
            }
            // rank-0 factors (e.g. A_{p-1} at p = 1) contribute nothing
            if r > 0 {
                out.push(CartanType::new(*series, r as usize));
            }
        }
        Ok(out)
    };
    let g_type = types(&t.g_type)?;
    let k_type = types(&t.k_type)?;
    let to_u32 = |v: i64, what: &str| u32::try_from(v).map_err(|_| inconsistent(format!("{what} = {v}")));
    let rank_g = g_type.iter().map(|c| c.rank as u32).sum::<u32>();
    let rank_k = to_u32(t.rank_k.eval(&vars)?, "rank_k")?;
    let rank_space = to_u32(t.rank_space.eval(&vars)?, "rank_space")?;
    let k_weyl_order = weyl_order_closed_form(&k_type)?.value;

    let mut entry = SymmetricPairEntry {
        label: t.label.clone(),
        params: params.clone(),
        vars,
        g_type,
        involution: t.involution,
        k_type,
        k_weyl_order,
        rank_g,
        rank_k,
        rank_space,
        regime: t.regime,
        dim_m_formula: t.dim_m_formula.clone(),
        dim_m: 0,
        provenance: t.provenance.clone(),
    };

    let inv = entry.involution()?;
    let dim_tk = inv.split_torus().dim_k() as u32;
    if dim_tk != rank_k {
        return Err(inconsistent(format!(
            "rank_k = {rank_k} but the involution has {dim_tk} orbits on simple roots"
        )));
    }
    if rank_g - rank_k > rank_space {
        return Err(inconsistent(format!(
            "rank g − rank k = {} exceeds rank G/K = {rank_space}",
            rank_g - rank_k
        )));
    }
    let split = rank_g == rank_k + rank_space;
    let expected = match (entry.involution, inv.is_identity()) {
        (_, true) => Regime::EqualRank,
        (InvolutionName::FactorSwap, false) => Regime::GroupTypeII,
        (_, false) if split => Regime::SplitRank,
        _ => Regime::OuterNonsplit,
    };
    if expected != entry.regime {
        return Err(inconsistent(format!(
            "declared regime {} but ranks and involution give {expected}",
            entry.regime
        )));
    }
    if entry.regime == Regime::GroupTypeII && !split {
        return Err(inconsistent("type II pair is not of split rank".into()));
    }
    entry.dim_m = entry.evaluate_dim_formula()?;
    Ok(entry)
}

/// Parses `k=v` strings into a parameter map.
pub fn parse_params<S: AsRef<str>>(items: &[S]) -> Result<BTreeMap<String, i64>> {
    let mut out = BTreeMap::new();
    for item in items {
        let item = item.as_ref();
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Params(format!("expected k=v, got {item:?}")))?;
        let v: i64 = v
            .trim()
            .parse()
            .map_err(|_| Error::Params(format!("{k}: {v:?} is not an integer")))?;
        if out.insert(k.trim().to_string(), v).is_some() {
            return Err(Error::Params(format!("parameter {k} given twice")));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Series::*;

    fn params(ps: &[(&str, i64)]) -> BTreeMap<String, i64> {
        ps.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn ai_even() {
        let e = Catalog::embedded().instantiate("AI", &params(&[("n", 4)])).unwrap();
        assert_eq!(e.g_type, vec![CartanType::new(A, 3)]);
        assert_eq!(e.involution, InvolutionName::Flip);
        assert_eq!(e.k_type, vec![CartanType::new(D, 2)]);
        assert_eq!(e.k_weyl_order, 4);
        assert_eq!(e.regime, Regime::OuterNonsplit);
        assert_eq!(e.dim_m, 4);
    }

    #[test]
    fn exceptional_entries() {
        let c = Catalog::embedded();
        let ei = c.instantiate("EI", &params(&[])).unwrap();
        assert_eq!((ei.k_weyl_order, ei.dim_m, ei.rank_k), (384, 12, 4));
        let eiv = c.instantiate("EIV", &params(&[])).unwrap();
        assert_eq!((eiv.k_weyl_order, eiv.regime, eiv.dim_m), (1152, Regime::SplitRank, 4));
        let t2 = c.instantiate("TypeII-A1", &params(&[])).unwrap();
        assert_eq!(t2.g_type, vec![CartanType::new(A, 1); 2]);
        assert_eq!((t2.regime, t2.dim_m), (Regime::GroupTypeII, 2));
    }

    #[test]
    fn input_errors() {
        let c = Catalog::embedded();
        assert_eq!(c.instantiate("XX", &params(&[])), Err(Error::UnknownLabel("XX".into())));
        assert!(matches!(
            c.instantiate("AI", &params(&[("n", 2)])),
            Err(Error::Params(_))
        ));
        assert!(matches!(c.instantiate("AI", &params(&[])), Err(Error::Params(_))));
        assert!(matches!(
            c.instantiate("EI", &params(&[("n", 2)])),
            Err(Error::Params(_))
        ));
        assert!(matches!(
            c.instantiate("BDI-odd", &params(&[("p", 0), ("q", 1)])),
            Err(Error::Params(_))
        ));
    }

    #[test]
    fn suite_entries() {
        let suite = Catalog::embedded().enumerate_suite().unwrap();
        assert_eq!(suite.len(), suite_members().len());
        let bdi = suite
            .iter()
            .find(|e| e.label == "BDI-odd" && e.params == params(&[("p", 1), ("q", 2)]))
            .unwrap();
        assert_eq!(bdi.k_weyl_order, 16);
        let aii = suite.iter().find(|e| e.label == "AII" && e.params["n"] == 2).unwrap();
        assert_eq!(aii.g_type, vec![CartanType::new(A, 3)]);
        assert_eq!(aii.k_type, vec![CartanType::new(C, 2)]);
        assert_eq!(aii.regime, Regime::SplitRank);
    }

    #[test]
    fn unknown_keys_rejected() {
        let src = r#"[{"label":"X","g_type":[["A",1]],"involution":"identity","k_type":[],
            "rank_k":1,"rank_space":1,"regime":"equal_rank","dim_M_formula":"const:2",
            "provenance":"","colour":"blue"}]"#;
        assert!(matches!(Catalog::from_json(src), Err(Error::CatalogFormat(_))));
        let bad_tag = src.replace(r#","colour":"blue""#, "").replace("const:2", "cohomology");
        assert!(matches!(Catalog::from_json(&bad_tag), Err(Error::UnknownFormula(_))));
    }

    #[test]
    fn inconsistent_entries_rejected() {
        // S^2 = SU(2)/U(1) declared with the wrong regime
        let src = r#"[{"label":"X","g_type":[["A",1]],"involution":"identity","k_type":[],
            "rank_k":1,"rank_space":1,"regime":"split_rank","dim_M_formula":"const:2",
            "provenance":""}]"#;
        let c = Catalog::from_json(src).unwrap();
        assert!(matches!(
            c.instantiate("X", &params(&[])),
            Err(Error::CatalogInconsistency(_))
        ));
        let wrong_rank = src
            .replace(r#""rank_k":1"#, r#""rank_k":2"#)
            .replace("split_rank", "equal_rank");
        let c = Catalog::from_json(&wrong_rank).unwrap();
        assert!(matches!(
            c.instantiate("X", &params(&[])),
            Err(Error::CatalogInconsistency(_))
        ));
    }

    #[test]
    fn params_parsing() {
        assert_eq!(parse_params(&["n=5"]).unwrap(), params(&[("n", 5)]));
        assert!(parse_params(&["n"]).is_err());
        assert!(parse_params(&["n=x"]).is_err());
        assert!(parse_params(&["n=1", "n=2"]).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 1), 3);
        assert_eq!(binomial(2, 3), 0);
    }
}
