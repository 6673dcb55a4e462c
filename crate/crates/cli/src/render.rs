use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use isoform_core::catalog::{suite_members, Catalog};
use isoform_core::diagram::{Diagram, FoldResult};
use isoform_core::formality::{check_formality, restricted_system, FormalityReport};
use isoform_core::rootsys::{build_root_system, format_types, CartanType, Series};
use isoform_core::weyl::{weyl_order_bfs, weyl_order_closed_form};
use isoform_core::Error;

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn types(t: &[CartanType]) -> String {
    format_types(t)
}

pub fn report_markdown(r: &FormalityReport) -> String {
    let e = &r.entry;
    let mut out = String::new();
    writeln!(out, "# {}\n", e.display_name()).unwrap();
    writeln!(out, "| quantity | value |").unwrap();
    writeln!(out, "|---|---|").unwrap();
    let rows: Vec<(&str, String)> = vec![
        ("g", types(&e.g_type)),
        ("involution", e.involution.to_string()),
        ("k", types(&e.k_type)),
        ("regime", e.regime.to_string()),
        (
            "rank g / rank k / rank G/K",
            format!("{} / {} / {}", e.rank_g, e.rank_k, e.rank_space),
        ),
        ("k′", types(&r.kprime_type)),
        ("nonreduced", r.nonreduced.to_string()),
        ("\\|W(k′)\\|", r.total_compartments.to_string()),
        ("\\|W(k)\\|", e.k_weyl_order.to_string()),
        ("r", r.r.to_string()),
        ("dim H*(M^T) = 2^(rank g − rank k)·r", r.dim_fixed_set.to_string()),
        ("dim H*(M)", e.dim_m.to_string()),
        ("formal", r.formal.to_string()),
    ];
    for (k, v) in rows {
        writeln!(out, "| {k} | {v} |").unwrap();
    }
    writeln!(out, "\nSource for dim H*(M): {}", e.provenance).unwrap();
    out
}

fn diagram_markdown(out: &mut String, d: &Diagram) {
    writeln!(out, "| node | coordinates | \\|α\\|² |").unwrap();
    writeln!(out, "|---|---|---|").unwrap();
    for n in &d.nodes {
        writeln!(
            out,
            "| {} | ({}) | {} |",
            n.index,
            n.coords.join(", "),
            n.squared_length
        )
        .unwrap();
    }
    if !d.bonds.is_empty() {
        let bonds: Vec<String> = d
            .bonds
            .iter()
            .map(|b| match b.short_end {
                Some(s) => format!("{}={}({}x, short {})", b.from, b.to, b.multiplicity, s),
                None => format!("{}-{}", b.from, b.to),
            })
            .collect();
        writeln!(out, "\nBonds: {}", bonds.join(", ")).unwrap();
    }
}

pub fn fold_markdown(f: &FoldResult) -> String {
    let mut out = String::new();
    writeln!(out, "# {} with {}\n", types(&f.source_type), f.involution).unwrap();
    let perm: Vec<String> = f.permutation.iter().map(ToString::to_string).collect();
    writeln!(out, "Permutation of simple roots: [{}]\n", perm.join(", ")).unwrap();
    writeln!(out, "## Source diagram ({})\n", types(&f.source.types)).unwrap();
    diagram_markdown(&mut out, &f.source);
    writeln!(out, "\n## Restricted simple roots\n").unwrap();
    diagram_markdown(&mut out, &f.folded);
    writeln!(out).unwrap();
    writeln!(out, "Folded type: {}", f.folded_name()).unwrap();
    writeln!(out, "Reduced type: {}", types(&f.kprime_type)).unwrap();
    writeln!(out, "Nonreduced: {}", f.nonreduced).unwrap();
    writeln!(out, "dim t_k = {}, dim t_p = {}", f.dim_t_k, f.dim_t_p).unwrap();
    writeln!(out, "Restricted roots: {}", f.restricted_root_count).unwrap();
    writeln!(out, "Compartments |W(k′)|: {}", f.total_compartments).unwrap();
    out
}

pub struct SuiteRow {
    pub label: String,
    pub params: BTreeMap<String, i64>,
    pub result: Result<FormalityReport, Error>,
}

impl SuiteRow {
    pub fn ok(&self) -> bool {
        matches!(&self.result, Ok(r) if r.formal)
    }

    fn name(&self) -> String {
        if self.params.is_empty() {
            self.label.clone()
        } else {
            let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            format!("{}({})", self.label, ps.join(","))
        }
    }
}

pub fn suite_rows(catalog: &Catalog) -> Vec<SuiteRow> {
    suite_members()
        .into_iter()
        .map(|(label, ps)| {
            let params: BTreeMap<String, i64> = ps.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
            let result = catalog.instantiate(label, &params).and_then(|e| check_formality(&e));
            SuiteRow {
                label: label.to_string(),
                params,
                result,
            }
        })
        .collect()
}

#[derive(Serialize)]
struct SuiteRowJson<'a> {
    label: &'a str,
    params: &'a BTreeMap<String, i64>,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<&'a FormalityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
pub struct SuiteOutput<'a> {
    all_formal: bool,
    entries: Vec<SuiteRowJson<'a>>,
}

impl<'a> SuiteOutput<'a> {
    pub fn new(rows: &'a [SuiteRow]) -> Self {
        let entries = rows
            .iter()
            .map(|row| match &row.result {
                Ok(r) => SuiteRowJson {
                    label: &row.label,
                    params: &row.params,
                    status: if r.formal { "formal" } else { "not_formal" },
                    report: Some(r),
                    error: None,
                },
                Err(e) => SuiteRowJson {
                    label: &row.label,
                    params: &row.params,
                    status: "error",
                    report: None,
                    error: Some(e.to_string()),
                },
            })
            .collect();
        SuiteOutput {
            all_formal: rows.iter().all(SuiteRow::ok),
            entries,
        }
    }
}

pub fn suite_markdown(rows: &[SuiteRow]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "| label | params | g | k | k′ | r | 2^(rk g − rk k)·r | dim H*(M) | formal |"
    )
    .unwrap();
    writeln!(out, "|---|---|---|---|---|---|---|---|---|").unwrap();
    for row in rows {
        let params: Vec<String> = row.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let params = if params.is_empty() {
            "—".to_string()
        } else {
            params.join(", ")
        };
        match &row.result {
            Ok(r) => {
                let kprime = if r.nonreduced {
                    format!("{} (BC)", types(&r.kprime_type))
                } else {
                    types(&r.kprime_type)
                };
                let mark = if r.formal { "true" } else { "**false**" };
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                    row.label,
                    params,
                    types(&r.entry.g_type),
                    types(&r.entry.k_type),
                    kprime,
                    r.r,
                    r.dim_fixed_set,
                    r.entry.dim_m,
                    mark
                )
                .unwrap();
            }
            Err(e) => {
                writeln!(
                    out,
                    "| {} | {} | **error: {}** | | | | | | **false** |",
                    row.label, params, e
                )
                .unwrap();
            }
        }
    }
    let ok = rows.iter().filter(|r| r.ok()).count();
    writeln!(out, "\n{ok}/{} entries equivariantly formal", rows.len()).unwrap();
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleRow {
    pub name: String,
    pub closed_form: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bfs: Option<u64>,
    /// Chambers of the restricted arrangement, counted as an orbit.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chambers: Option<u64>,
    pub status: String,
}

impl OracleRow {
    pub fn is_mismatch(&self) -> bool {
        self.status != "match" && self.status != "skipped"
    }

    fn finish(name: String, closed_form: u64, bfs: Result<u64, Error>, chambers: Option<u64>) -> Self {
        let (bfs, status) = match bfs {
            Ok(v) if v == closed_form && chambers.is_none_or(|c| c == closed_form) => (Some(v), "match".to_string()),
            Ok(v) => (Some(v), "mismatch".to_string()),
            Err(Error::OracleTooLarge(_)) => (None, "skipped".to_string()),
            Err(e) => (None, format!("error: {e}")),
        };
        OracleRow {
            name,
            closed_form,
            bfs,
            chambers,
            status,
        }
    }
}

fn oracle_types(max_rank: usize) -> Vec<CartanType> {
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

pub fn oracle_rows(max_rank: usize, catalog: &Catalog) -> Vec<OracleRow> {
    let mut rows: Vec<OracleRow> = oracle_types(max_rank)
        .into_iter()
        .map(|t| {
            let closed = weyl_order_closed_form(&[t]).expect("admissible").value;
            let bfs = build_root_system(&[t])
                .and_then(|rs| weyl_order_bfs(&rs))
                .map(|w| w.value);
            OracleRow::finish(t.to_string(), closed, bfs, None)
        })
        .collect();

    for row in suite_rows(catalog) {
        let name = row.name();
        let Ok(entry) = catalog.instantiate(&row.label, &row.params) else {
            continue;
        };
        let rrs = match restricted_system(&entry) {
            Ok(rrs) => rrs,
            Err(e) => {
                rows.push(OracleRow::finish(format!("k′ of {name}"), 0, Err(e), None));
                continue;
            }
        };
        if rrs.reduced().rank() > max_rank {
            continue;
        }
        let closed = rrs.total_compartments();
        let chambers = rrs.chamber_count_by_orbit(1_000_000).ok();
        let bfs = weyl_order_bfs(rrs.reduced()).map(|w| w.value);
        rows.push(OracleRow::finish(
            format!("k′ of {name} = {}", types(rrs.kprime_type())),
            closed,
            bfs,
            chambers,
        ));
    }
    rows
}

#[derive(Serialize)]
pub struct OracleOutput<'a> {
    all_match: bool,
    rows: &'a [OracleRow],
}

impl<'a> OracleOutput<'a> {
    pub fn new(rows: &'a [OracleRow]) -> Self {
        OracleOutput {
            all_match: !rows.iter().any(OracleRow::is_mismatch),
            rows,
        }
    }
}

pub fn oracle_markdown(rows: &[OracleRow]) -> String {
    let mut out = String::new();
    writeln!(out, "| type | closed form | bfs | chambers | status |").unwrap();
    writeln!(out, "|---|---|---|---|---|").unwrap();
    let show = |v: Option<u64>| v.map_or("—".to_string(), |v| v.to_string());
    for r in rows {
        writeln!(
            out,
            "| {} | {} | {} | {} | {} |",
            r.name,
            r.closed_form,
            show(r.bfs),
            show(r.chambers),
            r.status
        )
        .unwrap();
    }
    out
}
