//! WebAssembly bindings for the browser demo. Every export returns a JSON
//! string; errors surface as thrown JavaScript strings.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use isoform_core::catalog::{parse_params, Catalog};
use isoform_core::diagram::fold;
use isoform_core::formality::check_formality;
use isoform_core::rootsys::{build_root_system, CartanType, Series};
use isoform_core::weyl::{weyl_order_bfs, weyl_order_closed_form};
use isoform_core::InvolutionName;

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn cartan(series: &str, rank: usize) -> Result<CartanType, String> {
    let series: Series = series.parse().map_err(err)?;
    let t = CartanType::new(series, rank);
    t.check().map_err(err)?;
    Ok(t)
}

/// Fold result with the folded type name and DOT source attached.
pub fn fold_value(series: &str, rank: usize, involution: &str) -> Result<Value, String> {
    let name: InvolutionName = involution.parse().map_err(err)?;
    if name == InvolutionName::FactorSwap {
        return Err("factor-swap needs two equal simple factors".into());
    }
    let result = fold(&[cartan(series, rank)?], name).map_err(err)?;
    let mut v = serde_json::to_value(&result).map_err(err)?;
    v["folded_name"] = json!(result.folded_name());
    v["dot"] = json!(result.to_dot());
    Ok(v)
}

/// Formality report for a catalog label and a "k=v, k=v" parameter string.
pub fn analyze_value(label: &str, params: &str) -> Result<Value, String> {
    let items: Vec<&str> = params.split([',', ' ']).filter(|s| !s.is_empty()).collect();
    let params = parse_params(&items).map_err(err)?;
    let entry = Catalog::embedded().instantiate(label, &params).map_err(err)?;
    let report = check_formality(&entry).map_err(err)?;
    serde_json::to_value(&report).map_err(err)
}

/// Closed-form Weyl group order, with the brute-force count when it is
/// within the enumeration guard.
pub fn weyl_value(series: &str, rank: usize) -> Result<Value, String> {
    let t = cartan(series, rank)?;
    let closed = weyl_order_closed_form(&[t]).map_err(err)?.value;
    let bfs = build_root_system(&[t])
        .and_then(|rs| weyl_order_bfs(&rs))
        .map(|w| w.value)
        .ok();
    Ok(json!({ "type": t.to_string(), "closed_form": closed, "bfs": bfs }))
}

/// Catalog labels with their parameter ranges, for building the form.
pub fn templates_value() -> Value {
    let catalog = Catalog::embedded();
    let rows: Vec<Value> = catalog
        .templates()
        .iter()
        .map(|t| {
            let params: BTreeMap<&str, Value> = t
                .params
                .iter()
                .map(|(k, r)| (k.as_str(), serde_json::to_value(r).unwrap_or(Value::Null)))
                .collect();
            json!({ "label": t.label, "params": params, "regime": t.regime.to_string() })
        })
        .collect();
    Value::Array(rows)
}

fn to_js(v: Result<Value, String>) -> Result<String, JsValue> {
    v.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = foldDiagram)]
pub fn fold_diagram(series: &str, rank: usize, involution: &str) -> Result<String, JsValue> {
    to_js(fold_value(series, rank, involution))
}

#[wasm_bindgen(js_name = analyzePair)]
pub fn analyze_pair(label: &str, params: &str) -> Result<String, JsValue> {
    to_js(analyze_value(label, params))
}

#[wasm_bindgen(js_name = weylOrder)]
pub fn weyl_order(series: &str, rank: usize) -> Result<String, JsValue> {
    to_js(weyl_value(series, rank))
}

#[wasm_bindgen(js_name = catalogTemplates)]
pub fn catalog_templates() -> String {
    templates_value().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fold_e6() {
        let v = fold_value("E", 6, "flip").unwrap();
        assert_eq!(v["folded_name"], "F4");
        assert_eq!(v["total_compartments"], 1152);
        assert!(v["dot"].as_str().unwrap().contains("cluster"));
    }

    #[test]
    fn fold_rejects_bad_input() {
        assert!(fold_value("B", 3, "flip").is_err());
        assert!(fold_value("A", 2, "factor-swap").is_err());
        assert!(fold_value("E", 5, "identity").is_err());
    }

    #[test]
    fn analyze_with_parameter_string() {
        let v = analyze_value("BDI-odd", "p=1, q=2").unwrap();
        assert_eq!(v["r"], 3);
        assert_eq!(v["formal"], true);
        assert!(analyze_value("AI", "n=two").is_err());
    }

    #[test]
    fn weyl_orders() {
        let v = weyl_value("F", 4).unwrap();
        assert_eq!(v["closed_form"], 1152);
        assert_eq!(v["bfs"], 1152);
        assert_eq!(weyl_value("E", 8).unwrap()["bfs"], Value::Null);
    }

    #[test]
    fn templates_list_every_label() {
        let v = templates_value();
        let labels: Vec<&str> = v
            .as_array()
            .unwrap()
            .iter()
            .map(|t| t["label"].as_str().unwrap())
            .collect();
        assert!(labels.contains(&"EI") && labels.contains(&"AI"));
    }
}
