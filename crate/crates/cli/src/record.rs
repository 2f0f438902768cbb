//! Machine-readable result records.
//!
//! Exact integers are serialized as decimal strings so no JSON consumer can
//! degrade them; decimal fields are derived display values only.

use serde_json::{json, Value};

use grdisc_core::constructions::ConstructionReport;
use grdisc_core::{BoundCertificate, OrderingResult, UniformHypergraph};

use crate::decimal::decimal;

pub const DISPLAY_DIGITS: usize = 12;

fn reduced_fraction(m: usize, denom: i128) -> String {
    if denom == 0 {
        return "0/1".into();
    }
    let mut a = m as i128;
    let mut b = denom;
    let g = gcd(a, b).max(1);
    a /= g;
    b /= g;
    format!("{a}/{b}")
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

/// Record for an evaluated or greedily computed ordering.
pub fn result_record(
    h: &UniformHypergraph,
    result: &OrderingResult,
    first_deletion_bound_scaled: i128,
    denom: i128,
    timing_ms: f64,
) -> Value {
    let rows: Vec<Value> = result
        .profile
        .rows
        .iter()
        .map(|r| {
            json!({
                "i": r.i,
                "e_i": r.edges,
                "n_i": r.scaled.to_string(),
                "value": decimal(r.scaled, denom, DISPLAY_DIGITS),
            })
        })
        .collect();
    json!({
        "n": h.vertex_count(),
        "k": h.uniformity(),
        "m": h.edge_count(),
        "p_fraction": reduced_fraction(h.edge_count(), denom),
        "p_decimal": decimal(h.edge_count() as i128, denom, DISPLAY_DIGITS),
        "variant": result.variant.name(),
        "ordering": result.ordering,
        "rows": rows,
        "max_abs_scaled": result.profile.max_abs_scaled.to_string(),
        "bound_scaled": result.profile.bound_scaled.to_string(),
        "within_bound": result.certificate.within_bound,
        "first_deletion_bound_scaled": first_deletion_bound_scaled.to_string(),
        "timing_ms": timing_ms,
    })
}

pub fn certificate_record(cert: &BoundCertificate, denom: i128) -> Value {
    json!({
        "within_bound": cert.within_bound,
        "first_violation_index": cert.first_violation_index,
        "max_abs_scaled": cert.max_abs_scaled.to_string(),
        "bound_scaled": cert.bound_scaled.to_string(),
        "max_abs_value": decimal(cert.max_abs_scaled, denom, DISPLAY_DIGITS),
        "bound_value": decimal(cert.bound_scaled, denom, DISPLAY_DIGITS),
    })
}

/// Witness emitted when an ordering lands outside the proven bound; exit
/// code 1 pairs with this record.
pub fn violation_witness(h: &UniformHypergraph, result: &OrderingResult, denom: i128) -> Value {
    json!({
        "claim": "ordering exceeds max{p,1-p}*C(n-1,k-1)",
        "n": h.vertex_count(),
        "k": h.uniformity(),
        "m": h.edge_count(),
        "variant": result.variant.name(),
        "ordering": result.ordering,
        "max_abs_scaled": result.profile.max_abs_scaled.to_string(),
        "bound_scaled": result.profile.bound_scaled.to_string(),
        "first_violation_index": result.certificate.first_violation_index,
        "denominator": denom.to_string(),
    })
}

pub fn construction_record(report: &ConstructionReport) -> Value {
    let degrees: Vec<Value> = report
        .degree_multiset
        .iter()
        .map(|(d, c)| json!({"degree": d, "count": c}))
        .collect();
    let filler = report.filler.as_ref().map(|f| {
        json!({
            "target_edges": f.target_edges,
            "vertex_count": f.vertex_count,
            "initial_cap": f.initial_cap,
            "final_cap": f.final_cap,
            "realized_max_degree": f.realized_max_degree,
            "retries": f.retries,
        })
    });
    json!({
        "n": report.n,
        "k": report.k,
        "m": report.m,
        "p_fraction": format!("{}/{}", report.p.numer(), report.p.denom()),
        "first_deletion_bound_scaled": report.first_deletion_bound_scaled.to_string(),
        "lower_expr_scaled": report
            .lower_expr_scaled
            .as_ref()
            .map(|v| format!("{}/{}", v.numer(), v.denom())),
        "lower_expr_value": report.lower_expr_value,
        "degree_multiset": degrees,
        "branch": format!("{:?}", report.branch),
        "regime_ok": report.regime_ok,
        "filler": filler,
    })
}

/// Human-readable rendering of a result record.
pub fn result_text(record: &Value) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "n={} k={} m={} p={} ({})\n",
        record["n"], record["k"], record["m"], record["p_fraction"], record["p_decimal"]
    ));
    out.push_str(&format!("variant: {}\n", record["variant"].as_str().unwrap_or("?")));
    let ordering: Vec<String> = record["ordering"]
        .as_array()
        .map(|a| a.iter().map(|v| v.to_string()).collect())
        .unwrap_or_default();
    out.push_str(&format!("ordering: {}\n", ordering.join(" ")));
    out.push_str("  i    e_i    N_i    value\n");
    if let Some(rows) = record["rows"].as_array() {
        for r in rows {
            out.push_str(&format!(
                "  {}    {}    {}    {}\n",
                r["i"],
                r["e_i"],
                r["n_i"].as_str().unwrap_or("?"),
                r["value"].as_str().unwrap_or("?"),
            ));
        }
    }
    out.push_str(&format!(
        "max |N| = {}, bound = {}, within_bound = {}\n",
        record["max_abs_scaled"].as_str().unwrap_or("?"),
        record["bound_scaled"].as_str().unwrap_or("?"),
        record["within_bound"],
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use grdisc_core::{first_deletion_bound, order, DiscContext, GreedyVariant};

    #[test]
    fn record_fields_for_path3() {
        let h = UniformHypergraph::new(3, 2, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let r = order(&h, GreedyVariant::ProofRule).unwrap();
        let ctx = DiscContext::for_hypergraph(&h).unwrap();
        let fdb = first_deletion_bound(&h).unwrap();
        let rec = result_record(&h, &r, fdb, ctx.denom(), 0.0);
        assert_eq!(rec["max_abs_scaled"], "1");
        assert_eq!(rec["bound_scaled"], "4");
        assert_eq!(rec["within_bound"], true);
        assert_eq!(rec["p_fraction"], "2/3");
        let text = result_text(&rec);
        assert!(text.contains("within_bound = true"));
    }
}
