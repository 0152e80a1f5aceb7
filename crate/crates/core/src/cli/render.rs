//! Human and machine renderings of reports, audits and search results.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use crate::analysis::{AuditReport, Verdict};
use crate::bounds::BoundReport;
use crate::search::{Certification, SearchResult, SearchStatus};

/// `GAP(lo, hi)` or `CLOSED(n)` from the report's best bounds.
pub fn bound_status(r: &BoundReport) -> String {
    if r.is_closed() {
        format!("CLOSED({})", r.best_upper)
    } else {
        format!("GAP({}, {})", r.best_lower, r.best_upper)
    }
}

pub fn report_text(r: &BoundReport) -> String {
    let mut out = String::new();
    let w = |out: &mut String, s: String| out.push_str(&s);
    w(&mut out, format!("n(k,d) bounds for k={}, d={}\n", r.k, r.d));
    for (name, value) in &r.entries {
        let kind = if name.is_upper() { "upper" } else { "     " };
        w(
            &mut out,
            format!("  {:<14} {:>12}  {kind}  {}\n", name.as_str(), value, name.description()),
        );
    }
    w(&mut out, format!("  {:<14} {:>12}\n", "best_lower", r.best_lower));
    w(&mut out, format!("  {:<14} {:>12}\n", "best_upper", r.best_upper));
    if let Some(e) = r.exact_known {
        w(
            &mut out,
            format!("  {:<14} {:>12}  ({})\n", "exact", e.value, e.provenance.as_str()),
        );
    }
    w(&mut out, format!("  {:<14} {:>12}\n", "status", bound_status(r)));
    out
}

#[derive(Serialize)]
struct ReportRecord<'a> {
    k: usize,
    d: usize,
    #[serde(flatten)]
    bounds: BTreeMap<&'static str, u128>,
    best_lower: u128,
    best_upper: u128,
    exact_known: Option<u128>,
    exact_provenance: Option<&'a str>,
    status: String,
}

/// One flat JSON object: `k`, `d`, one key per applicable bound,
/// `best_lower`, `best_upper`, `exact_known`, `exact_provenance`, `status`.
pub fn report_json(r: &BoundReport) -> String {
    let record = ReportRecord {
        k: r.k,
        d: r.d,
        bounds: r.entries.iter().map(|(n, v)| (n.as_str(), v.0)).collect(),
        best_lower: r.best_lower.0,
        best_upper: r.best_upper.0,
        exact_known: r.exact_known.map(|e| e.value),
        exact_provenance: r.exact_known.map(|e| e.provenance.as_str()),
        status: bound_status(r),
    };
    serde_json::to_string(&record).expect("report serializes")
}

pub fn audit_text(a: &AuditReport) -> String {
    let mut out = String::new();
    for (check, verdict) in &a.checks {
        let line = match verdict {
            Verdict::Pass => format!("  {:<20} pass\n", check.as_str()),
            Verdict::Fail(why) => format!("  {:<20} FAIL  {why}\n", check.as_str()),
            Verdict::Skipped(why) => format!("  {:<20} skipped  {why}\n", check.as_str()),
        };
        out.push_str(&line);
    }
    if let Some(s) = a.weight_sum {
        writeln!(out, "  {:<20} {s}", "weight_sum").expect("writing to a String");
    }
    out
}

/// `9 optimal` for a closed search, `>=27 timeout` otherwise, followed by
/// the node count and elapsed time.
pub fn search_summary(r: &SearchResult) -> String {
    let size = match r.status {
        SearchStatus::Optimal => r.best_size.to_string(),
        _ => format!(">={}", r.best_size),
    };
    format!(
        "{size} {} nodes={} elapsed={:.3}s",
        r.status.as_str(),
        r.nodes_explored,
        r.elapsed.as_secs_f64()
    )
}

#[derive(Serialize)]
struct SearchRecord {
    k: usize,
    d: usize,
    best_size: usize,
    status: SearchStatus,
    nodes_explored: u64,
    elapsed_seconds: f64,
    upper_cutoff: Option<u128>,
}

pub fn search_json(r: &SearchResult) -> String {
    serde_json::to_string(&SearchRecord {
        k: r.k,
        d: r.d,
        best_size: r.best_size,
        status: r.status,
        nodes_explored: r.nodes_explored,
        elapsed_seconds: r.elapsed.as_secs_f64(),
        upper_cutoff: r.upper_cutoff,
    })
    .expect("search result serializes")
}

pub fn certification_json(k: usize, d: usize, c: &Certification) -> String {
    #[derive(Serialize)]
    struct Record<'a> {
        k: usize,
        d: usize,
        #[serde(flatten)]
        certification: &'a Certification,
    }
    serde_json::to_string(&Record {
        k,
        d,
        certification: c,
    })
    .expect("certification serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::report;

    #[test]
    fn report_renderings() {
        let r = report(5, 7).unwrap();
        let text = report_text(&r);
        for needle in ["806", "128", "75", "74", "GAP(74, 75)"] {
            assert!(text.contains(needle), "{needle} missing:\n{text}");
        }
        let v: serde_json::Value = serde_json::from_str(&report_json(&r)).unwrap();
        assert_eq!(v["huang_sudakov"], 806);
        assert_eq!(v["agkp"], 128);
        assert_eq!(v["main"], 75);
        assert_eq!(v["exact_known"], 74);
        assert_eq!(v["best_upper"], 75);
        assert_eq!(v["status"], "GAP(74, 75)");
        let v: serde_json::Value = serde_json::from_str(&report_json(&report(2, 4).unwrap())).unwrap();
        assert_eq!(v["status"], "CLOSED(9)");
    }

    #[test]
    fn certification_record() {
        let c = Certification::Gap { lower: 27, upper: 28 };
        assert_eq!(
            certification_json(3, 6, &c),
            r#"{"k":3,"d":6,"outcome":"gap","lower":27,"upper":28}"#
        );
    }
}
