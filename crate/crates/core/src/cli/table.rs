//! The improvement table: every `(k, d)` with `d - k >= 2` where the
//! weighted-cover bounds beat the previous best upper bound.

use std::fmt::Write;

use serde::Serialize;

use crate::bounds::{
    agkp_upper, huang_sudakov_upper, main2_upper, main_upper, refined_upper,
    refined_upper_positive_h, report,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub k: usize,
    pub d: usize,
    pub lower: u128,
    /// `min(huang_sudakov, agkp)`.
    pub prior_upper: u128,
    /// `min(main, main2, refined)`, lowered to the exact value when known.
    pub new_upper: u128,
    /// The refined bound with a positive cutoff is strictly below both
    /// `main` and `main2`.
    pub starred: bool,
}

/// The row for one `(k, d)`, whether or not it improves on the prior bound.
pub fn row(k: usize, d: usize) -> Result<TableRow> {
    if k == 0 || d < k + 2 {
        return Err(Error::Domain(format!("table rows need 1 <= k <= d - 2, got k={k}, d={d}")));
    }
    let r = report(k, d)?;
    let prior_upper = huang_sudakov_upper(k, d)?.min(agkp_upper(k, d)?).0;
    let main = main_upper(k, d)?;
    let main2 = main2_upper(k, d)?;
    let mut new_upper = main.min(main2).min(refined_upper(k, d)?).0;
    if let Some(e) = r.exact_known {
        new_upper = new_upper.min(e.value);
    }
    let starred = refined_upper_positive_h(k, d)?.is_some_and(|v| v < main && v < main2);
    Ok(TableRow {
        k,
        d,
        lower: r.best_lower.0,
        prior_upper,
        new_upper,
        starred,
    })
}

/// Improving rows for `1 <= k <= k_max`, `k + 2 <= d <= d_max`, ordered by
/// `k` then `d`.
pub fn generate(k_max: usize, d_max: usize) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for k in 1..=k_max {
        for d in k + 2..=d_max {
            let r = row(k, d)?;
            if r.new_upper < r.prior_upper {
                rows.push(r);
            }
        }
    }
    assert!(rows.iter().all(|r| r.new_upper <= r.prior_upper));
    Ok(rows)
}

fn star(r: &TableRow) -> &'static str {
    if r.starred {
        "*"
    } else {
        ""
    }
}

pub const CSV_HEADER: &str = "k,d,lower,prior_upper,new_upper,star";

pub fn to_csv(rows: &[TableRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.k,
            r.d,
            r.lower,
            r.prior_upper,
            r.new_upper,
            star(r)
        )
        .expect("writing to a String");
    }
    out
}

/// Right-aligned Markdown table; starred rows carry `*` after the new bound.
pub fn to_markdown(rows: &[TableRow]) -> String {
    let header = ["k", "d", "lower", "prior upper", "new upper"];
    let cells: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            [
                r.k.to_string(),
                r.d.to_string(),
                r.lower.to_string(),
                r.prior_upper.to_string(),
                format!("{}{}", r.new_upper, star(r)),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, items: &[String]| {
        out.push('|');
        for (item, w) in items.iter().zip(widths) {
            write!(out, " {item:>w$} |").expect("writing to a String");
        }
        out.push('\n');
    };
    line(&mut out, &header.map(String::from));
    out.push('|');
    for w in widths {
        write!(out, "{}:|", "-".repeat(w + 1)).expect("writing to a String");
    }
    out.push('\n');
    for row in &cells {
        line(&mut out, row);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::IMPROVEMENT_TABLE;

    #[test]
    fn spot_rows() {
        let r = row(4, 19).unwrap();
        assert_eq!((r.lower, r.prior_upper, r.new_upper, r.starred), (1080, 35246, 8459, true));
        let r = row(5, 7).unwrap();
        assert_eq!((r.lower, r.prior_upper, r.new_upper, r.starred), (74, 128, 74, false));
        let r = row(18, 20).unwrap();
        assert_eq!((r.lower, r.prior_upper, r.new_upper), (589824, 956198, 632265));
        assert!(row(3, 4).is_err());
    }

    #[test]
    fn full_table_matches_reference() {
        let rows = generate(20, 20).unwrap();
        assert_eq!(rows.len(), IMPROVEMENT_TABLE.len());
        for (r, a) in rows.iter().zip(IMPROVEMENT_TABLE) {
            assert_eq!(
                (r.k, r.d, r.lower, r.prior_upper, r.new_upper, r.starred),
                (a.k, a.d, a.lower, a.prior_upper, a.new_upper, a.starred)
            );
        }
    }

    #[test]
    fn formats() {
        let rows = vec![row(2, 10).unwrap(), row(5, 7).unwrap()];
        assert_eq!(
            to_csv(&rows),
            "k,d,lower,prior_upper,new_upper,star\n2,10,36,101,95,*\n5,7,74,128,74,\n"
        );
        let md = to_markdown(&rows);
        let lines: Vec<&str> = md.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines.iter().all(|l| l.len() == lines[0].len()));
        assert!(lines[2].ends_with("95* |"));
    }
}
