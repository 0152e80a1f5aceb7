//! Closes n(k, d) from the formulas where a construction meets an upper
//! bound, and by budgeted search otherwise.

use std::time::Duration;

use neighborly::search::{certify, Budget};

fn main() -> neighborly::Result<()> {
    let budget = Budget::default().with_time(Some(Duration::from_secs(5)));
    for (k, d) in [(2, 4), (3, 5), (3, 4), (1, 6), (2, 5), (2, 6), (3, 6), (5, 7)] {
        let (outcome, search) = certify(k, d, &budget)?;
        let detail = search.map_or(String::new(), |s| {
            format!("  [{} nodes, {:.2}s]", s.nodes_explored, s.elapsed.as_secs_f64())
        });
        println!("n({k},{d}): {outcome}{detail}");
    }
    Ok(())
}
