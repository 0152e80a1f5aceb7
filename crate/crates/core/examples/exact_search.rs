//! Exact maximum-family search, with and without the formula cutoff.
//!
//!     cargo run --release --example exact_search

use std::time::Duration;

use neighborly::search::{best_greedy, max_family, Budget};

fn main() -> neighborly::Result<()> {
    let plain = Budget {
        formula_cutoff: false,
        use_constructions: false,
        ..Budget::default()
    };
    println!("{:>3} {:>3} {:>6} {:>10} {:>12} {:>9}", "k", "d", "greedy", "n(k,d)", "nodes", "seconds");
    for (k, d) in [(1, 4), (2, 4), (3, 4), (2, 5), (3, 5), (4, 5), (1, 6), (2, 6)] {
        let greedy = best_greedy(k, d, 0, 16)?.len();
        let r = max_family(k, d, &plain, None)?;
        println!(
            "{k:>3} {d:>3} {greedy:>6} {:>10} {:>12} {:>9.3}",
            format!("{} {}", r.best_size, r.status.as_str()),
            r.nodes_explored,
            r.elapsed.as_secs_f64()
        );
    }

    // a budgeted run keeps the incumbent
    let short = Budget::default().with_time(Some(Duration::from_secs(2)));
    let r = max_family(3, 6, &short, None)?;
    println!("\nk=3 d=6 after 2s: {} ({})", r.best_size, r.status.as_str());
    Ok(())
}
