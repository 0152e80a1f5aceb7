//! Every bound for one (k, d).
//!
//!     cargo run --example bounds_report -- 5 7

use neighborly::bounds::report;

fn main() -> neighborly::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("k and d must be integers"))
        .collect();
    let (k, d) = match args[..] {
        [k, d] => (k, d),
        _ => (5, 7),
    };
    let r = report(k, d)?;
    println!("k = {k}, d = {d}");
    for (name, value) in &r.entries {
        let tag = if name.is_upper() { "upper" } else { "" };
        println!("{:>14} {value:>10} {tag}", name.as_str());
    }
    println!("lower {} .. upper {}", r.best_lower, r.best_upper);
    if let Some(e) = r.exact_known {
        println!("known exactly: {} ({})", e.value, e.provenance.as_str());
    }

    println!("\nn(2, d) upper bounds:");
    for d in 4..=10 {
        println!("  d = {d:>2}: {}", report(2, d)?.best_upper);
    }
    Ok(())
}
