//! Audits the weighted cover argument on extremal families: unique covers,
//! class structure, the weight bounds, and sum f(v) = |U| in exact dyadic
//! arithmetic.

use neighborly::analysis::{audit, cover_profile};
use neighborly::constructions::{alon_product, codimension_one_family};
use neighborly::search::greedy_family;

fn main() -> neighborly::Result<()> {
    let f = codimension_one_family(5)?;
    let profile = cover_profile(&f)?;
    println!("{{11, 10, 0*}} x {{0,1}}^3, k = 4:");
    for t in profile.occupied() {
        println!("  |V^({t})| = {}", profile.class(t).len());
    }
    println!("  uncovered words: {}", profile.uncovered().len());
    println!("  sum of weights: {}", profile.weight_sum()?);

    let mut families = vec![alon_product(2, 6)?, alon_product(3, 7)?, codimension_one_family(8)?];
    families.push(greedy_family(3, 6, 42)?);
    for f in &families {
        let report = audit(f)?;
        println!("\nk={} d={} |U|={}", f.k(), f.d(), f.len());
        for (check, verdict) in &report.checks {
            println!("  {:<20} {verdict:?}", check.as_str());
        }
    }
    Ok(())
}
