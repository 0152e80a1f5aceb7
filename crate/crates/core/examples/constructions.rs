//! The explicit families and codes, checked against their bounds.

use neighborly::bounds::{alon_lower, kleitman_bound};
use neighborly::constructions::{alon_product, b_config, codimension_one_family, staircase_code};
use neighborly::is_k_neighborly;

fn main() -> neighborly::Result<()> {
    println!("staircase code of length 4:");
    for v in staircase_code(4)? {
        println!("  {v}");
    }

    println!("\nproduct families (size = alon_lower):");
    for (k, d) in [(2, 4), (3, 6), (4, 8), (5, 7)] {
        let f = alon_product(k, d)?;
        assert!(is_k_neighborly(&f).is_none());
        println!("  k={k} d={d}: {} members, bound {}", f.len(), alon_lower(k, d)?);
    }

    println!("\ncodimension-one families {{11, 10, 0*}} x {{0,1}}^(d-2):");
    for d in 2..=8 {
        let f = codimension_one_family(d)?;
        println!("  d={d}: {} members", f.len());
    }

    println!("\nlargest binary codes of diameter k:");
    for (k, d) in [(2, 6), (3, 6), (5, 7)] {
        println!("  k={k} d={d}: {} words (max {})", b_config(k, d)?.len(), kleitman_bound(k, d)?);
    }
    Ok(())
}
