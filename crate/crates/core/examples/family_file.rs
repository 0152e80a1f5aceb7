//! Writes a family to disk, reads it back and verifies it.

use neighborly::analysis::audit;
use neighborly::cli::family_file;
use neighborly::constructions::alon_product;

fn main() -> neighborly::Result<()> {
    let f = alon_product(2, 4)?;
    let text = family_file::render(&f);
    print!("{text}");

    let path = std::env::temp_dir().join("neighborly_k2_d4.txt");
    family_file::write(&f, &path).expect("temp dir is writable");
    let back = family_file::read(&path)?.validate()?;
    println!("read {} members back from {}", back.len(), path.display());
    println!("all checks pass: {}", audit(&back)?.all_passed());

    match family_file::parse("d=3 k=1\n000\n01\n") {
        Err(e) => println!("malformed file: {e}"),
        Ok(_) => unreachable!(),
    }
    match family_file::parse("d=2 k=1\n00\n11\n")?.validate() {
        Err(e) => println!("invalid family: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
