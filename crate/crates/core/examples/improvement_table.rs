//! Regenerates the improvement table for k, d <= 20 as Markdown, or CSV
//! with `--csv`.

use neighborly::cli::table::{generate, to_csv, to_markdown};

fn main() -> neighborly::Result<()> {
    let rows = generate(20, 20)?;
    if std::env::args().any(|a| a == "--csv") {
        print!("{}", to_csv(&rows));
    } else {
        print!("{}", to_markdown(&rows));
    }
    let starred = rows.iter().filter(|r| r.starred).count();
    eprintln!("{} rows, {starred} starred", rows.len());
    Ok(())
}
