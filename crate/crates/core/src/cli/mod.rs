//! Command implementations behind the `neighborly` binary, plus the file
//! and table formats they use.
//!
//! Each command writes to the supplied writer and returns an error that
//! [`exit_code`] maps to the process status.

pub mod family_file;
pub mod render;
pub mod table;

use std::io::Write;
use std::path::{Path, PathBuf};

use crate::analysis::{audit, Verdict, DEFAULT_MAX_DIM};
use crate::bounds::report;
use crate::constructions::{alon_product, as_joker_vectors, b_config, codimension_one_family, staircase_code};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::search::{max_family, Budget, SearchResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Process status for an error: 1 for invalid families and files, 2 for bad
/// arguments, 3 for resource limits.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. }
        | Error::NotNeighborly { .. }
        | Error::Duplicate(_)
        | Error::Dimension { .. }
        | Error::InvalidSymbol(_)
        | Error::UnexpectedJoker(_)
        | Error::AuditFailed { .. } => EXIT_INVALID,
        Error::Domain(_) | Error::Precondition(_) => EXIT_USAGE,
        Error::Resource(_) | Error::Overflow(_) => EXIT_RESOURCE,
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Resource(format!("i/o: {e}"))
}

pub fn cmd_report(k: usize, d: usize, json: bool, out: &mut impl Write) -> Result<()> {
    let r = report(k, d)?;
    let text = if json {
        render::report_json(&r) + "\n"
    } else {
        render::report_text(&r)
    };
    out.write_all(text.as_bytes()).map_err(io)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableFormat {
    #[default]
    Csv,
    Markdown,
}

pub fn cmd_table(k_max: usize, d_max: usize, format: TableFormat, out: &mut impl Write) -> Result<()> {
    if k_max < 1 || d_max < 2 {
        return Err(Error::Domain(format!(
            "table needs k_max >= 1 and d_max >= 2, got {k_max} and {d_max}"
        )));
    }
    let rows = table::generate(k_max, d_max)?;
    let text = match format {
        TableFormat::Csv => table::to_csv(&rows),
        TableFormat::Markdown => table::to_markdown(&rows),
    };
    out.write_all(text.as_bytes()).map_err(io)
}

/// Parses, validates and audits a family file. Invalid families and failed
/// audit checks are errors.
pub fn cmd_verify(path: &Path, out: &mut impl Write) -> Result<Family> {
    let family = family_file::read(path)?;
    writeln!(out, "d={} k={} size={}", family.d(), family.k(), family.len()).map_err(io)?;
    let family = match family.validate() {
        Ok(f) => f,
        Err(e) => {
            writeln!(out, "neighborly: no").map_err(io)?;
            return Err(e);
        }
    };
    writeln!(out, "neighborly: yes").map_err(io)?;
    if family.d() <= family.k() || family.d() > DEFAULT_MAX_DIM {
        writeln!(
            out,
            "audit: skipped (needs k < d <= {DEFAULT_MAX_DIM})"
        )
        .map_err(io)?;
        return Ok(family);
    }
    let report = audit(&family)?;
    writeln!(out, "audit:").map_err(io)?;
    out.write_all(render::audit_text(&report).as_bytes()).map_err(io)?;
    if let Some((check, verdict)) = report.first_failure() {
        let reason = match verdict {
            Verdict::Fail(why) | Verdict::Skipped(why) => why.clone(),
            Verdict::Pass => unreachable!("first_failure only returns failures"),
        };
        return Err(Error::AuditFailed {
            check: check.to_string(),
            reason,
        });
    }
    Ok(family)
}

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    pub budget: Budget,
    pub incumbent: Option<PathBuf>,
    pub witness: Option<PathBuf>,
    pub json: bool,
}

pub fn cmd_search(k: usize, d: usize, opts: &SearchOptions, out: &mut impl Write) -> Result<SearchResult> {
    let incumbent = match &opts.incumbent {
        Some(path) => Some(family_file::read(path)?.validate()?),
        None => None,
    };
    let result = max_family(k, d, &opts.budget, incumbent.as_ref())?;
    let line = if opts.json {
        render::search_json(&result)
    } else {
        render::search_summary(&result)
    };
    writeln!(out, "{line}").map_err(io)?;
    if let Some(path) = &opts.witness {
        family_file::write(&result.witness, path).map_err(io)?;
    }
    Ok(result)
}

/// Names accepted by [`construct`].
pub const CONSTRUCTIONS: [&str; 4] = ["alon-product", "codimension-one", "b-config", "staircase"];

/// Builds a named construction from its numeric arguments:
/// `alon-product K D`, `codimension-one D` (also spelled `corollary35`),
/// `b-config K D`, `staircase M`. A `-` in place of an argument is skipped.
pub fn construct(name: &str, args: &[String]) -> Result<Family> {
    let nums: Vec<usize> = args
        .iter()
        .filter(|a| a.as_str() != "-")
        .map(|a| {
            a.parse()
                .map_err(|_| Error::Domain(format!("expected a nonnegative integer, found {a:?}")))
        })
        .collect::<Result<_>>()?;
    let arity = |n: usize| {
        if nums.len() == n {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "{name} takes {n} numeric argument(s), got {}",
                nums.len()
            )))
        }
    };
    match name {
        "alon-product" => {
            arity(2)?;
            alon_product(nums[0], nums[1])
        }
        "codimension-one" | "corollary35" => {
            arity(1)?;
            codimension_one_family(nums[0])
        }
        "b-config" => {
            arity(2)?;
            let (k, d) = (nums[0], nums[1]);
            Family::validated(d, k, as_joker_vectors(&b_config(k, d)?))
        }
        "staircase" => {
            arity(1)?;
            Family::validated(nums[0], 1, staircase_code(nums[0])?)
        }
        _ => Err(Error::Domain(format!(
            "unknown construction {name:?}; expected one of {}",
            CONSTRUCTIONS.join(", ")
        ))),
    }
}

pub fn cmd_construct(name: &str, args: &[String], out: &mut impl Write) -> Result<()> {
    let family = construct(name, args)?;
    family_file::write_to(&family, out).map_err(io)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn construct_sizes() {
        assert_eq!(construct("alon-product", &strings(&["3", "6"])).unwrap().len(), 27);
        assert_eq!(construct("corollary35", &strings(&["-", "4"])).unwrap().len(), 12);
        assert_eq!(construct("codimension-one", &strings(&["4"])).unwrap().len(), 12);
        let b = construct("b-config", &strings(&["5", "7"])).unwrap();
        assert_eq!(b.len(), 44);
        assert!(b.members().iter().all(|m| m.is_binary()));
        assert_eq!(construct("staircase", &strings(&["4"])).unwrap().len(), 5);
        assert!(matches!(construct("cube", &[]), Err(Error::Domain(_))));
        assert!(construct("alon-product", &strings(&["3"])).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Domain("x".into())), EXIT_USAGE);
        assert_eq!(exit_code(&Error::Resource("x".into())), EXIT_RESOURCE);
        assert_eq!(exit_code(&Error::Parse { line: 1, message: "x".into() }), EXIT_INVALID);
    }

    #[test]
    fn report_usage_error() {
        let mut out = Vec::new();
        assert_eq!(exit_code(&cmd_report(0, 5, false, &mut out).unwrap_err()), EXIT_USAGE);
    }
}
