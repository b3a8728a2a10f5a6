//! Command-line front end for the set-family and partition counters.
//!
//! Exit codes: 0 success, 1 arithmetic overflow, 2 usage error, 3 identity
//! failure.

use std::collections::BTreeMap;

use clap::{Args, Parser, Subcommand, ValueEnum};

use schreier_core::families::{self, CountTable, FamilyQuery};
use schreier_core::partcomp::{
    count_e, count_e_distinct, count_g, count_h, enum_partitions, PartRule, PartitionConstraint,
};
use schreier_core::verify::{verify, verify_tables, Bounds, IdentityId, VerifyReport};
use schreier_core::Error;

pub mod render;

pub const EXIT_OVERFLOW: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_IDENTITY_FAILURE: u8 = 3;

/// A failed run: message for stderr plus the process exit code.
#[derive(Debug)]
pub struct RunError {
    pub message: String,
    pub code: u8,
}

impl RunError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            code: EXIT_USAGE,
        }
    }
}

impl From<Error> for RunError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Overflow(_) => EXIT_OVERFLOW,
            _ => EXIT_USAGE,
        };
        Self {
            message: err.to_string(),
            code,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "schreier",
    about = "Enumerate, count, tabulate, and verify Schreier-type set families, \
             restricted partitions, and compositions",
    version
)]
pub struct Cli {
    /// Cap the worker threads used for table sweeps and verification.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every member of a family, one per line, plus a count line.
    Enumerate(EnumerateArgs),
    /// Tabulate counts over inclusive n and ell ranges.
    Table(TableArgs),
    /// Emit a one-parameter counting sequence (fixed ell, varying n).
    Sequence(SequenceArgs),
    /// Check identities by comparing independent computation paths.
    Verify(VerifyArgs),
}

/// The families addressable from the command line. Set families live in
/// `{1..n}` (script families in `{1..n+1}`); the rest are partition
/// families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CliFamily {
    #[value(name = "A")]
    A,
    #[value(name = "A_strong")]
    AStrong,
    #[value(name = "B")]
    B,
    #[value(name = "B_sized")]
    BSized,
    #[value(name = "F_prop1")]
    FProp1,
    #[value(name = "F_script")]
    FScript,
    #[value(name = "F_script_k")]
    FScriptK,
    #[value(name = "F_script_kq")]
    FScriptKQ,
    #[value(name = "F_script_strong")]
    FScriptStrong,
    #[value(name = "E")]
    E,
    #[value(name = "E_distinct")]
    EDistinct,
    #[value(name = "G")]
    G,
    #[value(name = "H")]
    H,
}

impl CliFamily {
    pub fn name(self) -> &'static str {
        match self {
            CliFamily::A => "A",
            CliFamily::AStrong => "A_strong",
            CliFamily::B => "B",
            CliFamily::BSized => "B_sized",
            CliFamily::FProp1 => "F_prop1",
            CliFamily::FScript => "F_script",
            CliFamily::FScriptK => "F_script_k",
            CliFamily::FScriptKQ => "F_script_kq",
            CliFamily::FScriptStrong => "F_script_strong",
            CliFamily::E => "E",
            CliFamily::EDistinct => "E_distinct",
            CliFamily::G => "G",
            CliFamily::H => "H",
        }
    }

    fn is_set_family(self) -> bool {
        !matches!(
            self,
            CliFamily::E | CliFamily::EDistinct | CliFamily::G | CliFamily::H
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
    Bfile,
}

/// An inclusive range written `a..b`, or a single value `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InclusiveRange {
    pub start: u64,
    pub end: u64,
}

impl std::str::FromStr for InclusiveRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |v: &str| {
            v.parse::<u64>()
                .map_err(|_| format!("invalid number '{v}'"))
        };
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if start > end {
            return Err(format!("range '{s}' is empty"));
        }
        Ok(InclusiveRange { start, end })
    }
}

impl std::fmt::Display for InclusiveRange {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.start == self.end {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}..{}", self.start, self.end)
        }
    }
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub family: CliFamily,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub ell: Option<u64>,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub family: CliFamily,
    #[arg(long)]
    pub n: InclusiveRange,
    #[arg(long)]
    pub ell: InclusiveRange,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SequenceArgs {
    #[arg(long)]
    pub family: CliFamily,
    #[arg(long)]
    pub ell: Option<u64>,
    #[arg(long)]
    pub n: InclusiveRange,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run every identity checker plus the golden-table comparison.
    #[arg(long, conflicts_with = "id")]
    pub all: bool,
    /// A single identity name (unique prefixes accepted, e.g. EQ1).
    #[arg(long)]
    pub id: Option<String>,
    /// Compare the six golden tables entry for entry.
    #[arg(long)]
    pub tables: bool,
    #[arg(long, default_value_t = 20)]
    pub max_n: u64,
    #[arg(long, default_value_t = 3)]
    pub max_ell: u64,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

fn require(value: Option<u64>, name: &str, family: CliFamily) -> Result<u64, RunError> {
    value.ok_or_else(|| {
        RunError::usage(format!(
            "family {} requires --{name}",
            family.name()
        ))
    })
}

fn forbid(value: Option<u64>, name: &str, family: CliFamily) -> Result<(), RunError> {
    if value.is_some() {
        return Err(RunError::usage(format!(
            "family {} does not take --{name}",
            family.name()
        )));
    }
    Ok(())
}

/// Builds the set-family query for one `n`, checking flag applicability.
fn set_family_query(
    family: CliFamily,
    n: u64,
    ell: Option<u64>,
    k: Option<u64>,
    q: Option<u64>,
    m: Option<u64>,
) -> Result<FamilyQuery, RunError> {
    let query = match family {
        CliFamily::A => FamilyQuery::a(n, require(ell, "ell", family)?),
        CliFamily::AStrong => FamilyQuery::a_strong(n, require(ell, "ell", family)?),
        CliFamily::B => FamilyQuery::b(n, require(ell, "ell", family)?),
        CliFamily::BSized => FamilyQuery::b_sized(
            n,
            require(ell, "ell", family)?,
            require(m, "m", family)?,
        ),
        CliFamily::FProp1 => {
            forbid(ell, "ell", family)?;
            FamilyQuery::f_prop1(n, require(m, "m", family)?)
        }
        CliFamily::FScript => FamilyQuery::f_script(n, require(ell, "ell", family)?),
        CliFamily::FScriptK => FamilyQuery::f_script_k(
            n,
            require(ell, "ell", family)?,
            require(k, "k", family)?,
        ),
        CliFamily::FScriptKQ => FamilyQuery::f_script_kq(
            n,
            require(ell, "ell", family)?,
            require(k, "k", family)?,
            require(q, "q", family)?,
        ),
        CliFamily::FScriptStrong => {
            let mut query = FamilyQuery::f_script_strong(n, require(ell, "ell", family)?);
            query.k = k;
            query.q = q;
            query
        }
        CliFamily::E | CliFamily::EDistinct | CliFamily::G | CliFamily::H => {
            return Err(RunError::usage(format!(
                "family {} is a partition family",
                family.name()
            )));
        }
    };
    match family {
        CliFamily::BSized | CliFamily::FProp1 => forbid(k, "k", family).and(forbid(q, "q", family))?,
        CliFamily::A | CliFamily::AStrong | CliFamily::B | CliFamily::FScript => {
            forbid(k, "k", family)?;
            forbid(q, "q", family)?;
            forbid(m, "m", family)?;
        }
        CliFamily::FScriptK => {
            forbid(q, "q", family)?;
            forbid(m, "m", family)?;
        }
        CliFamily::FScriptKQ | CliFamily::FScriptStrong => forbid(m, "m", family)?,
        _ => {}
    }
    query.validate().map_err(RunError::from)?;
    Ok(query)
}

/// Builds the partition constraint for the partition families.
fn partition_constraint(
    family: CliFamily,
    ell: Option<u64>,
    k: Option<u64>,
    q: Option<u64>,
) -> Result<PartitionConstraint, RunError> {
    let ell = require(ell, "ell", family)?;
    if ell == 0 {
        return Err(RunError::usage("partition families need --ell >= 1"));
    }
    let rule = match family {
        CliFamily::E | CliFamily::EDistinct => PartRule::MinPart(ell),
        CliFamily::G => PartRule::AvoidRange(ell),
        CliFamily::H => PartRule::AvoidRangeAndHighEvens(ell),
        _ => return Err(RunError::usage("not a partition family")),
    };
    let mut constraint = PartitionConstraint {
        rule,
        distinct: family == CliFamily::EDistinct,
        exact_parts: None,
        top_gap: None,
    };
    if let Some(k) = k {
        constraint = constraint.with_parts(k);
    }
    if let Some(q) = q {
        if constraint.exact_parts.is_none() {
            return Err(RunError::usage("--q needs --k"));
        }
        constraint = constraint.with_top_gap(q);
    }
    Ok(constraint)
}

/// Counts one partition-family cell with the plain counters (no structural
/// refinements), so tables and sequences stay on the recurrence path.
fn partition_count(family: CliFamily, n: u64, ell: u64) -> Result<u64, RunError> {
    if ell == 0 {
        return Err(RunError::usage("partition families need --ell >= 1"));
    }
    let count = match family {
        CliFamily::E => count_e(n, ell)?,
        CliFamily::EDistinct => count_e_distinct(n, ell)?,
        CliFamily::G => count_g(n, ell)?,
        CliFamily::H => count_h(n, ell)?,
        _ => return Err(RunError::usage("not a partition family")),
    };
    Ok(count)
}

fn params_map(entries: &[(&str, Option<String>)]) -> BTreeMap<String, String> {
    entries
        .iter()
        .filter_map(|(k, v)| v.as_ref().map(|v| (k.to_string(), v.clone())))
        .collect()
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<String, RunError> {
    let params = params_map(&[
        ("n", Some(args.n.to_string())),
        ("ell", args.ell.map(|v| v.to_string())),
        ("k", args.k.map(|v| v.to_string())),
        ("q", args.q.map(|v| v.to_string())),
        ("m", args.m.map(|v| v.to_string())),
    ]);
    let objects: Vec<render::Object> = if args.family.is_set_family() {
        let query = set_family_query(args.family, args.n, args.ell, args.k, args.q, args.m)?;
        families::enum_family(&query)?
            .into_iter()
            .map(render::Object::Set)
            .collect()
    } else {
        let constraint = partition_constraint(args.family, args.ell, args.k, args.q)?;
        enum_partitions(args.n, &constraint)
            .into_iter()
            .map(render::Object::Partition)
            .collect()
    };
    match args.format {
        Format::Plain => Ok(render::enumerate_plain(&objects)),
        Format::Csv => Ok(render::enumerate_csv(&objects)),
        Format::Json => Ok(render::enumerate_json(args.family.name(), &params, &objects)),
        Format::Bfile => Err(RunError::usage("bfile format applies to sequences only")),
    }
}

fn cmd_table(args: &TableArgs) -> Result<String, RunError> {
    let table = if args.family.is_set_family() {
        let core_family = match args.family {
            CliFamily::A => families::Family::A,
            CliFamily::AStrong => families::Family::AStrong,
            CliFamily::B => families::Family::B,
            other => {
                return Err(RunError::usage(format!(
                    "family {} needs fixed extra parameters; use the sequence command",
                    other.name()
                )));
            }
        };
        families::count_table(
            core_family,
            (args.n.start, args.n.end),
            (args.ell.start, args.ell.end),
        )?
    } else {
        if args.ell.start == 0 {
            return Err(RunError::usage("partition families need --ell >= 1"));
        }
        let n_values: Vec<u64> = (args.n.start..=args.n.end).collect();
        let ell_values: Vec<u64> = (args.ell.start..=args.ell.end).collect();
        let mut rows = Vec::with_capacity(ell_values.len());
        for &ell in &ell_values {
            let mut row = Vec::with_capacity(n_values.len());
            for &n in &n_values {
                row.push(partition_count(args.family, n, ell)?);
            }
            rows.push(row);
        }
        CountTable::new(n_values, ell_values, rows)?
    };
    let params = params_map(&[
        ("n", Some(args.n.to_string())),
        ("ell", Some(args.ell.to_string())),
    ]);
    match args.format {
        Format::Plain => Ok(render::table_plain(&table)),
        Format::Csv => Ok(render::table_csv(&table)),
        Format::Json => Ok(render::table_json(args.family.name(), &params, &table)),
        Format::Bfile => Err(RunError::usage("bfile format applies to sequences only")),
    }
}

fn cmd_sequence(args: &SequenceArgs) -> Result<String, RunError> {
    let n_values: Vec<u64> = (args.n.start..=args.n.end).collect();
    let mut values = Vec::with_capacity(n_values.len());
    for &n in &n_values {
        let count = if args.family.is_set_family() {
            let query = set_family_query(args.family, n, args.ell, args.k, args.q, args.m)?;
            families::count_family(&query)?
        } else {
            forbid(args.k, "k", args.family)?;
            forbid(args.q, "q", args.family)?;
            forbid(args.m, "m", args.family)?;
            partition_count(args.family, n, require(args.ell, "ell", args.family)?)?
        };
        values.push(count);
    }
    let params = params_map(&[
        ("n", Some(args.n.to_string())),
        ("ell", args.ell.map(|v| v.to_string())),
        ("k", args.k.map(|v| v.to_string())),
        ("q", args.q.map(|v| v.to_string())),
        ("m", args.m.map(|v| v.to_string())),
    ]);
    match args.format {
        Format::Plain => Ok(render::sequence_plain(&values)),
        Format::Csv => Ok(render::sequence_csv(&n_values, &values)),
        Format::Json => Ok(render::sequence_json(args.family.name(), &params, &values)),
        Format::Bfile => Ok(render::sequence_bfile(&n_values, &values)),
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<(String, bool), RunError> {
    let bounds = Bounds {
        max_n: args.max_n,
        max_ell: args.max_ell,
    };
    let mut reports: Vec<VerifyReport> = Vec::new();
    if args.all {
        reports.extend(schreier_core::verify::verify_all(&bounds)?);
        reports.push(verify_tables()?);
    } else if let Some(name) = &args.id {
        let id = IdentityId::from_name(name)?;
        reports.push(verify(id, &bounds)?);
        if args.tables && id != IdentityId::Tables {
            reports.push(verify_tables()?);
        }
    } else if args.tables {
        reports.push(verify_tables()?);
    } else {
        return Err(RunError::usage(
            "verify needs --all, --id <IDENTITY>, or --tables",
        ));
    }
    let all_passed = reports.iter().all(VerifyReport::passed);
    let text = match args.format {
        Format::Plain => render::verify_plain(&reports),
        Format::Json => render::verify_json(&reports),
        _ => return Err(RunError::usage("verify supports plain and json formats")),
    };
    Ok((text, all_passed))
}

/// Executes a parsed command line; returns the stdout payload and the exit
/// code (0, or 3 when a verified identity failed). Usage and overflow
/// problems come back as [`RunError`] for stderr.
pub fn run(cli: &Cli) -> Result<(String, u8), RunError> {
    if let Some(threads) = cli.threads {
        // Ignore the error when a global pool already exists (e.g. two runs
        // in one process during tests).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match &cli.command {
        Command::Enumerate(args) => Ok((cmd_enumerate(args)?, 0)),
        Command::Table(args) => Ok((cmd_table(args)?, 0)),
        Command::Sequence(args) => Ok((cmd_sequence(args)?, 0)),
        Command::Verify(args) => {
            let (text, all_passed) = cmd_verify(args)?;
            let code = if all_passed { 0 } else { EXIT_IDENTITY_FAILURE };
            Ok((text, code))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        let r: InclusiveRange = "1..16".parse().unwrap();
        assert_eq!((r.start, r.end), (1, 16));
        let single: InclusiveRange = "5".parse().unwrap();
        assert_eq!((single.start, single.end), (5, 5));
        assert!("7..3".parse::<InclusiveRange>().is_err());
        assert!("a..b".parse::<InclusiveRange>().is_err());
    }

    #[test]
    fn set_family_flag_checks() {
        assert!(set_family_query(CliFamily::A, 5, Some(1), None, None, None).is_ok());
        assert!(set_family_query(CliFamily::A, 5, None, None, None, None).is_err());
        assert!(set_family_query(CliFamily::A, 5, Some(1), Some(2), None, None).is_err());
        assert!(set_family_query(CliFamily::BSized, 5, Some(1), None, None, Some(2)).is_ok());
        assert!(set_family_query(CliFamily::FProp1, 6, None, None, None, Some(3)).is_ok());
        assert!(set_family_query(CliFamily::FProp1, 6, Some(1), None, None, Some(3)).is_err());
    }

    #[test]
    fn partition_constraint_flags() {
        assert!(partition_constraint(CliFamily::E, Some(2), None, None).is_ok());
        assert!(partition_constraint(CliFamily::E, Some(0), None, None).is_err());
        assert!(partition_constraint(CliFamily::E, Some(1), None, Some(1)).is_err());
        let c = partition_constraint(CliFamily::EDistinct, Some(2), Some(3), Some(1)).unwrap();
        assert!(c.distinct);
        assert_eq!(c.exact_parts, Some(3));
        assert_eq!(c.top_gap, Some(1));
    }
}
