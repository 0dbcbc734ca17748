//! Command-line front end: atlas export, verification, cell queries.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::arith::SeedStream;
use crate::atlas::{enumerate_spherical, expand_central, export_json, supported_groups, SphericalRecord};
use crate::bruhat::{bruhat_cell, estimate_z, in_opposite_borel, BruhatError, EstimateOptions};
use crate::groups::{element_from_json, GroupElement};
use crate::roots::WeylElement;
use crate::sphericity::{check_characterization, check_well_placed, sphericity_test, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Words longer than this are shortened in table output unless `--full`.
pub const WORD_LIMIT: usize = 24;

#[derive(Parser, Debug)]
#[command(name = "spherical-bruhat", version, about = "Spherical conjugacy classes and their Bruhat cells")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the spherical classes of a group.
    Atlas(AtlasArgs),
    /// Run the dimension and well-placed checks over atlas records.
    Verify(VerifyArgs),
    /// Bruhat cell of a matrix read from a JSON file.
    Bruhat { file: PathBuf },
    /// Sampling sphericity test for a matrix read from a JSON file.
    Spherical(SphericalArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Args, Debug)]
pub struct AtlasArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Also list central translates of each class.
    #[arg(long)]
    pub expand_central: bool,
    /// Print Weyl words in full.
    #[arg(long)]
    pub full: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    pub group: Option<String>,
    #[arg(long)]
    pub all: bool,
    #[arg(long, default_value_t = 5)]
    pub max_rank: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Cross-check expected z against sampling with this many samples.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, env = "SPHERICAL_JOBS")]
    pub jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct SphericalArgs {
    pub file: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = EstimateOptions::default().samples)]
    pub samples: usize,
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let res = match cli.command {
        Command::Atlas(a) => atlas(&a, out),
        Command::Verify(v) => verify(&v, out, err),
        Command::Bruhat { file } => bruhat(&file, out),
        Command::Spherical(s) => spherical(&s, out),
    };
    match res {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

type CmdResult = Result<i32, String>;

fn io(e: std::io::Error) -> String {
    e.to_string()
}

pub fn word_string(w: &WeylElement, full: bool) -> String {
    let word = w.reduced_word();
    let shown = if full { &word[..] } else { &word[..word.len().min(WORD_LIMIT)] };
    let mut s = shown.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
    if shown.len() < word.len() {
        s.push_str(&format!(" ... (+{})", word.len() - shown.len()));
    }
    if word.is_empty() {
        s.push('e');
    }
    s
}

fn atlas(a: &AtlasArgs, out: &mut dyn Write) -> CmdResult {
    let mut recs = enumerate_spherical(&a.group).map_err(|e| e.to_string())?;
    if a.expand_central {
        recs = expand_central(&recs);
    }
    match a.format {
        Format::Json => writeln!(out, "{}", export_json(&recs)).map_err(io)?,
        Format::Table => {
            let rows: Vec<[String; 5]> = recs
                .iter()
                .map(|r| {
                    let w = r.expected_z().map(|z| word_string(&z, a.full)).unwrap_or_else(|e| e.to_string());
                    [r.label.clone(), format!("{:?}", r.kind).to_lowercase(), r.dim.to_string(), r.z_label(), w]
                })
                .collect();
            write_table(out, &["label", "kind", "dim", "z", "word"], &rows).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn write_table<const N: usize>(out: &mut dyn Write, head: &[&str; N], rows: &[[String; N]]) -> std::io::Result<()> {
    let mut width = head.map(|h| h.chars().count());
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(head.to_vec()))?;
    for r in rows {
        writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

struct Verified {
    reports: Vec<VerificationReport>,
    warnings: Vec<String>,
}

fn verify_record(rec: &SphericalRecord, seed: u64, samples: Option<usize>) -> Verified {
    let mut reports = vec![check_characterization(rec)];
    let mut warnings = Vec::new();
    if rec.has_matrix_model {
        match check_well_placed(rec) {
            Ok(r) => reports.push(r),
            Err(e) => warnings.push(format!("{} {}: {e}", rec.group, rec.label)),
        }
    }
    if let (Some(samples), true) = (samples, rec.has_matrix_model) {
        let opts = EstimateOptions { samples, ..EstimateOptions::default() };
        let got = rec
            .sampling_representative()
            .map_err(|e| e.to_string())
            .and_then(|g| estimate_z(&g, &SeedStream::new(seed), opts).map_err(|e| describe(&e)));
        match (got, rec.expected_z()) {
            (Ok(est), Ok(z)) if est.z == z => {}
            (Ok(est), _) => warnings.push(format!(
                "{} {}: sampled z {:?} differs from expected",
                rec.group,
                rec.label,
                est.z.reduced_word()
            )),
            (Err(e), _) => warnings.push(format!("{} {}: {e}", rec.group, rec.label)),
        }
    }
    Verified { reports, warnings }
}

fn describe(e: &BruhatError) -> String {
    match e {
        BruhatError::IncomparableMaxima(ms) => {
            let ws: Vec<_> = ms.iter().map(|w| w.reduced_word()).collect();
            format!("IncomparableMaxima {ws:?}")
        }
        e => e.to_string(),
    }
}

fn verify(v: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    if v.samples == Some(0) {
        return Err("--samples must be at least 1".into());
    }
    let groups = match &v.group {
        Some(g) => vec![g.clone()],
        None => supported_groups(1, v.max_rank),
    };
    let mut recs = Vec::new();
    for g in &groups {
        recs.extend(enumerate_spherical(g).map_err(|e| e.to_string())?);
    }
    let work = || recs.par_iter().map(|r| verify_record(r, v.seed, v.samples)).collect::<Vec<_>>();
    let results = match v.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|e| e.to_string())?.install(work),
        None => work(),
    };
    let mut failed = 0;
    let mut json_reports = Vec::new();
    for res in &results {
        for w in &res.warnings {
            writeln!(err, "warning: {w}").map_err(io)?;
        }
        let ok = res.reports.iter().all(VerificationReport::passed);
        if !ok {
            failed += 1;
        }
        match v.format {
            Format::Json => json_reports.extend(&res.reports),
            Format::Table => {
                writeln!(out, "{}  {}", if ok { "PASS" } else { "FAIL" }, res.reports[0].subject).map_err(io)?;
                for c in res.reports.iter().flat_map(|r| r.failures()) {
                    writeln!(out, "      {}: {} vs {}", c.name, c.lhs, c.rhs).map_err(io)?;
                }
            }
        }
    }
    if v.format == Format::Json {
        writeln!(out, "{}", serde_json::to_string_pretty(&json_reports).expect("reports serialize")).map_err(io)?;
    } else {
        writeln!(out, "{} records, {} failed", recs.len(), failed).map_err(io)?;
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILED })
}

fn read_element(file: &PathBuf) -> Result<GroupElement, String> {
    let src = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    element_from_json(&src).map_err(|e| e.to_string())
}

fn bruhat(file: &PathBuf, out: &mut dyn Write) -> CmdResult {
    let g = read_element(file)?;
    let w = bruhat_cell(&g).map_err(|e| e.to_string())?.weyl;
    let report = json!({
        "group": g.context().cartan_type().to_string(),
        "weyl_word": w.reduced_word(),
        "length": w.length(),
        "rank_one_minus": w.rank_one_minus(),
        "length_plus_rank": w.length_plus_rank(),
        "in_opposite_borel": in_opposite_borel(&g),
    });
    writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json")).map_err(io)?;
    Ok(EXIT_OK)
}

fn spherical(s: &SphericalArgs, out: &mut dyn Write) -> CmdResult {
    if s.samples == 0 {
        return Err("--samples must be at least 1".into());
    }
    let g = read_element(&s.file)?;
    let opts = EstimateOptions { samples: s.samples, ..EstimateOptions::default() };
    let res = sphericity_test(&g, &SeedStream::new(s.seed), opts);
    let report = json!({
        "verdict": res.verdict.to_string(),
        "d": res.dim,
        "z_word": res.z.as_ref().map(|z| z.reduced_word()),
        "length_plus_rank": res.bound(),
        "note": res.note,
    });
    writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json")).map_err(io)?;
    Ok(EXIT_OK)
}
