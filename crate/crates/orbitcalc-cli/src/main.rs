//! `orbitcalc`: partition calculus for nilpotent orbits of classical groups.
//!
//! Exit codes: 0 success (and no identity violations), 1 a verification
//! campaign found an identity violation, 2 usage or input error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use orbitcalc::arthur::{parse_param, ArthurShape};
use orbitcalc::classical::{self, Family};
use orbitcalc::duality::{GroupFamily, GroupType};
use orbitcalc::error::Error;
use orbitcalc::partition::Partition;
use orbitcalc::survey::{self, CampaignConfig, CampaignSummary, CheckKind, Severity};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "orbitcalc",
    version,
    about = "Partition calculus for nilpotent orbits of classical Lie algebras",
    propagate_version = true
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on single partitions.
    Partition {
        #[command(subcommand)]
        op: PartitionCmd,
    },
    /// Reports on one parameter shape.
    Arthur {
        #[command(subcommand)]
        op: ArthurCmd,
    },
    /// Exhaustive verification campaigns and reference tables.
    Survey {
        #[command(subcommand)]
        op: SurveyCmd,
    },
}

#[derive(Subcommand)]
enum PartitionCmd {
    /// Conjugate partition.
    Transpose { literal: String },
    /// Largest family partition below the input.
    Collapse {
        #[arg(long)]
        family: String,
        literal: String,
    },
    /// Smallest special family partition above the input.
    Expand {
        #[arg(long)]
        family: String,
        literal: String,
    },
    /// Is the family partition special?
    Special {
        #[arg(long)]
        family: String,
        literal: String,
    },
    /// Same-type duality map (collapse of the transpose).
    Dual {
        #[arg(long)]
        family: String,
        literal: String,
    },
    /// Nilpotent orbit dimension; accepts gl:<N> as well as B/C/D families.
    Dim {
        #[arg(long)]
        family: String,
        literal: String,
    },
    /// Dominance comparison of two partitions of equal total.
    Compare { left: String, right: String },
}

#[derive(Args)]
struct ShapeArgs {
    /// Group family: sp, so-odd or so-even.
    #[arg(long)]
    group: String,
    /// Rank of the group.
    #[arg(long)]
    n: u64,
    /// Optional square-class label (so-even only).
    #[arg(long)]
    alpha: Option<String>,
    /// Shape literal, e.g. "3^3,2^2": b^a tokens, b the part, a its
    /// multiplicity.
    #[arg(long)]
    param: String,
}

#[derive(Subcommand)]
enum ArthurCmd {
    /// Full per-shape report.
    Info(ShapeArgs),
    /// Criterion sides and parity classification only.
    Criterion(ShapeArgs),
    /// Dimension identity values only.
    Lemmas(ShapeArgs),
}

#[derive(Subcommand)]
enum SurveyCmd {
    /// Run a verification campaign.
    Run {
        /// Comma-separated group families (default: all three).
        #[arg(long)]
        families: Option<String>,
        /// Rank bound per family.
        #[arg(long)]
        n_max: Option<u64>,
        /// Comma-separated checks (default: all).
        #[arg(long)]
        checks: Option<String>,
        /// Number of concurrent shards.
        #[arg(long)]
        shards: Option<u64>,
        /// Output directory for JSONL segments and the manifest.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Campaign configuration file (JSON); flags override its fields.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Corrupt a check to exercise the exit-code contract.
        #[arg(long, hide = true)]
        fault_inject: Option<String>,
    },
    /// Recompute the six-row reference table.
    Remark44 {
        /// Also write the table as CSV to this path.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Quick built-in verification battery.
    Selftest {
        /// Rank bound (default 5).
        #[arg(long)]
        n_max: Option<u64>,
        /// Output directory (default: a temporary directory).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Partition { op } => partition_cmd(op, cli.json),
        Command::Arthur { op } => arthur_cmd(op, cli.json),
        Command::Survey { op } => survey_cmd(op, cli.json),
    }
}

fn parse_partition(literal: &str) -> Result<Partition, String> {
    literal.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(spec: &str) -> Result<Family, String> {
    spec.parse().map_err(|e: Error| e.to_string())
}

fn emit(json: bool, value: serde_json::Value, text: String) {
    if json {
        println!("{value}");
    } else {
        println!("{text}");
    }
}

fn partition_cmd(op: PartitionCmd, json: bool) -> Result<u8, String> {
    match op {
        PartitionCmd::Transpose { literal } => {
            let p = parse_partition(&literal)?;
            let t = p.transpose();
            emit(
                json,
                serde_json::json!({"op": "transpose", "input": p, "result": t}),
                t.to_string(),
            );
        }
        PartitionCmd::Collapse { family, literal } => {
            let f = parse_family(&family)?;
            let p = parse_partition(&literal)?;
            let c = classical::collapse(&p, f).map_err(|e| e.to_string())?;
            emit(
                json,
                serde_json::json!({
                    "op": "collapse", "family": f.to_string(), "input": p, "result": c
                }),
                c.to_string(),
            );
        }
        PartitionCmd::Expand { family, literal } => {
            let f = parse_family(&family)?;
            let p = parse_partition(&literal)?;
            let e = classical::expansion(&p, f).map_err(|e| e.to_string())?;
            emit(
                json,
                serde_json::json!({
                    "op": "expand", "family": f.to_string(), "input": p, "result": e
                }),
                e.to_string(),
            );
        }
        PartitionCmd::Special { family, literal } => {
            let f = parse_family(&family)?;
            let p = parse_partition(&literal)?;
            let special = classical::is_special(&p, f).map_err(|e| e.to_string())?;
            let very_even = classical::is_very_even(&p);
            let mut text = if special { "special" } else { "not special" }.to_string();
            if very_even {
                text.push_str(" (very even)");
            }
            emit(
                json,
                serde_json::json!({
                    "op": "special", "family": f.to_string(), "input": p,
                    "special": special, "veryEven": very_even
                }),
                text,
            );
        }
        PartitionCmd::Dual { family, literal } => {
            let f = parse_family(&family)?;
            let p = parse_partition(&literal)?;
            let d = classical::dual_ls(&p, f).map_err(|e| e.to_string())?;
            emit(
                json,
                serde_json::json!({
                    "op": "dual", "family": f.to_string(), "input": p, "result": d
                }),
                d.to_string(),
            );
        }
        PartitionCmd::Dim { family, literal } => {
            let p = parse_partition(&literal)?;
            let spec = family.trim().to_ascii_lowercase();
            let (algebra, dim) = if let Some(rest) =
                spec.strip_prefix("gl:").or_else(|| spec.strip_prefix("gl"))
            {
                let n: u64 = rest
                    .parse()
                    .map_err(|_| format!("unknown family {family:?}"))?;
                if p.total() != n {
                    return Err(Error::TotalMismatch {
                        left: p.total(),
                        right: n,
                    }
                    .to_string());
                }
                (format!("gl({n})"), classical::orbit_dim_gl(&p))
            } else {
                let f = parse_family(&family)?;
                (
                    f.to_string(),
                    classical::orbit_dim(&p, f).map_err(|e| e.to_string())?,
                )
            };
            emit(
                json,
                serde_json::json!({"op": "dim", "algebra": algebra, "input": p, "dim": dim}),
                dim.to_string(),
            );
        }
        PartitionCmd::Compare { left, right } => {
            let l = parse_partition(&left)?;
            let r = parse_partition(&right)?;
            let rel = l.compare(&r).map_err(|e| e.to_string())?;
            emit(
                json,
                serde_json::json!({"op": "compare", "left": l, "right": r, "relation": rel}),
                rel.to_string(),
            );
        }
    }
    Ok(0)
}

fn build_shape(args: &ShapeArgs) -> Result<ArthurShape, String> {
    let family: GroupFamily = args.group.parse().map_err(|e: Error| e.to_string())?;
    if args.alpha.is_some() && family != GroupFamily::SOeven {
        return Err("--alpha only applies to so-even groups".into());
    }
    let group = GroupType::with_alpha(family, args.n, args.alpha.clone());
    let pairs = parse_param(&args.param).map_err(|e| e.to_string())?;
    ArthurShape::new(group, pairs).map_err(|e| e.to_string())
}

fn arthur_cmd(op: ArthurCmd, json: bool) -> Result<u8, String> {
    let (shape, mode) = match &op {
        ArthurCmd::Info(a) => (build_shape(a)?, "info"),
        ArthurCmd::Criterion(a) => (build_shape(a)?, "criterion"),
        ArthurCmd::Lemmas(a) => (build_shape(a)?, "lemmas"),
    };
    let report = shape.check_criterion().map_err(|e| e.to_string())?;
    match mode {
        "info" => {
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                );
            } else {
                let split = shape.endoscopic_split().map_err(|e| e.to_string())?;
                println!("shape        {shape}");
                println!("tempered     {}", report.tempered);
                println!("p1           {}", report.p1);
                println!("n*           {}", report.n_star);
                println!("eta          {}", report.eta);
                println!("candidate    {}", report.candidate);
                println!("prop45       {}", report.prop45_relation);
                println!(
                    "criterion    {} vs {} -> {}",
                    report.criterion_lhs, report.criterion_rhs, report.criterion_holds
                );
                println!("oriequ       {}", report.oriequ_holds);
                println!(
                    "parity case  {}",
                    report
                        .parity_case
                        .map(|c| c.to_string())
                        .unwrap_or_else(|| "none (mixed)".into())
                );
                println!("split        n1={} n2={}", split.n1, split.n2);
                println!("lemma31      {} = {}", report.lemma31.0, report.lemma31.1);
                println!("lemma32      {} = {}", report.lemma32.0, report.lemma32.1);
            }
        }
        "criterion" => {
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "criterionLhs": report.criterion_lhs,
                        "criterionRhs": report.criterion_rhs,
                        "criterionHolds": report.criterion_holds,
                        "oriequHolds": report.oriequ_holds,
                        "parityCase": report.parity_case,
                    })
                );
            } else {
                println!(
                    "{} vs {} -> {}",
                    report.criterion_lhs, report.criterion_rhs, report.criterion_holds
                );
            }
        }
        _ => {
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "lemma31": report.lemma31,
                        "lemma32": report.lemma32,
                    })
                );
            } else {
                println!("lemma31 {} = {}", report.lemma31.0, report.lemma31.1);
                println!("lemma32 {} = {}", report.lemma32.0, report.lemma32.1);
            }
        }
    }
    Ok(0)
}

fn parse_families(spec: &str) -> Result<Vec<GroupFamily>, String> {
    spec.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.parse().map_err(|e: Error| e.to_string()))
        .collect()
}

fn parse_checks(spec: &str) -> Result<Vec<CheckKind>, String> {
    spec.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.parse().map_err(|e: Error| e.to_string()))
        .collect()
}

fn print_summary(summary: &CampaignSummary) {
    println!(
        "visited {} shapes, {} partitions in {} ms over {} shard(s)",
        summary.visited_shapes, summary.visited_partitions, summary.elapsed_ms, summary.shards
    );
    for (check, tally) in &summary.tallies {
        println!(
            "  {check:<12} evaluated {:>6}  findings {:>4}  violations {:>4}",
            tally.evaluated, tally.findings, tally.violations
        );
    }
    let violations: Vec<_> = summary
        .records
        .iter()
        .filter(|r| r.severity == Severity::Violation)
        .collect();
    if violations.is_empty() {
        println!("no identity violations");
    } else {
        println!("IDENTITY VIOLATIONS ({}):", violations.len());
        for rec in violations.iter().take(20) {
            let subject = rec
                .shape
                .as_ref()
                .map(|s| format!("{}:{}", s.group, s.partition))
                .or_else(|| {
                    rec.partition
                        .as_ref()
                        .map(|p| format!("{} {}", rec.family.clone().unwrap_or_default(), p))
                })
                .unwrap_or_default();
            println!(
                "  {} {} {}",
                rec.check,
                subject,
                rec.note.clone().unwrap_or_default()
            );
        }
    }
    let findings = summary.finding_count();
    if findings > 0 {
        println!("classified findings: {findings} (expected mixed-parity criterion failures)");
    }
}

fn survey_cmd(op: SurveyCmd, json: bool) -> Result<u8, String> {
    match op {
        SurveyCmd::Run {
            families,
            n_max,
            checks,
            shards,
            out,
            config,
            fault_inject,
        } => {
            let mut cfg = match config {
                Some(path) => {
                    let body = std::fs::read_to_string(&path)
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                    serde_json::from_str::<CampaignConfig>(&body)
                        .map_err(|e| format!("{}: {e}", path.display()))?
                }
                None => CampaignConfig {
                    families: vec![GroupFamily::Sp, GroupFamily::SOodd, GroupFamily::SOeven],
                    n_max: 6,
                    checks: CheckKind::all(),
                    shards: 1,
                    output_path: PathBuf::from("campaign-out"),
                    fault_inject: None,
                },
            };
            if let Some(f) = families {
                cfg.families = parse_families(&f)?;
            }
            if let Some(n) = n_max {
                cfg.n_max = n;
            }
            if let Some(c) = checks {
                cfg.checks = parse_checks(&c)?;
            }
            if let Some(s) = shards {
                cfg.shards = s;
            }
            if let Some(o) = out {
                cfg.output_path = o;
            }
            if let Some(f) = fault_inject {
                cfg.fault_inject = Some(f.parse().map_err(|e: Error| e.to_string())?);
            }
            let summary = survey::run_campaign(&cfg).map_err(|e| e.to_string())?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&summary).expect("summary serializes")
                );
            } else {
                print_summary(&summary);
            }
            Ok(if summary.has_violations() {
                EXIT_VIOLATION
            } else {
                0
            })
        }
        SurveyCmd::Remark44 { csv } => {
            let table = survey::reproduce_remark44().map_err(|e| e.to_string())?;
            if let Some(path) = csv {
                std::fs::write(&path, table.to_csv())
                    .map_err(|e| format!("{}: {e}", path.display()))?;
            }
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&table).expect("table serializes")
                );
            } else {
                for row in &table.rows {
                    let mark = if row.matches_reference { "ok" } else { "DEVIATES" };
                    println!(
                        "{:<8} {:<12} candidate {:<12} eta {:<12} {:<12} reference {} {} [{}]{}",
                        row.group.to_string(),
                        row.shape,
                        row.candidate.to_string(),
                        row.eta.to_string(),
                        row.relation.to_string(),
                        row.reference_candidate,
                        row.reference_eta,
                        mark,
                        row.note
                            .as_deref()
                            .map(|n| format!(" note: {n}"))
                            .unwrap_or_default()
                    );
                }
            }
            Ok(0)
        }
        SurveyCmd::Selftest { n_max, out } => {
            let tmp;
            let out_dir = match out {
                Some(dir) => dir,
                None => {
                    tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
                    tmp.path().to_path_buf()
                }
            };
            let cfg = CampaignConfig {
                families: vec![GroupFamily::Sp, GroupFamily::SOodd, GroupFamily::SOeven],
                n_max: n_max.unwrap_or(5),
                checks: CheckKind::all(),
                shards: 2,
                output_path: out_dir,
                fault_inject: None,
            };
            let summary = survey::run_campaign(&cfg).map_err(|e| e.to_string())?;
            let table = survey::reproduce_remark44().map_err(|e| e.to_string())?;
            let matched = table.rows.iter().filter(|r| r.matches_reference).count();
            let table_ok = matched == 5
                && !table.rows[5].matches_reference
                && table.rows[5].eta.to_string() == "[5 3 1^2]";
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "summary": summary,
                        "referenceTableOk": table_ok,
                    })
                );
            } else {
                print_summary(&summary);
                println!(
                    "reference table: {}",
                    if table_ok { "ok" } else { "MISMATCH" }
                );
            }
            Ok(if summary.has_violations() || !table_ok {
                EXIT_VIOLATION
            } else {
                0
            })
        }
    }
}
