//! `hallpaige`: command-line front end.
//!
//! Exit codes: 0 success / mapping produced or verified; 1 refutation
//! (no mapping, failed verification, failed containment); 2 invalid
//! input or unsupported request; 3 search budget exhausted.

mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hallpaige_core::mapping::{read_csv_tables, verify_tables, DEFAULT_SEARCH_BUDGET};
use hallpaige_core::{
    build_cm_psl2, hall_paige_verdict, lift_central_involution, lift_double_cosets_identity,
    lift_normal, quotient, CompleteMapping, Group, SearchOutcome, Subgroup,
};
use hallpaige_coxeter::{
    double_coset_reps, verify_double_coset_squares, CoxeterSystem, VerifyMethod,
};
use spec::GroupSpec;

#[derive(Parser)]
#[command(name = "hallpaige", version, about = "Complete mappings of finite groups")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Group inspection.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Complete mappings: search, verify, lift, PSL(2,q).
    #[command(subcommand)]
    Cm(CmCmd),
    /// Coxeter double-coset machinery.
    #[command(subcommand)]
    Coxeter(CoxeterCmd),
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Order, Sylow-2 structure and the good/bad verdict.
    Info {
        spec: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
}

#[derive(Subcommand)]
enum CmCmd {
    /// Exact-cover search for a complete mapping; prints CSV on success.
    Search {
        spec: String,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check a mapping CSV against a group.
    Verify { spec: String, file: PathBuf },
    /// Lifting constructions.
    #[command(subcommand)]
    Lift(LiftCmd),
    /// The PSL(2,q) pipeline; prints CSV plus a JSON trace.
    Psl2 {
        q: usize,
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct LiftCommon {
    /// Parent group spec.
    spec: String,
    /// Output file for the mapping CSV (default: stdout).
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum LiftCmd {
    /// Lift through a central involution x: needs a mapping of the
    /// quotient by x.
    Z2 {
        #[command(flatten)]
        common: LiftCommon,
        /// Element id of the central involution.
        #[arg(long)]
        x: usize,
        /// Mapping CSV of the quotient (computed by search when omitted).
        #[arg(long)]
        quotient_cm: Option<PathBuf>,
    },
    /// Compose mappings of a normal subgroup and of the quotient.
    Normal {
        #[command(flatten)]
        common: LiftCommon,
        /// Generators of the normal subgroup, comma-separated ids.
        #[arg(long, value_delimiter = ',', required = true)]
        normal: Vec<usize>,
        /// Mapping CSV of the subgroup (searched when omitted).
        #[arg(long)]
        sub_cm: Option<PathBuf>,
        /// Mapping CSV of the quotient (searched when omitted).
        #[arg(long)]
        quotient_cm: Option<PathBuf>,
    },
    /// Lift through double cosets when every class satisfies D² ⊇ D.
    Dcst {
        #[command(flatten)]
        common: LiftCommon,
        /// Generators of the subgroup, comma-separated ids.
        #[arg(long, value_delimiter = ',', required = true)]
        sub: Vec<usize>,
        /// Mapping CSV of the subgroup (searched when omitted).
        #[arg(long)]
        sub_cm: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CoxeterCmd {
    /// Minimal double-coset representatives for the parabolic dropping
    /// one generator; one word per line.
    Dcosets {
        ctype: String,
        rank: usize,
        #[arg(long)]
        drop: u8,
    },
    /// Check D² ⊇ D per double-coset class; JSON report.
    #[command(name = "verify-p2")]
    VerifyP2 {
        ctype: String,
        rank: usize,
        #[arg(long)]
        drop: Option<u8>,
        /// "product" or "form" (default: by group order).
        #[arg(long)]
        method: Option<String>,
    },
}

/// Errors that map to exit code 2.
struct Usage(String);

impl<T: std::fmt::Display> From<T> for Usage {
    fn from(e: T) -> Self {
        Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Usage> {
    match cli.cmd {
        Cmd::Group(GroupCmd::Info { spec, format }) => group_info(&spec, &format),
        Cmd::Cm(cmd) => match cmd {
            CmCmd::Search { spec, budget, out } => cm_search(&spec, budget, out.as_deref()),
            CmCmd::Verify { spec, file } => cm_verify(&spec, &file),
            CmCmd::Lift(lift) => cm_lift(lift),
            CmCmd::Psl2 { q, trace, out } => cm_psl2(q, trace.as_deref(), out.as_deref()),
        },
        Cmd::Coxeter(cmd) => match cmd {
            CoxeterCmd::Dcosets { ctype, rank, drop } => coxeter_dcosets(&ctype, rank, drop),
            CoxeterCmd::VerifyP2 {
                ctype,
                rank,
                drop,
                method,
            } => coxeter_verify_p2(&ctype, rank, drop, method.as_deref()),
        },
    }
}

fn load_group(spec: &str) -> Result<Group, Usage> {
    Ok(GroupSpec::parse(spec)?.load()?)
}

fn group_info(spec: &str, format: &str) -> Result<u8, Usage> {
    let g = load_group(spec)?;
    let v = hall_paige_verdict(&g);
    let verdict = if v.good { "GOOD" } else { "BAD" };
    match format {
        "text" => {
            let shape = if v.sylow2_order == 1 {
                "trivial"
            } else if v.sylow2_cyclic {
                "cyclic"
            } else {
                "non-cyclic"
            };
            println!(
                "order {}, Sylow-2 order {} {}, {}",
                g.order(),
                v.sylow2_order,
                shape,
                verdict
            );
        }
        "json" => {
            let obj = serde_json::json!({
                "label": g.label(),
                "order": g.order(),
                "sylow2_order": v.sylow2_order,
                "sylow2_cyclic": v.sylow2_cyclic,
                "good": v.good,
            });
            println!("{obj}");
        }
        other => return Err(format!("unknown format {other:?}").into()),
    }
    Ok(0)
}

fn emit_csv(cm: &CompleteMapping, out: Option<&std::path::Path>) -> Result<(), Usage> {
    let csv = cm.to_csv();
    match out {
        Some(path) => std::fs::write(path, csv).map_err(|e| Usage(e.to_string()))?,
        None => print!("{csv}"),
    }
    Ok(())
}

fn cm_search(spec: &str, budget: u64, out: Option<&std::path::Path>) -> Result<u8, Usage> {
    let g = load_group(spec)?;
    match CompleteMapping::search(&g, budget) {
        SearchOutcome::Found(cm) => {
            emit_csv(&cm, out)?;
            Ok(0)
        }
        SearchOutcome::NotFound => {
            eprintln!("no complete mapping exists (search exhausted)");
            Ok(1)
        }
        SearchOutcome::BudgetExhausted => {
            eprintln!("search budget of {budget} nodes exhausted");
            Ok(3)
        }
    }
}

fn cm_verify(spec: &str, file: &std::path::Path) -> Result<u8, Usage> {
    let g = load_group(spec)?;
    let text = std::fs::read_to_string(file).map_err(|e| Usage(e.to_string()))?;
    let (phi, psi) = read_csv_tables(&text)?;
    if phi.len() != g.order() {
        return Err(format!(
            "mapping has {} rows but the group has order {}",
            phi.len(),
            g.order()
        )
        .into());
    }
    match verify_tables(&g, &phi, &psi) {
        Ok(()) => {
            println!("verified: complete mapping of order {}", g.order());
            Ok(0)
        }
        Err(e) => {
            eprintln!("not a complete mapping: {e}");
            Ok(1)
        }
    }
}

/// Load a sub-mapping CSV against a group, or search for one.
fn mapping_for(
    g: &Group,
    csv: Option<&std::path::Path>,
    what: &str,
) -> Result<CompleteMapping, Usage> {
    match csv {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Usage(e.to_string()))?;
            let (phi, psi) = read_csv_tables(&text)?;
            Ok(CompleteMapping::new(g, phi, psi)?)
        }
        None => match CompleteMapping::search(g, DEFAULT_SEARCH_BUDGET) {
            SearchOutcome::Found(cm) => Ok(cm),
            _ => Err(format!("no complete mapping found for the {what}").into()),
        },
    }
}

fn cm_lift(cmd: LiftCmd) -> Result<u8, Usage> {
    match cmd {
        LiftCmd::Z2 {
            common,
            x,
            quotient_cm,
        } => {
            let g = load_group(&common.spec)?;
            if x >= g.order() {
                return Err(format!("element id {x} out of range").into());
            }
            let n = Subgroup::new(&g, [0, x])?;
            let (q, _) = quotient(&g, &n)?;
            let cm_q = mapping_for(&q, quotient_cm.as_deref(), "quotient")?;
            let cm = lift_central_involution(&g, x, &cm_q)?;
            emit_csv(&cm, common.out.as_deref())?;
            Ok(0)
        }
        LiftCmd::Normal {
            common,
            normal,
            sub_cm,
            quotient_cm,
        } => {
            let g = load_group(&common.spec)?;
            for &id in &normal {
                if id >= g.order() {
                    return Err(format!("element id {id} out of range").into());
                }
            }
            let n = Subgroup::generated(&g, &normal);
            let (q, _) = quotient(&g, &n)?;
            let cm_n = mapping_for(&n.to_group(), sub_cm.as_deref(), "subgroup")?;
            let cm_q = mapping_for(&q, quotient_cm.as_deref(), "quotient")?;
            let cm = lift_normal(&g, &n, &cm_n, &cm_q)?;
            emit_csv(&cm, common.out.as_deref())?;
            Ok(0)
        }
        LiftCmd::Dcst {
            common,
            sub,
            sub_cm,
        } => {
            let g = load_group(&common.spec)?;
            for &id in &sub {
                if id >= g.order() {
                    return Err(format!("element id {id} out of range").into());
                }
            }
            let h = Subgroup::generated(&g, &sub);
            let cm_h = mapping_for(&h.to_group(), sub_cm.as_deref(), "subgroup")?;
            match lift_double_cosets_identity(&g, &h, &cm_h) {
                Ok(cm) => {
                    emit_csv(&cm, common.out.as_deref())?;
                    Ok(0)
                }
                Err(hallpaige_core::LiftError::ContainmentFailed { class_rep }) => {
                    eprintln!("a double coset fails D² ⊇ D (class of element {class_rep})");
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}

fn cm_psl2(q: usize, trace: Option<&std::path::Path>, out: Option<&std::path::Path>) -> Result<u8, Usage> {
    let (cm, tr) = build_cm_psl2(q)?;
    emit_csv(&cm, out)?;
    let json = serde_json::json!({
        "q": tr.q,
        "branch": tr.branch.to_string(),
        "group_order": tr.group_order,
        "borel_order": tr.borel_order,
        "unipotent_order": tr.unipotent_order,
        "torus_order": tr.torus_order,
        "witnesses": tr.witnesses,
    });
    match trace {
        Some(path) => std::fs::write(path, format!("{json}\n")).map_err(|e| Usage(e.to_string()))?,
        None => eprintln!("{json}"),
    }
    Ok(0)
}

fn coxeter_dcosets(ctype: &str, rank: usize, drop: u8) -> Result<u8, Usage> {
    let sys = CoxeterSystem::from_name(ctype, rank)?;
    let dc = double_coset_reps(&sys, drop)?;
    for class in dc.classes() {
        println!("{}", class.rep);
    }
    Ok(0)
}

fn coxeter_verify_p2(
    ctype: &str,
    rank: usize,
    drop: Option<u8>,
    method: Option<&str>,
) -> Result<u8, Usage> {
    let sys = CoxeterSystem::from_name(ctype, rank)?;
    let drop = drop.unwrap_or(match sys.ctype() {
        hallpaige_coxeter::CoxeterType::I2(_) => 1,
        _ => sys.rank() as u8,
    });
    let method = match method {
        Some("product") => VerifyMethod::Product,
        Some("form") => VerifyMethod::Form,
        Some(other) => return Err(format!("unknown method {other:?}").into()),
        None => VerifyMethod::default_for(&sys),
    };
    let reports = verify_double_coset_squares(&sys, drop, method, 10_000_000)?;
    let items: Vec<serde_json::Value> = reports
        .iter()
        .map(|c| {
            serde_json::json!({
                "rep": c.rep.to_string(),
                "length": c.length,
                "method": c.method,
                "pass": c.pass,
            })
        })
        .collect();
    println!("{}", serde_json::json!(items));
    Ok(if reports.iter().all(|c| c.pass) { 0 } else { 1 })
}
