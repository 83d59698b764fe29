//! `sga` — exact invariants of the finite simple groups and exhaustive
//! inequality sweeps, from the command line.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use sga_core::sweep::{self, FamilyFilter, GroupRecord, SweepRanges, SweepClause};
use sga_core::{classification, invariants, perm_oracle, Error, GroupKey};

#[derive(Parser)]
#[command(
    name = "sga",
    about = "Exact invariants of the finite simple groups: orders, minimal degrees, outer \
             automorphism groups, guaranteed maximal-subgroup indices, and inequality sweeps",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariants of one group
    Info { group: String },
    /// Class membership and guaranteed-index report for one group
    Classify { group: String },
    /// Sweep one clause (A4a, A4b, A5, A23, B) over a parameter range
    Verify {
        clause: String,
        /// Restrict to one family (Alt, Sporadic, PSL, PSU, PSp, O, O+, O-,
        /// G2, F4, E6, E7, E8, 2B2, 2G2, 3D4, 2E6, 2F4)
        #[arg(long)]
        family: Option<String>,
        /// Override the dimension caps
        #[arg(long)]
        n_max: Option<u32>,
        /// Override the field-size caps
        #[arg(long)]
        q_max: Option<u64>,
        /// Stream one JSON record per group to stdout
        #[arg(long)]
        json: bool,
        /// Stream one CSV row per group to stdout
        #[arg(long)]
        csv: bool,
    },
    /// Run a brute-force fixture (Alt(5), Alt(6), PSL(2,7), PSL(2,8),
    /// PSL(2,11), or `all`) and compare with the formula layer
    Oracle { fixture: String },
    /// Exact checks of the documented side remarks
    Remark {
        #[command(subcommand)]
        remark: RemarkCommand,
    },
    /// Ratio table log2(mindeg)/(2mf) for PSL(m, 2^f) with m | 2^f - 1
    Tightness { m: u32, f_max: u32 },
    /// Dyadic enclosure of log|S| / log mindeg(S)
    Ratio { group: String },
}

#[derive(Subcommand)]
enum RemarkCommand {
    /// Index of the ordinary field-extension subgroup of PSL(n,2), n prime:
    /// verifies it exceeds mindeg^((n-1)/2)
    #[command(name = "psl-n2")]
    PslN2 { n: u32 },
}

fn parse_key(text: &str) -> Result<GroupKey, Error> {
    sga_core::parse_group(text)
}

fn cmd_info(group: &str) -> Result<ExitCode, Error> {
    let key = parse_key(group)?;
    let canonical = sga_core::normalize(key);
    let inv = invariants::invariants(key);
    let report = classification::class_report(key);
    println!("group:      {}", key.render());
    if canonical.key != key {
        println!("canonical:  {}", canonical.key.render());
    }
    if !canonical.aliases.is_empty() {
        let list: Vec<String> = canonical.aliases.iter().map(|a| a.render()).collect();
        println!("aliases:    {}", list.join(", "));
    }
    println!("order:      {}", inv.order);
    println!("mindeg:     {}", inv.mindeg);
    println!("out order:  {}", inv.out_order);
    println!("out group:  {}", inv.out_recipe);
    println!("class:      {}", report.label);
    if let Some(v) = &report.v_index {
        println!("v:          {v}");
    }
    println!(
        "ordinary class at minimal index: {}",
        if inv.min_index_ordinary { "yes" } else { "no" }
    );
    println!("witnesses:");
    for w in &inv.witnesses {
        println!(
            "  index {:<16} {} [{}, {} class{}]",
            w.index.to_string(),
            w.structure,
            if w.ordinary { "ordinary" } else { "non-ordinary" },
            w.class_count,
            if w.class_count == 1 { "" } else { "es" },
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(group: &str) -> Result<ExitCode, Error> {
    let key = parse_key(group)?;
    let report = classification::class_report(key);
    println!("group:   {}", report.key);
    println!("class:   {}", report.label);
    println!("clause:  {}", report.clause);
    println!("mindeg:  {}", report.mindeg);
    if let Some(v) = &report.v_index {
        println!("v:       {v}");
    }
    println!("guaranteed indices: {}", report.guaranteed_indices);
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    clause: &str,
    family: Option<String>,
    n_max: Option<u32>,
    q_max: Option<u64>,
    json: bool,
    csv: bool,
) -> Result<ExitCode, Error> {
    let clause = SweepClause::from_str(clause)?;
    let filter = match family {
        Some(f) => FamilyFilter::from_str(&f)?,
        None => FamilyFilter::All,
    };
    let mut ranges = SweepRanges::default();
    if let Some(n) = n_max {
        ranges = ranges.with_n_max(n);
    }
    if let Some(q) = q_max {
        ranges = ranges.with_q_max(q);
    }

    if csv {
        println!("key,order,mindeg,out_order,label,v,clause,pass");
    }
    let mut emit = |rec: &GroupRecord| {
        if json {
            println!("{}", serde_json::to_string(rec).expect("record serializes"));
        } else if csv {
            let pass = rec
                .clauses
                .get(&clause.to_string())
                .map(|p| p.to_string())
                .unwrap_or_else(|| "skipped".into());
            println!(
                "{},{},{},{},{},{},{},{}",
                rec.key,
                rec.order,
                rec.mindeg,
                rec.out_order,
                rec.label,
                rec.v.clone().unwrap_or_else(|| "-".into()),
                clause,
                pass
            );
        }
    };
    let streaming = json || csv;
    let report = sweep::sweep(
        clause,
        filter,
        &ranges,
        if streaming { Some(&mut emit) } else { None },
    );

    eprintln!(
        "clause {} over {}: {} candidates, {} passed, {} failed, {} skipped ({} excluded, {} of \
         those would pass) in {} ms",
        report.clause,
        report.family,
        report.candidates,
        report.passed,
        report.failed,
        report.skipped,
        report.excluded,
        report.excluded_would_pass,
        report.wall_ms
    );
    if !streaming {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else if !report.all_pass {
        for f in &report.failures {
            eprintln!("FAIL {}: {} vs {} ({})", f.key, f.lhs, f.rhs, f.note);
        }
    }
    Ok(if report.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_oracle(fixture: &str) -> Result<ExitCode, Error> {
    let names: Vec<String> = if fixture.eq_ignore_ascii_case("all") {
        sga_core::fixtures::oracle_fixtures()
            .iter()
            .map(|fx| fx.name.clone())
            .collect()
    } else {
        vec![fixture.to_string()]
    };
    let mut all_ok = true;
    for name in names {
        let (fx, group) = perm_oracle::fixture_by_name(&name)?;
        let oracle_index = perm_oracle::min_corefree_index(&group)?;
        let key = parse_key(&fx.name)?;
        let expected = invariants::mindeg(key);
        let ok = expected == oracle_index.into();
        all_ok &= ok;
        println!(
            "{:<10} degree {:>2}  order {:>4}  min core-free index {:>3}  formula {:>3}  {}",
            fx.name,
            fx.degree,
            group.order(),
            oracle_index,
            expected,
            if ok { "agree" } else { "MISMATCH" }
        );
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_remark_psl_n2(n: u32) -> Result<ExitCode, Error> {
    let ev = sweep::remark_psl_n2(n)?;
    println!("n = {}", ev.n);
    println!("index of GL1(2^n):n  = {}", ev.index);
    println!("mindeg^((n-1)/2)     = {}", ev.mindeg_power);
    println!(
        "index > mindeg^((n-1)/2): {}",
        if ev.holds { "holds" } else { "FAILS" }
    );
    Ok(if ev.holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_tightness(m: u32, f_max: u32) -> Result<ExitCode, Error> {
    let rows = sweep::tightness_report(m, f_max)?;
    let target = (m as f64 - 1.0) / (2.0 * m as f64);
    println!("limit target (m-1)/2m = {target:.6}");
    println!("{:>4}  {:>24}  {:>12}", "f", "mindeg", "ratio");
    for row in rows {
        println!("{:>4}  {:>24}  {:>12.6}", row.f, row.mindeg.to_string(), row.ratio_mid);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_ratio(group: &str) -> Result<ExitCode, Error> {
    let key = parse_key(group)?;
    let r = sweep::exponent_ratio(key);
    println!(
        "log|S| / log mindeg(S) for {} lies in [{:.6}, {:.6}]",
        key.render(),
        r.lo_f64(),
        r.hi_f64()
    );
    Ok(ExitCode::SUCCESS)
}

fn run() -> Result<ExitCode, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Info { group } => cmd_info(&group),
        Command::Classify { group } => cmd_classify(&group),
        Command::Verify {
            clause,
            family,
            n_max,
            q_max,
            json,
            csv,
        } => cmd_verify(&clause, family, n_max, q_max, json, csv),
        Command::Oracle { fixture } => cmd_oracle(&fixture),
        Command::Remark { remark } => match remark {
            RemarkCommand::PslN2 { n } => cmd_remark_psl_n2(n),
        },
        Command::Tightness { m, f_max } => cmd_tightness(m, f_max),
        Command::Ratio { group } => cmd_ratio(&group),
    }
}

fn main() -> ExitCode {
    // behave like an ordinary unix tool when output is piped into head etc.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
