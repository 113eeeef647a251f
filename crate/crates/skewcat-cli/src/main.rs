use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use skewcat::cat::{Replay, Status};
use skewcat_cli::{check, load_replay, materialize, replay_witnesses, CheckOptions, FixtureDoc, ReportDoc};

#[derive(Parser)]
#[command(name = "skewcat", version, about = "Check skew monoidal structures on finite fixtures")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a fixture against the schema. Exit 0 valid, 2 invalid.
    Validate { file: PathBuf },
    /// Run suites on a fixture. Exit 0 pass, 1 some check failed, 2 bad input.
    Check {
        file: PathBuf,
        /// Comma separated suite names; defaults to the fixture's list.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Re-run the witnesses in this report or witness file instead.
        #[arg(long)]
        replay_witness: Option<PathBuf>,
    },
    /// Write a bundled fixture to the working directory and check it.
    Demo { name: String },
}

fn print_report(r: &ReportDoc) {
    for s in &r.suites {
        for c in &s.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            print!("{tag} {} ({} cases", c.id, c.cases);
            if c.skipped > 0 {
                print!(", {} skipped", c.skipped);
            }
            println!(")");
            if let Some(w) = c.witness.as_ref().filter(|_| c.failed()) {
                println!("     at {} input {} : {} vs {}{}", w.case, w.input, w.lhs, w.rhs, w.note.as_ref().map(|n| format!(" ({n})")).unwrap_or_default());
            }
            if let Some(why) = c.reason.as_ref().filter(|_| c.status == Status::Skipped) {
                println!("     {why}");
            }
        }
        if let Some(sc) = &s.scan {
            let non_iso = sc.entries.iter().filter(|e| e.class != skewcat::skewmon::Class::Iso).count();
            println!("scan {}: {} components, {} not invertible", sc.structure, sc.entries.len(), non_iso);
        }
    }
    let m = &r.summary;
    println!("{} checks: {} passed, {} failed, {} skipped ({} ms)", m.checks, m.passed, m.failed, m.skipped, r.environment.wall_ms);
}

fn write_report(r: &ReportDoc, path: &Path) -> Result<()> {
    let text = serde_json::to_string_pretty(r)?;
    std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}

fn run_check(fx: &FixtureDoc, opts: &CheckOptions, out: Option<&Path>) -> Result<u8> {
    let r = check(fx, opts)?;
    print_report(&r);
    if let Some(p) = out {
        write_report(&r, p)?;
    }
    Ok(r.exit_code() as u8)
}

fn run_replay(fx: &FixtureDoc, opts: &CheckOptions, path: &Path) -> Result<u8> {
    let ws = load_replay(path)?;
    let lines = replay_witnesses(fx, opts, &ws)?;
    for l in &lines {
        let what = match &l.result {
            Replay::Reproduced => "reproduced".to_string(),
            Replay::Differs(w) => format!("fails differently at input {} : {} vs {}", w.input, w.lhs, w.rhs),
            Replay::NoLongerFails => "no longer fails".to_string(),
            Replay::UnknownCase => "no such check or case".to_string(),
        };
        println!("{} [{}] {what}", l.check, l.case);
    }
    println!("{} of {} witnesses reproduced", lines.iter().filter(|l| l.reproduced()).count(), lines.len());
    Ok(if lines.iter().all(|l| l.reproduced()) { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let res = match cli.cmd {
        Cmd::Validate { file } => FixtureDoc::load(&file).map(|fx| {
            println!("{}: valid fixture {:?}", file.display(), fx.name);
            0
        }),
        Cmd::Check {
            file,
            suite,
            jobs,
            seed,
            out,
            replay_witness,
        } => FixtureDoc::load(&file).and_then(|fx| {
            let opts = CheckOptions { suites: suite, jobs, seed };
            match replay_witness {
                Some(w) => run_replay(&fx, &opts, &w),
                None => run_check(&fx, &opts, out.as_deref()),
            }
        }),
        Cmd::Demo { name } => (|| {
            let dir = std::env::current_dir()?;
            let path = materialize(&name, &dir)?;
            println!("wrote {}", path.display());
            let fx = FixtureDoc::load(&path)?;
            let out = dir.join(format!("{name}.report.json"));
            let code = run_check(&fx, &CheckOptions::default(), Some(&out))?;
            println!("wrote {}", out.display());
            Ok(code)
        })(),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
