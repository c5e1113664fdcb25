//! `gems` — build lens space crystallizations, compute gem invariants and
//! exhaustive gem-Matveev complexity, verify parameter sweeps, and write
//! small-order catalogues.
//!
//! Exit codes: 0 on success, 1 when a verification sweep finds a failed
//! flag, 2 on usage or input errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use gems::catalogue::{
    catalogue_index, enumerate_crystallizations, survey_csv, survey_lens_range, LensSurveyRow,
};
use gems::code::canonical_code;
use gems::gemfile::{self, GemFile};
use gems::gm::{gm_analysis, GmWitness};
use gems::homology::first_homology;
use gems::lens::{LabelledCrystallization, LensParams, VertexLabel};
use gems::surface::regular_genus;

#[derive(Parser)]
#[command(
    name = "gems",
    version,
    about = "Lens space crystallizations and their gem invariants",
    max_term_width = 100
)]
struct Cli {
    /// Worker threads for the parallel searches (defaults to all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the crystallization of L(p,q) and write its labelled gem file.
    Build {
        p: u64,
        q: i64,
        /// Write to this file instead of standard output.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Report the invariants of the gem in a file.
    Invariants {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Exhaustive gem-Matveev complexity of the crystallization in a file.
    Gm {
        file: PathBuf,
        /// Also report an optimal decomposition witnessing the value.
        #[arg(long)]
        witness: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Canonical code of the gem in a file.
    Code { file: PathBuf },
    /// Build and verify every L(p,q) with 2 <= p <= pmax.
    Verify {
        #[arg(long, value_name = "P")]
        pmax: u64,
        #[arg(long, value_enum, default_value_t = SurveyFormat::Text)]
        format: SurveyFormat,
    },
    /// Enumerate all crystallizations up to an order into a directory.
    Catalogue {
        /// Largest graph order to enumerate (even; hard work beyond 12).
        #[arg(long, default_value_t = 12, value_name = "K")]
        max_order: usize,
        /// Directory receiving one gem file per entry plus an index.
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SurveyFormat {
    Text,
    Csv,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Gems(#[from] gems::Error),
    #[error("cannot {action} {path}: {source}")]
    Io {
        action: &'static str,
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

/// Distinguishes a clean run from one that completed but found failures.
enum Outcome {
    Success,
    VerificationFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: cannot configure {jobs} worker threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Build { p, q, out } => build(p, q, out.as_deref()),
        Command::Invariants { file, format } => invariants(&file, format),
        Command::Gm {
            file,
            witness,
            format,
        } => gm(&file, witness, format),
        Command::Code { file } => code(&file),
        Command::Verify { pmax, format } => verify(pmax, format),
        Command::Catalogue { max_order, out } => catalogue(max_order, &out),
    }
}

fn read_gem(path: &Path) -> Result<GemFile, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        action: "read",
        path: path.to_path_buf(),
        source,
    })?;
    Ok(gemfile::parse(&text)?)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        action: "write",
        path: path.to_path_buf(),
        source,
    })
}

fn build(p: u64, q: i64, out: Option<&Path>) -> Result<Outcome, CliError> {
    let params = LensParams::normalize(p, q)?;
    let lc = LabelledCrystallization::build(params);
    let text = lc.to_gem_text();
    match out {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    Ok(Outcome::Success)
}

fn invariants(file: &Path, format: ReportFormat) -> Result<Outcome, CliError> {
    let gem = read_gem(file)?;
    let g = &gem.graph;
    let flags = g.classify();
    let counts = g.cycle_counts();
    let genus = regular_genus(g).ok();
    let h1 = first_homology(g).ok();
    match format {
        ReportFormat::Text => {
            println!("order: {}", g.order());
            println!("bipartite: {}", flags.bipartite);
            println!("contracted: {}", flags.contracted);
            println!("manifold: {}", g.represents_closed_3manifold());
            let list = counts
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            println!("g: {list}");
            match genus {
                Some(genus) => println!("regular_genus: {genus}"),
                None => println!("regular_genus: n/a"),
            }
            match h1 {
                Some(h1) => println!("h1: {}", h1.token()),
                None => println!("h1: n/a"),
            }
        }
        ReportFormat::Json => {
            let value = json!({
                "order": g.order(),
                "bipartite": flags.bipartite,
                "contracted": flags.contracted,
                "manifold": g.represents_closed_3manifold(),
                "g": counts,
                "regular_genus": genus,
                "h1": h1.map(|h| h.token()),
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("valid JSON"));
        }
    }
    Ok(Outcome::Success)
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn witness_report(witness: &GmWitness, labels: Option<&[VertexLabel]>) -> String {
    let dec = &witness.decomposition;
    let mut out = String::new();
    let _ = writeln!(out, "partition: {}", dec.partition);
    let _ = writeln!(out, "cut_first: {}", dec.cut_first);
    let _ = writeln!(
        out,
        "cut_first_vertices: {}",
        join(&dec.cut_first_vertices)
    );
    let _ = writeln!(out, "cut_second: {}", dec.cut_second);
    let _ = writeln!(
        out,
        "cut_second_vertices: {}",
        join(&dec.cut_second_vertices)
    );
    let _ = writeln!(out, "region: {}", witness.region);
    let _ = writeln!(out, "region_faces: {}", join(&dec.regions[witness.region]));
    let _ = writeln!(out, "covered: {}", witness.covered);
    let _ = writeln!(out, "score: {}", witness.score);
    let _ = writeln!(out, "leftover: {}", join(&witness.leftover));
    if let Some(labels) = labels {
        let named = witness
            .leftover
            .iter()
            .map(|&v| labels[v as usize].to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(out, "leftover_labels: {named}");
    }
    out
}

fn witness_json(witness: &GmWitness, labels: Option<&[VertexLabel]>) -> serde_json::Value {
    let dec = &witness.decomposition;
    json!({
        "partition": dec.partition.to_string(),
        "cut_first": dec.cut_first,
        "cut_first_vertices": dec.cut_first_vertices,
        "cut_second": dec.cut_second,
        "cut_second_vertices": dec.cut_second_vertices,
        "region": witness.region,
        "region_faces": dec.regions[witness.region],
        "covered": witness.covered,
        "score": witness.score,
        "leftover": witness.leftover,
        "leftover_labels": labels.map(|labels| {
            witness
                .leftover
                .iter()
                .map(|&v| labels[v as usize].to_string())
                .collect::<Vec<String>>()
        }),
    })
}

fn gm(file: &Path, witness: bool, format: ReportFormat) -> Result<Outcome, CliError> {
    let gem = read_gem(file)?;
    let analysis = gm_analysis(&gem.graph)?;
    match format {
        ReportFormat::Text => {
            println!("gm: {}", analysis.complexity);
            if witness {
                print!("{}", witness_report(&analysis.witness, gem.labels.as_deref()));
            }
        }
        ReportFormat::Json => {
            let value = json!({
                "gm": analysis.complexity,
                "gm_witness": witness
                    .then(|| witness_json(&analysis.witness, gem.labels.as_deref())),
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("valid JSON"));
        }
    }
    Ok(Outcome::Success)
}

fn code(file: &Path) -> Result<Outcome, CliError> {
    let gem = read_gem(file)?;
    println!("{}", canonical_code(&gem.graph)?);
    Ok(Outcome::Success)
}

fn survey_text_row(row: &LensSurveyRow) -> String {
    let bound = match row.bound {
        Some(b) => b.to_string(),
        None => "n/a (p<3)".into(),
    };
    let verdict = if row.all_ok() { "ok" } else { "FAILED" };
    format!(
        "{}: S={} order={} k_upper={} gm={} bound={} sharp_forced={} {}",
        row.params, row.cf_sum, row.order, row.k_upper, row.gm, bound, row.sharp_forced, verdict
    )
}

fn verify(pmax: u64, format: SurveyFormat) -> Result<Outcome, CliError> {
    if pmax < 2 {
        return Err(CliError::Usage(format!(
            "--pmax must be at least 2, got {pmax}"
        )));
    }
    let rows = survey_lens_range(pmax)?;
    let failures: Vec<&LensSurveyRow> = rows.iter().filter(|r| !r.all_ok()).collect();
    match format {
        SurveyFormat::Csv => print!("{}", survey_csv(&rows)),
        SurveyFormat::Text => {
            for row in &rows {
                println!("{}", survey_text_row(row));
            }
            println!(
                "verified {} parameter pairs up to p = {pmax}: {} failed",
                rows.len(),
                failures.len()
            );
        }
    }
    if failures.is_empty() {
        Ok(Outcome::Success)
    } else {
        for row in failures {
            eprintln!("verification failed for {}", row.params);
        }
        Ok(Outcome::VerificationFailed)
    }
}

fn catalogue(max_order: usize, out: &Path) -> Result<Outcome, CliError> {
    let entries = enumerate_crystallizations(max_order)?;
    fs::create_dir_all(out).map_err(|source| CliError::Io {
        action: "create directory",
        path: out.to_path_buf(),
        source,
    })?;
    write_file(&out.join("index.txt"), &catalogue_index(&entries))?;
    for (i, entry) in entries.iter().enumerate() {
        let path = out.join(format!("entry-{i:04}.gem"));
        write_file(&path, &gemfile::render(&entry.code.to_graph(), None))?;
    }
    println!(
        "wrote {} entries up to order {max_order} into {}",
        entries.len(),
        out.display()
    );
    Ok(Outcome::Success)
}
