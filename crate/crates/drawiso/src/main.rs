//! `drawiso`: analyze simple drawings of complete multipartite graphs.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use drawiso::characteristics::{
    crossing_orders, crossing_pairs, crossing_rotations, rotation_system,
};
use drawiso::iso::{iso_report, IsoKind};
use drawiso::map::validate;
use drawiso::model::Drawing;
use drawiso::reconstruct::{build_k33_catalog, multipartite_rs_from_ce};
use drawiso::sdraw::{parse_ce_file, parse_drawing};
use drawiso::verify::{check_theorems, load_catalog, load_catalog_lenient, verify_lemma3};

#[derive(Parser)]
#[command(name = "drawiso", version, about = "Isomorphism analysis for simple drawings of complete multipartite graphs", max_term_width = 100)]
struct Cli {
    /// Worker threads for the pair scan (0 = all cores).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print characteristics of a drawing in a stable text form.
    Extract {
        file: PathBuf,
        #[command(flatten)]
        select: ExtractSelect,
    },
    /// Decide the six isomorphism kinds for a pair of drawings.
    Check {
        left: PathBuf,
        right: PathBuf,
        /// Compare as labeled drawings (default).
        #[arg(long, conflicts_with = "unlabeled")]
        labeled: bool,
        /// Search over all admissible relabelings of the second drawing.
        #[arg(long)]
        unlabeled: bool,
    },
    /// Check structural validity and sphere-realizability of a drawing.
    Validate { file: PathBuf },
    /// Reconstruct a rotation system from a crossing-pair file.
    Reconstruct {
        ce_file: PathBuf,
        /// Directory (or file) of 3x3 drawings seeding the lookup catalog.
        #[arg(long, env = "DRAWISO_CATALOG")]
        catalog: PathBuf,
    },
    /// Expand a 3x3 catalog through all relabelings and scan all pairs.
    #[command(name = "verify-lemma3")]
    VerifyLemma3 { catalog: PathBuf },
    /// Run the implication battery over all same-graph pairs of a catalog.
    #[command(name = "check-theorems")]
    CheckTheorems { catalog: PathBuf },
    /// Re-check the bundled fixture corpus against its expected vectors.
    Selftest {
        /// Fixture directory.
        #[arg(default_value = "fixtures")]
        dir: PathBuf,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct ExtractSelect {
    /// Vertex rotations only.
    #[arg(long)]
    rs: bool,
    /// Crossing edge pairs only.
    #[arg(long)]
    ce: bool,
    /// Crossing rotations only.
    #[arg(long)]
    cr: bool,
    /// Crossing orders along edges only.
    #[arg(long)]
    co: bool,
    /// Vertex and crossing rotations.
    #[arg(long)]
    ers: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    if cli.jobs != 1 {
        let threads = if cli.jobs == 0 { num_threads() } else { cli.jobs };
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    match cli.command {
        Command::Extract { file, select } => {
            let d = read_drawing(&file)?;
            print!("{}", extract_text(&d, &select));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { left, right, unlabeled, .. } => {
            let d1 = read_drawing(&left)?;
            let d2 = read_drawing(&right)?;
            let report = iso_report(&d1, &d2, !unlabeled).map_err(|e| e.to_string())?;
            for kind in IsoKind::ALL {
                println!("{}={}", kind.name(), report.get(kind));
            }
            for (kind, witness) in &report.witnesses {
                if !witness.is_identity() {
                    println!(
                        "witness.{}={}",
                        kind.name(),
                        witness.display_with(d2.graph(), d1.graph())
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate { file } => {
            let d = read_drawing(&file)?;
            let report = validate(&d);
            println!("realizable={}", report.realizable);
            println!("connected={}", report.connected);
            println!("euler={}", report.euler_characteristic);
            println!("vertices={}", report.vertices);
            println!("edges={}", report.edges);
            println!("crossings={}", report.crossings);
            println!("darts={}", report.darts);
            println!("faces={}", report.faces);
            Ok(if report.realizable { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Reconstruct { ce_file, catalog } => {
            let text = std::fs::read_to_string(&ce_file)
                .map_err(|e| format!("{}: {e}", ce_file.display()))?;
            let (graph, ce) = parse_ce_file(&text).map_err(|e| e.to_string())?;
            let seeds = load_catalog(&catalog).map_err(|e| e.to_string())?;
            let seed_drawings: Vec<Drawing> = seeds.into_iter().map(|(_, d)| d).collect();
            let cat = build_k33_catalog(&seed_drawings).map_err(|e| e.to_string())?;
            let rs = multipartite_rs_from_ce(&graph, &ce, &cat).map_err(|e| e.to_string())?;
            for (v, rot) in &rs.0 {
                let names: Vec<String> =
                    rot.as_slice().iter().map(|&u| graph.vertex_name(u)).collect();
                println!("rot {}: {}", graph.vertex_name(*v), names.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyLemma3 { catalog } => {
            let drawings = load_catalog(&catalog).map_err(|e| e.to_string())?;
            let drawings: Vec<Drawing> = drawings.into_iter().map(|(_, d)| d).collect();
            match verify_lemma3(&drawings, cli.jobs != 1) {
                Ok(counts) => {
                    println!("labeled_drawings={}", counts.labeled_drawings);
                    println!("pairs_checked={}", counts.pairs_checked);
                    println!("ce_pairs={}", counts.ce_pairs);
                    println!("cr_pairs={}", counts.cr_pairs);
                    println!("lemma3_rs_ok={}", counts.lemma3_rs_ok);
                    println!("lemma3_ers_ok={}", counts.lemma3_ers_ok);
                    println!("elapsed={:.3}", counts.elapsed);
                    Ok(ExitCode::SUCCESS)
                }
                Err(drawiso::verify::VerifyError::NotK33) => Err("catalog drawing is not 3x3".into()),
                Err(violation) => {
                    println!("violation={violation}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::CheckTheorems { catalog } => {
            let (drawings, skipped) =
                load_catalog_lenient(&catalog).map_err(|e| e.to_string())?;
            let report = check_theorems(&drawings, 8);
            println!("drawings={}", report.drawings);
            println!("comparable_pairs={}", report.comparable_pairs);
            for check in &report.checks {
                println!("check.{}.pairs={}", check.name, check.pairs);
                println!("check.{}.violations={}", check.name, check.violations.len());
                for v in &check.violations {
                    println!("violation.{}={}", check.name, v);
                }
            }
            for (name, reason) in &skipped {
                println!("skipped={name}: {reason}");
            }
            Ok(if report.ok() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Selftest { dir } => {
            let pairs =
                drawiso::fixtures::load_fixture_dir(&dir).map_err(|e| e.to_string())?;
            if pairs.is_empty() {
                return Err(format!("no fixtures found under {}", dir.display()));
            }
            let mut failures = 0;
            for pair in &pairs {
                let mut problems: Vec<String> = Vec::new();
                for (name, d) in [("left", &pair.left), ("right", &pair.right)] {
                    if !validate(d).realizable {
                        problems.push(format!("{name} not realizable"));
                    }
                }
                let labeled = iso_report(&pair.left, &pair.right, true)
                    .map_err(|e| e.to_string())?;
                if labeled.bits() != pair.expected_labeled {
                    problems.push(format!(
                        "labeled {:?} != expected {:?}",
                        labeled.bits(),
                        pair.expected_labeled
                    ));
                }
                let unlabeled = iso_report(&pair.left, &pair.right, false)
                    .map_err(|e| e.to_string())?;
                if unlabeled.bits() != pair.expected_unlabeled {
                    problems.push(format!(
                        "unlabeled {:?} != expected {:?}",
                        unlabeled.bits(),
                        pair.expected_unlabeled
                    ));
                }
                if problems.is_empty() {
                    println!("fixture.{}=ok", pair.id);
                } else {
                    failures += 1;
                    println!("fixture.{}=FAIL {}", pair.id, problems.join("; "));
                }
            }
            println!("fixtures={} failures={failures}", pairs.len());
            Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn num_threads() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn read_drawing(path: &Path) -> Result<Drawing, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_drawing(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn extract_text(d: &Drawing, select: &ExtractSelect) -> String {
    let g = d.graph();
    let all = !(select.rs || select.ce || select.cr || select.co || select.ers);
    let mut out = String::new();
    if all || select.rs || select.ers {
        for (v, rot) in &rotation_system(d).0 {
            let names: Vec<String> =
                rot.as_slice().iter().map(|&u| g.vertex_name(u)).collect();
            out.push_str(&format!("rs {}: {}\n", g.vertex_name(*v), names.join(" ")));
        }
    }
    if all || select.ce {
        for p in &crossing_pairs(d).0 {
            out.push_str(&format!(
                "ce {} x {}\n",
                g.edge_name(p.first()),
                g.edge_name(p.second())
            ));
        }
    }
    if all || select.cr || select.ers {
        for (p, rot) in &crossing_rotations(d).0 {
            let names: Vec<String> =
                rot.as_array().iter().map(|&u| g.vertex_name(u)).collect();
            out.push_str(&format!(
                "cr {} x {}: {}\n",
                g.edge_name(p.first()),
                g.edge_name(p.second()),
                names.join(" ")
            ));
        }
    }
    if all || select.co {
        for (e, seq) in &crossing_orders(d).0 {
            let names: Vec<String> = seq.iter().map(|&f| g.edge_name(f)).collect();
            let sep = if names.is_empty() { "" } else { " " };
            out.push_str(&format!("co {}:{sep}{}\n", g.edge_name(*e), names.join(" ")));
        }
    }
    let _ = BTreeSet::<u8>::new();
    out
}
