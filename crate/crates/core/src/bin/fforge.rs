use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use fforge::engine::{cross_check, enumerate, oracle_generate, EnumerationJob, GeneratedSet};
use fforge::growth::{
    build_nanotube, recognize_nanotube, reduce_to_dodecahedron, NanotubeFamily, Regime,
};
use fforge::planar_map::{
    canonical_code, check_polytopal, decode_planar_code, encode_planar_code, PlanarMap,
};
use fforge::structure::{classify, find_belts, five_belt_census, FamilyClass};

#[derive(Parser)]
#[command(
    name = "fforge",
    version,
    about = "Fullerene growth by truncations: generation, reduction and checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Treat mirror images as distinct.
    #[arg(long)]
    no_reflection: bool,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate fullerenes by growth from the dodecahedron.
    Gen {
        #[arg(long, default_value = "seven")]
        regime: Regime,
        #[arg(long)]
        max_hexagons: usize,
        /// planar_code output (fullerenes, sorted by hexagon count then code).
        #[arg(long)]
        out: PathBuf,
        /// JSON-lines derivation traces.
        #[arg(long)]
        traces: Option<PathBuf>,
        /// Also write the F_-1 and F1 members reached.
        #[arg(long)]
        all_classes: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Enumerate fullerenes with the face-spiral oracle.
    Oracle {
        #[arg(long)]
        max_hexagons: usize,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Compare two planar_code files as sets of isomorphism classes.
    Diff {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Reduce every map of a file to the dodecahedron.
    Reduce {
        input: PathBuf,
        #[arg(long, default_value = "seven")]
        regime: Regime,
        #[arg(long)]
        traces: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Per-map report: polytopality, p-vector, class and belts.
    Validate { input: PathBuf },
    /// Family class of every map.
    Classify { input: PathBuf },
    /// The k-belts of every map.
    Belts {
        input: PathBuf,
        #[arg(short, long, default_value_t = 5)]
        k: usize,
    },
    /// Build a nanotube (`--family`, `--k`, `--out`) or recognize the maps of a file.
    Nanotube {
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(short, long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    D5,
    F3,
}

impl From<FamilyArg> for NanotubeFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::D5 => NanotubeFamily::D5,
            FamilyArg::F3 => NanotubeFamily::F3,
        }
    }
}

/// Failure with an exit status: 1 for validation, 2 for usage and input errors.
struct Failure(u8, String);

fn usage(msg: impl ToString) -> Failure {
    Failure(2, msg.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("fforge: {msg}");
            ExitCode::from(code)
        }
    }
}

fn read_maps(path: &Path) -> Result<Vec<PlanarMap>, Failure> {
    let bytes = fs::read(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    decode_planar_code(&bytes).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_maps(path: &Path, maps: &[PlanarMap]) -> Result<(), Failure> {
    let bytes = encode_planar_code(maps).map_err(usage)?;
    fs::write(path, bytes).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn set_pool(workers: usize) {
    if workers > 0 {
        // fails only if the pool is already built
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
}

fn emit(lines: &[serde_json::Value]) {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for l in lines {
        let _ = writeln!(out, "{l}");
    }
}

/// Stored codes in output order: by hexagon count, then by code.
fn ordered_codes(set: &GeneratedSet, all_classes: bool) -> Vec<&fforge::CanonicalCode> {
    let mut by_p6: Vec<(usize, &fforge::CanonicalCode)> = set
        .codes()
        .filter(|((c, _), _)| all_classes || c.is_fullerene())
        .map(|((_, p6), code)| (*p6, code))
        .collect();
    by_p6.sort();
    by_p6.into_iter().map(|(_, code)| code).collect()
}

fn to_maps(codes: &[&fforge::CanonicalCode]) -> Vec<PlanarMap> {
    codes
        .iter()
        .map(|code| code.to_map().expect("stored codes decode"))
        .collect()
}

fn counts(set: &GeneratedSet) -> Vec<serde_json::Value> {
    set.buckets
        .iter()
        .map(|((class, p6), codes)| json!({"class": class, "p6": p6, "count": codes.len()}))
        .collect()
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Gen {
            regime,
            max_hexagons,
            out,
            traces,
            all_classes,
            common,
        } => {
            let job = EnumerationJob {
                regime,
                max_p6: max_hexagons,
                collect_traces: traces.is_some(),
                workers: common.workers,
                include_reflection: !common.no_reflection,
                max_maps: None,
            };
            let set = enumerate(&job).map_err(|e| Failure(1, e.to_string()))?;
            let codes = ordered_codes(&set, all_classes);
            write_maps(&out, &to_maps(&codes))?;
            if let Some(path) = traces {
                let mut text = String::new();
                for (i, code) in codes.iter().enumerate() {
                    text.push_str(&set.traces[*code].to_jsonl(i));
                }
                write_file(&path, &text)?;
            }
            emit(&counts(&set));
            Ok(())
        }
        Command::Oracle {
            max_hexagons,
            out,
            common,
        } => {
            set_pool(common.workers);
            let set = oracle_generate(max_hexagons, !common.no_reflection).map_err(usage)?;
            write_maps(&out, &to_maps(&ordered_codes(&set, false)))?;
            emit(&counts(&set));
            Ok(())
        }
        Command::Diff { a, b, common } => {
            let refl = !common.no_reflection;
            let load = |path: &Path| -> Result<GeneratedSet, Failure> {
                let mut set = GeneratedSet {
                    complete: true,
                    ..Default::default()
                };
                for m in read_maps(path)? {
                    let class = classify(&m).unwrap_or(FamilyClass::Other);
                    set.insert(class, m.p_vector().get(6), canonical_code(&m, refl));
                }
                Ok(set)
            };
            let report = cross_check(&load(&a)?, &load(&b)?);
            let mut lines = Vec::new();
            for (side, list) in [("a", &report.only_in_a), ("b", &report.only_in_b)] {
                for (class, p6, code) in list {
                    lines.push(json!({"only_in": side, "class": class, "p6": p6, "code": code}));
                }
            }
            lines.push(json!({"differences": report.len()}));
            emit(&lines);
            if report.is_empty() {
                Ok(())
            } else {
                Err(Failure(1, format!("{} differences", report.len())))
            }
        }
        Command::Reduce {
            input,
            regime,
            traces,
            common,
        } => {
            set_pool(common.workers);
            let refl = !common.no_reflection;
            let mut text = String::new();
            let mut lines = Vec::new();
            let mut failed = 0;
            for (i, m) in read_maps(&input)?.iter().enumerate() {
                match reduce_to_dodecahedron(m, regime, refl) {
                    Ok(trace) => {
                        lines.push(json!({
                            "map": i,
                            "steps": trace.len(),
                            "truncations": trace.expanded_kinds().len(),
                            "edge_truncations": trace.edge_truncations(),
                        }));
                        text.push_str(&trace.to_jsonl(i));
                    }
                    Err(e) => {
                        failed += 1;
                        lines.push(json!({"map": i, "error": e.to_string()}));
                    }
                }
            }
            emit(&lines);
            if let Some(path) = traces {
                write_file(&path, &text)?;
            }
            if failed > 0 {
                return Err(Failure(1, format!("{failed} maps failed to reduce")));
            }
            Ok(())
        }
        Command::Validate { input } => {
            let mut invalid = 0;
            let lines: Vec<_> = read_maps(&input)?
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    let polytopal = check_polytopal(m);
                    invalid += usize::from(!polytopal);
                    let census = five_belt_census(m).ok();
                    json!({
                        "map": i,
                        "vertices": m.num_vertices(),
                        "polytopal": polytopal,
                        "p_vector": m.p_vector().0,
                        "class": classify(m).map(|c| c.to_string()).unwrap_or_else(|e| e.to_string()),
                        "belts3": find_belts(m, 3).len(),
                        "belts4": find_belts(m, 4).len(),
                        "belts5": find_belts(m, 5).len(),
                        "pentagon_belts": census.map(|c| c.pentagon_belts),
                        "hexagon_belts": census.map(|c| c.hexagon_belts),
                    })
                })
                .collect();
            emit(&lines);
            if invalid > 0 {
                return Err(Failure(1, format!("{invalid} maps are not polytopal")));
            }
            Ok(())
        }
        Command::Classify { input } => {
            let lines: Vec<_> = read_maps(&input)?
                .iter()
                .enumerate()
                .map(|(i, m)| match classify(m) {
                    Ok(c) => json!({"map": i, "class": c}),
                    Err(e) => json!({"map": i, "error": e.to_string()}),
                })
                .collect();
            emit(&lines);
            Ok(())
        }
        Command::Belts { input, k } => {
            if k < 3 {
                return Err(usage("belts need k >= 3"));
            }
            let lines: Vec<_> = read_maps(&input)?
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    let belts: Vec<_> = find_belts(m, k).into_iter().map(|b| b.faces).collect();
                    json!({"map": i, "k": k, "count": belts.len(), "belts": belts})
                })
                .collect();
            emit(&lines);
            Ok(())
        }
        Command::Nanotube {
            input,
            family,
            k,
            out,
        } => match (input, family, k, out) {
            (None, Some(family), Some(k), Some(out)) => {
                let family = NanotubeFamily::from(family);
                let m = build_nanotube(family, k);
                write_maps(&out, std::slice::from_ref(&m))?;
                emit(&[
                    json!({"family": family.to_string(), "k": k, "vertices": m.num_vertices()}),
                ]);
                Ok(())
            }
            (Some(input), None, None, None) => {
                let lines: Vec<_> = read_maps(&input)?
                    .iter()
                    .enumerate()
                    .map(|(i, m)| match recognize_nanotube(m) {
                        Ok(Some((family, k))) => {
                            json!({"map": i, "family": family.to_string(), "k": k})
                        }
                        Ok(None) => json!({"map": i, "family": null}),
                        Err(e) => json!({"map": i, "error": e.to_string()}),
                    })
                    .collect();
                emit(&lines);
                Ok(())
            }
            _ => Err(usage(
                "nanotube takes either FILE or --family, --k and --out",
            )),
        },
    }
}
