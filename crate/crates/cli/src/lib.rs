//! Command-line front end for `subiso-core`: tuple and graph file formats,
//! tolerance profiles, and the `compare`, `invariant`, `gen`, `nstar` and
//! `stabilizer` commands.
//!
//! Exit status is 0 for "isomorphic" (or success), 1 for "not isomorphic"
//! (or a failed threshold check), and 2 for every error.

pub mod error;
pub mod format;
pub mod profile;
pub mod render;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use subiso_core::algebra::{projection_invariant, quiver_invariant_of_tuple, subspaces_unitary_isomorphic, Method};
use subiso_core::glauto::{
    gl_isomorphism, nstar_experiment_over, stabilizer_dimension, theoretical_nstar, GLOutcome, SPECTRAL_GAP_MIN,
};
use subiso_core::harness::brute::{brute_force_permutation_isomorphic, Group};
use subiso_core::harness::generators::{adversarial_line_family, apply_gl, apply_isometry, random_tuple};
use subiso_core::harness::reductions::{graph_to_tuple_gl, graph_to_tuple_unitary};
use subiso_core::harness::rng::SeededSource;
use subiso_core::lines::{line_invariant, LineTuple};
use subiso_core::planes::{canonical_plane_gramian, check_nowhere_orthogonal, PlaneGramian};
use subiso_core::{Field, SubspaceTuple, Tolerances};

use crate::error::{CliError, CliResult};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "subiso", version, about = "Isomorphism of tuples of subspaces")]
struct Cli {
    /// TOML file overriding tolerance fields.
    #[arg(long, global = true, value_name = "FILE")]
    tolerance_profile: Option<PathBuf>,
    /// Override one tolerance, e.g. `--tol rank_rel=1e-10`; repeatable.
    #[arg(long = "tol", global = true, value_name = "KEY=VALUE")]
    tol: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether two tuple files describe isomorphic tuples.
    Compare {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value_t = GroupArg::Isometry)]
        group: GroupArg,
        /// Invariant used for isometries.
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// `brute` also searches over reorderings of the second tuple.
        #[arg(long, value_enum, default_value_t = Permutations::None)]
        permutations: Permutations,
    },
    /// Print the isometry invariant of a tuple file.
    Invariant {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Write a generated tuple file to standard output.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Fraction of trivially stabilized random tuples for n = 1..=n_max.
    Nstar {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
        /// Defaults to two past the expected threshold.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = FieldArg::Complex)]
        field: FieldArg,
    },
    /// Print the stabilizer report of a tuple file.
    Stabilizer { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Orthonormalized Gaussian bases.
    Random {
        #[arg(long)]
        d: usize,
        /// Comma-separated ranks; alternative to `--r` with `--n`.
        #[arg(long, conflicts_with_all = ["r", "n"])]
        ranks: Option<String>,
        #[arg(long, requires = "n")]
        r: Option<usize>,
        #[arg(long, requires = "r")]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = FieldArg::Real)]
        field: FieldArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// One rank-`r` subspace per vertex, isomorphic under isometries exactly
    /// for isomorphic graphs.
    GraphUnitary {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Incident-edge coordinate subspaces of a regular graph.
    GraphGl {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Lines through `e_i + e_{i+1}` closed by `e_d + eps e_1`.
    Adversarial {
        #[arg(long)]
        d: usize,
        #[arg(long, allow_negative_numbers = true)]
        eps: i32,
    },
    /// Image of a tuple file under a random isometry.
    Isometry {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also replace each basis by another basis of the same subspace.
        #[arg(long)]
        scramble: bool,
        /// Also reorder the subspaces at random.
        #[arg(long)]
        shuffle: bool,
    },
    /// Image of a tuple file under a random invertible map, with each basis
    /// also multiplied by a random invertible matrix.
    Gl {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        shuffle: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GroupArg {
    Isometry,
    Gl,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Auto,
    Lines,
    Planes,
    Projection,
    Quiver,
}

impl MethodArg {
    fn core(self) -> Method {
        match self {
            MethodArg::Auto => Method::Auto,
            MethodArg::Lines => Method::Lines,
            MethodArg::Planes => Method::Planes,
            MethodArg::Projection => Method::Projection,
            MethodArg::Quiver => Method::Quiver,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Permutations {
    None,
    Brute,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FieldArg {
    Real,
    Complex,
}

impl FieldArg {
    fn core(self) -> Field {
        match self {
            FieldArg::Real => Field::Real,
            FieldArg::Complex => Field::Complex,
        }
    }
}

/// Runs one command line; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_ERROR } else { EXIT_YES };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return status;
        }
    };
    match execute(&cli) {
        Ok((status, text)) => match out.write_all(text.as_bytes()) {
            Ok(()) => status,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_ERROR
            }
        },
        Err((partial, e)) => {
            let _ = out.write_all(partial.as_bytes());
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

/// Output text and status, or partial output and the error that ended it.
type Outcome = Result<(i32, String), (String, CliError)>;

fn execute(cli: &Cli) -> Outcome {
    let bare = |e: CliError| (String::new(), e);
    let profile = match &cli.tolerance_profile {
        Some(p) => Some(read(p).map_err(bare)?),
        None => None,
    };
    let tol = profile::resolve(profile.as_deref(), &cli.tol).map_err(bare)?;
    match &cli.command {
        Command::Compare { a, b, group, method, permutations } => {
            let (ta, tb) = (load_tuple(a).map_err(bare)?, load_tuple(b).map_err(bare)?);
            compare(&ta, &tb, *group, method.core(), *permutations, &tol)
        }
        Command::Invariant { file, method } => {
            let t = load_tuple(file).map_err(bare)?;
            invariant(&t, *method, &tol).map(|s| (EXIT_YES, s)).map_err(bare)
        }
        Command::Gen { kind } => generate(kind).map(|s| (EXIT_YES, s)).map_err(bare),
        Command::Nstar { r, d, n_max, trials, seed, field } => {
            nstar(*r, *d, *n_max, *trials, *seed, field.core(), &tol).map_err(bare)
        }
        Command::Stabilizer { file } => {
            let t = load_tuple(file).map_err(bare)?;
            let rep = stabilizer_dimension(&t, &tol).map_err(|e| bare(e.into()))?;
            let mut s = String::new();
            let _ = writeln!(s, "dimension {}", rep.dimension);
            let _ = writeln!(s, "trivially-stabilized {}", if rep.trivially_stabilized { "yes" } else { "no" });
            let _ = writeln!(s, "largest-discarded-sv {:.3e}", rep.largest_discarded_sv);
            let _ = writeln!(s, "smallest-kept-sv {:.3e}", rep.smallest_kept_sv);
            let _ = writeln!(s, "spectral-gap {:.3e}", rep.spectral_gap);
            if rep.is_ambiguous() {
                let _ = writeln!(s, "warning spectral gap below {SPECTRAL_GAP_MIN:e}; dimension is ambiguous");
            }
            Ok((EXIT_YES, s))
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: Some(path.to_path_buf()), source })
}

fn in_file(path: &Path, e: CliError) -> CliError {
    match e {
        CliError::Parse { line, message } => {
            CliError::Parse { line, message: format!("{}: {message}", path.display()) }
        }
        other => other,
    }
}

pub fn load_tuple(path: &Path) -> CliResult<SubspaceTuple> {
    format::parse_tuple(&read(path)?).map_err(|e| in_file(path, e))
}

pub fn load_graph(path: &Path) -> CliResult<subiso_core::harness::graph::SimpleGraph> {
    format::parse_graph(&read(path)?).map_err(|e| in_file(path, e))
}

fn compare(
    a: &SubspaceTuple,
    b: &SubspaceTuple,
    group: GroupArg,
    method: Method,
    permutations: Permutations,
    tol: &Tolerances,
) -> Outcome {
    let mut s = String::new();
    let verdict = |s: &mut String, yes: bool| {
        let _ = writeln!(s, "decision {}", if yes { "isomorphic" } else { "not-isomorphic" });
        if yes {
            EXIT_YES
        } else {
            EXIT_NO
        }
    };
    match (group, permutations) {
        (_, Permutations::Brute) => {
            let g = match group {
                GroupArg::Isometry => Group::Isometry,
                GroupArg::Gl => Group::Gl,
            };
            let _ = writeln!(s, "group {}", g.name());
            let _ = writeln!(s, "permutations brute");
            let found = match brute_force_permutation_isomorphic(a, b, g, tol) {
                Ok(f) => f,
                Err(e) => return Err((s, e.into())),
            };
            let status = verdict(&mut s, found.is_some());
            if let Some(p) = found {
                let p: Vec<String> = p.iter().map(|i| (i + 1).to_string()).collect();
                let _ = writeln!(s, "permutation {}", p.join(" "));
            }
            Ok((status, s))
        }
        (GroupArg::Isometry, Permutations::None) => {
            let _ = writeln!(s, "group isometry");
            let d = match subspaces_unitary_isomorphic(a, b, method, tol) {
                Ok(d) => d,
                Err(e) => return Err((s, e.into())),
            };
            let _ = writeln!(s, "method {}", d.method.name());
            let status = verdict(&mut s, d.isomorphic);
            if let Some(m) = &d.mismatch {
                let _ = writeln!(s, "mismatch {m}");
            }
            if let Some(w) = &d.warning {
                let _ = writeln!(s, "warning {w}");
            }
            Ok((status, s))
        }
        (GroupArg::Gl, Permutations::None) => {
            let _ = writeln!(s, "group gl");
            let cert = match gl_isomorphism(a, b, tol) {
                Ok(c) => c,
                Err(e) => return Err((s, e.into())),
            };
            let st = &cert.stabilizer;
            let _ = writeln!(s, "stabilizer-dimension {}", st.dimension);
            let _ = writeln!(s, "stabilizer-gap {:.3e}", st.spectral_gap);
            if st.is_ambiguous() {
                let _ = writeln!(s, "warning stabilizer spectral gap below {SPECTRAL_GAP_MIN:e}");
            }
            if let Some(dim) = cert.solution_dimension {
                let _ = writeln!(s, "solution-dimension {dim}");
            }
            match &cert.outcome {
                GLOutcome::PreconditionFailed(why) => Err((s, CliError::Indeterminate(why.clone()))),
                GLOutcome::NotIsomorphic(why) => {
                    let status = verdict(&mut s, false);
                    let _ = writeln!(s, "reason {why}");
                    Ok((status, s))
                }
                GLOutcome::Isomorphic(x) => {
                    let status = verdict(&mut s, true);
                    let worst = cert.residuals.iter().copied().fold(0.0, f64::max);
                    let _ = writeln!(s, "max-principal-angle {worst:.3e}");
                    let _ = writeln!(s, "map");
                    render::matrix(&mut s, x);
                    Ok((status, s))
                }
            }
        }
    }
}

fn invariant(t: &SubspaceTuple, method: MethodArg, tol: &Tolerances) -> CliResult<String> {
    let method = match method {
        MethodArg::Auto => auto_method(t, tol)?,
        m => m,
    };
    Ok(match method {
        MethodArg::Auto => unreachable!("resolved above"),
        MethodArg::Lines => render::line_invariant(&line_invariant(&LineTuple::from_tuple(t)?, tol)),
        MethodArg::Planes => {
            let g = PlaneGramian::from_tuple(t, tol)?;
            render::plane_invariant(&canonical_plane_gramian(&g, tol)?)
        }
        MethodArg::Projection => render::trace_invariant(&projection_invariant(t, tol)?, t.dim() * t.dim()),
        MethodArg::Quiver => {
            let k: usize = t.ranks().iter().sum();
            render::trace_invariant(&quiver_invariant_of_tuple(t, tol)?, k * k)
        }
    })
}

fn auto_method(t: &SubspaceTuple, tol: &Tolerances) -> CliResult<MethodArg> {
    Ok(match t.uniform_rank() {
        Some(1) => MethodArg::Lines,
        Some(2) if t.field() == Field::Real && check_nowhere_orthogonal(&PlaneGramian::from_tuple(t, tol)?, tol) => {
            MethodArg::Planes
        }
        _ => MethodArg::Quiver,
    })
}

fn shuffled(t: &SubspaceTuple, seed: u64) -> SubspaceTuple {
    // Offset so the shuffle is independent of the map drawn from `seed`.
    let perm = SeededSource::new(seed ^ 0x9e37_79b9_7f4a_7c15).permutation(t.len());
    t.permuted(&perm)
}

fn generate(kind: &GenKind) -> CliResult<String> {
    let t = match kind {
        GenKind::Random { d, ranks, r, n, field, seed } => {
            let ranks = match (ranks, r, n) {
                (Some(list), _, _) => list
                    .split(',')
                    .map(|x| x.trim().parse::<usize>().map_err(|_| CliError::usage(format!("bad rank `{x}`"))))
                    .collect::<CliResult<Vec<_>>>()?,
                (None, Some(r), Some(n)) => vec![*r; *n],
                _ => return Err(CliError::usage("give --ranks or both --r and --n")),
            };
            random_tuple(*d, &ranks, field.core(), *seed)?
        }
        GenKind::GraphUnitary { graph, r } => graph_to_tuple_unitary(&load_graph(graph)?, *r)?,
        GenKind::GraphGl { graph } => graph_to_tuple_gl(&load_graph(graph)?)?,
        GenKind::Adversarial { d, eps } => {
            if eps.abs() != 1 {
                return Err(CliError::usage("--eps must be 1 or -1"));
            }
            adversarial_line_family(*d, *eps)?.to_tuple()
        }
        GenKind::Isometry { input, seed, scramble, shuffle } => {
            let (t, _) = apply_isometry(&load_tuple(input)?, *seed, *scramble);
            if *shuffle {
                shuffled(&t, *seed)
            } else {
                t
            }
        }
        GenKind::Gl { input, seed, shuffle } => {
            let (t, _) = apply_gl(&load_tuple(input)?, *seed);
            if *shuffle {
                shuffled(&t, *seed)
            } else {
                t
            }
        }
    };
    Ok(format::write_tuple(&t))
}

fn nstar(
    r: usize,
    d: usize,
    n_max: Option<usize>,
    trials: usize,
    seed: u64,
    field: Field,
    tol: &Tolerances,
) -> CliResult<(i32, String)> {
    let expected = theoretical_nstar(r, d);
    let n_max = n_max.unwrap_or_else(|| expected.unwrap_or(d.div_ceil(r.max(1)) + 2) + 2);
    let table = nstar_experiment_over(field, r, d, n_max, trials, seed, tol)?;
    let mut s = table.to_string();
    let mut status = EXIT_YES;
    match expected {
        Some(n) if field == Field::Complex => {
            let got = table.empirical_threshold();
            let gap_ok = table.min_gap() >= SPECTRAL_GAP_MIN;
            let pass = got == Some(n) && gap_ok;
            let got = got.map_or("none".to_string(), |g| g.to_string());
            let _ = writeln!(
                s,
                "{} n*={n} empirical={got} min-gap {:.3e}{}",
                if pass { "PASS" } else { "FAIL" },
                table.min_gap(),
                if gap_ok { "" } else { " below 1e3" }
            );
            if !pass {
                status = EXIT_NO;
            }
        }
        _ => {
            let _ = writeln!(s, "no expected threshold for these parameters");
        }
    }
    Ok((status, s))
}
