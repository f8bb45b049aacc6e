//! The `sl3lam` command line: surfaces, seeds, coordinates, flips, the
//! Dynkin involution, the ensemble map, reconstruction, gluing and the
//! verification suites. All documents are JSON with rationals as `"p/q"`
//! strings.

pub mod diagram;
pub mod io;
pub mod verify;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sl3_glue::{glue_laminations, shift_action, ShiftElement};
use sl3_lamination::{a_coords, shear_frozen, shear_unfrozen};
use sl3_rational::parse_q;
use sl3_reconstruct::{reconstruct, reconstruct_pinned};
use sl3_seed::{exchange_matrix, extended_matrix};
use sl3_surface::{flip_edge, Triangulation};
use sl3_tropical::{apply_flip, dynkin_cluster, ensemble, flip_x_closed_form, Kind};

pub use io::CliError;
use io::{domain, load_lamination, load_point, load_surface, to_json};

#[derive(Debug, Parser)]
#[command(name = "sl3lam", version, about = "Tropical sl3-laminations with exact rationals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoordKind {
    X,
    A,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a triangulation document, optionally after flips.
    Surface {
        /// Built-in surface name (`polygon:4`, `torus`, `A+B`) or a JSON file.
        #[arg(long)]
        surface: String,
        /// Edges to flip, in order.
        #[arg(long = "flip")]
        flips: Vec<String>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Print the exchange matrix `ε`, or `ε + m` with `--extended`.
    Seed {
        #[arg(long)]
        surface: String,
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        out: Option<String>,
    },
    /// Shear (or A-) coordinates of a lamination.
    Shear {
        #[arg(long)]
        surface: String,
        /// Component-sum list or pinned-lamination document.
        #[arg(long)]
        lamination: String,
        #[arg(long, value_enum, default_value = "x")]
        kind: CoordKind,
        /// Leave out the frozen coordinates.
        #[arg(long)]
        unfrozen: bool,
        #[arg(long)]
        out: Option<String>,
    },
    /// Flip an edge, transporting a point if one is given.
    Flip {
        #[arg(long)]
        surface: String,
        #[arg(long)]
        edge: String,
        #[arg(long)]
        coords: Option<String>,
        #[arg(long, value_enum, default_value = "x")]
        kind: CoordKind,
        /// Use the closed-form quadrilateral map instead of mutations.
        #[arg(long)]
        closed_form: bool,
        #[arg(long)]
        out: Option<String>,
    },
    /// Orientation reversal of a point or a lamination.
    Dynkin {
        #[arg(long)]
        surface: String,
        #[arg(long, conflicts_with = "lamination", required_unless_present = "lamination")]
        coords: Option<String>,
        #[arg(long)]
        lamination: Option<String>,
        #[arg(long)]
        out: Option<String>,
    },
    /// The ensemble map from an A-point to an X-point.
    Ensemble {
        #[arg(long)]
        surface: String,
        #[arg(long)]
        coords: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Build a lamination from X-coordinates.
    Reconstruct {
        #[arg(long)]
        surface: String,
        #[arg(long)]
        coords: String,
        /// Truncation depth of the stacks.
        #[arg(long)]
        depth: Option<i64>,
        /// Include pinnings from the frozen coordinates.
        #[arg(long)]
        pinned: bool,
        /// Also write a text diagram to this file.
        #[arg(long)]
        diagram: Option<String>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Glue two boundary intervals of a pinned lamination's surface.
    Glue {
        #[arg(long)]
        surface: String,
        #[arg(long)]
        lamination: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Shift `a,b` applied before gluing.
        #[arg(long)]
        shift: Option<String>,
        #[arg(long)]
        depth: Option<i64>,
        #[arg(long)]
        diagram: Option<String>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Run the property suites.
    Verify {
        /// `all` or one of the suite names.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write a JSON report.
        #[arg(long)]
        out: Option<String>,
    },
}

fn kind(k: CoordKind) -> Kind {
    match k {
        CoordKind::X => Kind::X,
        CoordKind::A => Kind::A,
    }
}

fn write_file(path: &str, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Usage(format!("{path}: {e}")))
}

fn emit(out: &mut dyn Write, path: &Option<String>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write_file(p, text),
        None => out.write_all(text.as_bytes()).map_err(|e| CliError::Usage(e.to_string())),
    }
}

fn diagram_to(path: &Option<String>, t: &Triangulation, p: &sl3_lamination::GlobalPicture) -> Result<(), CliError> {
    if let Some(path) = path {
        write_file(path, &diagram::emit_diagram(t, p).map_err(domain)?)?;
    }
    Ok(())
}

fn parse_shift(s: &str) -> Result<ShiftElement, CliError> {
    let (a, b) = s.split_once(',').ok_or_else(|| CliError::Usage(format!("--shift expects a,b, got {s:?}")))?;
    let p = |x: &str| parse_q(x.trim()).map_err(|e| CliError::Usage(e.to_string()));
    Ok(ShiftElement::new(p(a)?, p(b)?))
}

/// Execute one parsed command, writing the result document to `out` or to
/// the `--out` file. Returns whether everything passed (for `verify`).
pub fn execute(cmd: &Command, out: &mut dyn Write) -> Result<bool, CliError> {
    match cmd {
        Command::Surface { surface, flips, out: path } => {
            let mut t = load_surface(surface)?;
            for e in flips {
                t = flip_edge(&t, e).map_err(domain)?.0;
            }
            emit(out, path, &to_json(&t.to_doc()))?;
        }
        Command::Seed { surface, extended, out: path } => {
            let t = load_surface(surface)?;
            let m = if *extended { extended_matrix(&t) } else { exchange_matrix(&t).1 };
            emit(out, path, &to_json(&m.to_doc()))?;
        }
        Command::Shear {
            surface,
            lamination,
            kind: k,
            unfrozen,
            out: path,
        } => {
            let t = load_surface(surface)?;
            let l = load_lamination(lamination, &t)?;
            let x = match (k, unfrozen) {
                (CoordKind::X, false) => shear_frozen(&t, &l),
                (CoordKind::X, true) => shear_unfrozen(&t, &l.picture),
                (CoordKind::A, false) => a_coords(&t, &l.picture),
                (CoordKind::A, true) => a_coords(&t, &l.picture).map(|a| a.restrict()),
            }
            .map_err(domain)?;
            emit(out, path, &to_json(&x))?;
        }
        Command::Flip {
            surface,
            edge,
            coords,
            kind: k,
            closed_form,
            out: path,
        } => {
            let t = load_surface(surface)?;
            let (t2, corr) = flip_edge(&t, edge).map_err(domain)?;
            let mut doc = json!({ "surface": t2.to_doc(), "edges": corr.map });
            if let Some(c) = coords {
                let p = load_point(c, &t, kind(*k))?;
                let y = if *closed_form {
                    flip_x_closed_form(&p, &t, edge).map_err(domain)?
                } else {
                    apply_flip(&p, &t, edge).map_err(domain)?.0
                };
                doc["coords"] = serde_json::to_value(&y).expect("serializable");
            }
            emit(out, path, &to_json(&doc))?;
        }
        Command::Dynkin {
            surface,
            coords,
            lamination,
            out: path,
        } => {
            let t = load_surface(surface)?;
            let text = match (coords, lamination) {
                (Some(c), _) => to_json(&dynkin_cluster(&load_point(c, &t, Kind::X)?, &t).map_err(domain)?),
                (None, Some(l)) => to_json(&load_lamination(l, &t)?.dynkin().to_doc(&t)),
                (None, None) => return Err(CliError::Usage("give --coords or --lamination".into())),
            };
            emit(out, path, &text)?;
        }
        Command::Ensemble { surface, coords, out: path } => {
            let t = load_surface(surface)?;
            let a = load_point(coords, &t, Kind::A)?;
            emit(out, path, &to_json(&ensemble(&a, &t).map_err(domain)?))?;
        }
        Command::Reconstruct {
            surface,
            coords,
            depth,
            pinned,
            diagram,
            out: path,
        } => {
            let t = load_surface(surface)?;
            let x = load_point(coords, &t, Kind::X)?;
            let text = if *pinned {
                let l = reconstruct_pinned(&x, &t, *depth).map_err(domain)?;
                diagram_to(diagram, &t, &l.picture)?;
                to_json(&l.to_doc(&t))
            } else {
                let p = reconstruct(&x, &t, *depth).map_err(domain)?;
                diagram_to(diagram, &t, &p)?;
                to_json(&p.to_doc(&t))
            };
            emit(out, path, &text)?;
        }
        Command::Glue {
            surface,
            lamination,
            left,
            right,
            shift,
            depth,
            diagram,
            out: path,
        } => {
            let t = load_surface(surface)?;
            let mut l = load_lamination(lamination, &t)?;
            if let Some(s) = shift {
                l = shift_action(&l, &t, left, right, &parse_shift(s)?).map_err(domain)?;
            }
            let (g, _, lg) = glue_laminations(&l, &t, left, right, *depth).map_err(domain)?;
            diagram_to(diagram, &g, &lg.picture)?;
            let x = shear_frozen(&g, &lg).map_err(domain)?;
            let doc = json!({
                "surface": g.to_doc(),
                "lamination": lg.to_doc(&g),
                "coords": x,
            });
            emit(out, path, &to_json(&doc))?;
        }
        Command::Verify {
            suite,
            trials,
            seed,
            out: path,
        } => {
            let reports = if suite == "all" {
                verify::run_all(*trials, *seed)
            } else {
                vec![verify::run_suite(suite, *trials, *seed)
                    .ok_or_else(|| CliError::Usage(format!("unknown suite {suite:?}")))?]
            };
            let mut text = String::new();
            for r in &reports {
                text.push_str(&r.to_string());
                text.push('\n');
            }
            out.write_all(text.as_bytes()).map_err(|e| CliError::Usage(e.to_string()))?;
            if let Some(p) = path {
                let v: Value = serde_json::to_value(&reports).expect("serializable");
                write_file(p, &to_json(&v))?;
            }
            return Ok(reports.iter().all(|r| r.passed));
        }
    }
    Ok(true)
}

/// Parse `args` (program name first) and run. Exit status: 0 on success,
/// 1 on domain errors or failing suites, 2 on usage errors.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}
