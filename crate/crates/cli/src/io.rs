//! Loading surfaces, points and laminations from arguments.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::Path;

use serde_json::Value;
use sl3_lamination::{ComponentSum, PinnedLamination, PinnedLaminationDoc};
use sl3_rational::parse_q;
use sl3_seed::IndexSet;
use sl3_surface::{build, disjoint_union, Triangulation, TriangulationDoc};
use sl3_tropical::{Kind, TropicalPoint, TropicalPointDoc};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad arguments or unreadable input; exit status 2.
    Usage(String),
    /// An error raised by one of the library crates; exit status 1.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "usage error: {s}"),
            CliError::Domain(s) => write!(f, "{s}"),
        }
    }
}

pub fn domain<E: Display>(e: E) -> CliError {
    CliError::Domain(e.to_string())
}

/// A built-in surface name (`polygon:4`, `torus`, ...), two of them joined by `+`
/// (the second gets a `'` suffix), or a path to a triangulation document.
pub fn load_surface(arg: &str) -> Result<Triangulation, CliError> {
    if let Some((a, b)) = arg.split_once('+') {
        return disjoint_union(&load_surface(a)?, &load_surface(b)?, "'").map_err(domain);
    }
    if let Ok(spec) = arg.parse() {
        return build(&spec).map_err(domain);
    }
    let v = read_json(arg)?;
    let doc: TriangulationDoc = serde_json::from_value(v).map_err(|e| CliError::Usage(format!("{arg}: {e}")))?;
    Triangulation::from_doc(&doc).map_err(domain)
}

/// Inline JSON or a path to a JSON file.
pub fn read_json(arg: &str) -> Result<Value, CliError> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else if Path::new(arg).exists() {
        std::fs::read_to_string(arg).map_err(|e| CliError::Usage(format!("{arg}: {e}")))?
    } else {
        return Err(CliError::Usage(format!("{arg}: no such file and not inline JSON")));
    };
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{arg}: {e}")))
}

/// A component-sum list or a pinned-lamination document.
pub fn load_lamination(arg: &str, t: &Triangulation) -> Result<PinnedLamination, CliError> {
    let v = read_json(arg)?;
    if v.is_array() {
        let sum: ComponentSum = serde_json::from_value(v).map_err(|e| CliError::Usage(format!("{arg}: {e}")))?;
        return sum.to_picture(t).map_err(domain);
    }
    let doc: PinnedLaminationDoc = serde_json::from_value(v).map_err(|e| CliError::Usage(format!("{arg}: {e}")))?;
    PinnedLamination::from_doc(&doc, t).map_err(domain)
}

/// Names accepted in place of index ids when the surface has a single
/// interior edge `E`: `T_L`, `T_R`, `E1`, `E2`.
fn aliases(t: &Triangulation, ix: &IndexSet) -> BTreeMap<&'static str, String> {
    let interior: Vec<usize> = (0..t.num_edges()).filter(|&e| t.is_interior(e)).collect();
    let mut out = BTreeMap::new();
    if let [e] = interior[..] {
        let q = t.quad(e).expect("interior edge");
        out.insert("T_L", ix.ids[ix.face_pos(q.tl)].clone());
        out.insert("T_R", ix.ids[ix.face_pos(q.tr)].clone());
        out.insert("E1", ix.ids[ix.edge_pos(e, 1)].clone());
        out.insert("E2", ix.ids[ix.edge_pos(e, 2)].clone());
    }
    out
}

/// A tropical point document, or a flat `{id: "p/q"}` map of kind `kind`
/// (missing ids read as zero).
pub fn load_point(arg: &str, t: &Triangulation, kind: Kind) -> Result<TropicalPoint, CliError> {
    let v = read_json(arg)?;
    let ix = IndexSet::new(t);
    if v.get("coords").is_some() {
        let doc: TropicalPointDoc = serde_json::from_value(v).map_err(|e| CliError::Usage(format!("{arg}: {e}")))?;
        return TropicalPoint::from_doc(&doc, &ix).map_err(domain);
    }
    let Value::Object(map) = v else {
        return Err(CliError::Usage(format!("{arg}: expected a JSON object of coordinates")));
    };
    let names = aliases(t, &ix);
    let mut p = TropicalPoint::zero(kind, &ix);
    for (k, val) in map {
        let id = if p.position(&k).is_some() {
            k.clone()
        } else {
            names
                .get(k.as_str())
                .cloned()
                .ok_or_else(|| CliError::Domain(format!("SeedMismatch: unknown index {k}")))?
        };
        let s = match &val {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            _ => return Err(CliError::Usage(format!("{k}: coordinates are \"p/q\" strings"))),
        };
        let x = parse_q(&s).map_err(|e| CliError::Usage(format!("{k}: {e}")))?;
        p.set(&id, x);
    }
    Ok(p)
}

pub fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
