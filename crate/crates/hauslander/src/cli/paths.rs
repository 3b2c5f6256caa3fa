use std::io::Write;

use clap::{Args, ValueEnum};
use serde::Serialize;

use super::{io_err, require_positive, CliError, CliResult, EXIT_OK};
use crate::pathcomb::{enumerate_dyck, enumerate_paths, is_dyck, rotate, LatticePath};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PathsFormat {
    Csv,
    Json,
    Dot,
}

#[derive(Args, Debug)]
pub struct PathsArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
    /// Only Dyck paths (needs gcd(d, n) = 1).
    #[arg(long, conflicts_with = "orbits")]
    pub dyck: bool,
    /// Group by rotation orbit, Dyck representative first (needs gcd(d, n) = 1).
    #[arg(long)]
    pub orbits: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: PathsFormat,
}

/// Path record of the JSON schema.
#[derive(Serialize)]
pub struct PathJson {
    pub d: usize,
    pub n: usize,
    pub steps: String,
}

impl From<&LatticePath> for PathJson {
    fn from(l: &LatticePath) -> Self {
        PathJson { d: l.d(), n: l.n(), steps: l.step_string() }
    }
}

#[derive(Serialize)]
struct PathsJson {
    schema: u32,
    d: usize,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    paths: Option<Vec<PathJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbits: Option<Vec<Vec<PathJson>>>,
}

fn orbits(d: usize, n: usize) -> Result<Vec<Vec<LatticePath>>, CliError> {
    let dyck = enumerate_dyck(d, n).map_err(|e| CliError::usage(e.to_string()))?;
    Ok(dyck
        .into_iter()
        .map(|rep| {
            let mut orbit = vec![rep.clone()];
            let mut cur = rotate(&rep);
            while cur != rep {
                orbit.push(cur.clone());
                cur = rotate(&cur);
            }
            orbit
        })
        .collect())
}

pub fn run(a: &PathsArgs, out: &mut dyn Write) -> CliResult {
    require_positive(a.d, a.n)?;
    let groups: Vec<Vec<LatticePath>> = if a.orbits {
        orbits(a.d, a.n)?
    } else if a.dyck {
        vec![enumerate_dyck(a.d, a.n).map_err(|e| CliError::usage(e.to_string()))?]
    } else {
        vec![enumerate_paths(a.d, a.n)]
    };
    match a.format {
        PathsFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let header: &[&str] =
                if a.orbits { &["orbit", "steps", "coords", "dyck"] } else { &["steps", "coords", "dyck"] };
            w.write_record(header).map_err(|e| CliError::fail(e.to_string()))?;
            for (i, g) in groups.iter().enumerate() {
                for l in g {
                    let mut rec = Vec::new();
                    if a.orbits {
                        rec.push(i.to_string());
                    }
                    rec.extend([l.step_string(), l.coords_label(), is_dyck(l).to_string()]);
                    w.write_record(&rec).map_err(|e| CliError::fail(e.to_string()))?;
                }
            }
            let bytes = w.into_inner().map_err(|e| CliError::fail(e.to_string()))?;
            out.write_all(&bytes).map_err(io_err)?;
        }
        PathsFormat::Json => {
            let conv = |g: &Vec<LatticePath>| g.iter().map(PathJson::from).collect::<Vec<_>>();
            let j = PathsJson {
                schema: 1,
                d: a.d,
                n: a.n,
                paths: (!a.orbits).then(|| conv(&groups[0])),
                orbits: a.orbits.then(|| groups.iter().map(conv).collect()),
            };
            let text = serde_json::to_string_pretty(&j).map_err(|e| CliError::fail(e.to_string()))?;
            writeln!(out, "{text}").map_err(io_err)?;
        }
        PathsFormat::Dot => {
            // nodes are paths; edges are single rotations inside the listed set
            let all: Vec<&LatticePath> = groups.iter().flatten().collect();
            let mut s = format!("digraph \"L_{{{},{}}}\" {{\n", a.d, a.n);
            for l in &all {
                let shape = if is_dyck(l) { "box" } else { "ellipse" };
                s.push_str(&format!("  {} [label=\"{}\", shape={shape}];\n", l.step_string(), l.coords_label()));
            }
            if !a.dyck {
                for l in &all {
                    let r = rotate(l);
                    if r != **l {
                        s.push_str(&format!("  {} -> {};\n", l.step_string(), r.step_string()));
                    }
                }
            }
            s.push_str("}\n");
            out.write_all(s.as_bytes()).map_err(io_err)?;
        }
    }
    Ok(EXIT_OK)
}
