use std::io::Write;

use clap::{Args, ValueEnum};

use super::cache::Cache;
use super::{io_err, require_positive, AlgebraKind, CliError, CliResult, EXIT_OK};
use crate::bqa::auslander::auslander_bound_quiver;
use crate::bqa::construct::{replicate, trivial_ext_r};
use crate::bqa::present::presentation;
use crate::bqa::quiver::{BoundQuiver, QuiverJson};
use crate::homotopy::TypeA;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum QuiverFormat {
    Json,
    Dot,
    Tex,
}

#[derive(Args, Debug)]
pub struct QuiverArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    #[arg(long, value_enum, ignore_case = true)]
    pub algebra: AlgebraKind,
    #[arg(long, value_enum, default_value = "json")]
    pub format: QuiverFormat,
    /// Number of copies for `Tr = T_r(B_0)`.
    #[arg(long)]
    pub r: Option<usize>,
}

fn key(kind: AlgebraKind) -> &'static str {
    match kind {
        AlgebraKind::A => "quiver-A",
        AlgebraKind::B => "quiver-B",
        AlgebraKind::B0 => "quiver-B0",
        AlgebraKind::Lambda => "quiver-Lambda",
        AlgebraKind::Pi => "quiver-Pi",
        AlgebraKind::Tr => "quiver-Tr",
    }
}

fn cache_key(kind: AlgebraKind, r: Option<usize>) -> String {
    match (kind, r) {
        (AlgebraKind::Tr, Some(r)) => format!("{}{r}", key(kind)),
        _ => key(kind).to_string(),
    }
}

pub fn display_name(kind: AlgebraKind, n: usize, d: usize) -> String {
    match kind {
        AlgebraKind::A => format!("A_{}^{d}", n + 1),
        AlgebraKind::B => format!("B({d},{n})"),
        AlgebraKind::B0 => format!("B0({d},{n})"),
        AlgebraKind::Lambda => format!("Lambda({d},{n})"),
        AlgebraKind::Pi => format!("Pi({d},{n})"),
        AlgebraKind::Tr => format!("T_r(B0({d},{n}))"),
    }
}

/// `A` is `A_{n+1}^d`; the others are built from `B_0 = End(P)`:
/// `B = B_0^(n+d)`, `Lambda = B_0^(n+d+1)`, `Pi = T_{n+d}(B_0)` and
/// `Tr = T_r(B_0)`.
pub fn bound_quiver(kind: AlgebraKind, n: usize, d: usize, r: usize) -> Result<BoundQuiver, CliError> {
    let fail = |e: &dyn std::fmt::Display| CliError::fail(e.to_string());
    if kind == AlgebraKind::A {
        return auslander_bound_quiver(n + 1, d).map_err(|e| fail(&e));
    }
    let ta = TypeA::new(d, n).map_err(|e| fail(&e))?;
    let b0 = ta.b0().map_err(|e| fail(&e))?;
    let alg = match kind {
        AlgebraKind::A => unreachable!(),
        AlgebraKind::B0 => Ok(b0),
        AlgebraKind::B => replicate(&b0, n + d),
        AlgebraKind::Lambda => replicate(&b0, n + d + 1),
        AlgebraKind::Pi => trivial_ext_r(&b0, n + d),
        AlgebraKind::Tr => trivial_ext_r(&b0, r),
    }
    .map_err(|e| fail(&e))?;
    presentation(&alg).map_err(|e| fail(&e))
}

pub fn run(a: &QuiverArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    require_positive(a.d, a.n)?;
    let r = match (a.algebra, a.r) {
        (AlgebraKind::Tr, None) => return Err(CliError::usage("--algebra Tr needs --r")),
        (AlgebraKind::Tr, Some(0)) => return Err(CliError::usage("--r must be positive")),
        (AlgebraKind::Tr, Some(r)) => r,
        (_, Some(_)) => return Err(CliError::usage("--r only applies to --algebra Tr")),
        (_, None) => 0,
    };
    let cache = Cache::from_env();
    let item = cache_key(a.algebra, a.r);
    let cached = cache.load::<QuiverJson>(&item, a.n, a.d).and_then(|j| BoundQuiver::from_json(&j).ok());
    let bq = match cached {
        Some(bq) => bq,
        None => {
            let bq = bound_quiver(a.algebra, a.n, a.d, r)?;
            if let Err(e) = cache.store(&item, a.n, a.d, &bq.to_json()) {
                let _ = writeln!(err, "warning: cache write failed: {e}");
            }
            bq
        }
    };
    let text = match a.format {
        QuiverFormat::Json => {
            serde_json::to_string_pretty(&bq.to_json()).map_err(|e| CliError::fail(e.to_string()))? + "\n"
        }
        QuiverFormat::Dot => bq.to_dot(&display_name(a.algebra, a.n, a.d)),
        QuiverFormat::Tex => bq.to_tex(),
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(EXIT_OK)
}
