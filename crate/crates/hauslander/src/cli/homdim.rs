use std::io::Write;

use clap::Args;

use super::{io_err, require_positive, CliError, CliResult, EXIT_FAIL, EXIT_OK};
use crate::cluster_model::{hom_dim, UObject};
use crate::homotopy::{hom_complex_dim, HomotopyError, TypeA};
use crate::pathcomb::LatticePath;

#[derive(Args, Debug)]
pub struct HomdimArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    /// Source object `c1,...,c_{d+1}@shift`, the shift in units of `d`.
    #[arg(long, allow_hyphen_values = true)]
    pub from: String,
    #[arg(long, allow_hyphen_values = true)]
    pub to: String,
    /// Also compute the dimension over `A_{n+1}^d` and compare.
    #[arg(long)]
    pub linear_algebra: bool,
}

/// Parses `1,2,4,6@0` into an object of the `(d, n)` model.
pub fn parse_object(s: &str, d: usize, n: usize) -> Result<UObject, CliError> {
    let bad = |why: &str| CliError::usage(format!("malformed object {s:?}: {why}"));
    let (cs, shift) = match s.split_once('@') {
        Some((c, sh)) => (c, sh.trim().parse::<i64>().map_err(|_| bad("shift is not an integer"))?),
        None => (s, 0),
    };
    let coords = cs
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| bad("coordinates must be positive integers")))
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != d + 1 {
        return Err(bad(&format!("expected {} coordinates", d + 1)));
    }
    let path = LatticePath::from_coord_vec(d + 1, n, &coords).map_err(|e| bad(&e.to_string()))?;
    Ok(UObject::new(path, shift))
}

pub fn run(a: &HomdimArgs, out: &mut dyn Write) -> CliResult {
    require_positive(a.d, a.n)?;
    if num::integer::gcd(a.d, a.n) != 1 {
        return Err(CliError::usage(format!("gcd({}, {}) != 1", a.d, a.n)));
    }
    let (u, v) = (parse_object(&a.from, a.d, a.n)?, parse_object(&a.to, a.d, a.n)?);
    let comb = hom_dim(&u, &v).map_err(|e| CliError::fail(e.to_string()))?;
    if !a.linear_algebra {
        writeln!(out, "{comb}").map_err(io_err)?;
        return Ok(EXIT_OK);
    }
    let lin = linear(&u, &v, a.d, a.n).map_err(|e| match e {
        HomotopyError::Budget(m) => CliError { code: super::EXIT_BUDGET, msg: m },
        e => CliError::fail(e.to_string()),
    })?;
    writeln!(out, "combinatorial {comb}\nlinear-algebra {lin}").map_err(io_err)?;
    if comb != lin {
        writeln!(out, "routes disagree").map_err(io_err)?;
        return Ok(EXIT_FAIL);
    }
    Ok(EXIT_OK)
}

fn linear(u: &UObject, v: &UObject, d: usize, n: usize) -> Result<usize, HomotopyError> {
    let ta = TypeA::new(d, n)?;
    let (x, y) = (ta.complex_of(u)?, ta.complex_of(v)?);
    Ok(hom_complex_dim(&ta.alg, &x, &y, 0))
}
