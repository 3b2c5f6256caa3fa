use std::collections::BTreeSet;
use std::io::Write;
use std::rc::Rc;
use std::time::Instant;

use clap::Args;
use num::integer::{binomial, gcd};
use serde::Serialize;
use serde_json::{json, Value};

use super::cache::Cache;
use super::{io_err, require_positive, CliError, CliResult, EXIT_BUDGET, EXIT_FAIL, EXIT_OK, VERSION};
use crate::bqa::construct::{corner_dim, idempotent_subalgebra, quotient_by_complement, replicate};
use crate::bqa::iso::iso_test;
use crate::bqa::FdAlgebra;
use crate::cluster_model::{
    build_t, generation_certificate, hom_dim_shifted, nakayama_pow, rigidity_check_t, ModelError, UObject,
};
use crate::homotopy::checks::ISO_TRIES;
use crate::homotopy::{
    complexes_isomorphic, domdim, end_algebra_of_complexes, fcy_object_check, gldim, hom_complex_dim,
    preprojective_graded_check, two_subhomogeneous_check, ComplexJson, HomotopyError, ProjComplex, TypeA,
};
use crate::pathcomb::{coords, enumerate_dyck, enumerate_paths, is_dyck, preceq, relation_r, rotate_pow};

/// Claim names in report order, with what each one checks.
pub const CLAIMS: &[(&str, &str)] = &[
    ("dyck_count", "|Dyck(d,n)| = C(n+d, d) / (n+d)"),
    ("orbits", "each rotation orbit in L_{d,n} holds exactly one Dyck path"),
    ("relation_r", "the relation R on L_{d+1,n} agrees with preceq on coordinates"),
    ("rigidity", "Hom(T, T[k]) = 0 for k != 0 in the cluster model"),
    ("generation", "the generation certificate for T completes and is acyclic"),
    ("projectives", "the summands of P are the projectives at the Dyck vertices of A_{n+1}^d"),
    ("t_routes", "the cluster-model summands of T are the complexes nu^i P, i = 1..n+d"),
    ("hom_agreement", "dim Hom(T_i, T_j[k]) from complexes equals the cluster model for |k| <= 2d"),
    ("end_t", "End(T) is isomorphic to B_0^(n+d)"),
    ("gldim_A", "gldim A_{n+1}^d = d"),
    ("gldim_B", "gldim End(T) = nd"),
    ("gldim_B0", "gldim B_0 = d - ceil(d/n)"),
    ("lambda", "gldim B_0^(n+d+1) <= nd+1 <= domdim B_0^(n+d+1)"),
    ("two_subhomogeneous", "two_subhomogeneous_check(End(T), nd) passes"),
    ("preprojective", "dim Hom(P, nu P) = dim B_0, T_{n+d}(B_0) self-injective, degree 0 part = End(T)"),
    ("idempotent", "B_0 = eA'e = A'/<1-e> for A' = A_{n+1}^{d-s}, s = ceil(d/n), with a zero corner"),
    ("fcy", "nu^{n+d+1} P = P[nd] over A_{n+1}^d and nu^{n+d+1} = [nd] in the cluster model"),
];

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    /// Comma separated claim names, or `all`.
    #[arg(long, default_value = "all")]
    pub claims: String,
    /// Write the JSON report here.
    #[arg(long)]
    pub report: Option<std::path::PathBuf>,
    /// Resolution length bound (default nd + 4).
    #[arg(long)]
    pub budget: Option<usize>,
    /// Record 0 ms for every claim so reports are byte-identical across runs.
    #[arg(long)]
    pub no_timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimResult {
    pub name: String,
    pub status: ClaimStatus,
    pub value: Value,
    pub ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Params {
    pub n: usize,
    pub d: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Config {
    pub claims: Vec<String>,
    pub budget: usize,
    pub timings: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub tool: String,
    pub version: String,
    pub params: Params,
    pub config: Config,
    pub claims: Vec<ClaimResult>,
}

enum Outcome {
    Pass(Value),
    Fail(Value),
    NotApplicable(String),
}

fn check(ok: bool, v: Value) -> Outcome {
    if ok {
        Outcome::Pass(v)
    } else {
        Outcome::Fail(v)
    }
}

fn model_err(e: impl Into<ModelError>) -> HomotopyError {
    HomotopyError::Model(e.into())
}

fn budget_err(what: &str, bound: usize) -> HomotopyError {
    HomotopyError::Budget(format!("{what} not reached within length {bound}"))
}

/// Lazily built shared data, so combinatorial claims never touch the algebra.
struct Ctx {
    d: usize,
    n: usize,
    budget: usize,
    cache: Cache,
    warnings: Vec<String>,
    ta: Option<Rc<TypeA>>,
    t: Option<Rc<Vec<ProjComplex>>>,
    b0: Option<Rc<FdAlgebra>>,
    end_t: Option<Rc<FdAlgebra>>,
}

impl Ctx {
    fn ta(&mut self) -> Result<Rc<TypeA>, HomotopyError> {
        if self.ta.is_none() {
            self.ta = Some(Rc::new(TypeA::new(self.d, self.n)?.with_budget(self.budget)));
        }
        Ok(self.ta.clone().unwrap())
    }

    /// Summands of `T` in `build_t` order, through the cache when enabled.
    fn t(&mut self) -> Result<Rc<Vec<ProjComplex>>, HomotopyError> {
        if let Some(t) = &self.t {
            return Ok(t.clone());
        }
        let ta = self.ta()?;
        let loaded = self.cache.load::<Vec<ComplexJson>>("T", self.n, self.d).and_then(|js| {
            js.iter().map(|j| ProjComplex::from_json(&ta.alg, j).ok()).collect::<Option<Vec<_>>>()
        });
        let t = match loaded {
            Some(t) => t,
            None => {
                let t = ta.complexes(&ta.t_objects()?)?;
                let js: Vec<ComplexJson> = t.iter().map(|x| x.to_json(&ta.alg)).collect();
                if let Err(e) = self.cache.store("T", self.n, self.d, &js) {
                    self.warnings.push(format!("cache write failed: {e}"));
                }
                t
            }
        };
        let t = Rc::new(t);
        self.t = Some(t.clone());
        Ok(t)
    }

    fn b0(&mut self) -> Result<Rc<FdAlgebra>, HomotopyError> {
        if self.b0.is_none() {
            self.b0 = Some(Rc::new(self.ta()?.b0()?));
        }
        Ok(self.b0.clone().unwrap())
    }

    fn end_t(&mut self) -> Result<Rc<FdAlgebra>, HomotopyError> {
        if self.end_t.is_none() {
            let (ta, t) = (self.ta()?, self.t()?);
            let name = format!("End T({},{})", self.d, self.n);
            self.end_t = Some(Rc::new(end_algebra_of_complexes(&ta.alg, &name, &t)?));
        }
        Ok(self.end_t.clone().unwrap())
    }
}

fn run_claim(name: &str, c: &mut Ctx) -> Result<Outcome, HomotopyError> {
    let (d, n) = (c.d, c.n);
    let nd = n * d;
    Ok(match name {
        "dyck_count" => {
            let count = enumerate_dyck(d, n).map_err(model_err)?.len();
            let formula = binomial(n + d, d) / (n + d);
            check(count == formula, json!({ "count": count, "formula": formula }))
        }
        "orbits" => {
            let mut seen = BTreeSet::new();
            let (mut orbits, mut bad) = (0, 0);
            for l in enumerate_paths(d, n) {
                if seen.contains(&l) {
                    continue;
                }
                let orbit: BTreeSet<_> = (0..(n + d) as i64).map(|k| rotate_pow(&l, k)).collect();
                bad += (orbit.iter().filter(|p| is_dyck(p)).count() != 1) as usize;
                orbits += 1;
                seen.extend(orbit);
            }
            check(bad == 0, json!({ "orbits": orbits, "violations": bad }))
        }
        "relation_r" => {
            let paths = enumerate_paths(d + 1, n);
            let mut bad = 0;
            for a in &paths {
                for b in &paths {
                    let r = relation_r(a, b).map_err(model_err)?;
                    bad += (r != preceq(&coords(a), &coords(b)).map_err(model_err)?) as usize;
                }
            }
            check(bad == 0, json!({ "pairs": paths.len() * paths.len(), "violations": bad }))
        }
        "rigidity" => {
            let r = rigidity_check_t(d, n)?;
            let violation = r.violation.as_ref().map(|v| format!("{v:?}"));
            check(r.passes, json!({ "pairs_checked": r.pairs_checked, "violation": violation }))
        }
        "generation" => match generation_certificate(d, n) {
            Ok(cert) => Outcome::Pass(json!({ "entries": cert.entries.len(), "injective_labels": cert.injective_labels })),
            Err(ModelError::Certificate(m)) => Outcome::Fail(json!({ "error": m })),
            Err(e) => return Err(e.into()),
        },
        "projectives" => {
            let ta = c.ta()?;
            let (p, dy) = (ta.p_vertices()?, ta.dyck_vertices()?);
            let labels: Vec<&str> = p.iter().map(|&v| ta.alg.vertex_label(v)).collect();
            check(p == dy, json!({ "vertices": labels }))
        }
        "t_routes" => {
            let (ta, t) = (c.ta()?, c.t()?);
            let via = ta.t_via_nakayama()?;
            let agree = via.len() == t.len()
                && t.iter().zip(&via).filter(|(x, y)| complexes_isomorphic(&ta.alg, x, y, ISO_TRIES)).count() == t.len();
            check(agree, json!({ "summands": t.len(), "agree": agree }))
        }
        "hom_agreement" => {
            let (ta, t) = (c.ta()?, c.t()?);
            let objs = build_t(d, n)?;
            let w = 2 * d as i64;
            let (mut checked, mut bad) = (0, Vec::new());
            for (u, x) in objs.iter().zip(t.iter()) {
                for (v, y) in objs.iter().zip(t.iter()) {
                    for k in -w..=w {
                        checked += 1;
                        let (lin, comb) = (hom_complex_dim(&ta.alg, x, y, k), hom_dim_shifted(u, v, k)?);
                        if lin != comb && bad.len() < 5 {
                            bad.push(format!("{u:?} -> {v:?}[{k}]: {lin} vs {comb}"));
                        }
                    }
                }
            }
            check(bad.is_empty(), json!({ "triples": checked, "mismatches": bad }))
        }
        "end_t" => {
            let (b, b0) = (c.end_t()?, c.b0()?);
            let iso = iso_test(&b, &replicate(&b0, n + d)?)?.is_iso();
            check(iso, json!({ "vertices": b.num_vertices(), "dim": b.dim(), "iso": iso }))
        }
        "gldim_A" => {
            let g = gldim(&c.ta()?.alg, c.budget).ok_or_else(|| budget_err("gldim A", c.budget))?;
            check(g == d, json!(g))
        }
        "gldim_B" => {
            let g = gldim(&*c.end_t()?, c.budget).ok_or_else(|| budget_err("gldim B", c.budget))?;
            check(g == nd, json!(g))
        }
        "gldim_B0" => {
            let g = gldim(&*c.b0()?, c.budget).ok_or_else(|| budget_err("gldim B_0", c.budget))?;
            check(g == d - d.div_ceil(n), json!(g))
        }
        "lambda" => {
            let lam = replicate(&*c.b0()?, n + d + 1)?;
            let g = gldim(&lam, c.budget).ok_or_else(|| budget_err("gldim Lambda", c.budget))?;
            let dd = domdim(&lam, c.budget);
            check(g <= nd + 1 && dd.at_least(nd + 1), json!({ "gldim": g, "domdim": dd }))
        }
        "two_subhomogeneous" => {
            let r = two_subhomogeneous_check(&*c.end_t()?, nd)?;
            let failing = r.injectives.iter().filter(|i| i.image.is_none()).count();
            check(r.passes, json!({ "gldim": r.gldim, "rigid": r.rigid, "failing_injectives": failing }))
        }
        "preprojective" => {
            let r = preprojective_graded_check(d, n)?;
            check(
                r.passes,
                json!({
                    "dim_hom_p_nu_p": r.dim_hom_p_nu_p,
                    "dim_b0": r.dim_b0,
                    "self_injective": r.nakayama_permutation.is_some(),
                    "degree_zero_iso_b": r.degree_zero_iso_b,
                }),
            )
        }
        "idempotent" => {
            let ta = c.ta()?;
            if d.div_ceil(n) >= d {
                return Ok(Outcome::NotApplicable(format!("d - ceil(d/n) = 0 for (d, n) = ({d}, {n})")));
            }
            let (ap, keep) = ta.beta_setup()?;
            let corner = corner_dim(&ap, &keep);
            let end_p = ta.b0_endo()?;
            let sub = iso_test(&idempotent_subalgebra(&ap, &keep)?, &end_p)?.is_iso();
            let quo = iso_test(&quotient_by_complement(&ap, &keep)?, &end_p)?.is_iso();
            check(corner == 0 && sub && quo, json!({ "corner": corner, "eAe": sub, "quotient": quo }))
        }
        "fcy" => {
            let ta = c.ta()?;
            let r = fcy_object_check(&ta.alg, nd as i64, (n + d + 1) as i64)?;
            let comb = enumerate_paths(d + 1, n).into_iter().all(|l| {
                let u = UObject::new(l, 0);
                nakayama_pow(&u, (n + d + 1) as i64) == u.shifted(n as i64)
            });
            let failing: Vec<&String> = r.projectives.iter().filter(|(_, ok)| !ok).map(|(l, _)| l).collect();
            check(r.passes && comb, json!({ "failing_projectives": failing, "cluster_model": comb }))
        }
        other => unreachable!("unknown claim {other}"),
    })
}

fn select(spec: &str) -> Result<Vec<&'static str>, CliError> {
    if spec.trim() == "all" {
        return Ok(CLAIMS.iter().map(|c| c.0).collect());
    }
    let mut want = BTreeSet::new();
    for name in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if !CLAIMS.iter().any(|c| c.0 == name) {
            let known: Vec<&str> = CLAIMS.iter().map(|c| c.0).collect();
            return Err(CliError::usage(format!("unknown claim {name:?}; known: {}", known.join(", "))));
        }
        want.insert(name);
    }
    if want.is_empty() {
        return Err(CliError::usage("no claims selected"));
    }
    // declared order, independent of the order on the command line
    Ok(CLAIMS.iter().map(|c| c.0).filter(|c| want.contains(c)).collect())
}

/// Runs the selected claims in declared order.
pub fn verify(d: usize, n: usize, claims: &[&str], budget: usize, timings: bool) -> (VerificationReport, bool, Vec<String>) {
    let mut ctx =
        Ctx { d, n, budget, cache: Cache::from_env(), warnings: Vec::new(), ta: None, t: None, b0: None, end_t: None };
    let mut results = Vec::new();
    let mut budget_hit = false;
    for &name in claims {
        let start = Instant::now();
        let outcome = run_claim(name, &mut ctx);
        let ms = if timings { start.elapsed().as_millis() as u64 } else { 0 };
        let (status, value) = match outcome {
            Ok(Outcome::Pass(v)) => (ClaimStatus::Pass, v),
            Ok(Outcome::Fail(v)) => (ClaimStatus::Fail, v),
            Ok(Outcome::NotApplicable(why)) => (ClaimStatus::Skipped, json!({ "reason": why })),
            Err(HomotopyError::Budget(m)) => {
                budget_hit = true;
                (ClaimStatus::Skipped, json!({ "reason": m }))
            }
            Err(e) => (ClaimStatus::Fail, json!({ "error": e.to_string() })),
        };
        results.push(ClaimResult { name: name.into(), status, value, ms });
    }
    let report = VerificationReport {
        schema: 1,
        tool: "hauslander".into(),
        version: VERSION.into(),
        params: Params { n, d },
        config: Config { claims: claims.iter().map(|s| s.to_string()).collect(), budget, timings },
        claims: results,
    };
    (report, budget_hit, ctx.warnings)
}

pub fn run(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    require_positive(a.d, a.n)?;
    if gcd(a.d, a.n) != 1 {
        return Err(CliError::usage(format!("gcd({}, {}) != 1", a.d, a.n)));
    }
    let claims = select(&a.claims)?;
    let budget = a.budget.unwrap_or(a.n * a.d + 4);
    let (report, budget_hit, warnings) = verify(a.d, a.n, &claims, budget, !a.no_timings);
    for w in warnings {
        writeln!(err, "warning: {w}").map_err(io_err)?;
    }
    for c in &report.claims {
        let status = match c.status {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::Skipped => "skipped",
        };
        writeln!(out, "{status:<8} {:<19} {}", c.name, c.value).map_err(io_err)?;
    }
    let count = |s: ClaimStatus| report.claims.iter().filter(|c| c.status == s).count();
    let (pass, fail, skip) = (count(ClaimStatus::Pass), count(ClaimStatus::Fail), count(ClaimStatus::Skipped));
    writeln!(out, "{pass} passed, {fail} failed, {skip} skipped").map_err(io_err)?;
    if let Some(path) = &a.report {
        let text = serde_json::to_string_pretty(&report).map_err(|e| CliError::fail(e.to_string()))? + "\n";
        std::fs::write(path, text).map_err(|e| CliError::fail(format!("{}: {e}", path.display())))?;
    }
    Ok(if fail > 0 {
        EXIT_FAIL
    } else if budget_hit {
        EXIT_BUDGET
    } else {
        EXIT_OK
    })
}
