use std::path::PathBuf;
use std::process::Command;

use hauslander::bqa::quiver::{BoundQuiver, QuiverJson};
use hauslander::pathcomb::{enumerate_paths, LatticePath};

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Out {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hauslander"));
    cmd.args(args).env_remove("HA_CACHE_DIR");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let o = cmd.output().expect("binary runs");
    Out {
        code: o.status.code().expect("exit code"),
        stdout: String::from_utf8(o.stdout).unwrap(),
        stderr: String::from_utf8(o.stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Out {
    run_env(args, &[])
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hauslander-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn csv_rows(s: &str) -> usize {
    s.lines().count() - 1
}

#[test]
fn paths_examples() {
    let o = run(&["paths", "--d", "3", "--n", "4", "--dyck", "--format", "csv"]);
    assert_eq!((o.code, csv_rows(&o.stdout)), (0, 5), "{}", o.stderr);
    assert_eq!(csv_rows(&run(&["paths", "--d", "1", "--n", "1"]).stdout), 2);
    let o = run(&["paths", "--d", "3", "--n", "4", "--orbits"]);
    let mut sizes = std::collections::BTreeMap::new();
    for line in o.stdout.lines().skip(1) {
        *sizes.entry(line.split(',').next().unwrap().to_string()).or_insert(0) += 1;
    }
    assert_eq!(sizes.len(), 5);
    assert!(sizes.values().all(|&s| s == 7));
}

#[test]
fn paths_orbits_start_with_dyck() {
    let o = run(&["paths", "--d", "2", "--n", "5", "--orbits"]);
    let mut last = None;
    for line in o.stdout.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        if last != Some(f[0].to_string()) {
            assert_eq!(f[3], "true", "{line}");
            last = Some(f[0].to_string());
        }
    }
}

#[test]
fn paths_usage_errors() {
    assert_eq!(run(&["paths", "--d", "2", "--n", "4", "--dyck"]).code, 2);
    assert_eq!(run(&["paths", "--d", "2", "--n", "4", "--orbits"]).code, 2);
    assert_eq!(run(&["paths", "--d", "0", "--n", "4"]).code, 2);
    assert_eq!(run(&["paths", "--d", "3"]).code, 2);
    // non-coprime enumeration is fine
    assert_eq!(csv_rows(&run(&["paths", "--d", "2", "--n", "2"]).stdout), 6);
}

#[test]
fn paths_json_round_trips() {
    let o = run(&["paths", "--d", "3", "--n", "2", "--format", "json"]);
    let j: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(j["schema"], 1);
    let parsed: Vec<LatticePath> = j["paths"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| {
            let (d, n) = (p["d"].as_u64().unwrap() as usize, p["n"].as_u64().unwrap() as usize);
            LatticePath::parse(d, n, p["steps"].as_str().unwrap()).unwrap()
        })
        .collect();
    assert_eq!(parsed, enumerate_paths(3, 2));
}

#[test]
fn dot_outputs_parse() {
    for args in [
        &["paths", "--d", "3", "--n", "2", "--format", "dot"][..],
        &["paths", "--d", "3", "--n", "4", "--orbits", "--format", "dot"][..],
        &["quiver", "--n", "4", "--d", "3", "--algebra", "B0", "--format", "dot"][..],
        &["quiver", "--n", "2", "--d", "3", "--algebra", "Pi", "--format", "dot"][..],
    ] {
        let o = run(args);
        assert_eq!(o.code, 0, "{}", o.stderr);
        graphviz_rust::parse(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", o.stdout));
    }
}

#[test]
fn quiver_examples() {
    let o = run(&["quiver", "--n", "4", "--d", "3", "--algebra", "B", "--format", "dot"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let g = graphviz_rust::parse(&o.stdout).unwrap();
    let graphviz_rust::dot_structures::Graph::DiGraph { stmts, .. } = g else { panic!("not a digraph") };
    let nodes = stmts.iter().filter(|s| matches!(s, graphviz_rust::dot_structures::Stmt::Node(_))).count();
    assert_eq!(nodes, 35);

    let o = run(&["quiver", "--n", "4", "--d", "3", "--algebra", "B0"]);
    let j: QuiverJson = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!((j.vertices.len(), j.arrows.len(), j.relations.len()), (5, 5, 2));
    let bq = BoundQuiver::from_json(&j).unwrap();
    assert_eq!(bq.to_json(), j);
    assert_eq!(bq.to_algebra("B0", 8).unwrap().dim(), 12);

    let o = run(&["quiver", "--n", "2", "--d", "3", "--algebra", "Lambda"]);
    let j: QuiverJson = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(j.vertices.len(), 12);
}

#[test]
fn quiver_errors_and_tex() {
    assert_eq!(run(&["quiver", "--n", "3", "--d", "3", "--algebra", "B"]).code, 1);
    assert_eq!(run(&["quiver", "--n", "2", "--d", "3", "--algebra", "Tr"]).code, 2);
    assert_eq!(run(&["quiver", "--n", "2", "--d", "3", "--algebra", "C"]).code, 2);
    let o = run(&["quiver", "--n", "2", "--d", "3", "--algebra", "Tr", "--r", "3", "--format", "tex"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.stdout.matches("\\begin{tabular}").count(), 3);
}

#[test]
fn verify_all_small() {
    let dir = scratch("verify");
    let report = dir.join("report.json");
    let o = run(&["verify", "--n", "2", "--d", "3", "--claims", "all", "--report", report.to_str().unwrap()]);
    assert_eq!(o.code, 0, "{}\n{}", o.stdout, o.stderr);
    let j: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(j["schema"], 1);
    assert_eq!(j["params"]["n"], 2);
    let claims = j["claims"].as_array().unwrap();
    assert_eq!(claims.len(), hauslander::cli::CLAIMS.len());
    let gl = claims.iter().find(|c| c["name"] == "gldim_B").unwrap();
    assert_eq!((gl["status"].as_str(), gl["value"].as_u64()), (Some("pass"), Some(6)));
    for c in claims {
        assert!(c["ms"].is_u64());
    }
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "--n", "3", "--d", "3", "--claims", "all"]).code, 2);
    assert_eq!(run(&["verify", "--n", "2", "--d", "3", "--claims", "bogus"]).code, 2);
    let o = run(&["verify", "--n", "4", "--d", "3", "--claims", "rigidity,generation"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    let o = run(&["verify", "--n", "2", "--d", "3", "--claims", "gldim_B", "--budget", "3"]);
    assert_eq!(o.code, 3);
    assert!(o.stdout.contains("skipped"));
}

#[test]
fn verify_is_deterministic_and_cache_neutral() {
    let dir = scratch("cache");
    let cache = dir.join("cache");
    let cache = cache.to_str().unwrap();
    let mut reports = Vec::new();
    for (i, env) in [vec![], vec![("HA_CACHE_DIR", cache)], vec![("HA_CACHE_DIR", cache)]].iter().enumerate() {
        let path = dir.join(format!("r{i}.json"));
        let o = run_env(&["verify", "--n", "3", "--d", "2", "--no-timings", "--report", path.to_str().unwrap()], env);
        assert_eq!(o.code, 0, "{}", o.stdout);
        reports.push((std::fs::read(&path).unwrap(), o.stdout));
    }
    assert!(std::fs::read_dir(cache).unwrap().count() > 0);
    assert!(reports.windows(2).all(|w| w[0] == w[1]));

    let q: Vec<String> = [vec![], vec![("HA_CACHE_DIR", cache)], vec![("HA_CACHE_DIR", cache)]]
        .iter()
        .map(|env| run_env(&["quiver", "--n", "2", "--d", "3", "--algebra", "Pi"], env).stdout)
        .collect();
    assert!(q.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn homdim_examples() {
    let base = ["homdim", "--n", "4", "--d", "3"];
    let cases = [("1,2,4,6@0", "1,3,5,7@0", 1), ("1,2,4,6@0", "1,2,4,6@0", 1), ("2,3,5,7@0", "1,2,4,6@1", 1)];
    for (from, to, want) in cases {
        let mut args = base.to_vec();
        args.extend(["--from", from, "--to", to]);
        let o = run(&args);
        assert_eq!((o.code, o.stdout.trim().parse::<usize>().unwrap()), (0, want), "{from} -> {to}");
        args.push("--linear-algebra");
        let o = run(&args);
        assert_eq!(o.code, 0, "{}", o.stdout);
        assert_eq!(o.stdout, format!("combinatorial {want}\nlinear-algebra {want}\n"));
    }
    let mut args = base.to_vec();
    args.extend(["--from", "1,2,4@0", "--to", "1,3,5,7@0"]);
    assert_eq!(run(&args).code, 2);
    let mut args = base.to_vec();
    args.extend(["--from", "1,2,4,6@x", "--to", "1,3,5,7@0"]);
    assert_eq!(run(&args).code, 2);
}

#[test]
fn help_exits_zero() {
    let o = run(&["--help"]);
    assert_eq!(o.code, 0);
    for sub in ["paths", "quiver", "verify", "homdim"] {
        assert!(o.stdout.contains(sub));
    }
}
