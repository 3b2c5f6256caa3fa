//! Rational Dyck paths and rotation orbits in `L_{d,n}`.
//!
//! `cargo run --example dyck_paths -- 3 4`

use hauslander::pathcomb::{dyck_orbit_representative, enumerate_dyck, enumerate_paths, is_dyck};

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (d, n) = match args[..] {
        [d, n] => (d, n),
        _ => (3, 4),
    };
    let dyck = match enumerate_dyck(d, n) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    println!("{} Dyck paths in L_{{{d},{n}}}:", dyck.len());
    for l in &dyck {
        println!("  {}  coords {}", l.step_string(), l.coords_label());
    }
    // every path rotates onto exactly one Dyck path
    for l in enumerate_paths(d, n).iter().filter(|l| !is_dyck(l)).take(4) {
        let (rep, k) = dyck_orbit_representative(l).unwrap();
        println!("  {} = r^{k}({})", l.step_string(), rep.step_string());
    }
}
