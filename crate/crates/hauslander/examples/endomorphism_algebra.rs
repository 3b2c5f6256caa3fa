//! `B = End(T)` computed from complexes over `A_{n+1}^d`, compared with the
//! replicated algebra of `B_0`.

use hauslander::bqa::construct::replicate;
use hauslander::bqa::iso::iso_test;
use hauslander::bqa::present::presentation;
use hauslander::homotopy::{gldim, TypeA};

fn main() {
    let ta = TypeA::new(3, 2).unwrap();
    let b0 = ta.b0().unwrap();
    let bq = presentation(&b0).unwrap();
    println!("B_0: {} vertices, {} arrows, dim {}", bq.quiver.vertices.len(), bq.quiver.arrows.len(), b0.dim());

    let t = ta.complexes(&ta.t_objects().unwrap()).unwrap();
    for x in t.iter().take(3) {
        println!("  {}", x.describe(&ta.alg));
    }
    let b = ta.end_t().unwrap();
    let rep = replicate(&b0, ta.n + ta.d).unwrap();
    println!("End(T): {} vertices, dim {}", b.num_vertices(), b.dim());
    println!("End(T) = B_0^(n+d): {}", iso_test(&b, &rep).unwrap().is_iso());
    println!("gldim End(T) = {:?}", gldim(&b, 12));
}
