//! `A_{n+1}^d` as a bound quiver algebra: presentation, modules `M(x)` and
//! global dimension.

use hauslander::bqa::auslander::{auslander_bound_quiver, build_auslander_algebra, module_m};
use hauslander::bqa::Module;
use hauslander::homotopy::{gldim, minimal_proj_resolution};
use hauslander::pathcomb::OrderedSeq;

fn main() {
    let (m, d) = (4, 2);
    let bq = auslander_bound_quiver(m, d).unwrap();
    println!("A_{m}^{d}: {} vertices, {} arrows", bq.quiver.vertices.len(), bq.quiver.arrows.len());
    for r in &bq.relations {
        println!("  {}", bq.relation_string(r));
    }
    let a = build_auslander_algebra(m, d).unwrap();
    println!("dim {}, gldim {:?}", a.dim(), gldim(&a, 10));

    // x in os_m^{d+1} indexes an interval module
    let x = OrderedSeq::new(m, d + 1, vec![2, 3, 4]).unwrap();
    let rep = module_m(&a, &x).unwrap();
    let mx = Module::from_rep(&a, &rep).unwrap();
    println!("M{x} has dimension vector {:?}", mx.dims);
    let res = minimal_proj_resolution(&a, &mx, 10);
    println!("{}", serde_json::to_string(&res.report(&a, &x.label())).unwrap());
}
