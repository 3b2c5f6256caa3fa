//! Derived Nakayama orbit of `P_1` over `k(1 -> 2 -> 3 -> 4)`, the tilting
//! complex it spans and its endomorphism algebra.

use hauslander::bqa::auslander::build_auslander_algebra;
use hauslander::bqa::present::presentation;
use hauslander::homotopy::{
    build_tilting_complex_from_nu_orbit, end_algebra_of_complexes, nakayama_power, thick_generation_search,
    ProjComplex,
};

fn main() {
    let a = build_auslander_algebra(4, 1).unwrap();
    let p1 = ProjComplex::stalk(vec![0], 0);
    for k in 0..4 {
        println!("nu^{k} P1 = {}", nakayama_power(&a, &p1, k).unwrap().describe(&a));
    }
    let t = build_tilting_complex_from_nu_orbit(&a, &p1, 4).unwrap();
    let targets: Vec<ProjComplex> = (0..4).map(|v| ProjComplex::stalk(vec![v], 0)).collect();
    println!("{:?}", thick_generation_search(&a, &t, &targets, 2, 2));
    let end = end_algebra_of_complexes(&a, "End T", &t).unwrap();
    let bq = presentation(&end).unwrap();
    println!("End(T): {} arrows, relations {:?}", bq.quiver.arrows.len(), bq.relations.iter().map(|r| bq.relation_string(r)).collect::<Vec<_>>());
}
