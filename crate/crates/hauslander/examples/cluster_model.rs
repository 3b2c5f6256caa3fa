//! The tilting object `T` in the combinatorial model, its rigidity and the
//! generation certificate.

use hauslander::cluster_model::{build_p, build_t, generation_certificate, hom_dim, rigidity_check_t};

fn main() {
    let (d, n) = (3, 4);
    let p = build_p(d, n).unwrap();
    println!("P = {p:?}");
    let t = build_t(d, n).unwrap();
    println!("T has {} summands", t.len());

    let r = rigidity_check_t(d, n).unwrap();
    println!("rigid: {} ({} pairs, dim End T = {})", r.passes, r.pairs_checked, r.end_dim);

    let cert = generation_certificate(d, n).unwrap();
    println!("certificate: {} entries, {} injective labels", cert.entries.len(), cert.injective_labels);

    // Hom between the first two projectives in both directions
    println!("Hom(P0, P1) = {}, Hom(P1, P0) = {}", hom_dim(&p[0], &p[1]).unwrap(), hom_dim(&p[1], &p[0]).unwrap());
}
