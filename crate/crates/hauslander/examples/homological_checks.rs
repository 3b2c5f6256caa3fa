//! Global and dominant dimension of `B_0^(n+d+1)` and the object-level
//! fractional Calabi-Yau check over `A_{n+1}^d`.

use hauslander::bqa::construct::replicate;
use hauslander::homotopy::{domdim, fcy_object_check, gldim, two_subhomogeneous_check, TypeA};

fn main() {
    let (d, n) = (3, 2);
    let ta = TypeA::new(d, n).unwrap();
    let lam = replicate(&ta.b0().unwrap(), n + d + 1).unwrap();
    println!("Lambda: gldim {:?}, domdim {:?}", gldim(&lam, 12), domdim(&lam, 12));

    let b = ta.end_t().unwrap();
    let r = two_subhomogeneous_check(&b, n * d).unwrap();
    println!("End(T) with d = {}: {}", n * d, serde_json::to_string(&r).unwrap());

    let f = fcy_object_check(&ta.alg, (n * d) as i64, (n + d + 1) as i64).unwrap();
    println!("nu^{} P = P[{}] for all P: {}", n + d + 1, n * d, f.passes);
}
