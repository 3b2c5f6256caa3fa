//! Programmatic use of the `verify` pipeline.

use hauslander::cli::ClaimStatus;

fn main() {
    let claims = ["rigidity", "generation", "end_t", "gldim_B"];
    let (report, _, _) = hauslander::cli::verify(3, 2, &claims, 10, false);
    for c in &report.claims {
        println!("{:<12} {:?} {}", c.name, c.status, c.value);
    }
    assert!(report.claims.iter().all(|c| c.status == ClaimStatus::Pass));
}
