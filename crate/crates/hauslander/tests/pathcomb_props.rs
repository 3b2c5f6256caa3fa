use std::collections::BTreeSet;

use hauslander::linalg::q;
use hauslander::pathcomb::*;
use num::integer::{binomial, gcd};
use num::{Signed, Zero};
use proptest::prelude::*;

fn grid_strategy(max_paths: usize) -> impl Strategy<Value = (usize, usize)> {
    (1usize..9, 1usize..9).prop_filter("grid size", move |&(d, n)| binomial(d + n, d) <= max_paths)
}

fn coprime_strategy(max_paths: usize) -> impl Strategy<Value = (usize, usize)> {
    grid_strategy(max_paths).prop_filter("coprime", |&(d, n)| gcd(d, n) == 1)
}

fn path_in(d: usize, n: usize) -> impl Strategy<Value = LatticePath> {
    let all = enumerate_paths(d, n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn grid_and_path(max_paths: usize) -> impl Strategy<Value = LatticePath> {
    grid_strategy(max_paths).prop_flat_map(|(d, n)| path_in(d, n))
}

proptest! {
    #[test]
    fn coords_roundtrip(l in grid_and_path(1000)) {
        let c = coords(&l);
        prop_assert_eq!(from_coords(&c), l.clone());
        prop_assert_eq!(coords(&from_coords(&c)), c);
    }

    #[test]
    fn relation_matches_preceq((l1, l2) in grid_strategy(1000).prop_flat_map(|(d, n)| (path_in(d, n), path_in(d, n)))) {
        prop_assert_eq!(relation_r(&l1, &l2).unwrap(), preceq(&coords(&l1), &coords(&l2)).unwrap());
    }

    #[test]
    fn rotation_action_is_free(l in grid_and_path(1000), k in -40i64..40) {
        let len = (l.d() + l.n()) as i64;
        if rotate_pow(&l, k) == l && gcd(l.d(), l.n()) == 1 {
            prop_assert_eq!(k.rem_euclid(len), 0);
        }
        prop_assert_eq!(rotate_pow(&l, len), l.clone());
        prop_assert_eq!(rotate_pow(&rotate_pow(&l, k), -k), l);
    }

    #[test]
    fn one_dyck_per_orbit(l in coprime_strategy(1000).prop_flat_map(|(d, n)| path_in(d, n))) {
        let len = (l.d() + l.n()) as i64;
        let dycks = (0..len).map(|k| rotate_pow(&l, k)).filter(is_dyck).count();
        prop_assert_eq!(dycks, 1);
        let (rep, k) = dyck_orbit_representative(&l).unwrap();
        prop_assert!(is_dyck(&rep));
        prop_assert_eq!(rotate_pow(&rep, k as i64), l);
    }

    #[test]
    fn anchor_bounds(l in coprime_strategy(1000).prop_flat_map(|(d, n)| path_in(d + 1, n))) {
        let (d, n) = ((l.d() - 1) as i64, l.n() as i64);
        let a = anchor_data(&l).unwrap();
        prop_assert!(a.h <= l.n());
        prop_assert!(!a.mu.is_negative());
        let bound = hauslander::linalg::qfrac(n, d);
        for (_, v, w) in &a.corners {
            prop_assert!(v.is_positive() && *v < q(1));
            prop_assert!(w.is_positive() && *w < bound);
        }
        // mu vanishes exactly on the region of the anchor
        let inside = region_contains(a.anchor, &l).unwrap();
        prop_assert_eq!(a.mu.is_zero(), inside);
    }
}

#[test]
fn bijection_exhaustive() {
    for d in 1..10 {
        for n in 1..10 {
            if binomial(d + n, d) > 1000 {
                continue;
            }
            let paths = enumerate_paths(d, n);
            assert_eq!(paths.len(), binomial(d + n, d));
            for l in &paths {
                assert_eq!(&from_coords(&coords(l)), l);
            }
        }
    }
}

#[test]
fn relation_agrees_with_preceq_on_l34() {
    let paths = enumerate_paths(3, 4);
    assert_eq!(paths.len(), 35);
    for a in &paths {
        for b in &paths {
            assert_eq!(relation_r(a, b).unwrap(), preceq(&coords(a), &coords(b)).unwrap());
        }
    }
}

fn coprime_grids(max_paths: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for d in 1..10 {
        for n in 1..10 {
            if gcd(d, n) == 1 && binomial(d + n + 1, d + 1) <= max_paths {
                out.push((d, n));
            }
        }
    }
    out
}

#[test]
fn regions_partition_and_rotate() {
    for (d, n) in coprime_grids(1000) {
        let bars: BTreeSet<LatticePath> = enumerate_dyck(d, n).unwrap().iter().map(bar).collect();
        for i in 1..=n + d {
            let deltas = delta_set(d, n, i).unwrap();
            let primes = delta_prime_set(d, n, i).unwrap();
            let images: BTreeSet<GridPoint> = deltas.iter().map(|&p| dual_point(d, n, p)).collect();
            assert_eq!(images, primes.iter().copied().collect::<BTreeSet<_>>(), "(d,n)=({d},{n}) i={i}");
            let mut covered = BTreeSet::new();
            for &p in &deltas {
                let s = s_region(d, n, p).unwrap();
                for l in &s {
                    assert!(covered.insert(l.clone()), "{l:?} in two S_D");
                }
                let rotated: BTreeSet<LatticePath> = s.iter().map(|l| rotate_pow(l, i as i64)).collect();
                let target: BTreeSet<LatticePath> =
                    region(d, n, dual_point(d, n, p)).unwrap().into_iter().collect();
                assert_eq!(rotated, target, "(d,n)=({d},{n}) D={p}");
            }
            assert_eq!(covered, bars);
        }
    }
}

#[test]
fn resolving_sequence_exists_everywhere() {
    for (d, n) in coprime_grids(1000) {
        for l in enumerate_paths(d + 1, n) {
            let a = anchor_data(&l).unwrap();
            if a.h == 0 || a.mu.is_zero() {
                continue;
            }
            let w = resolving_sequence(&l).unwrap_or_else(|e| panic!("(d,n)=({d},{n}): {e}"));
            for o in w.others(d, n) {
                assert!(key_decreases(&a, &anchor_data(&o).unwrap()));
            }
        }
    }
}
