use std::sync::OnceLock;

use hauslander::bqa::auslander::build_auslander_algebra;
use hauslander::bqa::quiver::{BoundQuiver, Quiver};
use hauslander::bqa::{FdAlgebra, Module};
use hauslander::homotopy::{
    complexes_isomorphic, cone, derived_nakayama, derived_nakayama_inverse, hom_complex_dim, minimal_proj_resolution,
    ChainMap, ProjComplex,
};
use proptest::prelude::*;

struct Setup {
    alg: FdAlgebra,
    op: FdAlgebra,
    /// Resolutions of simples and injectives, then projective stalks.
    pool: Vec<ProjComplex>,
}

fn setups() -> &'static [Setup] {
    static S: OnceLock<Vec<Setup>> = OnceLock::new();
    S.get_or_init(|| {
        let algs = [
            build_auslander_algebra(3, 2).unwrap(),
            BoundQuiver::truncated(Quiver::linear(4), 2).to_algebra("kA4/rad2", 6).unwrap(),
        ];
        algs.into_iter()
            .map(|alg| {
                let mut pool = Vec::new();
                for v in 0..alg.num_vertices() {
                    for m in [Module::simple(&alg, v), Module::injective(&alg, v)] {
                        pool.push(minimal_proj_resolution(&alg, &m, 12).complex);
                    }
                    pool.push(ProjComplex::stalk(vec![v], 0));
                }
                Setup { op: alg.opposite(), alg, pool }
            })
            .collect()
    })
}

fn complex() -> impl Strategy<Value = (usize, ProjComplex)> {
    (0..setups().len()).prop_flat_map(|a| {
        let n = setups()[a].pool.len();
        (Just(a), 0..n, -3i64..=3).prop_map(|(a, i, s)| (a, setups()[a].pool[i].shift(s)))
    })
}

fn pair() -> impl Strategy<Value = (usize, ProjComplex, ProjComplex)> {
    (0..setups().len()).prop_flat_map(|a| {
        let n = setups()[a].pool.len();
        (Just(a), 0..n, 0..n, -3i64..=3)
            .prop_map(|(a, i, j, s)| (a, setups()[a].pool[i].clone(), setups()[a].pool[j].shift(s)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn differentials_square_to_zero((a, x) in complex()) {
        let alg = &setups()[a].alg;
        prop_assert!(x.check(alg).is_ok());
        let nx = derived_nakayama(alg, &x).unwrap();
        prop_assert!(nx.check(alg).is_ok());
        prop_assert!(nx.is_minimal(alg));
    }

    #[test]
    fn minimize_is_idempotent_and_drops_contractibles((a, x, y) in pair()) {
        let alg = &setups()[a].alg;
        let m = x.minimize(alg);
        prop_assert_eq!(m.minimize(alg).signature(), m.signature());
        // x + cone(id_y) is homotopic to x
        let c = cone(alg, &y, &y, &ChainMap::identity(&y));
        let padded = ProjComplex::direct_sum(&[&x, &c]);
        prop_assert!(padded.check(alg).is_ok());
        let pm = padded.minimize(alg);
        prop_assert_eq!(pm.signature(), m.signature());
        prop_assert!(complexes_isomorphic(alg, &pm, &x, 4));
    }

    #[test]
    fn nakayama_is_an_autoequivalence((a, x, y) in pair(), k in -2i64..=2) {
        let alg = &setups()[a].alg;
        let (nx, ny) = (derived_nakayama(alg, &x).unwrap(), derived_nakayama(alg, &y).unwrap());
        prop_assert_eq!(hom_complex_dim(alg, &x, &y, k), hom_complex_dim(alg, &nx, &ny, k));
    }

    #[test]
    fn serre_duality_dimensions((a, x, y) in pair(), k in -2i64..=2) {
        // Hom(X, Y[k]) is dual to Hom(Y[k], nu X) = Hom(Y, nu X [-k])
        let alg = &setups()[a].alg;
        let nx = derived_nakayama(alg, &x).unwrap();
        prop_assert_eq!(hom_complex_dim(alg, &x, &y, k), hom_complex_dim(alg, &y, &nx, -k));
    }

    #[test]
    fn nakayama_inverse_round_trips((a, x) in complex()) {
        let s = &setups()[a];
        let nx = derived_nakayama(&s.alg, &x).unwrap();
        let back = derived_nakayama_inverse(&s.op, &nx).unwrap();
        prop_assert!(complexes_isomorphic(&s.alg, &back, &x, 4));
        let there = derived_nakayama(&s.alg, &derived_nakayama_inverse(&s.op, &x).unwrap()).unwrap();
        prop_assert!(complexes_isomorphic(&s.alg, &there, &x, 4));
    }
}
