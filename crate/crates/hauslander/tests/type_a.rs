use hauslander::bqa::Module;
use hauslander::homotopy::checks::ISO_TRIES;
use hauslander::homotopy::{
    build_tilting_complex_from_nu_orbit, complexes_isomorphic, derived_nakayama, minimal_proj_resolution,
    thick_generation_search, GenerationResult, ProjComplex, TypeA,
};

#[test]
fn nu_of_projective_stalk_is_the_injective() {
    let ta = TypeA::new(3, 2).unwrap();
    let a = &ta.alg;
    for v in 0..a.num_vertices() {
        let nu = derived_nakayama(a, &ProjComplex::stalk(vec![v], 0)).unwrap();
        let inj = minimal_proj_resolution(a, &Module::injective(a, v), 12);
        assert!(inj.complete);
        assert!(complexes_isomorphic(a, &nu, &inj.complex, ISO_TRIES), "vertex {}", a.vertex_label(v));
    }
}

#[test]
fn t_two_routes_agree_3_2() {
    let ta = TypeA::new(3, 2).unwrap();
    let comb = ta.complexes(&ta.t_objects().unwrap()).unwrap();
    let iter = ta.t_via_nakayama().unwrap();
    assert_eq!(comb.len(), iter.len());
    for (x, y) in comb.iter().zip(&iter) {
        assert!(complexes_isomorphic(&ta.alg, x, y, ISO_TRIES), "{} vs {}", x.describe(&ta.alg), y.describe(&ta.alg));
    }
}

#[test]
fn orbit_of_length_one_is_the_complex() {
    let ta = TypeA::new(3, 2).unwrap();
    let x = ta.complexes(&ta.p_objects().unwrap()).unwrap().remove(1);
    assert_eq!(build_tilting_complex_from_nu_orbit(&ta.alg, &x, 1).unwrap(), vec![x]);
}

#[test]
fn t_generates_all_projectives_3_2() {
    let ta = TypeA::new(3, 2).unwrap();
    let t = ta.complexes(&ta.t_objects().unwrap()).unwrap();
    let targets: Vec<ProjComplex> = (0..ta.alg.num_vertices()).map(|v| ProjComplex::stalk(vec![v], 0)).collect();
    match thick_generation_search(&ta.alg, &t, &targets, 4, 6) {
        GenerationResult::Reached(recipes) => assert_eq!(recipes.len(), 10),
        GenerationResult::Inconclusive { reached } => panic!("only reached {reached:?}"),
    }
}
