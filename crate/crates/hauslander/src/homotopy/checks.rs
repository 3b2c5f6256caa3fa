//! Tilting complexes from Nakayama orbits and the homological checks run on
//! the algebras of the type-A pipeline.

use std::collections::HashMap;

use serde::Serialize;

use super::complex::{cone, ChainMap, ProjComplex};
use super::hom::{complexes_isomorphic, hom_complex_dim, HomCohomology};
use super::nakayama::{derived_nakayama, nakayama_power};
use super::resolve::{ext_dim_from, gldim, minimal_proj_resolution};
use super::typea::TypeA;
use super::HomotopyError;
use crate::bqa::construct::{degree_zero_part, trivial_ext_r};
use crate::bqa::iso::iso_test;
use crate::bqa::{FdAlgebra, Module};

/// Seeds tried by the randomized complex-isomorphism test.
pub const ISO_TRIES: u64 = 4;

/// `nu^0 X, ..., nu^{a-1} X`.
pub fn build_tilting_complex_from_nu_orbit(
    alg: &FdAlgebra,
    x: &ProjComplex,
    a: usize,
) -> Result<Vec<ProjComplex>, HomotopyError> {
    let mut out = Vec::with_capacity(a);
    let mut cur = x.minimize(alg);
    for i in 0..a {
        if i > 0 {
            cur = derived_nakayama(alg, &cur)?;
        }
        out.push(cur.clone());
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct RigidityCheck {
    pub passes: bool,
    /// First `(i, j, k)` with `Hom(T_i, T_j[k]) != 0`, `k != 0`.
    pub violation: Option<(usize, usize, i64)>,
}

/// `Hom(T_i, T_j[k]) = 0` for `0 < |k| <= window`.
pub fn rigidity_check(alg: &FdAlgebra, summands: &[ProjComplex], window: i64) -> RigidityCheck {
    for (i, x) in summands.iter().enumerate() {
        for (j, y) in summands.iter().enumerate() {
            for k in (-window..=window).filter(|&k| k != 0) {
                if hom_complex_dim(alg, x, y, k) != 0 {
                    return RigidityCheck { passes: false, violation: Some((i, j, k)) };
                }
            }
        }
    }
    RigidityCheck { passes: true, violation: None }
}

#[derive(Clone, Debug, Serialize)]
pub enum GenerationResult {
    /// A recipe per target.
    Reached(Vec<String>),
    /// Depth exhausted; says nothing about generation.
    Inconclusive { reached: Vec<Option<String>> },
}

struct Found {
    x: ProjComplex,
    recipe: String,
}

/// Shifts `x` so that its lowest term sits in degree 0.
fn normalized(x: &ProjComplex) -> (ProjComplex, i64) {
    if x.is_zero() {
        return (x.clone(), 0);
    }
    (x.shift(x.lo), x.lo)
}

fn same_up_to_shift(alg: &FdAlgebra, x: &ProjComplex, y: &ProjComplex) -> Option<i64> {
    let (nx, sx) = normalized(x);
    let (ny, sy) = normalized(y);
    if nx.signature() != ny.signature() {
        return None;
    }
    complexes_isomorphic(alg, &nx, &ny, ISO_TRIES).then_some(sx - sy)
}

/// Saturates the summands of `T` under shifts in `[-window, window]` and
/// cones of basis morphisms, for `depth` rounds, until every target is
/// reached up to shift. Cones with more terms than the largest summand or
/// target are dropped, which keeps rounds bounded; the search stays a
/// semi-decision either way.
pub fn thick_generation_search(
    alg: &FdAlgebra,
    t: &[ProjComplex],
    targets: &[ProjComplex],
    depth: usize,
    window: i64,
) -> GenerationResult {
    let targets: Vec<ProjComplex> = targets.iter().map(|x| x.minimize(alg)).collect();
    let mut pool: Vec<Found> = Vec::new();
    // normalized term lists -> pool indices, so iso tests only run within a bucket
    let mut buckets: HashMap<Vec<Vec<usize>>, Vec<usize>> = HashMap::new();
    let known = |pool: &[Found], buckets: &HashMap<Vec<Vec<usize>>, Vec<usize>>, x: &ProjComplex| {
        buckets.get(&x.signature().1).is_some_and(|ids| ids.iter().any(|&i| same_up_to_shift(alg, &pool[i].x, x).is_some()))
    };
    for (i, x) in t.iter().enumerate() {
        let x = x.minimize(alg);
        if !x.is_zero() && !known(&pool, &buckets, &x) {
            buckets.entry(x.signature().1).or_default().push(pool.len());
            pool.push(Found { x, recipe: format!("T{}", i + 1) });
        }
    }
    let cap = pool.iter().map(|f| f.x.size()).chain(targets.iter().map(|x| x.size())).max().unwrap_or(0);
    let mut reached: Vec<Option<String>> = vec![None; targets.len()];
    // marks targets matched by pool[i]; true once every target is reached
    let mark = |pool: &[Found], i: usize, reached: &mut [Option<String>]| {
        let f = &pool[i];
        let sig = f.x.signature().1;
        for (ti, tg) in targets.iter().enumerate() {
            if reached[ti].is_none() && tg.signature().1 == sig {
                if let Some(s) = same_up_to_shift(alg, tg, &f.x) {
                    reached[ti] = Some(if s == 0 { f.recipe.clone() } else { format!("{}[{}]", f.recipe, -s) });
                }
            }
        }
        reached.iter().all(|r| r.is_some())
    };
    let mut all = targets.is_empty();
    for i in 0..pool.len() {
        all |= mark(&pool, i, &mut reached);
    }
    let mut done = 0;
    'rounds: for _ in 0..depth {
        if all {
            break;
        }
        // pairs with at least one member new since the last round
        let old = done;
        done = pool.len();
        let mut fresh = 0;
        for ai in 0..done {
            for bi in 0..done {
                if ai < old && bi < old {
                    continue;
                }
                for k in -window..=window {
                    let (a, b) = (&pool[ai], &pool[bi]);
                    let yb = b.x.shift(k);
                    let h = HomCohomology::new(alg, &a.x, &yb, 0);
                    let mut cones = Vec::new();
                    for (ri, rep) in h.reps.iter().enumerate() {
                        let f: ChainMap = h.layout.to_chain_map(alg, &a.x, &yb, rep);
                        let c = cone(alg, &a.x, &yb, &f).minimize(alg);
                        if !c.is_zero() && c.size() <= cap {
                            cones.push((c, format!("cone({} -> {}[{k}] #{})", a.recipe, b.recipe, ri + 1)));
                        }
                    }
                    for (c, recipe) in cones {
                        if !known(&pool, &buckets, &c) {
                            buckets.entry(c.signature().1).or_default().push(pool.len());
                            pool.push(Found { x: c, recipe });
                            fresh += 1;
                            if mark(&pool, pool.len() - 1, &mut reached) {
                                break 'rounds;
                            }
                        }
                    }
                }
            }
        }
        if fresh == 0 {
            break;
        }
    }
    if reached.iter().all(|r| r.is_some()) {
        GenerationResult::Reached(reached.into_iter().map(|r| r.unwrap()).collect())
    } else {
        GenerationResult::Inconclusive { reached }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InjectiveCheck {
    pub vertex: String,
    /// Label of the projective `nu_d(I)` is isomorphic to, if it is one.
    pub image: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoSubhomReport {
    pub d: usize,
    pub gldim: usize,
    /// Recorded separately: some sources require `gldim = d`, others `<= d`.
    pub gldim_equals_d: bool,
    pub injectives: Vec<InjectiveCheck>,
    /// `Ext^i(DA, A + DA) = 0` for `1 <= i <= d - 1`.
    pub rigid: bool,
    pub passes: bool,
}

/// `nu_d(I) = nu(I)[-d]` is a projective stalk for every indecomposable
/// injective non-projective `I`, and `A + DA` is rigid in degrees `1..d-1`.
pub fn two_subhomogeneous_check(alg: &FdAlgebra, d: usize) -> Result<TwoSubhomReport, HomotopyError> {
    let gl = gldim(alg, d + 1).ok_or_else(|| HomotopyError::Invalid(format!("gldim of {} exceeds {d}", alg.name)))?;
    if gl > d {
        return Err(HomotopyError::Invalid(format!("gldim of {} is {gl} > {d}", alg.name)));
    }
    let nv = alg.num_vertices();
    let targets: Vec<Module> =
        (0..nv).map(|w| Module::projective(alg, w)).chain((0..nv).map(|w| Module::injective(alg, w))).collect();
    let target = Module::direct_sum(alg, &targets.iter().collect::<Vec<_>>());
    let mut injectives = Vec::new();
    let mut rigid = true;
    for v in 0..nv {
        let inj = Module::injective(alg, v);
        if inj.is_projective_indecomposable(alg).is_some() {
            continue;
        }
        let r = minimal_proj_resolution(alg, &inj, d + 1);
        let y = derived_nakayama(alg, &r.complex)?.shift(-(d as i64)).minimize(alg);
        let image = (y.lo == 0 && y.terms.len() == 1 && y.terms[0].len() == 1)
            .then(|| alg.vertex_label(y.terms[0][0]).to_string());
        injectives.push(InjectiveCheck { vertex: alg.vertex_label(v).to_string(), image });
        for i in 1..d {
            if ext_dim_from(alg, &r, &target, i) != 0 {
                rigid = false;
            }
        }
    }
    let passes = rigid && injectives.iter().all(|c| c.image.is_some());
    Ok(TwoSubhomReport { d, gldim: gl, gldim_equals_d: gl == d, injectives, rigid, passes })
}

#[derive(Clone, Debug, Serialize)]
pub struct PreprojReport {
    pub d: usize,
    pub n: usize,
    pub dim_hom_p_nu_p: usize,
    pub dim_b0: usize,
    /// `nakayama[v] = w` when `P_v` has socle `S_w` and `dim P_v = dim I_w`.
    pub nakayama_permutation: Option<Vec<usize>>,
    pub degree_zero_iso_b: bool,
    pub passes: bool,
}

/// Whether every `P_v` has a simple socle `S_w` with `dim P_v = dim I_w`,
/// the assignment being a permutation.
pub fn self_injective_permutation(alg: &FdAlgebra) -> Option<Vec<usize>> {
    let nv = alg.num_vertices();
    let mut perm = Vec::with_capacity(nv);
    for v in 0..nv {
        let p = Module::projective(alg, v);
        let soc = p.socle_dims(alg);
        if soc.iter().sum::<usize>() != 1 {
            return None;
        }
        let w = soc.iter().position(|&k| k == 1)?;
        if Module::injective(alg, w).total_dim() != p.total_dim() {
            return None;
        }
        perm.push(w);
    }
    let mut seen = vec![false; nv];
    for &w in &perm {
        if std::mem::replace(&mut seen[w], true) {
            return None;
        }
    }
    Some(perm)
}

/// Serre duality at the level of dimensions, self-injectivity of
/// `T_{n+d}(B_0)`, and its degree-zero part against `B = End(T)`.
pub fn preprojective_graded_check(d: usize, n: usize) -> Result<PreprojReport, HomotopyError> {
    let ta = TypeA::new(d, n)?;
    let p = ta.complexes(&ta.p_objects()?)?;
    let nu_p: Vec<ProjComplex> = p.iter().map(|x| derived_nakayama(&ta.alg, x)).collect::<Result<_, _>>()?;
    let dim_hom: usize =
        p.iter().flat_map(|x| nu_p.iter().map(move |y| (x, y))).map(|(x, y)| hom_complex_dim(&ta.alg, x, y, 0)).sum();
    let b0 = ta.b0()?;
    let t = trivial_ext_r(&b0, n + d)?;
    let perm = self_injective_permutation(&t);
    let b = ta.end_t()?;
    let zero = degree_zero_part(&t)?;
    let iso = iso_test(&zero, &b)?.is_iso();
    let passes = dim_hom == b0.dim() && perm.is_some() && iso;
    Ok(PreprojReport {
        d,
        n,
        dim_hom_p_nu_p: dim_hom,
        dim_b0: b0.dim(),
        nakayama_permutation: perm,
        degree_zero_iso_b: iso,
        passes,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FcyReport {
    pub m: i64,
    pub l: i64,
    /// Per projective: vertex label and whether `nu^l P = P[m]`.
    pub projectives: Vec<(String, bool)>,
    pub passes: bool,
}

/// `nu^l P_v = P_v[m]` for every vertex.
pub fn fcy_object_check(alg: &FdAlgebra, m: i64, l: i64) -> Result<FcyReport, HomotopyError> {
    let mut projectives = Vec::new();
    for v in 0..alg.num_vertices() {
        let p = ProjComplex::stalk(vec![v], 0);
        let y = nakayama_power(alg, &p, l)?;
        let ok = complexes_isomorphic(alg, &y, &p.shift(m), ISO_TRIES);
        projectives.push((alg.vertex_label(v).to_string(), ok));
    }
    let passes = projectives.iter().all(|(_, ok)| *ok);
    Ok(FcyReport { m, l, projectives, passes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bqa::auslander::build_auslander_algebra;
    use crate::bqa::quiver::{BoundQuiver, Quiver};

    #[test]
    fn hereditary_d1_cases() {
        // kA_2: A + DA is all of mod A
        let a2 = build_auslander_algebra(2, 1).unwrap();
        let r = two_subhomogeneous_check(&a2, 1).unwrap();
        assert!(r.passes, "{r:?}");
        assert!(r.gldim_equals_d);
        // kA_3 misses the middle simple; the window 1..d-1 is empty so only nu_1 fails
        let a3 = build_auslander_algebra(3, 1).unwrap();
        let r = two_subhomogeneous_check(&a3, 1).unwrap();
        assert!(r.rigid);
        assert!(!r.passes);
        assert_eq!(r.injectives.iter().filter(|c| c.image.is_none()).count(), 1);
    }

    #[test]
    fn gldim_above_d_is_an_error() {
        let b = BoundQuiver::truncated(Quiver::linear(4), 2).to_algebra("A4/rad2", 8).unwrap();
        assert!(two_subhomogeneous_check(&b, 2).is_err());
    }

    #[test]
    fn semisimple_is_0_1_cy() {
        let a = FdAlgebra::new("k^2", vec!["1".into(), "2".into()], Vec::new(), Default::default()).unwrap();
        assert!(fcy_object_check(&a, 0, 1).unwrap().passes);
    }

    #[test]
    fn a_two_is_one_third_cy() {
        // k(1 -> 2): nu^3 = [1]
        let a = build_auslander_algebra(2, 1).unwrap();
        assert!(fcy_object_check(&a, 1, 3).unwrap().passes);
        assert!(!fcy_object_check(&a, 0, 3).unwrap().passes);
        assert!(fcy_object_check(&a, 2, 6).unwrap().passes);
    }

    #[test]
    fn targets_among_summands() {
        let a = build_auslander_algebra(3, 1).unwrap();
        let t: Vec<ProjComplex> = (0..3).map(|v| ProjComplex::stalk(vec![v], 0)).collect();
        match thick_generation_search(&a, &t, &t[1..], 1, 1) {
            GenerationResult::Reached(r) => assert_eq!(r, ["T2", "T3"]),
            other => panic!("{other:?}"),
        }
    }
}
