//! The Hom complex between complexes of projectives and its cohomology.

use std::collections::HashMap;

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::complex::{ChainMap, PMat, ProjComplex};
use crate::bqa::algebra::{elt_scale, FdAlgebra};
use crate::bqa::BqaError;
use crate::linalg::{q, CoordSolver, Echelon, Matrix, Q};

/// Coordinates on `Hom^k(X, Y) = prod_j Hom(X^j, Y^{j+k})`: one slot per
/// pair of summands, holding the block from the source vertex to the target.
pub struct HomLayout {
    pub k: i64,
    slots: Vec<Slot>,
    index: HashMap<(i64, usize, usize), usize>,
    pub dim: usize,
}

struct Slot {
    j: i64,
    r: usize,
    c: usize,
    src: usize,
    tgt: usize,
    offset: usize,
    len: usize,
}

impl HomLayout {
    pub fn new(alg: &FdAlgebra, x: &ProjComplex, y: &ProjComplex, k: i64) -> Self {
        let mut slots = Vec::new();
        let mut index = HashMap::new();
        let mut dim = 0;
        if !x.is_zero() {
            for j in x.lo..=x.hi() {
                let (xs, ys) = (x.term(j), y.term(j + k));
                for (c, &u) in xs.iter().enumerate() {
                    for (r, &w) in ys.iter().enumerate() {
                        let len = alg.block(u, w).len();
                        if len > 0 {
                            index.insert((j, r, c), slots.len());
                            slots.push(Slot { j, r, c, src: u, tgt: w, offset: dim, len });
                            dim += len;
                        }
                    }
                }
            }
        }
        HomLayout { k, slots, index, dim }
    }

    pub fn to_chain_map(&self, alg: &FdAlgebra, x: &ProjComplex, y: &ProjComplex, v: &[Q]) -> ChainMap {
        let mut comps: Vec<PMat> = if x.is_zero() {
            Vec::new()
        } else {
            (x.lo..=x.hi()).map(|j| PMat::zeros(y.term(j + self.k).len(), x.term(j).len())).collect()
        };
        for s in &self.slots {
            let coefs = &v[s.offset..s.offset + s.len];
            let e: Vec<(usize, Q)> = alg
                .block(s.src, s.tgt)
                .iter()
                .zip(coefs)
                .filter(|(_, c)| !c.is_zero())
                .map(|(&i, c)| (i, c.clone()))
                .collect();
            comps[(s.j - x.lo) as usize].set(s.r, s.c, e);
        }
        ChainMap { degree: self.k, comps }
    }

    pub fn from_chain_map(&self, alg: &FdAlgebra, x: &ProjComplex, f: &ChainMap) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim];
        for s in &self.slots {
            let e = f.comps[(s.j - x.lo) as usize].get(s.r, s.c);
            for (i, c) in e {
                v[s.offset + alg.pos(*i)] = c.clone();
            }
        }
        v
    }
}

/// Matrix of `D(f) = d_Y f - (-1)^k f d_X` from `Hom^k` to `Hom^{k+1}`.
pub fn hom_differential(alg: &FdAlgebra, x: &ProjComplex, y: &ProjComplex, k: i64) -> (HomLayout, HomLayout, Matrix) {
    let src = HomLayout::new(alg, x, y, k);
    let dst = HomLayout::new(alg, x, y, k + 1);
    let mut m = Matrix::zeros(dst.dim, src.dim);
    let sign = if k.rem_euclid(2) == 0 { -Q::one() } else { Q::one() };
    for s in &src.slots {
        for (p, &b) in alg.block(s.src, s.tgt).iter().enumerate() {
            let col = s.offset + p;
            let be = sparse_unit(b);
            // d_Y after f
            if let Some(dy) = y.diff(s.j + k) {
                for r2 in 0..dy.rows {
                    let h = dy.get(r2, s.r);
                    if h.is_empty() {
                        continue;
                    }
                    if let Some(&t) = dst.index.get(&(s.j, r2, s.c)) {
                        let slot = &dst.slots[t];
                        for (i, c) in alg.mul(h, &be) {
                            m.add_at(slot.offset + alg.pos(i), col, &c);
                        }
                    }
                }
            }
            // f after d_X
            if let Some(dx) = x.diff(s.j - 1) {
                for c2 in 0..dx.cols {
                    let h = dx.get(s.c, c2);
                    if h.is_empty() {
                        continue;
                    }
                    if let Some(&t) = dst.index.get(&(s.j - 1, s.r, c2)) {
                        let slot = &dst.slots[t];
                        for (i, c) in elt_scale(&alg.mul(&be, h), &sign) {
                            m.add_at(slot.offset + alg.pos(i), col, &c);
                        }
                    }
                }
            }
        }
    }
    (src, dst, m)
}

fn sparse_unit(b: usize) -> Vec<(usize, Q)> {
    vec![(b, Q::one())]
}

/// `dim H^k Hom(X, Y) = dim Hom_K(X, Y[k])`.
pub fn hom_complex_dim(alg: &FdAlgebra, x: &ProjComplex, y: &ProjComplex, k: i64) -> usize {
    let (src, _, d) = hom_differential(alg, x, y, k);
    if src.dim == 0 {
        return 0;
    }
    let (_, _, dprev) = hom_differential(alg, x, y, k - 1);
    src.dim - d.rank() - dprev.rank()
}

/// Cycles and boundaries in `Hom^k`, with representatives of cohomology.
pub struct HomCohomology {
    pub layout: HomLayout,
    pub cycles: Vec<Vec<Q>>,
    pub boundaries: Vec<Vec<Q>>,
    /// Cycles whose classes form a basis of `H^k`.
    pub reps: Vec<Vec<Q>>,
    solver: CoordSolver,
}

impl HomCohomology {
    pub fn new(alg: &FdAlgebra, x: &ProjComplex, y: &ProjComplex, k: i64) -> Self {
        let (layout, _, d) = hom_differential(alg, x, y, k);
        let (_, _, dprev) = hom_differential(alg, x, y, k - 1);
        let cycles = if layout.dim == 0 {
            Vec::new()
        } else if d.rows() == 0 {
            unit_basis(layout.dim)
        } else {
            d.kernel()
        };
        let boundaries = Echelon::from_vectors(layout.dim, (0..dprev.cols()).map(|j| dprev.column(j))).basis();
        Self::from_parts(layout, cycles, boundaries, Vec::new())
    }

    /// Like `new`, but representatives are preferably taken from `preferred`
    /// (cycles given in layout coordinates).
    fn from_parts(layout: HomLayout, cycles: Vec<Vec<Q>>, boundaries: Vec<Vec<Q>>, preferred: Vec<Vec<Q>>) -> Self {
        let mut ech = Echelon::from_vectors(layout.dim, boundaries.iter().cloned());
        let mut reps = Vec::new();
        for z in preferred.into_iter().chain(cycles.iter().cloned()) {
            if ech.insert(z.clone()) {
                reps.push(z);
            }
        }
        let mut all = reps.clone();
        all.extend(boundaries.iter().cloned());
        let solver = CoordSolver::new(layout.dim, &all);
        HomCohomology { layout, cycles, boundaries, reps, solver }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Class of a cycle in the basis `reps`.
    pub fn class_of(&self, v: &[Q]) -> Option<Vec<Q>> {
        let mut c = self.solver.solve(v)?;
        c.truncate(self.reps.len());
        Some(c)
    }
}

fn unit_basis(n: usize) -> Vec<Vec<Q>> {
    (0..n)
        .map(|i| {
            let mut u = vec![Q::zero(); n];
            u[i] = Q::one();
            u
        })
        .collect()
}

/// Whether two bounded complexes of projectives are homotopy equivalent.
/// Both are minimized; minimal complexes are homotopy equivalent iff they
/// are isomorphic, which is detected by a random degree-zero chain map with
/// invertible part modulo the radical in every degree. A negative answer
/// after `tries` seeds is reported as `false`.
pub fn complexes_isomorphic(alg: &FdAlgebra, x: &ProjComplex, y: &ProjComplex, tries: u64) -> bool {
    let (x, y) = (x.minimize(alg), y.minimize(alg));
    if x.signature() != y.signature() {
        return false;
    }
    if x.is_zero() {
        return true;
    }
    let (layout, _, d) = hom_differential(alg, &x, &y, 0);
    let cycles = if d.rows() == 0 { unit_basis(layout.dim) } else { d.kernel() };
    for seed in 0..tries {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut v = vec![Q::zero(); layout.dim];
        for z in &cycles {
            let c = q(rng.gen_range(-7..=7));
            if c.is_zero() {
                continue;
            }
            for (a, b) in v.iter_mut().zip(z) {
                *a += &c * b;
            }
        }
        let f = layout.to_chain_map(alg, &x, &y, &v);
        if f.scalar_parts(&x, &y).iter().all(|m| m.rows() == 0 || m.inverse().is_some()) {
            return true;
        }
    }
    false
}

/// `End_K(X_1 + ... + X_m)` for pairwise non-isomorphic indecomposable
/// complexes with split local endomorphism rings.
pub fn end_algebra_of_complexes(alg: &FdAlgebra, name: &str, xs: &[ProjComplex]) -> Result<FdAlgebra, BqaError> {
    let m = xs.len();
    let mut homs: Vec<Vec<HomCohomology>> = Vec::with_capacity(m);
    for s in 0..m {
        let mut row = Vec::with_capacity(m);
        for t in 0..m {
            let h = HomCohomology::new(alg, &xs[s], &xs[t], 0);
            let h = if s == t { radical_reps(alg, &xs[s], h)? } else { h };
            row.push(h);
        }
        homs.push(row);
    }
    // radical basis of Hom(X_s, X_t) in H^0 coordinates
    let rad: Vec<Vec<Vec<Vec<Q>>>> = (0..m)
        .map(|s| {
            (0..m)
                .map(|t| {
                    let h = &homs[s][t];
                    let skip = (s == t) as usize;
                    (skip..h.dim()).map(|i| unit_vec(h.dim(), i)).collect()
                })
                .collect()
        })
        .collect();
    let vertices = (0..m).map(|i| format!("X{}", i + 1)).collect();
    let mut failure = None;
    let out = FdAlgebra::from_composition(name, vertices, &rad, |s, t, u, psi, phi| {
        let f = homs[s][t].layout.to_chain_map(alg, &xs[s], &xs[t], &combine(&homs[s][t].reps, phi));
        let g = homs[t][u].layout.to_chain_map(alg, &xs[t], &xs[u], &combine(&homs[t][u].reps, psi));
        let gf = ChainMap::compose(alg, &xs[s], &xs[t], &xs[u], &g, &f);
        let v = homs[s][u].layout.from_chain_map(alg, &xs[s], &gf);
        match homs[s][u].class_of(&v) {
            Some(c) => c,
            None => {
                failure = Some(format!("composite X{}->X{}->X{} is not a cycle", s + 1, t + 1, u + 1));
                vec![Q::zero(); homs[s][u].dim()]
            }
        }
    })?;
    if let Some(f) = failure {
        return Err(BqaError::Invalid(f));
    }
    Ok(out)
}

fn unit_vec(n: usize, i: usize) -> Vec<Q> {
    let mut u = vec![Q::zero(); n];
    u[i] = Q::one();
    u
}

fn combine(reps: &[Vec<Q>], coefs: &[Q]) -> Vec<Q> {
    let n = reps.first().map_or(0, |r| r.len());
    let mut v = vec![Q::zero(); n];
    for (r, c) in reps.iter().zip(coefs) {
        if c.is_zero() {
            continue;
        }
        for (a, b) in v.iter_mut().zip(r) {
            *a += c * b;
        }
    }
    v
}

/// Re-chooses the `H^0` basis of `End(X)` as the identity followed by
/// radical elements. For an indecomposable minimal complex the radical
/// consists of the maps with nilpotent part modulo the radical of `A`;
/// such a part has trace zero, so subtracting a multiple of the identity
/// lands in the radical.
fn radical_reps(alg: &FdAlgebra, x: &ProjComplex, h: HomCohomology) -> Result<HomCohomology, BqaError> {
    let id = h.layout.from_chain_map(alg, x, &ChainMap::identity(x));
    let total = Q::from_integer(x.size().into());
    let mut preferred = vec![id.clone()];
    for z in &h.reps {
        let f = h.layout.to_chain_map(alg, x, x, z);
        let tr: Q = f.scalar_parts(x, x).iter().map(trace).fold(Q::zero(), |a, b| a + b);
        let c = tr / &total;
        preferred.push(z.iter().zip(&id).map(|(a, b)| a - &c * b).collect());
    }
    let out = HomCohomology::from_parts(h.layout, h.cycles, h.boundaries, preferred);
    if out.reps.first() != Some(&id) {
        return Err(BqaError::Invalid("identity is null-homotopic".into()));
    }
    // nilpotency of the scalar parts, the local-ring requirement
    for z in &out.reps[1..] {
        let f = out.layout.to_chain_map(alg, x, x, z);
        for s in f.scalar_parts(x, x) {
            let n = s.rows();
            let mut p = s.clone();
            for _ in 0..n {
                p = p.mul(&s);
            }
            if n > 0 && !p.is_zero() {
                return Err(BqaError::NotBasicSplit("complex".into(), out.reps.len()));
            }
        }
    }
    Ok(out)
}

fn trace(m: &Matrix) -> Q {
    (0..m.rows().min(m.cols())).map(|i| m.get(i, i).clone()).fold(Q::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bqa::algebra::elt_basis;
    use crate::bqa::auslander::build_auslander_algebra;

    fn two_term(alg: &FdAlgebra, u: usize, w: usize, lo: i64) -> ProjComplex {
        let mut d = PMat::zeros(1, 1);
        d.set(0, 0, elt_basis(alg.block(u, w)[0]));
        ProjComplex { lo, terms: vec![vec![u], vec![w]], diffs: vec![d] }
    }

    #[test]
    fn stalk_homs_are_blocks() {
        let a = build_auslander_algebra(3, 2).unwrap();
        for u in 0..a.num_vertices() {
            for w in 0..a.num_vertices() {
                let x = ProjComplex::stalk(vec![u], 0);
                let y = ProjComplex::stalk(vec![w], 0);
                assert_eq!(hom_complex_dim(&a, &x, &y, 0), a.block(u, w).len());
                assert_eq!(hom_complex_dim(&a, &x, &y, 1), 0);
            }
        }
    }

    #[test]
    fn linear_a4_complexes() {
        let a = build_auslander_algebra(4, 1).unwrap();
        let c = two_term(&a, 2, 3, -1);
        c.check(&a).unwrap();
        let p4 = ProjComplex::stalk(vec![3], 0);
        let p1 = ProjComplex::stalk(vec![0], 0);
        assert_eq!(hom_complex_dim(&a, &p4, &c, 0), 1);
        assert_eq!(hom_complex_dim(&a, &c, &p4, 0), 0);
        assert_eq!(hom_complex_dim(&a, &p1, &c, 0), 0);
        assert_eq!(hom_complex_dim(&a, &c, &c, 0), 1);
        assert!(complexes_isomorphic(&a, &c, &c.shift(2).shift(-2), 3));
        assert!(!complexes_isomorphic(&a, &c, &two_term(&a, 1, 3, -1), 3));
    }

    #[test]
    fn end_of_projective_stalks_is_algebra() {
        let a = build_auslander_algebra(3, 2).unwrap();
        let xs: Vec<ProjComplex> = (0..a.num_vertices()).map(|v| ProjComplex::stalk(vec![v], 0)).collect();
        let e = end_algebra_of_complexes(&a, "E", &xs).unwrap();
        e.check_associative().unwrap();
        assert_eq!(e.cartan(), a.cartan());
        assert!(crate::bqa::iso::iso_test(&e, &a).unwrap().is_iso());
    }
}
