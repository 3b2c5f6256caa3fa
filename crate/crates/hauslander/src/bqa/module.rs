//! Right modules over an [`FdAlgebra`], given vertexwise.
//!
//! A basis element `b: s -> t` acts by a linear map `M(t) -> M(s)`, so
//! `act(b * a) = act(a) act(b)`. The projective `P_v` has `P_v(w)` spanned
//! by the block `(w, v)` with `x . b = x * b`.

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::algebra::FdAlgebra;
use super::BqaError;
use crate::linalg::{CoordSolver, Echelon, Matrix, Q};

/// Dimension vector and one matrix per arrow, mapping `M(tgt) -> M(src)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
}

#[derive(Serialize, Deserialize)]
pub struct QuiverRepJson {
    pub schema: u32,
    pub dims: Vec<usize>,
    /// Row-major matrices with rational entries as strings.
    pub maps: Vec<Vec<Vec<String>>>,
}

impl QuiverRep {
    pub fn to_json(&self) -> QuiverRepJson {
        let maps = self
            .maps
            .iter()
            .map(|m| (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect())
            .collect();
        QuiverRepJson { schema: 1, dims: self.dims.clone(), maps }
    }

    pub fn from_json(j: &QuiverRepJson) -> Result<Self, BqaError> {
        let mut maps = Vec::new();
        for m in &j.maps {
            let rows: Result<Vec<Vec<Q>>, _> =
                m.iter().map(|r| r.iter().map(|x| x.parse::<Q>()).collect()).collect();
            maps.push(Matrix::from_rows(rows.map_err(|e| BqaError::Invalid(e.to_string()))?));
        }
        Ok(QuiverRep { dims: j.dims.clone(), maps })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    pub dims: Vec<usize>,
    /// One matrix per basis element of the algebra.
    pub act: Vec<Matrix>,
}

/// A homomorphism, one matrix `M(v) -> N(v)` per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMap {
    pub blocks: Vec<Matrix>,
}

impl ModMap {
    pub fn zero(src: &Module, dst: &Module) -> Self {
        ModMap { blocks: src.dims.iter().zip(&dst.dims).map(|(&m, &n)| Matrix::zeros(n, m)).collect() }
    }

    pub fn identity(m: &Module) -> Self {
        ModMap { blocks: m.dims.iter().map(|&k| Matrix::identity(k)).collect() }
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &ModMap) -> ModMap {
        ModMap { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn add(&self, other: &ModMap) -> ModMap {
        ModMap { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, s: &Q) -> ModMap {
        ModMap { blocks: self.blocks.iter().map(|a| a.scale(s)).collect() }
    }

    /// Entries concatenated vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<Q> {
        let mut v = Vec::new();
        for b in &self.blocks {
            for i in 0..b.rows() {
                v.extend(b.row(i).iter().cloned());
            }
        }
        v
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }

    pub fn trace(&self) -> Q {
        let mut t = Q::zero();
        for b in &self.blocks {
            for i in 0..b.rows().min(b.cols()) {
                t += b.get(i, i);
            }
        }
        t
    }
}

impl Module {
    pub fn zero(alg: &FdAlgebra) -> Self {
        Module { dims: vec![0; alg.num_vertices()], act: alg.basis().iter().map(|_| Matrix::zeros(0, 0)).collect() }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// `P_v`.
    pub fn projective(alg: &FdAlgebra, v: usize) -> Self {
        Self::projective_sum(alg, &[v])
    }

    /// `P_{v_1} + ... + P_{v_k}`; `M(w)` lists the summands in order.
    pub fn projective_sum(alg: &FdAlgebra, vs: &[usize]) -> Self {
        let nv = alg.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|w| vs.iter().map(|&v| alg.block(w, v).len()).sum()).collect();
        let act = alg
            .basis()
            .iter()
            .enumerate()
            .map(|(b, e)| {
                let (s, t) = (e.src, e.tgt);
                let mut m = Matrix::zeros(dims[s], dims[t]);
                let (mut ro, mut co) = (0, 0);
                for &v in vs {
                    for (j, &x) in alg.block(t, v).iter().enumerate() {
                        for (i, c) in alg.mul_basis(x, b) {
                            m.set(ro + alg.pos(i), co + j, c);
                        }
                    }
                    ro += alg.block(s, v).len();
                    co += alg.block(t, v).len();
                }
                m
            })
            .collect();
        Module { dims, act }
    }

    /// `I_v = D(e_v A)`, with `I_v(w)` dual to the block `(v, w)`.
    pub fn injective(alg: &FdAlgebra, v: usize) -> Self {
        let nv = alg.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|w| alg.block(v, w).len()).collect();
        let act = alg
            .basis()
            .iter()
            .enumerate()
            .map(|(b, e)| {
                let (s, t) = (e.src, e.tgt);
                let mut m = Matrix::zeros(dims[s], dims[t]);
                for (i, &y) in alg.block(v, s).iter().enumerate() {
                    for (k, c) in alg.mul_basis(b, y) {
                        m.set(i, alg.pos(k), c);
                    }
                }
                m
            })
            .collect();
        Module { dims, act }
    }

    pub fn simple(alg: &FdAlgebra, v: usize) -> Self {
        let nv = alg.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|w| (w == v) as usize).collect();
        let act = alg
            .basis()
            .iter()
            .enumerate()
            .map(|(b, e)| {
                if alg.is_idempotent(b) && e.src == v {
                    Matrix::identity(1)
                } else {
                    Matrix::zeros(dims[e.src], dims[e.tgt])
                }
            })
            .collect();
        Module { dims, act }
    }

    /// Extends arrow matrices along the path words of the algebra.
    pub fn from_rep(alg: &FdAlgebra, rep: &QuiverRep) -> Result<Self, BqaError> {
        let paths = alg.paths().ok_or_else(|| BqaError::NoPaths(alg.name.clone()))?;
        if rep.dims.len() != alg.num_vertices() || rep.maps.len() != paths.arrows.len() {
            return Err(BqaError::Invalid("representation does not match the quiver".into()));
        }
        for (a, m) in paths.arrows.iter().zip(&rep.maps) {
            if m.rows() != rep.dims[a.src] || m.cols() != rep.dims[a.tgt] {
                return Err(BqaError::Invalid(format!("arrow {} has a matrix of the wrong shape", a.label)));
            }
        }
        let act = alg
            .basis()
            .iter()
            .zip(&paths.words)
            .map(|(e, w)| {
                let mut m = Matrix::identity(rep.dims[e.src]);
                for &a in w {
                    m = m.mul(&rep.maps[a]);
                }
                m
            })
            .collect();
        let m = Module { dims: rep.dims.clone(), act };
        m.check(alg)?;
        Ok(m)
    }

    /// Verifies `act(b * a) = act(a) act(b)` for all basis pairs, which holds
    /// exactly when the defining relations act by zero.
    pub fn check(&self, alg: &FdAlgebra) -> Result<(), BqaError> {
        for a in alg.radical_indices() {
            for b in alg.radical_indices() {
                if alg.elem(a).tgt != alg.elem(b).src {
                    continue;
                }
                let prod = alg.mul_basis(b, a);
                let lhs = if prod.is_empty() {
                    Matrix::zeros(self.dims[alg.elem(a).src], self.dims[alg.elem(b).tgt])
                } else {
                    self.act_elt(alg, &prod)
                };
                let rhs = self.act[a].mul(&self.act[b]);
                if lhs != rhs {
                    return Err(BqaError::Invalid(format!(
                        "module fails on {} * {}",
                        alg.elem(b).label,
                        alg.elem(a).label
                    )));
                }
            }
        }
        Ok(())
    }

    /// Action of an element lying in a single block.
    pub fn act_elt(&self, alg: &FdAlgebra, x: &[(usize, Q)]) -> Matrix {
        let Some((first, _)) = x.first() else {
            return Matrix::zeros(0, 0);
        };
        let e = alg.elem(*first);
        let mut m = Matrix::zeros(self.dims[e.src], self.dims[e.tgt]);
        for (i, c) in x {
            m = m.add(&self.act[*i].scale(c));
        }
        m
    }

    pub fn direct_sum(alg: &FdAlgebra, parts: &[&Module]) -> Self {
        let nv = alg.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let act = alg
            .basis()
            .iter()
            .enumerate()
            .map(|(b, e)| {
                let mut m = Matrix::zeros(dims[e.src], dims[e.tgt]);
                let (mut ro, mut co) = (0, 0);
                for p in parts {
                    let a = &p.act[b];
                    for i in 0..a.rows() {
                        for j in 0..a.cols() {
                            if !a.get(i, j).is_zero() {
                                m.set(ro + i, co + j, a.get(i, j).clone());
                            }
                        }
                    }
                    ro += p.dims[e.src];
                    co += p.dims[e.tgt];
                }
                m
            })
            .collect();
        Module { dims, act }
    }

    /// `D M` as a module over `alg.opposite()`, which shares the basis.
    pub fn dual(&self) -> Module {
        Module { dims: self.dims.clone(), act: self.act.iter().map(|m| m.transpose()).collect() }
    }

    /// `rad M (v)`, the span of the generator images landing at `v`.
    pub fn radical_at(&self, alg: &FdAlgebra, v: usize) -> Echelon {
        let mut e = Echelon::new(self.dims[v]);
        for &g in alg.generators() {
            if alg.elem(g).src != v {
                continue;
            }
            let m = &self.act[g];
            for j in 0..m.cols() {
                e.insert(m.column(j));
            }
        }
        e
    }

    /// Unit vectors completing `rad M (v)` to `M(v)`, per vertex.
    pub fn top_generators(&self, alg: &FdAlgebra) -> Vec<Vec<Vec<Q>>> {
        (0..alg.num_vertices())
            .map(|v| {
                let mut e = self.radical_at(alg, v);
                let mut gens = Vec::new();
                for i in 0..self.dims[v] {
                    let mut u = vec![Q::zero(); self.dims[v]];
                    u[i] = Q::one();
                    if e.insert(u.clone()) {
                        gens.push(u);
                    }
                }
                gens
            })
            .collect()
    }

    /// Dimension vector of the top.
    pub fn top_dims(&self, alg: &FdAlgebra) -> Vec<usize> {
        (0..alg.num_vertices()).map(|v| self.dims[v] - self.radical_at(alg, v).rank()).collect()
    }

    /// Dimension vector of the socle, the common kernel of the generators.
    pub fn socle_dims(&self, alg: &FdAlgebra) -> Vec<usize> {
        (0..alg.num_vertices())
            .map(|v| {
                let rows: Vec<Vec<Q>> = alg
                    .generators()
                    .iter()
                    .filter(|&&g| alg.elem(g).tgt == v)
                    .flat_map(|&g| {
                        let m = &self.act[g];
                        (0..m.rows()).map(|i| m.row(i).to_vec()).collect::<Vec<_>>()
                    })
                    .collect();
                if rows.is_empty() {
                    self.dims[v]
                } else {
                    self.dims[v] - Matrix::from_rows(rows).rank()
                }
            })
            .collect()
    }

    /// The submodule with the given vertexwise bases (assumed closed), and
    /// its inclusion.
    pub fn submodule(&self, alg: &FdAlgebra, bases: Vec<Vec<Vec<Q>>>) -> Result<(Module, ModMap), BqaError> {
        let nv = alg.num_vertices();
        let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
        let solvers: Vec<CoordSolver> = (0..nv).map(|v| CoordSolver::new(self.dims[v], &bases[v])).collect();
        let mut act = Vec::with_capacity(alg.dim());
        for (b, e) in alg.basis().iter().enumerate() {
            let (s, t) = (e.src, e.tgt);
            let mut cols = Vec::with_capacity(dims[t]);
            for u in &bases[t] {
                let img = self.act[b].mul_vec(u);
                let c = solvers[s]
                    .solve(&img)
                    .ok_or_else(|| BqaError::Invalid("subspace is not a submodule".into()))?;
                cols.push(c);
            }
            act.push(Matrix::from_cols(dims[s], &cols));
        }
        let incl = ModMap { blocks: (0..nv).map(|v| Matrix::from_cols(self.dims[v], &bases[v])).collect() };
        Ok((Module { dims, act }, incl))
    }

    /// Kernel of `f: self -> N` with its inclusion.
    pub fn kernel_of(&self, alg: &FdAlgebra, f: &ModMap) -> Result<(Module, ModMap), BqaError> {
        let bases = f
            .blocks
            .iter()
            .zip(&self.dims)
            .map(|(m, &k)| if m.rows() == 0 { identity_basis(k) } else { m.kernel() })
            .collect();
        self.submodule(alg, bases)
    }

    /// Projective cover `P -> M`: the summand vertices (one per top
    /// generator) and the covering map.
    pub fn projective_cover(&self, alg: &FdAlgebra) -> (Vec<usize>, Module, ModMap) {
        let gens = self.top_generators(alg);
        let mut vs = Vec::new();
        let mut gvecs = Vec::new();
        for (v, gs) in gens.into_iter().enumerate() {
            for g in gs {
                vs.push(v);
                gvecs.push(g);
            }
        }
        let p = Module::projective_sum(alg, &vs);
        let nv = alg.num_vertices();
        let blocks = (0..nv)
            .map(|w| {
                let mut cols = Vec::with_capacity(p.dims[w]);
                for (&v, g) in vs.iter().zip(&gvecs) {
                    for &x in alg.block(w, v) {
                        cols.push(self.act[x].mul_vec(g));
                    }
                }
                Matrix::from_cols(self.dims[w], &cols)
            })
            .collect();
        (vs, p, ModMap { blocks })
    }

    /// `I_v` is projective iff its top is simple, say `S_w`, and
    /// `dim I_v = dim P_w`.
    pub fn is_projective_indecomposable(&self, alg: &FdAlgebra) -> Option<usize> {
        let top = self.top_dims(alg);
        if top.iter().sum::<usize>() != 1 {
            return None;
        }
        let w = top.iter().position(|&k| k == 1)?;
        let pw: usize = (0..alg.num_vertices()).map(|u| alg.block(u, w).len()).sum();
        (pw == self.total_dim()).then_some(w)
    }

    /// Whether `f: self -> N` is a module homomorphism for the generators.
    pub fn is_hom(&self, alg: &FdAlgebra, n: &Module, f: &ModMap) -> bool {
        alg.generators().iter().all(|&b| {
            let e = alg.elem(b);
            f.blocks[e.src].mul(&self.act[b]) == n.act[b].mul(&f.blocks[e.tgt])
        })
    }
}

fn identity_basis(k: usize) -> Vec<Vec<Q>> {
    (0..k)
        .map(|i| {
            let mut u = vec![Q::zero(); k];
            u[i] = Q::one();
            u
        })
        .collect()
}

/// Basis of `Hom_A(M, N)` from the intertwiner equations on the generators.
pub fn hom_space(alg: &FdAlgebra, m: &Module, n: &Module) -> Vec<ModMap> {
    let nv = alg.num_vertices();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offset[nv];
    if unknowns == 0 {
        return Vec::new();
    }
    let var = |v: usize, i: usize, k: usize| offset[v] + i * m.dims[v] + k;
    let mut rows = Vec::new();
    for &b in alg.generators() {
        let e = alg.elem(b);
        let (s, t) = (e.src, e.tgt);
        let (mb, nb) = (&m.act[b], &n.act[b]);
        // f_s M_b - N_b f_t = 0, an n(s) x m(t) system
        for i in 0..n.dims[s] {
            for j in 0..m.dims[t] {
                let mut row = vec![Q::zero(); unknowns];
                let mut any = false;
                for k in 0..m.dims[s] {
                    let c = mb.get(k, j);
                    if !c.is_zero() {
                        row[var(s, i, k)] += c;
                        any = true;
                    }
                }
                for k in 0..n.dims[t] {
                    let c = nb.get(i, k);
                    if !c.is_zero() {
                        row[var(t, k, j)] -= c;
                        any = true;
                    }
                }
                if any {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() { identity_basis(unknowns) } else { Matrix::from_rows(rows).kernel() };
    kernel
        .into_iter()
        .map(|x| ModMap {
            blocks: (0..nv)
                .map(|v| {
                    let r: Vec<Vec<Q>> = (0..n.dims[v])
                        .map(|i| x[var(v, i, 0)..var(v, i, 0) + m.dims[v]].to_vec())
                        .collect();
                    if n.dims[v] == 0 {
                        Matrix::zeros(0, m.dims[v])
                    } else {
                        Matrix::from_rows(r)
                    }
                })
                .collect(),
        })
        .collect()
}

/// `End(M_1 + ... + M_k)` for pairwise non-isomorphic modules with local,
/// split endomorphism rings; the idempotents are the identities.
pub fn endo_algebra(alg: &FdAlgebra, name: &str, mods: &[Module]) -> Result<FdAlgebra, BqaError> {
    let k = mods.len();
    let mut rad: Vec<Vec<Vec<Vec<Q>>>> = vec![vec![Vec::new(); k]; k];
    for (s, ms) in mods.iter().enumerate() {
        for (t, mt) in mods.iter().enumerate() {
            let basis = hom_space(alg, ms, mt);
            let dim = Q::from_integer(ms.total_dim().into());
            let mut e = Echelon::new(ms.dims.iter().zip(&mt.dims).map(|(a, b)| a * b).sum());
            for f in basis {
                let f = if s == t { f.add(&ModMap::identity(ms).scale(&-(f.trace() / &dim))) } else { f };
                let flat = f.flatten();
                if flat.iter().any(|x| !x.is_zero()) && e.insert(flat.clone()) {
                    rad[s][t].push(flat);
                }
            }
            if s == t && rad[s][s].len() + 1 != hom_space(alg, ms, ms).len() {
                return Err(BqaError::NotBasicSplit(format!("summand {s}"), rad[s][s].len() + 1));
            }
        }
    }
    let unflatten = |v: &[Q], src: &Module, dst: &Module| -> ModMap {
        let mut off = 0;
        ModMap {
            blocks: src
                .dims
                .iter()
                .zip(&dst.dims)
                .map(|(&m, &n)| {
                    let mut b = Matrix::zeros(n, m);
                    for i in 0..n {
                        for j in 0..m {
                            b.set(i, j, v[off + i * m + j].clone());
                        }
                    }
                    off += n * m;
                    b
                })
                .collect(),
        }
    };
    let vertices = (0..k).map(|i| format!("M{}", i + 1)).collect();
    FdAlgebra::from_composition(name, vertices, &rad, |s, t, u, psi, phi| {
        let f = unflatten(phi, &mods[s], &mods[t]);
        let g = unflatten(psi, &mods[t], &mods[u]);
        g.compose(&f).flatten()
    })
}
