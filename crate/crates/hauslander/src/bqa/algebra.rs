//! Finite-dimensional algebras given by structure constants on a basis of
//! paths between vertices.
//!
//! Basis element `i` has a source and a target vertex; the product `b * a`
//! is the composite "first `a`, then `b`" and is only nonzero when
//! `tgt(a) = src(b)`. Indices `0..num_vertices` are the vertex idempotents.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num::{One, Zero};
use serde::Serialize;

use super::BqaError;
use crate::linalg::{CoordSolver, Echelon, Q};

/// Sparse element: sorted `(basis index, coefficient)` pairs, no zeros.
pub type Elt = Vec<(usize, Q)>;

pub fn elt_basis(i: usize) -> Elt {
    vec![(i, Q::one())]
}

pub fn elt_scale(x: &Elt, s: &Q) -> Elt {
    if s.is_zero() {
        return Vec::new();
    }
    x.iter().map(|(i, c)| (*i, c * s)).collect()
}

pub fn elt_add(x: &Elt, y: &Elt) -> Elt {
    let mut m: BTreeMap<usize, Q> = x.iter().cloned().collect();
    for (i, c) in y {
        *m.entry(*i).or_insert_with(Q::zero) += c;
    }
    m.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub fn elt_sub(x: &Elt, y: &Elt) -> Elt {
    elt_add(x, &elt_scale(y, &-Q::one()))
}

pub fn elt_from_map(m: BTreeMap<usize, Q>) -> Elt {
    m.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub fn sparse(v: &[Q]) -> Elt {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

pub fn elt_coef(x: &Elt, i: usize) -> Q {
    x.iter().find(|(j, _)| *j == i).map(|(_, c)| c.clone()).unwrap_or_else(Q::zero)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisElem {
    pub src: usize,
    pub tgt: usize,
    pub label: String,
    pub degree: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub src: usize,
    pub tgt: usize,
    pub label: String,
}

/// Arrows and, for each basis element, a path word in traversal order.
#[derive(Clone, Debug)]
pub struct PathData {
    pub arrows: Vec<Arrow>,
    pub words: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct FdAlgebra {
    pub name: String,
    vertices: Vec<String>,
    basis: Vec<BasisElem>,
    blocks: Vec<Vec<Vec<usize>>>,
    pos: Vec<usize>,
    table: HashMap<(usize, usize), Elt>,
    graded: bool,
    paths: Option<PathData>,
    gens: OnceLock<Vec<usize>>,
}

impl FdAlgebra {
    /// `radical` lists the non-idempotent basis elements; `table` maps
    /// `(b, a)` (indices into `radical`) to `b * a` over `radical`.
    pub fn new(
        name: impl Into<String>,
        vertices: Vec<String>,
        radical: Vec<BasisElem>,
        table: HashMap<(usize, usize), Elt>,
    ) -> Result<Self, BqaError> {
        let nv = vertices.len();
        let mut basis: Vec<BasisElem> = (0..nv)
            .map(|v| BasisElem { src: v, tgt: v, label: format!("e{}", vertices[v]), degree: 0 })
            .collect();
        for r in &radical {
            if r.src >= nv || r.tgt >= nv {
                return Err(BqaError::Invalid(format!("basis element {} has bad endpoints", r.label)));
            }
        }
        basis.extend(radical);
        let shifted: HashMap<(usize, usize), Elt> = table
            .into_iter()
            .map(|((b, a), x)| {
                let x: Elt = x.into_iter().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i + nv, c)).collect();
                ((b + nv, a + nv), x)
            })
            .filter(|(_, x)| !x.is_empty())
            .collect();
        let mut alg = FdAlgebra {
            name: name.into(),
            vertices,
            basis,
            blocks: Vec::new(),
            pos: Vec::new(),
            table: shifted,
            graded: false,
            paths: None,
            gens: OnceLock::new(),
        };
        alg.index_blocks();
        for (&(b, a), x) in &alg.table {
            let (bb, ab) = (&alg.basis[b], &alg.basis[a]);
            if ab.tgt != bb.src {
                return Err(BqaError::Invalid(format!("product {b}*{a} of non-composable elements")));
            }
            for (i, _) in x {
                let e = &alg.basis[*i];
                if e.src != ab.src || e.tgt != bb.tgt || *i < nv {
                    return Err(BqaError::Invalid(format!("product {b}*{a} lands outside its block")));
                }
            }
        }
        Ok(alg)
    }

    fn index_blocks(&mut self) {
        let nv = self.vertices.len();
        self.blocks = vec![vec![Vec::new(); nv]; nv];
        self.pos = vec![0; self.basis.len()];
        for (i, b) in self.basis.iter().enumerate() {
            let blk = &mut self.blocks[b.src][b.tgt];
            self.pos[i] = blk.len();
            blk.push(i);
        }
    }

    pub fn with_grading(mut self) -> Self {
        self.graded = true;
        self
    }

    pub fn with_paths(mut self, paths: PathData) -> Self {
        assert_eq!(paths.words.len(), self.basis.len());
        self.paths = Some(paths);
        self
    }

    pub fn set_degrees(&mut self, degrees: &[i32]) {
        for (b, &d) in self.basis.iter_mut().zip(degrees) {
            b.degree = d;
        }
        self.graded = true;
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn paths(&self) -> Option<&PathData> {
        self.paths.as_ref()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }

    pub fn elem(&self, i: usize) -> &BasisElem {
        &self.basis[i]
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        i < self.vertices.len()
    }

    /// Basis indices with the given source and target.
    pub fn block(&self, src: usize, tgt: usize) -> &[usize] {
        &self.blocks[src][tgt]
    }

    /// Position of a basis element inside its block.
    pub fn pos(&self, i: usize) -> usize {
        self.pos[i]
    }

    pub fn radical_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices.len()..self.basis.len()
    }

    pub fn cartan(&self) -> Vec<Vec<usize>> {
        let nv = self.num_vertices();
        (0..nv).map(|s| (0..nv).map(|t| self.blocks[s][t].len()).collect()).collect()
    }

    /// Product of basis elements: `a` first, then `b`.
    pub fn mul_basis(&self, b: usize, a: usize) -> Elt {
        let (bb, ab) = (&self.basis[b], &self.basis[a]);
        if ab.tgt != bb.src {
            return Vec::new();
        }
        if self.is_idempotent(a) {
            return elt_basis(b);
        }
        if self.is_idempotent(b) {
            return elt_basis(a);
        }
        self.table.get(&(b, a)).cloned().unwrap_or_default()
    }

    pub fn mul(&self, y: &Elt, x: &Elt) -> Elt {
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (b, cb) in y {
            for (a, ca) in x {
                if self.basis[*a].tgt != self.basis[*b].src {
                    continue;
                }
                let f = cb * ca;
                for (i, c) in self.mul_basis(*b, *a) {
                    *acc.entry(i).or_insert_with(Q::zero) += &f * c;
                }
            }
        }
        elt_from_map(acc)
    }

    /// Dense coordinates of an element lying in block `(src, tgt)`.
    pub fn to_block_vec(&self, x: &Elt, src: usize, tgt: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.blocks[src][tgt].len()];
        for (i, c) in x {
            debug_assert!(self.basis[*i].src == src && self.basis[*i].tgt == tgt);
            v[self.pos[*i]] = c.clone();
        }
        v
    }

    pub fn from_block_vec(&self, v: &[Q], src: usize, tgt: usize) -> Elt {
        self.blocks[src][tgt]
            .iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (*i, c.clone()))
            .collect()
    }

    /// The opposite algebra on the same basis.
    pub fn opposite(&self) -> FdAlgebra {
        let nv = self.num_vertices();
        let radical = self.basis[nv..]
            .iter()
            .map(|b| BasisElem { src: b.tgt, tgt: b.src, label: format!("{}^op", b.label), degree: b.degree })
            .collect();
        let table = self
            .table
            .iter()
            .map(|(&(b, a), x)| ((a - nv, b - nv), x.iter().map(|(i, c)| (i - nv, c.clone())).collect()))
            .collect();
        let mut op = FdAlgebra::new(format!("{}^op", self.name), self.vertices.clone(), radical, table)
            .expect("opposite of a valid algebra");
        op.graded = self.graded;
        op
    }

    /// Checks `(c b) a = c (b a)` on all composable basis triples.
    pub fn check_associative(&self) -> Result<(), BqaError> {
        let n = self.dim();
        for a in self.radical_indices() {
            for b in self.radical_indices() {
                if self.basis[a].tgt != self.basis[b].src {
                    continue;
                }
                let ba = self.mul_basis(b, a);
                for c in self.radical_indices() {
                    if self.basis[b].tgt != self.basis[c].src {
                        continue;
                    }
                    let left = self.mul(&self.mul_basis(c, b), &elt_basis(a));
                    let right = self.mul(&elt_basis(c), &ba);
                    if left != right {
                        return Err(BqaError::Invalid(format!("associativity fails on ({c},{b},{a}) of {n}")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks that products respect the grading.
    pub fn check_grading(&self) -> Result<(), BqaError> {
        for (&(b, a), x) in &self.table {
            let deg = self.basis[a].degree + self.basis[b].degree;
            if x.iter().any(|(i, _)| self.basis[*i].degree != deg) {
                return Err(BqaError::Invalid(format!("product {b}*{a} breaks the grading")));
            }
        }
        Ok(())
    }

    /// `dim e_v A e_v = 1` for every vertex.
    pub fn check_basic_split(&self) -> Result<(), BqaError> {
        for v in 0..self.num_vertices() {
            if self.blocks[v][v].len() != 1 {
                return Err(BqaError::NotBasicSplit(self.vertices[v].clone(), self.blocks[v][v].len()));
            }
        }
        Ok(())
    }

    /// Every block has dimension at most one.
    pub fn is_thin(&self) -> bool {
        self.blocks.iter().all(|row| row.iter().all(|b| b.len() <= 1))
    }

    /// Smallest `N` with `rad^N = 0`, if the radical is nilpotent.
    pub fn loewy_length(&self) -> Result<usize, BqaError> {
        let rad: Vec<Elt> = self.radical_indices().map(elt_basis).collect();
        let mut power = rad.clone();
        let mut n = 1;
        while !power.is_empty() {
            if n > self.dim() {
                return Err(BqaError::NotNilpotent);
            }
            let mut span = Echelon::new(self.dim());
            for p in &power {
                for r in &rad {
                    let x = self.mul(r, p);
                    if !x.is_empty() {
                        span.insert(self.dense(&x));
                    }
                }
            }
            power = span.basis().iter().map(|v| sparse(v)).collect();
            n += 1;
        }
        Ok(n)
    }

    /// Coordinates over the whole basis.
    pub fn dense(&self, x: &Elt) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        for (i, c) in x {
            v[*i] = c.clone();
        }
        v
    }

    /// Sum of two algebras with disjoint vertex sets.
    pub fn product(&self, other: &FdAlgebra) -> FdAlgebra {
        let (nv1, nv2) = (self.num_vertices(), other.num_vertices());
        let r1 = self.dim() - nv1;
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().cloned());
        let mut radical: Vec<BasisElem> = self.basis[nv1..].to_vec();
        radical.extend(other.basis[nv2..].iter().map(|b| BasisElem {
            src: b.src + nv1,
            tgt: b.tgt + nv1,
            ..b.clone()
        }));
        let mut table = HashMap::new();
        for (&(b, a), x) in &self.table {
            table.insert((b - nv1, a - nv1), x.iter().map(|(i, c)| (i - nv1, c.clone())).collect());
        }
        for (&(b, a), x) in &other.table {
            table.insert(
                (b - nv2 + r1, a - nv2 + r1),
                x.iter().map(|(i, c)| (i - nv2 + r1, c.clone())).collect(),
            );
        }
        FdAlgebra::new(format!("{}x{}", self.name, other.name), vertices, radical, table).expect("valid")
    }

    /// Radical basis elements spanning a complement of `rad^2`; they
    /// generate the radical.
    pub fn generators(&self) -> &[usize] {
        self.gens.get_or_init(|| {
            let nv = self.num_vertices();
            let mut sq: HashMap<(usize, usize), Echelon> = HashMap::new();
            for x in self.table.values() {
                let e = &self.basis[x[0].0];
                let blk = sq.entry((e.src, e.tgt)).or_insert_with(|| Echelon::new(self.blocks[e.src][e.tgt].len()));
                blk.insert(self.to_block_vec(x, e.src, e.tgt));
            }
            let mut gens = Vec::new();
            for s in 0..nv {
                for t in 0..nv {
                    let blk = &self.blocks[s][t];
                    let mut ech = sq.remove(&(s, t)).unwrap_or_else(|| Echelon::new(blk.len()));
                    for &i in blk {
                        if self.is_idempotent(i) {
                            continue;
                        }
                        let mut v = vec![Q::zero(); blk.len()];
                        v[self.pos[i]] = Q::one();
                        if ech.insert(v) {
                            gens.push(i);
                        }
                    }
                }
            }
            gens
        })
    }

    /// Builds an algebra from abstract morphism spaces: `rad[s][t]` is a
    /// basis of the radical part of the space from `s` to `t`, written in
    /// some ambient coordinates, and `compose(s, t, u, psi, phi)` returns
    /// `psi after phi` in the ambient coordinates of `(s, u)`.
    pub fn from_composition<F>(
        name: impl Into<String>,
        vertices: Vec<String>,
        rad: &[Vec<Vec<Vec<Q>>>],
        mut compose: F,
    ) -> Result<FdAlgebra, BqaError>
    where
        F: FnMut(usize, usize, usize, &[Q], &[Q]) -> Vec<Q>,
    {
        let nv = vertices.len();
        let mut radical = Vec::new();
        let mut index: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); nv]; nv];
        for s in 0..nv {
            for t in 0..nv {
                for k in 0..rad[s][t].len() {
                    index[s][t].push(radical.len());
                    radical.push(BasisElem {
                        src: s,
                        tgt: t,
                        label: format!("{}->{}#{}", vertices[s], vertices[t], k),
                        degree: 0,
                    });
                }
            }
        }
        let mut solvers: HashMap<(usize, usize), CoordSolver> = HashMap::new();
        let mut table = HashMap::new();
        for s in 0..nv {
            for t in 0..nv {
                for u in 0..nv {
                    if rad[s][t].is_empty() || rad[t][u].is_empty() {
                        continue;
                    }
                    for (a, phi) in rad[s][t].iter().enumerate() {
                        for (b, psi) in rad[t][u].iter().enumerate() {
                            let prod = compose(s, t, u, psi, phi);
                            if prod.iter().all(|x| x.is_zero()) {
                                continue;
                            }
                            let solver = solvers
                                .entry((s, u))
                                .or_insert_with(|| CoordSolver::new(prod.len(), &rad[s][u]));
                            let c = solver.solve(&prod).ok_or_else(|| {
                                BqaError::Invalid(format!(
                                    "composite {}->{}->{} leaves the radical span",
                                    vertices[s], vertices[t], vertices[u]
                                ))
                            })?;
                            let x: Elt = c
                                .into_iter()
                                .enumerate()
                                .filter(|(_, c)| !c.is_zero())
                                .map(|(k, c)| (index[s][u][k], c))
                                .collect();
                            if !x.is_empty() {
                                table.insert((index[t][u][b], index[s][t][a]), x);
                            }
                        }
                    }
                }
            }
        }
        FdAlgebra::new(name, vertices, radical, table)
    }

    pub(crate) fn raw_table(&self) -> &HashMap<(usize, usize), Elt> {
        &self.table
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    /// `k(1 -> 2 -> 3)` with basis a, b, ba.
    pub(crate) fn a3() -> FdAlgebra {
        let v = vec!["1".into(), "2".into(), "3".into()];
        let rad = vec![
            BasisElem { src: 0, tgt: 1, label: "a".into(), degree: 1 },
            BasisElem { src: 1, tgt: 2, label: "b".into(), degree: 1 },
            BasisElem { src: 0, tgt: 2, label: "ba".into(), degree: 2 },
        ];
        let mut t = HashMap::new();
        t.insert((1, 0), vec![(2, q(1))]);
        FdAlgebra::new("A3", v, rad, t).unwrap().with_grading()
    }

    #[test]
    fn a3_basics() {
        let a = a3();
        assert_eq!(a.dim(), 6);
        assert_eq!(a.cartan(), vec![vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]]);
        a.check_associative().unwrap();
        a.check_grading().unwrap();
        a.check_basic_split().unwrap();
        assert!(a.is_thin());
        assert_eq!(a.loewy_length().unwrap(), 3);
        assert_eq!(a.mul_basis(4, 3), elt_basis(5));
        assert!(a.mul_basis(3, 4).is_empty());
        assert_eq!(a.mul_basis(3, 0), elt_basis(3));
        let op = a.opposite();
        assert_eq!(op.mul_basis(3, 4), elt_basis(5));
        op.check_associative().unwrap();
    }
}
