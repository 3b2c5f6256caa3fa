//! The higher Auslander algebras `A_n^d` of type A and their interval modules.

use std::collections::HashMap;

use num::One;

use super::algebra::{Arrow, BasisElem, FdAlgebra, PathData};
use super::module::QuiverRep;
use super::quiver::{BoundQuiver, Quiver, Relation};
use super::BqaError;
use crate::linalg::{Matrix, Q};
use crate::pathcomb::{enumerate_os, preceq_raw, OrderedSeq};

/// Default cap on `dim A_n^d`.
pub const DEFAULT_DIM_BUDGET: usize = 20_000;

fn vertex_list(n: usize, d: usize) -> Result<Vec<Vec<usize>>, BqaError> {
    if n < 2 || d < 1 {
        return Err(BqaError::Invalid(format!("A_n^d needs n >= 2, d >= 1 (got n={n}, d={d})")));
    }
    Ok(enumerate_os(n, d)
        .map_err(|e| BqaError::Invalid(e.to_string()))?
        .into_iter()
        .map(|x| x.entries().to_vec())
        .collect())
}

fn label(x: &[usize]) -> String {
    crate::pathcomb::compact_label(x)
}

/// Arrows `a_i(x): x -> x + e_i` of `Q^{n,d}`, ordered by `(x, i)`.
pub fn auslander_quiver(n: usize, d: usize) -> Result<(Quiver, Vec<Vec<usize>>), BqaError> {
    let verts = vertex_list(n, d)?;
    let idx: HashMap<&Vec<usize>, usize> = verts.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut arrows = Vec::new();
    for (s, x) in verts.iter().enumerate() {
        for i in 0..d {
            let mut y = x.clone();
            y[i] += 1;
            if let Some(&t) = idx.get(&y) {
                arrows.push(Arrow { src: s, tgt: t, label: format!("a{}({})", i + 1, label(x)) });
            }
        }
    }
    let labels = verts.iter().map(|v| label(v)).collect();
    Ok((Quiver::new(labels, arrows)?, verts))
}

/// `kQ^{n,d}` modulo commutativity squares and the zero relations where only
/// one route around a square exists.
pub fn auslander_bound_quiver(n: usize, d: usize) -> Result<BoundQuiver, BqaError> {
    let (quiver, verts) = auslander_quiver(n, d)?;
    let idx: HashMap<&Vec<usize>, usize> = verts.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let arrow_of: HashMap<(usize, usize), usize> =
        quiver.arrows.iter().enumerate().map(|(k, a)| ((a.src, a.tgt), k)).collect();
    let step = |x: &Vec<usize>, i: usize| -> Option<Vec<usize>> {
        let mut y = x.clone();
        y[i] += 1;
        idx.contains_key(&y).then_some(y)
    };
    let mut rels = Vec::new();
    for x in &verts {
        for i in 0..d {
            for j in i + 1..d {
                let mut z = x.clone();
                z[i] += 1;
                z[j] += 1;
                if !idx.contains_key(&z) {
                    continue;
                }
                let route = |first: usize| -> Option<Vec<usize>> {
                    let mid = step(x, first)?;
                    let a1 = arrow_of[&(idx[x], idx[&mid])];
                    let a2 = arrow_of[&(idx[&mid], idx[&z])];
                    Some(vec![a1, a2])
                };
                match (route(i), route(j)) {
                    (Some(p), Some(q)) => rels.push(Relation::commutativity(p, q)),
                    (Some(p), None) | (None, Some(p)) => rels.push(Relation::zero_path(p)),
                    (None, None) => {}
                }
            }
        }
    }
    BoundQuiver::new(quiver, rels)
}

/// `A_n^d` with basis `f_{wz}` for `z <= w` and `f_{uw} f_{wz} = f_{uz}` when `z <= u`.
pub fn build_auslander_algebra(n: usize, d: usize) -> Result<FdAlgebra, BqaError> {
    build_auslander_algebra_with_budget(n, d, DEFAULT_DIM_BUDGET)
}

pub fn build_auslander_algebra_with_budget(n: usize, d: usize, budget: usize) -> Result<FdAlgebra, BqaError> {
    let (quiver, verts) = auslander_quiver(n, d)?;
    let nv = verts.len();
    let mut radical = Vec::new();
    let mut pair_index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut words = vec![Vec::new(); nv];
    let idx: HashMap<&Vec<usize>, usize> = verts.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let arrow_of: HashMap<(usize, usize), usize> =
        quiver.arrows.iter().enumerate().map(|(k, a)| ((a.src, a.tgt), k)).collect();
    for (s, z) in verts.iter().enumerate() {
        for (t, w) in verts.iter().enumerate() {
            if s == t || !preceq_raw(z, w) {
                continue;
            }
            if nv + radical.len() >= budget {
                return Err(BqaError::Budget(format!("dim A_{n}^{d} exceeds {budget}")));
            }
            pair_index.insert((s, t), radical.len());
            radical.push(BasisElem { src: s, tgt: t, label: format!("f{}<-{}", label(w), label(z)), degree: 0 });
            // raise coordinates left to right; every intermediate stays in the interval
            let mut word = Vec::new();
            let mut cur = z.clone();
            for i in 0..d {
                while cur[i] < w[i] {
                    let from = idx[&cur];
                    cur[i] += 1;
                    word.push(arrow_of[&(from, idx[&cur])]);
                }
            }
            let deg = word.len() as i32;
            radical.last_mut().unwrap().degree = deg;
            words.push(word);
        }
    }
    let mut table = HashMap::new();
    for (&(s, m), &a) in &pair_index {
        for t in 0..nv {
            if let Some(&b) = pair_index.get(&(m, t)) {
                if t != s && preceq_raw(&verts[s], &verts[t]) {
                    table.insert((b, a), vec![(pair_index[&(s, t)], Q::one())]);
                }
            }
        }
    }
    let alg = FdAlgebra::new(format!("A_{n}^{d}"), quiver.vertices.clone(), radical, table)?;
    Ok(alg.with_grading().with_paths(PathData { arrows: quiver.arrows, words }))
}

/// Vertex index of an ordered sequence in `A_n^d`.
pub fn vertex_of(alg: &FdAlgebra, x: &[usize]) -> Option<usize> {
    alg.vertex_index(&label(x))
}

/// The interval module `M(x)` for `x` in `os_{n}^{d+1}` over `A_n^d`: one
/// dimension at each `z` with `(x_1..x_d) <= z <= (x_2-1, .., x_{d+1}-1)`.
pub fn module_m(alg: &FdAlgebra, x: &OrderedSeq) -> Result<QuiverRep, BqaError> {
    let paths = alg.paths().ok_or_else(|| BqaError::NoPaths(alg.name.clone()))?;
    let e = x.entries();
    if e.len() < 2 {
        return Err(BqaError::Invalid(format!("{x} too short")));
    }
    let lo = &e[..e.len() - 1];
    let hi: Vec<usize> = e[1..].iter().map(|v| v - 1).collect();
    let verts = vertex_list(x.n(), e.len() - 1)?;
    if verts.len() != alg.num_vertices() {
        return Err(BqaError::Invalid(format!("{x} does not index modules over {}", alg.name)));
    }
    let support: Vec<bool> = verts.iter().map(|z| preceq_raw(lo, z) && preceq_raw(z, &hi)).collect();
    let any = support.iter().any(|&s| s);
    if !any {
        return Err(BqaError::Invalid(format!("{x} gives an empty interval")));
    }
    let dims: Vec<usize> = support.iter().map(|&s| s as usize).collect();
    let maps = paths
        .arrows
        .iter()
        .map(|a| {
            if support[a.src] && support[a.tgt] {
                Matrix::identity(1)
            } else {
                Matrix::zeros(dims[a.src], dims[a.tgt])
            }
        })
        .collect();
    Ok(QuiverRep { dims, maps })
}

/// Coordinates of the vertices of an algebra built by `build_auslander_algebra`.
pub fn vertex_coords(n: usize, d: usize) -> Result<Vec<Vec<usize>>, BqaError> {
    vertex_list(n, d)
}
