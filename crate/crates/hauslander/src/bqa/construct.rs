//! Replicated algebras, r-fold trivial extensions and idempotent cut-downs.

use std::collections::HashMap;

use num::{One, Zero};

use super::algebra::{elt_coef, BasisElem, Elt, FdAlgebra};
use super::BqaError;
use crate::linalg::{CoordSolver, Echelon, Q};
use crate::pathcomb::preceq_raw;

/// Shape of the copies of `DA` in the matrix algebra.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Dual {
    /// copy `i` to copy `i + 1` for `i < r - 1`
    Chain,
    /// as `Chain` plus the wrap from copy `r - 1` to copy `0`
    Cycle,
}

/// Basis: copies `(i, a)` of `A`, then dual elements `a*` of `D A` from copy
/// `i` at `tgt a` to copy `i + 1` at `src a`.
fn matrix_algebra(alg: &FdAlgebra, r: usize, shape: Dual, name: String) -> Result<FdAlgebra, BqaError> {
    if r == 0 {
        return Err(BqaError::Invalid("r must be at least 1".into()));
    }
    let nv = alg.num_vertices();
    let n = alg.dim();
    let vid = |i: usize, v: usize| i * nv + v;
    let vertices: Vec<String> =
        (0..r).flat_map(|i| alg.vertex_labels().iter().map(move |v| format!("{v}/{i}"))).collect();
    let ndual = match shape {
        Dual::Chain => r - 1,
        Dual::Cycle => r,
    };
    // radical index of copy i of radical element k, and of dual of basis element k
    let rad_n = n - nv;
    let copy_idx = |i: usize, k: usize| i * rad_n + (k - nv);
    let dual_idx = |i: usize, k: usize| r * rad_n + i * n + k;
    let mut radical = Vec::new();
    let mut degrees = Vec::new();
    for i in 0..r {
        for k in alg.radical_indices() {
            let e = alg.elem(k);
            radical.push(BasisElem {
                src: vid(i, e.src),
                tgt: vid(i, e.tgt),
                label: format!("{}/{}", e.label, i),
                degree: 0,
            });
            degrees.push(0);
        }
    }
    for i in 0..ndual {
        let j = (i + 1) % r;
        for e in alg.basis() {
            radical.push(BasisElem {
                src: vid(i, e.tgt),
                tgt: vid(j, e.src),
                label: format!("{}*/{}", e.label, i),
                degree: 0,
            });
            degrees.push((i == r - 1 && shape == Dual::Cycle) as i32);
        }
    }
    let mut table: HashMap<(usize, usize), Elt> = HashMap::new();
    // products inside a copy
    for i in 0..r {
        for (&(b, a), x) in alg.raw_table() {
            table.insert((copy_idx(i, b), copy_idx(i, a)), x.iter().map(|(k, c)| (copy_idx(i, *k), c.clone())).collect());
        }
    }
    // a * (copy element) and (copy element) * a* with the dual pairing
    for i in 0..ndual {
        let j = (i + 1) % r;
        for (ke, e) in alg.basis().iter().enumerate() {
            // g = e*, then g * a for a: x -> tgt e in copy i
            for a in alg.radical_indices() {
                if alg.elem(a).tgt != e.tgt {
                    continue;
                }
                let x = alg.elem(a).src;
                let mut out = Vec::new();
                for &c in alg.block(e.src, x) {
                    let coef = elt_coef(&alg.mul_basis(a, c), ke);
                    if !coef.is_zero() {
                        out.push((dual_idx(i, c), coef));
                    }
                }
                if !out.is_empty() {
                    out.sort_by_key(|p| p.0);
                    table.insert((dual_idx(i, ke), copy_idx(i, a)), out);
                }
            }
            // b * e* for b: src e -> y in copy j
            for b in alg.radical_indices() {
                if alg.elem(b).src != e.src {
                    continue;
                }
                let y = alg.elem(b).tgt;
                let mut out = Vec::new();
                for &c in alg.block(y, e.tgt) {
                    let coef = elt_coef(&alg.mul_basis(c, b), ke);
                    if !coef.is_zero() {
                        out.push((dual_idx(i, c), coef));
                    }
                }
                if !out.is_empty() {
                    out.sort_by_key(|p| p.0);
                    table.insert((copy_idx(j, b), dual_idx(i, ke)), out);
                }
            }
        }
    }
    let mut out = FdAlgebra::new(name, vertices, radical, table)?;
    if shape == Dual::Cycle {
        let mut all = vec![0; nv * r];
        all.extend(degrees);
        out.set_degrees(&all);
    }
    Ok(out)
}

/// The replicated algebra `A^(r)`: `r` copies of `A` on the diagonal and
/// `D A` just above it.
pub fn replicate(alg: &FdAlgebra, r: usize) -> Result<FdAlgebra, BqaError> {
    matrix_algebra(alg, r, Dual::Chain, format!("{}^({r})", alg.name))
}

/// `T_r(A)`: the replicated shape closed up cyclically, graded with the
/// wrap-around copy of `D A` in degree one.
pub fn trivial_ext_r(alg: &FdAlgebra, r: usize) -> Result<FdAlgebra, BqaError> {
    matrix_algebra(alg, r, Dual::Cycle, format!("T_{r}({})", alg.name))
}

/// `e A e` for `e` the sum of the idempotents at `keep`.
pub fn idempotent_subalgebra(alg: &FdAlgebra, keep: &[usize]) -> Result<FdAlgebra, BqaError> {
    let nv = alg.num_vertices();
    let mut new_v = vec![usize::MAX; nv];
    for (i, &v) in keep.iter().enumerate() {
        new_v[v] = i;
    }
    let mut new_idx = HashMap::new();
    let mut radical = Vec::new();
    for k in alg.radical_indices() {
        let e = alg.elem(k);
        if new_v[e.src] != usize::MAX && new_v[e.tgt] != usize::MAX {
            new_idx.insert(k, radical.len());
            radical.push(BasisElem { src: new_v[e.src], tgt: new_v[e.tgt], ..e.clone() });
        }
    }
    let mut table = HashMap::new();
    for (&(b, a), x) in alg.raw_table() {
        if let (Some(&nb), Some(&na)) = (new_idx.get(&b), new_idx.get(&a)) {
            table.insert((nb, na), x.iter().map(|(k, c)| (new_idx[k], c.clone())).collect());
        }
    }
    let vertices = keep.iter().map(|&v| alg.vertex_label(v).to_string()).collect();
    let mut out = FdAlgebra::new(format!("e{}e", alg.name), vertices, radical, table)?;
    if alg.is_graded() {
        let mut deg = vec![0; keep.len()];
        deg.extend(out.basis()[keep.len()..].iter().map(|b| b.degree));
        out.set_degrees(&deg);
    }
    Ok(out)
}

/// The degree-zero subalgebra of a graded algebra.
pub fn degree_zero_part(alg: &FdAlgebra) -> Result<FdAlgebra, BqaError> {
    alg.check_grading()?;
    let mut new_idx = HashMap::new();
    let mut radical = Vec::new();
    for k in alg.radical_indices() {
        let e = alg.elem(k);
        if e.degree == 0 {
            new_idx.insert(k, radical.len());
            radical.push(e.clone());
        }
    }
    let mut table = HashMap::new();
    for (&(b, a), x) in alg.raw_table() {
        if let (Some(&nb), Some(&na)) = (new_idx.get(&b), new_idx.get(&a)) {
            table.insert((nb, na), x.iter().map(|(k, c)| (new_idx[k], c.clone())).collect());
        }
    }
    FdAlgebra::new(format!("{}_0", alg.name), alg.vertex_labels().to_vec(), radical, table)
}

/// `A / <1 - e>`: the ideal is spanned by products through vertices
/// outside `keep`.
pub fn quotient_by_complement(alg: &FdAlgebra, keep: &[usize]) -> Result<FdAlgebra, BqaError> {
    let nv = alg.num_vertices();
    let mut inside = vec![false; nv];
    for &v in keep {
        inside[v] = true;
    }
    let mut new_v = vec![usize::MAX; nv];
    for (i, &v) in keep.iter().enumerate() {
        new_v[v] = i;
    }
    // per kept block: ideal span, complement basis, solver
    let mut complement: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    let mut solvers: HashMap<(usize, usize), CoordSolver> = HashMap::new();
    for &s in keep {
        for &t in keep {
            let blk = alg.block(s, t);
            if blk.is_empty() {
                continue;
            }
            let mut ideal = Echelon::new(blk.len());
            for w in (0..nv).filter(|&w| !inside[w]) {
                for &x in alg.block(s, w) {
                    for &y in alg.block(w, t) {
                        let p = alg.mul_basis(y, x);
                        if !p.is_empty() {
                            ideal.insert(alg.to_block_vec(&p, s, t));
                        }
                    }
                }
            }
            let ideal_basis = ideal.basis();
            let mut comp = Vec::new();
            let mut vecs = Vec::new();
            for &k in blk {
                let mut u = vec![Q::zero(); blk.len()];
                u[alg.pos(k)] = Q::one();
                if ideal.insert(u.clone()) {
                    comp.push(k);
                    vecs.push(u);
                }
            }
            vecs.extend(ideal_basis);
            solvers.insert((s, t), CoordSolver::new(blk.len(), &vecs));
            complement.insert((s, t), comp);
        }
    }
    let mut new_idx = HashMap::new();
    let mut radical = Vec::new();
    for &s in keep {
        for &t in keep {
            for &k in complement.get(&(s, t)).into_iter().flatten() {
                if alg.is_idempotent(k) {
                    continue;
                }
                new_idx.insert(k, radical.len());
                radical.push(BasisElem { src: new_v[s], tgt: new_v[t], ..alg.elem(k).clone() });
            }
        }
    }
    let mut table = HashMap::new();
    for (&a, &na) in &new_idx {
        for (&b, &nb) in &new_idx {
            let p = alg.mul_basis(b, a);
            if p.is_empty() {
                continue;
            }
            let (s, t) = (alg.elem(a).src, alg.elem(b).tgt);
            let coords = solvers[&(s, t)].solve(&alg.to_block_vec(&p, s, t)).expect("spanning set");
            let comp = &complement[&(s, t)];
            let x: Elt = comp
                .iter()
                .zip(&coords)
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (new_idx[k], c.clone()))
                .collect();
            if !x.is_empty() {
                table.insert((nb, na), x);
            }
        }
    }
    let vertices = keep.iter().map(|&v| alg.vertex_label(v).to_string()).collect();
    FdAlgebra::new(format!("{}/<1-e>", alg.name), vertices, radical, table)
}

/// Dimension of `e A (1 - e)`: elements from outside `keep` into `keep`.
pub fn corner_dim(alg: &FdAlgebra, keep: &[usize]) -> usize {
    let nv = alg.num_vertices();
    let mut inside = vec![false; nv];
    for &v in keep {
        inside[v] = true;
    }
    alg.basis().iter().filter(|b| !inside[b.src] && inside[b.tgt]).count()
}

/// `beta(x) = alpha(c(x))` on Dyck coordinates: drop the first `s`
/// coordinates and subtract `s`, with `s = ceil(d / n)`.
pub fn beta(c: &[usize], d: usize, n: usize) -> Vec<usize> {
    let s = d.div_ceil(n);
    c[s..].iter().map(|x| x - s).collect()
}

/// Whether `beta` preserves and reflects the order on a coordinate set.
pub fn beta_is_order_embedding(cs: &[Vec<usize>], d: usize, n: usize) -> bool {
    cs.iter().all(|x| {
        cs.iter().all(|y| preceq_raw(x, y) == preceq_raw(&beta(x, d, n), &beta(y, d, n)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bqa::auslander::build_auslander_algebra;
    use crate::bqa::quiver::{BoundQuiver, Quiver};

    fn a2() -> FdAlgebra {
        build_auslander_algebra(2, 1).unwrap()
    }

    #[test]
    fn dimensions() {
        let a = build_auslander_algebra(3, 2).unwrap();
        assert_eq!(replicate(&a, 1).unwrap().dim(), a.dim());
        for r in 1..4 {
            let rep = replicate(&a, r).unwrap();
            assert_eq!(rep.dim(), r * a.dim() + (r - 1) * a.dim());
            rep.check_associative().unwrap();
            let t = trivial_ext_r(&a, r).unwrap();
            assert_eq!(t.dim(), 2 * r * a.dim());
            t.check_associative().unwrap();
            t.check_grading().unwrap();
        }
    }

    #[test]
    fn replicated_a2_is_truncated_line() {
        let rep = replicate(&a2(), 5).unwrap();
        let line = BoundQuiver::truncated(Quiver::linear(10), 3).to_algebra("A10/rad3", 8).unwrap();
        assert_eq!(rep.dim(), 27);
        assert_eq!(rep.dim(), line.dim());
        assert_eq!(rep.loewy_length().unwrap(), 3);
    }

    #[test]
    fn degree_one_squares_to_zero() {
        let t = trivial_ext_r(&build_auslander_algebra(3, 2).unwrap(), 3).unwrap();
        let ones: Vec<usize> = t.radical_indices().filter(|&i| t.elem(i).degree == 1).collect();
        for &a in &ones {
            for &b in &ones {
                assert!(t.mul_basis(b, a).is_empty());
            }
        }
    }

    #[test]
    fn degree_zero_of_trivial_extension_is_replicated() {
        let a = build_auslander_algebra(3, 2).unwrap();
        let t = trivial_ext_r(&a, 3).unwrap();
        let z = degree_zero_part(&t).unwrap();
        let r = replicate(&a, 3).unwrap();
        assert_eq!(z.dim(), r.dim());
        assert!(crate::bqa::iso::iso_test(&z, &r).unwrap().is_iso());
    }

    #[test]
    fn cut_downs_agree_without_corner() {
        let a = build_auslander_algebra(3, 2).unwrap();
        let all: Vec<usize> = (0..a.num_vertices()).collect();
        assert_eq!(idempotent_subalgebra(&a, &all).unwrap().dim(), a.dim());
        assert_eq!(quotient_by_complement(&a, &all).unwrap().dim(), a.dim());
        // an up-closed set: nothing enters it from outside
        let top: Vec<usize> = (0..a.num_vertices())
            .filter(|&v| ["23", "24", "34"].contains(&a.vertex_label(v)))
            .collect();
        let sub = idempotent_subalgebra(&a, &top).unwrap();
        let quo = quotient_by_complement(&a, &top).unwrap();
        sub.check_associative().unwrap();
        quo.check_associative().unwrap();
        assert_eq!(sub.cartan(), quo.cartan());
    }
}
