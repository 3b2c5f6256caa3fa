//! Gabriel quiver and a minimal presentation of a basic split algebra.

use std::collections::HashMap;

use num::Zero;

use super::algebra::{elt_basis, Arrow, Elt, FdAlgebra};
use super::quiver::{BoundQuiver, Quiver, Relation};
use super::BqaError;
use crate::linalg::{Echelon, Matrix, Q};

/// Arrows are radical basis elements spanning a complement of `rad^2`.
pub fn gabriel_quiver(alg: &FdAlgebra) -> Result<(Quiver, Vec<usize>), BqaError> {
    alg.check_basic_split()?;
    alg.loewy_length()?;
    let gens = alg.generators().to_vec();
    let arrows = gens
        .iter()
        .map(|&g| {
            let e = alg.elem(g);
            Arrow { src: e.src, tgt: e.tgt, label: e.label.clone() }
        })
        .collect();
    Ok((Quiver::new(alg.vertex_labels().to_vec(), arrows)?, gens))
}

/// The bound quiver whose relations minimally generate the kernel of the
/// path algebra onto `alg`. Relations must come out homogeneous in path
/// length; otherwise this reports an error.
pub fn presentation(alg: &FdAlgebra) -> Result<BoundQuiver, BqaError> {
    let (quiver, gens) = gabriel_quiver(alg)?;
    let loewy = alg.loewy_length()?;
    let nv = alg.num_vertices();
    // all paths of length 1..=loewy per block, with their values
    let mut blocks: HashMap<(usize, usize), Vec<(Vec<usize>, Elt)>> = HashMap::new();
    let mut frontier: Vec<(Vec<usize>, usize, usize, Elt)> = quiver
        .arrows
        .iter()
        .zip(&gens)
        .enumerate()
        .map(|(i, (a, &g))| (vec![i], a.src, a.tgt, elt_basis(g)))
        .collect();
    for len in 1..=loewy {
        let mut next = Vec::new();
        for (p, s, t, val) in frontier {
            if len < loewy {
                for (i, a) in quiver.arrows.iter().enumerate() {
                    if a.src == t {
                        let mut q = p.clone();
                        q.push(i);
                        next.push((q, s, a.tgt, alg.mul(&elt_basis(gens[i]), &val)));
                    }
                }
            }
            blocks.entry((s, t)).or_default().push((p, val));
        }
        frontier = next;
    }
    for paths in blocks.values_mut() {
        paths.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    }
    // kernel of evaluation, per block, as row-reduced vectors over the paths
    let mut kernels: HashMap<(usize, usize), Vec<Vec<Q>>> = HashMap::new();
    for (&(s, t), paths) in &blocks {
        let cols: Vec<Vec<Q>> = paths.iter().map(|(_, v)| alg.to_block_vec(v, s, t)).collect();
        let rows = alg.block(s, t).len();
        let k = if rows == 0 {
            (0..paths.len()).map(|i| unit(paths.len(), i)).collect()
        } else {
            Matrix::from_cols(rows, &cols).kernel()
        };
        if !k.is_empty() {
            let (r, piv) = Matrix::from_rows(k).rref();
            kernels.insert((s, t), (0..piv.len()).map(|i| r.row(i).to_vec()).collect());
        }
    }
    let path_index: HashMap<(usize, usize), HashMap<Vec<usize>, usize>> = blocks
        .iter()
        .map(|(&k, ps)| (k, ps.iter().enumerate().map(|(i, (p, _))| (p.clone(), i)).collect()))
        .collect();
    let mut relations = Vec::new();
    for s in 0..nv {
        for t in 0..nv {
            let Some(ker) = kernels.get(&(s, t)) else { continue };
            let paths = &blocks[&(s, t)];
            let idx = &path_index[&(s, t)];
            let mut j = Echelon::new(paths.len());
            // arrow after a kernel element, and kernel element after an arrow
            for (i, a) in quiver.arrows.iter().enumerate() {
                if a.tgt == t {
                    if let Some(kk) = kernels.get(&(s, a.src)) {
                        let inner = &blocks[&(s, a.src)];
                        for k in kk {
                            j.insert(extend(k, inner, idx, paths.len(), |p| [p, &[i]].concat()));
                        }
                    }
                }
                if a.src == s {
                    if let Some(kk) = kernels.get(&(a.tgt, t)) {
                        let inner = &blocks[&(a.tgt, t)];
                        for k in kk {
                            j.insert(extend(k, inner, idx, paths.len(), |p| [&[i], p].concat()));
                        }
                    }
                }
            }
            // lowest paths first so monomial and short relations are preferred
            for k in ker.iter().rev() {
                if j.insert(k.clone()) {
                    let terms: Vec<(Q, Vec<usize>)> = k
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (c.clone(), paths[i].0.clone()))
                        .collect();
                    let len0 = terms[0].1.len();
                    if terms.iter().any(|(_, p)| p.len() != len0) {
                        return Err(BqaError::Invalid(format!(
                            "{} has a relation mixing path lengths",
                            alg.name
                        )));
                    }
                    relations.push(Relation { terms });
                }
            }
        }
    }
    relations.sort_by_key(|r| (r.terms[0].1.len(), r.terms[0].1.clone()));
    BoundQuiver::new(quiver, relations)
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = num::One::one();
    v
}

/// Image of a vector over `inner` paths under a path map, dropping paths
/// longer than any listed in the target block (they vanish in the algebra).
fn extend(
    k: &[Q],
    inner: &[(Vec<usize>, Elt)],
    idx: &HashMap<Vec<usize>, usize>,
    n: usize,
    f: impl Fn(&[usize]) -> Vec<usize>,
) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    for (c, (p, _)) in k.iter().zip(inner) {
        if c.is_zero() {
            continue;
        }
        if let Some(&i) = idx.get(&f(p)) {
            v[i] += c;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bqa::auslander::{auslander_bound_quiver, build_auslander_algebra};

    #[test]
    fn presentation_of_auslander_algebra() {
        let a = build_auslander_algebra(3, 2).unwrap();
        let bq = presentation(&a).unwrap();
        let ref_bq = auslander_bound_quiver(3, 2).unwrap();
        assert_eq!(bq.quiver.arrows.len(), ref_bq.quiver.arrows.len());
        assert_eq!(bq.relations.len(), ref_bq.relations.len());
        let back = bq.to_algebra("back", 16).unwrap();
        assert_eq!(back.cartan(), a.cartan());
    }

    #[test]
    fn semisimple_has_no_arrows() {
        let a = FdAlgebra::new("k^3", vec!["1".into(), "2".into(), "3".into()], Vec::new(), HashMap::new()).unwrap();
        let bq = presentation(&a).unwrap();
        assert!(bq.quiver.arrows.is_empty());
        assert!(bq.relations.is_empty());
    }

    #[test]
    fn truncated_linear() {
        let bq = BoundQuiver::truncated(Quiver::linear(6), 3);
        let a = bq.to_algebra("A6/rad3", 8).unwrap();
        let p = presentation(&a).unwrap();
        assert_eq!(p.quiver.arrows.len(), 5);
        assert_eq!(p.relations.len(), 3);
        assert!(p.relations.iter().all(|r| r.terms.len() == 1 && r.terms[0].1.len() == 3));
    }
}
