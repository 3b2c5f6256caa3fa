//! Certified isomorphism search between thin basic algebras.
//!
//! An isomorphism may be taken to send idempotents to idempotents, so it is
//! a vertex bijection plus one nonzero scalar per nonzero block. Scalars on a
//! spanning forest of arrows are gauge-fixed to 1; the rest follow from the
//! product rules. Every candidate is checked on all basis products.

use std::collections::HashMap;

use num::{One, Zero};
use serde::Serialize;

use super::algebra::{elt_coef, FdAlgebra};
use super::present::gabriel_quiver;
use super::BqaError;
use crate::linalg::Q;

#[derive(Clone, Debug, Serialize)]
pub struct IsoCertificate {
    /// Vertex `i` of the first algebra goes to `vertex_map[i]`.
    pub vertex_map: Vec<usize>,
    /// Basis element `i` of the first goes to `scalar * image` for
    /// `(i, image, scalar)`.
    pub basis_map: Vec<(usize, usize, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub enum IsoResult {
    Iso(IsoCertificate),
    NotIso(String),
    Inconclusive(String),
}

impl IsoResult {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoResult::Iso(_))
    }
}

/// Default cap on complete vertex bijections tried.
pub const DEFAULT_SEARCH_BUDGET: usize = 200_000;

pub fn iso_test(a1: &FdAlgebra, a2: &FdAlgebra) -> Result<IsoResult, BqaError> {
    iso_test_with_budget(a1, a2, DEFAULT_SEARCH_BUDGET)
}

pub fn iso_test_with_budget(a1: &FdAlgebra, a2: &FdAlgebra, budget: usize) -> Result<IsoResult, BqaError> {
    a1.check_basic_split()?;
    a2.check_basic_split()?;
    let nv = a1.num_vertices();
    if nv != a2.num_vertices() {
        return Ok(IsoResult::NotIso(format!("{} vs {} vertices", nv, a2.num_vertices())));
    }
    if a1.dim() != a2.dim() {
        return Ok(IsoResult::NotIso(format!("dimension {} vs {}", a1.dim(), a2.dim())));
    }
    if !a1.is_thin() || !a2.is_thin() {
        return Ok(IsoResult::Inconclusive("only thin algebras are supported".into()));
    }
    let (c1, c2) = (a1.cartan(), a2.cartan());
    let (q1, _) = gabriel_quiver(a1)?;
    let (q2, _) = gabriel_quiver(a2)?;
    let arrows = |q: &super::Quiver| {
        let mut m = vec![vec![0usize; nv]; nv];
        for a in &q.arrows {
            m[a.src][a.tgt] += 1;
        }
        m
    };
    let (r1, r2) = (arrows(&q1), arrows(&q2));
    let signature = |c: &Vec<Vec<usize>>, r: &Vec<Vec<usize>>, v: usize| {
        let row: usize = c[v].iter().sum();
        let col: usize = (0..nv).map(|u| c[u][v]).sum();
        let out: usize = r[v].iter().sum();
        let inn: usize = (0..nv).map(|u| r[u][v]).sum();
        (row, col, out, inn)
    };
    let sig1: Vec<_> = (0..nv).map(|v| signature(&c1, &r1, v)).collect();
    let sig2: Vec<_> = (0..nv).map(|v| signature(&c2, &r2, v)).collect();
    // search the most constrained vertices first
    let mut order: Vec<usize> = (0..nv).collect();
    order.sort_by_key(|&v| (sig2.iter().filter(|s| **s == sig1[v]).count(), std::cmp::Reverse(sig1[v].0 + sig1[v].1)));
    let mut state = Search {
        a1,
        a2,
        c1: &c1,
        c2: &c2,
        r1: &r1,
        r2: &r2,
        sig1: &sig1,
        sig2: &sig2,
        order: &order,
        map: vec![usize::MAX; nv],
        used: vec![false; nv],
        leaves: 0,
        budget,
        open: false,
        found: None,
    };
    state.extend(0);
    Ok(match state.found {
        Some(cert) => IsoResult::Iso(cert),
        None if state.leaves >= budget => IsoResult::Inconclusive(format!("search budget {budget} exhausted")),
        None if state.open => IsoResult::Inconclusive("scalar equations left a free choice that failed".into()),
        None => IsoResult::NotIso("no vertex bijection supports an isomorphism".into()),
    })
}

struct Search<'a> {
    a1: &'a FdAlgebra,
    a2: &'a FdAlgebra,
    c1: &'a [Vec<usize>],
    c2: &'a [Vec<usize>],
    r1: &'a [Vec<usize>],
    r2: &'a [Vec<usize>],
    sig1: &'a [(usize, usize, usize, usize)],
    sig2: &'a [(usize, usize, usize, usize)],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
    leaves: usize,
    budget: usize,
    open: bool,
    found: Option<IsoCertificate>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) {
        if self.found.is_some() || self.leaves >= self.budget {
            return;
        }
        if depth == self.order.len() {
            self.leaves += 1;
            match solve_scalars(self.a1, self.a2, &self.map) {
                Scalars::Found(cert) => self.found = Some(cert),
                Scalars::Contradiction => {}
                Scalars::Open => self.open = true,
            }
            return;
        }
        let v = self.order[depth];
        for w in 0..self.map.len() {
            if self.used[w] || self.sig1[v] != self.sig2[w] {
                continue;
            }
            let ok = self.order[..depth].iter().all(|&u| {
                let x = self.map[u];
                self.c1[u][v] == self.c2[x][w]
                    && self.c1[v][u] == self.c2[w][x]
                    && self.r1[u][v] == self.r2[x][w]
                    && self.r1[v][u] == self.r2[w][x]
            }) && self.c1[v][v] == self.c2[w][w];
            if !ok {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            self.extend(depth + 1);
            self.used[w] = false;
            self.map[v] = usize::MAX;
            if self.found.is_some() {
                return;
            }
        }
    }
}

enum Scalars {
    Found(IsoCertificate),
    Contradiction,
    Open,
}

/// Solves for the block scalars under a fixed vertex bijection.
fn solve_scalars(a1: &FdAlgebra, a2: &FdAlgebra, map: &[usize]) -> Scalars {
    let nv = map.len();
    let elem1 = |s: usize, t: usize| a1.block(s, t).first().copied();
    let elem2 = |s: usize, t: usize| a2.block(map[s], map[t]).first().copied();
    // structure constants mu(s,t,u): x_tu * x_st = mu x_su
    let mu = |alg: &FdAlgebra, x: usize, y: usize, z: Option<usize>| -> Q {
        match z {
            Some(z) => elt_coef(&alg.mul_basis(y, x), z),
            None => Q::zero(),
        }
    };
    let mut f: HashMap<(usize, usize), Q> = HashMap::new();
    for v in 0..nv {
        f.insert((v, v), Q::one());
    }
    // gauge: a spanning forest of nonzero off-diagonal blocks, shortest first
    let (gq, _) = match gabriel_quiver(a1) {
        Ok(x) => x,
        Err(_) => return Scalars::Contradiction,
    };
    let mut comp: Vec<usize> = (0..nv).collect();
    fn root(c: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while c[r] != r {
            r = c[r];
        }
        c[v] = r;
        r
    }
    for a in &gq.arrows {
        let (ra, rb) = (root(&mut comp, a.src), root(&mut comp, a.tgt));
        if ra != rb {
            comp[ra] = rb;
            f.insert((a.src, a.tgt), Q::one());
        }
    }
    let blocks: Vec<(usize, usize)> = (0..nv)
        .flat_map(|s| (0..nv).map(move |t| (s, t)))
        .filter(|&(s, t)| s != t && elem1(s, t).is_some())
        .collect();
    let mut free_choice = false;
    loop {
        let mut progress = true;
        while progress {
            progress = false;
            for &(s, t) in &blocks {
                for u in 0..nv {
                    if u == s || u == t {
                        continue;
                    }
                    let (Some(x), Some(y)) = (elem1(s, t), elem1(t, u)) else { continue };
                    let (x2, y2) = (elem2(s, t).unwrap(), elem2(t, u).unwrap());
                    let m1 = mu(a1, x, y, elem1(s, u));
                    let m2 = mu(a2, x2, y2, elem2(s, u));
                    if m1.is_zero() != m2.is_zero() {
                        return if free_choice { Scalars::Open } else { Scalars::Contradiction };
                    }
                    if m1.is_zero() {
                        continue;
                    }
                    // f_tu f_st m2 = m1 f_su
                    let (fst, ftu, fsu) = (f.get(&(s, t)).cloned(), f.get(&(t, u)).cloned(), f.get(&(s, u)).cloned());
                    match (fst, ftu, fsu) {
                        (Some(a), Some(b), None) => {
                            f.insert((s, u), a * b * &m2 / &m1);
                            progress = true;
                        }
                        (Some(a), None, Some(c)) => {
                            f.insert((t, u), c * &m1 / (a * &m2));
                            progress = true;
                        }
                        (None, Some(b), Some(c)) => {
                            f.insert((s, t), c * &m1 / (b * &m2));
                            progress = true;
                        }
                        (Some(a), Some(b), Some(c)) => {
                            if a * b * &m2 != c * &m1 {
                                return if free_choice { Scalars::Open } else { Scalars::Contradiction };
                            }
                        }
                        _ => {}
                    }
                }
            }
        }
        match blocks.iter().find(|b| !f.contains_key(b)) {
            Some(&b) => {
                f.insert(b, Q::one());
                free_choice = true;
            }
            None => break,
        }
    }
    // full verification on all basis products
    let image = |i: usize| -> (usize, Q) {
        let e = a1.elem(i);
        let j = a2.block(map[e.src], map[e.tgt])[0];
        (j, f[&(e.src, e.tgt)].clone())
    };
    for a in a1.radical_indices() {
        for b in a1.radical_indices() {
            if a1.elem(a).tgt != a1.elem(b).src {
                continue;
            }
            let (ia, ca) = image(a);
            let (ib, cb) = image(b);
            let lhs: Vec<(usize, Q)> =
                a2.mul_basis(ib, ia).into_iter().map(|(k, c)| (k, c * &ca * &cb)).collect();
            let rhs: Vec<(usize, Q)> = a1
                .mul_basis(b, a)
                .into_iter()
                .map(|(k, c)| {
                    let (ik, ck) = image(k);
                    (ik, c * ck)
                })
                .collect();
            if lhs != rhs {
                return if free_choice { Scalars::Open } else { Scalars::Contradiction };
            }
        }
    }
    let basis_map = (0..a1.dim())
        .map(|i| {
            let (j, c) = image(i);
            (i, j, c.to_string())
        })
        .collect();
    Scalars::Found(IsoCertificate { vertex_map: map.to_vec(), basis_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bqa::auslander::build_auslander_algebra;
    use crate::bqa::quiver::{BoundQuiver, Quiver};

    #[test]
    fn self_iso() {
        let a = build_auslander_algebra(3, 2).unwrap();
        assert!(iso_test(&a, &a).unwrap().is_iso());
    }

    #[test]
    fn relabelled_presentation_is_iso() {
        let a = build_auslander_algebra(4, 2).unwrap();
        let b = crate::bqa::auslander::auslander_bound_quiver(4, 2).unwrap().to_algebra("b", 32).unwrap();
        assert!(iso_test(&a, &b).unwrap().is_iso());
    }

    #[test]
    fn different_truncations_differ() {
        let a = BoundQuiver::truncated(Quiver::linear(5), 2).to_algebra("r2", 8).unwrap();
        let b = BoundQuiver::truncated(Quiver::linear(5), 3).to_algebra("r3", 8).unwrap();
        assert!(!iso_test(&a, &b).unwrap().is_iso());
        let c = BoundQuiver::truncated(Quiver::linear(6), 2).to_algebra("r2", 8).unwrap();
        let d = BoundQuiver::truncated(Quiver::linear(3), 3).to_algebra("r3", 8).unwrap();
        let cd = c.product(&d);
        assert!(matches!(iso_test(&cd, &cd).unwrap(), IsoResult::Iso(_)));
    }

    #[test]
    fn commutative_square_vs_zero_square() {
        use crate::bqa::algebra::Arrow;
        use crate::bqa::quiver::Relation;
        let arrows = vec![
            Arrow { src: 0, tgt: 1, label: "a".into() },
            Arrow { src: 0, tgt: 2, label: "b".into() },
            Arrow { src: 1, tgt: 3, label: "c".into() },
            Arrow { src: 2, tgt: 3, label: "d".into() },
        ];
        let q = Quiver::new(vec!["1".into(), "2".into(), "3".into(), "4".into()], arrows).unwrap();
        let comm = BoundQuiver::new(q.clone(), vec![Relation::commutativity(vec![0, 2], vec![1, 3])]).unwrap();
        let anti = BoundQuiver::new(
            q.clone(),
            vec![Relation { terms: vec![(Q::one(), vec![0, 2]), (Q::one(), vec![1, 3])] }],
        )
        .unwrap();
        let zero = BoundQuiver::new(q, vec![Relation::zero_path(vec![0, 2]), Relation::zero_path(vec![1, 3])]).unwrap();
        let (c, a, z) = (comm.to_algebra("c", 8).unwrap(), anti.to_algebra("a", 8).unwrap(), zero.to_algebra("z", 8).unwrap());
        assert!(iso_test(&c, &a).unwrap().is_iso());
        assert!(!iso_test(&c, &z).unwrap().is_iso());
    }
}
