//! Minimal projective resolutions and the homological dimensions read off
//! from them.

use std::collections::BTreeMap;

use num::Zero;
use serde::Serialize;

use super::complex::{PMat, ProjComplex};
use crate::bqa::{FdAlgebra, ModMap, Module};
use crate::linalg::Matrix;

#[derive(Clone, Debug, Serialize)]
pub struct ResolutionReport {
    pub label: String,
    /// Projective dimension, or the number of steps taken when incomplete.
    pub length: usize,
    pub complete: bool,
    /// `terms[i]` counts the summands of `P_i` by vertex label.
    pub terms: Vec<BTreeMap<String, usize>>,
}

/// `... -> P_1 -> P_0 -> M`, with `P_i` in degree `-i`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub complex: ProjComplex,
    /// The last syzygy computed was zero.
    pub complete: bool,
}

impl Resolution {
    pub fn length(&self) -> usize {
        if self.complex.is_zero() {
            0
        } else {
            (-self.complex.lo) as usize
        }
    }

    /// `P_i`.
    pub fn term(&self, i: usize) -> &[usize] {
        self.complex.term(-(i as i64))
    }

    pub fn report(&self, alg: &FdAlgebra, label: &str) -> ResolutionReport {
        let terms = (0..=self.length())
            .map(|i| {
                let mut m = BTreeMap::new();
                for &v in self.term(i) {
                    *m.entry(alg.vertex_label(v).to_string()).or_insert(0) += 1;
                }
                m
            })
            .collect();
        ResolutionReport { label: label.into(), length: self.length(), complete: self.complete, terms }
    }
}

/// Minimal projective resolution, stopping after `P_{max_len}`.
pub fn minimal_proj_resolution(alg: &FdAlgebra, m: &Module, max_len: usize) -> Resolution {
    if m.is_zero() {
        return Resolution { complex: ProjComplex::zero(), complete: true };
    }
    let mut terms: Vec<Vec<usize>> = Vec::new();
    let mut diffs: Vec<PMat> = Vec::new();
    let (vs, p, pi) = m.projective_cover(alg);
    let (mut syz, mut incl) = p.kernel_of(alg, &pi).expect("kernel is a submodule");
    terms.push(vs);
    let mut complete = syz.is_zero();
    while !complete && terms.len() <= max_len {
        let prev = terms.last().unwrap().clone();
        let (vs, _, cover) = syz.projective_cover(alg);
        diffs.push(cover_matrix(alg, &prev, &vs, &cover, &incl));
        let (k, i) = {
            let pk = Module::projective_sum(alg, &vs);
            pk.kernel_of(alg, &cover).expect("kernel is a submodule")
        };
        terms.push(vs);
        syz = k;
        incl = i;
        complete = syz.is_zero();
    }
    // degree -i holds P_i
    let len = terms.len();
    let lo = -(len as i64 - 1);
    terms.reverse();
    diffs.reverse();
    Resolution { complex: ProjComplex { lo, terms, diffs }, complete }
}

/// Matrix of `P(vs) -> syzygy -> P(prev)`: the generator of summand `g` at
/// vertex `v` goes to an element of `P(prev)(v)`, one block entry per
/// summand of `prev`.
fn cover_matrix(alg: &FdAlgebra, prev: &[usize], vs: &[usize], cover: &ModMap, incl: &ModMap) -> PMat {
    let mut d = PMat::zeros(prev.len(), vs.len());
    for (g, &v) in vs.iter().enumerate() {
        let col = vs[..g].iter().map(|&u| alg.block(v, u).len()).sum::<usize>() + alg.pos(v);
        let inner = cover.blocks[v].column(col);
        let y = incl.blocks[v].mul_vec(&inner);
        let mut off = 0;
        for (r, &w) in prev.iter().enumerate() {
            let len = alg.block(v, w).len();
            d.set(r, g, alg.from_block_vec(&y[off..off + len], v, w));
            off += len;
        }
    }
    d
}

pub fn proj_dim(alg: &FdAlgebra, m: &Module, max_len: usize) -> Option<usize> {
    let r = minimal_proj_resolution(alg, m, max_len);
    r.complete.then(|| r.length())
}

/// Maximum projective dimension of the simples, `None` beyond `max_len`.
pub fn gldim(alg: &FdAlgebra, max_len: usize) -> Option<usize> {
    let mut best = 0;
    for v in 0..alg.num_vertices() {
        best = best.max(proj_dim(alg, &Module::simple(alg, v), max_len)?);
    }
    Some(best)
}

/// `Hom(P_j, N) -> Hom(P_{j+1}, N)` induced by the differential.
fn hom_into(alg: &FdAlgebra, r: &Resolution, n: &Module, j: usize) -> Matrix {
    let (src, dst) = (r.term(j), r.term(j + 1));
    let off = |ts: &[usize]| {
        let mut o = vec![0];
        for &v in ts {
            o.push(o.last().unwrap() + n.dims[v]);
        }
        o
    };
    let (so, dof) = (off(src), off(dst));
    let mut m = Matrix::zeros(*dof.last().unwrap(), *so.last().unwrap());
    let Some(d) = r.complex.diff(-(j as i64) - 1) else { return m };
    for c in 0..d.cols {
        for rr in 0..d.rows {
            let h = d.get(rr, c);
            if h.is_empty() {
                continue;
            }
            let a = n.act_elt(alg, h);
            for i in 0..a.rows() {
                for k in 0..a.cols() {
                    let x = a.get(i, k);
                    if !x.is_zero() {
                        m.add_at(dof[c] + i, so[rr] + k, x);
                    }
                }
            }
        }
    }
    m
}

/// `dim Ext^i(M, N)`.
pub fn ext_dim(alg: &FdAlgebra, m: &Module, n: &Module, i: usize) -> usize {
    let r = minimal_proj_resolution(alg, m, i + 1);
    ext_dim_from(alg, &r, n, i)
}

pub fn ext_dim_from(alg: &FdAlgebra, r: &Resolution, n: &Module, i: usize) -> usize {
    if r.complex.is_zero() || i > r.length() {
        return 0;
    }
    let dim_i: usize = r.term(i).iter().map(|&v| n.dims[v]).sum();
    if dim_i == 0 {
        return 0;
    }
    let out = hom_into(alg, r, n, i);
    let ker = dim_i - rank(&out);
    let inc = if i == 0 { 0 } else { rank(&hom_into(alg, r, n, i - 1)) };
    ker - inc
}

fn rank(m: &Matrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        0
    } else {
        m.rank()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DomDim {
    Finite(usize),
    /// Every term computed within the bound was projective-injective.
    AtLeast(usize),
    Infinite,
}

/// Dominant dimension: the number of leading terms of a minimal injective
/// coresolution of `A_A` that are projective-injective. Computed dually as
/// a projective resolution of `D(A_A)` over the opposite algebra, where a
/// summand `P^op_w` corresponds to `I_w` over `A`.
pub fn domdim(alg: &FdAlgebra, max_len: usize) -> DomDim {
    let op = alg.opposite();
    let nv = alg.num_vertices();
    let proj_inj: Vec<bool> =
        (0..nv).map(|w| Module::injective(alg, w).is_projective_indecomposable(alg).is_some()).collect();
    let mut best: Option<DomDim> = None;
    for v in 0..nv {
        let r = minimal_proj_resolution(&op, &Module::injective(&op, v), max_len);
        let lead = (0..=r.length()).take_while(|&i| r.term(i).iter().all(|&w| proj_inj[w])).count();
        let here = if lead <= r.length() {
            DomDim::Finite(lead)
        } else if r.complete {
            DomDim::Infinite
        } else {
            DomDim::AtLeast(lead)
        };
        best = Some(match (best, here) {
            (None, h) => h,
            (Some(b), h) => min_domdim(b, h),
        });
    }
    best.unwrap_or(DomDim::Infinite)
}

fn min_domdim(a: DomDim, b: DomDim) -> DomDim {
    use DomDim::*;
    let key = |x: DomDim| match x {
        Finite(k) => (k, 0),
        AtLeast(k) => (k, 1),
        Infinite => (usize::MAX, 2),
    };
    if key(a) <= key(b) {
        a
    } else {
        b
    }
}

impl DomDim {
    /// Whether the dominant dimension is known to be at least `k`.
    pub fn at_least(&self, k: usize) -> bool {
        match *self {
            DomDim::Finite(m) | DomDim::AtLeast(m) => m >= k,
            DomDim::Infinite => true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bqa::auslander::build_auslander_algebra;
    use crate::bqa::quiver::{BoundQuiver, Quiver};

    #[test]
    fn resolutions_are_complexes() {
        let a = build_auslander_algebra(3, 2).unwrap();
        for v in 0..a.num_vertices() {
            let r = minimal_proj_resolution(&a, &Module::simple(&a, v), 10);
            assert!(r.complete);
            r.complex.check(&a).unwrap();
            assert!(r.complex.is_minimal(&a));
        }
    }

    #[test]
    fn linear_quiver_dimensions() {
        // k(1 -> ... -> 4) is hereditary; truncating at rad^2 gives gldim 3
        let a = build_auslander_algebra(4, 1).unwrap();
        assert_eq!(gldim(&a, 10), Some(1));
        let b = BoundQuiver::truncated(Quiver::linear(4), 2).to_algebra("A4/rad2", 8).unwrap();
        assert_eq!(gldim(&b, 10), Some(3));
        assert_eq!(domdim(&b, 10), DomDim::Finite(3));
        assert_eq!(domdim(&a, 10), DomDim::Finite(1));
    }

    #[test]
    fn ext_between_simples_counts_arrows() {
        let a = build_auslander_algebra(3, 2).unwrap();
        let (q, _) = crate::bqa::present::gabriel_quiver(&a).unwrap();
        for u in 0..a.num_vertices() {
            for w in 0..a.num_vertices() {
                let arrows = q.arrows.iter().filter(|x| x.src == w && x.tgt == u).count();
                let e = ext_dim(&a, &Module::simple(&a, u), &Module::simple(&a, w), 1);
                assert_eq!(e, arrows, "{u} {w}");
                let hom = (u == w) as usize;
                assert_eq!(ext_dim(&a, &Module::simple(&a, u), &Module::simple(&a, w), 0), hom);
            }
        }
    }
}
