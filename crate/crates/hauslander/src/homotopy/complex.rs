//! Bounded complexes of projectives `X^lo -> ... -> X^hi`.
//!
//! A term is a list of vertices, one `P_v` each. A map `P_u -> P_w` is an
//! element `h` of the block `(u, w)` acting by `x -> h * x`, so a matrix
//! entry `(r, c)` lies in the block `(v_c, v_r)` and matrices compose by
//! ordinary row-by-column products.

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bqa::algebra::{elt_add, elt_basis, elt_scale, elt_sub, Elt};
use crate::bqa::FdAlgebra;
use crate::linalg::Q;

/// Matrix with algebra entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PMat {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Elt>,
}

impl PMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PMat { rows, cols, entries: vec![Vec::new(); rows * cols] }
    }

    pub fn get(&self, r: usize, c: usize) -> &Elt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Elt) {
        self.entries[r * self.cols + c] = x;
    }

    pub fn add_to(&mut self, r: usize, c: usize, x: &Elt) {
        let e = &mut self.entries[r * self.cols + c];
        *e = elt_add(e, x);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_empty())
    }

    /// `self` after `other`.
    pub fn mul(&self, alg: &FdAlgebra, other: &PMat) -> PMat {
        assert_eq!(self.cols, other.rows);
        let mut out = PMat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for m in 0..self.cols {
                let a = self.get(r, m);
                if a.is_empty() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(m, c);
                    if !b.is_empty() {
                        let p = alg.mul(a, b);
                        if !p.is_empty() {
                            out.add_to(r, c, &p);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &PMat) -> PMat {
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| elt_add(a, b)).collect();
        PMat { rows: self.rows, cols: self.cols, entries }
    }

    pub fn neg(&self) -> PMat {
        let m1 = -crate::linalg::Q::one();
        PMat { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|e| elt_scale(e, &m1)).collect() }
    }

    pub fn transpose(&self) -> PMat {
        let mut out = PMat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    fn without(&self, row: Option<usize>, col: Option<usize>) -> PMat {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| Some(r) != row).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| Some(c) != col).collect();
        let mut out = PMat::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjComplex {
    /// Degree of `terms[0]`.
    pub lo: i64,
    pub terms: Vec<Vec<usize>>,
    /// `diffs[k]` maps `terms[k]` to `terms[k + 1]`.
    pub diffs: Vec<PMat>,
}

/// Inverse of an element `lambda e_v + n` with `n` nilpotent in `e_v A e_v`.
pub fn invert_local(alg: &FdAlgebra, x: &Elt, v: usize) -> Option<Elt> {
    let lambda = x.iter().find(|(i, _)| *i == v).map(|(_, c)| c.clone())?;
    if lambda.is_zero() {
        return None;
    }
    let inv = lambda.recip();
    // x = lambda (e + n)
    let n = elt_sub(&elt_scale(x, &inv), &elt_basis(v));
    let mut term = elt_basis(v);
    let mut acc = elt_basis(v);
    let mneg = elt_scale(&n, &-crate::linalg::Q::one());
    for _ in 0..alg.dim() {
        term = alg.mul(&mneg, &term);
        if term.is_empty() {
            return Some(elt_scale(&acc, &inv));
        }
        acc = elt_add(&acc, &term);
    }
    None
}

impl ProjComplex {
    pub fn zero() -> Self {
        ProjComplex { lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    /// A single term in degree `deg`.
    pub fn stalk(vs: Vec<usize>, deg: i64) -> Self {
        ProjComplex { lo: deg, terms: vec![vs], diffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.is_empty())
    }

    /// Highest degree (meaningless for the zero complex).
    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    pub fn term(&self, k: i64) -> &[usize] {
        if k < self.lo || k > self.hi() {
            return &[];
        }
        &self.terms[(k - self.lo) as usize]
    }

    /// `d^k: X^k -> X^{k+1}`, if both ends lie in the window.
    pub fn diff(&self, k: i64) -> Option<&PMat> {
        if k < self.lo || k >= self.hi() {
            return None;
        }
        Some(&self.diffs[(k - self.lo) as usize])
    }

    /// Sum of the term sizes.
    pub fn size(&self) -> usize {
        self.terms.iter().map(|t| t.len()).sum()
    }

    /// `X[m]`: degree `k` holds `X^{k+m}` and the differential picks up `(-1)^m`.
    pub fn shift(&self, m: i64) -> Self {
        let diffs = if m.rem_euclid(2) == 1 { self.diffs.iter().map(|d| d.neg()).collect() } else { self.diffs.clone() };
        ProjComplex { lo: self.lo - m, terms: self.terms.clone(), diffs }
    }

    pub fn direct_sum(parts: &[&ProjComplex]) -> Self {
        let parts: Vec<&&ProjComplex> = parts.iter().filter(|p| !p.is_zero()).collect();
        if parts.is_empty() {
            return Self::zero();
        }
        let lo = parts.iter().map(|p| p.lo).min().unwrap();
        let hi = parts.iter().map(|p| p.hi()).max().unwrap();
        let terms: Vec<Vec<usize>> =
            (lo..=hi).map(|k| parts.iter().flat_map(|p| p.term(k).iter().copied()).collect()).collect();
        let mut diffs = Vec::new();
        for k in lo..hi {
            let (nr, nc) = (terms[(k + 1 - lo) as usize].len(), terms[(k - lo) as usize].len());
            let mut m = PMat::zeros(nr, nc);
            let (mut ro, mut co) = (0, 0);
            for p in &parts {
                if let Some(d) = p.diff(k) {
                    for r in 0..d.rows {
                        for c in 0..d.cols {
                            m.set(ro + r, co + c, d.get(r, c).clone());
                        }
                    }
                }
                ro += p.term(k + 1).len();
                co += p.term(k).len();
            }
            diffs.push(m);
        }
        ProjComplex { lo, terms, diffs }
    }

    /// Checks block compatibility of entries and `d d = 0`.
    pub fn check(&self, alg: &FdAlgebra) -> Result<(), String> {
        for (k, d) in self.diffs.iter().enumerate() {
            let (src, tgt) = (&self.terms[k], &self.terms[k + 1]);
            if d.rows != tgt.len() || d.cols != src.len() {
                return Err(format!("differential {k} has the wrong shape"));
            }
            for r in 0..d.rows {
                for c in 0..d.cols {
                    for (i, _) in d.get(r, c) {
                        let e = alg.elem(*i);
                        if e.src != src[c] || e.tgt != tgt[r] {
                            return Err(format!("entry ({r},{c}) of differential {k} is in the wrong block"));
                        }
                    }
                }
            }
        }
        for k in 1..self.diffs.len() {
            if !self.diffs[k].mul(alg, &self.diffs[k - 1]).is_zero() {
                return Err(format!("d d != 0 at degree {}", self.lo + k as i64 - 1));
            }
        }
        Ok(())
    }

    /// No differential entry has an idempotent component.
    pub fn is_minimal(&self, alg: &FdAlgebra) -> bool {
        self.diffs.iter().all(|d| d.entries.iter().all(|e| e.iter().all(|(i, _)| !alg.is_idempotent(*i))))
    }

    /// Drops empty terms at both ends.
    pub fn trimmed(mut self) -> Self {
        while self.terms.last().is_some_and(|t| t.is_empty()) {
            self.terms.pop();
            if !self.diffs.is_empty() {
                self.diffs.pop();
            }
        }
        while self.terms.first().is_some_and(|t| t.is_empty()) {
            self.terms.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.lo += 1;
        }
        if self.terms.is_empty() {
            return Self::zero();
        }
        self
    }

    /// Removes contractible summands `P_v -> P_v` by Gaussian elimination
    /// until every entry lies in the radical.
    pub fn minimize(&self, alg: &FdAlgebra) -> Self {
        let mut x = self.clone();
        loop {
            let Some((k, r, c, inv)) = x.find_pivot(alg) else { break };
            let d = &x.diffs[k];
            // new d^k = alpha - gamma delta^{-1} beta
            let mut nd = d.without(Some(r), Some(c));
            let rows: Vec<usize> = (0..d.rows).filter(|&i| i != r).collect();
            let cols: Vec<usize> = (0..d.cols).filter(|&j| j != c).collect();
            for (i, &rr) in rows.iter().enumerate() {
                let gamma = d.get(rr, c);
                if gamma.is_empty() {
                    continue;
                }
                let g_inv = alg.mul(gamma, &inv);
                if g_inv.is_empty() {
                    continue;
                }
                for (j, &cc) in cols.iter().enumerate() {
                    let beta = d.get(r, cc);
                    if beta.is_empty() {
                        continue;
                    }
                    let p = alg.mul(&g_inv, beta);
                    if !p.is_empty() {
                        nd.add_to(i, j, &elt_scale(&p, &-crate::linalg::Q::one()));
                    }
                }
            }
            x.diffs[k] = nd;
            if k > 0 {
                x.diffs[k - 1] = x.diffs[k - 1].without(Some(c), None);
            }
            if k + 1 < x.diffs.len() {
                x.diffs[k + 1] = x.diffs[k + 1].without(None, Some(r));
            }
            x.terms[k].remove(c);
            x.terms[k + 1].remove(r);
        }
        x.trimmed()
    }

    fn find_pivot(&self, alg: &FdAlgebra) -> Option<(usize, usize, usize, Elt)> {
        for (k, d) in self.diffs.iter().enumerate() {
            for r in 0..d.rows {
                for c in 0..d.cols {
                    let v = self.terms[k][c];
                    if self.terms[k + 1][r] != v {
                        continue;
                    }
                    let e = d.get(r, c);
                    if e.iter().any(|(i, _)| *i == v) {
                        if let Some(inv) = invert_local(alg, e, v) {
                            return Some((k, r, c, inv));
                        }
                    }
                }
            }
        }
        None
    }

    /// `Hom_A(X, A)` as a complex over the opposite algebra, which shares the
    /// basis: degrees are negated and matrices transposed.
    pub fn dual(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let terms: Vec<Vec<usize>> = self.terms.iter().rev().cloned().collect();
        let diffs = self.diffs.iter().rev().map(|d| d.transpose()).collect();
        ProjComplex { lo: -self.hi(), terms, diffs }
    }

    /// Sorted term lists per degree, the invariant compared before looking
    /// for an isomorphism.
    pub fn signature(&self) -> (i64, Vec<Vec<usize>>) {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut t = t.clone();
                t.sort();
                t
            })
            .collect();
        (self.lo, terms)
    }

    /// Human-readable terms, e.g. `P3 -> P4` with the top degree marked.
    pub fn describe(&self, alg: &FdAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                if t.is_empty() {
                    "0".into()
                } else {
                    t.iter().map(|&v| format!("P{}", alg.vertex_label(v))).collect::<Vec<_>>().join("+")
                }
            })
            .collect();
        format!("[{}..{}] {}", self.lo, self.hi(), parts.join(" -> "))
    }
}

/// A chain map `X -> Y[k]`: component `j` maps `X^j` to `Y^{j+k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub degree: i64,
    /// Indexed by `j - X.lo`.
    pub comps: Vec<PMat>,
}

impl ChainMap {
    /// Composite `g after f` for `f: X -> Y[k]` and `g: Y -> Z[l]`.
    pub fn compose(
        alg: &FdAlgebra,
        x: &ProjComplex,
        y: &ProjComplex,
        z: &ProjComplex,
        g: &ChainMap,
        f: &ChainMap,
    ) -> ChainMap {
        let degree = f.degree + g.degree;
        let comps = f
            .comps
            .iter()
            .enumerate()
            .map(|(i, fc)| {
                let j = x.lo + i as i64;
                let yj = j + f.degree;
                if !y.is_zero() && yj >= y.lo && yj <= y.hi() {
                    g.comps[(yj - y.lo) as usize].mul(alg, fc)
                } else {
                    PMat::zeros(z.term(j + degree).len(), fc.cols)
                }
            })
            .collect();
        ChainMap { degree, comps }
    }

    pub fn identity(x: &ProjComplex) -> ChainMap {
        let comps = x
            .terms
            .iter()
            .map(|t| {
                let mut m = PMat::zeros(t.len(), t.len());
                for (i, &v) in t.iter().enumerate() {
                    m.set(i, i, elt_basis(v));
                }
                m
            })
            .collect();
        ChainMap { degree: 0, comps }
    }

    /// Coefficients of the idempotents, per component: the map modulo the
    /// radical.
    pub fn scalar_parts(&self, x: &ProjComplex, y: &ProjComplex) -> Vec<crate::linalg::Matrix> {
        self.comps
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let j = x.lo + i as i64;
                let (src, tgt) = (x.term(j), y.term(j + self.degree));
                let mut out = crate::linalg::Matrix::zeros(m.rows, m.cols);
                for r in 0..m.rows {
                    for c in 0..m.cols {
                        if src[c] == tgt[r] {
                            out.set(r, c, crate::bqa::algebra::elt_coef(m.get(r, c), src[c]));
                        }
                    }
                }
                out
            })
            .collect()
    }
}

/// Mapping cone of a degree-zero chain map `f: X -> Y`:
/// `C^j = X^{j+1} + Y^j` with `d(x, y) = (-d x, f x + d y)`.
pub fn cone(alg: &FdAlgebra, x: &ProjComplex, y: &ProjComplex, f: &ChainMap) -> ProjComplex {
    assert_eq!(f.degree, 0);
    let _ = alg;
    if x.is_zero() {
        return y.clone();
    }
    let xs = x.shift(1);
    let lo = if y.is_zero() { xs.lo } else { xs.lo.min(y.lo) };
    let hi = if y.is_zero() { xs.hi() } else { xs.hi().max(y.hi()) };
    let mut terms = Vec::new();
    for k in lo..=hi {
        let mut t = x.term(k + 1).to_vec();
        t.extend_from_slice(y.term(k));
        terms.push(t);
    }
    let mut diffs = Vec::new();
    for k in lo..hi {
        let (ax, ay) = (x.term(k + 1).len(), y.term(k).len());
        let (bx, by) = (x.term(k + 2).len(), y.term(k + 1).len());
        let mut m = PMat::zeros(bx + by, ax + ay);
        if let Some(d) = x.diff(k + 1) {
            for r in 0..d.rows {
                for c in 0..d.cols {
                    m.set(r, c, elt_scale(d.get(r, c), &-crate::linalg::Q::one()));
                }
            }
        }
        let fi = k + 1 - x.lo;
        if fi >= 0 && (fi as usize) < f.comps.len() {
            let fc = &f.comps[fi as usize];
            for r in 0..fc.rows {
                for c in 0..fc.cols {
                    m.set(bx + r, c, fc.get(r, c).clone());
                }
            }
        }
        if let Some(d) = y.diff(k) {
            for r in 0..d.rows {
                for c in 0..d.cols {
                    m.set(bx + r, ax + c, d.get(r, c).clone());
                }
            }
        }
        diffs.push(m);
    }
    ProjComplex { lo, terms, diffs }.trimmed()
}

/// Serialized complex: degrees `lo..=hi`, terms as vertex labels and each
/// differential entry as a combination of basis paths.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComplexJson {
    pub schema: u32,
    pub lo: i64,
    pub hi: i64,
    pub terms: Vec<Vec<VertexRef>>,
    /// `diffs[k][r][c]` is the entry `(r, c)` of `d^{lo + k}`.
    pub diffs: Vec<Vec<Vec<Vec<PathTerm>>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VertexRef {
    pub id: usize,
    pub label: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PathTerm {
    pub coeff: String,
    pub basis: usize,
    pub path: String,
}

impl ProjComplex {
    pub fn to_json(&self, alg: &FdAlgebra) -> ComplexJson {
        let terms = self
            .terms
            .iter()
            .map(|t| t.iter().map(|&v| VertexRef { id: v, label: alg.vertex_label(v).to_string() }).collect())
            .collect();
        let diffs = self
            .diffs
            .iter()
            .map(|d| {
                (0..d.rows)
                    .map(|r| {
                        (0..d.cols)
                            .map(|c| {
                                d.get(r, c)
                                    .iter()
                                    .map(|(b, q)| PathTerm {
                                        coeff: q.to_string(),
                                        basis: *b,
                                        path: alg.elem(*b).label.clone(),
                                    })
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        ComplexJson { schema: 1, lo: self.lo, hi: self.hi(), terms, diffs }
    }

    /// Inverse of `to_json`; the result is checked to be a complex.
    pub fn from_json(alg: &FdAlgebra, j: &ComplexJson) -> Result<Self, String> {
        if j.schema != 1 {
            return Err(format!("unsupported schema {}", j.schema));
        }
        if j.diffs.len() + 1 != j.terms.len().max(1) || j.hi != j.lo + j.terms.len() as i64 - 1 {
            return Err("degree window does not match the terms".into());
        }
        let terms: Vec<Vec<usize>> = j.terms.iter().map(|t| t.iter().map(|v| v.id).collect()).collect();
        for &v in terms.iter().flatten() {
            if v >= alg.num_vertices() {
                return Err(format!("vertex {v} out of range"));
            }
        }
        let mut diffs = Vec::new();
        for (k, d) in j.diffs.iter().enumerate() {
            let (rows, cols) = (terms[k + 1].len(), terms[k].len());
            let mut m = PMat::zeros(rows, cols);
            if d.len() != rows || d.iter().any(|row| row.len() != cols) {
                return Err(format!("differential {k} has the wrong shape"));
            }
            for (r, row) in d.iter().enumerate() {
                for (c, entry) in row.iter().enumerate() {
                    let mut x = Elt::new();
                    for t in entry {
                        let q: Q = t.coeff.parse().map_err(|_| format!("bad coefficient {}", t.coeff))?;
                        if t.basis >= alg.dim() {
                            return Err(format!("basis index {} out of range", t.basis));
                        }
                        let e = alg.elem(t.basis);
                        if (e.src, e.tgt) != (terms[k][c], terms[k + 1][r]) {
                            return Err(format!("entry ({r}, {c}) of differential {k} leaves its block"));
                        }
                        x = elt_add(&x, &elt_scale(&elt_basis(t.basis), &q));
                    }
                    m.set(r, c, x);
                }
            }
            diffs.push(m);
        }
        let out = ProjComplex { lo: j.lo, terms, diffs };
        out.check(alg)?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bqa::auslander::build_auslander_algebra;

    fn path_elt(alg: &FdAlgebra, src: usize, tgt: usize) -> Elt {
        elt_basis(alg.block(src, tgt)[0])
    }

    #[test]
    fn contractible_pieces_vanish() {
        let a = build_auslander_algebra(4, 1).unwrap();
        // P2 -id-> P2 is contractible; P1 -> P2 is minimal
        let mut d = PMat::zeros(1, 1);
        d.set(0, 0, elt_basis(1));
        let c = ProjComplex { lo: 0, terms: vec![vec![1], vec![1]], diffs: vec![d] };
        c.check(&a).unwrap();
        assert!(c.minimize(&a).is_zero());
        let mut d2 = PMat::zeros(1, 1);
        d2.set(0, 0, path_elt(&a, 0, 1));
        let m = ProjComplex { lo: -1, terms: vec![vec![0], vec![1]], diffs: vec![d2] };
        m.check(&a).unwrap();
        assert!(m.is_minimal(&a));
        assert_eq!(m.minimize(&a), m);
    }

    #[test]
    fn shift_and_dual() {
        let a = build_auslander_algebra(4, 1).unwrap();
        let mut d = PMat::zeros(1, 1);
        d.set(0, 0, path_elt(&a, 2, 3));
        let c = ProjComplex { lo: -1, terms: vec![vec![2], vec![3]], diffs: vec![d] };
        let s = c.shift(1);
        assert_eq!(s.lo, -2);
        assert_eq!(s.shift(-1), c);
        let op = a.opposite();
        let dual = c.dual();
        dual.check(&op).unwrap();
        assert_eq!(dual.lo, 0);
        assert_eq!(dual.dual(), c);
    }

    #[test]
    fn cone_of_identity_is_contractible() {
        let a = build_auslander_algebra(3, 2).unwrap();
        let x = ProjComplex::stalk(vec![2, 4], 0);
        let mut f = PMat::zeros(2, 2);
        f.set(0, 0, elt_basis(2));
        f.set(1, 1, elt_basis(4));
        let c = cone(&a, &x, &x, &ChainMap { degree: 0, comps: vec![f] });
        c.check(&a).unwrap();
        assert!(c.minimize(&a).is_zero());
    }

    #[test]
    fn json_round_trip() {
        let a = build_auslander_algebra(3, 2).unwrap();
        for v in 0..a.num_vertices() {
            let r = crate::homotopy::minimal_proj_resolution(&a, &crate::bqa::Module::simple(&a, v), 8);
            let j = r.complex.to_json(&a);
            let text = serde_json::to_string(&j).unwrap();
            let back: ComplexJson = serde_json::from_str(&text).unwrap();
            assert_eq!(ProjComplex::from_json(&a, &back).unwrap(), r.complex);
        }
        let mut bad = ProjComplex::stalk(vec![0], 0).to_json(&a);
        bad.hi = 3;
        assert!(ProjComplex::from_json(&a, &bad).is_err());
    }
}
