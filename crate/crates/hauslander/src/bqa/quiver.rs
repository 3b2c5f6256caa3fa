//! Quivers with homogeneous relations and their path-algebra quotients.

use std::collections::HashMap;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::algebra::{Arrow, BasisElem, Elt, FdAlgebra, PathData};
use super::BqaError;
use crate::linalg::{Echelon, Matrix, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

/// Linear combination of parallel paths; each path lists arrow ids in the
/// order they are traversed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Q, Vec<usize>)>,
}

impl Relation {
    pub fn zero_path(path: Vec<usize>) -> Self {
        Relation { terms: vec![(Q::one(), path)] }
    }

    pub fn commutativity(p: Vec<usize>, q: Vec<usize>) -> Self {
        Relation { terms: vec![(Q::one(), p), (-Q::one(), q)] }
    }
}

#[derive(Clone, Debug)]
pub struct BoundQuiver {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self, BqaError> {
        for a in &arrows {
            if a.src >= vertices.len() || a.tgt >= vertices.len() {
                return Err(BqaError::Invalid(format!("arrow {} has bad endpoints", a.label)));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Linear quiver `1 -> 2 -> ... -> m`.
    pub fn linear(m: usize) -> Self {
        let vertices = (1..=m).map(|i| i.to_string()).collect();
        let arrows = (0..m.saturating_sub(1))
            .map(|i| Arrow { src: i, tgt: i + 1, label: format!("a{}", i + 1) })
            .collect();
        Quiver { vertices, arrows }
    }

    fn path_ends(&self, p: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*p.first()?)?;
        let mut at = first.src;
        for &a in p {
            let arr = self.arrows.get(a)?;
            if arr.src != at {
                return None;
            }
            at = arr.tgt;
        }
        Some((first.src, at))
    }
}

impl BoundQuiver {
    pub fn new(quiver: Quiver, relations: Vec<Relation>) -> Result<Self, BqaError> {
        for r in &relations {
            let ends: Vec<_> = r.terms.iter().map(|(_, p)| quiver.path_ends(p)).collect();
            let len0 = r.terms.first().map(|(_, p)| p.len());
            if ends.iter().any(|e| e.is_none() || *e != ends[0])
                || r.terms.iter().any(|(_, p)| Some(p.len()) != len0)
                || r.terms.iter().all(|(c, _)| c.is_zero())
            {
                return Err(BqaError::Invalid("relation paths must be parallel, of equal length and nonzero".into()));
            }
        }
        Ok(BoundQuiver { quiver, relations })
    }

    /// `kQ / rad^m` of a quiver: all paths of length `m` are zero.
    pub fn truncated(quiver: Quiver, m: usize) -> Self {
        let mut rels = Vec::new();
        for p in all_paths_of_length(&quiver, m) {
            rels.push(Relation::zero_path(p));
        }
        BoundQuiver { quiver, relations: rels }
    }

    /// Reduces paths modulo the relation ideal one length at a time.
    pub fn to_algebra(&self, name: &str, max_len: usize) -> Result<FdAlgebra, BqaError> {
        let q = &self.quiver;
        let nv = q.vertices.len();
        // levels[L][(s,t)] = paths of length L, lexicographic
        let mut levels: Vec<HashMap<(usize, usize), Vec<Vec<usize>>>> = Vec::new();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut level1: HashMap<(usize, usize), Vec<Vec<usize>>> = HashMap::new();
        for (i, a) in q.arrows.iter().enumerate() {
            level1.entry((a.src, a.tgt)).or_default().push(vec![i]);
        }
        levels.push(HashMap::new());
        levels.push(level1);
        // per level and block: reduced row echelon rows of the ideal and pivot flags
        let mut ideals: Vec<HashMap<(usize, usize), (Matrix, Vec<usize>)>> = vec![HashMap::new()];
        let mut len = 1;
        loop {
            if len > max_len {
                return Err(BqaError::NotNilpotent);
            }
            for paths in levels[len].values() {
                for (i, p) in paths.iter().enumerate() {
                    index.insert(p.clone(), i);
                }
            }
            let mut level_ideal = HashMap::new();
            let mut survivors = 0;
            for (&(s, t), paths) in &levels[len] {
                let mut e = Echelon::new(paths.len());
                for r in &self.relations {
                    if r.terms[0].1.len() != len || q.path_ends(&r.terms[0].1) != Some((s, t)) {
                        continue;
                    }
                    let mut v = vec![Q::zero(); paths.len()];
                    for (c, p) in &r.terms {
                        v[index[p]] += c;
                    }
                    e.insert(v);
                }
                if len >= 2 {
                    // extend the previous ideal by one arrow on either side
                    for (&(s2, t2), (rows, _)) in &ideals[len - 1] {
                        let prev_paths = &levels[len - 1][&(s2, t2)];
                        for (ai, arr) in q.arrows.iter().enumerate() {
                            if s2 == s && arr.src == t2 && arr.tgt == t {
                                for r in 0..rows.rows() {
                                    let mut v = vec![Q::zero(); paths.len()];
                                    for (j, p) in prev_paths.iter().enumerate() {
                                        let c = rows.get(r, j);
                                        if !c.is_zero() {
                                            let mut ext = p.clone();
                                            ext.push(ai);
                                            v[index[&ext]] += c;
                                        }
                                    }
                                    e.insert(v);
                                }
                            }
                            if t2 == t && arr.tgt == s2 && arr.src == s {
                                for r in 0..rows.rows() {
                                    let mut v = vec![Q::zero(); paths.len()];
                                    for (j, p) in prev_paths.iter().enumerate() {
                                        let c = rows.get(r, j);
                                        if !c.is_zero() {
                                            let mut ext = vec![ai];
                                            ext.extend_from_slice(p);
                                            v[index[&ext]] += c;
                                        }
                                    }
                                    e.insert(v);
                                }
                            }
                        }
                    }
                }
                survivors += paths.len() - e.rank();
                let m = if e.rank() == 0 { Matrix::zeros(0, paths.len()) } else { Matrix::from_rows(e.basis()) };
                let (rref, piv) = m.rref();
                let rows = Matrix::from_rows((0..piv.len()).map(|i| rref.row(i).to_vec()).collect());
                let rows = if piv.is_empty() { Matrix::zeros(0, paths.len()) } else { rows };
                level_ideal.insert((s, t), (rows, piv));
            }
            ideals.push(level_ideal);
            if survivors == 0 {
                break;
            }
            // next level: extend surviving structure by all arrows
            let mut next: HashMap<(usize, usize), Vec<Vec<usize>>> = HashMap::new();
            let mut keys: Vec<_> = levels[len].keys().copied().collect();
            keys.sort_unstable();
            for (s, t) in keys {
                for p in &levels[len][&(s, t)] {
                    for (ai, arr) in q.arrows.iter().enumerate() {
                        if arr.src == t {
                            let mut ext = p.clone();
                            ext.push(ai);
                            next.entry((s, arr.tgt)).or_default().push(ext);
                        }
                    }
                }
            }
            for v in next.values_mut() {
                v.sort();
            }
            len += 1;
            levels.push(next);
        }
        let top = len;
        // basis: non-pivot paths of each level
        let mut radical = Vec::new();
        let mut words: Vec<Vec<usize>> = vec![Vec::new(); nv];
        let mut basis_of: HashMap<Vec<usize>, usize> = HashMap::new();
        for (l, level) in levels.iter().enumerate().take(top).skip(1) {
            let mut keys: Vec<_> = level.keys().copied().collect();
            keys.sort_unstable();
            for (s, t) in keys {
                let paths = &level[&(s, t)];
                let piv = &ideals[l][&(s, t)].1;
                for (j, p) in paths.iter().enumerate() {
                    if !piv.contains(&j) {
                        basis_of.insert(p.clone(), radical.len());
                        let label = p.iter().rev().map(|&a| q.arrows[a].label.clone()).collect::<Vec<_>>().join("");
                        radical.push(BasisElem { src: s, tgt: t, label, degree: l as i32 });
                        words.push(p.clone());
                    }
                }
            }
        }
        // normal form of a path of known length, over `radical`
        let normal_form = |p: &[usize]| -> Elt {
            let l = p.len();
            if l >= top {
                return Vec::new();
            }
            let (s, t) = q.path_ends(p).expect("valid path");
            let paths = &levels[l][&(s, t)];
            let j = paths.iter().position(|x| x == p).expect("enumerated");
            let (rows, piv) = &ideals[l][&(s, t)];
            if let Some(r) = piv.iter().position(|&c| c == j) {
                let mut out = Vec::new();
                for (k, x) in paths.iter().enumerate() {
                    let c = rows.get(r, k);
                    if k != j && !c.is_zero() {
                        out.push((basis_of[x], -c.clone()));
                    }
                }
                out.sort_by_key(|(i, _)| *i);
                out
            } else {
                vec![(basis_of[p], Q::one())]
            }
        };
        let mut table = HashMap::new();
        for (ia, wa) in words[nv..].iter().enumerate() {
            for (ib, wb) in words[nv..].iter().enumerate() {
                if q.arrows[*wa.last().unwrap()].tgt != q.arrows[wb[0]].src {
                    continue;
                }
                let mut cat = wa.clone();
                cat.extend_from_slice(wb);
                let x = normal_form(&cat);
                if !x.is_empty() {
                    table.insert((ib, ia), x);
                }
            }
        }
        let alg = FdAlgebra::new(name, q.vertices.clone(), radical, table)?;
        Ok(alg.with_grading().with_paths(PathData { arrows: q.arrows.clone(), words }))
    }
}

pub fn all_paths_of_length(q: &Quiver, m: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<Vec<usize>> = (0..q.arrows.len()).map(|a| vec![a]).collect();
    for _ in 1..m {
        let mut next = Vec::new();
        for p in &cur {
            let end = q.arrows[*p.last().unwrap()].tgt;
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.src == end {
                    let mut e = p.clone();
                    e.push(ai);
                    next.push(e);
                }
            }
        }
        cur = next;
    }
    if m == 0 {
        return Vec::new();
    }
    cur
}

/// Serializable form shared by the CLI.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct QuiverJson {
    pub schema: u32,
    pub vertices: Vec<VertexJson>,
    pub arrows: Vec<ArrowJson>,
    pub relations: Vec<Vec<TermJson>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VertexJson {
    pub id: usize,
    pub label: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArrowJson {
    pub id: usize,
    pub src: usize,
    pub tgt: usize,
    pub label: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub coeff: String,
    pub path: Vec<usize>,
}

impl BoundQuiver {
    pub fn to_json(&self) -> QuiverJson {
        QuiverJson {
            schema: 1,
            vertices: self
                .quiver
                .vertices
                .iter()
                .enumerate()
                .map(|(id, l)| VertexJson { id, label: l.clone() })
                .collect(),
            arrows: self
                .quiver
                .arrows
                .iter()
                .enumerate()
                .map(|(id, a)| ArrowJson { id, src: a.src, tgt: a.tgt, label: a.label.clone() })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| r.terms.iter().map(|(c, p)| TermJson { coeff: c.to_string(), path: p.clone() }).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &QuiverJson) -> Result<Self, BqaError> {
        if j.schema != 1 {
            return Err(BqaError::Invalid(format!("unsupported schema {}", j.schema)));
        }
        let vertices = j.vertices.iter().map(|v| v.label.clone()).collect();
        let arrows = j.arrows.iter().map(|a| Arrow { src: a.src, tgt: a.tgt, label: a.label.clone() }).collect();
        let mut rels = Vec::new();
        for r in &j.relations {
            let mut terms = Vec::new();
            for t in r {
                let c: Q = t.coeff.parse().map_err(|_| BqaError::Invalid(format!("bad coefficient {}", t.coeff)))?;
                terms.push((c, t.path.clone()));
            }
            rels.push(Relation { terms });
        }
        BoundQuiver::new(Quiver::new(vertices, arrows)?, rels)
    }

    /// Relation written right to left, as composites are usually printed.
    pub fn relation_string(&self, r: &Relation) -> String {
        let mut out = String::new();
        for (i, (c, p)) in r.terms.iter().enumerate() {
            let labels: Vec<&str> = p.iter().rev().map(|&a| self.quiver.arrows[a].label.as_str()).collect();
            let sep = if labels.iter().all(|l| l.chars().count() == 1) { "" } else { " " };
            let word = labels.join(sep);
            let neg = c < &Q::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            let coef = if mag == Q::one() { String::new() } else { format!("{mag}*") };
            if i == 0 {
                out.push_str(&format!("{}{coef}{word}", if neg { "-" } else { "" }));
            } else {
                out.push_str(&format!(" {} {coef}{word}", if neg { "-" } else { "+" }));
            }
        }
        out
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn tex_escape(s: &str) -> String {
    s.replace('_', "\\_").replace('#', "\\#").replace("->", "\\to ").replace("<-", "\\leftarrow ")
}

impl BoundQuiver {
    /// DOT digraph; relations are listed as comments.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph \"{}\" {{\n", dot_escape(name));
        for r in &self.relations {
            out.push_str(&format!("  // relation: {}\n", self.relation_string(r)));
        }
        for (i, v) in self.quiver.vertices.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{}\"];\n", dot_escape(v)));
        }
        for a in &self.quiver.arrows {
            out.push_str(&format!("  v{} -> v{} [label=\"{}\"];\n", a.src, a.tgt, dot_escape(&a.label)));
        }
        out.push_str("}\n");
        out
    }

    /// Three `tabular` blocks: vertices, arrows, relations.
    pub fn to_tex(&self) -> String {
        let mut out = String::from("\\begin{tabular}{rl}\n\\hline\nid & vertex \\\\\n\\hline\n");
        for (i, v) in self.quiver.vertices.iter().enumerate() {
            out.push_str(&format!("{i} & ${}$ \\\\\n", tex_escape(v)));
        }
        out.push_str("\\hline\n\\end{tabular}\n\n\\begin{tabular}{rlll}\n\\hline\nid & arrow & source & target \\\\\n\\hline\n");
        for (i, a) in self.quiver.arrows.iter().enumerate() {
            out.push_str(&format!(
                "{i} & ${}$ & {} & {} \\\\\n",
                tex_escape(&a.label),
                a.src,
                a.tgt
            ));
        }
        out.push_str("\\hline\n\\end{tabular}\n\n\\begin{tabular}{rl}\n\\hline\nid & relation \\\\\n\\hline\n");
        for (i, r) in self.relations.iter().enumerate() {
            out.push_str(&format!("{i} & ${}$ \\\\\n", tex_escape(&self.relation_string(r))));
        }
        out.push_str("\\hline\n\\end{tabular}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn linear_truncations() {
        let a = BoundQuiver::truncated(Quiver::linear(10), 3).to_algebra("A10/r3", 20).unwrap();
        assert_eq!(a.dim(), 27);
        a.check_associative().unwrap();
        assert_eq!(a.loewy_length().unwrap(), 3);
        let free = BoundQuiver::new(Quiver::linear(4), vec![]).unwrap().to_algebra("A4", 10).unwrap();
        assert_eq!(free.dim(), 10);
    }

    #[test]
    fn commutative_square_with_zero() {
        // 1 -a-> 2 -b-> 3 -d-> 5, 2 -g-> 4 -m-> 5 with ga = 0 and db = mg
        let v: Vec<String> = (1..=5).map(|i| i.to_string()).collect();
        let arr = |s, t, l: &str| Arrow { src: s, tgt: t, label: l.into() };
        let quiver = Quiver::new(v, vec![arr(0, 1, "α"), arr(1, 2, "β"), arr(1, 3, "γ"), arr(2, 4, "δ"), arr(3, 4, "μ")]).unwrap();
        let rels = vec![Relation::zero_path(vec![0, 2]), Relation::commutativity(vec![1, 3], vec![2, 4])];
        let bq = BoundQuiver::new(quiver, rels).unwrap();
        let a = bq.to_algebra("B0", 10).unwrap();
        assert_eq!(a.dim(), 12);
        a.check_associative().unwrap();
        assert_eq!(bq.relation_string(&bq.relations[1]), "δβ - μγ");
        let j = bq.to_json();
        let back = BoundQuiver::from_json(&j).unwrap();
        assert_eq!(back.to_json(), j);
        let r = Relation { terms: vec![(q(2), vec![0, 1])] };
        assert_eq!(bq.relation_string(&r), "2*βα");
    }
}
