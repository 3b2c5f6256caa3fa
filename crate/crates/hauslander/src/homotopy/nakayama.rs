//! The derived Nakayama functor on complexes of projectives.
//!
//! `nu` sends `P_v` to `I_v`; the resulting complex of injectives is turned
//! back into a complex of projectives by resolving it degree by degree from
//! the top, building a quasi-isomorphism whose mapping cone is acyclic.

use num::Zero;

use super::complex::{PMat, ProjComplex};
use super::HomotopyError;
use crate::bqa::{FdAlgebra, ModMap, Module};
use crate::linalg::{CoordSolver, Matrix, Q};

/// A bounded complex of modules, `maps[k]: mods[k] -> mods[k + 1]`.
#[derive(Clone, Debug)]
pub struct ModComplex {
    pub lo: i64,
    pub mods: Vec<Module>,
    pub maps: Vec<ModMap>,
}

impl ModComplex {
    pub fn hi(&self) -> i64 {
        self.lo + self.mods.len() as i64 - 1
    }

    fn module(&self, alg: &FdAlgebra, k: i64) -> Module {
        if k < self.lo || k > self.hi() {
            Module::zero(alg)
        } else {
            self.mods[(k - self.lo) as usize].clone()
        }
    }

    fn map(&self, alg: &FdAlgebra, k: i64) -> ModMap {
        if k >= self.lo && k < self.hi() {
            self.maps[(k - self.lo) as usize].clone()
        } else {
            ModMap::zero(&self.module(alg, k), &self.module(alg, k + 1))
        }
    }

    pub fn check(&self, alg: &FdAlgebra) -> Result<(), String> {
        for (k, f) in self.maps.iter().enumerate() {
            if !self.mods[k].is_hom(alg, &self.mods[k + 1], f) {
                return Err(format!("map {k} is not a homomorphism"));
            }
            if k > 0 && !f.compose(&self.maps[k - 1]).is_zero() {
                return Err(format!("d d != 0 at {k}"));
            }
        }
        Ok(())
    }
}

/// The map `P(src) -> P(tgt)` of a matrix, vertexwise.
pub fn pmat_modmap(alg: &FdAlgebra, src: &[usize], tgt: &[usize], m: &PMat) -> ModMap {
    let nv = alg.num_vertices();
    let blocks = (0..nv)
        .map(|z| {
            let roff = offsets(tgt.iter().map(|&w| alg.block(z, w).len()));
            let coff = offsets(src.iter().map(|&u| alg.block(z, u).len()));
            let mut out = Matrix::zeros(roff[tgt.len()], coff[src.len()]);
            for (c, &u) in src.iter().enumerate() {
                for (jx, &x) in alg.block(z, u).iter().enumerate() {
                    let xe = vec![(x, num::One::one())];
                    for r in 0..tgt.len() {
                        let h = m.get(r, c);
                        if h.is_empty() {
                            continue;
                        }
                        for (i, coef) in alg.mul(h, &xe) {
                            out.add_at(roff[r] + alg.pos(i), coff[c] + jx, &coef);
                        }
                    }
                }
            }
            out
        })
        .collect();
    ModMap { blocks }
}

fn offsets(lens: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut o = vec![0];
    for l in lens {
        o.push(o.last().unwrap() + l);
    }
    o
}

/// `nu X` termwise: `P_v -> I_v`, and `h: P_u -> P_w` goes to the map
/// `I_u -> I_w` dual to `g -> g * h` on the blocks out of `w`.
pub fn nu_termwise(alg: &FdAlgebra, x: &ProjComplex) -> ModComplex {
    let nv = alg.num_vertices();
    let mods: Vec<Module> = x
        .terms
        .iter()
        .map(|t| {
            let parts: Vec<Module> = t.iter().map(|&v| Module::injective(alg, v)).collect();
            Module::direct_sum(alg, &parts.iter().collect::<Vec<_>>())
        })
        .collect();
    let maps = x
        .diffs
        .iter()
        .enumerate()
        .map(|(k, d)| {
            let (src, tgt) = (&x.terms[k], &x.terms[k + 1]);
            let blocks = (0..nv)
                .map(|z| {
                    let roff = offsets(tgt.iter().map(|&w| alg.block(w, z).len()));
                    let coff = offsets(src.iter().map(|&u| alg.block(u, z).len()));
                    let mut out = Matrix::zeros(roff[tgt.len()], coff[src.len()]);
                    for r in 0..tgt.len() {
                        for c in 0..src.len() {
                            let h = d.get(r, c);
                            if h.is_empty() {
                                continue;
                            }
                            for (i, &hi) in alg.block(tgt[r], z).iter().enumerate() {
                                for (j, coef) in alg.mul(&vec![(hi, num::One::one())], h) {
                                    out.add_at(roff[r] + i, coff[c] + alg.pos(j), &coef);
                                }
                            }
                        }
                    }
                    out
                })
                .collect();
            ModMap { blocks }
        })
        .collect();
    ModComplex { lo: x.lo, mods, maps }
}

/// A complex of projectives quasi-isomorphic to `c`, built from the top
/// degree down. Fails if more than `budget` degrees below `c` are needed.
pub fn resolve_complex(alg: &FdAlgebra, c: &ModComplex, budget: usize) -> Result<ProjComplex, HomotopyError> {
    let nv = alg.num_vertices();
    // built degrees, highest first: (vertices, phi to C^j, d to the degree above)
    let mut built: Vec<(Vec<usize>, ModMap, PMat)> = Vec::new();
    let mut j = c.hi();
    let empty_phi = |alg: &FdAlgebra, k: i64| ModMap::zero(&Module::zero(alg), &c.module(alg, k));
    loop {
        let (p1, phi1) = match built.last() {
            Some((v, f, _)) => (v.clone(), f.clone()),
            None => (Vec::new(), empty_phi(alg, j + 1)),
        };
        let (p2, d1) = match built.len() {
            0 | 1 => (Vec::new(), PMat::zeros(0, p1.len())),
            n => (built[n - 2].0.clone(), built[n - 1].2.clone()),
        };
        let pm1 = Module::projective_sum(alg, &p1);
        let pm2 = Module::projective_sum(alg, &p2);
        let cj = c.module(alg, j);
        let w0 = Module::direct_sum(alg, &[&pm1, &cj]);
        let dp = pmat_modmap(alg, &p1, &p2, &d1);
        let dc = c.map(alg, j);
        let blocks = (0..nv)
            .map(|z| {
                let top = dp.blocks[z].hstack(&Matrix::zeros(pm2.dims[z], cj.dims[z]));
                let bottom = phi1.blocks[z].hstack(&dc.blocks[z]);
                top.vstack(&bottom)
            })
            .collect();
        let (zmod, incl) = w0.kernel_of(alg, &ModMap { blocks }).map_err(HomotopyError::Bqa)?;
        if zmod.is_zero() && j < c.lo {
            break;
        }
        if (c.lo - j) as usize > budget && j < c.lo {
            return Err(HomotopyError::Budget(format!("resolution of a complex needs more than {budget} extra degrees")));
        }
        let dprev = c.map(alg, j - 1);
        let mut verts = Vec::new();
        let mut gvecs: Vec<Vec<Q>> = Vec::new();
        for z in 0..nv {
            if zmod.dims[z] == 0 {
                continue;
            }
            let basis: Vec<Vec<Q>> = (0..zmod.dims[z]).map(|i| incl.blocks[z].column(i)).collect();
            let solver = CoordSolver::new(w0.dims[z], &basis);
            let mut ech = zmod.radical_at(alg, z);
            let pad = pm1.dims[z];
            for i in 0..dprev.blocks[z].cols() {
                let mut v = vec![Q::zero(); pad];
                v.extend(dprev.blocks[z].column(i));
                let coords = solver.solve(&v).ok_or_else(|| HomotopyError::Invalid("boundary outside cycles".into()))?;
                ech.insert(coords);
            }
            for i in 0..zmod.dims[z] {
                let mut u = vec![Q::zero(); zmod.dims[z]];
                u[i] = num::One::one();
                if ech.insert(u) {
                    verts.push(z);
                    gvecs.push(basis[i].clone());
                }
            }
        }
        // d_P(e_g) = -p_g and phi(e_g) = c_g
        let mut d = PMat::zeros(p1.len(), verts.len());
        for (g, (&v, w)) in verts.iter().zip(&gvecs).enumerate() {
            let mut off = 0;
            for (r, &u) in p1.iter().enumerate() {
                let len = alg.block(v, u).len();
                let neg: Vec<Q> = w[off..off + len].iter().map(|x| -x).collect();
                d.set(r, g, alg.from_block_vec(&neg, v, u));
                off += len;
            }
        }
        let pj = Module::projective_sum(alg, &verts);
        let phi_blocks = (0..nv)
            .map(|z| {
                let mut cols = Vec::with_capacity(pj.dims[z]);
                for (&v, w) in verts.iter().zip(&gvecs) {
                    let cg = &w[pm1.dims[v]..];
                    for &x in alg.block(z, v) {
                        cols.push(cj.act[x].mul_vec(cg));
                    }
                }
                Matrix::from_cols(cj.dims[z], &cols)
            })
            .collect();
        built.push((verts, ModMap { blocks: phi_blocks }, d));
        j -= 1;
    }
    // built[i] sits in degree c.hi() - i, its matrix maps to built[i - 1]
    let n = built.len();
    if n == 0 {
        return Ok(ProjComplex::zero());
    }
    let lo = c.hi() - n as i64 + 1;
    let mut terms = Vec::with_capacity(n);
    let mut diffs = Vec::with_capacity(n.saturating_sub(1));
    for (i, (v, _, d)) in built.into_iter().rev().enumerate() {
        terms.push(v);
        if i + 1 < n {
            diffs.push(d);
        }
    }
    Ok(ProjComplex { lo, terms, diffs }.trimmed())
}

/// Default number of degrees a resolution may extend below its input.
pub const DEFAULT_DEPTH: usize = 64;

/// `nu X` as a minimal complex of projectives.
pub fn derived_nakayama(alg: &FdAlgebra, x: &ProjComplex) -> Result<ProjComplex, HomotopyError> {
    if x.is_zero() {
        return Ok(ProjComplex::zero());
    }
    let c = nu_termwise(alg, x);
    Ok(resolve_complex(alg, &c, DEFAULT_DEPTH)?.minimize(alg))
}

/// `nu^{-1} X = RHom(DA, X)`, computed as `(nu_{A^op}(X^*))^*`; `op` is the
/// opposite of the algebra `X` lives over.
pub fn derived_nakayama_inverse(op: &FdAlgebra, x: &ProjComplex) -> Result<ProjComplex, HomotopyError> {
    Ok(derived_nakayama(op, &x.dual())?.dual())
}

/// `nu^k X` for any integer `k`.
pub fn nakayama_power(alg: &FdAlgebra, x: &ProjComplex, k: i64) -> Result<ProjComplex, HomotopyError> {
    let mut y = x.minimize(alg);
    if k < 0 {
        let op = alg.opposite();
        for _ in 0..-k {
            y = derived_nakayama_inverse(&op, &y)?;
        }
    } else {
        for _ in 0..k {
            y = derived_nakayama(alg, &y)?;
        }
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bqa::algebra::elt_basis;
    use crate::bqa::auslander::build_auslander_algebra;
    use crate::homotopy::hom::complexes_isomorphic;

    fn arrow_complex(alg: &FdAlgebra, u: usize, w: usize, lo: i64) -> ProjComplex {
        let mut d = PMat::zeros(1, 1);
        d.set(0, 0, elt_basis(alg.block(u, w)[0]));
        ProjComplex { lo, terms: vec![vec![u], vec![w]], diffs: vec![d] }
    }

    #[test]
    fn termwise_nu_is_a_complex() {
        let a = build_auslander_algebra(4, 1).unwrap();
        let x = arrow_complex(&a, 1, 3, -1);
        let c = nu_termwise(&a, &x);
        c.check(&a).unwrap();
    }

    #[test]
    fn linear_a4_orbit() {
        // nu P1 = P4, nu P4 = (P3 -> P4), nu (P3 -> P4) = (P2 -> P3)[1]
        let a = build_auslander_algebra(4, 1).unwrap();
        let p1 = ProjComplex::stalk(vec![0], 0);
        let p4 = ProjComplex::stalk(vec![3], 0);
        let c34 = arrow_complex(&a, 2, 3, -1);
        let c23 = arrow_complex(&a, 1, 2, -1).shift(1);
        let n1 = derived_nakayama(&a, &p1).unwrap();
        assert!(complexes_isomorphic(&a, &n1, &p4, 3), "{}", n1.describe(&a));
        let n2 = derived_nakayama(&a, &p4).unwrap();
        assert!(complexes_isomorphic(&a, &n2, &c34, 3), "{}", n2.describe(&a));
        let n3 = derived_nakayama(&a, &c34).unwrap();
        n3.check(&a).unwrap();
        assert!(complexes_isomorphic(&a, &n3, &c23, 3), "{}", n3.describe(&a));
        let back = nakayama_power(&a, &n3, -2).unwrap();
        assert!(complexes_isomorphic(&a, &back, &p4, 3), "{}", back.describe(&a));
    }
}
