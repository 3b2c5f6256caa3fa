//! The type-A pipeline: objects of the cluster model realized as complexes
//! over `A_{n+1}^d`, the tilting complex `T`, and the algebras `B_0`, `B`.

use super::complex::ProjComplex;
use super::hom::end_algebra_of_complexes;
use super::nakayama::derived_nakayama;
use super::resolve::minimal_proj_resolution;
use super::HomotopyError;
use crate::bqa::auslander::{build_auslander_algebra, module_m, vertex_of};
use crate::bqa::construct::{beta, idempotent_subalgebra};
use crate::bqa::module::endo_algebra;
use crate::bqa::{FdAlgebra, Module};
use crate::cluster_model::{build_p, build_t, UObject};
use crate::pathcomb::{coords, enumerate_dyck};

pub struct TypeA {
    pub d: usize,
    pub n: usize,
    /// `A_{n+1}^d`.
    pub alg: FdAlgebra,
    /// Resolution length bound, `nd + 2` unless overridden.
    pub budget: usize,
}

impl TypeA {
    pub fn new(d: usize, n: usize) -> Result<Self, HomotopyError> {
        if num::integer::gcd(d, n) != 1 {
            return Err(HomotopyError::Invalid(format!("gcd({d}, {n}) != 1")));
        }
        Ok(TypeA { d, n, alg: build_auslander_algebra(n + 1, d)?, budget: n * d + 2 })
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn max_len(&self) -> usize {
        self.budget
    }

    pub fn module_of(&self, u: &UObject) -> Result<Module, HomotopyError> {
        if u.model() != (self.d, self.n) {
            return Err(HomotopyError::Invalid(format!("{u:?} is not an object of the ({}, {}) model", self.d, self.n)));
        }
        let rep = module_m(&self.alg, &coords(&u.path))?;
        Ok(Module::from_rep(&self.alg, &rep)?)
    }

    /// Minimal projective resolution of `M_l`, shifted by `d * shift`.
    pub fn complex_of(&self, u: &UObject) -> Result<ProjComplex, HomotopyError> {
        let m = self.module_of(u)?;
        let r = minimal_proj_resolution(&self.alg, &m, self.max_len());
        if !r.complete {
            return Err(HomotopyError::Budget(format!("{u:?} has no resolution within {}", self.max_len())));
        }
        Ok(r.complex.shift(self.d as i64 * u.shift))
    }

    pub fn p_objects(&self) -> Result<Vec<UObject>, HomotopyError> {
        Ok(build_p(self.d, self.n)?)
    }

    pub fn t_objects(&self) -> Result<Vec<UObject>, HomotopyError> {
        Ok(build_t(self.d, self.n)?)
    }

    /// Vertices `c` with `M(bar l) = P_c`, in Dyck order.
    pub fn p_vertices(&self) -> Result<Vec<usize>, HomotopyError> {
        self.p_objects()?
            .iter()
            .map(|u| {
                self.module_of(u)?
                    .is_projective_indecomposable(&self.alg)
                    .ok_or_else(|| HomotopyError::Invalid(format!("{u:?} is not projective")))
            })
            .collect()
    }

    /// The same vertices read off from Dyck coordinates directly.
    pub fn dyck_vertices(&self) -> Result<Vec<usize>, HomotopyError> {
        enumerate_dyck(self.d, self.n)
            .map_err(crate::cluster_model::ModelError::from)?
            .iter()
            .map(|l| {
                vertex_of(&self.alg, &l.coord_vec())
                    .ok_or_else(|| HomotopyError::Invalid(format!("no vertex {}", l.coords_label())))
            })
            .collect()
    }

    pub fn complexes(&self, objs: &[UObject]) -> Result<Vec<ProjComplex>, HomotopyError> {
        objs.iter().map(|u| self.complex_of(u)).collect()
    }

    /// `nu^i P` for `i = 1..=n+d` by iterating the derived Nakayama functor,
    /// in the order of `build_t`.
    pub fn t_via_nakayama(&self) -> Result<Vec<ProjComplex>, HomotopyError> {
        let p = self.complexes(&self.p_objects()?)?;
        let mut cur = p;
        let mut out = Vec::new();
        for _ in 0..self.n + self.d {
            cur = cur.iter().map(|x| derived_nakayama(&self.alg, x)).collect::<Result<_, _>>()?;
            out.extend(cur.iter().cloned());
        }
        Ok(out)
    }

    /// `B = End(T)` with `T` realized from the cluster model.
    pub fn end_t(&self) -> Result<FdAlgebra, HomotopyError> {
        let t = self.complexes(&self.t_objects()?)?;
        Ok(end_algebra_of_complexes(&self.alg, &format!("End T({},{})", self.d, self.n), &t)?)
    }

    /// `B_0 = End(P) = e A e` as an idempotent cut-down.
    pub fn b0(&self) -> Result<FdAlgebra, HomotopyError> {
        Ok(idempotent_subalgebra(&self.alg, &self.p_vertices()?)?)
    }

    /// `End(P)` computed from module homomorphisms.
    pub fn b0_endo(&self) -> Result<FdAlgebra, HomotopyError> {
        let mods: Vec<Module> = self.p_vertices()?.iter().map(|&v| Module::projective(&self.alg, v)).collect();
        Ok(endo_algebra(&self.alg, &format!("End P({},{})", self.d, self.n), &mods)?)
    }

    /// `A' = A_{n+1}^{d-s}` with `s = ceil(d/n)` and the vertices `beta(c)`
    /// of the Dyck coordinates.
    pub fn beta_setup(&self) -> Result<(FdAlgebra, Vec<usize>), HomotopyError> {
        let s = self.d.div_ceil(self.n);
        if s >= self.d {
            return Err(HomotopyError::Invalid(format!("d - s = 0 for ({}, {})", self.d, self.n)));
        }
        let ap = build_auslander_algebra(self.n + 1, self.d - s)?;
        let keep = enumerate_dyck(self.d, self.n)
            .map_err(crate::cluster_model::ModelError::from)?
            .iter()
            .map(|l| {
                let b = beta(&l.coord_vec(), self.d, self.n);
                vertex_of(&ap, &b).ok_or_else(|| HomotopyError::Invalid(format!("beta image {b:?} is not a vertex")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok((ap, keep))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homotopy::hom::{complexes_isomorphic, hom_complex_dim};

    #[test]
    fn projective_objects_sit_at_dyck_vertices() {
        for (d, n) in [(3, 2), (3, 4), (2, 3)] {
            let t = TypeA::new(d, n).unwrap();
            assert_eq!(t.p_vertices().unwrap(), t.dyck_vertices().unwrap());
        }
    }

    #[test]
    fn t_two_routes_agree_small() {
        let t = TypeA::new(2, 1).unwrap();
        let comb = t.complexes(&t.t_objects().unwrap()).unwrap();
        let alg = t.t_via_nakayama().unwrap();
        assert_eq!(comb.len(), alg.len());
        for (x, y) in comb.iter().zip(&alg) {
            assert!(complexes_isomorphic(&t.alg, x, y, 3), "{} vs {}", x.describe(&t.alg), y.describe(&t.alg));
        }
    }

    #[test]
    fn b0_small_case() {
        // (d, n) = (3, 2): B_0 = k(1 -> 2)
        let t = TypeA::new(3, 2).unwrap();
        let b0 = t.b0().unwrap();
        assert_eq!((b0.num_vertices(), b0.dim()), (2, 3));
        let p = t.complexes(&t.p_objects().unwrap()).unwrap();
        let total: usize = p.iter().flat_map(|x| p.iter().map(move |y| (x, y))).map(|(x, y)| hom_complex_dim(&t.alg, x, y, 0)).sum();
        assert_eq!(total, 3);
    }
}
