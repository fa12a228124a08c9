//! Matrix models for `gl(m|n)`: structure constants, odd orbit
//! representatives, `g_0`-irreducibles, Kac modules and their irreducible
//! quotients, and module algebra.

mod gl_irrep;
mod kac;
mod module;
mod submodule;

pub use gl_irrep::{build_g0_irreducible, GlIrrep};
pub use kac::{
    build_irreducible, build_kac_module, build_kac_module_with_rule, contravariant_gram, contravariant_radical,
    quotient, BracketRule, KacModule,
};
pub use module::{direct_sum, dual, trivial_module, tensor, HighestWeightData, SuperModule};
pub use submodule::{cyclic_submodule, is_irreducible, maximal_submodule_oracle, primitive_vectors};

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::isotropic::OrbitLabel;
use crate::linalg::{SparseMatrix, SparseVec};
use crate::rational::Q;
use crate::rootdata::Parity;

/// `gl(m|n)` with basis the elementary matrices `e_ab`, index `a (m+n) + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuperAlgebraModel {
    pub m: usize,
    pub n: usize,
}

impl SuperAlgebraModel {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Config(format!("gl({m}|{n}) needs m, n >= 1")));
        }
        Ok(SuperAlgebraModel { m, n })
    }

    /// `m + n`, the size of the defining matrices.
    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn dim(&self) -> usize {
        self.size() * self.size()
    }

    pub fn index(&self, a: usize, b: usize) -> usize {
        a * self.size() + b
    }

    pub fn entry(&self, idx: usize) -> (usize, usize) {
        (idx / self.size(), idx % self.size())
    }

    pub fn row_parity(&self, a: usize) -> Parity {
        Parity::from_bit(usize::from(a >= self.m))
    }

    pub fn parity(&self, idx: usize) -> Parity {
        let (a, b) = self.entry(idx);
        self.row_parity(a).add(self.row_parity(b))
    }

    /// Parity of a homogeneous element, `None` if it mixes parities or is zero.
    pub fn element_parity(&self, x: &SparseVec) -> Option<Parity> {
        let mut it = x.iter().map(|(i, _)| self.parity(*i));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// `[e_ij, e_kl] = delta_jk e_il - (-1)^{p p'} delta_li e_kj`.
    pub fn bracket_basis(&self, x: usize, y: usize) -> SparseVec {
        let (i, j) = self.entry(x);
        let (k, l) = self.entry(y);
        let mut pairs = Vec::new();
        if j == k {
            pairs.push((self.index(i, l), Q::one()));
        }
        if l == i {
            let odd = self.parity(x) == Parity::Odd && self.parity(y) == Parity::Odd;
            let c = if odd { Q::one() } else { -Q::one() };
            pairs.push((self.index(k, j), c));
        }
        let mut v = SparseVec::new();
        for (idx, c) in pairs {
            v.axpy(&c, &SparseVec::unit(idx));
        }
        v
    }

    /// Ordinary matrix commutator `xy - yx`, ignoring super signs.
    pub fn commutator_basis(&self, x: usize, y: usize) -> SparseVec {
        let (i, j) = self.entry(x);
        let (k, l) = self.entry(y);
        let mut v = SparseVec::new();
        if j == k {
            v.axpy(&Q::one(), &SparseVec::unit(self.index(i, l)));
        }
        if l == i {
            v.axpy(&-Q::one(), &SparseVec::unit(self.index(k, j)));
        }
        v
    }

    /// Bilinear extension of the bracket; each basis pair takes its own sign.
    pub fn bracket(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.axpy(&(ca * cb), &self.bracket_basis(*a, *b));
            }
        }
        out
    }

    /// Checks `[x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)} [y,[x,z]]` on all basis triples.
    pub fn check_super_jacobi(&self) -> bool {
        let d = self.dim();
        (0..d).all(|x| (0..d).all(|y| (0..d).all(|z| self.jacobi_holds(x, y, z))))
    }

    pub fn jacobi_holds(&self, x: usize, y: usize, z: usize) -> bool {
        let ux = SparseVec::unit(x);
        let uy = SparseVec::unit(y);
        let uz = SparseVec::unit(z);
        let lhs = self.bracket(&ux, &self.bracket(&uy, &uz));
        let mut rhs = self.bracket(&self.bracket(&ux, &uy), &uz);
        let sign = if self.parity(x) == Parity::Odd && self.parity(y) == Parity::Odd {
            -Q::one()
        } else {
            Q::one()
        };
        rhs.axpy(&sign, &self.bracket(&uy, &self.bracket(&ux, &uz)));
        lhs == rhs
    }

    /// Defining-representation matrix of an element.
    pub fn matrix(&self, x: &SparseVec) -> SparseMatrix {
        let s = self.size();
        let mut cols = vec![SparseVec::new(); s];
        for (idx, c) in x.iter() {
            let (a, b) = self.entry(*idx);
            cols[b].axpy(c, &SparseVec::unit(a));
        }
        SparseMatrix::from_columns(s, cols)
    }

    /// `ad x` as a `dim x dim` matrix.
    pub fn ad(&self, x: &SparseVec) -> SparseMatrix {
        let cols = (0..self.dim()).map(|e| self.bracket(x, &SparseVec::unit(e))).collect();
        SparseMatrix::from_columns(self.dim(), cols)
    }

    /// Basis indices of `g(1)` (upper right block), ordered by `(i, j)`.
    pub fn g_plus(&self) -> Vec<usize> {
        let mut v = Vec::new();
        for i in 0..self.m {
            for j in 0..self.n {
                v.push(self.index(i, self.m + j));
            }
        }
        v
    }

    /// Basis indices of `g(-1)`: `y_(i,j) = e_{m+j, i}`, ordered by `(i, j)`.
    pub fn g_minus(&self) -> Vec<usize> {
        let mut v = Vec::new();
        for i in 0..self.m {
            for j in 0..self.n {
                v.push(self.index(self.m + j, i));
            }
        }
        v
    }

    /// Distinguished simple raising operators `e_{t, t+1}`.
    pub fn simple_raising(&self) -> Vec<usize> {
        (0..self.size() - 1).map(|t| self.index(t, t + 1)).collect()
    }

    pub fn identity_element(&self) -> SparseVec {
        SparseVec::from_pairs((0..self.size()).map(|a| (self.index(a, a), Q::one())))
    }
}

/// `gl(m|n)` model; `m, n >= 1`.
pub fn build_algebra(m: usize, n: usize) -> Result<SuperAlgebraModel> {
    SuperAlgebraModel::new(m, n)
}

/// Odd self-commuting element in block form: `x+ = diag(1_p, 0)` in the upper
/// right block and `x- = diag(0, 1_q)` in the lower left block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddRepresentative {
    pub label: OrbitLabel,
    pub element: SparseVec,
    pub matrix: SparseMatrix,
}

pub fn orbit_representative(label: &OrbitLabel, model: &SuperAlgebraModel) -> Result<OddRepresentative> {
    let (m, n) = (model.m, model.n);
    let OrbitLabel::Gl { p, q } = *label else {
        return Err(Error::InvalidInput(format!("{label} is not a gl orbit label")));
    };
    if p + q > m.min(n) {
        return Err(Error::InvalidInput(format!("label {label} out of range for gl({m}|{n})")));
    }
    let mut pairs = Vec::new();
    for i in 0..p {
        pairs.push((model.index(i, m + i), Q::one()));
    }
    for t in 0..q {
        pairs.push((model.index(m + n - q + t, m - q + t), Q::one()));
    }
    let element = SparseVec::from_pairs(pairs);
    if !model.bracket(&element, &element).is_zero() {
        return Err(Error::Invariant(format!("representative of {label} is not self-commuting")));
    }
    Ok(OddRepresentative {
        label: label.clone(),
        matrix: model.matrix(&element),
        element,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_and_odd_count() {
        let g = build_algebra(1, 1).unwrap();
        assert_eq!(g.dim(), 4);
        let e = SparseVec::unit(g.index(0, 1));
        assert!(g.bracket(&e, &e).is_zero());
        let g = build_algebra(2, 2).unwrap();
        assert_eq!(g.dim(), 16);
        assert_eq!((0..16).filter(|&i| g.parity(i) == Parity::Odd).count(), 8);
    }

    #[test]
    fn super_jacobi() {
        let g = build_algebra(2, 1).unwrap();
        assert!(g.jacobi_holds(g.index(0, 2), g.index(2, 0), g.index(0, 0)));
        assert!(g.check_super_jacobi());
        assert!(build_algebra(1, 2).unwrap().check_super_jacobi());
    }

    #[test]
    fn representatives() {
        let g = build_algebra(2, 2).unwrap();
        let x = orbit_representative(&OrbitLabel::Gl { p: 1, q: 0 }, &g).unwrap();
        assert_eq!(x.element, SparseVec::unit(g.index(0, 2)));
        let z = orbit_representative(&OrbitLabel::Gl { p: 0, q: 0 }, &g).unwrap();
        assert!(z.element.is_zero());
        let x = orbit_representative(&OrbitLabel::Gl { p: 1, q: 1 }, &g).unwrap();
        assert!(g.bracket(&x.element, &x.element).is_zero());
        assert_eq!(x.matrix.rank(), 2);
        assert!(orbit_representative(&OrbitLabel::Gl { p: 2, q: 1 }, &g).is_err());
    }
}
