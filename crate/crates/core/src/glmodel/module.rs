use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::SuperAlgebraModel;
use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::rational::Q;
use crate::rootdata::{Parity, Weight};

/// The basis vector `highest_vector_index` has weight `lambda` and is killed
/// by every positive root vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HighestWeightData {
    pub lambda: Weight,
    pub highest_vector_index: usize,
}

/// A finite-dimensional `gl(m|n)`-module with a homogeneous weight basis.
/// `action[i]` is the matrix of the `i`-th basis element of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperModule {
    pub model: SuperAlgebraModel,
    pub parities: Vec<Parity>,
    pub weights: Vec<Weight>,
    pub action: Vec<SparseMatrix>,
    pub highest: Option<HighestWeightData>,
}

fn sign(odd: bool) -> Q {
    if odd {
        -Q::one()
    } else {
        Q::one()
    }
}

impl SuperModule {
    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn dim_even(&self) -> usize {
        self.parities.iter().filter(|p| **p == Parity::Even).count()
    }

    pub fn dim_odd(&self) -> usize {
        self.dim() - self.dim_even()
    }

    pub fn sdim(&self) -> i64 {
        self.dim_even() as i64 - self.dim_odd() as i64
    }

    pub fn indices_of(&self, p: Parity) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parities[i] == p).collect()
    }

    /// Matrix of an arbitrary algebra element.
    pub fn act(&self, x: &SparseVec) -> SparseMatrix {
        let mut out = SparseMatrix::zero(self.dim(), self.dim());
        for (i, c) in x.iter() {
            out.axpy(c, &self.action[*i]);
        }
        out
    }

    /// Basis indices grouped by weight.
    pub fn weight_spaces(&self) -> BTreeMap<Weight, Vec<usize>> {
        let mut map: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (i, w) in self.weights.iter().enumerate() {
            map.entry(w.clone()).or_default().push(i);
        }
        map
    }

    /// Scalar by which the identity matrix acts, if it acts by a scalar.
    pub fn central_scalar(&self) -> Option<Q> {
        let mut vals = self.weights.iter().map(|w| w.0.iter().sum::<Q>());
        let first = vals.next()?;
        vals.all(|v| v == first).then_some(first)
    }

    /// Checks shapes, parity, the diagonal Cartan action, and
    /// `rho([x,y]) = rho(x)rho(y) - (-1)^{p(x)p(y)} rho(y)rho(x)` on all basis pairs.
    pub fn verify(&self) -> Result<()> {
        self.verify_structure()?;
        let g = self.model;
        for x in 0..g.dim() {
            for y in 0..g.dim() {
                self.check_bracket(x, y)?;
            }
        }
        Ok(())
    }

    /// Everything in [`SuperModule::verify`] except the bracket relations.
    pub fn verify_structure(&self) -> Result<()> {
        let g = self.model;
        let d = self.dim();
        if self.weights.len() != d || self.action.len() != g.dim() {
            return Err(Error::Invariant("module data has inconsistent lengths".into()));
        }
        for (xi, a) in self.action.iter().enumerate() {
            if a.nrows() != d || a.ncols() != d {
                return Err(Error::Invariant(format!("action matrix {xi} has the wrong shape")));
            }
            let px = g.parity(xi);
            let (r, s) = g.entry(xi);
            for j in 0..d {
                for (i, c) in a.col(j).iter() {
                    if self.parities[*i] != self.parities[j].add(px) {
                        return Err(Error::Invariant(format!("e_{r}{s} breaks parity")));
                    }
                    if r == s && (*i != j || *c != self.weights[j].0[r]) {
                        return Err(Error::Invariant(format!("e_{r}{r} is not diagonal with the recorded weights")));
                    }
                    let mut expect = self.weights[j].clone();
                    expect.0[r] += Q::one();
                    expect.0[s] -= Q::one();
                    if r != s && self.weights[*i] != expect {
                        return Err(Error::Invariant(format!("e_{r}{s} does not shift weights by its root")));
                    }
                }
            }
            if r == s {
                for j in 0..d {
                    if a.col(j).is_zero() != self.weights[j].0[r].is_zero() {
                        return Err(Error::Invariant(format!("e_{r}{r} is not diagonal with the recorded weights")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_bracket(&self, x: usize, y: usize) -> Result<()> {
        let g = self.model;
        let ax = &self.action[x];
        let ay = &self.action[y];
        let odd = g.parity(x) == Parity::Odd && g.parity(y) == Parity::Odd;
        let mut rhs = ax.mul(ay);
        rhs.axpy(&-sign(odd), &ay.mul(ax));
        let lhs = self.act(&g.bracket_basis(x, y));
        if lhs != rhs {
            let (a, b) = g.entry(x);
            let (c, d) = g.entry(y);
            return Err(Error::Invariant(format!("bracket relation fails for e_{a}{b}, e_{c}{d}")));
        }
        Ok(())
    }
}

fn same_model(m: &SuperModule, n: &SuperModule) -> Result<()> {
    if m.model != n.model {
        return Err(Error::InvalidInput(format!(
            "modules over gl({}|{}) and gl({}|{})",
            m.model.m, m.model.n, n.model.m, n.model.n
        )));
    }
    Ok(())
}

pub fn direct_sum(m: &SuperModule, n: &SuperModule) -> Result<SuperModule> {
    same_model(m, n)?;
    Ok(SuperModule {
        model: m.model,
        parities: m.parities.iter().chain(&n.parities).copied().collect(),
        weights: m.weights.iter().chain(&n.weights).cloned().collect(),
        action: m.action.iter().zip(&n.action).map(|(a, b)| a.direct_sum(b)).collect(),
        highest: None,
    })
}

/// `x(u ⊗ v) = xu ⊗ v + (-1)^{p(x)p(u)} u ⊗ xv`; basis index `i * dim N + k`.
pub fn tensor(m: &SuperModule, n: &SuperModule) -> Result<SuperModule> {
    same_model(m, n)?;
    let g = m.model;
    let (dm, dn) = (m.dim(), n.dim());
    let mut parities = Vec::with_capacity(dm * dn);
    let mut weights = Vec::with_capacity(dm * dn);
    for i in 0..dm {
        for k in 0..dn {
            parities.push(m.parities[i].add(n.parities[k]));
            weights.push(m.weights[i].add(&n.weights[k]));
        }
    }
    let id_n = SparseMatrix::identity(dn);
    let grading = SparseMatrix::from_columns(
        dm,
        (0..dm)
            .map(|i| SparseVec::unit(i).scale(&sign(m.parities[i] == Parity::Odd)))
            .collect(),
    );
    let action = (0..g.dim())
        .map(|x| {
            let left = m.action[x].kron(&id_n);
            let right = if g.parity(x) == Parity::Odd {
                grading.kron(&n.action[x])
            } else {
                SparseMatrix::identity(dm).kron(&n.action[x])
            };
            left.add(&right)
        })
        .collect();
    Ok(SuperModule {
        model: g,
        parities,
        weights,
        action,
        highest: None,
    })
}

/// Dual module on the dual basis: `(x phi)(u) = -(-1)^{p(x)p(phi)} phi(xu)`.
pub fn dual(m: &SuperModule) -> SuperModule {
    let g = m.model;
    let action = (0..g.dim())
        .map(|x| {
            let t = m.action[x].transpose();
            let odd_x = g.parity(x) == Parity::Odd;
            let cols = (0..m.dim())
                .map(|j| t.col(j).scale(&-sign(odd_x && m.parities[j] == Parity::Odd)))
                .collect();
            SparseMatrix::from_columns(m.dim(), cols)
        })
        .collect();
    SuperModule {
        model: g,
        parities: m.parities.clone(),
        weights: m.weights.iter().map(Weight::neg).collect(),
        action,
        highest: None,
    }
}

/// The one-dimensional trivial module.
pub fn trivial_module(model: SuperAlgebraModel) -> SuperModule {
    SuperModule {
        model,
        parities: vec![Parity::Even],
        weights: vec![Weight::zero(model.size())],
        action: vec![SparseMatrix::zero(1, 1); model.dim()],
        highest: Some(HighestWeightData {
            lambda: Weight::zero(model.size()),
            highest_vector_index: 0,
        }),
    }
}

impl SuperModule {
    /// The defining representation `C^{m|n}`.
    pub fn standard(model: SuperAlgebraModel) -> SuperModule {
        let s = model.size();
        let action = (0..model.dim())
            .map(|x| model.matrix(&SparseVec::unit(x)))
            .collect();
        let mut hw = Weight::zero(s);
        hw.0[0] = Q::one();
        SuperModule {
            model,
            parities: (0..s).map(|a| model.row_parity(a)).collect(),
            weights: (0..s)
                .map(|a| {
                    let mut w = Weight::zero(s);
                    w.0[a] = Q::one();
                    w
                })
                .collect(),
            action,
            highest: Some(HighestWeightData {
                lambda: hw,
                highest_vector_index: 0,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glmodel::build_algebra;

    #[test]
    fn standard_and_trivial_verify() {
        let g = build_algebra(2, 1).unwrap();
        SuperModule::standard(g).verify().unwrap();
        trivial_module(g).verify().unwrap();
    }

    #[test]
    fn dual_and_tensor_verify() {
        let g = build_algebra(1, 1).unwrap();
        let v = SuperModule::standard(g);
        let d = dual(&v);
        d.verify().unwrap();
        assert_eq!(d.weights[0], v.weights[0].neg());
        assert_eq!(dual(&trivial_module(g)), {
            let mut t = trivial_module(g);
            t.highest = None;
            t
        });
        let t = tensor(&v, &d).unwrap();
        t.verify().unwrap();
        assert_eq!(t.sdim(), v.sdim() * d.sdim());
        let s = direct_sum(&v, &t).unwrap();
        s.verify().unwrap();
        assert_eq!(s.dim(), 6);
    }

    #[test]
    fn tensor_of_gl21_standard() {
        let g = build_algebra(2, 1).unwrap();
        let v = SuperModule::standard(g);
        let t = tensor(&v, &dual(&v)).unwrap();
        t.verify().unwrap();
        assert_eq!(t.sdim(), 1);
        assert_eq!(t.central_scalar(), Some(Q::zero()));
    }
}
