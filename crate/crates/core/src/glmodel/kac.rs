use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::gl_irrep::build_g0_irreducible;
use super::module::{HighestWeightData, SuperModule};
use super::SuperAlgebraModel;
use crate::error::{Error, Result};
use crate::linalg::{kernel_of_rows, Echelon, SparseMatrix, SparseVec};
use crate::rational::{self, Q};
use crate::rootdata::{Parity, Weight};

/// How `[x, y]` is evaluated for `x ∈ g(1)`, `y ∈ g(-1)` when straightening
/// the action of `g(1)` on a Kac module. `Broken` uses the ordinary matrix
/// commutator and drops the Koszul signs; it exists as a negative control.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BracketRule {
    Super,
    Broken,
}

/// A Kac module together with the `g_0`-data needed for its contravariant form.
#[derive(Clone, Debug)]
pub struct KacModule {
    pub module: SuperModule,
    pub rule: BracketRule,
    /// `dim L_lambda(g_0)`; basis index is `mask * l0_dim + b`.
    pub l0_dim: usize,
    /// Contravariant form on `L_lambda(g_0)`.
    pub l0_gram: SparseMatrix,
}

struct L0 {
    dim: usize,
    weights: Vec<Weight>,
    /// indexed by algebra basis; zero for odd elements
    action: Vec<SparseMatrix>,
    gram: SparseMatrix,
}

fn check_lambda(lambda: &Weight, model: &SuperAlgebraModel) -> Result<()> {
    if lambda.len() != model.size() {
        return Err(Error::DimensionMismatch {
            expected: model.size(),
            got: lambda.len(),
        });
    }
    let ok = |v: &[Q]| {
        v.windows(2).all(|w| {
            let d = &w[0] - &w[1];
            rational::is_integer(&d) && d >= Q::zero()
        })
    };
    if !ok(&lambda.0[..model.m]) || !ok(&lambda.0[model.m..]) {
        return Err(Error::InvalidInput(format!("lambda = {lambda} is not dominant")));
    }
    Ok(())
}

fn build_l0(lambda: &Weight, model: &SuperAlgebraModel) -> Result<L0> {
    let m = model.m;
    let vm = build_g0_irreducible(&lambda.0[..m])?;
    let vn = build_g0_irreducible(&lambda.0[m..])?;
    let (dm, dn) = (vm.dim(), vn.dim());
    let mut weights = Vec::with_capacity(dm * dn);
    for u in 0..dm {
        for v in 0..dn {
            weights.push(Weight(vm.weights[u].iter().chain(&vn.weights[v]).cloned().collect()));
        }
    }
    let action = (0..model.dim())
        .map(|x| {
            let (a, b) = model.entry(x);
            if a < m && b < m {
                vm.e(a, b).kron(&SparseMatrix::identity(dn))
            } else if a >= m && b >= m {
                SparseMatrix::identity(dm).kron(vn.e(a - m, b - m))
            } else {
                SparseMatrix::zero(dm * dn, dm * dn)
            }
        })
        .collect();
    Ok(L0 {
        dim: dm * dn,
        weights,
        action,
        gram: vm.gram.kron(&vn.gram),
    })
}

struct Kac<'a> {
    model: SuperAlgebraModel,
    l0: &'a L0,
    rule: BracketRule,
}

impl Kac<'_> {
    fn d0(&self) -> usize {
        self.l0.dim
    }

    fn y_of(&self, r: usize) -> usize {
        let (i, j) = (r / self.model.n, r % self.model.n);
        self.model.index(self.model.m + j, i)
    }

    fn r_of(&self, g_index: usize) -> usize {
        let (a, b) = self.model.entry(g_index);
        debug_assert!(a >= self.model.m && b < self.model.m);
        b * self.model.n + (a - self.model.m)
    }

    /// Left multiplication by `y_r`.
    fn y_apply(&self, r: usize, v: &SparseVec) -> SparseVec {
        let d0 = self.d0();
        let mut out = SparseVec::new();
        for (idx, c) in v.iter() {
            let (mask, b) = (idx / d0, idx % d0);
            if mask >> r & 1 == 1 {
                continue;
            }
            let below = (mask & ((1usize << r) - 1)).count_ones();
            let s = if below % 2 == 0 { c.clone() } else { -c };
            out.axpy(&s, &SparseVec::unit((mask | 1 << r) * d0 + b));
        }
        out
    }

    /// Action of an even basis element `z` (in `g_0`).
    fn even_apply(&self, z: usize, v: &SparseVec) -> SparseVec {
        let d0 = self.d0();
        let mut out = SparseVec::new();
        for (idx, c) in v.iter() {
            let (mask, b) = (idx / d0, idx % d0);
            for (b2, c2) in self.l0.action[z].col(b).iter() {
                out.axpy(&(c * c2), &SparseVec::unit(mask * d0 + b2));
            }
            let mut bits = mask;
            while bits != 0 {
                let r = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let br = self.model.bracket_basis(z, self.y_of(r));
                for (gi, cb) in br.iter() {
                    let r2 = self.r_of(*gi);
                    let rest = mask & !(1 << r);
                    if rest >> r2 & 1 == 1 {
                        continue;
                    }
                    let (lo, hi) = if r < r2 { (r, r2) } else { (r2, r) };
                    let between = if hi > lo + 1 { (rest >> (lo + 1)) & ((1usize << (hi - lo - 1)) - 1) } else { 0 };
                    let s = if between.count_ones() % 2 == 0 { Q::one() } else { -Q::one() };
                    out.axpy(&(c * cb * s), &SparseVec::unit((rest | 1 << r2) * d0 + b));
                }
            }
        }
        out
    }

    /// Action of `x ∈ g(1)`:
    /// `x y_{s1}..y_{sk} b = Σ_t ± y_{s1}..y_{s(t-1)} [x, y_st] y_{s(t+1)}..y_{sk} b`.
    fn x_apply(&self, x: usize, v: &SparseVec) -> SparseVec {
        let d0 = self.d0();
        let mut out = SparseVec::new();
        for (idx, c) in v.iter() {
            let (mask, b) = (idx / d0, idx % d0);
            let s: Vec<usize> = (0..usize::BITS as usize).filter(|r| mask >> r & 1 == 1).collect();
            for t in 0..s.len() {
                let br = match self.rule {
                    BracketRule::Super => self.model.bracket_basis(x, self.y_of(s[t])),
                    BracketRule::Broken => self.model.commutator_basis(x, self.y_of(s[t])),
                };
                if br.is_zero() {
                    continue;
                }
                let rest_mask = s[t + 1..].iter().fold(0usize, |acc, r| acc | 1 << r);
                let rest = SparseVec::unit(rest_mask * d0 + b);
                let mut w = SparseVec::new();
                for (z, cz) in br.iter() {
                    w.axpy(cz, &self.even_apply(*z, &rest));
                }
                for r in s[..t].iter().rev() {
                    w = self.y_apply(*r, &w);
                }
                let sign = match self.rule {
                    BracketRule::Super if t % 2 == 1 => -c,
                    _ => c.clone(),
                };
                out.axpy(&sign, &w);
            }
        }
        out
    }
}

/// `K_lambda = Λ(g(-1)) ⊗ L_lambda(g_0)` with `g(1)` acting by zero on `L_lambda(g_0)`.
pub fn build_kac_module(lambda: &Weight, model: &SuperAlgebraModel) -> Result<KacModule> {
    build_kac_module_with_rule(lambda, model, BracketRule::Super)
}

pub fn build_kac_module_with_rule(
    lambda: &Weight,
    model: &SuperAlgebraModel,
    rule: BracketRule,
) -> Result<KacModule> {
    check_lambda(lambda, model)?;
    let (m, n) = (model.m, model.n);
    let mn = m * n;
    if mn > 16 {
        return Err(Error::Unsupported(format!("Kac module of gl({m}|{n}) is too large")));
    }
    let l0 = build_l0(lambda, model)?;
    let kac = Kac { model: *model, l0: &l0, rule };
    let d0 = l0.dim;
    let dim = (1usize << mn) * d0;

    let mut parities = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    for mask in 0..1usize << mn {
        let mut shift = Weight::zero(m + n);
        for r in 0..mn {
            if mask >> r & 1 == 1 {
                let (i, j) = (r / n, r % n);
                shift.0[i] -= Q::one();
                shift.0[m + j] += Q::one();
            }
        }
        for b in 0..d0 {
            parities.push(Parity::from_bit(mask.count_ones() as usize));
            weights.push(l0.weights[b].add(&shift));
        }
    }

    let action = (0..model.dim())
        .map(|z| {
            let (a, b) = model.entry(z);
            let cols = (0..dim)
                .map(|col| {
                    let v = SparseVec::unit(col);
                    if (a < m) == (b < m) {
                        kac.even_apply(z, &v)
                    } else if a >= m {
                        kac.y_apply(kac.r_of(z), &v)
                    } else {
                        kac.x_apply(z, &v)
                    }
                })
                .collect();
            SparseMatrix::from_columns(dim, cols)
        })
        .collect();

    Ok(KacModule {
        module: SuperModule {
            model: *model,
            parities,
            weights,
            action,
            highest: Some(HighestWeightData {
                lambda: lambda.clone(),
                highest_vector_index: 0,
            }),
        },
        rule,
        l0_dim: d0,
        l0_gram: l0.gram,
    })
}

/// Gram matrix of the contravariant form on one weight space, rows and
/// columns ordered as `indices`:
/// `<y_T ⊗ a, v> = <a, (x_{t_r} ... x_{t_1} v)_0>` with `x_t` the transpose of `y_t`.
pub fn contravariant_gram(k: &KacModule, indices: &[usize]) -> Vec<Vec<Q>> {
    let g = k.module.model;
    let d0 = k.l0_dim;
    let n = g.n;
    let x_of = |r: usize| g.index(r / n, g.m + r % n);
    let mut rows = vec![vec![Q::zero(); indices.len()]; indices.len()];
    for (ci, &v) in indices.iter().enumerate() {
        let mut cache: std::collections::BTreeMap<usize, SparseVec> = Default::default();
        for (ri, &u) in indices.iter().enumerate() {
            let (tmask, a) = (u / d0, u % d0);
            let proj = cache.entry(tmask).or_insert_with(|| {
                let mut w = SparseVec::unit(v);
                let mut bits = tmask;
                while bits != 0 {
                    let r = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    w = k.module.action[x_of(r)].apply(&w);
                }
                SparseVec::from_pairs(w.iter().filter(|(i, _)| *i < d0).cloned())
            });
            rows[ri][ci] = k.l0_gram.col(a).dot(proj);
        }
    }
    rows
}

/// Right radical of the contravariant form, weight space by weight space.
pub fn contravariant_radical(k: &KacModule) -> Vec<SparseVec> {
    let mut out = Vec::new();
    for (_, idx) in k.module.weight_spaces() {
        let gram = contravariant_gram(k, &idx);
        let rows: Vec<SparseVec> = gram.iter().map(|r| SparseVec::from_dense(r)).collect();
        for v in kernel_of_rows(&rows, idx.len()) {
            out.push(SparseVec::from_pairs(v.iter().map(|(i, c)| (idx[*i], c.clone()))));
        }
    }
    out
}

/// `M / N` for a submodule `N` spanned by `sub`, on the basis of non-pivot
/// coordinates of `N`.
pub fn quotient(module: &SuperModule, sub: &[SparseVec]) -> SuperModule {
    let ech = Echelon::from_vectors(module.dim(), sub.iter().cloned());
    let keep: Vec<usize> = (0..module.dim()).filter(|&i| !ech.is_pivot(i)).collect();
    let mut pos = vec![None; module.dim()];
    for (k, &i) in keep.iter().enumerate() {
        pos[i] = Some(k);
    }
    let action = module
        .action
        .iter()
        .map(|a| {
            let cols = keep
                .iter()
                .map(|&j| ech.reduce(a.col(j)).remap(|i| pos[i]))
                .collect();
            SparseMatrix::from_columns(keep.len(), cols)
        })
        .collect();
    let highest = module.highest.as_ref().and_then(|h| {
        pos[h.highest_vector_index].map(|i| HighestWeightData {
            lambda: h.lambda.clone(),
            highest_vector_index: i,
        })
    });
    SuperModule {
        model: module.model,
        parities: keep.iter().map(|&i| module.parities[i]).collect(),
        weights: keep.iter().map(|&i| module.weights[i].clone()).collect(),
        action,
        highest,
    }
}

/// `L_lambda = K_lambda / rad`.
pub fn build_irreducible(lambda: &Weight, model: &SuperAlgebraModel) -> Result<SuperModule> {
    let k = build_kac_module(lambda, model)?;
    let rad = contravariant_radical(&k);
    Ok(quotient(&k.module, &rad))
}
