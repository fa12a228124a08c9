//! Fibers `M_x = Ker x / xM`, associated varieties as sets of orbit labels,
//! supercharacters, centralizers and `g(-1)`-invariants.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::glmodel::{orbit_representative, OddRepresentative, SuperAlgebraModel, SuperModule};
use crate::isotropic::{self, all_labels, closure_leq, representative_set, OrbitLabel};
use crate::linalg::{kernel_of_rows, Echelon, SparseMatrix, SparseVec};
use crate::rational::Q;
use crate::rootdata::{build_root_system, AlgebraType, Parity, RootSystem, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    pub orbit: OrbitLabel,
    pub dim_ker_even: usize,
    pub dim_ker_odd: usize,
    pub dim_im_even: usize,
    pub dim_im_odd: usize,
    pub fiber_dim_even: usize,
    pub fiber_dim_odd: usize,
    pub sdim_fiber: i64,
}

impl FiberReport {
    pub fn is_zero(&self) -> bool {
        self.fiber_dim_even == 0 && self.fiber_dim_odd == 0
    }
}

fn root_system_of(model: &SuperAlgebraModel) -> Result<RootSystem> {
    build_root_system(&AlgebraType::gl(model.m, model.n)?)
}

/// Exact fiber at `x`. `x` is odd, so it maps even to odd and odd to even and
/// the ranks can be taken block by block.
pub fn fiber(module: &SuperModule, x: &OddRepresentative) -> Result<FiberReport> {
    let g = module.model;
    if g.element_parity(&x.element).is_some_and(|p| p != Parity::Odd) {
        return Err(Error::InvalidInput(format!("representative of {} is not odd", x.label)));
    }
    if !g.bracket(&x.element, &x.element).is_zero() {
        return Err(Error::InvalidInput(format!("representative of {} is not self-commuting", x.label)));
    }
    let a = module.act(&x.element);
    let even = module.indices_of(Parity::Even);
    let odd = module.indices_of(Parity::Odd);
    let all: Vec<usize> = (0..module.dim()).collect();
    // rank of x on even vectors = dim of the odd part of the image
    let r_even = a.submatrix(&all, &even).rank();
    let r_odd = a.submatrix(&all, &odd).rank();
    let dim_ker_even = even.len() - r_even;
    let dim_ker_odd = odd.len() - r_odd;
    let (dim_im_even, dim_im_odd) = (r_odd, r_even);
    if dim_im_even > dim_ker_even || dim_im_odd > dim_ker_odd {
        return Err(Error::Invariant(format!("x M is not inside Ker x at {}", x.label)));
    }
    let fiber_dim_even = dim_ker_even - dim_im_even;
    let fiber_dim_odd = dim_ker_odd - dim_im_odd;
    Ok(FiberReport {
        orbit: x.label.clone(),
        dim_ker_even,
        dim_ker_odd,
        dim_im_even,
        dim_im_odd,
        fiber_dim_even,
        fiber_dim_odd,
        sdim_fiber: fiber_dim_even as i64 - fiber_dim_odd as i64,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssociatedVariety {
    pub nonzero_orbits: BTreeSet<OrbitLabel>,
    /// `Some(k)` iff `nonzero_orbits` is exactly the set of labels of rank `<= k`.
    pub closure_rank: Option<usize>,
    pub downward_closed: bool,
    pub fibers: Vec<FiberReport>,
}

impl AssociatedVariety {
    pub fn max_rank(&self) -> Option<usize> {
        self.nonzero_orbits.iter().map(OrbitLabel::total_rank).max()
    }
}

/// `X_M` evaluated at one representative per `G_0`-orbit, in parallel.
pub fn associated_variety(module: &SuperModule) -> Result<AssociatedVariety> {
    let rs = root_system_of(&module.model)?;
    let labels = all_labels(&rs);
    let fibers = labels
        .par_iter()
        .map(|l| fiber(module, &orbit_representative(l, &module.model)?))
        .collect::<Result<Vec<_>>>()?;
    let nonzero: BTreeSet<OrbitLabel> = fibers.iter().filter(|f| !f.is_zero()).map(|f| f.orbit.clone()).collect();
    let mut downward_closed = true;
    for b in &nonzero {
        for a in &labels {
            if closure_leq(a, b, &rs)? && !nonzero.contains(a) {
                downward_closed = false;
            }
        }
    }
    let closure_rank = nonzero.iter().map(OrbitLabel::total_rank).max().filter(|&k| {
        let want: BTreeSet<OrbitLabel> = labels.iter().filter(|l| l.total_rank() <= k).cloned().collect();
        want == nonzero
    });
    Ok(AssociatedVariety {
        nonzero_orbits: nonzero,
        closure_rank,
        downward_closed,
        fibers,
    })
}

pub fn superdimension(module: &SuperModule) -> i64 {
    module.sdim()
}

/// `X_M = {0}`.
pub fn is_projective(module: &SuperModule) -> Result<bool> {
    let v = associated_variety(module)?;
    Ok(v.nonzero_orbits.len() == 1 && v.nonzero_orbits.contains(&OrbitLabel::Gl { p: 0, q: 0 }))
}

/// Codimension in `X` of the closure of `X_M`: the smallest codimension of a
/// nonzero orbit. `None` for the zero module.
pub fn variety_codimension(v: &AssociatedVariety, rs: &RootSystem) -> Result<Option<i64>> {
    let mut best: Option<i64> = None;
    for l in &v.nonzero_orbits {
        let c = isotropic::codimension(&representative_set(l, rs)?, rs)
            .ok_or_else(|| Error::Unsupported("codimension needs isotropic odd roots".into()))?;
        best = Some(best.map_or(c, |b| b.min(c)));
    }
    Ok(best)
}

// ---------------------------------------------------------------- characters

/// Polynomial with exact coefficients; keys are exponent vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polynomial {
    pub nvars: usize,
    #[serde(with = "poly_terms")]
    pub terms: BTreeMap<Vec<u32>, Q>,
}

mod poly_terms {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(t: &BTreeMap<Vec<u32>, Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<(Vec<u32>, String)> = t.iter().map(|(e, c)| (e.clone(), crate::rational::fmt_q(c))).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<Vec<u32>, Q>, D::Error> {
        let v: Vec<(Vec<u32>, String)> = Vec::deserialize(d)?;
        v.into_iter()
            .map(|(e, c)| crate::rational::parse_q(&c).map(|q| (e, q)).map_err(serde::de::Error::custom))
            .collect()
    }
}

impl Polynomial {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<u32>, c: Q) {
        let entry = self.terms.entry(e.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("h{}", i + 1) } else { format!("h{}^{k}", i + 1) })
                    .collect();
                if mono.is_empty() {
                    crate::rational::fmt_q(c)
                } else {
                    format!("{}*{}", crate::rational::fmt_q(c), mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `p` and `q` are nonzero multiples of each other; decided by cross-multiplication.
pub fn proportional(p: &Polynomial, q: &Polynomial) -> bool {
    if p.is_zero() || q.is_zero() || p.terms.len() != q.terms.len() {
        return false;
    }
    if p.terms.keys().ne(q.terms.keys()) {
        return false;
    }
    let (e0, p0) = p.terms.iter().next().expect("nonzero");
    let q0 = &q.terms[e0];
    p.terms.iter().all(|(e, pc)| pc * q0 == &q.terms[e] * p0)
}

/// `sdim M_mu` for every weight with nonzero signed multiplicity.
pub fn signed_multiplicities(module: &SuperModule) -> BTreeMap<Weight, i64> {
    let mut out = BTreeMap::new();
    for (w, idx) in module.weight_spaces() {
        let s: i64 = idx
            .iter()
            .map(|&i| if module.parities[i] == Parity::Even { 1 } else { -1 })
            .sum();
        if s != 0 {
            out.insert(w, s);
        }
    }
    out
}

fn monomials(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials(nvars - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn factorial(k: u32) -> Q {
    (1..=k).fold(Q::one(), |acc, i| acc * Q::from_integer(i.into()))
}

/// Degree-`d` Taylor component of `ch_M(h) = Σ sdim(M_mu) e^{mu(h)}`:
/// `p_d = Σ_mu sdim(M_mu) (mu(h))^d / d!`.
pub fn taylor_component(mults: &BTreeMap<Weight, i64>, nvars: usize, d: u32) -> Polynomial {
    let mut p = Polynomial {
        nvars,
        terms: BTreeMap::new(),
    };
    let monos = monomials(nvars, d);
    for (mu, &c) in mults {
        for e in &monos {
            let mut coeff = Q::from_integer(c.into());
            for (a, &k) in e.iter().enumerate() {
                if k > 0 {
                    coeff *= num_traits::pow(mu.0[a].clone(), k as usize) / factorial(k);
                }
            }
            if !coeff.is_zero() {
                p.add_term(e.clone(), coeff);
            }
        }
    }
    p
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupercharacterVerdict {
    pub s: usize,
    /// `p_0, ..., p_{s-1}` all vanish.
    pub holds: bool,
    /// Order of `ch_M` at zero; `None` when `ch_M` vanishes identically.
    pub order: Option<usize>,
    /// First nonzero Taylor component `p_order`.
    pub leading: Option<Polynomial>,
}

/// Expands Taylor components until the first nonzero one. If `ch_M` has `N`
/// distinct weights with nonzero multiplicity and `p_0..p_{N-1}` all vanish,
/// then `ch_M = 0` (Vandermonde), so the search is finite.
pub fn supercharacter_order(module: &SuperModule, s: usize) -> Result<SupercharacterVerdict> {
    let mults = signed_multiplicities(module);
    let nvars = module.model.size();
    let mut order = None;
    let mut leading = None;
    for d in 0..mults.len() {
        let p = taylor_component(&mults, nvars, d as u32);
        if !p.is_zero() {
            order = Some(d);
            leading = Some(p);
            break;
        }
    }
    Ok(SupercharacterVerdict {
        s,
        holds: order.is_none_or(|o| o >= s),
        order,
        leading,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionCheck {
    pub size: usize,
    pub sets_checked: usize,
    /// Sets `A` on which `ch_M` restricted to `h_A^⊥` does not vanish.
    pub failures: Vec<isotropic::IsotropicSet>,
}

impl RestrictionCheck {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `ch_M` vanishes on `h_A^⊥ = {h : alpha(h) = 0, alpha ∈ A}` for every `A ∈ S`
/// with `|A| = size`. Two weights restrict to the same character of `h_A^⊥`
/// iff their difference lies in `span A`, so the check groups weights modulo
/// `span A` and sums signed multiplicities.
pub fn restriction_law(module: &SuperModule, size: usize) -> Result<RestrictionCheck> {
    let rs = root_system_of(&module.model)?;
    let mults = signed_multiplicities(module);
    let dim = module.model.size();
    let sets = isotropic::enumerate_s(&rs, size);
    let failures: Vec<_> = sets
        .par_iter()
        .filter(|a| {
            let ech = Echelon::from_vectors(dim, a.roots.iter().map(|r| SparseVec::from_dense(&r.to_weight().0)));
            let mut sums: BTreeMap<SparseVec, i64> = BTreeMap::new();
            for (mu, c) in &mults {
                *sums.entry(ech.reduce(&SparseVec::from_dense(&mu.0))).or_default() += c;
            }
            sums.values().any(|&s| s != 0)
        })
        .cloned()
        .collect();
    Ok(RestrictionCheck {
        size,
        sets_checked: sets.len(),
        failures,
    })
}

// ---------------------------------------------------------------- centralizers

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerReport {
    pub orbit: OrbitLabel,
    pub rank: usize,
    /// `dim [x, g] = rank ad x`
    pub dim_image: usize,
    pub sdim_image: i64,
    pub dim_centralizer: usize,
    pub dim_g_x: usize,
    pub dim_g_x_even: usize,
    pub dim_g_x_odd: usize,
    pub expected_g_x: String,
    pub image_is_ideal: bool,
}

impl CentralizerReport {
    pub fn passes(&self, model: &SuperAlgebraModel) -> bool {
        let (m, n, k) = (model.m, model.n, self.rank);
        self.image_is_ideal
            && self.sdim_image == 0
            && self.dim_g_x == (m + n - 2 * k).pow(2)
            && self.dim_g_x_even == (m - k).pow(2) + (n - k).pow(2)
    }
}

/// `C_g(x) = ker ad x`, `[x, g] = im ad x` and `g_x = C_g(x) / [x, g]`.
pub fn centralizer_quotient(x: &OddRepresentative, model: &SuperAlgebraModel) -> Result<CentralizerReport> {
    let ad = model.ad(&x.element);
    let d = model.dim();
    let all: Vec<usize> = (0..d).collect();
    let even: Vec<usize> = all.iter().copied().filter(|&i| model.parity(i) == Parity::Even).collect();
    let odd: Vec<usize> = all.iter().copied().filter(|&i| model.parity(i) == Parity::Odd).collect();
    let r_even = ad.submatrix(&all, &even).rank();
    let r_odd = ad.submatrix(&all, &odd).rank();
    let dim_image = r_even + r_odd;
    // ad x is odd: the image of even elements is odd
    let (im_even, im_odd) = (r_odd, r_even);
    let (c_even, c_odd) = (even.len() - r_even, odd.len() - r_odd);

    let image = ad.image();
    let centralizer = ad.kernel();
    let mut image_is_ideal = image.rows().iter().all(|b| model.bracket(&x.element, b).is_zero());
    if image_is_ideal {
        image_is_ideal = centralizer
            .iter()
            .all(|c| image.rows().iter().all(|b| image.contains(&model.bracket(c, b))));
    }
    let k = x.label.total_rank();
    Ok(CentralizerReport {
        orbit: x.label.clone(),
        rank: k,
        dim_image,
        sdim_image: im_even as i64 - im_odd as i64,
        dim_centralizer: centralizer.len(),
        dim_g_x: centralizer.len() - dim_image,
        dim_g_x_even: c_even - im_even,
        dim_g_x_odd: c_odd - im_odd,
        expected_g_x: format!("gl({}|{})", model.m - k, model.n - k),
        image_is_ideal,
    })
}

// ---------------------------------------------------------------- invariants

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub dim_even: usize,
    pub dim_odd: usize,
    /// `(weight, dim)` of each nonzero weight component.
    pub by_weight: Vec<(Weight, usize)>,
    #[serde(skip)]
    pub basis: Vec<SparseVec>,
}

impl Invariants {
    pub fn dim(&self) -> usize {
        self.dim_even + self.dim_odd
    }
}

/// `H^0(g(-1); M)`: joint kernel of the `g(-1)` basis, weight space by weight space.
pub fn g_minus_invariants(module: &SuperModule) -> Invariants {
    let ys = module.model.g_minus();
    let mut out = Invariants {
        dim_even: 0,
        dim_odd: 0,
        by_weight: Vec::new(),
        basis: Vec::new(),
    };
    for (w, idx) in module.weight_spaces() {
        let mut total = 0;
        for p in [Parity::Even, Parity::Odd] {
            let cols: Vec<usize> = idx.iter().copied().filter(|&i| module.parities[i] == p).collect();
            if cols.is_empty() {
                continue;
            }
            let all: Vec<usize> = (0..module.dim()).collect();
            let rows: Vec<SparseVec> = ys
                .iter()
                .flat_map(|&y| module.action[y].submatrix(&all, &cols).rows())
                .collect();
            let ker = kernel_of_rows(&rows, cols.len());
            match p {
                Parity::Even => out.dim_even += ker.len(),
                Parity::Odd => out.dim_odd += ker.len(),
            }
            total += ker.len();
            out.basis
                .extend(ker.into_iter().map(|v| v.remap(|i| Some(cols[i]))));
        }
        if total > 0 {
            out.by_weight.push((w, total));
        }
    }
    out
}

/// Matrix of `ad x`; exposed for the orbit-dimension cross-check.
pub fn ad_matrix(x: &OddRepresentative, model: &SuperAlgebraModel) -> SparseMatrix {
    model.ad(&x.element)
}
