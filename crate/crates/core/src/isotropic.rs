//! The poset `S` of mutually orthogonal, linearly independent isotropic root
//! sets, its `W`-orbits (which label the `G_0`-orbits on the self-commuting
//! cone), orbit dimensions and the closure order.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::rational::q;
use crate::rootdata::{AlgebraType, Root, RootSystem, WeylElement};

/// An element `A` of `S`, kept sorted so that set equality is list equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IsotropicSet {
    pub roots: Vec<Root>,
}

impl IsotropicSet {
    pub fn empty() -> Self {
        IsotropicSet { roots: Vec::new() }
    }

    /// Sorts `roots`; does not validate (see [`validate`]).
    pub fn new(mut roots: Vec<Root>) -> Self {
        roots.sort();
        roots.dedup();
        IsotropicSet { roots }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn is_subset_of(&self, other: &IsotropicSet) -> bool {
        self.roots.iter().all(|r| other.roots.binary_search(r).is_ok())
    }

    pub fn act(&self, w: &WeylElement) -> IsotropicSet {
        IsotropicSet::new(self.roots.iter().map(|r| w.apply_root(r)).collect())
    }

    /// Every odd root orthogonal to all of `A`.
    pub fn is_orthogonal_to(&self, r: &Root, rs: &RootSystem) -> bool {
        self.roots.iter().all(|a| rs.pair_roots(a, r).is_zero())
    }
}

impl fmt::Display for IsotropicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, r) in self.roots.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", r.coeffs)?;
        }
        write!(f, "}}")
    }
}

fn root_vec(r: &Root) -> SparseVec {
    SparseVec::from_pairs(r.coeffs.iter().enumerate().map(|(i, &c)| (i, q(c))))
}

/// Checks the defining properties of an element of `S`.
pub fn validate(a: &IsotropicSet, rs: &RootSystem) -> Result<()> {
    let mut ech = Echelon::new(rs.rank());
    for (i, r) in a.roots.iter().enumerate() {
        if r.coeffs.len() != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                got: r.coeffs.len(),
            });
        }
        if !rs.delta1.iter().any(|o| o.coeffs == r.coeffs) {
            return Err(Error::InvalidInput(format!("{:?} is not an odd root", r.coeffs)));
        }
        if !rs.pair_roots(r, r).is_zero() {
            return Err(Error::InvalidInput(format!("{:?} is not isotropic", r.coeffs)));
        }
        if a.roots[..i].iter().any(|s| !rs.pair_roots(r, s).is_zero()) {
            return Err(Error::InvalidInput(format!("{:?} is not orthogonal to the rest", r.coeffs)));
        }
        if !ech.insert(root_vec(r)) {
            return Err(Error::InvalidInput(format!("{a} is linearly dependent")));
        }
    }
    Ok(())
}

/// `S_k`: all `A` in `S` with `|A| = k`, in canonical order.
pub fn enumerate_s(rs: &RootSystem, k: usize) -> Vec<IsotropicSet> {
    let iso: Vec<Root> = {
        let mut v: Vec<Root> = rs.isotropic_roots().cloned().collect();
        v.sort();
        v
    };
    if k == 0 {
        return vec![IsotropicSet::empty()];
    }

    fn extend(
        iso: &[Root],
        rs: &RootSystem,
        k: usize,
        start: usize,
        chosen: &mut Vec<Root>,
        ech: &Echelon,
        out: &mut Vec<IsotropicSet>,
    ) {
        if chosen.len() == k {
            out.push(IsotropicSet::new(chosen.clone()));
            return;
        }
        for idx in start..iso.len() {
            if iso.len() - idx < k - chosen.len() {
                break;
            }
            let r = &iso[idx];
            if chosen.iter().any(|s| !rs.pair_roots(r, s).is_zero()) {
                continue;
            }
            let mut next = ech.clone();
            if !next.insert(root_vec(r)) {
                continue;
            }
            chosen.push(r.clone());
            extend(iso, rs, k, idx + 1, chosen, &next, out);
            chosen.pop();
        }
    }

    let mut out: Vec<IsotropicSet> = (0..iso.len())
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut ech = Echelon::new(rs.rank());
            ech.insert(root_vec(&iso[first]));
            let mut chosen = vec![iso[first].clone()];
            let mut local = Vec::new();
            extend(&iso, rs, k, first + 1, &mut chosen, &ech, &mut local);
            local
        })
        .collect();
    out.sort();
    out
}

/// Maximal `|A|` over `S`.
pub fn defect(rs: &RootSystem) -> usize {
    let mut k = 0;
    while !enumerate_s(rs, k + 1).is_empty() {
        k += 1;
    }
    k
}

/// Label of a `G_0`-orbit on the self-commuting cone.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OrbitLabel {
    /// `gl`/`sl`: `p` roots in `g(1)`, `q` roots in `g(-1)`.
    Gl { p: usize, q: usize },
    /// `osp` and the exceptional types. `sign` separates the two components
    /// of the maximal orbit of `osp(2l|2n)` with `l <= n`.
    Rank {
        r: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        sign: Option<u8>,
    },
}

impl OrbitLabel {
    pub fn total_rank(&self) -> usize {
        match self {
            OrbitLabel::Gl { p, q } => p + q,
            OrbitLabel::Rank { r, .. } => *r,
        }
    }

    pub fn zero_for(rs: &RootSystem) -> OrbitLabel {
        match rs.algebra {
            AlgebraType::Gl { .. } | AlgebraType::Sl { .. } => OrbitLabel::Gl { p: 0, q: 0 },
            _ => OrbitLabel::Rank { r: 0, sign: None },
        }
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitLabel::Gl { p, q } => write!(f, "({p},{q})"),
            OrbitLabel::Rank { r, sign: None } => write!(f, "r{r}"),
            OrbitLabel::Rank { r, sign: Some(s) } => write!(f, "r{r}{}", if *s == 0 { "+" } else { "-" }),
        }
    }
}

fn osp_split(rs: &RootSystem) -> Option<usize> {
    match rs.algebra {
        AlgebraType::Osp { m, n } if m % 2 == 0 && m / 2 <= n => Some(m / 2),
        _ => None,
    }
}

/// Orbit label of `A`; invariant under `W`.
pub fn classify_orbit(a: &IsotropicSet, rs: &RootSystem) -> Result<OrbitLabel> {
    validate(a, rs)?;
    Ok(classify_unchecked(a, rs))
}

fn classify_unchecked(a: &IsotropicSet, rs: &RootSystem) -> OrbitLabel {
    match &rs.algebra {
        AlgebraType::Gl { .. } | AlgebraType::Sl { .. } => {
            let p = a.roots.iter().filter(|r| rs.is_positive(r)).count();
            OrbitLabel::Gl { p, q: a.len() - p }
        }
        _ => {
            let r = a.len();
            let sign = match osp_split(rs) {
                Some(l) if r == l => {
                    let neg = a.roots.iter().filter(|x| x.coeffs[..l].iter().any(|&c| c < 0)).count();
                    Some((neg % 2) as u8)
                }
                _ => None,
            };
            OrbitLabel::Rank { r, sign }
        }
    }
}

/// `|Delta_1 \ A^perp| / 2 + |A|`.
pub fn orbit_dimension(a: &IsotropicSet, rs: &RootSystem) -> usize {
    let outside = rs.delta1.iter().filter(|r| !a.is_orthogonal_to(r, rs)).count();
    debug_assert!(outside % 2 == 0);
    outside / 2 + a.len()
}

/// `|Delta_1 ∩ A^perp| / 2 - |A|`, the codimension of the orbit in the cone;
/// defined only when every odd root is isotropic.
pub fn codimension(a: &IsotropicSet, rs: &RootSystem) -> Option<i64> {
    if !rs.all_odd_isotropic() {
        return None;
    }
    let inside = rs.delta1.iter().filter(|r| a.is_orthogonal_to(r, rs)).count() as i64;
    Some(inside / 2 - a.len() as i64)
}

/// `W`-orbit of `a` inside `S_{|a|}`.
pub fn weyl_orbit(a: &IsotropicSet, gens: &[WeylElement]) -> BTreeSet<IsotropicSet> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(a.clone());
    queue.push_back(a.clone());
    while let Some(cur) = queue.pop_front() {
        for g in gens {
            let img = cur.act(g);
            if seen.insert(img.clone()) {
                queue.push_back(img);
            }
        }
    }
    seen
}

/// Partition of `S_k` into `W`-orbits, each sorted, orbits ordered by their
/// first element.
pub fn weyl_orbits_on(rs: &RootSystem, k: usize) -> Vec<Vec<IsotropicSet>> {
    let gens = rs.weyl_generators();
    let mut remaining: BTreeSet<IsotropicSet> = enumerate_s(rs, k).into_iter().collect();
    let mut orbits = Vec::new();
    while let Some(first) = remaining.iter().next().cloned() {
        let orbit = weyl_orbit(&first, &gens);
        for x in &orbit {
            remaining.remove(x);
        }
        orbits.push(orbit.into_iter().collect());
    }
    orbits
}

/// Number of `W`-orbits on `S` (equivalently, of `G_0`-orbits on the cone).
pub fn count_orbits(rs: &RootSystem) -> usize {
    let mut total = 0;
    for k in 0.. {
        let orbits = weyl_orbits_on(rs, k);
        if orbits.is_empty() {
            break;
        }
        total += orbits.len();
    }
    total
}

/// All labels that occur for `rs`, sorted.
pub fn all_labels(rs: &RootSystem) -> Vec<OrbitLabel> {
    if let Some((m, n)) = rs.gl_dims() {
        let d = m.min(n);
        let mut v = Vec::new();
        for p in 0..=d {
            for q in 0..=(d - p) {
                v.push(OrbitLabel::Gl { p, q });
            }
        }
        return v;
    }
    let mut set = BTreeSet::new();
    for k in 0.. {
        let s = enumerate_s(rs, k);
        if s.is_empty() {
            break;
        }
        for a in &s {
            set.insert(classify_unchecked(a, rs));
        }
    }
    set.into_iter().collect()
}

/// Canonical representative `A` of a label. For `gl` this is the root set of
/// the block-form matrix: `eps_i - delta_i` for `i < p` and
/// `delta_{n-q+t} - eps_{m-q+t}` for `t < q`.
pub fn representative_set(label: &OrbitLabel, rs: &RootSystem) -> Result<IsotropicSet> {
    match (label, rs.gl_dims()) {
        (OrbitLabel::Gl { p, q }, Some((m, n))) => {
            if p + q > m.min(n) {
                return Err(Error::InvalidInput(format!("label {label} out of range for {}", rs.algebra)));
            }
            let dim = m + n;
            let mut roots = Vec::new();
            for i in 0..*p {
                let mut c = vec![0; dim];
                c[i] = 1;
                c[m + i] = -1;
                roots.push(c);
            }
            for t in 0..*q {
                let mut c = vec![0; dim];
                c[m - q + t] = -1;
                c[m + n - q + t] = 1;
                roots.push(c);
            }
            let set = IsotropicSet::new(
                roots
                    .into_iter()
                    .map(|coeffs| rs.delta1.iter().find(|r| r.coeffs == coeffs).cloned().expect("odd root"))
                    .collect(),
            );
            debug_assert_eq!(classify_unchecked(&set, rs), *label);
            Ok(set)
        }
        (OrbitLabel::Rank { r, .. }, None) => enumerate_s(rs, *r)
            .into_iter()
            .find(|a| classify_unchecked(a, rs) == *label)
            .ok_or_else(|| Error::InvalidInput(format!("no orbit {label} for {}", rs.algebra))),
        _ => Err(Error::InvalidInput(format!("label {label} does not fit {}", rs.algebra))),
    }
}

/// Whether orbit `a` lies in the closure of orbit `b`. For `gl` this is the
/// componentwise rule `p <= p'`, `q <= q'`; elsewhere it is decided by
/// [`closure_leq_by_search`].
pub fn closure_leq(a: &OrbitLabel, b: &OrbitLabel, rs: &RootSystem) -> Result<bool> {
    match (a, b) {
        (OrbitLabel::Gl { p, q }, OrbitLabel::Gl { p: p2, q: q2 }) if rs.gl_dims().is_some() => {
            representative_set(a, rs)?;
            representative_set(b, rs)?;
            Ok(p <= p2 && q <= q2)
        }
        _ => closure_leq_by_search(a, b, rs),
    }
}

/// Exhaustive test: does some `W`-translate of the representative of `a`
/// sit inside the representative of `b`?
pub fn closure_leq_by_search(a: &OrbitLabel, b: &OrbitLabel, rs: &RootSystem) -> Result<bool> {
    let ra = representative_set(a, rs)?;
    let rb = representative_set(b, rs)?;
    if ra.len() > rb.len() {
        return Ok(false);
    }
    let gens = rs.weyl_generators();
    Ok(weyl_orbit(&ra, &gens).iter().any(|x| x.is_subset_of(&rb)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitInfo {
    pub label: OrbitLabel,
    pub representative_set: IsotropicSet,
    pub dimension: usize,
    pub codimension_in_x: Option<i64>,
    /// Labels of the orbits contained in the closure of this one.
    pub closure_contains: Vec<OrbitLabel>,
}

/// Full orbit table of the cone for `rs`.
pub fn orbit_table(rs: &RootSystem) -> Result<Vec<OrbitInfo>> {
    let labels = all_labels(rs);
    labels
        .iter()
        .map(|label| {
            let rep = representative_set(label, rs)?;
            let mut below = Vec::new();
            for other in &labels {
                if closure_leq(other, label, rs)? {
                    below.push(other.clone());
                }
            }
            Ok(OrbitInfo {
                label: label.clone(),
                dimension: orbit_dimension(&rep, rs),
                codimension_in_x: codimension(&rep, rs),
                representative_set: rep,
                closure_contains: below,
            })
        })
        .collect()
}
