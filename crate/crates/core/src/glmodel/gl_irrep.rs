use std::collections::{BTreeMap, VecDeque};

use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseMatrix, SparseVec};
use crate::rational::{self, Q};

/// Irreducible `gl(k)`-module realized inside `(C^k)^{⊗N} ⊗ det^s`.
#[derive(Clone, Debug)]
pub struct GlIrrep {
    pub k: usize,
    pub highest: Vec<Q>,
    /// Weight of each basis vector.
    pub weights: Vec<Vec<Q>>,
    /// `e_ab` acts by `action[a * k + b]`.
    pub action: Vec<SparseMatrix>,
    /// Contravariant form for the transpose, normalized so the highest
    /// vector (basis index 0) has norm 1.
    pub gram: SparseMatrix,
}

impl GlIrrep {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn e(&self, a: usize, b: usize) -> &SparseMatrix {
        &self.action[a * self.k + b]
    }
}

struct Ambient {
    k: usize,
    slots: usize,
    pow: Vec<usize>,
}

impl Ambient {
    fn digit(&self, idx: usize, pos: usize) -> usize {
        idx / self.pow[pos] % self.k
    }

    /// `e_ab` acting on a tensor: replace a `b` by an `a` in each slot.
    fn apply(&self, a: usize, b: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (idx, c) in v.iter() {
            for pos in 0..self.slots {
                if self.digit(*idx, pos) == b {
                    let j = *idx - b * self.pow[pos] + a * self.pow[pos];
                    out.axpy(c, &SparseVec::unit(j));
                }
            }
        }
        out
    }

    fn counts(&self, idx: usize) -> Vec<i64> {
        let mut c = vec![0; self.k];
        for pos in 0..self.slots {
            c[self.digit(idx, pos)] += 1;
        }
        c
    }
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// Irreducible `gl(k)`-module of highest weight `a` (weakly decreasing with
/// integer gaps; entries may be rational, the common shift becomes a power of
/// the determinant). Built as the cyclic span of the highest vector
/// `⊗_columns (e_1 ∧ ... ∧ e_h)` under the lowering operators.
pub fn build_g0_irreducible(a: &[Q]) -> Result<GlIrrep> {
    let k = a.len();
    if k == 0 {
        return Err(Error::InvalidInput("empty highest weight".into()));
    }
    for w in a.windows(2) {
        let d = &w[0] - &w[1];
        if !rational::is_integer(&d) || d < Q::zero() {
            return Err(Error::InvalidInput(format!(
                "highest weight {a:?} is not dominant for gl({k})"
            )));
        }
    }
    let shift = a[k - 1].clone();
    let part: Vec<usize> = a
        .iter()
        .map(|x| (x - &shift).to_integer().to_usize().expect("non-negative"))
        .collect();
    let slots: usize = part.iter().sum();
    let amb_dim = (k as u128).pow(slots as u32);
    if amb_dim > 50_000_000 {
        return Err(Error::Unsupported(format!("highest weight {a:?} too large for the tensor model")));
    }
    let pow: Vec<usize> = (0..=slots).map(|p| k.pow(p as u32)).collect();
    let amb = Ambient { k, slots, pow };

    // highest vector: tensor product of column wedges
    let mut hw = SparseVec::unit(0);
    let mut offset = 0;
    for c in 0..part.first().copied().unwrap_or(0) {
        let h = part.iter().filter(|&&p| p > c).count();
        let perms = crate::atypicality::permutations(h);
        let mut next = SparseVec::new();
        for (idx, coeff) in hw.iter() {
            for p in &perms {
                let mut j = *idx;
                for (t, &d) in p.iter().enumerate() {
                    j += d * amb.pow[offset + t];
                }
                next.axpy(&(coeff * rational::q(permutation_sign(p))), &SparseVec::unit(j));
            }
        }
        hw = next;
        offset += h;
    }

    let key_of = |v: &SparseVec| amb.counts(v.leading().expect("nonzero").0);
    let mut order: Vec<Vec<i64>> = Vec::new();
    let mut spaces: BTreeMap<Vec<i64>, Echelon> = BTreeMap::new();
    let hw_key = key_of(&hw);
    let mut ech = Echelon::new(amb_dim as usize);
    ech.insert(hw.clone());
    spaces.insert(hw_key.clone(), ech);
    order.push(hw_key);
    let mut queue = VecDeque::from([hw]);
    while let Some(v) = queue.pop_front() {
        for i in 0..k.saturating_sub(1) {
            let w = amb.apply(i + 1, i, &v);
            if w.is_zero() {
                continue;
            }
            let key = key_of(&w);
            let space = spaces.entry(key.clone()).or_insert_with(|| {
                order.push(key.clone());
                Echelon::new(amb_dim as usize)
            });
            if space.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }

    // basis: RREF rows of each weight space; coordinates are pivot entries
    let mut basis: Vec<SparseVec> = Vec::new();
    let mut weights = Vec::new();
    let mut layout: BTreeMap<Vec<i64>, (usize, Vec<usize>)> = BTreeMap::new();
    for key in &order {
        let space = &spaces[key];
        let rows = space.rref_rows();
        let pivots: Vec<usize> = space.pivot_columns().collect();
        layout.insert(key.clone(), (basis.len(), pivots));
        let wt: Vec<Q> = key.iter().map(|&c| rational::q(c) + &shift).collect();
        for r in rows {
            basis.push(r);
            weights.push(wt.clone());
        }
    }
    let dim = basis.len();

    let mut action = Vec::with_capacity(k * k);
    for a_ in 0..k {
        for b in 0..k {
            let cols = basis
                .iter()
                .zip(&weights)
                .map(|(u, _)| {
                    let mut w = amb.apply(a_, b, u);
                    if a_ == b {
                        w.axpy(&shift, u);
                    }
                    if w.is_zero() {
                        return SparseVec::new();
                    }
                    let key = key_of(&w);
                    let (start, pivots) = &layout[&key];
                    debug_assert!(spaces[&key].contains(&w));
                    SparseVec::from_pairs(pivots.iter().enumerate().map(|(r, &p)| (start + r, w.get(p))))
                })
                .collect();
            action.push(SparseMatrix::from_columns(dim, cols));
        }
    }

    let norm = basis[0].dot(&basis[0]);
    let mut gcols = vec![SparseVec::new(); dim];
    for (key, (start, pivots)) in &layout {
        let _ = key;
        let len = pivots.len();
        for i in *start..start + len {
            for j in *start..start + len {
                let d = basis[i].dot(&basis[j]) / &norm;
                if !d.is_zero() {
                    gcols[j].axpy(&d, &SparseVec::unit(i));
                }
            }
        }
    }
    debug_assert!(gcols[0].get(0).is_one());

    Ok(GlIrrep {
        k,
        highest: a.to_vec(),
        weights,
        action,
        gram: SparseMatrix::from_columns(dim, gcols),
    })
}
