use std::collections::VecDeque;

use super::module::SuperModule;
use crate::linalg::{kernel_of_rows, Echelon, SparseMatrix, SparseVec};
use crate::rootdata::Weight;

/// Smallest submodule containing `seed` and `vectors`, returned as an echelon basis.
pub fn cyclic_submodule(module: &SuperModule, vectors: &[SparseVec], seed: Option<Echelon>) -> Echelon {
    let mut ech = seed.unwrap_or_else(|| Echelon::new(module.dim()));
    let mut queue: VecDeque<SparseVec> = VecDeque::new();
    for v in vectors {
        if ech.insert(v.clone()) {
            queue.push_back(v.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        for a in &module.action {
            let w = a.apply(&v);
            if !w.is_zero() && ech.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    ech
}

/// Vectors of weight `weight` killed modulo `modulo` by every simple raising
/// operator and independent modulo `modulo`.
pub fn primitive_vectors(module: &SuperModule, modulo: &Echelon, weight: &Weight) -> Vec<SparseVec> {
    let idx: Vec<usize> = (0..module.dim()).filter(|&i| &module.weights[i] == weight).collect();
    if idx.is_empty() {
        return Vec::new();
    }
    let d = module.dim();
    let raising = module.model.simple_raising();
    // rows of the linear map c -> (reduce(E_t v))_t, v = Σ c_j e_{idx_j}
    let cols: Vec<SparseVec> = idx
        .iter()
        .map(|&j| {
            let mut out = SparseVec::new();
            for (t, &e) in raising.iter().enumerate() {
                let r = modulo.reduce(module.action[e].col(j));
                out.axpy(&num_traits::One::one(), &r.remap(|i| Some(t * d + i)));
            }
            out
        })
        .collect();
    let rows = SparseMatrix::from_columns(raising.len() * d, cols).rows();
    let mut found = modulo.clone();
    let mut out = Vec::new();
    for c in kernel_of_rows(&rows, idx.len()) {
        let v = SparseVec::from_pairs(c.iter().map(|(i, x)| (idx[*i], x.clone())));
        if found.insert(v.clone()) {
            out.push(v);
        }
    }
    out
}

/// Maximal proper submodule of a highest-weight module, computed without any
/// bilinear form: repeatedly add the cyclic span of primitive vectors
/// (modulo what has been found) of weight other than the highest weight.
pub fn maximal_submodule_oracle(module: &SuperModule) -> Echelon {
    let lambda = module.highest.as_ref().map(|h| h.lambda.clone());
    let weights: Vec<Weight> = module.weight_spaces().into_keys().filter(|w| Some(w) != lambda.as_ref()).collect();
    let mut n = Echelon::new(module.dim());
    loop {
        let mut grew = false;
        for w in &weights {
            let prims = primitive_vectors(module, &n, w);
            if !prims.is_empty() {
                n = cyclic_submodule(module, &prims, Some(n));
                grew = true;
            }
        }
        if !grew {
            return n;
        }
    }
}

/// A highest-weight module is irreducible iff it is generated by its highest
/// vector and has no primitive vectors of any other weight.
pub fn is_irreducible(module: &SuperModule) -> bool {
    let Some(h) = &module.highest else {
        return false;
    };
    let gen = cyclic_submodule(module, &[SparseVec::unit(h.highest_vector_index)], None);
    if gen.rank() != module.dim() {
        return false;
    }
    let zero = Echelon::new(module.dim());
    module
        .weight_spaces()
        .into_keys()
        .filter(|w| *w != h.lambda)
        .all(|w| primitive_vectors(module, &zero, &w).is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glmodel::{build_algebra, build_irreducible, build_kac_module, contravariant_radical};

    fn same_span(dim: usize, a: &[SparseVec], b: &Echelon) -> bool {
        let ea = Echelon::from_vectors(dim, a.iter().cloned());
        ea.rank() == b.rank() && a.iter().all(|v| b.contains(v))
    }

    #[test]
    fn radical_matches_oracle_gl11() {
        let g = build_algebra(1, 1).unwrap();
        for lam in [[0, 0], [1, -1], [2, 0], [1, 0], [-3, 3]] {
            let k = build_kac_module(&Weight::from_ints(&lam), &g).unwrap();
            let rad = contravariant_radical(&k);
            let oracle = maximal_submodule_oracle(&k.module);
            assert!(same_span(k.module.dim(), &rad, &oracle), "{lam:?}");
        }
    }

    #[test]
    fn radical_matches_oracle_gl21() {
        let g = build_algebra(2, 1).unwrap();
        for lam in [[0, 0, 0], [1, 0, -1], [1, 1, -2], [2, 0, 1], [0, -1, 1]] {
            let k = build_kac_module(&Weight::from_ints(&lam), &g).unwrap();
            let rad = contravariant_radical(&k);
            let oracle = maximal_submodule_oracle(&k.module);
            assert!(same_span(k.module.dim(), &rad, &oracle), "{lam:?}");
            let l = build_irreducible(&Weight::from_ints(&lam), &g).unwrap();
            l.verify().unwrap();
            assert!(is_irreducible(&l), "{lam:?}");
        }
    }

    #[test]
    fn atypical_kac_is_reducible() {
        let g = build_algebra(1, 1).unwrap();
        let k = build_kac_module(&Weight::from_ints(&[0, 0]), &g).unwrap();
        assert!(!is_irreducible(&k.module));
        let k = build_kac_module(&Weight::from_ints(&[1, 0]), &g).unwrap();
        assert!(is_irreducible(&k.module));
    }
}
