//! Degree of atypicality, central-character equivalence and stability of
//! weights.

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::isotropic::{enumerate_s, IsotropicSet};
use crate::linalg::{Echelon, SparseVec};
use crate::rational::{self, Q};
use crate::rootdata::{Root, RootSystem, Weight, WeylElement};

/// A maximal orthogonal set realizing the degree of atypicality of `lambda`;
/// `t_lambda = lambda + span(t_lambda_basis)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterWitness {
    pub lambda: Weight,
    #[serde(rename = "A")]
    pub a: IsotropicSet,
    pub t_lambda_basis: Vec<Root>,
}

fn gl_dims(rs: &RootSystem) -> Result<(usize, usize)> {
    rs.gl_dims()
        .ok_or_else(|| Error::Unsupported(format!("operation defined for gl/sl only, got {}", rs.algebra)))
}

fn orthogonal_to(shifted: &Weight, a: &IsotropicSet, rs: &RootSystem) -> bool {
    a.roots.iter().all(|r| rs.pair_root_weight(r, shifted).is_zero())
}

/// Largest `|A|` over `A ∈ S` with `A ⊥ (lambda + rho)`.
///
/// For `gl` this is a maximum matching between `{a_i}` and `{-b_j}`, which the
/// generic search below also finds; the matching count is used for speed.
pub fn atypicality_degree(lambda: &Weight, rs: &RootSystem) -> Result<usize> {
    rs.check_len(lambda)?;
    let shifted = rs.shift(lambda);
    if let Some((m, _)) = rs.gl_dims() {
        let (a, b) = shifted.0.split_at(m);
        let mut used = vec![false; b.len()];
        let mut k = 0;
        for x in a {
            if let Some(j) = (0..b.len()).find(|&j| !used[j] && (x + &b[j]).is_zero()) {
                used[j] = true;
                k += 1;
            }
        }
        return Ok(k);
    }
    Ok(degree_by_search(&shifted, rs))
}

/// Literal search over `S`; exposed so the matching shortcut can be audited.
pub fn degree_by_search(shifted: &Weight, rs: &RootSystem) -> usize {
    let mut best = 0;
    for k in 1.. {
        let sk = enumerate_s(rs, k);
        if sk.is_empty() {
            break;
        }
        if sk.iter().any(|a| orthogonal_to(shifted, a, rs)) {
            best = k;
        }
    }
    best
}

/// Lexicographically first maximal `A ⊥ (lambda + rho)` made of positive roots.
pub fn witness(lambda: &Weight, rs: &RootSystem) -> Result<CharacterWitness> {
    let k = atypicality_degree(lambda, rs)?;
    let shifted = rs.shift(lambda);
    let a = if k == 0 {
        IsotropicSet::empty()
    } else {
        enumerate_s(rs, k)
            .into_iter()
            .find(|a| a.roots.iter().all(|r| rs.is_positive(r)) && orthogonal_to(&shifted, a, rs))
            .expect("a maximal orthogonal set can always be made positive")
    };
    Ok(CharacterWitness {
        lambda: lambda.clone(),
        t_lambda_basis: a.roots.clone(),
        a,
    })
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next_permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

fn check_integral(shifted: &Weight, m: usize) -> Result<()> {
    let (a, b) = shifted.0.split_at(m);
    for x in a {
        for y in b {
            if !rational::is_integer(&(x + y)) {
                return Err(Error::Unsupported(format!(
                    "weight with lambda+rho = {shifted} is not integral"
                )));
            }
        }
    }
    Ok(())
}

/// Whether `lambda` and `mu` have the same central character: some `w ∈ W`
/// puts `w(mu + rho)` in `(lambda + rho) + span(A)` for a witness `A` of
/// `lambda`. Decided by an exact membership test per Weyl group element.
///
/// Integrality is read as `a_i + b_j ∈ Z` for all `i, j`, which admits the
/// half-integral `rho` of `gl(m|n)` with `m + n` odd.
pub fn same_central_character(lambda: &Weight, mu: &Weight, rs: &RootSystem) -> Result<bool> {
    let (m, n) = gl_dims(rs)?;
    rs.check_len(lambda)?;
    rs.check_len(mu)?;
    let sl = rs.shift(lambda);
    let sm = rs.shift(mu);
    check_integral(&sl, m)?;
    check_integral(&sm, m)?;
    let wit = witness(lambda, rs)?;
    let span = Echelon::from_vectors(
        m + n,
        wit.a.roots.iter().map(|r| {
            SparseVec::from_pairs(r.coeffs.iter().enumerate().map(|(i, &c)| (i, rational::q(c))))
        }),
    );
    let pa = permutations(m);
    let pb = permutations(n);
    Ok(pa.par_iter().any(|sa| {
        pb.iter().any(|sb| {
            let w = WeylElement::from_permutations(sa, sb);
            let diff = w.apply(&sm).sub(&sl);
            span.contains(&SparseVec::from_dense(&diff.0))
        })
    }))
}

/// `w . lambda = w(lambda + rho) - rho`.
pub fn shifted_action(w: &WeylElement, lambda: &Weight, rs: &RootSystem) -> Weight {
    rs.unshift(&w.apply(&rs.shift(lambda)))
}

/// Index `t` such that `q_simple_roots` is `simple[t..]`.
fn tail_start(q_simple_roots: &[Root], rs: &RootSystem) -> Result<usize> {
    let total = rs.simple.len();
    let t = total - q_simple_roots.len().min(total);
    if q_simple_roots.len() > total
        || rs.simple[t..]
            .iter()
            .zip(q_simple_roots)
            .any(|(a, b)| a.coeffs != b.coeffs)
    {
        return Err(Error::InvalidInput(
            "subalgebra must be generated by a tail segment of the simple roots".into(),
        ));
    }
    Ok(t)
}

/// Whether every isotropic `alpha` with `(lambda + rho, alpha) = 0` lies in the
/// root system generated by `q_simple_roots` (a tail of the simple roots).
pub fn is_stable(lambda: &Weight, q_simple_roots: &[Root], rs: &RootSystem) -> Result<bool> {
    gl_dims(rs)?;
    rs.check_len(lambda)?;
    let t = if q_simple_roots.is_empty() {
        rs.rank()
    } else {
        tail_start(q_simple_roots, rs)?
    };
    let shifted = rs.shift(lambda);
    Ok(rs
        .isotropic_roots()
        .filter(|r| rs.pair_root_weight(r, &shifted).is_zero())
        .all(|r| r.coeffs.iter().enumerate().all(|(i, &c)| c == 0 || i >= t)))
}

/// Simple roots of the admissible subalgebra `gl(k|n)` sitting in the lower
/// right corner: `eps_{m-k+1} - eps_{m-k+2}, ..., delta_{n-1} - delta_n`.
pub fn stability_subalgebra(k: usize, rs: &RootSystem) -> Result<Vec<Root>> {
    let (m, _) = gl_dims(rs)?;
    if k > m {
        return Err(Error::InvalidInput(format!("k = {k} exceeds m = {m}")));
    }
    Ok(rs.simple[(m - k).min(rs.simple.len())..].to_vec())
}

/// `(a | b)` blocks of `lambda + rho` for `gl(m|n)`.
pub fn ab_blocks(lambda: &Weight, rs: &RootSystem) -> Result<(Vec<Q>, Vec<Q>)> {
    let (m, _) = gl_dims(rs)?;
    rs.check_len(lambda)?;
    let s = rs.shift(lambda);
    Ok((s.0[..m].to_vec(), s.0[m..].to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_system, AlgebraType};

    fn gl(m: usize, n: usize) -> RootSystem {
        build_root_system(&AlgebraType::gl(m, n).unwrap()).unwrap()
    }

    fn from_shifted(rs: &RootSystem, v: &[Q]) -> Weight {
        rs.unshift(&Weight(v.to_vec()))
    }

    fn ints(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| rational::q(x)).collect()
    }

    #[test]
    fn degree_examples() {
        let r = gl(1, 1);
        assert_eq!(atypicality_degree(&Weight::zero(2), &r).unwrap(), 1);
        assert_eq!(atypicality_degree(&from_shifted(&r, &ints(&[1, 0])), &r).unwrap(), 0);
        let r = gl(2, 1);
        assert_eq!(atypicality_degree(&from_shifted(&r, &ints(&[2, 1, -2])), &r).unwrap(), 1);
    }

    #[test]
    fn degree_shortcut_matches_search() {
        let r = gl(2, 2);
        for a in -2..=2 {
            for b in -2..=2 {
                let lam = from_shifted(&r, &ints(&[2, a, b, -2]));
                assert_eq!(
                    atypicality_degree(&lam, &r).unwrap(),
                    degree_by_search(&r.shift(&lam), &r)
                );
            }
        }
    }

    #[test]
    fn witness_examples() {
        let r = gl(1, 1);
        let w = witness(&Weight::zero(2), &r).unwrap();
        assert_eq!(w.a.roots.len(), 1);
        assert_eq!(w.a.roots[0].coeffs, vec![1, -1]);
        let w = witness(&from_shifted(&r, &ints(&[1, 0])), &r).unwrap();
        assert!(w.a.is_empty());
        let r = gl(2, 2);
        let w = witness(&from_shifted(&r, &ints(&[2, 1, -1, -2])), &r).unwrap();
        let coeffs: Vec<_> = w.a.roots.iter().map(|x| x.coeffs.clone()).collect();
        assert_eq!(coeffs, vec![vec![0, 1, -1, 0], vec![1, 0, 0, -1]]);
    }

    #[test]
    fn central_character_examples() {
        let r = gl(1, 1);
        let zero = Weight::zero(2);
        assert!(same_central_character(&zero, &zero, &r).unwrap());
        let mu = from_shifted(&r, &[rational::half(), -rational::half()]);
        assert!(same_central_character(&zero, &mu, &r).unwrap());
        let l1 = from_shifted(&r, &ints(&[1, 0]));
        let l2 = from_shifted(&r, &ints(&[2, 0]));
        assert!(!same_central_character(&l1, &l2, &r).unwrap());
        let frac = from_shifted(&r, &[rational::half(), rational::q(0)]);
        assert!(matches!(same_central_character(&frac, &l1, &r), Err(Error::Unsupported(_))));
    }

    #[test]
    fn stability_examples() {
        let r = gl(2, 1);
        let q = stability_subalgebra(1, &r).unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(q[0].coeffs, vec![0, 1, -1]);
        assert!(is_stable(&from_shifted(&r, &ints(&[2, 1, -1])), &q, &r).unwrap());
        assert!(!is_stable(&from_shifted(&r, &ints(&[2, 1, -2])), &q, &r).unwrap());
        assert!(is_stable(&from_shifted(&r, &ints(&[3, 1, 0])), &[], &r).unwrap());
        let bad = vec![r.simple[0].clone()];
        assert!(matches!(is_stable(&Weight::zero(3), &bad, &r), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn permutations_count() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(4).len(), 24);
    }
}
