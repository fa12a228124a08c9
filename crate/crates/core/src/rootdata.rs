//! Root systems, the invariant form on `h*`, `rho`, and the Weyl group action.
//!
//! Coordinates are always taken in the `epsilon/delta` basis of `h*`:
//!
//! * `gl(m|n)`, `sl(m|n)`: `eps_1..eps_m, delta_1..delta_n`, with
//!   `(eps_i, eps_j) = delta_ij` and `(delta_i, delta_j) = -delta_ij`.
//! * `osp(m|2n)`: `eps_1..eps_l, delta_1..delta_n` where `l = floor(m/2)`,
//!   same form.
//! * `D(alpha)`: `eps_1, eps_2, eps_3` with squared lengths
//!   `-(1+alpha)/2, 1/2, alpha/2`.
//! * `G3`: `eps_1, eps_2, delta` with `eps_3 = -eps_1 - eps_2`,
//!   `(eps_i, eps_j) = 1 - 3 delta_ij` and `(delta, delta) = 2`.
//! * `F4`: half-coordinates, so the odd roots `(±eps_1 ± eps_2 ± eps_3 ± delta)/2`
//!   have integer entries `±1`; the form is `diag(1, 1, 1, -3)` on these
//!   coordinates, i.e. four times the usual normalization.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: usize) -> Self {
        if b % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn flip(self) -> Self {
        Self::from_bit(self.bit() + 1)
    }

    pub fn add(self, other: Parity) -> Parity {
        Self::from_bit(self.bit() + other.bit())
    }
}

/// A contragredient superalgebra from the supported list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraType {
    Gl { m: usize, n: usize },
    Sl { m: usize, n: usize },
    /// `osp(m|2n)`; `n` is the number of `delta` coordinates.
    Osp { m: usize, n: usize },
    DAlpha { alpha: Q },
    F4,
    G3,
}

impl AlgebraType {
    pub fn gl(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Config(format!("gl({m}|{n}) needs m, n >= 1")));
        }
        Ok(AlgebraType::Gl { m, n })
    }

    /// `sl(n|n)` is redirected to `gl(n|n)`.
    pub fn sl(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Config(format!("sl({m}|{n}) needs m, n >= 1")));
        }
        if m == n {
            return Ok(AlgebraType::Gl { m, n });
        }
        Ok(AlgebraType::Sl { m, n })
    }

    /// `osp(m|two_n)`.
    pub fn osp(m: usize, two_n: usize) -> Result<Self> {
        if m == 0 || two_n == 0 || two_n % 2 != 0 {
            return Err(Error::Config(format!(
                "osp({m}|{two_n}) needs m >= 1 and a positive even second parameter"
            )));
        }
        Ok(AlgebraType::Osp { m, n: two_n / 2 })
    }

    pub fn d_alpha(alpha: Q) -> Result<Self> {
        if alpha.is_zero() || alpha == -Q::one() {
            return Err(Error::Config(format!("D(alpha) needs alpha not in {{0, -1}}, got {alpha}")));
        }
        Ok(AlgebraType::DAlpha { alpha })
    }

    /// Parses `gl:2:2`, `sl:3:1`, `osp:5:4`, `D_alpha:1/2`, `F4`, `G3`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let int = |t: &str| -> Result<usize> {
            t.trim()
                .parse()
                .map_err(|_| Error::Config(format!("bad algebra parameter {t:?} in {s:?}")))
        };
        match parts.as_slice() {
            [f, m, n] if f.eq_ignore_ascii_case("gl") => Self::gl(int(m)?, int(n)?),
            [f, m, n] if f.eq_ignore_ascii_case("sl") => Self::sl(int(m)?, int(n)?),
            [f, m, n] if f.eq_ignore_ascii_case("osp") => Self::osp(int(m)?, int(n)?),
            [f, a] if f.eq_ignore_ascii_case("d_alpha") || f.eq_ignore_ascii_case("d") => {
                Self::d_alpha(rational::parse_q(a).map_err(|e| Error::Config(e.to_string()))?)
            }
            [f] if f.eq_ignore_ascii_case("f4") => Ok(AlgebraType::F4),
            [f] if f.eq_ignore_ascii_case("g3") => Ok(AlgebraType::G3),
            _ => Err(Error::Config(format!("unrecognized algebra descriptor {s:?}"))),
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            AlgebraType::Gl { .. } => "gl",
            AlgebraType::Sl { .. } => "sl",
            AlgebraType::Osp { .. } => "osp",
            AlgebraType::DAlpha { .. } => "D_alpha",
            AlgebraType::F4 => "F4",
            AlgebraType::G3 => "G3",
        }
    }

    /// `(m, n)` for the `gl`/`sl` families.
    pub fn gl_dims(&self) -> Option<(usize, usize)> {
        match self {
            AlgebraType::Gl { m, n } | AlgebraType::Sl { m, n } => Some((*m, *n)),
            _ => None,
        }
    }

    pub fn descriptor(&self) -> AlgebraDescriptor {
        let (m, n, alpha) = match self {
            AlgebraType::Gl { m, n } | AlgebraType::Sl { m, n } => (Some(*m), Some(*n), None),
            AlgebraType::Osp { m, n } => (Some(*m), Some(2 * n), None),
            AlgebraType::DAlpha { alpha } => (None, None, Some(rational::fmt_q(alpha))),
            AlgebraType::F4 | AlgebraType::G3 => (None, None, None),
        };
        AlgebraDescriptor {
            family: self.family_name().to_string(),
            m,
            n,
            alpha,
        }
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraType::Gl { m, n } => write!(f, "gl({m}|{n})"),
            AlgebraType::Sl { m, n } => write!(f, "sl({m}|{n})"),
            AlgebraType::Osp { m, n } => write!(f, "osp({m}|{})", 2 * n),
            AlgebraType::DAlpha { alpha } => write!(f, "D(2,1;{alpha})"),
            AlgebraType::F4 => write!(f, "F4"),
            AlgebraType::G3 => write!(f, "G3"),
        }
    }
}

/// Wire form of an algebra: `{"family":"gl","m":2,"n":2}`. For `osp`, `n` is
/// the (even) symplectic dimension `2n`; for `D_alpha`, `alpha` is an exact
/// rational string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDescriptor {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
}

impl AlgebraDescriptor {
    pub fn to_algebra(&self) -> Result<AlgebraType> {
        let need = |v: Option<usize>, what: &str| {
            v.ok_or_else(|| Error::Config(format!("{} descriptor needs {what}", self.family)))
        };
        match self.family.to_ascii_lowercase().as_str() {
            "gl" => AlgebraType::gl(need(self.m, "m")?, need(self.n, "n")?),
            "sl" => AlgebraType::sl(need(self.m, "m")?, need(self.n, "n")?),
            "osp" => AlgebraType::osp(need(self.m, "m")?, need(self.n, "n")?),
            "d_alpha" => {
                let a = self
                    .alpha
                    .as_deref()
                    .ok_or_else(|| Error::Config("D_alpha descriptor needs alpha".into()))?;
                AlgebraType::d_alpha(rational::parse_q(a).map_err(|e| Error::Config(e.to_string()))?)
            }
            "f4" => Ok(AlgebraType::F4),
            "g3" => Ok(AlgebraType::G3),
            other => Err(Error::Config(format!("unknown family {other:?}"))),
        }
    }
}

impl Serialize for AlgebraType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.descriptor().serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        AlgebraDescriptor::deserialize(d)?
            .to_algebra()
            .map_err(serde::de::Error::custom)
    }
}

/// Exact rational coordinate vector in the `epsilon/delta` basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(#[serde(with = "crate::rational::serde_qvec")] pub Vec<Q>);

impl Weight {
    pub fn zero(len: usize) -> Self {
        Weight(vec![Q::zero(); len])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| q(x)).collect())
    }

    /// Parses a JSON-ish array such as `[2,1,-1,"-3/2"]` or `2,1,-1`.
    pub fn parse(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        if body.trim().is_empty() {
            return Ok(Weight(Vec::new()));
        }
        body.split(',')
            .map(|t| rational::parse_q(t.trim().trim_matches('"')))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(rational::is_integer)
    }

    pub fn max_abs(&self) -> Q {
        self.0.iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// A root with integer coordinates. Ordering is lexicographic on the
/// coordinates, which is what canonicalizes isotropic sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub coeffs: Vec<i64>,
    pub parity: Parity,
    pub isotropic: bool,
}

impl Root {
    pub fn to_weight(&self) -> Weight {
        Weight::from_ints(&self.coeffs)
    }

    pub fn neg(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            ..self.clone()
        }
    }
}

/// An element of the Weyl group of `g_0`, stored as its matrix on coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    matrix: Vec<Vec<Q>>,
}

impl WeylElement {
    pub fn identity(dim: usize) -> Self {
        WeylElement {
            matrix: (0..dim)
                .map(|i| (0..dim).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
                .collect(),
        }
    }

    /// Signed permutation: coordinate `i` is sent to `signs[i] * coordinate perm[i]`.
    pub fn signed_permutation(perm: &[usize], signs: &[i64]) -> Self {
        let dim = perm.len();
        let mut matrix = vec![vec![Q::zero(); dim]; dim];
        for (i, (&p, &s)) in perm.iter().zip(signs).enumerate() {
            matrix[p][i] = q(s);
        }
        WeylElement { matrix }
    }

    /// The `gl(m|n)` element permuting the `epsilon` block by `pa` and the
    /// `delta` block by `pb`.
    pub fn from_permutations(pa: &[usize], pb: &[usize]) -> Self {
        let m = pa.len();
        let perm: Vec<usize> = pa.iter().copied().chain(pb.iter().map(|j| j + m)).collect();
        Self::signed_permutation(&perm, &vec![1; perm.len()])
    }

    pub fn reflection(root: &Weight, form: &[Vec<Q>]) -> Self {
        let dim = root.len();
        let norm = pair_with(form, root, root);
        assert!(!norm.is_zero(), "reflection in an isotropic root");
        let mut matrix = vec![vec![Q::zero(); dim]; dim];
        for j in 0..dim {
            let e = unit_weight(dim, j);
            let c = q(2) * pair_with(form, &e, root) / &norm;
            for i in 0..dim {
                matrix[i][j] = e.0[i].clone() - &c * &root.0[i];
            }
        }
        WeylElement { matrix }
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        Weight(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(&w.0).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    pub fn apply_root(&self, r: &Root) -> Root {
        let w = self.apply(&r.to_weight());
        Root {
            coeffs: w
                .0
                .iter()
                .map(|x| rational::to_i64(x).expect("Weyl group preserves the root lattice"))
                .collect(),
            parity: r.parity,
            isotropic: r.isotropic,
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let dim = self.matrix.len();
        let matrix = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| (0..dim).map(|k| &self.matrix[i][k] * &other.matrix[k][j]).sum())
                    .collect()
            })
            .collect();
        WeylElement { matrix }
    }
}

fn unit_weight(dim: usize, i: usize) -> Weight {
    let mut w = Weight::zero(dim);
    w.0[i] = Q::one();
    w
}

fn pair_with(form: &[Vec<Q>], a: &Weight, b: &Weight) -> Q {
    let mut acc = Q::zero();
    for (i, x) in a.0.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.0.iter().enumerate() {
            if !y.is_zero() && !form[i][j].is_zero() {
                acc += x * &form[i][j] * y;
            }
        }
    }
    acc
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub algebra: AlgebraType,
    pub labels: Vec<String>,
    pub form: Vec<Vec<Q>>,
    pub delta0: Vec<Root>,
    pub delta1: Vec<Root>,
    /// Positive roots (even and odd), sorted.
    pub positive: Vec<Root>,
    /// Simple roots in order; populated for `gl`/`sl` (distinguished Borel).
    pub simple: Vec<Root>,
    pub rho: Weight,
    positive_keys: BTreeSet<Vec<i64>>,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.form.len()
    }

    pub fn is_positive(&self, r: &Root) -> bool {
        self.positive_keys.contains(&r.coeffs)
    }

    pub fn roots(&self) -> impl Iterator<Item = &Root> {
        self.delta0.iter().chain(&self.delta1)
    }

    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        self.roots().any(|r| r.coeffs == coeffs)
    }

    pub fn all_odd_isotropic(&self) -> bool {
        self.delta1.iter().all(|r| r.isotropic)
    }

    pub fn isotropic_roots(&self) -> impl Iterator<Item = &Root> {
        self.delta1.iter().filter(|r| r.isotropic)
    }

    pub fn gl_dims(&self) -> Option<(usize, usize)> {
        self.algebra.gl_dims()
    }

    pub fn check_len(&self, w: &Weight) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: w.len(),
            });
        }
        Ok(())
    }

    pub fn pair_roots(&self, a: &Root, b: &Root) -> Q {
        pair_with(&self.form, &a.to_weight(), &b.to_weight())
    }

    pub fn pair_root_weight(&self, a: &Root, w: &Weight) -> Q {
        pair_with(&self.form, &a.to_weight(), w)
    }

    /// `lambda + rho`.
    pub fn shift(&self, lambda: &Weight) -> Weight {
        lambda.add(&self.rho)
    }

    /// Inverse of [`RootSystem::shift`].
    pub fn unshift(&self, shifted: &Weight) -> Weight {
        shifted.sub(&self.rho)
    }

    /// Reflections in all positive even roots; they generate `W`.
    pub fn weyl_generators(&self) -> Vec<WeylElement> {
        self.delta0
            .iter()
            .filter(|r| self.is_positive(r))
            .map(|r| WeylElement::reflection(&r.to_weight(), &self.form))
            .collect()
    }

    pub fn epsilon(&self, i: usize) -> Weight {
        unit_weight(self.rank(), i)
    }

    pub fn delta(&self, j: usize) -> Result<Weight> {
        let (m, _) = self
            .gl_dims()
            .ok_or_else(|| Error::Unsupported("delta(j) indexing is defined for gl/sl".into()))?;
        Ok(unit_weight(self.rank(), m + j))
    }
}

/// Symmetric bilinear value of two weights under the form of `rs`.
pub fn pairing(w1: &Weight, w2: &Weight, rs: &RootSystem) -> Result<Q> {
    rs.check_len(w1)?;
    rs.check_len(w2)?;
    Ok(pair_with(&rs.form, w1, w2))
}

/// Whether `lambda` is integral dominant for `gl`/`sl`: consecutive
/// differences inside each block of `lambda + rho` are positive integers.
pub fn is_dominant(lambda: &Weight, rs: &RootSystem) -> Result<bool> {
    let (m, _) = rs
        .gl_dims()
        .ok_or_else(|| Error::Unsupported(format!("dominance for {} is not implemented", rs.algebra)))?;
    rs.check_len(lambda)?;
    Ok(is_dominant_shifted(&rs.shift(lambda), m))
}

/// Dominance test on `lambda + rho` directly (`a` block of length `m`).
pub fn is_dominant_shifted(shifted: &Weight, m: usize) -> bool {
    let (a, b) = shifted.0.split_at(m);
    let ok = |v: &[Q]| {
        v.windows(2).all(|w| {
            let d = &w[0] - &w[1];
            d.is_integer() && d.is_positive()
        })
    };
    ok(a) && ok(b)
}

fn root(coeffs: Vec<i64>, parity: Parity, form: &[Vec<Q>]) -> Root {
    let w = Weight::from_ints(&coeffs);
    let isotropic = pair_with(form, &w, &w).is_zero();
    Root {
        coeffs,
        parity,
        isotropic,
    }
}

fn diag_form(entries: &[Q]) -> Vec<Vec<Q>> {
    let n = entries.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { entries[i].clone() } else { Q::zero() })
                .collect()
        })
        .collect()
}

fn unit(dim: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = c;
    v
}

fn combo(dim: usize, terms: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; dim];
    for &(i, c) in terms {
        v[i] += c;
    }
    v
}

/// Builds the full root datum of `algebra`.
pub fn build_root_system(algebra: &AlgebraType) -> Result<RootSystem> {
    let (labels, form, even, odd, functional): (Vec<String>, _, Vec<Vec<i64>>, Vec<Vec<i64>>, Vec<i64>) =
        match algebra {
            AlgebraType::Gl { m, n } | AlgebraType::Sl { m, n } => {
                let (m, n) = (*m, *n);
                let dim = m + n;
                let mut labels: Vec<String> = (1..=m).map(|i| format!("e{i}")).collect();
                labels.extend((1..=n).map(|j| format!("d{j}")));
                let mut entries = vec![q(1); m];
                entries.extend(vec![q(-1); n]);
                let mut even = Vec::new();
                for i in 0..m {
                    for k in 0..m {
                        if i != k {
                            even.push(combo(dim, &[(i, 1), (k, -1)]));
                        }
                    }
                }
                for j in 0..n {
                    for k in 0..n {
                        if j != k {
                            even.push(combo(dim, &[(m + j, 1), (m + k, -1)]));
                        }
                    }
                }
                let mut odd = Vec::new();
                for i in 0..m {
                    for j in 0..n {
                        odd.push(combo(dim, &[(i, 1), (m + j, -1)]));
                        odd.push(combo(dim, &[(i, -1), (m + j, 1)]));
                    }
                }
                let functional = (0..dim).map(|i| (dim - i) as i64).collect();
                (labels, diag_form(&entries), even, odd, functional)
            }
            AlgebraType::Osp { m, n } => {
                let (l, n, odd_m) = (m / 2, *n, m % 2 == 1);
                let dim = l + n;
                let mut labels: Vec<String> = (1..=l).map(|i| format!("e{i}")).collect();
                labels.extend((1..=n).map(|j| format!("d{j}")));
                let mut entries = vec![q(1); l];
                entries.extend(vec![q(-1); n]);
                let mut even = Vec::new();
                for i in 0..l {
                    for k in (i + 1)..l {
                        for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            even.push(combo(dim, &[(i, s), (k, t)]));
                        }
                    }
                    if odd_m {
                        even.push(unit(dim, i, 1));
                        even.push(unit(dim, i, -1));
                    }
                }
                for j in 0..n {
                    for k in (j + 1)..n {
                        for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            even.push(combo(dim, &[(l + j, s), (l + k, t)]));
                        }
                    }
                    even.push(unit(dim, l + j, 2));
                    even.push(unit(dim, l + j, -2));
                }
                let mut odd = Vec::new();
                for i in 0..l {
                    for j in 0..n {
                        for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            odd.push(combo(dim, &[(i, s), (l + j, t)]));
                        }
                    }
                }
                if odd_m {
                    for j in 0..n {
                        odd.push(unit(dim, l + j, 1));
                        odd.push(unit(dim, l + j, -1));
                    }
                }
                let functional = (0..dim).map(|i| 3i64.pow((dim - i) as u32)).collect();
                (labels, diag_form(&entries), even, odd, functional)
            }
            AlgebraType::DAlpha { alpha } => {
                let entries = [
                    -(Q::one() + alpha) / q(2),
                    rational::half(),
                    alpha / q(2),
                ];
                let even = (0..3).flat_map(|i| [unit(3, i, 2), unit(3, i, -2)]).collect();
                let mut odd = Vec::new();
                for s in [1, -1] {
                    for t in [1, -1] {
                        for u in [1, -1] {
                            odd.push(vec![s, t, u]);
                        }
                    }
                }
                (
                    vec!["e1".into(), "e2".into(), "e3".into()],
                    diag_form(&entries),
                    even,
                    odd,
                    vec![4, 2, 1],
                )
            }
            AlgebraType::G3 => {
                let form = vec![
                    vec![q(-2), q(1), q(0)],
                    vec![q(1), q(-2), q(0)],
                    vec![q(0), q(0), q(2)],
                ];
                let eps = [vec![1, 0, 0], vec![0, 1, 0], vec![-1, -1, 0]];
                let mut even = Vec::new();
                for e in &eps {
                    even.push(e.clone());
                    even.push(e.iter().map(|c| -c).collect());
                }
                for i in 0..3 {
                    for k in 0..3 {
                        if i != k {
                            even.push((0..3).map(|t| eps[i][t] - eps[k][t]).collect());
                        }
                    }
                }
                even.push(vec![0, 0, 2]);
                even.push(vec![0, 0, -2]);
                let mut odd = vec![vec![0, 0, 1], vec![0, 0, -1]];
                for e in &eps {
                    for s in [1, -1] {
                        for t in [1, -1] {
                            odd.push(vec![s * e[0], s * e[1], t]);
                        }
                    }
                }
                (
                    vec!["e1".into(), "e2".into(), "d".into()],
                    form,
                    even,
                    odd,
                    vec![5, 2, 1],
                )
            }
            AlgebraType::F4 => {
                let mut even = Vec::new();
                for i in 0..3 {
                    for k in (i + 1)..3 {
                        for (s, t) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                            even.push(combo(4, &[(i, s), (k, t)]));
                        }
                    }
                    even.push(unit(4, i, 2));
                    even.push(unit(4, i, -2));
                }
                even.push(unit(4, 3, 2));
                even.push(unit(4, 3, -2));
                let mut odd = Vec::new();
                for bits in 0..16u32 {
                    odd.push((0..4).map(|t| if bits >> t & 1 == 1 { -1 } else { 1 }).collect());
                }
                (
                    vec!["e1".into(), "e2".into(), "e3".into(), "d".into()],
                    diag_form(&[q(1), q(1), q(1), q(-3)]),
                    even,
                    odd,
                    vec![8, 4, 2, 1],
                )
            }
        };

    let delta0: Vec<Root> = even.into_iter().map(|c| root(c, Parity::Even, &form)).collect();
    let delta1: Vec<Root> = odd.into_iter().map(|c| root(c, Parity::Odd, &form)).collect();
    let phi = |r: &Root| -> i64 { r.coeffs.iter().zip(&functional).map(|(a, b)| a * b).sum() };
    if delta0.iter().chain(&delta1).any(|r| phi(r) == 0) {
        return Err(Error::Config(format!("positivity functional degenerate for {algebra}")));
    }
    let mut positive: Vec<Root> = delta0
        .iter()
        .chain(&delta1)
        .filter(|r| phi(r) > 0)
        .cloned()
        .collect();
    positive.sort();
    let dim = form.len();
    let mut rho = Weight::zero(dim);
    for r in &positive {
        let sgn = match r.parity {
            Parity::Even => rational::half(),
            Parity::Odd => -rational::half(),
        };
        rho = rho.add(&r.to_weight().scale(&sgn));
    }
    let simple = match algebra {
        AlgebraType::Gl { m, n } | AlgebraType::Sl { m, n } => {
            let dim = m + n;
            (0..dim - 1)
                .map(|t| {
                    let parity = if t + 1 == *m { Parity::Odd } else { Parity::Even };
                    root(combo(dim, &[(t, 1), (t + 1, -1)]), parity, &form)
                })
                .collect()
        }
        _ => Vec::new(),
    };
    let positive_keys = positive.iter().map(|r| r.coeffs.clone()).collect();
    Ok(RootSystem {
        algebra: algebra.clone(),
        labels,
        form,
        delta0,
        delta1,
        positive,
        simple,
        rho,
        positive_keys,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_frac;

    fn gl(m: usize, n: usize) -> RootSystem {
        build_root_system(&AlgebraType::gl(m, n).unwrap()).unwrap()
    }

    #[test]
    fn gl21_odd_roots() {
        let rs = gl(2, 1);
        let odd: BTreeSet<Vec<i64>> = rs.delta1.iter().map(|r| r.coeffs.clone()).collect();
        let expected: BTreeSet<Vec<i64>> = [
            vec![1, 0, -1],
            vec![-1, 0, 1],
            vec![0, 1, -1],
            vec![0, -1, 1],
        ]
        .into_iter()
        .collect();
        assert_eq!(odd, expected);
        assert!(rs.all_odd_isotropic());
    }

    #[test]
    fn gl11_rho() {
        let rs = gl(1, 1);
        assert_eq!(rs.rho, Weight(vec![q_frac(-1, 2), q_frac(1, 2)]));
    }

    #[test]
    fn gl_simple_roots_are_distinguished() {
        let rs = gl(2, 2);
        let simple: Vec<Vec<i64>> = rs.simple.iter().map(|r| r.coeffs.clone()).collect();
        assert_eq!(simple, vec![vec![1, -1, 0, 0], vec![0, 1, -1, 0], vec![0, 0, 1, -1]]);
        assert_eq!(rs.simple[1].parity, Parity::Odd);
        assert!(rs.simple.iter().all(|r| rs.is_positive(r)));
    }

    #[test]
    fn osp_1_2_has_no_isotropic_roots() {
        let rs = build_root_system(&AlgebraType::osp(1, 2).unwrap()).unwrap();
        assert!(!rs.delta1.is_empty());
        assert!(rs.delta1.iter().all(|r| !r.isotropic));
    }

    #[test]
    fn pairing_examples() {
        let rs = gl(2, 2);
        let e1 = rs.epsilon(0);
        let d1 = rs.delta(0).unwrap();
        assert_eq!(pairing(&e1, &e1, &rs).unwrap(), q(1));
        assert_eq!(pairing(&d1, &d1, &rs).unwrap(), q(-1));
        let a = e1.sub(&d1);
        assert_eq!(pairing(&a, &a, &rs).unwrap(), q(0));
        assert!(pairing(&e1, &Weight::zero(3), &rs).is_err());
    }

    #[test]
    fn dominance_examples() {
        let rs = gl(2, 1);
        let lam = rs.unshift(&Weight::from_ints(&[2, 1, -2]));
        assert!(is_dominant(&lam, &rs).unwrap());
        let lam = rs.unshift(&Weight::from_ints(&[1, 1, -2]));
        assert!(!is_dominant(&lam, &rs).unwrap());
        let rs = gl(1, 1);
        assert!(is_dominant(&Weight::zero(2), &rs).unwrap());
        let osp = build_root_system(&AlgebraType::osp(3, 2).unwrap()).unwrap();
        assert!(matches!(is_dominant(&Weight::zero(2), &osp), Err(Error::Unsupported(_))));
    }

    #[test]
    fn sl_nn_redirects() {
        assert_eq!(AlgebraType::sl(2, 2).unwrap(), AlgebraType::Gl { m: 2, n: 2 });
        assert!(AlgebraType::osp(3, 3).is_err());
        assert!(AlgebraType::gl(0, 2).is_err());
    }

    #[test]
    fn parse_descriptors() {
        assert_eq!(AlgebraType::parse("gl:2:2").unwrap(), AlgebraType::Gl { m: 2, n: 2 });
        assert_eq!(AlgebraType::parse("osp:5:4").unwrap(), AlgebraType::Osp { m: 5, n: 2 });
        assert_eq!(AlgebraType::parse("F4").unwrap(), AlgebraType::F4);
        let json = serde_json::to_string(&AlgebraType::gl(2, 2).unwrap()).unwrap();
        assert_eq!(json, r#"{"family":"gl","m":2,"n":2}"#);
        let back: AlgebraType = serde_json::from_str(r#"{"family":"osp","m":4,"n":4}"#).unwrap();
        assert_eq!(back, AlgebraType::Osp { m: 4, n: 2 });
        let w = Weight::parse(r#"[2,"3/2",-1]"#).unwrap();
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"["2","3/2","-1"]"#);
    }

    #[test]
    fn exceptional_odd_roots_isotropic_where_expected() {
        for alg in [
            AlgebraType::F4,
            AlgebraType::d_alpha(q_frac(1, 2)).unwrap(),
        ] {
            let rs = build_root_system(&alg).unwrap();
            assert!(rs.all_odd_isotropic(), "{alg}");
        }
        let g3 = build_root_system(&AlgebraType::G3).unwrap();
        assert_eq!(g3.delta1.iter().filter(|r| r.isotropic).count(), 12);
        assert_eq!(g3.delta1.len(), 14);
        assert_eq!(g3.delta0.len(), 14);
    }

    #[test]
    fn weyl_reflections_preserve_roots() {
        for alg in [
            AlgebraType::gl(2, 2).unwrap(),
            AlgebraType::osp(5, 4).unwrap(),
            AlgebraType::G3,
            AlgebraType::F4,
        ] {
            let rs = build_root_system(&alg).unwrap();
            for w in rs.weyl_generators() {
                for r in rs.roots() {
                    let img = w.apply_root(r);
                    assert!(rs.is_root(&img.coeffs), "{alg}: {r:?}");
                }
            }
        }
    }
}
