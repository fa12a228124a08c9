//! Reduction of an atypical dominant `gl(m|n)` weight to a stable one by
//! translation functors with the standard module `E` or its dual, together
//! with certificates for the combinatorial hypotheses those functors need.

use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::atypicality::{atypicality_degree, is_stable, same_central_character, stability_subalgebra};
use crate::error::{Error, Result};
use crate::rational::{self, Q};
use crate::rootdata::{is_dominant, is_dominant_shifted, Root, RootSystem, Weight};

/// `±eps_i` or `±delta_j` (indices 0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shift {
    pub delta: bool,
    pub index: usize,
    pub sign: i8,
}

impl Shift {
    pub fn weight(&self, rs: &RootSystem) -> Weight {
        let (m, _) = rs.gl_dims().expect("gl root system");
        let mut w = Weight::zero(rs.rank());
        let pos = if self.delta { m + self.index } else { self.index };
        w.0[pos] = rational::q(self.sign as i64);
        w
    }

    /// Recovers a shift from `to - from`, which must be a signed unit vector.
    pub fn from_difference(diff: &Weight, m: usize) -> Option<Shift> {
        let nz: Vec<usize> = (0..diff.len()).filter(|&i| !diff.0[i].is_zero()).collect();
        if nz.len() != 1 {
            return None;
        }
        let i = nz[0];
        let sign = if diff.0[i] == rational::q(1) {
            1
        } else if diff.0[i] == rational::q(-1) {
            -1
        } else {
            return None;
        };
        Some(if i < m {
            Shift { delta: false, index: i, sign }
        } else {
            Shift { delta: true, index: i - m, sign }
        })
    }
}

impl fmt::Display for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign > 0 { '+' } else { '-' };
        let l = if self.delta { 'd' } else { 'e' };
        write!(f, "{s}{l}{}", self.index + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub from: Weight,
    pub to: Weight,
    pub shift: Shift,
    pub case: u8,
    /// Translation by `E*` (negative shifts) rather than `E`.
    pub e_is_dual: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub start: Weight,
    pub steps: Vec<ReductionStep>,
    #[serde(rename = "final")]
    pub final_weight: Weight,
    pub atypicality: usize,
    pub target_subalgebra: Vec<Root>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StepOutcome {
    Stable,
    Step(ReductionStep),
}

fn require_gl(rs: &RootSystem) -> Result<(usize, usize)> {
    rs.gl_dims()
        .ok_or_else(|| Error::Unsupported(format!("reduction is defined for gl only, got {}", rs.algebra)))
}

fn require_integral_dominant(lambda: &Weight, rs: &RootSystem) -> Result<()> {
    let (m, _) = require_gl(rs)?;
    rs.check_len(lambda)?;
    let s = rs.shift(lambda);
    let integral = s.0[..m]
        .iter()
        .all(|a| s.0[m..].iter().all(|b| rational::is_integer(&(a + b))));
    if !integral || !is_dominant(lambda, rs)? {
        return Err(Error::InvalidInput(format!(
            "lambda + rho = {s} is not integral dominant"
        )));
    }
    Ok(())
}

/// One step of the reduction, or [`StepOutcome::Stable`] when every atypical
/// pairing `a_i + b_j = 0` already has `i > m - k`.
pub fn reduce_step(lambda: &Weight, rs: &RootSystem) -> Result<StepOutcome> {
    require_integral_dominant(lambda, rs)?;
    let (m, n) = require_gl(rs)?;
    let k = atypicality_degree(lambda, rs)?;
    let s = rs.shift(lambda);
    let (a, b) = s.0.split_at(m);
    let typical = |i: usize| b.iter().all(|bj| !(&a[i] + bj).is_zero());

    let g = (0..m).take_while(|&i| typical(i)).count();
    if g == m - k {
        return Ok(StepOutcome::Stable);
    }
    // 0-based: a[g] is atypical, so the first typical index after it is > g.
    let i = (g + 1..m)
        .find(|&i| typical(i))
        .ok_or_else(|| Error::Invariant(format!("no typical index after g = {g} for {s}")))?;
    let target = -&a[i] - rational::q(1);
    let shift_case = match (0..n).find(|&j| b[j] == target) {
        None => (Shift { delta: false, index: i, sign: 1 }, 1),
        Some(j) if a[i - 1] == &a[i] + rational::q(1) => (Shift { delta: true, index: j, sign: 1 }, 2),
        Some(j) => {
            let mut p = 0;
            while j + p + 1 < n && b[j + p + 1] == &b[j] - rational::q((p + 1) as i64) {
                p += 1;
            }
            if (&a[i - 1] + &b[j + p]).is_positive() {
                (Shift { delta: true, index: j + p, sign: -1 }, 3)
            } else {
                if !(0..=p).any(|t| (&a[i - 1] + &b[j + t]).is_zero()) {
                    return Err(Error::Invariant(format!("uncovered configuration at {s}")));
                }
                (Shift { delta: false, index: i - 1, sign: -1 }, 4)
            }
        }
    };
    let (shift, case) = shift_case;
    let to = lambda.add(&shift.weight(rs));
    if !is_dominant_shifted(&rs.shift(&to), m) {
        return Err(Error::Invariant(format!("case {case} left the dominant chamber at {s}")));
    }
    Ok(StepOutcome::Step(ReductionStep {
        from: lambda.clone(),
        to,
        e_is_dual: shift.sign < 0,
        shift,
        case,
    }))
}

/// `10 (m + n) max(1, max |coord of lambda + rho|)`.
pub fn step_budget(lambda: &Weight, rs: &RootSystem) -> usize {
    let c = rs.shift(lambda).max_abs().ceil().to_integer().to_usize().unwrap_or(usize::MAX / 64);
    10 * rs.rank() * c.max(1)
}

/// Iterates [`reduce_step`] until the weight is stable.
pub fn reduce(lambda: &Weight, rs: &RootSystem) -> Result<ReductionTrace> {
    require_integral_dominant(lambda, rs)?;
    let k = atypicality_degree(lambda, rs)?;
    let budget = step_budget(lambda, rs);
    let mut steps = Vec::new();
    let mut cur = lambda.clone();
    loop {
        match reduce_step(&cur, rs)? {
            StepOutcome::Stable => break,
            StepOutcome::Step(step) => {
                if steps.len() == budget {
                    let partial = steps
                        .iter()
                        .map(|s: &ReductionStep| rs.shift(&s.to).to_string())
                        .collect::<Vec<_>>()
                        .join(" -> ");
                    return Err(Error::StepBudget {
                        budget,
                        taken: steps.len(),
                        partial,
                    });
                }
                cur = step.to.clone();
                steps.push(step);
            }
        }
    }
    Ok(ReductionTrace {
        start: lambda.clone(),
        steps,
        final_weight: cur,
        atypicality: k,
        target_subalgebra: stability_subalgebra(k, rs)?,
    })
}

/// One candidate `lambda + nu` (or `mu - nu`) inspected by the certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateCheck {
    pub nu: Weight,
    pub weight: Weight,
    pub dominant: bool,
    pub same_central_character: bool,
}

impl CandidateCheck {
    pub fn in_block(&self) -> bool {
        self.dominant && self.same_central_character
    }
}

/// Audit of the hypotheses under which translation by `E` sends `L_lambda` to
/// `L_mu` and translation by `E*` sends it back.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslationCertificate {
    pub e_is_dual: bool,
    /// `lambda + P(E)`, checked against the block of `mu`.
    pub forward: Vec<CandidateCheck>,
    /// `mu - P(E)`, checked against the block of `lambda`.
    pub backward: Vec<CandidateCheck>,
    /// `(lambda + P(E)) ∩ Sigma_mu = {mu}`.
    pub forward_unique: bool,
    /// `(mu - P(E)) ∩ Sigma_lambda = {lambda}`.
    pub backward_unique: bool,
    /// No element of `(mu - P(E)) ∩ h_lambda` lies strictly below `lambda`.
    pub lambda_minimal: bool,
    /// Elements of `(mu - P(E)) ∩ h_lambda` incomparable with `lambda`.
    pub ties: Vec<Weight>,
}

impl TranslationCertificate {
    pub fn passes(&self) -> bool {
        self.forward_unique && self.backward_unique && self.lambda_minimal
    }
}

/// `x <= y` in the dominance order: `y - x` is a non-negative integer
/// combination of positive roots. For `gl` with the distinguished Borel this
/// means the partial sums of `y - x` (in the order `eps_1.., delta_1..`) are
/// non-negative integers and the total is zero.
pub fn dominance_leq(x: &Weight, y: &Weight) -> bool {
    let d = y.sub(x);
    let mut acc = Q::zero();
    for c in &d.0 {
        acc += c;
        if !rational::is_integer(&acc) || acc.is_negative() {
            return false;
        }
    }
    acc.is_zero()
}

/// Checks the three conditions for a step `lambda -> mu` with `E` the
/// standard module (positive shift) or its dual (negative shift).
pub fn check_translation_conditions(step: &ReductionStep, rs: &RootSystem) -> Result<TranslationCertificate> {
    let (m, n) = require_gl(rs)?;
    rs.check_len(&step.from)?;
    rs.check_len(&step.to)?;
    let diff = step.to.sub(&step.from);
    let shift = Shift::from_difference(&diff, m)
        .ok_or_else(|| Error::InvalidInput(format!("step shift {diff} is not a signed unit vector")))?;
    if shift != step.shift || step.e_is_dual != (shift.sign < 0) {
        return Err(Error::InvalidInput(format!(
            "recorded shift {} disagrees with to - from = {shift}",
            step.shift
        )));
    }
    let sign = shift.sign;
    let lambda = &step.from;
    let mu = &step.to;
    let p_e: Vec<Weight> = (0..m + n)
        .map(|i| {
            let mut w = Weight::zero(m + n);
            w.0[i] = rational::q(sign as i64);
            w
        })
        .collect();

    let check = |w: Weight, nu: &Weight, block_of: &Weight| -> Result<CandidateCheck> {
        let integral = {
            let s = rs.shift(&w);
            s.0[..m].iter().all(|a| s.0[m..].iter().all(|b| rational::is_integer(&(a + b))))
        };
        Ok(CandidateCheck {
            nu: nu.clone(),
            dominant: is_dominant(&w, rs)?,
            same_central_character: integral && same_central_character(block_of, &w, rs)?,
            weight: w,
        })
    };

    let forward = p_e
        .iter()
        .map(|nu| check(lambda.add(nu), nu, mu))
        .collect::<Result<Vec<_>>>()?;
    let backward = p_e
        .iter()
        .map(|nu| check(mu.sub(nu), nu, lambda))
        .collect::<Result<Vec<_>>>()?;

    let hits = |v: &[CandidateCheck]| -> Vec<Weight> {
        v.iter().filter(|c| c.in_block()).map(|c| c.weight.clone()).collect()
    };
    let forward_unique = hits(&forward) == vec![mu.clone()];
    let backward_unique = hits(&backward) == vec![lambda.clone()];

    let mut lambda_minimal = true;
    let mut ties = Vec::new();
    let lambda_is_candidate = backward.iter().any(|c| &c.weight == lambda);
    for c in backward.iter().filter(|c| c.same_central_character && &c.weight != lambda) {
        if dominance_leq(&c.weight, lambda) {
            lambda_minimal = false;
        } else if !dominance_leq(lambda, &c.weight) {
            ties.push(c.weight.clone());
        }
    }
    Ok(TranslationCertificate {
        e_is_dual: sign < 0,
        forward,
        backward,
        forward_unique,
        backward_unique,
        lambda_minimal: lambda_minimal && lambda_is_candidate,
        ties,
    })
}

/// Convenience: the final weight of a trace is stable for its target subalgebra.
pub fn trace_is_stable(trace: &ReductionTrace, rs: &RootSystem) -> Result<bool> {
    is_stable(&trace.final_weight, &trace.target_subalgebra, rs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_system, AlgebraType};

    fn gl(m: usize, n: usize) -> RootSystem {
        build_root_system(&AlgebraType::gl(m, n).unwrap()).unwrap()
    }

    fn lam(rs: &RootSystem, shifted: &[i64]) -> Weight {
        rs.unshift(&Weight::from_ints(shifted))
    }

    fn step(outcome: StepOutcome) -> ReductionStep {
        match outcome {
            StepOutcome::Step(s) => s,
            StepOutcome::Stable => panic!("expected a step"),
        }
    }

    #[test]
    fn case_two_example() {
        let r = gl(2, 1);
        let s = step(reduce_step(&lam(&r, &[2, 1, -2]), &r).unwrap());
        assert_eq!(s.case, 2);
        assert_eq!(r.shift(&s.to), Weight::from_ints(&[2, 1, -1]));
        assert!(!s.e_is_dual);
        let cert = check_translation_conditions(&s, &r).unwrap();
        assert!(cert.forward_unique && cert.backward_unique);
        // mu - eps_1 has shifted coordinates (1,1|-1): same block as lambda and
        // lambda - (eps_1 - delta_1), so lambda is not minimal.
        let below = r.unshift(&Weight::from_ints(&[1, 1, -1]));
        assert!(same_central_character(&s.from, &below, &r).unwrap());
        assert!(dominance_leq(&below, &s.from));
        assert!(!cert.lambda_minimal);
    }

    #[test]
    fn stable_example() {
        let r = gl(2, 1);
        assert_eq!(reduce_step(&lam(&r, &[2, 1, -1]), &r).unwrap(), StepOutcome::Stable);
        // typical: k = 0 and g = m
        assert_eq!(reduce_step(&lam(&r, &[3, 1, -2]), &r).unwrap(), StepOutcome::Stable);
    }

    #[test]
    fn case_three_and_four() {
        let r = gl(2, 2);
        let s = step(reduce_step(&lam(&r, &[4, 1, -2, -4]), &r).unwrap());
        assert_eq!(s.case, 3);
        assert_eq!(r.shift(&s.to), Weight::from_ints(&[4, 1, -3, -4]));
        assert!(s.e_is_dual);
        assert!(check_translation_conditions(&s, &r).unwrap().passes());

        let s = step(reduce_step(&lam(&r, &[3, 1, -2, -3]), &r).unwrap());
        assert_eq!(s.case, 4);
        assert_eq!(r.shift(&s.to), Weight::from_ints(&[2, 1, -2, -3]));
        let cert = check_translation_conditions(&s, &r).unwrap();
        assert!(cert.forward_unique && cert.backward_unique);
    }

    #[test]
    fn case_one() {
        let r = gl(2, 1);
        // a = (0, -2), b = (0): a_1 atypical, a_2 typical, no b_j = 1
        let s = step(reduce_step(&lam(&r, &[0, -2, 0]), &r).unwrap());
        assert_eq!(s.case, 1);
        assert_eq!(r.shift(&s.to), Weight::from_ints(&[0, -1, 0]));
    }

    #[test]
    fn reduce_trace() {
        let r = gl(2, 1);
        let t = reduce(&lam(&r, &[2, 1, -2]), &r).unwrap();
        assert_eq!(t.steps.len(), 1);
        assert_eq!(r.shift(&t.final_weight), Weight::from_ints(&[2, 1, -1]));
        assert_eq!(t.target_subalgebra.len(), 1);
        assert_eq!(t.target_subalgebra[0].coeffs, vec![0, 1, -1]);
        assert!(trace_is_stable(&t, &r).unwrap());
        let t = reduce(&lam(&r, &[2, 1, -1]), &r).unwrap();
        assert!(t.steps.is_empty());
    }

    #[test]
    fn corrupted_and_malformed_steps() {
        let r = gl(2, 1);
        let good = step(reduce_step(&lam(&r, &[2, 1, -2]), &r).unwrap());
        let mut bad = good.clone();
        bad.shift = Shift { delta: false, index: 1, sign: 1 };
        bad.to = good.from.add(&bad.shift.weight(&r));
        let cert = check_translation_conditions(&bad, &r).unwrap();
        assert!(!cert.forward_unique);
        assert!(!cert.passes());

        let mut ident = good.clone();
        ident.to = ident.from.clone();
        assert!(matches!(check_translation_conditions(&ident, &r), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn rejects_non_dominant() {
        let r = gl(2, 1);
        assert!(matches!(reduce_step(&lam(&r, &[1, 1, -2]), &r), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn dominance_order() {
        let x = Weight::from_ints(&[1, 0, 0]);
        let y = Weight::from_ints(&[0, 1, 0]);
        assert!(dominance_leq(&y, &x));
        assert!(!dominance_leq(&x, &y));
        assert!(dominance_leq(&x, &x));
    }
}
