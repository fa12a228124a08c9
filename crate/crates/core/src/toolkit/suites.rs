use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{curated_gl22, dominant_grid, CheckResult, RunConfig, Suite};
use crate::atypicality::{atypicality_degree, degree_by_search};
use crate::error::Result;
use crate::glmodel::{
    build_algebra, build_irreducible, build_kac_module, direct_sum, dual, is_irreducible, orbit_representative,
    tensor, SuperModule,
};
use crate::isotropic::{self, all_labels, count_orbits, representative_set, weyl_orbits_on, OrbitLabel};
use crate::reduction::{check_translation_conditions, reduce, trace_is_stable};
use crate::rootdata::{build_root_system, AlgebraType, RootSystem, Weight};
use crate::variety::{
    associated_variety, centralizer_quotient, proportional, restriction_law, supercharacter_order,
    variety_codimension, Polynomial,
};

pub(super) fn run(suite: Suite, config: &RunConfig) -> Result<Vec<CheckResult>> {
    match suite {
        Suite::Orbits => orbits(config),
        Suite::Dimensions => dimensions(config),
        Suite::Centralizer => centralizer(config),
        Suite::Varieties => varieties(config),
        Suite::Supercharacter => supercharacter(config),
        Suite::Reduction => reduction(config),
        Suite::FiberLaws => fiber_laws(config),
    }
}

fn gl(m: usize, n: usize) -> AlgebraType {
    AlgebraType::Gl { m, n }
}

fn algebras(config: &RunConfig, default: Vec<AlgebraType>) -> Vec<AlgebraType> {
    match &config.algebra {
        Some(a) => vec![a.clone()],
        None => default,
    }
}

fn gl_algebras(config: &RunConfig, default: Vec<AlgebraType>) -> Result<Vec<(usize, usize)>> {
    algebras(config, default)
        .into_iter()
        .map(|a| {
            a.gl_dims()
                .ok_or_else(|| crate::error::Error::Config(format!("suite needs a gl algebra, got {a}")))
        })
        .collect()
}

/// `(algebra, lambda + rho)` items: the configured weight, the configured grid,
/// or the default grids (gl(1|1), gl(2|1) at bound 3 and the curated gl(2|2) list).
fn weight_items(config: &RunConfig) -> Result<Vec<((usize, usize), Weight)>> {
    if let (Some(w), Some(a)) = (&config.weight, &config.algebra) {
        let dims = a.gl_dims().expect("validated");
        return Ok(vec![(dims, w.clone())]);
    }
    if config.algebra.is_some() {
        let (m, n) = gl_algebras(config, vec![])?[0];
        let b = config.bound.unwrap_or(if m * n <= 2 { 3 } else { 1 });
        return Ok(dominant_grid(m, n, b).into_iter().map(|w| ((m, n), w)).collect());
    }
    let b = config.bound.unwrap_or(3);
    let mut out: Vec<_> = dominant_grid(1, 1, b).into_iter().map(|w| ((1, 1), w)).collect();
    out.extend(dominant_grid(2, 1, b).into_iter().map(|w| ((2, 1), w)));
    out.extend(curated_gl22().into_iter().map(|w| ((2, 2), w)));
    Ok(out)
}

fn fail_item(suite: Suite, item: String, e: crate::error::Error) -> Vec<CheckResult> {
    vec![CheckResult::new(suite, item, "computed", false, format!("error: {e}"))]
}

fn root_system(m: usize, n: usize) -> Result<RootSystem> {
    build_root_system(&AlgebraType::gl(m, n)?)
}

// ------------------------------------------------------------------ orbits

fn orbits(config: &RunConfig) -> Result<Vec<CheckResult>> {
    let mut default: Vec<AlgebraType> = Vec::new();
    for m in 1..=4 {
        for n in 1..=4 {
            default.push(gl(m, n));
        }
    }
    default.push(AlgebraType::osp(3, 2)?);
    default.push(AlgebraType::osp(5, 4)?);
    default.push(AlgebraType::osp(4, 4)?);
    let algs = algebras(config, default);
    let items: Vec<Vec<CheckResult>> = algs
        .par_iter()
        .map(|a| {
            let item = a.to_string();
            let rs = match build_root_system(a) {
                Ok(rs) => rs,
                Err(e) => return fail_item(Suite::Orbits, item, e),
            };
            let counted = count_orbits(&rs);
            // enumeration oracle: W-orbits on each S_k, grouped by label
            let mut by_search = 0;
            for k in 0.. {
                let o = weyl_orbits_on(&rs, k);
                if o.is_empty() {
                    break;
                }
                by_search += o.len();
            }
            let mut out = vec![CheckResult::new(
                Suite::Orbits,
                item.clone(),
                "count-vs-enumeration",
                counted == by_search,
                format!("count {counted}, W-orbits on S {by_search}"),
            )];
            if let Some((m, n)) = a.gl_dims() {
                let d = m.min(n);
                let expected = (d + 1) * (d + 2) / 2;
                out.push(CheckResult::new(
                    Suite::Orbits,
                    item,
                    "count-vs-formula",
                    counted == expected,
                    format!("count {counted}, #(p,q) with p+q<={d} is {expected}"),
                ));
            }
            out
        })
        .collect();
    Ok(items.into_iter().flatten().collect())
}

// ------------------------------------------------------------------ dimensions

fn labels_for(m: usize, n: usize) -> Result<(RootSystem, Vec<OrbitLabel>)> {
    let rs = root_system(m, n)?;
    let labels = all_labels(&rs);
    Ok((rs, labels))
}

fn dimensions(config: &RunConfig) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for (m, n) in gl_algebras(config, vec![gl(2, 2), gl(3, 2)])? {
        let (rs, labels) = labels_for(m, n)?;
        let model = build_algebra(m, n)?;
        let res: Vec<CheckResult> = labels
            .par_iter()
            .map(|l| {
                let item = format!("gl({m}|{n}) {l}");
                let run = || -> Result<CheckResult> {
                    let dim = isotropic::orbit_dimension(&representative_set(l, &rs)?, &rs);
                    let x = orbit_representative(l, &model)?;
                    let r = model.ad(&x.element).rank();
                    Ok(CheckResult::new(
                        Suite::Dimensions,
                        item.clone(),
                        "orbit-dimension",
                        2 * dim == r,
                        format!("dimension {dim}, rank ad x {r}"),
                    ))
                };
                run().unwrap_or_else(|e| fail_item(Suite::Dimensions, item.clone(), e).remove(0))
            })
            .collect();
        out.extend(res);
    }
    Ok(out)
}

// ------------------------------------------------------------------ centralizer

fn centralizer(config: &RunConfig) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for (m, n) in gl_algebras(config, vec![gl(2, 2), gl(3, 2)])? {
        let (_, labels) = labels_for(m, n)?;
        let model = build_algebra(m, n)?;
        let res: Vec<Vec<CheckResult>> = labels
            .par_iter()
            .map(|l| {
                let item = format!("gl({m}|{n}) {l}");
                let c = match orbit_representative(l, &model).and_then(|x| centralizer_quotient(&x, &model)) {
                    Ok(c) => c,
                    Err(e) => return fail_item(Suite::Centralizer, item, e),
                };
                let k = c.rank;
                vec![
                    CheckResult::new(Suite::Centralizer, item.clone(), "image-is-ideal", c.image_is_ideal, ""),
                    CheckResult::new(
                        Suite::Centralizer,
                        item.clone(),
                        "image-sdim-zero",
                        c.sdim_image == 0,
                        format!("sdim [x,g] = {}", c.sdim_image),
                    ),
                    CheckResult::new(
                        Suite::Centralizer,
                        item,
                        "quotient-dimension",
                        c.dim_g_x == (m + n - 2 * k).pow(2) && c.dim_g_x_even == (m - k).pow(2) + (n - k).pow(2),
                        format!(
                            "dim g_x = {} ({}|{}), expected {}",
                            c.dim_g_x, c.dim_g_x_even, c.dim_g_x_odd, c.expected_g_x
                        ),
                    ),
                ]
            })
            .collect();
        out.extend(res.into_iter().flatten());
    }
    Ok(out)
}

// ------------------------------------------------------------------ varieties

fn irreducible_for(m: usize, n: usize, shifted: &Weight, config: &RunConfig) -> Result<(RootSystem, Weight, SuperModule)> {
    let rs = root_system(m, n)?;
    let lambda = rs.unshift(shifted);
    let module = match &config.cache_dir {
        Some(dir) => super::ModuleCache::new(dir)?.get_or_build(super::ModuleKind::Irreducible, m, n, &lambda)?,
        None => build_irreducible(&lambda, &build_algebra(m, n)?)?,
    };
    Ok((rs, lambda, module))
}

fn varieties(config: &RunConfig) -> Result<Vec<CheckResult>> {
    let items = weight_items(config)?;
    let res: Vec<Vec<CheckResult>> = items
        .par_iter()
        .map(|((m, n), s)| {
            let item = format!("gl({m}|{n}) lambda+rho={s}");
            let run = || -> Result<Vec<CheckResult>> {
                let (rs, lambda, l) = irreducible_for(*m, *n, s, config)?;
                let k = degree_by_search(s, &rs);
                let v = associated_variety(&l)?;
                let defect = m.min(n);
                let max = v.max_rank().unwrap_or(0);
                let mut out = vec![
                    CheckResult::new(
                        Suite::Varieties,
                        item.clone(),
                        "rank-bound",
                        max <= k,
                        format!("max rank {max}, k {k}"),
                    ),
                    CheckResult::new(
                        Suite::Varieties,
                        item.clone(),
                        "variety-equality",
                        v.closure_rank == Some(k),
                        format!(
                            "X = {{{}}}",
                            v.nonzero_orbits.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(",")
                        ),
                    ),
                    CheckResult::new(Suite::Varieties, item.clone(), "downward-closed", v.downward_closed, ""),
                    CheckResult::new(
                        Suite::Varieties,
                        item.clone(),
                        "atypicality-matching",
                        atypicality_degree(&lambda, &rs)? == k,
                        "",
                    ),
                ];
                if k < *defect {
                    out.push(CheckResult::new(
                        Suite::Varieties,
                        item.clone(),
                        "sdim-vanishing",
                        l.sdim() == 0,
                        format!("sdim {}", l.sdim()),
                    ));
                }
                if l.dim() <= 64 {
                    out.push(CheckResult::new(
                        Suite::Varieties,
                        item.clone(),
                        "irreducible",
                        is_irreducible(&l),
                        format!("dim {}", l.dim()),
                    ));
                }
                Ok(out)
            };
            run().unwrap_or_else(|e| fail_item(Suite::Varieties, item.clone(), e))
        })
        .collect();
    Ok(res.into_iter().flatten().collect())
}

// ------------------------------------------------------------------ supercharacter

fn supercharacter(config: &RunConfig) -> Result<Vec<CheckResult>> {
    let items = weight_items(config)?;
    type Leading = Option<((usize, usize), usize, Weight, Polynomial)>;
    let res: Vec<(Vec<CheckResult>, Leading)> = items
        .par_iter()
        .map(|((m, n), s)| {
            let item = format!("gl({m}|{n}) lambda+rho={s}");
            let run = || -> Result<(Vec<CheckResult>, Leading)> {
                let (rs, _, l) = irreducible_for(*m, *n, s, config)?;
                let k = degree_by_search(s, &rs);
                let v = associated_variety(&l)?;
                let codim = variety_codimension(&v, &rs)?.unwrap_or(0).max(0) as usize;
                let ch = supercharacter_order(&l, codim)?;
                let mut out = vec![CheckResult::new(
                    Suite::Supercharacter,
                    item.clone(),
                    "order-bound",
                    ch.holds,
                    format!("order {:?}, codim {codim}", ch.order),
                )];
                if k < *m.min(n) {
                    let r = restriction_law(&l, k + 1)?;
                    out.push(CheckResult::new(
                        Suite::Supercharacter,
                        item.clone(),
                        "restriction-law",
                        r.holds(),
                        format!("{} sets of size {}, {} failures", r.sets_checked, k + 1, r.failures.len()),
                    ));
                }
                let lead = ch.leading.map(|p| ((*m, *n), k, s.clone(), p));
                Ok((out, lead))
            };
            run().unwrap_or_else(|e| (fail_item(Suite::Supercharacter, item.clone(), e), None))
        })
        .collect();
    let mut out = Vec::new();
    let mut groups: BTreeMap<((usize, usize), usize), Vec<(Weight, Polynomial)>> = BTreeMap::new();
    for (checks, lead) in res {
        out.extend(checks);
        if let Some((alg, k, w, p)) = lead {
            groups.entry((alg, k)).or_default().push((w, p));
        }
    }
    // leading polynomials of irreducibles sharing (algebra, k) with 0 < k < defect
    for (((m, n), k), list) in groups {
        if k == 0 || k >= m.min(n) {
            continue;
        }
        for pair in list.windows(2) {
            out.push(CheckResult::new(
                Suite::Supercharacter,
                format!("gl({m}|{n}) k={k} {} vs {}", pair[0].0, pair[1].0),
                "leading-proportional",
                proportional(&pair[0].1, &pair[1].1),
                "",
            ));
        }
    }
    Ok(out)
}

// ------------------------------------------------------------------ reduction

fn reduction(config: &RunConfig) -> Result<Vec<CheckResult>> {
    let items: Vec<((usize, usize), Weight)> = match (&config.weight, &config.algebra) {
        (Some(w), Some(a)) => vec![(a.gl_dims().expect("validated"), w.clone())],
        _ => {
            let b = config.bound.unwrap_or(4);
            gl_algebras(config, vec![gl(2, 2), gl(3, 2)])?
                .into_iter()
                .flat_map(|(m, n)| dominant_grid(m, n, b).into_iter().map(move |w| ((m, n), w)))
                .collect()
        }
    };
    let res: Vec<Vec<CheckResult>> = items
        .par_iter()
        .map(|((m, n), s)| {
            let item = format!("gl({m}|{n}) lambda+rho={s}");
            let run = || -> Result<Vec<CheckResult>> {
                let rs = root_system(*m, *n)?;
                let lambda = rs.unshift(s);
                let trace = reduce(&lambda, &rs)?;
                let mut unique = true;
                let mut minimal = true;
                let mut preserved = true;
                let mut bad_min = Vec::new();
                for step in &trace.steps {
                    let c = check_translation_conditions(step, &rs)?;
                    unique &= c.forward_unique && c.backward_unique;
                    if !c.lambda_minimal {
                        minimal = false;
                        bad_min.push(format!("case {} {}", step.case, rs.shift(&step.from)));
                    }
                    preserved &= atypicality_degree(&step.to, &rs)? == trace.atypicality;
                }
                let steps = trace.steps.len();
                Ok(vec![
                    CheckResult::new(Suite::Reduction, item.clone(), "terminates", true, format!("{steps} steps")),
                    CheckResult::new(Suite::Reduction, item.clone(), "certificate-uniqueness", unique, ""),
                    CheckResult::new(
                        Suite::Reduction,
                        item.clone(),
                        "certificate-minimality",
                        minimal,
                        bad_min.first().cloned().unwrap_or_default(),
                    ),
                    CheckResult::new(Suite::Reduction, item.clone(), "atypicality-preserved", preserved, ""),
                    CheckResult::new(
                        Suite::Reduction,
                        item.clone(),
                        "final-stable",
                        trace_is_stable(&trace, &rs)?,
                        format!("final lambda+rho = {}", rs.shift(&trace.final_weight)),
                    ),
                ])
            };
            run().unwrap_or_else(|e| fail_item(Suite::Reduction, item.clone(), e))
        })
        .collect();
    Ok(res.into_iter().flatten().collect())
}

// ------------------------------------------------------------------ fiber laws

/// Random `L_lambda` or `K_lambda` over gl(1|1) or gl(2|1), `lambda + rho` in `[-2, 2]`.
pub(crate) fn random_module(rng: &mut ChaCha8Rng, dims: (usize, usize)) -> Result<(String, SuperModule)> {
    let (m, n) = dims;
    let rs = root_system(m, n)?;
    let grid = dominant_grid(m, n, 2);
    let s = grid.choose(rng).expect("nonempty grid").clone();
    let lambda = rs.unshift(&s);
    let model = build_algebra(m, n)?;
    if rng.gen_bool(0.5) {
        Ok((format!("L{s}"), build_irreducible(&lambda, &model)?))
    } else {
        Ok((format!("K{s}"), build_kac_module(&lambda, &model)?.module))
    }
}

fn fiber_laws(config: &RunConfig) -> Result<Vec<CheckResult>> {
    let dims = gl_algebras(config, vec![gl(1, 1), gl(2, 1)])?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut pairs = Vec::new();
    for i in 0..config.pairs {
        let d = dims[i % dims.len()];
        let (na, a) = random_module(&mut rng, d)?;
        let (nb, b) = random_module(&mut rng, d)?;
        pairs.push((format!("seed {} pair {i} gl({}|{}) {na} {nb}", config.seed, d.0, d.1), a, b));
    }
    let res: Vec<Vec<CheckResult>> = pairs
        .par_iter()
        .map(|(item, a, b)| {
            let run = || -> Result<Vec<CheckResult>> {
                let va = associated_variety(a)?;
                let vb = associated_variety(b)?;
                let vsum = associated_variety(&direct_sum(a, b)?)?;
                let vten = associated_variety(&tensor(a, b)?)?;
                let vdual = associated_variety(&dual(a))?;
                let union: std::collections::BTreeSet<_> = va.nonzero_orbits.union(&vb.nonzero_orbits).cloned().collect();
                let inter: std::collections::BTreeSet<_> =
                    va.nonzero_orbits.intersection(&vb.nonzero_orbits).cloned().collect();
                let sdim_ok = va.fibers.iter().all(|f| f.sdim_fiber == a.sdim())
                    && vb.fibers.iter().all(|f| f.sdim_fiber == b.sdim());
                Ok(vec![
                    CheckResult::new(Suite::FiberLaws, item.clone(), "direct-sum-union", vsum.nonzero_orbits == union, ""),
                    CheckResult::new(Suite::FiberLaws, item.clone(), "tensor-intersection", vten.nonzero_orbits == inter, ""),
                    CheckResult::new(Suite::FiberLaws, item.clone(), "dual-invariance", vdual.nonzero_orbits == va.nonzero_orbits, ""),
                    CheckResult::new(Suite::FiberLaws, item.clone(), "fiber-sdim", sdim_ok, ""),
                ])
            };
            run().unwrap_or_else(|e| fail_item(Suite::FiberLaws, item.clone(), e))
        })
        .collect();
    Ok(res.into_iter().flatten().collect())
}
