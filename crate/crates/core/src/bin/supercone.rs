use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use supercone::atypicality::{atypicality_degree, is_stable, stability_subalgebra, witness};
use supercone::error::{Error, Result};
use supercone::glmodel::{build_algebra, build_irreducible, build_kac_module};
use supercone::isotropic::{defect, orbit_table};
use supercone::reduction::{check_translation_conditions, reduce};
use supercone::rootdata::{build_root_system, AlgebraType, RootSystem, Weight};
use supercone::toolkit::{canonical_json, run_suite, ModuleCache, ModuleKind, RunConfig, Suite, CACHE_ENV};
use supercone::variety::associated_variety;

/// Self-commuting cones, orbits and associated varieties of Lie superalgebras.
#[derive(Parser)]
#[command(name = "supercone", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Module cache directory.
    #[arg(long, global = true, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Target {
    /// e.g. gl:2:2, sl:3:1, osp:5:4, D_alpha:1/2, F4, G3
    #[arg(long)]
    algebra: String,
    /// Coordinates of lambda + rho, e.g. '[2,1,-1,-2]' or '[1/2,-1/2]'.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Orbit table of the self-commuting cone.
    Orbits {
        #[arg(long)]
        algebra: String,
    },
    /// Degree of atypicality, witness set and stability.
    Atypicality(Target),
    /// Reduce to a stable weight by translation steps.
    Reduce {
        #[command(flatten)]
        target: Target,
        /// Attach a translation certificate to every step.
        #[arg(long)]
        certify: bool,
    },
    /// Module construction.
    Module {
        #[command(subcommand)]
        cmd: ModuleCmd,
    },
    /// Fibers and associated variety of L_lambda.
    Variety(Target),
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        algebra: Option<String>,
        /// `small` for the suite's default grid, or a coordinate bound.
        #[arg(long, default_value = "small")]
        grid: String,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        pairs: usize,
        /// Write the canonical JSON report here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ModuleCmd {
    /// Build L_lambda (or K_lambda with --kac) and store it in the cache.
    Build {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        kac: bool,
    },
}

fn gl_target(t: &Target) -> Result<(usize, usize, RootSystem, Weight)> {
    let alg = AlgebraType::parse(&t.algebra)?;
    let (m, n) = alg
        .gl_dims()
        .ok_or_else(|| Error::Unsupported(format!("{alg} has no module model; use gl or sl")))?;
    let rs = build_root_system(&alg)?;
    let shifted = Weight::parse(&t.weight)?;
    rs.check_len(&shifted)?;
    Ok((m, n, rs, shifted))
}

// a closed pipe (e.g. `| head`) is not an error worth reporting
fn out(line: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{line}");
}

fn print(cli: &Cli, value: serde_json::Value, text: String) -> Result<()> {
    if cli.json {
        out(&canonical_json(&value)?);
    } else {
        out(&text);
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.cmd {
        Cmd::Orbits { algebra } => {
            let alg = AlgebraType::parse(algebra)?;
            let rs = build_root_system(&alg)?;
            let table = orbit_table(&rs)?;
            let mut text = format!("{alg}: defect {}, {} orbits\n", defect(&rs), table.len());
            for o in &table {
                text += &format!(
                    "  {:<6} dim {:>3}  codim {:>4}  rep {}\n",
                    o.label.to_string(),
                    o.dimension,
                    o.codimension_in_x.map_or("-".into(), |c| c.to_string()),
                    o.representative_set
                );
            }
            print(cli, json!({ "algebra": alg, "orbits": table }), text.trim_end().into())?;
        }
        Cmd::Atypicality(t) => {
            let (_, _, rs, shifted) = gl_target(t)?;
            let lambda = rs.unshift(&shifted);
            let k = atypicality_degree(&lambda, &rs)?;
            let w = witness(&lambda, &rs)?;
            let sub = stability_subalgebra(k, &rs)?;
            let stable = is_stable(&lambda, &sub, &rs)?;
            let text = format!("lambda+rho = {shifted}\nk = {k}\nA = {}\nstable for gl({k}|n) tail: {stable}", w.a);
            print(
                cli,
                json!({ "lambda_plus_rho": shifted, "lambda": lambda, "k": k, "witness": w, "stable": stable }),
                text,
            )?;
        }
        Cmd::Reduce { target, certify } => {
            let (_, _, rs, shifted) = gl_target(target)?;
            let trace = reduce(&rs.unshift(&shifted), &rs)?;
            let mut ok = true;
            let mut certs = Vec::new();
            let mut text = format!("k = {}\n{}", trace.atypicality, shifted);
            for step in &trace.steps {
                text += &format!("\n  case {} {} -> {}", step.case, step.shift, rs.shift(&step.to));
                if *certify {
                    let c = check_translation_conditions(step, &rs)?;
                    text += &format!(
                        "  [unique {} {}, minimal {}]",
                        c.forward_unique, c.backward_unique, c.lambda_minimal
                    );
                    ok &= c.passes();
                    certs.push(json!({
                        "forward_unique": c.forward_unique,
                        "backward_unique": c.backward_unique,
                        "lambda_minimal": c.lambda_minimal,
                        "ties": c.ties,
                    }));
                }
            }
            let mut v = json!({ "trace": trace, "final_lambda_plus_rho": rs.shift(&trace.final_weight) });
            if *certify {
                v["certificates"] = json!(certs);
                v["certified"] = json!(ok);
            }
            print(cli, v, text)?;
            return Ok(if ok { 0 } else { 1 });
        }
        Cmd::Module {
            cmd: ModuleCmd::Build { target, kac },
        } => {
            let (m, n, rs, shifted) = gl_target(target)?;
            let lambda = rs.unshift(&shifted);
            let kind = if *kac { ModuleKind::Kac } else { ModuleKind::Irreducible };
            let (module, path) = match ModuleCache::from_env_or(cli.cache_dir.clone())? {
                Some(cache) => {
                    let module = cache.get_or_build(kind, m, n, &lambda)?;
                    (module, Some(cache.path_for(kind, m, n, &lambda)))
                }
                None => {
                    let model = build_algebra(m, n)?;
                    let module = match kind {
                        ModuleKind::Kac => build_kac_module(&lambda, &model)?.module,
                        ModuleKind::Irreducible => build_irreducible(&lambda, &model)?,
                    };
                    (module, None)
                }
            };
            let text = format!(
                "dim ({}|{}), central scalar {}{}",
                module.dim_even(),
                module.dim_odd(),
                module.central_scalar().map_or("-".into(), |c| c.to_string()),
                path.as_ref().map_or(String::new(), |p| format!("\ncached at {}", p.display()))
            );
            print(
                cli,
                json!({
                    "lambda": lambda,
                    "kind": kind,
                    "dim_even": module.dim_even(),
                    "dim_odd": module.dim_odd(),
                    "central_scalar": module.central_scalar().map(|c| c.to_string()),
                    "path": path,
                }),
                text,
            )?;
        }
        Cmd::Variety(t) => {
            let (m, n, rs, shifted) = gl_target(t)?;
            let lambda = rs.unshift(&shifted);
            let module = match ModuleCache::from_env_or(cli.cache_dir.clone())? {
                Some(cache) => cache.get_or_build(ModuleKind::Irreducible, m, n, &lambda)?,
                None => build_irreducible(&lambda, &build_algebra(m, n)?)?,
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(cli.jobs)
                .build()
                .map_err(|e| Error::Config(e.to_string()))?;
            let v = pool.install(|| associated_variety(&module))?;
            let k = atypicality_degree(&lambda, &rs)?;
            let rank_bound = v.max_rank().unwrap_or(0) <= k;
            let equality = v.closure_rank == Some(k);
            let sdim_ok = k >= m.min(n) || module.sdim() == 0;
            let orbits: Vec<_> = v
                .fibers
                .iter()
                .map(|f| {
                    json!({
                        "label": f.orbit.to_string(),
                        "fiber_dims": { "even": f.fiber_dim_even, "odd": f.fiber_dim_odd },
                        "sdim": f.sdim_fiber,
                    })
                })
                .collect();
            let mut text = format!("lambda+rho = {shifted}, k = {k}, dim ({}|{})", module.dim_even(), module.dim_odd());
            for f in &v.fibers {
                text += &format!("\n  {:<6} fiber ({}|{})", f.orbit.to_string(), f.fiber_dim_even, f.fiber_dim_odd);
            }
            text += &format!("\nvariety rank {:?}", v.closure_rank);
            print(
                cli,
                json!({
                    "weight": shifted,
                    "atypicality_k": k,
                    "orbits": orbits,
                    "variety_rank": v.closure_rank,
                    "central_scalar": module.central_scalar().map(|c| c.to_string()),
                    "checks": {
                        "rank_bound": if rank_bound { "pass" } else { "fail" },
                        "variety_equality": if equality { "pass" } else { "fail" },
                        "sdim_vanishing": if sdim_ok { "pass" } else { "fail" },
                    },
                }),
                text,
            )?;
            return Ok(if rank_bound && equality && sdim_ok { 0 } else { 1 });
        }
        Cmd::Verify {
            suite,
            algebra,
            grid,
            seed,
            pairs,
            output,
        } => {
            let bound = match grid.as_str() {
                "small" => None,
                g => Some(g.parse::<i64>().map_err(|_| Error::Config(format!("bad --grid {g:?}")))?),
            };
            let config = RunConfig {
                suite: Some(suite.parse::<Suite>()?),
                algebra: algebra.as_deref().map(AlgebraType::parse).transpose()?,
                weight: None,
                bound,
                seed: *seed,
                pairs: *pairs,
                output: output.clone(),
                cache_dir: cli.cache_dir.clone(),
                jobs: cli.jobs,
            };
            let report = run_suite(&config)?;
            if cli.json {
                out(&report.to_canonical_json()?);
            } else {
                for (k, v) in &report.matrix {
                    out(&format!("{} {k}: {}/{} passed", if v.pass { "PASS" } else { "FAIL" }, v.checked - v.failed, v.checked));
                }
                for f in report.failures().take(10) {
                    eprintln!("failed: {} [{}] {}", f.item, f.check, f.detail);
                }
            }
            return Ok(report.exit_code());
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            let usage = matches!(
                e,
                Error::Config(_) | Error::InvalidInput(_) | Error::Unsupported(_) | Error::DimensionMismatch { .. }
            );
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}
