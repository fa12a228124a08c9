//! Fibers `ker x / im x` over each orbit and the associated variety of `L_lambda`.

use supercone::atypicality::atypicality_degree;
use supercone::glmodel::{build_algebra, build_irreducible};
use supercone::rootdata::{build_root_system, AlgebraType, Weight};
use supercone::variety::{associated_variety, is_projective, variety_codimension};

fn main() -> supercone::error::Result<()> {
    let model = build_algebra(2, 2)?;
    let rs = build_root_system(&AlgebraType::parse("gl:2:2")?)?;
    for s in ["[2,1,-3,-4]", "[2,1,-1,-3]", "[2,1,-1,-2]"] {
        let lambda = rs.unshift(&Weight::parse(s)?);
        let module = build_irreducible(&lambda, &model)?;
        let v = associated_variety(&module)?;
        println!(
            "lambda+rho {s}: k = {}, dim ({}|{}), projective {}",
            atypicality_degree(&lambda, &rs)?,
            module.dim_even(),
            module.dim_odd(),
            is_projective(&module)?
        );
        for f in &v.fibers {
            println!("  {:<6} fiber ({}|{})", f.orbit.to_string(), f.fiber_dim_even, f.fiber_dim_odd);
        }
        println!("  variety rank {:?}, codim {:?}", v.closure_rank, variety_codimension(&v, &rs)?);
    }
    Ok(())
}
