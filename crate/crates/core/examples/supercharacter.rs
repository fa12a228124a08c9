//! Order of vanishing of the supercharacter at zero and the restriction law:
//! `ch L_lambda` vanishes on `h_A^⊥` whenever `|A|` exceeds the atypicality.

use supercone::atypicality::atypicality_degree;
use supercone::glmodel::{build_algebra, build_irreducible};
use supercone::rootdata::{build_root_system, AlgebraType, Weight};
use supercone::variety::{associated_variety, restriction_law, supercharacter_order, variety_codimension};

fn main() -> supercone::error::Result<()> {
    let model = build_algebra(2, 2)?;
    let rs = build_root_system(&AlgebraType::parse("gl:2:2")?)?;
    for s in ["[2,1,-3,-4]", "[2,1,-1,-3]", "[2,1,-1,-2]"] {
        let lambda = rs.unshift(&Weight::parse(s)?);
        let module = build_irreducible(&lambda, &model)?;
        let k = atypicality_degree(&lambda, &rs)?;
        let codim = variety_codimension(&associated_variety(&module)?, &rs)?.unwrap_or(0) as usize;
        let v = supercharacter_order(&module, codim)?;
        println!("lambda+rho {s}: k = {k}, codim X = {codim}, order {:?} (>= codim: {})", v.order, v.holds);
        if k < 2 {
            let r = restriction_law(&module, k + 1)?;
            println!("  vanishes on all {} sets of size {}: {}", r.sets_checked, k + 1, r.holds());
        }
    }
    Ok(())
}
