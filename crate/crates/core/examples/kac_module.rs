//! Kac module, its contravariant radical and the irreducible quotient.

use supercone::glmodel::{build_algebra, build_kac_module, contravariant_radical, is_irreducible, quotient};
use supercone::rootdata::{build_root_system, AlgebraType, Weight};

fn main() -> supercone::error::Result<()> {
    let model = build_algebra(2, 1)?;
    let rs = build_root_system(&AlgebraType::parse("gl:2:1")?)?;
    for s in ["[2,1,-3]", "[2,1,-1]", "[1,0,0]"] {
        let lambda = rs.unshift(&Weight::parse(s)?);
        let kac = build_kac_module(&lambda, &model)?;
        let radical = contravariant_radical(&kac);
        let simple = quotient(&kac.module, &radical);
        println!(
            "lambda+rho {s}: K ({}|{}), radical dim {}, L ({}|{}), irreducible {}",
            kac.module.dim_even(),
            kac.module.dim_odd(),
            radical.len(),
            simple.dim_even(),
            simple.dim_odd(),
            is_irreducible(&simple)
        );
    }
    Ok(())
}
