//! `g(-1)`-invariants of Kac and irreducible modules.

use supercone::glmodel::{build_algebra, build_irreducible, build_kac_module};
use supercone::rootdata::{build_root_system, AlgebraType, Weight};
use supercone::variety::g_minus_invariants;

fn main() -> supercone::error::Result<()> {
    let model = build_algebra(2, 1)?;
    let rs = build_root_system(&AlgebraType::parse("gl:2:1")?)?;
    for s in ["[2,1,-3]", "[2,1,-1]"] {
        let lambda = rs.unshift(&Weight::parse(s)?);
        let k = g_minus_invariants(&build_kac_module(&lambda, &model)?.module);
        let l = g_minus_invariants(&build_irreducible(&lambda, &model)?);
        println!("lambda+rho {s}: K invariants ({}|{}), L invariants ({}|{})", k.dim_even, k.dim_odd, l.dim_even, l.dim_odd);
        for (w, d) in &l.by_weight {
            println!("  weight {w}: {d}");
        }
    }
    Ok(())
}
