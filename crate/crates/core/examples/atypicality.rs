//! Degree of atypicality, the witness set `A` and stability of a weight.

use supercone::atypicality::{atypicality_degree, degree_by_search, is_stable, stability_subalgebra, witness};
use supercone::rootdata::{build_root_system, AlgebraType, Weight};

fn main() -> supercone::error::Result<()> {
    let rs = build_root_system(&AlgebraType::parse("gl:2:2")?)?;
    // lambda + rho coordinates
    for s in ["[2,1,-3,-4]", "[2,1,-2,-4]", "[2,1,-1,-2]", "[3,1,-1,-3]"] {
        let shifted = Weight::parse(s)?;
        let lambda = rs.unshift(&shifted);
        let k = atypicality_degree(&lambda, &rs)?;
        assert_eq!(k, degree_by_search(&shifted, &rs));
        let w = witness(&lambda, &rs)?;
        let stable = is_stable(&lambda, &stability_subalgebra(k, &rs)?, &rs)?;
        println!("lambda+rho {shifted}: k = {k}, A = {}, stable = {stable}", w.a);
    }
    Ok(())
}
