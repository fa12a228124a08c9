//! `g_x = ker ad x / im ad x` for orbit representatives of gl(3|2).

use supercone::glmodel::{build_algebra, orbit_representative};
use supercone::isotropic::all_labels;
use supercone::rootdata::{build_root_system, AlgebraType};
use supercone::variety::centralizer_quotient;

fn main() -> supercone::error::Result<()> {
    let model = build_algebra(3, 2)?;
    let rs = build_root_system(&AlgebraType::parse("gl:3:2")?)?;
    for label in all_labels(&rs) {
        let x = orbit_representative(&label, &model)?;
        let c = centralizer_quotient(&x, &model)?;
        println!(
            "{:<6} rank {}  dim g_x ({}|{}) expected {:?}  image is an ideal: {}  ok: {}",
            label.to_string(),
            c.rank,
            c.dim_g_x_even,
            c.dim_g_x_odd,
            c.expected_g_x,
            c.image_is_ideal,
            c.passes(&model)
        );
    }
    Ok(())
}
