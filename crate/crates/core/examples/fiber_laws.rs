//! Fibers of direct sums, tensor products and duals over gl(1|1).

use supercone::glmodel::{build_algebra, build_irreducible, build_kac_module, direct_sum, dual, orbit_representative, tensor};
use supercone::isotropic::OrbitLabel;
use supercone::rational::q;
use supercone::rootdata::Weight;
use supercone::variety::fiber;

fn main() -> supercone::error::Result<()> {
    let model = build_algebra(1, 1)?;
    let l = build_irreducible(&Weight(vec![q(1), q(-1)]), &model)?;
    let k = build_kac_module(&Weight(vec![q(2), q(0)]), &model)?.module;
    let modules = [
        ("L", l.clone()),
        ("K", k.clone()),
        ("L+K", direct_sum(&l, &k)?),
        ("L*K", tensor(&l, &k)?),
        ("L^*", dual(&l)),
    ];
    for label in [OrbitLabel::Gl { p: 1, q: 0 }, OrbitLabel::Gl { p: 0, q: 1 }] {
        let x = orbit_representative(&label, &model)?;
        for (name, m) in &modules {
            let f = fiber(m, &x)?;
            println!("{label} {name:<4} fiber ({}|{}) sdim {}", f.fiber_dim_even, f.fiber_dim_odd, f.sdim_fiber);
        }
    }
    Ok(())
}
