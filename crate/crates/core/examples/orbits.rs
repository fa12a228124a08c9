//! Orbit table of the self-commuting cone for a few algebras.
//!
//!     cargo run --example orbits -- osp:5:4

use supercone::isotropic::{count_orbits, defect, orbit_table};
use supercone::rootdata::{build_root_system, AlgebraType};

fn main() -> supercone::error::Result<()> {
    let names: Vec<String> = std::env::args().skip(1).collect();
    let names = if names.is_empty() {
        vec!["gl:2:2".into(), "gl:3:2".into(), "osp:4:4".into()]
    } else {
        names
    };
    for name in names {
        let rs = build_root_system(&AlgebraType::parse(&name)?)?;
        println!("{}: defect {}, {} orbits", rs.algebra, defect(&rs), count_orbits(&rs));
        for o in orbit_table(&rs)? {
            let closure: Vec<String> = o.closure_contains.iter().map(|l| l.to_string()).collect();
            println!("  {:<6} dim {:>3}  closure {{{}}}", o.label.to_string(), o.dimension, closure.join(", "));
        }
    }
    Ok(())
}
