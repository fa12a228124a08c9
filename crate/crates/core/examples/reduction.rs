//! Reduce an atypical weight to a stable one, certifying every translation step.

use supercone::reduction::{check_translation_conditions, reduce, trace_is_stable};
use supercone::rootdata::{build_root_system, AlgebraType, Weight};

fn main() -> supercone::error::Result<()> {
    let rs = build_root_system(&AlgebraType::parse("gl:3:2")?)?;
    let shifted = Weight::parse("[4,1,-2,-1,-4]")?;
    let trace = reduce(&rs.unshift(&shifted), &rs)?;
    println!("start {shifted}, k = {}", trace.atypicality);
    for step in &trace.steps {
        let c = check_translation_conditions(step, &rs)?;
        println!(
            "  case {} {:>4} -> {}   unique ({}, {}) minimal {}",
            step.case,
            step.shift.to_string(),
            rs.shift(&step.to),
            c.forward_unique,
            c.backward_unique,
            c.lambda_minimal
        );
    }
    println!("final {} stable: {}", rs.shift(&trace.final_weight), trace_is_stable(&trace, &rs)?);
    Ok(())
}
