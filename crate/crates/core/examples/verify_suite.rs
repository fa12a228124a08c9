//! Run a verification suite and print its check matrix as canonical JSON.
//!
//!     cargo run --release --example verify_suite -- varieties

use supercone::toolkit::{run_suite, RunConfig, Suite};

fn main() -> supercone::error::Result<()> {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("orbits").parse()?;
    let report = run_suite(&RunConfig::for_suite(suite))?;
    for (check, v) in &report.matrix {
        println!("{check}: {}/{}", v.checked - v.failed, v.checked);
    }
    println!("{}", report.deterministic_json()?);
    std::process::exit(report.exit_code());
}
