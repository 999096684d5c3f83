//! Runs every invariant suite on the default window, `cargo run --release
//! --example selfcheck -- 7`.

use verp::fusion::PrimeP;
use verp::selfcheck::{run_suite, SuiteConfig, SUITES};

fn main() -> verp::Result<()> {
    let p = PrimeP::new(
        std::env::args()
            .nth(1)
            .map_or(Ok(5), |s| s.parse())
            .unwrap_or(5),
    )?;
    let cfg = SuiteConfig::new(p);
    println!("p = {p}, window {}..={}", cfg.lo, cfg.hi);
    for name in SUITES {
        let r = run_suite(name, &cfg).expect("listed suite");
        println!(
            "{:<16} checked {:>8}  failed {}  aborted {}",
            r.suite, r.checked, r.failed, r.aborted
        );
        for s in &r.samples {
            println!("  {s}");
        }
    }
    Ok(())
}
