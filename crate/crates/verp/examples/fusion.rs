//! Prints the fusion table of Ver_p, `cargo run --example fusion -- 7`.

use verp::fusion::{fuse_simples, PrimeP, VerSimple};

fn main() -> verp::Result<()> {
    let p = PrimeP::new(
        std::env::args()
            .nth(1)
            .map_or(Ok(5), |s| s.parse())
            .unwrap_or(5),
    )?;
    println!("Ver_{p}");
    for i in 1..p.as_i64() {
        for j in i..p.as_i64() {
            let out = fuse_simples(VerSimple::new(i, p)?, VerSimple::new(j, p)?, p)?;
            let terms: Vec<String> = out.iter().map(|s| format!("L{}", s.index())).collect();
            println!("L{i} x L{j} = {}", terms.join(" + "));
        }
    }
    Ok(())
}
