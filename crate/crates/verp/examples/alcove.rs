//! Weights of Ver_p(GL_n): the alcove, tensoring with V, level-rank duality
//! and the invertible object ψ.

use verp::alcove::{
    add_box, level_rank_d, level_rank_d_inverse, phi_wedge, psi_data, tensor_with_v, GLWeight,
};
use verp::fusion::PrimeP;

fn main() -> verp::Result<()> {
    let p = PrimeP::new(7)?;
    let l = GLWeight::new(p, vec![6, 5, 2])?;
    println!("λ = {l} for GL_3 at p = {p}");
    for w in tensor_with_v(&l) {
        println!("  summand of λ ⊗ V: {w}");
    }
    for c in 0..p.get() {
        if let Some(w) = add_box(&l, c) {
            println!("  box of content {c}: {w}");
        }
    }
    let wedge = phi_wedge(&l);
    println!("wedge residues {:?}, t-power {}", wedge.residues, -wedge.s);

    let (d, parity) = level_rank_d(&l);
    println!("D(λ) = {d}, parity {parity}");
    println!("D(D(λ)) = {}", level_rank_d_inverse(&d).0);

    let t = psi_data(3, p)?;
    println!("ψ = det^{} ⊗ χ^{} has weight {}", t.a, t.b, t.psi);
    Ok(())
}
