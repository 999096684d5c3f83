//! One F_i/E_i step on the diagram of a weight, and the same step in the
//! loop-module model.

use verp::diagram::{encode, render_ascii};
use verp::fusion::PrimeP;
use verp::loop_module::{loop_apply, phi_equivariance_check, phi_super};
use verp::superweight::{SuperShape, SuperWeight};
use verp::translation::{translate_kac, translate_projective, Kind};

fn main() -> verp::Result<()> {
    let p = PrimeP::new(11)?;
    let l = SuperWeight::new(
        SuperShape::new(5, 4, p)?,
        vec![18, 18, 15, 12, 12],
        vec![-13, -13, -17, -18],
    )?;
    println!("{}", render_ascii(&encode(&l), 0));
    for kind in [Kind::F, Kind::E] {
        for i in 0..p.get() {
            match translate_kac(kind, i, &l) {
                None => {}
                Some(ext) => {
                    let q = ext
                        .quotient
                        .map(|q| format!(" then K{q}"))
                        .unwrap_or_default();
                    println!("{kind}_{i:<2} K(λ) has K{}{q}", ext.sub);
                }
            }
            assert!(phi_equivariance_check(&l, i));
        }
    }
    match translate_projective(Kind::E, 6, &l) {
        Ok(mu) => println!("E_6 P(λ) = P{mu}"),
        Err(e) => println!("E_6 P(λ): {e}"),
    }

    let v = phi_super(&l);
    println!(
        "loop vector: a = {:?}, b = {:?}, t1^{} t2^{}, sign {}",
        v.a, v.b, -v.s, v.r, v.coeff
    );
    for w in loop_apply(Kind::E, 6, &v, p.get()) {
        println!(
            "  e_6: a = {:?}, b = {:?}, coefficient {}",
            w.a, w.b, w.coeff
        );
    }
    Ok(())
}
