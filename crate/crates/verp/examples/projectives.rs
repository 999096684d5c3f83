//! Cap diagram, Kac flag of the projective cover, λ̂, the lowest weight of
//! L(λ) and a word of translation functors building P(λ).

use verp::caps::{
    cap_diagram, dual_simple, hat, kac_composition, lowest_weight, p_set, projective_word,
    replay_word,
};
use verp::diagram::{encode, render_ascii};
use verp::fusion::PrimeP;
use verp::superweight::{SuperShape, SuperWeight};

fn main() -> verp::Result<()> {
    let p = PrimeP::new(11)?;
    let l = SuperWeight::new(
        SuperShape::new(5, 4, p)?,
        vec![18, 18, 15, 12, 12],
        vec![-13, -13, -17, -18],
    )?;
    let d = encode(&l);
    let cd = cap_diagram(&d);
    println!("{}", render_ascii(&d, 3));
    println!("{}, free circles {:?}", cd.render(), cd.free_circles);

    println!("Kac factors of P(λ):");
    for a in p_set(&l) {
        println!("  K{a}  {}", render_ascii(&encode(&a), 3));
    }
    println!("composition factors of K(λ): {}", kac_composition(&l).len());
    println!("λ̂ = {}", hat(&l));
    println!("lowest weight of L(λ) = {}", lowest_weight(&l));
    println!("L(λ)* = L{}", dual_simple(&l));

    let word = projective_word(&l);
    let steps: Vec<String> = word.steps.iter().map(|(k, i)| format!("{k}{i}")).collect();
    println!(
        "P(λ) = {} K{}",
        steps.iter().rev().cloned().collect::<Vec<_>>().join(" "),
        word.base
    );
    let class = replay_word(&word);
    println!("replayed class has {} Kac terms", class.len());
    Ok(())
}
