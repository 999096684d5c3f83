//! Serganova's algorithm for classical weights: λ̂ along the fixed order of
//! odd roots and along random linear extensions.

use rand::rngs::StdRng;
use rand::SeedableRng;
use verp::fusion::PrimeP;
use verp::serganova::{
    check_oddroot_lemma, kac_lowest, odd_root_order, random_order, serganova_hat,
    serganova_hat_with_order, sh_nonzero, ClassicalWeight,
};

fn main() -> verp::Result<()> {
    let p = PrimeP::new(11)?;
    let l = ClassicalWeight::new(vec![18, 18, 15, 12, 12], vec![-13, -13, -17, -18])?;
    let order: Vec<String> = odd_root_order(l.m(), l.n())
        .iter()
        .map(|r| r.to_string())
        .collect();
    println!("order: {}", order.join(" "));
    println!("lemma holds for (5,4): {}", check_oddroot_lemma(5, 4));
    println!("λ = {l}");
    println!("λ̂ = {}", serganova_hat(&l, p));
    println!("λ - Σβ = {}", kac_lowest(&l));
    println!("sh nonzero: {}", sh_nonzero(&l, p));

    let mut rng = StdRng::seed_from_u64(1);
    for _ in 0..3 {
        let o = random_order(l.m(), l.n(), &mut rng);
        println!("random order gives {}", serganova_hat_with_order(&l, p, &o));
    }

    let typical = ClassicalWeight::new(vec![3, 1], vec![0])?;
    println!(
        "{typical}: λ̂ = {}, sh nonzero: {}",
        serganova_hat(&typical, p),
        sh_nonzero(&typical, p)
    );
    Ok(())
}
