//! Encodes a GL(L_5|L_4) weight at p = 11 as a diagram on the circle and
//! reads it back.

use verp::diagram::{cut, decode, encode, parse_ascii, permute, render_ascii};
use verp::fusion::PrimeP;
use verp::superweight::{atypicality, casimir_scalar, SuperShape, SuperWeight};

fn main() -> verp::Result<()> {
    let p = PrimeP::new(11)?;
    let shape = SuperShape::new(5, 4, p)?;
    let l = SuperWeight::new(shape, vec![18, 18, 15, 12, 12], vec![-13, -13, -17, -18])?;
    let d = encode(&l);
    println!("λ = {l}");
    for k in [0, 3] {
        println!("  cut at {k}: {}", render_ascii(&d, k));
    }
    println!(
        "atypicality {} = crosses {}",
        atypicality(&l),
        d.cross_count()
    );
    let (c, r) = casimir_scalar(&l);
    println!("Casimir {c}, residue {r}");

    let back = parse_ascii(p, "o<ox>>x<oo> @3 t1^-3 t2^2")?;
    println!("decoded back: {}", decode(&back, 5, 4)?);

    let sigma: Vec<usize> = (0..11).map(|k| (k + 3) % 11).collect();
    let moved = permute(&sigma, &d)?;
    let body: String = cut(&moved, 0).into_iter().map(|s| s.ascii()).collect();
    println!("rotated by 3: {body}");
    Ok(())
}
