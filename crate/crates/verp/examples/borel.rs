//! Relabels simples of GL(L_1 ⊕ L_2 ⊕ L_2) at p = 5 from the standard Borel
//! to the Borel of a permutation.

use verp::borel::{
    borel_translate, is_w_dominant, w_integrable, BorelPermutation, GLXShape, TupleWeight,
};
use verp::fusion::PrimeP;

fn main() -> verp::Result<()> {
    let p = PrimeP::new(5)?;
    let shape = GLXShape::new(p, vec![1, 2, 2])?;
    let l = TupleWeight::new(shape, vec![vec![0], vec![2, 1], vec![1, 0]])?;
    println!("λ = {l}");
    for one_line in [[1, 2, 3], [1, 3, 2], [2, 1, 3], [3, 2, 1], [2, 3, 1]] {
        let w = BorelPermutation::from_one_line(&one_line)?;
        let integrable = w_integrable(&l, &w)?;
        let dominant = is_w_dominant(&l, &w)?;
        match borel_translate(&l, &w) {
            Ok(t) => println!("w = {one_line:?}: λ^w = {t} (w-dominant {dominant})"),
            Err(e) => println!("w = {one_line:?}: {e} (integrable {integrable})"),
        }
    }
    Ok(())
}
