//! The extended affine Weyl group of type C acting on Z^d.

use affine_schur::weyl::{double_coset_reps_upto, elements_upto, min_coset_reps_upto};
use affine_schur::WeylElt;

fn main() -> affine_schur::Result<()> {
    let d = 2;
    let w = WeylElt::parse(d, "s0.s1.s2.s1")?;
    println!("w = {w}, length {}, reduced word {}", w.length(), w.word_string());
    println!("right descents {:?}, left descents {:?}", w.right_descents(), w.left_descents());
    println!("w^-1 = {}", w.inverse());

    // Right action on coordinates, n = 2r + 2 with r = 3.
    let n = 8;
    println!("(1, 2) . w = {:?}", w.act(&[1, 2], n));

    for k in 0..=5 {
        let count = elements_upto(d, k).len();
        println!("elements of length <= {k}: {count}");
    }

    let gens = [1];
    let reps = min_coset_reps_upto(d, &gens, 3)?;
    println!("minimal right coset reps of W_(s1), length <= 3: {}", reps.len());
    let doubles = double_coset_reps_upto(d, &gens, &[0], 3)?;
    println!("minimal double coset reps W_(s1) \\ W / W_(s0), length <= 3: {}", doubles.len());
    Ok(())
}
