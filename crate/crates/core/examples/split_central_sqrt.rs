//! Pure square roots of rationals in split algebras.
//!
//!     cargo run --example split_central_sqrt -- [alpha beta a]

use quatroot::quat::sqrt_central_split;
use quatroot::{QuaternionAlgebra, Rational};

fn main() -> quatroot::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cases: Vec<(Rational, Rational, Rational)> = if args.len() == 3 {
        vec![(args[0].parse()?, args[1].parse()?, args[2].parse()?)]
    } else {
        [(1, 1, 2), (4, 7, -3), (2, -1, 5), (-1, 5, 7)]
            .into_iter()
            .map(|(a, b, c)| (a.into(), b.into(), c.into()))
            .collect()
    };
    for (alpha, beta, a) in cases {
        let alg = QuaternionAlgebra::new(alpha, beta)?;
        if !alg.is_split() {
            println!("{alg:?} is a division algebra; see nonsplit_central_sqrt");
            continue;
        }
        let r = sqrt_central_split(&alg, &a)?;
        println!("{alg:?}: sqrt({a}) = {r}, squares to {}", r.square());
    }
    Ok(())
}
