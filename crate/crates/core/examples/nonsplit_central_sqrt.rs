//! Square roots of rationals in division algebras, where they may not exist.
//!
//!     cargo run --example nonsplit_central_sqrt -- [alpha beta a]

use quatroot::quat::sqrt_central_nonsplit;
use quatroot::{QuaternionAlgebra, Rational};

fn main() -> quatroot::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cases: Vec<(Rational, Rational, Rational)> = if args.len() == 3 {
        vec![(args[0].parse()?, args[1].parse()?, args[2].parse()?)]
    } else {
        [(-1, -1, -1), (-1, -1, -2), (-1, -1, -7), (-1, -1, 2), (2, 5, -3), (3, -1, 6), (-2, -5, -30)]
            .into_iter()
            .map(|(a, b, c)| (a.into(), b.into(), c.into()))
            .collect()
    };
    for (alpha, beta, a) in cases {
        let alg = QuaternionAlgebra::new(alpha, beta)?;
        if alg.is_split() {
            println!("{alg:?} is split; see split_central_sqrt");
            continue;
        }
        match sqrt_central_nonsplit(&alg, &a)? {
            Some(r) => println!("{alg:?}: sqrt({a}) = {r}, squares to {}", r.square()),
            None => println!("{alg:?}: {a} has no square root"),
        }
    }
    Ok(())
}
