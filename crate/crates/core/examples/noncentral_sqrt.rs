//! Square root of a non-central quaternion.
//!
//!     cargo run --example noncentral_sqrt -- [alpha beta q0 q1 q2 q3]
//!
//! Without arguments a few fixed cases in the Hamilton quaternions are shown.

use quatroot::quat::sqrt_noncentral;
use quatroot::{QuaternionAlgebra, Rational};

fn show(alg: &QuaternionAlgebra, c: [Rational; 4]) -> quatroot::Result<()> {
    let q = alg.element(c);
    match sqrt_noncentral(&q)? {
        Some(r) => println!("sqrt({q}) = {r}    check: ({r})^2 = {}", r.square()),
        None => println!("{q} (norm {}) is not a square", q.norm()),
    }
    Ok(())
}

fn main() -> quatroot::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.len() == 6 {
        let v: Vec<Rational> = args.iter().map(|s| s.parse()).collect::<quatroot::Result<_>>()?;
        let alg = QuaternionAlgebra::new(v[0].clone(), v[1].clone())?;
        return show(&alg, [v[2].clone(), v[3].clone(), v[4].clone(), v[5].clone()]);
    }
    let h = QuaternionAlgebra::from_ints(-1, -1)?;
    for c in [[0, 2, 0, 0], [3, 4, 0, 0], [-3, 0, 4, 0], [0, 1, 0, 0], [1, 1, 0, 0]] {
        show(&h, c.map(Rational::from))?;
    }
    Ok(())
}
