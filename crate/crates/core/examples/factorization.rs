//! Exact rationals, factorization and square classes.
//!
//!     cargo run --example factorization -- [n/d ...]

use quatroot::exact_arith::{factor, is_square, squarefree_part};
use quatroot::Rational;

fn main() -> quatroot::Result<()> {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = ["360", "-5/8", "49/121", "1000000016000000063", "-18446744073709551617/12"]
            .map(String::from)
            .to_vec();
    }
    for a in &args {
        let q: Rational = a.parse()?;
        let f = factor(&q)?;
        let parts: Vec<String> = f.factors.iter().map(|(p, e)| format!("{p}^{e}")).collect();
        let (s, t) = squarefree_part(&q)?;
        let root = is_square(&q).map_or("none".to_string(), |r| r.to_string());
        println!("{q} = {} {}  squarefree class {s} (times ({t})^2)  sqrt {root}", if f.sign < 0 { "-" } else { "+" }, parts.join(" "));
    }
    Ok(())
}
