//! Hilbert symbols, the places where a quaternion algebra ramifies, and the
//! product formula.
//!
//!     cargo run --example hilbert_symbols -- [a b]

use quatroot::hilbert::{hilbert_symbol, ramified_places, relevant_places};
use quatroot::Rational;

fn main() -> quatroot::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pairs: Vec<(Rational, Rational)> = if args.len() == 2 {
        vec![(args[0].parse()?, args[1].parse()?)]
    } else {
        [("-1", "-1"), ("2", "5"), ("3", "1/3"), ("-6", "35/4"), ("7", "-7")]
            .into_iter()
            .map(|(a, b)| Ok((a.parse()?, b.parse()?)))
            .collect::<quatroot::Result<_>>()?
    };
    for (a, b) in pairs {
        let places = relevant_places([&a, &b]);
        let mut line = format!("({a}, {b}):");
        let mut product = 1;
        for v in &places {
            let s = hilbert_symbol(&a, &b, v)?;
            product *= s;
            line += &format!(" {v}:{s:+}");
        }
        let ramified: Vec<String> = ramified_places(&a, &b)?.iter().map(ToString::to_string).collect();
        println!("{line}  product {product:+}  ramified at {{{}}}", ramified.join(", "));
    }
    Ok(())
}
