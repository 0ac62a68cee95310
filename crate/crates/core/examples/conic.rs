//! Rational points on x^2 - alpha y^2 = c.
//!
//!     cargo run --example conic -- [alpha c]

use quatroot::qforms::solve_conic;
use quatroot::Rational;

fn main() -> quatroot::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cases: Vec<(Rational, Rational)> = if args.len() == 2 {
        vec![(args[0].parse()?, args[1].parse()?)]
    } else {
        [("-1", "2"), ("-1", "3"), ("4", "3"), ("-105", "421"), ("61", "1"), ("3/5", "-7/20"), ("2", "3")]
            .into_iter()
            .map(|(a, c)| Ok((a.parse()?, c.parse()?)))
            .collect::<quatroot::Result<_>>()?
    };
    for (alpha, c) in cases {
        match solve_conic(&alpha, &c)? {
            Some((x, y)) => println!("x^2 - ({alpha}) y^2 = {c}: x = {x}, y = {y}"),
            None => println!("x^2 - ({alpha}) y^2 = {c}: no rational point"),
        }
    }
    Ok(())
}
