//! A value shared by two binary forms, found through square classes and a
//! linear system over F_2 of local Hilbert-symbol conditions.
//!
//!     cargo run --example common_value -- [x0,x1 z0,z1]

use quatroot::sqclasses::{common_value, initial_prime_set, intersection_system, singular_basis};
use quatroot::{DiagonalForm, Rational};

fn form(s: &str) -> quatroot::Result<DiagonalForm> {
    DiagonalForm::new(s.split(',').map(str::parse).collect::<quatroot::Result<Vec<Rational>>>()?)
}

fn show(xi: &DiagonalForm, zeta: &DiagonalForm) -> quatroot::Result<()> {
    let label = |f: &DiagonalForm| format!("<{}, {}>", f.entries()[0], f.entries()[1]);
    let primes = initial_prime_set(xi, zeta)?;
    let sys = intersection_system(xi, zeta, &singular_basis(&primes)?)?;
    print!("{} and {}: {} conditions over {:?}", label(xi), label(zeta), sys.rows().len(), primes);
    match common_value(xi, zeta)? {
        Some(cv) => println!(
            "; d = {} via primes {:?}, xi{:?} = zeta{:?} = d",
            cv.d, cv.prime_set, &cv.xi_vector[..], &cv.zeta_vector[..]
        ),
        None => println!("; no common value"),
    }
    Ok(())
}

fn main() -> quatroot::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.len() == 2 {
        return show(&form(&args[0])?, &form(&args[1])?);
    }
    for (x, z) in [("-2,1", "-1,-1"), ("1,1", "-1,-1"), ("-12,-12", "-7,3"), ("3,-7", "5,-35"), ("1,-1", "5,7")] {
        show(&form(x)?, &form(z)?)?;
    }
    Ok(())
}
