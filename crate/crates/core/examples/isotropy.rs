//! Isotropy of diagonal forms over Q: the local-global test, the place that
//! obstructs an anisotropic form, explicit zeros of ternary forms, and
//! turning a zero into a vector with any prescribed value.
//!
//!     cargo run --example isotropy -- [a1,a2,...]

use quatroot::{DiagonalForm, Rational};

fn describe(f: &DiagonalForm) -> quatroot::Result<()> {
    let entries: Vec<String> = f.entries().iter().map(ToString::to_string).collect();
    let name = format!("<{}>", entries.join(", "));
    if !f.is_isotropic()? {
        let v = f.obstruction()?.expect("anisotropic forms have an obstruction");
        println!("{name}: anisotropic, fails at {v}");
        return Ok(());
    }
    print!("{name}: isotropic");
    if let Some(v) = f.isotropic_vector()? {
        let target = Rational::from(-5);
        let w = f.isotropic_to_universal(&v, &target)?;
        print!(", zero {:?}, value {target} at {:?}", &v[..], &w[..]);
    }
    println!();
    Ok(())
}

fn main() -> quatroot::Result<()> {
    if let Some(arg) = std::env::args().nth(1) {
        let entries = arg.split(',').map(str::parse).collect::<quatroot::Result<Vec<Rational>>>()?;
        return describe(&DiagonalForm::new(entries)?);
    }
    for e in [&[1, 1, -2][..], &[1, 1, 1], &[1, 1, -3], &[3, -5, 7], &[1, 1, 1, -7], &[1, 1, 1, 1], &[2, -3]] {
        describe(&DiagonalForm::from_ints(e)?)?;
    }
    Ok(())
}
