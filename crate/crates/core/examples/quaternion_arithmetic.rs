//! Basic arithmetic in (alpha, beta | Q): products, conjugates, norms and
//! zero divisors in a split algebra.
//!
//!     cargo run --example quaternion_arithmetic

use quatroot::QuaternionAlgebra;

fn main() -> quatroot::Result<()> {
    let h = QuaternionAlgebra::from_ints(-1, -1)?;
    let (i, j, k) = (h.i(), h.j(), h.k());
    println!("in {h:?}");
    println!("  i*j = {}, j*i = {}, k^2 = {}", &i * &j, &j * &i, k.square());

    let p = h.integral([1, 2, -1, 3]);
    let q = h.integral([0, 1, 1, -2]);
    let pq = &p * &q;
    println!("  p = {p}, q = {q}");
    println!("  p*q = {pq}");
    println!("  conj(p) = {}, N(p) = {}", p.conj(), p.norm());
    println!("  N(p*q) = {} = N(p) N(q) = {}", pq.norm(), p.norm() * q.norm());

    let m = QuaternionAlgebra::from_ints(1, 1)?;
    let a = m.integral([1, 1, 0, 0]);
    let b = m.integral([1, -1, 0, 0]);
    println!("in {m:?} (split: {})", m.is_split());
    println!("  ({a}) * ({b}) = {}", &a * &b);
    Ok(())
}
