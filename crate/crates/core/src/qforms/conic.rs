//! Rational points on `x^2 - a y^2 = c` by Lagrange/Legendre descent.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{factor_integer, is_square, squarefree_part, Rational};

/// Solves the norm equation `x^2 - alpha y^2 = c` over Q.
///
/// Returns `None` exactly when no rational solution exists. Any solution is
/// acceptable; the returned one has `x, y >= 0`.
pub fn solve_conic(alpha: &Rational, c: &Rational) -> Result<Option<(Rational, Rational)>> {
    if alpha.is_zero() {
        return Err(Error::Zero("alpha"));
    }
    if c.is_zero() {
        return Err(Error::Zero("norm equation target"));
    }
    let (x, y) = if let Some(s) = is_square(alpha) {
        // (x - s y)(x + s y) = c with both factors free.
        let two = Rational::from(2);
        ((c + Rational::one()) / &two, (c - Rational::one()) / (two * s))
    } else {
        // alpha = A ta^2, c = C tc^2 with A, C squarefree.
        let (a, ta) = squarefree_part(alpha)?;
        let (cc, tc) = squarefree_part(c)?;
        let Some((x, y)) = descend(&a, &cc) else {
            return Ok(None);
        };
        (x * &tc, y * &tc / ta)
    };
    if &x.square() - alpha * y.square() != *c {
        return Err(Error::Internal(format!(
            "conic solution ({x}, {y}) does not satisfy x^2 - {alpha} y^2 = {c}"
        )));
    }
    Ok(Some((x.abs(), y.abs())))
}

/// `x^2 - a y^2 = c` for squarefree integers `a`, `c`, with `a` not a square.
///
/// Each step is an equivalence of solvability, so `None` means unsolvable.
fn descend(a: &BigInt, c: &BigInt) -> Option<(Rational, Rational)> {
    let one = BigInt::one();
    if c.is_one() {
        return Some((Rational::one(), Rational::zero()));
    }
    if *c == -a {
        return Some((Rational::zero(), Rational::one()));
    }
    if a.abs() > c.abs() {
        // u^2 - c v^2 = a gives u^2 = a + c v^2, so (u/v, 1/v) works; v != 0
        // because a is not a square.
        let (u, v) = descend(c, a)?;
        let inv = v.recip().ok()?;
        return Some((u * &inv, inv));
    }
    if c.abs() == one {
        // c = -1 and a = -1: x^2 + y^2 = -1.
        return None;
    }
    let t = sqrt_mod_squarefree(a, c)?;
    // (t + sqrt a) has norm t^2 - a = c m with |m| < |c|.
    let m = (&t * &t - a) / c;
    debug_assert!(!m.is_zero() && m.abs() < c.abs());
    let (s, w) = squarefree_part(&Rational::from_integer(m.clone())).ok()?;
    let (x1, y1) = descend(a, &s)?;
    let (x1, y1) = (x1 * &w, y1 * &w);
    let t = Rational::from_integer(t);
    let a = Rational::from_integer(a.clone());
    let m = Rational::from_integer(m);
    // (t + sqrt a) / (x1 + y1 sqrt a)
    let x = (&t * &x1 - &a * &y1) / &m;
    let y = (&x1 - &t * &y1) / &m;
    Some((x, y))
}

/// A `t` with `t^2 = a (mod |c|)` and `|t| <= |c|/2`, for squarefree `c`.
fn sqrt_mod_squarefree(a: &BigInt, c: &BigInt) -> Option<BigInt> {
    let modulus = c.magnitude();
    let mut t = BigInt::zero();
    let mut m = BigInt::one();
    for (p, e) in factor_integer(modulus) {
        debug_assert_eq!(e, 1);
        let pi = BigInt::from(p.clone());
        let ap = a.mod_floor(&pi).to_biguint().expect("nonnegative residue");
        let r = BigInt::from(sqrt_mod_prime(&ap, &p)?);
        // CRT: t' = t + m k with t' = r (mod p).
        let inv = mod_inverse(&m, &pi);
        let k = ((&r - &t) * inv).mod_floor(&pi);
        t += &m * k;
        m *= pi;
    }
    let t = t.mod_floor(&m);
    let half = &m >> 1;
    Some(if t > half { t - m } else { t })
}

fn mod_inverse(x: &BigInt, p: &BigInt) -> BigInt {
    let g = x.mod_floor(p).extended_gcd(p);
    debug_assert!(g.gcd.is_one());
    g.x.mod_floor(p)
}

/// Tonelli-Shanks. `a` must be reduced mod the prime `p`.
fn sqrt_mod_prime(a: &BigUint, p: &BigUint) -> Option<BigUint> {
    if a.is_zero() || *p == BigUint::from(2u32) {
        return Some(a.clone());
    }
    let one = BigUint::one();
    let p1 = p - &one;
    if a.modpow(&(&p1 >> 1), p) != one {
        return None;
    }
    if (p % 4u32) == BigUint::from(3u32) {
        return Some(a.modpow(&((p + &one) >> 2), p));
    }
    let s = p1.trailing_zeros().expect("p - 1 is even");
    let q = &p1 >> s;
    let mut z = BigUint::from(2u32);
    while z.modpow(&(&p1 >> 1), p) == one {
        z += 1u32;
    }
    let mut m = s;
    let mut c = z.modpow(&q, p);
    let mut t = a.modpow(&q, p);
    let mut r = a.modpow(&((&q + &one) >> 1), p);
    while t != one {
        let mut i = 0;
        let mut t2 = t.clone();
        while t2 != one {
            t2 = &t2 * &t2 % p;
            i += 1;
        }
        let b = c.modpow(&(BigUint::one() << (m - i - 1)), p);
        m = i;
        c = &b * &b % p;
        t = t * &c % p;
        r = r * b % p;
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn holds(alpha: &str, c: &str, sol: &(Rational, Rational)) -> bool {
        sol.0.square() - q(alpha) * sol.1.square() == q(c)
    }

    #[test]
    fn conic_examples() {
        assert_eq!(solve_conic(&q("-1"), &q("2")).unwrap(), Some((q("1"), q("1"))));
        assert_eq!(solve_conic(&q("-1"), &q("-1")).unwrap(), None);
        assert_eq!(solve_conic(&q("4"), &q("3")).unwrap(), Some((q("2"), q("1/2"))));
        let s = solve_conic(&q("2"), &q("1/2")).unwrap().unwrap();
        assert!(holds("2", "1/2", &s));
        assert_eq!(s, (q("1"), q("1/2")));
        assert!(solve_conic(&q("0"), &q("1")).is_err());
        assert!(solve_conic(&q("3"), &q("0")).is_err());
    }

    #[test]
    fn harder_instances() {
        for (alpha, c) in [("-7", "11"), ("13", "-3"), ("-105", "421"), ("3/5", "-7/20"), ("61", "1"), ("-2", "3")] {
            let s = solve_conic(&q(alpha), &q(c)).unwrap().unwrap();
            assert!(holds(alpha, c, &s), "{alpha} {c}");
        }
        // 3 is inert in Q(i): no x^2 + y^2 = 3.
        assert_eq!(solve_conic(&q("-1"), &q("3")).unwrap(), None);
        assert_eq!(solve_conic(&q("2"), &q("3")).unwrap(), None);
    }

    #[test]
    fn modular_roots() {
        for p in [3u32, 5, 7, 13, 17, 41, 97, 113] {
            let pb = BigUint::from(p);
            for a in 0..p {
                let r = sqrt_mod_prime(&BigUint::from(a), &pb);
                let is_qr = (0..p).any(|x| x * x % p == a);
                assert_eq!(r.is_some(), is_qr, "a={a} p={p}");
                if let Some(r) = r {
                    assert_eq!(&r * &r % &pb, BigUint::from(a));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn solutions_are_exact(an in -60i64..=60, ad in 1i64..=12, cn in -60i64..=60, cd in 1i64..=12) {
            prop_assume!(an != 0 && cn != 0);
            let alpha = Rational::new(an, ad).unwrap();
            let c = Rational::new(cn, cd).unwrap();
            if let Some((x, y)) = solve_conic(&alpha, &c).unwrap() {
                prop_assert_eq!(x.square() - &alpha * y.square(), c);
            }
        }
    }
}
