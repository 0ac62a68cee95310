//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's Hilbert symbol, isotropy or conic code.

#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use quatroot::Rational;

fn ord_p(mut n: i64, p: i64) -> (u32, i64) {
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    (v, n)
}

fn ord_mod(x: i64, p: i64, m: i64) -> u32 {
    let x = x.rem_euclid(m);
    if x == 0 {
        return u32::MAX;
    }
    ord_p(x, p).0
}

/// Square-class representative of `n` in Q_p: `p^e * u` with `e` in {0, 1}
/// and `u` in {1, least nonresidue} for odd `p`, `u` in {1, 3, 5, 7} at 2.
fn local_class(n: i64, p: i64) -> i64 {
    let (v, u) = ord_p(n, p);
    let unit = if p == 2 {
        u.rem_euclid(8)
    } else {
        let squares: Vec<i64> = (1..p).map(|x| x * x % p).collect();
        if squares.contains(&u.rem_euclid(p)) {
            1
        } else {
            (2..p).find(|x| !squares.contains(x)).unwrap()
        }
    };
    if v % 2 == 1 {
        p * unit
    } else {
        unit
    }
}

/// Whether `z^2 = a x^2 + b y^2` has a primitive solution mod `p^(2k+1)`
/// whose gradient has valuation at most `k`. Such a solution lifts to Q_p.
fn hensel_level(a: i64, b: i64, p: i64, k: u32) -> bool {
    let m = p.pow(2 * k + 1);
    let f = |x: i64, y: i64, z: i64| (a * x * x + b * y * y - z * z).rem_euclid(m) == 0;
    let grad_ok = |x: i64, y: i64, z: i64| {
        let g = ord_mod(2 * a * x, p, m).min(ord_mod(2 * b * y, p, m)).min(ord_mod(2 * z, p, m));
        g <= k
    };
    // Scale the unit coordinate to 1. At k > 0 skip positions whose partial
    // is a unit there: those solutions already show up at level 0.
    let coeff = [a, b, 1];
    for (pos, c) in coeff.into_iter().enumerate() {
        if k > 0 && ord_mod(2 * c, p, m) == 0 {
            continue;
        }
        for s in 0..m {
            for t in 0..m {
                let v = match pos {
                    0 => (1, s, t),
                    1 => (s, 1, t),
                    _ => (s, t, 1),
                };
                if f(v.0, v.1, v.2) && grad_ok(v.0, v.1, v.2) {
                    return true;
                }
            }
        }
    }
    false
}

/// Hilbert symbol by deciding solvability of `z^2 = a x^2 + b y^2` over Q_p
/// with congruences. For class representatives a primitive solution has
/// gradient valuation at most 1 (odd `p`) or 2 (`p = 2`), so the search
/// below is complete.
pub struct HilbertOracle {
    memo: HashMap<(i64, i64, i64), i8>,
}

impl HilbertOracle {
    pub fn new() -> Self {
        HilbertOracle { memo: HashMap::new() }
    }

    /// `p = 0` means the real place.
    pub fn symbol(&mut self, a: i64, b: i64, p: i64) -> i8 {
        assert!(a != 0 && b != 0);
        if p == 0 {
            // z^2 = a x^2 + b y^2 over R: x = 1 or y = 1 works once a or b > 0.
            return if a < 0 && b < 0 { -1 } else { 1 };
        }
        let key = (local_class(a, p), local_class(b, p), p);
        *self.memo.entry(key).or_insert_with(|| {
            let (a, b, p) = key;
            let levels = if p == 2 { 2 } else { 1 };
            if (0..=levels).any(|k| hensel_level(a, b, p, k)) {
                1
            } else {
                -1
            }
        })
    }
}

pub fn squarefree_i64(n: i64) -> i64 {
    let mut m = n.abs();
    let mut out = n.signum();
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= p;
        }
        p += 1;
    }
    out * m
}

pub fn perfect_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = (n as f64).sqrt() as i64;
    (r.saturating_sub(2)..=r + 2).find(|s| *s >= 0 && s * s == n)
}

/// A nonzero integer zero of `a x^2 + b y^2 + c z^2` with entries at most
/// `height` in absolute value.
pub fn small_zero(e: [i64; 3], height: i64) -> Option<[i64; 3]> {
    let [a, b, c] = e;
    for x in 0..=height {
        for y in -height..=height {
            let rest = -(a * x * x + b * y * y);
            if rest % c != 0 {
                continue;
            }
            if let Some(z) = perfect_sqrt(rest / c) {
                if z <= height && (x, y, z) != (0, 0, 0) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

pub fn small_rational(rng: &mut ChaCha8Rng, height: i64) -> Rational {
    let n = rng.gen_range(-height..=height);
    let d = rng.gen_range(1..=height);
    Rational::new(n, d).unwrap()
}

pub fn nonzero_rational(rng: &mut ChaCha8Rng, height: i64) -> Rational {
    loop {
        let r = small_rational(rng, height);
        if !r.is_zero() {
            return r;
        }
    }
}

/// A random squarefree integer in `[-bound, bound]`, not 0.
pub fn squarefree(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let n = rng.gen_range(-bound..=bound);
        if n != 0 && squarefree_i64(n) == n {
            return n;
        }
    }
}
