//! Hilbert symbols and Hasse invariants at the places of Q.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::exact_arith::{factor_integer, Rational};
use crate::places::{dyadic_unit_mod8, legendre, unit_part, Place};
use crate::qforms::DiagonalForm;

/// The Hilbert symbol `(a, b)_v`, as +1 or -1.
///
/// Evaluated from the valuations and unit residues of `a` and `b` at `v`;
/// only their square classes matter, so no factorization is needed.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: &Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Zero("Hilbert symbol argument"));
    }
    let p = match v {
        Place::Real => {
            return Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 });
        }
        Place::Finite(p) => p,
    };
    let (va, na, da) = unit_part(p, a)?;
    let (vb, nb, db) = unit_part(p, b)?;
    let va = va.rem_euclid(2) as u32;
    let vb = vb.rem_euclid(2) as u32;

    if *p == BigUint::from(2u32) {
        let u = dyadic_unit_mod8(&na, &da);
        let w = dyadic_unit_mod8(&nb, &db);
        let eps = |x: u32| ((x - 1) / 2) % 2;
        let omega = |x: u32| ((x * x - 1) / 8) % 2;
        let e = eps(u) * eps(w) + va * omega(w) + vb * omega(u);
        return Ok(if e.is_multiple_of(2) { 1 } else { -1 });
    }

    let mut s: i8 = 1;
    // (-1)^(va * vb * (p-1)/2)
    if va == 1 && vb == 1 && (p % 4u32) == BigUint::from(3u32) {
        s = -s;
    }
    if vb == 1 {
        s *= legendre(&na, p) * legendre(&BigInt::from(da), p);
    }
    if va == 1 {
        s *= legendre(&nb, p) * legendre(&BigInt::from(db), p);
    }
    Ok(s)
}

/// `prod_{i<j} (a_i, a_j)_v`; +1 for forms of dimension at most 1.
pub fn hasse_invariant(f: &DiagonalForm, v: &Place) -> Result<i8> {
    let e = f.entries();
    let mut s = 1;
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            s *= hilbert_symbol(&e[i], &e[j], v)?;
        }
    }
    Ok(s)
}

/// The real place, 2, and every prime dividing a numerator or denominator of
/// `values`, in increasing order. Outside this set all symbols among the
/// values are +1.
pub fn relevant_places<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Vec<Place> {
    let mut primes = BTreeSet::new();
    primes.insert(BigUint::from(2u32));
    for q in values {
        for n in [q.numer().magnitude(), q.denom().magnitude()] {
            if n.bits() > 1 {
                primes.extend(factor_integer(n).into_iter().map(|(p, _)| p));
            }
        }
    }
    std::iter::once(Place::Real)
        .chain(primes.into_iter().map(Place::Finite))
        .collect()
}

/// Places where `(a, b)_v = -1`. By reciprocity there is always an even number.
pub fn ramified_places(a: &Rational, b: &Rational) -> Result<Vec<Place>> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Zero("Hilbert symbol argument"));
    }
    let mut out = Vec::new();
    for v in relevant_places([a, b]) {
        if hilbert_symbol(a, b, &v)? == -1 {
            out.push(v);
        }
    }
    Ok(out)
}

/// Multiplies `(a, b)_v` over the places where it can be -1 and reports
/// whether the product is +1. Always true; kept as a self-test.
pub fn reciprocity_check(a: &Rational, b: &Rational) -> Result<bool> {
    Ok(ramified_places(a, b)?.len() % 2 == 0)
}
