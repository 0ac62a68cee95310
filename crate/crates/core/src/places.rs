//! The places of Q: the real place and one finite place per prime.
//!
//! Everything that knows the base field is Q lives here: valuations, the
//! real sign, local square tests and the enumeration of primes.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{is_prime, Rational};

/// A place of Q.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Real,
    /// Holds a prime; build it through [`Place::finite`].
    Finite(BigUint),
}

impl Place {
    /// The finite place at `p`, rejecting non-primes.
    pub fn finite(p: impl Into<BigUint>) -> Result<Place> {
        let p = p.into();
        if !is_prime(&p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        Ok(Place::Finite(p))
    }

    pub fn prime(&self) -> Option<&BigUint> {
        match self {
            Place::Real => None,
            Place::Finite(p) => Some(p),
        }
    }

    /// Over Q the only dyadic place is 2.
    pub fn is_dyadic(&self) -> bool {
        matches!(self, Place::Finite(p) if *p == BigUint::from(2u32))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => f.write_str("inf"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

/// `inf` for the real place, a base-10 prime otherwise.
impl FromStr for Place {
    type Err = Error;

    fn from_str(s: &str) -> Result<Place> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Place::Real);
        }
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(s.to_string()));
        }
        let p: BigUint = s.parse().map_err(|_| Error::Parse(s.to_string()))?;
        Place::finite(p)
    }
}

fn int_valuation(n: &BigUint, p: &BigUint) -> (i64, BigUint) {
    let mut v = 0;
    let mut rest = n.clone();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return (v, rest);
        }
        rest = q;
        v += 1;
    }
}

/// The p-adic valuation of a nonzero rational.
pub fn ord(p: &BigUint, q: &Rational) -> Result<i64> {
    Ok(unit_part(p, q)?.0)
}

/// Splits `q = p^v * n/d` with `n`, `d` prime to `p`; the sign stays on `n`.
pub(crate) fn unit_part(p: &BigUint, q: &Rational) -> Result<(i64, BigInt, BigUint)> {
    if q.is_zero() {
        return Err(Error::Zero("argument of ord"));
    }
    let (vn, n) = int_valuation(q.numer().magnitude(), p);
    let (vd, d) = int_valuation(q.denom().magnitude(), p);
    let n = BigInt::from_biguint(q.numer().sign(), n);
    Ok((vn - vd, n, d))
}

/// +1 or -1 under the unique ordering of Q.
pub fn sign_at_real(q: &Rational) -> Result<i8> {
    match q.signum() {
        0 => Err(Error::Zero("argument of sign")),
        s => Ok(s),
    }
}

/// Legendre symbol of an integer prime to the odd prime `p`, by Euler's criterion.
pub(crate) fn legendre(a: &BigInt, p: &BigUint) -> i8 {
    let pi = BigInt::from(p.clone());
    let r = a.mod_floor(&pi).to_biguint().expect("reduced residue is nonnegative");
    debug_assert!(!r.is_zero());
    let e = (p - 1u32) >> 1;
    if r.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

/// `n * d` reduced mod 8 as a residue in {1, 3, 5, 7}; `n/d` is a 2-adic unit
/// and `d^2 = 1 (mod 8)`, so this is the class of `n/d` mod 8.
pub(crate) fn dyadic_unit_mod8(n: &BigInt, d: &BigUint) -> u32 {
    let prod = n * BigInt::from(d.clone());
    prod.mod_floor(&BigInt::from(8)).to_u32().expect("residue mod 8")
}

/// Whether `q` is a square in the completion of Q at `v`.
pub fn is_local_square(q: &Rational, v: &Place) -> Result<bool> {
    match v {
        Place::Real => Ok(sign_at_real(q)? > 0),
        Place::Finite(p) => {
            let (val, n, d) = unit_part(p, q)?;
            if val.rem_euclid(2) != 0 {
                return Ok(false);
            }
            if *p == BigUint::from(2u32) {
                Ok(dyadic_unit_mod8(&n, &d) == 1)
            } else {
                Ok(legendre(&n, p) * legendre(&BigInt::from(d), p) == 1)
            }
        }
    }
}

/// All primes in increasing order.
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime(&BigUint::from(n)))
}

/// The n-th prime, counting from `nth_prime(1) = 2`.
///
/// Panics if `n == 0`.
pub fn nth_prime(n: usize) -> u64 {
    assert!(n >= 1, "primes are counted from 1");
    primes().nth(n - 1).expect("there are infinitely many primes")
}
