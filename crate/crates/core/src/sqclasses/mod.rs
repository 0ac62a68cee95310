//! Square classes of Q singular outside a finite prime set, and the search
//! for a value represented by two binary forms at once.
//!
//! A nonzero rational is P-singular when its valuation is even at every
//! prime outside P. Over Q the P-singular square classes have the basis
//! `(-1, p_1, ..., p_s)`. A common value of `<x0, x1>` and `<z0, z1>` is
//! sought as a product of basis elements whose exponent vector solves an
//! F_2-linear system built from Hilbert symbols at the primes of P and
//! signs at the real place. When the system is inconsistent the next prime
//! not yet in P is added and the system rebuilt.

mod gf2;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact_arith::{factor, is_prime, is_square, squarefree_part, Rational};
use crate::hilbert::hilbert_symbol;
use crate::places::{primes, Place};
use crate::qforms::{DiagonalForm, FormVector};

pub use gf2::{BitVector, GF2System};

/// Primes appended to P before the search is declared broken.
pub const MAX_APPENDED_PRIMES: usize = 64;

/// A class in Q*/Q*^2, stored as its squarefree integer representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClass(BigInt);

impl SquareClass {
    pub fn of(q: &Rational) -> Result<SquareClass> {
        Ok(SquareClass(squarefree_part(q)?.0))
    }

    pub fn representative(&self) -> &BigInt {
        &self.0
    }

    pub fn to_rational(&self) -> Rational {
        Rational::from_integer(self.0.clone())
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Basis `(-1, p_1, ..., p_s)` of the P-singular square classes, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularBasis {
    primes: Vec<BigUint>,
    basis: Vec<SquareClass>,
}

impl SingularBasis {
    /// Fails on repeated or non-prime entries. The primes are sorted.
    pub fn new(prime_set: &[BigUint]) -> Result<SingularBasis> {
        let mut primes = prime_set.to_vec();
        primes.sort();
        if let Some(w) = primes.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Precondition(format!("prime {} repeated", w[0])));
        }
        if let Some(p) = primes.iter().find(|p| !is_prime(p)) {
            return Err(Error::NotPrime(p.to_string()));
        }
        let basis = std::iter::once(SquareClass(BigInt::from(-1)))
            .chain(primes.iter().map(|p| SquareClass(BigInt::from(p.clone()))))
            .collect();
        Ok(SingularBasis { primes, basis })
    }

    pub fn primes(&self) -> &[BigUint] {
        &self.primes
    }

    pub fn basis(&self) -> &[SquareClass] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// The product of the basis elements selected by `exponents`.
    pub fn element(&self, exponents: &BitVector) -> Rational {
        let mut d = BigInt::one();
        for (b, e) in self.basis.iter().zip(exponents.iter()) {
            if e {
                d *= &b.0;
            }
        }
        Rational::from_integer(d)
    }

    /// Coordinates of the class of `q`, or `None` if `q` is not P-singular.
    pub fn coordinates(&self, q: &Rational) -> Result<Option<BitVector>> {
        let f = factor(q)?;
        let mut x = BitVector::zeros(self.len());
        x.set(0, f.sign < 0);
        for (p, e) in f.factors {
            if e % 2 == 0 {
                continue;
            }
            match self.primes.binary_search(&p) {
                Ok(i) => x.set(i + 1, true),
                Err(_) => return Ok(None),
            }
        }
        Ok(Some(x))
    }
}

pub fn singular_basis(prime_set: &[BigUint]) -> Result<SingularBasis> {
    SingularBasis::new(prime_set)
}

pub fn solve_gf2(system: &GF2System) -> Option<BitVector> {
    system.solve()
}

/// A value represented by both forms, with the vectors that represent it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonValue {
    pub d: Rational,
    /// `xi(xi_vector) = d`.
    pub xi_vector: FormVector,
    /// `zeta(zeta_vector) = d`.
    pub zeta_vector: FormVector,
    /// The prime set the linear system was solved over; empty when one of
    /// the forms is isotropic and no system was needed.
    pub prime_set: Vec<BigUint>,
}

fn lo(sign: i8) -> bool {
    sign < 0
}

fn binary_entries(f: &DiagonalForm) -> Result<(&Rational, &Rational)> {
    match f.entries() {
        [a, b] => Ok((a, b)),
        e => Err(Error::Dimension {
            expected: 2,
            got: e.len(),
        }),
    }
}

/// 2 and the odd primes at which some entry has odd valuation.
pub fn initial_prime_set(xi: &DiagonalForm, zeta: &DiagonalForm) -> Result<Vec<BigUint>> {
    let mut set = BTreeSet::new();
    set.insert(BigUint::from(2u32));
    for e in xi.entries().iter().chain(zeta.entries()) {
        for (p, k) in factor(e)?.factors {
            if k % 2 != 0 {
                set.insert(p);
            }
        }
    }
    Ok(set.into_iter().collect())
}

/// The stacked system: one row per prime of the basis for `xi`, then one
/// per prime for `zeta`, then one for the real place if either form is
/// definite there.
pub fn intersection_system(
    xi: &DiagonalForm,
    zeta: &DiagonalForm,
    basis: &SingularBasis,
) -> Result<GF2System> {
    let (x0, x1) = binary_entries(xi)?;
    let (z0, z1) = binary_entries(zeta)?;
    let k = basis.len();
    let betas: Vec<Rational> = basis.basis().iter().map(SquareClass::to_rational).collect();
    let mut sys = GF2System::new(k);
    for (a, b) in [(x0, x1), (z0, z1)] {
        let minus_ab = -(a * b);
        for p in basis.primes() {
            let place = Place::Finite(p.clone());
            let mut row = BitVector::zeros(k);
            for (j, beta) in betas.iter().enumerate() {
                row.set(j, lo(hilbert_symbol(&minus_ab, beta, &place)?));
            }
            sys.push(row, lo(hilbert_symbol(a, b, &place)?))?;
        }
    }
    let xi_definite = (x0 * x1).is_positive();
    let zeta_definite = (z0 * z1).is_positive();
    if xi_definite || zeta_definite {
        let mut row = BitVector::zeros(k);
        for (j, beta) in betas.iter().enumerate() {
            row.set(j, beta.is_negative());
        }
        let target = if xi_definite { x0 } else { z0 };
        sys.push(row, target.is_negative())?;
    }
    Ok(sys)
}

fn certify(xi: &DiagonalForm, zeta: &DiagonalForm, d: Rational, prime_set: Vec<BigUint>) -> Result<CommonValue> {
    let missing = |which: &str| Error::Internal(format!("{d} is not represented by {which}"));
    let xi_vector = xi.represents(&d)?.ok_or_else(|| missing("xi"))?;
    let zeta_vector = zeta.represents(&d)?.ok_or_else(|| missing("zeta"))?;
    Ok(CommonValue {
        d,
        xi_vector,
        zeta_vector,
        prime_set,
    })
}

/// A nonzero `d` represented by both binary forms, or `None` if their value
/// sets are disjoint.
///
/// The result always comes with explicit representing vectors for both
/// forms; failing to find them is an internal error.
pub fn common_value(xi: &DiagonalForm, zeta: &DiagonalForm) -> Result<Option<CommonValue>> {
    let (x0, x1) = binary_entries(xi)?;
    let (z0, z1) = binary_entries(zeta)?;
    if is_square(&-(x0 * x1)).is_some() {
        return certify(xi, zeta, z0.clone(), Vec::new()).map(Some);
    }
    if is_square(&-(z0 * z1)).is_some() {
        return certify(xi, zeta, x0.clone(), Vec::new()).map(Some);
    }
    let minus_zeta = zeta.scaled(&-Rational::one())?;
    if !xi.perp(&minus_zeta).is_isotropic()? {
        return Ok(None);
    }
    let mut prime_set = initial_prime_set(xi, zeta)?;
    let mut candidates = primes();
    for _ in 0..=MAX_APPENDED_PRIMES {
        let basis = SingularBasis::new(&prime_set)?;
        let sys = intersection_system(xi, zeta, &basis)?;
        if let Some(eps) = sys.solve() {
            let d = basis.element(&eps);
            return certify(xi, zeta, d, basis.primes().to_vec()).map(Some);
        }
        let next = candidates
            .by_ref()
            .map(BigUint::from)
            .find(|p| !prime_set.contains(p))
            .expect("infinitely many primes");
        prime_set.push(next);
        prime_set.sort();
    }
    Err(Error::Internal(format!(
        "no common value found after appending {MAX_APPENDED_PRIMES} primes"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(e: &[i64]) -> DiagonalForm {
        DiagonalForm::from_ints(e).unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn primes_of(ps: &[u32]) -> Vec<BigUint> {
        ps.iter().map(|&p| BigUint::from(p)).collect()
    }

    #[test]
    fn basis_examples() {
        let reps = |ps: &[u32]| -> Vec<i64> {
            singular_basis(&primes_of(ps))
                .unwrap()
                .basis()
                .iter()
                .map(|c| c.representative().try_into().unwrap())
                .collect()
        };
        assert_eq!(reps(&[]), vec![-1]);
        assert_eq!(reps(&[2, 3]), vec![-1, 2, 3]);
        assert_eq!(reps(&[5]), vec![-1, 5]);
        assert!(matches!(singular_basis(&primes_of(&[3, 3])), Err(Error::Precondition(_))));
        assert_eq!(singular_basis(&primes_of(&[2, 9])), Err(Error::NotPrime("9".into())));
    }

    #[test]
    fn coordinates_by_unique_factorization() {
        let b = singular_basis(&primes_of(&[2, 3, 7])).unwrap();
        assert_eq!(b.coordinates(&q("-63/8")).unwrap().unwrap().to_bits(), vec![1, 1, 0, 1]);
        assert_eq!(b.coordinates(&q("25")).unwrap().unwrap().to_bits(), vec![0, 0, 0, 0]);
        assert_eq!(b.coordinates(&q("5")).unwrap(), None);
        let x = BitVector::from_bits(&[1, 0, 1, 1]);
        assert_eq!(b.element(&x), q("-21"));
        assert_eq!(b.coordinates(&b.element(&x)).unwrap(), Some(x));
    }

    #[test]
    fn common_value_examples() {
        let cv = common_value(&form(&[1, -1]), &form(&[5, 7])).unwrap().unwrap();
        assert_eq!(cv.d, q("5"));
        let cv = common_value(&form(&[5, 7]), &form(&[3, -3])).unwrap().unwrap();
        assert_eq!(cv.d, q("5"));
        assert_eq!(common_value(&form(&[1, 1]), &form(&[-1, -1])).unwrap(), None);
        let cv = common_value(&form(&[-2, 1]), &form(&[-1, -1])).unwrap().unwrap();
        assert_eq!(cv.d, q("-1"));
        assert_eq!(cv.prime_set, primes_of(&[2]));
        assert_eq!(form(&[-2, 1]).eval(&cv.xi_vector).unwrap(), q("-1"));
        assert_eq!(form(&[-1, -1]).eval(&cv.zeta_vector).unwrap(), q("-1"));
        assert!(common_value(&form(&[1, 1, 1]), &form(&[1, 1])).is_err());
    }

    #[test]
    fn hand_traced_system() {
        let basis = singular_basis(&primes_of(&[2])).unwrap();
        let sys = intersection_system(&form(&[-2, 1]), &form(&[-1, -1]), &basis).unwrap();
        let rows: Vec<Vec<u8>> = sys.rows().iter().map(BitVector::to_bits).collect();
        assert_eq!(rows, vec![vec![0, 0], vec![1, 0], vec![1, 0]]);
        assert_eq!(sys.rhs(), &[false, true, true]);
        assert_eq!(sys.solve().unwrap().to_bits(), vec![1, 0]);
    }

    #[test]
    fn needs_extra_primes() {
        let xi = form(&[-12, -12]);
        let zeta = form(&[-7, 3]);
        // No class supported on {-1, 2, 3, 7} is a value of both forms.
        let initial = initial_prime_set(&xi, &zeta).unwrap();
        assert_eq!(initial, primes_of(&[2, 3, 7]));
        let basis = singular_basis(&initial).unwrap();
        for m in 0u8..16 {
            let bits: Vec<u8> = (0..4).map(|i| m >> i & 1).collect();
            let d = basis.element(&BitVector::from_bits(&bits));
            let both = xi.represents(&d).unwrap().is_some() && zeta.represents(&d).unwrap().is_some();
            assert!(!both, "{d}");
        }
        assert_eq!(intersection_system(&xi, &zeta, &basis).unwrap().solve(), None);
        let cv = common_value(&xi, &zeta).unwrap().unwrap();
        assert_eq!(cv.prime_set, primes_of(&[2, 3, 5, 7]));
        assert_eq!(cv.d, q("-15"));
        assert_eq!(xi.eval(&cv.xi_vector).unwrap(), cv.d);
        assert_eq!(zeta.eval(&cv.zeta_vector).unwrap(), cv.d);
    }
}
