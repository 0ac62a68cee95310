//! Diagonal quadratic forms over Q: evaluation, local and global isotropy,
//! explicit isotropic vectors and represented values.

mod conic;

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::exact_arith::{is_square, Rational};
use crate::hilbert::{hasse_invariant, hilbert_symbol, relevant_places};
use crate::places::{is_local_square, Place};

pub use conic::solve_conic;

/// The form `a_1 x_1^2 + ... + a_n x_n^2` with every `a_i` nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagonalForm {
    entries: Vec<Rational>,
}

/// A coordinate vector in the ambient space of a form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormVector(pub Vec<Rational>);

impl FormVector {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    /// Standard basis vector `e_i` of length `dim`.
    pub fn basis(dim: usize, i: usize) -> FormVector {
        let mut v = vec![Rational::zero(); dim];
        v[i] = Rational::one();
        FormVector(v)
    }
}

impl Deref for FormVector {
    type Target = [Rational];
    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl From<Vec<Rational>> for FormVector {
    fn from(v: Vec<Rational>) -> Self {
        FormVector(v)
    }
}

impl DiagonalForm {
    pub fn new(entries: Vec<Rational>) -> Result<DiagonalForm> {
        if entries.is_empty() {
            return Err(Error::Dimension { expected: 1, got: 0 });
        }
        if entries.iter().any(Rational::is_zero) {
            return Err(Error::Zero("form entry"));
        }
        Ok(DiagonalForm { entries })
    }

    pub fn from_ints(entries: &[i64]) -> Result<DiagonalForm> {
        DiagonalForm::new(entries.iter().map(|&e| Rational::from(e)).collect())
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn determinant(&self) -> Rational {
        self.entries.iter().fold(Rational::one(), |acc, e| acc * e)
    }

    /// Orthogonal sum with `other`.
    pub fn perp(&self, other: &DiagonalForm) -> DiagonalForm {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        DiagonalForm { entries }
    }

    pub fn scaled(&self, c: &Rational) -> Result<DiagonalForm> {
        DiagonalForm::new(self.entries.iter().map(|e| e * c).collect())
    }

    fn check_dim(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                got: v.len(),
            });
        }
        Ok(())
    }

    /// `sum a_i v_i^2`.
    pub fn eval(&self, v: &[Rational]) -> Result<Rational> {
        self.check_dim(v)?;
        Ok(self
            .entries
            .iter()
            .zip(v)
            .fold(Rational::zero(), |acc, (a, x)| acc + a * x.square()))
    }

    /// The symmetric bilinear form `sum a_i u_i v_i`.
    pub fn polar(&self, u: &[Rational], v: &[Rational]) -> Result<Rational> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        Ok(self
            .entries
            .iter()
            .zip(u.iter().zip(v))
            .fold(Rational::zero(), |acc, (a, (x, y))| acc + a * x * y))
    }

    /// Whether the form has a nontrivial zero over the completion at `v`.
    pub fn is_isotropic_local(&self, v: &Place) -> Result<bool> {
        if let Place::Real = v {
            let pos = self.entries.iter().any(Rational::is_positive);
            let neg = self.entries.iter().any(Rational::is_negative);
            return Ok(pos && neg);
        }
        let minus_one = -Rational::one();
        let det = self.determinant();
        Ok(match self.dim() {
            1 => false,
            2 => is_local_square(&-det, v)?,
            3 => hasse_invariant(self, v)? == hilbert_symbol(&minus_one, &-det, v)?,
            4 => {
                !(is_local_square(&det, v)?
                    && hasse_invariant(self, v)? == -hilbert_symbol(&minus_one, &minus_one, v)?)
            }
            _ => true,
        })
    }

    /// Isotropy over Q.
    ///
    /// Binary forms are decided by `-a_1 a_2` being a square. From dimension
    /// three on, local isotropy is automatic at odd primes where every entry
    /// is a unit, so only the real place, 2 and the primes of the entries are
    /// checked.
    pub fn is_isotropic(&self) -> Result<bool> {
        match self.dim() {
            1 => Ok(false),
            2 => Ok(is_square(&-self.determinant()).is_some()),
            _ => {
                for v in relevant_places(&self.entries) {
                    if !self.is_isotropic_local(&v)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    /// The first place where the form is locally anisotropic, if any.
    /// A certificate of anisotropy from dimension three on.
    pub fn obstruction(&self) -> Result<Option<Place>> {
        for v in relevant_places(&self.entries) {
            if !self.is_isotropic_local(&v)? {
                return Ok(Some(v));
            }
        }
        Ok(None)
    }

    /// A primitive integral zero of a ternary form, or `None` if the form is
    /// anisotropic.
    pub fn isotropic_vector(&self) -> Result<Option<FormVector>> {
        if self.dim() != 3 {
            return Err(Error::Dimension {
                expected: 3,
                got: self.dim(),
            });
        }
        let [a, b, c] = [&self.entries[0], &self.entries[1], &self.entries[2]];
        // a x^2 + b + c z^2 = 0  <=>  z^2 - (-a/c) x^2 = -b/c
        let Some((z, x)) = solve_conic(&(-a / c), &(-b / c))? else {
            return Ok(None);
        };
        let v = primitive_integral(vec![x, Rational::one(), z]);
        debug_assert!(self.eval(&v)?.is_zero());
        Ok(Some(v))
    }

    /// Given a zero `v` of the form, returns `w` with `f(w) = a`.
    ///
    /// `U` is the first standard basis vector `e_i` with `a_i v_i != 0`, which
    /// makes the polar value `c = a_i v_i` nonzero; then
    /// `w = U + ((a - f(U)) / 2c) v`.
    pub fn isotropic_to_universal(&self, v: &[Rational], a: &Rational) -> Result<FormVector> {
        self.check_dim(v)?;
        if v.iter().all(Rational::is_zero) {
            return Err(Error::Precondition("isotropic vector is zero".into()));
        }
        if !self.eval(v)?.is_zero() {
            return Err(Error::Precondition("vector is not isotropic".into()));
        }
        let i = v
            .iter()
            .position(|x| !x.is_zero())
            .expect("nonzero vector has a nonzero coordinate");
        let u = FormVector::basis(self.dim(), i);
        let b = self.eval(&u)?;
        let c = self.polar(&u, v)?;
        let t = (a - b) / (Rational::from(2) * c);
        let w: Vec<Rational> = u.iter().zip(v).map(|(ui, vi)| ui + &t * vi).collect();
        debug_assert_eq!(&self.eval(&w)?, a);
        Ok(FormVector(w))
    }

    /// For a binary form `<x0, x1>`, a vector `(u, v)` with `x0 u^2 + x1 v^2 = d`.
    pub fn represents(&self, d: &Rational) -> Result<Option<FormVector>> {
        if self.dim() != 2 {
            return Err(Error::Dimension {
                expected: 2,
                got: self.dim(),
            });
        }
        if d.is_zero() {
            return Err(Error::Zero("represented value"));
        }
        let [x0, x1] = [&self.entries[0], &self.entries[1]];
        Ok(solve_conic(&(-x1 / x0), &(d / x0))?.map(|(u, v)| FormVector(vec![u, v])))
    }
}

/// Rescales a nonzero rational vector to a primitive integer vector.
fn primitive_integral(v: Vec<Rational>) -> FormVector {
    use num_integer::Integer;
    use num_traits::{One, Zero};
    let mut lcm = num_bigint::BigInt::one();
    for x in &v {
        lcm = lcm.lcm(x.denom());
    }
    let scaled: Vec<_> = v.iter().map(|x| x * Rational::from_integer(lcm.clone())).collect();
    let mut g = num_bigint::BigInt::zero();
    for x in &scaled {
        g = g.gcd(x.numer());
    }
    let g = Rational::from_integer(g);
    FormVector(scaled.iter().map(|x| x / &g).collect())
}
