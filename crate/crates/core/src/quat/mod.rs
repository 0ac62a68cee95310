//! Quaternion algebras `(alpha, beta | Q)` and square roots in them.
//!
//! `i^2 = alpha`, `j^2 = beta`, `ij = k = -ji`. Quaternions are stored in
//! the basis `1, i, j, k`.

mod sqrt;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::exact_arith::Rational;
use crate::hilbert::{hilbert_symbol, relevant_places};
use crate::qforms::{DiagonalForm, FormVector};

pub use sqrt::{sqrt, sqrt_central_nonsplit, sqrt_central_split, sqrt_noncentral};

struct AlgebraInner {
    alpha: Rational,
    beta: Rational,
    split: OnceLock<bool>,
    // Zero of <-alpha, -beta, alpha beta>, present iff the algebra splits.
    isotropic: OnceLock<Result<FormVector>>,
}

/// The algebra `(alpha, beta | Q)`. Cheap to clone; clones share caches.
#[derive(Clone)]
pub struct QuaternionAlgebra(Arc<AlgebraInner>);

impl QuaternionAlgebra {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::Zero("alpha"));
        }
        if beta.is_zero() {
            return Err(Error::Zero("beta"));
        }
        Ok(QuaternionAlgebra(Arc::new(AlgebraInner {
            alpha,
            beta,
            split: OnceLock::new(),
            isotropic: OnceLock::new(),
        })))
    }

    pub fn from_ints(alpha: i64, beta: i64) -> Result<Self> {
        Self::new(alpha.into(), beta.into())
    }

    pub fn alpha(&self) -> &Rational {
        &self.0.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.0.beta
    }

    /// `<-alpha, -beta, alpha beta>`, the norm form restricted to pure quaternions.
    pub fn pure_norm_form(&self) -> DiagonalForm {
        let (a, b) = (self.alpha(), self.beta());
        DiagonalForm::new(vec![-a, -b, a * b]).expect("alpha and beta are nonzero")
    }

    /// Whether the algebra is isomorphic to 2x2 matrices over Q.
    ///
    /// Decided by isotropy of the pure norm form and cross-checked against
    /// the Hilbert symbols `(alpha, beta)_v` at every place.
    pub fn is_split(&self) -> bool {
        *self.0.split.get_or_init(|| {
            let by_form = self
                .pure_norm_form()
                .is_isotropic()
                .expect("entries are nonzero");
            let by_symbols = relevant_places([self.alpha(), self.beta()])
                .iter()
                .all(|v| hilbert_symbol(self.alpha(), self.beta(), v).expect("nonzero") == 1);
            assert_eq!(
                by_form, by_symbols,
                "isotropy and Hilbert symbols disagree for ({}, {})",
                self.alpha(),
                self.beta()
            );
            by_form
        })
    }

    pub fn element(&self, coords: [Rational; 4]) -> Quaternion {
        Quaternion {
            algebra: self.clone(),
            c: coords,
        }
    }

    pub fn integral(&self, coords: [i64; 4]) -> Quaternion {
        self.element(coords.map(Rational::from))
    }

    pub fn scalar(&self, a: Rational) -> Quaternion {
        self.element([a, Rational::zero(), Rational::zero(), Rational::zero()])
    }

    pub fn zero(&self) -> Quaternion {
        self.scalar(Rational::zero())
    }

    pub fn one(&self) -> Quaternion {
        self.scalar(Rational::one())
    }

    pub fn i(&self) -> Quaternion {
        self.integral([0, 1, 0, 0])
    }

    pub fn j(&self) -> Quaternion {
        self.integral([0, 0, 1, 0])
    }

    pub fn k(&self) -> Quaternion {
        self.integral([0, 0, 0, 1])
    }

    pub(crate) fn cached_isotropic_vector(&self, compute: impl FnOnce() -> Result<FormVector>) -> Result<FormVector> {
        self.0.isotropic.get_or_init(compute).clone()
    }
}

/// Algebras compare by their defining pair, not up to isomorphism.
impl PartialEq for QuaternionAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.alpha() == other.alpha() && self.beta() == other.beta())
    }
}

impl Eq for QuaternionAlgebra {}

impl fmt::Debug for QuaternionAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {} | Q)", self.alpha(), self.beta())
    }
}

/// `q0 + q1 i + q2 j + q3 k` in a fixed algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct Quaternion {
    algebra: QuaternionAlgebra,
    c: [Rational; 4],
}

impl Quaternion {
    pub fn algebra(&self) -> &QuaternionAlgebra {
        &self.algebra
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn scalar_part(&self) -> &Rational {
        &self.c[0]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    /// Zero scalar part.
    pub fn is_pure(&self) -> bool {
        self.c[0].is_zero()
    }

    /// In the centre Q.
    pub fn is_central(&self) -> bool {
        self.c[1..].iter().all(Rational::is_zero)
    }

    fn check_same(&self, other: &Quaternion) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    fn with(&self, c: [Rational; 4]) -> Quaternion {
        Quaternion {
            algebra: self.algebra.clone(),
            c,
        }
    }

    pub fn checked_add(&self, other: &Quaternion) -> Result<Quaternion> {
        self.check_same(other)?;
        let [a, b, c, d] = &self.c;
        let [e, f, g, h] = &other.c;
        Ok(self.with([a + e, b + f, c + g, d + h]))
    }

    pub fn checked_sub(&self, other: &Quaternion) -> Result<Quaternion> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Quaternion) -> Result<Quaternion> {
        self.check_same(other)?;
        let (al, be) = (self.algebra.alpha(), self.algebra.beta());
        let ab = al * be;
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &other.c;
        Ok(self.with([
            a0 * b0 + al * a1 * b1 + be * a2 * b2 - &ab * a3 * b3,
            a0 * b1 + a1 * b0 + be * (a3 * b2 - a2 * b3),
            a0 * b2 + a2 * b0 + al * (a1 * b3 - a3 * b1),
            a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
        ]))
    }

    pub fn scale(&self, s: &Rational) -> Quaternion {
        self.with(self.c.clone().map(|x| x * s))
    }

    /// `a - q_0` for `q = a + q_0`.
    pub fn conj(&self) -> Quaternion {
        let [a, b, c, d] = &self.c;
        self.with([a.clone(), -b, -c, -d])
    }

    /// `q conj(q) = q0^2 - alpha q1^2 - beta q2^2 + alpha beta q3^2`.
    pub fn norm(&self) -> Rational {
        let (al, be) = (self.algebra.alpha(), self.algebra.beta());
        let [a, b, c, d] = &self.c;
        a.square() - al * b.square() - be * c.square() + al * be * d.square()
    }

    /// `q^2 = (2 q0^2 - N(q)) + 2 q0 (q1 i + q2 j + q3 k)`.
    pub fn square(&self) -> Quaternion {
        let q0 = &self.c[0];
        let two_q0 = Rational::from(2) * q0;
        let s = &two_q0 * q0 - self.norm();
        let [_, b, c, d] = &self.c;
        self.with([s, &two_q0 * b, &two_q0 * c, &two_q0 * d])
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        self.with(self.c.clone().map(|x| -x))
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

// The operators panic on mismatched algebras; the `checked_*` methods report it.
impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        self.checked_add(rhs).expect("quaternions from different algebras")
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        self.checked_sub(rhs).expect("quaternions from different algebras")
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        self.checked_mul(rhs).expect("quaternions from different algebras")
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "i", "j", "k"];
        let mut wrote = false;
        for (x, name) in self.c.iter().zip(names) {
            if x.is_zero() {
                continue;
            }
            let mag = x.abs();
            let sign = if x.is_negative() { "-" } else { "+" };
            if wrote {
                write!(f, " {sign} ")?;
            } else if x.is_negative() {
                f.write_str("-")?;
            }
            match (name, mag.is_one()) {
                ("", _) => write!(f, "{mag}")?,
                (_, true) => f.write_str(name)?,
                (_, false) if mag.is_integer() => write!(f, "{mag}{name}")?,
                (_, false) => write!(f, "({mag}){name}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {:?}", self.algebra)
    }
}
