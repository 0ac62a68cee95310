//! Square roots: non-central elements, central elements of split algebras,
//! central elements of division algebras, and the dispatcher.

use super::{Quaternion, QuaternionAlgebra};
use crate::error::{Error, Result};
use crate::exact_arith::{is_square, Rational};
use crate::qforms::{solve_conic, DiagonalForm, FormVector};
use crate::sqclasses::common_value;

/// Square root of a non-central quaternion, or `None` if there is none.
///
/// Writing the root as `r0 + r'`, squaring gives `r0^2 = (q0 +- d)/2` with
/// `d^2 = N(q)` and `r' = q'/(2 r0)`. The `+` branch is tried first. Apart
/// from the returned `r`, the only other root is `-r`.
pub fn sqrt_noncentral(q: &Quaternion) -> Result<Option<Quaternion>> {
    if q.is_central() {
        return Err(Error::Precondition("quaternion is central".into()));
    }
    let Some(d) = is_square(&q.norm()) else {
        return Ok(None);
    };
    let two = Rational::from(2);
    let q0 = q.scalar_part();
    let r0 = [(q0 + &d) / &two, (q0 - &d) / &two]
        .iter()
        .filter(|a| !a.is_zero())
        .find_map(is_square);
    let Some(r0) = r0 else {
        return Ok(None);
    };
    let denom = &two * &r0;
    let [_, q1, q2, q3] = q.coords();
    Ok(Some(q.algebra().element([r0.clone(), q1 / &denom, q2 / &denom, q3 / &denom])))
}

fn split_isotropic_vector(a: &QuaternionAlgebra) -> Result<FormVector> {
    let (alpha, beta) = (a.alpha(), a.beta());
    if let Some(c) = is_square(alpha) {
        return Ok(FormVector(vec![Rational::zero(), c, Rational::one()]));
    }
    // b^2 - alpha c^2 = -alpha/beta gives the zero (1, b, c) of <-alpha, -beta, alpha beta>.
    match solve_conic(alpha, &(-alpha / beta))? {
        Some((b, c)) => Ok(FormVector(vec![Rational::one(), b, c])),
        None => Err(Error::Precondition(format!("algebra {a:?} is not split"))),
    }
}

/// A pure quaternion squaring to `a` in a split algebra. Never fails for
/// nonzero `a`.
///
/// A zero `V` of the pure norm form is built once per algebra and cached.
/// Then `W` with `<-alpha, -beta, alpha beta>(W) = -a` gives `q = W_1 i + W_2 j + W_3 k`.
pub fn sqrt_central_split(alg: &QuaternionAlgebra, a: &Rational) -> Result<Quaternion> {
    if a.is_zero() {
        return Err(Error::Zero("central argument"));
    }
    if !alg.is_split() {
        return Err(Error::Precondition(format!("algebra {alg:?} is not split")));
    }
    let v = alg.cached_isotropic_vector(|| split_isotropic_vector(alg))?;
    let w = alg.pure_norm_form().isotropic_to_universal(&v, &-a)?;
    Ok(alg.element([Rational::zero(), w[0].clone(), w[1].clone(), w[2].clone()]))
}

/// A square root of the central `a` in a division algebra, or `None` if `a`
/// is not a square there.
///
/// After the shortcuts for `a`, `a alpha` and `a beta` squares, looks for `d`
/// represented by both `<a, -alpha>` and `<beta, -alpha beta>`, solves
/// `d/beta = l0^2 - alpha l1^2` and `d/a = m0^2 - a alpha m1^2`, and returns
/// `a (m1/m0) i + (l0/m0) j + (l1/m0) k`.
pub fn sqrt_central_nonsplit(alg: &QuaternionAlgebra, a: &Rational) -> Result<Option<Quaternion>> {
    if a.is_zero() {
        return Err(Error::Zero("central argument"));
    }
    if alg.is_split() {
        return Err(Error::Precondition(format!("algebra {alg:?} is split")));
    }
    let (alpha, beta) = (alg.alpha(), alg.beta());
    let zero = Rational::zero;
    if let Some(c) = is_square(a) {
        return Ok(Some(alg.scalar(c)));
    }
    if let Some(c) = is_square(&(a * alpha)) {
        return Ok(Some(alg.element([zero(), c / alpha, zero(), zero()])));
    }
    if let Some(c) = is_square(&(a * beta)) {
        return Ok(Some(alg.element([zero(), zero(), c / beta, zero()])));
    }
    let xi = DiagonalForm::new(vec![a.clone(), -alpha])?;
    let zeta = DiagonalForm::new(vec![beta.clone(), -(alpha * beta)])?;
    let Some(cv) = common_value(&xi, &zeta)? else {
        return Ok(None);
    };
    let d = cv.d;
    let unsolved = |what: &str| Error::Internal(format!("norm equation {what} has no solution"));
    let (l0, l1) = solve_conic(alpha, &(&d / beta))?.ok_or_else(|| unsolved("d/beta"))?;
    let a_alpha = a * alpha;
    let (mut m0, mut m1) = solve_conic(&a_alpha, &(&d / a))?.ok_or_else(|| unsolved("d/a"))?;
    if m0.is_zero() {
        // Multiply by the norm-one element ((1 + D) + 2 sqrt D) / (1 - D), D = a alpha.
        let den = Rational::one() - &a_alpha;
        let (n0, n1) = ((Rational::one() + &a_alpha) / &den, Rational::from(2) / &den);
        (m0, m1) = (&a_alpha * &m1 * &n1, m1 * n0);
    }
    Ok(Some(alg.element([zero(), a * &m1 / &m0, l0 / &m0, l1 / &m0])))
}

/// A square root of any quaternion, or `None` if it is not a square.
///
/// Central squares of Q get their nonnegative rational root; other central
/// elements go to the split or division-algebra method. Every returned root
/// is checked by squaring.
pub fn sqrt(q: &Quaternion) -> Result<Option<Quaternion>> {
    let alg = q.algebra();
    let root = if q.is_zero() {
        Some(alg.zero())
    } else if !q.is_central() {
        sqrt_noncentral(q)?
    } else {
        let a = q.scalar_part();
        if let Some(c) = is_square(a) {
            Some(alg.scalar(c))
        } else if alg.is_split() {
            Some(sqrt_central_split(alg, a)?)
        } else {
            sqrt_central_nonsplit(alg, a)?
        }
    };
    if let Some(r) = &root {
        if r.square() != *q {
            return Err(Error::Internal(format!("computed root {r} does not square to {q}")));
        }
    }
    Ok(root)
}
