use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::Rational;
use crate::error::{Error, Result};

const TRIAL_BOUND: u32 = 10_000;

// Miller-Rabin with these bases is deterministic below 3.3 * 10^24.
const WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Exact signed factorization of a nonzero rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    /// Strictly increasing primes; denominator primes carry negative exponents.
    pub factors: Vec<(BigUint, i64)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn value(&self) -> Rational {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (p, e) in &self.factors {
            let pe = num_traits::pow(p.clone(), e.unsigned_abs() as usize);
            if *e > 0 {
                num *= pe;
            } else {
                den *= pe;
            }
        }
        let sign = if self.sign < 0 { Sign::Minus } else { Sign::Plus };
        Rational::new(BigInt::from_biguint(sign, num), BigInt::from(den))
            .expect("denominator is a product of primes")
    }
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_BOUND as usize;
        let mut composite = vec![false; n + 1];
        let mut out = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                out.push(i as u32);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        out
    })
}

/// Deterministic for every input below 3.3 * 10^24; a strong probable-prime
/// test with 13 fixed bases beyond that.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u32() {
        if small < 2 {
            return false;
        }
        if small <= TRIAL_BOUND {
            return small_primes().binary_search(&small).is_ok();
        }
    }
    for &p in &small_primes()[..25] {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let shift = n_minus_1.trailing_zeros().unwrap_or(0);
    let odd = &n_minus_1 >> shift;
    'witness: for &a in &WITNESSES {
        let mut x = BigUint::from(a).modpow(&odd, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..shift {
            x = &x * &x % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard's rho. `n` must be odd and composite.
fn pollard_brent(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        const BATCH: u64 = 64;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == *n {
            // The batch overshot; step one at a time from the saved point.
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1u32;
    }
}

fn push_prime_factors(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        out.push(n);
        return;
    }
    if let Some(r) = perfect_square_root(&n) {
        push_prime_factors(r.clone(), out);
        push_prime_factors(r, out);
        return;
    }
    let d = pollard_brent(&n);
    let rest = &n / &d;
    push_prime_factors(d, out);
    push_prime_factors(rest, out);
}

fn perfect_square_root(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Prime factorization of a positive integer as increasing `(prime, exponent)` pairs.
/// Returns an empty list for 1.
pub fn factor_integer(n: &BigUint) -> Vec<(BigUint, u32)> {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut rest = n.clone();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for &p in small_primes() {
        if rest.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut e = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            out.push((pb, e));
        }
    }
    if rest.is_one() {
        return out;
    }
    let mut large = Vec::new();
    push_prime_factors(rest, &mut large);
    large.sort();
    for p in large {
        match out.last_mut() {
            Some((last, e)) if *last == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// Signed factorization of a nonzero rational.
pub fn factor(q: &Rational) -> Result<Factorization> {
    if q.is_zero() {
        return Err(Error::Zero("factored value"));
    }
    let num = factor_integer(q.numer().magnitude());
    let den = factor_integer(q.denom().magnitude());
    let mut factors: Vec<(BigUint, i64)> = num
        .into_iter()
        .map(|(p, e)| (p, i64::from(e)))
        .chain(den.into_iter().map(|(p, e)| (p, -i64::from(e))))
        .collect();
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Factorization {
        sign: q.signum(),
        factors,
    })
}

/// Writes `q = s * t^2` with `s` a squarefree integer carrying the sign of `q`
/// and `t` a positive rational.
pub fn squarefree_part(q: &Rational) -> Result<(BigInt, Rational)> {
    let f = factor(q)?;
    let mut s = BigInt::from(f.sign);
    let mut t_num = BigUint::one();
    let mut t_den = BigUint::one();
    for (p, e) in f.factors {
        if e.rem_euclid(2) == 1 {
            s *= BigInt::from(p.clone());
        }
        let half = e.div_euclid(2);
        let pe = num_traits::pow(p, half.unsigned_abs() as usize);
        if half > 0 {
            t_num *= pe;
        } else {
            t_den *= pe;
        }
    }
    let t = Rational::new(BigInt::from(t_num), BigInt::from(t_den))?;
    Ok((s, t))
}

/// The nonnegative rational square root of `q`, if one exists.
pub fn is_square(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = perfect_square_root(q.numer().magnitude())?;
    let d = perfect_square_root(q.denom().magnitude())?;
    Some(Rational::new(BigInt::from(n), BigInt::from(d)).expect("nonzero denominator"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn factor_examples() {
        let f = factor(&q("360")).unwrap();
        assert_eq!(f.sign, 1);
        assert_eq!(f.factors, vec![(big(2), 3), (big(3), 2), (big(5), 1)]);

        let f = factor(&q("-5/8")).unwrap();
        assert_eq!(f.sign, -1);
        assert_eq!(f.factors, vec![(big(2), -3), (big(5), 1)]);

        let f = factor(&q("1")).unwrap();
        assert_eq!((f.sign, f.factors.len()), (1, 0));

        assert_eq!(factor(&Rational::zero()), Err(Error::Zero("factored value")));
    }

    #[test]
    fn factor_beyond_trial_division() {
        // 1000003 * 1000033 and a square of a large prime.
        let n = big(1_000_003) * big(1_000_033);
        assert_eq!(factor_integer(&n), vec![(big(1_000_003), 1), (big(1_000_033), 1)]);
        let p = big(4_294_967_291);
        assert_eq!(factor_integer(&(&p * &p * 12u32)), vec![(big(2), 2), (big(3), 1), (p, 2)]);
        let m = BigUint::from(18_446_744_073_709_551_557u64) * big(65_537);
        assert_eq!(factor_integer(&m).len(), 2);
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..200u64).filter(|&n| is_prime(&big(n))).collect();
        let brute: Vec<u64> = (0..200u64)
            .filter(|&n| n >= 2 && (2..n).all(|d| n % d != 0))
            .collect();
        assert_eq!(primes, brute);
        assert!(is_prime(&big(18_446_744_073_709_551_557)));
        // Strong pseudoprime to bases 2, 3, 5 and 7.
        assert!(!is_prime(&big(3_215_031_751)));
        assert!(!is_prime(&(big(1_000_003) * big(1_000_033))));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&q("18")).unwrap(), (BigInt::from(2), q("3")));
        assert_eq!(squarefree_part(&q("-4/9")).unwrap(), (BigInt::from(-1), q("2/3")));
        assert_eq!(squarefree_part(&q("5/8")).unwrap(), (BigInt::from(10), q("1/4")));
        assert!(squarefree_part(&Rational::zero()).is_err());
    }

    #[test]
    fn square_examples() {
        assert_eq!(is_square(&q("49/4")), Some(q("7/2")));
        assert_eq!(is_square(&q("2")), None);
        assert_eq!(is_square(&q("0")), Some(q("0")));
        assert_eq!(is_square(&q("-4")), None);
        assert_eq!(is_square(&q("4/3")), None);
    }
}
