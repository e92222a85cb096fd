//! Exact integer primitives: primality, quadratic residue symbols, modular
//! square roots, integer roots and cyclotomic values.
//!
//! Everything here works on [`BigInt`]; `Φ_p(x)` leaves every machine word
//! behind for moderate `p` and `x`.

use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Bases of the strong probable-prime battery. Deterministic for every
/// `n < 3.3 * 10^24`.
const WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NtheoryError {
    #[error("modulus {0} must be odd and positive")]
    InvalidModulus(BigInt),
    #[error("{0} is not an odd prime")]
    NotOddPrime(BigInt),
}

/// Primality for arbitrary non-negative integers. Negative input is never prime.
pub fn is_prime(n: &BigInt) -> bool {
    let Some(n) = n.to_biguint() else {
        return false;
    };
    if n < BigUint::from(2u32) {
        return false;
    }
    for &w in &WITNESSES {
        if n == BigUint::from(w) {
            return true;
        }
        if (&n % w).is_zero() {
            return false;
        }
    }

    let one = BigUint::one();
    let n_minus_one = &n - &one;
    let shift = n_minus_one.trailing_zeros().unwrap_or(0);
    let odd = &n_minus_one >> shift;

    'witness: for &w in &WITNESSES {
        let mut x = BigUint::from(w).modpow(&odd, &n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..shift {
            x = (&x * &x) % &n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Convenience wrapper for the small primes that parametrize a problem.
pub fn is_prime_u64(n: u64) -> bool {
    is_prime(&BigInt::from(n))
}

/// The Jacobi symbol `(a/n)` for odd positive `n`.
///
/// `(a/1) = 1` for every `a`.
pub fn jacobi(a: &BigInt, n: &BigInt) -> Result<i8, NtheoryError> {
    if !n.is_positive() || n.is_even() {
        return Err(NtheoryError::InvalidModulus(n.clone()));
    }
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut sign = 1i8;
    while !a.is_zero() {
        let twos = a.trailing_zeros().unwrap_or(0);
        if twos > 0 {
            a >>= twos;
            // (2/n) = -1 exactly when n = 3, 5 (mod 8)
            let n_mod_8 = (&n % 8u32).to_u32().unwrap_or(0);
            if twos % 2 == 1 && (n_mod_8 == 3 || n_mod_8 == 5) {
                sign = -sign;
            }
        }
        if (&a % 4u32) == BigInt::from(3) && (&n % 4u32) == BigInt::from(3) {
            sign = -sign;
        }
        core::mem::swap(&mut a, &mut n);
        a = a.mod_floor(&n);
    }
    Ok(if n.is_one() { sign } else { 0 })
}

/// Legendre/Jacobi symbol for machine-sized arguments.
pub fn jacobi_i64(a: i64, n: u64) -> Result<i8, NtheoryError> {
    jacobi(&BigInt::from(a), &BigInt::from(n))
}

/// A square root of `d` modulo the odd prime `q`, by Tonelli–Shanks.
///
/// Returns `None` when `d` is a non-residue. Of the two roots `r` and
/// `q - r` the smaller one is returned.
pub fn sqrt_mod_prime(d: &BigInt, q: &BigInt) -> Result<Option<BigInt>, NtheoryError> {
    if q.is_even() || !is_prime(q) {
        return Err(NtheoryError::NotOddPrime(q.clone()));
    }
    let d = d.mod_floor(q);
    if d.is_zero() {
        return Ok(Some(BigInt::zero()));
    }
    if jacobi(&d, q)? != 1 {
        return Ok(None);
    }

    let (d, q) = (to_unsigned(&d), to_unsigned(q));
    let one = BigUint::one();
    let q_minus_one = &q - &one;
    let shift = q_minus_one.trailing_zeros().unwrap_or(0);
    let odd = &q_minus_one >> shift;

    // any non-residue works as the generator of the 2-Sylow subgroup
    let mut z = BigUint::from(2u32);
    while jacobi(&BigInt::from(z.clone()), &BigInt::from(q.clone()))? != -1 {
        z += 1u32;
    }

    let mut m = shift;
    let mut c = z.modpow(&odd, &q);
    let mut t = d.modpow(&odd, &q);
    let mut r = d.modpow(&((&odd + &one) >> 1), &q);
    while !t.is_one() {
        let mut i = 0;
        let mut t2 = t.clone();
        while !t2.is_one() {
            t2 = (&t2 * &t2) % &q;
            i += 1;
        }
        let b = c.modpow(&(BigUint::one() << (m - i - 1)), &q);
        m = i;
        c = (&b * &b) % &q;
        t = (&t * &c) % &q;
        r = (&r * &b) % &q;
    }

    let other = &q - &r;
    Ok(Some(BigInt::from(r.min(other))))
}

/// `Some(y)` with `y^l = n` and `y > 0`, if `n` is a perfect `l`-th power.
pub fn is_perfect_lth_power(n: &BigInt, l: u32) -> Option<BigInt> {
    if !n.is_positive() || l == 0 {
        return None;
    }
    let root = n.magnitude().nth_root(l);
    (root.pow(l) == *n.magnitude()).then(|| BigInt::from(root))
}

/// `Φ_p(x) = x^(p-1) + ... + x + 1`, evaluated by Horner's rule.
pub fn eval_phi(p: u64, x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for _ in 0..p {
        acc = acc * x + 1u32;
    }
    acc
}

fn to_unsigned(n: &BigInt) -> BigUint {
    debug_assert!(n.sign() != Sign::Minus);
    n.magnitude().clone()
}

/// Why a candidate `(p, c, l)` is not an admissible problem instance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TripleError {
    #[error("p = {0} must be a prime of at least 5")]
    BadP(u64),
    #[error("c = {0} must be an odd prime")]
    BadC(u64),
    #[error("p and c must be distinct (both are {0})")]
    Equal(u64),
    #[error("l = {0} must be at least 2")]
    BadL(u32),
}

/// A problem instance `(p, c, l)` for `c * y^l = Φ_p(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    p: u64,
    c: u64,
    l: u32,
}

impl Triple {
    pub fn new(p: u64, c: u64, l: u32) -> Result<Self, TripleError> {
        if p < 5 || !is_prime_u64(p) {
            return Err(TripleError::BadP(p));
        }
        if c < 3 || !is_prime_u64(c) {
            return Err(TripleError::BadC(c));
        }
        if p == c {
            return Err(TripleError::Equal(p));
        }
        if l < 2 {
            return Err(TripleError::BadL(l));
        }
        Ok(Self { p, c, l })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// `(-1)^((p-1)/2)`.
    pub fn delta(&self) -> i8 {
        delta(self.p)
    }

    /// `δp`, the discriminant of the quadratic field attached to `p`.
    pub fn delta_p(&self) -> i64 {
        i64::from(self.delta()) * self.p as i64
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p={}, c={}, l={})", self.p, self.c, self.l)
    }
}

/// `(-1)^((p-1)/2)` for odd `p`.
pub fn delta(p: u64) -> i8 {
    if p % 4 == 1 {
        1
    } else {
        -1
    }
}
