//! The Gauss decomposition `4 Φ_p(x) = A_p(x)^2 - δ p B_p(x)^2` and the
//! descent from a solution of `c y^l = Φ_p(x)` to a proper solution of
//! `α^2 c y^l = x^2 - δ p z^2`.
//!
//! `A_p` and `B_p` come from the closed forms
//!
//! ```text
//! A = 2 sqrt(Φ) cosh(sqrt(p)/2 f),  B = 2 sqrt(Φ/p) sinh(sqrt(p)/2 f)   (p = 1 mod 4)
//! A = 2 sqrt(Φ) cos(sqrt(p)/2 f),   B = 2 sqrt(Φ/p) sin(sqrt(p)/2 f)    (p = 3 mod 4)
//! ```
//!
//! with `f(x) = sum_j (j/p) x^j / j`. Both cases collapse into the rational
//! series `C = sum_k (δp/4)^k f^(2k) / (2k)!` and `S = sum_k (δp/4)^k f^(2k+1) / (2k+1)!`,
//! giving `A = 2 sqrt(Φ) C` and `B = sqrt(Φ) S` with no irrational intermediates.
//! `C` and `S` are computed from a linear recurrence rather than from powers of `f`.
//! The series are carried a few terms past the degree of `A` and those guard
//! terms must vanish.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::ntheory::{delta, eval_phi, is_prime_u64, jacobi_i64, Triple};
use crate::series::{IntPoly, RatPoly, SeriesError};

/// Extra coefficients computed beyond `deg A = (p - 1) / 2`.
pub const GUARD_TERMS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaussError {
    #[error("p = {0} must be a prime of at least 5")]
    InvalidPrime(u64),
    #[error(transparent)]
    NonIntegralCoefficient(#[from] SeriesError),
    #[error("guard coefficient of x^{degree} in {poly} is nonzero for p = {p}")]
    GuardTermNonzero { p: u64, poly: char, degree: usize },
    #[error("{poly} has degree {found:?} for p = {p}, expected {expected}")]
    UnexpectedDegree {
        p: u64,
        poly: char,
        found: Option<usize>,
        expected: usize,
    },
    #[error("4 Φ_{0} != A^2 - δ p B^2")]
    IdentityFailure(u64),
    #[error("gcd(A_{p}({a}), B_{p}({a})) = {gcd}, outside {{1, 2}}")]
    LemmaViolation { p: u64, a: BigInt, gcd: BigInt },
    #[error("c * b^l != Φ_p(a) for {triple} at a = {a}, b = {b}")]
    NotASolution {
        triple: Triple,
        a: BigInt,
        b: BigInt,
    },
    #[error("Gauss pair for p = {pair} used with {triple}")]
    PrimeMismatch { pair: u64, triple: Triple },
}

/// `f_p(x) = sum_{j=1}^{order} (j/p) x^j / j`.
pub fn f_series(p: u64, order: usize) -> RatPoly {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(BigRational::zero());
    for j in 1..=order {
        let symbol = jacobi_i64(j as i64, p).expect("p is odd");
        coeffs.push(BigRational::new(BigInt::from(symbol), BigInt::from(j)));
    }
    RatPoly::series(coeffs, order)
}

/// `Φ_p` as an integer polynomial.
pub fn phi_poly(p: u64) -> IntPoly {
    IntPoly::new((0..p).map(|_| BigInt::one()).collect())
}

/// The integer polynomials of the Gauss identity for a prime `p >= 5`.
///
/// Normalized so that `A(0) = 2`, `B(0) = 0` and `B` has linear coefficient `+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussPair {
    p: u64,
    delta: i8,
    a: IntPoly,
    b: IntPoly,
}

impl GaussPair {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn delta(&self) -> i8 {
        self.delta
    }

    pub fn a(&self) -> &IntPoly {
        &self.a
    }

    pub fn b(&self) -> &IntPoly {
        &self.b
    }

    /// Exact check of `4 Φ_p = A^2 - δ p B^2`.
    pub fn identity_holds(&self) -> bool {
        let dp = BigInt::from(i64::from(self.delta) * self.p as i64);
        let lhs = phi_poly(self.p).scale(&BigInt::from(4));
        let rhs = &(&self.a * &self.a) - &(&self.b * &self.b).scale(&dp);
        lhs == rhs
    }

    /// Signs `(s, t)` with `x^m A(1/x) = s A(x)` and `x^m B(1/x) = t B(x)`,
    /// `m = (p - 1) / 2`, when both palindromic relations hold.
    pub fn reciprocal_signs(&self) -> Option<(i8, i8)> {
        let m = ((self.p - 1) / 2) as usize;
        let sign_of = |poly: &IntPoly| {
            let rev = poly.reciprocal(m);
            if rev == *poly {
                Some(1)
            } else if rev == -poly {
                Some(-1)
            } else {
                None
            }
        };
        Some((sign_of(&self.a)?, sign_of(&self.b)?))
    }

    /// `(A(a), B(a))`.
    pub fn eval(&self, a: &BigInt) -> (BigInt, BigInt) {
        (self.a.eval(a), self.b.eval(a))
    }

    /// `gcd(A(a), B(a))`, which is always 1 or 2, and 2 when `p = ±1 (mod 8)`.
    pub fn pair_gcd(&self, a: &BigInt) -> Result<u8, GaussError> {
        let (av, bv) = self.eval(a);
        let d = av.gcd(&bv);
        let forced_even = matches!(self.p % 8, 1 | 7);
        match (u8::try_from(&d), forced_even) {
            (Ok(1), false) => Ok(1),
            (Ok(2), _) => Ok(2),
            _ => Err(GaussError::LemmaViolation {
                p: self.p,
                a: a.clone(),
                gcd: d,
            }),
        }
    }

    /// Turns a solution `c b^l = Φ_p(a)` into a proper solution of
    /// `α^2 c y^l = x^2 - δ p z^2` with `gcd(x, z) = 1` and `y` odd.
    pub fn descend(
        &self,
        triple: &Triple,
        a: &BigInt,
        b: &BigInt,
    ) -> Result<EquationInstance, GaussError> {
        if triple.p() != self.p {
            return Err(GaussError::PrimeMismatch {
                pair: self.p,
                triple: *triple,
            });
        }
        let lhs = BigInt::from(triple.c()) * b.pow(triple.l());
        if !b.is_positive() || lhs != eval_phi(self.p, a) {
            return Err(GaussError::NotASolution {
                triple: *triple,
                a: a.clone(),
                b: b.clone(),
            });
        }
        let (x, z) = self.eval(a);
        let instance = match self.pair_gcd(a)? {
            1 => EquationInstance {
                triple: *triple,
                alpha: 2,
                x,
                y: b.clone(),
                z,
            },
            _ => EquationInstance {
                triple: *triple,
                alpha: 1,
                x: x / 2,
                y: b.clone(),
                z: z / 2,
            },
        };
        debug_assert!(instance.is_valid());
        Ok(instance)
    }
}

/// Computes `A_p`, `B_p` from the series expansion and verifies them.
pub fn gauss_pair(p: u64) -> Result<GaussPair, GaussError> {
    if p < 5 || !is_prime_u64(p) {
        return Err(GaussError::InvalidPrime(p));
    }
    let half_degree = ((p - 1) / 2) as usize;
    let order = half_degree + GUARD_TERMS;
    let delta = delta(p);

    let root = RatPoly::from(&phi_poly(p))
        .truncate(order)
        .series_sqrt(order)?;

    // E = exp(θ f) = C + θ S with θ^2 = δp/4 satisfies E' = θ f' E, and
    // k f_k = (k/p), so
    //   n c_n = (δp/4) sum_k (k/p) s_{n-k},   n s_n = sum_k (k/p) c_{n-k}
    let step = BigRational::new(BigInt::from(i64::from(delta) * p as i64), BigInt::from(4));
    let symbols: Vec<i8> = (0..=order)
        .map(|k| {
            if k == 0 {
                0
            } else {
                jacobi_i64(k as i64, p).expect("p is odd")
            }
        })
        .collect();
    let mut c = alloc::vec![BigRational::one()];
    let mut s = alloc::vec![BigRational::zero()];
    for n in 1..=order {
        let (mut c_sum, mut s_sum) = (BigRational::zero(), BigRational::zero());
        for k in 1..=n {
            match symbols[k] {
                1 => {
                    c_sum += &s[n - k];
                    s_sum += &c[n - k];
                }
                -1 => {
                    c_sum -= &s[n - k];
                    s_sum -= &c[n - k];
                }
                _ => {}
            }
        }
        let n = BigRational::from_integer(BigInt::from(n));
        c.push(c_sum * &step / &n);
        s.push(s_sum / n);
    }
    let even = RatPoly::series(c, order);
    let odd = RatPoly::series(s, order);

    let two = BigRational::from_integer(BigInt::from(2));
    let a_series = root.series_mul(&even, order).scale(&two);
    let b_series = root.series_mul(&odd, order);

    let a = checked_poly(p, 'A', &a_series, half_degree)?;
    let b = checked_poly(p, 'B', &b_series, half_degree - 1)?;

    let pair = GaussPair { p, delta, a, b };
    if !pair.identity_holds() {
        return Err(GaussError::IdentityFailure(p));
    }
    Ok(pair)
}

fn checked_poly(
    p: u64,
    poly: char,
    series: &RatPoly,
    expected: usize,
) -> Result<IntPoly, GaussError> {
    let half_degree = ((p - 1) / 2) as usize;
    if let Some(degree) =
        (half_degree + 1..=half_degree + GUARD_TERMS).find(|&d| !series.coeff(d).is_zero())
    {
        return Err(GaussError::GuardTermNonzero { p, poly, degree });
    }
    let int = series.to_integer_poly()?;
    if int.degree() != Some(expected) {
        return Err(GaussError::UnexpectedDegree {
            p,
            poly,
            found: int.degree(),
            expected,
        });
    }
    Ok(int)
}

/// A solution `(x, y, z)` of `α^2 c y^l = x^2 - δ p z^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationInstance {
    pub triple: Triple,
    pub alpha: u8,
    pub x: BigInt,
    pub y: BigInt,
    pub z: BigInt,
}

impl EquationInstance {
    /// The equation holds, `gcd(x, z) = 1`, `y` is odd and positive, `α ∈ {1, 2}`.
    pub fn is_valid(&self) -> bool {
        let t = &self.triple;
        let alpha = BigInt::from(self.alpha);
        let lhs = &alpha * &alpha * BigInt::from(t.c()) * self.y.pow(t.l());
        let rhs = &self.x * &self.x - BigInt::from(t.delta_p()) * &self.z * &self.z;
        matches!(self.alpha, 1 | 2)
            && lhs == rhs
            && self.x.gcd(&self.z).is_one()
            && self.y.is_positive()
            && self.y.is_odd()
    }
}

/// [`GaussPair::descend`] with a freshly computed pair.
pub fn descend(triple: &Triple, a: &BigInt, b: &BigInt) -> Result<EquationInstance, GaussError> {
    gauss_pair(triple.p())?.descend(triple, a, b)
}
