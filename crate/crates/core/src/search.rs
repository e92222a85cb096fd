//! Brute-force oracles: small solutions of `c y^l = Φ_p(x)` and residue
//! enumeration for the auxiliary equation `α^2 c y^l = x^2 - δ p z^2`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::criteria::Alpha;
use crate::ntheory::{eval_phi, is_perfect_lth_power, is_prime_u64, Triple};

/// Largest prime accepted by [`mod_q_proper_solutions`].
pub const MOD_Q_BOUND: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("q = {q} exceeds the enumeration bound {bound}")]
    BoundExceeded { q: u64, bound: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// `c y^l = Φ_p(x)` with `y > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolutionRecord {
    pub triple: Triple,
    pub x: BigInt,
    pub y: BigInt,
}

impl SolutionRecord {
    pub fn is_valid(&self) -> bool {
        let t = &self.triple;
        BigInt::from(t.c()) * self.y.pow(t.l()) == eval_phi(t.p(), &self.x)
    }
}

/// Solutions with `lo <= x <= hi`, in increasing `x`.
pub fn search_range(triple: &Triple, lo: i64, hi: i64) -> Vec<SolutionRecord> {
    let c = BigInt::from(triple.c());
    (lo..=hi)
        .filter_map(|x| {
            let x = BigInt::from(x);
            let (quotient, rem) = eval_phi(triple.p(), &x).div_rem(&c);
            if !rem.is_zero() {
                return None;
            }
            is_perfect_lth_power(&quotient, triple.l()).map(|y| SolutionRecord {
                triple: *triple,
                x,
                y,
            })
        })
        .collect()
}

/// Every solution with `|x| <= x_bound`, sorted by `x`.
pub fn search_solutions(triple: &Triple, x_bound: u64) -> Vec<SolutionRecord> {
    let bound = i64::try_from(x_bound).unwrap_or(i64::MAX);
    search_range(triple, -bound, bound)
}

/// Exponent `k` of the modulus `q^k` used by [`mod_q_proper_solutions`]:
/// 2 at the ramified prime `p`, 1 elsewhere.
pub fn modulus_exponent(triple: &Triple, q: u64) -> u32 {
    if q == triple.p() {
        2
    } else {
        1
    }
}

/// Whether `x^2 - δ p z^2 = α^2 c y^l (mod q^k)` has a solution with
/// `x, z` not both divisible by `q`, by exhaustive enumeration of residues.
///
/// `k` is [`modulus_exponent`]. Modulo `p` alone every instance is solvable
/// (`x = y = 0`, `z = 1`), so the obstruction at `p` only shows modulo `p^2`.
pub fn mod_q_proper_solutions(triple: &Triple, alpha: Alpha, q: u64) -> Result<bool, SearchError> {
    if q > MOD_Q_BOUND {
        return Err(SearchError::BoundExceeded {
            q,
            bound: MOD_Q_BOUND,
        });
    }
    if !is_prime_u64(q) {
        return Err(SearchError::NotPrime(q));
    }
    let m = q.pow(modulus_exponent(triple, q));
    let residue = |v: i128| v.rem_euclid(i128::from(m)) as u64;
    let mul = |a: u64, b: u64| ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64;

    let dp = residue(i128::from(triple.delta_p()));
    let rhs_scale = residue(i128::from(alpha.value() * alpha.value() * triple.c()));

    // δp z^2, split by whether z is a unit mod q
    let mut t_unit = vec![false; m as usize];
    let mut t_any = vec![false; m as usize];
    for z in 0..m {
        let t = mul(dp, mul(z, z));
        t_any[t as usize] = true;
        if z % q != 0 {
            t_unit[t as usize] = true;
        }
    }
    let collect = |table: &[bool]| -> Vec<u64> { (0..m).filter(|&t| table[t as usize]).collect() };
    let (t_unit, t_any) = (collect(&t_unit), collect(&t_any));

    let mut squares_unit = vec![false; m as usize];
    let mut squares_any = vec![false; m as usize];
    for x in 0..m {
        let s = mul(x, x) as usize;
        squares_any[s] = true;
        if x % q != 0 {
            squares_unit[s] = true;
        }
    }

    let mut lhs = vec![false; m as usize];
    for s in 0..m {
        let subtrahends: &[u64] = if squares_unit[s as usize] {
            &t_any
        } else if squares_any[s as usize] {
            &t_unit
        } else {
            continue;
        };
        for &t in subtrahends {
            lhs[((s + m - t) % m) as usize] = true;
        }
    }

    Ok((0..m).any(|y| {
        let mut y_pow = 1u64 % m;
        for _ in 0..triple.l() {
            y_pow = mul(y_pow, y);
        }
        lhs[mul(rhs_scale, y_pow) as usize]
    }))
}
