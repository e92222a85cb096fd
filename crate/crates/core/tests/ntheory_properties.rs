use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use phi_descent_core::ntheory::{eval_phi, is_perfect_lth_power, is_prime_u64, jacobi};
use proptest::prelude::*;

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

#[test]
fn jacobi_is_multiplicative_in_the_numerator() {
    for n in (1..=99).step_by(2) {
        let n = big(n);
        for a in -50..=50 {
            let ja = jacobi(&big(a), &n).unwrap();
            for b in -50..=50 {
                let jb = jacobi(&big(b), &n).unwrap();
                assert_eq!(
                    jacobi(&big(a * b), &n).unwrap(),
                    ja * jb,
                    "a={a} b={b} n={n}"
                );
            }
        }
    }
}

#[test]
fn jacobi_agrees_with_euler_criterion() {
    for q in (3..=97).filter(|&q| is_prime_u64(q)) {
        let q = big(q as i64);
        let exponent = (&q - 1u32) / 2u32;
        for a in -200..=200 {
            let a = big(a);
            let euler = a.mod_floor(&q).modpow(&exponent, &q);
            let expected = if euler.is_zero() {
                0
            } else if euler.is_one() {
                1
            } else {
                assert_eq!(euler, &q - 1u32);
                -1
            };
            assert_eq!(jacobi(&a, &q).unwrap(), expected, "a={a} q={q}");
        }
    }
}

#[test]
fn phi_is_odd_and_one_mod_x() {
    for p in (3..=31).filter(|&p| is_prime_u64(p)) {
        for x in -50..=50 {
            let value = eval_phi(p, &big(x));
            assert!(value.is_odd(), "Φ_{p}({x}) even");
            assert!(value >= BigInt::one());
            if x != 0 {
                assert_eq!(value.mod_floor(&big(x)), BigInt::one().mod_floor(&big(x)));
            }
        }
    }
}

#[test]
fn phi_is_p_mod_p_squared_on_one_mod_p() {
    for p in (3..=19).filter(|&p| is_prime_u64(p)) {
        let p_big = big(p as i64);
        let p2 = &p_big * &p_big;
        for lambda in -10..=10 {
            let a = big(1 + lambda * p as i64);
            assert_eq!(eval_phi(p, &a).mod_floor(&p2), p_big, "p={p} λ={lambda}");
        }
    }
}

#[test]
fn perfect_power_round_trip() {
    for y in 1..=30 {
        for l in 1..=7u32 {
            let n = big(y).pow(l);
            assert_eq!(is_perfect_lth_power(&n, l), Some(big(y)));
            if y > 1 && l > 1 {
                assert_eq!(is_perfect_lth_power(&(&n + 1), l), None);
                assert_eq!(is_perfect_lth_power(&(&n - 1), l), None);
            }
        }
    }
}

proptest! {
    #[test]
    fn perfect_powers_of_large_roots(y in 2u64..u64::MAX, l in 2u32..9) {
        let n = BigInt::from(y).pow(l);
        prop_assert_eq!(is_perfect_lth_power(&n, l), Some(BigInt::from(y)));
        prop_assert_eq!(is_perfect_lth_power(&(n + 1), l), None);
    }

    #[test]
    fn jacobi_depends_on_residue_only(a in -10_000i64..10_000, k in -50i64..50, n in 0i64..500) {
        let n = big(2 * n + 1);
        let shifted = big(a) + big(k) * &n;
        prop_assert_eq!(jacobi(&big(a), &n), jacobi(&shifted, &n));
    }
}
