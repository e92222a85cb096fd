use num_bigint::BigInt;
use num_integer::Integer;
use phi_descent_core::gauss::{gauss_pair, phi_poly};
use phi_descent_core::ntheory::{eval_phi, is_prime_u64, Triple};
use phi_descent_core::series::IntPoly;
use proptest::prelude::*;

fn primes(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo..=hi).filter(|&p| is_prime_u64(p))
}

#[test]
fn small_pairs_match_hand_expansions() {
    // (2x^2 + x + 2)^2 - 5x^2 = 4 Φ_5 and (2 + x - x^2 - 2x^3)^2 + 7 (x + x^2)^2 = 4 Φ_7
    let five = gauss_pair(5).unwrap();
    let lhs = &(five.a() * five.a()) - &(five.b() * five.b()).scale(&BigInt::from(5));
    assert_eq!(lhs, phi_poly(5).scale(&BigInt::from(4)));
    let seven = gauss_pair(7).unwrap();
    assert_eq!(seven.a(), &IntPoly::from_i64s(&[2, 1, -1, -2]));
    let lhs = &(seven.a() * seven.a()) + &(seven.b() * seven.b()).scale(&BigInt::from(7));
    assert_eq!(lhs, phi_poly(7).scale(&BigInt::from(4)));
}

#[test]
fn pairs_are_normalized_and_palindromic() {
    for p in primes(5, 103) {
        let gp = gauss_pair(p).unwrap();
        let half = ((p - 1) / 2) as usize;
        assert_eq!(gp.a().degree(), Some(half));
        assert_eq!(gp.b().degree(), Some(half - 1));
        assert_eq!(gp.a().coeff(0), BigInt::from(2));
        assert_eq!(gp.b().coeff(0), BigInt::from(0));
        assert_eq!(gp.b().coeff(1), BigInt::from(1));
        assert!(gp.identity_holds());
        assert!(gp.reciprocal_signs().is_some(), "p = {p}");
    }
}

#[test]
fn identity_holds_pointwise() {
    for p in primes(5, 43) {
        let gp = gauss_pair(p).unwrap();
        let dp = BigInt::from(gp.delta()) * BigInt::from(p);
        for a in -25..=25 {
            let a = BigInt::from(a);
            let (av, bv) = gp.eval(&a);
            assert_eq!(&av * &av - &dp * &bv * &bv, eval_phi(p, &a) * 4);
        }
    }
}

#[test]
fn pair_gcd_lemma() {
    for p in primes(5, 59) {
        let gp = gauss_pair(p).unwrap();
        for a in -30..=30 {
            let d = gp.pair_gcd(&BigInt::from(a)).unwrap();
            assert!(d == 1 || d == 2);
            if matches!(p % 8, 1 | 7) {
                assert_eq!(d, 2, "p = {p}, a = {a}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // Build c y^l = Φ_p(a) backwards: any odd prime factor c of Φ_p(a) with y = 1
    // and l arbitrary, or the full square part when it is a perfect square times a prime.
    #[test]
    fn descent_produces_valid_instances(p_index in 0usize..6, a in -60i64..60, l in 2u32..7) {
        let p = [5u64, 7, 11, 13, 17, 23][p_index];
        let value = eval_phi(p, &BigInt::from(a));
        prop_assume!(value > BigInt::from(2));
        let Ok(c) = u64::try_from(&value) else { return Ok(()); };
        prop_assume!(is_prime_u64(c) && c != p);
        let t = Triple::new(p, c, l).unwrap();
        let inst = gauss_pair(p).unwrap().descend(&t, &BigInt::from(a), &BigInt::from(1)).unwrap();
        prop_assert!(inst.is_valid());
        prop_assert!(inst.x.gcd(&inst.z) == BigInt::from(1));
        if matches!(p % 8, 1 | 7) {
            prop_assert_eq!(inst.alpha, 1);
        }
    }
}
