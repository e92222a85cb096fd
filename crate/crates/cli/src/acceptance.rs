//! The acceptance checks, runnable from the binary (`selftest`) and from the
//! `acceptance` test target. Each check returns an [`Outcome`] instead of
//! panicking so a failure in one does not hide the others. Everything here
//! runs on the calling thread.

use anyhow::{ensure, Context, Result};
use num_bigint::BigInt;

use phi_descent_core::criteria::{
    local_solvability, verdict_with, Alpha, Criterion, Evidence, Status,
};
use phi_descent_core::ntheory::{eval_phi, is_prime_u64, Triple};
use phi_descent_core::quadforms::{discriminant, negative_pell_solvable, prime_form, QuadForm};
use phi_descent_core::search::{mod_q_proper_solutions, SolutionRecord};

use crate::cache::{ClassGroupCache, GaussCache};
use crate::render::{OutcomeDoc, SelftestDoc, SCHEMA};
use crate::scan;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{mark}] criterion {}: {} ({})",
            self.id, self.name, self.detail
        )
    }
}

fn outcome(id: u8, name: &'static str, check: impl FnOnce() -> Result<String>) -> Outcome {
    let (passed, detail) = match check() {
        Ok(detail) => (true, detail),
        Err(e) => (false, format!("{e:#}")),
    };
    Outcome {
        id,
        name,
        passed,
        detail,
    }
}

fn primes(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime_u64(n)).collect()
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Parameters of the solution-search cross-check.
pub const ORACLE_P_MAX: u64 = 50;
pub const ORACLE_C_MAX: u64 = 50;
pub const ORACLE_L: [u32; 5] = [2, 3, 4, 5, 6];
pub const ORACLE_X_BOUND: u64 = 200;

/// Shared state: one Gauss cache and one class group cache for the whole run.
#[derive(Debug, Default)]
pub struct Suite {
    pub gauss: GaussCache,
    pub groups: ClassGroupCache,
}

pub fn gauss_sweep(suite: &Suite) -> Outcome {
    outcome(1, "Gauss identity for every prime 5 <= p <= 199", || {
        let ps = primes(5, 199);
        ps.iter().try_for_each(|&p| -> Result<()> {
            let pair = suite.gauss.get(p).with_context(|| format!("p = {p}"))?;
            let m = ((p - 1) / 2) as usize;
            ensure!(
                pair.a().coeff(0) == big(2) && pair.b().coeff(0) == big(0),
                "p = {p}: constant terms"
            );
            ensure!(pair.a().degree() == Some(m), "p = {p}: deg A");
            ensure!(pair.b().degree() == Some(m - 1), "p = {p}: deg B");
            ensure!(pair.identity_holds(), "p = {p}: identity");
            ensure!(
                pair.reciprocal_signs().is_some(),
                "p = {p}: palindromic symmetry"
            );
            Ok(())
        })?;
        Ok(format!("{} primes", ps.len()))
    })
}

pub fn criterion_ii_example(suite: &Suite) -> Outcome {
    outcome(
        2,
        "(137, 13, l) for l in {2, 4, 6} fails by criterion II",
        || {
            for l in [2, 4, 6] {
                let v = verdict_with(&Triple::new(137, 13, l)?, &suite.groups)?;
                ensure!(v.status() == Status::NoSolutions, "l = {l}: {v}");
                ensure!(v.criterion == Some(Criterion::II), "l = {l}: {v}");
                match v.evidence {
                    Evidence::Symbol(s) => ensure!(
                        (s.top, s.bottom, s.value) == (13, 137, -1),
                        "l = {l}: evidence {s:?}"
                    ),
                    Evidence::Class(_) => anyhow::bail!("l = {l}: expected a symbol"),
                }
            }
            Ok("(13/137) = -1".to_owned())
        },
    )
}

pub fn criterion_iii_example(suite: &Suite) -> Outcome {
    outcome(3, "(47, 3, 5k) for k = 1..3 fails by criterion III", || {
        let d = discriminant(47);
        ensure!(d == big(-47), "D = {d}");
        let group = scan_group(suite, &d)?;
        ensure!(
            group.class_number() == 5,
            "h(-47) = {}",
            group.class_number()
        );
        let f = prime_form(&d, &big(3))?;
        ensure!(f == QuadForm::from_i64s(3, 1, 4)?, "prime form {f}");
        ensure!(!group.is_lth_power_class(&f, 5)?, "{f} is a 5th power");
        for k in 1..=3 {
            let v = verdict_with(&Triple::new(47, 3, 5 * k)?, &suite.groups)?;
            ensure!(v.criterion == Some(Criterion::III), "l = {}: {v}", 5 * k);
        }
        Ok("h(-47) = 5, prime form (3, 1, 4) not a 5th power".to_owned())
    })
}

fn scan_group(suite: &Suite, d: &BigInt) -> Result<std::sync::Arc<phi_descent_core::ClassGroup>> {
    use phi_descent_core::criteria::ClassGroups;
    Ok(suite.groups.class_group(d)?)
}

/// Every solution of every valid triple with `p <= 50`, `c <= 50`,
/// `2 <= l <= 6`, `|x| <= 200`, sorted by triple then `x`.
pub fn oracle_solutions() -> Vec<SolutionRecord> {
    let triples = scan::triples(ORACLE_P_MAX, ORACLE_C_MAX, &ORACLE_L);
    triples
        .iter()
        .flat_map(|t| phi_descent_core::search::search_solutions(t, ORACLE_X_BOUND))
        .collect()
}

pub fn oracle_consistency(suite: &Suite) -> Outcome {
    outcome(4, "no solution found where a criterion applies", || {
        let triples = scan::triples(ORACLE_P_MAX, ORACLE_C_MAX, &ORACLE_L);
        let verdicts = triples
            .iter()
            .map(|t| verdict_with(t, &suite.groups))
            .collect::<Result<Vec<_>, _>>()?;
        let solutions = oracle_solutions();
        for s in &solutions {
            ensure!(s.is_valid(), "invalid record {s:?}");
            let v = &verdicts[triples.binary_search(&s.triple).expect("scanned triple")];
            ensure!(
                v.status() == Status::Inconclusive,
                "{v} but x = {}, y = {} is a solution",
                s.x,
                s.y
            );
        }
        let decided = verdicts
            .iter()
            .filter(|v| v.status() == Status::NoSolutions)
            .count();
        Ok(format!(
            "{} triples, {decided} decided, {} solutions all on inconclusive triples",
            triples.len(),
            solutions.len()
        ))
    })
}

pub fn lemma_suite(suite: &Suite) -> Outcome {
    outcome(
        5,
        "gcd lemma and congruences for p <= 59, |a| <= 30",
        || {
            let ps = primes(5, 59);
            ps.iter().try_for_each(|&p| -> Result<()> {
                let pair = suite.gauss.get(p)?;
                let p_big = big(p as i64);
                let p2 = &p_big * &p_big;
                for a in -30..=30 {
                    let a_big = big(a);
                    let phi = eval_phi(p, &a_big);
                    ensure!(phi.bit(0), "Phi_{p}({a}) is even");
                    let g = pair.pair_gcd(&a_big)?;
                    ensure!(
                        !matches!(p % 8, 1 | 7) || g == 2,
                        "p = {p}, a = {a}: gcd {g}, expected 2"
                    );
                }
                for lambda in -10..=10i64 {
                    let x = big(1 + lambda * p as i64);
                    let r = eval_phi(p, &x) - &p_big;
                    ensure!((r % &p2) == big(0), "Phi_{p}(1 + {lambda} p) != p mod p^2");
                }
                Ok(())
            })?;
            Ok(format!("{} primes", ps.len()))
        },
    )
}

pub fn descent_example(suite: &Suite) -> Outcome {
    outcome(
        6,
        "descent of (5, 61, 2) at (9, 11) and of every found solution",
        || {
            let t = Triple::new(5, 61, 2)?;
            let inst = suite.gauss.get(5)?.descend(&t, &big(9), &big(11))?;
            ensure!(
                (inst.alpha, &inst.x, &inst.y, &inst.z) == (2, &big(173), &big(11), &big(9)),
                "got {inst:?}"
            );
            ensure!(big(4) * 61 * 121 == big(29524), "4 * 61 * 121");
            ensure!(big(173 * 173 - 5 * 81) == big(29524), "173^2 - 5 * 9^2");
            ensure!(inst.is_valid(), "instance invalid");
            let solutions = oracle_solutions();
            for s in &solutions {
                let inst = suite
                    .gauss
                    .get(s.triple.p())?
                    .descend(&s.triple, &s.x, &s.y)?;
                ensure!(inst.is_valid(), "descent of {s:?} invalid: {inst:?}");
            }
            Ok(format!(
                "(2, 173, 11, 9); {} searched solutions descend",
                solutions.len()
            ))
        },
    )
}

/// The 30 triples cross-checked against residue enumeration: an even spread
/// over all valid triples with `p, c < 100`, `2 <= l <= 6`.
pub fn local_sample() -> Vec<Triple> {
    let all = scan::triples(97, 97, &[2, 3, 4, 5, 6]);
    let stride = all.len() / 30;
    all.into_iter().step_by(stride).take(30).collect()
}

pub fn local_consistency(_suite: &Suite) -> Outcome {
    outcome(
        7,
        "local obstructions match residue enumeration for q <= 100",
        || {
            let sample = local_sample();
            ensure!(sample.len() == 30, "sample of {}", sample.len());
            let qs = primes(2, 100);
            let obstructed: Vec<bool> = sample
                .iter()
                .map(|t| -> Result<bool> {
                    let mut any = false;
                    for alpha in [Alpha::One, Alpha::Two] {
                        let report = local_solvability(t, alpha);
                        for o in &report.obstructions {
                            ensure!(
                                o.place == t.c() || o.place == t.p(),
                                "{t}: obstruction at {}",
                                o.place
                            );
                        }
                        for &q in &qs {
                            let solvable = mod_q_proper_solutions(t, alpha, q)?;
                            ensure!(
                                solvable != report.is_obstructed_at(q),
                                "{t}, alpha = {}, q = {q}: enumeration says {solvable}",
                                alpha.value()
                            );
                        }
                        any |= !report.everywhere_solvable();
                    }
                    Ok(any)
                })
                .collect::<Result<_>>()?;
            let n = obstructed.iter().filter(|&&o| o).count();
            ensure!(
                n > 0 && n < sample.len(),
                "sample is not mixed: {n} obstructed"
            );
            Ok(format!(
                "30 triples x 2 alphas x {} primes, {n} triples obstructed",
                qs.len()
            ))
        },
    )
}

pub fn group_laws(suite: &Suite) -> Outcome {
    outcome(
        8,
        "class group laws for p <= 101, class numbers, negative Pell",
        || {
            let ps = primes(5, 101);
            ps.iter().try_for_each(|&p| -> Result<()> {
                let g = scan_group(suite, &discriminant(p))?;
                let n = g.class_number();
                let e = g.identity_index();
                ensure!(
                    g.index_of(&QuadForm::principal(g.discriminant()))? == e,
                    "p = {p}: identity"
                );
                for i in 0..n {
                    ensure!(
                        g.mul(i, e) == i && g.mul(e, i) == i,
                        "p = {p}: identity law"
                    );
                    ensure!(g.mul(i, g.inverse(i)) == e, "p = {p}: inverse law");
                    for j in 0..n {
                        ensure!(g.mul(i, j) == g.mul(j, i), "p = {p}: commutativity");
                        for k in 0..n {
                            ensure!(
                                g.mul(g.mul(i, j), k) == g.mul(i, g.mul(j, k)),
                                "p = {p}: associativity"
                            );
                        }
                    }
                }
                Ok(())
            })?;
            let h = |d: i64| -> Result<usize> { Ok(scan_group(suite, &big(d))?.class_number()) };
            ensure!(h(-23)? == 3, "h(-23) = {}", h(-23)?);
            ensure!(h(5)? == 1, "h(5) = {}", h(5)?);
            let pell = primes(3, 1000);
            for &p in &pell {
                ensure!(
                    negative_pell_solvable(p) == (p % 4 == 1),
                    "negative Pell at p = {p}"
                );
            }
            Ok(format!(
                "{} groups, h(-23) = 3, h(5) = 1, {} Pell checks",
                ps.len(),
                pell.len()
            ))
        },
    )
}

/// All checks, in order.
pub fn run_all(suite: &Suite) -> Vec<Outcome> {
    vec![
        gauss_sweep(suite),
        criterion_ii_example(suite),
        criterion_iii_example(suite),
        oracle_consistency(suite),
        lemma_suite(suite),
        descent_example(suite),
        local_consistency(suite),
        group_laws(suite),
    ]
}

pub fn report(outcomes: &[Outcome]) -> SelftestDoc {
    SelftestDoc {
        schema: SCHEMA.to_owned(),
        passed: outcomes.iter().all(|o| o.passed),
        outcomes: outcomes
            .iter()
            .map(|o| OutcomeDoc {
                id: o.id,
                name: o.name.to_owned(),
                passed: o.passed,
                detail: o.detail.clone(),
            })
            .collect(),
    }
}
