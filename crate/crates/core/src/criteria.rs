//! Insolubility criteria for `c y^l = Φ_p(x)`.
//!
//! With `δ = (-1)^((p-1)/2)`, the equation has no integer solutions if
//!
//! * I: `(δp / c) = -1`;
//! * II: `(c / p) = -1` and `l` is even;
//! * III: the class of a prime above `c` is not an `l`-th power in the
//!   class group of `Q(sqrt(δp))`.
//!
//! I and II are exactly the local obstructions to `α^2 c y^l = x^2 - δ p z^2`;
//! III comes from factoring that equation as ideals. Reciprocity gives
//! `(δp / c) = (c / p)`, so II is the even-`l` case of I; verdicts report II
//! whenever it applies, then I, then III. When `α = 2` is possible
//! (`p = ±3 mod 8`) the prime 2 is inert, so `(2)` is principal and only the
//! prime above `c` matters.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::ntheory::{jacobi_i64, Triple, TripleError};
use crate::quadforms::{
    class_group_bounded, discriminant, prime_form, ClassGroup, QuadForm, QuadFormError,
    DEFAULT_DISCRIMINANT_BOUND,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    #[error("invalid triple: {0}")]
    InvalidTriple(#[from] TripleError),
    #[error(transparent)]
    ClassGroup(#[from] QuadFormError),
}

/// Source of class groups; lets callers share or cache them across verdicts.
pub trait ClassGroups {
    fn class_group(&self, d: &BigInt) -> Result<Arc<ClassGroup>, QuadFormError>;
}

/// Builds every class group from scratch.
#[derive(Debug, Clone, Copy)]
pub struct Uncached {
    pub bound: u64,
}

impl Default for Uncached {
    fn default() -> Self {
        Self {
            bound: DEFAULT_DISCRIMINANT_BOUND,
        }
    }
}

impl ClassGroups for Uncached {
    fn class_group(&self, d: &BigInt) -> Result<Arc<ClassGroup>, QuadFormError> {
        class_group_bounded(d, self.bound).map(Arc::new)
    }
}

/// The `α` in `α^2 c y^l = x^2 - δ p z^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alpha {
    One,
    Two,
}

impl Alpha {
    pub fn value(self) -> u64 {
        match self {
            Alpha::One => 1,
            Alpha::Two => 2,
        }
    }

    /// The values admitted for `p`: only 1 when `p = ±1 (mod 8)`.
    pub fn admissible(p: u64) -> &'static [Alpha] {
        if matches!(p % 8, 1 | 7) {
            &[Alpha::One]
        } else {
            &[Alpha::One, Alpha::Two]
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Criterion {
    I,
    II,
    III,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::I => "I",
            Criterion::II => "II",
            Criterion::III => "III",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    NoSolutions,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::NoSolutions => "NoSolutions",
            Status::Inconclusive => "Inconclusive",
        })
    }
}

/// The value of one residue symbol `(top / bottom)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymbolEvidence {
    pub top: i64,
    pub bottom: u64,
    pub value: i8,
}

/// The class-group computation behind criterion III.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassEvidence {
    pub discriminant: BigInt,
    pub class_number: usize,
    /// Reduced form of a prime ideal above `c`.
    pub prime_form: QuadForm,
    /// Order of the subgroup of `l`-th powers.
    pub power_subgroup_size: usize,
    pub prime_is_power: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    Symbol(SymbolEvidence),
    Class(ClassEvidence),
}

/// Outcome of [`verdict`]. `Inconclusive` always carries the class evidence
/// showing the prime above `c` is an `l`-th power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub triple: Triple,
    pub criterion: Option<Criterion>,
    pub evidence: Evidence,
}

impl Verdict {
    pub fn status(&self) -> Status {
        match self.criterion {
            Some(_) => Status::NoSolutions,
            None => Status::Inconclusive,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.triple, self.status())?;
        if let Some(c) = self.criterion {
            write!(f, " by criterion {c}")?;
        }
        match &self.evidence {
            Evidence::Symbol(s) => write!(f, "; ({}/{}) = {}", s.top, s.bottom, s.value),
            Evidence::Class(e) => write!(
                f,
                "; D = {}, h = {}, prime form {}, {}-th powers: {} classes, prime form {} a power",
                e.discriminant,
                e.class_number,
                e.prime_form,
                self.triple.l(),
                e.power_subgroup_size,
                if e.prime_is_power { "is" } else { "is not" }
            ),
        }
    }
}

/// `(δp / c)`.
pub fn delta_p_symbol(p: u64, c: u64) -> SymbolEvidence {
    let top = i64::from(crate::ntheory::delta(p)) * p as i64;
    SymbolEvidence {
        top,
        bottom: c,
        value: jacobi_i64(top, c).expect("c is odd"),
    }
}

/// `(c / p)`.
pub fn c_over_p_symbol(p: u64, c: u64) -> SymbolEvidence {
    SymbolEvidence {
        top: c as i64,
        bottom: p,
        value: jacobi_i64(c as i64, p).expect("p is odd"),
    }
}

pub fn criterion_i(p: u64, c: u64) -> bool {
    delta_p_symbol(p, c).value == -1
}

pub fn criterion_ii(p: u64, c: u64, l: u32) -> bool {
    l % 2 == 0 && c_over_p_symbol(p, c).value == -1
}

/// Class data for criterion III. Requires `c` to split in `Q(sqrt(δp))`.
pub fn class_evidence(
    triple: &Triple,
    groups: &impl ClassGroups,
) -> Result<ClassEvidence, QuadFormError> {
    let d = discriminant(triple.p());
    let group = groups.class_group(&d)?;
    let prime = prime_form(&d, &BigInt::from(triple.c()))?;
    let powers = group.lth_power_subgroup(u64::from(triple.l()));
    let index = group.index_of(&prime)?;
    Ok(ClassEvidence {
        discriminant: d,
        class_number: group.class_number(),
        prime_is_power: powers.binary_search(&index).is_ok(),
        power_subgroup_size: powers.len(),
        prime_form: prime,
    })
}

/// True iff the class of a prime above `c` is not an `l`-th power.
pub fn criterion_iii(p: u64, c: u64, l: u32) -> Result<bool, CriteriaError> {
    let triple = Triple::new(p, c, l)?;
    Ok(!class_evidence(&triple, &Uncached::default())?.prime_is_power)
}

/// Runs criteria II, I, III in that order and reports the first that applies.
pub fn verdict(triple: &Triple) -> Result<Verdict, CriteriaError> {
    verdict_with(triple, &Uncached::default())
}

/// [`verdict`] with validation of raw inputs.
pub fn verdict_for(p: u64, c: u64, l: u32) -> Result<Verdict, CriteriaError> {
    verdict(&Triple::new(p, c, l)?)
}

pub fn verdict_with(triple: &Triple, groups: &impl ClassGroups) -> Result<Verdict, CriteriaError> {
    let (p, c, l) = (triple.p(), triple.c(), triple.l());
    if criterion_ii(p, c, l) {
        return Ok(Verdict {
            triple: *triple,
            criterion: Some(Criterion::II),
            evidence: Evidence::Symbol(c_over_p_symbol(p, c)),
        });
    }
    let symbol = delta_p_symbol(p, c);
    if symbol.value == -1 {
        return Ok(Verdict {
            triple: *triple,
            criterion: Some(Criterion::I),
            evidence: Evidence::Symbol(symbol),
        });
    }
    let evidence = class_evidence(triple, groups)?;
    Ok(Verdict {
        triple: *triple,
        criterion: (!evidence.prime_is_power).then_some(Criterion::III),
        evidence: Evidence::Class(evidence),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObstructionReason {
    /// `(δp / c) = -1`: `x^2 - δ p z^2 = 0 (mod c)` forces `c | x, z`.
    NonResidueAtC,
    /// `l` even and `(c / p) = -1`: `x^2 = α^2 c y^l (mod p)` has no unit solution.
    NonResidueAtP,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Obstruction {
    pub place: u64,
    pub reason: ObstructionReason,
    pub symbol: SymbolEvidence,
}

/// Local solvability of `α^2 c y^l = x^2 - δ p z^2` with `gcd(x, z) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalReport {
    pub triple: Triple,
    pub alpha: Alpha,
    pub obstructions: Vec<Obstruction>,
}

impl LocalReport {
    pub fn everywhere_solvable(&self) -> bool {
        self.obstructions.is_empty()
    }

    pub fn is_obstructed_at(&self, q: u64) -> bool {
        self.obstructions.iter().any(|o| o.place == q)
    }
}

/// Proper local solutions exist everywhere iff `(δp / c) = 1` and, for even
/// `l`, `(c / p) = 1`. The only possible obstructions sit at `c` and `p`.
pub fn local_solvability(triple: &Triple, alpha: Alpha) -> LocalReport {
    let (p, c) = (triple.p(), triple.c());
    let mut obstructions = Vec::new();
    let at_c = delta_p_symbol(p, c);
    if at_c.value != 1 {
        obstructions.push(Obstruction {
            place: c,
            reason: ObstructionReason::NonResidueAtC,
            symbol: at_c,
        });
    }
    let at_p = c_over_p_symbol(p, c);
    if triple.l() % 2 == 0 && at_p.value != 1 {
        obstructions.push(Obstruction {
            place: p,
            reason: ObstructionReason::NonResidueAtP,
            symbol: at_p,
        });
    }
    LocalReport {
        triple: *triple,
        alpha,
        obstructions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(p: u64, c: u64, l: u32) -> Triple {
        Triple::new(p, c, l).unwrap()
    }

    #[test]
    fn criterion_i_examples() {
        assert!(criterion_i(7, 3));
        assert!(!criterion_i(47, 3));
        assert!(!criterion_i(5, 11));
    }

    #[test]
    fn criterion_ii_examples() {
        assert!(criterion_ii(137, 13, 4));
        assert!(!criterion_ii(137, 13, 3));
        assert!(!criterion_ii(47, 3, 2));
    }

    #[test]
    fn criterion_iii_examples() {
        assert_eq!(criterion_iii(47, 3, 5), Ok(true));
        assert_eq!(criterion_iii(47, 3, 10), Ok(true));
        assert_eq!(criterion_iii(5, 61, 2), Ok(false));
        // 3 is inert for D = -7, criterion I territory
        assert!(matches!(
            criterion_iii(7, 3, 2),
            Err(CriteriaError::ClassGroup(QuadFormError::NotSplit { .. }))
        ));
    }

    #[test]
    fn verdict_examples() {
        let v = verdict(&triple(137, 13, 2)).unwrap();
        assert_eq!(
            (v.status(), v.criterion),
            (Status::NoSolutions, Some(Criterion::II))
        );
        assert_eq!(
            v.evidence,
            Evidence::Symbol(SymbolEvidence {
                top: 13,
                bottom: 137,
                value: -1
            })
        );

        let v = verdict(&triple(47, 3, 5)).unwrap();
        assert_eq!(v.criterion, Some(Criterion::III));
        let Evidence::Class(e) = &v.evidence else {
            panic!("expected class evidence");
        };
        assert_eq!(e.class_number, 5);
        assert_eq!(e.power_subgroup_size, 1);
        assert_eq!(e.prime_form, QuadForm::from_i64s(3, 1, 4).unwrap());

        assert_eq!(
            verdict(&triple(5, 61, 2)).unwrap().status(),
            Status::Inconclusive
        );
        assert_eq!(
            verdict(&triple(5, 11, 3)).unwrap().status(),
            Status::Inconclusive
        );

        // both symbols are -1; even l reports II, odd l reports I
        let v = verdict(&triple(7, 3, 2)).unwrap();
        assert_eq!(v.criterion, Some(Criterion::II));
        let v = verdict(&triple(7, 3, 3)).unwrap();
        assert_eq!(v.criterion, Some(Criterion::I));
        assert_eq!(
            v.evidence,
            Evidence::Symbol(SymbolEvidence {
                top: -7,
                bottom: 3,
                value: -1
            })
        );
    }

    #[test]
    fn reciprocity_links_the_symbols() {
        let primes = [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 137];
        for &p in &primes[1..] {
            for &c in &primes {
                if c != p {
                    assert_eq!(delta_p_symbol(p, c).value, c_over_p_symbol(p, c).value);
                }
            }
        }
    }

    #[test]
    fn invalid_inputs() {
        assert!(matches!(
            verdict_for(3, 5, 2),
            Err(CriteriaError::InvalidTriple(_))
        ));
        assert!(matches!(
            verdict_for(9, 3, 2),
            Err(CriteriaError::InvalidTriple(_))
        ));
        assert!(matches!(
            verdict_for(5, 2, 2),
            Err(CriteriaError::InvalidTriple(_))
        ));
        assert!(matches!(
            verdict_for(5, 5, 2),
            Err(CriteriaError::InvalidTriple(_))
        ));
        assert!(matches!(
            verdict_for(5, 3, 1),
            Err(CriteriaError::InvalidTriple(_))
        ));
    }

    #[test]
    fn bound_is_enforced() {
        let small = Uncached { bound: 40 };
        assert!(matches!(
            verdict_with(&triple(47, 3, 5), &small),
            Err(CriteriaError::ClassGroup(
                QuadFormError::BoundExceeded { .. }
            ))
        ));
        // criterion I never touches the class group
        assert!(verdict_with(&triple(7, 3, 2), &small).is_ok());
    }

    #[test]
    fn local_reports() {
        assert!(local_solvability(&triple(47, 3, 5), Alpha::One).everywhere_solvable());

        // (13/137) = (137/13) = -1: obstructed at both places for even l
        let r = local_solvability(&triple(137, 13, 4), Alpha::One);
        assert!(r.is_obstructed_at(137) && r.is_obstructed_at(13));
        let at_p = r.obstructions.iter().find(|o| o.place == 137).unwrap();
        assert_eq!(at_p.reason, ObstructionReason::NonResidueAtP);
        assert_eq!(at_p.symbol.value, -1);

        let r = local_solvability(&triple(7, 3, 3), Alpha::One);
        assert_eq!(r.obstructions.len(), 1);
        assert_eq!(r.obstructions[0].place, 3);
        assert_eq!(r.obstructions[0].reason, ObstructionReason::NonResidueAtC);
        assert!(local_solvability(&triple(7, 3, 2), Alpha::One).is_obstructed_at(3));
    }

    #[test]
    fn admissible_alpha() {
        assert_eq!(Alpha::admissible(47), &[Alpha::One]);
        assert_eq!(Alpha::admissible(17), &[Alpha::One]);
        assert_eq!(Alpha::admissible(5), &[Alpha::One, Alpha::Two]);
        assert_eq!(Alpha::admissible(11), &[Alpha::One, Alpha::Two]);
    }

    #[test]
    fn rendering() {
        let v = verdict(&triple(137, 13, 2)).unwrap();
        assert_eq!(
            v.to_string(),
            "(p=137, c=13, l=2): NoSolutions by criterion II; (13/137) = -1"
        );
    }
}
