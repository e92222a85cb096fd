//! Binary quadratic forms `a x^2 + b x y + c y^2` of odd fundamental
//! discriminant `D = δp`, and the class group they form under composition.
//!
//! For `D < 0` classes are represented by the unique reduced form
//! (`|b| <= a <= c`, `b >= 0` if `|b| = a` or `a = c`). For `D > 0` the reduced
//! forms of a class make up one cycle of the rho operator and the class is
//! represented by the lexicographically least member of that cycle. Form
//! classes for `D > 0` are narrow classes; they agree with ideal classes of
//! `Q(sqrt(p))` because `x^2 - p y^2 = -1` is solvable for primes
//! `p = 1 (mod 4)`, which [`class_group`] checks rather than assumes.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::ntheory::{is_prime, jacobi, sqrt_mod_prime};

/// Largest `|D|` accepted by [`class_group`].
pub const DEFAULT_DISCRIMINANT_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadFormError {
    #[error("discriminants differ: {0} vs {1}")]
    IncompatibleDiscriminants(BigInt, BigInt),
    #[error("({a}, {b}, {c}) is not a primitive form of odd non-square discriminant (positive definite if D < 0)")]
    InvalidForm { a: BigInt, b: BigInt, c: BigInt },
    #[error("{0} is not ±p for an odd prime p with ±p = 1 (mod 4)")]
    InvalidDiscriminant(BigInt),
    #[error("|D| = {discriminant} exceeds the bound {bound}")]
    BoundExceeded { discriminant: BigInt, bound: u64 },
    #[error("{0} is not an odd prime")]
    NotOddPrime(BigInt),
    #[error("{q} divides the discriminant {discriminant}")]
    Ramified { discriminant: BigInt, q: BigInt },
    #[error("{q} does not split in discriminant {discriminant}")]
    NotSplit { discriminant: BigInt, q: BigInt },
    #[error("x^2 - {0} y^2 = -1 has no solution; form classes would not be ideal classes")]
    NarrowClassGroup(BigInt),
}

/// `δp` with `δ = (-1)^((p-1)/2)`.
pub fn discriminant(p: u64) -> BigInt {
    BigInt::from(crate::ntheory::delta(p)) * BigInt::from(p)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl QuadForm {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Result<Self, QuadFormError> {
        let f = Self { a, b, c };
        let d = f.discriminant();
        let primitive = f.a.gcd(&f.b).gcd(&f.c).is_one();
        let square = !d.is_negative() && d.sqrt().pow(2) == d;
        if d.mod_floor(&BigInt::from(4)) != BigInt::one()
            || square
            || !primitive
            || (d.is_negative() && !f.a.is_positive())
        {
            return Err(QuadFormError::InvalidForm {
                a: f.a,
                b: f.b,
                c: f.c,
            });
        }
        Ok(f)
    }

    pub fn from_i64s(a: i64, b: i64, c: i64) -> Result<Self, QuadFormError> {
        Self::new(a.into(), b.into(), c.into())
    }

    /// The form `(1, 1, (1 - D) / 4)`, identity of the class group.
    pub fn principal(d: &BigInt) -> Self {
        Self {
            a: BigInt::one(),
            b: BigInt::one(),
            c: (BigInt::one() - d) / 4,
        }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    /// `(a, -b, c)`, the inverse class.
    pub fn inverse(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -&self.b,
            c: self.c.clone(),
        }
    }

    /// The value `f(x, y)`.
    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y + &self.c * y * y
    }

    pub fn is_reduced(&self) -> bool {
        let d = self.discriminant();
        if d.is_negative() {
            let abs_b = self.b.abs();
            abs_b <= self.a
                && self.a <= self.c
                && !(self.b.is_negative() && (abs_b == self.a || self.a == self.c))
        } else {
            is_reduced_indefinite(self, &d.sqrt())
        }
    }

    /// An equivalent reduced form: the unique one when `D < 0`, a member of the
    /// rho cycle of the class when `D > 0`. Reduced forms are returned unchanged.
    pub fn reduce(&self) -> Self {
        let d = self.discriminant();
        if d.is_negative() {
            reduce_definite(self.clone(), &d)
        } else {
            let s = d.sqrt();
            let mut f = self.clone();
            while !is_reduced_indefinite(&f, &s) {
                f = rho(&f, &d, &s);
            }
            f
        }
    }

    /// `(a, b, c) -> (a, b + 2a, a + b + c)`, the substitution `x -> x + y`.
    pub fn translate(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: &self.b + BigInt::from(2) * &self.a,
            c: &self.a + &self.b + &self.c,
        }
    }

    /// `(a, b, c) -> (c, -b, a)`, the substitution `(x, y) -> (-y, x)`.
    pub fn swap(&self) -> Self {
        Self {
            a: self.c.clone(),
            b: -&self.b,
            c: self.a.clone(),
        }
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

fn c_for(a: &BigInt, b: &BigInt, d: &BigInt) -> BigInt {
    let (c, r) = (b * b - d).div_rem(&(BigInt::from(4) * a));
    debug_assert!(r.is_zero());
    c
}

fn reduce_definite(mut f: QuadForm, d: &BigInt) -> QuadForm {
    loop {
        // b into (-a, a]
        let two_a = BigInt::from(2) * &f.a;
        let mut b = f.b.mod_floor(&two_a);
        if b > f.a {
            b -= &two_a;
        }
        if b != f.b {
            f.c = c_for(&f.a, &b, d);
            f.b = b;
        }
        if f.a > f.c {
            f = f.swap();
            continue;
        }
        if f.a == f.c && f.b.is_negative() {
            f.b = -f.b;
        }
        return f;
    }
}

/// `0 < b < sqrt(D)` and `sqrt(D) - b < 2|a| < sqrt(D) + b`, with `s = floor(sqrt(D))`.
fn is_reduced_indefinite(f: &QuadForm, s: &BigInt) -> bool {
    let two_a = BigInt::from(2) * f.a.abs();
    f.b.is_positive() && &f.b <= s && &(&two_a + &f.b) > s && &(&two_a - &f.b) <= s
}

/// The representative of `b` modulo `2|a|` used by rho: in `(-|a|, |a|]` when
/// `|a| > sqrt(D)`, otherwise in `(sqrt(D) - 2|a|, sqrt(D))`.
fn rho_normalize(b: &BigInt, a: &BigInt, s: &BigInt) -> BigInt {
    let abs_a = a.abs();
    let two_a = BigInt::from(2) * &abs_a;
    let low = if &abs_a > s {
        -&abs_a + 1
    } else {
        s + 1 - &two_a
    };
    let offset: BigInt = b - &low;
    &low + offset.mod_floor(&two_a)
}

fn rho(f: &QuadForm, d: &BigInt, s: &BigInt) -> QuadForm {
    let b = rho_normalize(&-&f.b, &f.c, s);
    let c = c_for(&f.c, &b, d);
    QuadForm {
        a: f.c.clone(),
        b,
        c,
    }
}

/// The rho cycle through a reduced indefinite form, starting with `f`.
pub fn rho_cycle(f: &QuadForm) -> Vec<QuadForm> {
    let d = f.discriminant();
    let s = d.sqrt();
    let start = f.reduce();
    let mut cycle = alloc::vec![start.clone()];
    let mut g = rho(&start, &d, &s);
    while g != start {
        cycle.push(g.clone());
        g = rho(&g, &d, &s);
    }
    cycle
}

fn check_same(f: &QuadForm, g: &QuadForm) -> Result<BigInt, QuadFormError> {
    let (df, dg) = (f.discriminant(), g.discriminant());
    if df != dg {
        return Err(QuadFormError::IncompatibleDiscriminants(df, dg));
    }
    Ok(df)
}

/// Dirichlet composition before reduction: `(A, B, C)` with
/// `A = a1 a2 / e^2`, `e = gcd(a1, a2, (b1 + b2)/2)`, `B` the least non-negative
/// residue mod `2|A|` with `B = b1 (mod 2a1/e)`, `B = b2 (mod 2a2/e)`,
/// `B^2 = D (mod 4A)`.
pub fn dirichlet_compose(f: &QuadForm, g: &QuadForm) -> Result<QuadForm, QuadFormError> {
    let d = check_same(f, g)?;
    let s = (&f.b + &g.b) / 2;
    let first = f.a.extended_gcd(&g.a);
    let second = first.gcd.extended_gcd(&s);
    let (mut e, mut u, mut v, mut w) = (
        second.gcd,
        &first.x * &second.x,
        &first.y * &second.x,
        second.y,
    );
    if e.is_negative() {
        e = -e;
        u = -u;
        v = -v;
        w = -w;
    }
    let numerator: BigInt = &u * &f.a * &g.b + &v * &g.a * &f.b + &w * ((&f.b * &g.b + &d) / 2);
    let (b_raw, rem) = numerator.div_rem(&e);
    assert!(rem.is_zero(), "composition numerator not divisible by {e}");
    let a = &f.a * &g.a / (&e * &e);
    let b = b_raw.mod_floor(&(BigInt::from(2) * a.abs()));
    let (c, rem) = (&b * &b - &d).div_rem(&(BigInt::from(4) * &a));
    assert!(
        rem.is_zero(),
        "B^2 != D (mod 4A) in composition of {f} and {g}"
    );
    Ok(QuadForm { a, b, c })
}

/// Composition followed by reduction.
pub fn compose(f: &QuadForm, g: &QuadForm) -> Result<QuadForm, QuadFormError> {
    Ok(dirichlet_compose(f, g)?.reduce())
}

/// `f^n` for `n >= 0` by square-and-multiply.
pub fn power(f: &QuadForm, mut n: u64) -> QuadForm {
    let d = f.discriminant();
    let mut result = QuadForm::principal(&d).reduce();
    let mut base = f.reduce();
    while n > 0 {
        if n & 1 == 1 {
            result = compose(&result, &base).expect("same discriminant");
        }
        n >>= 1;
        if n > 0 {
            base = compose(&base, &base).expect("same discriminant");
        }
    }
    result
}

/// Whether `f` and `g` lie in the same (proper) class.
pub fn is_equivalent(f: &QuadForm, g: &QuadForm) -> Result<bool, QuadFormError> {
    let d = check_same(f, g)?;
    let rf = f.reduce();
    if d.is_negative() {
        return Ok(rf == g.reduce());
    }
    Ok(rho_cycle(g).contains(&rf))
}

/// The form `(q, b, (b^2 - D) / 4q)`, reduced, for a prime `q` split in `D`:
/// the class of a prime ideal above `q`.
pub fn prime_form(d: &BigInt, q: &BigInt) -> Result<QuadForm, QuadFormError> {
    if q.is_even() || !is_prime(q) {
        return Err(QuadFormError::NotOddPrime(q.clone()));
    }
    if (d % q).is_zero() {
        return Err(QuadFormError::Ramified {
            discriminant: d.clone(),
            q: q.clone(),
        });
    }
    let not_split = || QuadFormError::NotSplit {
        discriminant: d.clone(),
        q: q.clone(),
    };
    if jacobi(d, q).map_err(|_| QuadFormError::NotOddPrime(q.clone()))? != 1 {
        return Err(not_split());
    }
    let mut b = sqrt_mod_prime(d, q)
        .map_err(|_| QuadFormError::NotOddPrime(q.clone()))?
        .ok_or_else(not_split)?;
    if b.is_even() {
        b += q;
    }
    let c = c_for(q, &b, d);
    QuadForm::new(q.clone(), b, c).map(|f| f.reduce())
}

/// Whether `x^2 - p y^2 = -1` is solvable, i.e. the continued fraction of
/// `sqrt(p)` has odd period. Perfect squares give `false`.
pub fn negative_pell_solvable(p: u64) -> bool {
    let p = u128::from(p);
    let a0 = p.isqrt();
    if a0 * a0 == p {
        return false;
    }
    let (mut m, mut d, mut a) = (0u128, 1u128, a0);
    let mut period = 0u64;
    while a != 2 * a0 {
        m = d * a - m;
        d = (p - m * m) / d;
        a = (a0 + m) / d;
        period += 1;
    }
    period % 2 == 1
}

/// The form class group of a discriminant `±p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGroup {
    discriminant: BigInt,
    classes: Vec<QuadForm>,
    identity_index: usize,
    // every reduced form -> index of its class
    members: BTreeMap<QuadForm, usize>,
}

/// [`class_group_bounded`] with [`DEFAULT_DISCRIMINANT_BOUND`].
pub fn class_group(d: &BigInt) -> Result<ClassGroup, QuadFormError> {
    class_group_bounded(d, DEFAULT_DISCRIMINANT_BOUND)
}

/// Enumerates the classes of discriminant `d = ±p`, `d = 1 (mod 4)`, `|d| <= bound`.
pub fn class_group_bounded(d: &BigInt, bound: u64) -> Result<ClassGroup, QuadFormError> {
    let abs = d.abs();
    if d.mod_floor(&BigInt::from(4)) != BigInt::one() || !is_prime(&abs) {
        return Err(QuadFormError::InvalidDiscriminant(d.clone()));
    }
    if abs > BigInt::from(bound) {
        return Err(QuadFormError::BoundExceeded {
            discriminant: d.clone(),
            bound,
        });
    }
    let reduced = if d.is_negative() {
        reduced_definite_forms(d)
    } else {
        let p = abs.to_u64().expect("bounded");
        if !negative_pell_solvable(p) {
            return Err(QuadFormError::NarrowClassGroup(d.clone()));
        }
        reduced_indefinite_forms(d)
    };

    let mut members = BTreeMap::new();
    let mut classes = Vec::new();
    if d.is_negative() {
        for (i, f) in reduced.into_iter().enumerate() {
            members.insert(f.clone(), i);
            classes.push(f);
        }
    } else {
        // the smallest unassigned form is the least member of its cycle
        for f in reduced {
            if members.contains_key(&f) {
                continue;
            }
            let index = classes.len();
            for g in rho_cycle(&f) {
                members.insert(g, index);
            }
            classes.push(f);
        }
    }

    let mut group = ClassGroup {
        discriminant: d.clone(),
        classes,
        identity_index: 0,
        members,
    };
    group.identity_index = group
        .index_of(&QuadForm::principal(d))
        .expect("principal form has the group's discriminant");
    Ok(group)
}

fn reduced_definite_forms(d: &BigInt) -> Vec<QuadForm> {
    let abs = -d;
    let mut out = Vec::new();
    let mut a = BigInt::one();
    while BigInt::from(3) * &a * &a <= abs {
        // b odd, -a < b <= a
        let mut b: BigInt = -&a + 1;
        if b.is_even() {
            b += 1;
        }
        while b <= a {
            let (c, r) = (&b * &b - d).div_rem(&(BigInt::from(4) * &a));
            if r.is_zero() && c >= a && !(b.is_negative() && c == a) {
                debug_assert!(a.gcd(&b).gcd(&c).is_one());
                out.push(QuadForm {
                    a: a.clone(),
                    b: b.clone(),
                    c,
                });
            }
            b += 2;
        }
        a += 1;
    }
    out.sort();
    out
}

fn reduced_indefinite_forms(d: &BigInt) -> Vec<QuadForm> {
    let s = d.sqrt();
    let mut out = Vec::new();
    let mut b = BigInt::one();
    while b <= s {
        // -ac = (D - b^2) / 4
        let n: BigInt = (d - &b * &b) / 4;
        let n = n.to_u64().expect("bounded discriminant");
        let mut k = 1u64;
        while k * k <= n {
            if n % k == 0 {
                for divisor in [k, n / k] {
                    for a in [BigInt::from(divisor), -BigInt::from(divisor)] {
                        let c = -BigInt::from(n) / &a;
                        let f = QuadForm { a, b: b.clone(), c };
                        if is_reduced_indefinite(&f, &s) {
                            out.push(f);
                        }
                    }
                }
            }
            k += 1;
        }
        b += 2;
    }
    out.sort();
    out.dedup();
    out
}

impl ClassGroup {
    pub fn discriminant(&self) -> &BigInt {
        &self.discriminant
    }

    /// Canonical representatives in lexicographic `(a, b, c)` order.
    pub fn classes(&self) -> &[QuadForm] {
        &self.classes
    }

    pub fn class_number(&self) -> usize {
        self.classes.len()
    }

    pub fn identity_index(&self) -> usize {
        self.identity_index
    }

    pub fn identity(&self) -> &QuadForm {
        &self.classes[self.identity_index]
    }

    /// Every reduced form of the discriminant (for `D > 0`, all cycle members).
    pub fn reduced_forms(&self) -> impl Iterator<Item = &QuadForm> {
        self.members.keys()
    }

    /// Index of the class containing `f`.
    pub fn index_of(&self, f: &QuadForm) -> Result<usize, QuadFormError> {
        let d = f.discriminant();
        if d != self.discriminant {
            return Err(QuadFormError::IncompatibleDiscriminants(
                self.discriminant.clone(),
                d,
            ));
        }
        Ok(*self
            .members
            .get(&f.reduce())
            .expect("every reduced form was enumerated"))
    }

    /// Index of the product of classes `i` and `j`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        let f = compose(&self.classes[i], &self.classes[j]).expect("same discriminant");
        self.index_of(&f).expect("same discriminant")
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.index_of(&self.classes[i].inverse())
            .expect("same discriminant")
    }

    /// Sorted class indices of `{ g^l : g in G }`.
    pub fn lth_power_subgroup(&self, l: u64) -> Vec<usize> {
        let mut powers: Vec<usize> = self
            .classes
            .iter()
            .map(|g| self.index_of(&power(g, l)).expect("same discriminant"))
            .collect();
        powers.sort_unstable();
        powers.dedup();
        powers
    }

    /// Whether the class of `f` is an `l`-th power.
    pub fn is_lth_power_class(&self, f: &QuadForm, l: u64) -> Result<bool, QuadFormError> {
        let index = self.index_of(f)?;
        Ok(self.lth_power_subgroup(l).binary_search(&index).is_ok())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(a: i64, b: i64, c: i64) -> QuadForm {
        QuadForm::from_i64s(a, b, c).unwrap()
    }

    fn d(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(47), d(-47));
        assert_eq!(discriminant(5), d(5));
        assert_eq!(discriminant(7), d(-7));
    }

    #[test]
    fn form_validation() {
        assert!(QuadForm::from_i64s(2, 2, 1).is_err()); // D = -4
        assert!(QuadForm::from_i64s(-1, 1, -12).is_err()); // negative definite
        assert!(QuadForm::from_i64s(1, 3, 2).is_err()); // D = 1, a square
        assert!(QuadForm::from_i64s(3, 3, 3).is_err()); // D = -27, imprimitive
        assert_eq!(form(2, 1, 6).discriminant(), d(-47));
    }

    #[test]
    fn definite_reduction() {
        assert_eq!(form(12, -1, 1).reduce(), form(1, 1, 12));
        assert_eq!(form(1, 1, 12).reduce(), form(1, 1, 12));
        assert_eq!(form(2, -3, 7).reduce(), form(2, 1, 6));
        assert_eq!(form(6, -1, 2).reduce(), form(2, 1, 6));
        // a = c forces b >= 0
        assert_eq!(form(2, -1, 2).reduce(), form(2, 1, 2));
    }

    #[test]
    fn indefinite_reduction() {
        let f = form(1, 1, -1).reduce();
        assert!(f.is_reduced());
        assert!(f.b().is_positive() && f.b() < &d(3));
        let g = form(1, 7, 11).reduce();
        assert!(g.is_reduced());
        assert!(is_equivalent(&g, &form(1, 1, -1)).unwrap());
        assert_eq!(rho_cycle(&form(1, 1, -1)), [form(1, 1, -1), form(-1, 1, 1)]);
    }

    #[test]
    fn composition_examples() {
        let group = class_group(&d(-47)).unwrap();
        let principal = group.identity().clone();
        for f in group.classes() {
            assert_eq!(compose(&principal, f).unwrap(), *f);
        }
        assert_eq!(
            compose(&form(2, 1, 6), &form(2, -1, 6)).unwrap(),
            form(1, 1, 12)
        );
        let square = compose(&form(2, 1, 6), &form(2, 1, 6)).unwrap();
        assert_ne!(square, principal);
        assert!(group.classes().contains(&square));
        assert_eq!(
            compose(&form(2, 1, 6), &form(1, 1, -1)),
            Err(QuadFormError::IncompatibleDiscriminants(d(-47), d(5)))
        );
    }

    #[test]
    fn composition_congruences() {
        let (f, g) = (form(2, 1, 6), form(3, -1, 4));
        let h = dirichlet_compose(&f, &g).unwrap();
        assert_eq!(h.a(), &d(6));
        assert!((h.b() - f.b()).is_multiple_of(&d(4)));
        assert!((h.b() - g.b()).is_multiple_of(&d(6)));
        assert!(h.b() >= &d(0) && h.b() < &d(12));
        assert_eq!(h.discriminant(), d(-47));
    }

    #[test]
    fn class_groups() {
        let g = class_group(&d(-47)).unwrap();
        assert_eq!(g.class_number(), 5);
        assert_eq!(
            g.classes(),
            [
                form(1, 1, 12),
                form(2, -1, 6),
                form(2, 1, 6),
                form(3, -1, 4),
                form(3, 1, 4)
            ]
        );
        assert_eq!(g.identity(), &form(1, 1, 12));

        let g = class_group(&d(-23)).unwrap();
        assert_eq!(g.classes(), [form(1, 1, 6), form(2, -1, 3), form(2, 1, 3)]);

        let g = class_group(&d(5)).unwrap();
        assert_eq!(g.class_number(), 1);
        assert_eq!(g.classes(), [form(-1, 1, 1)]);
        assert_eq!(g.identity_index(), 0);
    }

    #[test]
    fn class_group_rejections() {
        assert_eq!(
            class_group(&d(-5)),
            Err(QuadFormError::InvalidDiscriminant(d(-5)))
        );
        assert_eq!(
            class_group(&d(21)),
            Err(QuadFormError::InvalidDiscriminant(d(21)))
        );
        assert_eq!(
            class_group_bounded(&d(-1_000_003), 1_000_000),
            Err(QuadFormError::BoundExceeded {
                discriminant: d(-1_000_003),
                bound: 1_000_000
            })
        );
    }

    #[test]
    fn equivalence() {
        assert!(is_equivalent(&form(2, 1, 6), &form(2, 1, 6)).unwrap());
        assert!(!is_equivalent(&form(2, 1, 6), &form(2, -1, 6)).unwrap());
        assert!(is_equivalent(&form(12, -1, 1), &form(1, 1, 12)).unwrap());
        assert!(is_equivalent(&form(1, 1, -1), &form(1, 1, 12)).is_err());
    }

    #[test]
    fn prime_forms() {
        assert_eq!(prime_form(&d(-47), &d(3)), Ok(form(3, 1, 4)));
        assert_eq!(
            prime_form(&d(-47), &d(2)),
            Err(QuadFormError::NotOddPrime(d(2)))
        );
        assert_eq!(
            prime_form(&d(-7), &d(3)),
            Err(QuadFormError::NotSplit {
                discriminant: d(-7),
                q: d(3)
            })
        );
        assert_eq!(
            prime_form(&d(-7), &d(7)),
            Err(QuadFormError::Ramified {
                discriminant: d(-7),
                q: d(7)
            })
        );
        assert!(prime_form(&d(-47), &d(9)).is_err());
    }

    #[test]
    fn lth_powers_in_order_five() {
        let g = class_group(&d(-47)).unwrap();
        let p = form(3, 1, 4);
        assert!(!g.is_lth_power_class(&p, 5).unwrap());
        assert!(!g.is_lth_power_class(&p, 10).unwrap());
        assert!(g.is_lth_power_class(&p, 2).unwrap());
        assert_eq!(g.lth_power_subgroup(5), [g.identity_index()]);
        for l in 2..12 {
            assert!(g.is_lth_power_class(&form(1, 1, 12), l).unwrap());
        }
    }

    #[test]
    fn negative_pell() {
        assert!(negative_pell_solvable(5));
        assert!(negative_pell_solvable(13));
        assert!(negative_pell_solvable(17));
        assert!(!negative_pell_solvable(3));
        assert!(!negative_pell_solvable(7));
        assert!(!negative_pell_solvable(34));
        assert!(!negative_pell_solvable(16));
    }
}
