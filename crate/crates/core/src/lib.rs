//! Arithmetic behind insolubility certificates for `c * y^l = Φ_p(x)`,
//! `p, c` distinct odd primes and `l >= 2`.
//!
//! A solution would give, through the Gauss identity
//! `4 Φ_p = A_p^2 - δ p B_p^2`, a proper solution of `α^2 c y^l = x^2 - δ p z^2`.
//! That auxiliary equation is ruled out either by a local obstruction
//! (a quadratic residue symbol) or by the class of a prime above `c` failing
//! to be an `l`-th power in the class group of `Q(sqrt(δp))`.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod criteria;
pub mod gauss;
pub mod ntheory;
pub mod quadforms;
pub mod search;
pub mod series;

pub use criteria::{verdict, Alpha, Criterion, Evidence, Status, Verdict};
pub use gauss::{gauss_pair, EquationInstance, GaussError, GaussPair};
pub use ntheory::{Triple, TripleError};
pub use quadforms::{class_group, ClassGroup, QuadForm};
pub use search::{search_solutions, SolutionRecord};
pub use series::{IntPoly, RatPoly};
