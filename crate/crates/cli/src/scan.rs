//! Verdict tables over ranges of triples, computed in parallel. Output order
//! never depends on scheduling.

use rayon::prelude::*;

use phi_descent_core::criteria::{verdict_with, CriteriaError, Verdict};
use phi_descent_core::ntheory::{is_prime_u64, Triple};

use crate::cache::ClassGroupCache;

/// Every valid triple with `p <= p_max`, `c <= c_max`, `l` in `l_set`,
/// sorted by `(p, c, l)`.
pub fn triples(p_max: u64, c_max: u64, l_set: &[u32]) -> Vec<Triple> {
    let mut ls = l_set.to_vec();
    ls.sort_unstable();
    ls.dedup();
    let mut out = Vec::new();
    for p in (5..=p_max).filter(|&p| is_prime_u64(p)) {
        for c in (3..=c_max).filter(|&c| is_prime_u64(c)) {
            for &l in &ls {
                if let Ok(t) = Triple::new(p, c, l) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Verdicts for `triples`, in the same order.
pub fn verdicts(
    triples: &[Triple],
    groups: &ClassGroupCache,
) -> Result<Vec<Verdict>, CriteriaError> {
    triples
        .par_iter()
        .map(|t| verdict_with(t, groups))
        .collect()
}
