//! Thread-safe memo tables for Gauss pairs and class groups.
//!
//! Entries are inserted idempotently: two threads racing on the same key
//! compute equal values and whichever lands first is kept.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use phi_descent_core::criteria::ClassGroups;
use phi_descent_core::gauss::{gauss_pair, GaussError, GaussPair};
use phi_descent_core::quadforms::{
    class_group_bounded, ClassGroup, QuadFormError, DEFAULT_DISCRIMINANT_BOUND,
};

#[derive(Debug)]
pub struct ClassGroupCache {
    bound: u64,
    groups: RwLock<HashMap<BigInt, Arc<ClassGroup>>>,
}

impl ClassGroupCache {
    pub fn new(bound: u64) -> Self {
        Self {
            bound,
            groups: RwLock::default(),
        }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.groups.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Default for ClassGroupCache {
    fn default() -> Self {
        Self::new(DEFAULT_DISCRIMINANT_BOUND)
    }
}

impl ClassGroups for ClassGroupCache {
    fn class_group(&self, d: &BigInt) -> Result<Arc<ClassGroup>, QuadFormError> {
        if let Some(group) = self.groups.read().expect("cache lock poisoned").get(d) {
            return Ok(Arc::clone(group));
        }
        let group = Arc::new(class_group_bounded(d, self.bound)?);
        let mut groups = self.groups.write().expect("cache lock poisoned");
        Ok(Arc::clone(groups.entry(d.clone()).or_insert(group)))
    }
}

#[derive(Debug, Default)]
pub struct GaussCache {
    pairs: RwLock<HashMap<u64, Arc<GaussPair>>>,
}

impl GaussCache {
    pub fn get(&self, p: u64) -> Result<Arc<GaussPair>, GaussError> {
        if let Some(pair) = self.pairs.read().expect("cache lock poisoned").get(&p) {
            return Ok(Arc::clone(pair));
        }
        let pair = Arc::new(gauss_pair(p)?);
        let mut pairs = self.pairs.write().expect("cache lock poisoned");
        Ok(Arc::clone(pairs.entry(p).or_insert(pair)))
    }
}
