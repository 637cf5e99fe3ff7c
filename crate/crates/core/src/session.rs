//! Per-session configuration and Gröbner basis cache.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis, Ideal, DEFAULT_POWER_BOUND};
use crate::monomial::MonomialOrder;
use crate::parallel::Exec;
use crate::poly::{Polynomial, Ring};

/// Size limits and default windows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub power_bound: u32,
    /// Adic levels `N` for bigraded Hilbert tables.
    pub levels: u32,
    /// Internal degrees `D` for Hilbert tables.
    pub degree: u32,
    pub window: (i64, i64),
    pub exec: Exec,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            power_bound: DEFAULT_POWER_BOUND,
            levels: 8,
            degree: 8,
            window: (-10, 2),
            exec: Exec::default(),
        }
    }
}

type CacheKey = (Arc<Ring>, Vec<String>, MonomialOrder);

/// Holds the configuration and a lock-guarded basis cache keyed by
/// `(ring, rendered generators, order)`. Nothing outlives the session.
#[derive(Debug, Default)]
pub struct Session {
    config: Config,
    cache: Mutex<HashMap<CacheKey, Arc<GroebnerBasis>>>,
}

impl Session {
    pub fn new(config: Config) -> Self {
        Session { config, cache: Mutex::new(HashMap::new()) }
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn groebner(&self, ideal: &Ideal, order: &MonomialOrder) -> Arc<GroebnerBasis> {
        let key = (ideal.ring().clone(), ideal.canonical_strings(), order.clone());
        if let Some(gb) = self.cache.lock().expect("cache lock").get(&key) {
            return gb.clone();
        }
        let gb = Arc::new(buchberger(ideal, order));
        self.cache.lock().expect("cache lock").entry(key).or_insert(gb).clone()
    }

    pub fn grevlex(&self, ideal: &Ideal) -> Arc<GroebnerBasis> {
        self.groebner(ideal, &MonomialOrder::GrevLex)
    }

    pub fn member(&self, f: &Polynomial, ideal: &Ideal) -> Result<bool> {
        if f.ring() != ideal.ring() {
            return Err(Error::AmbientMismatch);
        }
        self.grevlex(ideal).contains(f)
    }

    /// Does `a` contain every generator of `b`?
    pub fn contains_ideal(&self, a: &Ideal, b: &Ideal) -> Result<bool> {
        let gb = self.grevlex(a);
        for g in b.generators() {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn ideal_equal(&self, a: &Ideal, b: &Ideal) -> Result<bool> {
        if a.ring() != b.ring() {
            return Err(Error::AmbientMismatch);
        }
        Ok(self.contains_ideal(a, b)? && self.contains_ideal(b, a)?)
    }

    pub fn cached_bases(&self) -> usize {
        self.cache.lock().expect("cache lock").len()
    }
}
