//! Sparse multivariate polynomials with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::monomial::{CompiledOrder, Monomial, MonomialOrder};

/// A polynomial ring `k[v_1, ..., v_n]`: variable names plus a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    field: Field,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>, field: Field) -> Arc<Ring> {
        Arc::new(Ring { vars: vars.into_iter().map(Into::into).collect(), field })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// A name not yet used in this ring, preferring `base` itself.
    pub fn fresh_name(&self, base: &str, taken: &[String]) -> String {
        let used = |s: &str| self.vars.iter().chain(taken).any(|v| v == s);
        if !used(base) {
            return base.to_string();
        }
        let mut k = 1;
        loop {
            let cand = format!("{base}_{k}");
            if !used(&cand) {
                return cand;
            }
            k += 1;
        }
    }
}

/// `(degX, degY)` of a polynomial homogeneous in two variable blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bidegree {
    pub deg_x: u32,
    pub deg_y: u32,
}

/// Total degree of a polynomial; the zero polynomial has no degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

/// Element of a [`Ring`]. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: FieldElement) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i), ring.field().one())
    }

    pub fn term(ring: &Arc<Ring>, m: Monomial, c: FieldElement) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    /// Collects `(monomial, coefficient)` pairs, summing repeats.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, FieldElement)>) -> Self {
        let mut p = Polynomial::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&FieldElement> {
        self.terms.get(m)
    }

    pub fn degree(&self) -> Degree {
        self.terms.keys().map(Monomial::degree).max().map_or(Degree::MinusInfinity, Degree::Finite)
    }

    /// `Some(d)` if every term has total degree `d`; `None` for zero or mixed.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        self.weighted_homogeneous_degree(&vec![1; self.ring.nvars()]).map(|d| d as u32)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn weighted_homogeneous_degree(&self, weights: &[u32]) -> Option<u64> {
        let mut degs = self.terms.keys().map(|m| m.weighted_degree(weights));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Is the polynomial a nonzero constant?
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().is_some_and(Monomial::is_one)
    }

    /// Indices of variables occurring in some term.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for m in self.terms.keys() {
            for i in m.support() {
                used[i] = true;
            }
        }
        (0..used.len()).filter(|&i| used[i]).collect()
    }

    pub fn uses_only(&self, vars: &[usize]) -> bool {
        self.support().iter().all(|i| vars.contains(i))
    }

    /// Monomial with coefficient one, if the polynomial is one.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(m),
            _ => None,
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = Polynomial::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..n {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Leading `(monomial, coefficient)` under `order`.
    pub fn leading_term(&self, order: &CompiledOrder) -> Option<(&Monomial, &FieldElement)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    /// Scales so the leading coefficient under `order` is one.
    pub fn monic(&self, order: &CompiledOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    /// Evaluates at `images[i]` for variable `i`; all images share one ring.
    pub fn substitute(&self, target: &Arc<Ring>, images: &[Polynomial]) -> Result<Polynomial> {
        assert_eq!(images.len(), self.ring.nvars(), "one image per variable");
        if images.iter().any(|p| p.ring != *target) || target.field() != self.field() {
            return Err(Error::AmbientMismatch);
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e))?;
                }
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    /// Moves variable `i` to variable `map[i]` of `target`.
    pub fn embed(&self, target: &Arc<Ring>, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.ring.nvars());
        let n = target.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; n];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] += x;
            }
            (Monomial(e), c.clone())
        });
        Polynomial::from_terms(target, terms)
    }

    /// `(degX, degY)` if homogeneous in both blocks, else `None`.
    ///
    /// `xvars` and `yvars` must partition the variables. The zero polynomial
    /// has no bidegree.
    pub fn bidegree(&self, xvars: &[usize], yvars: &[usize]) -> Option<Bidegree> {
        debug_assert_eq!(xvars.len() + yvars.len(), self.ring.nvars());
        let block = |m: &Monomial, vs: &[usize]| vs.iter().map(|&i| m.0[i]).sum::<u32>();
        let mut it = self.terms.keys().map(|m| (block(m, xvars), block(m, yvars)));
        let (dx, dy) = it.next()?;
        it.all(|b| b == (dx, dy)).then_some(Bidegree { deg_x: dx, deg_y: dy })
    }

    /// Terms in canonical order: grevlex descending.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &FieldElement)> {
        let order = MonomialOrder::GrevLex.compile(self.ring.nvars());
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b.0, a.0));
        v
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let (neg, abs) = if c.is_negative() { (true, c.neg()) } else { (false, c.clone()) };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .map(|(i, e)| {
                        if *e == 1 {
                            self.ring.vars[i].clone()
                        } else {
                            format!("{}^{}", self.ring.vars[i], e)
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("*");
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
