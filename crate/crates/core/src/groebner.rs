//! Ideals and reduced Gröbner bases (Buchberger with the coprime and chain
//! criteria, normal selection strategy).

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::monomial::{CompiledOrder, Monomial, MonomialOrder};
use crate::parse::parse_poly;
use crate::poly::{Polynomial, Ring};

/// Default cap on `n` in [`ideal_power`].
pub const DEFAULT_POWER_BOUND: u32 = 12;

/// A finitely generated ideal. Zero generators are dropped on construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    homogeneous: bool,
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, generators: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut gens = Vec::new();
        for g in generators {
            if g.ring() != ring {
                return Err(Error::AmbientMismatch);
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        let homogeneous = gens.iter().all(Polynomial::is_homogeneous);
        Ok(Ideal { ring: ring.clone(), generators: gens, homogeneous })
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal { ring: ring.clone(), generators: Vec::new(), homogeneous: true }
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, [Polynomial::one(ring)]).expect("same ring")
    }

    /// Parses each string with [`parse_poly`].
    pub fn parse<S: AsRef<str>>(ring: &Arc<Ring>, gens: impl IntoIterator<Item = S>) -> Result<Ideal> {
        let polys = gens.into_iter().map(|s| parse_poly(s.as_ref(), ring)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    /// The ideal generated by the given variables.
    pub fn variables(ring: &Arc<Ring>, vars: &[usize]) -> Ideal {
        Ideal::new(ring, vars.iter().map(|&i| Polynomial::var(ring, i))).expect("same ring")
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::AmbientMismatch);
        }
        Ideal::new(&self.ring, self.generators.iter().chain(&other.generators).cloned())
    }

    pub fn with(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        Ideal::new(&self.ring, self.generators.iter().cloned().chain(extra))
    }

    /// Rendered generators; the key used by the session cache.
    pub fn canonical_strings(&self) -> Vec<String> {
        self.generators.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        if self.generators.is_empty() {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

/// A monomial tagged with its order key; orders by key.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Keyed {
    key: Vec<i64>,
    mono: Monomial,
}

impl Keyed {
    fn new(order: &CompiledOrder, mono: Monomial) -> Self {
        Keyed { key: order.key(&mono), mono }
    }

    fn mul(&self, other: &Keyed) -> Keyed {
        Keyed {
            key: self.key.iter().zip(&other.key).map(|(a, b)| a + b).collect(),
            mono: self.mono.mul(&other.mono),
        }
    }

    fn quotient_of(&self, other: &Keyed) -> Keyed {
        Keyed {
            key: other.key.iter().zip(&self.key).map(|(a, b)| a - b).collect(),
            mono: self.mono.quotient_of(&other.mono),
        }
    }
}

/// Terms sorted by decreasing monomial; index 0 is the leading term.
#[derive(Clone, Debug)]
struct SortedPoly {
    terms: Vec<(Keyed, FieldElement)>,
}

impl SortedPoly {
    fn from_poly(p: &Polynomial, order: &CompiledOrder) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(m, c)| (Keyed::new(order, m.clone()), c.clone())).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        SortedPoly { terms }
    }

    fn from_map(map: BTreeMap<Keyed, FieldElement>) -> Self {
        SortedPoly { terms: map.into_iter().rev().collect() }
    }

    fn lm(&self) -> &Keyed {
        &self.terms[0].0
    }

    fn make_monic(&mut self) {
        if let Some(inv) = self.terms.first().and_then(|t| t.1.inv()) {
            for t in &mut self.terms {
                t.1 = t.1.mul(&inv);
            }
        }
    }

    fn to_poly(&self, ring: &Arc<Ring>) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().map(|(k, c)| (k.mono.clone(), c.clone())))
    }
}

fn add_into(map: &mut BTreeMap<Keyed, FieldElement>, k: Keyed, c: FieldElement) {
    use std::collections::btree_map::Entry;
    match map.entry(k) {
        Entry::Occupied(mut e) => {
            let s = e.get().add(&c);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
    }
}

/// Full reduction of `work` modulo monic `basis`.
fn reduce(mut work: BTreeMap<Keyed, FieldElement>, basis: &[&SortedPoly]) -> BTreeMap<Keyed, FieldElement> {
    let mut rem = BTreeMap::new();
    while let Some((lm, lc)) = work.pop_last() {
        match basis.iter().find(|g| g.lm().mono.divides(&lm.mono)) {
            Some(g) => {
                let q = g.lm().quotient_of(&lm);
                for (t, c) in &g.terms[1..] {
                    add_into(&mut work, t.mul(&q), lc.mul(c).neg());
                }
            }
            None => {
                rem.insert(lm, lc);
            }
        }
    }
    rem
}

/// A reduced Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    order: MonomialOrder,
    compiled: CompiledOrder,
    sorted: Vec<SortedPoly>,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Basis elements, monic, sorted by decreasing leading monomial.
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|p| p.lm().mono.clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.sorted.iter().any(|p| p.lm().mono.is_one())
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.ring {
            return Err(Error::AmbientMismatch);
        }
        let work: BTreeMap<_, _> =
            f.terms().map(|(m, c)| (Keyed::new(&self.compiled, m.clone()), c.clone())).collect();
        let refs: Vec<&SortedPoly> = self.sorted.iter().collect();
        Ok(SortedPoly::from_map(reduce(work, &refs)).to_poly(&self.ring))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.basis.iter().cloned()).expect("same ring")
    }

    /// Ideal of leading monomials.
    pub fn initial_ideal(&self) -> Ideal {
        Ideal::new(
            &self.ring,
            self.sorted
                .iter()
                .map(|p| Polynomial::term(&self.ring, p.lm().mono.clone(), self.ring.field().one())),
        )
        .expect("same ring")
    }
}

/// Computes the reduced Gröbner basis of `ideal` under `order`.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> GroebnerBasis {
    let ring = ideal.ring().clone();
    let compiled = order.compile(ring.nvars());

    let mut basis: Vec<SortedPoly> = Vec::new();
    // S-pairs of monomials vanish, so a monomial ideal only needs minimizing.
    if ideal.generators().iter().all(|g| g.num_terms() == 1) {
        basis = ideal
            .generators()
            .iter()
            .map(|g| {
                let mut p = SortedPoly::from_poly(g, &compiled);
                p.make_monic();
                p
            })
            .collect();
        return finish(ring, order, compiled, basis);
    }

    // Normal strategy: smallest lcm degree first, ties broken by pair indices.
    let mut pending = BinaryHeap::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();

    let push = |basis: &mut Vec<SortedPoly>,
                pending: &mut BinaryHeap<Reverse<(u64, usize, usize)>>,
                pending_set: &mut HashSet<(usize, usize)>,
                mut p: SortedPoly| {
        p.make_monic();
        let k = basis.len();
        for (i, q) in basis.iter().enumerate() {
            let deg = u64::from(q.lm().mono.lcm(&p.lm().mono).degree());
            pending.push(Reverse((deg, i, k)));
            pending_set.insert((i, k));
        }
        basis.push(p);
    };

    for g in ideal.generators() {
        let sp = SortedPoly::from_poly(g, &compiled);
        let refs: Vec<&SortedPoly> = basis.iter().collect();
        let work: BTreeMap<_, _> = sp.terms.into_iter().collect();
        let r = reduce(work, &refs);
        if !r.is_empty() {
            push(&mut basis, &mut pending, &mut pending_set, SortedPoly::from_map(r));
        }
    }

    while let Some(Reverse((_, i, j))) = pending.pop() {
        pending_set.remove(&(i, j));

        let (li, lj) = (&basis[i].lm().mono, &basis[j].lm().mono);
        if li.is_coprime(lj) {
            continue;
        }
        let lcm = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().mono.divides(&lcm)
                && !pending_set.contains(&(i.min(k), i.max(k)))
                && !pending_set.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], &compiled);
        let refs: Vec<&SortedPoly> = basis.iter().collect();
        let r = reduce(s, &refs);
        if !r.is_empty() {
            push(&mut basis, &mut pending, &mut pending_set, SortedPoly::from_map(r));
        }
    }

    finish(ring, order, compiled, basis)
}

fn finish(
    ring: Arc<Ring>,
    order: &MonomialOrder,
    compiled: CompiledOrder,
    basis: Vec<SortedPoly>,
) -> GroebnerBasis {
    let sorted = reduce_basis(basis);
    let polys = sorted.iter().map(|p| p.to_poly(&ring)).collect();
    GroebnerBasis { ring, order: order.clone(), compiled, sorted, basis: polys }
}

fn s_polynomial(f: &SortedPoly, g: &SortedPoly, order: &CompiledOrder) -> BTreeMap<Keyed, FieldElement> {
    let lcm = Keyed::new(order, f.lm().mono.lcm(&g.lm().mono));
    let fq = f.lm().quotient_of(&lcm);
    let gq = g.lm().quotient_of(&lcm);
    let mut out = BTreeMap::new();
    for (t, c) in &f.terms[1..] {
        add_into(&mut out, t.mul(&fq), c.clone());
    }
    for (t, c) in &g.terms[1..] {
        add_into(&mut out, t.mul(&gq), c.neg());
    }
    out
}

/// Minimizes and interreduces a Gröbner basis, sorting by leading monomial.
fn reduce_basis(basis: Vec<SortedPoly>) -> Vec<SortedPoly> {
    let n = basis.len();
    let mut keep = vec![true; n];
    for i in 0..n {
        for j in 0..n {
            if i == j || !keep[j] {
                continue;
            }
            let (mi, mj) = (&basis[i].lm().mono, &basis[j].lm().mono);
            if mj.divides(mi) && (mi != mj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<SortedPoly> = basis.into_iter().zip(keep).filter_map(|(p, k)| k.then_some(p)).collect();
    let mut out: Vec<SortedPoly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<&SortedPoly> =
                minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p).collect();
            let head = minimal[i].terms[0].clone();
            let tail: BTreeMap<_, _> = minimal[i].terms[1..].iter().cloned().collect();
            let mut r = reduce(tail, &others);
            r.insert(head.0, head.1);
            let mut p = SortedPoly::from_map(r);
            p.make_monic();
            p
        })
        .collect();
    out.sort_by(|a, b| b.lm().cmp(a.lm()));
    out
}

/// Remainder of `f` modulo `gb`.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(f)
}

pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if f.ring() != ideal.ring() {
        return Err(Error::AmbientMismatch);
    }
    buchberger(ideal, &MonomialOrder::GrevLex).contains(f)
}

/// True iff every generator of each ideal lies in the other.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    if a.ring() != b.ring() {
        return Err(Error::AmbientMismatch);
    }
    let ga = buchberger(a, &MonomialOrder::GrevLex);
    let gb = buchberger(b, &MonomialOrder::GrevLex);
    for g in b.generators() {
        if !ga.contains(g)? {
            return Ok(false);
        }
    }
    for g in a.generators() {
        if !gb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ideal ∩ k[keep]`, generated by the basis elements (under a block order
/// eliminating the complement) that involve only `keep` variables. The result
/// lives in the same ring as `ideal`.
pub fn elimination_ideal(ideal: &Ideal, keep: &[usize]) -> Ideal {
    let n = ideal.ring().nvars();
    let order = MonomialOrder::eliminating((0..n).filter(|i| !keep.contains(i)));
    let gb = buchberger(ideal, &order);
    Ideal::new(ideal.ring(), gb.basis().iter().filter(|g| g.uses_only(keep)).cloned()).expect("same ring")
}

/// `ideal^n` generated by all `n`-fold products of generators.
pub fn ideal_power(ideal: &Ideal, n: u32, bound: u32) -> Result<Ideal> {
    if n > bound {
        return Err(Error::BoundExceeded(format!("ideal power {n} exceeds bound {bound}")));
    }
    let ring = ideal.ring();
    let gens = ideal.generators();
    let mut layer: Vec<(usize, Polynomial)> = vec![(0, Polynomial::one(ring))];
    for _ in 0..n {
        let mut next = Vec::new();
        for (start, p) in &layer {
            for (k, g) in gens.iter().enumerate().skip(*start) {
                next.push((k, p.mul(g)?));
            }
        }
        layer = next;
    }
    let mut seen = HashSet::new();
    let prods = layer.into_iter().map(|(_, p)| p).filter(|p| seen.insert(p.clone()));
    Ideal::new(ring, prods)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn ring(vars: &[&str]) -> Arc<Ring> {
        Ring::new(vars.iter().copied(), Field::Rational)
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        parse_poly(s, r).unwrap()
    }

    fn basis_strings(gb: &GroebnerBasis) -> Vec<String> {
        gb.basis().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x", "y", "z"]);
        let gx = buchberger(&Ideal::parse(&r, ["x"]).unwrap(), &MonomialOrder::GrevLex);
        assert!(gx.normal_form(&p(&r, "x^2")).unwrap().is_zero());

        let r2 = ring(&["x1", "x2"]);
        let g1 = buchberger(&Ideal::parse(&r2, ["x1"]).unwrap(), &MonomialOrder::GrevLex);
        assert_eq!(g1.normal_form(&p(&r2, "x1*x2 + x2^2")).unwrap(), p(&r2, "x2^2"));

        let lex = buchberger(&Ideal::parse(&r, ["x*y - z"]).unwrap(), &MonomialOrder::Lex);
        assert_eq!(lex.normal_form(&p(&r, "x^2*y")).unwrap(), p(&r, "x*z"));
    }

    #[test]
    fn buchberger_examples() {
        let r = ring(&["x", "y", "z"]);
        let g = buchberger(&Ideal::parse(&r, ["x"]).unwrap(), &MonomialOrder::GrevLex);
        assert_eq!(basis_strings(&g), ["x"]);

        let g = buchberger(&Ideal::parse(&r, ["x*y", "x - z"]).unwrap(), &MonomialOrder::Lex);
        let mut b = basis_strings(&g);
        b.sort();
        assert_eq!(b, ["x - z", "y*z"]);

        let g = buchberger(&Ideal::parse(&r, ["x^2", "x*y"]).unwrap(), &MonomialOrder::GrevLex);
        assert_eq!(basis_strings(&g), ["x^2", "x*y"]);
    }

    #[test]
    fn zero_and_unit_ideals() {
        let r = ring(&["x", "y"]);
        let g = buchberger(&Ideal::zero(&r), &MonomialOrder::GrevLex);
        assert!(g.basis().is_empty());
        assert!(!g.contains(&p(&r, "x")).unwrap());
        let g = buchberger(&Ideal::parse(&r, ["x", "x + 1"]).unwrap(), &MonomialOrder::GrevLex);
        assert!(g.is_unit());
        assert_eq!(basis_strings(&g), ["1"]);
    }

    #[test]
    fn membership_examples() {
        let r = ring(&["x1", "x2"]);
        let i = |g: &[&str]| Ideal::parse(&r, g.iter().copied()).unwrap();
        assert!(ideal_member(&p(&r, "x1*x2"), &i(&["x1"])).unwrap());
        assert!(!ideal_member(&p(&r, "x1 + x2"), &i(&["x1*x2"])).unwrap());
        assert!(ideal_member(&p(&r, "x2^2"), &i(&["x1 - x2", "x1*x2"])).unwrap());
    }

    #[test]
    fn equality_examples() {
        let r = ring(&["x", "y"]);
        let i = |g: &[&str]| Ideal::parse(&r, g.iter().copied()).unwrap();
        assert!(ideal_equal(&i(&["x", "y"]), &i(&["x + y", "y"])).unwrap());
        assert!(!ideal_equal(&i(&["x^2"]), &i(&["x"])).unwrap());
        let r = ring(&["x1", "x2"]);
        let i = |g: &[&str]| Ideal::parse(&r, g.iter().copied()).unwrap();
        assert!(!ideal_equal(&i(&["x1", "x2"]), &i(&["x1 + x2", "x1*x2"])).unwrap());
    }

    #[test]
    fn elimination_examples() {
        let r = ring(&["X1", "X2", "X3"]);
        let i = |g: &[&str]| Ideal::parse(&r, g.iter().copied()).unwrap();
        assert!(elimination_ideal(&i(&["X1*X2"]), &[0]).is_zero());
        assert_eq!(elimination_ideal(&i(&["X1*X2", "X3^2"]), &[2]).canonical_strings(), ["X3^2"]);
        let e = elimination_ideal(&i(&["X1 - X2", "X2^2"]), &[0]);
        assert_eq!(e.canonical_strings(), ["X1^2"]);
    }

    #[test]
    fn power_examples() {
        let r = ring(&["x", "y", "x3"]);
        let i = |g: &[&str]| Ideal::parse(&r, g.iter().copied()).unwrap();
        assert_eq!(ideal_power(&i(&["x"]), 3, 12).unwrap().canonical_strings(), ["x^3"]);
        assert_eq!(ideal_power(&i(&["x", "y"]), 2, 12).unwrap().canonical_strings(), ["x^2", "x*y", "y^2"]);
        assert_eq!(ideal_power(&i(&["x + y", "x3"]), 2, 12).unwrap().generators().len(), 3);
        assert_eq!(ideal_power(&i(&["x"]), 0, 12).unwrap().canonical_strings(), ["1"]);
        assert!(matches!(ideal_power(&i(&["x"]), 13, 12), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = ring(&["x"]);
        let b = ring(&["y"]);
        let i = Ideal::parse(&a, ["x"]).unwrap();
        assert_eq!(ideal_member(&p(&b, "y"), &i), Err(Error::AmbientMismatch));
        assert!(Ideal::new(&a, [p(&b, "y")]).is_err());
    }
}
