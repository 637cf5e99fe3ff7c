//! Presentations of the Rees algebra `A[It]` and of the associated graded
//! ring `G = ⊕ I^n/I^{n+1}` as quotients of `k[X, Y]`.
//!
//! `Y_i` stands for the generator `f_i t` (Rees algebra) or for the class of
//! `f_i` in `I/I^2` (associated graded ring). Each `X_i` has bidegree
//! `(1, 0)` and each `Y_i` has bidegree `(deg f_i, 1)`, where the first
//! component is the internal degree and the second the adic level. All
//! defining ideals are homogeneous for this bigrading.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{ideal_power, Ideal};
use crate::hilbert::{standard_monomial_counts, standard_monomial_table};
use crate::monomial::MonomialOrder;
use crate::poly::{Polynomial, Ring};
use crate::session::Session;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    Rees,
    AssocGraded,
}

/// `k[X, Y] / defining_ideal` together with its bigrading.
#[derive(Clone, Debug)]
pub struct ReesPresentation {
    pub ring: Arc<Ring>,
    pub x_vars: Vec<usize>,
    pub y_vars: Vec<usize>,
    /// Reduced grevlex basis, sorted by decreasing leading monomial.
    pub defining_ideal: Ideal,
    pub target: Target,
    /// `(internal degree, adic level)` per variable of `ring`.
    pub bigrading: Vec<(u32, u32)>,
}

impl ReesPresentation {
    pub fn x_names(&self) -> Vec<String> {
        self.x_vars.iter().map(|&i| self.ring.vars()[i].clone()).collect()
    }

    pub fn y_names(&self) -> Vec<String> {
        self.y_vars.iter().map(|&i| self.ring.vars()[i].clone()).collect()
    }
}

/// `dims[n][d] = dim_k (I^n + J)_d / (I^{n+1} + J)_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigradedHilbert {
    pub levels: u32,
    pub degree: u32,
    pub dims: Vec<Vec<u64>>,
}

impl BigradedHilbert {
    pub fn get(&self, level: u32, degree: u32) -> u64 {
        self.dims[level as usize][degree as usize]
    }
}

/// Checks the standing input conditions and returns `deg f_i`.
fn validate(session: &Session, j: &Ideal, f: &[Polynomial]) -> Result<Vec<u32>> {
    if !j.is_homogeneous() {
        return Err(Error::NotHomogeneous(format!("J = {j}")));
    }
    if f.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let mut degs = Vec::with_capacity(f.len());
    for fi in f {
        if fi.ring() != j.ring() {
            return Err(Error::AmbientMismatch);
        }
        let d = fi.homogeneous_degree().ok_or_else(|| Error::NotHomogeneous(fi.to_string()))?;
        if d == 0 {
            return Err(Error::UnitIdeal);
        }
        if session.member(fi, j)? {
            return Err(Error::DegenerateGenerator(fi.to_string()));
        }
        degs.push(d);
    }
    Ok(degs)
}

/// Names `Y1..Ym` (or fresh variants) appended to the X variables.
fn xy_names(s: &Arc<Ring>, m: usize) -> Vec<String> {
    let mut names: Vec<String> = s.vars().to_vec();
    let mut ys = Vec::new();
    for i in 1..=m {
        let y = s.fresh_name(&format!("Y{i}"), &ys);
        ys.push(y);
    }
    names.extend(ys);
    names
}

fn bigrading(n: usize, degs: &[u32]) -> Vec<(u32, u32)> {
    let mut w = vec![(1, 0); n];
    w.extend(degs.iter().map(|&d| (d, 1)));
    w
}

/// Defining ideal of `A[It]`: `(J + (Y_i - f_i t)) ∩ k[X, Y]`, obtained by
/// eliminating `t` with a block order.
pub fn rees_presentation(session: &Session, j: &Ideal, f: &[Polynomial]) -> Result<ReesPresentation> {
    let degs = validate(session, j, f)?;
    let s = j.ring();
    let (n, m) = (s.nvars(), f.len());
    let xy = xy_names(s, m);
    let t_name = Ring::new(xy.clone(), s.field()).fresh_name("t", &[]);
    let mut xyt = xy.clone();
    xyt.push(t_name);
    let big = Ring::new(xyt, s.field());
    let xy_ring = Ring::new(xy, s.field());

    let x_map: Vec<usize> = (0..n).collect();
    let t = Polynomial::var(&big, n + m);
    let mut gens: Vec<Polynomial> = j.generators().iter().map(|h| h.embed(&big, &x_map)).collect();
    for (i, fi) in f.iter().enumerate() {
        let y = Polynomial::var(&big, n + i);
        gens.push(y.sub(&fi.embed(&big, &x_map).mul(&t)?)?);
    }
    let total = Ideal::new(&big, gens)?;
    let gb = session.groebner(&total, &MonomialOrder::eliminating([n + m]));
    let keep: Vec<usize> = (0..n + m).collect();
    let drop_t: Vec<usize> = (0..n + m).collect();
    let kernel: Vec<Polynomial> =
        gb.basis().iter().filter(|g| g.uses_only(&keep)).map(|g| restrict(g, &xy_ring, &drop_t)).collect();
    let defining = Ideal::new(&xy_ring, kernel)?;
    Ok(ReesPresentation {
        ring: xy_ring,
        x_vars: (0..n).collect(),
        y_vars: (n..n + m).collect(),
        defining_ideal: canonical(session, &defining),
        target: Target::Rees,
        bigrading: bigrading(n, &degs),
    })
}

/// Copies a polynomial that only involves `vars` into `target`, where
/// variable `vars[k]` becomes variable `k`.
fn restrict(p: &Polynomial, target: &Arc<Ring>, vars: &[usize]) -> Polynomial {
    Polynomial::from_terms(
        target,
        p.terms()
            .map(|(m, c)| (crate::monomial::Monomial(vars.iter().map(|&i| m.0[i]).collect()), c.clone())),
    )
}

/// Reduced grevlex basis as the canonical generating set.
fn canonical(session: &Session, ideal: &Ideal) -> Ideal {
    session.grevlex(ideal).to_ideal()
}

/// `Ker ψ` = Rees defining ideal + `(f_1, ..., f_m)`; presents `G`.
pub fn assoc_graded_presentation(session: &Session, j: &Ideal, f: &[Polynomial]) -> Result<ReesPresentation> {
    let rees = rees_presentation(session, j, f)?;
    let x_map: Vec<usize> = rees.x_vars.clone();
    let fs = f.iter().map(|fi| fi.embed(&rees.ring, &x_map));
    let ker = rees.defining_ideal.with(fs)?;
    Ok(ReesPresentation { defining_ideal: canonical(session, &ker), target: Target::AssocGraded, ..rees })
}

/// Tests `g(X, f_1, ..., f_m) ∈ (f)^{d+1} + J` with `d = deg_Y(g)`.
///
/// `g` lives in `k[X, Y]` where the first `n` variables are the variables of
/// `J`'s ring and the next `m` correspond to `f`. It must be homogeneous in
/// the `Y` block and homogeneous for the internal degree.
pub fn lemma1_membership_check(
    session: &Session,
    g: &Polynomial,
    j: &Ideal,
    f: &[Polynomial],
) -> Result<bool> {
    let s = j.ring();
    let (n, m) = (s.nvars(), f.len());
    if g.ring().nvars() != n + m || g.field() != s.field() {
        return Err(Error::AmbientMismatch);
    }
    let degs: Vec<u32> = f
        .iter()
        .map(|fi| fi.homogeneous_degree().ok_or_else(|| Error::NotHomogeneous(fi.to_string())))
        .collect::<Result<_>>()?;
    let y_weights: Vec<u32> = (0..n + m).map(|i| u32::from(i >= n)).collect();
    let internal: Vec<u32> = bigrading(n, &degs).iter().map(|w| w.0).collect();
    let d = g
        .weighted_homogeneous_degree(&y_weights)
        .filter(|_| g.weighted_homogeneous_degree(&internal).is_some())
        .ok_or_else(|| Error::NotBihomogeneous(g.to_string()))? as u32;

    let mut images: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(s, i)).collect();
    images.extend(f.iter().cloned());
    let value = g.substitute(s, &images)?;
    let fi = Ideal::new(s, f.iter().cloned())?;
    let target = ideal_power(&fi, d + 1, session.config().power_bound)?.sum(j)?;
    session.member(&value, &target)
}

/// Bigraded Hilbert table of `G` from Hilbert functions of `S/(I^n + J)`.
pub fn bigraded_hilbert_g(
    session: &Session,
    j: &Ideal,
    f: &[Polynomial],
    levels: u32,
    degree: u32,
) -> Result<BigradedHilbert> {
    validate(session, j, f)?;
    let bound = session.config().power_bound;
    if levels + 1 > bound {
        return Err(Error::BoundExceeded(format!(
            "level window {levels} needs I^{} beyond power bound {bound}",
            levels + 1
        )));
    }
    let s = j.ring();
    let fi = Ideal::new(s, f.iter().cloned())?;
    // quotient[n][d] = dim (S/(I^n + J))_d
    let mut quotient = Vec::with_capacity(levels as usize + 2);
    for n in 0..=levels + 1 {
        let ideal = ideal_power(&fi, n, bound)?.sum(j)?;
        let gb = session.grevlex(&ideal);
        quotient.push(standard_monomial_counts(&gb.leading_monomials(), s.nvars(), degree));
    }
    let dims = (0..=levels as usize)
        .map(|n| (0..=degree as usize).map(|d| quotient[n + 1][d] - quotient[n][d]).collect())
        .collect();
    Ok(BigradedHilbert { levels, degree, dims })
}

/// Bigraded Hilbert table of `k[X, Y] / defining_ideal`, indexed like
/// [`BigradedHilbert`] (level = Y-weight).
pub fn presentation_hilbert(
    session: &Session,
    pres: &ReesPresentation,
    levels: u32,
    degree: u32,
) -> BigradedHilbert {
    let gb = session.grevlex(&pres.defining_ideal);
    let table = standard_monomial_table(&gb.leading_monomials(), &pres.bigrading, degree);
    let dims = (0..=levels as usize)
        .map(|n| (0..=degree as usize).map(|d| table[d].get(n).copied().unwrap_or(0)).collect())
        .collect();
    BigradedHilbert { levels, degree, dims }
}
