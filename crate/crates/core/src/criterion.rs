//! Decides whether `G = gr_I(A)` is isomorphic to `A = S/J` at the level of
//! presentations.
//!
//! The test has two parts. First, `I` must be generated by the images of a
//! set of variables `x_B`; the only candidate is `B = {i : x_i ∈ I + J}`,
//! since any variable generating set of `I` lies inside that set and the set
//! itself generates at most `I`. Second, `J` must split: it must admit a
//! generating set whose members each lie in `k[X_B]` or in `k[X_C]`, `C` the
//! complement of `B`.
//!
//! Such a generating set exists iff `J = (J ∩ k[X_B]) S + (J ∩ k[X_C]) S`.
//! If the equality holds, the generators of the two elimination ideals form
//! one. Conversely, if `J = (h_1..h_p)` with each `h_j` in `k[X_B]` or
//! `k[X_C]`, then each `h_j` lies in the corresponding elimination ideal, so
//! `J` is contained in their sum, and the sum is trivially inside `J`.
//! [`split_check`] tests exactly this equality.
//!
//! When both parts succeed, [`constructive_iso_verify`] rebuilds `Ker ψ`
//! and checks `Ker ψ = (X_B) + σ(J ∩ k[X_B]) + J ∩ k[X_C]`, where `σ`
//! renames `X_i ↦ Y_i` for `i ∈ B`. The quotient by the right-hand side is
//! `A` with `X_B` renamed to `Y`, so equality exhibits `G ≅ A`.

use serde::{Deserialize, Serialize};

use crate::blowup::assoc_graded_presentation;
use crate::error::{Error, Result};
use crate::groebner::{elimination_ideal, Ideal};
use crate::poly::Polynomial;
use crate::session::Session;

/// Certificate that `J` splits along `B ⊔ C`.
#[derive(Clone, Debug)]
pub struct SplitWitness {
    /// Variable indices of `B`, ascending.
    pub b: Vec<usize>,
    /// Complement of `B`, ascending.
    pub c: Vec<usize>,
    /// `J ∩ k[X_B]` (in the ring of `J`).
    pub jb: Ideal,
    /// `J ∩ k[X_C]`.
    pub jc: Ideal,
}

impl SplitWitness {
    /// Target index of each variable under `σ` inside `k[X, Y]` with
    /// `n + |B|` variables: `X_{b_k} ↦ Y_k`, `X_c ↦ X_c`.
    pub fn sigma(&self, n: usize) -> Vec<usize> {
        let mut map: Vec<usize> = (0..n).collect();
        for (k, &b) in self.b.iter().enumerate() {
            map[b] = n + k;
        }
        map
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureReason {
    NotVariableGenerated,
    NotSplit,
}

#[derive(Clone, Debug)]
pub struct IsoDecision {
    pub isomorphic: bool,
    pub witness: Option<SplitWitness>,
    /// Variable set `B` when `I` is generated by variables, even if `J` does
    /// not split.
    pub b: Option<Vec<usize>>,
    pub failure_reason: Option<FailureReason>,
    pub verified: bool,
    pub warnings: Vec<String>,
}

/// Returns `B = {i : x_i ∈ I + J}` if `I + J = (X_B) + J`, else `None`.
pub fn variable_subset_basis(
    session: &Session,
    i_gens: &[Polynomial],
    j: &Ideal,
) -> Result<Option<Vec<usize>>> {
    let s = j.ring();
    let ij = j.with(i_gens.iter().cloned())?;
    let mut b = Vec::new();
    for v in 0..s.nvars() {
        if session.member(&Polynomial::var(s, v), &ij)? {
            b.push(v);
        }
    }
    if b.is_empty() {
        return Ok(None);
    }
    let xb = Ideal::variables(s, &b).sum(j)?;
    Ok(session.ideal_equal(&ij, &xb)?.then_some(b))
}

/// Elimination ideals `J ∩ k[X_B]`, `J ∩ k[X_C]`; a witness iff they
/// generate `J`.
pub fn split_check(session: &Session, j: &Ideal, b: &[usize]) -> Result<Option<SplitWitness>> {
    let n = j.ring().nvars();
    let mut b: Vec<usize> = b.to_vec();
    b.sort_unstable();
    b.dedup();
    let c: Vec<usize> = (0..n).filter(|i| !b.contains(i)).collect();
    let jb = elimination_ideal(j, &b);
    let jc = elimination_ideal(j, &c);
    let sum = jb.sum(&jc)?;
    if session.contains_ideal(&sum, j)? {
        Ok(Some(SplitWitness { b, c, jb, jc }))
    } else {
        Ok(None)
    }
}

/// Options for [`theorem_main_decide`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DecideOptions {
    /// Proceed (with a warning) when `J` contains a linear form.
    pub allow_linear: bool,
}

/// Returns a nonzero linear form of `J`, if any.
pub fn linear_form_in(session: &Session, j: &Ideal) -> Option<Polynomial> {
    session.grevlex(j).basis().iter().find(|g| g.homogeneous_degree() == Some(1)).cloned()
}

/// Decides `A ≅ G` and, on success, certifies it constructively.
pub fn theorem_main_decide(
    session: &Session,
    j: &Ideal,
    i_gens: &[Polynomial],
    options: DecideOptions,
) -> Result<IsoDecision> {
    if !j.is_homogeneous() {
        return Err(Error::NotHomogeneous(format!("J = {j}")));
    }
    for f in i_gens {
        if f.ring() != j.ring() {
            return Err(Error::AmbientMismatch);
        }
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous(f.to_string()));
        }
    }
    let mut warnings = Vec::new();
    if let Some(l) = linear_form_in(session, j) {
        if !options.allow_linear {
            return Err(Error::LinearGenerator(l.to_string()));
        }
        warnings.push(format!("J is not generated in degree >= 2: it contains {l}"));
    }
    let ij = j.with(i_gens.iter().cloned())?;
    if session.grevlex(&ij).is_unit() {
        return Err(Error::UnitIdeal);
    }
    let i_ideal = Ideal::new(j.ring(), i_gens.iter().cloned())?;
    if session.contains_ideal(j, &i_ideal)? {
        return Err(Error::ZeroIdeal);
    }

    let Some(b) = variable_subset_basis(session, i_gens, j)? else {
        return Ok(IsoDecision {
            isomorphic: false,
            witness: None,
            b: None,
            failure_reason: Some(FailureReason::NotVariableGenerated),
            verified: false,
            warnings,
        });
    };
    match split_check(session, j, &b)? {
        None => Ok(IsoDecision {
            isomorphic: false,
            witness: None,
            b: Some(b),
            failure_reason: Some(FailureReason::NotSplit),
            verified: false,
            warnings,
        }),
        Some(w) => {
            let verified = constructive_iso_verify(session, j, &w)?;
            Ok(IsoDecision {
                isomorphic: true,
                witness: Some(w),
                b: Some(b),
                failure_reason: None,
                verified,
                warnings,
            })
        }
    }
}

/// Checks `Ker ψ = (X_B) + σ(J ∩ k[X_B]) + J ∩ k[X_C]` inside `k[X, Y]`.
pub fn constructive_iso_verify(session: &Session, j: &Ideal, witness: &SplitWitness) -> Result<bool> {
    let s = j.ring();
    let n = s.nvars();
    let consistent = witness.b.iter().chain(&witness.c).count() == n
        && witness.jb.generators().iter().all(|g| g.uses_only(&witness.b))
        && witness.jc.generators().iter().all(|g| g.uses_only(&witness.c))
        && witness.jb.ring() == s
        && witness.jc.ring() == s
        && session.ideal_equal(&witness.jb.sum(&witness.jc)?, j)?;
    if !consistent {
        return Err(Error::InconsistentWitness);
    }
    let f: Vec<Polynomial> = witness.b.iter().map(|&i| Polynomial::var(s, i)).collect();
    let pres = assoc_graded_presentation(session, j, &f)?;
    let xy = &pres.ring;
    let identity: Vec<usize> = (0..n).collect();
    let sigma = witness.sigma(n);
    let expected = Ideal::new(
        xy,
        f.iter()
            .map(|x| x.embed(xy, &identity))
            .chain(witness.jb.generators().iter().map(|g| g.embed(xy, &sigma)))
            .chain(witness.jc.generators().iter().map(|g| g.embed(xy, &identity))),
    )?;
    session.ideal_equal(&pres.defining_ideal, &expected)
}
