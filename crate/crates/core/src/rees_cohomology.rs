//! Local cohomology, dimension and (generalized) Cohen-Macaulayness of the
//! Rees algebra `R = A[It]` for `A = k[Δ]` and `I = (x_B)` when `Δ` is the
//! join `Δ|B * Δ|C`.
//!
//! Then `A = A1 ⊗_k A2` with `A1 = k[Δ|B]`, `A2 = k[Δ|C]`, and
//! `R = A1[m1 t] ⊗_k A2`. `R` is graded by the internal degree of `A`
//! (`t` has degree 0), so `A1[m1 t]` is standard graded. Its cohomology is
//!
//! ```text
//! H^i(A1[m1 t])_a = H^i(A1)_a^(a+1)      a >= 0
//!                 = 0                    a = -1
//!                 = H^{i-1}(A1)_a^(-a-1) a <= -2
//! ```
//!
//! and the Künneth formula for graded local cohomology over `k` gives
//! `H^l(R)_a = ⊕_{p+q=l} ⊕_{α+β=a} H^p(A1[m1 t])_α ⊗ H^q(A2)_β`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hochster::{
    check_window, hochster_contributions, sr_invariants_from, window_from_contributions, CohomologyWindow,
    Contributions, IndexWindow, SRInvariants, Support,
};
use crate::parallel::Exec;
use crate::simplicial::{face_from, Face, SimplicialComplex};

/// `Δ = Δ1 * Δ2` along `B ⊔ C`, with Hochster data of all three rings.
#[derive(Clone, Debug)]
pub struct SplitSRData {
    pub delta: SimplicialComplex,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub delta1: SimplicialComplex,
    pub delta2: SimplicialComplex,
    pub d1: usize,
    pub d2: usize,
    pub field: Field,
    pub contributions: Contributions,
    pub contributions1: Contributions,
    pub contributions2: Contributions,
    pub exec: Exec,
}

impl SplitSRData {
    pub fn new(delta: &SimplicialComplex, b: &[usize], field: Field, exec: Exec) -> Result<Self> {
        let n = delta.nvertices();
        let mut b: Vec<usize> = b.to_vec();
        b.sort_unstable();
        b.dedup();
        if b.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        if let Some(v) = b.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidComplex(format!("vertex {} out of range", v + 1)));
        }
        let c: Vec<usize> = (0..n).filter(|i| !b.contains(i)).collect();
        let (bm, cm) = (face_from(&b), face_from(&c));
        let delta1 = delta.restrict(bm);
        let delta2 = delta.restrict(cm);
        if &delta1.join(&delta2) != delta {
            return Err(Error::NotSplit);
        }
        let contributions = hochster_contributions(delta, field, exec);
        let contributions1 = hochster_contributions(&delta1, field, exec);
        let contributions2 = hochster_contributions(&delta2, field, exec);
        Ok(SplitSRData {
            d1: (delta1.dim() + 1) as usize,
            d2: (delta2.dim() + 1) as usize,
            delta: delta.clone(),
            b,
            c,
            delta1,
            delta2,
            field,
            contributions,
            contributions1,
            contributions2,
            exec,
        })
    }

    pub fn b_mask(&self) -> Face {
        face_from(&self.b)
    }

    pub fn invariants(&self) -> SRInvariants {
        sr_invariants_from(&self.contributions, self.field)
    }

    pub fn invariants1(&self) -> SRInvariants {
        sr_invariants_from(&self.contributions1, self.field)
    }

    pub fn invariants2(&self) -> SRInvariants {
        sr_invariants_from(&self.contributions2, self.field)
    }

    pub fn window_a(&self, lo: i64, hi: i64) -> Result<CohomologyWindow> {
        check_window(lo, hi)?;
        window_from_contributions(&self.contributions, lo, hi)
    }

    pub fn window1(&self, lo: i64, hi: i64) -> Result<CohomologyWindow> {
        check_window(lo, hi)?;
        window_from_contributions(&self.contributions1, lo, hi)
    }

    pub fn window2(&self, lo: i64, hi: i64) -> Result<CohomologyWindow> {
        check_window(lo, hi)?;
        window_from_contributions(&self.contributions2, lo, hi)
    }
}

fn underflow(what: &str, j: i64) -> Error {
    Error::WindowUnderflow(format!("{what} needed in degree {j}"))
}

/// `H^q(M ⊗_k N)_a` for `lo <= a <= hi` from windows of `M` and `N`.
pub fn gw_tensor_assemble(
    w1: &CohomologyWindow,
    w2: &CohomologyWindow,
    q: usize,
    lo: i64,
    hi: i64,
) -> Result<IndexWindow> {
    let pairs: Vec<(IndexWindow, IndexWindow)> = (0..=q).map(|i| (w1.index(i), w2.index(q - i))).collect();
    let support = pairs.iter().map(|(x, y)| x.support.sum(y.support)).fold(Support::ZERO, Support::union);
    let mut dims = BTreeMap::new();
    for a in lo..=hi {
        let mut total: u64 = 0;
        for (x, y) in &pairs {
            if x.support.is_zero() || y.support.is_zero() {
                continue;
            }
            let (Some(max1), Some(max2)) = (x.support.max(), y.support.max()) else {
                continue;
            };
            for alpha in (a - max2)..=max1 {
                let beta = a - alpha;
                let m = x.get(alpha);
                let n = y.get(beta);
                let term = match (m, n) {
                    (Some(0), _) | (_, Some(0)) => 0,
                    (Some(m), Some(n)) => m
                        .checked_mul(n)
                        .ok_or_else(|| Error::BoundExceeded(format!("dimension in degree {a}")))?,
                    (None, _) => return Err(underflow(&format!("H^{}", x.index), alpha)),
                    (_, None) => return Err(underflow(&format!("H^{}", y.index), beta)),
                };
                total = total
                    .checked_add(term)
                    .ok_or_else(|| Error::BoundExceeded(format!("dimension in degree {a}")))?;
            }
        }
        dims.insert(a, total);
    }
    Ok(IndexWindow::new(q, dims, support))
}

/// `H^i(A[mt])_a` for `lo <= a <= hi` from a window of `A`.
pub fn hpt_rees_window(wa: &CohomologyWindow, i: usize, lo: i64, hi: i64) -> Result<IndexWindow> {
    let cur = wa.index(i);
    let prev = if i == 0 { None } else { Some(wa.index(i - 1)) };
    let mut dims = BTreeMap::new();
    for a in lo..=hi {
        let d = if a >= 0 {
            let v = cur.get(a).ok_or_else(|| underflow(&format!("H^{i}"), a))?;
            v * (a as u64 + 1)
        } else if a == -1 {
            0
        } else {
            match &prev {
                None => 0,
                Some(p) => {
                    let v = p.get(a).ok_or_else(|| underflow(&format!("H^{}", i - 1), a))?;
                    v * (-a - 1) as u64
                }
            }
        };
        dims.insert(a, d);
    }
    let support = Support {
        at_zero: cur.support.at_zero,
        ray_top: prev.and_then(|p| p.support.ray_top).map(|t| t.min(-2)),
    };
    Ok(IndexWindow::new(i, dims, support))
}

/// `H^l(R)_a`: the HPT window of `A1` tensored with the window of `A2`.
pub fn prop_assemble_rees(data: &SplitSRData, l: usize, lo: i64, hi: i64) -> Result<IndexWindow> {
    let (w1, w2) = factor_windows(data, lo, hi)?;
    let r1 = rees_factor_window(&w1, data.d1 + 1, lo, hi)?;
    gw_tensor_assemble(&r1, &w2, l, lo, hi)
}

/// Every `H^l(R)`, `0 <= l <= dim A + 1`, on `[lo, hi]`.
pub fn rees_window(data: &SplitSRData, lo: i64, hi: i64) -> Result<CohomologyWindow> {
    let (w1, w2) = factor_windows(data, lo, hi)?;
    let r1 = rees_factor_window(&w1, data.d1 + 1, lo, hi)?;
    let ls: Vec<usize> = (0..=data.d1 + data.d2 + 1).collect();
    let indices = data
        .exec
        .map(&ls, |&l| gw_tensor_assemble(&r1, &w2, l, lo, hi))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(CohomologyWindow { lo, hi, indices })
}

// Factor supports lie in (-∞, 0], so for output degrees in [lo, hi] every
// needed factor degree lies in [lo, max(hi, 0)].
fn factor_windows(data: &SplitSRData, lo: i64, hi: i64) -> Result<(CohomologyWindow, CohomologyWindow)> {
    check_window(lo, hi)?;
    Ok((data.window1(lo, hi)?, data.window2(lo, hi)?))
}

fn rees_factor_window(w1: &CohomologyWindow, top: usize, lo: i64, hi: i64) -> Result<CohomologyWindow> {
    let indices = (0..=top).map(|i| hpt_rees_window(w1, i, lo, hi)).collect::<Result<Vec<_>>>()?;
    Ok(CohomologyWindow { lo, hi, indices })
}

/// `true` iff every top-dimensional facet misses `B`, i.e. `I` lies in
/// every minimal prime `P` with `dim A/P = dim A`.
pub fn ideal_in_all_top_primes(delta: &SimplicialComplex, b: &[usize]) -> bool {
    let bm = face_from(b);
    delta.top_facets().iter().all(|&f| f & bm == 0)
}

/// `dim R`: `dim A` if `I` lies in every top-dimensional minimal prime,
/// `dim A + 1` otherwise.
pub fn dim_rees(delta: &SimplicialComplex, b: &[usize]) -> usize {
    let dim_a = (delta.dim() + 1) as usize;
    if ideal_in_all_top_primes(delta, b) {
        dim_a
    } else {
        dim_a + 1
    }
}

/// `R` is Cohen-Macaulay iff both tensor factors `A1[m1 t]` and `A2` are,
/// i.e. iff `A1` is Cohen-Macaulay with `a(A1) < 0` and `A2` is
/// Cohen-Macaulay. For `C = ∅` this reads `A` CM and `a(A) < 0`. When
/// `dim A1 = 0` (every `x_b` vanishes in `A`) `A1[m1 t] = k` and only `A2`
/// matters.
pub fn cm_rees(data: &SplitSRData) -> bool {
    let (inv1, inv2) = (data.invariants1(), data.invariants2());
    inv1.cm && (data.d1 == 0 || inv1.a_invariant.is_none_or(|a| a < 0)) && inv2.cm
}

/// The Cohen-Macaulay test applied to `A` itself, `cm(A) ∧ a(A) < 0`.
/// It agrees with [`cm_rees`] when `I = m` but not in general.
pub fn cm_rees_whole_ring_test(data: &SplitSRData) -> bool {
    let inv = data.invariants();
    inv.cm && inv.a_invariant.is_none_or(|a| a < 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GenCMCase {
    #[serde(rename = "case1-contained")]
    Contained,
    #[serde(rename = "case2-dimA2-zero")]
    DimA2Zero,
    #[serde(rename = "case3-vanishing")]
    Vanishing,
    #[serde(rename = "none")]
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenCMEvidence {
    #[serde(rename = "I_in_all_top_primes")]
    pub i_in_all_top_primes: bool,
    #[serde(rename = "dimA2_zero")]
    pub dim_a2_zero: bool,
    #[serde(rename = "a_A1_negative")]
    pub a_a1_negative: bool,
    #[serde(rename = "H_d1-1(A1)_le_-2_zero")]
    pub h_d1_below_minus_one_zero: bool,
    #[serde(rename = "H_d2-1(A2)_zero")]
    pub h_d2_zero: bool,
}

/// `dim R`, CM and genCM read directly off the assembled supports of
/// `H^l(R)`, independent of the case analysis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyCheck {
    #[serde(rename = "dim_R")]
    pub dim: usize,
    #[serde(rename = "cm_R")]
    pub cm: bool,
    pub gencm: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenCMVerdict {
    pub gencm: bool,
    pub case: GenCMCase,
    #[serde(rename = "dim_R")]
    pub dim_r: usize,
    #[serde(rename = "cm_R")]
    pub cm_r: bool,
    #[serde(rename = "precondition_A_gencm")]
    pub precondition_a_gencm: bool,
    /// `"in-theorem-scope"` or `"out-of-theorem-scope"`.
    pub scope: String,
    pub evidence: GenCMEvidence,
    /// Both `A1` and `A2` generalized Cohen-Macaulay.
    pub factors_gencm: bool,
    /// `A` genCM implies both factors genCM.
    pub factor_lemma_consistent: bool,
    pub cohomology_check: CohomologyCheck,
}

/// Supports of every `H^l(R)`, computed symbolically.
pub fn rees_supports(data: &SplitSRData) -> Vec<Support> {
    let s1: Vec<Support> = (0..=data.d1).map(|i| data.contributions1.support(i)).collect();
    let s2: Vec<Support> = (0..=data.d2).map(|i| data.contributions2.support(i)).collect();
    let at = |v: &[Support], i: usize| v.get(i).copied().unwrap_or(Support::ZERO);
    let r1: Vec<Support> = (0..=data.d1 + 1)
        .map(|i| Support {
            at_zero: at(&s1, i).at_zero,
            ray_top: i.checked_sub(1).and_then(|p| at(&s1, p).ray_top).map(|t| t.min(-2)),
        })
        .collect();
    (0..=data.d1 + data.d2 + 1)
        .map(|l| (0..=l).map(|p| at(&r1, p).sum(at(&s2, l - p))).fold(Support::ZERO, Support::union))
        .collect()
}

pub fn cohomology_check(data: &SplitSRData) -> CohomologyCheck {
    let s = rees_supports(data);
    let dim = (0..s.len()).rev().find(|&l| !s[l].is_zero()).unwrap_or(0);
    CohomologyCheck {
        dim,
        cm: (0..dim).all(|l| s[l].is_zero()),
        gencm: (0..dim).all(|l| s[l].ray_top.is_none()),
    }
}

/// Evaluates the three cases in order and reports every condition.
pub fn gencm_decide(data: &SplitSRData) -> GenCMVerdict {
    let inv = data.invariants();
    let (inv1, inv2) = (data.invariants1(), data.invariants2());
    let (d1, d2) = (data.d1, data.d2);
    let evidence = GenCMEvidence {
        i_in_all_top_primes: ideal_in_all_top_primes(&data.delta, &data.b),
        dim_a2_zero: d2 == 0,
        a_a1_negative: inv1.a_invariant.is_none_or(|a| a < 0),
        h_d1_below_minus_one_zero: d1 == 0 || data.contributions1.support(d1 - 1).ray_top.is_none(),
        h_d2_zero: d2 == 0 || data.contributions2.support(d2 - 1).is_zero(),
    };
    let case = if evidence.i_in_all_top_primes {
        GenCMCase::Contained
    } else if evidence.dim_a2_zero {
        GenCMCase::DimA2Zero
    } else if d1 > 0 && evidence.a_a1_negative && evidence.h_d1_below_minus_one_zero && evidence.h_d2_zero {
        GenCMCase::Vanishing
    } else {
        GenCMCase::None
    };
    let factors_gencm = inv1.gencm && inv2.gencm;
    GenCMVerdict {
        gencm: case != GenCMCase::None,
        case,
        dim_r: dim_rees(&data.delta, &data.b),
        cm_r: cm_rees(data),
        precondition_a_gencm: inv.gencm,
        scope: if inv.gencm { "in-theorem-scope" } else { "out-of-theorem-scope" }.into(),
        evidence,
        factors_gencm,
        factor_lemma_consistent: !inv.gencm || factors_gencm,
        cohomology_check: cohomology_check(data),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let f: Vec<Vec<usize>> = facets.iter().map(|f| f.iter().map(|v| v - 1).collect()).collect();
        SimplicialComplex::new(n, &f).unwrap()
    }

    fn data(d: &SimplicialComplex, b: &[usize]) -> SplitSRData {
        let b: Vec<usize> = b.iter().map(|v| v - 1).collect();
        SplitSRData::new(d, &b, Field::Rational, Exec::Sequential).unwrap()
    }

    fn row(w: &IndexWindow) -> Vec<u64> {
        w.dims.values().copied().collect()
    }

    #[test]
    fn tensor_with_base_field_is_identity() {
        let point = crate::hochster::hochster_window(&cx(1, &[&[1]]), Field::Rational, -5, 1).unwrap();
        let k = crate::hochster::hochster_window(&cx(1, &[&[]]), Field::Rational, -5, 1).unwrap();
        let out = gw_tensor_assemble(&point, &k, 1, -5, 1).unwrap();
        assert_eq!(out.dims, point.indices[1].dims);
        assert_eq!(out.support, point.indices[1].support);
    }

    #[test]
    fn tensor_of_two_lines() {
        let point = crate::hochster::hochster_window(&cx(1, &[&[1]]), Field::Rational, -6, 1).unwrap();
        let out = gw_tensor_assemble(&point, &point, 2, -6, 1).unwrap();
        assert_eq!(row(&out), [5, 4, 3, 2, 1, 0, 0, 0]);
        let zero = CohomologyWindow { lo: -6, hi: 1, indices: vec![IndexWindow::zero(0, -6, 1)] };
        assert!(gw_tensor_assemble(&point, &zero, 1, -6, 1).unwrap().is_zero);
    }

    #[test]
    fn hpt_bands() {
        let point = crate::hochster::hochster_window(&cx(1, &[&[1]]), Field::Rational, -4, 1).unwrap();
        let h2 = hpt_rees_window(&point, 2, -4, 1).unwrap();
        assert_eq!(h2.dims[&-2], 1);
        assert_eq!(h2.dims[&-3], 2);
        assert_eq!(h2.dims[&-1], 0);
    }

    #[test]
    fn narrow_windows_underflow() {
        let point = crate::hochster::hochster_window(&cx(1, &[&[1]]), Field::Rational, -2, 0).unwrap();
        assert!(matches!(hpt_rees_window(&point, 2, -4, 0), Err(Error::WindowUnderflow(_))));
        assert!(matches!(gw_tensor_assemble(&point, &point, 2, -5, 0), Err(Error::WindowUnderflow(_))));
    }

    #[test]
    fn trivariate_polynomial_ring() {
        let d = data(&cx(2, &[&[1, 2]]), &[1]);
        let h3 = prop_assemble_rees(&d, 3, -8, 1).unwrap();
        for a in -8..=-3i64 {
            assert_eq!(h3.dims[&a] as i64, (-a - 1) * (-a - 2) / 2);
        }
    }

    #[test]
    fn dimension_formula() {
        assert_eq!(dim_rees(&cx(2, &[&[1], &[2]]), &[0]), 2);
        assert_eq!(dim_rees(&cx(3, &[&[1], &[2, 3]]), &[0]), 2);
    }

    #[test]
    fn not_split_is_rejected() {
        let d = cx(3, &[&[1], &[2, 3]]);
        assert!(matches!(
            SplitSRData::new(&d, &[0], Field::Rational, Exec::Sequential),
            Err(Error::NotSplit)
        ));
    }

    #[test]
    fn cm_examples() {
        assert!(cm_rees(&data(&cx(2, &[&[1, 2]]), &[1])));
        assert!(!cm_rees(&data(&cx(2, &[&[1], &[2]]), &[1, 2])));
    }

    #[test]
    fn gencm_examples() {
        let v = gencm_decide(&data(&cx(2, &[&[1], &[2]]), &[1, 2]));
        assert_eq!(
            (v.gencm, v.case, v.cm_r, v.precondition_a_gencm),
            (true, GenCMCase::DimA2Zero, false, true)
        );

        let cyc = cx(5, &[&[1, 2, 3, 4], &[1, 2, 3, 5], &[1, 2, 4, 5]]);
        let v = gencm_decide(&data(&cyc, &[1, 2]));
        assert_eq!((v.gencm, v.case), (true, GenCMCase::Vanishing));

        let edges = cx(6, &[&[1, 2, 3, 4], &[1, 2, 5, 6]]);
        let v = gencm_decide(&data(&edges, &[1, 2]));
        assert_eq!((v.gencm, v.case, v.precondition_a_gencm), (false, GenCMCase::None, false));
        assert_eq!(v.scope, "out-of-theorem-scope");
    }

    #[test]
    fn degenerate_case_one() {
        // Slot 1 is not a vertex, so I = (x1) is zero in A and R = A.
        let d = cx(3, &[&[2, 3]]);
        let v = gencm_decide(&data(&d, &[1]));
        assert_eq!((v.gencm, v.case, v.dim_r, v.cm_r), (true, GenCMCase::Contained, 2, true));
        assert_eq!(v.cohomology_check, CohomologyCheck { dim: 2, cm: true, gencm: true });
    }

    #[test]
    fn cm_of_rees_needs_the_factor_a_invariant() {
        // Path x1 - y - x2 with I = (x1, x2): A is CM with a(A) = -1, but
        // A1 = k[x1, x2]/(x1 x2) has a(A1) = 0, so R is not CM.
        let path = cx(3, &[&[1, 3], &[2, 3]]);
        let d = data(&path, &[1, 2]);
        assert!(cm_rees_whole_ring_test(&d));
        assert!(!cm_rees(&d));
        let v = gencm_decide(&d);
        assert!(v.precondition_a_gencm && !v.gencm);
        assert_eq!(v.cohomology_check, CohomologyCheck { dim: 3, cm: false, gencm: false });
    }
}
