//! Graded local cohomology of Stanley-Reisner rings.
//!
//! `dim H^i_m(k[Δ])_j = Σ_σ rank H̃_{i-|σ|-1}(lk σ) · #{b ∈ Z_{>0}^σ : |b| = -j}`,
//! so the empty face contributes only in degree 0 and a face with `s`
//! vertices contributes `C(-j-1, s-1)` copies in every degree `j <= -s`.
//!
//! Every module here (and every module assembled from these by the Rees
//! formulas) is supported on `{0} ∪ (-∞, t]` for some `t <= -1`, with
//! nonzero dimension at every point of the ray. [`Support`] records that
//! shape, so vanishing and finiteness are known exactly, independent of
//! the window in which dimensions are tabulated.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::parallel::Exec;
use crate::simplicial::{face_size, SimplicialComplex};

/// Exact support of a graded module: possibly degree 0, plus possibly
/// every degree `<= ray_top`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Support {
    pub at_zero: bool,
    pub ray_top: Option<i64>,
}

impl Support {
    pub const ZERO: Support = Support { at_zero: false, ray_top: None };

    pub fn contains(&self, j: i64) -> bool {
        (self.at_zero && j == 0) || self.ray_top.is_some_and(|t| j <= t)
    }

    pub fn is_zero(&self) -> bool {
        !self.at_zero && self.ray_top.is_none()
    }

    pub fn max(&self) -> Option<i64> {
        if self.at_zero {
            Some(0.max(self.ray_top.unwrap_or(0)))
        } else {
            self.ray_top
        }
    }

    pub fn union(self, other: Support) -> Support {
        Support {
            at_zero: self.at_zero || other.at_zero,
            ray_top: match (self.ray_top, other.ray_top) {
                (Some(a), Some(b)) => Some(a.max(b)),
                (a, b) => a.or(b),
            },
        }
    }

    /// Support of a tensor product over `k`: `{α + β}`.
    pub fn sum(self, other: Support) -> Support {
        if self.is_zero() || other.is_zero() {
            return Support::ZERO;
        }
        let mut top = None;
        let mut push = |t: i64| top = Some(top.map_or(t, |u: i64| u.max(t)));
        if let Some(t) = self.ray_top {
            if other.at_zero {
                push(t);
            }
            if let Some(u) = other.ray_top {
                push(t + u);
            }
        }
        if let (true, Some(u)) = (self.at_zero, other.ray_top) {
            push(u);
        }
        Support { at_zero: self.at_zero && other.at_zero, ray_top: top }
    }
}

/// One cohomological index: dimensions on the window and exact flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexWindow {
    pub index: usize,
    pub dims: BTreeMap<i64, u64>,
    pub is_zero: bool,
    pub finite_length: bool,
    /// `H^i_j = 0` for all `j <= -2`.
    pub vanishes_below_minus_one: bool,
    pub support: Support,
}

impl IndexWindow {
    pub fn new(index: usize, dims: BTreeMap<i64, u64>, support: Support) -> Self {
        IndexWindow {
            index,
            dims,
            is_zero: support.is_zero(),
            finite_length: support.ray_top.is_none(),
            vanishes_below_minus_one: support.ray_top.is_none(),
            support,
        }
    }

    pub fn zero(index: usize, lo: i64, hi: i64) -> Self {
        Self::new(index, (lo..=hi).map(|j| (j, 0)).collect(), Support::ZERO)
    }

    /// Dimension in degree `j`; `None` if `j` lies outside the window and
    /// the support does not certify vanishing.
    pub fn get(&self, j: i64) -> Option<u64> {
        match self.dims.get(&j) {
            Some(&d) => Some(d),
            None if !self.support.contains(j) => Some(0),
            None => None,
        }
    }
}

/// Local cohomology `H^i` for `i = 0..indices.len()`, tabulated on `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyWindow {
    pub lo: i64,
    pub hi: i64,
    pub indices: Vec<IndexWindow>,
}

impl CohomologyWindow {
    /// `H^i`, or a zero module for indices past the top.
    pub fn index(&self, i: usize) -> IndexWindow {
        self.indices.get(i).cloned().unwrap_or_else(|| IndexWindow::zero(i, self.lo, self.hi))
    }

    pub fn get(&self, i: usize, j: i64) -> Option<u64> {
        match self.indices.get(i) {
            Some(w) => w.get(j),
            None => Some(0),
        }
    }
}

/// Checks `lo <= 0 <= hi`.
pub fn check_window(lo: i64, hi: i64) -> Result<()> {
    if lo > 0 || hi < 0 {
        return Err(Error::InvalidWindow(format!("{lo}:{hi} must contain degree 0")));
    }
    if lo < -10_000 {
        return Err(Error::BoundExceeded(format!("window lower end {lo} below -10000")));
    }
    Ok(())
}

/// `c[i][s]`: summed link homology ranks of faces with `s` vertices that
/// contribute to `H^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contributions {
    pub by_index: Vec<Vec<u64>>,
}

impl Contributions {
    pub fn support(&self, i: usize) -> Support {
        let Some(row) = self.by_index.get(i) else {
            return Support::ZERO;
        };
        Support {
            at_zero: row.first().is_some_and(|&c| c > 0),
            ray_top: row.iter().enumerate().skip(1).find(|(_, &c)| c > 0).map(|(s, _)| -(s as i64)),
        }
    }

    pub fn dim(&self, i: usize, j: i64) -> Result<u64> {
        let Some(row) = self.by_index.get(i) else {
            return Ok(0);
        };
        let mut total: u128 = if j == 0 { row[0] as u128 } else { 0 };
        for (s, &c) in row.iter().enumerate().skip(1) {
            if c > 0 && j <= -(s as i64) {
                total += c as u128 * binomial((-j - 1) as u64, s as u64 - 1)?;
            }
        }
        u64::try_from(total).map_err(|_| Error::BoundExceeded(format!("dimension of H^{i} in degree {j}")))
    }
}

fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128).ok_or_else(|| Error::BoundExceeded(format!("C({n}, {k})")))?
            / (i as u128 + 1);
    }
    Ok(acc)
}

/// Hochster contributions, one link homology computation per face.
pub fn hochster_contributions(delta: &SimplicialComplex, field: Field, exec: Exec) -> Contributions {
    let faces = delta.faces();
    let ranks = exec.map(&faces, |&sigma| delta.link(sigma).expect("face").reduced_homology_ranks(field));
    let top = (delta.dim() + 1) as usize;
    let mut by_index = vec![vec![0u64; top + 1]; top + 1];
    for (&sigma, r) in faces.iter().zip(ranks) {
        let s = face_size(sigma);
        for (k1, &rank) in r.iter().enumerate() {
            // k = k1 - 1 and i = k + s + 1.
            by_index[k1 + s][s] += rank as u64;
        }
    }
    Contributions { by_index }
}

/// Tabulates `H^i_m(k[Δ])_j` for `0 <= i <= dim k[Δ]` and `lo <= j <= hi`.
pub fn hochster_window(
    delta: &SimplicialComplex,
    field: Field,
    lo: i64,
    hi: i64,
) -> Result<CohomologyWindow> {
    hochster_window_with(delta, field, lo, hi, Exec::default())
}

pub fn hochster_window_with(
    delta: &SimplicialComplex,
    field: Field,
    lo: i64,
    hi: i64,
    exec: Exec,
) -> Result<CohomologyWindow> {
    check_window(lo, hi)?;
    let c = hochster_contributions(delta, field, exec);
    window_from_contributions(&c, lo, hi)
}

pub fn window_from_contributions(c: &Contributions, lo: i64, hi: i64) -> Result<CohomologyWindow> {
    let indices = (0..c.by_index.len())
        .map(|i| {
            let dims = (lo..=hi).map(|j| Ok((j, c.dim(i, j)?))).collect::<Result<BTreeMap<_, _>>>()?;
            Ok(IndexWindow::new(i, dims, c.support(i)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CohomologyWindow { lo, hi, indices })
}

/// Invariants of `k[Δ]` read off the Hochster contributions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SRInvariants {
    #[serde(rename = "dim_A")]
    pub dim: usize,
    #[serde(rename = "depth_A")]
    pub depth: usize,
    /// `None` stands for minus infinity (only for a zero top module, which
    /// does not occur for a nonvoid complex).
    #[serde(with = "a_invariant_serde")]
    pub a_invariant: Option<i64>,
    pub cm: bool,
    pub gencm: bool,
    pub field: String,
}

pub(crate) mod a_invariant_serde {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Finite(i64),
        Text(String),
    }

    pub fn serialize<S: Serializer>(v: &Option<i64>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(a) => Repr::Finite(*a),
            None => Repr::Text("minus infinity".into()),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<i64>, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Finite(a) => Ok(Some(a)),
            Repr::Text(t) if t == "minus infinity" => Ok(None),
            Repr::Text(t) => Err(serde::de::Error::custom(format!("bad a-invariant {t}"))),
        }
    }
}

pub fn sr_invariants(delta: &SimplicialComplex, field: Field) -> SRInvariants {
    sr_invariants_from(&hochster_contributions(delta, field, Exec::default()), field)
}

pub fn sr_invariants_from(c: &Contributions, field: Field) -> SRInvariants {
    let dim = c.by_index.len() - 1;
    let depth = (0..=dim).find(|&i| !c.support(i).is_zero()).unwrap_or(dim);
    SRInvariants {
        dim,
        depth,
        a_invariant: c.support(dim).max(),
        cm: depth == dim,
        gencm: (0..dim).all(|i| c.support(i).ray_top.is_none()),
        field: field.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let f: Vec<Vec<usize>> = facets.iter().map(|f| f.iter().map(|v| v - 1).collect()).collect();
        SimplicialComplex::new(n, &f).unwrap()
    }

    fn row(w: &CohomologyWindow, i: usize) -> Vec<u64> {
        (w.lo..=w.hi).map(|j| w.get(i, j).unwrap()).collect()
    }

    #[test]
    fn two_points() {
        let w = hochster_window(&cx(2, &[&[1], &[2]]), Field::Rational, -4, 1).unwrap();
        assert_eq!(row(&w, 0), [0; 6]);
        assert_eq!(row(&w, 1), [2, 2, 2, 2, 1, 0]);
        assert!(!w.indices[1].finite_length);
        let inv = sr_invariants(&cx(2, &[&[1], &[2]]), Field::Rational);
        assert_eq!((inv.dim, inv.depth, inv.a_invariant, inv.cm, inv.gencm), (1, 1, Some(0), true, true));
    }

    #[test]
    fn polynomial_rings() {
        let w = hochster_window(&cx(2, &[&[1, 2]]), Field::Rational, -6, 1).unwrap();
        assert_eq!(row(&w, 2), [5, 4, 3, 2, 1, 0, 0, 0]);
        assert!(w.indices[0].is_zero && w.indices[1].is_zero);
        let inv = sr_invariants(&cx(2, &[&[1, 2]]), Field::Rational);
        assert_eq!((inv.dim, inv.depth, inv.a_invariant, inv.cm), (2, 2, Some(-2), true));

        let point = hochster_window(&cx(1, &[&[1]]), Field::Rational, -3, 1).unwrap();
        assert_eq!(row(&point, 1), [1, 1, 1, 0, 0]);
        assert_eq!(sr_invariants(&cx(1, &[&[1]]), Field::Rational).a_invariant, Some(-1));
    }

    #[test]
    fn base_field() {
        let w = hochster_window(&cx(1, &[&[]]), Field::Rational, -2, 2).unwrap();
        assert_eq!(row(&w, 0), [0, 0, 1, 0, 0]);
        assert!(w.indices[0].finite_length);
    }

    #[test]
    fn finite_length_in_the_middle() {
        // Two disjoint edges: H^1 is k in degree 0.
        let d = cx(4, &[&[1, 2], &[3, 4]]);
        let w = hochster_window(&d, Field::Rational, -3, 1).unwrap();
        assert_eq!(row(&w, 1), [0, 0, 0, 1, 0]);
        assert!(w.indices[1].finite_length && !w.indices[1].is_zero);
        let inv = sr_invariants(&d, Field::Rational);
        assert_eq!((inv.depth, inv.cm, inv.gencm), (1, false, true));
    }

    #[test]
    fn windows_are_validated() {
        assert!(matches!(
            hochster_window(&cx(1, &[&[1]]), Field::Rational, 1, 2),
            Err(Error::InvalidWindow(_))
        ));
    }

    #[test]
    fn support_arithmetic() {
        let point = Support { at_zero: false, ray_top: Some(-1) };
        let k = Support { at_zero: true, ray_top: None };
        assert_eq!(point.sum(point), Support { at_zero: false, ray_top: Some(-2) });
        assert_eq!(point.sum(k), point);
        assert_eq!(point.sum(Support::ZERO), Support::ZERO);
        let both = Support { at_zero: true, ray_top: Some(-1) };
        assert_eq!(both.sum(both), both);
    }
}
