//! Finite simplicial complexes on at most 32 vertices, faces as bitmasks.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::Ideal;
use crate::linalg::rank_of_integer_rows;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};

/// Subset of vertices, bit `i` set iff vertex `i` is present.
pub type Face = u32;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 24;

pub fn face_size(f: Face) -> usize {
    f.count_ones() as usize
}

pub fn face_vertices(f: Face) -> Vec<usize> {
    (0..32).filter(|i| f & (1 << i) != 0).collect()
}

pub fn face_from(vertices: &[usize]) -> Face {
    vertices.iter().fold(0, |m, &v| m | (1 << v))
}

/// A simplicial complex on vertex slots `0..nvertices`.
///
/// Slots need not all be vertices: a slot outside every facet is a variable
/// that vanishes in the Stanley-Reisner ring. The void complex (no faces) is
/// rejected; `{∅}` (a single empty facet) is allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    nvertices: usize,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Builds a complex from facets (vertex lists), dropping non-maximal ones.
    pub fn new(nvertices: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if nvertices > MAX_VERTICES {
            return Err(Error::BoundExceeded(format!(
                "{nvertices} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        let mut masks = Vec::with_capacity(facets.len());
        for f in facets {
            if let Some(v) = f.iter().find(|&&v| v >= nvertices) {
                return Err(Error::InvalidComplex(format!("vertex {} out of range", v + 1)));
            }
            masks.push(face_from(f));
        }
        Self::from_masks(nvertices, masks)
    }

    pub fn from_masks(nvertices: usize, masks: impl IntoIterator<Item = Face>) -> Result<Self> {
        let masks: BTreeSet<Face> = masks.into_iter().collect();
        if masks.is_empty() {
            return Err(Error::InvalidComplex("the void complex has no faces".into()));
        }
        let mut facets: Vec<Face> =
            masks.iter().copied().filter(|&f| !masks.iter().any(|&g| g != f && g & f == f)).collect();
        facets.sort_by_key(|&f| (std::cmp::Reverse(face_size(f)), face_vertices(f)));
        Ok(SimplicialComplex { nvertices, facets })
    }

    /// The full simplex on all slots.
    pub fn simplex(nvertices: usize) -> Self {
        Self::from_masks(nvertices, [face_from(&(0..nvertices).collect::<Vec<_>>())]).expect("nonempty")
    }

    pub fn nvertices(&self) -> usize {
        self.nvertices
    }

    /// Facets, largest first.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| face_vertices(f)).collect()
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|&f| f & face == face)
    }

    /// `dim Δ`: one less than the largest facet size (`-1` for `{∅}`).
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|&f| face_size(f) as i64).max().unwrap_or(0) - 1
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets == [0]
    }

    /// All faces, including `∅`, sorted by size and then by mask.
    pub fn faces(&self) -> Vec<Face> {
        let mut all = BTreeSet::new();
        for &f in &self.facets {
            let mut sub = f;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let mut v: Vec<Face> = all.into_iter().collect();
        v.sort_by_key(|&f| (face_size(f), f));
        v
    }

    /// Face counts by size: `f[s]` faces with `s` vertices (`f[0] = 1`).
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; (self.dim() + 2) as usize];
        for face in self.faces() {
            f[face_size(face)] += 1;
        }
        f
    }

    /// `lk σ = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`.
    pub fn link(&self, sigma: Face) -> Result<Self> {
        if !self.contains(sigma) {
            return Err(Error::NotAFace(format!("{:?}", one_based(sigma))));
        }
        Self::from_masks(
            self.nvertices,
            self.facets.iter().filter(|&&f| f & sigma == sigma).map(|&f| f & !sigma),
        )
    }

    /// Induced subcomplex on the slots in `mask`.
    pub fn restrict(&self, mask: Face) -> Self {
        Self::from_masks(self.nvertices, self.facets.iter().map(|&f| f & mask)).expect("nonempty")
    }

    /// Join of complexes on disjoint slot sets of the same ambient size.
    pub fn join(&self, other: &Self) -> Self {
        let n = self.nvertices.max(other.nvertices);
        Self::from_masks(n, self.facets.iter().flat_map(|&a| other.facets.iter().map(move |&b| a | b)))
            .expect("nonempty")
    }

    /// True if some vertex lies in every facet (then `Δ` is contractible).
    pub fn is_cone(&self) -> bool {
        !self.is_empty_complex() && self.facets.iter().fold(Face::MAX, |a, &f| a & f) != 0
    }

    /// `rank H̃_k(Δ; field)` for `k = -1..=dim Δ`, stored at index `k + 1`.
    pub fn reduced_homology_ranks(&self, field: Field) -> Vec<usize> {
        let top = (self.dim() + 1) as usize;
        if self.is_cone() {
            return vec![0; top + 1];
        }
        let faces = self.faces();
        let mut by_size: Vec<Vec<Face>> = vec![Vec::new(); top + 1];
        for f in faces {
            by_size[face_size(f)].push(f);
        }
        // boundary_rank[s] = rank of the boundary from size-s faces to size s-1.
        let mut boundary_rank = vec![0; top + 2];
        for s in 1..=top {
            let index: HashMap<Face, usize> =
                by_size[s - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
            let rows: Vec<Vec<(usize, i64)>> = by_size[s]
                .iter()
                .map(|&f| {
                    let mut row: Vec<(usize, i64)> = face_vertices(f)
                        .into_iter()
                        .enumerate()
                        .map(|(pos, v)| {
                            let sign = if pos % 2 == 0 { 1 } else { -1 };
                            (index[&(f & !(1 << v))], sign)
                        })
                        .collect();
                    row.sort_unstable();
                    row
                })
                .collect();
            boundary_rank[s] = rank_of_integer_rows(field, &rows);
        }
        (0..=top).map(|s| by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1]).collect()
    }

    /// Rank of `H̃_k`, zero outside `-1..=dim`.
    pub fn reduced_homology_rank(ranks: &[usize], k: i64) -> usize {
        if k < -1 {
            return 0;
        }
        ranks.get((k + 1) as usize).copied().unwrap_or(0)
    }

    /// Minimal nonfaces as squarefree monomials of `ring`.
    pub fn stanley_reisner_ideal(&self, ring: &Arc<Ring>) -> Ideal {
        assert_eq!(ring.nvars(), self.nvertices);
        let mut nonfaces: Vec<Face> = Vec::new();
        let mut all: Vec<Face> = (0..(1u32 << self.nvertices)).collect();
        all.sort_by_key(|&f| (face_size(f), f));
        for f in all {
            if !self.contains(f) && !nonfaces.iter().any(|&g| g & !f == 0) {
                nonfaces.push(f);
            }
        }
        let one = ring.field().one();
        Ideal::new(
            ring,
            nonfaces.into_iter().map(|f| {
                let mut e = vec![0; self.nvertices];
                for v in face_vertices(f) {
                    e[v] = 1;
                }
                Polynomial::term(ring, Monomial(e), one.clone())
            }),
        )
        .expect("same ring")
    }

    /// Facets of maximal size.
    pub fn top_facets(&self) -> Vec<Face> {
        let d = self.dim() + 1;
        self.facets.iter().copied().filter(|&f| face_size(f) as i64 == d).collect()
    }

    /// For each top-dimensional facet `F`, the variables off `F`; these
    /// generate the minimal primes `P` of `k[Δ]` with `dim k[Δ]/P = dim k[Δ]`.
    pub fn minimal_primes_top(&self) -> Vec<Vec<usize>> {
        self.top_facets()
            .into_iter()
            .map(|f| (0..self.nvertices).filter(|&i| f & (1 << i) == 0).collect())
            .collect()
    }
}

fn one_based(f: Face) -> Vec<usize> {
    face_vertices(f).into_iter().map(|v| v + 1).collect()
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<Vec<usize>> = self.facets.iter().map(|&g| one_based(g)).collect();
        write!(f, "Complex(n={}, facets={:?})", self.nvertices, facets)
    }
}

/// The complex whose Stanley-Reisner ideal is the squarefree monomial `j`.
pub fn complex_from_ideal(j: &Ideal) -> Result<SimplicialComplex> {
    let n = j.ring().nvars();
    if n > MAX_VERTICES {
        return Err(Error::BoundExceeded(format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
    }
    let mut supports = Vec::new();
    for g in j.generators() {
        let (m, _) = g
            .terms()
            .next()
            .filter(|_| g.num_terms() == 1)
            .ok_or_else(|| Error::NotSquarefreeMonomial(g.to_string()))?;
        if !m.is_squarefree() {
            return Err(Error::NotSquarefreeMonomial(g.to_string()));
        }
        supports.push(m.support().fold(0 as Face, |a, i| a | (1 << i)));
    }
    let faces = (0..(1u32 << n)).filter(|&f| !supports.iter().any(|&s| s & !f == 0));
    SimplicialComplex::from_masks(n, faces)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let f: Vec<Vec<usize>> = facets.iter().map(|f| f.iter().map(|v| v - 1).collect()).collect();
        SimplicialComplex::new(n, &f).unwrap()
    }

    fn ideal(n: usize, gens: &[&str]) -> Ideal {
        let r = Ring::new((1..=n).map(|i| format!("X{i}")), Field::Rational);
        Ideal::parse(&r, gens.iter().copied()).unwrap()
    }

    #[test]
    fn complexes_from_ideals() {
        assert_eq!(complex_from_ideal(&ideal(2, &["X1*X2"])).unwrap(), cx(2, &[&[1], &[2]]));
        assert_eq!(
            complex_from_ideal(&ideal(3, &["X1*X2*X3"])).unwrap(),
            cx(3, &[&[1, 2], &[1, 3], &[2, 3]])
        );
        assert_eq!(complex_from_ideal(&ideal(3, &["X1*X2", "X1*X3"])).unwrap(), cx(3, &[&[1], &[2, 3]]));
        assert!(matches!(complex_from_ideal(&ideal(2, &["X1^2"])), Err(Error::NotSquarefreeMonomial(_))));
        assert!(matches!(
            complex_from_ideal(&ideal(2, &["X1*X2 + X1"])),
            Err(Error::NotSquarefreeMonomial(_))
        ));
        assert!(matches!(complex_from_ideal(&ideal(2, &["1"])), Err(Error::InvalidComplex(_))));
    }

    #[test]
    fn stanley_reisner_roundtrip() {
        let d = cx(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        let r = Ring::new(["a", "b", "c", "d"], Field::Rational);
        let j = d.stanley_reisner_ideal(&r);
        assert_eq!(j.canonical_strings(), ["a*c", "b*d"]);
        assert_eq!(complex_from_ideal(&j).unwrap(), d);
    }

    #[test]
    fn void_and_empty_complexes() {
        assert!(SimplicialComplex::new(2, &[]).is_err());
        let e = SimplicialComplex::new(2, &[vec![]]).unwrap();
        assert!(e.is_empty_complex());
        assert_eq!(e.dim(), -1);
        assert_eq!(e.reduced_homology_ranks(Field::Rational), [1]);
    }

    #[test]
    fn links() {
        let edge = cx(2, &[&[1, 2]]);
        assert_eq!(edge.link(face_from(&[0])).unwrap(), cx(2, &[&[2]]));
        assert_eq!(edge.link(0).unwrap(), edge);
        let points = cx(2, &[&[1], &[2]]);
        assert!(points.link(face_from(&[0])).unwrap().is_empty_complex());
        assert!(matches!(points.link(face_from(&[0, 1])), Err(Error::NotAFace(_))));
    }

    #[test]
    fn homology_examples() {
        assert_eq!(cx(2, &[&[1], &[2]]).reduced_homology_ranks(Field::Rational), [0, 1]);
        assert_eq!(cx(3, &[&[1, 2], &[1, 3], &[2, 3]]).reduced_homology_ranks(Field::Rational), [0, 0, 1]);
        assert_eq!(cx(3, &[&[1, 2, 3]]).reduced_homology_ranks(Field::Rational), [0, 0, 0, 0]);
    }

    #[test]
    fn minimal_primes() {
        assert_eq!(cx(2, &[&[1], &[2]]).minimal_primes_top(), vec![vec![1], vec![0]]);
        assert_eq!(cx(3, &[&[1], &[2, 3]]).minimal_primes_top(), vec![vec![0]]);
        assert_eq!(cx(2, &[&[1, 2]]).minimal_primes_top(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn join_and_restrict() {
        let a = cx(4, &[&[1, 2]]);
        let b = cx(4, &[&[3], &[4]]);
        let j = a.join(&b);
        assert_eq!(j, cx(4, &[&[1, 2, 3], &[1, 2, 4]]));
        assert_eq!(j.restrict(face_from(&[2, 3])), b);
    }
}
