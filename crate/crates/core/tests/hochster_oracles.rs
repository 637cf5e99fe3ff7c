mod common;

use common::cech::{all_faces, cech_dim};
use gradealg::hochster::{hochster_window, hochster_window_with, sr_invariants};
use gradealg::simplicial::{complex_from_ideal, face_size, SimplicialComplex};
use gradealg::{Exec, Field, Ring};
use proptest::prelude::*;

fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    let f: Vec<Vec<usize>> = facets.iter().map(|f| f.iter().map(|v| v - 1).collect()).collect();
    SimplicialComplex::new(n, &f).unwrap()
}

fn rp2() -> SimplicialComplex {
    cx(
        6,
        &[
            &[1, 2, 4],
            &[1, 2, 6],
            &[1, 3, 5],
            &[1, 3, 6],
            &[1, 4, 5],
            &[2, 3, 4],
            &[2, 3, 5],
            &[2, 5, 6],
            &[3, 4, 6],
            &[4, 5, 6],
        ],
    )
}

fn complexes(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0u32..(1 << n), 1..6)
            .prop_map(move |m| SimplicialComplex::from_masks(n, m).unwrap())
    })
}

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(2)), Just(Field::Prime(3))]
}

/// Reisner: CM iff every link, including the complex itself, has no reduced
/// homology below its dimension.
fn reisner_cm(d: &SimplicialComplex, field: Field) -> bool {
    d.faces().into_iter().all(|s| {
        let l = d.link(s).unwrap();
        let ranks = l.reduced_homology_ranks(field);
        (-1..l.dim()).all(|k| SimplicialComplex::reduced_homology_rank(&ranks, k) == 0)
    })
}

#[test]
fn rp2_is_a_closed_surface_with_euler_characteristic_one() {
    let d = rp2();
    assert_eq!(d.f_vector(), [1, 6, 15, 10]);
    for e in d.faces().into_iter().filter(|&f| face_size(f) == 2) {
        assert_eq!(d.facets().iter().filter(|&&t| t & e == e).count(), 2);
    }
    assert_eq!(d.reduced_homology_ranks(Field::Rational), [0, 0, 0, 0]);
    assert_eq!(d.reduced_homology_ranks(Field::Prime(2)), [0, 0, 1, 1]);
}

#[test]
fn rp2_depends_on_the_characteristic() {
    let q = sr_invariants(&rp2(), Field::Rational);
    assert_eq!((q.dim, q.depth, q.cm), (3, 3, true));
    let f2 = sr_invariants(&rp2(), Field::Prime(2));
    assert_eq!((f2.dim, f2.depth, f2.cm, f2.gencm), (3, 2, false, true));
    let w = hochster_window(&rp2(), Field::Prime(2), -3, 1).unwrap();
    assert_eq!(w.indices[2].dims.values().copied().collect::<Vec<_>>(), [0, 0, 0, 1, 0]);
}

#[test]
fn hochster_agrees_with_cech_on_small_examples() {
    let examples = [
        cx(2, &[&[1], &[2]]),
        cx(3, &[&[1, 2], &[1, 3], &[2, 3]]),
        cx(3, &[&[1], &[2, 3]]),
        cx(4, &[&[1, 2], &[3, 4]]),
        cx(2, &[&[1, 2]]),
        cx(2, &[&[]]),
    ];
    for d in &examples {
        let faces = all_faces(d.facets());
        let w = hochster_window(d, Field::Rational, -4, 1).unwrap();
        for (i, iw) in w.indices.iter().enumerate() {
            for (&a, &dim) in &iw.dims {
                assert_eq!(dim, cech_dim(&faces, d.nvertices(), Field::Rational, i, a), "{d:?} H^{i}_{a}");
            }
        }
    }
}

#[test]
fn squarefree_ideals_convert() {
    let r = Ring::new(["x", "y", "z", "w"], Field::Rational);
    let j = gradealg::Ideal::parse(&r, ["x*y", "z*w"]).unwrap();
    let d = complex_from_ideal(&j).unwrap();
    assert_eq!(d, cx(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]));
    assert!(sr_invariants(&d, Field::Rational).cm);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_characteristic_matches_face_counts(d in complexes(7), f in fields()) {
        let ranks = d.reduced_homology_ranks(f);
        let from_homology: i64 = ranks.iter().enumerate().map(|(k1, &r)| if k1 % 2 == 1 { r as i64 } else { -(r as i64) }).sum();
        let from_faces: i64 = d.f_vector().iter().enumerate().map(|(s, &c)| if s % 2 == 1 { c as i64 } else { -(c as i64) }).sum();
        prop_assert_eq!(from_homology, from_faces);
    }

    #[test]
    fn cm_flag_agrees_with_reisner(d in complexes(8), f in fields()) {
        prop_assert_eq!(sr_invariants(&d, f).cm, reisner_cm(&d, f));
    }

    #[test]
    fn flags_are_coherent_with_windows(d in complexes(7), f in fields()) {
        let inv = sr_invariants(&d, f);
        prop_assert!(inv.depth <= inv.dim);
        prop_assert!(inv.a_invariant.unwrap() <= 0);
        let w = hochster_window(&d, f, -10, 2).unwrap();
        prop_assert_eq!(w.indices.len(), inv.dim + 1);
        for (i, iw) in w.indices.iter().enumerate() {
            if i < inv.depth {
                prop_assert!(iw.is_zero);
            }
            if iw.is_zero {
                prop_assert!(iw.dims.values().all(|&x| x == 0));
            }
            if iw.finite_length {
                prop_assert!(iw.dims.range(..=-1).all(|(_, &x)| x == 0));
            }
            prop_assert_eq!(iw.vanishes_below_minus_one, iw.dims.range(..=-2).all(|(_, &x)| x == 0));
            prop_assert!(iw.dims.range(1..).all(|(_, &x)| x == 0));
        }
        prop_assert!(!w.indices[inv.dim].is_zero);
        prop_assert_eq!(w.indices[inv.dim].dims.iter().rev().find(|(_, &x)| x > 0).map(|(&j, _)| j), inv.a_invariant);
        prop_assert_eq!(inv.gencm, w.indices[..inv.dim].iter().all(|iw| iw.finite_length));
    }

    #[test]
    fn hochster_agrees_with_cech(d in complexes(3), f in fields()) {
        let faces = all_faces(d.facets());
        let w = hochster_window(&d, f, -3, 1).unwrap();
        for (i, iw) in w.indices.iter().enumerate() {
            for (&a, &dim) in &iw.dims {
                prop_assert_eq!(dim, cech_dim(&faces, d.nvertices(), f, i, a));
            }
        }
    }

    #[test]
    fn parallel_and_sequential_agree(d in complexes(8), f in fields()) {
        let seq = hochster_window_with(&d, f, -6, 1, Exec::Sequential).unwrap();
        prop_assert_eq!(seq, hochster_window_with(&d, f, -6, 1, Exec::default()).unwrap());
    }
}
