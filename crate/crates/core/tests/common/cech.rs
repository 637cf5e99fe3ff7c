//! Multigraded Čech complex of a Stanley-Reisner ring, as an oracle.
//!
//! In multidegree `u ∈ Z^n` the localization `k[Δ]_{x_F}` is one-dimensional
//! iff `neg(u) ⊆ F` and `supp(u) ∪ F ∈ Δ`, and zero otherwise. The Čech
//! complex in degree `u` is therefore a finite complex of vector spaces
//! indexed by such `F`, with the usual alternating signs. Summing its
//! cohomology over all `u` of total degree `a` in a box gives `H^i_m(k[Δ])_a`.
//! Multidegrees with a positive coordinate are enumerated up to `POS` and
//! checked to contribute nothing.

#![allow(dead_code)]

use gradealg::field::Field;
use gradealg::linalg::rank_of_integer_rows;

pub const POS: i64 = 1;

/// `faces` holds every face of Δ as a bitmask.
pub fn cech_dim(faces: &[u32], n: usize, field: Field, i: usize, a: i64) -> u64 {
    let mut total = 0;
    let mut u = vec![0i64; n];
    let lo = a.min(0) - POS * n as i64;
    enumerate(&mut u, 0, a, lo, &mut |u| {
        let h = cech_at(faces, u, field, i);
        if u.iter().any(|&x| x > 0) {
            assert_eq!(h, 0, "positive multidegree {u:?} contributes");
        }
        total += h;
    });
    total
}

fn enumerate(u: &mut Vec<i64>, k: usize, target: i64, lo: i64, f: &mut impl FnMut(&[i64])) {
    let n = u.len();
    if k == n - 1 {
        let rest: i64 = u[..k].iter().sum();
        let last = target - rest;
        if (lo..=POS).contains(&last) {
            u[k] = last;
            f(u);
        }
        return;
    }
    for x in lo..=POS {
        u[k] = x;
        enumerate(u, k + 1, target, lo, f);
    }
}

fn mask(u: &[i64], pred: impl Fn(i64) -> bool) -> u32 {
    u.iter().enumerate().filter(|(_, &x)| pred(x)).fold(0, |m, (j, _)| m | (1 << j))
}

/// `dim H^i` of the Čech complex in multidegree `u`.
pub fn cech_at(faces: &[u32], u: &[i64], field: Field, i: usize) -> u64 {
    let neg = mask(u, |x| x < 0);
    let supp = mask(u, |x| x != 0);
    let is_face = |f: u32| faces.contains(&f);
    let terms = |size: usize| -> Vec<u32> {
        let mut v: Vec<u32> = faces
            .iter()
            .copied()
            .filter(|&f| f.count_ones() as usize == size && f & neg == neg && is_face(f | supp))
            .collect();
        v.sort_unstable();
        v
    };
    let differential_rank = |from: &[u32], to: &[u32]| -> usize {
        let rows: Vec<Vec<(usize, i64)>> = from
            .iter()
            .map(|&f| {
                let mut row: Vec<(usize, i64)> = to
                    .iter()
                    .enumerate()
                    .filter(|(_, &g)| g & f == f)
                    .map(|(c, &g)| {
                        let v = g & !f;
                        let below = (f & (v - 1)).count_ones();
                        (c, if below % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        rank_of_integer_rows(field, &rows)
    };
    let here = terms(i);
    let into = if i == 0 { 0 } else { differential_rank(&terms(i - 1), &here) };
    let out = differential_rank(&here, &terms(i + 1));
    (here.len() - into - out) as u64
}

/// All faces of the complex with the given facets.
pub fn all_faces(facets: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    for &f in facets {
        let mut s = f;
        loop {
            out.push(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// `H^n(k[x_1..x_n])_a` by the Čech oracle.
pub fn polynomial_ring_top(n: usize, a: i64) -> u64 {
    let full = (1u32 << n) - 1;
    cech_dim(&all_faces(&[full]), n, Field::Rational, n, a)
}
