//! Hilbert functions and Krull dimension through initial monomial ideals.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, Ideal};
use crate::monomial::{Monomial, MonomialOrder};

/// `dims[d] = dim_k (S/I)_d` for `0 <= d <= bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedHilbert {
    pub bound: u32,
    pub dims: Vec<u64>,
}

/// Drops generators divisible by another one.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by_key(Monomial::degree);
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in sorted {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Counts standard monomials of a monomial ideal by bidegree.
///
/// Variable `i` has internal degree `weights[i].0 >= 1` and secondary weight
/// `weights[i].1`. Returns `table[d][w]` = number of monomials outside the
/// ideal with internal degree `d <= max_degree` and secondary weight `w`
/// (`w <= max_degree * max weight`).
pub fn standard_monomial_table(gens: &[Monomial], weights: &[(u32, u32)], max_degree: u32) -> Vec<Vec<u64>> {
    assert!(weights.iter().all(|w| w.0 >= 1), "internal degrees must be positive");
    let max_w = weights.iter().map(|w| w.1).max().unwrap_or(0) as usize * max_degree as usize;
    let shape = (max_degree as usize + 1, max_w + 1);
    let active: Vec<bool> = vec![true; weights.len()];
    series(&minimalize(gens), &active, weights, shape)
}

type Table = Vec<Vec<u64>>;

fn zero_table(shape: (usize, usize)) -> Table {
    vec![vec![0; shape.1]; shape.0]
}

/// Truncated bigraded Hilbert series of `k[active vars] / (gens)`.
///
/// Splits on a variable `x` of a non-linear generator:
/// `HS(S/M) = HS(S/(M + x)) + t^x HS(S/(M : x))`.
fn series(gens: &[Monomial], active: &[bool], weights: &[(u32, u32)], shape: (usize, usize)) -> Table {
    if gens.iter().any(Monomial::is_one) {
        return zero_table(shape);
    }
    let mut active = active.to_vec();
    let mut rest = Vec::new();
    for g in gens {
        if g.degree() == 1 {
            let i = g.support().next().expect("degree one");
            active[i] = false;
            continue;
        }
        rest.push(g.clone());
    }
    // Generators now avoid the killed variables up to redundancy.
    let rest: Vec<Monomial> = rest.into_iter().filter(|g| g.support().all(|i| active[i])).collect();
    let pivot = rest.iter().find_map(|g| g.support().next());
    let Some(x) = pivot else {
        return free_series(&active, weights, shape);
    };

    let mut with_x = rest.clone();
    with_x.push(Monomial::var(weights.len(), x));
    let a = series(&minimalize(&with_x), &active, weights, shape);

    let colon: Vec<Monomial> = rest
        .iter()
        .map(|g| {
            let mut e = g.clone();
            if e.0[x] > 0 {
                e.0[x] -= 1;
            }
            e
        })
        .collect();
    let b = series(&minimalize(&colon), &active, weights, shape);

    let (dx, wx) = (weights[x].0 as usize, weights[x].1 as usize);
    let mut out = a;
    for d in dx..shape.0 {
        for w in wx..shape.1 {
            out[d][w] += b[d - dx][w - wx];
        }
    }
    out
}

/// Truncated series of a polynomial ring in the active variables.
fn free_series(active: &[bool], weights: &[(u32, u32)], shape: (usize, usize)) -> Table {
    let mut t = zero_table(shape);
    t[0][0] = 1;
    for (i, &on) in active.iter().enumerate() {
        if !on {
            continue;
        }
        let (dx, wx) = (weights[i].0 as usize, weights[i].1 as usize);
        for d in dx..shape.0 {
            for w in wx..shape.1 {
                t[d][w] += t[d - dx][w - wx];
            }
        }
    }
    t
}

/// Counts standard monomials of each total degree `0..=max_degree`.
pub fn standard_monomial_counts(gens: &[Monomial], nvars: usize, max_degree: u32) -> Vec<u64> {
    let table = standard_monomial_table(gens, &vec![(1, 0); nvars], max_degree);
    table.into_iter().map(|row| row[0]).collect()
}

/// Hilbert function of `S/I` up to degree `bound`.
pub fn hilbert_function(ideal: &Ideal, bound: u32) -> Result<GradedHilbert> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous(ideal.to_string()));
    }
    let gb = buchberger(ideal, &MonomialOrder::GrevLex);
    Ok(GradedHilbert {
        bound,
        dims: standard_monomial_counts(&gb.leading_monomials(), ideal.ring().nvars(), bound),
    })
}

/// Dimension of `S/M` for a monomial ideal: the largest set of variables
/// containing the support of no generator.
pub fn monomial_dim(gens: &[Monomial], nvars: usize) -> Option<usize> {
    if gens.iter().any(Monomial::is_one) {
        return None;
    }
    let masks: Vec<u64> =
        minimalize(gens).iter().map(|g| g.support().fold(0u64, |m, i| m | (1 << i))).collect();
    let mut best = 0;
    search(0, 0, 0, nvars, &masks, &mut best);
    Some(best)
}

fn search(i: usize, chosen: u64, size: usize, n: usize, masks: &[u64], best: &mut usize) {
    if size + (n - i) <= *best {
        return;
    }
    if i == n {
        *best = size;
        return;
    }
    let with = chosen | (1 << i);
    if masks.iter().all(|m| m & with != *m) {
        search(i + 1, with, size + 1, n, masks, best);
    }
    search(i + 1, chosen, size, n, masks, best);
}

/// Krull dimension of `S/I`.
pub fn krull_dim(ideal: &Ideal) -> Result<usize> {
    let n = ideal.ring().nvars();
    assert!(n <= 64, "at most 64 variables");
    let gb = buchberger(ideal, &MonomialOrder::GrevLex);
    monomial_dim(&gb.leading_monomials(), n).ok_or(Error::UnitIdeal)
}
