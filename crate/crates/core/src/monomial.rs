//! Exponent vectors and monomial orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// Exponent vector indexed by the ambient variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Degree counted with a weight per variable.
    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as u64 * w as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }
}

/// Order used inside one block of a [`MonomialOrder::Block`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockInner {
    Lex,
    GrevLex,
}

/// A monomial order on a fixed number of variables.
///
/// Variable `0` is the largest variable for both `Lex` and `GrevLex`.
/// `Block` compares the `front` variables first (with `front_order`) and
/// breaks ties on the remaining variables (with `rest_order`), so any
/// monomial involving a front variable beats every monomial that does not.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block { front: Vec<usize>, front_order: BlockInner, rest_order: BlockInner },
}

impl MonomialOrder {
    /// Block order eliminating `eliminate` (grevlex inside both blocks).
    pub fn eliminating(eliminate: impl IntoIterator<Item = usize>) -> Self {
        let mut front: Vec<usize> = eliminate.into_iter().collect();
        front.sort_unstable();
        front.dedup();
        MonomialOrder::Block { front, front_order: BlockInner::GrevLex, rest_order: BlockInner::GrevLex }
    }

    /// Integer weight matrix whose row-by-row comparison realizes the order.
    pub fn matrix(&self, nvars: usize) -> Vec<Vec<i64>> {
        match self {
            MonomialOrder::Lex => block_rows(nvars, &(0..nvars).collect::<Vec<_>>(), BlockInner::Lex),
            MonomialOrder::GrevLex => block_rows(nvars, &(0..nvars).collect::<Vec<_>>(), BlockInner::GrevLex),
            MonomialOrder::Block { front, front_order, rest_order } => {
                let mut in_front = vec![false; nvars];
                for &i in front {
                    if i < nvars {
                        in_front[i] = true;
                    }
                }
                let f: Vec<usize> = (0..nvars).filter(|&i| in_front[i]).collect();
                let r: Vec<usize> = (0..nvars).filter(|&i| !in_front[i]).collect();
                let mut rows = block_rows(nvars, &f, *front_order);
                rows.extend(block_rows(nvars, &r, *rest_order));
                rows
            }
        }
    }

    pub fn compile(&self, nvars: usize) -> CompiledOrder {
        CompiledOrder { rows: self.matrix(nvars) }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.compile(a.nvars()).compare(a, b)
    }
}

fn block_rows(nvars: usize, vars: &[usize], inner: BlockInner) -> Vec<Vec<i64>> {
    let mut rows = Vec::with_capacity(vars.len());
    if vars.is_empty() {
        return rows;
    }
    match inner {
        BlockInner::Lex => {
            for &v in vars {
                let mut row = vec![0; nvars];
                row[v] = 1;
                rows.push(row);
            }
        }
        BlockInner::GrevLex => {
            let mut row = vec![0; nvars];
            for &v in vars {
                row[v] = 1;
            }
            rows.push(row);
            for &v in vars.iter().skip(1).rev() {
                let mut row = vec![0; nvars];
                row[v] = -1;
                rows.push(row);
            }
        }
    }
    rows
}

/// A monomial order reduced to its weight matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompiledOrder {
    rows: Vec<Vec<i64>>,
}

impl CompiledOrder {
    /// Sort key: lexicographic comparison of keys equals the order. Keys are
    /// additive, `key(a*b) = key(a) + key(b)`.
    pub fn key(&self, m: &Monomial) -> Vec<i64> {
        self.rows.iter().map(|row| row.iter().zip(&m.0).map(|(w, &e)| w * e as i64).sum()).collect()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for row in &self.rows {
            let wa: i64 = row.iter().zip(&a.0).map(|(w, &e)| w * e as i64).sum();
            let wb: i64 = row.iter().zip(&b.0).map(|(w, &e)| w * e as i64).sum();
            match wa.cmp(&wb) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}
