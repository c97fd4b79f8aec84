//! Factorization sets `Z_n(S)` by bounded depth-first search.

use serde::Serialize;

use crate::semigroup::{ExpVec, OrderSpec, Point, Semigroup};

/// The complete set of factorizations of one element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorizationSet {
    pub element: Point,
    pub factorizations: Vec<ExpVec>,
}

impl FactorizationSet {
    pub fn len(&self) -> usize {
        self.factorizations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factorizations.is_empty()
    }

    /// Sorts the factorizations in decreasing order under `order`.
    pub fn sort_desc(&mut self, order: OrderSpec) {
        self.factorizations.sort_by(|a, b| order.cmp(b, a));
    }
}

/// Depth-first enumerator over generator multiplicities.
struct Search<'a> {
    gens: &'a [Point],
    /// `reach[i][j]`: some generator with index >= i has a positive j-th entry.
    reach: Vec<Vec<bool>>,
    current: Vec<u64>,
}

impl<'a> Search<'a> {
    fn new(gens: &'a [Point]) -> Self {
        let h = gens.len();
        let q = gens.first().map_or(0, |g| g.len());
        let mut reach = vec![vec![false; q]; h + 1];
        for i in (0..h).rev() {
            for j in 0..q {
                reach[i][j] = reach[i + 1][j] || gens[i][j] > 0;
            }
        }
        Search { gens, reach, current: vec![0; h] }
    }

    /// Calls `visit` on each factorization; stops when `visit` returns false.
    /// Returns false if the search was stopped early.
    fn run(&mut self, residual: &mut [u64], i: usize, visit: &mut dyn FnMut(&[u64]) -> bool) -> bool {
        if residual.iter().zip(&self.reach[i]).any(|(&r, &ok)| r > 0 && !ok) {
            return true;
        }
        if i == self.gens.len() {
            // residual is zero here, by the reach check
            return visit(&self.current);
        }
        let g = &self.gens[i];
        let bound = g
            .iter()
            .zip(residual.iter())
            .filter(|(&a, _)| a > 0)
            .map(|(&a, &r)| r / a)
            .min()
            .unwrap_or(0);
        if i + 1 == self.gens.len() {
            // last generator: the multiplicity is forced
            let k = bound;
            if g.iter().zip(residual.iter()).all(|(&a, &r)| a * k == r) {
                self.current[i] = k;
                let go_on = visit(&self.current);
                self.current[i] = 0;
                return go_on;
            }
            return true;
        }
        // take the largest multiplicity first
        for (r, &a) in residual.iter_mut().zip(g.iter()) {
            *r -= a * bound;
        }
        let mut k = bound;
        loop {
            self.current[i] = k;
            if !self.run(residual, i + 1, visit) {
                self.current[i] = 0;
                return false;
            }
            if k == 0 {
                break;
            }
            k -= 1;
            for (r, &a) in residual.iter_mut().zip(g.iter()) {
                *r += a;
            }
        }
        self.current[i] = 0;
        true
    }
}

pub(crate) fn for_each_over(gens: &[Point], n: &[u64], visit: &mut dyn FnMut(&[u64]) -> bool) {
    if gens.is_empty() {
        if n.iter().all(|&c| c == 0) {
            visit(&[]);
        }
        return;
    }
    if gens[0].len() != n.len() {
        return;
    }
    let mut residual = n.to_vec();
    Search::new(gens).run(&mut residual, 0, visit);
}

pub(crate) fn count_capped_over(gens: &[Point], n: &[u64], cap: usize) -> usize {
    let mut count = 0;
    for_each_over(gens, n, &mut |_| {
        count += 1;
        count < cap
    });
    count
}

pub(crate) fn contains_over(gens: &[Point], n: &[u64]) -> bool {
    count_capped_over(gens, n, 1) == 1
}

/// `Z_n(S)`, in the order produced by the search (first generator's
/// multiplicity decreasing).
pub fn factorizations(s: &Semigroup, n: &[u64]) -> FactorizationSet {
    let mut found = Vec::new();
    for_each_over(s.generators(), n, &mut |lambda| {
        found.push(ExpVec::new(lambda.to_vec()));
        true
    });
    FactorizationSet { element: Point::new(n.to_vec()), factorizations: found }
}

/// `min(#Z_n(S), cap)`.
pub fn count_capped(s: &Semigroup, n: &[u64], cap: usize) -> usize {
    if cap == 0 {
        return 0;
    }
    count_capped_over(s.generators(), n, cap)
}

pub fn contains(s: &Semigroup, n: &[u64]) -> bool {
    count_capped(s, n, 1) == 1
}

/// Factorizations of `n` that avoid generator `skip`.
pub(crate) fn contains_avoiding(s: &Semigroup, n: &[u64], skip: usize) -> bool {
    let others: Vec<Point> = s
        .generators()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != skip)
        .map(|(_, g)| g.clone())
        .collect();
    contains_over(&others, n)
}
