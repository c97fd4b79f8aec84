//! Brute-force reference computations. Nothing here touches the Gröbner
//! engine or the depth-first factorization search: counts come from a
//! dynamic program over a grid of `ℕ^q`, and `Λ` from a direct search for
//! multiples.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::cone::{gcd, is_fp_finite};
use crate::error::{Error, Result};
use crate::semigroup::{ExpVec, FrobeniusResult, OrderSpec, Point, Semigroup};

/// Limits on the work the oracle may do before giving up.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub max_cells: u64,
    pub max_time: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_cells: 50_000_000, max_time: None }
    }
}

impl Budget {
    pub fn with_seconds(secs: f64) -> Self {
        Budget { max_time: Some(Duration::from_secs_f64(secs)), ..Budget::default() }
    }
}

struct Clock {
    // only read when a time limit is set; wasm32 has no clock
    start: Option<Instant>,
    budget: Budget,
}

impl Clock {
    fn new(budget: Budget) -> Self {
        Clock { start: budget.max_time.map(|_| Instant::now()), budget }
    }

    fn check(&self) -> Result<()> {
        match (self.budget.max_time, self.start) {
            (Some(limit), Some(start)) if start.elapsed() > limit => Err(Error::OracleBudget(format!(
                "wall-clock limit of {:.1}s exceeded",
                limit.as_secs_f64()
            ))),
            _ => Ok(()),
        }
    }
}

/// Exact factorization counts of every point of the box `[0, top]`.
struct CountGrid {
    top: Vec<u64>,
    strides: Vec<usize>,
    counts: Vec<u128>,
}

impl CountGrid {
    fn build(gens: &[Point], top: &[u64], clock: &Clock) -> Result<Self> {
        let mut cells: u64 = 1;
        for &t in top {
            cells = cells
                .checked_mul(t + 1)
                .filter(|&c| c <= clock.budget.max_cells)
                .ok_or_else(|| {
                    Error::OracleBudget(format!("grid up to {top:?} exceeds the cell budget"))
                })?;
        }
        let q = top.len();
        let mut strides = vec![1usize; q];
        for j in (0..q.saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * (top[j + 1] as usize + 1);
        }
        let mut counts = vec![0u128; cells as usize];
        counts[0] = 1;
        for (gi, g) in gens.iter().enumerate() {
            if g.iter().zip(top).any(|(a, t)| a > t) {
                continue;
            }
            let offset: usize = g.iter().zip(&strides).map(|(&a, &s)| a as usize * s).sum();
            // row-major order visits n - g before n
            let mut coord = vec![0u64; q];
            for idx in 0..counts.len() {
                if coord.iter().zip(g.iter()).all(|(c, a)| c >= a) {
                    let add = counts[idx - offset];
                    counts[idx] = counts[idx]
                        .checked_add(add)
                        .ok_or(Error::Overflow("oracle factorization count"))?;
                }
                for j in (0..q).rev() {
                    if coord[j] < top[j] {
                        coord[j] += 1;
                        break;
                    }
                    coord[j] = 0;
                }
            }
            if gi % 4 == 3 {
                clock.check()?;
            }
        }
        Ok(CountGrid { top: top.to_vec(), strides, counts })
    }

    fn count(&self, n: &[u64]) -> u128 {
        if n.iter().zip(&self.top).any(|(a, t)| a > t) {
            return 0;
        }
        self.counts[n.iter().zip(&self.strides).map(|(&a, &s)| a as usize * s).sum::<usize>()]
    }

    fn points(&self) -> impl Iterator<Item = (Vec<u64>, u128)> + '_ {
        let q = self.top.len();
        let mut coord = vec![0u64; q];
        self.counts.iter().map(move |&c| {
            let here = coord.clone();
            for j in (0..q).rev() {
                if coord[j] < self.top[j] {
                    coord[j] += 1;
                    break;
                }
                coord[j] = 0;
            }
            (here, c)
        })
    }
}

/// Outcome of the brute-force computation of `F_p(S)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub result: FrobeniusResult,
    pub lambda: Option<ExpVec>,
    /// Largest total degree among the scanned points.
    pub scanned_bound: u128,
    pub scanned_points: usize,
    pub certificate: String,
}

/// Smallest `λ >= 1` with `λ a_k` a combination of the other generators,
/// decided on count grids. Assumes such a `λ` exists.
fn search_lambda(s: &Semigroup, k: usize, clock: &Clock) -> Result<u64> {
    let others: Vec<Point> = s
        .generators()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != k)
        .map(|(_, g)| g.clone())
        .collect();
    let a = &s.generators()[k];
    let mut limit = 4u64;
    loop {
        let top = a.checked_scale(limit)?;
        let grid = CountGrid::build(&others, &top, clock)?;
        for lambda in 1..=limit {
            if grid.count(&a.checked_scale(lambda)?) > 0 {
                return Ok(lambda);
            }
        }
        limit = limit.checked_mul(2).ok_or(Error::Overflow("oracle lambda search"))?;
        clock.check()?;
    }
}

/// `F_p(S)` by exhaustive counting over the bounding box of `𝒟(Λ, p)`.
pub fn oracle_fp(s: &Semigroup, p: u64, order: OrderSpec, budget: Budget) -> Result<OracleReport> {
    let clock = Clock::new(budget);
    if p == 0 {
        return oracle_f0(s, &clock);
    }
    if !is_fp_finite(s)? {
        return Err(Error::InfiniteFrobenius("the oracle needs a finite F_p(S)".into()));
    }
    let lambda: Vec<u64> = (0..s.num_generators())
        .map(|k| search_lambda(s, k, &clock))
        .collect::<Result<_>>()?;
    let scaled: Vec<u64> = lambda
        .iter()
        .map(|&l| l.checked_mul(p).ok_or(Error::Overflow("oracle box")))
        .collect::<Result<_>>()?;
    // coordinatewise maximum of 𝒟(Λ, p)
    let top = s.s_degree(&scaled)?;
    let grid = CountGrid::build(s.generators(), &top, &clock)?;
    let cap = p as u128;
    let mut best: Option<Vec<u64>> = None;
    let mut scanned = 0usize;
    for (n, c) in grid.points() {
        scanned += 1;
        if c > 0 && c <= cap && best.as_ref().is_none_or(|b| order.cmp(&n, b).is_gt()) {
            best = Some(n);
        }
    }
    clock.check()?;
    let best = best.expect("the origin has exactly one factorization");
    Ok(OracleReport {
        result: FrobeniusResult::Finite(Point::new(best)),
        lambda: Some(ExpVec::new(lambda)),
        scanned_bound: top.degree(),
        scanned_points: scanned,
        certificate: format!(
            "every point of the box [0, {top}] was counted exactly; it contains all sums of gamma_i a_i with gamma <= p*lambda"
        ),
    })
}

fn oracle_f0(s: &Semigroup, clock: &Clock) -> Result<OracleReport> {
    if s.dim() != 1 {
        return Err(Error::Unsupported("the oracle computes F_0 only for q = 1".into()));
    }
    let gens: Vec<u64> = s.generators().iter().map(|g| g[0]).collect();
    if gens.iter().fold(0, |acc, &g| gcd(acc, g)) != 1 {
        return Err(Error::validation("F_0 needs coprime generators"));
    }
    let smallest = *gens.iter().min().expect("non-empty");
    let mut top = 2 * gens.iter().max().expect("non-empty");
    loop {
        let grid = CountGrid::build(s.generators(), &[top], clock)?;
        // the last gap is final once `smallest` consecutive members follow it
        let mut run = 0u64;
        let mut last_gap = None;
        for n in 0..=top {
            if grid.count(&[n]) > 0 {
                run += 1;
            } else {
                run = 0;
                last_gap = Some(n);
            }
        }
        if run >= smallest {
            let gap = last_gap.ok_or_else(|| Error::Unsupported("S = N has no gaps".into()))?;
            return Ok(OracleReport {
                result: FrobeniusResult::Finite(Point::new(vec![gap])),
                lambda: None,
                scanned_bound: top as u128,
                scanned_points: top as usize + 1,
                certificate: format!("{smallest} consecutive members follow the last gap"),
            });
        }
        top = top.checked_mul(2).ok_or(Error::Overflow("oracle F_0 scan"))?;
        clock.check()?;
    }
}

/// Exact `#Z_n(S)` for every `n` with coordinate sum at most `degree_bound`.
pub fn oracle_counts_up_to(s: &Semigroup, degree_bound: u64, budget: Budget) -> Result<BTreeMap<Point, u128>> {
    let clock = Clock::new(budget);
    let top = vec![degree_bound; s.dim()];
    let grid = CountGrid::build(s.generators(), &top, &clock)?;
    Ok(grid
        .points()
        .filter(|(n, _)| n.iter().map(|&c| c as u128).sum::<u128>() <= degree_bound as u128)
        .map(|(n, c)| (Point::new(n), c))
        .collect())
}

/// Exact `#Z_n(S)` for a single point.
pub fn oracle_count(s: &Semigroup, n: &[u64], budget: Budget) -> Result<u128> {
    let clock = Clock::new(budget);
    if n.len() != s.dim() {
        return Err(Error::LengthMismatch { expected: s.dim(), found: n.len() });
    }
    Ok(CountGrid::build(s.generators(), n, &clock)?.count(n))
}

/// `Z_n(S)` by an odometer over every tuple with `λ_i <= min_j n_j / a_ij`,
/// in lexicographic order.
pub fn oracle_factorizations(s: &Semigroup, n: &[u64]) -> Result<Vec<ExpVec>> {
    if n.len() != s.dim() {
        return Err(Error::LengthMismatch { expected: s.dim(), found: n.len() });
    }
    let bounds: Vec<u64> = s
        .generators()
        .iter()
        .map(|g| {
            g.iter()
                .zip(n)
                .filter(|(&a, _)| a > 0)
                .map(|(&a, &c)| c / a)
                .min()
                .unwrap_or(0)
        })
        .collect();
    let mut out = Vec::new();
    let mut lambda = vec![0u64; bounds.len()];
    loop {
        if s.s_degree(&lambda)?[..] == *n {
            out.push(ExpVec::new(lambda.clone()));
        }
        let mut i = bounds.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if lambda[i] < bounds[i] {
                lambda[i] += 1;
                break;
            }
            lambda[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(v: &[&[u64]]) -> Semigroup {
        Semigroup::new(v.iter().map(|c| Point::new(c.to_vec())).collect()).unwrap()
    }

    #[test]
    fn counts_of_2_3() {
        let counts = oracle_counts_up_to(&sg(&[&[2], &[3]]), 8, Budget::default()).unwrap();
        let got: Vec<u128> = (0..=8).map(|n| counts[&Point::from([n])]).collect();
        assert_eq!(got, vec![1, 0, 1, 1, 1, 1, 2, 1, 2]);
        let counts = oracle_counts_up_to(&sg(&[&[3], &[4]]), 12, Budget::default()).unwrap();
        assert_eq!(counts[&Point::from([12])], 2);
        let plane = sg(&[&[3, 0], &[4, 0], &[0, 5], &[0, 6], &[1, 1]]);
        let counts = oracle_counts_up_to(&plane, 0, Budget::default()).unwrap();
        assert_eq!(counts.len(), 1);
        assert_eq!(counts[&Point::from([0, 0])], 1);
    }

    #[test]
    fn oracle_f1_of_2_3() {
        let r = oracle_fp(&sg(&[&[2], &[3]]), 1, OrderSpec::GRLEX, Budget::default()).unwrap();
        assert_eq!(r.result, FrobeniusResult::Finite(Point::from([7])));
        assert_eq!(r.lambda, Some(ExpVec::from([3, 2])));
        let r = oracle_fp(&sg(&[&[2], &[3]]), 2, OrderSpec::GRLEX, Budget::default()).unwrap();
        assert_eq!(r.result, FrobeniusResult::Finite(Point::from([13])));
    }

    #[test]
    fn oracle_on_plane_example() {
        let plane = sg(&[&[3, 0], &[4, 0], &[0, 5], &[0, 6], &[1, 1]]);
        for order in [OrderSpec::GRLEX, OrderSpec::GREVLEX] {
            let r = oracle_fp(&plane, 1, order, Budget::default()).unwrap();
            assert_eq!(r.result, FrobeniusResult::Finite(Point::from([2, 51])));
            assert_eq!(r.lambda, Some(ExpVec::from([4, 3, 6, 5, 6])));
        }
        let r = oracle_fp(&plane, 2, OrderSpec::GRLEX, Budget::default()).unwrap();
        assert_eq!(r.result, FrobeniusResult::Finite(Point::from([2, 81])));
        let lambda = crate::frobenius::LambdaBounds::new(r.lambda.clone().unwrap()).unwrap();
        for n in crate::frobenius::candidate_degrees(&plane, &lambda, 2).unwrap() {
            assert!(n.degree() <= r.scanned_bound);
        }
    }

    #[test]
    fn oracle_f0() {
        let r = oracle_fp(&sg(&[&[6], &[7], &[8]]), 0, OrderSpec::GRLEX, Budget::default()).unwrap();
        assert_eq!(r.result, FrobeniusResult::Finite(Point::from([17])));
        assert!(oracle_fp(&sg(&[&[4], &[6]]), 0, OrderSpec::GRLEX, Budget::default()).is_err());
    }

    #[test]
    fn oracle_preconditions() {
        let deficient = sg(&[&[0, 1], &[1, 1], &[2, 0], &[3, 0]]);
        assert!(oracle_fp(&deficient, 1, OrderSpec::GRLEX, Budget::default()).is_err());
        let tiny = Budget { max_cells: 10, max_time: None };
        assert!(matches!(
            oracle_counts_up_to(&sg(&[&[1, 2], &[2, 1]]), 100, tiny),
            Err(Error::OracleBudget(_))
        ));
    }

    #[test]
    fn odometer_enumeration() {
        let z = oracle_factorizations(&sg(&[&[2], &[3]]), &[12]).unwrap();
        assert_eq!(z, vec![ExpVec::from([0, 4]), ExpVec::from([3, 2]), ExpVec::from([6, 0])]);
    }
}
