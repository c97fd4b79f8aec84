//! Computation of `F_p(S)`: the general box search, two improved
//! algorithms for `p = 1`, the indispensable-binomial route for `p = 2`,
//! and the classical Frobenius number for `p = 0`, `q = 1`.

mod f1;
mod f2;

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::cone::{gcd, is_fp_finite};
use crate::error::{Error, Result};
use crate::factorization::{contains_avoiding, count_capped};
use crate::groebner::GroebnerBasis;
use crate::semigroup::{ExpVec, FrobeniusResult, OrderSpec, Point, Semigroup};

pub use f1::{f1_normalform, f1_staircase, staircase_complement, StaircaseComplement};
pub use f2::{f2_improved, indispensable_binomials, nabla_components, verify_minimal_ideal_basis};

/// Per-generator multiples `λ_k` such that `λ_k a_k` factors without `a_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LambdaBounds(ExpVec);

impl LambdaBounds {
    pub fn new(lambda: ExpVec) -> Result<Self> {
        if lambda.contains(&0) {
            return Err(Error::validation("lambda bounds must be positive"));
        }
        Ok(LambdaBounds(lambda))
    }

    pub fn as_exp(&self) -> &ExpVec {
        &self.0
    }
}

/// Which algorithm computed an [`FpReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    General,
    NormalForm,
    Staircase,
    F2,
    Numerical,
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "general" => Algorithm::General,
            "normalform" => Algorithm::NormalForm,
            "staircase" => Algorithm::Staircase,
            "f2" => Algorithm::F2,
            "numerical" => Algorithm::Numerical,
            other => return Err(Error::validation(format!("unknown algorithm '{other}'"))),
        })
    }
}

/// A Frobenius vector together with the intermediate sizes that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FpReport {
    pub result: FrobeniusResult,
    pub algorithm: Algorithm,
    pub p: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<LambdaBounds>,
    /// Number of tuples in the exponent box that was scanned.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub box_tuples: Option<u128>,
    /// Number of distinct S-degrees obtained from the box.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidates: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub indispensable: Option<usize>,
}

impl FpReport {
    fn infinite(algorithm: Algorithm, p: u64) -> Self {
        FpReport::bare(FrobeniusResult::Infinite, algorithm, p)
    }

    fn bare(result: FrobeniusResult, algorithm: Algorithm, p: u64) -> Self {
        FpReport {
            result,
            algorithm,
            p,
            lambda: None,
            box_tuples: None,
            candidates: None,
            basis_size: None,
            omega: None,
            indispensable: None,
        }
    }
}

/// Reads `Λ` off the basis: for each variable, the smallest exponent of a
/// pure power of it among the monomials of the basis. Falls back to a direct
/// search when a variable has no pure power in `basis`.
pub fn lambda_bounds(s: &Semigroup, basis: &GroebnerBasis) -> Result<LambdaBounds> {
    if !is_fp_finite(s)? {
        return Err(Error::InfiniteFrobenius(
            "some extremal ray holds a single minimal generator".into(),
        ));
    }
    let h = s.num_generators();
    let mut lambda = vec![0u64; h];
    for b in basis.elements() {
        for m in b.monomials() {
            let support: Vec<usize> = (0..h).filter(|&i| m[i] > 0).collect();
            if let [k] = support[..] {
                if lambda[k] == 0 || m[k] < lambda[k] {
                    lambda[k] = m[k];
                }
            }
        }
    }
    for (k, l) in lambda.iter_mut().enumerate() {
        if *l == 0 {
            *l = smallest_multiple_avoiding(s, k)?;
        }
    }
    LambdaBounds::new(lambda.into())
}

/// Smallest `λ >= 1` with `λ a_k` in the semigroup generated by the others.
/// Only call when `F_p(S)` is finite, otherwise this does not terminate.
pub(crate) fn smallest_multiple_avoiding(s: &Semigroup, k: usize) -> Result<u64> {
    let a = &s.generators()[k];
    let mut lambda = 1u64;
    loop {
        let target = a.checked_scale(lambda)?;
        if contains_avoiding(s, &target, k) {
            return Ok(lambda);
        }
        lambda = lambda.checked_add(1).ok_or(Error::Overflow("lambda search"))?;
    }
}

fn box_tuples(lambda: &LambdaBounds, p: u64) -> u128 {
    lambda.as_exp().iter().map(|&l| (l as u128) * (p as u128) + 1).product()
}

/// Distinct points `Σ γ_i a_i` with `0 <= γ_i <= p λ_i`, in lexicographic
/// order of their coordinates.
pub fn candidate_degrees(s: &Semigroup, lambda: &LambdaBounds, p: u64) -> Result<Vec<Point>> {
    if lambda.as_exp().len() != s.num_generators() {
        return Err(Error::LengthMismatch {
            expected: s.num_generators(),
            found: lambda.as_exp().len(),
        });
    }
    let mut current: HashSet<Vec<u64>> = HashSet::from([vec![0; s.dim()]]);
    for (a, &l) in s.generators().iter().zip(lambda.as_exp().iter()) {
        let top = l.checked_mul(p).ok_or(Error::Overflow("candidate box"))?;
        let mut next = HashSet::with_capacity(current.len() * 2);
        for x in &current {
            let mut y = x.clone();
            next.insert(y.clone());
            for _ in 0..top {
                for (c, &ai) in y.iter_mut().zip(a.iter()) {
                    *c = c.checked_add(ai).ok_or(Error::Overflow("candidate box"))?;
                }
                next.insert(y.clone());
            }
        }
        current = next;
    }
    let mut out: Vec<Point> = current.into_iter().map(Point::new).collect();
    out.sort_by(|a, b| a[..].cmp(&b[..]));
    Ok(out)
}

/// `F_p(S)` by the general box search.
pub fn fp_general(s: &Semigroup, p: u64, order: OrderSpec) -> Result<FrobeniusResult> {
    fp_general_report(s, p, order).map(|r| r.result)
}

pub fn fp_general_report(s: &Semigroup, p: u64, order: OrderSpec) -> Result<FpReport> {
    if p == 0 {
        if s.dim() == 1 {
            return Ok(FpReport::bare(f0_numerical(s)?, Algorithm::Numerical, 0));
        }
        return Err(Error::Unsupported(
            "F_0 for q >= 2 needs the gap set of a C-semigroup, which is not implemented".into(),
        ));
    }
    if !is_fp_finite(s)? {
        return Ok(FpReport::infinite(Algorithm::General, p));
    }
    let basis = GroebnerBasis::of_semigroup(s, order)?;
    let lambda = lambda_bounds(s, &basis)?;
    let candidates = candidate_degrees(s, &lambda, p)?;
    let result = scan_descending(s, candidates.clone(), p, order);
    Ok(FpReport {
        box_tuples: Some(box_tuples(&lambda, p)),
        candidates: Some(candidates.len()),
        basis_size: Some(basis.len()),
        lambda: Some(lambda),
        ..FpReport::bare(result, Algorithm::General, p)
    })
}

/// Largest candidate, under `order`, with between 1 and `p` factorizations.
pub(crate) fn scan_descending(s: &Semigroup, mut candidates: Vec<Point>, p: u64, order: OrderSpec) -> FrobeniusResult {
    candidates.sort_by(|a, b| order.cmp(b, a));
    let cap = usize::try_from(p).unwrap_or(usize::MAX).saturating_add(1);
    candidates
        .into_par_iter()
        .find_first(|n| {
            let c = count_capped(s, n, cap);
            c > 0 && c < cap
        })
        .map_or(FrobeniusResult::Infinite, FrobeniusResult::Finite)
}

/// The Frobenius number of a numerical semigroup: the largest integer with
/// no factorization.
pub fn f0_numerical(s: &Semigroup) -> Result<FrobeniusResult> {
    if s.dim() != 1 {
        return Err(Error::validation("the Frobenius number needs q = 1"));
    }
    let gens: Vec<u64> = s.generators().iter().map(|g| g[0]).collect();
    if gens.iter().fold(0, |acc, &g| gcd(acc, g)) != 1 {
        return Ok(FrobeniusResult::Infinite);
    }
    let smallest = *gens.iter().min().expect("non-empty") as usize;
    if smallest == 1 {
        return Err(Error::Unsupported("S = N has no gaps".into()));
    }
    // sieve until `smallest` consecutive members have been seen
    let mut member = vec![true];
    let mut run = 0usize;
    let mut last_gap = 0u64;
    for n in 1u64.. {
        let is_member = gens
            .iter()
            .any(|&g| g <= n && member[(n - g) as usize]);
        member.push(is_member);
        if is_member {
            run += 1;
            if run == smallest {
                break;
            }
        } else {
            run = 0;
            last_gap = n;
        }
    }
    Ok(FrobeniusResult::Finite(Point::new(vec![last_gap])))
}

/// Dispatches to the algorithm requested by name.
pub fn compute(s: &Semigroup, p: u64, order: OrderSpec, algorithm: Algorithm) -> Result<FpReport> {
    match algorithm {
        Algorithm::General => fp_general_report(s, p, order),
        Algorithm::Numerical if p != 0 => Err(Error::validation("the numerical algorithm computes F_0 only")),
        Algorithm::Numerical => Ok(FpReport::bare(f0_numerical(s)?, Algorithm::Numerical, 0)),
        Algorithm::NormalForm | Algorithm::Staircase if p != 1 => Err(Error::validation(
            "the normalform and staircase algorithms compute F_1 only",
        )),
        Algorithm::NormalForm => f1::f1_normalform_report(s, order),
        Algorithm::Staircase => f1::f1_staircase_report(s, order),
        Algorithm::F2 if p != 2 => Err(Error::validation("the f2 algorithm computes F_2 only")),
        Algorithm::F2 => f2::f2_improved_report(s, order),
    }
}
