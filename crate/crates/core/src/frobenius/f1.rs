use std::collections::HashSet;

use serde::Serialize;

use super::{box_tuples, lambda_bounds, Algorithm, FpReport};
use crate::cone::is_fp_finite;
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::semigroup::{ExpVec, FrobeniusResult, OrderSpec, Point, Semigroup};

/// Iterates over every tuple `0 <= γ <= bound` componentwise.
pub(crate) fn for_each_in_box(bound: &[u64], mut visit: impl FnMut(&[u64]) -> Result<()>) -> Result<()> {
    let mut gamma = vec![0u64; bound.len()];
    loop {
        visit(&gamma)?;
        let mut i = 0;
        loop {
            if i == bound.len() {
                return Ok(());
            }
            if gamma[i] < bound[i] {
                gamma[i] += 1;
                break;
            }
            gamma[i] = 0;
            i += 1;
        }
    }
}

fn max_under(order: OrderSpec, points: impl IntoIterator<Item = Point>) -> Option<Point> {
    points.into_iter().max_by(|a, b| order.cmp(a, b))
}

/// `F_1(S)` from the box `γ <= Λ`: keep the tuples that are standard
/// monomials of the basis and are not divisible by any trailing monomial.
pub fn f1_normalform(s: &Semigroup, order: OrderSpec) -> Result<FrobeniusResult> {
    f1_normalform_report(s, order).map(|r| r.result)
}

pub(crate) fn f1_normalform_report(s: &Semigroup, order: OrderSpec) -> Result<FpReport> {
    if !is_fp_finite(s)? {
        return Ok(FpReport::infinite(Algorithm::NormalForm, 1));
    }
    let basis = GroebnerBasis::of_semigroup(s, order)?;
    let lambda = lambda_bounds(s, &basis)?;
    let mut best: Option<Point> = None;
    let mut survivors = HashSet::new();
    for_each_in_box(lambda.as_exp(), |gamma| {
        if basis.normal_form(gamma)?[..] != *gamma || basis.in_trail_ideal(gamma) {
            return Ok(());
        }
        let degree = s.s_degree(gamma)?;
        if best.as_ref().is_none_or(|b| order.cmp(&degree, b).is_gt()) {
            best = Some(degree.clone());
        }
        survivors.insert(degree);
        Ok(())
    })?;
    let best = best.ok_or_else(|| Error::validation("empty survivor set"))?;
    Ok(FpReport {
        box_tuples: Some(box_tuples(&lambda, 1)),
        candidates: Some(survivors.len()),
        basis_size: Some(basis.len()),
        lambda: Some(lambda),
        ..FpReport::bare(FrobeniusResult::Finite(best), Algorithm::NormalForm, 1)
    })
}

/// The exponents `Ω` of all basis monomials and the finite set of tuples
/// lying in no translate `ω + ℕ^h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StaircaseComplement {
    pub omega: Vec<ExpVec>,
    pub complement: Vec<ExpVec>,
}

/// Builds the staircase complement of the monomials of `basis`. Every
/// variable must have a pure power among them, which holds whenever
/// `F_p(S)` is finite.
pub fn staircase_complement(basis: &GroebnerBasis, h: usize) -> Result<StaircaseComplement> {
    let mut omega: Vec<ExpVec> = Vec::new();
    for b in basis.elements() {
        for m in b.monomials() {
            if !omega.contains(m) {
                omega.push(m.clone());
            }
        }
    }
    // each coordinate of a complement tuple is below the pure power of its variable
    let mut bound = vec![u64::MAX; h];
    for w in &omega {
        let support: Vec<usize> = (0..h).filter(|&i| w[i] > 0).collect();
        if let [k] = support[..] {
            bound[k] = bound[k].min(w[k] - 1);
        }
    }
    if bound.contains(&u64::MAX) {
        return Err(Error::validation(
            "a variable has no pure power in the basis; the staircase complement is infinite",
        ));
    }
    let mut complement = Vec::new();
    for_each_in_box(&bound, |gamma| {
        if !omega.iter().any(|w| w.iter().zip(gamma).all(|(a, b)| a <= b)) {
            complement.push(ExpVec::new(gamma.to_vec()));
        }
        Ok(())
    })?;
    Ok(StaircaseComplement { omega, complement })
}

/// `F_1(S)` as the largest S-degree of the staircase complement of all
/// basis monomials.
pub fn f1_staircase(s: &Semigroup, order: OrderSpec) -> Result<FrobeniusResult> {
    f1_staircase_report(s, order).map(|r| r.result)
}

pub(crate) fn f1_staircase_report(s: &Semigroup, order: OrderSpec) -> Result<FpReport> {
    if !is_fp_finite(s)? {
        return Ok(FpReport::infinite(Algorithm::Staircase, 1));
    }
    let basis = GroebnerBasis::of_semigroup(s, order)?;
    let stairs = staircase_complement(&basis, s.num_generators())?;
    let degrees: HashSet<Point> = stairs
        .complement
        .iter()
        .map(|g| s.s_degree(g))
        .collect::<Result<_>>()?;
    let count = degrees.len();
    let best = max_under(order, degrees).ok_or_else(|| Error::validation("empty staircase"))?;
    Ok(FpReport {
        box_tuples: Some(stairs.complement.len() as u128),
        candidates: Some(count),
        basis_size: Some(basis.len()),
        omega: Some(stairs.omega.len()),
        ..FpReport::bare(FrobeniusResult::Finite(best), Algorithm::Staircase, 1)
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::{plane, sg};
    use super::*;

    #[test]
    fn normalform_examples() {
        assert_eq!(
            f1_normalform(&plane(), OrderSpec::GRLEX).unwrap(),
            FrobeniusResult::Finite(Point::from([2, 51]))
        );
        assert_eq!(
            f1_normalform(&sg(&[&[2], &[3]]), OrderSpec::GRLEX).unwrap(),
            FrobeniusResult::Finite(Point::from([7]))
        );
        assert!(f1_normalform(&sg(&[&[0, 1], &[1, 1], &[2, 0], &[3, 0]]), OrderSpec::GRLEX)
            .unwrap()
            .is_infinite());
    }

    #[test]
    fn staircase_of_2_3() {
        let s = sg(&[&[2], &[3]]);
        let basis = GroebnerBasis::of_semigroup(&s, OrderSpec::GRLEX).unwrap();
        let st = staircase_complement(&basis, 2).unwrap();
        assert_eq!(st.omega, vec![ExpVec::from([3, 0]), ExpVec::from([0, 2])]);
        let mut comp: Vec<Vec<u64>> = st.complement.iter().map(|g| g.to_vec()).collect();
        comp.sort();
        assert_eq!(comp, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 0], vec![2, 1]]);
        let mut degs: Vec<u64> = comp.iter().map(|g| 2 * g[0] + 3 * g[1]).collect();
        degs.sort();
        assert_eq!(degs, vec![0, 2, 3, 4, 5, 7]);
        assert_eq!(f1_staircase(&s, OrderSpec::GRLEX).unwrap(), FrobeniusResult::Finite(Point::from([7])));
    }

    #[test]
    fn staircase_of_plane_example() {
        let r = f1_staircase_report(&plane(), OrderSpec::GRLEX).unwrap();
        assert_eq!(r.omega, Some(28));
        assert_eq!(r.candidates, Some(179));
        assert_eq!(r.result, FrobeniusResult::Finite(Point::from([2, 51])));
    }

    #[test]
    fn unique_factorization_degrees_of_plane_example() {
        let s = plane();
        let basis = GroebnerBasis::of_semigroup(&s, OrderSpec::GRLEX).unwrap();
        let stairs = staircase_complement(&basis, 5).unwrap();
        let degrees: HashSet<Point> = stairs.complement.iter().map(|g| s.s_degree(g).unwrap()).collect();
        // largest first coordinate: the maximum under a non-graded lex order
        assert_eq!(degrees.iter().max(), Some(&Point::from([21, 4])));
        let top = max_under(OrderSpec::GREVLEX, degrees.iter().cloned()).unwrap();
        assert_eq!(top, Point::from([2, 51]));
    }

    #[test]
    fn staircase_infinite_case() {
        assert!(f1_staircase(&sg(&[&[0, 1], &[1, 1], &[2, 0], &[3, 0]]), OrderSpec::GRLEX)
            .unwrap()
            .is_infinite());
    }

    #[test]
    fn box_iteration_covers_everything() {
        let mut n = 0;
        for_each_in_box(&[2, 0, 3], |_| {
            n += 1;
            Ok(())
        })
        .unwrap();
        assert_eq!(n, 12);
    }
}
