use std::collections::BTreeMap;

use super::{box_tuples, candidate_degrees, f1, lambda_bounds, scan_descending, Algorithm, FpReport};
use crate::cone::is_fp_finite;
use crate::error::{Error, Result};
use crate::factorization::{count_capped, factorizations};
use crate::groebner::{buchberger_reduced, toric_ideal_generators, Binomial, GroebnerBasis, SDegreeOrder};
use crate::semigroup::{ExpVec, FrobeniusResult, OrderSpec, Semigroup};

fn share_variable(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(&x, &y)| x > 0 && y > 0)
}

fn components_of(vertices: Vec<ExpVec>) -> Vec<Vec<ExpVec>> {
    let n = vertices.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if share_variable(&vertices[i], &vertices[j]) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[rj] = ri;
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<ExpVec>> = BTreeMap::new();
    for (i, v) in vertices.into_iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(v);
    }
    groups.into_values().collect()
}

/// Connected components of the complex `∇_m`: factorizations of `m` are
/// joined when their monomials share a variable.
pub fn nabla_components(s: &Semigroup, m: &[u64]) -> Vec<Vec<ExpVec>> {
    components_of(factorizations(s, m).factorizations)
}

/// Checks that `binomials` is a minimal generating set of `I_S`: the
/// degree-by-degree connectivity conditions on `∇_m`, plus generation of
/// the whole ideal.
pub fn verify_minimal_ideal_basis(s: &Semigroup, binomials: &[Binomial]) -> Result<bool> {
    let mut by_degree: BTreeMap<Vec<u64>, Vec<&Binomial>> = BTreeMap::new();
    for b in binomials {
        if b.lead.len() != s.num_generators() || b.trail.len() != s.num_generators() {
            return Err(Error::LengthMismatch { expected: s.num_generators(), found: b.lead.len() });
        }
        if !b.is_homogeneous(s)? {
            return Err(Error::validation(format!("{b} is not S-homogeneous")));
        }
        by_degree.entry(s.s_degree(&b.lead)?.into_inner()).or_default().push(b);
    }
    for (m, group) in &by_degree {
        let comps = nabla_components(s, m);
        if comps.len() < 2 || group.len() != comps.len() - 1 {
            return Ok(false);
        }
        let component_of = |v: &ExpVec| comps.iter().position(|c| c.contains(v));
        let mut touched = vec![false; comps.len()];
        for b in group {
            let (Some(i), Some(j)) = (component_of(&b.lead), component_of(&b.trail)) else {
                return Ok(false);
            };
            if i == j {
                return Ok(false);
            }
            touched[i] = true;
            touched[j] = true;
        }
        if touched.contains(&false) {
            return Ok(false);
        }
    }
    // generation: every known generator of I_S reduces to zero modulo ⟨B⟩
    let order = SDegreeOrder::new(s, OrderSpec::GRLEX);
    let oriented: Vec<Binomial> = binomials
        .iter()
        .filter_map(|b| Binomial::oriented(b.lead.clone(), b.trail.clone(), &order))
        .collect();
    let basis = GroebnerBasis::from_reduced(OrderSpec::GRLEX, buchberger_reduced(&oriented, &order)?);
    for g in toric_ideal_generators(s)? {
        if basis.normal_form(&g.lead)? != basis.normal_form(&g.trail)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn is_indispensable(s: &Semigroup, b: &Binomial) -> Result<bool> {
    let m = s.s_degree(&b.lead)?;
    Ok(count_capped(s, &m, 3) == 2 && !share_variable(&b.lead, &b.trail))
}

/// The indispensable binomials of `I_S`: reduced-basis elements whose
/// degree has exactly two factorizations with disjoint supports.
pub fn indispensable_binomials(s: &Semigroup, order: OrderSpec) -> Result<Vec<Binomial>> {
    let basis = GroebnerBasis::of_semigroup(s, order)?;
    indispensables_of(s, &basis)
}

fn indispensables_of(s: &Semigroup, basis: &GroebnerBasis) -> Result<Vec<Binomial>> {
    let mut out = Vec::new();
    for b in basis.elements() {
        if is_indispensable(s, b)? {
            out.push(b.clone());
        }
    }
    Ok(out)
}

/// `F_2(S)`. Without indispensable binomials no element has exactly two
/// factorizations and `F_2 = F_1`; otherwise the distinct S-degrees of the
/// box `γ <= 2Λ` are scanned downwards.
pub fn f2_improved(s: &Semigroup, order: OrderSpec) -> Result<FrobeniusResult> {
    f2_improved_report(s, order).map(|r| r.result)
}

pub(crate) fn f2_improved_report(s: &Semigroup, order: OrderSpec) -> Result<FpReport> {
    if !is_fp_finite(s)? {
        return Ok(FpReport::infinite(Algorithm::F2, 2));
    }
    let basis = GroebnerBasis::of_semigroup(s, order)?;
    let indispensable = indispensables_of(s, &basis)?.len();
    if indispensable == 0 {
        let f1 = f1::f1_staircase_report(s, order)?;
        return Ok(FpReport { algorithm: Algorithm::F2, p: 2, indispensable: Some(0), ..f1 });
    }
    let lambda = lambda_bounds(s, &basis)?;
    let candidates = candidate_degrees(s, &lambda, 2)?;
    let count = candidates.len();
    let result = scan_descending(s, candidates, 2, order);
    Ok(FpReport {
        box_tuples: Some(box_tuples(&lambda, 2)),
        candidates: Some(count),
        basis_size: Some(basis.len()),
        indispensable: Some(indispensable),
        lambda: Some(lambda),
        ..FpReport::bare(result, Algorithm::F2, 2)
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::{plane, sg};
    use super::*;
    use crate::semigroup::Point;

    fn bin(lead: &[u64], trail: &[u64]) -> Binomial {
        Binomial { lead: lead.to_vec().into(), trail: trail.to_vec().into() }
    }

    #[test]
    fn nabla_examples() {
        let s = sg(&[&[2], &[3]]);
        let c6 = nabla_components(&s, &[6]);
        assert_eq!(c6.len(), 2);
        assert!(c6.iter().all(|c| c.len() == 1));
        let c12 = nabla_components(&s, &[12]);
        assert_eq!(c12.len(), 1);
        assert_eq!(c12[0].len(), 3);
        let c = nabla_components(&plane(), &[21, 4]);
        assert_eq!(c, vec![vec![ExpVec::from([3, 2, 0, 0, 4])]]);
    }

    #[test]
    fn minimal_basis_checks() {
        let s = sg(&[&[2], &[3]]);
        assert!(verify_minimal_ideal_basis(&s, &[bin(&[3, 0], &[0, 2])]).unwrap());
        assert!(!verify_minimal_ideal_basis(&s, &[bin(&[3, 0], &[0, 2]), bin(&[6, 0], &[0, 4])]).unwrap());
        assert!(!verify_minimal_ideal_basis(&s, &[]).unwrap());
        assert!(verify_minimal_ideal_basis(&s, &[bin(&[1, 0], &[0, 1])]).is_err());

        let s = sg(&[&[3], &[4], &[5]]);
        let relations = [bin(&[0, 2, 0], &[1, 0, 1]), bin(&[3, 0, 0], &[0, 1, 1]), bin(&[0, 0, 2], &[2, 1, 0])];
        assert!(verify_minimal_ideal_basis(&s, &relations).unwrap());
        // two of the three relations do not generate
        assert!(!verify_minimal_ideal_basis(&s, &relations[..2]).unwrap());
    }

    #[test]
    fn indispensable_examples() {
        let s = sg(&[&[2], &[3]]);
        assert_eq!(indispensable_binomials(&s, OrderSpec::GRLEX).unwrap(), vec![bin(&[3, 0], &[0, 2])]);
        let s = sg(&[&[3], &[4], &[5]]);
        let ind = indispensable_binomials(&s, OrderSpec::GRLEX).unwrap();
        let mut degs: Vec<u64> = ind.iter().map(|b| s.s_degree(&b.lead).unwrap()[0]).collect();
        degs.sort();
        assert_eq!(degs, vec![8, 9, 10]);
    }

    #[test]
    fn f2_of_2_3() {
        assert_eq!(
            f2_improved(&sg(&[&[2], &[3]]), OrderSpec::GRLEX).unwrap(),
            FrobeniusResult::Finite(Point::from([13]))
        );
    }

    #[test]
    fn f2_without_indispensables_is_f1() {
        // degree 30 has three pairwise disjoint factorizations
        let s = sg(&[&[6], &[10], &[15]]);
        assert!(indispensable_binomials(&s, OrderSpec::GRLEX).unwrap().is_empty());
        let r = f2_improved_report(&s, OrderSpec::GRLEX).unwrap();
        assert_eq!(r.indispensable, Some(0));
        assert_eq!(r.result, f1::f1_staircase(&s, OrderSpec::GRLEX).unwrap());
        assert_eq!(r.result, super::super::fp_general(&s, 2, OrderSpec::GRLEX).unwrap());
    }

    #[test]
    fn plane_example_indispensables() {
        let s = plane();
        let basis = GroebnerBasis::of_semigroup(&s, OrderSpec::GRLEX).unwrap();
        assert_eq!(basis.len(), 14);
        let ind = indispensables_of(&s, &basis).unwrap();
        assert_eq!(ind.len(), 9);
        // e.g. (7,12) = 2a1+a3+a4+a5 links x1*x2*x4^2 and x3*x5^7 inside ∇_(7,12)
        let x = bin(&[1, 1, 0, 2, 0], &[0, 0, 1, 0, 7]);
        assert!(basis.elements().contains(&x) && !ind.contains(&x));
        assert_eq!(nabla_components(&s, &[7, 12]).len(), 1);
        assert!(!verify_minimal_ideal_basis(&s, basis.elements()).unwrap());
        assert!(verify_minimal_ideal_basis(&s, &ind).unwrap());
    }
}
