//! Gluing `S' = S ⊕_{d,γ} ℕ^q`, generated by `d a_1, ..., d a_h, γ`.

use serde::Serialize;

use crate::cone::gcd;
use crate::error::{Error, Result};
use crate::factorization::factorizations;
use crate::frobenius::fp_general;
use crate::semigroup::{ExpVec, FrobeniusResult, OrderSpec, Point, Semigroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GluingSpec {
    pub d: u64,
    pub gamma: Point,
}

impl GluingSpec {
    pub fn new(d: u64, gamma: Point) -> Self {
        GluingSpec { d, gamma }
    }

    /// Checks `d >= 2`, `gcd(d, gcd(γ)) = 1`, `γ ∈ S` and that `γ` is not a
    /// minimal generator.
    pub fn validate(&self, s: &Semigroup) -> Result<()> {
        if self.d < 2 {
            return Err(Error::validation("gluing needs d >= 2"));
        }
        if self.gamma.len() != s.dim() {
            return Err(Error::LengthMismatch { expected: s.dim(), found: self.gamma.len() });
        }
        let g = self.gamma.iter().fold(0, |acc, &c| gcd(acc, c));
        if gcd(self.d, g) != 1 {
            return Err(Error::validation(format!(
                "d = {} and gcd of gamma = {g} are not coprime",
                self.d
            )));
        }
        if s.generators().contains(&self.gamma) {
            return Err(Error::validation(format!("gamma = {} is a minimal generator", self.gamma)));
        }
        if !s.contains(&self.gamma) {
            return Err(Error::validation(format!("gamma = {} is not in S", self.gamma)));
        }
        Ok(())
    }
}

/// The glued semigroup, with `γ` as its last generator.
pub fn glue(s: &Semigroup, spec: &GluingSpec) -> Result<Semigroup> {
    spec.validate(s)?;
    let mut gens = s
        .generators()
        .iter()
        .map(|a| a.checked_scale(spec.d))
        .collect::<Result<Vec<_>>>()?;
    gens.push(spec.gamma.clone());
    Semigroup::new(gens).map_err(|e| match e {
        Error::Validation(msg) => Error::validation(format!("glued generators are not minimal: {msg}")),
        other => other,
    })
}

fn finite_fp(s: &Semigroup, p: u64, order: OrderSpec) -> Result<Point> {
    match fp_general(s, p, order)? {
        FrobeniusResult::Finite(f) => Ok(f),
        FrobeniusResult::Infinite => Err(Error::InfiniteFrobenius(format!("F_{p}(S) is infinite"))),
    }
}

/// `d F_p(S) + (d-1) γ`, an upper bound for `F_p(S')` when `p >= 1`, and
/// the exact Frobenius number of `S'` when `p = 0` and `q = 1`.
pub fn fp_glued_bound(s: &Semigroup, p: u64, spec: &GluingSpec, order: OrderSpec) -> Result<Point> {
    spec.validate(s)?;
    let f = finite_fp(s, p, order)?;
    shifted(&f, spec)
}

fn shifted(f: &Point, spec: &GluingSpec) -> Result<Point> {
    f.checked_scale(spec.d)?.checked_add(&spec.gamma.checked_scale(spec.d - 1)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GluingVerdict {
    /// `F_p(S') = d F_p(S) + (d-1) γ`.
    Equal,
    StrictlyLess,
    /// `#Z_{F_p(S)}(S) != p`, so the criterion does not apply.
    PreconditionFailed,
}

/// Decides whether the bound of [`fp_glued_bound`] is attained: when
/// `#Z_{F_p(S)}(S) = p`, equality holds iff no factorization of `γ` is
/// componentwise below a factorization of `F_p(S)`.
pub fn gluing_equality(s: &Semigroup, p: u64, spec: &GluingSpec, order: OrderSpec) -> Result<GluingVerdict> {
    if p == 0 {
        return Err(Error::validation("the equality criterion is stated for p >= 1"));
    }
    spec.validate(s)?;
    let f = finite_fp(s, p, order)?;
    let zf = factorizations(s, &f);
    if zf.len() as u64 != p {
        return Ok(GluingVerdict::PreconditionFailed);
    }
    let zg = factorizations(s, &spec.gamma);
    let below = zg
        .factorizations
        .iter()
        .any(|b| zf.factorizations.iter().any(|c| b.divides(c)));
    Ok(if below { GluingVerdict::StrictlyLess } else { GluingVerdict::Equal })
}

/// `(λ, d-1)` for every `λ ∈ Z_{F_p(S)}(S)`; these are factorizations of
/// `d F_p(S) + (d-1) γ` in the glued semigroup.
pub fn lifted_factorizations(s: &Semigroup, f: &Point, spec: &GluingSpec) -> Vec<ExpVec> {
    factorizations(s, f)
        .factorizations
        .into_iter()
        .map(|l| {
            let mut v = l.into_inner();
            v.push(spec.d - 1);
            ExpVec::new(v)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::f0_numerical;

    fn sg(v: &[&[u64]]) -> Semigroup {
        Semigroup::new(v.iter().map(|c| Point::new(c.to_vec())).collect()).unwrap()
    }

    fn spec(d: u64, gamma: &[u64]) -> GluingSpec {
        GluingSpec::new(d, Point::new(gamma.to_vec()))
    }

    #[test]
    fn glue_examples() {
        let s = glue(&sg(&[&[3], &[4]]), &spec(2, &[7])).unwrap();
        assert_eq!(s, sg(&[&[6], &[8], &[7]]));
        let plane = sg(&[&[3, 0], &[4, 0], &[0, 5], &[0, 6], &[1, 1]]);
        let s = glue(&plane, &spec(3, &[4, 4])).unwrap();
        assert_eq!(s, sg(&[&[9, 0], &[12, 0], &[0, 15], &[0, 18], &[3, 3], &[4, 4]]));
    }

    #[test]
    fn glue_rejections() {
        let s = sg(&[&[3], &[4]]);
        assert!(glue(&s, &spec(2, &[5])).is_err());
        assert!(glue(&s, &spec(2, &[3])).is_err());
        assert!(glue(&s, &spec(2, &[8])).is_err());
        assert!(glue(&s, &spec(1, &[7])).is_err());
        assert!(glue(&s, &spec(2, &[7, 1])).is_err());
        assert!(glue(&s, &spec(5, &[18])).is_ok());
    }

    #[test]
    fn bound_examples() {
        let s = sg(&[&[3], &[4]]);
        assert_eq!(fp_glued_bound(&s, 0, &spec(2, &[7]), OrderSpec::GRLEX).unwrap(), Point::from([17]));
        assert_eq!(
            f0_numerical(&sg(&[&[6], &[7], &[8]])).unwrap(),
            FrobeniusResult::Finite(Point::from([17]))
        );
        assert_eq!(fp_glued_bound(&s, 1, &spec(2, &[7]), OrderSpec::GRLEX).unwrap(), Point::from([41]));
        let deficient = sg(&[&[0, 1], &[1, 1], &[2, 0], &[3, 0]]);
        assert!(matches!(
            fp_glued_bound(&deficient, 1, &spec(3, &[1, 2]), OrderSpec::GRLEX),
            Err(Error::InfiniteFrobenius(_))
        ));
    }

    #[test]
    fn equality_examples() {
        let s = sg(&[&[3], &[4]]);
        assert_eq!(gluing_equality(&s, 1, &spec(2, &[15]), OrderSpec::GRLEX).unwrap(), GluingVerdict::Equal);
        assert_eq!(
            fp_general(&sg(&[&[6], &[8], &[15]]), 1, OrderSpec::GRLEX).unwrap(),
            FrobeniusResult::Finite(Point::from([49]))
        );
        assert_eq!(
            gluing_equality(&s, 1, &spec(2, &[7]), OrderSpec::GRLEX).unwrap(),
            GluingVerdict::StrictlyLess
        );
        assert!(gluing_equality(&s, 1, &spec(2, &[12]), OrderSpec::GRLEX).is_err());
    }

    #[test]
    fn precondition_failed_when_count_differs() {
        let s = sg(&[&[3], &[4]]);
        let f2 = fp_general(&s, 2, OrderSpec::GRLEX).unwrap();
        let f2 = f2.finite().unwrap().clone();
        let verdict = gluing_equality(&s, 2, &spec(2, &[7]), OrderSpec::GRLEX).unwrap();
        if factorizations(&s, &f2).len() != 2 {
            assert_eq!(verdict, GluingVerdict::PreconditionFailed);
        } else {
            assert_ne!(verdict, GluingVerdict::PreconditionFailed);
        }
    }
}
