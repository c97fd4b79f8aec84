//! Points of ℕ^q, exponent vectors in ℕ^h, graded orders, and the
//! [`Semigroup`] type itself.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorization;

macro_rules! nat_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        // `Ord` is plain lexicographic order on coordinates, used for
        // deterministic containers; graded comparisons go through `OrderSpec`.
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(Vec<u64>);

        impl $name {
            pub fn new(coords: Vec<u64>) -> Self {
                $name(coords)
            }

            pub fn zeros(len: usize) -> Self {
                $name(vec![0; len])
            }

            pub fn unit(len: usize, index: usize) -> Self {
                let mut v = vec![0; len];
                v[index] = 1;
                $name(v)
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }

            /// Sum of the entries.
            pub fn degree(&self) -> u128 {
                self.0.iter().map(|&c| c as u128).sum()
            }

            pub fn into_inner(self) -> Vec<u64> {
                self.0
            }

            pub fn checked_add(&self, other: &Self) -> Result<Self> {
                add(&self.0, &other.0).map($name)
            }

            pub fn checked_scale(&self, factor: u64) -> Result<Self> {
                scale(&self.0, factor).map($name)
            }

            /// Componentwise `self <= other`.
            pub fn divides(&self, other: &Self) -> bool {
                self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
            }
        }

        impl Deref for $name {
            type Target = [u64];

            fn deref(&self) -> &[u64] {
                &self.0
            }
        }

        impl From<Vec<u64>> for $name {
            fn from(v: Vec<u64>) -> Self {
                $name(v)
            }
        }

        impl<const N: usize> From<[u64; N]> for $name {
            fn from(v: [u64; N]) -> Self {
                $name(v.to_vec())
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{:?}", self.0)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    };
}

nat_vector!(
    /// An element of ℕ^q.
    Point
);
nat_vector!(
    /// An exponent vector in ℕ^h: a factorization, or the exponents of a
    /// monomial in `x_1, ..., x_h`.
    ExpVec
);

pub(crate) fn add(a: &[u64], b: &[u64]) -> Result<Vec<u64>> {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).ok_or(Error::Overflow("vector addition")))
        .collect()
}

pub(crate) fn scale(a: &[u64], factor: u64) -> Result<Vec<u64>> {
    a.iter()
        .map(|x| x.checked_mul(factor).ok_or(Error::Overflow("vector scaling")))
        .collect()
}

/// Tie-break rule of a graded order. The degree is always the coordinate sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    #[serde(rename = "grlex")]
    GradedLex,
    #[serde(rename = "grevlex")]
    GradedRevLex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderSpec {
    pub kind: OrderKind,
}

impl OrderSpec {
    pub const GRLEX: OrderSpec = OrderSpec { kind: OrderKind::GradedLex };
    pub const GREVLEX: OrderSpec = OrderSpec { kind: OrderKind::GradedRevLex };

    pub fn name(&self) -> &'static str {
        match self.kind {
            OrderKind::GradedLex => "grlex",
            OrderKind::GradedRevLex => "grevlex",
        }
    }

    /// Compares two vectors of equal length. Callers that cannot guarantee
    /// equal lengths should use [`compare_graded`].
    pub fn cmp(&self, u: &[u64], v: &[u64]) -> Ordering {
        debug_assert_eq!(u.len(), v.len());
        let du: u128 = u.iter().map(|&c| c as u128).sum();
        let dv: u128 = v.iter().map(|&c| c as u128).sum();
        du.cmp(&dv).then_with(|| self.tie_break(u, v))
    }

    /// The tie-break alone, for vectors known to have equal degree.
    pub(crate) fn tie_break(&self, u: &[u64], v: &[u64]) -> Ordering {
        match self.kind {
            OrderKind::GradedLex => u.cmp(v),
            // The vector with the smaller last differing entry is larger.
            OrderKind::GradedRevLex => u
                .iter()
                .rev()
                .zip(v.iter().rev())
                .find(|(a, b)| a != b)
                .map_or(Ordering::Equal, |(a, b)| b.cmp(a)),
        }
    }
}

impl Default for OrderSpec {
    fn default() -> Self {
        OrderSpec::GRLEX
    }
}

impl std::str::FromStr for OrderSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grlex" => Ok(OrderSpec::GRLEX),
            "grevlex" => Ok(OrderSpec::GREVLEX),
            "lex" | "revlex" => Err(Error::validation(format!(
                "order '{s}' is not graded; F_p is only defined for graded orders"
            ))),
            other => Err(Error::validation(format!("unknown order '{other}'"))),
        }
    }
}

/// Graded comparison of two points or two exponent vectors.
pub fn compare_graded(order: OrderSpec, u: &[u64], v: &[u64]) -> Result<Ordering> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch { expected: u.len(), found: v.len() });
    }
    Ok(order.cmp(u, v))
}

/// Either a point of ℕ^q or the value `(∞, ..., ∞)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrobeniusResult {
    Finite(Point),
    Infinite,
}

impl FrobeniusResult {
    pub fn finite(&self) -> Option<&Point> {
        match self {
            FrobeniusResult::Finite(p) => Some(p),
            FrobeniusResult::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, FrobeniusResult::Infinite)
    }
}

impl Serialize for FrobeniusResult {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FrobeniusResult::Finite(p) => p.serialize(serializer),
            FrobeniusResult::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

impl fmt::Display for FrobeniusResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrobeniusResult::Finite(p) => write!(f, "{p}"),
            FrobeniusResult::Infinite => write!(f, "(inf,...,inf)"),
        }
    }
}

/// A finitely generated affine semigroup given by its minimal generators.
///
/// The generator list order fixes the variable order `x_1 > x_2 > ... > x_h`
/// used by the Gröbner machinery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semigroup {
    dim: usize,
    generators: Vec<Point>,
}

impl Semigroup {
    /// Builds a semigroup from a list that must already be a minimal
    /// generating set.
    pub fn new(generators: Vec<Point>) -> Result<Self> {
        let dim = check_shape(&generators)?;
        if let Some(i) = first_redundant(&generators) {
            return Err(Error::validation(format!(
                "generator {} is not minimal",
                generators[i]
            )));
        }
        Ok(Semigroup { dim, generators })
    }

    /// Removes duplicated and non-minimal generators. The relative order of
    /// the surviving generators is kept.
    pub fn minimalize(generators: Vec<Point>) -> Result<Self> {
        let dim = check_shape(&generators)?;
        let mut gens: Vec<Point> = Vec::with_capacity(generators.len());
        for g in generators {
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        while let Some(i) = first_redundant(&gens) {
            gens.remove(i);
        }
        Ok(Semigroup { dim, generators: gens })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// `Σ λ_i a_i`, with overflow reported.
    pub fn s_degree(&self, lambda: &[u64]) -> Result<Point> {
        s_degree_over(&self.generators, self.dim, lambda)
    }

    pub fn contains(&self, n: &[u64]) -> bool {
        factorization::contains(self, n)
    }
}

/// Same as [`Semigroup::minimalize`].
pub fn minimalize_generators(gens: Vec<Point>) -> Result<Semigroup> {
    Semigroup::minimalize(gens)
}

pub(crate) fn s_degree_over(gens: &[Point], dim: usize, lambda: &[u64]) -> Result<Point> {
    if lambda.len() != gens.len() {
        return Err(Error::LengthMismatch { expected: gens.len(), found: lambda.len() });
    }
    let mut out = vec![0u64; dim];
    for (g, &l) in gens.iter().zip(lambda) {
        if l == 0 {
            continue;
        }
        for (o, &c) in out.iter_mut().zip(g.iter()) {
            let term = c.checked_mul(l).ok_or(Error::Overflow("S-degree"))?;
            *o = o.checked_add(term).ok_or(Error::Overflow("S-degree"))?;
        }
    }
    Ok(Point(out))
}

fn check_shape(generators: &[Point]) -> Result<usize> {
    let first = generators
        .first()
        .ok_or_else(|| Error::validation("empty generator list"))?;
    let dim = first.len();
    if dim == 0 {
        return Err(Error::validation("ambient dimension must be at least 1"));
    }
    for g in generators {
        if g.len() != dim {
            return Err(Error::LengthMismatch { expected: dim, found: g.len() });
        }
        if g.is_zero() {
            return Err(Error::validation("the zero vector cannot be a generator"));
        }
    }
    Ok(dim)
}

/// Index of the first generator lying in the semigroup spanned by the others.
fn first_redundant(gens: &[Point]) -> Option<usize> {
    (0..gens.len()).find(|&i| {
        let others: Vec<Point> = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        !others.is_empty() && factorization::contains_over(&others, &gens[i])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[u64]]) -> Vec<Point> {
        v.iter().map(|c| Point::new(c.to_vec())).collect()
    }

    fn plane_example() -> Semigroup {
        Semigroup::new(pts(&[&[3, 0], &[4, 0], &[0, 5], &[0, 6], &[1, 1]])).unwrap()
    }

    #[test]
    fn graded_comparisons() {
        let o = OrderSpec::GRLEX;
        assert_eq!(compare_graded(o, &[21, 4], &[2, 83]).unwrap(), Ordering::Less);
        assert_eq!(compare_graded(o, &[2, 1], &[1, 2]).unwrap(), Ordering::Greater);
        assert_eq!(compare_graded(o, &[3, 3], &[3, 3]).unwrap(), Ordering::Equal);
        assert!(compare_graded(o, &[1], &[1, 2]).is_err());
    }

    #[test]
    fn grevlex_tie_break() {
        let o = OrderSpec::GREVLEX;
        // x1*x3 vs x2^2: grevlex prefers the one without x3
        assert_eq!(o.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        assert_eq!(o.cmp(&[2, 0, 0], &[0, 2, 0]), Ordering::Greater);
        assert_eq!(OrderSpec::GRLEX.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Greater);
    }

    #[test]
    fn non_graded_orders_rejected() {
        assert!("lex".parse::<OrderSpec>().is_err());
        assert_eq!("grevlex".parse::<OrderSpec>().unwrap(), OrderSpec::GREVLEX);
    }

    #[test]
    fn s_degree_examples() {
        let s = plane_example();
        assert_eq!(s.s_degree(&[3, 2, 0, 0, 4]).unwrap(), Point::from([21, 4]));
        assert_eq!(s.s_degree(&[0; 5]).unwrap(), Point::from([0, 0]));
        assert_eq!(s.s_degree(&[0, 0, 0, 0, 1]).unwrap(), Point::from([1, 1]));
        assert!(s.s_degree(&[1, 2]).is_err());
    }

    #[test]
    fn s_degree_overflow_is_reported() {
        let s = Semigroup::new(pts(&[&[u64::MAX / 2 + 1]])).unwrap();
        assert_eq!(s.s_degree(&[2]), Err(Error::Overflow("S-degree")));
    }

    #[test]
    fn minimalize_examples() {
        let s = Semigroup::minimalize(pts(&[&[2], &[3], &[4]])).unwrap();
        assert_eq!(s.generators(), &pts(&[&[2], &[3]])[..]);
        let s = Semigroup::minimalize(pts(&[&[2], &[4]])).unwrap();
        assert_eq!(s.generators(), &pts(&[&[2]])[..]);
        let gens = pts(&[&[3, 0], &[4, 0], &[0, 5], &[0, 6], &[1, 1]]);
        assert_eq!(Semigroup::minimalize(gens.clone()).unwrap().generators(), &gens[..]);
    }

    #[test]
    fn minimalize_errors() {
        assert!(Semigroup::minimalize(vec![]).is_err());
        assert!(Semigroup::minimalize(pts(&[&[0, 0], &[1, 0]])).is_err());
        assert!(Semigroup::minimalize(pts(&[&[1, 0], &[1]])).is_err());
        assert!(Semigroup::new(pts(&[&[2], &[3], &[4]])).is_err());
    }

    #[test]
    fn minimalize_drops_duplicates() {
        let s = Semigroup::minimalize(pts(&[&[5], &[3], &[5]])).unwrap();
        assert_eq!(s.generators(), &pts(&[&[5], &[3]])[..]);
    }
}
