//! Geometry of the rational cone spanned by the generators: primitive
//! directions, extremal rays, and the finiteness test for `F_p(S)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{Point, Semigroup};

/// A non-zero point whose coordinates have gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct RayDirection(Point);

impl RayDirection {
    pub fn as_point(&self) -> &Point {
        &self.0
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn primitive_direction(v: &[u64]) -> Result<RayDirection> {
    let g = v.iter().fold(0, |acc, &c| gcd(acc, c));
    if g == 0 {
        return Err(Error::validation("the zero vector has no direction"));
    }
    Ok(RayDirection(Point::new(v.iter().map(|&c| c / g).collect())))
}

/// One linear row `coeffs · μ (op) rhs` over integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Row {
    coeffs: Vec<i128>,
    rhs: i128,
}

impl Row {
    fn normalize(&mut self) {
        let g = self.coeffs.iter().fold(self.rhs.abs(), |acc, &c| gcd_i128(acc, c));
        if g > 1 {
            self.coeffs.iter_mut().for_each(|c| *c /= g);
            self.rhs /= g;
        }
    }

    /// `a * self + b * other`, overflow-checked.
    fn combine(&self, a: i128, other: &Row, b: i128) -> Result<Row> {
        let mix = |x: i128, y: i128| -> Result<i128> {
            x.checked_mul(a)
                .and_then(|u| y.checked_mul(b).and_then(|v| u.checked_add(v)))
                .ok_or(Error::Overflow("Fourier-Motzkin elimination"))
        };
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&x, &y)| mix(x, y))
            .collect::<Result<Vec<_>>>()?;
        let mut row = Row { coeffs, rhs: mix(self.rhs, other.rhs)? };
        row.normalize();
        Ok(row)
    }
}

/// Decides whether `target` is a non-negative rational combination of
/// `spanning`, exactly. Equalities are eliminated by substitution, the
/// remaining inequalities by Fourier–Motzkin.
pub fn in_rational_cone(spanning: &[Point], target: &[u64]) -> Result<bool> {
    let m = spanning.len();
    let q = target.len();
    if spanning.iter().any(|s| s.len() != q) {
        return Err(Error::validation("dimension mismatch in cone test"));
    }
    // Σ μ_i s_i = target
    let mut equalities: Vec<Row> = (0..q)
        .map(|j| Row {
            coeffs: spanning.iter().map(|s| s[j] as i128).collect(),
            rhs: target[j] as i128,
        })
        .collect();
    // -μ_i <= 0
    let mut inequalities: Vec<Row> = (0..m)
        .map(|i| {
            let mut coeffs = vec![0; m];
            coeffs[i] = -1;
            Row { coeffs, rhs: 0 }
        })
        .collect();

    while let Some(eq) = equalities.pop() {
        let Some(k) = eq.coeffs.iter().position(|&c| c != 0) else {
            if eq.rhs != 0 {
                return Ok(false);
            }
            continue;
        };
        let pivot = eq.coeffs[k];
        let substitute = |row: &Row| -> Result<Row> {
            let c = row.coeffs[k];
            if c == 0 {
                return Ok(row.clone());
            }
            // keep the sign of the row: multiply it by |pivot|
            let sign = pivot.signum();
            row.combine(pivot.abs(), &eq, -c * sign)
        };
        equalities = equalities.iter().map(substitute).collect::<Result<_>>()?;
        inequalities = inequalities.iter().map(substitute).collect::<Result<_>>()?;
    }

    for k in 0..m {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for row in inequalities {
            match row.coeffs[k].signum() {
                1 => pos.push(row),
                -1 => neg.push(row),
                _ => rest.push(row),
            }
        }
        for p in &pos {
            for n in &neg {
                rest.push(p.combine(-n.coeffs[k], n, p.coeffs[k])?);
            }
        }
        rest.sort_by(|a, b| (&a.coeffs, a.rhs).cmp(&(&b.coeffs, b.rhs)));
        rest.dedup();
        inequalities = rest;
    }
    Ok(inequalities.iter().all(|row| row.rhs >= 0))
}

/// Distinct primitive directions of the generators, in first-seen order.
fn generator_directions(s: &Semigroup) -> Vec<RayDirection> {
    let mut dirs: Vec<RayDirection> = Vec::new();
    for g in s.generators() {
        let d = primitive_direction(g).expect("generators are non-zero");
        if !dirs.contains(&d) {
            dirs.push(d);
        }
    }
    dirs
}

/// Primitive directions of the extremal rays of the cone spanned by `s`.
pub fn extremal_ray_directions(s: &Semigroup) -> Result<Vec<RayDirection>> {
    let dirs = generator_directions(s);
    let mut extremal = Vec::new();
    for (i, d) in dirs.iter().enumerate() {
        let others: Vec<Point> = dirs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, o)| o.0.clone())
            .collect();
        if !in_rational_cone(&others, d.as_point())? {
            extremal.push(d.clone());
        }
    }
    Ok(extremal)
}

/// True iff every extremal ray carries at least two minimal generators,
/// which is equivalent to `F_p(S)` being finite for every `p >= 1` and
/// every graded order.
pub fn is_fp_finite(s: &Semigroup) -> Result<bool> {
    if s.dim() == 1 {
        return Ok(s.num_generators() >= 2);
    }
    let rays = extremal_ray_directions(s)?;
    Ok(rays.iter().all(|ray| {
        s.generators()
            .iter()
            .filter(|g| primitive_direction(g).map(|d| &d == ray).unwrap_or(false))
            .count()
            >= 2
    }))
}
