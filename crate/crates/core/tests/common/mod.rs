#![allow(dead_code)]

use frobvec::cone::{gcd, is_fp_finite};
use frobvec::gluing::{glue, GluingSpec};
use frobvec::{Point, Semigroup};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn sg(v: &[&[u64]]) -> Semigroup {
    Semigroup::new(v.iter().map(|c| Point::new(c.to_vec())).collect()).unwrap()
}

pub fn plane_example() -> Semigroup {
    sg(&[&[3, 0], &[4, 0], &[0, 5], &[0, 6], &[1, 1]])
}

/// Numerical semigroup with coprime generators, `h >= 2`.
pub fn random_numerical(r: &mut ChaCha8Rng, max_h: usize, max_gen: u64) -> Semigroup {
    loop {
        let h = r.gen_range(2..=max_h);
        let gens: Vec<Point> = (0..h).map(|_| Point::new(vec![r.gen_range(2..=max_gen)])).collect();
        if gens.iter().fold(0, |acc, g| gcd(acc, g[0])) != 1 {
            continue;
        }
        let s = Semigroup::minimalize(gens).unwrap();
        if s.num_generators() >= 2 {
            return s;
        }
    }
}

const RAY_MULTIPLES: [(u64, u64); 4] = [(2, 3), (2, 5), (3, 4), (3, 5)];

/// A two-dimensional semigroup with two generators on each extremal ray,
/// so every `F_p` is finite.
pub fn random_finite_2d(r: &mut ChaCha8Rng, max_dir: u64, max_interior: usize) -> Semigroup {
    loop {
        let r1 = [r.gen_range(0..=max_dir), r.gen_range(0..=max_dir)];
        let r2 = [r.gen_range(0..=max_dir), r.gen_range(0..=max_dir)];
        let cross = r1[0] as i64 * r2[1] as i64 - r1[1] as i64 * r2[0] as i64;
        if cross <= 0 || gcd(r1[0], r1[1]) != 1 || gcd(r2[0], r2[1]) != 1 {
            continue;
        }
        let mut gens = Vec::new();
        for dir in [r1, r2] {
            let (a, b) = *RAY_MULTIPLES.choose(r).unwrap();
            gens.push(Point::new(vec![a * dir[0], a * dir[1]]));
            gens.push(Point::new(vec![b * dir[0], b * dir[1]]));
        }
        for _ in 0..r.gen_range(0..=max_interior) {
            let p = [r.gen_range(1..=4u64), r.gen_range(1..=4u64)];
            let c1 = r1[0] as i64 * p[1] as i64 - r1[1] as i64 * p[0] as i64;
            let c2 = p[0] as i64 * r2[1] as i64 - p[1] as i64 * r2[0] as i64;
            if c1 > 0 && c2 > 0 {
                gens.push(Point::new(p.to_vec()));
            }
        }
        let s = Semigroup::minimalize(gens).unwrap();
        if is_fp_finite(&s).unwrap() {
            return s;
        }
    }
}

/// Arbitrary semigroup in `ℕ^q`, finite `F_p` or not.
pub fn random_any(r: &mut ChaCha8Rng, q: usize, max_h: usize, max_coord: u64) -> Semigroup {
    loop {
        let h = r.gen_range(1..=max_h);
        let gens: Vec<Point> = (0..h)
            .map(|_| Point::new((0..q).map(|_| r.gen_range(0..=max_coord)).collect()))
            .filter(|g: &Point| !g.is_zero())
            .collect();
        if !gens.is_empty() {
            return Semigroup::minimalize(gens).unwrap();
        }
    }
}

/// A random element of `S` built from `2..=max_terms` generators.
pub fn random_element(r: &mut ChaCha8Rng, s: &Semigroup, max_terms: u64) -> Point {
    let h = s.num_generators();
    let mut lambda = vec![0u64; h];
    for _ in 0..r.gen_range(2..=max_terms) {
        lambda[r.gen_range(0..h)] += 1;
    }
    s.s_degree(&lambda).unwrap()
}

/// A valid gluing datum `γ` for `d`, if one is found in a few tries.
pub fn random_gluing(r: &mut ChaCha8Rng, s: &Semigroup, d: u64) -> Option<GluingSpec> {
    for _ in 0..200 {
        let spec = GluingSpec::new(d, random_element(r, s, 4));
        if glue(s, &spec).is_ok() {
            return Some(spec);
        }
    }
    None
}
