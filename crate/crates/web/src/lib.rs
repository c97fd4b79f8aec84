//! WebAssembly bindings for the demo page in `www/`. Every export takes
//! plain strings and returns a JSON document, `{"error": {...}}` on failure.

use frobvec::factorization::factorizations;
use frobvec::frobenius::{compute, Algorithm};
use frobvec::gluing::{fp_glued_bound, glue, gluing_equality, GluingSpec};
use frobvec::io::semigroup_to_value;
use frobvec::oracle::{oracle_counts_up_to, Budget};
use frobvec::{Error, OrderSpec, Point, Semigroup};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest heatmap side the page may request.
const MAX_EXTENT: u64 = 120;

fn parse_point(text: &str) -> Result<Point, Error> {
    text.split(',')
        .map(|c| {
            c.trim()
                .parse::<u64>()
                .map_err(|_| Error::Validation(format!("'{text}' is not a list of non-negative integers")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Point::new)
}

fn parse_semigroup(text: &str) -> Result<(Semigroup, bool), Error> {
    let gens = text
        .split(';')
        .filter(|g| !g.trim().is_empty())
        .map(parse_point)
        .collect::<Result<Vec<_>, _>>()?;
    let n = gens.len();
    let s = Semigroup::minimalize(gens)?;
    let changed = s.num_generators() != n;
    Ok((s, changed))
}

fn respond(r: Result<Value, Error>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": { "code": e.code(), "message": e.to_string() } }).to_string(),
    }
}

fn explore_value(generators: &str, p: u32, order: &str, extent: u32) -> Result<Value, Error> {
    let (s, minimalized) = parse_semigroup(generators)?;
    let order: OrderSpec = order.parse()?;
    if s.dim() > 2 {
        return Err(Error::Unsupported("the heatmap shows q = 1 or q = 2".into()));
    }
    let extent = (extent as u64).min(MAX_EXTENT);
    let algorithm = if p == 0 { Algorithm::Numerical } else { Algorithm::General };
    let report = compute(&s, p as u64, order, algorithm)?;
    let counts = oracle_counts_up_to(&s, extent * s.dim() as u64, Budget::default())?;
    let width = extent as usize + 1;
    let rows = if s.dim() == 1 { 1 } else { width };
    let mut grid = vec![vec![0u64; width]; rows];
    for (n, c) in counts {
        let (x, y) = if s.dim() == 1 { (n[0], 0) } else { (n[0], n[1]) };
        if x <= extent && y <= extent {
            grid[y as usize][x as usize] = c.min(u64::MAX as u128) as u64;
        }
    }
    Ok(json!({
        "semigroup": semigroup_to_value(&s, order),
        "minimalized": minimalized,
        "report": report,
        "grid": grid,
    }))
}

/// `F_p(S)` together with the factorization counts of every point of
/// `[0, extent]^q`, for drawing.
#[wasm_bindgen]
pub fn explore(generators: &str, p: u32, order: &str, extent: u32) -> String {
    respond(explore_value(generators, p, order, extent))
}

fn factorize_value(generators: &str, element: &str, order: &str) -> Result<Value, Error> {
    let (s, _) = parse_semigroup(generators)?;
    let order: OrderSpec = order.parse()?;
    let n = parse_point(element)?;
    if n.len() != s.dim() {
        return Err(Error::LengthMismatch { expected: s.dim(), found: n.len() });
    }
    let mut z = factorizations(&s, &n);
    z.sort_desc(order);
    Ok(json!({ "element": n, "count": z.len(), "factorizations": z.factorizations }))
}

#[wasm_bindgen]
pub fn factorize(generators: &str, element: &str, order: &str) -> String {
    respond(factorize_value(generators, element, order))
}

fn glue_value(generators: &str, d: u32, gamma: &str, p: u32, order: &str) -> Result<Value, Error> {
    let (s, _) = parse_semigroup(generators)?;
    let order: OrderSpec = order.parse()?;
    let spec = GluingSpec::new(d as u64, parse_point(gamma)?);
    let glued = glue(&s, &spec)?;
    let bound = fp_glued_bound(&s, p as u64, &spec, order)?;
    let verdict = if p >= 1 { Some(gluing_equality(&s, p as u64, &spec, order)?) } else { None };
    Ok(json!({ "glued": semigroup_to_value(&glued, order), "bound": bound, "verdict": verdict }))
}

#[wasm_bindgen]
pub fn glue_semigroups(generators: &str, d: u32, gamma: &str, p: u32, order: &str) -> String {
    respond(glue_value(generators, d, gamma, p, order))
}
