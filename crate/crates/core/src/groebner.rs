//! A Buchberger engine specialised to pure binomials `X^u - X^v`.
//!
//! S-polynomials of binomials are binomials (or zero), and reducing a
//! binomial by binomials reduces each of its two monomials independently,
//! so the engine only ever manipulates pairs of exponent vectors.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{ExpVec, OrderSpec, Point, Semigroup};

/// A monomial order on exponent vectors of a fixed length.
pub trait TermOrder: Sync {
    fn cmp(&self, a: &[u64], b: &[u64]) -> Ordering;
}

/// Plain graded order on the exponent vectors themselves.
impl TermOrder for OrderSpec {
    fn cmp(&self, a: &[u64], b: &[u64]) -> Ordering {
        OrderSpec::cmp(self, a, b)
    }
}

/// The order on `ℕ^h` induced by a graded order on `ℕ^q` through the
/// S-degree: monomials are compared by their S-degrees first, and monomials
/// of equal S-degree by lex (grlex) or reverse lex (grevlex) in the variable
/// order `x_1 > ... > x_h`.
#[derive(Debug, Clone)]
pub struct SDegreeOrder {
    order: OrderSpec,
    generators: Vec<Point>,
    dim: usize,
}

impl SDegreeOrder {
    pub fn new(s: &Semigroup, order: OrderSpec) -> Self {
        SDegreeOrder { order, generators: s.generators().to_vec(), dim: s.dim() }
    }

    fn degree(&self, a: &[u64]) -> Vec<u128> {
        let mut out = vec![0u128; self.dim];
        for (g, &e) in self.generators.iter().zip(a) {
            if e == 0 {
                continue;
            }
            for (o, &c) in out.iter_mut().zip(g.iter()) {
                *o += c as u128 * e as u128;
            }
        }
        out
    }
}

impl TermOrder for SDegreeOrder {
    fn cmp(&self, a: &[u64], b: &[u64]) -> Ordering {
        let (da, db) = (self.degree(a), self.degree(b));
        let (sa, sb): (u128, u128) = (da.iter().sum(), db.iter().sum());
        sa.cmp(&sb)
            .then_with(|| match self.order.kind {
                crate::semigroup::OrderKind::GradedLex => da.cmp(&db),
                crate::semigroup::OrderKind::GradedRevLex => da
                    .iter()
                    .rev()
                    .zip(db.iter().rev())
                    .find(|(x, y)| x != y)
                    .map_or(Ordering::Equal, |(x, y)| y.cmp(x)),
            })
            .then_with(|| self.order.tie_break(a, b))
    }
}

/// Block order with the variables from index `split` on (the `t` block)
/// dominating the first `split` variables; grlex inside each block.
#[derive(Debug, Clone, Copy)]
pub struct EliminationOrder {
    pub split: usize,
}

impl TermOrder for EliminationOrder {
    fn cmp(&self, a: &[u64], b: &[u64]) -> Ordering {
        let (ax, at) = a.split_at(self.split);
        let (bx, bt) = b.split_at(self.split);
        OrderSpec::GRLEX.cmp(at, bt).then_with(|| OrderSpec::GRLEX.cmp(ax, bx))
    }
}

/// `X^lead - X^trail` with `lead` greater than `trail` under the order it
/// was built for.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Binomial {
    pub lead: ExpVec,
    pub trail: ExpVec,
}

impl Binomial {
    /// Orients `a - b` under `order`; `None` if `a == b`.
    pub fn oriented(a: ExpVec, b: ExpVec, order: &dyn TermOrder) -> Option<Binomial> {
        match order.cmp(&a, &b) {
            Ordering::Greater => Some(Binomial { lead: a, trail: b }),
            Ordering::Less => Some(Binomial { lead: b, trail: a }),
            Ordering::Equal => None,
        }
    }

    pub fn is_homogeneous(&self, s: &Semigroup) -> Result<bool> {
        Ok(s.s_degree(&self.lead)? == s.s_degree(&self.trail)?)
    }

    pub fn monomials(&self) -> [&ExpVec; 2] {
        [&self.lead, &self.trail]
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &[u64]) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        write!(f, "1")?;
    }
    Ok(())
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, &self.lead)?;
        write!(f, " - ")?;
        write_monomial(f, &self.trail)
    }
}

fn divides(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn coprime(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

fn lcm(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

/// `m - lead + trail`, assuming `lead | m`.
fn rewrite(m: &[u64], lead: &[u64], trail: &[u64]) -> Result<Vec<u64>> {
    m.iter()
        .zip(lead)
        .zip(trail)
        .map(|((&x, &l), &t)| (x - l).checked_add(t).ok_or(Error::Overflow("monomial rewrite")))
        .collect()
}

/// Rewrites `m` with the first applicable rule until no lead divides it.
fn reduce_monomial(m: &[u64], rules: &[Binomial]) -> Result<Vec<u64>> {
    let mut m = m.to_vec();
    while let Some(r) = rules.iter().find(|r| divides(&r.lead, &m)) {
        m = rewrite(&m, &r.lead, &r.trail)?;
    }
    Ok(m)
}

/// A critical pair keyed by the lcm of its leading terms. The heap pops the
/// smallest lcm first, ties broken by index.
struct Pair<'a> {
    lcm: Vec<u64>,
    i: usize,
    j: usize,
    order: &'a (dyn TermOrder + 'a),
}

impl PartialEq for Pair<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Pair<'_> {}

impl PartialOrd for Pair<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pair<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.lcm, &self.lcm)
            .then((other.j, other.i).cmp(&(self.j, self.i)))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
///
/// Pairs are processed by the normal selection strategy, with Buchberger's
/// coprime criterion and the chain criterion. Elements whose leading term
/// becomes divisible by a newer one stop acting as reducers.
pub fn buchberger_reduced<'o>(gens: &[Binomial], order: &'o dyn TermOrder) -> Result<Vec<Binomial>> {
    let mut basis: Vec<Binomial> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut queue: BinaryHeap<Pair<'o>> = BinaryHeap::new();
    // true while the pair waits in the queue, false once it was handled
    let mut pending: HashMap<(usize, usize), bool> = HashMap::new();

    let insert = |b: Binomial,
                  basis: &mut Vec<Binomial>,
                  active: &mut Vec<bool>,
                  queue: &mut BinaryHeap<Pair<'o>>,
                  pending: &mut HashMap<(usize, usize), bool>| {
        let j = basis.len();
        for i in 0..j {
            if !active[i] {
                continue;
            }
            if divides(&b.lead, &basis[i].lead) {
                active[i] = false;
            }
            queue.push(Pair { lcm: lcm(&basis[i].lead, &b.lead), i, j, order });
            pending.insert((i, j), true);
        }
        basis.push(b);
        active.push(true);
    };

    let reducers = |basis: &[Binomial], active: &[bool], m: &[u64]| -> Result<Vec<u64>> {
        let mut m = m.to_vec();
        while let Some(r) = basis
            .iter()
            .zip(active)
            .find(|(r, &a)| a && divides(&r.lead, &m))
            .map(|(r, _)| r)
        {
            m = rewrite(&m, &r.lead, &r.trail)?;
        }
        Ok(m)
    };

    for g in gens {
        let a = reducers(&basis, &active, &g.lead)?;
        let b = reducers(&basis, &active, &g.trail)?;
        if let Some(bin) = Binomial::oriented(a.into(), b.into(), order) {
            insert(bin, &mut basis, &mut active, &mut queue, &mut pending);
        }
    }

    while let Some(Pair { lcm: l, i, j, .. }) = queue.pop() {
        pending.insert((i, j), false);
        let (bi, bj) = (&basis[i], &basis[j]);
        if coprime(&bi.lead, &bj.lead) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(&basis[k].lead, &l)
                && pending.get(&(i.min(k), i.max(k))) == Some(&false)
                && pending.get(&(j.min(k), j.max(k))) == Some(&false)
        });
        if chain {
            continue;
        }
        let a = rewrite(&l, &bi.lead, &bi.trail)?;
        let b = rewrite(&l, &bj.lead, &bj.trail)?;
        let a = reducers(&basis, &active, &a)?;
        let b = reducers(&basis, &active, &b)?;
        if let Some(bin) = Binomial::oriented(a.into(), b.into(), order) {
            insert(bin, &mut basis, &mut active, &mut queue, &mut pending);
        }
    }

    let kept = basis.into_iter().zip(active).filter(|(_, a)| *a).map(|(b, _)| b).collect();
    interreduce(kept, order)
}

fn interreduce(mut basis: Vec<Binomial>, order: &dyn TermOrder) -> Result<Vec<Binomial>> {
    basis.sort_by(|a, b| order.cmp(&a.lead, &b.lead).then_with(|| order.cmp(&a.trail, &b.trail)));
    basis.dedup_by(|a, b| a.lead == b.lead);
    // drop elements whose lead is a proper multiple of another lead
    let minimal: Vec<Binomial> = basis
        .iter()
        .filter(|g| !basis.iter().any(|o| o.lead != g.lead && divides(&o.lead, &g.lead)))
        .cloned()
        .collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for g in &minimal {
        let trail = reduce_monomial(&g.trail, &minimal)?;
        debug_assert_eq!(order.cmp(&g.lead, &trail), Ordering::Greater);
        reduced.push(Binomial { lead: g.lead.clone(), trail: trail.into() });
    }
    Ok(reduced)
}

/// Generators of the semigroup ideal `I_S`, obtained by eliminating the
/// auxiliary variables `t_1, ..., t_q` from `⟨x_i - t^{a_i}⟩`.
pub fn toric_ideal_generators(s: &Semigroup) -> Result<Vec<Binomial>> {
    let h = s.num_generators();
    let q = s.dim();
    let order = EliminationOrder { split: h };
    let graph: Vec<Binomial> = s
        .generators()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let mut x = vec![0u64; h + q];
            x[i] = 1;
            let mut t = vec![0u64; h];
            t.extend_from_slice(a);
            Binomial::oriented(x.into(), t.into(), &order).expect("distinct monomials")
        })
        .collect();
    let basis = buchberger_reduced(&graph, &order)?;
    Ok(basis
        .into_iter()
        .filter(|b| b.lead[h..].iter().all(|&e| e == 0) && b.trail[h..].iter().all(|&e| e == 0))
        .map(|b| Binomial {
            lead: b.lead[..h].to_vec().into(),
            trail: b.trail[..h].to_vec().into(),
        })
        .collect())
}

/// The reduced Gröbner basis of `I_S` for a graded order, taken on
/// exponent vectors through the S-degree (see [`SDegreeOrder`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: OrderSpec,
    elements: Vec<Binomial>,
}

impl GroebnerBasis {
    pub fn of_semigroup(s: &Semigroup, order: OrderSpec) -> Result<Self> {
        let gens = toric_ideal_generators(s)?;
        let term_order = SDegreeOrder::new(s, order);
        let elements = buchberger_reduced(&gens, &term_order)?;
        Ok(GroebnerBasis { order, elements })
    }

    /// Wraps elements already known to form a reduced basis.
    pub fn from_reduced(order: OrderSpec, elements: Vec<Binomial>) -> Self {
        GroebnerBasis { order, elements }
    }

    pub fn order(&self) -> OrderSpec {
        self.order
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reducible(&self, m: &[u64]) -> bool {
        self.elements.iter().any(|g| divides(&g.lead, m))
    }

    /// True if some trailing monomial divides `m`.
    pub fn in_trail_ideal(&self, m: &[u64]) -> bool {
        self.elements.iter().any(|g| divides(&g.trail, m))
    }

    pub fn normal_form(&self, m: &[u64]) -> Result<ExpVec> {
        reduce_monomial(m, &self.elements).map(ExpVec::from)
    }
}

pub fn normal_form(m: &[u64], g: &GroebnerBasis) -> Result<ExpVec> {
    g.normal_form(m)
}
