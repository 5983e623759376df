//! Buchberger's algorithm with the Gebauer–Möller pair criteria.
//!
//! Polynomials are handled internally as term vectors sorted ascending under
//! the active order, so the leading term is the last entry.

use std::cmp::Ordering;
use std::sync::Arc;

use super::field::FieldScalar;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use super::registry::Registry;
use crate::error::{Error, Result};

type Terms = Vec<(Monomial, FieldScalar)>;

fn to_terms(p: &Polynomial, order: MonomialOrder) -> Terms {
    let mut t = p.sorted_terms(order);
    t.reverse();
    t
}

fn from_terms(reg: &Arc<Registry>, t: Terms) -> Polynomial {
    Polynomial::from_terms(reg, t)
}

/// `a - c * m * b`, both inputs ascending.
fn sub_scaled(a: &[(Monomial, FieldScalar)], b: &[(Monomial, FieldScalar)], m: &Monomial, c: &FieldScalar, order: MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let shifted: Vec<(Monomial, FieldScalar)> = b.iter().map(|(bm, bc)| (bm.mul(m), bc.mul(c))).collect();
    while i < a.len() && j < shifted.len() {
        match order.compare(&a[i].0, &shifted[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((shifted[j].0.clone(), shifted[j].1.neg()));
                j += 1;
            }
            Ordering::Equal => {
                let s = a[i].1.sub(&shifted[j].1);
                if !s.is_zero() {
                    out.push((a[i].0.clone(), s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(shifted[j..].iter().map(|(m, c)| (m.clone(), c.neg())));
    out
}

fn scale_terms(t: &mut Terms, c: &FieldScalar) {
    for (_, a) in t.iter_mut() {
        *a = a.mul(c);
    }
}

struct Entry {
    terms: Terms,
    lm: Monomial,
    /// Degree the element would have with homogenized inputs.
    sugar: u32,
    /// Multiplier of the tracked generator, when tracking.
    cof: Option<Polynomial>,
}

impl Entry {
    fn new(mut terms: Terms, mut cof: Option<Polynomial>, sugar: Option<u32>) -> Entry {
        let lc_inv = terms.last().expect("nonzero").1.inv();
        if !lc_inv.is_one() {
            scale_terms(&mut terms, &lc_inv);
            cof = cof.map(|c| c.scale(&lc_inv));
        }
        let lm = terms.last().unwrap().0.clone();
        let sugar = sugar.unwrap_or_else(|| terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0));
        Entry { terms, lm, sugar, cof }
    }
}

/// Fully reduces `p` by the monic entries listed in `active`.
fn reduce(
    mut p: Terms,
    mut cof: Option<Polynomial>,
    entries: &[Entry],
    active: &[usize],
    order: MonomialOrder,
) -> (Terms, Option<Polynomial>) {
    let mut rem: Terms = Vec::new();
    while let Some((m, c)) = p.last().cloned() {
        let div = active.iter().find(|&&k| entries[k].lm.divides(&m));
        match div {
            Some(&k) => {
                let e = &entries[k];
                let q = e.lm.quotient_of(&m);
                p = sub_scaled(&p, &e.terms, &q, &c, order);
                if let (Some(cf), Some(ecf)) = (cof.as_mut(), e.cof.as_ref()) {
                    *cf = cf.sub(&ecf.mul_monomial(&q, &c));
                }
            }
            None => {
                p.pop();
                rem.push((m, c));
            }
        }
    }
    rem.reverse();
    (rem, cof)
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine<'a> {
    order: MonomialOrder,
    reg: &'a Arc<Registry>,
    entries: Vec<Entry>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl Engine<'_> {
    fn update(&mut self, h: Entry) {
        let hk = self.entries.len();
        let t = h.lm.clone();
        self.entries.push(h);
        let entries = &self.entries;

        let mut c: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| {
                let lcm = entries[g].lm.lcm(&t);
                let d = lcm.degree();
                let sugar = (entries[g].sugar + d - entries[g].lm.degree()).max(entries[hk].sugar + d - t.degree());
                Pair { i: g, j: hk, lcm, sugar }
            })
            .collect();
        let mut d: Vec<Pair> = Vec::new();
        while !c.is_empty() {
            let p = c.remove(0);
            let disjoint = entries[p.i].lm.coprime(&t);
            let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
            if disjoint || !dominated {
                d.push(p);
            }
        }
        let e: Vec<Pair> = d.into_iter().filter(|p| !entries[p.i].lm.coprime(&t)).collect();

        self.pairs.retain(|p| {
            !t.divides(&p.lcm) || entries[p.i].lm.lcm(&t) == p.lcm || entries[p.j].lm.lcm(&t) == p.lcm
        });
        self.pairs.extend(e);
        self.active.retain(|&g| !t.divides(&entries[g].lm));
        self.active.push(hk);
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| order.compare(&a.lcm, &b.lcm))
                    .then((a.j, a.i).cmp(&(b.j, b.i)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> (Terms, Option<Polynomial>) {
        let (a, b) = (&self.entries[p.i], &self.entries[p.j]);
        let ma = a.lm.quotient_of(&p.lcm);
        let mb = b.lm.quotient_of(&p.lcm);
        let one = self.reg.field().one();
        let left = sub_scaled(&[], &a.terms, &ma, &one.neg(), self.order);
        let s = sub_scaled(&left, &b.terms, &mb, &one, self.order);
        let cof = match (&a.cof, &b.cof) {
            (Some(ca), Some(cb)) => Some(ca.mul_monomial(&ma, &one).sub(&cb.mul_monomial(&mb, &one))),
            _ => None,
        };
        (s, cof)
    }

    fn run(&mut self) -> Result<()> {
        let limits = self.reg.limits();
        let mut processed = 0usize;
        while let Some(p) = self.select() {
            if p.lcm.degree() > limits.degree_cap {
                return Err(Error::ResourceLimit(format!(
                    "S-pair of degree {} exceeds the degree cap {}",
                    p.lcm.degree(),
                    limits.degree_cap
                )));
            }
            processed += 1;
            if processed > limits.pair_cap {
                return Err(Error::ResourceLimit(format!(
                    "more than {} S-pairs processed",
                    limits.pair_cap
                )));
            }
            let (s, cof) = self.spoly(&p);
            let (h, cof) = reduce(s, cof, &self.entries, &self.active, self.order);
            if !h.is_empty() {
                let unit = h.last().unwrap().0.is_one();
                self.update(Entry::new(h, cof, Some(p.sugar)));
                if unit {
                    // everything reduces to zero against a constant
                    self.pairs.clear();
                }
            }
        }
        Ok(())
    }
}

fn check_registries(reg: &Arc<Registry>, polys: &[Polynomial]) -> Result<()> {
    for p in polys {
        Registry::check_same(reg, p.registry())?;
    }
    Ok(())
}

fn engine<'a>(
    reg: &'a Arc<Registry>,
    gens: &[Polynomial],
    order: MonomialOrder,
    tracked: Option<usize>,
) -> Result<Engine<'a>> {
    engine_from(reg, &[], gens, order, tracked)
}

/// `known` must be a reduced Gröbner basis under `order`; its pairs are
/// never formed.
fn engine_from<'a>(
    reg: &'a Arc<Registry>,
    known: &[Polynomial],
    gens: &[Polynomial],
    order: MonomialOrder,
    tracked: Option<usize>,
) -> Result<Engine<'a>> {
    check_registries(reg, known)?;
    check_registries(reg, gens)?;
    let mut eng = Engine {
        order,
        reg,
        entries: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in known.iter().filter(|g| !g.is_zero()) {
        eng.active.push(eng.entries.len());
        eng.entries.push(Entry::new(to_terms(g, order), None, None));
    }
    for (k, g) in gens.iter().enumerate() {
        let cof = tracked.map(|t| {
            if t == k {
                Polynomial::one(reg)
            } else {
                Polynomial::zero(reg)
            }
        });
        let (h, cof) = reduce(to_terms(g, order), cof, &eng.entries, &eng.active, order);
        if !h.is_empty() {
            eng.update(Entry::new(h, cof, None));
        }
    }
    eng.run()?;
    Ok(eng)
}

/// The reduced Gröbner basis of `gens`: monic, inter-reduced, sorted by
/// leading monomial from largest to smallest. The zero ideal gives `[]`.
pub fn buchberger_reduced(gens: &[Polynomial], order: MonomialOrder) -> Result<Vec<Polynomial>> {
    buchberger_extend(&[], gens, order)
}

/// The reduced Gröbner basis of `known + gens`, where `known` is already a
/// reduced Gröbner basis under `order`.
pub fn buchberger_extend(known: &[Polynomial], gens: &[Polynomial], order: MonomialOrder) -> Result<Vec<Polynomial>> {
    let Some(first) = known.first().or(gens.first()) else {
        return Ok(Vec::new());
    };
    let reg = first.registry().clone();
    let eng = engine_from(&reg, known, gens, order, None)?;
    let mut active = eng.active.clone();
    active.sort_by(|&a, &b| order.compare(&eng.entries[b].lm, &eng.entries[a].lm));
    let mut out = Vec::with_capacity(active.len());
    for (pos, &k) in active.iter().enumerate() {
        let others: Vec<usize> = active.iter().enumerate().filter(|&(q, _)| q != pos).map(|(_, &k)| k).collect();
        let mut terms = eng.entries[k].terms.clone();
        let lead = terms.pop().unwrap();
        let (tail, _) = reduce(terms, None, &eng.entries, &others, order);
        let mut full = tail;
        full.push(lead);
        out.push(from_terms(&reg, full));
    }
    Ok(out)
}

/// Multivariate division remainder of `f` by `basis`, taking at each step the
/// first basis element whose leading monomial divides the current term.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Result<Polynomial> {
    let reg = f.registry().clone();
    check_registries(&reg, basis)?;
    let mut entries = Vec::with_capacity(basis.len());
    for b in basis {
        if b.is_zero() {
            return Err(Error::Input("zero polynomial in a division basis".into()));
        }
        entries.push(Entry::new(to_terms(b, order), None, None));
    }
    let active: Vec<usize> = (0..entries.len()).collect();
    let (r, _) = reduce(to_terms(f, order), None, &entries, &active, order);
    Ok(from_terms(&reg, r))
}

/// A Gröbner basis of `gens` that remembers, for each element, its multiplier
/// on `gens[tracked]` modulo the other generators.
pub(crate) struct TrackedBasis {
    reg: Arc<Registry>,
    order: MonomialOrder,
    entries: Vec<Entry>,
    active: Vec<usize>,
}

impl TrackedBasis {
    pub(crate) fn new(gens: &[Polynomial], tracked: usize, order: MonomialOrder) -> Result<TrackedBasis> {
        let reg = gens[tracked].registry().clone();
        let eng = engine(&reg, gens, order, Some(tracked))?;
        Ok(TrackedBasis {
            reg: reg.clone(),
            order,
            active: eng.active,
            entries: eng.entries,
        })
    }

    /// Writes `f ≡ q · gens[tracked]` modulo the other generators, if `f` lies
    /// in the ideal.
    pub(crate) fn tracked_multiplier(&self, f: &Polynomial) -> Result<Option<Polynomial>> {
        Registry::check_same(&self.reg, f.registry())?;
        let (rem, cof) = reduce(
            to_terms(f, self.order),
            Some(Polynomial::zero(&self.reg)),
            &self.entries,
            &self.active,
            self.order,
        );
        if !rem.is_empty() {
            return Ok(None);
        }
        // reduction computed f - Σ c_k g_k with cofactors accumulated negatively
        Ok(cof.map(|c| c.neg()))
    }
}
