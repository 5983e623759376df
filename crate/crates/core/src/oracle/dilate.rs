use std::collections::HashMap;

use super::ring::{certify_iso, FiniteRing};
use crate::error::{Error, Result};
use crate::report::Report;

/// Centers `[M_i, a_i]` in a finite ring, each `M_i` stored as its full
/// member list.
#[derive(Clone, Debug)]
pub struct FiniteCenter {
    centers: Vec<(Vec<u16>, u16)>,
}

impl FiniteCenter {
    /// Builds each `M_i` as the ideal generated by the given elements.
    pub fn generated(ring: &FiniteRing, spec: &[(&[u16], u16)]) -> FiniteCenter {
        FiniteCenter {
            centers: spec.iter().map(|(g, a)| (ring.ideal(g), *a)).collect(),
        }
    }

    /// Takes explicit member lists and rejects any that is not an ideal.
    pub fn from_ideals(ring: &FiniteRing, centers: Vec<(Vec<u16>, u16)>) -> Result<FiniteCenter> {
        let mut out = Vec::with_capacity(centers.len());
        for (i, (mut m, a)) in centers.into_iter().enumerate() {
            m.sort_unstable();
            m.dedup();
            if !ring.is_ideal(&m) {
                return Err(Error::Precondition(format!("M_{} is not an ideal of {}", i + 1, ring.name())));
            }
            out.push((m, a));
        }
        Ok(FiniteCenter { centers: out })
    }

    pub fn empty() -> FiniteCenter {
        FiniteCenter { centers: vec![] }
    }

    pub fn centers(&self) -> &[(Vec<u16>, u16)] {
        &self.centers
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }

    pub fn product(&self, ring: &FiniteRing) -> u16 {
        self.centers.iter().fold(ring.one(), |acc, (_, a)| ring.mul(acc, *a))
    }

    /// `L_i = M_i + (a_i)`.
    pub fn l_ideals(&self, ring: &FiniteRing) -> Vec<Vec<u16>> {
        self.centers.iter().map(|(m, a)| ring.ideal_sum(m, &[*a])).collect()
    }
}

/// `A_f` realized as `e·A` for the idempotent `e = f^t`.
#[derive(Clone, Debug)]
pub struct Localization {
    pub ring: FiniteRing,
    /// Least `t ≥ 1` with `f^t` idempotent.
    pub t: u32,
    /// `e = f^t` in the ambient ring.
    pub e: u16,
    /// `a ↦ e·a`, ambient index to localization index.
    pub embed: Vec<u16>,
    /// Localization index to ambient index.
    pub ambient: Vec<u16>,
}

impl Localization {
    /// Inverse of the image of `a`, when `a` becomes a unit.
    pub fn inverse_of(&self, a: u16) -> Option<u16> {
        self.ring.inverse(self.embed[a as usize])
    }
}

pub fn localize_finite(a: &FiniteRing, f: u16) -> Result<Localization> {
    let mut t = 1u32;
    let mut p = f;
    while a.mul(p, p) != p {
        p = a.mul(p, f);
        t += 1;
        if t as usize > a.size() + 1 {
            return Err(Error::Precondition("no idempotent power found".into()));
        }
    }
    let e = p;
    let mut members: Vec<u16> = a.elements().map(|x| a.mul(e, x)).collect();
    members.sort_unstable();
    members.dedup();
    let (ring, ambient) = a.subring(format!("{}[1/{}]", a.name(), a.label(f)), &members, e)?;
    let mut pos = vec![0u16; a.size()];
    for (k, &m) in ambient.iter().enumerate() {
        pos[m as usize] = k as u16;
    }
    let embed = a.elements().map(|x| pos[a.mul(e, x) as usize]).collect();
    let loc = Localization {
        ring,
        t,
        e,
        embed,
        ambient,
    };
    if loc.inverse_of(f).is_none() {
        return Err(Error::Precondition(format!("{} is not invertible after localizing", a.label(f))));
    }
    Ok(loc)
}

/// What a ring generator of an oracle dilatation stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleGenerator {
    /// `ι(x)` for `x ∈ A`.
    Base(u16),
    /// `m / a_i` for `m ∈ M_i`.
    Fraction { center: usize, numerator: u16 },
}

#[derive(Clone, Debug)]
pub struct OracleDilatation {
    pub ring: FiniteRing,
    pub localization: Localization,
    /// `ι: A → A′`.
    pub structural: Vec<u16>,
    /// `A′` index to localization index.
    pub in_localization: Vec<u16>,
    /// Each generator and its element of `A′`.
    pub generators: Vec<(OracleGenerator, u16)>,
}

impl OracleDilatation {
    /// The element `m / a_center`, when `m ∈ M_center`.
    pub fn fraction(&self, center: usize, numerator: u16) -> Option<u16> {
        self.generators.iter().find_map(|(g, v)| match g {
            OracleGenerator::Fraction { center: c, numerator: m } if *c == center && *m == numerator => Some(*v),
            _ => None,
        })
    }
}

/// The subring of `A_f` generated by `A` and the fractions `m / a_i`.
pub fn dilate_oracle_subring(a: &FiniteRing, c: &FiniteCenter) -> Result<OracleDilatation> {
    let f = c.product(a);
    let loc = localize_finite(a, f)?;
    let lr = &loc.ring;
    let mut gens: Vec<(OracleGenerator, u16)> = a.elements().map(|x| (OracleGenerator::Base(x), loc.embed[x as usize])).collect();
    for (i, (m, ai)) in c.centers().iter().enumerate() {
        let inv = loc.inverse_of(*ai).expect("a_i divides f");
        for &x in m {
            gens.push((
                OracleGenerator::Fraction { center: i, numerator: x },
                lr.mul(loc.embed[x as usize], inv),
            ));
        }
    }
    let seeds: Vec<u16> = gens.iter().map(|(_, v)| *v).collect();
    let members = lr.closure(&seeds, lr.one());
    let (mut ring, in_loc) = lr.subring(format!("{}′", a.name()), &members, lr.one())?;
    let mut pos = vec![u16::MAX; lr.size()];
    for (k, &m) in in_loc.iter().enumerate() {
        pos[m as usize] = k as u16;
    }
    let generators: Vec<(OracleGenerator, u16)> = gens.into_iter().map(|(g, v)| (g, pos[v as usize])).collect();
    let structural = a.elements().map(|x| pos[loc.embed[x as usize] as usize]).collect::<Vec<u16>>();
    let mut ring_gens: Vec<u16> = generators.iter().map(|(_, v)| *v).collect();
    ring_gens.sort_unstable();
    ring_gens.dedup();
    ring.set_generators(ring_gens);
    Ok(OracleDilatation {
        ring,
        localization: loc,
        structural,
        in_localization: in_loc,
        generators,
    })
}

/// One symbol `m / a^ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symbol {
    pub numerator: u16,
    pub exponent: Vec<u32>,
}

/// The dilatation built from classes of symbols, plus its certified
/// isomorphism with the subring construction.
#[derive(Clone, Debug)]
pub struct FractionDilatation {
    pub ring: FiniteRing,
    /// A representative symbol for each element.
    pub representatives: Vec<Symbol>,
    pub t: u32,
    /// Element to subring-construction element.
    pub to_subring: Vec<u16>,
    pub subring: OracleDilatation,
    pub report: Report,
}

/// Symbols with every `ν_i ≤ t` and `m ∈ L^ν`; two symbols are equal when
/// `m·a^{β+λ} = p·a^{β+ν}` with `β = (t, …, t)`.
pub fn dilate_oracle_fractions(a: &FiniteRing, c: &FiniteCenter, cap: usize) -> Result<FractionDilatation> {
    let sub = dilate_oracle_subring(a, c)?;
    let t = sub.localization.t;
    let k = c.len();
    let grid = (t as u64 + 1).checked_pow(k as u32).unwrap_or(u64::MAX);
    if grid > cap as u64 {
        return Err(Error::SizeCap(format!("{grid} exponent vectors exceed the cap {cap}")));
    }
    let ls = c.l_ideals(a);
    let avals: Vec<u16> = c.centers().iter().map(|(_, x)| *x).collect();
    let apow = |nu: &[u32]| -> u16 { nu.iter().zip(&avals).fold(a.one(), |acc, (&n, &x)| a.mul(acc, a.pow(x, n as u64))) };
    let beta = vec![t; k];
    let big = vec![4 * t; k];
    // equal keys ⇔ equivalent symbols, for exponents up to 4t
    let key = |s: &Symbol| -> u16 {
        let rest: Vec<u32> = big.iter().zip(&s.exponent).map(|(b, n)| b - n).collect();
        a.mul(a.mul(s.numerator, apow(&beta)), apow(&rest))
    };
    let equivalent = |s: &Symbol, r: &Symbol| -> bool {
        let bl: Vec<u32> = beta.iter().zip(&r.exponent).map(|(b, l)| b + l).collect();
        let bn: Vec<u32> = beta.iter().zip(&s.exponent).map(|(b, n)| b + n).collect();
        a.mul(s.numerator, apow(&bl)) == a.mul(r.numerator, apow(&bn))
    };

    let mut reps: Vec<Symbol> = Vec::new();
    let mut by_key: HashMap<u16, u16> = HashMap::new();
    let mut nu = vec![0u32; k];
    loop {
        let mut lnu = a.ideal(&[a.one()]);
        for (l, &n) in ls.iter().zip(&nu) {
            lnu = a.ideal_product(&lnu, &a.ideal_power(l, n));
        }
        for &m in &lnu {
            let s = Symbol {
                numerator: m,
                exponent: nu.clone(),
            };
            match by_key.get(&key(&s)) {
                Some(&r) => {
                    if !equivalent(&s, &reps[r as usize]) {
                        return Err(Error::Precondition("symbol key disagrees with the equivalence".into()));
                    }
                }
                None => {
                    if reps.len() >= cap {
                        return Err(Error::SizeCap(format!("more than {cap} classes")));
                    }
                    by_key.insert(key(&s), reps.len() as u16);
                    reps.push(s);
                }
            }
        }
        let mut i = 0;
        while i < k {
            nu[i] += 1;
            if nu[i] <= t {
                break;
            }
            nu[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
    }

    let n = reps.len();
    let find = |s: &Symbol| -> Result<u16> {
        by_key
            .get(&key(s))
            .copied()
            .filter(|&r| equivalent(s, &reps[r as usize]))
            .ok_or_else(|| Error::Precondition("sum or product leaves the enumerated classes".into()))
    };
    let sum_exp = |x: &[u32], y: &[u32]| -> Vec<u32> { x.iter().zip(y).map(|(p, q)| p + q).collect() };
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    let mut neg = vec![0u16; n];
    for (i, s) in reps.iter().enumerate() {
        neg[i] = find(&Symbol {
            numerator: a.neg(s.numerator),
            exponent: s.exponent.clone(),
        })?;
        for (j, r) in reps.iter().enumerate() {
            let e = sum_exp(&s.exponent, &r.exponent);
            add[i * n + j] = find(&Symbol {
                numerator: a.add(a.mul(s.numerator, apow(&r.exponent)), a.mul(r.numerator, apow(&s.exponent))),
                exponent: e.clone(),
            })?;
            mul[i * n + j] = find(&Symbol {
                numerator: a.mul(s.numerator, r.numerator),
                exponent: e,
            })?;
        }
    }
    let zero = find(&Symbol {
        numerator: a.zero(),
        exponent: vec![0; k],
    })?;
    let one = find(&Symbol {
        numerator: a.one(),
        exponent: vec![0; k],
    })?;
    let labels: Vec<String> = reps
        .iter()
        .map(|s| {
            if s.exponent.iter().all(|&e| e == 0) {
                a.label(s.numerator).to_string()
            } else {
                let den: Vec<String> = s
                    .exponent
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| format!("a{}^{e}", i + 1))
                    .collect();
                format!("{}/{}", a.label(s.numerator), den.join("*"))
            }
        })
        .collect();
    let ring = FiniteRing::from_tables(format!("{}′ (symbols)", a.name()), add, mul, neg, zero, one, labels)?;

    // m/a^ν ↦ e·m·(e·a^ν)^{-1}
    let loc = &sub.localization;
    let mut pos = vec![u16::MAX; loc.ring.size()];
    for (k, &m) in sub.in_localization.iter().enumerate() {
        pos[m as usize] = k as u16;
    }
    let mut to_subring = Vec::with_capacity(n);
    for s in &reps {
        let inv = loc.inverse_of(apow(&s.exponent)).expect("a^ν divides a power of f");
        let v = loc.ring.mul(loc.embed[s.numerator as usize], inv);
        to_subring.push(pos[v as usize]);
    }
    let mut report = Report::new("oracle-equivalence");
    report.fact("t", t);
    report.fact("size", n);
    let cert = if to_subring.contains(&u16::MAX) {
        Err("a class lands outside the subring".to_string())
    } else {
        certify_iso(&ring, &sub.ring, &to_subring)
    };
    report.clause("fractions_iso_subring", cert.is_ok(), cert.err());
    Ok(FractionDilatation {
        ring,
        representatives: reps,
        t,
        to_subring,
        subring: sub,
        report,
    })
}

/// Exceptional-divisor identities at finite scale: each `a_i` is a
/// non-zero-divisor of `A′`, and `a^ν·A′ = L^ν·A′` for all `ν_i ≤ 2`.
pub fn exceptional_checks(a: &FiniteRing, c: &FiniteCenter, d: &OracleDilatation) -> Report {
    let mut rep = Report::new("oracle-exceptional");
    let r = &d.ring;
    let map = |x: u16| d.structural[x as usize];
    let mut nzd = true;
    for (i, (_, ai)) in c.centers().iter().enumerate() {
        if !r.is_nzd(map(*ai)) {
            rep.fail("denominators_nzd", format!("a_{} = {}", i + 1, a.label(*ai)));
            nzd = false;
            break;
        }
    }
    if nzd {
        rep.pass("denominators_nzd");
    }
    let ls = c.l_ideals(a);
    let k = c.len();
    let mut nu = vec![0u32; k];
    let mut witness = None;
    'outer: loop {
        let an = c.centers().iter().zip(&nu).fold(a.one(), |acc, ((_, x), &n)| a.mul(acc, a.pow(*x, n as u64)));
        let mut lnu = a.ideal(&[a.one()]);
        for (l, &n) in ls.iter().zip(&nu) {
            lnu = a.ideal_product(&lnu, &a.ideal_power(l, n));
        }
        let lhs = r.ideal(&[map(an)]);
        let rhs = r.ideal(&lnu.iter().map(|&x| map(x)).collect::<Vec<_>>());
        if lhs != rhs {
            witness = Some(format!("ν = {nu:?}"));
            break 'outer;
        }
        let mut i = 0;
        while i < k {
            nu[i] += 1;
            if nu[i] <= 2 {
                break;
            }
            nu[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
    }
    match witness {
        None => rep.pass("exceptional_ideal"),
        Some(w) => rep.fail("exceptional_ideal", w),
    };
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn localize_examples() {
        let z6 = FiniteRing::integers_mod(6).unwrap();
        let l = localize_finite(&z6, 2).unwrap();
        assert_eq!((l.e, l.t, l.ring.size()), (4, 2, 3));
        let id = localize_finite(&z6, 1).unwrap();
        assert_eq!(id.ring.size(), 6);
        let z4 = FiniteRing::integers_mod(4).unwrap();
        let l = localize_finite(&z4, 2).unwrap();
        assert_eq!(l.e, 0);
        assert!(l.ring.is_zero_ring());
    }

    #[test]
    fn subring_and_fractions_agree() {
        let z6 = FiniteRing::integers_mod(6).unwrap();
        let c = FiniteCenter::generated(&z6, &[(&[3], 2)]);
        let d = dilate_oracle_fractions(&z6, &c, 4096).unwrap();
        assert!(d.report.passed(), "{}", d.report);
        assert_eq!(d.ring.size(), 3);
        assert_eq!(d.subring.fraction(0, 3), Some(d.subring.ring.zero()));
        assert!(exceptional_checks(&z6, &c, &d.subring).passed());

        let full = FiniteCenter::generated(&z6, &[(&[1], 2)]);
        assert_eq!(dilate_oracle_subring(&z6, &full).unwrap().ring.size(), 3);
        let z4 = FiniteRing::integers_mod(4).unwrap();
        let nil = FiniteCenter::generated(&z4, &[(&[2], 2)]);
        assert!(dilate_oracle_fractions(&z4, &nil, 4096).unwrap().ring.is_zero_ring());
        let e = dilate_oracle_fractions(&z6, &FiniteCenter::empty(), 4096).unwrap();
        assert_eq!(e.ring.size(), 6);
    }
}
