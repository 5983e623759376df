use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::field::FieldScalar;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::registry::Registry;
use crate::error::{Error, Result};

/// A sparse polynomial over a registry. No zero coefficients are stored.
#[derive(Clone)]
pub struct Polynomial {
    registry: Arc<Registry>,
    terms: BTreeMap<Monomial, FieldScalar>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        Registry::same(&self.registry, &other.registry) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn zero(registry: &Arc<Registry>) -> Self {
        Polynomial {
            registry: registry.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(registry: &Arc<Registry>) -> Self {
        Self::constant(registry, registry.field().one())
    }

    pub fn constant(registry: &Arc<Registry>, c: FieldScalar) -> Self {
        Self::monomial(registry, Monomial::one(registry.nvars()), c)
    }

    pub fn from_i64(registry: &Arc<Registry>, n: i64) -> Self {
        Self::constant(registry, registry.field().from_i64(n))
    }

    pub fn monomial(registry: &Arc<Registry>, m: Monomial, c: FieldScalar) -> Self {
        debug_assert_eq!(m.nvars(), registry.nvars());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            registry: registry.clone(),
            terms,
        }
    }

    pub fn var(registry: &Arc<Registry>, index: usize) -> Self {
        let m = Monomial::var(registry.nvars(), index, 1);
        Self::monomial(registry, m, registry.field().one())
    }

    pub fn var_named(registry: &Arc<Registry>, name: &str) -> Result<Self> {
        registry
            .index_of(name)
            .map(|i| Self::var(registry, i))
            .ok_or_else(|| Error::Input(format!("unknown variable `{name}`")))
    }

    pub fn from_terms(registry: &Arc<Registry>, terms: impl IntoIterator<Item = (Monomial, FieldScalar)>) -> Self {
        let mut p = Self::zero(registry);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn parse(registry: &Arc<Registry>, text: &str) -> Result<Self> {
        super::parse::parse_polynomial(registry, text)
    }

    pub fn registry(&self) -> &Arc<Registry> {
        &self.registry
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, FieldScalar> {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// The coefficient of `1`, zero if absent.
    pub fn constant_term(&self) -> FieldScalar {
        self.terms
            .get(&Monomial::one(self.registry.nvars()))
            .cloned()
            .unwrap_or_else(|| self.registry.field().zero())
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldScalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.registry.field().zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: FieldScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn assert_same(&self, other: &Polynomial) {
        assert!(
            Registry::same(&self.registry, &other.registry),
            "polynomial arithmetic across registries {:?} and {:?}",
            self.registry.vars(),
            other.registry.vars()
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            registry: self.registry.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.assert_same(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same(other);
        let mut out = Polynomial::zero(&self.registry);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &FieldScalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.registry);
        }
        Polynomial {
            registry: self.registry.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &FieldScalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.registry);
        }
        Polynomial {
            registry: self.registry.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.mul(c))).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.registry);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn product<'a>(registry: &Arc<Registry>, factors: impl IntoIterator<Item = &'a Polynomial>) -> Polynomial {
        factors
            .into_iter()
            .fold(Polynomial::one(registry), |acc, f| acc.mul(f))
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, FieldScalar)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.compare(&b.0, &a.0));
        v
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &FieldScalar)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Scaled so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    /// Whether any term involves a variable flagged in `mask`.
    pub fn uses_any(&self, mask: &[bool]) -> bool {
        self.terms.keys().any(|m| m.uses_any(mask))
    }

    pub fn variables_used(&self) -> Vec<usize> {
        let n = self.registry.nvars();
        (0..n)
            .filter(|&i| self.terms.keys().any(|m| m.exponents()[i] > 0))
            .collect()
    }

    /// Reinterprets `self` over `target`, which must extend its registry.
    pub fn lift_to(&self, target: &Arc<Registry>) -> Result<Polynomial> {
        if !target.extends(&self.registry) {
            return Err(Error::RegistryMismatch(format!(
                "{:?} does not extend {:?}",
                target.vars(),
                self.registry.vars()
            )));
        }
        let n = target.nvars();
        Ok(Polynomial {
            registry: target.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.extended(n), c.clone())).collect(),
        })
    }

    /// Moves variable `i` of `self` to variable `mapping[i]` of `target`.
    pub fn rename_into(&self, target: &Arc<Registry>, mapping: &[usize]) -> Polynomial {
        assert_eq!(mapping.len(), self.registry.nvars());
        assert_eq!(target.field(), self.registry.field());
        let n = target.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u16; n];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[mapping[i]] += x;
            }
            (Monomial::from_exponents(e), c.clone())
        });
        Polynomial::from_terms(target, terms)
    }

    /// Inverse of `rename_into`: variable `mapping[k]` of `self` becomes
    /// variable `k` of `target`. `None` if `self` uses any other variable.
    pub fn project(&self, target: &Arc<Registry>, mapping: &[usize]) -> Option<Polynomial> {
        let n = self.registry.nvars();
        let mut keep = vec![false; n];
        for &i in mapping {
            keep[i] = true;
        }
        let dropped: Vec<bool> = keep.iter().map(|k| !k).collect();
        if self.uses_any(&dropped) {
            return None;
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let e = mapping.iter().map(|&i| m.exponents()[i]).collect();
            (Monomial::from_exponents(e), c.clone())
        });
        Some(Polynomial::from_terms(target, terms))
    }

    /// Substitutes `images[i]` for variable `i`. All images share one registry.
    pub fn substitute(&self, images: &[Polynomial], target: &Arc<Registry>) -> Result<Polynomial> {
        if images.len() != self.registry.nvars() {
            return Err(Error::Input(format!(
                "substitution needs {} images, got {}",
                self.registry.nvars(),
                images.len()
            )));
        }
        for img in images {
            Registry::check_same(img.registry(), target)?;
        }
        if target.field() != self.registry.field() {
            return Err(Error::RegistryMismatch("coefficient fields differ".into()));
        }
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e]);
                if term.is_zero() {
                    break;
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Exact quotient `self / d`; fails if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Polynomial> {
        self.assert_same(d);
        let order = MonomialOrder::GrevLex;
        let (lm, lc) = match d.leading_term(order) {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::Input("division by zero polynomial".into())),
        };
        let lc_inv = lc.inv();
        let mut rem = self.clone();
        let mut q = Polynomial::zero(&self.registry);
        while let Some((m, c)) = rem.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divides(&m) {
                return Err(Error::Input(format!("{d} does not divide {self}")));
            }
            let qm = lm.quotient_of(&m);
            let qc = c.mul(&lc_inv);
            rem = rem.sub(&d.mul_monomial(&qm, &qc));
            q.add_term(qm, qc);
        }
        Ok(q)
    }

    fn fmt_monomial(&self, m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.registry.vars()[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms(MonomialOrder::GrevLex).iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                self.fmt_monomial(m, f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    fn reg() -> Arc<Registry> {
        Registry::new(Field::Rational, ["x", "y", "z"]).unwrap()
    }

    #[test]
    fn display_orders_terms_by_grevlex() {
        let r = reg();
        let p = Polynomial::parse(&r, "1 - z + 3/2*x^2*y").unwrap();
        assert_eq!(p.to_string(), "3/2*x^2*y - z + 1");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        assert_eq!(Polynomial::parse(&r, "-x").unwrap().to_string(), "-x");
    }

    #[test]
    fn substitution_composes() {
        let r = reg();
        let p = Polynomial::parse(&r, "x^2 - y").unwrap();
        let imgs = vec![
            Polynomial::parse(&r, "y + 1").unwrap(),
            Polynomial::parse(&r, "z").unwrap(),
            Polynomial::parse(&r, "z").unwrap(),
        ];
        let q = p.substitute(&imgs, &r).unwrap();
        assert_eq!(q, Polynomial::parse(&r, "y^2 + 2*y + 1 - z").unwrap());
    }

    #[test]
    fn exact_division() {
        let r = reg();
        let a = Polynomial::parse(&r, "x^2 - y^2").unwrap();
        let b = Polynomial::parse(&r, "x - y").unwrap();
        assert_eq!(a.div_exact(&b).unwrap(), Polynomial::parse(&r, "x + y").unwrap());
        assert!(Polynomial::parse(&r, "x + 1").unwrap().div_exact(&b).is_err());
    }

    #[test]
    fn prime_field_printing_has_no_minus() {
        let r = Registry::new(Field::prime(5).unwrap(), ["x"]).unwrap();
        let p = Polynomial::parse(&r, "x - 1").unwrap();
        assert_eq!(p.to_string(), "x + 4");
    }
}
