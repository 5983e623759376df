//! Ideals with a lazily computed, shared reduced Gröbner basis.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::poly::{buchberger_extend, buchberger_reduced, normal_form, Monomial, MonomialOrder, Polynomial, Registry};

struct Inner {
    registry: Arc<Registry>,
    gens: Vec<Polynomial>,
    order: MonomialOrder,
    gb: OnceLock<Result<Vec<Polynomial>>>,
}

/// A generated ideal. Cloning is cheap and clones share the basis cache.
#[derive(Clone)]
pub struct Ideal(Arc<Inner>);

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.0.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Ideal {
    pub fn new(registry: &Arc<Registry>, gens: Vec<Polynomial>) -> Result<Ideal> {
        Self::with_order(registry, gens, MonomialOrder::GrevLex)
    }

    pub fn with_order(registry: &Arc<Registry>, gens: Vec<Polynomial>, order: MonomialOrder) -> Result<Ideal> {
        for g in &gens {
            Registry::check_same(registry, g.registry())?;
        }
        Ok(Ideal(Arc::new(Inner {
            registry: registry.clone(),
            gens,
            order,
            gb: OnceLock::new(),
        })))
    }

    pub fn parse(registry: &Arc<Registry>, gens: &[&str]) -> Result<Ideal> {
        let gens = gens
            .iter()
            .map(|s| Polynomial::parse(registry, s))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(registry, gens)
    }

    pub fn zero(registry: &Arc<Registry>) -> Ideal {
        Ideal::new(registry, Vec::new()).expect("empty generator list")
    }

    pub fn unit(registry: &Arc<Registry>) -> Ideal {
        Ideal::new(registry, vec![Polynomial::one(registry)]).expect("same registry")
    }

    pub fn principal(f: &Polynomial) -> Ideal {
        Ideal::new(f.registry(), vec![f.clone()]).expect("same registry")
    }

    pub fn registry(&self) -> &Arc<Registry> {
        &self.0.registry
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.0.gens
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    /// The reduced Gröbner basis, computed on first use.
    pub fn groebner(&self) -> Result<&[Polynomial]> {
        self.0
            .gb
            .get_or_init(|| buchberger_reduced(&self.0.gens, self.0.order))
            .as_deref()
            .map_err(Clone::clone)
    }

    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        Registry::check_same(self.registry(), f.registry())?;
        normal_form(f, self.groebner()?, self.0.order)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        Registry::check_same(self.registry(), other.registry())?;
        for g in other.gens() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality via reduced bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Registry::check_same(self.registry(), other.registry())?;
        if self.0.order == other.0.order {
            Ok(self.groebner()? == other.groebner()?)
        } else {
            Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
        }
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.first().is_some_and(Polynomial::is_constant))
    }

    pub fn is_zero_ideal(&self) -> Result<bool> {
        Ok(self.groebner()?.is_empty())
    }

    fn same_kind(&self, gens: Vec<Polynomial>) -> Ideal {
        Ideal::with_order(self.registry(), gens, self.0.order).expect("same registry")
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        Registry::check_same(self.registry(), other.registry())?;
        let mut gens = self.gens().to_vec();
        for g in other.gens() {
            if !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        Ok(self.same_kind(gens))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        Registry::check_same(self.registry(), other.registry())?;
        let mut gens: Vec<Polynomial> = Vec::new();
        for a in self.gens() {
            for b in other.gens() {
                let p = a.mul(b);
                if !p.is_zero() && !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ok(self.same_kind(gens))
    }

    /// `n`-th power; the zeroth power is the unit ideal.
    pub fn power(&self, n: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(self.registry()).with_order_of(self);
        for _ in 0..n {
            acc = acc.product(self)?;
            acc = acc.minimized()?;
        }
        Ok(acc)
    }

    fn with_order_of(&self, other: &Ideal) -> Ideal {
        Ideal::with_order(self.registry(), self.gens().to_vec(), other.0.order).expect("same registry")
    }

    /// Same ideal, generated by its reduced basis.
    pub fn minimized(&self) -> Result<Ideal> {
        Ok(self.same_kind(self.groebner()?.to_vec()))
    }

    /// Generators of `self ∩ k[vars not in eliminated]`, still over this registry.
    pub fn eliminate(&self, eliminated: &[usize]) -> Result<Ideal> {
        let reg = self.registry();
        let n = reg.nvars();
        let mut mask = vec![false; n];
        for &v in eliminated {
            if v >= n {
                return Err(Error::Input(format!("variable index {v} out of range")));
            }
            mask[v] = true;
        }
        let k = mask.iter().filter(|&&m| m).count();
        if k == 0 {
            return Ok(self.clone());
        }
        // move the eliminated variables to the front
        let perm: Vec<usize> = (0..n).filter(|&i| mask[i]).chain((0..n).filter(|&i| !mask[i])).collect();
        let mut inverse = vec![0; n];
        for (pos, &i) in perm.iter().enumerate() {
            inverse[i] = pos;
        }
        let names: Vec<String> = perm.iter().map(|&i| reg.vars()[i].clone()).collect();
        let preg = Registry::with_limits(reg.field(), names, reg.limits())?;
        let gens: Vec<Polynomial> = self.gens().iter().map(|g| g.rename_into(&preg, &inverse)).collect();
        let gb = buchberger_reduced(&gens, MonomialOrder::Block { eliminated: k })?;
        let front: Vec<bool> = (0..n).map(|i| i < k).collect();
        let kept: Vec<Polynomial> = gb
            .into_iter()
            .filter(|g| !g.uses_any(&front))
            .map(|g| g.rename_into(reg, &perm))
            .collect();
        Ok(self.same_kind(kept))
    }

    pub fn eliminate_named(&self, names: &[&str]) -> Result<Ideal> {
        let idx = names
            .iter()
            .map(|n| {
                self.registry()
                    .index_of(n)
                    .ok_or_else(|| Error::Input(format!("unknown variable `{n}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.eliminate(&idx)
    }

    /// Moves the ideal into a registry extended by fresh variables.
    fn lifted(&self, extra: &[&str]) -> Result<(Arc<Registry>, Vec<Polynomial>)> {
        let ext = self.registry().extend(extra.iter().copied());
        let gens = self.gens().iter().map(|g| g.lift_to(&ext)).collect::<Result<Vec<_>>>()?;
        Ok((ext, gens))
    }

    /// Contracts an ideal over an extension whose extra variables no longer occur.
    fn contract(&self, ext_gens: Vec<Polynomial>) -> Ideal {
        let reg = self.registry();
        let n = reg.nvars();
        let gens = ext_gens
            .into_iter()
            .map(|g| {
                let terms = g.terms().iter().map(|(m, c)| {
                    debug_assert!(m.exponents()[n..].iter().all(|&e| e == 0));
                    (Monomial::from_exponents(m.exponents()[..n].to_vec()), c.clone())
                });
                Polynomial::from_terms(reg, terms)
            })
            .collect();
        self.same_kind(gens)
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        Registry::check_same(self.registry(), other.registry())?;
        let (ext, a) = self.lifted(&["tag"])?;
        let b = other.gens().iter().map(|g| g.lift_to(&ext)).collect::<Result<Vec<_>>>()?;
        let t = Polynomial::var(&ext, ext.nvars() - 1);
        let one_minus_t = Polynomial::one(&ext).sub(&t);
        let mut gens: Vec<Polynomial> = a.iter().map(|g| g.mul(&t)).collect();
        gens.extend(b.iter().map(|g| g.mul(&one_minus_t)));
        let big = Ideal::new(&ext, gens)?.eliminate(&[ext.nvars() - 1])?;
        Ok(self.contract(big.gens().to_vec()))
    }

    /// `self : f`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        Registry::check_same(self.registry(), f.registry())?;
        if f.is_zero() {
            return Err(Error::Precondition("colon by the zero polynomial".into()));
        }
        let meet = self.intersect(&Ideal::principal(f))?;
        let gens = meet.gens().iter().map(|g| g.div_exact(f)).collect::<Result<Vec<_>>>()?;
        Ok(self.same_kind(gens))
    }

    /// Reduced basis of `self + (1 − z·f)` in `k[z, vars]` under the block
    /// order eliminating `z`. A cached grevlex basis of `self` is already a
    /// basis for that order, so then only pairs with the new generator are
    /// formed.
    fn rabinowitsch(&self, f: &Polynomial) -> Result<(Arc<Registry>, Vec<Polynomial>)> {
        let reg = self.registry();
        let n = reg.nvars();
        let mut z_name = "sat".to_string();
        while reg.vars().contains(&z_name) {
            z_name.push('_');
        }
        let names: Vec<String> = std::iter::once(z_name).chain(reg.vars().iter().cloned()).collect();
        let zreg = Registry::with_limits(reg.field(), names, reg.limits())?;
        let shift: Vec<usize> = (1..=n).collect();
        let z = Polynomial::var(&zreg, 0);
        let extra = Polynomial::one(&zreg).sub(&z.mul(&f.rename_into(&zreg, &shift)));
        let order = MonomialOrder::Block { eliminated: 1 };
        let cached = matches!(self.0.gb.get(), Some(Ok(_)));
        let gb = if self.0.order == MonomialOrder::GrevLex && cached {
            let known: Vec<Polynomial> = self.groebner()?.iter().map(|g| g.rename_into(&zreg, &shift)).collect();
            buchberger_extend(&known, &[extra], order)?
        } else {
            let mut gens: Vec<Polynomial> = self.gens().iter().map(|g| g.rename_into(&zreg, &shift)).collect();
            gens.push(extra);
            buchberger_reduced(&gens, order)?
        };
        Ok((zreg, gb))
    }

    /// `self : f^∞`.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        Registry::check_same(self.registry(), f.registry())?;
        if f.is_zero() {
            return Err(Error::Precondition("saturation by the zero polynomial".into()));
        }
        let (_, gb) = self.rabinowitsch(f)?;
        let back: Vec<usize> = (1..=self.registry().nvars()).collect();
        let kept = gb.iter().filter_map(|g| g.project(self.registry(), &back)).collect();
        Ok(self.same_kind(kept))
    }

    /// `self : (f_1⋯f_k)^∞`, saturating by one factor at a time. Far cheaper
    /// than a single elimination against the product.
    pub fn saturate_product(&self, factors: &[Polynomial]) -> Result<Ideal> {
        let mut seen: Vec<&Polynomial> = Vec::new();
        let mut out = self.clone();
        for f in factors {
            if seen.contains(&f) || f.is_constant() && !f.is_zero() {
                continue;
            }
            seen.push(f);
            out = out.saturate(f)?;
            if out.is_unit()? {
                break;
            }
        }
        Ok(out)
    }

    /// Whether some power of `f` lies in the ideal.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        Registry::check_same(self.registry(), f.registry())?;
        let (_, gb) = self.rabinowitsch(f)?;
        Ok(gb.first().is_some_and(Polynomial::is_constant))
    }

    /// Images of the generators under `h`, as an ideal of the target registry.
    pub fn map(&self, images: &[Polynomial], target: &Arc<Registry>) -> Result<Ideal> {
        let gens = self
            .gens()
            .iter()
            .map(|g| g.substitute(images, target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    pub fn lift_to(&self, target: &Arc<Registry>) -> Result<Ideal> {
        let gens = self.gens().iter().map(|g| g.lift_to(target)).collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    fn reg(vars: &[&str]) -> Arc<Registry> {
        Registry::new(Field::Rational, vars.iter().copied()).unwrap()
    }

    fn id(r: &Arc<Registry>, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    #[test]
    fn combine_examples() {
        let r = reg(&["x", "y"]);
        assert!(id(&r, &["x"]).sum(&id(&r, &["y"])).unwrap().equals(&id(&r, &["x", "y"])).unwrap());
        let prod = id(&r, &["x", "y"]).product(&id(&r, &["x"])).unwrap();
        assert!(prod.equals(&id(&r, &["x^2", "x*y"])).unwrap());
        assert!(id(&r, &["x", "y"]).power(0).unwrap().is_unit().unwrap());
    }

    #[test]
    fn intersect_examples() {
        let r = reg(&["x", "y"]);
        assert!(id(&r, &["x"]).intersect(&id(&r, &["y"])).unwrap().equals(&id(&r, &["x*y"])).unwrap());
        assert!(id(&r, &["x"]).intersect(&id(&r, &["x"])).unwrap().equals(&id(&r, &["x"])).unwrap());
        let m = id(&r, &["x^2", "x*y"]).intersect(&id(&r, &["y"])).unwrap();
        assert!(m.equals(&id(&r, &["x*y"])).unwrap());
    }

    #[test]
    fn colon_examples() {
        let r = reg(&["a", "g", "x", "y"]);
        let a = Polynomial::parse(&r, "a").unwrap();
        let i = id(&r, &["a*x - g"]);
        assert!(i.saturate(&a).unwrap().equals(&i).unwrap());
        let j = id(&r, &["a*x", "a*y"]).saturate(&a).unwrap();
        assert!(j.equals(&id(&r, &["x", "y"])).unwrap());
        assert!(id(&r, &["a"]).saturate(&a).unwrap().is_unit().unwrap());
        let c = id(&r, &["a*x", "x^2"]).colon(&Polynomial::parse(&r, "x").unwrap()).unwrap();
        assert!(c.equals(&id(&r, &["a", "x"])).unwrap());
    }

    #[test]
    fn eliminate_examples() {
        let r = reg(&["t", "x", "y"]);
        let e = id(&r, &["x - t", "y - t^2"]).eliminate_named(&["t"]).unwrap();
        assert!(e.equals(&id(&r, &["y - x^2"])).unwrap());
        assert!(Ideal::unit(&r).eliminate_named(&["t"]).unwrap().is_unit().unwrap());
        let r = reg(&["x", "t", "s", "u", "v"]);
        let e = id(&r, &["t*s*u - x", "s*v - x"]).eliminate_named(&["u", "v"]).unwrap();
        assert!(e.is_zero_ideal().unwrap());
    }

    #[test]
    fn membership_examples() {
        let r = reg(&["x", "y", "u"]);
        assert!(id(&r, &["x"]).contains(&Polynomial::parse(&r, "x*y").unwrap()).unwrap());
        assert!(id(&r, &["u^2"]).radical_contains(&Polynomial::parse(&r, "u").unwrap()).unwrap());
        assert!(!id(&r, &["u^2 - x"]).radical_contains(&Polynomial::parse(&r, "u").unwrap()).unwrap());
        assert!(id(&r, &["x", "y"]).equals(&id(&r, &["y", "x + y"])).unwrap());
    }

    #[test]
    fn cache_is_shared_between_clones() {
        let r = reg(&["x", "y"]);
        let i = id(&r, &["x^2 - y", "x*y"]);
        let j = i.clone();
        let a = i.groebner().unwrap().as_ptr();
        let b = j.groebner().unwrap().as_ptr();
        assert_eq!(a, b);
    }
}
