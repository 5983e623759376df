//! Finitely presented algebras `k[y]/P` and maps between them.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{MonomialOrder, Polynomial, Registry, TrackedBasis};

/// `k[y_1..y_m] / P`. Elements are polynomials over the registry, compared by
/// normal form. `P = (1)` is the zero ring.
#[derive(Clone, Debug)]
pub struct PresentedAlgebra {
    registry: Arc<Registry>,
    relations: Ideal,
}

impl PresentedAlgebra {
    pub fn new(relations: Ideal) -> Arc<PresentedAlgebra> {
        Arc::new(PresentedAlgebra {
            registry: relations.registry().clone(),
            relations,
        })
    }

    pub fn free(registry: &Arc<Registry>) -> Arc<PresentedAlgebra> {
        Self::new(Ideal::zero(registry))
    }

    pub fn from_relations(registry: &Arc<Registry>, rels: &[&str]) -> Result<Arc<PresentedAlgebra>> {
        Ok(Self::new(Ideal::parse(registry, rels)?))
    }

    pub fn registry(&self) -> &Arc<Registry> {
        &self.registry
    }

    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    pub fn nvars(&self) -> usize {
        self.registry.nvars()
    }

    pub fn var(&self, name: &str) -> Result<Polynomial> {
        Polynomial::var_named(&self.registry, name)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        Polynomial::parse(&self.registry, text)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(&self.registry)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(&self.registry)
    }

    /// Canonical representative of `f`.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        self.relations.reduce(f)
    }

    pub fn is_zero_ring(&self) -> Result<bool> {
        self.relations.is_unit()
    }

    pub fn elements_equal(&self, a: &Polynomial, b: &Polynomial) -> Result<bool> {
        self.relations.contains(&a.sub(b))
    }

    /// Whether multiplication by `f` is injective: `P : f = P`.
    pub fn is_nzd(&self, f: &Polynomial) -> Result<bool> {
        let f = self.reduce(f)?;
        if f.is_zero() {
            return self.is_zero_ring();
        }
        // I : f = I exactly when I : f^∞ = I
        self.relations.saturate(&f)?.equals(&self.relations)
    }

    /// `A / (extra)`.
    pub fn quotient(&self, extra: &Ideal) -> Result<Arc<PresentedAlgebra>> {
        Ok(Self::new(self.relations.sum(extra)?))
    }

    /// Whether two presentations are literally the same ring: same variables,
    /// same relation ideal.
    pub fn same_presentation(&self, other: &PresentedAlgebra) -> Result<bool> {
        if !Registry::same(&self.registry, &other.registry) {
            return Ok(false);
        }
        self.relations.equals(&other.relations)
    }

    /// Solves `den · q = num` in this algebra. `None` when `num ∉ den·A`.
    pub fn divide(&self, num: &Polynomial, den: &Polynomial) -> Result<Option<Polynomial>> {
        Registry::check_same(&self.registry, num.registry())?;
        Registry::check_same(&self.registry, den.registry())?;
        let mut gens = vec![den.clone()];
        gens.extend(self.relations.gens().iter().filter(|g| !g.is_zero()).cloned());
        let tb = TrackedBasis::new(&gens, 0, MonomialOrder::GrevLex)?;
        match tb.tracked_multiplier(num)? {
            Some(q) => Ok(Some(self.reduce(&q)?)),
            None => Ok(None),
        }
    }
}

impl fmt::Display for PresentedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.registry.field(), self.registry.vars().join(", "))?;
        if !self.relations.gens().is_empty() {
            write!(f, "/{}", self.relations)?;
        }
        Ok(())
    }
}

/// A k-algebra map given by the images of the source variables.
#[derive(Clone, Debug)]
pub struct AlgebraHom {
    source: Arc<PresentedAlgebra>,
    target: Arc<PresentedAlgebra>,
    images: Vec<Polynomial>,
    well_defined: bool,
}

impl AlgebraHom {
    pub fn new(
        source: &Arc<PresentedAlgebra>,
        target: &Arc<PresentedAlgebra>,
        images: Vec<Polynomial>,
    ) -> Result<AlgebraHom> {
        if images.len() != source.nvars() {
            return Err(Error::Input(format!(
                "{} images given for {} source variables",
                images.len(),
                source.nvars()
            )));
        }
        if source.registry().field() != target.registry().field() {
            return Err(Error::RegistryMismatch("coefficient fields differ".into()));
        }
        for img in &images {
            Registry::check_same(target.registry(), img.registry())?;
        }
        Ok(AlgebraHom {
            source: source.clone(),
            target: target.clone(),
            images,
            well_defined: false,
        })
    }

    pub fn parse(source: &Arc<PresentedAlgebra>, target: &Arc<PresentedAlgebra>, images: &[&str]) -> Result<AlgebraHom> {
        let images = images.iter().map(|s| target.parse(s)).collect::<Result<Vec<_>>>()?;
        Self::new(source, target, images)
    }

    pub fn identity(a: &Arc<PresentedAlgebra>) -> AlgebraHom {
        let images = (0..a.nvars()).map(|i| Polynomial::var(a.registry(), i)).collect();
        AlgebraHom {
            source: a.clone(),
            target: a.clone(),
            images,
            well_defined: true,
        }
    }

    /// The inclusion of a presentation into one whose registry extends it.
    pub fn inclusion(source: &Arc<PresentedAlgebra>, target: &Arc<PresentedAlgebra>) -> Result<AlgebraHom> {
        let images = (0..source.nvars())
            .map(|i| Polynomial::var(source.registry(), i).lift_to(target.registry()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, images)
    }

    pub fn source(&self) -> &Arc<PresentedAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PresentedAlgebra> {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn is_well_defined(&self) -> bool {
        self.well_defined
    }

    /// Whether every source relation maps into the target relations. Sets
    /// the well-definedness flag on success.
    pub fn check_hom(&mut self) -> Result<bool> {
        for r in self.source.relations().gens() {
            let img = self.apply_raw(r)?;
            if !self.target.relations().contains(&img)? {
                self.well_defined = false;
                return Ok(false);
            }
        }
        self.well_defined = true;
        Ok(true)
    }

    /// Consuming variant of [`check_hom`](Self::check_hom).
    pub fn checked(mut self) -> Result<(AlgebraHom, bool)> {
        let ok = self.check_hom()?;
        Ok((self, ok))
    }

    fn apply_raw(&self, f: &Polynomial) -> Result<Polynomial> {
        Registry::check_same(self.source.registry(), f.registry())?;
        f.substitute(&self.images, self.target.registry())
    }

    /// Image of `f`, as a normal form in the target.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        self.target.reduce(&self.apply_raw(f)?)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AlgebraHom) -> Result<AlgebraHom> {
        if !Registry::same(self.target.registry(), other.source.registry()) {
            return Err(Error::RegistryMismatch("composition endpoints differ".into()));
        }
        let images = self
            .images
            .iter()
            .map(|p| other.apply(p))
            .collect::<Result<Vec<_>>>()?;
        let mut h = AlgebraHom::new(&self.source, &other.target, images)?;
        h.well_defined = self.well_defined && other.well_defined;
        Ok(h)
    }

    /// Source polynomials mapping to zero, via elimination on the graph ideal.
    pub fn kernel(&self) -> Result<Ideal> {
        let src = self.source.registry();
        let tgt = self.target.registry();
        let nt = tgt.nvars();
        let ext = tgt.extend(src.vars().iter().map(|v| format!("{v}_src")));
        let mut gens = Vec::new();
        for r in self.target.relations().gens() {
            gens.push(r.lift_to(&ext)?);
        }
        for (i, img) in self.images.iter().enumerate() {
            gens.push(Polynomial::var(&ext, nt + i).sub(&img.lift_to(&ext)?));
        }
        let elim: Vec<usize> = (0..nt).collect();
        let graph = Ideal::new(&ext, gens)?.eliminate(&elim)?;
        let mapping: Vec<usize> = (nt..ext.nvars()).collect();
        let kernel_gens = graph
            .gens()
            .iter()
            .map(|g| g.project(src, &mapping).expect("eliminated variables are absent"))
            .collect();
        Ideal::new(src, kernel_gens)
    }

    /// Whether both maps agree on every variable, up to target relations.
    pub fn maps_equal(&self, other: &AlgebraHom) -> Result<bool> {
        if !Registry::same(self.source.registry(), other.source.registry())
            || !Registry::same(self.target.registry(), other.target.registry())
        {
            return Err(Error::Precondition("maps_equal needs matching endpoints".into()));
        }
        for (a, b) in self.images.iter().zip(&other.images) {
            if !self.target.elements_equal(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The outcome of checking a candidate pair of mutually inverse maps.
#[derive(Clone, Debug)]
pub struct IsoCertificate {
    pub forward: AlgebraHom,
    pub backward: AlgebraHom,
    pub forward_well_defined: bool,
    pub backward_well_defined: bool,
    pub back_then_forth_is_identity: bool,
    pub forth_then_back_is_identity: bool,
}

impl IsoCertificate {
    /// Checks both maps and both composites.
    pub fn check(mut forward: AlgebraHom, mut backward: AlgebraHom) -> Result<IsoCertificate> {
        let forward_well_defined = forward.check_hom()?;
        let backward_well_defined = backward.check_hom()?;
        let fb = forward.then(&backward)?;
        let bf = backward.then(&forward)?;
        let forth_then_back_is_identity = fb.maps_equal(&AlgebraHom::identity(forward.source()))?;
        let back_then_forth_is_identity = bf.maps_equal(&AlgebraHom::identity(backward.source()))?;
        Ok(IsoCertificate {
            forward,
            backward,
            forward_well_defined,
            backward_well_defined,
            back_then_forth_is_identity,
            forth_then_back_is_identity,
        })
    }

    pub fn passed(&self) -> bool {
        self.forward_well_defined
            && self.backward_well_defined
            && self.back_then_forth_is_identity
            && self.forth_then_back_is_identity
    }

    /// The first failing clause, if any.
    pub fn failure(&self) -> Option<&'static str> {
        if !self.forward_well_defined {
            Some("forward map not well defined")
        } else if !self.backward_well_defined {
            Some("backward map not well defined")
        } else if !self.forth_then_back_is_identity {
            Some("backward after forward is not the identity")
        } else if !self.back_then_forth_is_identity {
            Some("forward after backward is not the identity")
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    fn alg(vars: &[&str], rels: &[&str]) -> Arc<PresentedAlgebra> {
        let r = Registry::new(Field::Rational, vars.iter().copied()).unwrap();
        PresentedAlgebra::from_relations(&r, rels).unwrap()
    }

    #[test]
    fn check_hom_examples() {
        let a = alg(&["x"], &["x^2"]);
        assert!(AlgebraHom::identity(&a).clone().check_hom().unwrap());
        let t = alg(&["t"], &[]);
        let mut h = AlgebraHom::parse(&a, &t, &["t"]).unwrap();
        assert!(!h.check_hom().unwrap());
        let cusp = alg(&["x", "y"], &["x^3 - y^2"]);
        let mut h = AlgebraHom::parse(&cusp, &t, &["t^2", "t^3"]).unwrap();
        assert!(h.check_hom().unwrap());
        assert!(h.is_well_defined());
    }

    #[test]
    fn kernel_examples() {
        let a = alg(&["x", "y"], &["x^2 - y"]);
        assert!(AlgebraHom::identity(&a).kernel().unwrap().equals(a.relations()).unwrap());
        let free = alg(&["x", "y"], &[]);
        let t = alg(&["t"], &[]);
        let h = AlgebraHom::parse(&free, &t, &["t^2", "t^3"]).unwrap();
        let k = h.kernel().unwrap();
        assert!(k.equals(&Ideal::parse(free.registry(), &["y^2 - x^3"]).unwrap()).unwrap());
        let fx = alg(&["x"], &[]);
        let q = alg(&["x"], &["x^2"]);
        let h = AlgebraHom::parse(&fx, &q, &["x"]).unwrap();
        assert!(h.kernel().unwrap().equals(&Ideal::parse(fx.registry(), &["x^2"]).unwrap()).unwrap());
    }

    #[test]
    fn nzd_examples() {
        let a = alg(&["x"], &[]);
        assert!(a.is_nzd(&a.parse("x").unwrap()).unwrap());
        let b = alg(&["x", "y"], &["x*y"]);
        assert!(!b.is_nzd(&b.parse("x").unwrap()).unwrap());
        let c = alg(&["u"], &["u^2"]);
        assert!(!c.is_nzd(&c.parse("u").unwrap()).unwrap());
    }

    #[test]
    fn maps_equal_examples() {
        let x = alg(&["x"], &[]);
        let t = alg(&["t"], &["t^2 - t"]);
        let h1 = AlgebraHom::parse(&x, &t, &["t"]).unwrap();
        let h2 = AlgebraHom::parse(&x, &t, &["t^2"]).unwrap();
        let h3 = AlgebraHom::parse(&x, &t, &["2*t"]).unwrap();
        assert!(h1.maps_equal(&h1).unwrap());
        assert!(h1.maps_equal(&h2).unwrap());
        assert!(!h1.maps_equal(&h3).unwrap());
    }

    #[test]
    fn division_in_quotient() {
        let b = alg(&["a", "g", "x"], &["g - a*x"]);
        let q = b.divide(&b.parse("g").unwrap(), &b.parse("a").unwrap()).unwrap().unwrap();
        assert_eq!(q, b.parse("x").unwrap());
        assert!(b.divide(&b.parse("x").unwrap(), &b.parse("a").unwrap()).unwrap().is_none());
    }
}
