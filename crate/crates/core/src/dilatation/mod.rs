//! Presentations of multi-centered dilatations `A[{M_i/a_i}]` and the
//! verifiers for their structural identities.
//!
//! `A[{M_i/a_i}]` is presented as
//! `k[y, x_{i,j}] / ((P + (a_i·x_{i,j} − g_{i,j})) : f^∞)` with `f = ∏ a_i`
//! and `g_{i,j}` the stored generators of `M_i`. Fresh variables are named
//! `x_<i>_<j>`, 1-indexed by center position and generator position.

mod exceptional;
mod isos;
mod kernel;
mod universal;

use std::fmt;
use std::sync::Arc;

use crate::algebra::{AlgebraHom, PresentedAlgebra};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Polynomial, Registry};

pub use exceptional::check_exceptional;
pub use isos::{
    base_change_compare, conic_iso, forget_map, localize_compare, monopoly_iso, open_immersion_iso,
    two_stage_iso, ForgetOutcome, MonopolyOutcome,
};
pub use kernel::{center_kernel, iterate_iso, CenterKernel};
pub use universal::{compare_dilatations, universal_factor, UniversalOutcome};

/// One pair `[M, a]`: the ideal keeps its generators verbatim.
#[derive(Clone, Debug)]
pub struct Center {
    pub ideal: Ideal,
    pub denominator: Polynomial,
}

impl Center {
    pub fn new(ideal: Ideal, denominator: Polynomial) -> Result<Center> {
        Registry::check_same(ideal.registry(), denominator.registry())?;
        Ok(Center { ideal, denominator })
    }

    /// `L = M + (a)`.
    pub fn l_ideal(&self) -> Ideal {
        self.ideal
            .sum(&Ideal::principal(&self.denominator))
            .expect("same registry")
    }
}

impl fmt::Display for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} / {}]", self.ideal, self.denominator)
    }
}

/// A finite family of centers over a presented algebra.
#[derive(Clone, Debug)]
pub struct MultiCenter {
    base: Arc<PresentedAlgebra>,
    centers: Vec<Center>,
}

impl MultiCenter {
    pub fn new(base: &Arc<PresentedAlgebra>, centers: Vec<Center>) -> Result<MultiCenter> {
        for c in &centers {
            Registry::check_same(base.registry(), c.ideal.registry())?;
        }
        Ok(MultiCenter {
            base: base.clone(),
            centers,
        })
    }

    /// Builds centers from text: each entry is (generators of M, a).
    pub fn parse(base: &Arc<PresentedAlgebra>, spec: &[(&[&str], &str)]) -> Result<MultiCenter> {
        let centers = spec
            .iter()
            .map(|(gens, a)| Center::new(Ideal::parse(base.registry(), gens)?, base.parse(a)?))
            .collect::<Result<Vec<_>>>()?;
        MultiCenter::new(base, centers)
    }

    pub fn empty(base: &Arc<PresentedAlgebra>) -> MultiCenter {
        MultiCenter {
            base: base.clone(),
            centers: Vec::new(),
        }
    }

    pub fn base(&self) -> &Arc<PresentedAlgebra> {
        &self.base
    }

    pub fn centers(&self) -> &[Center] {
        &self.centers
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }

    /// `∏ a_i` (1 for the empty family).
    pub fn product(&self) -> Polynomial {
        Polynomial::product(self.base.registry(), self.centers.iter().map(|c| &c.denominator))
    }

    /// The sub-family at the given positions, in the given order.
    pub fn restrict(&self, positions: &[usize]) -> Result<MultiCenter> {
        let centers = positions
            .iter()
            .map(|&i| {
                self.centers
                    .get(i)
                    .cloned()
                    .ok_or_else(|| Error::Input(format!("no center at position {}", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        MultiCenter::new(&self.base, centers)
    }

    /// The same family over `target`, pushed along `h`.
    pub fn push_forward(&self, h: &AlgebraHom) -> Result<MultiCenter> {
        if !Registry::same(h.source().registry(), self.base.registry()) {
            return Err(Error::RegistryMismatch("hom source is not the center's base".into()));
        }
        let tgt = h.target();
        let centers = self
            .centers
            .iter()
            .map(|c| {
                let gens = c
                    .ideal
                    .gens()
                    .iter()
                    .map(|g| h.apply(g))
                    .collect::<Result<Vec<_>>>()?;
                Center::new(Ideal::new(tgt.registry(), gens)?, h.apply(&c.denominator)?)
            })
            .collect::<Result<Vec<_>>>()?;
        MultiCenter::new(tgt, centers)
    }
}

impl fmt::Display for MultiCenter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, c) in self.centers.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// Meaning of one fresh variable: generator `generator` of center `center`
/// over that center's denominator (both 0-indexed).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FractionVar {
    pub var: usize,
    pub center: usize,
    pub generator: usize,
}

/// The presentation of `A[{M_i/a_i}]` together with `ι: A → A′`.
#[derive(Clone, Debug)]
pub struct DilatationResult {
    center: MultiCenter,
    algebra: Arc<PresentedAlgebra>,
    structural: AlgebraHom,
    fractions: Vec<FractionVar>,
    unsaturated: Ideal,
    saturation_changed: bool,
    zero_ring: bool,
}

impl DilatationResult {
    pub fn center(&self) -> &MultiCenter {
        &self.center
    }

    pub fn base(&self) -> &Arc<PresentedAlgebra> {
        self.center.base()
    }

    pub fn algebra(&self) -> &Arc<PresentedAlgebra> {
        &self.algebra
    }

    /// `ι: A → A′`.
    pub fn structural(&self) -> &AlgebraHom {
        &self.structural
    }

    pub fn fractions(&self) -> &[FractionVar] {
        &self.fractions
    }

    /// `P + (a_i·x_{i,j} − g_{i,j})` before saturation.
    pub fn unsaturated(&self) -> &Ideal {
        &self.unsaturated
    }

    /// Whether saturating by `∏ a_i` enlarged the ideal. `false` is the
    /// effective certificate that the naive presentation is already right.
    pub fn saturation_changed(&self) -> bool {
        self.saturation_changed
    }

    pub fn is_zero_ring(&self) -> bool {
        self.zero_ring
    }

    /// The variable standing for `g_{i,j}/a_i` (0-indexed).
    pub fn fraction(&self, center: usize, generator: usize) -> Option<Polynomial> {
        self.fractions
            .iter()
            .find(|f| f.center == center && f.generator == generator)
            .map(|f| Polynomial::var(self.algebra.registry(), f.var))
    }

    /// Human-readable meaning of every fresh variable.
    pub fn dictionary(&self) -> Vec<(String, String)> {
        self.fractions
            .iter()
            .map(|f| {
                let c = &self.center.centers()[f.center];
                (
                    self.algebra.registry().vars()[f.var].clone(),
                    format!("({})/({})", c.ideal.gens()[f.generator], c.denominator),
                )
            })
            .collect()
    }

    /// `ι(p)` for a base polynomial.
    pub fn lift(&self, p: &Polynomial) -> Result<Polynomial> {
        p.lift_to(self.algebra.registry())
    }
}

/// Dilates `A` at `C`, naming fresh variables `x_<i>_<j>`.
pub fn dilate(center: &MultiCenter) -> Result<DilatationResult> {
    dilate_named(center, "x")
}

/// As [`dilate`], with fresh variables named `<prefix>_<i>_<j>`.
pub fn dilate_named(center: &MultiCenter, prefix: &str) -> Result<DilatationResult> {
    let base = center.base();
    let reg = base.registry();
    let mut names = Vec::new();
    let mut slots = Vec::new();
    for (i, c) in center.centers().iter().enumerate() {
        for j in 0..c.ideal.gens().len() {
            names.push(format!("{prefix}_{}_{}", i + 1, j + 1));
            slots.push((i, j));
        }
    }
    let ext = reg.extend(&names);
    let n = reg.nvars();
    let fractions: Vec<FractionVar> = slots
        .iter()
        .enumerate()
        .map(|(k, &(i, j))| FractionVar {
            var: n + k,
            center: i,
            generator: j,
        })
        .collect();

    let mut gens = base.relations().lift_to(&ext)?.gens().to_vec();
    for fv in &fractions {
        let c = &center.centers()[fv.center];
        let a = c.denominator.lift_to(&ext)?;
        let g = c.ideal.gens()[fv.generator].lift_to(&ext)?;
        gens.push(a.mul(&Polynomial::var(&ext, fv.var)).sub(&g));
    }
    let unsaturated = Ideal::new(&ext, gens)?;
    let dens = center.centers().iter().map(|c| c.denominator.lift_to(&ext)).collect::<Result<Vec<_>>>()?;
    let saturated = if dens.iter().any(Polynomial::is_zero) {
        Ideal::unit(&ext)
    } else {
        unsaturated.saturate_product(&dens)?
    };
    let saturation_changed = !saturated.equals(&unsaturated)?;
    let zero_ring = saturated.is_unit()?;
    let relations = if zero_ring { Ideal::unit(&ext) } else { saturated };
    let algebra = PresentedAlgebra::new(relations);
    let mut structural = AlgebraHom::inclusion(base, &algebra)?;
    if !structural.check_hom()? {
        return Err(Error::Precondition("structural map is not well defined".into()));
    }
    Ok(DilatationResult {
        center: center.clone(),
        algebra,
        structural,
        fractions,
        unsaturated,
        saturation_changed,
        zero_ring,
    })
}

/// Canonical form of a family: families `[M, b^d]` sharing `M` collapse to
/// the largest `d` when `base_element` is given, then centers with the same
/// denominator merge by concatenating generators. Output is sorted by the
/// printed denominator, then the printed ideal.
pub fn normalize_center(center: &MultiCenter, base_element: Option<&Polynomial>) -> Result<MultiCenter> {
    let base = center.base();
    let mut centers: Vec<Center> = center.centers().to_vec();

    if let Some(b) = base_element {
        Registry::check_same(base.registry(), b.registry())?;
        let exps: Vec<Option<u32>> = centers.iter().map(|c| power_of(&c.denominator, b)).collect();
        let mut keep = vec![true; centers.len()];
        for i in 0..centers.len() {
            let Some(di) = exps[i] else { continue };
            for j in 0..centers.len() {
                if i == j || !keep[j] {
                    continue;
                }
                let Some(dj) = exps[j] else { continue };
                let dominated = dj > di || (dj == di && j < i);
                if dominated && centers[i].ideal.equals(&centers[j].ideal)? {
                    keep[i] = false;
                    break;
                }
            }
        }
        centers = centers
            .into_iter()
            .zip(keep)
            .filter_map(|(c, k)| k.then_some(c))
            .collect();
    }

    let mut merged: Vec<Center> = Vec::new();
    for c in centers {
        let a = base.reduce(&c.denominator)?;
        let mut target = None;
        for (k, m) in merged.iter().enumerate() {
            if base.reduce(&m.denominator)? == a {
                target = Some(k);
                break;
            }
        }
        match target {
            Some(k) => {
                let ideal = merged[k].ideal.sum(&c.ideal)?;
                merged[k] = Center::new(ideal, merged[k].denominator.clone())?;
            }
            None => merged.push(c),
        }
    }
    merged.sort_by_key(|c| (c.denominator.to_string(), c.ideal.to_string()));
    MultiCenter::new(base, merged)
}

/// `Some(d)` with `d ≥ 1` when `a = b^d` exactly.
fn power_of(a: &Polynomial, b: &Polynomial) -> Option<u32> {
    if b.is_zero() || b.is_constant() {
        return None;
    }
    let da = a.total_degree()?;
    let db = b.total_degree()?;
    if db == 0 || da % db != 0 || da == 0 {
        return None;
    }
    let d = da / db;
    (b.pow(d) == *a).then_some(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    fn base(vars: &[&str], rels: &[&str]) -> Arc<PresentedAlgebra> {
        let r = Registry::new(Field::Rational, vars.iter().copied()).unwrap();
        PresentedAlgebra::from_relations(&r, rels).unwrap()
    }

    #[test]
    fn regular_blowup_needs_no_saturation() {
        let a = base(&["a", "g"], &[]);
        let c = MultiCenter::parse(&a, &[(&["g"], "a")]).unwrap();
        let r = dilate(&c).unwrap();
        assert!(!r.saturation_changed());
        assert!(!r.is_zero_ring());
        let expected = Ideal::parse(r.algebra().registry(), &["g - a*x_1_1"]).unwrap();
        assert!(r.algebra().relations().equals(&expected).unwrap());
        assert_eq!(r.dictionary(), vec![("x_1_1".to_string(), "(g)/(a)".to_string())]);
    }

    #[test]
    fn unit_ideal_gives_localization() {
        let a = base(&["u"], &[]);
        let c = MultiCenter::parse(&a, &[(&["1"], "u")]).unwrap();
        let r = dilate(&c).unwrap();
        let expected = Ideal::parse(r.algebra().registry(), &["u*x_1_1 - 1"]).unwrap();
        assert!(r.algebra().relations().equals(&expected).unwrap());
    }

    #[test]
    fn nilpotent_denominator_gives_zero_ring() {
        let a = base(&["u"], &["u^2"]);
        let c = MultiCenter::parse(&a, &[(&["u"], "u")]).unwrap();
        assert!(dilate(&c).unwrap().is_zero_ring());
        let z = MultiCenter::parse(&base(&["u"], &[]), &[(&["u"], "0")]).unwrap();
        assert!(dilate(&z).unwrap().is_zero_ring());
    }

    #[test]
    fn empty_center_returns_base() {
        let a = base(&["x"], &["x^2"]);
        let r = dilate(&MultiCenter::empty(&a)).unwrap();
        assert!(r.algebra().same_presentation(&a).unwrap());
    }

    #[test]
    fn normalize_examples() {
        let a = base(&["x", "y"], &[]);
        let c = MultiCenter::parse(&a, &[(&["x"], "y"), (&["y"], "y")]).unwrap();
        let n = normalize_center(&c, None).unwrap();
        assert_eq!(n.len(), 1);
        assert!(n.centers()[0].ideal.equals(&Ideal::parse(a.registry(), &["x", "y"]).unwrap()).unwrap());

        let b = base(&["a", "g"], &[]);
        let c = MultiCenter::parse(&b, &[(&["g"], "a"), (&["g"], "a^2")]).unwrap();
        let n = normalize_center(&c, Some(&b.parse("a").unwrap())).unwrap();
        assert_eq!(n.to_string(), "{[(g) / a^2]}");

        assert!(normalize_center(&MultiCenter::empty(&b), None).unwrap().is_empty());
    }
}
