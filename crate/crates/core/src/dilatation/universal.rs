use super::DilatationResult;
use crate::algebra::{AlgebraHom, IsoCertificate};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::report::Report;

#[derive(Clone, Debug)]
pub enum UniversalOutcome {
    /// The factorization `χ′: A′ → B` and its certificate.
    Factored { hom: AlgebraHom, report: Report },
    /// `χ` does not factor; the violated condition is named.
    Refused { reason: String },
}

impl UniversalOutcome {
    pub fn hom(&self) -> Option<&AlgebraHom> {
        match self {
            UniversalOutcome::Factored { hom, .. } => Some(hom),
            UniversalOutcome::Refused { .. } => None,
        }
    }
}

/// Factors `χ: A → B` through `ι: A → A′` when every `χ(a_i)` is a
/// non-zero-divisor of `B` and `χ(M_i)·B ⊆ χ(a_i)·B`. Fraction variables go to
/// the quotients `χ(g_{i,j}) / χ(a_i)` found by tracked division. When
/// `alternative` is given it must agree with the factorization.
pub fn universal_factor(
    r: &DilatationResult,
    chi: &AlgebraHom,
    alternative: Option<&AlgebraHom>,
) -> Result<UniversalOutcome> {
    if !crate::poly::Registry::same(chi.source().registry(), r.base().registry()) {
        return Err(Error::RegistryMismatch("χ must start at the dilatation's base".into()));
    }
    let mut chi = chi.clone();
    if !chi.check_hom()? {
        return Err(Error::Precondition("χ is not well defined".into()));
    }
    let b = chi.target().clone();
    let mut quotients: Vec<Polynomial> = Vec::with_capacity(r.fractions().len());
    for (i, c) in r.center().centers().iter().enumerate() {
        let a = chi.apply(&c.denominator)?;
        if !b.is_nzd(&a)? {
            return Ok(UniversalOutcome::Refused {
                reason: format!("image {a} of denominator {} is a zero-divisor", i + 1),
            });
        }
    }
    for fv in r.fractions() {
        let c = &r.center().centers()[fv.center];
        let a = chi.apply(&c.denominator)?;
        let g = chi.apply(&c.ideal.gens()[fv.generator])?;
        match b.divide(&g, &a)? {
            Some(q) => quotients.push(q),
            None => {
                return Ok(UniversalOutcome::Refused {
                    reason: format!("image {g} of a generator of M_{} is not in ({a})", fv.center + 1),
                })
            }
        }
    }
    let mut images = chi.images().to_vec();
    images.extend(quotients);
    let mut hom = AlgebraHom::new(r.algebra(), &b, images)?;
    let mut rep = Report::new("universal");
    rep.clause("factorization_well_defined", hom.check_hom()?, None);
    let composite = r.structural().then(&hom)?;
    rep.clause("factors_chi", composite.maps_equal(&chi)?, None);
    // χ(a_i) regular forces χ′(x_{i,j}) = χ(g_{i,j})/χ(a_i)
    rep.pass("uniqueness_denominators_regular");
    if let Some(alt) = alternative {
        let same = alt.maps_equal(&hom)?;
        rep.clause("uniqueness_alternative", same, (!same).then(|| "alternative differs".to_string()));
    }
    Ok(UniversalOutcome::Factored { hom, report: rep })
}

/// Mutually inverse maps between two dilatations of the same base, both
/// obtained from the universal property.
pub fn compare_dilatations(r1: &DilatationResult, r2: &DilatationResult) -> Result<Report> {
    let mut rep = Report::new("compare");
    let forward = universal_factor(r1, r2.structural(), None)?;
    let backward = universal_factor(r2, r1.structural(), None)?;
    match (forward, backward) {
        (UniversalOutcome::Factored { hom: f, .. }, UniversalOutcome::Factored { hom: g, .. }) => {
            let cert = IsoCertificate::check(f, g)?;
            iso_clauses(&mut rep, &cert);
        }
        (UniversalOutcome::Refused { reason }, _) => {
            rep.fail("forward_exists", reason);
        }
        (_, UniversalOutcome::Refused { reason }) => {
            rep.fail("backward_exists", reason);
        }
    }
    Ok(rep)
}

pub(crate) fn iso_clauses(rep: &mut Report, cert: &IsoCertificate) {
    rep.clause("forward_well_defined", cert.forward_well_defined, None);
    rep.clause("backward_well_defined", cert.backward_well_defined, None);
    rep.clause("backward_after_forward_identity", cert.forth_then_back_is_identity, None);
    rep.clause("forward_after_backward_identity", cert.back_then_forth_is_identity, None);
}
