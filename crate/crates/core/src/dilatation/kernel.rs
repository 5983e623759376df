//! The kernel of `A′ → A/M_0` for centers along powers of one element, and
//! the iterated-dilatation identity built on it.

use super::universal::iso_clauses;
use super::{dilate, dilate_named, universal_factor, Center, DilatationResult, MultiCenter, UniversalOutcome};
use crate::algebra::{AlgebraHom, IsoCertificate};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Polynomial, Registry};
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct CenterKernel {
    /// All fraction variables plus `ι(M_0)`.
    pub generated: Ideal,
    /// Kernel of the induced map `A′ → A/M_0`, by elimination.
    pub eliminated: Option<Ideal>,
    pub report: Report,
}

/// `a^d` exponents of each denominator, or an error naming the first that is
/// not a power of `a`.
fn exponents(center: &MultiCenter, a: &Polynomial) -> Result<Vec<u32>> {
    center
        .centers()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            (0..=64u32)
                .find(|&d| a.pow(d) == c.denominator)
                .ok_or_else(|| Error::Precondition(format!("denominator {} is not a power of {a}", i + 1)))
        })
        .collect()
}

/// Computes the kernel of `A′ → A/M_0` as the ideal generated by the
/// fractions and `ι(M_0)`, and independently by elimination, and compares.
pub fn center_kernel(r: &DilatationResult, m0: &Ideal, a: &Polynomial) -> Result<CenterKernel> {
    let center = r.center();
    let base = center.base();
    Registry::check_same(base.registry(), m0.registry())?;
    exponents(center, a)?;
    let mut rep = Report::new("center-kernel");
    let quotient = base.quotient(m0)?;
    let regular = quotient.is_nzd(a)?;
    rep.clause("divisor_regular_mod_m0", regular, (!regular).then(|| format!("{a} is a zero-divisor mod {m0}")));
    let mut nested = true;
    for (i, c) in center.centers().iter().enumerate() {
        if !quotient.relations().contains_ideal(&c.ideal)? {
            rep.fail("centers_contain_m0", format!("M_{} = {} is not inside M_0", i + 1, c.ideal));
            nested = false;
            break;
        }
    }
    if nested {
        rep.pass("centers_contain_m0");
    }

    let areg = r.algebra().registry();
    let mut gens: Vec<Polynomial> = r.fractions().iter().map(|f| Polynomial::var(areg, f.var)).collect();
    for g in m0.gens() {
        gens.push(r.lift(g)?);
    }
    let generated = r.algebra().relations().sum(&Ideal::new(areg, gens)?)?;
    if !regular || !nested {
        return Ok(CenterKernel {
            generated,
            eliminated: None,
            report: rep,
        });
    }

    let chi = AlgebraHom::inclusion(base, &quotient)?;
    let UniversalOutcome::Factored { hom, .. } = universal_factor(r, &chi, None)? else {
        rep.fail("factorization", "A′ → A/M_0 does not exist");
        return Ok(CenterKernel {
            generated,
            eliminated: None,
            report: rep,
        });
    };
    let eliminated = hom.kernel()?;
    let same = eliminated.equals(&generated)?;
    rep.clause(
        "generated_equals_kernel",
        same,
        (!same).then(|| format!("generated {} vs kernel {}", generated, eliminated)),
    );
    Ok(CenterKernel {
        generated,
        eliminated: Some(eliminated),
        report: rep,
    })
}

/// With `M_0` the first center and every `M_i ⊆ M_0`, dilating
/// `A[{M_i/a^{s_i}}]` once more at its kernel ideal `Q` over `a^t` equals
/// dilating `A` at `{M_i/a^{s_i+t}}`.
pub fn iterate_iso(center: &MultiCenter, a: &Polynomial, t: u32) -> Result<Report> {
    let mut rep = Report::new("iterate");
    if center.is_empty() {
        return Err(Error::Precondition("iterate needs the distinguished center M_0".into()));
    }
    let s = exponents(center, a)?;
    if t > s[0] {
        return Err(Error::Precondition(format!("t = {t} exceeds s_0 = {}", s[0])));
    }
    let base = center.base();
    let m0 = center.centers()[0].ideal.clone();
    let r = dilate(center)?;
    let ck = center_kernel(&r, &m0, a)?;
    rep.absorb("kernel", &ck.report);
    if !ck.report.passed() {
        return Ok(rep);
    }

    // Q generators: every fraction variable, then ι(M_0)
    let areg = r.algebra().registry();
    let mut q_gens: Vec<Polynomial> = r.fractions().iter().map(|f| Polynomial::var(areg, f.var)).collect();
    for g in m0.gens() {
        q_gens.push(r.lift(g)?);
    }
    let at = r.lift(&a.pow(t))?;
    let second_center = MultiCenter::new(r.algebra(), vec![Center::new(Ideal::new(r.algebra().registry(), q_gens.clone())?, at)?])?;
    let iterated = dilate_named(&second_center, "y")?;

    let shifted: Vec<Center> = center
        .centers()
        .iter()
        .map(|c| Center::new(c.ideal.clone(), c.denominator.mul(&a.pow(t))))
        .collect::<Result<_>>()?;
    let direct = dilate(&MultiCenter::new(base, shifted)?)?;
    let dreg = direct.algebra().registry();
    let ireg = iterated.algebra().registry();
    let nf = r.fractions().len();

    let mut fwd: Vec<Polynomial> = (0..base.nvars()).map(|i| Polynomial::var(base.registry(), i).lift_to(dreg)).collect::<Result<_>>()?;
    let a_t = direct.lift(&a.pow(t))?;
    for fv in r.fractions() {
        fwd.push(direct.fraction(fv.center, fv.generator).unwrap().mul(&a_t));
    }
    for k in 0..q_gens.len() {
        if k < nf {
            let fv = r.fractions()[k];
            fwd.push(direct.fraction(fv.center, fv.generator).unwrap());
        } else {
            let m = &m0.gens()[k - nf];
            let Some(q) = direct.algebra().divide(&direct.lift(m)?, &a_t)? else {
                rep.fail("m0_over_power", format!("{m}/{a}^{t} not found"));
                return Ok(rep);
            };
            fwd.push(q);
        }
    }
    let mut bwd: Vec<Polynomial> = (0..base.nvars()).map(|i| Polynomial::var(base.registry(), i).lift_to(ireg)).collect::<Result<_>>()?;
    for k in 0..nf {
        bwd.push(iterated.fraction(0, k).unwrap());
    }
    let cert = IsoCertificate::check(
        AlgebraHom::new(iterated.algebra(), direct.algebra(), fwd)?,
        AlgebraHom::new(direct.algebra(), iterated.algebra(), bwd)?,
    )?;
    iso_clauses(&mut rep, &cert);
    rep.fact("t", t);
    Ok(rep)
}
