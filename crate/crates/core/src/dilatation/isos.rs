//! Verifiers for the structural isomorphisms between dilatations. Every
//! verifier builds an explicit candidate map in each direction and checks
//! both composites against the identity.

use std::sync::Arc;

use super::universal::iso_clauses;
use super::{dilate, dilate_named, Center, DilatationResult, MultiCenter};
use crate::algebra::{AlgebraHom, IsoCertificate, PresentedAlgebra};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Polynomial, Registry};
use crate::report::Report;

fn base_images(base: &PresentedAlgebra, target: &Arc<Registry>) -> Result<Vec<Polynomial>> {
    (0..base.nvars())
        .map(|i| Polynomial::var(base.registry(), i).lift_to(target))
        .collect()
}

fn certify(rep: &mut Report, forward: AlgebraHom, backward: AlgebraHom) -> Result<IsoCertificate> {
    let cert = IsoCertificate::check(forward, backward)?;
    iso_clauses(rep, &cert);
    Ok(cert)
}

/// `∏_{l≠i} a_l`.
fn cofactor(center: &MultiCenter, i: usize) -> Polynomial {
    let reg = center.base().registry();
    Polynomial::product(
        reg,
        center
            .centers()
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != i)
            .map(|(_, c)| &c.denominator),
    )
}

#[derive(Clone, Debug)]
pub struct ForgetOutcome {
    /// `A[{M_k/a_k}]_{k∈K} → A[{M_i/a_i}]_{i∈I}`.
    pub hom: AlgebraHom,
    pub sub: DilatationResult,
    pub report: Report,
}

/// The canonical map from the dilatation at the sub-family `keep` to the full
/// one. Surjectivity is certified when every dropped `M_i ⊆ (a_i)`;
/// injectivity is checked by a direct kernel computation, and reported
/// separately from its non-zero-divisor hypothesis.
pub fn forget_map(full: &DilatationResult, keep: &[usize]) -> Result<ForgetOutcome> {
    let center = full.center();
    let base = center.base();
    let sub = dilate(&center.restrict(keep)?)?;
    let target = full.algebra();
    let mut images = base_images(base, target.registry())?;
    for fv in sub.fractions() {
        let orig = keep[fv.center];
        images.push(full.fraction(orig, fv.generator).expect("same generators"));
    }
    let mut hom = AlgebraHom::new(sub.algebra(), target, images)?;
    let mut rep = Report::new("forget");
    rep.clause("well_defined", hom.check_hom()?, None);

    let dropped: Vec<usize> = (0..center.len()).filter(|i| !keep.contains(i)).collect();
    rep.fact("dropped", dropped.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(","));

    let mut surj_hyp = None;
    for &i in &dropped {
        let c = &center.centers()[i];
        let ai = base.relations().sum(&Ideal::principal(&c.denominator))?;
        if !ai.contains_ideal(&c.ideal)? {
            surj_hyp = Some(format!("M_{} = {} is not inside ({})", i + 1, c.ideal, c.denominator));
            break;
        }
    }
    match surj_hyp {
        Some(w) => {
            rep.fail("surjectivity_hypothesis", w);
            rep.skip("surjective", "hypothesis fails");
        }
        None => {
            rep.pass("surjectivity_hypothesis");
            // x_{i,j} = g_{i,j}/a_i = h with g_{i,j} = a_i·h in A
            let mut witness = None;
            for fv in full.fractions().iter().filter(|f| dropped.contains(&f.center)) {
                let c = &center.centers()[fv.center];
                let g = &c.ideal.gens()[fv.generator];
                let h = base
                    .divide(g, &c.denominator)?
                    .ok_or_else(|| Error::Precondition("containment without quotient".into()))?;
                let x = full.fraction(fv.center, fv.generator).unwrap();
                if !target.elements_equal(&x, &full.lift(&h)?)? {
                    witness = Some(format!("{} is not the image of {h}", target.registry().vars()[fv.var]));
                    break;
                }
            }
            match witness {
                None => rep.pass("surjective"),
                Some(w) => rep.fail("surjective", w),
            };
        }
    }

    let kernel_trivial = hom.kernel()?.equals(sub.algebra().relations())?;
    rep.fact("kernel_trivial", kernel_trivial);
    let mut inj_hyp = true;
    for &i in &dropped {
        if !base.is_nzd(&center.centers()[i].denominator)? {
            inj_hyp = false;
        }
    }
    if inj_hyp {
        rep.pass("injectivity_hypothesis");
        rep.clause(
            "injective",
            kernel_trivial,
            (!kernel_trivial).then(|| "kernel strictly larger than the relations".to_string()),
        );
    } else {
        rep.fail("injectivity_hypothesis", "a dropped denominator is a zero-divisor");
        rep.skip("injective", format!("hypothesis fails; kernel trivial: {kernel_trivial}"));
    }
    Ok(ForgetOutcome { hom, sub, report: rep })
}

#[derive(Clone, Debug)]
pub struct MonopolyOutcome {
    /// `[Σ_i M_i·∏_{l≠i} a_l, ∏ a_i]`.
    pub mono: MultiCenter,
    pub certificate: IsoCertificate,
    pub report: Report,
}

/// The single center `Σ_i M_i·∏_{l≠i} a_l` over `∏ a_i`, with the maps
/// `x_{i,j} ↔ g_{i,j}·∏_{l≠i} a_l / ∏ a_l` in both directions.
pub fn monopoly_iso(center: &MultiCenter) -> Result<MonopolyOutcome> {
    if center.is_empty() {
        return Err(Error::Precondition("monopoly needs at least one center".into()));
    }
    let base = center.base();
    let mut gens = Vec::new();
    for (i, c) in center.centers().iter().enumerate() {
        let co = cofactor(center, i);
        for g in c.ideal.gens() {
            gens.push(g.mul(&co));
        }
    }
    let mono = MultiCenter::new(base, vec![Center::new(Ideal::new(base.registry(), gens)?, center.product())?])?;
    let multi = dilate(center)?;
    let single = dilate_named(&mono, "X")?;

    // flattened generator positions line up with the multi-center fractions
    let mut fwd = base_images(base, multi.algebra().registry())?;
    for fv in single.fractions() {
        let m = multi.fractions()[fv.generator];
        fwd.push(Polynomial::var(multi.algebra().registry(), m.var));
    }
    let mut bwd = base_images(base, single.algebra().registry())?;
    for (k, _) in multi.fractions().iter().enumerate() {
        bwd.push(single.fraction(0, k).expect("flattened"));
    }
    let forward = AlgebraHom::new(single.algebra(), multi.algebra(), fwd)?;
    let backward = AlgebraHom::new(multi.algebra(), single.algebra(), bwd)?;
    let mut rep = Report::new("monopoly");
    rep.fact("mono_center", &mono);
    let certificate = certify(&mut rep, forward, backward)?;
    Ok(MonopolyOutcome {
        mono,
        certificate,
        report: rep,
    })
}

/// Dilates at the sub-family `first`, pushes the remaining centers into the
/// result, dilates again, and compares with the one-shot dilatation.
pub fn two_stage_iso(center: &MultiCenter, first: &[usize]) -> Result<Report> {
    let base = center.base();
    let rest: Vec<usize> = (0..center.len()).filter(|i| !first.contains(i)).collect();
    let stage1 = dilate(&center.restrict(first)?)?;
    let pushed = center.restrict(&rest)?.push_forward(stage1.structural())?;
    let stage2 = dilate_named(&pushed, "w")?;
    let direct = dilate(center)?;

    let s2reg = stage2.algebra().registry();
    let dreg = direct.algebra().registry();
    let mut fwd = base_images(base, dreg)?;
    for fv in stage1.fractions() {
        fwd.push(direct.fraction(first[fv.center], fv.generator).unwrap());
    }
    for fv in stage2.fractions() {
        fwd.push(direct.fraction(rest[fv.center], fv.generator).unwrap());
    }
    let mut bwd = base_images(base, s2reg)?;
    for fv in direct.fractions() {
        let img = if let Some(p) = first.iter().position(|&k| k == fv.center) {
            stage1.fraction(p, fv.generator).unwrap().lift_to(s2reg)?
        } else {
            let q = rest.iter().position(|&k| k == fv.center).unwrap();
            stage2.fraction(q, fv.generator).unwrap()
        };
        bwd.push(img);
    }
    let mut rep = Report::new("two-stage");
    rep.fact("first_stage", first.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(","));
    certify(
        &mut rep,
        AlgebraHom::new(stage2.algebra(), direct.algebra(), fwd)?,
        AlgebraHom::new(direct.algebra(), stage2.algebra(), bwd)?,
    )?;
    Ok(rep)
}

/// `R[z]/(R-relations + (z·f − 1))` over an extension of `alg`.
fn invert(alg: &PresentedAlgebra, f: &Polynomial, name: &str) -> Result<Arc<PresentedAlgebra>> {
    let ext = alg.registry().extend([name]);
    let z = Polynomial::var(&ext, ext.nvars() - 1);
    let mut gens = alg.relations().lift_to(&ext)?.gens().to_vec();
    gens.push(z.mul(&f.lift_to(&ext)?).sub(&Polynomial::one(&ext)));
    Ok(PresentedAlgebra::new(Ideal::new(&ext, gens)?))
}

/// Inverting `f = ∏ a_i` makes dilatation and base agree. When every `M_i` is
/// the unit ideal the dilatation itself is `A[1/f]`.
pub fn localize_compare(center: &MultiCenter) -> Result<Report> {
    let base = center.base();
    let f = center.product();
    let r = dilate(center)?;
    let a_z = invert(base, &f, "z")?;
    let zreg = a_z.registry();
    let z = Polynomial::var(zreg, zreg.nvars() - 1);

    let fraction_in_az = |fv: &super::FractionVar| -> Result<Polynomial> {
        let c = &center.centers()[fv.center];
        let g = c.ideal.gens()[fv.generator].mul(&cofactor(center, fv.center));
        Ok(g.lift_to(zreg)?.mul(&z))
    };

    let mut rep = Report::new("localize");
    let mut all_unit = true;
    for c in center.centers() {
        if !base.relations().sum(&c.ideal)?.is_unit()? {
            all_unit = false;
        }
    }
    if all_unit {
        let mut fwd = base_images(base, zreg)?;
        for fv in r.fractions() {
            fwd.push(fraction_in_az(fv)?);
        }
        let one = r.algebra().one();
        let inv = r.algebra().divide(&one, &r.lift(&f)?)?;
        match inv {
            Some(q) => {
                let mut bwd = base_images(base, r.algebra().registry())?;
                bwd.push(q);
                let mut sub = Report::new("unit_case");
                certify(
                    &mut sub,
                    AlgebraHom::new(r.algebra(), &a_z, fwd)?,
                    AlgebraHom::new(&a_z, r.algebra(), bwd)?,
                )?;
                rep.absorb("unit_case", &sub);
            }
            None => {
                rep.fail("unit_case.inverse_exists", "product of denominators not invertible");
            }
        }
    } else {
        rep.skip("unit_case", "some M_i is a proper ideal");
    }

    let ap_w = invert(r.algebra(), &r.lift(&f)?, "w")?;
    let wreg = ap_w.registry();
    let mut fwd = base_images(base, zreg)?;
    for fv in r.fractions() {
        fwd.push(fraction_in_az(fv)?);
    }
    fwd.push(z.clone());
    let mut bwd = base_images(base, wreg)?;
    bwd.push(Polynomial::var(wreg, wreg.nvars() - 1));
    let mut sub = Report::new("localized");
    certify(
        &mut sub,
        AlgebraHom::new(&ap_w, &a_z, fwd)?,
        AlgebraHom::new(&a_z, &ap_w, bwd)?,
    )?;
    rep.absorb("localized", &sub);
    Ok(rep)
}

/// For `i ∉ K` with `a_{k(i)} ∈ L_i ⊆ L_{k(i)}`, the full dilatation is the
/// `K`-dilatation with the fractions `a_i/a_{k(i)}` inverted. `assignment`
/// lists the pairs `(i, k(i))`, 0-indexed.
pub fn open_immersion_iso(center: &MultiCenter, keep: &[usize], assignment: &[(usize, usize)]) -> Result<Report> {
    let base = center.base();
    let mut rep = Report::new("open-immersion");
    let dropped: Vec<usize> = (0..center.len()).filter(|i| !keep.contains(i)).collect();
    for &i in &dropped {
        if !assignment.iter().any(|&(j, k)| j == i && keep.contains(&k)) {
            return Err(Error::Input(format!("center {} has no assigned k(i) in K", i + 1)));
        }
    }
    let mod_p = |i: &Ideal| base.relations().sum(i);
    let mut hyp_ok = true;
    for &(i, k) in assignment {
        let (ci, ck) = (&center.centers()[i], &center.centers()[k]);
        let li = mod_p(&ci.l_ideal())?;
        let lk = mod_p(&ck.l_ideal())?;
        let name = format!("hypothesis.{}", i + 1);
        if !li.contains(&ck.denominator)? {
            rep.fail(&name, format!("a_{} = {} is not in L_{} = {}", k + 1, ck.denominator, i + 1, ci.l_ideal()));
            hyp_ok = false;
        } else if !lk.contains_ideal(&li)? {
            rep.fail(&name, format!("L_{} = {} is not inside L_{} = {}", i + 1, ci.l_ideal(), k + 1, ck.l_ideal()));
            hyp_ok = false;
        } else {
            rep.pass(name);
        }
    }
    if !hyp_ok {
        return Ok(rep);
    }

    let sub = dilate(&center.restrict(keep)?)?;
    let full = dilate(center)?;
    let names: Vec<String> = assignment.iter().map(|(i, _)| format!("w_{}", i + 1)).collect();
    let lreg = sub.algebra().registry().extend(&names);
    let ns = sub.algebra().nvars();
    let mut gens = sub.algebra().relations().lift_to(&lreg)?.gens().to_vec();
    let mut ratios = Vec::new();
    for (n, &(i, k)) in assignment.iter().enumerate() {
        let (ai, ak) = (&center.centers()[i].denominator, &center.centers()[k].denominator);
        let Some(r) = sub.algebra().divide(&sub.lift(ai)?, &sub.lift(ak)?)? else {
            rep.fail(format!("ratio.{}", i + 1), "a_i/a_k(i) not found in the K-dilatation");
            return Ok(rep);
        };
        let w = Polynomial::var(&lreg, ns + n);
        gens.push(w.mul(&r.lift_to(&lreg)?).sub(&Polynomial::one(&lreg)));
        ratios.push(r);
    }
    let loc = PresentedAlgebra::new(Ideal::new(&lreg, gens)?);

    let freg = full.algebra().registry();
    let mut fwd = base_images(base, freg)?;
    for fv in sub.fractions() {
        fwd.push(full.fraction(keep[fv.center], fv.generator).unwrap());
    }
    for &(i, k) in assignment {
        let (ai, ak) = (&center.centers()[i].denominator, &center.centers()[k].denominator);
        let Some(inv) = full.algebra().divide(&full.lift(ak)?, &full.lift(ai)?)? else {
            rep.fail(format!("inverse_ratio.{}", i + 1), "a_k(i)/a_i not found in the full dilatation");
            return Ok(rep);
        };
        fwd.push(inv);
    }
    let mut bwd = base_images(base, &lreg)?;
    for fv in full.fractions() {
        if let Some(p) = keep.iter().position(|&k| k == fv.center) {
            bwd.push(sub.fraction(p, fv.generator).unwrap().lift_to(&lreg)?);
        } else {
            let n = assignment.iter().position(|&(i, _)| i == fv.center).unwrap();
            let k = assignment[n].1;
            let g = &center.centers()[fv.center].ideal.gens()[fv.generator];
            let ak = &center.centers()[k].denominator;
            let Some(q) = sub.algebra().divide(&sub.lift(g)?, &sub.lift(ak)?)? else {
                rep.fail(format!("generator.{}", fv.center + 1), format!("{g}/{ak} not found in the K-dilatation"));
                return Ok(rep);
            };
            bwd.push(q.lift_to(&lreg)?.mul(&Polynomial::var(&lreg, ns + n)));
        }
    }
    certify(
        &mut rep,
        AlgebraHom::new(&loc, full.algebra(), fwd)?,
        AlgebraHom::new(full.algebra(), &loc, bwd)?,
    )?;
    Ok(rep)
}

/// `B ⊗_A A′` modulo `h(f)`-torsion against the dilatation of `B` at the
/// pushed center. For a polynomial-variable extension `B = A[w]` the torsion
/// step must change nothing.
pub fn base_change_compare(center: &MultiCenter, h: &AlgebraHom) -> Result<Report> {
    let mut h = h.clone();
    if !h.check_hom()? {
        return Err(Error::Precondition("base-change map is not well defined".into()));
    }
    let b = h.target().clone();
    let r = dilate(center)?;
    let pushed = center.push_forward(&h)?;
    let direct = dilate(&pushed)?;
    let dreg = direct.algebra().registry();

    let mut images: Vec<Polynomial> = h.images().iter().map(|p| p.lift_to(dreg)).collect::<Result<_>>()?;
    for fv in r.fractions() {
        images.push(direct.fraction(fv.center, fv.generator).expect("same shape"));
    }
    let mut gens = b.relations().lift_to(dreg)?.gens().to_vec();
    for rel in r.algebra().relations().gens() {
        gens.push(rel.substitute(&images, dreg)?);
    }
    let tensor = Ideal::new(dreg, gens)?;
    let dens = center
        .centers()
        .iter()
        .map(|c| h.apply(&c.denominator)?.lift_to(dreg))
        .collect::<Result<Vec<_>>>()?;
    let saturated = if dens.iter().any(Polynomial::is_zero) {
        Ideal::unit(dreg)
    } else {
        tensor.saturate_product(&dens)?
    };
    let torsion_trivial = saturated.equals(&tensor)?;

    let mut rep = Report::new("base-change");
    rep.fact("torsion_trivial", torsion_trivial);
    let sat_alg = PresentedAlgebra::new(saturated);
    let ident: Vec<Polynomial> = (0..dreg.nvars()).map(|i| Polynomial::var(dreg, i)).collect();
    certify(
        &mut rep,
        AlgebraHom::new(&sat_alg, direct.algebra(), ident.clone())?,
        AlgebraHom::new(direct.algebra(), &sat_alg, ident)?,
    )?;

    let src = h.source();
    let is_extension = b.registry().extends(src.registry())
        && h.images().iter().enumerate().all(|(i, p)| *p == Polynomial::var(b.registry(), i))
        && b.relations().equals(&src.relations().lift_to(b.registry())?)?;
    if is_extension {
        rep.clause(
            "flat_torsion_trivial",
            torsion_trivial,
            (!torsion_trivial).then(|| "saturation changed the tensor product".to_string()),
        );
    } else {
        rep.skip("flat_torsion_trivial", "not a polynomial-variable extension");
    }
    Ok(rep)
}

/// Presents the conic algebra as the kernel of `u_{i,j} ↦ ℓ_{i,j}·t_i`, where
/// `ℓ_{i,·}` lists the generators of `M_i` followed by `a_i`, quotients by
/// `ρ_i − 1` (`ρ_i` the variable for `a_i·t_i`) and compares with `A′`.
pub fn conic_iso(center: &MultiCenter) -> Result<Report> {
    let base = center.base();
    let mut rep = Report::new("conic");
    for (i, c) in center.centers().iter().enumerate() {
        if !base.is_nzd(&c.denominator)? {
            rep.fail("denominators_nzd", format!("a_{} = {} is a zero-divisor", i + 1, c.denominator));
            return Ok(rep);
        }
    }
    rep.pass("denominators_nzd");

    let mut unames = Vec::new();
    let mut ells: Vec<(usize, Polynomial)> = Vec::new();
    let mut rho = Vec::new();
    for (i, c) in center.centers().iter().enumerate() {
        for (j, g) in c.ideal.gens().iter().enumerate() {
            unames.push(format!("u_{}_{}", i + 1, j + 1));
            ells.push((i, g.clone()));
        }
        rho.push(unames.len());
        unames.push(format!("rho_{}", i + 1));
        ells.push((i, c.denominator.clone()));
    }
    let ureg = base.registry().extend(&unames);
    let tnames: Vec<String> = (0..center.len()).map(|i| format!("t_{}", i + 1)).collect();
    let treg = base.registry().extend(&tnames);
    let a_t = PresentedAlgebra::new(base.relations().lift_to(&treg)?);
    let free_u = PresentedAlgebra::free(&ureg);
    let n = base.nvars();
    let mut images = base_images(base, &treg)?;
    for (i, l) in &ells {
        images.push(l.lift_to(&treg)?.mul(&Polynomial::var(&treg, n + i)));
    }
    let graded = AlgebraHom::new(&free_u, &a_t, images)?;
    let conic_rel = graded.kernel()?;
    rep.fact("conic_relations", &conic_rel.minimized()?);
    let mut qgens = conic_rel.gens().to_vec();
    for &k in &rho {
        qgens.push(Polynomial::var(&ureg, n + k).sub(&Polynomial::one(&ureg)));
    }
    let quotient = PresentedAlgebra::new(Ideal::new(&ureg, qgens)?);

    let r = dilate(center)?;
    let areg = r.algebra().registry();
    let mut fwd = base_images(base, areg)?;
    let mut bwd = base_images(base, &ureg)?;
    let mut fractions = r.fractions().iter();
    for k in 0..unames.len() {
        if rho.contains(&k) {
            fwd.push(Polynomial::one(areg));
        } else {
            let fv = fractions.next().expect("one fraction per generator");
            fwd.push(Polynomial::var(areg, fv.var));
            bwd.push(Polynomial::var(&ureg, n + k));
        }
    }
    certify(
        &mut rep,
        AlgebraHom::new(&quotient, r.algebra(), fwd)?,
        AlgebraHom::new(r.algebra(), &quotient, bwd)?,
    )?;
    Ok(rep)
}
