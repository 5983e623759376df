use super::dilate::{dilate_oracle_fractions, FiniteCenter};
use super::ring::{certify_iso, FiniteRing, PresentedBasis};
use crate::dilatation::{dilate, MultiCenter};
use crate::error::Result;
use crate::report::Report;

/// The finite ring `A` and the center's images in it, for a
/// finite-dimensional `𝔽_p` presentation.
pub fn enumerate_center(center: &MultiCenter, cap: usize) -> Result<(FiniteRing, FiniteCenter)> {
    let ap = center.base();
    let base = PresentedBasis::new(ap, cap)?;
    let mut spec = Vec::new();
    for c in center.centers() {
        let gens = c.ideal.gens().iter().map(|g| base.element(ap, g)).collect::<Result<Vec<u16>>>()?;
        spec.push((gens, base.element(ap, &c.denominator)?));
    }
    let spec_ref: Vec<(&[u16], u16)> = spec.iter().map(|(g, x)| (g.as_slice(), *x)).collect();
    let fc = FiniteCenter::generated(&base.ring, &spec_ref);
    Ok((base.ring, fc))
}

/// Enumerates a finite-dimensional `𝔽_p` presentation, dilates it both by the
/// oracle and symbolically, and certifies that sending every variable and
/// fraction generator to its oracle value is a ring isomorphism.
pub fn compare_with_symbolic(center: &MultiCenter, cap: usize) -> Result<Report> {
    let ap = center.base();
    let mut rep = Report::new("oracle");
    let base = PresentedBasis::new(ap, cap)?;
    let a = &base.ring;
    let mut spec = Vec::new();
    for c in center.centers() {
        let gens = c.ideal.gens().iter().map(|g| base.element(ap, g)).collect::<Result<Vec<u16>>>()?;
        spec.push((gens, base.element(ap, &c.denominator)?));
    }
    let spec_ref: Vec<(&[u16], u16)> = spec.iter().map(|(g, x)| (g.as_slice(), *x)).collect();
    let fc = FiniteCenter::generated(a, &spec_ref);
    let oracle = dilate_oracle_fractions(a, &fc, cap)?;
    rep.absorb("oracle", &oracle.report);
    let sub = &oracle.subring;

    let r = dilate(center)?;
    let symbolic = match PresentedBasis::new(r.algebra(), cap) {
        Ok(b) => b,
        Err(e) if e.is_resource_limit() => return Err(e),
        Err(e) => {
            rep.fail("symbolic_finite", e.to_string());
            return Ok(rep);
        }
    };
    rep.pass("symbolic_finite");
    rep.fact("symbolic_size", symbolic.ring.size());
    rep.fact("oracle_size", sub.ring.size());
    rep.fact("zero_ring", r.is_zero_ring());
    rep.clause(
        "zero_ring_agrees",
        r.is_zero_ring() == sub.ring.is_zero_ring(),
        None,
    );

    // variable images in the oracle subring
    let mut images: Vec<u16> = (0..ap.nvars()).map(|i| sub.structural[base.ring.generators()[i] as usize]).collect();
    if a.is_zero_ring() {
        images = vec![sub.ring.zero(); ap.nvars()];
    }
    for fv in r.fractions() {
        let g = &center.centers()[fv.center].ideal.gens()[fv.generator];
        let m = base.element(ap, g)?;
        images.push(sub.fraction(fv.center, m).expect("numerator lies in M_i"));
    }
    let s = &symbolic.ring;
    let basis_values: Vec<u16> = symbolic
        .basis
        .iter()
        .map(|mono| {
            mono.exponents()
                .iter()
                .enumerate()
                .fold(sub.ring.one(), |acc, (i, &e)| sub.ring.mul(acc, sub.ring.pow(images[i], e as u64)))
        })
        .collect();
    let map: Vec<u16> = s
        .elements()
        .map(|x| {
            symbolic
                .coordinates(x)
                .iter()
                .zip(&basis_values)
                .fold(sub.ring.zero(), |acc, (&c, &v)| sub.ring.add(acc, sub.ring.mul(sub.ring.from_int(c as i64), v)))
        })
        .collect();
    let cert = certify_iso(s, &sub.ring, &map);
    rep.clause("symbolic_iso_oracle", cert.is_ok(), cert.err());
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PresentedAlgebra;
    use crate::poly::{Field, Registry};

    fn fp(p: u64, rels: &[&str]) -> std::sync::Arc<PresentedAlgebra> {
        let r = Registry::new(Field::prime(p).unwrap(), ["y"]).unwrap();
        PresentedAlgebra::from_relations(&r, rels).unwrap()
    }

    #[test]
    fn bridge_examples() {
        let a = fp(2, &["y^3 - y"]);
        let c = MultiCenter::parse(&a, &[(&["y - 1"], "y")]).unwrap();
        let rep = compare_with_symbolic(&c, 4096).unwrap();
        assert!(rep.passed(), "{rep}");

        let b = fp(3, &["y^2"]);
        let c = MultiCenter::parse(&b, &[(&["y"], "y")]).unwrap();
        let rep = compare_with_symbolic(&c, 4096).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.facts["zero_ring"], "true");

        let rep = compare_with_symbolic(&MultiCenter::empty(&a), 4096).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.facts["symbolic_size"], "8");
    }
}
