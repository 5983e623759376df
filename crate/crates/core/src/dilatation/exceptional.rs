use super::DilatationResult;
use crate::error::Result;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::report::Report;

/// Checks in `A′`: (i) `a_i·A′ = L_i·A′`, (ii) each `a_i` is a
/// non-zero-divisor, (iii) `ι(c)` stays a non-zero-divisor for every
/// non-zero-divisor `c` of `A` supplied. Also records the zero-ring criterion:
/// `A′ = 0` exactly when `∏ a_i` is nilpotent in `A`.
pub fn check_exceptional(r: &DilatationResult, extra: &[Polynomial]) -> Result<Report> {
    let mut rep = Report::new("check");
    let base = r.base();
    let f = r.center().product();
    let nilpotent = base.relations().radical_contains(&f)?;
    rep.fact("zero_ring", r.is_zero_ring());
    rep.fact("saturation_changed", r.saturation_changed());
    rep.clause(
        "zero_criterion",
        nilpotent == r.is_zero_ring(),
        Some(format!("product nilpotent: {nilpotent}, zero ring: {}", r.is_zero_ring())),
    );
    if r.is_zero_ring() {
        rep.skip("exceptional_ideal", "zero ring");
        rep.skip("denominators_nzd", "zero ring");
        rep.skip("nzd_preserved", "zero ring");
        return Ok(rep);
    }

    let alg = r.algebra();
    let reg = alg.registry();
    let rels = alg.relations();
    let mut ideal_witness = None;
    let mut nzd_witness = None;
    for (i, c) in r.center().centers().iter().enumerate() {
        let a = r.lift(&c.denominator)?;
        let lhs = rels.sum(&Ideal::principal(&a))?;
        let rhs = rels.sum(&c.l_ideal().lift_to(reg)?)?;
        if ideal_witness.is_none() && !lhs.equals(&rhs)? {
            ideal_witness = Some(format!("center {}: (a) = {} vs L = {}", i + 1, lhs, rhs));
        }
        if nzd_witness.is_none() && !alg.is_nzd(&a)? {
            nzd_witness = Some(format!("center {}: {} is a zero-divisor", i + 1, c.denominator));
        }
    }
    match ideal_witness {
        None => rep.pass("exceptional_ideal"),
        Some(w) => rep.fail("exceptional_ideal", w),
    };
    match nzd_witness {
        None => rep.pass("denominators_nzd"),
        Some(w) => rep.fail("denominators_nzd", w),
    };

    if extra.is_empty() {
        rep.skip("nzd_preserved", "no element supplied");
    }
    for (k, c) in extra.iter().enumerate() {
        let name = if extra.len() == 1 {
            "nzd_preserved".to_string()
        } else {
            format!("nzd_preserved.{}", k + 1)
        };
        if !base.is_nzd(c)? {
            rep.skip(name, format!("{c} is a zero-divisor in the base"));
        } else if alg.is_nzd(&r.lift(c)?)? {
            rep.pass(name);
        } else {
            rep.fail(name, format!("{c} becomes a zero-divisor"));
        }
    }
    Ok(rep)
}
