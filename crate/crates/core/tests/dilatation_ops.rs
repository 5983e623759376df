use std::sync::Arc;

use dilatations::algebra::{AlgebraHom, PresentedAlgebra};
use dilatations::dilatation::*;
use dilatations::ideal::Ideal;
use dilatations::poly::{Field, Registry};
use dilatations::report::Status;

fn base(vars: &[&str], rels: &[&str]) -> Arc<PresentedAlgebra> {
    let r = Registry::new(Field::Rational, vars.iter().copied()).unwrap();
    PresentedAlgebra::from_relations(&r, rels).unwrap()
}

#[test]
fn exceptional_clauses_on_blowup() {
    let a = base(&["a", "b", "g"], &[]);
    let c = MultiCenter::parse(&a, &[(&["g"], "a")]).unwrap();
    let r = dilate(&c).unwrap();
    let rep = check_exceptional(&r, &[a.parse("b").unwrap()]).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.status("nzd_preserved"), Some(Status::Pass));
    assert_eq!(rep.status("exceptional_ideal"), Some(Status::Pass));

    let e = dilate(&MultiCenter::empty(&a)).unwrap();
    assert!(check_exceptional(&e, &[]).unwrap().passed());
}

#[test]
fn zero_ring_check_passes() {
    let a = base(&["u"], &["u^2"]);
    let r = dilate(&MultiCenter::parse(&a, &[(&["u"], "u")]).unwrap()).unwrap();
    let rep = check_exceptional(&r, &[]).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.facts["zero_ring"], "true");
}

#[test]
fn forget_examples() {
    let a = base(&["a", "g"], &[]);
    let c = MultiCenter::parse(&a, &[(&["g"], "a"), (&["a*g"], "a")]).unwrap();
    let full = dilate(&c).unwrap();
    let same = forget_map(&full, &[0, 1]).unwrap();
    assert!(same.report.passed(), "{}", same.report);
    let out = forget_map(&full, &[0]).unwrap();
    assert_eq!(out.report.status("surjective"), Some(Status::Pass), "{}", out.report);
    assert_eq!(out.report.status("injective"), Some(Status::Pass), "{}", out.report);
}

#[test]
fn monopoly_examples() {
    let a = base(&["p", "q", "X", "Y"], &[]);
    let c = MultiCenter::parse(&a, &[(&["X"], "q"), (&["Y"], "p")]).unwrap();
    let out = monopoly_iso(&c).unwrap();
    assert!(out.report.passed(), "{}", out.report);
    assert_eq!(out.mono.to_string(), "{[(p*X, q*Y) / p*q]}");

    let b = base(&["x", "y"], &[]);
    let c = MultiCenter::parse(&b, &[(&["x", "y"], "x"), (&["x", "y"], "y")]).unwrap();
    let out = monopoly_iso(&c).unwrap();
    assert!(out.report.passed(), "{}", out.report);
    assert!(out.mono.centers()[0]
        .ideal
        .equals(&Ideal::parse(b.registry(), &["x^2", "x*y", "y^2"]).unwrap())
        .unwrap());

    let single = MultiCenter::parse(&b, &[(&["y"], "x")]).unwrap();
    assert!(monopoly_iso(&single).unwrap().report.passed());
}

#[test]
fn two_stage_examples() {
    let a = base(&["a", "b", "g", "h"], &[]);
    let c = MultiCenter::parse(&a, &[(&["g"], "a"), (&["h"], "b")]).unwrap();
    assert!(two_stage_iso(&c, &[0]).unwrap().passed());
    assert!(two_stage_iso(&c, &[0, 1]).unwrap().passed());
    let a = base(&["a", "g", "h"], &[]);
    let c = MultiCenter::parse(&a, &[(&["g"], "a"), (&["h"], "a")]).unwrap();
    assert!(two_stage_iso(&c, &[0]).unwrap().passed());
    let merged = normalize_center(&c, None).unwrap();
    assert!(compare_dilatations(&dilate(&c).unwrap(), &dilate(&merged).unwrap()).unwrap().passed());
}

#[test]
fn localize_examples() {
    let u = base(&["u"], &[]);
    let rep = localize_compare(&MultiCenter::parse(&u, &[(&["1"], "u")]).unwrap()).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.status("unit_case.forward_well_defined"), Some(Status::Pass));
    let a = base(&["a", "g"], &[]);
    let rep = localize_compare(&MultiCenter::parse(&a, &[(&["g"], "a")]).unwrap()).unwrap();
    assert!(rep.passed(), "{rep}");
    assert!(localize_compare(&MultiCenter::empty(&a)).unwrap().passed());
}

#[test]
fn open_immersion_examples() {
    let a = base(&["a", "g"], &[]);
    let c = MultiCenter::parse(&a, &[(&["g", "a^2"], "a"), (&["g*a", "a"], "a^2")]).unwrap();
    let rep = open_immersion_iso(&c, &[0], &[(1, 0)]).unwrap();
    assert!(rep.passed(), "{rep}");
    assert!(open_immersion_iso(&c, &[0, 1], &[]).unwrap().passed());
    // the L_2 = (g·a, a²) variant violates a_1 ∈ L_2
    let bad = MultiCenter::parse(&a, &[(&["g", "a^2"], "a"), (&["g*a", "a^2"], "a^2")]).unwrap();
    let rep = open_immersion_iso(&bad, &[0], &[(1, 0)]).unwrap();
    assert!(!rep.passed());
    assert_eq!(rep.clauses.len(), 1);
    // L_2 ⊄ L_1
    let bad = MultiCenter::parse(&a, &[(&["a"], "a"), (&["g", "a"], "a")]).unwrap();
    let rep = open_immersion_iso(&bad, &[0], &[(1, 0)]).unwrap();
    assert!(rep.first_failure().unwrap().witness.as_ref().unwrap().contains("not inside"));
}

#[test]
fn center_kernel_examples() {
    let a = base(&["a", "g"], &[]);
    let r = dilate(&MultiCenter::parse(&a, &[(&["g"], "a")]).unwrap()).unwrap();
    let av = a.parse("a").unwrap();
    let k = center_kernel(&r, &Ideal::parse(a.registry(), &["g"]).unwrap(), &av).unwrap();
    assert!(k.report.passed(), "{}", k.report);
    let k1 = center_kernel(&r, &Ideal::unit(a.registry()), &av).unwrap();
    assert!(k1.report.passed(), "{}", k1.report);
    assert!(k1.generated.is_unit().unwrap());

    let b = base(&["a", "g", "h"], &[]);
    let r = dilate(&MultiCenter::parse(&b, &[(&["g"], "a"), (&["h"], "a^2")]).unwrap()).unwrap();
    let k = center_kernel(&r, &Ideal::parse(b.registry(), &["g", "h"]).unwrap(), &b.parse("a").unwrap()).unwrap();
    assert!(k.report.passed(), "{}", k.report);
}

#[test]
fn iterate_examples() {
    let a = base(&["a", "g"], &[]);
    let c = MultiCenter::parse(&a, &[(&["g"], "a")]).unwrap();
    let av = a.parse("a").unwrap();
    assert!(iterate_iso(&c, &av, 0).unwrap().passed());
    let rep = iterate_iso(&c, &av, 1).unwrap();
    assert!(rep.passed(), "{rep}");
    let b = base(&["a", "g", "h"], &[]);
    let c = MultiCenter::parse(&b, &[(&["g", "h"], "a"), (&["g"], "a")]).unwrap();
    let rep = iterate_iso(&c, &b.parse("a").unwrap(), 1).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn base_change_examples() {
    let a = base(&["a", "g"], &[]);
    let c = MultiCenter::parse(&a, &[(&["g"], "a")]).unwrap();
    assert!(base_change_compare(&c, &AlgebraHom::identity(&a)).unwrap().passed());

    let bw = base(&["a", "g", "w"], &[]);
    let h = AlgebraHom::parse(&a, &bw, &["a", "g"]).unwrap();
    let rep = base_change_compare(&c, &h).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.status("flat_torsion_trivial"), Some(Status::Pass));

    let bq = base(&["a", "g"], &["g"]);
    let h = AlgebraHom::parse(&a, &bq, &["a", "g"]).unwrap();
    let rep = base_change_compare(&c, &h).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn conic_examples() {
    let a = base(&["a"], &[]);
    let rep = conic_iso(&MultiCenter::parse(&a, &[(&["a"], "a")]).unwrap()).unwrap();
    assert!(rep.passed(), "{rep}");
    let b = base(&["a", "g"], &[]);
    let rep = conic_iso(&MultiCenter::parse(&b, &[(&["g", "a"], "a")]).unwrap()).unwrap();
    assert!(rep.passed(), "{rep}");
    assert!(conic_iso(&MultiCenter::empty(&b)).unwrap().passed());
}

#[test]
fn universal_examples() {
    let a = base(&["a", "g"], &[]);
    let r = dilate(&MultiCenter::parse(&a, &[(&["g"], "a")]).unwrap()).unwrap();
    let out = universal_factor(&r, r.structural(), Some(&AlgebraHom::identity(r.algebra()))).unwrap();
    let UniversalOutcome::Factored { hom, report } = out else { panic!() };
    assert!(report.passed());
    assert!(hom.maps_equal(&AlgebraHom::identity(r.algebra())).unwrap());

    let b = base(&["a"], &[]);
    let chi = AlgebraHom::parse(&a, &b, &["a", "a^2"]).unwrap();
    let UniversalOutcome::Factored { hom, report } = universal_factor(&r, &chi, None).unwrap() else { panic!() };
    assert!(report.passed());
    assert_eq!(hom.images()[2], b.parse("a").unwrap());

    let chi = AlgebraHom::parse(&a, &b, &["a", "1"]).unwrap();
    assert!(matches!(universal_factor(&r, &chi, None).unwrap(), UniversalOutcome::Refused { .. }));
}
