use dilatations::congruence::*;
use dilatations::report::Status;

use SubgroupKind::{Levi, Torus, Trivial};

#[test]
fn sl2_principal_quotient() {
    let r = LevelRing::new(2, 4).unwrap();
    let rep = congruent_iso_check(&GroupSpec::sl(2), &[Trivial], &[1], &[2], &r).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.facts["group_quotient_order"], "8");
}

#[test]
fn sl2_torus_filtration() {
    let r = LevelRing::new(2, 4).unwrap();
    let rep = congruent_iso_check(&GroupSpec::sl(2), &[Trivial, Torus], &[1, 2], &[2, 3], &r).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn gl2_levi_filtration() {
    let r = LevelRing::new(2, 4).unwrap();
    let rep = congruent_iso_check(&GroupSpec::gl(2), &[Trivial, Levi(vec![1, 1])], &[1, 2], &[2, 3], &r).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn trivial_filtration_orders() {
    for (g, p, n) in [(GroupSpec::sl(2), 2, 4), (GroupSpec::gl(2), 2, 4), (GroupSpec::sl(2), 3, 3), (GroupSpec::gl(2), 3, 3)] {
        let r = LevelRing::new(p, n).unwrap();
        let rep = congruent_iso_check(&g, &[Trivial], &[1], &[2], &r).unwrap();
        assert!(rep.passed(), "{g} {rep}");
        let expected = (p as usize).pow(g.lie_dimension() as u32);
        assert_eq!(rep.facts["group_quotient_order"], expected.to_string());
    }
}

#[test]
fn points_monotone_and_lie_closed() {
    let r = LevelRing::new(2, 3).unwrap();
    let g = GroupSpec::sl(2);
    let big = group_points(&g, &[(Trivial, 1)], &r).unwrap();
    let small = group_points(&g, &[(Trivial, 2)], &r).unwrap();
    assert!(small.elements().iter().all(|x| big.contains(x)));
    let mixed = lie_points(&g, &[(Trivial, 1), (Torus, 2)], &r).unwrap();
    assert!(mixed.verify().is_ok());
}

#[test]
fn normalizer_failure_names_the_hypothesis() {
    let r = LevelRing::new(2, 3).unwrap();
    let rep = normalizer_check(&GroupSpec::sl(2), &SubgroupKind::Full, &[(Trivial, 1), (Torus, 1)], &r).unwrap();
    assert_eq!(rep.status("hypothesis.1"), Some(Status::Fail));
}
