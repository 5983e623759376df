use proptest::prelude::*;

use dilatations::algebra::PresentedAlgebra;
use dilatations::dilatation::{check_exceptional, dilate, MultiCenter};
use dilatations::ideal::Ideal;
use dilatations::poly::{Field, Polynomial, Registry};

const VARS: [&str; 3] = ["a", "b", "c"];

/// Sparse polynomials in a, b, c of degree at most 2.
fn poly_text(nonconstant: bool) -> impl Strategy<Value = String> {
    prop::collection::vec((-3i32..=3, [0u8..=1, 0u8..=1, 0u8..=1]), 1..=3).prop_map(move |terms| {
        let mut parts = Vec::new();
        for (c, e) in terms {
            if c == 0 {
                continue;
            }
            let mut mono: Vec<String> = vec![c.to_string()];
            for (v, &k) in VARS.iter().zip(e.iter()) {
                if k > 0 {
                    mono.push(v.to_string());
                }
            }
            // keep the degree at most 2
            mono.truncate(3);
            parts.push(mono.join("*"));
        }
        if parts.is_empty() || (nonconstant && parts.iter().all(|p| !p.contains(char::is_alphabetic))) {
            parts.push("a".into());
        }
        parts.join(" + ").replace("+ -", "- ")
    })
}

fn denominator() -> impl Strategy<Value = String> {
    poly_text(true).prop_filter("terms cancel to a constant", |s| {
        let reg = Registry::new(Field::Rational, VARS).unwrap();
        !Polynomial::parse(&reg, s).unwrap().is_constant()
    })
}

fn center_spec() -> impl Strategy<Value = Vec<(Vec<String>, String)>> {
    prop::collection::vec((prop::collection::vec(poly_text(false), 1..=2), denominator()), 1..=2)
}

fn build(spec: &[(Vec<String>, String)]) -> (std::sync::Arc<PresentedAlgebra>, MultiCenter) {
    let reg = Registry::new(Field::Rational, VARS).unwrap();
    let base = PresentedAlgebra::free(&reg);
    let gens: Vec<Vec<&str>> = spec.iter().map(|(g, _)| g.iter().map(String::as_str).collect()).collect();
    let refs: Vec<(&[&str], &str)> = gens.iter().zip(spec).map(|(g, (_, a))| (g.as_slice(), a.as_str())).collect();
    let center = MultiCenter::parse(&base, &refs).unwrap();
    (base, center)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dilatations_satisfy_the_exceptional_identities(spec in center_spec()) {
        let (base, center) = build(&spec);
        let d = dilate(&center).unwrap();
        // the base is a domain and every denominator is nonzero
        prop_assert!(!d.is_zero_ring());
        let rels = d.algebra().relations();
        for fv in d.fractions() {
            let c = &center.centers()[fv.center];
            let a = d.lift(&c.denominator).unwrap();
            let g = d.lift(&c.ideal.gens()[fv.generator]).unwrap();
            let x = Polynomial::var(d.algebra().registry(), fv.var);
            prop_assert!(rels.contains(&a.mul(&x).sub(&g)).unwrap());
        }
        let rep = check_exceptional(&d, &[base.parse("b").unwrap()]).unwrap();
        prop_assert!(rep.passed(), "{}", rep);
    }

    #[test]
    fn saturation_is_idempotent_and_grows(gens in prop::collection::vec(poly_text(false), 1..=3), f in denominator()) {
        let reg = Registry::new(Field::Rational, VARS).unwrap();
        let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
        let i = Ideal::parse(&reg, &refs).unwrap();
        let f = Polynomial::parse(&reg, &f).unwrap();
        let s = i.saturate(&f).unwrap();
        prop_assert!(s.contains_ideal(&i).unwrap());
        prop_assert!(s.saturate(&f).unwrap().equals(&s).unwrap());
        // one factor at a time agrees with the product
        let g = Polynomial::parse(&reg, "a + b").unwrap();
        let both = i.saturate(&f.mul(&g)).unwrap();
        prop_assert!(i.saturate_product(&[f.clone(), g]).unwrap().equals(&both).unwrap());
    }
}
