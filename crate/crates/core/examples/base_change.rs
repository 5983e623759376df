// Dilatation commutes with flat base change; in general the base change
// agrees after killing denominator torsion.

use dilatations::algebra::{AlgebraHom, PresentedAlgebra};
use dilatations::dilatation::{base_change_compare, MultiCenter};
use dilatations::poly::{Field, Registry};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = PresentedAlgebra::free(&Registry::new(Field::Rational, ["a", "g"])?);
    let center = MultiCenter::parse(&a, &[(&["g"], "a")])?;
    let flat = PresentedAlgebra::free(&Registry::new(Field::Rational, ["a", "g", "w"])?);
    let quotient = PresentedAlgebra::from_relations(&Registry::new(Field::Rational, ["a", "g"])?, &["g"])?;
    for b in [flat, quotient] {
        let h = AlgebraHom::parse(&a, &b, &["a", "g"])?;
        let rep = base_change_compare(&center, &h)?;
        println!("A -> {b}: {}", if rep.passed() { "pass" } else { "FAIL" });
        if !rep.passed() {
            return Err(rep.to_string().into());
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
