// The conic (Rees-type) algebra modulo `ρ_i − 1` recovers the dilatation.

use dilatations::algebra::PresentedAlgebra;
use dilatations::dilatation::{conic_iso, MultiCenter};
use dilatations::poly::{Field, Registry};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let reg = Registry::new(Field::Rational, ["a", "g"])?;
    let a = PresentedAlgebra::free(&reg);
    let center = MultiCenter::parse(&a, &[(&["g", "a"], "a")])?;
    let rep = conic_iso(&center)?;
    print!("{rep}");
    for (k, v) in &rep.facts {
        println!("  {k}: {v}");
    }
    if !rep.passed() {
        return Err("conic certificate failed".into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
