// Dilate `ℚ[a, g]` at `[(g) / a]` and print the presentation.

use dilatations::algebra::PresentedAlgebra;
use dilatations::dilatation::{dilate, MultiCenter};
use dilatations::poly::{Field, Registry};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let reg = Registry::new(Field::Rational, ["a", "g"])?;
    let a = PresentedAlgebra::free(&reg);
    let center = MultiCenter::parse(&a, &[(&["g"], "a")])?;
    let d = dilate(&center)?;
    println!("{center} -> {}", d.algebra());
    for (var, meaning) in d.dictionary() {
        println!("  {var} = {meaning}");
    }
    // a regular sequence needs no saturation
    assert!(!d.saturation_changed());
    assert!(!d.is_zero_ring());

    // a nilpotent denominator kills everything
    let nil = PresentedAlgebra::from_relations(&Registry::new(Field::Rational, ["u"])?, &["u^2"])?;
    let z = dilate(&MultiCenter::parse(&nil, &[(&["u"], "u")])?)?;
    println!("Q[u]/(u^2) at [(u)/u] -> {}", z.algebra());
    assert!(z.is_zero_ring());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
