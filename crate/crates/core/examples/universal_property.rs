// A map `χ: A → B` factors through `A′` exactly when every `χ(a_i)` is
// regular and `χ(M_i) ⊆ χ(a_i)·B`.

use dilatations::algebra::{AlgebraHom, PresentedAlgebra};
use dilatations::dilatation::{dilate, universal_factor, MultiCenter, UniversalOutcome};
use dilatations::poly::{Field, Registry};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = PresentedAlgebra::free(&Registry::new(Field::Rational, ["a", "g"])?);
    let d = dilate(&MultiCenter::parse(&a, &[(&["g"], "a")])?)?;
    let b = PresentedAlgebra::free(&Registry::new(Field::Rational, ["t"])?);
    for images in [["t", "t^2"], ["t", "1"]] {
        let chi = AlgebraHom::parse(&a, &b, &images)?;
        match universal_factor(&d, &chi, None)? {
            UniversalOutcome::Factored { hom, .. } => {
                let shown: Vec<String> = hom.images().iter().map(|p| p.to_string()).collect();
                println!("(a, g) -> {images:?} factors: A' -> B sends {}", shown.join(", "));
            }
            UniversalOutcome::Refused { reason } => println!("(a, g) -> {images:?} refused: {reason}"),
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
