// Dropping a center gives a map of dilatations, onto when the dropped
// ideal already lies in `(a_i)`, injective when `a_i` is regular.

use dilatations::algebra::PresentedAlgebra;
use dilatations::dilatation::{dilate, forget_map, MultiCenter};
use dilatations::poly::{Field, Registry};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = PresentedAlgebra::free(&Registry::new(Field::Rational, ["a", "g"])?);
    let full = dilate(&MultiCenter::parse(&a, &[(&["g"], "a"), (&["a*g"], "a")])?)?;
    let out = forget_map(&full, &[0])?;
    print!("{}", out.report);
    if !out.report.passed() {
        return Err("forget certificate failed".into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
