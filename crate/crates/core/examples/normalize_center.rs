// Centers sharing a denominator merge, and the merged family has the same
// dilatation.

use dilatations::algebra::PresentedAlgebra;
use dilatations::dilatation::{compare_dilatations, dilate, normalize_center, MultiCenter};
use dilatations::poly::{Field, Registry};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = PresentedAlgebra::free(&Registry::new(Field::Rational, ["a", "g", "h"])?);
    let c = MultiCenter::parse(&a, &[(&["g"], "a"), (&["h"], "a")])?;
    let merged = normalize_center(&c, None)?;
    println!("{c} -> {merged}");
    let rep = compare_dilatations(&dilate(&c)?, &dilate(&merged)?)?;
    if !rep.passed() {
        return Err(rep.to_string().into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
