// Dilating at all centers at once equals dilating at some first, then at
// the rest pushed forward.

use dilatations::algebra::PresentedAlgebra;
use dilatations::dilatation::{two_stage_iso, MultiCenter};
use dilatations::poly::{Field, Registry};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let reg = Registry::new(Field::Rational, ["a", "b", "g", "h"])?;
    let a = PresentedAlgebra::free(&reg);
    let center = MultiCenter::parse(&a, &[(&["g"], "a"), (&["h"], "b")])?;
    let rep = two_stage_iso(&center, &[0])?;
    print!("{rep}");
    if !rep.passed() {
        return Err("two-stage certificate failed".into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
