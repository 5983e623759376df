// Repeating a center `[M/a]` matches a single center with higher powers.

use dilatations::algebra::PresentedAlgebra;
use dilatations::dilatation::{iterate_iso, MultiCenter};
use dilatations::poly::{Field, Registry};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let reg = Registry::new(Field::Rational, ["a", "g", "h"])?;
    let a = PresentedAlgebra::free(&reg);
    let center = MultiCenter::parse(&a, &[(&["g", "h"], "a"), (&["g"], "a")])?;
    let rep = iterate_iso(&center, &a.parse("a")?, 1)?;
    print!("{rep}");
    if !rep.passed() {
        return Err("iteration certificate failed".into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
