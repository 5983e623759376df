// When `a_1 ∈ L_2 ⊆ L_1`, the second center only inverts `a_2/a_1`.

use dilatations::algebra::PresentedAlgebra;
use dilatations::dilatation::{open_immersion_iso, MultiCenter};
use dilatations::poly::{Field, Registry};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let reg = Registry::new(Field::Rational, ["a", "g"])?;
    let a = PresentedAlgebra::free(&reg);
    let center = MultiCenter::parse(&a, &[(&["g", "a^2"], "a"), (&["g*a", "a"], "a^2")])?;
    let rep = open_immersion_iso(&center, &[0], &[(1, 0)])?;
    print!("{rep}");
    if !rep.passed() {
        return Err("open immersion certificate failed".into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
