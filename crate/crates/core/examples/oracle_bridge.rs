// The symbolic presentation of a finite `𝔽_p`-algebra dilatation is
// isomorphic to the one the oracle enumerates.

use dilatations::algebra::PresentedAlgebra;
use dilatations::dilatation::MultiCenter;
use dilatations::oracle::compare_with_symbolic;
use dilatations::poly::{Field, Registry};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let reg = Registry::new(Field::prime(2)?, ["y"])?;
    let a = PresentedAlgebra::from_relations(&reg, &["y^3 - y"])?;
    let center = MultiCenter::parse(&a, &[(&["y - 1"], "y")])?;
    let rep = compare_with_symbolic(&center, 4096)?;
    print!("{rep}");
    if !rep.passed() {
        return Err("bridge failed".into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
