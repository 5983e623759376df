// The exceptional identities of a dilatation: denominators become regular
// and `a_i·A′ = L_i·A′`.

use dilatations::algebra::PresentedAlgebra;
use dilatations::dilatation::{check_exceptional, dilate, MultiCenter};
use dilatations::poly::{Field, Registry};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let reg = Registry::new(Field::Rational, ["a", "b", "x", "y"])?;
    let a = PresentedAlgebra::from_relations(&reg, &["a*y - b*x"])?;
    let center = MultiCenter::parse(&a, &[(&["x", "y"], "a"), (&["y"], "b")])?;
    let d = dilate(&center)?;
    println!("{}", d.algebra());
    let rep = check_exceptional(&d, &[])?;
    print!("{rep}");
    if !rep.passed() {
        return Err(format!("exceptional identities fail: {:?}", rep.first_failure()).into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
