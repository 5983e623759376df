// The double deformation space of `V(x, y) ⊂ V(x) ⊂ 𝔸²` as a dilatation of
// `ℚ[x, y, s, t]`.

use dilatations::algebra::PresentedAlgebra;
use dilatations::poly::{Field, Registry};
use dilatations::rost::{rost_space, rost_subalgebra_check, RostInput};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = PresentedAlgebra::free(&Registry::new(Field::Rational, ["x", "y"])?);
    let r = RostInput::parse(&a, &["x"], &["x", "y"])?;
    let d = rost_space(&r)?;
    println!("{}", d.algebra());
    for (var, meaning) in d.dictionary() {
        println!("  {var} = {meaning}");
    }
    let rep = rost_subalgebra_check(&r, 3)?;
    println!("checked {} elements in 49 bidegrees", rep.facts["elements_checked"]);
    if !rep.passed() {
        return Err(rep.to_string().into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
