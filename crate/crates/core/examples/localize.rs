// Unit ideals give the localization, and every dilatation sits inside the
// localization at the product of its denominators.

use dilatations::algebra::PresentedAlgebra;
use dilatations::dilatation::{localize_compare, MultiCenter};
use dilatations::poly::{Field, Registry};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let reg = Registry::new(Field::Rational, ["u", "g"])?;
    let a = PresentedAlgebra::free(&reg);
    for spec in [[(&["1"][..], "u")], [(&["g"][..], "u")]] {
        let center = MultiCenter::parse(&a, &spec)?;
        let rep = localize_compare(&center)?;
        println!("{center}: {}", if rep.passed() { "pass" } else { "FAIL" });
        if !rep.passed() {
            return Err(rep.to_string().into());
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
