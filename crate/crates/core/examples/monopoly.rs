// Two centers collapse to one: `{[(x)/a], [(y)/b]}` and `[(b·x, a·y) / a·b]`
// give the same algebra.

use dilatations::algebra::PresentedAlgebra;
use dilatations::dilatation::{monopoly_iso, MultiCenter};
use dilatations::poly::{Field, Registry};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let reg = Registry::new(Field::Rational, ["a", "b", "c", "x", "y", "z"])?;
    let a = PresentedAlgebra::free(&reg);
    for spec in [
        vec![(&["x"][..], "a"), (&["y"][..], "b")],
        vec![(&["x"][..], "a"), (&["y"][..], "b"), (&["z"][..], "c")],
    ] {
        let center = MultiCenter::parse(&a, &spec)?;
        let out = monopoly_iso(&center)?;
        println!("{center} ~ {}", out.mono);
        if !out.report.passed() {
            return Err(out.report.to_string().into());
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
