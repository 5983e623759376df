// The kernel of `A′ → A′/…` at a center, computed two ways: generated by
// `M_0·A′` and by elimination.

use dilatations::algebra::PresentedAlgebra;
use dilatations::dilatation::{center_kernel, dilate, MultiCenter};
use dilatations::ideal::Ideal;
use dilatations::poly::{Field, Registry};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = PresentedAlgebra::free(&Registry::new(Field::Rational, ["a", "g"])?);
    let d = dilate(&MultiCenter::parse(&a, &[(&["g"], "a")])?)?;
    let k = center_kernel(&d, &Ideal::parse(a.registry(), &["g"])?, &a.parse("a")?)?;
    println!("generated: {}", k.generated);
    if let Some(e) = &k.eliminated {
        println!("eliminated: {e}");
    }
    if !k.report.passed() {
        return Err(k.report.to_string().into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
