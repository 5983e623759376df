// Ideal arithmetic behind the presentations: Gröbner bases, saturation,
// radical membership.

use dilatations::ideal::Ideal;
use dilatations::poly::{Field, Polynomial, Registry};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let reg = Registry::new(Field::Rational, ["a", "x", "y"])?;
    let i = Ideal::parse(&reg, &["a*x", "a*y - x*y"])?;
    println!("I = {i}");
    println!("GB(I) = {:?}", i.groebner()?.iter().map(|g| g.to_string()).collect::<Vec<_>>());
    let a = Polynomial::parse(&reg, "a")?;
    let sat = i.saturate(&a)?;
    println!("I : a^oo = {}", sat.minimized()?);
    assert!(sat.contains(&Polynomial::parse(&reg, "x")?)?);
    let nil = Ideal::parse(&reg, &["x^3"])?;
    assert!(nil.radical_contains(&Polynomial::parse(&reg, "x")?)?);
    assert!(!nil.radical_contains(&a)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
