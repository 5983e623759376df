// Counts homs out of the dilatation of `ℤ/6` at `[(3)/2]` into every `ℤ/n`,
// `n ≤ 12`, against the universal-property prediction.

use dilatations::oracle::{universal_property_scan, FiniteCenter, FiniteRing};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z6 = FiniteRing::integers_mod(6)?;
    let c = FiniteCenter::generated(&z6, &[(&[3], 2)]);
    let catalog = (1..=12).map(FiniteRing::integers_mod).collect::<Result<Vec<_>, _>>()?;
    let rep = universal_property_scan(&z6, &c, &catalog)?;
    for (k, v) in &rep.facts {
        println!("{k}: {v}");
    }
    if !rep.passed() {
        return Err(rep.to_string().into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
