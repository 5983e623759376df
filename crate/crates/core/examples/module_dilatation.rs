// Dilating a finite module along with its ring.

use std::sync::Arc;

use dilatations::oracle::{module_dilate_oracle, FiniteCenter, FiniteModule, FiniteRing};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z6 = Arc::new(FiniteRing::integers_mod(6)?);
    let c = FiniteCenter::generated(&z6, &[(&[3], 2)]);
    let d = module_dilate_oracle(&FiniteModule::from_ring(&z6), &c, 4096)?;
    println!("Z/6 as a module: dilated to {} elements over a ring of {}", d.module.size(), d.module.ring().size());
    if !d.report.passed() {
        return Err(d.report.to_string().into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
