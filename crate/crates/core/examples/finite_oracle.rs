// Dilatations of finite rings two ways: formal fractions up to the symbol
// equivalence, and the subring of the localization.

use dilatations::oracle::{dilate_oracle_fractions, localize_finite, FiniteCenter, FiniteRing};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z6 = FiniteRing::integers_mod(6)?;
    let l = localize_finite(&z6, 2)?;
    println!("Z/6 with 2 inverted: {} elements, idempotent {}", l.ring.size(), l.e);
    for n in [4u32, 6, 8, 9, 12] {
        let a = FiniteRing::integers_mod(n)?;
        let c = FiniteCenter::generated(&a, &[(&[(n / 2) as u16 % n as u16], 2)]);
        let d = dilate_oracle_fractions(&a, &c, 4096)?;
        println!("Z/{n} at [({})/2]: {} elements", n / 2, d.ring.size());
        if !d.report.passed() {
            return Err(d.report.to_string().into());
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
