// `G_s/G_r ≅ 𝔤_s/𝔤_r` via `g ↦ g − 1` for dilated matrix groups over
// `ℤ/p^N`.

use dilatations::congruence::{congruent_iso_check, GroupSpec, LevelRing, SubgroupKind};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z16 = LevelRing::new(2, 4)?;
    let rep = congruent_iso_check(&GroupSpec::sl(2), &[SubgroupKind::Trivial], &[1], &[2], &z16)?;
    println!("SL(2) over {z16}: |G_1/G_2| = {}", rep.facts["group_quotient_order"]);
    if !rep.passed() {
        return Err(rep.to_string().into());
    }
    let hs = [SubgroupKind::Trivial, SubgroupKind::Torus];
    let rep = congruent_iso_check(&GroupSpec::sl(2), &hs, &[1, 2], &[2, 3], &z16)?;
    println!("SL(2) with a torus level: |quotient| = {}", rep.facts["group_quotient_order"]);
    if !rep.passed() {
        return Err(rep.to_string().into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
