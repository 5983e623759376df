// A subgroup commuting with every `H_i` normalizes the dilated group; the
// check names the hypothesis when it fails.

use dilatations::congruence::{normalizer_check, GroupSpec, LevelRing, SubgroupKind};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z8 = LevelRing::new(2, 3)?;
    let filt = [(SubgroupKind::Trivial, 1), (SubgroupKind::Torus, 2)];
    let rep = normalizer_check(&GroupSpec::gl(2), &SubgroupKind::Torus, &filt, &z8)?;
    print!("{rep}");
    if !rep.passed() {
        return Err(rep.to_string().into());
    }
    let bad = [(SubgroupKind::Trivial, 1), (SubgroupKind::Torus, 1)];
    let rep = normalizer_check(&GroupSpec::sl(2), &SubgroupKind::Full, &bad, &z8)?;
    print!("{rep}");
    if rep.passed() {
        return Err("SL(2) does not commute with its torus".into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
