use super::dilate::{dilate_oracle_subring, exceptional_checks, FiniteCenter, OracleGenerator};
use super::ring::FiniteRing;
use crate::error::{Error, Result};
use crate::report::Report;

/// Catalog rings larger than this are rejected.
pub const CATALOG_RING_CAP: usize = 64;

/// Candidate assignments tried per hom search.
const HOM_BUDGET: u64 = 1_000_000;

/// For every `f: A → B` in the catalog with all `f(a_i)` regular, counts the
/// `A`-algebra homs `A′ → B` and compares with the 0/1 prediction
/// "`f(M_i)·B ⊆ f(a_i)·B` for all `i`".
pub fn universal_property_scan(a: &FiniteRing, c: &FiniteCenter, catalog: &[FiniteRing]) -> Result<Report> {
    let d = dilate_oracle_subring(a, c)?;
    let mut rep = Report::new("universal-scan");
    let fraction_elems: Vec<u16> = {
        let mut v: Vec<u16> = d
            .generators
            .iter()
            .filter(|(g, _)| matches!(g, OracleGenerator::Fraction { .. }))
            .map(|(_, x)| *x)
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let (mut checked, mut skipped, mut mismatch, mut multiple) = (0usize, 0usize, None, None);
    for b in catalog {
        if b.size() > CATALOG_RING_CAP {
            return Err(Error::Precondition(format!("{} has more than {CATALOG_RING_CAP} elements", b.name())));
        }
        let homs = a.homs_to(b, HOM_BUDGET)?;
        let mut ring_counts = Vec::new();
        for f in &homs {
            if c.centers().iter().any(|(_, ai)| !b.is_nzd(f[*ai as usize])) {
                skipped += 1;
                ring_counts.push("skip".to_string());
                continue;
            }
            checked += 1;
            let predicted = c.centers().iter().all(|(m, ai)| {
                let fa = f[*ai as usize];
                m.iter().all(|&x| b.elements().any(|y| b.mul(fa, y) == f[x as usize]))
            });
            let count = count_factorizations(&d.ring, &d.structural, &fraction_elems, a, b, f)?;
            ring_counts.push(count.to_string());
            if count >= 2 && multiple.is_none() {
                multiple = Some(format!("{}: {count} factorizations", b.name()));
            }
            if count != usize::from(predicted) && mismatch.is_none() {
                mismatch = Some(format!("{}: predicted {}, found {count}", b.name(), usize::from(predicted)));
            }
        }
        rep.fact(format!("counts.{}", b.name()), if ring_counts.is_empty() { "no homs".into() } else { ring_counts.join(",") });
    }
    rep.fact("homs_checked", checked);
    rep.fact("homs_skipped", skipped);
    rep.clause("prediction_matches", mismatch.is_none(), mismatch);
    rep.clause("at_most_one", multiple.is_none(), multiple);
    Ok(rep)
}

/// Homs `g: A′ → B` with `g∘ι = f`, by trying every image for each fraction
/// generator.
fn count_factorizations(
    dil: &FiniteRing,
    structural: &[u16],
    fractions: &[u16],
    a: &FiniteRing,
    b: &FiniteRing,
    f: &[u16],
) -> Result<usize> {
    let base: Vec<(u16, u16)> = a.elements().map(|x| (structural[x as usize], f[x as usize])).collect();
    let total = (b.size() as u64).checked_pow(fractions.len() as u32).filter(|&n| n <= HOM_BUDGET);
    let Some(total) = total else {
        return Err(Error::ResourceLimit(format!(
            "{}^{} factorization candidates exceed the budget",
            b.size(),
            fractions.len()
        )));
    };
    let mut found: Vec<Vec<u16>> = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut seeds = base.clone();
        for &x in fractions {
            seeds.push((x, (c % b.size() as u64) as u16));
            c /= b.size() as u64;
        }
        if let Some(g) = dil.extend_hom(b, &seeds) {
            if !found.contains(&g) {
                found.push(g);
            }
        }
    }
    Ok(found.len())
}

/// Reducedness is inherited, a field with nonzero denominators dilates to
/// itself, and the exceptional identities hold.
pub fn preservation_checks(a: &FiniteRing, c: &FiniteCenter) -> Result<Report> {
    let d = dilate_oracle_subring(a, c)?;
    let mut rep = Report::new("preservation");
    if a.is_reduced() {
        let red = d.ring.is_reduced();
        rep.clause("reduced_preserved", red, (!red).then(|| "nilpotent in A′".to_string()));
    } else {
        rep.skip("reduced_preserved", format!("{} is not reduced", a.name()));
    }
    if a.is_domain() && c.centers().iter().all(|(_, x)| *x != a.zero()) {
        let mut sorted = d.structural.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let iso = d.ring.size() == a.size() && sorted.len() == a.size();
        rep.clause("field_unchanged", iso, (!iso).then(|| format!("|A′| = {}", d.ring.size())));
    } else {
        rep.skip("field_unchanged", "not a field with nonzero denominators");
    }
    rep.absorb("exceptional", &exceptional_checks(a, c, &d));
    rep.fact("size", d.ring.size());
    Ok(rep)
}
