use std::collections::HashMap;

use rayon::prelude::*;

use super::matrix::{format_mat, identity, inverse, mat_add, mat_mul, mat_sub, trace, Coeffs, Mat, Zmod};
use super::points::{group_points, lie_points, subgroup_points, CANDIDATE_BUDGET};
use super::{Ambient, GroupSpec, LevelRing, SubgroupKind};
use crate::error::{Error, Result};
use crate::oracle::FiniteRing;
use crate::report::Report;

/// Checks `s_i ≥ s_0`, `r_i ≥ r_0`, `r_i ≥ s_i`, `r_i − s_i ≤ s_0`,
/// `max r_i ≤ N` and `H_0 = e`; returns the first violation.
fn hypotheses(hs: &[SubgroupKind], s: &[u32], r: &[u32], level: u32) -> Option<String> {
    if hs.is_empty() || hs.len() != s.len() || hs.len() != r.len() {
        return Some("H, s and r must be nonempty and of equal length".into());
    }
    if hs[0] != SubgroupKind::Trivial {
        return Some(format!("H_0 = {} is not trivial", hs[0]));
    }
    for i in 0..hs.len() {
        if s[i] < s[0] {
            return Some(format!("s_{i} = {} < s_0 = {}", s[i], s[0]));
        }
        if r[i] < r[0] {
            return Some(format!("r_{i} = {} < r_0 = {}", r[i], r[0]));
        }
        if r[i] < s[i] {
            return Some(format!("r_{i} = {} < s_{i} = {}", r[i], s[i]));
        }
        if r[i] - s[i] > s[0] {
            return Some(format!("r_{i} - s_{i} = {} > s_0 = {}", r[i] - s[i], s[0]));
        }
        if r[i] > level {
            return Some(format!("r_{i} = {} > N = {level}", r[i]));
        }
    }
    None
}

/// Builds `G_s / G_r` and `𝔤_s / 𝔤_r` and certifies that `g ↦ g − 1` on
/// coset representatives is a well-defined bijective homomorphism. For `SL_n`
/// the trace of `g − 1` is subtracted from its last diagonal entry.
pub fn congruent_iso_check(
    g: &GroupSpec,
    hs: &[SubgroupKind],
    s: &[u32],
    r: &[u32],
    ring: &LevelRing,
) -> Result<Report> {
    let mut rep = Report::new("congruence");
    rep.fact("group", g);
    rep.fact("ring", ring);
    if let Some(w) = hypotheses(hs, s, r, ring.level()) {
        rep.fail("hypotheses", w);
        return Ok(rep);
    }
    rep.pass("hypotheses");
    let fs: Vec<(SubgroupKind, u32)> = hs.iter().cloned().zip(s.iter().copied()).collect();
    let fr: Vec<(SubgroupKind, u32)> = hs.iter().cloned().zip(r.iter().copied()).collect();
    let gs = group_points(g, &fs, ring)?;
    let gr = group_points(g, &fr, ring)?;
    let ls = lie_points(g, &fs, ring)?;
    let lr = lie_points(g, &fr, ring)?;
    let normal = gs.normalizes(&gr);
    rep.clause("normal_subgroup", normal.is_ok(), normal.err());

    let c = ring.coeffs();
    let n = g.n;
    let one = identity(&c, n);

    // group cosets g·G_r
    let mut gcoset: HashMap<&Mat, usize> = HashMap::new();
    let mut greps: Vec<&Mat> = Vec::new();
    for x in gs.elements() {
        if gcoset.contains_key(x) {
            continue;
        }
        let id = greps.len();
        greps.push(x);
        for k in gr.elements() {
            let y = mat_mul(&c, n, x, k);
            match gs.position(&y) {
                Some(pos) => {
                    gcoset.insert(&gs.elements()[pos], id);
                }
                None => {
                    rep.fail("normal_subgroup", format!("{} escapes G_s", format_mat(n, &y)));
                    return Ok(rep);
                }
            }
        }
    }
    // lattice cosets x + 𝔤_r
    let mut lcoset: HashMap<Mat, usize> = HashMap::new();
    let mut lcount = 0usize;
    for x in ls.elements() {
        if lcoset.contains_key(x) {
            continue;
        }
        for k in lr.elements() {
            lcoset.insert(mat_add(&c, x, k), lcount);
        }
        lcount += 1;
    }
    rep.fact("group_quotient_order", greps.len());
    rep.fact("lie_quotient_order", lcount);
    rep.fact("group_order_s", gs.order());
    rep.fact("group_order_r", gr.order());
    rep.clause(
        "orders_equal",
        greps.len() == lcount,
        (greps.len() != lcount).then(|| format!("{} vs {lcount}", greps.len())),
    );

    // g − 1 has trace in p^{2 s_0}; for SL_n it is moved onto the last
    // diagonal entry so the image lies in sl_n
    let log = |x: &Mat| -> Mat {
        let mut y = mat_sub(&c, x, &one);
        if g.ambient == Ambient::SL {
            let t = trace(&c, n, &y);
            let last = n * n - 1;
            y[last] = c.sub(y[last], t);
        }
        y
    };
    let phi = |x: &Mat| -> Option<usize> { lcoset.get(&log(x)).copied() };
    let rep_images: Vec<Option<usize>> = greps.iter().map(|x| phi(x)).collect();
    let well_defined = gs.elements().par_iter().find_map_any(|x| {
        let id = gcoset[x];
        match (phi(x), rep_images[id]) {
            (Some(a), Some(b)) if a == b => None,
            (None, _) | (_, None) => Some(format!("{} - 1 is not in the Lie lattice", format_mat(n, x))),
            _ => Some(format!(
                "{} and {} share a coset but not an image",
                format_mat(n, x),
                format_mat(n, greps[id])
            )),
        }
    });
    rep.clause("well_defined", well_defined.is_none(), well_defined.clone());
    if well_defined.is_some() {
        return Ok(rep);
    }
    let mut images: Vec<usize> = rep_images.iter().map(|x| x.unwrap()).collect();
    images.sort_unstable();
    images.dedup();
    let bijective = images.len() == greps.len() && greps.len() == lcount;
    rep.clause(
        "bijective",
        bijective,
        (!bijective).then(|| format!("{} distinct images of {} cosets", images.len(), greps.len())),
    );
    let hom = greps.par_iter().find_map_any(|a| {
        greps.iter().find_map(|b| {
            let lhs = phi(&mat_mul(&c, n, a, b));
            let sum = mat_add(&c, &log(a), &log(b));
            let rhs = lcoset.get(&sum).copied();
            (lhs != rhs || lhs.is_none()).then(|| format!("({}, {})", format_mat(n, a), format_mat(n, b)))
        })
    });
    rep.clause("homomorphism", hom.is_none(), hom);
    Ok(rep)
}

/// Whether every element of `k` commutes with every element of `h`.
fn commute<C: Coeffs + ?Sized>(c: &C, n: usize, k: &[Mat], h: &[Mat]) -> Option<String> {
    k.par_iter().find_map_any(|x| {
        h.iter().find_map(|y| {
            (mat_mul(c, n, x, y) != mat_mul(c, n, y, x)).then(|| format!("{} and {}", format_mat(n, x), format_mat(n, y)))
        })
    })
}

/// Verifies that `K` commutes with each `H_i` over `ℤ/p^{r_i}` and over
/// `(ℤ/p^{r_i})[ε]/(ε³)`, then that `K(ℤ/p^N)` conjugates the dilated points
/// into themselves.
pub fn normalizer_check(
    g: &GroupSpec,
    k: &SubgroupKind,
    filtration: &[(SubgroupKind, u32)],
    ring: &LevelRing,
) -> Result<Report> {
    let mut rep = Report::new("normalizer");
    let n = g.n;
    let mut hypothesis_ok = true;
    for (i, (h, r)) in filtration.iter().enumerate() {
        let name = format!("hypothesis.{i}");
        let level = Zmod(ring.power(*r));
        let kp = subgroup_points(g, k, &level, CANDIDATE_BUDGET)?;
        let hp = subgroup_points(g, h, &level, CANDIDATE_BUDGET)?;
        if let Some(w) = commute(&level, n, &kp, &hp) {
            rep.fail(name, format!("over Z/{}: {w}", level.0));
            hypothesis_ok = false;
            continue;
        }
        // points with nilpotents see the group schemes, not just their
        // (possibly trivial) points over ℤ/p^r
        let infinitesimal = || -> Result<(String, Option<String>)> {
            let eps = FiniteRing::quotient_univariate(level.0, &[0, 0, 0, 1])?;
            let kp = subgroup_points(g, k, &eps, 1 << 16)?;
            let hp = subgroup_points(g, h, &eps, 1 << 16)?;
            Ok((eps.name().to_string(), commute(&eps, n, &kp, &hp)))
        };
        match infinitesimal() {
            Ok((_, None)) => {
                rep.pass(name);
            }
            Ok((ring_name, Some(w))) => {
                rep.fail(name, format!("over {ring_name}: {w}"));
                hypothesis_ok = false;
            }
            Err(e @ (Error::ResourceLimit(_) | Error::SizeCap(_))) => {
                rep.pass(&name);
                rep.skip(format!("{name}.infinitesimal"), e.to_string());
            }
            Err(e) => return Err(e),
        }
    }
    if !hypothesis_ok {
        rep.skip("normalizes", "hypothesis fails");
        return Ok(rep);
    }
    let pts = group_points(g, filtration, ring)?;
    let c = ring.coeffs();
    let kn = subgroup_points(g, k, &c, CANDIDATE_BUDGET)?;
    rep.fact("points_order", pts.order());
    rep.fact("k_order", kn.len());
    let bad = kn.par_iter().find_map_any(|x| {
        let xi = inverse(&c, n, x).expect("group element");
        pts.elements().iter().find_map(|y| {
            let conj = mat_mul(&c, n, &mat_mul(&c, n, x, y), &xi);
            (!pts.contains(&conj)).then(|| format!("{} moves {}", format_mat(n, x), format_mat(n, y)))
        })
    });
    rep.clause("normalizes", bad.is_none(), bad);
    Ok(rep)
}
