use std::collections::HashMap;

use rayon::prelude::*;

use super::matrix::{format_mat, identity, inverse, mat_add, mat_mul, mat_sub, Coeffs, Mat, Zmod};
use super::{GroupSpec, LevelRing, SubgroupKind};
use crate::error::{Error, Result};

/// Candidate matrices examined per enumeration.
pub const CANDIDATE_BUDGET: u64 = 1 << 22;

/// A finite matrix group, sorted, with an index for membership tests.
#[derive(Clone, Debug)]
pub struct EnumeratedGroup {
    pub group: GroupSpec,
    pub ring: LevelRing,
    elements: Vec<Mat>,
    index: HashMap<Mat, usize>,
}

/// A finite additive group of matrices.
#[derive(Clone, Debug)]
pub struct EnumeratedLattice {
    pub group: GroupSpec,
    pub ring: LevelRing,
    elements: Vec<Mat>,
    index: HashMap<Mat, usize>,
}

fn indexed(mut elements: Vec<Mat>) -> (Vec<Mat>, HashMap<Mat, usize>) {
    elements.sort_unstable();
    elements.dedup();
    let index = elements.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    (elements, index)
}

impl EnumeratedGroup {
    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Mat) -> bool {
        self.index.contains_key(g)
    }

    pub fn position(&self, g: &Mat) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Identity, closure under products and inverses, on every element and
    /// pair.
    pub fn verify(&self) -> std::result::Result<(), String> {
        let c = self.ring.coeffs();
        let n = self.group.n;
        if !self.contains(&identity(&c, n)) {
            return Err("identity missing".into());
        }
        let bad = self.elements.par_iter().find_map_any(|g| {
            let inv = inverse(&c, n, g)?;
            if !self.contains(&inv) {
                return Some(format!("inverse of {} missing", format_mat(n, g)));
            }
            self.elements.iter().find_map(|h| {
                let gh = mat_mul(&c, n, g, h);
                (!self.contains(&gh)).then(|| format!("{} · {} escapes", format_mat(n, g), format_mat(n, h)))
            })
        });
        bad.map_or(Ok(()), Err)
    }

    /// Whether every element of `sub` is here and `sub` is stable under
    /// conjugation by every element here.
    pub fn normalizes(&self, sub: &EnumeratedGroup) -> std::result::Result<(), String> {
        let c = self.ring.coeffs();
        let n = self.group.n;
        if let Some(h) = sub.elements.iter().find(|h| !self.contains(h)) {
            return Err(format!("{} is not in the larger group", format_mat(n, h)));
        }
        let bad = self.elements.par_iter().find_map_any(|g| {
            let gi = inverse(&c, n, g).expect("group element");
            sub.elements.iter().find_map(|h| {
                let conj = mat_mul(&c, n, &mat_mul(&c, n, g, h), &gi);
                (!sub.contains(&conj)).then(|| format!("{} conjugates {} out", format_mat(n, g), format_mat(n, h)))
            })
        });
        bad.map_or(Ok(()), Err)
    }
}

impl EnumeratedLattice {
    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: &Mat) -> bool {
        self.index.contains_key(x)
    }

    /// Closure under addition, negation and the bracket `xy − yx`.
    pub fn verify(&self) -> std::result::Result<(), String> {
        let c = self.ring.coeffs();
        let n = self.group.n;
        let bad = self.elements.par_iter().find_map_any(|x| {
            self.elements.iter().find_map(|y| {
                let sum = mat_add(&c, x, y);
                let br = mat_sub(&c, &mat_mul(&c, n, x, y), &mat_mul(&c, n, y, x));
                if !self.contains(&sum) {
                    Some(format!("{} + {} escapes", format_mat(n, x), format_mat(n, y)))
                } else if !self.contains(&br) {
                    Some(format!("[{}, {}] escapes", format_mat(n, x), format_mat(n, y)))
                } else {
                    None
                }
            })
        });
        bad.map_or(Ok(()), Err)
    }
}

fn reduce(m: &[u32], modulus: u32) -> Mat {
    m.iter().map(|&x| x % modulus).collect()
}

fn check_filtration(g: &GroupSpec, filtration: &[(SubgroupKind, u32)], r: &LevelRing) -> Result<()> {
    for (h, v) in filtration {
        h.validate(g.n)?;
        if *v > r.level() {
            return Err(Error::Precondition(format!("level {v} exceeds N = {}", r.level())));
        }
    }
    Ok(())
}

/// Candidates `h + p^v·m` from the cheapest single condition, filtered by all.
fn enumerate(g: &GroupSpec, filtration: &[(SubgroupKind, u32)], r: &LevelRing, lie: bool) -> Result<Vec<Mat>> {
    check_filtration(g, filtration, r)?;
    let n = g.n;
    let p = r.p() as u64;
    let lift_count = |v: u32| (p.pow(r.level() - v)).checked_pow((n * n) as u32);
    let mut best: Option<(u64, SubgroupKind, u32)> = None;
    let fallback = (SubgroupKind::Full, 0u32);
    for (h, v) in filtration.iter().chain(std::iter::once(&fallback)) {
        let count = h
            .shape_count(p.pow(*v), n)
            .zip(lift_count(*v))
            .and_then(|(a, b)| a.checked_mul(b));
        if let Some(count) = count {
            if best.as_ref().map_or(true, |(c, _, _)| count < *c) {
                best = Some((count, h.clone(), *v));
            }
        }
    }
    let (count, h, v) = best.ok_or_else(|| Error::ResourceLimit("candidate count overflows".into()))?;
    if count > CANDIDATE_BUDGET {
        return Err(Error::ResourceLimit(format!("{count} candidates exceed the budget {CANDIDATE_BUDGET}")));
    }
    let pv = r.power(v);
    let shapes = h.shapes(&Zmod(pv), n, lie, CANDIDATE_BUDGET)?;
    let lift_base = r.power(r.level() - v) as u64;
    let lifts = lift_count(v).unwrap();
    let q = r.coeffs();
    let conds: Vec<(SubgroupKind, u32)> = filtration.iter().map(|(h, v)| (h.clone(), r.power(*v))).collect();
    let accept = |m: &Mat| -> bool {
        let in_ambient = if lie { g.lie_contains(&q, m) } else { g.contains(&q, m) };
        in_ambient
            && conds.iter().all(|(h, pv)| {
                let red = reduce(m, *pv);
                let c = Zmod(*pv);
                if lie {
                    h.lie_shape(&c, n, &red)
                } else {
                    h.group_shape(&c, n, &red)
                }
            })
    };
    let out: Vec<Mat> = shapes
        .par_iter()
        .flat_map_iter(|s| {
            (0..lifts).filter_map(move |mut code| {
                let mut m = s.clone();
                for e in m.iter_mut() {
                    *e = (*e % pv) + pv * (code % lift_base) as u32;
                    code /= lift_base;
                }
                accept(&m).then_some(m)
            })
        })
        .collect();
    Ok(out)
}

/// `{ g ∈ G(ℤ/p^N) : g mod p^{v_i} ∈ H_i(ℤ/p^{v_i}) for all i }`, checked to
/// be a subgroup.
pub fn group_points(g: &GroupSpec, filtration: &[(SubgroupKind, u32)], r: &LevelRing) -> Result<EnumeratedGroup> {
    let (elements, index) = indexed(enumerate(g, filtration, r, false)?);
    let grp = EnumeratedGroup {
        group: *g,
        ring: *r,
        elements,
        index,
    };
    grp.verify().map_err(|w| Error::Precondition(format!("points do not form a group: {w}")))?;
    Ok(grp)
}

/// `{ x ∈ 𝔤(ℤ/p^N) : x mod p^{v_i} ∈ Lie(H_i)(ℤ/p^{v_i}) for all i }`.
pub fn lie_points(g: &GroupSpec, filtration: &[(SubgroupKind, u32)], r: &LevelRing) -> Result<EnumeratedLattice> {
    let (elements, index) = indexed(enumerate(g, filtration, r, true)?);
    Ok(EnumeratedLattice {
        group: *g,
        ring: *r,
        elements,
        index,
    })
}

/// `H(C) = (H-shaped matrices) ∩ G(C)` over any coefficient ring.
pub fn subgroup_points<C: Coeffs + ?Sized>(g: &GroupSpec, h: &SubgroupKind, c: &C, budget: u64) -> Result<Vec<Mat>> {
    h.validate(g.n)?;
    Ok(h.shapes(c, g.n, false, budget)?
        .into_iter()
        .filter(|m| g.contains(c, m))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn units_filtration() {
        let r = LevelRing::new(3, 3).unwrap();
        let g = group_points(&GroupSpec::gl(1), &[(SubgroupKind::Trivial, 1)], &r).unwrap();
        assert_eq!(g.order(), 9);
        assert!(g.contains(&vec![4]));
        let l = lie_points(&GroupSpec::gl(1), &[(SubgroupKind::Trivial, 1)], &r).unwrap();
        assert_eq!(l.order(), 9);
    }

    #[test]
    fn sl2_level_two() {
        let r = LevelRing::new(2, 3).unwrap();
        let g = group_points(&GroupSpec::sl(2), &[(SubgroupKind::Trivial, 1)], &r).unwrap();
        // |SL_2(ℤ/8)| = 384 and |SL_2(𝔽_2)| = 6
        assert_eq!(g.order(), 64);
        let l = lie_points(&GroupSpec::sl(2), &[(SubgroupKind::Trivial, 1)], &r).unwrap();
        assert_eq!(l.order(), 64);
        assert!(l.verify().is_ok());
        let mixed = group_points(&GroupSpec::sl(2), &[(SubgroupKind::Trivial, 1), (SubgroupKind::Torus, 2)], &r).unwrap();
        assert!(mixed.elements().iter().all(|m| m[1] % 4 == 0 && m[2] % 4 == 0));
        assert_eq!(mixed.order(), 16);
    }
}
