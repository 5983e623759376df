//! Rost's double deformation space of `V(J) ⊂ V(I) ⊂ Spec A` as the
//! dilatation of `A[s, t]` at `{[I, s·t], [J, s]}`, and a bounded check that
//! its fraction generators span every graded piece
//! `I^n J^{m−n} t^{−n} s^{−m}` of the Laurent ring.

use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::{AlgebraHom, PresentedAlgebra};
use crate::dilatation::{dilate, Center, DilatationResult, MultiCenter};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::report::Report;

/// Largest bidegree bound accepted by [`rost_subalgebra_check`].
pub const MAX_BIDEGREE: u32 = 4;

/// Generator products checked per cell before giving up.
const PRODUCT_BUDGET: usize = 20_000;

/// `A` with ideals `I ⊆ J`, and `A[s, t]` built once.
#[derive(Clone, Debug)]
pub struct RostInput {
    base: Arc<PresentedAlgebra>,
    i: Ideal,
    j: Ideal,
    plane: Arc<PresentedAlgebra>,
    s: Polynomial,
    t: Polynomial,
}

impl RostInput {
    pub fn new(base: &Arc<PresentedAlgebra>, i: Ideal, j: Ideal) -> Result<RostInput> {
        let j_mod = j.sum(base.relations())?;
        for g in i.gens() {
            if !j_mod.contains(g)? {
                return Err(Error::Precondition(format!("{g} lies in I but not in J")));
            }
        }
        let ext = base.registry().extend(["s", "t"]);
        let n = base.nvars();
        let plane = PresentedAlgebra::new(base.relations().lift_to(&ext)?);
        Ok(RostInput {
            base: base.clone(),
            i,
            j,
            s: Polynomial::var(&ext, n),
            t: Polynomial::var(&ext, n + 1),
            plane,
        })
    }

    pub fn parse(base: &Arc<PresentedAlgebra>, i: &[&str], j: &[&str]) -> Result<RostInput> {
        let reg = base.registry();
        RostInput::new(base, Ideal::parse(reg, i)?, Ideal::parse(reg, j)?)
    }

    pub fn base(&self) -> &Arc<PresentedAlgebra> {
        &self.base
    }

    pub fn i(&self) -> &Ideal {
        &self.i
    }

    pub fn j(&self) -> &Ideal {
        &self.j
    }

    /// `A[s, t]`.
    pub fn plane(&self) -> &Arc<PresentedAlgebra> {
        &self.plane
    }

    pub fn s(&self) -> &Polynomial {
        &self.s
    }

    pub fn t(&self) -> &Polynomial {
        &self.t
    }

    /// `{[I·A[s,t], s·t], [J·A[s,t], s]}`.
    pub fn center(&self) -> Result<MultiCenter> {
        let reg = self.plane.registry();
        let st = self.s.mul(&self.t);
        MultiCenter::new(
            &self.plane,
            vec![
                Center::new(self.i.lift_to(reg)?, st)?,
                Center::new(self.j.lift_to(reg)?, self.s.clone())?,
            ],
        )
    }
}

/// The double-centered dilatation. Fresh variables `x_1_k` stand for
/// `I_k/(st)` and `x_2_k` for `J_k/s`.
pub fn rost_space(r: &RostInput) -> Result<DilatationResult> {
    dilate(&r.center()?)
}

/// All multisets of size `k` from `0..len`, as sorted index vectors.
fn multisets(len: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if len == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0usize; k];
    loop {
        out.push(cur.clone());
        let Some(pos) = (0..k).rev().find(|&p| cur[p] + 1 < len) else {
            return out;
        };
        let v = cur[pos] + 1;
        for c in &mut cur[pos..] {
            *c = v;
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// For every `(n, m)` with `|n|, |m| ≤ bound` and every product `l` of
/// generators of `I^n J^{m−n}`, writes `l·t^{−n}s^{−m}` as a polynomial in
/// `A[s, t]` and the fraction variables, by the case split on the signs of
/// `n` and `m − n`, and checks that it equals `l·t^{−n}s^{−m}` in
/// `A[s, t, z]/(s·t·z − 1)`. Also checks that the dilatation maps into that
/// localization and, when affordable, that the map is injective.
pub fn rost_subalgebra_check(r: &RostInput, bound: u32) -> Result<Report> {
    if bound > MAX_BIDEGREE {
        return Err(Error::Input(format!("bidegree bound {bound} exceeds {MAX_BIDEGREE}")));
    }
    let d = rost_space(r)?;
    let alg = d.algebra();
    let dreg = alg.registry();
    let plane = r.plane();
    let preg = plane.registry();
    let np = plane.nvars();

    // A[s, t, z]/(P + (s t z − 1))
    let lreg = preg.extend(["z"]);
    let z = Polynomial::var(&lreg, np);
    let s = r.s.lift_to(&lreg)?;
    let t = r.t.lift_to(&lreg)?;
    let mut rels = plane.relations().lift_to(&lreg)?.gens().to_vec();
    rels.push(s.mul(&t).mul(&z).sub(&Polynomial::one(&lreg)));
    let loc = PresentedAlgebra::new(Ideal::new(&lreg, rels)?);
    let s_inv = t.mul(&z);
    let t_inv = s.mul(&z);

    let ig: Vec<Polynomial> = r.i.gens().iter().map(|g| g.lift_to(&lreg)).collect::<Result<_>>()?;
    let jg: Vec<Polynomial> = r.j.gens().iter().map(|g| g.lift_to(&lreg)).collect::<Result<_>>()?;

    let mut rep = Report::new("rost");
    rep.fact("bound", bound);
    rep.fact("space", alg);

    // x_1_k ↦ I_k·z, x_2_k ↦ J_k·t·z
    let mut images: Vec<Polynomial> = (0..np).map(|v| Polynomial::var(&lreg, v)).collect();
    for fv in d.fractions() {
        let img = match fv.center {
            0 => ig[fv.generator].mul(&z),
            _ => jg[fv.generator].mul(&s_inv),
        };
        debug_assert_eq!(images.len(), fv.var);
        images.push(img);
    }
    let (to_loc, ok) = AlgebraHom::new(alg, &loc, images)?.checked()?;
    rep.clause(
        "maps_to_localization",
        ok,
        (!ok).then(|| "a relation of the dilatation does not vanish after inverting s·t".to_string()),
    );
    match to_loc.kernel() {
        Ok(k) => {
            let zero = k.is_zero_ideal()? || alg.relations().contains_ideal(&k)?;
            rep.clause("injective", zero, (!zero).then(|| format!("kernel {k}")));
        }
        Err(e) if e.is_resource_limit() => {
            rep.skip("injective", e.to_string());
        }
        Err(e) => return Err(e),
    }

    let u = |k: usize| d.fraction(0, k).expect("I fraction");
    let w = |k: usize| d.fraction(1, k).expect("J fraction");
    let lift_d = |p: &Polynomial| p.lift_to(dreg).expect("base lifts");
    let ig_d: Vec<Polynomial> = r.i.gens().iter().map(|g| lift_d(g)).collect();
    let jg_d: Vec<Polynomial> = r.j.gens().iter().map(|g| lift_d(g)).collect();
    let s_d = lift_d(&r.s);
    let t_d = lift_d(&r.t);
    let one_d = Polynomial::one(dreg);
    let one_l = Polynomial::one(&lreg);

    let b = bound as i32;
    let cells: Vec<(i32, i32)> = (-b..=b).flat_map(|n| (-b..=b).map(move |m| (n, m))).collect();
    let results: Vec<Result<(String, Option<String>, usize)>> = cells
        .par_iter()
        .map(|&(n, m)| {
            // I^k = J^k = A for k < 0
            let ik = n.max(0) as usize;
            let jk = (m - n).max(0) as usize;
            let count = binomial(ig.len() + ik.max(1) - 1, ik).saturating_mul(binomial(jg.len() + jk.max(1) - 1, jk));
            if count > PRODUCT_BUDGET {
                return Err(Error::ResourceLimit(format!(
                    "cell ({n}, {m}) has {count} generator products, budget {PRODUCT_BUDGET}"
                )));
            }
            let name = format!("cell.{n}.{m}");
            let mut checked = 0;
            for alpha in multisets(ig.len(), ik) {
                for beta in multisets(jg.len(), jk) {
                    let l_loc = alpha
                        .iter()
                        .map(|&a| &ig[a])
                        .chain(beta.iter().map(|&k| &jg[k]))
                        .fold(one_l.clone(), |acc, g| acc.mul(g));
                    let t_part = if n >= 0 { t_inv.pow(n as u32) } else { t.pow((-n) as u32) };
                    let s_part = if m >= 0 { s_inv.pow(m as u32) } else { s.pow((-m) as u32) };
                    let target = l_loc.mul(&t_part).mul(&s_part);

                    let i_prod = alpha.iter().fold(one_d.clone(), |acc, &a| acc.mul(&ig_d[a]));
                    let u_prod = alpha.iter().fold(one_d.clone(), |acc, &a| acc.mul(&u(a)));
                    let expr = if n < 0 {
                        // J^{m+l} t^l s^{−m} with l = −n
                        let l = (-n) as u32;
                        if m >= 0 {
                            let (frac, rest) = beta.split_at(m as usize);
                            frac.iter()
                                .fold(one_d.clone(), |acc, &k| acc.mul(&w(k)))
                                .mul(&rest.iter().fold(one_d.clone(), |acc, &k| acc.mul(&jg_d[k])))
                                .mul(&t_d.pow(l))
                        } else {
                            beta.iter()
                                .fold(one_d.clone(), |acc, &k| acc.mul(&jg_d[k]))
                                .mul(&t_d.pow(l))
                                .mul(&s_d.pow((-m) as u32))
                        }
                    } else if m >= n {
                        beta.iter().fold(u_prod, |acc, &k| acc.mul(&w(k)))
                    } else {
                        u_prod.mul(&s_d.pow((n - m) as u32))
                    };
                    let image = to_loc.apply(&expr)?;
                    if !loc.elements_equal(&image, &target)? {
                        let l_base = beta.iter().fold(i_prod, |acc, &k| acc.mul(&jg_d[k]));
                        return Ok((name, Some(format!("(n, m) = ({n}, {m}), l = {l_base}: {expr} ≠ {target}")), checked));
                    }
                    checked += 1;
                }
            }
            Ok((name, None, checked))
        })
        .collect();
    let mut total = 0;
    for res in results {
        let (name, witness, checked) = res?;
        total += checked;
        rep.clause(name, witness.is_none(), witness);
    }
    rep.fact("elements_checked", total);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, Registry};

    #[test]
    fn multisets_count() {
        assert_eq!(multisets(2, 3).len(), 4);
        assert_eq!(multisets(3, 2).len(), binomial(4, 2));
        assert_eq!(multisets(0, 0), vec![Vec::<usize>::new()]);
        assert!(multisets(0, 2).is_empty());
    }

    #[test]
    fn containment_is_enforced() {
        let reg = Registry::new(Field::Rational, ["x", "y"]).unwrap();
        let a = PresentedAlgebra::free(&reg);
        assert!(RostInput::parse(&a, &["x", "y"], &["x"]).is_err());
        assert!(RostInput::parse(&a, &["x"], &["x", "y"]).is_ok());
    }
}
