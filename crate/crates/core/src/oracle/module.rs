use std::collections::HashMap;
use std::sync::Arc;

use super::dilate::{dilate_oracle_fractions, FiniteCenter, FractionDilatation};
use super::ring::FiniteRing;
use crate::error::{Error, Result};
use crate::report::Report;

/// A finite module: an abelian group table plus the action of a finite ring.
#[derive(Clone, Debug)]
pub struct FiniteModule {
    ring: Arc<FiniteRing>,
    size: usize,
    add: Vec<u16>,
    /// `act[r·size + x] = r·x`.
    act: Vec<u16>,
    zero: u16,
}

impl FiniteModule {
    pub fn new(ring: Arc<FiniteRing>, add: Vec<u16>, act: Vec<u16>, zero: u16) -> Result<FiniteModule> {
        let size = (add.len() as f64).sqrt() as usize;
        if size * size != add.len() || act.len() != ring.size() * size {
            return Err(Error::Input("module table sizes do not match".into()));
        }
        let m = FiniteModule {
            ring,
            size,
            add,
            act,
            zero,
        };
        m.check_axioms()?;
        Ok(m)
    }

    /// `A` as a module over itself.
    pub fn from_ring(ring: &Arc<FiniteRing>) -> FiniteModule {
        let n = ring.size();
        let mut add = vec![0u16; n * n];
        let mut act = vec![0u16; n * n];
        for x in ring.elements() {
            for y in ring.elements() {
                add[x as usize * n + y as usize] = ring.add(x, y);
                act[x as usize * n + y as usize] = ring.mul(x, y);
            }
        }
        FiniteModule {
            ring: ring.clone(),
            size: n,
            add,
            act,
            zero: ring.zero(),
        }
    }

    pub fn zero_module(ring: &Arc<FiniteRing>) -> FiniteModule {
        FiniteModule {
            ring: ring.clone(),
            size: 1,
            add: vec![0],
            act: vec![0; ring.size()],
            zero: 0,
        }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> u16 {
        self.zero
    }

    pub fn add(&self, x: u16, y: u16) -> u16 {
        self.add[x as usize * self.size + y as usize]
    }

    pub fn act(&self, r: u16, x: u16) -> u16 {
        self.act[r as usize * self.size + x as usize]
    }

    /// Submodule generated by `gens`.
    pub fn submodule(&self, gens: &[u16]) -> Vec<u16> {
        let mut inside = vec![false; self.size];
        inside[self.zero as usize] = true;
        let mut list = vec![self.zero];
        let mut frontier = Vec::new();
        for &g in gens {
            for r in self.ring.elements() {
                let y = self.act(r, g);
                if !inside[y as usize] {
                    inside[y as usize] = true;
                    list.push(y);
                    frontier.push(y);
                }
            }
        }
        while let Some(x) = frontier.pop() {
            for i in 0..list.len() {
                let z = self.add(x, list[i]);
                if !inside[z as usize] {
                    inside[z as usize] = true;
                    list.push(z);
                    frontier.push(z);
                }
            }
        }
        list.sort_unstable();
        list
    }

    fn check_axioms(&self) -> Result<()> {
        let r = &self.ring;
        let n = self.size as u16;
        for x in 0..n {
            if self.add(x, self.zero) != x || self.act(r.one(), x) != x {
                return Err(Error::Precondition("module identity axioms fail".into()));
            }
            for y in 0..n {
                if self.add(x, y) != self.add(y, x) {
                    return Err(Error::Precondition("module addition is not commutative".into()));
                }
                for s in r.elements() {
                    if self.act(s, self.add(x, y)) != self.add(self.act(s, x), self.act(s, y)) {
                        return Err(Error::Precondition("action is not additive".into()));
                    }
                }
            }
            for s in r.elements() {
                for u in r.elements() {
                    if self.act(r.add(s, u), x) != self.add(self.act(s, x), self.act(u, x))
                        || self.act(r.mul(s, u), x) != self.act(s, self.act(u, x))
                    {
                        return Err(Error::Precondition("ring action axioms fail".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `M′`, a module over the oracle dilatation `A′`.
#[derive(Clone, Debug)]
pub struct DilatedModule {
    pub module: FiniteModule,
    pub ring: FractionDilatation,
    pub report: Report,
}

/// Classes of symbols `x / a^ν` with `x ∈ L^ν·M`, decided in the localized
/// module `e·M`.
pub fn module_dilate_oracle(m: &FiniteModule, c: &FiniteCenter, cap: usize) -> Result<DilatedModule> {
    let a = m.ring().as_ref();
    let d = dilate_oracle_fractions(a, c, cap)?;
    let t = d.t;
    let k = c.len();
    let avals: Vec<u16> = c.centers().iter().map(|(_, x)| *x).collect();
    let apow = |nu: &[u32]| -> u16 { nu.iter().zip(&avals).fold(a.one(), |acc, (&n, &x)| a.mul(acc, a.pow(x, n as u64))) };
    let ft = apow(&vec![t; k]);
    let big = vec![4 * t; k];
    let key = |x: u16, nu: &[u32]| -> u16 {
        let rest: Vec<u32> = big.iter().zip(nu).map(|(b, n)| b - n).collect();
        m.act(a.mul(ft, apow(&rest)), x)
    };
    let ls = c.l_ideals(a);
    let lpow = |nu: &[u32]| -> Vec<u16> {
        let mut acc = a.ideal(&[a.one()]);
        for (l, &n) in ls.iter().zip(nu) {
            acc = a.ideal_product(&acc, &a.ideal_power(l, n));
        }
        acc
    };

    let mut reps: Vec<(u16, Vec<u32>)> = Vec::new();
    let mut by_key: HashMap<u16, u16> = HashMap::new();
    let all: Vec<u16> = (0..m.size() as u16).collect();
    let mut nu = vec![0u32; k];
    loop {
        let gens: Vec<u16> = lpow(&nu).iter().flat_map(|&l| all.iter().map(move |&x| (l, x))).map(|(l, x)| m.act(l, x)).collect();
        for x in m.submodule(&gens) {
            by_key.entry(key(x, &nu)).or_insert_with(|| {
                reps.push((x, nu.clone()));
                (reps.len() - 1) as u16
            });
        }
        let mut i = 0;
        while i < k {
            nu[i] += 1;
            if nu[i] <= t {
                break;
            }
            nu[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
    }
    let n = reps.len();
    let find = |x: u16, nu: &[u32]| -> Result<u16> {
        by_key
            .get(&key(x, nu))
            .copied()
            .ok_or_else(|| Error::Precondition("module operation leaves the enumerated classes".into()))
    };
    let sum_exp = |x: &[u32], y: &[u32]| -> Vec<u32> { x.iter().zip(y).map(|(p, q)| p + q).collect() };
    let mut add = vec![0u16; n * n];
    for (i, (x, nu)) in reps.iter().enumerate() {
        for (j, (y, la)) in reps.iter().enumerate() {
            let z = m.add(m.act(apow(la), *x), m.act(apow(nu), *y));
            add[i * n + j] = find(z, &sum_exp(nu, la))?;
        }
    }
    let rn = d.ring.size();
    let mut act = vec![0u16; rn * n];
    for (r, s) in d.representatives.iter().enumerate() {
        for (j, (x, nu)) in reps.iter().enumerate() {
            act[r * n + j] = find(m.act(s.numerator, *x), &sum_exp(&s.exponent, nu))?;
        }
    }
    let zero = find(m.zero(), &vec![0; k])?;
    let ring = Arc::new(d.ring.clone());
    let module = FiniteModule::new(ring.clone(), add, act, zero)?;

    let mut report = Report::new("module-dilatation");
    report.fact("size", n);
    let iota: Vec<u16> = a.elements().map(|x| class_of_base(&d, x)).collect();
    let mut injective = true;
    let mut exceptional = true;
    let mut nu = vec![0u32; k];
    loop {
        let an = iota[apow(&nu) as usize];
        let image: Vec<u16> = (0..n as u16).map(|x| module.act(an, x)).collect();
        let mut sorted = image.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != n {
            injective = false;
        }
        let lgens: Vec<u16> = lpow(&nu)
            .iter()
            .flat_map(|&l| (0..n as u16).map(move |x| (l, x)))
            .map(|(l, x)| module.act(iota[l as usize], x))
            .collect();
        if module.submodule(&image) != module.submodule(&lgens) {
            exceptional = false;
        }
        let mut i = 0;
        while i < k {
            nu[i] += 1;
            if nu[i] <= 2 {
                break;
            }
            nu[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
    }
    report.clause("denominators_injective", injective, None);
    report.clause("exceptional_submodule", exceptional, None);
    Ok(DilatedModule { module, ring: d, report })
}

/// Index in the symbol ring of the class of `x / 1`.
fn class_of_base(d: &FractionDilatation, x: u16) -> u16 {
    let target = d.subring.structural[x as usize];
    d.to_subring.iter().position(|&v| v == target).expect("ι(A) lies in A′") as u16
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn module_examples() {
        let z6 = Arc::new(FiniteRing::integers_mod(6).unwrap());
        let c = FiniteCenter::generated(&z6, &[(&[3], 2)]);
        let m = FiniteModule::from_ring(&z6);
        let d = module_dilate_oracle(&m, &c, 4096).unwrap();
        assert!(d.report.passed(), "{}", d.report);
        assert_eq!(d.module.size(), 3);
        assert_eq!(d.module.ring().size(), 3);
        let zero = module_dilate_oracle(&FiniteModule::zero_module(&z6), &c, 4096).unwrap();
        assert_eq!(zero.module.size(), 1);
    }
}
