use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::PresentedAlgebra;
use crate::error::{Error, Result};
use crate::poly::{Field, FieldScalar, Monomial, Polynomial};

/// Default cap on the number of elements of an enumerated ring.
pub const DEFAULT_SIZE_CAP: usize = 4096;

/// Rings up to this size get a full axiom check on construction.
const FULL_AXIOM_CHECK: usize = 64;

/// A finite commutative ring stored as complete operation tables.
///
/// Elements are the indices `0..size()`. `generators` generate the ring
/// together with `1` and are what hom enumeration assigns images to.
#[derive(Clone)]
pub struct FiniteRing {
    name: String,
    size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: u16,
    one: u16,
    labels: Vec<String>,
    generators: Vec<u16>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, {} elements)", self.name, self.size)
    }
}

/// A free `ℤ/modulus`-module with a bilinear product given on the basis.
/// Element indices are base-`modulus` digit strings, least significant first.
pub(crate) struct Structure {
    pub modulus: u32,
    pub basis: Vec<String>,
    /// `products[i][j]` is `b_i·b_j` in basis coordinates.
    pub products: Vec<Vec<Vec<u32>>>,
    pub one: Vec<u32>,
    pub generators: Vec<Vec<u32>>,
}

impl FiniteRing {
    /// `ℤ/n`.
    pub fn integers_mod(n: u32) -> Result<FiniteRing> {
        if n == 0 {
            return Err(Error::Input("ℤ/0 is infinite".into()));
        }
        if n == 1 {
            return Ok(FiniteRing::zero_ring());
        }
        let s = Structure {
            modulus: n,
            basis: vec!["1".into()],
            products: vec![vec![vec![1]]],
            one: vec![1],
            generators: vec![],
        };
        FiniteRing::from_structure(format!("Z/{n}"), &s, DEFAULT_SIZE_CAP)
    }

    /// `(ℤ/n)[y]/(f)` for monic `f`, given by its coefficients from the
    /// constant term up, leading `1` included.
    pub fn quotient_univariate(n: u32, monic: &[i64]) -> Result<FiniteRing> {
        let d = monic.len().saturating_sub(1);
        if d == 0 || monic[d].rem_euclid(n as i64) != 1 {
            return Err(Error::Input("polynomial must be monic of positive degree".into()));
        }
        if n == 1 {
            return Ok(FiniteRing::zero_ring());
        }
        let red = |c: i64| c.rem_euclid(n as i64) as u32;
        // y^k reduced mod f, for k < 2d - 1
        let mut powers: Vec<Vec<u32>> = Vec::new();
        let mut cur = vec![0u32; d];
        cur[0] = 1 % n;
        for _ in 0..(2 * d).max(1) {
            powers.push(cur.clone());
            let top = cur[d - 1] as u64;
            let mut next = vec![0u32; d];
            for k in 1..d {
                next[k] = cur[k - 1];
            }
            for (k, slot) in next.iter_mut().enumerate() {
                let sub = (top * red(monic[k]) as u64 % n as u64) as u32;
                *slot = (*slot + n - sub) % n;
            }
            cur = next;
        }
        let products = (0..d).map(|i| (0..d).map(|j| powers[i + j].clone()).collect()).collect();
        let basis = (0..d)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "y".to_string(),
                _ => format!("y^{k}"),
            })
            .collect();
        let mut gen = vec![0u32; d];
        if d > 1 {
            gen[1] = 1;
        } else {
            gen = powers[1].clone();
        }
        let s = Structure {
            modulus: n,
            basis,
            products,
            one: powers[0].clone(),
            generators: vec![gen],
        };
        let fname = Polynomial::from_terms(
            &crate::poly::Registry::new(Field::Rational, ["y"])?,
            monic
                .iter()
                .enumerate()
                .map(|(k, &c)| (Monomial::from_exponents(vec![k as u16]), Field::Rational.from_i64(c))),
        );
        FiniteRing::from_structure(format!("Z/{n}[y]/({fname})"), &s, DEFAULT_SIZE_CAP)
    }

    /// Enumerates a zero-dimensional presentation over `𝔽_p` from the
    /// standard monomials of its relation ideal.
    pub fn from_presented(alg: &PresentedAlgebra, cap: usize) -> Result<FiniteRing> {
        Ok(PresentedBasis::new(alg, cap)?.ring)
    }

    pub fn zero_ring() -> FiniteRing {
        FiniteRing {
            name: "0".into(),
            size: 1,
            add: vec![0],
            mul: vec![0],
            neg: vec![0],
            zero: 0,
            one: 0,
            labels: vec!["0".into()],
            generators: vec![],
        }
    }

    pub(crate) fn from_structure(name: String, s: &Structure, cap: usize) -> Result<FiniteRing> {
        let m = s.modulus as usize;
        let d = s.basis.len();
        let size = checked_size(m, d, cap)?;
        let encode = |v: &[u32]| -> usize { v.iter().rev().fold(0usize, |acc, &c| acc * m + c as usize) };
        let decode = |mut x: usize| -> Vec<u32> {
            (0..d)
                .map(|_| {
                    let c = (x % m) as u32;
                    x /= m;
                    c
                })
                .collect()
        };
        let digits: Vec<Vec<u32>> = (0..size).map(decode).collect();
        let mut add = vec![0u16; size * size];
        let mut neg = vec![0u16; size];
        for x in 0..size {
            let dx = &digits[x];
            neg[x] = encode(&dx.iter().map(|&c| (s.modulus - c) % s.modulus).collect::<Vec<_>>()) as u16;
            for y in x..size {
                let v: Vec<u32> = dx.iter().zip(&digits[y]).map(|(a, b)| (a + b) % s.modulus).collect();
                let z = encode(&v) as u16;
                add[x * size + y] = z;
                add[y * size + x] = z;
            }
        }
        let pow: Vec<usize> = (0..d).map(|k| m.pow(k as u32)).collect();
        let mut mul = vec![0u16; size * size];
        for x in 0..size {
            // x·(c·b_k) for every digit position k and digit c
            let mut scaled = vec![vec![0u16; m]; d];
            for (k, row) in scaled.iter_mut().enumerate() {
                let mut v = vec![0u64; d];
                for (i, &c) in digits[x].iter().enumerate() {
                    for (l, &p) in s.products[i][k].iter().enumerate() {
                        v[l] += c as u64 * p as u64;
                    }
                }
                let xb = encode(&v.iter().map(|&c| (c % s.modulus as u64) as u32).collect::<Vec<_>>()) as u16;
                for c in 1..m {
                    row[c] = add[row[c - 1] as usize * size + xb as usize];
                }
            }
            for y in 1..size {
                let k = digits[y].iter().position(|&c| c != 0).unwrap();
                let c = digits[y][k] as usize;
                let rest = y - c * pow[k];
                mul[x * size + y] = add[mul[x * size + rest] as usize * size + scaled[k][c] as usize];
            }
        }
        let labels = digits.iter().map(|v| label(v, &s.basis)).collect();
        let ring = FiniteRing {
            name,
            size,
            add,
            mul,
            neg,
            zero: 0,
            one: encode(&s.one) as u16,
            labels,
            generators: s.generators.iter().map(|g| encode(g) as u16).collect(),
        };
        ring.check_axioms()?;
        Ok(ring)
    }

    /// Wraps explicit tables after an axiom check.
    pub fn from_tables(
        name: String,
        add: Vec<u16>,
        mul: Vec<u16>,
        neg: Vec<u16>,
        zero: u16,
        one: u16,
        labels: Vec<String>,
    ) -> Result<FiniteRing> {
        let size = neg.len();
        if add.len() != size * size || mul.len() != size * size || labels.len() != size || size == 0 {
            return Err(Error::Input("table sizes do not match".into()));
        }
        let ring = FiniteRing {
            name,
            size,
            add,
            mul,
            neg,
            zero,
            one,
            labels,
            generators: vec![],
        };
        ring.check_axioms()?;
        Ok(ring)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> FiniteRing {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.size as u16
    }

    pub fn zero(&self) -> u16 {
        self.zero
    }

    pub fn one(&self) -> u16 {
        self.one
    }

    pub fn is_zero_ring(&self) -> bool {
        self.size == 1
    }

    pub fn generators(&self) -> &[u16] {
        &self.generators
    }

    pub fn label(&self, x: u16) -> &str {
        &self.labels[x as usize]
    }

    pub fn add(&self, x: u16, y: u16) -> u16 {
        self.add[x as usize * self.size + y as usize]
    }

    pub fn mul(&self, x: u16, y: u16) -> u16 {
        self.mul[x as usize * self.size + y as usize]
    }

    pub fn neg(&self, x: u16) -> u16 {
        self.neg[x as usize]
    }

    pub fn sub(&self, x: u16, y: u16) -> u16 {
        self.add(x, self.neg(y))
    }

    pub fn pow(&self, x: u16, n: u64) -> u16 {
        let (mut acc, mut base, mut n) = (self.one, x, n);
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// `k·1`.
    pub fn from_int(&self, k: i64) -> u16 {
        let (mut acc, mut base, mut n) = (self.zero, self.one, k.unsigned_abs());
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            n >>= 1;
        }
        if k < 0 {
            self.neg(acc)
        } else {
            acc
        }
    }

    pub fn inverse(&self, x: u16) -> Option<u16> {
        self.elements().find(|&y| self.mul(x, y) == self.one)
    }

    pub fn is_unit(&self, x: u16) -> bool {
        self.inverse(x).is_some()
    }

    pub fn is_nzd(&self, x: u16) -> bool {
        self.elements().all(|y| y == self.zero || self.mul(x, y) != self.zero)
    }

    pub fn is_nilpotent(&self, x: u16) -> bool {
        self.pow(x, self.size as u64) == self.zero
    }

    pub fn is_reduced(&self) -> bool {
        self.elements().all(|x| x == self.zero || !self.is_nilpotent(x))
    }

    /// A finite ring is a domain exactly when it is a field.
    pub fn is_domain(&self) -> bool {
        !self.is_zero_ring() && self.elements().all(|x| x == self.zero || self.is_nzd(x))
    }

    /// Ideal generated by `gens`, as a sorted member list.
    pub fn ideal(&self, gens: &[u16]) -> Vec<u16> {
        let mut seeds: BTreeSet<u16> = BTreeSet::new();
        for &g in gens {
            for r in self.elements() {
                seeds.insert(self.mul(r, g));
            }
        }
        self.additive_closure(seeds)
    }

    fn additive_closure(&self, seeds: BTreeSet<u16>) -> Vec<u16> {
        let mut members = vec![false; self.size];
        members[self.zero as usize] = true;
        let mut list = vec![self.zero];
        let mut frontier: Vec<u16> = Vec::new();
        for s in seeds {
            if !members[s as usize] {
                members[s as usize] = true;
                list.push(s);
                frontier.push(s);
            }
        }
        while let Some(x) = frontier.pop() {
            for i in 0..list.len() {
                let z = self.add(x, list[i]);
                if !members[z as usize] {
                    members[z as usize] = true;
                    list.push(z);
                    frontier.push(z);
                }
            }
        }
        list.sort_unstable();
        list
    }

    pub fn is_ideal(&self, members: &[u16]) -> bool {
        let mut inside = vec![false; self.size];
        for &m in members {
            inside[m as usize] = true;
        }
        inside[self.zero as usize]
            && members.iter().all(|&x| {
                members.iter().all(|&y| inside[self.add(x, y) as usize])
                    && self.elements().all(|r| inside[self.mul(r, x) as usize])
            })
    }

    pub fn ideal_sum(&self, a: &[u16], b: &[u16]) -> Vec<u16> {
        let gens: Vec<u16> = a.iter().chain(b).copied().collect();
        self.ideal(&gens)
    }

    pub fn ideal_product(&self, a: &[u16], b: &[u16]) -> Vec<u16> {
        let mut prods = BTreeSet::new();
        for &x in a {
            for &y in b {
                prods.insert(self.mul(x, y));
            }
        }
        self.ideal(&prods.into_iter().collect::<Vec<_>>())
    }

    pub fn ideal_power(&self, a: &[u16], n: u32) -> Vec<u16> {
        let mut acc = self.ideal(&[self.one]);
        for _ in 0..n {
            acc = self.ideal_product(&acc, a);
        }
        acc
    }

    /// Smallest subring containing `seeds`, with identity `one` (which need
    /// not be the identity of `self`).
    pub fn closure(&self, seeds: &[u16], one: u16) -> Vec<u16> {
        let mut members = vec![false; self.size];
        let mut list = Vec::new();
        let mut frontier = Vec::new();
        for &s in [self.zero, one].iter().chain(seeds) {
            if !members[s as usize] {
                members[s as usize] = true;
                list.push(s);
                frontier.push(s);
            }
        }
        while let Some(x) = frontier.pop() {
            let mut i = 0;
            while i < list.len() {
                let y = list[i];
                for z in [self.add(x, y), self.mul(x, y), self.neg(x)] {
                    if !members[z as usize] {
                        members[z as usize] = true;
                        list.push(z);
                        frontier.push(z);
                    }
                }
                i += 1;
            }
        }
        list.sort_unstable();
        list
    }

    /// Re-indexes a subset closed under `+`, `·` and negation, with identity
    /// `one`. Returns the ring and the ambient index of each new element.
    pub fn subring(&self, name: impl Into<String>, members: &[u16], one: u16) -> Result<(FiniteRing, Vec<u16>)> {
        let mut pos = vec![u16::MAX; self.size];
        for (k, &m) in members.iter().enumerate() {
            pos[m as usize] = k as u16;
        }
        let n = members.len();
        let look = |z: u16| -> Result<u16> {
            match pos[z as usize] {
                u16::MAX => Err(Error::Precondition(format!("{} escapes the subset", self.label(z)))),
                k => Ok(k),
            }
        };
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        let mut neg = vec![0u16; n];
        for (i, &x) in members.iter().enumerate() {
            neg[i] = look(self.neg(x))?;
            for (j, &y) in members.iter().enumerate() {
                add[i * n + j] = look(self.add(x, y))?;
                mul[i * n + j] = look(self.mul(x, y))?;
            }
        }
        let ring = FiniteRing {
            name: name.into(),
            size: n,
            add,
            mul,
            neg,
            zero: look(self.zero)?,
            one: look(one)?,
            labels: members.iter().map(|&m| self.labels[m as usize].clone()).collect(),
            generators: vec![],
        };
        ring.check_axioms()?;
        Ok((ring, members.to_vec()))
    }

    pub(crate) fn set_generators(&mut self, gens: Vec<u16>) {
        self.generators = gens;
    }

    /// Ring axioms on every triple for small rings, on a fixed stride sample
    /// otherwise.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.size;
        let triples: Box<dyn Iterator<Item = (u16, u16, u16)>> = if n <= FULL_AXIOM_CHECK {
            Box::new((0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x as u16, y as u16, z as u16)))))
        } else {
            Box::new((0..20_000u64).map(move |k| {
                let h = k.wrapping_mul(0x9E37_79B9_7F4A_7C15);
                (
                    (h % n as u64) as u16,
                    ((h >> 21) % n as u64) as u16,
                    ((h >> 42) % n as u64) as u16,
                )
            }))
        };
        for (x, y, z) in triples {
            let ok = self.add(x, y) == self.add(y, x)
                && self.mul(x, y) == self.mul(y, x)
                && self.add(self.add(x, y), z) == self.add(x, self.add(y, z))
                && self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z))
                && self.mul(x, self.add(y, z)) == self.add(self.mul(x, y), self.mul(x, z))
                && self.add(x, self.zero) == x
                && self.mul(x, self.one) == x
                && self.add(x, self.neg(x)) == self.zero;
            if !ok {
                return Err(Error::Precondition(format!(
                    "{}: ring axioms fail at ({}, {}, {})",
                    self.name,
                    self.label(x),
                    self.label(y),
                    self.label(z)
                )));
            }
        }
        Ok(())
    }

    /// Extends `seeds` (pairs `x ↦ y`, with `0 ↦ 0` and `1 ↦ 1` implied)
    /// to a ring hom `self → target` when the generated map is consistent and
    /// everything is reached. The result is verified on all pairs.
    pub fn extend_hom(&self, target: &FiniteRing, seeds: &[(u16, u16)]) -> Option<Vec<u16>> {
        let mut value: Vec<Option<u16>> = vec![None; self.size];
        let mut known: Vec<u16> = Vec::new();
        let mut frontier = Vec::new();
        let base = [(self.zero, target.zero), (self.one, target.one)];
        for &(x, y) in base.iter().chain(seeds) {
            match value[x as usize] {
                Some(v) if v != y => return None,
                Some(_) => {}
                None => {
                    value[x as usize] = Some(y);
                    known.push(x);
                    frontier.push(x);
                }
            }
        }
        while let Some(x) = frontier.pop() {
            let vx = value[x as usize].unwrap();
            let mut i = 0;
            while i < known.len() {
                let y = known[i];
                let vy = value[y as usize].unwrap();
                for (z, vz) in [
                    (self.add(x, y), target.add(vx, vy)),
                    (self.mul(x, y), target.mul(vx, vy)),
                    (self.neg(x), target.neg(vx)),
                ] {
                    match value[z as usize] {
                        Some(v) if v != vz => return None,
                        Some(_) => {}
                        None => {
                            value[z as usize] = Some(vz);
                            known.push(z);
                            frontier.push(z);
                        }
                    }
                }
                i += 1;
            }
        }
        let map: Vec<u16> = value.into_iter().collect::<Option<_>>()?;
        is_ring_hom(self, target, &map).then_some(map)
    }

    /// All ring homs `self → target`, by assigning images to the generators.
    pub fn homs_to(&self, target: &FiniteRing, budget: u64) -> Result<Vec<Vec<u16>>> {
        let g = self.generators.len() as u32;
        let count = (target.size as u64).checked_pow(g).filter(|&c| c <= budget);
        let Some(count) = count else {
            return Err(Error::ResourceLimit(format!(
                "{}^{} hom candidates exceed the budget {budget}",
                target.size, g
            )));
        };
        let mut out = Vec::new();
        for code in 0..count {
            let mut c = code;
            let seeds: Vec<(u16, u16)> = self
                .generators
                .iter()
                .map(|&x| {
                    let y = (c % target.size as u64) as u16;
                    c /= target.size as u64;
                    (x, y)
                })
                .collect();
            if let Some(map) = self.extend_hom(target, &seeds) {
                if !out.contains(&map) {
                    out.push(map);
                }
            }
        }
        Ok(out)
    }
}

/// Checks unit, addition and multiplication on every pair.
pub fn is_ring_hom(source: &FiniteRing, target: &FiniteRing, map: &[u16]) -> bool {
    map.len() == source.size
        && map[source.one as usize] == target.one
        && source.elements().all(|x| {
            source.elements().all(|y| {
                map[source.add(x, y) as usize] == target.add(map[x as usize], map[y as usize])
                    && map[source.mul(x, y) as usize] == target.mul(map[x as usize], map[y as usize])
            })
        })
}

/// A ring isomorphism check; the error names the failing property.
pub fn certify_iso(source: &FiniteRing, target: &FiniteRing, map: &[u16]) -> std::result::Result<(), String> {
    if source.size != target.size {
        return Err(format!("sizes differ: {} vs {}", source.size, target.size));
    }
    let mut hit = vec![false; target.size];
    for &y in map {
        if std::mem::replace(&mut hit[y as usize], true) {
            return Err(format!("{} is hit twice", target.label(y)));
        }
    }
    if !is_ring_hom(source, target, map) {
        return Err("not a ring hom".into());
    }
    Ok(())
}

fn checked_size(m: usize, d: usize, cap: usize) -> Result<usize> {
    let cap = cap.min(u16::MAX as usize);
    let mut size = 1usize;
    for _ in 0..d {
        size = size.saturating_mul(m);
        if size > cap {
            return Err(Error::SizeCap(format!("{m}^{d} elements exceed the cap {cap}")));
        }
    }
    Ok(size)
}

fn label(v: &[u32], basis: &[String]) -> String {
    let mut parts = Vec::new();
    for (c, b) in v.iter().zip(basis).rev() {
        if *c == 0 {
            continue;
        }
        parts.push(match (c, b.as_str()) {
            (_, "1") => c.to_string(),
            (1, _) => b.clone(),
            _ => format!("{c}*{b}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// A zero-dimensional `𝔽_p` presentation enumerated as a finite ring, with
/// its standard-monomial basis kept for evaluating maps out of it.
pub(crate) struct PresentedBasis {
    pub ring: FiniteRing,
    pub basis: Vec<Monomial>,
    pub modulus: u32,
}

impl PresentedBasis {
    pub fn new(alg: &PresentedAlgebra, cap: usize) -> Result<PresentedBasis> {
        let reg = alg.registry();
        let Field::Prime(p) = reg.field() else {
            return Err(Error::Precondition("finite enumeration needs a prime field".into()));
        };
        let order = alg.relations().order();
        let gb = alg.relations().groebner()?;
        let leads: Vec<Monomial> = gb.iter().filter_map(|g| g.leading_monomial(order).cloned()).collect();
        let n = reg.nvars();
        let mut bounds = vec![0u16; n];
        for (i, b) in bounds.iter_mut().enumerate() {
            *b = leads
                .iter()
                .filter(|m| m.exponents().iter().enumerate().all(|(k, &e)| k == i || e == 0))
                .map(|m| m.exponents()[i])
                .min()
                .ok_or_else(|| {
                    Error::Precondition(format!("{} is not finite-dimensional (free in {})", alg, reg.vars()[i]))
                })?;
        }
        let mut basis = Vec::new();
        if !leads.iter().any(|m| m.degree() == 0) {
            let mut exps = vec![0u16; n];
            loop {
                let m = Monomial::from_exponents(exps.clone());
                if !leads.iter().any(|l| l.divides(&m)) {
                    basis.push(m);
                }
                let mut k = 0;
                while k < n {
                    exps[k] += 1;
                    if exps[k] < bounds[k] {
                        break;
                    }
                    exps[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
            }
        }
        basis.sort_by(|a, b| order.compare(a, b));
        let d = basis.len();
        if d == 0 {
            return Ok(PresentedBasis {
                ring: FiniteRing::zero_ring().with_name(alg.to_string()),
                basis,
                modulus: p,
            });
        }
        checked_size(p as usize, d, cap)?;
        let coords = |f: &Polynomial| -> Result<Vec<u32>> {
            let mut v = vec![0u32; d];
            for (m, c) in f.terms() {
                let k = basis
                    .iter()
                    .position(|b| b == m)
                    .ok_or_else(|| Error::Precondition(format!("{m:?} is not a standard monomial")))?;
                v[k] = scalar_value(c);
            }
            Ok(v)
        };
        let mut products = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let prod = Polynomial::monomial(reg, basis[i].mul(&basis[j]), reg.field().one());
                products[i][j] = coords(&alg.reduce(&prod)?)?;
            }
        }
        let one = coords(&alg.reduce(&Polynomial::one(reg))?)?;
        let generators = (0..n)
            .map(|i| coords(&alg.reduce(&Polynomial::var(reg, i))?))
            .collect::<Result<Vec<_>>>()?;
        let names = basis
            .iter()
            .map(|m| Polynomial::monomial(reg, m.clone(), reg.field().one()).to_string())
            .collect();
        let s = Structure {
            modulus: p,
            basis: names,
            products,
            one,
            generators,
        };
        let ring = FiniteRing::from_structure(alg.to_string(), &s, cap)?;
        Ok(PresentedBasis { ring, basis, modulus: p })
    }

    /// Index of the element with the given basis coordinates.
    pub fn encode(&self, coords: &[u32]) -> u16 {
        coords.iter().rev().fold(0usize, |acc, &c| acc * self.modulus as usize + c as usize) as u16
    }

    /// Index of a polynomial's class.
    pub fn element(&self, alg: &PresentedAlgebra, f: &Polynomial) -> Result<u16> {
        let r = alg.reduce(f)?;
        let mut v = vec![0u32; self.basis.len()];
        for (m, c) in r.terms() {
            match self.basis.iter().position(|b| b == m) {
                Some(k) => v[k] = scalar_value(c),
                None if self.basis.is_empty() => {}
                None => return Err(Error::Precondition("normal form leaves the standard monomials".into())),
            }
        }
        Ok(self.encode(&v))
    }

    /// Basis coordinates of an element index.
    pub fn coordinates(&self, x: u16) -> Vec<u32> {
        let mut x = x as usize;
        (0..self.basis.len())
            .map(|_| {
                let c = (x % self.modulus as usize) as u32;
                x /= self.modulus as usize;
                c
            })
            .collect()
    }
}

fn scalar_value(c: &FieldScalar) -> u32 {
    match c {
        FieldScalar::Prime { value, .. } => *value,
        FieldScalar::Rational(_) => unreachable!("prime field checked"),
    }
}

/// Value of `f` in `ring` when variable `i` goes to `images[i]`.
pub fn evaluate(ring: &FiniteRing, f: &Polynomial, images: &[u16]) -> Result<u16> {
    let mut acc = ring.zero();
    for (m, c) in f.terms() {
        let k = match c {
            FieldScalar::Prime { value, .. } => *value as i64,
            FieldScalar::Rational(q) if q.is_integer() => i64::try_from(q.numer())
                .map_err(|_| Error::Input(format!("coefficient {q} too large")))?,
            FieldScalar::Rational(q) => return Err(Error::Input(format!("coefficient {q} is not integral"))),
        };
        let mut term = ring.from_int(k);
        for (i, &e) in m.exponents().iter().enumerate() {
            term = ring.mul(term, ring.pow(images[i], e as u64));
        }
        acc = ring.add(acc, term);
    }
    Ok(acc)
}
