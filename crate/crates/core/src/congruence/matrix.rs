use num_integer::Integer;

use crate::oracle::FiniteRing;

/// Coefficients for matrix groups: `ℤ/q` directly, or any enumerated ring.
pub trait Coeffs: Sync {
    fn zero(&self) -> u32;
    fn one(&self) -> u32;
    fn add(&self, a: u32, b: u32) -> u32;
    fn mul(&self, a: u32, b: u32) -> u32;
    fn neg(&self, a: u32) -> u32;
    fn inverse(&self, a: u32) -> Option<u32>;
    fn size(&self) -> usize;
    fn element(&self, k: usize) -> u32;

    fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }
}

/// `ℤ/q` with no tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Zmod(pub u32);

impl Coeffs for Zmod {
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.0
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        (a as u64 * b as u64 % self.0 as u64) as u32
    }
    fn neg(&self, a: u32) -> u32 {
        (self.0 - a % self.0) % self.0
    }
    fn inverse(&self, a: u32) -> Option<u32> {
        let g = (a as i64).extended_gcd(&(self.0 as i64));
        (g.gcd == 1).then(|| g.x.rem_euclid(self.0 as i64) as u32)
    }
    fn size(&self) -> usize {
        self.0 as usize
    }
    fn element(&self, k: usize) -> u32 {
        k as u32
    }
}

impl Coeffs for FiniteRing {
    fn zero(&self) -> u32 {
        FiniteRing::zero(self) as u32
    }
    fn one(&self) -> u32 {
        FiniteRing::one(self) as u32
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        FiniteRing::add(self, a as u16, b as u16) as u32
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        FiniteRing::mul(self, a as u16, b as u16) as u32
    }
    fn neg(&self, a: u32) -> u32 {
        FiniteRing::neg(self, a as u16) as u32
    }
    fn inverse(&self, a: u32) -> Option<u32> {
        FiniteRing::inverse(self, a as u16).map(u32::from)
    }
    fn size(&self) -> usize {
        FiniteRing::size(self)
    }
    fn element(&self, k: usize) -> u32 {
        k as u32
    }
}

/// Square matrix in row-major order.
pub type Mat = Vec<u32>;

pub fn identity<C: Coeffs + ?Sized>(c: &C, n: usize) -> Mat {
    let mut m = vec![c.zero(); n * n];
    for i in 0..n {
        m[i * n + i] = c.one();
    }
    m
}

pub fn mat_mul<C: Coeffs + ?Sized>(c: &C, n: usize, a: &[u32], b: &[u32]) -> Mat {
    let mut out = vec![c.zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == c.zero() {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = c.add(out[i * n + j], c.mul(x, b[k * n + j]));
            }
        }
    }
    out
}

pub fn mat_add<C: Coeffs + ?Sized>(c: &C, a: &[u32], b: &[u32]) -> Mat {
    a.iter().zip(b).map(|(&x, &y)| c.add(x, y)).collect()
}

pub fn mat_sub<C: Coeffs + ?Sized>(c: &C, a: &[u32], b: &[u32]) -> Mat {
    a.iter().zip(b).map(|(&x, &y)| c.sub(x, y)).collect()
}

pub fn trace<C: Coeffs + ?Sized>(c: &C, n: usize, a: &[u32]) -> u32 {
    (0..n).fold(c.zero(), |acc, i| c.add(acc, a[i * n + i]))
}

fn minor(n: usize, a: &[u32], row: usize, col: usize) -> Mat {
    let mut out = Vec::with_capacity((n - 1) * (n - 1));
    for i in (0..n).filter(|&i| i != row) {
        for j in (0..n).filter(|&j| j != col) {
            out.push(a[i * n + j]);
        }
    }
    out
}

/// Laplace expansion along the first row.
pub fn det<C: Coeffs + ?Sized>(c: &C, n: usize, a: &[u32]) -> u32 {
    match n {
        0 => c.one(),
        1 => a[0],
        2 => c.sub(c.mul(a[0], a[3]), c.mul(a[1], a[2])),
        _ => (0..n).fold(c.zero(), |acc, j| {
            let term = c.mul(a[j], det(c, n - 1, &minor(n, a, 0, j)));
            if j % 2 == 0 {
                c.add(acc, term)
            } else {
                c.sub(acc, term)
            }
        }),
    }
}

/// Adjugate divided by the determinant.
pub fn inverse<C: Coeffs + ?Sized>(c: &C, n: usize, a: &[u32]) -> Option<Mat> {
    let d = c.inverse(det(c, n, a))?;
    if n == 1 {
        return Some(vec![d]);
    }
    let mut out = vec![c.zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            let cof = det(c, n - 1, &minor(n, a, j, i));
            let cof = if (i + j) % 2 == 0 { cof } else { c.neg(cof) };
            out[i * n + j] = c.mul(cof, d);
        }
    }
    Some(out)
}

pub fn format_mat(n: usize, a: &[u32]) -> String {
    let rows: Vec<String> = a
        .chunks(n)
        .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}
