//! Dilated matrix groups over `ℤ/p^N`: points with congruence conditions,
//! their Lie lattices, the quotient isomorphism `g ↦ g − 1`, and the
//! normalizer criterion, all by exhaustive enumeration.

mod checks;
mod matrix;
mod points;

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Field;

pub use checks::{congruent_iso_check, normalizer_check};
pub use matrix::{det, format_mat, identity, inverse, mat_add, mat_mul, mat_sub, trace, Coeffs, Mat, Zmod};
pub use points::{group_points, lie_points, subgroup_points, EnumeratedGroup, EnumeratedLattice, CANDIDATE_BUDGET};

/// `ℤ/p^N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LevelRing {
    p: u32,
    level: u32,
    modulus: u32,
}

impl LevelRing {
    pub fn new(p: u32, level: u32) -> Result<LevelRing> {
        Field::prime(p as u64)?;
        if level == 0 {
            return Err(Error::Input("level must be at least 1".into()));
        }
        let modulus = (p as u64)
            .checked_pow(level)
            .filter(|&q| q <= 1 << 20)
            .ok_or_else(|| Error::Input(format!("{p}^{level} exceeds 2^20")))?;
        Ok(LevelRing {
            p,
            level,
            modulus: modulus as u32,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn coeffs(&self) -> Zmod {
        Zmod(self.modulus)
    }

    /// `p^v`.
    pub fn power(&self, v: u32) -> u32 {
        self.p.pow(v)
    }
}

impl fmt::Display for LevelRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{}^{}", self.p, self.level)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambient {
    GL,
    SL,
}

/// `GL_n` or `SL_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub ambient: Ambient,
    pub n: usize,
}

impl GroupSpec {
    pub fn gl(n: usize) -> GroupSpec {
        GroupSpec { ambient: Ambient::GL, n }
    }

    pub fn sl(n: usize) -> GroupSpec {
        GroupSpec { ambient: Ambient::SL, n }
    }

    /// Whether `g` lies in the ambient group over `c`.
    pub fn contains<C: Coeffs + ?Sized>(&self, c: &C, g: &[u32]) -> bool {
        let d = det(c, self.n, g);
        match self.ambient {
            Ambient::GL => c.inverse(d).is_some(),
            Ambient::SL => d == c.one(),
        }
    }

    /// Whether `x` lies in the Lie algebra `gl_n` or `sl_n`.
    pub fn lie_contains<C: Coeffs + ?Sized>(&self, c: &C, x: &[u32]) -> bool {
        match self.ambient {
            Ambient::GL => true,
            Ambient::SL => trace(c, self.n, x) == c.zero(),
        }
    }

    pub fn lie_dimension(&self) -> usize {
        match self.ambient {
            Ambient::GL => self.n * self.n,
            Ambient::SL => self.n * self.n - 1,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ambient {
            Ambient::GL => write!(f, "GL({})", self.n),
            Ambient::SL => write!(f, "SL({})", self.n),
        }
    }
}

/// Standard smooth subgroups of `GL_n`, intersected with the ambient group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupKind {
    Trivial,
    /// Diagonal torus.
    Torus,
    /// Upper triangular.
    Borel,
    /// Block diagonal with the given block sizes.
    Levi(Vec<usize>),
    /// Scalars.
    Center,
    Full,
}

impl SubgroupKind {
    pub fn validate(&self, n: usize) -> Result<()> {
        if let SubgroupKind::Levi(blocks) = self {
            if blocks.iter().sum::<usize>() != n || blocks.contains(&0) {
                return Err(Error::Input(format!("Levi blocks {blocks:?} do not partition {n}")));
            }
        }
        Ok(())
    }

    /// Positions allowed to be nonzero, for the non-scalar shapes.
    fn free(&self, n: usize) -> Vec<bool> {
        let mut f = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                f[i * n + j] = match self {
                    SubgroupKind::Trivial | SubgroupKind::Center => i == j,
                    SubgroupKind::Torus => i == j,
                    SubgroupKind::Borel => i <= j,
                    SubgroupKind::Levi(blocks) => block_of(blocks, i) == block_of(blocks, j),
                    SubgroupKind::Full => true,
                };
            }
        }
        f
    }

    /// Whether `g` has this shape (identity for `Trivial`).
    pub fn group_shape<C: Coeffs + ?Sized>(&self, c: &C, n: usize, g: &[u32]) -> bool {
        match self {
            SubgroupKind::Trivial => g == identity(c, n).as_slice(),
            _ => self.lie_shape(c, n, g),
        }
    }

    /// Whether `x` lies in this subgroup's Lie algebra inside `gl_n`.
    pub fn lie_shape<C: Coeffs + ?Sized>(&self, c: &C, n: usize, x: &[u32]) -> bool {
        match self {
            SubgroupKind::Trivial => x.iter().all(|&v| v == c.zero()),
            SubgroupKind::Center => {
                let free = self.free(n);
                x.iter().zip(&free).all(|(&v, &f)| f || v == c.zero()) && (0..n).all(|i| x[i * n + i] == x[0])
            }
            _ => x.iter().zip(self.free(n)).all(|(&v, f)| f || v == c.zero()),
        }
    }

    /// Every matrix of this shape over `c`, up to `budget` of them.
    pub(crate) fn shapes<C: Coeffs + ?Sized>(&self, c: &C, n: usize, lie: bool, budget: u64) -> Result<Vec<Mat>> {
        let q = c.size() as u64;
        match self {
            SubgroupKind::Trivial => Ok(vec![if lie { vec![c.zero(); n * n] } else { identity(c, n) }]),
            SubgroupKind::Center => Ok((0..c.size())
                .map(|k| {
                    let mut m = vec![c.zero(); n * n];
                    for i in 0..n {
                        m[i * n + i] = c.element(k);
                    }
                    m
                })
                .collect()),
            _ => {
                let free: Vec<usize> = self.free(n).iter().enumerate().filter(|(_, &f)| f).map(|(i, _)| i).collect();
                let count = q
                    .checked_pow(free.len() as u32)
                    .filter(|&x| x <= budget)
                    .ok_or_else(|| Error::ResourceLimit(format!("{q}^{} shape matrices exceed the budget", free.len())))?;
                Ok((0..count)
                    .map(|mut code| {
                        let mut m = vec![c.zero(); n * n];
                        for &pos in &free {
                            m[pos] = c.element((code % q) as usize);
                            code /= q;
                        }
                        m
                    })
                    .collect())
            }
        }
    }

    /// Number of shape matrices over a ring of `q` elements.
    pub(crate) fn shape_count(&self, q: u64, n: usize) -> Option<u64> {
        match self {
            SubgroupKind::Trivial => Some(1),
            SubgroupKind::Center => Some(q),
            _ => q.checked_pow(self.free(n).iter().filter(|&&f| f).count() as u32),
        }
    }
}

fn block_of(blocks: &[usize], i: usize) -> usize {
    let mut acc = 0;
    for (b, &size) in blocks.iter().enumerate() {
        acc += size;
        if i < acc {
            return b;
        }
    }
    blocks.len()
}

impl fmt::Display for SubgroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupKind::Trivial => write!(f, "e"),
            SubgroupKind::Torus => write!(f, "T"),
            SubgroupKind::Borel => write!(f, "B"),
            SubgroupKind::Levi(b) => write!(
                f,
                "L({})",
                b.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            ),
            SubgroupKind::Center => write!(f, "Z"),
            SubgroupKind::Full => write!(f, "G"),
        }
    }
}

impl std::str::FromStr for SubgroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<SubgroupKind> {
        let s = s.trim();
        Ok(match s {
            "e" | "trivial" => SubgroupKind::Trivial,
            "T" | "torus" => SubgroupKind::Torus,
            "B" | "borel" => SubgroupKind::Borel,
            "Z" | "center" => SubgroupKind::Center,
            "G" | "full" => SubgroupKind::Full,
            _ if s.starts_with("L(") && s.ends_with(')') => SubgroupKind::Levi(
                s[2..s.len() - 1]
                    .split(',')
                    .map(|b| b.trim().parse::<usize>().map_err(|_| Error::Input(format!("bad Levi block in {s}"))))
                    .collect::<Result<_>>()?,
            ),
            _ => return Err(Error::Input(format!("unknown subgroup {s}"))),
        })
    }
}
