use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient domain of a polynomial registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rationals.
    Rational,
    /// The prime field of the given characteristic.
    Prime(u32),
}

impl Field {
    /// Builds `𝔽_p`, rejecting non-primes and `p ≥ 2^31`.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= 1 << 31 {
            return Err(Error::Input(format!("prime {p} is not below 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::Input(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn zero(self) -> FieldScalar {
        match self {
            Field::Rational => FieldScalar::Rational(BigRational::zero()),
            Field::Prime(p) => FieldScalar::Prime { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> FieldScalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> FieldScalar {
        match self {
            Field::Rational => FieldScalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => FieldScalar::Prime {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// Maps a rational into the field; fails when the denominator vanishes mod p.
    pub fn from_rational(self, q: &BigRational) -> Result<FieldScalar> {
        match self {
            Field::Rational => Ok(FieldScalar::Rational(q.clone())),
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let num = reduce_bigint(q.numer(), &m);
                let den = reduce_bigint(q.denom(), &m);
                if den == 0 {
                    return Err(Error::Input(format!(
                        "denominator {} vanishes modulo {p}",
                        q.denom()
                    )));
                }
                let num = FieldScalar::Prime { value: num, modulus: p };
                let den = FieldScalar::Prime { value: den, modulus: p };
                Ok(num.mul(&den.inv()))
            }
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "Fp({p})"),
        }
    }
}

fn reduce_bigint(n: &BigInt, m: &BigInt) -> u32 {
    let r = ((n % m) + m) % m;
    u32::try_from(r).expect("residue fits in u32")
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element: a reduced rational or a residue in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Rational(BigRational),
    Prime { value: u32, modulus: u32 },
}

impl FieldScalar {
    pub fn field(&self) -> Field {
        match self {
            FieldScalar::Rational(_) => Field::Rational,
            FieldScalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rational(q) => q.is_zero(),
            FieldScalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldScalar::Rational(q) => q.is_one(),
            FieldScalar::Prime { value, .. } => *value == 1,
        }
    }

    /// Sign used by the printer; residues are always printed as nonnegative.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldScalar::Rational(q) => q.is_negative(),
            FieldScalar::Prime { .. } => false,
        }
    }

    pub fn add(&self, other: &FieldScalar) -> FieldScalar {
        match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a + b),
            (
                FieldScalar::Prime { value: a, modulus: p },
                FieldScalar::Prime { value: b, modulus: q },
            ) => {
                debug_assert_eq!(p, q);
                FieldScalar::Prime {
                    value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn neg(&self) -> FieldScalar {
        match self {
            FieldScalar::Rational(a) => FieldScalar::Rational(-a),
            FieldScalar::Prime { value, modulus } => FieldScalar::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn sub(&self, other: &FieldScalar) -> FieldScalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldScalar) -> FieldScalar {
        match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a * b),
            (
                FieldScalar::Prime { value: a, modulus: p },
                FieldScalar::Prime { value: b, modulus: q },
            ) => {
                debug_assert_eq!(p, q);
                FieldScalar::Prime {
                    value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> FieldScalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            FieldScalar::Rational(a) => FieldScalar::Rational(a.recip()),
            FieldScalar::Prime { value, modulus } => {
                let p = *modulus as i64;
                let (mut r0, mut r1) = (p, *value as i64);
                let (mut t0, mut t1) = (0i64, 1i64);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (t0, t1) = (t1, t0 - q * t1);
                }
                FieldScalar::Prime {
                    value: t0.rem_euclid(p) as u32,
                    modulus: *modulus,
                }
            }
        }
    }

    pub fn div(&self, other: &FieldScalar) -> FieldScalar {
        self.mul(&other.inv())
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldScalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}
