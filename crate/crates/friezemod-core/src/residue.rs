//! The ring `Z/NZ` with canonical representatives in `[0, N)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// The modulus `N >= 2` of a residue ring `Z/NZ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(value: u64) -> Result<Self> {
        if value >= 2 {
            Ok(Modulus(value))
        } else {
            Err(Error::InvalidModulus(value as i128))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Canonical representative of `value + NZ`.
    pub fn reduce(self, value: i128) -> u64 {
        value.rem_euclid(self.0 as i128) as u64
    }

    pub fn residue(self, value: i128) -> Residue {
        Residue::new(self, value)
    }

    pub fn zero(self) -> Residue {
        self.residue(0)
    }

    pub fn one(self) -> Residue {
        self.residue(1)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of `Z/NZ`, stored as its canonical representative in `[0, N)`.
///
/// Two residues are equal iff both the modulus and the representative agree.
/// Arithmetic between residues of different moduli is a caller bug and
/// panics; fallible entry points (`CTuple`, `Mat2`, parsers) check moduli up
/// front and return [`Error::ModulusMismatch`] instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Residue {
    modulus: Modulus,
    rep: u64,
}

impl Residue {
    pub fn new(modulus: Modulus, value: i128) -> Self {
        Residue {
            modulus,
            rep: modulus.reduce(value),
        }
    }

    pub(crate) fn from_rep(modulus: Modulus, rep: u64) -> Self {
        debug_assert!(rep < modulus.get());
        Residue { modulus, rep }
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    /// Canonical representative in `[0, N)`.
    pub fn rep(self) -> u64 {
        self.rep
    }

    /// Representative in the balanced window `(-N/2, N/2]`.
    pub fn balanced(self) -> i64 {
        let n = self.modulus.get() as i64;
        let r = self.rep as i64;
        if 2 * r > n {
            r - n
        } else {
            r
        }
    }

    pub fn is_zero(self) -> bool {
        self.rep == 0
    }

    fn expect_same_modulus(self, other: Residue) {
        assert_eq!(
            self.modulus, other.modulus,
            "residue arithmetic across different moduli"
        );
    }

    pub fn pow(self, mut exp: u64) -> Residue {
        let n = self.modulus.get() as u128;
        let mut base = self.rep as u128;
        let mut acc: u128 = 1 % n;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % n;
            }
            base = base * base % n;
            exp >>= 1;
        }
        Residue::from_rep(self.modulus, acc as u64)
    }

    /// Multiplicative inverse, when `gcd(rep, N) = 1`.
    pub fn inv(self) -> Result<Residue> {
        let n = self.modulus.get() as i128;
        let egcd = (self.rep as i128).extended_gcd(&n);
        if egcd.gcd == 1 {
            Ok(Residue::new(self.modulus, egcd.x))
        } else {
            Err(Error::NoInverse {
                value: self.rep,
                modulus: self.modulus.get(),
                gcd: egcd.gcd as u64,
            })
        }
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        self.expect_same_modulus(rhs);
        let n = self.modulus.get();
        let mut s = self.rep + rhs.rep; // < 2N <= 2^64 for N < 2^63
        if s >= n {
            s -= n;
        }
        Residue::from_rep(self.modulus, s)
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        self.expect_same_modulus(rhs);
        let n = self.modulus.get();
        let s = if self.rep >= rhs.rep {
            self.rep - rhs.rep
        } else {
            self.rep + n - rhs.rep
        };
        Residue::from_rep(self.modulus, s)
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        self.expect_same_modulus(rhs);
        let n = self.modulus.get() as u128;
        let p = (self.rep as u128 * rhs.rep as u128 % n) as u64;
        Residue::from_rep(self.modulus, p)
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        let n = self.modulus.get();
        let r = if self.rep == 0 { 0 } else { n - self.rep };
        Residue::from_rep(self.modulus, r)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}
