//! 2x2 matrices over `Z/NZ` and the products `M_n(a_1, ..., a_n)` of the
//! elementary factors `[[a_i, -1], [1, 0]]` (with `a_n` leftmost).

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::residue::{Modulus, Residue};

/// The sign `ε` in `M_n = ε·Id`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

/// Outcome of testing a matrix against `±Id`.
///
/// `sign` is `None` when the matrix is neither. For modulus 2 the two
/// identities coincide; the sign is then reported as `Plus` with
/// `ambiguous` set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PmIdentity {
    pub sign: Option<Sign>,
    pub ambiguous: bool,
}

impl PmIdentity {
    pub fn is_pm_identity(self) -> bool {
        self.sign.is_some()
    }
}

/// A 2x2 matrix over `Z/NZ`, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mat2 {
    modulus: Modulus,
    e: [u64; 4],
}

impl Mat2 {
    pub fn new(modulus: Modulus, entries: [i128; 4]) -> Self {
        Mat2 {
            modulus,
            e: entries.map(|v| modulus.reduce(v)),
        }
    }

    pub fn identity(modulus: Modulus) -> Self {
        Mat2::new(modulus, [1, 0, 0, 1])
    }

    /// The elementary factor `[[a, -1], [1, 0]]`.
    pub fn elementary(a: Residue) -> Self {
        Mat2::new(a.modulus(), [a.rep() as i128, -1, 1, 0])
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// Entry at `(row, col)`, zero-indexed.
    pub fn entry(&self, row: usize, col: usize) -> Residue {
        Residue::new(self.modulus, self.e[2 * row + col] as i128)
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        assert_eq!(
            self.modulus, rhs.modulus,
            "matrix arithmetic across different moduli"
        );
        let n = self.modulus.get() as u128;
        let a = &self.e;
        let b = &rhs.e;
        let mm = |i: usize, j: usize, k: usize, l: usize| {
            ((a[i] as u128 * b[j] as u128 + a[k] as u128 * b[l] as u128) % n) as u64
        };
        Mat2 {
            modulus: self.modulus,
            e: [
                mm(0, 0, 1, 2),
                mm(0, 1, 1, 3),
                mm(2, 0, 3, 2),
                mm(2, 1, 3, 3),
            ],
        }
    }

    pub fn neg(&self) -> Mat2 {
        let n = self.modulus.get();
        Mat2 {
            modulus: self.modulus,
            e: self.e.map(|v| if v == 0 { 0 } else { n - v }),
        }
    }

    pub fn det(&self) -> Residue {
        let n = self.modulus.get() as u128;
        let ad = self.e[0] as u128 * self.e[3] as u128 % n;
        let bc = self.e[1] as u128 * self.e[2] as u128 % n;
        let d = (ad + n - bc) % n;
        Residue::new(self.modulus, d as i128)
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::identity(self.modulus)
    }

    /// Classification against `±Id`.
    pub fn pm_identity(&self) -> PmIdentity {
        let n = self.modulus.get();
        if self.is_identity() {
            return PmIdentity {
                sign: Some(Sign::Plus),
                ambiguous: n == 2,
            };
        }
        if *self == Mat2::identity(self.modulus).neg() {
            return PmIdentity {
                sign: Some(Sign::Minus),
                ambiguous: false,
            };
        }
        PmIdentity {
            sign: None,
            ambiguous: false,
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e[0], self.e[1], self.e[2], self.e[3]
        )
    }
}

/// The product `M_n(a_1, ..., a_n)` over the entries' modulus, `a_n`
/// leftmost. Errors on an empty slice.
pub fn m_n(modulus: Modulus, entries: &[u64]) -> Result<Mat2> {
    let (&first, rest) = entries.split_first().ok_or(Error::EmptyTuple)?;
    let mut acc = Mat2::elementary(modulus.residue(first as i128));
    for &a in rest {
        acc = Mat2::elementary(modulus.residue(a as i128)).mul(&acc);
    }
    debug_assert_eq!(acc.det().rep(), 1 % modulus.get());
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let x = Mat2::new(m(7), [2, 3, 4, 5]);
        assert_eq!(Mat2::identity(m(7)).mul(&x), x);
        assert_eq!(x.mul(&Mat2::identity(m(7))), x);
    }

    #[test]
    fn elementary_square_mod_5() {
        let f = Mat2::elementary(m(5).residue(1));
        assert_eq!(f.mul(&f), Mat2::new(m(5), [0, -1, 1, -1]));
        assert_eq!(f.mul(&f), Mat2::new(m(5), [0, 4, 1, 4]));
    }

    #[test]
    fn elementary_determinant_is_one() {
        for n in [2u64, 5, 12, 97] {
            for a in 0..n.min(20) {
                assert_eq!(Mat2::elementary(m(n).residue(a as i128)).det().rep(), 1);
            }
        }
    }

    #[test]
    fn product_examples() {
        // (1,1,1) mod 7 gives -Id.
        let p = m_n(m(7), &[1, 1, 1]).unwrap();
        assert_eq!(p, Mat2::identity(m(7)).neg());
        assert_eq!(p.pm_identity().sign, Some(Sign::Minus));
        // (0,0) gives -Id over any modulus.
        for n in [2u64, 5, 14] {
            let q = m_n(m(n), &[0, 0]).unwrap();
            assert!(q.pm_identity().is_pm_identity());
            if n > 2 {
                assert_eq!(q.pm_identity().sign, Some(Sign::Minus));
            }
        }
        // A single factor is the elementary matrix itself.
        assert_eq!(
            m_n(m(5), &[2]).unwrap(),
            Mat2::new(m(5), [2, 4, 1, 0])
        );
        assert_eq!(m_n(m(5), &[]), Err(Error::EmptyTuple));
    }

    #[test]
    fn pm_identity_cases() {
        assert_eq!(
            Mat2::new(m(5), [2, 4, 1, 0]).pm_identity(),
            PmIdentity {
                sign: None,
                ambiguous: false
            }
        );
        // Mod 2, Id = -Id is reported as Plus and flagged.
        let two = Mat2::identity(m(2));
        assert_eq!(
            two.pm_identity(),
            PmIdentity {
                sign: Some(Sign::Plus),
                ambiguous: true
            }
        );
        assert_eq!(two.neg(), two);
    }
}
