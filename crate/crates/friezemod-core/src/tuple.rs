//! Tuples over `Z/NZ` as solution candidates: the boundary-merging sum `⊕`
//! and the dihedral equivalence `~` (rotations of a tuple or of its
//! reversal).

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mat::Mat2;
use crate::residue::{Modulus, Residue};

/// A finite nonempty tuple of residues sharing one modulus.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CTuple {
    modulus: Modulus,
    entries: Vec<u64>,
}

impl CTuple {
    pub fn new<I>(modulus: Modulus, values: I) -> Result<Self>
    where
        I: IntoIterator<Item = i128>,
    {
        let entries: Vec<u64> = values.into_iter().map(|v| modulus.reduce(v)).collect();
        if entries.is_empty() {
            return Err(Error::EmptyTuple);
        }
        Ok(CTuple { modulus, entries })
    }

    pub(crate) fn from_reps(modulus: Modulus, entries: Vec<u64>) -> Self {
        debug_assert!(!entries.is_empty());
        debug_assert!(entries.iter().all(|&r| r < modulus.get()));
        CTuple { modulus, entries }
    }

    /// The constant tuple `(k, ..., k)` of length `n`.
    pub fn constant(modulus: Modulus, k: i128, n: usize) -> Result<Self> {
        CTuple::new(modulus, std::iter::repeat_n(k, n))
    }

    /// The alternating tuple `(k, -k, k, -k, ...)` of even length `n`.
    pub fn alternating(modulus: Modulus, k: i128, n: usize) -> Result<Self> {
        if n == 0 || n % 2 != 0 {
            return Err(Error::invalid(format!(
                "alternating tuples have positive even length, got {n}"
            )));
        }
        CTuple::new(
            modulus,
            (0..n).map(|i| if i % 2 == 0 { k } else { -k }),
        )
    }

    /// Parses a comma-separated list of integers, normalizing mod `N`.
    pub fn parse(modulus: Modulus, text: &str) -> Result<Self> {
        let values: Vec<i128> = text
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<i128>()
                    .map_err(|_| Error::Parse(text.to_string()))
            })
            .collect::<Result<_>>()?;
        CTuple::new(modulus, values)
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty() // always false by invariant
    }

    /// Canonical representatives of the entries.
    pub fn reps(&self) -> &[u64] {
        &self.entries
    }

    pub fn residue(&self, i: usize) -> Residue {
        Residue::new(self.modulus, self.entries[i] as i128)
    }

    pub fn matrix(&self) -> Mat2 {
        crate::mat::m_n(self.modulus, &self.entries).expect("tuples are nonempty")
    }

    /// Entry-wise negation.
    pub fn negated(&self) -> CTuple {
        CTuple::from_reps(
            self.modulus,
            self.entries
                .iter()
                .map(|&a| (-self.modulus.residue(a as i128)).rep())
                .collect(),
        )
    }

    pub fn rotated_left(&self, by: usize) -> CTuple {
        let n = self.len();
        let by = by % n;
        let mut entries = Vec::with_capacity(n);
        entries.extend_from_slice(&self.entries[by..]);
        entries.extend_from_slice(&self.entries[..by]);
        CTuple::from_reps(self.modulus, entries)
    }

    pub fn reversed(&self) -> CTuple {
        let mut entries = self.entries.clone();
        entries.reverse();
        CTuple::from_reps(self.modulus, entries)
    }

    /// The sum `⊕`: `(a_1..a_n) ⊕ (b_1..b_m)` merges the boundaries into
    /// `(a_1+b_m, a_2, ..., a_{n-1}, a_n+b_1, b_2, ..., b_{m-1})` of length
    /// `n + m - 2`. Both operands need at least two entries.
    pub fn oplus(&self, rhs: &CTuple) -> Result<CTuple> {
        if self.modulus != rhs.modulus {
            return Err(Error::ModulusMismatch(
                self.modulus.get(),
                rhs.modulus.get(),
            ));
        }
        let n = self.len();
        let m = rhs.len();
        if n < 2 {
            return Err(Error::OperandTooShort(n));
        }
        if m < 2 {
            return Err(Error::OperandTooShort(m));
        }
        let mut entries = Vec::with_capacity(n + m - 2);
        entries.push((self.residue(0) + rhs.residue(m - 1)).rep());
        entries.extend_from_slice(&self.entries[1..n - 1]);
        entries.push((self.residue(n - 1) + rhs.residue(0)).rep());
        entries.extend_from_slice(&rhs.entries[1..m - 1]);
        Ok(CTuple::from_reps(self.modulus, entries))
    }

    /// All distinct members of the `~` class: rotations of the tuple and of
    /// its reversal, sorted lexicographically.
    pub fn equivalence_class(&self) -> Vec<CTuple> {
        self.class_with_transforms()
            .into_iter()
            .map(|(_, t)| t)
            .collect()
    }

    /// The `~` class together with, for each member, the first transform
    /// (in the order: unreflected rotations by 0..n, then reflected ones)
    /// that produces it from `self`. Members are sorted lexicographically.
    pub fn class_with_transforms(&self) -> Vec<(Transform, CTuple)> {
        let n = self.len();
        let mut seen: Vec<(Transform, CTuple)> = Vec::new();
        for &reflected in &[false, true] {
            let base = if reflected { self.reversed() } else { self.clone() };
            for rotation in 0..n {
                let member = base.rotated_left(rotation);
                if !seen.iter().any(|(_, t)| *t == member) {
                    seen.push((
                        Transform {
                            reflected,
                            rotation,
                        },
                        member,
                    ));
                }
            }
        }
        seen.sort_by(|(_, a), (_, b)| a.cmp(b));
        seen
    }

    /// Lexicographically smallest member of the `~` class; the dedup key
    /// used by enumeration.
    pub fn canonical_form(&self) -> CTuple {
        self.class_with_transforms()
            .into_iter()
            .next()
            .map(|(_, t)| t)
            .expect("class of a nonempty tuple is nonempty")
    }
}

impl fmt::Display for CTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &a in &self.entries {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
            first = false;
        }
        Ok(())
    }
}

/// An element of the dihedral action on tuples: an optional reversal
/// followed by a left rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Transform {
    pub reflected: bool,
    pub rotation: usize,
}

impl Transform {
    pub fn identity() -> Self {
        Transform {
            reflected: false,
            rotation: 0,
        }
    }

    pub fn apply(&self, t: &CTuple) -> CTuple {
        let base = if self.reflected { t.reversed() } else { t.clone() };
        base.rotated_left(self.rotation)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    fn t(n: u64, vals: &[i128]) -> CTuple {
        CTuple::new(m(n), vals.iter().copied()).unwrap()
    }

    #[test]
    fn construction_and_parsing() {
        assert_eq!(CTuple::new(m(5), []), Err(Error::EmptyTuple));
        let parsed = CTuple::parse(m(11), "6, -2, 2 ,-2,6").unwrap();
        assert_eq!(parsed.reps(), &[6, 9, 2, 9, 6]);
        assert_eq!(parsed.to_string(), "6,9,2,9,6");
        assert!(CTuple::parse(m(11), "1,,2").is_err());
        assert!(CTuple::parse(m(11), "1;2").is_err());
        assert_eq!(CTuple::alternating(m(11), 2, 4).unwrap().reps(), &[2, 9, 2, 9]);
        assert!(CTuple::alternating(m(11), 2, 5).is_err());
        assert_eq!(CTuple::constant(m(7), 3, 2).unwrap().reps(), &[3, 3]);
    }

    #[test]
    fn oplus_examples() {
        // (1,2,3) ⊕ (4,1,3,2) = (3,2,7,1,3) mod 11.
        let a = t(11, &[1, 2, 3]);
        let b = t(11, &[4, 1, 3, 2]);
        assert_eq!(a.oplus(&b).unwrap(), t(11, &[3, 2, 7, 1, 3]));
        // (4,0,1,2) ⊕ (-1,0,1) = (5,0,1,1,0) mod 11.
        let c = t(11, &[4, 0, 1, 2]);
        let d = t(11, &[-1, 0, 1]);
        assert_eq!(c.oplus(&d).unwrap(), t(11, &[5, 0, 1, 1, 0]));
        // (0,0) is a right identity; on the left it rotates, which is the
        // same tuple up to ~.
        let zz = t(11, &[0, 0]);
        assert_eq!(a.oplus(&zz).unwrap(), a);
        let left = zz.oplus(&a).unwrap();
        assert_eq!(left, t(11, &[3, 1, 2]));
        assert_eq!(left.canonical_form(), a.canonical_form());
    }

    #[test]
    fn oplus_errors() {
        let a = t(11, &[1, 2, 3]);
        assert_eq!(
            a.oplus(&t(7, &[1, 2])),
            Err(Error::ModulusMismatch(11, 7))
        );
        let single = t(11, &[5]);
        assert_eq!(a.oplus(&single), Err(Error::OperandTooShort(1)));
        assert_eq!(single.oplus(&a), Err(Error::OperandTooShort(1)));
    }

    #[test]
    fn oplus_length_law() {
        let a = t(7, &[1, 2, 3, 4]);
        let b = t(7, &[5, 6]);
        assert_eq!(a.oplus(&b).unwrap().len(), a.len() + b.len() - 2);
    }

    #[test]
    fn equivalence_classes() {
        let abc = t(5, &[1, 2, 3]);
        let class = abc.equivalence_class();
        assert_eq!(class.len(), 6);
        assert!(class.contains(&t(5, &[3, 2, 1])));
        assert_eq!(t(5, &[2, 2, 2]).equivalence_class().len(), 1);
        // (2,9,2,9): rotations collapse, reversal adds nothing.
        assert_eq!(t(11, &[2, 9, 2, 9]).equivalence_class().len(), 2);
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(t(5, &[3, 1, 2]).canonical_form(), t(5, &[1, 2, 3]));
        assert_eq!(t(11, &[9, 2, 9, 2]).canonical_form(), t(11, &[2, 9, 2, 9]));
        let c = t(5, &[2, 2, 2]);
        assert_eq!(c.canonical_form(), c);
    }

    #[test]
    fn transforms_reproduce_members() {
        let x = t(7, &[1, 5, 2, 2]);
        for (tr, member) in x.class_with_transforms() {
            assert_eq!(tr.apply(&x), member);
        }
    }
}
