//! Bundled reference data: the published minimal-size table for primes
//! 11–47 and the published `k = 2` reducibility table for primes
//! `≡ ±1 (mod 12)` up to 500, including the reducing parts listed there.
//!
//! The tables ship with the crate so the verification paths (golden tests,
//! the CLI's `--verify-paper-witnesses`) can replay them without network
//! access. Negative entries of the source tables are stored as canonical
//! representatives.

use std::sync::OnceLock;

use serde::Deserialize;

use crate::residue::Modulus;
use crate::tuple::CTuple;

/// One column of the reference minimal-size table: `sizes[k]` is the size
/// for row `k`, listed for `k <= min(n - 1, 23)`.
#[derive(Debug, Clone, Deserialize)]
pub struct MonomialSizeColumn {
    pub n: u64,
    pub sizes: Vec<usize>,
}

#[derive(Deserialize)]
struct MonomialSizeFile {
    primes: Vec<MonomialSizeColumn>,
}

/// The reference minimal-size table (primes 11–47).
pub fn monomial_size_reference() -> &'static [MonomialSizeColumn] {
    static DATA: OnceLock<Vec<MonomialSizeColumn>> = OnceLock::new();
    DATA.get_or_init(|| {
        let file: MonomialSizeFile =
            serde_json::from_str(include_str!("../data/monomial_sizes.json"))
                .expect("bundled monomial size table parses");
        file.primes
    })
}

/// A reducing part listed in the reference table: the tuple
/// `(boundary, -2, 2, -2, ..., 2, -2, boundary)` of odd `length`.
#[derive(Debug, Clone, Copy, Deserialize)]
pub struct ReferenceWitness {
    pub boundary: u64,
    pub length: usize,
}

/// One row of the reference `k = 2` reducibility table.
#[derive(Debug, Clone, Deserialize)]
pub struct TwoDynomialRow {
    pub n: u64,
    pub size: usize,
    pub reducible: bool,
    /// Roots of `X(X - 2) = 2`, canonical representatives.
    pub roots: Vec<u64>,
    pub witness: Option<ReferenceWitness>,
}

#[derive(Deserialize)]
struct TwoDynomialFile {
    rows: Vec<TwoDynomialRow>,
}

/// The reference `k = 2` reducibility table (46 rows, primes `≡ ±1 (mod
/// 12)` up to 491).
pub fn two_dynomial_reference() -> &'static [TwoDynomialRow] {
    static DATA: OnceLock<Vec<TwoDynomialRow>> = OnceLock::new();
    DATA.get_or_init(|| {
        let file: TwoDynomialFile =
            serde_json::from_str(include_str!("../data/two_dynomial.json"))
                .expect("bundled reducibility table parses");
        file.rows
    })
}

impl ReferenceWitness {
    /// Reconstructs the listed part: boundary entries around an interior
    /// alternating `-2, 2, ..., -2`.
    pub fn tuple(&self, modulus: Modulus) -> CTuple {
        assert!(self.length >= 3 && self.length % 2 == 1);
        let values = (0..self.length).map(|i| {
            if i == 0 || i == self.length - 1 {
                self.boundary as i128
            } else if i % 2 == 1 {
                -2
            } else {
                2
            }
        });
        CTuple::new(modulus, values).expect("nonempty")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_parse_and_have_expected_shape() {
        let mono = monomial_size_reference();
        assert_eq!(mono.len(), 11);
        assert_eq!(mono[0].n, 11);
        assert_eq!(mono[0].sizes.len(), 11);
        assert_eq!(mono[10].n, 47);
        assert_eq!(mono[10].sizes.len(), 24);
        let cells: usize = mono.iter().map(|c| c.sizes.len()).sum();
        assert_eq!(cells, 227);

        let dyno = two_dynomial_reference();
        assert_eq!(dyno.len(), 46);
        assert_eq!(dyno.iter().filter(|r| r.reducible).count(), 33);
        for row in dyno {
            assert_eq!(row.reducible, row.witness.is_some());
            assert_eq!(row.roots.len(), 2);
            // Listed roots satisfy X(X-2) = 2 and sum to 2.
            let m = Modulus::new(row.n).unwrap();
            for &r in &row.roots {
                let r = m.residue(r as i128);
                assert_eq!(r * (r - m.residue(2)), m.residue(2), "N={}", row.n);
            }
            assert_eq!(
                m.residue(row.roots.iter().map(|&r| r as i128).sum()),
                m.residue(2),
                "N={}",
                row.n
            );
        }
    }

    #[test]
    fn witness_tuples_reconstruct() {
        let m11 = Modulus::new(11).unwrap();
        let w = ReferenceWitness {
            boundary: 6,
            length: 5,
        };
        assert_eq!(w.tuple(m11).reps(), &[6, 9, 2, 9, 6]);
    }
}
