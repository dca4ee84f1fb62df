//! Continuants `K_n` over `Z/NZ`.
//!
//! `K_n(a_1, ..., a_n)` is the tridiagonal determinant satisfying
//! `K_i = a_i K_{i-1} - K_{i-2}` with `K_{-1} = 0`, `K_0 = 1`. The four
//! continuants of a tuple assemble `M_n`, which gives an independent route
//! to the product matrix; the alternating binomial sum gives an independent
//! route to `K_n` on constant tuples. Both pairs of routes are kept
//! deliberately separate so they can cross-check each other.

use num_bigint::BigUint;

use crate::error::Result;
use crate::mat::Mat2;
use crate::nt::binomial;
use crate::residue::{Modulus, Residue};

/// `K_n` of the given entries by the linear recurrence; the empty tuple
/// yields `K_0 = 1`.
pub fn continuant(modulus: Modulus, entries: &[u64]) -> Residue {
    let n = modulus.get();
    // (K_i, K_{i-1}), starting from (K_0, K_{-1}).
    let mut cur = 1 % n;
    let mut prev = 0u64;
    for &a in entries {
        let next = sub_mul(modulus, a, cur, prev);
        prev = cur;
        cur = next;
    }
    Residue::new(modulus, cur as i128)
}

/// `a*k1 - k0 mod N`.
fn sub_mul(modulus: Modulus, a: u64, k1: u64, k0: u64) -> u64 {
    let n = modulus.get() as u128;
    ((a as u128 * k1 as u128 + n - k0 as u128) % n) as u64
}

/// `K_n(x, ..., x)` by the closed form `Σ_k (-1)^k C(n-k, k) x^(n-2k)`,
/// summed for `k` up to `floor(n/2)`. Must agree with [`continuant`] on the
/// constant tuple.
pub fn continuant_constant(modulus: Modulus, x: Residue, n: usize) -> Residue {
    let mut acc = modulus.zero();
    for k in 0..=(n / 2) {
        let c = binomial((n - k) as u64, k as i128) % BigUint::from(modulus.get());
        let c = modulus.residue(u64::try_from(&c).expect("reduced below u64 modulus") as i128);
        let term = c * x.pow((n - 2 * k) as u64);
        acc = if k % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// `M_n` assembled from four continuants:
/// `[[K_n(a_1..a_n), -K_{n-1}(a_2..a_n)], [K_{n-1}(a_1..a_{n-1}), -K_{n-2}(a_2..a_{n-1})]]`.
///
/// Must equal [`crate::mat::m_n`] on every tuple.
pub fn m_n_via_continuants(modulus: Modulus, entries: &[u64]) -> Result<Mat2> {
    if entries.is_empty() {
        return Err(crate::error::Error::EmptyTuple);
    }
    let n = entries.len();
    let k_full = continuant(modulus, entries);
    let k_head = continuant(modulus, &entries[..n - 1]);
    let k_tail = continuant(modulus, &entries[1..]);
    // For n = 1 the bottom-right slot is the K_{-1} = 0 sentinel.
    let k_inner = if n >= 2 {
        continuant(modulus, &entries[1..n - 1])
    } else {
        modulus.zero()
    };
    Ok(Mat2::new(
        modulus,
        [
            k_full.rep() as i128,
            -(k_tail.rep() as i128),
            k_head.rep() as i128,
            -(k_inner.rep() as i128),
        ],
    ))
}

/// Verifies `K_n(x_1, ..., x_n) = (-1)^n K_n(-x_1, ..., -x_n)` for the
/// given entries. Holds identically; exercised as a property.
pub fn sign_flip_identity_holds(modulus: Modulus, entries: &[u64]) -> bool {
    let negated: Vec<u64> = entries
        .iter()
        .map(|&a| (-modulus.residue(a as i128)).rep())
        .collect();
    let lhs = continuant(modulus, entries);
    let rhs = continuant(modulus, &negated);
    if entries.len() % 2 == 0 {
        lhs == rhs
    } else {
        lhs == -rhs
    }
}
