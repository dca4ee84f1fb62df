//! Primes, squares mod `N`, Legendre symbols, quadratic reciprocity, and
//! exact big-integer binomials with the divisibility facts the reduction
//! arguments rely on.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::residue::Residue;

/// Deterministic primality by trial division; intended for desk-scale input.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes `<= limit`, ascending (sieve of Eratosthenes).
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u64);
            let mut q = p * p;
            while q <= n {
                composite[q] = true;
                q += p;
            }
        }
    }
    primes
}

/// Whether `x` is a square in `Z/NZ`.
///
/// For odd prime `N` and nonzero `x` this is the Euler criterion
/// `x^((N-1)/2) = 1`; otherwise every residue is scanned, which is the only
/// definition that makes sense for composite moduli.
pub fn is_square(x: Residue) -> bool {
    let n = x.modulus().get();
    if x.is_zero() {
        return true;
    }
    if n % 2 == 1 && is_prime(n) {
        return x.pow((n - 1) / 2).rep() == 1;
    }
    is_square_by_scan(x)
}

/// Square testing by exhaustive scan of all residues.
pub fn is_square_by_scan(x: Residue) -> bool {
    let m = x.modulus();
    (0..m.get()).any(|y| {
        let y = m.residue(y as i128);
        y * y == x
    })
}

/// Value of a Legendre symbol `(a/p)`; zero is excluded because the symbol
/// is only used for `a` coprime to `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LegendreValue {
    Plus,
    Minus,
}

impl LegendreValue {
    pub fn value(self) -> i8 {
        match self {
            LegendreValue::Plus => 1,
            LegendreValue::Minus => -1,
        }
    }

    fn from_sign(s: i8) -> Self {
        match s {
            1 => LegendreValue::Plus,
            -1 => LegendreValue::Minus,
            _ => unreachable!("legendre sign must be ±1"),
        }
    }
}

impl fmt::Display for LegendreValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LegendreValue::Plus => write!(f, "+1"),
            LegendreValue::Minus => write!(f, "-1"),
        }
    }
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p > 2 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p))
    }
}

fn require_unit(a: i128, p: u64) -> Result<u64> {
    let r = a.rem_euclid(p as i128) as u64;
    if r == 0 {
        Err(Error::NotCoprime { a, p })
    } else {
        Ok(r)
    }
}

/// Legendre symbol `(a/p)` by the Euler criterion `a^((p-1)/2) mod p`.
pub fn legendre(a: i128, p: u64) -> Result<LegendreValue> {
    require_odd_prime(p)?;
    let r = require_unit(a, p)?;
    let m = crate::residue::Modulus::new(p).expect("odd prime >= 3");
    let e = m.residue(r as i128).pow((p - 1) / 2).rep();
    if e == 1 {
        Ok(LegendreValue::Plus)
    } else {
        debug_assert_eq!(e, p - 1);
        Ok(LegendreValue::Minus)
    }
}

/// Legendre symbol `(a/p)` computed by factoring `a` and applying
/// multiplicativity, the reciprocity flip `(-1)^((p-1)/2 (q-1)/2)` and the
/// two supplements `(-1/p) = (-1)^((p-1)/2)`, `(2/p) = (-1)^((p^2-1)/8)`.
///
/// Independent of [`legendre`]; the two must agree on every input.
pub fn legendre_via_reciprocity(a: i128, p: u64) -> Result<LegendreValue> {
    require_odd_prime(p)?;
    require_unit(a, p)?;
    Ok(LegendreValue::from_sign(symbol(a, p)))
}

/// `(a/p)` for odd prime `p` and `a` coprime to `p`, as a bare sign.
fn symbol(a: i128, p: u64) -> i8 {
    let mut acc = 1i8;
    let mut a = a;
    if a < 0 {
        acc *= minus_one_supplement(p);
        a = -a;
    }
    let a = (a as u128 % p as u128) as u64;
    debug_assert!(a != 0);
    for (q, e) in trial_factor(a) {
        if e % 2 == 1 {
            acc *= prime_symbol(q, p);
        }
    }
    acc
}

/// `(q/p)` for primes `q < p`, `p` odd.
fn prime_symbol(q: u64, p: u64) -> i8 {
    if q == 2 {
        return two_supplement(p);
    }
    let flip = if p % 4 == 3 && q % 4 == 3 { -1 } else { 1 };
    flip * symbol((p % q) as i128, q)
}

fn minus_one_supplement(p: u64) -> i8 {
    if p % 4 == 1 {
        1
    } else {
        -1
    }
}

fn two_supplement(p: u64) -> i8 {
    match p % 8 {
        1 | 7 => 1,
        3 | 5 => -1,
        _ => unreachable!("p is odd"),
    }
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
fn trial_factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0u32;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Whether `3` is a square in `Z/pZ`: exactly when `p` is 2, 3, or
/// congruent to `±1 mod 12`.
pub fn three_is_square(p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(p == 2 || p == 3 || p % 12 == 1 || p % 12 == 11)
}

/// Exact binomial coefficient; `k` outside `[0, n]` yields 0.
pub fn binomial(n: u64, k: i128) -> BigUint {
    if k < 0 || k > n as i128 {
        return BigUint::ZERO;
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::from(1u32);
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Checks that `n / gcd(n, k)` divides `C(n, k)`; this holds for every
/// `1 <= k <= n` and is exercised as a property.
pub fn binomial_divisibility_check(n: u64, k: u64) -> Result<bool> {
    if n < 1 || k < 1 || k > n {
        return Err(Error::invalid(format!(
            "need 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    let q = n / n.gcd(&k);
    Ok((binomial(n, k as i128) % q) == BigUint::ZERO)
}

/// Checks that `l^(n-j)` divides `C(2 l^(n-2), j)` for `l >= 2`, `n >= 3`
/// and `2 <= j <= n-1`; this always holds and is exercised as a property.
pub fn binomial_power_divisibility_check(l: u64, n: u32, j: u32) -> Result<bool> {
    if l < 2 || n < 3 || j < 2 || j > n - 1 {
        return Err(Error::invalid(format!(
            "need l >= 2, n >= 3, 2 <= j <= n-1, got l = {l}, n = {n}, j = {j}"
        )));
    }
    let top = l
        .checked_pow(n - 2)
        .and_then(|v| v.checked_mul(2))
        .ok_or_else(|| Error::invalid(format!("2*{l}^{} overflows", n - 2)))?;
    let divisor = BigUint::from(l).pow(n - j);
    Ok((binomial(top, j as i128) % divisor) == BigUint::ZERO)
}
