//! Minimal constant solutions `(k, ..., k)`.
//!
//! The minimal size is the order of the elementary factor `[[k, -1], [1, 0]]`
//! in `PSL_2(Z/NZ)`, computed by iterating powers and testing `±Id` at each
//! step; every intermediate non-match certifies minimality, and the order of
//! any element is below `3N`, so the loop is capped there. Irreducibility is
//! decided by structural rules where one applies (prime modulus, the
//! repeated-two solution, the half-modulus solution, divisor-square and
//! perfect-power decompositions) and otherwise left to the brute-force
//! search under a work budget.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mat::{Mat2, Sign};
use crate::nt::is_prime;
use crate::residue::{Modulus, Residue};
use crate::solution::{find_reduction, ReductionOutcome, ReductionWitness, Verdict, WorkBudget};
use crate::tuple::{CTuple, Transform};

/// The minimal constant solution for one `(N, k)` cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialRecord {
    pub modulus: Modulus,
    pub k: Residue,
    /// Smallest `n` such that `(k, ..., k)` of length `n` is a solution.
    pub size: usize,
    /// Sign of the identity the minimal solution hits.
    pub sign: Sign,
    /// Set when the modulus is 2, where `Id = -Id`.
    pub ambiguous_sign: bool,
    pub verdict: Verdict,
}

impl MonomialRecord {
    pub fn tuple(&self) -> CTuple {
        CTuple::constant(self.modulus, self.k.rep() as i128, self.size).expect("size >= 2")
    }
}

/// Order of `f` in `PSL_2(Z/NZ)` by iterated multiplication, with the sign
/// reached at the order. `None` if the cap is exceeded.
fn psl_order(f: &Mat2, cap: usize) -> Option<(usize, Sign, bool)> {
    let mut p = *f;
    for i in 1..=cap {
        let pm = p.pm_identity();
        if let Some(sign) = pm.sign {
            return Some((i, sign, pm.ambiguous));
        }
        p = p.mul(f);
    }
    None
}

/// Size and sign of the minimal `k`-constant solution.
pub(crate) fn minimal_monomial_size(modulus: Modulus, k: Residue) -> (usize, Sign, bool) {
    let cap = 3 * modulus.get() as usize;
    let f = Mat2::elementary(k);
    psl_order(&f, cap).expect("group order bound violated: no power below 3N reached ±Id")
}

/// The minimal `k`-constant solution with its irreducibility verdict.
///
/// Structural rules decide the verdict where they apply; otherwise the
/// brute-force search runs when a budget is supplied, and the verdict is
/// `Unknown` when it is not (or when the budget runs out).
pub fn minimal_monomial(
    modulus: Modulus,
    k: Residue,
    search_budget: Option<&WorkBudget>,
) -> MonomialRecord {
    assert_eq!(k.modulus(), modulus, "k must live in Z/NZ");
    let (size, sign, ambiguous_sign) = minimal_monomial_size(modulus, k);
    let verdict = monomial_verdict(modulus, k, size, search_budget);
    MonomialRecord {
        modulus,
        k,
        size,
        sign,
        ambiguous_sign,
        verdict,
    }
}

fn monomial_verdict(
    modulus: Modulus,
    k: Residue,
    size: usize,
    search_budget: Option<&WorkBudget>,
) -> Verdict {
    let n = modulus.get();
    if size == 2 {
        // Only k = 0; (0,0) sits outside the reducible/irreducible
        // dichotomy by convention.
        return Verdict::unknown("trivial (0,0) solution, excluded by convention");
    }
    if size == 3 {
        return Verdict::irreducible("size-3");
    }
    if is_prime(n) {
        return Verdict::irreducible("prime-modulus");
    }
    if (k.rep() == modulus.reduce(2) || k.rep() == modulus.reduce(-2)) && size as u64 == n {
        return Verdict::irreducible("repeated-two");
    }
    if n % 2 == 0 && k.rep() == n / 2 {
        return Verdict::irreducible("half-modulus");
    }
    // N = k^e: the subject tuple is the repeated-base solution of length
    // 2 k^(e-1) exactly when the computed minimal size says so.
    if let Some(e) = exact_power_exponent(k.rep(), n) {
        if let Ok(pp) = perfect_power_reduction(k.rep(), e) {
            if pp.tuple.len() == size {
                return match pp.outcome {
                    ReductionOutcome::Reducible(w) => {
                        Verdict::reducible(w, "perfect-power")
                    }
                    ReductionOutcome::Irreducible => Verdict::irreducible("perfect-power"),
                    ReductionOutcome::Unknown { .. } => unreachable!("decision is exact"),
                };
            }
        }
    }
    // k = N/l with l^2 | N: the length-2l repeated solution splits off a
    // size-4 part when l >= 3 (l = 2 is the half-modulus case above).
    if k.rep() != 0 && n % k.rep() == 0 {
        let l = n / k.rep();
        if l >= 3 && n % (l * l) == 0 && size as u64 == 2 * l {
            let witness = divisor_square_witness(modulus, l);
            witness
                .validate(&CTuple::constant(modulus, k.rep() as i128, size).expect("size > 0"))
                .expect("divisor-square witness must validate");
            return Verdict::reducible(witness, "divisor-square");
        }
    }
    match search_budget {
        None => Verdict::unknown("no structural rule applies"),
        Some(budget) => {
            let tuple = CTuple::constant(modulus, k.rep() as i128, size).expect("size > 0");
            match find_reduction(&tuple, budget) {
                Ok(ReductionOutcome::Reducible(w)) => Verdict::reducible(w, "search"),
                Ok(ReductionOutcome::Irreducible) => Verdict::irreducible("search"),
                Ok(ReductionOutcome::Unknown { .. }) => {
                    Verdict::unknown("search budget exhausted")
                }
                Err(e) => unreachable!("minimal solution failed the search precondition: {e}"),
            }
        }
    }
}

/// `e >= 2` with `base^e = n`, if one exists.
fn exact_power_exponent(base: u64, n: u64) -> Option<u32> {
    if base < 2 {
        return None;
    }
    let mut acc = base;
    let mut e = 1u32;
    while acc < n {
        acc = acc.checked_mul(base)?;
        e += 1;
    }
    (acc == n && e >= 2).then_some(e)
}

/// Witness splitting `(N/l, ..., N/l)` of length `2l` (for `l^2 | N`,
/// `l >= 3`) as a length-`2l-2` part plus the size-4 part
/// `(-N/l, N/l, N/l, -N/l)`.
fn divisor_square_witness(modulus: Modulus, l: u64) -> ReductionWitness {
    let q = (modulus.get() / l) as i128;
    let left_len = (2 * l - 2) as usize;
    let mut left = vec![q; left_len];
    left[0] = 2 * q;
    left[left_len - 1] = 2 * q;
    ReductionWitness {
        transform: Transform::identity(),
        left: CTuple::new(modulus, left).expect("nonempty"),
        right: CTuple::new(modulus, [-q, q, q, -q]).expect("nonempty"),
    }
}

/// The repeated-base solution for `N = base^exponent` with its exact
/// reduction status: irreducible exactly when the base is 2, and otherwise
/// reducible with an explicit validated witness.
#[derive(Debug, Clone)]
pub struct PerfectPowerReduction {
    pub modulus: Modulus,
    /// `(base, ..., base)` of length `2 base^(exponent-1)`.
    pub tuple: CTuple,
    pub outcome: ReductionOutcome,
}

/// Decides reducibility of `(l, ..., l)` of length `2 l^(e-1)` over
/// `Z/(l^e)Z` for `l, e >= 2`, producing the explicit decomposition for
/// `l >= 3`.
pub fn perfect_power_reduction(base: u64, exponent: u32) -> Result<PerfectPowerReduction> {
    if base < 2 || exponent < 2 {
        return Err(Error::invalid(format!(
            "need base >= 2 and exponent >= 2, got {base}^{exponent}"
        )));
    }
    let n = base
        .checked_pow(exponent)
        .ok_or_else(|| Error::invalid(format!("{base}^{exponent} overflows")))?;
    let modulus = Modulus::new(n)?;
    let half_len = base.pow(exponent - 1);
    let tuple = CTuple::constant(modulus, base as i128, 2 * half_len as usize)?;

    if base == 2 {
        return Ok(PerfectPowerReduction {
            modulus,
            tuple,
            outcome: ReductionOutcome::Irreducible,
        });
    }

    let witness = if exponent == 2 {
        divisor_square_witness(modulus, base)
    } else {
        // Right part (2 l^(e-1), l, ..., l, 2 l^(e-1)) of length
        // 2 l^(e-1) - 4 l^(e-2) + 2; left part (l - 2 l^(e-1), l, ..., l)
        // of length 4 l^(e-2) with the same boundary at both ends.
        let b = (2 * base.pow(exponent - 1)) as i128;
        let l_int = base as i128;
        let right_len = (2 * base.pow(exponent - 1) - 4 * base.pow(exponent - 2) + 2) as usize;
        let left_len = (4 * base.pow(exponent - 2)) as usize;
        let mut right = vec![l_int; right_len];
        right[0] = b;
        right[right_len - 1] = b;
        let mut left = vec![l_int; left_len];
        left[0] = l_int - b;
        left[left_len - 1] = l_int - b;
        ReductionWitness {
            transform: Transform::identity(),
            left: CTuple::new(modulus, left)?,
            right: CTuple::new(modulus, right)?,
        }
    };
    witness
        .validate(&tuple)
        .expect("perfect-power witness must validate");
    Ok(PerfectPowerReduction {
        modulus,
        tuple,
        outcome: ReductionOutcome::Reducible(witness),
    })
}

/// The record for `k = N/2` over even `N >= 4`. Its size is 4 when
/// `4 | N` and 6 otherwise, and it is irreducible in both cases; both
/// facts are asserted.
pub fn half_modulus_record(modulus: Modulus) -> Result<MonomialRecord> {
    let n = modulus.get();
    if n % 2 != 0 || n < 4 {
        return Err(Error::invalid(format!("need an even modulus >= 4, got {n}")));
    }
    let record = minimal_monomial(modulus, modulus.residue((n / 2) as i128), None);
    let expected = if n % 4 == 0 { 4 } else { 6 };
    assert_eq!(
        record.size, expected,
        "half-modulus size rule violated for N = {n}"
    );
    assert_eq!(record.verdict.is_irreducible(), Some(true));
    Ok(record)
}

/// For `l^2 | N`, checks that `(N/l, ..., N/l)` of length `2l` is a
/// solution, and for prime `l` that it is moreover the minimal
/// `N/l`-constant solution.
pub fn check_square_divisor_solution(modulus: Modulus, l: u64) -> Result<bool> {
    let n = modulus.get();
    if l < 2 || n % (l * l) != 0 {
        return Err(Error::invalid(format!("need l^2 | N, got l = {l}, N = {n}")));
    }
    let q = (n / l) as i128;
    let tuple = CTuple::constant(modulus, q, 2 * l as usize)?;
    let is_solution = crate::solution::check_solution(&tuple).is_solution;
    if !is_solution {
        return Ok(false);
    }
    if is_prime(l) {
        let record = minimal_monomial(modulus, modulus.residue(q), None);
        return Ok(record.size as u64 == 2 * l);
    }
    Ok(true)
}

/// Checks the prime-modulus size pattern: the size is exactly `N` for
/// `k = ±2` and divides `(N-1)/2` or `(N+1)/2` otherwise.
pub fn check_prime_size_pattern(p: u64) -> Result<bool> {
    if !is_prime(p) || p == 2 {
        return Err(Error::NotOddPrime(p));
    }
    let modulus = Modulus::new(p)?;
    for k in 0..p {
        let (size, _, _) = minimal_monomial_size(modulus, modulus.residue(k as i128));
        let is_pm_two = k == modulus.reduce(2) || k == modulus.reduce(-2);
        let ok = if is_pm_two {
            size as u64 == p
        } else {
            let size = size as u64;
            (p - 1) / 2 % size == 0 || (p + 1) / 2 % size == 0
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that `k` and `-k` have minimal solutions of the same size.
pub fn check_negation_symmetry(modulus: Modulus) -> bool {
    let n = modulus.get();
    (0..n).all(|k| {
        let a = minimal_monomial_size(modulus, modulus.residue(k as i128)).0;
        let b = minimal_monomial_size(modulus, modulus.residue(-(k as i128))).0;
        a == b
    })
}

/// One column of the size table: minimal sizes for `k = 0..=min(p-1, k_max)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialColumn {
    pub prime: u64,
    pub sizes: Vec<usize>,
}

/// Minimal monomial sizes for one prime, rows `k = 0..=min(p-1, k_max)`.
pub fn monomial_column(p: u64, k_max: u64) -> Result<MonomialColumn> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let modulus = Modulus::new(p)?;
    let sizes = (0..=(p - 1).min(k_max))
        .map(|k| minimal_monomial_size(modulus, modulus.residue(k as i128)).0)
        .collect();
    Ok(MonomialColumn { prime: p, sizes })
}

/// The minimal-size table: one column per prime, one row per `k`.
///
/// By default rows stop at `k = (max prime - 1)/2` (sizes for `k` and `-k`
/// agree); `all_k` extends the rows to `max prime - 1`. Within a column,
/// cells exist for `k <= min(p-1, k_max)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialTable {
    pub primes: Vec<u64>,
    pub k_max: u64,
    /// `rows[k][i]` is the size for row `k` and prime `primes[i]`.
    pub rows: Vec<Vec<Option<usize>>>,
}

/// Row bound for a set of primes: `(max-1)/2`, or `max-1` with `all_k`.
pub fn table_k_max(primes: &[u64], all_k: bool) -> u64 {
    let max = primes.iter().copied().max().unwrap_or(2);
    if all_k {
        max - 1
    } else {
        (max - 1) / 2
    }
}

/// Assembles the table from per-prime columns (columns must share `k_max`).
pub fn assemble_monomial_table(columns: Vec<MonomialColumn>, k_max: u64) -> MonomialTable {
    let primes: Vec<u64> = columns.iter().map(|c| c.prime).collect();
    let rows = (0..=k_max)
        .map(|k| {
            columns
                .iter()
                .map(|c| c.sizes.get(k as usize).copied())
                .collect()
        })
        .collect();
    MonomialTable {
        primes,
        k_max,
        rows,
    }
}

/// The full size table for the given primes (sorted, deduplicated).
pub fn monomial_size_table(primes: &[u64], all_k: bool) -> Result<MonomialTable> {
    let mut primes: Vec<u64> = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    if primes.is_empty() {
        return Err(Error::invalid("no primes given"));
    }
    let k_max = table_k_max(&primes, all_k);
    let columns = primes
        .iter()
        .map(|&p| monomial_column(p, k_max))
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble_monomial_table(columns, k_max))
}
