//! Minimal alternating solutions `(k, -k, ..., k, -k)`.
//!
//! The product matrix of the alternating tuple of length `n` is the
//! `(n/2)`-th power of `Q = F(-k)·F(k)`, so the minimal size is twice the
//! order of `Q` in `PSL_2(Z/NZ)`.
//!
//! For prime `N >= 5` and `k` outside `{0, ±1}`, reducibility of the
//! minimal solution is decided exactly by a structured scan: present the
//! tuple starting with `s·k` (`s = ±1`); a right part of even size `l` must
//! look like `(a, sk, -sk, ..., sk, -sk, -a)` with `a(a + sk) = 0`, and one
//! of odd size like `(r, -sk, sk, ..., -sk, r)` with `r(r - sk) = 2`, so
//! only the roots of those boundary equations can head a part. Scanning
//! every admissible part length against those few boundary values is
//! exhaustive over an integral domain, hence the verdict carries no
//! `Unknown` case. In particular, when `k² + 8` is not a square the odd
//! equation has no roots and irreducibility follows (the sufficient
//! criterion); the scan still runs and must agree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mat::{Mat2, Sign};
use crate::nt::{is_prime, is_square, primes_up_to};
use crate::residue::{Modulus, Residue};
use crate::solution::{find_reduction, ReductionOutcome, ReductionWitness, Verdict, WorkBudget};
use crate::tuple::{CTuple, Transform};

/// Which of the two boundary equations of a split part applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

/// The minimal alternating solution for one `(N, k)` cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynomialRecord {
    pub modulus: Modulus,
    pub k: Residue,
    /// Smallest even `n` such that the alternating tuple solves the
    /// equation.
    pub size: usize,
    pub sign: Sign,
    pub ambiguous_sign: bool,
    /// Whether the sufficient irreducibility condition holds: `k != 0` and
    /// `k² + 8` is not a square. Only claimed for prime `N >= 5` (it is
    /// reported as false elsewhere, where the criterion says nothing).
    pub criterion_applies: bool,
    /// Roots of `X² - kX - 2`, the odd-part boundary equation when the
    /// tuple is presented starting with `+k`.
    pub quad_roots: Vec<Residue>,
    pub verdict: Verdict,
}

impl DynomialRecord {
    pub fn tuple(&self) -> CTuple {
        CTuple::alternating(self.modulus, self.k.rep() as i128, self.size).expect("even size")
    }
}

/// Size and sign of the minimal `k`-alternating solution.
pub fn minimal_dynomial_size(modulus: Modulus, k: Residue) -> (usize, Sign, bool) {
    let q = Mat2::elementary(-k).mul(&Mat2::elementary(k));
    let cap = 3 * modulus.get() as usize;
    let mut p = q;
    for i in 1..=cap {
        let pm = p.pm_identity();
        if let Some(sign) = pm.sign {
            return (2 * i, sign, pm.ambiguous);
        }
        p = p.mul(&q);
    }
    unreachable!("group order bound violated: no power below 3N reached ±Id")
}

/// All residues `a` with `a(αk + a) = 0` (even parity) or `= 2` (odd
/// parity): the boundary values a split part starting a run of
/// `(αk, -αk, ...)` may carry.
///
/// For odd prime moduli the odd-parity roots come from the quadratic
/// formula with discriminant `k² + 8`; otherwise (and for the even parity)
/// every residue is scanned.
pub fn boundary_roots(modulus: Modulus, k: Residue, alpha: Sign, parity: Parity) -> Vec<Residue> {
    let n = modulus.get();
    let ak = match alpha {
        Sign::Plus => k,
        Sign::Minus => -k,
    };
    let rhs = match parity {
        Parity::Even => modulus.zero(),
        Parity::Odd => modulus.residue(2),
    };
    if parity == Parity::Odd && n % 2 == 1 && is_prime(n) {
        // X² + αk·X - 2 = 0; Δ = (αk)² + 8.
        let disc = ak * ak + modulus.residue(8);
        let Some(sqrt) = (0..n).map(|s| modulus.residue(s as i128)).find(|&s| s * s == disc)
        else {
            return Vec::new();
        };
        let half = modulus.residue(2).inv().expect("odd modulus");
        let mut roots = vec![(-ak + sqrt) * half, (-ak - sqrt) * half];
        roots.sort();
        roots.dedup();
        for &r in &roots {
            debug_assert_eq!(r * (ak + r), rhs);
        }
        return roots;
    }
    (0..n)
        .map(|a| modulus.residue(a as i128))
        .filter(|&a| a * (ak + a) == rhs)
        .collect()
}

/// The sufficient irreducibility condition for the minimal `k`-alternating
/// solution over prime `N >= 5`: `k != 0` and `k² + 8` not a square.
pub fn discriminant_criterion(modulus: Modulus, k: Residue) -> Result<bool> {
    let n = modulus.get();
    if n < 5 || !is_prime(n) {
        return Err(Error::invalid(format!("need a prime modulus >= 5, got {n}")));
    }
    Ok(!k.is_zero() && !is_square(k * k + modulus.residue(8)))
}

/// The congruence form of the criterion for `k = 2`: over prime `N >= 5`
/// the minimal 2-alternating solution is irreducible whenever
/// `N ≢ ±1 (mod 12)`. Coincides with [`discriminant_criterion`] at `k = 2`.
pub fn congruence_criterion(p: u64) -> Result<bool> {
    if p < 5 || !is_prime(p) {
        return Err(Error::invalid(format!("need a prime >= 5, got {p}")));
    }
    Ok(p % 12 != 1 && p % 12 != 11)
}

/// Exact reducibility of the minimal `k`-alternating solution over prime
/// `N >= 5`, `k` outside `{0, ±1}`. The verdict is never `Unknown`.
pub fn structured_reducibility(modulus: Modulus, k: Residue) -> Result<DynomialRecord> {
    let n = modulus.get();
    if n < 5 || !is_prime(n) {
        return Err(Error::invalid(format!("need a prime modulus >= 5, got {n}")));
    }
    let kr = k.rep();
    if kr == 0 || kr == 1 || kr == n - 1 {
        return Err(Error::invalid(format!(
            "k = {kr} is excluded from the structured search; use the generic search"
        )));
    }
    let (size, sign, ambiguous_sign) = minimal_dynomial_size(modulus, k);
    let criterion_applies = discriminant_criterion(modulus, k)?;
    let quad_roots = boundary_roots(modulus, k, Sign::Minus, Parity::Odd);

    let verdict = match structured_scan(modulus, k, size) {
        Some(witness) => Verdict::reducible(witness, "structured-search"),
        None if size == 4 => Verdict::irreducible("size-4-form"),
        None if criterion_applies => Verdict::irreducible("discriminant-criterion"),
        None => Verdict::irreducible("structured-search"),
    };
    debug_assert!(
        !criterion_applies || verdict.is_irreducible() == Some(true),
        "scan contradicts the discriminant criterion for N = {n}, k = {kr}"
    );
    Ok(DynomialRecord {
        modulus,
        k,
        size,
        sign,
        ambiguous_sign,
        criterion_applies,
        quad_roots,
        verdict,
    })
}

/// The scan behind [`structured_reducibility`]: part sizes `l` ascending
/// (both parts need size > 3 since their interiors miss `±1`), for each
/// size the presentation `s = +1` before `s = -1`, boundary roots
/// ascending. Returns the first witness.
fn structured_scan(modulus: Modulus, k: Residue, size: usize) -> Option<ReductionWitness> {
    let n = size;
    let original =
        CTuple::alternating(modulus, k.rep() as i128, n).expect("minimal size is even");
    debug_assert!(crate::solution::check_solution(&original).is_solution);

    // Boundary candidates per presentation sign and parity.
    let candidates = |s: Sign, parity: Parity| -> Vec<Residue> {
        match parity {
            // a(a + sk) = 0: roots 0 and -sk.
            Parity::Even => boundary_roots(modulus, k, s, Parity::Even),
            // r(r - sk) = 2.
            Parity::Odd => {
                let alpha = match s {
                    Sign::Plus => Sign::Minus,
                    Sign::Minus => Sign::Plus,
                };
                boundary_roots(modulus, k, alpha, Parity::Odd)
            }
        }
    };
    let members = [
        (Sign::Plus, original.clone(), 0usize),
        (Sign::Minus, original.rotated_left(1), 1usize),
    ];

    // Interior products per presentation, advanced one entry at a time:
    // the interior of a right part of size l under presentation s is the
    // alternating run member_s[n+2-l .. n], of length l-2, which always
    // starts with -sk for odd l and with +sk for even l.
    let mut chain_from_neg = Mat2::identity(modulus); // interior (-sk? ...) for s = +1 odd
    let mut chain_from_pos = Mat2::identity(modulus);
    let fk = Mat2::elementary(k);
    let fnk = Mat2::elementary(-k);
    let mut chain_len = 0usize;

    for l in 4..=n.saturating_sub(2) {
        while chain_len < l - 2 {
            // Entry j (1-indexed) of the run starting with -k is
            // -k·(-1)^(j-1); multiply on the left as the run grows.
            let next_neg = if chain_len % 2 == 0 { fnk } else { fk };
            let next_pos = if chain_len % 2 == 0 { fk } else { fnk };
            chain_from_neg = next_neg.mul(&chain_from_neg);
            chain_from_pos = next_pos.mul(&chain_from_pos);
            chain_len += 1;
        }
        let parity = if l % 2 == 0 { Parity::Even } else { Parity::Odd };
        for (s, member, rotation) in &members {
            // Interior of the part under presentation s: starts with -sk
            // when l is odd, with +sk when l is even.
            let chain = match (*s, parity) {
                (Sign::Plus, Parity::Odd) | (Sign::Minus, Parity::Even) => &chain_from_neg,
                (Sign::Plus, Parity::Even) | (Sign::Minus, Parity::Odd) => &chain_from_pos,
            };
            for a in candidates(*s, parity) {
                let b_last = match parity {
                    Parity::Odd => a,
                    Parity::Even => -a,
                };
                let mat = Mat2::elementary(b_last)
                    .mul(&chain.mul(&Mat2::elementary(a)));
                if !mat.pm_identity().is_pm_identity() {
                    continue;
                }
                let left_len = n + 2 - l;
                let mut right = Vec::with_capacity(l);
                right.push(a.rep());
                right.extend_from_slice(&member.reps()[left_len..]);
                right.push(b_last.rep());
                let right = CTuple::from_reps(modulus, right);
                let mut left = Vec::with_capacity(left_len);
                left.push((member.residue(0) - b_last).rep());
                left.extend_from_slice(&member.reps()[1..left_len - 1]);
                left.push((member.residue(left_len - 1) - a).rep());
                let left = CTuple::from_reps(modulus, left);
                let witness = ReductionWitness {
                    transform: Transform {
                        reflected: false,
                        rotation: *rotation,
                    },
                    left,
                    right,
                };
                witness
                    .validate(&original)
                    .expect("structured scan produced a witness that fails validation");
                return Some(witness);
            }
        }
    }
    None
}

/// Dispatcher for arbitrary moduli: structured decision where its
/// hypotheses hold, structural size rules and the generic budgeted search
/// everywhere else.
pub fn dynomial_record(
    modulus: Modulus,
    k: Residue,
    budget: &WorkBudget,
) -> Result<DynomialRecord> {
    let n = modulus.get();
    let kr = k.rep();
    if n >= 5 && is_prime(n) && kr != 0 && kr != 1 && kr != n - 1 {
        return structured_reducibility(modulus, k);
    }
    let (size, sign, ambiguous_sign) = minimal_dynomial_size(modulus, k);
    let quad_roots = boundary_roots(modulus, k, Sign::Minus, Parity::Odd);
    let verdict = if size == 2 {
        Verdict::unknown("trivial (0,0) solution, excluded by convention")
    } else if size == 4 && kr != 0 && kr != 1 && kr != n - 1 {
        // A reducible size-4 solution is a sum of two size-3 solutions and
        // so contains ±1; this tuple does not.
        Verdict::irreducible("size-4-form")
    } else {
        let tuple = CTuple::alternating(modulus, kr as i128, size)?;
        match find_reduction(&tuple, budget)? {
            ReductionOutcome::Reducible(w) => Verdict::reducible(w, "search"),
            ReductionOutcome::Irreducible => Verdict::irreducible("search"),
            ReductionOutcome::Unknown { .. } => Verdict::unknown("search budget exhausted"),
        }
    };
    Ok(DynomialRecord {
        modulus,
        k,
        size,
        sign,
        ambiguous_sign,
        criterion_applies: false,
        quad_roots,
        verdict,
    })
}

/// One row of the `k = 2` reducibility table.
pub fn two_dynomial_row(p: u64) -> Result<DynomialRecord> {
    let modulus = Modulus::new(p)?;
    structured_reducibility(modulus, modulus.residue(2))
}

/// The primes the `k = 2` table covers: `N ≡ ±1 (mod 12)`, `5 < N <= limit`
/// — those for which the two sufficient criteria are silent about `k = 2`.
pub fn two_dynomial_primes(limit: u64) -> Vec<u64> {
    primes_up_to(limit)
        .into_iter()
        .filter(|&p| p > 5 && (p % 12 == 1 || p % 12 == 11))
        .collect()
}

/// Rows for every prime in [`two_dynomial_primes`].
pub fn two_dynomial_table(limit: u64) -> Result<Vec<DynomialRecord>> {
    two_dynomial_primes(limit)
        .into_iter()
        .map(two_dynomial_row)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    fn r(n: u64, v: i128) -> Residue {
        m(n).residue(v)
    }

    #[test]
    fn size_examples() {
        assert_eq!(minimal_dynomial_size(m(11), r(11, 2)).0, 12);
        assert_eq!(minimal_dynomial_size(m(59), r(59, 2)).0, 20);
        assert_eq!(minimal_dynomial_size(m(19), r(19, 6)).0, 4);
        assert_eq!(minimal_dynomial_size(m(7), r(7, 0)).0, 2);
    }

    #[test]
    fn boundary_root_examples() {
        // X(X-2) = 2 mod 11: {6, 7}.
        let roots = boundary_roots(m(11), r(11, 2), Sign::Minus, Parity::Odd);
        assert_eq!(roots, vec![r(11, 6), r(11, 7)]);
        let roots59 = boundary_roots(m(59), r(59, 2), Sign::Minus, Parity::Odd);
        assert_eq!(roots59, vec![r(59, 12), r(59, 49)]);
        // The even equation factors; 0 and -αk are always roots.
        for (n, k, alpha) in [(12u64, 5i128, Sign::Plus), (11, 3, Sign::Minus), (9, 4, Sign::Plus)] {
            let ak = match alpha {
                Sign::Plus => r(n, k),
                Sign::Minus => -r(n, k),
            };
            let roots = boundary_roots(m(n), r(n, k), alpha, Parity::Even);
            assert!(roots.contains(&m(n).zero()));
            assert!(roots.contains(&(-ak)));
        }
    }

    #[test]
    fn formula_and_scan_agree_on_odd_primes() {
        for p in [5u64, 7, 11, 13, 17, 19, 23] {
            for k in 0..p {
                for alpha in [Sign::Plus, Sign::Minus] {
                    let kres = r(p, k as i128);
                    let by_formula = boundary_roots(m(p), kres, alpha, Parity::Odd);
                    let ak = match alpha {
                        Sign::Plus => kres,
                        Sign::Minus => -kres,
                    };
                    let by_scan: Vec<Residue> = (0..p)
                        .map(|a| r(p, a as i128))
                        .filter(|&a| a * (ak + a) == r(p, 2))
                        .collect();
                    assert_eq!(by_formula, by_scan, "p={p} k={k} alpha={alpha:?}");
                }
            }
        }
    }

    #[test]
    fn criterion_examples() {
        assert!(discriminant_criterion(m(97), r(97, 3)).unwrap());
        // 6² + 8 = 44 = 6 = 5² mod 19: the criterion fails, yet the
        // solution is irreducible (it is not a necessary condition).
        assert!(!discriminant_criterion(m(19), r(19, 6)).unwrap());
        assert!(!discriminant_criterion(m(11), r(11, 2)).unwrap());
        assert!(discriminant_criterion(m(4), r(4, 1)).is_err());
        assert!(congruence_criterion(5).unwrap());
        assert!(!congruence_criterion(13).unwrap());
        assert!(!congruence_criterion(59).unwrap());
        assert!(congruence_criterion(12).is_err());
    }

    #[test]
    fn criteria_coincide_at_k_two() {
        for p in primes_up_to(500).into_iter().filter(|&p| p >= 5) {
            assert_eq!(
                congruence_criterion(p).unwrap(),
                discriminant_criterion(m(p), r(p, 2)).unwrap(),
                "p={p}"
            );
        }
    }

    #[test]
    fn structured_examples() {
        // N = 11, k = 2: reducible with right part (6, -2, 2, -2, 6).
        let rec = structured_reducibility(m(11), r(11, 2)).unwrap();
        assert_eq!(rec.size, 12);
        match &rec.verdict {
            Verdict::Reducible { witness, .. } => {
                let w = witness.as_deref().unwrap();
                assert_eq!(w.right.reps(), &[6, 9, 2, 9, 6]);
                assert_eq!(w.right.len(), 5);
            }
            other => panic!("expected reducible, got {other:?}"),
        }
        // N = 59, k = 2: irreducible despite having roots.
        let rec59 = structured_reducibility(m(59), r(59, 2)).unwrap();
        assert_eq!(rec59.size, 20);
        assert_eq!(rec59.verdict.is_irreducible(), Some(true));
        assert_eq!(rec59.quad_roots, vec![r(59, 12), r(59, 49)]);
        // N = 19, k = 6: minimal size 4, irreducible by the size-4 form.
        let rec19 = structured_reducibility(m(19), r(19, 6)).unwrap();
        assert_eq!(rec19.size, 4);
        assert_eq!(rec19.verdict.is_irreducible(), Some(true));
        assert_eq!(rec19.verdict.source(), "size-4-form");
        // N = 97, k = 2: reducible. The published example part has size 29
        // and boundary 11; the scan returns the smallest part instead, so
        // only the verdict and the boundary root are pinned here, and the
        // published part is replayed independently.
        let rec97 = structured_reducibility(m(97), r(97, 2)).unwrap();
        assert_eq!(rec97.quad_roots, vec![r(97, 11), r(97, 88)]);
        match &rec97.verdict {
            Verdict::Reducible { witness, .. } => {
                let w = witness.as_deref().unwrap();
                assert!(w.right.len() % 2 == 1);
                assert!(w.right.reps()[0] == 11 || w.right.reps()[0] == 88);
                assert!(w.validate(&rec97.tuple()).is_ok());
            }
            other => panic!("expected reducible, got {other:?}"),
        }
        let published = crate::reference::ReferenceWitness {
            boundary: 11,
            length: 29,
        };
        let part = published.tuple(m(97));
        assert!(crate::solution::check_solution(&part).is_solution);
        // Excluded inputs.
        assert!(structured_reducibility(m(11), r(11, 0)).is_err());
        assert!(structured_reducibility(m(11), r(11, 1)).is_err());
        assert!(structured_reducibility(m(11), r(11, -1)).is_err());
        assert!(structured_reducibility(m(12), r(12, 2)).is_err());
    }

    #[test]
    fn dispatcher_handles_composite_and_excluded_inputs() {
        let budget = WorkBudget::unlimited();
        // 2k = 0: the alternating tuple is constant.
        let rec = dynomial_record(m(14), r(14, 7), &budget).unwrap();
        assert!(rec.tuple().reps().iter().all(|&x| x == 7));
        // k = 0: trivial.
        let rec0 = dynomial_record(m(9), r(9, 0), &budget).unwrap();
        assert_eq!(rec0.size, 2);
        assert!(matches!(rec0.verdict, Verdict::Unknown { .. }));
        // k = 1 over a prime routes to the generic search.
        let rec1 = dynomial_record(m(7), r(7, 1), &budget).unwrap();
        assert!(rec1.verdict.is_irreducible().is_some());
    }

    #[test]
    fn table_rows() {
        let rows = two_dynomial_table(100).unwrap();
        let ns: Vec<u64> = rows.iter().map(|r| r.modulus.get()).collect();
        assert_eq!(ns, vec![11, 13, 23, 37, 47, 59, 61, 71, 73, 83, 97]);
        let row11 = &rows[0];
        assert_eq!(row11.size, 12);
        assert_eq!(row11.verdict.is_irreducible(), Some(false));
    }
}
