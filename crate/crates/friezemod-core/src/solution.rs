//! Solution testing, exhaustive enumeration, and the generic brute-force
//! reducibility search with certified witnesses.
//!
//! A tuple is a solution when its product matrix is `±Id`. A solution of
//! size `n >= 3` is reducible when some member of its `~` class splits as
//! `left ⊕ right` with both parts solutions of size `>= 3`; the witness
//! records the transform and both parts and re-validates everything.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::mat::{Mat2, Sign};
use crate::residue::Modulus;
use crate::tuple::{CTuple, Transform};

/// Whether a tuple solves the equation, with the sign of the identity it
/// hits. `sign` is present iff `is_solution`; `ambiguous` marks modulus 2,
/// where `Id = -Id`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolutionVerdict {
    pub is_solution: bool,
    pub sign: Option<Sign>,
    pub ambiguous: bool,
}

/// Tests `M_n(t) = ±Id`.
pub fn check_solution(t: &CTuple) -> SolutionVerdict {
    let pm = t.matrix().pm_identity();
    SolutionVerdict {
        is_solution: pm.sign.is_some(),
        sign: pm.sign,
        ambiguous: pm.ambiguous,
    }
}

/// A shared counter of candidate-tuple solution tests, with a hard limit.
#[derive(Debug)]
pub struct WorkBudget {
    limit: u64,
    spent: AtomicU64,
}

impl WorkBudget {
    pub const DEFAULT_LIMIT: u64 = 100_000_000;

    pub fn new(limit: u64) -> Self {
        WorkBudget {
            limit,
            spent: AtomicU64::new(0),
        }
    }

    pub fn unlimited() -> Self {
        WorkBudget::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn spent(&self) -> u64 {
        self.spent.load(Ordering::Relaxed)
    }

    /// Records `amount` units of work; false once the limit is passed.
    pub fn charge(&self, amount: u64) -> bool {
        let before = self.spent.fetch_add(amount, Ordering::Relaxed);
        before.saturating_add(amount) <= self.limit
    }
}

impl Default for WorkBudget {
    fn default() -> Self {
        WorkBudget::new(WorkBudget::DEFAULT_LIMIT)
    }
}

/// All solutions of size `n` over `Z/NZ`, in lexicographic order; with
/// `up_to_equivalence`, canonical forms only.
///
/// The search walks the `N^n` tuples depth-first, maintaining the two
/// continuant recurrences (for the tuple and for its tail) instead of
/// multiplying matrices; the raw-product route stays available as an
/// independent oracle in tests. The full scan size `N^n` is checked
/// against the budget before any work happens.
pub fn enumerate_solutions(
    modulus: Modulus,
    n: usize,
    up_to_equivalence: bool,
    budget: &WorkBudget,
) -> Result<Vec<CTuple>> {
    if n == 0 {
        return Err(Error::EmptyTuple);
    }
    let space: u128 = (modulus.get() as u128)
        .checked_pow(n as u32)
        .ok_or(Error::WorkLimitExceeded(budget.limit()))?;
    let remaining = budget.limit().saturating_sub(budget.spent());
    if space > remaining as u128 {
        return Err(Error::WorkLimitExceeded(budget.limit()));
    }
    budget.charge(space as u64);

    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    // (K_i, K_{i-1}) for the prefix, starting from (K_0, K_{-1}).
    let full0 = (1 % modulus.get(), 0u64);
    // (K_{i-1}, K_{i-2}) for the prefix tail (entries after the first).
    let tail0 = (1 % modulus.get(), 0u64);
    dfs(modulus, n, full0, tail0, &mut prefix, &mut out);

    if up_to_equivalence {
        let set: BTreeSet<CTuple> = out.into_iter().map(|t| t.canonical_form()).collect();
        out = set.into_iter().collect();
    }
    Ok(out)
}

fn dfs(
    modulus: Modulus,
    n: usize,
    full: (u64, u64),
    tail: (u64, u64),
    prefix: &mut Vec<u64>,
    out: &mut Vec<CTuple>,
) {
    let nmod = modulus.get();
    if prefix.len() == n {
        // M = [[full.0, -tail.0], [full.1, -tail.1]] = ε·Id.
        let one = 1 % nmod;
        let neg_one = nmod - 1;
        if full.1 == 0
            && tail.0 == 0
            && ((full.0 == one && tail.1 == neg_one) || (full.0 == neg_one && tail.1 == one))
        {
            out.push(CTuple::from_reps(modulus, prefix.clone()));
        }
        return;
    }
    let first = prefix.is_empty();
    for a in 0..nmod {
        let next_full = (step(modulus, a, full.0, full.1), full.0);
        let next_tail = if first {
            tail
        } else {
            (step(modulus, a, tail.0, tail.1), tail.0)
        };
        prefix.push(a);
        dfs(modulus, n, next_full, next_tail, prefix, out);
        prefix.pop();
    }
}

/// `a*k1 - k0 mod N`.
fn step(modulus: Modulus, a: u64, k1: u64, k0: u64) -> u64 {
    let n = modulus.get() as u128;
    ((a as u128 * k1 as u128 + n - k0 as u128) % n) as u64
}

/// The two size-4 parametric families, as one sorted deduplicated list:
/// `(-a, b, a, -b)` with `ab = 0` and `(a, b, a, b)` with `ab = 2`.
pub fn size_four_families(modulus: Modulus) -> Vec<CTuple> {
    let n = modulus.get();
    let mut set = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            let prod = modulus.residue(a as i128) * modulus.residue(b as i128);
            if prod.is_zero() {
                set.insert(
                    CTuple::new(modulus, [-(a as i128), b as i128, a as i128, -(b as i128)])
                        .expect("nonempty"),
                );
            }
            if prod == modulus.residue(2) {
                set.insert(
                    CTuple::new(modulus, [a as i128, b as i128, a as i128, b as i128])
                        .expect("nonempty"),
                );
            }
        }
    }
    set.into_iter().collect()
}

/// Checks that the enumerated size-4 solution set coincides with the union
/// of the two parametric families.
pub fn check_size_four_classification(modulus: Modulus, budget: &WorkBudget) -> Result<bool> {
    let enumerated = enumerate_solutions(modulus, 4, false, budget)?;
    Ok(enumerated == size_four_families(modulus))
}

/// A certified decomposition: `transform(original) = left ⊕ right` with
/// both parts solutions of size >= 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionWitness {
    pub transform: Transform,
    pub left: CTuple,
    pub right: CTuple,
}

impl ReductionWitness {
    /// Re-derives every claim the witness makes about `original`.
    pub fn validate(&self, original: &CTuple) -> Result<()> {
        let fail = |msg: &str| Err(Error::invalid(format!("invalid witness: {msg}")));
        if self.left.len() < 3 || self.right.len() < 3 {
            return fail("parts must have size >= 3");
        }
        if self.left.len() + self.right.len() != original.len() + 2 {
            return fail("part sizes do not add up");
        }
        if !check_solution(&self.right).is_solution {
            return fail("right part is not a solution");
        }
        if !check_solution(&self.left).is_solution {
            return fail("left part is not a solution");
        }
        let member = self.transform.apply(original);
        if self.left.oplus(&self.right)? != member {
            return fail("sum does not reproduce the transformed tuple");
        }
        Ok(())
    }
}

/// Outcome of a reducibility search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionOutcome {
    Reducible(ReductionWitness),
    Irreducible,
    /// The work limit was hit before the space was exhausted; never to be
    /// read as irreducible.
    Unknown { work_spent: u64 },
}

/// Three-valued irreducibility verdict with its provenance: the name of
/// the structural rule that decided it, or the search that ran.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Irreducible {
        source: String,
    },
    Reducible {
        witness: Option<Box<ReductionWitness>>,
        source: String,
    },
    Unknown {
        reason: String,
    },
}

impl Verdict {
    pub fn irreducible(source: impl Into<String>) -> Self {
        Verdict::Irreducible {
            source: source.into(),
        }
    }

    pub fn reducible(witness: ReductionWitness, source: impl Into<String>) -> Self {
        Verdict::Reducible {
            witness: Some(Box::new(witness)),
            source: source.into(),
        }
    }

    pub fn unknown(reason: impl Into<String>) -> Self {
        Verdict::Unknown {
            reason: reason.into(),
        }
    }

    /// `Some(true)` when irreducible, `Some(false)` when reducible.
    pub fn is_irreducible(&self) -> Option<bool> {
        match self {
            Verdict::Irreducible { .. } => Some(true),
            Verdict::Reducible { .. } => Some(false),
            Verdict::Unknown { .. } => None,
        }
    }

    pub fn source(&self) -> &str {
        match self {
            Verdict::Irreducible { source } => source,
            Verdict::Reducible { source, .. } => source,
            Verdict::Unknown { reason } => reason,
        }
    }
}

/// Brute-force reducibility of a solution `t` of size >= 3.
///
/// Scan order is fixed: members of the `~` class in lexicographic order;
/// for each member, the right part's size `m` ascending from 3 to `n-1`;
/// for each `m`, the two free boundary entries `(b_first, b_last)` in
/// row-major order. Interior entries of both parts are forced by the
/// member. The first right part that is a solution yields the witness (the
/// left part is then a solution automatically, but the witness validator
/// re-checks it). Exhausting the space certifies irreducibility; running
/// out of budget yields `Unknown`, never `Irreducible`.
pub fn find_reduction(t: &CTuple, budget: &WorkBudget) -> Result<ReductionOutcome> {
    let n = t.len();
    if n < 3 {
        return Err(Error::invalid(format!(
            "reducibility is defined for size >= 3, got {n}"
        )));
    }
    if !check_solution(t).is_solution {
        return Err(Error::NotASolution);
    }
    let modulus = t.modulus();
    let nmod = modulus.get();

    for (transform, member) in t.class_with_transforms() {
        for m in 3..=n - 1 {
            let l = n + 2 - m;
            // Right part: (b_first, member[l..], b_last); its interior is
            // fixed, so the product of the interior factors is hoisted.
            let mut interior = Mat2::identity(modulus);
            for &x in &member.reps()[l..] {
                interior = Mat2::elementary(modulus.residue(x as i128)).mul(&interior);
            }
            for b_first in 0..nmod {
                let partial =
                    interior.mul(&Mat2::elementary(modulus.residue(b_first as i128)));
                for b_last in 0..nmod {
                    if !budget.charge(1) {
                        return Ok(ReductionOutcome::Unknown {
                            work_spent: budget.spent(),
                        });
                    }
                    let mat = Mat2::elementary(modulus.residue(b_last as i128)).mul(&partial);
                    if !mat.pm_identity().is_pm_identity() {
                        continue;
                    }
                    let mut right = Vec::with_capacity(m);
                    right.push(b_first);
                    right.extend_from_slice(&member.reps()[l..]);
                    right.push(b_last);
                    let right = CTuple::from_reps(modulus, right);

                    let mut left = Vec::with_capacity(l);
                    left.push(
                        (member.residue(0) - modulus.residue(b_last as i128)).rep(),
                    );
                    left.extend_from_slice(&member.reps()[1..l - 1]);
                    left.push(
                        (member.residue(l - 1) - modulus.residue(b_first as i128)).rep(),
                    );
                    let left = CTuple::from_reps(modulus, left);

                    let witness = ReductionWitness {
                        transform,
                        left,
                        right,
                    };
                    witness
                        .validate(t)
                        .expect("scan produced a witness that fails validation");
                    return Ok(ReductionOutcome::Reducible(witness));
                }
            }
        }
    }
    Ok(ReductionOutcome::Irreducible)
}
