//! Acceptance suite: one test per criterion, each ending with a printed
//! PASS line (visible under `--nocapture`). Every comparison is exact.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use friezemod_core::continuant::{
    continuant, continuant_constant, m_n_via_continuants, sign_flip_identity_holds,
};
use friezemod_core::mat::m_n;
use friezemod_core::monomial::{half_modulus_record, minimal_monomial};
use friezemod_core::nt::{
    binomial_divisibility_check, binomial_power_divisibility_check, is_square, is_square_by_scan,
    legendre, legendre_via_reciprocity, primes_up_to, three_is_square, LegendreValue,
};
use friezemod_core::reference::{monomial_size_reference, two_dynomial_reference};
use friezemod_core::solution::{enumerate_solutions, size_four_families};
use friezemod_core::{
    check_solution, find_reduction, CTuple, Modulus, ReductionOutcome, WorkBudget,
};

fn m(n: u64) -> Modulus {
    Modulus::new(n).unwrap()
}

#[test]
fn criterion_01_monomial_size_table_reproduction() {
    let start = Instant::now();
    let mut cells = 0usize;
    for column in monomial_size_reference() {
        let modulus = m(column.n);
        for (k, &expected) in column.sizes.iter().enumerate() {
            let record = minimal_monomial(modulus, modulus.residue(k as i128), None);
            assert_eq!(
                record.size, expected,
                "size mismatch at N = {}, k = {k}",
                column.n
            );
            cells += 1;
        }
    }
    assert_eq!(cells, 227);
    println!(
        "criterion 01 (minimal monomial size table, {cells} cells): PASS in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_02_two_dynomial_table_reproduction() {
    let start = Instant::now();
    let rows = friezemod_core::dynomial::two_dynomial_table(500).unwrap();
    let reference = two_dynomial_reference();
    assert_eq!(rows.len(), reference.len());
    for (row, expected) in rows.iter().zip(reference) {
        assert_eq!(row.modulus.get(), expected.n, "row order mismatch");
        assert_eq!(row.size, expected.size, "size mismatch at N = {}", expected.n);
        assert_eq!(
            row.verdict.is_irreducible(),
            Some(!expected.reducible),
            "verdict mismatch at N = {}",
            expected.n
        );
        let roots: Vec<u64> = row.quad_roots.iter().map(|r| r.rep()).collect();
        let mut expected_roots = expected.roots.clone();
        expected_roots.sort_unstable();
        assert_eq!(roots, expected_roots, "roots mismatch at N = {}", expected.n);
    }
    println!(
        "criterion 02 (2-dynomial reducibility table, {} rows): PASS in {:?}",
        rows.len(),
        start.elapsed()
    );
}

#[test]
fn criterion_03_reference_witness_validation() {
    let mut checked = 0usize;
    for row in two_dynomial_reference() {
        let Some(witness) = row.witness else { continue };
        let modulus = m(row.n);
        let part = witness.tuple(modulus);
        assert_eq!(part.len(), witness.length, "stated length at N = {}", row.n);
        assert!(
            check_solution(&part).is_solution,
            "listed part is not a solution at N = {}",
            row.n
        );
        // The complementary part has the other root of X(X-2) = 2 at both
        // ends; together they rebuild the minimal 2-dynomial tuple.
        let dynomial = CTuple::alternating(modulus, 2, row.size).unwrap();
        let left_len = row.size + 2 - part.len();
        let boundary = modulus.residue(2) - part.residue(0);
        let left = CTuple::new(
            modulus,
            (0..left_len).map(|i| {
                if i == 0 || i == left_len - 1 {
                    boundary.rep() as i128
                } else if i % 2 == 1 {
                    -2
                } else {
                    2
                }
            }),
        )
        .unwrap();
        assert!(
            check_solution(&left).is_solution,
            "complement is not a solution at N = {}",
            row.n
        );
        assert_eq!(
            left.oplus(&part).unwrap(),
            dynomial,
            "sum does not rebuild the minimal tuple at N = {}",
            row.n
        );
        checked += 1;
    }
    assert_eq!(checked, 33);
    println!("criterion 03 (published reducing parts, {checked} witnesses): PASS");
}

#[test]
fn criterion_04_half_modulus_suite() {
    for n in (4..=200u64).step_by(2) {
        let record = half_modulus_record(m(n)).unwrap();
        let expected = if n % 4 == 0 { 4 } else { 6 };
        assert_eq!(record.size, expected, "N = {n}");
        assert_eq!(record.verdict.is_irreducible(), Some(true), "N = {n}");
    }
    // Small cases: the brute-force search independently confirms
    // irreducibility.
    for n in (4..=12u64).step_by(2) {
        let record = half_modulus_record(m(n)).unwrap();
        let outcome = find_reduction(&record.tuple(), &WorkBudget::unlimited()).unwrap();
        assert_eq!(outcome, ReductionOutcome::Irreducible, "N = {n}");
    }
    println!("criterion 04 (half-modulus sizes and irreducibility): PASS");
}

#[test]
fn criterion_05_prime_size_pattern() {
    for p in primes_up_to(199).into_iter().filter(|&p| p > 2) {
        assert!(
            friezemod_core::monomial::check_prime_size_pattern(p).unwrap(),
            "pattern fails at N = {p}"
        );
        // The ±2 sizes equal N exactly.
        let modulus = m(p);
        let record = minimal_monomial(modulus, modulus.residue(2), None);
        assert_eq!(record.size as u64, p, "size of k = 2 at N = {p}");
        let record = minimal_monomial(modulus, modulus.residue(-2), None);
        assert_eq!(record.size as u64, p, "size of k = -2 at N = {p}");
    }
    println!("criterion 05 (prime size pattern up to 199): PASS");
}

#[test]
fn criterion_06_order_bounds() {
    for n in 2..=100u64 {
        let modulus = m(n);
        for k in 0..n {
            let k = modulus.residue(k as i128);
            let mono = minimal_monomial(modulus, k, None).size as u64;
            assert!(mono <= 3 * n, "monomial bound at N = {n}, k = {k}");
            let (dyno, _, _) = friezemod_core::dynomial::minimal_dynomial_size(modulus, k);
            assert!((dyno as u64) <= 6 * n, "dynomial bound at N = {n}, k = {k}");
        }
    }
    println!("criterion 06 (order bounds 3N and 6N up to N = 100): PASS");
}

#[test]
fn criterion_07_small_size_classification() {
    let budget = WorkBudget::unlimited();
    for n in 2..=7u64 {
        let modulus = m(n);
        assert!(
            enumerate_solutions(modulus, 1, false, &budget).unwrap().is_empty(),
            "size 1 at N = {n}"
        );
        assert_eq!(
            enumerate_solutions(modulus, 2, false, &budget).unwrap(),
            vec![CTuple::constant(modulus, 0, 2).unwrap()],
            "size 2 at N = {n}"
        );
        let mut threes = vec![
            CTuple::constant(modulus, 1, 3).unwrap(),
            CTuple::constant(modulus, -1, 3).unwrap(),
        ];
        threes.sort();
        threes.dedup();
        assert_eq!(
            enumerate_solutions(modulus, 3, false, &budget).unwrap(),
            threes,
            "size 3 at N = {n}"
        );
        assert_eq!(
            enumerate_solutions(modulus, 4, false, &budget).unwrap(),
            size_four_families(modulus),
            "size 4 at N = {n}"
        );
    }
    println!("criterion 07 (sizes 1-4 classification for N <= 7): PASS");
}

#[test]
fn criterion_08_structured_vs_generic_search() {
    let mut pairs = 0usize;
    for p in primes_up_to(31).into_iter().filter(|&p| p >= 5) {
        let modulus = m(p);
        for k in 2..p - 1 {
            let k = modulus.residue(k as i128);
            let record = friezemod_core::dynomial::structured_reducibility(modulus, k).unwrap();
            if record.size > 40 {
                continue;
            }
            let tuple = record.tuple();
            let generic = find_reduction(&tuple, &WorkBudget::unlimited()).unwrap();
            let generic_irreducible = matches!(generic, ReductionOutcome::Irreducible);
            assert_eq!(
                record.verdict.is_irreducible(),
                Some(generic_irreducible),
                "disagreement at N = {p}, k = {k}"
            );
            if let ReductionOutcome::Reducible(w) = &generic {
                w.validate(&tuple).unwrap();
            }
            pairs += 1;
        }
    }
    assert!(pairs > 50, "expected a substantial comparison set, got {pairs}");
    println!("criterion 08 (structured vs generic reducibility, {pairs} cells): PASS");
}

#[test]
fn criterion_09_continuant_identities() {
    // Closed form vs recurrence, exhaustively.
    for n in 2..=50u64 {
        let modulus = m(n);
        for x in 0..n {
            let x = modulus.residue(x as i128);
            for len in 0..=40usize {
                let constant: Vec<u64> = vec![x.rep(); len];
                assert_eq!(
                    continuant(modulus, &constant),
                    continuant_constant(modulus, x, len),
                    "N = {n}, x = {x}, len = {len}"
                );
            }
        }
    }
    // Product route vs continuant route, and the sign-flip identity, on
    // 10_000 random tuples each.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..10_000 {
        let n = rng.random_range(2..=50u64);
        let modulus = m(n);
        let len = rng.random_range(1..=30usize);
        let entries: Vec<u64> = (0..len).map(|_| rng.random_range(0..n)).collect();
        assert_eq!(
            m_n(modulus, &entries).unwrap(),
            m_n_via_continuants(modulus, &entries).unwrap()
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..10_000 {
        let n = rng.random_range(2..=50u64);
        let modulus = m(n);
        let len = rng.random_range(0..=30usize);
        let entries: Vec<u64> = (0..len).map(|_| rng.random_range(0..n)).collect();
        assert!(sign_flip_identity_holds(modulus, &entries));
    }
    println!("criterion 09 (continuant identities, exhaustive + 2x10000 random): PASS");
}

#[test]
fn criterion_10_number_theory_suite() {
    // Three routes to the Legendre symbol agree for every unit.
    for p in primes_up_to(200).into_iter().filter(|&p| p > 2) {
        let modulus = m(p);
        for a in 1..p {
            let euler = legendre(a as i128, p).unwrap();
            let recip = legendre_via_reciprocity(a as i128, p).unwrap();
            let scan = if is_square_by_scan(modulus.residue(a as i128)) {
                LegendreValue::Plus
            } else {
                LegendreValue::Minus
            };
            assert_eq!(euler, recip, "p = {p}, a = {a}");
            assert_eq!(euler, scan, "p = {p}, a = {a}");
        }
    }
    // Square-ness of 3 mod p: the congruence rule, the primality shortcut
    // and both square tests coincide for all primes up to 500.
    for p in primes_up_to(500) {
        let rule = p == 2 || p == 3 || p % 12 == 1 || p % 12 == 11;
        assert_eq!(three_is_square(p).unwrap(), rule, "p = {p}");
        let modulus = m(p.max(2));
        let three = modulus.residue(3);
        assert_eq!(is_square(three), rule, "p = {p}");
        assert_eq!(is_square_by_scan(three), rule, "p = {p}");
    }
    // Divisibility facts over their stated ranges.
    for n in 1..=60u64 {
        for k in 1..=n {
            assert!(binomial_divisibility_check(n, k).unwrap(), "n = {n}, k = {k}");
        }
    }
    for l in 2..=7u64 {
        for n in 3..=7u32 {
            for j in 2..=n - 1 {
                assert!(
                    binomial_power_divisibility_check(l, n, j).unwrap(),
                    "l = {l}, n = {n}, j = {j}"
                );
            }
        }
    }
    println!("criterion 10 (Legendre routes, square-of-3 rule, divisibility): PASS");
}

#[test]
fn criterion_11_prose_spot_checks() {
    // N = 11: the explicit decomposition of the minimal 2-dynomial tuple.
    let m11 = m(11);
    let dynomial = CTuple::alternating(m11, 2, 12).unwrap();
    let left = CTuple::new(m11, [7, 9, 2, 9, 2, 9, 2, 9, 7].map(i128::from)).unwrap();
    let right = CTuple::new(m11, [6, 9, 2, 9, 6].map(i128::from)).unwrap();
    assert!(check_solution(&left).is_solution);
    assert!(check_solution(&right).is_solution);
    assert_eq!(left.oplus(&right).unwrap(), dynomial);

    // N = 19: (6, -6, 6, -6) is a minimal dynomial solution, irreducible.
    let m19 = m(19);
    let t19 = CTuple::new(m19, [6, -6, 6, -6].map(i128::from)).unwrap();
    assert!(check_solution(&t19).is_solution);
    assert_eq!(
        find_reduction(&t19, &WorkBudget::unlimited()).unwrap(),
        ReductionOutcome::Irreducible
    );
    let rec19 =
        friezemod_core::dynomial::structured_reducibility(m19, m19.residue(6)).unwrap();
    assert_eq!(rec19.size, 4);
    assert_eq!(rec19.verdict.is_irreducible(), Some(true));

    // N = 14: the 18-tuple with boundary 7 is a solution.
    let m14 = m(14);
    let t14 = CTuple::new(
        m14,
        [7, 3, 11, 3, 11, 3, 11, 3, 11, 3, 11, 3, 11, 3, 11, 3, 11, 7].map(i128::from),
    )
    .unwrap();
    assert!(check_solution(&t14).is_solution);

    // N = 97, k = 3: irreducible by the discriminant criterion.
    let m97 = m(97);
    let rec97 =
        friezemod_core::dynomial::structured_reducibility(m97, m97.residue(3)).unwrap();
    assert!(rec97.criterion_applies);
    assert_eq!(rec97.verdict.is_irreducible(), Some(true));

    // N = 59, k = 2: irreducible with boundary roots {12, 49}.
    let m59 = m(59);
    let rec59 =
        friezemod_core::dynomial::structured_reducibility(m59, m59.residue(2)).unwrap();
    assert_eq!(rec59.verdict.is_irreducible(), Some(true));
    let roots: Vec<u64> = rec59.quad_roots.iter().map(|r| r.rep()).collect();
    assert_eq!(roots, vec![12, 49]);

    println!("criterion 11 (prose spot checks): PASS");
}
