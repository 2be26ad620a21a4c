//! Invariant checks against independent oracles: exhaustive where the domain
//! is small, randomized where it is not.

mod common;

use proptest::collection::vec;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use primecheck::dispatch::{shrink, Config, Dispatcher, ForcedPath};
use primecheck::millerrabin::{is_prime_u64, strong_probable_prime};
use primecheck::modmath::{mod_add, mod_exp, mod_mul};
use primecheck::sieve::{division_count, primes_up_to, sorted_membership};
use primecheck::util::isqrt;
use primecheck::wheel::{build_wheel, trial_division_medium, trial_division_small, wheel_divisors};

#[test]
fn modmath_exhaustive_small_moduli() {
    // Full cross product for every modulus up to 2^10. The oracle sums and
    // products stay far below 2^64 here, so plain arithmetic is exact.
    (1u64..=1024).into_par_iter().for_each(|m| {
        for a in 0..m {
            for b in 0..m {
                assert_eq!(mod_add(a, b, m), (a + b) % m, "add {a} {b} {m}");
                assert_eq!(mod_mul(a, b, m), (a * b) % m, "mul {a} {b} {m}");
            }
        }
    });
}

proptest! {
    #[test]
    fn mod_add_matches_oracle(m in 1u64.., ra in 0u64.., rb in 0u64..) {
        let a = ra % m;
        let b = rb % m;
        prop_assert_eq!(mod_add(a, b, m), common::oracle_mod_add(a, b, m));
    }

    #[test]
    fn mod_mul_matches_oracle(m in 1u64.., ra in 0u64.., rb in 0u64..) {
        let a = ra % m;
        let b = rb % m;
        prop_assert_eq!(mod_mul(a, b, m), common::oracle_mod_mul(a, b, m));
    }

    #[test]
    fn mod_mul_commutes(m in 1u64.., ra in 0u64.., rb in 0u64..) {
        let a = ra % m;
        let b = rb % m;
        prop_assert_eq!(mod_mul(a, b, m), mod_mul(b, a, m));
    }

    #[test]
    fn mod_exp_matches_iterated_multiplication(m in 2u64..=1024, ra in 0u64.., e in 0u64..=65536) {
        let a = ra % m;
        let mut expected = 1u64;
        for _ in 0..e {
            expected = expected * a % m;
        }
        prop_assert_eq!(mod_exp(a, e, m), expected);
    }

    #[test]
    fn mod_exp_matches_oracle(m in 1u64.., ra in 0u64.., e in 0u64..) {
        let a = ra % m;
        prop_assert_eq!(mod_exp(a, e, m), common::oracle_mod_exp(a, e, m));
    }
}

#[test]
fn primes_pass_every_base() {
    let mask = common::oracle_sieve(10_000);
    for p in (3..10_000u64).filter(|&p| mask[p as usize]) {
        for base in primecheck::SPRP_BASES_U64 {
            assert!(
                strong_probable_prime(p, base),
                "prime {p} rejected by base {base}"
            );
        }
    }
}

#[test]
fn miller_rabin_matches_sieve_exhaustively() {
    let mask = common::oracle_sieve(1 << 20);
    (0u64..1 << 20).into_par_iter().for_each(|n| {
        assert_eq!(is_prime_u64(n), mask[n as usize], "mismatch at {n}");
    });
}

#[test]
fn wheel_divisors_match_coprime_enumeration() {
    let bases: [&[u64]; 4] = [&[2], &[2, 3], &[2, 3, 5], &[2, 3, 5, 7]];
    for basis in bases {
        let spec = build_wheel(basis);
        for limit in (0..=300).chain([1_000, 9_999, 100_000]) {
            let got = wheel_divisors(&spec, limit);
            let expected: Vec<u64> = (2..=limit.max(1))
                .filter(|k| basis.iter().all(|p| k % p != 0))
                .collect();
            assert_eq!(got, expected, "basis {basis:?} limit {limit}");
            assert!(got.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

#[test]
fn small_trial_division_matches_sieve_exhaustively() {
    let mask = common::oracle_sieve(1 << 18);
    for n in 2u64..1 << 18 {
        assert_eq!(trial_division_small(n), mask[n as usize], "mismatch at {n}");
    }
}

#[test]
fn medium_trial_division_matches_miller_rabin() {
    // 10^4 draws spread log-uniformly over the medium range; a uniform draw
    // would pile everything into the expensive top octave.
    (0u64..10_000).into_par_iter().for_each(|i| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6d65_6469 ^ i);
        let bits = rng.gen_range(18u32..=48);
        let n = rng.gen_range(1u64 << bits..1u64 << (bits + 1));
        assert_eq!(trial_division_medium(n), is_prime_u64(n), "mismatch at {n}");
    });
}

#[test]
fn sieve_matches_trial_division_for_all_small_limits() {
    let reference: Vec<u64> = (2u64..=10_000)
        .filter(|&n| common::smallest_factor(n).is_none())
        .collect();
    for limit in 0u64..=10_000 {
        let cut = reference.partition_point(|&p| p <= limit);
        assert_eq!(
            primes_up_to(limit).unwrap().primes(),
            &reference[..cut],
            "limit {limit}"
        );
    }
}

proptest! {
    #[test]
    fn membership_matches_linear_scan(values in vec(0u64..=10_000, 0..512)) {
        let table = primes_up_to(10_000).unwrap();
        let mask = sorted_membership(&values, &table);
        for (value, hit) in values.iter().zip(mask) {
            prop_assert_eq!(hit, table.primes().contains(value));
        }
    }
}

#[test]
fn division_count_matches_literal_walk() {
    // The literal model: for each k in 1..=n, count primes below k.
    let literal = |n: u64| -> u64 {
        let primes = primes_up_to(isqrt(n)).unwrap();
        (1..=n)
            .map(|k| primes.primes().iter().filter(|&&q| q < k).count() as u64)
            .sum()
    };
    for n in (1..200).chain([1_000, 2_000, 100_000]) {
        assert_eq!(division_count(n), literal(n), "n = {n}");
    }
}

proptest! {
    #[test]
    fn shrinking_is_idempotent(values in vec(0u64.., 0..400)) {
        let first = shrink(&values);
        let survivor_values: Vec<u64> = first.survivors.iter().map(|s| s.value).collect();
        let second = shrink(&survivor_values);
        prop_assert_eq!(second.survivors.len(), survivor_values.len());
        prop_assert!(second.resolved.iter().all(Option::is_none));
    }

    #[test]
    fn survivors_are_coprime_to_the_basis(values in vec(0u64.., 0..400)) {
        for survivor in shrink(&values).survivors {
            prop_assert!(survivor.value > 7);
            for p in [2u64, 3, 5, 7] {
                prop_assert!(survivor.value % p != 0);
            }
        }
    }

    #[test]
    fn permuting_input_permutes_mask(values in vec(0u64..=1_000_000, 1..300), seed in 0u64..) {
        let dispatcher = Dispatcher::default();
        let base_mask = dispatcher.is_prime(&values).unwrap();

        let mut order: Vec<usize> = (0..values.len()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let permuted: Vec<u64> = order.iter().map(|&i| values[i]).collect();
        let permuted_mask = dispatcher.is_prime(&permuted).unwrap();

        for (slot, &source) in order.iter().enumerate() {
            prop_assert_eq!(permuted_mask.bits()[slot], base_mask.bits()[source]);
        }
    }

    #[test]
    fn forced_paths_never_change_bits(values in vec(0u64..=1_000_000, 2..400)) {
        let force = |path| {
            Dispatcher::new(Config { forced_path: path, ..Config::default() })
                .is_prime(&values)
                .unwrap()
        };
        let sqrt_mask = force(ForcedPath::Sqrt);
        prop_assert_eq!(&sqrt_mask, &force(ForcedPath::BinarySearch));
        prop_assert_eq!(&sqrt_mask, &force(ForcedPath::Auto));
    }
}

#[test]
fn shrink_cycle_counts_match_brute_force() {
    // Survivors of 1..=210: the integers coprime to 210, minus the leading 1,
    // which is resolved composite. The second cycle keeps all 48.
    let count_coprime = |lo: u64, hi: u64| {
        (lo..=hi)
            .filter(|k| [2u64, 3, 5, 7].iter().all(|p| k % p != 0))
            .count()
    };
    let first_cycle: Vec<u64> = (1..=210).collect();
    let shrunk = shrink(&first_cycle);
    assert_eq!(shrunk.survivors.len(), count_coprime(2, 210));
    assert_eq!(shrunk.survivors.len(), 47);
    assert_eq!(shrunk.resolved[0], Some(false)); // element 1
    for p in [2usize, 3, 5, 7] {
        assert_eq!(shrunk.resolved[p - 1], Some(true));
    }

    let two_cycles: Vec<u64> = (1..=420).collect();
    assert_eq!(
        shrink(&two_cycles).survivors.len(),
        47 + count_coprime(211, 420)
    );
    assert_eq!(shrink(&two_cycles).survivors.len(), 95);
}

#[test]
fn first_hundred_under_both_paths() {
    let values: Vec<u64> = (1..=100).collect();
    let oracle = common::oracle_sieve(101);
    for path in [ForcedPath::Auto, ForcedPath::Sqrt, ForcedPath::BinarySearch] {
        let mask = Dispatcher::new(Config {
            forced_path: path,
            ..Config::default()
        })
        .is_prime(&values)
        .unwrap();
        assert_eq!(mask.count_primes(), 25);
        for (i, &value) in values.iter().enumerate() {
            assert_eq!(mask.bits()[i], oracle[value as usize]);
        }
    }
}

#[test]
fn numeric_entry_point_propagates_validation() {
    let dispatcher = Dispatcher::default();
    let mask = dispatcher
        .is_prime_numeric(&[1.0, 2.0, 3.0, 4.0, 5.0])
        .unwrap();
    assert_eq!(mask.bits(), &[false, true, true, false, true]);
    assert!(dispatcher.is_prime_numeric(&[2.5]).is_err());
    assert!(dispatcher.is_prime_numeric(&[-7.0]).is_err());
}

#[test]
fn fermat_identity_on_the_largest_prime() {
    let p = 18446744073709551557u64;
    assert_eq!(mod_exp(2, p - 1, p), 1);
    assert_eq!(common::oracle_mod_exp(2, p - 1, p), 1);
}
