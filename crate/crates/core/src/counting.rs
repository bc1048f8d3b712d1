//! Exact counting: factorials, binomials, conjugacy-class sizes,
//! derangements, and the cycle-count census `D_{n,i,j}`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::partition::Partition;
use crate::{Error, Result};

pub fn factorial(n: usize) -> BigUint {
    let mut f = BigUint::one();
    for i in 2..=n {
        f *= BigUint::from(i);
    }
    f
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut num = BigUint::one();
    for i in 0..k {
        num *= BigUint::from(n - i);
    }
    num / factorial(k)
}

/// Size of the conjugacy class of `S_n` with cycle type `lambda`, by the
/// centralizer formula `n! / prod_i (i^{m_i} * m_i!)`.
pub fn class_size(lambda: &Partition) -> Result<BigUint> {
    let n = lambda.n();
    if n > crate::partition::MAX_PARTITION_N {
        return Err(Error::NOutOfRange(n, crate::partition::MAX_PARTITION_N));
    }
    let mut centralizer = BigUint::one();
    for (len, mult) in lambda.distinct_parts() {
        centralizer *= BigUint::from(len).pow(mult as u32) * factorial(mult);
    }
    Ok(factorial(n) / centralizer)
}

/// Number of derangements of `[m]`, by the inclusion-exclusion sum
/// `d_m = m! * sum_{i=0}^m (-1)^i / i!`.
pub fn derangement_count(m: usize) -> BigUint {
    let m_fact = BigInt::from(factorial(m));
    let mut sum = BigInt::zero();
    for i in 0..=m {
        let term = &m_fact / BigInt::from(factorial(i));
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    debug_assert!(!sum.is_negative());
    sum.to_biguint().expect("derangement count is non-negative")
}

/// `D_{n,i,j}`: the number of permutations of `[n]` with exactly `j` cycles
/// of length `i`, via the alternating-sum formula
/// `n! * i^{-j} / j! * sum_{l=0}^{floor(n/i)-j} (-1)^l i^{-l} / l!`.
///
/// Evaluated over exact rationals; a non-integral or negative result is an
/// implementation bug and reported as a hard failure.
pub fn cycle_count_census(n: usize, i: usize, j: usize) -> Result<BigUint> {
    if i < 1 || i > n {
        return Err(Error::BadParameter(format!("cycle length i={i} not in [1, {n}]")));
    }
    if j > n / i {
        return Err(Error::BadParameter(format!(
            "cycle count j={j} exceeds floor({n}/{i})"
        )));
    }
    let mut sum = BigRational::zero();
    for l in 0..=(n / i - j) {
        let denom = BigInt::from(BigUint::from(i).pow(l as u32) * factorial(l));
        let term = BigRational::new(BigInt::one(), denom);
        if l % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let prefactor = BigRational::new(
        BigInt::from(factorial(n)),
        BigInt::from(BigUint::from(i).pow(j as u32) * factorial(j)),
    );
    let value = prefactor * sum;
    if !value.is_integer() || value.is_negative() {
        return Err(Error::ExactnessViolation(format!(
            "D_({n},{i},{j}) evaluated to non-integral or negative {value}"
        )));
    }
    Ok(value
        .to_integer()
        .to_biguint()
        .expect("checked non-negative"))
}

/// `f64` view of a `BigUint` (for reports only; exact values stay integral).
pub fn biguint_to_f64(x: &BigUint) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::perm::all_perms;

    #[test]
    fn class_size_examples() {
        let id4 = Partition::new(vec![1, 1, 1, 1]).unwrap();
        assert_eq!(class_size(&id4).unwrap(), BigUint::from(1u32));
        let t4 = Partition::new(vec![2, 1, 1]).unwrap();
        assert_eq!(class_size(&t4).unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn class_sizes_from_enumeration() {
        // enumerate S_4 and count by cycle type
        let table = partitions_of(4).unwrap();
        let mut counts = vec![0usize; table.len()];
        for p in all_perms(4) {
            counts[table.index_of(&p.cycle_type()).unwrap()] += 1;
        }
        for (i, lambda) in table.iter().enumerate() {
            assert_eq!(class_size(lambda).unwrap(), BigUint::from(counts[i]));
        }
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=12 {
            let mut sum = BigUint::from(0u32);
            for lambda in partitions_of(n).unwrap().iter() {
                sum += class_size(lambda).unwrap();
            }
            assert_eq!(sum, factorial(n), "n={n}");
        }
    }

    #[test]
    fn derangement_base_cases_and_enumeration() {
        assert_eq!(derangement_count(0), BigUint::from(1u32));
        assert_eq!(derangement_count(1), BigUint::from(0u32));
        let brute = all_perms(4).iter().filter(|p| p.fixed_points() == 0).count();
        assert_eq!(brute, 9);
        assert_eq!(derangement_count(4), BigUint::from(9u32));
    }

    #[test]
    fn derangements_at_least_a_third_of_factorial() {
        for m in 2..=12 {
            assert!(
                derangement_count(m) * 3u32 >= factorial(m),
                "d_{m} >= {m}!/3"
            );
        }
    }

    #[test]
    fn census_examples() {
        assert_eq!(cycle_count_census(4, 1, 4).unwrap(), BigUint::from(1u32));
        assert_eq!(cycle_count_census(4, 2, 1).unwrap(), BigUint::from(6u32));
        for n in 3..=8 {
            assert_eq!(
                cycle_count_census(n, 1, n - 1).unwrap(),
                BigUint::zero(),
                "no permutation has exactly n-1 fixed points"
            );
        }
    }

    #[test]
    fn census_matches_enumeration() {
        for n in 1..=7 {
            let perms = all_perms(n);
            for i in 1..=n {
                for j in 0..=(n / i) {
                    let brute = perms
                        .iter()
                        .filter(|p| p.cycle_type().multiplicity(i) == j)
                        .count();
                    assert_eq!(
                        cycle_count_census(n, i, j).unwrap(),
                        BigUint::from(brute),
                        "D_({n},{i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn census_rows_sum_to_factorial() {
        for n in 1..=10 {
            for i in 1..=n {
                let mut sum = BigUint::zero();
                for j in 0..=(n / i) {
                    sum += cycle_count_census(n, i, j).unwrap();
                }
                assert_eq!(sum, factorial(n), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn census_sandwich() {
        // (1/3) n!/(i^j j!) <= D <= n!/(i^j j!) except (i,j) = (1, n-1)
        for n in 1..=10usize {
            for i in 1..=n {
                for j in 0..=(n / i) {
                    let d = cycle_count_census(n, i, j).unwrap();
                    let cap = factorial(n) / (BigUint::from(i).pow(j as u32) * factorial(j));
                    if i == 1 && j == n - 1 {
                        assert_eq!(d, BigUint::zero());
                        continue;
                    }
                    assert!(&d * 3u32 >= cap, "lower bound D_({n},{i},{j})");
                    assert!(d <= cap, "upper bound D_({n},{i},{j})");
                }
            }
        }
    }

    #[test]
    fn census_rejects_bad_parameters() {
        assert!(cycle_count_census(4, 0, 0).is_err());
        assert!(cycle_count_census(4, 5, 0).is_err());
        assert!(cycle_count_census(4, 2, 3).is_err());
    }

    #[test]
    fn partition_count_sum_bound() {
        // sum_{i=0}^{t-1} p(i) <= t!
        for t in 1..=20usize {
            let mut sum = BigUint::zero();
            for i in 0..t {
                sum += BigUint::from(partitions_of(i).unwrap().len());
            }
            assert!(sum <= factorial(t), "t={t}");
        }
    }
}
