//! Laplacian spectrum of the transposition graph `T_n` and the exact
//! spectral edge-boundary formula for conjugation-invariant sets.
//!
//! The `n! x n!` Laplacian is never materialized: every eigenvalue comes
//! from the closed-form per-partition formula, and every boundary from
//! class-function arithmetic.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::characters::CharacterTable;
use crate::counting::{class_size, factorial};
use crate::partition::{Partition, PartitionTable};
use crate::perm::{class_representative, transposition_pairs};
use crate::sets::ConjClassSet;
use crate::{Error, Result};

/// The Laplacian eigenvalue of `T_n` attached to the irreducible indexed by
/// `alpha`:
/// `mu_alpha = C(n,2) - (1/2) sum_i [(alpha_i - i)(alpha_i - i + 1) - i(i-1)]`.
///
/// The half always cancels; a non-integral intermediate is a hard failure.
pub fn laplacian_eigenvalue(alpha: &Partition) -> Result<i64> {
    let n = alpha.n() as i64;
    let mut sum = 0i64;
    for (idx, &part) in alpha.parts().iter().enumerate() {
        let i = idx as i64 + 1;
        let a = part as i64;
        sum += (a - i) * (a - i + 1) - i * (i - 1);
    }
    if sum % 2 != 0 {
        return Err(Error::ExactnessViolation(format!(
            "odd eigenvalue sum for {alpha:?}"
        )));
    }
    let mu = n * (n - 1) / 2 - sum / 2;
    if mu < 0 {
        return Err(Error::ExactnessViolation(format!(
            "negative eigenvalue {mu} for {alpha:?}"
        )));
    }
    Ok(mu)
}

/// All eigenvalues in [`PartitionTable`] order.
#[derive(Clone, Debug)]
pub struct EigenvalueTable {
    n: usize,
    mu: Vec<i64>,
}

impl EigenvalueTable {
    pub fn new(table: &PartitionTable) -> Result<Self> {
        let mu = table
            .iter()
            .map(laplacian_eigenvalue)
            .collect::<Result<Vec<_>>>()?;
        Ok(EigenvalueTable { n: table.n(), mu })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.mu
    }

    pub fn mu(&self, class_index: usize) -> i64 {
        self.mu[class_index]
    }
}

/// `mu_(n-t,t) = tn - t^2 + t`, the two-row eigenvalue.
pub fn two_row_eigenvalue(t: usize, n: usize) -> i64 {
    let (t, n) = (t as i64, n as i64);
    t * n - t * t + t
}

/// Checks `L * chi_alpha = mu_alpha * chi_alpha` on one representative per
/// class: `C(n,2) chi_alpha(lambda) - sum_tau chi_alpha(type(sigma tau))`
/// must equal `mu_alpha chi_alpha(lambda)` for every class `lambda`.
pub fn verify_eigenvector(ct: &CharacterTable, alpha_index: usize) -> Result<bool> {
    let n = ct.n();
    if n > 9 {
        return Err(Error::NOutOfRange(n, 9));
    }
    let mu = laplacian_eigenvalue(ct.partitions().get(alpha_index))?;
    let degree = BigInt::from((n * (n - 1) / 2) as u64);
    for (l, lambda) in ct.partitions().iter().enumerate() {
        let rep = class_representative(lambda);
        let mut neighbor_sum = BigInt::zero();
        for (a, b) in transposition_pairs(n) {
            let neighbor_type = rep.right_mul_transposition(a, b).cycle_type();
            let idx = ct
                .partitions()
                .index_of(&neighbor_type)
                .expect("neighbor type is a partition of n");
            neighbor_sum += ct.value(alpha_index, idx);
        }
        let lhs = &degree * ct.value(alpha_index, l) - neighbor_sum;
        let rhs = BigInt::from(mu) * ct.value(alpha_index, l);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Integer spectral weights of a conjugation-invariant set:
/// `W_alpha = sum_{lambda in A} |C_lambda| chi_alpha(lambda)`, so that the
/// rational weight of the expansion is `w_alpha = W_alpha / n!`.
#[derive(Clone, Debug)]
pub struct WeightVector {
    n: usize,
    w: Vec<BigInt>,
}

impl WeightVector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[BigInt] {
        &self.w
    }

    /// Exact rational `w_alpha = W_alpha / n!`.
    pub fn rational(&self, alpha_index: usize) -> BigRational {
        BigRational::new(self.w[alpha_index].clone(), BigInt::from(factorial(self.n)))
    }
}

pub fn weights(set: &ConjClassSet, ct: &CharacterTable) -> Result<WeightVector> {
    let n = ct.n();
    if set.n() != n {
        return Err(Error::MismatchedN(set.n(), n));
    }
    let sizes: Vec<BigInt> = ct
        .partitions()
        .iter()
        .map(|l| class_size(l).map(BigInt::from))
        .collect::<Result<Vec<_>>>()?;
    let mut w = Vec::with_capacity(ct.num_classes());
    for a in 0..ct.num_classes() {
        let mut total = BigInt::zero();
        for c in 0..ct.num_classes() {
            if set.contains(c) {
                total += &sizes[c] * ct.value(a, c);
            }
        }
        w.push(total);
    }
    Ok(WeightVector { n, w })
}

/// Exact spectral edge-boundary: `|dA| = (sum_alpha mu_alpha W_alpha^2) / n!`.
///
/// The division must be exact; a remainder is a hard failure.
pub fn spectral_boundary(set: &ConjClassSet, ct: &CharacterTable) -> Result<BigUint> {
    let wv = weights(set, ct)?;
    let eigs = EigenvalueTable::new(ct.partitions())?;
    let mut total = BigInt::zero();
    for a in 0..ct.num_classes() {
        let w = &wv.values()[a];
        total += BigInt::from(eigs.mu(a)) * w * w;
    }
    let n_fact = BigInt::from(factorial(ct.n()));
    let (q, r) = total.div_rem(&n_fact);
    if !r.is_zero() {
        return Err(Error::ExactnessViolation(format!(
            "spectral boundary sum {total} not divisible by {}!",
            ct.n()
        )));
    }
    q.to_biguint().ok_or_else(|| {
        Error::ExactnessViolation("negative spectral boundary".into())
    })
}

/// The spectral-gap lower bound `|A|(n! - |A|)/(n-1)!` as an exact rational.
pub fn diaconis_lower_bound(a: &BigUint, n: usize) -> BigRational {
    let a = BigInt::from(a.clone());
    let n_fact = BigInt::from(factorial(n));
    let nm1_fact = BigInt::from(factorial(n - 1));
    BigRational::new(&a * (n_fact - &a), nm1_fact)
}
