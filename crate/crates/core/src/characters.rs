//! Characters of `S_n` as exact class functions: permutation characters
//! `xi_beta`, the determinantal expansion of irreducible characters over
//! them, and full character tables via the Murnaghan-Nakayama rule.
//!
//! The two routes to an irreducible character value (determinantal formula
//! and Murnaghan-Nakayama) are deliberately independent and cross-checked
//! in tests.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::counting::{binomial, factorial};
use crate::partition::{dominates, partitions_of, Partition, PartitionTable};
use crate::perm::PermWord;
use crate::{Error, Result};

/// Largest `n` for a full character table (`p(14) = 135`).
pub const MAX_TABLE_N: usize = 14;
/// Largest `u = n - alpha_1` in the determinantal expansion (cost `(u+1)!`).
pub const MAX_EXPANSION_U: usize = 6;

/// An exact-integer class function on `S_n`, one value per conjugacy class
/// in [`PartitionTable`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: Vec<BigInt>,
}

impl ClassFunction {
    pub fn new(n: usize, values: Vec<BigInt>) -> Self {
        ClassFunction { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn value(&self, class_index: usize) -> &BigInt {
        &self.values[class_index]
    }
}

/// The number of `beta`-tabloids fixed by any permutation of cycle type
/// `lambda`: the cycles of `lambda` must be distributed whole into the rows
/// of `beta`. Computed by dynamic programming over rows and cycle-length
/// multiplicities.
pub fn xi_on_class(beta: &Partition, lambda: &Partition) -> Result<BigUint> {
    if beta.n() != lambda.n() {
        return Err(Error::MismatchedN(beta.n(), lambda.n()));
    }
    let lengths: Vec<(usize, usize)> = lambda.distinct_parts();
    let mut memo: HashMap<(usize, Vec<usize>), BigUint> = HashMap::new();
    let mult: Vec<usize> = lengths.iter().map(|&(_, m)| m).collect();
    Ok(xi_rows(beta.parts(), 0, &lengths, mult, &mut memo))
}

fn xi_rows(
    rows: &[usize],
    row: usize,
    lengths: &[(usize, usize)],
    remaining: Vec<usize>,
    memo: &mut HashMap<(usize, Vec<usize>), BigUint>,
) -> BigUint {
    if row == rows.len() {
        debug_assert!(remaining.iter().all(|&m| m == 0));
        return BigUint::one();
    }
    if let Some(v) = memo.get(&(row, remaining.clone())) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    let mut chosen = vec![0usize; lengths.len()];
    fill_row(
        rows,
        row,
        lengths,
        &remaining,
        0,
        rows[row],
        &mut chosen,
        BigUint::one(),
        &mut total,
        memo,
    );
    memo.insert((row, remaining), total.clone());
    total
}

/// Enumerates the ways to fill the current row (capacity `cap`) with whole
/// cycles, multiplying in the binomial choices of which cycles are used.
#[allow(clippy::too_many_arguments)]
fn fill_row(
    rows: &[usize],
    row: usize,
    lengths: &[(usize, usize)],
    remaining: &[usize],
    idx: usize,
    cap: usize,
    chosen: &mut Vec<usize>,
    ways: BigUint,
    total: &mut BigUint,
    memo: &mut HashMap<(usize, Vec<usize>), BigUint>,
) {
    if idx == lengths.len() {
        if cap == 0 {
            let next_remaining: Vec<usize> = remaining
                .iter()
                .zip(chosen.iter())
                .map(|(&m, &c)| m - c)
                .collect();
            *total += ways * xi_rows(rows, row + 1, lengths, next_remaining, memo);
        }
        return;
    }
    let (len, _) = lengths[idx];
    let max_here = remaining[idx].min(cap / len);
    for c in 0..=max_here {
        chosen[idx] = c;
        let w = &ways * binomial(remaining[idx], c);
        fill_row(rows, row, lengths, remaining, idx + 1, cap - c * len, chosen, w, total, memo);
    }
    chosen[idx] = 0;
}

/// `xi_{(n-s,s)}` on a class: the number of `s`-subsets of `[n]` fixed by a
/// permutation of cycle type `lambda`, i.e. unions of cycles with total
/// length `s`. Fast two-row path; must agree with
/// `xi_on_class((n-s,s), lambda)`.
pub fn xi_two_row(s: usize, lambda: &Partition) -> Result<BigUint> {
    let n = lambda.n();
    if 2 * s > n {
        return Err(Error::BadParameter(format!("s={s} exceeds n/2 with n={n}")));
    }
    // knapsack over cycle-length multiplicities
    let mut ways = vec![BigUint::zero(); s + 1];
    ways[0] = BigUint::one();
    for (len, mult) in lambda.distinct_parts() {
        let mut next = vec![BigUint::zero(); s + 1];
        for (weight, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for c in 0..=mult {
                let total = weight + c * len;
                if total > s {
                    break;
                }
                next[total] += w * binomial(mult, c);
            }
        }
        ways = next;
    }
    Ok(ways[s].clone())
}

/// The determinantal expansion of `chi_alpha` over permutation characters:
/// `chi_alpha = sum_beta c_{alpha,beta} xi_beta` with `beta` dominating
/// `alpha` and integer coefficients.
#[derive(Clone, Debug)]
pub struct DeterminantalExpansion {
    alpha: Partition,
    terms: BTreeMap<Vec<usize>, i64>,
}

impl DeterminantalExpansion {
    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    /// Coefficient map keyed by the parts of `beta`; every key dominates
    /// `alpha` and every coefficient is nonzero.
    pub fn terms(&self) -> &BTreeMap<Vec<usize>, i64> {
        &self.terms
    }

    pub fn coefficient_abs_sum(&self) -> u64 {
        self.terms.values().map(|c| c.unsigned_abs()).sum()
    }
}

/// Expands `chi_alpha` over the `xi_beta`. Only permutations of `[u+1]`
/// (with `u = n - alpha_1`) can contribute: any other permutation sends some
/// entry of `alpha - id + pi` negative.
pub fn determinantal_expansion(alpha: &Partition) -> Result<DeterminantalExpansion> {
    let n = alpha.n();
    let u = n - alpha.part(1);
    if u > MAX_EXPANSION_U {
        return Err(Error::ExpansionTooLarge {
            got: u,
            max: MAX_EXPANSION_U,
        });
    }
    let m = u + 1;
    let mut terms: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    let mut pi: Vec<usize> = (1..=m).collect();
    loop {
        // alpha - id + pi over positions 1..=u+1, alpha zero-padded
        let mut entries = Vec::with_capacity(m);
        let mut ok = true;
        for (i, &pi_i) in pi.iter().enumerate() {
            let a_i = alpha.part(i + 1) as i64;
            let e = a_i - (i as i64 + 1) + pi_i as i64;
            if e < 0 {
                ok = false;
                break;
            }
            entries.push(e as usize);
        }
        if ok {
            entries.sort_unstable_by(|a, b| b.cmp(a));
            while entries.last() == Some(&0) {
                entries.pop();
            }
            debug_assert_eq!(entries.iter().sum::<usize>(), n);
            let sign = permutation_sign(&pi);
            let c = terms.entry(entries).or_insert(0);
            *c += sign;
        }
        if !next_permutation(&mut pi) {
            break;
        }
    }
    terms.retain(|_, c| *c != 0);
    // support check: every surviving beta dominates alpha
    for beta_parts in terms.keys() {
        let beta = Partition::new(beta_parts.clone())?;
        debug_assert!(dominates(&beta, alpha)?);
    }
    Ok(DeterminantalExpansion {
        alpha: alpha.clone(),
        terms,
    })
}

fn permutation_sign(pi: &[usize]) -> i64 {
    let mut inv = 0usize;
    for i in 0..pi.len() {
        for j in (i + 1)..pi.len() {
            if pi[i] > pi[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// `chi_alpha(lambda)` by the determinantal route:
/// `sum_beta c_{alpha,beta} * xi_beta(lambda)`.
pub fn chi_via_determinantal(alpha: &Partition, lambda: &Partition) -> Result<BigInt> {
    if alpha.n() != lambda.n() {
        return Err(Error::MismatchedN(alpha.n(), lambda.n()));
    }
    let expansion = determinantal_expansion(alpha)?;
    let mut total = BigInt::zero();
    for (beta_parts, &c) in expansion.terms() {
        let beta = Partition::new(beta_parts.clone())?;
        let xi = BigInt::from(xi_on_class(&beta, lambda)?);
        total += BigInt::from(c) * xi;
    }
    Ok(total)
}

/// Full character table of `S_n`, rows and columns in [`PartitionTable`]
/// order (row = irreducible `alpha`, column = class `lambda`).
#[derive(Clone, Debug)]
pub struct CharacterTable {
    table: PartitionTable,
    rows: Vec<ClassFunction>,
}

impl CharacterTable {
    /// Assembles a table from raw rows; test-only escape hatch for negative
    /// controls (perturbed tables).
    #[doc(hidden)]
    pub fn from_parts(table: PartitionTable, rows: Vec<ClassFunction>) -> Self {
        CharacterTable { table, rows }
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn partitions(&self) -> &PartitionTable {
        &self.table
    }

    pub fn num_classes(&self) -> usize {
        self.table.len()
    }

    pub fn row(&self, alpha_index: usize) -> &ClassFunction {
        &self.rows[alpha_index]
    }

    pub fn value(&self, alpha_index: usize, class_index: usize) -> &BigInt {
        self.rows[alpha_index].value(class_index)
    }

    /// `chi_alpha(lambda)` by partition lookup.
    pub fn chi(&self, alpha: &Partition, lambda: &Partition) -> Option<&BigInt> {
        let a = self.table.index_of(alpha)?;
        let l = self.table.index_of(lambda)?;
        Some(self.value(a, l))
    }

    /// Dimension of the irreducible indexed by `alpha` (value at the
    /// identity class).
    pub fn dimension(&self, alpha_index: usize) -> &BigInt {
        self.value(alpha_index, self.num_classes() - 1)
    }
}

/// Builds the character table of `S_n` (n <= 14) by the Murnaghan-Nakayama
/// rule, memoized on (shape, remaining cycles).
pub fn character_table(n: usize) -> Result<CharacterTable> {
    if n > MAX_TABLE_N {
        return Err(Error::NOutOfRange(n, MAX_TABLE_N));
    }
    let table = partitions_of(n)?;
    let mut memo: HashMap<(Vec<usize>, Vec<usize>), BigInt> = HashMap::new();
    let mut rows = Vec::with_capacity(table.len());
    for alpha in table.iter() {
        let mut values = Vec::with_capacity(table.len());
        for lambda in table.iter() {
            values.push(mn_char(alpha.parts(), lambda.parts(), &mut memo));
        }
        rows.push(ClassFunction::new(n, values));
    }
    Ok(CharacterTable { table, rows })
}

/// Murnaghan-Nakayama on beta-sets: removing a rim hook of length `r` from
/// the shape corresponds to lowering one first-column hook length by `r`,
/// with sign given by the number of hook lengths jumped over.
fn mn_char(
    shape: &[usize],
    cycles: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), BigInt>,
) -> BigInt {
    if cycles.is_empty() {
        debug_assert!(shape.is_empty());
        return BigInt::one();
    }
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let r = cycles[0];
    let rest = &cycles[1..];
    let l = shape.len();
    // first-column hook lengths, strictly decreasing
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect();
    let mut total = BigInt::zero();
    for (pos, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        // hook lengths strictly between target and b determine the height sign
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let sign = if jumped % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        let mut new_beta = beta.clone();
        new_beta[pos] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        // convert back to a shape, dropping trailing zero parts
        let mut new_shape: Vec<usize> = new_beta
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (l - 1 - i))
            .collect();
        while new_shape.last() == Some(&0) {
            new_shape.pop();
        }
        total += sign * mn_char(&new_shape, rest, memo);
    }
    memo.insert(key, total.clone());
    total
}

/// Direct tabloid-enumeration oracle for `xi_beta(sigma)`: enumerate all
/// ordered set partitions of `[n]` with block sizes `beta` and count those
/// whose every block is setwise fixed by `sigma`.
pub fn xi_bruteforce(beta: &Partition, sigma: &PermWord) -> Result<BigUint> {
    let n = beta.n();
    if n != sigma.n() {
        return Err(Error::MismatchedN(n, sigma.n()));
    }
    if n > 7 {
        return Err(Error::TooLarge(format!("xi_bruteforce with n={n} > 7")));
    }
    let mut multinomial = factorial(n);
    for &b in beta.parts() {
        multinomial /= factorial(b);
    }
    if multinomial > BigUint::from(1_000_000u32) {
        return Err(Error::TooLarge(format!(
            "{multinomial} tabloids of shape {beta}"
        )));
    }
    let elements: Vec<usize> = (1..=n).collect();
    Ok(BigUint::from(count_fixed_tabloids(
        beta.parts(),
        0,
        &elements,
        sigma,
    )))
}

fn count_fixed_tabloids(rows: &[usize], row: usize, remaining: &[usize], sigma: &PermWord) -> u64 {
    if row == rows.len() {
        debug_assert!(remaining.is_empty());
        return 1;
    }
    let size = rows[row];
    let mut count = 0u64;
    let mut indices: Vec<usize> = (0..size).collect();
    loop {
        let block: Vec<usize> = indices.iter().map(|&i| remaining[i]).collect();
        if block_fixed(&block, sigma) {
            let rest: Vec<usize> = remaining
                .iter()
                .enumerate()
                .filter(|(i, _)| !indices.contains(i))
                .map(|(_, &v)| v)
                .collect();
            count += count_fixed_tabloids(rows, row + 1, &rest, sigma);
        }
        if !next_combination(&mut indices, remaining.len()) {
            break;
        }
    }
    count
}

fn block_fixed(block: &[usize], sigma: &PermWord) -> bool {
    block.iter().all(|&x| block.contains(&sigma.image(x)))
}

fn next_combination(indices: &mut [usize], n: usize) -> bool {
    let k = indices.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if indices[i] < n - k + i {
            indices[i] += 1;
            for j in (i + 1)..k {
                indices[j] = indices[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
