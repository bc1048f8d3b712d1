//! Conjugation-invariant sets, explicit permutation sets, and three
//! independent edge-boundary engines for `T_n`.
//!
//! Conjugation-invariance makes a class-interaction matrix possible: the
//! number of `T_n` edges between two classes is determined by a single
//! representative, so boundaries of class unions cost `O(p(n)^2)` instead
//! of `O(n! n^2)`.

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::counting::{class_size, factorial};
use crate::partition::{parse_cycle_type, partitions_of, PartitionTable};
use crate::perm::{
    all_perms, class_representative, perm_rank_lex, perm_unrank_lex, transposition_pairs, PermWord,
};
use crate::{Error, Result};

/// Largest `n` for class-interaction machinery.
pub const MAX_CLASS_N: usize = 14;
/// Largest `n` for explicit (permutation-level) brute force.
pub const MAX_BRUTE_N: usize = 8;

/// Partition table plus class sizes, shared by the boundary engines.
#[derive(Clone, Debug)]
pub struct ClassContext {
    table: PartitionTable,
    sizes: Vec<u128>,
}

impl ClassContext {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_CLASS_N {
            return Err(Error::NOutOfRange(n, MAX_CLASS_N));
        }
        let table = partitions_of(n)?;
        let sizes = table
            .iter()
            .map(|l| {
                class_size(l).map(|s| s.to_u128().expect("class size fits u128 for n <= 14"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassContext { table, sizes })
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn table(&self) -> &PartitionTable {
        &self.table
    }

    pub fn num_classes(&self) -> usize {
        self.table.len()
    }

    pub fn class_sizes(&self) -> &[u128] {
        &self.sizes
    }
}

/// A union of conjugacy classes of `S_n`: a membership bitset over the
/// canonical partition list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClassSet {
    n: usize,
    bits: Vec<bool>,
}

impl ConjClassSet {
    pub fn empty(table: &PartitionTable) -> Self {
        ConjClassSet {
            n: table.n(),
            bits: vec![false; table.len()],
        }
    }

    pub fn full(table: &PartitionTable) -> Self {
        ConjClassSet {
            n: table.n(),
            bits: vec![true; table.len()],
        }
    }

    pub fn from_indices(table: &PartitionTable, indices: &[usize]) -> Result<Self> {
        let mut set = ConjClassSet::empty(table);
        for &i in indices {
            if i >= table.len() {
                return Err(Error::BadParameter(format!(
                    "class index {i} out of range (p(n)={})",
                    table.len()
                )));
            }
            set.bits[i] = true;
        }
        Ok(set)
    }

    /// Membership from the low bits of a mask (bit `i` = class `i`); only
    /// meaningful when `p(n) <= 64`.
    pub fn from_mask(table: &PartitionTable, mask: u64) -> Self {
        let bits = (0..table.len()).map(|i| mask >> i & 1 == 1).collect();
        ConjClassSet { n: table.n(), bits }
    }

    /// Parses a comma-separated list of cycle-type strings, e.g. `"3+1, 2+2"`.
    pub fn parse(table: &PartitionTable, s: &str) -> Result<Self> {
        let mut set = ConjClassSet::empty(table);
        for tok in s.split(',') {
            if tok.trim().is_empty() {
                continue;
            }
            let lambda = parse_cycle_type(tok)?;
            let idx = table.index_of(&lambda).ok_or_else(|| {
                Error::Parse(format!("{lambda} is not a partition of {}", table.n()))
            })?;
            set.bits[idx] = true;
        }
        Ok(set)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_classes(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, class_index: usize) -> bool {
        self.bits[class_index]
    }

    pub fn insert(&mut self, class_index: usize) {
        self.bits[class_index] = true;
    }

    pub fn complement(&self) -> Self {
        ConjClassSet {
            n: self.n,
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| if b { Some(i) } else { None })
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    /// Total number of permutations in the union.
    pub fn size(&self, ctx: &ClassContext) -> u128 {
        self.indices().map(|i| ctx.sizes[i]).sum()
    }

    pub fn size_big(&self, table: &PartitionTable) -> Result<BigUint> {
        let mut total = BigUint::from(0u32);
        for i in self.indices() {
            total += class_size(table.get(i))?;
        }
        Ok(total)
    }

    /// Cycle-type strings of the member classes, in canonical order.
    pub fn class_strings(&self, table: &PartitionTable) -> Vec<String> {
        self.indices().map(|i| table.get(i).to_string()).collect()
    }
}

/// Symmetric matrix of edge counts between conjugacy classes:
/// `E[l][m]` = number of `T_n` edges with one endpoint in class `l` and the
/// other in class `m` (for `l != m`); the diagonal holds within-class edge
/// counts (always 0 in `T_n`, since a transposition flips parity).
#[derive(Clone, Debug)]
pub struct ClassInteractionMatrix {
    n: usize,
    e: Vec<Vec<u128>>,
}

impl ClassInteractionMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, l: usize, m: usize) -> u128 {
        self.e[l][m]
    }

    pub fn num_classes(&self) -> usize {
        self.e.len()
    }
}

/// Builds the class-interaction matrix from one representative per class:
/// every `sigma` in class `l` has the same multiset of neighbor classes, so
/// `E_raw[l][m] = |C_l| * #{transpositions tau : type(rep_l * tau) = m}`
/// counts each between-class edge once from the `l` side and each
/// within-class edge twice. Both the symmetry and the exact row-sum
/// `sum_m E_raw[l][m] = |C_l| * C(n,2)` are verified; violation is a hard
/// failure.
pub fn interaction_matrix(ctx: &ClassContext) -> Result<ClassInteractionMatrix> {
    let n = ctx.n();
    let k = ctx.num_classes();
    let pairs = transposition_pairs(n);
    let mut e = vec![vec![0u128; k]; k];
    for (l, lambda) in ctx.table.iter().enumerate() {
        let rep = class_representative(lambda);
        for &(a, b) in &pairs {
            let t = rep.right_mul_transposition(a, b).cycle_type();
            let m = ctx.table.index_of(&t).expect("neighbor type in table");
            e[l][m] += ctx.sizes[l];
        }
    }
    let degree = (n * (n - 1) / 2) as u128;
    for l in 0..k {
        let row_sum: u128 = e[l].iter().sum();
        if row_sum != ctx.sizes[l] * degree {
            return Err(Error::ExactnessViolation(format!(
                "interaction matrix row {l} sums to {row_sum}, expected |C|*C(n,2)"
            )));
        }
        for m in 0..k {
            if l != m && e[l][m] != e[m][l] {
                return Err(Error::ExactnessViolation(format!(
                    "interaction matrix asymmetric at ({l},{m})"
                )));
            }
        }
        if e[l][l] % 2 != 0 {
            return Err(Error::ExactnessViolation(format!(
                "odd within-class incidence count at class {l}"
            )));
        }
        e[l][l] /= 2;
    }
    Ok(ClassInteractionMatrix { n, e })
}

/// `|dA| = sum_{l in A, m not in A} E[l][m]`.
pub fn boundary_via_classes(set: &ConjClassSet, matrix: &ClassInteractionMatrix) -> u128 {
    let k = matrix.num_classes();
    let mut total = 0u128;
    for l in 0..k {
        if !set.contains(l) {
            continue;
        }
        for m in 0..k {
            if !set.contains(m) {
                total += matrix.entry(l, m);
            }
        }
    }
    total
}

/// Visits every subset of the conjugacy classes in Gray-code order,
/// maintaining size and edge-boundary incrementally (one class flips per
/// step, an `O(p(n))` boundary delta). The visitor sees the membership
/// mask (bit `i` = class `i`), the total size, and `|dA|`.
///
/// Requires `p(n) <= 24` (i.e. `n <= 8`) to keep the sweep exhaustive.
pub fn sweep_class_subsets<F>(
    ctx: &ClassContext,
    matrix: &ClassInteractionMatrix,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(u64, u128, u128),
{
    let k = ctx.num_classes();
    if k > 24 {
        return Err(Error::TooLarge(format!("2^{k} class subsets")));
    }
    let mut in_set = vec![false; k];
    let mut size = 0u128;
    let mut boundary = 0i128;
    visit(0, 0, 0);
    let total = 1u64 << k;
    let mut prev_gray = 0u64;
    for g in 1..total {
        let gray = g ^ (g >> 1);
        let flipped = (gray ^ prev_gray).trailing_zeros() as usize;
        prev_gray = gray;
        let adding = !in_set[flipped];
        let mut delta = 0i128;
        for m in 0..k {
            if m == flipped {
                continue;
            }
            let e = matrix.entry(flipped, m) as i128;
            if in_set[m] {
                delta -= e;
            } else {
                delta += e;
            }
        }
        if adding {
            in_set[flipped] = true;
            size += ctx.sizes[flipped];
            boundary += delta;
        } else {
            in_set[flipped] = false;
            size -= ctx.sizes[flipped];
            boundary -= delta;
        }
        debug_assert!(boundary >= 0);
        visit(gray, size, boundary as u128);
    }
    Ok(())
}

/// An explicit (not necessarily conjugation-invariant) set of permutations.
#[derive(Clone, Debug, Default)]
pub struct ExplicitSet {
    n: usize,
    perms: HashSet<Vec<usize>>,
}

impl ExplicitSet {
    pub fn new(n: usize) -> Self {
        ExplicitSet {
            n,
            perms: HashSet::new(),
        }
    }

    pub fn insert(&mut self, p: PermWord) {
        debug_assert_eq!(p.n(), self.n);
        self.perms.insert(p.images().to_vec());
    }

    pub fn contains(&self, p: &PermWord) -> bool {
        self.perms.contains(p.images())
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = PermWord> + '_ {
        self.perms
            .iter()
            .map(|v| PermWord::new(v.clone()).expect("stored words are valid"))
    }

    /// Sorted lex ranks of the members (JSON-friendly form).
    pub fn ranks(&self) -> Result<Vec<u64>> {
        let mut out = Vec::with_capacity(self.perms.len());
        for p in self.iter() {
            out.push(perm_rank_lex(&p)?);
        }
        out.sort_unstable();
        Ok(out)
    }
}

/// Brute-force edge-boundary of an explicit set: count pairs
/// `(sigma in S, tau)` with `sigma*tau` outside. Each boundary edge has
/// exactly one endpoint inside, so the pair count is `|dS|` itself.
pub fn boundary_bruteforce(set: &ExplicitSet) -> Result<u64> {
    let n = set.n();
    if n > MAX_BRUTE_N {
        return Err(Error::TooLarge(format!("brute-force boundary with n={n}")));
    }
    let pairs = transposition_pairs(n);
    let mut count = 0u64;
    for sigma in set.iter() {
        for &(a, b) in &pairs {
            if !set.contains(&sigma.right_mul_transposition(a, b)) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Materializes a union of conjugacy classes as an explicit set (n <= 8).
pub fn explicit_from_classes(set: &ConjClassSet, ctx: &ClassContext) -> Result<ExplicitSet> {
    let n = ctx.n();
    if n > MAX_BRUTE_N {
        return Err(Error::TooLarge(format!("explicit class union with n={n}")));
    }
    let mut out = ExplicitSet::new(n);
    for sigma in all_perms(n) {
        let idx = ctx.table.index_of(&sigma.cycle_type()).expect("type in table");
        if set.contains(idx) {
            out.insert(sigma);
        }
    }
    Ok(out)
}

/// `A_s`: permutations with at least `s` fixed points, as a class union.
pub fn make_a_s(s: usize, ctx: &ClassContext) -> ConjClassSet {
    let mut set = ConjClassSet::empty(&ctx.table);
    for (i, lambda) in ctx.table.iter().enumerate() {
        if lambda.multiplicity(1) >= s {
            set.insert(i);
        }
    }
    set
}

/// Permutations fixing at least one of the `n/k` consecutive blocks
/// `{(i-1)k+1, ..., ik}` pointwise. Requires `k | n` and `n <= 8`.
pub fn make_block_fixing(n: usize, k: usize) -> Result<ExplicitSet> {
    if n > MAX_BRUTE_N {
        return Err(Error::TooLarge(format!("block-fixing set with n={n}")));
    }
    if k == 0 || n % k != 0 {
        return Err(Error::NotDivisor(k, n));
    }
    let mut out = ExplicitSet::new(n);
    for sigma in all_perms(n) {
        let fixes_block = (0..n / k).any(|i| {
            ((i * k + 1)..=(i * k + k)).all(|x| sigma.image(x) == x)
        });
        if fixes_block {
            out.insert(sigma);
        }
    }
    Ok(out)
}

/// Edge-boundary of the first `k` permutations in lexicographic order.
/// Membership of a neighbor is a rank comparison.
pub fn lex_segment_boundary(n: usize, k: u64) -> Result<u64> {
    if n > MAX_BRUTE_N {
        return Err(Error::TooLarge(format!("lex segment boundary with n={n}")));
    }
    let n_fact: u64 = (1..=n as u64).product();
    if k > n_fact {
        return Err(Error::RankOutOfRange { n, rank: k });
    }
    let pairs = transposition_pairs(n);
    let mut count = 0u64;
    for r in 0..k {
        let sigma = perm_unrank_lex(n, r)?;
        for &(a, b) in &pairs {
            let neighbor = sigma.right_mul_transposition(a, b);
            if perm_rank_lex(&neighbor)? >= k {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Boundaries of every lexicographic initial segment at once:
/// `profile[k] = |d(first k perms)|`, built by adding one permutation at a
/// time and adjusting for the neighbors already inside.
pub fn lex_segment_profile(n: usize) -> Result<Vec<u64>> {
    if n > MAX_BRUTE_N {
        return Err(Error::TooLarge(format!("lex segment profile with n={n}")));
    }
    let n_fact: u64 = (1..=n as u64).product();
    let pairs = transposition_pairs(n);
    let mut profile = Vec::with_capacity(n_fact as usize + 1);
    profile.push(0u64);
    let mut boundary = 0i64;
    for r in 0..n_fact {
        let sigma = perm_unrank_lex(n, r)?;
        for &(a, b) in &pairs {
            let neighbor_rank = perm_rank_lex(&sigma.right_mul_transposition(a, b))?;
            if neighbor_rank < r {
                boundary -= 1;
            } else {
                boundary += 1;
            }
        }
        profile.push(boundary as u64);
    }
    Ok(profile)
}

/// The lex-segment upper bound `(t + 3/2)(n-1)k`, where `t` is read off the
/// factorial bracket `(n-t-1)! < k <= (n-t)!` (clamped to `t = n-1` for the
/// smallest segments).
pub fn appendix_bound(n: usize, k: u64) -> Result<BigRational> {
    if k == 0 {
        return Err(Error::BadParameter("appendix bound needs k >= 1".into()));
    }
    let fact = |m: usize| -> BigUint { factorial(m) };
    if BigUint::from(k) > fact(n) {
        return Err(Error::RankOutOfRange { n, rank: k });
    }
    let mut t = n - 1;
    for cand in (0..=n - 1).rev() {
        if BigUint::from(k) <= fact(n - cand) {
            t = cand;
            break;
        }
    }
    // (t + 3/2)(n-1)k = (2t+3)(n-1)k / 2
    let num = BigInt::from((2 * t + 3) as u64) * BigInt::from((n - 1) as u64) * BigInt::from(k);
    Ok(BigRational::new(num, BigInt::from(2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::character_table;
    use crate::counting::derangement_count;
    use crate::spectral::spectral_boundary;

    #[test]
    fn interaction_matrix_n3() {
        let ctx = ClassContext::new(3).unwrap();
        let m = interaction_matrix(&ctx).unwrap();
        // classes of S_3 in order: (3), (2,1), (1,1,1)
        let id = ctx.table().index_of(&crate::Partition::new(vec![1, 1, 1]).unwrap()).unwrap();
        let tr = ctx.table().index_of(&crate::Partition::new(vec![2, 1]).unwrap()).unwrap();
        assert_eq!(m.entry(id, tr), 3);
        assert_eq!(m.entry(tr, id), 3);
    }

    #[test]
    fn interaction_matrix_diagonal_is_zero() {
        // a transposition flips parity, so no T_n edge stays inside a class
        for n in 2..=10 {
            let ctx = ClassContext::new(n).unwrap();
            let m = interaction_matrix(&ctx).unwrap();
            for l in 0..m.num_classes() {
                assert_eq!(m.entry(l, l), 0);
            }
        }
    }

    #[test]
    fn interaction_matrix_matches_exhaustive_enumeration() {
        for n in 2..=7 {
            let ctx = ClassContext::new(n).unwrap();
            let m = interaction_matrix(&ctx).unwrap();
            let k = ctx.num_classes();
            let mut brute = vec![vec![0u128; k]; k];
            for sigma in all_perms(n) {
                let l = ctx.table().index_of(&sigma.cycle_type()).unwrap();
                for (a, b) in transposition_pairs(n) {
                    let t = sigma.right_mul_transposition(a, b).cycle_type();
                    brute[l][ctx.table().index_of(&t).unwrap()] += 1;
                }
            }
            // brute counts between-class edges once per side, within twice
            for l in 0..k {
                for mm in 0..k {
                    let expect = if l == mm { brute[l][mm] / 2 } else { brute[l][mm] };
                    assert_eq!(m.entry(l, mm), expect, "n={n} ({l},{mm})");
                }
            }
        }
    }

    #[test]
    fn boundary_engines_trivial_cases() {
        let ctx = ClassContext::new(4).unwrap();
        let m = interaction_matrix(&ctx).unwrap();
        let empty = ConjClassSet::empty(ctx.table());
        assert_eq!(boundary_via_classes(&empty, &m), 0);
        let id_class = ctx.num_classes() - 1;
        let singleton = ConjClassSet::from_indices(ctx.table(), &[id_class]).unwrap();
        assert_eq!(boundary_via_classes(&singleton, &m), 6);

        let mut s = ExplicitSet::new(4);
        s.insert(PermWord::identity(4));
        assert_eq!(boundary_bruteforce(&s).unwrap(), 6);
    }

    #[test]
    fn three_way_agreement_exhaustive_n5() {
        let n = 5;
        let ctx = ClassContext::new(n).unwrap();
        let m = interaction_matrix(&ctx).unwrap();
        let ct = character_table(n).unwrap();
        for mask in 0u64..(1 << ctx.num_classes()) {
            let set = ConjClassSet::from_mask(ctx.table(), mask);
            let via_matrix = boundary_via_classes(&set, &m);
            let via_spectrum = spectral_boundary(&set, &ct).unwrap();
            let via_brute =
                boundary_bruteforce(&explicit_from_classes(&set, &ctx).unwrap()).unwrap();
            assert_eq!(BigUint::from(via_matrix), via_spectrum, "mask={mask}");
            assert_eq!(via_matrix, via_brute as u128, "mask={mask}");
        }
    }

    #[test]
    fn a_s_construction() {
        let ctx = ClassContext::new(4).unwrap();
        let a_n = make_a_s(4, &ctx);
        assert_eq!(a_n.size(&ctx), 1);
        // |A_1| = n! - d_n
        let a_1 = make_a_s(1, &ctx);
        let d4: u128 = derangement_count(4).to_u128().unwrap();
        assert_eq!(a_1.size(&ctx), 24 - d4);
        assert_eq!(a_1.size(&ctx), 15);
    }

    #[test]
    fn a_s_size_sandwich() {
        // n!/(3 s!) <= |A_s| <= n!/s! for s <= n-2
        for n in 2..=10usize {
            let ctx = ClassContext::new(n).unwrap();
            for s in 1..=(n - 2).max(1) {
                if s > n - 2 {
                    continue;
                }
                let size = BigUint::from(make_a_s(s, &ctx).size(&ctx));
                let cap = factorial(n) / factorial(s);
                assert!(&size * 3u32 >= cap, "n={n} s={s} lower");
                assert!(size <= cap, "n={n} s={s} upper");
            }
        }
    }

    #[test]
    fn block_fixing_extremes_and_sandwich() {
        // k=n gives {id}; k=1 gives A_1
        for n in 2..=6usize {
            let whole = make_block_fixing(n, n).unwrap();
            assert_eq!(whole.len(), 1);
            let ctx = ClassContext::new(n).unwrap();
            let a1_explicit = explicit_from_classes(&make_a_s(1, &ctx), &ctx).unwrap();
            let k1 = make_block_fixing(n, 1).unwrap();
            assert_eq!(k1.len(), a1_explicit.len());
        }
        // (n/(2k))(n-k)! < |A| <= (n/k)(n-k)! for 1 < k <= n/2
        for n in 2..=8usize {
            for k in 2..=(n / 2) {
                if n % k != 0 {
                    continue;
                }
                let set = make_block_fixing(n, k).unwrap();
                let size = set.len() as u128;
                let f: u128 = factorial(n - k).to_u128().unwrap();
                assert!(2 * k as u128 * size > n as u128 * f, "n={n} k={k} lower");
                assert!(k as u128 * size <= n as u128 * f, "n={n} k={k} upper");
            }
        }
        assert!(make_block_fixing(6, 4).is_err());
    }

    #[test]
    fn block_fixing_boundary_bound() {
        // |dA| <= k(n-1)|A| for every k | n
        for n in 2..=7usize {
            for k in 1..=n {
                if n % k != 0 {
                    continue;
                }
                let set = make_block_fixing(n, k).unwrap();
                let b = boundary_bruteforce(&set).unwrap();
                assert!(
                    b as u128 <= (k * (n - 1)) as u128 * set.len() as u128,
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn a_s_boundary_bound() {
        // |dA_s| <= (s+1)(n-1)|A_s|
        for n in 2..=7usize {
            let ctx = ClassContext::new(n).unwrap();
            let m = interaction_matrix(&ctx).unwrap();
            for s in 1..=n {
                let a_s = make_a_s(s, &ctx);
                let b = boundary_via_classes(&a_s, &m);
                assert!(b <= ((s + 1) * (n - 1)) as u128 * a_s.size(&ctx), "n={n} s={s}");
            }
        }
    }

    #[test]
    fn a_1_cross_method() {
        let n = 6;
        let ctx = ClassContext::new(n).unwrap();
        let m = interaction_matrix(&ctx).unwrap();
        let a1 = make_a_s(1, &ctx);
        let explicit = explicit_from_classes(&a1, &ctx).unwrap();
        assert_eq!(
            boundary_via_classes(&a1, &m),
            boundary_bruteforce(&explicit).unwrap() as u128
        );
    }

    #[test]
    fn lex_segment_stabilizer_boundary() {
        // segment of size (n-t)! is the pointwise stabilizer of [t]; each
        // element has C(n,2) - C(n-t,2) neighbours outside, so the boundary
        // is exactly (n-t)! (C(n,2) - C(n-t,2)) = t(2n-t-1)/2 (n-t)!, which
        // matches the often-quoted t(n-1)(n-t)! at t=1 and is below it for
        // t >= 2
        for n in 2..=6usize {
            for t in 1..=n {
                let k: u64 = (1..=(n - t) as u64).product();
                let exits = (n * (n - 1) / 2 - (n - t) * (n - t).saturating_sub(1) / 2) as u64;
                let expect = exits * k;
                assert_eq!(lex_segment_boundary(n, k).unwrap(), expect, "n={n} t={t}");
                assert!(expect <= (t * (n - 1)) as u64 * k, "n={n} t={t}");
            }
        }
    }

    #[test]
    fn lex_segment_diaconis_equality() {
        // k = c(n-1)! achieves equality in the spectral-gap bound
        let n = 4;
        let c = 2u64;
        let k = c * 6;
        assert_eq!(lex_segment_boundary(n, k).unwrap(), 24);
        assert_eq!(lex_segment_boundary(n, 0).unwrap(), 0);
    }

    #[test]
    fn profile_matches_direct() {
        for n in 2..=5usize {
            let profile = lex_segment_profile(n).unwrap();
            let n_fact: u64 = (1..=n as u64).product();
            for k in 0..=n_fact {
                assert_eq!(profile[k as usize], lex_segment_boundary(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn appendix_bound_examples() {
        // n=4, k=6: t=1, bound (5/2)*3*6 = 45
        let b = appendix_bound(4, 6).unwrap();
        assert_eq!(b, BigRational::from(BigInt::from(45)));
        assert!(lex_segment_boundary(4, 6).unwrap() <= 45);

        // k=1: t=n-1, bound (n+1/2)(n-1) >= C(n,2)
        for n in 2..=8usize {
            let b = appendix_bound(n, 1).unwrap();
            let expect = BigRational::new(
                BigInt::from((2 * n + 1) as u64) * BigInt::from((n - 1) as u64),
                BigInt::from(2),
            );
            assert_eq!(b, expect);
            let degree = BigRational::from(BigInt::from((n * (n - 1) / 2) as u64));
            assert!(b >= degree);
        }
        assert!(appendix_bound(4, 0).is_err());
        assert!(appendix_bound(4, 25).is_err());
    }

    #[test]
    fn appendix_bound_holds_small() {
        for n in 2..=6usize {
            let profile = lex_segment_profile(n).unwrap();
            let n_fact: u64 = (1..=n as u64).product();
            for k in 1..=n_fact {
                let bound = appendix_bound(n, k).unwrap();
                let actual = BigRational::from(BigInt::from(profile[k as usize]));
                assert!(actual <= bound, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn nested_segments() {
        let n = 5;
        let n_fact = 120u64;
        for k in 0..n_fact {
            let p1 = perm_unrank_lex(n, k).unwrap();
            assert_eq!(perm_rank_lex(&p1).unwrap(), k);
        }
        // rank-based membership: segment k is a prefix of segment k+1
        for k in 0..n_fact {
            let newcomer = perm_unrank_lex(n, k).unwrap();
            assert!(perm_rank_lex(&newcomer).unwrap() < k + 1);
        }
    }

    #[test]
    fn class_set_parsing_and_strings() {
        let table = partitions_of(4).unwrap();
        let set = ConjClassSet::parse(&table, "2+1+1, 3+1").unwrap();
        assert_eq!(set.indices().count(), 2);
        assert_eq!(set.class_strings(&table), vec!["3+1", "2+1+1"]);
        assert!(ConjClassSet::parse(&table, "5").is_err());
        assert!(ConjClassSet::parse(&table, "2+x").is_err());
    }

    #[test]
    fn sizes_and_complement() {
        let ctx = ClassContext::new(5).unwrap();
        let set = make_a_s(2, &ctx);
        let total: u128 = factorial(5).to_u128().unwrap();
        assert_eq!(set.size(&ctx) + set.complement().size(&ctx), total);
        assert_eq!(
            set.size_big(ctx.table()).unwrap(),
            BigUint::from(set.size(&ctx))
        );
        assert!(ConjClassSet::empty(ctx.table()).is_empty());
        assert!(ConjClassSet::full(ctx.table()).complement().is_empty());
    }
}
