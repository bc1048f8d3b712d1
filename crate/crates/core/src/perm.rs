//! Permutations in sequence notation, lexicographic rank/unrank, and cycle
//! types.
//!
//! A permutation is stored as its image sequence `(s(1),...,s(n))` with
//! 1-based values. The lexicographic order on permutations compares these
//! sequences at the first index of disagreement; `perm_rank_lex` /
//! `perm_unrank_lex` realize it through the factorial number system, with
//! rank 0 at the identity.

use crate::partition::Partition;
use crate::{Error, Result};

/// Largest `n` for which ranks fit in `u64` (20! < 2^64).
pub const MAX_RANK_N: usize = 20;

/// A permutation of `[n]` as a 1-based image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PermWord {
    images: Vec<usize>,
}

impl PermWord {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[v] = true;
        }
        Ok(PermWord { images })
    }

    pub fn identity(n: usize) -> Self {
        PermWord {
            images: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of `i` (1-based).
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidPermutation(format!("transposition ({a} {b}) in S_{n}")));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Ok(PermWord { images })
    }

    /// Composition `self * other`, acting as `(self*other)(x) = self(other(x))`.
    pub fn compose(&self, other: &PermWord) -> PermWord {
        debug_assert_eq!(self.n(), other.n());
        let images = (1..=self.n()).map(|x| self.image(other.image(x))).collect();
        PermWord { images }
    }

    /// Right-multiplication by the transposition `(a b)`: the `T_n`-neighbor
    /// obtained as `self * (a b)`, i.e. the image sequence with positions
    /// `a` and `b` swapped.
    pub fn right_mul_transposition(&self, a: usize, b: usize) -> PermWord {
        let mut images = self.images.clone();
        images.swap(a - 1, b - 1);
        PermWord { images }
    }

    /// Cycle type as a partition of `n`.
    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut lens = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image(x);
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens).expect("cycle lengths form a partition")
    }

    /// Number of fixed points.
    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &v)| v == i + 1)
            .count()
    }
}

/// A canonical representative of the conjugacy class with cycle type `lambda`:
/// consecutive blocks, each cyclically shifted.
pub fn class_representative(lambda: &Partition) -> PermWord {
    let n = lambda.n();
    let mut images = vec![0usize; n];
    let mut start = 1;
    for &len in lambda.parts() {
        for offset in 0..len {
            let from = start + offset;
            let to = start + (offset + 1) % len;
            images[from - 1] = to;
        }
        start += len;
    }
    debug_assert_eq!(start, n + 1);
    PermWord { images }
}

/// All unordered pairs `(a, b)` with `1 <= a < b <= n`, the `C(n,2)`
/// transpositions generating `T_n`.
pub fn transposition_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for a in 1..=n {
        for b in (a + 1)..=n {
            out.push((a, b));
        }
    }
    out
}

fn factorial_u64(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Lexicographic rank of a permutation, in `[0, n!)`.
pub fn perm_rank_lex(sigma: &PermWord) -> Result<u64> {
    let n = sigma.n();
    if n > MAX_RANK_N {
        return Err(Error::NOutOfRange(n, MAX_RANK_N));
    }
    let mut rank = 0u64;
    let mut used = vec![false; n + 1];
    for i in 1..=n {
        let v = sigma.image(i);
        let smaller_unused = (1..v).filter(|&u| !used[u]).count() as u64;
        rank += smaller_unused * factorial_u64(n - i);
        used[v] = true;
    }
    Ok(rank)
}

/// Inverse of [`perm_rank_lex`]: the `r`-th permutation of `[n]` in
/// lexicographic order (rank 0 is the identity).
pub fn perm_unrank_lex(n: usize, r: u64) -> Result<PermWord> {
    if n > MAX_RANK_N {
        return Err(Error::NOutOfRange(n, MAX_RANK_N));
    }
    if r >= factorial_u64(n) {
        return Err(Error::RankOutOfRange { n, rank: r });
    }
    let mut avail: Vec<usize> = (1..=n).collect();
    let mut rem = r;
    let mut images = Vec::with_capacity(n);
    for i in 1..=n {
        let f = factorial_u64(n - i);
        let idx = (rem / f) as usize;
        rem %= f;
        images.push(avail.remove(idx));
    }
    Ok(PermWord { images })
}

/// All permutations of `[n]` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<PermWord> {
    let total = factorial_u64(n);
    (0..total)
        .map(|r| perm_unrank_lex(n, r).expect("rank in range"))
        .collect()
}
