//! Integer partitions, the canonical partition table, and the dominance order.
//!
//! A partition doubles as a cycle type: the partition listing the cycle
//! lengths of a permutation indexes its conjugacy class. All class-indexed
//! vectors in this crate use the order of [`PartitionTable`]: descending
//! lexicographic, so `(n)` sits at position 0 and `(1,...,1)` last.

use std::collections::HashMap;
use std::fmt;

use crate::{Error, Result};

/// Largest `n` for which partition enumeration is supported.
pub const MAX_PARTITION_N: usize = 40;

/// A partition of `n`: a non-increasing sequence of positive integers.
///
/// The empty sequence is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not non-increasing: {parts:?}"
            )));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// Builds a partition from arbitrary positive entries by sorting them.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// `i`-th part, 1-based, zero-padded beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// Number of parts equal to `len` (cycle-count accessor for cycle types).
    pub fn multiplicity(&self, len: usize) -> usize {
        self.parts.iter().filter(|&&p| p == len).count()
    }

    /// Multiplicity vector indexed by part size, `mult[i]` = #parts equal to
    /// `i`, for `i` in `0..=n` (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0usize; self.n + 1];
        for &p in &self.parts {
            mult[p] += 1;
        }
        mult
    }

    /// Distinct part sizes with their multiplicities, largest first.
    pub fn distinct_parts(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((len, count)) if *len == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    /// Cycle-type string form: parts joined by `+`, e.g. `"2+1+1"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join("+"))
    }
}

/// Parses a cycle-type string (`"3+1"`, whitespace ignored) into a partition.
pub fn parse_cycle_type(s: &str) -> Result<Partition> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty cycle-type string".into()));
    }
    let mut parts = Vec::new();
    for tok in cleaned.split('+') {
        let v: usize = tok
            .parse()
            .map_err(|_| Error::Parse(format!("bad cycle-type token {tok:?} in {s:?}")))?;
        if v == 0 {
            return Err(Error::Parse(format!("zero part in cycle type {s:?}")));
        }
        parts.push(v);
    }
    Partition::from_unsorted(parts)
}

/// Dominance order: `dominates(beta, alpha)` is true iff every prefix sum of
/// `beta` is >= the corresponding prefix sum of `alpha` (zero-padded), i.e.
/// `beta` is greater than or equal to `alpha` in the dominance ordering.
///
/// Reflexive by convention. Errors if the two are partitions of different
/// integers.
pub fn dominates(beta: &Partition, alpha: &Partition) -> Result<bool> {
    if beta.n() != alpha.n() {
        return Err(Error::MismatchedN(beta.n(), alpha.n()));
    }
    let len = beta.num_parts().max(alpha.num_parts());
    let mut sum_b = 0usize;
    let mut sum_a = 0usize;
    for i in 1..=len {
        sum_b += beta.part(i);
        sum_a += alpha.part(i);
        if sum_b < sum_a {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions of a fixed `n` in descending lexicographic order, with an
/// index map for class-vector positions.
#[derive(Clone, Debug)]
pub struct PartitionTable {
    n: usize,
    list: Vec<Partition>,
    index: HashMap<Vec<usize>, usize>,
}

impl PartitionTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `p(n)`, the number of partitions of `n`.
    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn get(&self, i: usize) -> &Partition {
        &self.list[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Partition> {
        self.list.iter()
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.list
    }

    /// Position of a partition in the canonical order.
    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p.parts()).copied()
    }
}

/// Enumerates all partitions of `n` (0 <= n <= 40) in descending
/// lexicographic order: `(n)` first, `(1,...,1)` last.
pub fn partitions_of(n: usize) -> Result<PartitionTable> {
    if n > MAX_PARTITION_N {
        return Err(Error::NOutOfRange(n, MAX_PARTITION_N));
    }
    let mut list = Vec::new();
    let mut prefix = Vec::new();
    gen_desc_lex(n, n, &mut prefix, &mut list);
    let index = list
        .iter()
        .enumerate()
        .map(|(i, p)| (p.parts().to_vec(), i))
        .collect();
    Ok(PartitionTable { n, list, index })
}

fn gen_desc_lex(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        let parts = prefix.clone();
        let n = parts.iter().sum();
        out.push(Partition { parts, n });
        return;
    }
    let top = remaining.min(max_part);
    for part in (1..=top).rev() {
        prefix.push(part);
        gen_desc_lex(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partitions_of_zero() {
        let t = partitions_of(0).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t.get(0).parts().is_empty());
    }

    #[test]
    fn partitions_of_four_in_order() {
        let t = partitions_of(4).unwrap();
        let got: Vec<&[usize]> = t.iter().map(|p| p.parts()).collect();
        let want: Vec<&[usize]> = vec![&[4], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]];
        assert_eq!(got, want);
    }

    #[test]
    fn partition_counts() {
        // brute-force oracle: count non-increasing compositions directly
        fn count(remaining: usize, max: usize) -> usize {
            if remaining == 0 {
                return 1;
            }
            (1..=remaining.min(max)).map(|p| count(remaining - p, p)).sum()
        }
        for n in 0..=12 {
            let t = partitions_of(n).unwrap();
            assert_eq!(t.len(), count(n, n), "p({n})");
        }
        assert_eq!(partitions_of(8).unwrap().len(), 22);
    }

    #[test]
    fn index_map_consistent() {
        let t = partitions_of(9).unwrap();
        for (i, part) in t.iter().enumerate() {
            assert_eq!(t.index_of(part), Some(i));
        }
        assert_eq!(t.index_of(&p(&[9])), Some(0));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(partitions_of(41).is_err());
    }

    #[test]
    fn dominance_examples() {
        for n in 3..=10 {
            let top = p(&[n - 1, 1]);
            for alpha in partitions_of(n).unwrap().iter() {
                if alpha.parts() != [n] {
                    assert!(dominates(&top, alpha).unwrap());
                }
            }
        }
        // (4,1,1) and (3,3) are incomparable: prefix sums 4,5,6 vs 3,6,6
        assert!(!dominates(&p(&[3, 3]), &p(&[4, 1, 1])).unwrap());
        assert!(!dominates(&p(&[4, 1, 1]), &p(&[3, 3])).unwrap());
        assert!(dominates(&p(&[2, 2]), &p(&[2, 2])).unwrap());
        assert!(dominates(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert!(!dominates(&p(&[2, 2]), &p(&[3, 1])).unwrap());
    }

    #[test]
    fn dominance_mismatched_n() {
        assert!(dominates(&p(&[3]), &p(&[2, 2])).is_err());
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn cycle_type_parsing() {
        assert_eq!(parse_cycle_type("2+1+1").unwrap().parts(), &[2, 1, 1]);
        assert_eq!(parse_cycle_type(" 1 + 3 ").unwrap().parts(), &[3, 1]);
        assert!(parse_cycle_type("").is_err());
        assert!(parse_cycle_type("2+x").is_err());
        assert!(parse_cycle_type("2+0").is_err());
        let p = parse_cycle_type("3+2+2").unwrap();
        assert_eq!(parse_cycle_type(&p.to_string()).unwrap(), p);
    }

    // dominance is a partial order on partitions of n
    proptest! {
        #[test]
        fn dominance_partial_order(n in 1usize..=12) {
            let t = partitions_of(n).unwrap();
            for a in t.iter() {
                prop_assert!(dominates(a, a).unwrap());
                for b in t.iter() {
                    if dominates(a, b).unwrap() && dominates(b, a).unwrap() {
                        prop_assert_eq!(a, b);
                    }
                    for c in t.iter() {
                        if dominates(a, b).unwrap() && dominates(b, c).unwrap() {
                            prop_assert!(dominates(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }
}
