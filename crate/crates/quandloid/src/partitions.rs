//! Counting tuples over a `k`-element set up to permutations of the set.
//!
//! Two tuples lie in the same orbit under the full symmetric group exactly
//! when they have equal entries in the same positions, so orbits correspond
//! to equality patterns (set partitions of the positions, with at most `k`
//! blocks). `partition_count(m, n, k)` counts the patterns of `m + n`
//! positions whose first `m` entries are fixed, pairwise-distinct values:
//!
//! ```text
//! d(m, 0, k) = 1
//! d(m, n, k) = m * d(m, n-1, k) + d(m+1, n-1, k)   if m < k
//! d(m, n, k) = m * d(m, n-1, k)                    if m = k
//! ```
//!
//! For unbounded `k` the `m = k` branch is unreachable and `d(0, n, ·)` is
//! the Bell number `B(n)`. Values grow accordingly, so everything is exact
//! big-integer arithmetic.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Size of the value set: a finite count or unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cardinality {
    Finite(u64),
    Unbounded,
}

impl Cardinality {
    fn admits_new_value(&self, m: u64) -> bool {
        match self {
            Cardinality::Finite(k) => m < *k,
            Cardinality::Unbounded => true,
        }
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(k) => write!(f, "{k}"),
            Cardinality::Unbounded => write!(f, "unbounded"),
        }
    }
}

impl FromStr for Cardinality {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "unbounded" | "inf" | "∞" => Ok(Cardinality::Unbounded),
            other => other
                .parse::<u64>()
                .map(Cardinality::Finite)
                .map_err(|_| format!("expected a nonnegative integer or 'unbounded', got {other:?}")),
        }
    }
}

/// The recursion above, memoized per call. Errors when `m` exceeds a
/// finite `k` (no tuple can hold more than `k` distinct values).
pub fn partition_count(m: u64, n: u64, k: Cardinality) -> Result<BigUint> {
    if let Cardinality::Finite(kv) = k {
        if m > kv {
            return Err(Error::FixedEntriesExceedDomain { m, k: kv });
        }
    }
    let mut memo: HashMap<(u64, u64), BigUint> = HashMap::new();
    Ok(count(m, n, k, &mut memo))
}

fn count(m: u64, n: u64, k: Cardinality, memo: &mut HashMap<(u64, u64), BigUint>) -> BigUint {
    if n == 0 {
        return BigUint::from(1u32);
    }
    if let Some(v) = memo.get(&(m, n)) {
        return v.clone();
    }
    let mut value = BigUint::from(m) * count(m, n - 1, k, memo);
    if k.admits_new_value(m) {
        value += count(m + 1, n - 1, k, memo);
    }
    memo.insert((m, n), value.clone());
    value
}

/// The equality pattern of a tuple: positions partitioned into blocks of
/// equal values. Blocks are sorted and ordered by their smallest position,
/// so two tuples have equal patterns iff `x_i = x_j ⇔ y_i = y_j` for all
/// `i, j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityPattern {
    blocks: Vec<Vec<usize>>,
}

impl EqualityPattern {
    pub fn of<T: PartialEq>(tuple: &[T]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of: Vec<Option<usize>> = vec![None; tuple.len()];
        for i in 0..tuple.len() {
            if block_of[i].is_some() {
                continue;
            }
            let id = blocks.len();
            let mut block = vec![i];
            block_of[i] = Some(id);
            for j in i + 1..tuple.len() {
                if block_of[j].is_none() && tuple[j] == tuple[i] {
                    block_of[j] = Some(id);
                    block.push(j);
                }
            }
            blocks.push(block);
        }
        EqualityPattern { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

/// Whether two tuples lie in the same orbit under the full symmetric group
/// of their value set.
pub fn sk_equivalent<T: PartialEq>(a: &[T], b: &[T]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    Ok(EqualityPattern::of(a) == EqualityPattern::of(b))
}
