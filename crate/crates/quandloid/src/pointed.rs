//! Pointed quandles and their classification over a fixed underlying
//! quandle: orbit classes of basepoint tuples under the automorphism
//! group, the class counts `d_n`, and the homogeneity predicates built
//! on them.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{partition_count, Cardinality};
use crate::perm::Permutation;
use crate::quandle::{find_isomorphisms, FiniteQuandle, DEFAULT_GROUP_CAP};

/// Default cap on the basepoint count for explicit orbit enumeration.
pub const DEFAULT_ARITY_CAP: usize = 4;

// explicit orbit enumeration walks all k^n tuples; keep that bounded even
// when callers raise the arity cap
const MAX_TUPLE_SPACE: usize = 1 << 24;

/// A quandle together with an ordered tuple of basepoints (repetitions
/// allowed). With no basepoints this is just a quandle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPointed", into = "RawPointed")]
pub struct PointedQuandle {
    quandle: FiniteQuandle,
    basepoints: Vec<usize>,
}

/// Wire form: the quandle JSON plus `"basepoints": [b1, ...]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawPointed {
    #[serde(flatten)]
    quandle: FiniteQuandle,
    basepoints: Vec<usize>,
}

impl TryFrom<RawPointed> for PointedQuandle {
    type Error = Error;
    fn try_from(raw: RawPointed) -> Result<Self> {
        PointedQuandle::new(raw.quandle, raw.basepoints)
    }
}

impl From<PointedQuandle> for RawPointed {
    fn from(p: PointedQuandle) -> RawPointed {
        RawPointed { quandle: p.quandle, basepoints: p.basepoints }
    }
}

impl PointedQuandle {
    pub fn new(quandle: FiniteQuandle, basepoints: Vec<usize>) -> Result<Self> {
        for &b in &basepoints {
            quandle.check_element(b)?;
        }
        Ok(PointedQuandle { quandle, basepoints })
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        &self.quandle
    }

    pub fn basepoints(&self) -> &[usize] {
        &self.basepoints
    }

    pub fn arity(&self) -> usize {
        self.basepoints.len()
    }
}

/// Searches for an isomorphism of the underlying quandles carrying the
/// basepoints of `a` onto those of `b`, in order. Returns the
/// lexicographically least witness, or `None` when the pointed quandles
/// are not isomorphic.
pub fn pointed_isomorphic(a: &PointedQuandle, b: &PointedQuandle) -> Result<Option<Permutation>> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch { expected: a.arity(), got: b.arity() });
    }
    if a.quandle.size() != b.quandle.size() {
        return Ok(None);
    }
    let pins: Vec<(usize, usize)> =
        a.basepoints.iter().copied().zip(b.basepoints.iter().copied()).collect();
    let mut witness = None;
    find_isomorphisms(&a.quandle, &b.quandle, &pins, &mut |p| {
        witness = Some(p);
        false
    });
    Ok(witness)
}

/// Orbit representatives of `X^n` under the diagonal action of `Aut(X)`:
/// the lexicographically least tuple of each orbit, in ascending order.
/// Their number is the count of isomorphism classes of `n`-pointed
/// quandles over `X`.
pub fn orbit_classes(q: &FiniteQuandle, n: usize) -> Result<Vec<Vec<usize>>> {
    orbit_classes_capped(q, n, DEFAULT_ARITY_CAP, DEFAULT_GROUP_CAP)
}

pub fn orbit_classes_capped(
    q: &FiniteQuandle,
    n: usize,
    arity_cap: usize,
    group_cap: usize,
) -> Result<Vec<Vec<usize>>> {
    if n > arity_cap {
        return Err(Error::SizeCapExceeded { what: "basepoint arity", size: n, cap: arity_cap });
    }
    let k = q.size();
    let space = k.checked_pow(n as u32).filter(|&s| s <= MAX_TUPLE_SPACE).ok_or(
        Error::SizeCapExceeded { what: "tuple space", size: k, cap: MAX_TUPLE_SPACE },
    )?;
    let aut = q.automorphism_group_capped(group_cap)?;

    let index_of = |tuple: &[usize]| tuple.iter().fold(0usize, |acc, &t| acc * k + t);
    let mut visited = vec![false; space];
    let mut reps = Vec::new();
    let mut tuple = vec![0usize; n];
    loop {
        let idx = index_of(&tuple);
        if !visited[idx] {
            // first unvisited tuple in lex order is its orbit's least element
            reps.push(tuple.clone());
            for g in aut.elements() {
                let image: Vec<usize> = tuple.iter().map(|&t| g.apply(t)).collect();
                visited[index_of(&image)] = true;
            }
        }
        // lexicographic odometer
        let Some(pos) = (0..n).rev().find(|&i| tuple[i] + 1 < k) else {
            break;
        };
        tuple[pos] += 1;
        tuple[pos + 1..].fill(0);
    }
    Ok(reps)
}

/// Number of orbits of `X^n` under `Aut(X)`, by the orbit-counting lemma:
/// the average over the group of `|Fix(g)|^n`. Independent of the explicit
/// enumeration in [`orbit_classes`] and free of any arity cap.
pub fn class_count_burnside(q: &FiniteQuandle, n: usize) -> Result<BigUint> {
    class_count_burnside_capped(q, n, DEFAULT_GROUP_CAP)
}

pub fn class_count_burnside_capped(q: &FiniteQuandle, n: usize, group_cap: usize) -> Result<BigUint> {
    let aut = q.automorphism_group_capped(group_cap)?;
    let total: BigUint = aut
        .elements()
        .iter()
        .map(|g| BigUint::from(g.fixed_point_count()).pow(n as u32))
        .sum();
    let order = BigUint::from(aut.order());
    debug_assert!((&total % &order) == BigUint::from(0u32));
    Ok(total / order)
}

/// Whether the orbit count of `X^n` under `Aut(X)` meets the symmetric-group
/// lower bound, i.e. every two tuples with the same equality pattern are
/// related by an automorphism.
pub fn is_n_homogeneous(q: &FiniteQuandle, n: usize) -> Result<bool> {
    is_n_homogeneous_capped(q, n, DEFAULT_GROUP_CAP)
}

pub fn is_n_homogeneous_capped(q: &FiniteQuandle, n: usize, group_cap: usize) -> Result<bool> {
    let classes = class_count_burnside_capped(q, n, group_cap)?;
    let bound = partition_count(0, n as u64, Cardinality::Finite(q.size() as u64))?;
    Ok(classes == bound)
}

/// Whether `X` is `n`-homogeneous for every `n`. Computed two independent
/// ways that must agree: `(k-1)`-homogeneity, and the automorphism group
/// being the full symmetric group.
pub fn is_uniform(q: &FiniteQuandle) -> Result<bool> {
    is_uniform_capped(q, DEFAULT_GROUP_CAP)
}

pub fn is_uniform_capped(q: &FiniteQuandle, group_cap: usize) -> Result<bool> {
    let k = q.size();
    let by_homogeneity = is_n_homogeneous_capped(q, k - 1, group_cap)?;
    let factorial: usize = (1..=k).product();
    let by_group_order = q.automorphism_group_capped(group_cap)?.order() == factorial;
    assert_eq!(
        by_homogeneity, by_group_order,
        "the two uniformity characterizations must agree"
    );
    Ok(by_homogeneity)
}

/// Whether the diagonal action of the inner automorphism group on `X^2`
/// has exactly two orbits.
pub fn is_two_point_homogeneous(q: &FiniteQuandle) -> bool {
    let inn = q.inner_group();
    let k = q.size();
    let mut visited = vec![false; k * k];
    let mut orbits = 0usize;
    for a in 0..k {
        for b in 0..k {
            if visited[a * k + b] {
                continue;
            }
            orbits += 1;
            if orbits > 2 {
                return false;
            }
            for g in inn.elements() {
                visited[g.apply(a) * k + g.apply(b)] = true;
            }
        }
    }
    orbits == 2
}

/// Whether the stabilizer of `x` in `Aut(X)` acts transitively on the
/// remaining elements.
pub fn stabilizer_transitive(q: &FiniteQuandle, x: usize) -> Result<bool> {
    stabilizer_transitive_capped(q, x, DEFAULT_GROUP_CAP)
}

pub fn stabilizer_transitive_capped(q: &FiniteQuandle, x: usize, group_cap: usize) -> Result<bool> {
    q.check_element(x)?;
    let aut = q.automorphism_group_capped(group_cap)?;
    let others: Vec<usize> = (0..q.size()).filter(|&p| p != x).collect();
    Ok(aut.stabilizer(x).is_transitive_on(&others))
}
