//! Permutations on `{0..k-1}` and explicit permutation groups.
//!
//! Groups are stored as their full, sorted element list. At the sizes this
//! crate works with (degree <= 8 by default, so order <= 40320) that is
//! cheaper and simpler than any generating-set machinery.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0..k-1}`, stored as its image vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { image: (0..degree).collect() }
    }

    /// Builds a permutation from an image vector, checking bijectivity.
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let k = image.len();
        let mut seen = vec![false; k];
        for &v in &image {
            if v >= k {
                return Err(Error::OutOfRange { value: v, size: k });
            }
            if seen[v] {
                return Err(Error::ColumnNotBijective { y: v });
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `self` followed by `other`: `(self.then(other)).apply(x) == other.apply(self.apply(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { image: self.image.iter().map(|&v| other.image[v]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Permutation { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Points not fixed by the permutation.
    pub fn support(&self) -> Vec<usize> {
        self.image.iter().enumerate().filter(|&(i, &v)| i != v).map(|(i, _)| i).collect()
    }

    pub fn fixed_point_count(&self) -> usize {
        self.image.iter().enumerate().filter(|&(i, &v)| i == v).count()
    }

    /// Cycle decomposition, omitting fixed points; cycles start at their
    /// smallest element and are ordered by it.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let k = self.image.len();
        let mut seen = vec![false; k];
        let mut cycles = Vec::new();
        for start in 0..k {
            if seen[start] || self.image[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.image[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.image[next];
            }
            cycles.push(cycle);
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, e.g. `(0 1 2)(3 4)`; the identity prints as `id`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A permutation group given by its complete element list, sorted and
/// duplicate-free. Always contains the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, elements: vec![Permutation::identity(degree)] }
    }

    /// Canonicalizes an element list: sorts, dedups, and adds the identity.
    /// The caller is responsible for closure; `is_closed` can verify it.
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.push(Permutation::identity(degree));
        elements.sort();
        elements.dedup();
        PermGroup { degree, elements }
    }

    /// Closure of a generating set under composition and inverse.
    pub fn from_generators(degree: usize, generators: &[Permutation]) -> Self {
        let mut elements = std::collections::BTreeSet::new();
        elements.insert(Permutation::identity(degree));
        let mut frontier: Vec<Permutation> = vec![Permutation::identity(degree)];
        while let Some(g) = frontier.pop() {
            for gen in generators {
                for candidate in [g.then(gen), g.then(&gen.inverse())] {
                    if elements.insert(candidate.clone()) {
                        frontier.push(candidate);
                    }
                }
            }
        }
        PermGroup { degree, elements: elements.into_iter().collect() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Element-wise containment in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|a| {
            self.contains(&a.inverse())
                && self.elements.iter().all(|b| self.contains(&a.then(b)))
        })
    }

    /// Orbits of the natural action on `{0..degree-1}`; each orbit is sorted
    /// and orbits are ordered by their smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orbit: Vec<usize> =
                self.elements.iter().map(|g| g.apply(start)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &p in &orbit {
                seen[p] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits().len() == 1
    }

    /// The subgroup fixing `x`.
    pub fn stabilizer(&self, x: usize) -> PermGroup {
        let elements: Vec<Permutation> =
            self.elements.iter().filter(|g| g.apply(x) == x).cloned().collect();
        PermGroup { degree: self.degree, elements }
    }

    /// Whether the action restricted to `points` is transitive (vacuously
    /// true on fewer than two points).
    pub fn is_transitive_on(&self, points: &[usize]) -> bool {
        if points.len() < 2 {
            return true;
        }
        let start = points[0];
        let mut reached: Vec<usize> = self.elements.iter().map(|g| g.apply(start)).collect();
        reached.sort_unstable();
        reached.dedup();
        points.iter().all(|p| reached.binary_search(p).is_ok())
    }
}

/// All permutations of `{0..degree-1}` in lexicographic order.
pub fn all_permutations(degree: usize) -> Vec<Permutation> {
    let mut result = Vec::new();
    let mut current = (0..degree).collect::<Vec<_>>();
    loop {
        result.push(Permutation { image: current.clone() });
        // next_permutation
        let Some(i) = (0..current.len().saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1])
        else {
            break;
        };
        let j = (i + 1..current.len()).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_invert() {
        let a = Permutation::from_image(vec![1, 2, 0]).unwrap();
        let b = Permutation::from_image(vec![0, 2, 1]).unwrap();
        assert_eq!(a.then(&b).image(), &[2, 1, 0]);
        assert_eq!(a.then(&a.inverse()), Permutation::identity(3));
        assert_eq!(a.inverse().image(), &[2, 0, 1]);
    }

    #[test]
    fn from_image_rejects_non_bijections() {
        assert!(Permutation::from_image(vec![0, 0]).is_err());
        assert!(Permutation::from_image(vec![0, 2]).is_err());
    }

    #[test]
    fn cycle_display() {
        let p = Permutation::from_image(vec![1, 0, 2, 3]).unwrap();
        assert_eq!(p.to_string(), "(0 1)");
        assert_eq!(Permutation::identity(3).to_string(), "id");
        let q = Permutation::from_image(vec![1, 2, 0, 4, 3]).unwrap();
        assert_eq!(q.to_string(), "(0 1 2)(3 4)");
    }

    #[test]
    fn closure_of_a_transposition_and_a_cycle_is_s3() {
        let t = Permutation::from_image(vec![1, 0, 2]).unwrap();
        let c = Permutation::from_image(vec![1, 2, 0]).unwrap();
        let g = PermGroup::from_generators(3, &[t, c]);
        assert_eq!(g.order(), 6);
        assert!(g.is_closed());
        assert!(g.is_transitive());
    }

    #[test]
    fn orbits_and_stabilizers() {
        let t = Permutation::from_image(vec![0, 2, 1]).unwrap();
        let g = PermGroup::from_generators(3, &[t]);
        assert_eq!(g.orbits(), vec![vec![0], vec![1, 2]]);
        assert_eq!(g.stabilizer(1).order(), 1);
        assert_eq!(g.stabilizer(0).order(), 2);
        assert!(g.is_transitive_on(&[1, 2]));
        assert!(!g.is_transitive_on(&[0, 1]));
    }

    #[test]
    fn all_permutations_counts() {
        assert_eq!(all_permutations(0).len(), 1);
        assert_eq!(all_permutations(4).len(), 24);
        let perms = all_permutations(3);
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
    }
}
