//! Finite quandles as validated operation tables.
//!
//! A quandle is a set with a binary operation `◁` that is idempotent
//! (`x ◁ x = x`), right-invertible (every right-translation `β_y: x ↦ x ◁ y`
//! is a bijection) and right self-distributive
//! (`(x ◁ y) ◁ z = (x ◁ z) ◁ (y ◁ z)`). Elements are `0..k-1` and
//! `table[x][y]` holds `x ◁ y`, so column `y` of the table is `β_y`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// Default size cap for automorphism-group computations.
pub const DEFAULT_GROUP_CAP: usize = 8;

/// A validated finite quandle. Immutable after construction: every
/// constructor checks all three axioms, so a value of this type always
/// satisfies them.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTable", into = "RawTable")]
pub struct FiniteQuandle {
    size: usize,
    table: Vec<Vec<usize>>,
    // inv_table[x][y] is the unique z with z ◁ y = x
    inv_table: Vec<Vec<usize>>,
}

/// Wire form of a quandle: `{"size": k, "table": [[...], ...]}` with
/// `table[x][y] = x ◁ y`, zero-indexed row-major.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawTable {
    size: usize,
    table: Vec<Vec<usize>>,
}

impl TryFrom<RawTable> for FiniteQuandle {
    type Error = Error;
    fn try_from(raw: RawTable) -> Result<Self> {
        FiniteQuandle::new(raw.size, raw.table)
    }
}

impl From<FiniteQuandle> for RawTable {
    fn from(q: FiniteQuandle) -> RawTable {
        RawTable { size: q.size, table: q.table }
    }
}

impl FiniteQuandle {
    /// Validates a `size` x `size` table against the three quandle axioms.
    ///
    /// Checks report the first witness found, scanning in the order:
    /// table shape, entry range, idempotence, column bijectivity,
    /// self-distributivity.
    pub fn new(size: usize, table: Vec<Vec<usize>>) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyQuandle);
        }
        if table.len() != size || table.iter().any(|row| row.len() != size) {
            return Err(Error::Syntax {
                line: 0,
                col: 0,
                msg: format!("table is not {size}x{size}"),
            });
        }
        for (x, row) in table.iter().enumerate() {
            for (y, &value) in row.iter().enumerate() {
                if value >= size {
                    return Err(Error::OutOfRangeEntry { x, y, value, size });
                }
            }
        }
        for (x, row) in table.iter().enumerate() {
            if row[x] != x {
                return Err(Error::IdempotenceViolation { x });
            }
        }
        let mut inv_table = vec![vec![0; size]; size];
        for y in 0..size {
            let mut seen = vec![false; size];
            for (x, row) in table.iter().enumerate() {
                let v = row[y];
                if seen[v] {
                    return Err(Error::ColumnNotBijective { y });
                }
                seen[v] = true;
                inv_table[v][y] = x;
            }
        }
        for x in 0..size {
            for y in 0..size {
                let xy = table[x][y];
                for z in 0..size {
                    if table[xy][z] != table[table[x][z]][table[y][z]] {
                        return Err(Error::DistributivityViolation { x, y, z });
                    }
                }
            }
        }
        Ok(FiniteQuandle { size, table, inv_table })
    }

    /// The trivial quandle `x ◁ y = x` on `n` elements.
    pub fn trivial(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyQuandle);
        }
        let table = (0..n).map(|x| vec![x; n]).collect();
        let inv_table = (0..n).map(|x| vec![x; n]).collect();
        Ok(FiniteQuandle { size: n, table, inv_table })
    }

    /// The dihedral quandle `x ◁ y = 2y - x (mod n)`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyQuandle);
        }
        let table: Vec<Vec<usize>> =
            (0..n).map(|x| (0..n).map(|y| (2 * y + n - x) % n).collect()).collect();
        Self::new(n, table)
    }

    /// The three-element quandle with `β_0 = (1 2)` and `β_1 = β_2 = id`;
    /// the only order-3 quandle besides the trivial and dihedral ones.
    pub fn v3() -> Self {
        Self::new(3, vec![vec![0, 0, 0], vec![2, 1, 1], vec![1, 2, 2]]).unwrap()
    }

    /// The regular tetrahedron quandle on four elements, with columns
    /// `β_0 = (1 2 3)`, `β_1 = (0 3 2)`, `β_2 = (0 1 3)`, `β_3 = (0 2 1)`.
    pub fn tetrahedron() -> Self {
        Self::new(
            4,
            vec![vec![0, 3, 1, 2], vec![2, 1, 3, 0], vec![3, 0, 2, 1], vec![1, 2, 0, 3]],
        )
        .unwrap()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// `x ◁ y`. Panics if an argument is out of range; use [`checked_op`]
    /// at trust boundaries.
    ///
    /// [`checked_op`]: FiniteQuandle::checked_op
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    /// `x ◁⁻¹ y`, the unique `z` with `z ◁ y = x`. Panics if out of range.
    pub fn inv_op(&self, x: usize, y: usize) -> usize {
        self.inv_table[x][y]
    }

    pub fn checked_op(&self, x: usize, y: usize) -> Result<usize> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.table[x][y])
    }

    pub fn checked_inv_op(&self, x: usize, y: usize) -> Result<usize> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.inv_table[x][y])
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.size {
            Ok(())
        } else {
            Err(Error::OutOfRange { value: x, size: self.size })
        }
    }

    /// The right translation `β_y` as a permutation.
    pub fn column(&self, y: usize) -> Permutation {
        Permutation::from_image((0..self.size).map(|x| self.table[x][y]).collect())
            .expect("columns of a validated table are bijections")
    }

    /// Whether `x ↦ β_x` is injective, i.e. no two columns coincide.
    pub fn is_faithful(&self) -> bool {
        for y1 in 0..self.size {
            for y2 in y1 + 1..self.size {
                if (0..self.size).all(|x| self.table[x][y1] == self.table[x][y2]) {
                    return false;
                }
            }
        }
        true
    }

    /// Orbits of the inner automorphism group acting on the elements.
    /// Blocks are sorted and ordered by smallest element.
    pub fn algebraic_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut blocks = Vec::new();
        for start in 0..self.size {
            if seen[start] {
                continue;
            }
            // breadth-first closure under all β_y; inverses are not needed
            // since each β_y has finite order
            let mut block = vec![start];
            seen[start] = true;
            let mut idx = 0;
            while idx < block.len() {
                let x = block[idx];
                idx += 1;
                for y in 0..self.size {
                    let image = self.table[x][y];
                    if !seen[image] {
                        seen[image] = true;
                        block.push(image);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.algebraic_components().len() == 1
    }

    /// Whether every `β_x` restricted to the other `k-1` elements is a
    /// single `(k-1)`-cycle. A one-element quandle does not qualify.
    pub fn is_cyclic_type(&self) -> bool {
        let k = self.size;
        if k == 1 {
            return false;
        }
        for x in 0..k {
            // walk the cycle of β_x starting anywhere off x
            let start = if x == 0 { 1 } else { 0 };
            let mut length = 1;
            let mut point = self.table[start][x];
            while point != start {
                if point == x {
                    return false; // β_x does not fix x's complement
                }
                length += 1;
                point = self.table[point][x];
            }
            if length != k - 1 {
                return false;
            }
        }
        true
    }

    /// All table automorphisms, with the default size cap.
    pub fn automorphism_group(&self) -> Result<PermGroup> {
        self.automorphism_group_capped(DEFAULT_GROUP_CAP)
    }

    pub fn automorphism_group_capped(&self, cap: usize) -> Result<PermGroup> {
        if self.size > cap {
            return Err(Error::SizeCapExceeded {
                what: "automorphism group",
                size: self.size,
                cap,
            });
        }
        let mut autos = Vec::new();
        find_isomorphisms(self, self, &[], &mut |p| {
            autos.push(p);
            true
        });
        Ok(PermGroup::from_elements(self.size, autos))
    }

    /// The inner automorphism group: closure of the columns `β_y`.
    pub fn inner_group(&self) -> PermGroup {
        let generators: Vec<Permutation> = (0..self.size).map(|y| self.column(y)).collect();
        PermGroup::from_generators(self.size, &generators)
    }

    /// Whether the automorphism group acts transitively on the elements.
    pub fn is_homogeneous(&self) -> Result<bool> {
        self.is_homogeneous_capped(DEFAULT_GROUP_CAP)
    }

    pub fn is_homogeneous_capped(&self, cap: usize) -> Result<bool> {
        Ok(self.automorphism_group_capped(cap)?.is_transitive())
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.size).all(|x| (0..self.size).all(|y| self.table[x][y] == x))
    }

    /// Searches for an isomorphism onto `other`; returns the
    /// lexicographically least witness (as an image vector) if any exists.
    pub fn isomorphism_to(&self, other: &FiniteQuandle) -> Option<Permutation> {
        if self.size != other.size {
            return None;
        }
        let mut witness = None;
        find_isomorphisms(self, other, &[], &mut |p| {
            witness = Some(p);
            false // candidates are tried in ascending order, first hit is lex-least
        });
        witness
    }

    /// Relabels the quandle along `p`: the result's table satisfies
    /// `table'[p(x)][p(y)] = p(table[x][y])`, making `p` an isomorphism.
    pub fn relabel(&self, p: &Permutation) -> FiniteQuandle {
        let k = self.size;
        let inv = p.inverse();
        let table: Vec<Vec<usize>> = (0..k)
            .map(|x| (0..k).map(|y| p.apply(self.table[inv.apply(x)][inv.apply(y)])).collect())
            .collect();
        Self::new(k, table).expect("relabeling preserves the axioms")
    }
}

/// Backtracking search for bijections `f` with `f(x ◁ y) = f(x) ◁ f(y)`,
/// subject to pinned images `f(x) = y`. Images are assigned position by
/// position in ascending candidate order, so witnesses are emitted in
/// lexicographic order of their image vectors. `emit` returns `false` to
/// stop the search.
pub(crate) fn find_isomorphisms(
    a: &FiniteQuandle,
    b: &FiniteQuandle,
    pins: &[(usize, usize)],
    emit: &mut dyn FnMut(Permutation) -> bool,
) {
    let k = a.size();
    if b.size() != k {
        return;
    }
    let mut image: Vec<Option<usize>> = vec![None; k];
    let mut used = vec![false; k];
    for &(x, y) in pins {
        match image[x] {
            Some(prev) if prev != y => return, // conflicting pins
            Some(_) => {}
            None => {
                if used[y] {
                    return; // two generators pinned to one target
                }
                image[x] = Some(y);
                used[y] = true;
            }
        }
    }

    fn consistent(a: &FiniteQuandle, b: &FiniteQuandle, image: &[Option<usize>]) -> bool {
        let k = a.size();
        for x in 0..k {
            let Some(fx) = image[x] else { continue };
            for y in 0..k {
                let Some(fy) = image[y] else { continue };
                if let Some(fxy) = image[a.op(x, y)] {
                    if b.op(fx, fy) != fxy {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn recurse(
        a: &FiniteQuandle,
        b: &FiniteQuandle,
        image: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        pos: usize,
        emit: &mut dyn FnMut(Permutation) -> bool,
    ) -> bool {
        let k = a.size();
        if pos == k {
            let img: Vec<usize> = image.iter().map(|v| v.unwrap()).collect();
            return emit(Permutation::from_image(img).unwrap());
        }
        if image[pos].is_some() {
            return recurse(a, b, image, used, pos + 1, emit);
        }
        for candidate in 0..k {
            if used[candidate] {
                continue;
            }
            image[pos] = Some(candidate);
            used[candidate] = true;
            if consistent(a, b, image) && !recurse(a, b, image, used, pos + 1, emit) {
                image[pos] = None;
                used[candidate] = false;
                return false;
            }
            image[pos] = None;
            used[candidate] = false;
        }
        true
    }

    if consistent(a, b, &image) {
        recurse(a, b, &mut image, &mut used, 0, emit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_three_table() {
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        assert_eq!(r3.table(), &[vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]);
    }

    #[test]
    fn named_tables_match_their_columns() {
        let v3 = FiniteQuandle::v3();
        assert_eq!(v3.table(), &[vec![0, 0, 0], vec![2, 1, 1], vec![1, 2, 2]]);
        assert_eq!(v3.column(0).to_string(), "(1 2)");
        assert!(v3.column(1).is_identity());

        let t4 = FiniteQuandle::trivial(4).unwrap();
        assert_eq!(
            t4.table(),
            &[vec![0, 0, 0, 0], vec![1, 1, 1, 1], vec![2, 2, 2, 2], vec![3, 3, 3, 3]]
        );

        let tet = FiniteQuandle::tetrahedron();
        assert_eq!(tet.column(0).to_string(), "(1 2 3)");
        assert_eq!(tet.column(1).to_string(), "(0 3 2)");
        assert_eq!(tet.column(2).to_string(), "(0 1 3)");
        assert_eq!(tet.column(3).to_string(), "(0 2 1)");
    }

    #[test]
    fn constructor_tables_pass_full_validation() {
        for q in [
            FiniteQuandle::trivial(5).unwrap(),
            FiniteQuandle::dihedral(6).unwrap(),
            FiniteQuandle::v3(),
            FiniteQuandle::tetrahedron(),
        ] {
            assert!(FiniteQuandle::new(q.size(), q.table().to_vec()).is_ok());
        }
    }

    #[test]
    fn one_element_table_is_valid() {
        let q = FiniteQuandle::new(1, vec![vec![0]]).unwrap();
        assert_eq!(q.size(), 1);
        assert!(FiniteQuandle::trivial(0).is_err());
        assert!(FiniteQuandle::dihedral(0).is_err());
    }

    #[test]
    fn constant_column_is_rejected() {
        // both columns of this table are constant; the first failing one is
        // reported
        let err = FiniteQuandle::new(2, vec![vec![0, 1], vec![0, 1]]).unwrap_err();
        match err {
            Error::ColumnNotBijective { y } => assert!(y < 2),
            other => panic!("expected ColumnNotBijective, got {other:?}"),
        }
    }

    #[test]
    fn witnesses_for_each_axiom_failure() {
        let err = FiniteQuandle::new(2, vec![vec![0, 9], vec![0, 1]]).unwrap_err();
        assert_eq!(err, Error::OutOfRangeEntry { x: 0, y: 1, value: 9, size: 2 });

        let err = FiniteQuandle::new(2, vec![vec![1, 0], vec![1, 0]]).unwrap_err();
        assert_eq!(err, Error::IdempotenceViolation { x: 0 });

        // idempotent with bijective columns but not self-distributive
        let err = FiniteQuandle::new(
            3,
            vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]],
        );
        assert!(err.is_ok(), "dihedral table must pass");
        // idempotent with bijective columns, but (2 ◁ 0) ◁ 2 ≠ (2 ◁ 2) ◁ (0 ◁ 2)
        let bad = FiniteQuandle::new(
            4,
            vec![
                vec![0, 0, 1, 1],
                vec![1, 1, 0, 0],
                vec![3, 2, 2, 2],
                vec![2, 3, 3, 3],
            ],
        );
        assert!(matches!(bad, Err(Error::DistributivityViolation { .. })));
    }

    #[test]
    fn ops_on_dihedral_three() {
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        assert_eq!(r3.op(0, 1), 2);
        // invert column 1 by scan: z ◁ 1 = 2 forces z = 0
        assert_eq!(r3.inv_op(2, 1), 0);
        for x in 0..3 {
            assert_eq!(r3.op(x, x), x);
            for y in 0..3 {
                assert_eq!(r3.inv_op(r3.op(x, y), y), x);
                assert_eq!(r3.op(r3.inv_op(x, y), y), x);
            }
        }
        assert!(r3.checked_op(0, 3).is_err());
        assert!(r3.checked_inv_op(3, 0).is_err());
    }

    #[test]
    fn automorphism_groups_of_small_quandles() {
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        assert_eq!(r3.automorphism_group().unwrap().order(), 6);

        let t3 = FiniteQuandle::trivial(3).unwrap();
        assert_eq!(t3.automorphism_group().unwrap().order(), 6);

        let v3 = FiniteQuandle::v3();
        let aut = v3.automorphism_group().unwrap();
        assert_eq!(aut.order(), 2);
        let swap = Permutation::from_image(vec![0, 2, 1]).unwrap();
        assert!(aut.contains(&swap));
    }

    #[test]
    fn group_cap_is_enforced() {
        let t9 = FiniteQuandle::trivial(9).unwrap();
        assert!(matches!(
            t9.automorphism_group(),
            Err(Error::SizeCapExceeded { .. })
        ));
        assert!(t9.automorphism_group_capped(9).is_ok());
    }

    #[test]
    fn inner_groups() {
        let t5 = FiniteQuandle::trivial(5).unwrap();
        assert_eq!(t5.inner_group().order(), 1);

        let r3 = FiniteQuandle::dihedral(3).unwrap();
        let inn = r3.inner_group();
        assert_eq!(inn.order(), 6);
        assert!(inn.is_subgroup_of(&r3.automorphism_group().unwrap()));

        let v3 = FiniteQuandle::v3();
        assert_eq!(v3.inner_group(), v3.automorphism_group().unwrap());
    }

    #[test]
    fn components_and_predicates() {
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        assert_eq!(r3.algebraic_components(), vec![vec![0, 1, 2]]);
        assert!(r3.is_connected());
        assert!(r3.is_faithful());

        let t3 = FiniteQuandle::trivial(3).unwrap();
        assert_eq!(t3.algebraic_components(), vec![vec![0], vec![1], vec![2]]);
        assert!(!t3.is_faithful());
        assert!(t3.is_homogeneous().unwrap());

        let v3 = FiniteQuandle::v3();
        assert_eq!(v3.algebraic_components(), vec![vec![0], vec![1, 2]]);
        assert!(!v3.is_connected());

        assert!(FiniteQuandle::tetrahedron().is_cyclic_type());
        assert!(!v3.is_cyclic_type());
        assert!(!FiniteQuandle::trivial(1).unwrap().is_cyclic_type());
        assert!(FiniteQuandle::trivial(2).unwrap().is_cyclic_type());
    }

    #[test]
    fn isomorphism_search() {
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        let t3 = FiniteQuandle::trivial(3).unwrap();
        assert_eq!(r3.isomorphism_to(&r3), Some(Permutation::identity(3)));
        // connected vs disconnected, so no isomorphism can exist
        assert_eq!(r3.isomorphism_to(&t3), None);

        let v3 = FiniteQuandle::v3();
        let swap01 = Permutation::from_image(vec![1, 0, 2]).unwrap();
        let relabeled = v3.relabel(&swap01);
        let witness = v3.isomorphism_to(&relabeled).unwrap();
        assert_eq!(witness, swap01);
    }

    #[test]
    fn automorphisms_respect_the_table() {
        for q in [
            FiniteQuandle::dihedral(5).unwrap(),
            FiniteQuandle::v3(),
            FiniteQuandle::tetrahedron(),
        ] {
            let aut = q.automorphism_group().unwrap();
            for f in aut.elements() {
                for x in 0..q.size() {
                    for y in 0..q.size() {
                        assert_eq!(f.apply(q.op(x, y)), q.op(f.apply(x), f.apply(y)));
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip_validates() {
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        let text = serde_json::to_string(&r3).unwrap();
        assert_eq!(text, r#"{"size":3,"table":[[0,2,1],[2,1,0],[1,0,2]]}"#);
        let back: FiniteQuandle = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r3);

        let bad = r#"{"size":2,"table":[[0,1],[0,1]]}"#;
        assert!(serde_json::from_str::<FiniteQuandle>(bad).is_err());
    }
}
