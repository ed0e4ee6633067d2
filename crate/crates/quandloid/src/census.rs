//! Enumeration of finite quandles up to isomorphism.
//!
//! Idempotence forces every column to fix its own index, and
//! self-distributivity says exactly that conjugation permutes the columns:
//! `β_z β_y β_z⁻¹ = β_{β_z(y)}`. The search branches over candidate columns
//! and propagates that conjugation constraint, deriving forced columns and
//! pruning contradictions early. Each completed table is reduced to its
//! canonical form (the lexicographically least table over all relabelings),
//! so the result is one representative per isomorphism class.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::perm::all_permutations;
use crate::quandle::FiniteQuandle;

/// Hard cap for the census order. The raw search space is `((n-1)!)^n`;
/// with propagation order 5 is still instant, but canonicalization cost
/// grows as `n! · n²` per table.
pub const CENSUS_HARD_CAP: usize = 5;

/// All quandles with `n` elements, one representative per isomorphism
/// class, each in canonical form, sorted lexicographically by table.
pub fn enumerate_quandles(n: usize) -> Result<Vec<FiniteQuandle>> {
    if n == 0 || n > CENSUS_HARD_CAP {
        return Err(Error::SizeCapExceeded { what: "census order", size: n, cap: CENSUS_HARD_CAP });
    }
    let candidates: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|idx| {
            all_permutations(n)
                .into_iter()
                .map(|p| p.image().to_vec())
                .filter(|img| img[idx] == idx)
                .collect()
        })
        .collect();

    let mut found: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
    let mut columns: Vec<Option<Vec<usize>>> = vec![None; n];
    search(n, &candidates, &mut columns, &mut found);

    Ok(found
        .into_iter()
        .map(|table| FiniteQuandle::new(n, table).expect("search output satisfies the axioms"))
        .collect())
}

fn search(
    n: usize,
    candidates: &[Vec<Vec<usize>>],
    columns: &mut [Option<Vec<usize>>],
    found: &mut BTreeSet<Vec<Vec<usize>>>,
) {
    let Some(idx) = columns.iter().position(|c| c.is_none()) else {
        let table = table_from_columns(n, columns);
        found.insert(canonical_table(&table));
        return;
    };
    for candidate in &candidates[idx] {
        let mut next: Vec<Option<Vec<usize>>> = columns.to_vec();
        next[idx] = Some(candidate.clone());
        if propagate(n, &mut next, idx) {
            search(n, candidates, &mut next, found);
        }
    }
}

/// Enforces `β_v β_u β_v⁻¹ = β_{β_v(u)}` for every pair of set columns,
/// deriving unset columns where the pair forces them. Returns false on
/// contradiction.
fn propagate(n: usize, columns: &mut [Option<Vec<usize>>], newly_set: usize) -> bool {
    let mut queue = vec![newly_set];
    while let Some(z) = queue.pop() {
        let set: Vec<usize> = (0..n).filter(|&i| columns[i].is_some()).collect();
        for &y in &set {
            for (u, v) in [(y, z), (z, y)] {
                let col_v = columns[v].as_ref().unwrap();
                let col_u = columns[u].as_ref().unwrap();
                let target = col_v[u];
                let derived = conjugate(col_v, col_u);
                match &columns[target] {
                    Some(existing) => {
                        if *existing != derived {
                            return false;
                        }
                    }
                    None => {
                        // forced: any completion must use this column
                        columns[target] = Some(derived);
                        queue.push(target);
                    }
                }
            }
        }
    }
    true
}

/// `β_v β_u β_v⁻¹` as an image vector.
fn conjugate(col_v: &[usize], col_u: &[usize]) -> Vec<usize> {
    let n = col_v.len();
    let mut inv_v = vec![0; n];
    for (i, &x) in col_v.iter().enumerate() {
        inv_v[x] = i;
    }
    (0..n).map(|x| col_v[col_u[inv_v[x]]]).collect()
}

fn table_from_columns(n: usize, columns: &[Option<Vec<usize>>]) -> Vec<Vec<usize>> {
    (0..n)
        .map(|x| (0..n).map(|y| columns[y].as_ref().unwrap()[x]).collect())
        .collect()
}

/// The lexicographically least relabeling of `table`, comparing tables
/// row-major. Two tables are isomorphic iff their canonical forms agree.
pub fn canonical_table(table: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = table.len();
    all_permutations(n)
        .iter()
        .map(|p| {
            let inv = p.inverse();
            (0..n)
                .map(|x| {
                    (0..n)
                        .map(|y| p.apply(table[inv.apply(x)][inv.apply(y)]))
                        .collect::<Vec<usize>>()
                })
                .collect::<Vec<Vec<usize>>>()
        })
        .min()
        .expect("at least the identity relabeling exists")
}
