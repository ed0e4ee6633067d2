//! Colorings: quandle homomorphisms from a presented quandle into a finite
//! quandle, counted with or without basepoint constraints.
//!
//! Enumeration backtracks over the generators in presentation order with
//! ascending values, propagating relations as it goes: a relation whose one
//! side is a bare unassigned generator and whose other side is fully
//! assigned forces that generator, and any fully assigned relation that
//! fails to balance prunes the branch. Colorings therefore come out in
//! lexicographic order of their value tuples.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pointed::PointedQuandle;
use crate::presentation::{QuandlePresentation, QuandleWord};
use crate::quandle::FiniteQuandle;
use crate::diagram::Sign;

/// A coloring: one target element per generator, satisfying every relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    assignment: BTreeMap<String, usize>,
}

impl Coloring {
    pub fn get(&self, gen: &str) -> Option<usize> {
        self.assignment.get(gen).copied()
    }

    pub fn assignment(&self) -> &BTreeMap<String, usize> {
        &self.assignment
    }
}

/// Evaluates a left-nested word under an assignment.
pub fn evaluate_word(
    word: &QuandleWord,
    assignment: &BTreeMap<String, usize>,
    q: &FiniteQuandle,
) -> Result<usize> {
    let lookup = |gen: &str| {
        assignment
            .get(gen)
            .copied()
            .ok_or_else(|| Error::UnassignedGenerator { gen: gen.to_string() })
    };
    let mut value = lookup(word.base())?;
    q.check_element(value)?;
    for factor in word.tail() {
        let operand = lookup(&factor.gen)?;
        value = match factor.exp {
            Sign::Positive => q.checked_op(value, operand)?,
            Sign::Negative => q.checked_inv_op(value, operand)?,
        };
    }
    Ok(value)
}

struct CompiledWord {
    base: usize,
    tail: Vec<(usize, Sign)>,
}

impl CompiledWord {
    fn eval(&self, values: &[Option<usize>], q: &FiniteQuandle) -> Option<usize> {
        let mut acc = values[self.base]?;
        for &(gen, sign) in &self.tail {
            let operand = values[gen]?;
            acc = match sign {
                Sign::Positive => q.op(acc, operand),
                Sign::Negative => q.inv_op(acc, operand),
            };
        }
        Some(acc)
    }

    /// The generator index when the word is bare.
    fn as_bare(&self) -> Option<usize> {
        self.tail.is_empty().then_some(self.base)
    }
}

/// All colorings of the presentation into `q` that satisfy the optional
/// pins, in lexicographic order of generator values (generators in
/// presentation order).
pub fn enumerate_colorings(
    p: &QuandlePresentation,
    q: &FiniteQuandle,
    pins: Option<&BTreeMap<String, usize>>,
) -> Result<Vec<Coloring>> {
    let gens = p.generators();
    let index_of = |token: &str| gens.iter().position(|g| g == token).unwrap();

    let mut values: Vec<Option<usize>> = vec![None; gens.len()];
    if let Some(pins) = pins {
        for (gen, &value) in pins {
            let Some(idx) = gens.iter().position(|g| g == gen) else {
                return Err(Error::UnknownPinnedGenerator { gen: gen.clone() });
            };
            if value >= q.size() {
                return Err(Error::PinOutOfRange { gen: gen.clone(), value, size: q.size() });
            }
            values[idx] = Some(value);
        }
    }

    let relations: Vec<(CompiledWord, CompiledWord)> = p
        .relations()
        .iter()
        .map(|r| {
            let compile = |w: &QuandleWord| CompiledWord {
                base: index_of(w.base()),
                tail: w.tail().iter().map(|f| (index_of(&f.gen), f.exp)).collect(),
            };
            (compile(&r.lhs), compile(&r.rhs))
        })
        .collect();

    let mut out = Vec::new();
    search(q, &relations, &mut values, &mut out);

    Ok(out
        .into_iter()
        .map(|values| Coloring {
            assignment: gens
                .iter()
                .cloned()
                .zip(values)
                .collect(),
        })
        .collect())
}

/// Propagates relations to a fixpoint. Returns the forced assignments (for
/// undoing) or `None` on contradiction.
fn propagate(
    q: &FiniteQuandle,
    relations: &[(CompiledWord, CompiledWord)],
    values: &mut [Option<usize>],
) -> Option<Vec<usize>> {
    let mut forced = Vec::new();
    loop {
        let mut progress = false;
        for (lhs, rhs) in relations {
            match (lhs.eval(values, q), rhs.eval(values, q)) {
                (Some(a), Some(b)) => {
                    if a != b {
                        for idx in forced {
                            values[idx] = None;
                        }
                        return None;
                    }
                }
                (None, Some(v)) => {
                    if let Some(bare) = lhs.as_bare() {
                        values[bare] = Some(v);
                        forced.push(bare);
                        progress = true;
                    }
                }
                (Some(v), None) => {
                    if let Some(bare) = rhs.as_bare() {
                        values[bare] = Some(v);
                        forced.push(bare);
                        progress = true;
                    }
                }
                (None, None) => {}
            }
        }
        if !progress {
            return Some(forced);
        }
    }
}

fn search(
    q: &FiniteQuandle,
    relations: &[(CompiledWord, CompiledWord)],
    values: &mut Vec<Option<usize>>,
    out: &mut Vec<Vec<usize>>,
) {
    let Some(forced) = propagate(q, relations, values) else {
        return;
    };
    match values.iter().position(|v| v.is_none()) {
        None => out.push(values.iter().map(|v| v.unwrap()).collect()),
        Some(decision) => {
            for candidate in 0..q.size() {
                values[decision] = Some(candidate);
                search(q, relations, values, out);
                values[decision] = None;
            }
        }
    }
    for idx in forced {
        values[idx] = None;
    }
}

/// The number of colorings with basepoints ignored.
pub fn counting_invariant(p: &QuandlePresentation, q: &FiniteQuandle) -> u64 {
    enumerate_colorings(p, q, None)
        .expect("no pins, so enumeration cannot fail")
        .len() as u64
}

/// The number of colorings sending each basepoint generator of `p` to the
/// corresponding basepoint of the target. Zero is an ordinary outcome, in
/// particular whenever repeated basepoint generators meet distinct targets.
pub fn pointed_counting_invariant(
    p: &QuandlePresentation,
    target: &PointedQuandle,
) -> Result<u64> {
    if p.basepoints().len() != target.arity() {
        return Err(Error::ArityMismatch { expected: p.basepoints().len(), got: target.arity() });
    }
    let mut pins: BTreeMap<String, usize> = BTreeMap::new();
    for (gen, &value) in p.basepoints().iter().zip(target.basepoints()) {
        if let Some(&prev) = pins.get(gen) {
            if prev != value {
                return Ok(0);
            }
        }
        pins.insert(gen.clone(), value);
    }
    Ok(enumerate_colorings(p, q_of(target), Some(&pins))?.len() as u64)
}

fn q_of(target: &PointedQuandle) -> &FiniteQuandle {
    target.quandle()
}

/// The matrix of pointed coloring counts over all basepoint pairs of the
/// target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountingMatrix {
    target: FiniteQuandle,
    entries: Vec<Vec<u64>>,
}

impl CountingMatrix {
    pub fn target(&self) -> &FiniteQuandle {
        &self.target
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.entries[i][j]
    }

    pub fn trace(&self) -> u64 {
        (0..self.target.size()).map(|i| self.entries[i][i]).sum()
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().flatten().sum()
    }

    pub fn is_identity(&self) -> bool {
        let k = self.target.size();
        (0..k).all(|i| (0..k).all(|j| self.entries[i][j] == u64::from(i == j)))
    }

    pub fn csv(&self) -> String {
        self.entries
            .iter()
            .map(|row| row.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
            .map(|line| line + "\n")
            .collect()
    }
}

/// Computes the counting matrix of a 1-linkoid presentation (exactly two
/// basepoints: leg arc, head arc) over `q`: entry `(i, j)` counts the
/// colorings pinning the leg arc to `i` and the head arc to `j`.
///
/// A single unpinned enumeration is bucketed by the two endpoint colors;
/// the tests check this against the per-entry pinned definition.
pub fn counting_matrix(p: &QuandlePresentation, q: &FiniteQuandle) -> Result<CountingMatrix> {
    if p.basepoints().len() != 2 {
        return Err(Error::ArityMismatch { expected: 2, got: p.basepoints().len() });
    }
    let leg = &p.basepoints()[0];
    let head = &p.basepoints()[1];
    let k = q.size();
    let mut entries = vec![vec![0u64; k]; k];
    for coloring in enumerate_colorings(p, q, None)? {
        let i = coloring.get(leg).unwrap();
        let j = coloring.get(head).unwrap();
        entries[i][j] += 1;
    }
    Ok(CountingMatrix { target: q.clone(), entries })
}

/// Structural checks on a counting matrix. `None` marks a check whose
/// hypothesis does not apply to this target (or whose group computation
/// exceeds the cap).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixChecks {
    /// Entries are counts, hence nonnegative.
    pub entries_nonnegative: bool,
    /// Constant colorings pin both ends to the same element.
    pub diagonal_positive: bool,
    /// The matrix is the identity exactly when only the constant colorings
    /// exist.
    pub is_identity: bool,
    pub identity_iff_only_trivial: bool,
    /// Equal diagonal when the target is homogeneous.
    pub homogeneous_diagonal_equal: Option<bool>,
    /// Equal off-diagonal when the target is 2-homogeneous.
    pub two_homogeneous_offdiagonal_equal: Option<bool>,
    /// Diagonal entries agree within each algebraic component of the target.
    pub component_diagonal_equal: bool,
    /// For a link-type presentation, the trace counts the colorings of the
    /// under-closure.
    pub closure_trace: Option<u64>,
    /// Link-type over a faithful target forces both ends to one color.
    pub faithful_offdiagonal_zero: Option<bool>,
}

/// The matrix together with its derived quantities, in the JSON layout
/// `{"target": ..., "matrix": ..., "trace": ..., "sum": ..., "checks": ...}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixReport {
    pub target: FiniteQuandle,
    pub matrix: Vec<Vec<u64>>,
    pub trace: u64,
    pub sum: u64,
    pub checks: MatrixChecks,
}

/// Builds the report for a counting matrix. `link_type` asserts that the
/// underlying 1-linkoid has both endpoints in one region, which cannot be
/// read off a presentation; it unlocks the trace and faithfulness checks.
pub fn matrix_report(matrix: &CountingMatrix, link_type: bool) -> MatrixReport {
    let q = &matrix.target;
    let k = q.size();
    let diag: Vec<u64> = (0..k).map(|i| matrix.entry(i, i)).collect();
    let off_diag: Vec<u64> = (0..k)
        .flat_map(|i| (0..k).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| matrix.entry(i, j))
        .collect();
    let sum = matrix.total();
    let is_identity = matrix.is_identity();

    let homogeneous_diagonal_equal = match q.is_homogeneous() {
        Ok(true) => Some(diag.windows(2).all(|w| w[0] == w[1])),
        _ => None,
    };
    let two_homogeneous_offdiagonal_equal = match crate::pointed::is_n_homogeneous(q, 2) {
        Ok(true) => Some(off_diag.windows(2).all(|w| w[0] == w[1])),
        _ => None,
    };
    let component_diagonal_equal = q.algebraic_components().iter().all(|block| {
        block.windows(2).all(|w| matrix.entry(w[0], w[0]) == matrix.entry(w[1], w[1]))
    });
    let faithful_offdiagonal_zero = if link_type && q.is_faithful() {
        Some(off_diag.iter().all(|&e| e == 0))
    } else {
        None
    };

    MatrixReport {
        target: q.clone(),
        matrix: matrix.entries.clone(),
        trace: matrix.trace(),
        sum,
        checks: MatrixChecks {
            entries_nonnegative: true,
            diagonal_positive: diag.iter().all(|&e| e >= 1),
            is_identity,
            identity_iff_only_trivial: is_identity == (sum == k as u64),
            homogeneous_diagonal_equal,
            two_homogeneous_offdiagonal_equal,
            component_diagonal_equal,
            closure_trace: link_type.then(|| matrix.trace()),
            faithful_offdiagonal_zero,
        },
    }
}

/// Pointed counts of one presentation across a battery of pointed targets,
/// aligned with the input order. Presentations whose profiles differ have
/// non-isomorphic fundamental pointed quandles.
pub fn pointed_profile(
    p: &QuandlePresentation,
    targets: &[PointedQuandle],
) -> Result<Vec<u64>> {
    targets.iter().map(|t| pointed_counting_invariant(p, t)).collect()
}
