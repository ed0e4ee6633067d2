//! Quandle presentations by generators and relations.
//!
//! Words are left-nested: a base generator followed by a tail of
//! `◁^{±1} g` factors, so `a*c/b` reads `(a ◁ c) ◁⁻¹ b`. A presentation
//! derived from a diagram has one generator per arc, one relation per
//! crossing (`out = in ◁^ε over`), and, per open component in order, the
//! pair (leg arc, head arc) appended to its basepoint list.
//!
//! The text format:
//!
//! ```text
//! gens: a b c d
//! rel: b = a*c
//! rel: c = b*a
//! rel: d = c*b
//! base: a d
//! ```

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{ComponentKind, End, LinkoidDiagram, Role, Sign};
use crate::error::{Error, Result};

/// One `◁^{exp} gen` factor of a word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordFactor {
    pub gen: String,
    pub exp: Sign,
}

/// A left-nested quandle word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleWord {
    base: String,
    tail: Vec<WordFactor>,
}

impl QuandleWord {
    pub fn generator(token: impl Into<String>) -> Self {
        QuandleWord { base: token.into(), tail: Vec::new() }
    }

    /// Appends `◁^{sign} gen` to the word.
    pub fn quandled(mut self, gen: impl Into<String>, sign: Sign) -> Self {
        self.tail.push(WordFactor { gen: gen.into(), exp: sign });
        self
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn tail(&self) -> &[WordFactor] {
        &self.tail
    }

    /// The bare generator when the word has no tail.
    pub fn as_bare(&self) -> Option<&str> {
        self.tail.is_empty().then_some(self.base.as_str())
    }

    /// Every generator token in the word, base first.
    pub fn tokens(&self) -> impl Iterator<Item = &str> {
        std::iter::once(self.base.as_str()).chain(self.tail.iter().map(|f| f.gen.as_str()))
    }

    pub fn mentions(&self, gen: &str) -> bool {
        self.tokens().any(|t| t == gen)
    }

    pub fn render(&self) -> String {
        let mut out = self.base.clone();
        for factor in &self.tail {
            out.push(match factor.exp {
                Sign::Positive => '*',
                Sign::Negative => '/',
            });
            out.push_str(&factor.gen);
        }
        out
    }
}

impl fmt::Display for QuandleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub lhs: QuandleWord,
    pub rhs: QuandleWord,
}

impl Relation {
    pub fn new(lhs: QuandleWord, rhs: QuandleWord) -> Self {
        Relation { lhs, rhs }
    }

    pub fn mentions(&self, gen: &str) -> bool {
        self.lhs.mentions(gen) || self.rhs.mentions(gen)
    }
}

/// A quandle presentation: generators, relations, and an ordered (possibly
/// empty) basepoint list. Diagram-derived presentations carry two
/// basepoints per open component, in component order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPresentation", into = "RawPresentation")]
pub struct QuandlePresentation {
    generators: Vec<String>,
    relations: Vec<Relation>,
    basepoints: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawPresentation {
    generators: Vec<String>,
    relations: Vec<Relation>,
    basepoints: Vec<String>,
}

impl TryFrom<RawPresentation> for QuandlePresentation {
    type Error = Error;
    fn try_from(raw: RawPresentation) -> Result<Self> {
        QuandlePresentation::new(raw.generators, raw.relations, raw.basepoints)
    }
}

impl From<QuandlePresentation> for RawPresentation {
    fn from(p: QuandlePresentation) -> RawPresentation {
        RawPresentation { generators: p.generators, relations: p.relations, basepoints: p.basepoints }
    }
}

fn valid_token(token: &str) -> bool {
    !token.is_empty() && token.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl QuandlePresentation {
    /// Validates that every token mentioned in relations and basepoints is
    /// declared, and that generator tokens are unique `[A-Za-z0-9_]+`.
    pub fn new(
        generators: Vec<String>,
        relations: Vec<Relation>,
        basepoints: Vec<String>,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !valid_token(g) {
                return Err(Error::Syntax {
                    line: 0,
                    col: 0,
                    msg: format!("invalid generator token {g:?}"),
                });
            }
            if !seen.insert(g.as_str()) {
                return Err(Error::Syntax {
                    line: 0,
                    col: 0,
                    msg: format!("duplicate generator {g:?}"),
                });
            }
        }
        for relation in &relations {
            for token in relation.lhs.tokens().chain(relation.rhs.tokens()) {
                if !seen.contains(token) {
                    return Err(Error::UnknownGenerator { gen: token.to_string() });
                }
            }
        }
        for b in &basepoints {
            if !seen.contains(b.as_str()) {
                return Err(Error::UnknownGenerator { gen: b.to_string() });
            }
        }
        Ok(QuandlePresentation { generators, relations, basepoints })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn basepoints(&self) -> &[String] {
        &self.basepoints
    }

    pub fn without_basepoints(&self) -> QuandlePresentation {
        QuandlePresentation {
            generators: self.generators.clone(),
            relations: self.relations.clone(),
            basepoints: Vec::new(),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::from("gens:");
        for g in &self.generators {
            out.push(' ');
            out.push_str(g);
        }
        out.push('\n');
        for r in &self.relations {
            out.push_str(&format!("rel: {} = {}\n", r.lhs.render(), r.rhs.render()));
        }
        if !self.basepoints.is_empty() {
            out.push_str("base:");
            for b in &self.basepoints {
                out.push(' ');
                out.push_str(b);
            }
            out.push('\n');
        }
        out
    }

    /// The finest partition of the generators merging the base generator of
    /// each relation's left side with the base of its right side. Operator
    /// positions do not merge. For a diagram-derived presentation the
    /// blocks correspond one-to-one to the diagram's components.
    pub fn components(&self) -> Vec<Vec<String>> {
        let index = |token: &str| self.generators.iter().position(|g| g == token).unwrap();
        let mut parent: Vec<usize> = (0..self.generators.len()).collect();
        fn root(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for relation in &self.relations {
            let a = root(&mut parent, index(relation.lhs.base()));
            let b = root(&mut parent, index(relation.rhs.base()));
            parent[a.max(b)] = a.min(b);
        }
        let mut blocks: Vec<Vec<String>> = Vec::new();
        let mut block_of_root: Vec<Option<usize>> = vec![None; self.generators.len()];
        for i in 0..self.generators.len() {
            let r = root(&mut parent, i);
            let block = match block_of_root[r] {
                Some(b) => b,
                None => {
                    blocks.push(Vec::new());
                    block_of_root[r] = Some(blocks.len() - 1);
                    blocks.len() - 1
                }
            };
            blocks[block].push(self.generators[i].clone());
        }
        blocks
    }

    /// Removes redundant generators: while some relation defines a bare
    /// generator (`g = w` or `w = g`) that is not a basepoint, does not
    /// occur in `w`, and occurs in no other relation, drop the relation
    /// and the generator. Coloring counts into every finite quandle are
    /// unchanged.
    pub fn tietze_eliminate(&self) -> QuandlePresentation {
        let mut current = self.clone();
        loop {
            let mut eliminable: Option<(usize, String)> = None;
            'scan: for (ri, relation) in current.relations.iter().enumerate() {
                for (bare, other) in
                    [(&relation.lhs, &relation.rhs), (&relation.rhs, &relation.lhs)]
                {
                    let Some(g) = bare.as_bare() else { continue };
                    if current.basepoints.iter().any(|b| b == g) || other.mentions(g) {
                        continue;
                    }
                    let elsewhere = current
                        .relations
                        .iter()
                        .enumerate()
                        .any(|(rj, r)| rj != ri && r.mentions(g));
                    if !elsewhere {
                        eliminable = Some((ri, g.to_string()));
                        break 'scan;
                    }
                }
            }
            let Some((ri, g)) = eliminable else {
                return current;
            };
            current.relations.remove(ri);
            current.generators.retain(|t| *t != g);
        }
    }

    /// Closes the single open component along a caller-supplied shortcut:
    /// the under-pass sequence `(c_1, ε_1), ...` yields the relation
    /// `((h ◁^{ε_1} c_1) ◁^{ε_2} c_2)... = l` and the basepoints are
    /// cleared, leaving a presentation of the closed-up link's quandle.
    pub fn add_closure_relation(&self, shortcut: &[(String, Sign)]) -> Result<QuandlePresentation> {
        if self.basepoints.len() != 2 {
            return Err(Error::ArityMismatch { expected: 2, got: self.basepoints.len() });
        }
        for (arc, _) in shortcut {
            if !self.generators.contains(arc) {
                return Err(Error::UnknownArc { id: arc.clone() });
            }
        }
        let mut moved_head = QuandleWord::generator(self.basepoints[1].clone());
        for (arc, sign) in shortcut {
            moved_head = moved_head.quandled(arc.clone(), *sign);
        }
        let mut relations = self.relations.clone();
        relations.push(Relation::new(moved_head, QuandleWord::generator(self.basepoints[0].clone())));
        Ok(QuandlePresentation {
            generators: self.generators.clone(),
            relations,
            basepoints: Vec::new(),
        })
    }

    /// The presentation-level form of sliding an endpoint under a strand:
    /// one fresh generator `c`, one new relation tying it to the moved
    /// end-arc (`c = h ◁^ε over` at the head, `l = c ◁^ε over` at the
    /// leg), and the corresponding basepoint replaced by `c`. `component`
    /// selects the basepoint pair of an open component.
    pub fn omega_minus(
        &self,
        component: usize,
        end: End,
        over: &str,
        sign: Sign,
    ) -> Result<QuandlePresentation> {
        if !self.basepoints.len().is_multiple_of(2) || 2 * component + 1 >= self.basepoints.len() {
            return Err(Error::ArityMismatch {
                expected: 2 * (component + 1),
                got: self.basepoints.len(),
            });
        }
        if !self.generators.iter().any(|g| g == over) {
            return Err(Error::UnknownArc { id: over.to_string() });
        }
        let fresh = self.fresh_generator();
        let mut generators = self.generators.clone();
        generators.push(fresh.clone());
        let mut relations = self.relations.clone();
        let mut basepoints = self.basepoints.clone();
        match end {
            End::Head => {
                let head = basepoints[2 * component + 1].clone();
                relations.push(Relation::new(
                    QuandleWord::generator(fresh.clone()),
                    QuandleWord::generator(head).quandled(over, sign),
                ));
                basepoints[2 * component + 1] = fresh;
            }
            End::Leg => {
                let leg = basepoints[2 * component].clone();
                relations.push(Relation::new(
                    QuandleWord::generator(leg),
                    QuandleWord::generator(fresh.clone()).quandled(over, sign),
                ));
                basepoints[2 * component] = fresh;
            }
        }
        Ok(QuandlePresentation { generators, relations, basepoints })
    }

    /// First unused single letter, then `g1`, `g2`, ...
    fn fresh_generator(&self) -> String {
        for letter in 'a'..='z' {
            let candidate = letter.to_string();
            if !self.generators.contains(&candidate) {
                return candidate;
            }
        }
        (1..)
            .map(|i| format!("g{i}"))
            .find(|candidate| !self.generators.contains(candidate))
            .unwrap()
    }
}

impl fmt::Display for QuandlePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// One generator per arc, one relation per crossing, basepoints marking
/// the leg and head arcs of each open component in order.
pub fn fundamental_presentation(diagram: &LinkoidDiagram) -> QuandlePresentation {
    let arcs = diagram.arcs();
    let generators: Vec<String> = arcs.iter().map(|a| a.id.clone()).collect();

    // passage -> arc id, and per component the local arc list
    let mut arc_of_passage: std::collections::HashMap<(usize, usize), usize> =
        std::collections::HashMap::new();
    let mut arcs_of_component: Vec<Vec<usize>> = vec![Vec::new(); diagram.components().len()];
    for (global, arc) in arcs.iter().enumerate() {
        arcs_of_component[arc.component].push(global);
        for &p in &arc.passages {
            arc_of_passage.insert((arc.component, p), global);
        }
    }
    // where each crossing's over-passage sits
    let mut over_arc: std::collections::HashMap<&str, usize> = std::collections::HashMap::new();
    for (ci, component) in diagram.components().iter().enumerate() {
        for (pi, passage) in component.passages.iter().enumerate() {
            if passage.role == Role::Over {
                over_arc.insert(passage.crossing.as_str(), arc_of_passage[&(ci, pi)]);
            }
        }
    }

    let mut relations = Vec::new();
    for (ci, component) in diagram.components().iter().enumerate() {
        let locals = &arcs_of_component[ci];
        for (pi, passage) in component.passages.iter().enumerate() {
            if passage.role != Role::Under {
                continue;
            }
            let in_arc = arc_of_passage[&(ci, pi)];
            let local = locals.iter().position(|&g| g == in_arc).unwrap();
            let out_local = match component.kind {
                ComponentKind::Open => local + 1,
                ComponentKind::Closed => (local + 1) % locals.len(),
            };
            let out_arc = locals[out_local];
            let over = over_arc[passage.crossing.as_str()];
            relations.push(Relation::new(
                QuandleWord::generator(generators[out_arc].clone()),
                QuandleWord::generator(generators[in_arc].clone())
                    .quandled(generators[over].clone(), passage.sign),
            ));
        }
    }

    let mut basepoints = Vec::new();
    for (ci, component) in diagram.components().iter().enumerate() {
        if component.kind == ComponentKind::Open {
            let locals = &arcs_of_component[ci];
            basepoints.push(generators[locals[0]].clone());
            basepoints.push(generators[*locals.last().unwrap()].clone());
        }
    }

    QuandlePresentation::new(generators, relations, basepoints)
        .expect("diagram-derived presentations only mention their own arcs")
}

/// Parses the `gens:`/`rel:`/`base:` text format.
pub fn parse_presentation(text: &str) -> Result<QuandlePresentation> {
    let mut generators: Option<Vec<String>> = None;
    let mut relations = Vec::new();
    let mut basepoints: Option<Vec<String>> = None;
    for (line_idx, line) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("gens:") {
            if generators.is_some() {
                return Err(Error::Syntax { line: line_no, col: 1, msg: "duplicate gens: line".into() });
            }
            generators = Some(rest.split_whitespace().map(str::to_string).collect());
        } else if let Some(rest) = line.strip_prefix("rel:") {
            let eq = rest.find('=').ok_or(Error::Syntax {
                line: line_no,
                col: line.len(),
                msg: "relation needs '='".into(),
            })?;
            let lhs = parse_word(rest[..eq].trim(), line_no)?;
            let rhs = parse_word(rest[eq + 1..].trim(), line_no)?;
            relations.push(Relation::new(lhs, rhs));
        } else if let Some(rest) = line.strip_prefix("base:") {
            if basepoints.is_some() {
                return Err(Error::Syntax { line: line_no, col: 1, msg: "duplicate base: line".into() });
            }
            basepoints = Some(rest.split_whitespace().map(str::to_string).collect());
        } else {
            return Err(Error::Syntax {
                line: line_no,
                col: 1,
                msg: "expected 'gens:', 'rel:' or 'base:' prefix".into(),
            });
        }
    }
    let generators = generators.ok_or(Error::Syntax {
        line: text.lines().count() + 1,
        col: 1,
        msg: "missing gens: line".into(),
    })?;
    QuandlePresentation::new(generators, relations, basepoints.unwrap_or_default())
}

/// A word is `base` then `*g` (`◁ g`) or `/g` (`◁⁻¹ g`) segments,
/// left-nested; parentheses are not part of the grammar.
fn parse_word(text: &str, line: usize) -> Result<QuandleWord> {
    let syntax =
        |msg: String| Error::Syntax { line, col: 1, msg };
    let mut parts = text.split(['*', '/']);
    let base = parts.next().unwrap_or_default();
    if !valid_token(base) {
        return Err(syntax(format!("invalid word {text:?}: bad base token {base:?}")));
    }
    let mut word = QuandleWord::generator(base);
    let mut offset = base.len();
    for part in parts {
        let sign = match text.as_bytes()[offset] {
            b'*' => Sign::Positive,
            b'/' => Sign::Negative,
            _ => unreachable!("split positions alternate with separators"),
        };
        if !valid_token(part) {
            return Err(syntax(format!("invalid word {text:?}: bad token {part:?}")));
        }
        word = word.quandled(part, sign);
        offset += 1 + part.len();
    }
    Ok(word)
}
