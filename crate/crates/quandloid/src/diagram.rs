//! Linkoid diagrams as extended Gauss codes.
//!
//! A diagram is an ordered list of components, each open (read leg to
//! head) or closed, holding an ordered list of crossing passages. Every
//! crossing id appears exactly twice in the diagram, once over and once
//! under, with the same sign at both passages.
//!
//! The text format is one component per line:
//!
//! ```text
//! open: 2O+ 1U+ 2U+ 1O+
//! closed: 1U+ 2O+ 3U+ 1O+ 2U+ 3O+
//! ```
//!
//! where each token is `<crossing_id><O|U><+|->` and crossing ids are
//! arbitrary alphanumeric tokens.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Over,
    Under,
}

/// Crossing sign; also used as the exponent `±1` in quandle words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.value())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match i8::deserialize(d)? {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            other => Err(serde::de::Error::custom(format!("sign must be 1 or -1, got {other}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    Open,
    Closed,
}

/// One traversal of a crossing by a strand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Passage {
    pub crossing: String,
    pub role: Role,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub kind: ComponentKind,
    pub passages: Vec<Passage>,
}

/// An end of an open component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum End {
    Leg,
    Head,
}

/// A validated linkoid diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram", into = "RawDiagram")]
pub struct LinkoidDiagram {
    components: Vec<Component>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawDiagram {
    components: Vec<Component>,
}

impl TryFrom<RawDiagram> for LinkoidDiagram {
    type Error = Error;
    fn try_from(raw: RawDiagram) -> Result<Self> {
        LinkoidDiagram::new(raw.components)
    }
}

impl From<LinkoidDiagram> for RawDiagram {
    fn from(d: LinkoidDiagram) -> RawDiagram {
        RawDiagram { components: d.components }
    }
}

impl LinkoidDiagram {
    /// Validates the crossing pairing: every id twice, once over and once
    /// under, same sign at both passages.
    pub fn new(components: Vec<Component>) -> Result<Self> {
        let mut by_id: BTreeMap<&str, Vec<&Passage>> = BTreeMap::new();
        for component in &components {
            for passage in &component.passages {
                by_id.entry(&passage.crossing).or_default().push(passage);
            }
        }
        for (id, passages) in by_id {
            if passages.len() != 2 {
                return Err(Error::CrossingParity { id: id.to_string(), count: passages.len() });
            }
            if passages[0].role == passages[1].role {
                return Err(Error::RoleConflict { id: id.to_string() });
            }
            if passages[0].sign != passages[1].sign {
                return Err(Error::SignConflict { id: id.to_string() });
            }
        }
        Ok(LinkoidDiagram { components })
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn crossing_count(&self) -> usize {
        self.components.iter().map(|c| c.passages.len()).sum::<usize>() / 2
    }

    /// Serializes back to the text format; `parse_diagram` inverts this.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for component in &self.components {
            match component.kind {
                ComponentKind::Open => out.push_str("open:"),
                ComponentKind::Closed => out.push_str("closed:"),
            }
            for p in &component.passages {
                let role = match p.role {
                    Role::Over => 'O',
                    Role::Under => 'U',
                };
                out.push(' ');
                out.push_str(&p.crossing);
                out.push(role);
                out.push(p.sign.symbol());
            }
            out.push('\n');
        }
        out
    }

    /// The arcs of every component, in component order and walk order
    /// within each component.
    pub fn arcs(&self) -> Vec<Arc> {
        let mut arcs = Vec::new();
        for (ci, component) in self.components.iter().enumerate() {
            let len = component.passages.len();
            let unders: Vec<usize> = (0..len)
                .filter(|&i| component.passages[i].role == Role::Under)
                .collect();
            let spans: Vec<Vec<usize>> = match component.kind {
                ComponentKind::Open => {
                    // arcs break at under-passages and at both endpoints;
                    // each arc's span ends with its under-passage
                    let mut spans = Vec::new();
                    let mut start = 0;
                    for &u in &unders {
                        spans.push((start..=u).collect());
                        start = u + 1;
                    }
                    spans.push((start..len).collect());
                    spans
                }
                ComponentKind::Closed => {
                    if unders.is_empty() {
                        // a circle with only over-passages is one arc
                        vec![(0..len).collect()]
                    } else {
                        // arc j runs from just after under j-1 (cyclically)
                        // up to and including under j
                        let m = unders.len();
                        (0..m)
                            .map(|j| {
                                let prev = unders[(j + m - 1) % m];
                                let this = unders[j];
                                if j == 0 {
                                    (prev + 1..len).chain(0..=this).collect()
                                } else {
                                    (prev + 1..=this).collect()
                                }
                            })
                            .collect()
                    }
                }
            };
            for (ai, span) in spans.into_iter().enumerate() {
                arcs.push(Arc { id: format!("c{ci}a{ai}"), component: ci, passages: span });
            }
        }
        arcs
    }

    /// Appends a crossing at an end of an open component: the endpoint
    /// strand passes under the strand of `over_arc` with the given sign.
    /// `over_arc` may be any existing arc of the diagram.
    pub fn apply_omega_minus(
        &self,
        component: usize,
        end: End,
        over_arc: &str,
        sign: Sign,
    ) -> Result<LinkoidDiagram> {
        let open = self
            .components
            .get(component)
            .filter(|c| c.kind == ComponentKind::Open)
            .ok_or(Error::NotOpenComponent { index: component })?;
        let _ = open;
        let arcs = self.arcs();
        let arc = arcs
            .iter()
            .find(|a| a.id == over_arc)
            .ok_or_else(|| Error::UnknownArc { id: over_arc.to_string() })?;
        let id = fresh_crossing_ids(self, 1).pop().unwrap();

        let mut components = self.components.clone();
        // the over-passage goes at the end of the over-arc: just before the
        // arc's terminating under-passage, or at the end of the component
        // when the arc has none
        let over_pos = match arc.passages.last() {
            Some(&last)
                if self.components[arc.component].passages[last].role == Role::Under =>
            {
                last
            }
            _ => self.components[arc.component].passages.len(),
        };
        components[arc.component].passages.insert(
            over_pos,
            Passage { crossing: id.clone(), role: Role::Over, sign },
        );
        let under = Passage { crossing: id, role: Role::Under, sign };
        match end {
            End::Head => components[component].passages.push(under),
            End::Leg => components[component].passages.insert(0, under),
        }
        LinkoidDiagram::new(components)
    }

    /// Inserts a kink at a passage gap: one new crossing traversed twice in
    /// a row by the same strand.
    pub fn apply_r1(
        &self,
        component: usize,
        gap: usize,
        sign: Sign,
        over_first: bool,
    ) -> Result<LinkoidDiagram> {
        let len = self
            .components
            .get(component)
            .map(|c| c.passages.len())
            .ok_or(Error::InvalidPosition { pos: component, len: self.components.len() })?;
        if gap > len {
            return Err(Error::InvalidPosition { pos: gap, len });
        }
        let id = fresh_crossing_ids(self, 1).pop().unwrap();
        let (first, second) = if over_first {
            (Role::Over, Role::Under)
        } else {
            (Role::Under, Role::Over)
        };
        let mut components = self.components.clone();
        components[component]
            .passages
            .insert(gap, Passage { crossing: id.clone(), role: second, sign });
        components[component].passages.insert(gap, Passage { crossing: id, role: first, sign });
        LinkoidDiagram::new(components)
    }

    /// Slides one strand over another: two new crossings of opposite sign
    /// where the strand at `(comp_a, gap_a)` passes over the strand at
    /// `(comp_b, gap_b)` twice. The first crossing takes `sign`, the second
    /// its opposite. For a self-move the two gaps must differ.
    pub fn apply_r2(
        &self,
        comp_a: usize,
        gap_a: usize,
        comp_b: usize,
        gap_b: usize,
        sign: Sign,
    ) -> Result<LinkoidDiagram> {
        let len_a = self
            .components
            .get(comp_a)
            .map(|c| c.passages.len())
            .ok_or(Error::InvalidPosition { pos: comp_a, len: self.components.len() })?;
        let len_b = self
            .components
            .get(comp_b)
            .map(|c| c.passages.len())
            .ok_or(Error::InvalidPosition { pos: comp_b, len: self.components.len() })?;
        if gap_a > len_a {
            return Err(Error::InvalidPosition { pos: gap_a, len: len_a });
        }
        if gap_b > len_b {
            return Err(Error::InvalidPosition { pos: gap_b, len: len_b });
        }
        if comp_a == comp_b && gap_a == gap_b {
            return Err(Error::InvalidPosition { pos: gap_b, len: len_b });
        }
        let ids = fresh_crossing_ids(self, 2);
        let (x, y) = (ids[0].clone(), ids[1].clone());

        let mut components = self.components.clone();
        let mut insert_pair = |comp: usize, gap: usize, role: Role| {
            components[comp].passages.insert(
                gap,
                Passage { crossing: y.clone(), role, sign: sign.flip() },
            );
            components[comp]
                .passages
                .insert(gap, Passage { crossing: x.clone(), role, sign });
        };
        // insert at the larger gap first so the smaller gap keeps its index
        if comp_a == comp_b {
            if gap_a > gap_b {
                insert_pair(comp_a, gap_a, Role::Over);
                insert_pair(comp_b, gap_b, Role::Under);
            } else {
                insert_pair(comp_b, gap_b, Role::Under);
                insert_pair(comp_a, gap_a, Role::Over);
            }
        } else {
            insert_pair(comp_a, gap_a, Role::Over);
            insert_pair(comp_b, gap_b, Role::Under);
        }
        LinkoidDiagram::new(components)
    }
}

impl fmt::Display for LinkoidDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A maximal run of passages with no under-passage in its interior. The
/// span lists passage indices within the owning component, in walk order;
/// when the arc terminates at an under-passage that index is the last
/// entry. Head arcs of open components may have an empty span.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    pub id: String,
    pub component: usize,
    pub passages: Vec<usize>,
}

/// Decimal ids not yet used by any crossing of the diagram, smallest first.
fn fresh_crossing_ids(d: &LinkoidDiagram, count: usize) -> Vec<String> {
    let used: std::collections::BTreeSet<&str> = d
        .components
        .iter()
        .flat_map(|c| c.passages.iter().map(|p| p.crossing.as_str()))
        .collect();
    let mut out = Vec::with_capacity(count);
    let mut next = 1u64;
    while out.len() < count {
        let candidate = next.to_string();
        if !used.contains(candidate.as_str()) {
            out.push(candidate);
        }
        next += 1;
    }
    out
}

/// Parses the component-per-line text format, reporting 1-based line and
/// column positions on failure.
pub fn parse_diagram(text: &str) -> Result<LinkoidDiagram> {
    let mut components = Vec::new();
    for (line_idx, line) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let (kind, rest, rest_col) = if let Some(rest) = line.strip_prefix("open:") {
            (ComponentKind::Open, rest, "open:".len())
        } else if let Some(rest) = line.strip_prefix("closed:") {
            (ComponentKind::Closed, rest, "closed:".len())
        } else {
            return Err(Error::Syntax {
                line: line_no,
                col: 1,
                msg: "expected 'open:' or 'closed:' prefix".into(),
            });
        };
        let mut passages = Vec::new();
        let mut col = rest_col;
        for token in rest.split(' ') {
            let token_col = col + 1;
            col += token.len() + 1;
            if token.is_empty() {
                continue;
            }
            passages.push(parse_passage(token, line_no, token_col)?);
        }
        components.push(Component { kind, passages });
    }
    LinkoidDiagram::new(components)
}

fn parse_passage(token: &str, line: usize, col: usize) -> Result<Passage> {
    let syntax = |msg: &str| Error::Syntax { line, col, msg: msg.to_string() };
    if token.len() < 3 {
        return Err(syntax("passage token must be <crossing_id><O|U><+|->"));
    }
    let sign = match token.as_bytes()[token.len() - 1] {
        b'+' => Sign::Positive,
        b'-' => Sign::Negative,
        _ => return Err(syntax("passage token must end in '+' or '-'")),
    };
    let role = match token.as_bytes()[token.len() - 2] {
        b'O' => Role::Over,
        b'U' => Role::Under,
        _ => return Err(syntax("expected role 'O' or 'U' before the sign")),
    };
    let id = &token[..token.len() - 2];
    if !id.chars().all(|c| c.is_ascii_alphanumeric()) {
        return Err(syntax("crossing id must be alphanumeric"));
    }
    Ok(Passage { crossing: id.to_string(), role, sign })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "closed: 1U+ 2O+ 3U+ 1O+ 2U+ 3O+";

    #[test]
    fn parses_a_trefoil_code() {
        let d = parse_diagram(TREFOIL).unwrap();
        assert_eq!(d.components().len(), 1);
        assert_eq!(d.components()[0].kind, ComponentKind::Closed);
        assert_eq!(d.crossing_count(), 3);
    }

    #[test]
    fn parses_the_trivial_knotoid() {
        let d = parse_diagram("open: ").unwrap();
        assert_eq!(d.components().len(), 1);
        assert!(d.components()[0].passages.is_empty());
        let arcs = d.arcs();
        assert_eq!(arcs.len(), 1);
        assert_eq!(arcs[0].id, "c0a0");
    }

    #[test]
    fn rejects_unpaired_crossings() {
        assert_eq!(
            parse_diagram("open: 1U+").unwrap_err(),
            Error::CrossingParity { id: "1".into(), count: 1 }
        );
        assert_eq!(
            parse_diagram("open: 1U+ 1U+").unwrap_err(),
            Error::RoleConflict { id: "1".into() }
        );
        assert_eq!(
            parse_diagram("open: 1U+ 1O-").unwrap_err(),
            Error::SignConflict { id: "1".into() }
        );
    }

    #[test]
    fn reports_syntax_positions() {
        match parse_diagram("open: 1U+ 2X+ 1O+").unwrap_err() {
            Error::Syntax { line, col, .. } => {
                assert_eq!(line, 1);
                assert_eq!(col, 11);
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(
            parse_diagram("loop: 1U+ 1O+"),
            Err(Error::Syntax { line: 1, col: 1, .. })
        ));
    }

    #[test]
    fn render_round_trips() {
        for text in [TREFOIL, "open: 2O+ 1U+ 2U+ 1O+", "open: 3O+ 1U- 2O+\nclosed: 2U+ 1O- 3U+", "open:"] {
            let d = parse_diagram(text).unwrap();
            assert_eq!(parse_diagram(&d.render()).unwrap(), d);
        }
    }

    #[test]
    fn trefoil_arcs() {
        let d = parse_diagram(TREFOIL).unwrap();
        let arcs = d.arcs();
        assert_eq!(arcs.len(), 3);
        assert_eq!(arcs[0].passages, vec![5, 0]); // wraps past the end
        assert_eq!(arcs[1].passages, vec![1, 2]);
        assert_eq!(arcs[2].passages, vec![3, 4]);
    }

    #[test]
    fn arc_counts_follow_under_passages() {
        // open component with 2 unders and an over: 3 arcs
        let d = parse_diagram("open: 1U+ 2U- 1O+\nclosed: 2O-").unwrap();
        let arcs = d.arcs();
        let open_arcs: Vec<_> = arcs.iter().filter(|a| a.component == 0).collect();
        assert_eq!(open_arcs.len(), 3);
        assert!(open_arcs[2].passages.contains(&2));
        // closed component with no unders: one circular arc
        let closed_arcs: Vec<_> = arcs.iter().filter(|a| a.component == 1).collect();
        assert_eq!(closed_arcs.len(), 1);
    }

    #[test]
    fn omega_minus_at_the_head_builds_the_longer_knotoid() {
        let d = parse_diagram("open: 2O+ 1U+ 2U+ 1O+").unwrap();
        let moved = d.apply_omega_minus(0, End::Head, "c0a1", Sign::Positive).unwrap();
        assert_eq!(moved.render().trim(), "open: 2O+ 1U+ 3O+ 2U+ 1O+ 3U+");
    }

    #[test]
    fn omega_minus_on_the_trivial_knotoid() {
        let d = parse_diagram("open:").unwrap();
        let moved = d.apply_omega_minus(0, End::Head, "c0a0", Sign::Negative).unwrap();
        assert_eq!(moved.render().trim(), "open: 1O- 1U-");
        // and at the leg: the new crossing comes first
        let moved = d.apply_omega_minus(0, End::Leg, "c0a0", Sign::Positive).unwrap();
        assert_eq!(moved.render().trim(), "open: 1U+ 1O+");
    }

    #[test]
    fn omega_minus_rejects_bad_targets() {
        let d = parse_diagram(TREFOIL).unwrap();
        assert_eq!(
            d.apply_omega_minus(0, End::Head, "c0a0", Sign::Positive).unwrap_err(),
            Error::NotOpenComponent { index: 0 }
        );
        let d = parse_diagram("open:").unwrap();
        assert_eq!(
            d.apply_omega_minus(0, End::Head, "c9a9", Sign::Positive).unwrap_err(),
            Error::UnknownArc { id: "c9a9".into() }
        );
    }

    #[test]
    fn r1_inserts_a_kink() {
        let d = parse_diagram("open:").unwrap();
        let kinked = d.apply_r1(0, 0, Sign::Positive, true).unwrap();
        assert_eq!(kinked.render().trim(), "open: 1O+ 1U+");
        let kinked = d.apply_r1(0, 0, Sign::Negative, false).unwrap();
        assert_eq!(kinked.render().trim(), "open: 1U- 1O-");
        assert!(matches!(d.apply_r1(0, 1, Sign::Positive, true), Err(Error::InvalidPosition { .. })));
        assert!(matches!(d.apply_r1(1, 0, Sign::Positive, true), Err(Error::InvalidPosition { .. })));
    }

    #[test]
    fn r2_slides_one_strand_over_another() {
        let d = parse_diagram("open: 1U+ 1O+\nopen:").unwrap();
        let moved = d.apply_r2(0, 1, 1, 0, Sign::Positive).unwrap();
        assert_eq!(moved.render().trim(), "open: 1U+ 2O+ 3O- 1O+\nopen: 2U+ 3U-");
        // self-move on one component
        let line = parse_diagram("open:").unwrap();
        let moved = line.apply_r2(0, 0, 0, 0, Sign::Positive);
        assert!(matches!(moved, Err(Error::InvalidPosition { .. })));
    }

    #[test]
    fn fresh_ids_skip_existing_ones() {
        let d = parse_diagram("open: 1U+ 3O- 1O+ 3U-").unwrap();
        assert_eq!(fresh_crossing_ids(&d, 2), vec!["2".to_string(), "4".to_string()]);
    }

    #[test]
    fn diagram_json_round_trip() {
        let d = parse_diagram("open: 2O+ 1U- 2U+ 1O-").unwrap();
        let text = serde_json::to_string(&d).unwrap();
        let back: LinkoidDiagram = serde_json::from_str(&text).unwrap();
        assert_eq!(back, d);
        // an invalid pairing is rejected on deserialization
        let bad = r#"{"components":[{"kind":"open","passages":[{"crossing":"1","role":"under","sign":1}]}]}"#;
        assert!(serde_json::from_str::<LinkoidDiagram>(bad).is_err());
    }
}
