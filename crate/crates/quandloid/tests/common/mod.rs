//! Shared fixtures and generators for the integration suites.
#![allow(dead_code)] // each test binary uses its own subset

use rand::prelude::*;
use rand::rngs::StdRng;

use quandloid::diagram::{Component, ComponentKind, LinkoidDiagram, Passage, Role, Sign};
use quandloid::presentation::{parse_presentation, QuandlePresentation};
use quandloid::{enumerate_quandles, FiniteQuandle};

/// Knotoid with three crossings representing the trefoil; arcs a..d, leg
/// arc a, head arc d.
pub const K1_PRES: &str = "gens: a b c d\nrel: b = a*c\nrel: c = b*a\nrel: d = c*b\nbase: a d\n";

/// Two-crossing knotoid with the same under-closure as the one above.
pub const K2_PRES: &str = "gens: a b c\nrel: b = a*c\nrel: c = b*a\nbase: a c\n";

/// 1-linkoid with one open and one closed component.
pub const L_PRES: &str =
    "gens: a b c d\nrel: c = d*b\nrel: a = b*c\nrel: d = c*a\nbase: a b\n";

pub const TRIVIAL_KNOTOID_PRES: &str = "gens: g\nbase: g g\n";

pub const TREFOIL_PRES: &str = "gens: a b c\nrel: b = a*c\nrel: c = b*a\nrel: a = c*b\n";

pub const K1_CODE: &str = "open: 2O+ 1U+ 3O+ 2U+ 1O+ 3U+";
pub const K2_CODE: &str = "open: 2O+ 1U+ 2U+ 1O+";
pub const L_CODE: &str = "open: 3O+ 1U- 2O+\nclosed: 2U+ 1O- 3U+";
pub const TRIVIAL_KNOTOID_CODE: &str = "open:";
pub const TREFOIL_CODE: &str = "closed: 1U+ 2O+ 3U+ 1O+ 2U+ 3O+";

pub fn pres(text: &str) -> QuandlePresentation {
    parse_presentation(text).unwrap()
}

/// All census quandles of orders `1..=max_order`, in census order.
pub fn census_up_to(max_order: usize) -> Vec<FiniteQuandle> {
    (1..=max_order).flat_map(|n| enumerate_quandles(n).unwrap()).collect()
}

/// A random valid extended Gauss code: every crossing contributes one over
/// and one under passage with a shared sign, scattered over the components
/// in random order. `ensure_open` guarantees at least one open component.
pub fn random_diagram(rng: &mut StdRng, max_crossings: usize, ensure_open: bool) -> LinkoidDiagram {
    let n_open = if ensure_open { rng.gen_range(1..=2) } else { rng.gen_range(0..=2usize) };
    let mut kinds = vec![ComponentKind::Open; n_open];
    kinds.extend(vec![ComponentKind::Closed; rng.gen_range(0..=1usize)]);
    if kinds.is_empty() {
        kinds.push(ComponentKind::Closed);
    }

    let crossings = rng.gen_range(0..=max_crossings);
    let mut passages: Vec<Passage> = Vec::new();
    for id in 1..=crossings {
        let sign = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
        passages.push(Passage { crossing: id.to_string(), role: Role::Over, sign });
        passages.push(Passage { crossing: id.to_string(), role: Role::Under, sign });
    }
    passages.shuffle(rng);

    let mut components: Vec<Component> =
        kinds.into_iter().map(|kind| Component { kind, passages: Vec::new() }).collect();
    for passage in passages {
        let slot = rng.gen_range(0..components.len());
        components[slot].passages.push(passage);
    }
    LinkoidDiagram::new(components).expect("constructed pairing is valid")
}
