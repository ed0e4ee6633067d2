//! Census-wide structural invariants and randomized diagram properties
//! that sit outside the acceptance checklist.

mod common;

use rand::prelude::*;
use rand::rngs::StdRng;

use common::*;
use quandloid::coloring::{counting_invariant, pointed_counting_invariant};
use quandloid::diagram::{parse_diagram, ComponentKind, Role};
use quandloid::partitions::{partition_count, Cardinality};
use quandloid::pointed::{
    class_count_burnside, is_n_homogeneous, is_two_point_homogeneous, orbit_classes,
    pointed_isomorphic, PointedQuandle,
};
use quandloid::presentation::fundamental_presentation;
use quandloid::FiniteQuandle;

#[test]
fn inner_group_is_a_subgroup_of_the_automorphisms() {
    for q in census_up_to(4) {
        let aut = q.automorphism_group().unwrap();
        assert!(q.inner_group().is_subgroup_of(&aut), "order {}", q.size());
    }
}

#[test]
fn connected_implies_homogeneous() {
    for q in census_up_to(5) {
        if q.is_connected() {
            assert!(
                q.is_homogeneous().unwrap(),
                "connected quandle of order {} must be homogeneous",
                q.size()
            );
        }
    }
}

#[test]
fn class_count_dominates_the_pattern_bound() {
    for q in census_up_to(4) {
        let k = Cardinality::Finite(q.size() as u64);
        for n in 0..=3 {
            let classes = class_count_burnside(&q, n).unwrap();
            let bound = partition_count(0, n as u64, k).unwrap();
            assert!(classes >= bound, "order {} n {}", q.size(), n);
        }
    }
}

#[test]
fn homogeneity_is_monotone_in_the_arity() {
    for q in census_up_to(4) {
        for n in (1..=4usize).rev() {
            if is_n_homogeneous(&q, n).unwrap() {
                for m in 1..n {
                    assert!(
                        is_n_homogeneous(&q, m).unwrap(),
                        "order {}: {}-homogeneous but not {}-homogeneous",
                        q.size(),
                        n,
                        m
                    );
                }
            }
        }
    }
}

#[test]
fn two_point_homogeneous_implies_connected() {
    for q in census_up_to(5) {
        if is_two_point_homogeneous(&q) {
            assert!(q.is_connected(), "order {}", q.size());
        }
    }
}

#[test]
fn orbit_representatives_have_minimal_patterns() {
    // each representative is the lex-least of its orbit, so representatives
    // of distinct orbits never repeat
    for q in census_up_to(4) {
        for n in 0..=3 {
            let reps = orbit_classes(&q, n).unwrap();
            let mut sorted = reps.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted, reps);
        }
    }
}

#[test]
fn isomorphic_pointed_quandles_count_alike() {
    let fixtures = [pres(K1_PRES), pres(K2_PRES), pres(L_PRES)];
    for q in census_up_to(3) {
        let reps = orbit_classes(&q, 2).unwrap();
        let aut = q.automorphism_group().unwrap();
        for rep in reps {
            let base = PointedQuandle::new(q.clone(), rep.clone()).unwrap();
            for g in aut.elements() {
                let image: Vec<usize> = rep.iter().map(|&b| g.apply(b)).collect();
                let moved = PointedQuandle::new(q.clone(), image).unwrap();
                assert!(pointed_isomorphic(&base, &moved).unwrap().is_some());
                for p in &fixtures {
                    assert_eq!(
                        pointed_counting_invariant(p, &base).unwrap(),
                        pointed_counting_invariant(p, &moved).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn random_codes_round_trip_through_text_and_json() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..200 {
        let d = random_diagram(&mut rng, 6, false);
        assert_eq!(parse_diagram(&d.render()).unwrap(), d);
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(serde_json::from_str::<quandloid::LinkoidDiagram>(&json).unwrap(), d);
    }
}

#[test]
fn arc_counts_track_under_passages() {
    let mut rng = StdRng::seed_from_u64(8);
    for _ in 0..200 {
        let d = random_diagram(&mut rng, 6, false);
        let arcs = d.arcs();
        for (ci, component) in d.components().iter().enumerate() {
            let unders =
                component.passages.iter().filter(|p| p.role == Role::Under).count();
            let expected = match component.kind {
                ComponentKind::Open => unders + 1,
                ComponentKind::Closed => unders.max(1),
            };
            let count = arcs.iter().filter(|a| a.component == ci).count();
            assert_eq!(count, expected, "component {ci} of {}", d.render());
        }
    }
}

#[test]
fn presentations_mirror_their_diagrams() {
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..200 {
        let d = random_diagram(&mut rng, 6, false);
        let p = fundamental_presentation(&d);
        assert_eq!(p.generators().len(), d.arcs().len());
        assert_eq!(p.relations().len(), d.crossing_count());
        let open = d
            .components()
            .iter()
            .filter(|c| c.kind == ComponentKind::Open)
            .count();
        assert_eq!(p.basepoints().len(), 2 * open);
        // one block of generators per diagram component
        assert_eq!(p.components().len(), d.components().len(), "{}", d.render());
    }
}

#[test]
fn elimination_preserves_counts_after_moves() {
    let mut rng = StdRng::seed_from_u64(10);
    let targets = [
        FiniteQuandle::trivial(3).unwrap(),
        FiniteQuandle::dihedral(3).unwrap(),
        FiniteQuandle::v3(),
        FiniteQuandle::tetrahedron(),
    ];
    for code in [K1_CODE, K2_CODE, L_CODE, TRIVIAL_KNOTOID_CODE, TREFOIL_CODE] {
        let d = parse_diagram(code).unwrap();
        let kinked = {
            let comp = rng.gen_range(0..d.components().len());
            let gap = rng.gen_range(0..=d.components()[comp].passages.len());
            d.apply_r1(comp, gap, quandloid::Sign::Positive, rng.gen_bool(0.5)).unwrap()
        };
        // slide the start of the first component over the end of the last,
        // when the gaps are distinct
        let last = d.components().len() - 1;
        let slid = (last > 0 || !d.components()[0].passages.is_empty()).then(|| {
            d.apply_r2(0, 0, last, d.components()[last].passages.len(), quandloid::Sign::Negative)
                .unwrap()
        });
        for source in [Some(&d), Some(&kinked), slid.as_ref()].into_iter().flatten() {
            let p = fundamental_presentation(source);
            let reduced = p.tietze_eliminate();
            let fully_reduced = p.without_basepoints().tietze_eliminate();
            for q in &targets {
                let reference = counting_invariant(&p, q);
                assert_eq!(counting_invariant(&reduced, q), reference);
                assert_eq!(counting_invariant(&fully_reduced, q), reference);
            }
        }
    }
}

#[test]
fn kink_then_elimination_collapses_the_trivial_knotoid() {
    let d = parse_diagram(TRIVIAL_KNOTOID_CODE).unwrap();
    for over_first in [true, false] {
        let kinked = d.apply_r1(0, 0, quandloid::Sign::Positive, over_first).unwrap();
        let p = fundamental_presentation(&kinked).without_basepoints();
        for q in census_up_to(4) {
            assert_eq!(counting_invariant(&p, &q), q.size() as u64);
        }
        if over_first {
            // the kink relation defines the head arc outright, so the
            // reduced presentation is one free generator
            let reduced = p.tietze_eliminate();
            assert_eq!(reduced.generators().len(), 1);
            assert!(reduced.relations().is_empty());
        }
    }
}

#[test]
fn under_move_over_the_single_arc_of_the_trivial_knotoid() {
    let d = parse_diagram(TRIVIAL_KNOTOID_CODE).unwrap();
    for sign in [quandloid::Sign::Positive, quandloid::Sign::Negative] {
        let moved = d.apply_omega_minus(0, quandloid::End::Head, "c0a0", sign).unwrap();
        let p = fundamental_presentation(&moved);
        // one extra generator and the single relation c = g ◁^ε g, which
        // idempotence collapses, so every target still has |X| colorings
        assert_eq!(p.generators().len(), 2);
        assert_eq!(p.relations().len(), 1);
        assert_eq!(p.relations()[0].lhs.render(), "c0a1");
        assert_eq!(p.basepoints(), &["c0a0", "c0a1"]);
        for q in census_up_to(4) {
            assert_eq!(counting_invariant(&p, &q), q.size() as u64);
        }
    }
}

#[test]
fn closure_with_empty_shortcut_matches_the_matrix_trace() {
    for code in [K1_CODE, K2_CODE, L_CODE, TRIVIAL_KNOTOID_CODE] {
        let p = fundamental_presentation(&parse_diagram(code).unwrap());
        let closed = p.add_closure_relation(&[]).unwrap();
        for q in census_up_to(3) {
            let m = quandloid::counting_matrix(&p, &q).unwrap();
            assert_eq!(counting_invariant(&closed, &q), m.trace(), "{code}");
        }
    }
}

#[test]
fn closing_the_short_knotoid_recovers_the_knot_count() {
    // the two-crossing knotoid closes up along its shortcut to the same
    // knot the three-crossing one closes to
    let k2 = pres(K2_PRES);
    let closed =
        k2.add_closure_relation(&[("b".to_string(), quandloid::Sign::Positive)]).unwrap();
    let r3 = FiniteQuandle::dihedral(3).unwrap();
    assert_eq!(counting_invariant(&closed, &r3), 9);
    assert_eq!(
        closed.relations().last().map(|r| (r.lhs.render(), r.rhs.render())),
        Some(("c*b".to_string(), "a".to_string()))
    );
}

#[test]
fn under_move_on_code_matches_presentation_level_move() {
    let k2_code = parse_diagram(K2_CODE).unwrap();
    let moved = k2_code
        .apply_omega_minus(0, quandloid::End::Head, "c0a1", quandloid::Sign::Positive)
        .unwrap();
    let from_diagram = fundamental_presentation(&moved);

    let from_presentation = fundamental_presentation(&k2_code)
        .omega_minus(0, quandloid::End::Head, "c0a1", quandloid::Sign::Positive)
        .unwrap();

    // same shape up to the fresh generator's name
    assert_eq!(from_diagram.relations().len(), from_presentation.relations().len());
    for q in census_up_to(4) {
        assert_eq!(
            counting_invariant(&from_diagram, &q),
            counting_invariant(&from_presentation, &q)
        );
        let pointed: Vec<u64> = (0..q.size())
            .flat_map(|i| (0..q.size()).map(move |j| (i, j)))
            .map(|(i, j)| {
                let t = PointedQuandle::new(q.clone(), vec![i, j]).unwrap();
                pointed_counting_invariant(&from_diagram, &t).unwrap()
            })
            .collect();
        let pointed_pres: Vec<u64> = (0..q.size())
            .flat_map(|i| (0..q.size()).map(move |j| (i, j)))
            .map(|(i, j)| {
                let t = PointedQuandle::new(q.clone(), vec![i, j]).unwrap();
                pointed_counting_invariant(&from_presentation, &t).unwrap()
            })
            .collect();
        assert_eq!(pointed, pointed_pres);
    }
}

#[test]
fn pattern_count_is_stable_in_k_beyond_n() {
    for n in 0..=8u64 {
        let reference = partition_count(0, n, Cardinality::Unbounded).unwrap();
        for k in [n, n + 1, n + 2] {
            assert_eq!(partition_count(0, n, Cardinality::Finite(k)).unwrap(), reference);
        }
    }
}
