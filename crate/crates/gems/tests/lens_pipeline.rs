//! End-to-end checks of the lens space crystallization construction:
//! frozen canonical codes, structural invariants across a parameter battery,
//! the hand-constructible decomposition, and text round trips.

mod common;

use common::{are_colour_isomorphic, lens};
use gems::code::{canonical_code, GemCode};
use gems::gemfile;
use gems::gm::lens_witness;
use gems::graph::ColouredGraph;
use gems::homology::{first_homology, AbelianGroup};
use gems::lens::{colour_swap_symmetry, LensParams, VertexLabel};
use std::collections::BTreeSet;

const CODE_2_1: &str = "8|1,0,5,6,7,2,3,4|2,5,0,7,6,1,4,3|3,6,7,0,5,4,1,2|4,7,6,5,0,3,2,1";
const CODE_3_1: &str = "12|1,0,5,6,8,2,3,10,4,11,7,9|2,5,0,7,9,1,10,3,11,4,6,8|3,6,8,0,5,4,1,11,2,10,9,7|4,7,9,5,0,3,11,1,10,2,8,6";

fn label_set(lc: &gems::lens::LabelledCrystallization, labels: &[VertexLabel]) -> BTreeSet<u32> {
    labels.iter().map(|&l| lc.vertex(l)).collect()
}

fn cycle_set(g: &ColouredGraph, colours: [u8; 2], through: u32) -> BTreeSet<u32> {
    let family = g.cycle_family(colours[0], colours[1]);
    family
        .cycle(family.cycle_of(through))
        .vertices()
        .iter()
        .copied()
        .collect()
}

#[test]
fn frozen_canonical_codes() {
    let g2 = lens(2, 1);
    let code2 = canonical_code(g2.graph()).unwrap();
    assert_eq!(code2.as_str(), CODE_2_1);
    assert!(are_colour_isomorphic(
        &GemCode::parse(CODE_2_1).unwrap().to_graph(),
        g2.graph()
    ));

    let g3 = lens(3, 1);
    let code3 = canonical_code(g3.graph()).unwrap();
    assert_eq!(code3.as_str(), CODE_3_1);
    assert!(are_colour_isomorphic(
        &GemCode::parse(CODE_3_1).unwrap().to_graph(),
        g3.graph()
    ));

    // The two builds are genuinely different manifolds, hence different codes.
    assert!(!are_colour_isomorphic(g2.graph(), g3.graph()));
}

#[test]
fn construction_battery_structure_and_homology() {
    for params in LensParams::normalized_range(25) {
        let lc = lens(params.p(), params.q() as i64);
        let g = lc.graph();
        let s = lc.continued_fraction().sum();
        assert_eq!(lc.order() as u64, 4 * s, "{params}");
        assert_eq!(lc.crossing_count() as u64, s, "{params}");
        assert!(g.is_crystallization(), "{params}");
        assert!(g.bipartition().is_some(), "{params}");
        assert!(lc.colour_swap_symmetry(), "{params}");
        assert_eq!(
            first_homology(g).unwrap(),
            AbelianGroup::cyclic(params.p()),
            "{params}"
        );
        let (p_back, q_back) = lc.continued_fraction().evaluate();
        assert_eq!((p_back, q_back), (params.p(), params.q()), "{params}");
    }
}

#[test]
fn witness_decomposition_battery() {
    for params in LensParams::normalized_range(25) {
        if params.p() < 3 {
            continue;
        }
        let lc = lens(params.p(), params.q() as i64);
        let g = lc.graph();
        let s = lc.continued_fraction().sum();
        let sets = lc.witness_index_sets().unwrap();
        assert_eq!(sets.crossings() as u64, s, "{params}");
        // Crossing 1 always lands in the inner set, crossing s in the outer
        // set, and every interior crossing in exactly one of the two.
        assert_eq!(
            sets.outer().len() + sets.inner().len(),
            s as usize,
            "{params}"
        );

        // The two cut cycles through v_{1,2} cover exactly the predicted set.
        let through = lc.vertex(VertexLabel::new(1, 2));
        let mut cut_union = cycle_set(g, [0, 2], through);
        cut_union.extend(cycle_set(g, [1, 3], through));
        assert_eq!(
            cut_union,
            label_set(&lc, &sets.expected_cut_union()),
            "{params}"
        );

        // The two short cycles through the last crossing close up as
        // predicted, mirror images of one another.
        let last = lc.crossing_count();
        assert_eq!(
            cycle_set(g, [1, 2], lc.vertex(VertexLabel::new(last, 1))),
            label_set(&lc, &sets.expected_inner_cycle()),
            "{params}"
        );
        assert_eq!(
            cycle_set(g, [0, 3], lc.vertex(VertexLabel::new(last, 3))),
            label_set(&lc, &sets.expected_inner_mirror()),
            "{params}"
        );

        // The cycle running along the crossing-free fourth line.
        let fourth = sets.expected_fourth_line_cycle();
        assert_eq!(
            cycle_set(g, [2, 3], lc.vertex(fourth[0])),
            label_set(&lc, &fourth),
            "{params}"
        );

        // The optimal-decomposition witness scores S - 3 and misses exactly
        // the predicted vertices.
        let witness = lens_witness(&lc).unwrap();
        assert_eq!(witness.score as u64, s - 3, "{params}");
        assert_eq!(
            witness.leftover.iter().copied().collect::<BTreeSet<u32>>(),
            label_set(&lc, &sets.expected_leftover()),
            "{params}"
        );
    }
}

#[test]
fn half_turn_symmetry_breaks_under_tampering() {
    let lc = lens(5, 2);
    let labels = lc.labels();
    assert_eq!(colour_swap_symmetry(lc.graph(), &labels), Ok(true));

    // Re-pair two disjoint colour-2 edges: (a,b),(c,d) -> (a,c),(b,d).
    // The mirror relation matches colour 2 against colour 3, so any change
    // to colour 2 alone must be detected.
    let mut tables = lc.graph().tables().clone();
    let a = 0u32;
    let b = tables[2][0];
    let c = (0..lc.order() as u32)
        .find(|&v| v != a && v != b && tables[2][v as usize] != a)
        .unwrap();
    let d = tables[2][c as usize];
    tables[2][a as usize] = c;
    tables[2][c as usize] = a;
    tables[2][b as usize] = d;
    tables[2][d as usize] = b;
    let tampered = ColouredGraph::from_involutions(tables).unwrap();
    assert_eq!(colour_swap_symmetry(&tampered, &labels), Ok(false));
}

#[test]
fn gem_text_round_trips() {
    for (p, q) in [(2, 1), (5, 2), (8, 3), (13, 5)] {
        let lc = lens(p, q);
        let text = lc.to_gem_text();
        let parsed = gemfile::parse(&text).unwrap();
        assert_eq!(parsed.graph.tables(), lc.graph().tables());
        assert_eq!(parsed.labels.as_deref(), Some(&lc.labels()[..]));
        // Rendering the parsed file reproduces the text byte for byte.
        assert_eq!(
            gemfile::render(&parsed.graph, parsed.labels.as_deref()),
            text
        );

        // A label-free file also round-trips.
        let bare = gemfile::render(lc.graph(), None);
        let reparsed = gemfile::parse(&bare).unwrap();
        assert_eq!(reparsed.graph.tables(), lc.graph().tables());
        assert_eq!(reparsed.labels, None);
    }
}
