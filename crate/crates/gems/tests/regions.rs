//! The optimized region decomposition against an independent breadth-first
//! flood-fill oracle, across every partition and cut choice of a corpus.

mod common;

use common::{lens, oracle_gm, oracle_regions, oracle_score, random_connected_graph};
use gems::code::GemCode;
use gems::gm::{gm_analysis, region_decomposition};
use gems::graph::{ColouredGraph, PartitionPair};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn corpus() -> Vec<(String, ColouredGraph)> {
    let mut out = vec![(
        "sphere".to_string(),
        GemCode::parse("2|1,0|1,0|1,0|1,0").unwrap().to_graph(),
    )];
    for (p, q) in [(3, 1), (5, 2), (8, 3), (10, 3)] {
        out.push((format!("L({p},{q})"), lens(p, q).graph().clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in [8usize, 10, 12] {
        out.push((
            format!("random-{n}"),
            random_connected_graph(&mut rng, n),
        ));
    }
    out
}

/// Normalizes a region list for comparison: members sorted, regions ordered
/// by smallest member.
fn normalized(mut regions: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for r in &mut regions {
        r.sort_unstable();
    }
    regions.sort();
    regions
}

#[test]
fn decomposition_matches_flood_fill_everywhere() {
    for (name, g) in corpus() {
        for partition in PartitionPair::ALL {
            let first = g.cycle_family(partition.first()[0], partition.first()[1]);
            let second = g.cycle_family(partition.second()[0], partition.second()[1]);
            for d in 0..first.count() {
                for q in 0..second.count() {
                    let dec = region_decomposition(&g, partition, d, q).unwrap();
                    let expected = oracle_regions(&g, partition, d, q);
                    assert_eq!(
                        normalized(dec.regions.clone()),
                        normalized(expected.clone()),
                        "{name} {partition} D={d} D'={q}"
                    );

                    // Covered-vertex counts agree region by region.
                    for (i, region) in dec.regions.iter().enumerate() {
                        let score = g.order() - dec.covered_vertices(i).len();
                        assert_eq!(
                            score,
                            oracle_score(&g, partition, d, q, region),
                            "{name} {partition} D={d} D'={q} region {i}"
                        );
                    }

                    // region_of_face is the inverse of the region lists.
                    for (i, region) in dec.regions.iter().enumerate() {
                        for &f in region {
                            assert_eq!(dec.region_of_face(f), i, "{name}");
                        }
                    }

                    // Every face is in exactly one region.
                    let total: usize = dec.regions.iter().map(Vec::len).sum();
                    assert_eq!(total, dec.faces.len(), "{name}");
                }
            }
        }
    }
}

#[test]
fn exhaustive_search_matches_flood_fill_minimum() {
    for (name, g) in corpus() {
        if !g.is_crystallization() {
            continue;
        }
        let analysis = gm_analysis(&g).unwrap();
        assert_eq!(analysis.complexity, oracle_gm(&g), "{name}");
        // The reported witness realises the reported complexity.
        assert_eq!(analysis.witness.score, analysis.complexity, "{name}");
        assert_eq!(
            analysis.witness.leftover.len(),
            analysis.complexity,
            "{name}"
        );
        // Each per-partition outcome is no better than the global optimum,
        // and at least one attains it.
        assert!(analysis
            .per_partition
            .iter()
            .all(|o| o.score >= analysis.complexity));
        assert!(analysis
            .per_partition
            .iter()
            .any(|o| o.score == analysis.complexity));
    }
}

#[test]
fn faces_carry_their_colour_pairs() {
    let g = lens(5, 2).graph().clone();
    for partition in PartitionPair::ALL {
        let dec = region_decomposition(&g, partition, 0, 0).unwrap();
        let families = partition.face_families();
        // Faces appear family by family, in the published family order.
        let mut seen_slots = Vec::new();
        for face in &dec.faces {
            let slot = families
                .iter()
                .position(|&pair| pair == face.colours())
                .unwrap();
            seen_slots.push(slot);
        }
        let mut sorted = seen_slots.clone();
        sorted.sort_unstable();
        assert_eq!(seen_slots, sorted, "{partition}");

        // Every vertex lies on exactly one face of each family.
        for slot in 0..4 {
            let mut count = vec![0usize; g.order()];
            for face in dec.faces.iter().filter(|f| {
                families.iter().position(|&p| p == f.colours()).unwrap() == slot
            }) {
                for &v in face.vertices() {
                    count[v as usize] += 1;
                }
            }
            assert!(count.iter().all(|&c| c == 1), "{partition} family {slot}");
        }
    }
}
