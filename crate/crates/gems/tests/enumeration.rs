//! The exhaustive catalogue of small bipartite crystallizations: counts,
//! isomorph-freeness, invariant census, and determinism.

mod common;

use common::{are_colour_isomorphic, lens};
use gems::catalogue::{catalogue_index, enumerate_crystallizations, CatalogueEntry};
use gems::code::canonical_code;
use gems::Error;
use gems::homology::AbelianGroup;

fn by_order(entries: &[CatalogueEntry], order: usize) -> Vec<&CatalogueEntry> {
    entries.iter().filter(|e| e.order == order).collect()
}

#[test]
fn census_counts_up_to_order_eight() {
    let entries = enumerate_crystallizations(8).unwrap();
    assert_eq!(entries.len(), 13);
    assert_eq!(by_order(&entries, 2).len(), 1);
    assert_eq!(by_order(&entries, 4).len(), 1);
    assert_eq!(by_order(&entries, 6).len(), 2);
    assert_eq!(by_order(&entries, 8).len(), 9);

    // Exactly one entry has infinite homology (the orientable handle),
    // exactly one has two-torsion, and all the rest are simply spheres.
    let frees: Vec<_> = entries.iter().filter(|e| e.h1 == AbelianGroup::free(1)).collect();
    let torsions: Vec<_> = entries.iter().filter(|e| e.h1 == AbelianGroup::cyclic(2)).collect();
    let trivial = entries.iter().filter(|e| e.h1.is_trivial()).count();
    assert_eq!((frees.len(), torsions.len(), trivial), (1, 1, 11));
    assert_eq!(frees[0].order, 8);
    assert_eq!(torsions[0].order, 8);

    // The two-torsion entry is the doubled lens construction at its smallest.
    assert_eq!(
        torsions[0].code,
        canonical_code(lens(2, 1).graph()).unwrap()
    );

    // All thirteen have vanishing exhaustive complexity.
    assert!(entries.iter().all(|e| e.gm == 0));
    // Genus splits: handles need a torus, small spheres do not.
    assert!(entries
        .iter()
        .filter(|e| e.order <= 6)
        .all(|e| e.regular_genus == 0));
    assert_eq!(
        entries.iter().filter(|e| e.regular_genus == 1).count(),
        5
    );
}

#[test]
fn entries_are_isomorph_free_and_self_consistent() {
    let entries = enumerate_crystallizations(8).unwrap();
    let graphs: Vec<_> = entries.iter().map(|e| e.code.to_graph()).collect();
    for (i, g) in graphs.iter().enumerate() {
        assert!(g.is_crystallization(), "entry {i}");
        assert!(g.bipartition().is_some(), "entry {i}");
        assert_eq!(canonical_code(g).unwrap(), entries[i].code, "entry {i}");
        assert_eq!(g.cycle_counts(), entries[i].pair_counts, "entry {i}");
        for (j, h) in graphs.iter().enumerate().skip(i + 1) {
            assert!(!are_colour_isomorphic(g, h), "entries {i} and {j}");
        }
    }

    // Codes come out sorted, so the index is stable line by line.
    let index = catalogue_index(&entries);
    assert_eq!(index.lines().count(), 13);
    let mut lines: Vec<&str> = index.lines().collect();
    let original = lines.clone();
    lines.sort_unstable();
    assert_eq!(lines, original);
}

#[test]
fn smaller_bound_gives_a_prefix() {
    let small = enumerate_crystallizations(6).unwrap();
    let large = enumerate_crystallizations(8).unwrap();
    assert_eq!(small.len(), 4);
    assert_eq!(&large[..4], &small[..]);
    assert!(small.iter().all(|e| e.order <= 6));
}

#[test]
fn enumeration_is_deterministic() {
    let a = enumerate_crystallizations(8).unwrap();
    let b = enumerate_crystallizations(8).unwrap();
    assert_eq!(a, b);
}

#[test]
fn invalid_bounds_are_rejected() {
    for bad in [0usize, 1, 5, 9] {
        assert_eq!(
            enumerate_crystallizations(bad).unwrap_err(),
            Error::BadMaxOrder(bad)
        );
    }
}
