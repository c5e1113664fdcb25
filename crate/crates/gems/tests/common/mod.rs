//! Shared helpers for the integration suites: independent oracles kept
//! deliberately naive so they double-check the optimized library paths.

#![allow(dead_code)]

use gems::graph::{ColouredGraph, PartitionPair};
use gems::lens::{LabelledCrystallization, LensParams};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn lens(p: u64, q: i64) -> LabelledCrystallization {
    LabelledCrystallization::build(LensParams::normalize(p, q).unwrap())
}

/// Brute-force test for colour-preserving isomorphism (up to a permutation
/// of the colours): try all 24 colour relabellings and all images of vertex
/// 0, propagating the forced vertex map across edges.
pub fn are_colour_isomorphic(g: &ColouredGraph, h: &ColouredGraph) -> bool {
    let n = g.order();
    if n != h.order() {
        return false;
    }
    let mut colour_perms = Vec::new();
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                if a != b && a != c && b != c {
                    colour_perms.push([a, b, c, 6 - a - b - c]);
                }
            }
        }
    }
    for cmap in colour_perms {
        'anchor: for w0 in 0..n as u32 {
            let mut map = vec![u32::MAX; n];
            let mut hit = vec![false; n];
            map[0] = w0;
            hit[w0 as usize] = true;
            let mut queue = vec![0u32];
            let mut seen = vec![false; n];
            seen[0] = true;
            while let Some(v) = queue.pop() {
                for colour in 0..4u8 {
                    let vn = g.neighbour(v, colour);
                    let wn = h.neighbour(map[v as usize], cmap[colour as usize]);
                    let slot = &mut map[vn as usize];
                    if *slot == u32::MAX {
                        if hit[wn as usize] {
                            continue 'anchor;
                        }
                        *slot = wn;
                        hit[wn as usize] = true;
                    } else if *slot != wn {
                        continue 'anchor;
                    }
                    if !seen[vn as usize] {
                        seen[vn as usize] = true;
                        queue.push(vn);
                    }
                }
            }
            if seen.iter().all(|&s| s) {
                return true;
            }
        }
    }
    false
}

/// A face as its colour pair plus its vertex cycle.
pub type OracleFace = ([u8; 2], Vec<u32>);

/// Face list of a partition in the order used by the decomposition code:
/// the four mixed cycle families, concatenated.  The second value maps each
/// vertex to its face id in each of the four families (indexed by the
/// position of the family in `partition.face_families()`).
pub fn oracle_faces(
    g: &ColouredGraph,
    partition: PartitionPair,
) -> (Vec<OracleFace>, Vec<[usize; 4]>) {
    let mut faces = Vec::new();
    let mut face_at = vec![[usize::MAX; 4]; g.order()];
    for (slot, [x, y]) in partition.face_families().into_iter().enumerate() {
        let family = g.cycle_family(x, y);
        for i in 0..family.count() {
            let id = faces.len();
            let cycle = family.cycle(i);
            for &v in cycle.vertices() {
                face_at[v as usize][slot] = id;
            }
            faces.push((cycle.colours(), cycle.vertices().to_vec()));
        }
    }
    (faces, face_at)
}

/// Region decomposition by breadth-first flood fill over faces, merging the
/// two faces flanking every edge that lies on one of the two cut cycles.
/// Returns regions as sorted face-id lists, ordered by smallest face.
pub fn oracle_regions(
    g: &ColouredGraph,
    partition: PartitionPair,
    cut_first: usize,
    cut_second: usize,
) -> Vec<Vec<usize>> {
    let first = g.cycle_family(partition.first()[0], partition.first()[1]);
    let second = g.cycle_family(partition.second()[0], partition.second()[1]);
    let (faces, face_at) = oracle_faces(g, partition);
    let family_pairs = partition.face_families();

    let mut adjacent = vec![Vec::new(); faces.len()];
    for (v, colour, _) in g.edges() {
        let on_cut = if partition.in_first(colour) {
            first.cycle_of(v) == cut_first
        } else {
            second.cycle_of(v) == cut_second
        };
        if on_cut {
            // An edge of colour `colour` lies on exactly the two faces whose
            // colour pairs contain `colour`.
            let flanks: Vec<usize> = family_pairs
                .iter()
                .enumerate()
                .filter(|(_, pair)| pair.contains(&colour))
                .map(|(slot, _)| face_at[v as usize][slot])
                .collect();
            assert_eq!(flanks.len(), 2);
            adjacent[flanks[0]].push(flanks[1]);
            adjacent[flanks[1]].push(flanks[0]);
        }
    }

    let mut region_of = vec![usize::MAX; faces.len()];
    let mut regions = Vec::new();
    for start in 0..faces.len() {
        if region_of[start] != usize::MAX {
            continue;
        }
        let id = regions.len();
        let mut members = vec![start];
        region_of[start] = id;
        let mut queue = vec![start];
        while let Some(f) = queue.pop() {
            for &other in &adjacent[f] {
                if region_of[other] == usize::MAX {
                    region_of[other] = id;
                    members.push(other);
                    queue.push(other);
                }
            }
        }
        members.sort_unstable();
        regions.push(members);
    }
    regions
}

/// The uncovered-vertex count for one region of a flood-fill decomposition.
pub fn oracle_score(
    g: &ColouredGraph,
    partition: PartitionPair,
    cut_first: usize,
    cut_second: usize,
    region: &[usize],
) -> usize {
    let first = g.cycle_family(partition.first()[0], partition.first()[1]);
    let second = g.cycle_family(partition.second()[0], partition.second()[1]);
    let (faces, _) = oracle_faces(g, partition);
    let mut covered = vec![false; g.order()];
    for &v in first.cycle(cut_first).vertices() {
        covered[v as usize] = true;
    }
    for &v in second.cycle(cut_second).vertices() {
        covered[v as usize] = true;
    }
    for &f in region {
        for &v in &faces[f].1 {
            covered[v as usize] = true;
        }
    }
    covered.iter().filter(|&&c| !c).count()
}

/// Exhaustive gem-Matveev complexity by flood fill, minimizing over all
/// partitions, cut pairs, and regions.
pub fn oracle_gm(g: &ColouredGraph) -> usize {
    let mut best = usize::MAX;
    for partition in PartitionPair::ALL {
        let first = g.cycle_family(partition.first()[0], partition.first()[1]);
        let second = g.cycle_family(partition.second()[0], partition.second()[1]);
        for d in 0..first.count() {
            for q in 0..second.count() {
                for region in oracle_regions(g, partition, d, q) {
                    best = best.min(oracle_score(g, partition, d, q, &region));
                }
            }
        }
    }
    best
}

/// Smith invariant factors via determinantal divisors: `d_k` is the gcd of
/// all `k x k` minors and the `k`-th invariant factor is `d_k / d_{k-1}`.
/// Exponential in the matrix size; only for small matrices.
pub fn oracle_invariant_factors(rows: usize, cols: usize, entries: &[i64]) -> Vec<u64> {
    fn det(size: usize, m: &[i128]) -> i128 {
        if size == 1 {
            return m[0];
        }
        let mut acc = 0i128;
        for col in 0..size {
            if m[col] == 0 {
                continue;
            }
            let minor: Vec<i128> = (1..size)
                .flat_map(|r| {
                    (0..size)
                        .filter(|&c| c != col)
                        .map(move |c| (r, c))
                })
                .map(|(r, c)| m[r * size + c])
                .collect();
            let term = m[col] * det(size - 1, &minor);
            acc += if col % 2 == 0 { term } else { -term };
        }
        acc
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if current.len() == k {
                out.push(current.clone());
                return;
            }
            for i in start..n {
                current.push(i);
                go(i + 1, n, k, current, out);
                current.pop();
            }
        }
        go(0, n, k, &mut current, &mut out);
        out
    }

    fn gcd(a: u128, b: u128) -> u128 {
        if b == 0 { a } else { gcd(b, a % b) }
    }

    let mut divisors = vec![1u128];
    for k in 1..=rows.min(cols) {
        let mut g = 0u128;
        for row_set in subsets(rows, k) {
            for col_set in subsets(cols, k) {
                let m: Vec<i128> = row_set
                    .iter()
                    .flat_map(|&r| col_set.iter().map(move |&c| entries[r * cols + c] as i128))
                    .collect();
                g = gcd(g, det(k, &m).unsigned_abs());
            }
        }
        if g == 0 {
            break;
        }
        divisors.push(g);
    }
    (1..divisors.len())
        .map(|k| u64::try_from(divisors[k] / divisors[k - 1]).unwrap())
        .collect()
}

/// A random 4-coloured graph on `n` vertices (not necessarily connected,
/// contracted, or a manifold gem).
pub fn random_coloured_graph<R: Rng>(rng: &mut R, n: usize) -> ColouredGraph {
    assert!(n >= 2 && n.is_multiple_of(2));
    let tables = std::array::from_fn(|_| {
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.shuffle(rng);
        let mut table = vec![0u32; n];
        for pair in order.chunks(2) {
            table[pair[0] as usize] = pair[1];
            table[pair[1] as usize] = pair[0];
        }
        table
    });
    ColouredGraph::from_involutions(tables).unwrap()
}

/// A random connected 4-coloured graph (retries until connected).
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize) -> ColouredGraph {
    loop {
        let g = random_coloured_graph(rng, n);
        if g.is_connected() {
            return g;
        }
    }
}

/// A uniformly random permutation of `0..n` as a vertex relabelling map.
pub fn random_vertex_map<R: Rng>(rng: &mut R, n: usize) -> Vec<u32> {
    let mut map: Vec<u32> = (0..n as u32).collect();
    map.shuffle(rng);
    map
}
