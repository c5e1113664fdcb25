//! Gem-Matveev complexity of a crystallization.
//!
//! Fix a partition of the colours into pairs `{a,b} | {c,d}`, one `{a,b}`-
//! cycle `D`, and one `{c,d}`-cycle `D'`.  On the surface of the regular
//! embedding induced by the partition, the faces glue into *regions* along
//! the edges of `D` and `D'`; every region `Xi` yields the upper bound
//! `order - |V(D) u V(D') u V(Xi)|` for the Matveev complexity of the
//! encoded manifold.  The gem-Matveev complexity of the graph is the minimum
//! of this quantity over all partitions, cut cycles, and regions.
//!
//! [`gm_analysis`] performs the exhaustive minimisation and returns the
//! optimal decomposition; [`lens_witness`] evaluates the one decomposition
//! of a lens space crystallization that can be written down by hand (cut
//! cycles through `v_{1,2}`, region of the last crossing's `{0,1}`-face) and
//! always scores `S - 3`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{BicolouredCycle, ColouredGraph, CycleFamily, PartitionPair};
use crate::lens::LabelledCrystallization;

/// The faces of a regular embedding grouped into regions after cutting along
/// one cycle of each pair of the partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RegionDecomposition {
    pub partition: PartitionPair,
    /// Index of the cut cycle `D` within the first-pair cycle family.
    pub cut_first: usize,
    /// Index of the cut cycle `D'` within the second-pair cycle family.
    pub cut_second: usize,
    /// Vertices of `D`.
    pub cut_first_vertices: Vec<u32>,
    /// Vertices of `D'`.
    pub cut_second_vertices: Vec<u32>,
    /// All faces of the embedding, family by family in
    /// [`PartitionPair::face_families`] order.
    pub faces: Vec<BicolouredCycle>,
    /// Face indices grouped into regions; faces sharing an edge of `D` or
    /// `D'` are in the same region.  Each group is ascending and the groups
    /// are ordered by smallest face index.
    pub regions: Vec<Vec<usize>>,
    order: usize,
}

impl RegionDecomposition {
    /// Index (into `regions`) of the region containing a face.
    pub fn region_of_face(&self, face: usize) -> usize {
        self.regions
            .iter()
            .position(|r| r.binary_search(&face).is_ok())
            .expect("every face lies in a region")
    }

    /// The face with given colours passing through `v`, if any.
    pub fn face_through(&self, colours: [u8; 2], v: u32) -> Option<usize> {
        self.faces
            .iter()
            .position(|f| f.colours() == colours && f.vertices().contains(&v))
    }

    /// Number of vertices of the underlying graph.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Vertices covered by the cut cycles and the faces of one region,
    /// ascending.
    pub fn covered_vertices(&self, region: usize) -> Vec<u32> {
        let mut mark = vec![false; self.order];
        for &v in self
            .cut_first_vertices
            .iter()
            .chain(&self.cut_second_vertices)
        {
            mark[v as usize] = true;
        }
        for &f in &self.regions[region] {
            for &v in self.faces[f].vertices() {
                mark[v as usize] = true;
            }
        }
        (0..self.order as u32)
            .filter(|&v| mark[v as usize])
            .collect()
    }
}

/// Cuts the embedding of `partition` along the chosen first- and second-pair
/// cycles and groups the faces into regions.
pub fn region_decomposition(
    g: &ColouredGraph,
    partition: PartitionPair,
    cut_first: usize,
    cut_second: usize,
) -> Result<RegionDecomposition> {
    let ctx = PartitionContext::new(g, partition);
    if cut_first >= ctx.first.count() {
        return Err(Error::NoSuchCycle {
            index: cut_first,
            family: "first-pair",
            size: ctx.first.count(),
        });
    }
    if cut_second >= ctx.second.count() {
        return Err(Error::NoSuchCycle {
            index: cut_second,
            family: "second-pair",
            size: ctx.second.count(),
        });
    }

    let mut parent: Vec<u32> = (0..ctx.face_count as u32).collect();
    ctx.for_each_kept_edge_union(g, cut_first, cut_second, &mut parent);

    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); ctx.face_count];
    for f in 0..ctx.face_count as u32 {
        let root = find(&mut parent, f);
        buckets[root as usize].push(f as usize);
    }
    let regions: Vec<Vec<usize>> = buckets.into_iter().filter(|b| !b.is_empty()).collect();

    let faces = ctx
        .families
        .iter()
        .flat_map(|fam| fam.cycles().iter().cloned())
        .collect();
    Ok(RegionDecomposition {
        partition,
        cut_first,
        cut_second,
        cut_first_vertices: ctx.first.cycle(cut_first).vertices().to_vec(),
        cut_second_vertices: ctx.second.cycle(cut_second).vertices().to_vec(),
        faces,
        regions,
        order: g.order(),
    })
}

/// One optimal cut-and-region choice together with its covered vertex set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GmWitness {
    pub decomposition: RegionDecomposition,
    /// Index into `decomposition.regions` of the chosen region.
    pub region: usize,
    /// `|V(D) u V(D') u V(Xi)|`.
    pub covered: usize,
    /// `order - covered`.
    pub score: usize,
    /// The vertices covered by neither cut cycles nor region, ascending.
    pub leftover: Vec<u32>,
}

/// Best score found within one partition, with the choices realising it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PartitionOutcome {
    pub partition: PartitionPair,
    pub score: usize,
    pub cut_first: usize,
    pub cut_second: usize,
    /// Smallest face index of the winning region.
    pub region_root: usize,
}

/// Result of the exhaustive gem-Matveev minimisation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GmAnalysis {
    pub complexity: usize,
    pub witness: GmWitness,
    pub per_partition: [PartitionOutcome; 3],
}

/// Exhaustively minimises the region score over all three partitions, all
/// cut cycle choices and all regions.  Ties are broken towards the smaller
/// partition index, then cut indices, then region root, making the witness
/// deterministic.
pub fn gm_analysis(g: &ColouredGraph) -> Result<GmAnalysis> {
    if !g.is_crystallization() {
        return Err(Error::NotCrystallization);
    }
    let n = g.order();
    let mut per_partition = Vec::with_capacity(3);
    for partition in PartitionPair::ALL {
        let ctx = PartitionContext::new(g, partition);
        let grid: Vec<(usize, usize)> = (0..ctx.first.count())
            .flat_map(|d| (0..ctx.second.count()).map(move |q| (d, q)))
            .collect();
        let (score, cut_first, cut_second, region_root) = grid
            .par_iter()
            .map_init(
                || Scratch::new(n, ctx.face_count),
                |scratch, &(d, q)| ctx.best_region(g, scratch, d, q),
            )
            .min()
            .expect("a partition has at least one cut choice");
        per_partition.push(PartitionOutcome {
            partition,
            score,
            cut_first,
            cut_second,
            region_root,
        });
    }

    let best = per_partition
        .iter()
        .enumerate()
        .min_by_key(|(i, o)| (o.score, *i))
        .map(|(i, _)| i)
        .expect("three partitions searched");
    let chosen = per_partition[best];
    let decomposition =
        region_decomposition(g, chosen.partition, chosen.cut_first, chosen.cut_second)?;
    let region = decomposition
        .regions
        .iter()
        .position(|r| r[0] == chosen.region_root)
        .expect("winning region root exists");
    let witness = build_witness(decomposition, region);
    assert_eq!(
        witness.score, chosen.score,
        "witness reconstruction agrees with the search"
    );
    Ok(GmAnalysis {
        complexity: chosen.score,
        witness,
        per_partition: per_partition
            .try_into()
            .expect("exactly three partition outcomes"),
    })
}

/// The gem-Matveev complexity alone.
pub fn gm_complexity(g: &ColouredGraph) -> Result<usize> {
    gm_analysis(g).map(|a| a.complexity)
}

/// Evaluates the hand-constructible decomposition of a lens space
/// crystallization: partition `{0,2} | {1,3}`, both cut cycles through
/// `v_{1,2}`, and the region containing the `{0,1}`-face of the last
/// crossing.  Needs `p >= 3`; the score always equals `S - 3` and the
/// uncovered vertices are exactly `v_{j,2}` for `3 <= j <= s - 1`.
pub fn lens_witness(lc: &LabelledCrystallization) -> Result<GmWitness> {
    if lc.params().p() < 3 {
        return Err(Error::RequiresPAtLeastThree(lc.params().p()));
    }
    let g = lc.graph();
    let partition = PartitionPair::ALL[1];
    let through = lc.vertex(crate::lens::VertexLabel::new(1, 2));
    let cut_first = g.cycle_family(0, 2).cycle_of(through);
    let cut_second = g.cycle_family(1, 3).cycle_of(through);
    let decomposition = region_decomposition(g, partition, cut_first, cut_second)?;
    let last_corner = lc.vertex(crate::lens::VertexLabel::new(lc.crossing_count(), 1));
    let face = decomposition
        .face_through([0, 1], last_corner)
        .expect("every vertex lies on a {0,1}-face");
    let region = decomposition.region_of_face(face);
    Ok(build_witness(decomposition, region))
}

fn build_witness(decomposition: RegionDecomposition, region: usize) -> GmWitness {
    let covered = decomposition.covered_vertices(region);
    let order = decomposition.order();
    let mut mark = vec![false; order];
    for &v in &covered {
        mark[v as usize] = true;
    }
    let leftover: Vec<u32> = (0..order as u32).filter(|&v| !mark[v as usize]).collect();
    GmWitness {
        region,
        covered: covered.len(),
        score: order - covered.len(),
        leftover,
        decomposition,
    }
}

/// Per-partition precomputation shared by all cut choices: the two cut-cycle
/// families, the four face families with their global index offsets, and the
/// two face families flanking each colour.
struct PartitionContext {
    partition: PartitionPair,
    first: CycleFamily,
    second: CycleFamily,
    families: [CycleFamily; 4],
    offsets: [usize; 4],
    face_count: usize,
    flanks: [(usize, usize); 4],
}

impl PartitionContext {
    fn new(g: &ColouredGraph, partition: PartitionPair) -> Self {
        let [a, b] = partition.first();
        let [c, d] = partition.second();
        let first = g.cycle_family(a, b);
        let second = g.cycle_family(c, d);
        let family_pairs = partition.face_families();
        let families = family_pairs.map(|[x, y]| g.cycle_family(x, y));
        let mut offsets = [0usize; 4];
        let mut face_count = 0;
        for (i, fam) in families.iter().enumerate() {
            offsets[i] = face_count;
            face_count += fam.count();
        }
        let flanks = std::array::from_fn(|col| {
            let mut hit = family_pairs
                .iter()
                .enumerate()
                .filter(|(_, pair)| pair.contains(&(col as u8)))
                .map(|(i, _)| i);
            let lo = hit.next().expect("colour lies in two face families");
            let hi = hit.next().expect("colour lies in two face families");
            (lo, hi)
        });
        Self {
            partition,
            first,
            second,
            families,
            offsets,
            face_count,
            flanks,
        }
    }

    fn face_id(&self, family: usize, v: u32) -> u32 {
        (self.offsets[family] + self.families[family].cycle_of(v)) as u32
    }

    /// Unions, in `parent`, the two faces flanking every edge that lies on
    /// the chosen cut cycles.
    fn for_each_kept_edge_union(
        &self,
        g: &ColouredGraph,
        cut_first: usize,
        cut_second: usize,
        parent: &mut [u32],
    ) {
        for col in 0..4u8 {
            let table = g.involution(col);
            let in_first = self.partition.in_first(col);
            for v in 0..g.order() as u32 {
                let w = table[v as usize];
                if v > w {
                    continue;
                }
                let kept = if in_first {
                    self.first.cycle_of(v) == cut_first
                } else {
                    self.second.cycle_of(v) == cut_second
                };
                if !kept {
                    continue;
                }
                let (fa, fb) = self.flanks[col as usize];
                union(parent, self.face_id(fa, v), self.face_id(fb, v));
            }
        }
    }

    /// Scores every region of the decomposition `(d, q)` and returns the
    /// best `(score, d, q, region_root)`.
    fn best_region(
        &self,
        g: &ColouredGraph,
        scratch: &mut Scratch,
        d: usize,
        q: usize,
    ) -> (usize, usize, usize, usize) {
        let n = g.order();
        let epoch = scratch.next_epoch();

        let mut base_count = 0usize;
        for &v in self.first.cycle(d).vertices() {
            scratch.base[v as usize] = epoch;
            base_count += 1;
        }
        for &v in self.second.cycle(q).vertices() {
            if scratch.base[v as usize] != epoch {
                scratch.base[v as usize] = epoch;
                base_count += 1;
            }
        }

        for (i, p) in scratch.parent.iter_mut().enumerate() {
            *p = i as u32;
        }
        self.for_each_kept_edge_union(g, d, q, &mut scratch.parent);

        // Group faces by region root with a counting sort, so each region's
        // faces are visited consecutively and per-region vertex marks stay
        // valid.
        let f_total = self.face_count;
        for f in 0..f_total as u32 {
            let root = find(&mut scratch.parent, f);
            scratch.root[f as usize] = root;
            if scratch.count_epoch[root as usize] != epoch {
                scratch.count_epoch[root as usize] = epoch;
                scratch.count[root as usize] = 0;
            }
            scratch.count[root as usize] += 1;
        }
        let mut offset = 0u32;
        for root in 0..f_total {
            if scratch.count_epoch[root] == epoch {
                scratch.offset[root] = offset;
                offset += scratch.count[root];
            }
        }
        for f in 0..f_total as u32 {
            let root = scratch.root[f as usize] as usize;
            scratch.sorted[scratch.offset[root] as usize] = f;
            scratch.offset[root] += 1;
        }

        let mut best: Option<(usize, usize)> = None;
        let mut i = 0usize;
        while i < f_total {
            let root = scratch.root[scratch.sorted[i] as usize];
            let mut extra = 0usize;
            while i < f_total && scratch.root[scratch.sorted[i] as usize] == root {
                let f = scratch.sorted[i] as usize;
                let (family, local) = self.face_position(f);
                for &v in self.families[family].cycle(local).vertices() {
                    let vi = v as usize;
                    if scratch.base[vi] == epoch {
                        continue;
                    }
                    if scratch.vertex_epoch[vi] == epoch && scratch.vertex_root[vi] == root {
                        continue;
                    }
                    scratch.vertex_epoch[vi] = epoch;
                    scratch.vertex_root[vi] = root;
                    extra += 1;
                }
                i += 1;
            }
            let score = n - (base_count + extra);
            let candidate = (score, root as usize);
            if best.is_none_or(|b| candidate < b) {
                best = Some(candidate);
            }
        }
        let (score, root) = best.expect("a decomposition has at least one region");
        (score, d, q, root)
    }

    fn face_position(&self, face: usize) -> (usize, usize) {
        for family in (0..4).rev() {
            if face >= self.offsets[family] {
                return (family, face - self.offsets[family]);
            }
        }
        unreachable!("face index below every family offset")
    }
}

/// Reusable buffers for the inner search loop; epochs avoid clearing.
struct Scratch {
    epoch: u32,
    base: Vec<u32>,
    vertex_epoch: Vec<u32>,
    vertex_root: Vec<u32>,
    parent: Vec<u32>,
    root: Vec<u32>,
    count: Vec<u32>,
    count_epoch: Vec<u32>,
    offset: Vec<u32>,
    sorted: Vec<u32>,
}

impl Scratch {
    fn new(n: usize, faces: usize) -> Self {
        Self {
            epoch: 0,
            base: vec![0; n],
            vertex_epoch: vec![0; n],
            vertex_root: vec![0; n],
            parent: vec![0; faces],
            root: vec![0; faces],
            count: vec![0; faces],
            count_epoch: vec![0; faces],
            offset: vec![0; faces],
            sorted: vec![0; faces],
        }
    }

    fn next_epoch(&mut self) -> u32 {
        self.epoch += 1;
        self.epoch
    }
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        parent[x as usize] = parent[parent[x as usize] as usize];
        x = parent[x as usize];
    }
    x
}

fn union(parent: &mut [u32], a: u32, b: u32) {
    let ra = find(parent, a);
    let rb = find(parent, b);
    if ra != rb {
        // Attach the larger root below the smaller, so every region's root is
        // its smallest face index.
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi as usize] = lo;
    }
}
