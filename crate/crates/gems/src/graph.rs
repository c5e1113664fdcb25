//! The core 4-coloured graph type: four fixed-point-free involutions on a
//! common vertex set, together with bicoloured cycles, residues, and the
//! recognition test for gems of closed 3-manifolds.

use std::fmt;

use crate::error::{Error, Result};

/// The four edge colours of a gem.
pub const COLOURS: [u8; 4] = [0, 1, 2, 3];

/// A 4-regular, properly edge-coloured multigraph on the vertex set `0..n`.
///
/// Each colour class is a perfect matching, stored as a fixed-point-free
/// involution: `inv[c][v]` is the other end of the `c`-coloured edge at `v`.
/// Construction through [`ColouredGraph::from_involutions`] validates all four
/// tables, so every value of this type satisfies the matching invariants.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ColouredGraph {
    inv: [Vec<u32>; 4],
}

impl ColouredGraph {
    /// Builds a coloured graph from the four involution tables.
    ///
    /// All tables must have the same even length `n >= 2`, and each must be a
    /// fixed-point-free involution on `0..n`.
    pub fn from_involutions(tables: [Vec<u32>; 4]) -> Result<Self> {
        let n = tables[0].len();
        if n < 2 || !n.is_multiple_of(2) {
            return Err(Error::BadOrder(n));
        }
        for (c, table) in tables.iter().enumerate() {
            let colour = c as u8;
            if table.len() != n {
                return Err(Error::TableLength {
                    colour,
                    len: table.len(),
                    expected: n,
                });
            }
            // Report range errors before fixed points before pairing errors,
            // so a single bad entry is not masked by its knock-on effects.
            for (v, &w) in table.iter().enumerate() {
                if w as usize >= n {
                    return Err(Error::VertexOutOfRange { colour, vertex: v as u32 });
                }
            }
            for (v, &w) in table.iter().enumerate() {
                if w as usize == v {
                    return Err(Error::FixedPoint { colour, vertex: v as u32 });
                }
            }
            for (v, &w) in table.iter().enumerate() {
                if table[w as usize] as usize != v {
                    return Err(Error::NotInvolution { colour, vertex: v as u32 });
                }
            }
        }
        Ok(Self { inv: tables })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.inv[0].len()
    }

    /// The vertex at the other end of the `colour`-edge at `v`.
    pub fn neighbour(&self, v: u32, colour: u8) -> u32 {
        self.inv[colour as usize][v as usize]
    }

    /// The full involution table of one colour.
    pub fn involution(&self, colour: u8) -> &[u32] {
        &self.inv[colour as usize]
    }

    /// All four involution tables.
    pub fn tables(&self) -> &[Vec<u32>; 4] {
        &self.inv
    }

    /// Iterates over the `2n` edges as `(v, colour, w)` with `v < w`.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u8, u32)> + '_ {
        COLOURS.into_iter().flat_map(move |c| {
            self.inv[c as usize]
                .iter()
                .enumerate()
                .filter_map(move |(v, &w)| (v < w as usize).then_some((v as u32, c, w)))
        })
    }

    /// Connected components of the subgraph using only `colours`.
    ///
    /// Returns the component index of every vertex plus the component count;
    /// components are numbered in order of their smallest vertex.
    pub fn components_with(&self, colours: &[u8]) -> (Vec<u32>, usize) {
        let n = self.order();
        let mut comp = vec![u32::MAX; n];
        let mut count = 0;
        let mut queue = Vec::new();
        for start in 0..n as u32 {
            if comp[start as usize] != u32::MAX {
                continue;
            }
            let id = count as u32;
            count += 1;
            comp[start as usize] = id;
            queue.push(start);
            while let Some(v) = queue.pop() {
                for &c in colours {
                    let w = self.neighbour(v, c);
                    if comp[w as usize] == u32::MAX {
                        comp[w as usize] = id;
                        queue.push(w);
                    }
                }
            }
        }
        (comp, count)
    }

    /// Whether the graph is connected under all four colours.
    pub fn is_connected(&self) -> bool {
        self.components_with(&COLOURS).1 == 1
    }

    /// Vertex classes of the bipartition, or `None` if some cycle is odd.
    ///
    /// Classes are `0` or `1`; the smallest vertex of every component is in
    /// class `0`.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.order();
        let mut class = vec![u8::MAX; n];
        let mut queue = Vec::new();
        for start in 0..n as u32 {
            if class[start as usize] != u8::MAX {
                continue;
            }
            class[start as usize] = 0;
            queue.push(start);
            while let Some(v) = queue.pop() {
                let side = class[v as usize];
                for c in COLOURS {
                    let w = self.neighbour(v, c);
                    let entry = &mut class[w as usize];
                    if *entry == u8::MAX {
                        *entry = 1 - side;
                        queue.push(w);
                    } else if *entry == side {
                        return None;
                    }
                }
            }
        }
        Some(class)
    }

    /// The components of the 3-coloured residue avoiding `excluded`.
    ///
    /// Each component is sorted ascending; components are ordered by their
    /// smallest vertex.
    pub fn residue_components(&self, excluded: u8) -> Vec<Vec<u32>> {
        let colours: Vec<u8> = COLOURS.into_iter().filter(|&c| c != excluded).collect();
        let (comp, count) = self.components_with(&colours);
        let mut out = vec![Vec::new(); count];
        for (v, &id) in comp.iter().enumerate() {
            out[id as usize].push(v as u32);
        }
        out
    }

    /// Whether every 3-coloured residue is connected (one component for each
    /// of the four excluded colours).  Contracted gems are exactly the
    /// crystallization candidates; a contracted graph is in particular
    /// connected.
    pub fn is_contracted(&self) -> bool {
        COLOURS.into_iter().all(|c| {
            let colours: Vec<u8> = COLOURS.into_iter().filter(|&d| d != c).collect();
            self.components_with(&colours).1 == 1
        })
    }

    /// Basic structural classification flags.
    pub fn classify(&self) -> Classification {
        Classification {
            connected: self.is_connected(),
            bipartite: self.bipartition().is_some(),
            contracted: self.is_contracted(),
        }
    }

    /// The cycles obtained by alternating the two colours `a` and `b`.
    pub fn cycle_family(&self, a: u8, b: u8) -> CycleFamily {
        let colours = if a < b { [a, b] } else { [b, a] };
        let inv_a = &self.inv[colours[0] as usize];
        let inv_b = &self.inv[colours[1] as usize];
        let n = self.order();
        let mut member = vec![u32::MAX; n];
        let mut cycles = Vec::new();
        for start in 0..n as u32 {
            if member[start as usize] != u32::MAX {
                continue;
            }
            let id = cycles.len() as u32;
            let mut vertices = Vec::new();
            let mut v = start;
            let mut next_is_a = true;
            loop {
                member[v as usize] = id;
                vertices.push(v);
                v = if next_is_a {
                    inv_a[v as usize]
                } else {
                    inv_b[v as usize]
                };
                next_is_a = !next_is_a;
                if v == start && next_is_a {
                    break;
                }
            }
            cycles.push(BicolouredCycle { colours, vertices });
        }
        CycleFamily {
            colours,
            cycles,
            member,
        }
    }

    /// Number of bicoloured cycles for every colour pair, in the order
    /// `{0,1}, {0,2}, {0,3}, {1,2}, {1,3}, {2,3}` (see [`pair_slot`]).
    pub fn cycle_counts(&self) -> [usize; 6] {
        let mut counts = [0; 6];
        for (slot, count) in counts.iter_mut().enumerate() {
            let [a, b] = slot_pair(slot);
            *count = self.cycle_family(a, b).count();
        }
        counts
    }

    /// All six bicoloured cycle families and all four 3-coloured residues.
    pub fn residues(&self) -> Residues {
        let pairs = std::array::from_fn(|slot| {
            let [a, b] = slot_pair(slot);
            self.cycle_family(a, b)
        });
        let hats = std::array::from_fn(|c| self.residue_components(c as u8));
        Residues { pairs, hats }
    }

    /// Whether every component of every 3-coloured residue is a 2-sphere,
    /// i.e. whether the graph encodes a closed 3-manifold.
    ///
    /// A 3-coloured component `R` with colour pairs `{i,j}, {i,k}, {j,k}`
    /// spans a closed surface with Euler characteristic
    /// `g_ij(R) + g_ik(R) + g_jk(R) - |R| / 2`, and the encoded space is a
    /// closed 3-manifold exactly when every such characteristic equals 2.
    pub fn represents_closed_3manifold(&self) -> bool {
        for excluded in COLOURS {
            let colours: Vec<u8> = COLOURS.into_iter().filter(|&c| c != excluded).collect();
            let (comp, count) = self.components_with(&colours);
            // Euler characteristic per component: faces - |R| / 2.
            let mut chi = vec![0i64; count];
            for (v, &id) in comp.iter().enumerate() {
                debug_assert!(v < self.order());
                chi[id as usize] -= 1;
            }
            for c in &mut chi {
                *c /= 2;
            }
            for pair in [
                [colours[0], colours[1]],
                [colours[0], colours[2]],
                [colours[1], colours[2]],
            ] {
                let family = self.cycle_family(pair[0], pair[1]);
                for cycle in family.cycles() {
                    chi[comp[cycle.vertices[0] as usize] as usize] += 1;
                }
            }
            if chi.iter().any(|&c| c != 2) {
                return false;
            }
        }
        true
    }

    /// Whether the graph is a crystallization of a closed 3-manifold:
    /// contracted (hence connected) with all residues spherical.
    pub fn is_crystallization(&self) -> bool {
        self.is_contracted() && self.represents_closed_3manifold()
    }

    /// The graph obtained by renaming vertex `v` to `vertex_map[v]` and
    /// colour `c` to `colour_map[c]`.
    ///
    /// Both maps must be bijections; the result is colour-isomorphic to the
    /// original by construction.
    pub fn relabelled(&self, vertex_map: &[u32], colour_map: [u8; 4]) -> Result<Self> {
        let n = self.order();
        if vertex_map.len() != n {
            return Err(Error::TableLength {
                colour: 0,
                len: vertex_map.len(),
                expected: n,
            });
        }
        let mut tables: [Vec<u32>; 4] = std::array::from_fn(|_| vec![0; n]);
        for c in COLOURS {
            let image = colour_map[c as usize] as usize;
            for v in 0..n {
                let tv = vertex_map[v] as usize;
                if tv >= n {
                    return Err(Error::VertexOutOfRange {
                        colour: c,
                        vertex: v as u32,
                    });
                }
                tables[image][tv] = vertex_map[self.inv[c as usize][v] as usize];
            }
        }
        Self::from_involutions(tables)
    }

    /// Checks whether `vertex_map` together with the colour relabelling
    /// `colour_map` is an isomorphism of the graph onto itself, i.e. whether
    /// `vertex_map(inv[c][v]) == inv[colour_map(c)][vertex_map(v)]` for every
    /// vertex and colour.
    ///
    /// Returns `false` if `vertex_map` has the wrong length or is not a
    /// bijection, or if `colour_map` is not a permutation of the colours.
    pub fn is_colour_automorphism(&self, vertex_map: &[u32], colour_map: [u8; 4]) -> bool {
        let n = self.order();
        if vertex_map.len() != n {
            return false;
        }
        let mut seen_v = vec![false; n];
        for &w in vertex_map {
            if w as usize >= n || seen_v[w as usize] {
                return false;
            }
            seen_v[w as usize] = true;
        }
        let mut seen_c = [false; 4];
        for &c in &colour_map {
            if c >= 4 || seen_c[c as usize] {
                return false;
            }
            seen_c[c as usize] = true;
        }
        for c in COLOURS {
            let image = colour_map[c as usize];
            for v in 0..n {
                let w = self.inv[c as usize][v] as usize;
                if vertex_map[w] != self.inv[image as usize][vertex_map[v] as usize] {
                    return false;
                }
            }
        }
        true
    }
}

/// Structural flags reported by [`ColouredGraph::classify`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Classification {
    pub connected: bool,
    pub bipartite: bool,
    pub contracted: bool,
}

/// Index of the unordered colour pair `{a, b}` in the fixed order
/// `{0,1}, {0,2}, {0,3}, {1,2}, {1,3}, {2,3}`.
pub fn pair_slot(a: u8, b: u8) -> usize {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    match (lo, hi) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => panic!("invalid colour pair ({a}, {b})"),
    }
}

/// Inverse of [`pair_slot`].
pub fn slot_pair(slot: usize) -> [u8; 2] {
    match slot {
        0 => [0, 1],
        1 => [0, 2],
        2 => [0, 3],
        3 => [1, 2],
        4 => [1, 3],
        5 => [2, 3],
        _ => panic!("invalid colour pair slot {slot}"),
    }
}

/// One cycle alternating two colours, listed from its smallest vertex and
/// stepping first along the smaller colour.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BicolouredCycle {
    colours: [u8; 2],
    vertices: Vec<u32>,
}

impl BicolouredCycle {
    /// The two alternating colours, ascending.
    pub fn colours(&self) -> [u8; 2] {
        self.colours
    }

    /// The cycle's vertices in traversal order (always an even count).
    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Number of vertices on the cycle.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// All cycles of one colour pair, plus the vertex-to-cycle index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleFamily {
    colours: [u8; 2],
    cycles: Vec<BicolouredCycle>,
    member: Vec<u32>,
}

impl CycleFamily {
    /// The two alternating colours, ascending.
    pub fn colours(&self) -> [u8; 2] {
        self.colours
    }

    /// Number of cycles in the family.
    pub fn count(&self) -> usize {
        self.cycles.len()
    }

    /// The cycles, ordered by smallest vertex.
    pub fn cycles(&self) -> &[BicolouredCycle] {
        &self.cycles
    }

    /// One cycle by index.
    pub fn cycle(&self, index: usize) -> &BicolouredCycle {
        &self.cycles[index]
    }

    /// Index of the cycle through `v`.
    pub fn cycle_of(&self, v: u32) -> usize {
        self.member[v as usize] as usize
    }
}

/// The full residue structure of a graph: all six bicoloured cycle families
/// (indexed by [`pair_slot`]) and the components of all four 3-coloured
/// residues.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Residues {
    pub pairs: [CycleFamily; 6],
    pub hats: [Vec<Vec<u32>>; 4],
}

impl Residues {
    /// The cycle family of the colour pair `{a, b}`.
    pub fn pair(&self, a: u8, b: u8) -> &CycleFamily {
        &self.pairs[pair_slot(a, b)]
    }

    /// Cycle counts for all six pairs, in [`pair_slot`] order.
    pub fn pair_counts(&self) -> [usize; 6] {
        std::array::from_fn(|slot| self.pairs[slot].count())
    }

    /// Component counts of the four 3-coloured residues, by excluded colour.
    pub fn hat_counts(&self) -> [usize; 4] {
        std::array::from_fn(|c| self.hats[c].len())
    }
}

/// One of the three ways of splitting the four colours into two pairs.
///
/// The pair containing colour 0 is always the `first` pair, so the three
/// values are `{0,1}|{2,3}`, `{0,2}|{1,3}` and `{0,3}|{1,2}`, in that order
/// (see [`PartitionPair::ALL`]).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PartitionPair {
    first: [u8; 2],
    second: [u8; 2],
}

impl PartitionPair {
    /// The three colour-pair partitions in canonical order.
    pub const ALL: [PartitionPair; 3] = [
        PartitionPair {
            first: [0, 1],
            second: [2, 3],
        },
        PartitionPair {
            first: [0, 2],
            second: [1, 3],
        },
        PartitionPair {
            first: [0, 3],
            second: [1, 2],
        },
    ];

    /// The partition whose first pair is `{0, mate}` for `mate` in `1..=3`.
    pub fn with_zero_paired_to(mate: u8) -> Self {
        assert!((1..=3).contains(&mate), "colour 0 can pair with 1, 2 or 3");
        Self::ALL[mate as usize - 1]
    }

    /// The pair containing colour 0, ascending.
    pub fn first(&self) -> [u8; 2] {
        self.first
    }

    /// The complementary pair, ascending.
    pub fn second(&self) -> [u8; 2] {
        self.second
    }

    /// Position of this partition in [`PartitionPair::ALL`].
    pub fn index(&self) -> usize {
        self.first[1] as usize - 1
    }

    /// Whether `colour` belongs to the pair containing colour 0.
    pub fn in_first(&self, colour: u8) -> bool {
        self.first.contains(&colour)
    }

    /// The four mixed colour pairs `{a,c}, {c,b}, {b,d}, {d,a}` (for first
    /// pair `{a,b}` and second pair `{c,d}`), each sorted ascending.
    ///
    /// With opposite colours of each pair drawn as opposite edge directions,
    /// these are the face families of the regular embedding determined by the
    /// partition: walking a face alternates one colour of the first pair with
    /// one colour of the second.
    pub fn face_families(&self) -> [[u8; 2]; 4] {
        let [a, b] = self.first;
        let [c, d] = self.second;
        [sorted2(a, c), sorted2(c, b), sorted2(b, d), sorted2(d, a)]
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{},{}}}|{{{},{}}}",
            self.first[0], self.first[1], self.second[0], self.second[1]
        )
    }
}

fn sorted2(a: u8, b: u8) -> [u8; 2] {
    if a < b {
        [a, b]
    } else {
        [b, a]
    }
}
