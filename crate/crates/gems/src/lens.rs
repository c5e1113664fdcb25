//! The 4-plat construction of lens space crystallizations.
//!
//! For coprime `p > q >= 1` the lens space `L(p, q)` is the double branched
//! cover of the 2-bridge link with Conway parameters `(p, q)`, drawn as a
//! 4-plat closure of a 3-string braid word
//! `sigma2^{a_1} sigma1^{-a_2} sigma2^{a_3} ... sigma2^{a_m}`,
//! where `[a_1, ..., a_m]` is the odd-length continued fraction expansion of
//! `q / p`.  Replacing every crossing by a quadrilateral of colours 0 and 1
//! and every diagram arc by a colour-2 edge (with colour 3 the mirror image
//! of colour 2 under the half-turn of the diagram) yields a crystallization
//! of `L(p, q)` with `4 S` vertices, `S = a_1 + ... + a_m`.
//!
//! Vertices carry labels `v_{j,i}`: crossing `j` in `1..=s`, corner position
//! `i` in `1..=4`; the flat index is `4 (j - 1) + (i - 1)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::ColouredGraph;

/// Normalized lens space parameters: `gcd(p, q) = 1` and `1 <= q <= p / 2`.
///
/// The homeomorphism `L(p, q) ~ L(p, p - q)` lets every lens space be
/// written this way; `(2, 1)` is the smallest instance.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LensParams {
    p: u64,
    q: u64,
}

impl LensParams {
    /// Reduces `(p, q)` to normalized form: `q` is taken modulo `p`, replaced
    /// by `p - q` when above `p / 2`, and must end up coprime to `p`.
    pub fn normalize(p: u64, q: i64) -> Result<Self> {
        if p < 2 {
            return Err(Error::LensOrderTooSmall(p));
        }
        let mut r = q.rem_euclid(p as i64) as u64;
        if gcd(p, r) != 1 {
            return Err(Error::LensNotCoprime(p, q));
        }
        if r > p - r {
            r = p - r;
        }
        Ok(Self { p, q: r })
    }

    /// All normalized parameter pairs with `2 <= p <= p_max`, ordered by `p`
    /// then `q`.
    pub fn normalized_range(p_max: u64) -> Vec<LensParams> {
        let mut out = Vec::new();
        for p in 2..=p_max {
            for q in 1..=p / 2 {
                if gcd(p, q) == 1 {
                    out.push(LensParams { p, q });
                }
            }
        }
        out
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

impl fmt::Display for LensParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The odd-length continued fraction expansion `[a_1, ..., a_m]` of `q / p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContinuedFraction {
    quotients: Vec<u64>,
}

impl ContinuedFraction {
    /// Expands `q / p` by the Euclidean algorithm; an even-length expansion
    /// `[.., a_m]` is rewritten to the sum-preserving odd form
    /// `[.., a_m - 1, 1]`.  For `p >= 3` the leading quotient is at least 2.
    pub fn expand(params: LensParams) -> Self {
        let mut quotients = Vec::new();
        let (mut num, mut den) = (params.p, params.q);
        while den != 0 {
            quotients.push(num / den);
            (num, den) = (den, num % den);
        }
        if quotients.len() % 2 == 0 {
            *quotients.last_mut().expect("even length is nonzero") -= 1;
            quotients.push(1);
        }
        let cf = Self { quotients };
        debug_assert_eq!(cf.evaluate(), (params.p, params.q));
        cf
    }

    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    /// `S = a_1 + ... + a_m`, the crossing count of the 4-plat diagram and a
    /// quarter of the crystallization's order.
    pub fn sum(&self) -> u64 {
        self.quotients.iter().sum()
    }

    /// Evaluates the continued fraction back to `(p, q)` with
    /// `q / p = 1 / (a_1 + 1 / (a_2 + ...))`, in lowest terms.
    pub fn evaluate(&self) -> (u64, u64) {
        let mut num = 1u64;
        let mut den = 0u64;
        for &a in self.quotients.iter().rev() {
            // x -> a + 1/x maps num/den to (a*num + den)/num.
            (num, den) = (a * num + den, num);
        }
        (num, den)
    }
}

/// The two braid generators appearing in the 4-plat word: `Sigma2` crossings
/// involve lines 2 and 3, `Sigma1` crossings involve lines 1 and 2 (lines
/// are numbered 1 at the top to 4 at the bottom, and line 4 carries no
/// crossings at all).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CrossingKind {
    Sigma2,
    Sigma1,
}

impl CrossingKind {
    /// The two diagram lines meeting at a crossing of this kind, upper first.
    pub fn lines(&self) -> [u8; 2] {
        match self {
            CrossingKind::Sigma2 => [2, 3],
            CrossingKind::Sigma1 => [1, 2],
        }
    }
}

/// One of the four strand ends of a crossing: the crossing index (1-based),
/// whether the strand enters (left side) or leaves (right side), and the
/// diagram line it sits on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PlatSlot {
    pub crossing: u32,
    pub entering: bool,
    pub line: u8,
}

/// The combinatorial 4-plat diagram: the left-to-right crossing sequence and
/// the arcs connecting crossing ends (through the four plat caps joining
/// lines 1-2 and lines 3-4 at both ends of the braid).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FourPlatDiagram {
    kinds: Vec<CrossingKind>,
    arcs: Vec<(PlatSlot, PlatSlot)>,
}

impl FourPlatDiagram {
    /// Lays out the braid word `sigma2^{a_1} sigma1^{-a_2} sigma2^{a_3} ...`
    /// and traces all connecting arcs.
    pub fn from_continued_fraction(cf: &ContinuedFraction) -> Self {
        let kinds = crossing_kinds(cf);
        let arcs = trace_arcs(&kinds);
        Self { kinds, arcs }
    }

    /// The crossings left to right; index `j` (1-based) has kind
    /// `kinds()[j - 1]`.
    pub fn kinds(&self) -> &[CrossingKind] {
        &self.kinds
    }

    pub fn crossing_count(&self) -> usize {
        self.kinds.len()
    }

    /// The `2 s` arcs, each joining two crossing ends.
    pub fn arcs(&self) -> &[(PlatSlot, PlatSlot)] {
        &self.arcs
    }
}

fn crossing_kinds(cf: &ContinuedFraction) -> Vec<CrossingKind> {
    let mut kinds = Vec::with_capacity(cf.sum() as usize);
    for (block, &a) in cf.quotients().iter().enumerate() {
        let kind = if block % 2 == 0 {
            CrossingKind::Sigma2
        } else {
            CrossingKind::Sigma1
        };
        kinds.extend(std::iter::repeat_n(kind, a as usize));
    }
    kinds
}

/// A point where a line segment of the diagram ends: either a crossing slot
/// or the left/right boundary of the braid box on a given line.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum SegmentEnd {
    Boundary { left: bool, line: u8 },
    Slot(PlatSlot),
}

/// Walks every line of the diagram, cuts it into segments between crossing
/// slots, and stitches segments into arcs through the plat caps (which join
/// lines 1-2 and lines 3-4 at each end).  Every arc connects an `entering`
/// slot of some crossing to a slot reached by the stitched path.
fn trace_arcs(kinds: &[CrossingKind]) -> Vec<(PlatSlot, PlatSlot)> {
    let s = kinds.len();
    // Crossing indices met along each line, left to right.
    let mut events: [Vec<u32>; 4] = Default::default();
    for (j0, kind) in kinds.iter().enumerate() {
        for line in kind.lines() {
            events[line as usize - 1].push(j0 as u32 + 1);
        }
    }

    // Segments per line: [boundary, in_1, out_1, in_2, ..., boundary] paired
    // consecutively.  `at` finds the segment touching a given slot.
    let mut segments: Vec<(SegmentEnd, SegmentEnd)> = Vec::new();
    let mut at = std::collections::HashMap::new();
    for line in 1..=4u8 {
        let mut ends = vec![SegmentEnd::Boundary { left: true, line }];
        for &j in &events[line as usize - 1] {
            for entering in [true, false] {
                ends.push(SegmentEnd::Slot(PlatSlot {
                    crossing: j,
                    entering,
                    line,
                }));
            }
        }
        ends.push(SegmentEnd::Boundary { left: false, line });
        for pair in ends.chunks_exact(2) {
            at.insert(pair[0], segments.len());
            at.insert(pair[1], segments.len());
            segments.push((pair[0], pair[1]));
        }
    }

    let cap_partner = |left: bool, line: u8| -> u8 {
        match line {
            1 => 2,
            2 => 1,
            3 => 4,
            4 => 3,
            _ => unreachable!("plat lines are 1..=4, got {line} (left={left})"),
        }
    };

    let mut used = std::collections::HashSet::new();
    let mut arcs = Vec::with_capacity(2 * s);
    for j in 1..=s as u32 {
        for entering in [true, false] {
            for line in 1..=4u8 {
                let start = PlatSlot {
                    crossing: j,
                    entering,
                    line,
                };
                let key = SegmentEnd::Slot(start);
                if !at.contains_key(&key) || used.contains(&start) {
                    continue;
                }
                used.insert(start);
                let mut end = key;
                loop {
                    let (a, b) = segments[at[&end]];
                    end = if end == a { b } else { a };
                    match end {
                        SegmentEnd::Boundary { left, line } => {
                            end = SegmentEnd::Boundary {
                                left,
                                line: cap_partner(left, line),
                            };
                        }
                        SegmentEnd::Slot(slot) => {
                            used.insert(slot);
                            arcs.push((start, slot));
                            break;
                        }
                    }
                }
            }
        }
    }
    assert_eq!(arcs.len(), 2 * s, "every strand end is stitched exactly once");
    arcs
}

/// The crossing-corner label `v_{j,i}` of a vertex: crossing `j` (1-based)
/// and corner position `i` in `1..=4`.
///
/// Corners 1 and 3 are the ends of the under-strand, corners 2 and 4 the
/// ends of the over-strand; the colour-0 edges of the crossing quadrilateral
/// join corners (1,2) and (3,4), the colour-1 edges join (2,3) and (4,1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VertexLabel {
    pub crossing: u32,
    pub position: u8,
}

impl VertexLabel {
    pub fn new(crossing: u32, position: u8) -> Self {
        assert!(crossing >= 1 && (1..=4).contains(&position));
        Self { crossing, position }
    }

    /// Flat vertex index `4 (j - 1) + (i - 1)` used by the construction.
    pub fn vertex(&self) -> u32 {
        4 * (self.crossing - 1) + (self.position as u32 - 1)
    }

    /// Label of a flat vertex index.
    pub fn of_vertex(v: u32) -> Self {
        Self {
            crossing: v / 4 + 1,
            position: (v % 4 + 1) as u8,
        }
    }

    /// The label on the other end of the diagram's half-turn symmetry:
    /// corners 1 and 3 swap, corners 2 and 4 are fixed.
    pub fn mirrored(&self) -> Self {
        let position = match self.position {
            1 => 3,
            3 => 1,
            other => other,
        };
        Self {
            crossing: self.crossing,
            position,
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}.{}", self.crossing, self.position)
    }
}

/// Corner position receiving each crossing end.
///
/// The over-strand always enters along line 2 (the line shared by both
/// crossing kinds) and receives corner 2 there; it leaves on the other line
/// at corner 4.  The under-strand enters on the non-shared line and leaves
/// on line 2; its corners are 1 and 3, placed so that corner 1 sits on the
/// side of line 3 and corner 3 on the side of line 1.  This orientation
/// choice is pinned by the regression tests on the boundary, inner-region
/// and fourth-string cycles of the construction (any other assignment breaks
/// them or the first-homology battery).
fn slot_position(kind: CrossingKind, entering: bool, line: u8) -> u8 {
    use CrossingKind::*;
    match (kind, entering, line) {
        (Sigma2, true, 2) => 2,
        (Sigma2, true, 3) => 1,
        (Sigma2, false, 2) => 3,
        (Sigma2, false, 3) => 4,
        (Sigma1, true, 2) => 2,
        (Sigma1, true, 1) => 3,
        (Sigma1, false, 2) => 1,
        (Sigma1, false, 1) => 4,
        _ => unreachable!("slot on a line not meeting the crossing"),
    }
}

/// The crossing index sets controlling the hand-constructible witness
/// decomposition of the crystallization of `L(p, q)`, `p >= 3`.
///
/// `outer` collects the crossings whose corners 1, 3, 4 (together with
/// corners 1, 2, 3 of crossing 1) form the union of the two cut cycles: the
/// `{0,2}`-cycle and `{1,3}`-cycle through `v_{1,2}`.  `inner` collects the
/// crossings whose corners fill the two long faces of the inner region: the
/// `{1,2}`-cycle through `v_{s,1}` meets corners 1 and 4 over `inner`,
/// its mirror `{0,3}`-cycle corners 3 and 4.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WitnessIndexSets {
    outer: Vec<u32>,
    inner: Vec<u32>,
    crossings: u32,
}

impl WitnessIndexSets {
    /// Crossings in `2..s` of kind `Sigma1`, plus the last crossing `s`.
    pub fn outer(&self) -> &[u32] {
        &self.outer
    }

    /// Crossings in `1..s` of kind `Sigma2`.
    pub fn inner(&self) -> &[u32] {
        &self.inner
    }

    /// Total crossing count `s`.
    pub fn crossings(&self) -> u32 {
        self.crossings
    }

    /// Expected vertex set of the union of the two cut cycles through
    /// `v_{1,2}`: corners 1, 3, 4 of every outer crossing plus
    /// `v_{1,1}, v_{1,2}, v_{1,3}`.
    pub fn expected_cut_union(&self) -> Vec<VertexLabel> {
        let mut out: Vec<VertexLabel> = self
            .outer
            .iter()
            .flat_map(|&j| [1, 3, 4].map(|i| VertexLabel::new(j, i)))
            .collect();
        out.extend([1, 2, 3].map(|i| VertexLabel::new(1, i)));
        out.sort();
        out.dedup();
        out
    }

    /// Expected `{1,2}`-cycle through `v_{s,1}`: corners 1 and 4 of every
    /// inner crossing plus `v_{s,1}, v_{s,4}`.
    pub fn expected_inner_cycle(&self) -> Vec<VertexLabel> {
        let mut out: Vec<VertexLabel> = self
            .inner
            .iter()
            .flat_map(|&j| [1, 4].map(|i| VertexLabel::new(j, i)))
            .collect();
        out.extend([1, 4].map(|i| VertexLabel::new(self.crossings, i)));
        out.sort();
        out
    }

    /// Expected `{0,3}`-cycle through `v_{s,3}` (mirror of the inner cycle):
    /// corners 3 and 4 of every inner crossing plus `v_{s,3}, v_{s,4}`.
    pub fn expected_inner_mirror(&self) -> Vec<VertexLabel> {
        let mut out: Vec<VertexLabel> = self
            .inner
            .iter()
            .flat_map(|&j| [3, 4].map(|i| VertexLabel::new(j, i)))
            .collect();
        out.extend([3, 4].map(|i| VertexLabel::new(self.crossings, i)));
        out.sort();
        out
    }

    /// Expected `{2,3}`-cycle through `v_{1,1}`, the short face running along
    /// the crossing-free line 4: `v_{1,1}, v_{1,3}, v_{2,2}, v_{s,4}`.
    pub fn expected_fourth_line_cycle(&self) -> Vec<VertexLabel> {
        let mut out = vec![
            VertexLabel::new(1, 1),
            VertexLabel::new(1, 3),
            VertexLabel::new(2, 2),
            VertexLabel::new(self.crossings, 4),
        ];
        out.sort();
        out
    }

    /// Expected vertices covered by neither the cut cycles nor the witness
    /// region: corner 2 of every crossing from 3 to `s - 1`.
    pub fn expected_leftover(&self) -> Vec<VertexLabel> {
        (3..self.crossings).map(|j| VertexLabel::new(j, 2)).collect()
    }
}

/// The crystallization of a lens space, with its crossing-corner labelling
/// and the 4-plat diagram it came from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabelledCrystallization {
    graph: ColouredGraph,
    params: LensParams,
    cf: ContinuedFraction,
    diagram: FourPlatDiagram,
}

impl LabelledCrystallization {
    /// Builds the crystallization of `L(p, q)` from its 4-plat diagram.
    ///
    /// Each crossing `j` becomes the colour-`{0,1}` quadrilateral
    /// `v_{j,1} -0- v_{j,2} -1- v_{j,3} -0- v_{j,4} -1- v_{j,1}`; each arc of
    /// the diagram becomes one colour-2 edge between the corners of its two
    /// end slots; colour 3 is the conjugate of colour 2 under the half-turn
    /// mirror swapping corners 1 and 3.
    pub fn build(params: LensParams) -> Self {
        let cf = ContinuedFraction::expand(params);
        let diagram = FourPlatDiagram::from_continued_fraction(&cf);
        let s = diagram.crossing_count();
        let n = 4 * s;

        let mut tables: [Vec<u32>; 4] = std::array::from_fn(|_| vec![u32::MAX; n]);
        let vertex = |j: usize, i: u8| VertexLabel::new(j as u32, i).vertex() as usize;
        for j in 1..=s {
            for (i, k) in [(1, 2), (3, 4)] {
                tables[0][vertex(j, i)] = vertex(j, k) as u32;
                tables[0][vertex(j, k)] = vertex(j, i) as u32;
            }
            for (i, k) in [(2, 3), (4, 1)] {
                tables[1][vertex(j, i)] = vertex(j, k) as u32;
                tables[1][vertex(j, k)] = vertex(j, i) as u32;
            }
        }
        for &(a, b) in diagram.arcs() {
            let u = slot_vertex(&diagram, a);
            let w = slot_vertex(&diagram, b);
            assert!(
                tables[2][u as usize] == u32::MAX && tables[2][w as usize] == u32::MAX,
                "each corner meets exactly one arc"
            );
            tables[2][u as usize] = w;
            tables[2][w as usize] = u;
        }
        let mirror = |v: u32| VertexLabel::of_vertex(v).mirrored().vertex();
        for v in 0..n as u32 {
            tables[3][v as usize] = mirror(tables[2][mirror(v) as usize] as u32);
        }

        let graph = ColouredGraph::from_involutions(tables)
            .expect("4-plat construction yields valid involutions");
        Self {
            graph,
            params,
            cf,
            diagram,
        }
    }

    pub fn graph(&self) -> &ColouredGraph {
        &self.graph
    }

    pub fn params(&self) -> LensParams {
        self.params
    }

    pub fn continued_fraction(&self) -> &ContinuedFraction {
        &self.cf
    }

    pub fn diagram(&self) -> &FourPlatDiagram {
        &self.diagram
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn crossing_count(&self) -> u32 {
        self.diagram.crossing_count() as u32
    }

    /// Flat vertex index of a label.
    pub fn vertex(&self, label: VertexLabel) -> u32 {
        debug_assert!(label.crossing <= self.crossing_count());
        label.vertex()
    }

    /// Label of a flat vertex index.
    pub fn label(&self, v: u32) -> VertexLabel {
        debug_assert!((v as usize) < self.order());
        VertexLabel::of_vertex(v)
    }

    /// The labels of all vertices, in vertex order.
    pub fn labels(&self) -> Vec<VertexLabel> {
        (0..self.order() as u32).map(VertexLabel::of_vertex).collect()
    }

    /// The half-turn mirror on vertices (corners 1 and 3 swap).
    pub fn mirror_vertex(&self, v: u32) -> u32 {
        self.label(v).mirrored().vertex()
    }

    /// Whether the mirror map is an automorphism exchanging colours 0 and 1
    /// as well as colours 2 and 3.  True for every graph this constructor
    /// builds; exposed so that externally loaded or edited graphs can be
    /// checked via [`colour_swap_symmetry`].
    pub fn colour_swap_symmetry(&self) -> bool {
        let map: Vec<u32> = (0..self.order() as u32)
            .map(|v| self.mirror_vertex(v))
            .collect();
        self.graph.is_colour_automorphism(&map, [1, 0, 3, 2])
    }

    /// The crossing index sets of the witness decomposition (needs `p >= 3`,
    /// i.e. at least three crossings).
    pub fn witness_index_sets(&self) -> Result<WitnessIndexSets> {
        if self.params.p < 3 {
            return Err(Error::RequiresPAtLeastThree(self.params.p));
        }
        let s = self.crossing_count();
        let kinds = self.diagram.kinds();
        let mut outer: Vec<u32> = (2..s)
            .filter(|&j| kinds[j as usize - 1] == CrossingKind::Sigma1)
            .collect();
        outer.push(s);
        let inner: Vec<u32> = (1..s)
            .filter(|&j| kinds[j as usize - 1] == CrossingKind::Sigma2)
            .collect();
        Ok(WitnessIndexSets {
            outer,
            inner,
            crossings: s,
        })
    }

    /// Renders the graph in the gem text format, carrying the labels.
    pub fn to_gem_text(&self) -> String {
        crate::gemfile::render(&self.graph, Some(&self.labels()))
    }
}

fn slot_vertex(diagram: &FourPlatDiagram, slot: PlatSlot) -> u32 {
    let kind = diagram.kinds()[slot.crossing as usize - 1];
    let position = slot_position(kind, slot.entering, slot.line);
    VertexLabel::new(slot.crossing, position).vertex()
}

/// Checks the half-turn colour-swap symmetry of an externally supplied graph
/// from its crossing-corner labels: the label mirror must define an
/// automorphism carrying colour 0 to 1 and colour 2 to 3.
///
/// `labels[v]` is the label of vertex `v`; the labelling must be a bijection
/// onto `{1..=s} x {1..=4}` with `4 s` matching the graph order.
pub fn colour_swap_symmetry(graph: &ColouredGraph, labels: &[VertexLabel]) -> Result<bool> {
    let n = graph.order();
    if labels.len() != n {
        return Err(Error::BadLabels(format!(
            "{} labels for {} vertices",
            labels.len(),
            n
        )));
    }
    let s = n / 4;
    let mut vertex_of = vec![u32::MAX; n];
    for (v, label) in labels.iter().enumerate() {
        if label.crossing < 1 || label.crossing as usize > s || !(1..=4).contains(&label.position) {
            return Err(Error::BadLabels(format!("label {label} out of range")));
        }
        let flat = label.vertex() as usize;
        if vertex_of[flat] != u32::MAX {
            return Err(Error::BadLabels(format!("label {label} used twice")));
        }
        vertex_of[flat] = v as u32;
    }
    let map: Vec<u32> = labels
        .iter()
        .map(|label| vertex_of[label.mirrored().vertex() as usize])
        .collect();
    Ok(graph.is_colour_automorphism(&map, [1, 0, 3, 2]))
}
