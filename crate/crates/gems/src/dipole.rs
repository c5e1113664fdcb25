//! Dipole moves: the local modifications connecting different gems of the
//! same manifold.
//!
//! An `h`-dipole (`1 <= h <= 3`) is a pair of vertices joined by exactly the
//! colours of an `h`-element set `C`, whose ends lie in different components
//! of the residue spanned by the complementary colours.  Eliminating a
//! dipole deletes the pair and welds the dangling complementary-coloured
//! edges end to end; inserting one is the inverse move.  Both preserve the
//! represented manifold.

use crate::error::{Error, Result};
use crate::graph::{ColouredGraph, COLOURS};

/// A vertex pair spanning a dipole, with the sorted set of joining colours.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dipole {
    x: u32,
    y: u32,
    colours: Vec<u8>,
}

impl Dipole {
    /// The two spanning vertices, ascending.
    pub fn vertices(&self) -> (u32, u32) {
        (self.x, self.y)
    }

    /// The joining colours, ascending; the dipole order `h` is their count.
    pub fn colours(&self) -> &[u8] {
        &self.colours
    }

    pub fn order(&self) -> usize {
        self.colours.len()
    }

    fn complement(&self) -> Vec<u8> {
        COLOURS
            .into_iter()
            .filter(|c| !self.colours.contains(c))
            .collect()
    }
}

/// The colours joining two distinct vertices (possibly empty).
pub fn joining_colours(g: &ColouredGraph, x: u32, y: u32) -> Vec<u8> {
    COLOURS
        .into_iter()
        .filter(|&c| g.neighbour(x, c) == y)
        .collect()
}

/// Identifies the dipole spanned by `x` and `y`, checking that they are
/// joined by one to three colours and lie in different components of the
/// complementary residue.
pub fn dipole_at(g: &ColouredGraph, x: u32, y: u32) -> Result<Dipole> {
    let n = g.order() as u32;
    if x == y || x >= n || y >= n {
        return Err(Error::NotADipole(x, y));
    }
    let (x, y) = if x < y { (x, y) } else { (y, x) };
    let colours = joining_colours(g, x, y);
    if colours.is_empty() || colours.len() == 4 {
        return Err(Error::NotADipole(x, y));
    }
    let dipole = Dipole { x, y, colours };
    if !is_eliminable(g, &dipole) {
        return Err(Error::DipoleNotEliminable(x, y));
    }
    Ok(dipole)
}

/// Whether the pair's ends lie in different components of the residue
/// avoiding the dipole colours (the condition making the elimination a
/// manifold-preserving move).
pub fn is_eliminable(g: &ColouredGraph, dipole: &Dipole) -> bool {
    let (comp, _) = g.components_with(&dipole.complement());
    comp[dipole.x as usize] != comp[dipole.y as usize]
}

/// Eliminates a dipole: removes its two vertices and welds each
/// complementary-coloured edge pair.  The remaining vertices keep their
/// relative order (indices shift down past the removed pair).
pub fn eliminate_dipole(g: &ColouredGraph, dipole: &Dipole) -> Result<ColouredGraph> {
    let (x, y) = (dipole.x, dipole.y);
    if joining_colours(g, x, y) != dipole.colours {
        return Err(Error::NotADipole(x, y));
    }
    if !is_eliminable(g, dipole) {
        return Err(Error::DipoleNotEliminable(x, y));
    }
    let n = g.order();
    let new_id = |v: u32| v - u32::from(v > x) - u32::from(v > y);
    let mut tables: [Vec<u32>; 4] = std::array::from_fn(|_| vec![0; n - 2]);
    for c in COLOURS {
        for v in 0..n as u32 {
            if v == x || v == y {
                continue;
            }
            let mut w = g.neighbour(v, c);
            if w == x {
                w = g.neighbour(y, c);
            } else if w == y {
                w = g.neighbour(x, c);
            }
            debug_assert!(w != x && w != y, "welded partner is outside the dipole");
            tables[c as usize][new_id(v) as usize] = new_id(w);
        }
    }
    ColouredGraph::from_involutions(tables)
}

/// Inserts a dipole of the given colours into the colour-`c` corner of
/// `anchor` for every complementary colour `c`: the new vertex `x = n` takes
/// over the complementary edges of `anchor`, the new vertex `y = n + 1` is
/// joined to `anchor` by every complementary colour and to `x` by every
/// dipole colour.
///
/// The returned dipole is always eliminable (the complementary residue
/// component of `y` is exactly `{anchor, y}`), and eliminating it restores
/// the original graph identically.
pub fn insert_dipole(
    g: &ColouredGraph,
    anchor: u32,
    colours: &[u8],
) -> Result<(ColouredGraph, Dipole)> {
    let mut sorted = colours.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != colours.len() || sorted.is_empty() || sorted.len() > 3 {
        return Err(Error::BadDipoleColours);
    }
    if sorted.iter().any(|&c| c > 3) {
        return Err(Error::BadDipoleColours);
    }
    let n = g.order() as u32;
    if anchor >= n {
        return Err(Error::VertexOutOfRange {
            colour: sorted[0],
            vertex: anchor,
        });
    }

    let x = n;
    let y = n + 1;
    let mut tables: [Vec<u32>; 4] = std::array::from_fn(|c| {
        let mut t = g.involution(c as u8).to_vec();
        t.extend([0, 0]);
        t
    });
    for c in COLOURS {
        let t = &mut tables[c as usize];
        if sorted.contains(&c) {
            t[x as usize] = y;
            t[y as usize] = x;
        } else {
            let far = g.neighbour(anchor, c);
            t[x as usize] = far;
            t[far as usize] = x;
            t[y as usize] = anchor;
            t[anchor as usize] = y;
        }
    }
    let graph = ColouredGraph::from_involutions(tables)
        .expect("dipole insertion preserves the matching structure");
    let dipole = Dipole {
        x,
        y,
        colours: sorted,
    };
    debug_assert!(is_eliminable(&graph, &dipole));
    Ok((graph, dipole))
}

/// All eliminable dipoles of the graph, ordered by vertex pair.
pub fn find_eliminable_dipoles(g: &ColouredGraph) -> Vec<Dipole> {
    let n = g.order() as u32;
    let mut out = Vec::new();
    for x in 0..n {
        let mut partners: Vec<u32> = COLOURS.into_iter().map(|c| g.neighbour(x, c)).collect();
        partners.sort_unstable();
        partners.dedup();
        for y in partners {
            if y <= x {
                continue;
            }
            let colours = joining_colours(g, x, y);
            if colours.is_empty() || colours.len() == 4 {
                continue;
            }
            let dipole = Dipole { x, y, colours };
            if is_eliminable(g, &dipole) {
                out.push(dipole);
            }
        }
    }
    out
}
