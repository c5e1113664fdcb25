//! Regular embeddings of a 4-coloured graph into closed surfaces, and the
//! regular genus.
//!
//! Every partition of the four colours into two pairs `{a,b} | {c,d}` induces
//! an embedding of the graph into a closed surface whose faces are exactly
//! the bicoloured cycles of the four mixed pairs `{a,c}, {c,b}, {b,d}, {d,a}`.
//! The surface is orientable precisely when the graph is bipartite.

use crate::error::{Error, Result};
use crate::graph::{ColouredGraph, PartitionPair};

/// The closed surface of the regular embedding induced by one colour-pair
/// partition.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EmbeddingSurface {
    pub partition: PartitionPair,
    /// Total number of faces (bicoloured cycles over the four mixed pairs).
    pub faces: usize,
    /// `faces - order`, since the embedded graph has `n` vertices and `2n`
    /// edges.
    pub euler_characteristic: i64,
    /// Orientable iff the graph is bipartite.
    pub orientable: bool,
    /// Genus of the surface if orientable, crosscap number otherwise.
    pub genus: u64,
}

/// Computes the surface of the regular embedding for `partition`.
///
/// The graph must be connected, otherwise the cycle count does not describe
/// a single closed surface.
pub fn embedding_surface(g: &ColouredGraph, partition: PartitionPair) -> Result<EmbeddingSurface> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let faces: usize = partition
        .face_families()
        .into_iter()
        .map(|[a, b]| g.cycle_family(a, b).count())
        .sum();
    let chi = faces as i64 - g.order() as i64;
    let orientable = g.bipartition().is_some();
    let genus = if orientable {
        // A connected bipartite graph embeds into an orientable surface, whose
        // Euler characteristic is even.
        assert!(chi % 2 == 0, "odd Euler characteristic on a bipartite graph");
        u64::try_from((2 - chi) / 2).expect("embedding surface has positive Euler characteristic")
    } else {
        u64::try_from(2 - chi).expect("non-orientable embedding surface with chi > 1")
    };
    Ok(EmbeddingSurface {
        partition,
        faces,
        euler_characteristic: chi,
        orientable,
        genus,
    })
}

/// The surfaces of all three regular embeddings, in [`PartitionPair::ALL`]
/// order.
pub fn embedding_surfaces(g: &ColouredGraph) -> Result<[EmbeddingSurface; 3]> {
    let mut out = [None, None, None];
    for (i, partition) in PartitionPair::ALL.into_iter().enumerate() {
        out[i] = Some(embedding_surface(g, partition)?);
    }
    Ok(out.map(|s| s.expect("all three partitions computed")))
}

/// The regular genus: the minimum genus (or crosscap number, when the graph
/// is not bipartite) over the three regular embeddings.
pub fn regular_genus(g: &ColouredGraph) -> Result<u64> {
    Ok(embedding_surfaces(g)?
        .into_iter()
        .map(|s| s.genus)
        .min()
        .expect("three embeddings yield a minimum"))
}
