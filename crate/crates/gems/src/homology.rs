//! First homology of the encoded manifold via integer Smith normal form.
//!
//! For a bipartite crystallization and a colour-pair partition
//! `{a,b} | {c,d}`, the `{a,b}`-cycles minus one generate the first homology
//! and the `{c,d}`-cycles minus one give the relators: a relator cycle
//! contributes `+1` or `-1` (by bipartition class) for every vertex it
//! shares with a generator cycle.  All three partitions must present the
//! same group; disagreement is reported as an error.

use crate::error::{Error, Result};
use crate::graph::{ColouredGraph, PartitionPair};
use std::fmt;

/// Integer relation matrix presenting the first homology group with respect
/// to one partition: `entries` is row-major with `rows * cols` values,
/// rows indexed by relator cycles, columns by generator cycles.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationMatrix {
    pub partition: PartitionPair,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<i64>,
}

/// Builds the relation matrix of `partition`.  The graph must be connected
/// and bipartite (as every crystallization of an orientable manifold is).
pub fn relation_matrix(g: &ColouredGraph, partition: PartitionPair) -> Result<RelationMatrix> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let class = g.bipartition().ok_or(Error::NotBipartite)?;
    let [a, b] = partition.first();
    let [c, d] = partition.second();
    let generators = g.cycle_family(a, b);
    let relators = g.cycle_family(c, d);
    let cols = generators.count() - 1;
    let rows = relators.count() - 1;
    let mut entries = vec![0i64; rows * cols];
    for (r, cycle) in relators.cycles()[..rows].iter().enumerate() {
        for &v in cycle.vertices() {
            let gen = generators.cycle_of(v);
            if gen < cols {
                let sign = if class[v as usize] == 0 { 1 } else { -1 };
                entries[r * cols + gen] += sign;
            }
        }
    }
    Ok(RelationMatrix {
        partition,
        rows,
        cols,
        entries,
    })
}

/// The diagonal of the Smith normal form: `rank` nonzero invariant factors
/// `d_1 | d_2 | ... | d_rank`, all positive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmithNormalForm {
    pub rank: usize,
    pub invariant_factors: Vec<u64>,
}

/// Computes the Smith normal form of an integer matrix by pivoting on the
/// smallest nonzero entry, clearing its row and column, and restoring the
/// divisibility chain.  Arithmetic is checked 128-bit; entry growth beyond
/// that range panics (unreachable for the matrix sizes and entries produced
/// by this crate).
// The elimination loops combine two distinct rows, which indexed access
// states more directly than a split_at_mut dance.
#[allow(clippy::needless_range_loop)]
pub fn smith_normal_form(rows: usize, cols: usize, entries: &[i64]) -> SmithNormalForm {
    assert_eq!(entries.len(), rows * cols, "entry count matches dimensions");
    let mut m: Vec<Vec<i128>> = (0..rows)
        .map(|r| entries[r * cols..(r + 1) * cols]
            .iter()
            .map(|&e| e as i128)
            .collect())
        .collect();

    let add = |x: i128, y: i128| x.checked_add(y).expect("overflow in Smith reduction");
    let mul = |x: i128, y: i128| x.checked_mul(y).expect("overflow in Smith reduction");

    let dim = rows.min(cols);
    let mut k = 0;
    while k < dim {
        // Smallest nonzero entry of the trailing submatrix becomes the pivot.
        let mut pivot: Option<(usize, usize)> = None;
        let mut smallest = i128::MAX;
        for (i, row) in m.iter().enumerate().skip(k) {
            for (j, &e) in row.iter().enumerate().skip(k) {
                let a = e.abs();
                if a != 0 && a < smallest {
                    smallest = a;
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(k, pi);
        if pj != k {
            for row in &mut m {
                row.swap(k, pj);
            }
        }

        loop {
            let mut moved = false;
            for i in k + 1..rows {
                if m[i][k] != 0 {
                    let q = m[i][k] / m[k][k];
                    if q != 0 {
                        for j in k..cols {
                            m[i][j] = add(m[i][j], -mul(q, m[k][j]));
                        }
                    }
                    if m[i][k] != 0 {
                        // Remainder is strictly smaller than the pivot.
                        m.swap(i, k);
                        moved = true;
                    }
                }
            }
            if moved {
                continue;
            }
            for j in k + 1..cols {
                if m[k][j] != 0 {
                    let q = m[k][j] / m[k][k];
                    if q != 0 {
                        for row in m.iter_mut() {
                            row[j] = add(row[j], -mul(q, row[k]));
                        }
                    }
                    if m[k][j] != 0 {
                        for row in &mut m {
                            row.swap(k, j);
                        }
                        moved = true;
                    }
                }
            }
            if moved {
                continue;
            }
            // Row and column are clear; enforce divisibility of the trailing
            // submatrix by folding a bad row into the pivot row.
            let p = m[k][k];
            let mut divisible = true;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if m[i][j] % p != 0 {
                        for jj in k..cols {
                            m[k][jj] = add(m[k][jj], m[i][jj]);
                        }
                        divisible = false;
                        break 'scan;
                    }
                }
            }
            if divisible {
                break;
            }
        }
        k += 1;
    }

    let invariant_factors = (0..k)
        .map(|i| u64::try_from(m[i][i].unsigned_abs()).expect("invariant factor fits u64"))
        .collect();
    SmithNormalForm {
        rank: k,
        invariant_factors,
    }
}

/// A finitely generated abelian group `Z^rank + Z/d_1 + ... + Z/d_t` with
/// `d_1 | d_2 | ... | d_t` and every `d_i >= 2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// The cyclic group of order `n >= 1` (`n = 1` gives the trivial group).
    pub fn cyclic(n: u64) -> Self {
        assert!(n >= 1, "cyclic groups have positive order");
        Self {
            free_rank: 0,
            torsion: if n > 1 { vec![n] } else { Vec::new() },
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Rendering without spaces, for single-token file formats.
    pub fn token(&self) -> String {
        self.to_string().replace(' ', "")
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z^{}", self.free_rank)?;
        for d in &self.torsion {
            write!(f, " + Z/{d}")?;
        }
        Ok(())
    }
}

/// The cokernel `Z^cols / rowspace` of an integer matrix.
pub fn cokernel(rows: usize, cols: usize, entries: &[i64]) -> AbelianGroup {
    let snf = smith_normal_form(rows, cols, entries);
    AbelianGroup {
        free_rank: cols - snf.rank,
        torsion: snf
            .invariant_factors
            .into_iter()
            .filter(|&d| d > 1)
            .collect(),
    }
}

/// First homology group of the manifold encoded by a bipartite
/// crystallization.  Presents the group via all three partitions and checks
/// that they agree.
///
/// The cycle presentation is only valid on contracted graphs; on other
/// connected bipartite gems the partitions typically disagree and the
/// cross-check fails with [`Error::PartitionDisagreement`].
pub fn first_homology(g: &ColouredGraph) -> Result<AbelianGroup> {
    let mut groups = PartitionPair::ALL.into_iter().map(|partition| {
        relation_matrix(g, partition)
            .map(|m| cokernel(m.rows, m.cols, &m.entries))
    });
    let reference = groups.next().expect("three partitions")?;
    for group in groups {
        if group? != reference {
            return Err(Error::PartitionDisagreement);
        }
    }
    Ok(reference)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_of_known_matrices() {
        let snf = smith_normal_form(2, 2, &[2, 4, 4, 2]);
        assert_eq!(snf.rank, 2);
        assert_eq!(snf.invariant_factors, vec![2, 6]);

        let snf = smith_normal_form(2, 2, &[2, 0, 0, 3]);
        assert_eq!(snf.invariant_factors, vec![1, 6]);

        let snf = smith_normal_form(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 1]);
        assert_eq!(snf.invariant_factors, vec![1, 1, 1]);

        let snf = smith_normal_form(2, 3, &[0, 0, 0, 0, 0, 0]);
        assert_eq!(snf.rank, 0);
        assert!(snf.invariant_factors.is_empty());

        let snf = smith_normal_form(1, 1, &[-21]);
        assert_eq!(snf.invariant_factors, vec![21]);
    }

    #[test]
    fn divisibility_chain_holds() {
        let snf = smith_normal_form(3, 3, &[6, 10, 15, 10, 15, 6, 15, 6, 10]);
        for pair in snf.invariant_factors.windows(2) {
            assert_eq!(pair[1] % pair[0], 0, "chain {:?}", snf.invariant_factors);
        }
    }

    #[test]
    fn cokernels_and_rendering() {
        assert_eq!(cokernel(1, 1, &[0]).to_string(), "Z^1");
        assert_eq!(cokernel(1, 1, &[5]).to_string(), "Z^0 + Z/5");
        assert_eq!(cokernel(2, 2, &[2, 0, 0, 3]).to_string(), "Z^0 + Z/6");
        assert_eq!(cokernel(0, 2, &[]).to_string(), "Z^2");
        assert_eq!(AbelianGroup::trivial().to_string(), "Z^0");
        assert_eq!(AbelianGroup::cyclic(1), AbelianGroup::trivial());
        assert_eq!(AbelianGroup::cyclic(21).token(), "Z^0+Z/21");
        assert!(AbelianGroup::trivial().is_trivial());
        assert_eq!(AbelianGroup::free(2).free_rank(), 2);
    }

    #[test]
    fn sphere_gem_has_trivial_homology() {
        let g = ColouredGraph::from_involutions(std::array::from_fn(|_| vec![1, 0])).unwrap();
        let m = relation_matrix(&g, PartitionPair::ALL[0]).unwrap();
        assert_eq!((m.rows, m.cols), (0, 0));
        assert_eq!(first_homology(&g).unwrap(), AbelianGroup::trivial());
    }

    #[test]
    fn non_bipartite_and_disconnected_inputs_fail() {
        let g = ColouredGraph::from_involutions([
            vec![1, 0, 3, 2],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ])
        .unwrap();
        assert_eq!(
            relation_matrix(&g, PartitionPair::ALL[0]).unwrap_err(),
            Error::NotBipartite
        );
        let g = ColouredGraph::from_involutions(std::array::from_fn(|_| vec![1, 0, 3, 2])).unwrap();
        assert_eq!(first_homology(&g).unwrap_err(), Error::Disconnected);
    }
}
