use thiserror::Error;

/// Errors produced by graph validation, constructions and file parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A coloured graph needs an even number of vertices (each colour is a
    /// perfect matching) and at least one edge per colour.
    #[error("graph order must be even and at least 2, got {0}")]
    BadOrder(usize),

    /// An involution table does not have one entry per vertex.
    #[error("involution table for colour {colour} has length {len}, expected {expected}")]
    TableLength {
        colour: u8,
        len: usize,
        expected: usize,
    },

    /// An involution table entry points outside the vertex range.
    #[error("colour {colour} maps vertex {vertex} out of range")]
    VertexOutOfRange { colour: u8, vertex: u32 },

    /// Colour maps must be fixed-point-free (no loops).
    #[error("colour {colour} fixes vertex {vertex}; colour maps must be fixed-point-free")]
    FixedPoint { colour: u8, vertex: u32 },

    /// Colour maps must be involutions.
    #[error("colour {colour} is not an involution at vertex {vertex}")]
    NotInvolution { colour: u8, vertex: u32 },

    /// The operation needs a connected graph.
    #[error("graph is disconnected")]
    Disconnected,

    /// The operation needs a crystallization of a closed 3-manifold
    /// (connected, contracted, all residues spherical).
    #[error("graph is not a crystallization of a closed 3-manifold")]
    NotCrystallization,

    /// The operation needs a bipartite graph.
    #[error("graph is not bipartite")]
    NotBipartite,

    /// The named vertices are not joined by between one and three colours.
    #[error("vertices {0} and {1} do not span a dipole")]
    NotADipole(u32, u32),

    /// A dipole may only be cancelled when its two vertices lie in distinct
    /// components of the residue avoiding the dipole colours.
    #[error("dipole at ({0}, {1}) is not eliminable: both ends lie in the same residue")]
    DipoleNotEliminable(u32, u32),

    /// Dipole insertion takes between one and three distinct colours.
    #[error("dipole colour set must contain 1 to 3 distinct colours in 0..=3")]
    BadDipoleColours,

    /// Lens space parameters need `p >= 2`.
    #[error("lens space parameters require p >= 2, got p = {0}")]
    LensOrderTooSmall(u64),

    /// Lens space parameters need `gcd(p, q) = 1`.
    #[error("lens space parameters require gcd(p, q) = 1, got ({0}, {1})")]
    LensNotCoprime(u64, i64),

    /// The witness decomposition needs at least three crossings, i.e. `p >= 3`.
    #[error("operation requires p >= 3, got p = {0}")]
    RequiresPAtLeastThree(u64),

    /// A cycle index passed to the region decomposition does not name a cycle
    /// of the requested family.
    #[error("cycle index {index} out of range for the {family} cycle family (size {size})")]
    NoSuchCycle {
        index: usize,
        family: &'static str,
        size: usize,
    },

    /// The three bipartition-compatible relation matrices must present the
    /// same group; disagreement means the input was not a crystallization of
    /// a closed orientable 3-manifold.
    #[error("first-homology presentations disagree across colour partitions")]
    PartitionDisagreement,

    /// Enumeration bounds must be even and at least 2.
    #[error("maximum order must be even and at least 2, got {0}")]
    BadMaxOrder(usize),

    /// Text-format parse failure with the offending line number (1-based).
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The operation needs a complete crossing-corner labelling of the graph.
    #[error("vertex labelling is missing or incomplete: {0}")]
    BadLabels(String),
}

pub type Result<T> = std::result::Result<T, Error>;
