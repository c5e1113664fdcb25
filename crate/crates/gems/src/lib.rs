//! Edge-coloured graph encodings ("gems") of closed 3-manifolds.
//!
//! A 4-coloured graph is a 4-regular multigraph whose edges are properly
//! coloured with the colours `0..=3`; equivalently, four fixed-point-free
//! involutions on a common vertex set.  Such graphs encode closed
//! 3-dimensional pseudomanifolds, and the contracted ones whose residues are
//! all spheres (crystallizations) encode closed 3-manifolds.
//!
//! The crate provides:
//!
//! * [`graph`] — the core [`ColouredGraph`](graph::ColouredGraph) type,
//!   bicoloured cycles, residues, and the closed-3-manifold recognition test;
//! * [`surface`] — regular embeddings of a gem into closed surfaces and the
//!   regular genus;
//! * [`code`] — a canonical code deciding colour-preserving isomorphism up to
//!   vertex relabelling and colour permutation;
//! * [`dipole`] — dipole detection, insertion and elimination (the moves
//!   connecting different gems of the same manifold);
//! * [`homology`] — integer Smith normal form and the first homology group of
//!   the encoded manifold;
//! * [`lens`] — the 4-plat construction producing, for every lens space
//!   `L(p, q)`, a crystallization with `4 S(p, q)` vertices, where `S(p, q)`
//!   is the sum of the continued-fraction expansion of `q / p`;
//! * [`gm`] — gem-Matveev complexity: exhaustive minimisation over cycle-pair
//!   cuts and regions, plus the hand-constructible witness decomposition for
//!   the lens crystallizations;
//! * [`catalogue`] — exhaustive, isomorphism-free enumeration of small
//!   crystallizations and batch verification over ranges of lens parameters;
//! * [`gemfile`] — a plain-text interchange format for coloured graphs.

pub mod catalogue;
pub mod code;
pub mod dipole;
mod error;
pub mod gemfile;
pub mod gm;
pub mod graph;
pub mod homology;
pub mod lens;
pub mod surface;

pub use error::{Error, Result};
