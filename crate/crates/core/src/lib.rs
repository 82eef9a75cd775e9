//! Zigzags, z-orientations and Markov chains of triangulated closed surfaces.
//!
//! - [`surface`]: validated triangulations, generators, connected sums,
//!   subdivision and the `.tri` format.
//! - [`zigzag`]: zigzag tracing, z-orientations and type I / II classification.
//! - [`markov`]: the transition chain of a z-oriented triangulation, its
//!   period, ergodicity and exact stationary distribution.
//! - [`coloring`]: exact 3-colouring, mod-3 potentials and colour factors.
//! - [`lab`]: exhaustive verification over all z-orientations and the
//!   catalogue of named examples.

pub mod coloring;
pub mod lab;
pub mod markov;
pub mod surface;
pub mod zigzag;

pub use coloring::{three_color, ColorFactor, Coloring};
pub use lab::{verify_theorem1, Case, Instance, TauName, VerificationReport};
pub use markov::{build_chain, ChainAnalysis, TransitionChain};
pub use surface::{SurfaceReport, Triangulation, VertexMap};
pub use zigzag::{classify, EdgeType, FaceType, ZOrientation, Zigzag, ZigzagSystem};
