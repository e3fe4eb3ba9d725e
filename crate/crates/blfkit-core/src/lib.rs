//! Curves, Dehn twists and Hurwitz cycle systems on closed oriented surfaces.
//!
//! Curves are reduced cyclic words in the one-vertex ribbon graph of the
//! 4g-gon, which is exact for the punctured surface; the closed surface is
//! reached by pushing the puncture (see [`closed`]). Everything above that is
//! built on three primitives: intersection counting, twisting, and cutting.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod blf;
pub mod capping;
pub mod closed;
pub mod curves;
pub mod cut;
pub mod equivalence;
pub mod error;
pub mod homology;
pub mod intersect;
pub mod mcg;
pub mod model;
pub mod surface;
pub mod twist;
pub mod word;

pub use blf::{CycleSystem, ValidationReport, Verdict};
pub use curves::{ArcClass, CurveClass};
pub use error::{Error, Result};
pub use homology::SymplecticMatrix;
pub use mcg::TwistWord;
pub use model::SurfaceModel;
