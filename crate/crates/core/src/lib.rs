//! Heighway dragon curves built two ways: by unfolding (copy, rotate and join)
//! and by folding (interleave alternating creases), generalized to per-step
//! clockwise or anticlockwise instructions.
//!
//! Besides the constructions the crate carries everything needed to check that
//! they agree: the interleave algebra ([`turn`]), a lattice embedding and SVG
//! renderer ([`geometry`], [`render`]), a paper-strip folding simulation
//! ([`paperfold`]) and an executable law suite ([`laws`]).
//!
//! ```
//! use dragoncurve::{classic_instructions, dragon_fold, dragon_unfold};
//!
//! let rs = classic_instructions(3);
//! assert_eq!(dragon_unfold(&rs).to_string(), "LLRLLRR");
//! assert_eq!(dragon_fold(&rs), dragon_unfold(&rs));
//! ```

pub mod cli;
pub mod construct;
mod error;
pub mod geometry;
pub mod laws;
pub mod paperfold;
pub mod render;
pub mod turn;

pub use construct::{
    classic_instructions, dragon_fold, dragon_unfold, fold_step, stream_prefix, stream_turn_at,
    unfold_step, Instructions, Rot,
};
pub use error::{Error, Result};
pub use turn::{interleave, AlternatingStream, Curve, Turn};
