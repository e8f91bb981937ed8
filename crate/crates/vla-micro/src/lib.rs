//! Desk-scale mixture-of-experts vision-language-action testbed.
//!
//! The crate builds a complete miniature VLA stack on synthetic symbolic
//! worlds: dataset generators for a math-matching game and a toy-placement
//! task, a word-level tokenizer, a decoder transformer backbone whose
//! feed-forward blocks are dynamic mixture-of-experts layers, a diffusion
//! action expert with adaptive scale/shift conditioning, the staged training
//! pipeline (pretrain, co-train, backbone-frozen reasoning-following), and a
//! closed-loop evaluation suite with rubric scoring and an ablation runner.
//!
//! Everything runs in 64-bit floats on CPU and is deterministic given a seed.

pub mod action_expert;
pub mod backbone;
pub mod error;
pub mod evalsuite;
pub mod harness;
pub mod moe;
pub mod nn;
pub mod rng;
pub mod synthworld;
pub mod tokenizer;
pub mod training;

pub use error::{Result, VlaError};
