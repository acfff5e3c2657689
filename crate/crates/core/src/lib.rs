//! Finite tree machinery for Ramsey theory on infinite structures.
//!
//! The crate works entirely inside the binary tree `2^{<ω}`:
//!
//! * [`seqtree`]: binary sequences, level trees, strong subtrees and
//!   finite Halpern–Läuchli / Milliken witness search;
//! * [`coding`]: trees with coding nodes, passing-number decoding of
//!   graphs, the `K_k`-free branching criterion and prefix builders for the
//!   Henson coding trees `S_k`, `T_k` and the Rado coding tree `T_R`;
//! * [`cliques`]: pre-cliques and the Witnessing Property;
//! * [`similarity`]: strong similarity maps, canonical similarity types and
//!   type enumeration for antichains coding a finite graph;
//! * [`ramseylab`]: brute-force checks of finite Ramsey statements and the
//!   Sierpiński coloring;
//! * [`io`]: canonical JSON and DOT output.

pub mod cliques;
pub mod coding;
pub mod error;
pub mod io;
pub mod ramseylab;
pub mod seqtree;
pub mod similarity;

pub use coding::{CodingTree, FiniteGraph, TreeKind};
pub use error::{Error, Result};
pub use seqtree::{seq, BinSeq, LevelTree, StrongSubtree};
pub use similarity::{Mode, SimilarityType};
