//! Brute-force checks of finite Ramsey statements, the Sierpiński
//! coloring, and a small driver for scripted coloring experiments.

mod experiment;
mod finite;
mod sierpinski;

pub use experiment::{
    color_experiment, ColoringExperiment, ColoringSpec, ExperimentResult, Provenance, SearchSpec, UniverseSpec,
};
pub use finite::{finite_ramsey_check, k_subsets, monochromatic_subset, RamseyOutcome, EXHAUSTIVE_BUDGET};
pub use sierpinski::{sierpinski_color, verify_sierpinski_persistence, Persistence, PERSISTENCE_MAX_DEPTH};
