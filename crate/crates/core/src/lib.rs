//! Exact computations on the Farey AF algebra and its θ-indexed ideals,
//! plus a small floating-point engine for Lip-norms and Monge-Kantorovich
//! distances on finite-dimensional algebras.
//!
//! The exact layer ([`cf`], [`farey`], [`bratteli`], [`ideal`], [`theta`])
//! uses big integers and rationals throughout; [`qmetric`] is the only
//! module that works in floating point.

pub mod bratteli;
pub mod cf;
pub mod distance;
pub mod error;
pub mod farey;
pub mod format;
pub mod ideal;
pub mod matrix;
pub mod qmetric;
pub mod theta;

pub use bratteli::{
    diagram_from_matrices, effros_shen_diagram, farey_diagram, BratteliDiagram, DiagramFile,
};
pub use cf::{baire_distance, CfOrdering, ContinuedFraction, ConvergentPair, RationalComparator};
pub use distance::Distance;
pub use error::{Error, Result};
pub use farey::{check_unital_embedding, farey_level, farey_multiplicity_matrix, FareyLevel};
pub use ideal::{
    detect_fusing, enumerate_coherent_ideals, ideal_metric, restrict_level, validate_ideal,
    FusingReport, IdealDiagram, IdealValidity, LevelwiseIdeal,
};
pub use matrix::MultiplicityMatrix;
pub use theta::{
    effros_shen_identification, j_sequence, AffineCoefficient, IdentificationReport, SwapRule,
    ThetaIdeal,
};
