//! Checks that determinantal semi-invariants span each weight space: an
//! independent oracle for the invariants of fixed A-degree, the contraction
//! invariants `f_Gamma` with their determinantal forms, polarization, and
//! the span report.

mod gamma;
mod maps;
mod oracle;
mod polar;
mod span;

pub use gamma::{
    contraction_check, enumerate_gamma, f_gamma, phi_gamma, Block, ContractionCheck, GammaData,
    KPair, Label, PhiGamma,
};
pub use maps::{enumerate_maps, SearchBounds};
pub use oracle::{weight_space_basis, MonomialSpace};
pub use polar::{build_q_chi, polarize, restitute, QChi};
pub use span::{span_check, GeneratorEntry, SpanReport, Strategy};
