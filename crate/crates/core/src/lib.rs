//! Numerical toolkit for higher-order interference in generalized probabilistic theories.
//!
//! * [`numerics`]: dense complex linear algebra (Kronecker products, partial traces,
//!   a Jacobi eigensolver for Hermitian matrices).
//! * [`sorkin`]: theory-agnostic n-slit experiments and the interference terms `I_n`.
//! * [`densitycube`]: three-level density cubes, their C-basis, transformations, the
//!   quantum embedding and hyper-decoherence.
//! * [`collision`]: the three-collision oracle problem for qutrits and density cubes.
//! * [`qqt`]: quartic quantum theory states, effects, slit experiments and composites.

pub mod collision;
pub mod densitycube;
pub mod numerics;
pub mod qqt;
pub mod sampling;
pub mod sorkin;

pub use numerics::{
    eig_hermitian, is_unitary, partial_trace, tensor_product, ComplexMatrix, EigenDecomposition,
    NumericsError, TracedFactor, C64, DEFAULT_TOL, EIG_TOL,
};
pub use sorkin::{sorkin_i, validate_experiment, SlitExperiment, SubsetMask, Theory};
