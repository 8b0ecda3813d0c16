//! Exact linear algebra.

pub mod embed;
pub mod hessenberg;
pub mod jordan;
pub mod matrix;
pub mod normal;
pub mod spectral;

pub use jordan::{jordan_form, JordanBlock, JordanForm};
pub use matrix::{dot, Matrix, Solution};
pub use normal::{spectral_decomposition_normal, ComplexEigenVector, NormalDecomposition};
pub use spectral::{
    pencil_decomposition, spectral_decomposition, spectrum, EigenVector, PencilDecomposition, SpectralDecomposition,
};
