//! Power graphs of cyclic and dihedral groups.
//!
//! The crate builds the power graph of `Z_n` or `D_2n`, assembles its
//! adjacency, Laplacian and signless Laplacian matrices, computes their
//! characteristic polynomials exactly, and checks closed-form spectrum
//! formulas against that exact result.
//!
//! ```
//! use powerspec::linalg::char_poly_exact;
//! use powerspec::roots::{default_precision, spectrum_from_charpoly};
//! use powerspec::{GroupSpec, MatrixKind, PowerGraph};
//!
//! let g = PowerGraph::build(GroupSpec::dihedral(6)?);
//! let p = char_poly_exact(&g.matrix(MatrixKind::Laplacian));
//! let spectrum = spectrum_from_charpoly(&p, &default_precision())?;
//! assert_eq!(spectrum.to_text(), "0 ×1, 1 ×6, 3 ×1, 5 ×1, 6 ×2, 12 ×1");
//! # Ok::<(), powerspec::Error>(())
//! ```

pub mod claims;
pub mod cli;
pub mod error;
pub mod graph;
pub mod group;
pub mod linalg;
pub mod poly;
pub mod roots;
pub mod verify;

pub use claims::{ClaimBody, MatrixKind, SpectrumClaim};
pub use error::{Error, Result};
pub use graph::{CanonicalPartition, PowerGraph};
pub use group::{GroupElement, GroupKind, GroupSpec, PrimePair};
pub use linalg::IntMatrix;
pub use poly::IntPolynomial;
pub use roots::{Eigenvalue, ExactSpectrum};
pub use verify::{Verdict, VerificationReport};
