#![allow(dead_code)]

use num_bigint::BigInt;
use powerspec::linalg::{char_poly_exact, eig_symmetric_numeric, IntMatrix};
use powerspec::roots::{rational_to_f64, spectrum_from_charpoly, Eigenvalue, ExactSpectrum};
use powerspec::{GroupSpec, IntPolynomial, MatrixKind, PowerGraph, PrimePair};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const JACOBI_TOL: f64 = 1e-12;

pub fn dihedral(n: u64) -> GroupSpec {
    GroupSpec::dihedral(n).unwrap()
}

pub fn cyclic(n: u64) -> GroupSpec {
    GroupSpec::cyclic(n).unwrap()
}

pub fn pair(p: u64, q: u64) -> PrimePair {
    PrimePair::new(p, q).unwrap()
}

pub fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

/// `∏ (λ - r)^m`.
pub fn from_roots(roots: &[(i64, u32)]) -> IntPolynomial {
    roots
        .iter()
        .map(|&(r, m)| IntPolynomial::linear_root(&BigInt::from(r)).pow(m))
        .product()
}

/// Block upper-triangular matrix with random diagonal blocks summing to `dim`.
/// Returns the matrix and the index ranges of its diagonal blocks.
pub fn random_block_triangular(rng: &mut ChaCha8Rng, dim: usize) -> (IntMatrix, Vec<Vec<usize>>) {
    let mut blocks = Vec::new();
    let mut start = 0;
    while start < dim {
        let size = rng.gen_range(1..=(dim - start).min(5));
        blocks.push((start..start + size).collect::<Vec<_>>());
        start += size;
    }
    let block_of: Vec<usize> = blocks
        .iter()
        .enumerate()
        .flat_map(|(b, idx)| std::iter::repeat_n(b, idx.len()))
        .collect();
    let m = IntMatrix::from_fn(dim, |i, j| {
        if block_of[i] > block_of[j] {
            BigInt::from(0)
        } else {
            BigInt::from(rng.gen_range(-6i64..=6))
        }
    });
    (m, blocks)
}

/// Pairs sorted Jacobi eigenvalues with the sorted exact spectrum and returns
/// the worst distance of a numeric value from its exact counterpart
/// (zero when it lies inside the isolating interval).
pub fn numeric_vs_exact(m: &IntMatrix, spectrum: &ExactSpectrum) -> f64 {
    let numeric = eig_symmetric_numeric(m, JACOBI_TOL).unwrap();
    let mut exact = spectrum.expanded_descending();
    exact.reverse();
    assert_eq!(numeric.len(), exact.len());
    numeric
        .iter()
        .zip(&exact)
        .map(|(x, e)| match e {
            Eigenvalue::Integer(v) => (x - v.to_string().parse::<f64>().unwrap()).abs(),
            Eigenvalue::Algebraic { interval, .. } => {
                if interval.contains_f64(*x, 0.0) {
                    0.0
                } else {
                    (x - interval.midpoint_f64()).abs() - rational_to_f64(&interval.width()) / 2.0
                }
            }
        })
        .fold(0.0, f64::max)
}

pub fn exact_spectrum(
    spec: GroupSpec,
    kind: MatrixKind,
) -> (IntMatrix, IntPolynomial, ExactSpectrum) {
    let m = PowerGraph::build(spec).matrix(kind);
    let p = char_poly_exact(&m);
    let s = spectrum_from_charpoly(&p, &powerspec::roots::default_precision()).unwrap();
    (m, p, s)
}
