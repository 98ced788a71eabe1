mod common;

use common::*;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use powerspec::claims::{
    prime_power_adjacency_claim, thm41_adjacency_claim, thm42_laplacian_claim, thm43_signless_claim,
};
use powerspec::linalg::{char_poly_exact, determinant};
use powerspec::roots::{default_precision, factor_out_integer_roots, midpoint_residual_bound};
use powerspec::verify::{verify_claim, ClaimFamily, SweepParam};
use powerspec::{MatrixKind, PowerGraph, Verdict};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const PAIRS: [(u64, u64); 5] = [(2, 3), (2, 5), (3, 5), (2, 7), (3, 7)];

fn small_groups() -> Vec<powerspec::GroupSpec> {
    let mut out: Vec<_> = (1..=16).map(cyclic).collect();
    out.extend((3..=15).map(dihedral));
    out
}

#[test]
fn block_triangular_charpoly_factors() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..100 {
        let dim = 1 + trial % 12;
        let (m, blocks) = random_block_triangular(&mut rng, dim);
        let product: powerspec::IntPolynomial = blocks
            .iter()
            .map(|b| char_poly_exact(&m.principal(b)))
            .product();
        assert_eq!(char_poly_exact(&m), product, "trial {trial}");
        let det_product: BigInt = blocks
            .iter()
            .map(|b| determinant(&m.principal(b)))
            .product();
        assert_eq!(determinant(&m), det_product, "trial {trial}");
    }
}

#[test]
fn charpoly_trace_and_determinant_identities() {
    for spec in small_groups() {
        let g = PowerGraph::build(spec);
        for kind in MatrixKind::ALL {
            let m = g.matrix(kind);
            let p = char_poly_exact(&m);
            let d = m.dim();
            assert_eq!(p.degree(), Some(d));
            assert!(p.is_monic());
            assert_eq!(p.coeff(d - 1), -m.trace(), "{spec} {kind:?}");
            let sign = if d.is_multiple_of(2) {
                BigInt::from(1)
            } else {
                BigInt::from(-1)
            };
            assert_eq!(p.coeff(0), sign * determinant(&m), "{spec} {kind:?}");
        }
    }
}

#[test]
fn laplacian_identities() {
    for spec in small_groups() {
        let g = PowerGraph::build(spec);
        let l = g.laplacian_matrix();
        let q = g.signless_laplacian_matrix();
        let d = g.degree_matrix();
        assert!(l.row_sums().iter().all(Zero::is_zero));
        assert_eq!(q, d.add(&d).sub(&l));
        assert_eq!(l.trace(), BigInt::from(2 * g.edge_count()));
        let (roots, _) = factor_out_integer_roots(&char_poly_exact(&l)).unwrap();
        let zero_mult = roots.iter().find(|(r, _)| r.is_zero()).map(|(_, m)| *m);
        assert_eq!(zero_mult, Some(1), "{spec}: power graphs are connected");
    }
}

#[test]
fn numeric_eigenvalues_agree_with_exact_spectrum() {
    let mut specs = small_groups();
    specs.extend(PAIRS.iter().map(|&(p, q)| dihedral(p * q)));
    for spec in specs {
        for kind in MatrixKind::ALL {
            let (m, _, s) = exact_spectrum(spec, kind);
            assert_eq!(s.dimension(), m.dim());
            let err = numeric_vs_exact(&m, &s);
            assert!(err <= 1e-8, "{spec} {kind:?}: numeric error {err:e}");
        }
    }
}

#[test]
fn laplacian_min_eigenvalue_is_zero() {
    for spec in small_groups() {
        let l = PowerGraph::build(spec).laplacian_matrix();
        let ev = powerspec::linalg::eig_symmetric_numeric(&l, JACOBI_TOL).unwrap();
        assert!(ev[0].abs() < 1e-9, "{spec}: {}", ev[0]);
    }
}

#[test]
fn root_midpoints_satisfy_residual_bound() {
    for &(p, q) in &PAIRS {
        for kind in [MatrixKind::Adjacency, MatrixKind::SignlessLaplacian] {
            let r = verify_claim(
                &match kind {
                    MatrixKind::Adjacency => thm41_adjacency_claim(pair(p, q)).unwrap(),
                    _ => thm43_signless_claim(pair(p, q)).unwrap(),
                },
                dihedral(p * q),
                &default_precision(),
            );
            assert!(!r.roots.is_empty());
            for entry in &r.roots {
                let mid = entry.interval.midpoint();
                let value = entry.factor.eval_rational(&mid).abs();
                assert!(
                    value <= midpoint_residual_bound(&entry.factor, &entry.interval),
                    "{p},{q} {kind:?}"
                );
            }
        }
    }
}

#[test]
fn laplacian_top_eigenvalue_is_simple() {
    for n in (4..=15u64).filter(|&n| !powerspec::group::is_prime(n)) {
        let (_, p, _) = exact_spectrum(dihedral(n), MatrixKind::Laplacian);
        let (roots, _) = factor_out_integer_roots(&p).unwrap();
        let top = roots
            .iter()
            .find(|(r, _)| *r == BigInt::from(2 * n))
            .map(|(_, m)| *m);
        assert_eq!(top, Some(1), "n = {n}");
    }
}

#[test]
fn claim_degrees_match_dimension() {
    let primes = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if p * q > 100 {
                continue;
            }
            let dim = 2 * (p * q) as usize;
            assert_eq!(
                thm41_adjacency_claim(pair(p, q)).unwrap().total_degree(),
                dim
            );
            assert_eq!(
                thm42_laplacian_claim(pair(p, q)).unwrap().total_degree(),
                dim
            );
            assert_eq!(
                thm43_signless_claim(pair(p, q)).unwrap().total_degree(),
                dim
            );
        }
    }
    for n in 2..=50 {
        assert_eq!(
            prime_power_adjacency_claim(n).unwrap().total_degree(),
            2 * n as usize
        );
    }
}

#[test]
fn laplacian_closed_form_matches_exactly() {
    for &(p, q) in &PAIRS {
        let claim = thm42_laplacian_claim(pair(p, q)).unwrap();
        let r = verify_claim(&claim, dihedral(p * q), &default_precision());
        assert_eq!(r.verdict, Verdict::ExactMatch, "{p},{q}");
        assert!((&r.claimed_polynomial - &r.oracle_polynomial).is_zero());
    }
}

#[test]
fn adjacency_and_signless_integer_families_match() {
    for &(p, q) in &PAIRS {
        for claim in [
            thm41_adjacency_claim(pair(p, q)).unwrap(),
            thm43_signless_claim(pair(p, q)).unwrap(),
        ] {
            let r = verify_claim(&claim, dihedral(p * q), &default_precision());
            assert!(r.families_match, "{} {p},{q}", claim.name);
            let families = claim.root_families();
            assert!(
                r.spectrum_diffs
                    .iter()
                    .all(|d| !families.contains_key(&d.value)),
                "{} {p},{q}",
                claim.name
            );
            assert_eq!(r.coefficient_diffs.len(), 1, "{} {p},{q}", claim.name);
        }
    }
}

#[test]
fn adjacency_cubic_coefficient_is_off_by_twice_pq() {
    for &(p, q) in &PAIRS {
        let r = verify_claim(
            &thm41_adjacency_claim(pair(p, q)).unwrap(),
            dihedral(p * q),
            &default_precision(),
        );
        let d = &r.coefficient_diffs[0];
        assert_eq!(d.degree, 3);
        assert_eq!(&d.claimed - &d.oracle, BigInt::from(2 * p * q));
    }
}

#[test]
fn signless_constant_is_off_by_two_p2_q3() {
    for &(p, q) in &PAIRS {
        let r = verify_claim(
            &thm43_signless_claim(pair(p, q)).unwrap(),
            dihedral(p * q),
            &default_precision(),
        );
        let d = &r.coefficient_diffs[0];
        assert_eq!(d.degree, 0);
        assert_eq!(&d.claimed - &d.oracle, BigInt::from(2 * p * p * q * q * q));
    }
}

#[test]
fn zn_to_dn_mapping_matches_oracle() {
    for n in [4, 6, 8, 9, 10, 12, 14, 15, 16, 20] {
        let r = ClaimFamily::ZnDnMap
            .verify(SweepParam::Order(n), &default_precision())
            .unwrap();
        assert_eq!(r.verdict, Verdict::ExactMatch, "n = {n}");
        assert_eq!(r.claimed_polynomial, r.oracle_polynomial);
    }
}

#[test]
fn prime_power_boundary() {
    for n in 2..=27u64 {
        let r = ClaimFamily::PrimePower
            .verify(SweepParam::Order(n), &default_precision())
            .unwrap();
        let prime_power = PowerGraph::build(cyclic(n)).is_complete();
        let expected = if prime_power {
            Verdict::ExactMatch
        } else {
            Verdict::Mismatch
        };
        assert_eq!(r.verdict, expected, "n = {n}");
    }
}

#[test]
fn rotation_subgraph_spectrum_is_cyclic_spectrum() {
    for n in 3..=15 {
        let g = PowerGraph::build(dihedral(n));
        let rotations: Vec<usize> = (0..n as usize).collect();
        let sub = char_poly_exact(&g.induced_adjacency(&rotations));
        assert_eq!(
            sub,
            char_poly_exact(&PowerGraph::build(cyclic(n)).adjacency_matrix()),
            "n = {n}"
        );
    }
}

#[test]
fn dihedral_70_charpoly_is_fast() {
    let start = std::time::Instant::now();
    for kind in MatrixKind::ALL {
        let p = char_poly_exact(&PowerGraph::build(dihedral(35)).matrix(kind));
        assert_eq!(p.degree(), Some(70));
    }
    assert!(
        start.elapsed().as_secs_f64() < 30.0,
        "{:?}",
        start.elapsed()
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn integer_root_extraction_reassembles(n in 3u64..40) {
        let (_, p, _) = exact_spectrum(dihedral(n), MatrixKind::Adjacency);
        let (roots, residual) = factor_out_integer_roots(&p).unwrap();
        let rebuilt = roots
            .iter()
            .map(|(r, m)| powerspec::IntPolynomial::linear_root(r).pow(*m as u32))
            .product::<powerspec::IntPolynomial>()
            * residual;
        prop_assert_eq!(rebuilt, p);
        prop_assert!(roots.iter().any(|(r, _)| r.is_zero()));
    }

    #[test]
    fn verification_is_deterministic(n in 3u64..16) {
        let a = ClaimFamily::PrimePower.verify(SweepParam::Order(n), &default_precision()).unwrap();
        let b = ClaimFamily::PrimePower.verify(SweepParam::Order(n), &default_precision()).unwrap();
        prop_assert_eq!(a.to_json(), b.to_json());
    }
}
