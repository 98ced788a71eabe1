//! Closed-form spectrum and characteristic-polynomial claims as data.
//!
//! Each claim family is a [`ClaimTemplate`]: integer-valued expressions in
//! `p`, `q` and `n` for the eigenvalue families, their multiplicities, and
//! the coefficients of an optional residual polynomial. Instantiating a
//! template at concrete parameters gives a [`SpectrumClaim`].
//!
//! The printed formulas are reproduced verbatim, including where they
//! disagree with the exact characteristic polynomial. Deciding which is
//! right is the verifier's job.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{is_prime, totient, GroupSpec, PrimePair};
use crate::poly::IntPolynomial;
use crate::roots::{Eigenvalue, ExactSpectrum};

pub use crate::graph::MatrixKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    P,
    Q,
    N,
    /// `phi(n)`, or `phi(pq)` when `p, q` are bound.
    Phi,
}

/// Integer expression over the claim parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Var(Var),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
}

/// Values for the variables of an [`Expr`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ClaimParams {
    Pair { p: u64, q: u64 },
    Order { n: u64 },
    None {},
}

impl ClaimParams {
    pub fn pair(pp: PrimePair) -> Self {
        ClaimParams::Pair { p: pp.p, q: pp.q }
    }

    fn value(&self, v: Var) -> Result<BigInt> {
        let x = match (self, v) {
            (ClaimParams::Pair { p, .. }, Var::P) => *p,
            (ClaimParams::Pair { q, .. }, Var::Q) => *q,
            (ClaimParams::Pair { p, q }, Var::N) => p * q,
            (ClaimParams::Pair { p, q }, Var::Phi) => (p - 1) * (q - 1),
            (ClaimParams::Order { n }, Var::N) => *n,
            (ClaimParams::Order { n }, Var::Phi) => totient(*n),
            _ => return Err(Error::Parameter(format!("{v:?} is unbound in {self}"))),
        };
        Ok(BigInt::from(x))
    }
}

impl fmt::Display for ClaimParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimParams::Pair { p, q } => write!(f, "p={p};q={q}"),
            ClaimParams::Order { n } => write!(f, "n={n}"),
            ClaimParams::None {} => f.write_str("-"),
        }
    }
}

impl Expr {
    pub fn eval(&self, params: &ClaimParams) -> Result<BigInt> {
        Ok(match self {
            Expr::Int(c) => BigInt::from(*c),
            Expr::Var(v) => params.value(*v)?,
            Expr::Add(a, b) => a.eval(params)? + b.eval(params)?,
            Expr::Sub(a, b) => a.eval(params)? - b.eval(params)?,
            Expr::Mul(a, b) => a.eval(params)? * b.eval(params)?,
            Expr::Neg(a) => -a.eval(params)?,
        })
    }

    pub fn pow(self, k: u32) -> Expr {
        (1..k).fold(self.clone(), |acc, _| acc * self.clone())
    }
}

fn c(v: i64) -> Expr {
    Expr::Int(v)
}

fn p() -> Expr {
    Expr::Var(Var::P)
}

fn q() -> Expr {
    Expr::Var(Var::Q)
}

fn n() -> Expr {
    Expr::Var(Var::N)
}

fn phi() -> Expr {
    Expr::Var(Var::Phi)
}

macro_rules! expr_ops {
    ($tr:ident, $m:ident, $variant:ident) => {
        impl $tr for Expr {
            type Output = Expr;
            fn $m(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(self), Box::new(rhs))
            }
        }
        impl $tr<i64> for Expr {
            type Output = Expr;
            fn $m(self, rhs: i64) -> Expr {
                Expr::$variant(Box::new(self), Box::new(Expr::Int(rhs)))
            }
        }
        impl $tr<Expr> for i64 {
            type Output = Expr;
            fn $m(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(Expr::Int(self)), Box::new(rhs))
            }
        }
    };
}
expr_ops!(Add, add, Add);
expr_ops!(Sub, sub, Sub);
expr_ops!(Mul, mul, Mul);

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

/// A claim family before its parameters are fixed.
#[derive(Debug, Clone)]
pub struct ClaimTemplate {
    pub name: &'static str,
    pub kind: MatrixKind,
    /// `(eigenvalue, multiplicity)` families.
    pub roots: Vec<(Expr, Expr)>,
    /// Ascending coefficients of the residual factor, if any.
    pub residual: Option<Vec<Expr>>,
}

impl ClaimTemplate {
    pub fn instantiate(&self, params: ClaimParams) -> Result<SpectrumClaim> {
        let mut factors = Vec::new();
        for (value, mult) in &self.roots {
            let root = value.eval(&params)?;
            let m = mult.eval(&params)?;
            if m.is_negative() {
                return Err(Error::Parameter(format!(
                    "{}: multiplicity of {root} is {m} at {params}",
                    self.name
                )));
            }
            let m = m
                .to_usize()
                .ok_or_else(|| Error::Parameter("multiplicity too large".into()))?;
            // zero multiplicities are dropped
            if m > 0 {
                factors.push(ClaimFactor::Root {
                    root,
                    multiplicity: m,
                });
            }
        }
        if let Some(coeffs) = &self.residual {
            let poly = IntPolynomial::new(
                coeffs
                    .iter()
                    .map(|e| e.eval(&params))
                    .collect::<Result<_>>()?,
            );
            factors.push(ClaimFactor::Poly {
                poly,
                multiplicity: 1,
            });
        }
        Ok(SpectrumClaim {
            name: self.name.to_string(),
            params,
            kind: self.kind,
            factors,
        })
    }
}

/// One factor of a claimed characteristic polynomial: `(λ - root)^m` or `poly^m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ClaimFactor {
    Root {
        #[serde(with = "crate::poly::bigint_serde")]
        root: BigInt,
        multiplicity: usize,
    },
    Poly {
        poly: IntPolynomial,
        multiplicity: usize,
    },
}

impl ClaimFactor {
    pub fn multiplicity(&self) -> usize {
        match self {
            ClaimFactor::Root { multiplicity, .. } | ClaimFactor::Poly { multiplicity, .. } => {
                *multiplicity
            }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            ClaimFactor::Root { multiplicity, .. } => *multiplicity,
            ClaimFactor::Poly { poly, multiplicity } => poly.degree().unwrap_or(0) * multiplicity,
        }
    }

    pub fn expand(&self) -> IntPolynomial {
        match self {
            ClaimFactor::Root { root, multiplicity } => {
                IntPolynomial::linear_root(root).pow(*multiplicity as u32)
            }
            ClaimFactor::Poly { poly, multiplicity } => poly.pow(*multiplicity as u32),
        }
    }
}

/// Body of a claim: a spectrum (root factors only) or a polynomial with a
/// residual factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimBody {
    ClosedSpectrum,
    ClosedPolynomial,
}

/// A concrete claimed characteristic polynomial for one matrix kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumClaim {
    pub name: String,
    pub params: ClaimParams,
    pub kind: MatrixKind,
    pub factors: Vec<ClaimFactor>,
}

impl SpectrumClaim {
    pub fn body(&self) -> ClaimBody {
        if self
            .factors
            .iter()
            .any(|f| matches!(f, ClaimFactor::Poly { .. }))
        {
            ClaimBody::ClosedPolynomial
        } else {
            ClaimBody::ClosedSpectrum
        }
    }

    pub fn total_degree(&self) -> usize {
        self.factors.iter().map(ClaimFactor::degree).sum()
    }

    /// Product of the factors, sign-normalised to a positive leading coefficient.
    pub fn expand(&self) -> IntPolynomial {
        self.factors
            .iter()
            .map(ClaimFactor::expand)
            .product::<IntPolynomial>()
            .with_positive_lead()
    }

    /// Explicit `(λ - c)^m` families, merged by value.
    pub fn root_families(&self) -> BTreeMap<BigInt, usize> {
        let mut map = BTreeMap::new();
        for f in &self.factors {
            if let ClaimFactor::Root { root, multiplicity } = f {
                *map.entry(root.clone()).or_default() += multiplicity;
            }
        }
        map
    }

    pub fn residual_multiplicity(&self) -> usize {
        self.factors
            .iter()
            .find_map(|f| match f {
                ClaimFactor::Poly { multiplicity, .. } => Some(*multiplicity),
                ClaimFactor::Root { .. } => None,
            })
            .unwrap_or(0)
    }

    pub fn residual(&self) -> Option<&IntPolynomial> {
        self.factors.iter().find_map(|f| match f {
            ClaimFactor::Poly { poly, .. } => Some(poly),
            ClaimFactor::Root { .. } => None,
        })
    }

    /// `(λ - c)^m · ... · residual`, e.g. `λ^5 (λ + 1)^2 (λ^5 - ...)`.
    pub fn pretty(&self) -> String {
        self.factors
            .iter()
            .map(|f| {
                let (base, m) = match f {
                    ClaimFactor::Root { root, multiplicity } if root.is_zero() => {
                        ("λ".to_string(), *multiplicity)
                    }
                    ClaimFactor::Root { root, multiplicity } => (
                        format!("({})", IntPolynomial::linear_root(root).pretty()),
                        *multiplicity,
                    ),
                    ClaimFactor::Poly { poly, multiplicity } => {
                        (format!("({})", poly.pretty()), *multiplicity)
                    }
                };
                if m == 1 {
                    base
                } else {
                    format!("{base}^{m}")
                }
            })
            .collect::<Vec<_>>()
            .join("")
    }
}

fn pair_params(pp: PrimePair) -> ClaimParams {
    ClaimParams::pair(pp)
}

/// Adjacency spectrum of `D_2pq`: `0^{pq-1}`, `(-1)^{pq-4}` and the roots of
/// `λ^5 + (4-pq)λ^4 + (7-pq-p-q)λ^3 + Mλ^2 + Nλ + K`.
pub fn adjacency_d2pq_template() -> ClaimTemplate {
    let pq = || p() * q();
    let m = 2 * p().pow(2) * q().pow(2) - 2 * p().pow(2) * q() - 2 * p() * q().pow(2)
        + p().pow(2)
        + q().pow(2)
        - 5 * p()
        - 5 * q()
        + 8;
    let nn = 2 * p().pow(2) * q().pow(2) - p().pow(2) * q() + p().pow(2)
        - p() * q().pow(2)
        - p() * q()
        - 4 * p()
        + q().pow(2)
        - 4 * q()
        + 4;
    let k = 2 * p().pow(3) * q().pow(2) - p().pow(3) * q().pow(3) - p().pow(3) * q()
        + 2 * p().pow(2) * q().pow(3)
        - 4 * p().pow(2) * q().pow(2)
        + 3 * p().pow(2) * q()
        - p() * q().pow(3)
        + 3 * p() * q().pow(2)
        - 4 * p() * q();
    ClaimTemplate {
        name: "adj-d2pq",
        kind: MatrixKind::Adjacency,
        roots: vec![(c(0), pq() - 1), (c(-1), pq() - 4)],
        residual: Some(vec![k, nn, m, 7 - pq() - p() - q(), 4 - pq(), c(1)]),
    }
}

/// Laplacian spectrum of `D_2pq`:
/// `0, 1^{pq}, pq^{phi}, (pq-p+1)^{q-2}, (pq-q+1)^{p-2}, pq-p-q+2, 2pq`.
pub fn laplacian_d2pq_template() -> ClaimTemplate {
    let pq = || p() * q();
    ClaimTemplate {
        name: "lap-d2pq",
        kind: MatrixKind::Laplacian,
        roots: vec![
            (c(0), c(1)),
            (c(1), pq()),
            (pq(), phi()),
            (pq() - p() + 1, q() - 2),
            (pq() - q() + 1, p() - 2),
            (pq() - p() - q() + 2, c(1)),
            (2 * pq(), c(1)),
        ],
        residual: None,
    }
}

/// Signless Laplacian spectrum of `D_2pq`: `1^{pq-1}, (pq-2)^{phi},
/// (pq-p-1)^{q-2}, (pq-q-1)^{p-2}` and the roots of
/// `λ^4 - (5pq-p-q-3)λ^3 - Xλ^2 - Yλ - Z`.
pub fn signless_d2pq_template() -> ClaimTemplate {
    let pq = || p() * q();
    let x = -8 * p().pow(2) * q().pow(2)
        + 4 * p().pow(2) * q()
        + 4 * p() * q().pow(2)
        + 5 * p() * q()
        + p()
        + q()
        - 4;
    let y = 4 * p().pow(3) * q().pow(3) - 4 * p().pow(3) * q().pow(2) - 4 * p().pow(2) * q().pow(3)
        + 4 * p().pow(2) * q().pow(2)
        - 2 * p().pow(2) * q()
        - 2 * p() * q().pow(2)
        - 2 * p() * q()
        + 4 * p()
        + 4 * q();
    let z =
        -2 * p().pow(3) * q().pow(3) + 2 * p().pow(3) * q().pow(2) + 2 * p().pow(2) * q().pow(2)
            - 2 * p().pow(2) * q()
            - 2 * p() * q().pow(2)
            - 4 * p()
            - 4 * q()
            + 8;
    ClaimTemplate {
        name: "slap-d2pq",
        kind: MatrixKind::SignlessLaplacian,
        roots: vec![
            (c(1), pq() - 1),
            (pq() - 2, phi()),
            (pq() - p() - 1, q() - 2),
            (pq() - q() - 1, p() - 2),
        ],
        residual: Some(vec![-z, -y, -x, -(5 * pq() - p() - q() - 3), c(1)]),
    }
}

/// Adjacency polynomial of `D_2n` for prime-power `n`:
/// `λ^{n-1}(λ+1)^{n-2}(λ^3 - (n-2)λ^2 - (2n-1)λ + n^2 - 2n)`.
pub fn prime_power_template() -> ClaimTemplate {
    ClaimTemplate {
        name: "prime-power",
        kind: MatrixKind::Adjacency,
        roots: vec![(c(0), n() - 1), (c(-1), n() - 2)],
        residual: Some(vec![n().pow(2) - 2 * n(), -(2 * n() - 1), -(n() - 2), c(1)]),
    }
}

fn check_pair(pp: PrimePair) -> Result<PrimePair> {
    PrimePair::new(pp.p, pp.q)
}

pub fn thm41_adjacency_claim(pp: PrimePair) -> Result<SpectrumClaim> {
    adjacency_d2pq_template().instantiate(pair_params(check_pair(pp)?))
}

pub fn thm42_laplacian_claim(pp: PrimePair) -> Result<SpectrumClaim> {
    laplacian_d2pq_template().instantiate(pair_params(check_pair(pp)?))
}

pub fn thm43_signless_claim(pp: PrimePair) -> Result<SpectrumClaim> {
    signless_d2pq_template().instantiate(pair_params(check_pair(pp)?))
}

/// Accepts any `n >= 2`, so the formula can be checked where it fails.
pub fn prime_power_adjacency_claim(n: u64) -> Result<SpectrumClaim> {
    if n < 2 {
        return Err(Error::Parameter(format!(
            "prime-power claim needs n >= 2, got {n}"
        )));
    }
    prime_power_template().instantiate(ClaimParams::Order { n })
}

fn literal(
    name: &str,
    kind: MatrixKind,
    roots: &[(i64, usize)],
    residual: Option<&[i64]>,
) -> SpectrumClaim {
    let mut factors: Vec<ClaimFactor> = roots
        .iter()
        .map(|&(r, m)| ClaimFactor::Root {
            root: BigInt::from(r),
            multiplicity: m,
        })
        .collect();
    if let Some(c) = residual {
        factors.push(ClaimFactor::Poly {
            poly: IntPolynomial::from_i64s(c),
            multiplicity: 1,
        });
    }
    SpectrumClaim {
        name: name.to_string(),
        params: ClaimParams::Order { n: 6 },
        kind,
        factors,
    }
}

/// The three published `D_12` polynomials that the exact computation refutes.
pub fn romdhini_d12_claims() -> Vec<SpectrumClaim> {
    vec![
        // λ^5 (λ+1)^4 (λ^3 - 4λ^2 - 11λ + 24)
        literal(
            "prior-d12-adjacency",
            MatrixKind::Adjacency,
            &[(0, 5), (-1, 4)],
            Some(&[24, -11, -4, 1]),
        ),
        // λ (λ-12) (λ-6)^4 (λ-1)^6
        literal(
            "prior-d12-laplacian",
            MatrixKind::Laplacian,
            &[(0, 1), (12, 1), (6, 4), (1, 6)],
            None,
        ),
        // (λ-1)^5 (λ-4)^4 (λ-3) (λ^3 - 21λ^2 + 108λ - 40)
        literal(
            "prior-d12-signless",
            MatrixKind::SignlessLaplacian,
            &[(1, 5), (4, 4), (3, 1)],
            Some(&[-40, 108, -21, 1]),
        ),
    ]
}

/// Laplacian spectrum of `D_2n` assembled from that of `Z_n` (non-prime
/// `n > 3`): with the `Z_n` eigenvalues sorted descending as `λ_1 >= ... >= λ_n`,
/// the result is `2n`, then `λ_2 .. λ_{n-1}`, then `1` with multiplicity `n`,
/// then `0`.
pub fn zn_to_dn_laplacian_map(zn: &ExactSpectrum, n: u64) -> Result<ExactSpectrum> {
    if n <= 3 || is_prime(n) {
        return Err(Error::Parameter(format!(
            "mapping needs non-prime n > 3, got {n}"
        )));
    }
    if zn.dimension() as u64 != n {
        return Err(Error::Parameter(format!(
            "Z_{n} spectrum should have {n} eigenvalues, got {}",
            zn.dimension()
        )));
    }
    let desc = zn.expanded_descending();
    let n_us = n as usize;
    let mut out = Vec::with_capacity(2 * n_us);
    out.push(Eigenvalue::Integer(BigInt::from(2 * n)));
    // positions 2..=phi(n)+1 (all equal to n) and phi(n)+2..=n-1 are carried over
    out.extend(desc[1..n_us - 1].iter().cloned());
    out.extend(std::iter::repeat_n(
        Eigenvalue::Integer(BigInt::one()),
        n_us,
    ));
    out.push(Eigenvalue::Integer(BigInt::zero()));
    Ok(ExactSpectrum::from_values(out))
}

/// Turns an exact spectrum into a claim, so mapped spectra go through the
/// same verifier as the closed forms.
pub fn claim_from_spectrum(
    name: &str,
    params: ClaimParams,
    kind: MatrixKind,
    spectrum: &ExactSpectrum,
) -> Result<SpectrumClaim> {
    let mut factors: Vec<ClaimFactor> = spectrum
        .integer_multiset()
        .into_iter()
        .map(|(root, multiplicity)| ClaimFactor::Root { root, multiplicity })
        .collect();
    let ints: IntPolynomial = factors.iter().map(ClaimFactor::expand).product();
    let full = spectrum.to_polynomial()?;
    let rest = full
        .div_exact(&ints)
        .expect("integer part divides the spectrum polynomial");
    if rest.degree().unwrap_or(0) > 0 {
        factors.push(ClaimFactor::Poly {
            poly: rest,
            multiplicity: 1,
        });
    }
    Ok(SpectrumClaim {
        name: name.to_string(),
        params,
        kind,
        factors,
    })
}

/// Group on which a claim is checked.
pub fn claim_group(claim: &SpectrumClaim) -> Result<GroupSpec> {
    match claim.params {
        ClaimParams::Pair { p, q } => GroupSpec::dihedral(p * q),
        ClaimParams::Order { n } => GroupSpec::dihedral(n),
        ClaimParams::None {} => Err(Error::Parameter(format!(
            "{} has no group parameters",
            claim.name
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(p: u64, q: u64) -> PrimePair {
        PrimePair::new(p, q).unwrap()
    }

    fn coeffs(poly: &IntPolynomial) -> Vec<i64> {
        poly.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    fn families(claim: &SpectrumClaim) -> Vec<(i64, usize)> {
        claim
            .root_families()
            .into_iter()
            .map(|(v, m)| (v.to_i64().unwrap(), m))
            .collect()
    }

    #[test]
    fn adjacency_quintic_coefficients_at_2_3() {
        let claim = thm41_adjacency_claim(pair(2, 3)).unwrap();
        // K, N, M, λ^3, λ^4, λ^5
        assert_eq!(coeffs(claim.residual().unwrap()), [-12, 33, 8, -4, -2, 1]);
        assert_eq!(families(&claim), [(-1, 2), (0, 5)]);
        assert_eq!(claim.total_degree(), 12);
    }

    #[test]
    fn laplacian_closed_form_at_small_pairs() {
        let claim = thm42_laplacian_claim(pair(2, 3)).unwrap();
        assert_eq!(
            families(&claim),
            [(0, 1), (1, 6), (3, 1), (5, 1), (6, 2), (12, 1)]
        );
        let claim = thm42_laplacian_claim(pair(2, 5)).unwrap();
        assert_eq!(
            families(&claim),
            [(0, 1), (1, 10), (5, 1), (9, 3), (10, 4), (20, 1)]
        );
        assert_eq!(
            thm42_laplacian_claim(pair(3, 5)).unwrap().total_degree(),
            30
        );
        assert_eq!(claim.body(), ClaimBody::ClosedSpectrum);
    }

    #[test]
    fn signless_quartic_at_2_3() {
        let claim = thm43_signless_claim(pair(2, 3)).unwrap();
        assert_eq!(families(&claim), [(1, 5), (3, 1), (4, 2)]);
        // -Z, -Y, -X, -(5pq-p-q-3), 1
        assert_eq!(coeffs(claim.residual().unwrap()), [288, -236, 137, -22, 1]);
        assert_eq!(claim.body(), ClaimBody::ClosedPolynomial);
    }

    #[test]
    fn claims_reject_bad_pairs() {
        let bad = PrimePair { p: 4, q: 5 };
        assert!(matches!(
            thm41_adjacency_claim(bad),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            thm42_laplacian_claim(PrimePair { p: 3, q: 3 }),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn prime_power_claim_examples() {
        let six = prime_power_adjacency_claim(6).unwrap();
        assert_eq!(six.expand(), romdhini_d12_claims()[0].expand());
        let three = prime_power_adjacency_claim(3).unwrap();
        assert_eq!(families(&three), [(-1, 1), (0, 2)]);
        assert_eq!(coeffs(three.residual().unwrap()), [3, -5, -1, 1]);
        for n in 2..40 {
            assert_eq!(
                prime_power_adjacency_claim(n).unwrap().total_degree() as u64,
                2 * n
            );
        }
        assert!(prime_power_adjacency_claim(1).is_err());
    }

    #[test]
    fn total_degree_matches_dimension() {
        for a in 2..=50u64 {
            for b in a + 1..=50 {
                let Ok(pp) = PrimePair::new(a, b) else {
                    continue;
                };
                if pp.pq() > 100 {
                    continue;
                }
                for claim in [
                    thm41_adjacency_claim(pp).unwrap(),
                    thm42_laplacian_claim(pp).unwrap(),
                    thm43_signless_claim(pp).unwrap(),
                ] {
                    assert_eq!(
                        claim.total_degree() as u64,
                        2 * pp.pq(),
                        "{} {pp}",
                        claim.name
                    );
                    assert_eq!(claim.expand().degree(), Some(claim.total_degree()));
                }
            }
        }
    }

    #[test]
    fn prior_d12_literals() {
        let claims = romdhini_d12_claims();
        assert_eq!(claims[0].total_degree(), 12);
        assert_eq!(families(&claims[1]), [(0, 1), (1, 6), (6, 4), (12, 1)]);
        // (λ-1)^5 (λ-4)^4 (λ-3) (λ^3 - 21λ^2 + 108λ - 40) at λ = 0
        let at_zero = claims[2].expand().eval(&BigInt::zero());
        assert_eq!(at_zero, BigInt::from(-256 * -3 * -40));
        assert_eq!(claims[2].total_degree(), 13);
    }

    #[test]
    fn mapping_rejects_primes_and_small_n() {
        let s = ExactSpectrum::from_integers([(BigInt::from(7), 7)]);
        assert!(zn_to_dn_laplacian_map(&s, 7).is_err());
        let s = ExactSpectrum::from_integers([(BigInt::from(0), 1), (BigInt::from(4), 3)]);
        assert!(zn_to_dn_laplacian_map(&s, 4).is_ok());
        assert!(zn_to_dn_laplacian_map(&s, 3).is_err());
        assert!(zn_to_dn_laplacian_map(&s, 6).is_err());
    }

    #[test]
    fn claim_json_shape() {
        let v = serde_json::to_value(thm42_laplacian_claim(pair(2, 3)).unwrap()).unwrap();
        assert_eq!(v["name"], "lap-d2pq");
        assert_eq!(v["params"], serde_json::json!({"p": 2, "q": 3}));
        assert_eq!(v["kind"], "laplacian");
        assert_eq!(
            v["factors"][0],
            serde_json::json!({"root": 0, "multiplicity": 1})
        );
    }

    #[test]
    fn pretty_form() {
        let s = romdhini_d12_claims()[0].pretty();
        assert_eq!(s, "λ^5(λ + 1)^4(λ^3 - 4λ^2 - 11λ + 24)");
    }
}
