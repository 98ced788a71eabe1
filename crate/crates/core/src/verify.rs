//! Checks closed-form claims against the exact characteristic polynomial.
//!
//! Verdicts come from exact coefficient comparison of monic polynomials.
//! Numeric roots are attached only as annotation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::claims::{
    claim_from_spectrum, claim_group, prime_power_adjacency_claim, romdhini_d12_claims,
    thm41_adjacency_claim, thm42_laplacian_claim, thm43_signless_claim, zn_to_dn_laplacian_map,
    ClaimFactor, ClaimParams, MatrixKind, SpectrumClaim,
};
use crate::error::{Error, Result};
use crate::graph::PowerGraph;
use crate::group::{GroupSpec, PrimePair};
use crate::linalg::char_poly_exact;
use crate::poly::{bigint_serde, IntPolynomial};
use crate::roots::{
    factor_out_integer_roots, isolate_squarefree, spectrum_from_charpoly, squarefree_decomposition,
    IntervalJson, RootInterval,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoefficientScope {
    /// Claimed residual vs. oracle divided by the claimed root families.
    Residual,
    /// Whole characteristic polynomials.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    ExactMatch,
    Mismatch,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ExactMatch => "ExactMatch",
            Verdict::Mismatch => "Mismatch",
        })
    }
}

/// `(degree, claimed, oracle)` for a coefficient that differs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientDiff {
    pub degree: usize,
    pub claimed: BigInt,
    pub oracle: BigInt,
}

impl Serialize for CoefficientDiff {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (
            self.degree,
            bigint_serde::to_json(&self.claimed),
            bigint_serde::to_json(&self.oracle),
        )
            .serialize(s)
    }
}

/// `(eigenvalue, claimed multiplicity, oracle multiplicity)` for an integer
/// eigenvalue whose multiplicities differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumDiff {
    pub value: BigInt,
    pub claimed: usize,
    pub oracle: usize,
}

impl Serialize for SpectrumDiff {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (
            bigint_serde::to_json(&self.value),
            self.claimed,
            self.oracle,
        )
            .serialize(s)
    }
}

/// An isolated real root of a residual factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootEntry {
    pub factor: IntPolynomial,
    pub interval: RootInterval,
}

impl Serialize for RootEntry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            factor: &'a IntPolynomial,
            interval: IntervalJson,
        }
        Out {
            factor: &self.factor,
            interval: IntervalJson::from(&self.interval),
        }
        .serialize(s)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub claim: SpectrumClaim,
    pub group: GroupSpec,
    pub kind: MatrixKind,
    pub verdict: Verdict,
    /// Set when the claim's degree differs from the matrix dimension.
    pub structural_error: Option<String>,
    /// Whether `coefficient_diffs` index the residual factor or the full polynomial.
    pub coefficient_scope: CoefficientScope,
    pub claimed_polynomial: IntPolynomial,
    pub oracle_polynomial: IntPolynomial,
    pub coefficient_diffs: Vec<CoefficientDiff>,
    pub spectrum_diffs: Vec<SpectrumDiff>,
    /// Whether every explicit `(λ - c)^m` family of the claim has exactly
    /// multiplicity `m` in the oracle.
    pub families_match: bool,
    /// Roots of the oracle's non-integer part.
    pub roots: Vec<RootEntry>,
    /// Roots of the claim's non-integer part.
    pub claimed_roots: Vec<RootEntry>,
}

impl VerificationReport {
    pub fn first_mismatch_degree(&self) -> Option<usize> {
        self.coefficient_diffs.iter().map(|d| d.degree).min()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn oracle_integer_roots(&self) -> BTreeMap<BigInt, usize> {
        integer_roots(&self.oracle_polynomial)
    }

    pub fn summary_line(&self) -> String {
        let mut s = format!(
            "{} [{}] on {} ({}): {}",
            self.claim.name, self.claim.params, self.group, self.kind, self.verdict
        );
        if let Some(e) = &self.structural_error {
            s.push_str(&format!(" ({e})"));
        }
        s
    }

    /// Human-readable report.
    pub fn to_text(&self) -> String {
        let mut out = vec![self.summary_line()];
        out.push(format!("  claimed: {}", self.claim.pretty()));
        out.push(format!("  oracle:  {}", factored(&self.oracle_polynomial)));
        for d in &self.coefficient_diffs {
            let scope = match self.coefficient_scope {
                CoefficientScope::Residual => "residual",
                CoefficientScope::Full => "polynomial",
            };
            out.push(format!(
                "  {scope} coefficient λ^{}: claimed {}, oracle {}",
                d.degree, d.claimed, d.oracle
            ));
        }
        for d in &self.spectrum_diffs {
            out.push(format!(
                "  eigenvalue {}: claimed ×{}, oracle ×{}",
                d.value, d.claimed, d.oracle
            ));
        }
        if !self.roots.is_empty() {
            let r: Vec<String> = self
                .roots
                .iter()
                .map(|e| format!("{:.6}", e.interval.midpoint_f64()))
                .collect();
            out.push(format!("  oracle residual roots: {}", r.join(", ")));
        }
        if !self.claimed_roots.is_empty() {
            let r: Vec<String> = self
                .claimed_roots
                .iter()
                .map(|e| format!("{:.6}", e.interval.midpoint_f64()))
                .collect();
            out.push(format!("  claimed residual roots: {}", r.join(", ")));
        }
        out.join("\n")
    }
}

fn integer_roots(p: &IntPolynomial) -> BTreeMap<BigInt, usize> {
    factor_out_integer_roots(p)
        .map(|(r, _)| r.into_iter().collect())
        .unwrap_or_default()
}

/// Monic polynomial written as integer-root factors times the residual.
pub fn factored(p: &IntPolynomial) -> String {
    let Ok((roots, residual)) = factor_out_integer_roots(p) else {
        return p.pretty();
    };
    let mut parts: Vec<String> = roots
        .iter()
        .map(|(r, m)| {
            let base = if r == &BigInt::from(0) {
                "λ".to_string()
            } else {
                format!("({})", IntPolynomial::linear_root(r).pretty())
            };
            if *m == 1 {
                base
            } else {
                format!("{base}^{m}")
            }
        })
        .collect();
    if residual.degree().unwrap_or(0) > 0 {
        parts.push(format!("({})", residual.pretty()));
    }
    if parts.is_empty() {
        return residual.pretty();
    }
    parts.join("")
}

fn residual_roots(p: &IntPolynomial, precision: &BigRational) -> Vec<RootEntry> {
    let Ok((_, residual)) = factor_out_integer_roots(p) else {
        return Vec::new();
    };
    squarefree_decomposition(&residual)
        .into_iter()
        .flat_map(|sf| {
            isolate_squarefree(&sf.factor, precision)
                .into_iter()
                .map(move |interval| RootEntry {
                    factor: sf.factor.clone(),
                    interval,
                })
        })
        .collect()
}

/// Exact monic characteristic polynomial of the chosen matrix of `spec`'s power graph.
pub fn oracle_polynomial(spec: GroupSpec, kind: MatrixKind) -> IntPolynomial {
    char_poly_exact(&PowerGraph::build(spec).matrix(kind))
}

/// Compares a claim with the oracle characteristic polynomial on `spec`.
pub fn verify_claim(
    claim: &SpectrumClaim,
    spec: GroupSpec,
    precision: &BigRational,
) -> VerificationReport {
    verify_against(claim, spec, oracle_polynomial(spec, claim.kind), precision)
}

/// As [`verify_claim`] with a precomputed oracle polynomial.
pub fn verify_against(
    claim: &SpectrumClaim,
    spec: GroupSpec,
    oracle: IntPolynomial,
    precision: &BigRational,
) -> VerificationReport {
    let dim = spec.order() as usize;
    let structural_error = (claim.total_degree() != dim).then(|| {
        format!(
            "claim has degree {} but the matrix has dimension {dim}",
            claim.total_degree()
        )
    });
    let claimed = claim.expand();

    // With a residual factor, diff the residual against the oracle quotient
    // by the claimed root families so discrepancies stay localized.
    let residual_pair = claim.residual().and_then(|r| {
        let families: IntPolynomial = claim
            .factors
            .iter()
            .filter(|f| matches!(f, ClaimFactor::Root { .. }))
            .map(ClaimFactor::expand)
            .product();
        let single = claim
            .factors
            .iter()
            .filter(|f| matches!(f, ClaimFactor::Poly { .. }))
            .count()
            == 1;
        let quotient = oracle.div_exact(&families)?;
        (single && claim.residual_multiplicity() == 1).then(|| (r.with_positive_lead(), quotient))
    });
    let coefficient_scope = if residual_pair.is_some() {
        CoefficientScope::Residual
    } else {
        CoefficientScope::Full
    };
    let (lhs, rhs) = residual_pair.unwrap_or_else(|| (claimed.clone(), oracle.clone()));
    let top = lhs.coeffs().len().max(rhs.coeffs().len());
    let coefficient_diffs: Vec<CoefficientDiff> = (0..top)
        .filter_map(|k| {
            let (c, o) = (lhs.coeff(k), rhs.coeff(k));
            (c != o).then_some(CoefficientDiff {
                degree: k,
                claimed: c,
                oracle: o,
            })
        })
        .collect();

    let claimed_ints = integer_roots(&claimed);
    let oracle_ints = integer_roots(&oracle);
    let values: BTreeSet<&BigInt> = claimed_ints.keys().chain(oracle_ints.keys()).collect();
    let spectrum_diffs: Vec<SpectrumDiff> = values
        .into_iter()
        .filter_map(|v| {
            let c = claimed_ints.get(v).copied().unwrap_or(0);
            let o = oracle_ints.get(v).copied().unwrap_or(0);
            (c != o).then(|| SpectrumDiff {
                value: v.clone(),
                claimed: c,
                oracle: o,
            })
        })
        .collect();

    let families_match = claim
        .root_families()
        .iter()
        .all(|(v, m)| oracle_ints.get(v).copied().unwrap_or(0) == *m);

    let verdict = if coefficient_diffs.is_empty() && spectrum_diffs.is_empty() {
        Verdict::ExactMatch
    } else {
        Verdict::Mismatch
    };

    VerificationReport {
        claim: claim.clone(),
        group: spec,
        kind: claim.kind,
        verdict,
        structural_error,
        coefficient_scope,
        roots: residual_roots(&oracle, precision),
        claimed_roots: residual_roots(&claimed, precision),
        claimed_polynomial: claimed,
        oracle_polynomial: oracle,
        coefficient_diffs,
        spectrum_diffs,
        families_match,
    }
}

/// The `D_2n` Laplacian spectrum predicted from the exact `Z_n` spectrum,
/// packaged as a claim.
pub fn zn_dn_map_claim(n: u64, precision: &BigRational) -> Result<SpectrumClaim> {
    let zn = GroupSpec::cyclic(n)?;
    let zn_spec = spectrum_from_charpoly(&oracle_polynomial(zn, MatrixKind::Laplacian), precision)?;
    let mapped = zn_to_dn_laplacian_map(&zn_spec, n)?;
    claim_from_spectrum(
        "zn-dn-map",
        ClaimParams::Order { n },
        MatrixKind::Laplacian,
        &mapped,
    )
}

/// Reproduces the published `D_12` counterexamples (for `n = 6`) and checks
/// the prime-power adjacency formula on `D_2n`.
pub fn counterexample_suite(n: u64, precision: &BigRational) -> Result<Vec<VerificationReport>> {
    let spec = GroupSpec::dihedral(n)?;
    let mut claims = Vec::new();
    if n == 6 {
        claims.extend(romdhini_d12_claims());
    }
    claims.push(prime_power_adjacency_claim(n)?);
    Ok(claims
        .iter()
        .map(|c| verify_claim(c, spec, precision))
        .collect())
}

/// Claim families that can be swept over a parameter range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimFamily {
    AdjD2pq,
    LapD2pq,
    SlapD2pq,
    PrimePower,
    ZnDnMap,
}

impl ClaimFamily {
    pub fn takes_pairs(&self) -> bool {
        matches!(
            self,
            ClaimFamily::AdjD2pq | ClaimFamily::LapD2pq | ClaimFamily::SlapD2pq
        )
    }

    pub fn name(&self) -> &'static str {
        match self {
            ClaimFamily::AdjD2pq => "adj-d2pq",
            ClaimFamily::LapD2pq => "lap-d2pq",
            ClaimFamily::SlapD2pq => "slap-d2pq",
            ClaimFamily::PrimePower => "prime-power",
            ClaimFamily::ZnDnMap => "zn-dn-map",
        }
    }

    pub fn claim(&self, param: SweepParam, precision: &BigRational) -> Result<SpectrumClaim> {
        match (self, param) {
            (ClaimFamily::AdjD2pq, SweepParam::Pair(pp)) => thm41_adjacency_claim(pp),
            (ClaimFamily::LapD2pq, SweepParam::Pair(pp)) => thm42_laplacian_claim(pp),
            (ClaimFamily::SlapD2pq, SweepParam::Pair(pp)) => thm43_signless_claim(pp),
            (ClaimFamily::PrimePower, SweepParam::Order(n)) => prime_power_adjacency_claim(n),
            (ClaimFamily::ZnDnMap, SweepParam::Order(n)) => zn_dn_map_claim(n, precision),
            (f, p) => Err(Error::Parameter(format!(
                "{} does not take parameter {p}",
                f.name()
            ))),
        }
    }

    /// Builds the claim for `param` and verifies it on its group.
    pub fn verify(&self, param: SweepParam, precision: &BigRational) -> Result<VerificationReport> {
        let claim = self.claim(param, precision)?;
        let spec = claim_group(&claim)?;
        Ok(verify_claim(&claim, spec, precision))
    }
}

impl std::str::FromStr for ClaimFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adj-d2pq" => Ok(ClaimFamily::AdjD2pq),
            "lap-d2pq" => Ok(ClaimFamily::LapD2pq),
            "slap-d2pq" => Ok(ClaimFamily::SlapD2pq),
            "prime-power" => Ok(ClaimFamily::PrimePower),
            "zn-dn-map" => Ok(ClaimFamily::ZnDnMap),
            other => Err(Error::Usage(format!("unknown theorem {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SweepParam {
    Pair(PrimePair),
    Order(u64),
}

impl fmt::Display for SweepParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepParam::Pair(pp) => write!(f, "p={};q={}", pp.p, pp.q),
            SweepParam::Order(n) => write!(f, "n={n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub param: SweepParam,
    pub verdict: Verdict,
    pub first_mismatch_degree: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepTable {
    pub rows: Vec<SweepRow>,
    /// Parameters outside the family's domain, with the reason.
    pub skipped: Vec<(SweepParam, String)>,
}

impl SweepTable {
    pub fn matches(&self) -> Vec<SweepParam> {
        self.select(Verdict::ExactMatch)
    }

    pub fn mismatches(&self) -> Vec<SweepParam> {
        self.select(Verdict::Mismatch)
    }

    fn select(&self, v: Verdict) -> Vec<SweepParam> {
        self.rows
            .iter()
            .filter(|r| r.verdict == v)
            .map(|r| r.param)
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("params,verdict,first_mismatch_degree\n");
        for r in &self.rows {
            let deg = r
                .first_mismatch_degree
                .map(|d| d.to_string())
                .unwrap_or_default();
            out.push_str(&format!("{},{},{}\n", r.param, r.verdict, deg));
        }
        out
    }
}

/// Verifies `family` at every parameter. Items run in parallel; rows are
/// sorted by parameter. Parameters the family rejects are listed in
/// `skipped` rather than failing the sweep.
pub fn sweep(
    family: ClaimFamily,
    params: &[SweepParam],
    precision: &BigRational,
) -> Result<SweepTable> {
    let mut sorted = params.to_vec();
    sorted.sort();
    sorted.dedup();
    let outcomes = sorted
        .par_iter()
        .map(|&param| match family.verify(param, precision) {
            Ok(report) => Ok(Ok(SweepRow {
                param,
                verdict: report.verdict,
                first_mismatch_degree: report.first_mismatch_degree(),
            })),
            Err(Error::Parameter(why)) => Ok(Err((param, why))),
            Err(e) => Err(e),
        })
        .collect::<Result<Vec<_>>>()?;
    let mut table = SweepTable::default();
    for o in outcomes {
        match o {
            Ok(row) => table.rows.push(row),
            Err(skip) => table.skipped.push(skip),
        }
    }
    Ok(table)
}
