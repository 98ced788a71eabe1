//! Integer-root extraction, squarefree decomposition, Sturm-sequence real
//! root isolation, and exact spectra assembled from a characteristic polynomial.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Default width of reported isolating intervals (10^-6).
pub fn default_precision() -> BigRational {
    decimal_precision(6)
}

/// `10^-digits`.
pub fn decimal_precision(digits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u32).pow(digits))
}

/// A squarefree factor together with the multiplicity of each of its roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeFactor {
    pub factor: IntPolynomial,
    pub multiplicity: usize,
}

/// Yun's algorithm over the integers. Factors are primitive with positive
/// leading coefficient; constant factors are dropped.
pub fn squarefree_decomposition(f: &IntPolynomial) -> Vec<SquarefreeFactor> {
    let f = f.primitive_part();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_exact(&a0).expect("gcd divides f");
    let c = df.div_exact(&a0).expect("gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        b = b.div_exact(&a).expect("gcd divides b");
        let c = d.div_exact(&a).expect("gcd divides d");
        d = &c - &b.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push(SquarefreeFactor {
                factor: a,
                multiplicity: i,
            });
        }
        i += 1;
    }
    out
}

/// Removes every integer root (with multiplicity) by synthetic division.
/// Returns the roots in ascending order and the residual polynomial.
pub fn factor_out_integer_roots(
    p: &IntPolynomial,
) -> Result<(Vec<(BigInt, usize)>, IntPolynomial)> {
    if p.is_zero() {
        return Err(Error::Domain(
            "cannot extract roots of the zero polynomial".into(),
        ));
    }
    let mut roots = BTreeMap::new();
    // zero roots first, so the trailing coefficient below is nonzero
    let zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let mut residual = IntPolynomial::new(p.coeffs()[zeros..].to_vec());
    if zeros > 0 {
        roots.insert(BigInt::zero(), zeros);
    }
    for r in integer_root_candidates(&residual) {
        let mut count = 0;
        loop {
            let (q, rem) = residual.div_linear(&r);
            if !rem.is_zero() {
                break;
            }
            residual = q;
            count += 1;
        }
        if count > 0 {
            roots.insert(r, count);
        }
    }
    Ok((roots.into_iter().collect(), residual))
}

/// Nonzero integers that divide the trailing coefficient and lie within a
/// root bound. Falls back to integers inside isolating intervals when the
/// bound is too wide to scan.
fn integer_root_candidates(p: &IntPolynomial) -> Vec<BigInt> {
    const SCAN_LIMIT: u64 = 1 << 22;
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let c0 = p.coeff(0);
    let bound = fujiwara_bound(p);
    let divides = |r: &BigInt| c0.is_multiple_of(r);
    match bound.to_u64().filter(|&b| b <= SCAN_LIMIT) {
        Some(b) => (1..=b)
            .flat_map(|k| [BigInt::from(k), -BigInt::from(k)])
            .filter(|r| divides(r))
            .collect(),
        None => {
            let half = BigRational::new(BigInt::one(), BigInt::from(2));
            let mut cands = Vec::new();
            for sf in squarefree_decomposition(p) {
                for iv in isolate_squarefree(&sf.factor, &half) {
                    let mut k = iv.lo.ceil().to_integer();
                    while BigRational::from_integer(k.clone()) <= iv.hi {
                        if !k.is_zero() && divides(&k) {
                            cands.push(k.clone());
                        }
                        k += 1;
                    }
                }
            }
            cands
        }
    }
}

/// Integer bound on root magnitudes: `2 * max_k ceil(|c_{n-k}/c_n|^{1/k})`.
fn fujiwara_bound(p: &IntPolynomial) -> BigInt {
    let n = p.degree().unwrap_or(0);
    let lc = p
        .leading_coeff()
        .map(Signed::abs)
        .unwrap_or_else(BigInt::one);
    let mut best = BigInt::zero();
    for k in 1..=n {
        let c = p.coeff(n - k).abs();
        if c.is_zero() {
            continue;
        }
        let ratio = c.div_ceil(&lc);
        let mut r = ratio.nth_root(k as u32);
        if r.pow(k as u32) < ratio {
            r += 1;
        }
        best = best.max(r);
    }
    best * 2 + 1
}

/// Cauchy bound rounded up to a power of two so bisection stays dyadic.
fn dyadic_root_bound(p: &IntPolynomial) -> BigInt {
    let lc = p
        .leading_coeff()
        .map(Signed::abs)
        .unwrap_or_else(BigInt::one);
    let n = p.degree().unwrap_or(0);
    let max = (0..n)
        .map(|k| p.coeff(k).abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let cauchy = max.div_ceil(&lc) + 1;
    let mut b = BigInt::one();
    while b < cauchy {
        b <<= 1;
    }
    b
}

/// Closed rational interval `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn point(x: BigRational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigInt::from(2)
    }

    pub fn midpoint_f64(&self) -> f64 {
        rational_to_f64(&self.midpoint())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_f64(&self, x: f64, slack: f64) -> bool {
        rational_to_f64(&self.lo) - slack <= x && x <= rational_to_f64(&self.hi) + slack
    }
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Sign of `p(num/den)` for `den > 0`, using only integer arithmetic.
fn sign_at(p: &IntPolynomial, x: &BigRational) -> i8 {
    let (num, den) = (x.numer(), x.denom());
    let n = p.degree().unwrap_or(0);
    // Horner on the homogenised form sum c_k num^k den^(n-k)
    let mut total = p.coeff(n);
    let mut den_pow = BigInt::one();
    for k in (0..n).rev() {
        den_pow *= den;
        total = total * num + p.coeff(k) * &den_pow;
    }
    match total.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Sturm chain of a squarefree polynomial.
struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    fn new(f: &IntPolynomial) -> Self {
        let mut chain = vec![f.clone(), f.derivative()];
        loop {
            let k = chain.len();
            if chain[k - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[k - 1].degree() == Some(0) {
                break;
            }
            let r = -chain[k - 2].pseudo_rem(&chain[k - 1]);
            if r.is_zero() {
                break;
            }
            let c = r.content();
            chain.push(IntPolynomial::new(
                r.coeffs().iter().map(|a| a / &c).collect(),
            ));
        }
        Self { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for p in &self.chain {
            let s = sign_at(p, x);
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    /// Number of distinct real roots in `(lo, hi]`.
    fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations(lo) - self.variations(hi)
    }
}

/// Isolates every real root of a squarefree polynomial and refines each
/// interval to width at most `precision`. Intervals are ascending and disjoint.
pub fn isolate_squarefree(f: &IntPolynomial, precision: &BigRational) -> Vec<RootInterval> {
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sturm = SturmChain::new(f);
    let b = BigRational::from_integer(dyadic_root_bound(f));
    let mut pending = vec![(-b.clone(), b)];
    let mut isolated = Vec::new();
    while let Some((lo, hi)) = pending.pop() {
        match sturm.count(&lo, &hi) {
            0 => {}
            1 => isolated.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / BigInt::from(2);
                pending.push((lo, mid.clone()));
                pending.push((mid, hi));
            }
        }
    }
    let mut out: Vec<RootInterval> = isolated
        .into_iter()
        .map(|(lo, hi)| refine(f, &sturm, lo, hi, precision))
        .collect();
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Shrinks `(lo, hi]`, known to hold exactly one root, to width <= `precision`.
fn refine(
    f: &IntPolynomial,
    sturm: &SturmChain,
    mut lo: BigRational,
    mut hi: BigRational,
    precision: &BigRational,
) -> RootInterval {
    if sign_at(f, &hi) == 0 {
        return RootInterval::point(hi);
    }
    let two = BigInt::from(2);
    while &(&hi - &lo) > precision {
        let mid = (&lo + &hi) / &two;
        let sm = sign_at(f, &mid);
        if sm == 0 {
            return RootInterval::point(mid);
        }
        let slo = sign_at(f, &lo);
        let left = if slo != 0 {
            slo != sm
        } else {
            sturm.count(&lo, &mid) == 1
        };
        if left {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    RootInterval { lo, hi }
}

/// Real roots of `p` with multiplicity: squarefree decomposition first, then
/// Sturm isolation of each factor. Ascending by interval.
pub fn isolate_real_roots(
    p: &IntPolynomial,
    precision: &BigRational,
) -> Result<Vec<(RootInterval, usize)>> {
    if p.is_zero() {
        return Err(Error::Domain(
            "cannot isolate roots of the zero polynomial".into(),
        ));
    }
    let mut out: Vec<(RootInterval, usize)> = squarefree_decomposition(p)
        .into_iter()
        .flat_map(|sf| {
            isolate_squarefree(&sf.factor, precision)
                .into_iter()
                .map(move |iv| (iv, sf.multiplicity))
        })
        .collect();
    out.sort_by_key(|a| a.0.midpoint());
    Ok(out)
}

/// One eigenvalue: exact integer, or a real root of an integer polynomial
/// pinned down by an isolating interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Eigenvalue {
    Integer(BigInt),
    Algebraic {
        factor: IntPolynomial,
        interval: RootInterval,
    },
}

impl Eigenvalue {
    pub fn approx(&self) -> f64 {
        match self {
            Eigenvalue::Integer(v) => v.to_f64().unwrap_or(f64::NAN),
            Eigenvalue::Algebraic { interval, .. } => interval.midpoint_f64(),
        }
    }

    fn sort_key(&self) -> BigRational {
        match self {
            Eigenvalue::Integer(v) => BigRational::from_integer(v.clone()),
            Eigenvalue::Algebraic { interval, .. } => interval.midpoint(),
        }
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Integer(v) => write!(f, "{v}"),
            Eigenvalue::Algebraic { interval, .. } => write!(f, "{:.6}", interval.midpoint_f64()),
        }
    }
}

/// Multiset of eigenvalues. Integer eigenvalues are exact; the rest are
/// isolated roots of squarefree factors of the residual polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExactSpectrum {
    pub entries: Vec<(Eigenvalue, usize)>,
}

impl ExactSpectrum {
    /// Builds a spectrum from exact integer eigenvalues only.
    pub fn from_integers(values: impl IntoIterator<Item = (BigInt, usize)>) -> Self {
        let mut map: BTreeMap<BigInt, usize> = BTreeMap::new();
        for (v, m) in values {
            if m > 0 {
                *map.entry(v).or_default() += m;
            }
        }
        Self {
            entries: map
                .into_iter()
                .map(|(v, m)| (Eigenvalue::Integer(v), m))
                .collect(),
        }
    }

    /// Sum of multiplicities.
    pub fn dimension(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn integer_multiset(&self) -> BTreeMap<BigInt, usize> {
        let mut map = BTreeMap::new();
        for (e, m) in &self.entries {
            if let Eigenvalue::Integer(v) = e {
                *map.entry(v.clone()).or_default() += m;
            }
        }
        map
    }

    pub fn algebraic(&self) -> impl Iterator<Item = (&IntPolynomial, &RootInterval, usize)> {
        self.entries.iter().filter_map(|(e, m)| match e {
            Eigenvalue::Algebraic { factor, interval } => Some((factor, interval, *m)),
            Eigenvalue::Integer(_) => None,
        })
    }

    pub fn has_algebraic(&self) -> bool {
        self.algebraic().next().is_some()
    }

    pub fn multiplicity_of(&self, v: &BigInt) -> usize {
        self.integer_multiset().get(v).copied().unwrap_or(0)
    }

    /// Every eigenvalue repeated by multiplicity, descending.
    pub fn expanded_descending(&self) -> Vec<Eigenvalue> {
        let mut sorted: Vec<&(Eigenvalue, usize)> = self.entries.iter().collect();
        sorted.sort_by_key(|e| std::cmp::Reverse(e.0.sort_key()));
        sorted
            .into_iter()
            .flat_map(|(e, m)| std::iter::repeat_n(e.clone(), *m))
            .collect()
    }

    /// Approximate eigenvalues, ascending, repeated by multiplicity.
    pub fn approx_ascending(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .entries
            .iter()
            .flat_map(|(e, m)| std::iter::repeat_n(e.approx(), *m))
            .collect();
        v.sort_by(f64::total_cmp);
        v
    }

    /// Regroups a list of eigenvalues (e.g. from [`Self::expanded_descending`]).
    pub fn from_values(values: impl IntoIterator<Item = Eigenvalue>) -> Self {
        let mut entries: Vec<(Eigenvalue, usize)> = Vec::new();
        for v in values {
            match entries.iter_mut().find(|(e, _)| *e == v) {
                Some((_, m)) => *m += 1,
                None => entries.push((v, 1)),
            }
        }
        entries.sort_by_key(|a| a.0.sort_key());
        Self { entries }
    }

    /// Monic polynomial with exactly this spectrum. Fails if an algebraic
    /// factor appears with only some of its real roots.
    pub fn to_polynomial(&self) -> Result<IntPolynomial> {
        let mut poly = IntPolynomial::one();
        for (v, m) in self.integer_multiset() {
            poly = &poly * &IntPolynomial::linear_root(&v).pow(m as u32);
        }
        let mut groups: Vec<(&IntPolynomial, usize, usize)> = Vec::new();
        for (factor, _, m) in self.algebraic() {
            match groups
                .iter_mut()
                .find(|(f, mm, _)| *f == factor && *mm == m)
            {
                Some(g) => g.2 += 1,
                None => groups.push((factor, m, 1)),
            }
        }
        for (factor, m, count) in groups {
            if Some(count) != factor.degree() {
                return Err(Error::Domain(format!(
                    "spectrum holds {count} of the {} roots of {factor}",
                    factor.degree().unwrap_or(0)
                )));
            }
            poly = &poly * &factor.pow(m as u32);
        }
        Ok(poly)
    }

    /// Text form: `0 ×1, 1 ×6, 3 ×1` followed by approximate algebraic roots.
    pub fn to_text(&self) -> String {
        self.to_text_with(6)
    }

    /// As [`Self::to_text`], printing algebraic roots with `digits` decimals.
    pub fn to_text_with(&self, digits: usize) -> String {
        let ints: Vec<String> = self
            .integer_multiset()
            .iter()
            .map(|(v, m)| format!("{v} ×{m}"))
            .collect();
        let mut out = ints.join(", ");
        let algs: Vec<_> = self.algebraic().collect();
        if !algs.is_empty() {
            if !out.is_empty() {
                out.push('\n');
            }
            let mut by_factor: Vec<(&IntPolynomial, Vec<String>)> = Vec::new();
            for (f, iv, m) in algs {
                let s = if m == 1 {
                    format!("{:.digits$}", iv.midpoint_f64())
                } else {
                    format!("{:.digits$} ×{m}", iv.midpoint_f64())
                };
                match by_factor.iter_mut().find(|(g, _)| *g == f) {
                    Some((_, v)) => v.push(s),
                    None => by_factor.push((f, vec![s])),
                }
            }
            let lines: Vec<String> = by_factor
                .into_iter()
                .map(|(f, roots)| format!("roots of {}: {}", f.pretty(), roots.join(", ")))
                .collect();
            out.push_str(&lines.join("\n"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(e, m)| match e {
                Eigenvalue::Integer(v) => serde_json::json!({
                    "value": crate::poly::bigint_serde::to_json(v),
                    "multiplicity": m,
                }),
                Eigenvalue::Algebraic { factor, interval } => serde_json::json!({
                    "factor": factor,
                    "interval": IntervalJson::from(interval),
                    "multiplicity": m,
                }),
            })
            .collect();
        serde_json::Value::Array(entries)
    }
}

/// JSON form of an isolating interval: exact rational endpoints plus the
/// midpoint as a float.
#[derive(Debug, Clone, Serialize)]
pub struct IntervalJson {
    pub lo: String,
    pub hi: String,
    pub approx: f64,
}

impl From<&RootInterval> for IntervalJson {
    fn from(iv: &RootInterval) -> Self {
        Self {
            lo: iv.lo.to_string(),
            hi: iv.hi.to_string(),
            approx: iv.midpoint_f64(),
        }
    }
}

/// Exact spectrum of a monic characteristic polynomial: integer roots
/// exactly, the remaining real roots isolated to `precision`.
pub fn spectrum_from_charpoly(p: &IntPolynomial, precision: &BigRational) -> Result<ExactSpectrum> {
    let (ints, residual) = factor_out_integer_roots(p)?;
    let mut entries: Vec<(Eigenvalue, usize)> = ints
        .into_iter()
        .map(|(v, m)| (Eigenvalue::Integer(v), m))
        .collect();
    for sf in squarefree_decomposition(&residual) {
        for iv in isolate_squarefree(&sf.factor, precision) {
            entries.push((
                Eigenvalue::Algebraic {
                    factor: sf.factor.clone(),
                    interval: iv,
                },
                sf.multiplicity,
            ));
        }
    }
    entries.sort_by(|a, b| {
        a.0.sort_key()
            .cmp(&b.0.sort_key())
            .then_with(|| match (&a.0, &b.0) {
                (Eigenvalue::Integer(_), Eigenvalue::Algebraic { .. }) => Ordering::Less,
                (Eigenvalue::Algebraic { .. }, Eigenvalue::Integer(_)) => Ordering::Greater,
                _ => Ordering::Equal,
            })
    });
    Ok(ExactSpectrum { entries })
}

/// Upper bound on `|f(mid)|` for a root inside `iv`, from the mean value
/// theorem: `(width / 2) * sum |k c_k| R^(k-1)` with `R = max(|lo|, |hi|)`.
pub fn midpoint_residual_bound(f: &IntPolynomial, iv: &RootInterval) -> BigRational {
    let r = iv.lo.abs().max(iv.hi.abs());
    let df = f.derivative();
    let mut bound = BigRational::zero();
    let mut rp = BigRational::one();
    for c in df.coeffs() {
        bound += BigRational::from_integer(c.abs()) * &rp;
        rp *= &r;
    }
    bound * iv.width() / BigInt::from(2)
}
