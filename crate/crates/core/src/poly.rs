//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Coefficients in ascending degree, with no trailing zeros. The zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The variable `λ`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `λ - c`.
    pub fn linear_root(c: &BigInt) -> Self {
        Self::new(vec![-c.clone(), BigInt::one()])
    }

    /// `c λ^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `λ^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// gcd of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Exact quotient `self / divisor` over the integers; `None` if the
    /// division leaves a remainder or needs fractions.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_integral(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Long division where each step must divide evenly by the divisor's
    /// leading coefficient.
    fn div_rem_integral(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lc = divisor.leading_coeff()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Synthetic division by `λ - r`; returns `(quotient, remainder)`.
    pub fn div_linear(&self, r: &BigInt) -> (Self, BigInt) {
        if self.is_zero() {
            return (Self::zero(), BigInt::zero());
        }
        let n = self.coeffs.len();
        let mut quot = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for k in (0..n).rev() {
            let v = &self.coeffs[k] + &carry * r;
            if k == 0 {
                return (Self::new(quot), v);
            }
            quot[k - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Pseudo-remainder `|lc(b)|^k * self mod b` with `k = deg(self) - deg(b) + 1`.
    /// The positive multiplier keeps signs intact for Sturm chains.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-remainder by zero polynomial");
        let lc = b.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut steps: u32 = 0;
        while let Some(dr) = rem.degree() {
            if dr < db {
                break;
            }
            let top = rem.leading_coeff().unwrap().clone();
            rem = &rem.scale(&lc) - &Self::monomial(top, dr - db).mul_ref(b);
            steps += 1;
        }
        let expected = self.degree().map_or(0, |d| (d + 1).saturating_sub(db)) as u32;
        let mut fix = lc.pow(expected.saturating_sub(steps));
        if lc.is_negative() && expected % 2 == 1 {
            fix = -fix;
        }
        rem.scale(&fix)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Same polynomial with the sign flipped so the leading coefficient is positive.
    pub fn with_positive_lead(&self) -> Self {
        if self.leading_coeff().is_some_and(Signed::is_negative) {
            -self
        } else {
            self.clone()
        }
    }

    /// Readable form such as `λ^3 - 4λ^2 - 11λ + 24`.
    pub fn pretty(&self) -> String {
        self.pretty_in("λ")
    }

    pub fn pretty_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&mono);
        }
        out
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self.pretty_in("x"))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl std::iter::Product for IntPolynomial {
    fn product<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::one(), |acc, p| &acc * &p)
    }
}

/// Serialized as a JSON array of ascending integer coefficients.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        crate::poly::bigint_serde::serialize_vec(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Self::new(bigint_serde::deserialize_vec(d)?))
    }
}

/// Big integers as JSON numbers, so reports read as plain integer lists.
pub(crate) mod bigint_serde {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};
    use serde_json::Number;

    pub fn to_json(v: &BigInt) -> serde_json::Value {
        // arbitrary_precision is off, so fall back to a string beyond i64
        match i64::try_from(v) {
            Ok(i) => serde_json::Value::Number(Number::from(i)),
            Err(_) => serde_json::Value::String(v.to_string()),
        }
    }

    pub fn from_json(v: &serde_json::Value) -> Option<BigInt> {
        match v {
            serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
            serde_json::Value::String(s) => s.parse().ok(),
            _ => None,
        }
    }

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        serde::Serialize::serialize(&to_json(v), s)
    }

    pub fn serialize_vec<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let vals: Vec<serde_json::Value> = v.iter().map(to_json).collect();
        serde::Serialize::serialize(&vals, s)
    }

    pub fn deserialize_vec<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let vals = Vec::<serde_json::Value>::deserialize(d)?;
        vals.iter()
            .map(|v| from_json(v).ok_or_else(|| D::Error::custom("expected integer")))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn square_of_linear() {
        assert_eq!(p(&[1, 1]).pow(2), p(&[1, 2, 1]));
        assert_eq!(p(&[3, 1]).pow(0), IntPolynomial::one());
    }

    #[test]
    fn multiply_by_zero() {
        assert!((&p(&[1, 2, 3]) * &IntPolynomial::zero()).is_zero());
    }

    #[test]
    fn prior_d12_adjacency_polynomial_vanishes_at_zero() {
        // λ^5 (λ+1)^4 (λ^3 - 4λ^2 - 11λ + 24)
        let f =
            IntPolynomial::monomial(BigInt::one(), 5) * p(&[1, 1]).pow(4) * p(&[24, -11, -4, 1]);
        assert_eq!(f.degree(), Some(12));
        assert!(f.eval(&BigInt::zero()).is_zero());
        assert_eq!(f.eval(&BigInt::from(1)), BigInt::from(16 * 10));
    }

    #[test]
    fn synthetic_division() {
        let f = p(&[-6, 11, -6, 1]); // (λ-1)(λ-2)(λ-3)
        let (q, r) = f.div_linear(&BigInt::from(2));
        assert!(r.is_zero());
        assert_eq!(q, p(&[3, -4, 1]));
        let (_, r) = f.div_linear(&BigInt::from(5));
        assert_eq!(r, f.eval(&BigInt::from(5)));
    }

    #[test]
    fn gcd_and_exact_division() {
        let a = p(&[1, 1]).pow(2) * p(&[-2, 0, 1]);
        let b = p(&[1, 1]) * p(&[5, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(
            a.div_exact(&p(&[1, 1])).unwrap(),
            p(&[1, 1]) * p(&[-2, 0, 1])
        );
        assert!(a.div_exact(&p(&[1, 2])).is_none());
        assert_eq!(p(&[2, 4]).gcd(&p(&[3, 6])), p(&[1, 2]));
    }

    #[test]
    fn pseudo_remainder_sign_convention() {
        // λ^2 + 1 mod -2λ + 1, multiplier |−2|^2 = 4 → 4(λ^2+1) - (−2λ−1)(−2λ+1) = 5
        let r = p(&[1, 0, 1]).pseudo_rem(&p(&[1, -2]));
        assert_eq!(r, p(&[5]));
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(p(&[24, -11, -4, 1]).pretty(), "λ^3 - 4λ^2 - 11λ + 24");
        assert_eq!(p(&[0, -1]).pretty(), "-λ");
        assert_eq!(IntPolynomial::zero().pretty(), "0");
    }

    #[test]
    fn json_is_ascending_integer_list() {
        let s = serde_json::to_string(&p(&[-12, 33, 8])).unwrap();
        assert_eq!(s, "[-12,33,8]");
        let back: IntPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p(&[-12, 33, 8]));
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-20i64..20, 0..7).prop_map(|v| IntPolynomial::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn ring_laws_under_evaluation(a in small_poly(), b in small_poly(), x in -10i64..10) {
            let x = BigInt::from(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
            prop_assert_eq!((&a - &b).eval(&x), a.eval(&x) - b.eval(&x));
        }

        #[test]
        fn exact_division_inverts_multiplication(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b), Some(a));
        }

        #[test]
        fn gcd_divides_both(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
            let g = (&a * &c).gcd(&(&b * &c));
            prop_assert!((&a * &c).primitive_part().div_exact(&g).is_some());
            prop_assert!((&b * &c).primitive_part().div_exact(&g).is_some());
            prop_assert!(g.div_exact(&c.primitive_part()).is_some());
        }
    }
}
