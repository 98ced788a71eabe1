//! Cyclic groups `Z_n` and dihedral groups `D_2n = <a, b | a^n = b^2 = e, ba = a^{n-1}b>`.
//!
//! Only these two families are modelled. Elements are plain values; the
//! group they belong to is carried separately in a [`GroupSpec`].

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Cyclic,
    Dihedral,
}

/// A concrete group: `Z_n` (order `n`) or `D_2n` (order `2n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub n: u64,
}

impl GroupSpec {
    pub fn cyclic(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("cyclic group needs n >= 1".into()));
        }
        Ok(Self {
            kind: GroupKind::Cyclic,
            n,
        })
    }

    /// `D_2n`, the dihedral group of order `2n`.
    pub fn dihedral(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("dihedral group needs n >= 1".into()));
        }
        Ok(Self {
            kind: GroupKind::Dihedral,
            n,
        })
    }

    pub fn order(&self) -> u64 {
        match self.kind {
            GroupKind::Cyclic => self.n,
            GroupKind::Dihedral => 2 * self.n,
        }
    }

    /// `D_2` and `D_4` are allowed but are not the usual non-abelian setting.
    pub fn is_degenerate(&self) -> bool {
        self.kind == GroupKind::Dihedral && self.n < 3
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::IDENTITY
    }

    /// Elements in canonical order: `e, a, ..., a^{n-1}` then `b, ab, ..., a^{n-1}b`.
    pub fn elements(&self) -> Vec<GroupElement> {
        let rotations = (0..self.n).map(GroupElement::rotation);
        match self.kind {
            GroupKind::Cyclic => rotations.collect(),
            GroupKind::Dihedral => rotations
                .chain((0..self.n).map(GroupElement::reflection))
                .collect(),
        }
    }

    /// Position of `g` in [`GroupSpec::elements`].
    pub fn index_of(&self, g: GroupElement) -> Result<usize> {
        self.check(g)?;
        let base = if g.reflection { self.n } else { 0 };
        Ok((base + g.exponent) as usize)
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        g.exponent < self.n && (!g.reflection || self.kind == GroupKind::Dihedral)
    }

    fn check(&self, g: GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{g} is not an element of {self}")))
        }
    }

    /// Group product `g * h`.
    pub fn multiply(&self, g: GroupElement, h: GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        let n = self.n;
        // (a^i b^s)(a^j b^t) = a^{i + (-1)^s j} b^{s+t}
        let j = if g.reflection {
            (n - h.exponent) % n
        } else {
            h.exponent
        };
        Ok(GroupElement {
            reflection: g.reflection ^ h.reflection,
            exponent: (g.exponent + j) % n,
        })
    }

    pub fn inverse(&self, g: GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        if g.reflection {
            Ok(g)
        } else {
            Ok(GroupElement::rotation((self.n - g.exponent) % self.n))
        }
    }

    /// `g^k` for any integer `k`; negative exponents are powers of the inverse.
    pub fn power(&self, g: GroupElement, k: i64) -> Result<GroupElement> {
        self.check(g)?;
        if g.reflection {
            return Ok(if k.rem_euclid(2) == 0 {
                GroupElement::IDENTITY
            } else {
                g
            });
        }
        let n = self.n as i128;
        let e = (g.exponent as i128 * k as i128).rem_euclid(n);
        Ok(GroupElement::rotation(e as u64))
    }

    /// Least `k >= 1` with `g^k = e`.
    pub fn element_order(&self, g: GroupElement) -> Result<u64> {
        self.check(g)?;
        Ok(if g.is_identity() {
            1
        } else if g.reflection {
            2
        } else {
            self.n / g.exponent.gcd(&self.n)
        })
    }

    /// Whether `x` lies in the cyclic subgroup generated by `y`.
    pub fn in_cyclic_subgroup(&self, x: GroupElement, y: GroupElement) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        if x.is_identity() || x == y {
            return Ok(true);
        }
        if y.reflection || x.reflection {
            // <b a^j> = {e, a^j b}; a reflection is never a power of a rotation
            return Ok(false);
        }
        // <a^j> = <a^{gcd(j, n)}>
        let step = y.exponent.gcd(&self.n);
        Ok(x.exponent.is_multiple_of(step))
    }

    /// Power-graph adjacency: `x = y^k` or `y = x^k` for some integer `k`.
    /// Asking about `x == y` is a domain error.
    pub fn power_related(&self, x: GroupElement, y: GroupElement) -> Result<bool> {
        if x == y {
            return Err(Error::Domain(format!(
                "power relation is only defined on distinct elements, got {x} twice"
            )));
        }
        Ok(self.in_cyclic_subgroup(x, y)? || self.in_cyclic_subgroup(y, x)?)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::Cyclic => write!(f, "Z_{}", self.n),
            GroupKind::Dihedral => write!(f, "D_{}", 2 * self.n),
        }
    }
}

/// `a^i` (rotation) or `a^i b` (reflection). The exponent is always reduced
/// modulo `n` by the owning [`GroupSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub reflection: bool,
    pub exponent: u64,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        reflection: false,
        exponent: 0,
    };

    pub fn rotation(exponent: u64) -> Self {
        Self {
            reflection: false,
            exponent,
        }
    }

    pub fn reflection(exponent: u64) -> Self {
        Self {
            reflection: true,
            exponent,
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rot = match self.exponent {
            0 => String::new(),
            1 => "a".to_string(),
            i => format!("a^{i}"),
        };
        match (self.reflection, rot.is_empty()) {
            (false, true) => f.write_str("e"),
            (false, false) => f.write_str(&rot),
            (true, _) => write!(f, "{rot}b"),
        }
    }
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Euler's totient by trial factorisation.
pub fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            while n.is_multiple_of(d) {
                n /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Distinct primes `p != q`, the parameters of `D_2pq`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimePair {
    pub p: u64,
    pub q: u64,
}

impl PrimePair {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if !is_prime(p) || !is_prime(q) {
            return Err(Error::Parameter(format!("p={p}, q={q} must both be prime")));
        }
        if p == q {
            return Err(Error::Parameter(format!(
                "p and q must be distinct, got {p} twice"
            )));
        }
        Ok(Self { p, q })
    }

    /// Recovers `(p, q)` with `p < q` when `n` is a product of two distinct primes.
    pub fn from_product(n: u64) -> Option<Self> {
        let p = (2..n).find(|d| n.is_multiple_of(*d))?;
        let q = n / p;
        Self::new(p, q).ok()
    }

    pub fn pq(&self) -> u64 {
        self.p * self.q
    }

    /// `phi(pq) = (p-1)(q-1)`.
    pub fn phi(&self) -> u64 {
        (self.p - 1) * (self.q - 1)
    }
}

impl fmt::Display for PrimePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={},q={}", self.p, self.q)
    }
}

impl FromStr for PrimePair {
    type Err = Error;

    /// Parses `"p,q"` or `"p:q"`.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once([',', ':'])
            .ok_or_else(|| Error::Usage(format!("expected p,q but got {s:?}")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Usage(format!("not an integer: {t:?}")))
        };
        Self::new(parse(a)?, parse(b)?)
    }
}
