use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolyKind {
    /// Exponents count Euler genus.
    Euler,
    /// Exponents count orientable genus.
    Orientable,
}

/// Polynomial in `z` with nonnegative integer coefficients. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenusPolynomial {
    kind: PolyKind,
    coeffs: BTreeMap<u32, BigUint>,
}

impl GenusPolynomial {
    pub fn zero(kind: PolyKind) -> Self {
        GenusPolynomial {
            kind,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(kind: PolyKind) -> Self {
        Self::monomial(kind, BigUint::one(), 0)
    }

    pub fn monomial(kind: PolyKind, coeff: impl Into<BigUint>, exponent: u32) -> Self {
        let mut p = Self::zero(kind);
        p.add_term(exponent, coeff.into());
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I, C>(kind: PolyKind, terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigUint>,
    {
        let mut p = Self::zero(kind);
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Builds from dense counts indexed by exponent.
    pub fn from_counts(kind: PolyKind, counts: &[u64]) -> Self {
        Self::from_terms(
            kind,
            counts
                .iter()
                .enumerate()
                .map(|(e, &c)| (e as u32, BigUint::from(c))),
        )
    }

    pub fn add_term(&mut self, exponent: u32, coeff: BigUint) {
        if coeff.is_zero() {
            return;
        }
        *self.coeffs.entry(exponent).or_insert_with(BigUint::zero) += coeff;
    }

    pub fn kind(&self) -> PolyKind {
        self.kind
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigUint)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn coefficient(&self, exponent: u32) -> BigUint {
        self.coeffs.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient_sum(&self) -> BigUint {
        self.coeffs.values().sum()
    }

    pub fn lowest_exponent(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// `(coefficient, exponent)` when the polynomial has exactly one term.
    pub fn as_monomial(&self) -> Option<(&BigUint, u32)> {
        match self.term_count() {
            1 => self.coeffs.iter().next().map(|(&e, c)| (c, e)),
            _ => None,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch);
        }
        let mut out = self.clone();
        for (&e, c) in &other.coeffs {
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    /// Convolution of coefficient maps.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch);
        }
        let mut out = Self::zero(self.kind);
        for (&a, ca) in &self.coeffs {
            for (&b, cb) in &other.coeffs {
                out.add_term(a + b, ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `c` and every exponent is shifted by `shift`.
    pub fn scale_shift(&self, c: u64, shift: u32) -> Self {
        Self::from_terms(
            self.kind,
            self.coeffs.iter().map(|(&e, v)| (e + shift, v * c)),
        )
    }

    /// Halves every exponent, turning an Euler polynomial of an orientable
    /// bouquet into its orientable counterpart. Fails on an odd exponent.
    pub fn halve_exponents(&self) -> Result<Self> {
        if self.kind != PolyKind::Euler {
            return Err(Error::KindMismatch);
        }
        if self.coeffs.keys().any(|e| e % 2 == 1) {
            return Err(Error::NonOrientable);
        }
        Ok(Self::from_terms(
            PolyKind::Orientable,
            self.coeffs.iter().map(|(&e, c)| (e / 2, c.clone())),
        ))
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            kind: self.kind,
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e.to_string(), c.to_string()))
                .collect(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<Self> {
        let mut p = Self::zero(json.kind);
        for (e, c) in &json.coeffs {
            let e: u32 = e
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad exponent {e:?}")))?;
            let c: BigUint = c
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad coefficient {c:?}")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// Wire form: `{"kind":"euler","coeffs":{"1":"12","2":"44"}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub kind: PolyKind,
    pub coeffs: BTreeMap<String, String>,
}

impl Serialize for GenusPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GenusPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = PolyJson::deserialize(d)?;
        GenusPolynomial::from_json(&json).map_err(serde::de::Error::custom)
    }
}

/// Ascending exponents, `2+18z+36z^2+8z^3`.
impl fmt::Display for GenusPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            let unit = c.is_one();
            match e {
                0 => write!(f, "{c}")?,
                1 if unit => f.write_str("z")?,
                1 => write!(f, "{c}z")?,
                _ if unit => write!(f, "z^{e}")?,
                _ => write!(f, "{c}z^{e}")?,
            }
        }
        Ok(())
    }
}
