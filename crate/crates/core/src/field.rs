//! Arithmetic in GF(p^e) for the small prime powers used by the geometry
//! builders.
//!
//! Elements are coefficient vectors over Z_p reduced modulo a monic irreducible
//! polynomial. Each field also carries dense operation tables keyed by the
//! element *code* `sum(c_i * p^i)`; the linear-algebra layer works on codes.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 64;
/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 4;

#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<FieldInner>,
}

struct FieldInner {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// Serialized form: `{p, e, modulus: [c0, ..., ce]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldRecord {
    pub p: u32,
    pub e: u32,
    pub modulus: Vec<u32>,
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power `q` into `(p, e)`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

// Polynomials over Z_p: little-endian coefficient vectors, trimmed.

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let lead = *b.last().expect("division by zero polynomial");
    let lead_inv = (1..p).find(|x| x * lead % p == 1).expect("p prime");
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = r.last().unwrap() * lead_inv % p;
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - factor * c % p) % p;
        }
        r = trim(r);
    }
    r
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-p
/// digits of `index`.
fn monic_from_index(deg: u32, mut index: u32, p: u32) -> Vec<u32> {
    let mut c = Vec::with_capacity(deg as usize + 1);
    for _ in 0..deg {
        c.push(index % p);
        index /= p;
    }
    c.push(1);
    c
}

/// Exhaustive irreducibility test: no monic factor of degree 1..=deg/2.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() as u32 - 1;
    for d in 1..=deg / 2 {
        for idx in 0..p.pow(d) {
            let g = monic_from_index(d, idx, p);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn validate_size(p: u32, e: u32) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::CompositeBase(p));
    }
    if e == 0 || e > MAX_DEGREE {
        return Err(Error::UnsupportedSize(format!(
            "extension degree {e} outside 1..={MAX_DEGREE}"
        )));
    }
    let q = p
        .checked_pow(e)
        .filter(|&q| q <= MAX_ORDER)
        .ok_or_else(|| Error::UnsupportedSize(format!("{p}^{e} exceeds {MAX_ORDER}")))?;
    Ok(q)
}

impl FieldSpec {
    /// GF(p^e) with the smallest monic irreducible modulus, ordering candidates
    /// by their coefficient vectors read from the highest degree down. For
    /// `e = 1` this is the polynomial `x`.
    pub fn new(p: u32, e: u32) -> Result<Self> {
        validate_size(p, e)?;
        let modulus = (0..p.pow(e))
            .map(|idx| monic_from_index(e, idx, p))
            .find(|f| is_irreducible(f, p))
            .expect("an irreducible polynomial of every degree exists");
        Self::with_modulus(p, e, modulus)
    }

    /// GF(q) for a prime power q.
    pub fn of_order(q: u32) -> Result<Self> {
        let (p, e) = prime_power(q)
            .ok_or_else(|| Error::UnsupportedSize(format!("{q} is not a prime power")))?;
        Self::new(p, e)
    }

    /// A field with an explicit modulus, as read from a serialized document.
    pub fn with_modulus(p: u32, e: u32, modulus: Vec<u32>) -> Result<Self> {
        let q = validate_size(p, e)?;
        if modulus.len() != e as usize + 1
            || modulus.last() != Some(&1)
            || modulus.iter().any(|&c| c >= p)
            || !is_irreducible(&modulus, p)
        {
            return Err(Error::UnsupportedSize(format!(
                "modulus {modulus:?} is not a monic irreducible of degree {e} over Z_{p}"
            )));
        }
        let n = q as usize;
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        let mut neg = vec![0u8; n];
        let mut inv = vec![0u8; n];
        let coeffs: Vec<Vec<u32>> = (0..q).map(|c| code_to_coeffs(c, p, e)).collect();
        for a in 0..n {
            for b in 0..n {
                let s: Vec<u32> = coeffs[a]
                    .iter()
                    .zip(&coeffs[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * n + b] = coeffs_to_code(&s, p) as u8;
                mul[a * n + b] = coeffs_to_code(&poly_mul_mod(&coeffs[a], &coeffs[b], &modulus, p, e), p) as u8;
            }
        }
        for a in 0..n {
            neg[a] = (0..n).find(|&b| add[a * n + b] == 0).unwrap() as u8;
            if a != 0 {
                inv[a] = (1..n).find(|&b| mul[a * n + b] == 1).unwrap() as u8;
            }
        }
        Ok(FieldSpec {
            inner: Arc::new(FieldInner {
                p,
                e,
                q,
                modulus,
                add,
                mul,
                neg,
                inv,
            }),
        })
    }

    pub fn from_record(record: &FieldRecord) -> Result<Self> {
        Self::with_modulus(record.p, record.e, record.modulus.clone())
    }

    pub fn record(&self) -> FieldRecord {
        FieldRecord {
            p: self.p(),
            e: self.e(),
            modulus: self.modulus().to_vec(),
        }
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn e(&self) -> u32 {
        self.inner.e
    }

    /// The field order p^e.
    pub fn q(&self) -> u32 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> FieldElement {
        self.from_code(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_code(1)
    }

    /// All q elements: zero first, one second, then by code.
    pub fn elements(&self) -> Vec<FieldElement> {
        (0..self.q() as u8).map(|c| self.from_code(c)).collect()
    }

    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.e() as usize || coeffs.iter().any(|&c| c >= self.p()) {
            return Err(Error::UnsupportedSize(format!(
                "coefficients {coeffs:?} do not describe an element of GF({})",
                self.q()
            )));
        }
        Ok(FieldElement {
            field: self.clone(),
            coeffs: coeffs.to_vec(),
        })
    }

    pub fn from_code(&self, code: u8) -> FieldElement {
        assert!((code as u32) < self.q(), "code {code} out of range");
        FieldElement {
            field: self.clone(),
            coeffs: code_to_coeffs(code as u32, self.p(), self.e()),
        }
    }

    #[inline]
    pub(crate) fn add_code(&self, a: u8, b: u8) -> u8 {
        self.inner.add[a as usize * self.inner.q as usize + b as usize]
    }

    #[inline]
    pub(crate) fn mul_code(&self, a: u8, b: u8) -> u8 {
        self.inner.mul[a as usize * self.inner.q as usize + b as usize]
    }

    #[inline]
    pub(crate) fn neg_code(&self, a: u8) -> u8 {
        self.inner.neg[a as usize]
    }

    #[inline]
    pub(crate) fn inv_code(&self, a: u8) -> u8 {
        debug_assert!(a != 0);
        self.inner.inv[a as usize]
    }

    #[inline]
    pub(crate) fn sub_code(&self, a: u8, b: u8) -> u8 {
        self.add_code(a, self.neg_code(b))
    }
}

fn code_to_coeffs(mut code: u32, p: u32, e: u32) -> Vec<u32> {
    (0..e)
        .map(|_| {
            let c = code % p;
            code /= p;
            c
        })
        .collect()
}

fn coeffs_to_code(c: &[u32], p: u32) -> u32 {
    c.iter().rev().fold(0, |acc, &x| acc * p + x)
}

fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32, e: u32) -> Vec<u32> {
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let mut r = poly_rem(&prod, modulus, p);
    r.resize(e as usize, 0);
    r
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.p() == other.p() && self.e() == other.e() && self.modulus() == other.modulus())
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}; modulus {:?})", self.q(), self.modulus())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FieldSpec,
    coeffs: Vec<u32>,
}

impl FieldElement {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn code(&self) -> u8 {
        coeffs_to_code(&self.coeffs, self.field.p()) as u8
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        let p = self.field.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a + b) % p)
            .collect();
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.field.p();
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|&a| (p - a) % p).collect(),
        }
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        let f = &self.field;
        Ok(FieldElement {
            field: f.clone(),
            coeffs: poly_mul_mod(&self.coeffs, &other.coeffs, f.modulus(), f.p(), f.e()),
        })
    }

    pub fn pow(&self, mut exp: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, via a^(q-2).
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.field.q() as u64 - 2))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_fields() -> Vec<FieldSpec> {
        [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]
            .iter()
            .map(|&(p, e)| FieldSpec::new(p, e).unwrap())
            .collect()
    }

    #[test]
    fn moduli() {
        assert_eq!(FieldSpec::new(2, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(FieldSpec::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FieldSpec::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FieldSpec::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FieldSpec::new(2, 4).unwrap().modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FieldSpec::new(4, 1).unwrap_err(), Error::CompositeBase(4));
        assert!(matches!(FieldSpec::new(3, 4), Err(Error::UnsupportedSize(_))));
        assert!(matches!(FieldSpec::new(2, 5), Err(Error::UnsupportedSize(_))));
        assert!(matches!(FieldSpec::new(67, 1), Err(Error::UnsupportedSize(_))));
        assert!(matches!(
            FieldSpec::with_modulus(2, 2, vec![1, 0, 1]),
            Err(Error::UnsupportedSize(_))
        ));
    }

    #[test]
    fn gf4_x_squared() {
        let f = FieldSpec::new(2, 2).unwrap();
        let x = f.element(&[0, 1]).unwrap();
        assert_eq!(x.mul(&x).unwrap().coeffs(), &[1, 1]);
    }

    #[test]
    fn gf5_sum() {
        let f = FieldSpec::new(5, 1).unwrap();
        let a = f.element(&[2]).unwrap();
        let b = f.element(&[3]).unwrap();
        assert!(a.add(&b).unwrap().is_zero());
    }

    #[test]
    fn element_listing() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        let e2 = f2.elements();
        assert_eq!(e2.len(), 2);
        assert!(e2[0].is_zero());
        assert_eq!(e2[1], f2.one());
        let f9 = FieldSpec::new(3, 2).unwrap();
        let e9 = f9.elements();
        assert_eq!(e9.len(), 9);
        for (i, a) in e9.iter().enumerate() {
            assert!(a.coeffs().iter().all(|&c| c < 3));
            for b in &e9[i + 1..] {
                assert_ne!(a, b);
            }
        }
        assert_eq!(FieldSpec::new(2, 2).unwrap().elements().len(), 4);
    }

    #[test]
    fn inverses_and_mismatch() {
        for f in small_fields() {
            for a in f.elements().into_iter().skip(1) {
                assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), f.one());
            }
            assert_eq!(f.zero().inv().unwrap_err(), Error::DivisionByZero);
        }
        let a = FieldSpec::new(2, 1).unwrap().one();
        let b = FieldSpec::new(3, 1).unwrap().one();
        assert_eq!(a.add(&b).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn frobenius_fixes_every_element() {
        for q in (2..=64).filter(|&q| matches!(prime_power(q), Some((_, e)) if e <= MAX_DEGREE)) {
            let f = FieldSpec::of_order(q).unwrap();
            for a in f.elements() {
                assert_eq!(a.pow(q as u64), a, "GF({q})");
            }
        }
    }

    #[test]
    fn ring_axioms_exhaustive() {
        for f in small_fields() {
            let els = f.elements();
            for a in &els {
                for b in &els {
                    assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
                    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                    for c in &els {
                        let l = a.add(b).unwrap().add(c).unwrap();
                        assert_eq!(l, a.add(&b.add(c).unwrap()).unwrap());
                        let l = a.mul(b).unwrap().mul(c).unwrap();
                        assert_eq!(l, a.mul(&b.mul(c).unwrap()).unwrap());
                        let l = a.mul(&b.add(c).unwrap()).unwrap();
                        let r = a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap();
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }

    #[test]
    fn tables_match_polynomial_arithmetic() {
        for f in small_fields() {
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.add_code(a.code(), b.code()), a.add(&b).unwrap().code());
                    assert_eq!(f.mul_code(a.code(), b.code()), a.mul(&b).unwrap().code());
                    assert_eq!(f.sub_code(a.code(), b.code()), a.sub(&b).unwrap().code());
                }
                if !a.is_zero() {
                    assert_eq!(f.inv_code(a.code()), a.inv().unwrap().code());
                }
            }
        }
    }

    #[test]
    fn deterministic_construction() {
        for (p, e) in [(2, 3), (3, 3), (5, 2), (2, 4)] {
            assert_eq!(
                FieldSpec::new(p, e).unwrap().modulus(),
                FieldSpec::new(p, e).unwrap().modulus()
            );
        }
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }
}
