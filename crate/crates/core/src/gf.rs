//! Exact arithmetic in finite fields GF(p^n).
//!
//! Elements are coefficient vectors (constant term first) reduced modulo a
//! monic irreducible polynomial. Representations are canonical: fixed length
//! `n` with all coefficients in `[0, p)`, so structural equality is field
//! equality. The modulus is always the lexicographically smallest monic
//! irreducible of the requested degree, which keeps every downstream group
//! table and report reproducible across runs.

use crate::error::Error;
use crate::Result;

/// A concrete field GF(p^n): characteristic, degree and reduction modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    n: u32,
    /// Monic modulus of degree `n`, constant term first (length `n + 1`).
    modulus: Vec<u32>,
}

/// An element of GF(p^n): `coeffs[i]` multiplies x^i, length always `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: Vec<u32>,
}

/// Deterministic primality test by trial division (field characteristics are
/// tiny here).
pub fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= x {
        if x.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Factor a prime power `q = p^n`; rejects anything else.
pub fn prime_power(q: u64) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "{q} is not a prime power"
        )));
    }
    let mut p = 2u64;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut rem = q;
            let mut n = 0u32;
            while rem.is_multiple_of(p) {
                rem /= p;
                n += 1;
            }
            if rem != 1 {
                return Err(Error::InvalidParameter(format!(
                    "{q} is not a prime power"
                )));
            }
            return Ok((p as u32, n));
        }
        p += 1;
    }
    Ok((q as u32, 1)) // q itself prime
}

impl FieldSpec {
    /// Build a field from an explicit modulus, validating every invariant:
    /// prime characteristic, monic irreducible modulus of degree `n`, reduced
    /// coefficients, and q = p^n within the supported range (q <= 2^16).
    pub fn new(p: u32, n: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if n == 0 {
            return Err(Error::InvalidParameter("degree n must be >= 1".into()));
        }
        let q = (p as u64).checked_pow(n).unwrap_or(u64::MAX);
        if q > 1 << 16 {
            return Err(Error::SizeBound {
                what: "field order",
                got: q as usize,
                bound: 1 << 16,
            });
        }
        if modulus.len() != n as usize + 1 {
            return Err(Error::InvalidParameter(format!(
                "modulus must have {} coefficients",
                n + 1
            )));
        }
        if modulus[n as usize] != 1 {
            return Err(Error::InvalidParameter("modulus must be monic".into()));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidParameter(
                "modulus coefficients must be reduced mod p".into(),
            ));
        }
        if !poly_is_irreducible(p, &modulus) {
            return Err(Error::InvalidParameter(
                "modulus is reducible over GF(p)".into(),
            ));
        }
        Ok(FieldSpec { p, n, modulus })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// Field order q = p^n.
    pub fn order(&self) -> usize {
        (self.p as usize).pow(self.n)
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.n as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.element_from_index(1)
    }

    /// Element at position `index` in enumeration order (base-p digits of
    /// `index`, constant term = least significant digit). Index 0 is zero.
    pub fn element_from_index(&self, index: usize) -> FieldElement {
        assert!(index < self.order(), "field element index out of range");
        let mut coeffs = vec![0u32; self.n as usize];
        let mut rem = index;
        for c in coeffs.iter_mut() {
            *c = (rem % self.p as usize) as u32;
            rem /= self.p as usize;
        }
        FieldElement { coeffs }
    }

    /// Position of `a` in enumeration order.
    pub fn index_of(&self, a: &FieldElement) -> usize {
        let mut idx = 0usize;
        for &c in a.coeffs.iter().rev() {
            idx = idx * self.p as usize + c as usize;
        }
        idx
    }

    /// All q elements in a fixed deterministic order; index 0 is zero.
    pub fn enumerate(&self) -> Vec<FieldElement> {
        (0..self.order())
            .map(|i| self.element_from_index(i))
            .collect()
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        self.check(a);
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let n = self.n as usize;
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] += x as u64 * y as u64;
            }
        }
        let mut prod: Vec<u32> = prod.iter().map(|&v| (v % self.p as u64) as u32).collect();
        // Reduce modulo the monic modulus, highest degree first.
        for d in (n..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (k, &m) in self.modulus.iter().enumerate().take(n) {
                let sub = (c as u64 * m as u64) % self.p as u64;
                let idx = d - n + k;
                prod[idx] = ((prod[idx] as u64 + self.p as u64 - sub) % self.p as u64) as u32;
            }
        }
        prod.truncate(n);
        FieldElement { coeffs: prod }
    }

    /// Multiplicative inverse; inverting zero is an error, never a wrong value.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a);
        if a.is_zero() {
            return Err(Error::ZeroInversion { p: self.p, n: self.n });
        }
        // a^(q-2) = a^{-1} in GF(q)*.
        self.pow(a, self.order() as i64 - 2)
    }

    /// `a^e` with integer exponent; negative exponents invert first.
    pub fn pow(&self, a: &FieldElement, e: i64) -> Result<FieldElement> {
        self.check(a);
        if e < 0 {
            let inv = self.inv(a)?;
            return self.pow(&inv, -e);
        }
        let mut result = self.one();
        let mut base = a.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        Ok(result)
    }

    /// Frobenius endomorphism a -> a^p.
    pub fn frobenius(&self, a: &FieldElement) -> FieldElement {
        self.pow(a, self.p as i64).expect("nonnegative exponent")
    }

    /// Human-readable polynomial name, descending powers ("x^2+x+1").
    pub fn label(&self, a: &FieldElement) -> String {
        self.check(a);
        if a.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, &c) in a.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            };
            terms.push(t);
        }
        terms.join("+")
    }

    fn check(&self, a: &FieldElement) {
        debug_assert_eq!(a.coeffs.len(), self.n as usize, "element/spec mismatch");
        debug_assert!(a.coeffs.iter().all(|&c| c < self.p));
    }
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }
}

/// Smallest monic irreducible polynomial of degree `n` over GF(p), where
/// candidates are ordered by the integer value of their lower coefficients in
/// enumeration order. Deterministic; rejects non-prime `p`.
pub fn find_irreducible(p: u32, n: u32) -> Result<FieldSpec> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("degree n must be >= 1".into()));
    }
    let q = (p as u64).checked_pow(n).unwrap_or(u64::MAX);
    if q > 1 << 16 {
        return Err(Error::SizeBound {
            what: "field order",
            got: q as usize,
            bound: 1 << 16,
        });
    }
    let count = (p as u64).pow(n);
    for low in 0..count {
        let mut modulus = Vec::with_capacity(n as usize + 1);
        let mut rem = low;
        for _ in 0..n {
            modulus.push((rem % p as u64) as u32);
            rem /= p as u64;
        }
        modulus.push(1);
        if poly_is_irreducible(p, &modulus) {
            return Ok(FieldSpec { p, n, modulus });
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

/// Irreducibility by trial factorization: a monic polynomial of degree n >= 2
/// is irreducible iff no monic polynomial of degree 1..=n/2 divides it.
fn poly_is_irreducible(p: u32, poly: &[u32]) -> bool {
    let n = poly.len() - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    for d in 1..=n / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut rem = low;
            for _ in 0..d {
                div.push((rem % p as u64) as u32);
                rem /= p as u64;
            }
            div.push(1);
            if poly_rem_is_zero(p, poly, &div) {
                return false;
            }
        }
    }
    true
}

/// True when `divisor` (monic) divides `poly` over GF(p).
fn poly_rem_is_zero(p: u32, poly: &[u32], divisor: &[u32]) -> bool {
    let mut rem: Vec<u32> = poly.to_vec();
    let d = divisor.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        let deg = rem.len() - 1;
        if lead != 0 {
            for (k, &m) in divisor.iter().enumerate().take(d) {
                let idx = deg - d + k;
                let sub = (lead as u64 * m as u64) % p as u64;
                rem[idx] = ((rem[idx] as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}
