//! Exact arithmetic in F_{p^m} for odd prime p.
//!
//! An element with coefficient vector (c_0, ..., c_{m-1}) in the modulus
//! basis is stored as the canonical code sum(c_i * p^i). Every operation
//! returns a canonical code, so equality is structural. The field order is
//! capped at [`MAX_FIELD_ORDER`]; desk-scale work stays at q <= 289.

use crate::error::{Error, Result};

/// Largest supported field order q = p^m.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

/// The ambient field F_{p^m}: an odd prime p, an extension degree m, and a
/// monic irreducible modulus of degree m over F_p (x itself when m = 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
    m: u32,
    q: u64,
    /// Modulus coefficients, constant term first, length m + 1, leading 1.
    modulus: Vec<u64>,
}

/// An element of F_{p^m} in canonical form. Interpreted relative to a
/// [`FieldSpec`]; all arithmetic goes through the spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    /// Canonical integer code sum(c_i * p^i).
    pub fn code(self) -> u64 {
        self.0 as u64
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
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

// Dense polynomial helpers over F_p used for modulus discovery and for
// reduction in the extension field. Coefficients ascending, not trimmed.

fn fp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(&mut out);
    out
}

fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    fp_trim(&mut r);
    let lead_inv = mod_inverse(*b.last().expect("nonzero divisor"), p);
    while r.len() >= b.len() {
        let c = (r.last().copied().unwrap() * lead_inv) % p;
        let shift = r.len() - b.len();
        for (i, &bc) in b.iter().enumerate() {
            let sub = (c * bc) % p;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        fp_trim(&mut r);
    }
    r
}

/// Inverse of a mod p for prime p, a not divisible by p.
fn mod_inverse(a: u64, p: u64) -> u64 {
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Inverse of a mod n via extended Euclid; requires gcd(a, n) = 1.
fn mod_inverse_general(a: u64, n: u64) -> Option<u64> {
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(((t0 % n as i128 + n as i128) % n as i128) as u64)
}

/// Monic polynomial of degree `deg` over F_p encoded by the base-p digits of
/// `code` (low coefficients first), plus a leading 1.
fn monic_from_code(code: u64, deg: u32, p: u64) -> Vec<u64> {
    let mut v = Vec::with_capacity(deg as usize + 1);
    let mut c = code;
    for _ in 0..deg {
        v.push(c % p);
        c /= p;
    }
    v.push(1);
    v
}

fn fp_is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for dd in 1..=deg / 2 {
        let count = p.pow(dd as u32);
        for code in 0..count {
            let divisor = monic_from_code(code, dd as u32, p);
            if fp_rem(f, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Build F_{p^m}. The modulus is the monic irreducible of degree m over
    /// F_p with the smallest canonical code, so construction is
    /// deterministic across runs. For m = 1 the modulus is x.
    pub fn new(p: u64, m: u32) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 {
            return Err(Error::EvenCharacteristic(p));
        }
        if m < 1 {
            return Err(Error::BadExtensionDegree);
        }
        let q = p
            .checked_pow(m)
            .ok_or(Error::FieldTooLarge(u64::MAX, MAX_FIELD_ORDER))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge(q, MAX_FIELD_ORDER));
        }
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            (0..q)
                .map(|code| monic_from_code(code, m, p))
                .find(|f| fp_is_irreducible(f, p))
                .expect("an irreducible polynomial of every degree exists")
        };
        Ok(FieldSpec { p, m, q, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Field order q = p^m.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients, constant term first (length m + 1, monic).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// Element from an integer residue; negative values wrap. The residue
    /// lands in the prime subfield.
    pub fn int(&self, v: i64) -> FieldElement {
        let p = self.p as i64;
        let r = v.rem_euclid(p) as u32;
        FieldElement(r)
    }

    /// Element from its canonical code, checked against the field order.
    pub fn element_from_code(&self, code: u64) -> Result<FieldElement> {
        if code >= self.q {
            return Err(Error::MismatchedField);
        }
        Ok(FieldElement(code as u32))
    }

    /// Element from a coefficient vector in the modulus basis (little
    /// endian). Shorter vectors are zero-padded.
    pub fn element_from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.m as usize {
            return Err(Error::MismatchedField);
        }
        let mut code = 0u64;
        for (i, &c) in coeffs.iter().enumerate() {
            if c >= self.p {
                return Err(Error::MismatchedField);
            }
            code += c * self.p.pow(i as u32);
        }
        Ok(FieldElement(code as u32))
    }

    /// Coefficient vector of an element in the modulus basis, length m.
    pub fn coeffs_of(&self, a: FieldElement) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.m as usize);
        let mut c = a.code();
        for _ in 0..self.m {
            v.push(c % self.p);
            c /= self.p;
        }
        v
    }

    pub fn check(&self, a: FieldElement) -> Result<()> {
        if a.code() >= self.q {
            return Err(Error::MismatchedField);
        }
        Ok(())
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u32).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.q as u32).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_raw(a, b))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub_raw(a, b))
    }

    pub fn neg(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        Ok(self.neg_raw(a))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_raw(a, b))
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow_raw(a, self.q - 2))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> Result<FieldElement> {
        self.check(a)?;
        Ok(self.pow_raw(a, e))
    }

    /// The unique b0 with b0^(p^s) = beta, obtained as beta^u for
    /// u = (p^s)^(-1) mod (q - 1). In characteristic p this inverts the
    /// s-fold Frobenius, so x^(4 p^s) - beta = (x^4 - b0)^(p^s).
    pub fn pth_power_root(&self, beta: FieldElement, s: u32) -> Result<FieldElement> {
        self.check(beta)?;
        if beta.is_zero() {
            return Err(Error::ZeroElement);
        }
        if s == 0 {
            return Ok(beta);
        }
        let group = self.q - 1;
        if group == 0 {
            return Ok(beta);
        }
        let mut ps = 1u64;
        for _ in 0..s {
            ps = ps * self.p % group;
        }
        let u = mod_inverse_general(ps.max(1), group)
            .ok_or(Error::OutOfRange("p^s not invertible mod q-1".into()))?;
        Ok(self.pow_raw(beta, u))
    }

    pub(crate) fn add_raw(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.m == 1 {
            return FieldElement(((a.code() + b.code()) % self.p) as u32);
        }
        let (ca, cb) = (self.coeffs_of(a), self.coeffs_of(b));
        let sum: Vec<u64> = ca
            .iter()
            .zip(cb.iter())
            .map(|(x, y)| (x + y) % self.p)
            .collect();
        self.encode(&sum)
    }

    pub(crate) fn sub_raw(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add_raw(a, self.neg_raw(b))
    }

    pub(crate) fn neg_raw(&self, a: FieldElement) -> FieldElement {
        if self.m == 1 {
            return FieldElement(((self.p - a.code()) % self.p) as u32);
        }
        let ca = self.coeffs_of(a);
        let neg: Vec<u64> = ca.iter().map(|x| (self.p - x) % self.p).collect();
        self.encode(&neg)
    }

    pub(crate) fn mul_raw(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.m == 1 {
            return FieldElement((a.code() * b.code() % self.p) as u32);
        }
        let (ca, cb) = (self.coeffs_of(a), self.coeffs_of(b));
        let prod = fp_mul(&ca, &cb, self.p);
        let red = fp_rem(&prod, &self.modulus, self.p);
        self.encode(&red)
    }

    pub(crate) fn pow_raw(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        acc
    }

    fn encode(&self, coeffs: &[u64]) -> FieldElement {
        let mut code = 0u64;
        let mut scale = 1u64;
        for i in 0..self.m as usize {
            let c = coeffs.get(i).copied().unwrap_or(0);
            code += c * scale;
            scale *= self.p;
        }
        FieldElement(code as u32)
    }

    /// Human-readable rendering: plain integer for m = 1, a bracketed
    /// little-endian coefficient vector otherwise.
    pub fn render(&self, a: FieldElement) -> String {
        if self.m == 1 {
            format!("{}", a.code())
        } else {
            let v = self.coeffs_of(a);
            let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
            format!("[{}]", parts.join(" "))
        }
    }
}
