//! Constacyclic codes of length 4p^s as ideals <g> in
//! F_{p^m}[x]/(x^n - beta): construction from factor exponents, dimension,
//! membership, encoding, shifts, duals and dual containment.

use crate::distance::{theorem_distance, TheoremDistance};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::{factor_quartic, FactorSet, Polynomial};

/// Classical parameter record [n, k, d]. The zero code carries d = 0 and
/// the whole space d = 1, matching the distance tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    pub n: u64,
    pub k: u64,
    pub d: u64,
}

impl CodeParams {
    /// Singleton bound k <= n - d + 1 for nonzero, non-full codes.
    pub fn satisfies_singleton(&self) -> bool {
        if self.k == 0 || self.k == self.n {
            return true;
        }
        self.k + self.d <= self.n + 1
    }
}

/// A beta-constacyclic code of length 4p^s given by one exponent per
/// distinct factor of x^4 - b0, bound in canonical factor order.
#[derive(Debug, Clone)]
pub struct ConstaCode {
    field: FieldSpec,
    s: u32,
    beta: FieldElement,
    beta0: FieldElement,
    factor_set: FactorSet,
    exponents: Vec<u64>,
    generator: Polynomial,
    n: u64,
    k: u64,
}

/// One constacyclic shift: (c_0, ..., c_{n-1}) -> (beta*c_{n-1}, c_0, ..., c_{n-2}).
pub fn constacyclic_shift(
    field: &FieldSpec,
    word: &[FieldElement],
    beta: FieldElement,
) -> Result<Vec<FieldElement>> {
    field.check(beta)?;
    let n = word.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity(n);
    out.push(field.mul(beta, word[n - 1])?);
    out.extend_from_slice(&word[..n - 1]);
    Ok(out)
}

impl ConstaCode {
    /// Build the code with exponents bound to the canonical factor order of
    /// x^4 - b0, where b0 is the p^s-th root of beta.
    pub fn build(
        field: &FieldSpec,
        s: u32,
        beta: FieldElement,
        exponents: &[u64],
    ) -> Result<ConstaCode> {
        if s < 1 {
            return Err(Error::OutOfRange("s must be at least 1".into()));
        }
        field.check(beta)?;
        if beta.is_zero() {
            return Err(Error::ZeroElement);
        }
        let pw = field.p().checked_pow(s).ok_or(Error::Overflow("p^s"))?;
        4u64.checked_mul(pw).ok_or(Error::Overflow("4p^s"))?;
        let beta0 = field.pth_power_root(beta, s)?;
        let factor_set = factor_quartic(field, beta0)?;
        if exponents.len() != factor_set.len() {
            return Err(Error::ExponentArity {
                expected: factor_set.len(),
                got: exponents.len(),
            });
        }
        for &e in exponents {
            if e > pw {
                return Err(Error::ExponentOutOfRange { got: e, max: pw });
            }
        }
        let mut generator = Polynomial::one(field);
        for (f, &e) in factor_set.factors().iter().zip(exponents) {
            generator = generator.mul(&f.pow(e, field), field);
        }
        Self::from_parts(
            field.clone(),
            s,
            beta,
            beta0,
            factor_set,
            exponents,
            generator,
        )
    }

    /// Assemble a code from precomputed pieces; the caller guarantees that
    /// `generator` is the product of the factors raised to `exponents`.
    pub(crate) fn from_parts(
        field: FieldSpec,
        s: u32,
        beta: FieldElement,
        beta0: FieldElement,
        factor_set: FactorSet,
        exponents: &[u64],
        generator: Polynomial,
    ) -> Result<ConstaCode> {
        let pw = field.p().checked_pow(s).ok_or(Error::Overflow("p^s"))?;
        let n = 4u64.checked_mul(pw).ok_or(Error::Overflow("4p^s"))?;
        let deg = generator.degree().unwrap() as u64;
        debug_assert!(deg <= n);
        Ok(ConstaCode {
            field,
            s,
            beta,
            beta0,
            factor_set,
            exponents: exponents.to_vec(),
            generator,
            n,
            k: n - deg,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// p^s, the multiplicity of every factor in x^n - beta.
    pub fn p_pow_s(&self) -> u64 {
        self.field.p().pow(self.s)
    }

    pub fn beta(&self) -> FieldElement {
        self.beta
    }

    pub fn beta0(&self) -> FieldElement {
        self.beta0
    }

    pub fn factor_set(&self) -> &FactorSet {
        &self.factor_set
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Exponents permuted into theorem role order.
    pub fn role_exponents(&self) -> Vec<u64> {
        self.factor_set.to_role_order(&self.exponents)
    }

    pub fn generator(&self) -> &Polynomial {
        &self.generator
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn is_zero_code(&self) -> bool {
        self.k == 0
    }

    pub fn is_whole_space(&self) -> bool {
        self.k == self.n
    }

    /// x^n - beta.
    pub fn modulus(&self) -> Polynomial {
        Polynomial::x_pow_minus(&self.field, self.n as usize, self.beta)
    }

    /// Closed-form distance from the family case table.
    pub fn formula_distance(&self) -> Result<TheoremDistance> {
        theorem_distance(
            self.factor_set.family(),
            &self.role_exponents(),
            self.field.p(),
            self.s,
        )
    }

    pub fn params(&self, d: u64) -> CodeParams {
        CodeParams {
            n: self.n,
            k: self.k,
            d,
        }
    }

    /// Minimum distance via the brute-force oracle.
    pub fn min_distance(
        &self,
        strategy: crate::oracle::Strategy,
        cap: u64,
        budget: u128,
    ) -> Result<crate::oracle::OracleOutcome> {
        crate::oracle::min_distance_oracle(
            &self.field,
            self.n as usize,
            &self.generator,
            strategy,
            cap,
            budget,
        )
    }

    /// Membership: the word's polynomial is divisible by the generator.
    pub fn contains(&self, word: &[FieldElement]) -> Result<bool> {
        if word.len() != self.n as usize {
            return Err(Error::LengthMismatch {
                expected: self.n as usize,
                got: word.len(),
            });
        }
        let poly = Polynomial::from_coeffs(&self.field, word)?;
        Ok(poly.rem(&self.generator, &self.field)?.is_zero())
    }

    /// message * g as a length-n coefficient vector.
    pub fn encode(&self, message: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if self.k == 0 {
            return Err(Error::ZeroDimensionalCode);
        }
        if message.len() != self.k as usize {
            return Err(Error::LengthMismatch {
                expected: self.k as usize,
                got: message.len(),
            });
        }
        let msg = Polynomial::from_coeffs(&self.field, message)?;
        let prod = msg.mul(&self.generator, &self.field);
        let mut out = vec![self.field.zero(); self.n as usize];
        for (i, &c) in prod.coeffs().iter().enumerate() {
            out[i] = c;
        }
        Ok(out)
    }

    /// Generator of the dual code: the monic reciprocal of
    /// h = (x^n - beta) / g.
    pub fn dual_generator(&self) -> Result<Polynomial> {
        let (h, rem) = self.modulus().divmod(&self.generator, &self.field)?;
        debug_assert!(rem.is_zero());
        if h.degree() == Some(0) {
            return Ok(Polynomial::one(&self.field));
        }
        h.reciprocal(&self.field)
    }

    /// The dual code, a beta^(-1)-constacyclic code re-expressed in the
    /// canonical factor basis of x^4 - b0^(-1). Root inversion may permute
    /// factor positions, so the exponents are recovered by division rather
    /// than assumed positionwise.
    pub fn dual(&self) -> Result<ConstaCode> {
        let beta_inv = self.field.inv(self.beta)?;
        let gperp = self.dual_generator()?;
        let beta0_inv = self.field.pth_power_root(beta_inv, self.s)?;
        let dual_factors = factor_quartic(&self.field, beta0_inv)?;
        let pw = self.p_pow_s();
        let mut exps = Vec::with_capacity(dual_factors.len());
        let mut rest = gperp;
        for f in dual_factors.factors() {
            let mut e = 0u64;
            while e < pw {
                let (q, r) = rest.divmod(f, &self.field)?;
                if !r.is_zero() {
                    break;
                }
                rest = q;
                e += 1;
            }
            exps.push(e);
        }
        debug_assert!(rest.degree() == Some(0));
        ConstaCode::build(&self.field, self.s, beta_inv, &exps)
    }

    /// Dual containment C^perp <= C, i.e. g divides the dual generator.
    /// Only defined for self-inverse beta; for other beta the dual lives in
    /// a different ambient ring and the containment is ill-typed.
    pub fn is_dual_containing(&self) -> Result<bool> {
        let beta_inv = self.field.inv(self.beta)?;
        if beta_inv != self.beta {
            return Err(Error::BetaNotSelfInverse);
        }
        let gperp = self.dual_generator()?;
        self.generator.divides(&gperp, &self.field)
    }
}
