//! Dense univariate polynomials over F_{p^m}, plus the quartic
//! factorization that drives every code construction here.
//!
//! Coefficients are stored ascending (constant term first) with trailing
//! zeros trimmed; the zero polynomial is the empty vector and its degree is
//! `None`. Factoring x^4 - b0 is done by exhaustive root and
//! monic-quadratic scans, which at the supported field sizes doubles as an
//! independently trustworthy oracle.

use crate::distance::FamilyClass;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one(field: &FieldSpec) -> Polynomial {
        Polynomial {
            coeffs: vec![field.one()],
        }
    }

    pub fn from_coeffs(field: &FieldSpec, coeffs: &[FieldElement]) -> Result<Polynomial> {
        for &c in coeffs {
            field.check(c)?;
        }
        let mut v = coeffs.to_vec();
        while v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
        Ok(Polynomial { coeffs: v })
    }

    /// Convenience constructor from integer residues, constant term first.
    pub fn from_ints(field: &FieldSpec, coeffs: &[i64]) -> Polynomial {
        let els: Vec<FieldElement> = coeffs.iter().map(|&c| field.int(c)).collect();
        Polynomial::from_coeffs(field, &els).expect("residues are always valid")
    }

    /// c * x^deg.
    pub fn monomial(field: &FieldSpec, coeff: FieldElement, deg: usize) -> Polynomial {
        if coeff.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![field.zero(); deg + 1];
        coeffs[deg] = coeff;
        Polynomial { coeffs }
    }

    /// x^n - c.
    pub fn x_pow_minus(field: &FieldSpec, n: usize, c: FieldElement) -> Polynomial {
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[0] = field.neg_raw(c);
        coeffs[n] = field.one();
        Polynomial { coeffs }
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].code() == 1
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map(|c| c.code() == 1).unwrap_or(false)
    }

    fn trim(mut coeffs: Vec<FieldElement>) -> Polynomial {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn add(&self, other: &Polynomial, field: &FieldSpec) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(field.add_raw(self.coeff(i), other.coeff(i)));
        }
        Polynomial::trim(out)
    }

    pub fn sub(&self, other: &Polynomial, field: &FieldSpec) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(field.sub_raw(self.coeff(i), other.coeff(i)));
        }
        Polynomial::trim(out)
    }

    pub fn neg(&self, field: &FieldSpec) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|&c| field.neg_raw(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial, field: &FieldSpec) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let prod = field.mul_raw(a, b);
                out[i + j] = field.add_raw(out[i + j], prod);
            }
        }
        Polynomial::trim(out)
    }

    pub fn scale(&self, c: FieldElement, field: &FieldSpec) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|&a| field.mul_raw(a, c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u64, field: &FieldSpec) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, field);
            }
            base = base.mul(&base, field);
            e >>= 1;
        }
        acc
    }

    /// Quotient and remainder with deg r < deg g; errors on g = 0.
    pub fn divmod(&self, g: &Polynomial, field: &FieldSpec) -> Result<(Polynomial, Polynomial)> {
        if g.is_zero() {
            return Err(Error::ZeroDivision);
        }
        let dg = g.degree().unwrap();
        if self.degree().map(|d| d < dg).unwrap_or(true) {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let df = self.degree().unwrap();
        let lead_inv = field.inv(g.leading().unwrap())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![field.zero(); df - dg + 1];
        for shift in (0..=df - dg).rev() {
            let top = rem[shift + dg];
            if top.is_zero() {
                continue;
            }
            let c = field.mul_raw(top, lead_inv);
            quot[shift] = c;
            for (i, &gc) in g.coeffs.iter().enumerate() {
                let sub = field.mul_raw(c, gc);
                rem[shift + i] = field.sub_raw(rem[shift + i], sub);
            }
        }
        Ok((Polynomial::trim(quot), Polynomial::trim(rem)))
    }

    pub fn rem(&self, g: &Polynomial, field: &FieldSpec) -> Result<Polynomial> {
        Ok(self.divmod(g, field)?.1)
    }

    pub fn divides(&self, other: &Polynomial, field: &FieldSpec) -> Result<bool> {
        Ok(other.rem(self, field)?.is_zero())
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Polynomial, field: &FieldSpec) -> Result<Polynomial> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, field)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return Ok(a);
        }
        a.make_monic(field)
    }

    pub fn make_monic(&self, field: &FieldSpec) -> Result<Polynomial> {
        let lead = self.leading().ok_or(Error::ZeroDivision)?;
        let inv = field.inv(lead)?;
        Ok(self.scale(inv, field))
    }

    pub fn eval(&self, x: FieldElement, field: &FieldSpec) -> FieldElement {
        let mut acc = field.zero();
        for &c in self.coeffs.iter().rev() {
            acc = field.add_raw(field.mul_raw(acc, x), c);
        }
        acc
    }

    /// Monic normalization of x^deg(f) * f(1/x); roots map to inverses.
    /// Requires f(0) != 0.
    pub fn reciprocal(&self, field: &FieldSpec) -> Result<Polynomial> {
        if self.is_zero() || self.coeff(0).is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut rev = self.coeffs.clone();
        rev.reverse();
        Polynomial::trim(rev).make_monic(field)
    }

    /// Exhaustive trial division: true iff f has no monic factor of degree
    /// in [1, deg f / 2]. Intended for deg <= 4 at desk-scale field sizes.
    pub fn is_irreducible(&self, field: &FieldSpec) -> Result<bool> {
        let deg = self.degree().ok_or(Error::ConstantPolynomial)?;
        if deg == 0 {
            return Err(Error::ConstantPolynomial);
        }
        for dd in 1..=deg / 2 {
            let mut divisor_coeffs = vec![field.zero(); dd + 1];
            divisor_coeffs[dd] = field.one();
            let count = field.q().pow(dd as u32);
            for code in 0..count {
                let mut c = code;
                for slot in divisor_coeffs.iter_mut().take(dd) {
                    *slot = field.element_from_code(c % field.q())?;
                    c /= field.q();
                }
                let divisor = Polynomial::trim(divisor_coeffs.clone());
                if self.rem(&divisor, field)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Ordering used for canonical factor lists: by degree, then by the
    /// coefficient vector (constant term first) in canonical integer form.
    pub fn canonical_cmp(&self, other: &Polynomial) -> Ordering {
        let da = self.coeffs.len();
        let db = other.coeffs.len();
        da.cmp(&db).then_with(|| {
            for i in 0..da {
                let ord = self.coeff(i).code().cmp(&other.coeff(i).code());
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
    }

    /// Rendering like `x^2 + 2x + 2`; extension-field coefficients appear
    /// as bracketed vectors.
    pub fn render(&self, field: &FieldSpec) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = field.render(c);
            let term = match i {
                0 => cs,
                1 if cs == "1" => "x".to_string(),
                1 => format!("{}x", cs),
                _ if cs == "1" => format!("x^{}", i),
                _ => format!("{}x^{}", cs, i),
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

/// The distinct monic irreducible factors of x^4 - b0, in canonical order,
/// tagged with the structural family that selects the distance table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSet {
    factors: Vec<Polynomial>,
    family: FamilyClass,
    /// Permutation mapping role positions onto canonical factor indices.
    /// For four linear factors the first two roles form a negation pair
    /// (roots r, -r) and the last two form the other pair; for two linear
    /// factors plus a quadratic the roles are (linear, linear, quadratic).
    role_order: Vec<usize>,
}

impl FactorSet {
    pub fn factors(&self) -> &[Polynomial] {
        &self.factors
    }

    pub fn family(&self) -> FamilyClass {
        self.family
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn role_order(&self) -> &[usize] {
        &self.role_order
    }

    /// Reorders canonical-position values into role order.
    pub fn to_role_order(&self, values: &[u64]) -> Vec<u64> {
        self.role_order.iter().map(|&i| values[i]).collect()
    }

    /// Human-readable factor-to-index binding for reports.
    pub fn binding(&self, field: &FieldSpec) -> Vec<String> {
        self.factors.iter().map(|f| f.render(field)).collect()
    }
}

/// Factor x^4 - b0 into monic irreducibles: scan the field for roots, scan
/// monic quadratics for any remaining quartic part, and fall back to the
/// irreducible quartic itself. Errors on b0 = 0.
pub fn factor_quartic(field: &FieldSpec, beta0: FieldElement) -> Result<FactorSet> {
    field.check(beta0)?;
    if beta0.is_zero() {
        return Err(Error::ZeroElement);
    }
    let quartic = Polynomial::x_pow_minus(field, 4, beta0);
    let mut rest = quartic.clone();
    let mut factors: Vec<Polynomial> = Vec::new();
    for r in field.elements() {
        if rest.eval(r, field).is_zero() {
            let linear = Polynomial::from_coeffs(field, &[field.neg_raw(r), field.one()])?;
            let (q, rem) = rest.divmod(&linear, field)?;
            debug_assert!(rem.is_zero());
            rest = q;
            factors.push(linear);
        }
    }
    match rest.degree() {
        Some(0) => {}
        Some(2) => {
            // No roots remain, so a quadratic remainder is irreducible.
            factors.push(rest.make_monic(field)?);
        }
        Some(4) => {
            // Exhaustive monic-quadratic scan; the cofactor of a hit is the
            // complementary quadratic.
            let mut found = None;
            'scan: for b in field.elements() {
                for c in field.elements() {
                    let candidate = Polynomial::from_coeffs(field, &[c, b, field.one()])?;
                    let (q, rem) = rest.divmod(&candidate, field)?;
                    if rem.is_zero() {
                        found = Some((candidate, q.make_monic(field)?));
                        break 'scan;
                    }
                }
            }
            match found {
                Some((a, b)) => {
                    factors.push(a);
                    factors.push(b);
                }
                None => factors.push(rest.make_monic(field)?),
            }
        }
        _ => unreachable!("x^4 - b0 leaves factors of even degree"),
    }
    factors.sort_by(|a, b| a.canonical_cmp(b));
    factors.dedup();

    let degrees: Vec<usize> = factors.iter().map(|f| f.degree().unwrap()).collect();
    let family = match degrees.as_slice() {
        [4] => FamilyClass::IrreducibleQuartic,
        [2, 2] => {
            let linear_coeffs_zero = factors.iter().all(|f| f.coeff(1).is_zero());
            if linear_coeffs_zero {
                FamilyClass::PairedQuadratics
            } else {
                FamilyClass::GammaQuadratics
            }
        }
        [1, 1, 2] => FamilyClass::TwoLinearOneQuadratic,
        [1, 1, 1, 1] => FamilyClass::FourLinear,
        other => unreachable!("impossible factor shape {:?}", other),
    };

    let role_order = match family {
        FamilyClass::FourLinear => four_linear_roles(field, &factors),
        _ => (0..factors.len()).collect(),
    };

    Ok(FactorSet {
        factors,
        family,
        role_order,
    })
}

/// Pair the four linear factors by root negation: roles are
/// (first factor, its negation partner, first remaining, its partner).
fn four_linear_roles(field: &FieldSpec, factors: &[Polynomial]) -> Vec<usize> {
    let roots: Vec<FieldElement> = factors.iter().map(|f| field.neg_raw(f.coeff(0))).collect();
    let partner = |i: usize| -> usize {
        let target = field.neg_raw(roots[i]);
        roots
            .iter()
            .position(|&r| r == target)
            .expect("roots of x^4 - b0 come in negation pairs")
    };
    let a1 = 0;
    let a2 = partner(0);
    let b1 = (0..4).find(|&i| i != a1 && i != a2).unwrap();
    let b2 = partner(b1);
    vec![a1, a2, b1, b2]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::new(p, 1).unwrap()
    }

    #[test]
    fn product_of_gamma_factors_is_quartic() {
        let f3 = f(3);
        let a = Polynomial::from_ints(&f3, &[2, 1, 1]);
        let b = Polynomial::from_ints(&f3, &[2, 2, 1]);
        let prod = a.mul(&b, &f3);
        assert_eq!(prod, Polynomial::from_ints(&f3, &[1, 0, 0, 0, 1]));
    }

    #[test]
    fn product_of_four_linear_factors() {
        let f5 = f(5);
        let mut prod = Polynomial::one(&f5);
        for r in [1i64, -1, 2, -2] {
            let lin = Polynomial::from_ints(&f5, &[-r, 1]);
            prod = prod.mul(&lin, &f5);
        }
        assert_eq!(prod, Polynomial::x_pow_minus(&f5, 4, f5.one()));
    }

    #[test]
    fn divmod_by_self() {
        let f7 = f(7);
        let poly = Polynomial::from_ints(&f7, &[3, 0, 1, 2]);
        let (q, r) = poly.divmod(&poly, &f7).unwrap();
        assert!(q.is_one());
        assert!(r.is_zero());
        assert_eq!(
            poly.divmod(&Polynomial::zero(), &f7).unwrap_err(),
            Error::ZeroDivision
        );
    }

    #[test]
    fn reciprocal_inverts_roots() {
        let f17 = f(17);
        let lin = Polynomial::from_ints(&f17, &[-13, 1]);
        let rec = lin.reciprocal(&f17).unwrap();
        assert_eq!(rec, Polynomial::from_ints(&f17, &[-4, 1]));
        // involution on monic polynomials with nonzero constant term
        let g = Polynomial::from_ints(&f17, &[3, 5, 1]);
        assert_eq!(g.reciprocal(&f17).unwrap().reciprocal(&f17).unwrap(), g);
        let bad = Polynomial::from_ints(&f17, &[0, 1]);
        assert_eq!(bad.reciprocal(&f17).unwrap_err(), Error::ZeroConstantTerm);
    }

    #[test]
    fn irreducibility_examples() {
        let f7 = f(7);
        assert!(Polynomial::from_ints(&f7, &[1, 0, 1])
            .is_irreducible(&f7)
            .unwrap());
        let f5 = f(5);
        assert!(!Polynomial::from_ints(&f5, &[1, 0, 1])
            .is_irreducible(&f5)
            .unwrap());
        let f3 = f(3);
        assert!(Polynomial::from_ints(&f3, &[2, 1, 1])
            .is_irreducible(&f3)
            .unwrap());
        assert_eq!(
            Polynomial::from_ints(&f3, &[2])
                .is_irreducible(&f3)
                .unwrap_err(),
            Error::ConstantPolynomial
        );
    }

    #[test]
    fn factor_quartic_families() {
        let f17 = f(17);
        let set = factor_quartic(&f17, f17.one()).unwrap();
        assert_eq!(set.family(), FamilyClass::FourLinear);
        let expect: Vec<Polynomial> = [1i64, -1, 13, -13]
            .iter()
            .map(|&r| Polynomial::from_ints(&f17, &[-r, 1]))
            .collect();
        let mut expect_sorted = expect.clone();
        expect_sorted.sort_by(|a, b| a.canonical_cmp(b));
        assert_eq!(set.factors(), expect_sorted.as_slice());

        let f7 = f(7);
        let set = factor_quartic(&f7, f7.one()).unwrap();
        assert_eq!(set.family(), FamilyClass::TwoLinearOneQuadratic);
        assert_eq!(set.len(), 3);
        assert!(set
            .factors()
            .contains(&Polynomial::from_ints(&f7, &[1, 0, 1])));

        let f3 = f(3);
        let set = factor_quartic(&f3, f3.int(-1)).unwrap();
        assert_eq!(set.family(), FamilyClass::GammaQuadratics);
        assert_eq!(
            set.factors(),
            &[
                Polynomial::from_ints(&f3, &[2, 1, 1]),
                Polynomial::from_ints(&f3, &[2, 2, 1]),
            ]
        );

        let f5 = f(5);
        let set = factor_quartic(&f5, f5.int(-1)).unwrap();
        assert_eq!(set.family(), FamilyClass::PairedQuadratics);

        assert_eq!(
            factor_quartic(&f5, f5.zero()).unwrap_err(),
            Error::ZeroElement
        );
    }

    #[test]
    fn factor_quartic_reassembles_everywhere() {
        for (p, m) in [(3u64, 1u32), (5, 1), (7, 1), (3, 2), (17, 1)] {
            let field = FieldSpec::new(p, m).unwrap();
            for b0 in field.nonzero_elements() {
                let set = factor_quartic(&field, b0).unwrap();
                let mut prod = Polynomial::one(&field);
                for fac in set.factors() {
                    assert!(fac.is_monic());
                    assert!(fac.is_irreducible(&field).unwrap());
                    prod = prod.mul(fac, &field);
                }
                assert_eq!(prod, Polynomial::x_pow_minus(&field, 4, b0));
            }
        }
    }

    #[test]
    fn freshman_dream_lift() {
        // Raising each factor to p^s and multiplying gives x^(4 p^s) - b0^(p^s).
        let f3 = f(3);
        for s in 1..=2u32 {
            let ps = 3u64.pow(s);
            for b0 in f3.nonzero_elements() {
                let set = factor_quartic(&f3, b0).unwrap();
                let mut prod = Polynomial::one(&f3);
                for fac in set.factors() {
                    prod = prod.mul(&fac.pow(ps, &f3), &f3);
                }
                let beta = f3.pow(b0, ps).unwrap();
                assert_eq!(prod, Polynomial::x_pow_minus(&f3, 4 * ps as usize, beta));
            }
        }
    }

    #[test]
    fn four_linear_role_order_pairs_negated_roots() {
        let f5 = f(5);
        let set = factor_quartic(&f5, f5.one()).unwrap();
        let roles = set.role_order();
        let root = |i: usize| -> FieldElement { f5.neg_raw(set.factors()[roles[i]].coeff(0)) };
        assert_eq!(root(1), f5.neg_raw(root(0)));
        assert_eq!(root(3), f5.neg_raw(root(2)));
    }
}
