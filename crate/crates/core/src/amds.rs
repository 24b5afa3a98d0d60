//! AMDS determination: the definitional check d = n - k next to the
//! explicit sub-case classification, with a sweep that cross-validates the
//! two (and optionally the oracle) over a whole exponent lattice.

use crate::code::{CodeParams, ConstaCode};
use crate::distance::FamilyClass;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::oracle::{check_formula_distance, DistanceCheck};

/// Generic definitional check: d = n - k, excluding degenerate codes.
pub fn is_amds(params: &CodeParams) -> bool {
    if params.k == 0 || params.k == params.n {
        return false;
    }
    params.n - params.k == params.d
}

/// d = n - k + 1, excluding degenerate codes. Kept next to the AMDS check
/// because the two differ by exactly one.
pub fn is_mds(params: &CodeParams) -> bool {
    if params.k == 0 || params.k == params.n {
        return false;
    }
    params.n + 1 - params.k == params.d
}

/// Verdict for one code: both definitional flags plus the matched
/// sub-case label ("none" when no positive sub-case applies, "degenerate"
/// for k in {0, n}).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmdsVerdict {
    pub is_amds: bool,
    pub is_mds: bool,
    pub case_label: String,
    pub params: CodeParams,
}

pub fn amds_verdict(params: CodeParams, case_label: impl Into<String>) -> AmdsVerdict {
    let degenerate = params.k == 0 || params.k == params.n;
    AmdsVerdict {
        is_amds: is_amds(&params),
        is_mds: is_mds(&params),
        case_label: if degenerate {
            "degenerate".to_string()
        } else {
            case_label.into()
        },
        params,
    }
}

/// Outcome of the sub-case classification alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub amds: bool,
    pub label: String,
    /// The distance the matched sub-case asserts, when positive.
    pub claimed_d: Option<u64>,
}

fn positive(label: &str, d: u64) -> Classification {
    Classification {
        amds: true,
        label: label.to_string(),
        claimed_d: Some(d),
    }
}

fn negative(label: &str) -> Classification {
    Classification {
        amds: false,
        label: label.to_string(),
        claimed_d: None,
    }
}

/// Match role-ordered exponents against the positive sub-cases, after
/// canonicalizing by the weight-preserving factor relabelings (swapping
/// within a negation pair, swapping the two pairs, swapping the two
/// quadratics or the two linears). Quartic codes are never AMDS.
pub fn classify_amds(
    family: FamilyClass,
    exponents: &[u64],
    p: u64,
    s: u32,
) -> Result<Classification> {
    if exponents.len() != family.arity() {
        return Err(Error::ExponentArity {
            expected: family.arity(),
            got: exponents.len(),
        });
    }
    let pw = p.checked_pow(s).ok_or(Error::Overflow("p^s"))?;
    for &e in exponents {
        if e > pw {
            return Err(Error::ExponentOutOfRange { got: e, max: pw });
        }
    }
    Ok(match family {
        FamilyClass::IrreducibleQuartic => negative("VII"),
        FamilyClass::PairedQuadratics => match (exponents[0], exponents[1]) {
            (1, 0) => positive("V(a)", 2),
            (0, 1) => positive("V(b)", 2),
            _ => negative("none"),
        },
        FamilyClass::GammaQuadratics => match (exponents[0], exponents[1]) {
            (1, 0) => positive("VI(a)", 2),
            (0, 1) => positive("VI(b)", 2),
            _ => negative("none"),
        },
        FamilyClass::TwoLinearOneQuadratic => {
            let (a, b) = (
                exponents[0].max(exponents[1]),
                exponents[0].min(exponents[1]),
            );
            match (a, b, exponents[2]) {
                (1, 1, 0) => positive("III(a)", 2),
                (2, 0, 0) => positive("III(b)", 2),
                _ => negative("none"),
            }
        }
        FamilyClass::FourLinear => {
            let (mut i, mut j) = (
                exponents[0].max(exponents[1]),
                exponents[0].min(exponents[1]),
            );
            let (mut u, mut l) = (
                exponents[2].max(exponents[3]),
                exponents[2].min(exponents[3]),
            );
            if (u, l) > (i, j) {
                std::mem::swap(&mut i, &mut u);
                std::mem::swap(&mut j, &mut l);
            }
            match (i, j, u, l) {
                (2, 0, 0, 0) => positive("I(a)", 2),
                (1, 1, 0, 0) => positive("II(b)", 2),
                (2, 0, 1, 0) if s == 1 => positive("I(b)", 3),
                _ => negative("none"),
            }
        }
    })
}

/// One anomaly surfaced by a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finding {
    /// Sub-case says AMDS but the definitional check on the table distance
    /// disagrees.
    ClassifierUnsound { exponents: Vec<u64> },
    /// Definitional check says AMDS on a tuple no positive sub-case covers.
    CompletenessExtra { exponents: Vec<u64> },
    /// The sub-case's asserted distance differs from the table distance.
    ClaimedDistanceMismatch {
        exponents: Vec<u64>,
        claimed: u64,
        table: u64,
    },
    /// Oracle outcome differs from the table distance.
    OracleMismatch {
        exponents: Vec<u64>,
        formula: u64,
        found: Option<u64>,
    },
}

impl std::fmt::Display for Finding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Finding::ClassifierUnsound { exponents } => {
                write!(f, "classifier-positive but d != n-k at {:?}", exponents)
            }
            Finding::CompletenessExtra { exponents } => {
                write!(f, "AMDS outside listed sub-cases at {:?}", exponents)
            }
            Finding::ClaimedDistanceMismatch {
                exponents,
                claimed,
                table,
            } => write!(
                f,
                "sub-case claims d={} but table gives {} at {:?}",
                claimed, table, exponents
            ),
            Finding::OracleMismatch {
                exponents,
                formula,
                found,
            } => match found {
                Some(d) => write!(
                    f,
                    "oracle d={} differs from table d={} at {:?}",
                    d, formula, exponents
                ),
                None => write!(f, "oracle rules out table d={} at {:?}", formula, exponents),
            },
        }
    }
}

/// Oracle settings for sweeps.
#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    pub cap: u64,
    pub budget: u128,
}

/// One lattice point of a sweep.
#[derive(Debug, Clone)]
pub struct SweepRow {
    /// Exponents in canonical factor order.
    pub exponents: Vec<u64>,
    /// Exponents in theorem role order.
    pub role_exponents: Vec<u64>,
    pub params: CodeParams,
    pub case_label: String,
    pub verdict: AmdsVerdict,
    pub classification: Classification,
    pub oracle: Option<DistanceCheck>,
    pub findings: Vec<Finding>,
}

#[derive(Debug, Clone)]
pub struct AmdsSweep {
    pub family: FamilyClass,
    pub rows: Vec<SweepRow>,
}

impl AmdsSweep {
    pub fn amds_rows(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| r.verdict.is_amds)
    }

    pub fn findings(&self) -> impl Iterator<Item = &Finding> {
        self.rows.iter().flat_map(|r| r.findings.iter())
    }
}

/// Maximum lattice size a sweep will walk.
pub const DEFAULT_SWEEP_BUDGET: u64 = 1 << 20;

/// Shared state for a sweep: the factor set and all factor powers are
/// computed once, so building each lattice point is a few polynomial
/// multiplications.
pub(crate) struct SweepContext {
    field: FieldSpec,
    s: u32,
    beta: FieldElement,
    beta0: FieldElement,
    factor_set: crate::poly::FactorSet,
    powers: Vec<Vec<crate::poly::Polynomial>>,
    pw: u64,
}

impl SweepContext {
    pub(crate) fn new(field: &FieldSpec, s: u32, beta: FieldElement) -> Result<SweepContext> {
        if s < 1 {
            return Err(Error::OutOfRange("s must be at least 1".into()));
        }
        let beta0 = field.pth_power_root(beta, s)?;
        let factor_set = crate::poly::factor_quartic(field, beta0)?;
        let pw = field.p().pow(s);
        let powers = factor_set
            .factors()
            .iter()
            .map(|f| {
                let mut tower = Vec::with_capacity(pw as usize + 1);
                tower.push(crate::poly::Polynomial::one(field));
                for e in 1..=pw {
                    let prev = &tower[(e - 1) as usize];
                    tower.push(prev.mul(f, field));
                }
                tower
            })
            .collect();
        Ok(SweepContext {
            field: field.clone(),
            s,
            beta,
            beta0,
            factor_set,
            powers,
            pw,
        })
    }

    pub(crate) fn family(&self) -> FamilyClass {
        self.factor_set.family()
    }

    pub(crate) fn pw(&self) -> u64 {
        self.pw
    }

    pub(crate) fn code(&self, exps: &[u64]) -> Result<ConstaCode> {
        if exps.len() != self.factor_set.len() {
            return Err(Error::ExponentArity {
                expected: self.factor_set.len(),
                got: exps.len(),
            });
        }
        let mut generator = crate::poly::Polynomial::one(&self.field);
        for (i, &e) in exps.iter().enumerate() {
            if e > self.pw {
                return Err(Error::ExponentOutOfRange {
                    got: e,
                    max: self.pw,
                });
            }
            generator = generator.mul(&self.powers[i][e as usize], &self.field);
        }
        ConstaCode::from_parts(
            self.field.clone(),
            self.s,
            self.beta,
            self.beta0,
            self.factor_set.clone(),
            exps,
            generator,
        )
    }
}

/// Sweep every exponent tuple for (field, s, beta): table distance,
/// definitional and sub-case verdicts, optional oracle validation, and the
/// cross-check findings between all of them.
pub fn enumerate_amds(
    field: &FieldSpec,
    s: u32,
    beta: FieldElement,
    oracle: Option<OracleConfig>,
) -> Result<AmdsSweep> {
    let ctx = SweepContext::new(field, s, beta)?;
    let family = ctx.family();
    let arity = family.arity();
    let pw = ctx.pw();
    let lattice: u128 = ((pw + 1) as u128).pow(arity as u32);
    if lattice > DEFAULT_SWEEP_BUDGET as u128 {
        return Err(Error::BudgetExceeded {
            needed: lattice,
            budget: DEFAULT_SWEEP_BUDGET as u128,
        });
    }

    let mut rows = Vec::with_capacity(lattice as usize);
    let mut exps = vec![0u64; arity];
    loop {
        rows.push(sweep_row(&ctx, &exps, oracle)?);
        let mut idx = arity;
        let mut carried = true;
        while idx > 0 {
            idx -= 1;
            exps[idx] += 1;
            if exps[idx] <= pw {
                carried = false;
                break;
            }
            exps[idx] = 0;
        }
        if carried {
            break;
        }
    }
    Ok(AmdsSweep { family, rows })
}

/// Evaluate a single lattice point without sweeping.
pub fn sweep_single(
    field: &FieldSpec,
    s: u32,
    beta: FieldElement,
    exps: &[u64],
    oracle: Option<OracleConfig>,
) -> Result<SweepRow> {
    let ctx = SweepContext::new(field, s, beta)?;
    sweep_row(&ctx, exps, oracle)
}

fn sweep_row(ctx: &SweepContext, exps: &[u64], oracle: Option<OracleConfig>) -> Result<SweepRow> {
    let field = &ctx.field;
    let s = ctx.s;
    let code = ctx.code(exps)?;
    let formula = code.formula_distance()?;
    let params = code.params(formula.d);
    let role = code.role_exponents();
    let classification = classify_amds(code.factor_set().family(), &role, field.p(), s)?;
    let verdict = amds_verdict(params, classification.label.clone());

    let mut findings = Vec::new();
    if classification.amds && !verdict.is_amds {
        findings.push(Finding::ClassifierUnsound {
            exponents: exps.to_vec(),
        });
    }
    if verdict.is_amds && !classification.amds {
        findings.push(Finding::CompletenessExtra {
            exponents: exps.to_vec(),
        });
    }
    if let Some(claimed) = classification.claimed_d {
        if claimed != formula.d {
            findings.push(Finding::ClaimedDistanceMismatch {
                exponents: exps.to_vec(),
                claimed,
                table: formula.d,
            });
        }
    }

    let oracle_check = match oracle {
        None => None,
        Some(cfg) => {
            let check = check_formula_distance(
                field,
                code.n() as usize,
                code.generator(),
                formula.d,
                cfg.cap,
                cfg.budget,
            )?;
            if let DistanceCheck::Refuted { found, .. } = check {
                findings.push(Finding::OracleMismatch {
                    exponents: exps.to_vec(),
                    formula: formula.d,
                    found,
                });
            }
            Some(check)
        }
    };

    Ok(SweepRow {
        exponents: exps.to_vec(),
        role_exponents: role,
        params,
        case_label: formula.case,
        verdict,
        classification,
        oracle: oracle_check,
        findings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn definitional_checks() {
        assert!(is_amds(&CodeParams { n: 20, k: 18, d: 2 }));
        assert!(!is_amds(&CodeParams { n: 20, k: 18, d: 3 }));
        assert!(is_mds(&CodeParams { n: 20, k: 18, d: 3 }));
        assert!(is_amds(&CodeParams { n: 28, k: 26, d: 2 }));
        assert!(!is_amds(&CodeParams { n: 20, k: 0, d: 0 }));
        assert!(!is_amds(&CodeParams { n: 20, k: 20, d: 1 }));
    }

    #[test]
    fn degenerate_codes_get_a_note() {
        let v = amds_verdict(CodeParams { n: 20, k: 0, d: 0 }, "none");
        assert!(!v.is_amds);
        assert_eq!(v.case_label, "degenerate");
    }

    #[test]
    fn classifier_known_cases() {
        let c = classify_amds(FamilyClass::FourLinear, &[1, 1, 0, 0], 5, 1).unwrap();
        assert!(c.amds);
        assert_eq!(c.label, "II(b)");
        assert_eq!(c.claimed_d, Some(2));

        let c = classify_amds(FamilyClass::FourLinear, &[2, 0, 0, 0], 5, 1).unwrap();
        assert_eq!(c.label, "I(a)");

        let c = classify_amds(FamilyClass::FourLinear, &[2, 0, 1, 0], 5, 1).unwrap();
        assert_eq!(c.label, "I(b)");
        assert_eq!(c.claimed_d, Some(3));
        // the same pattern at s = 2 is excluded
        let c = classify_amds(FamilyClass::FourLinear, &[2, 0, 1, 0], 3, 2).unwrap();
        assert!(!c.amds);

        let c = classify_amds(FamilyClass::GammaQuadratics, &[1, 0], 3, 1).unwrap();
        assert_eq!(c.label, "VI(a)");

        let c = classify_amds(FamilyClass::FourLinear, &[0, 0, 0, 0], 5, 1).unwrap();
        assert!(!c.amds);

        let c = classify_amds(FamilyClass::IrreducibleQuartic, &[1], 5, 1).unwrap();
        assert_eq!(c.label, "VII");

        let c = classify_amds(FamilyClass::PairedQuadratics, &[0, 1], 5, 1).unwrap();
        assert_eq!(c.label, "V(b)");
    }

    #[test]
    fn sweep_finds_known_amds_sets() {
        let f5 = FieldSpec::new(5, 1).unwrap();
        let sweep = enumerate_amds(&f5, 1, f5.one(), None).unwrap();
        assert_eq!(sweep.family, FamilyClass::FourLinear);
        let amds: Vec<&SweepRow> = sweep.amds_rows().collect();
        // all of Example 3.2's parameter sets appear
        assert!(amds
            .iter()
            .any(|r| r.params.k == 18 && r.params.d == 2 && r.role_exponents == [2, 0, 0, 0]));
        assert!(amds
            .iter()
            .any(|r| r.params.k == 18 && r.params.d == 2 && r.role_exponents == [1, 1, 0, 0]));
        assert!(amds.iter().any(|r| r.params.k == 17 && r.params.d == 3));
        // soundness: every classifier-positive row passes the generic check
        for row in &sweep.rows {
            if row.classification.amds {
                assert!(row.verdict.is_amds, "unsound at {:?}", row.exponents);
                assert!(row
                    .findings
                    .iter()
                    .all(|f| !matches!(f, Finding::ClassifierUnsound { .. })));
            }
        }
    }

    #[test]
    fn sweep_reports_completeness_extras() {
        // The mixed-pair tuple (1,0,1,0) is AMDS but outside the listed
        // sub-cases; it must surface as a finding, not be asserted away.
        let f5 = FieldSpec::new(5, 1).unwrap();
        let sweep = enumerate_amds(&f5, 1, f5.one(), None).unwrap();
        let extras: Vec<_> = sweep
            .rows
            .iter()
            .filter(|r| r.verdict.is_amds && !r.classification.amds)
            .collect();
        assert!(!extras.is_empty());
        for row in extras {
            assert!(row
                .findings
                .iter()
                .any(|f| matches!(f, Finding::CompletenessExtra { .. })));
        }
    }

    #[test]
    fn negative_proof_case_holds_in_sweep() {
        // No tuple with l=0, 0 < j <= u <= p^s and 2p^(s-1) < i <= p^s in
        // role order is AMDS.
        let f5 = FieldSpec::new(5, 1).unwrap();
        let sweep = enumerate_amds(&f5, 1, f5.one(), None).unwrap();
        for row in &sweep.rows {
            let r = &row.role_exponents;
            let (i, j, u, l) = (r[0], r[1], r[2], r[3]);
            if l == 0 && j >= 1 && j <= u && u <= 5 && 2 < i && i <= 5 {
                assert!(!row.verdict.is_amds, "case 4 violated at {:?}", r);
            }
        }
    }
}
