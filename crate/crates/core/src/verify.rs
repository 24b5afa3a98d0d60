//! The formula-vs-oracle verification sweep behind the `verify` CLI
//! subcommand: every exponent tuple for a (field, s, beta) choice, the
//! table distance with its case label, the oracle's verdict, and whether
//! any disagreement lands on a row already known to be shaky.

use crate::amds::{enumerate_amds, OracleConfig};
use crate::code::ConstaCode;
use crate::distance::label_is_anticipated;
use crate::error::Result;
use crate::field::{FieldElement, FieldSpec};
use crate::oracle::DistanceCheck;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Agreement {
    Agree,
    Disagree,
    Unknown,
}

impl Agreement {
    pub fn as_str(&self) -> &'static str {
        match self {
            Agreement::Agree => "true",
            Agreement::Disagree => "false",
            Agreement::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyRow {
    pub exponents: Vec<u64>,
    pub role_exponents: Vec<u64>,
    pub d_formula: u64,
    pub case_label: String,
    /// Oracle value when settled, otherwise the bound searched to.
    pub d_oracle: String,
    pub agree: Agreement,
    /// A disagreement is explained when its case label is one of the
    /// anticipated fragile rows.
    pub explained: bool,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub p: u64,
    pub m: u32,
    pub s: u32,
    pub beta: FieldElement,
    pub modulus_display: String,
    pub family: String,
    pub binding: Vec<String>,
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn disagreements(&self) -> impl Iterator<Item = &VerifyRow> {
        self.rows.iter().filter(|r| r.agree == Agreement::Disagree)
    }

    pub fn unexplained_disagreements(&self) -> impl Iterator<Item = &VerifyRow> {
        self.disagreements().filter(|r| !r.explained)
    }

    pub fn has_disagreement(&self) -> bool {
        self.disagreements().next().is_some()
    }
}

/// Run the sweep. `restrict` limits the run to a single exponent tuple.
pub fn run_verify(
    field: &FieldSpec,
    s: u32,
    beta: FieldElement,
    oracle: OracleConfig,
    restrict: Option<&[u64]>,
) -> Result<VerifyReport> {
    let sweep_rows;
    let family;
    match restrict {
        None => {
            let sweep = enumerate_amds(field, s, beta, Some(oracle))?;
            family = sweep.family;
            sweep_rows = sweep.rows;
        }
        Some(exps) => {
            let row = crate::amds::sweep_single(field, s, beta, exps, Some(oracle))?;
            family = ConstaCode::build(field, s, beta, exps)?
                .factor_set()
                .family();
            sweep_rows = vec![row];
        }
    }
    let probe = ConstaCode::build(field, s, beta, &vec![0u64; family.arity()])?;
    let mut rows = Vec::new();
    for row in &sweep_rows {
        let (d_oracle, agree) = match row.oracle.as_ref().expect("oracle enabled") {
            DistanceCheck::Confirmed { d } => (d.to_string(), Agreement::Agree),
            DistanceCheck::Refuted { found: Some(d), .. } => (d.to_string(), Agreement::Disagree),
            DistanceCheck::Refuted {
                found: None,
                searched_to,
            } => (format!(">{}", searched_to), Agreement::Disagree),
            DistanceCheck::Inconclusive { searched_to } => {
                (format!(">{}", searched_to), Agreement::Unknown)
            }
        };
        rows.push(VerifyRow {
            exponents: row.exponents.clone(),
            role_exponents: row.role_exponents.clone(),
            d_formula: row.params.d,
            case_label: row.case_label.clone(),
            d_oracle,
            agree,
            explained: agree == Agreement::Disagree && label_is_anticipated(&row.case_label),
        });
    }
    Ok(VerifyReport {
        p: field.p(),
        m: field.m(),
        s,
        beta,
        modulus_display: probe.modulus().render(field),
        family: family.name().to_string(),
        binding: probe.factor_set().binding(field),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::DEFAULT_ENUM_BUDGET;

    #[test]
    fn p3_sweep_is_clean_for_both_betas() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        for beta in [f3.one(), f3.int(-1)] {
            let report = run_verify(
                &f3,
                1,
                beta,
                OracleConfig {
                    cap: 12,
                    budget: DEFAULT_ENUM_BUDGET,
                },
                None,
            )
            .unwrap();
            assert_eq!(report.unexplained_disagreements().count(), 0);
            for row in &report.rows {
                assert_ne!(row.agree, Agreement::Unknown, "at {:?}", row.exponents);
            }
        }
    }

    #[test]
    fn ambient_modulus_for_negacyclic_f5_is_x20_plus_1() {
        // The two paired quadratics multiply to x^4 + 1, so the ambient
        // ring is x^20 + 1, not x^20 - 2.
        let f5 = FieldSpec::new(5, 1).unwrap();
        let report = run_verify(
            &f5,
            1,
            f5.int(-1),
            OracleConfig {
                cap: 4,
                budget: 1 << 18,
            },
            Some(&[0, 1]),
        )
        .unwrap();
        assert_eq!(report.modulus_display, "x^20 + 1");
        assert_eq!(report.rows.len(), 1);
        assert_eq!(report.rows[0].d_formula, 2);
        assert_eq!(report.rows[0].agree, Agreement::Agree);
    }
}
