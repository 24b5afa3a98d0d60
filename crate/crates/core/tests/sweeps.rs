//! Lattice sweeps cross-validating the distance tables, the AMDS
//! sub-cases and the oracle across the desk-scale parameter sets.

use constacyclic::{
    enumerate_amds, is_amds, run_verify, sweep_single, Agreement, DistanceCheck, FieldSpec,
    OracleConfig, DEFAULT_ENUM_BUDGET,
};

fn oracle() -> OracleConfig {
    OracleConfig {
        cap: 12,
        budget: DEFAULT_ENUM_BUDGET,
    }
}

#[test]
fn p3_formula_matches_full_enumeration_everywhere() {
    let f3 = FieldSpec::new(3, 1).unwrap();
    for beta in [f3.one(), f3.int(-1)] {
        let sweep = enumerate_amds(&f3, 1, beta, Some(oracle())).unwrap();
        for row in &sweep.rows {
            match row.oracle.as_ref().unwrap() {
                DistanceCheck::Confirmed { d } => assert_eq!(*d, row.params.d),
                other => panic!("not confirmed at {:?}: {:?}", row.exponents, other),
            }
        }
    }
}

#[test]
fn classifier_sound_across_small_primes() {
    // Every classifier-positive tuple passes the definitional check on the
    // table distance, at p in {3, 5, 7} and both self-inverse betas.
    for p in [3u64, 5, 7] {
        let field = FieldSpec::new(p, 1).unwrap();
        for beta in [field.one(), field.int(-1)] {
            let sweep = enumerate_amds(&field, 1, beta, None).unwrap();
            for row in &sweep.rows {
                if row.classification.amds {
                    assert!(
                        row.verdict.is_amds,
                        "p={} beta={} exps {:?}",
                        p,
                        beta.code(),
                        row.exponents
                    );
                    assert_eq!(
                        Some(row.params.d),
                        row.classification.claimed_d,
                        "claimed distance drifted at {:?}",
                        row.exponents
                    );
                }
            }
        }
    }
}

#[test]
fn classifier_completeness_extras_are_reported_not_hidden() {
    // The generic check finds AMDS codes outside the listed sub-cases
    // (for example a lone quadratic factor with exponent 1). They must be
    // present in the sweep output as findings.
    let f7 = FieldSpec::new(7, 1).unwrap();
    let sweep = enumerate_amds(&f7, 1, f7.one(), None).unwrap();
    let extras: Vec<_> = sweep
        .rows
        .iter()
        .filter(|r| r.verdict.is_amds && !r.classification.amds)
        .collect();
    assert!(extras.iter().any(|r| r.exponents == [0, 0, 1]));
    for row in &extras {
        assert!(!row.findings.is_empty());
    }
}

#[test]
fn known_amds_sets_by_role() {
    // Example parameter sets, located by role exponents; the oracle runs
    // on just the named rows.
    let f5 = FieldSpec::new(5, 1).unwrap();
    let sweep = enumerate_amds(&f5, 1, f5.one(), None).unwrap();
    let find = |role: &[u64]| {
        sweep
            .rows
            .iter()
            .find(|r| r.role_exponents == role)
            .unwrap()
    };
    for (role, k, d) in [
        (&[2u64, 0, 0, 0][..], 18, 2),
        (&[1, 1, 0, 0][..], 18, 2),
        (&[2, 0, 1, 0][..], 17, 3),
    ] {
        let r = find(role);
        assert!(r.verdict.is_amds && r.params.k == k && r.params.d == d);
        let checked = sweep_single(
            &f5,
            1,
            f5.one(),
            &r.exponents,
            Some(OracleConfig {
                cap: 4,
                budget: 1 << 16,
            }),
        )
        .unwrap();
        assert!(matches!(
            checked.oracle,
            Some(DistanceCheck::Confirmed { .. })
        ));
    }

    let f7 = FieldSpec::new(7, 1).unwrap();
    let sweep = enumerate_amds(&f7, 1, f7.one(), None).unwrap();
    for role in [[1u64, 1, 0], [2, 0, 0]] {
        let row = sweep
            .rows
            .iter()
            .find(|r| r.role_exponents == role)
            .unwrap();
        assert!(row.verdict.is_amds);
        assert_eq!((row.params.n, row.params.k, row.params.d), (28, 26, 2));
    }

    let f3 = FieldSpec::new(3, 1).unwrap();
    let sweep = enumerate_amds(&f3, 1, f3.int(-1), None).unwrap();
    let row = sweep
        .rows
        .iter()
        .find(|r| r.role_exponents == [1, 0])
        .unwrap();
    assert!(row.verdict.is_amds);
    assert_eq!((row.params.n, row.params.k, row.params.d), (12, 10, 2));
}

#[test]
fn singleton_bound_across_sweeps() {
    for (p, beta_one) in [(3u64, true), (3, false), (5, true), (5, false), (7, true)] {
        let field = FieldSpec::new(p, 1).unwrap();
        let beta = if beta_one { field.one() } else { field.int(-1) };
        let sweep = enumerate_amds(&field, 1, beta, None).unwrap();
        for row in &sweep.rows {
            assert!(
                row.params.satisfies_singleton(),
                "p={} exps {:?} params {:?}",
                p,
                row.exponents,
                row.params
            );
        }
    }
}

#[test]
fn sigma_two_sampled_sweep_refutes_amds_beyond_degree_two() {
    // p = 3, s = 2 cyclic: the only AMDS codes have generator degree 2.
    // Oracle-conclusive (cap 6) for every sampled tuple of degree <= 5;
    // beyond, the table distance is the evidence.
    let f3 = FieldSpec::new(3, 1).unwrap();
    let cap = OracleConfig {
        cap: 6,
        budget: 1 << 16,
    };
    let mut oracle_checked = 0;
    for i in 0..=9u64 {
        for j in 0..=9u64 {
            for u in 0..=9u64 {
                let deg = i + j + 2 * u;
                let sampled_for_oracle = (1..=5).contains(&deg);
                let sampled_formula_only =
                    [0u64, 1, 3, 8, 9].contains(&i) && [0u64, 1, 9].contains(&j) && u % 3 == 0;
                if !sampled_for_oracle && !sampled_formula_only {
                    continue;
                }
                let row = if sampled_for_oracle {
                    oracle_checked += 1;
                    sweep_single(&f3, 2, f3.one(), &[i, j, u], Some(cap)).unwrap()
                } else {
                    sweep_single(&f3, 2, f3.one(), &[i, j, u], None).unwrap()
                };
                let amds_by_pattern = {
                    let r = &row.role_exponents;
                    let (a, b) = (r[0].max(r[1]), r[0].min(r[1]));
                    (a, b, r[2]) == (2, 0, 0)
                        || (a, b, r[2]) == (1, 1, 0)
                        || (a, b, r[2]) == (0, 0, 1)
                };
                if let Some(DistanceCheck::Confirmed { d }) = row.oracle {
                    // conclusive: AMDS exactly on the degree-2 patterns
                    let params = constacyclic::CodeParams {
                        n: row.params.n,
                        k: row.params.k,
                        d,
                    };
                    assert_eq!(
                        is_amds(&params),
                        amds_by_pattern,
                        "sigma=2 AMDS claim failed at {:?}",
                        row.exponents
                    );
                } else {
                    assert_eq!(
                        row.verdict.is_amds, amds_by_pattern,
                        "sigma=2 table AMDS claim failed at {:?}",
                        row.exponents
                    );
                }
            }
        }
    }
    assert!(oracle_checked > 30, "sample too small: {}", oracle_checked);
}

#[test]
fn verify_single_tuple_restriction() {
    let f5 = FieldSpec::new(5, 1).unwrap();
    let report = run_verify(
        &f5,
        1,
        f5.one(),
        OracleConfig {
            cap: 4,
            budget: 1 << 16,
        },
        Some(&[2, 1, 0, 0]),
    )
    .unwrap();
    assert_eq!(report.rows.len(), 1);
    // Role tuple (2,0,1,0): if the table disagrees with the oracle here,
    // the label must be in the anticipated set.
    let row = &report.rows[0];
    if row.agree == Agreement::Disagree {
        assert!(
            row.explained,
            "unexplained disagreement: {}",
            row.case_label
        );
    }
}
