//! Closed-form Hamming distances for repeated-root constacyclic codes of
//! length 4p^s, as case tables keyed by the structural family of
//! x^4 - b0.
//!
//! Each exponent t in [1, p^s - 1] sits in exactly one window
//!
//! ```text
//! p^s - p^(s-d) + e*p^(s-d-1) + 1  <=  t  <=  p^s - p^(s-d) + (e+1)*p^(s-d-1)
//! ```
//!
//! with 0 <= d <= s-1 and 0 <= e <= p-2, and contributes the term
//! (e+2)*p^d, scaled by a per-factor multiplier, to a minimum. The tables
//! are implemented row by row, quirks and all; every result carries
//! a case label so the oracle sweep can attribute any disagreement to a
//! specific row. Labels listed by [`label_is_anticipated`] mark rows known
//! to be fragile; a `(R)` suffix marks tuples that were rebound into a
//! stated ordering by sorting, and `gap-min` marks tuples no explicit row
//! covers, which fall back to the generic minimum with
//! saturated factors dropped.

use crate::error::{Error, Result};

/// Structural family of the factorization of x^4 - b0, which selects the
/// distance table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyClass {
    /// x^4 - b0 irreducible.
    IrreducibleQuartic,
    /// Two irreducible quadratics with zero linear coefficient.
    PairedQuadratics,
    /// Two linear factors and one irreducible quadratic.
    TwoLinearOneQuadratic,
    /// Four distinct linear factors.
    FourLinear,
    /// Two irreducible quadratics with nonzero linear coefficient.
    GammaQuadratics,
}

impl FamilyClass {
    /// Number of distinct irreducible factors, i.e. the exponent arity.
    pub fn arity(self) -> usize {
        match self {
            FamilyClass::IrreducibleQuartic => 1,
            FamilyClass::PairedQuadratics | FamilyClass::GammaQuadratics => 2,
            FamilyClass::TwoLinearOneQuadratic => 3,
            FamilyClass::FourLinear => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyClass::IrreducibleQuartic => "IrreducibleQuartic",
            FamilyClass::PairedQuadratics => "PairedQuadratics",
            FamilyClass::TwoLinearOneQuadratic => "TwoLinearOneQuadratic",
            FamilyClass::FourLinear => "FourLinear",
            FamilyClass::GammaQuadratics => "GammaQuadratics",
        }
    }
}

/// Location of an exponent in the interval parametrization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceWindow {
    /// Exponent 0: the factor is absent.
    Zero,
    /// Exponent p^s: the factor is fully saturated.
    Saturated,
    /// The unique (delta, eta) window containing the exponent.
    Window { delta: u32, eta: u64 },
}

/// Locate t in [0, p^s] by direct scan over the at most s*(p-1) windows.
pub fn window_of(t: u64, p: u64, s: u32) -> Result<DistanceWindow> {
    let pw = checked_pow(p, s)?;
    if t > pw {
        return Err(Error::ExponentOutOfRange { got: t, max: pw });
    }
    if t == 0 {
        return Ok(DistanceWindow::Zero);
    }
    if t == pw {
        return Ok(DistanceWindow::Saturated);
    }
    for delta in 0..s {
        let outer = checked_pow(p, s - delta)?;
        let inner = checked_pow(p, s - delta - 1)?;
        for eta in 0..p - 1 {
            let lo = pw - outer + eta * inner + 1;
            let hi = pw - outer + (eta + 1) * inner;
            if lo <= t && t <= hi {
                return Ok(DistanceWindow::Window { delta, eta });
            }
        }
    }
    unreachable!("windows partition [1, p^s - 1]")
}

/// The windowed factor term multiplier*(eta+2)*p^delta; `None` when the
/// exponent is saturated and its term drops out of the minimum. For t = 0
/// the factor imposes no constraint and the term reduces to the bare
/// multiplier; the whole-space d = 1 row is the dispatcher's concern.
pub fn single_factor_term(t: u64, multiplier: u64, p: u64, s: u32) -> Result<Option<u64>> {
    if !(1..=4).contains(&multiplier) {
        return Err(Error::OutOfRange(format!(
            "multiplier {} not in 1..=4",
            multiplier
        )));
    }
    Ok(match window_of(t, p, s)? {
        DistanceWindow::Zero => Some(multiplier),
        DistanceWindow::Saturated => None,
        DistanceWindow::Window { delta, eta } => {
            Some(multiplier * (eta + 2) * checked_pow(p, delta)?)
        }
    })
}

fn checked_pow(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e).ok_or(Error::Overflow("p^s"))
}

/// A theorem-table evaluation: the distance together with the label of the
/// row that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremDistance {
    pub d: u64,
    pub case: String,
}

/// True for case labels whose rows are known to be fragile: every
/// formula-vs-oracle disagreement is expected to land on one of these. An
/// oracle disagreement under any other label points at the implementation,
/// not the tables.
pub fn label_is_anticipated(label: &str) -> bool {
    label.contains("(R)")
        || label.contains("gap-min")
        || label.starts_with("l4-b")
        || label.starts_with("l4-a:min")
        || label.starts_with("l4-a:sat")
}

/// Evaluate the case table for `family` on role-ordered exponents.
///
/// Role order: four linear factors are (r, -r, r', -r') so the first two
/// exponents sit on a negation pair; two linear plus a quadratic are
/// (linear, linear, quadratic); two-factor families are symmetric.
pub fn theorem_distance(
    family: FamilyClass,
    exponents: &[u64],
    p: u64,
    s: u32,
) -> Result<TheoremDistance> {
    if exponents.len() != family.arity() {
        return Err(Error::ExponentArity {
            expected: family.arity(),
            got: exponents.len(),
        });
    }
    let pw = checked_pow(p, s)?;
    for &e in exponents {
        if e > pw {
            return Err(Error::ExponentOutOfRange { got: e, max: pw });
        }
    }
    let ctx = Ctx { p, s, pw };
    match family {
        FamilyClass::IrreducibleQuartic => table_quartic(exponents[0], &ctx),
        FamilyClass::PairedQuadratics => two_factor(exponents, &ctx, table_paired, &[1, 2], "qq"),
        FamilyClass::GammaQuadratics => two_factor(exponents, &ctx, table_gamma, &[1, 3], "gq"),
        FamilyClass::TwoLinearOneQuadratic => two_linear_one_quadratic(exponents, &ctx),
        FamilyClass::FourLinear => four_linear(exponents, &ctx),
    }
}

struct Ctx {
    p: u64,
    s: u32,
    pw: u64,
}

impl Ctx {
    fn ps1(&self) -> u64 {
        self.pw / self.p
    }

    fn win(&self, t: u64) -> bool {
        t >= 1 && t < self.pw
    }

    fn term(&self, t: u64, mult: u64) -> Option<u64> {
        single_factor_term(t, mult, self.p, self.s).expect("validated exponent")
    }

    /// Windowed term that must exist: caller guarantees 1 <= t < p^s.
    fn wterm(&self, t: u64, mult: u64) -> u64 {
        self.term(t, mult).expect("windowed exponent")
    }

    /// Generic minimum over per-role terms with saturated factors dropped
    /// and zero exponents contributing their bare multiplier. Used only
    /// when no explicit row covers the tuple.
    fn gap_min(&self, binding: &[(u64, u64)], label: &str) -> TheoremDistance {
        let d = binding
            .iter()
            .filter_map(|&(t, mult)| self.term(t, mult))
            .min()
            .expect("all-saturated tuples are handled before the fallback");
        TheoremDistance {
            d,
            case: format!("{}:gap-min", label),
        }
    }
}

fn done(d: u64, case: &str) -> Option<TheoremDistance> {
    Some(TheoremDistance {
        d,
        case: case.to_string(),
    })
}

fn with_suffix(r: TheoremDistance, rebound: bool) -> TheoremDistance {
    if rebound {
        TheoremDistance {
            d: r.d,
            case: format!("{}(R)", r.case),
        }
    } else {
        r
    }
}

fn table_quartic(i: u64, ctx: &Ctx) -> Result<TheoremDistance> {
    if i == 0 {
        return Ok(done(1, "q4:unit").unwrap());
    }
    if i == ctx.pw {
        return Ok(done(0, "q4:zero").unwrap());
    }
    Ok(done(ctx.wterm(i, 1), "q4:win").unwrap())
}

/// Shared driver for the symmetric two-factor families: sort descending,
/// evaluate, fall back to the generic minimum on a row gap.
fn two_factor(
    exps: &[u64],
    ctx: &Ctx,
    table: fn(u64, u64, &Ctx) -> Option<TheoremDistance>,
    mults: &[u64; 2],
    label: &str,
) -> Result<TheoremDistance> {
    let (hi, lo) = (exps[0].max(exps[1]), exps[0].min(exps[1]));
    let rebound = exps[0] < exps[1];
    let r =
        table(hi, lo, ctx).unwrap_or_else(|| ctx.gap_min(&[(hi, mults[0]), (lo, mults[1])], label));
    Ok(with_suffix(r, rebound))
}

/// (x^2 - phi)^i (x^2 + phi)^j with j <= i.
fn table_paired(i: u64, j: u64, ctx: &Ctx) -> Option<TheoremDistance> {
    let pw = ctx.pw;
    if i == 0 && j == 0 {
        return done(1, "qq:unit");
    }
    if i == pw && j == pw {
        return done(0, "qq:zero");
    }
    if j == 0 && i > 0 {
        return done(2, "qq:d2");
    }
    if ctx.win(i) && ctx.win(j) {
        return done(ctx.wterm(i, 1).min(ctx.wterm(j, 2)), "qq:min");
    }
    if i == pw && ctx.win(j) {
        return done(ctx.wterm(j, 2), "qq:sat-i");
    }
    None
}

/// The gamma-family quadratics (nonzero linear coefficient), exponent
/// order i >= u.
fn table_gamma(i: u64, u: u64, ctx: &Ctx) -> Option<TheoremDistance> {
    let pw = ctx.pw;
    if i == 0 && u == 0 {
        return done(1, "gq:unit");
    }
    if i == pw && u == pw {
        return done(0, "gq:zero");
    }
    if u == 0 && i <= ctx.ps1() {
        return done(2, "gq:d2");
    }
    if u == 0 {
        return done(3, "gq:d3");
    }
    if ctx.win(i) && ctx.win(u) {
        return done(ctx.wterm(i, 1).min(ctx.wterm(u, 3)), "gq:min");
    }
    if i == pw && ctx.win(u) {
        return done(ctx.wterm(u, 3), "gq:sat-i");
    }
    None
}

/// (x-1)^i (x+1)^j (x^2+1)^u. Dispatch: the stated ordering u <= j <= i,
/// then j <= u <= i, then the remark rebinding by sorting into the second
/// table's chain.
fn two_linear_one_quadratic(exps: &[u64], ctx: &Ctx) -> Result<TheoremDistance> {
    let (a, b) = (exps[0].max(exps[1]), exps[0].min(exps[1]));
    let u = exps[2];
    let direct = exps[2] <= exps[1] && exps[1] <= exps[0] // u <= j <= i
        || exps[1] <= exps[2] && exps[2] <= exps[0]; // j <= u <= i
    let rebound = !direct;
    let r = if u <= b {
        table_two_linear_a(a, b, u, ctx).unwrap_or_else(|| ctx.gap_min(&[(a, 1), (u, 2)], "llq-a"))
    } else if u <= a {
        table_two_linear_b(a, b, u, ctx)
            .unwrap_or_else(|| ctx.gap_min(&[(a, 1), (u, 2), (b, 4)], "llq-b"))
    } else {
        // Quadratic exponent largest: sort into the j' <= u' <= i' chain.
        table_two_linear_b(u, b, a, ctx)
            .unwrap_or_else(|| ctx.gap_min(&[(u, 1), (a, 2), (b, 4)], "llq-b"))
    };
    Ok(with_suffix(r, rebound))
}

/// Table for u <= j <= i.
fn table_two_linear_a(i: u64, j: u64, u: u64, ctx: &Ctx) -> Option<TheoremDistance> {
    let pw = ctx.pw;
    if i == 0 && j == 0 && u == 0 {
        return done(1, "llq-a:unit");
    }
    if i == pw && j == pw && u == pw {
        return done(0, "llq-a:zero");
    }
    if u == 0 {
        return done(2, "llq-a:d2");
    }
    if ctx.win(i) && ctx.win(j) && ctx.win(u) {
        return done(ctx.wterm(i, 1).min(ctx.wterm(u, 2)), "llq-a:min");
    }
    if i == pw && j >= 1 && ctx.win(u) {
        return done(ctx.wterm(u, 2), "llq-a:sat-i");
    }
    None
}

/// Table for j <= u <= i.
fn table_two_linear_b(i: u64, j: u64, u: u64, ctx: &Ctx) -> Option<TheoremDistance> {
    let pw = ctx.pw;
    let ps1 = ctx.ps1();
    if i == 0 && j == 0 && u == 0 {
        return done(1, "llq-b:unit");
    }
    if i == pw && j == pw && u == pw {
        return done(0, "llq-b:zero");
    }
    if j == 0 && u == 0 && i > 0 && i < pw {
        return done(2, "llq-b:d2a");
    }
    if j == 0 && u <= i && i <= ps1 {
        return done(2, "llq-b:d2b");
    }
    if j == 0 && u >= 1 && u <= 2 * ps1 && ps1 < i && i <= 2 * ps1 {
        return done(3, "llq-b:d3");
    }
    if j == 0 && u >= 1 && 2 * ps1 < i {
        return done(4, "llq-b:d4");
    }
    if ctx.win(i) && ctx.win(j) && ctx.win(u) {
        let d = ctx.wterm(i, 1).min(ctx.wterm(u, 2)).min(ctx.wterm(j, 4));
        return done(d, "llq-b:min");
    }
    if i == pw && ctx.win(u) && ctx.win(j) {
        return done(ctx.wterm(u, 2).min(ctx.wterm(j, 4)), "llq-b:sat-i");
    }
    if i == pw && u == pw && ctx.win(j) {
        return done(ctx.wterm(j, 4), "llq-b:sat-iu");
    }
    None
}

/// (x-1)^i (x+1)^j (x-d)^u (x+d)^l with d^2 = -1. Role exponents pair as
/// (i, j) and (u, l). Normalize within pairs and across pairs (both are
/// weight-preserving relabelings), then dispatch on the stated orderings
/// l <= j <= u <= i and l <= u <= j <= i.
fn four_linear(exps: &[u64], ctx: &Ctx) -> Result<TheoremDistance> {
    let direct = (exps[3] <= exps[1] && exps[1] <= exps[2] && exps[2] <= exps[0])
        || (exps[3] <= exps[2] && exps[2] <= exps[1] && exps[1] <= exps[0]);
    let rebound = !direct;
    let (mut i, mut j) = (exps[0].max(exps[1]), exps[0].min(exps[1]));
    let (mut u, mut l) = (exps[2].max(exps[3]), exps[2].min(exps[3]));
    if (u, l) > (i, j) {
        std::mem::swap(&mut i, &mut u);
        std::mem::swap(&mut j, &mut l);
    }
    let r = if j >= u {
        // l <= u <= j <= i
        table_four_linear_b(i, j, u, l, ctx)
            .unwrap_or_else(|| ctx.gap_min(&[(i, 1), (u, 2), (l, 4)], "l4-b"))
    } else if j >= l {
        // l <= j <= u <= i
        table_four_linear_a(i, j, u, l, ctx)
            .unwrap_or_else(|| ctx.gap_min(&[(i, 1), (j, 2), (u, 3), (l, 4)], "l4-a"))
    } else {
        // j < l: sort into the first table's chain by swapping j and l.
        table_four_linear_a(i, l, u, j, ctx)
            .unwrap_or_else(|| ctx.gap_min(&[(i, 1), (l, 2), (u, 3), (j, 4)], "l4-a"))
    };
    Ok(with_suffix(r, rebound))
}

/// Table for l <= j <= u <= i.
fn table_four_linear_a(i: u64, j: u64, u: u64, l: u64, ctx: &Ctx) -> Option<TheoremDistance> {
    let pw = ctx.pw;
    let ps1 = ctx.ps1();
    if i == 0 && j == 0 && u == 0 && l == 0 {
        return done(1, "l4-a:unit");
    }
    if i == pw && j == pw && u == pw && l == pw {
        return done(0, "l4-a:zero");
    }
    if j == 0 && u == 0 && l == 0 && i > 0 {
        return done(2, "l4-a:d2a");
    }
    if l == 0 && j >= 1 && i <= ps1 {
        return done(2, "l4-a:d2b");
    }
    if j == 0 && l == 0 && u >= 1 && ps1 < i {
        return done(3, "l4-a:d3a");
    }
    if l == 0 && j >= 1 && u <= 2 * ps1 && ps1 < i && i <= 2 * ps1 {
        return done(3, "l4-a:d3b");
    }
    if l == 0 && j >= 1 && 2 * ps1 < i {
        return done(4, "l4-a:d4");
    }
    if ctx.win(i) && ctx.win(j) && ctx.win(u) && ctx.win(l) {
        let d = ctx
            .wterm(i, 1)
            .min(ctx.wterm(j, 2))
            .min(ctx.wterm(u, 3))
            .min(ctx.wterm(l, 4));
        return done(d, "l4-a:min");
    }
    if i == pw && ctx.win(j) && ctx.win(u) && ctx.win(l) {
        let d = ctx.wterm(j, 2).min(ctx.wterm(u, 3)).min(ctx.wterm(l, 4));
        return done(d, "l4-a:sat-i");
    }
    if i == pw && j == pw && ctx.win(u) && ctx.win(l) {
        // This row repeats the u window in both terms; kept as-is.
        let d = ctx.wterm(u, 3).min(ctx.wterm(u, 4));
        return done(d, "l4-a:sat-ij");
    }
    if i == pw && j == pw && u == pw && ctx.win(l) {
        return done(ctx.wterm(l, 4), "l4-a:sat-iju");
    }
    None
}

/// Table for l <= u <= j <= i. The minimum here carries no term for j and
/// no 3-multiplied term anywhere; kept as-is, the oracle adjudicates.
fn table_four_linear_b(i: u64, j: u64, u: u64, l: u64, ctx: &Ctx) -> Option<TheoremDistance> {
    let pw = ctx.pw;
    let ps1 = ctx.ps1();
    if i == 0 && j == 0 && u == 0 && l == 0 {
        return done(1, "l4-b:unit");
    }
    if i == pw && j == pw && u == pw && l == pw {
        return done(0, "l4-b:zero");
    }
    if u == 0 && l == 0 && (i > 0 || j > 0) {
        return done(2, "l4-b:d2a");
    }
    if l == 0 && u >= 1 && i <= ps1 {
        return done(2, "l4-b:d2b");
    }
    if l == 0 && u >= 1 && ps1 < i {
        return done(4, "l4-b:d4");
    }
    if ctx.win(i) && ctx.win(j) && ctx.win(u) && ctx.win(l) {
        let d = ctx.wterm(i, 1).min(ctx.wterm(u, 2)).min(ctx.wterm(l, 4));
        return done(d, "l4-b:min");
    }
    if i == pw && ctx.win(j) && ctx.win(u) && ctx.win(l) {
        return done(ctx.wterm(u, 2).min(ctx.wterm(l, 4)), "l4-b:sat-i");
    }
    if i == pw && j == pw && u == pw && ctx.win(l) {
        return done(ctx.wterm(l, 4), "l4-b:sat-iju");
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_examples() {
        assert_eq!(
            window_of(2, 5, 1).unwrap(),
            DistanceWindow::Window { delta: 0, eta: 1 }
        );
        assert_eq!(
            window_of(7, 3, 2).unwrap(),
            DistanceWindow::Window { delta: 1, eta: 0 }
        );
        assert_eq!(window_of(9, 3, 2).unwrap(), DistanceWindow::Saturated);
        assert_eq!(window_of(0, 3, 2).unwrap(), DistanceWindow::Zero);
        assert!(window_of(10, 3, 2).is_err());
    }

    #[test]
    fn windows_partition_exponent_range() {
        for p in [3u64, 5, 7] {
            for s in 1..=3u32 {
                let pw = p.pow(s);
                for t in 1..pw {
                    // window_of scans in order and returns the first hit;
                    // count memberships independently.
                    let mut hits = 0;
                    for delta in 0..s {
                        let outer = p.pow(s - delta);
                        let inner = p.pow(s - delta - 1);
                        for eta in 0..p - 1 {
                            let lo = pw - outer + eta * inner + 1;
                            let hi = pw - outer + (eta + 1) * inner;
                            if lo <= t && t <= hi {
                                hits += 1;
                            }
                        }
                    }
                    assert_eq!(hits, 1, "t={} p={} s={}", t, p, s);
                    assert!(matches!(
                        window_of(t, p, s).unwrap(),
                        DistanceWindow::Window { .. }
                    ));
                }
            }
        }
    }

    #[test]
    fn single_factor_term_examples() {
        assert_eq!(single_factor_term(3, 1, 3, 2).unwrap(), Some(2));
        assert_eq!(single_factor_term(1, 2, 5, 1).unwrap(), Some(4));
        assert_eq!(single_factor_term(9, 3, 3, 2).unwrap(), None);
        assert!(single_factor_term(1, 5, 3, 1).is_err());
    }

    #[test]
    fn sigma_one_specialization() {
        // At s = 1 a single windowed factor with exponent t gives t + 1.
        for p in [3u64, 5, 7] {
            for t in 1..p {
                assert_eq!(single_factor_term(t, 1, p, 1).unwrap(), Some(t + 1));
            }
        }
    }

    #[test]
    fn theorem_distance_known_rows() {
        // Four linear, role tuples over p = 5.
        let d = |e: &[u64]| theorem_distance(FamilyClass::FourLinear, e, 5, 1).unwrap();
        assert_eq!(d(&[2, 0, 0, 0]).d, 2);
        assert_eq!(d(&[2, 0, 1, 0]).d, 3);
        assert_eq!(d(&[1, 1, 0, 0]).d, 2);
        assert_eq!(d(&[0, 0, 0, 0]).d, 1);
        assert_eq!(d(&[5, 5, 5, 5]).d, 0);
        // Gamma family over p = 3.
        let g = |e: &[u64]| theorem_distance(FamilyClass::GammaQuadratics, e, 3, 1).unwrap();
        assert_eq!(g(&[1, 0]).d, 2);
        assert_eq!(g(&[0, 1]).d, 2);
        assert!(g(&[0, 1]).case.contains("(R)"));
    }

    #[test]
    fn arity_and_range_checks() {
        assert_eq!(
            theorem_distance(FamilyClass::FourLinear, &[1, 2], 5, 1).unwrap_err(),
            Error::ExponentArity {
                expected: 4,
                got: 2
            }
        );
        assert_eq!(
            theorem_distance(FamilyClass::GammaQuadratics, &[4, 0], 3, 1).unwrap_err(),
            Error::ExponentOutOfRange { got: 4, max: 3 }
        );
    }

    #[test]
    fn quadratic_saturated_gap_falls_back() {
        // Both linear exponents zero, quadratic saturated: no explicit row.
        let r = theorem_distance(FamilyClass::TwoLinearOneQuadratic, &[0, 0, 3], 3, 1).unwrap();
        assert_eq!(r.d, 2);
        assert!(r.case.contains("gap-min"), "case = {}", r.case);
        assert!(label_is_anticipated(&r.case));
    }

    #[test]
    fn monotone_in_each_exponent_at_desk_scale() {
        // Non-decreasing in each coordinate while below saturation.
        for (family, p) in [
            (FamilyClass::TwoLinearOneQuadratic, 3u64),
            (FamilyClass::GammaQuadratics, 3),
            (FamilyClass::PairedQuadratics, 5),
        ] {
            let arity = family.arity();
            let pw = p;
            let mut tuple = vec![0u64; arity];
            'lattice: loop {
                let here = theorem_distance(family, &tuple, p, 1).unwrap().d;
                for axis in 0..arity {
                    if tuple[axis] + 1 < pw {
                        let mut up = tuple.clone();
                        up[axis] += 1;
                        let there = theorem_distance(family, &up, p, 1).unwrap().d;
                        assert!(
                            there >= here,
                            "family {:?} tuple {:?} axis {}",
                            family,
                            tuple,
                            axis
                        );
                    }
                }
                let mut k = 0;
                loop {
                    if k == arity {
                        break 'lattice;
                    }
                    tuple[k] += 1;
                    if tuple[k] <= pw {
                        break;
                    }
                    tuple[k] = 0;
                    k += 1;
                }
            }
        }
    }
}
