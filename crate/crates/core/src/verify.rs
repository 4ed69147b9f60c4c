//! Cross-validation of the independent computation routes: the row-scan
//! oracle, the subtree-counting oracle, the recurrences, the closed forms,
//! the generating-function expansions, and the asymptotic estimates must
//! all tell the same story. Each check compares two routes or tests an
//! identity and reports pass/fail with a one-line detail.

use crate::asymptotics::{self, Label};
use crate::oracle::{self, CaseLabel, MAX_MEMOIZED_N, MAX_NAIVE_N};
use crate::recurrence::{
    g_closed_seq, g_seq, sequences, subsequences_of, t_seq, u_closed_seq, u_seq, CaseSequences,
    Sequences,
};
use crate::series::{self, PowerSeries};
use crate::{Error, Result};

/// How far each family of checks reaches.
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Oracle checks enumerate all tables for n up to this (the row-scan
    /// route clamps itself at its own cap).
    pub exhaustive_n: usize,
    /// Identity and series checks run over 1 ..= this horizon.
    pub identity_horizon: usize,
    /// The n at which every exact/estimate ratio must sit within 1%.
    pub asymptotics_n: usize,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            exhaustive_n: 8,
            identity_horizon: 50,
            asymptotics_n: 500,
        }
    }
}

impl VerifyOptions {
    fn validate(&self) -> Result<()> {
        if self.exhaustive_n == 0 {
            return Err(Error::Input("exhaustive range must start at 1".into()));
        }
        if self.exhaustive_n > MAX_MEMOIZED_N {
            return Err(Error::Capacity(format!(
                "oracle checks are limited to n <= {MAX_MEMOIZED_N}, got {}",
                self.exhaustive_n
            )));
        }
        if self.identity_horizon < 2 {
            return Err(Error::Input("identity horizon must be at least 2".into()));
        }
        // Case sequences only become positive at n = 2.
        if self.asymptotics_n < 2 {
            return Err(Error::Input("asymptotics n must be at least 2".into()));
        }
        Ok(())
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &'static str, detail: impl Into<String>) -> CheckResult {
        CheckResult {
            name,
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> CheckResult {
        CheckResult {
            name,
            passed: false,
            detail: detail.into(),
        }
    }
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.passed)
}

/// Runs every check. A returned error means a check could not be set up
/// (bad options, capacity); verification verdicts live in the results.
pub fn run(options: &VerifyOptions) -> Result<Vec<CheckResult>> {
    options.validate()?;
    let identities = {
        let seqs = sequences(options.identity_horizon)?;
        let cases = subsequences_of(&seqs)?;
        identity_checks(&seqs, &cases)
    };
    Ok(vec![
        naive_oracle_rows(options.exhaustive_n)?,
        subtree_oracle_rows(options.exhaustive_n)?,
        oracle_routes_agree(options.exhaustive_n)?,
        oracle_case_rows(options.exhaustive_n)?,
        closed_forms(options.identity_horizon)?,
        identities,
        series_coefficients(options.identity_horizon)?,
        case_series(options.identity_horizon)?,
        functional_equations(options.identity_horizon)?,
        growth_constants(),
        convergence(options.asymptotics_n)?,
        two_valued_drop(),
    ])
}

fn naive_oracle_rows(limit: usize) -> Result<CheckResult> {
    const NAME: &str = "naive-oracle-rows";
    let limit = limit.min(MAX_NAIVE_N);
    let seqs = sequences(limit)?;
    for n in 1..=limit {
        let counts = oracle::brute_force_counts(n)?;
        let expected = [
            ("t", &counts.t, seqs.t.value(n)),
            ("f", &counts.f, seqs.f.value(n)),
            ("u", &counts.u, seqs.u.value(n)),
            ("g", &counts.g, seqs.g.value(n)),
        ];
        for (seq, got, want) in expected {
            if got != want {
                return Ok(CheckResult::fail(
                    NAME,
                    format!("{seq} at n = {n}: row scan gives {got}, recurrence gives {want}"),
                ));
            }
        }
    }
    Ok(CheckResult::pass(
        NAME,
        format!("row-scan totals match the recurrences for n = 1..={limit}"),
    ))
}

fn subtree_oracle_rows(limit: usize) -> Result<CheckResult> {
    const NAME: &str = "subtree-oracle-rows";
    let limit = limit.min(MAX_MEMOIZED_N);
    let seqs = sequences(limit)?;
    for n in 1..=limit {
        let counts = oracle::memoized_counts(n)?;
        let expected = [
            ("t", &counts.t, seqs.t.value(n)),
            ("f", &counts.f, seqs.f.value(n)),
            ("u", &counts.u, seqs.u.value(n)),
            ("g", &counts.g, seqs.g.value(n)),
        ];
        for (seq, got, want) in expected {
            if got != want {
                return Ok(CheckResult::fail(
                    NAME,
                    format!(
                        "{seq} at n = {n}: subtree counting gives {got}, recurrence gives {want}"
                    ),
                ));
            }
        }
    }
    Ok(CheckResult::pass(
        NAME,
        format!("subtree-counting totals match the recurrences for n = 1..={limit}"),
    ))
}

fn oracle_routes_agree(limit: usize) -> Result<CheckResult> {
    const NAME: &str = "oracle-routes-agree";
    // The row scan is the slow route; cross-checking the two oracles
    // against each other on a shared small range is enough, since each is
    // separately checked against the recurrences above.
    let limit = limit.min(5);
    for n in 1..=limit {
        if oracle::brute_force_counts(n)? != oracle::memoized_counts(n)? {
            return Ok(CheckResult::fail(
                NAME,
                format!("row totals diverge between the two oracles at n = {n}"),
            ));
        }
    }
    for n in 2..=limit {
        if oracle::brute_force_case_counts(n)? != oracle::memoized_case_counts(n)? {
            return Ok(CheckResult::fail(
                NAME,
                format!("case totals diverge between the two oracles at n = {n}"),
            ));
        }
    }
    Ok(CheckResult::pass(
        NAME,
        format!("row-scan and subtree-counting oracles agree for n = 1..={limit}"),
    ))
}

fn oracle_case_rows(limit: usize) -> Result<CheckResult> {
    const NAME: &str = "oracle-case-rows";
    let limit = limit.min(MAX_MEMOIZED_N);
    let seqs = sequences(limit)?;
    let cases = subsequences_of(&seqs)?;
    for n in 2..=limit {
        let counts = oracle::memoized_case_counts(n)?;
        for (label, got) in counts.iter() {
            let want = cases.get(label).value(n);
            if got != want {
                return Ok(CheckResult::fail(
                    NAME,
                    format!(
                        "case {label} at n = {n}: oracle gives {got}, convolution gives {want}"
                    ),
                ));
            }
        }
    }
    Ok(CheckResult::pass(
        NAME,
        format!("oracle case totals match the convolutions for n = 2..={limit}"),
    ))
}

fn closed_forms(horizon: usize) -> Result<CheckResult> {
    const NAME: &str = "closed-forms";
    let g_rec = g_seq(horizon)?;
    let g_closed = g_closed_seq(horizon)?;
    let u_rec = u_seq(horizon)?;
    let u_closed = u_closed_seq(horizon)?;
    for n in 1..=horizon {
        if g_rec.value(n) != g_closed.value(n) {
            return Ok(CheckResult::fail(
                NAME,
                format!(
                    "g at n = {n}: recurrence gives {}, closed form gives {}",
                    g_rec.value(n),
                    g_closed.value(n)
                ),
            ));
        }
        if u_rec.value(n) != u_closed.value(n) {
            return Ok(CheckResult::fail(
                NAME,
                format!(
                    "u at n = {n}: recurrence gives {}, closed form gives {}",
                    u_rec.value(n),
                    u_closed.value(n)
                ),
            ));
        }
    }
    // t has no closed form of its own; its recurrence route must still
    // reproduce the production subtraction.
    let t_rec = t_seq(horizon)?;
    let production = sequences(horizon)?;
    if let Some(n) = (1..=horizon).find(|&n| t_rec.value(n) != production.t.value(n)) {
        return Ok(CheckResult::fail(
            NAME,
            format!("t at n = {n}: recurrence route disagrees with g - f - u"),
        ));
    }
    Ok(CheckResult::pass(
        NAME,
        format!("closed forms match the recurrences for n = 1..={horizon}"),
    ))
}

/// The counting identities over prebuilt tables. Taking the tables as
/// arguments keeps this checkable: corrupt one entry and the check must
/// fail, naming the identity and the first bad n.
pub fn identity_checks(seqs: &Sequences, cases: &CaseSequences) -> CheckResult {
    const NAME: &str = "row-identities";
    let horizon = seqs.horizon();
    if cases.horizon() != horizon {
        return CheckResult::fail(
            NAME,
            format!("table horizons differ: {} vs {}", horizon, cases.horizon()),
        );
    }
    for n in 1..=horizon {
        if seqs.u.value(n) * 2u32 != seqs.f.value(n) + seqs.t.value(n) {
            return CheckResult::fail(NAME, format!("2u = f + t fails first at n = {n}"));
        }
        if seqs.t.value(n) + seqs.f.value(n) + seqs.u.value(n) != *seqs.g.value(n) {
            return CheckResult::fail(NAME, format!("t + f + u = g fails first at n = {n}"));
        }
    }
    let case = |label: CaseLabel, n: usize| cases.get(label).value(n);
    for n in 2..=horizon {
        let t_parts = [
            CaseLabel::T1,
            CaseLabel::T2,
            CaseLabel::T3,
            CaseLabel::T4,
            CaseLabel::T5,
        ]
        .iter()
        .map(|&l| case(l, n))
        .sum::<num::BigUint>();
        if t_parts != *seqs.t.value(n) {
            return CheckResult::fail(NAME, format!("sum of T cases = t fails first at n = {n}"));
        }
        let u_parts = [CaseLabel::U1, CaseLabel::U2, CaseLabel::U3]
            .iter()
            .map(|&l| case(l, n))
            .sum::<num::BigUint>();
        if u_parts != *seqs.u.value(n) {
            return CheckResult::fail(NAME, format!("sum of U cases = u fails first at n = {n}"));
        }
        if case(CaseLabel::F, n) != seqs.f.value(n) {
            return CheckResult::fail(NAME, format!("F case = f fails first at n = {n}"));
        }
        if case(CaseLabel::T4, n) != case(CaseLabel::U2, n) {
            return CheckResult::fail(NAME, format!("t4 = u2 fails first at n = {n}"));
        }
        if case(CaseLabel::T5, n) != case(CaseLabel::U1, n) {
            return CheckResult::fail(NAME, format!("t5 = u1 fails first at n = {n}"));
        }
        let folded = case(CaseLabel::T1, n)
            + case(CaseLabel::T2, n)
            + case(CaseLabel::T3, n)
            + (case(CaseLabel::T4, n) + case(CaseLabel::T5, n)) * 2u32
            + case(CaseLabel::U3, n)
            + case(CaseLabel::F, n);
        if folded != *seqs.g.value(n) {
            return CheckResult::fail(
                NAME,
                format!("folded case partition of g fails first at n = {n}"),
            );
        }
    }
    CheckResult::pass(
        NAME,
        format!("all counting identities hold for n = 1..={horizon}"),
    )
}

fn series_coefficients(horizon: usize) -> Result<CheckResult> {
    const NAME: &str = "series-coefficients";
    let seqs = sequences(horizon)?;
    let built = [
        ("g", series::build_g(horizon)?, &seqs.g),
        ("t", series::build_t(horizon)?, &seqs.t),
        ("f", series::build_f(horizon)?, &seqs.f),
        ("u", series::build_u(horizon)?, &seqs.u),
    ];
    for (name, built_series, table) in &built {
        for n in 1..=horizon {
            let coeff = series::integer_coefficient(built_series, n)?;
            if coeff != *table.value(n) {
                return Ok(CheckResult::fail(
                    NAME,
                    format!(
                        "{name} at n = {n}: series gives {coeff}, recurrence gives {}",
                        table.value(n)
                    ),
                ));
            }
        }
    }
    Ok(CheckResult::pass(
        NAME,
        format!("generating function coefficients match the recurrences for n = 1..={horizon}"),
    ))
}

fn case_series(horizon: usize) -> Result<CheckResult> {
    const NAME: &str = "case-series";
    let cases = subsequences_of(&sequences(horizon)?)?;
    for label in CaseLabel::ALL {
        let built = series::build_sub_series(label, horizon)?;
        let table = cases.get(label);
        for n in 1..=horizon {
            let coeff = series::integer_coefficient(&built, n)?;
            if coeff != *table.value(n) {
                return Ok(CheckResult::fail(
                    NAME,
                    format!(
                        "case {label} at n = {n}: series gives {coeff}, convolution gives {}",
                        table.value(n)
                    ),
                ));
            }
        }
    }
    Ok(CheckResult::pass(
        NAME,
        format!("case series coefficients match the convolutions for n = 1..={horizon}"),
    ))
}

fn functional_equations(horizon: usize) -> Result<CheckResult> {
    const NAME: &str = "functional-equations";
    let order = horizon;
    let root = PowerSeries::polynomial(&[1, -12], order).sqrt()?;
    if root.mul(&root)? != PowerSeries::polynomial(&[1, -12], order) {
        return Ok(CheckResult::fail(
            NAME,
            "square root certificate fails: root^2 != 1 - 12x",
        ));
    }
    let g = series::build_g(order)?;
    let t = series::build_t(order)?;
    let f = series::build_f(order)?;
    let u = series::build_u(order)?;
    let x = PowerSeries::x(order);
    let three_x = x.scale(&series::rational(3, 1));
    if g != three_x.add(&g.mul(&g)?)? {
        return Ok(CheckResult::fail(NAME, "G = 3x + G^2 fails"));
    }
    if u != x.add(&u.mul(&g)?)? {
        return Ok(CheckResult::fail(NAME, "U = x + UG fails"));
    }
    let rhs = x
        .add(&f.mul(&u)?.scale(&series::rational(2, 1)))?
        .sub(&f.mul(&f)?)?;
    if f != rhs {
        return Ok(CheckResult::fail(NAME, "F = x + 2FU - F^2 fails"));
    }
    if g != t.add(&f)?.add(&u)? {
        return Ok(CheckResult::fail(NAME, "T + F + U = G fails"));
    }
    Ok(CheckResult::pass(
        NAME,
        format!("functional equations hold through order {order}"),
    ))
}

fn growth_constants() -> CheckResult {
    const NAME: &str = "growth-constants";
    let c = |l: Label| asymptotics::constant(l).value;
    let tol = 1e-12;
    let t_parts = c(Label::T1) + c(Label::T2) + c(Label::T3) + c(Label::T4) + c(Label::T5);
    let u_parts = c(Label::U1) + c(Label::U2) + c(Label::U3);
    let checks = [
        (
            "T case constants sum to the t constant",
            (t_parts - c(Label::T)).abs() < tol,
        ),
        (
            "U case constants sum to the u constant",
            (u_parts - c(Label::U)).abs() < tol,
        ),
        (
            "t + f constants sum to 2/3",
            (c(Label::T) + c(Label::F) - 2.0 / 3.0).abs() < tol,
        ),
        (
            "all constants sum to 1",
            (t_parts + u_parts + c(Label::F) - 1.0).abs() < tol,
        ),
        ("t2 shares the f constant", c(Label::T2) == c(Label::F)),
        ("u2 shares the t4 constant", c(Label::U2) == c(Label::T4)),
        ("u1 shares the t5 constant", c(Label::U1) == c(Label::T5)),
    ];
    for (what, ok) in checks {
        if !ok {
            return CheckResult::fail(NAME, format!("{what}: violated"));
        }
    }
    CheckResult::pass(NAME, "growth constant sum and mirror identities hold")
}

fn convergence(n: usize) -> Result<CheckResult> {
    const NAME: &str = "convergence";
    let tolerance = 0.01;
    let seqs = sequences(n)?;
    let cases = subsequences_of(&seqs)?;
    for label in Label::ALL {
        let table = asymptotics::table_for(label, &seqs, Some(&cases));
        let exact = table.value(n);
        let ratio = (asymptotics::ln_big(exact)? - asymptotics::ln_estimate(label, n)).exp();
        if (ratio - 1.0).abs() > tolerance {
            return Ok(CheckResult::fail(
                NAME,
                format!("{label} at n = {n}: exact/estimate = {ratio:.6} strays past 1%"),
            ));
        }
    }
    Ok(CheckResult::pass(
        NAME,
        format!("all twelve exact/estimate ratios sit within 1% at n = {n}"),
    ))
}

fn two_valued_drop() -> CheckResult {
    const NAME: &str = "two-valued-drop";
    // Published drops, rounded to one decimal; recomputation must land
    // within half a unit of the last printed digit.
    let published = [(Label::T1, 47.2), (Label::T2, 61.5), (Label::T3, 77.4)];
    let rows = asymptotics::two_valued_comparison();
    for (row, (label, expected)) in rows.iter().zip(published) {
        if row.label != label {
            return CheckResult::fail(NAME, format!("unexpected row order: {}", row.label));
        }
        if (row.percent_decrease - expected).abs() > 0.05 {
            return CheckResult::fail(
                NAME,
                format!(
                    "{label}: computed drop {:.4}% vs published {expected}%",
                    row.percent_decrease
                ),
            );
        }
    }
    CheckResult::pass(NAME, "constant drops match the published percentages")
}
