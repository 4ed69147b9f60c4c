//! Growth of the row-count sequences: every one of them behaves like
//! `c * 3 * 12^(n-1) / sqrt(pi n^3)` for a constant `c` specific to the
//! sequence, and this module evaluates those constants, the estimates they
//! give, and the ratio exact/estimate measuring convergence.

use num::BigUint;

use crate::oracle::CaseLabel;
use crate::recurrence::{sequences, subsequences_of, SequenceTable, Sequences};
use crate::{Error, Result};

/// Everything with a growth constant: the four row totals and the nine
/// root-split cases, with the F case folded into `F` (they share every
/// value from n = 2 on).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    G,
    T,
    F,
    U,
    T1,
    T2,
    T3,
    T4,
    T5,
    U1,
    U2,
    U3,
}

impl Label {
    pub const ALL: [Label; 12] = [
        Label::G,
        Label::T,
        Label::F,
        Label::U,
        Label::T1,
        Label::T2,
        Label::T3,
        Label::T4,
        Label::T5,
        Label::U1,
        Label::U2,
        Label::U3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Label::G => "g",
            Label::T => "t",
            Label::F => "f",
            Label::U => "u",
            Label::T1 => "t1",
            Label::T2 => "t2",
            Label::T3 => "t3",
            Label::T4 => "t4",
            Label::T5 => "t5",
            Label::U1 => "u1",
            Label::U2 => "u2",
            Label::U3 => "u3",
        }
    }

    pub fn parse(name: &str) -> Option<Label> {
        Label::ALL.iter().copied().find(|l| l.name() == name)
    }

    /// The convolution case behind this label, if it is one of the nine.
    pub fn case(self) -> Option<CaseLabel> {
        match self {
            Label::T1 => Some(CaseLabel::T1),
            Label::T2 => Some(CaseLabel::T2),
            Label::T3 => Some(CaseLabel::T3),
            Label::T4 => Some(CaseLabel::T4),
            Label::T5 => Some(CaseLabel::T5),
            Label::U1 => Some(CaseLabel::U1),
            Label::U2 => Some(CaseLabel::U2),
            Label::U3 => Some(CaseLabel::U3),
            _ => None,
        }
    }

    /// Smallest n at which the sequence is positive; the convolution-backed
    /// cases are zero at n = 1.
    pub fn min_n(self) -> usize {
        if self.case().is_some() {
            2
        } else {
            1
        }
    }
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A growth constant with both its exact form (for display) and its f64
/// value.
#[derive(Clone, Copy, Debug)]
pub struct AsymptoticConstant {
    pub label: Label,
    pub exact_form: &'static str,
    pub value: f64,
}

/// The constant `c` such that the sequence is asymptotic to
/// `c * 3 * 12^(n-1) / sqrt(pi n^3)`.
pub fn constant(label: Label) -> AsymptoticConstant {
    let s7 = 7f64.sqrt();
    let (exact_form, value) = match label {
        Label::G => ("1", 1.0),
        Label::T => ("(7 + 2*sqrt(7))/21", (7.0 + 2.0 * s7) / 21.0),
        Label::F | Label::T2 => ("(7 - 2*sqrt(7))/21", (7.0 - 2.0 * s7) / 21.0),
        Label::U => ("1/3", 1.0 / 3.0),
        Label::T1 => ("(14 + sqrt(7))/63", (14.0 + s7) / 63.0),
        Label::T3 => ("(11*sqrt(7) - 28)/63", (11.0 * s7 - 28.0) / 63.0),
        Label::T4 | Label::U2 => ("(5*sqrt(7) - 7)/126", (5.0 * s7 - 7.0) / 126.0),
        Label::T5 | Label::U1 => ("(35 - 5*sqrt(7))/126", (35.0 - 5.0 * s7) / 126.0),
        Label::U3 => ("1/9", 1.0 / 9.0),
    };
    AsymptoticConstant {
        label,
        exact_form,
        value,
    }
}

/// Natural log of the estimate `c * 3 * 12^(n-1) / sqrt(pi n^3)`; usable
/// far past the point where the estimate itself overflows f64.
pub fn ln_estimate(label: Label, n: usize) -> f64 {
    let nf = n as f64;
    constant(label).value.ln() + 3f64.ln() + (nf - 1.0) * 12f64.ln()
        - 0.5 * (std::f64::consts::PI * nf * nf * nf).ln()
}

pub fn log10_estimate(label: Label, n: usize) -> f64 {
    ln_estimate(label, n) / std::f64::consts::LN_10
}

/// The estimate itself; overflows to infinity once it passes ~1.8e308
/// (around n = 286), so large-n work goes through [`ln_estimate`].
pub fn estimate(label: Label, n: usize) -> f64 {
    ln_estimate(label, n).exp()
}

/// Natural log of a positive big integer, from its top 64 bits; relative
/// error is at the f64 epsilon level regardless of magnitude.
pub fn ln_big(value: &BigUint) -> Result<f64> {
    let bits = value.bits();
    if bits == 0 {
        return Err(Error::Domain("log of zero".into()));
    }
    if bits <= 64 {
        let v: u64 = value.try_into().expect("fits in 64 bits");
        Ok((v as f64).ln())
    } else {
        let shift = bits - 64;
        let top: u64 = (value >> shift).try_into().expect("top 64 bits");
        Ok((top as f64).ln() + shift as f64 * std::f64::consts::LN_2)
    }
}

/// One convergence measurement: the exact value at n against the
/// asymptotic estimate. Logs are base 10 for display; the ratio is
/// exact/estimate and tends to 1 from above.
#[derive(Clone, Debug)]
pub struct ConvergenceReport {
    pub label: Label,
    pub n: usize,
    pub exact: BigUint,
    pub exact_log10: f64,
    pub estimate_log10: f64,
    pub ratio: f64,
}

pub(crate) fn table_for<'a>(
    label: Label,
    seqs: &'a Sequences,
    cases: Option<&'a crate::recurrence::CaseSequences>,
) -> &'a SequenceTable {
    match label.case() {
        None => match label {
            Label::G => &seqs.g,
            Label::T => &seqs.t,
            Label::F => &seqs.f,
            Label::U => &seqs.u,
            _ => unreachable!(),
        },
        Some(case) => cases.expect("case tables built for case labels").get(case),
    }
}

/// Convergence measurements for one sequence at each requested n. Builds
/// the sequence tables once, at the largest n.
pub fn convergence_report(label: Label, ns: &[usize]) -> Result<Vec<ConvergenceReport>> {
    for &n in ns {
        if n < label.min_n() {
            return Err(Error::Input(format!(
                "sequence {label} starts at n = {}, got n = {n}",
                label.min_n()
            )));
        }
    }
    let Some(&max_n) = ns.iter().max() else {
        return Ok(Vec::new());
    };
    let seqs = sequences(max_n)?;
    let cases = if label.case().is_some() {
        Some(subsequences_of(&seqs)?)
    } else {
        None
    };
    let table = table_for(label, &seqs, cases.as_ref());
    ns.iter()
        .map(|&n| {
            let exact = table.value(n).clone();
            let ln_exact = ln_big(&exact)?;
            let ln_est = ln_estimate(label, n);
            Ok(ConvergenceReport {
                label,
                n,
                exact,
                exact_log10: ln_exact / std::f64::consts::LN_10,
                estimate_log10: ln_est / std::f64::consts::LN_10,
                ratio: (ln_exact - ln_est).exp(),
            })
        })
        .collect()
}

/// One sequence whose growth constant drops when the third value enters:
/// the two-valued analogue's constant, the three-valued constant, and the
/// percentage decrease between them.
#[derive(Clone, Copy, Debug)]
pub struct TwoValuedRow {
    pub label: Label,
    pub two_valued_form: &'static str,
    pub two_valued: f64,
    pub three_valued: f64,
    pub percent_decrease: f64,
}

/// The three cases with a published two-valued counterpart. In two-valued
/// logic the same root-split argument runs over tables of size 2^n C_n and
/// the listed constants play the same role.
pub fn two_valued_comparison() -> Vec<TwoValuedRow> {
    let s3 = 3f64.sqrt();
    let rows = [
        (Label::T1, "1/2", 0.5),
        (Label::T2, "(3 - sqrt(3))/6", (3.0 - s3) / 6.0),
        (Label::T3, "(2*sqrt(3) - 3)/6", (2.0 * s3 - 3.0) / 6.0),
    ];
    rows.into_iter()
        .map(|(label, two_valued_form, two_valued)| {
            let three_valued = constant(label).value;
            TwoValuedRow {
                label,
                two_valued_form,
                two_valued,
                three_valued,
                percent_decrease: 100.0 * (1.0 - three_valued / two_valued),
            }
        })
        .collect()
}
