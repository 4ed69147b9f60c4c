//! Integer sequences counting truth-table rows: the bracketing numbers and
//! the row totals g, t, f, u, each computable two ways (recurrence and
//! closed form) so the routes can be checked against each other, plus the
//! convolution machinery for the nine root-split case sequences.
//!
//! Indexing is 1-based throughout: `C_1 = C_2 = 1, C_3 = 2, ...`, i.e.
//! `C_n = binom(2n-2, n-1) / n`, the number of bracketings of a chain of
//! `n` variables.

use num::{BigUint, One, Zero};

use crate::oracle::{BaseSeq, CaseLabel};
use crate::{Error, Result};

/// A 1-indexed table of sequence values for n = 1 ..= horizon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    name: &'static str,
    values: Vec<BigUint>,
}

impl SequenceTable {
    pub fn from_values(name: &'static str, values: Vec<BigUint>) -> SequenceTable {
        SequenceTable { name, values }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    /// Largest n stored; the table covers 1 ..= horizon.
    pub fn horizon(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, n: usize) -> Option<&BigUint> {
        if n == 0 {
            return None;
        }
        self.values.get(n - 1)
    }

    /// Value at `n`; panics outside 1 ..= horizon.
    pub fn value(&self, n: usize) -> &BigUint {
        self.get(n).unwrap_or_else(|| {
            panic!(
                "sequence {}: index {} outside 1..={}",
                self.name,
                n,
                self.horizon()
            )
        })
    }

    /// Pairs (n, value) in increasing n.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.values.iter().enumerate().map(|(i, v)| (i + 1, v))
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

fn check_horizon(horizon: usize) -> Result<()> {
    if horizon == 0 {
        Err(Error::Input("horizon must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Exact binomial coefficient, multiplicative form.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut result = BigUint::one();
    // After multiplying i consecutive values the product is divisible by i!.
    for i in 1..=k {
        result = result * BigUint::from(n - k + i) / BigUint::from(i);
    }
    result
}

/// Number of bracketings of a chain of n variables, directly from the
/// binomial definition.
pub fn catalan(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Input("bracketing counts start at n = 1".into()));
    }
    Ok(binomial(2 * n - 2, n - 1) / BigUint::from(n))
}

/// Bracketing counts for n = 1 ..= horizon via the incremental product
/// `C_{n+1} = C_n * 2(2n-1) / (n+1)`, independent of [`catalan`].
pub fn catalan_seq(horizon: usize) -> Result<SequenceTable> {
    check_horizon(horizon)?;
    let mut values = Vec::with_capacity(horizon);
    values.push(BigUint::one());
    for n in 1..horizon {
        let next = values[n - 1].clone() * BigUint::from(2 * (2 * n - 1)) / BigUint::from(n + 1);
        values.push(next);
    }
    Ok(SequenceTable::from_values("catalan", values))
}

fn pow3(exp: usize) -> BigUint {
    BigUint::from(3u32).pow(exp as u32)
}

/// Total rows over all tables: `g_n = 3^n C_n`.
pub fn g_closed(n: usize) -> Result<BigUint> {
    Ok(catalan(n)? * pow3(n))
}

/// Rows evaluating to 2: `u_n = 3^(n-1) C_n`.
pub fn u_closed(n: usize) -> Result<BigUint> {
    Ok(catalan(n)? * pow3(n - 1))
}

/// Closed-form g table, as a running product alongside the bracketing
/// counts.
pub fn g_closed_seq(horizon: usize) -> Result<SequenceTable> {
    let catalan = catalan_seq(horizon)?;
    let mut power = pow3(1);
    let mut values = Vec::with_capacity(horizon);
    for (_, c) in catalan.iter() {
        values.push(c * &power);
        power *= 3u32;
    }
    Ok(SequenceTable::from_values("g", values))
}

/// Closed-form u table.
pub fn u_closed_seq(horizon: usize) -> Result<SequenceTable> {
    let catalan = catalan_seq(horizon)?;
    let mut power = BigUint::one();
    let mut values = Vec::with_capacity(horizon);
    for (_, c) in catalan.iter() {
        values.push(c * &power);
        power *= 3u32;
    }
    Ok(SequenceTable::from_values("u", values))
}

/// g by its recurrence: `g_1 = 3`, `g_n = sum_{i=1}^{n-1} g_i g_{n-i}`.
/// Splitting the root of every bracketing yields the self-convolution.
pub fn g_seq(horizon: usize) -> Result<SequenceTable> {
    check_horizon(horizon)?;
    let mut values: Vec<BigUint> = Vec::with_capacity(horizon);
    values.push(BigUint::from(3u32));
    for n in 2..=horizon {
        let sum = (1..n).map(|i| &values[i - 1] * &values[n - i - 1]).sum();
        values.push(sum);
    }
    Ok(SequenceTable::from_values("g", values))
}

/// u by its recurrence: `u_1 = 1`, `u_n = sum_{i=1}^{n-1} u_i g_{n-i}`.
/// A row is 2 exactly when the left part is 2 and the right part is not 1,
/// and for fixed left value the right part ranges over whole tables.
pub fn u_seq(horizon: usize) -> Result<SequenceTable> {
    check_horizon(horizon)?;
    let g = g_seq(horizon)?;
    let mut values: Vec<BigUint> = Vec::with_capacity(horizon);
    values.push(BigUint::one());
    for n in 2..=horizon {
        let sum = (1..n).map(|i| &values[i - 1] * g.value(n - i)).sum();
        values.push(sum);
    }
    Ok(SequenceTable::from_values("u", values))
}

/// f by its recurrence: `f_1 = 1`,
/// `f_n = sum_{i=1}^{n-1} f_i (2 * 3^(n-i-1) C_{n-i} - f_{n-i})`.
///
/// The subtrahend never exceeds the bracket: `2 * 3^(k-1) C_k` counts rows
/// of k-variable tables twice except the rows evaluating to 1, and f_k is
/// at most the count of non-1 rows.
pub fn f_seq(horizon: usize) -> Result<SequenceTable> {
    check_horizon(horizon)?;
    let doubled_u = {
        let u = u_closed_seq(horizon)?;
        u.values().iter().map(|v| v * 2u32).collect::<Vec<_>>()
    };
    let mut values: Vec<BigUint> = Vec::with_capacity(horizon);
    values.push(BigUint::one());
    for n in 2..=horizon {
        let sum = (1..n)
            .map(|i| &values[i - 1] * (&doubled_u[n - i - 1] - &values[n - i - 1]))
            .sum();
        values.push(sum);
    }
    Ok(SequenceTable::from_values("f", values))
}

/// t as the residue `t_n = g_n - f_n - u_n`, with every term from its
/// recurrence route.
pub fn t_seq(horizon: usize) -> Result<SequenceTable> {
    let g = g_seq(horizon)?;
    let f = f_seq(horizon)?;
    let u = u_seq(horizon)?;
    let values = g
        .values()
        .iter()
        .zip(f.values().iter().zip(u.values()))
        .map(|(g, (f, u))| g - f - u)
        .collect();
    Ok(SequenceTable::from_values("t", values))
}

/// The four row-count sequences over a common horizon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequences {
    pub catalan: SequenceTable,
    pub g: SequenceTable,
    pub t: SequenceTable,
    pub f: SequenceTable,
    pub u: SequenceTable,
}

impl Sequences {
    pub fn horizon(&self) -> usize {
        self.g.horizon()
    }

    pub fn base(&self, seq: BaseSeq) -> &SequenceTable {
        match seq {
            BaseSeq::T => &self.t,
            BaseSeq::F => &self.f,
            BaseSeq::U => &self.u,
        }
    }
}

/// Production tables: g and u from closed forms, f from its recurrence
/// (the only route it has), t by subtraction. The recurrence routes for g
/// and u stay available separately for cross-checking.
pub fn sequences(horizon: usize) -> Result<Sequences> {
    let catalan = catalan_seq(horizon)?;
    let g = g_closed_seq(horizon)?;
    let u = u_closed_seq(horizon)?;
    let f = f_seq(horizon)?;
    let t = {
        let values = g
            .values()
            .iter()
            .zip(f.values().iter().zip(u.values()))
            .map(|(g, (f, u))| g - f - u)
            .collect();
        SequenceTable::from_values("t", values)
    };
    Ok(Sequences {
        catalan,
        g,
        t,
        f,
        u,
    })
}

/// Cauchy product shifted to 1-based indexing: `c_1 = 0`,
/// `c_n = sum_{i=1}^{n-1} a_i b_{n-i}`. A case sequence is the convolution
/// of the sequences counting its two subtree outcomes.
pub fn convolve(name: &'static str, a: &SequenceTable, b: &SequenceTable) -> Result<SequenceTable> {
    if a.horizon() != b.horizon() {
        return Err(Error::Input(format!(
            "convolution needs equal horizons, got {} ({}) and {} ({})",
            a.horizon(),
            a.name(),
            b.horizon(),
            b.name()
        )));
    }
    let horizon = a.horizon();
    let mut values = Vec::with_capacity(horizon);
    values.push(BigUint::zero());
    for n in 2..=horizon {
        let sum = (1..n).map(|i| a.value(i) * b.value(n - i)).sum();
        values.push(sum);
    }
    Ok(SequenceTable::from_values(name, values))
}

/// The nine case sequences, in [`CaseLabel::ALL`] order. Entries at n = 1
/// are 0 (a single leaf has no root split).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseSequences {
    tables: [SequenceTable; 9],
}

impl CaseSequences {
    pub fn get(&self, label: CaseLabel) -> &SequenceTable {
        &self.tables[CaseLabel::ALL.iter().position(|&c| c == label).unwrap()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (CaseLabel, &SequenceTable)> {
        CaseLabel::ALL
            .iter()
            .map(move |&label| (label, self.get(label)))
    }

    pub fn horizon(&self) -> usize {
        self.tables[0].horizon()
    }

    /// Replaces one table, for fault-injection in tests of the checker.
    pub fn replace(&mut self, label: CaseLabel, table: SequenceTable) {
        let idx = CaseLabel::ALL.iter().position(|&c| c == label).unwrap();
        self.tables[idx] = table;
    }
}

/// Builds every case sequence by convolving the base tables selected by
/// the case's subtree values.
pub fn subsequences_of(seqs: &Sequences) -> Result<CaseSequences> {
    let mut tables = Vec::with_capacity(9);
    for label in CaseLabel::ALL {
        let (left, right) = label.factors();
        tables.push(convolve(label.name(), seqs.base(left), seqs.base(right))?);
    }
    Ok(CaseSequences {
        tables: tables.try_into().expect("nine labels"),
    })
}

/// Case sequences over a fresh set of base tables.
pub fn subsequences(horizon: usize) -> Result<CaseSequences> {
    subsequences_of(&sequences(horizon)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn assert_prefix(table: &SequenceTable, expected: &[u64]) {
        for (n, want) in expected.iter().enumerate().map(|(i, v)| (i + 1, v)) {
            assert_eq!(table.value(n), &big(*want), "{} at n={}", table.name(), n);
        }
    }

    #[test]
    fn bracketing_counts() {
        let c = catalan_seq(12).unwrap();
        assert_prefix(
            &c,
            &[1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786],
        );
    }

    #[test]
    fn binomial_and_incremental_catalan_agree() {
        let c = catalan_seq(40).unwrap();
        for n in 1..=40 {
            assert_eq!(catalan(n).unwrap(), *c.value(n), "n={n}");
        }
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(5, 0), big(1));
        assert_eq!(binomial(5, 5), big(1));
        assert_eq!(binomial(5, 6), big(0));
        assert_eq!(binomial(10, 4), big(210));
    }

    #[test]
    fn g_matches_its_table() {
        let g = g_seq(9).unwrap();
        assert_prefix(&g, &[3, 9, 54, 405, 3402, 30618, 288684, 2814669, 28146690]);
    }

    #[test]
    fn u_matches_its_table() {
        let u = u_seq(9).unwrap();
        assert_prefix(&u, &[1, 3, 18, 135, 1134, 10206, 96228, 938223, 9382230]);
    }

    #[test]
    fn f_matches_its_table() {
        let f = f_seq(9).unwrap();
        assert_prefix(&f, &[1, 1, 6, 41, 330, 2882, 26604, 255313, 2521986]);
    }

    #[test]
    fn t_matches_its_table() {
        let t = t_seq(9).unwrap();
        assert_prefix(&t, &[1, 5, 30, 229, 1938, 17530, 165852, 1621133, 16242474]);
    }

    #[test]
    fn closed_forms_agree_with_recurrences() {
        let horizon = 60;
        assert_eq!(g_seq(horizon).unwrap(), g_closed_seq(horizon).unwrap());
        assert_eq!(u_seq(horizon).unwrap(), u_closed_seq(horizon).unwrap());
        assert_eq!(g_closed(17).unwrap(), *g_seq(17).unwrap().value(17));
        assert_eq!(u_closed(17).unwrap(), *u_seq(17).unwrap().value(17));
    }

    #[test]
    fn eleventh_u_value() {
        // 3^10 * 16796; easy to mistype, so pinned explicitly.
        assert_eq!(u_closed(11).unwrap(), big(991_787_004));
        assert_eq!(pow3(10) * big(16_796), big(991_787_004));
    }

    #[test]
    fn unknown_rows_average_false_and_true_complement() {
        // 2 u_n = f_n + t_n, n >= 1.
        let s = sequences(50).unwrap();
        for n in 1..=50 {
            assert_eq!(s.u.value(n) * 2u32, s.f.value(n) + s.t.value(n), "n={n}");
        }
    }

    #[test]
    fn production_tables_match_recurrence_routes() {
        let s = sequences(40).unwrap();
        assert_eq!(s.g, g_seq(40).unwrap());
        assert_eq!(s.u, u_seq(40).unwrap());
        assert_eq!(s.t, t_seq(40).unwrap());
    }

    #[test]
    fn convolution_basics() {
        let s = sequences(8).unwrap();
        let tt = convolve("t1", &s.t, &s.t).unwrap();
        assert_eq!(*tt.value(1), big(0));
        assert_eq!(*tt.value(2), big(1));
        assert_eq!(*tt.value(3), big(10));
        let mismatch = convolve("bad", &s.t, &t_seq(5).unwrap());
        assert!(matches!(mismatch, Err(Error::Input(_))));
    }

    #[test]
    fn case_tables_reproduce_small_counts() {
        let cases = subsequences(8).unwrap();
        for (_, table) in cases.iter() {
            assert_eq!(*table.value(2), big(1));
        }
        assert_eq!(*cases.get(CaseLabel::T1).value(3), big(10));
        assert_eq!(*cases.get(CaseLabel::U3).value(4), big(45));
    }

    #[test]
    fn false_case_reproduces_f_from_two_onward() {
        let s = sequences(12).unwrap();
        let cases = subsequences_of(&s).unwrap();
        let f_case = cases.get(CaseLabel::F);
        assert_eq!(*f_case.value(1), big(0));
        for n in 2..=12 {
            assert_eq!(f_case.value(n), s.f.value(n), "n={n}");
        }
    }

    #[test]
    fn cases_partition_all_rows() {
        let s = sequences(20).unwrap();
        let cases = subsequences_of(&s).unwrap();
        for n in 2..=20 {
            let total: BigUint = cases.iter().map(|(_, table)| table.value(n)).sum();
            assert_eq!(total, *s.g.value(n), "n={n}");
            // With the mirror-pair symmetry folded in:
            let folded = cases.get(CaseLabel::T1).value(n)
                + cases.get(CaseLabel::T2).value(n)
                + cases.get(CaseLabel::T3).value(n)
                + (cases.get(CaseLabel::T4).value(n) + cases.get(CaseLabel::T5).value(n)) * 2u32
                + cases.get(CaseLabel::U3).value(n)
                + cases.get(CaseLabel::F).value(n);
            assert_eq!(folded, *s.g.value(n), "n={n}");
        }
    }

    #[test]
    fn zero_horizon_is_rejected() {
        assert!(matches!(catalan_seq(0), Err(Error::Input(_))));
        assert!(matches!(sequences(0), Err(Error::Input(_))));
        assert!(matches!(catalan(0), Err(Error::Input(_))));
    }
}
