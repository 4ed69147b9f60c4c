//! Brute-force ground truth: enumerate every (bracketing, assignment) pair,
//! evaluate it, and tally rows by outcome and by root-split case.
//!
//! Two routes are provided. The naive route walks every one of the
//! `3^n · C_n` rows and evaluates the formula; it is the independent oracle
//! and is capped at [`MAX_NAIVE_N`]. The subtree-counting route computes,
//! for each bracketing, the triple (#rows evaluating to 0, to 1, to 2)
//! bottom-up; the children of a node range over disjoint variables, so
//! their count vectors combine multiplicatively through the implication
//! table. That makes the per-tree cost O(n) instead of O(3^n).

use num::{BigUint, One, Zero};
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::logic::{enumerate_trees, Assignment, BracketTree, TruthValue};
use crate::{Error, Result};

/// Largest `n` accepted by the row-by-row counters. At n = 9 the naive
/// route already performs 28,146,690 evaluations.
pub const MAX_NAIVE_N: usize = 9;

/// Largest `n` accepted by the subtree-counting variants, bounded by the
/// memory needed to hold all C_n bracketings at once (C_12 = 208,012).
pub const MAX_MEMOIZED_N: usize = 12;

/// Row totals over all truth tables for one `n`, split by outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowCounts {
    /// Rows evaluating to 1.
    pub t: BigUint,
    /// Rows evaluating to 0.
    pub f: BigUint,
    /// Rows evaluating to 2.
    pub u: BigUint,
    /// All rows; always `t + f + u`.
    pub g: BigUint,
}

impl RowCounts {
    fn from_value_counts(counts: [BigUint; 3]) -> RowCounts {
        let [f, t, u] = counts;
        let g = &t + &f + &u;
        RowCounts { t, f, u, g }
    }
}

/// Which of the three base sequences counts a subtree outcome: `T` for
/// value 1, `F` for value 0, `U` for value 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseSeq {
    T,
    F,
    U,
}

impl BaseSeq {
    pub fn of(value: TruthValue) -> BaseSeq {
        match value {
            TruthValue::True => BaseSeq::T,
            TruthValue::False => BaseSeq::F,
            TruthValue::Unknown => BaseSeq::U,
        }
    }
}

/// The nine root-split cases, keyed by the pair (value of the left subtree,
/// value of the right subtree) at the formula's outermost implication.
///
/// The `T*` cases produce rows with value 1, `F` the rows with value 0, and
/// the `U*` cases the rows with value 2; together they partition all nine
/// value pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    /// (1, 1)
    T1,
    /// (0, 1)
    T2,
    /// (0, 0)
    T3,
    /// (0, 2)
    T4,
    /// (2, 1)
    T5,
    /// (1, 0)
    F,
    /// (1, 2)
    U1,
    /// (2, 0)
    U2,
    /// (2, 2)
    U3,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 9] = [
        CaseLabel::T1,
        CaseLabel::T2,
        CaseLabel::T3,
        CaseLabel::T4,
        CaseLabel::T5,
        CaseLabel::F,
        CaseLabel::U1,
        CaseLabel::U2,
        CaseLabel::U3,
    ];

    /// The (left value, right value) pair defining the case.
    pub fn pair(self) -> (TruthValue, TruthValue) {
        use TruthValue::{False, True, Unknown};
        match self {
            CaseLabel::T1 => (True, True),
            CaseLabel::T2 => (False, True),
            CaseLabel::T3 => (False, False),
            CaseLabel::T4 => (False, Unknown),
            CaseLabel::T5 => (Unknown, True),
            CaseLabel::F => (True, False),
            CaseLabel::U1 => (True, Unknown),
            CaseLabel::U2 => (Unknown, False),
            CaseLabel::U3 => (Unknown, Unknown),
        }
    }

    pub fn from_pair(left: TruthValue, right: TruthValue) -> CaseLabel {
        use TruthValue::{False, True, Unknown};
        match (left, right) {
            (True, True) => CaseLabel::T1,
            (False, True) => CaseLabel::T2,
            (False, False) => CaseLabel::T3,
            (False, Unknown) => CaseLabel::T4,
            (Unknown, True) => CaseLabel::T5,
            (True, False) => CaseLabel::F,
            (True, Unknown) => CaseLabel::U1,
            (Unknown, False) => CaseLabel::U2,
            (Unknown, Unknown) => CaseLabel::U3,
        }
    }

    /// Value of a whole row falling in this case.
    pub fn result(self) -> TruthValue {
        let (l, r) = self.pair();
        l.implies(r)
    }

    /// Which base sequences count the left and right subtree outcomes; the
    /// case's sequence is the convolution of the two.
    pub fn factors(self) -> (BaseSeq, BaseSeq) {
        let (l, r) = self.pair();
        (BaseSeq::of(l), BaseSeq::of(r))
    }

    /// Short name used by the CLI and exports.
    pub fn name(self) -> &'static str {
        match self {
            CaseLabel::T1 => "t1",
            CaseLabel::T2 => "t2",
            CaseLabel::T3 => "t3",
            CaseLabel::T4 => "t4",
            CaseLabel::T5 => "t5",
            CaseLabel::F => "f",
            CaseLabel::U1 => "u1",
            CaseLabel::U2 => "u2",
            CaseLabel::U3 => "u3",
        }
    }

    fn index(self) -> usize {
        CaseLabel::ALL.iter().position(|&c| c == self).unwrap()
    }
}

impl std::fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-case row totals for one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseCounts {
    counts: [BigUint; 9],
}

impl CaseCounts {
    fn zero() -> CaseCounts {
        CaseCounts {
            counts: std::array::from_fn(|_| BigUint::zero()),
        }
    }

    pub fn get(&self, label: CaseLabel) -> &BigUint {
        &self.counts[label.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (CaseLabel, &BigUint)> {
        CaseLabel::ALL
            .iter()
            .map(move |&label| (label, self.get(label)))
    }

    /// Sum of the five `T*` cases; equals the `t` row count for n ≥ 2.
    pub fn total_true(&self) -> BigUint {
        [
            CaseLabel::T1,
            CaseLabel::T2,
            CaseLabel::T3,
            CaseLabel::T4,
            CaseLabel::T5,
        ]
        .iter()
        .map(|&c| self.get(c))
        .sum()
    }

    /// Sum of the three `U*` cases; equals the `u` row count for n ≥ 2.
    pub fn total_unknown(&self) -> BigUint {
        [CaseLabel::U1, CaseLabel::U2, CaseLabel::U3]
            .iter()
            .map(|&c| self.get(c))
            .sum()
    }

    /// Sum over all nine cases; equals the `g` row count for n ≥ 2.
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    fn merge(mut self, other: CaseCounts) -> CaseCounts {
        for (mine, theirs) in self.counts.iter_mut().zip(other.counts) {
            *mine += theirs;
        }
        self
    }
}

fn check_n(n: usize, limit: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::Input("n must be at least 1".into()));
    }
    if n > limit {
        return Err(Error::Capacity(format!(
            "{what} is limited to n <= {limit}, got n = {n}"
        )));
    }
    Ok(())
}

/// Folds a per-tree tally over all bracketings; parallel when the
/// `parallel` feature is enabled. Summation is commutative, so the
/// partition order does not affect the result.
#[cfg(feature = "parallel")]
fn aggregate<R, F>(
    trees: &[BracketTree],
    per_tree: F,
    identity: fn() -> R,
    combine: fn(R, R) -> R,
) -> R
where
    R: Send,
    F: Fn(&BracketTree) -> R + Sync + Send,
{
    trees.par_iter().map(per_tree).reduce(identity, combine)
}

#[cfg(not(feature = "parallel"))]
fn aggregate<R, F>(
    trees: &[BracketTree],
    per_tree: F,
    identity: fn() -> R,
    combine: fn(R, R) -> R,
) -> R
where
    R: Send,
    F: Fn(&BracketTree) -> R + Sync + Send,
{
    trees.iter().map(per_tree).fold(identity(), combine)
}

/// Counts rows by outcome over all `C_n` bracketings × `3^n` assignments by
/// evaluating every single row.
pub fn brute_force_counts(n: usize) -> Result<RowCounts> {
    check_n(n, MAX_NAIVE_N, "the naive oracle")?;
    let trees = enumerate_trees(n)?;
    let assignments: Vec<Assignment> = Assignment::enumerate(n).collect();
    let tallies = aggregate(
        &trees,
        |tree| {
            let mut tally = [0u64; 3];
            for a in &assignments {
                tally[tree.eval_values(a.values()) as usize] += 1;
            }
            tally
        },
        || [0u64; 3],
        |mut acc, t| {
            for (a, b) in acc.iter_mut().zip(t) {
                *a += b;
            }
            acc
        },
    );
    Ok(RowCounts::from_value_counts(tallies.map(BigUint::from)))
}

/// Counts rows by root-split case by evaluating the two subtrees of every
/// bracketing's root against every assignment.
pub fn brute_force_case_counts(n: usize) -> Result<CaseCounts> {
    check_n(n, MAX_NAIVE_N, "the naive oracle")?;
    if n < 2 {
        return Err(Error::Input(
            "root-split cases need n >= 2 (a single leaf has no root implication)".into(),
        ));
    }
    let trees = enumerate_trees(n)?;
    let assignments: Vec<Assignment> = Assignment::enumerate(n).collect();
    let tallies = aggregate(
        &trees,
        |tree| {
            let BracketTree::Node(left, right) = tree else {
                unreachable!("n >= 2 bracketings have an internal root");
            };
            let mut tally = [0u64; 9];
            for a in &assignments {
                let l = left.eval_values(a.values());
                let r = right.eval_values(a.values());
                tally[CaseLabel::from_pair(l, r).index()] += 1;
            }
            tally
        },
        || [0u64; 9],
        |mut acc, t| {
            for (a, b) in acc.iter_mut().zip(t) {
                *a += b;
            }
            acc
        },
    );
    let mut counts = CaseCounts::zero();
    for (slot, tally) in counts.counts.iter_mut().zip(tallies) {
        *slot = BigUint::from(tally);
    }
    Ok(counts)
}

/// For one bracketing: how many of its 3^n rows evaluate to 0, 1, 2
/// (indexed by digit). Children cover disjoint variables, so counts
/// combine multiplicatively through the implication table.
fn subtree_value_counts(tree: &BracketTree) -> [BigUint; 3] {
    match tree {
        BracketTree::Leaf(_) => std::array::from_fn(|_| BigUint::one()),
        BracketTree::Node(l, r) => {
            let lc = subtree_value_counts(l);
            let rc = subtree_value_counts(r);
            combine_value_counts(&lc, &rc)
        }
    }
}

fn combine_value_counts(lc: &[BigUint; 3], rc: &[BigUint; 3]) -> [BigUint; 3] {
    let mut out: [BigUint; 3] = std::array::from_fn(|_| BigUint::zero());
    for a in TruthValue::ALL {
        for b in TruthValue::ALL {
            out[a.implies(b) as usize] += &lc[a as usize] * &rc[b as usize];
        }
    }
    out
}

/// Same totals as [`brute_force_counts`], via per-tree value-count vectors.
pub fn memoized_counts(n: usize) -> Result<RowCounts> {
    check_n(n, MAX_MEMOIZED_N, "the subtree-counting oracle")?;
    let trees = enumerate_trees(n)?;
    let totals = aggregate(
        &trees,
        subtree_value_counts,
        || std::array::from_fn(|_| BigUint::zero()),
        |mut acc, t| {
            for (a, b) in acc.iter_mut().zip(t) {
                *a += b;
            }
            acc
        },
    );
    Ok(RowCounts::from_value_counts(totals))
}

/// Same totals as [`brute_force_case_counts`], via per-subtree value-count
/// vectors: a root with children counts `lc`, `rc` contributes
/// `lc[a] · rc[b]` rows to the case `(a, b)`.
pub fn memoized_case_counts(n: usize) -> Result<CaseCounts> {
    check_n(n, MAX_MEMOIZED_N, "the subtree-counting oracle")?;
    if n < 2 {
        return Err(Error::Input(
            "root-split cases need n >= 2 (a single leaf has no root implication)".into(),
        ));
    }
    let trees = enumerate_trees(n)?;
    Ok(aggregate(
        &trees,
        |tree| {
            let BracketTree::Node(left, right) = tree else {
                unreachable!("n >= 2 bracketings have an internal root");
            };
            let lc = subtree_value_counts(left);
            let rc = subtree_value_counts(right);
            let mut counts = CaseCounts::zero();
            for a in TruthValue::ALL {
                for b in TruthValue::ALL {
                    counts.counts[CaseLabel::from_pair(a, b).index()] +=
                        &lc[a as usize] * &rc[b as usize];
                }
            }
            counts
        },
        CaseCounts::zero,
        CaseCounts::merge,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn assert_counts(c: &RowCounts, t: u64, f: u64, u: u64, g: u64) {
        assert_eq!(c.t, big(t));
        assert_eq!(c.f, big(f));
        assert_eq!(c.u, big(u));
        assert_eq!(c.g, big(g));
    }

    #[test]
    fn single_variable_counts() {
        // One bracketing, three rows, one of each value.
        assert_counts(&brute_force_counts(1).unwrap(), 1, 1, 1, 3);
        assert_counts(&memoized_counts(1).unwrap(), 1, 1, 1, 3);
    }

    #[test]
    fn two_variables_match_the_connective_table() {
        // The 3x3 implication table has five 1s, one 0 and three 2s.
        assert_counts(&brute_force_counts(2).unwrap(), 5, 1, 3, 9);
        assert_counts(&memoized_counts(2).unwrap(), 5, 1, 3, 9);
    }

    #[test]
    fn four_variables() {
        assert_counts(&brute_force_counts(4).unwrap(), 229, 41, 135, 405);
        assert_counts(&memoized_counts(4).unwrap(), 229, 41, 135, 405);
    }

    #[test]
    fn naive_and_memoized_agree_up_to_five() {
        for n in 1..=5 {
            assert_eq!(
                brute_force_counts(n).unwrap(),
                memoized_counts(n).unwrap(),
                "n={n}"
            );
        }
        for n in 2..=5 {
            assert_eq!(
                brute_force_case_counts(n).unwrap(),
                memoized_case_counts(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn case_counts_at_two_are_all_one() {
        let counts = brute_force_case_counts(2).unwrap();
        for (label, value) in counts.iter() {
            assert_eq!(*value, big(1), "{label}");
        }
    }

    #[test]
    fn selected_case_values() {
        assert_eq!(
            *brute_force_case_counts(3).unwrap().get(CaseLabel::T1),
            big(10)
        );
        assert_eq!(
            *brute_force_case_counts(4).unwrap().get(CaseLabel::U3),
            big(45)
        );
    }

    #[test]
    fn false_case_equals_the_f_sequence_shifted() {
        // f_n = 1, 1, 6, 41, 330, 2882, ...; the F case matches it for n >= 2.
        let f = [1u64, 1, 6, 41, 330, 2882];
        for n in 2..=6 {
            let counts = memoized_case_counts(n).unwrap();
            assert_eq!(*counts.get(CaseLabel::F), big(f[n - 1]), "n={n}");
        }
    }

    #[test]
    fn opposite_order_convolutions_agree() {
        for n in 2..=6 {
            let counts = memoized_case_counts(n).unwrap();
            assert_eq!(
                counts.get(CaseLabel::T5),
                counts.get(CaseLabel::U1),
                "n={n}"
            );
            assert_eq!(
                counts.get(CaseLabel::T4),
                counts.get(CaseLabel::U2),
                "n={n}"
            );
        }
    }

    #[test]
    fn case_totals_split_the_row_counts() {
        for n in 2..=6 {
            let rows = memoized_counts(n).unwrap();
            let cases = memoized_case_counts(n).unwrap();
            assert_eq!(cases.total_true(), rows.t, "n={n}");
            assert_eq!(cases.total_unknown(), rows.u, "n={n}");
            assert_eq!(*cases.get(CaseLabel::F), rows.f, "n={n}");
            assert_eq!(cases.total(), rows.g, "n={n}");
        }
    }

    #[test]
    fn nine_cases_partition_all_value_pairs() {
        let mut seen = std::collections::HashSet::new();
        for label in CaseLabel::ALL {
            assert!(seen.insert(label.pair()));
            assert_eq!(CaseLabel::from_pair(label.pair().0, label.pair().1), label);
        }
        assert_eq!(seen.len(), 9);
        use TruthValue::{False, True, Unknown};
        assert_eq!(CaseLabel::T4.result(), True);
        assert_eq!(CaseLabel::F.result(), False);
        assert_eq!(CaseLabel::U2.result(), Unknown);
    }

    #[test]
    fn input_and_capacity_errors() {
        assert!(matches!(brute_force_counts(0), Err(Error::Input(_))));
        assert!(matches!(
            brute_force_counts(MAX_NAIVE_N + 1),
            Err(Error::Capacity(_))
        ));
        assert!(matches!(brute_force_case_counts(1), Err(Error::Input(_))));
        assert!(matches!(
            memoized_counts(MAX_MEMOIZED_N + 1),
            Err(Error::Capacity(_))
        ));
        assert!(matches!(memoized_case_counts(1), Err(Error::Input(_))));
    }
}
