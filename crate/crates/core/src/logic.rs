//! Three-valued truth values, the Kleene implication connective, and the
//! bracketing trees of the chain `p1 ⇒ p2 ⇒ … ⇒ pn`.

use std::fmt;

use crate::{Error, Result};

/// A strong Kleene truth value, encoded `False = 0`, `True = 1`,
/// `Unknown = 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TruthValue {
    False = 0,
    True = 1,
    Unknown = 2,
}

impl TruthValue {
    /// All three values, in digit order.
    pub const ALL: [TruthValue; 3] = [TruthValue::False, TruthValue::True, TruthValue::Unknown];

    /// The digit used in rendered tables: 0, 1 or 2.
    pub fn digit(self) -> u8 {
        self as u8
    }

    pub fn from_digit(d: u8) -> Option<TruthValue> {
        match d {
            0 => Some(TruthValue::False),
            1 => Some(TruthValue::True),
            2 => Some(TruthValue::Unknown),
            _ => None,
        }
    }

    /// Kleene negation: swaps `False` and `True`, fixes `Unknown`.
    pub fn negate(self) -> TruthValue {
        match self {
            TruthValue::False => TruthValue::True,
            TruthValue::True => TruthValue::False,
            TruthValue::Unknown => TruthValue::Unknown,
        }
    }

    /// Strong Kleene implication, `self ⇒ consequent`:
    ///
    /// ```text
    ///  ⇒ | 1  0  2
    ///  --+---------
    ///  1 | 1  0  2
    ///  0 | 1  1  1
    ///  2 | 1  2  2
    /// ```
    ///
    /// Equivalently `max(¬a, b)` under the order `False < Unknown < True`.
    pub fn implies(self, consequent: TruthValue) -> TruthValue {
        match (self, consequent) {
            (TruthValue::False, _) => TruthValue::True,
            (TruthValue::True, b) => b,
            (TruthValue::Unknown, TruthValue::True) => TruthValue::True,
            (TruthValue::Unknown, _) => TruthValue::Unknown,
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.digit())
    }
}

/// One truth-table row: the value assigned to each of `p1..pn`.
///
/// Leaf indices are 1-based (`p1` is variable 1); storage is 0-indexed, so
/// `values()[i]` is the value of `p_(i+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment(Vec<TruthValue>);

impl Assignment {
    pub fn new(values: Vec<TruthValue>) -> Assignment {
        Assignment(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[TruthValue] {
        &self.0
    }

    /// Value of `p_var` (1-based).
    pub fn value_of(&self, var: usize) -> Option<TruthValue> {
        if var == 0 {
            return None;
        }
        self.0.get(var - 1).copied()
    }

    /// All 3^n assignments, in lexicographic order: `p1` is the most
    /// significant position and digits increase `0 < 1 < 2`.
    pub fn enumerate(n: usize) -> Assignments {
        Assignments {
            next: Some(vec![TruthValue::False; n]),
        }
    }

    /// The row rendered as digits, e.g. `102` for ν = (1, 0, 2).
    pub fn digits(&self) -> String {
        self.0
            .iter()
            .map(|v| char::from(b'0' + v.digit()))
            .collect()
    }
}

/// Iterator over all assignments of a fixed length. See
/// [`Assignment::enumerate`].
pub struct Assignments {
    next: Option<Vec<TruthValue>>,
}

impl Iterator for Assignments {
    type Item = Assignment;

    fn next(&mut self) -> Option<Assignment> {
        let current = self.next.take()?;
        let mut digits = current.clone();
        let mut i = digits.len();
        // Odometer step: bump the least significant position that is not 2.
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            match digits[i] {
                TruthValue::False => {
                    digits[i] = TruthValue::True;
                    self.next = Some(digits);
                    break;
                }
                TruthValue::True => {
                    digits[i] = TruthValue::Unknown;
                    self.next = Some(digits);
                    break;
                }
                TruthValue::Unknown => digits[i] = TruthValue::False,
            }
        }
        Some(Assignment(current))
    }
}

/// A full binary tree whose leaves, read left to right, are `p1..pn`: one
/// way of fully parenthesizing the implication chain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BracketTree {
    /// 1-based variable position.
    Leaf(usize),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn node(left: BracketTree, right: BracketTree) -> BracketTree {
        BracketTree::Node(Box::new(left), Box::new(right))
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            BracketTree::Leaf(_) => 1,
            BracketTree::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Evaluates the bracketing under `assignment`.
    pub fn eval(&self, assignment: &Assignment) -> Result<TruthValue> {
        if assignment.len() != self.leaf_count() {
            return Err(Error::Input(format!(
                "assignment has {} values but the tree has {} leaves",
                assignment.len(),
                self.leaf_count()
            )));
        }
        Ok(self.eval_values(assignment.values()))
    }

    /// Evaluation against a raw value slice; the caller has already checked
    /// the length.
    pub(crate) fn eval_values(&self, values: &[TruthValue]) -> TruthValue {
        match self {
            BracketTree::Leaf(i) => values[i - 1],
            BracketTree::Node(l, r) => l.eval_values(values).implies(r.eval_values(values)),
        }
    }

    /// Fully parenthesized rendering with `>` for the implication, e.g.
    /// `(p1>(p2>p3))`. Each tree has exactly one rendering.
    pub fn render(&self) -> String {
        match self {
            BracketTree::Leaf(i) => format!("p{i}"),
            BracketTree::Node(l, r) => format!("({}>{})", l.render(), r.render()),
        }
    }
}

/// All bracketings with `n` leaves, each exactly once, in a deterministic
/// order: by the number of leaves in the left subtree (ascending), then
/// lexicographically by the (left, right) sub-enumerations. The count is
/// the Catalan number `(1/n)·binom(2n-2, n-1)`.
pub fn enumerate_trees(n: usize) -> Result<Vec<BracketTree>> {
    if n == 0 {
        return Err(Error::Input(
            "a bracketing needs at least one variable".into(),
        ));
    }
    Ok(trees_over(1, n))
}

fn trees_over(first_leaf: usize, len: usize) -> Vec<BracketTree> {
    if len == 1 {
        return vec![BracketTree::Leaf(first_leaf)];
    }
    let mut out = Vec::new();
    for left_len in 1..len {
        let lefts = trees_over(first_leaf, left_len);
        let rights = trees_over(first_leaf + left_len, len - left_len);
        for l in &lefts {
            for r in &rights {
                out.push(BracketTree::node(l.clone(), r.clone()));
            }
        }
    }
    out
}
