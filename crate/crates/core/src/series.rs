//! Truncated power series over exact rationals, enough to expand the
//! closed-form generating functions of the row-count sequences and read
//! integer coefficients back out.
//!
//! A series of order N stores the coefficients of x^0 .. x^N; every
//! operation truncates at that order. Square roots use Newton's iteration
//! `s <- (s + a/s)/2` with precision doubling, so the starting constant
//! term must be an exact rational square.

use num::{BigInt, BigUint, Signed, Zero};

use crate::{Error, Result};

pub use num::BigRational as Rational;

/// Shorthand for small exact rationals. Panics if `den` is zero.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact square root of a nonnegative rational; errors when the argument
/// is negative or not a square of a rational.
pub fn rational_sqrt(value: &Rational) -> Result<Rational> {
    if value.is_negative() {
        return Err(Error::Domain("square root of a negative rational".into()));
    }
    let root_of = |part: &BigInt| -> Result<BigInt> {
        let root = part.sqrt();
        if &(&root * &root) == part {
            Ok(root)
        } else {
            Err(Error::Domain(format!("{part} is not a perfect square")))
        }
    };
    Ok(Rational::new(
        root_of(value.numer())?,
        root_of(value.denom())?,
    ))
}

/// Coefficients of x^0 ..= x^order; all arithmetic stays at this order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> PowerSeries {
        PowerSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// Series of a polynomial given by integer coefficients in increasing
    /// degree, truncated or zero-padded to the requested order.
    pub fn polynomial(coefficients: &[i64], order: usize) -> PowerSeries {
        let mut series = PowerSeries::zero(order);
        for (k, &c) in coefficients.iter().enumerate().take(order + 1) {
            series.coeffs[k] = Rational::from_integer(BigInt::from(c));
        }
        series
    }

    pub fn constant(value: i64, order: usize) -> PowerSeries {
        PowerSeries::polynomial(&[value], order)
    }

    pub fn x(order: usize) -> PowerSeries {
        PowerSeries::polynomial(&[0, 1], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^k; errors beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Result<&Rational> {
        self.coeffs.get(k).ok_or_else(|| {
            Error::Input(format!(
                "coefficient {k} requested from a series of order {}",
                self.order()
            ))
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn check_same_order(&self, other: &PowerSeries) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::Input(format!(
                "series orders differ: {} vs {}",
                self.order(),
                other.order()
            )))
        }
    }

    pub fn add(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.check_same_order(other)?;
        Ok(PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.check_same_order(other)?;
        Ok(PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.check_same_order(other)?;
        Ok(PowerSeries {
            coeffs: mul_truncated(&self.coeffs, &other.coeffs, self.coeffs.len()),
        })
    }

    pub fn scale(&self, factor: &Rational) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplicative inverse; needs a nonzero constant term. Computed by
    /// the direct recursion y_k = -(sum_{i=1..k} c_i y_{k-i}) / c_0.
    fn inverse(&self) -> Result<PowerSeries> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Domain(
                "cannot invert a series with zero constant term".into(),
            ));
        }
        let mut inv = Vec::with_capacity(self.coeffs.len());
        inv.push(c0.recip());
        for k in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &inv[k - i];
            }
            inv.push(-(acc / c0));
        }
        Ok(PowerSeries { coeffs: inv })
    }

    /// Square root by Newton's iteration. The constant term must be a
    /// positive rational square; each step doubles the number of correct
    /// coefficients, so ceil(log2(order + 1)) steps suffice.
    pub fn sqrt(&self) -> Result<PowerSeries> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Domain(
                "series square root needs a nonzero constant term".into(),
            ));
        }
        let mut approx = vec![rational_sqrt(c0)?];
        let full = self.coeffs.len();
        while approx.len() < full {
            let len = (2 * approx.len()).min(full);
            approx.resize(len, Rational::zero());
            let truncated = PowerSeries {
                coeffs: self.coeffs[..len].to_vec(),
            };
            let current = PowerSeries { coeffs: approx };
            let quotient = truncated.mul(&current.inverse()?)?;
            approx = current.add(&quotient)?.scale(&rational(1, 2)).coeffs;
        }
        Ok(PowerSeries { coeffs: approx })
    }
}

fn mul_truncated(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Reads a coefficient expected to be a nonnegative integer, as when a
/// generating function enumerates something.
pub fn integer_coefficient(series: &PowerSeries, k: usize) -> Result<BigUint> {
    let c = series.coeff(k)?;
    if !c.is_integer() {
        return Err(Error::Domain(format!(
            "coefficient of x^{k} is not an integer: {c}"
        )));
    }
    c.to_integer()
        .to_biguint()
        .ok_or_else(|| Error::Domain(format!("coefficient of x^{k} is negative")))
}

fn sqrt_one_minus_12x(order: usize) -> Result<PowerSeries> {
    PowerSeries::polynomial(&[1, -12], order).sqrt()
}

/// Generating function of all rows: `G = (1 - sqrt(1 - 12x)) / 2`.
pub fn build_g(order: usize) -> Result<PowerSeries> {
    let root = sqrt_one_minus_12x(order)?;
    Ok(PowerSeries::constant(1, order)
        .sub(&root)?
        .scale(&rational(1, 2)))
}

/// Generating function of rows evaluating to 2: `U = (1 - sqrt(1 - 12x)) / 6`.
pub fn build_u(order: usize) -> Result<PowerSeries> {
    let root = sqrt_one_minus_12x(order)?;
    Ok(PowerSeries::constant(1, order)
        .sub(&root)?
        .scale(&rational(1, 6)))
}

fn inner_root(order: usize, outer_root: &PowerSeries) -> Result<PowerSeries> {
    // 5 + 24x + 4*sqrt(1 - 12x), the discriminant of the quadratic
    // equation F satisfies; its constant term is 9.
    PowerSeries::polynomial(&[5, 24], order)
        .add(&outer_root.scale(&rational(4, 1)))?
        .sqrt()
}

/// Generating function of rows evaluating to 0:
/// `F = (-2 - sqrt(1 - 12x) + sqrt(5 + 24x + 4 sqrt(1 - 12x))) / 6`.
pub fn build_f(order: usize) -> Result<PowerSeries> {
    let outer = sqrt_one_minus_12x(order)?;
    let inner = inner_root(order, &outer)?;
    Ok(PowerSeries::constant(-2, order)
        .sub(&outer)?
        .add(&inner)?
        .scale(&rational(1, 6)))
}

/// Generating function of rows evaluating to 1:
/// `T = (4 - sqrt(1 - 12x) - sqrt(5 + 24x + 4 sqrt(1 - 12x))) / 6`.
pub fn build_t(order: usize) -> Result<PowerSeries> {
    let outer = sqrt_one_minus_12x(order)?;
    let inner = inner_root(order, &outer)?;
    Ok(PowerSeries::constant(4, order)
        .sub(&outer)?
        .sub(&inner)?
        .scale(&rational(1, 6)))
}

/// Generating function of one root-split case: the product of the base
/// series selected by the values of its two subtrees.
pub fn build_sub_series(label: crate::oracle::CaseLabel, order: usize) -> Result<PowerSeries> {
    use crate::oracle::BaseSeq;
    let build = |seq: BaseSeq| match seq {
        BaseSeq::T => build_t(order),
        BaseSeq::F => build_f(order),
        BaseSeq::U => build_u(order),
    };
    let (left, right) = label.factors();
    build(left)?.mul(&build(right)?)
}
