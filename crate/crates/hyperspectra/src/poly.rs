//! Dense univariate polynomials over `Q`: exact arithmetic, gcd, square-free
//! decomposition, Newton interpolation with an oversample consistency check,
//! and numeric evaluation at complex points.

use std::collections::BTreeSet;
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rat, rat_to_f64};

/// Polynomial with exact rational coefficients, stored low degree first.
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `x^d`.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); d + 1];
        coeffs[d] = BigRational::one();
        RationalPoly { coeffs }
    }

    /// Coefficients low degree first; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    /// Convenience for tests and examples: integer coefficients, low first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| crate::rational::rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        RationalPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    /// Panics on a zero divisor (caller bug).
    pub fn divmod(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.degree().unwrap();
        if self.degree().map_or(true, |d| d < dd) {
            return (Self::zero(), self.clone());
        }
        let lead_inv = BigRational::one() / div.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let f = &rem[i] * &lead_inv;
            rem[i] = BigRational::zero();
            for (j, c) in div.coeffs.iter().enumerate().take(dd) {
                let delta = c * &f;
                rem[i - dd + j] -= delta;
            }
            quot[i - dd] = f;
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder (caller bug —
    /// used where divisibility is guaranteed, e.g. inside Yun's algorithm).
    pub fn div_exact(&self, div: &Self) -> Self {
        let (q, r) = self.divmod(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(i.into()))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Normalize to leading coefficient 1; returns the unit pulled out.
    /// The zero polynomial stays zero with unit 1.
    pub fn monic(&self) -> (Self, BigRational) {
        if self.is_zero() {
            return (Self::zero(), BigRational::one());
        }
        let lead = self.leading_coeff();
        (self.scale(&(BigRational::one() / &lead)), lead)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Numeric evaluation by Horner's rule; coefficients are converted with
    /// the overflow-safe rational-to-float path.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(rat_to_f64(c), 0.0);
        }
        acc
    }

    /// Sum of absolute coefficient values, as `f64`; the scale used when
    /// matching numeric values against exact factors.
    pub fn coeff_one_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| rat_to_f64(c).abs()).sum()
    }
}

/// Monic greatest common divisor by the Euclidean algorithm.
/// `gcd(0, 0) = 0`; otherwise the result is monic.
pub fn poly_gcd(a: &RationalPoly, b: &RationalPoly) -> RationalPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.divmod(&b);
        a = b;
        b = r;
    }
    a.monic().0
}

/// Square-free decomposition by Yun's algorithm.
///
/// Returns `(c, [(g_1, m_1), ...])` with `p = c * prod g_i^{m_i}`, the `g_i`
/// monic, square-free, pairwise coprime, listed by increasing multiplicity.
/// Errors on the zero polynomial.
pub fn square_free_decompose(p: &RationalPoly) -> Result<(BigRational, Vec<(RationalPoly, u32)>)> {
    if p.is_zero() {
        return Err(Error::InvalidParameter(
            "square-free decomposition of the zero polynomial".into(),
        ));
    }
    let (f, c) = p.monic();
    if f.degree() == Some(0) || f.degree().is_none() {
        return Ok((c, Vec::new()));
    }
    let fp = f.derivative();
    let a0 = poly_gcd(&f, &fp);
    let mut b = f.div_exact(&a0);
    let mut d = fp.div_exact(&a0).sub(&b.derivative());
    let mut factors = Vec::new();
    let mut i = 1u32;
    while b.degree().is_some_and(|deg| deg > 0) {
        let a = poly_gcd(&b, &d);
        if a.degree().is_some_and(|deg| deg > 0) {
            factors.push((a.clone(), i));
        }
        b = b.div_exact(&a);
        let cn = d.div_exact(&a);
        d = cn.sub(&b.derivative());
        i += 1;
    }
    Ok((c, factors))
}

/// Interpolate through `(node, value)` samples by Newton's divided
/// differences, using the first `degree_bound + 1` samples to build the
/// polynomial and every remaining sample as a consistency check.
///
/// Errors on duplicate nodes, on fewer than `degree_bound + 1` samples, and
/// when an extra sample disagrees with the interpolant (the data then does not
/// come from a polynomial of the stated degree).
pub fn interpolate(
    samples: &[(BigRational, BigRational)],
    degree_bound: usize,
) -> Result<RationalPoly> {
    let mut seen = BTreeSet::new();
    for (x, _) in samples {
        if !seen.insert(x.clone()) {
            return Err(Error::DuplicateNode { node: format_rat(x) });
        }
    }
    let need = degree_bound + 1;
    if samples.len() < need {
        return Err(Error::InvalidParameter(format!(
            "need {need} samples for degree bound {degree_bound}, got {}",
            samples.len()
        )));
    }

    // Divided-difference coefficients over the first `need` samples.
    let base = &samples[..need];
    let mut table: Vec<BigRational> = base.iter().map(|(_, y)| y.clone()).collect();
    let mut coeffs = vec![table[0].clone()];
    for level in 1..need {
        for i in 0..need - level {
            let dx = &base[i + level].0 - &base[i].0;
            table[i] = (&table[i + 1] - &table[i]) / dx;
        }
        coeffs.push(table[0].clone());
    }

    // Expand the Newton form into monomial coefficients.
    let mut poly = RationalPoly::zero();
    let mut basis = RationalPoly::one();
    for (j, c) in coeffs.iter().enumerate() {
        poly = poly.add(&basis.scale(c));
        if j + 1 < need {
            let lin = RationalPoly::from_coeffs(vec![-base[j].0.clone(), BigRational::one()]);
            basis = basis.mul(&lin);
        }
    }

    for (x, y) in &samples[need..] {
        let got = poly.eval_rat(x);
        if &got != y {
            return Err(Error::InconsistentSamples {
                degree_bound,
                node: format_rat(x),
                diff: format_rat(&(got - y)),
            });
        }
    }
    Ok(poly)
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c < &BigRational::zero() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{}", format_rat(&mag))?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPoly({self})")
    }
}
