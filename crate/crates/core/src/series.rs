//! Exact truncated formal power series in one and two variables.
//!
//! Coefficients are [`BigRational`]s throughout. Every series carries an
//! explicit truncation order `N` and stores the coefficients of `t^0..=t^N`;
//! binary operations on series of different orders truncate to the smaller
//! one.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("divisor has zero constant term")]
    ZeroConstantTerm,
    #[error("square root needs constant term 1, found {0}")]
    BadConstantTerm(BigRational),
    #[error("series is not revertible: needs h(0) = 0 and h'(0) != 0")]
    NotRevertible,
    #[error("composition needs an inner series with zero constant term")]
    BadComposition,
    #[error("Newton solve needs a simple root at t = 0: {0}")]
    SingularRoot(&'static str),
    #[error("coefficient of t^{index} is not an integer: {value}")]
    NonInteger { index: usize, value: BigRational },
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A univariate power series truncated at `t^order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct USeries {
    coeffs: Vec<BigRational>,
}

impl USeries {
    /// Builds a series of the given order; missing coefficients are zero and
    /// extra ones are dropped.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        USeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect(), order)
    }

    pub fn from_bigints(coeffs: &[BigInt], order: usize) -> Self {
        Self::new(
            coeffs
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect(),
            order,
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_ints(&[1], order)
    }

    /// The series `t`.
    pub fn var(order: usize) -> Self {
        Self::from_ints(&[0, 1], order)
    }

    /// The monomial `c * t^exp`, zero when `exp > order`.
    pub fn monomial(c: i64, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = rat(c);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `t^i`; zero past the truncation order.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        USeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, mut m: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while m > 0 {
            if m & 1 == 1 {
                acc = &acc * &base;
            }
            m >>= 1;
            if m > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient `self / rhs`, truncated to the smaller order.
    pub fn div(&self, rhs: &USeries) -> Result<USeries, SeriesError> {
        let order = self.order().min(rhs.order());
        let b0 = &rhs.coeffs[0];
        if b0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv_b0 = b0.recip();
        let mut q: Vec<BigRational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for i in 1..=n {
                let bi = &rhs.coeffs[i];
                if !bi.is_zero() {
                    acc -= bi * &q[n - i];
                }
            }
            q.push(acc * &inv_b0);
        }
        Ok(USeries { coeffs: q })
    }

    /// Square root with constant term 1.
    pub fn sqrt(&self) -> Result<USeries, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::BadConstantTerm(self.coeffs[0].clone()));
        }
        let two = rat(2);
        let mut s = vec![BigRational::one()];
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].clone();
            for i in 1..n {
                acc -= &s[i] * &s[n - i];
            }
            s.push(acc / &two);
        }
        Ok(USeries { coeffs: s })
    }

    /// `self(inner(t))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &USeries) -> Result<USeries, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::BadComposition);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        // Horner from the top coefficient down.
        let mut acc = USeries::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> USeries {
        let order = self.order();
        let coeffs = (1..=order)
            .map(|i| &self.coeffs[i] * rat(i as i64))
            .collect();
        USeries::new(coeffs, order)
    }

    /// Divides by `t`, dropping one order of precision. Requires a zero
    /// constant term.
    pub fn shift_down(&self) -> Option<USeries> {
        if !self.coeffs[0].is_zero() || self.order() == 0 {
            return None;
        }
        Some(USeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Multiplies by `t` while keeping the order.
    pub fn shift_up(&self) -> USeries {
        let mut coeffs = vec![BigRational::zero()];
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        USeries { coeffs }
    }

    /// Compositional inverse: `g` with `self(g(t)) = t`.
    pub fn revert(&self) -> Result<USeries, SeriesError> {
        let order = self.order();
        if !self.coeffs[0].is_zero() || order == 0 || self.coeffs[1].is_zero() {
            return Err(SeriesError::NotRevertible);
        }
        let t = USeries::var(order);
        let dh = self.derivative();
        // Newton on F(g) = self(g) - t; correct to t^1 from the start.
        let mut g = USeries::monomial(0, 0, order);
        g.coeffs[1] = self.coeffs[1].recip();
        let mut prec = 2usize;
        while prec <= order {
            prec = (2 * prec).min(order + 1);
            let p = prec - 1;
            let gp = g.truncate(p);
            let residual = &self.truncate(p).compose(&gp)? - &t.truncate(p);
            let slope = dh.truncate(p).compose(&gp)?;
            g = &gp - &residual.div(&slope)?;
            g = g.truncate(order);
        }
        Ok(g)
    }

    /// Exact conversion to integers; fails on the first non-integral
    /// coefficient.
    pub fn to_integers(&self) -> Result<Vec<BigInt>, SeriesError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(SeriesError::NonInteger {
                        index,
                        value: c.clone(),
                    })
                }
            })
            .collect()
    }
}

fn fmt_rat(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text form `c0 + c1*t + c2*t^2 + ... + cN*t^N`, every term
/// present.
impl fmt::Display for USeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let c = fmt_rat(c);
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &USeries {
    type Output = USeries;
    fn add(self, rhs: &USeries) -> USeries {
        let order = self.order().min(rhs.order());
        USeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Sub for &USeries {
    type Output = USeries;
    fn sub(self, rhs: &USeries) -> USeries {
        let order = self.order().min(rhs.order());
        USeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Neg for &USeries {
    type Output = USeries;
    fn neg(self) -> USeries {
        USeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &USeries {
    type Output = USeries;
    fn mul(self, rhs: &USeries) -> USeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + k] += a * b;
                }
            }
        }
        USeries { coeffs: out }
    }
}

/// A polynomial equation `P(A, t) = sum_i c_i(t) A^i = 0` in a series
/// unknown `A`, with polynomial coefficients `c_i(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicEquation {
    /// `coeffs[i]` holds the polynomial in `t` (lowest degree first)
    /// multiplying `A^i`.
    coeffs: Vec<Vec<BigRational>>,
}

impl AlgebraicEquation {
    pub fn new(coeffs: Vec<Vec<BigRational>>) -> Self {
        AlgebraicEquation { coeffs }
    }

    pub fn from_ints(coeffs: &[&[i64]]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| c.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn coeff_series(&self, i: usize, order: usize) -> USeries {
        USeries::new(self.coeffs[i].clone(), order)
    }

    /// `P(a, t)` truncated to the order of `a`.
    pub fn eval(&self, a: &USeries) -> USeries {
        let order = a.order();
        let mut acc = USeries::zero(order);
        for i in (0..self.coeffs.len()).rev() {
            acc = &acc * a;
            acc = &acc + &self.coeff_series(i, order);
        }
        acc
    }

    /// `dP/dA (a, t)`.
    pub fn eval_da(&self, a: &USeries) -> USeries {
        let order = a.order();
        let mut acc = USeries::zero(order);
        for i in (1..self.coeffs.len()).rev() {
            acc = &acc * a;
            acc = &acc + &self.coeff_series(i, order).scale(&rat(i as i64));
        }
        acc
    }

    /// The series root with `A(0) = a0`, found by Newton iteration with
    /// precision doubling.
    pub fn solve(&self, a0: &BigRational, order: usize) -> Result<USeries, SeriesError> {
        let start = USeries::new(vec![a0.clone()], 0);
        if !self.eval(&start).coeffs[0].is_zero() {
            return Err(SeriesError::SingularRoot("a0 is not a root at t = 0"));
        }
        if self.eval_da(&start).coeffs[0].is_zero() {
            return Err(SeriesError::SingularRoot("dP/dA vanishes at (a0, 0)"));
        }
        let max_iter = (usize::BITS - order.leading_zeros()) as usize + 2;
        let mut a = start;
        let mut prec = 1usize;
        let mut iterations = 0;
        while prec <= order {
            if iterations == max_iter {
                return Err(SeriesError::SingularRoot("Newton iteration cap reached"));
            }
            iterations += 1;
            prec = (2 * prec).min(order + 1);
            let a_ext = a.truncate(prec - 1);
            let step = self.eval(&a_ext).div(&self.eval_da(&a_ext))?;
            a = &a_ext - &step;
        }
        Ok(a.truncate(order))
    }
}

/// Solves `P(A, t) = 0` for the series branch with `A(0) = a0`.
pub fn solve_poly(
    equation: &AlgebraicEquation,
    a0: &BigRational,
    order: usize,
) -> Result<USeries, SeriesError> {
    equation.solve(a0, order)
}

/// A bivariate series truncated on the rectangle `x^n y^k`, `n, k <= order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BSeries {
    grid: Vec<Vec<BigRational>>,
}

impl BSeries {
    pub fn zero(order: usize) -> Self {
        BSeries {
            grid: vec![vec![BigRational::zero(); order + 1]; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_terms(&[(1, 0, 0)], order)
    }

    /// Sum of `c * x^n * y^k` terms; terms outside the rectangle are dropped.
    pub fn from_terms(terms: &[(i64, usize, usize)], order: usize) -> Self {
        let mut s = Self::zero(order);
        for &(c, n, k) in terms {
            if n <= order && k <= order {
                s.grid[n][k] += rat(c);
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.grid.len() - 1
    }

    /// Coefficient of `x^n y^k`.
    pub fn coeff(&self, n: usize, k: usize) -> &BigRational {
        &self.grid[n][k]
    }

    pub fn set(&mut self, n: usize, k: usize, value: BigRational) {
        self.grid[n][k] = value;
    }

    fn nonzero_terms(&self) -> Vec<(usize, usize, &BigRational)> {
        let mut out = Vec::new();
        for (n, row) in self.grid.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.push((n, k, c));
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &BSeries) -> BSeries {
        let order = self.order().min(rhs.order());
        let mut out = Self::zero(order);
        for n in 0..=order {
            for k in 0..=order {
                out.grid[n][k] = &self.grid[n][k] + &rhs.grid[n][k];
            }
        }
        out
    }

    pub fn mul(&self, rhs: &BSeries) -> BSeries {
        let order = self.order().min(rhs.order());
        let mut out = Self::zero(order);
        let terms = rhs.nonzero_terms();
        for n in 0..=order {
            for k in 0..=order {
                let a = &self.grid[n][k];
                if a.is_zero() {
                    continue;
                }
                for &(i, l, b) in &terms {
                    if n + i <= order && k + l <= order {
                        out.grid[n + i][k + l] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn div(&self, rhs: &BSeries) -> Result<BSeries, SeriesError> {
        let order = self.order().min(rhs.order());
        let b00 = rhs.grid[0][0].clone();
        if b00.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv = b00.recip();
        let terms: Vec<_> = rhs
            .nonzero_terms()
            .into_iter()
            .filter(|&(i, l, _)| (i, l) != (0, 0) && i <= order && l <= order)
            .collect();
        let mut q = Self::zero(order);
        for n in 0..=order {
            for k in 0..=order {
                let mut acc = self.grid[n][k].clone();
                for &(i, l, b) in &terms {
                    if i <= n && l <= k {
                        let prev = &q.grid[n - i][k - l];
                        if !prev.is_zero() {
                            acc -= b * prev;
                        }
                    }
                }
                q.grid[n][k] = acc * &inv;
            }
        }
        Ok(q)
    }

    /// Integer grid, row `n` = coefficients of `x^n`.
    pub fn to_integers(&self) -> Result<Vec<Vec<BigInt>>, SeriesError> {
        let order = self.order();
        self.grid
            .iter()
            .enumerate()
            .map(|(n, row)| {
                row.iter()
                    .enumerate()
                    .map(|(k, c)| {
                        if c.is_integer() {
                            Ok(c.to_integer())
                        } else {
                            Err(SeriesError::NonInteger {
                                index: n * (order + 1) + k,
                                value: c.clone(),
                            })
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Renders the series as a polynomial in `x`, `y`, e.g. `1+xy+x^2y^2`.
    /// Terms are ordered by total degree, then by the power of `x`.
    pub fn to_poly_string(&self) -> String {
        let mut terms = self.nonzero_terms();
        terms.sort_by_key(|&(n, k, _)| (n + k, std::cmp::Reverse(n)));
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (n, k, c)) in terms.into_iter().enumerate() {
            let mono = monomial("x", n) + &monomial("y", k);
            let neg = c.is_negative();
            if idx > 0 {
                out.push(if neg { '-' } else { '+' });
            } else if neg {
                out.push('-');
            }
            let abs = c.abs();
            if mono.is_empty() {
                out.push_str(&fmt_rat(&abs));
            } else {
                if !abs.is_one() {
                    out.push_str(&fmt_rat(&abs));
                }
                out.push_str(&mono);
            }
        }
        out
    }
}

fn monomial(var: &str, exp: usize) -> String {
    match exp {
        0 => String::new(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &USeries) -> Vec<i64> {
        s.to_integers()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn difference_of_squares() {
        let a = USeries::from_ints(&[1, 1], 4);
        let b = USeries::from_ints(&[1, -1], 4);
        assert_eq!(ints(&(&a * &b)), vec![1, 0, -1, 0, 0]);
    }

    #[test]
    fn empty_power_is_one() {
        let a = USeries::from_ints(&[1, 1], 5);
        assert_eq!(a.pow(0), USeries::one(5));
        assert_eq!(ints(&a.pow(3)), vec![1, 3, 3, 1, 0, 0]);
    }

    #[test]
    fn geometric_series() {
        let one = USeries::one(6);
        let q = one.div(&USeries::from_ints(&[1, -1], 6)).unwrap();
        assert_eq!(ints(&q), vec![1; 7]);
        let q = one.div(&USeries::from_ints(&[1, -2], 6)).unwrap();
        let powers: Vec<i64> = (0..7).map(|i| 1 << i).collect();
        assert_eq!(ints(&q), powers);
        let a = USeries::from_ints(&[1, -1], 6);
        assert_eq!(a.div(&a).unwrap(), one);
    }

    #[test]
    fn division_by_zero_constant_term() {
        let a = USeries::one(3);
        assert_eq!(a.div(&USeries::var(3)), Err(SeriesError::ZeroConstantTerm));
    }

    #[test]
    fn square_roots() {
        assert_eq!(USeries::one(4).sqrt().unwrap(), USeries::one(4));
        let sq = USeries::from_ints(&[1, 2, 1], 6);
        assert_eq!(ints(&sq.sqrt().unwrap()), vec![1, 1, 0, 0, 0, 0, 0]);
        // (1 - 4t)^(1/2) via the generalized binomial theorem.
        let n = 8;
        let mut expected = vec![rat(1)];
        let half = BigRational::new(1.into(), 2.into());
        let mut binom = rat(1);
        for i in 0..n {
            binom = binom * (&half - rat(i)) / rat(i + 1);
            expected.push(&binom * rat(-4).pow(i as i32 + 1));
        }
        let s = USeries::from_ints(&[1, -4], n as usize).sqrt().unwrap();
        assert_eq!(s.coeffs(), &expected[..]);
        assert_eq!(ints(&s)[..5], [1, -2, -2, -4, -10]);
    }

    #[test]
    fn sqrt_rejects_bad_constant() {
        let a = USeries::from_ints(&[4, 1], 3);
        assert!(matches!(a.sqrt(), Err(SeriesError::BadConstantTerm(_))));
    }

    #[test]
    fn catalan_equation() {
        // A - 1 - t A^2 = 0
        let eq = AlgebraicEquation::from_ints(&[&[-1], &[1], &[0, -1]]);
        let a = solve_poly(&eq, &rat(1), 10).unwrap();
        let mut cat = vec![1i64];
        for n in 0..10 {
            cat.push((0..=n).map(|i| cat[i] * cat[n - i]).sum());
        }
        assert_eq!(ints(&a), cat);
        assert!(eq.eval(&a).is_zero());
    }

    #[test]
    fn trivial_equation() {
        let eq = AlgebraicEquation::from_ints(&[&[-1], &[1]]);
        assert_eq!(solve_poly(&eq, &rat(1), 5).unwrap(), USeries::one(5));
    }

    #[test]
    fn singular_roots_are_rejected() {
        // (A - 1)^2 = 0 has a double root.
        let eq = AlgebraicEquation::from_ints(&[&[1], &[-2], &[1]]);
        assert!(matches!(
            solve_poly(&eq, &rat(1), 4),
            Err(SeriesError::SingularRoot(_))
        ));
        let eq = AlgebraicEquation::from_ints(&[&[-1], &[1]]);
        assert!(matches!(
            solve_poly(&eq, &rat(2), 4),
            Err(SeriesError::SingularRoot(_))
        ));
    }

    #[test]
    fn reversion() {
        let t = USeries::var(8);
        assert_eq!(t.revert().unwrap(), t);

        // t/(1-t) and t/(1+t) are inverse to each other.
        let h = t.div(&USeries::from_ints(&[1, -1], 8)).unwrap();
        let g = t.div(&USeries::from_ints(&[1, 1], 8)).unwrap();
        assert_eq!(h.revert().unwrap(), g);

        // t - t^2 reverts to t * Catalan(t).
        let h = USeries::from_ints(&[0, 1, -1], 8);
        let g = h.revert().unwrap();
        assert_eq!(ints(&g), vec![0, 1, 1, 2, 5, 14, 42, 132, 429]);
        assert_eq!(h.compose(&g).unwrap(), t);
    }

    #[test]
    fn not_revertible() {
        assert_eq!(
            USeries::from_ints(&[1, 1], 4).revert(),
            Err(SeriesError::NotRevertible)
        );
        assert_eq!(
            USeries::from_ints(&[0, 0, 1], 4).revert(),
            Err(SeriesError::NotRevertible)
        );
    }

    #[test]
    fn bivariate_pascal() {
        let n = 7;
        let denom = BSeries::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 0, 1)], n);
        let f = BSeries::one(n).div(&denom).unwrap().to_integers().unwrap();
        // Pascal recurrence as the oracle.
        let mut p = vec![vec![BigInt::from(1); n + 1]; n + 1];
        for a in 1..=n {
            for b in 1..=n {
                p[a][b] = &p[a - 1][b] + &p[a][b - 1];
            }
        }
        assert_eq!(f, p);
    }

    #[test]
    fn bivariate_unit_and_zero_division() {
        let a = BSeries::from_terms(&[(3, 1, 2), (-1, 0, 0)], 4);
        assert_eq!(a.mul(&BSeries::one(4)), a);
        assert_eq!(
            a.div(&BSeries::from_terms(&[(1, 1, 0)], 4)),
            Err(SeriesError::ZeroConstantTerm)
        );
    }

    #[test]
    fn canonical_rendering() {
        let s = USeries::from_ints(&[1, -2, 0, 3], 3);
        assert_eq!(s.to_string(), "1 + -2*t + 0*t^2 + 3*t^3");
        let c = BSeries::from_terms(&[(1, 0, 0), (1, 1, 1), (1, 2, 2)], 3);
        assert_eq!(c.to_poly_string(), "1+xy+x^2y^2");
    }

    #[test]
    fn non_integer_detection() {
        let s = USeries::new(vec![rat(1), BigRational::new(1.into(), 2.into())], 1);
        assert!(matches!(
            s.to_integers(),
            Err(SeriesError::NonInteger { index: 1, .. })
        ));
    }
}
