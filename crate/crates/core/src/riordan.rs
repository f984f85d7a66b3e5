//! Riordan triangles: construction from a `(d, h)` pair, the closed forms
//! for the family `1^(j+1) 0^j`, A- and Z-sequence extraction, and checks of
//! the row recurrences these triangles satisfy.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::series::{AlgebraicEquation, BSeries, SeriesError, USeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RiordanError {
    #[error("not a proper Riordan pair: {0}")]
    NotProper(&'static str),
    #[error("rows do not form a lower triangle")]
    NotTriangular,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Lower-triangular exact integer array `d[n][k]`, `0 <= k <= n <= N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiordanTriangle {
    rows: Vec<Vec<BigInt>>,
}

/// An entry where a checked recurrence does not hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub n: usize,
    pub k: usize,
    pub expected: BigInt,
    pub actual: BigInt,
}

impl RiordanTriangle {
    /// Row `n` must have exactly `n + 1` entries.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, RiordanError> {
        if rows.is_empty() || rows.iter().enumerate().any(|(n, r)| r.len() != n + 1) {
            return Err(RiordanError::NotTriangular);
        }
        Ok(RiordanTriangle { rows })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, RiordanError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn identity(order: usize) -> Self {
        let rows = (0..=order)
            .map(|n| (0..=n).map(|k| BigInt::from(u8::from(k == n))).collect())
            .collect();
        RiordanTriangle { rows }
    }

    pub fn pascal(order: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for n in 0..=order {
            let row = (0..=n)
                .map(|k| {
                    if k == 0 || k == n {
                        BigInt::one()
                    } else {
                        &rows[n - 1][k - 1] + &rows[n - 1][k]
                    }
                })
                .collect();
            rows.push(row);
        }
        RiordanTriangle { rows }
    }

    /// Largest row index `N`.
    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Entry `(n, k)`, zero outside the triangle.
    pub fn at(&self, n: i64, k: i64) -> BigInt {
        if n < 0 || k < 0 || k > n {
            return BigInt::zero();
        }
        self.rows
            .get(n as usize)
            .map(|row| row[k as usize].clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// Generating function of column `k`.
    pub fn column(&self, k: usize) -> USeries {
        let coeffs: Vec<BigInt> = (0..=self.order())
            .map(|n| self.at(n as i64, k as i64))
            .collect();
        USeries::from_bigints(&coeffs, self.order())
    }

    /// The first `order + 1` rows.
    pub fn truncate(&self, order: usize) -> Self {
        RiordanTriangle {
            rows: self.rows[..=order.min(self.order())].to_vec(),
        }
    }

    /// One row per line, `k` ascending, comma separated.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Compact JSON array of row arrays.
    pub fn to_json(&self) -> String {
        grid_to_json(&self.rows)
    }

    /// Aligned columns for terminal output.
    pub fn to_text(&self) -> String {
        grid_to_text(&self.rows)
    }
}

pub(crate) fn grid_to_json(rows: &[Vec<BigInt>]) -> String {
    let rows: Vec<String> = rows
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]\n", rows.join(","))
}

pub(crate) fn grid_to_text(rows: &[Vec<BigInt>]) -> String {
    let width = rows
        .iter()
        .flatten()
        .map(|c| c.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

/// Builds `d[n][k] = [t^n] d(t) h(t)^k` for `0 <= k <= n <= order`.
pub fn from_dh(d: &USeries, h: &USeries, order: usize) -> Result<RiordanTriangle, RiordanError> {
    if d.coeff(0).is_zero() {
        return Err(RiordanError::NotProper("d(0) = 0"));
    }
    if !h.coeff(0).is_zero() {
        return Err(RiordanError::NotProper("h(0) != 0"));
    }
    if h.coeff(1).is_zero() {
        return Err(RiordanError::NotProper("h'(0) = 0"));
    }
    let d = d.truncate(order);
    let h = h.truncate(order);
    let mut columns = Vec::with_capacity(order + 1);
    let mut current = d;
    for _ in 0..=order {
        columns.push(current.to_integers()?);
        current = &current * &h;
    }
    let rows = (0..=order)
        .map(|n| (0..=n).map(|k| columns[k][n].clone()).collect())
        .collect();
    Ok(RiordanTriangle { rows })
}

fn family_radicand(j: usize, order: usize) -> USeries {
    // 1 - 4t + 4t^(j+1)
    &USeries::from_ints(&[1, -4], order) + &USeries::monomial(4, j + 1, order)
}

/// `h(t) = (1 - sqrt(1 - 4t + 4t^(j+1))) / 2`.
pub fn h_closed(j: usize, order: usize) -> USeries {
    assert!(j >= 1, "family parameter j must be at least 1");
    let root = family_radicand(j, order)
        .sqrt()
        .expect("radicand starts with 1");
    let half = BigRational::new(1.into(), 2.into());
    (&USeries::one(order) - &root).scale(&half)
}

/// `d(t) = 1 / sqrt(1 - 4t + 4t^(j+1))`.
pub fn d_closed(j: usize, order: usize) -> USeries {
    assert!(j >= 1, "family parameter j must be at least 1");
    let root = family_radicand(j, order)
        .sqrt()
        .expect("radicand starts with 1");
    USeries::one(order).div(&root).expect("root starts with 1")
}

/// `(1 - t) A^(j+1) - A^j + t^j = 0`.
pub fn family_a_equation(j: usize) -> AlgebraicEquation {
    let mut coeffs: Vec<Vec<BigRational>> = vec![Vec::new(); j + 2];
    let int = |x: i64| BigRational::from_integer(x.into());
    coeffs[0] = (0..=j).map(|i| int(i64::from(i == j))).collect();
    coeffs[j] = vec![int(-1)];
    coeffs[j + 1] = vec![int(1), int(-1)];
    AlgebraicEquation::new(coeffs)
}

/// A-sequence of the family triangle as the root of [`family_a_equation`]
/// with `A(0) = 1`.
pub fn a_sequence_from_poly(j: usize, order: usize) -> Result<USeries, RiordanError> {
    let one = BigRational::one();
    Ok(family_a_equation(j).solve(&one, order)?)
}

/// A-sequence from `h(t) = t A(h(t))`, i.e. `A(u) = u / hbar(u)` where
/// `hbar` is the compositional inverse of `h`. One order of precision is
/// lost, so the result has order `h.order() - 1`.
pub fn a_sequence_from_h(h: &USeries) -> Result<USeries, RiordanError> {
    let inv = h.revert()?;
    let inv_over_u = inv.shift_down().ok_or(SeriesError::NotRevertible)?;
    let one = USeries::one(inv_over_u.order());
    Ok(one.div(&inv_over_u)?)
}

/// Z-sequence from `d(t) = d0 / (1 - t Z(h(t)))`:
/// `Z(u) = (1 - d0 / d(hbar(u))) / hbar(u)`. Result has order
/// `min(d, h).order() - 1`.
pub fn z_sequence(d: &USeries, h: &USeries) -> Result<USeries, RiordanError> {
    let d0 = d.coeff(0);
    if d0.is_zero() {
        return Err(RiordanError::NotProper("d(0) = 0"));
    }
    let order = d.order().min(h.order());
    let inv = h.truncate(order).revert()?;
    let d_at_inv = d.truncate(order).compose(&inv)?;
    let numer = &USeries::one(order) - &USeries::one(order).scale(&d0).div(&d_at_inv)?;
    let numer = numer.shift_down().ok_or(SeriesError::NotRevertible)?;
    let inv_over_u = inv.shift_down().ok_or(SeriesError::NotRevertible)?;
    Ok(numer.div(&inv_over_u)?)
}

/// Rebuilds `d(t) = d0 / (1 - t Z(h(t)))` to the order of `h`.
pub fn d_from_z(d0: &BigRational, z: &USeries, h: &USeries) -> Result<USeries, RiordanError> {
    let order = h.order();
    // z has one order less than h; t * Z(h) only needs Z up to t^(order-1).
    let z_ext = USeries::new(z.coeffs().to_vec(), order);
    let tz = z_ext.compose(h)?.shift_up();
    let denom = &USeries::one(order) - &tz;
    Ok(USeries::one(order).scale(d0).div(&denom)?)
}

/// Splits the table into `R[n][k] = F[n][n-k]` (lower part) and
/// `Rbar[n][k] = F[n-k][n]` (upper part).
pub fn r_from_f(f: &BSeries) -> Result<(RiordanTriangle, RiordanTriangle), RiordanError> {
    let grid = f.to_integers()?;
    let order = f.order();
    let lower = (0..=order)
        .map(|n| (0..=n).map(|k| grid[n][n - k].clone()).collect())
        .collect();
    let upper = (0..=order)
        .map(|n| (0..=n).map(|k| grid[n - k][n].clone()).collect())
        .collect();
    Ok((
        RiordanTriangle { rows: lower },
        RiordanTriangle { rows: upper },
    ))
}

fn check_all(
    r: &RiordanTriangle,
    start_row: usize,
    mut rhs: impl FnMut(i64, i64) -> BigInt,
    columns: impl Fn(usize) -> std::ops::RangeInclusive<usize>,
) -> Vec<Violation> {
    let mut out = Vec::new();
    for n in start_row..=r.order() {
        for k in columns(n) {
            let actual = r.at(n as i64, k as i64);
            let expected = rhs(n as i64, k as i64);
            if actual != expected {
                out.push(Violation {
                    n,
                    k,
                    expected,
                    actual,
                });
            }
        }
    }
    out
}

/// Entries breaking `R[n+1][k+1] = R[n][k] + R[n+1][k+2] - R[n-j][k]`, with
/// out-of-triangle entries read as zero.
pub fn verify_recurrence_recra(r: &RiordanTriangle, j: usize) -> Vec<Violation> {
    let j = j as i64;
    check_all(
        r,
        1,
        |n, k| r.at(n - 1, k - 1) + r.at(n, k + 1) - r.at(n - 1 - j, k - 1),
        |n| 1..=n,
    )
}

/// `R[n][0] = 2 R[n][1]` for every row `n >= 1`.
pub fn verify_column_doubling(r: &RiordanTriangle) -> bool {
    r.order() >= 1 && (1..=r.order() as i64).all(|n| r.at(n, 0) == r.at(n, 1) * 2)
}

/// Entries breaking the A-sequence recurrence
/// `d[n+1][k+1] = sum_i a_i d[n][k+i]`.
pub fn verify_a_sequence(r: &RiordanTriangle, a: &USeries) -> Vec<Violation> {
    let a = a.to_integers().unwrap_or_default();
    check_all(
        r,
        1,
        |n, k| {
            (0..a.len())
                .map(|i| &a[i] * r.at(n - 1, k - 1 + i as i64))
                .sum()
        },
        |n| 1..=n,
    )
}

/// Entries breaking the Z-sequence recurrence for column 0,
/// `d[n+1][0] = sum_i z_i d[n][i]`.
pub fn verify_z_sequence(r: &RiordanTriangle, z: &USeries) -> Vec<Violation> {
    let z = z.to_integers().unwrap_or_default();
    check_all(
        r,
        1,
        |n, _| (0..z.len()).map(|i| &z[i] * r.at(n - 1, i as i64)).sum(),
        |_| 0..=0,
    )
}

/// Entries breaking the cumulative forms of the family recurrence:
/// `R[n+1][k+1] = S(n, k) - S(n-j, k)` and `R[n+1][0] = 2 S(n, 0) - 2 S(n-j, 0)`,
/// where `S(m, k)` sums row `m` from column `k` on.
pub fn verify_cumulative_recurrences(r: &RiordanTriangle, j: usize) -> Vec<Violation> {
    let j = j as i64;
    let tail = |m: i64, k: i64| -> BigInt { (k..=m.max(k)).map(|i| r.at(m, i)).sum() };
    check_all(
        r,
        1,
        |n, k| {
            if k == 0 {
                (tail(n - 1, 0) - tail(n - 1 - j, 0)) * 2
            } else {
                tail(n - 1, k - 1) - tail(n - 1 - j, k - 1)
            }
        },
        |n| 0..=n,
    )
}

/// A finite A-matrix: `rows[i]` holds the coefficients of `P^[i](t)` and
/// `rho` those of `Q(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AMatrix {
    pub rows: Vec<Vec<BigInt>>,
    pub rho: Vec<BigInt>,
}

impl AMatrix {
    /// `P^[0] = 1`, `P^[j] = -1`, `Q = 1`.
    pub fn family(j: usize) -> Self {
        let mut rows = vec![Vec::new(); j + 1];
        rows[0] = vec![BigInt::one()];
        rows[j] = vec![-BigInt::one()];
        AMatrix {
            rows,
            rho: vec![BigInt::one()],
        }
    }

    /// Entries breaking
    /// `d[n+1][k+1] = sum_{i,m} alpha[i][m] d[n-i][k+m] + sum_m rho[m] d[n+1][k+m+2]`.
    pub fn violations(&self, r: &RiordanTriangle) -> Vec<Violation> {
        check_all(
            r,
            1,
            |n, k| {
                let mut acc = BigInt::zero();
                for (i, row) in self.rows.iter().enumerate() {
                    for (m, alpha) in row.iter().enumerate() {
                        acc += alpha * r.at(n - 1 - i as i64, k - 1 + m as i64);
                    }
                }
                for (m, rho) in self.rho.iter().enumerate() {
                    acc += rho * r.at(n, k + 1 + m as i64);
                }
                acc
            },
            |n| 1..=n,
        )
    }

    /// Checks `h/t = sum_i t^i P^[i](h) + (h^2/t) Q(h)` through `t^(N-1)`,
    /// `N = h.order()`.
    pub fn h_satisfies(&self, h: &USeries) -> bool {
        let Some(lhs) = h.shift_down() else {
            return false;
        };
        let order = lhs.order();
        let poly = |c: &[BigInt]| USeries::from_bigints(c, h.order());
        let mut rhs = USeries::zero(h.order());
        for (i, row) in self.rows.iter().enumerate() {
            let mut term = poly(row).compose(h).expect("h(0) = 0");
            for _ in 0..i {
                term = term.shift_up();
            }
            rhs = &rhs + &term;
        }
        let rhs = rhs.truncate(order);
        let Some(h2_over_t) = (h * h).shift_down() else {
            return false;
        };
        let q = poly(&self.rho)
            .compose(h)
            .expect("h(0) = 0")
            .truncate(order);
        let rhs = &rhs + &(&h2_over_t * &q);
        lhs == rhs
    }
}

/// `h` of a triangle as the ratio of its first two columns.
pub fn h_from_triangle(r: &RiordanTriangle) -> Result<USeries, RiordanError> {
    Ok(r.column(1).div(&r.column(0))?)
}

/// True iff the family A-matrix reproduces every interior entry and the
/// `h` read off the triangle satisfies the matching functional equation.
pub fn verify_a_matrix(r: &RiordanTriangle, j: usize) -> bool {
    let a = AMatrix::family(j);
    if !a.violations(r).is_empty() {
        return false;
    }
    match h_from_triangle(r) {
        Ok(h) => a.h_satisfies(&h),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table3() -> RiordanTriangle {
        RiordanTriangle::from_i64_rows(&[
            &[1],
            &[2, 1],
            &[6, 3, 1],
            &[18, 9, 4, 1],
            &[58, 29, 13, 5, 1],
            &[192, 96, 44, 18, 6, 1],
            &[650, 325, 151, 64, 24, 7, 1],
            &[2232, 1116, 524, 228, 90, 31, 8, 1],
        ])
        .unwrap()
    }

    fn ints(s: &USeries) -> Vec<i64> {
        s.to_integers()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn closed_forms_for_j2() {
        let d = d_closed(2, 7);
        assert_eq!(ints(&d), vec![1, 2, 6, 18, 58, 192, 650, 2232]);
        let h = h_closed(2, 7);
        // h^2 - h + t - t^3 = 0
        let lhs = &(&(&h * &h) - &h) + &USeries::from_ints(&[0, 1, 0, -1], 7);
        assert!(lhs.is_zero());
        assert_eq!(ints(&(&d * &h)), vec![0, 1, 3, 9, 29, 96, 325, 1116]);
    }

    #[test]
    fn closed_forms_for_j1_match_avoider_counts() {
        assert_eq!(ints(&d_closed(1, 1)), vec![1, 2]);
    }

    #[test]
    fn from_dh_examples() {
        let geo = USeries::one(5)
            .div(&USeries::from_ints(&[1, -1], 5))
            .unwrap();
        let ones = from_dh(&geo, &USeries::var(5), 5).unwrap();
        assert!(ones.rows().iter().flatten().all(|c| c.is_one()));
        assert_eq!(
            from_dh(&USeries::one(5), &USeries::var(5), 5).unwrap(),
            RiordanTriangle::identity(5)
        );
        assert_eq!(
            from_dh(&d_closed(2, 7), &h_closed(2, 7), 7).unwrap(),
            table3()
        );
    }

    #[test]
    fn from_dh_rejects_improper_pairs() {
        let t = USeries::var(3);
        assert!(matches!(
            from_dh(&t, &t, 3),
            Err(RiordanError::NotProper(_))
        ));
        let one = USeries::one(3);
        assert!(matches!(
            from_dh(&one, &one, 3),
            Err(RiordanError::NotProper(_))
        ));
        let t2 = USeries::monomial(1, 2, 3);
        assert!(matches!(
            from_dh(&one, &t2, 3),
            Err(RiordanError::NotProper(_))
        ));
    }

    #[test]
    fn a_sequence_routes() {
        let a = a_sequence_from_poly(2, 9).unwrap();
        assert_eq!(ints(&a), vec![1, 1, 0, 2, -1, 7, -12, 38, -99, 281]);
        assert!(family_a_equation(2).eval(&a).is_zero());
        assert_eq!(a_sequence_from_h(&h_closed(2, 10)).unwrap(), a);
        for j in 1..=3 {
            assert_eq!(
                a_sequence_from_h(&h_closed(j, 12)).unwrap(),
                a_sequence_from_poly(j, 11).unwrap()
            );
        }
        assert_eq!(
            a_sequence_from_h(&USeries::var(6)).unwrap(),
            USeries::one(5)
        );
    }

    #[test]
    fn h_is_fixed_by_a() {
        let h = h_closed(2, 10);
        let a = a_sequence_from_h(&h).unwrap();
        let a = USeries::new(a.coeffs().to_vec(), 10);
        assert_eq!(a.compose(&h).unwrap().shift_up(), h);
    }

    #[test]
    fn z_sequence_examples() {
        let geo = USeries::one(6)
            .div(&USeries::from_ints(&[1, -1], 6))
            .unwrap();
        assert_eq!(z_sequence(&geo, &USeries::var(6)).unwrap(), USeries::one(5));

        let (d, h) = (d_closed(2, 10), h_closed(2, 10));
        let z = z_sequence(&d, &h).unwrap();
        let d0 = BigRational::one();
        assert_eq!(d_from_z(&d0, &z, &h).unwrap(), d);
        let r = from_dh(&d, &h, 10).unwrap();
        assert!(verify_z_sequence(&r.truncate(10), &z).is_empty());
    }

    #[test]
    fn a_sequence_reconstructs_interior() {
        let r = from_dh(&d_closed(2, 10), &h_closed(2, 10), 10).unwrap();
        let a = a_sequence_from_poly(2, 10).unwrap();
        assert!(verify_a_sequence(&r, &a).is_empty());
    }

    #[test]
    fn recra_examples() {
        let t3 = table3();
        assert!(verify_recurrence_recra(&t3, 2).is_empty());
        assert!(!verify_recurrence_recra(&t3, 1).is_empty());
        assert!(!verify_recurrence_recra(&RiordanTriangle::identity(6), 2).is_empty());
        // For j = 1 the shifted diagonal terms cancel and the identity
        // satisfies the recurrence.
        assert!(verify_recurrence_recra(&RiordanTriangle::identity(6), 1).is_empty());
        assert!(!verify_recurrence_recra(&RiordanTriangle::pascal(6), 1).is_empty());
    }

    #[test]
    fn column_doubling() {
        assert!(verify_column_doubling(&table3()));
        assert!(!verify_column_doubling(&RiordanTriangle::pascal(5)));
        let table4 =
            RiordanTriangle::from_i64_rows(&[&[1], &[2, 1], &[6, 3, 1], &[18, 10, 4, 1]]).unwrap();
        assert!(!verify_column_doubling(&table4));
    }

    #[test]
    fn a_matrix() {
        assert!(verify_a_matrix(&table3(), 2));
        assert!(!verify_a_matrix(&table3(), 1));
        assert!(AMatrix::family(3).h_satisfies(&h_closed(3, 12)));
        assert!(!AMatrix::family(2).h_satisfies(&h_closed(3, 12)));
    }

    #[test]
    fn cumulative_recurrences() {
        assert!(verify_cumulative_recurrences(&table3(), 2).is_empty());
        assert!(!verify_cumulative_recurrences(&table3(), 1).is_empty());
    }

    #[test]
    fn rendering() {
        let t = table3().truncate(2);
        assert_eq!(t.to_csv(), "1\n2,1\n6,3,1\n");
        assert_eq!(t.to_json(), "[[1],[2,1],[6,3,1]]\n");
    }

    #[test]
    fn from_rows_validates_shape() {
        assert_eq!(
            RiordanTriangle::from_i64_rows(&[&[1], &[1]]),
            Err(RiordanError::NotTriangular)
        );
    }
}
