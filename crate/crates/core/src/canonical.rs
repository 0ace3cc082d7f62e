//! The canonical basis matrix `Δ(q)` and the two derivative identities
//! linking `A(q)`, `Δ(q)` and `J^≺`.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::charge::precedes;
use crate::error::Result;
use crate::jantzen::{matrix_j, Gate};
use crate::laurent::LaurentPoly;
use crate::matrix::{Entry, LabeledMatrix, Params};
use crate::partitions::Multipartition;
use crate::wedge::{matrix_a_with, Straightener};

/// Solves `Δ = A·bar(Δ)` column by column along the layout of `a`, which
/// must be a linear extension of `≻`.
pub fn matrix_delta(a: &LabeledMatrix<LaurentPoly>) -> Result<LabeledMatrix<LaurentPoly>> {
    matrix_delta_in_order(a, a.order().to_vec())
}

/// Same solve, sweeping along another linear extension of `≻`.
pub fn matrix_delta_in_order(
    a: &LabeledMatrix<LaurentPoly>,
    order: Vec<Multipartition>,
) -> Result<LabeledMatrix<LaurentPoly>> {
    let a = a.reordered(order.clone())?;
    let dim = a.dim();
    let columns: Vec<Vec<LaurentPoly>> = (0..dim)
        .into_par_iter()
        .map(|j| solve_column(&a, j))
        .collect::<Result<_>>()?;
    let mut delta = LabeledMatrix::filled(order, LaurentPoly::zero());
    for (j, column) in columns.into_iter().enumerate() {
        for (i, value) in column.into_iter().enumerate() {
            *delta.at_mut(i, j) = value;
        }
    }
    Ok(delta)
}

fn solve_column(a: &LabeledMatrix<LaurentPoly>, j: usize) -> Result<Vec<LaurentPoly>> {
    let dim = a.dim();
    let mut column = vec![LaurentPoly::zero(); dim];
    let mut barred = vec![LaurentPoly::zero(); dim];
    column[j] = LaurentPoly::one();
    barred[j] = LaurentPoly::one();
    for i in j + 1..dim {
        let mut rhs = LaurentPoly::zero();
        for (k, b) in barred.iter().enumerate().take(i).skip(j) {
            let entry = a.at(i, k);
            if !entry.is_zero() && !b.is_zero() {
                rhs.add_scaled(entry, b);
            }
        }
        let value = rhs.antisym_positive_part()?;
        barred[i] = value.bar();
        column[i] = value;
    }
    Ok(column)
}

/// Entrywise `f'(1)`.
pub fn derivative_matrix(m: &LabeledMatrix<LaurentPoly>) -> LabeledMatrix<BigInt> {
    m.map(LaurentPoly::derivative_at_one)
}

/// Entrywise `f(1)`.
pub fn eval_matrix(m: &LabeledMatrix<LaurentPoly>) -> LabeledMatrix<BigInt> {
    m.map(LaurentPoly::eval_at_one)
}

pub fn bar_matrix(m: &LabeledMatrix<LaurentPoly>) -> LabeledMatrix<LaurentPoly> {
    m.map(LaurentPoly::bar)
}

/// A failed check together with the offending `(row, col)` keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: &'static str,
    pub row: Multipartition,
    pub col: Multipartition,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({}, {}): {}", self.check, self.row, self.col, self.detail)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn compare<T: Entry + fmt::Display>(
        &mut self,
        check: &'static str,
        got: &LabeledMatrix<T>,
        want: &LabeledMatrix<T>,
    ) {
        for (row, col) in got.differences(want) {
            let lhs = got.get(&row, &col).expect("key from the same order");
            let rhs = want.get(&row, &col).map_or_else(|| "missing".to_string(), T::to_string);
            self.violations.push(Violation {
                check,
                detail: format!("{lhs} != {rhs}"),
                row,
                col,
            });
        }
    }

    fn unitriangular(&mut self, check: &'static str, m: &LabeledMatrix<LaurentPoly>, params: &Params) {
        for (row, col, v) in m.iter() {
            let bad = if row == col {
                !v.is_one()
            } else {
                !v.is_zero() && !precedes(row, col, &params.charge, params.n)
            };
            if bad {
                self.violations.push(Violation {
                    check,
                    row: row.clone(),
                    col: col.clone(),
                    detail: v.to_string(),
                });
            }
        }
    }
}

/// All matrices attached to one parameter set.
pub struct Computation {
    pub params: Params,
    pub a: LabeledMatrix<LaurentPoly>,
    pub delta: LabeledMatrix<LaurentPoly>,
    pub j: LabeledMatrix<i64>,
}

impl Computation {
    pub fn new(params: &Params) -> Result<Self> {
        Computation::with_straightener(params, &Straightener::new(params.n, params.l))
    }

    pub fn with_straightener(params: &Params, straightener: &Straightener) -> Result<Self> {
        let a = matrix_a_with(params, straightener)?;
        let delta = matrix_delta(&a)?;
        let j = matrix_j(Gate::Prec, params);
        Ok(Computation {
            params: params.clone(),
            a,
            delta,
            j,
        })
    }

    /// `A(1) = I`, `A·bar(A) = I`, `A` unitriangular and `A'(1) = 2J^≺`.
    pub fn verify_a(&self) -> Result<Report> {
        let mut report = Report::default();
        let order = self.a.order().to_vec();
        report.compare("A(1) = I", &eval_matrix(&self.a), &LabeledMatrix::identity(order.clone()));
        let involution = self.a.mul(&bar_matrix(&self.a))?;
        report.compare("A bar(A) = I", &involution, &LabeledMatrix::identity(order));
        report.unitriangular("A unitriangular", &self.a, &self.params);
        let twice_j = self.j.map(|v| BigInt::from(2 * v));
        report.compare("A'(1) = 2J", &derivative_matrix(&self.a), &twice_j);
        Ok(report)
    }

    /// `Δ'(1) = J^≺·Δ(1)`, `Δ = A·bar(Δ)`, `Δ` unitriangular with entries
    /// in `N[q]`.
    pub fn verify_delta(&self) -> Result<Report> {
        let mut report = Report::default();
        let at_one = eval_matrix(&self.delta);
        let j = self.j.map(|v| BigInt::from(*v));
        report.compare("Delta'(1) = J Delta(1)", &derivative_matrix(&self.delta), &j.mul(&at_one)?);
        let fixed = self.a.mul(&bar_matrix(&self.delta))?;
        report.compare("Delta = A bar(Delta)", &fixed, &self.delta);
        report.unitriangular("Delta unitriangular", &self.delta, &self.params);
        for (row, col, v) in self.delta.iter() {
            if !v.in_natural_polys() {
                report.violations.push(Violation {
                    check: "Delta in N[q]",
                    row: row.clone(),
                    col: col.clone(),
                    detail: v.to_string(),
                });
            }
        }
        Ok(report)
    }
}

pub fn verify_a_identity(params: &Params) -> Result<Report> {
    Computation::new(params)?.verify_a()
}

pub fn verify_delta_identity(params: &Params) -> Result<Report> {
    Computation::new(params)?.verify_delta()
}
