//! Jantzen-type matrices `J^≺` and `J^⊲` built from pairs of ribbons.

use std::collections::BTreeSet;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::charge::{beta_numbers, decompose, precedes, strictly_dominated, tau_inv, Multicharge};
use crate::error::{Error, Result};
use crate::matrix::{LabeledMatrix, Params};
use crate::partitions::{extract_ribbon, node_content, remove_ribbon_by_beta, Multipartition, Partition, Ribbon};

/// How a pair of multipartitions differs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairCase {
    /// `rho = λ^(d)/μ^(d)` and `rho' = μ^(d')/λ^(d')`, both of length `h`.
    J1 {
        d: usize,
        d_prime: usize,
        rho: Ribbon,
        rho_prime: Ribbon,
        h: usize,
    },
    /// `rho = λ^(d)/(λ^(d)∩μ^(d))` and `rho' = μ^(d)/(λ^(d)∩μ^(d))`.
    J2 {
        d: usize,
        rho: Ribbon,
        rho_prime: Ribbon,
        h: usize,
    },
    J3,
}

impl PairCase {
    pub fn is_ribbon_pair(&self) -> bool {
        !matches!(self, PairCase::J3)
    }

    fn ribbons(&self) -> Option<(&Ribbon, &Ribbon, usize)> {
        match self {
            PairCase::J1 { rho, rho_prime, h, .. } | PairCase::J2 { rho, rho_prime, h, .. } => {
                Some((rho, rho_prime, *h))
            }
            PairCase::J3 => None,
        }
    }
}

pub fn classify(a: &Multipartition, b: &Multipartition) -> PairCase {
    if a == b || a.level() != b.level() {
        return PairCase::J3;
    }
    let differing: Vec<usize> = (1..=a.level()).filter(|&c| a.component(c) != b.component(c)).collect();
    match differing[..] {
        [d] => {
            let common = a.component(d).intersection(b.component(d));
            let rho = extract_ribbon(&common, a.component(d));
            let rho_prime = extract_ribbon(&common, b.component(d));
            match (rho, rho_prime) {
                (Some(rho), Some(rho_prime)) if rho.length == rho_prime.length => PairCase::J2 {
                    d,
                    h: rho.length,
                    rho: rho.in_component(d),
                    rho_prime: rho_prime.in_component(d),
                },
                _ => PairCase::J3,
            }
        }
        [first, second] => {
            let (d, d_prime) = if b.component(first).is_contained_in(a.component(first)) {
                (first, second)
            } else {
                (second, first)
            };
            if !a.component(d_prime).is_contained_in(b.component(d_prime)) {
                return PairCase::J3;
            }
            let rho = extract_ribbon(b.component(d), a.component(d));
            let rho_prime = extract_ribbon(a.component(d_prime), b.component(d_prime));
            match (rho, rho_prime) {
                (Some(rho), Some(rho_prime)) if rho.length == rho_prime.length => PairCase::J1 {
                    d,
                    d_prime,
                    h: rho.length,
                    rho: rho.in_component(d),
                    rho_prime: rho_prime.in_component(d_prime),
                },
                _ => PairCase::J3,
            }
        }
        _ => PairCase::J3,
    }
}

fn height_sign(rho: &Ribbon, rho_prime: &Ribbon) -> i64 {
    if (rho.height + rho_prime.height).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The entry `j_{ab}` of the ungated matrix `J`.
pub fn j_entry(a: &Multipartition, b: &Multipartition, n: i64, mc: &Multicharge) -> i64 {
    let case = classify(a, b);
    let Some((rho, rho_prime, h)) = case.ribbons() else {
        return 0;
    };
    let sign = height_sign(rho, rho_prime);
    let same_residue =
        node_content(&rho.head, mc).rem_euclid(n) == node_content(&rho_prime.head, mc).rem_euclid(n);
    match case {
        PairCase::J1 { .. } => {
            if same_residue {
                sign
            } else {
                0
            }
        }
        _ => {
            let divisible = h as i64 % n == 0;
            match (same_residue, divisible) {
                (true, false) => sign,
                (false, true) => -sign,
                _ => 0,
            }
        }
    }
}

/// Data attached to a pair `λ ⊲ μ` of big partitions whose β-sets share
/// all but two elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaPairData {
    /// `β_x < β_y` are the elements of `B(μ)` missing from `B(λ)`.
    pub beta_x: i64,
    pub beta_y: i64,
    pub h: i64,
    pub gamma: i64,
    pub delta: i64,
}

impl BetaPairData {
    /// Returns `None` unless `a ≺ b` and the β-sets of the big partitions
    /// meet in exactly `r - 2` elements.
    pub fn new(a: &Multipartition, b: &Multipartition, n: i64, l: usize, mc: &Multicharge) -> Option<Self> {
        if !precedes(a, b, mc, n) {
            return None;
        }
        let (lam, s) = tau_inv(a, mc, n);
        let (mu, _) = tau_inv(b, mc, n);
        let r = lam.size();
        let alpha: BTreeSet<i64> = beta_numbers(&lam, s, r).ok()?.values.into_iter().collect();
        let beta: BTreeSet<i64> = beta_numbers(&mu, s, r).ok()?.values.into_iter().collect();
        let only_mu: Vec<i64> = beta.difference(&alpha).copied().collect();
        let only_lam: Vec<i64> = alpha.difference(&beta).copied().collect();
        let (&[beta_x, beta_y], &[alpha_low, alpha_high]) = (&only_mu[..], &only_lam[..]) else {
            return None;
        };
        let h = alpha_low - beta_x;
        if h <= 0 || beta_y - alpha_high != h {
            return None;
        }
        let period = n * l as i64;
        let (ex, ey) = (decompose(beta_x, n, l), decompose(beta_y, n, l));
        Some(BetaPairData {
            beta_x,
            beta_y,
            h,
            gamma: (ey.c - ex.c).rem_euclid(period),
            delta: (n * (ey.d as i64 - ex.d as i64)).rem_euclid(period),
        })
    }
}

/// `outer / inner` as a ribbon, found by lowering one β-number of `outer`.
fn ribbon_by_beta(inner: &Partition, outer: &Partition, s: i64) -> Option<Ribbon> {
    let r = outer.len();
    let from: BTreeSet<i64> = beta_numbers(outer, s, r).ok()?.values.into_iter().collect();
    let to: BTreeSet<i64> = beta_numbers(inner, s, r).ok()?.values.into_iter().collect();
    let raised: Vec<i64> = from.difference(&to).copied().collect();
    let lowered: Vec<i64> = to.difference(&from).copied().collect();
    let (&[top], &[bottom]) = (&raised[..], &lowered[..]) else {
        return None;
    };
    let row = from.iter().rev().position(|&v| v == top)? + 1;
    let (nu, ribbon) = remove_ribbon_by_beta(outer, row, (top - bottom) as usize, s).ok()?;
    (nu == *inner).then_some(ribbon)
}

/// `j^≺_{ab}` computed from the β-numbers of the big partitions.
pub fn j_entry_beta(a: &Multipartition, b: &Multipartition, n: i64, l: usize, mc: &Multicharge) -> Result<i64> {
    let Some(data) = BetaPairData::new(a, b, n, l, mc) else {
        return Ok(0);
    };
    let period = n * l as i64;
    let d = decompose(data.beta_x, n, l).d;
    let d_prime = decompose(data.beta_y, n, l).d;
    let (rho, rho_prime) = if data.delta > 0 {
        (
            ribbon_by_beta(b.component(d), a.component(d), mc.get(d)),
            ribbon_by_beta(a.component(d_prime), b.component(d_prime), mc.get(d_prime)),
        )
    } else {
        let common = a.component(d).intersection(b.component(d));
        (
            ribbon_by_beta(&common, a.component(d), mc.get(d)),
            ribbon_by_beta(&common, b.component(d), mc.get(d)),
        )
    };
    let (Some(rho), Some(rho_prime)) = (rho, rho_prime) else {
        return Err(Error::NotARibbonPair);
    };
    let sign = height_sign(&rho, &rho_prime);
    let h = data.h.rem_euclid(period);
    let value = if data.delta > 0 {
        if h == data.gamma || h == data.delta {
            sign
        } else {
            0
        }
    } else {
        match (h == data.gamma, h == 0) {
            (true, false) => sign,
            (false, true) => -sign,
            _ => 0,
        }
    };
    Ok(value)
}

/// Strict order gating the entries of `J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gate {
    /// `≺`, via the big partitions.
    Prec,
    /// `⊲` on multipartitions.
    Dom,
}

impl Gate {
    pub fn holds(self, a: &Multipartition, b: &Multipartition, params: &Params) -> bool {
        match self {
            Gate::Prec => precedes(a, b, &params.charge, params.n),
            Gate::Dom => strictly_dominated(a, b),
        }
    }
}

pub fn matrix_j(gate: Gate, params: &Params) -> LabeledMatrix<i64> {
    let order = params.basis();
    let rows: Vec<Vec<i64>> = order
        .par_iter()
        .map(|a| {
            order
                .iter()
                .map(|b| {
                    if gate.holds(a, b, params) {
                        j_entry(a, b, params.n, &params.charge)
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    let mut j = LabeledMatrix::filled(order, 0);
    for (i, row) in rows.into_iter().enumerate() {
        for (k, v) in row.into_iter().enumerate() {
            *j.at_mut(i, k) = v;
        }
    }
    j
}

const ZERO_TOLERANCE: f64 = 1e-9;
const AMBIGUITY_CEILING: f64 = 1e-6;

/// Order of vanishing at `x = ξ` of a function given by its value and
/// derivative there; only orders 0 and 1 are accepted.
fn vanishing_order(value: Complex64, derivative: Complex64) -> Result<i64> {
    let size = value.norm();
    if size >= AMBIGUITY_CEILING {
        return Ok(0);
    }
    if size >= ZERO_TOLERANCE {
        return Err(Error::ToleranceAmbiguity(size));
    }
    if derivative.norm() < AMBIGUITY_CEILING {
        return Err(Error::HigherOrderZero);
    }
    Ok(1)
}

/// `c·ξ^{a}·x^{e}` and its derivative, evaluated at `x = ξ`.
fn monomial_at(xi: Complex64, c: f64, a: i64, e: i64) -> (Complex64, Complex64) {
    let value = xi.powi((a + e) as i32) * c;
    (value, value * (e as f64) / xi)
}

/// `ν_℘(J_{ab})` computed numerically at `ξ = exp(2πi/nl)`, multiplied by
/// the ribbon-height sign. Defined for pairs of type J1 and J2.
pub fn valuation_oracle(a: &Multipartition, b: &Multipartition, n: i64, l: usize, mc: &Multicharge) -> Result<i64> {
    let case = classify(a, b);
    let (rho, rho_prime, h) = case.ribbons().ok_or(Error::NotARibbonPair)?;
    let li = l as i64;
    let xi = Complex64::from_polar(1.0, std::f64::consts::TAU / (n * li) as f64);
    let order = match &case {
        PairCase::J1 { d, d_prime, .. } => {
            // u_d x^{l(j-i)} - u_{d'} x^{l(j'-i')} with u_d = ξ^{nd} x^{l s_d - nd}
            let term = |comp: usize, ribbon: &Ribbon, c: f64| {
                let d = comp as i64;
                monomial_at(xi, c, n * d, li * mc.get(comp) - n * d + li * ribbon.head.diagonal())
            };
            let (v1, d1) = term(*d, rho, 1.0);
            let (v2, d2) = term(*d_prime, rho_prime, -1.0);
            vanishing_order(v1 + v2, d1 + d2)?
        }
        _ => {
            // (x^{l(cont hd ρ' - cont hd ρ)} - 1) / (x^{l h} - 1)
            let gap = node_content(&rho_prime.head, mc) - node_content(&rho.head, mc);
            let (nv, nd) = monomial_at(xi, 1.0, 0, li * gap);
            let (dv, dd) = monomial_at(xi, 1.0, 0, li * h as i64);
            let one = Complex64::new(1.0, 0.0);
            vanishing_order(nv - one, nd)? - vanishing_order(dv - one, dd)?
        }
    };
    Ok(height_sign(rho, rho_prime) * order)
}
