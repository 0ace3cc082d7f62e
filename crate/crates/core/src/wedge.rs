//! q-wedge words, their straightening into ordered words, and the bar
//! involution on a degree-`m` Fock component.
//!
//! Words are finite prefixes of semi-infinite wedges. Straightening only
//! touches the prefix: every rewrite keeps the two letters it produces
//! inside the closed interval spanned by the letters it consumed, so the
//! frozen tail below the prefix never takes part.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use dashmap::DashMap;
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::charge::{
    beta_numbers, c_word, d_word, decompose, kappa, partition_from_beta, tau, tau_inv, v_length, BetaWord,
};
use crate::error::{Error, Result};
use crate::laurent::{even_quotient, odd_quotient, LaurentPoly};
use crate::matrix::{LabeledMatrix, Params};
use crate::partitions::Multipartition;

/// A linear combination of ordered words, sorted by word.
pub type NormalForm = Vec<(Vec<i64>, LaurentPoly)>;

/// Rewrites `v_{k1} ∧ v_{k2}` (with `k1 <= k2`) as a combination of
/// ordered pairs `v_a ∧ v_b`, `a > b`.
pub fn rule_expand(k1: i64, k2: i64, n: i64, l: usize) -> Result<Vec<((i64, i64), LaurentPoly)>> {
    if k1 > k2 {
        return Err(Error::NotAnInfraction(k1, k2));
    }
    let period = n * l as i64;
    let (e1, e2) = (decompose(k1, n, l), decompose(k2, n, l));
    let gamma = (e2.c - e1.c).rem_euclid(period);
    let delta = (n * (e2.d as i64 - e1.d as i64)).rem_euclid(period);

    let mut terms: BTreeMap<(i64, i64), LaurentPoly> = BTreeMap::new();
    let mut push = |a: i64, b: i64, coeff: LaurentPoly| {
        if a > b && !coeff.is_zero() {
            *terms.entry((a, b)).or_default() += &coeff;
        }
    };
    let q = LaurentPoly::q_pow;
    // shifted pairs (k2 - shift - period*i, k1 + shift + period*i) while ordered
    let shifted = |shift: i64, start: i64| {
        (start..)
            .map(move |i| (i, k2 - shift - period * i, k1 + shift + period * i))
            .take_while(|&(_, a, b)| a > b)
    };

    match (gamma == 0, delta == 0) {
        (true, true) => push(k2, k1, LaurentPoly::constant(-1)),
        (false, true) => {
            push(k2, k1, -q(-1));
            for (i, a, b) in shifted(0, 1) {
                push(a, b, q(-2 * i + 1) - q(-2 * i - 1));
            }
            for (i, a, b) in shifted(gamma, 0) {
                push(a, b, q(-2 * i - 2) - q(-2 * i));
            }
        }
        (true, false) => {
            push(k2, k1, -q(1));
            for (i, a, b) in shifted(0, 1) {
                push(a, b, q(2 * i - 1) - q(2 * i + 1));
            }
            for (i, a, b) in shifted(delta, 0) {
                push(a, b, q(2 * i + 2) - q(2 * i));
            }
        }
        (false, false) => {
            let q_minus = q(1) - q(-1);
            push(k2, k1, LaurentPoly::constant(-1));
            for (i, a, b) in shifted(0, 1) {
                push(a, b, -(&q_minus * &even_quotient(i)));
            }
            for (i, a, b) in shifted(gamma, 0) {
                push(a, b, -(&q_minus * &odd_quotient(i)));
            }
            for (i, a, b) in shifted(delta, 0) {
                push(a, b, &q_minus * &odd_quotient(i));
            }
            for (i, a, b) in shifted(gamma + delta, 0) {
                push(a, b, &q_minus * &even_quotient(i + 1));
            }
        }
    }
    Ok(terms.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

/// Index of the first adjacent pair `k_i <= k_{i+1}`.
pub fn first_infraction(word: &[i64]) -> Option<usize> {
    word.windows(2).position(|w| w[0] <= w[1])
}

/// Counters for the conservation laws every rewrite must respect.
#[derive(Debug, Default)]
pub struct ConservationStats {
    pub rewrites: AtomicUsize,
    pub degree_violations: AtomicUsize,
    pub interval_violations: AtomicUsize,
    pub residue_violations: AtomicUsize,
}

impl ConservationStats {
    pub fn violations(&self) -> usize {
        self.degree_violations.load(Ordering::Relaxed)
            + self.interval_violations.load(Ordering::Relaxed)
            + self.residue_violations.load(Ordering::Relaxed)
    }
}

/// Straightens words by repeatedly rewriting the first infraction.
///
/// Every infraction inside a prefix `u` lies to the left of the pair formed
/// by the last letter of `u` and the next letter `y`, so the normal form of
/// `u ∧ y` is obtained by straightening `u` first and then inserting `y`
/// into each ordered word of the result. Inserting into an ordered word
/// `W' ∧ w` with `w <= y` rewrites `(w, y)` into pairs `(a, b)` and inserts
/// `a` into `W'` and then `b` into each result. Insertions are memoized by
/// the word `W ∧ y`; only the letters of `W` not exceeding `y` take part,
/// the others are left alone.
///
/// The cache may be shared between threads; concurrent inserts of the same
/// key always carry the same value.
pub struct Straightener {
    n: i64,
    l: usize,
    cache: Option<DashMap<Vec<i64>, Arc<NormalForm>>>,
    stats: ConservationStats,
}

impl Straightener {
    pub fn new(n: i64, l: usize) -> Self {
        Straightener {
            n,
            l,
            cache: Some(DashMap::new()),
            stats: ConservationStats::default(),
        }
    }

    /// A straightener that recomputes every insertion.
    pub fn without_cache(n: i64, l: usize) -> Self {
        Straightener {
            cache: None,
            ..Straightener::new(n, l)
        }
    }

    pub fn stats(&self) -> &ConservationStats {
        &self.stats
    }

    pub fn cached_words(&self) -> usize {
        self.cache.as_ref().map_or(0, DashMap::len)
    }

    /// Normal form of `v_word` in the basis of ordered words.
    pub fn straighten(&self, word: &[i64]) -> Arc<NormalForm> {
        let mut state: BTreeMap<Vec<i64>, LaurentPoly> = BTreeMap::new();
        state.insert(Vec::new(), LaurentPoly::one());
        for &y in word {
            let mut next = BTreeMap::new();
            for (ordered, coeff) in &state {
                accumulate(&mut next, coeff, &self.insert(ordered, y));
            }
            state = next;
        }
        Arc::new(state.into_iter().collect())
    }

    /// Normal form of `ordered ∧ y` for an ordered word `ordered`.
    fn insert(&self, ordered: &[i64], y: i64) -> Arc<NormalForm> {
        let split = ordered.partition_point(|&w| w > y);
        let (high, low) = ordered.split_at(split);
        let tail = self.insert_low(low, y);
        if high.is_empty() {
            return tail;
        }
        Arc::new(
            tail.iter()
                .map(|(w, c)| {
                    let mut full = high.to_vec();
                    full.extend_from_slice(w);
                    (full, c.clone())
                })
                .collect(),
        )
    }

    /// `insert` for an ordered word whose letters are all `<= y`.
    fn insert_low(&self, low: &[i64], y: i64) -> Arc<NormalForm> {
        let Some((&w, rest)) = low.split_last() else {
            return Arc::new(vec![(vec![y], LaurentPoly::one())]);
        };
        let key = || {
            let mut key = low.to_vec();
            key.push(y);
            key
        };
        if let Some(cache) = &self.cache {
            if let Some(hit) = cache.get(&key()) {
                return Arc::clone(hit.value());
            }
        }
        let rules = rule_expand(w, y, self.n, self.l).expect("letters of low do not exceed y");
        let mut acc = BTreeMap::new();
        for ((a, b), coeff) in rules {
            self.check_conservation(w, y, a, b);
            for (v, c) in self.insert(rest, a).iter() {
                let scaled = &coeff * c;
                accumulate(&mut acc, &scaled, &self.insert(v, b));
            }
        }
        let nf: Arc<NormalForm> = Arc::new(acc.into_iter().collect());
        if let Some(cache) = &self.cache {
            cache.insert(key(), Arc::clone(&nf));
        }
        nf
    }

    fn check_conservation(&self, k1: i64, k2: i64, a: i64, b: i64) {
        self.stats.rewrites.fetch_add(1, Ordering::Relaxed);
        let n = self.n;
        if a + b != k1 + k2 {
            self.stats.degree_violations.fetch_add(1, Ordering::Relaxed);
        }
        if a.max(b) > k2 || a.min(b) < k1 {
            self.stats.interval_violations.fetch_add(1, Ordering::Relaxed);
        }
        let mut before = [k1.rem_euclid(n), k2.rem_euclid(n)];
        let mut after = [a.rem_euclid(n), b.rem_euclid(n)];
        before.sort_unstable();
        after.sort_unstable();
        if before != after {
            self.stats.residue_violations.fetch_add(1, Ordering::Relaxed);
        }
        debug_assert_eq!(a + b, k1 + k2, "degree not conserved");
        debug_assert!(a.max(b) <= k2 && a.min(b) >= k1, "rewrite left its interval");
        debug_assert_eq!(before, after, "residues not conserved");
    }
}

fn accumulate(acc: &mut BTreeMap<Vec<i64>, LaurentPoly>, coeff: &LaurentPoly, nf: &NormalForm) {
    for (word, c) in nf {
        let entry = acc.entry(word.clone()).or_default();
        entry.add_scaled(coeff, c);
        if entry.is_zero() {
            acc.remove(word);
        }
    }
}

fn sign(parity: usize) -> i64 {
    if parity.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Image of the standard basis vector `|μ_l, s_l⟩` under the bar
/// involution, expanded in the standard basis of the same component.
pub fn bar_standard(
    mu: &Multipartition,
    params: &Params,
    straightener: &Straightener,
) -> Result<BTreeMap<Multipartition, LaurentPoly>> {
    let (n, l) = (params.n, params.l);
    let (big, s) = tau_inv(mu, &params.charge, n);
    let r = big.size();
    let word = beta_numbers(&big, s, r)?.values;

    let kd = kappa(&d_word(&word, n, l));
    let kc = kappa(&c_word(&word, n, l));
    let mut reversed = word;
    reversed.reverse();
    // u-word -> v-word on the way in
    let lead = sign(kd + v_length(&reversed, n, l));
    let prefactor = LaurentPoly::monomial(lead, kd as i64 - kc as i64);

    let mut out = BTreeMap::new();
    for (ordered, coeff) in straightener.straighten(&reversed).iter() {
        let nu = partition_from_beta(&BetaWord::new(ordered.clone(), s))?;
        let (nu_l, found) = tau(&nu, s, n, l);
        if found != params.charge || nu_l.size() != params.m {
            return Err(Error::ComponentLeak {
                word: ordered.clone(),
                found: found.entries().to_vec(),
                expected: params.charge.entries().to_vec(),
            });
        }
        // v-word -> u-word on the way out
        let back = BigInt::from(sign(v_length(ordered, n, l)));
        let value = (&prefactor * coeff).scalar_mul(&back);
        if !value.is_zero() {
            out.insert(nu_l, value);
        }
    }
    Ok(out)
}

/// The matrix `A(q)` of the bar involution on the standard basis; column
/// `μ` holds the expansion of the bar image of `|μ⟩`.
pub fn matrix_a(params: &Params) -> Result<LabeledMatrix<LaurentPoly>> {
    let straightener = Straightener::new(params.n, params.l);
    matrix_a_with(params, &straightener)
}

pub fn matrix_a_with(params: &Params, straightener: &Straightener) -> Result<LabeledMatrix<LaurentPoly>> {
    let order = params.basis();
    let columns: Vec<BTreeMap<Multipartition, LaurentPoly>> = order
        .par_iter()
        .map(|mu| bar_standard(mu, params, straightener))
        .collect::<Result<_>>()?;
    let mut a = LabeledMatrix::filled(order.clone(), LaurentPoly::zero());
    for (mu, column) in order.iter().zip(columns) {
        for (lam, value) in column {
            a.set(&lam, mu, value)?;
        }
    }
    Ok(a)
}
