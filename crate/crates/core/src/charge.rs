//! Charges, abaci and the bead-routing bijection between charged partitions
//! and charged `l`-multipartitions.
//!
//! Every integer `k` splits uniquely as `k = c + n(d - 1) + n·l·m` with
//! `c ∈ [1, n]` and `d ∈ [1, l]`. A bead at position `k` of a one-runner
//! abacus is sent to position `φ(k) = c + n·m` on runner `d`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{dominates, Multipartition, Partition};

/// An `l`-tuple of integer charges `(s_1, …, s_l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multicharge(Vec<i64>);

impl Multicharge {
    pub fn new(entries: Vec<i64>) -> Self {
        assert!(!entries.is_empty(), "a multicharge needs at least one entry");
        Multicharge(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    /// `s_b`, 1-based.
    pub fn get(&self, b: usize) -> i64 {
        self.0[b - 1]
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Multicharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The triple `(c, d, m)` with `k = c + n(d - 1) + n·l·m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub c: i64,
    pub d: usize,
    pub m: i64,
}

impl Decomposition {
    pub fn phi(&self, n: i64) -> i64 {
        self.c + n * self.m
    }
}

pub fn decompose(k: i64, n: i64, l: usize) -> Decomposition {
    debug_assert!(n >= 1 && l >= 1);
    let period = n * l as i64;
    let shifted = k - 1;
    let m = shifted.div_euclid(period);
    let rem = shifted.rem_euclid(period);
    Decomposition {
        c: rem % n + 1,
        d: (rem / n) as usize + 1,
        m,
    }
}

/// Inverse of `k ↦ (φ(k), d(k))`.
pub fn compose(phi: i64, d: usize, n: i64, l: usize) -> i64 {
    let c = (phi - 1).rem_euclid(n) + 1;
    let m = (phi - c) / n;
    c + n * (d as i64 - 1) + n * l as i64 * m
}

pub fn phi(k: i64, n: i64, l: usize) -> i64 {
    decompose(k, n, l).phi(n)
}

/// Number of pairs `i < j` with equal letters.
pub fn kappa<T: Ord>(word: &[T]) -> usize {
    let mut sorted: Vec<&T> = word.iter().collect();
    sorted.sort_unstable();
    let mut total = 0;
    let mut run = 0usize;
    for i in 0..sorted.len() {
        if i > 0 && sorted[i] == sorted[i - 1] {
            run += 1;
        } else {
            run = 1;
        }
        total += run - 1;
    }
    total
}

/// Length of the minimal coset representative carrying the decreasingly
/// sorted `d`-word of `word` onto its actual `d`-word: the number of pairs
/// `i < j` with `d(k_i) < d(k_j)`.
pub fn v_length(word: &[i64], n: i64, l: usize) -> usize {
    let ds: Vec<usize> = word.iter().map(|&k| decompose(k, n, l).d).collect();
    let mut seen = vec![0usize; l + 1];
    let mut count = 0;
    // scan right to left, counting larger d's already seen
    for &d in ds.iter().rev() {
        count += seen[d + 1..].iter().sum::<usize>();
        seen[d] += 1;
    }
    count
}

pub fn c_word(word: &[i64], n: i64, l: usize) -> Vec<i64> {
    word.iter().map(|&k| decompose(k, n, l).c).collect()
}

pub fn d_word(word: &[i64], n: i64, l: usize) -> Vec<usize> {
    word.iter().map(|&k| decompose(k, n, l).d).collect()
}

/// A finite list of β-numbers at a fixed charge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaWord {
    pub values: Vec<i64>,
    pub charge: i64,
}

impl BetaWord {
    pub fn new(values: Vec<i64>, charge: i64) -> Self {
        BetaWord { values, charge }
    }
}

/// `(λ_1 + s, λ_2 + s - 1, …, λ_r + s - r + 1)`.
pub fn beta_numbers(p: &Partition, s: i64, r: usize) -> Result<BetaWord> {
    if p.len() > r {
        return Err(Error::TooManyParts { parts: p.len(), rows: r });
    }
    let values = (1..=r).map(|i| p.part(i) as i64 + s - i as i64 + 1).collect();
    Ok(BetaWord::new(values, s))
}

pub fn partition_from_beta(w: &BetaWord) -> Result<Partition> {
    if w.values.windows(2).any(|p| p[0] <= p[1]) {
        return Err(Error::NotStrictlyDecreasing(w.values.clone()));
    }
    let mut parts = Vec::with_capacity(w.values.len());
    for (idx, &b) in w.values.iter().enumerate() {
        let part = b - w.charge + idx as i64;
        if part < 0 {
            return Err(Error::NegativePart {
                word: w.values.clone(),
                charge: w.charge,
            });
        }
        parts.push(part as usize);
    }
    Ok(Partition::new(parts))
}

/// A one-runner abacus: every position `<= floor` holds a bead, and
/// `beads` lists the occupied positions above `floor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Runner {
    pub floor: i64,
    pub beads: BTreeSet<i64>,
}

impl Runner {
    pub fn from_partition(p: &Partition, s: i64) -> Self {
        let floor = s - p.len() as i64;
        let beads = (1..=p.len())
            .map(|i| p.part(i) as i64 + s + 1 - i as i64)
            .collect();
        Runner { floor, beads }
    }

    pub fn contains(&self, k: i64) -> bool {
        k <= self.floor || self.beads.contains(&k)
    }

    /// Reads off the charged partition encoded by this runner.
    pub fn to_partition(&self) -> (Partition, i64) {
        let charge = self.floor + self.beads.len() as i64;
        let parts = self
            .beads
            .iter()
            .rev()
            .enumerate()
            .map(|(idx, &b)| (b - charge + idx as i64) as usize)
            .collect();
        (Partition::new(parts), charge)
    }
}

/// The full abacus of a charged multipartition, one runner per component.
pub fn multi_abacus(mp: &Multipartition, mc: &Multicharge) -> Vec<Runner> {
    mp.components()
        .iter()
        .zip(mc.entries())
        .map(|(p, &s)| Runner::from_partition(p, s))
        .collect()
}

/// Routes the beads of `A(λ, s)` onto `l` runners.
pub fn tau(lam: &Partition, s: i64, n: i64, l: usize) -> (Multipartition, Multicharge) {
    let runner = Runner::from_partition(lam, s);
    let period = n * l as i64;
    // every k with m(k) <= m_low lies at or below the runner floor
    let m_low = (runner.floor - 1).div_euclid(period) - 1;
    let top = n * (m_low + 1);
    let mut targets: Vec<Runner> = (0..l)
        .map(|_| Runner {
            floor: top,
            beads: BTreeSet::new(),
        })
        .collect();
    let k_start = period * (m_low + 1) + 1;
    let k_end = runner.beads.iter().next_back().copied().unwrap_or(runner.floor);
    for k in k_start..=k_end.max(k_start) {
        if runner.contains(k) {
            let dec = decompose(k, n, l);
            targets[dec.d - 1].beads.insert(dec.phi(n));
        }
    }
    let mut comps = Vec::with_capacity(l);
    let mut charges = Vec::with_capacity(l);
    for t in &targets {
        let (p, c) = t.to_partition();
        comps.push(p);
        charges.push(c);
    }
    (Multipartition::new(comps), Multicharge::new(charges))
}

/// Inverse of [`tau`]: merges the runners back into one abacus.
pub fn tau_inv(mp: &Multipartition, mc: &Multicharge, n: i64) -> (Partition, i64) {
    let l = mc.level();
    assert_eq!(mp.level(), l, "multipartition and multicharge levels differ");
    let runners = multi_abacus(mp, mc);
    // every k <= k_floor maps at or below its runner's floor
    let k_floor = runners
        .iter()
        .enumerate()
        .map(|(idx, r)| compose(r.floor, idx + 1, n, l))
        .min()
        .expect("level is positive");
    let k_top = runners
        .iter()
        .enumerate()
        .map(|(idx, r)| {
            let top = r.beads.iter().next_back().copied().unwrap_or(r.floor);
            compose(top, idx + 1, n, l)
        })
        .max()
        .expect("level is positive");
    let mut merged = Runner {
        floor: k_floor,
        beads: BTreeSet::new(),
    };
    for k in k_floor + 1..=k_top {
        let dec = decompose(k, n, l);
        if runners[dec.d - 1].contains(dec.phi(n)) {
            merged.beads.insert(k);
        }
    }
    let (lam, s) = merged.to_partition();
    debug_assert_eq!(s, mc.total());
    (lam, s)
}

/// Strict order `a ≺ b`: the associated big partitions have equal size and
/// the one of `b` strictly dominates the one of `a`.
pub fn precedes(a: &Multipartition, b: &Multipartition, mc: &Multicharge, n: i64) -> bool {
    if a == b {
        return false;
    }
    let (lam, _) = tau_inv(a, mc, n);
    let (mu, _) = tau_inv(b, mc, n);
    lam.is_dominated_by(&mu)
}

/// Strict dominance `a ⊲ b` on multipartitions.
pub fn strictly_dominated(a: &Multipartition, b: &Multipartition) -> bool {
    a != b && dominates(a, b)
}

/// `s_{d+1} - s_d >= bound` for every consecutive pair.
pub fn is_m_dominant(mc: &Multicharge, bound: i64) -> bool {
    mc.entries().windows(2).all(|w| w[1] - w[0] >= bound)
}

/// All partitions of `m`, in decreasing lexicographic order.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(prefix.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// All `l`-multipartitions of total size `m`, in a fixed generation order.
pub fn enumerate_multipartitions(l: usize, m: usize) -> Vec<Multipartition> {
    fn rec(level: usize, rest: usize, prefix: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
        if level == 1 {
            for p in partitions_of(rest) {
                prefix.push(p);
                out.push(Multipartition::new(prefix.clone()));
                prefix.pop();
            }
            return;
        }
        for first in (0..=rest).rev() {
            for p in partitions_of(first) {
                prefix.push(p);
                rec(level - 1, rest - first, prefix, out);
                prefix.pop();
            }
        }
    }
    assert!(l >= 1, "level must be positive");
    let mut out = Vec::new();
    rec(l, m, &mut Vec::new(), &mut out);
    out
}

/// `Π^l_m` sorted by decreasing lexicographic order of the big partitions
/// attached through `mc`. Lexicographic order refines dominance, so this
/// is a linear extension of `≻`.
pub fn display_order(l: usize, m: usize, mc: &Multicharge, n: i64) -> Vec<Multipartition> {
    let mut keyed: Vec<(Partition, Multipartition)> = enumerate_multipartitions(l, m)
        .into_iter()
        .map(|mp| (tau_inv(&mp, mc, n).0, mp))
        .collect();
    keyed.sort_by(|a, b| b.0.cmp_lex(&a.0));
    keyed.into_iter().map(|(_, mp)| mp).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn mp(comps: &[&[usize]]) -> Multipartition {
        Multipartition::new(comps.iter().map(|c| p(c)).collect())
    }

    fn mc(v: &[i64]) -> Multicharge {
        Multicharge::new(v.to_vec())
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(12, 3, 2), Decomposition { c: 3, d: 2, m: 1 });
        assert_eq!(decompose(-5, 3, 2), Decomposition { c: 1, d: 1, m: -1 });
        assert_eq!(decompose(1, 4, 3), Decomposition { c: 1, d: 1, m: 0 });
        let ks = [12, -5, 2, 17];
        assert_eq!(c_word(&ks, 3, 2), vec![3, 1, 2, 2]);
        assert_eq!(d_word(&ks, 3, 2), vec![2, 1, 1, 2]);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(12, 3, 2), 6);
        assert_eq!(phi(-5, 3, 2), -2);
        for c in 1..=3 {
            assert_eq!(phi(c, 3, 2), c);
        }
    }

    #[test]
    fn compose_inverts_decompose() {
        for k in -60..60 {
            let dec = decompose(k, 3, 4);
            assert_eq!(compose(dec.phi(3), dec.d, 3, 4), k);
        }
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(&[2, 1, 1, 2]), 2);
        assert_eq!(kappa(&[4, 3, 1]), 0);
        assert_eq!(kappa(&[5, 5, 5]), 3);
        assert_eq!(kappa::<i64>(&[]), 0);
    }

    #[test]
    fn v_length_examples() {
        assert_eq!(v_length(&[12, -5, 2, 17], 3, 2), 2);
        assert_eq!(v_length(&[1, 2, 3, 7], 3, 2), 0);
        // d-word (1, 2)
        assert_eq!(v_length(&[1, 4], 3, 2), 1);
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta_numbers(&p(&[6, 5, 3, 2, 2]), 4, 5).unwrap().values, vec![10, 8, 5, 3, 2]);
        assert_eq!(beta_numbers(&p(&[6, 2, 2, 2, 2]), 4, 5).unwrap().values, vec![10, 5, 4, 3, 2]);
        assert_eq!(beta_numbers(&Partition::empty(), 0, 3).unwrap().values, vec![0, -1, -2]);
        assert!(matches!(
            beta_numbers(&p(&[1, 1]), 0, 1),
            Err(Error::TooManyParts { .. })
        ));
    }

    #[test]
    fn partition_from_beta_examples() {
        assert_eq!(
            partition_from_beta(&BetaWord::new(vec![10, 8, 5, 3, 2], 4)).unwrap(),
            p(&[6, 5, 3, 2, 2])
        );
        assert_eq!(
            partition_from_beta(&BetaWord::new(vec![0, -1, -2], 0)).unwrap(),
            Partition::empty()
        );
        assert!(matches!(
            partition_from_beta(&BetaWord::new(vec![3, 3, 1], 2)),
            Err(Error::NotStrictlyDecreasing(_))
        ));
        assert!(matches!(
            partition_from_beta(&BetaWord::new(vec![0, -3], 1)),
            Err(Error::NegativePart { .. })
        ));
    }

    #[test]
    fn tau_examples() {
        let (m, c) = tau(&p(&[4, 3, 3, 2, 1]), -1, 2, 3);
        assert_eq!(m, mp(&[&[1, 1], &[1, 1], &[1]]));
        assert_eq!(c, mc(&[0, 0, -1]));

        for (n, l) in [(2, 3), (3, 2), (1, 1), (4, 1)] {
            let (m, c) = tau(&Partition::empty(), 0, n, l);
            assert_eq!(m, Multipartition::empty(l));
            assert_eq!(c, Multicharge::new(vec![0; l]));
        }

        // level one: tau is the identity
        for s in -3..=3 {
            for lam in partitions_of(5) {
                let (m, c) = tau(&lam, s, 3, 1);
                assert_eq!(m, Multipartition::from(lam.clone()));
                assert_eq!(c, mc(&[s]));
            }
        }
    }

    #[test]
    fn tau_inv_examples() {
        assert_eq!(
            tau_inv(&mp(&[&[1, 1], &[1, 1], &[1]]), &mc(&[0, 0, -1]), 2),
            (p(&[4, 3, 3, 2, 1]), -1)
        );
        assert_eq!(
            tau_inv(&Multipartition::empty(3), &mc(&[0, 0, 0]), 2),
            (Partition::empty(), 0)
        );
    }

    #[test]
    fn precedes_examples() {
        assert!(precedes(&mp(&[&[2], &[1]]), &mp(&[&[3], &[]]), &mc(&[1, 0]), 3));
        let a = mp(&[&[2, 1], &[1, 1, 1]]);
        let b = mp(&[&[3], &[2, 1]]);
        assert!(!precedes(&a, &b, &mc(&[3, -3]), 2));
        assert!(!precedes(&b, &a, &mc(&[3, -3]), 2));
        assert!(!precedes(&a, &a, &mc(&[3, -3]), 2));
    }

    #[test]
    fn dominance_gap_examples() {
        assert!(!is_m_dominant(&mc(&[4, -3]), 3));
        assert!(is_m_dominant(&mc(&[-3, 4]), 3));
        assert!(is_m_dominant(&mc(&[5]), 100));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_multipartitions(2, 3).len(), 10);
        assert_eq!(enumerate_multipartitions(2, 1).len(), 2);
        assert_eq!(enumerate_multipartitions(1, 0), vec![Multipartition::empty(1)]);
        assert_eq!(enumerate_multipartitions(3, 4).len(), 51);
        let order = display_order(2, 3, &mc(&[1, 0]), 3);
        assert_eq!(order.len(), 10);
    }
}
