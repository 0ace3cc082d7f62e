//! Young-diagram combinatorics: partitions, multipartitions, nodes, contents
//! and ribbons.
//!
//! Rows, columns and component indices of nodes are 1-based, matching the
//! usual `(i, j, b)` labelling of boxes.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::charge::Multicharge;
use crate::error::{Error, Result};

/// A partition stored as its nonzero parts in weakly decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", from = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from arbitrary parts: sorts them decreasingly and
    /// drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part (1-based), zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|i| self.0.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition(parts)
    }

    /// Diagram containment `self ⊂ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Row-wise minimum, i.e. the intersection of the two diagrams.
    pub fn intersection(&self, other: &Partition) -> Partition {
        Partition::new(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Non-strict dominance `self ⊴ other`; false when sizes differ.
    pub fn is_dominated_by(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let rows = self.len().max(other.len());
        let mut lhs = 0;
        let mut rhs = 0;
        for i in 1..=rows {
            lhs += self.part(i);
            rhs += other.part(i);
            if lhs > rhs {
                return false;
            }
        }
        true
    }

    /// Nodes of the diagram, row by row, in component `comp`.
    pub fn nodes(&self, comp: usize) -> Vec<Node> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Node::new(i + 1, j, comp)))
            .collect()
    }

    /// Compares zero-padded part sequences lexicographically.
    pub fn cmp_lex(&self, other: &Partition) -> Ordering {
        let rows = self.len().max(other.len());
        (1..=rows)
            .map(|i| self.part(i).cmp(&other.part(i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

impl From<Vec<usize>> for Partition {
    fn from(parts: Vec<usize>) -> Self {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// An `l`-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Multipartition(components)
    }

    pub fn empty(level: usize) -> Self {
        Multipartition(vec![Partition::empty(); level])
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    /// Component `b`, 1-based.
    pub fn component(&self, b: usize) -> &Partition {
        &self.0[b - 1]
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    /// Reverses the component order and conjugates each component.
    pub fn conjugate(&self) -> Multipartition {
        Multipartition(self.0.iter().rev().map(Partition::conjugate).collect())
    }

    pub fn nodes(&self) -> Vec<Node> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(b, p)| p.nodes(b + 1))
            .collect()
    }
}

impl From<Partition> for Multipartition {
    fn from(p: Partition) -> Self {
        Multipartition(vec![p])
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

pub fn conjugate_multi(mp: &Multipartition) -> Multipartition {
    mp.conjugate()
}

/// Returns true when `upper` dominates `lower`, i.e. `lower ⊴ upper`.
///
/// Component sizes are accumulated left to right, so boxes in earlier
/// components weigh more. Multipartitions of different size are never
/// comparable.
pub fn dominates(lower: &Multipartition, upper: &Multipartition) -> bool {
    assert_eq!(lower.level(), upper.level(), "level mismatch");
    if lower.size() != upper.size() {
        return false;
    }
    let mut base_lower = 0;
    let mut base_upper = 0;
    for (a, b) in lower.components().iter().zip(upper.components()) {
        let rows = a.len().max(b.len());
        let mut lhs = base_lower;
        let mut rhs = base_upper;
        for i in 1..=rows {
            lhs += a.part(i);
            rhs += b.part(i);
            if lhs > rhs {
                return false;
            }
        }
        base_lower += a.size();
        base_upper += b.size();
        if base_lower > base_upper {
            return false;
        }
    }
    true
}

/// A box `(row, col, comp)` of a (multi)partition diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        Node { row, col, comp }
    }

    /// `j - i`, the diagonal index ignoring the charge.
    pub fn diagonal(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// `s_b + j - i`.
pub fn node_content(node: &Node, charges: &Multicharge) -> i64 {
    charges.get(node.comp) + node.diagonal()
}

/// Number of nodes in each residue class `0..n` of their content.
pub fn residue_counts(shape: &[Node], charges: &Multicharge, n: usize) -> Vec<usize> {
    assert!(n >= 1, "modulus must be positive");
    let mut counts = vec![0; n];
    for node in shape {
        counts[node_content(node, charges).rem_euclid(n as i64) as usize] += 1;
    }
    counts
}

/// A connected skew diagram without 2×2 blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ribbon {
    pub cells: Vec<Node>,
    /// Cell with minimal `j - i`.
    pub head: Node,
    /// Cell with maximal `j - i`.
    pub tail: Node,
    pub length: usize,
    pub height: usize,
}

impl Ribbon {
    /// The same ribbon relabelled into component `comp`.
    pub fn in_component(mut self, comp: usize) -> Ribbon {
        for c in &mut self.cells {
            c.comp = comp;
        }
        self.head.comp = comp;
        self.tail.comp = comp;
        self
    }
}

/// Cells of `outer / inner`, row by row. Assumes `inner ⊂ outer`.
pub fn skew_cells(inner: &Partition, outer: &Partition) -> Vec<Node> {
    (1..=outer.len())
        .flat_map(|i| (inner.part(i) + 1..=outer.part(i)).map(move |j| Node::new(i, j, 1)))
        .collect()
}

/// Returns `outer / inner` when it is a ribbon.
pub fn extract_ribbon(inner: &Partition, outer: &Partition) -> Option<Ribbon> {
    if !inner.is_contained_in(outer) {
        return None;
    }
    // Row spans [lo, hi] of the skew shape, top to bottom.
    let spans: Vec<(usize, usize, usize)> = (1..=outer.len())
        .filter(|&i| outer.part(i) > inner.part(i))
        .map(|i| (i, inner.part(i) + 1, outer.part(i)))
        .collect();
    let (first, last) = (spans.first()?, spans.last()?);
    for pair in spans.windows(2) {
        let (r0, lo0, _) = pair[0];
        let (r1, _, hi1) = pair[1];
        // consecutive rows must share exactly one column
        if r1 != r0 + 1 || hi1 != lo0 {
            return None;
        }
    }
    let head = Node::new(last.0, last.1, 1);
    let tail = Node::new(first.0, first.2, 1);
    let cells = skew_cells(inner, outer);
    Some(Ribbon {
        length: cells.len(),
        height: head.row - tail.row,
        cells,
        head,
        tail,
    })
}

/// Removes the ribbon whose tail lies in row `tail_row` by lowering the
/// corresponding β-number of `kappa` by `h`.
///
/// β-numbers are taken at charge `s` with one entry per part of `kappa`.
/// The height of the removed ribbon is the number of β-numbers the moved
/// bead jumps over, and its head has content `β_b - h`.
pub fn remove_ribbon_by_beta(
    kappa: &Partition,
    tail_row: usize,
    h: usize,
    s: i64,
) -> Result<(Partition, Ribbon)> {
    if h == 0 {
        return Err(Error::EmptyRibbon);
    }
    let r = kappa.len();
    if tail_row == 0 || tail_row > r {
        return Err(Error::RowOutOfRange { row: tail_row, len: r });
    }
    let beta = crate::charge::beta_numbers(kappa, s, r)?;
    let from = beta.values[tail_row - 1];
    let to = from - h as i64;
    let floor = s + 1 - r as i64;
    if to < floor {
        return Err(Error::BeadBelowFloor { to, floor });
    }
    if beta.values.contains(&to) {
        return Err(Error::BeadCollision { from, to });
    }
    let height = beta.values[tail_row..].iter().filter(|&&b| b > to).count();
    let mut moved = beta.values.clone();
    moved[tail_row - 1] = to;
    moved.sort_unstable_by(|a, b| b.cmp(a));
    let nu = crate::charge::partition_from_beta(&crate::charge::BetaWord::new(moved, s))?;

    let head_row = tail_row + height;
    let head = Node::new(head_row, nu.part(head_row) + 1, 1);
    let tail = Node::new(tail_row, kappa.part(tail_row), 1);
    let cells = skew_cells(&nu, kappa);
    Ok((
        nu,
        Ribbon {
            length: cells.len(),
            cells,
            head,
            tail,
            height,
        },
    ))
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

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 3, 3, 2, 1]).conjugate(), p(&[5, 4, 3, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
    }

    #[test]
    fn conjugate_multi_examples() {
        assert_eq!(mp(&[&[2, 1], &[1]]).conjugate(), mp(&[&[1], &[2, 1]]));
        assert_eq!(mp(&[&[3], &[]]).conjugate(), mp(&[&[], &[1, 1, 1]]));
        assert_eq!(mp(&[&[], &[]]).conjugate(), mp(&[&[], &[]]));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p(&[1, 1, 1]).into(), &p(&[3]).into()));
        assert!(dominates(&mp(&[&[1], &[2]]), &mp(&[&[2], &[1]])));
        assert!(!dominates(&p(&[3]).into(), &p(&[2, 2]).into()));
        assert!(!dominates(&mp(&[&[2], &[1]]), &mp(&[&[1], &[2]])));
    }

    #[test]
    fn content_examples() {
        let c = Multicharge::new(vec![1, 0]);
        assert_eq!(node_content(&Node::new(1, 1, 1), &c), 1);
        assert_eq!(node_content(&Node::new(2, 1, 2), &c), -1);
        let c = Multicharge::new(vec![4, -3]);
        assert_eq!(node_content(&Node::new(3, 3, 1), &c), 4);
    }

    #[test]
    fn residue_count_examples() {
        let c = Multicharge::new(vec![0]);
        assert_eq!(residue_counts(&[], &c, 3), vec![0, 0, 0]);
        assert_eq!(residue_counts(&[Node::new(1, 3, 1)], &c, 3), vec![0, 0, 1]);
        // horizontal strip of length 3 = ribbon hitting every class once
        let strip = skew_cells(&p(&[1]), &p(&[4]));
        assert_eq!(residue_counts(&strip, &c, 3), vec![1, 1, 1]);
    }

    #[test]
    fn extract_ribbon_examples() {
        let r = extract_ribbon(&p(&[6, 2, 2, 2, 2]), &p(&[6, 5, 3, 2, 2])).unwrap();
        assert_eq!(r.length, 4);
        assert_eq!(r.height, 1);
        assert_eq!(r.head, Node::new(3, 3, 1));
        assert_eq!(r.tail, Node::new(2, 5, 1));

        let r = extract_ribbon(&p(&[2]), &p(&[2, 1])).unwrap();
        assert_eq!((r.length, r.height), (1, 0));
        assert_eq!(r.head, Node::new(2, 1, 1));
        assert_eq!(r.tail, r.head);

        assert_eq!(extract_ribbon(&p(&[1]), &p(&[3, 2])).unwrap().height, 1);
        assert!(extract_ribbon(&p(&[]), &p(&[2, 2])).is_none());
        assert!(extract_ribbon(&p(&[2]), &p(&[2])).is_none());
        // disconnected
        assert!(extract_ribbon(&p(&[1]), &p(&[2, 1])).is_none());
        // not contained
        assert!(extract_ribbon(&p(&[3]), &p(&[2, 2])).is_none());
    }

    #[test]
    fn remove_ribbon_examples() {
        let (nu, r) = remove_ribbon_by_beta(&p(&[6, 5, 3, 2, 2]), 2, 4, 4).unwrap();
        assert_eq!(nu, p(&[6, 2, 2, 2, 2]));
        assert_eq!(r.height, 1);
        assert_eq!(node_content(&r.head, &Multicharge::new(vec![4])), 4);

        let (nu, r) = remove_ribbon_by_beta(&p(&[1]), 1, 1, 0).unwrap();
        assert_eq!(nu, Partition::empty());
        assert_eq!(r.height, 0);
        assert_eq!(node_content(&r.head, &Multicharge::new(vec![0])), 0);

        assert!(matches!(
            remove_ribbon_by_beta(&p(&[2, 2]), 1, 1, 0),
            Err(Error::BeadCollision { .. })
        ));
        assert!(matches!(
            remove_ribbon_by_beta(&p(&[2]), 1, 3, 0),
            Err(Error::BeadBelowFloor { .. })
        ));
    }
}
