//! Compositions, partitions and skew shapes, with the refinement order and
//! the statistics on refinement pairs that drive the G- and K-matrix entries.
//!
//! Canonical orderings are fixed here once and used everywhere: compositions
//! of n are listed by the binary encoding of their partial-sum sets (position
//! 1 is the most significant bit), partitions in descending lexicographic
//! order, and peak compositions as the subsequence of compositions with no
//! interior part equal to 1.

use crate::error::{Error, Result};
use crate::tpoly::TPoly;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// A cell in a diagram, 1-based `(row, col)` with rows growing downward.
pub type Cell = (usize, usize);

/// Composition: an ordered list of positive parts. The empty composition is
/// the unique composition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<usize>,
}

/// Partition: weakly decreasing positive parts, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Invalid(format!(
                "composition parts must be positive, got {parts:?}"
            )));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Partial sums excluding the total: the subset of [n-1] encoding self.
    pub fn sub(&self) -> Vec<usize> {
        let mut acc = 0;
        self.parts[..self.parts.len().saturating_sub(1)]
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect()
    }

    /// Inverse of `sub`: rebuilds the composition of n with the given
    /// partial-sum set, which must be strictly increasing inside [1, n-1].
    pub fn from_sub(set: &[usize], n: usize) -> Result<Self> {
        for w in set.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Invalid(format!(
                    "partial-sum set must be strictly increasing, got {set:?}"
                )));
            }
        }
        if let (Some(&lo), Some(&hi)) = (set.first(), set.last()) {
            if lo == 0 || hi >= n {
                return Err(Error::Invalid(format!(
                    "partial-sum set {set:?} has elements outside [1, {}]",
                    n.saturating_sub(1)
                )));
            }
        }
        if n == 0 {
            return Ok(Composition::empty());
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &s in set {
            parts.push(s - prev);
            prev = s;
        }
        parts.push(n - prev);
        Ok(Composition { parts })
    }

    /// Parses the dotted form `"3.2.1"`; a single number is one part.
    pub fn parse_dotted(text: &str) -> Result<Self> {
        let parts = text
            .split('.')
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad composition part \"{tok}\"")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }

    /// Parts sorted into weakly decreasing order.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}

impl Partition {
    /// Validates weakly decreasing parts; trailing zeros are stripped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Invalid(format!(
                "partition has an interior zero: {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!(
                "partition parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The i-th part with 1-based i, zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 {
            self.parts.get(i - 1).copied().unwrap_or(0)
        } else {
            0
        }
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner
            .parts
            .iter()
            .enumerate()
            .all(|(i, &m)| self.part(i + 1) >= m)
    }

    pub fn to_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
        }
    }

    /// Multiplicity of the part value v.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    pub fn parse_dotted(text: &str) -> Result<Self> {
        let comp = Composition::parse_dotted(text)?;
        Partition::new(comp.parts)
    }
}

/// Compact label for a parts list: digits concatenated when every part is a
/// single digit (`211`), parenthesized comma form otherwise (`(12,3)`).
pub fn parts_label(parts: &[usize]) -> String {
    if parts.is_empty() {
        return "()".into();
    }
    if parts.iter().all(|&p| p <= 9) {
        parts.iter().map(|p| p.to_string()).collect()
    } else {
        let inner = parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!("({inner})")
    }
}

fn display_parts(parts: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{}", parts_label(parts))
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        display_parts(&self.parts, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        display_parts(&self.parts, f)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition({self})")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

/// All compositions of n. Position i of [n-1] lies in the partial-sum set of
/// the k-th composition iff bit n-1-i of k is set, so the list starts at (n)
/// and ends at (1,...,1), and coarsenings always precede their refinements'
/// complements in a fixed, reproducible order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    assert!(n <= 24, "composition list of size 2^{} refused", n - 1);
    let count = 1usize << (n - 1);
    let mut out = Vec::with_capacity(count);
    for mask in 0..count {
        let set: Vec<usize> = (1..n).filter(|i| mask >> (n - 1 - i) & 1 == 1).collect();
        out.push(Composition::from_sub(&set, n).expect("bits encode a valid set"));
    }
    out
}

/// All partitions of n in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// Compositions of n with every part except possibly the last at least 2.
/// These index the peak functions. Subsequence of `compositions_of(n)`.
pub fn peak_compositions(n: usize) -> Vec<Composition> {
    compositions_of(n)
        .into_iter()
        .filter(is_peak_composition)
        .collect()
}

pub fn is_peak_composition(alpha: &Composition) -> bool {
    let l = alpha.len();
    alpha.parts[..l.saturating_sub(1)].iter().all(|&p| p >= 2)
}

/// Is beta a refinement of alpha? Sizes must agree.
pub fn is_finer(beta: &Composition, alpha: &Composition) -> Result<bool> {
    if beta.size() != alpha.size() {
        return Err(Error::Invalid(format!(
            "refinement comparison of compositions of different sizes: |{beta}| = {} vs |{alpha}| = {}",
            beta.size(),
            alpha.size()
        )));
    }
    let bsub: BTreeSet<usize> = beta.sub().into_iter().collect();
    Ok(alpha.sub().iter().all(|s| bsub.contains(s)))
}

/// Breakdown of a refinement: entry i counts the parts of beta obtained by
/// splitting part i of alpha. Requires beta finer than alpha.
pub fn bre(beta: &Composition, alpha: &Composition) -> Result<Composition> {
    if !is_finer(beta, alpha)? {
        return Err(Error::Invalid(format!(
            "{beta} is not a refinement of {alpha}"
        )));
    }
    let mut counts = Vec::with_capacity(alpha.len());
    let mut it = beta.parts.iter();
    for &a in &alpha.parts {
        let mut acc = 0;
        let mut cnt = 0;
        while acc < a {
            acc += it.next().expect("refinement exhausted early");
            cnt += 1;
        }
        debug_assert_eq!(acc, a);
        counts.push(cnt);
    }
    Composition::new(counts)
}

/// s(alpha, beta) = sum over i of i * (Bre(beta, alpha)_i - 1), the exponent
/// attached to a refinement pair in the G-to-F matrix.
pub fn s_stat(alpha: &Composition, beta: &Composition) -> Result<usize> {
    let b = bre(beta, alpha)?;
    Ok(b.parts
        .iter()
        .enumerate()
        .map(|(i, &c)| (i + 1) * (c - 1))
        .sum())
}

/// xi list for a refinement pair: entry j-1 is j when parts j and j+1 of beta
/// come from the same part of alpha, else 0. Indexed by j in [len(beta)-1].
pub fn xi_values(alpha: &Composition, beta: &Composition) -> Result<Vec<usize>> {
    let b = bre(beta, alpha)?;
    // block[j] = which part of alpha the j-th part of beta belongs to
    let mut block = Vec::with_capacity(beta.len());
    for (i, &c) in b.parts.iter().enumerate() {
        block.extend(std::iter::repeat(i).take(c));
    }
    Ok((1..beta.len())
        .map(|j| if block[j - 1] == block[j] { j } else { 0 })
        .collect())
}

/// g(alpha, beta) = sum of the xi values; the exponent in the F-to-G matrix.
pub fn g_stat(alpha: &Composition, beta: &Composition) -> Result<usize> {
    Ok(xi_values(alpha, beta)?.into_iter().sum())
}

/// The k polynomial pairing a peak composition alpha with beta: a product
/// over sub(beta) = {b_1 < ... < b_p} of
///   1 + t^i        when b_i touches no interval [a-1, a] for a in sub(alpha),
///   t^(i-1) + t^i  when b_(i-1) and b_i are the two ends of such an interval,
///   1              otherwise.
/// Returns zero when sub(alpha) is not inside sub(beta) union (sub(beta)+1),
/// matching the vanishing of the matrix entry. Alpha must be a peak
/// composition of the same size as beta.
pub fn k_poly(alpha: &Composition, beta: &Composition) -> Result<TPoly> {
    if !is_peak_composition(alpha) {
        return Err(Error::Invalid(format!(
            "{alpha} has an interior part 1, so k is undefined"
        )));
    }
    if alpha.size() != beta.size() {
        return Err(Error::Invalid(format!(
            "k on compositions of different sizes: {alpha} vs {beta}"
        )));
    }
    let a_set: BTreeSet<usize> = alpha.sub().into_iter().collect();
    let b_list = beta.sub();
    let b_set: BTreeSet<usize> = b_list.iter().copied().collect();
    if !a_set
        .iter()
        .all(|&a| b_set.contains(&a) || (a >= 1 && b_set.contains(&(a - 1))))
    {
        return Ok(TPoly::zero());
    }
    let mut prod = TPoly::one();
    for (idx, &b) in b_list.iter().enumerate() {
        let i = idx + 1;
        let factor = if !a_set.contains(&b) && !a_set.contains(&(b + 1)) {
            &TPoly::monomial(1, 0) + &TPoly::monomial(1, i)
        } else if a_set.contains(&b) && idx >= 1 && b_list[idx - 1] == b - 1 {
            &TPoly::monomial(1, i - 1) + &TPoly::monomial(1, i)
        } else {
            continue;
        };
        prod = &prod * &factor;
    }
    Ok(prod)
}

/// Skew shape: a pair of partitions with the inner contained in the outer.
/// The straight case has an empty inner partition.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Invalid(format!(
                "inner shape {inner} is not contained in outer shape {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of cells in the skew diagram.
    pub fn n_cells(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells in row-major order (rows top to bottom, columns left to right).
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.n_cells());
        for i in 1..=self.outer.len() {
            for j in self.inner.part(i) + 1..=self.outer.part(i) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        let (i, j) = cell;
        i >= 1 && j >= 1 && j > self.inner.part(i) && j <= self.outer.part(i)
    }

    /// Parses `"3.2/1"`: dotted outer partition, optional `/` dotted inner.
    pub fn parse(text: &str) -> Result<Self> {
        let mut pieces = text.splitn(2, '/');
        let outer = Partition::parse_dotted(pieces.next().unwrap_or(""))?;
        let inner = match pieces.next() {
            Some(inner_text) => Partition::parse_dotted(inner_text)?,
            None => Partition::empty(),
        };
        SkewShape::new(outer, inner)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dotted = |p: &Partition| {
            p.parts()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(".")
        };
        write!(f, "{}", dotted(&self.outer))?;
        if !self.inner.is_empty() {
            write!(f, "/{}", dotted(&self.inner))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewShape({self})")
    }
}

/// All partitions contained in `outer`, in no particular order beyond being
/// deterministic. Used to sweep skew shapes of bounded size.
pub fn partitions_inside(outer: &Partition) -> Vec<Partition> {
    fn rec(outer: &[usize], row: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == outer.len() {
            out.push(Partition::new(prefix.clone()).expect("weakly decreasing by construction"));
            return;
        }
        for v in (0..=outer[row].min(cap)).rev() {
            prefix.push(v);
            rec(outer, row + 1, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(outer.parts(), 0, usize::MAX, &mut Vec::new(), &mut out);
    out
}
