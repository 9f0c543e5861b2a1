//! Integer partitions and their Young-diagram combinatorics.
//!
//! Partitions index every basis in this crate: power sums, monomial and
//! Jack symmetric functions, and creation-operator monomials in Fock
//! modules.  Provided here:
//!
//! - [`Partition`]: weakly decreasing positive parts, with conjugation,
//!   containment, dominance order and cell statistics (arm, leg, coarm,
//!   coleg)
//! - [`Partition::add_rectangle`]: the shift `lambda + [m^n]`
//! - [`subpartitions_of_rectangle`] / [`subpartitions_of`]: bounded
//!   enumerations in a fixed lexicographic order
//! - [`partitions_of`]: all partitions of a given weight
//!
//! The total order on partitions is graded reverse-lexicographic, which
//! refines dominance within each weight; enumeration orders are fixed so
//! output is reproducible.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// A partition: a weakly decreasing sequence of positive integers.
///
/// The empty partition is a first-class value; it indexes the constant
/// symmetric function 1 and the bare highest-weight vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts, sorting and dropping zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Builds from parts already weakly decreasing and positive.
    pub fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle `[m^n]`: `n` parts equal to `m`.  Empty when `m = 0`
    /// or `n = 0`.
    pub fn rectangle(m: u32, n: usize) -> Self {
        if m == 0 {
            Partition::empty()
        } else {
            Partition {
                parts: vec![m; n],
            }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part at 1-based row `i`, reading 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.parts.get(i - 1).copied().unwrap_or(0)
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The weight `|lambda|`.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Multiplicity of the value `v` among the parts.
    pub fn multiplicity(&self, v: u32) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut out = Vec::with_capacity(cols);
        for j in 1..=cols {
            out.push(self.parts.iter().filter(|&&p| p as usize >= j).count() as u32);
        }
        Partition { parts: out }
    }

    /// Dominance order within a weight class: true iff every partial sum
    /// of `self` is at least the corresponding partial sum of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        let (wa, wb) = (self.weight(), other.weight());
        if wa != wb {
            return Err(Error::DominanceAcrossWeights(wa, wb));
        }
        let mut sa: u64 = 0;
        let mut sb: u64 = 0;
        for i in 0..self.parts.len().max(other.parts.len()) {
            sa += self.part(i + 1) as u64;
            sb += other.part(i + 1) as u64;
            if sa < sb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_cell(&self, row: usize, col: usize) -> Result<()> {
        if row == 0 || col == 0 || col > self.part(row) as usize {
            return Err(Error::CellNotInDiagram(row, col));
        }
        Ok(())
    }

    /// Arm length `a(s) = lambda_i - j` of the cell `s = (i, j)`, 1-based.
    pub fn arm(&self, row: usize, col: usize) -> Result<u32> {
        self.check_cell(row, col)?;
        Ok(self.part(row) - col as u32)
    }

    /// Leg length `l(s) = lambda'_j - i`.
    pub fn leg(&self, row: usize, col: usize) -> Result<u32> {
        self.check_cell(row, col)?;
        let col_height = self.parts.iter().filter(|&&p| p as usize >= col).count();
        Ok(col_height as u32 - row as u32)
    }

    /// Arm colength `a'(s) = j - 1`.
    pub fn coarm(&self, row: usize, col: usize) -> Result<u32> {
        self.check_cell(row, col)?;
        Ok(col as u32 - 1)
    }

    /// Leg colength `l'(s) = i - 1`.
    pub fn coleg(&self, row: usize, col: usize) -> Result<u32> {
        self.check_cell(row, col)?;
        Ok(row as u32 - 1)
    }

    /// Iterates over the cells `(row, col)` of the diagram, 1-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    /// Diagram containment: `mu <= lambda` rowwise.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i + 1) >= p)
    }

    /// `lambda + [m^n]`: adds `m` to the first `n` rows (missing rows read
    /// as 0).  Requires `len(lambda) <= n`.
    pub fn add_rectangle(&self, m: u32, n: usize) -> Result<Partition> {
        if self.len() > n {
            return Err(Error::LengthExceedsRectangleHeight(self.len(), n));
        }
        if m == 0 {
            return Ok(self.clone());
        }
        let mut parts = Vec::with_capacity(n);
        for i in 1..=n {
            parts.push(self.part(i) + m);
        }
        Ok(Partition { parts })
    }

    /// Merge with another partition (multiset union of parts).
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Remove one part equal to `v`; None if absent.
    pub fn remove_part(&self, v: u32) -> Option<Partition> {
        let idx = self.parts.iter().position(|&p| p == v)?;
        let mut parts = self.parts.clone();
        parts.remove(idx);
        Some(Partition { parts })
    }

    /// Insert a part, keeping the decreasing order.
    pub fn insert_part(&self, v: u32) -> Partition {
        debug_assert!(v > 0);
        let idx = self.parts.partition_point(|&p| p >= v);
        let mut parts = self.parts.clone();
        parts.insert(idx, v);
        Partition { parts }
    }

    /// Bitmask of part values present (bit `min(v, 63)` set when some part
    /// equals `v`); a conservative pre-filter for mode actions.
    pub fn value_mask(&self) -> u64 {
        let mut mask = 0u64;
        for &p in &self.parts {
            mask |= 1 << p.min(63);
        }
        mask
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    /// Graded reverse-lexicographic: first by weight, then by the first
    /// differing part (larger part wins).  Within a weight class this
    /// refines dominance.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| {
                for i in 0..self.parts.len().max(other.parts.len()) {
                    let ord = self.part(i + 1).cmp(&other.part(i + 1));
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
                Ordering::Equal
            })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[3,2,1]`, `3,2,1` or `[]`.
    fn from_str(s: &str) -> Result<Partition> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            let v: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad partition part `{tok}`")))?;
            if v == 0 {
                continue;
            }
            parts.push(v);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!("parts not weakly decreasing in `{s}`")));
        }
        Ok(Partition::from_sorted(parts))
    }
}

/// All partitions of weight `n`, in increasing graded-revlex order
/// (`[1^n]` first, `[n]` last).
pub fn partitions_of(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(remaining: u64, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted(current.clone()));
            return;
        }
        let hi = max_part.min(remaining.min(u32::MAX as u64) as u32);
        for p in 1..=hi {
            current.push(p);
            rec(remaining - p as u64, p, current, out);
            current.pop();
        }
    }
    rec(n, n.min(u32::MAX as u64) as u32, &mut current, &mut out);
    out.sort();
    out
}

/// All partitions of weight at most `n`.
pub fn partitions_up_to(n: u64) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// All `nu` contained in the partition `kappa` with `len(nu) <= max_len`,
/// enumerated in ascending lexicographic order on part sequences.
pub fn subpartitions_of(kappa: &Partition, max_len: usize) -> Vec<Partition> {
    let depth = kappa.len().min(max_len);
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    // Depth-first with parts chosen row by row, emitting each prefix
    // before its extensions, yields ascending lex order.
    fn lex_rec(
        kappa: &Partition,
        depth: usize,
        row: usize,
        prev: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row > depth {
            return;
        }
        let hi = kappa.part(row).min(prev);
        for p in 1..=hi {
            current.push(p);
            out.push(Partition::from_sorted(current.clone()));
            lex_rec(kappa, depth, row + 1, p, current, out);
            current.pop();
        }
    }
    out.push(Partition::empty());
    lex_rec(kappa, depth, 1, u32::MAX, &mut current, &mut out);
    out
}

/// All `nu` with `nu_1 <= m` and `len(nu) <= min(n, max_len)` -- the
/// subpartitions of the rectangle `[m^n]` -- in ascending lexicographic
/// order, the empty partition first.
pub fn subpartitions_of_rectangle(m: u32, n: usize, max_len: usize) -> Vec<Partition> {
    subpartitions_of(&Partition::rectangle(m, n), max_len)
}
