//! Integer partitions and the cell statistics used throughout the library.
//!
//! A [`Partition`] is stored in canonical form (weakly decreasing, positive
//! parts). Constructors reject anything else instead of sorting, so that
//! index data read from files or the command line is never silently changed.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Young diagram, 1-based (English convention).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<i64>) -> Result<Self> {
        if parts.iter().any(|&p| p < 1) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition {
            parts: parts.into_iter().map(|p| p as usize).collect(),
        })
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    /// Validating constructor.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                parts.into_iter().map(|p| p as i64).collect(),
            ));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    pub fn contains_cell(&self, s: Cell) -> bool {
        s.row >= 1 && s.col >= 1 && s.col <= self.part(s.row)
    }

    fn check_cell(&self, s: Cell) -> Result<()> {
        if self.contains_cell(s) {
            Ok(())
        } else {
            Err(Error::CellNotInPartition {
                row: s.row,
                col: s.col,
            })
        }
    }

    fn column_len(&self, col: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn arm(&self, s: Cell) -> Result<usize> {
        self.check_cell(s)?;
        Ok(self.part(s.row) - s.col)
    }

    pub fn leg(&self, s: Cell) -> Result<usize> {
        self.check_cell(s)?;
        Ok(self.column_len(s.col) - s.row)
    }

    /// `a'(s)`: number of cells to the left of `s`.
    pub fn arm_colength(&self, s: Cell) -> Result<usize> {
        self.check_cell(s)?;
        Ok(s.col - 1)
    }

    /// `l'(s)`: number of cells above `s`.
    pub fn leg_colength(&self, s: Cell) -> Result<usize> {
        self.check_cell(s)?;
        Ok(s.row - 1)
    }

    pub fn hook(&self, s: Cell) -> Result<usize> {
        Ok(self.arm(s)? + self.leg(s)? + 1)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    /// Arm and leg of every cell, row-major. Avoids the error path of
    /// [`Partition::arm`] for internal loops.
    pub fn arm_legs(&self) -> Vec<(Cell, usize, usize)> {
        let conj = self.conjugate();
        self.cells()
            .map(|s| {
                let a = self.parts[s.row - 1] - s.col;
                let l = conj.parts[s.col - 1] - s.row;
                (s, a, l)
            })
            .collect()
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// The partition with every part of `self` repeated twice.
    pub fn union_double(&self) -> Partition {
        let parts = self.parts.iter().flat_map(|&p| [p, p]).collect();
        Partition { parts }
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Every part multiplied by `k`.
    pub fn scale(&self, k: usize) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| p * k).collect(),
        }
    }

    /// `m_i(λ)` for `i = 1..=λ_1`, index 0 unused.
    pub fn multiplicities(&self) -> Vec<usize> {
        let width = self.parts.first().copied().unwrap_or(0);
        let mut m = vec![0; width + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// `z_λ = Π_i i^{m_i} m_i!`.
    pub fn z(&self) -> u128 {
        let mut z: u128 = 1;
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                z *= (i * k) as u128;
            }
        }
        z
    }

    /// Sign of a permutation of cycle type `self`: `(-1)^{|λ| - l(λ)}`.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// True when the diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Dominance order `self ≤ other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        let (a, b) = (self.size(), other.size());
        if a != b {
            return Err(Error::IncomparableWeights(a, b));
        }
        Ok(self.dominated_by(other))
    }

    /// Dominance without the weight check; callers guarantee equal weights.
    pub(crate) fn dominated_by(&self, other: &Partition) -> bool {
        let (mut sa, mut sb) = (0, 0);
        for i in 1..=self.len().max(other.len()) {
            sa += self.part(i);
            sb += other.part(i);
            if sa > sb {
                return false;
            }
        }
        true
    }

    /// Cells of `self / mu` when it is a vertical strip (at most one cell
    /// per row); `None` otherwise or when `mu ⊄ self`.
    pub fn vertical_strip_cells(&self, mu: &Partition) -> Option<BTreeSet<Cell>> {
        if !self.contains(mu) {
            return None;
        }
        let mut cells = BTreeSet::new();
        for i in 1..=self.len() {
            let (l, m) = (self.part(i), mu.part(i));
            match l - m {
                0 => {}
                1 => {
                    cells.insert(Cell::new(i, l));
                }
                _ => return None,
            }
        }
        Some(cells)
    }

    /// Cells of `self / mu` when `mu ⊆ self`.
    pub fn skew_cells(&self, mu: &Partition) -> Option<Vec<Cell>> {
        if !self.contains(mu) {
            return None;
        }
        Some(self.cells().filter(|s| !mu.contains_cell(*s)).collect())
    }

    /// Partitions obtained by removing one corner cell.
    pub fn remove_one_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            if i + 1 == self.parts.len() || self.parts[i] > self.parts[i + 1] {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Partitions `λ ⊇ self` with `λ/self` a vertical strip of `r` cells.
    pub fn add_vertical_strip(&self, r: usize) -> Vec<Partition> {
        let conj = self.conjugate();
        let mut out = Vec::new();
        // A vertical strip adds at most one cell per row, i.e. a horizontal
        // strip on the conjugate.
        for lam_conj in conj.add_horizontal_strip(r) {
            out.push(lam_conj.conjugate());
        }
        out.sort_by(reverse_lex);
        out
    }

    /// Partitions `λ ⊇ self` with `λ/self` a horizontal strip of `r` cells.
    pub fn add_horizontal_strip(&self, r: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let l = self.len();
        let mut added = vec![0usize; l + 1];
        fn rec(
            mu: &Partition,
            i: usize,
            left: usize,
            added: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            let l = added.len() - 1;
            if i == l {
                // the new bottom row is bounded by the last part of mu
                let cap = if l == 0 { usize::MAX } else { mu.part(l) };
                if left <= cap {
                    added[l] = left;
                    let mut parts: Vec<usize> =
                        (0..l).map(|k| mu.parts[k] + added[k]).collect();
                    if left > 0 {
                        parts.push(left);
                    }
                    out.push(Partition { parts });
                }
                return;
            }
            // row i (0-based) may grow up to mu_{i-1} - mu_i (row above)
            let cap = if i == 0 {
                left
            } else {
                (mu.parts[i - 1] - mu.parts[i]).min(left)
            };
            for a in 0..=cap {
                added[i] = a;
                rec(mu, i + 1, left - a, added, out);
            }
        }
        rec(self, 0, r, &mut added, &mut out);
        out.sort_by(reverse_lex);
        out
    }
}

/// Reverse lexicographic order: `[3] < [2,1] < [1,1,1]` in iteration order.
pub fn reverse_lex(a: &Partition, b: &Partition) -> Ordering {
    b.parts.cmp(&a.parts)
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used for map keys: by size, then reverse lexicographic.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| reverse_lex(self, other))
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

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: i64) -> Result<Vec<Partition>> {
    if n < 0 {
        return Err(Error::Negative(n));
    }
    Ok(partitions_of_usize(n as usize))
}

pub(crate) fn partitions_of_usize(n: usize) -> Vec<Partition> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, grouped by size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of_usize).collect()
}

/// Parses a JSON array such as `[3,1]`.
pub fn parse_partition(s: &str) -> Result<Partition> {
    serde_json::from_str::<Partition>(s).map_err(|e| Error::Parse(format!("{s}: {e}")))
}

#[macro_export]
macro_rules! part {
    () => { $crate::partitions::Partition::empty() };
    ($($x:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($x),+]).expect("valid partition literal")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(part![].conjugate(), part![]);
        assert_eq!(part![2, 1].conjugate(), part![2, 1]);
        assert_eq!(part![3, 1].conjugate(), part![2, 1, 1]);
    }

    #[test]
    fn arm_leg_examples() {
        let l = part![2, 1];
        let s = Cell::new(1, 1);
        assert_eq!((l.arm(s).unwrap(), l.leg(s).unwrap(), l.hook(s).unwrap()), (1, 1, 3));
        let one = part![1];
        assert_eq!(one.hook(Cell::new(1, 1)).unwrap(), 1);
        let l = part![3, 1];
        let s = Cell::new(1, 2);
        assert_eq!(l.arm_colength(s).unwrap(), 1);
        assert_eq!(l.arm(s).unwrap(), 1);
        assert_eq!(l.leg(s).unwrap(), 0);
        assert_eq!(
            l.arm(Cell::new(2, 2)),
            Err(Error::CellNotInPartition { row: 2, col: 2 })
        );
    }

    #[test]
    fn n_stat_and_union() {
        assert_eq!(part![].n_stat(), 0);
        assert_eq!(part![1, 1].n_stat(), 1);
        assert_eq!(part![7].n_stat(), 0);
        assert_eq!(part![2].union_double(), part![2, 2]);
        assert_eq!(part![].union_double(), part![]);
        assert_eq!(part![2, 1].union_double(), part![2, 2, 1, 1]);
    }

    #[test]
    fn dominance_examples() {
        assert!(part![1, 1].dominance_leq(&part![2]).unwrap());
        assert!(!part![2].dominance_leq(&part![1, 1]).unwrap());
        assert!(part![2, 2].dominance_leq(&part![3, 1]).unwrap());
        assert_eq!(
            part![2].dominance_leq(&part![1]),
            Err(Error::IncomparableWeights(2, 1))
        );
    }

    #[test]
    fn vertical_strips() {
        let cells = part![2, 1].vertical_strip_cells(&part![2]).unwrap();
        assert_eq!(cells.into_iter().collect::<Vec<_>>(), vec![Cell::new(2, 1)]);
        assert!(part![2].vertical_strip_cells(&part![]).is_none());
        let cells = part![1, 1].vertical_strip_cells(&part![1]).unwrap();
        assert_eq!(cells.into_iter().collect::<Vec<_>>(), vec![Cell::new(2, 1)]);
        assert!(part![1].vertical_strip_cells(&part![2]).is_none());
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(0).unwrap(), vec![part![]]);
        assert_eq!(
            partitions_of(3).unwrap(),
            vec![part![3], part![2, 1], part![1, 1, 1]]
        );
        assert_eq!(partitions_of(6).unwrap().len(), 11);
        assert_eq!(partitions_of(-1), Err(Error::Negative(-1)));
    }

    #[test]
    fn rejects_unsorted() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(parse_partition("[1,3]").is_err());
        assert_eq!(parse_partition("[3,1]").unwrap(), part![3, 1]);
        assert_eq!(serde_json::to_string(&part![3, 1]).unwrap(), "[3,1]");
    }

    #[test]
    fn strips_enumerate_correctly() {
        // brute force: every partition of |mu|+r containing mu with the right shape
        for mu in partitions_up_to(5) {
            for r in 0..=3 {
                let mut brute: Vec<Partition> = partitions_of_usize(mu.size() + r)
                    .into_iter()
                    .filter(|l| l.vertical_strip_cells(&mu).is_some())
                    .collect();
                brute.sort_by(reverse_lex);
                assert_eq!(mu.add_vertical_strip(r), brute, "mu={mu} r={r}");
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(part![1, 1].z(), 2);
        assert_eq!(part![2].z(), 2);
        assert_eq!(part![2, 1, 1].z(), 4);
        assert_eq!(part![].z(), 1);
    }
}
