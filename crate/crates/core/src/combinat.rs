//! Exact combinatorics: binomial coefficients, partitions in a box and
//! Littlewood-Richardson coefficients by skew-tableau enumeration.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Combinatorial binomial coefficient. Zero whenever `b < 0`, `a < 0` or `a < b`.
pub fn binom_comb(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || a < b {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= BigUint::from((a - i) as u64);
        acc /= BigUint::from((i + 1) as u64);
    }
    acc
}

/// A Young diagram stored as its weakly decreasing nonzero row lengths.
///
/// The zero partition is the empty sequence. Partitions are totally ordered
/// by size first and then lexicographically with larger rows first, so
/// `(2)` precedes `(1,1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates weak decrease and trims trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single row `(p)`.
    pub fn row(p: u32) -> Self {
        if p == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![p] }
        }
    }

    /// The single column `(1^p)`.
    pub fn column(p: usize) -> Self {
        Partition { parts: vec![1; p] }
    }

    /// A rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: u32) -> Self {
        if cols == 0 {
            Self::empty()
        } else {
            Partition {
                parts: vec![cols; rows],
            }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Row `i`, zero past the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Whether the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (0..width)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `self / inner` has at most one box in each column.
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (0..self.len()).all(|i| i == 0 || self.part(i) <= inner.part(i - 1))
    }

    /// `self / inner` has at most one box in each row.
    pub fn is_vertical_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (0..self.len()).all(|i| self.part(i) - inner.part(i) <= 1)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
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

/// Parses comma-separated parts such as `6,6,6,3`. An empty string or `0`
/// is the zero partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid partition part {:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// The `rows x cols` rectangle that partitions indexing Schubert classes of
/// `G(rows, rows + cols)` must fit in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoxConstraint {
    pub rows: usize,
    pub cols: usize,
}

impl BoxConstraint {
    pub fn new(rows: usize, cols: usize) -> Self {
        BoxConstraint { rows, cols }
    }

    pub fn admits(&self, p: &Partition) -> bool {
        p.len() <= self.rows && p.part(0) as usize <= self.cols
    }

    pub fn check(&self, p: &Partition) -> Result<()> {
        if self.admits(p) {
            Ok(())
        } else {
            Err(Error::OutsideBox {
                partition: p.parts().to_vec(),
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// The full rectangle, i.e. the index of the point class.
    pub fn full(&self) -> Partition {
        Partition::rectangle(self.rows, self.cols as u32)
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols
    }
}

/// All partitions in the box, sorted by the [`Partition`] order.
pub fn partitions_in_box(bx: BoxConstraint) -> Vec<Partition> {
    fn fill(rows_left: usize, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition {
            parts: prefix.clone(),
        });
        if rows_left == 0 {
            return;
        }
        for p in 1..=max {
            prefix.push(p);
            fill(rows_left - 1, p, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    fill(bx.rows, bx.cols as u32, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Partitions of `size` in the box, in the [`Partition`] order.
pub fn partitions_of_size_in_box(bx: BoxConstraint, size: usize) -> Vec<Partition> {
    partitions_in_box(bx)
        .into_iter()
        .filter(|p| p.size() == size)
        .collect()
}

/// The Littlewood-Richardson coefficient `c^mu_{lambda,nu}`.
///
/// Counts fillings of the skew shape `mu / lambda` with content `nu` that are
/// semistandard and whose reverse reading word (rows top to bottom, each row
/// right to left) is a lattice word.
pub fn lr_coefficient(lambda: &Partition, nu: &Partition, mu: &Partition) -> BigUint {
    if !mu.contains(lambda) || mu.size() != lambda.size() + nu.size() {
        return BigUint::zero();
    }
    if nu.is_empty() {
        return BigUint::one();
    }

    let cells: Vec<(usize, usize)> = (0..mu.len())
        .flat_map(|r| {
            let lo = lambda.part(r) as usize;
            let hi = mu.part(r) as usize;
            (lo..hi).rev().map(move |c| (r, c))
        })
        .collect();

    let mut search = LrSearch {
        lambda,
        mu,
        content: nu.parts().iter().map(|&p| p as usize).collect(),
        counts: vec![0; nu.len()],
        grid: (0..mu.len())
            .map(|r| vec![usize::MAX; mu.part(r) as usize])
            .collect(),
        cells,
        found: 0,
    };
    search.run(0);
    BigUint::from(search.found)
}

struct LrSearch<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    content: Vec<usize>,
    counts: Vec<usize>,
    grid: Vec<Vec<usize>>,
    cells: Vec<(usize, usize)>,
    found: u64,
}

impl LrSearch<'_> {
    fn run(&mut self, idx: usize) {
        if idx == self.cells.len() {
            self.found += 1;
            return;
        }
        let (r, c) = self.cells[idx];

        // Rows weakly increase to the right, and the right neighbour is
        // already filled because rows are read right to left.
        let mut max = self.content.len() - 1;
        if c + 1 < self.mu.part(r) as usize {
            max = max.min(self.grid[r][c + 1]);
        }
        // Columns strictly increase downwards.
        let min = if r > 0 && c >= self.lambda.part(r - 1) as usize {
            self.grid[r - 1][c] + 1
        } else {
            0
        };

        for v in min..=max {
            if self.counts[v] == self.content[v] {
                continue;
            }
            if v > 0 && self.counts[v] + 1 > self.counts[v - 1] {
                continue;
            }
            self.counts[v] += 1;
            self.grid[r][c] = v;
            self.run(idx + 1);
            self.grid[r][c] = usize::MAX;
            self.counts[v] -= 1;
        }
    }
}
