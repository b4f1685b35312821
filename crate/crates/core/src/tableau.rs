//! Young tableaux over arbitrary alphabets of positive integers.
//!
//! Rows and columns are 1-based in the public API: `T^i_j` is
//! `entry(i, j)`. Out-of-range positions behave as `+∞` in comparisons,
//! so no sentinel values are ever stored.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::diagram::{Diagram, DiagramChain};
use crate::error::{Error, Result};
use crate::words::{phi, phi_inv, Word};

/// A box with no neighbour to the right or below, at `(row, λ_row)`.
/// Corners are ordered by row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c({},{})", self.row, self.col)
    }
}

/// Outcome of an insertion: the new tableau and the box it gained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inserted {
    pub tableau: Tableau,
    pub corner: Corner,
    /// `j_T` (row insertion) or `_T j` (column insertion): the entry in the new box.
    pub corner_entry: u32,
}

/// Outcome of a corner deletion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deleted {
    pub tableau: Tableau,
    /// `c^T` (row deletion) or `^T c` (column deletion).
    pub expelled: u32,
    /// `s_c(T)`: displaced boxes, from the corner to the first row (or column).
    pub segment: Vec<(usize, usize)>,
}

/// Rows of distinct positive integers, increasing along rows and down columns.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

/// Row bump `(R ↓ j)`: replace the least entry greater than `j`; returns it.
fn row_bump(row: &mut Vec<u32>, j: u32) -> Option<u32> {
    let k = row.partition_point(|&a| a < j);
    if k == row.len() {
        row.push(j);
        None
    } else {
        Some(std::mem::replace(&mut row[k], j))
    }
}

/// Row push-up `(R ↑ j)`: replace the greatest entry smaller than `j`; returns it.
/// Requires `j > R_1`.
fn row_push_up(row: &mut [u32], j: u32) -> (usize, u32) {
    let k = row.partition_point(|&a| a < j);
    debug_assert!(k > 0);
    (k, std::mem::replace(&mut row[k - 1], j))
}

impl Tableau {
    /// Builds a tableau, checking shape, distinctness and row/column increase.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Tableau { rows };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_rows(rows: Vec<Vec<u32>>) -> Self {
        let t = Tableau { rows };
        debug_assert!(t.validate().is_ok(), "invalid tableau {t}");
        t
    }

    /// Builds rows without validation; pair with [`Tableau::validate`].
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        Tableau { rows }
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau(format!("row {} is empty", i + 1)));
            }
            for &a in row {
                if a == 0 {
                    return Err(Error::ZeroEntry);
                }
                if !seen.insert(a) {
                    return Err(Error::Duplicate(a));
                }
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!("row {} is not increasing", i + 1)));
            }
            if i > 0 {
                let above = &self.rows[i - 1];
                if row.len() > above.len() {
                    return Err(Error::InvalidTableau(format!("row {} is longer than row {}", i + 1, i)));
                }
                if row.iter().zip(above).any(|(b, a)| a >= b) {
                    return Err(Error::InvalidTableau(format!("column order fails between rows {} and {}", i, i + 1)));
                }
            }
        }
        Ok(())
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    /// The one-row tableau `(1 2 … n)`.
    pub fn row_tableau(n: usize) -> Self {
        if n == 0 {
            return Tableau::empty();
        }
        Tableau { rows: vec![(1..=n as u32).collect()] }
    }

    /// The one-column tableau `(1/2/…/n)`.
    pub fn column_tableau(n: usize) -> Self {
        Tableau { rows: (1..=n as u32).map(|a| vec![a]).collect() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    /// `T^i` (1-based); empty beyond the last row.
    pub fn row(&self, i: usize) -> &[u32] {
        if i == 0 {
            return &[];
        }
        self.rows.get(i - 1).map(|r| r.as_slice()).unwrap_or(&[])
    }

    /// `T_j` read top to bottom.
    pub fn column(&self, j: usize) -> Vec<u32> {
        self.rows.iter().take_while(|r| r.len() >= j).map(|r| r[j - 1]).collect()
    }

    /// `T^i_j`, or `None` outside the shape.
    pub fn entry(&self, i: usize, j: usize) -> Option<u32> {
        if i == 0 || j == 0 {
            return None;
        }
        self.rows.get(i - 1).and_then(|r| r.get(j - 1)).copied()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Diagram {
        Diagram::from_lengths(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    pub fn alphabet(&self) -> BTreeSet<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.position_of(v).is_some()
    }

    /// `(row, col)` of entry `v`.
    pub fn position_of(&self, v: u32) -> Option<(usize, usize)> {
        for (i, r) in self.rows.iter().enumerate() {
            if let Ok(j) = r.binary_search(&v) {
                return Some((i + 1, j + 1));
            }
        }
        None
    }

    pub fn is_standard(&self) -> bool {
        let n = self.size() as u32;
        self.rows.iter().flatten().all(|&a| a >= 1 && a <= n)
    }

    pub(crate) fn require_standard(&self) -> Result<()> {
        if self.is_standard() {
            Ok(())
        } else {
            Err(Error::NotStandard(self.to_string()))
        }
    }

    /// `ω^i(T)`: the largest entry of row `i`.
    pub fn row_max(&self, i: usize) -> Option<u32> {
        self.row(i).last().copied()
    }

    /// `ω_j(T)`: the largest entry of column `j`.
    pub fn col_max(&self, j: usize) -> Option<u32> {
        self.column(j).last().copied()
    }

    /// Corners in increasing row order.
    pub fn corners(&self) -> Vec<Corner> {
        (1..=self.rows.len())
            .filter(|&i| self.row(i + 1).len() < self.row(i).len())
            .map(|i| Corner { row: i, col: self.row(i).len() })
            .collect()
    }

    pub fn is_corner(&self, c: Corner) -> bool {
        c.row >= 1 && c.row <= self.rows.len() && self.row(c.row).len() == c.col && self.row(c.row + 1).len() < c.col
    }

    /// The corner holding entry `v`, if `v` sits in a corner.
    pub fn corner_of_entry(&self, v: u32) -> Option<Corner> {
        let (i, j) = self.position_of(v)?;
        let c = Corner { row: i, col: j };
        self.is_corner(c).then_some(c)
    }

    /// The corner in row `i`, if row `i` ends in one.
    pub fn corner_in_row(&self, i: usize) -> Option<Corner> {
        let c = Corner { row: i, col: self.row(i).len() };
        self.is_corner(c).then_some(c)
    }

    /// `h(T^i_j)`.
    pub fn hook(&self, i: usize, j: usize) -> u32 {
        self.shape().hook(i, j)
    }

    /// The transpose `T†`.
    pub fn transpose(&self) -> Tableau {
        Tableau { rows: (1..=self.num_cols()).map(|j| self.column(j)).collect() }
    }

    /// `T^{i,j}`: rows `i..=j`.
    pub fn rows_range(&self, i: usize, j: usize) -> Tableau {
        let hi = j.min(self.rows.len());
        if i == 0 || i > hi {
            return Tableau::empty();
        }
        Tableau { rows: self.rows[i - 1..hi].to_vec() }
    }

    /// `T^{i,∞}`.
    pub fn rows_from(&self, i: usize) -> Tableau {
        self.rows_range(i, self.rows.len())
    }

    /// `T_{i,j}`: columns `i..=j` (left-justified).
    pub fn cols_range(&self, i: usize, j: usize) -> Tableau {
        self.transpose().rows_range(i, j).transpose()
    }

    /// `T_{i,∞}`.
    pub fn cols_from(&self, i: usize) -> Tableau {
        self.cols_range(i, self.num_cols())
    }

    /// Stacks `top` as the first row above `rest`, validating the result.
    pub fn stack(top: &[u32], rest: &Tableau) -> Result<Tableau> {
        let mut rows = Vec::with_capacity(rest.rows.len() + 1);
        if !top.is_empty() {
            rows.push(top.to_vec());
        }
        rows.extend(rest.rows.iter().cloned());
        Tableau::new(rows)
    }

    /// Side-by-side concatenation `(T, S)`: row `r` is `T^r` followed by `S^r`.
    pub fn concat_columns(left: &Tableau, right: &Tableau) -> Result<Tableau> {
        let k = left.rows.len().max(right.rows.len());
        let rows = (1..=k).map(|r| left.row(r).iter().chain(right.row(r)).copied().collect()).collect();
        Tableau::new(rows)
    }

    /// Applies an order-preserving relabelling to every entry.
    pub fn map_entries(&self, f: impl Fn(u32) -> u32) -> Tableau {
        Tableau { rows: self.rows.iter().map(|r| r.iter().map(|&a| f(a)).collect()).collect() }
    }

    /// `φ_j(T)`.
    pub fn renumber_up(&self, j: u32) -> Tableau {
        self.map_entries(|a| phi(j, a))
    }

    /// `φ_j⁻¹(T)`; requires `j ∉ ⟨T⟩`.
    pub fn renumber_down(&self, j: u32) -> Result<Tableau> {
        if self.contains(j) {
            return Err(Error::PresentEntry(j));
        }
        Ok(self.map_entries(|a| phi_inv(j, a)))
    }

    /// Order-preserving relabelling onto `{1,…,n}`; returns the old alphabet too.
    pub fn standardize(&self) -> (Tableau, Vec<u32>) {
        let alphabet: Vec<u32> = self.alphabet().into_iter().collect();
        let t = self.map_entries(|a| alphabet.binary_search(&a).unwrap() as u32 + 1);
        (t, alphabet)
    }

    /// Inverse of [`Tableau::standardize`]: `k ↦ alphabet[k−1]`.
    pub fn relabel(&self, alphabet: &[u32]) -> Tableau {
        self.map_entries(|a| alphabet[a as usize - 1])
    }

    /// In-place row insertion; returns the new box.
    pub(crate) fn insert_mut(&mut self, j: u32) -> Corner {
        let mut x = j;
        for (i, row) in self.rows.iter_mut().enumerate() {
            match row_bump(row, x) {
                None => return Corner { row: i + 1, col: row.len() },
                Some(y) => x = y,
            }
        }
        self.rows.push(vec![x]);
        Corner { row: self.rows.len(), col: 1 }
    }

    /// `(T ⇓ j)` with the new corner and `j_T`.
    pub fn insert(&self, j: u32) -> Result<Inserted> {
        if j == 0 {
            return Err(Error::ZeroEntry);
        }
        if self.contains(j) {
            return Err(Error::PresentEntry(j));
        }
        let mut t = self.clone();
        let corner = t.insert_mut(j);
        let corner_entry = t.entry(corner.row, corner.col).unwrap();
        Ok(Inserted { tableau: t, corner, corner_entry })
    }

    /// `(T ↑ j)`: push `j` up from the last row; returns `j^T`.
    /// Requires `j ∉ ⟨T⟩` and `j` greater than the first entry of the last row.
    pub fn push_up(&self, j: u32) -> Result<(Tableau, u32)> {
        if self.contains(j) {
            return Err(Error::PresentEntry(j));
        }
        match self.rows.last() {
            Some(last) if last[0] < j => {}
            _ => return Err(Error::Precondition(format!("{j} must exceed the first entry of the last row of {self}"))),
        }
        let mut t = self.clone();
        let mut x = j;
        for row in t.rows.iter_mut().rev() {
            x = row_push_up(row, x).1;
        }
        Ok((t, x))
    }

    /// `(T ⇑ c)`: remove `ω^i(T)` from the corner row `i` and push it up.
    pub fn delete_corner(&self, c: Corner) -> Result<Deleted> {
        if !self.is_corner(c) {
            return Err(Error::NotACorner { row: c.row, col: c.col });
        }
        let mut t = self.clone();
        let mut x = t.rows[c.row - 1].pop().unwrap();
        if t.rows[c.row - 1].is_empty() {
            t.rows.pop();
        }
        let mut segment = vec![(c.row, c.col)];
        for i in (0..c.row - 1).rev() {
            let (k, y) = row_push_up(&mut t.rows[i], x);
            segment.push((i + 1, k));
            x = y;
        }
        Ok(Deleted { tableau: t, expelled: x, segment })
    }

    /// `(j ⇒ T) = (T† ⇓ j)†` with `_T j`.
    pub fn column_insert(&self, j: u32) -> Result<Inserted> {
        let ins = self.transpose().insert(j)?;
        Ok(Inserted {
            tableau: ins.tableau.transpose(),
            corner: Corner { row: ins.corner.col, col: ins.corner.row },
            corner_entry: ins.corner_entry,
        })
    }

    /// `(T ⇐ c) = (T† ⇑ c†)†` with `^T c`.
    pub fn column_delete(&self, c: Corner) -> Result<Deleted> {
        if !self.is_corner(c) {
            return Err(Error::NotACorner { row: c.row, col: c.col });
        }
        let del = self.transpose().delete_corner(Corner { row: c.col, col: c.row })?;
        Ok(Deleted {
            tableau: del.tableau.transpose(),
            expelled: del.expelled,
            segment: del.segment.into_iter().map(|(i, j)| (j, i)).collect(),
        })
    }

    /// `T − v` by jeu de taquin: the hole left by `v` slides right or down
    /// towards the smaller neighbour until it reaches a corner.
    pub fn jdt_remove(&self, v: u32) -> Result<Tableau> {
        let (mut i, mut j) = self.position_of(v).ok_or(Error::MissingEntry(v))?;
        let mut rows = self.rows.clone();
        loop {
            let right = rows[i - 1].get(j).copied();
            let below = rows.get(i).and_then(|r| r.get(j - 1)).copied();
            match (right, below) {
                (None, None) => break,
                (Some(r), Some(b)) => {
                    assert_ne!(r, b, "entries of a tableau are distinct");
                    if b < r {
                        rows[i - 1][j - 1] = b;
                        i += 1;
                    } else {
                        rows[i - 1][j - 1] = r;
                        j += 1;
                    }
                }
                (Some(r), None) => {
                    rows[i - 1][j - 1] = r;
                    j += 1;
                }
                (None, Some(b)) => {
                    rows[i - 1][j - 1] = b;
                    i += 1;
                }
            }
        }
        rows[i - 1].pop();
        if rows[i - 1].is_empty() {
            rows.pop();
        }
        Ok(Tableau::from_rows(rows))
    }

    /// `T^{⟨i,j⟩}`: every entry outside `[i, j]` removed by jeu de taquin,
    /// eliminating in increasing order.
    pub fn project(&self, i: u32, j: u32) -> Tableau {
        self.project_in_order(i, j, false)
    }

    /// As [`Tableau::project`] with the elimination order chosen explicitly.
    pub fn project_in_order(&self, i: u32, j: u32, descending: bool) -> Tableau {
        let mut outside: Vec<u32> = self.alphabet().into_iter().filter(|&a| a < i || a > j).collect();
        if descending {
            outside.reverse();
        }
        outside.into_iter().fold(self.clone(), |t, a| t.jdt_remove(a).unwrap())
    }

    /// `ψ(T) = (sh T^{⟨1,n⟩}, …, sh T^{⟨1,1⟩})`.
    pub fn chain_psi(&self) -> Result<DiagramChain> {
        self.require_standard()?;
        let n = self.size() as u32;
        let chain = (1..=n).rev().map(|k| self.project(1, k).shape()).collect();
        DiagramChain::new(chain)
    }

    /// `ψ⁻¹`: entry `i` goes into the box by which `D_i` exceeds `D_{i−1}`.
    pub fn chain_psi_inverse(chain: &DiagramChain) -> Result<Tableau> {
        let ds = chain.diagrams();
        let n = ds.len();
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for i in 1..=n {
            let big = &ds[n - i];
            let row = (1..=big.num_rows())
                .find(|&r| big.part(r) as usize > rows.get(r - 1).map_or(0, |x| x.len()))
                .ok_or_else(|| Error::MalformedChain(format!("no new box in {big}")))?;
            if row > rows.len() {
                rows.push(Vec::new());
            }
            rows[row - 1].push(i as u32);
        }
        Tableau::new(rows)
    }

    /// `τ(T) = {i : i+1 lies in a strictly lower row than i}`.
    pub fn tau(&self) -> Result<BTreeSet<u32>> {
        self.require_standard()?;
        let n = self.size() as u32;
        let mut row_of = vec![0usize; n as usize + 2];
        for (r, row) in self.rows.iter().enumerate() {
            for &a in row {
                row_of[a as usize] = r;
            }
        }
        Ok((1..n).filter(|&i| row_of[i as usize + 1] > row_of[i as usize]).collect())
    }

    /// The row reading word `w_r(T) = [T^k, …, T^1]`.
    pub fn row_word(&self) -> Word {
        Word::from_vec(self.rows.iter().rev().flatten().copied().collect())
    }

    /// The column reading word `w_c(T) = [T̄_1, …, T̄_l]`.
    pub fn column_word(&self) -> Word {
        Word::from_vec((1..=self.num_cols()).flat_map(|j| self.column(j).into_iter().rev()).collect())
    }

    /// All standard tableaux of the given shape, in serialization-independent
    /// but deterministic order.
    pub fn of_shape(shape: &Diagram) -> Vec<Tableau> {
        fn rec(lengths: &mut Vec<usize>, n: u32, acc: &mut Vec<Vec<Vec<u32>>>, cur: &mut Vec<Vec<u32>>) {
            if n == 0 {
                acc.push(cur.clone());
                return;
            }
            // place n in each removable corner of the current shape
            for i in 0..lengths.len() {
                let len = lengths[i];
                if len == 0 || lengths.get(i + 1).copied().unwrap_or(0) >= len {
                    continue;
                }
                lengths[i] -= 1;
                cur[i][len - 1] = n;
                rec(lengths, n - 1, acc, cur);
                lengths[i] += 1;
            }
        }
        let mut lengths: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
        let mut cur: Vec<Vec<u32>> = lengths.iter().map(|&l| vec![0; l]).collect();
        let mut acc = Vec::new();
        rec(&mut lengths, shape.size() as u32, &mut acc, &mut cur);
        acc.into_iter().map(Tableau::from_rows).collect()
    }

    /// All of `𝐓_n`, sorted by text serialization.
    pub fn all_standard(n: usize) -> Vec<Tableau> {
        let mut all: Vec<Tableau> = Diagram::all(n).iter().flat_map(Tableau::of_shape).collect();
        all.sort_by_cached_key(|t| t.to_string());
        all
    }
}

impl fmt::Display for Tableau {
    /// `1 2 5/3 4/6`; the empty tableau prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "-");
        }
        write!(f, "{}", self.rows.iter().map(|r| r.iter().join(" ")).join("/"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Parses `1 2 5/3 4/6`; `-` or an empty string is the empty tableau.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() || t == "-" {
            return Ok(Tableau::empty());
        }
        let rows = t
            .split('/')
            .map(|row| {
                let entries = row
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|tok| !tok.is_empty())
                    .map(|tok| tok.parse::<u32>().map_err(|_| Error::Parse { kind: "tableau", token: tok.to_string() }))
                    .collect::<Result<Vec<_>>>()?;
                if entries.is_empty() {
                    return Err(Error::Parse { kind: "tableau", token: row.to_string() });
                }
                Ok(entries)
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(t("1 2 5/3 4/6").to_string(), "1 2 5/3 4/6");
        assert_eq!(Tableau::empty().to_string(), "-");
        assert!(matches!("1 2/3 x".parse::<Tableau>(), Err(Error::Parse { token, .. }) if token == "x"));
        assert!("1 3/2 2".parse::<Tableau>().is_err());
        assert!("2 3/4".parse::<Tableau>().is_ok());
        assert!("1 3/2 4 5".parse::<Tableau>().is_err());
        assert!("1 2/1 3".parse::<Tableau>().is_err());
        assert!("3 1".parse::<Tableau>().is_err());
    }

    #[test]
    fn shape_corners_and_transpose() {
        let x = t("1 2 5/3 4/6");
        assert_eq!(x.shape().to_string(), "3,2,1");
        assert_eq!(x.corners().len(), 3);
        assert_eq!(x.transpose(), t("1 3 6/2 4/5"));
        assert_eq!(x.cols_from(2), t("2 5/4"));
        assert_eq!(x.rows_from(2), t("3 4/6"));
        assert_eq!(x.corner_of_entry(4), Some(Corner { row: 2, col: 2 }));
        assert_eq!(x.corner_of_entry(3), None);
    }

    #[test]
    fn insertion() {
        let ins = t("1 4/2 5").insert(3).unwrap();
        assert_eq!(ins.tableau, t("1 3/2 4/5"));
        assert_eq!(ins.corner_entry, 5);
        assert_eq!(t("1 2/3").insert(4).unwrap().tableau, t("1 2 4/3"));
        assert_eq!(Tableau::empty().insert(7).unwrap().tableau, t("7"));
        assert!(t("1 2").insert(2).is_err());
    }

    #[test]
    fn push_up_and_deletion() {
        let (u, out) = t("1 3/2 4").push_up(5).unwrap();
        assert_eq!((u, out), (t("1 4/2 5"), 3));
        assert_eq!(t("1 2 4").push_up(7).unwrap(), (t("1 2 7"), 4));
        assert!(t("1 3/2 4").push_up(1).is_err());

        let del = t("1 3/2 4/5").delete_corner(Corner { row: 3, col: 1 }).unwrap();
        assert_eq!(del.tableau, t("1 4/2 5"));
        assert_eq!(del.expelled, 3);
        assert_eq!(del.segment, vec![(3, 1), (2, 2), (1, 2)]);
        assert!(t("1 3/2 4/5").delete_corner(Corner { row: 1, col: 2 }).is_err());

        let x = t("1 2 5/3 4/6");
        let cs: Vec<u32> = x.corners().into_iter().map(|c| x.delete_corner(c).unwrap().expelled).collect();
        assert_eq!(cs, vec![5, 2, 2]);
    }

    #[test]
    fn column_operations() {
        assert_eq!(t("1 2/3").column_insert(4).unwrap().tableau, t("1 2/3/4"));
        let del = t("1 2/3").column_delete(Corner { row: 1, col: 2 }).unwrap();
        assert_eq!((del.tableau, del.expelled), (t("2/3"), 1));
        let del = t("1 2/3").column_delete(Corner { row: 2, col: 1 }).unwrap();
        assert_eq!((del.tableau, del.expelled), (t("1 2"), 3));
        let del = t("5").column_delete(Corner { row: 1, col: 1 }).unwrap();
        assert_eq!((del.tableau, del.expelled), (Tableau::empty(), 5));
    }

    #[test]
    fn jeu_de_taquin() {
        let x = t("1 2 5/3 4/6");
        let expect = ["2 4 5/3/6", "1 4 5/3/6", "1 2 5/4/6", "1 2 5/3/6", "1 2/3 4/6", "1 2 5/3 4"];
        for (v, e) in (1..=6).zip(expect) {
            assert_eq!(x.jdt_remove(v).unwrap(), t(e), "removing {v}");
        }
        assert!(x.jdt_remove(9).is_err());
    }

    #[test]
    fn projections_and_chains() {
        let x = t("1 2 5/3 4/6");
        assert_eq!(x.project(1, 5), t("1 2 5/3 4"));
        assert_eq!(x.project(1, 6), x);
        let y = t("1 3 5/2 4").project(2, 5).renumber_down(1).unwrap();
        assert_eq!(y, t("1 2 4/3"));
        let chain = x.chain_psi().unwrap();
        assert_eq!(chain.to_string(), "(3,2,1) (3,2) (2,2) (2,1) (2) (1)");
        assert_eq!(Tableau::chain_psi_inverse(&chain).unwrap(), x);
    }

    #[test]
    fn tau_and_reading_words() {
        assert_eq!(t("1 3/2 4/5").tau().unwrap(), [1, 3, 4].into_iter().collect());
        assert!(Tableau::row_tableau(4).tau().unwrap().is_empty());
        let x = t("1 2 5/3 4/6");
        assert_eq!(x.row_word().to_string(), "[6,3,4,1,2,5]");
        assert_eq!(x.column_word().to_string(), "[6,3,1,4,2,5]");
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| Tableau::all_standard(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26, 76, 232]);
    }
}
