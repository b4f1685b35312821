//! Words: permutations written in word form `[a_1,…,a_n]` with `a_i = w(i)`.
//!
//! A word over an arbitrary finite alphabet of positive integers is allowed;
//! it is *standard* when its alphabet is `{1,…,n}`. The symmetric group acts
//! on the right by position swaps (`w·s_i` exchanges `a_i` and `a_{i+1}`) and
//! products are read right to left, so `(x·y)(k) = x(y(k))`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A sequence of pairwise distinct positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u32>);

/// The root `α_{i,j}`; positive iff `source < target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub source: u32,
    pub target: u32,
}

impl Root {
    pub fn new(source: u32, target: u32) -> Self {
        debug_assert_ne!(source, target);
        Root { source, target }
    }

    pub fn is_positive(&self) -> bool {
        self.source < self.target
    }

    pub fn negate(&self) -> Root {
        Root { source: self.target, target: self.source }
    }

    /// The simple root `α_i = α_{i,i+1}`.
    pub fn simple(i: u32) -> Root {
        Root::new(i, i + 1)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.source, self.target)
    }
}

/// Set of positive roots; the inversion set `S(w)` of a word.
pub type InversionSet = BTreeSet<Root>;

/// Direction of a range cycle: `s^<_{i,j} = s_i s_{i+1} ⋯ s_j` or
/// `s^>_{i,j} = s_i s_{i-1} ⋯ s_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleDir {
    Ascending,
    Descending,
}

/// Which extreme entry to split off in [`Word::decompose_extreme`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extreme {
    Max,
    Min,
}

/// Result of splitting the largest (or smallest) entry off a standard word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremeSplit {
    /// `w − n` (or `w − 1`, which lives on the alphabet `{2,…,n}`).
    pub rest: Word,
    /// Position of the removed entry.
    pub position: usize,
    /// `s^>_{n−1,i}` (max) or `s^<_{1,i−1}` (min), as a word of rank n.
    pub cycle: Word,
}

/// `φ_j`: shift values `≥ j` up by one.
#[inline]
pub fn phi(j: u32, a: u32) -> u32 {
    if a < j {
        a
    } else {
        a + 1
    }
}

/// `φ_j⁻¹`: shift values `> j` down by one (`a ≠ j`).
#[inline]
pub fn phi_inv(j: u32, a: u32) -> u32 {
    debug_assert_ne!(a, j);
    if a < j {
        a
    } else {
        a - 1
    }
}

impl Word {
    /// Builds a word, checking that entries are positive and distinct.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &a in &entries {
            if a == 0 {
                return Err(Error::ZeroEntry);
            }
            if !seen.insert(a) {
                return Err(Error::Duplicate(a));
            }
        }
        Ok(Word(entries))
    }

    /// Builds a word without validation; callers guarantee distinct positive entries.
    pub(crate) fn from_vec(entries: Vec<u32>) -> Self {
        Word(entries)
    }

    pub fn identity(n: usize) -> Self {
        Word((1..=n as u32).collect())
    }

    /// `w_o = [n, n−1, …, 1]`.
    pub fn longest_element(n: usize) -> Self {
        Word((1..=n as u32).rev().collect())
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Word> {
        (1..=n as u32).permutations(n).map(Word)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn alphabet(&self) -> BTreeSet<u32> {
        self.0.iter().copied().collect()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.contains(&v)
    }

    pub fn is_standard(&self) -> bool {
        let n = self.0.len() as u32;
        self.0.iter().all(|&a| a >= 1 && a <= n)
    }

    fn require_standard(&self) -> Result<()> {
        if self.is_standard() {
            Ok(())
        } else {
            Err(Error::NotStandard(self.to_string()))
        }
    }

    /// `p_w(v)`: the 1-based position of entry `v`.
    pub fn position(&self, v: u32) -> Result<usize> {
        self.0.iter().position(|&a| a == v).map(|k| k + 1).ok_or(Error::MissingEntry(v))
    }

    /// `w·s_i`: swap the entries at positions `i` and `i+1`.
    pub fn apply_right_s(&self, i: usize) -> Result<Word> {
        let n = self.0.len();
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Ok(Word(v))
    }

    /// True iff `w·s_i` is a cover of `w`, i.e. `a_i < a_{i+1}`.
    pub fn is_ascent(&self, i: usize) -> bool {
        i >= 1 && i < self.0.len() && self.0[i - 1] < self.0[i]
    }

    /// Positions `i` with `a_i < a_{i+1}`.
    pub fn ascents(&self) -> Vec<usize> {
        (1..self.0.len()).filter(|&i| self.is_ascent(i)).collect()
    }

    /// `S(w)`: pairs of values `a < b` with `b` placed before `a`.
    pub fn inversion_set(&self) -> InversionSet {
        let mut out = BTreeSet::new();
        for (p, &x) in self.0.iter().enumerate() {
            for &y in &self.0[p + 1..] {
                if x > y {
                    out.insert(Root::new(y, x));
                }
            }
        }
        out
    }

    /// `ℓ(w)`, the number of inversions.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for (p, &x) in self.0.iter().enumerate() {
            count += self.0[p + 1..].iter().filter(|&&y| y < x).count();
        }
        count
    }

    /// `R⁺ ∖ S(w)`.
    pub fn complement_roots(&self) -> Result<InversionSet> {
        self.require_standard()?;
        let n = self.0.len() as u32;
        let inv = self.inversion_set();
        Ok((1..=n).flat_map(|i| (i + 1..=n).map(move |j| Root::new(i, j))).filter(|r| !inv.contains(r)).collect())
    }

    /// `τ(w) = {i : i+1 appears before i}`.
    pub fn tau(&self) -> Result<BTreeSet<u32>> {
        self.require_standard()?;
        let pos = self.positions();
        Ok((1..self.0.len() as u32).filter(|&i| pos[i as usize + 1] < pos[i as usize]).collect())
    }

    /// `y ⊴ w` in the weak order: `S(y) ⊆ S(w)`.
    pub fn duflo_leq(&self, w: &Word) -> Result<bool> {
        if self.len() != w.len() {
            return Err(Error::RankMismatch(self.len(), w.len()));
        }
        self.require_standard()?;
        w.require_standard()?;
        let pos = w.positions();
        // every inversion of self must be an inversion of w
        for (p, &x) in self.0.iter().enumerate() {
            for &y in &self.0[p + 1..] {
                if x > y && pos[x as usize] > pos[y as usize] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Table `pos[v] = p_w(v)` for a standard word (index 0 unused).
    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len() + 1];
        for (k, &a) in self.0.iter().enumerate() {
            pos[a as usize] = k + 1;
        }
        pos
    }

    /// `φ_j(w)`.
    pub fn renumber_up(&self, j: u32) -> Word {
        Word(self.0.iter().map(|&a| phi(j, a)).collect())
    }

    /// `φ_j⁻¹(w)`; requires `j ∉ ⟨w⟩`.
    pub fn renumber_down(&self, j: u32) -> Result<Word> {
        if self.contains(j) {
            return Err(Error::PresentEntry(j));
        }
        Ok(Word(self.0.iter().map(|&a| phi_inv(j, a)).collect()))
    }

    /// Order-preserving relabelling onto `{1,…,n}`.
    pub fn standardize(&self) -> Word {
        let sorted: Vec<u32> = self.0.iter().copied().sorted().collect();
        Word(self.0.iter().map(|a| sorted.binary_search(a).unwrap() as u32 + 1).collect())
    }

    /// Relabel entries `k ↦ alphabet[k−1]` (inverse of standardization).
    pub fn relabel(&self, alphabet: &[u32]) -> Word {
        Word(self.0.iter().map(|&a| alphabet[a as usize - 1]).collect())
    }

    /// The reversal `w̄ = [a_n, …, a_1]`.
    pub fn reversal(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// `w − m`: delete the entry `m`.
    pub fn delete(&self, m: u32) -> Result<Word> {
        if !self.contains(m) {
            return Err(Error::MissingEntry(m));
        }
        Ok(Word(self.0.iter().copied().filter(|&a| a != m).collect()))
    }

    /// `w_[i,j]`: the entries at positions `i..=j`.
    pub fn restrict(&self, i: usize, j: usize) -> Result<Word> {
        let n = self.0.len();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        if j < i || j > n {
            return Err(Error::IndexOutOfRange { index: j, max: n });
        }
        Ok(Word(self.0[i - 1..j].to_vec()))
    }

    /// The colligation `[x, y]`; alphabets must be disjoint.
    pub fn colligate(&self, other: &Word) -> Result<Word> {
        if let Some(&a) = other.0.iter().find(|a| self.0.contains(a)) {
            return Err(Error::Duplicate(a));
        }
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Ok(Word(v))
    }

    /// `w⁻¹` of a standard word.
    pub fn inverse(&self) -> Result<Word> {
        self.require_standard()?;
        Ok(Word(self.positions()[1..].iter().map(|&p| p as u32).collect()))
    }

    /// The product `self·other`, i.e. `k ↦ self(other(k))`.
    pub fn compose(&self, other: &Word) -> Result<Word> {
        if self.len() != other.len() {
            return Err(Error::RankMismatch(self.len(), other.len()));
        }
        self.require_standard()?;
        other.require_standard()?;
        Ok(Word(other.0.iter().map(|&k| self.0[k as usize - 1]).collect()))
    }

    /// Embeds a standard word of rank m into `S_n` (n ≥ m) by fixing `m+1,…,n`.
    pub fn embed(&self, n: usize) -> Word {
        let mut v = self.0.clone();
        v.extend(self.0.len() as u32 + 1..=n as u32);
        Word(v)
    }

    /// Splits off the largest entry, `w = (w−n)·s^>_{n−1,i}` with `i = p_w(n)`,
    /// or the smallest, `w = (w−1)·s^<_{1,i−1}` with `i = p_w(1)`.
    pub fn decompose_extreme(&self, which: Extreme) -> Result<ExtremeSplit> {
        self.require_standard()?;
        let n = self.0.len();
        if n == 0 {
            return Err(Error::Precondition("empty word".into()));
        }
        match which {
            Extreme::Max => {
                let i = self.position(n as u32)?;
                Ok(ExtremeSplit {
                    rest: self.delete(n as u32)?,
                    position: i,
                    cycle: range_cycle(n as u32 - 1, i as u32, CycleDir::Descending, n),
                })
            }
            Extreme::Min => {
                let i = self.position(1)?;
                Ok(ExtremeSplit {
                    rest: self.delete(1)?,
                    position: i,
                    cycle: range_cycle(1, i as u32 - 1, CycleDir::Ascending, n),
                })
            }
        }
    }
}

/// Word form of `s^<_{i,j}` (when `1 ≤ i ≤ j`) or `s^>_{i,j}` (when `i ≥ j ≥ 1`)
/// in `S_n`; the identity otherwise.
pub fn range_cycle(i: u32, j: u32, dir: CycleDir, n: usize) -> Word {
    let mut w = Word::identity(n);
    let steps: Vec<u32> = match dir {
        CycleDir::Ascending if i >= 1 && i <= j => (i..=j).collect(),
        CycleDir::Descending if j >= 1 && i >= j => (j..=i).rev().collect(),
        _ => Vec::new(),
    };
    for s in steps {
        let s = s as usize;
        assert!(s < n, "s_{s} is not a generator of S_{n}");
        w.0.swap(s - 1, s);
    }
    w
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses `[2,5,1,4,3]`; whitespace is tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse { kind: "word", token: t.to_string() })?;
        if inner.trim().is_empty() {
            return Ok(Word::default());
        }
        let entries = inner
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u32>().map_err(|_| Error::Parse { kind: "word", token: tok.to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn positions_and_swaps() {
        assert_eq!(w("[2,5,1,4,3]").position(5).unwrap(), 2);
        assert_eq!(Word::identity(4).position(3).unwrap(), 3);
        assert_eq!(w("[3,1,4,2,5]").position(2).unwrap(), 4);
        assert!(w("[3,1]").position(7).is_err());
        assert_eq!(w("[2,5,1,4,3]").apply_right_s(2).unwrap(), w("[2,1,5,4,3]"));
        assert_eq!(w("[1,2]").apply_right_s(1).unwrap(), w("[2,1]"));
        assert!(w("[1,2]").apply_right_s(2).is_err());
    }

    #[test]
    fn inversions_and_tau() {
        let s: Vec<_> = w("[3,1,4,2,5]").inversion_set().into_iter().collect();
        assert_eq!(s, vec![Root::new(1, 3), Root::new(2, 3), Root::new(2, 4)]);
        assert!(Word::identity(5).inversion_set().is_empty());
        assert_eq!(w("[2,5,1,4,3]").tau().unwrap(), [1, 3, 4].into_iter().collect());
        assert_eq!(Word::longest_element(5).tau().unwrap().len(), 4);
        assert!(Word::longest_element(4).complement_roots().unwrap().is_empty());
    }

    #[test]
    fn weak_order_basics() {
        let t = w("[3,1,4,2,5]");
        let z = w("[3,5,2,4,1]");
        assert!(!t.duflo_leq(&z).unwrap());
        assert!(Word::identity(5).duflo_leq(&z).unwrap());
        assert!(z.duflo_leq(&Word::longest_element(5)).unwrap());
        assert!(t.duflo_leq(&Word::identity(4)).is_err());
    }

    #[test]
    fn renumbering() {
        assert_eq!(w("[6,3,4,1,2]").renumber_down(5).unwrap(), w("[5,3,4,1,2]"));
        assert!(w("[6,3,4,1,2]").renumber_down(4).is_err());
        assert_eq!(w("[5,3,9]").standardize(), w("[2,1,3]"));
        let x = w("[2,5,1,4]");
        assert_eq!(x.renumber_up(3).renumber_down(3).unwrap(), x);
    }

    #[test]
    fn surgery() {
        assert_eq!(w("[2,5,1,4,3]").reversal(), w("[3,4,1,5,2]"));
        assert_eq!(w("[2,5,1,4,3]").delete(5).unwrap(), w("[2,1,4,3]"));
        assert_eq!(w("[2,5,1,4,3]").restrict(2, 4).unwrap(), w("[5,1,4]"));
        assert!(w("[1,2]").colligate(&w("[2]")).is_err());
    }

    #[test]
    fn cycles() {
        assert_eq!(range_cycle(3, 2, CycleDir::Ascending, 4), Word::identity(4));
        assert_eq!(range_cycle(5, 1, CycleDir::Descending, 6), w("[6,1,2,3,4,5]"));
        assert_eq!(range_cycle(2, 5, CycleDir::Ascending, 6), w("[1,3,4,5,6,2]"));
        // s_1 s_2 acting on values reads [2,3,1]
        let s1 = range_cycle(1, 1, CycleDir::Ascending, 3);
        let s2 = range_cycle(2, 2, CycleDir::Ascending, 3);
        assert_eq!(s1.compose(&s2).unwrap(), w("[2,3,1]"));
    }

    #[test]
    fn extreme_splits() {
        let x = w("[2,5,1,4,3]");
        let sp = x.decompose_extreme(Extreme::Max).unwrap();
        assert_eq!(sp.rest, w("[2,1,4,3]"));
        assert_eq!(sp.position, 2);
        assert_eq!(sp.rest.embed(5).compose(&sp.cycle).unwrap(), x);

        let t = w("[3,1,4,2,5]");
        let sp = t.decompose_extreme(Extreme::Min).unwrap();
        assert_eq!(sp.rest, w("[3,4,2,5]"));
        assert_eq!(sp.position, 2);
        let mut embedded = vec![1];
        embedded.extend_from_slice(sp.rest.entries());
        assert_eq!(Word::new(embedded).unwrap().compose(&sp.cycle).unwrap(), t);

        let id = Word::identity(4).decompose_extreme(Extreme::Max).unwrap();
        assert_eq!(id.rest, Word::identity(3));
        assert_eq!(id.cycle, Word::identity(4));
    }

    #[test]
    fn parsing() {
        assert_eq!(w(" [ 2, 5 ,1] "), Word::new(vec![2, 5, 1]).unwrap());
        assert_eq!(w("[]"), Word::default());
        assert!(matches!("[1,x]".parse::<Word>(), Err(Error::Parse { token, .. }) if token == "x"));
        assert!(matches!("[1,1]".parse::<Word>(), Err(Error::Duplicate(1))));
        assert!("1,2".parse::<Word>().is_err());
    }
}
