//! Young diagrams, the dominance order and its covers.
//!
//! The order follows the convention where a single column is the largest
//! diagram: `D_λ ≥ D_μ` iff every partial sum of `λ` is at most the
//! corresponding partial sum of `μ`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A partition `λ_1 ≥ λ_2 ≥ … ≥ λ_k > 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram(Vec<u32>);

impl Diagram {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidDiagram("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDiagram(format!("{} is not weakly decreasing", parts.iter().join(","))));
        }
        Ok(Diagram(parts))
    }

    /// Builds from row lengths, dropping trailing zeros.
    pub(crate) fn from_lengths(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Diagram(parts)
    }

    pub fn row(n: usize) -> Self {
        Self::from_lengths(vec![n as u32])
    }

    pub fn column(n: usize) -> Self {
        Diagram(vec![1; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `λ_i` (1-based); zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    /// The dual partition `λ*_i = #{j : λ_j ≥ i}`.
    pub fn dual(&self) -> Diagram {
        let width = self.part(1);
        Diagram((1..=width).map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32).collect())
    }

    /// Rows `i` with `λ_{i+1} < λ_i`, paired with their column `λ_i`.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        (1..=self.0.len()).filter(|&i| self.part(i + 1) < self.part(i)).map(|i| (i, self.part(i) as usize)).collect()
    }

    /// Hook number `h(i,j) = 1 + (λ*_j − i) + (λ_i − j)`.
    pub fn hook(&self, i: usize, j: usize) -> u32 {
        let dual = self.dual();
        1 + (dual.part(j) - i as u32) + (self.part(i) - j as u32)
    }

    /// `D_self ≥ D_other`: every partial sum of `self` is `≤` that of `other`.
    pub fn dominance_geq(&self, other: &Diagram) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::InvalidDiagram(format!("sizes differ: {} vs {}", self.size(), other.size())));
        }
        let len = self.0.len().max(other.0.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 1..=len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `D_self > D_other` strictly.
    pub fn dominance_gt(&self, other: &Diagram) -> Result<bool> {
        Ok(self != other && self.dominance_geq(other)?)
    }

    /// The covers of `self` in the dominance order: one box pushed down a row
    /// (when `μ_i − μ_{i+1} ≥ 2`), or one box moved across a staircase
    /// (`μ_{i+1} = … = μ_{i+k} = μ_i − 1`, `μ_{i+k+1} = μ_i − 2`).
    pub fn descendants(&self) -> BTreeSet<Diagram> {
        let mu = &self.0;
        let k = mu.len();
        let mut out = BTreeSet::new();
        for i in 1..=k {
            let mi = self.part(i);
            if mi >= self.part(i + 1) + 2 {
                let mut lam = mu.clone();
                lam.resize(k + 1, 0);
                lam[i - 1] -= 1;
                lam[i] += 1;
                out.insert(Diagram::from_lengths(lam));
            }
            if mi >= 2 {
                let mut j = i + 1;
                while self.part(j) == mi - 1 {
                    j += 1;
                }
                if j > i + 1 && self.part(j) == mi - 2 {
                    let mut lam = mu.clone();
                    lam.resize(k + 1, 0);
                    lam[i - 1] -= 1;
                    lam[j - 1] += 1;
                    out.insert(Diagram::from_lengths(lam));
                }
            }
        }
        out
    }

    /// All partitions of `n`, in reverse lexicographic order (row first).
    pub fn all(n: usize) -> Vec<Diagram> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Diagram>) {
            if n == 0 {
                out.push(Diagram(cur.clone()));
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n as u32, n as u32, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

impl FromStr for Diagram {
    type Err = Error;

    /// Parses `3,2,1` (parentheses and whitespace tolerated).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.trim().is_empty() {
            return Ok(Diagram::default());
        }
        let parts = t
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u32>().map_err(|_| Error::Parse { kind: "partition", token: tok.to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        Diagram::new(parts)
    }
}

/// A decreasing chain `(D_n, …, D_1)` with `|D_i| = i`, each step removing one box.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagramChain(Vec<Diagram>);

impl DiagramChain {
    pub fn new(chain: Vec<Diagram>) -> Result<Self> {
        let n = chain.len();
        for (k, d) in chain.iter().enumerate() {
            if d.size() != n - k {
                return Err(Error::MalformedChain(format!("diagram {d} should have {} boxes", n - k)));
            }
        }
        for pair in chain.windows(2) {
            let (big, small) = (&pair[0], &pair[1]);
            let rows = big.num_rows();
            let diff: u32 = (1..=rows).map(|i| big.part(i).saturating_sub(small.part(i))).sum();
            let contained = (1..=small.num_rows()).all(|i| small.part(i) <= big.part(i));
            if !contained || diff != 1 {
                return Err(Error::MalformedChain(format!("{small} is not {big} minus one box")));
            }
        }
        Ok(DiagramChain(chain))
    }

    pub fn diagrams(&self) -> &[Diagram] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for DiagramChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().map(|d| format!("({d})")).join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn dual_and_corners() {
        assert_eq!(d("4,3,1").dual(), d("3,2,2,1"));
        assert_eq!(d("4,3,1,1").corners().iter().map(|c| c.0).collect::<Vec<_>>(), vec![1, 2, 4]);
        assert_eq!(d("5").corners(), vec![(1, 5)]);
        assert_eq!(d("3,2").hook(1, 1), 4);
    }

    #[test]
    fn dominance() {
        assert!(d("1,1,1").dominance_geq(&d("3")).unwrap());
        assert!(d("4,3,2,1").dominance_geq(&d("4,4,1,1")).unwrap());
        assert!(!d("3,1,1,1").dominance_geq(&d("2,2,2")).unwrap());
        assert!(!d("2,2,2").dominance_geq(&d("3,1,1,1")).unwrap());
        assert!(d("2,1").dominance_geq(&d("3,1")).is_err());
    }

    #[test]
    fn covers() {
        assert!(d("4,4,1,1").descendants().contains(&d("4,3,2,1")));
        assert!(d("4,3,2,1").descendants().contains(&d("3,3,3,1")));
        assert_eq!(d("6").descendants().into_iter().collect::<Vec<_>>(), vec![d("5,1")]);
        assert_eq!(d("2,1").descendants().into_iter().collect::<Vec<_>>(), vec![d("1,1,1")]);
    }

    #[test]
    fn partitions_counted() {
        let counts: Vec<usize> = (1..=8).map(|n| Diagram::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn chains_validated() {
        assert!(DiagramChain::new(vec![d("2,1"), d("2"), d("1")]).is_ok());
        assert!(DiagramChain::new(vec![d("2,1"), d("1,1"), d("2")]).is_err());
        assert!(DiagramChain::new(vec![d("3"), d("1,1"), d("1")]).is_err());
    }

    #[test]
    fn parse_errors_name_token() {
        assert!(matches!("3,x".parse::<Diagram>(), Err(Error::Parse { token, .. }) if token == "x"));
        assert!("1,2".parse::<Diagram>().is_err());
    }
}
