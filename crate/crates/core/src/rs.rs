//! The Robinson–Schensted correspondence and Steinberg cells.
//!
//! A cell `C_T` is the set of words whose insertion tableau is `T`. Cells are
//! built recursively from the row decomposition: every `w ∈ C_T` is uniquely
//! `[φ_p(y), p]` with `p = c^T` for a corner `c` and `y` in the cell of the
//! standardized `(T ⇑ c)`. Results are memoized per standard tableau.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::diagram::{Diagram, DiagramChain};
use crate::error::{Error, Result};
use crate::tableau::{Corner, Tableau};
use crate::words::{range_cycle, CycleDir, Word};

/// The pair `θ(w) = (T(w), Q(w))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RsPair {
    pub insertion: Tableau,
    pub recording: Tableau,
}

/// `C_T` together with its tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub tableau: Tableau,
    pub members: BTreeSet<Word>,
}

/// One part of a cell decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellPart {
    pub corner: Corner,
    /// `p = c^T` for the row decomposition, `q = ^T c` for the column one.
    pub entry: u32,
    /// `s^<_{p,n−1}` or `s^>_{q−1,1}` in word form.
    pub multiplier: Word,
    /// The standardized `(T ⇑ c)` or `(T ⇐ c)`.
    pub subtableau: Tableau,
    /// The words of `C_T` contributed by this part.
    pub words: BTreeSet<Word>,
}

/// Prefix tableaux `₁T(w), …, ₙT(w)`.
pub fn rs_trace(w: &Word) -> Vec<Tableau> {
    let mut t = Tableau::empty();
    w.entries()
        .iter()
        .map(|&a| {
            t.insert_mut(a);
            t.clone()
        })
        .collect()
}

/// `T(w)`: insert the entries of `w` from left to right.
pub fn rs_tableau(w: &Word) -> Tableau {
    let mut t = Tableau::empty();
    for &a in w.entries() {
        t.insert_mut(a);
    }
    t
}

/// `θ(w) = (T(w), Q(w))` with `Q(w) = ψ⁻¹` of the shape trace.
pub fn rs_pair(w: &Word) -> Result<RsPair> {
    if !w.is_standard() {
        return Err(Error::NotStandard(w.to_string()));
    }
    let trace = rs_trace(w);
    let shapes: Vec<Diagram> = trace.iter().rev().map(Tableau::shape).collect();
    let recording = Tableau::chain_psi_inverse(&DiagramChain::new(shapes)?)?;
    let insertion = trace.into_iter().last().unwrap_or_default();
    Ok(RsPair { insertion, recording })
}

/// `Q(w)` built by writing `k` into the box created at step `k`.
pub fn recording_by_boxes(w: &Word) -> Tableau {
    let mut t = Tableau::empty();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (k, &a) in w.entries().iter().enumerate() {
        let c = t.insert_mut(a);
        if c.row > rows.len() {
            rows.push(Vec::new());
        }
        rows[c.row - 1].push(k as u32 + 1);
    }
    Tableau::from_rows(rows)
}

/// `θ⁻¹`: peel off `n, n−1, …` from `Q` and undo the matching insertions.
pub fn rs_inverse(pair: &RsPair) -> Result<Word> {
    let (mut t, mut q) = (pair.insertion.clone(), pair.recording.clone());
    if t.shape() != q.shape() {
        return Err(Error::Precondition(format!("shapes differ: {} vs {}", t.shape(), q.shape())));
    }
    t.require_standard()?;
    q.require_standard()?;
    let n = t.size();
    let mut out = vec![0; n];
    for k in (1..=n as u32).rev() {
        let c = q.corner_of_entry(k).expect("the largest entry of a standard tableau is a corner");
        let del = t.delete_corner(c)?;
        out[k as usize - 1] = del.expelled;
        t = del.tableau;
        q = q.jdt_remove(k)?;
    }
    Ok(Word::from_vec(out))
}

static CELL_MEMO: Lazy<RwLock<HashMap<Tableau, Arc<BTreeSet<Word>>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// `C_T` for a standard tableau, via the row decomposition (memoized).
pub fn cell_members(t: &Tableau) -> Result<Arc<BTreeSet<Word>>> {
    t.require_standard()?;
    Ok(cell_members_std(t))
}

fn cell_members_std(t: &Tableau) -> Arc<BTreeSet<Word>> {
    if let Some(hit) = CELL_MEMO.read().get(t) {
        return Arc::clone(hit);
    }
    let members: BTreeSet<Word> = if t.size() <= 1 {
        BTreeSet::from([Word::identity(t.size())])
    } else {
        row_parts(t).into_iter().flat_map(|p| p.words).collect()
    };
    let members = Arc::new(members);
    CELL_MEMO.write().entry(t.clone()).or_insert_with(|| Arc::clone(&members));
    members
}

/// `C_T` for any tableau; alphabet tableaux are standardized and relabelled.
pub fn cell(t: &Tableau) -> Cell {
    let (std, alphabet) = t.standardize();
    let members = cell_members_std(&std).iter().map(|w| w.relabel(&alphabet)).collect();
    Cell { tableau: t.clone(), members }
}

fn row_parts(t: &Tableau) -> Vec<CellPart> {
    let n = t.size();
    t.corners()
        .into_iter()
        .map(|c| {
            let del = t.delete_corner(c).expect("corner from corners()");
            let p = del.expelled;
            let sub = del.tableau.renumber_down(p).expect("expelled entry is absent");
            let words = cell_members_std(&sub)
                .iter()
                .map(|y| {
                    let mut v = y.renumber_up(p).into_entries();
                    v.push(p);
                    Word::from_vec(v)
                })
                .collect();
            CellPart {
                corner: c,
                entry: p,
                multiplier: range_cycle(p, n as u32 - 1, CycleDir::Ascending, n),
                subtableau: sub,
                words,
            }
        })
        .collect()
}

/// `C_T = ⨿ s^<_{p_i,n−1}·C_{(T⇑c_i)}` with `p_i = c_i^T`.
pub fn decompose_cell_rows(t: &Tableau) -> Result<Vec<CellPart>> {
    t.require_standard()?;
    if t.size() < 2 {
        return Err(Error::Precondition("decomposition needs at least two entries".into()));
    }
    Ok(row_parts(t))
}

/// `C_T = ⨿ s^>_{q_i−1,1}·φ_1(C_{(T⇐c_i)})` with `q_i = ^T c_i`.
pub fn decompose_cell_cols(t: &Tableau) -> Result<Vec<CellPart>> {
    t.require_standard()?;
    let n = t.size();
    if n < 2 {
        return Err(Error::Precondition("decomposition needs at least two entries".into()));
    }
    Ok(t.corners()
        .into_iter()
        .map(|c| {
            let del = t.column_delete(c).expect("corner from corners()");
            let q = del.expelled;
            let sub = del.tableau.renumber_down(q).expect("expelled entry is absent");
            let multiplier = range_cycle(q - 1, 1, CycleDir::Descending, n);
            let words = cell_members_std(&sub)
                .iter()
                .map(|y| {
                    let shifted = Word::from_vec(std::iter::once(1).chain(y.renumber_up(1).into_entries()).collect());
                    multiplier.compose(&shifted).expect("equal ranks")
                })
                .collect();
            CellPart { corner: c, entry: q, multiplier, subtableau: sub, words }
        })
        .collect())
}

/// `(w_r(T), w_c(T))`.
pub fn canonical_words(t: &Tableau) -> (Word, Word) {
    (t.row_word(), t.column_word())
}

/// `|C_T|` as the number of standard tableaux of `sh(T)`.
pub fn cell_size(t: &Tableau) -> usize {
    Tableau::of_shape(&t.shape()).len()
}

/// `n! / ∏ h(i,j)` for the shape `d`.
pub fn hook_length_count(d: &Diagram) -> u128 {
    let n = d.size() as u128;
    let num: u128 = (1..=n).product();
    let den: u128 = (1..=d.num_rows())
        .flat_map(|i| (1..=d.part(i) as usize).map(move |j| (i, j)))
        .map(|(i, j)| d.hook(i, j) as u128)
        .product();
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn trace_of_worked_word() {
        let trace: Vec<String> = rs_trace(&w("[2,5,1,4,3]")).iter().map(|x| x.to_string()).collect();
        assert_eq!(trace, vec!["2", "2 5", "1 5/2", "1 4/2 5", "1 3/2 4/5"]);
    }

    #[test]
    fn recording_matches_box_order() {
        for x in Word::all(5) {
            let pair = rs_pair(&x).unwrap();
            assert_eq!(pair.recording, recording_by_boxes(&x));
            assert_eq!(rs_inverse(&pair).unwrap(), x);
        }
    }

    #[test]
    fn cells_of_small_examples() {
        let members: Vec<String> = cell(&t("1 2 5/3 4")).members.iter().map(|x| x.to_string()).collect();
        assert_eq!(members, vec!["[3,1,4,2,5]", "[3,1,4,5,2]", "[3,4,1,2,5]", "[3,4,1,5,2]", "[3,4,5,1,2]"]);
        assert_eq!(cell(&Tableau::row_tableau(4)).members, BTreeSet::from([Word::identity(4)]));
    }

    #[test]
    fn decompositions_cover_cell() {
        let x = t("1 2 5/3 4/6");
        let rows = decompose_cell_rows(&x).unwrap();
        let ps: Vec<u32> = rows.iter().map(|p| p.entry).collect();
        assert_eq!(ps, vec![5, 2, 2]);
        let cols = decompose_cell_cols(&x).unwrap();
        let all = &cell(&x).members;
        for parts in [rows, cols] {
            let union: BTreeSet<Word> = parts.iter().flat_map(|p| p.words.iter().cloned()).collect();
            assert_eq!(&union, all);
            assert_eq!(parts.iter().map(|p| p.words.len()).sum::<usize>(), all.len());
        }
    }

    #[test]
    fn sizes() {
        assert_eq!(cell_size(&t("1 2 3/4")), 3);
        assert_eq!(hook_length_count(&"3,2".parse().unwrap()), 5);
        assert_eq!(hook_length_count(&"2,2".parse().unwrap()), 2);
    }
}
