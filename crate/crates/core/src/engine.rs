//! The induced Duflo order on standard tableaux.
//!
//! Offspring sets `𝒟(T)` are computed by two independent recursions:
//!
//! * the row recursion: `𝒟(T) = 𝒟_o(T) ∪ 𝒟′_n(T)`, where `𝒟_o` lifts the
//!   offsprings of every `(T ⇑ c)` by re-inserting `c^T`, and `𝒟′_n` adds the
//!   corner shifts `S_T(c)` produced by `s_{n−1}`;
//! * the column recursion: `𝒟(T) = 𝒟_v(T) ∪ 𝒟_1(T)`, lifting the offsprings of
//!   every `(T ⇐ c)` by column insertion of `^T c` and adding the shifts
//!   `_T S(c)` produced by `s_1`.
//!
//! Both recursions are memoized on standard tableaux. The order itself is the
//! reflexive–transitive closure of the offspring relation.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;
use std::sync::Arc;

use once_cell::sync::Lazy;
use parking_lot::RwLock;
use rayon::prelude::*;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::tableau::{Corner, Tableau};
use crate::words::Word;

/// `𝒟(T)` for a tableau `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OffspringSet {
    pub source: Tableau,
    pub offsprings: BTreeSet<Tableau>,
}

impl OffspringSet {
    /// Offsprings sorted by text serialization.
    pub fn sorted(&self) -> Vec<&Tableau> {
        let mut v: Vec<&Tableau> = self.offsprings.iter().collect();
        v.sort_by_cached_key(|t| t.to_string());
        v
    }
}

type Memo = Lazy<RwLock<HashMap<Tableau, Arc<BTreeSet<Tableau>>>>>;

static ROW_MEMO: Memo = Lazy::new(|| RwLock::new(HashMap::new()));
static COLUMN_MEMO: Memo = Lazy::new(|| RwLock::new(HashMap::new()));

/// Keeps `s` only when it is a tableau whose shape lies strictly above `sh(T)`.
fn keep_if_lower(rows: Vec<Vec<u32>>, t: &Tableau) -> Option<Tableau> {
    let s = Tableau::from_rows_unchecked(rows);
    if s.validate().is_err() {
        return None;
    }
    s.shape().dominance_gt(&t.shape()).ok()?.then_some(s)
}

/// `S_T(c)`: the offspring obtained from `c` through `s_{n−1}`, if any.
///
/// For the first-row corner the last box of row 1 is lowered by insertion into
/// the remaining rows, provided `|T¹| ≥ |T²| + 2` or `|T¹| = |T²| + 1` and
/// `ω¹(T) < ω²(T)`. For any other corner `c` with `c^T = ω¹(T)`, the first row
/// of `(T ⇑ c)` is kept and `ω¹(T)` is inserted into the rows below it; the
/// result counts only if it is a tableau of strictly larger shape.
pub fn corner_shift(t: &Tableau, c: Corner) -> Result<Option<Tableau>> {
    t.require_standard()?;
    if !t.is_corner(c) {
        return Err(Error::NotACorner { row: c.row, col: c.col });
    }
    if t.size() < 2 {
        return Ok(None);
    }
    let omega = t.row_max(1).expect("nonempty");
    if c.row == 1 {
        let (l1, l2) = (t.row(1).len(), t.row(2).len());
        let lowered = l1 >= l2 + 2 || (l1 == l2 + 1 && t.row_max(2).is_some_and(|w2| omega < w2));
        if !lowered {
            return Ok(None);
        }
        let top = &t.row(1)[..l1 - 1];
        let mut rest = t.rows_from(2);
        rest.insert_mut(omega);
        let mut rows = vec![top.to_vec()];
        rows.extend(rest.into_rows());
        return Ok(keep_if_lower(rows, t));
    }
    let del = t.delete_corner(c)?;
    if del.expelled != omega {
        return Ok(None);
    }
    let mut rest = del.tableau.rows_from(2);
    rest.insert_mut(omega);
    let mut rows = vec![del.tableau.row(1).to_vec()];
    rows.extend(rest.into_rows());
    Ok(keep_if_lower(rows, t))
}

/// Runs `f` on the standardization of `t` and relabels the results back.
fn via_standard(t: &Tableau, f: fn(&Tableau) -> Arc<BTreeSet<Tableau>>) -> OffspringSet {
    let (std, alphabet) = t.standardize();
    let offsprings = f(&std).iter().map(|s| s.relabel(&alphabet)).collect();
    OffspringSet { source: t.clone(), offsprings }
}

fn memoized(memo: &Memo, t: &Tableau, compute: impl FnOnce() -> BTreeSet<Tableau>) -> Arc<BTreeSet<Tableau>> {
    if let Some(hit) = memo.read().get(t) {
        return Arc::clone(hit);
    }
    let value = Arc::new(compute());
    Arc::clone(memo.write().entry(t.clone()).or_insert(value))
}

fn row_recursion(t: &Tableau) -> Arc<BTreeSet<Tableau>> {
    memoized(&ROW_MEMO, t, || {
        if t.size() <= 1 {
            return BTreeSet::from([t.clone()]);
        }
        let mut out = BTreeSet::new();
        for c in t.corners() {
            let del = t.delete_corner(c).expect("corner");
            let p = del.expelled;
            let sub = del.tableau.renumber_down(p).expect("absent entry");
            for s in row_recursion(&sub).iter() {
                let mut lifted = s.renumber_up(p);
                lifted.insert_mut(p);
                out.insert(lifted);
            }
            if let Some(s) = corner_shift(t, c).expect("standard tableau, valid corner") {
                out.insert(s);
            }
        }
        out
    })
}

/// `𝒟(T)` by the row recursion.
pub fn offsprings_recursive(t: &Tableau) -> OffspringSet {
    via_standard(t, row_recursion)
}

/// `_T S(c)`: the offspring obtained from `c` through `s_1`, if any.
///
/// With `d = ^{T_{2,∞}} c` and `Ṫ = (T_{2,∞} ⇐ c)`: if `d > T^k_1` the first
/// column is extended by `d`; if `T^{k−1}_1 < d < T^k_1`, `d` is column-inserted
/// into `(T_1, Ṫ)`. The corner `c(k,1)` never contributes.
pub fn dual_corner_shift(t: &Tableau, c: Corner) -> Result<Option<Tableau>> {
    t.require_standard()?;
    if !t.is_corner(c) {
        return Err(Error::NotACorner { row: c.row, col: c.col });
    }
    let k = t.num_rows();
    if c.col == 1 {
        return Ok(None);
    }
    let tail = t.cols_from(2);
    let del = tail.column_delete(Corner { row: c.row, col: c.col - 1 })?;
    let d = del.expelled;
    let first_col = t.column(1);
    let bottom = t.entry(k, 1).expect("nonempty");
    let above = if k >= 2 { t.entry(k - 1, 1).unwrap() } else { 0 };
    let s = if d > bottom {
        let mut col = first_col;
        col.push(d);
        let left = Tableau::from_rows_unchecked(col.into_iter().map(|a| vec![a]).collect());
        Tableau::concat_columns(&left, &del.tableau)
    } else if above < d {
        let left = Tableau::from_rows_unchecked(first_col.into_iter().map(|a| vec![a]).collect());
        Tableau::concat_columns(&left, &del.tableau).and_then(|base| Ok(base.column_insert(d)?.tableau))
    } else {
        return Ok(None);
    };
    Ok(s.ok().and_then(|s| keep_if_lower(s.into_rows(), t)))
}

fn column_recursion(t: &Tableau) -> Arc<BTreeSet<Tableau>> {
    memoized(&COLUMN_MEMO, t, || {
        if t.size() <= 1 {
            return BTreeSet::from([t.clone()]);
        }
        let mut out = BTreeSet::new();
        for c in t.corners() {
            let del = t.column_delete(c).expect("corner");
            let q = del.expelled;
            let sub = del.tableau.renumber_down(q).expect("absent entry");
            for s in column_recursion(&sub).iter() {
                out.insert(s.renumber_up(q).column_insert(q).expect("absent entry").tableau);
            }
            if let Some(s) = dual_corner_shift(t, c).expect("standard tableau, valid corner") {
                out.insert(s);
            }
        }
        out
    })
}

/// `𝒟(T)` by the column recursion.
pub fn offsprings_dual(t: &Tableau) -> OffspringSet {
    via_standard(t, column_recursion)
}

/// A finite poset on `𝐓_n` given by its reach (≤) relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauPoset {
    n: usize,
    elements: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    reach: Vec<Vec<bool>>,
    covers: BTreeSet<(usize, usize)>,
}

impl TableauPoset {
    /// Closes `edges` (pairs of element indices) reflexively and transitively,
    /// then extracts the covers.
    pub fn from_edges(n: usize, elements: Vec<Tableau>, edges: &[(usize, usize)]) -> Self {
        let m = elements.len();
        let mut adj = vec![Vec::new(); m];
        for &(a, b) in edges {
            adj[a].push(b);
        }
        let reach = (0..m)
            .map(|s| {
                let mut seen = vec![false; m];
                seen[s] = true;
                let mut queue = VecDeque::from([s]);
                while let Some(x) = queue.pop_front() {
                    for &y in &adj[x] {
                        if !seen[y] {
                            seen[y] = true;
                            queue.push_back(y);
                        }
                    }
                }
                seen
            })
            .collect();
        Self::from_reach(n, elements, reach)
    }

    /// Builds the poset from a reflexive–transitive reach matrix.
    pub fn from_reach(n: usize, elements: Vec<Tableau>, reach: Vec<Vec<bool>>) -> Self {
        let m = elements.len();
        let index = elements.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        let mut covers = BTreeSet::new();
        for a in 0..m {
            for b in 0..m {
                if a != b && reach[a][b] && !(0..m).any(|c| c != a && c != b && reach[a][c] && reach[c][b]) {
                    covers.insert((a, b));
                }
            }
        }
        TableauPoset { n, elements, index, reach, covers }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Elements sorted by text serialization.
    pub fn elements(&self) -> &[Tableau] {
        &self.elements
    }

    pub fn reach(&self) -> &[Vec<bool>] {
        &self.reach
    }

    /// Cover pairs `(a, b)` with `a <_D b`, as element indices.
    pub fn covers(&self) -> &BTreeSet<(usize, usize)> {
        &self.covers
    }

    pub fn index_of(&self, t: &Tableau) -> Result<usize> {
        self.index
            .get(t)
            .copied()
            .ok_or_else(|| Error::Precondition(format!("{t} is not a standard tableau of size {}", self.n)))
    }

    /// `T ≤_D S`.
    pub fn leq(&self, t: &Tableau, s: &Tableau) -> Result<bool> {
        Ok(self.reach[self.index_of(t)?][self.index_of(s)?])
    }

    /// Everything above `T`, including `T`.
    pub fn up_set(&self, t: &Tableau) -> Result<Vec<&Tableau>> {
        let i = self.index_of(t)?;
        Ok((0..self.elements.len()).filter(|&j| self.reach[i][j]).map(|j| &self.elements[j]).collect())
    }

    /// Duflo descendants of `T`: its upper covers.
    pub fn descendants(&self, t: &Tableau) -> Result<Vec<&Tableau>> {
        let i = self.index_of(t)?;
        Ok(self.covers.range((i, 0)..(i + 1, 0)).map(|&(_, b)| &self.elements[b]).collect())
    }

    /// The set of all pairs `(T, S)` with `T ≤ S`.
    pub fn relation(&self) -> BTreeSet<(Tableau, Tableau)> {
        let m = self.elements.len();
        (0..m)
            .flat_map(|a| (0..m).filter(move |&b| self.reach[a][b]).map(move |b| (a, b)))
            .map(|(a, b)| (self.elements[a].clone(), self.elements[b].clone()))
            .collect()
    }

    /// Reflexive, antisymmetric and transitive.
    pub fn is_partial_order(&self) -> bool {
        let m = self.elements.len();
        (0..m).all(|a| self.reach[a][a])
            && (0..m).all(|a| (0..m).all(|b| a == b || !(self.reach[a][b] && self.reach[b][a])))
            && (0..m)
                .all(|a| (0..m).all(|b| !self.reach[a][b] || (0..m).all(|c| !self.reach[b][c] || self.reach[a][c])))
    }

    /// Graphviz export with cover edges only.
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph duflo_{} {{\n  rankdir=BT;\n", self.n);
        for (i, t) in self.elements.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{t}\"];");
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }

    /// JSON export: `{"schema":1,"n":…,"nodes":[…],"covers":[[i,j],…]}` plus
    /// `"reach"` when requested.
    pub fn to_json(&self, with_reach: bool) -> serde_json::Value {
        let mut v = serde_json::json!({
            "schema": 1,
            "n": self.n,
            "nodes": self.elements.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            "covers": self.covers.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
        });
        if with_reach {
            let m = self.elements.len();
            let pairs: Vec<[usize; 2]> =
                (0..m).flat_map(|a| (0..m).filter(move |&b| self.reach[a][b]).map(move |b| [a, b])).collect();
            v["reach"] = serde_json::json!(pairs);
        }
        v
    }
}

static POSET_MEMO: Lazy<RwLock<HashMap<usize, Arc<TableauPoset>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// The induced Duflo order on `𝐓_n`, from the row recursion.
pub fn induced_order(n: usize) -> Arc<TableauPoset> {
    if let Some(hit) = POSET_MEMO.read().get(&n) {
        return Arc::clone(hit);
    }
    let elements = Tableau::all_standard(n);
    let index: HashMap<&Tableau, usize> = elements.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let edges: Vec<(usize, usize)> = elements
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, t)| {
            let set = row_recursion(t);
            set.iter().map(|s| (i, index[s])).collect::<Vec<_>>()
        })
        .collect();
    let poset = Arc::new(TableauPoset::from_edges(n, elements.clone(), &edges));
    Arc::clone(POSET_MEMO.write().entry(n).or_insert(poset))
}

/// Duflo descendants (upper covers) of a standard tableau.
pub fn duflo_descendants(t: &Tableau) -> Result<Vec<Tableau>> {
    t.require_standard()?;
    let poset = induced_order(t.size());
    Ok(poset.descendants(t)?.into_iter().cloned().collect())
}

/// Some `S ≥_D T` with `sh(S) = shape`; the least such `S` by serialization.
pub fn shape_witness(t: &Tableau, shape: &Diagram) -> Result<Tableau> {
    t.require_standard()?;
    if !shape.dominance_geq(&t.shape())? {
        return Err(Error::Precondition(format!("{shape} does not lie above {}", t.shape())));
    }
    if shape == &t.shape() {
        return Ok(t.clone());
    }
    let poset = induced_order(t.size());
    poset
        .up_set(t)?
        .into_iter()
        .find(|s| &s.shape() == shape)
        .cloned()
        .ok_or_else(|| Error::NoWitness { tableau: t.to_string(), shape: shape.to_string() })
}

/// `π_{i,j}(w)`: the subword of `w` on the entries of `[i, j]`.
pub fn project_word(w: &Word, i: u32, j: u32) -> Result<Word> {
    if !w.is_standard() {
        return Err(Error::NotStandard(w.to_string()));
    }
    let n = w.len();
    if i < 1 || i > j || j as usize > n {
        return Err(Error::Precondition(format!("interval [{i},{j}] is not inside [1,{n}]")));
    }
    Ok(Word::from_vec(w.entries().iter().copied().filter(|&a| (i..=j).contains(&a)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn set(v: &[&str]) -> BTreeSet<Tableau> {
        v.iter().map(|s| t(s)).collect()
    }

    #[test]
    fn two_box_offsprings() {
        assert_eq!(offsprings_recursive(&t("1 2")).offsprings, set(&["1 2", "1/2"]));
        assert_eq!(offsprings_dual(&t("1 2")).offsprings, set(&["1 2", "1/2"]));
        assert_eq!(offsprings_recursive(&t("1/2")).offsprings, set(&["1/2"]));
        assert_eq!(offsprings_dual(&t("1/2")).offsprings, set(&["1/2"]));
    }

    #[test]
    fn corner_shift_examples() {
        let x = t("1 2 6 7/3 5/4");
        assert_eq!(corner_shift(&x, Corner { row: 1, col: 4 }).unwrap(), Some(t("1 2 6/3 5 7/4")));
        // c^T = 2 = ω¹(T): the last entry of row 1 is lowered, giving the
        // offspring reached by [3,4,1,2]·s_3 = [3,4,2,1]
        let y = t("1 2/3 4");
        assert_eq!(corner_shift(&y, Corner { row: 2, col: 2 }).unwrap(), Some(t("1 4/2/3")));
        let z = t("1 3/2 4");
        assert_eq!(corner_shift(&z, Corner { row: 2, col: 2 }).unwrap(), None);
    }

    #[test]
    fn both_recursions_agree_small() {
        for n in 1..=5 {
            for x in Tableau::all_standard(n) {
                assert_eq!(offsprings_recursive(&x), offsprings_dual(&x), "{x}");
            }
        }
    }

    #[test]
    fn extremes_of_order() {
        let p = induced_order(4);
        assert!(p.is_partial_order());
        for x in p.elements() {
            assert!(p.leq(&Tableau::row_tableau(4), x).unwrap());
            assert!(p.leq(x, &Tableau::column_tableau(4)).unwrap());
        }
        assert!(duflo_descendants(&Tableau::column_tableau(4)).unwrap().is_empty());
    }

    #[test]
    fn word_projection() {
        let w: Word = "[2,5,1,4,3]".parse().unwrap();
        assert_eq!(project_word(&w, 1, 4).unwrap().to_string(), "[2,1,4,3]");
        assert_eq!(project_word(&w, 1, 5).unwrap(), w);
        assert!(project_word(&w, 3, 6).is_err());
    }

    #[test]
    fn witness() {
        assert_eq!(shape_witness(&t("1 2/3"), &"1,1,1".parse().unwrap()).unwrap(), t("1/2/3"));
        assert_eq!(shape_witness(&t("1 2/3"), &"2,1".parse().unwrap()).unwrap(), t("1 2/3"));
        assert!(shape_witness(&t("1 2/3"), &"3".parse().unwrap()).is_err());
    }
}
