//! Brute-force ground truth over the whole symmetric group.
//!
//! Nothing here uses the offspring recursions: cells are found by filtering
//! `S_n` through RS insertion, offsprings by trying every ascent of every
//! member, and the order by walking chains of words.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use rayon::prelude::*;

use crate::engine::{OffspringSet, TableauPoset};
use crate::error::Result;
use crate::rs::rs_tableau;
use crate::tableau::Tableau;
use crate::words::Word;

/// The ascent edges `w → w·s_i` of the weak order on `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverGraph {
    pub n: usize,
    pub edges: BTreeSet<(Word, Word)>,
}

impl CoverGraph {
    pub fn out_degree(&self, w: &Word) -> usize {
        self.edges.range((w.clone(), Word::default())..).take_while(|(a, _)| a == w).count()
    }

    /// `y` reaches `w` along ascent edges.
    pub fn reaches(&self, y: &Word, w: &Word) -> bool {
        let mut seen = BTreeSet::from([y.clone()]);
        let mut queue = VecDeque::from([y.clone()]);
        while let Some(x) = queue.pop_front() {
            if &x == w {
                return true;
            }
            for (_, z) in self.edges.range((x.clone(), Word::default())..).take_while(|(a, _)| a == &x) {
                if seen.insert(z.clone()) {
                    queue.push_back(z.clone());
                }
            }
        }
        false
    }
}

fn ascent_successors(w: &Word) -> impl Iterator<Item = Word> + '_ {
    w.ascents().into_iter().map(move |i| w.apply_right_s(i).expect("ascent position"))
}

/// All ascent edges over `S_n`.
pub fn weak_covers(n: usize) -> CoverGraph {
    let edges = Word::all(n).flat_map(|w| ascent_successors(&w).map(|z| (w.clone(), z)).collect::<Vec<_>>()).collect();
    CoverGraph { n, edges }
}

/// `C_T` by filtering `S_n`.
pub fn cell_by_filter(t: &Tableau) -> Result<BTreeSet<Word>> {
    t.require_standard()?;
    Ok(Word::all(t.size()).filter(|w| &rs_tableau(w) == t).collect())
}

/// Adds the conventions for the two trivial cells: the row tableau is an
/// offspring of itself and the column tableau has only itself.
fn apply_conventions(t: &Tableau, set: &mut BTreeSet<Tableau>) {
    let n = t.size();
    if *t == Tableau::column_tableau(n) {
        set.clear();
    }
    set.insert(t.clone());
}

/// `𝒟(T)` straight from the definition: `T(y·s_i)` over ascents of `y ∈ C_T`.
pub fn offsprings_bruteforce(t: &Tableau) -> Result<OffspringSet> {
    let mut offsprings = BTreeSet::new();
    for y in cell_by_filter(t)? {
        offsprings.extend(ascent_successors(&y).map(|z| rs_tableau(&z)));
    }
    apply_conventions(t, &mut offsprings);
    Ok(OffspringSet { source: t.clone(), offsprings })
}

/// `𝒟(T)` for every `T ∈ 𝐓_n` in one sweep over `S_n`, parallel over the
/// first entry of the word.
pub fn offsprings_bruteforce_all(n: usize) -> BTreeMap<Tableau, BTreeSet<Tableau>> {
    let words: Vec<Word> = Word::all(n).collect();
    let chunk = words.len().div_ceil(n.max(1));
    let mut map = words
        .par_chunks(chunk.max(1))
        .map(|part| {
            let mut local: BTreeMap<Tableau, BTreeSet<Tableau>> = BTreeMap::new();
            for y in part {
                let entry = local.entry(rs_tableau(y)).or_default();
                entry.extend(ascent_successors(y).map(|z| rs_tableau(&z)));
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                a.entry(k).or_default().extend(v);
            }
            a
        });
    for (t, set) in map.iter_mut() {
        apply_conventions(t, set);
    }
    map
}

/// The induced order by its chain definition: from every cell, walk words,
/// alternating moves inside a cell with single ascent steps.
pub fn induced_order_bruteforce(n: usize) -> TableauPoset {
    let elements = Tableau::all_standard(n);
    let index: HashMap<&Tableau, usize> = elements.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let words: Vec<Word> = Word::all(n).collect();
    let word_index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let cell_of: Vec<usize> = words.iter().map(|w| index[&rs_tableau(w)]).collect();
    let mut members = vec![Vec::new(); elements.len()];
    for (wi, &c) in cell_of.iter().enumerate() {
        members[c].push(wi);
    }
    let successors: Vec<Vec<usize>> =
        words.iter().map(|w| ascent_successors(w).map(|z| word_index[&z]).collect()).collect();
    let reach: Vec<Vec<bool>> = (0..elements.len())
        .into_par_iter()
        .map(|start| {
            let mut seen_word = vec![false; words.len()];
            let mut seen_cell = vec![false; elements.len()];
            let mut queue = VecDeque::new();
            seen_cell[start] = true;
            for &w in &members[start] {
                seen_word[w] = true;
                queue.push_back(w);
            }
            while let Some(x) = queue.pop_front() {
                for &z in &successors[x] {
                    if seen_word[z] {
                        continue;
                    }
                    // an ascent step lands in a cell; the chain may continue from any member
                    let c = cell_of[z];
                    if !seen_cell[c] {
                        seen_cell[c] = true;
                        for &m in &members[c] {
                            if !seen_word[m] {
                                seen_word[m] = true;
                                queue.push_back(m);
                            }
                        }
                    }
                }
            }
            seen_cell
        })
        .collect();
    TableauPoset::from_reach(n, elements, reach)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cover_graph_counts() {
        let g = weak_covers(3);
        assert_eq!(g.edges.len(), 6);
        assert_eq!(g.out_degree(&Word::identity(3)), 2);
        assert_eq!(g.out_degree(&Word::longest_element(3)), 0);
        assert!(g.reaches(&Word::identity(3), &Word::longest_element(3)));
    }

    #[test]
    fn trivial_cells() {
        let col = Tableau::column_tableau(3);
        assert_eq!(offsprings_bruteforce(&col).unwrap().offsprings, BTreeSet::from([col]));
        let row = Tableau::row_tableau(3);
        assert!(offsprings_bruteforce(&row).unwrap().offsprings.contains(&row));
    }

    #[test]
    fn sweep_matches_single() {
        let all = offsprings_bruteforce_all(4);
        for (t, set) in &all {
            assert_eq!(&offsprings_bruteforce(t).unwrap().offsprings, set);
        }
        assert_eq!(all.len(), 10);
    }

    #[test]
    fn chain_order_is_partial_order() {
        let p = induced_order_bruteforce(4);
        assert!(p.is_partial_order());
    }
}
