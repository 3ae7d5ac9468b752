//! Residue-labelled cell moves on cores.
//!
//! The content of a cell (row, col) is col - row mod k+1. Generator i adds
//! every addable cell of content i if there is one, otherwise removes every
//! removable cell of content i, otherwise does nothing. On cores each such
//! step changes `Core::size` by exactly one, which is what makes the greedy
//! peel in `to_word` terminate with a word of that length.

use std::collections::BTreeSet;

use crate::cores::Core;
use crate::partition::Partition;

fn residue_of(row: usize, col: usize, k: usize) -> usize {
    // 1-indexed cell; content col - row can be negative
    (col as i64 - row as i64).rem_euclid(k as i64 + 1) as usize
}

/// 0-indexed rows whose next cell can be added while staying a partition.
fn addable_rows(shape: &Partition) -> Vec<usize> {
    (0..=shape.len())
        .filter(|&i| i == 0 || shape.row(i - 1) > shape.row(i))
        .collect()
}

/// 0-indexed rows whose last cell can be removed while staying a partition.
fn removable_rows(shape: &Partition) -> Vec<usize> {
    (0..shape.len())
        .filter(|&i| shape.row(i) > shape.row(i + 1))
        .collect()
}

impl Core {
    fn addable_rows_with_residue(&self, i: usize) -> Vec<usize> {
        addable_rows(self.shape())
            .into_iter()
            .filter(|&r| residue_of(r + 1, self.shape().row(r) + 1, self.k()) == i)
            .collect()
    }

    fn removable_rows_with_residue(&self, i: usize) -> Vec<usize> {
        removable_rows(self.shape())
            .into_iter()
            .filter(|&r| residue_of(r + 1, self.shape().row(r), self.k()) == i)
            .collect()
    }

    /// Residues of the addable corners. Nonempty for every core.
    pub fn addable_residues(&self) -> BTreeSet<usize> {
        addable_rows(self.shape())
            .into_iter()
            .map(|r| residue_of(r + 1, self.shape().row(r) + 1, self.k()))
            .collect()
    }

    /// Residues of the removable corners. Empty only for the empty core.
    pub fn removable_residues(&self) -> BTreeSet<usize> {
        removable_rows(self.shape())
            .into_iter()
            .map(|r| residue_of(r + 1, self.shape().row(r), self.k()))
            .collect()
    }

    /// Total involution: add all addable cells of residue i, else remove all
    /// removable ones, else identity.
    pub fn apply_s(&self, i: usize) -> Core {
        assert!(i <= self.k(), "residue out of range");
        let add = self.addable_rows_with_residue(i);
        let remove = self.removable_rows_with_residue(i);
        assert!(
            add.is_empty() || remove.is_empty(),
            "a core cannot have addable and removable cells of one residue"
        );
        let mut shape = self.shape().clone();
        for &r in &add {
            shape = shape.with_row_incremented(r);
        }
        for &r in &remove {
            shape = shape.with_row_decremented(r);
        }
        Core::new(shape, self.k()).expect("the generator action preserves cores")
    }

    /// Strictly-adding half of the action: None when nothing is addable.
    pub fn apply_u(&self, i: usize) -> Option<Core> {
        assert!(i <= self.k(), "residue out of range");
        let add = self.addable_rows_with_residue(i);
        if add.is_empty() {
            return None;
        }
        let mut shape = self.shape().clone();
        for &r in &add {
            shape = shape.with_row_incremented(r);
        }
        Some(Core::new(shape, self.k()).expect("adding a full residue class preserves cores"))
    }

    /// Peels the smallest removable residue until empty. The resulting word
    /// rebuilds the core through `word_to_core` and has length `self.size()`.
    pub fn to_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.size());
        let mut current = self.clone();
        while !current.shape().is_empty() {
            let i = *current
                .removable_residues()
                .iter()
                .next()
                .expect("a nonempty core has a removable corner");
            word.push(i);
            current = current.apply_s(i);
        }
        word
    }
}

/// Folds the adding action over the word, rightmost letter first. None as
/// soon as any step has nothing to add.
pub fn word_to_core(word: &[usize], k: usize) -> Option<Core> {
    assert!(word.iter().all(|&i| i <= k), "letter out of range");
    let mut core = Core::empty(k);
    for &i in word.iter().rev() {
        core = core.apply_u(i)?;
    }
    Some(core)
}

/// All cores for this k with size up to `max_size`, grouped by size.
/// Layer n+1 is the closure of layer n under the adding action.
pub fn cores_by_size(k: usize, max_size: usize) -> Vec<Vec<Core>> {
    let mut layers = vec![vec![Core::empty(k)]];
    for _ in 0..max_size {
        let mut next = BTreeSet::new();
        for core in layers.last().unwrap() {
            for i in 0..=k {
                if let Some(bigger) = core.apply_u(i) {
                    next.insert(bigger);
                }
            }
        }
        layers.push(next.into_iter().collect());
    }
    layers
}
