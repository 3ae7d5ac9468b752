//! Cores for a fixed modulus and the size-preserving correspondence with
//! bounded partitions.
//!
//! A partition is a (k+1)-core when no cell has hook length exactly k+1.
//! Reading off, row by row, the number of cells with hook at most k sends a
//! core to a k-bounded partition; `Core::from_bounded` inverts this.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A partition with no cell of hook length k+1, tagged with its k.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Core {
    shape: Partition,
    k: usize,
}

pub fn is_core(shape: &Partition, k: usize) -> bool {
    let conj = shape.conjugate();
    shape
        .cells()
        .all(|(r, c)| shape.row(r - 1) - c + conj.row(c - 1) - r + 1 != k + 1)
}

impl Core {
    pub fn new(shape: Partition, k: usize) -> Result<Self> {
        assert!(k >= 1, "modulus must be at least 2");
        if is_core(&shape, k) {
            Ok(Core { shape, k })
        } else {
            Err(Error::NotACore(k + 1))
        }
    }

    pub fn empty(k: usize) -> Self {
        Core {
            shape: Partition::empty(),
            k,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of cells with hook length at most k. This, not the raw cell
    /// count, is the grading that the correspondence preserves.
    pub fn size(&self) -> usize {
        let conj = self.shape.conjugate();
        self.shape
            .cells()
            .filter(|&(r, c)| {
                let hook = self.shape.row(r - 1) - c + conj.row(c - 1) - r + 1;
                hook <= self.k
            })
            .count()
    }

    pub fn raw_cells(&self) -> usize {
        self.shape.size()
    }

    /// Row i of the image counts the cells of row i with hook at most k.
    pub fn to_bounded(&self) -> Partition {
        let conj = self.shape.conjugate();
        let rows: Vec<usize> = self
            .shape
            .rows()
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                (1..=len)
                    .filter(|&c| {
                        let hook = len - c + conj.row(c - 1) - (i + 1) + 1;
                        hook <= self.k
                    })
                    .count()
            })
            .collect();
        Partition::new(rows).expect("row counts of small-hook cells decrease weakly")
    }

    /// Builds the core of a k-bounded partition bottom row up. Row i keeps its
    /// lam_i cells but is pushed right just far enough that its leftmost kept
    /// cell has hook at most k; cells below never change hook once placed.
    pub fn from_bounded(lam: &Partition, k: usize) -> Result<Self> {
        assert!(k >= 1, "modulus must be at least 2");
        if !lam.is_k_bounded(k) {
            return Err(Error::NotKBounded {
                part: lam.first_row(),
                k,
            });
        }
        let mut rows: Vec<usize> = Vec::with_capacity(lam.len());
        for i in (0..lam.len()).rev() {
            let want = lam.row(i);
            let mut shift = rows.first().copied().unwrap_or(0).saturating_sub(want);
            loop {
                let leg = rows.iter().filter(|&&r| r > shift).count();
                if want + leg <= k {
                    break;
                }
                shift += 1;
            }
            rows.insert(0, shift + want);
        }
        let core = Core {
            shape: Partition::new(rows).expect("placement keeps rows weakly decreasing"),
            k,
        };
        debug_assert!(is_core(&core.shape, k));
        debug_assert_eq!(core.to_bounded(), *lam);
        Ok(core)
    }
}

/// Conjugates through the core: takes lam to the bounded partition of the
/// transposed core. An involution, usually different from plain transposition.
pub fn k_conjugate(lam: &Partition, k: usize) -> Result<Partition> {
    let core = Core::from_bounded(lam, k)?;
    let flipped = Core::new(core.shape().conjugate(), k)
        .expect("hooks are preserved under transposition");
    Ok(flipped.to_bounded())
}
