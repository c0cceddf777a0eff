//! Free complexes with sparse polynomial differentials: builders (Koszul,
//! Eagon-Northcott, tensor with a principal ideal, connecting map, mapping
//! cone), minimalization by unit cancellation, and verification.

mod build;
mod io;
mod minimalize;
mod verify;

pub use build::{eagon_northcott, koszul, mapping_cone, tau_chain_map, tensor_principal};
pub use io::{read_complex, write_complex, ComplexIoError};
pub use minimalize::{minimalize, minimalize_seeded};
pub use verify::{exactness_probe, verify_complex, ComplexReport, ProbeReport, TrialReport};

use crate::ring::Polynomial;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Label of a free-module basis slot.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BasisLabel {
    /// Koszul slot e_{i1} ^ ... ^ e_{ik}; the empty tuple is the unit slot.
    Wedge(Vec<u8>),
    /// Eagon-Northcott slot (e_{i1} ^ ... ^ e_{ik+1}) (x) v1^a v2^b.
    WedgeSym { tuple: Vec<u8>, v1: u8, v2: u8 },
    /// Degree-shifted copy created by tensor or cone constructions.
    Shifted(Box<BasisLabel>),
    /// Placeholder for complexes read back from the text format.
    Anonymous(usize),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Wedge(t) => write!(f, "e{:?}", t),
            BasisLabel::WedgeSym { tuple, v1, v2 } => {
                write!(f, "e{:?}*v1^{}v2^{}", tuple, v1, v2)
            }
            BasisLabel::Shifted(inner) => write!(f, "s({})", inner),
            BasisLabel::Anonymous(i) => write!(f, "#{}", i),
        }
    }
}

/// A sparse matrix of polynomials keyed by (row, column).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseMat {
    pub nrows: usize,
    pub ncols: usize,
    entries: BTreeMap<(usize, usize), Polynomial>,
}

impl SparseMat {
    pub fn zero(nrows: usize, ncols: usize) -> SparseMat {
        SparseMat {
            nrows,
            ncols,
            entries: BTreeMap::new(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Polynomial> {
        self.entries.get(&(r, c))
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        assert!(r < self.nrows && c < self.ncols, "entry out of shape");
        if p.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), p);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, p: &Polynomial) {
        let cur = self.entries.remove(&(r, c)).unwrap_or_default();
        let next = &cur + p;
        if !next.is_zero() {
            self.entries.insert((r, c), next);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Polynomial)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    /// self * other (matrix product over the polynomial ring).
    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.ncols, other.nrows, "shape mismatch in product");
        let mut out = SparseMat::zero(self.nrows, other.ncols);
        // group rhs entries by row for the sparse product
        for (&(i, k), a) in &self.entries {
            for (&(_, j), b) in other.entries.range((k, 0)..=(k, usize::MAX)) {
                out.add_to(i, j, &(a * b));
            }
        }
        out
    }

    pub(crate) fn column(&self, c: usize) -> Vec<(usize, Polynomial)> {
        self.entries
            .iter()
            .filter(|(&(_, cc), _)| cc == c)
            .map(|(&(r, _), p)| (r, p.clone()))
            .collect()
    }

    pub(crate) fn row(&self, r: usize) -> Vec<(usize, Polynomial)> {
        self.entries
            .range((r, 0)..=(r, usize::MAX))
            .map(|(&(_, c), p)| (c, p.clone()))
            .collect()
    }

    /// col[dst] += f * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, f: &Polynomial) {
        for (r, p) in self.column(src) {
            self.add_to(r, dst, &(&p * f));
        }
    }

    /// row[dst] += f * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, f: &Polynomial) {
        for (c, p) in self.row(src) {
            self.add_to(dst, c, &(&p * f));
        }
    }

    pub(crate) fn delete_row(&mut self, row: usize) {
        let mut next = BTreeMap::new();
        for ((r, c), p) in std::mem::take(&mut self.entries) {
            match r.cmp(&row) {
                std::cmp::Ordering::Less => {
                    next.insert((r, c), p);
                }
                std::cmp::Ordering::Equal => {}
                std::cmp::Ordering::Greater => {
                    next.insert((r - 1, c), p);
                }
            }
        }
        self.entries = next;
        self.nrows -= 1;
    }

    pub(crate) fn delete_col(&mut self, col: usize) {
        let mut next = BTreeMap::new();
        for ((r, c), p) in std::mem::take(&mut self.entries) {
            match c.cmp(&col) {
                std::cmp::Ordering::Less => {
                    next.insert((r, c), p);
                }
                std::cmp::Ordering::Equal => {}
                std::cmp::Ordering::Greater => {
                    next.insert((r, c - 1), p);
                }
            }
        }
        self.entries = next;
        self.ncols -= 1;
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ComplexError {
    #[error("differential shapes do not match ranks at degree {0}")]
    ShapeMismatch(usize),
    #[error("d.d != 0 at degrees {degree}+1 -> {degree}-1, entry ({row},{col})")]
    NotAComplex {
        degree: usize,
        row: usize,
        col: usize,
    },
    #[error("chain map square fails to commute at degree {0}")]
    NotChainMap(usize),
    #[error("complex is not minimal: constant entry in d_{degree} at ({row},{col})")]
    NotMinimal {
        degree: usize,
        row: usize,
        col: usize,
    },
}

/// A finite complex of free modules; `diffs[k]` is the differential
/// d_{k+1}: degree k+1 -> degree k, of shape ranks[k] x ranks[k+1].
#[derive(Debug, Clone)]
pub struct FreeComplex {
    pub ranks: Vec<usize>,
    pub diffs: Vec<SparseMat>,
    pub bases: Vec<Vec<BasisLabel>>,
}

impl FreeComplex {
    pub fn length(&self) -> usize {
        self.ranks.len() - 1
    }

    /// d_k with the mathematical 1-based degree convention, k = 1..=length.
    pub fn d(&self, k: usize) -> &SparseMat {
        &self.diffs[k - 1]
    }

    pub fn rank(&self, k: usize) -> usize {
        self.ranks.get(k).copied().unwrap_or(0)
    }

    pub fn check_shapes(&self) -> Result<(), ComplexError> {
        if self.diffs.len() + 1 != self.ranks.len() || self.bases.len() != self.ranks.len() {
            return Err(ComplexError::ShapeMismatch(0));
        }
        for k in 0..self.diffs.len() {
            if self.diffs[k].nrows != self.ranks[k]
                || self.diffs[k].ncols != self.ranks[k + 1]
                || self.bases[k].len() != self.ranks[k]
            {
                return Err(ComplexError::ShapeMismatch(k));
            }
        }
        Ok(())
    }

    /// Symbolic d_{k} . d_{k+1} = 0 for every k.
    pub fn check_d_squared(&self) -> Result<(), ComplexError> {
        for k in 1..self.diffs.len() {
            let prod = self.diffs[k - 1].mul(&self.diffs[k]);
            let bad = prod.iter().next().map(|(&(row, col), _)| (row, col));
            if let Some((row, col)) = bad {
                return Err(ComplexError::NotAComplex {
                    degree: k,
                    row,
                    col,
                });
            }
        }
        Ok(())
    }

    pub fn assert_complex(&self) {
        self.check_shapes().expect("complex shapes");
        self.check_d_squared().expect("d.d = 0");
    }

    /// Minimality: every differential entry lies in the maximal ideal.
    pub fn check_minimal(&self) -> Result<(), ComplexError> {
        for (k, d) in self.diffs.iter().enumerate() {
            for (&(row, col), p) in d.iter() {
                if !p.in_maximal_ideal() {
                    return Err(ComplexError::NotMinimal {
                        degree: k + 1,
                        row,
                        col,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_minimal(&self) -> bool {
        self.check_minimal().is_ok()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// The entries of d_1: generators of the degree-zero presentation ideal.
    pub fn presentation_generators(&self) -> Vec<Polynomial> {
        if self.diffs.is_empty() {
            return Vec::new();
        }
        self.diffs[0].iter().map(|(_, p)| p.clone()).collect()
    }

    /// Drops trailing zero-rank degrees.
    pub fn trim(&mut self) {
        while self.ranks.len() > 1 && *self.ranks.last().unwrap() == 0 {
            self.ranks.pop();
            self.diffs.pop();
            self.bases.pop();
        }
    }
}

/// A degreewise map of complexes; `components[k]` maps source degree k into
/// target degree k.
#[derive(Debug, Clone)]
pub struct ChainMap {
    pub source: FreeComplex,
    pub target: FreeComplex,
    pub components: Vec<SparseMat>,
}

impl ChainMap {
    /// Verifies target_d . component = component . source_d in every degree.
    pub fn check_commutation(&self) -> Result<(), ComplexError> {
        for k in 1..=self.source.length() {
            let lhs = if k <= self.target.length() {
                self.target.d(k).mul(&self.components[k])
            } else {
                SparseMat::zero(0, self.source.rank(k))
            };
            let rhs = self.components[k - 1].mul(self.source.d(k));
            if lhs != rhs {
                return Err(ComplexError::NotChainMap(k));
            }
        }
        Ok(())
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: usize = 1;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// All k-subsets of {1..n} in lexicographic order.
pub(crate) fn k_subsets(n: u8, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(binomial(n as usize, k));
    let mut cur: Vec<u8> = Vec::with_capacity(k);
    fn rec(n: u8, k: usize, start: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 1, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests;
