use super::Var;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A monomial as a sparse exponent vector: pairs (variable, exponent > 0),
/// kept sorted by the structural order on `Var`. Equality is exact.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: Var) -> Monomial {
        Monomial { exps: vec![(v, 1)] }
    }

    /// Builds a monomial from arbitrary (variable, exponent) pairs, merging
    /// duplicates and dropping zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Monomial {
        let mut exps: Vec<(Var, u32)> = Vec::new();
        for (v, e) in pairs {
            if e == 0 {
                continue;
            }
            match exps.iter_mut().find(|(w, _)| *w == v) {
                Some((_, cur)) => *cur += e,
                None => exps.push((v, e)),
            }
        }
        exps.sort_by_key(|&(v, _)| v);
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn exponents(&self) -> &[(Var, u32)] {
        &self.exps
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (va, ea) = self.exps[i];
            let (vb, eb) = other.exps[j];
            match va.cmp(&vb) {
                std::cmp::Ordering::Less => {
                    exps.push((va, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    exps.push((vb, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    exps.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// other / self; `None` unless `self` divides `other`.
    pub fn divide(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(other.exps.len());
        for &(v, e) in &other.exps {
            let d = self.exponent(v);
            if d > e {
                return None;
            }
            if e - d > 0 {
                exps.push((v, e - d));
            }
        }
        if self.exps.iter().any(|&(v, e)| e > other.exponent(v)) {
            return None;
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut pairs: Vec<(Var, u32)> = self.exps.clone();
        for &(v, e) in &other.exps {
            match pairs.iter_mut().find(|(w, _)| *w == v) {
                Some((_, cur)) => *cur = (*cur).max(e),
                None => pairs.push((v, e)),
            }
        }
        pairs.sort_by_key(|&(v, _)| v);
        Monomial { exps: pairs }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, _)| other.exponent(v) == 0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.exps {
            for _ in 0..e {
                if !first {
                    write!(f, "")?;
                }
                write!(f, "{}", v)?;
                first = false;
            }
        }
        Ok(())
    }
}
