use super::{Monomial, RingError, Var};
use std::cmp::Ordering;
use std::collections::HashMap;

/// A lexicographic monomial order induced by a total priority list over the
/// active variables: the earlier a variable appears in `priority`, the larger
/// it is. Comparison is lex on exponent vectors read in priority sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    priority: Vec<Var>,
    rank: HashMap<Var, u32>,
}

impl MonomialOrder {
    pub fn new(priority: Vec<Var>) -> MonomialOrder {
        let mut rank = HashMap::with_capacity(priority.len());
        for (i, &v) in priority.iter().enumerate() {
            let prev = rank.insert(v, i as u32);
            assert!(prev.is_none(), "duplicate variable {} in order", v);
        }
        MonomialOrder { priority, rank }
    }

    pub fn priority(&self) -> &[Var] {
        &self.priority
    }

    pub fn contains(&self, v: Var) -> bool {
        self.rank.contains_key(&v)
    }

    /// A copy of this order with the elimination variable `t` placed above
    /// every ring variable.
    pub fn with_elimination(&self) -> MonomialOrder {
        let mut priority = Vec::with_capacity(self.priority.len() + 1);
        priority.push(Var::Elim);
        priority.extend_from_slice(&self.priority);
        MonomialOrder::new(priority)
    }

    fn rank_of(&self, v: Var) -> Result<u32, RingError> {
        self.rank
            .get(&v)
            .copied()
            .ok_or_else(|| RingError::UnknownVariable(v.to_string()))
    }

    /// Exponent list keyed by rank, ascending (highest-priority variable
    /// first). Used as a reusable sort key during division.
    pub(crate) fn key(&self, m: &Monomial) -> Result<Vec<(u32, u32)>, RingError> {
        let mut key: Vec<(u32, u32)> = m
            .exponents()
            .iter()
            .map(|&(v, e)| Ok((self.rank_of(v)?, e)))
            .collect::<Result<_, RingError>>()?;
        key.sort_unstable_by_key(|&(r, _)| r);
        Ok(key)
    }

    /// Lex comparison of two rank-sorted exponent keys.
    pub(crate) fn cmp_keys(a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (ra, ea) = a[i];
            let (rb, eb) = b[j];
            match ra.cmp(&rb) {
                // a has a positive exponent on a higher-priority variable
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        match (i < a.len(), j < b.len()) {
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            _ => Ordering::Equal,
        }
    }

    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, RingError> {
        Ok(Self::cmp_keys(&self.key(a)?, &self.key(b)?))
    }

    /// Total-order verdict; panics on a variable missing from the order.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.try_compare(a, b).unwrap()
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}
