//! Complex verification: symbolic d.d = 0, minimality, Euler characteristic,
//! the degree-zero homology presentation, and a randomized exactness probe by
//! exact integer rank counts after specializing the variables.

use super::{FreeComplex, SparseMat};
use crate::groebner::Ideal;
use crate::ring::{coeff_int, Coeff, MonomialOrder, Var};
use num::bigint::BigInt;
use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;

/// Per-degree and global verdicts for a free complex.
#[derive(Debug, Clone, Serialize)]
pub struct ComplexReport {
    pub ranks: Vec<usize>,
    /// For each k = 1..length-1: does d_k . d_{k+1} = 0, and if not, the
    /// first offending entry position.
    #[allow(clippy::type_complexity)]
    pub d_squared: Vec<(usize, bool, Option<(usize, usize)>)>,
    pub is_complex: bool,
    pub minimal: bool,
    pub first_unit_entry: Option<(usize, usize, usize)>,
    pub euler_characteristic: i64,
    /// Reduced Groebner basis of the ideal presented by d_1, as text.
    pub h0_basis: Vec<String>,
}

pub fn verify_complex(c: &FreeComplex, ord: &MonomialOrder) -> ComplexReport {
    let mut d_squared = Vec::new();
    let mut is_complex = true;
    for k in 1..c.diffs.len() {
        let prod = c.diffs[k - 1].mul(&c.diffs[k]);
        let bad = prod.iter().next().map(|(&(r, cc), _)| (r, cc));
        if bad.is_some() {
            is_complex = false;
        }
        d_squared.push((k, bad.is_none(), bad));
    }
    let mut first_unit_entry = None;
    'outer: for (idx, d) in c.diffs.iter().enumerate() {
        for (&(r, cc), p) in d.iter() {
            if !p.in_maximal_ideal() {
                first_unit_entry = Some((idx + 1, r, cc));
                break 'outer;
            }
        }
    }
    let h0 = Ideal::new(c.presentation_generators());
    let h0_basis = h0
        .reduced_gb(ord)
        .map(|gb| gb.iter().map(|g| g.to_text(ord)).collect())
        .unwrap_or_default();
    ComplexReport {
        ranks: c.ranks.clone(),
        d_squared,
        is_complex,
        minimal: first_unit_entry.is_none(),
        first_unit_entry,
        euler_characteristic: c.euler_characteristic(),
        h0_basis,
    }
}

/// One probe trial: the specialized ranks and the exactness bookkeeping.
#[derive(Debug, Clone, Serialize)]
pub struct TrialReport {
    /// rank of the specialized d_k, indexed k = 1..=length.
    pub matrix_ranks: Vec<usize>,
    /// Expected ranks from exactness: r_k + r_{k+1} = b_k with r_1 = b_0.
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    pub trials: Vec<TrialReport>,
    pub pass: bool,
}

/// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..ncols {
        if row >= nrows {
            break;
        }
        // pick the absolutely smallest nonzero pivot to limit growth
        let mut pivot: Option<usize> = None;
        for r in row..nrows {
            if !m[r][col].is_zero() && pivot.is_none_or(|p| m[r][col].abs() < m[p][col].abs()) {
                pivot = Some(r);
            }
        }
        let Some(p) = pivot else { continue };
        m.swap(row, p);
        for r in (row + 1)..nrows {
            for c in (col + 1)..ncols {
                let num = &m[row][col] * &m[r][c] - &m[r][col] * &m[row][c];
                debug_assert!(
                    (&num % &prev).is_zero(),
                    "fraction-free division must be exact"
                );
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        row += 1;
        rank += 1;
    }
    rank
}

/// Specializes a polynomial matrix at an integer point and clears the
/// denominators row by row, returning an integer matrix of the same rank.
fn specialize(d: &SparseMat, point: &BTreeMap<Var, Coeff>) -> Vec<Vec<BigInt>> {
    let assign = |v: Var| point.get(&v).cloned().unwrap_or_else(Coeff::zero);
    let mut rows = vec![vec![Coeff::zero(); d.ncols]; d.nrows];
    for (&(r, c), p) in d.iter() {
        rows[r][c] = p.evaluate(&assign);
    }
    rows.into_iter()
        .map(|row| {
            let mut denom = BigInt::one();
            for v in &row {
                denom = num::integer::lcm(denom, v.denom().clone());
            }
            row.into_iter()
                .map(|v| {
                    let scaled = v * Coeff::from_integer(denom.clone());
                    debug_assert!(scaled.is_integer());
                    scaled.to_integer()
                })
                .collect()
        })
        .collect()
}

fn complex_vars(c: &FreeComplex) -> Vec<Var> {
    let mut set = std::collections::BTreeSet::new();
    for d in &c.diffs {
        for (_, p) in d.iter() {
            set.extend(p.vars());
        }
    }
    set.into_iter().collect()
}

fn trial_ranks(c: &FreeComplex, rng: &mut ChaCha8Rng, vars: &[Var]) -> Vec<usize> {
    let point: BTreeMap<Var, Coeff> = vars
        .iter()
        .map(|&v| (v, coeff_int(rng.gen_range(-999..=999))))
        .collect();
    c.diffs
        .iter()
        .map(|d| integer_rank(specialize(d, &point)))
        .collect()
}

fn ranks_exact(c: &FreeComplex, ranks: &[usize]) -> bool {
    // acyclicity over the specialization: r_1 = b_0 and r_k + r_{k+1} = b_k
    let len = c.length();
    if len == 0 {
        return true;
    }
    if ranks[0] != c.rank(0) {
        return false;
    }
    for k in 1..=len {
        let next = if k < len { ranks[k] } else { 0 };
        if ranks[k - 1] + next != c.rank(k) {
            return false;
        }
    }
    true
}

/// Randomized exactness probe: substitutes integers uniform in [-999, 999]
/// for all variables and checks the rank bookkeeping of an acyclic complex.
/// A failing draw is re-drawn once before it counts as a failure, so a
/// degenerate specialization does not produce a false alarm.
pub fn exactness_probe(c: &FreeComplex, trials: usize, seed: u64) -> ProbeReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = complex_vars(c);
    let mut out = Vec::with_capacity(trials);
    for _ in 0..trials {
        let mut ranks = trial_ranks(c, &mut rng, &vars);
        let mut ok = ranks_exact(c, &ranks);
        if !ok {
            ranks = trial_ranks(c, &mut rng, &vars);
            ok = ranks_exact(c, &ranks);
        }
        out.push(TrialReport {
            matrix_ranks: ranks,
            ok,
        });
    }
    let pass = !out.is_empty() && out.iter().all(|t| t.ok);
    ProbeReport { trials: out, pass }
}
