//! Builders for the problem's basic objects (the matrices X and Y, the product
//! entries g_j, the two-row submatrix Xt_ij and its minors) together with the
//! support / transversality and coprime-leading-term criteria, and the named
//! monomial-order presets these criteria rely on.

use crate::groebner::{ideal_equal, intersect, product, Ideal};
use crate::ring::{Monomial, MonomialOrder, Polynomial, RingError, Var};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Generic,
    Symmetric,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Generic => write!(f, "generic"),
            Kind::Symmetric => write!(f, "symmetric"),
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("instance size must satisfy n >= 2, got {0}")]
    SizeTooSmall(u8),
    #[error("pivot must satisfy 1 <= i < j <= n, got ({0},{1})")]
    BadPivot(u8, u8),
}

/// An ambient problem instance: matrix size, generic vs generic-symmetric,
/// and the pivot row pair (i, j) selecting Xt_ij.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub n: u8,
    pub kind: Kind,
    pub pivot: (u8, u8),
}

impl InstanceSpec {
    pub fn new(n: u8, kind: Kind, pivot: (u8, u8)) -> Result<InstanceSpec, SpecError> {
        if n < 2 {
            return Err(SpecError::SizeTooSmall(n));
        }
        let (i, j) = pivot;
        if !(1 <= i && i < j && j <= n) {
            return Err(SpecError::BadPivot(i, j));
        }
        Ok(InstanceSpec { n, kind, pivot })
    }

    /// The entry x[a,b] of X, canonicalized for symmetric instances.
    pub fn x_entry(&self, a: u8, b: u8) -> Var {
        match self.kind {
            Kind::Generic => Var::x(a, b),
            Kind::Symmetric => Var::x_sym(a, b),
        }
    }

    /// All variables of the instance in a fixed structural sequence.
    pub fn universe(&self) -> Vec<Var> {
        let n = self.n;
        let mut vars = Vec::new();
        for a in 1..=n {
            let cols = match self.kind {
                Kind::Generic => 1..=n,
                Kind::Symmetric => a..=n,
            };
            for b in cols {
                vars.push(Var::x(a, b));
            }
        }
        for k in 1..=n {
            vars.push(Var::y(k));
        }
        vars
    }
}

/// A fully materialized instance: the rows of Xt_ij, the product entries g_j
/// and the 2x2 minors.
#[derive(Debug, Clone)]
pub struct Instance {
    pub spec: InstanceSpec,
    /// Row 1 and row 2 of Xt_ij, as variables, indexed by column 1..=n.
    pub row1: Vec<Var>,
    pub row2: Vec<Var>,
    /// g_j = sum_i x[j,i]*y[i] for j = 1..=n.
    pub g: Vec<Polynomial>,
    /// The C(n,2) minors [12|st] of Xt_ij, for s < t in column order.
    pub minors: Vec<Polynomial>,
}

/// Builds X, Y, the g_j, Xt_ij and its minor set for the given spec.
pub fn build_instance(spec: &InstanceSpec) -> Instance {
    let n = spec.n;
    let (i, j) = spec.pivot;
    let row1: Vec<Var> = (1..=n).map(|t| spec.x_entry(i, t)).collect();
    let row2: Vec<Var> = (1..=n).map(|t| spec.x_entry(j, t)).collect();
    let g: Vec<Polynomial> = (1..=n)
        .map(|r| {
            Polynomial::from_terms((1..=n).map(|c| {
                (
                    Monomial::from_pairs([(spec.x_entry(r, c), 1), (Var::y(c), 1)]),
                    num::One::one(),
                )
            }))
        })
        .collect();
    let mut minors = Vec::new();
    for s in 1..=n {
        for t in (s + 1)..=n {
            minors.push(minor_of(&row1, &row2, s, t));
        }
    }
    Instance {
        spec: *spec,
        row1,
        row2,
        g,
        minors,
    }
}

fn minor_of(row1: &[Var], row2: &[Var], s: u8, t: u8) -> Polynomial {
    let (s, t) = (s as usize - 1, t as usize - 1);
    let a = Monomial::from_pairs([(row1[s], 1), (row2[t], 1)]);
    let b = Monomial::from_pairs([(row1[t], 1), (row2[s], 1)]);
    &Polynomial::monomial(a, num::One::one()) - &Polynomial::monomial(b, num::One::one())
}

impl Instance {
    pub fn n(&self) -> u8 {
        self.spec.n
    }

    /// g-polynomial with 1-based row index.
    pub fn g_at(&self, r: u8) -> &Polynomial {
        &self.g[r as usize - 1]
    }

    pub fn minor_ideal(&self) -> Ideal {
        Ideal::new(self.minors.clone())
    }

    /// The stage sequence l_1 < l_2 < ... of Theorem-style g indices: the
    /// pivot pair first, then the smallest unused index at each step.
    pub fn g_sequence(&self) -> Vec<u8> {
        let (i, j) = self.spec.pivot;
        let mut seq = vec![i, j];
        for l in 1..=self.n() {
            if l != i && l != j {
                seq.push(l);
            }
        }
        seq
    }

    /// The colon-ideal generators of Lemma-colon shape: the row-1 entries of
    /// Xt_ij (distinct variables in both the generic and symmetric cases).
    pub fn colon_row_vars(&self) -> Vec<Var> {
        self.row1.clone()
    }
}

/// Variable-support of a set of monomials, encoded as (i, j, 0) triples for
/// x-variables and (0, 0, k) for y-variables.
pub type SupportSet = BTreeSet<(u8, u8, u8)>;

pub fn supp<'a>(monomials: impl IntoIterator<Item = &'a Monomial>) -> SupportSet {
    let mut set = SupportSet::new();
    for m in monomials {
        for v in m.vars() {
            match v {
                Var::X(a, b) => {
                    set.insert((a, b, 0));
                }
                Var::Y(k) => {
                    set.insert((0, 0, k));
                }
                Var::Elim => {}
            }
        }
    }
    set
}

/// Verdict of the disjoint-support transversality criterion. The criterion is
/// one-directional: `CriterionInconclusive` does NOT mean non-transversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TransversalityVerdict {
    Transversal,
    CriterionInconclusive,
}

/// Sufficient criterion: I and J intersect transversally if the minimal
/// generating sets of their leading ideals have disjoint variable support.
pub fn transversal_by_support(
    i: &Ideal,
    j: &Ideal,
    ord: &MonomialOrder,
) -> Result<TransversalityVerdict, RingError> {
    let mi = crate::groebner::min_gens_leading_ideal(i, ord)?;
    let mj = crate::groebner::min_gens_leading_ideal(j, ord)?;
    if supp(mi.iter()).is_disjoint(&supp(mj.iter())) {
        Ok(TransversalityVerdict::Transversal)
    } else {
        Ok(TransversalityVerdict::CriterionInconclusive)
    }
}

/// Exact (oracle) transversality predicate: I ∩ J = I·J by reduced-GB
/// equality, with the intersection computed by elimination.
pub fn transversal_by_oracle(i: &Ideal, j: &Ideal, ord: &MonomialOrder) -> Result<bool, RingError> {
    let inter = intersect(i, j, ord)?;
    let prod = product(i, j);
    ideal_equal(&inter, &prod, ord)
}

/// Sufficient regular-sequence criterion: pairwise coprime leading terms.
pub fn regular_sequence_by_coprime_lt(
    polys: &[Polynomial],
    ord: &MonomialOrder,
) -> Result<bool, RingError> {
    let lms: Vec<Monomial> = polys
        .iter()
        .map(|p| p.leading_monomial(ord))
        .collect::<Result<_, _>>()?;
    for (a, la) in lms.iter().enumerate() {
        for lb in &lms[a + 1..] {
            if !la.coprime(lb) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The height-certificate family f_k = xt[1,k]*xt[2,k+1] - xt[2,k]*xt[1,k+1],
/// k = 1..n-1, built from the rows of Xt_ij.
pub fn height_sequence(inst: &Instance) -> Vec<Polynomial> {
    (1..inst.n())
        .map(|k| minor_of(&inst.row1, &inst.row2, k, k + 1))
        .collect()
}

pub mod orders {
    //! Named monomial-order presets. Each is a total priority permutation of
    //! the instance's variable universe (highest first); any universe
    //! variables not named explicitly are appended in structural sequence.

    use super::*;

    fn finish(mut priority: Vec<Var>, spec: &InstanceSpec) -> MonomialOrder {
        let mut seen: BTreeSet<Var> = priority.iter().copied().collect();
        for v in spec.universe() {
            if seen.insert(v) {
                priority.push(v);
            }
        }
        MonomialOrder::new(priority)
    }

    fn ys_desc(n: u8) -> Vec<Var> {
        (1..=n).rev().map(Var::y).collect()
    }

    fn ys_asc(n: u8) -> Vec<Var> {
        (1..=n).map(Var::y).collect()
    }

    /// Diagonal-first band of a symmetric row:
    /// x_ii, x_ij, x_1i, ..., x_{i-1,i}, x_{i,i+1}, ..., x_in (x_ij skipped
    /// in the tail run).
    fn sym_row_band(n: u8, i: u8, skip: Option<Var>) -> Vec<Var> {
        let mut band = vec![Var::x_sym(i, i)];
        if let Some(v) = skip {
            band.push(v);
        }
        for t in 1..i {
            band.push(Var::x_sym(t, i));
        }
        for t in (i + 1)..=n {
            let v = Var::x_sym(i, t);
            if !band.contains(&v) {
                band.push(v);
            }
        }
        band
    }

    /// ORDER_A (generic): y_n > ... > y_1 > x[1,1] > x[1,2] > ... row-major.
    pub fn order_a(spec: &InstanceSpec) -> MonomialOrder {
        finish(ys_desc(spec.n), spec)
    }

    /// ORDER_A_SYM: same shape over the canonical symmetric universe.
    pub fn order_a_sym(spec: &InstanceSpec) -> MonomialOrder {
        finish(ys_desc(spec.n), spec)
    }

    /// ORDER_B (generic): x_i1 > ... > x_in > x_j2 > ... > x_jn > x_j1 >
    /// remaining x row-major > y_n > ... > y_1. Gives Lt(f_k) = x_ik*x_j,k+1.
    pub fn order_b(spec: &InstanceSpec) -> MonomialOrder {
        let n = spec.n;
        let (i, j) = spec.pivot;
        let mut p: Vec<Var> = (1..=n).map(|t| Var::x(i, t)).collect();
        p.extend((2..=n).map(|t| Var::x(j, t)));
        p.push(Var::x(j, 1));
        for a in 1..=n {
            if a != i && a != j {
                p.extend((1..=n).map(|b| Var::x(a, b)));
            }
        }
        p.extend(ys_desc(n));
        finish(p, spec)
    }

    /// ORDER_B_SYM: row 1 of the symmetric Xt_ij in column order, then row 2
    /// in column order (the shared entry skipped), then the rest, then the y
    /// variables. Gives Lt(f_k) = xt[1,k]*xt[2,k+1] with pairwise coprime
    /// leading terms whenever i = 1 or j = n; for interior pivots no
    /// lexicographic order realizes coprime staircase leading terms (the
    /// shared entry x[i,j] is forced into two of them), so the criterion is
    /// inconclusive there.
    pub fn order_b_sym(spec: &InstanceSpec) -> MonomialOrder {
        let n = spec.n;
        let (i, j) = spec.pivot;
        let mut p: Vec<Var> = (1..=n).map(|t| Var::x_sym(i, t)).collect();
        for t in 1..=n {
            let v = Var::x_sym(j, t);
            if !p.contains(&v) {
                p.push(v);
            }
        }
        finish(p, spec)
    }

    /// ORDER_C (generic): diagonal x_nn > ... > x_11 (skipping x_jj, x_ii),
    /// then y_1 > ... > y_n, then row i, then row j, then the rest.
    pub fn order_c(spec: &InstanceSpec) -> MonomialOrder {
        let n = spec.n;
        let (i, j) = spec.pivot;
        let mut p: Vec<Var> = (1..=n)
            .rev()
            .filter(|&t| t != i && t != j)
            .map(|t| Var::x(t, t))
            .collect();
        p.extend(ys_asc(n));
        p.extend((1..=n).map(|t| Var::x(i, t)));
        p.extend((1..=n).map(|t| Var::x(j, t)));
        finish(p, spec)
    }

    /// ORDER_C_SYM: diagonal band (skipping x_jj, x_ii), the y variables,
    /// then the two symmetric row bands.
    pub fn order_c_sym(spec: &InstanceSpec) -> MonomialOrder {
        let n = spec.n;
        let (i, j) = spec.pivot;
        let mut p: Vec<Var> = (1..=n)
            .rev()
            .filter(|&t| t != i && t != j)
            .map(|t| Var::x(t, t))
            .collect();
        p.extend(ys_asc(n));
        for v in sym_row_band(n, i, Some(Var::x_sym(i, j))) {
            if !p.contains(&v) {
                p.push(v);
            }
        }
        for v in sym_row_band(n, j, None) {
            if !p.contains(&v) {
                p.push(v);
            }
        }
        finish(p, spec)
    }

    /// The symmetric transversality orders: one shape for pivot (n-1, n),
    /// another for every other pivot.
    pub fn order_trans_sym(spec: &InstanceSpec) -> MonomialOrder {
        let n = spec.n;
        let (i, j) = spec.pivot;
        if (i, j) == (n - 1, n) {
            let mut p = vec![Var::y(1)];
            p.extend((2..=n).rev().map(Var::y));
            p.push(Var::x_sym(n - 1, n - 1));
            p.push(Var::x_sym(n - 1, n));
            p.extend((1..=n - 2).map(|t| Var::x_sym(t, n - 1)));
            p.push(Var::x_sym(n, n));
            p.extend((1..=n - 2).map(|t| Var::x_sym(t, n)));
            finish(p, spec)
        } else {
            let mut p = ys_desc(n);
            for v in sym_row_band(n, i, Some(Var::x_sym(i, j))) {
                if !p.contains(&v) {
                    p.push(v);
                }
            }
            for v in sym_row_band(n, j, None) {
                if !p.contains(&v) {
                    p.push(v);
                }
            }
            finish(p, spec)
        }
    }

    /// The order used for the stage-0 transversality gate (Xt-minors vs g_i).
    pub fn stage0_transversality_order(spec: &InstanceSpec) -> MonomialOrder {
        match spec.kind {
            Kind::Generic => order_a(spec),
            Kind::Symmetric => order_trans_sym(spec),
        }
    }

    /// The order used for the later-stage transversality gates.
    pub fn stage_order(spec: &InstanceSpec) -> MonomialOrder {
        match spec.kind {
            Kind::Generic => order_c(spec),
            Kind::Symmetric => order_c_sym(spec),
        }
    }

    /// The instance's default order, used for deterministic printing.
    pub fn default_order(spec: &InstanceSpec) -> MonomialOrder {
        match spec.kind {
            Kind::Generic => order_a(spec),
            Kind::Symmetric => order_a_sym(spec),
        }
    }

    pub fn height_order(spec: &InstanceSpec) -> MonomialOrder {
        match spec.kind {
            Kind::Generic => order_b(spec),
            Kind::Symmetric => order_b_sym(spec),
        }
    }

    /// Looks a preset up by name (CLI surface).
    pub fn by_name(name: &str, spec: &InstanceSpec) -> Option<MonomialOrder> {
        Some(match name {
            "order_a" => order_a(spec),
            "order_a_sym" => order_a_sym(spec),
            "order_b" => order_b(spec),
            "order_b_sym" => order_b_sym(spec),
            "order_c" => order_c(spec),
            "order_c_sym" => order_c_sym(spec),
            "order_trans_sym" => order_trans_sym(spec),
            "default" => default_order(spec),
            _ => return None,
        })
    }
}

#[cfg(test)]
mod tests;
