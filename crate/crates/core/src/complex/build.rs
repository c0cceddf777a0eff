//! Constructors: Koszul complex, the length-(n-1) determinantal complex of a
//! 2 x n matrix, tensor with a principal ideal, the connecting chain map, and
//! the mapping cone.

use super::{binomial, k_subsets, BasisLabel, ChainMap, FreeComplex, SparseMat};
use crate::constructions::Instance;
use crate::ring::{coeff_int, Polynomial};
use std::collections::HashMap;

fn label_index(labels: &[BasisLabel]) -> HashMap<BasisLabel, usize> {
    labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), i))
        .collect()
}

/// The sign (-1)^m of reordering e_T ^ e_s into the sorted wedge, together
/// with the sorted tuple; m counts the elements of T greater than s.
fn wedge_append(tuple: &[u8], s: u8) -> (Vec<u8>, i64) {
    debug_assert!(!tuple.contains(&s));
    let mut out = tuple.to_vec();
    let pos = out.partition_point(|&t| t < s);
    out.insert(pos, s);
    let moved = tuple.len() - pos;
    (out, if moved.is_multiple_of(2) { 1 } else { -1 })
}

/// Koszul complex on the given polynomials: rank C(r,k) in degree k, with
/// d(e_T) = sum over positions p of (-1)^p * f_{T[p]} * e_{T minus p}.
pub fn koszul(gens: &[Polynomial]) -> FreeComplex {
    let r = gens.len();
    let mut ranks = Vec::with_capacity(r + 1);
    let mut bases = Vec::with_capacity(r + 1);
    for k in 0..=r {
        ranks.push(binomial(r, k));
        bases.push(
            k_subsets(r as u8, k)
                .into_iter()
                .map(BasisLabel::Wedge)
                .collect::<Vec<_>>(),
        );
    }
    let mut diffs = Vec::with_capacity(r);
    for k in 1..=r {
        let rows = label_index(&bases[k - 1]);
        let mut d = SparseMat::zero(ranks[k - 1], ranks[k]);
        for (col, tuple) in k_subsets(r as u8, k).into_iter().enumerate() {
            for (p, &elem) in tuple.iter().enumerate() {
                let mut face = tuple.clone();
                face.remove(p);
                let row = rows[&BasisLabel::Wedge(face)];
                let sign = if p % 2 == 0 { 1 } else { -1 };
                d.add_to(row, col, &gens[elem as usize - 1].scale(&coeff_int(sign)));
            }
        }
        diffs.push(d);
    }
    FreeComplex {
        ranks,
        diffs,
        bases,
    }
}

/// Basis labels of the degree-k piece (k >= 1) of the determinantal complex:
/// (k+1)-subsets tensored with the degree-(k-1) monomials in v1, v2, the v1
/// exponent descending.
fn det_basis(n: u8, k: usize) -> Vec<BasisLabel> {
    let mut out = Vec::new();
    for tuple in k_subsets(n, k + 1) {
        for a in (0..k as u8).rev() {
            out.push(BasisLabel::WedgeSym {
                tuple: tuple.clone(),
                v1: a,
                v2: k as u8 - 1 - a,
            });
        }
    }
    out
}

/// The length-(n-1) resolution-shaped complex of the 2 x n matrix Xt_ij:
/// degree 0 is R, degree 1 has the C(n,2) minors as d_1, and for k >= 2 the
/// differential contracts one wedge slot against a row entry while lowering
/// the matching divided-power exponent, with alternating signs.
pub fn eagon_northcott(inst: &Instance) -> FreeComplex {
    let n = inst.n();
    let len = n as usize - 1;
    let mut ranks = vec![1usize];
    let mut bases = vec![vec![BasisLabel::Wedge(Vec::new())]];
    for k in 1..=len {
        let b = det_basis(n, k);
        ranks.push(b.len());
        bases.push(b);
    }
    let mut diffs = Vec::with_capacity(len);
    // d_1: the 2x2 minors in lexicographic column-pair order
    let mut d1 = SparseMat::zero(1, ranks[1]);
    for (col, m) in inst.minors.iter().enumerate() {
        d1.set(0, col, m.clone());
    }
    diffs.push(d1);
    for k in 2..=len {
        let rows = label_index(&bases[k - 1]);
        let mut d = SparseMat::zero(ranks[k - 1], ranks[k]);
        for (col, label) in bases[k].iter().enumerate() {
            let BasisLabel::WedgeSym { tuple, v1, v2 } = label else {
                unreachable!()
            };
            for (p, &elem) in tuple.iter().enumerate() {
                let sign = if p % 2 == 0 { 1 } else { -1 };
                let mut face = tuple.clone();
                face.remove(p);
                if *v1 >= 1 {
                    let row = rows[&BasisLabel::WedgeSym {
                        tuple: face.clone(),
                        v1: v1 - 1,
                        v2: *v2,
                    }];
                    let entry =
                        Polynomial::var(inst.row1[elem as usize - 1]).scale(&coeff_int(sign));
                    d.add_to(row, col, &entry);
                }
                if *v2 >= 1 {
                    let row = rows[&BasisLabel::WedgeSym {
                        tuple: face,
                        v1: *v1,
                        v2: v2 - 1,
                    }];
                    let entry =
                        Polynomial::var(inst.row2[elem as usize - 1]).scale(&coeff_int(sign));
                    d.add_to(row, col, &entry);
                }
            }
        }
        diffs.push(d);
    }
    FreeComplex {
        ranks,
        diffs,
        bases,
    }
}

/// C (x) (R --g--> R): degree k is C_k (+) C_{k-1}[shifted], with
/// d = [ d_C , (-1)^(k-1) g * I ; 0 , d_C ].
pub fn tensor_principal(c: &FreeComplex, g: &Polynomial) -> FreeComplex {
    let len = c.length() + 1;
    let mut ranks = Vec::with_capacity(len + 1);
    let mut bases = Vec::with_capacity(len + 1);
    for k in 0..=len {
        let low = if k >= 1 { c.rank(k - 1) } else { 0 };
        ranks.push(c.rank(k) + low);
        let mut b: Vec<BasisLabel> = if k <= c.length() {
            c.bases[k].clone()
        } else {
            Vec::new()
        };
        if k >= 1 {
            b.extend(
                c.bases[k - 1]
                    .iter()
                    .map(|l| BasisLabel::Shifted(Box::new(l.clone()))),
            );
        }
        bases.push(b);
    }
    let mut diffs = Vec::with_capacity(len);
    for k in 1..=len {
        let mut d = SparseMat::zero(ranks[k - 1], ranks[k]);
        let row_split = if k >= 1 { c.rank(k - 1) } else { 0 };
        let col_split = c.rank(k);
        if k <= c.length() {
            for (&(r, cc), p) in c.d(k).iter() {
                d.add_to(r, cc, p);
            }
        }
        let sign = if (k - 1) % 2 == 0 { 1 } else { -1 };
        let sg = g.scale(&coeff_int(sign));
        for idx in 0..c.rank(k - 1) {
            d.add_to(idx, col_split + idx, &sg);
        }
        if k >= 2 {
            for (&(r, cc), p) in c.d(k - 1).iter() {
                d.add_to(row_split + r, col_split + cc, p);
            }
        }
        diffs.push(d);
    }
    FreeComplex {
        ranks,
        diffs,
        bases,
    }
}

/// The comparison chain map from the Koszul complex on the row-i entries
/// x[i,1]..x[i,n] (the colon ideal) into the determinantal complex tensored
/// with g_i. Degreewise, with T a k-subset of column indices:
///
///   tau_0(1)     = -g_j
///   tau_1(e_t)   = -sum_s y_s (e_t ^ e_s) (x) 1  -  xt[2,t] * shift(1)
///   tau_k(e_T)   = -sum_s y_s (e_T ^ e_s) (x) v1^(k-1)
///                  - shift((e_T) (x) v1^(k-2))           (k >= 2)
///
/// The map lifts multiplication by -g_j on degree zero; the construction
/// asserts the commutation squares symbolically.
pub fn tau_chain_map(inst: &Instance) -> ChainMap {
    let n = inst.n();
    let (_, j) = inst.spec.pivot;
    let row1: Vec<Polynomial> = inst.row1.iter().map(|&v| Polynomial::var(v)).collect();
    let source = koszul(&row1);
    let en = eagon_northcott(inst);
    let gi = inst.g_at(inst.spec.pivot.0).clone();
    let target = tensor_principal(&en, &gi);

    let mut components = Vec::with_capacity(n as usize + 1);
    let mut tau0 = SparseMat::zero(1, 1);
    tau0.set(0, 0, inst.g_at(j).scale(&coeff_int(-1)));
    components.push(tau0);

    for k in 1..=n as usize {
        let rows = label_index(&target.bases[k]);
        let mut tau = SparseMat::zero(target.rank(k), source.rank(k));
        for (col, tuple) in k_subsets(n, k).into_iter().enumerate() {
            for s in 1..=n {
                if tuple.contains(&s) {
                    continue;
                }
                let (wedged, eps) = wedge_append(&tuple, s);
                let row = rows[&BasisLabel::WedgeSym {
                    tuple: wedged,
                    v1: k as u8 - 1,
                    v2: 0,
                }];
                let entry = Polynomial::var(crate::ring::Var::y(s)).scale(&coeff_int(-eps));
                tau.add_to(row, col, &entry);
            }
            if k >= 2 {
                let row = rows[&BasisLabel::Shifted(Box::new(BasisLabel::WedgeSym {
                    tuple: tuple.clone(),
                    v1: k as u8 - 2,
                    v2: 0,
                }))];
                tau.add_to(row, col, &Polynomial::constant_i64(-1));
            } else {
                let row = rows[&BasisLabel::Shifted(Box::new(BasisLabel::Wedge(Vec::new())))];
                let entry = Polynomial::var(inst.row2[tuple[0] as usize - 1]).scale(&coeff_int(-1));
                tau.add_to(row, col, &entry);
            }
        }
        components.push(tau);
    }

    let map = ChainMap {
        source,
        target,
        components,
    };
    map.check_commutation()
        .expect("connecting map must commute with the differentials");
    map
}

/// Mapping cone of a chain map: W_k = F_(k-1) (+) T_k with
/// d = [ -d_F , 0 ; tau , d_T ].
pub fn mapping_cone(map: &ChainMap) -> FreeComplex {
    let f = &map.source;
    let t = &map.target;
    let len = (f.length() + 1).max(t.length());
    let mut ranks = Vec::with_capacity(len + 1);
    let mut bases = Vec::with_capacity(len + 1);
    for k in 0..=len {
        let f_part = if k >= 1 { f.rank(k - 1) } else { 0 };
        ranks.push(f_part + t.rank(k));
        let mut b: Vec<BasisLabel> = Vec::new();
        if k >= 1 && k - 1 <= f.length() {
            b.extend(
                f.bases[k - 1]
                    .iter()
                    .map(|l| BasisLabel::Shifted(Box::new(l.clone()))),
            );
        }
        if k <= t.length() {
            b.extend(t.bases[k].iter().cloned());
        }
        bases.push(b);
    }
    let mut diffs = Vec::with_capacity(len);
    for k in 1..=len {
        let mut d = SparseMat::zero(ranks[k - 1], ranks[k]);
        let row_f = if k >= 2 { f.rank(k - 2) } else { 0 };
        let col_f = f.rank(k - 1);
        // -d_F block and the chain-map block under it
        if k >= 2 && k - 1 <= f.length() {
            for (&(r, c), p) in f.d(k - 1).iter() {
                d.add_to(r, c, &p.scale(&coeff_int(-1)));
            }
        }
        if k - 1 <= f.length() {
            for (&(r, c), p) in map.components[k - 1].iter() {
                d.add_to(row_f + r, c, p);
            }
        }
        // d_T block
        if k <= t.length() {
            for (&(r, c), p) in t.d(k).iter() {
                d.add_to(row_f + r, col_f + c, p);
            }
        }
        diffs.push(d);
    }
    let out = FreeComplex {
        ranks,
        diffs,
        bases,
    };
    debug_assert!(out.check_d_squared().is_ok());
    out
}
