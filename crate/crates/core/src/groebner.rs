//! Buchberger engine plus ideal-level oracles: membership, intersection by
//! elimination, product, colon, equality and minimal generators of leading
//! ideals.

use crate::ring::{
    normal_form, reduce, s_polynomial, Coeff, Monomial, MonomialOrder, Polynomial, RingError, Var,
};
use num::One;
use std::collections::BTreeSet;
use std::sync::Mutex;

/// A polynomial ideal given by generators, with a per-order cache of its
/// reduced Groebner basis. The cache is behind a mutex so shared references
/// stay safe under concurrent readers.
#[derive(Debug)]
pub struct Ideal {
    gens: Vec<Polynomial>,
    cache: Mutex<Vec<(Vec<Var>, Vec<Polynomial>)>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl Ideal {
    pub fn new(gens: Vec<Polynomial>) -> Ideal {
        Ideal {
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Mutex::new(Vec::new()),
        }
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The unique reduced Groebner basis under `ord`, computed once per order.
    pub fn reduced_gb(&self, ord: &MonomialOrder) -> Result<Vec<Polynomial>, RingError> {
        let key: Vec<Var> = ord.priority().to_vec();
        {
            let cache = self.cache.lock().unwrap();
            if let Some((_, gb)) = cache.iter().find(|(k, _)| *k == key) {
                return Ok(gb.clone());
            }
        }
        let gb = buchberger(&self.gens, ord)?;
        let red = reduced_basis(&gb, ord)?;
        let mut cache = self.cache.lock().unwrap();
        if !cache.iter().any(|(k, _)| *k == key) {
            cache.push((key, red.clone()));
        }
        Ok(red)
    }
}

/// Buchberger's algorithm with the normal pair-selection strategy (smallest
/// lcm first) and the coprime-leading-term skip.
pub fn buchberger(gens: &[Polynomial], ord: &MonomialOrder) -> Result<Vec<Polynomial>, RingError> {
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut lms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(ord))
        .collect::<Result<_, _>>()?;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while !pairs.is_empty() {
        // normal strategy: pick the pair with the smallest lcm under ord
        let mut best = 0;
        let mut best_key = ord.key(&lms[pairs[0].0].lcm(&lms[pairs[0].1]))?;
        for (idx, &(a, b)) in pairs.iter().enumerate().skip(1) {
            let key = ord.key(&lms[a].lcm(&lms[b]))?;
            if MonomialOrder::cmp_keys(&key, &best_key) == std::cmp::Ordering::Less {
                best = idx;
                best_key = key;
            }
        }
        let (a, b) = pairs.swap_remove(best);
        if lms[a].coprime(&lms[b]) {
            continue;
        }
        let s = s_polynomial(&basis[a], &basis[b], ord)?;
        let nf = normal_form(&s, &basis, ord)?;
        if nf.is_zero() {
            continue;
        }
        let (lc, lm) = nf.leading_term(ord)?;
        let monic = nf.scale(&(Coeff::one() / lc));
        let new_idx = basis.len();
        basis.push(monic);
        lms.push(lm);
        for i in 0..new_idx {
            pairs.push((i, new_idx));
        }
    }
    Ok(basis)
}

/// True iff every S-pair of `basis` reduces to zero (the Buchberger
/// criterion), recorded per pair.
pub fn s_pairs_reduce_to_zero(
    basis: &[Polynomial],
    ord: &MonomialOrder,
) -> Result<bool, RingError> {
    for i in 0..basis.len() {
        for j in 0..i {
            let s = s_polynomial(&basis[i], &basis[j], ord)?;
            if !normal_form(&s, basis, ord)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The unique reduced Groebner basis obtained from a Groebner basis: monic
/// generators, minimal leading terms, fully tail-reduced, sorted by leading
/// monomial ascending under `ord`.
pub fn reduced_basis(gb: &[Polynomial], ord: &MonomialOrder) -> Result<Vec<Polynomial>, RingError> {
    let mut items: Vec<(Monomial, Polynomial)> = Vec::new();
    for g in gb {
        if g.is_zero() {
            continue;
        }
        let (lc, lm) = g.leading_term(ord)?;
        items.push((lm, g.scale(&(Coeff::one() / lc))));
    }
    // minimality: drop any generator whose leading term another one divides
    let mut keep: Vec<(Monomial, Polynomial)> = Vec::new();
    'outer: for (idx, (lm, g)) in items.iter().enumerate() {
        for (jdx, (other, _)) in items.iter().enumerate() {
            if jdx == idx {
                continue;
            }
            if other.divides(lm) && (other != lm || jdx < idx) {
                continue 'outer;
            }
        }
        keep.push((lm.clone(), g.clone()));
    }
    // full tail reduction of each survivor against the others
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Polynomial> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, (_, g))| g.clone())
            .collect();
        let nf = normal_form(&keep[i].1, &others, ord)?;
        debug_assert!(!nf.is_zero());
        let (lc, _) = nf.leading_term(ord)?;
        reduced.push(nf.scale(&(Coeff::one() / lc)));
    }
    let mut keyed: Vec<(Vec<(u32, u32)>, Polynomial)> = reduced
        .into_iter()
        .map(|g| Ok((ord.key(&g.leading_monomial(ord)?)?, g)))
        .collect::<Result<_, RingError>>()?;
    keyed.sort_by(|a, b| MonomialOrder::cmp_keys(&a.0, &b.0));
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}

/// Ideal membership: f reduces to zero against a Groebner basis of I.
pub fn ideal_member(f: &Polynomial, ideal: &Ideal, ord: &MonomialOrder) -> Result<bool, RingError> {
    if f.is_zero() {
        return Ok(true);
    }
    if ideal.is_zero() {
        return Ok(false);
    }
    let gb = ideal.reduced_gb(ord)?;
    Ok(normal_form(f, &gb, ord)?.is_zero())
}

/// The unique minimal monomial generating set of Lt(I): the leading
/// monomials of the reduced Groebner basis.
pub fn min_gens_leading_ideal(
    ideal: &Ideal,
    ord: &MonomialOrder,
) -> Result<BTreeSet<Monomial>, RingError> {
    if ideal.is_zero() {
        return Ok(BTreeSet::new());
    }
    let gb = ideal.reduced_gb(ord)?;
    gb.iter().map(|g| g.leading_monomial(ord)).collect()
}

/// I ∩ J by the auxiliary-variable elimination method: adjoin t above every
/// ring variable, compute a Groebner basis of <t*I, (1-t)*J> and keep the
/// elements free of t.
pub fn intersect(i: &Ideal, j: &Ideal, ord: &MonomialOrder) -> Result<Ideal, RingError> {
    let elim = ord.with_elimination();
    let t = Polynomial::var(Var::Elim);
    let one_minus_t = &Polynomial::one() - &t;
    let mut gens: Vec<Polynomial> = Vec::new();
    gens.extend(i.generators().iter().map(|f| &t * f));
    gens.extend(j.generators().iter().map(|f| &one_minus_t * f));
    let gb = buchberger(&gens, &elim)?;
    let kept: Vec<Polynomial> = gb
        .into_iter()
        .filter(|g| g.vars().all(|v| v != Var::Elim))
        .collect();
    Ok(Ideal::new(reduced_basis(&kept, ord)?))
}

/// I·J, generated by the pairwise products of the generators.
pub fn product(i: &Ideal, j: &Ideal) -> Ideal {
    let mut gens = Vec::with_capacity(i.generators().len() * j.generators().len());
    for f in i.generators() {
        for g in j.generators() {
            gens.push(f * g);
        }
    }
    Ideal::new(gens)
}

/// The colon ideal (I : f), computed as (1/f)·(I ∩ <f>) generator-wise.
pub fn colon(i: &Ideal, f: &Polynomial, ord: &MonomialOrder) -> Result<Ideal, RingError> {
    if f.is_zero() {
        return Err(RingError::ZeroPolynomial);
    }
    let principal = Ideal::new(vec![f.clone()]);
    let inter = intersect(i, &principal, ord)?;
    let mut gens = Vec::new();
    for h in inter.generators() {
        let (nf, quotients) = reduce(h, std::slice::from_ref(f), ord)?;
        assert!(
            nf.is_zero(),
            "intersection generator not divisible by f in colon computation"
        );
        gens.push(quotients.into_iter().next().unwrap());
    }
    Ok(Ideal::new(gens))
}

/// True iff I and J have identical reduced Groebner bases under `ord`.
pub fn ideal_equal(i: &Ideal, j: &Ideal, ord: &MonomialOrder) -> Result<bool, RingError> {
    Ok(i.reduced_gb(ord)? == j.reduced_gb(ord)?)
}

/// True iff the generator sets span the same ideal (mutual membership);
/// cheaper than `ideal_equal` when one side's basis is already known.
pub fn ideal_contains(
    outer: &Ideal,
    inner: &Ideal,
    ord: &MonomialOrder,
) -> Result<bool, RingError> {
    for g in inner.generators() {
        if !ideal_member(g, outer, ord)? {
            return Ok(false);
        }
    }
    Ok(true)
}
