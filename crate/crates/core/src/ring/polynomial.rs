use super::{Monomial, MonomialOrder, RingError, Var};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational coefficient.
pub type Coeff = BigRational;

pub fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// A polynomial as a term list (monomial, nonzero coefficient), kept sorted
/// strictly descending under the structural order on monomials. The zero
/// polynomial is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Polynomial {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn constant_i64(n: i64) -> Polynomial {
        Polynomial::constant(coeff_int(n))
    }

    pub fn var(v: Var) -> Polynomial {
        Polynomial {
            terms: vec![(Monomial::var(v), Coeff::one())],
        }
    }

    pub fn monomial(m: Monomial, c: Coeff) -> Polynomial {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![(m, c)],
            }
        }
    }

    /// Builds from arbitrary terms, combining duplicates and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Polynomial {
        let mut all: Vec<(Monomial, Coeff)> = terms.into_iter().collect();
        all.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(all.len());
        for (m, c) in all {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True iff the constant term is zero, i.e. the polynomial lies in the
    /// irrelevant maximal ideal generated by the variables.
    pub fn in_maximal_ideal(&self) -> bool {
        self.terms.iter().all(|(m, _)| !m.is_one())
    }

    /// The constant-term coefficient, if the polynomial is a nonzero constant.
    pub fn as_unit_constant(&self) -> Option<&Coeff> {
        match self.terms.as_slice() {
            [(m, c)] if m.is_one() => Some(c),
            _ => None,
        }
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.terms.iter().flat_map(|(m, _)| m.vars())
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Exact division by a monomial; `None` if some term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, c) in &self.terms {
            terms.push((m.divide(t)?, c.clone()));
        }
        Some(Polynomial::from_terms(terms))
    }

    /// Substitutes a rational value for every variable.
    pub fn evaluate(&self, assign: &dyn Fn(Var) -> Coeff) -> Coeff {
        let mut total = Coeff::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for &(var, e) in m.exponents() {
                let base = assign(var);
                for _ in 0..e {
                    v *= &base;
                }
            }
            total += v;
        }
        total
    }

    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<(Coeff, Monomial), RingError> {
        let mut best: Option<&(Monomial, Coeff)> = None;
        for t in &self.terms {
            match best {
                None => best = Some(t),
                Some(b) => {
                    if ord.try_compare(&t.0, &b.0)? == Ordering::Greater {
                        best = Some(t);
                    }
                }
            }
        }
        best.map(|(m, c)| (c.clone(), m.clone()))
            .ok_or(RingError::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Result<Monomial, RingError> {
        Ok(self.leading_term(ord)?.1)
    }

    /// Terms sorted strictly descending under `ord`, with cached sort keys.
    #[allow(clippy::type_complexity)]
    pub(crate) fn sorted_under(
        &self,
        ord: &MonomialOrder,
    ) -> Result<Vec<(Vec<(u32, u32)>, Monomial, Coeff)>, RingError> {
        let mut v: Vec<(Vec<(u32, u32)>, Monomial, Coeff)> = self
            .terms
            .iter()
            .map(|(m, c)| Ok((ord.key(m)?, m.clone(), c.clone())))
            .collect::<Result<_, RingError>>()?;
        v.sort_by(|a, b| MonomialOrder::cmp_keys(&b.0, &a.0));
        Ok(v)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &rhs.terms[j];
            match mb.cmp(ma) {
                Ordering::Less => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(rhs.terms[j..].iter().cloned());
        Polynomial { terms: out }
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut acc = Polynomial::zero();
        for (m, c) in &self.terms {
            let part = Polynomial {
                terms: rhs.terms.iter().map(|(t, k)| (t.mul(m), k * c)).collect(),
            };
            // term order may interleave after multiplication; re-normalize
            acc = &acc + &Polynomial::from_terms(part.terms);
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::parse::print_terms(&self.terms))
    }
}

impl Polynomial {
    /// Deterministic text form with terms descending under `ord`.
    pub fn to_text(&self, ord: &MonomialOrder) -> String {
        let sorted = self
            .sorted_under(ord)
            .expect("order must cover all variables of the polynomial");
        let terms: Vec<(Monomial, Coeff)> = sorted.into_iter().map(|(_, m, c)| (m, c)).collect();
        super::parse::print_terms(&terms)
    }
}

/// Multivariate division with remainder: f = sum(q[i] * g[i]) + nf, where no
/// term of nf is divisible by any leading term of G.
pub fn reduce(
    f: &Polynomial,
    basis: &[Polynomial],
    ord: &MonomialOrder,
) -> Result<(Polynomial, Vec<Polynomial>), RingError> {
    for g in basis {
        if g.is_zero() {
            return Err(RingError::ZeroPolynomial);
        }
    }
    let lts: Vec<(Coeff, Monomial)> = basis
        .iter()
        .map(|g| g.leading_term(ord))
        .collect::<Result<_, _>>()?;
    let mut work = f.sorted_under(ord)?;
    let mut remainder: Vec<(Monomial, Coeff)> = Vec::new();
    let mut quotients = vec![Polynomial::zero(); basis.len()];

    'outer: while let Some((_, m, c)) = work.first().cloned() {
        for (i, (lc, lm)) in lts.iter().enumerate() {
            if let Some(q) = lm.divide(&m) {
                let qc = &c / lc;
                quotients[i] = &quotients[i] + &Polynomial::monomial(q.clone(), qc.clone());
                // subtract qc * q * g[i]; scaling by a monomial preserves order
                let prod = basis[i].mul_monomial(&q).scale(&qc);
                let prod_sorted = prod.sorted_under(ord)?;
                work = merge_sub(work, prod_sorted);
                continue 'outer;
            }
        }
        remainder.push((m, c));
        work.remove(0);
    }
    Ok((Polynomial::from_terms(remainder), quotients))
}

/// Fully reduced normal form (quotients dropped).
pub fn normal_form(
    f: &Polynomial,
    basis: &[Polynomial],
    ord: &MonomialOrder,
) -> Result<Polynomial, RingError> {
    Ok(reduce(f, basis, ord)?.0)
}

type SortedTerms = Vec<(Vec<(u32, u32)>, Monomial, Coeff)>;

fn merge_sub(a: SortedTerms, b: SortedTerms) -> SortedTerms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match MonomialOrder::cmp_keys(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (k, m, c) = &b[j];
                out.push((k.clone(), m.clone(), -c));
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].2 - &b[j].2;
                if !c.is_zero() {
                    out.push((a[i].0.clone(), a[i].1.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(k, m, c)| (k.clone(), m.clone(), -c)));
    out
}

/// S(f, g) = (lcm/lt(f)) f - (lcm/lt(g)) g, with monic normalization folded
/// into the cofactors.
pub fn s_polynomial(
    f: &Polynomial,
    g: &Polynomial,
    ord: &MonomialOrder,
) -> Result<Polynomial, RingError> {
    let (cf, mf) = f.leading_term(ord)?;
    let (cg, mg) = g.leading_term(ord)?;
    let l = mf.lcm(&mg);
    let uf = mf.divide(&l).expect("lcm divisible by lt(f)");
    let ug = mg.divide(&l).expect("lcm divisible by lt(g)");
    let a = f.mul_monomial(&uf).scale(&(Coeff::one() / cf));
    let b = g.mul_monomial(&ug).scale(&(Coeff::one() / cg));
    Ok(&a - &b)
}

/// Pretty-printer helper for signed rational coefficients.
pub(crate) fn coeff_is_negative(c: &Coeff) -> bool {
    c.is_negative()
}
