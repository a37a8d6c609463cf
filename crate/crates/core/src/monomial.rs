//! Sparse exponent vectors.
//!
//! A [`Monomial`] is a sorted list of `(variable, exponent)` pairs with all
//! exponents positive. Exponent arithmetic is checked: universes stay small
//! but operator products can in principle overflow a machine word, and the
//! failure must be an error rather than silent wraparound.
//!
//! `Ord` on monomials is the fixed global canonicalization order (graded
//! lexicographic over the variable index), used for canonical storage only;
//! user-facing comparisons go through `order::TermOrder`.

use std::cmp::Ordering;

use smallvec::SmallVec;

use crate::error::AlgebraError;
use crate::vars::VarId;

type Pairs = SmallVec<[(VarId, u32); 8]>;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    pairs: Pairs,
}

impl Monomial {
    /// The empty monomial `1`.
    pub fn one() -> Self {
        Monomial { pairs: SmallVec::new() }
    }

    pub fn var(v: VarId) -> Self {
        Monomial { pairs: SmallVec::from_slice(&[(v, 1)]) }
    }

    pub fn var_pow(v: VarId, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial { pairs: SmallVec::from_slice(&[(v, e)]) }
        }
    }

    /// Builds from arbitrary pairs: sorts, merges duplicates, drops zeros.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, u32)>>(iter: I) -> Result<Self, AlgebraError> {
        let mut pairs: Pairs = iter.into_iter().filter(|&(_, e)| e > 0).collect();
        pairs.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: Pairs = SmallVec::new();
        for (v, e) in pairs {
            match merged.last_mut() {
                Some((w, acc)) if *w == v => {
                    *acc = acc.checked_add(e).ok_or(AlgebraError::ExponentOverflow)?;
                }
                _ => merged.push((v, e)),
            }
        }
        Ok(Monomial { pairs: merged })
    }

    pub fn is_one(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn exp(&self, v: VarId) -> u32 {
        match self.pairs.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => self.pairs[i].1,
            Err(_) => 0,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn num_vars(&self) -> usize {
        self.pairs.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.pairs.iter().map(|&(_, e)| e as u64).sum()
    }

    /// Degree counting only variables accepted by `pred`.
    pub fn degree_where<F: Fn(VarId) -> bool>(&self, pred: F) -> u64 {
        self.pairs
            .iter()
            .filter(|&&(v, _)| pred(v))
            .map(|&(_, e)| e as u64)
            .sum()
    }

    /// Integer-weighted degree; weights indexed densely by `VarId`.
    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.pairs
            .iter()
            .map(|&(v, e)| weights[v.index()] * e as i64)
            .sum()
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, AlgebraError> {
        let mut out: Pairs = SmallVec::with_capacity(self.pairs.len() + other.pairs.len());
        let (mut a, mut b) = (self.pairs.iter().peekable(), other.pairs.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        let e = ea.checked_add(eb).ok_or(AlgebraError::ExponentOverflow)?;
                        out.push((va, e));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    out.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    out.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Ok(Monomial { pairs: out })
    }

    pub fn checked_pow(&self, k: u32) -> Result<Monomial, AlgebraError> {
        if k == 0 {
            return Ok(Monomial::one());
        }
        let mut out: Pairs = SmallVec::with_capacity(self.pairs.len());
        for &(v, e) in &self.pairs {
            out.push((v, e.checked_mul(k).ok_or(AlgebraError::ExponentOverflow)?));
        }
        Ok(Monomial { pairs: out })
    }

    /// Exact division; `None` if some exponent would go negative.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out: Pairs = SmallVec::with_capacity(self.pairs.len());
        let mut b = other.pairs.iter().peekable();
        for &(v, e) in &self.pairs {
            let mut rem = e;
            while let Some(&&(w, f)) = b.peek() {
                if w < v {
                    return None; // divisor has a variable we lack
                } else if w == v {
                    if f > e {
                        return None;
                    }
                    rem = e - f;
                    b.next();
                }
                break;
            }
            if rem > 0 {
                out.push((v, rem));
            }
        }
        if b.peek().is_some() {
            return None;
        }
        Some(Monomial { pairs: out })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.div(self).is_some()
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out: Pairs = SmallVec::new();
        let mut b = other.pairs.iter().peekable();
        for &(v, e) in &self.pairs {
            while let Some(&&(w, _)) = b.peek() {
                if w < v {
                    b.next();
                } else {
                    break;
                }
            }
            if let Some(&&(w, f)) = b.peek() {
                if w == v {
                    out.push((v, e.min(f)));
                    b.next();
                }
            }
        }
        Monomial { pairs: out }
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial, AlgebraError> {
        let mut out: Pairs = SmallVec::new();
        let (mut a, mut b) = (self.pairs.iter().peekable(), other.pairs.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((va, ea.max(eb)));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    out.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    out.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Ok(Monomial { pairs: out })
    }

    /// Splits into (part accepted by `pred`, rest).
    pub fn partition<F: Fn(VarId) -> bool>(&self, pred: F) -> (Monomial, Monomial) {
        let mut yes: Pairs = SmallVec::new();
        let mut no: Pairs = SmallVec::new();
        for &(v, e) in &self.pairs {
            if pred(v) {
                yes.push((v, e));
            } else {
                no.push((v, e));
            }
        }
        (Monomial { pairs: yes }, Monomial { pairs: no })
    }

    /// Keeps only variables accepted by `pred`.
    pub fn restrict<F: Fn(VarId) -> bool>(&self, pred: F) -> Monomial {
        Monomial {
            pairs: self.pairs.iter().copied().filter(|&(v, _)| pred(v)).collect(),
        }
    }

    /// Removes `v` entirely, returning its exponent.
    pub fn without(&self, v: VarId) -> (Monomial, u32) {
        let e = self.exp(v);
        if e == 0 {
            return (self.clone(), 0);
        }
        (
            Monomial {
                pairs: self.pairs.iter().copied().filter(|&(w, _)| w != v).collect(),
            },
            e,
        )
    }

    /// Sets the exponent of `v` (0 removes it).
    pub fn with_exp(&self, v: VarId, e: u32) -> Monomial {
        let (mut m, _) = self.without(v);
        if e > 0 {
            let pos = m.pairs.partition_point(|&(w, _)| w < v);
            m.pairs.insert(pos, (v, e));
        }
        m
    }
}

/// Global canonicalization order: graded lexicographic over the variable
/// index (lower index is the more significant variable).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut a, mut b) = (self.pairs.iter(), other.pairs.iter());
        loop {
            match (a.next(), b.next()) {
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    // Smaller index present means larger in lex.
                    match vb.cmp(&va) {
                        Ordering::Equal => match ea.cmp(&eb) {
                            Ordering::Equal => continue,
                            // Larger exponent on the shared most-significant
                            // variable wins... unless the loser compensates:
                            // lex compares variable by variable, so the one
                            // with the larger exponent at the first
                            // difference is greater.
                            ord => return ord,
                        },
                        ord => return ord,
                    }
                }
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VarId {
        VarId(i)
    }

    #[test]
    fn mul_div_round_trip() {
        let m = Monomial::from_pairs([(v(0), 2), (v(3), 1)]).unwrap();
        let k = Monomial::from_pairs([(v(1), 4), (v(3), 2)]).unwrap();
        let p = m.checked_mul(&k).unwrap();
        assert_eq!(p.div(&k), Some(m.clone()));
        assert_eq!(p.div(&m), Some(k.clone()));
        assert!(m.div(&k).is_none());
        assert_eq!(p.total_degree(), 9);
    }

    #[test]
    fn gcd_lcm() {
        let m = Monomial::from_pairs([(v(0), 2), (v(1), 1)]).unwrap();
        let k = Monomial::from_pairs([(v(1), 3), (v(2), 1)]).unwrap();
        let g = m.gcd(&k);
        assert_eq!(g, Monomial::var_pow(v(1), 1));
        let l = m.lcm(&k).unwrap();
        assert_eq!(l, Monomial::from_pairs([(v(0), 2), (v(1), 3), (v(2), 1)]).unwrap());
        assert_eq!(g.checked_mul(&l).unwrap(), m.checked_mul(&k).unwrap());
    }

    #[test]
    fn overflow_is_detected() {
        let m = Monomial::var_pow(v(0), u32::MAX);
        assert!(m.checked_mul(&Monomial::var(v(0))).is_err());
        assert!(m.checked_pow(2).is_err());
    }

    #[test]
    fn canonical_order_is_graded_then_lex() {
        let x2 = Monomial::var_pow(v(0), 2);
        let xy = Monomial::from_pairs([(v(0), 1), (v(1), 1)]).unwrap();
        let y2 = Monomial::var_pow(v(1), 2);
        let x = Monomial::var(v(0));
        assert!(x2 > xy);
        assert!(xy > y2);
        assert!(y2 > x); // degree first
        assert!(x > Monomial::one());
    }
}
