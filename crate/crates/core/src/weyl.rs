//! Normally ordered Weyl-algebra elements.
//!
//! An operator is a map from differential monomials to coefficients, with all
//! coordinate (and slack, and `h`) content inside the coefficient — the
//! normally ordered form with functions on the left. Three modes share the
//! representation:
//!
//! * `D`  — polynomial coefficients, `dv * v = v * dv + 1`;
//! * `R`  — rational-function coefficients in the coordinate (and slack)
//!          variables, same relation;
//! * `Dh` — polynomial coefficients including `h`, `dv * v = v * dv + h^2`.
//!
//! Multiplication renormalizes through the closed-form contraction
//! `d^a f = sum_b C(a,b) (d^b f) d^(a-b) h^(2|b|)` per conjugate pair, rather
//! than by repeated single swaps.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;
use crate::order::{TermOrder, WeightVector};
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::vars::{VarId, VarUniverse};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    D,
    R,
    Dh,
}

impl Mode {
    pub fn label(self) -> &'static str {
        match self {
            Mode::D => "D",
            Mode::R => "R",
            Mode::Dh => "Dh",
        }
    }
}

/// Coefficient of one differential monomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Coef {
    Poly(Polynomial),
    Rat(RationalFunction),
}

impl Coef {
    pub fn zero_for(mode: Mode) -> Coef {
        match mode {
            Mode::R => Coef::Rat(RationalFunction::zero()),
            _ => Coef::Poly(Polynomial::zero()),
        }
    }

    pub fn one_for(mode: Mode) -> Coef {
        match mode {
            Mode::R => Coef::Rat(RationalFunction::one()),
            _ => Coef::Poly(Polynomial::one()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coef::Poly(p) => p.is_zero(),
            Coef::Rat(f) => f.is_zero(),
        }
    }

    pub fn add(&self, other: &Coef) -> Result<Coef> {
        match (self, other) {
            (Coef::Poly(a), Coef::Poly(b)) => Ok(Coef::Poly(a.add(b))),
            (Coef::Rat(a), Coef::Rat(b)) => Ok(Coef::Rat(a.add(b)?)),
            _ => Err(AlgebraError::ModeMismatch("mixed coefficient kinds".into())),
        }
    }

    pub fn neg(&self) -> Coef {
        match self {
            Coef::Poly(p) => Coef::Poly(p.neg()),
            Coef::Rat(f) => Coef::Rat(f.neg()),
        }
    }

    pub fn mul(&self, other: &Coef) -> Result<Coef> {
        match (self, other) {
            (Coef::Poly(a), Coef::Poly(b)) => Ok(Coef::Poly(a.mul(b)?)),
            (Coef::Rat(a), Coef::Rat(b)) => Ok(Coef::Rat(a.mul(b)?)),
            _ => Err(AlgebraError::ModeMismatch("mixed coefficient kinds".into())),
        }
    }

    pub fn scale_q(&self, c: &BigRational) -> Coef {
        match self {
            Coef::Poly(p) => Coef::Poly(p.scale(c)),
            Coef::Rat(f) => Coef::Rat(f.scale(c)),
        }
    }

    pub fn partial(&self, v: VarId) -> Result<Coef> {
        match self {
            Coef::Poly(p) => Ok(Coef::Poly(p.partial(v))),
            Coef::Rat(f) => Ok(Coef::Rat(f.partial(v)?)),
        }
    }

    fn mul_mono(&self, m: &Monomial) -> Result<Coef> {
        match self {
            Coef::Poly(p) => Ok(Coef::Poly(p.mul_term(m, &BigRational::one())?)),
            Coef::Rat(f) => Ok(Coef::Rat(
                f.mul_poly(&Polynomial::term(BigRational::one(), m.clone()))?,
            )),
        }
    }

    pub fn expect_poly(&self) -> &Polynomial {
        match self {
            Coef::Poly(p) => p,
            Coef::Rat(_) => panic!("expected polynomial coefficient"),
        }
    }

    pub fn expect_rat(&self) -> &RationalFunction {
        match self {
            Coef::Rat(f) => f,
            Coef::Poly(_) => panic!("expected rational-function coefficient"),
        }
    }

    pub fn to_rat(&self) -> RationalFunction {
        match self {
            Coef::Poly(p) => RationalFunction::from_poly(p.clone()),
            Coef::Rat(f) => f.clone(),
        }
    }
}

/// Invertible scalar of a mode: a rational number in `D`/`Dh`, a rational
/// function in `R`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Q(BigRational),
    F(RationalFunction),
}

impl Scalar {
    pub fn one_for(mode: Mode) -> Scalar {
        match mode {
            Mode::R => Scalar::F(RationalFunction::one()),
            _ => Scalar::Q(BigRational::one()),
        }
    }

    pub fn recip(&self) -> Result<Scalar> {
        match self {
            Scalar::Q(c) => {
                if c.is_zero() {
                    Err(AlgebraError::DivisionByZero)
                } else {
                    Ok(Scalar::Q(c.clone().recip()))
                }
            }
            Scalar::F(f) => Ok(Scalar::F(f.recip()?)),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => {
                if b.is_zero() {
                    Err(AlgebraError::DivisionByZero)
                } else {
                    Ok(Scalar::Q(a / b))
                }
            }
            (Scalar::F(a), Scalar::F(b)) => Ok(Scalar::F(a.div(b)?)),
            _ => Err(AlgebraError::ModeMismatch("mixed scalar kinds".into())),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(c) => Scalar::Q(-c.clone()),
            Scalar::F(f) => Scalar::F(f.neg()),
        }
    }
}

/// Initial term of an operator under some order: the monomial lives in the
/// commutative symbol image (full monomial for `D`/`Dh`, differential
/// monomial for `R`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadTerm {
    pub coeff: Scalar,
    pub mono: Monomial,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylOperator {
    mode: Mode,
    terms: BTreeMap<Monomial, Coef>,
}

fn binom_q(m: u32, k: u32) -> BigRational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(m - i);
        den *= BigInt::from(i + 1);
    }
    BigRational::new(num, den)
}

impl WeylOperator {
    pub fn zero(mode: Mode) -> Self {
        WeylOperator { mode, terms: BTreeMap::new() }
    }

    pub fn one(mode: Mode) -> Self {
        Self::term(mode, Coef::one_for(mode), Monomial::one())
    }

    pub fn term(mode: Mode, coef: Coef, dmono: Monomial) -> Self {
        let mut op = Self::zero(mode);
        op.add_term(&dmono, &coef);
        op
    }

    pub fn from_coef(mode: Mode, coef: Coef) -> Self {
        Self::term(mode, coef, Monomial::one())
    }

    pub fn from_poly(mode: Mode, p: Polynomial) -> Self {
        match mode {
            Mode::R => Self::from_coef(mode, Coef::Rat(RationalFunction::from_poly(p))),
            _ => Self::from_coef(mode, Coef::Poly(p)),
        }
    }

    /// The operator `dv` for a differential variable `v`.
    pub fn d_var(mode: Mode, v: VarId) -> Self {
        Self::term(mode, Coef::one_for(mode), Monomial::var(v))
    }

    pub fn d_monomial(mode: Mode, m: Monomial) -> Self {
        Self::term(mode, Coef::one_for(mode), m)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coef)> {
        self.terms.iter()
    }

    pub fn coef_of(&self, dmono: &Monomial) -> Coef {
        self.terms
            .get(dmono)
            .cloned()
            .unwrap_or_else(|| Coef::zero_for(self.mode))
    }

    pub fn add_term(&mut self, dmono: &Monomial, coef: &Coef) {
        if coef.is_zero() {
            return;
        }
        match self.terms.get_mut(dmono) {
            Some(acc) => {
                let sum = acc.add(coef).expect("same mode within one operator");
                if sum.is_zero() {
                    self.terms.remove(dmono);
                } else {
                    *acc = sum;
                }
            }
            None => {
                self.terms.insert(dmono.clone(), coef.clone());
            }
        }
    }

    fn check_mode(&self, other: &Self) -> Result<()> {
        if self.mode != other.mode {
            return Err(AlgebraError::ModeMismatch(format!(
                "{} vs {}",
                self.mode.label(),
                other.mode.label()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_mode(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        WeylOperator {
            mode: self.mode,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale_q(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.mode);
        }
        WeylOperator {
            mode: self.mode,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.scale_q(c))).collect(),
        }
    }

    /// Left multiplication by a function (a coefficient): functions commute
    /// with functions, so this is coefficient-wise.
    pub fn mul_coef_left(&self, coef: &Coef) -> Result<Self> {
        let mut out = Self::zero(self.mode);
        for (m, c) in &self.terms {
            out.add_term(m, &coef.mul(c)?);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Result<Self> {
        match (self.mode, s) {
            (Mode::R, Scalar::F(f)) => self.mul_coef_left(&Coef::Rat(f.clone())),
            (Mode::R, Scalar::Q(c)) => Ok(self.scale_q(c)),
            (_, Scalar::Q(c)) => Ok(self.scale_q(c)),
            (_, Scalar::F(_)) => Err(AlgebraError::ModeMismatch(
                "rational-function scalar in a polynomial mode".into(),
            )),
        }
    }

    /// Moves `d^mu` rightward past the function `e`:
    /// `d^mu e = sum_b C(mu,b) (d^b e) d^(mu-b) [h^(2|b|)]`.
    fn commute_past(&self, u: &VarUniverse, mu: &Monomial, e: &Coef) -> Result<Vec<(Monomial, Coef)>> {
        let mut acc: Vec<(Monomial, Coef)> = vec![(mu.clone(), e.clone())];
        for (v, m) in mu.iter() {
            let x = u
                .pair(v)
                .expect("differential monomial keys pair with coordinates");
            let mut next: Vec<(Monomial, Coef)> = Vec::new();
            for (kappa, f) in acc {
                let mut deriv = f.clone();
                for beta in 0..=m {
                    if beta > 0 {
                        deriv = deriv.partial(x)?;
                        if deriv.is_zero() {
                            break;
                        }
                    }
                    let mut coef = if beta == 0 {
                        f.clone()
                    } else {
                        deriv.scale_q(&binom_q(m, beta))
                    };
                    if self.mode == Mode::Dh && beta > 0 {
                        coef = coef.mul_mono(&Monomial::var_pow(u.h(), 2 * beta))?;
                    }
                    next.push((kappa.with_exp(v, m - beta), coef));
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    /// Normally ordered product.
    pub fn mul(&self, other: &Self, u: &VarUniverse) -> Result<Self> {
        self.check_mode(other)?;
        let mut out = Self::zero(self.mode);
        for (mu, c) in &self.terms {
            for (nu, e) in &other.terms {
                for (kappa, piece) in self.commute_past(u, mu, e)? {
                    let dmono = kappa.checked_mul(nu)?;
                    out.add_term(&dmono, &c.mul(&piece)?);
                }
            }
        }
        Ok(out)
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &Self, u: &VarUniverse) -> Result<Self> {
        self.mul(other, u)?.sub(&other.mul(self, u)?)
    }

    /// Expansion into full commutative-image terms (coefficient monomial
    /// merged with the differential monomial). Polynomial modes only.
    pub fn full_terms(&self) -> Result<Vec<(Monomial, BigRational)>> {
        let mut out = Vec::new();
        for (dmono, coef) in &self.terms {
            match coef {
                Coef::Poly(p) => {
                    for (pm, c) in p.terms() {
                        out.push((pm.checked_mul(dmono)?, c.clone()));
                    }
                }
                Coef::Rat(_) => {
                    return Err(AlgebraError::ModeMismatch(
                        "full-term expansion needs polynomial coefficients".into(),
                    ))
                }
            }
        }
        Ok(out)
    }

    /// Total degree of each full term; `Some(d)` iff homogeneous of degree `d`.
    pub fn homogeneous_degree(&self) -> Result<Option<u64>> {
        let terms = self.full_terms()?;
        let mut deg = None;
        for (m, _) in terms {
            let d = m.total_degree();
            match deg {
                None => deg = Some(d),
                Some(existing) if existing != d => return Ok(None),
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Homogenization into `Dh`: every full term is padded with the power of
    /// `h` that lifts it to the maximal total degree. The operator must live
    /// in a universe id-compatible with the homogenized one (`h` is appended
    /// after all other variables).
    pub fn homogenize(&self, u: &VarUniverse) -> Result<Self> {
        if self.mode != Mode::D {
            return Err(AlgebraError::ModeMismatch("homogenize needs D-mode".into()));
        }
        let h = u.h();
        let maxdeg = self
            .full_terms()?
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0);
        let mut out = Self::zero(Mode::Dh);
        for (dmono, coef) in &self.terms {
            let p = coef.expect_poly();
            let ddeg = dmono.total_degree();
            let mut lifted = Polynomial::zero();
            for (pm, c) in p.terms() {
                let pad = (maxdeg - ddeg - pm.total_degree()) as u32;
                let m2 = pm.checked_mul(&Monomial::var_pow(h, pad))?;
                lifted.add_term(&m2, c);
            }
            out.add_term(dmono, &Coef::Poly(lifted));
        }
        Ok(out)
    }

    /// Substitutes `h := 1`.
    pub fn dehomogenize(&self, u: &VarUniverse) -> Result<Self> {
        if self.mode != Mode::Dh {
            return Err(AlgebraError::ModeMismatch("dehomogenize needs Dh-mode".into()));
        }
        let h = u.h();
        let one = BigRational::one();
        let mut out = Self::zero(Mode::D);
        for (dmono, coef) in &self.terms {
            let p = coef
                .expect_poly()
                .substitute(&|v| (v == h).then(|| one.clone()));
            out.add_term(dmono, &Coef::Poly(p));
        }
        Ok(out)
    }

    /// Sum of the terms of maximal `(-w, w)`-degree.
    pub fn initial_form_weight(&self, u: &VarUniverse, w: &WeightVector) -> Result<Self> {
        if self.mode == Mode::R {
            return Err(AlgebraError::ModeMismatch(
                "initial forms are taken in polynomial modes".into(),
            ));
        }
        let map = w.full_map(u);
        let mut best: Option<i64> = None;
        for (dmono, coef) in &self.terms {
            for (pm, _) in coef.expect_poly().terms() {
                let d = map.degree(pm) + map.degree(dmono);
                if best.map_or(true, |b| d > b) {
                    best = Some(d);
                }
            }
        }
        let Some(best) = best else {
            return Ok(Self::zero(self.mode));
        };
        let mut out = Self::zero(self.mode);
        for (dmono, coef) in &self.terms {
            let mut kept = Polynomial::zero();
            for (pm, c) in coef.expect_poly().terms() {
                if map.degree(pm) + map.degree(dmono) == best {
                    kept.add_term(pm, c);
                }
            }
            out.add_term(dmono, &Coef::Poly(kept));
        }
        Ok(out)
    }

    /// Greatest term under `order` in the commutative symbol image.
    pub fn lead_term(&self, order: &TermOrder) -> Result<LeadTerm> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroOperator);
        }
        match self.mode {
            Mode::R => {
                let mono = order.max(self.terms.keys()).expect("nonzero").clone();
                let coeff = self.terms[&mono].expect_rat().clone();
                Ok(LeadTerm { coeff: Scalar::F(coeff), mono })
            }
            Mode::D | Mode::Dh => {
                let mut best: Option<(Monomial, BigRational)> = None;
                for (m, c) in self.full_terms()? {
                    match &best {
                        None => best = Some((m, c)),
                        Some((bm, _)) => {
                            if order.compare(&m, bm) == std::cmp::Ordering::Greater {
                                best = Some((m, c));
                            }
                        }
                    }
                }
                let (mono, c) = best.expect("nonzero");
                Ok(LeadTerm { coeff: Scalar::Q(c), mono })
            }
        }
    }

    /// Rewrites with rational-function coefficients.
    pub fn to_r_mode(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), Coef::Rat(c.to_rat())))
            .collect();
        WeylOperator { mode: Mode::R, terms }
    }

    /// Clears denominators: returns the `D`-mode operator together with the
    /// common-denominator polynomial `L` such that `L * self` is the result.
    pub fn to_d_mode(&self) -> Result<(Self, Polynomial)> {
        match self.mode {
            Mode::D => Ok((self.clone(), Polynomial::one())),
            Mode::Dh => Err(AlgebraError::ModeMismatch("already homogenized".into())),
            Mode::R => {
                let mut lcm = Polynomial::one();
                for c in self.terms.values() {
                    let den = c.expect_rat().den();
                    let g = crate::poly::poly_gcd(&lcm, den);
                    lcm = lcm.mul(&den.div_exact(&g).expect("gcd divides"))?;
                }
                let mut out = Self::zero(Mode::D);
                for (m, c) in &self.terms {
                    let f = c.expect_rat();
                    let scaled = f
                        .num()
                        .mul(&lcm.div_exact(f.den()).expect("common denominator"))?;
                    out.add_term(m, &Coef::Poly(scaled));
                }
                Ok((out, lcm))
            }
        }
    }

    /// Substitutes exact values for (typically slack) variables inside every
    /// coefficient.
    pub fn substitute(&self, values: &dyn Fn(VarId) -> Option<BigRational>) -> Result<Self> {
        let mut out = Self::zero(self.mode);
        for (m, c) in &self.terms {
            let c2 = match c {
                Coef::Poly(p) => Coef::Poly(p.substitute(values)),
                Coef::Rat(f) => Coef::Rat(f.substitute(values)?),
            };
            out.add_term(m, &c2);
        }
        Ok(out)
    }

    /// Degree in the differential symbols only.
    pub fn d_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    fn x_poly(u: &VarUniverse, v: VarId) -> Coef {
        Coef::Poly(Polynomial::var(v))
    }

    #[test]
    fn canonical_commutation() {
        let u = VarUniverse::full(1);
        // dy1 * x11 = x11 * dy1 (unpaired variables commute)
        let d1 = WeylOperator::d_var(Mode::D, u.dy(1));
        let x11 = WeylOperator::from_coef(Mode::D, x_poly(&u, u.x(1, 1)));
        let prod = d1.mul(&x11, &u).unwrap();
        assert_eq!(prod, x11.mul(&d1, &u).unwrap());
        // dy1 * y1 = y1 * dy1 + 1
        let y1 = WeylOperator::from_coef(Mode::D, x_poly(&u, u.y(1)));
        let lhs = d1.mul(&y1, &u).unwrap();
        let rhs = y1.mul(&d1, &u).unwrap().add(&WeylOperator::one(Mode::D)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn homogenized_commutation_carries_h_squared() {
        let u = VarUniverse::full_slack_h(1);
        let d1 = WeylOperator::d_var(Mode::Dh, u.dy(1));
        let y1 = WeylOperator::from_coef(Mode::Dh, Coef::Poly(Polynomial::var(u.y(1))));
        let h2 = WeylOperator::from_coef(
            Mode::Dh,
            Coef::Poly(Polynomial::var_pow(u.h(), 2)),
        );
        let lhs = d1.mul(&y1, &u).unwrap();
        let rhs = y1.mul(&d1, &u).unwrap().add(&h2).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn contraction_formula_small_case() {
        // d^2 y^2 = y^2 d^2 + 4 y d + 2  (D-mode)
        let u = VarUniverse::full(1);
        let d = WeylOperator::d_monomial(Mode::D, Monomial::var_pow(u.dy(1), 2));
        let y2 = WeylOperator::from_coef(Mode::D, Coef::Poly(Polynomial::var_pow(u.y(1), 2)));
        let prod = d.mul(&y2, &u).unwrap();
        let mut expected = WeylOperator::zero(Mode::D);
        expected.add_term(&Monomial::var_pow(u.dy(1), 2), &Coef::Poly(Polynomial::var_pow(u.y(1), 2)));
        expected.add_term(
            &Monomial::var(u.dy(1)),
            &Coef::Poly(Polynomial::var(u.y(1)).scale(&q(4))),
        );
        expected.add_term(&Monomial::one(), &Coef::Poly(Polynomial::int(2)));
        assert_eq!(prod, expected);
    }

    #[test]
    fn associativity_random_all_modes() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(3);
        for mode in [Mode::D, Mode::Dh, Mode::R] {
            let u = VarUniverse::full_slack_h(1);
            let vars_c = [u.x(1, 1), u.y(1), u.r()];
            let vars_d = [u.dx(1, 1), u.dy(1), u.dr()];
            let mut random_op = |rng: &mut StdRng| {
                let mut op = WeylOperator::zero(mode);
                for _ in 0..2 {
                    let cpairs: Vec<_> = vars_c
                        .iter()
                        .filter_map(|&v| {
                            let e = rng.gen_range(0..=1u32);
                            (e > 0).then_some((v, e))
                        })
                        .collect();
                    let dpairs: Vec<_> = vars_d
                        .iter()
                        .filter_map(|&v| {
                            let e = rng.gen_range(0..=2u32);
                            (e > 0).then_some((v, e))
                        })
                        .collect();
                    let p = Polynomial::term(
                        q(rng.gen_range(-3..=3)),
                        Monomial::from_pairs(cpairs).unwrap(),
                    );
                    let coef = match mode {
                        Mode::R => {
                            let den = if rng.gen_bool(0.3) {
                                Polynomial::var(u.x(1, 1)).add(&Polynomial::int(1))
                            } else {
                                Polynomial::one()
                            };
                            Coef::Rat(RationalFunction::new(p, den).unwrap())
                        }
                        _ => Coef::Poly(p),
                    };
                    op.add_term(&Monomial::from_pairs(dpairs).unwrap(), &coef);
                }
                op
            };
            for _ in 0..60 {
                let a = random_op(&mut rng);
                let b = random_op(&mut rng);
                let c = random_op(&mut rng);
                let lhs = a.mul(&b, &u).unwrap().mul(&c, &u).unwrap();
                let rhs = a.mul(&b.mul(&c, &u).unwrap(), &u).unwrap();
                assert_eq!(lhs, rhs, "associativity failed in {:?}", mode);
            }
        }
    }

    #[test]
    fn jacobi_identity_random() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let u = VarUniverse::full(1);
        let mut rng = StdRng::seed_from_u64(13);
        let vars_c = [u.x(1, 1), u.y(1)];
        let vars_d = [u.dx(1, 1), u.dy(1)];
        let mut random_op = |rng: &mut StdRng| {
            let mut op = WeylOperator::zero(Mode::D);
            for _ in 0..2 {
                let cpairs: Vec<_> = vars_c
                    .iter()
                    .filter_map(|&v| {
                        let e = rng.gen_range(0..=1u32);
                        (e > 0).then_some((v, e))
                    })
                    .collect();
                let dpairs: Vec<_> = vars_d
                    .iter()
                    .filter_map(|&v| {
                        let e = rng.gen_range(0..=1u32);
                        (e > 0).then_some((v, e))
                    })
                    .collect();
                op.add_term(
                    &Monomial::from_pairs(dpairs).unwrap(),
                    &Coef::Poly(Polynomial::term(
                        q(rng.gen_range(-2..=2)),
                        Monomial::from_pairs(cpairs).unwrap(),
                    )),
                );
            }
            op
        };
        for _ in 0..40 {
            let a = random_op(&mut rng);
            let b = random_op(&mut rng);
            let c = random_op(&mut rng);
            let j = a
                .commutator(&b.commutator(&c, &u).unwrap(), &u)
                .unwrap()
                .add(&b.commutator(&c.commutator(&a, &u).unwrap(), &u).unwrap())
                .unwrap()
                .add(&c.commutator(&a.commutator(&b, &u).unwrap(), &u).unwrap())
                .unwrap();
            assert!(j.is_zero(), "Jacobi identity failed");
        }
    }

    #[test]
    fn homogenize_round_trip_and_product_compatibility() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let u = VarUniverse::full_slack_h(1);
        let mut rng = StdRng::seed_from_u64(31);
        let vars_c = [u.x(1, 1), u.x(1, 2), u.y(2), u.slack_b(1)];
        let vars_d = [u.dx(1, 2), u.dy(1), u.dy(2)];
        let mut random_op = |rng: &mut StdRng| {
            let mut op = WeylOperator::zero(Mode::D);
            for _ in 0..3 {
                let cpairs: Vec<_> = vars_c
                    .iter()
                    .filter_map(|&v| {
                        let e = rng.gen_range(0..=2u32);
                        (e > 0 && rng.gen_bool(0.5)).then_some((v, e))
                    })
                    .collect();
                let dpairs: Vec<_> = vars_d
                    .iter()
                    .filter_map(|&v| {
                        let e = rng.gen_range(0..=2u32);
                        (e > 0 && rng.gen_bool(0.5)).then_some((v, e))
                    })
                    .collect();
                op.add_term(
                    &Monomial::from_pairs(dpairs).unwrap(),
                    &Coef::Poly(Polynomial::term(
                        q(rng.gen_range(-3..=3)),
                        Monomial::from_pairs(cpairs).unwrap(),
                    )),
                );
            }
            op
        };
        for _ in 0..60 {
            let p = random_op(&mut rng);
            let qop = random_op(&mut rng);
            let hp = p.homogenize(&u).unwrap();
            let hq = qop.homogenize(&u).unwrap();
            // round trip
            assert_eq!(hp.dehomogenize(&u).unwrap(), p);
            // homogeneous inputs stay homogeneous under multiplication
            let prod_h = hp.mul(&hq, &u).unwrap();
            if !prod_h.is_zero() {
                assert!(prod_h.homogeneous_degree().unwrap().is_some());
            }
            // dehomogenized product of homogenizations is the plain product
            assert_eq!(
                prod_h.dehomogenize(&u).unwrap(),
                p.mul(&qop, &u).unwrap()
            );
            // homogenizing a homogeneous operator is the identity
            if !p.is_zero() && p.homogeneous_degree().unwrap().is_some() {
                assert_eq!(p.homogenize(&u).unwrap().dehomogenize(&u).unwrap(), p);
            }
        }
    }

    #[test]
    fn initial_form_weight_zero_weight_is_identity() {
        let u = VarUniverse::full(1);
        let mut op = WeylOperator::zero(Mode::D);
        op.add_term(&Monomial::var(u.dy(1)), &Coef::Poly(Polynomial::var(u.x(1, 2))));
        op.add_term(&Monomial::one(), &Coef::Poly(Polynomial::int(5)));
        let w = WeightVector::zero();
        assert_eq!(op.initial_form_weight(&u, &w).unwrap(), op);
    }

    #[test]
    fn initial_form_multiplicativity() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let u = VarUniverse::full(1);
        let w = crate::order::make_weight(&u);
        let mut rng = StdRng::seed_from_u64(37);
        let vars_c = [u.x(1, 1), u.x(1, 2), u.y(1)];
        let vars_d = [u.dx(1, 2), u.dy(1)];
        let mut random_op = |rng: &mut StdRng| {
            let mut op = WeylOperator::zero(Mode::D);
            for _ in 0..2 {
                let cpairs: Vec<_> = vars_c
                    .iter()
                    .filter_map(|&v| {
                        let e = rng.gen_range(0..=1u32);
                        (e > 0).then_some((v, e))
                    })
                    .collect();
                let dpairs: Vec<_> = vars_d
                    .iter()
                    .filter_map(|&v| {
                        let e = rng.gen_range(0..=2u32);
                        (e > 0).then_some((v, e))
                    })
                    .collect();
                op.add_term(
                    &Monomial::from_pairs(dpairs).unwrap(),
                    &Coef::Poly(Polynomial::term(
                        q(rng.gen_range(1..=3)),
                        Monomial::from_pairs(cpairs).unwrap(),
                    )),
                );
            }
            op
        };
        for _ in 0..80 {
            let p = random_op(&mut rng);
            let qop = random_op(&mut rng);
            if p.is_zero() || qop.is_zero() {
                continue;
            }
            let lhs = p.mul(&qop, &u).unwrap().initial_form_weight(&u, &w).unwrap();
            let rhs = p
                .initial_form_weight(&u, &w)
                .unwrap()
                .mul(&qop.initial_form_weight(&u, &w).unwrap(), &u)
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
