//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by the global canonical monomial
//! order, so equal polynomials always have identical representations and the
//! leading term (under the canonicalization order) is the last entry. No
//! floating point enters this module; coefficients are `BigRational`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::monomial::Monomial;
use crate::vars::VarId;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn q_ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn int(n: i64) -> Self {
        Polynomial::constant(q(n))
    }

    pub fn var(v: VarId) -> Self {
        Polynomial::term(BigRational::one(), Monomial::var(v))
    }

    pub fn var_pow(v: VarId, e: u32) -> Self {
        Polynomial::term(BigRational::one(), Monomial::var_pow(v, e))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in iter {
            p.add_term(&m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().map_or(false, |(m, c)| m.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.is_one())
    }

    /// The constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: VarId) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Variables actually appearing.
    pub fn vars(&self) -> Vec<VarId> {
        let mut out: Vec<VarId> = Vec::new();
        for m in self.terms.keys() {
            for (v, _) in m.iter() {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Leading term under the global canonicalization order.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: &Monomial, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(m) {
            Some(acc) => {
                *acc += c;
                if acc.is_zero() {
                    self.terms.remove(m);
                }
            }
            None => {
                self.terms.insert(m.clone(), c.clone());
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, &-c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero());
        }
        let mut out = BTreeMap::new();
        for (mm, cc) in &self.terms {
            out.insert(mm.checked_mul(m)?, cc * c);
        }
        Ok(Polynomial { terms: out })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        let (small, large) = if self.num_terms() <= other.num_terms() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Polynomial::zero();
        for (m, c) in &small.terms {
            for (mm, cc) in &large.terms {
                out.add_term(&m.checked_mul(mm)?, &(c * cc));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Polynomial> {
        let mut out = Polynomial::one();
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Formal partial derivative with respect to `v`.
    pub fn partial(&self, v: VarId) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let dm = m.with_exp(v, e - 1);
            out.add_term(&dm, &(c * q(e as i64)));
        }
        out
    }

    /// Substitutes exact values for the given variables.
    pub fn substitute(&self, values: &dyn Fn(VarId) -> Option<BigRational>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (v, e) in m.iter() {
                match values(v) {
                    Some(val) => {
                        let mut p = BigRational::one();
                        for _ in 0..e {
                            p *= &val;
                        }
                        coeff *= p;
                    }
                    None => rest.push((v, e)),
                }
            }
            if coeff.is_zero() {
                continue;
            }
            let m2 = Monomial::from_pairs(rest).expect("substitution cannot overflow");
            out.add_term(&m2, &coeff);
        }
        out
    }

    /// Evaluates at a floating point assignment (every present variable must
    /// be assigned).
    pub fn eval_f64(&self, assign: &dyn Fn(VarId) -> f64) -> f64 {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut t = rational_to_f64(c);
            for (v, e) in m.iter() {
                t *= assign(v).powi(e as i32);
            }
            acc += t;
        }
        acc
    }

    /// Rational content: `self / content` has coprime integer coefficients
    /// and a positive leading coefficient. Content of zero is zero.
    pub fn content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.leading().map_or(false, |(_, c)| c.is_negative()) {
            content = -content;
        }
        content
    }

    /// `self / content()`: primitive integer-coefficient form, positive lead.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let c = self.content();
        self.scale(&c.recip())
    }

    /// Divides by the leading coefficient so the canonical lead is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some((_, c)) => self.scale(&c.clone().recip()),
        }
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let (dm, dc) = d.leading().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(dm)?;
            let qc = rc / dc;
            let qt = Polynomial::term(qc, qm);
            quot = quot.add(&qt);
            let prod = d.mul(&qt).ok()?;
            rem = rem.sub(&prod);
        }
        Some(quot)
    }

    /// The coefficient polynomials of `self` viewed as a polynomial in `v`,
    /// indexed by the exponent of `v` (ascending, may contain zero entries).
    pub fn coefficients_in(&self, v: VarId) -> Vec<Polynomial> {
        let deg = self.degree_in(v) as usize;
        let mut out = vec![Polynomial::zero(); deg + 1];
        for (m, c) in &self.terms {
            let (rest, e) = m.without(v);
            out[e as usize].add_term(&rest, c);
        }
        out
    }
}

pub fn rational_to_f64(c: &BigRational) -> f64 {
    // Good enough for the numeric layer: exact conversion when the parts fit,
    // string round-trip otherwise.
    let num = c.numer();
    let den = c.denom();
    match (i128::try_from(num), i128::try_from(den)) {
        (Ok(n), Ok(d)) => n as f64 / d as f64,
        _ => {
            let s = format!("{num}");
            let t = format!("{den}");
            s.parse::<f64>().unwrap_or(f64::NAN) / t.parse::<f64>().unwrap_or(f64::NAN)
        }
    }
}

/// Monic greatest common divisor (leading coefficient 1 under the global
/// canonical order). `gcd(p, 0)` is the monic normalization of `p`.
///
/// Strategy: strip the shared monomial factor, try division one way and the
/// other, then the heuristic evaluation gcd (verified by trial division);
/// the primitive remainder sequence is the fallback.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Polynomial {
    gcd_core(p, q).monic()
}

fn gcd_core(p: &Polynomial, q: &Polynomial) -> Polynomial {
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    if p.is_constant() || q.is_constant() {
        return Polynomial::one();
    }
    if p == q {
        return p.clone();
    }
    let (mp, pp) = strip_monomial_content(p);
    let (mq, qq) = strip_monomial_content(q);
    let shared = Polynomial::term(BigRational::one(), mp.gcd(&mq));
    if pp.is_constant() || qq.is_constant() {
        return shared;
    }
    let pp = pp.primitive();
    let qq = qq.primitive();
    let core = if pp == qq {
        pp
    } else if qq.div_exact(&pp).is_some() {
        pp
    } else if pp.div_exact(&qq).is_some() {
        qq
    } else if let Some(g) = gcd_heuristic(&pp, &qq, 0) {
        g
    } else {
        gcd_prs_rec(&pp, &qq)
    };
    shared.mul(&core).expect("gcd product")
}

/// Shared monomial factor of all terms, and the quotient.
fn strip_monomial_content(p: &Polynomial) -> (Monomial, Polynomial) {
    let mut g: Option<Monomial> = None;
    for (m, _) in p.terms() {
        g = Some(match g {
            None => m.clone(),
            Some(acc) => acc.gcd(m),
        });
        if g.as_ref().map_or(false, |m| m.is_one()) {
            break;
        }
    }
    let g = g.unwrap_or_else(Monomial::one);
    if g.is_one() {
        return (g, p.clone());
    }
    let stripped = Polynomial::from_terms(
        p.terms()
            .map(|(m, c)| (m.div(&g).expect("content divides"), c.clone())),
    );
    (g, stripped)
}

/// Heuristic evaluation gcd: evaluate one variable at a large integer,
/// recurse, reconstruct the variable dependence from balanced base-`xi`
/// digits, and verify by exact division. Inputs are integer-primitive.
/// `None` means the heuristic gave up; the caller falls back to the
/// remainder sequence.
fn gcd_heuristic(p: &Polynomial, q: &Polynomial, depth: usize) -> Option<Polynomial> {
    if depth > 12 {
        return None;
    }
    if p.is_zero() || q.is_zero() || p.is_constant() || q.is_constant() {
        // Constants: primitive inputs have unit content.
        return Some(if p.is_zero() {
            q.clone()
        } else if q.is_zero() {
            p.clone()
        } else {
            Polynomial::one()
        });
    }
    // Evaluate the variable with the smallest degree to keep digit counts low.
    let mut vars = p.vars();
    for v in q.vars() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    let v = *vars
        .iter()
        .min_by_key(|&&v| p.degree_in(v).max(q.degree_in(v)))
        .expect("nonconstant");

    let height = |w: &Polynomial| -> BigInt {
        w.terms()
            .map(|(_, c)| c.numer().magnitude().clone())
            .max()
            .map(BigInt::from)
            .unwrap_or_else(BigInt::one)
    };
    let hmin = height(p).min(height(q));
    let mut xi: BigInt = BigInt::from(2) * hmin + BigInt::from(29);
    for _ in 0..6 {
        // Guard against runaway integer sizes.
        if xi.bits() > 8192 {
            return None;
        }
        let xval = BigRational::from_integer(xi.clone());
        let pe = p.substitute(&|w| (w == v).then(|| xval.clone()));
        let qe = q.substitute(&|w| (w == v).then(|| xval.clone()));
        if !pe.is_zero() && !qe.is_zero() {
            if let Some(ge) = gcd_heuristic(&pe.primitive_int(), &qe.primitive_int(), depth + 1) {
                let ge = match (pe.int_content(), qe.int_content()) {
                    (Some(cp), Some(cq)) => {
                        let c = cp.gcd(&cq);
                        ge.scale(&BigRational::from_integer(c))
                    }
                    _ => ge,
                };
                if let Some(g) = reconstruct_from_digits(&ge, &xi, v) {
                    let g = g.primitive();
                    if !g.is_constant() {
                        if p.div_exact(&g).is_some() && q.div_exact(&g).is_some() {
                            return Some(g);
                        }
                    } else {
                        // The evaluated gcd carries no v-dependence and no
                        // common content: the inputs are coprime.
                        return Some(Polynomial::one());
                    }
                }
            }
        }
        xi = xi * BigInt::from(73794) / BigInt::from(27011);
    }
    None
}

/// Balanced `xi`-adic digit expansion of every coefficient, reassembled as a
/// polynomial in `v`.
fn reconstruct_from_digits(ge: &Polynomial, xi: &BigInt, v: VarId) -> Option<Polynomial> {
    let mut out = Polynomial::zero();
    let mut cur = ge.clone();
    let mut k: u32 = 0;
    let half = xi / BigInt::from(2);
    while !cur.is_zero() {
        if k > 64 {
            return None;
        }
        let mut digit = Polynomial::zero();
        for (m, c) in cur.terms() {
            debug_assert!(c.denom().is_one());
            let mut r = c.numer().mod_floor(xi);
            if r > half {
                r -= xi;
            }
            digit.add_term(m, &BigRational::from_integer(r));
        }
        for (m, c) in digit.terms() {
            out.add_term(
                &m.checked_mul(&Monomial::var_pow(v, k)).ok()?,
                c,
            );
        }
        cur = cur.sub(&digit).scale(&BigRational::from_integer(xi.clone()).recip());
        k += 1;
    }
    Some(out)
}

/// Primitive remainder-sequence gcd, the guaranteed fallback.
fn gcd_prs_rec(p: &Polynomial, q: &Polynomial) -> Polynomial {
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    if p.is_constant() || q.is_constant() {
        return Polynomial::one();
    }
    // Main variable: the lowest-indexed variable present in either input.
    let v = p
        .vars()
        .into_iter()
        .chain(q.vars())
        .min()
        .expect("nonconstant polynomials have variables");

    let (cont_p, pp_p) = split_content(p, v);
    let (cont_q, pp_q) = split_content(q, v);
    let cont = gcd_core(&cont_p, &cont_q);
    let pp = prs_gcd(pp_p, pp_q, v);
    cont.mul(&pp).expect("gcd product")
}

/// Content/primitive-part split with respect to the variable `v`: content is
/// the gcd of the `v`-coefficients.
fn split_content(p: &Polynomial, v: VarId) -> (Polynomial, Polynomial) {
    let coeffs = p.coefficients_in(v);
    let mut cont = Polynomial::zero();
    for c in &coeffs {
        if c.is_zero() {
            continue;
        }
        cont = if cont.is_zero() { c.primitive() } else { gcd_rec(&cont, c) };
        if cont.is_one() {
            break;
        }
    }
    let pp = p.div_exact(&cont).expect("content divides");
    (cont, pp)
}

/// Primitive polynomial remainder sequence in the main variable `v`; inputs
/// are `v`-primitive.
fn prs_gcd(mut f: Polynomial, mut g: Polynomial, v: VarId) -> Polynomial {
    if f.degree_in(v) < g.degree_in(v) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let dg = g.degree_in(v);
        if dg == 0 {
            // A common divisor of the primitive parts that is free of v must
            // divide their v-contents, which are trivial.
            return Polynomial::one();
        }
        let r = pseudo_rem(&f, &g, v);
        if r.is_zero() {
            return snd_primitive(&g, v);
        }
        f = g;
        g = snd_primitive(&r, v);
    }
}

fn snd_primitive(p: &Polynomial, v: VarId) -> Polynomial {
    let (_, pp) = split_content(p, v);
    pp.primitive()
}

/// Pseudo-remainder of `f` by `g` in `v`: `lc(g)^(deg f - deg g + 1) * f = q*g + rem`.
fn pseudo_rem(f: &Polynomial, g: &Polynomial, v: VarId) -> Polynomial {
    let dg = g.degree_in(v);
    let g_coeffs = g.coefficients_in(v);
    let lc_g = g_coeffs[dg as usize].clone();
    let mut rem = f.clone();
    loop {
        let df = rem.degree_in(v);
        if rem.is_zero() || df < dg {
            return rem;
        }
        let r_coeffs = rem.coefficients_in(v);
        let lc_r = r_coeffs[df as usize].clone();
        // rem := lc_g * rem - lc_r * v^(df-dg) * g
        let shifted = g
            .mul_term(&Monomial::var_pow(v, df - dg), &BigRational::one())
            .expect("shift");
        rem = rem
            .mul(&lc_g)
            .expect("mul")
            .sub(&shifted.mul(&lc_r).expect("mul"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vars::VarUniverse;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn setup() -> VarUniverse {
        VarUniverse::full(1)
    }

    fn random_poly(rng: &mut StdRng, vars: &[VarId], max_terms: usize, max_exp: u32) -> Polynomial {
        let nt = rng.gen_range(0..=max_terms);
        let mut p = Polynomial::zero();
        for _ in 0..nt {
            let mut pairs = Vec::new();
            for &v in vars {
                let e = rng.gen_range(0..=max_exp);
                if e > 0 {
                    pairs.push((v, e));
                }
            }
            let c = q_ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4));
            p.add_term(&Monomial::from_pairs(pairs).unwrap(), &c);
        }
        p
    }

    #[test]
    fn difference_of_squares() {
        let u = setup();
        let x = Polynomial::var(u.x(1, 1));
        let lhs = x.add(&Polynomial::one()).mul(&x.sub(&Polynomial::one())).unwrap();
        let rhs = x.pow(2).unwrap().sub(&Polynomial::one());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn additive_identity_and_scalar_cancellation() {
        let u = setup();
        let p = Polynomial::var(u.y(1)).add(&Polynomial::int(3));
        assert_eq!(p.add(&Polynomial::zero()), p);
        let two_diff = Polynomial::var(u.x(2, 2)).sub(&Polynomial::var(u.x(1, 1))).scale(&q(2));
        assert_eq!(
            two_diff.scale(&q_ratio(1, 2)),
            Polynomial::var(u.x(2, 2)).sub(&Polynomial::var(u.x(1, 1)))
        );
    }

    #[test]
    fn ring_axioms_random() {
        let u = setup();
        let vars = [u.x(1, 1), u.y(1), u.r()];
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..1000 {
            let a = random_poly(&mut rng, &vars, 3, 2);
            let b = random_poly(&mut rng, &vars, 3, 2);
            let c = random_poly(&mut rng, &vars, 3, 2);
            // associativity, commutativity, distributivity
            assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            assert_eq!(
                a.mul(&b.add(&c)).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap())
            );
            assert_eq!(a.add(&b), b.add(&a));
            assert_eq!(a.sub(&a), Polynomial::zero());
        }
    }

    #[test]
    fn partial_derivative_examples() {
        let u = setup();
        // d/dx12 (x12*y1) = y1
        let p = Polynomial::var(u.x(1, 2)).mul(&Polynomial::var(u.y(1))).unwrap();
        assert_eq!(p.partial(u.x(1, 2)), Polynomial::var(u.y(1)));
        // d/dr r^2 = 2r
        let r2 = Polynomial::var_pow(u.r(), 2);
        assert_eq!(r2.partial(u.r()), Polynomial::var(u.r()).scale(&q(2)));
        // d/dy1 x11 = 0
        assert_eq!(Polynomial::var(u.x(1, 1)).partial(u.y(1)), Polynomial::zero());
    }

    #[test]
    fn derivation_rule_random() {
        let u = setup();
        let vars = [u.x(1, 1), u.x(1, 2), u.y(2)];
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..300 {
            let p = random_poly(&mut rng, &vars, 3, 2);
            let v = vars[rng.gen_range(0..vars.len())];
            let qq = random_poly(&mut rng, &vars, 3, 2);
            let lhs = p.mul(&qq).unwrap().partial(v);
            let rhs = p.partial(v).mul(&qq).unwrap().add(&p.mul(&qq.partial(v)).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn gcd_examples() {
        let u = setup();
        let x = Polynomial::var(u.x(1, 1));
        // gcd(x^2-1, x-1) = x-1
        let a = x.pow(2).unwrap().sub(&Polynomial::one());
        let b = x.sub(&Polynomial::one());
        assert_eq!(poly_gcd(&a, &b), b.clone());
        // gcd(p, 0) = monic p
        assert_eq!(poly_gcd(&a.scale(&q(3)), &Polynomial::zero()), a);
        // gcd(y1*y2, y2*r) = y2
        let m1 = Polynomial::var(u.y(1)).mul(&Polynomial::var(u.y(2))).unwrap();
        let m2 = Polynomial::var(u.y(2)).mul(&Polynomial::var(u.r())).unwrap();
        assert_eq!(poly_gcd(&m1, &m2), Polynomial::var(u.y(2)));
    }

    #[test]
    fn gcd_divides_and_quotients_coprime() {
        let u = setup();
        let vars = [u.x(1, 1), u.x(2, 2), u.y(1)];
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..60 {
            let g = random_poly(&mut rng, &vars, 2, 1);
            let a = random_poly(&mut rng, &vars, 2, 1);
            let b = random_poly(&mut rng, &vars, 2, 1);
            let p = g.mul(&a).unwrap();
            let qq = g.mul(&b).unwrap();
            if p.is_zero() && qq.is_zero() {
                continue;
            }
            let d = poly_gcd(&p, &qq);
            let pd = p.div_exact(&d);
            let qd = qq.div_exact(&d);
            assert!(pd.is_some() && qd.is_some(), "gcd must divide both inputs");
            if !p.is_zero() && !qq.is_zero() {
                let inner = poly_gcd(&pd.unwrap(), &qd.unwrap());
                assert!(inner.is_one(), "quotients must be coprime, got {:?}", inner);
                // the shared factor is recovered, up to normalization
                if !g.is_constant() {
                    assert!(d.div_exact(&poly_gcd(&g, &Polynomial::zero())).is_some());
                }
            }
        }
    }
}
