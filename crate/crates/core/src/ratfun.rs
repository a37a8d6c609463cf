//! The rational function field over the polynomial ring.
//!
//! Every value is kept reduced: numerator and denominator are coprime and the
//! denominator is monic under the global canonical order, so structural
//! equality coincides with mathematical equality. Reduction after every
//! operation is deliberate; Buchberger over a function field is hopeless
//! without dependable zero tests.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::poly::{poly_gcd, Polynomial};
use crate::vars::VarId;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Polynomial, den: Polynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RationalFunction { num, den: Polynomial::one() };
        }
        let (num, den) = if den.is_one() {
            (num, den)
        } else {
            let g = poly_gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        // Monic denominator pins the representative.
        let lc = den.leading().expect("nonzero denominator").1.clone();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: Polynomial::one(), den: Polynomial::one() }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b*(d/g))
        let g = poly_gcd(&self.den, &other.den);
        let (db, dd) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (
                self.den.div_exact(&g).expect("gcd divides"),
                other.den.div_exact(&g).expect("gcd divides"),
            )
        };
        let num = self.num.mul(&dd)?.add(&other.num.mul(&db)?);
        let den = self.den.mul(&dd)?;
        Ok(Self::reduced(num, den))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        // Cross-cancel before multiplying.
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        Ok(Self::reduced(n1.mul(&n2)?, d1.mul(&d2)?))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        self.mul(&other.recip()?)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Result<Self> {
        self.mul(&Self::from_poly(p.clone()))
    }

    /// Quotient rule.
    pub fn partial(&self, v: VarId) -> Result<Self> {
        if self.num.is_zero() {
            return Ok(Self::zero());
        }
        if self.den.is_one() {
            return Ok(Self::from_poly(self.num.partial(v)));
        }
        let dn = self.num.partial(v);
        let dd = self.den.partial(v);
        let num = dn.mul(&self.den)?.sub(&self.num.mul(&dd)?);
        let den = self.den.mul(&self.den)?;
        Ok(Self::reduced(num, den))
    }

    pub fn substitute(&self, values: &dyn Fn(VarId) -> Option<BigRational>) -> Result<Self> {
        let num = self.num.substitute(values);
        let den = self.den.substitute(values);
        if den.is_zero() {
            return Err(AlgebraError::SingularSubstitution);
        }
        Ok(Self::reduced(num, den))
    }

    pub fn eval_f64(&self, assign: &dyn Fn(VarId) -> f64) -> f64 {
        self.num.eval_f64(assign) / self.den.eval_f64(assign)
    }

    /// Denominator magnitude at a point, for singular-locus screening.
    pub fn den_eval_f64(&self, assign: &dyn Fn(VarId) -> f64) -> f64 {
        self.den.eval_f64(assign)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base)?;
        }
        Ok(out)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{q, q_ratio};
    use crate::vars::VarUniverse;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn u1() -> VarUniverse {
        VarUniverse::full(1)
    }

    #[test]
    fn inverse_cancels() {
        let u = u1();
        // a12 := 2(x11 - x22) as a plain polynomial here
        let a = Polynomial::var(u.x(1, 1)).sub(&Polynomial::var(u.x(2, 2))).scale(&q(2));
        let f = RationalFunction::from_poly(a.clone());
        let inv = f.recip().unwrap();
        assert!(f.mul(&inv).unwrap().is_one());
    }

    #[test]
    fn antisymmetry_sums_to_zero() {
        let u = u1();
        let d1 = Polynomial::var(u.x(1, 1)).sub(&Polynomial::var(u.x(2, 2)));
        let d2 = Polynomial::var(u.x(2, 2)).sub(&Polynomial::var(u.x(1, 1)));
        let f = RationalFunction::new(Polynomial::one(), d1).unwrap();
        let g = RationalFunction::new(Polynomial::one(), d2).unwrap();
        assert!(f.add(&g).unwrap().is_zero());
    }

    #[test]
    fn quotient_cancellation() {
        let u = u1();
        let y1 = Polynomial::var(u.y(1));
        let r = Polynomial::var(u.r());
        let f = RationalFunction::new(y1.clone(), r.clone()).unwrap();
        let g = RationalFunction::new(y1, r.pow(2).unwrap()).unwrap();
        let h = f.div(&g).unwrap();
        assert_eq!(h, RationalFunction::from_poly(Polynomial::var(u.r())));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let f = RationalFunction::one();
        assert_eq!(f.div(&RationalFunction::zero()), Err(AlgebraError::DivisionByZero));
        assert!(RationalFunction::new(Polynomial::one(), Polynomial::zero()).is_err());
    }

    #[test]
    fn canonicalization_is_idempotent_and_matches_cross_multiplication() {
        let u = u1();
        let vars = [u.x(1, 1), u.x(2, 2), u.y(1)];
        let mut rng = StdRng::seed_from_u64(41);
        let mut random_poly = |rng: &mut StdRng| {
            let mut p = Polynomial::zero();
            for _ in 0..rng.gen_range(1..=3) {
                let pairs: Vec<_> = vars
                    .iter()
                    .filter_map(|&v| {
                        let e = rng.gen_range(0..=2u32);
                        (e > 0).then_some((v, e))
                    })
                    .collect();
                p.add_term(
                    &crate::monomial::Monomial::from_pairs(pairs).unwrap(),
                    &q_ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3)),
                );
            }
            p
        };
        for _ in 0..200 {
            let a = random_poly(&mut rng);
            let b = random_poly(&mut rng);
            let c = random_poly(&mut rng);
            if b.is_zero() || c.is_zero() {
                continue;
            }
            // (a*c)/(b*c) reduces to a/b
            let f = RationalFunction::new(a.mul(&c).unwrap(), b.mul(&c).unwrap()).unwrap();
            let g = RationalFunction::new(a.clone(), b.clone()).unwrap();
            assert_eq!(f, g);
            // re-canonicalizing is the identity
            let again = RationalFunction::new(f.num().clone(), f.den().clone()).unwrap();
            assert_eq!(again, f);
            // cross-multiplication equality agrees
            assert_eq!(
                f.num().mul(g.den()).unwrap(),
                g.num().mul(f.den()).unwrap()
            );
        }
    }

    #[test]
    fn field_axioms_random() {
        let u = u1();
        let vars = [u.x(1, 1), u.y(1)];
        let mut rng = StdRng::seed_from_u64(99);
        let mut random_rf = |rng: &mut StdRng| {
            let mut num = Polynomial::zero();
            let mut den = Polynomial::zero();
            for _ in 0..2 {
                let pairs: Vec<_> = vars
                    .iter()
                    .filter_map(|&v| {
                        let e = rng.gen_range(0..=2u32);
                        (e > 0).then_some((v, e))
                    })
                    .collect();
                num.add_term(
                    &crate::monomial::Monomial::from_pairs(pairs.clone()).unwrap(),
                    &q(rng.gen_range(-4..=4)),
                );
                den.add_term(
                    &crate::monomial::Monomial::from_pairs(pairs).unwrap(),
                    &q(rng.gen_range(-4..=4)),
                );
            }
            if den.is_zero() {
                den = Polynomial::one();
            }
            RationalFunction::new(num, den).unwrap()
        };
        for _ in 0..200 {
            let f = random_rf(&mut rng);
            let g = random_rf(&mut rng);
            let h = random_rf(&mut rng);
            assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
            assert_eq!(
                f.mul(&g.add(&h).unwrap()).unwrap(),
                f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
            );
            assert_eq!(
                f.mul(&g).unwrap().mul(&h).unwrap(),
                f.mul(&g.mul(&h).unwrap()).unwrap()
            );
            if !g.is_zero() {
                assert_eq!(f.div(&g).unwrap().mul(&g).unwrap(), f);
            }
        }
    }

    #[test]
    fn partial_derivative_quotient_rule() {
        let u = u1();
        // d/dx11 of 1/(x11 - x22) = -1/(x11-x22)^2
        let den = Polynomial::var(u.x(1, 1)).sub(&Polynomial::var(u.x(2, 2)));
        let f = RationalFunction::new(Polynomial::one(), den.clone()).unwrap();
        let df = f.partial(u.x(1, 1)).unwrap();
        let expected = RationalFunction::new(Polynomial::int(-1), den.pow(2).unwrap()).unwrap();
        assert_eq!(df, expected);
    }
}
