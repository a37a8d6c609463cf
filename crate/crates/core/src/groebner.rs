//! Left Groebner machinery over the Weyl algebras.
//!
//! Division (normal form) with cofactor tracking, S-pairs, Buchberger
//! completion, the certification check, standard monomials and holonomic
//! rank. Everything works uniformly over the three modes: in `R` the
//! monomials seen by the order are the differential monomials and leading
//! coefficients are invertible rational functions; in `D`/`Dh` the order
//! compares full commutative-image monomials with rational-number
//! coefficients.

use std::collections::VecDeque;

use num_rational::BigRational;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;
use crate::order::{make_default_r_order, TermOrder, WeightVector};
use crate::poly::{poly_gcd, Polynomial};
use crate::ratfun::RationalFunction;
use crate::vars::VarUniverse;
use crate::weyl::{Coef, LeadTerm, Mode, Scalar, WeylOperator};

/// Reduction step budget; exceeding it is an explicit error, never a silent
/// wrong answer.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_steps: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_steps: 1_000_000 }
    }
}

impl Budget {
    pub fn new(max_steps: u64) -> Self {
        Budget { max_steps }
    }

    pub fn counter(&self) -> StepCounter {
        StepCounter { used: 0, limit: self.max_steps }
    }
}

#[derive(Debug)]
pub struct StepCounter {
    used: u64,
    limit: u64,
}

impl StepCounter {
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(AlgebraError::BudgetExceeded { steps: self.used })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

/// Divisor selection policy inside the division loop. Final remainders over
/// a certified basis must not depend on it.
#[derive(Clone, Copy, Debug)]
pub enum Strategy {
    /// First basis element (listing order) whose initial divides.
    First,
    /// Uniformly random among the matching divisors, seeded.
    Seeded(u64),
}

/// A basis element with its cached initial term.
#[derive(Clone, Debug)]
pub struct GbElement {
    pub name: Option<String>,
    pub op: WeylOperator,
    pub lead: LeadTerm,
}

impl GbElement {
    pub fn new(name: Option<String>, op: WeylOperator, order: &TermOrder) -> Result<Self> {
        let lead = op.lead_term(order)?;
        Ok(GbElement { name, op, lead })
    }
}

/// `target = sum multiplier_i * basis_i + remainder`, with the standard
/// no-initial-growth property.
#[derive(Clone, Debug)]
pub struct StandardRepresentation {
    pub target: WeylOperator,
    pub cofactors: Vec<(usize, WeylOperator)>,
    pub remainder: WeylOperator,
    /// Basis indices used, in application order.
    pub chain: Vec<usize>,
    pub steps: u64,
}

impl StandardRepresentation {
    /// Recombines cofactors and remainder; must reproduce the target exactly.
    pub fn recombine(&self, u: &VarUniverse, basis: &[GbElement]) -> Result<WeylOperator> {
        let mut acc = self.remainder.clone();
        for (i, m) in &self.cofactors {
            acc = acc.add(&m.mul(&basis[*i].op, u)?)?;
        }
        Ok(acc)
    }
}

/// Builds the term operator `s * mono` (commutative content of `mono` goes
/// into the coefficient).
fn quotient_term(u: &VarUniverse, mode: Mode, mono: &Monomial, s: &Scalar) -> Result<WeylOperator> {
    let (dpart, cpart) = mono.partition(|v| u.is_differential(v));
    let coef = match (mode, s) {
        (Mode::R, Scalar::F(f)) => {
            debug_assert!(cpart.is_one(), "R-mode quotients are differential monomials");
            Coef::Rat(f.clone())
        }
        (Mode::R, Scalar::Q(c)) => Coef::Rat(RationalFunction::constant(c.clone())),
        (_, Scalar::Q(c)) => Coef::Poly(Polynomial::term(c.clone(), cpart)),
        (_, Scalar::F(_)) => {
            return Err(AlgebraError::ModeMismatch(
                "rational-function scalar in a polynomial mode".into(),
            ))
        }
    };
    Ok(WeylOperator::term(mode, coef, dpart))
}

/// Full tail reduction of `f` by `basis`. The remainder has no monomial
/// divisible by any basis initial; cofactors are collected when `track` is
/// set.
pub fn normal_form(
    u: &VarUniverse,
    f: &WeylOperator,
    basis: &[GbElement],
    order: &TermOrder,
    track: bool,
    counter: &mut StepCounter,
    strategy: Strategy,
) -> Result<StandardRepresentation> {
    let mode = f.mode();
    let mut rng = match strategy {
        Strategy::Seeded(seed) => Some(StdRng::seed_from_u64(seed)),
        Strategy::First => None,
    };
    let mut work = f.clone();
    let mut remainder = WeylOperator::zero(mode);
    let mut cof: Vec<WeylOperator> = if track {
        vec![WeylOperator::zero(mode); basis.len()]
    } else {
        Vec::new()
    };
    let mut chain = Vec::new();
    let start = counter.used();
    while !work.is_zero() {
        counter.tick()?;
        let lt = work.lead_term(order)?;
        if trace_enabled() {
            let sz: usize = work
                .terms()
                .map(|(_, c)| match c {
                    Coef::Poly(p) => p.num_terms(),
                    Coef::Rat(f) => f.num().num_terms() + f.den().num_terms(),
                })
                .sum();
            eprintln!(
                "  nf: step {} terms={} size={} lead={:?}",
                counter.used() - start,
                work.num_terms(),
                sz,
                lt.mono
            );
        }
        let matching: Vec<usize> = basis
            .iter()
            .enumerate()
            .filter(|(_, g)| g.lead.mono.divides(&lt.mono))
            .map(|(i, _)| i)
            .collect();
        if matching.is_empty() {
            // Move the initial term to the remainder and keep reducing the
            // tail.
            let t = lead_as_operator(u, mode, &lt)?;
            remainder = remainder.add(&t)?;
            work = work.sub(&t)?;
            continue;
        }
        let pick = match &mut rng {
            Some(r) => matching[r.gen_range(0..matching.len())],
            None => matching[0],
        };
        let g = &basis[pick];
        let qmono = lt.mono.div(&g.lead.mono).expect("divisor matched");
        let s = lt.coeff.div(&g.lead.coeff)?;
        let mult = quotient_term(u, mode, &qmono, &s)?;
        work = work.sub(&mult.mul(&g.op, u)?)?;
        if track {
            cof[pick] = cof[pick].add(&mult)?;
        }
        chain.push(pick);
    }
    let cofactors = cof
        .into_iter()
        .enumerate()
        .filter(|(_, m)| !m.is_zero())
        .map(|(i, m)| (i, m))
        .collect();
    Ok(StandardRepresentation {
        target: f.clone(),
        cofactors,
        remainder,
        chain,
        steps: counter.used() - start,
    })
}

/// Reconstitutes one initial term as an operator.
fn lead_as_operator(u: &VarUniverse, mode: Mode, lt: &LeadTerm) -> Result<WeylOperator> {
    match (&lt.coeff, mode) {
        (Scalar::F(f), Mode::R) => Ok(WeylOperator::term(mode, Coef::Rat(f.clone()), lt.mono.clone())),
        (Scalar::Q(c), _) => {
            let (dpart, cpart) = lt.mono.partition(|v| u.is_differential(v));
            Ok(WeylOperator::term(
                mode,
                Coef::Poly(Polynomial::term(c.clone(), cpart)),
                dpart,
            ))
        }
        _ => Err(AlgebraError::ModeMismatch("lead term / mode disagreement".into())),
    }
}

/// The S-pair `m_f (f / lc_f) - m_g (g / lc_g)` with monomial left
/// multipliers taken from the lcm of the initials.
pub fn s_pair(u: &VarUniverse, f: &GbElement, g: &GbElement, _order: &TermOrder) -> Result<WeylOperator> {
    let mode = f.op.mode();
    let l = f.lead.mono.lcm(&g.lead.mono)?;
    let qf = l.div(&f.lead.mono).expect("lcm divisible");
    let qg = l.div(&g.lead.mono).expect("lcm divisible");
    let f_monic = f.op.scale(&f.lead.coeff.recip()?)?;
    let g_monic = g.op.scale(&g.lead.coeff.recip()?)?;
    let one = Scalar::one_for(mode);
    let a = quotient_term(u, mode, &qf, &one)?.mul(&f_monic, u)?;
    let b = quotient_term(u, mode, &qg, &one)?.mul(&g_monic, u)?;
    a.sub(&b)
}

#[derive(Clone, Debug, Serialize)]
pub struct PairReport {
    pub i: usize,
    pub j: usize,
    /// Number of division steps spent on this pair.
    pub steps: u64,
    /// Reducer indices in application order.
    pub chain: Vec<usize>,
    pub reduced_to_zero: bool,
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub ok: bool,
    pub pairs: Vec<PairReport>,
    /// `(i, j, nonzero remainder)` for the first failing pair.
    pub witness: Option<(usize, usize, WeylOperator)>,
}

/// Honest Buchberger criterion: every S-pair is fully reduced against the
/// generator set, no shortcuts.
pub fn is_groebner(
    u: &VarUniverse,
    gens: &[GbElement],
    order: &TermOrder,
    budget: &Budget,
) -> Result<CriterionReport> {
    let mut counter = budget.counter();
    let mut pairs = Vec::new();
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            let s = s_pair(u, &gens[i], &gens[j], order)?;
            let rep = if s.is_zero() {
                StandardRepresentation {
                    target: s,
                    cofactors: Vec::new(),
                    remainder: WeylOperator::zero(gens[i].op.mode()),
                    chain: Vec::new(),
                    steps: 0,
                }
            } else {
                normal_form(u, &s, gens, order, false, &mut counter, Strategy::First)?
            };
            let zero = rep.remainder.is_zero();
            pairs.push(PairReport {
                i,
                j,
                steps: rep.steps,
                chain: rep.chain.clone(),
                reduced_to_zero: zero,
            });
            if !zero {
                return Ok(CriterionReport {
                    ok: false,
                    pairs,
                    witness: Some((i, j, rep.remainder)),
                });
            }
        }
    }
    Ok(CriterionReport { ok: true, pairs, witness: None })
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub elements: Vec<GbElement>,
    pub order: TermOrder,
    pub mode: Mode,
    pub certified: bool,
}

impl GroebnerBasis {
    pub fn initial_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|e| e.lead.mono.clone()).collect()
    }

    pub fn reduce(
        &self,
        u: &VarUniverse,
        f: &WeylOperator,
        counter: &mut StepCounter,
    ) -> Result<WeylOperator> {
        Ok(normal_form(u, f, &self.elements, &self.order, false, counter, Strategy::First)?.remainder)
    }

    /// Ideal membership through the certified basis.
    pub fn contains(&self, u: &VarUniverse, f: &WeylOperator, budget: &Budget) -> Result<bool> {
        if !self.certified {
            return Err(AlgebraError::NotCertified);
        }
        let mut counter = budget.counter();
        Ok(self.reduce(u, f, &mut counter)?.is_zero())
    }

    /// Wraps an externally certified generator set (used when the
    /// certificate comes from a different route, e.g. through
    /// homogenization).
    pub fn certified_external(elements: Vec<GbElement>, order: TermOrder, mode: Mode) -> Self {
        GroebnerBasis { elements, order, mode, certified: true }
    }
}

/// Normalizes a new basis element to a small canonical associate: clears
/// denominators, strips polynomial and rational content, and fixes the sign
/// of the initial coefficient.
fn normalize_element(u: &VarUniverse, op: &WeylOperator, order: &TermOrder) -> Result<WeylOperator> {
    let _ = order;
    let _ = u;
    match op.mode() {
        Mode::R => {
            let (cleared, _) = op.to_d_mode()?;
            let mut content = Polynomial::zero();
            for (_, c) in cleared.terms() {
                let p = c.expect_poly();
                content = if content.is_zero() {
                    p.primitive()
                } else {
                    poly_gcd(&content, p)
                };
                if content.is_one() {
                    break;
                }
            }
            let mut out = cleared.to_r_mode();
            if !content.is_one() && !content.is_zero() {
                out = out.scale(&Scalar::F(RationalFunction::from_poly(content).recip()?))?;
            }
            // Rational content and sign.
            let mut num_content: Option<BigRational> = None;
            for (_, c) in out.terms() {
                let f = c.expect_rat();
                let cc = f.num().content();
                num_content = Some(match num_content {
                    None => cc,
                    Some(acc) => gcd_rational(&acc, &cc),
                });
            }
            if let Some(cc) = num_content {
                if !cc.is_one() {
                    out = out.scale_q(&cc.recip());
                }
            }
            Ok(out)
        }
        Mode::D | Mode::Dh => {
            let mut content: Option<BigRational> = None;
            for (_, c) in op.terms() {
                let cc = c.expect_poly().content();
                content = Some(match content {
                    None => cc,
                    Some(acc) => gcd_rational(&acc, &cc),
                });
            }
            match content {
                Some(c) if !c.is_one() => Ok(op.scale_q(&c.recip())),
                _ => Ok(op.clone()),
            }
        }
    }
}

fn gcd_rational(a: &BigRational, b: &BigRational) -> BigRational {
    use num_integer::Integer;
    // gcd on Q normalized to be positive; sign conventions come from the
    // leading coefficient handled by the caller via Polynomial::content.
    let num = a.numer().gcd(b.numer());
    let den = a.denom().lcm(b.denom());
    BigRational::new(num, den)
}

fn trace_enabled() -> bool {
    static ON: std::sync::OnceLock<bool> = std::sync::OnceLock::new();
    *ON.get_or_init(|| std::env::var("FBRANK_TRACE").map_or(false, |v| v != "0"))
}

/// Buchberger completion. Pair selection is degree-ascending on the lcm in
/// homogenized mode and first-in-first-out otherwise; pairs with coprime
/// initials are discharged through the commutator instead of the S-pair.
pub fn buchberger(
    u: &VarUniverse,
    gens: &[WeylOperator],
    order: &TermOrder,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    let mode = gens
        .iter()
        .find(|g| !g.is_zero())
        .map(|g| g.mode())
        .ok_or_else(|| AlgebraError::Invalid("empty generating set".into()))?;
    let mut counter = budget.counter();
    let mut elems: Vec<GbElement> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let ng = normalize_element(u, g, order)?;
        elems.push(GbElement::new(None, ng, order)?);
    }

    // Pair queue. In Dh-mode process by ascending lcm total degree so the
    // computation is sound degree by degree; elsewhere FIFO.
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for i in 0..elems.len() {
        for j in (i + 1)..elems.len() {
            queue.push_back((i, j));
        }
    }
    let homogeneous = mode == Mode::Dh;
    let pick_next = |queue: &mut VecDeque<(usize, usize)>, elems: &[GbElement]| -> Option<(usize, usize)> {
        if queue.is_empty() {
            return None;
        }
        if !homogeneous {
            return queue.pop_front();
        }
        let mut best = 0;
        let mut best_deg = u64::MAX;
        for (k, &(i, j)) in queue.iter().enumerate() {
            let deg = elems[i]
                .lead
                .mono
                .lcm(&elems[j].lead.mono)
                .map(|l| l.total_degree())
                .unwrap_or(u64::MAX);
            if deg < best_deg {
                best_deg = deg;
                best = k;
            }
        }
        queue.remove(best)
    };

    while let Some((i, j)) = pick_next(&mut queue, &elems) {
        counter.tick()?;
        let started = std::time::Instant::now();
        let (li, lj) = (&elems[i].lead.mono, &elems[j].lead.mono);
        let coprime = li.gcd(lj).is_one();
        let candidate = if coprime && mode != Mode::D {
            // Coprime initials: the S-pair reduces to the commutator by the
            // pair itself, so it suffices to reduce the commutator.
            let c = elems[i].op.commutator(&elems[j].op, u)?;
            if c.is_zero() {
                if trace_enabled() {
                    eprintln!("gb: pair ({i},{j}) coprime, commutator zero, {:?}", started.elapsed());
                }
                continue;
            }
            c
        } else {
            s_pair(u, &elems[i], &elems[j], order)?
        };
        if candidate.is_zero() {
            continue;
        }
        let rep = normal_form(u, &candidate, &elems, order, false, &mut counter, Strategy::First)?;
        if trace_enabled() {
            eprintln!(
                "gb: pair ({i},{j}) coprime={coprime} steps={} zero={} {:?}",
                rep.steps,
                rep.remainder.is_zero(),
                started.elapsed()
            );
        }
        if rep.remainder.is_zero() {
            continue;
        }
        let new_op = normalize_element(u, &rep.remainder, order)?;
        let new_elem = GbElement::new(None, new_op, order)?;
        if trace_enabled() {
            eprintln!(
                "gb: add #{} in={} terms={}",
                elems.len(),
                crate::text::format_monomial(u, &new_elem.lead.mono),
                new_elem.op.num_terms()
            );
        }
        let k = elems.len();
        elems.push(new_elem);
        for t in 0..k {
            queue.push_back((t, k));
        }
    }

    // Minimalization: drop elements whose initial is divisible by another
    // retained initial.
    let mut keep = vec![true; elems.len()];
    for i in 0..elems.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..elems.len() {
            if i == j || !keep[j] {
                continue;
            }
            if elems[j].lead.mono.divides(&elems[i].lead.mono)
                && !(elems[i].lead.mono == elems[j].lead.mono && i < j)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let elements: Vec<GbElement> = elems
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect();

    Ok(GroebnerBasis {
        elements,
        order: order.clone(),
        mode,
        certified: true,
    })
}

/// Both-ways membership of two generating sets.
pub fn ideals_equal(
    u: &VarUniverse,
    a: &[WeylOperator],
    b: &[WeylOperator],
    order: &TermOrder,
    budget: &Budget,
) -> Result<bool> {
    let gb_a = buchberger(u, a, order, budget)?;
    let gb_b = buchberger(u, b, order, budget)?;
    for g in a {
        if !gb_b.contains(u, g, budget)? {
            return Ok(false);
        }
    }
    for g in b {
        if !gb_a.contains(u, g, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Monomials under the staircase of a certified `R`-mode basis. Fails with
/// `InfiniteStaircase` when some differential direction is unbounded.
pub fn standard_monomials(u: &VarUniverse, basis: &GroebnerBasis) -> Result<Vec<Monomial>> {
    if !basis.certified {
        return Err(AlgebraError::NotCertified);
    }
    if basis.mode != Mode::R {
        return Err(AlgebraError::ModeMismatch(
            "standard monomials are computed in R-mode".into(),
        ));
    }
    let leads = basis.initial_monomials();
    let dvars = u.differential_vars();
    // Finiteness: every differential variable needs a pure-power initial.
    let mut caps = Vec::with_capacity(dvars.len());
    for &v in &dvars {
        let cap = leads
            .iter()
            .filter(|m| m.num_vars() == 1 && m.exp(v) > 0)
            .map(|m| m.exp(v))
            .min();
        match cap {
            Some(c) => caps.push(c),
            None => return Err(AlgebraError::InfiniteStaircase),
        }
    }
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Monomial)> = vec![(0, Monomial::one())];
    while let Some((idx, m)) = stack.pop() {
        if idx == dvars.len() {
            if !leads.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            continue;
        }
        for e in 0..caps[idx] {
            let next = m.checked_mul(&Monomial::var_pow(dvars[idx], e))?;
            stack.push((idx + 1, next));
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Rank {
    Finite(usize),
    Infinite,
}

/// Holonomic rank: the number of standard monomials of the left ideal in the
/// rational Weyl algebra, computed from scratch under the default block
/// order.
pub fn holonomic_rank(u: &VarUniverse, gens: &[WeylOperator], budget: &Budget) -> Result<Rank> {
    let r_gens: Vec<WeylOperator> = gens
        .iter()
        .map(|g| match g.mode() {
            Mode::R => g.clone(),
            _ => g.to_r_mode(),
        })
        .collect();
    let order = make_default_r_order(u);
    let gb = buchberger(u, &r_gens, &order, budget)?;
    match standard_monomials(u, &gb) {
        Ok(ms) => Ok(Rank::Finite(ms.len())),
        Err(AlgebraError::InfiniteStaircase) => Ok(Rank::Infinite),
        Err(e) => Err(e),
    }
}

/// Initial forms of a certified basis under a weight vector: the generators
/// of the weight-initial ideal. A `Dh` basis is dehomogenized first.
pub fn initial_ideal_weight(
    u: &VarUniverse,
    basis: &GroebnerBasis,
    w: &WeightVector,
) -> Result<Vec<WeylOperator>> {
    if !basis.certified {
        return Err(AlgebraError::NotCertified);
    }
    basis
        .elements
        .iter()
        .map(|e| {
            let g = if e.op.mode() == Mode::Dh {
                e.op.dehomogenize(u)?
            } else {
                e.op.clone()
            };
            g.initial_form_weight(u, w)
        })
        .collect()
}

/// Groebner data as a JSON document: generators in text form, the order
/// descriptor, the pair ledger, standard monomials and rank where available.
pub fn basis_to_json(
    u: &VarUniverse,
    basis: &GroebnerBasis,
    criterion: Option<&CriterionReport>,
) -> serde_json::Value {
    use serde_json::json;
    let gens: Vec<serde_json::Value> = basis
        .elements
        .iter()
        .map(|e| {
            json!({
                "name": e.name,
                "text": crate::text::format_weyl(u, &e.op, Some(&basis.order)),
                "initial": crate::text::format_monomial(u, &e.lead.mono),
            })
        })
        .collect();
    let std_monos = standard_monomials(u, basis)
        .ok()
        .map(|ms| ms.iter().map(|m| crate::text::format_monomial(u, m)).collect::<Vec<_>>());
    json!({
        "mode": basis.mode.label(),
        "certified": basis.certified,
        "order": basis.order.describe(u),
        "generators": gens,
        "standard_monomials": std_monos,
        "rank": std_monos.as_ref().map(|ms| ms.len()),
        "spair_ledger": criterion.map(|c| {
            c.pairs
                .iter()
                .map(|p| {
                    json!({
                        "pair": [p.i, p.j],
                        "steps": p.steps,
                        "chain": p.chain,
                        "result": if p.reduced_to_zero { "zero" } else { "nonzero" },
                    })
                })
                .collect::<Vec<_>>()
        }),
    })
}
