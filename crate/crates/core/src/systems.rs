//! Constructors for the Fisher-Bingham operator families.
//!
//! Five systems, parameterized by the sphere dimension `n`:
//!
//! * `I`   — the full system (`A_pq`, `B`, `C_ij`, `E`);
//! * `It`  — the diagonal restriction, with the off-diagonal `dx_ij` as extra
//!           generators;
//! * `Ip`  — the slack-gauged system `G' = {A'_pq, B, C'_ij, E'}`;
//! * `Itp` — the slack-gauged diagonal system;
//! * `Iph` — the homogenization of `Ip`.
//!
//! Sign conventions differ between the sources of the diagonal `C` operators
//! (`2(x_ii - x_jj)` versus `2(x_jj - x_ii)`); each constructor follows its
//! source verbatim and the test suite asserts how the variants relate rather
//! than silently normalizing.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;
use crate::poly::{q, Polynomial};
use crate::ratfun::RationalFunction;
use crate::vars::{VarId, VarUniverse};
use crate::weyl::{Coef, Mode, Scalar, WeylOperator};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SystemName {
    I,
    ITilde,
    IPrime,
    ITildePrime,
    IPrimeH,
}

impl SystemName {
    pub fn code(self) -> &'static str {
        match self {
            SystemName::I => "I",
            SystemName::ITilde => "It",
            SystemName::IPrime => "Ip",
            SystemName::ITildePrime => "Itp",
            SystemName::IPrimeH => "Iph",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "I" => Some(SystemName::I),
            "It" => Some(SystemName::ITilde),
            "Ip" => Some(SystemName::IPrime),
            "Itp" => Some(SystemName::ITildePrime),
            "Iph" => Some(SystemName::IPrimeH),
            _ => None,
        }
    }
}

/// How slack constants are treated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SlackSpec {
    /// Indeterminates.
    Symbolic,
    /// All zero.
    Zero,
    /// Random generic rationals drawn from the given seed.
    Random(u64),
}

impl SlackSpec {
    pub fn parse(s: &str) -> Option<SlackSpec> {
        if s == "sym" {
            Some(SlackSpec::Symbolic)
        } else if s == "zero" {
            Some(SlackSpec::Zero)
        } else if let Some(rest) = s.strip_prefix("random:") {
            rest.parse::<u64>().ok().map(SlackSpec::Random)
        } else {
            None
        }
    }

    pub fn code(&self) -> String {
        match self {
            SlackSpec::Symbolic => "sym".into(),
            SlackSpec::Zero => "zero".into(),
            SlackSpec::Random(s) => format!("random:{s}"),
        }
    }
}

/// Exact rational values for the slack constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlackValues {
    pub a: BTreeMap<(usize, usize), BigRational>,
    pub b: Vec<BigRational>,
    pub c: Vec<BigRational>,
    pub d: BigRational,
}

impl SlackValues {
    pub fn zero(n: usize) -> Self {
        let m = n + 1;
        let mut a = BTreeMap::new();
        for p in 1..=m {
            for qq in p..=m {
                a.insert((p, qq), BigRational::from_integer(BigInt::from(0)));
            }
        }
        SlackValues {
            a,
            b: vec![BigRational::from_integer(BigInt::from(0)); m],
            c: vec![BigRational::from_integer(BigInt::from(0)); m],
            d: BigRational::from_integer(BigInt::from(0)),
        }
    }

    /// Generic draw: numerator and denominator uniform in `[10^3, 10^4]`.
    /// Values this size emulate generic complex constants well enough that
    /// the rank-equality invariants catch a degenerate draw.
    pub fn random(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = || {
            BigRational::new(
                BigInt::from(rng.gen_range(1000..=10000i64)),
                BigInt::from(rng.gen_range(1000..=10000i64)),
            )
        };
        let m = n + 1;
        let mut a = BTreeMap::new();
        for p in 1..=m {
            for qq in p..=m {
                a.insert((p, qq), draw());
            }
        }
        let b: Vec<_> = (0..m).map(|_| draw()).collect();
        let c: Vec<_> = (0..m).map(|_| draw()).collect();
        let d = draw();
        SlackValues { a, b, c, d }
    }

    fn lookup(&self, u: &VarUniverse, v: VarId) -> Option<BigRational> {
        use crate::vars::VarKind::*;
        match u.kind(v) {
            SlackA { p, q } => self.a.get(&(p, q)).cloned(),
            SlackB { i } => Some(self.b[i - 1].clone()),
            SlackC { i } => Some(self.c[i - 1].clone()),
            SlackD => Some(self.d.clone()),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct NamedOp {
    pub name: String,
    pub op: WeylOperator,
}

#[derive(Debug)]
pub struct SystemDescriptor {
    pub name: SystemName,
    pub n: usize,
    pub slack: SlackSpec,
    pub universe: VarUniverse,
    pub generators: Vec<NamedOp>,
}

impl SystemDescriptor {
    pub fn ops(&self) -> Vec<WeylOperator> {
        self.generators.iter().map(|g| g.op.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&WeylOperator> {
        self.generators.iter().find(|g| g.name == name).map(|g| &g.op)
    }

    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        json!({
            "system": self.name.code(),
            "n": self.n,
            "slack": self.slack.code(),
            "generators": self.generators.iter().map(|g| json!({
                "name": g.name,
                "text": crate::text::format_weyl(&self.universe, &g.op, None),
            })).collect::<Vec<_>>(),
        })
    }
}

fn mono2(a: VarId, b: VarId) -> Monomial {
    Monomial::from_pairs([(a, 1), (b, 1)]).expect("small monomial")
}

fn poly_x(u: &VarUniverse, i: usize, j: usize) -> Polynomial {
    Polynomial::var(u.x(i, j))
}

/// `y_i + b_i c_i` (or plain `y_i` when there is no slack), optionally with
/// `h * y_i` in the homogenized variant.
fn shifted_y(u: &VarUniverse, i: usize, h_on_y: bool) -> Polynomial {
    let ym = if h_on_y {
        mono2(u.y(i), u.h())
    } else {
        Monomial::var(u.y(i))
    };
    let mut p = Polynomial::term(BigRational::one(), ym);
    p.add_term(&mono2(u.slack_b(i), u.slack_c(i)), &BigRational::one());
    p
}

/// The full system: `A_pq = dx_pq - dy_p dy_q`, `B = sum dy_i^2 - r^2`,
/// the `C_ij`, and the Euler-type `E`.
pub fn make_i(n: usize) -> SystemDescriptor {
    let u = VarUniverse::full(n);
    let m = n + 1;
    let mut gens = Vec::new();
    for p in 1..=m {
        for qq in p..=m {
            let mut op = WeylOperator::zero(Mode::D);
            op.add_term(&Monomial::var(u.dx(p, qq)), &Coef::Poly(Polynomial::one()));
            op.add_term(&mono2_or_square(&u, p, qq), &Coef::Poly(Polynomial::int(-1)));
            gens.push(NamedOp { name: format!("A{p}{qq}"), op });
        }
    }
    gens.push(NamedOp { name: "B".into(), op: make_b(&u, Mode::D) });
    for i in 1..=m {
        for j in (i + 1)..=m {
            gens.push(NamedOp { name: format!("C{i}{j}"), op: make_c_full(&u, n, i, j, false, false) });
        }
    }
    gens.push(NamedOp { name: "E".into(), op: make_e_full(&u, n, false, false) });
    SystemDescriptor { name: SystemName::I, n, slack: SlackSpec::Symbolic, universe: u, generators: gens }
}

fn mono2_or_square(u: &VarUniverse, p: usize, qq: usize) -> Monomial {
    if p == qq {
        Monomial::var_pow(u.dy(p), 2)
    } else {
        mono2(u.dy(p), u.dy(qq))
    }
}

pub fn make_b(u: &VarUniverse, mode: Mode) -> WeylOperator {
    let m = u.n() + 1;
    let mut op = WeylOperator::zero(mode);
    let one = Coef::one_for(mode);
    for i in 1..=m {
        op.add_term(&Monomial::var_pow(u.dy(i), 2), &one);
    }
    let r2 = Polynomial::var_pow(u.r(), 2).neg();
    let coef = match mode {
        Mode::R => Coef::Rat(RationalFunction::from_poly(r2)),
        _ => Coef::Poly(r2),
    };
    op.add_term(&Monomial::one(), &coef);
    op
}

/// `C_ij` of the full system:
/// `x_ij dy_i^2 + 2(x_jj - x_ii) dy_i dy_j - x_ij dy_j^2
///  + sum_{s != i,j} (x_sj dy_i dy_s - x_is dy_j dy_s)
///  + Y_j dy_i - Y_i dy_j`
/// where `Y_k` is `y_k` (plain), `y_k + b_k c_k` (slack) or `h y_k + b_k c_k`.
fn make_c_full(u: &VarUniverse, n: usize, i: usize, j: usize, slack: bool, h_on_y: bool) -> WeylOperator {
    let mode = if h_on_y { Mode::Dh } else { Mode::D };
    let m = n + 1;
    let mut op = WeylOperator::zero(mode);
    op.add_term(&Monomial::var_pow(u.dy(i), 2), &Coef::Poly(poly_x(u, i, j)));
    let diff = poly_x(u, j, j).sub(&poly_x(u, i, i)).scale(&q(2));
    op.add_term(&mono2(u.dy(i), u.dy(j)), &Coef::Poly(diff));
    op.add_term(&Monomial::var_pow(u.dy(j), 2), &Coef::Poly(poly_x(u, i, j).neg()));
    for s in 1..=m {
        if s == i || s == j {
            continue;
        }
        op.add_term(&mono2(u.dy(i), u.dy(s)), &Coef::Poly(poly_x(u, s, j)));
        op.add_term(&mono2(u.dy(j), u.dy(s)), &Coef::Poly(poly_x(u, i, s).neg()));
    }
    let (yj, yi) = if slack {
        (shifted_y(u, j, h_on_y), shifted_y(u, i, h_on_y))
    } else {
        (Polynomial::var(u.y(j)), Polynomial::var(u.y(i)))
    };
    op.add_term(&Monomial::var(u.dy(i)), &Coef::Poly(yj));
    op.add_term(&Monomial::var(u.dy(j)), &Coef::Poly(yi.neg()));
    op
}

/// `E` of the full system: `R dr - 2 sum_{i<=j} x_ij dy_i dy_j - sum Y_i dy_i - N`,
/// where in the homogenized variant `R = h r`, `Y_i = h y_i + b_i c_i` and
/// `N = n h^3 + d^3`.
fn make_e_full(u: &VarUniverse, n: usize, slack: bool, h_on_y: bool) -> WeylOperator {
    let mode = if h_on_y { Mode::Dh } else { Mode::D };
    let m = n + 1;
    let mut op = WeylOperator::zero(mode);
    let r_coef = if h_on_y {
        Polynomial::term(BigRational::one(), mono2(u.r(), u.h()))
    } else {
        Polynomial::var(u.r())
    };
    op.add_term(&Monomial::var(u.dr()), &Coef::Poly(r_coef));
    for i in 1..=m {
        for j in i..=m {
            op.add_term(&mono2_or_square(u, i, j), &Coef::Poly(poly_x(u, i, j).scale(&q(-2))));
        }
    }
    for i in 1..=m {
        let yi = if slack {
            shifted_y(u, i, h_on_y)
        } else {
            Polynomial::var(u.y(i))
        };
        op.add_term(&Monomial::var(u.dy(i)), &Coef::Poly(yi.neg()));
    }
    let mut constant = if h_on_y {
        Polynomial::term(q(-(n as i64)), Monomial::var_pow(u.h(), 3))
    } else {
        Polynomial::int(-(n as i64))
    };
    if slack {
        constant.add_term(&Monomial::var_pow(u.slack_d(), 3), &q(-1));
    }
    op.add_term(&Monomial::one(), &Coef::Poly(constant));
    op
}

/// Diagonal system in the full universe: the diagonal generators plus the
/// off-diagonal `dx_ij`.
pub fn make_i_tilde(n: usize) -> SystemDescriptor {
    let u = VarUniverse::full(n);
    let m = n + 1;
    let mut gens = Vec::new();
    for i in 1..=m {
        let mut op = WeylOperator::zero(Mode::D);
        op.add_term(&Monomial::var(u.dx(i, i)), &Coef::Poly(Polynomial::one()));
        op.add_term(&Monomial::var_pow(u.dy(i), 2), &Coef::Poly(Polynomial::int(-1)));
        gens.push(NamedOp { name: format!("At{i}{i}"), op });
    }
    for i in 1..=m {
        for j in (i + 1)..=m {
            gens.push(NamedOp {
                name: format!("At{i}{j}"),
                op: WeylOperator::d_var(Mode::D, u.dx(i, j)),
            });
        }
    }
    gens.push(NamedOp { name: "B".into(), op: make_b(&u, Mode::D) });
    for i in 1..=m {
        for j in (i + 1)..=m {
            gens.push(NamedOp { name: format!("Ct{i}{j}"), op: make_c_diag(&u, i, j, false) });
        }
    }
    gens.push(NamedOp { name: "Et".into(), op: make_e_diag(&u, n, false) });
    SystemDescriptor { name: SystemName::ITilde, n, slack: SlackSpec::Symbolic, universe: u, generators: gens }
}

/// Diagonal `C_ij = 2(x_ii - x_jj) dy_i dy_j + Y_i dy_j - Y_j dy_i`.
pub fn make_c_diag(u: &VarUniverse, i: usize, j: usize, slack: bool) -> WeylOperator {
    let mut op = WeylOperator::zero(Mode::D);
    let diff = poly_x(u, i, i).sub(&poly_x(u, j, j)).scale(&q(2));
    op.add_term(&mono2(u.dy(i), u.dy(j)), &Coef::Poly(diff));
    let (yi, yj) = if slack {
        (shifted_y(u, i, false), shifted_y(u, j, false))
    } else {
        (Polynomial::var(u.y(i)), Polynomial::var(u.y(j)))
    };
    op.add_term(&Monomial::var(u.dy(j)), &Coef::Poly(yi));
    op.add_term(&Monomial::var(u.dy(i)), &Coef::Poly(yj.neg()));
    op
}

/// Diagonal `E = r dr - 2 sum x_ii dy_i^2 - sum Y_i dy_i - n [- d^3]`.
pub fn make_e_diag(u: &VarUniverse, n: usize, slack: bool) -> WeylOperator {
    let m = n + 1;
    let mut op = WeylOperator::zero(Mode::D);
    op.add_term(&Monomial::var(u.dr()), &Coef::Poly(Polynomial::var(u.r())));
    for i in 1..=m {
        op.add_term(
            &Monomial::var_pow(u.dy(i), 2),
            &Coef::Poly(poly_x(u, i, i).scale(&q(-2))),
        );
    }
    for i in 1..=m {
        let yi = if slack {
            shifted_y(u, i, false)
        } else {
            Polynomial::var(u.y(i))
        };
        op.add_term(&Monomial::var(u.dy(i)), &Coef::Poly(yi.neg()));
    }
    let mut constant = Polynomial::int(-(n as i64));
    if slack {
        constant.add_term(&Monomial::var_pow(u.slack_d(), 3), &q(-1));
    }
    op.add_term(&Monomial::one(), &Coef::Poly(constant));
    op
}

/// The diagonal generators `{A_i, B, C_ij, E}` in the diagonal-only universe
/// (the setting of the block-order basis).
pub fn make_i_tilde_diag(n: usize) -> SystemDescriptor {
    let u = VarUniverse::diagonal(n);
    let m = n + 1;
    let mut gens = Vec::new();
    for i in 1..=m {
        let mut op = WeylOperator::zero(Mode::D);
        op.add_term(&Monomial::var(u.dx(i, i)), &Coef::Poly(Polynomial::one()));
        op.add_term(&Monomial::var_pow(u.dy(i), 2), &Coef::Poly(Polynomial::int(-1)));
        gens.push(NamedOp { name: format!("A{i}"), op });
    }
    gens.push(NamedOp { name: "B".into(), op: make_b(&u, Mode::D) });
    for i in 1..=m {
        for j in (i + 1)..=m {
            gens.push(NamedOp { name: format!("C{i}{j}"), op: make_c_diag(&u, i, j, false) });
        }
    }
    gens.push(NamedOp { name: "E".into(), op: make_e_diag(&u, n, false) });
    SystemDescriptor { name: SystemName::ITilde, n, slack: SlackSpec::Symbolic, universe: u, generators: gens }
}

/// `a_ij = 2(x_ii - x_jj)` as a rational function.
pub fn a_coeff(u: &VarUniverse, i: usize, j: usize) -> RationalFunction {
    RationalFunction::from_poly(poly_x(u, i, i).sub(&poly_x(u, j, j)).scale(&q(2)))
}

/// `D_k = dy_k B - sum_{l<k} dy_l a_lk^{-1} C_lk` in the rational diagonal
/// algebra. The construction itself is the membership certificate: the
/// combination is evaluated exactly.
pub fn make_dk(u: &VarUniverse, k: usize) -> Result<WeylOperator> {
    if u.is_diagonal_only() == false {
        return Err(AlgebraError::Invalid("D_k lives in the diagonal universe".into()));
    }
    let b = make_b(u, Mode::R);
    let dk = WeylOperator::d_var(Mode::R, u.dy(k));
    let mut op = dk.mul(&b, u)?;
    for l in 1..(k.min(u.n() + 2)) {
        if l >= k {
            break;
        }
        let c = make_c_diag(u, l, k, false).to_r_mode();
        let scaled = c.scale(&Scalar::F(a_coeff(u, l, k).recip()?))?;
        let term = WeylOperator::d_var(Mode::R, u.dy(l)).mul(&scaled, u)?;
        op = op.sub(&term)?;
    }
    Ok(op)
}

/// The slack-gauged full system `G'`.
pub fn make_i_prime(n: usize, slack: SlackSpec) -> Result<SystemDescriptor> {
    let u = VarUniverse::full_slack(n);
    let m = n + 1;
    let mut gens = Vec::new();
    for p in 1..=m {
        for qq in p..=m {
            let mut op = WeylOperator::zero(Mode::D);
            op.add_term(&Monomial::var(u.dx(p, qq)), &Coef::Poly(poly_x(&u, p, qq)));
            op.add_term(&mono2_or_square(&u, p, qq), &Coef::Poly(poly_x(&u, p, qq).neg()));
            op.add_term(
                &Monomial::one(),
                &Coef::Poly(Polynomial::term(q(-1), Monomial::var_pow(u.slack_a(p, qq), 3))),
            );
            gens.push(NamedOp { name: format!("Ap{p}{qq}"), op });
        }
    }
    gens.push(NamedOp { name: "B".into(), op: make_b(&u, Mode::D) });
    for i in 1..=m {
        for j in (i + 1)..=m {
            gens.push(NamedOp { name: format!("Cp{i}{j}"), op: make_c_full(&u, n, i, j, true, false) });
        }
    }
    gens.push(NamedOp { name: "Ep".into(), op: make_e_full(&u, n, true, false) });
    let desc = SystemDescriptor { name: SystemName::IPrime, n, slack: SlackSpec::Symbolic, universe: u, generators: gens };
    apply_slack(desc, slack)
}

/// The slack-gauged diagonal system.
pub fn make_i_tilde_prime(n: usize, slack: SlackSpec) -> Result<SystemDescriptor> {
    let u = VarUniverse::full_slack(n);
    let m = n + 1;
    let mut gens = Vec::new();
    for i in 1..=m {
        let mut op = WeylOperator::zero(Mode::D);
        op.add_term(&Monomial::var(u.dx(i, i)), &Coef::Poly(poly_x(&u, i, i)));
        op.add_term(&Monomial::var_pow(u.dy(i), 2), &Coef::Poly(poly_x(&u, i, i).neg()));
        op.add_term(
            &Monomial::one(),
            &Coef::Poly(Polynomial::term(q(-1), Monomial::var_pow(u.slack_a(i, i), 3))),
        );
        gens.push(NamedOp { name: format!("Atp{i}{i}"), op });
    }
    for i in 1..=m {
        for j in (i + 1)..=m {
            let mut op = WeylOperator::zero(Mode::D);
            op.add_term(&Monomial::var(u.dx(i, j)), &Coef::Poly(poly_x(&u, i, j)));
            op.add_term(
                &Monomial::one(),
                &Coef::Poly(Polynomial::term(q(-1), Monomial::var_pow(u.slack_a(i, j), 3))),
            );
            gens.push(NamedOp { name: format!("Atp{i}{j}"), op });
        }
    }
    gens.push(NamedOp { name: "B".into(), op: make_b(&u, Mode::D) });
    for i in 1..=m {
        for j in (i + 1)..=m {
            // Sign convention of the gauged source: 2(x_jj - x_ii).
            let mut op = WeylOperator::zero(Mode::D);
            let diff = poly_x(&u, j, j).sub(&poly_x(&u, i, i)).scale(&q(2));
            op.add_term(&mono2(u.dy(i), u.dy(j)), &Coef::Poly(diff));
            op.add_term(&Monomial::var(u.dy(i)), &Coef::Poly(shifted_y(&u, j, false)));
            op.add_term(&Monomial::var(u.dy(j)), &Coef::Poly(shifted_y(&u, i, false).neg()));
            gens.push(NamedOp { name: format!("Ctp{i}{j}"), op });
        }
    }
    gens.push(NamedOp { name: "Etp".into(), op: make_e_diag(&u, n, true) });
    let desc = SystemDescriptor { name: SystemName::ITildePrime, n, slack: SlackSpec::Symbolic, universe: u, generators: gens };
    apply_slack(desc, slack)
}

/// The homogenized gauged system `G'^h` built directly from its listing.
pub fn make_i_prime_h(n: usize) -> SystemDescriptor {
    let u = VarUniverse::full_slack_h(n);
    let m = n + 1;
    let mut gens = Vec::new();
    for p in 1..=m {
        for qq in p..=m {
            let mut op = WeylOperator::zero(Mode::Dh);
            op.add_term(
                &Monomial::var(u.dx(p, qq)),
                &Coef::Poly(Polynomial::term(BigRational::one(), mono2(u.x(p, qq), u.h()))),
            );
            op.add_term(&mono2_or_square(&u, p, qq), &Coef::Poly(poly_x(&u, p, qq).neg()));
            op.add_term(
                &Monomial::one(),
                &Coef::Poly(Polynomial::term(q(-1), Monomial::var_pow(u.slack_a(p, qq), 3))),
            );
            gens.push(NamedOp { name: format!("Aph{p}{qq}"), op });
        }
    }
    gens.push(NamedOp { name: "B".into(), op: make_b(&u, Mode::Dh) });
    for i in 1..=m {
        for j in (i + 1)..=m {
            gens.push(NamedOp { name: format!("Cph{i}{j}"), op: make_c_full(&u, n, i, j, true, true) });
        }
    }
    gens.push(NamedOp { name: "Eph".into(), op: make_e_full(&u, n, true, true) });
    SystemDescriptor { name: SystemName::IPrimeH, n, slack: SlackSpec::Symbolic, universe: u, generators: gens }
}

fn apply_slack(desc: SystemDescriptor, slack: SlackSpec) -> Result<SystemDescriptor> {
    let values = match &slack {
        SlackSpec::Symbolic => return Ok(desc),
        SlackSpec::Zero => SlackValues::zero(desc.n),
        SlackSpec::Random(seed) => SlackValues::random(desc.n, *seed),
    };
    substitute_slack(desc, slack, &values)
}

pub fn substitute_slack(
    desc: SystemDescriptor,
    slack: SlackSpec,
    values: &SlackValues,
) -> Result<SystemDescriptor> {
    let u = &desc.universe;
    let generators = desc
        .generators
        .iter()
        .map(|g| {
            Ok(NamedOp {
                name: g.name.clone(),
                op: g.op.substitute(&|v| values.lookup(u, v))?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SystemDescriptor {
        name: desc.name,
        n: desc.n,
        slack,
        universe: desc.universe,
        generators,
    })
}

pub fn make_system(name: SystemName, n: usize, slack: SlackSpec) -> Result<SystemDescriptor> {
    match name {
        SystemName::I => Ok(make_i(n)),
        SystemName::ITilde => Ok(make_i_tilde(n)),
        SystemName::IPrime => make_i_prime(n, slack),
        SystemName::ITildePrime => make_i_tilde_prime(n, slack),
        SystemName::IPrimeH => Ok(make_i_prime_h(n)),
    }
}
